//! Exact invariants of coadjoint orbits of compact simply connected
//! semisimple Lie groups.
//!
//! Given a Cartan type and a weight η, the crate decides whether the
//! coadjoint orbit through η is quantizable, evaluates the character of
//! the stabilizer attached to η on the center of the group as exact roots
//! of unity, and turns injectivity of that character into a lower bound on
//! the number of elements of the fundamental group of the Hamiltonian
//! symplectomorphism group of the orbit. A numeric module verifies the
//! defining action integral on the rank-one orbit (the two-sphere) by
//! quadrature.
//!
//! All lattice arithmetic is exact: weights are integer vectors in the
//! fundamental-weight basis, center elements live in the Smith normal form
//! of the Cartan matrix, and character values are rational phases mod 1.
//! Floating point appears only in the Weyl-character evaluation at generic
//! torus points and in the sphere quadrature.

pub mod center;
pub mod character;
pub mod error;
pub mod matrix;
pub mod orbit;
pub mod root_system;
pub mod sphere;
pub mod sun;

mod snf;

pub use center::{compute_center, CenterElement, CenterGroup, RootOfUnity};
pub use character::{BoundProvenance, IrrepData, KappaTable};
pub use error::{Error, Result};
pub use orbit::{OrbitDatum, StabilizerReport};
pub use root_system::{CartanType, RationalWeight, Root, RootSystem, Series, Weight};
pub use sphere::{RotationLoop, SphereOrbit};
pub use sun::SunOrbitSpec;
