//! The symplectic-action character κ on the center, two ways.
//!
//! For a quantizable orbit datum η the stabilizer carries a character
//! with derivative 2πiη, and the symplectic action of the loop generated
//! by a curve ending at a central element `g₁` is the value of that
//! character at `g₁`. Algebraically this is the lattice pairing of η
//! with the class of `g₁` in `P∨/Q∨`, which [`kappa_on_center`] tabulates
//! over the whole center. When the character is injective on the center,
//! the number of elements of `π₁(Ham(O_η))` is at least the center order;
//! when it is not, the image size is still a valid (derived) lower bound,
//! and the two cases are labelled separately.
//!
//! For regular η there is an independent route through the Borel–Weil
//! description: κ equals the central character of the dual of the
//! irreducible representation with highest weight attached to η, divided
//! by its dimension. [`kappa_via_weyl_oracle`] computes that value from a
//! coweight representative and an exact rational solve against the Cartan
//! matrix, sharing none of the diagonalized-pairing arithmetic, and the
//! two routes are asserted equal in the acceptance suite. The classical
//! Weyl formulas ([`weyl_dimension`], [`weyl_character_at_torus`]) back
//! the oracle numerically at generic torus points.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_complex::Complex64;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::center::{CenterElement, CenterGroup, RootOfUnity};
use crate::error::{Error, Result};
use crate::orbit::OrbitDatum;
use crate::root_system::{RootSystem, Weight};

/// Where a reported π₁ lower bound comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundProvenance {
    /// κ is injective on the center: the bound is the center order.
    PaperTheorem,
    /// κ is not injective; the bound is the size of its image.
    DerivedImageSize,
    /// κ is identically 1 on a nontrivial center.
    Trivial,
}

impl std::fmt::Display for BoundProvenance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            BoundProvenance::PaperTheorem => "paper_theorem",
            BoundProvenance::DerivedImageSize => "derived_image_size",
            BoundProvenance::Trivial => "trivial",
        })
    }
}

/// κ tabulated over the center, with the induced π₁ lower bound.
#[derive(Debug, Clone)]
pub struct KappaTable {
    pub entries: Vec<(CenterElement, RootOfUnity)>,
    pub center_order: u64,
    pub image_size: usize,
    pub injective: bool,
    pub pi1_lower_bound: u64,
    pub provenance: BoundProvenance,
}

impl KappaTable {
    pub fn value(&self, z: &CenterElement) -> Option<&RootOfUnity> {
        self.entries.iter().find(|(e, _)| e == z).map(|(_, v)| v)
    }
}

/// Evaluates κ at every central element for a quantizable orbit datum.
pub fn kappa_on_center(od: &OrbitDatum<'_>, cg: &CenterGroup) -> Result<KappaTable> {
    let eta = od.integral_eta()?;
    let entries: Vec<(CenterElement, RootOfUnity)> = cg
        .elements()
        .into_iter()
        .map(|z| {
            let value = cg.pairing(&eta, &z);
            (z, value)
        })
        .collect();
    let image: std::collections::HashSet<RootOfUnity> = entries.iter().map(|(_, v)| *v).collect();
    let image_size = image.len();
    let injective = image_size as u64 == cg.order();
    debug_assert_eq!(cg.order() % image_size as u64, 0);
    let provenance = if injective {
        BoundProvenance::PaperTheorem
    } else if image_size > 1 {
        BoundProvenance::DerivedImageSize
    } else {
        BoundProvenance::Trivial
    };
    Ok(KappaTable {
        entries,
        center_order: cg.order(),
        image_size,
        injective,
        pi1_lower_bound: image_size as u64,
        provenance,
    })
}

/// Weyl dimension formula: `Π_{α>0} ⟨hw+ρ, α̌⟩ / ⟨ρ, α̌⟩`, exactly.
pub fn weyl_dimension(rs: &RootSystem, hw: &Weight) -> Result<BigUint> {
    if hw.coords().len() != rs.rank() {
        return Err(Error::RankMismatch {
            expected: rs.rank(),
            got: hw.coords().len(),
        });
    }
    if !hw.is_dominant() {
        return Err(Error::NonDominantWeight(hw.to_string()));
    }
    let rho = rs.rho();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for p in rs.positive_roots() {
        let shifted: i64 = hw
            .coords()
            .iter()
            .zip(p.coroot.coords())
            .map(|(a, b)| (a + 1) * b)
            .sum();
        num *= BigInt::from(shifted);
        den *= BigInt::from(rs.pair_integral(&rho, &p.coroot));
    }
    let (q, r) = num_integer::Integer::div_rem(&num, &den);
    debug_assert!(r.is_zero(), "Weyl dimension is not integral");
    debug_assert!(q.is_positive());
    Ok(q.to_biguint().expect("dimension is positive"))
}

/// Default floor below which the Weyl denominator is treated as singular.
pub const DEFAULT_TORUS_FLOOR: f64 = 1e-12;

/// Weyl character formula at a torus point.
///
/// The point is `t = exp(2πi Σ_j y_j α̌_j)`, given by its coroot
/// coordinates `y`, so a weight μ evaluates as `e^{2πi Σ_j y_j μ_j}`
/// with μ in fundamental-weight coordinates. Both alternating sums run
/// over the signed Weyl orbit of the ρ-shifted weight. Near-singular
/// denominators (central points in particular) are reported as errors;
/// use [`kappa_via_weyl_oracle`] for central values.
pub fn weyl_character_at_torus(
    rs: &RootSystem,
    hw: &Weight,
    y: &[f64],
    floor: f64,
) -> Result<Complex64> {
    if hw.coords().len() != rs.rank() || y.len() != rs.rank() {
        return Err(Error::RankMismatch {
            expected: rs.rank(),
            got: if hw.coords().len() != rs.rank() {
                hw.coords().len()
            } else {
                y.len()
            },
        });
    }
    if !hw.is_dominant() {
        return Err(Error::NonDominantWeight(hw.to_string()));
    }
    let rho = rs.rho();
    let shifted = Weight(
        hw.coords()
            .iter()
            .zip(rho.coords())
            .map(|(a, b)| a + b)
            .collect(),
    );
    let numerator = alternating_sum(rs, &shifted, y);
    let denominator = alternating_sum(rs, &rho, y);
    if denominator.norm() < floor {
        return Err(Error::NearSingularTorusPoint {
            magnitude: denominator.norm(),
            floor,
        });
    }
    Ok(numerator / denominator)
}

/// `Σ_w sgn(w) e^{w λ}(t)` for a dominant regular λ, via the signed orbit.
fn alternating_sum(rs: &RootSystem, lambda: &Weight, y: &[f64]) -> Complex64 {
    signed_weyl_orbit(rs, lambda)
        .into_iter()
        .map(|(mu, sign)| {
            let angle: f64 = 2.0
                * std::f64::consts::PI
                * mu.coords()
                    .iter()
                    .zip(y)
                    .map(|(&c, &yj)| c as f64 * yj)
                    .sum::<f64>();
            Complex64::new(angle.cos(), angle.sin()) * sign as f64
        })
        .sum()
}

/// Weyl orbit of a regular weight with the sign of the group element
/// attached to each point. The orbit of a regular weight is free, so the
/// sign is the parity of the reflection word and is independent of the
/// path; revisits are checked for consistency.
fn signed_weyl_orbit(rs: &RootSystem, w: &Weight) -> Vec<(Weight, i32)> {
    let mut signs: HashMap<Weight, i32> = HashMap::new();
    let mut queue = std::collections::VecDeque::new();
    signs.insert(w.clone(), 1);
    queue.push_back(w.clone());
    while let Some(v) = queue.pop_front() {
        let s = signs[&v];
        for i in 0..rs.rank() {
            let r = rs.simple_reflection(i, &v);
            debug_assert_ne!(r, v, "signed orbit requires a regular weight");
            match signs.get(&r) {
                Some(&existing) => debug_assert_eq!(existing, -s, "orbit parity conflict"),
                None => {
                    signs.insert(r.clone(), -s);
                    queue.push_back(r);
                }
            }
        }
    }
    let mut orbit: Vec<(Weight, i32)> = signs.into_iter().collect();
    orbit.sort();
    orbit
}

/// The representation behind the oracle route: the dominant Weyl
/// representative of η together with its dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrrepData {
    pub highest_weight: Weight,
    pub dimension: BigUint,
}

/// Representation datum of a regular quantizable orbit: the dominant
/// representative of η with its Weyl-formula dimension.
pub fn irrep_data(od: &OrbitDatum<'_>) -> Result<IrrepData> {
    let eta = od.integral_eta()?;
    let rs = od.root_system();
    if let Some(pair) = rs
        .roots()
        .iter()
        .find(|p| rs.pair_integral(&eta, &p.coroot) == 0)
    {
        return Err(Error::NotRegular {
            root: pair.root.to_string(),
        });
    }
    let highest_weight = rs.dominant_representative(&eta);
    let dimension = weyl_dimension(rs, &highest_weight)?;
    Ok(IrrepData {
        highest_weight,
        dimension,
    })
}

/// κ at a single central element through the Borel–Weil route.
///
/// Restricted to regular quantizable η. Every weight of the irreducible
/// representation with highest weight `hw` (the dominant representative
/// of η) is congruent to `hw` modulo the root lattice, so the character
/// at a central element `z = exp(2πi x)` is `e^{2πi⟨hw, x⟩} · dim`;
/// passing to the dual representation and dividing by the dimension
/// leaves the phase `-⟨hw, x⟩`. The pairing is evaluated from an explicit
/// coweight representative and an exact solve against the Cartan matrix,
/// independently of the diagonalized pairing used by [`kappa_on_center`].
pub fn kappa_via_weyl_oracle(
    od: &OrbitDatum<'_>,
    cg: &CenterGroup,
    z: &CenterElement,
) -> Result<RootOfUnity> {
    let rep = irrep_data(od)?;
    let rs = od.root_system();
    let x = cg.coweight_representative(z);
    let b: Vec<Ratio<i64>> = rep
        .highest_weight
        .coords()
        .iter()
        .map(|&c| Ratio::from_integer(c))
        .collect();
    let hw_in_root_coords = rs.cartan_matrix().inner().solve(&b)?;
    let raw: Ratio<i64> = hw_in_root_coords
        .iter()
        .zip(&x)
        .map(|(r, &xi)| r * Ratio::from_integer(xi))
        .sum();
    Ok(RootOfUnity::from_phase(-raw))
}
