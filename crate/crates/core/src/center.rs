//! The center of the simply connected group as a lattice quotient.
//!
//! For a simply connected semisimple group the center is canonically the
//! coweight lattice modulo the coroot lattice, `Z(G) ≅ P∨/Q∨`. In the
//! bases fixed by [`crate::root_system`] the coroot lattice sits inside
//! the coweight lattice as the column span of the *transposed* Cartan
//! matrix, so a Smith normal form `U · Aᵀ · V = D` diagonalizes the
//! quotient: center elements are tuples modulo the elementary divisors.
//!
//! The same decomposition evaluates the perfect pairing
//! `(P/Q) × (P∨/Q∨) → ℚ/ℤ` without ever inverting the Cartan matrix:
//! writing `c = U·x mod D` for the class of a coweight `x` and
//! `c* = Vᵀ·w mod D` for the class of a weight `w`,
//!
//! ```text
//! ⟨w, x⟩ ≡ Σ_i c*_i · c_i / d_i   (mod 1).
//! ```
//!
//! The sign with which a central element acts through a character is a
//! convention. We pin it so that on `SU(n)` the character of the weight
//! attached to a block spec `(q, m)` takes the value `z^{q·m}` at the
//! central element `z`; the `SU(2)` Fubini–Study case (κ(-I) = -1) is the
//! degenerate instance of the same calibration and both are enforced by
//! tests. Concretely the pairing below carries a global minus sign.

use std::fmt;

use num_complex::Complex64;
use num_rational::Ratio;
use num_traits::Zero;

use crate::root_system::{RootSystem, Weight};
use crate::snf::{smith_normal_form, Snf};

/// An exact root of unity `e^{2πi·r}`, stored as the reduced phase
/// `r ∈ [0, 1)`. Multiplication of values is addition of phases mod 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootOfUnity {
    phase: Ratio<i64>,
}

impl RootOfUnity {
    /// Reduces an arbitrary rational phase into `[0, 1)`.
    pub fn from_phase(phase: Ratio<i64>) -> Self {
        let floor = phase.floor().to_integer();
        RootOfUnity {
            phase: phase - Ratio::from_integer(floor),
        }
    }

    pub fn one() -> Self {
        RootOfUnity {
            phase: Ratio::zero(),
        }
    }

    pub fn phase(&self) -> Ratio<i64> {
        self.phase
    }

    pub fn numer(&self) -> i64 {
        *self.phase.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.phase.denom()
    }

    pub fn is_one(&self) -> bool {
        self.phase.is_zero()
    }

    /// Multiplicative order: the denominator of the reduced phase.
    pub fn order(&self) -> u64 {
        *self.phase.denom() as u64
    }

    /// Group law: `(e^{2πi·r})(e^{2πi·s}) = e^{2πi(r+s)}`.
    pub fn mul(&self, other: &RootOfUnity) -> RootOfUnity {
        RootOfUnity::from_phase(self.phase + other.phase)
    }

    /// `k`-th power, exact.
    pub fn pow(&self, k: i64) -> RootOfUnity {
        RootOfUnity::from_phase(self.phase * Ratio::from_integer(k))
    }

    pub fn to_complex(&self) -> Complex64 {
        let angle = 2.0 * std::f64::consts::PI * self.phase_f64();
        Complex64::new(angle.cos(), angle.sin())
    }

    pub fn phase_f64(&self) -> f64 {
        *self.phase.numer() as f64 / *self.phase.denom() as f64
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.numer(), self.denom()) {
            (0, _) => write!(f, "1"),
            (1, 2) => write!(f, "-1"),
            (1, 4) => write!(f, "i"),
            (3, 4) => write!(f, "-i"),
            (n, d) => write!(f, "exp(2πi·{n}/{d})"),
        }
    }
}

/// An element of `Z(G)`: coset coordinates modulo the elementary divisors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CenterElement {
    coords: Vec<i64>,
}

impl CenterElement {
    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_identity(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for CenterElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// The center `Z(G) ≅ P∨/Q∨` with the transforms needed to map weights
/// and coweights into the diagonalized quotient.
#[derive(Debug, Clone)]
pub struct CenterGroup {
    rank: usize,
    /// Full SNF diagonal of `Aᵀ`, including the trivial 1s.
    diagonal: Vec<i64>,
    /// Positions of the diagonal entries > 1.
    nontrivial: Vec<usize>,
    snf: Snf,
    order: u64,
}

/// Quotient structure of `P∨/Q∨` for the root system, via Smith normal
/// form of the transposed Cartan matrix.
pub fn compute_center(rs: &RootSystem) -> CenterGroup {
    let snf = smith_normal_form(rs.cartan_transpose());
    let diagonal = snf.diagonal.clone();
    // Semisimple Cartan matrices are invertible, so no divisor vanishes.
    debug_assert!(diagonal.iter().all(|&d| d >= 1));
    let nontrivial: Vec<usize> = (0..diagonal.len()).filter(|&i| diagonal[i] > 1).collect();
    let order = nontrivial.iter().map(|&i| diagonal[i] as u64).product();
    CenterGroup {
        rank: rs.rank(),
        diagonal,
        nontrivial,
        snf,
        order,
    }
}

impl CenterGroup {
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Group order: the product of the elementary divisors.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// The elementary divisors (> 1) in divisibility order.
    pub fn elementary_divisors(&self) -> Vec<i64> {
        self.nontrivial.iter().map(|&i| self.diagonal[i]).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn identity(&self) -> CenterElement {
        CenterElement {
            coords: vec![0; self.nontrivial.len()],
        }
    }

    /// One generator per cyclic factor of the quotient.
    pub fn generators(&self) -> Vec<CenterElement> {
        (0..self.nontrivial.len())
            .map(|k| {
                let mut coords = vec![0; self.nontrivial.len()];
                coords[k] = 1;
                CenterElement { coords }
            })
            .collect()
    }

    /// All elements, in deterministic mixed-radix order (last coordinate
    /// fastest).
    pub fn elements(&self) -> Vec<CenterElement> {
        let divisors = self.elementary_divisors();
        let mut out = vec![self.identity()];
        for (k, &d) in divisors.iter().enumerate() {
            let prev = std::mem::take(&mut out);
            for e in prev {
                for c in 0..d {
                    let mut coords = e.coords.clone();
                    coords[k] = c;
                    out.push(CenterElement { coords });
                }
            }
        }
        out
    }

    pub fn add(&self, a: &CenterElement, b: &CenterElement) -> CenterElement {
        let divisors = self.elementary_divisors();
        let coords = a
            .coords
            .iter()
            .zip(&b.coords)
            .zip(&divisors)
            .map(|((&x, &y), &d)| (x + y).rem_euclid(d))
            .collect();
        CenterElement { coords }
    }

    pub fn from_coords(&self, coords: &[i64]) -> CenterElement {
        let divisors = self.elementary_divisors();
        assert_eq!(coords.len(), divisors.len(), "coset coordinate count");
        CenterElement {
            coords: coords
                .iter()
                .zip(&divisors)
                .map(|(&c, &d)| c.rem_euclid(d))
                .collect(),
        }
    }

    /// Class of a coweight (coordinates in the fundamental-coweight
    /// basis): `U·x` reduced modulo the diagonal.
    pub fn class_of_coweight(&self, x: &[i64]) -> CenterElement {
        assert_eq!(x.len(), self.rank, "coweight rank");
        let ux = self.snf.u.matvec(x);
        let coords = self
            .nontrivial
            .iter()
            .map(|&i| ux[i].rem_euclid(self.diagonal[i]))
            .collect();
        CenterElement { coords }
    }

    /// An integral coweight representing `z`, in fundamental-coweight
    /// coordinates: `U⁻¹` applied to the padded coset vector.
    pub fn coweight_representative(&self, z: &CenterElement) -> Vec<i64> {
        assert_eq!(
            z.coords.len(),
            self.nontrivial.len(),
            "coset coordinate count"
        );
        let mut padded = vec![0; self.rank];
        for (k, &i) in self.nontrivial.iter().enumerate() {
            padded[i] = z.coords[k];
        }
        self.snf.u_inv.matvec(&padded)
    }

    /// Class of a weight in `P/Q`, in the coordinates dual to the center's:
    /// `Vᵀ·w` reduced modulo the diagonal, restricted to the nontrivial
    /// positions.
    pub fn weight_class(&self, w: &Weight) -> Vec<i64> {
        assert_eq!(w.coords().len(), self.rank, "weight rank");
        let vt_w = self.snf.v.transpose().matvec(w.coords());
        self.nontrivial
            .iter()
            .map(|&i| vt_w[i].rem_euclid(self.diagonal[i]))
            .collect()
    }

    /// The canonical pairing of an integral weight against a central
    /// element, as an exact root of unity. Depends only on `w` modulo the
    /// root lattice. The global sign is the calibrated convention of the
    /// module docs.
    pub fn pairing(&self, w: &Weight, z: &CenterElement) -> RootOfUnity {
        let w_class = self.weight_class(w);
        let mut phase = Ratio::zero();
        for ((&cw, &cz), &i) in w_class.iter().zip(&z.coords).zip(&self.nontrivial) {
            phase += Ratio::new(cw * cz, self.diagonal[i]);
        }
        RootOfUnity::from_phase(-phase)
    }

    /// Determinant of the Cartan matrix recovered from the quotient, used
    /// as a cross-check (`|det| = Π dᵢ` over the full diagonal).
    pub fn diagonal_product(&self) -> i64 {
        self.diagonal.iter().product()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::{CartanType, RootSystem};

    fn center(s: &str) -> (RootSystem, CenterGroup) {
        let rs = RootSystem::build(s.parse::<CartanType>().unwrap());
        let cg = compute_center(&rs);
        (rs, cg)
    }

    #[test]
    fn root_of_unity_reduction() {
        let r = RootOfUnity::from_phase(Ratio::new(7, 4));
        assert_eq!(r.phase(), Ratio::new(3, 4));
        let r = RootOfUnity::from_phase(Ratio::new(-1, 3));
        assert_eq!(r.phase(), Ratio::new(2, 3));
        assert_eq!(r.pow(3), RootOfUnity::one());
        assert_eq!(r.order(), 3);
        assert!(
            (RootOfUnity::from_phase(Ratio::new(1, 2)).to_complex() - Complex64::new(-1.0, 0.0))
                .norm()
                .abs()
                < 1e-12
        );
    }

    #[test]
    fn cyclic_centers_of_type_a() {
        for n in 1..=7 {
            let (_, cg) = center(&format!("A{n}"));
            assert_eq!(cg.order(), (n + 1) as u64, "A{n}");
            assert_eq!(cg.elementary_divisors(), vec![(n + 1) as i64]);
        }
    }

    #[test]
    fn trivial_and_klein_centers() {
        let (_, cg) = center("E8");
        assert!(cg.is_trivial());
        assert_eq!(cg.elements().len(), 1);

        let (_, cg) = center("D4");
        assert_eq!(cg.order(), 4);
        assert_eq!(cg.elementary_divisors(), vec![2, 2]);
        assert_eq!(cg.elements().len(), 4);

        let (_, cg) = center("D5");
        assert_eq!(cg.elementary_divisors(), vec![4]);
    }

    #[test]
    fn product_center_combines_factors() {
        let (_, cg) = center("A2xA1");
        assert_eq!(cg.order(), 6);
        assert_eq!(cg.diagonal_product(), 6);
    }

    #[test]
    fn identity_and_root_lattice_pair_trivially() {
        let (rs, cg) = center("A3");
        let id = cg.identity();
        for z in cg.elements() {
            // Any weight against the identity.
            assert!(cg.pairing(&rs.rho(), &id).is_one());
            // Simple roots (columns of the Cartan matrix) against anything.
            for p in rs.roots() {
                let beta = rs.root_to_weight(&p.root);
                assert!(cg.pairing(&beta, &z).is_one(), "root {} vs {}", p.root, z);
            }
        }
    }

    #[test]
    fn su2_fubini_study_value() {
        // η = (1) on A1 pairs with the nontrivial element to -1.
        let (_, cg) = center("A1");
        let z = cg.generators()[0].clone();
        let value = cg.pairing(&Weight(vec![1]), &z);
        assert_eq!(value.phase(), Ratio::new(1, 2));
    }

    #[test]
    fn pairing_is_homomorphism_in_z() {
        for s in ["A3", "D4", "D5", "A2xA1", "B3"] {
            let (rs, cg) = center(s);
            let w = Weight((0..rs.rank() as i64).map(|i| i - 1).collect());
            for a in cg.elements() {
                for b in cg.elements() {
                    let lhs = cg.pairing(&w, &cg.add(&a, &b));
                    let rhs = cg.pairing(&w, &a).mul(&cg.pairing(&w, &b));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn pairing_invariant_under_root_shifts() {
        let (rs, cg) = center("A4");
        let w = Weight(vec![1, 0, 2, -1]);
        for p in rs.roots().iter().take(8) {
            let beta = rs.root_to_weight(&p.root);
            let shifted = Weight(
                w.coords()
                    .iter()
                    .zip(beta.coords())
                    .map(|(a, b)| a + b)
                    .collect(),
            );
            for z in cg.elements() {
                assert_eq!(cg.pairing(&w, &z), cg.pairing(&shifted, &z));
            }
        }
    }

    #[test]
    fn value_order_divides_group_order() {
        for s in ["A5", "D6", "B4", "A3xA2"] {
            let (rs, cg) = center(s);
            let w = Weight(vec![1; rs.rank()]);
            for z in cg.elements() {
                assert_eq!(cg.order() % cg.pairing(&w, &z).order(), 0);
            }
        }
    }

    #[test]
    fn nondegenerate_on_fundamental_weights() {
        // Every nontrivial central element is detected by some fundamental
        // weight; exhaustive over the classical ranks we support in tests.
        let mut types: Vec<String> = Vec::new();
        for n in 1..=8 {
            types.push(format!("A{n}"));
        }
        for n in 2..=8 {
            types.push(format!("B{n}"));
        }
        for n in 3..=8 {
            types.push(format!("C{n}"));
        }
        for n in 4..=8 {
            types.push(format!("D{n}"));
        }
        for s in ["E6", "E7", "E8", "F4", "G2"] {
            types.push(s.to_string());
        }
        for s in &types {
            let (rs, cg) = center(s);
            for z in cg.elements() {
                if z.is_identity() {
                    continue;
                }
                let detected = (0..rs.rank()).any(|i| {
                    let mut coords = vec![0; rs.rank()];
                    coords[i] = 1;
                    !cg.pairing(&Weight(coords), &z).is_one()
                });
                assert!(detected, "{s}: {z} invisible to all fundamental weights");
            }
        }
    }

    #[test]
    fn coweight_representative_round_trips() {
        for s in ["A3", "D4", "B2", "A2xA1"] {
            let (_, cg) = center(s);
            for z in cg.elements() {
                let x = cg.coweight_representative(&z);
                assert_eq!(cg.class_of_coweight(&x), z);
            }
        }
    }

    #[test]
    fn representative_pairing_matches_diagonal_pairing() {
        // ⟨w, U⁻¹ĉ⟩ computed through the Cartan inverse agrees (mod 1, up
        // to the calibrated sign) with the diagonalized formula.
        let (rs, cg) = center("A3");
        let w = Weight(vec![2, -1, 3]);
        for z in cg.elements() {
            let x = cg.coweight_representative(&z);
            let b: Vec<Ratio<i64>> = w.coords().iter().map(|&c| Ratio::from_integer(c)).collect();
            let w_root = rs.cartan_matrix().inner().solve(&b).unwrap();
            let raw: Ratio<i64> = w_root
                .iter()
                .zip(&x)
                .map(|(r, &xi)| r * Ratio::from_integer(xi))
                .sum();
            assert_eq!(RootOfUnity::from_phase(-raw), cg.pairing(&w, &z));
        }
    }
}
