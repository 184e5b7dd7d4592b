//! Closed-form fast path for SU(n) orbits in block coordinates.
//!
//! An SU(n) orbit is specified by a partition `q = (q_1 ≤ … ≤ q_k)` of
//! `n-1` (the block sizes of the stabilizer, with an implicit final block
//! of size 1) and an integer coefficient vector `m`. The character of the
//! stabilizer takes the value `z^{q·m}` at the central element `z`, so
//! the image of the center has exactly `n / gcd(q·m, n)` elements, and
//! the bound is `n` itself precisely when `q·m` and `n` are coprime.
//!
//! [`SunOrbitSpec::to_weight`] translates the block data into
//! fundamental-weight coordinates on `A_{n-1}`, which ties this module to
//! the generic pipeline: the closed form and
//! [`crate::character::kappa_on_center`] must agree on every central
//! element, and the test suites check that exhaustively.

use num_integer::Integer;
use num_rational::Ratio;

use crate::center::{CenterElement, CenterGroup, RootOfUnity};
use crate::error::{Error, Result};
use crate::root_system::RationalWeight;

/// Block-coordinate description of an SU(n) coadjoint orbit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SunOrbitSpec {
    n: usize,
    q: Vec<usize>,
    m: Vec<i64>,
}

/// π₁ bound extracted from the closed-form character.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SunBound {
    /// Image size of `z ↦ z^{q·m}` on the order-n center.
    pub bound: u64,
    /// `gcd(q·m, n)`.
    pub gcd: u64,
    /// True iff `q·m` and `n` are coprime, the hypothesis under which the
    /// bound is the center order itself rather than a derived image size.
    pub paper_theorem: bool,
}

impl SunOrbitSpec {
    pub fn new(n: usize, q: Vec<usize>, m: Vec<i64>) -> Result<Self> {
        let fail = |reason: &str| Error::InvalidPartition {
            n,
            reason: reason.to_string(),
        };
        if n < 2 {
            return Err(fail("n must be at least 2"));
        }
        if q.is_empty() {
            return Err(fail("partition is empty"));
        }
        if q.iter().any(|&b| b == 0) {
            return Err(fail("block sizes must be positive"));
        }
        if q.windows(2).any(|w| w[0] > w[1]) {
            return Err(fail("block sizes must be nondecreasing"));
        }
        let total: usize = q.iter().sum();
        if total != n - 1 {
            return Err(fail(&format!(
                "block sizes sum to {total}, want n-1 = {}",
                n - 1
            )));
        }
        if m.len() != q.len() {
            return Err(fail(&format!(
                "coefficient count {} does not match block count {}",
                m.len(),
                q.len()
            )));
        }
        Ok(SunOrbitSpec { n, q, m })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> &[usize] {
        &self.q
    }

    pub fn m(&self) -> &[i64] {
        &self.m
    }

    /// The inner product `q·m = Σ q_j m_j`.
    pub fn q_dot_m(&self) -> i128 {
        self.q
            .iter()
            .zip(&self.m)
            .map(|(&b, &c)| b as i128 * c as i128)
            .sum()
    }

    /// `κ` of the loop ending at `e^{2πi a/n}·I`: the exact phase
    /// `a·(q·m)/n mod 1`. Arithmetic is reduced mod n first, so any `i64`
    /// inputs are safe.
    pub fn kappa_closed_form(&self, a: i64) -> RootOfUnity {
        let n = self.n as i128;
        let qm = self.q_dot_m().rem_euclid(n);
        let num = (a as i128).rem_euclid(n) * qm % n;
        RootOfUnity::from_phase(Ratio::new(num as i64, self.n as i64))
    }

    /// Lower bound on #π₁: the image size `n / gcd(q·m, n)`.
    pub fn pi1_bound(&self) -> SunBound {
        let n = self.n as i128;
        let g = self.q_dot_m().rem_euclid(n).gcd(&n) as u64;
        SunBound {
            bound: self.n as u64 / g,
            gcd: g,
            paper_theorem: g == 1,
        }
    }

    /// The weight on `A_{n-1}` attached to the block data: the coordinate
    /// at each block boundary `s_r = q_1 + … + q_r` is `m_{r+1} - m_r`
    /// (with `m_{k+1} = 0`), every other coordinate vanishes. The sign is
    /// the global calibration: `(q, m) = ((1), (-1))` on SU(2) is the
    /// Fubini–Study sphere with weight `(1)`.
    pub fn to_weight(&self) -> RationalWeight {
        let mut coords = vec![Ratio::from_integer(0); self.n - 1];
        let mut boundary = 0usize;
        for (r, &block) in self.q.iter().enumerate() {
            boundary += block;
            let next = if r + 1 < self.m.len() {
                self.m[r + 1]
            } else {
                0
            };
            coords[boundary - 1] = Ratio::from_integer(next - self.m[r]);
        }
        RationalWeight(coords)
    }

    /// The central element `e^{2πi a/n}·I` of SU(n) as a class in
    /// `P∨/Q∨`: `a` times the last fundamental coweight.
    pub fn center_element(&self, cg: &CenterGroup, a: i64) -> CenterElement {
        assert_eq!(cg.rank(), self.n - 1, "center group is not for A_{{n-1}}");
        let mut x = vec![0i64; self.n - 1];
        x[self.n - 2] = a;
        cg.class_of_coweight(&x)
    }
}

/// All partitions of `total` into nondecreasing positive parts.
pub fn partitions(total: usize) -> Vec<Vec<usize>> {
    fn extend(total: usize, min_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if total == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in min_part..=total {
            prefix.push(part);
            extend(total - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(total, 1, &mut Vec::new(), &mut out);
    out
}

/// Enumerates every spec with the given `n` and `m` entries in
/// `[-m_bound, m_bound]`, invoking the callback with the spec and its
/// bound data. Enumeration order is deterministic.
pub fn sweep_for_each<F: FnMut(&SunOrbitSpec, &SunBound)>(n: usize, m_bound: i64, mut f: F) {
    assert!(n >= 2);
    for q in partitions(n - 1) {
        let k = q.len();
        let mut m = vec![-m_bound; k];
        'specs: loop {
            let spec = SunOrbitSpec::new(n, q.clone(), m.clone())
                .expect("enumerated partitions are valid");
            let bound = spec.pi1_bound();
            f(&spec, &bound);
            // Odometer over the coefficient box, last entry fastest.
            let mut i = k;
            loop {
                if i == 0 {
                    break 'specs;
                }
                i -= 1;
                if m[i] < m_bound {
                    m[i] += 1;
                    for v in m.iter_mut().skip(i + 1) {
                        *v = -m_bound;
                    }
                    continue 'specs;
                }
            }
        }
    }
}
