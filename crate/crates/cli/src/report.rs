//! Serializable report types. Field order is the canonical JSON order;
//! phases are always reduced fractions, so equal reports serialize to
//! identical bytes.

use serde::{Deserialize, Serialize};

/// An exact phase `num/den` of a root of unity `e^{2πi·num/den}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Phase {
    pub num: i64,
    pub den: i64,
}

impl From<orbit_kappa::RootOfUnity> for Phase {
    fn from(r: orbit_kappa::RootOfUnity) -> Self {
        Phase {
            num: r.numer(),
            den: r.denom(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEcho {
    pub cartan_type: String,
    pub weight: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KappaEntry {
    pub element: Vec<i64>,
    pub phase: Phase,
}

/// Output of `analyze`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitReport {
    pub input: InputEcho,
    pub quantizable: bool,
    pub regular: bool,
    pub levi_type: String,
    pub torus_rank: usize,
    pub orbit_dimension: usize,
    pub center_order: u64,
    pub elementary_divisors: Vec<i64>,
    pub kappa: Vec<KappaEntry>,
    pub injective: bool,
    pub image_size: usize,
    pub pi1_lower_bound: u64,
    pub bound_provenance: String,
}

/// Output of `center`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CenterReport {
    pub cartan_type: String,
    pub order: u64,
    pub elementary_divisors: Vec<i64>,
    pub generators: Vec<Vec<i64>>,
    pub elements: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SunKappaEntry {
    pub a: i64,
    pub phase: Phase,
}

/// Output of `sun` for a single block spec.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SunReport {
    pub n: usize,
    pub partition: Vec<usize>,
    pub m: Vec<i64>,
    pub q_dot_m: i64,
    pub gcd: u64,
    pub pi1_lower_bound: u64,
    pub paper_theorem_applies: bool,
    pub bound_provenance: String,
    pub kappa: Vec<SunKappaEntry>,
}

/// One row of `sun --sweep`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub q: Vec<usize>,
    pub m: Vec<i64>,
    pub q_dot_m: i64,
    pub gcd: u64,
    pub bound: u64,
    pub paper_theorem_applies: bool,
}

/// Output of `verify-s2`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyS2Report {
    pub m: i64,
    pub points: usize,
    pub resolution: usize,
    /// The common numeric κ as `[re, im]`.
    pub kappa_numeric: [f64; 2],
    pub kappa_algebraic_phase: Phase,
    /// Max pairwise deviation of κ across base points.
    pub max_deviation: f64,
    /// Max deviation of numeric κ from the algebraic value.
    pub algebraic_deviation: f64,
    /// |∫ f ω| by quadrature.
    pub normalization_residual: f64,
    /// Max |κ| difference between the two spanning-cap choices.
    pub cap_choice_deviation: f64,
}
