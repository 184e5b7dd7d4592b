//! Root systems of the finite Cartan types and products thereof.
//!
//! Conventions, fixed once for the whole crate:
//!
//! * Weights are stored in the **fundamental-weight basis**, so the i-th
//!   coordinate of a weight `w` is exactly the pairing `⟨w, α̌_i⟩` with the
//!   i-th simple coroot. Integrality of a functional is then integrality
//!   of its coordinates.
//! * Roots are stored in the **simple-root basis**, coroots in the
//!   simple-coroot basis.
//! * The Cartan matrix is oriented as `entry(i, j) = ⟨α_j, α̌_i⟩`
//!   (columns are roots, rows are coroots). Column `j` is therefore the
//!   fundamental-weight coordinate vector of the simple root `α_j`.
//!
//! Roots are enumerated by breadth-first closure of the simple roots under
//! the simple reflections; the classical per-type count formulas appear
//! only in tests. The closure propagates root/coroot *pairs*: reflecting a
//! root by `s_j` reflects its coroot by the dual action, so every root
//! comes out tied to its coroot.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// One of the simple series A, B, C, D, E, F, G.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }

    fn admits_rank(self, rank: usize) -> bool {
        match self {
            Series::A => rank >= 1,
            Series::B => rank >= 2,
            Series::C => rank >= 3,
            Series::D => rank >= 4,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        }
    }
}

/// A Cartan type: a product of simple factors such as `A2` or `A2xA1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CartanType {
    factors: Vec<(Series, usize)>,
}

impl CartanType {
    /// Builds a type from explicit factors, enforcing the per-series rank
    /// constraints (A: ≥1, B: ≥2, C: ≥3, D: ≥4, E: 6–8, F: 4, G: 2).
    pub fn new(factors: Vec<(Series, usize)>) -> Result<Self> {
        for &(series, rank) in &factors {
            if !series.admits_rank(rank) {
                return Err(Error::InvalidRank {
                    series: series.letter(),
                    rank,
                });
            }
        }
        Ok(CartanType { factors })
    }

    pub fn simple(series: Series, rank: usize) -> Result<Self> {
        Self::new(vec![(series, rank)])
    }

    /// The empty product; used for the semisimple part of a torus stabilizer.
    pub fn trivial() -> Self {
        CartanType {
            factors: Vec::new(),
        }
    }

    pub fn factors(&self) -> &[(Series, usize)] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(|&(_, r)| r).sum()
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    /// Block-diagonal Cartan matrix of the product.
    pub fn cartan_matrix(&self) -> CartanMatrix {
        let n = self.rank();
        let mut m = IntMatrix::zeros(n, n);
        let mut offset = 0;
        for &(series, rank) in &self.factors {
            m.insert_block(offset, &simple_cartan_matrix(series, rank));
            offset += rank;
        }
        CartanMatrix::new(m).expect("per-series matrices satisfy the Cartan axioms")
    }
}

impl FromStr for CartanType {
    type Err = Error;

    /// Parses strings such as `"A3"`, `"d4"`, `"A2xA1"` (case-insensitive).
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::InvalidCartanType(s.to_string(), msg.to_string());
        let mut factors = Vec::new();
        for token in s.split(['x', 'X']) {
            let token = token.trim();
            let mut chars = token.chars();
            let letter = chars.next().ok_or_else(|| bad("empty factor"))?;
            let series = match letter.to_ascii_uppercase() {
                'A' => Series::A,
                'B' => Series::B,
                'C' => Series::C,
                'D' => Series::D,
                'E' => Series::E,
                'F' => Series::F,
                'G' => Series::G,
                c => return Err(bad(&format!("unknown series `{c}`"))),
            };
            let digits = chars.as_str();
            let rank: usize = digits
                .parse()
                .map_err(|_| bad(&format!("cannot read rank from `{token}`")))?;
            factors.push((series, rank));
        }
        if factors.is_empty() {
            return Err(bad("no factors"));
        }
        CartanType::new(factors)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "trivial");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|&(s, r)| format!("{}{}", s.letter(), r))
            .collect();
        write!(f, "{}", parts.join("x"))
    }
}

/// Integer Cartan matrix with `entry(i, j) = ⟨α_j, α̌_i⟩`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanMatrix(IntMatrix);

impl CartanMatrix {
    pub fn new(m: IntMatrix) -> Result<Self> {
        let n = m.nrows();
        if m.ncols() != n {
            return Err(Error::RankMismatch {
                expected: n,
                got: m.ncols(),
            });
        }
        for i in 0..n {
            if m[(i, i)] != 2 {
                return Err(Error::InvalidCartanType(
                    "matrix".into(),
                    format!("diagonal entry ({i},{i}) is {}, want 2", m[(i, i)]),
                ));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                if m[(i, j)] > 0 || (m[(i, j)] == 0) != (m[(j, i)] == 0) {
                    return Err(Error::InvalidCartanType(
                        "matrix".into(),
                        format!("off-diagonal entries ({i},{j}) violate the Cartan axioms"),
                    ));
                }
            }
        }
        Ok(CartanMatrix(m))
    }

    pub fn rank(&self) -> usize {
        self.0.nrows()
    }

    /// `⟨α_j, α̌_i⟩`.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.0[(i, j)]
    }

    pub fn inner(&self) -> &IntMatrix {
        &self.0
    }

    pub fn det(&self) -> i64 {
        self.0.det()
    }
}

/// A root in simple-root coordinates (also used for coroots in
/// simple-coroot coordinates).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    /// Positivity is well defined: coordinates are all ≥ 0 or all ≤ 0.
    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c != 0)
    }

    pub fn negate(&self) -> Root {
        Root(self.0.iter().map(|&c| -c).collect())
    }

    /// Sum of the simple-root coordinates (the usual height).
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }
}

fn fmt_paren_list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    write!(f, "(")?;
    for (i, c) in items.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{c}")?;
    }
    write!(f, ")")
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_paren_list(f, &self.0)
    }
}

/// An integral weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn to_rational(&self) -> RationalWeight {
        RationalWeight(self.0.iter().map(|&c| Ratio::from_integer(c)).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_paren_list(f, &self.0)
    }
}

/// A rational weight; hosts η before the integrality check.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalWeight(pub Vec<Ratio<i64>>);

impl RationalWeight {
    pub fn coords(&self) -> &[Ratio<i64>] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Returns the integral form, or the first non-integral coordinate.
    pub fn to_integral(&self) -> Result<Weight> {
        let mut coords = Vec::with_capacity(self.0.len());
        for (index, c) in self.0.iter().enumerate() {
            if c.is_integer() {
                coords.push(c.to_integer());
            } else {
                return Err(Error::NotQuantizable {
                    index,
                    value: c.to_string(),
                });
            }
        }
        Ok(Weight(coords))
    }

    pub fn scale(&self, c: Ratio<i64>) -> RationalWeight {
        RationalWeight(self.0.iter().map(|&x| x * c).collect())
    }
}

impl fmt::Display for RationalWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_paren_list(f, &self.0)
    }
}

/// A root together with its coroot.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootPair {
    pub root: Root,
    pub coroot: Root,
}

/// A full root system: Cartan data plus the closed set of root/coroot pairs.
#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan_type: CartanType,
    cartan: CartanMatrix,
    cartan_t: IntMatrix,
    roots: Vec<RootPair>,
}

impl RootSystem {
    /// Builds the root system of `cartan_type` by reflection closure.
    pub fn build(cartan_type: CartanType) -> Self {
        let cartan = cartan_type.cartan_matrix();
        let cartan_t = cartan.inner().transpose();
        let rank = cartan.rank();

        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue: VecDeque<RootPair> = VecDeque::new();
        for i in 0..rank {
            let mut r = vec![0; rank];
            r[i] = 1;
            seen.insert(r.clone());
            queue.push_back(RootPair {
                root: Root(r.clone()),
                coroot: Root(r),
            });
        }
        let mut roots = Vec::new();
        while let Some(pair) = queue.pop_front() {
            for j in 0..rank {
                let refl = reflect_pair(cartan.inner(), &cartan_t, &pair, j);
                if seen.insert(refl.root.0.clone()) {
                    queue.push_back(refl);
                }
            }
            roots.push(pair);
        }
        roots.sort();
        RootSystem {
            cartan_type,
            cartan,
            cartan_t,
            roots,
        }
    }

    pub fn cartan_type(&self) -> &CartanType {
        &self.cartan_type
    }

    pub fn cartan_matrix(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn roots(&self) -> &[RootPair] {
        &self.roots
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = &RootPair> {
        self.roots.iter().filter(|p| p.root.is_positive())
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    /// The half-sum of positive roots: the all-ones weight.
    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank()])
    }

    /// Exact pairing `⟨w, α̌⟩` of a rational weight with a coroot.
    pub fn pair(&self, w: &RationalWeight, coroot: &Root) -> Result<Ratio<i64>> {
        if w.0.len() != self.rank() || coroot.0.len() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: if w.0.len() != self.rank() {
                    w.0.len()
                } else {
                    coroot.0.len()
                },
            });
        }
        Ok(w.0
            .iter()
            .zip(&coroot.0)
            .map(|(wi, &ci)| wi * Ratio::from_integer(ci))
            .sum())
    }

    /// Integer pairing for integral weights.
    pub fn pair_integral(&self, w: &Weight, coroot: &Root) -> i64 {
        debug_assert_eq!(w.0.len(), coroot.0.len());
        w.0.iter().zip(&coroot.0).map(|(a, b)| a * b).sum()
    }

    /// `⟨β, γ̌⟩` for a root β and the coroot γ̌ of another root.
    pub fn pair_roots(&self, beta: &Root, coroot: &Root) -> i64 {
        self.pair_integral(&self.root_to_weight(beta), coroot)
    }

    /// Fundamental-weight coordinates of a root: the Cartan matrix applied
    /// to its simple-root coordinates.
    pub fn root_to_weight(&self, root: &Root) -> Weight {
        Weight(self.cartan.inner().matvec(&root.0))
    }

    /// Simple reflection `s_i(w) = w − ⟨w, α̌_i⟩ α_i` on an integral weight.
    pub fn simple_reflection(&self, i: usize, w: &Weight) -> Weight {
        let wi = w.0[i];
        let mut out = w.0.clone();
        for j in 0..self.rank() {
            out[j] -= wi * self.cartan.entry(j, i);
        }
        Weight(out)
    }

    /// Simple reflection on a rational weight.
    pub fn simple_reflection_rational(&self, i: usize, w: &RationalWeight) -> RationalWeight {
        let wi = w.0[i];
        let mut out = w.0.clone();
        for j in 0..self.rank() {
            out[j] -= wi * Ratio::from_integer(self.cartan.entry(j, i));
        }
        RationalWeight(out)
    }

    /// Full Weyl orbit of `w`, by closure under simple reflections.
    /// Returned sorted, so the order is deterministic.
    pub fn weyl_orbit(&self, w: &Weight) -> Vec<Weight> {
        let mut seen: HashSet<Weight> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(w.clone());
        queue.push_back(w.clone());
        while let Some(v) = queue.pop_front() {
            for i in 0..self.rank() {
                let r = self.simple_reflection(i, &v);
                if seen.insert(r.clone()) {
                    queue.push_back(r);
                }
            }
        }
        let mut orbit: Vec<Weight> = seen.into_iter().collect();
        orbit.sort();
        orbit
    }

    /// The dominant representative of the Weyl orbit of `w`.
    pub fn dominant_representative(&self, w: &Weight) -> Weight {
        let mut v = w.clone();
        loop {
            match (0..self.rank()).find(|&i| v.0[i] < 0) {
                Some(i) => v = self.simple_reflection(i, &v),
                None => return v,
            }
        }
    }

    pub(crate) fn cartan_transpose(&self) -> &IntMatrix {
        &self.cartan_t
    }
}

fn reflect_pair(cartan: &IntMatrix, cartan_t: &IntMatrix, pair: &RootPair, j: usize) -> RootPair {
    // s_j on the root uses the Cartan matrix, on the coroot its transpose.
    let pairing_root: i64 = cartan
        .row(j)
        .iter()
        .zip(&pair.root.0)
        .map(|(a, b)| a * b)
        .sum();
    let pairing_coroot: i64 = cartan_t
        .row(j)
        .iter()
        .zip(&pair.coroot.0)
        .map(|(a, b)| a * b)
        .sum();
    let mut r = pair.root.0.clone();
    let mut c = pair.coroot.0.clone();
    r[j] -= pairing_root;
    c[j] -= pairing_coroot;
    RootPair {
        root: Root(r),
        coroot: Root(c),
    }
}

fn simple_cartan_matrix(series: Series, n: usize) -> IntMatrix {
    let mut m = IntMatrix::zeros(n, n);
    for i in 0..n {
        m[(i, i)] = 2;
    }
    let mut chain = |edges: &[(usize, usize)]| {
        for &(i, j) in edges {
            m[(i, j)] = -1;
            m[(j, i)] = -1;
        }
    };
    match series {
        Series::A => chain(
            &(0..n.saturating_sub(1))
                .map(|i| (i, i + 1))
                .collect::<Vec<_>>(),
        ),
        Series::B => {
            chain(&(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>());
            // Last simple root is short: its coroot row picks up the -2.
            m[(n - 1, n - 2)] = -2;
        }
        Series::C => {
            chain(&(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>());
            m[(n - 2, n - 1)] = -2;
        }
        Series::D => {
            chain(&(0..n - 3).map(|i| (i, i + 1)).collect::<Vec<_>>());
            chain(&[(n - 3, n - 2), (n - 3, n - 1)]);
        }
        Series::E => {
            // Bourbaki numbering: a chain 1-3-4-5-6(-7)(-8) with node 2
            // hanging off node 4; zero-indexed below.
            chain(&[(0, 2), (2, 3), (3, 4), (4, 5)]);
            chain(&(5..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>());
            chain(&[(1, 3)]);
        }
        Series::F => {
            chain(&[(0, 1), (1, 2), (2, 3)]);
            m[(2, 1)] = -2;
        }
        Series::G => {
            m[(0, 1)] = -1;
            m[(1, 0)] = -3;
        }
    }
    m
}
