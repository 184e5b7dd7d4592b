//! Coadjoint orbit analysis: stabilizer root data, regularity,
//! quantizability, and the symplectic dimension.
//!
//! The orbit through η is determined by the restriction of η to the
//! Cartan subalgebra (η vanishes on the root spaces), so an orbit datum
//! is just a rational weight on a root system. The complexified
//! stabilizer algebra is generated by the Cartan together with the root
//! triples on which η pairs to zero; those roots form the Levi root set,
//! and the roots pairing nonnegatively form the parabolic set.

use num_rational::Ratio;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::root_system::{CartanType, RationalWeight, Root, RootPair, RootSystem, Series, Weight};

/// A coadjoint orbit datum: a rational weight on a root system.
#[derive(Debug, Clone)]
pub struct OrbitDatum<'a> {
    root_system: &'a RootSystem,
    eta: RationalWeight,
}

impl<'a> OrbitDatum<'a> {
    pub fn new(root_system: &'a RootSystem, eta: RationalWeight) -> Result<Self> {
        if eta.coords().len() != root_system.rank() {
            return Err(Error::RankMismatch {
                expected: root_system.rank(),
                got: eta.coords().len(),
            });
        }
        Ok(OrbitDatum { root_system, eta })
    }

    pub fn root_system(&self) -> &RootSystem {
        self.root_system
    }

    pub fn eta(&self) -> &RationalWeight {
        &self.eta
    }

    /// Quantizability: every fundamental-weight coordinate of η is an
    /// integer, i.e. η pairs integrally with every simple coroot. For the
    /// simply connected form this is exactly the existence of the
    /// stabilizer character with derivative 2πiη.
    pub fn is_quantizable(&self) -> bool {
        self.eta.coords().iter().all(Ratio::is_integer)
    }

    /// The integral form of η, or a quantizability diagnostic.
    pub fn integral_eta(&self) -> Result<Weight> {
        self.eta.to_integral()
    }

    /// Real dimension of the orbit: roots minus Levi roots.
    pub fn symplectic_dimension(&self) -> usize {
        let levi = self
            .root_system
            .roots()
            .iter()
            .filter(|p| {
                self.root_system
                    .pair(&self.eta, &p.coroot)
                    .unwrap()
                    .is_zero()
            })
            .count();
        self.root_system.num_roots() - levi
    }

    /// Stabilizer data: Levi and parabolic root sets, the Cartan type of
    /// the Levi's semisimple part, and the regularity flag.
    pub fn stabilizer(&self) -> StabilizerReport {
        let rs = self.root_system;
        let mut levi_roots = Vec::new();
        let mut parabolic_roots = Vec::new();
        for p in rs.roots() {
            let pairing = rs.pair(&self.eta, &p.coroot).unwrap();
            if pairing.is_zero() {
                levi_roots.push(p.clone());
            }
            if pairing >= Ratio::zero() {
                parabolic_roots.push(p.root.clone());
            }
        }
        let simple = levi_simple_system(&levi_roots);
        let levi_type = classify_simple_system(rs, &simple);
        let torus_rank = rs.rank() - simple.len();
        let regular = levi_roots.is_empty();
        StabilizerReport {
            levi_roots,
            parabolic_roots,
            levi_type,
            torus_rank,
            regular,
        }
    }

    pub fn is_regular(&self) -> bool {
        self.root_system.roots().iter().all(|p| {
            !self
                .root_system
                .pair(&self.eta, &p.coroot)
                .unwrap()
                .is_zero()
        })
    }
}

/// Stabilizer structure of an orbit datum.
#[derive(Debug, Clone)]
pub struct StabilizerReport {
    /// Roots on which η vanishes (closed under negation).
    pub levi_roots: Vec<RootPair>,
    /// Roots on which η is ≥ 0: all positive roots plus the negated Levi
    /// roots.
    pub parabolic_roots: Vec<Root>,
    /// Cartan type of the semisimple part of the stabilizer.
    pub levi_type: CartanType,
    /// Rank of the central torus of the stabilizer.
    pub torus_rank: usize,
    /// True iff the stabilizer is exactly the maximal torus.
    pub regular: bool,
}

/// The simple system of the Levi root subsystem: positive Levi roots that
/// are not sums of two positive Levi roots.
fn levi_simple_system(levi_roots: &[RootPair]) -> Vec<RootPair> {
    let positive: Vec<&RootPair> = levi_roots.iter().filter(|p| p.root.is_positive()).collect();
    positive
        .iter()
        .filter(|p| {
            !positive.iter().any(|a| {
                positive.iter().any(|b| {
                    a.root
                        .coords()
                        .iter()
                        .zip(b.root.coords())
                        .map(|(x, y)| x + y)
                        .eq(p.root.coords().iter().copied())
                })
            })
        })
        .map(|p| (*p).clone())
        .collect()
}

/// Identifies the Cartan type of the root subsystem spanned by the given
/// simple system, by classifying each connected component of its Dynkin
/// diagram. Rank-two coincidences are normalized (C2 reported as B2).
fn classify_simple_system(rs: &RootSystem, simple: &[RootPair]) -> CartanType {
    let k = simple.len();
    if k == 0 {
        return CartanType::trivial();
    }
    // Sub-Cartan matrix in the crate's orientation.
    let mut a = IntMatrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            a[(i, j)] = rs.pair_roots(&simple[j].root, &simple[i].coroot);
        }
    }

    // Connected components of the diagram.
    let mut component = vec![usize::MAX; k];
    let mut n_comp = 0;
    for start in 0..k {
        if component[start] != usize::MAX {
            continue;
        }
        let mut stack = vec![start];
        component[start] = n_comp;
        while let Some(i) = stack.pop() {
            for j in 0..k {
                if j != i && a[(i, j)] != 0 && component[j] == usize::MAX {
                    component[j] = n_comp;
                    stack.push(j);
                }
            }
        }
        n_comp += 1;
    }

    let mut factors = Vec::new();
    for c in 0..n_comp {
        let nodes: Vec<usize> = (0..k).filter(|&i| component[i] == c).collect();
        factors.push(classify_component(&a, &nodes));
    }
    // Canonical order: by series letter, then descending rank.
    factors.sort_by(|x, y| x.0.letter().cmp(&y.0.letter()).then(y.1.cmp(&x.1)));
    CartanType::new(factors).expect("classified component has a valid rank")
}

fn classify_component(a: &IntMatrix, nodes: &[usize]) -> (Series, usize) {
    let r = nodes.len();
    if r == 1 {
        return (Series::A, 1);
    }
    let bond = |i: usize, j: usize| a[(nodes[i], nodes[j])] * a[(nodes[j], nodes[i])];
    let neighbors =
        |i: usize| -> Vec<usize> { (0..r).filter(|&j| j != i && bond(i, j) != 0).collect() };
    let max_bond = (0..r)
        .flat_map(|i| (0..i).map(move |j| (i, j)))
        .map(|(i, j)| bond(i, j))
        .max()
        .unwrap();

    if max_bond == 3 {
        debug_assert_eq!(r, 2);
        return (Series::G, 2);
    }

    let degrees: Vec<usize> = (0..r).map(|i| neighbors(i).len()).collect();
    let branch_nodes: Vec<usize> = (0..r).filter(|&i| degrees[i] == 3).collect();

    if max_bond == 1 {
        if branch_nodes.is_empty() {
            return (Series::A, r);
        }
        // One trivalent node; classify by sorted arm lengths.
        let b = branch_nodes[0];
        let mut arms: Vec<usize> = neighbors(b)
            .into_iter()
            .map(|first| {
                let mut len = 1;
                let mut prev = b;
                let mut cur = first;
                loop {
                    let next: Vec<usize> =
                        neighbors(cur).into_iter().filter(|&x| x != prev).collect();
                    match next.as_slice() {
                        [] => break,
                        [x] => {
                            prev = cur;
                            cur = *x;
                            len += 1;
                        }
                        _ => unreachable!("second branch point in a finite diagram"),
                    }
                }
                len
            })
            .collect();
        arms.sort_unstable();
        return match arms.as_slice() {
            [1, 1, _] => (Series::D, r),
            [1, 2, 2] => (Series::E, 6),
            [1, 2, 3] => (Series::E, 7),
            [1, 2, 4] => (Series::E, 8),
            other => unreachable!("arm profile {other:?} is not a finite type"),
        };
    }

    // One double bond on a chain: B, C, or F4.
    debug_assert_eq!(max_bond, 2);
    let (di, dj) = (0..r)
        .flat_map(|i| (0..i).map(move |j| (i, j)))
        .find(|&(i, j)| bond(i, j) == 2)
        .expect("double bond present");
    if r == 2 {
        return (Series::B, 2); // B2 = C2; one canonical name.
    }
    let end_of_chain = |i: usize| degrees[i] == 1;
    if !end_of_chain(di) && !end_of_chain(dj) {
        debug_assert_eq!(r, 4);
        return (Series::F, 4);
    }
    // The end node adjacent to the double bond decides B (short end) vs C
    // (long end): a[(i, j)] = ⟨α_j, α̌_i⟩ = -2 flags α_i short.
    let end = if end_of_chain(di) { di } else { dj };
    let other = if end == di { dj } else { di };
    if a[(nodes[end], nodes[other])] == -2 {
        (Series::B, r)
    } else {
        (Series::C, r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::RootSystem;

    fn rs(s: &str) -> RootSystem {
        RootSystem::build(s.parse().unwrap())
    }

    fn rational(coords: &[i64]) -> RationalWeight {
        RationalWeight(coords.iter().map(|&c| Ratio::from_integer(c)).collect())
    }

    #[test]
    fn regular_weight_on_a1() {
        let rs = rs("A1");
        let od = OrbitDatum::new(&rs, rational(&[1])).unwrap();
        let st = od.stabilizer();
        assert!(st.regular);
        assert!(st.levi_roots.is_empty());
        assert!(st.levi_type.is_trivial());
        assert_eq!(od.symplectic_dimension(), 2);
    }

    #[test]
    fn cp2_stabilizer() {
        // A2 with η = (1,0): one root pair in the Levi, orbit is CP².
        let rs = rs("A2");
        let od = OrbitDatum::new(&rs, rational(&[1, 0])).unwrap();
        let st = od.stabilizer();
        assert!(!st.regular);
        assert_eq!(st.levi_roots.len(), 2);
        assert_eq!(st.levi_type.to_string(), "A1");
        assert_eq!(st.torus_rank, 1);
        assert_eq!(od.symplectic_dimension(), 4);
    }

    #[test]
    fn full_flag_dimension() {
        let rs = rs("A2");
        let od = OrbitDatum::new(&rs, rational(&[1, 1])).unwrap();
        assert!(od.is_regular());
        assert_eq!(od.symplectic_dimension(), 6);
    }

    #[test]
    fn a3_middle_zero() {
        // η = (1,0,1) on A3: the Levi is the middle A1 (blocks 1,2,1).
        let rs = rs("A3");
        let od = OrbitDatum::new(&rs, rational(&[1, 0, 1])).unwrap();
        let st = od.stabilizer();
        assert_eq!(st.levi_type.to_string(), "A1");
        assert_eq!(st.torus_rank, 2);
        // Brute-force pairing count over all 12 coroots.
        let zero_count = rs
            .roots()
            .iter()
            .filter(|p| rs.pair(od.eta(), &p.coroot).unwrap().is_zero())
            .count();
        assert_eq!(zero_count, 2);
    }

    #[test]
    fn parabolic_contains_positives_and_negated_levis() {
        let rs = rs("B3");
        let od = OrbitDatum::new(&rs, rational(&[0, 1, 0])).unwrap();
        let st = od.stabilizer();
        for p in rs.positive_roots() {
            assert!(st.parabolic_roots.contains(&p.root));
        }
        for p in &st.levi_roots {
            assert!(st.parabolic_roots.contains(&p.root));
            assert!(st.parabolic_roots.contains(&p.root.negate()));
        }
        assert_eq!(
            st.parabolic_roots.len(),
            rs.num_roots() / 2 + st.levi_roots.len() / 2
        );
    }

    #[test]
    fn quantizability() {
        let a2 = rs("A2");
        assert!(OrbitDatum::new(&a2, rational(&[1, 0]))
            .unwrap()
            .is_quantizable());
        assert!(OrbitDatum::new(&a2, rational(&[2, -3]))
            .unwrap()
            .is_quantizable());
        let a1 = rs("A1");
        let half = RationalWeight(vec![Ratio::new(1, 2)]);
        let od = OrbitDatum::new(&a1, half).unwrap();
        assert!(!od.is_quantizable());
        assert!(matches!(
            od.integral_eta(),
            Err(Error::NotQuantizable { index: 0, .. })
        ));
    }

    #[test]
    fn zero_weight_is_a_point_orbit() {
        let rs = rs("B2");
        let od = OrbitDatum::new(&rs, rational(&[0, 0])).unwrap();
        assert_eq!(od.symplectic_dimension(), 0);
        assert!(od.is_quantizable());
        let st = od.stabilizer();
        assert_eq!(st.levi_type.to_string(), "B2");
        assert_eq!(st.torus_rank, 0);
    }

    #[test]
    fn rank_mismatch_rejected() {
        let rs = rs("A2");
        assert!(matches!(
            OrbitDatum::new(&rs, rational(&[1])),
            Err(Error::RankMismatch {
                expected: 2,
                got: 1
            })
        ));
    }

    #[test]
    fn scaling_leaves_stabilizer_unchanged() {
        let rs = rs("C3");
        let eta = rational(&[2, 0, 1]);
        let od = OrbitDatum::new(&rs, eta.clone()).unwrap();
        let scaled = OrbitDatum::new(&rs, eta.scale(Ratio::new(7, 3))).unwrap();
        let (a, b) = (od.stabilizer(), scaled.stabilizer());
        assert_eq!(a.levi_roots, b.levi_roots);
        assert_eq!(a.parabolic_roots, b.parabolic_roots);
        assert_eq!(a.levi_type, b.levi_type);
    }

    #[test]
    fn negating_eta_negates_the_parabolic() {
        let rs = rs("A3");
        let eta = rational(&[1, 0, -2]);
        let od = OrbitDatum::new(&rs, eta.clone()).unwrap();
        let neg = OrbitDatum::new(&rs, eta.scale(Ratio::from_integer(-1))).unwrap();
        let (a, b) = (od.stabilizer(), neg.stabilizer());
        assert_eq!(a.levi_roots, b.levi_roots);
        let negated: std::collections::HashSet<Root> =
            a.parabolic_roots.iter().map(Root::negate).collect();
        let b_set: std::collections::HashSet<Root> = b.parabolic_roots.into_iter().collect();
        assert_eq!(negated, b_set);
    }

    // The classifier recovers every full type from its own simple system
    // (η = 0 makes the whole system the Levi).
    #[test]
    fn classifier_round_trips_whole_types() {
        let mut cases: Vec<(String, String)> = Vec::new();
        for n in 1..=8 {
            cases.push((format!("A{n}"), format!("A{n}")));
        }
        for n in 2..=8 {
            cases.push((format!("B{n}"), format!("B{n}")));
        }
        for n in 3..=8 {
            cases.push((format!("C{n}"), format!("C{n}")));
        }
        for n in 4..=8 {
            cases.push((format!("D{n}"), format!("D{n}")));
        }
        for s in ["E6", "E7", "E8", "F4", "G2"] {
            cases.push((s.to_string(), s.to_string()));
        }
        cases.push(("A2xA1".into(), "A2xA1".into()));
        cases.push(("B2xA1".into(), "A1xB2".into()));
        for (input, expect) in cases {
            let rs = rs(&input);
            let od = OrbitDatum::new(&rs, rational(&vec![0; rs.rank()])).unwrap();
            assert_eq!(
                od.stabilizer().levi_type.to_string(),
                expect,
                "from {input}"
            );
        }
    }

    #[test]
    fn classifier_on_partial_levis() {
        // B3 with η = (1,0,0): Levi simple roots α2, α3 with a double bond.
        let rs_b3 = rs("B3");
        let od = OrbitDatum::new(&rs_b3, rational(&[1, 0, 0])).unwrap();
        assert_eq!(od.stabilizer().levi_type.to_string(), "B2");

        // B3 with η = (0,0,1): Levi is the long A2.
        let od = OrbitDatum::new(&rs_b3, rational(&[0, 0, 1])).unwrap();
        assert_eq!(od.stabilizer().levi_type.to_string(), "A2");

        // C4 with η = (1,0,0,0): Levi is C3.
        let rs_c4 = rs("C4");
        let od = OrbitDatum::new(&rs_c4, rational(&[1, 0, 0, 0])).unwrap();
        assert_eq!(od.stabilizer().levi_type.to_string(), "C3");

        // D5 with η = (1,0,0,0,0): Levi is D4.
        let rs_d5 = rs("D5");
        let od = OrbitDatum::new(&rs_d5, rational(&[1, 0, 0, 0, 0])).unwrap();
        assert_eq!(od.stabilizer().levi_type.to_string(), "D4");

        // D5 with η = (0,0,1,0,0): Levi is A2 x A1 x A1.
        let od = OrbitDatum::new(&rs_d5, rational(&[0, 0, 1, 0, 0])).unwrap();
        assert_eq!(od.stabilizer().levi_type.to_string(), "A2xA1xA1");

        // E6 with the branch-node coordinate zeroed out appropriately:
        // η = (0,1,0,0,0,0) leaves the A5 chain.
        let rs_e6 = rs("E6");
        let od = OrbitDatum::new(&rs_e6, rational(&[0, 1, 0, 0, 0, 0])).unwrap();
        assert_eq!(od.stabilizer().levi_type.to_string(), "A5");

        // G2 with η = (1,0): a single root pair survives.
        let rs_g2 = rs("G2");
        let od = OrbitDatum::new(&rs_g2, rational(&[1, 0])).unwrap();
        assert_eq!(od.stabilizer().levi_type.to_string(), "A1");
    }
}
