//! Quadrature verification of the action formula on the rank-one orbit.
//!
//! The SU(2) coadjoint orbit with character exponent `m` is a two-sphere
//! whose total symplectic area is normalized to `|m|` (the quantization
//! integer). The loop generated by `g_t = exp(t·A)` with `g_1 = -I` acts
//! by rotating the sphere once around the axis of `A`; a base point at
//! height `z` traces its latitude circle. The symplectic action of the
//! loop is
//!
//! ```text
//! κ = exp(2πi ∫_S ω − 2πi ∫₀¹ f_t(ψ_t(x)) dt),
//! ```
//!
//! with `S` a 2-chain bounded by the trajectory and `f` the normalized
//! moment Hamiltonian `f(x) = -(m/2)·⟨x, axis⟩`. The trajectory bounds a
//! polar cap; which pole depends on the sign of `m` through the flow
//! direction, and switching to the complementary cap shifts the area term
//! by the integer `|m|`, leaving κ unchanged — that shift is exactly the
//! quantization condition. The area term uses the exact cap formula and
//! is cross-checked against latitude–longitude quadrature; the time
//! integral uses a composite trapezoid rule. Everything here should
//! reproduce the algebraic value `κ = (-1)^m` independently of the base
//! point, and the test suites check that it does.

use num_complex::Complex64;

use crate::error::{Error, Result};

const TAU: f64 = 2.0 * std::f64::consts::PI;

/// Minimum admissible quadrature resolution.
pub const MIN_RESOLUTION: usize = 16;

/// The rank-one orbit: a sphere of total symplectic area `|m|`.
#[derive(Debug, Clone, Copy)]
pub struct SphereOrbit {
    m: i64,
}

impl SphereOrbit {
    pub fn new(m: i64) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroSphereExponent);
        }
        Ok(SphereOrbit { m })
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn total_area(&self) -> f64 {
        self.m.unsigned_abs() as f64
    }

    /// The normalized moment Hamiltonian of the rotation generator:
    /// `f(x) = -(m/2)·⟨x, axis⟩`. Vanishing mean over the sphere comes
    /// for free from the antipodal symmetry.
    pub fn moment_hamiltonian(&self, axis: &[f64; 3], x: &[f64; 3]) -> Result<f64> {
        check_on_sphere(x)?;
        let axis = normalize(axis);
        Ok(-(self.m as f64) / 2.0 * dot(&axis, x))
    }

    /// Symplectic area of the northern cap above height `z`, by Simpson
    /// quadrature in the colatitude (the longitude factor is exact).
    pub fn cap_area_quadrature(&self, z: f64, resolution: usize) -> f64 {
        let theta_cap = z.clamp(-1.0, 1.0).acos();
        self.total_area() / 2.0 * simpson(0.0, theta_cap, resolution, f64::sin)
    }

    /// Total symplectic area by the latitude–longitude product rule.
    pub fn total_area_quadrature(&self, resolution: usize) -> f64 {
        // Azimuthal factor by trapezoid over a full period (exact for the
        // constant integrand), colatitude by Simpson.
        let azimuthal = trapezoid(0.0, TAU, resolution, |_| 1.0);
        let colatitude = simpson(0.0, std::f64::consts::PI, resolution, f64::sin);
        self.total_area() / (4.0 * std::f64::consts::PI) * azimuthal * colatitude
    }

    /// |∫ f ω| over the whole sphere, which must vanish: the quadrature
    /// residual of the Hamiltonian normalization.
    pub fn normalization_residual(&self, resolution: usize) -> f64 {
        let m = self.m as f64;
        let azimuthal = trapezoid(0.0, TAU, resolution, |_| 1.0);
        let colatitude = simpson(0.0, std::f64::consts::PI, resolution, |theta| {
            -(m / 2.0) * theta.cos() * theta.sin()
        });
        (self.total_area() / (4.0 * std::f64::consts::PI) * azimuthal * colatitude).abs()
    }
}

/// A loop of rotations `g_t = exp(t·A)` whose endpoint is central:
/// `half_turns` counts the factors of `-I` (each half-turn of the maximal
/// torus is a full rotation of the orbit).
#[derive(Debug, Clone, Copy)]
pub struct RotationLoop {
    axis: [f64; 3],
    half_turns: u32,
    resolution: usize,
}

impl RotationLoop {
    pub fn new(half_turns: u32, resolution: usize) -> Result<Self> {
        Self::with_axis([0.0, 0.0, 1.0], half_turns, resolution)
    }

    pub fn with_axis(axis: [f64; 3], half_turns: u32, resolution: usize) -> Result<Self> {
        if resolution < MIN_RESOLUTION {
            return Err(Error::ResolutionTooSmall(resolution, MIN_RESOLUTION));
        }
        if half_turns == 0 {
            return Err(Error::TooFewPoints(0, 1));
        }
        Ok(RotationLoop {
            axis: normalize(&axis),
            half_turns,
            resolution,
        })
    }

    pub fn axis(&self) -> [f64; 3] {
        self.axis
    }

    /// Endpoint of the loop as a power of `-I`.
    pub fn half_turns(&self) -> u32 {
        self.half_turns
    }

    pub fn resolution(&self) -> usize {
        self.resolution
    }

    /// Whether the endpoint is the identity rather than `-I`.
    pub fn endpoint_is_identity(&self) -> bool {
        self.half_turns % 2 == 0
    }

    /// The point `ψ_t(x)`: rotation of `x` about the axis by `2π·w·t`.
    fn transport(&self, x: &[f64; 3], t: f64) -> [f64; 3] {
        rotate(&self.axis, TAU * self.half_turns as f64 * t, x)
    }
}

/// Which spanning 2-chain the area term uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CapChoice {
    /// The cap whose positively-oriented boundary is the trajectory.
    OrientationPositive,
    /// The complementary chain with the same boundary; shifts the area
    /// term by the integer `w·|m|` and must leave κ unchanged.
    Complement,
}

/// One evaluation of the action integral.
#[derive(Debug, Clone, Copy)]
pub struct ActionResult {
    /// `∫_S ω` over the chosen spanning cap.
    pub area_term: f64,
    /// `∫₀¹ f_t(ψ_t(x)) dt` by composite trapezoid.
    pub ham_term: f64,
    /// `exp(2πi(area − ham))`; unit modulus by construction.
    pub kappa: Complex64,
}

/// Base-point independence report.
#[derive(Debug, Clone)]
pub struct SweepReport {
    pub kappas: Vec<Complex64>,
    /// The shared value (normalized mean of the samples).
    pub common: Complex64,
    pub max_pairwise_deviation: f64,
}

/// The action integral around the loop based at `x`, with the
/// orientation-positive cap.
pub fn action_around_loop(
    orbit: &SphereOrbit,
    lp: &RotationLoop,
    x: &[f64; 3],
) -> Result<ActionResult> {
    action_with_cap(orbit, lp, x, CapChoice::OrientationPositive)
}

pub fn action_with_cap(
    orbit: &SphereOrbit,
    lp: &RotationLoop,
    x: &[f64; 3],
    cap: CapChoice,
) -> Result<ActionResult> {
    check_on_sphere(x)?;
    let w = lp.half_turns as f64;
    let m = orbit.m as f64;
    let z = dot(&lp.axis, x).clamp(-1.0, 1.0);

    // Time integral of the Hamiltonian along the trajectory. The
    // integrand is constant on latitude circles; the quadrature verifies
    // rather than assumes that.
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    let ham_term = trapezoid(0.0, 1.0, lp.resolution, |t| {
        let ft = w * orbit
            .moment_hamiltonian(&lp.axis, &lp.transport(x, t))
            .expect("transport stays on the sphere");
        lo = lo.min(ft);
        hi = hi.max(ft);
        ft
    });
    let scale = 1.0 + m.abs() * w;
    assert!(
        hi - lo < 1e-9 * scale,
        "Hamiltonian must be constant along the trajectory"
    );

    // Spanning cap: the flow direction selects the pole, so the cap is
    // the one on the side of sign(m) · axis. Poles are degenerate
    // trajectories spanned by the empty chain.
    let area_term = if z.abs() >= 1.0 - 1e-12 {
        0.0
    } else {
        let s = if orbit.m > 0 { 1.0 } else { -1.0 };
        let positive = w * orbit.total_area() * (1.0 - s * z) / 2.0;
        let area = match cap {
            CapChoice::OrientationPositive => positive,
            CapChoice::Complement => positive - w * orbit.total_area(),
        };
        // Cross-check the closed cap formula against quadrature.
        let by_quadrature = orbit.cap_area_quadrature(s * z, lp.resolution);
        debug_assert!(
            (positive / w - by_quadrature).abs() < 1e-9 * scale,
            "cap area {positive} vs quadrature {by_quadrature}"
        );
        area
    };

    let kappa = Complex64::cis(TAU * (area_term - ham_term));
    Ok(ActionResult {
        area_term,
        ham_term,
        kappa,
    })
}

/// Evaluates the action at `count` base points spread over latitudes and
/// reports the spread of the resulting κ values. Point order is fixed, so
/// the result is deterministic.
pub fn base_point_sweep(
    orbit: &SphereOrbit,
    lp: &RotationLoop,
    count: usize,
) -> Result<SweepReport> {
    if count < 2 {
        return Err(Error::TooFewPoints(count, 2));
    }
    let (e1, e2) = orthonormal_frame(&lp.axis);
    let mut kappas = Vec::with_capacity(count);
    for i in 0..count {
        let theta = std::f64::consts::PI * (i + 1) as f64 / (count + 1) as f64;
        let phi = TAU * i as f64 / count as f64;
        let mut x = [0.0; 3];
        for k in 0..3 {
            x[k] = theta.sin() * (phi.cos() * e1[k] + phi.sin() * e2[k]) + theta.cos() * lp.axis[k];
        }
        kappas.push(action_around_loop(orbit, lp, &x)?.kappa);
    }
    let mut max_pairwise_deviation = 0.0f64;
    for i in 0..count {
        for j in i + 1..count {
            max_pairwise_deviation = max_pairwise_deviation.max((kappas[i] - kappas[j]).norm());
        }
    }
    let mean: Complex64 = kappas.iter().sum::<Complex64>() / count as f64;
    let common = if mean.norm() > 0.0 {
        mean / mean.norm()
    } else {
        mean
    };
    Ok(SweepReport {
        kappas,
        common,
        max_pairwise_deviation,
    })
}

fn check_on_sphere(x: &[f64; 3]) -> Result<()> {
    let norm = dot(x, x).sqrt();
    if (norm - 1.0).abs() > 1e-9 {
        return Err(Error::OffSphere { norm });
    }
    Ok(())
}

fn dot(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: &[f64; 3], b: &[f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn normalize(a: &[f64; 3]) -> [f64; 3] {
    let n = dot(a, a).sqrt();
    assert!(n > 0.0, "axis must be nonzero");
    [a[0] / n, a[1] / n, a[2] / n]
}

/// Rodrigues rotation of `x` about the unit `axis` by `angle`.
fn rotate(axis: &[f64; 3], angle: f64, x: &[f64; 3]) -> [f64; 3] {
    let (sin, cos) = angle.sin_cos();
    let k_cross_x = cross(axis, x);
    let k_dot_x = dot(axis, x);
    let mut out = [0.0; 3];
    for i in 0..3 {
        out[i] = x[i] * cos + k_cross_x[i] * sin + axis[i] * k_dot_x * (1.0 - cos);
    }
    out
}

fn orthonormal_frame(axis: &[f64; 3]) -> ([f64; 3], [f64; 3]) {
    let seed = if axis[0].abs() < 0.9 {
        [1.0, 0.0, 0.0]
    } else {
        [0.0, 1.0, 0.0]
    };
    let proj = dot(&seed, axis);
    let e1 = normalize(&[
        seed[0] - proj * axis[0],
        seed[1] - proj * axis[1],
        seed[2] - proj * axis[2],
    ]);
    let e2 = cross(axis, &e1);
    (e1, e2)
}

/// Composite trapezoid rule with `n` intervals.
fn trapezoid(a: f64, b: f64, n: usize, mut f: impl FnMut(f64) -> f64) -> f64 {
    let h = (b - a) / n as f64;
    let mut sum = (f(a) + f(b)) / 2.0;
    for i in 1..n {
        sum += f(a + h * i as f64);
    }
    sum * h
}

/// Composite Simpson rule; `n` is rounded up to an even interval count.
fn simpson(a: f64, b: f64, n: usize, f: impl Fn(f64) -> f64) -> f64 {
    let n = if n % 2 == 0 { n } else { n + 1 };
    let h = (b - a) / n as f64;
    let mut sum = f(a) + f(b);
    for i in 1..n {
        let weight = if i % 2 == 1 { 4.0 } else { 2.0 };
        sum += weight * f(a + h * i as f64);
    }
    sum * h / 3.0
}

#[cfg(test)]
mod tests {
    use super::*;

    const Z: [f64; 3] = [0.0, 0.0, 1.0];

    fn unit(theta: f64, phi: f64) -> [f64; 3] {
        [
            theta.sin() * phi.cos(),
            theta.sin() * phi.sin(),
            theta.cos(),
        ]
    }

    #[test]
    fn orbit_rejects_zero_exponent() {
        assert!(matches!(
            SphereOrbit::new(0),
            Err(Error::ZeroSphereExponent)
        ));
    }

    #[test]
    fn moment_values() {
        let orbit = SphereOrbit::new(-1).unwrap();
        // Equator.
        let eq = unit(std::f64::consts::FRAC_PI_2, 0.3);
        assert!(orbit.moment_hamiltonian(&Z, &eq).unwrap().abs() < 1e-12);
        // North pole: f = -m/2 = 1/2.
        assert!((orbit.moment_hamiltonian(&Z, &[0.0, 0.0, 1.0]).unwrap() - 0.5).abs() < 1e-12);
        // Antipodal points give opposite values.
        let x = unit(1.1, 0.4);
        let anti = [-x[0], -x[1], -x[2]];
        let f = orbit.moment_hamiltonian(&Z, &x).unwrap();
        assert!((f + orbit.moment_hamiltonian(&Z, &anti).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn moment_rejects_off_sphere() {
        let orbit = SphereOrbit::new(1).unwrap();
        assert!(matches!(
            orbit.moment_hamiltonian(&Z, &[0.0, 0.0, 1.5]),
            Err(Error::OffSphere { .. })
        ));
    }

    #[test]
    fn loop_validation() {
        assert!(matches!(
            RotationLoop::new(1, 8),
            Err(Error::ResolutionTooSmall(8, MIN_RESOLUTION))
        ));
        assert!(RotationLoop::new(1, 2048).is_ok());
    }

    #[test]
    fn fixed_point_action() {
        // North pole, m = -1: constant trajectory, S = ∅,
        // κ = exp(-2πi·f) = -1.
        let orbit = SphereOrbit::new(-1).unwrap();
        let lp = RotationLoop::new(1, 2048).unwrap();
        let r = action_around_loop(&orbit, &lp, &[0.0, 0.0, 1.0]).unwrap();
        assert!(r.area_term.abs() < 1e-12);
        assert!((r.ham_term - 0.5).abs() < 1e-12);
        assert!((r.kappa - Complex64::new(-1.0, 0.0)).norm() < 1e-9);
    }

    #[test]
    fn equator_action() {
        // m = -1 at the equator: hemisphere area 1/2, vanishing
        // Hamiltonian, κ = -1.
        let orbit = SphereOrbit::new(-1).unwrap();
        let lp = RotationLoop::new(1, 2048).unwrap();
        let x = unit(std::f64::consts::FRAC_PI_2, 1.0);
        let r = action_around_loop(&orbit, &lp, &x).unwrap();
        assert!((r.area_term - 0.5).abs() < 1e-9, "area {}", r.area_term);
        assert!(r.ham_term.abs() < 1e-9);
        assert!((r.kappa - Complex64::new(-1.0, 0.0)).norm() < 1e-9);
    }

    #[test]
    fn even_exponent_gives_plus_one() {
        let orbit = SphereOrbit::new(-2).unwrap();
        let lp = RotationLoop::new(1, 512).unwrap();
        for &theta in &[0.3, 1.0, 2.2] {
            let r = action_around_loop(&orbit, &lp, &unit(theta, 0.7)).unwrap();
            assert!((r.kappa - Complex64::new(1.0, 0.0)).norm() < 1e-9);
        }
    }

    #[test]
    fn kappa_is_unit_modulus() {
        let orbit = SphereOrbit::new(3).unwrap();
        let lp = RotationLoop::new(1, 256).unwrap();
        for &theta in &[0.2, 0.9, 1.7, 2.8] {
            let r = action_around_loop(&orbit, &lp, &unit(theta, 2.0)).unwrap();
            assert!((r.kappa.norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn base_point_independence() {
        for m in [-3i64, -1, 1, 2, 5] {
            let orbit = SphereOrbit::new(m).unwrap();
            let lp = RotationLoop::new(1, 2048).unwrap();
            let report = base_point_sweep(&orbit, &lp, 10).unwrap();
            assert!(report.max_pairwise_deviation < 1e-6, "m={m}");
            let target = Complex64::new(if m % 2 == 0 { 1.0 } else { -1.0 }, 0.0);
            for k in &report.kappas {
                assert!((k - target).norm() < 1e-6, "m={m}: {k}");
            }
            assert!((report.common - target).norm() < 1e-6);
        }
    }

    #[test]
    fn sweep_needs_two_points() {
        let orbit = SphereOrbit::new(1).unwrap();
        let lp = RotationLoop::new(1, 64).unwrap();
        assert!(matches!(
            base_point_sweep(&orbit, &lp, 1),
            Err(Error::TooFewPoints(1, 2))
        ));
    }

    #[test]
    fn multi_turn_loops_depend_only_on_endpoint() {
        // w half-turns end at (-I)^w: κ = (-1)^{w·m}.
        let orbit = SphereOrbit::new(-1).unwrap();
        let x = unit(0.8, 0.0);
        for w in 1..=4u32 {
            let lp = RotationLoop::new(w, 2048).unwrap();
            let r = action_around_loop(&orbit, &lp, &x).unwrap();
            let expect = if w % 2 == 0 { 1.0 } else { -1.0 };
            assert!(
                (r.kappa - Complex64::new(expect, 0.0)).norm() < 1e-8,
                "w={w}: {}",
                r.kappa
            );
            assert_eq!(lp.endpoint_is_identity(), w % 2 == 0);
        }
    }

    #[test]
    fn cap_choice_shifts_area_by_integer_and_fixes_kappa() {
        for m in [-4i64, -1, 2, 3] {
            let orbit = SphereOrbit::new(m).unwrap();
            let lp = RotationLoop::new(1, 2048).unwrap();
            let x = unit(1.2, 0.5);
            let a = action_with_cap(&orbit, &lp, &x, CapChoice::OrientationPositive).unwrap();
            let b = action_with_cap(&orbit, &lp, &x, CapChoice::Complement).unwrap();
            assert!(((a.area_term - b.area_term).abs() - orbit.total_area()).abs() < 1e-12);
            assert!((a.kappa - b.kappa).norm() < 1e-9, "m={m}");
        }
    }

    #[test]
    fn quadrature_reproduces_total_area() {
        for m in [-5i64, -1, 1, 4] {
            let orbit = SphereOrbit::new(m).unwrap();
            let residual = (orbit.total_area_quadrature(2048) - orbit.total_area()).abs();
            assert!(residual < 1e-9, "m={m}: {residual}");
        }
    }

    #[test]
    fn hamiltonian_mean_vanishes() {
        for m in [-3i64, 2] {
            let orbit = SphereOrbit::new(m).unwrap();
            assert!(orbit.normalization_residual(2048) < 1e-9);
        }
    }

    #[test]
    fn cap_quadrature_matches_closed_form() {
        let orbit = SphereOrbit::new(-3).unwrap();
        for &z in &[-0.7, -0.2, 0.0, 0.4, 0.9] {
            let exact = orbit.total_area() * (1.0 - z) / 2.0;
            assert!((orbit.cap_area_quadrature(z, 2048) - exact).abs() < 1e-9);
        }
    }

    #[test]
    fn tilted_axis_behaves_like_vertical() {
        let orbit = SphereOrbit::new(-1).unwrap();
        let lp = RotationLoop::with_axis([1.0, 1.0, 0.5], 1, 2048).unwrap();
        let report = base_point_sweep(&orbit, &lp, 6).unwrap();
        assert!(report.max_pairwise_deviation < 1e-6);
        assert!((report.common - Complex64::new(-1.0, 0.0)).norm() < 1e-6);
    }
}
