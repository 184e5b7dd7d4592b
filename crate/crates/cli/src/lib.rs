//! Command implementations behind the `orbit-kappa` binary.
//!
//! Each `run_*` function does the full computation for one subcommand and
//! returns a serializable report; the binary only parses flags, picks a
//! format, and maps errors to exit codes (2 for invalid input, 3 for a
//! non-quantizable weight under `analyze`).

pub mod report;

use num_rational::Ratio;

use orbit_kappa::center::compute_center;
use orbit_kappa::character::kappa_on_center;
use orbit_kappa::error::{Error, Result};
use orbit_kappa::orbit::OrbitDatum;
use orbit_kappa::root_system::{CartanType, RationalWeight, RootSystem};
use orbit_kappa::sphere::{
    action_with_cap, base_point_sweep, CapChoice, RotationLoop, SphereOrbit,
};
use orbit_kappa::sun::{sweep_for_each, SunOrbitSpec};

pub use report::*;

/// Exit code for a failed run: 3 for the quantizability gate, 2 for any
/// other invalid input.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::NotQuantizable { .. } => 3,
        _ => 2,
    }
}

/// Parses a comma-separated vector of exact rationals such as `1,0,-3/2`.
pub fn parse_rational_vector(field: &'static str, text: &str) -> Result<Vec<Ratio<i64>>> {
    let fail = || Error::Parse {
        field,
        text: text.to_string(),
    };
    text.split(',')
        .map(|tok| {
            let tok = tok.trim();
            let (num, den) = match tok.split_once('/') {
                Some((n, d)) => (n.parse::<i64>().map_err(|_| fail())?, {
                    let d = d.parse::<i64>().map_err(|_| fail())?;
                    if d == 0 {
                        return Err(fail());
                    }
                    d
                }),
                None => (tok.parse::<i64>().map_err(|_| fail())?, 1),
            };
            Ok(Ratio::new(num, den))
        })
        .collect()
}

pub fn parse_usize_vector(field: &'static str, text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|tok| {
            tok.trim().parse::<usize>().map_err(|_| Error::Parse {
                field,
                text: text.to_string(),
            })
        })
        .collect()
}

pub fn parse_i64_vector(field: &'static str, text: &str) -> Result<Vec<i64>> {
    text.split(',')
        .map(|tok| {
            tok.trim().parse::<i64>().map_err(|_| Error::Parse {
                field,
                text: text.to_string(),
            })
        })
        .collect()
}

/// `analyze --type T --weight w`: the full orbit pipeline.
pub fn run_analyze(type_str: &str, weight_str: &str) -> Result<OrbitReport> {
    let cartan_type: CartanType = type_str.parse()?;
    let coords = parse_rational_vector("weight", weight_str)?;
    let rs = RootSystem::build(cartan_type);
    let od = OrbitDatum::new(&rs, RationalWeight(coords.clone()))?;
    let cg = compute_center(&rs);
    let table = kappa_on_center(&od, &cg)?;
    let st = od.stabilizer();
    Ok(OrbitReport {
        input: InputEcho {
            cartan_type: rs.cartan_type().to_string(),
            weight: coords.iter().map(|c| c.to_string()).collect(),
        },
        quantizable: true,
        regular: st.regular,
        levi_type: st.levi_type.to_string(),
        torus_rank: st.torus_rank,
        orbit_dimension: od.symplectic_dimension(),
        center_order: cg.order(),
        elementary_divisors: cg.elementary_divisors(),
        kappa: table
            .entries
            .iter()
            .map(|(z, v)| KappaEntry {
                element: z.coords().to_vec(),
                phase: (*v).into(),
            })
            .collect(),
        injective: table.injective,
        image_size: table.image_size,
        pi1_lower_bound: table.pi1_lower_bound,
        bound_provenance: table.provenance.to_string(),
    })
}

/// `center --type T`: the center table.
pub fn run_center(type_str: &str) -> Result<CenterReport> {
    let cartan_type: CartanType = type_str.parse()?;
    let rs = RootSystem::build(cartan_type);
    let cg = compute_center(&rs);
    Ok(CenterReport {
        cartan_type: rs.cartan_type().to_string(),
        order: cg.order(),
        elementary_divisors: cg.elementary_divisors(),
        generators: cg
            .generators()
            .iter()
            .map(|z| z.coords().to_vec())
            .collect(),
        elements: cg.elements().iter().map(|z| z.coords().to_vec()).collect(),
    })
}

/// `sun --n N --partition q --m m`: the closed-form block computation.
pub fn run_sun(n: usize, partition_str: &str, m_str: &str) -> Result<SunReport> {
    let q = parse_usize_vector("partition", partition_str)?;
    let m = parse_i64_vector("m", m_str)?;
    let spec = SunOrbitSpec::new(n, q, m)?;
    sun_report(&spec)
}

fn sun_report(spec: &SunOrbitSpec) -> Result<SunReport> {
    let bound = spec.pi1_bound();
    let provenance = if bound.paper_theorem {
        "paper_theorem"
    } else if bound.bound > 1 {
        "derived_image_size"
    } else {
        "trivial"
    };
    Ok(SunReport {
        n: spec.n(),
        partition: spec.q().to_vec(),
        m: spec.m().to_vec(),
        q_dot_m: narrow(spec.q_dot_m())?,
        gcd: bound.gcd,
        pi1_lower_bound: bound.bound,
        paper_theorem_applies: bound.paper_theorem,
        bound_provenance: provenance.to_string(),
        kappa: (0..spec.n() as i64)
            .map(|a| SunKappaEntry {
                a,
                phase: spec.kappa_closed_form(a).into(),
            })
            .collect(),
    })
}

/// `sun --n N --sweep`: every spec with coefficients in the box.
pub fn run_sun_sweep(n: usize, m_bound: i64) -> Result<Vec<SweepRow>> {
    if n < 2 {
        return Err(Error::InvalidPartition {
            n,
            reason: "n must be at least 2".into(),
        });
    }
    if m_bound < 0 {
        return Err(Error::Parse {
            field: "m-bound",
            text: m_bound.to_string(),
        });
    }
    let mut rows = Vec::new();
    let mut overflow = None;
    sweep_for_each(n, m_bound, |spec, bound| match narrow(spec.q_dot_m()) {
        Ok(dot) => rows.push(SweepRow {
            q: spec.q().to_vec(),
            m: spec.m().to_vec(),
            q_dot_m: dot,
            gcd: bound.gcd,
            bound: bound.bound,
            paper_theorem_applies: bound.paper_theorem,
        }),
        Err(e) => overflow = Some(e),
    });
    match overflow {
        Some(e) => Err(e),
        None => Ok(rows),
    }
}

/// `verify-s2 --m M`: quadrature verification of the action formula on
/// the sphere, compared against the algebraic value from the A1 pipeline.
pub fn run_verify_s2(m: i64, points: usize, resolution: usize) -> Result<VerifyS2Report> {
    let orbit = SphereOrbit::new(m)?;
    let lp = RotationLoop::new(1, resolution)?;
    let sweep = base_point_sweep(&orbit, &lp, points)?;

    // Algebraic route: the sphere with exponent m is the SU(2) orbit of
    // the block spec (q, m) = ((1), (m)); κ at the endpoint -I.
    let spec = SunOrbitSpec::new(2, vec![1], vec![m])?;
    let rs = RootSystem::build("A1".parse()?);
    let cg = compute_center(&rs);
    let od = OrbitDatum::new(&rs, spec.to_weight())?;
    let table = kappa_on_center(&od, &cg)?;
    let z = spec.center_element(&cg, 1);
    let algebraic = *table.value(&z).expect("nontrivial element is in the table");

    let algebraic_deviation = sweep
        .kappas
        .iter()
        .map(|k| (k - algebraic.to_complex()).norm())
        .fold(0.0f64, f64::max);

    let cap_choice_deviation = [0.35f64, 1.2, 2.4]
        .iter()
        .map(|&theta| {
            let x = [theta.sin(), 0.0, theta.cos()];
            let a = action_with_cap(&orbit, &lp, &x, CapChoice::OrientationPositive)
                .expect("sample point is on the sphere");
            let b = action_with_cap(&orbit, &lp, &x, CapChoice::Complement)
                .expect("sample point is on the sphere");
            (a.kappa - b.kappa).norm()
        })
        .fold(0.0f64, f64::max);

    Ok(VerifyS2Report {
        m,
        points,
        resolution,
        kappa_numeric: [sweep.common.re, sweep.common.im],
        kappa_algebraic_phase: algebraic.into(),
        max_deviation: sweep.max_pairwise_deviation,
        algebraic_deviation,
        normalization_residual: orbit.normalization_residual(resolution),
        cap_choice_deviation,
    })
}

fn narrow(x: i128) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::Parse {
        field: "q·m",
        text: x.to_string(),
    })
}

/// Plain-text rendering.
pub trait Table {
    fn to_table(&self) -> String;
}

impl Table for OrbitReport {
    fn to_table(&self) -> String {
        let mut out = String::new();
        let kappa_line = self
            .kappa
            .iter()
            .map(|e| format!("{:?} -> {}/{}", e.element, e.phase.num, e.phase.den))
            .collect::<Vec<_>>()
            .join("   ");
        out.push_str(&format!("type:             {}\n", self.input.cartan_type));
        out.push_str(&format!(
            "weight:           ({})\n",
            self.input.weight.join(",")
        ));
        out.push_str(&format!("quantizable:      {}\n", self.quantizable));
        out.push_str(&format!("regular:          {}\n", self.regular));
        out.push_str(&format!("levi type:        {}\n", self.levi_type));
        out.push_str(&format!("torus rank:       {}\n", self.torus_rank));
        out.push_str(&format!("orbit dimension:  {}\n", self.orbit_dimension));
        out.push_str(&format!("center order:     {}\n", self.center_order));
        out.push_str(&format!(
            "divisors:         {:?}\n",
            self.elementary_divisors
        ));
        out.push_str(&format!("kappa phases:     {kappa_line}\n"));
        out.push_str(&format!("injective:        {}\n", self.injective));
        out.push_str(&format!(
            "pi1 lower bound:  {}  ({})\n",
            self.pi1_lower_bound, self.bound_provenance
        ));
        out
    }
}

impl Table for CenterReport {
    fn to_table(&self) -> String {
        format!(
            "type:       {}\norder:      {}\ndivisors:   {:?}\ngenerators: {:?}\nelements:   {:?}\n",
            self.cartan_type, self.order, self.elementary_divisors, self.generators, self.elements
        )
    }
}

impl Table for SunReport {
    fn to_table(&self) -> String {
        let kappa_line = self
            .kappa
            .iter()
            .map(|e| format!("a={} -> {}/{}", e.a, e.phase.num, e.phase.den))
            .collect::<Vec<_>>()
            .join("   ");
        format!(
            "n:               {}\npartition:       {:?}\nm:               {:?}\nq·m:             {}\ngcd(q·m, n):     {}\npi1 lower bound: {}  ({})\nkappa phases:    {}\n",
            self.n,
            self.partition,
            self.m,
            self.q_dot_m,
            self.gcd,
            self.pi1_lower_bound,
            self.bound_provenance,
            kappa_line
        )
    }
}

impl Table for Vec<SweepRow> {
    fn to_table(&self) -> String {
        let mut out = String::from("q | m | q·m | gcd | bound | paper_theorem\n");
        for row in self {
            out.push_str(&format!(
                "{:?} | {:?} | {} | {} | {} | {}\n",
                row.q, row.m, row.q_dot_m, row.gcd, row.bound, row.paper_theorem_applies
            ));
        }
        out
    }
}

impl Table for VerifyS2Report {
    fn to_table(&self) -> String {
        format!(
            "m:                      {}\npoints:                 {}\nresolution:             {}\nkappa (numeric):        {:+.12} {:+.12}i\nkappa (algebraic):      phase {}/{}\nmax pairwise deviation: {:.3e}\nalgebraic deviation:    {:.3e}\nnormalization residual: {:.3e}\ncap-choice deviation:   {:.3e}\n",
            self.m,
            self.points,
            self.resolution,
            self.kappa_numeric[0],
            self.kappa_numeric[1],
            self.kappa_algebraic_phase.num,
            self.kappa_algebraic_phase.den,
            self.max_deviation,
            self.algebraic_deviation,
            self.normalization_residual,
            self.cap_choice_deviation
        )
    }
}
