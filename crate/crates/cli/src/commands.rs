use std::fmt;

use anticentrifugal::boundstate::{
    coupling_residual, density, density_maximum, normalize_check, one_three_d_bound_energy,
    BoundState, ContactCoupling, DeltaCoupling2D, Dimension,
};
use anticentrifugal::nodes::{family_report, BunchingVerdict, NodeDensityReport};
use anticentrifugal::potentials::EffectivePotential;
use anticentrifugal::radial::{phi2, RadialGrid};
use anticentrifugal::verify::run_all;
use anticentrifugal::CylinderFamily;
use anyhow::Result;
use clap::{Args, ValueEnum};
use serde_json::{json, Map, Value};

use crate::report::{Cell, Report};

/// A user input that fails validation before or during dispatch.
#[derive(Debug)]
pub struct Invalid(pub String);

impl fmt::Display for Invalid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Invalid {}

fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Invalid(msg.into()).into())
}

/// Result of a subcommand. `verified` is false only when a verification
/// suite failed.
pub struct Outcome {
    pub report: Report,
    pub verified: bool,
    /// Lines printed to stderr in CSV mode, where the summary has no place.
    pub notes: Vec<String>,
}

impl Outcome {
    fn ok(report: Report) -> Self {
        Self {
            report,
            verified: true,
            notes: Vec::new(),
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct GridArgs {
    /// Smallest radius
    #[arg(long)]
    pub r_min: Option<f64>,
    /// Largest radius
    #[arg(long)]
    pub r_max: Option<f64>,
    /// Number of grid points, endpoints included
    #[arg(long)]
    pub n_points: Option<usize>,
}

impl GridArgs {
    fn build(&self, default: (f64, f64, usize)) -> Result<RadialGrid<f64>> {
        let r_min = self.r_min.unwrap_or(default.0);
        let r_max = self.r_max.unwrap_or(default.1);
        let n = self.n_points.unwrap_or(default.2);
        if !(r_min > 0.0) {
            return invalid(format!("--r-min must be positive, got {r_min}"));
        }
        Ok(RadialGrid::new(r_min, r_max, n)?)
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum PotentialFamily {
    /// (m² - 1/4)/r²
    Twodim,
    /// l(l+1)/r²
    Threedim,
    /// (N-1)(N-3)/(4r²)
    Ndim,
    /// L²/r²
    Classical,
    /// -1/(4r²)
    Quantum,
}

#[derive(Args, Debug, Clone)]
pub struct PotentialArgs {
    #[arg(long, value_enum)]
    pub family: PotentialFamily,
    /// Angular momentum in two dimensions
    #[arg(long)]
    pub m: Option<u32>,
    /// Angular momentum in three dimensions
    #[arg(long)]
    pub l: Option<u32>,
    /// Space dimension
    #[arg(long = "N")]
    pub n: Option<u32>,
    /// Classical squared angular momentum, in units of ħ²
    #[arg(long = "L2")]
    pub l2: Option<f64>,
    #[command(flatten)]
    pub grid: GridArgs,
}

fn require<T>(value: Option<T>, flag: &str, family: &str) -> Result<T> {
    match value {
        Some(v) => Ok(v),
        None => invalid(format!("--family {family} needs {flag}")),
    }
}

pub fn potential(args: &PotentialArgs) -> Result<Outcome> {
    let given = [
        ("--m", args.m.is_some(), PotentialFamily::Twodim),
        ("--l", args.l.is_some(), PotentialFamily::Threedim),
        ("--N", args.n.is_some(), PotentialFamily::Ndim),
        ("--L2", args.l2.is_some(), PotentialFamily::Classical),
    ];
    for (flag, present, owner) in given {
        if present && owner != args.family {
            return invalid(
                format!("{flag} does not apply to --family {:?}", args.family).to_lowercase(),
            );
        }
    }
    let (spec, name) = match args.family {
        PotentialFamily::Twodim => (
            EffectivePotential::two_dim(require(args.m, "--m", "twodim")?),
            "twodim",
        ),
        PotentialFamily::Threedim => (
            EffectivePotential::three_dim(require(args.l, "--l", "threedim")?),
            "threedim",
        ),
        PotentialFamily::Ndim => (
            EffectivePotential::n_dim(require(args.n, "--N", "ndim")?)?,
            "ndim",
        ),
        PotentialFamily::Classical => (
            EffectivePotential::classical(require(args.l2, "--L2", "classical")?)?,
            "classical",
        ),
        PotentialFamily::Quantum => (EffectivePotential::QuantumAnti, "quantum"),
    };
    let grid = args.grid.build((0.1, 10.0, 100))?;

    let mut report = Report::table("potential", vec!["r", "v"])
        .param("family", name)
        .param("r_min", grid.r_min())
        .param("r_max", grid.r_max())
        .param("n_points", grid.len());
    for r in grid.points() {
        report.rows.push(vec![r.into(), spec.eval(r)?.into()]);
    }
    let mut summary = Map::new();
    summary.insert("potential".into(), Value::from(spec.to_string()));
    summary.insert("numerator".into(), json!(spec.numerator()));
    summary.insert(
        "character".into(),
        Value::from(format!("{:?}", spec.classify())),
    );
    report.summary = Some(summary);
    Ok(Outcome::ok(report))
}

#[derive(Args, Debug, Clone)]
pub struct WavefunctionArgs {
    /// Bound-state wavenumber
    #[arg(long, default_value_t = 1.0)]
    pub k: f64,
    #[command(flatten)]
    pub grid: GridArgs,
}

pub fn wavefunction(args: &WavefunctionArgs) -> Result<Outcome> {
    if !(args.k > 0.0) || !args.k.is_finite() {
        return invalid(format!("--k must be positive, got {}", args.k));
    }
    let grid = args.grid.build((0.01, 5.0, 500))?;
    let points = grid.points();
    let w = density(Dimension::Two, args.k, &points)?;

    let mut report = Report::table("wavefunction", vec!["r", "phi2", "w2"])
        .param("k", args.k)
        .param("r_min", grid.r_min())
        .param("r_max", grid.r_max())
        .param("n_points", grid.len());
    for (r, w2) in w.samples.iter().copied() {
        report
            .rows
            .push(vec![r.into(), phi2(args.k, r)?.into(), w2.into()]);
    }
    let max = density_maximum(&w)?;
    let mut summary = Map::new();
    summary.insert("max_location".into(), json!(max.location));
    summary.insert("max_value".into(), json!(max.value));
    report.summary = Some(summary);
    Ok(Outcome::ok(report))
}

#[derive(Args, Debug, Clone)]
pub struct NodesArgs {
    /// Number of zeros per function
    #[arg(long, default_value_t = anticentrifugal::nodes::DEFAULT_N_MAX)]
    pub n_max: usize,
}

fn verdict_json(v: &BunchingVerdict<f64>) -> Value {
    let checks: Map<String, Value> = v
        .checks
        .iter()
        .map(|c| {
            (
                c.name.clone(),
                json!({ "pass": c.pass, "max_violation": c.max_violation }),
            )
        })
        .collect();
    json!({ "all_pass": v.all_pass, "checks": checks })
}

pub fn nodes(args: &NodesArgs) -> Result<Outcome> {
    if args.n_max < 2 {
        return invalid(format!("--n-max must be at least 2, got {}", args.n_max));
    }
    let (j0, j1, jv) = family_report::<f64>(CylinderFamily::BesselJ, args.n_max)?;
    let (y0, y1, yv) = family_report::<f64>(CylinderFamily::NeumannY, args.n_max)?;
    let tables: [&NodeDensityReport<f64>; 4] = [&j0, &y0, &j1, &y1];

    let mut report = Report::table(
        "nodes",
        vec![
            "n", "delta_j0", "g_j0", "delta_y0", "g_y0", "delta_j1", "g_j1", "delta_y1", "g_y1",
        ],
    )
    .param("n_max", args.n_max);
    for i in 0..args.n_max - 1 {
        let mut row = vec![Cell::Int(i as i64 + 1)];
        for t in tables {
            row.push(t.deltas[i].into());
            row.push(t.densities[i].into());
        }
        report.rows.push(row);
    }
    let mut verdicts = Map::new();
    verdicts.insert("J".into(), verdict_json(&jv));
    verdicts.insert("Y".into(), verdict_json(&yv));
    let mut summary = Map::new();
    summary.insert("verdict".into(), Value::Object(verdicts));
    report.summary = Some(summary);

    let notes = [("J", &jv), ("Y", &yv)]
        .iter()
        .map(|(name, v)| {
            format!(
                "verdict {name}: {} (max violation {:e})",
                if v.all_pass {
                    "bunching confirmed"
                } else {
                    "violated"
                },
                v.max_violation()
            )
        })
        .collect();
    Ok(Outcome {
        report,
        verified: true,
        notes,
    })
}

#[derive(Args, Debug, Clone)]
pub struct BoundstateArgs {
    /// Space dimension: 1, 2 or 3
    #[arg(long = "N", default_value_t = 2)]
    pub n: u32,
    /// Bound-state wavenumber (the inverse scattering length for N = 3)
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<f64>,
    /// Delta coupling strength (N = 1, 2)
    #[arg(long, allow_hyphen_values = true)]
    pub u0: Option<f64>,
    /// Momentum cutoff (N = 2), default 1
    #[arg(long)]
    pub lambda: Option<f64>,
}

pub fn boundstate(args: &BoundstateArgs) -> Result<Outcome> {
    let dim = Dimension::from_n(args.n)?;
    if args.k.is_some() && args.u0.is_some() {
        return invalid("give either --k or --u0, not both");
    }
    if args.lambda.is_some() && dim != Dimension::Two {
        return invalid("--lambda applies to N = 2 only");
    }
    let k_arg = args.k.unwrap_or(1.0);
    let (state, u0, lambda): (BoundState<f64>, Option<f64>, Option<f64>) = match dim {
        Dimension::One => match args.u0 {
            Some(u0) => (
                one_three_d_bound_energy(ContactCoupling::OneDim { u0 })?,
                Some(u0),
                None,
            ),
            None => (
                one_three_d_bound_energy(ContactCoupling::OneDim { u0: -2.0 * k_arg })?,
                Some(-2.0 * k_arg),
                None,
            ),
        },
        Dimension::Two => {
            let cutoff = args.lambda.unwrap_or(1.0);
            let c = match args.u0 {
                Some(u0) => DeltaCoupling2D::from_coupling(u0, cutoff)?,
                None => DeltaCoupling2D::from_k(k_arg, cutoff)?,
            };
            (c.bound_state()?, Some(c.u0), Some(cutoff))
        }
        Dimension::Three => {
            if args.u0.is_some() {
                return invalid("N = 3 is set by --k (the inverse scattering length), not --u0");
            }
            let state = one_three_d_bound_energy(ContactCoupling::ThreeDim {
                inverse_scattering_length: k_arg,
            })?;
            (state, None, None)
        }
    };

    let w = density(dim, state.k, &[])?;
    let norm = normalize_check(&w)?;
    let max = density_maximum(&w)?;
    let residual = match (u0, lambda) {
        (Some(u0), Some(cutoff)) => Some(coupling_residual(u0, state.k, cutoff)?),
        _ => None,
    };

    let mut report = Report::table(
        "boundstate",
        vec![
            "dimension",
            "k",
            "energy",
            "u0",
            "lambda",
            "normalization",
            "tail_warning",
            "max_location",
            "max_value",
            "first_order_residual",
            "coupling_residual",
        ],
    )
    .param("N", args.n)
    .param("k", args.k)
    .param("u0", args.u0)
    .param("lambda", args.lambda);
    report.record = true;
    report.rows.push(vec![
        Cell::Int(dim.n() as i64),
        state.k.into(),
        state.energy.into(),
        u0.into(),
        lambda.into(),
        norm.integral.into(),
        norm.tail_exceeds_tolerance.into(),
        max.location.into(),
        max.value.into(),
        max.first_order_residual.into(),
        residual.into(),
    ]);
    Ok(Outcome::ok(report))
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    /// Multiplier applied to every suite tolerance
    #[arg(long, default_value_t = 1.0)]
    pub tolerance_scale: f64,
}

pub fn verify(args: &VerifyArgs) -> Result<Outcome> {
    if !(args.tolerance_scale >= 0.0) || !args.tolerance_scale.is_finite() {
        return invalid(format!(
            "--tolerance-scale must be finite and >= 0, got {}",
            args.tolerance_scale
        ));
    }
    let result = run_all(args.tolerance_scale)?;
    let mut report = Report::table("verify", vec!["suite", "max_error", "tolerance", "pass"])
        .param("tolerance_scale", args.tolerance_scale);
    for s in &result.suites {
        report.rows.push(vec![
            s.name.as_str().into(),
            s.max_error.into(),
            s.tolerance.into(),
            s.pass.into(),
        ]);
    }
    let mut summary = Map::new();
    summary.insert("all_pass".into(), Value::from(result.all_pass));
    summary.insert(
        "failed".into(),
        result
            .suites
            .iter()
            .filter(|s| !s.pass)
            .map(|s| Value::from(s.name.as_str()))
            .collect(),
    );
    report.summary = Some(summary);
    let failed = result.suites.iter().filter(|s| !s.pass).count();
    Ok(Outcome {
        report,
        verified: result.all_pass,
        notes: vec![format!(
            "{} of {} suites passed",
            result.suites.len() - failed,
            result.suites.len()
        )],
    })
}
