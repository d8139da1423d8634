//! Self-checks of the numerical identities the toolkit relies on.
//!
//! Every suite reports the largest error it observed against a tolerance.
//! Tolerances are multiplied by a caller-supplied scale, so a scale of `0`
//! turns every suite with a nonzero error into a failure.

use serde::{Deserialize, Serialize};

use crate::boundstate::{
    coupling_from_k, coupling_residual, density, density_at, density_maximum, k_from_coupling,
    k_from_coupling_numeric, normalize_check, slope_sign_changes, Dimension,
};
use crate::error::Result;
use crate::nodes::family_report;
use crate::potentials::{Character, EffectivePotential};
use crate::radial::{
    analytic_radial, integrate_radial, ode_residual, Direction, RadialGrid, RadialWave, Seeds,
    SolutionFamily,
};
use crate::specfun::{sommerfeld_j0, CylinderFamily, CylinderKind};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub name: String,
    pub max_error: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl SuiteResult {
    fn new(name: &str, max_error: f64, tolerance: f64, scale: f64) -> Self {
        let tolerance = tolerance * scale;
        Self {
            name: name.to_string(),
            max_error,
            tolerance,
            pass: max_error <= tolerance,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub tolerance_scale: f64,
    pub all_pass: bool,
    pub suites: Vec<SuiteResult>,
}

/// Points where Wronskians are checked.
pub const WRONSKIAN_POINTS: usize = 1000;
pub const WRONSKIAN_RANGE: (f64, f64) = (0.1, 50.0);
pub const SOMMERFELD_POINTS: usize = 256;
pub const SOMMERFELD_ARGUMENTS: usize = 100;
pub const SOMMERFELD_MAX_ARGUMENT: f64 = 20.0;
/// Spacings used to measure the Numerov convergence order.
pub const CONVERGENCE_SPACINGS: [f64; 3] = [4e-3, 2e-3, 1e-3];
pub const CONVERGENCE_RANGE: (f64, f64) = (0.04, 20.04);
/// Grid of the analytic-solution residual check, spacing `1e-3`.
pub const RESIDUAL_RANGE: (f64, f64) = (0.5, 10.0);
pub const NORMALIZATION_WAVENUMBERS: [f64; 4] = [0.5, 1.0, 2.0, 7.0];
pub const COUPLING_RANGE: (f64, f64) = (0.1, 100.0);
pub const COUPLING_COUNT: usize = 20;

fn max_abs(values: impl Iterator<Item = f64>) -> f64 {
    values.fold(0.0, |acc, v| acc.max(v.abs()))
}

fn linspace(a: f64, b: f64, n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |i| a + (b - a) * i as f64 / (n - 1) as f64)
}

/// Fixed quasi-random arguments in `[0, SOMMERFELD_MAX_ARGUMENT]` (additive
/// recurrence with the golden ratio), so runs are reproducible.
pub fn sommerfeld_arguments() -> Vec<f64> {
    let step = (5f64.sqrt() - 1.0) / 2.0;
    (0..SOMMERFELD_ARGUMENTS)
        .map(|i| SOMMERFELD_MAX_ARGUMENT * (i as f64 * step).fract())
        .collect()
}

/// Log-spaced couplings spanning [`COUPLING_RANGE`].
pub fn coupling_samples() -> Vec<f64> {
    let (a, b) = COUPLING_RANGE;
    (0..COUPLING_COUNT)
        .map(|i| a * (b / a).powf(i as f64 / (COUPLING_COUNT - 1) as f64))
        .collect()
}

/// `2∫₀^∞ ξK_0²(ξ) dξ = 1`.
pub fn ring_normalization(scale: f64) -> Result<Vec<SuiteResult>> {
    let n = normalize_check(&density(Dimension::Two, 1.0_f64, &[])?)?;
    Ok(vec![SuiteResult::new(
        "ring_normalization",
        (n.integral - 1.0).abs(),
        1e-8,
        scale,
    )])
}

/// `W[J_m, Y_m](x) = 2/(πx)` and `W[I_m, K_m](x) = -1/x` for `m = 0, 1`, as
/// relative errors.
pub fn wronskians(scale: f64) -> Result<Vec<SuiteResult>> {
    let (a, b) = WRONSKIAN_RANGE;
    let mut jy = 0.0_f64;
    let mut ik = 0.0_f64;
    for m in 0..=1 {
        for x in linspace(a, b, WRONSKIAN_POINTS) {
            let w = CylinderKind::j(m).eval(x)? * CylinderKind::y(m).derivative(x)?
                - CylinderKind::j(m).derivative(x)? * CylinderKind::y(m).eval(x)?;
            jy = jy.max((w * std::f64::consts::FRAC_PI_2 * x - 1.0).abs());
            let w = CylinderKind::i(m).eval(x)? * CylinderKind::k(m).derivative(x)?
                - CylinderKind::i(m).derivative(x)? * CylinderKind::k(m).eval(x)?;
            ik = ik.max((w * x + 1.0).abs());
        }
    }
    Ok(vec![
        SuiteResult::new("wronskian_jy", jy, 1e-10, scale),
        SuiteResult::new("wronskian_ik", ik, 1e-10, scale),
    ])
}

/// Trapezoidal angular average of `e^{ix cos θ}` against the series `J_0(x)`.
pub fn sommerfeld(scale: f64) -> Result<Vec<SuiteResult>> {
    let mut err = 0.0_f64;
    for x in sommerfeld_arguments() {
        let z = sommerfeld_j0(x, SOMMERFELD_POINTS)?;
        let j0: f64 = CylinderKind::j(0).eval(x)?;
        err = err.max((z.re - j0).abs()).max(z.im.abs());
    }
    Ok(vec![SuiteResult::new("sommerfeld_j0", err, 1e-10, scale)])
}

fn numerov_against(
    family: SolutionFamily,
    direction: Direction,
    grid: &RadialGrid<f64>,
) -> Result<(RadialWave<f64>, RadialWave<f64>)> {
    let energy = if family == SolutionFamily::K {
        -0.5
    } else {
        0.5
    };
    let exact = analytic_radial(family, 0, 1.0, grid)?;
    let numeric = integrate_radial(
        &EffectivePotential::QuantumAnti,
        energy,
        grid,
        Seeds::from_wave(&exact, direction),
    )?;
    Ok((exact, numeric))
}

/// Least-squares slope of `ln error` against `ln h`.
pub fn observed_order(spacings: &[f64], errors: &[f64]) -> f64 {
    let xs: Vec<f64> = spacings.iter().map(|h| h.ln()).collect();
    let ys: Vec<f64> = errors.iter().map(|e| e.ln()).collect();
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let num: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let den: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    num / den
}

/// Numerov convergence order for `K_0` inward and `J_0` outward at `k = 1`.
pub fn convergence_orders() -> Result<(f64, f64)> {
    let (a, b) = CONVERGENCE_RANGE;
    let mut k_err = Vec::new();
    let mut j_err = Vec::new();
    for h in CONVERGENCE_SPACINGS {
        let grid = RadialGrid::with_spacing(a, b, h)?;
        let (exact, numeric) = numerov_against(SolutionFamily::K, Direction::Inward, &grid)?;
        k_err.push(numeric.max_relative_deviation(&exact));
        let (exact, numeric) = numerov_against(SolutionFamily::J, Direction::Outward, &grid)?;
        j_err.push(numeric.scaled_deviation(&exact));
    }
    Ok((
        observed_order(&CONVERGENCE_SPACINGS, &k_err),
        observed_order(&CONVERGENCE_SPACINGS, &j_err),
    ))
}

/// Numerov against analytic waves, residuals of analytic waves, and the
/// convergence order.
pub fn radial_ode(scale: f64) -> Result<Vec<SuiteResult>> {
    let grid = RadialGrid::default_for(1.0_f64)?;
    let (exact, numeric) = numerov_against(SolutionFamily::K, Direction::Inward, &grid)?;
    let k0 = numeric.max_relative_deviation(&exact);
    let (exact, numeric) = numerov_against(SolutionFamily::J, Direction::Outward, &grid)?;
    let j0 = numeric.scaled_deviation(&exact);

    let residual_grid = RadialGrid::with_spacing(RESIDUAL_RANGE.0, RESIDUAL_RANGE.1, 1e-3)?;
    let mut residual = 0.0_f64;
    for (family, m, energy) in [
        (SolutionFamily::J, 0, 0.5),
        (SolutionFamily::Y, 0, 0.5),
        (SolutionFamily::K, 0, -0.5),
        (SolutionFamily::J, 1, 0.5),
        (SolutionFamily::Y, 1, 0.5),
    ] {
        let wave = analytic_radial(family, m, 1.0, &residual_grid)?;
        residual = residual.max(ode_residual(
            &wave,
            &EffectivePotential::two_dim(m),
            energy,
        )?);
    }

    let (pk, pj) = convergence_orders()?;
    Ok(vec![
        SuiteResult::new("numerov_k0_inward", k0, 1e-6, scale),
        SuiteResult::new("numerov_j0_outward", j0, 1e-6, scale),
        SuiteResult::new("analytic_residual", residual, 1e-5, scale),
        SuiteResult::new(
            "numerov_order",
            max_abs([pk - 4.0, pj - 4.0].into_iter()),
            0.2,
            scale,
        ),
    ])
}

/// Densities: normalisations, the ring maximum, maxima at the origin for
/// `N = 1, 3`, node at the origin and unimodality in two dimensions.
pub fn bound_state_geometry(scale: f64) -> Result<Vec<SuiteResult>> {
    let mut norm = 0.0_f64;
    for dim in [Dimension::One, Dimension::Two, Dimension::Three] {
        for k in NORMALIZATION_WAVENUMBERS {
            let n = normalize_check(&density(dim, k, &[])?)?;
            norm = norm.max((n.integral - 1.0).abs());
        }
    }

    let ring = density_maximum(&density(Dimension::Two, 1.0_f64, &[])?)?;
    let foc = ring.first_order_residual.unwrap_or(f64::INFINITY);

    let mut violations = 0usize;
    if !(ring.location > 0.0) {
        violations += 1;
    }
    for dim in [Dimension::One, Dimension::Three] {
        let max = density_maximum(&density(dim, 1.0_f64, &[])?)?;
        let beside = density_at(dim, 1.0, 1e-6)?;
        if max.location != 0.0 || beside >= max.value {
            violations += 1;
        }
    }
    if density_at(Dimension::Two, 1.0_f64, 0.0)? != 0.0 {
        violations += 1;
    }
    let near: Vec<f64> = [1e-3, 1e-6, 1e-9, 1e-12]
        .iter()
        .map(|&r| density_at(Dimension::Two, 1.0, r))
        .collect::<Result<_>>()?;
    if !near.windows(2).all(|w| w[1] < w[0]) {
        violations += 1;
    }
    let samples: Vec<f64> = (1..=20_000)
        .map(|i| density_at(Dimension::Two, 1.0, i as f64 * 1e-3))
        .collect::<Result<_>>()?;
    if slope_sign_changes(&samples) != 1 {
        violations += 1;
    }

    Ok(vec![
        SuiteResult::new("density_normalization", norm, 1e-8, scale),
        SuiteResult::new("ring_first_order_condition", foc, 1e-10, scale),
        SuiteResult::new("density_shape", violations as f64, 0.0, scale),
    ])
}

/// Closed-form `k(U_0)` against the root of the quadrature-evaluated cutoff
/// integral, the `k ↔ U_0` roundtrip and the bound-state residual, at `Λ = 1`.
pub fn coupling_relation(scale: f64) -> Result<Vec<SuiteResult>> {
    let cutoff = 1.0_f64;
    let mut agreement = 0.0_f64;
    let mut roundtrip = 0.0_f64;
    let mut residual = 0.0_f64;
    for u0 in coupling_samples() {
        let k = k_from_coupling(u0, cutoff)?;
        let numeric = k_from_coupling_numeric(u0, cutoff)?;
        agreement = agreement.max(((numeric - k) / k).abs());
        roundtrip = roundtrip.max(((coupling_from_k(k, cutoff)? - u0) / u0).abs());
        residual = residual.max(coupling_residual(u0, k, cutoff)?.abs());
    }
    Ok(vec![
        SuiteResult::new("coupling_closed_vs_numeric", agreement, 1e-10, scale),
        SuiteResult::new("coupling_roundtrip", roundtrip, 1e-12, scale),
        SuiteResult::new("coupling_residual", residual, 1e-10, scale),
    ])
}

/// Bunching verdicts for `J` and `Y` with `n ≤ 20`, spacing `Δ_m(50) → π`, and
/// the stronger order-0 bunching of `Y` at `n = 1`.
pub fn bunching(scale: f64) -> Result<Vec<SuiteResult>> {
    let (j0, _, jv) = family_report::<f64>(CylinderFamily::BesselJ, 20)?;
    let (y0, _, yv) = family_report::<f64>(CylinderFamily::NeumannY, 20)?;
    let verdict = jv.max_violation().max(yv.max_violation());
    let ordering = (j0.densities[0] - y0.densities[0]).max(0.0);

    let mut far = 0.0_f64;
    for family in [CylinderFamily::BesselJ, CylinderFamily::NeumannY] {
        let (r0, r1, _) = family_report::<f64>(family, 51)?;
        far = far
            .max((r0.deltas[49] - std::f64::consts::PI).abs())
            .max((r1.deltas[49] - std::f64::consts::PI).abs());
    }

    Ok(vec![
        SuiteResult::new("bunching_verdict", verdict, 0.0, scale),
        SuiteResult::new("neumann_bunching_stronger", ordering, 0.0, scale),
        SuiteResult::new("spacing_at_n50", far, 1e-3, scale),
    ])
}

/// `classify` of the zero-momentum `N`-dimensional potential for `N = 1 … 20`.
pub fn dimension_sweep(scale: f64) -> Result<Vec<SuiteResult>> {
    let mut mismatches = 0usize;
    for n in 1..=20 {
        let expected = match n {
            1 | 3 => Character::Vanishing,
            2 => Character::Attractive,
            _ => Character::Repulsive,
        };
        if EffectivePotential::<f64>::n_dim(n)?.classify() != expected {
            mismatches += 1;
        }
    }
    Ok(vec![SuiteResult::new(
        "dimension_sweep",
        mismatches as f64,
        0.0,
        scale,
    )])
}

type SuiteGroup = fn(f64) -> Result<Vec<SuiteResult>>;

/// Every suite, in a fixed order.
pub fn run_all(tolerance_scale: f64) -> Result<VerifyReport> {
    let groups: [SuiteGroup; 8] = [
        ring_normalization,
        wronskians,
        sommerfeld,
        bunching,
        radial_ode,
        bound_state_geometry,
        coupling_relation,
        dimension_sweep,
    ];
    let mut suites = Vec::new();
    for group in groups {
        suites.extend(group(tolerance_scale)?);
    }
    Ok(VerifyReport {
        tolerance_scale,
        all_pass: suites.iter().all(|s| s.pass),
        suites,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_run_passes() {
        let report = run_all(1.0).unwrap();
        for s in &report.suites {
            assert!(s.pass, "{s:?}");
        }
        assert!(report.all_pass);
    }

    #[test]
    fn zero_scale_fails() {
        let report = run_all(0.0).unwrap();
        assert!(!report.all_pass);
        assert!(report
            .suites
            .iter()
            .any(|s| s.name == "wronskian_jy" && !s.pass));
    }

    #[test]
    fn arguments_cover_range() {
        let xs = sommerfeld_arguments();
        assert_eq!(xs.len(), 100);
        assert!(xs.iter().all(|&x| (0.0..=20.0).contains(&x)));
        assert!(xs.iter().any(|&x| x < 1.0) && xs.iter().any(|&x| x > 19.0));
        let us = coupling_samples();
        assert!((us[0] - 0.1).abs() < 1e-15 && (us[19] - 100.0).abs() < 1e-12);
    }

    #[test]
    fn order_of_exact_power_law() {
        let hs = [0.4, 0.2, 0.1];
        let es: Vec<f64> = hs.iter().map(|h: &f64| 3.0 * h.powi(4)).collect();
        assert!((observed_order(&hs, &es) - 4.0).abs() < 1e-12);
    }
}
