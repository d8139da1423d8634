//! Zeros of `J_m` and `Y_m`, their spacings and the normalised node density
//! `g_m(n) = π / Δ_m(n)`.
//!
//! `g > 1` means the nodes are packed tighter than the free-space spacing `π`
//! (bunching), `g < 1` means they are spread out (anti-bunching).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::roots::{bisect, secant};
use crate::scalar::{int, lit, Scalar};
use crate::specfun::{eval_cylinder, CylinderFamily, CylinderKind};

/// Step of the sign-change scan. Neighbouring zeros of order-0/1 cylinder
/// functions are more than 2 apart, so no bracket is skipped.
pub const SCAN_STEP: f64 = 0.1;

/// Absolute width at which bisection stops.
pub const ZERO_TOLERANCE: f64 = 1e-12;

pub const DEFAULT_N_MAX: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Refinement {
    Bisection,
    Secant,
}

/// First positive zeros `z_1 < z_2 < …` of a `J_m` or `Y_m`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZeroTable<T> {
    pub kind: CylinderKind,
    pub zeros: Vec<T>,
}

impl<T: Scalar> ZeroTable<T> {
    pub fn order(&self) -> u32 {
        self.kind.order
    }

    pub fn n_max(&self) -> usize {
        self.zeros.len()
    }

    /// `z_n < z'_n < z_{n+1}` where `z'` are the zeros of `other`, for every `n`
    /// covered by both tables.
    pub fn interlaces_with(&self, other: &ZeroTable<T>) -> bool {
        self.zeros
            .windows(2)
            .zip(&other.zeros)
            .all(|(pair, &z)| pair[0] < z && z < pair[1])
    }
}

fn check_kind(kind: CylinderKind) -> Result<()> {
    match kind.family {
        CylinderFamily::BesselJ | CylinderFamily::NeumannY if kind.order <= 1 => Ok(()),
        CylinderFamily::BesselJ | CylinderFamily::NeumannY => Err(Error::InvalidInput(format!(
            "zero tables cover orders 0 and 1, got {kind}"
        ))),
        _ => Err(Error::InvalidInput(format!(
            "{kind} has no zeros on the positive axis"
        ))),
    }
}

/// First `n_max` positive zeros of `kind`, bracketed by a sign-change scan and
/// refined by bisection.
pub fn find_zeros<T: Scalar>(kind: CylinderKind, n_max: usize) -> Result<ZeroTable<T>> {
    find_zeros_with(kind, n_max, Refinement::Bisection)
}

pub fn find_zeros_with<T: Scalar>(
    kind: CylinderKind,
    n_max: usize,
    refinement: Refinement,
) -> Result<ZeroTable<T>> {
    check_kind(kind)?;
    if n_max == 0 {
        return Err(Error::InvalidInput("n_max must be at least 1".into()));
    }
    let step = lit::<T>(SCAN_STEP);
    let tol = lit::<T>(ZERO_TOLERANCE);
    let f = |x: T| eval_cylinder(kind, x);
    // every zero below this has been passed once n_max zeros are found
    let limit =
        lit::<T>(SCAN_STEP) * int(((n_max as f64 + 5.0) * std::f64::consts::PI / SCAN_STEP) as i64);

    let mut zeros = Vec::with_capacity(n_max);
    let mut i: i64 = if kind.family == CylinderFamily::NeumannY {
        1
    } else {
        0
    };
    let mut x_prev = step * int(i);
    let mut f_prev = f(x_prev)?;
    // J_m(0) = 0 for m >= 1 is not a positive zero
    if f_prev == T::zero() {
        i += 1;
        x_prev = step * int(i);
        f_prev = f(x_prev)?;
    }
    while zeros.len() < n_max {
        i += 1;
        let x = step * int(i);
        if x > limit {
            return Err(Error::BracketFailure(format!(
                "found {} of {n_max} zeros of {kind} below {limit}",
                zeros.len()
            )));
        }
        let fx = f(x)?;
        if fx == T::zero() || fx.signum() != f_prev.signum() {
            let z = match refinement {
                Refinement::Bisection => bisect(f, x_prev, x, tol)?,
                Refinement::Secant => secant(f, x_prev, x, tol)?,
            };
            zeros.push(z);
            if fx == T::zero() {
                // step past the exact zero so it is not bracketed twice
                i += 1;
                x_prev = step * int(i);
                f_prev = f(x_prev)?;
                continue;
            }
        }
        x_prev = x;
        f_prev = fx;
    }

    let two = lit::<T>(2.0);
    if let Some(bad) = zeros
        .windows(2)
        .find(|w| !(w[1] - w[0] > two && w[1] - w[0] < T::TAU()))
    {
        return Err(Error::BracketFailure(format!(
            "zeros {} and {} of {kind} violate the spacing bounds (2, 2π)",
            bad[0], bad[1]
        )));
    }
    Ok(ZeroTable { kind, zeros })
}

/// Spacings `Δ(n) = z_{n+1} - z_n` and densities `g(n) = π / Δ(n)`, `n = 1 … n_max-1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NodeDensityReport<T> {
    pub table: ZeroTable<T>,
    pub deltas: Vec<T>,
    pub densities: Vec<T>,
}

pub fn node_density<T: Scalar>(table: ZeroTable<T>) -> Result<NodeDensityReport<T>> {
    if table.zeros.len() < 2 {
        return Err(Error::InvalidInput(format!(
            "node density needs at least 2 zeros, got {}",
            table.zeros.len()
        )));
    }
    let deltas: Vec<T> = table.zeros.windows(2).map(|w| w[1] - w[0]).collect();
    let densities = deltas.iter().map(|&d| T::PI() / d).collect();
    Ok(NodeDensityReport {
        table,
        deltas,
        densities,
    })
}

/// One named assertion of the verdict. `max_violation` is zero when it holds.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerdictCheck<T> {
    pub name: String,
    pub pass: bool,
    pub max_violation: T,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BunchingVerdict<T> {
    pub family: CylinderFamily,
    pub all_pass: bool,
    pub checks: Vec<VerdictCheck<T>>,
}

impl<T: Scalar> BunchingVerdict<T> {
    pub fn max_violation(&self) -> T {
        self.checks
            .iter()
            .fold(T::zero(), |acc, c| acc.max(c.max_violation))
    }
}

fn check<T: Scalar>(name: &str, violations: impl Iterator<Item = T>) -> VerdictCheck<T> {
    let max_violation = violations.fold(T::zero(), |acc, v| acc.max(v));
    VerdictCheck {
        name: name.to_string(),
        pass: max_violation <= T::zero(),
        max_violation,
    }
}

/// Bunching for order 0 (`g_0 > 1`, decreasing towards 1) and anti-bunching for
/// order 1 (`g_1 < 1`, increasing towards 1). Failures are reported in the
/// verdict, not as errors.
pub fn bunching_verdict<T: Scalar>(
    order0: &NodeDensityReport<T>,
    order1: &NodeDensityReport<T>,
) -> Result<BunchingVerdict<T>> {
    let family = order0.table.kind.family;
    if order1.table.kind.family != family {
        return Err(Error::InvalidInput(format!(
            "verdict compares one family, got {} and {}",
            order0.table.kind, order1.table.kind
        )));
    }
    if order0.table.order() != 0 || order1.table.order() != 1 {
        return Err(Error::InvalidInput(format!(
            "verdict needs orders 0 and 1, got {} and {}",
            order0.table.kind, order1.table.kind
        )));
    }
    let one = T::one();
    let g0 = &order0.densities;
    let g1 = &order1.densities;
    let checks = vec![
        check("order0_density_above_one", g0.iter().map(|&g| one - g)),
        check("order1_density_below_one", g1.iter().map(|&g| g - one)),
        check(
            "order0_density_decreasing",
            g0.windows(2).map(|w| w[1] - w[0]),
        ),
        check(
            "order1_density_increasing",
            g1.windows(2).map(|w| w[0] - w[1]),
        ),
    ];
    Ok(BunchingVerdict {
        family,
        all_pass: checks.iter().all(|c| c.pass),
        checks,
    })
}

/// Zero tables, densities and verdict for one family.
pub fn family_report<T: Scalar>(
    family: CylinderFamily,
    n_max: usize,
) -> Result<(
    NodeDensityReport<T>,
    NodeDensityReport<T>,
    BunchingVerdict<T>,
)> {
    let r0 = node_density(find_zeros(CylinderKind::new(family, 0), n_max)?)?;
    let r1 = node_density(find_zeros(CylinderKind::new(family, 1), n_max)?)?;
    let verdict = bunching_verdict(&r0, &r1)?;
    Ok((r0, r1, verdict))
}

#[cfg(test)]
mod tests {
    use super::*;

    // McMahon's expansion: β + 1/(8β) - 4·31/(3(8β)³) with β = (n + m/2 - 1/4)π
    // for J_m (m ≤ 1, μ = 4m²) and β = (n + m/2 - 3/4)π for Y_m.
    fn mcmahon(m: u32, n: usize, neumann: bool) -> f64 {
        let shift = if neumann { 0.75 } else { 0.25 };
        let beta = (n as f64 + m as f64 / 2.0 - shift) * std::f64::consts::PI;
        let mu = 4.0 * (m * m) as f64;
        let b8 = 8.0 * beta;
        beta - (mu - 1.0) / b8 - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * b8.powi(3))
    }

    #[test]
    fn first_zeros() {
        let j0 = find_zeros::<f64>(CylinderKind::j(0), 2).unwrap();
        assert!((j0.zeros[0] - 2.404_825_557_695_773).abs() < 1e-11);
        assert!((j0.zeros[1] - 5.520_078_110_286_311).abs() < 1e-11);
        let j1 = find_zeros::<f64>(CylinderKind::j(1), 1).unwrap();
        assert!((j1.zeros[0] - 3.831_705_970_207_512).abs() < 1e-11);
        let y0 = find_zeros::<f64>(CylinderKind::y(0), 1).unwrap();
        assert!((y0.zeros[0] - 0.893_576_966_279_167_5).abs() < 1e-11);
        assert!(y0.zeros[0] < j0.zeros[0]);
        let y1 = find_zeros::<f64>(CylinderKind::y(1), 1).unwrap();
        assert!((y1.zeros[0] - 2.197_141_326_031_017).abs() < 1e-11);
    }

    #[test]
    fn zeros_follow_mcmahon_asymptotics() {
        for kind in [
            CylinderKind::j(0),
            CylinderKind::j(1),
            CylinderKind::y(0),
            CylinderKind::y(1),
        ] {
            let table = find_zeros::<f64>(kind, 30).unwrap();
            for n in 10..=30 {
                let approx = mcmahon(kind.order, n, kind.family == CylinderFamily::NeumannY);
                assert!((table.zeros[n - 1] - approx).abs() < 1e-7, "{kind} n={n}");
            }
        }
    }

    #[test]
    fn zeros_are_zeros() {
        for kind in [
            CylinderKind::j(0),
            CylinderKind::j(1),
            CylinderKind::y(0),
            CylinderKind::y(1),
        ] {
            let table = find_zeros::<f64>(kind, 51).unwrap();
            for z in table.zeros {
                assert!(kind.eval(z).unwrap().abs() <= 1e-11);
            }
        }
    }

    #[test]
    fn refinements_agree() {
        for kind in [
            CylinderKind::j(0),
            CylinderKind::j(1),
            CylinderKind::y(0),
            CylinderKind::y(1),
        ] {
            let a = find_zeros_with::<f64>(kind, 20, Refinement::Bisection).unwrap();
            let b = find_zeros_with::<f64>(kind, 20, Refinement::Secant).unwrap();
            for (x, y) in a.zeros.iter().zip(&b.zeros) {
                assert!((x - y).abs() <= 1e-10);
            }
        }
    }

    #[test]
    fn interlacing() {
        for family in [CylinderFamily::BesselJ, CylinderFamily::NeumannY] {
            let t0 = find_zeros::<f64>(CylinderKind::new(family, 0), 21).unwrap();
            let t1 = find_zeros::<f64>(CylinderKind::new(family, 1), 20).unwrap();
            assert!(t0.interlaces_with(&t1));
        }
    }

    #[test]
    fn densities() {
        let r = node_density(find_zeros::<f64>(CylinderKind::j(0), 2).unwrap()).unwrap();
        assert!((r.deltas[0] - 3.115_252_552_590_538).abs() < 1e-10);
        assert!((r.densities[0] - 1.008_455_205_654_948).abs() < 1e-10);
        let r = node_density(find_zeros::<f64>(CylinderKind::j(1), 2).unwrap()).unwrap();
        assert!((r.deltas[0] - 3.183_880_699_608_106).abs() < 1e-10);
        assert!((r.densities[0] - 0.986_718_080_855_379).abs() < 1e-10);
        assert!(node_density(find_zeros::<f64>(CylinderKind::j(1), 1).unwrap()).is_err());
    }

    #[test]
    fn verdicts() {
        for family in [CylinderFamily::BesselJ, CylinderFamily::NeumannY] {
            let (_, _, v) = family_report::<f64>(family, 20).unwrap();
            assert!(v.all_pass, "{v:?}");
            assert_eq!(v.max_violation(), 0.0);
            let (_, _, v) = family_report::<f64>(family, 2).unwrap();
            assert!(v.all_pass);
        }
        let (j0, _, _) = family_report::<f64>(CylinderFamily::BesselJ, 2).unwrap();
        let (y0, _, _) = family_report::<f64>(CylinderFamily::NeumannY, 2).unwrap();
        assert!(y0.densities[0] > j0.densities[0]);
    }

    #[test]
    fn swapped_orders_fail_verdict_inputs() {
        let (j0, j1, _) = family_report::<f64>(CylinderFamily::BesselJ, 5).unwrap();
        assert!(bunching_verdict(&j1, &j0).is_err());
        let (y0, _, _) = family_report::<f64>(CylinderFamily::NeumannY, 5).unwrap();
        assert!(bunching_verdict(&y0, &j1).is_err());
    }

    #[test]
    fn violated_verdict_is_reported() {
        let (j0, mut j1, _) = family_report::<f64>(CylinderFamily::BesselJ, 5).unwrap();
        j1.densities[2] = 1.25;
        let v = bunching_verdict(&j0, &j1).unwrap();
        assert!(!v.all_pass);
        let below = v
            .checks
            .iter()
            .find(|c| c.name == "order1_density_below_one")
            .unwrap();
        assert!(!below.pass);
        assert!((below.max_violation - 0.25).abs() < 1e-12);
        assert!(v.max_violation() >= 0.25);
    }

    #[test]
    fn rejects_unsupported_kinds() {
        assert!(find_zeros::<f64>(CylinderKind::k(0), 3).is_err());
        assert!(find_zeros::<f64>(CylinderKind::j(2), 3).is_err());
        assert!(find_zeros::<f64>(CylinderKind::j(0), 0).is_err());
    }
}
