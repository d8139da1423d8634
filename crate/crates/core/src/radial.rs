//! Radial Schrödinger equation `u'' = (V(r) - 2E) u` with `ħ = M = 1`, where
//! `V` is an [`EffectivePotential`] value in units of `ħ²/(2M)`.
//!
//! Analytic solutions are `u(r) = √r · C_m(kr)` with `C` a cylinder function;
//! numerical ones come from the Numerov scheme seeded at the two outermost
//! grid points of the chosen direction.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::potentials::EffectivePotential;
use crate::scalar::{int, lit, Scalar};
use crate::specfun::{eval_cylinder, CylinderFamily, CylinderKind};

/// Uniform grid `r_i = r_min + i·h`, `i = 0 … n_points-1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadialGrid<T> {
    r_min: T,
    r_max: T,
    n_points: usize,
}

impl<T: Scalar> RadialGrid<T> {
    /// `r_min` may be zero here; operations that evaluate a potential or a
    /// function singular at the origin reject such grids themselves.
    pub fn new(r_min: T, r_max: T, n_points: usize) -> Result<Self> {
        if !r_min.is_finite() || !r_max.is_finite() || r_min < T::zero() {
            return Err(Error::InvalidInput(format!(
                "grid bounds must be finite with r_min >= 0, got [{r_min}, {r_max}]"
            )));
        }
        if !(r_max > r_min) {
            return Err(Error::InvalidInput(format!(
                "grid needs r_max > r_min, got [{r_min}, {r_max}]"
            )));
        }
        if n_points < 3 {
            return Err(Error::InvalidInput(format!(
                "grid needs at least 3 points, got {n_points}"
            )));
        }
        Ok(Self {
            r_min,
            r_max,
            n_points,
        })
    }

    /// Grid with spacing `h`; the span must be an integer multiple of `h`.
    pub fn with_spacing(r_min: T, r_max: T, h: T) -> Result<Self> {
        if !(h > T::zero()) {
            return Err(Error::InvalidInput(format!(
                "spacing must be positive, got {h}"
            )));
        }
        let span = r_max - r_min;
        let steps = (span / h).round();
        if (steps * h - span).abs() > lit::<T>(1e-9) * span.abs() {
            return Err(Error::InvalidInput(format!(
                "span {span} is not a multiple of h = {h}"
            )));
        }
        let n = steps.to_usize().unwrap_or(0) + 1;
        Self::new(r_min, r_max, n)
    }

    /// `[0.05/k, 20/k]` with spacing `1e-3/k`.
    pub fn default_for(k: T) -> Result<Self> {
        if !(k > T::zero()) {
            return Err(Error::InvalidInput(format!(
                "wavenumber must be positive, got {k}"
            )));
        }
        Self::new(lit::<T>(0.05) / k, lit::<T>(20.0) / k, 19_951)
    }

    pub fn r_min(&self) -> T {
        self.r_min
    }

    pub fn r_max(&self) -> T {
        self.r_max
    }

    pub fn len(&self) -> usize {
        self.n_points
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn spacing(&self) -> T {
        (self.r_max - self.r_min) / int((self.n_points - 1) as i64)
    }

    pub fn point(&self, i: usize) -> T {
        if i + 1 == self.n_points {
            self.r_max
        } else {
            self.r_min + self.spacing() * int(i as i64)
        }
    }

    pub fn points(&self) -> Vec<T> {
        (0..self.n_points).map(|i| self.point(i)).collect()
    }

    fn require_positive(&self, what: &str) -> Result<()> {
        if self.r_min > T::zero() {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "{what} requires a grid with r_min > 0"
            )))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EnergySign {
    Positive,
    Negative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SolutionFamily {
    J,
    Y,
    I,
    K,
    Numeric,
}

impl SolutionFamily {
    fn cylinder(self) -> Option<CylinderFamily> {
        match self {
            SolutionFamily::J => Some(CylinderFamily::BesselJ),
            SolutionFamily::Y => Some(CylinderFamily::NeumannY),
            SolutionFamily::I => Some(CylinderFamily::ModifiedI),
            SolutionFamily::K => Some(CylinderFamily::ModifiedK),
            SolutionFamily::Numeric => None,
        }
    }

    /// Energy sign the family belongs to; `None` for numerical solutions.
    pub fn energy_sign(self) -> Option<EnergySign> {
        match self {
            SolutionFamily::J | SolutionFamily::Y => Some(EnergySign::Positive),
            SolutionFamily::I | SolutionFamily::K => Some(EnergySign::Negative),
            SolutionFamily::Numeric => None,
        }
    }
}

/// Samples of a radial wave function `u(r)` on a grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadialWave<T> {
    pub grid: RadialGrid<T>,
    pub u: Vec<T>,
    pub k: T,
    pub energy_sign: EnergySign,
    pub family: SolutionFamily,
    pub m: u32,
}

impl<T: Scalar> RadialWave<T> {
    /// `max |u - other| / max |other|`, the deviation relative to the
    /// reference amplitude.
    pub fn scaled_deviation(&self, reference: &RadialWave<T>) -> T {
        let scale = reference
            .u
            .iter()
            .fold(T::zero(), |acc, v| acc.max(v.abs()));
        let dev = self
            .u
            .iter()
            .zip(&reference.u)
            .fold(T::zero(), |acc, (a, b)| acc.max((*a - *b).abs()));
        dev / scale
    }

    /// `max |u/ref - 1|` for a reference without zeros on the grid.
    pub fn max_relative_deviation(&self, reference: &RadialWave<T>) -> T {
        self.u
            .iter()
            .zip(&reference.u)
            .fold(T::zero(), |acc, (a, b)| acc.max(((*a - *b) / *b).abs()))
    }
}

/// `E = ±k²/2`.
pub fn energy_from_wavenumber<T: Scalar>(k: T, sign: EnergySign) -> Result<T> {
    if !(k > T::zero()) || !k.is_finite() {
        return Err(Error::InvalidInput(format!(
            "wavenumber must be positive, got {k}"
        )));
    }
    let magnitude = k * k * lit(0.5);
    Ok(match sign {
        EnergySign::Positive => magnitude,
        EnergySign::Negative => -magnitude,
    })
}

/// Inverse of [`energy_from_wavenumber`]: `k = √(2|E|)`.
pub fn wavenumber_from_energy<T: Scalar>(energy: T) -> Result<(T, EnergySign)> {
    if energy == T::zero() || !energy.is_finite() {
        return Err(Error::InvalidInput(format!(
            "energy must be finite and non-zero, got {energy}"
        )));
    }
    let sign = if energy > T::zero() {
        EnergySign::Positive
    } else {
        EnergySign::Negative
    };
    Ok(((lit::<T>(2.0) * energy.abs()).sqrt(), sign))
}

fn check_admissible(family: SolutionFamily, m: u32) -> Result<()> {
    if family.energy_sign() == Some(EnergySign::Negative) && m != 0 {
        return Err(Error::InvalidInput(format!(
            "negative-energy solutions exist only for m = 0, got m = {m}"
        )));
    }
    Ok(())
}

/// `u(r) = √r · C_m(kr)` sampled on `grid`.
pub fn analytic_radial<T: Scalar>(
    family: SolutionFamily,
    m: u32,
    k: T,
    grid: &RadialGrid<T>,
) -> Result<RadialWave<T>> {
    let cylinder = family.cylinder().ok_or_else(|| {
        Error::InvalidInput("analytic solutions need a cylinder-function family".into())
    })?;
    let energy_sign = family
        .energy_sign()
        .expect("cylinder families carry a sign");
    check_admissible(family, m)?;
    if !(k > T::zero()) {
        return Err(Error::InvalidInput(format!(
            "wavenumber must be positive, got {k}"
        )));
    }
    if cylinder.singular_at_origin() {
        grid.require_positive(&format!("{}{m}", cylinder.symbol()))?;
    }
    let kind = CylinderKind::new(cylinder, m);
    let u = grid
        .points()
        .into_iter()
        .map(|r| Ok(r.sqrt() * eval_cylinder(kind, k * r)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(RadialWave {
        grid: *grid,
        u,
        k,
        energy_sign,
        family,
        m,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Direction {
    /// From `r_min` towards `r_max`.
    Outward,
    /// From `r_max` towards `r_min`.
    Inward,
}

/// Starting values for Numerov: `first` sits on the boundary point where the
/// integration starts, `second` on its neighbour.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Seeds<T> {
    pub first: T,
    pub second: T,
    pub direction: Direction,
}

impl<T: Scalar> Seeds<T> {
    /// Seeds copied from the boundary-most samples of `wave`.
    pub fn from_wave(wave: &RadialWave<T>, direction: Direction) -> Self {
        let n = wave.u.len();
        match direction {
            Direction::Outward => Self {
                first: wave.u[0],
                second: wave.u[1],
                direction,
            },
            Direction::Inward => Self {
                first: wave.u[n - 1],
                second: wave.u[n - 2],
                direction,
            },
        }
    }
}

fn angular_index<T>(spec: &EffectivePotential<T>) -> u32 {
    match *spec {
        EffectivePotential::TwoDim { m } => m,
        EffectivePotential::ThreeDim { l } => l,
        _ => 0,
    }
}

fn coefficients<T: Scalar>(
    spec: &EffectivePotential<T>,
    energy: T,
    grid: &RadialGrid<T>,
) -> Result<Vec<T>> {
    let two_e = energy * lit(2.0);
    grid.points()
        .into_iter()
        .map(|r| Ok(spec.eval(r)? - two_e))
        .collect()
}

/// Numerov solution of `u'' = (V(r) - 2E) u`.
///
/// Fails with [`Error::Overflow`] once `|u|` passes `√(T::MAX)`, which is how an
/// exponentially growing branch picked up by the wrong direction shows itself.
pub fn integrate_radial<T: Scalar>(
    spec: &EffectivePotential<T>,
    energy: T,
    grid: &RadialGrid<T>,
    seeds: Seeds<T>,
) -> Result<RadialWave<T>> {
    grid.require_positive("radial integration")?;
    if !seeds.first.is_finite() || !seeds.second.is_finite() || !energy.is_finite() {
        return Err(Error::InvalidInput(
            "seeds and energy must be finite".into(),
        ));
    }
    let m = angular_index(spec);
    if energy < T::zero() && matches!(spec, EffectivePotential::TwoDim { m } if *m != 0) {
        return Err(Error::InvalidInput(format!(
            "negative-energy solutions exist only for m = 0, got m = {m}"
        )));
    }

    let n = grid.len();
    let h2_12 = grid.spacing() * grid.spacing() / lit(12.0);
    let mut f = coefficients(spec, energy, grid)?;
    if seeds.direction == Direction::Inward {
        f.reverse();
    }
    let ceiling = T::max_value().sqrt();
    let mut u = vec![T::zero(); n];
    u[0] = seeds.first;
    u[1] = seeds.second;
    let ten = lit::<T>(10.0);
    for i in 1..n - 1 {
        let next = ((lit::<T>(2.0) + ten * h2_12 * f[i]) * u[i]
            - (T::one() - h2_12 * f[i - 1]) * u[i - 1])
            / (T::one() - h2_12 * f[i + 1]);
        if !next.is_finite() || next.abs() > ceiling {
            let step = match seeds.direction {
                Direction::Outward => i + 1,
                Direction::Inward => n - 2 - i,
            };
            return Err(Error::Overflow(format!(
                "radial solution exceeded {ceiling} at r = {}",
                grid.point(step)
            )));
        }
        u[i + 1] = next;
    }
    if seeds.direction == Direction::Inward {
        u.reverse();
    }

    let (k, energy_sign) = if energy == T::zero() {
        (T::zero(), EnergySign::Positive)
    } else {
        wavenumber_from_energy(energy)?
    };
    Ok(RadialWave {
        grid: *grid,
        u,
        k,
        energy_sign,
        family: SolutionFamily::Numeric,
        m,
    })
}

/// Discrete Numerov Wronskian `(w_a[i]·w_b[i+1] - w_a[i+1]·w_b[i]) / h` with
/// `w = (1 - h²f/12)·u`. It is exactly conserved by the recurrence and tends
/// to the continuous Wronskian `u_a u_b' - u_a' u_b` as `h → 0`.
pub fn numerov_wronskian<T: Scalar>(
    a: &RadialWave<T>,
    b: &RadialWave<T>,
    spec: &EffectivePotential<T>,
    energy: T,
) -> Result<Vec<T>> {
    if a.grid != b.grid {
        return Err(Error::InvalidInput("waves live on different grids".into()));
    }
    let grid = a.grid;
    grid.require_positive("Wronskian")?;
    let h = grid.spacing();
    let h2_12 = h * h / lit(12.0);
    let f = coefficients(spec, energy, &grid)?;
    let w = |u: &[T], i: usize| (T::one() - h2_12 * f[i]) * u[i];
    Ok((0..grid.len() - 1)
        .map(|i| (w(&a.u, i) * w(&b.u, i + 1) - w(&a.u, i + 1) * w(&b.u, i)) / h)
        .collect())
}

/// Five-point centred second derivative at interior index `i`.
fn second_derivative<T: Scalar>(u: &[T], i: usize, h: T) -> T {
    (-u[i - 2] + lit::<T>(16.0) * u[i - 1] - lit::<T>(30.0) * u[i] + lit::<T>(16.0) * u[i + 1]
        - u[i + 2])
        / (lit::<T>(12.0) * h * h)
}

/// Five-point centred first derivative at interior index `i`.
fn first_derivative<T: Scalar>(u: &[T], i: usize, h: T) -> T {
    (u[i - 2] - lit::<T>(8.0) * u[i - 1] + lit::<T>(8.0) * u[i + 1] - u[i + 2])
        / (lit::<T>(12.0) * h)
}

/// `max_i |u''(r_i) - (V(r_i) - 2E)·u(r_i)|` over interior points, with `u''`
/// from the five-point stencil. The two points at each end are excluded.
pub fn ode_residual<T: Scalar>(
    wave: &RadialWave<T>,
    spec: &EffectivePotential<T>,
    energy: T,
) -> Result<T> {
    let n = wave.u.len();
    if n < 5 {
        return Err(Error::InvalidInput(format!(
            "residual needs at least 5 samples, got {n}"
        )));
    }
    wave.grid.require_positive("ODE residual")?;
    let h = wave.grid.spacing();
    let f = coefficients(spec, energy, &wave.grid)?;
    Ok((2..n - 2).fold(T::zero(), |acc, i| {
        acc.max((second_derivative(&wave.u, i, h) - f[i] * wave.u[i]).abs())
    }))
}

/// `Φ⁽²⁾(r) = (k/√π)·K_0(kr)`, the zero-angular-momentum negative-energy
/// eigenfunction in two dimensions, normalised over the plane.
pub fn phi2<T: Scalar>(k: T, r: T) -> Result<T> {
    if !(k > T::zero()) {
        return Err(Error::InvalidInput(format!(
            "wavenumber must be positive, got {k}"
        )));
    }
    Ok(k / T::PI().sqrt() * eval_cylinder(CylinderKind::k(0), k * r)?)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Phi2Samples<T> {
    pub k: T,
    pub r: Vec<T>,
    pub phi: Vec<T>,
}

/// [`phi2`] sampled on `grid`.
pub fn assemble_phi2<T: Scalar>(k: T, grid: &RadialGrid<T>) -> Result<Phi2Samples<T>> {
    grid.require_positive("Φ⁽²⁾")?;
    let r = grid.points();
    let phi = r.iter().map(|&r| phi2(k, r)).collect::<Result<Vec<_>>>()?;
    Ok(Phi2Samples { k, r, phi })
}

/// Residuals of the two forms of the negative-energy Helmholtz equation for
/// the mode `K_m(kr)`, both by five-point finite differences.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LaplacianCheck<T> {
    /// `max |Φ'' + Φ'/r - m²Φ/r² - k²Φ|`.
    pub polar_residual: T,
    /// `max |u'' - ((m² - 1/4)/r² + k²)·u|` with `u = √r·Φ`.
    pub substituted_residual: T,
    /// `max |substituted_i - √r_i·polar_i|`; the two forms agree pointwise
    /// through that identity.
    pub identity_gap: T,
}

pub fn laplacian_reduction_check<T: Scalar>(
    m: u32,
    k: T,
    grid: &RadialGrid<T>,
) -> Result<LaplacianCheck<T>> {
    if m > 1 {
        return Err(Error::InvalidInput(format!(
            "order must be 0 or 1, got {m}"
        )));
    }
    if !(k > T::zero()) {
        return Err(Error::InvalidInput(format!(
            "wavenumber must be positive, got {k}"
        )));
    }
    grid.require_positive("Laplacian check")?;
    if grid.len() < 5 {
        return Err(Error::InvalidInput(
            "Laplacian check needs at least 5 points".into(),
        ));
    }
    let kind = CylinderKind::k(m);
    let r = grid.points();
    let h = grid.spacing();
    let phi = r
        .iter()
        .map(|&r| eval_cylinder(kind, k * r))
        .collect::<Result<Vec<_>>>()?;
    let u: Vec<T> = r.iter().zip(&phi).map(|(r, p)| r.sqrt() * *p).collect();
    let m2 = int::<T>((m * m) as i64);
    let k2 = k * k;
    let effective = crate::potentials::quantum_square_2d::<T>(m as i64);

    let mut check = LaplacianCheck {
        polar_residual: T::zero(),
        substituted_residual: T::zero(),
        identity_gap: T::zero(),
    };
    for i in 2..r.len() - 2 {
        let ri = r[i];
        let polar = second_derivative(&phi, i, h) + first_derivative(&phi, i, h) / ri
            - m2 * phi[i] / (ri * ri)
            - k2 * phi[i];
        let substituted = second_derivative(&u, i, h) - (effective / (ri * ri) + k2) * u[i];
        check.polar_residual = check.polar_residual.max(polar.abs());
        check.substituted_residual = check.substituted_residual.max(substituted.abs());
        check.identity_gap = check
            .identity_gap
            .max((substituted - ri.sqrt() * polar).abs());
    }
    Ok(check)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    type V = EffectivePotential<f64>;

    const J01: f64 = 2.404_825_557_695_772_8;

    #[test]
    fn dispersion_relation() {
        assert_eq!(
            energy_from_wavenumber(1.0_f64, EnergySign::Negative).unwrap(),
            -0.5
        );
        assert_eq!(
            energy_from_wavenumber(2.0_f64, EnergySign::Positive).unwrap(),
            2.0
        );
        assert!(energy_from_wavenumber(0.0_f64, EnergySign::Positive).is_err());
        assert!(wavenumber_from_energy(0.0_f64).is_err());
    }

    proptest! {
        #[test]
        fn dispersion_roundtrip(k in 1e-3f64..1e3, negative in any::<bool>()) {
            let sign = if negative { EnergySign::Negative } else { EnergySign::Positive };
            let (back, s) = wavenumber_from_energy(energy_from_wavenumber(k, sign).unwrap()).unwrap();
            prop_assert_eq!(s, sign);
            prop_assert!((back - k).abs() <= 4.0 * f64::EPSILON * k);
        }

        #[test]
        fn phi2_scaling(k in 0.1f64..5.0, r in 0.01f64..5.0, lambda in 0.2f64..5.0) {
            let lhs = phi2(lambda * k, r).unwrap();
            let rhs = lambda * phi2(k, lambda * r).unwrap();
            prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs.abs());
        }
    }

    #[test]
    fn grid_validation() {
        assert!(RadialGrid::new(1.0_f64, 1.0, 10).is_err());
        assert!(RadialGrid::new(-1.0_f64, 1.0, 10).is_err());
        assert!(RadialGrid::new(0.0_f64, 1.0, 2).is_err());
        assert!(RadialGrid::with_spacing(0.0_f64, 1.0, 0.3).is_err());
        let g = RadialGrid::with_spacing(0.05_f64, 20.0, 1e-3).unwrap();
        assert_eq!(g.len(), 19_951);
        assert_eq!(g.point(g.len() - 1), 20.0);
        assert_eq!(RadialGrid::default_for(1.0_f64).unwrap(), g);
    }

    #[test]
    fn analytic_values() {
        let g = RadialGrid::new(1.0_f64, 2.0, 3).unwrap();
        let w = analytic_radial(SolutionFamily::K, 0, 1.0, &g).unwrap();
        assert!((w.u[0] - 0.421_024_438_240_708_3).abs() < 1e-14);
        assert_eq!(w.energy_sign, EnergySign::Negative);

        let g = RadialGrid::new(J01, J01 + 1.0, 3).unwrap();
        let w = analytic_radial(SolutionFamily::J, 0, 1.0, &g).unwrap();
        assert!(w.u[0].abs() < 1e-15);

        let g = RadialGrid::new(0.0_f64, 1e-6, 3).unwrap();
        let w = analytic_radial(SolutionFamily::J, 0, 3.0, &g).unwrap();
        assert_eq!(w.u[0], 0.0);
        assert!((w.u[2] / 1e-6f64.sqrt() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn analytic_admissibility() {
        let g = RadialGrid::new(0.0_f64, 1.0, 5).unwrap();
        assert!(matches!(
            analytic_radial(SolutionFamily::K, 0, 1.0, &g),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            analytic_radial(SolutionFamily::Y, 1, 1.0, &g),
            Err(Error::Domain(_))
        ));
        let g = RadialGrid::new(0.5_f64, 1.0, 5).unwrap();
        assert!(matches!(
            analytic_radial(SolutionFamily::K, 1, 1.0, &g),
            Err(Error::InvalidInput(_))
        ));
        assert!(analytic_radial(SolutionFamily::Numeric, 0, 1.0, &g).is_err());
        assert!(analytic_radial(SolutionFamily::J, 1, 1.0, &g).is_ok());
    }

    #[test]
    fn numerov_matches_decaying_k0_inward() {
        let grid = RadialGrid::default_for(1.0_f64).unwrap();
        let exact = analytic_radial(SolutionFamily::K, 0, 1.0, &grid).unwrap();
        let numeric = integrate_radial(
            &V::QuantumAnti,
            -0.5,
            &grid,
            Seeds::from_wave(&exact, Direction::Inward),
        )
        .unwrap();
        assert!(numeric.max_relative_deviation(&exact) <= 1e-6);
    }

    #[test]
    fn numerov_matches_j0_outward() {
        let grid = RadialGrid::default_for(1.0_f64).unwrap();
        let exact = analytic_radial(SolutionFamily::J, 0, 1.0, &grid).unwrap();
        let numeric = integrate_radial(
            &V::QuantumAnti,
            0.5,
            &grid,
            Seeds::from_wave(&exact, Direction::Outward),
        )
        .unwrap();
        assert!(numeric.scaled_deviation(&exact) <= 1e-6);
    }

    #[test]
    fn zero_seeds_stay_zero() {
        let grid = RadialGrid::new(0.1_f64, 5.0, 200).unwrap();
        let seeds = Seeds {
            first: 0.0,
            second: 0.0,
            direction: Direction::Outward,
        };
        let w = integrate_radial(&V::two_dim(1), 0.5, &grid, seeds).unwrap();
        assert!(w.u.iter().all(|&v| v == 0.0));
        assert_eq!(ode_residual(&w, &V::two_dim(1), 0.5).unwrap(), 0.0);
    }

    #[test]
    fn outward_negative_energy_blows_up() {
        let grid = RadialGrid::with_spacing(0.05_f64, 1000.05, 1e-2).unwrap();
        let exact = analytic_radial(
            SolutionFamily::K,
            0,
            1.0,
            &RadialGrid::new(0.05, 0.06, 3).unwrap(),
        )
        .unwrap();
        let seeds = Seeds {
            first: exact.u[0],
            second: exact.u[1],
            direction: Direction::Outward,
        };
        let seeds = Seeds {
            second: seeds.second * (1.0 + 1e-6),
            ..seeds
        };
        assert!(matches!(
            integrate_radial(&V::QuantumAnti, -0.5, &grid, seeds),
            Err(Error::Overflow(_))
        ));
    }

    #[test]
    fn negative_energy_needs_zero_angular_momentum() {
        let grid = RadialGrid::new(0.1_f64, 5.0, 200).unwrap();
        let seeds = Seeds {
            first: 1.0,
            second: 1.0,
            direction: Direction::Inward,
        };
        assert!(integrate_radial(&V::two_dim(1), -0.5, &grid, seeds).is_err());
        let origin = RadialGrid::new(0.0_f64, 5.0, 200).unwrap();
        assert!(matches!(
            integrate_radial(&V::QuantumAnti, 0.5, &origin, seeds),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn analytic_solutions_have_small_residual() {
        let grid = RadialGrid::with_spacing(0.5_f64, 10.0, 1e-3).unwrap();
        let k0 = analytic_radial(SolutionFamily::K, 0, 1.0, &grid).unwrap();
        assert!(ode_residual(&k0, &V::QuantumAnti, -0.5).unwrap() <= 1e-5);
        let j1 = analytic_radial(SolutionFamily::J, 1, 1.0, &grid).unwrap();
        assert!(ode_residual(&j1, &V::two_dim(1), 0.5).unwrap() <= 1e-5);
        // wrong energy is detected
        assert!(ode_residual(&j1, &V::two_dim(1), 0.6).unwrap() > 1e-2);
    }

    #[test]
    fn residual_needs_five_points() {
        let grid = RadialGrid::new(0.5_f64, 1.0, 4).unwrap();
        let w = analytic_radial(SolutionFamily::J, 0, 1.0, &grid).unwrap();
        assert!(ode_residual(&w, &V::QuantumAnti, 0.5).is_err());
    }

    #[test]
    fn phi2_values() {
        assert!((phi2(1.0_f64, 1.0).unwrap() - 0.237_537_602_474_453_27).abs() < 1e-14);
        assert!(phi2(1.0_f64, 40.0).unwrap() < 1e-17);
        assert!(phi2(1.0_f64, 0.0).is_err());
        let grid = RadialGrid::new(0.1_f64, 1.0, 10).unwrap();
        let s = assemble_phi2(2.0, &grid).unwrap();
        assert_eq!(s.phi.len(), 10);
        assert!(s.phi.windows(2).all(|w| w[1] < w[0]));
    }

    #[test]
    fn laplacian_reduction() {
        let grid = RadialGrid::with_spacing(0.5_f64, 10.0, 1e-3).unwrap();
        for (m, k) in [(0, 1.0), (0, 2.0), (1, 1.0)] {
            let c = laplacian_reduction_check(m, k, &grid).unwrap();
            assert!(c.polar_residual <= 1e-5, "{m} {k}: {c:?}");
            assert!(c.substituted_residual <= 1e-5);
            assert!(c.identity_gap <= 1e-8);
        }
        assert!(laplacian_reduction_check(2, 1.0, &grid).is_err());
    }

    #[test]
    fn numerov_wronskian_is_conserved() {
        let grid = RadialGrid::default_for(1.0_f64).unwrap();
        let spec = V::QuantumAnti;
        let j = analytic_radial(SolutionFamily::J, 0, 1.0, &grid).unwrap();
        let y = analytic_radial(SolutionFamily::Y, 0, 1.0, &grid).unwrap();
        let nj =
            integrate_radial(&spec, 0.5, &grid, Seeds::from_wave(&j, Direction::Outward)).unwrap();
        let ny =
            integrate_radial(&spec, 0.5, &grid, Seeds::from_wave(&y, Direction::Outward)).unwrap();
        let w = numerov_wronskian(&nj, &ny, &spec, 0.5).unwrap();
        let drift = w.iter().fold(0.0_f64, |acc, v| acc.max((v - w[0]).abs())) / w[0].abs();
        assert!(drift <= 1e-8, "drift {drift:e}");
        // continuous value √r J0 · (√r Y0)' - ... = 2/π
        assert!((w[0] - 2.0 / std::f64::consts::PI).abs() < 1e-5);
    }
}
