//! Integer-order cylinder functions `J_m`, `Y_m`, `I_m`, `K_m` of real positive
//! argument.
//!
//! Evaluation strategy:
//!
//! * `J_m`, `Y_m`: ascending power series (the log-containing Neumann series
//!   for `Y_m`) up to [`JY_SWITCH`]; above it, Miller backward recurrence for
//!   `J_n` normalised by `J_0 + 2 Σ J_2k = 1`, with `Y_0` and `Y_1` obtained from
//!   the Neumann expansions in terms of those `J_n`.
//! * `I_m`: ascending series everywhere (all terms positive).
//! * `K_m`: log-containing series up to [`K_SWITCH`], Steed/Temme continued
//!   fraction above it.
//!
//! Orders above one are reached through the recurrences that are stable in
//! the relevant direction (forward for `Y` and `K`).

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{int, lit, Scalar};

/// Argument at which `J_m`/`Y_m` switch from power series to backward recurrence.
pub const JY_SWITCH: f64 = 5.0;

/// Argument at which `K_m` switches from the log series to the continued fraction.
pub const K_SWITCH: f64 = 2.0;

/// Largest accepted argument.
pub const MAX_ARGUMENT: f64 = 700.0;

/// Smallest number of nodes accepted by [`sommerfeld_j0`].
pub const SOMMERFELD_MIN_POINTS: usize = 16;

const MAX_SERIES_TERMS: usize = 2000;
const MAX_CF_ITERATIONS: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CylinderFamily {
    BesselJ,
    NeumannY,
    ModifiedI,
    ModifiedK,
}

impl CylinderFamily {
    /// `Y` and `K` diverge at the origin.
    pub fn singular_at_origin(self) -> bool {
        matches!(self, CylinderFamily::NeumannY | CylinderFamily::ModifiedK)
    }

    pub fn symbol(self) -> char {
        match self {
            CylinderFamily::BesselJ => 'J',
            CylinderFamily::NeumannY => 'Y',
            CylinderFamily::ModifiedI => 'I',
            CylinderFamily::ModifiedK => 'K',
        }
    }
}

/// A cylinder function family together with its integer order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CylinderKind {
    pub family: CylinderFamily,
    pub order: u32,
}

impl CylinderKind {
    pub const fn new(family: CylinderFamily, order: u32) -> Self {
        Self { family, order }
    }

    pub const fn j(order: u32) -> Self {
        Self::new(CylinderFamily::BesselJ, order)
    }

    pub const fn y(order: u32) -> Self {
        Self::new(CylinderFamily::NeumannY, order)
    }

    pub const fn i(order: u32) -> Self {
        Self::new(CylinderFamily::ModifiedI, order)
    }

    pub const fn k(order: u32) -> Self {
        Self::new(CylinderFamily::ModifiedK, order)
    }

    /// Evaluates the function at `x`. See [`eval_cylinder`].
    pub fn eval<T: Scalar>(self, x: T) -> Result<T> {
        eval_cylinder(self, x)
    }

    /// Evaluates the derivative at `x`. See [`eval_cylinder_derivative`].
    pub fn derivative<T: Scalar>(self, x: T) -> Result<T> {
        eval_cylinder_derivative(self, x)
    }
}

impl std::fmt::Display for CylinderKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}{}", self.family.symbol(), self.order)
    }
}

fn check_domain<T: Scalar>(kind: CylinderKind, x: T) -> Result<()> {
    if x.is_nan() {
        return Err(Error::Domain(format!("{kind} evaluated at NaN")));
    }
    if kind.family.singular_at_origin() {
        if x <= T::zero() {
            return Err(Error::Domain(format!("{kind} requires x > 0, got {x}")));
        }
    } else if x < T::zero() {
        return Err(Error::Domain(format!("{kind} requires x >= 0, got {x}")));
    }
    if x > lit(MAX_ARGUMENT) {
        return Err(match kind.family {
            CylinderFamily::ModifiedI => {
                Error::Overflow(format!("{kind} at x = {x} exceeds the overflow guard"))
            }
            _ => Error::Domain(format!("{kind} requires x <= {MAX_ARGUMENT}, got {x}")),
        });
    }
    Ok(())
}

/// Value of the cylinder function `kind` at `x`.
///
/// Relative accuracy is about `1e-12` in `f64` on `(0, 50]` away from zeros of
/// the function; near a zero the absolute error is of the same order.
pub fn eval_cylinder<T: Scalar>(kind: CylinderKind, x: T) -> Result<T> {
    check_domain(kind, x)?;
    let m = kind.order;
    let value = match kind.family {
        CylinderFamily::BesselJ => bessel_j(m, x),
        CylinderFamily::NeumannY => bessel_y(m, x),
        CylinderFamily::ModifiedI => bessel_i(m, x),
        CylinderFamily::ModifiedK => bessel_k(m, x),
    };
    if !value.is_finite() {
        return Err(Error::Overflow(format!("{kind}({x}) is not representable")));
    }
    Ok(value)
}

/// Derivative of the cylinder function `kind` at `x`, from the standard
/// order recurrences (`J_0' = -J_1`, `K_0' = -K_1`, ...).
pub fn eval_cylinder_derivative<T: Scalar>(kind: CylinderKind, x: T) -> Result<T> {
    check_domain(kind, x)?;
    let half = lit::<T>(0.5);
    let m = kind.order;
    let value = match kind.family {
        CylinderFamily::BesselJ => {
            if m == 0 {
                -bessel_j(1, x)
            } else {
                half * (bessel_j(m - 1, x) - bessel_j(m + 1, x))
            }
        }
        CylinderFamily::NeumannY => {
            if m == 0 {
                -bessel_y(1, x)
            } else {
                half * (bessel_y(m - 1, x) - bessel_y(m + 1, x))
            }
        }
        CylinderFamily::ModifiedI => {
            if m == 0 {
                bessel_i(1, x)
            } else {
                half * (bessel_i(m - 1, x) + bessel_i(m + 1, x))
            }
        }
        CylinderFamily::ModifiedK => {
            if m == 0 {
                -bessel_k(1, x)
            } else {
                -half * (bessel_k(m - 1, x) + bessel_k(m + 1, x))
            }
        }
    };
    if !value.is_finite() {
        return Err(Error::Overflow(format!(
            "{kind}'({x}) is not representable"
        )));
    }
    Ok(value)
}

/// Plane-wave superposition `(1/2π) ∫₀^{2π} exp(i·kr·sin θ) dθ` evaluated with
/// the `points`-node trapezoidal rule. The real part converges to `J_0(kr)`
/// and the imaginary part vanishes.
pub fn sommerfeld_j0<T: Scalar>(kr: T, points: usize) -> Result<Complex<T>> {
    if points < SOMMERFELD_MIN_POINTS {
        return Err(Error::InvalidInput(format!(
            "Sommerfeld quadrature needs at least {SOMMERFELD_MIN_POINTS} points, got {points}"
        )));
    }
    if !(kr >= T::zero()) || !kr.is_finite() {
        return Err(Error::InvalidInput(format!(
            "Sommerfeld quadrature needs kr >= 0, got {kr}"
        )));
    }
    let n = T::from_usize(points).expect("point count representable");
    let step = T::TAU() / n;
    let (mut re, mut im) = (T::zero(), T::zero());
    for j in 0..points {
        let theta = step * T::from_usize(j).expect("index representable");
        let (s, c) = (kr * theta.sin()).sin_cos();
        re = re + c;
        im = im + s;
    }
    Ok(Complex::new(re / n, im / n))
}

fn factorial<T: Scalar>(n: u32) -> T {
    (1..=n).fold(T::one(), |acc, k| acc * int(k as i64))
}

/// Sums `Σ t_k` for a series whose terms eventually decrease, stopping once a
/// term is negligible relative to the running sum.
fn converged<T: Scalar>(term: T, sum: T, peak: T) -> bool {
    term.abs() <= T::epsilon() * sum.abs().max(peak * T::epsilon())
}

/// `J_m` or `I_m` ascending series; `sign` is `-1` for `J`, `+1` for `I`.
fn ascending_series<T: Scalar>(m: u32, x: T, sign: T) -> T {
    let half = x * lit(0.5);
    let q = sign * half * half;
    let mut term = half.powi(m as i32) / factorial::<T>(m);
    if term == T::zero() {
        return T::zero();
    }
    let mut sum = term;
    let mut peak = term.abs();
    let mf = int::<T>(m as i64);
    for k in 1..MAX_SERIES_TERMS {
        let kf = int::<T>(k as i64);
        term = term * q / (kf * (kf + mf));
        sum = sum + term;
        peak = peak.max(term.abs());
        if kf > half && converged(term, sum, peak) {
            break;
        }
    }
    sum
}

/// The ψ-weighted series shared by `Y_m` and `K_m`:
/// `(x/2)^m Σ [ψ(k+1) + ψ(m+k+1)] (sign·x²/4)^k / (k! (m+k)!)`.
fn psi_series<T: Scalar>(m: u32, x: T, sign: T) -> T {
    let half = x * lit(0.5);
    let q = sign * half * half;
    let gamma = T::euler_gamma();
    // ψ(n+1) = -γ + H_n
    let mut harmonic_k = T::zero();
    let mut harmonic_mk = (1..=m).fold(T::zero(), |acc, j| acc + T::one() / int(j as i64));
    let mut coeff = half.powi(m as i32) / factorial::<T>(m);
    let mut sum = coeff * (harmonic_k + harmonic_mk - gamma - gamma);
    let mut peak = sum.abs();
    let mf = int::<T>(m as i64);
    for k in 1..MAX_SERIES_TERMS {
        let kf = int::<T>(k as i64);
        coeff = coeff * q / (kf * (kf + mf));
        harmonic_k = harmonic_k + T::one() / kf;
        harmonic_mk = harmonic_mk + T::one() / (kf + mf);
        let term = coeff * (harmonic_k + harmonic_mk - gamma - gamma);
        sum = sum + term;
        peak = peak.max(term.abs());
        if kf > half && converged(term, sum, peak) {
            break;
        }
    }
    sum
}

/// `Σ_{k=0}^{m-1} ((m-k-1)!/k!) (sign·x²/4)^k`, scaled by `(x/2)^{-m}`.
fn finite_part<T: Scalar>(m: u32, x: T, sign: T) -> T {
    let half = x * lit(0.5);
    let q = sign * half * half;
    let mut sum = T::zero();
    let mut power = T::one();
    for k in 0..m {
        sum = sum + power * factorial::<T>(m - k - 1) / factorial::<T>(k);
        power = power * q;
    }
    sum / half.powi(m as i32)
}

fn y_series<T: Scalar>(m: u32, x: T) -> T {
    let pi = T::PI();
    let j = ascending_series(m, x, -T::one());
    -finite_part(m, x, T::one()) / pi + (lit::<T>(2.0) / pi) * (x * lit(0.5)).ln() * j
        - psi_series(m, x, -T::one()) / pi
}

fn k_series<T: Scalar>(m: u32, x: T) -> T {
    let i = ascending_series(m, x, T::one());
    let odd = m % 2 == 1;
    let log_term = (x * lit(0.5)).ln() * i;
    let psi = psi_series(m, x, T::one()) * lit(0.5);
    let finite = finite_part(m, x, -T::one()) * lit(0.5);
    if odd {
        finite + log_term - psi
    } else {
        finite - log_term + psi
    }
}

/// Normalised `J_0 … J_N` at `x` by Miller backward recurrence.
fn miller_j<T: Scalar>(x: T, min_order: u32) -> Vec<T> {
    let xf = x.to_f64().unwrap_or(0.0);
    let mut start = (1.2 * xf) as usize + 40;
    start = start.max(min_order as usize + 40);
    if start % 2 == 1 {
        start += 1;
    }
    let ceiling = T::max_value().sqrt();
    let two_over_x = lit::<T>(2.0) / x;
    let mut values = vec![T::zero(); start + 2];
    values[start] = T::min_positive_value().sqrt();
    for n in (1..=start).rev() {
        let prev = two_over_x * int(n as i64) * values[n] - values[n + 1];
        values[n - 1] = prev;
        if prev.abs() > ceiling {
            let scale = T::one() / ceiling;
            for v in values[n - 1..].iter_mut() {
                *v = *v * scale;
            }
        }
    }
    let norm = values[0]
        + lit::<T>(2.0)
            * values
                .iter()
                .skip(2)
                .step_by(2)
                .fold(T::zero(), |acc, &v| acc + v);
    values.truncate(start + 1);
    for v in values.iter_mut() {
        *v = *v / norm;
    }
    values
}

/// `Y_0` and `Y_1` from the Neumann expansions over Miller-normalised `J_n`.
fn neumann_y01<T: Scalar>(x: T, j: &[T]) -> (T, T) {
    let pi = T::PI();
    let two_over_pi = lit::<T>(2.0) / pi;
    let log_term = (x * lit(0.5)).ln() + T::euler_gamma();
    let mut sum0 = T::zero();
    let mut sum1 = T::zero();
    let mut sign = -T::one();
    let mut k = 1;
    while 2 * k + 1 < j.len() {
        let kf = int::<T>(k as i64);
        sum0 = sum0 + sign * j[2 * k] / kf;
        sum1 = sum1 + sign * (j[2 * k - 1] - j[2 * k + 1]) / kf;
        sign = -sign;
        k += 1;
    }
    let y0 = two_over_pi * log_term * j[0] - lit::<T>(2.0) * two_over_pi * sum0;
    let y1 = two_over_pi * (log_term * j[1] - j[0] / x) + two_over_pi * sum1;
    (y0, y1)
}

fn bessel_j<T: Scalar>(m: u32, x: T) -> T {
    if x == T::zero() {
        return if m == 0 { T::one() } else { T::zero() };
    }
    if x <= lit(JY_SWITCH) {
        ascending_series(m, x, -T::one())
    } else {
        miller_j(x, m)[m as usize]
    }
}

fn forward_y<T: Scalar>(m: u32, x: T, y0: T, y1: T) -> T {
    match m {
        0 => y0,
        1 => y1,
        _ => {
            let two_over_x = lit::<T>(2.0) / x;
            let (mut prev, mut cur) = (y0, y1);
            for n in 1..m {
                let next = two_over_x * int(n as i64) * cur - prev;
                prev = cur;
                cur = next;
            }
            cur
        }
    }
}

fn bessel_y<T: Scalar>(m: u32, x: T) -> T {
    let (y0, y1) = if x <= lit(JY_SWITCH) {
        (y_series(0, x), y_series(1, x))
    } else {
        neumann_y01(x, &miller_j(x, 1))
    };
    forward_y(m, x, y0, y1)
}

fn bessel_i<T: Scalar>(m: u32, x: T) -> T {
    if x == T::zero() {
        return if m == 0 { T::one() } else { T::zero() };
    }
    ascending_series(m, x, T::one())
}

/// `K_0` and `K_1` by Steed's continued fraction (order zero).
fn steed_k01<T: Scalar>(x: T) -> (T, T) {
    let one = T::one();
    let two = lit::<T>(2.0);
    let mut b = two * (one + x);
    let mut d = one / b;
    let mut delh = d;
    let mut h = d;
    let mut q1 = T::zero();
    let mut q2 = one;
    let a1 = lit::<T>(0.25);
    let mut q = a1;
    let mut c = a1;
    let mut a = -a1;
    let mut s = one + q * delh;
    for i in 2..MAX_CF_ITERATIONS {
        let fi = int::<T>(i as i64);
        a = a - two * (fi - one);
        c = -a * c / fi;
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q = q + c * qnew;
        b = b + two;
        d = one / (b + a * d);
        delh = (b * d - one) * delh;
        h = h + delh;
        let dels = q * delh;
        s = s + dels;
        if (dels / s).abs() < T::epsilon() {
            break;
        }
    }
    h = a1 * h;
    let k0 = (T::PI() / (two * x)).sqrt() * (-x).exp() / s;
    let k1 = k0 * (x + lit(0.5) - h) / x;
    (k0, k1)
}

fn bessel_k<T: Scalar>(m: u32, x: T) -> T {
    let (k0, k1) = if x <= lit(K_SWITCH) {
        (k_series(0, x), k_series(1, x))
    } else {
        steed_k01(x)
    };
    match m {
        0 => k0,
        1 => k1,
        _ => {
            let two_over_x = lit::<T>(2.0) / x;
            let (mut prev, mut cur) = (k0, k1);
            for n in 1..m {
                let next = prev + two_over_x * int(n as i64) * cur;
                prev = cur;
                cur = next;
            }
            cur
        }
    }
}
