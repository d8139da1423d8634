//! Bound states of delta potentials in one, two and three dimensions and their
//! radial probability densities
//!
//! * `W⁽¹⁾(x) = k·e^{-2k|x|}`
//! * `W⁽²⁾(r) = 2k²·r·K_0²(kr)`
//! * `W⁽³⁾(r) = 2k·e^{-2kr}`
//!
//! In two dimensions the coupling is regularised by a sharp momentum cutoff
//! `Λ`, giving the bound-state condition
//! `1 = U_0 · (1/2π) ∫₀^Λ q dq / (q² + k²) = (U_0/4π)·ln(1 + Λ²/k²)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quadrature::integrate;
use crate::radial::{energy_from_wavenumber, EnergySign};
use crate::roots::{bisect, golden_section_max};
use crate::scalar::{int, lit, Scalar};
use crate::specfun::{eval_cylinder, CylinderKind};

/// Normalisation target for every density.
pub const NORMALIZATION_TOLERANCE: f64 = 1e-8;

/// Quadrature runs over `kr ∈ [0, TAIL_CUTOFF]`; the rest is added analytically.
pub const TAIL_CUTOFF: f64 = 40.0;

/// Required relative residual of the 2D bound-state condition.
pub const COUPLING_RESIDUAL_TOLERANCE: f64 = 1e-10;

/// Below `k = K_UNDERFLOW·Λ` the 2D bound state is reported as underflowed.
pub const K_UNDERFLOW: f64 = 1e-300;

const QUAD_ABS_TOL: f64 = 1e-14;
const QUAD_MAX_INTERVALS: usize = 4000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Dimension {
    One,
    Two,
    Three,
}

impl Dimension {
    pub fn from_n(n: u32) -> Result<Self> {
        match n {
            1 => Ok(Dimension::One),
            2 => Ok(Dimension::Two),
            3 => Ok(Dimension::Three),
            _ => Err(Error::InvalidInput(format!(
                "delta bound states are defined for N = 1, 2, 3, got {n}"
            ))),
        }
    }

    pub fn n(self) -> u32 {
        match self {
            Dimension::One => 1,
            Dimension::Two => 2,
            Dimension::Three => 3,
        }
    }

    pub fn closed_form(self) -> ClosedForm {
        match self {
            Dimension::One => ClosedForm::Exp1D,
            Dimension::Two => ClosedForm::RingK0,
            Dimension::Three => ClosedForm::Exp3D,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClosedForm {
    Exp1D,
    RingK0,
    Exp3D,
}

/// Sampled `W⁽ᴺ⁾`. For `N = 1` the abscissa is the signed coordinate `x`,
/// otherwise the radius `r ≥ 0`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProbabilityDensity<T> {
    pub dimension: Dimension,
    pub k: T,
    pub samples: Vec<(T, T)>,
    pub closed_form: ClosedForm,
}

fn check_k<T: Scalar>(k: T) -> Result<()> {
    if k > T::zero() && k.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!(
            "wavenumber must be positive, got {k}"
        )))
    }
}

/// `W⁽ᴺ⁾` at a single abscissa.
pub fn density_at<T: Scalar>(dimension: Dimension, k: T, x: T) -> Result<T> {
    check_k(k)?;
    if dimension != Dimension::One && !(x >= T::zero()) {
        return Err(Error::Domain(format!("radius must be >= 0, got {x}")));
    }
    let two = lit::<T>(2.0);
    Ok(match dimension {
        Dimension::One => k * (-two * k * x.abs()).exp(),
        Dimension::Two => {
            if x == T::zero() {
                T::zero()
            } else {
                let k0 = eval_cylinder(CylinderKind::k(0), k * x)?;
                two * k * k * x * k0 * k0
            }
        }
        Dimension::Three => two * k * (-two * k * x).exp(),
    })
}

/// `W⁽ᴺ⁾` sampled at `points`.
pub fn density<T: Scalar>(
    dimension: Dimension,
    k: T,
    points: &[T],
) -> Result<ProbabilityDensity<T>> {
    let samples = points
        .iter()
        .map(|&x| Ok((x, density_at(dimension, k, x)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(ProbabilityDensity {
        dimension,
        k,
        samples,
        closed_form: dimension.closed_form(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Normalization<T> {
    /// Quadrature over `[0, cutoff/k]` plus the analytic tail.
    pub integral: T,
    pub quadrature_error: T,
    /// Tail mass beyond the cutoff.
    pub tail: T,
    /// Set when the tail alone exceeds [`NORMALIZATION_TOLERANCE`].
    pub tail_exceeds_tolerance: bool,
}

/// Total probability of `density` with the default cutoff [`TAIL_CUTOFF`].
pub fn normalize_check<T: Scalar>(density: &ProbabilityDensity<T>) -> Result<Normalization<T>> {
    normalize_check_with_cutoff(density, lit(TAIL_CUTOFF))
}

/// As [`normalize_check`], integrating numerically up to `kr = cutoff`.
pub fn normalize_check_with_cutoff<T: Scalar>(
    density: &ProbabilityDensity<T>,
    cutoff: T,
) -> Result<Normalization<T>> {
    let k = density.k;
    check_k(k)?;
    if !(cutoff > T::zero()) {
        return Err(Error::InvalidInput(format!(
            "cutoff must be positive, got {cutoff}"
        )));
    }
    let dim = density.dimension;
    let r_max = cutoff / k;
    let q = integrate(
        |r| density_at(dim, k, r),
        T::zero(),
        r_max,
        lit(QUAD_ABS_TOL),
        T::zero(),
        QUAD_MAX_INTERVALS,
    )?;
    let decay = (-lit::<T>(2.0) * cutoff).exp();
    let (body, tail) = match dim {
        // both half-lines
        Dimension::One => (q.value * lit(2.0), decay),
        // 2ξK_0²(ξ) ≈ π e^{-2ξ} for large ξ
        Dimension::Two => (q.value, decay * T::FRAC_PI_2()),
        Dimension::Three => (q.value, decay),
    };
    let scale = if dim == Dimension::One {
        lit(2.0)
    } else {
        T::one()
    };
    Ok(Normalization {
        integral: body + tail,
        quadrature_error: q.abs_error * scale,
        tail,
        tail_exceeds_tolerance: tail > lit(NORMALIZATION_TOLERANCE),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DensityMaximum<T> {
    pub location: T,
    pub value: T,
    /// `|K_0(ξ*) - 2ξ*K_1(ξ*)|` at the two-dimensional maximiser.
    pub first_order_residual: Option<T>,
}

/// `K_0(ξ) - 2ξK_1(ξ)`, proportional to `dW⁽²⁾/dr` at `ξ = kr`.
pub fn ring_condition<T: Scalar>(xi: T) -> Result<T> {
    Ok(eval_cylinder(CylinderKind::k(0), xi)?
        - lit::<T>(2.0) * xi * eval_cylinder(CylinderKind::k(1), xi)?)
}

/// Location of the maximum of `2ξK_0²(ξ)`: grid scan, golden-section
/// refinement, then bisection on [`ring_condition`] inside the golden-section
/// bracket.
pub fn ring_maximiser<T: Scalar>() -> Result<T> {
    let shape = |xi: T| -> Result<T> {
        let k0 = eval_cylinder(CylinderKind::k(0), xi)?;
        Ok(lit::<T>(2.0) * xi * k0 * k0)
    };
    let step = lit::<T>(0.01);
    let mut best = (1i64, shape(step)?);
    for i in 2..=500 {
        let v = shape(step * int(i))?;
        if v > best.1 {
            best = (i, v);
        }
    }
    let lo = step * int(best.0 - 1);
    let hi = step * int(best.0 + 1);
    let lo = if lo > T::zero() { lo } else { step * lit(0.5) };
    let guess = golden_section_max(shape, lo, hi, lit(1e-9))?;
    let width = lit::<T>(1e-6);
    let (a, b) =
        if ring_condition(guess - width)?.signum() != ring_condition(guess + width)?.signum() {
            (guess - width, guess + width)
        } else {
            (lo, hi)
        };
    bisect(ring_condition, a, b, T::epsilon() * guess)
}

pub fn density_maximum<T: Scalar>(density: &ProbabilityDensity<T>) -> Result<DensityMaximum<T>> {
    let k = density.k;
    check_k(k)?;
    match density.dimension {
        Dimension::One | Dimension::Three => Ok(DensityMaximum {
            location: T::zero(),
            value: density_at(density.dimension, k, T::zero())?,
            first_order_residual: None,
        }),
        Dimension::Two => {
            let xi = ring_maximiser::<T>()?;
            let location = xi / k;
            Ok(DensityMaximum {
                location,
                value: density_at(Dimension::Two, k, location)?,
                first_order_residual: Some(ring_condition(xi)?.abs()),
            })
        }
    }
}

/// Number of sign changes of the forward differences of `values`; a unimodal
/// sequence has exactly one.
pub fn slope_sign_changes<T: Scalar>(values: &[T]) -> usize {
    let signs: Vec<bool> = values
        .windows(2)
        .map(|w| w[1] - w[0])
        .filter(|d| *d != T::zero())
        .map(|d| d > T::zero())
        .collect();
    signs.windows(2).filter(|s| s[0] != s[1]).count()
}

fn check_cutoff<T: Scalar>(cutoff: T) -> Result<()> {
    if cutoff > T::zero() && cutoff.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!(
            "momentum cutoff must be positive, got {cutoff}"
        )))
    }
}

/// `ln k` for coupling `u0` and cutoff `Λ`, from the closed form
/// `k = Λ / √(e^{4π/U_0} - 1)`.
pub fn ln_k_from_coupling<T: Scalar>(u0: T, cutoff: T) -> Result<T> {
    check_cutoff(cutoff)?;
    if u0 == T::zero() || !u0.is_finite() {
        return Err(Error::Domain(format!(
            "coupling must be finite and non-zero, got {u0}"
        )));
    }
    if u0 < T::zero() {
        return Err(Error::Sign(format!(
            "the cutoff-regularised condition has no bound state for U0 = {u0} < 0"
        )));
    }
    let a = lit::<T>(4.0) * T::PI() / u0;
    // ln(e^a - 1) without overflow
    let ln_em1 = if a > lit(30.0) {
        a + (-(-a).exp()).ln_1p()
    } else {
        a.exp_m1().ln()
    };
    Ok(cutoff.ln() - ln_em1 * lit(0.5))
}

/// Bound-state wavenumber for coupling `u0 > 0` and cutoff `Λ`.
pub fn k_from_coupling<T: Scalar>(u0: T, cutoff: T) -> Result<T> {
    let ln_k = ln_k_from_coupling(u0, cutoff)?;
    let k = ln_k.exp();
    if !(k >= lit::<T>(K_UNDERFLOW) * cutoff) {
        return Err(Error::Underflow(format!(
            "k/Λ = exp({}) is below {K_UNDERFLOW:e} for U0 = {u0}",
            ln_k - cutoff.ln()
        )));
    }
    Ok(k)
}

/// Inverse of [`k_from_coupling`]: `U_0 = 4π / ln(1 + Λ²/k²)`.
pub fn coupling_from_k<T: Scalar>(k: T, cutoff: T) -> Result<T> {
    check_k(k)?;
    check_cutoff(cutoff)?;
    let ratio = cutoff / k;
    Ok(lit::<T>(4.0) * T::PI() / (ratio * ratio).ln_1p())
}

/// `(1/2π) ∫₀^Λ q dq / (q² + k²)` by adaptive quadrature in `s = ln q`.
pub fn regularization_integral<T: Scalar>(k: T, cutoff: T) -> Result<T> {
    check_k(k)?;
    check_cutoff(cutoff)?;
    let ln_k = k.ln();
    let s_top = cutoff.ln();
    let s_bottom = ln_k.min(s_top) - lit(40.0);
    let q = integrate(
        |s: T| {
            // q²/(q²+k²) = 1/(1 + (k/q)²)
            let ratio = (ln_k - s).exp();
            Ok(T::one() / (T::one() + ratio * ratio))
        },
        s_bottom,
        s_top,
        T::zero(),
        lit(1e-15),
        QUAD_MAX_INTERVALS,
    )?;
    let below = (lit::<T>(2.0) * (s_bottom - ln_k)).exp().ln_1p() * lit(0.5);
    Ok((q.value + below) / T::TAU())
}

/// `U_0·I(k, Λ) - 1` with `I` from [`regularization_integral`].
pub fn coupling_residual<T: Scalar>(u0: T, k: T, cutoff: T) -> Result<T> {
    Ok(u0 * regularization_integral(k, cutoff)? - T::one())
}

/// Root of [`coupling_residual`] in `ln k`, found by bisection without the
/// closed form.
pub fn k_from_coupling_numeric<T: Scalar>(u0: T, cutoff: T) -> Result<T> {
    check_cutoff(cutoff)?;
    if !(u0 > T::zero()) {
        return Err(Error::Sign(format!("numeric root needs U0 > 0, got {u0}")));
    }
    let ln_cut = cutoff.ln();
    // U0·I < U0·Λ²/(4πk²) < 1 above this
    let hi = ln_cut + (T::one() + u0 / (lit::<T>(4.0) * T::PI())).ln() * lit(0.5) + T::one();
    let lo = ln_cut - lit(650.0);
    let f = |ln_k: T| coupling_residual(u0, ln_k.exp(), cutoff);
    if f(lo)? < T::zero() {
        return Err(Error::Underflow(format!(
            "bound state for U0 = {u0} lies below k = Λ·e^-650"
        )));
    }
    Ok(bisect(f, lo, hi, lit::<T>(1e-14) * (T::one() + lo.abs()))?.exp())
}

/// Bound-state wavenumber with its energy `E = -k²/2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundState<T> {
    pub k: T,
    pub energy: T,
}

impl<T: Scalar> BoundState<T> {
    pub fn from_k(k: T) -> Result<Self> {
        Ok(Self {
            k,
            energy: energy_from_wavenumber(k, EnergySign::Negative)?,
        })
    }
}

/// Cutoff-regularised two-dimensional coupling together with its bound state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DeltaCoupling2D<T> {
    pub u0: T,
    pub cutoff: T,
    pub k: T,
}

impl<T: Scalar> DeltaCoupling2D<T> {
    /// From the bare coupling `u0 > 0`.
    pub fn from_coupling(u0: T, cutoff: T) -> Result<Self> {
        Ok(Self {
            u0,
            cutoff,
            k: k_from_coupling(u0, cutoff)?,
        })
    }

    /// From the bound-state wavenumber, deriving the coupling that produces it
    /// at this cutoff.
    pub fn from_k(k: T, cutoff: T) -> Result<Self> {
        Ok(Self {
            u0: coupling_from_k(k, cutoff)?,
            cutoff,
            k,
        })
    }

    pub fn bound_state(&self) -> Result<BoundState<T>> {
        BoundState::from_k(self.k)
    }
}

/// Contact interactions in one and three dimensions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum ContactCoupling<T> {
    /// `(d²/dx² - k²)Φ = U_0 δ(x) Φ`; binds only for `U_0 < 0`.
    OneDim { u0: T },
    /// Regularised contact fixed by its inverse scattering length, which must
    /// be positive for a bound state.
    ThreeDim { inverse_scattering_length: T },
}

pub fn one_three_d_bound_energy<T: Scalar>(coupling: ContactCoupling<T>) -> Result<BoundState<T>> {
    match coupling {
        ContactCoupling::OneDim { u0 } => {
            if !u0.is_finite() {
                return Err(Error::InvalidInput(format!(
                    "coupling must be finite, got {u0}"
                )));
            }
            if !(u0 < T::zero()) {
                return Err(Error::Sign(format!(
                    "a one-dimensional delta binds only for U0 < 0, got {u0}"
                )));
            }
            BoundState::from_k(-u0 * lit(0.5))
        }
        ContactCoupling::ThreeDim {
            inverse_scattering_length,
        } => {
            if !inverse_scattering_length.is_finite() {
                return Err(Error::InvalidInput(
                    "inverse scattering length must be finite".into(),
                ));
            }
            if !(inverse_scattering_length > T::zero()) {
                return Err(Error::Sign(format!(
                    "a three-dimensional contact binds only for positive inverse scattering length, got {inverse_scattering_length}"
                )));
            }
            BoundState::from_k(inverse_scattering_length)
        }
    }
}

/// `Φ⁽¹⁾(x) = √k·e^{-k|x|}`.
pub fn phi1<T: Scalar>(k: T, x: T) -> Result<T> {
    check_k(k)?;
    Ok(k.sqrt() * (-k * x.abs()).exp())
}

/// `Φ⁽³⁾(r) = √(k/2π)·e^{-kr}/r`.
pub fn phi3<T: Scalar>(k: T, r: T) -> Result<T> {
    check_k(k)?;
    if !(r > T::zero()) {
        return Err(Error::Domain(format!("Φ⁽³⁾ requires r > 0, got {r}")));
    }
    Ok((k / T::TAU()).sqrt() * (-k * r).exp() / r)
}
