//! Effective radial potentials.
//!
//! Every potential here has the pure inverse-square form `c / r²`. Values are
//! returned in units of `ħ²/(2M)` (with `ħ = M = 1` that prefactor is `1/2`),
//! so [`EffectivePotential::eval`] returns `c / r²` and the radial equation
//! reads `u'' = (eval(r) - 2E) u`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{int, lit, Scalar};

/// Which effective potential to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum EffectivePotential<T> {
    /// Two dimensions, angular momentum `m`: `(m² - 1/4) / r²`.
    TwoDim { m: u32 },
    /// Three dimensions, angular momentum `l`: `l(l+1) / r²`.
    ThreeDim { l: u32 },
    /// `N` dimensions, zero angular momentum: `(N-1)(N-3) / (4r²)`.
    NDimZeroMomentum { n: u32 },
    /// Classical centrifugal term `L² / r²`, with `L²` in units of `ħ²`.
    Classical { l_squared: T },
    /// The attractive `-1 / (4r²)` term of two dimensions at `m = 0`.
    QuantumAnti,
}

/// Sign character of a potential.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Character {
    Attractive,
    Repulsive,
    Vanishing,
}

impl<T: Scalar> EffectivePotential<T> {
    pub fn two_dim(m: u32) -> Self {
        Self::TwoDim { m }
    }

    pub fn three_dim(l: u32) -> Self {
        Self::ThreeDim { l }
    }

    pub fn n_dim(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("space dimension must be >= 1".into()));
        }
        Ok(Self::NDimZeroMomentum { n })
    }

    pub fn classical(l_squared: T) -> Result<Self> {
        if !(l_squared >= T::zero()) || !l_squared.is_finite() {
            return Err(Error::InvalidInput(format!(
                "L² must be finite and non-negative, got {l_squared}"
            )));
        }
        Ok(Self::Classical { l_squared })
    }

    /// Four times the numerator `c`, exactly, for the integer-parametrised
    /// families. `None` for [`EffectivePotential::Classical`].
    pub fn quarter_numerator(&self) -> Option<i64> {
        match *self {
            Self::TwoDim { m } => {
                let m = m as i64;
                Some(4 * m * m - 1)
            }
            Self::ThreeDim { l } => {
                let l = l as i64;
                Some(4 * l * (l + 1))
            }
            Self::NDimZeroMomentum { n } => {
                let n = n as i64;
                Some((n - 1) * (n - 3))
            }
            Self::Classical { .. } => None,
            Self::QuantumAnti => Some(-1),
        }
    }

    /// The coefficient `c` of `c / r²`.
    pub fn numerator(&self) -> T {
        match (*self, self.quarter_numerator()) {
            (Self::Classical { l_squared }, _) => l_squared,
            (_, Some(q)) => int::<T>(q) * lit(0.25),
            (_, None) => unreachable!("only the classical family lacks an exact numerator"),
        }
    }

    /// Value at radius `r` in units of `ħ²/(2M)`.
    pub fn eval(&self, r: T) -> Result<T> {
        if !(r > T::zero()) || !r.is_finite() {
            return Err(Error::Domain(format!(
                "potentials are defined for r > 0, got {r}"
            )));
        }
        Ok(self.numerator() / (r * r))
    }

    /// Value at radius `r` in energy units with `ħ = M = 1` (half of [`Self::eval`]).
    pub fn energy(&self, r: T) -> Result<T> {
        Ok(self.eval(r)? * lit(0.5))
    }

    /// Sign of the `r`-independent numerator.
    pub fn classify(&self) -> Character {
        let sign = match (*self, self.quarter_numerator()) {
            (_, Some(q)) => q.signum(),
            (Self::Classical { l_squared }, None) => {
                if l_squared > T::zero() {
                    1
                } else {
                    0
                }
            }
            _ => unreachable!(),
        };
        match sign {
            s if s < 0 => Character::Attractive,
            0 => Character::Vanishing,
            _ => Character::Repulsive,
        }
    }
}

impl<T: Scalar> std::fmt::Display for EffectivePotential<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::TwoDim { m } => write!(f, "V_{m}^(2)"),
            Self::ThreeDim { l } => write!(f, "V_{l}^(3)"),
            Self::NDimZeroMomentum { n } => write!(f, "V_0^({n})"),
            Self::Classical { l_squared } => write!(f, "V_cl(L²={l_squared})"),
            Self::QuantumAnti => write!(f, "V_Q"),
        }
    }
}

/// `m² - 1/4 = (m - 1/2)(m + 1/2)`, the two-dimensional analogue of `l(l+1)`
/// in units of `ħ²`.
pub fn quantum_square_2d<T: Scalar>(m: i64) -> T {
    int::<T>(4 * m * m - 1) * lit(0.25)
}
