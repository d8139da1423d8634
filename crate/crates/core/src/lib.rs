//! Free-particle radial physics in N dimensions: effective potentials with
//! the attractive `-1/(4r²)` term of two dimensions, cylinder functions,
//! Numerov integration of the radial equation, node statistics of `J_m`/`Y_m`
//! and the bound states of delta potentials in one, two and three dimensions.
//!
//! All routines are generic over [`Scalar`] (`f32` or `f64`); the `*64` aliases
//! below fix the scalar to `f64`, which is what the accuracy targets assume.
//! Units are dimensionless with `ħ = M = 1`.

// `!(x > 0)` is used on purpose so that NaN fails validation.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
// Reference values are kept at the precision they were computed with.
#![cfg_attr(test, allow(clippy::excessive_precision))]

pub mod boundstate;
pub mod error;
pub mod nodes;
pub mod potentials;
pub mod quadrature;
pub mod radial;
pub mod roots;
pub mod scalar;
pub mod specfun;
pub mod verify;

pub use boundstate::{ClosedForm, ContactCoupling, Dimension};
pub use error::{Error, Result};
pub use nodes::Refinement;
pub use potentials::Character;
pub use radial::{Direction, EnergySign, SolutionFamily};
pub use scalar::Scalar;
pub use specfun::{CylinderFamily, CylinderKind};
pub use verify::{SuiteResult, VerifyReport};

pub type EffectivePotential64 = potentials::EffectivePotential<f64>;
pub type RadialGrid64 = radial::RadialGrid<f64>;
pub type RadialWave64 = radial::RadialWave<f64>;
pub type ZeroTable64 = nodes::ZeroTable<f64>;
pub type NodeDensityReport64 = nodes::NodeDensityReport<f64>;
pub type BunchingVerdict64 = nodes::BunchingVerdict<f64>;
pub type ProbabilityDensity64 = boundstate::ProbabilityDensity<f64>;
pub type DeltaCoupling2D64 = boundstate::DeltaCoupling2D<f64>;
pub type BoundState64 = boundstate::BoundState<f64>;
