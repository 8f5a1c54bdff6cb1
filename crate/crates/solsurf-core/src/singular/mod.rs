//! Critical points, real singular points, their classification, the
//! census, and solitary-point smoothing.

pub mod census;
pub mod classify;
pub mod critical;
pub mod smoothing;
pub mod surface;

pub use census::{curve_solitary_census, CurveCensus, SingularityCensus};
pub use classify::{classify_curve, classify_surface, Parity, RealType, SingularPoint};
pub use critical::{
    critical_points_1d, critical_points_1d_float, critical_points_2d, real_common_zeros_exact,
    Completeness, CritOpts, CriticalPoint, CriticalPoints2d, ExtremumKind,
};
pub use smoothing::{smooth_solitary, verify_smoothing};
pub use surface::{singular_points, surface_census, SurfaceOpts};

use crate::polycore::PolyError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SingularError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("critical-value match ambiguity: f-value {f_value} matches distinct g-levels {g_values:?}")]
    MatchAmbiguity { f_value: f64, g_values: Vec<f64> },
    #[error("non-isolated singular locus detected: {witness}")]
    NonIsolated { witness: String },
    #[error("uncertifiable singular point: {0}")]
    Uncertifiable(String),
    #[error("degenerate elimination system: {0}")]
    DegenerateSystem(String),
    #[error("singularity at the forbidden base point (1:0:...:0); apply a coordinate change first")]
    BasePointSingular,
    #[error("input is not homogeneous")]
    NotHomogeneous,
    #[error("census exceeds the complex bound: {got} > {bound}")]
    CensusOverflow { got: usize, bound: usize },
}
