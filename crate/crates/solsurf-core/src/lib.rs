//! Toolkit for real algebraic curves and surfaces with many solitary
//! double points.
//!
//! The crate is organized around five subsystems:
//!
//! * [`polycore`] — exact-rational and float64 multivariate polynomial
//!   algebra: arithmetic, differentiation, evaluation, Sylvester
//!   resultants, and univariate real-root isolation.
//! * [`constructions`] — the named polynomial families: Tchebychev and
//!   degenerate Tchebychev polynomials, A2 folding polynomials and their
//!   real forms, Chmutov surfaces, Pecker curves, and small fixed
//!   witness curves.
//! * [`singular`] — critical-point finding, classification of real
//!   singular points (nodes, solitary points, higher `A`-singularities),
//!   census reporting, and solitary-point smoothing.
//! * [`deform`] — the numerical level-equalizing deformation: perturb a
//!   curve with only solitary singular points into a polynomial whose
//!   local minima all sit at +1 and local maxima at -1, and assemble the
//!   resulting separable surfaces.
//! * [`bounds`] — exact evaluators for the closed-form counting bounds,
//!   the summary table of known bounds for degrees 1..8, and the
//!   quadrangle falsification audit.
//!
//! All public values are immutable after construction and all operations
//! are pure functions; everything is safe to use from multiple threads.

pub mod bounds;
pub mod constructions;
pub mod deform;
pub mod polycore;
pub mod singular;
