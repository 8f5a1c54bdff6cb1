//! The named polynomial, curve, and surface families.

pub mod certificate;
pub mod folding;
pub mod pecker;
pub mod tchebychev;
pub mod witnesses;

pub use certificate::{Certificate, Check, CritRecord};
pub use folding::{chmutov, folding, real_folding, FoldingCertificate};
pub use pecker::{pecker_curve, pecker_double_points, DoublePointParam};
pub use tchebychev::{
    degenerate_tchebychev, degenerate_tchebychev_onesided, tchebychev, DegenerateCertificate,
};
pub use witnesses::{a2km1_curve, conic_pair_quartic, conjugate_lines_conic, separable_surface};

use crate::polycore::json::AnyPoly;
use crate::polycore::{FPoly, PolyError};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConstructError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("certification failed: {0}")]
    CertificationFailed(String),
    #[error("solver did not converge: {0} (best residual {1:.3e})")]
    SolverDiverged(String, f64),
    #[error("interpolation system is singular or inconsistent: {0}")]
    InterpolationSingular(String),
    #[error("imaginary parts did not cancel in the real form")]
    NonRealCoefficients,
    #[error("variable shapes do not match: {0}")]
    ShapeMismatch(String),
    #[error("invalid parameter: {0}")]
    BadParameter(String),
}

/// A surface in affine 3-space, either in the separable form
/// `f(x,y) - g(z) = 0` or as a general trivariate `F(x,y,z) = 0`.
/// The separable form drives the fast critical-value pairing path.
#[derive(Debug, Clone)]
pub enum SurfaceKind {
    Separable { f: AnyPoly, g: AnyPoly },
    General { f: AnyPoly },
}

#[derive(Debug, Clone)]
pub struct SurfaceSpec {
    pub kind: SurfaceKind,
    pub degree: u32,
}

impl SurfaceSpec {
    pub fn separable(f: AnyPoly, g: AnyPoly) -> Result<Self, ConstructError> {
        if f.vars().len() != 2 {
            return Err(ConstructError::ShapeMismatch(format!(
                "separable f must be bivariate, got {} variables",
                f.vars().len()
            )));
        }
        if g.vars().len() != 1 {
            return Err(ConstructError::ShapeMismatch(format!(
                "separable g must be univariate, got {} variables",
                g.vars().len()
            )));
        }
        let degree = f.total_degree().max(g.total_degree());
        Ok(SurfaceSpec {
            kind: SurfaceKind::Separable { f, g },
            degree,
        })
    }

    pub fn general(f: AnyPoly) -> Result<Self, ConstructError> {
        if f.vars().len() != 3 {
            return Err(ConstructError::ShapeMismatch(format!(
                "general surface must be trivariate, got {} variables",
                f.vars().len()
            )));
        }
        let degree = f.total_degree();
        Ok(SurfaceSpec {
            kind: SurfaceKind::General { f },
            degree,
        })
    }

    /// The defining trivariate polynomial `F(x,y,z)` (float domain).
    /// For the separable kind this is `f(x,y) - g(z)`.
    pub fn trivariate_float(&self) -> FPoly {
        let vars = ["x", "y", "z"];
        match &self.kind {
            SurfaceKind::Separable { f, g } => {
                let ff = f.to_float().embed(&vars);
                let gf = remap_univariate(&g.to_float(), "z").embed(&vars);
                ff.sub(&gf)
            }
            SurfaceKind::General { f } => f.to_float().embed(&vars),
        }
    }
}

/// Rename the single variable of a univariate polynomial.
pub(crate) fn remap_univariate(p: &FPoly, var: &str) -> FPoly {
    FPoly::from_terms(
        &[var],
        p.terms().map(|(e, c)| (e.clone(), *c)),
    )
}

/// JSON form of a surface specification.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SurfaceJson {
    Separable {
        degree: u32,
        f: crate::polycore::json::PolyJson,
        g: crate::polycore::json::PolyJson,
    },
    General {
        degree: u32,
        #[serde(rename = "F")]
        f: crate::polycore::json::PolyJson,
    },
}

pub fn surface_to_json(s: &SurfaceSpec) -> SurfaceJson {
    use crate::polycore::json::poly_to_json;
    match &s.kind {
        SurfaceKind::Separable { f, g } => SurfaceJson::Separable {
            degree: s.degree,
            f: poly_to_json(f),
            g: poly_to_json(g),
        },
        SurfaceKind::General { f } => SurfaceJson::General {
            degree: s.degree,
            f: poly_to_json(f),
        },
    }
}

pub fn surface_from_json(j: &SurfaceJson) -> Result<SurfaceSpec, ConstructError> {
    use crate::polycore::json::poly_from_json;
    match j {
        SurfaceJson::Separable { f, g, .. } => {
            let f = poly_from_json(f)
                .map_err(|e| ConstructError::ShapeMismatch(format!("bad f: {}", e)))?;
            let g = poly_from_json(g)
                .map_err(|e| ConstructError::ShapeMismatch(format!("bad g: {}", e)))?;
            SurfaceSpec::separable(f, g)
        }
        SurfaceJson::General { f, .. } => {
            let f = poly_from_json(f)
                .map_err(|e| ConstructError::ShapeMismatch(format!("bad F: {}", e)))?;
            SurfaceSpec::general(f)
        }
    }
}
