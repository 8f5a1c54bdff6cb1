//! Census of real singular points: plane curves and surfaces.

use super::classify::{classify_curve, Parity, RealType, SingularPoint};
use super::critical::{critical_points_2d, CritOpts, Completeness};
use super::SingularError;
use crate::polycore::json::AnyPoly;
use crate::polycore::resultant::resultant;
use crate::polycore::unipoly::squarefree_decomposition;
use crate::polycore::unipoly::UniRat;
use crate::polycore::QPoly;
use serde::Serialize;
use std::collections::BTreeMap;

/// Classified count of the real singular points of a plane curve.
#[derive(Debug, Clone, Serialize)]
pub struct CurveCensus {
    pub degree: u32,
    pub solitary_even: usize,
    pub solitary_odd: usize,
    pub crossings: usize,
    /// Higher solitary types, keyed like "A3_solitary".
    pub higher: BTreeMap<String, usize>,
    pub other: usize,
    /// Number of even solitary points (the quantity `es`).
    pub es: usize,
    pub residual_max: f64,
    pub complete: bool,
    pub notes: Vec<String>,
    #[serde(skip)]
    pub points: Vec<SingularPoint>,
}

impl CurveCensus {
    pub fn solitary_total(&self) -> usize {
        self.solitary_even + self.solitary_odd
    }
}

/// Exact pre-check: a repeated factor of C makes the singular locus
/// positive-dimensional. Detected via identically-vanishing resultants
/// with the partials.
fn non_isolated_check(c: &QPoly) -> Result<(), SingularError> {
    let dx = c.degree_in(0);
    let dy = c.degree_in(1);
    if dx == 0 || dy == 0 {
        // union of axis-parallel lines: singular iff a repeated factor
        let (uni, var) = if dy == 0 {
            (c.restrict_zero(1), "x")
        } else {
            (c.restrict_zero(0), "y")
        };
        let u = UniRat::from_poly(&uni)?;
        if u.is_zero() {
            return Err(SingularError::NonIsolated {
                witness: "zero polynomial".into(),
            });
        }
        for (f, m) in squarefree_decomposition(&u) {
            if m >= 2 {
                return Err(SingularError::NonIsolated {
                    witness: format!("repeated univariate factor in {}: degree {}", var, f.degree()),
                });
            }
        }
        return Ok(());
    }
    let cy = c.derivative(1);
    if cy.degree_in(1) > 0 {
        let ry = resultant(c, &cy, c.vars()[1].as_str()).map_err(SingularError::Poly)?;
        if ry.is_zero() {
            return Err(SingularError::NonIsolated {
                witness: "res_y(C, C_y) = 0: repeated factor involving y".into(),
            });
        }
    }
    let cx = c.derivative(0);
    if cx.degree_in(0) > 0 {
        let rx = resultant(c, &cx, c.vars()[0].as_str()).map_err(SingularError::Poly)?;
        if rx.is_zero() {
            return Err(SingularError::NonIsolated {
                witness: "res_x(C, C_x) = 0: repeated factor involving x".into(),
            });
        }
    }
    Ok(())
}

/// Census of the real singular points of a plane curve: solitary points
/// split by parity, crossings, higher solitary types. Requires isolated
/// real double points; a positive-dimensional singular locus aborts.
pub fn curve_solitary_census(
    c: &AnyPoly,
    opts: &CritOpts,
) -> Result<CurveCensus, SingularError> {
    let cf = c.to_float();
    assert_eq!(cf.nvars(), 2, "curve census needs a bivariate polynomial");
    if let AnyPoly::Rational(cq) = c {
        non_isolated_check(cq)?;
    }
    let degree = cf.total_degree();
    let crits = critical_points_2d(&cf, opts);
    let complete = matches!(crits.completeness, Completeness::Certified { .. });
    let mut notes = Vec::new();
    if let Completeness::Heuristic { reason } = &crits.completeness {
        notes.push(format!("critical-point completeness heuristic: {}", reason));
    }
    let mut census = CurveCensus {
        degree,
        solitary_even: 0,
        solitary_odd: 0,
        crossings: 0,
        higher: BTreeMap::new(),
        other: 0,
        es: 0,
        residual_max: 0.0,
        complete,
        notes,
        points: Vec::new(),
    };
    for cp in &crits.points {
        // singular points of the curve = critical points with value 0
        let (v, m) = cf.eval_with_mag(&cp.location);
        if v.abs() > 1e-7 * (1.0 + m) {
            continue;
        }
        let sp = classify_curve(&cf, &cp.location);
        census.residual_max = census.residual_max.max(sp.residual).max(sp.value_residual);
        match &sp.real_type {
            RealType::A1Solitary => match sp.parity {
                Some(Parity::Even) => census.solitary_even += 1,
                Some(Parity::Odd) => census.solitary_odd += 1,
                None => census.other += 1,
            },
            RealType::A1Minus => census.crossings += 1,
            RealType::A2km1Solitary(k) => {
                *census
                    .higher
                    .entry(RealType::A2km1Solitary(*k).key())
                    .or_insert(0) += 1;
            }
            RealType::Other => {
                if sp.kernel_order.is_none() && sp.diagnostics.contains("flat") {
                    return Err(SingularError::NonIsolated {
                        witness: format!("flat direction at {:?}", sp.location),
                    });
                }
                census.other += 1;
            }
        }
        census.points.push(sp);
    }
    census.es = census.solitary_even;
    let bound = (degree * degree) as f64 * 7.0 / 16.0;
    census.notes.push(format!(
        "es(C) = {}; asymptotic envelope (7/16)d^2 = {:.2} (reported, not asserted)",
        census.es, bound
    ));
    // complex bound for a plane curve: (d-1)^2 critical points
    let cap = ((degree.max(1) - 1) * (degree.max(1) - 1)) as usize;
    let total = census.solitary_total()
        + census.crossings
        + census.other
        + census.higher.values().sum::<usize>();
    if degree > 1 && total > cap {
        return Err(SingularError::CensusOverflow {
            got: total,
            bound: cap,
        });
    }
    Ok(census)
}

/// Classified count of the real singular points of a surface, with the
/// affine chart and the plane at infinity reported separately.
#[derive(Debug, Clone, Serialize)]
pub struct SingularityCensus {
    pub degree: u32,
    pub counts: BTreeMap<String, usize>,
    pub at_infinity: BTreeMap<String, usize>,
    pub residual_max: f64,
    pub complete: bool,
    pub notes: Vec<String>,
    #[serde(skip)]
    pub points: Vec<SingularPoint>,
}

impl SingularityCensus {
    pub fn new(degree: u32) -> Self {
        SingularityCensus {
            degree,
            counts: BTreeMap::new(),
            at_infinity: BTreeMap::new(),
            residual_max: 0.0,
            complete: false,
            notes: Vec::new(),
            points: Vec::new(),
        }
    }

    pub fn count(&self, key: &str) -> usize {
        self.counts.get(key).copied().unwrap_or(0)
    }

    pub fn affine_total(&self) -> usize {
        self.counts.values().sum()
    }

    /// Record a classified affine point; errors if the census exceeds the
    /// complex cap (deg-1)^3 for the ambient degree.
    pub fn push_affine(&mut self, sp: SingularPoint) -> Result<(), SingularError> {
        self.residual_max = self.residual_max.max(sp.residual).max(sp.value_residual);
        *self.counts.entry(sp.real_type.key()).or_insert(0) += 1;
        self.points.push(sp);
        let cap = (self.degree.max(1) as usize - 1).pow(3).max(1);
        if self.degree > 1 && self.affine_total() > cap {
            return Err(SingularError::CensusOverflow {
                got: self.affine_total(),
                bound: cap,
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::Poly;
    use num_rational::BigRational;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn single_even_solitary_point() {
        // x^2 + y^2: one even solitary point
        let c = AnyPoly::Rational(Poly::from_terms(
            &["x", "y"],
            [(vec![2, 0], q(1)), (vec![0, 2], q(1))],
        ));
        let census = curve_solitary_census(&c, &CritOpts::default()).unwrap();
        assert_eq!(census.solitary_even, 1);
        assert_eq!(census.solitary_odd, 0);
        assert_eq!(census.crossings, 0);
        assert_eq!(census.es, 1);
    }

    #[test]
    fn non_isolated_locus_aborts() {
        // (x^2 + y^2 - 1)^2 is singular along the whole circle
        let circle = Poly::from_terms(
            &["x", "y"],
            [(vec![2, 0], q(1)), (vec![0, 2], q(1)), (vec![0, 0], q(-1))],
        );
        let c = AnyPoly::Rational(circle.mul(&circle));
        assert!(matches!(
            curve_solitary_census(&c, &CritOpts::default()),
            Err(SingularError::NonIsolated { .. })
        ));
    }

    #[test]
    fn crossing_counted() {
        // x^2 - y^2: one crossing
        let c = AnyPoly::Rational(Poly::from_terms(
            &["x", "y"],
            [(vec![2, 0], q(1)), (vec![0, 2], q(-1))],
        ));
        let census = curve_solitary_census(&c, &CritOpts::default()).unwrap();
        assert_eq!(census.crossings, 1);
        assert_eq!(census.solitary_total(), 0);
    }
}
