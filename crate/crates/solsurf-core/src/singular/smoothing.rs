//! Solitary-point smoothing of projective hypersurfaces.
//!
//! For a homogeneous P(X0..Xn) with only ordinary double points and no
//! singularity at (1:0:...:0), the perturbation
//! `P + sum_{i=1}^n eps_i * X_i * dP/dX_i` keeps every former singular
//! point on the surface (each summand vanishes where the gradient does)
//! while restoring a nonzero gradient there.

use super::SingularError;
use crate::polycore::{rat_to_f64, QPoly};
use num_rational::BigRational;
use num_traits::Zero;

fn is_homogeneous(p: &QPoly) -> bool {
    let mut deg = None;
    for (e, _) in p.terms() {
        let d: u32 = e.iter().sum();
        match deg {
            None => deg = Some(d),
            Some(d0) if d0 != d => return false,
            _ => {}
        }
    }
    true
}

/// The smoothing perturbation. `eps` has one entry per variable after
/// the first (the sum starts at X1). Errors if P is not homogeneous or
/// is singular at the base point (1:0:...:0).
pub fn smooth_solitary(p: &QPoly, eps: &[BigRational]) -> Result<QPoly, SingularError> {
    if !is_homogeneous(p) {
        return Err(SingularError::NotHomogeneous);
    }
    let n = p.nvars();
    if eps.len() != n - 1 {
        return Err(SingularError::Uncertifiable(format!(
            "expected {} epsilon values, got {}",
            n - 1,
            eps.len()
        )));
    }
    // base point e0 = (1, 0, ..., 0): singular there iff all partials vanish
    let mut e0 = vec![BigRational::zero(); n];
    e0[0] = BigRational::from_integer(1.into());
    let grad = p.gradient();
    if grad.iter().all(|g| g.eval(&e0).unwrap().is_zero()) {
        return Err(SingularError::BasePointSingular);
    }
    let varrefs: Vec<&str> = p.vars().iter().map(|s| s.as_str()).collect();
    let mut out = p.clone();
    for i in 1..n {
        let xi = QPoly::var(&varrefs, i);
        out = out.add(&xi.mul(&grad[i]).scale(&eps[i - 1]));
    }
    Ok(out)
}

/// Verification record for one former singular point.
#[derive(Debug, Clone)]
pub struct SmoothingCheck {
    pub point: Vec<f64>,
    /// |P~(p)| relative to term magnitude (0 when checked exactly).
    pub on_surface_residual: f64,
    pub gradient_norm: f64,
    /// True when the point was rational and P~(p) = 0 held exactly.
    pub exact_on_surface: bool,
}

/// Check that each former singular point still lies on the perturbed
/// surface and is no longer singular there. Points with exact rational
/// coordinates are checked exactly.
pub fn verify_smoothing(
    p_tilde: &QPoly,
    former_singular: &[Vec<BigRational>],
) -> Vec<SmoothingCheck> {
    let grad = p_tilde.gradient();
    former_singular
        .iter()
        .map(|pt| {
            let v = p_tilde.eval(pt).unwrap();
            let exact = v.is_zero();
            let ptf: Vec<f64> = pt.iter().map(rat_to_f64).collect();
            let gnorm = grad
                .iter()
                .map(|g| rat_to_f64(&g.eval(pt).unwrap()).powi(2))
                .sum::<f64>()
                .sqrt();
            let (vf, mf) = p_tilde.to_float().eval_with_mag(&ptf);
            SmoothingCheck {
                point: ptf,
                on_surface_residual: if exact { 0.0 } else { vf.abs() / (1.0 + mf) },
                gradient_norm: gnorm,
                exact_on_surface: exact,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::Poly;
    use num_bigint::BigInt;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn qr(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    /// X1^2 + X2^2 + (X3 - X0)^2: one solitary point at (1:0:0:1).
    fn sphere_point() -> QPoly {
        let vars = ["X0", "X1", "X2", "X3"];
        Poly::from_terms(
            &vars,
            [
                (vec![0, 2, 0, 0], q(1)),
                (vec![0, 0, 2, 0], q(1)),
                (vec![0, 0, 0, 2], q(1)),
                (vec![1, 0, 0, 1], q(-2)),
                (vec![2, 0, 0, 0], q(1)),
            ],
        )
    }

    #[test]
    fn direct_expansion_example() {
        let p = sphere_point();
        let eps = vec![qr(1, 1000), qr(1, 1000), qr(1, 1000)];
        let pt = smooth_solitary(&p, &eps).unwrap();
        let singular = vec![vec![q(1), q(0), q(0), q(1)]];
        let checks = verify_smoothing(&pt, &singular);
        assert!(checks[0].exact_on_surface);
        assert!(checks[0].gradient_norm > 1e-8);
    }

    #[test]
    fn zero_eps_is_negative_control() {
        let p = sphere_point();
        let eps = vec![q(0), q(0), q(0)];
        let pt = smooth_solitary(&p, &eps).unwrap();
        assert_eq!(pt, p);
        let checks = verify_smoothing(&pt, &[vec![q(1), q(0), q(0), q(1)]]);
        assert!(checks[0].exact_on_surface);
        assert!(checks[0].gradient_norm < 1e-12); // still singular
    }

    #[test]
    fn base_point_singularity_rejected() {
        // X1^2 + X2^2 + X3^2 is singular exactly at (1:0:0:0)
        let vars = ["X0", "X1", "X2", "X3"];
        let p = Poly::from_terms(
            &vars,
            [
                (vec![0, 2, 0, 0], q(1)),
                (vec![0, 0, 2, 0], q(1)),
                (vec![0, 0, 0, 2], q(1)),
            ],
        );
        assert!(matches!(
            smooth_solitary(&p, &[q(0), q(0), q(0)]),
            Err(SingularError::BasePointSingular)
        ));
    }

    #[test]
    fn inhomogeneous_rejected() {
        let vars = ["X0", "X1"];
        let p = Poly::from_terms(&vars, [(vec![2, 0], q(1)), (vec![0, 1], q(1))]);
        assert!(matches!(
            smooth_solitary(&p, &[q(0)]),
            Err(SingularError::NotHomogeneous)
        ));
    }
}
