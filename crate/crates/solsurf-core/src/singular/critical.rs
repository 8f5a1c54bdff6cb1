//! Critical points of univariate and bivariate polynomials.
//!
//! The univariate exact path runs root isolation on the derivative; the
//! bivariate path polishes grid seeds by Newton iteration and checks
//! completeness against the elimination oracle (resultant of the two
//! partials, then exact real-root isolation).

use super::SingularError;
use crate::polycore::roots::{cluster_values, complex_roots};
use crate::polycore::unipoly::{isolate_real_roots_detailed, UniRat};
use crate::polycore::{rat_to_f64, resultant::resultant, FPoly, QPoly};
use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use rayon::prelude::*;

type C64 = Complex<f64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtremumKind {
    Minimum,
    Maximum,
    Saddle,
    /// Odd critical point of even derivative-vanishing order (no extremum).
    Inflection,
    /// Non-Morse bivariate critical point (flagged, never silently dropped).
    Degenerate,
}

/// A certified critical point: location, critical value, Hessian
/// signature `(n_plus, n_minus, n_zero)`, multiplicity (univariate:
/// vanishing order of the derivative; bivariate: 1 for Morse) and the
/// scale-relative gradient residual.
#[derive(Debug, Clone)]
pub struct CriticalPoint {
    pub location: Vec<f64>,
    pub value: f64,
    pub hessian_signature: (usize, usize, usize),
    pub multiplicity: u32,
    pub residual: f64,
    pub kind: ExtremumKind,
}

/// Exact critical points of a univariate rational polynomial: complete
/// list via root isolation on g' with multiplicities; locations refined
/// to 1e-12.
pub fn critical_points_1d(g: &QPoly) -> Result<Vec<CriticalPoint>, SingularError> {
    let gp = g.derivative(0);
    if gp.is_zero() {
        return Ok(vec![]);
    }
    let roots = isolate_real_roots_detailed(&gp, true)?;
    let gu = UniRat::from_poly(g)?;
    // refine each root to width 2^-48 (< 1e-14) before evaluating
    let width = BigRational::new(BigInt::from(1), BigInt::from(2).pow(48));
    let mut out = Vec::new();
    for mut r in roots {
        r.refine(&width);
        let z = rat_to_f64(&r.interval.midpoint());
        let mult = r.interval.multiplicity;
        let value = gu.eval_f64(z);
        // sign of the next nonvanishing derivative g^(mult+1)
        let mut d = gu.clone();
        for _ in 0..=mult {
            d = d.derivative();
        }
        let next = d.eval_f64(z);
        let kind = if mult % 2 == 1 {
            if next > 0.0 {
                ExtremumKind::Minimum
            } else {
                ExtremumKind::Maximum
            }
        } else {
            ExtremumKind::Inflection
        };
        let signature = if mult >= 2 {
            (0, 0, 1)
        } else if next > 0.0 {
            (1, 0, 0)
        } else {
            (0, 1, 0)
        };
        out.push(CriticalPoint {
            location: vec![z],
            value,
            hessian_signature: signature,
            multiplicity: mult,
            residual: 0.0,
            kind,
        });
    }
    out.sort_by(|a, b| a.location[0].partial_cmp(&b.location[0]).unwrap());
    Ok(out)
}

/// Float critical points of a univariate polynomial: roots of g' by
/// simultaneous iteration, clustered into multiple roots, with the
/// derivative order certified by successive-derivative magnitude tests.
pub fn critical_points_1d_float(g: &FPoly) -> Vec<CriticalPoint> {
    assert_eq!(g.nvars(), 1);
    let gp = g.derivative(0);
    if gp.is_zero() {
        return vec![];
    }
    let deg = gp.degree_in(0);
    let coeffs: Vec<C64> = (0..=deg)
        .map(|k| C64::new(gp.coeff(&[k]), 0.0))
        .collect();
    let all = complex_roots(&coeffs);
    let scale: f64 = all.iter().map(|z| z.norm()).fold(1.0, f64::max);
    let reals = crate::polycore::roots::real_roots_from_complex(&all, 1e-7);
    let clusters = cluster_values(&reals, 1e-6 * scale);
    let mut out = Vec::new();
    for (z0, cluster_size) in clusters {
        // polish the cluster mean against the first derivative that is
        // well-conditioned there
        let z = polish_1d(&gp, z0, cluster_size as u32);
        let value = g.eval(&[z]).unwrap();
        let mult = derivative_order_at(g, z).max(cluster_size as u32);
        let mut d = g.clone();
        for _ in 0..=mult {
            d = d.derivative(0);
        }
        let next = d.eval(&[z]).unwrap();
        let kind = if mult % 2 == 1 {
            if next > 0.0 {
                ExtremumKind::Minimum
            } else {
                ExtremumKind::Maximum
            }
        } else {
            ExtremumKind::Inflection
        };
        let signature = if mult >= 2 {
            (0, 0, 1)
        } else if next > 0.0 {
            (1, 0, 0)
        } else {
            (0, 1, 0)
        };
        let (gv, gm) = gp.eval_with_mag(&[z]);
        out.push(CriticalPoint {
            location: vec![z],
            value,
            hessian_signature: signature,
            multiplicity: mult,
            residual: gv.abs() / (1.0 + gm),
            kind,
        });
    }
    out.sort_by(|a, b| a.location[0].partial_cmp(&b.location[0]).unwrap());
    out
}

/// Newton-polish a root of g' of known cluster size m: apply Newton to
/// the (m-1)-th derivative of g', which has a simple root there.
fn polish_1d(gp: &FPoly, z0: f64, mult: u32) -> f64 {
    let mut h = gp.clone();
    for _ in 1..mult {
        h = h.derivative(0);
    }
    let hp = h.derivative(0);
    let mut z = z0;
    for _ in 0..60 {
        let f = h.eval(&[z]).unwrap();
        let d = hp.eval(&[z]).unwrap();
        if d == 0.0 {
            break;
        }
        let step = f / d;
        z -= step;
        if step.abs() < 1e-15 * (1.0 + z.abs()) {
            break;
        }
    }
    z
}

/// Vanishing order of g' at z: largest m with |g^(j)(z)| below a
/// relative threshold for j = 1..m.
fn derivative_order_at(g: &FPoly, z: f64) -> u32 {
    let mut d = g.derivative(0);
    let mut order = 0u32;
    let max_order = g.degree_in(0);
    for _ in 1..=max_order {
        let (v, m) = d.eval_with_mag(&[z]);
        if v.abs() <= 1e-7 * (1.0 + m) {
            order += 1;
            d = d.derivative(0);
        } else {
            break;
        }
    }
    order.max(1)
}

/// Options for bivariate critical-point search.
#[derive(Debug, Clone)]
pub struct CritOpts {
    /// Search box [-b, b]^2; auto-sized from coefficients when None.
    pub search_box: Option<f64>,
    pub grid_n: usize,
    /// Scale-relative gradient residual required for certification.
    pub tol: f64,
    /// Additional Newton seeds (known approximate locations).
    pub extra_seeds: Vec<[f64; 2]>,
    /// Seed Newton from the elimination oracle's candidates as well.
    pub oracle_seeds: bool,
}

impl Default for CritOpts {
    fn default() -> Self {
        CritOpts {
            search_box: None,
            grid_n: 64,
            tol: 1e-9,
            extra_seeds: vec![],
            oracle_seeds: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Completeness {
    /// Grid+Newton count agrees with the elimination oracle.
    Certified { oracle_count: usize },
    /// Oracle unavailable or degenerate; the list may be incomplete.
    Heuristic { reason: String },
}

#[derive(Debug, Clone)]
pub struct CriticalPoints2d {
    pub points: Vec<CriticalPoint>,
    /// Number found by grid+Newton alone (before oracle merge).
    pub grid_count: usize,
    pub completeness: Completeness,
}

fn hessian_at(f: &FPoly, p: &[f64]) -> [[f64; 2]; 2] {
    let h = f.hessian();
    [
        [
            h[0][0].eval(p).unwrap(),
            h[0][1].eval(p).unwrap(),
        ],
        [
            h[1][0].eval(p).unwrap(),
            h[1][1].eval(p).unwrap(),
        ],
    ]
}

/// Newton iteration on the gradient system from a seed; returns the
/// polished point and its scale-relative residual on success.
fn newton_2d(fx: &FPoly, fy: &FPoly, hess: &[FPoly; 3], seed: [f64; 2], tol: f64) -> Option<([f64; 2], f64)> {
    let mut p = seed;
    for _ in 0..80 {
        let gx = fx.eval(&p).unwrap();
        let gy = fy.eval(&p).unwrap();
        let a = hess[0].eval(&p).unwrap();
        let b = hess[1].eval(&p).unwrap();
        let c = hess[2].eval(&p).unwrap();
        let det = a * c - b * b;
        if !det.is_finite() || det.abs() < 1e-300 {
            return None;
        }
        let dx = (c * gx - b * gy) / det;
        let dy = (a * gy - b * gx) / det;
        if !dx.is_finite() || !dy.is_finite() {
            return None;
        }
        p[0] -= dx;
        p[1] -= dy;
        if dx.abs() + dy.abs() < 1e-15 * (1.0 + p[0].abs() + p[1].abs()) {
            break;
        }
        if p[0].abs() > 1e12 || p[1].abs() > 1e12 {
            return None;
        }
    }
    let (vx, mx) = fx.eval_with_mag(&p);
    let (vy, my) = fy.eval_with_mag(&p);
    let res = (vx.abs() + vy.abs()) / (1.0 + mx + my);
    if res < tol {
        Some((p, res))
    } else {
        None
    }
}

fn dedup_points(mut pts: Vec<([f64; 2], f64)>, tol: f64) -> Vec<([f64; 2], f64)> {
    pts.sort_by(|a, b| {
        a.0[0]
            .partial_cmp(&b.0[0])
            .unwrap()
            .then(a.0[1].partial_cmp(&b.0[1]).unwrap())
    });
    let mut out: Vec<([f64; 2], f64)> = Vec::new();
    for (p, r) in pts {
        let dup = out.iter().any(|(q, _)| {
            (p[0] - q[0]).abs() <= tol * (1.0 + p[0].abs())
                && (p[1] - q[1]).abs() <= tol * (1.0 + p[1].abs())
        });
        if !dup {
            out.push((p, r));
        }
    }
    out
}

/// Newton-polished critical points of a bivariate polynomial with a
/// completeness report against the elimination oracle.
pub fn critical_points_2d(f: &FPoly, opts: &CritOpts) -> CriticalPoints2d {
    assert_eq!(f.nvars(), 2);
    let fx = f.derivative(0);
    let fy = f.derivative(1);
    let hess = [fx.derivative(0), fx.derivative(1), fy.derivative(1)];
    let box_half = opts.search_box.unwrap_or_else(|| auto_box(f));
    let n = opts.grid_n.max(2);
    let mut seeds: Vec<[f64; 2]> = Vec::with_capacity(n * n + opts.extra_seeds.len());
    for i in 0..n {
        for j in 0..n {
            let x = -box_half + 2.0 * box_half * (i as f64 + 0.5) / n as f64;
            let y = -box_half + 2.0 * box_half * (j as f64 + 0.5) / n as f64;
            seeds.push([x, y]);
        }
    }
    seeds.extend(opts.extra_seeds.iter().cloned());
    let polished: Vec<([f64; 2], f64)> = seeds
        .par_iter()
        .filter_map(|s| newton_2d(&fx, &fy, &hess, *s, opts.tol))
        .collect();
    let dedup_tol = 1e-7;
    let mut found = dedup_points(polished, dedup_tol);
    let grid_count = found.len();

    // Elimination oracle: exact resultant + exact isolation. For float
    // input the coefficients are rationalized exactly first.
    let completeness = match real_common_zeros_exact(&fx.to_rational(), &fy.to_rational()) {
        Ok(oracle_pts) => {
            let oracle_count = oracle_pts.len();
            if opts.oracle_seeds {
                let extra: Vec<([f64; 2], f64)> = oracle_pts
                    .iter()
                    .filter_map(|s| newton_2d(&fx, &fy, &hess, *s, opts.tol))
                    .collect();
                found.extend(extra);
                found = dedup_points(found, dedup_tol);
            }
            Completeness::Certified { oracle_count }
        }
        Err(e) => Completeness::Heuristic {
            reason: format!("{}", e),
        },
    };

    let mut points: Vec<CriticalPoint> = found
        .into_iter()
        .map(|(p, res)| {
            let h = hessian_at(f, &p);
            let value = f.eval(&p).unwrap();
            classify_crit_2d(p, value, h, res)
        })
        .collect();
    points.sort_by(|a, b| {
        a.location[0]
            .partial_cmp(&b.location[0])
            .unwrap()
            .then(a.location[1].partial_cmp(&b.location[1]).unwrap())
    });
    CriticalPoints2d {
        points,
        grid_count,
        completeness,
    }
}

fn classify_crit_2d(p: [f64; 2], value: f64, h: [[f64; 2]; 2], res: f64) -> CriticalPoint {
    let tr = h[0][0] + h[1][1];
    let det = h[0][0] * h[1][1] - h[0][1] * h[1][0];
    let norm = h[0][0].abs() + 2.0 * h[0][1].abs() + h[1][1].abs();
    let degen = det.abs() <= 1e-8 * (norm * norm + 1e-300);
    let (signature, kind, mult) = if degen {
        let nz = if norm <= 1e-12 { 2 } else { 1 };
        (
            (0, 0, nz),
            ExtremumKind::Degenerate,
            2,
        )
    } else if det > 0.0 {
        if tr > 0.0 {
            ((2, 0, 0), ExtremumKind::Minimum, 1)
        } else {
            ((0, 2, 0), ExtremumKind::Maximum, 1)
        }
    } else {
        ((1, 1, 0), ExtremumKind::Saddle, 1)
    };
    CriticalPoint {
        location: vec![p[0], p[1]],
        value,
        hessian_signature: signature,
        multiplicity: mult,
        residual: res,
        kind,
    }
}

fn auto_box(f: &FPoly) -> f64 {
    // Size the box from the coefficient profile: roots of polynomials
    // with coefficients c_e cluster within max |c_e / c_top|^(1/k).
    let top = f.total_degree();
    if top == 0 {
        return 4.0;
    }
    let mut top_max: f64 = 0.0;
    for (e, c) in f.terms() {
        if e.iter().sum::<u32>() == top {
            top_max = top_max.max(c.abs());
        }
    }
    if top_max == 0.0 {
        return 8.0;
    }
    let mut bound: f64 = 1.0;
    for (e, c) in f.terms() {
        let k = top - e.iter().sum::<u32>();
        if k > 0 {
            bound = bound.max((c.abs() / top_max).powf(1.0 / k as f64));
        }
    }
    (2.5 * bound).clamp(4.0, 1e9)
}

/// All real common zeros of two exact bivariate polynomials, via
/// `Res_y(p,q)` + exact real-root isolation in x, then y-lifting and
/// joint Newton verification. This is the elimination oracle: for a
/// zero-dimensional system the returned list is complete.
pub fn real_common_zeros_exact(
    p: &QPoly,
    q: &QPoly,
) -> Result<Vec<[f64; 2]>, SingularError> {
    if p.is_zero() || q.is_zero() {
        return Err(SingularError::DegenerateSystem(
            "zero polynomial in system".into(),
        ));
    }
    let pf = p.to_float();
    let qf = q.to_float();
    let dyp = p.degree_in(1);
    let dyq = q.degree_in(1);
    // Degenerate shapes: one polynomial free of y.
    if dyp == 0 || dyq == 0 {
        let (uni, other, other_f) = if dyp == 0 {
            (p, q, &qf)
        } else {
            (q, p, &pf)
        };
        if uni.degree_in(1) != 0 {
            unreachable!()
        }
        if uni.degree_in(0) == 0 {
            return Err(SingularError::DegenerateSystem(
                "constant polynomial in system".into(),
            ));
        }
        let ux = uni.restrict_zero(1); // drop y (exponent 0 everywhere)
        let roots = isolate_real_roots_detailed(&ux, false)?;
        let mut out = Vec::new();
        for r in &roots {
            let x0 = r.to_f64(-50);
            // lift y from the other polynomial
            for y0 in univariate_real_roots_at_x(other_f, x0) {
                out.push([x0, y0]);
            }
            if other.degree_in(1) == 0 {
                return Err(SingularError::DegenerateSystem(
                    "both polynomials free of y".into(),
                ));
            }
        }
        return Ok(dedup_points(out.into_iter().map(|p| (p, 0.0)).collect(), 1e-8)
            .into_iter()
            .map(|(p, _)| p)
            .collect());
    }
    let res = resultant(p, q, p.vars()[1].as_str()).map_err(SingularError::Poly)?;
    if res.is_zero() {
        return Err(SingularError::DegenerateSystem(
            "resultant vanishes identically (positive-dimensional solution set)".into(),
        ));
    }
    if res.total_degree() == 0 {
        return Ok(vec![]);
    }
    let xroots = isolate_real_roots_detailed(&res, false)?;
    let fx = pf.clone();
    let fy = qf.clone();
    let hess = [fx.derivative(0), fx.derivative(1), fy.derivative(1)];
    let mut out: Vec<([f64; 2], f64)> = Vec::new();
    for r in &xroots {
        let x0 = r.to_f64(-50);
        let mut ys = univariate_real_roots_at_x(&pf, x0);
        ys.extend(univariate_real_roots_at_x(&qf, x0));
        for y0 in ys {
            // verify against the other polynomial, then joint polish
            let (vq, mq) = qf.eval_with_mag(&[x0, y0]);
            let (vp, mp) = pf.eval_with_mag(&[x0, y0]);
            if vq.abs() > 1e-5 * (1.0 + mq) || vp.abs() > 1e-5 * (1.0 + mp) {
                continue;
            }
            if let Some((pt, res)) = newton_2d(&fx, &fy, &hess, [x0, y0], 1e-8) {
                out.push((pt, res));
            }
        }
    }
    Ok(dedup_points(out, 1e-8).into_iter().map(|(p, _)| p).collect())
}

/// Real roots in y of f(x0, y).
fn univariate_real_roots_at_x(f: &FPoly, x0: f64) -> Vec<f64> {
    let dy = f.degree_in(1);
    let mut coeffs: Vec<C64> = Vec::with_capacity(dy as usize + 1);
    for k in 0..=dy {
        // coefficient of y^k at x=x0
        let mut acc = 0.0;
        for (e, c) in f.terms() {
            if e[1] == k {
                acc += c * x0.powi(e[0] as i32);
            }
        }
        coeffs.push(C64::new(acc, 0.0));
    }
    let all = complex_roots(&coeffs);
    crate::polycore::roots::real_roots_from_complex(&all, 1e-6)
}

/// All complex common zeros of two exact bivariate polynomials (used by
/// the folding certificate, which must examine complex critical points).
pub fn complex_common_zeros(
    p: &QPoly,
    q: &QPoly,
) -> Result<Vec<[C64; 2]>, SingularError> {
    if p.is_zero() || q.is_zero() {
        return Err(SingularError::DegenerateSystem(
            "zero polynomial in system".into(),
        ));
    }
    let dyp = p.degree_in(1);
    let dyq = q.degree_in(1);
    let pc = p.to_float().to_complex();
    let qc = q.to_float().to_complex();
    let mut xcands: Vec<C64> = Vec::new();
    if dyp == 0 || dyq == 0 {
        let uni = if dyp == 0 { p } else { q };
        if uni.degree_in(0) == 0 {
            return Err(SingularError::DegenerateSystem(
                "constant polynomial in system".into(),
            ));
        }
        let ux = uni.restrict_zero(1).to_float();
        let coeffs: Vec<C64> = (0..=ux.degree_in(0))
            .map(|k| C64::new(ux.coeff(&[k]), 0.0))
            .collect();
        xcands = complex_roots(&coeffs);
    } else {
        let res = resultant(p, q, p.vars()[1].as_str()).map_err(SingularError::Poly)?;
        if res.is_zero() {
            return Err(SingularError::DegenerateSystem(
                "resultant vanishes identically".into(),
            ));
        }
        if res.total_degree() == 0 {
            return Ok(vec![]);
        }
        let rf = res.to_float();
        let scale = rf.max_abs_coeff();
        let coeffs: Vec<C64> = (0..=rf.degree_in(0))
            .map(|k| C64::new(rf.coeff(&[k]) / scale, 0.0))
            .collect();
        xcands = complex_roots(&coeffs);
    }
    let mut out: Vec<[C64; 2]> = Vec::new();
    for &x0 in &xcands {
        let mut ycands = complex_univariate_roots_at(&pc, x0);
        ycands.extend(complex_univariate_roots_at(&qc, x0));
        for &y0 in &ycands {
            if let Some(pt) = complex_newton_2d(&pc, &qc, [x0, y0]) {
                out.push(pt);
            }
        }
    }
    // dedup
    let mut dedup: Vec<[C64; 2]> = Vec::new();
    for pt in out {
        let dup = dedup.iter().any(|q| {
            (pt[0] - q[0]).norm() <= 1e-6 * (1.0 + pt[0].norm())
                && (pt[1] - q[1]).norm() <= 1e-6 * (1.0 + pt[1].norm())
        });
        if !dup {
            dedup.push(pt);
        }
    }
    Ok(dedup)
}

fn complex_univariate_roots_at(f: &crate::polycore::CFPoly, x0: C64) -> Vec<C64> {
    let dy = f.degree_in(1);
    let mut coeffs: Vec<C64> = Vec::with_capacity(dy as usize + 1);
    for k in 0..=dy {
        let mut acc = C64::new(0.0, 0.0);
        for (e, c) in f.terms() {
            if e[1] == k {
                acc += c * x0.powi(e[0] as i32);
            }
        }
        coeffs.push(acc);
    }
    complex_roots(&coeffs)
}

fn complex_newton_2d(
    p: &crate::polycore::CFPoly,
    q: &crate::polycore::CFPoly,
    seed: [C64; 2],
) -> Option<[C64; 2]> {
    let px = p.derivative(0);
    let py = p.derivative(1);
    let qx = q.derivative(0);
    let qy = q.derivative(1);
    let mut z = seed;
    for _ in 0..60 {
        let f1 = p.eval(&z.to_vec()).unwrap();
        let f2 = q.eval(&z.to_vec()).unwrap();
        let a = px.eval(&z.to_vec()).unwrap();
        let b = py.eval(&z.to_vec()).unwrap();
        let c = qx.eval(&z.to_vec()).unwrap();
        let d = qy.eval(&z.to_vec()).unwrap();
        let det = a * d - b * c;
        if det.norm() < 1e-250 {
            return None;
        }
        let dx = (d * f1 - b * f2) / det;
        let dy = (a * f2 - c * f1) / det;
        z[0] -= dx;
        z[1] -= dy;
        if dx.norm() + dy.norm() < 1e-14 * (1.0 + z[0].norm() + z[1].norm()) {
            break;
        }
        if z[0].norm() > 1e10 || z[1].norm() > 1e10 {
            return None;
        }
    }
    let f1 = p.eval(&z.to_vec()).unwrap().norm();
    let f2 = q.eval(&z.to_vec()).unwrap().norm();
    let scale = 1.0 + z[0].norm().max(z[1].norm()).powi(p.total_degree() as i32);
    if f1 / scale < 1e-7 && f2 / scale < 1e-7 {
        Some(z)
    } else {
        None
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
    fn cubic_inflection_point() {
        // g = z^3: one critical point, multiplicity 2, neither min nor max
        let g = QPoly::from_terms(&["z"], [(vec![3], q(1))]);
        let cps = critical_points_1d(&g).unwrap();
        assert_eq!(cps.len(), 1);
        assert_eq!(cps[0].multiplicity, 2);
        assert_eq!(cps[0].kind, ExtremumKind::Inflection);
        assert!((cps[0].location[0]).abs() < 1e-12);
    }

    #[test]
    fn circle_min() {
        // f = x^2 + y^2: exactly one critical point, a minimum at 0
        let f = FPoly::from_terms(&["x", "y"], [(vec![2, 0], 1.0), (vec![0, 2], 1.0)]);
        let r = critical_points_2d(&f, &CritOpts::default());
        assert_eq!(r.points.len(), 1);
        assert_eq!(r.points[0].kind, ExtremumKind::Minimum);
        assert!(r.points[0].value.abs() < 1e-12);
        assert!(matches!(
            r.completeness,
            Completeness::Certified { oracle_count: 1 }
        ));
    }

    #[test]
    fn monkey_saddle_flagged_degenerate() {
        // f = x^3 - 3xy^2 has a degenerate critical point at the origin
        let f = FPoly::from_terms(&["x", "y"], [(vec![3, 0], 1.0), (vec![1, 2], -3.0)]);
        let r = critical_points_2d(&f, &CritOpts::default());
        assert_eq!(r.points.len(), 1);
        assert_eq!(r.points[0].kind, ExtremumKind::Degenerate);
    }

    #[test]
    fn oracle_counts_four_point_system() {
        // p = x^2 - 1, q = y^2 - 4: four real common zeros
        let p = QPoly::from_terms(&["x", "y"], [(vec![2, 0], q(1)), (vec![0, 0], q(-1))]);
        let qq = QPoly::from_terms(&["x", "y"], [(vec![0, 2], q(1)), (vec![0, 0], q(-4))]);
        let pts = real_common_zeros_exact(&p, &qq).unwrap();
        assert_eq!(pts.len(), 4);
    }

    #[test]
    fn float_1d_critical_points_of_quartic() {
        // g = z^4 - 2z^2: critical points at -1, 0, 1
        let g = FPoly::from_terms(&["z"], [(vec![4], 1.0), (vec![2], -2.0)]);
        let cps = critical_points_1d_float(&g);
        assert_eq!(cps.len(), 3);
        assert_eq!(cps[0].kind, ExtremumKind::Minimum);
        assert_eq!(cps[1].kind, ExtremumKind::Maximum);
        assert_eq!(cps[2].kind, ExtremumKind::Minimum);
        assert!((cps[0].value + 1.0).abs() < 1e-10);
    }

    #[test]
    fn degenerate_float_multiplicity() {
        // g = (z-1)^4 has a multiplicity-3 critical point at 1
        let g = Poly::from_terms(
            &["z"],
            [
                (vec![4], 1.0),
                (vec![3], -4.0),
                (vec![2], 6.0),
                (vec![1], -4.0),
                (vec![0], 1.0),
            ],
        );
        let cps = critical_points_1d_float(&g);
        assert_eq!(cps.len(), 1);
        assert_eq!(cps[0].multiplicity, 3);
        assert_eq!(cps[0].kind, ExtremumKind::Minimum);
    }
}
