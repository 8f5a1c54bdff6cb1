//! Singular points of surfaces: the separable critical-value pairing
//! path, the general elimination path, the independent oracle count, and
//! the at-infinity scan.

use super::census::SingularityCensus;
use super::classify::{classify_surface, RealType, SingularPoint};
use super::critical::{
    critical_points_1d, critical_points_1d_float, critical_points_2d, real_common_zeros_exact,
    Completeness, CritOpts, CriticalPoint, ExtremumKind,
};
use super::SingularError;
use crate::constructions::{SurfaceKind, SurfaceSpec};
use crate::polycore::json::AnyPoly;
use crate::polycore::roots::cluster_values;
use crate::polycore::FPoly;
use nalgebra::{DMatrix, DVector};

#[derive(Debug, Clone)]
pub struct SurfaceOpts {
    pub crit: CritOpts,
    /// Relative tolerance for critical-value matching (separable path).
    pub match_tol: f64,
    /// Grid resolution per axis for the general path.
    pub grid_3d: usize,
    /// Scan the plane at infinity as well.
    pub at_infinity: bool,
}

impl Default for SurfaceOpts {
    fn default() -> Self {
        SurfaceOpts {
            crit: CritOpts::default(),
            match_tol: 1e-7,
            grid_3d: 20,
            at_infinity: false,
        }
    }
}

fn g_critical_points(g: &AnyPoly) -> Result<Vec<CriticalPoint>, SingularError> {
    match g {
        AnyPoly::Rational(gq) => critical_points_1d(gq),
        AnyPoly::Float(gf) => Ok(critical_points_1d_float(gf)),
    }
}

/// Singular points of a surface. The separable kind pairs critical
/// points of `f` and `g` whose critical values agree within `match_tol`
/// (the surface `f - g = 0` is singular exactly at such pairs); the
/// general kind solves the full gradient system seeded by elimination.
pub fn singular_points(
    surface: &SurfaceSpec,
    opts: &SurfaceOpts,
) -> Result<Vec<SingularPoint>, SingularError> {
    match &surface.kind {
        SurfaceKind::Separable { f, g } => separable_singular_points(surface, f, g, opts),
        SurfaceKind::General { f } => general_singular_points(&f.to_float(), opts),
    }
}

fn separable_singular_points(
    surface: &SurfaceSpec,
    f: &AnyPoly,
    g: &AnyPoly,
    opts: &SurfaceOpts,
) -> Result<Vec<SingularPoint>, SingularError> {
    let ff = f.to_float();
    let fcrit = critical_points_2d(&ff, &opts.crit);
    let gcrit = g_critical_points(g)?;
    let big_f = surface.trivariate_float();
    let value_scale = fcrit
        .points
        .iter()
        .map(|c| c.value.abs())
        .chain(gcrit.iter().map(|c| c.value.abs()))
        .fold(1.0f64, f64::max);
    let tol = opts.match_tol * value_scale;

    // distinct g-levels (several g critical points may share one level)
    let mut glevels: Vec<f64> = gcrit.iter().map(|c| c.value).collect();
    glevels.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let glevels = cluster_values(&glevels, tol * 0.1);

    let mut out = Vec::new();
    for fc in &fcrit.points {
        // ambiguity: one f-level matching two distinct g-levels
        let matching: Vec<f64> = glevels
            .iter()
            .map(|(v, _)| *v)
            .filter(|v| (v - fc.value).abs() <= tol)
            .collect();
        if matching.len() > 1 {
            return Err(SingularError::MatchAmbiguity {
                f_value: fc.value,
                g_values: matching,
            });
        }
        if matching.is_empty() {
            continue;
        }
        for gc in gcrit.iter().filter(|gc| (gc.value - fc.value).abs() <= tol) {
            let p = vec![fc.location[0], fc.location[1], gc.location[0]];
            let mut sp = classify_surface(&big_f, &p);
            if fc.kind == ExtremumKind::Degenerate {
                // non-Morse critical point of f: flagged, kept out of the
                // A1 pairing, never silently dropped
                sp.real_type = RealType::Other;
                sp.diagnostics = format!(
                    "degenerate bivariate critical point of f at ({:.6}, {:.6})",
                    fc.location[0], fc.location[1]
                );
            }
            out.push(sp);
        }
    }
    sort_points(&mut out);
    Ok(out)
}

/// Independent count for separable surfaces: critical points of `f`
/// from the elimination oracle (no grid involved), critical points of
/// `g` from exact isolation, then exhaustive critical-value matching.
pub fn separable_oracle_count(
    surface: &SurfaceSpec,
    match_tol: f64,
) -> Result<usize, SingularError> {
    let (f, g) = match &surface.kind {
        SurfaceKind::Separable { f, g } => (f, g),
        SurfaceKind::General { .. } => {
            return Err(SingularError::DegenerateSystem(
                "oracle count requires the separable form".into(),
            ))
        }
    };
    let ff = f.to_float();
    let fq = match f {
        AnyPoly::Rational(q) => q.clone(),
        AnyPoly::Float(p) => p.to_rational(),
    };
    let fx = fq.derivative(0);
    let fy = fq.derivative(1);
    let fcrit = real_common_zeros_exact(&fx, &fy)?;
    let gcrit = g_critical_points(g)?;
    let value_scale = gcrit
        .iter()
        .map(|c| c.value.abs())
        .fold(1.0f64, f64::max)
        .max(fcrit.iter().map(|p| ff.eval(p).unwrap().abs()).fold(0.0, f64::max));
    let tol = match_tol * value_scale;
    let mut count = 0;
    for p in &fcrit {
        let fv = ff.eval(p).unwrap();
        count += gcrit.iter().filter(|gc| (gc.value - fv).abs() <= tol).count();
    }
    Ok(count)
}

fn general_singular_points(
    f: &FPoly,
    opts: &SurfaceOpts,
) -> Result<Vec<SingularPoint>, SingularError> {
    assert_eq!(f.nvars(), 3);
    let grad: Vec<FPoly> = f.gradient();
    let hess: Vec<Vec<FPoly>> = f.hessian();
    let boxh = general_box(f);
    let n = opts.grid_3d.max(4);
    let mut seeds: Vec<[f64; 3]> = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                seeds.push([
                    -boxh + 2.0 * boxh * (i as f64 + 0.5) / n as f64,
                    -boxh + 2.0 * boxh * (j as f64 + 0.5) / n as f64,
                    -boxh + 2.0 * boxh * (k as f64 + 0.5) / n as f64,
                ]);
            }
        }
    }
    // elimination-derived seeds: common zeros of res_z(F_x, F_z) and
    // res_z(F_y, F_z) give (x, y) candidates; z lifted from F_z
    if let Some(elim_seeds) = elimination_seeds(f) {
        seeds.extend(elim_seeds);
    }
    use rayon::prelude::*;
    let polished: Vec<[f64; 3]> = seeds
        .par_iter()
        .filter_map(|s| newton_3d(&grad, &hess, *s, opts.crit.tol))
        .collect();
    // keep only points on the surface
    let mut kept: Vec<[f64; 3]> = Vec::new();
    for p in polished {
        let (v, m) = f.eval_with_mag(&p);
        if v.abs() <= 1e-7 * (1.0 + m) {
            kept.push(p);
        }
    }
    kept.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut dedup: Vec<[f64; 3]> = Vec::new();
    for p in kept {
        if !dedup.iter().any(|q| {
            (0..3).all(|i| (p[i] - q[i]).abs() <= 1e-7 * (1.0 + p[i].abs()))
        }) {
            dedup.push(p);
        }
    }
    let mut out: Vec<SingularPoint> = dedup
        .iter()
        .map(|p| classify_surface(f, p))
        .collect();
    sort_points(&mut out);
    Ok(out)
}

fn elimination_seeds(f: &FPoly) -> Option<Vec<[f64; 3]>> {
    let fq = f.to_rational();
    let fx = fq.derivative(0);
    let fy = fq.derivative(1);
    let fz = fq.derivative(2);
    let zvar = fq.vars()[2].clone();
    // the resultant already lives in the remaining variables (x, y)
    let rx = crate::polycore::resultant::resultant(&fx, &fz, &zvar).ok()?;
    let ry = crate::polycore::resultant::resultant(&fy, &fz, &zvar).ok()?;
    let pts = real_common_zeros_exact(&rx, &ry).ok()?;
    let fzf = f.derivative(2);
    let mut seeds = Vec::new();
    for [x0, y0] in pts {
        // z candidates: roots of F_z(x0, y0, z)
        let dz = fzf.degree_in(2);
        let coeffs: Vec<num_complex::Complex<f64>> = (0..=dz)
            .map(|k| {
                let mut acc = 0.0;
                for (e, c) in fzf.terms() {
                    if e[2] == k {
                        acc += c * x0.powi(e[0] as i32) * y0.powi(e[1] as i32);
                    }
                }
                num_complex::Complex::new(acc, 0.0)
            })
            .collect();
        for z0 in crate::polycore::roots::real_roots_from_complex(
            &crate::polycore::roots::complex_roots(&coeffs),
            1e-6,
        ) {
            seeds.push([x0, y0, z0]);
        }
    }
    Some(seeds)
}

fn newton_3d(
    grad: &[FPoly],
    hess: &[Vec<FPoly>],
    seed: [f64; 3],
    tol: f64,
) -> Option<[f64; 3]> {
    let mut p = seed;
    for _ in 0..80 {
        let g = DVector::from_iterator(3, grad.iter().map(|gi| gi.eval(&p).unwrap()));
        let mut h = DMatrix::<f64>::zeros(3, 3);
        for i in 0..3 {
            for j in 0..3 {
                h[(i, j)] = hess[i][j].eval(&p).unwrap();
            }
        }
        let step = h.lu().solve(&g)?;
        for i in 0..3 {
            p[i] -= step[i];
        }
        if step.amax() < 1e-15 * (1.0 + p.iter().map(|x| x.abs()).fold(0.0, f64::max)) {
            break;
        }
        if p.iter().any(|x| x.abs() > 1e9) {
            return None;
        }
    }
    let mut res = 0.0f64;
    for gi in grad {
        let (v, m) = gi.eval_with_mag(&p);
        res = res.max(v.abs() / (1.0 + m));
    }
    if res < tol {
        Some(p)
    } else {
        None
    }
}

fn general_box(f: &FPoly) -> f64 {
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
        return 6.0;
    }
    let mut bound: f64 = 1.0;
    for (e, c) in f.terms() {
        let k = top - e.iter().sum::<u32>();
        if k > 0 {
            bound = bound.max((c.abs() / top_max).powf(1.0 / k as f64));
        }
    }
    (2.0 * bound).clamp(3.0, 1e6)
}

fn sort_points(points: &mut [SingularPoint]) {
    points.sort_by(|a, b| {
        a.location
            .partial_cmp(&b.location)
            .unwrap_or(std::cmp::Ordering::Equal)
    });
}

/// Full census of a surface: affine points via [`singular_points`], the
/// plane at infinity scanned separately on the homogenized top form.
pub fn surface_census(
    surface: &SurfaceSpec,
    opts: &SurfaceOpts,
) -> Result<SingularityCensus, SingularError> {
    let mut census = SingularityCensus::new(surface.degree);
    let points = singular_points(surface, opts)?;
    for sp in points {
        census.push_affine(sp)?;
    }
    // completeness: grid path vs elimination oracle on the separable form
    match &surface.kind {
        SurfaceKind::Separable { .. } => match separable_oracle_count(surface, opts.match_tol) {
            Ok(oracle) => {
                census.complete = oracle == census.affine_total();
                census.notes.push(format!(
                    "elimination oracle count {} vs census {}",
                    oracle,
                    census.affine_total()
                ));
            }
            Err(e) => {
                census.complete = false;
                census.notes.push(format!("oracle unavailable: {}", e));
            }
        },
        SurfaceKind::General { .. } => {
            census.complete = false;
            census
                .notes
                .push("general path: completeness heuristic (grid + elimination seeds)".into());
        }
    }
    if opts.at_infinity {
        let (counts, pts) = at_infinity_scan(surface);
        census.at_infinity = counts;
        census
            .notes
            .push(format!("at-infinity scan found {} points (heuristic)", pts.len()));
    }
    Ok(census)
}

/// Scan the plane at infinity for singular points of the projective
/// closure: in each chart, solve all four partials of the
/// homogenization on w = 0 and classify in that chart.
fn at_infinity_scan(
    surface: &SurfaceSpec,
) -> (std::collections::BTreeMap<String, usize>, Vec<SingularPoint>) {
    let f = surface.trivariate_float();
    let fbar = f.homogenize("w", surface.degree);
    let grads: Vec<FPoly> = fbar.gradient();
    let mut reps: Vec<[f64; 3]> = Vec::new(); // projective reps (x,y,z), w=0
    let mut points: Vec<SingularPoint> = Vec::new();
    let mut counts = std::collections::BTreeMap::new();
    for chart in 0..3usize {
        // chart: coordinate `chart` set to 1, w = 0; unknowns: the other two
        let others: Vec<usize> = (0..3).filter(|&i| i != chart).collect();
        let n = 40;
        let boxh = 8.0;
        for i in 0..n {
            for j in 0..n {
                let mut p = [0.0f64; 4];
                p[chart] = 1.0;
                p[others[0]] = -boxh + 2.0 * boxh * (i as f64 + 0.5) / n as f64;
                p[others[1]] = -boxh + 2.0 * boxh * (j as f64 + 0.5) / n as f64;
                if let Some(sol) = gauss_newton_infinity(&grads, p, others.as_slice()) {
                    // verify all four partials vanish (scale-relative)
                    let ok = grads.iter().all(|g| {
                        let (v, m) = g.eval_with_mag(&sol);
                        v.abs() <= 1e-7 * (1.0 + m)
                    });
                    if !ok {
                        continue;
                    }
                    let rep = normalize_projective([sol[0], sol[1], sol[2]]);
                    if reps
                        .iter()
                        .any(|r| (0..3).all(|i| (r[i] - rep[i]).abs() < 1e-6))
                    {
                        continue;
                    }
                    reps.push(rep);
                    // classify in this chart: affine function of the
                    // remaining coordinates (others + w)
                    let chart_poly = chart_dehomogenize(&fbar, chart);
                    let q = [sol[others[0]], sol[others[1]], 0.0];
                    let sp = classify_surface(&chart_poly, &q);
                    *counts.entry(sp.real_type.key()).or_insert(0) += 1;
                    points.push(sp);
                }
            }
        }
    }
    (counts, points)
}

fn chart_dehomogenize(fbar: &FPoly, chart: usize) -> FPoly {
    // set coordinate `chart` to 1; remaining vars ordered (others..., w)
    fbar.dehomogenize(chart)
}

fn normalize_projective(mut v: [f64; 3]) -> [f64; 3] {
    let m = v.iter().map(|x| x.abs()).fold(0.0, f64::max);
    if m == 0.0 {
        return v;
    }
    for x in v.iter_mut() {
        *x /= m;
    }
    let first = v.iter().find(|x| x.abs() > 1e-9).copied().unwrap_or(1.0);
    if first < 0.0 {
        for x in v.iter_mut() {
            *x = -*x;
        }
    }
    v
}

fn gauss_newton_infinity(grads: &[FPoly], seed: [f64; 4], unknowns: &[usize]) -> Option<[f64; 4]> {
    let mut p = seed;
    for _ in 0..60 {
        let r = DVector::from_iterator(4, grads.iter().map(|g| g.eval(&p).unwrap()));
        let mut jac = DMatrix::<f64>::zeros(4, 2);
        for (col, &u) in unknowns.iter().enumerate() {
            for (row, g) in grads.iter().enumerate() {
                jac[(row, col)] = g.derivative(u).eval(&p).unwrap();
            }
        }
        let svd = nalgebra::SVD::new(jac, true, true);
        let step = svd.solve(&r, 1e-12).ok()?;
        p[unknowns[0]] -= step[0];
        p[unknowns[1]] -= step[1];
        if step.amax() < 1e-14 * (1.0 + p.iter().map(|x| x.abs()).fold(0.0, f64::max)) {
            break;
        }
        if p.iter().any(|x| x.abs() > 1e8) {
            return None;
        }
    }
    let res: f64 = grads
        .iter()
        .map(|g| {
            let (v, m) = g.eval_with_mag(&p);
            v.abs() / (1.0 + m)
        })
        .fold(0.0, f64::max);
    if res < 1e-9 {
        Some(p)
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
    fn cone_has_one_node_separable() {
        // x^2 + y^2 - z^2 as separable: f = x^2+y^2, g = z^2
        let f = AnyPoly::Rational(Poly::from_terms(
            &["x", "y"],
            [(vec![2, 0], q(1)), (vec![0, 2], q(1))],
        ));
        let g = AnyPoly::Rational(Poly::from_terms(&["z"], [(vec![2], q(1))]));
        let s = SurfaceSpec::separable(f, g).unwrap();
        let pts = singular_points(&s, &SurfaceOpts::default()).unwrap();
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].real_type, RealType::A1Minus);
        assert_eq!(separable_oracle_count(&s, 1e-7).unwrap(), 1);
    }

    #[test]
    fn cone_has_one_node_general() {
        let f = AnyPoly::Rational(Poly::from_terms(
            &["x", "y", "z"],
            [
                (vec![2, 0, 0], q(1)),
                (vec![0, 2, 0], q(1)),
                (vec![0, 0, 2], q(-1)),
            ],
        ));
        let s = SurfaceSpec::general(f).unwrap();
        let pts = singular_points(&s, &SurfaceOpts::default()).unwrap();
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].real_type, RealType::A1Minus);
    }

    #[test]
    fn generic_sphere_shift_has_no_singular_points() {
        // f = x^2 + y^2 - 2, g = z^2 - 1: critical values differ (f: -2, g: -1)
        let f = AnyPoly::Rational(Poly::from_terms(
            &["x", "y"],
            [(vec![2, 0], q(1)), (vec![0, 2], q(1)), (vec![0, 0], q(-2))],
        ));
        let g = AnyPoly::Rational(Poly::from_terms(
            &["z"],
            [(vec![2], q(1)), (vec![0], q(-1))],
        ));
        let s = SurfaceSpec::separable(f, g).unwrap();
        let pts = singular_points(&s, &SurfaceOpts::default()).unwrap();
        assert!(pts.is_empty());
    }

    #[test]
    fn a3_separable_pairing() {
        // f = x^2 + y^2, g = -z^4: F = x^2 + y^2 + z^4 with an A3 point
        let f = AnyPoly::Rational(Poly::from_terms(
            &["x", "y"],
            [(vec![2, 0], q(1)), (vec![0, 2], q(1))],
        ));
        let g = AnyPoly::Rational(Poly::from_terms(&["z"], [(vec![4], q(-1))]));
        let s = SurfaceSpec::separable(f, g).unwrap();
        let pts = singular_points(&s, &SurfaceOpts::default()).unwrap();
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].real_type, RealType::A2km1Solitary(2));
    }
}
