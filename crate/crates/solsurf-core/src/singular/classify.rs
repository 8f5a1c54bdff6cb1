//! Classification of real singular points.
//!
//! Full-rank Hessians split into nodes and solitary points by signature.
//! Corank-1 points are analyzed along the kernel direction: the critical
//! slice is computed as a truncated power series (Newton iteration on
//! formal series), and the vanishing order there decides the `A_{2k-1}`
//! type. Anything of corank 2 or worse is reported as `other`, never
//! guessed.

use crate::polycore::FPoly;
use nalgebra::{DMatrix, DVector};
use std::fmt;

/// Relative eigenvalue threshold below which a Hessian direction counts
/// as degenerate.
const CORANK_TOL: f64 = 1e-6;
/// Truncation order for the critical-slice series.
const SERIES_ORDER: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RealType {
    /// Node: local model x^2 + y^2 - z^2 (surfaces) or a real crossing.
    A1Minus,
    /// Solitary point: local model x^2 + y^2 + z^2.
    A1Solitary,
    /// Local model x^(2k) + y^2 + z^2 (k >= 2).
    A2km1Solitary(u32),
    Other,
}

impl RealType {
    pub fn key(&self) -> String {
        match self {
            RealType::A1Minus => "A1_minus".into(),
            RealType::A1Solitary => "A1_solitary".into(),
            RealType::A2km1Solitary(k) => format!("A{}_solitary", 2 * k - 1),
            RealType::Other => "other".into(),
        }
    }
}

impl fmt::Display for RealType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.key())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    /// Positive values on a small punctured neighborhood (local min 0).
    Even,
    Odd,
}

#[derive(Debug, Clone)]
pub struct SingularPoint {
    pub location: Vec<f64>,
    pub real_type: RealType,
    /// Curves only; `None` for crossings and for surface points.
    pub parity: Option<Parity>,
    /// Scale-relative max gradient component at the point.
    pub residual: f64,
    /// Scale-relative |F| at the point.
    pub value_residual: f64,
    /// Hessian eigenvalues (ascending by magnitude).
    pub eigenvalues: Vec<f64>,
    /// Kernel-direction vanishing order for corank-1 points.
    pub kernel_order: Option<u32>,
    /// Leading kernel-direction coefficient (for corank-1 points).
    pub kernel_coeff: Option<f64>,
    pub diagnostics: String,
}

// --- truncated power series arithmetic -------------------------------

#[derive(Clone, Debug)]
struct Series {
    c: [f64; SERIES_ORDER + 1],
}

impl Series {
    fn zero() -> Self {
        Series {
            c: [0.0; SERIES_ORDER + 1],
        }
    }

    fn constant(v: f64) -> Self {
        let mut s = Self::zero();
        s.c[0] = v;
        s
    }

    fn t() -> Self {
        let mut s = Self::zero();
        s.c[1] = 1.0;
        s
    }

    fn add(&self, o: &Series) -> Series {
        let mut s = Self::zero();
        for i in 0..=SERIES_ORDER {
            s.c[i] = self.c[i] + o.c[i];
        }
        s
    }

    fn sub(&self, o: &Series) -> Series {
        let mut s = Self::zero();
        for i in 0..=SERIES_ORDER {
            s.c[i] = self.c[i] - o.c[i];
        }
        s
    }

    fn mul(&self, o: &Series) -> Series {
        let mut s = Self::zero();
        for i in 0..=SERIES_ORDER {
            if self.c[i] == 0.0 {
                continue;
            }
            for j in 0..=(SERIES_ORDER - i) {
                s.c[i + j] += self.c[i] * o.c[j];
            }
        }
        s
    }

    fn scale(&self, v: f64) -> Series {
        let mut s = self.clone();
        for c in s.c.iter_mut() {
            *c *= v;
        }
        s
    }
}

fn poly_at_series(f: &FPoly, args: &[Series]) -> Series {
    // Precompute powers of each argument series.
    let n = f.nvars();
    let mut powers: Vec<Vec<Series>> = Vec::with_capacity(n);
    for (i, a) in args.iter().enumerate() {
        let d = f.degree_in(i) as usize;
        let mut ps = Vec::with_capacity(d + 1);
        ps.push(Series::constant(1.0));
        for k in 1..=d {
            let prev = ps[k - 1].clone();
            ps.push(prev.mul(a));
        }
        powers.push(ps);
    }
    let mut acc = Series::zero();
    for (e, c) in f.terms() {
        let mut t = Series::constant(*c);
        for (i, &k) in e.iter().enumerate() {
            if k > 0 {
                t = t.mul(&powers[i][k as usize]);
            }
        }
        acc = acc.add(&t);
    }
    acc
}

// --- classification ---------------------------------------------------

/// Classify a singular point of a surface `F(x,y,z) = 0`.
pub fn classify_surface(f: &FPoly, p: &[f64]) -> SingularPoint {
    classify_point(f, p, false)
}

/// Classify a singular point of a plane curve `C(x,y) = 0`.
pub fn classify_curve(c: &FPoly, p: &[f64]) -> SingularPoint {
    classify_point(c, p, true)
}

fn classify_point(f: &FPoly, p: &[f64], is_curve: bool) -> SingularPoint {
    let n = f.nvars();
    assert_eq!(p.len(), n);
    // residuals
    let (v, vm) = f.eval_with_mag(p);
    let value_residual = v.abs() / (1.0 + vm);
    let mut residual = 0.0f64;
    let grad = f.gradient();
    for g in &grad {
        let (gv, gm) = g.eval_with_mag(p);
        residual = residual.max(gv.abs() / (1.0 + gm));
    }

    // Hessian spectrum
    let hp = f.hessian();
    let mut h = DMatrix::<f64>::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            h[(i, j)] = hp[i][j].eval(p).unwrap();
        }
    }
    let eig = nalgebra::SymmetricEigen::new(h.clone());
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        eig.eigenvalues[a]
            .abs()
            .partial_cmp(&eig.eigenvalues[b].abs())
            .unwrap()
    });
    let eigenvalues: Vec<f64> = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let scale = eigenvalues.last().map(|l| l.abs()).unwrap_or(0.0);

    let mut out = SingularPoint {
        location: p.to_vec(),
        real_type: RealType::Other,
        parity: None,
        residual,
        value_residual,
        eigenvalues: eigenvalues.clone(),
        kernel_order: None,
        kernel_coeff: None,
        diagnostics: String::new(),
    };

    if scale == 0.0 {
        out.diagnostics = "zero Hessian (corank = ambient dimension)".into();
        return out;
    }
    let corank = eigenvalues
        .iter()
        .filter(|l| l.abs() < CORANK_TOL * scale)
        .count();

    if corank == 0 {
        let npos = eigenvalues.iter().filter(|l| **l > 0.0).count();
        let nneg = n - npos;
        if npos == n || nneg == n {
            out.real_type = RealType::A1Solitary;
            if is_curve {
                out.parity = Some(if npos == n { Parity::Even } else { Parity::Odd });
            }
        } else {
            out.real_type = RealType::A1Minus;
        }
        return out;
    }

    if corank >= 2 {
        out.diagnostics = format!("corank {} Hessian; not classified", corank);
        return out;
    }

    // corank 1: analyze the kernel direction
    let kernel: DVector<f64> = eig.eigenvectors.column(order[0]).into_owned();
    let normals: Vec<DVector<f64>> = order[1..]
        .iter()
        .map(|&i| eig.eigenvectors.column(i).into_owned())
        .collect();
    let mu: Vec<f64> = eigenvalues[1..].to_vec();
    let definite = mu.iter().all(|m| *m > 0.0) || mu.iter().all(|m| *m < 0.0);

    // Solve the critical slice: W(t) with dF/dn_a (p + t*kernel + W.n) = 0.
    let m = normals.len();
    let mut mat = DMatrix::<f64>::zeros(m, m);
    for a in 0..m {
        for b in 0..m {
            mat[(a, b)] = (normals[a].transpose() * &h * &normals[b])[(0, 0)];
        }
    }
    let minv = match mat.try_inverse() {
        Some(mi) => mi,
        None => {
            out.diagnostics = "restricted Hessian numerically singular".into();
            return out;
        }
    };
    // directional derivative polynomials along each normal
    let dirs: Vec<FPoly> = normals
        .iter()
        .map(|nv| {
            let mut acc = grad[0].scale(&nv[0]);
            for j in 1..n {
                acc = acc.add(&grad[j].scale(&nv[j]));
            }
            acc
        })
        .collect();
    let mut w: Vec<Series> = vec![Series::zero(); m];
    for _ in 0..SERIES_ORDER + 2 {
        let args = slice_args(p, &kernel, &normals, &w);
        let g: Vec<Series> = dirs.iter().map(|d| poly_at_series(d, &args)).collect();
        let mut step: Vec<Series> = vec![Series::zero(); m];
        for a in 0..m {
            for b in 0..m {
                step[a] = step[a].add(&g[b].scale(minv[(a, b)]));
            }
        }
        for a in 0..m {
            w[a] = w[a].sub(&step[a]);
        }
    }
    let args = slice_args(p, &kernel, &normals, &w);
    let hseries = poly_at_series(f, &args);
    // order detection, ignoring the (already corrected) constant and linear parts
    let hscale = hseries.c[2..]
        .iter()
        .fold(0.0f64, |acc, c| acc.max(c.abs()))
        .max(1e-300);
    let mut ord = None;
    for j in 2..=SERIES_ORDER {
        if hseries.c[j].abs() > 1e-5 * hscale {
            ord = Some(j);
            break;
        }
    }
    match ord {
        None => {
            out.diagnostics = format!(
                "kernel direction flat to order {} (possible non-isolated branch)",
                SERIES_ORDER
            );
        }
        Some(2) => {
            // borderline Morse point: the "degenerate" eigenvalue is real
            let c2 = hseries.c[2];
            let npos = mu.iter().filter(|m| **m > 0.0).count() + usize::from(c2 > 0.0);
            if npos == n || npos == 0 {
                out.real_type = RealType::A1Solitary;
                if is_curve {
                    out.parity = Some(if npos == n { Parity::Even } else { Parity::Odd });
                }
            } else {
                out.real_type = RealType::A1Minus;
            }
            out.kernel_order = Some(2);
            out.kernel_coeff = Some(c2);
        }
        Some(j) => {
            let cj = hseries.c[j];
            out.kernel_order = Some(j as u32);
            out.kernel_coeff = Some(cj);
            if j % 2 == 1 {
                out.diagnostics = format!("odd kernel-direction order {}", j);
            } else if !definite {
                out.diagnostics = "indefinite restricted Hessian with degenerate direction".into();
            } else {
                let k = (j / 2) as u32;
                if (cj > 0.0) == (mu[0] > 0.0) {
                    out.real_type = RealType::A2km1Solitary(k);
                    if is_curve {
                        out.parity = Some(if cj > 0.0 { Parity::Even } else { Parity::Odd });
                    }
                } else {
                    out.diagnostics =
                        format!("A{} direction with mixed signs (not solitary)", 2 * k - 1);
                }
            }
        }
    }
    out
}

fn slice_args(
    p: &[f64],
    kernel: &DVector<f64>,
    normals: &[DVector<f64>],
    w: &[Series],
) -> Vec<Series> {
    let n = p.len();
    (0..n)
        .map(|j| {
            let mut s = Series::constant(p[j]).add(&Series::t().scale(kernel[j]));
            for (a, na) in normals.iter().enumerate() {
                s = s.add(&w[a].scale(na[j]));
            }
            s
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::Poly;

    fn sphere() -> FPoly {
        Poly::from_terms(
            &["x", "y", "z"],
            [(vec![2, 0, 0], 1.0), (vec![0, 2, 0], 1.0), (vec![0, 0, 2], 1.0)],
        )
    }

    #[test]
    fn normal_forms() {
        // x^2+y^2+z^2 -> solitary
        let sp = classify_surface(&sphere(), &[0.0, 0.0, 0.0]);
        assert_eq!(sp.real_type, RealType::A1Solitary);
        // x^2+y^2-z^2 -> node
        let cone = Poly::from_terms(
            &["x", "y", "z"],
            [(vec![2, 0, 0], 1.0), (vec![0, 2, 0], 1.0), (vec![0, 0, 2], -1.0)],
        );
        let sp = classify_surface(&cone, &[0.0, 0.0, 0.0]);
        assert_eq!(sp.real_type, RealType::A1Minus);
    }

    #[test]
    fn a3_normal_form() {
        // x^4 + y^2 + z^2 -> A3 solitary (k = 2), rank-2 Hessian,
        // kernel order exactly 4
        let f = Poly::from_terms(
            &["x", "y", "z"],
            [(vec![4, 0, 0], 1.0), (vec![0, 2, 0], 1.0), (vec![0, 0, 2], 1.0)],
        );
        let sp = classify_surface(&f, &[0.0, 0.0, 0.0]);
        assert_eq!(sp.real_type, RealType::A2km1Solitary(2));
        assert_eq!(sp.kernel_order, Some(4));
        assert!(sp.kernel_coeff.unwrap() > 1e-6);
    }

    #[test]
    fn a5_with_shear_terms() {
        // (y + x^2)^2 + x^6 + z^2: straight-line restriction would read
        // order 4; the critical-slice series must find order 6 (k = 3).
        // expand: y^2 + 2x^2 y + x^4 + x^6 + z^2
        let f = Poly::from_terms(
            &["x", "y", "z"],
            [
                (vec![0, 2, 0], 1.0),
                (vec![2, 1, 0], 2.0),
                (vec![4, 0, 0], 1.0),
                (vec![6, 0, 0], 1.0),
                (vec![0, 0, 2], 1.0),
            ],
        );
        let sp = classify_surface(&f, &[0.0, 0.0, 0.0]);
        assert_eq!(sp.real_type, RealType::A2km1Solitary(3));
        assert_eq!(sp.kernel_order, Some(6));
    }

    #[test]
    fn curve_parity() {
        // x^2 + y^2: even solitary; -(x^2 + y^2): odd
        let c = Poly::from_terms(&["x", "y"], [(vec![2, 0], 1.0), (vec![0, 2], 1.0)]);
        let sp = classify_curve(&c, &[0.0, 0.0]);
        assert_eq!(sp.real_type, RealType::A1Solitary);
        assert_eq!(sp.parity, Some(Parity::Even));
        let sp = classify_curve(&c.neg(), &[0.0, 0.0]);
        assert_eq!(sp.parity, Some(Parity::Odd));
        // crossing
        let x2y2 = Poly::from_terms(&["x", "y"], [(vec![2, 0], 1.0), (vec![0, 2], -1.0)]);
        let sp = classify_curve(&x2y2, &[0.0, 0.0]);
        assert_eq!(sp.real_type, RealType::A1Minus);
        assert_eq!(sp.parity, None);
    }

    #[test]
    fn classification_invariant_under_affine_maps() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let vars = ["x", "y", "z"];
        let forms: Vec<(FPoly, RealType)> = vec![
            (sphere(), RealType::A1Solitary),
            (
                Poly::from_terms(
                    &vars,
                    [(vec![2, 0, 0], 1.0), (vec![0, 2, 0], 1.0), (vec![0, 0, 2], -1.0)],
                ),
                RealType::A1Minus,
            ),
            (
                Poly::from_terms(
                    &vars,
                    [(vec![4, 0, 0], 1.0), (vec![0, 2, 0], 1.0), (vec![0, 0, 2], 1.0)],
                ),
                RealType::A2km1Solitary(2),
            ),
        ];
        for (f, expect) in &forms {
            for _ in 0..20 {
                // random invertible linear map + translation of the
                // singular point to q
                let a: Vec<f64> = (0..9).map(|_| rng.gen_range(-1.0..1.0)).collect();
                let det = a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6])
                    + a[2] * (a[3] * a[7] - a[4] * a[6]);
                if det.abs() < 0.1 {
                    continue;
                }
                let q: Vec<f64> = (0..3).map(|_| rng.gen_range(-1.0..1.0)).collect();
                // compose f with the affine map x -> A(x - q)
                let lin: Vec<FPoly> = (0..3)
                    .map(|i| {
                        let mut t = Poly::constant(
                            &vars,
                            -(a[3 * i] * q[0] + a[3 * i + 1] * q[1] + a[3 * i + 2] * q[2]),
                        );
                        for j in 0..3 {
                            t = t.add(&Poly::var(&vars, j).scale(&a[3 * i + j]));
                        }
                        t
                    })
                    .collect();
                let g = crate::polycore::compose(f, &lin);
                let sp = classify_surface(&g, &q);
                assert_eq!(&sp.real_type, expect, "affine invariance");
            }
        }
    }
}
