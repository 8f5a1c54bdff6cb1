//! Floating-point univariate root finding (Aberth–Ehrlich) for the
//! numerical pipeline, plus multiplicity-aware clustering helpers.

use num_complex::Complex;

type C64 = Complex<f64>;

/// All complex roots of the polynomial with coefficients `c[i] * z^i`
/// (leading coefficient nonzero), by simultaneous Aberth–Ehrlich
/// iteration. Accuracy is limited near multiple roots, where a cluster
/// of simple approximations is returned instead.
pub fn complex_roots(coeffs: &[C64]) -> Vec<C64> {
    let mut c: Vec<C64> = coeffs.to_vec();
    while c.last().map(|x| x.norm() == 0.0).unwrap_or(false) {
        c.pop();
    }
    if c.len() <= 1 {
        return vec![];
    }
    // strip zero roots at the origin
    let mut zero_roots = 0;
    while c.first().map(|x| x.norm() == 0.0).unwrap_or(false) {
        c.remove(0);
        zero_roots += 1;
    }
    let n = c.len() - 1;
    let mut roots: Vec<C64> = Vec::with_capacity(n + zero_roots);
    for _ in 0..zero_roots {
        roots.push(C64::new(0.0, 0.0));
    }
    if n == 0 {
        return roots;
    }
    let lead = c[n];
    let monic: Vec<C64> = c.iter().map(|x| x / lead).collect();
    // Cauchy-ish radius for initial placement
    let radius = 1.0
        + monic[..n]
            .iter()
            .map(|x| x.norm())
            .fold(0.0f64, |a, b| a.max(b));
    let mut z: Vec<C64> = (0..n)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64) + 0.41;
            C64::from_polar(radius.powf(0.9), theta)
        })
        .collect();
    let deriv: Vec<C64> = monic
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, x)| x * i as f64)
        .collect();
    let eval = |p: &[C64], x: C64| -> C64 {
        let mut acc = C64::new(0.0, 0.0);
        for c in p.iter().rev() {
            acc = acc * x + c;
        }
        acc
    };
    for _iter in 0..200 {
        let mut max_step = 0.0f64;
        let zs = z.clone();
        for i in 0..n {
            let p = eval(&monic, zs[i]);
            let dp = eval(&deriv, zs[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let newton = if dp.norm() > 0.0 { p / dp } else { p };
            let mut s = C64::new(0.0, 0.0);
            for (j, zj) in zs.iter().enumerate() {
                if j != i {
                    let d = zs[i] - zj;
                    if d.norm() > 1e-300 {
                        s += C64::new(1.0, 0.0) / d;
                    }
                }
            }
            let denom = C64::new(1.0, 0.0) - newton * s;
            let step = if denom.norm() > 1e-300 {
                newton / denom
            } else {
                newton
            };
            z[i] -= step;
            max_step = max_step.max(step.norm() / (1.0 + z[i].norm()));
        }
        if max_step < 1e-14 {
            break;
        }
    }
    roots.extend(z);
    roots
}

/// Real roots extracted from a complex root list: points whose imaginary
/// part is below `im_tol` relative to magnitude.
pub fn real_roots_from_complex(roots: &[C64], im_tol: f64) -> Vec<f64> {
    let mut out: Vec<f64> = roots
        .iter()
        .filter(|z| z.im.abs() <= im_tol * (1.0 + z.norm()))
        .map(|z| z.re)
        .collect();
    out.sort_by(|a, b| a.partial_cmp(b).unwrap());
    out
}

/// Group sorted values into clusters of pairwise distance below `tol`.
/// Returns (representative mean, cluster size).
pub fn cluster_values(sorted: &[f64], tol: f64) -> Vec<(f64, usize)> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i + 1;
        while j < sorted.len() && (sorted[j] - sorted[j - 1]).abs() <= tol {
            j += 1;
        }
        let mean = sorted[i..j].iter().sum::<f64>() / (j - i) as f64;
        out.push((mean, j - i));
        i = j;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_roots() {
        // z^3 - 6z^2 + 11z - 6 = (z-1)(z-2)(z-3)
        let c: Vec<C64> = [-6.0, 11.0, -6.0, 1.0]
            .iter()
            .map(|&x| C64::new(x, 0.0))
            .collect();
        let mut r = real_roots_from_complex(&complex_roots(&c), 1e-8);
        r.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert_eq!(r.len(), 3);
        for (got, want) in r.iter().zip([1.0, 2.0, 3.0]) {
            assert!((got - want).abs() < 1e-9);
        }
    }

    #[test]
    fn complex_pair_detected() {
        // z^2 + 1
        let c: Vec<C64> = [1.0, 0.0, 1.0]
            .iter()
            .map(|&x| C64::new(x, 0.0))
            .collect();
        let roots = complex_roots(&c);
        assert_eq!(roots.len(), 2);
        assert!(real_roots_from_complex(&roots, 1e-8).is_empty());
        for z in roots {
            assert!((z.norm() - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn multiple_root_cluster() {
        // (z-2)^3: Aberth returns a cluster near 2
        let c: Vec<C64> = [-8.0, 12.0, -6.0, 1.0]
            .iter()
            .map(|&x| C64::new(x, 0.0))
            .collect();
        let roots = complex_roots(&c);
        assert_eq!(roots.len(), 3);
        for z in roots {
            assert!((z - C64::new(2.0, 0.0)).norm() < 1e-3);
        }
    }
}
