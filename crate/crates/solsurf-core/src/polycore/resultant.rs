//! Sylvester resultants over the exact rational domain, evaluated by
//! fraction-free (Bareiss) elimination in the polynomial ring of the
//! remaining variables.

use super::{PolyError, QPoly};
use num_rational::BigRational;

/// Exact single-divisor division in the multivariate polynomial ring.
/// Returns `None` if `b` does not divide `a`.
fn exact_div(a: &QPoly, b: &QPoly) -> Option<QPoly> {
    assert!(!b.is_zero(), "division by zero polynomial");
    let vars: Vec<&str> = a.vars().iter().map(|s| s.as_str()).collect();
    let mut rem = a.clone();
    let mut quot = QPoly::zero(&vars);
    let (be, bc) = {
        let (e, c) = b.leading_term_lex()?;
        (e.clone(), c.clone())
    };
    while !rem.is_zero() {
        let (re, rc) = {
            let (e, c) = rem.leading_term_lex().unwrap();
            (e.clone(), c.clone())
        };
        // leading monomial of b must divide leading monomial of rem
        if re.iter().zip(&be).any(|(r, b)| r < b) {
            return None;
        }
        let qe: Vec<u32> = re.iter().zip(&be).map(|(r, b)| r - b).collect();
        let qc = rc / bc.clone();
        let qt = QPoly::from_terms(&vars, [(qe, qc)]);
        quot = quot.add(&qt);
        rem = rem.sub(&qt.mul(b));
    }
    Some(quot)
}

/// Coefficient vector of `p` as a univariate polynomial in `vars[var_idx]`,
/// with coefficients in the remaining variables.
fn coeffs_in_var(p: &QPoly, var_idx: usize) -> Vec<QPoly> {
    let rest: Vec<&str> = p
        .vars()
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != var_idx)
        .map(|(_, s)| s.as_str())
        .collect();
    let deg = p.degree_in(var_idx) as usize;
    let mut out = vec![QPoly::zero(&rest); deg + 1];
    for (e, c) in p.terms() {
        let k = e[var_idx] as usize;
        let mut e2: Vec<u32> = e.clone();
        e2.remove(var_idx);
        out[k] = out[k].add(&QPoly::from_terms(&rest, [(e2, c.clone())]));
    }
    out
}

/// Determinant of a square matrix of polynomials by Bareiss fraction-free
/// Gaussian elimination (all intermediate divisions are exact).
fn bareiss_det(mut m: Vec<Vec<QPoly>>) -> QPoly {
    let n = m.len();
    if n == 0 {
        panic!("empty matrix");
    }
    let vars: Vec<String> = m[0][0].vars().to_vec();
    let vars: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
    let zero_entry = QPoly::zero(&vars);
    let mut prev = QPoly::constant(&vars, BigRational::from_integer(1.into()));
    let mut sign = 1i32;
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let swap = (k + 1..n).find(|&i| !m[i][k].is_zero());
            match swap {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return zero_entry,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = exact_div(&num, &prev).expect("Bareiss division is exact");
            }
            m[i][k] = zero_entry.clone();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        det.neg()
    } else {
        det
    }
}

/// Sylvester resultant of `p` and `q` with respect to the named
/// variable, eliminating it. Both inputs must have positive degree in
/// that variable.
pub fn resultant(p: &QPoly, q: &QPoly, var: &str) -> Result<QPoly, PolyError> {
    if p.vars() != q.vars() {
        return Err(PolyError::VarMismatch(p.vars().to_vec(), q.vars().to_vec()));
    }
    let var_idx = p
        .vars()
        .iter()
        .position(|v| v == var)
        .ok_or_else(|| PolyError::DegreeZeroInVar(var.into()))?;
    let dp = p.degree_in(var_idx) as usize;
    let dq = q.degree_in(var_idx) as usize;
    if dp == 0 || dq == 0 {
        return Err(PolyError::DegreeZeroInVar(var.into()));
    }
    let pc = coeffs_in_var(p, var_idx);
    let qc = coeffs_in_var(q, var_idx);
    let rest: Vec<&str> = pc[0].vars().iter().map(|s| s.as_str()).collect();
    let n = dp + dq;
    let zero = QPoly::zero(&rest);
    let mut m = vec![vec![zero.clone(); n]; n];
    // dq rows of p's coefficients, then dp rows of q's
    for row in 0..dq {
        for (j, c) in pc.iter().enumerate() {
            m[row][row + dp - j] = c.clone();
        }
    }
    for row in 0..dp {
        for (j, c) in qc.iter().enumerate() {
            m[dq + row][row + dq - j] = c.clone();
        }
    }
    Ok(bareiss_det(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn vars3() -> [&'static str; 3] {
        ["t", "x", "y"]
    }

    #[test]
    fn linear_elimination() {
        // res_t(x - t, y - t) = +/-(x - y)
        let vars = vars3();
        let p = QPoly::from_terms(&vars, [(vec![0, 1, 0], q(1)), (vec![1, 0, 0], q(-1))]);
        let r = QPoly::from_terms(&vars, [(vec![0, 0, 1], q(1)), (vec![1, 0, 0], q(-1))]);
        let res = resultant(&p, &r, "t").unwrap().primitive_normalized();
        let expect = QPoly::from_terms(&["x", "y"], [(vec![1, 0], q(1)), (vec![0, 1], q(-1))]);
        assert_eq!(res, expect.primitive_normalized());
    }

    #[test]
    fn parabola_elimination() {
        // res_t(x - t^2, y - t) = +/-(y^2 - x)
        let vars = vars3();
        let p = QPoly::from_terms(&vars, [(vec![0, 1, 0], q(1)), (vec![2, 0, 0], q(-1))]);
        let r = QPoly::from_terms(&vars, [(vec![0, 0, 1], q(1)), (vec![1, 0, 0], q(-1))]);
        let res = resultant(&p, &r, "t").unwrap().primitive_normalized();
        let expect = QPoly::from_terms(&["x", "y"], [(vec![0, 2], q(1)), (vec![1, 0], q(-1))])
            .primitive_normalized();
        assert_eq!(res, expect);
    }

    #[test]
    fn degree_zero_input_rejected() {
        let vars = vars3();
        let p = QPoly::var(&vars, 1);
        let r = QPoly::var(&vars, 0);
        assert!(matches!(
            resultant(&p, &r, "t"),
            Err(PolyError::DegreeZeroInVar(_))
        ));
    }

    #[test]
    fn vanishes_on_common_root_instances() {
        // p = x - t^2, q = y - t^3 share the root t=t0 at (t0^2, t0^3)
        let vars = vars3();
        let p = QPoly::from_terms(&vars, [(vec![0, 1, 0], q(1)), (vec![2, 0, 0], q(-1))]);
        let r = QPoly::from_terms(&vars, [(vec![0, 0, 1], q(1)), (vec![3, 0, 0], q(-1))]);
        let res = resultant(&p, &r, "t").unwrap();
        for t0 in [-3i64, -1, 0, 2, 5] {
            let v = res.eval(&[q(t0 * t0), q(t0 * t0 * t0)]).unwrap();
            assert!(v.is_zero(), "resultant must vanish at t0={}", t0);
        }
        // and generically does not vanish off the curve
        let v = res.eval(&[q(1), q(2)]).unwrap();
        assert!(!v.is_zero());
    }
}
