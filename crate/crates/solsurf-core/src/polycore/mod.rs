//! Exact and floating multivariate polynomial algebra.
//!
//! Sparse term-map representation over an ordered list of named
//! variables. The exact domain is `BigRational`; the float domain is
//! `f64`. Construction-side algebra (resultants, interpolation, content
//! normalization) runs exact; Newton polishing and solvers run float.

mod coeff;
pub mod json;
pub mod resultant;
pub mod roots;
pub mod unipoly;

pub use coeff::{rat_from_f64, rat_gcd, rat_to_f64, Coeff};

use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// Multivariate polynomial over the exact rational domain.
pub type QPoly = Poly<BigRational>;
/// Multivariate polynomial over `f64`.
pub type FPoly = Poly<f64>;
/// Complex-rational polynomial (exact substitutions like `x -> x + iy`).
pub type CQPoly = Poly<Complex<BigRational>>;
/// Complex-float polynomial (root finding, certificates).
pub type CFPoly = Poly<Complex<f64>>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("point dimension {got} does not match variable count {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("operands are over different variable lists: {0:?} vs {1:?}")]
    VarMismatch(Vec<String>, Vec<String>),
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("polynomial has degree zero in variable {0}")]
    DegreeZeroInVar(String),
    #[error("expected a univariate polynomial, got {0} variables")]
    NotUnivariate(usize),
}

/// A point with real coordinates, evaluated against polynomials of
/// matching ambient dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct PointR<C>(pub Vec<C>);

impl<C: Coeff> PointR<C> {
    pub fn dim(&self) -> usize {
        self.0.len()
    }
}

/// Sparse multivariate polynomial: map from exponent vector to nonzero
/// coefficient. Exponent vectors always have length `vars.len()`; zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly<C> {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, C>,
}

impl<C: Coeff> Poly<C> {
    pub fn zero(vars: &[&str]) -> Self {
        Poly {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[&str], c: C) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; p.vars.len()], c);
        }
        p
    }

    /// The monomial `x_idx`.
    pub fn var(vars: &[&str], idx: usize) -> Self {
        let mut p = Self::zero(vars);
        let mut e = vec![0; p.vars.len()];
        e[idx] = 1;
        p.terms.insert(e, C::one());
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<u32>, C)>>(vars: &[&str], it: I) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in it {
            assert_eq!(e.len(), p.vars.len(), "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[u32]) -> C {
        self.terms.get(e).cloned().unwrap_or_else(C::zero)
    }

    fn add_term(&mut self, e: Vec<u32>, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&e) {
            None => {
                self.terms.insert(e, c);
            }
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(e, s);
                }
            }
        }
    }

    /// Max total degree over stored terms (0 for the zero polynomial).
    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, var_idx: usize) -> u32 {
        self.terms.keys().map(|e| e[var_idx]).max().unwrap_or(0)
    }

    /// Leading term in lexicographic order (first variable major).
    pub fn leading_term_lex(&self) -> Option<(&Vec<u32>, &C)> {
        self.terms.iter().next_back()
    }

    pub fn map_coeffs<D: Coeff, F: Fn(&C) -> D>(&self, f: F) -> Poly<D> {
        let mut out = Poly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            let d = f(c);
            if !d.is_zero() {
                out.terms.insert(e.clone(), d);
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| -c.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.vars, other.vars, "variable lists must match");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.vars, other.vars, "variable lists must match");
        let mut out = Self::zero_like(self);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1.clone() * c2.clone());
            }
        }
        out
    }

    fn zero_like(p: &Self) -> Self {
        Poly {
            vars: p.vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero_like(self);
        }
        self.map_coeffs(|x| x.clone() * c.clone())
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::constant_like(self, C::one());
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    fn constant_like(p: &Self, c: C) -> Self {
        let mut out = Self::zero_like(p);
        if !c.is_zero() {
            out.terms.insert(vec![0; p.vars.len()], c);
        }
        out
    }

    /// Evaluate at a point of matching dimension. Exact in the rational
    /// domain; per-operation IEEE rounding in float64.
    pub fn eval(&self, pt: &[C]) -> Result<C, PolyError> {
        if pt.len() != self.vars.len() {
            return Err(PolyError::DimensionMismatch {
                expected: self.vars.len(),
                got: pt.len(),
            });
        }
        let mut acc = C::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in pt.iter().zip(e) {
                t = t * pow_c(x, k);
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    /// Partial derivative with respect to the `var_idx`-th variable.
    pub fn derivative(&self, var_idx: usize) -> Self {
        let mut out = Self::zero_like(self);
        for (e, c) in &self.terms {
            let k = e[var_idx];
            if k == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[var_idx] = k - 1;
            out.add_term(e2, c.clone() * C::from_i64(k as i64));
        }
        out
    }

    /// Partial derivatives in variable order.
    pub fn gradient(&self) -> Vec<Self> {
        (0..self.vars.len()).map(|i| self.derivative(i)).collect()
    }

    /// Symmetric matrix of second partials.
    pub fn hessian(&self) -> Vec<Vec<Self>> {
        let g = self.gradient();
        (0..self.vars.len())
            .map(|i| (0..self.vars.len()).map(|j| g[i].derivative(j)).collect())
            .collect()
    }

    /// Substitute a polynomial (over the same variable list) for the
    /// `var_idx`-th variable.
    pub fn substitute(&self, var_idx: usize, r: &Self) -> Self {
        assert_eq!(self.vars, r.vars);
        let mut out = Self::zero_like(self);
        // Group by exponent of the substituted variable to reuse powers.
        let max_k = self.degree_in(var_idx);
        let mut powers: Vec<Self> = Vec::with_capacity(max_k as usize + 1);
        powers.push(Self::constant_like(self, C::one()));
        for _ in 0..max_k {
            powers.push(powers.last().unwrap().mul(r));
        }
        for (e, c) in &self.terms {
            let k = e[var_idx];
            let mut e2 = e.clone();
            e2[var_idx] = 0;
            let rest = Self::from_terms_ref(&self.vars, e2, c.clone());
            out = out.add(&rest.mul(&powers[k as usize]));
        }
        out
    }

    fn from_terms_ref(vars: &[String], e: Vec<u32>, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Poly {
            vars: vars.to_vec(),
            terms,
        }
    }

    /// Reinterpret over a larger variable list; every existing variable
    /// name must appear in `new_vars`.
    pub fn embed(&self, new_vars: &[&str]) -> Self {
        let idx: Vec<usize> = self
            .vars
            .iter()
            .map(|v| {
                new_vars
                    .iter()
                    .position(|w| w == v)
                    .expect("missing variable in embedding target")
            })
            .collect();
        let mut out = Poly {
            vars: new_vars.iter().map(|s| s.to_string()).collect(),
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            let mut e2 = vec![0u32; new_vars.len()];
            for (k, &i) in idx.iter().enumerate() {
                e2[i] = e[k];
            }
            out.terms.insert(e2, c.clone());
        }
        out
    }

    /// Homogenize with a fresh variable appended last, to the total
    /// degree of `self` (or to `degree` if larger).
    pub fn homogenize(&self, new_var: &str, degree: u32) -> Self {
        let d = self.total_degree().max(degree);
        let mut vars = self.vars.clone();
        vars.push(new_var.to_string());
        let mut out = Poly {
            vars,
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            let td: u32 = e.iter().sum();
            let mut e2 = e.clone();
            e2.push(d - td);
            out.terms.insert(e2, c.clone());
        }
        out
    }

    /// Set the `var_idx`-th variable to 1 and drop it from the list.
    pub fn dehomogenize(&self, var_idx: usize) -> Self {
        let mut vars = self.vars.clone();
        vars.remove(var_idx);
        let mut out = Poly {
            vars,
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2.remove(var_idx);
            out.add_term(e2, c.clone());
        }
        out
    }

    /// Set the `var_idx`-th variable to 0 and drop it from the list
    /// (restriction to a coordinate hyperplane).
    pub fn restrict_zero(&self, var_idx: usize) -> Self {
        let mut vars = self.vars.clone();
        vars.remove(var_idx);
        let mut out = Poly {
            vars,
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            if e[var_idx] != 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2.remove(var_idx);
            out.add_term(e2, c.clone());
        }
        out
    }
}

/// Evaluate `p` with polynomial arguments: the formal composition
/// `p(args[0], ..., args[n-1])`. All `args` share one variable list.
pub fn compose<C: Coeff>(p: &Poly<C>, args: &[Poly<C>]) -> Poly<C> {
    assert_eq!(p.nvars(), args.len(), "one argument per variable");
    let vars: Vec<String> = args[0].vars.clone();
    let varrefs: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
    let mut acc = Poly::zero(&varrefs);
    for (e, c) in &p.terms {
        let mut t = Poly::constant(&varrefs, c.clone());
        for (arg, &k) in args.iter().zip(e) {
            if k > 0 {
                t = t.mul(&arg.pow(k));
            }
        }
        acc = acc.add(&t);
    }
    acc
}

fn pow_c<C: Coeff>(x: &C, mut k: u32) -> C {
    let mut result = C::one();
    let mut base = x.clone();
    while k > 0 {
        if k & 1 == 1 {
            result = result * base.clone();
        }
        k >>= 1;
        if k > 0 {
            base = base.clone() * base;
        }
    }
    result
}

impl QPoly {
    /// Gcd of all coefficients (positive; zero for the zero polynomial).
    pub fn content(&self) -> BigRational {
        let mut g = BigRational::zero();
        for c in self.terms.values() {
            g = rat_gcd(&g, c);
        }
        g
    }

    /// Divide out the content and make the lex-leading coefficient
    /// positive.
    pub fn primitive_normalized(&self) -> QPoly {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.content();
        let mut out = self.map_coeffs(|x| x / c.clone());
        if let Some((_, lc)) = out.leading_term_lex() {
            if lc.is_negative() {
                out = out.neg();
            }
        }
        out
    }

    pub fn to_float(&self) -> FPoly {
        self.map_coeffs(rat_to_f64)
    }

    pub fn to_complex(&self) -> CQPoly {
        self.map_coeffs(|c| Complex::new(c.clone(), BigRational::zero()))
    }

    pub fn eval_f64(&self, pt: &[f64]) -> f64 {
        self.to_float().eval(pt).expect("dimension")
    }
}

impl FPoly {
    /// Exact rationalization (each f64 is a dyadic rational).
    pub fn to_rational(&self) -> QPoly {
        self.map_coeffs(|c| rat_from_f64(*c))
    }

    pub fn to_complex(&self) -> CFPoly {
        self.map_coeffs(|c| Complex::new(*c, 0.0))
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.terms.values().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// Evaluate together with the sum of absolute term magnitudes, for
    /// scale-aware residuals at large coordinates.
    pub fn eval_with_mag(&self, pt: &[f64]) -> (f64, f64) {
        let mut acc = 0.0;
        let mut mag = 0.0;
        for (e, c) in &self.terms {
            let mut t = *c;
            for (x, &k) in pt.iter().zip(e) {
                t *= x.powi(k as i32);
            }
            acc += t;
            mag += t.abs();
        }
        (acc, mag)
    }

    /// Substitute `x_i -> scale * x_i` for every variable.
    pub fn rescale_coords(&self, scale: f64) -> FPoly {
        let mut out = Poly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            let td: u32 = e.iter().sum();
            out.add_term(e.clone(), c * scale.powi(td as i32));
        }
        out
    }
}

impl CQPoly {
    /// Extract the real part, failing loudly if any imaginary part is
    /// nonzero (exact test).
    pub fn real_part_exact(&self) -> Result<QPoly, PolyError> {
        let mut out = Poly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            if !c.im.is_zero() {
                return Err(PolyError::VarMismatch(
                    vec!["nonzero imaginary part".into()],
                    vec![format!("{:?}", e)],
                ));
            }
            if !c.re.is_zero() {
                out.terms.insert(e.clone(), c.re.clone());
            }
        }
        Ok(out)
    }
}

impl<C: Coeff + fmt::Display> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})", c)?;
            for (v, &k) in self.vars.iter().zip(e) {
                if k == 1 {
                    write!(f, "*{}", v)?;
                } else if k > 1 {
                    write!(f, "*{}^{}", v, k)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn qr(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn eval_zero_point() {
        // x^2 + y^2 at (0,0) -> 0
        let vars = ["x", "y"];
        let p = QPoly::from_terms(&vars, [(vec![2, 0], q(1)), (vec![0, 2], q(1))]);
        assert_eq!(p.eval(&[q(0), q(0)]).unwrap(), q(0));
    }

    #[test]
    fn eval_dimension_mismatch() {
        let p = QPoly::var(&["x", "y"], 0);
        assert!(matches!(
            p.eval(&[q(1)]),
            Err(PolyError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn gradient_of_cone() {
        // grad(x^2 + y^2 - z^2) = (2x, 2y, -2z)
        let vars = ["x", "y", "z"];
        let p = QPoly::from_terms(
            &vars,
            [
                (vec![2, 0, 0], q(1)),
                (vec![0, 2, 0], q(1)),
                (vec![0, 0, 2], q(-1)),
            ],
        );
        let g = p.gradient();
        assert_eq!(g[0], QPoly::from_terms(&vars, [(vec![1, 0, 0], q(2))]));
        assert_eq!(g[1], QPoly::from_terms(&vars, [(vec![0, 1, 0], q(2))]));
        assert_eq!(g[2], QPoly::from_terms(&vars, [(vec![0, 0, 1], q(-2))]));
    }

    #[test]
    fn hessian_is_symmetric_and_constant_for_quadrics() {
        let vars = ["x", "y", "z"];
        let p = QPoly::from_terms(
            &vars,
            [
                (vec![2, 0, 0], q(1)),
                (vec![0, 2, 0], q(1)),
                (vec![0, 0, 2], q(1)),
            ],
        );
        let h = p.hessian();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(h[i][j], h[j][i]);
                let expect = if i == j { q(2) } else { q(0) };
                assert_eq!(h[i][j].coeff(&[0, 0, 0]), expect);
            }
        }
    }

    #[test]
    fn hessian_rank_two_for_degenerate_direction() {
        // x^4 + y^2 + z^2 at the origin: second partials in x vanish.
        let vars = ["x", "y", "z"];
        let p = QPoly::from_terms(
            &vars,
            [
                (vec![4, 0, 0], q(1)),
                (vec![0, 2, 0], q(1)),
                (vec![0, 0, 2], q(1)),
            ],
        );
        let h = p.hessian();
        let at0 = |p: &QPoly| p.eval(&[q(0), q(0), q(0)]).unwrap();
        assert_eq!(at0(&h[0][0]), q(0));
        assert_eq!(at0(&h[1][1]), q(2));
        assert_eq!(at0(&h[2][2]), q(2));
    }

    #[test]
    fn product_rule_on_sample() {
        let vars = ["x", "y"];
        let p = QPoly::from_terms(&vars, [(vec![2, 1], q(3)), (vec![0, 1], qr(1, 2))]);
        let r = QPoly::from_terms(&vars, [(vec![1, 1], q(-2)), (vec![0, 0], q(5))]);
        let lhs = p.mul(&r).derivative(0);
        let rhs = p.derivative(0).mul(&r).add(&p.mul(&r.derivative(0)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn homogenize_roundtrip() {
        let vars = ["x", "y"];
        let p = QPoly::from_terms(&vars, [(vec![2, 0], q(1)), (vec![0, 1], q(3))]);
        let h = p.homogenize("w", 0);
        assert_eq!(h.total_degree(), 2);
        // every term homogeneous of degree 2
        for (e, _) in h.terms() {
            assert_eq!(e.iter().sum::<u32>(), 2);
        }
        assert_eq!(h.dehomogenize(2), p);
    }
}
