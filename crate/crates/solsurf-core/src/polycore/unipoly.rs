//! Exact univariate polynomials over the rationals: squarefree
//! factorization (Yun), Sturm sequences, and real-root isolation with
//! multiplicities.

use super::{rat_gcd, PolyError, QPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Open interval with exact rational endpoints isolating exactly one
/// distinct real root, counted `multiplicity` times.
#[derive(Debug, Clone, PartialEq)]
pub struct IsolatingInterval {
    pub lo: BigRational,
    pub hi: BigRational,
    pub multiplicity: u32,
}

impl IsolatingInterval {
    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }
}

/// Dense univariate polynomial over the rationals; `coeffs[i]` is the
/// coefficient of `z^i`, trailing coefficient nonzero.
#[derive(Debug, Clone, PartialEq)]
pub struct UniRat {
    coeffs: Vec<BigRational>,
}

impl UniRat {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        UniRat { coeffs }
    }

    pub fn zero() -> Self {
        UniRat { coeffs: vec![] }
    }

    /// View a one-variable `QPoly` as a dense univariate polynomial.
    pub fn from_poly(p: &QPoly) -> Result<Self, PolyError> {
        if p.nvars() != 1 {
            return Err(PolyError::NotUnivariate(p.nvars()));
        }
        let deg = p.total_degree() as usize;
        let mut coeffs = vec![BigRational::zero(); deg + 1];
        for (e, c) in p.terms() {
            coeffs[e[0] as usize] = c.clone();
        }
        Ok(UniRat::new(coeffs))
    }

    pub fn to_poly(&self, var: &str) -> QPoly {
        QPoly::from_terms(
            &[var],
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (vec![i as u32], c.clone())),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        UniRat::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + super::rat_to_f64(c);
        }
        acc
    }

    fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigRational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] -= c;
        }
        UniRat::new(out)
    }

    /// Exact division; panics if the division leaves a remainder.
    fn div_exact(&self, d: &Self) -> Self {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Self::zero();
        }
        let mut rem = self.coeffs.clone();
        let dd = d.degree();
        let lc = d.coeffs.last().unwrap().clone();
        assert!(rem.len() >= d.coeffs.len());
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + dd] / &lc;
            if !q.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    let v = &q * dc;
                    rem[k + j] -= v;
                }
            }
            quot[k] = q;
        }
        assert!(
            rem.iter().all(|c| c.is_zero()),
            "non-exact univariate division"
        );
        UniRat::new(quot)
    }

    /// Integer coefficient vector after clearing denominators and
    /// dividing by the (positive) content. Sign preserved.
    fn to_int_primitive(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return vec![];
        }
        let mut content = BigRational::zero();
        for c in &self.coeffs {
            content = rat_gcd(&content, c);
        }
        self.coeffs
            .iter()
            .map(|c| {
                let q = c / &content;
                debug_assert!(q.denom().is_one());
                q.numer().clone()
            })
            .collect()
    }
}

/// Univariate gcd over the rationals (primitive pseudo-remainder
/// sequence; result is primitive with positive leading coefficient).
pub fn uni_gcd(a: &UniRat, b: &UniRat) -> UniRat {
    if a.is_zero() {
        return from_ints(int_primitive_positive(b.to_int_primitive()));
    }
    if b.is_zero() {
        return from_ints(int_primitive_positive(a.to_int_primitive()));
    }
    let mut p = int_primitive_positive(a.to_int_primitive());
    let mut q = int_primitive_positive(b.to_int_primitive());
    if p.len() < q.len() {
        std::mem::swap(&mut p, &mut q);
    }
    while !q.is_empty() {
        let (_, r) = int_prem(&p, &q);
        p = q;
        q = int_primitive_positive(r);
    }
    from_ints(int_primitive_positive(p))
}

fn from_ints(p: Vec<BigInt>) -> UniRat {
    UniRat::new(p.into_iter().map(BigRational::from_integer).collect())
}

fn int_content(p: &[BigInt]) -> BigInt {
    use num_integer::Integer;
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
    }
    g
}

fn trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
    p
}

/// Divide by the positive content; the overall sign is preserved.
fn int_primitive_keep_sign(p: Vec<BigInt>) -> Vec<BigInt> {
    let p = trim(p);
    if p.is_empty() {
        return p;
    }
    let g = int_content(&p);
    p.into_iter().map(|c| c / &g).collect()
}

/// Divide by the content and force a positive leading coefficient.
fn int_primitive_positive(p: Vec<BigInt>) -> Vec<BigInt> {
    let p = trim(p);
    if p.is_empty() {
        return p;
    }
    let mut g = int_content(&p);
    if p.last().unwrap().is_negative() {
        g = -g;
    }
    p.into_iter().map(|c| c / &g).collect()
}

/// Pseudo remainder: computes `r` with `lc(b)^(da-db+1) * a = q*b + r`,
/// `deg r < deg b`. Returns `(scale_sign, r)` where `scale_sign` is the
/// sign of `lc(b)^(da-db+1)`.
fn int_prem(a: &[BigInt], b: &[BigInt]) -> (i32, Vec<BigInt>) {
    let da = a.len() - 1;
    let db = b.len() - 1;
    debug_assert!(da >= db);
    let lc = b.last().unwrap().clone();
    let delta = da - db;
    let scale_sign = if lc.is_negative() && (delta + 1) % 2 == 1 {
        -1
    } else {
        1
    };
    let mut r: Vec<BigInt> = a.to_vec();
    for k in (db..=da).rev() {
        // r <- lc*r - r[k]*x^(k-db)*b  (keeps overall scale lc^(delta+1))
        let coef = r[k].clone();
        for c in r.iter_mut() {
            *c = &*c * &lc;
        }
        if !coef.is_zero() {
            for j in 0..=db {
                let v = &coef * &b[j];
                r[k - db + j] -= v;
            }
        }
        debug_assert!(r[k].is_zero());
    }
    r.truncate(db);
    (scale_sign, trim(r))
}

/// Sturm chain of a squarefree primitive integer polynomial.
fn sturm_chain(f: &[BigInt]) -> Vec<Vec<BigInt>> {
    let mut chain = vec![f.to_vec()];
    let fp: Vec<BigInt> = f
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect();
    let fp = int_primitive_keep_sign(fp);
    if fp.is_empty() {
        return chain;
    }
    chain.push(fp);
    loop {
        let n = chain.len();
        let b = &chain[n - 1];
        if b.len() <= 1 {
            break;
        }
        let a = &chain[n - 2];
        let (scale_sign, r) = int_prem(a, b);
        let mut r = int_primitive_keep_sign(r);
        if r.is_empty() {
            break;
        }
        // next member is -(a mod b) up to a positive factor
        if scale_sign > 0 {
            for c in r.iter_mut() {
                *c = -c.clone();
            }
        }
        chain.push(r);
    }
    chain
}

fn eval_sign_at(p: &[BigInt], x: &BigRational) -> i32 {
    // sign of p(a/b) = sign of sum c_i a^i b^(n-i)
    if p.is_empty() {
        return 0;
    }
    let a = x.numer();
    let b = x.denom();
    let n = p.len() - 1;
    let mut bpows = vec![BigInt::one(); n + 1];
    for i in 1..=n {
        bpows[i] = &bpows[i - 1] * b;
    }
    let mut acc = BigInt::zero();
    let mut apow = BigInt::one();
    for (i, c) in p.iter().enumerate() {
        acc += c * &apow * &bpows[n - i];
        apow *= a;
    }
    match acc.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

fn sign_variations(chain: &[Vec<BigInt>], x: &BigRational) -> usize {
    let mut count = 0;
    let mut last = 0;
    for p in chain {
        let s = eval_sign_at(p, x);
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Distinct real roots of the squarefree polynomial in (a, b],
/// assuming f(a), f(b) nonzero.
fn sturm_count(chain: &[Vec<BigInt>], a: &BigRational, b: &BigRational) -> usize {
    sign_variations(chain, a).saturating_sub(sign_variations(chain, b))
}

/// Cauchy-style bound: all real roots lie strictly inside (-B, B).
fn root_bound(p: &[BigInt]) -> BigRational {
    let lc = p.last().unwrap();
    let mut maxq = BigRational::zero();
    for c in &p[..p.len() - 1] {
        let q = BigRational::new(c.abs(), lc.abs());
        if q > maxq {
            maxq = q;
        }
    }
    maxq + BigRational::from_integer(BigInt::from(2))
}

/// A real root of a squarefree factor, carried with enough structure to
/// refine it afterwards.
#[derive(Debug, Clone)]
pub struct IsolatedRoot {
    pub interval: IsolatingInterval,
    /// The squarefree factor this root belongs to (sign-changing).
    pub factor: UniRat,
}

impl IsolatedRoot {
    /// Bisect until the interval is narrower than `width`.
    pub fn refine(&mut self, width: &BigRational) {
        let ints = int_primitive_keep_sign(self.factor.to_int_primitive());
        let slo = eval_sign_at(&ints, &self.interval.lo);
        debug_assert!(slo != 0);
        while self.interval.width() > *width {
            let mid = self.interval.midpoint();
            let sm = eval_sign_at(&ints, &mid);
            if sm == 0 {
                // mid is the exact root; clamp tightly around it
                let w8 = width / BigRational::from_integer(BigInt::from(8));
                self.interval.lo = &mid - &w8;
                self.interval.hi = &mid + &w8;
                return;
            }
            if sm == slo {
                self.interval.lo = mid;
            } else {
                self.interval.hi = mid;
            }
        }
    }

    /// Float approximation of the root after refining to width 2^width_exp.
    pub fn to_f64(&self, width_exp: i32) -> f64 {
        let mut r = self.clone();
        let w = BigRational::new(BigInt::one(), BigInt::from(2).pow((-width_exp) as u32));
        r.refine(&w);
        super::rat_to_f64(&r.interval.midpoint())
    }
}

/// Isolate the real roots of a squarefree integer polynomial; returns
/// open intervals with f nonzero at both endpoints.
fn isolate_squarefree(f: &[BigInt]) -> Vec<(BigRational, BigRational)> {
    if f.len() <= 1 {
        return vec![];
    }
    let chain = sturm_chain(f);
    let bound = root_bound(f);
    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    let two = BigRational::from_integer(BigInt::from(2));
    while let Some((a, b)) = stack.pop() {
        let n = sturm_count(&chain, &a, &b);
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push((a, b));
            continue;
        }
        let mid = (&a + &b) / &two;
        if eval_sign_at(f, &mid) == 0 {
            // Exact rational root at mid: carve out a private interval.
            let mut w = (&b - &a) / BigRational::from_integer(BigInt::from(8));
            loop {
                let (l, r) = (&mid - &w, &mid + &w);
                if eval_sign_at(f, &l) != 0
                    && eval_sign_at(f, &r) != 0
                    && sturm_count(&chain, &l, &r) == 1
                {
                    stack.push((a.clone(), l.clone()));
                    stack.push((r.clone(), b.clone()));
                    out.push((l, r));
                    break;
                }
                w = w / &two;
            }
        } else {
            stack.push((a, mid.clone()));
            stack.push((mid, b));
        }
    }
    out.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());
    out
}

/// Yun squarefree decomposition: `f = prod p_i^i` with the `p_i`
/// squarefree and pairwise coprime. Returns pairs `(p_i, i)` with
/// `deg p_i > 0`.
pub fn squarefree_decomposition(f: &UniRat) -> Vec<(UniRat, u32)> {
    assert!(!f.is_zero());
    if f.degree() == 0 {
        return vec![];
    }
    let fp = f.derivative();
    let g = uni_gcd(f, &fp);
    if g.degree() == 0 {
        return vec![(from_ints(int_primitive_positive(f.to_int_primitive())), 1)];
    }
    let mut out = Vec::new();
    let mut c = f.div_exact(&g);
    let mut d = fp.div_exact(&g).sub(&c.derivative());
    let mut i = 1u32;
    loop {
        if c.degree() == 0 {
            break;
        }
        let p = uni_gcd(&c, &d);
        if p.degree() > 0 {
            out.push((p.clone(), i));
        }
        c = c.div_exact(&p);
        d = d.div_exact(&p).sub(&c.derivative());
        i += 1;
    }
    out
}

/// Isolate all real roots with multiplicities.
///
/// With `squarefree_split` the polynomial is first decomposed by Yun's
/// algorithm and each root carries the multiplicity of its factor;
/// without it, only the distinct roots of the squarefree part are
/// isolated and every multiplicity is reported as 1.
pub fn isolate_real_roots(
    p: &QPoly,
    squarefree_split: bool,
) -> Result<Vec<IsolatingInterval>, PolyError> {
    Ok(isolate_real_roots_detailed(p, squarefree_split)?
        .into_iter()
        .map(|r| r.interval)
        .collect())
}

/// As [`isolate_real_roots`] but keeps the squarefree factor per root so
/// callers can refine.
pub fn isolate_real_roots_detailed(
    p: &QPoly,
    squarefree_split: bool,
) -> Result<Vec<IsolatedRoot>, PolyError> {
    let f = UniRat::from_poly(p)?;
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let factors: Vec<(UniRat, u32)> = if squarefree_split {
        squarefree_decomposition(&f)
    } else {
        let fp = f.derivative();
        let g = uni_gcd(&f, &fp);
        let sf = if g.degree() == 0 {
            from_ints(int_primitive_positive(f.to_int_primitive()))
        } else {
            f.div_exact(&g)
        };
        vec![(sf, 1)]
    };
    let mut roots: Vec<IsolatedRoot> = Vec::new();
    for (factor, mult) in &factors {
        let ints = int_primitive_positive(factor.to_int_primitive());
        for (lo, hi) in isolate_squarefree(&ints) {
            roots.push(IsolatedRoot {
                interval: IsolatingInterval {
                    lo,
                    hi,
                    multiplicity: *mult,
                },
                factor: factor.clone(),
            });
        }
    }
    // Intervals from different factors can overlap; refine until the
    // whole collection is pairwise disjoint.
    let two = BigRational::from_integer(BigInt::from(2));
    loop {
        roots.sort_by(|a, b| a.interval.lo.partial_cmp(&b.interval.lo).unwrap());
        let mut overlap = None;
        for i in 1..roots.len() {
            if roots[i].interval.lo < roots[i - 1].interval.hi {
                overlap = Some(i);
                break;
            }
        }
        match overlap {
            None => break,
            Some(i) => {
                for j in [i - 1, i] {
                    let w = roots[j].interval.width() / &two;
                    roots[j].refine(&w);
                }
            }
        }
    }
    Ok(roots)
}

/// Count real roots with multiplicity — convenience over isolation.
pub fn count_real_roots_with_multiplicity(p: &QPoly) -> Result<u32, PolyError> {
    Ok(isolate_real_roots(p, true)?
        .iter()
        .map(|i| i.multiplicity)
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn zpoly(coeffs: &[i64]) -> QPoly {
        QPoly::from_terms(
            &["z"],
            coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| (vec![i as u32], q(c))),
        )
    }

    #[test]
    fn isolates_sqrt_two() {
        // z^2 - 2: two simple real roots
        let p = zpoly(&[-2, 0, 1]);
        let roots = isolate_real_roots(&p, true).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots.iter().all(|r| r.multiplicity == 1));
        let mut approx: Vec<f64> = isolate_real_roots_detailed(&p, true)
            .unwrap()
            .iter()
            .map(|r| r.to_f64(-40))
            .collect();
        approx.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((approx[0] + 2f64.sqrt()).abs() < 1e-10);
        assert!((approx[1] - 2f64.sqrt()).abs() < 1e-10);
    }

    #[test]
    fn triple_root() {
        // (z-1)^3 -> one interval, multiplicity 3
        let p = zpoly(&[-1, 3, -3, 1]);
        let roots = isolate_real_roots(&p, true).unwrap();
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].multiplicity, 3);
        let approx = isolate_real_roots_detailed(&p, true).unwrap()[0].to_f64(-40);
        assert!((approx - 1.0).abs() < 1e-10);
    }

    #[test]
    fn zero_polynomial_rejected() {
        let p = QPoly::zero(&["z"]);
        assert!(matches!(
            isolate_real_roots(&p, true),
            Err(PolyError::ZeroPolynomial)
        ));
    }

    #[test]
    fn rational_root_at_bisection_point() {
        // roots at 0, +/- 1/2: midpoint hits 0 during bisection
        // p = z(2z-1)(2z+1) = 4z^3 - z
        let p = zpoly(&[0, -1, 0, 4]);
        let roots = isolate_real_roots(&p, true).unwrap();
        assert_eq!(roots.len(), 3);
        assert_eq!(roots.iter().map(|r| r.multiplicity).sum::<u32>(), 3);
    }

    #[test]
    fn mixed_multiplicities() {
        // (z-1)^2 (z+2) = z^3 - 3z + 2
        let p = zpoly(&[2, -3, 0, 1]);
        let mut roots = isolate_real_roots(&p, true).unwrap();
        roots.sort_by(|a, b| a.lo.partial_cmp(&b.lo).unwrap());
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[0].multiplicity, 1); // -2
        assert_eq!(roots[1].multiplicity, 2); // 1
    }

    #[test]
    fn multiplicity_parity_matches_sign_behavior() {
        // odd multiplicity -> sign change across the interval,
        // even multiplicity -> same sign at both endpoints
        let p = zpoly(&[2, -3, 0, 1]); // (z-1)^2 (z+2)
        let f = UniRat::from_poly(&p).unwrap();
        for r in isolate_real_roots(&p, true).unwrap() {
            let slo = f.eval(&r.lo);
            let shi = f.eval(&r.hi);
            assert!(!slo.is_zero() && !shi.is_zero());
            let changes = (slo.is_negative()) != (shi.is_negative());
            assert_eq!(changes, r.multiplicity % 2 == 1);
        }
    }

    #[test]
    fn squarefree_split_flag_off_reports_distinct_roots() {
        let p = zpoly(&[2, -3, 0, 1]); // (z-1)^2 (z+2)
        let roots = isolate_real_roots(&p, false).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots.iter().all(|r| r.multiplicity == 1));
    }

    #[test]
    fn multiplicity_sum_bounded_by_degree() {
        let p = zpoly(&[1, 0, -3, 0, 1, 2, 1]);
        let total: u32 = isolate_real_roots(&p, true)
            .unwrap()
            .iter()
            .map(|r| r.multiplicity)
            .sum();
        assert!(total <= p.total_degree());
    }

    #[test]
    fn gcd_of_shared_factor() {
        // gcd((z-1)(z+3), (z-1)(z-7)) = z-1
        let a = zpoly(&[-3, 2, 1]);
        let b = zpoly(&[7, -8, 1]);
        let g = uni_gcd(&UniRat::from_poly(&a).unwrap(), &UniRat::from_poly(&b).unwrap());
        assert_eq!(g.degree(), 1);
        assert!(g.eval(&q(1)).is_zero());
    }
}
