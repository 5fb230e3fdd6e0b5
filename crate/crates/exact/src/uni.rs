//! Dense univariate helpers behind `divrem` and the rational-function gcd.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{ExactError, MultiPoly, Rational};

fn trim(v: &mut Vec<Rational>) {
    while v.len() > 1 && v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn is_zero_dense(v: &[Rational]) -> bool {
    v.iter().all(|c| c.is_zero())
}

fn dense_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut r);
    trim(&mut b);
    let db = b.len() - 1;
    let lead = b[db].clone();
    if r.len() <= db || is_zero_dense(&r) {
        return (vec![Rational::zero()], r);
    }
    let mut q = vec![Rational::zero(); r.len() - db];
    for k in (0..q.len()).rev() {
        let c = &r[k + db] / &lead;
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                r[k + j] -= &c * bj;
            }
        }
        q[k] = c;
    }
    r.truncate(db.max(1));
    trim(&mut r);
    (q, r)
}

/// Common variable of two polynomials in at most one variable.
fn shared_var(a: &MultiPoly, b: &MultiPoly) -> Result<Option<String>, ExactError> {
    let mut vars: Vec<String> = a.vars().iter().chain(b.vars()).cloned().collect();
    vars.sort();
    vars.dedup();
    match vars.len() {
        0 => Ok(None),
        1 => Ok(Some(vars.remove(0))),
        _ => Err(ExactError::NotUnivariate(vars)),
    }
}

fn dense_of(p: &MultiPoly) -> Vec<Rational> {
    p.to_dense().expect("univariate").1
}

/// Euclidean division `a = q·b + r`, `deg r < deg b`.
pub fn divrem(a: &MultiPoly, b: &MultiPoly) -> Result<(MultiPoly, MultiPoly), ExactError> {
    if b.is_zero() {
        return Err(ExactError::ZeroDivisor);
    }
    let var = shared_var(a, b)?;
    let name = var.as_deref().unwrap_or("a");
    let (q, r) = dense_divrem(&dense_of(a), &dense_of(b));
    Ok((MultiPoly::from_dense(name, &q), MultiPoly::from_dense(name, &r)))
}

/// Monic gcd of two univariate polynomials; gcd(0, 0) = 0.
pub fn gcd(a: &MultiPoly, b: &MultiPoly) -> Result<MultiPoly, ExactError> {
    let var = shared_var(a, b)?;
    let name = var.as_deref().unwrap_or("a");
    let mut x = dense_of(a);
    let mut y = dense_of(b);
    while !is_zero_dense(&y) {
        let (_, r) = dense_divrem(&x, &y);
        x = y;
        y = r;
    }
    trim(&mut x);
    if is_zero_dense(&x) {
        return Ok(MultiPoly::zero());
    }
    let lead = x.last().unwrap().clone();
    let monic: Vec<Rational> = x.iter().map(|c| c / &lead).collect();
    Ok(MultiPoly::from_dense(name, &monic))
}

/// Factor `k` making `k·p` a primitive integer polynomial whose leading
/// grlex coefficient is positive.
pub fn primitive_scale(p: &MultiPoly) -> Rational {
    let mut den = num_bigint::BigInt::one();
    let mut num = num_bigint::BigInt::zero();
    for (_, c) in p.terms() {
        den = den.lcm(c.denom());
        num = num.gcd(c.numer());
    }
    if num.is_zero() {
        return Rational::one();
    }
    let k = Rational::new(den, num);
    if p.leading_coeff().is_negative() {
        -k
    } else {
        k
    }
}

/// Coefficients `[c0, c1, ...]` of the unique polynomial of degree
/// `< xs.len()` through the points `(xs[i], ys[i])` (Newton divided differences).
pub fn interpolate(xs: &[Rational], ys: &[Rational]) -> Vec<Rational> {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len();
    let mut dd = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    // expand the Newton form from the innermost term outwards
    let mut coeffs = vec![Rational::zero(); n.max(1)];
    for k in (0..n).rev() {
        // coeffs := coeffs * (x - xs[k]) + dd[k]
        let mut next = vec![Rational::zero(); n.max(1)];
        for j in 0..n {
            if coeffs[j].is_zero() {
                continue;
            }
            if j + 1 < n {
                next[j + 1] += &coeffs[j];
            }
            next[j] -= &coeffs[j] * &xs[k];
        }
        next[0] += &dd[k];
        coeffs = next;
    }
    coeffs
}
