use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{ExactError, Rational};

/// Exponent vector. Ordered graded-lexicographically: total degree first,
/// then lexicographic on the entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mono(pub Vec<u32>);

impl Mono {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial over ℚ in named variables.
///
/// `vars` holds exactly the variables that occur, sorted; this keeps the
/// representation canonical so that derived equality is polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Mono, Rational>,
}

fn merge_vars(a: &[String], b: &[String]) -> Vec<String> {
    let mut out: Vec<String> = a.iter().chain(b.iter()).cloned().collect();
    out.sort();
    out.dedup();
    out
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono(vec![]), c);
        }
        MultiPoly { vars: vec![], terms }
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(Rational::from_integer(BigInt::from(n)))
    }

    pub fn var(name: &str) -> Self {
        Self::monomial(Rational::one(), &[(name, 1)])
    }

    /// `c · ∏ v^e`. Repeated variables multiply.
    pub fn monomial(c: Rational, powers: &[(&str, u32)]) -> Self {
        let mut vars: Vec<String> = powers.iter().map(|(v, _)| v.to_string()).collect();
        vars.sort();
        vars.dedup();
        let mut exps = vec![0u32; vars.len()];
        for (v, e) in powers {
            let i = vars.binary_search_by(|w| w.as_str().cmp(v)).unwrap();
            exps[i] += e;
        }
        let mut terms = BTreeMap::new();
        terms.insert(Mono(exps), c);
        Self::normalized(vars, terms)
    }

    /// Affine form `c + Σ a_v v`.
    pub fn linear(constant: Rational, coeffs: &[(&str, Rational)]) -> Self {
        let mut p = Self::constant(constant);
        for (v, a) in coeffs {
            p = &p + &Self::monomial(a.clone(), &[(v, 1)]);
        }
        p
    }

    /// Drops zero coefficients and unused variables.
    fn normalized(vars: Vec<String>, terms: BTreeMap<Mono, Rational>) -> Self {
        let terms: BTreeMap<Mono, Rational> =
            terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let used: Vec<bool> = (0..vars.len())
            .map(|i| terms.keys().any(|m| m.0[i] > 0))
            .collect();
        if used.iter().all(|&u| u) {
            return MultiPoly { vars, terms };
        }
        let keep: Vec<usize> = (0..vars.len()).filter(|&i| used[i]).collect();
        let vars = keep.iter().map(|&i| vars[i].clone()).collect();
        let terms = terms
            .into_iter()
            .map(|(m, c)| (Mono(keep.iter().map(|&i| m.0[i]).collect()), c))
            .collect();
        MultiPoly { vars, terms }
    }

    /// Re-express the exponent vectors over a superset of variables.
    fn embed(&self, vars: &[String]) -> BTreeMap<Mono, Rational> {
        if self.vars == vars {
            return self.terms.clone();
        }
        let pos: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v).expect("variable missing"))
            .collect();
        self.terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u32; vars.len()];
                for (k, &p) in pos.iter().enumerate() {
                    e[p] = m.0[k];
                }
                (Mono(e), c.clone())
            })
            .collect()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &Rational)> {
        self.terms.iter()
    }

    /// Terms as `(variable powers, coefficient)`, ascending grlex.
    pub fn term_list(&self) -> Vec<(Vec<(String, u32)>, Rational)> {
        self.terms
            .iter()
            .map(|(m, c)| {
                let powers = self
                    .vars
                    .iter()
                    .zip(&m.0)
                    .filter(|(_, &e)| e > 0)
                    .map(|(v, &e)| (v.clone(), e))
                    .collect();
                (powers, c.clone())
            })
            .collect()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_constant() {
            Some(self.constant_term())
        } else {
            None
        }
    }

    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&Mono(vec![0; self.vars.len()]))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Coefficient of `∏ v^e` (zero if absent).
    pub fn coeff(&self, powers: &[(&str, u32)]) -> Rational {
        let mut e = vec![0u32; self.vars.len()];
        for (v, k) in powers {
            if *k == 0 {
                continue;
            }
            match self.vars.iter().position(|w| w == v) {
                Some(i) => e[i] += k,
                None => return Rational::zero(),
            }
        }
        self.terms.get(&Mono(e)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|m| m.degree())
    }

    pub fn degree_in(&self, var: &str) -> u32 {
        match self.vars.iter().position(|w| w == var) {
            Some(i) => self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0),
            None => 0,
        }
    }

    /// Largest term in grlex order.
    pub fn leading_coeff(&self) -> Rational {
        self.terms
            .values()
            .next_back()
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Splits `p = Σ_k var^k · q_k` with `q_k` free of `var`.
    pub fn coefficients_in(&self, var: &str) -> BTreeMap<u32, MultiPoly> {
        let Some(i) = self.vars.iter().position(|w| w == var) else {
            let mut out = BTreeMap::new();
            if !self.is_zero() {
                out.insert(0, self.clone());
            }
            return out;
        };
        let mut buckets: BTreeMap<u32, BTreeMap<Mono, Rational>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let k = e[i];
            e[i] = 0;
            buckets.entry(k).or_default().insert(Mono(e), c.clone());
        }
        buckets
            .into_iter()
            .map(|(k, t)| (k, Self::normalized(self.vars.clone(), t)))
            .collect()
    }

    /// Composition: every bound variable is replaced by its image.
    pub fn substitute(&self, bindings: &BTreeMap<String, MultiPoly>) -> MultiPoly {
        let bound: Vec<&String> = self
            .vars
            .iter()
            .filter(|v| bindings.contains_key(*v))
            .collect();
        if bound.is_empty() {
            return self.clone();
        }
        self.horner(&bound, bindings)
    }

    fn horner(&self, bound: &[&String], bindings: &BTreeMap<String, MultiPoly>) -> MultiPoly {
        let Some((first, rest)) = bound.split_first() else {
            return self.clone();
        };
        let slices = self.coefficients_in(first);
        let image = &bindings[*first];
        let top = slices.keys().next_back().copied().unwrap_or(0);
        let mut acc = MultiPoly::zero();
        for k in (0..=top).rev() {
            acc = &acc * image;
            if let Some(q) = slices.get(&k) {
                acc = &acc + &q.horner(rest, bindings);
            }
        }
        acc
    }

    pub fn substitute_one(&self, var: &str, image: &MultiPoly) -> MultiPoly {
        let mut b = BTreeMap::new();
        b.insert(var.to_string(), image.clone());
        self.substitute(&b)
    }

    /// Binds variables to rationals; cheaper than general substitution.
    pub fn eval_partial(&self, values: &BTreeMap<String, Rational>) -> MultiPoly {
        let idx: Vec<Option<&Rational>> = self.vars.iter().map(|v| values.get(v)).collect();
        if idx.iter().all(|x| x.is_none()) {
            return self.clone();
        }
        let mut terms: BTreeMap<Mono, Rational> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut c = c.clone();
            let mut e = m.0.clone();
            for (i, v) in idx.iter().enumerate() {
                if let Some(v) = v {
                    if e[i] > 0 {
                        c *= num_traits::pow(Rational::clone(v), e[i] as usize);
                        e[i] = 0;
                    }
                }
            }
            let slot = terms.entry(Mono(e)).or_insert_with(Rational::zero);
            *slot += c;
        }
        Self::normalized(self.vars.clone(), terms)
    }

    /// Full evaluation; errors if a variable is left unbound.
    pub fn eval(&self, values: &BTreeMap<String, Rational>) -> Result<Rational, ExactError> {
        let p = self.eval_partial(values);
        if !p.is_constant() {
            return Err(ExactError::Unbound(p.vars.clone()));
        }
        Ok(p.constant_term())
    }

    /// Evaluation of a polynomial in at most one variable.
    pub fn eval_at(&self, value: &Rational) -> Result<Rational, ExactError> {
        match self.vars.len() {
            0 => Ok(self.constant_term()),
            1 => {
                let mut b = BTreeMap::new();
                b.insert(self.vars[0].clone(), value.clone());
                self.eval(&b)
            }
            _ => Err(ExactError::NotUnivariate(self.vars.clone())),
        }
    }

    /// Dense coefficient list `[c0, c1, ...]` of a univariate polynomial, along
    /// with its variable (None for constants).
    pub fn to_dense(&self) -> Result<(Option<String>, Vec<Rational>), ExactError> {
        match self.vars.len() {
            0 => Ok((None, vec![self.constant_term()])),
            1 => {
                let d = self.degree_in(&self.vars[0]) as usize;
                let mut out = vec![Rational::zero(); d + 1];
                for (m, c) in &self.terms {
                    out[m.0[0] as usize] = c.clone();
                }
                Ok((Some(self.vars[0].clone()), out))
            }
            _ => Err(ExactError::NotUnivariate(self.vars.clone())),
        }
    }

    pub fn from_dense(var: &str, coeffs: &[Rational]) -> Self {
        let terms = coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| (Mono(vec![k as u32]), c.clone()))
            .collect();
        Self::normalized(vec![var.to_string()], terms)
    }

    /// Renames variables; the images must stay distinct.
    pub fn rename(&self, f: impl Fn(&str) -> String) -> Self {
        let mut b = BTreeMap::new();
        for v in &self.vars {
            b.insert(v.clone(), MultiPoly::var(&f(v)));
        }
        self.substitute(&b)
    }

    /// Homogeneous component of the given total degree in `vars`.
    pub fn homogeneous_part(&self, vars: &[&str], degree: u32) -> MultiPoly {
        let idx: Vec<usize> = self
            .vars
            .iter()
            .enumerate()
            .filter(|(_, v)| vars.contains(&v.as_str()))
            .map(|(i, _)| i)
            .collect();
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| idx.iter().map(|&i| m.0[i]).sum::<u32>() == degree)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        Self::normalized(self.vars.clone(), terms)
    }

    fn combine(&self, other: &Self, sign: bool) -> Self {
        let vars = merge_vars(&self.vars, &other.vars);
        let mut terms = self.embed(&vars);
        for (m, c) in other.embed(&vars) {
            let slot = terms.entry(m).or_insert_with(Rational::zero);
            if sign {
                *slot += c;
            } else {
                *slot -= c;
            }
        }
        Self::normalized(vars, terms)
    }

    fn product(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let vars = merge_vars(&self.vars, &other.vars);
        let a = self.embed(&vars);
        let b = other.embed(&vars);
        let mut terms: BTreeMap<Mono, Rational> = BTreeMap::new();
        for (ma, ca) in &a {
            for (mb, cb) in &b {
                let e: Vec<u32> = ma.0.iter().zip(&mb.0).map(|(x, y)| x + y).collect();
                let slot = terms.entry(Mono(e)).or_insert_with(Rational::zero);
                *slot += ca * cb;
            }
        }
        Self::normalized(vars, terms)
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.combine(rhs, true)
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.combine(rhs, false)
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.product(rhs)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: MultiPoly) -> MultiPoly { (&self).$f(&rhs) }
        }
        impl $tr<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: &MultiPoly) -> MultiPoly { (&self).$f(rhs) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl std::iter::Sum for MultiPoly {
    fn sum<I: Iterator<Item = MultiPoly>>(iter: I) -> Self {
        iter.fold(MultiPoly::zero(), |a, b| &a + &b)
    }
}

impl std::iter::Product for MultiPoly {
    fn product<I: Iterator<Item = MultiPoly>>(iter: I) -> Self {
        iter.fold(MultiPoly::one(), |a, b| &a * &b)
    }
}

impl From<Rational> for MultiPoly {
    fn from(c: Rational) -> Self {
        MultiPoly::constant(c)
    }
}

impl From<i64> for MultiPoly {
    fn from(n: i64) -> Self {
        MultiPoly::from_int(n)
    }
}

/// Canonical text: descending grlex, `coeff*var^exp*...` per term, explicit
/// coefficient on every term. Zero prints as `0`.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{}", mag)?;
            for (v, &e) in self.vars.iter().zip(&m.0) {
                match e {
                    0 => {}
                    1 => write!(f, "*{}", v)?,
                    _ => write!(f, "*{}^{}", v, e)?,
                }
            }
        }
        Ok(())
    }
}
