use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use jacklr_exact::{alpha, int, Field, MultiPoly, RatFunc, Rational, ALPHA};
use jacklr_partitions::{lower_hook, lower_hook_at, Partition};

use crate::basis::DegreeData;
use crate::{SymError, SymFunc};

pub const DEFAULT_DEGREE_CAP: u32 = 12;

/// A way of producing the monomial expansions of all `J_λ` of one degree.
pub trait JackStrategy: Send + Sync {
    fn name(&self) -> &'static str;

    /// `out[λ][μ]` is the coefficient of `m_μ` in `J_λ`, both indexed as in
    /// `data.parts`.
    fn compute(&self, data: &DegreeData) -> Result<Vec<Vec<MultiPoly>>, SymError>;
}

fn alpha_pow<F: Field>(a: &F, k: usize) -> F {
    (0..k).fold(F::one(), |acc, _| acc.mul(a))
}

/// Monic `P_λ` in monomial coordinates at a given value of α, by
/// Gram–Schmidt in power-sum coordinates where
/// `⟨p_ρ, p_σ⟩ = δ z_ρ α^{ℓ(ρ)}` is diagonal.
pub(crate) fn monic_jacks<F: Field>(data: &DegreeData, a: &F) -> Vec<Vec<F>> {
    let n = data.len();
    let weight: Vec<F> = (0..n)
        .map(|r| F::from_rational(&data.z[r]).mul(&alpha_pow(a, data.parts[r].len())))
        .collect();
    let m_p: Vec<Vec<F>> = data
        .m_to_p
        .iter()
        .map(|row| row.iter().map(F::from_rational).collect())
        .collect();
    let mut p_coords: Vec<Vec<F>> = vec![Vec::new(); n];
    let mut weighted: Vec<Vec<F>> = vec![Vec::new(); n];
    let mut mono: Vec<Vec<F>> = vec![Vec::new(); n];
    let mut norms: Vec<F> = vec![F::zero(); n];
    // walk from 1^n upwards; every earlier shape is lower in the total order
    for i in (0..n).rev() {
        let mut v = m_p[i].clone();
        let mut m: Vec<F> = (0..n).map(|k| if k == i { F::one() } else { F::zero() }).collect();
        for j in i + 1..n {
            let ip = m_p[i]
                .iter()
                .zip(&weighted[j])
                .fold(F::zero(), |acc, (x, y)| if x.is_zero() { acc } else { acc.add(&x.mul(y)) });
            if ip.is_zero() {
                continue;
            }
            let c = ip.div(&norms[j]);
            for k in 0..n {
                if !p_coords[j][k].is_zero() {
                    v[k] = v[k].sub(&c.mul(&p_coords[j][k]));
                }
                if !mono[j][k].is_zero() {
                    m[k] = m[k].sub(&c.mul(&mono[j][k]));
                }
            }
        }
        let w: Vec<F> = v.iter().zip(&weight).map(|(x, y)| x.mul(y)).collect();
        norms[i] = v.iter().zip(&w).fold(F::zero(), |acc, (x, y)| acc.add(&x.mul(y)));
        p_coords[i] = v;
        weighted[i] = w;
        mono[i] = m;
    }
    mono
}

/// Symbolic Gram–Schmidt over `ℚ(α)`.
pub struct GramSchmidt;

impl JackStrategy for GramSchmidt {
    fn name(&self) -> &'static str {
        "gram-schmidt"
    }

    fn compute(&self, data: &DegreeData) -> Result<Vec<Vec<MultiPoly>>, SymError> {
        let a = RatFunc::from_poly(alpha());
        let monic = monic_jacks(data, &a);
        data.parts
            .iter()
            .zip(monic)
            .map(|(lam, row)| {
                let scale: MultiPoly = lam.boxes().into_iter().map(|b| lower_hook(lam, b).unwrap()).product();
                row.into_iter()
                    .map(|c| {
                        c.mul_poly(&scale)
                            .to_poly()
                            .map_err(|_| SymError::NonPolynomial(format!("J[{lam}] coefficient {c}")))
                    })
                    .collect()
            })
            .collect()
    }
}

/// Exact evaluation at `α = 1, 2, …` and interpolation. Coefficients of
/// `J_λ` have α-degree below `n`, so `n + 1` points suffice; one more point
/// is used as a check.
pub struct Interpolate;

impl JackStrategy for Interpolate {
    fn name(&self) -> &'static str {
        "interpolate"
    }

    fn compute(&self, data: &DegreeData) -> Result<Vec<Vec<MultiPoly>>, SymError> {
        let n = data.len();
        let points: Vec<Rational> = (1..=data.degree as i64 + 2).map(int).collect();
        let fit = points.len() - 1;
        let samples: Vec<Vec<Vec<Rational>>> = points
            .iter()
            .map(|a| {
                let monic = monic_jacks(data, a);
                monic
                    .into_iter()
                    .zip(&data.parts)
                    .map(|(row, lam)| {
                        let s: Rational = lam
                            .boxes()
                            .into_iter()
                            .map(|b| lower_hook_at(lam, b, a).unwrap())
                            .product();
                        row.into_iter().map(|c| c * &s).collect()
                    })
                    .collect()
            })
            .collect();
        let mut out = vec![vec![MultiPoly::zero(); n]; n];
        for (l, row) in out.iter_mut().enumerate() {
            for (m, slot) in row.iter_mut().enumerate() {
                let ys: Vec<Rational> = samples.iter().map(|s| s[l][m].clone()).collect();
                let coeffs = jacklr_exact::interpolate(&points[..fit], &ys[..fit]);
                let poly = MultiPoly::from_dense(ALPHA, &coeffs);
                if poly.eval_at(&points[fit])? != ys[fit] {
                    return Err(SymError::NonPolynomial(format!(
                        "J[{}] coefficient of m[{}] exceeds degree bound",
                        data.parts[l], data.parts[m]
                    )));
                }
                *slot = poly;
            }
        }
        Ok(out)
    }
}

/// Every registered strategy, in registration order.
pub fn jack_strategies() -> Vec<Arc<dyn JackStrategy>> {
    vec![Arc::new(Interpolate), Arc::new(GramSchmidt)]
}

pub fn jack_strategy(name: &str) -> Result<Arc<dyn JackStrategy>, SymError> {
    jack_strategies()
        .into_iter()
        .find(|s| s.name() == name)
        .ok_or_else(|| SymError::UnknownStrategy(name.to_string()))
}

type DegreeJacks = Arc<BTreeMap<Partition, Arc<SymFunc>>>;

/// Memo of Jack expansions, filled one whole degree at a time. Concurrent
/// readers are fine; if two threads race on a degree the first insert wins
/// (the values are identical anyway).
pub struct JackTable {
    cap: u32,
    strategy: Arc<dyn JackStrategy>,
    degrees: RwLock<HashMap<u32, DegreeJacks>>,
}

impl JackTable {
    pub fn new(cap: u32) -> Self {
        Self::with_strategy(cap, Arc::new(Interpolate))
    }

    pub fn with_strategy(cap: u32, strategy: Arc<dyn JackStrategy>) -> Self {
        JackTable {
            cap,
            strategy,
            degrees: RwLock::new(HashMap::new()),
        }
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn strategy_name(&self) -> &'static str {
        self.strategy.name()
    }

    pub fn check_degree(&self, degree: u32) -> Result<(), SymError> {
        if degree > self.cap {
            Err(SymError::DegreeCap { degree, cap: self.cap })
        } else {
            Ok(())
        }
    }

    pub fn degree(&self, degree: u32) -> Result<DegreeJacks, SymError> {
        self.check_degree(degree)?;
        if let Some(d) = self.degrees.read().unwrap().get(&degree) {
            return Ok(d.clone());
        }
        let data = DegreeData::get(degree);
        let table = self.strategy.compute(&data)?;
        let mut map = BTreeMap::new();
        for (lam, row) in data.parts.iter().zip(table) {
            let terms = data
                .parts
                .iter()
                .zip(row)
                .map(|(mu, c)| (mu.clone(), RatFunc::from_poly(c)));
            map.insert(lam.clone(), Arc::new(SymFunc::from_terms(degree, terms)?));
        }
        Ok(self.insert_degree(degree, map))
    }

    /// Installs precomputed expansions (e.g. from a disk cache). Returns the
    /// stored value, which is the earlier one if the degree was present.
    pub fn insert_degree(&self, degree: u32, map: BTreeMap<Partition, Arc<SymFunc>>) -> DegreeJacks {
        let mut guard = self.degrees.write().unwrap();
        guard.entry(degree).or_insert_with(|| Arc::new(map)).clone()
    }

    pub fn cached_degrees(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.degrees.read().unwrap().keys().copied().collect();
        v.sort();
        v
    }

    pub fn jack(&self, lam: &Partition) -> Result<Arc<SymFunc>, SymError> {
        let table = self.degree(lam.weight())?;
        Ok(table[lam].clone())
    }
}

impl Default for JackTable {
    fn default() -> Self {
        Self::new(DEFAULT_DEGREE_CAP)
    }
}
