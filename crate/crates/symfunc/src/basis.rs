use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use jacklr_exact::linalg;
use jacklr_exact::{int, Rational};
use jacklr_partitions::{enumerate_partitions, Partition};

/// Per-degree data shared by every Jack computation of that degree.
#[derive(Debug)]
pub struct DegreeData {
    pub degree: u32,
    /// Reverse-lex order: `(n)` first. Reversed, this is a linear extension
    /// of dominance from the bottom.
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    /// `m_μ = Σ_ρ m_to_p[μ][ρ] p_ρ`.
    pub m_to_p: Vec<Vec<Rational>>,
    /// `z_ρ`.
    pub z: Vec<Rational>,
}

/// Number of ways to distribute the parts of `rho` into rows with row sums
/// exactly `mu`: the coefficient of `m_μ` in `p_ρ`.
fn p_to_m_entry(rho: &[u32], mu: &[u32]) -> u64 {
    fn go(rho: &[u32], rest: &mut Vec<u32>, memo: &mut HashMap<(usize, Vec<u32>), u64>) -> u64 {
        if rho.is_empty() {
            return rest.iter().all(|&r| r == 0) as u64;
        }
        let key = (rho.len(), rest.clone());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let mut total = 0;
        for i in 0..rest.len() {
            if rest[i] >= rho[0] {
                rest[i] -= rho[0];
                total += go(&rho[1..], rest, memo);
                rest[i] += rho[0];
            }
        }
        memo.insert(key, total);
        total
    }
    go(rho, &mut mu.to_vec(), &mut HashMap::new())
}

impl DegreeData {
    pub fn new(degree: u32) -> Self {
        let parts = enumerate_partitions(degree);
        let index = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let n = parts.len();
        // p_to_m[ρ][μ]; transpose-solve for the inverse
        let p_to_m: Vec<Vec<Rational>> = parts
            .iter()
            .map(|rho| {
                parts
                    .iter()
                    .map(|mu| int(p_to_m_entry(rho.parts(), mu.parts()) as i64))
                    .collect()
            })
            .collect();
        // m_to_p = (p_to_m)^{-1}: rows indexed by μ.
        let identity: Vec<Vec<Rational>> = (0..n)
            .map(|i| (0..n).map(|j| int((i == j) as i64)).collect())
            .collect();
        // Solve X·P = I  ⇔  Pᵀ·Xᵀ = I.
        let pt: Vec<Vec<Rational>> = (0..n)
            .map(|i| (0..n).map(|j| p_to_m[j][i].clone()).collect())
            .collect();
        let cols = linalg::solve_many(&pt, &identity).expect("p-basis is a basis");
        let m_to_p = cols; // cols[μ] is row μ of X
        let z = parts.iter().map(|p| p.z()).collect();
        DegreeData {
            degree,
            parts,
            index,
            m_to_p,
            z,
        }
    }

    /// Cached per process; the data is pure.
    pub fn get(degree: u32) -> Arc<DegreeData> {
        static CACHE: OnceLock<Mutex<HashMap<u32, Arc<DegreeData>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(d) = cache.lock().unwrap().get(&degree) {
            return d.clone();
        }
        let d = Arc::new(DegreeData::new(degree));
        cache.lock().unwrap().entry(degree).or_insert(d).clone()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

fn distinct_permutations(v: &[u32]) -> Vec<Vec<u32>> {
    let mut sorted = v.to_vec();
    sorted.sort_unstable();
    let mut out = vec![sorted.clone()];
    // next_permutation over the multiset
    loop {
        let Some(i) = (0..sorted.len().saturating_sub(1)).rev().find(|&i| sorted[i] < sorted[i + 1])
        else {
            return out;
        };
        let j = (i + 1..sorted.len()).rev().find(|&j| sorted[j] > sorted[i]).unwrap();
        sorted.swap(i, j);
        sorted[i + 1..].reverse();
        out.push(sorted.clone());
    }
}

/// Structure constants of `m_μ · m_ν` in the monomial basis. For each target
/// shape the coefficient counts pairs of distinct rearrangements of the
/// zero-padded `μ`, `ν` summing to the sorted exponent vector.
pub fn monomial_product(mu: &Partition, nu: &Partition) -> Arc<BTreeMap<Partition, u64>> {
    static CACHE: OnceLock<Mutex<HashMap<(Partition, Partition), Arc<BTreeMap<Partition, u64>>>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = if mu <= nu { (mu.clone(), nu.clone()) } else { (nu.clone(), mu.clone()) };
    if let Some(v) = cache.lock().unwrap().get(&key) {
        return v.clone();
    }
    let width = mu.len() + nu.len();
    let pad = |p: &Partition| {
        let mut v = p.parts().to_vec();
        v.resize(width, 0);
        v
    };
    let mu_perms = distinct_permutations(&pad(&key.0));
    let nu_perms = distinct_permutations(&pad(&key.1));
    let mut out: BTreeMap<Partition, u64> = BTreeMap::new();
    for a in &mu_perms {
        for b in &nu_perms {
            let s: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
            if s.windows(2).all(|w| w[0] >= w[1]) {
                let parts: Vec<u32> = s.into_iter().filter(|&x| x > 0).collect();
                *out.entry(Partition::new(parts).unwrap()).or_insert(0) += 1;
            }
        }
    }
    let out = Arc::new(out);
    cache.lock().unwrap().insert(key, out.clone());
    out
}
