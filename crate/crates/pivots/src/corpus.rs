//! The pivot-congruence corpus: adjacent triples and divisibility of the
//! difference of their Stanley coefficients by the shared hook.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, Mutex, OnceLock};

use jacklr_exact::{divrem, MultiPoly, Rational};
use jacklr_partitions::{enumerate_partitions, pivot_pairs, Partition, PivotPair, Slot};
use jacklr_symfunc::{stanley_coefficients_sampled, JackTable, SymError};
use num_traits::Zero;

use crate::PivotError;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple {
    pub mu: Partition,
    pub nu: Partition,
    pub lam: Partition,
}

impl Triple {
    pub fn new(mu: Partition, nu: Partition, lam: Partition) -> Self {
        Triple { mu, nu, lam }
    }

    pub fn get(&self, slot: Slot) -> &Partition {
        match slot {
            Slot::Mu => &self.mu,
            Slot::Nu => &self.nu,
            Slot::Lam => &self.lam,
        }
    }

    fn with(&self, slot: Slot, p: Partition) -> Self {
        let mut t = self.clone();
        match slot {
            Slot::Mu => t.mu = p,
            Slot::Nu => t.nu = p,
            Slot::Lam => t.lam = p,
        }
        t
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} | {} ; {})", self.mu, self.nu, self.lam)
    }
}

/// Two triples that agree in two slots and differ by a box move in the
/// third. `first` carries `κ+a` (the shape holding the lower-left corner).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjacentTriplePair {
    pub first: Triple,
    pub second: Triple,
    pub slot: Slot,
    pub pivot: PivotPair,
}

impl AdjacentTriplePair {
    /// Places `κ+a` and `κ+b` into `slot` of `context`; the shape already in
    /// that slot is ignored.
    pub fn new(context: &Triple, slot: Slot, pivot: PivotPair) -> Self {
        AdjacentTriplePair {
            first: context.with(slot, pivot.lambda1.clone()),
            second: context.with(slot, pivot.lambda2.clone()),
            slot,
            pivot,
        }
    }

    /// Deterministic ordering key.
    pub fn key(&self) -> (Triple, Triple) {
        (self.first.clone(), self.second.clone())
    }
}

impl fmt::Display for AdjacentTriplePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} ~ {} [{} pivot at {}, x = {}]",
            self.first,
            self.second,
            self.slot.name(),
            self.pivot.pivot_box,
            self.pivot.shared_hook
        )
    }
}

fn nonempty_partitions(n: u32) -> Vec<Partition> {
    if n == 0 {
        Vec::new()
    } else {
        enumerate_partitions(n)
    }
}

/// `(μ, ν)` up to swapping, both non-empty, `|μ| + |ν| = n`.
fn unordered_pairs(n: u32) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for m in (n + 1) / 2..n {
        for mu in nonempty_partitions(m) {
            for nu in nonempty_partitions(n - m) {
                if m > n - m || mu >= nu {
                    out.push((mu.clone(), nu));
                }
            }
        }
    }
    out
}

/// Every adjacent pair with `|μ| + |ν| ≤ max_weight`. λ-slot pairs range
/// over unordered `(μ, ν)`; μ-slot pairs keep `ν` and `λ` fixed. A ν-slot
/// pair is the swap of a μ-slot pair, so none are listed separately.
pub fn enumerate_adjacent(max_weight: u32) -> Vec<AdjacentTriplePair> {
    let mut out = Vec::new();
    for n in 2..=max_weight {
        let bases = enumerate_partitions(n - 1);
        for (mu, nu) in unordered_pairs(n) {
            let context = Triple::new(mu, nu, Partition::empty());
            for kappa in &bases {
                for p in pivot_pairs(kappa) {
                    out.push(AdjacentTriplePair::new(&context, Slot::Lam, p));
                }
            }
        }
        for m in 2..n {
            for kappa in enumerate_partitions(m - 1) {
                let pivots = pivot_pairs(&kappa);
                if pivots.is_empty() {
                    continue;
                }
                for nu in nonempty_partitions(n - m) {
                    for lam in enumerate_partitions(n) {
                        let context = Triple::new(Partition::empty(), nu.clone(), lam);
                        for p in &pivots {
                            out.push(AdjacentTriplePair::new(&context, Slot::Mu, p.clone()));
                        }
                    }
                }
            }
        }
    }
    out
}

/// Stanley coefficients `g_{μν;λ}` for all λ at once, memoised per
/// unordered `(μ, ν)` and safe to share between threads.
pub struct StanleyCache {
    jacks: Arc<JackTable>,
    #[allow(clippy::type_complexity)]
    rows: Mutex<HashMap<(Partition, Partition), Arc<OnceLock<Result<Arc<BTreeMap<Partition, MultiPoly>>, SymError>>>>>,
}

impl StanleyCache {
    pub fn new(jacks: Arc<JackTable>) -> Self {
        StanleyCache { jacks, rows: Mutex::new(HashMap::new()) }
    }

    pub fn jacks(&self) -> &JackTable {
        &self.jacks
    }

    pub fn coefficient(&self, t: &Triple) -> Result<MultiPoly, SymError> {
        let n = t.mu.weight() + t.nu.weight();
        if t.lam.weight() != n {
            return Err(SymError::WeightMismatch {
                mu: t.mu.to_string(),
                nu: t.nu.to_string(),
                lam: t.lam.to_string(),
            });
        }
        self.jacks.check_degree(n)?;
        let key = if t.mu >= t.nu { (t.mu.clone(), t.nu.clone()) } else { (t.nu.clone(), t.mu.clone()) };
        let cell = self.rows.lock().expect("cache lock").entry(key.clone()).or_default().clone();
        let row = cell
            .get_or_init(|| stanley_coefficients_sampled(&self.jacks, &key.0, &key.1).map(Arc::new))
            .clone()?;
        Ok(row.get(&t.lam).cloned().unwrap_or_else(MultiPoly::zero))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceResult {
    pub first: MultiPoly,
    pub second: MultiPoly,
    pub difference: MultiPoly,
    pub shared_hook: MultiPoly,
    pub remainder: MultiPoly,
    pub divisible: bool,
    pub quotient: Option<MultiPoly>,
    /// Zero of the shared hook.
    pub root: Rational,
    pub first_at_root: Rational,
    pub second_at_root: Rational,
}

impl CongruenceResult {
    /// Divisibility by a linear hook is equivalent to agreement at its root;
    /// both tests must give the same answer.
    pub fn self_consistent(&self) -> bool {
        self.divisible == (self.first_at_root == self.second_at_root)
    }

    pub fn passed(&self) -> bool {
        self.divisible && self.self_consistent()
    }
}

/// Zero of a hook `c0 + c1·α`.
pub fn hook_root(hook: &MultiPoly) -> Result<Rational, PivotError> {
    let c1 = hook.coeff(&[(jacklr_exact::ALPHA, 1)]);
    if c1.is_zero() || hook.total_degree() != Some(1) {
        return Err(PivotError::RuleInapplicable(format!("shared hook {hook} is not linear in α")));
    }
    Ok(-hook.constant_term() / c1)
}

pub fn check_congruence(pair: &AdjacentTriplePair, cache: &StanleyCache) -> Result<CongruenceResult, PivotError> {
    let first = cache.coefficient(&pair.first)?;
    let second = cache.coefficient(&pair.second)?;
    compare(first, second, &pair.pivot.shared_hook)
}

/// Congruence of two given coefficients modulo a linear hook.
pub fn compare(first: MultiPoly, second: MultiPoly, hook: &MultiPoly) -> Result<CongruenceResult, PivotError> {
    let difference = &first - &second;
    let (q, remainder) = divrem(&difference, hook)?;
    let divisible = remainder.is_zero();
    let root = hook_root(hook)?;
    Ok(CongruenceResult {
        first_at_root: first.eval_at(&root)?,
        second_at_root: second.eval_at(&root)?,
        first,
        second,
        difference,
        shared_hook: hook.clone(),
        remainder,
        divisible,
        quotient: divisible.then_some(q),
        root,
    })
}

#[derive(Clone, Debug)]
pub enum PairOutcome {
    Checked(CongruenceResult),
    Skipped(String),
}

#[derive(Clone, Debug, Default)]
pub struct CorpusReport {
    pub outcomes: Vec<(AdjacentTriplePair, PairOutcome)>,
}

impl CorpusReport {
    pub fn checked(&self) -> usize {
        self.outcomes.iter().filter(|(_, o)| matches!(o, PairOutcome::Checked(_))).count()
    }

    pub fn skipped(&self) -> Vec<(&AdjacentTriplePair, &str)> {
        self.outcomes
            .iter()
            .filter_map(|(p, o)| match o {
                PairOutcome::Skipped(reason) => Some((p, reason.as_str())),
                PairOutcome::Checked(_) => None,
            })
            .collect()
    }

    pub fn counterexamples(&self) -> Vec<(&AdjacentTriplePair, &CongruenceResult)> {
        self.outcomes
            .iter()
            .filter_map(|(p, o)| match o {
                PairOutcome::Checked(r) if !r.passed() => Some((p, r)),
                _ => None,
            })
            .collect()
    }

    /// Pairs whose coefficients are both non-zero.
    pub fn nontrivial(&self) -> usize {
        self.outcomes
            .iter()
            .filter(|(_, o)| matches!(o, PairOutcome::Checked(r) if !r.first.is_zero() && !r.second.is_zero()))
            .count()
    }
}

/// Checks every pair on `jobs` threads; the report keeps the input order.
/// Pairs beyond the Jack degree cap are reported as skipped.
pub fn run_corpus(pairs: &[AdjacentTriplePair], cache: &StanleyCache, jobs: usize) -> Result<CorpusReport, PivotError> {
    let slots: Vec<OnceLock<Result<PairOutcome, PivotError>>> = pairs.iter().map(|_| OnceLock::new()).collect();
    let next = AtomicUsize::new(0);
    std::thread::scope(|s| {
        for _ in 0..jobs.max(1) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(pair) = pairs.get(i) else { break };
                let outcome = match check_congruence(pair, cache) {
                    Ok(r) => Ok(PairOutcome::Checked(r)),
                    Err(PivotError::Sym(e @ SymError::DegreeCap { .. })) => Ok(PairOutcome::Skipped(e.to_string())),
                    Err(e) => Err(e),
                };
                let _ = slots[i].set(outcome);
            });
        }
    });
    let mut outcomes = Vec::with_capacity(pairs.len());
    for (pair, slot) in pairs.iter().zip(slots) {
        let outcome = slot.into_inner().expect("every index is visited")?;
        outcomes.push((pair.clone(), outcome));
    }
    Ok(CorpusReport { outcomes })
}
