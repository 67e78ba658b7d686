//! Memoized deletion-contraction.

use std::collections::HashMap;

use super::{uniform_tutte, TutteError, TuttePolynomial};
use crate::matroid::{parallel_classes_from_counts, Matroid};

#[derive(Clone, Debug)]
pub struct TutteConfig {
    /// Largest ground set accepted.
    pub max_elements: usize,
    /// Approximate memo budget; least recently used entries go first.
    pub memo_cap_bytes: usize,
    /// Relabel minors by (parallel class size, basis degree) before keying the memo.
    pub canonical_relabel: bool,
    /// Answer uniform minors by closed form.
    pub uniform_shortcut: bool,
}

impl Default for TutteConfig {
    fn default() -> Self {
        TutteConfig {
            max_elements: 24,
            memo_cap_bytes: 256 << 20,
            canonical_relabel: true,
            uniform_shortcut: true,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EngineStats {
    pub calls: u64,
    pub memo_hits: u64,
    pub uniform_leaves: u64,
    pub evictions: u64,
}

struct Entry {
    poly: TuttePolynomial,
    last_used: u64,
    bytes: usize,
}

#[derive(Default)]
struct Memo {
    table: HashMap<Matroid, Entry>,
    bytes: usize,
    clock: u64,
}

impl Memo {
    fn get(&mut self, key: &Matroid) -> Option<TuttePolynomial> {
        self.clock += 1;
        let clock = self.clock;
        self.table.get_mut(key).map(|e| {
            e.last_used = clock;
            e.poly.clone()
        })
    }

    fn insert(&mut self, key: Matroid, poly: TuttePolynomial, cap: usize) -> u64 {
        self.clock += 1;
        let bytes = entry_bytes(&key, &poly);
        self.bytes += bytes;
        if let Some(old) = self.table.insert(
            key,
            Entry {
                poly,
                last_used: self.clock,
                bytes,
            },
        ) {
            self.bytes -= old.bytes;
        }
        if self.bytes <= cap {
            return 0;
        }
        // evict down to three quarters of the budget
        let target = cap / 4 * 3;
        let mut by_age: Vec<(u64, Matroid)> = self
            .table
            .iter()
            .map(|(k, e)| (e.last_used, k.clone()))
            .collect();
        by_age.sort_unstable_by_key(|(t, _)| *t);
        let mut evicted = 0;
        for (_, k) in by_age {
            if self.bytes <= target {
                break;
            }
            if let Some(e) = self.table.remove(&k) {
                self.bytes -= e.bytes;
                evicted += 1;
            }
        }
        evicted
    }
}

fn entry_bytes(key: &Matroid, poly: &TuttePolynomial) -> usize {
    let coeff_bytes: usize = poly
        .coeffs()
        .iter()
        .flatten()
        .map(|c| 32 + (c.bits() as usize).div_ceil(8))
        .sum();
    96 + key.basis_count() * 4 + coeff_bytes
}

/// Deletion-contraction engine with an LRU-bounded memo keyed by the
/// canonical basis family of each loop- and coloop-free minor.
pub struct TutteEngine {
    config: TutteConfig,
    memo: Memo,
    stats: EngineStats,
}

impl TutteEngine {
    pub fn new(config: TutteConfig) -> Self {
        TutteEngine {
            config,
            memo: Memo::default(),
            stats: EngineStats::default(),
        }
    }

    pub fn stats(&self) -> &EngineStats {
        &self.stats
    }

    pub fn memo_entries(&self) -> usize {
        self.memo.table.len()
    }

    pub fn tutte(&mut self, m: &Matroid) -> Result<TuttePolynomial, TutteError> {
        if m.n() > self.config.max_elements {
            return Err(TutteError::OverLimit {
                engine: "deletion-contraction",
                limit: self.config.max_elements,
                got: m.n(),
            });
        }
        Ok(self.reduce(m))
    }

    /// Strips loops and coloops, then recurses on what is left.
    fn reduce(&mut self, m: &Matroid) -> TuttePolynomial {
        self.stats.calls += 1;
        let loops = m.loops();
        let coloops = m.coloops();
        if loops.is_empty() && coloops.is_empty() {
            return self.core(m);
        }
        let core = m.delete_set(loops.union(coloops)).matroid;
        self.core(&core).shifted(coloops.len(), loops.len())
    }

    fn core(&mut self, m: &Matroid) -> TuttePolynomial {
        if m.n() == 0 {
            return TuttePolynomial::monomial(0, 0);
        }
        if self.config.uniform_shortcut && m.is_uniform() {
            self.stats.uniform_leaves += 1;
            return uniform_tutte(m.rank(), m.n());
        }
        let counts = m.pair_counts();
        let canonical = if self.config.canonical_relabel {
            m.relabel(&canonical_order(&counts))
        } else {
            m.clone()
        };
        if let Some(p) = self.memo.get(&canonical) {
            self.stats.memo_hits += 1;
            return p;
        }
        let counts = if self.config.canonical_relabel {
            canonical.pair_counts()
        } else {
            counts
        };
        let pivot = pivot(&counts, canonical.n());
        let deleted = canonical.delete(pivot).expect("pivot in range").matroid;
        let contracted = canonical.contract(pivot).expect("pivot in range").matroid;
        let mut out = TuttePolynomial::zero(canonical.rank(), canonical.corank());
        out.add_into(&self.reduce(&deleted));
        out.add_into(&self.reduce(&contracted));
        self.stats.evictions += self
            .memo
            .insert(canonical, out.clone(), self.config.memo_cap_bytes);
        out
    }
}

/// New label of each element: elements sorted by (parallel class size,
/// basis degree), ties kept in index order.
fn canonical_order(counts: &[Vec<u32>]) -> Vec<usize> {
    let n = counts.len();
    let mut class_size = vec![1usize; n];
    for class in parallel_classes_from_counts(counts, Default::default()) {
        for e in class.iter() {
            class_size[e] = class.len();
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&e| (class_size[e], counts[e][e], e));
    let mut perm = vec![0; n];
    for (new, &old) in order.iter().enumerate() {
        perm[old] = new;
    }
    perm
}

/// Lowest-index element of a largest parallel class.
fn pivot(counts: &[Vec<u32>], n: usize) -> usize {
    let classes = parallel_classes_from_counts(counts, Default::default());
    let mut best = (0, 0);
    for class in classes {
        let first = class.iter().next().expect("nonempty class");
        if class.len() > best.0 || (class.len() == best.0 && first < best.1) {
            best = (class.len(), first);
        }
    }
    debug_assert!(best.1 < n);
    best.1
}

/// One-shot deletion-contraction with default settings.
pub fn tutte_dc(m: &Matroid) -> Result<TuttePolynomial, TutteError> {
    TutteEngine::new(TutteConfig::default()).tutte(m)
}
