//! Matroids given by their explicit basis family.
//!
//! Every basis is a `u32` bitmask over the ground set `{0, .., n-1}`. The basis
//! list is kept sorted and deduplicated, which makes equality, hashing and
//! membership tests cheap and lets the whole crate treat the list as the single
//! source of truth for rank queries.

use std::fmt;

use thiserror::Error;

use crate::bitset::{binomial, compress, full_mask, k_subsets, ElementSet, MAX_ELEMENTS};

/// Largest ground set for which a full `2^n` rank table is built.
pub const RANK_TABLE_LIMIT: usize = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatroidError {
    #[error("basis family is empty")]
    EmptyBases,
    #[error("basis {basis:?} has {found} elements but the rank is {expected}")]
    WrongBasisSize {
        basis: Vec<usize>,
        expected: usize,
        found: usize,
    },
    #[error("element {element} is outside the ground set of size {n}")]
    ElementOutOfRange { element: usize, n: usize },
    #[error(
        "basis exchange fails: removing {element} from {first:?} admits no replacement from {second:?}"
    )]
    ExchangeViolation {
        first: Vec<usize>,
        second: Vec<usize>,
        element: usize,
    },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("{what} limit exceeded: {got} > {limit}")]
    OverLimit {
        what: &'static str,
        limit: usize,
        got: usize,
    },
}

pub type Result<T, E = MatroidError> = std::result::Result<T, E>;

pub(crate) fn check_limit(what: &'static str, got: usize, limit: usize) -> Result<()> {
    if got > limit {
        Err(MatroidError::OverLimit { what, limit, got })
    } else {
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matroid {
    n: usize,
    rank: usize,
    bases: Vec<u32>,
}

/// A minor together with the order-preserving relabeling that produced it.
///
/// `labels[i]` is the element of the parent ground set that became element `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Minor {
    pub matroid: Matroid,
    pub labels: Vec<usize>,
}

impl Matroid {
    /// Builds a matroid from explicit bases, validating sizes and the exchange axiom.
    pub fn from_bases(n: usize, rank: usize, bases: &[Vec<usize>]) -> Result<Self> {
        check_limit("ground set size", n, MAX_ELEMENTS)?;
        let mut masks = Vec::with_capacity(bases.len());
        for basis in bases {
            let mut mask = 0u32;
            for &e in basis {
                if e >= n {
                    return Err(MatroidError::ElementOutOfRange { element: e, n });
                }
                mask |= 1 << e;
            }
            masks.push(mask);
        }
        Self::from_masks(n, rank, masks)
    }

    /// Like [`Matroid::from_bases`] but takes bitmasks.
    pub fn from_masks(n: usize, rank: usize, mut masks: Vec<u32>) -> Result<Self> {
        check_limit("ground set size", n, MAX_ELEMENTS)?;
        if rank > n {
            return Err(MatroidError::InvalidParameters(format!(
                "rank {rank} exceeds ground set size {n}"
            )));
        }
        if masks.is_empty() {
            return Err(MatroidError::EmptyBases);
        }
        for &m in &masks {
            if !ElementSet(m).fits(n) {
                let element = ElementSet(m & !full_mask(n)).iter().next().unwrap_or(n);
                return Err(MatroidError::ElementOutOfRange { element, n });
            }
            if m.count_ones() as usize != rank {
                return Err(MatroidError::WrongBasisSize {
                    basis: ElementSet(m).to_vec(),
                    expected: rank,
                    found: m.count_ones() as usize,
                });
            }
        }
        masks.sort_unstable();
        masks.dedup();
        if let Some((first, second, element)) = find_exchange_violation(&masks) {
            return Err(MatroidError::ExchangeViolation {
                first: ElementSet(first).to_vec(),
                second: ElementSet(second).to_vec(),
                element,
            });
        }
        Ok(Matroid { n, rank, bases: masks })
    }

    /// For families that are matroids by construction.
    pub(crate) fn from_masks_unchecked(n: usize, rank: usize, mut masks: Vec<u32>) -> Self {
        masks.sort_unstable();
        masks.dedup();
        debug_assert!(!masks.is_empty());
        debug_assert!(masks.iter().all(|m| m.count_ones() as usize == rank));
        Matroid { n, rank, bases: masks }
    }

    /// `U_{k,n}`: every `k`-subset is a basis.
    pub fn uniform(k: usize, n: usize) -> Result<Self> {
        check_limit("ground set size", n, MAX_ELEMENTS)?;
        if k > n {
            return Err(MatroidError::InvalidParameters(format!(
                "uniform matroid needs k <= n, got k={k}, n={n}"
            )));
        }
        Ok(Self::from_masks_unchecked(n, k, k_subsets(n, k).collect()))
    }

    /// The minimal matroid `T_{k,n}`: a `(k+1)`-cycle with one edge replaced by
    /// `n-k` parallel copies. Elements `0..k` are the path, `k..n` the parallel class.
    pub fn minimal(k: usize, n: usize) -> Result<Self> {
        check_limit("ground set size", n, MAX_ELEMENTS)?;
        if k == 0 || k >= n {
            return Err(MatroidError::InvalidParameters(format!(
                "minimal matroid needs 1 <= k <= n-1, got k={k}, n={n}"
            )));
        }
        let path = full_mask(k);
        let mut masks = vec![path];
        for i in 0..k {
            for p in k..n {
                masks.push((path & !(1 << i)) | 1 << p);
            }
        }
        Ok(Self::from_masks_unchecked(n, k, masks))
    }

    /// Rank-2 matroid whose non-loop elements fall into parallel classes of the
    /// given sizes; classes occupy consecutive element ranges in order.
    pub fn rank2_from_partition(class_sizes: &[usize]) -> Result<Self> {
        if class_sizes.len() < 2 {
            return Err(MatroidError::InvalidParameters(
                "a rank-2 matroid needs at least two parallel classes".into(),
            ));
        }
        if class_sizes.contains(&0) {
            return Err(MatroidError::InvalidParameters(
                "parallel classes must be nonempty".into(),
            ));
        }
        let n: usize = class_sizes.iter().sum();
        check_limit("ground set size", n, MAX_ELEMENTS)?;
        let mut class_of = Vec::with_capacity(n);
        for (c, &size) in class_sizes.iter().enumerate() {
            class_of.extend(std::iter::repeat_n(c, size));
        }
        let mut masks = Vec::new();
        for e in 0..n {
            for f in e + 1..n {
                if class_of[e] != class_of[f] {
                    masks.push(1 << e | 1 << f);
                }
            }
        }
        Ok(Self::from_masks_unchecked(n, 2, masks))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.rank
    }

    #[inline]
    pub fn corank(&self) -> usize {
        self.n - self.rank
    }

    /// Sorted, deduplicated basis masks.
    #[inline]
    pub fn bases(&self) -> &[u32] {
        &self.bases
    }

    pub fn basis_count(&self) -> usize {
        self.bases.len()
    }

    pub fn ground(&self) -> ElementSet {
        ElementSet::full(self.n)
    }

    pub fn is_basis(&self, mask: u32) -> bool {
        self.bases.binary_search(&mask).is_ok()
    }

    /// Bases as ascending element lists, sorted lexicographically.
    pub fn canonical_bases(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = self.bases.iter().map(|&b| ElementSet(b).to_vec()).collect();
        out.sort();
        out
    }

    pub fn check_subset(&self, a: ElementSet) -> Result<()> {
        if a.fits(self.n) {
            Ok(())
        } else {
            let element = a.difference(self.ground()).iter().next().unwrap_or(self.n);
            Err(MatroidError::ElementOutOfRange { element, n: self.n })
        }
    }

    fn check_element(&self, e: usize) -> Result<()> {
        if e < self.n {
            Ok(())
        } else {
            Err(MatroidError::ElementOutOfRange { element: e, n: self.n })
        }
    }

    /// `max |B ∩ a|` over all bases.
    pub fn rank_of(&self, a: ElementSet) -> usize {
        debug_assert!(a.fits(self.n));
        let mut best = 0;
        for &b in &self.bases {
            let c = (b & a.0).count_ones() as usize;
            if c > best {
                best = c;
                if best == self.rank || best == a.len() {
                    break;
                }
            }
        }
        best
    }

    pub fn is_independent(&self, a: ElementSet) -> bool {
        self.rank_of(a) == a.len()
    }

    pub fn closure(&self, a: ElementSet) -> ElementSet {
        let r = self.rank_of(a);
        let mut out = a;
        for e in 0..self.n {
            if !a.contains(e) && self.rank_of(a.insert(e)) == r {
                out = out.insert(e);
            }
        }
        out
    }

    /// Elements in no basis.
    pub fn loops(&self) -> ElementSet {
        let union = self.bases.iter().fold(0, |acc, &b| acc | b);
        ElementSet(full_mask(self.n) & !union)
    }

    /// Elements in every basis.
    pub fn coloops(&self) -> ElementSet {
        ElementSet(self.bases.iter().fold(full_mask(self.n), |acc, &b| acc & b))
    }

    pub fn is_loopless(&self) -> bool {
        self.loops().is_empty()
    }

    pub fn is_coloopless(&self) -> bool {
        self.coloops().is_empty()
    }

    /// True when every `rank`-subset is a basis.
    pub fn is_uniform(&self) -> bool {
        self.bases.len() as u128 == binomial(self.n, self.rank)
    }

    pub fn delete(&self, e: usize) -> Result<Minor> {
        self.check_element(e)?;
        Ok(self.delete_set(ElementSet::singleton(e)))
    }

    pub fn contract(&self, e: usize) -> Result<Minor> {
        self.check_element(e)?;
        Ok(self.contract_set(ElementSet::singleton(e)))
    }

    /// `M \ X`: bases are the largest members of `{B - X}`.
    pub fn delete_set(&self, x: ElementSet) -> Minor {
        let x = x.intersection(self.ground());
        let keep = self.bases.iter().map(|&b| (b & x.0).count_ones()).min().unwrap_or(0);
        self.minor_from(x, |b| (b & x.0).count_ones() == keep)
    }

    /// `M / X`: bases are `B - X` for bases meeting `X` in as many elements as possible.
    pub fn contract_set(&self, x: ElementSet) -> Minor {
        let x = x.intersection(self.ground());
        let keep = self.bases.iter().map(|&b| (b & x.0).count_ones()).max().unwrap_or(0);
        self.minor_from(x, |b| (b & x.0).count_ones() == keep)
    }

    /// `M | A`, the restriction to `A`.
    pub fn restrict(&self, a: ElementSet) -> Minor {
        self.delete_set(self.ground().difference(a))
    }

    fn minor_from(&self, removed: ElementSet, keep: impl Fn(u32) -> bool) -> Minor {
        let n = self.n - removed.len();
        let masks: Vec<u32> = self
            .bases
            .iter()
            .copied()
            .filter(|&b| keep(b))
            .map(|b| compress(b, removed.0))
            .collect();
        let rank = masks[0].count_ones() as usize;
        let labels = self.ground().difference(removed).to_vec();
        Minor {
            matroid: Self::from_masks_unchecked(n, rank, masks),
            labels,
        }
    }

    /// Bases are the complements of the bases of `self`.
    pub fn dual(&self) -> Matroid {
        let full = full_mask(self.n);
        Self::from_masks_unchecked(
            self.n,
            self.n - self.rank,
            self.bases.iter().map(|&b| full & !b).collect(),
        )
    }

    /// Elements of `other` are shifted up by `self.n()`.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid> {
        let n = self.n + other.n;
        check_limit("ground set size", n, MAX_ELEMENTS)?;
        let mut masks = Vec::with_capacity(self.bases.len() * other.bases.len());
        for &a in &self.bases {
            for &b in &other.bases {
                masks.push(a | (((b as u64) << self.n) as u32));
            }
        }
        Ok(Self::from_masks_unchecked(n, self.rank + other.rank, masks))
    }

    /// Renames element `i` to `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Matroid {
        assert_eq!(perm.len(), self.n);
        let masks = self
            .bases
            .iter()
            .map(|&b| ElementSet(b).iter().fold(0u32, |acc, e| acc | 1 << perm[e]))
            .collect();
        Self::from_masks_unchecked(self.n, self.rank, masks)
    }

    /// `counts[e][f]` = number of bases containing both `e` and `f`; the
    /// diagonal holds the number of bases containing `e`.
    pub fn pair_counts(&self) -> Vec<Vec<u32>> {
        let mut counts = vec![vec![0u32; self.n]; self.n];
        for &b in &self.bases {
            let elems: Vec<usize> = ElementSet(b).to_vec();
            for (i, &e) in elems.iter().enumerate() {
                counts[e][e] += 1;
                for &f in &elems[i + 1..] {
                    counts[e][f] += 1;
                    counts[f][e] += 1;
                }
            }
        }
        counts
    }

    /// Parallel classes of the non-loop elements, ordered by smallest member.
    pub fn parallel_classes(&self) -> Vec<ElementSet> {
        let counts = self.pair_counts();
        parallel_classes_from_counts(&counts, self.loops())
    }

    /// Rank of every subset, for `n <= RANK_TABLE_LIMIT`.
    pub fn rank_table(&self) -> Result<RankTable> {
        check_limit("rank table ground set size", self.n, RANK_TABLE_LIMIT)?;
        Ok(RankTable::build(self))
    }

    /// All circuits, by sweeping the rank table.
    pub fn circuits(&self) -> Result<Vec<ElementSet>> {
        let table = self.rank_table()?;
        Ok(table.circuits())
    }

    /// Connected components, ordered by smallest element. Loops and coloops
    /// are singleton components.
    pub fn components(&self) -> Result<Vec<ElementSet>> {
        let circuits = self.circuits()?;
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut c = x;
            while parent[c] != r {
                let next = parent[c];
                parent[c] = r;
                c = next;
            }
            r
        }
        for c in circuits {
            let mut it = c.iter();
            if let Some(first) = it.next() {
                for e in it {
                    let (a, b) = (find(&mut parent, first), find(&mut parent, e));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        let mut comps: Vec<ElementSet> = Vec::new();
        let mut root_index = vec![usize::MAX; self.n];
        for e in 0..self.n {
            let r = find(&mut parent, e);
            if root_index[r] == usize::MAX {
                root_index[r] = comps.len();
                comps.push(ElementSet::EMPTY);
            }
            let i = root_index[r];
            comps[i] = comps[i].insert(e);
        }
        Ok(comps)
    }

    pub fn is_connected(&self) -> Result<bool> {
        Ok(self.n >= 1 && self.components()?.len() == 1)
    }
}

pub(crate) fn parallel_classes_from_counts(counts: &[Vec<u32>], loops: ElementSet) -> Vec<ElementSet> {
    let n = counts.len();
    let mut assigned = loops;
    let mut classes = Vec::new();
    for e in 0..n {
        if assigned.contains(e) {
            continue;
        }
        let mut class = ElementSet::singleton(e);
        for f in e + 1..n {
            if !assigned.contains(f) && counts[e][f] == 0 {
                class = class.insert(f);
            }
        }
        assigned = assigned.union(class);
        classes.push(class);
    }
    classes
}

/// Returns `(B1, B2, e)` witnessing a failure of basis exchange, if any.
pub(crate) fn find_exchange_violation(sorted_bases: &[u32]) -> Option<(u32, u32, usize)> {
    let is_basis = |m: u32| sorted_bases.binary_search(&m).is_ok();
    for &b1 in sorted_bases {
        for &b2 in sorted_bases {
            if b1 == b2 {
                continue;
            }
            let only_second = b2 & !b1;
            for e in ElementSet(b1 & !b2).iter() {
                let without = b1 & !(1 << e);
                if !ElementSet(only_second).iter().any(|f| is_basis(without | 1 << f)) {
                    return Some((b1, b2, e));
                }
            }
        }
    }
    None
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matroid(n={}, rank={}, bases={:?})", self.n, self.rank, self.canonical_bases())
    }
}

/// Ranks of all `2^n` subsets, built by propagating independence downward from
/// the bases and then taking `r(A) = max_e r(A - e)` for dependent `A`.
pub struct RankTable {
    n: usize,
    ranks: Vec<u8>,
}

impl RankTable {
    fn build(m: &Matroid) -> Self {
        let n = m.n;
        let size = 1usize << n;
        let mut independent = vec![false; size];
        for &b in &m.bases {
            independent[b as usize] = true;
        }
        for mask in (1..size).rev() {
            if independent[mask] {
                let mut rest = mask;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    independent[mask ^ bit] = true;
                    rest ^= bit;
                }
            }
        }
        let mut ranks = vec![0u8; size];
        for mask in 1..size {
            ranks[mask] = if independent[mask] {
                mask.count_ones() as u8
            } else {
                let mut best = 0;
                let mut rest = mask;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    best = best.max(ranks[mask ^ bit]);
                    rest ^= bit;
                }
                best
            };
        }
        RankTable { n, ranks }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn rank(&self, a: ElementSet) -> usize {
        self.ranks[a.0 as usize] as usize
    }

    pub fn closure(&self, a: ElementSet) -> ElementSet {
        let r = self.rank(a);
        (0..self.n)
            .filter(|&e| a.contains(e) || self.rank(a.insert(e)) == r)
            .collect()
    }

    pub fn is_flat(&self, a: ElementSet) -> bool {
        let r = self.rank(a);
        (0..self.n).all(|e| a.contains(e) || self.rank(a.insert(e)) > r)
    }

    /// No element of `a` is a coloop of the restriction to `a`.
    pub fn is_cyclic(&self, a: ElementSet) -> bool {
        let r = self.rank(a);
        a.iter().all(|e| self.rank(a.remove(e)) == r)
    }

    pub fn circuits(&self) -> Vec<ElementSet> {
        let mut out = Vec::new();
        for size in 1..=self.n {
            for mask in k_subsets(self.n, size) {
                let a = ElementSet(mask);
                if self.rank(a) + 1 == size && a.iter().all(|e| self.rank(a.remove(e)) + 1 == size) {
                    out.push(a);
                }
            }
        }
        out
    }
}

/// Components via the separator characterisation: the components are the
/// minimal nonempty `A` with `r(A) + r(E - A) = r(E)`. Exponential; a
/// cross-check for [`Matroid::components`].
pub fn components_by_separators(m: &Matroid) -> Result<Vec<ElementSet>> {
    let table = m.rank_table()?;
    let full = m.ground();
    let r = table.rank(full);
    let mut separators: Vec<ElementSet> = (1..=full.0)
        .map(ElementSet)
        .filter(|&a| table.rank(a) + table.rank(full.difference(a)) == r)
        .collect();
    separators.sort_by_key(|a| a.len());
    let mut comps: Vec<ElementSet> = Vec::new();
    for a in separators {
        if !comps.iter().any(|c| !c.intersection(a).is_empty()) {
            comps.push(a);
        }
    }
    comps.sort_by_key(|c| c.iter().next());
    Ok(comps)
}

pub fn is_exchange_valid(m: &Matroid) -> bool {
    find_exchange_violation(&m.bases).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> ElementSet {
        ElementSet::from_elements(v.iter().copied())
    }

    /// Exchange axiom by the textbook quantifiers over explicit sets.
    fn exchange_holds_naive(bases: &[Vec<usize>]) -> bool {
        use std::collections::BTreeSet;
        let family: BTreeSet<BTreeSet<usize>> =
            bases.iter().map(|b| b.iter().copied().collect()).collect();
        family.iter().all(|b1| {
            family.iter().all(|b2| {
                b1.difference(b2).all(|e| {
                    b2.difference(b1).any(|f| {
                        let mut c = b1.clone();
                        c.remove(e);
                        c.insert(*f);
                        family.contains(&c)
                    })
                })
            })
        })
    }

    #[test]
    fn from_bases_accepts_u12_and_loops() {
        let u12 = Matroid::from_bases(2, 1, &[vec![0], vec![1]]).unwrap();
        assert_eq!(u12, Matroid::uniform(1, 2).unwrap());
        let with_loop = Matroid::from_bases(3, 1, &[vec![0], vec![1]]).unwrap();
        assert_eq!(with_loop.loops(), set(&[2]));
    }

    #[test]
    fn from_bases_rejects_broken_exchange() {
        let bases = vec![vec![0, 1], vec![2, 3]];
        assert!(!exchange_holds_naive(&bases));
        match Matroid::from_bases(4, 2, &bases) {
            Err(MatroidError::ExchangeViolation { first, second, element }) => {
                assert!(first.contains(&element));
                assert!(!second.contains(&element));
            }
            other => panic!("expected exchange violation, got {other:?}"),
        }
    }

    #[test]
    fn from_bases_error_paths() {
        assert_eq!(Matroid::from_bases(3, 1, &[]), Err(MatroidError::EmptyBases));
        assert!(matches!(
            Matroid::from_bases(3, 2, &[vec![0]]),
            Err(MatroidError::WrongBasisSize { expected: 2, found: 1, .. })
        ));
        assert!(matches!(
            Matroid::from_bases(3, 1, &[vec![5]]),
            Err(MatroidError::ElementOutOfRange { element: 5, n: 3 })
        ));
        // duplicates collapse
        let m = Matroid::from_bases(2, 1, &[vec![0], vec![0], vec![1]]).unwrap();
        assert_eq!(m.basis_count(), 2);
    }

    #[test]
    fn uniform_constructor() {
        assert_eq!(Matroid::uniform(1, 2).unwrap().canonical_bases(), vec![vec![0], vec![1]]);
        assert_eq!(Matroid::uniform(2, 4).unwrap().basis_count(), 6);
        let u03 = Matroid::uniform(0, 3).unwrap();
        assert_eq!(u03.bases(), &[0]);
        assert_eq!(u03.loops(), set(&[0, 1, 2]));
        assert!(Matroid::uniform(3, 2).is_err());
        let empty = Matroid::uniform(0, 0).unwrap();
        assert_eq!(empty.n(), 0);
        assert_eq!(empty.basis_count(), 1);
    }

    #[test]
    fn minimal_constructor() {
        assert_eq!(Matroid::minimal(4, 7).unwrap().basis_count(), 13);
        assert_eq!(Matroid::minimal(1, 2).unwrap(), Matroid::uniform(1, 2).unwrap());
        // minimal(2,3) has the same family as U_{2,3} without any relabeling
        assert_eq!(Matroid::minimal(2, 3).unwrap(), Matroid::uniform(2, 3).unwrap());
        assert!(Matroid::minimal(0, 3).is_err());
        assert!(Matroid::minimal(3, 3).is_err());
        for n in 2..=9 {
            for k in 1..n {
                let m = Matroid::minimal(k, n).unwrap();
                assert_eq!(m.basis_count(), k * (n - k) + 1);
                assert!(is_exchange_valid(&m));
            }
        }
    }

    #[test]
    fn rank_and_closure_examples() {
        let t47 = Matroid::minimal(4, 7).unwrap();
        assert_eq!(t47.rank_of(set(&[4, 5, 6])), 1);
        assert_eq!(t47.rank_of(ElementSet::EMPTY), 0);
        assert_eq!(t47.closure(set(&[4])), set(&[4, 5, 6]));
        assert_eq!(t47.closure(t47.ground()), t47.ground());
        let u24 = Matroid::uniform(2, 4).unwrap();
        assert_eq!(u24.rank_of(set(&[0, 1, 2])), 2);
        assert_eq!(u24.closure(set(&[0])), set(&[0]));
    }

    #[test]
    fn rank_table_agrees_with_oracle() {
        for m in [
            Matroid::minimal(3, 7).unwrap(),
            Matroid::uniform(2, 5).unwrap(),
            Matroid::rank2_from_partition(&[3, 2, 1]).unwrap(),
            Matroid::from_bases(4, 1, &[vec![0], vec![1]]).unwrap(),
        ] {
            let table = m.rank_table().unwrap();
            for mask in 0..(1u32 << m.n()) {
                assert_eq!(table.rank(ElementSet(mask)), m.rank_of(ElementSet(mask)));
            }
        }
    }

    #[test]
    fn minors_examples() {
        let t47 = Matroid::minimal(4, 7).unwrap();
        let c = t47.contract(4).unwrap();
        assert_eq!(c.labels, vec![0, 1, 2, 3, 5, 6]);
        assert_eq!(c.matroid.loops(), set(&[4, 5])); // old 5, 6
        let expected = Matroid::uniform(3, 4)
            .unwrap()
            .direct_sum(&Matroid::uniform(0, 2).unwrap())
            .unwrap();
        assert_eq!(c.matroid, expected);

        let d = Matroid::uniform(1, 2).unwrap().delete(0).unwrap();
        assert_eq!(d.matroid, Matroid::uniform(1, 1).unwrap());
        assert_eq!(d.matroid.coloops(), set(&[0]));

        let u24 = Matroid::uniform(2, 4).unwrap();
        assert_eq!(u24.delete(3).unwrap().matroid, Matroid::uniform(2, 3).unwrap());
        assert!(u24.delete(4).is_err());
        assert!(u24.contract(9).is_err());
    }

    #[test]
    fn contracting_a_loop_equals_deleting_it() {
        let m = Matroid::from_bases(3, 1, &[vec![0], vec![1]]).unwrap();
        assert_eq!(m.contract(2).unwrap(), m.delete(2).unwrap());
    }

    #[test]
    fn dual_and_sum_examples() {
        let u24 = Matroid::uniform(2, 4).unwrap();
        assert_eq!(u24.dual(), u24);
        let m = Matroid::minimal(3, 6).unwrap();
        assert_eq!(m.dual().dual(), m);
        let s = Matroid::uniform(0, 2)
            .unwrap()
            .direct_sum(&Matroid::uniform(3, 4).unwrap())
            .unwrap();
        assert_eq!((s.n(), s.rank(), s.basis_count()), (6, 3, 4));
        assert_eq!(m.direct_sum(&Matroid::uniform(0, 0).unwrap()).unwrap(), m);
        let m23 = Matroid::minimal(2, 3).unwrap();
        assert_eq!(m23.direct_sum(&m23).unwrap().basis_count(), 9);
    }

    #[test]
    fn loops_coloops_components() {
        let t47 = Matroid::minimal(4, 7).unwrap();
        assert!(t47.is_connected().unwrap());
        assert!(t47.is_loopless() && t47.is_coloopless());
        let s = Matroid::uniform(0, 2)
            .unwrap()
            .direct_sum(&Matroid::uniform(3, 4).unwrap())
            .unwrap();
        assert_eq!(s.components().unwrap(), vec![set(&[0]), set(&[1]), set(&[2, 3, 4, 5])]);
        assert_eq!(s.components().unwrap(), components_by_separators(&s).unwrap());
        assert_eq!(Matroid::uniform(1, 1).unwrap().coloops(), set(&[0]));
        assert!(!Matroid::uniform(0, 0).unwrap().is_connected().unwrap());
        assert!(Matroid::uniform(0, 0).unwrap().components().unwrap().is_empty());
    }

    #[test]
    fn rank2_partition_examples() {
        // number of cross-class pairs: (n^2 - sum a_i^2) / 2
        let cross = |sizes: &[usize]| {
            let n: usize = sizes.iter().sum();
            (n * n - sizes.iter().map(|a| a * a).sum::<usize>()) / 2
        };
        let m = Matroid::rank2_from_partition(&[2, 2]).unwrap();
        assert_eq!(m.basis_count(), 4);
        assert_eq!(cross(&[2, 2]), 4);
        let m = Matroid::rank2_from_partition(&[3, 1, 1]).unwrap();
        assert_eq!(m.basis_count(), 7);
        assert_eq!(cross(&[3, 1, 1]), 7);
        let m = Matroid::rank2_from_partition(&[1, 1]).unwrap();
        assert_eq!(m, Matroid::uniform(2, 2).unwrap());
        assert_eq!(m.coloops(), set(&[0, 1]));
        assert!(Matroid::rank2_from_partition(&[4]).is_err());
        assert!(Matroid::rank2_from_partition(&[2, 0]).is_err());
        let classes = Matroid::rank2_from_partition(&[3, 1, 2]).unwrap().parallel_classes();
        assert_eq!(classes, vec![set(&[0, 1, 2]), set(&[3]), set(&[4, 5])]);
    }

    #[test]
    fn circuits_of_u24_are_triples() {
        let circuits = Matroid::uniform(2, 4).unwrap().circuits().unwrap();
        assert_eq!(circuits.len(), 4);
        assert!(circuits.iter().all(|c| c.len() == 3));
    }
}
