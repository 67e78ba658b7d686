//! Flats, cyclic flats and split/paving classification.

use crate::bitset::{full_mask, ElementSet};
use crate::matroid::{check_limit, Matroid, MatroidError, RankTable};

/// Largest ground set whose flats are found by closing every subset.
pub const FLAT_LIMIT: usize = 16;

/// Canonical order for lists of subsets: by size, then by ascending element list.
fn canonical_sort(sets: &mut [ElementSet]) {
    sets.sort_by_key(|s| (s.len(), s.to_vec()));
}

fn table_for(m: &Matroid) -> Result<RankTable, MatroidError> {
    check_limit("flat enumeration ground set size", m.n(), FLAT_LIMIT)?;
    m.rank_table()
}

/// Every subset equal to its own closure.
pub fn flats(m: &Matroid) -> Result<Vec<ElementSet>, MatroidError> {
    let table = table_for(m)?;
    let mut out: Vec<ElementSet> = (0..=full_mask(m.n()))
        .map(ElementSet)
        .filter(|&a| table.is_flat(a))
        .collect();
    canonical_sort(&mut out);
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicFlat {
    pub set: ElementSet,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicFlatReport {
    /// All cyclic flats, canonically sorted.
    pub flats: Vec<CyclicFlat>,
    /// Cyclic flats other than the empty set and the ground set.
    pub proper_flats: Vec<CyclicFlat>,
    /// No proper cyclic flat contains another.
    pub is_antichain: bool,
    /// A nested pair of proper cyclic flats, when the antichain test fails.
    pub chain_witness: Option<(ElementSet, ElementSet)>,
    pub is_connected_split: bool,
    pub is_split: bool,
    pub is_paving: bool,
    pub is_copaving: bool,
}

fn cyclic_flats_with(m: &Matroid, table: &RankTable) -> Vec<CyclicFlat> {
    let mut sets: Vec<ElementSet> = (0..=full_mask(m.n()))
        .map(ElementSet)
        .filter(|&a| table.is_flat(a) && table.is_cyclic(a))
        .collect();
    canonical_sort(&mut sets);
    sets.into_iter()
        .map(|set| CyclicFlat {
            set,
            rank: table.rank(set),
        })
        .collect()
}

fn proper(m: &Matroid, flats: &[CyclicFlat]) -> Vec<CyclicFlat> {
    let ground = m.ground();
    flats
        .iter()
        .filter(|f| !f.set.is_empty() && f.set != ground)
        .cloned()
        .collect()
}

fn chain_in(proper: &[CyclicFlat]) -> Option<(ElementSet, ElementSet)> {
    for a in proper {
        for b in proper {
            if a.set != b.set && a.set.is_subset(b.set) {
                return Some((a.set, b.set));
            }
        }
    }
    None
}

/// All cyclic flats plus every derived classification.
pub fn cyclic_flats(m: &Matroid) -> Result<CyclicFlatReport, MatroidError> {
    let table = table_for(m)?;
    let flats = cyclic_flats_with(m, &table);
    let proper_flats = proper(m, &flats);
    let chain_witness = chain_in(&proper_flats);
    Ok(CyclicFlatReport {
        is_antichain: chain_witness.is_none(),
        chain_witness,
        is_connected_split: is_connected_split(m)?,
        is_split: is_split(m)?,
        is_paving: is_paving(m)?,
        is_copaving: is_copaving(m)?,
        flats,
        proper_flats,
    })
}

/// Proper cyclic flats only.
pub fn proper_cyclic_flats(m: &Matroid) -> Result<Vec<CyclicFlat>, MatroidError> {
    let table = table_for(m)?;
    Ok(proper(m, &cyclic_flats_with(m, &table)))
}

/// Connected, and the proper cyclic flats form an antichain.
pub fn is_connected_split(m: &Matroid) -> Result<bool, MatroidError> {
    check_limit("flat enumeration ground set size", m.n(), FLAT_LIMIT)?;
    if !m.is_connected()? {
        return Ok(false);
    }
    Ok(chain_in(&proper_cyclic_flats(m)?).is_none())
}

/// At most one connected component is non-uniform, and that one is
/// connected split. Loops and coloops are uniform singleton components.
pub fn is_split(m: &Matroid) -> Result<bool, MatroidError> {
    check_limit("flat enumeration ground set size", m.n(), FLAT_LIMIT)?;
    let mut non_uniform = 0;
    for component in m.components()? {
        let part = m.restrict(component).matroid;
        if part.is_uniform() {
            continue;
        }
        non_uniform += 1;
        if non_uniform > 1 || !is_connected_split(&part)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// No dependent set smaller than the rank.
pub fn is_paving(m: &Matroid) -> Result<bool, MatroidError> {
    check_limit("flat enumeration ground set size", m.n(), FLAT_LIMIT)?;
    let r = m.rank();
    if r == 0 {
        return Ok(true);
    }
    // enough to test the (r-1)-subsets: a smaller dependent set extends to one
    Ok(crate::bitset::k_subsets(m.n(), r - 1).all(|s| m.is_independent(ElementSet(s))))
}

pub fn is_copaving(m: &Matroid) -> Result<bool, MatroidError> {
    is_paving(&m.dual())
}
