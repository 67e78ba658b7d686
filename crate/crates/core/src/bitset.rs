//! Fixed-width element subsets and the bit tricks the rest of the crate leans on.

use std::fmt;

/// Widest ground set a bitmask can address.
pub const MAX_ELEMENTS: usize = 32;

/// A subset of a matroid ground set `{0, .., n-1}`, stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet(pub u32);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    /// The full ground set on `n` elements.
    pub fn full(n: usize) -> Self {
        ElementSet(full_mask(n))
    }

    pub fn singleton(e: usize) -> Self {
        ElementSet(1 << e)
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Self {
        ElementSet(elements.into_iter().fold(0, |m, e| m | (1 << e)))
    }

    #[inline]
    pub fn mask(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, e: usize) -> bool {
        e < MAX_ELEMENTS && self.0 >> e & 1 == 1
    }

    pub fn insert(self, e: usize) -> Self {
        ElementSet(self.0 | 1 << e)
    }

    pub fn remove(self, e: usize) -> Self {
        ElementSet(self.0 & !(1 << e))
    }

    pub fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// True when every bit lies below `n`.
    pub fn fits(self, n: usize) -> bool {
        self.0 & !full_mask(n) == 0
    }

    pub fn iter(self) -> Bits {
        Bits(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        ElementSet::from_elements(iter)
    }
}

/// Iterator over the set bits of a mask, lowest first.
#[derive(Clone)]
pub struct Bits(u32);

impl Iterator for Bits {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

#[inline]
pub fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Removes the bits in `removed` from `mask` and packs the survivors downwards,
/// preserving their relative order (a software `pext` against `!removed`).
pub fn compress(mask: u32, removed: u32) -> u32 {
    let mut out = 0u32;
    let mut j = 0;
    let mut keep = !removed;
    while keep != 0 {
        let i = keep.trailing_zeros();
        if i >= 32 {
            break;
        }
        if mask >> i & 1 == 1 {
            out |= 1 << j;
        }
        j += 1;
        keep &= keep - 1;
    }
    out
}

/// Removes a single bit and shifts everything above it down by one.
#[inline]
pub fn drop_bit(mask: u32, e: usize) -> u32 {
    let low = mask & ((1u32 << e) - 1);
    let high = if e + 1 >= 32 { 0 } else { (mask >> (e + 1)) << e };
    low | high
}

/// All `k`-element masks below `1 << n`, in increasing numeric order (Gosper's hack).
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = u32> {
    let limit: u64 = 1u64 << n;
    let mut cur: Option<u64> = if k > n {
        None
    } else {
        Some((1u64 << k) - 1)
    };
    std::iter::from_fn(move || {
        let c = cur?;
        if c >= limit {
            cur = None;
            return None;
        }
        cur = if c == 0 {
            None
        } else {
            let low = c & c.wrapping_neg();
            let ripple = c + low;
            Some((((ripple ^ c) >> 2) / low) | ripple)
        };
        Some(c as u32)
    })
}

/// Binomial coefficient in `u128`; callers stay far below overflow.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}
