//! Matroid isomorphism by invariant-pruned permutation search.
//!
//! Elements are coloured by cheap invariants (how many bases contain them, the
//! size of their parallel class, loop/coloop status) and the search only maps
//! an element to a same-coloured one whose pairwise co-occurrence counts agree
//! with everything mapped so far. A complete mapping is accepted only if it
//! carries the basis family onto the other one exactly.

use crate::matroid::Matroid;
use crate::tutte;

/// Above this size the Tutte polynomial joins the certificate before searching.
const POLYNOMIAL_CERTIFICATE_FROM: usize = 9;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Colour {
    degree: u32,
    class_size: usize,
    is_loop: bool,
}

struct Profile {
    colours: Vec<Colour>,
    counts: Vec<Vec<u32>>,
}

impl Profile {
    fn of(m: &Matroid) -> Self {
        let counts = m.pair_counts();
        let loops = m.loops();
        let mut class_size = vec![1usize; m.n()];
        for class in crate::matroid::parallel_classes_from_counts(&counts, loops) {
            for e in class.iter() {
                class_size[e] = class.len();
            }
        }
        for e in loops.iter() {
            class_size[e] = loops.len();
        }
        let colours = (0..m.n())
            .map(|e| Colour {
                degree: counts[e][e],
                class_size: class_size[e],
                is_loop: loops.contains(e),
            })
            .collect();
        Profile { colours, counts }
    }

    fn sorted_colours(&self) -> Vec<Colour> {
        let mut c = self.colours.clone();
        c.sort();
        c
    }
}

/// Cheap necessary conditions for isomorphism.
pub fn certificates_match(a: &Matroid, b: &Matroid) -> bool {
    if a.n() != b.n() || a.rank() != b.rank() || a.basis_count() != b.basis_count() {
        return false;
    }
    if Profile::of(a).sorted_colours() != Profile::of(b).sorted_colours() {
        return false;
    }
    if a.n() >= POLYNOMIAL_CERTIFICATE_FROM {
        return tutte::tutte(a) == tutte::tutte(b);
    }
    true
}

/// A permutation `p` with `a.relabel(&p) == *b`, if one exists.
pub fn find_isomorphism(a: &Matroid, b: &Matroid) -> Option<Vec<usize>> {
    if !certificates_match(a, b) {
        return None;
    }
    let pa = Profile::of(a);
    let pb = Profile::of(b);
    let n = a.n();
    // rarest colours first to keep the branching low
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&e| {
        let c = &pa.colours[e];
        (pa.colours.iter().filter(|d| *d == c).count(), e)
    });
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if search(0, &order, &pa, &pb, &mut image, &mut used, a, b) {
        Some(image)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn search(
    depth: usize,
    order: &[usize],
    pa: &Profile,
    pb: &Profile,
    image: &mut Vec<usize>,
    used: &mut Vec<bool>,
    a: &Matroid,
    b: &Matroid,
) -> bool {
    if depth == order.len() {
        return a.relabel(image) == *b;
    }
    let e = order[depth];
    for target in 0..b.n() {
        if used[target] || pb.colours[target] != pa.colours[e] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&f| pa.counts[e][f] == pb.counts[target][image[f]]);
        if !consistent {
            continue;
        }
        image[e] = target;
        used[target] = true;
        if search(depth + 1, order, pa, pb, image, used, a, b) {
            return true;
        }
        used[target] = false;
        image[e] = usize::MAX;
    }
    false
}

pub fn is_isomorphic(a: &Matroid, b: &Matroid) -> bool {
    find_isomorphism(a, b).is_some()
}
