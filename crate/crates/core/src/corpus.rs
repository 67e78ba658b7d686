//! Deterministic corpora of small matroids and multigraphs used by the
//! self-test and the acceptance suite.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{graphic, Multigraph};
use crate::matroid::Matroid;
use crate::mw::rank2_class_patterns;

/// Seed for every randomized corpus.
pub const CORPUS_SEED: u64 = 0x005e_ed0f_5711_u64;

#[derive(Clone, Debug)]
pub struct Entry {
    pub name: String,
    pub matroid: Matroid,
}

impl Entry {
    fn new(name: impl Into<String>, matroid: Matroid) -> Self {
        Entry {
            name: name.into(),
            matroid,
        }
    }
}

/// Every `U_{k,n}` with `0 <= k <= n`, `1 <= n <= n_max`.
pub fn uniform_family(n_max: usize) -> Vec<Entry> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for k in 0..=n {
            out.push(Entry::new(format!("U({k},{n})"), Matroid::uniform(k, n).unwrap()));
        }
    }
    out
}

/// Every `T_{k,n}` with `1 <= k < n <= n_max`.
pub fn minimal_family(n_max: usize) -> Vec<Entry> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        for k in 1..n {
            out.push(Entry::new(format!("T({k},{n})"), Matroid::minimal(k, n).unwrap()));
        }
    }
    out
}

/// One representative per loopless, coloopless rank-2 isomorphism class, `n <= n_max`.
pub fn rank2_family(n_max: usize) -> Vec<Entry> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        for p in rank2_class_patterns(n) {
            out.push(Entry::new(
                format!("R2{p:?}"),
                Matroid::rank2_from_partition(&p).unwrap(),
            ));
        }
    }
    out
}

pub fn wheel(rim: usize) -> Multigraph {
    let mut edges: Vec<(usize, usize)> = (0..rim).map(|i| (i, (i + 1) % rim)).collect();
    edges.extend((0..rim).map(|i| (i, rim)));
    Multigraph::new(rim + 1, edges).unwrap()
}

pub fn complete_bipartite(a: usize, b: usize) -> Multigraph {
    let mut edges = Vec::new();
    for i in 0..a {
        for j in 0..b {
            edges.push((i, a + j));
        }
    }
    Multigraph::new(a + b, edges).unwrap()
}

pub fn prism() -> Multigraph {
    Multigraph::new(
        6,
        vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
    )
    .unwrap()
}

/// Cycle of length `len` with edge `0` repeated `copies` times in total.
pub fn fat_cycle(len: usize, copies: usize) -> Multigraph {
    let mut edges: Vec<(usize, usize)> = (0..len).map(|i| (i, (i + 1) % len)).collect();
    for _ in 1..copies {
        edges.push((0, 1 % len));
    }
    Multigraph::new(len, edges).unwrap()
}

/// Named connected, bridgeless, loopless graphs.
pub fn named_graphs() -> Vec<(String, Multigraph)> {
    let mut out: Vec<(String, Multigraph)> = Vec::new();
    for len in 2..=8 {
        out.push((format!("C{len}"), Multigraph::cycle(len)));
    }
    out.push(("K4".into(), Multigraph::complete(4)));
    out.push(("K5".into(), Multigraph::complete(5)));
    out.push(("W4".into(), wheel(4)));
    out.push(("W5".into(), wheel(5)));
    out.push(("K2,3".into(), complete_bipartite(2, 3)));
    out.push(("K3,3".into(), complete_bipartite(3, 3)));
    out.push(("prism".into(), prism()));
    for (len, copies) in [(3, 2), (3, 3), (4, 2), (4, 3), (5, 3), (3, 5), (6, 2)] {
        out.push((format!("C{len}x{copies}"), fat_cycle(len, copies)));
    }
    out.push((
        "theta(2,2,3)".into(),
        Multigraph::new(5, vec![(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)]).unwrap(),
    ));
    out.push((
        "doubled-4-cycle".into(),
        Multigraph::new(4, vec![(0, 1), (0, 1), (1, 2), (1, 2), (2, 3), (3, 0)]).unwrap(),
    ));
    out
}

/// Random multigraphs on 2..=6 vertices with 1..=max_edges edges; self-loops
/// appear with low probability.
pub fn random_multigraphs(count: usize, max_edges: usize, seed: u64) -> Vec<Multigraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let v = rng.gen_range(2..=6);
            let m = rng.gen_range(1..=max_edges);
            let edges = (0..m)
                .map(|_| {
                    let u = rng.gen_range(0..v);
                    let w = if rng.gen_bool(0.05) { u } else { rng.gen_range(0..v) };
                    (u, w)
                })
                .collect();
            Multigraph::new(v, edges).unwrap()
        })
        .collect()
}

/// Connected, bridgeless, loopless multigraphs with at most `max_edges` edges:
/// the named ones that fit, then random ones until `count` are collected.
pub fn bridgeless_multigraphs(count: usize, max_edges: usize, seed: u64) -> Vec<(String, Multigraph)> {
    let mut out: Vec<(String, Multigraph)> = named_graphs()
        .into_iter()
        .filter(|(_, g)| g.edge_count() <= max_edges)
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut attempt = 0;
    while out.len() < count {
        attempt += 1;
        let v = rng.gen_range(2..=5);
        let m = rng.gen_range(v..=max_edges);
        let edges: Vec<(usize, usize)> = (0..m)
            .map(|_| {
                let u = rng.gen_range(0..v);
                let mut w = rng.gen_range(0..v - 1);
                if w >= u {
                    w += 1;
                }
                (u, w)
            })
            .collect();
        let g = Multigraph::new(v, edges).unwrap();
        if g.is_connected() && g.is_bridgeless() {
            out.push((format!("random-{attempt}"), g));
        }
    }
    out
}

pub fn random_graphic(count: usize, max_edges: usize, seed: u64) -> Vec<Entry> {
    random_multigraphs(count, max_edges, seed)
        .iter()
        .enumerate()
        .map(|(i, g)| Entry::new(format!("G{i}"), graphic(g).unwrap()))
        .collect()
}

/// The identity corpus: minimal and uniform families up to 10 elements,
/// 50 random graphic matroids on at most 10 edges, rank-2 classes up to 10.
pub fn identity_corpus() -> Vec<Entry> {
    let mut out = minimal_family(10);
    out.extend(uniform_family(10));
    out.extend(random_graphic(50, 10, CORPUS_SEED));
    out.extend(rank2_family(10));
    out
}

/// The identity corpus plus larger families and named graphs, all with at most 14 elements.
pub fn full_corpus() -> Vec<Entry> {
    let mut out = identity_corpus();
    for n in 11..=14 {
        out.extend(minimal_family(n).into_iter().filter(|e| e.matroid.n() == n));
        out.extend(uniform_family(n).into_iter().filter(|e| e.matroid.n() == n));
    }
    out.extend(rank2_family(12).into_iter().filter(|e| e.matroid.n() > 10));
    out.extend(random_graphic(40, 14, CORPUS_SEED ^ 3));
    for (name, g) in named_graphs() {
        if g.edge_count() <= 14 {
            out.push(Entry::new(format!("M({name})"), graphic(&g).unwrap()));
        }
    }
    let k4 = graphic(&Multigraph::complete(4)).unwrap();
    let t47 = Matroid::minimal(4, 7).unwrap();
    out.push(Entry::new("M(K4)+M(K4)", k4.direct_sum(&k4).unwrap()));
    out.push(Entry::new("T(4,7)+U(2,5)", t47.direct_sum(&Matroid::uniform(2, 5).unwrap()).unwrap()));
    out.push(Entry::new("T(4,7)*+M(K4)", t47.dual().direct_sum(&k4).unwrap()));
    out.push(Entry::new("T(4,7)+T(3,7)", t47.direct_sum(&Matroid::minimal(3, 7).unwrap()).unwrap()));
    out
}
