//! Multigraphs, their cycle matroids, and brute-force orientation counters.

use thiserror::Error;

use crate::bitset::k_subsets;
use crate::matroid::Matroid;

/// Default edge limit for building a cycle matroid by subset enumeration.
pub const GRAPHIC_EDGE_LIMIT: usize = 20;
/// Edge limit for the `2^m` orientation sweeps.
pub const ORIENTATION_EDGE_LIMIT: usize = 15;
/// Vertex limit imposed by the `u64` reachability rows.
pub const VERTEX_LIMIT: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge {edge} has endpoint {vertex} but the graph has {vertex_count} vertices")]
    EndpointOutOfRange {
        edge: usize,
        vertex: usize,
        vertex_count: usize,
    },
    #[error("{what} limit exceeded: {got} > {limit}")]
    OverLimit {
        what: &'static str,
        limit: usize,
        got: usize,
    },
}

/// Undirected multigraph; parallel edges and self-loops allowed. Edge `i` is
/// the `i`-th pair in `edges`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        if vertex_count > VERTEX_LIMIT {
            return Err(GraphError::OverLimit {
                what: "vertex count",
                limit: VERTEX_LIMIT,
                got: vertex_count,
            });
        }
        for (i, &(u, v)) in edges.iter().enumerate() {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(GraphError::EndpointOutOfRange {
                        edge: i,
                        vertex: w,
                        vertex_count,
                    });
                }
            }
        }
        Ok(Multigraph {
            vertex_count,
            edges,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn cycle(len: usize) -> Self {
        Self::new(len, (0..len).map(|i| (i, (i + 1) % len)).collect()).expect("valid cycle")
    }

    pub fn complete(v: usize) -> Self {
        let mut edges = Vec::new();
        for a in 0..v {
            for b in a + 1..v {
                edges.push((a, b));
            }
        }
        Self::new(v, edges).expect("valid complete graph")
    }

    /// Number of connected components, counting isolated vertices.
    pub fn component_count(&self) -> usize {
        let mut uf = UnionFind::new(self.vertex_count);
        for &(u, v) in &self.edges {
            uf.union(u, v);
        }
        (0..self.vertex_count).filter(|&v| uf.find(v) == v).count()
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count > 0 && self.component_count() == 1
    }

    /// True when no edge's removal increases the component count.
    pub fn is_bridgeless(&self) -> bool {
        let base = self.component_count();
        (0..self.edges.len()).all(|skip| {
            let mut uf = UnionFind::new(self.vertex_count);
            for (i, &(u, v)) in self.edges.iter().enumerate() {
                if i != skip {
                    uf.union(u, v);
                }
            }
            (0..self.vertex_count).filter(|&v| uf.find(v) == v).count() == base
        })
    }

    pub fn has_self_loop(&self) -> bool {
        self.edges.iter().any(|&(u, v)| u == v)
    }

    fn edges_form_forest(&self, mask: u32) -> bool {
        let mut uf = UnionFind::new(self.vertex_count);
        let mut m = mask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            let (u, v) = self.edges[i];
            if !uf.union(u, v) {
                return false;
            }
        }
        true
    }

    fn check_edges(&self, limit: usize) -> Result<(), GraphError> {
        if self.edges.len() > limit {
            Err(GraphError::OverLimit {
                what: "edge count",
                limit,
                got: self.edges.len(),
            })
        } else {
            Ok(())
        }
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

/// Cycle matroid of `g`: bases are the maximal spanning forests. Self-loops
/// become matroid loops.
pub fn graphic(g: &Multigraph) -> Result<Matroid, GraphError> {
    graphic_with_limit(g, GRAPHIC_EDGE_LIMIT)
}

pub fn graphic_with_limit(g: &Multigraph, edge_limit: usize) -> Result<Matroid, GraphError> {
    g.check_edges(edge_limit.min(crate::bitset::MAX_ELEMENTS))?;
    let m = g.edges.len();
    let rank = g.vertex_count - g.component_count();
    let bases: Vec<u32> = k_subsets(m, rank).filter(|&s| g.edges_form_forest(s)).collect();
    Ok(Matroid::from_masks_unchecked(m, rank, bases))
}

/// Spanning trees by brute force; zero for a disconnected graph.
pub fn count_spanning_trees(g: &Multigraph) -> Result<u64, GraphError> {
    g.check_edges(GRAPHIC_EDGE_LIMIT)?;
    if !g.is_connected() {
        return Ok(0);
    }
    let need = g.vertex_count - 1;
    Ok(k_subsets(g.edges.len(), need)
        .filter(|&s| g.edges_form_forest(s))
        .count() as u64)
}

/// Calls `f` with the adjacency rows (bit `v` of `rows[u]` set for an arc
/// `u -> v`) of every orientation. Bit `i` of the orientation index reverses edge `i`.
fn for_each_orientation(g: &Multigraph, mut f: impl FnMut(&[u64])) {
    let m = g.edges.len();
    let mut rows = vec![0u64; g.vertex_count];
    for orientation in 0u32..(1u32 << m) {
        rows.iter_mut().for_each(|r| *r = 0);
        for (i, &(u, v)) in g.edges.iter().enumerate() {
            let (a, b) = if orientation >> i & 1 == 0 { (u, v) } else { (v, u) };
            rows[a] |= 1 << b;
        }
        f(&rows);
    }
}

/// `reach[u]` = vertices reachable from `u` by a nonempty directed walk.
fn reachability(rows: &[u64]) -> Vec<u64> {
    let n = rows.len();
    let mut reach = rows.to_vec();
    for k in 0..n {
        for u in 0..n {
            if reach[u] >> k & 1 == 1 {
                reach[u] |= reach[k];
            }
        }
    }
    reach
}

/// Orientations with no directed cycle.
pub fn count_acyclic_orientations(g: &Multigraph) -> Result<u64, GraphError> {
    g.check_edges(ORIENTATION_EDGE_LIMIT)?;
    if g.has_self_loop() {
        return Ok(0);
    }
    let mut count = 0;
    for_each_orientation(g, |rows| {
        let reach = reachability(rows);
        if (0..rows.len()).all(|u| reach[u] >> u & 1 == 0) {
            count += 1;
        }
    });
    Ok(count)
}

/// Orientations in which every edge lies on a directed cycle.
pub fn count_totally_cyclic_orientations(g: &Multigraph) -> Result<u64, GraphError> {
    g.check_edges(ORIENTATION_EDGE_LIMIT)?;
    let mut count = 0;
    let edges = g.edges.clone();
    for_each_orientation(g, |rows| {
        let reach = reachability(rows);
        let ok = edges.iter().all(|&(u, v)| {
            // either direction: the head must reach back to the tail
            u == v || (rows[u] >> v & 1 == 1 && reach[v] >> u & 1 == 1)
                || (rows[v] >> u & 1 == 1 && reach[u] >> v & 1 == 1)
        });
        if ok {
            count += 1;
        }
    });
    Ok(count)
}
