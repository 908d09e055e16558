//! Quantized graphs: connected 4-valent multigraphs whose vertices carry an
//! ordered set of four half-edge slots, together with their GF(2) edge
//! spaces.

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::f2::{BitVec, Subspace};

/// One end of an edge: a vertex and one of its four slots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HalfEdge {
    pub vertex: usize,
    pub slot: usize,
}

impl HalfEdge {
    pub fn new(vertex: usize, slot: usize) -> Self {
        HalfEdge { vertex, slot }
    }
}

/// A subset of the edges, indexed in the graph's edge order.
pub type EdgeVector = BitVec;

/// A validated quantized graph. Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantizedGraph {
    vertex_count: usize,
    edges: Vec<[HalfEdge; 2]>,
    /// `slots[v][s]` is the edge attached at slot `s` of vertex `v`.
    slots: Vec<[usize; 4]>,
}

#[derive(Serialize, Deserialize)]
struct GraphFile {
    vertices: usize,
    edges: Vec<[[usize; 2]; 2]>,
}

impl QuantizedGraph {
    /// Builds and validates a graph. Edge order fixes coordinate order.
    pub fn new(vertex_count: usize, edges: Vec<[HalfEdge; 2]>) -> Result<Self> {
        const UNSET: usize = usize::MAX;
        let mut slots = vec![[UNSET; 4]; vertex_count];
        for (e, ends) in edges.iter().enumerate() {
            for h in ends {
                if h.vertex >= vertex_count || h.slot >= 4 || slots[h.vertex][h.slot] != UNSET {
                    return Err(Error::SlotReused { vertex: h.vertex, slot: h.slot });
                }
                slots[h.vertex][h.slot] = e;
            }
        }
        for (v, s) in slots.iter().enumerate() {
            if let Some(slot) = s.iter().position(|&e| e == UNSET) {
                return Err(Error::NotFourValent { vertex: v, slot });
            }
        }
        let g = QuantizedGraph { vertex_count, edges, slots };
        if !g.is_connected() {
            return Err(Error::NotConnected);
        }
        Ok(g)
    }

    /// Convenience constructor from `((v, s), (v', s'))` tuples.
    pub fn from_pairs(vertex_count: usize, pairs: &[((usize, usize), (usize, usize))]) -> Result<Self> {
        Self::new(
            vertex_count,
            pairs.iter().map(|&((a, s), (b, t))| [HalfEdge::new(a, s), HalfEdge::new(b, t)]).collect(),
        )
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let f: GraphFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_pairs(
            f.vertices,
            &f.edges.iter().map(|[a, b]| ((a[0], a[1]), (b[0], b[1]))).collect::<Vec<_>>(),
        )
    }

    pub fn to_json(&self) -> String {
        let f = GraphFile {
            vertices: self.vertex_count,
            edges: self
                .edges
                .iter()
                .map(|[a, b]| [[a.vertex, a.slot], [b.vertex, b.slot]])
                .collect(),
        };
        serde_json::to_string(&f).expect("graph serializes")
    }

    fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return false;
        }
        let mut seen = vec![false; self.vertex_count];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &e in &self.slots[v] {
                for h in &self.edges[e] {
                    if !seen[h.vertex] {
                        seen[h.vertex] = true;
                        queue.push_back(h.vertex);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Number of vertices, i.e. physical qubits.
    pub fn n(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[[HalfEdge; 2]] {
        &self.edges
    }

    pub fn edge_at(&self, vertex: usize, slot: usize) -> usize {
        self.slots[vertex][slot]
    }

    pub fn vertex_slots(&self, vertex: usize) -> [usize; 4] {
        self.slots[vertex]
    }

    /// The half-edge at the other end of the edge attached at `h`.
    pub fn opposite(&self, h: HalfEdge) -> HalfEdge {
        let [a, b] = self.edges[self.slots[h.vertex][h.slot]];
        if a == h {
            b
        } else {
            a
        }
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.edges[e][0].vertex == self.edges[e][1].vertex
    }

    /// The full edge set 1_E.
    pub fn full_edge_set(&self) -> EdgeVector {
        BitVec::ones(self.edges.len())
    }

    pub fn empty_edge_set(&self) -> EdgeVector {
        BitVec::zeros(self.edges.len())
    }

    pub fn edge_set(&self, edges: impl IntoIterator<Item = usize>) -> EdgeVector {
        BitVec::from_indices(self.edges.len(), edges)
    }

    /// Number of slots of `v` whose edge lies in `l`; a loop counts twice.
    pub fn degree_in(&self, l: &EdgeVector, v: usize) -> usize {
        self.slots[v].iter().filter(|&&e| l.get(e)).count()
    }

    /// Bitmask over the four slots of `v` whose edge lies in `l`.
    pub fn charged_slots(&self, l: &EdgeVector, v: usize) -> u8 {
        self.slots[v].iter().enumerate().fold(0u8, |m, (s, &e)| if l.get(e) { m | 1 << s } else { m })
    }

    pub fn is_cycle(&self, l: &EdgeVector) -> bool {
        l.len() == self.edges.len() && (0..self.vertex_count).all(|v| self.degree_in(l, v) % 2 == 0)
    }

    pub fn is_even(&self, c: &EdgeVector) -> bool {
        c.len() == self.edges.len() && c.weight() % 2 == 0
    }

    /// Edge sets with even degree at every vertex, from a spanning tree's
    /// fundamental cycles. Dimension |E| - |V| + 1.
    pub fn cycle_space(&self) -> Subspace {
        let m = self.edges.len();
        let mut parent_edge = vec![usize::MAX; self.vertex_count];
        let mut parent = vec![usize::MAX; self.vertex_count];
        let mut depth = vec![0usize; self.vertex_count];
        let mut seen = vec![false; self.vertex_count];
        let mut tree = vec![false; m];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &e in &self.slots[v] {
                for h in &self.edges[e] {
                    if !seen[h.vertex] {
                        seen[h.vertex] = true;
                        parent[h.vertex] = v;
                        parent_edge[h.vertex] = e;
                        depth[h.vertex] = depth[v] + 1;
                        tree[e] = true;
                        queue.push_back(h.vertex);
                    }
                }
            }
        }
        let mut basis = Vec::new();
        for (e, [a, b]) in self.edges.iter().enumerate() {
            if tree[e] {
                continue;
            }
            let mut cyc = BitVec::zeros(m);
            cyc.set(e, true);
            let (mut u, mut w) = (a.vertex, b.vertex);
            while u != w {
                if depth[u] < depth[w] {
                    std::mem::swap(&mut u, &mut w);
                }
                cyc.flip(parent_edge[u]);
                u = parent[u];
            }
            basis.push(cyc);
        }
        Subspace::span(m, basis).expect("uniform lengths")
    }

    /// The vertex star δ(v): edges with exactly one end at `v`.
    pub fn star(&self, v: usize) -> EdgeVector {
        let mut s = BitVec::zeros(self.edges.len());
        for &e in &self.slots[v] {
            s.flip(e);
        }
        // a loop was flipped twice and drops out
        s
    }

    /// Span of the vertex stars: all edge cuts of vertex bipartitions.
    pub fn cut_space(&self) -> Subspace {
        Subspace::span(self.edges.len(), (0..self.vertex_count).map(|v| self.star(v))).expect("uniform lengths")
    }

    /// Even-weight edge sets.
    pub fn even_space(&self) -> Subspace {
        Subspace::span(self.edges.len(), [self.full_edge_set()])
            .expect("uniform lengths")
            .orthogonal_complement()
    }

    /// True iff `c` is exactly the set of edges crossing some partition of
    /// the vertices. Decided by two-colouring, not by linear algebra.
    pub fn is_bipartite_set(&self, c: &EdgeVector) -> bool {
        let mut side: Vec<Option<bool>> = vec![None; self.vertex_count];
        side[0] = Some(false);
        let mut queue = VecDeque::from([0usize]);
        while let Some(v) = queue.pop_front() {
            let sv = side[v].expect("queued vertices are coloured");
            for &e in &self.slots[v] {
                let [a, b] = self.edges[e];
                let w = if a.vertex == v { b.vertex } else { a.vertex };
                let want = sv ^ c.get(e);
                match side[w] {
                    None => {
                        side[w] = Some(want);
                        queue.push_back(w);
                    }
                    Some(s) if s != want => return false,
                    Some(_) => {}
                }
            }
        }
        true
    }

    /// The six slot-pair vectors at each vertex, in (vertex, pair) order
    /// with pairs (0,1), (0,2), (0,3), (1,2), (1,3), (2,3).
    ///
    /// A pair of slots on the same edge yields the zero vector.
    pub fn pair_generators(&self) -> Vec<EdgeVector> {
        let mut out = Vec::with_capacity(6 * self.vertex_count);
        for v in 0..self.vertex_count {
            for (i, j) in SLOT_PAIRS {
                out.push(self.slot_pair_vector(v, i, j));
            }
        }
        out
    }

    pub fn slot_pair_vector(&self, v: usize, i: usize, j: usize) -> EdgeVector {
        let mut x = BitVec::zeros(self.edges.len());
        x.flip(self.slots[v][i]);
        x.flip(self.slots[v][j]);
        x
    }

    /// Number of vertices at which the cycle `l` has degree exactly two.
    pub fn essential_length(&self, l: &EdgeVector) -> Result<usize> {
        if !self.is_cycle(l) {
            return Err(Error::NotACycle);
        }
        Ok((0..self.vertex_count).filter(|&v| self.degree_in(l, v) == 2).count())
    }

    /// Relabels vertices by `perm` (old index -> new index), keeping edge
    /// order and slot numbers.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let edges = self
            .edges
            .iter()
            .map(|[a, b]| [HalfEdge::new(perm[a.vertex], a.slot), HalfEdge::new(perm[b.vertex], b.slot)])
            .collect();
        Self::new(self.vertex_count, edges)
    }

    /// The same graph with edges listed in the order `order` (new position
    /// -> old edge index).
    pub fn with_edge_order(&self, order: &[usize]) -> Result<Self> {
        Self::new(self.vertex_count, order.iter().map(|&e| self.edges[e]).collect())
    }

    /// The same graph with the slots of each vertex renumbered:
    /// `maps[v][old] = new`.
    pub fn with_slot_maps(&self, maps: &[[usize; 4]]) -> Result<Self> {
        let edges = self
            .edges
            .iter()
            .map(|ends| ends.map(|h| HalfEdge::new(h.vertex, maps[h.vertex][h.slot])))
            .collect();
        Self::new(self.vertex_count, edges)
    }
}

pub const SLOT_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// A uniformly random pairing of the 4n half-edges, redrawn until the
/// result is connected. Loops and parallel edges occur freely.
pub fn random_quantized_graph<R: Rng>(n: usize, rng: &mut R) -> QuantizedGraph {
    assert!(n >= 1);
    loop {
        let mut halves: Vec<HalfEdge> =
            (0..n).flat_map(|v| (0..4).map(move |s| HalfEdge::new(v, s))).collect();
        halves.shuffle(rng);
        let edges = halves.chunks(2).map(|c| [c[0], c[1]]).collect();
        if let Ok(g) = QuantizedGraph::new(n, edges) {
            return g;
        }
    }
}
