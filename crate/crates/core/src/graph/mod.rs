//! Finite undirected graphs with optional loops and positive vertex weights.

mod canon;
mod enumerate;
mod families;
mod io;

pub use canon::{automorphism_count, canonical_form, is_isomorphic, is_vertex_transitive, same_orbit, CanonicalForm};
pub use enumerate::{all_graphs, all_trees, connected_graphs};
pub use families::{build_family, Caterpillar, Family, Spider};
pub use io::{parse_edge_list, parse_graph6, to_edge_list, to_graph6};

use crate::error::{Error, Result};

/// Largest supported vertex count; adjacency rows are 64-bit masks.
pub const MAX_VERTICES: usize = 64;

/// Undirected graph on vertices `0..n`. A loop at `v` is bit `v` of row `v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    weights: Option<Vec<u32>>,
}

/// Per-component part sizes of a bipartite graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub components: Vec<BipartiteComponent>,
}

/// One connected component split into its larger part `first` and smaller part `second`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteComponent {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
}

impl BipartiteComponent {
    pub fn k1(&self) -> usize {
        self.first.len()
    }
    pub fn k2(&self) -> usize {
        self.second.len()
    }
}

impl Bipartition {
    /// Sorted `(k1, k2)` pairs, independent of vertex labels.
    pub fn profile(&self) -> Vec<(usize, usize)> {
        let mut v: Vec<_> = self.components.iter().map(|c| (c.k1(), c.k2())).collect();
        v.sort_unstable();
        v
    }
    pub fn sum_k1(&self) -> usize {
        self.components.iter().map(BipartiteComponent::k1).sum()
    }
    pub fn sum_k2(&self) -> usize {
        self.components.iter().map(BipartiteComponent::k2).sum()
    }
}

/// How [`Graph::contract`] treats blocks that contain an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContractMode {
    /// Homomorphism quotient: an internal edge is an error.
    Quotient,
    /// Weighted contraction: an internal edge becomes a loop.
    Merge,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::InvalidParameter(format!(
                "{n} vertices exceeds the maximum of {MAX_VERTICES}"
            )));
        }
        Ok(Graph { n, adj: vec![0; n], weights: None })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds from adjacency masks; bits outside `0..n` are rejected.
    pub fn from_masks(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        let mut g = Graph::empty(n)?;
        for (u, &row) in adj.iter().enumerate() {
            if n < 64 && row >> n != 0 {
                return Err(Error::InvalidParameter(format!("row {u} has out-of-range bits")));
            }
            for v in bits(row) {
                if adj[v] >> u & 1 == 0 {
                    return Err(Error::InvalidParameter(format!("asymmetric pair ({u}, {v})")));
                }
            }
        }
        g.adj = adj;
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidParameter(format!(
                "edge ({u}, {v}) out of range for {} vertices",
                self.n
            )));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn with_weights(mut self, weights: Vec<u32>) -> Result<Self> {
        if weights.len() != self.n {
            return Err(Error::SizeMismatch { expected: self.n, found: weights.len() });
        }
        if weights.iter().any(|&w| w == 0) {
            return Err(Error::InvalidParameter("weights must be positive".into()));
        }
        self.weights = if weights.iter().all(|&w| w == 1) { None } else { Some(weights) };
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn masks(&self) -> &[u64] {
        &self.adj
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.has_edge(v, v)
    }

    pub fn has_loops(&self) -> bool {
        (0..self.n).any(|v| self.has_loop(v))
    }

    pub fn loop_mask(&self) -> u64 {
        (0..self.n).filter(|&v| self.has_loop(v)).fold(0, |m, v| m | 1 << v)
    }

    /// Neighbours of `v` other than `v` itself.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        bits(self.adj[v] & !(1u64 << v))
    }

    /// Number of distinct neighbours; a loop counts once.
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in bits(self.adj[u] >> u) {
                out.push((u, u + v));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(|&r| r == 0)
    }

    pub fn weight(&self, v: usize) -> u32 {
        self.weights.as_ref().map_or(1, |w| w[v])
    }

    pub fn weights(&self) -> Vec<u32> {
        (0..self.n).map(|v| self.weight(v)).collect()
    }

    pub fn is_weighted(&self) -> bool {
        self.weights.is_some()
    }

    pub fn total_weight(&self) -> u32 {
        (0..self.n).map(|v| self.weight(v)).sum()
    }

    pub fn without_loops(&self) -> Graph {
        let mut g = self.clone();
        for v in 0..g.n {
            g.adj[v] &= !(1u64 << v);
        }
        g
    }

    pub fn without_weights(&self) -> Graph {
        Graph { weights: None, ..self.clone() }
    }

    /// Relabels so vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            for v in bits(self.adj[u]) {
                adj[perm[u]] |= 1 << perm[v];
            }
        }
        let weights = self.weights.as_ref().map(|w| {
            let mut out = vec![1; self.n];
            for v in 0..self.n {
                out[perm[v]] = w[v];
            }
            out
        });
        Graph { n: self.n, adj, weights }
    }

    /// Induced subgraph on `vertices`, relabelled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let k = vertices.len();
        let mut adj = vec![0u64; k];
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate() {
                if self.has_edge(u, v) {
                    adj[i] |= 1 << j;
                }
            }
        }
        let weights = self.weights.as_ref().map(|w| vertices.iter().map(|&v| w[v]).collect());
        Graph { n: k, adj, weights }
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        let mut g = Graph::empty(n)?;
        g.adj[..self.n].copy_from_slice(&self.adj);
        for (v, &row) in other.adj.iter().enumerate() {
            g.adj[self.n + v] = row << self.n;
        }
        if self.is_weighted() || other.is_weighted() {
            let mut w = self.weights();
            w.extend(other.weights());
            g = g.with_weights(w)?;
        }
        Ok(g)
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen >> s & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << s;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0u64;
                for v in bits(frontier) {
                    next |= self.adj[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            out.push(bits(comp).collect());
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.component_count() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && !self.has_loops() && self.edge_count() + 1 == self.n
    }

    pub fn is_forest(&self) -> bool {
        !self.has_loops() && self.edge_count() + self.component_count() == self.n
    }

    /// Two-colouring per component, or `None` if there is a loop or an odd cycle.
    pub fn bipartition(&self) -> Option<Bipartition> {
        if self.has_loops() {
            return None;
        }
        let mut side = vec![u8::MAX; self.n];
        let mut components = Vec::new();
        for comp in self.components() {
            let s = comp[0];
            side[s] = 0;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for v in self.neighbors(u) {
                    if side[v] == u8::MAX {
                        side[v] = 1 - side[u];
                        stack.push(v);
                    } else if side[v] == side[u] {
                        return None;
                    }
                }
            }
            let (a, b): (Vec<usize>, Vec<usize>) = comp.iter().partition(|&&v| side[v] == 0);
            let (first, second) = if a.len() >= b.len() { (a, b) } else { (b, a) };
            components.push(BipartiteComponent { first, second });
        }
        Some(Bipartition { components })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Breadth-first distances from `s`; unreachable vertices get `usize::MAX`.
    pub fn distances_from(&self, s: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for v in self.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// One vertex per block of `blocks`; weights add up.
    pub fn contract(&self, blocks: &[Vec<usize>], mode: ContractMode) -> Result<Graph> {
        let mut block_of = vec![usize::MAX; self.n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &v in block {
                if v >= self.n || block_of[v] != usize::MAX {
                    return Err(Error::InvalidPartition(format!("vertex {v} repeated or out of range")));
                }
                block_of[v] = b;
            }
        }
        if block_of.iter().any(|&b| b == usize::MAX) {
            return Err(Error::InvalidPartition("blocks do not cover every vertex".into()));
        }
        let mut g = Graph::empty(blocks.len())?;
        for (u, v) in self.edges() {
            let (a, b) = (block_of[u], block_of[v]);
            if a == b && u != v && mode == ContractMode::Quotient {
                return Err(Error::AdjacentIdentification(blocks[a].clone()));
            }
            g.add_edge(a, b)?;
        }
        let weights: Vec<u32> =
            blocks.iter().map(|blk| blk.iter().map(|&v| self.weight(v)).sum()).collect();
        g.with_weights(weights)
    }

    /// Complement of a loopless graph (loops are dropped).
    pub fn complement(&self) -> Graph {
        let full = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        let adj = (0..self.n).map(|v| !self.adj[v] & full & !(1u64 << v)).collect();
        Graph { n: self.n, adj, weights: self.weights.clone() }
    }
}

/// Iterates over the set bit positions of `mask` in increasing order.
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}
