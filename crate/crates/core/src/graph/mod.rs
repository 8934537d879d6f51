//! Simple undirected graphs on at most [`MAX_ORDER`] vertices.
//!
//! Vertices are the dense indices `0..n`. Each vertex stores its
//! neighbourhood as a 64-bit mask, which keeps every exact search in the
//! crate allocation-free on its hot path.

mod enumerate;
mod family;
mod io;
mod iso;

pub use enumerate::{
    enumerate_connected, enumerate_connected_bipartite, ConnectedBipartiteGraphs, DEFAULT_ENUMERATION_LIMIT,
};
pub use family::{
    add_apex, attach_clique, build_bistar, build_complete, build_complete_bipartite, build_cycle, build_path, corona,
    embed_kplus1, random_graph, FamilySpec,
};
pub use io::{emit_edgelist, emit_graph6, parse_edgelist, parse_graph6, parse_graph6_lines};
pub use iso::{are_isomorphic, invariant_key};

use crate::error::{Error, Result};

/// Largest supported order.
pub const MAX_ORDER: usize = 64;

pub type Vertex = usize;

/// Iterates the set bits of a mask in increasing order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

/// An immutable simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an edge list.
    ///
    /// Rejects loops, duplicate edges (in either orientation) and endpoints
    /// outside `0..n`.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::param("a graph needs at least one vertex"));
        }
        if n > MAX_ORDER {
            return Err(Error::LimitExceeded {
                what: "graph order",
                value: n,
                limit: MAX_ORDER,
            });
        }
        let mut adj = vec![0u64; n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::param(format!("edge {{{u},{v}}} has an endpoint outside 0..{n}")));
            }
            if u == v {
                return Err(Error::param(format!("loop at vertex {u}")));
            }
            if adj[u] >> v & 1 == 1 {
                return Err(Error::param(format!("duplicate edge {{{u},{v}}}")));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { adj })
    }

    pub(crate) fn from_adjacency(adj: Vec<u64>) -> Self {
        debug_assert!(!adj.is_empty() && adj.len() <= MAX_ORDER);
        debug_assert!((0..adj.len()).all(|v| adj[v] >> v & 1 == 0));
        Graph { adj }
    }

    /// The complete graph's complement: `n` isolated vertices.
    pub fn empty(n: usize) -> Result<Self> {
        Self::from_edges(n, [])
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Mask with one bit per vertex.
    pub fn vertex_mask(&self) -> u64 {
        if self.order() == 64 {
            u64::MAX
        } else {
            (1u64 << self.order()) - 1
        }
    }

    /// Neighbourhood of `v` as a bitmask.
    #[inline]
    pub fn neighbor_mask(&self, v: Vertex) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> {
        bits(self.adj[v])
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.order() && v < self.order() && self.adj[u] >> v & 1 == 1
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.order()).flat_map(move |u| bits(self.adj[u] & ((u64::MAX << u) << 1)).map(move |v| (u, v)))
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::param(format!("vertex {v} outside 0..{}", self.order())))
        }
    }

    pub fn degree(&self, v: Vertex) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.degree_of(v))
    }

    #[inline]
    pub(crate) fn degree_of(&self, v: Vertex) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order()).map(|v| self.degree_of(v)).collect()
    }

    /// Δ(G).
    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree_of(v)).max().unwrap_or(0)
    }

    /// Vertices of degree exactly one.
    pub fn pendant_vertices(&self) -> Vec<Vertex> {
        (0..self.order()).filter(|&v| self.degree_of(v) == 1).collect()
    }

    /// Connected components as vertex masks, ordered by smallest member.
    pub fn components(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for start in 0..self.order() {
            if seen >> start & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0;
                for v in bits(frontier) {
                    next |= self.adj[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Two-colours each component by breadth-first search.
    pub fn bipartition(&self) -> Option<u64> {
        let mut side = 0u64;
        let mut seen = 0u64;
        for comp in self.components() {
            let root = comp.trailing_zeros() as usize;
            seen |= 1 << root;
            let mut frontier = 1u64 << root;
            let mut parity = false;
            while frontier != 0 {
                if parity {
                    side |= frontier;
                }
                let mut next = 0;
                for v in bits(frontier) {
                    next |= self.adj[v];
                }
                frontier = next & !seen;
                seen |= next;
                parity = !parity;
            }
        }
        for (u, v) in self.edges() {
            if (side >> u & 1) == (side >> v & 1) {
                return None;
            }
        }
        Some(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// G[S], with `S` relabelled to `0..|S|` in increasing order.
    ///
    /// Returns the subgraph together with the mapping from new to old labels.
    pub fn induced_subgraph(&self, subset: &[Vertex]) -> Result<(Graph, Vec<Vertex>)> {
        let mut mapping: Vec<Vertex> = subset.to_vec();
        mapping.sort_unstable();
        mapping.dedup();
        for &v in &mapping {
            self.check_vertex(v)?;
        }
        if mapping.is_empty() {
            return Err(Error::param("induced subgraph of an empty vertex set"));
        }
        let mut adj = vec![0u64; mapping.len()];
        for (i, &u) in mapping.iter().enumerate() {
            for (j, &v) in mapping.iter().enumerate() {
                if self.has_edge(u, v) {
                    adj[i] |= 1 << j;
                }
            }
        }
        Ok((Graph::from_adjacency(adj), mapping))
    }

    /// Whether `set` is pairwise adjacent.
    pub fn is_clique(&self, set: &[Vertex]) -> bool {
        set.iter().all(|&u| u < self.order())
            && set
                .iter()
                .enumerate()
                .all(|(i, &u)| set[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Returns a new graph with `extra` vertices appended and the given
    /// edges added. Used by the supergraph generators.
    pub(crate) fn extended(&self, extra: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Graph> {
        let n = self.order() + extra;
        let all = self.edges().chain(edges);
        Graph::from_edges(n, all.collect::<Vec<_>>())
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.order())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}
