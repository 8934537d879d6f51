//! Isomorphism-free enumeration of small connected graphs.

use std::collections::HashMap;

use super::iso::{are_isomorphic, invariant_key};
use super::Graph;
use crate::error::{Error, Result};

/// Default largest order for [`enumerate_connected_bipartite`].
pub const DEFAULT_ENUMERATION_LIMIT: usize = 8;

/// Largest order accepted by [`enumerate_connected`] (all labelled graphs are
/// generated, `2^15` at order 6).
const GENERAL_ENUMERATION_LIMIT: usize = 6;

type Bucket = HashMap<Vec<(usize, Vec<usize>)>, Vec<Graph>>;

#[derive(Default)]
struct Dedup {
    seen: Bucket,
}

impl Dedup {
    /// Returns true the first time a graph from a new isomorphism class is offered.
    fn insert(&mut self, g: &Graph) -> bool {
        let bucket = self.seen.entry(invariant_key(g)).or_default();
        if bucket.iter().any(|h| are_isomorphic(g, h)) {
            return false;
        }
        bucket.push(g.clone());
        true
    }
}

/// Pull-based stream of connected bipartite graphs of a fixed order, one per
/// isomorphism class.
///
/// Candidates are generated as `a × b` biadjacency matrices with `a ≤ b` and
/// non-decreasing rows; every connected bipartite graph has such a form, and
/// the isomorphism filter removes the remaining duplicates.
pub struct ConnectedBipartiteGraphs {
    n: usize,
    small: usize,
    rows: Vec<u64>,
    started: bool,
    dedup: Dedup,
}

/// Connected bipartite graphs of order `n`, up to isomorphism.
///
/// ```
/// use sudoku_chroma::graph::enumerate_connected_bipartite;
/// let counts: Vec<usize> = (1..=6)
///     .map(|n| enumerate_connected_bipartite(n).unwrap().count())
///     .collect();
/// assert_eq!(counts, [1, 1, 1, 3, 5, 17]);
/// ```
pub fn enumerate_connected_bipartite(n: usize) -> Result<ConnectedBipartiteGraphs> {
    ConnectedBipartiteGraphs::with_limit(n, DEFAULT_ENUMERATION_LIMIT)
}

impl ConnectedBipartiteGraphs {
    pub fn with_limit(n: usize, limit: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::param("order must be at least 1"));
        }
        if n > limit || n > super::MAX_ORDER {
            return Err(Error::LimitExceeded {
                what: "enumeration order",
                value: n,
                limit: limit.min(super::MAX_ORDER),
            });
        }
        Ok(ConnectedBipartiteGraphs {
            n,
            small: 1,
            rows: Vec::new(),
            started: false,
            dedup: Dedup::default(),
        })
    }

    fn build(&self) -> Graph {
        let a = self.small;
        let n = self.n;
        let mut adj = vec![0u64; n];
        for (x, &row) in self.rows.iter().enumerate() {
            adj[x] = row << a;
            for y in super::bits(row) {
                adj[a + y] |= 1 << x;
            }
        }
        Graph::from_adjacency(adj)
    }

    /// Advances the odometer over non-decreasing row sequences.
    fn advance(&mut self) -> bool {
        let top = (1u64 << (self.n - self.small)) - 1;
        if !self.started {
            self.started = true;
            self.rows = vec![0; self.small];
            return true;
        }
        if let Some(i) = self.rows.iter().rposition(|&r| r < top) {
            let v = self.rows[i] + 1;
            for r in &mut self.rows[i..] {
                *r = v;
            }
            return true;
        }
        // next part size
        self.small += 1;
        if 2 * self.small > self.n {
            return false;
        }
        self.rows = vec![0; self.small];
        true
    }
}

impl Iterator for ConnectedBipartiteGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.n == 1 {
            if self.started {
                return None;
            }
            self.started = true;
            return Some(Graph::from_adjacency(vec![0]));
        }
        while self.advance() {
            let g = self.build();
            if g.is_connected() && self.dedup.insert(&g) {
                return Some(g);
            }
        }
        None
    }
}

/// All connected graphs of order `n` up to isomorphism (`n ≤ 6`).
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::param("order must be at least 1"));
    }
    if n > GENERAL_ENUMERATION_LIMIT {
        return Err(Error::LimitExceeded {
            what: "enumeration order",
            value: n,
            limit: GENERAL_ENUMERATION_LIMIT,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut dedup = Dedup::default();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let mut adj = vec![0u64; n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        let g = Graph::from_adjacency(adj);
        if g.is_connected() && dedup.insert(&g) {
            out.push(g);
        }
    }
    Ok(out)
}
