//! Exact `k`-Sudoku numbers.
//!
//! `sn(G, k)` is the least `|S|` such that some proper colouring `C0` of
//! `G[S]` extends to exactly one proper `k`-colouring of `G`. The search
//! walks candidate sets by increasing size; within a size, sets in
//! lexicographic order; within a set, colourings in canonical form (first
//! colour used is 1, every new colour is the next unused index) in
//! lexicographic order. The first hit is therefore the minimum under that
//! order, whatever the thread count.
//!
//! Two facts about uniqueness cut the candidate sets down before any
//! colouring is tried:
//!
//! * an uncoloured vertex of degree at most `k - 2` always keeps two
//!   colours, so every such vertex must be in `S` ([`required_vertices`]);
//! * an edge whose endpoints both have degree at most `k - 1` can always be
//!   completed in two ways if neither endpoint is coloured, so `S` must
//!   cover it ([`constraint_edges`]).
//!
//! During the colouring walk the same counting argument is applied to the
//! partial state: an uncoloured vertex outside `S` whose list is at least
//! two longer than its number of uncoloured neighbours can never be forced.
//! [`SearchConfig::prune`] switches all three off, leaving a plain
//! exhaustive search used to cross-check them.

mod certificate;
mod cover;

use std::time::{Duration, Instant};

use rayon::prelude::*;

pub use certificate::{CertificateFailure, SudokuCertificate};

use crate::coloring::engine::State;
use crate::coloring::{chromatic_number, count_extensions, ExtensionCount, PartialColoring, MAX_COLORS};
use crate::error::{Error, Result};
use crate::graph::{bits, Graph, Vertex};

/// Default bound on the number of vertices the subset walk ranges over.
pub const DEFAULT_SEARCH_LIMIT: usize = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Largest number of non-required vertices the subset walk may range over.
    pub limit: usize,
    /// Worker threads; 1 runs everything on the calling thread.
    pub threads: usize,
    /// Enable the degree-based pruning rules.
    pub prune: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            limit: DEFAULT_SEARCH_LIMIT,
            threads: 1,
            prune: true,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub subsets_examined: u64,
    pub colorings_examined: u64,
    pub elapsed: Duration,
}

#[derive(Clone, Debug)]
pub struct SnResult {
    pub sn: usize,
    pub certificate: SudokuCertificate,
    pub lower_bound: usize,
    pub stats: SearchStats,
    pub warnings: Vec<String>,
}

fn check_k(k: usize) -> Result<()> {
    if k == 0 || k > MAX_COLORS {
        Err(Error::param(format!("k = {k} outside 1..={MAX_COLORS}")))
    } else {
        Ok(())
    }
}

fn check_chromatic(g: &Graph, k: usize) -> Result<()> {
    let chromatic = chromatic_number(g);
    if k < chromatic {
        Err(Error::ChromaticViolation { k, chromatic })
    } else {
        Ok(())
    }
}

/// Whether `c0` extends to exactly one proper `k`-colouring, `k = c0.k()`.
pub fn is_sudoku_coloring(g: &Graph, c0: &PartialColoring) -> Result<bool> {
    check_k(c0.k())?;
    check_chromatic(g, c0.k())?;
    Ok(count_extensions(g, c0, 2)? == ExtensionCount::ExactlyOne)
}

fn required_mask(g: &Graph, k: usize) -> u64 {
    (0..g.order())
        .filter(|&v| g.degree_of(v) + 2 <= k)
        .fold(0, |m, v| m | 1 << v)
}

/// Vertices of degree at most `k - 2`; every Sudoku colouring colours all of them.
pub fn required_vertices(g: &Graph, k: usize) -> Vec<Vertex> {
    bits(required_mask(g, k)).collect()
}

/// Edges whose endpoints both have degree at most `k - 1`; every Sudoku
/// colouring colours at least one endpoint of each.
pub fn constraint_edges(g: &Graph, k: usize) -> Vec<(Vertex, Vertex)> {
    g.edges()
        .filter(|&(u, v)| g.degree_of(u) < k && g.degree_of(v) < k)
        .collect()
}

fn free_constraint_edges(g: &Graph, k: usize, required: u64) -> Vec<(Vertex, Vertex)> {
    constraint_edges(g, k)
        .into_iter()
        .filter(|&(u, v)| required & (1 << u | 1 << v) == 0)
        .collect()
}

/// `|required_vertices|` plus a minimum vertex cover of the constraint edges
/// that avoid them. Never exceeds `sn(G, k)`.
pub fn lower_bound(g: &Graph, k: usize) -> usize {
    let required = required_mask(g, k);
    let edges = free_constraint_edges(g, k, required);
    (required.count_ones() + cover::minimum_vertex_cover(&edges).count_ones()) as usize
}

/// Renames colours in order of first appearance (by vertex), so the first
/// coloured vertex gets 1 and each new colour the next index.
pub fn canonical_form(c: &PartialColoring) -> PartialColoring {
    let mut rename = vec![0usize; c.k() + 1];
    let mut next = 0;
    let mut out = PartialColoring::new(c.k());
    for (v, col) in c.iter() {
        if rename[col] == 0 {
            next += 1;
            rename[col] = next;
        }
        out.set(v, rename[col]).expect("renamed colour stays in range");
    }
    out
}

pub fn sudoku_number(g: &Graph, k: usize) -> Result<SnResult> {
    sudoku_number_with(g, k, &SearchConfig::default())
}

/// `sn(G) = sn(G, χ(G))`.
pub fn sudoku_number_chromatic(g: &Graph) -> Result<SnResult> {
    sudoku_number_with(g, chromatic_number(g), &SearchConfig::default())
}

/// Outcome of the colouring walk over one candidate set.
struct SetOutcome {
    hit: Option<(Vec<u8>, Vec<u8>)>,
    leaves: u64,
}

struct Walk<'a> {
    g: &'a Graph,
    k: usize,
    set: &'a [Vertex],
    in_set: u64,
    prune: bool,
    leaves: u64,
}

impl Walk<'_> {
    /// True when some uncoloured vertex outside the set keeps two colours in
    /// every completion.
    fn doomed(&self, st: &State) -> bool {
        bits(st.uncolored & !self.in_set).any(|u| {
            let open = (self.g.neighbor_mask(u) & st.uncolored).count_ones();
            st.avail[u].count_ones() >= open + 2
        })
    }

    fn run(&mut self, depth: usize, st: State, max_used: u8, c0: &mut Vec<u8>) -> Option<Vec<u8>> {
        if depth == self.set.len() {
            self.leaves += 1;
            let mut first = None;
            return (st.count(self.g, 2, &mut first) == 1).then(|| first.expect("one extension"));
        }
        let v = self.set[depth];
        let forced = st.color[v];
        if forced != 0 {
            // propagation already fixed v; canonical form still has to hold
            if forced > max_used + 1 {
                return None;
            }
            c0.push(forced);
            let r = self.run(depth + 1, st, max_used.max(forced), c0);
            if r.is_none() {
                c0.pop();
            }
            return r;
        }
        let top = (max_used as usize + 1).min(self.k) as u8;
        for c in 1..=top {
            let mut next = st.clone();
            if !next.assign(self.g, v, c) || !next.propagate(self.g) {
                continue;
            }
            if self.prune && self.doomed(&next) {
                continue;
            }
            c0.push(c);
            if let Some(f) = self.run(depth + 1, next, max_used.max(c), c0) {
                return Some(f);
            }
            c0.pop();
        }
        None
    }
}

/// Lexicographically first canonical Sudoku colouring on `set` (sorted).
fn first_on_set(g: &Graph, k: usize, set: &[Vertex], prune: bool) -> SetOutcome {
    let in_set = set.iter().fold(0u64, |m, &v| m | 1 << v);
    let mut walk = Walk {
        g,
        k,
        set,
        in_set,
        prune,
        leaves: 0,
    };
    let mut root = State::new(g, k);
    let hit = if !root.propagate(g) || (prune && walk.doomed(&root)) {
        None
    } else {
        let mut c0 = Vec::with_capacity(set.len());
        walk.run(0, root, 0, &mut c0).map(|f| (c0, f))
    };
    SetOutcome {
        hit,
        leaves: walk.leaves,
    }
}

/// Index combinations of `0..m` of size `t`, in lexicographic order.
fn combinations(m: usize, t: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut cur: Option<Vec<usize>> = (t <= m).then(|| (0..t).collect());
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        let c = cur.as_mut().unwrap();
        match (0..t).rev().find(|&i| c[i] < m - t + i) {
            Some(i) => {
                c[i] += 1;
                for j in i + 1..t {
                    c[j] = c[j - 1] + 1;
                }
            }
            None => cur = None,
        }
        Some(out)
    })
}

/// `sn(G, k)` with an explicit configuration.
pub fn sudoku_number_with(g: &Graph, k: usize, config: &SearchConfig) -> Result<SnResult> {
    let start = Instant::now();
    check_k(k)?;
    check_chromatic(g, k)?;
    if config.threads == 0 {
        return Err(Error::param("thread count must be at least 1"));
    }
    let n = g.order();
    let (required, edges) = if config.prune {
        let r = required_mask(g, k);
        (r, free_constraint_edges(g, k, r))
    } else {
        (0, Vec::new())
    };
    let free: Vec<Vertex> = bits(g.vertex_mask() & !required).collect();
    if free.len() > config.limit {
        return Err(Error::LimitExceeded {
            what: "number of non-required vertices",
            value: free.len(),
            limit: config.limit,
        });
    }
    let lb = if config.prune {
        (required.count_ones() + cover::minimum_vertex_cover(&edges).count_ones()) as usize
    } else {
        0
    };

    let pool = if config.threads > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(config.threads)
                .build()
                .map_err(|e| Error::param(format!("cannot start worker pool: {e}")))?,
        )
    } else {
        None
    };

    let mut warnings = Vec::new();
    if !g.is_connected() {
        warnings.push("graph is disconnected; results for connected graphs may not apply".to_string());
    }

    let mut stats = SearchStats::default();
    let fixed = required.count_ones() as usize;
    for size in lb..=n {
        let sets: Vec<Vec<Vertex>> = combinations(free.len(), size - fixed)
            .map(|idx| idx.iter().fold(required, |m, &i| m | 1 << free[i]))
            .filter(|&m| edges.iter().all(|&(u, v)| m & (1 << u | 1 << v) != 0))
            .map(|m| bits(m).collect())
            .collect();
        let chunk = if pool.is_some() { config.threads * 4 } else { 1 };
        for block in sets.chunks(chunk) {
            let outcomes: Vec<SetOutcome> = match &pool {
                Some(p) => p.install(|| block.par_iter().map(|s| first_on_set(g, k, s, config.prune)).collect()),
                None => block.iter().map(|s| first_on_set(g, k, s, config.prune)).collect(),
            };
            for (set, outcome) in block.iter().zip(outcomes) {
                stats.subsets_examined += 1;
                stats.colorings_examined += outcome.leaves;
                if let Some((c0, f)) = outcome.hit {
                    stats.elapsed = start.elapsed();
                    let certificate = SudokuCertificate {
                        k,
                        n,
                        s: set.clone(),
                        c0: set.iter().zip(&c0).map(|(&v, &c)| (v, c as usize)).collect(),
                        f: f.iter().enumerate().map(|(v, &c)| (v, c as usize)).collect(),
                        sn: set.len(),
                    };
                    return Ok(SnResult {
                        sn: set.len(),
                        certificate,
                        lower_bound: lb,
                        stats,
                        warnings,
                    });
                }
            }
        }
    }
    unreachable!("colouring every vertex is always a Sudoku colouring when k >= χ")
}
