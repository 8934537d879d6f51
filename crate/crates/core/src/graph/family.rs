//! Generators for every graph family the crate works with, plus the
//! `name:params` grammar used on the command line and in report ids.
//!
//! Labelling conventions (relied on by the worked fixtures):
//!
//! * `P_n`, `C_n`: vertices `0..n` along the path / cycle.
//! * `K_{m,n}`: part `X = 0..m`, part `Y = m..m+n`.
//! * `K_{1,n}`: centre `0`, leaves `1..=n`.
//! * `B_{m,n}`: centres `0` and `1`; pendants `2..m+2` on `0`, `m+2..m+n+2` on `1`.
//! * corona `G∘lK_1`: base vertex `i` receives pendants `n + i·l + j`, `j < l`.
//! * supergraph constructions append their new vertices after the base.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Graph, Vertex};
use crate::coloring::chromatic_number;
use crate::error::{Error, Result};

pub const DEFAULT_RANDOM_SEED: u64 = 0x5eed;

pub fn build_path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::param("path order must be at least 1"));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn build_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::param("cycle order must be at least 3"));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)).chain([(n - 1, 0)]))
}

pub fn build_complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::param("complete graph order must be at least 1"));
    }
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

pub fn build_complete_bipartite(m: usize, n: usize) -> Result<Graph> {
    if m == 0 || n == 0 {
        return Err(Error::param("both parts of K_{m,n} must be non-empty"));
    }
    Graph::from_edges(m + n, (0..m).flat_map(|x| (m..m + n).map(move |y| (x, y))))
}

pub fn build_bistar(m: usize, n: usize) -> Result<Graph> {
    if m == 0 || n == 0 {
        return Err(Error::param("both stars of a bistar need at least one pendant"));
    }
    let left = (2..m + 2).map(|p| (0, p));
    let right = (m + 2..m + n + 2).map(|p| (1, p));
    Graph::from_edges(m + n + 2, [(0, 1)].into_iter().chain(left).chain(right))
}

/// `G ∘ lK_1`: every base vertex gets `l` new pendant neighbours.
pub fn corona(base: &Graph, l: usize) -> Result<Graph> {
    if l == 0 {
        return Err(Error::param("corona needs at least one pendant per vertex"));
    }
    let n = base.order();
    base.extended(n * l, (0..n).flat_map(|i| (0..l).map(move |j| (i, n + i * l + j))))
}

/// Glues a `K_m` onto the edge `{u, v}`: `m - 2` new vertices which, together
/// with `u` and `v`, are pairwise adjacent.
pub fn attach_clique(base: &Graph, u: Vertex, v: Vertex, m: usize) -> Result<Graph> {
    if !base.has_edge(u, v) {
        return Err(Error::InvalidEdge { u, v });
    }
    if m < 3 {
        return Err(Error::param("attached clique must have order at least 3"));
    }
    let n = base.order();
    let fresh: Vec<Vertex> = (n..n + m - 2).collect();
    let mut edges = Vec::new();
    for (i, &a) in fresh.iter().enumerate() {
        edges.push((u, a));
        edges.push((v, a));
        for &b in &fresh[i + 1..] {
            edges.push((a, b));
        }
    }
    base.extended(m - 2, edges)
}

/// Adds one vertex adjacent to exactly the vertices of `clique`.
pub fn add_apex(base: &Graph, clique: &[Vertex]) -> Result<Graph> {
    let mut set = clique.to_vec();
    set.sort_unstable();
    set.dedup();
    if set.len() != clique.len() || !base.is_clique(&set) {
        return Err(Error::InvalidClique(clique.to_vec()));
    }
    let w = base.order();
    base.extended(1, set.into_iter().map(|c| (c, w)))
}

/// The pair `(G2, G3)`: `G2 = base ∘ kK_1` and `G3` is `G2` plus a vertex
/// adjacent to every base vertex. Requires `k = χ(base) ≥ 3`.
pub fn embed_kplus1(base: &Graph, k: usize) -> Result<(Graph, Graph)> {
    let chi = chromatic_number(base);
    if k < 3 || k != chi {
        return Err(Error::param(format!(
            "embedding needs k = χ(base) ≥ 3, got k = {k} with χ = {chi}"
        )));
    }
    let g2 = corona(base, k)?;
    let w = g2.order();
    let g3 = g2.extended(1, (0..base.order()).map(|v| (v, w)))?;
    Ok((g2, g3))
}

/// Erdős–Rényi `G(n, p)` from a seeded ChaCha stream.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::param(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// A named graph construction.
///
/// The textual grammar (see [`FromStr`] and [`fmt::Display`]) is:
///
/// ```text
/// path:N | cycle:N | star:N | kmn:M,N | bistar:M,N | complete:N
/// graph6:CODE | random:N,P[,SEED]
/// corona:L:BASE | attach:BASE@U-V:KM | apex:BASE@V1,V2,... | embed:BASE
/// ```
#[derive(Debug, Clone, PartialEq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    /// `K_{1,n}`.
    Star(usize),
    CompleteBipartite(usize, usize),
    Bistar(usize, usize),
    Complete(usize),
    Graph6(String),
    Random {
        n: usize,
        p: f64,
        seed: Option<u64>,
    },
    Corona {
        base: Box<FamilySpec>,
        l: usize,
    },
    AttachClique {
        base: Box<FamilySpec>,
        u: Vertex,
        v: Vertex,
        m: usize,
    },
    Apex {
        base: Box<FamilySpec>,
        clique: Vec<Vertex>,
    },
    /// `G3` of the `(G2, G3)` embedding pair, with `k = χ(base)`.
    Embed {
        base: Box<FamilySpec>,
    },
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph> {
        use FamilySpec::*;
        match self {
            Path(n) => build_path(*n),
            Cycle(n) => build_cycle(*n),
            Star(n) => {
                if *n == 0 {
                    Err(Error::param("star needs at least one leaf"))
                } else {
                    build_complete_bipartite(1, *n)
                }
            }
            CompleteBipartite(m, n) => build_complete_bipartite(*m, *n),
            Bistar(m, n) => build_bistar(*m, *n),
            Complete(n) => build_complete(*n),
            Graph6(code) => super::parse_graph6(code),
            Random { n, p, seed } => random_graph(*n, *p, seed.unwrap_or(DEFAULT_RANDOM_SEED)),
            Corona { base, l } => corona(&base.build()?, *l),
            AttachClique { base, u, v, m } => attach_clique(&base.build()?, *u, *v, *m),
            Apex { base, clique } => add_apex(&base.build()?, clique),
            Embed { base } => {
                let g = base.build()?;
                let k = chromatic_number(&g);
                Ok(embed_kplus1(&g, k)?.1)
            }
        }
    }

    /// Family name as it appears before the first `:`.
    pub fn family_name(&self) -> &'static str {
        use FamilySpec::*;
        match self {
            Path(_) => "path",
            Cycle(_) => "cycle",
            Star(_) => "star",
            CompleteBipartite(..) => "kmn",
            Bistar(..) => "bistar",
            Complete(_) => "complete",
            Graph6(_) => "graph6",
            Random { .. } => "random",
            Corona { .. } => "corona",
            AttachClique { .. } => "attach",
            Apex { .. } => "apex",
            Embed { .. } => "embed",
        }
    }

    /// Everything after `family_name:`.
    pub fn params(&self) -> String {
        let s = self.to_string();
        s[self.family_name().len() + 1..].to_string()
    }
}

fn parse_count(s: &str, what: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| Error::param(format!("expected a non-negative integer for {what}, got {s:?}")))
}

fn parse_pair(s: &str, what: &str) -> Result<(usize, usize)> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| Error::param(format!("{what} expects two comma-separated integers, got {s:?}")))?;
    Ok((parse_count(a, what)?, parse_count(b, what)?))
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::param(format!("family spec {s:?} has no `name:` prefix")))?;
        let spec = match name {
            "path" => FamilySpec::Path(parse_count(rest, "path")?),
            "cycle" => FamilySpec::Cycle(parse_count(rest, "cycle")?),
            "star" => FamilySpec::Star(parse_count(rest, "star")?),
            "kmn" | "complete-bipartite" => {
                let (m, n) = parse_pair(rest, "kmn")?;
                FamilySpec::CompleteBipartite(m, n)
            }
            "bistar" => {
                let (m, n) = parse_pair(rest, "bistar")?;
                FamilySpec::Bistar(m, n)
            }
            "complete" => FamilySpec::Complete(parse_count(rest, "complete")?),
            "graph6" => FamilySpec::Graph6(rest.to_string()),
            "random" => {
                let parts: Vec<&str> = rest.split(',').collect();
                if parts.len() < 2 || parts.len() > 3 {
                    return Err(Error::param("random expects N,P or N,P,SEED"));
                }
                let n = parse_count(parts[0], "random order")?;
                let p: f64 = parts[1]
                    .trim()
                    .parse()
                    .map_err(|_| Error::param(format!("bad edge probability {:?}", parts[1])))?;
                let seed = match parts.get(2) {
                    Some(t) => Some(t.trim().parse().map_err(|_| Error::param(format!("bad seed {t:?}")))?),
                    None => None,
                };
                FamilySpec::Random { n, p, seed }
            }
            "corona" => {
                let (l, base) = rest
                    .split_once(':')
                    .ok_or_else(|| Error::param("corona expects corona:L:BASE"))?;
                FamilySpec::Corona {
                    l: parse_count(l, "corona multiplicity")?,
                    base: Box::new(base.parse()?),
                }
            }
            "attach" => {
                let (base, tail) = rest
                    .rsplit_once('@')
                    .ok_or_else(|| Error::param("attach expects attach:BASE@U-V:KM"))?;
                let (edge, clique) = tail
                    .split_once(':')
                    .ok_or_else(|| Error::param("attach expects attach:BASE@U-V:KM"))?;
                let (u, v) = edge
                    .split_once('-')
                    .ok_or_else(|| Error::param(format!("bad edge selector {edge:?}")))?;
                let m = clique
                    .strip_prefix('K')
                    .ok_or_else(|| Error::param(format!("clique suffix must look like K5, got {clique:?}")))?;
                FamilySpec::AttachClique {
                    base: Box::new(base.parse()?),
                    u: parse_count(u, "edge endpoint")?,
                    v: parse_count(v, "edge endpoint")?,
                    m: parse_count(m, "clique order")?,
                }
            }
            "apex" => {
                let (base, list) = rest
                    .rsplit_once('@')
                    .ok_or_else(|| Error::param("apex expects apex:BASE@V1,V2,..."))?;
                let clique = list
                    .split(',')
                    .map(|t| parse_count(t, "apex clique vertex"))
                    .collect::<Result<Vec<_>>>()?;
                FamilySpec::Apex {
                    base: Box::new(base.parse()?),
                    clique,
                }
            }
            "embed" => FamilySpec::Embed {
                base: Box::new(rest.parse()?),
            },
            other => return Err(Error::param(format!("unknown family {other:?}"))),
        };
        Ok(spec)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        match self {
            Path(n) => write!(f, "path:{n}"),
            Cycle(n) => write!(f, "cycle:{n}"),
            Star(n) => write!(f, "star:{n}"),
            CompleteBipartite(m, n) => write!(f, "kmn:{m},{n}"),
            Bistar(m, n) => write!(f, "bistar:{m},{n}"),
            Complete(n) => write!(f, "complete:{n}"),
            Graph6(code) => write!(f, "graph6:{code}"),
            Random { n, p, seed: None } => write!(f, "random:{n},{p}"),
            Random { n, p, seed: Some(s) } => write!(f, "random:{n},{p},{s}"),
            Corona { base, l } => write!(f, "corona:{l}:{base}"),
            AttachClique { base, u, v, m } => write!(f, "attach:{base}@{u}-{v}:K{m}"),
            Apex { base, clique } => {
                write!(f, "apex:{base}@")?;
                for (i, c) in clique.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                Ok(())
            }
            Embed { base } => write!(f, "embed:{base}"),
        }
    }
}
