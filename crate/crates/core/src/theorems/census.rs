//! Structural classification of connected bipartite graphs by how far
//! `sn(G, 3)` falls below the order.

use std::fmt;
use std::time::Instant;

use super::CheckReport;
use crate::error::{Error, Result};
use crate::graph::{
    are_isomorphic, build_bistar, build_complete_bipartite, build_cycle, build_path, emit_graph6,
    enumerate_connected_bipartite, Graph,
};
use crate::search::{sudoku_number_with, SearchConfig};

/// `n - sn(G, 3)` bucketed as 0, 1, 2 or more.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sn3Class {
    N,
    NMinus1,
    NMinus2,
    Other,
}

impl Sn3Class {
    /// The class of a graph of order `n` with `sn(G, 3) = sn`.
    pub fn from_value(n: usize, sn: usize) -> Self {
        match n - sn {
            0 => Sn3Class::N,
            1 => Sn3Class::NMinus1,
            2 => Sn3Class::NMinus2,
            _ => Sn3Class::Other,
        }
    }
}

impl fmt::Display for Sn3Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sn3Class::N => "n",
            Sn3Class::NMinus1 => "n-1",
            Sn3Class::NMinus2 => "n-2",
            Sn3Class::Other => "other",
        })
    }
}

/// `P_4` with `l` pendants on one endpoint. The pendants hang off vertex 3,
/// the far end from vertex 0.
fn broom(l: usize) -> Result<Graph> {
    let spine = (0..3).map(|i| (i, i + 1));
    let bristles = (4..4 + l).map(|p| (3, p));
    Graph::from_edges(4 + l, spine.chain(bristles))
}

/// Every listed template of order `n`, tagged with its class and a name.
fn templates(n: usize) -> Result<Vec<(Sn3Class, String, Graph)>> {
    use Sn3Class::*;
    let mut out = Vec::new();
    match n {
        1 => out.push((N, "K_1".to_string(), build_path(1)?)),
        2 => out.push((N, "K_2".to_string(), build_path(2)?)),
        _ => {}
    }
    if n >= 3 {
        out.push((NMinus1, format!("K_1,{}", n - 1), build_complete_bipartite(1, n - 1)?));
    }
    if n == 4 {
        out.push((NMinus1, "P_4".to_string(), build_path(4)?));
        out.push((NMinus2, "C_4".to_string(), build_cycle(4)?));
    }
    if n >= 5 {
        for a in 1..=(n - 2) / 2 {
            let b = n - 2 - a;
            out.push((NMinus2, format!("B_{a},{b}"), build_bistar(a, b)?));
        }
    }
    if n >= 6 {
        out.push((NMinus2, format!("broom P_4 + {} pendants", n - 4), broom(n - 4)?));
    }
    match n {
        5 => {
            out.push((NMinus2, "P_5".to_string(), build_path(5)?));
            let pendant = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])?;
            out.push((NMinus2, "C_4 + pendant".to_string(), pendant));
        }
        6 => {
            out.push((NMinus2, "P_6".to_string(), build_path(6)?));
            let spider = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)])?;
            out.push((NMinus2, "P_5 + central pendant".to_string(), spider));
        }
        _ => {}
    }
    Ok(out)
}

fn classify_named(g: &Graph) -> Result<(Sn3Class, Option<String>)> {
    if !g.is_connected() || !g.is_bipartite() {
        return Err(Error::NotApplicable(
            "classification needs a connected bipartite graph".into(),
        ));
    }
    for (class, name, t) in templates(g.order())? {
        if are_isomorphic(g, &t) {
            return Ok((class, Some(name)));
        }
    }
    Ok((Sn3Class::Other, None))
}

/// Which class the structural characterisations put `G` in, decided by
/// isomorphism against the listed families; `Other` if none matches.
///
/// ```
/// use sudoku_chroma::graph::{build_complete_bipartite, build_path};
/// use sudoku_chroma::theorems::{classify_sn3, Sn3Class};
///
/// assert_eq!(classify_sn3(&build_complete_bipartite(1, 5)?)?, Sn3Class::NMinus1);
/// assert_eq!(classify_sn3(&build_path(6)?)?, Sn3Class::NMinus2);
/// assert_eq!(classify_sn3(&build_path(7)?)?, Sn3Class::Other);
/// # Ok::<(), sudoku_chroma::Error>(())
/// ```
pub fn classify_sn3(g: &Graph) -> Result<Sn3Class> {
    Ok(classify_named(g)?.0)
}

/// Report for one census graph: the structural class against the class
/// implied by the exact `sn(G, 3)`.
pub(crate) fn census_instance(g: &Graph, config: &SearchConfig) -> Result<CheckReport> {
    let start = Instant::now();
    let mut r = CheckReport::new("census", "graph6", &emit_graph6(g));
    let (predicted, name) = classify_named(g)?;
    let sn = sudoku_number_with(g, 3, config)?.sn;
    let computed = Sn3Class::from_value(g.order(), sn);
    r.n = g.order();
    r.k = 3;
    r.predicted = predicted.to_string();
    r.computed = computed.to_string();
    r.note = format!("sn = {sn}; {}", name.as_deref().unwrap_or("no listed family"));
    let mut r = r.decide(predicted == computed);
    r.millis = start.elapsed().as_millis() as u64;
    Ok(r)
}

/// Classifies every connected bipartite graph of order at most `n_max` both
/// ways. A mismatch in either direction is reported, never suppressed.
pub fn census_check(n_max: usize, config: &SearchConfig) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for g in enumerate_connected_bipartite(n)? {
            out.push(census_instance(&g, config)?);
        }
    }
    Ok(out)
}
