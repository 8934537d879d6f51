//! Partial proper colourings and the exact extension counter.
//!
//! Everything else in the crate reduces to one question answered here: how
//! many proper `k`-colourings of the whole graph agree with a given partial
//! colouring? [`count_extensions`] answers it exactly, up to a cap, by
//! backtracking with singleton-list propagation. Branching always picks the
//! uncoloured vertex with the shortest list (lowest index on ties) and tries
//! its colours in increasing order, so results and the first extension found
//! are deterministic.

mod chromatic;
pub(crate) mod engine;

use std::collections::BTreeMap;
use std::fmt;

pub use chromatic::{chromatic_number, clique_number, maximum_clique, maximum_clique_with_limit, DEFAULT_CLIQUE_LIMIT};
use engine::{full_mask, State};

use crate::error::{Error, Result};
use crate::graph::{bits, Graph, Vertex};

/// Largest supported colour budget.
pub const MAX_COLORS: usize = 64;

/// Default counting cap: enough to tell none / one / several apart.
pub const DEFAULT_CAP: u64 = 2;

/// A set of colours from `1..=k`, stored as a bitmask (bit `c - 1` for colour `c`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ColorSet(pub u64);

impl ColorSet {
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, c: usize) -> bool {
        (1..=64).contains(&c) && self.0 >> (c - 1) & 1 == 1
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        bits(self.0).map(|b| b + 1)
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for ColorSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        ColorSet(iter.into_iter().fold(0, |m, c| m | 1 << (c - 1)))
    }
}

/// An assignment of colours `1..=k` to some subset `S` of the vertices.
///
/// Properness is not part of the type; see [`is_proper_partial`].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PartialColoring {
    k: usize,
    assignment: BTreeMap<Vertex, usize>,
}

impl PartialColoring {
    pub fn new(k: usize) -> Self {
        PartialColoring {
            k,
            assignment: BTreeMap::new(),
        }
    }

    /// Builds a colouring from `(vertex, colour)` pairs, rejecting colours
    /// outside `1..=k` and vertices listed twice.
    pub fn from_pairs(k: usize, pairs: impl IntoIterator<Item = (Vertex, usize)>) -> Result<Self> {
        let mut pc = PartialColoring::new(k);
        for (v, c) in pairs {
            if pc.assignment.contains_key(&v) {
                return Err(Error::param(format!("vertex {v} is coloured twice")));
            }
            pc.set(v, c)?;
        }
        Ok(pc)
    }

    /// Colours `v` with `c`, replacing any previous colour.
    pub fn set(&mut self, v: Vertex, c: usize) -> Result<()> {
        if c == 0 || c > self.k {
            return Err(Error::InvalidColor {
                vertex: v,
                color: c,
                k: self.k,
            });
        }
        self.assignment.insert(v, c);
        Ok(())
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn get(&self, v: Vertex) -> Option<usize> {
        self.assignment.get(&v).copied()
    }

    /// The coloured set `S`, sorted.
    pub fn domain(&self) -> Vec<Vertex> {
        self.assignment.keys().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    /// `(vertex, colour)` pairs in vertex order.
    pub fn iter(&self) -> impl Iterator<Item = (Vertex, usize)> + '_ {
        self.assignment.iter().map(|(&v, &c)| (v, c))
    }

    /// Restriction to the given vertices (vertices not coloured here are ignored).
    pub fn restrict(&self, vertices: &[Vertex]) -> PartialColoring {
        PartialColoring {
            k: self.k,
            assignment: vertices.iter().filter_map(|&v| self.get(v).map(|c| (v, c))).collect(),
        }
    }

    /// Renames colours by `perm`, where `perm[c - 1]` is the new name of `c`.
    /// `perm` must be a permutation of `1..=k`.
    pub fn permuted(&self, perm: &[usize]) -> Result<PartialColoring> {
        let mut seen = vec![false; self.k + 1];
        let valid = perm.len() == self.k
            && perm
                .iter()
                .all(|&c| (1..=self.k).contains(&c) && !std::mem::replace(&mut seen[c], true));
        if !valid {
            return Err(Error::param(format!("{perm:?} is not a permutation of 1..={}", self.k)));
        }
        Ok(PartialColoring {
            k: self.k,
            assignment: self.assignment.iter().map(|(&v, &c)| (v, perm[c - 1])).collect(),
        })
    }

    /// Parses the `v c` line format. Blank lines and `#` comments are skipped.
    pub fn parse(text: &str, k: usize) -> Result<Self> {
        let mut pc = PartialColoring::new(k);
        for (i, line) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let nums: Vec<usize> = line
                .split_whitespace()
                .map(|t| {
                    t.parse()
                        .map_err(|_| Error::parse(line_no, format!("{t:?} is not a non-negative integer")))
                })
                .collect::<Result<_>>()?;
            let [v, c] = nums[..] else {
                return Err(Error::parse(line_no, "expected `vertex colour`"));
            };
            if pc.get(v).is_some() {
                return Err(Error::parse(line_no, format!("vertex {v} is coloured twice")));
            }
            pc.set(v, c).map_err(|e| Error::parse(line_no, e.to_string()))?;
        }
        Ok(pc)
    }

    /// Inverse of [`PartialColoring::parse`], one `v c` line per coloured vertex.
    pub fn emit(&self) -> String {
        self.iter().map(|(v, c)| format!("{v} {c}\n")).collect()
    }

    fn check_against(&self, g: &Graph) -> Result<()> {
        if self.k == 0 || self.k > MAX_COLORS {
            return Err(Error::param(format!("k = {} outside 1..={MAX_COLORS}", self.k)));
        }
        if let Some((&v, _)) = self.assignment.iter().next_back() {
            if v >= g.order() {
                return Err(Error::param(format!("coloured vertex {v} outside 0..{}", g.order())));
            }
        }
        Ok(())
    }

    fn first_conflict(&self, g: &Graph) -> Option<(Vertex, Vertex, usize)> {
        self.iter().find_map(|(u, c)| {
            g.neighbors(u)
                .find(|&v| v > u && self.get(v) == Some(c))
                .map(|v| (u, v, c))
        })
    }

    /// Working state with every coloured vertex assigned. `None` when the
    /// assignment already empties some uncoloured vertex's list.
    pub(crate) fn to_state(&self, g: &Graph) -> Result<Option<State>> {
        self.check_against(g)?;
        if let Some((u, v, color)) = self.first_conflict(g) {
            return Err(Error::ImproperInput { u, v, color });
        }
        let mut st = State::new(g, self.k);
        let mut ok = true;
        for (v, c) in self.iter() {
            ok &= st.assign(g, v, c as u8);
        }
        Ok(ok.then_some(st))
    }
}

/// Colour lists `L(v)` of the uncoloured vertices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ColorList {
    pub lists: BTreeMap<Vertex, ColorSet>,
}

impl ColorList {
    pub fn get(&self, v: Vertex) -> Option<ColorSet> {
        self.lists.get(&v).copied()
    }
}

/// Number of proper extensions, as far as it was counted.
///
/// `AtLeast(c)` carries the number of extensions found before the search
/// stopped. With the default cap of 2 it simply means "more than one"; when
/// `c` is below the cap that was passed in, `c` is the exact count.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ExtensionCount {
    Zero,
    ExactlyOne,
    AtLeast(u64),
}

impl ExtensionCount {
    fn from_count(n: u64) -> Self {
        match n {
            0 => ExtensionCount::Zero,
            1 => ExtensionCount::ExactlyOne,
            n => ExtensionCount::AtLeast(n),
        }
    }

    /// The counted number of extensions (a lower bound when the cap was hit).
    pub fn value(self) -> u64 {
        match self {
            ExtensionCount::Zero => 0,
            ExtensionCount::ExactlyOne => 1,
            ExtensionCount::AtLeast(n) => n,
        }
    }
}

impl fmt::Display for ExtensionCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtensionCount::Zero => write!(f, "Zero"),
            ExtensionCount::ExactlyOne => write!(f, "ExactlyOne"),
            ExtensionCount::AtLeast(n) => write!(f, "AtLeast({n})"),
        }
    }
}

/// Result of [`propagate`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Propagation {
    Fixpoint(PartialColoring),
    Contradiction,
}

/// True iff no edge joins two vertices of the same colour.
pub fn is_proper_partial(g: &Graph, c: &PartialColoring) -> Result<bool> {
    c.check_against(g)?;
    Ok(c.first_conflict(g).is_none())
}

fn require_proper(g: &Graph, c: &PartialColoring) -> Result<()> {
    c.check_against(g)?;
    match c.first_conflict(g) {
        Some((u, v, color)) => Err(Error::ImproperInput { u, v, color }),
        None => Ok(()),
    }
}

pub fn color_lists(g: &Graph, c: &PartialColoring) -> Result<ColorList> {
    require_proper(g, c)?;
    let full = full_mask(c.k());
    let lists = (0..g.order())
        .filter(|&v| c.get(v).is_none())
        .map(|v| {
            let used = g
                .neighbors(v)
                .filter_map(|u| c.get(u))
                .fold(0u64, |m, col| m | 1 << (col - 1));
            (v, ColorSet(full & !used))
        })
        .collect();
    Ok(ColorList { lists })
}

/// Repeatedly colours vertices whose list is a single colour.
///
/// The fixpoint has exactly the same proper extensions as the input.
pub fn propagate(g: &Graph, c: &PartialColoring) -> Result<Propagation> {
    let Some(mut st) = c.to_state(g)? else {
        return Ok(Propagation::Contradiction);
    };
    if !st.propagate(g) {
        return Ok(Propagation::Contradiction);
    }
    let pairs = (0..g.order())
        .filter(|&v| st.color[v] != 0)
        .map(|v| (v, st.color[v] as usize));
    Ok(Propagation::Fixpoint(PartialColoring::from_pairs(c.k(), pairs)?))
}

fn count_with_first(g: &Graph, c: &PartialColoring, cap: u64) -> Result<(u64, Option<Vec<u8>>)> {
    if cap < 2 {
        return Err(Error::param("counting cap must be at least 2"));
    }
    let mut first = None;
    let n = match c.to_state(g)? {
        Some(st) => st.count(g, cap, &mut first),
        None => 0,
    };
    Ok((n, first))
}

/// Number of proper `k`-colourings of `G` that agree with `c`, counted up to `cap`.
///
/// ```
/// use sudoku_chroma::coloring::{count_extensions, ExtensionCount, PartialColoring};
/// use sudoku_chroma::graph::build_complete;
///
/// let k3 = build_complete(3).unwrap();
/// let empty = PartialColoring::new(3);
/// assert_eq!(count_extensions(&k3, &empty, 2).unwrap(), ExtensionCount::AtLeast(2));
/// assert_eq!(count_extensions(&k3, &empty, 100).unwrap(), ExtensionCount::AtLeast(6));
/// ```
pub fn count_extensions(g: &Graph, c: &PartialColoring, cap: u64) -> Result<ExtensionCount> {
    Ok(ExtensionCount::from_count(count_with_first(g, c, cap)?.0))
}

/// The unique proper extension of `c`, as a colour per vertex.
pub fn unique_extension(g: &Graph, c: &PartialColoring) -> Result<Vec<usize>> {
    match count_with_first(g, c, 2)? {
        (0, _) => Err(Error::NotExtendable),
        (1, Some(f)) => Ok(f.into_iter().map(usize::from).collect()),
        _ => Err(Error::NotUnique),
    }
}
