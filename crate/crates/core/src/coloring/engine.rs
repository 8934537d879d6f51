use crate::graph::{bits, Graph, Vertex};

/// Working state of a partial colouring during search.
///
/// `color[v]` is 0 for uncoloured vertices, otherwise a colour in `1..=k`.
/// `avail[v]` holds bit `c - 1` for each colour `c` not used by a coloured
/// neighbour of `v`. It is only maintained for uncoloured vertices.
#[derive(Clone, Debug)]
pub(crate) struct State {
    pub color: Vec<u8>,
    pub avail: Vec<u64>,
    pub uncolored: u64,
}

#[inline]
pub(crate) fn full_mask(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

impl State {
    pub fn new(g: &Graph, k: usize) -> Self {
        State {
            color: vec![0; g.order()],
            avail: vec![full_mask(k); g.order()],
            uncolored: g.vertex_mask(),
        }
    }

    /// Colours `v` with `c`. Returns false when `c` is not available at `v`
    /// or when some uncoloured neighbour is left without colours.
    #[inline]
    pub fn assign(&mut self, g: &Graph, v: Vertex, c: u8) -> bool {
        let bit = 1u64 << (c - 1);
        if self.avail[v] & bit == 0 || self.uncolored >> v & 1 == 0 {
            return false;
        }
        self.color[v] = c;
        self.uncolored &= !(1u64 << v);
        let mut ok = true;
        for u in bits(g.neighbor_mask(v) & self.uncolored) {
            self.avail[u] &= !bit;
            ok &= self.avail[u] != 0;
        }
        ok
    }

    /// Assigns every singleton-list vertex until nothing changes. Returns
    /// false on a contradiction (an empty list).
    pub fn propagate(&mut self, g: &Graph) -> bool {
        loop {
            let mut changed = false;
            for v in bits(self.uncolored) {
                let a = self.avail[v];
                if a == 0 {
                    return false;
                }
                if a & (a - 1) == 0 {
                    if !self.assign(g, v, a.trailing_zeros() as u8 + 1) {
                        return false;
                    }
                    changed = true;
                }
            }
            if !changed {
                return true;
            }
        }
    }

    /// Uncoloured vertex with the fewest available colours, lowest index on ties.
    fn branch_vertex(&self) -> Option<Vertex> {
        bits(self.uncolored).min_by_key(|&v| (self.avail[v].count_ones(), v))
    }

    /// Counts proper completions of this state, stopping once `cap` are found.
    /// The first completion in search order is stored in `first`.
    pub fn count(mut self, g: &Graph, cap: u64, first: &mut Option<Vec<u8>>) -> u64 {
        if !self.propagate(g) {
            return 0;
        }
        let Some(v) = self.branch_vertex() else {
            if first.is_none() {
                *first = Some(self.color);
            }
            return 1;
        };
        let mut total = 0;
        for c in bits(self.avail[v]) {
            let mut next = self.clone();
            if next.assign(g, v, c as u8 + 1) {
                total += next.count(g, cap - total, first);
                if total >= cap {
                    break;
                }
            }
        }
        total
    }

    /// Whether at least one proper completion exists.
    pub fn extendable(self, g: &Graph) -> bool {
        self.count(g, 1, &mut None) > 0
    }
}
