use super::engine::State;
use crate::error::{Error, Result};
use crate::graph::{bits, Graph, Vertex};

/// Default order limit for exact clique search.
pub const DEFAULT_CLIQUE_LIMIT: usize = 16;

/// χ(G), found as the least `k` above a greedy clique bound for which the
/// empty colouring extends.
pub fn chromatic_number(g: &Graph) -> usize {
    let mut k = greedy_clique(g).len().max(1);
    loop {
        if State::new(g, k).extendable(g) {
            return k;
        }
        k += 1;
    }
}

fn greedy_clique(g: &Graph) -> Vec<Vertex> {
    let mut best = Vec::new();
    for start in 0..g.order() {
        let mut clique = vec![start];
        let mut cand = g.neighbor_mask(start);
        while cand != 0 {
            let v = bits(cand)
                .max_by_key(|&v| ((g.neighbor_mask(v) & cand).count_ones(), std::cmp::Reverse(v)))
                .unwrap();
            clique.push(v);
            cand &= g.neighbor_mask(v);
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

/// ω(G) by branch and bound, for graphs of order at most
/// [`DEFAULT_CLIQUE_LIMIT`].
pub fn clique_number(g: &Graph) -> Result<usize> {
    Ok(maximum_clique_with_limit(g, DEFAULT_CLIQUE_LIMIT)?.len())
}

/// A maximum clique; among those of maximum size, the lexicographically
/// smallest sorted vertex list.
pub fn maximum_clique(g: &Graph) -> Result<Vec<Vertex>> {
    maximum_clique_with_limit(g, DEFAULT_CLIQUE_LIMIT)
}

pub fn maximum_clique_with_limit(g: &Graph, limit: usize) -> Result<Vec<Vertex>> {
    if g.order() > limit {
        return Err(Error::LimitExceeded {
            what: "order for exact clique search",
            value: g.order(),
            limit,
        });
    }
    let mut best = 0u64;
    expand(g, 0, g.vertex_mask(), &mut best);
    Ok(bits(best).collect())
}

// Candidates are tried in increasing order and only strictly larger cliques
// replace `best`, so the first maximum clique found is the lexicographic minimum.
fn expand(g: &Graph, current: u64, mut cand: u64, best: &mut u64) {
    if cand == 0 {
        if current.count_ones() > best.count_ones() {
            *best = current;
        }
        return;
    }
    while cand != 0 {
        if current.count_ones() + cand.count_ones() <= best.count_ones() {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        expand(g, current | 1 << v, cand & g.neighbor_mask(v), best);
        cand &= !(1u64 << v);
    }
    if current.count_ones() > best.count_ones() {
        *best = current;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;

    #[test]
    fn chromatic_numbers() {
        assert_eq!(chromatic_number(&build_cycle(4).unwrap()), 2);
        assert_eq!(chromatic_number(&build_cycle(5).unwrap()), 3);
        assert_eq!(chromatic_number(&build_complete(3).unwrap()), 3);
        assert_eq!(chromatic_number(&Graph::empty(3).unwrap()), 1);
        let h = attach_clique(&build_path(6).unwrap(), 2, 3, 5).unwrap();
        assert_eq!(chromatic_number(&h), 5);
        // Petersen graph: χ = 3, ω = 2
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
        let petersen = Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap();
        assert_eq!(chromatic_number(&petersen), 3);
        assert_eq!(clique_number(&petersen).unwrap(), 2);
    }

    #[test]
    fn clique_numbers() {
        assert_eq!(clique_number(&build_cycle(6).unwrap()).unwrap(), 2);
        assert_eq!(clique_number(&build_complete_bipartite(3, 4).unwrap()).unwrap(), 2);
        let h = attach_clique(&build_path(6).unwrap(), 2, 3, 5).unwrap();
        assert_eq!(clique_number(&h).unwrap(), 5);
        assert_eq!(maximum_clique(&h).unwrap(), vec![2, 3, 6, 7, 8]);
        assert_eq!(maximum_clique(&build_path(4).unwrap()).unwrap(), vec![0, 1]);
        assert_eq!(clique_number(&Graph::empty(1).unwrap()).unwrap(), 1);
        assert!(clique_number(&build_path(17).unwrap()).is_err());
    }
}
