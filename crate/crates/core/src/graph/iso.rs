//! Brute-force isomorphism testing for small graphs.
//!
//! The search maps vertices of `g` one at a time onto unused vertices of `h`
//! with the same degree and the same adjacency to everything mapped so far.
//! Exponential in the worst case, but instant at the orders the enumerator
//! and the classifier work with.

use super::{bits, Graph};

/// A cheap isomorphism invariant: for every vertex its degree and the sorted
/// degrees of its neighbours, sorted. Equal graphs have equal keys.
pub fn invariant_key(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    let deg = g.degrees();
    let mut key: Vec<(usize, Vec<usize>)> = (0..g.order())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).map(|u| deg[u]).collect();
            nd.sort_unstable();
            (deg[v], nd)
        })
        .collect();
    key.sort();
    key
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.size() != h.size() {
        return false;
    }
    if invariant_key(g) != invariant_key(h) {
        return false;
    }
    let n = g.order();
    // map high-degree vertices first, they constrain the most
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree_of(v)));
    let mut image = vec![usize::MAX; n];
    extend(g, h, &order, 0, &mut image, 0)
}

fn extend(g: &Graph, h: &Graph, order: &[usize], depth: usize, image: &mut [usize], used: u64) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    let dv = g.degree_of(v);
    for w in bits(h.vertex_mask() & !used) {
        if h.degree_of(w) != dv {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g.has_edge(u, v) == h.has_edge(image[u], w));
        if consistent {
            image[v] = w;
            if extend(g, h, order, depth + 1, image, used | 1 << w) {
                return true;
            }
        }
    }
    image[v] = usize::MAX;
    false
}
