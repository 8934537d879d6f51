use crate::graph::Vertex;

/// A minimum vertex cover of `edges`, as a vertex bitmask.
///
/// Branch and bound: pick the first uncovered edge, branch on either
/// endpoint, and cut when the chosen set plus a greedy matching of the
/// remaining edges cannot beat the best cover so far.
pub(crate) fn minimum_vertex_cover(edges: &[(Vertex, Vertex)]) -> u64 {
    let mut best = edges.iter().fold(0u64, |m, &(u, _)| m | 1 << u);
    branch(edges, 0, &mut best);
    best
}

fn matching_bound(edges: &[(Vertex, Vertex)], chosen: u64) -> u32 {
    let mut used = chosen;
    let mut size = 0;
    for &(u, v) in edges {
        if used & (1 << u | 1 << v) == 0 {
            used |= 1 << u | 1 << v;
            size += 1;
        }
    }
    size
}

fn branch(edges: &[(Vertex, Vertex)], chosen: u64, best: &mut u64) {
    let open = edges.iter().find(|&&(u, v)| chosen & (1 << u | 1 << v) == 0);
    let Some(&(u, v)) = open else {
        if chosen.count_ones() < best.count_ones() {
            *best = chosen;
        }
        return;
    };
    if chosen.count_ones() + matching_bound(edges, chosen) >= best.count_ones() {
        return;
    }
    branch(edges, chosen | 1 << u, best);
    branch(edges, chosen | 1 << v, best);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(n: usize, edges: &[(usize, usize)]) -> u32 {
        (0u64..1 << n)
            .filter(|&m| edges.iter().all(|&(u, v)| m & (1 << u | 1 << v) != 0))
            .map(|m| m.count_ones())
            .min()
            .unwrap()
    }

    #[test]
    fn small_covers() {
        assert_eq!(minimum_vertex_cover(&[]), 0);
        let path: Vec<_> = (0..5).map(|i| (i, i + 1)).collect();
        assert_eq!(minimum_vertex_cover(&path).count_ones(), 3);
        let cycle: Vec<_> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
        assert_eq!(minimum_vertex_cover(&cycle).count_ones(), 4);
        let k4: Vec<_> = (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v))).collect();
        assert_eq!(minimum_vertex_cover(&k4).count_ones(), 3);
    }

    #[test]
    fn matches_brute_force() {
        let mut state = 12345u64;
        for _ in 0..200 {
            let n = 8;
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    state = state
                        .wrapping_mul(6364136223846793005)
                        .wrapping_add(1442695040888963407);
                    if state >> 61 < 3 {
                        edges.push((u, v));
                    }
                }
            }
            let c = minimum_vertex_cover(&edges);
            assert!(edges.iter().all(|&(u, v)| c & (1 << u | 1 << v) != 0));
            assert_eq!(c.count_ones(), brute(n, &edges));
        }
    }
}
