//! Slow, obviously-correct reference computations.
//!
//! Everything here works on a plain `(n, edges)` description and uses
//! nothing but exhaustive enumeration, so it shares no code or ideas with
//! the search in `sudoku-chroma`. Only suitable for graphs of order about
//! ten or less.

pub type Edges = [(usize, usize)];

fn proper(edges: &Edges, col: &[u8]) -> bool {
    edges.iter().all(|&(u, v)| col[u] != col[v])
}

/// Every proper colouring with colours `1..=k`, in odometer order.
pub fn proper_colorings(n: usize, edges: &Edges, k: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    if k == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut col = vec![1u8; n];
    loop {
        if proper(edges, &col) {
            out.push(col.clone());
        }
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            if (col[i] as usize) < k {
                col[i] += 1;
                break;
            }
            col[i] = 1;
            i += 1;
        }
    }
}

/// Number of proper `k`-colourings agreeing with `partial`.
pub fn count_extensions(n: usize, edges: &Edges, k: usize, partial: &[(usize, usize)]) -> usize {
    proper_colorings(n, edges, k)
        .iter()
        .filter(|c| partial.iter().all(|&(v, col)| c[v] as usize == col))
        .count()
}

pub fn chromatic_number(n: usize, edges: &Edges) -> usize {
    (1..=n.max(1))
        .find(|&k| !proper_colorings(n, edges, k).is_empty())
        .unwrap_or(n)
}

/// `sn(G, k)` straight from the definition: the smallest `|S|` for which
/// some colouring of `S` is the restriction of exactly one proper colouring.
/// `None` when `G` has no proper `k`-colouring.
pub fn sudoku_number(n: usize, edges: &Edges, k: usize) -> Option<usize> {
    let all = proper_colorings(n, edges, k);
    if all.is_empty() {
        return None;
    }
    let mut masks: Vec<u64> = (0..1u64 << n).collect();
    masks.sort_by_key(|m| m.count_ones());
    for s in masks {
        let mut seen: std::collections::HashMap<Vec<u8>, usize> = Default::default();
        for c in &all {
            let key: Vec<u8> = (0..n).filter(|&v| s >> v & 1 == 1).map(|v| c[v]).collect();
            *seen.entry(key).or_default() += 1;
        }
        if seen.values().any(|&x| x == 1) {
            return Some(s.count_ones() as usize);
        }
    }
    unreachable!()
}

/// Whether colouring exactly `partial` pins down a unique proper `k`-colouring.
pub fn is_sudoku(n: usize, edges: &Edges, k: usize, partial: &[(usize, usize)]) -> bool {
    count_extensions(n, edges, k, partial) == 1
}

pub fn minimum_vertex_cover(n: usize, edges: &Edges) -> usize {
    (0..1u64 << n)
        .filter(|m| edges.iter().all(|&(u, v)| m >> u & 1 == 1 || m >> v & 1 == 1))
        .map(|m| m.count_ones() as usize)
        .min()
        .unwrap_or(0)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn edge_code(n: usize, edges: &Edges, perm: &[usize]) -> Vec<bool> {
    let mut m = vec![false; n * n];
    for &(u, v) in edges {
        let (a, b) = (perm[u], perm[v]);
        m[a * n + b] = true;
        m[b * n + a] = true;
    }
    m
}

/// Isomorphism by trying every vertex permutation.
pub fn isomorphic(n: usize, a: &Edges, b: &Edges) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let target = edge_code(n, b, &(0..n).collect::<Vec<_>>());
    permutations(n).iter().any(|p| edge_code(n, a, p) == target)
}

/// Lexicographically largest adjacency matrix over all relabellings.
pub fn canonical_code(n: usize, edges: &Edges) -> Vec<bool> {
    permutations(n).iter().map(|p| edge_code(n, edges, p)).max().unwrap()
}

pub fn is_connected(n: usize, edges: &Edges) -> bool {
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for &(a, b) in edges {
            for (x, y) in [(a, b), (b, a)] {
                if x == u && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Number of connected graphs of order `n` up to isomorphism, with
/// `bipartite_only` restricting to 2-colourable ones.
pub fn count_connected_classes(n: usize, bipartite_only: bool) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut classes = std::collections::HashSet::new();
    for mask in 0u64..1 << pairs.len() {
        let edges: Vec<_> = (0..pairs.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| pairs[i])
            .collect();
        if !is_connected(n, &edges) {
            continue;
        }
        if bipartite_only && proper_colorings(n, &edges, 2).is_empty() {
            continue;
        }
        classes.insert(canonical_code(n, &edges));
    }
    classes.len()
}

/// Decodes a graph6 string of order below 63, independently of the main parser.
pub fn decode_graph6(code: &str) -> (usize, Vec<(usize, usize)>) {
    let bytes: Vec<u8> = code.bytes().map(|b| b - 63).collect();
    let n = bytes[0] as usize;
    let mut bitstream = bytes[1..]
        .iter()
        .flat_map(|&b| (0..6).rev().map(move |i| b >> i & 1 == 1));
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if bitstream.next().unwrap_or(false) {
                edges.push((u, v));
            }
        }
    }
    edges.sort_unstable();
    (n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_values() {
        let p6: Vec<_> = (0..5).map(|i| (i, i + 1)).collect();
        assert_eq!(sudoku_number(6, &p6, 3), Some(4));
        let k3 = [(0, 1), (0, 2), (1, 2)];
        assert_eq!(proper_colorings(3, &k3, 3).len(), 6);
        assert_eq!(sudoku_number(3, &k3, 2), None);
        assert_eq!(chromatic_number(3, &k3), 3);
        assert_eq!(count_connected_classes(4, false), 6);
        assert_eq!(count_connected_classes(4, true), 3);
        assert_eq!(decode_graph6("C~").1.len(), 6);
    }
}
