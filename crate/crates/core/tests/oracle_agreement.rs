//! Values that have no closed form to lean on, checked against plain
//! enumeration in the oracle crate.

use sudoku_chroma::coloring::{chromatic_number, clique_number};
use sudoku_chroma::graph::*;
use sudoku_chroma::search::{sudoku_number, SearchConfig};
use sudoku_chroma::theorems::{check_supergraph_inequality, classify_sn3, Sn3Class};
use sudoku_chroma_oracle as oracle;

fn edges(g: &Graph) -> Vec<(usize, usize)> {
    g.edges().collect()
}

fn oracle_sn(g: &Graph, k: usize) -> usize {
    oracle::sudoku_number(g.order(), &edges(g), k).unwrap()
}

fn sn(g: &Graph, k: usize) -> usize {
    sudoku_number(g, k).unwrap().sn
}

#[test]
fn enumeration_counts_match_exhaustive_relabelling() {
    for n in 1..=6 {
        let bip = enumerate_connected_bipartite(n).unwrap().count();
        assert_eq!(bip, oracle::count_connected_classes(n, true), "bipartite, order {n}");
        let all = enumerate_connected(n).unwrap().len();
        assert_eq!(all, oracle::count_connected_classes(n, false), "connected, order {n}");
    }
    assert_eq!(enumerate_connected_bipartite(4).unwrap().count(), 3);
    assert_eq!(enumerate_connected_bipartite(7).unwrap().count(), 44);
}

#[test]
fn enumerated_graphs_are_pairwise_non_isomorphic() {
    for n in 1..=5 {
        let gs: Vec<Graph> = enumerate_connected(n).unwrap();
        for (i, a) in gs.iter().enumerate() {
            for b in &gs[i + 1..] {
                assert!(!oracle::isomorphic(n, &edges(a), &edges(b)));
            }
        }
    }
}

#[test]
fn isomorphism_agrees_with_brute_force() {
    let gs: Vec<Graph> = (0..60).map(|s| random_graph(6, 0.5, s).unwrap()).collect();
    for a in &gs[..20] {
        for b in &gs {
            let expect = oracle::isomorphic(6, &edges(a), &edges(b));
            assert_eq!(are_isomorphic(a, b), expect);
        }
    }
}

#[test]
fn graph6_round_trips_through_an_independent_decoder() {
    for seed in 0..50 {
        let g = random_graph(1 + seed as usize % 9, 0.45, seed).unwrap();
        let code = emit_graph6(&g);
        let (n, decoded) = oracle::decode_graph6(&code);
        assert_eq!((n, decoded), (g.order(), edges(&g)), "{code}");
        assert_eq!(parse_graph6(&code).unwrap(), g);
    }
}

#[test]
fn chromatic_and_clique_numbers() {
    for n in 1..=6 {
        for g in enumerate_connected(n).unwrap() {
            let chi = chromatic_number(&g);
            assert_eq!(chi, oracle::chromatic_number(n, &edges(&g)));
            assert!(chi >= clique_number(&g).unwrap());
        }
    }
    for g in enumerate_connected_bipartite(7).unwrap() {
        assert!(chromatic_number(&g) >= clique_number(&g).unwrap());
    }
}

#[test]
fn connected_bipartite_graphs_are_fixed_by_one_vertex_with_two_colours() {
    for n in 2..=6 {
        for g in enumerate_connected_bipartite(n).unwrap() {
            assert_eq!(sn(&g, 2), 1);
            assert_eq!(oracle_sn(&g, 2), 1);
        }
    }
}

#[test]
fn small_named_values() {
    let c4 = build_cycle(4).unwrap();
    assert_eq!((sn(&c4, 2), sn(&c4, 3), sn(&c4, 4)), (1, 2, 4));
    assert_eq!((oracle_sn(&c4, 2), oracle_sn(&c4, 3), oracle_sn(&c4, 4)), (1, 2, 4));

    let k4 = attach_clique(&build_path(2).unwrap(), 0, 1, 4).unwrap();
    assert!(are_isomorphic(&k4, &build_complete(4).unwrap()));
    assert_eq!(sn(&k4, 4), 3);
    assert_eq!(oracle_sn(&k4, 4), 3);

    let k3 = build_complete(3).unwrap();
    assert_eq!(sn(&k3, 4), 3);
    assert_eq!(oracle_sn(&k3, 4), 3);

    let p7 = build_path(7).unwrap();
    assert_eq!(oracle_sn(&p7, 3), 4);
    assert_eq!(oracle_sn(&build_cycle(5).unwrap(), 3), 3);
    assert_eq!(classify_sn3(&p7).unwrap(), Sn3Class::Other);
}

#[test]
fn max_degree_threshold_on_small_connected_graphs() {
    for n in 1..=5 {
        for g in enumerate_connected(n).unwrap() {
            let e = edges(&g);
            let chi = oracle::chromatic_number(n, &e);
            for k in chi..=g.max_degree() + 3 {
                let s = oracle_sn(&g, k);
                assert_eq!(sn(&g, k), s, "{} k={k}", emit_graph6(&g));
                assert_eq!(s == n, k >= g.max_degree() + 2, "{} k={k}", emit_graph6(&g));
            }
        }
    }
}

#[test]
fn census_values_match_the_oracle() {
    for n in 1..=6 {
        for g in enumerate_connected_bipartite(n).unwrap() {
            let s = oracle_sn(&g, 3);
            assert_eq!(sn(&g, 3), s);
            assert_eq!(
                classify_sn3(&g).unwrap(),
                Sn3Class::from_value(n, s),
                "{}",
                emit_graph6(&g)
            );
        }
    }
}

#[test]
fn inequality_sides_for_the_four_cycle() {
    let c4 = build_cycle(4).unwrap();
    let h = attach_clique(&c4, 0, 1, 4).unwrap();
    let left = oracle_sn(&h, 4);
    let right = oracle_sn(&c4, 4) + 1;
    assert!(left <= right);
    let r = check_supergraph_inequality(&FamilySpec::Cycle(4), (0, 1), 4, &SearchConfig::default()).unwrap();
    assert_eq!(r.computed, left.to_string());
    assert_eq!(r.predicted, format!("<={right}"));
}

#[test]
fn disconnected_graphs_are_solved_literally() {
    // two disjoint edges and an isolated vertex
    let g = Graph::from_edges(5, [(0, 1), (2, 3)]).unwrap();
    for k in 2..=3 {
        assert_eq!(sn(&g, k), oracle_sn(&g, k));
    }
}

#[test]
fn disjoint_unions_add_up_on_small_cases() {
    for seed in 0..40u64 {
        let a = random_graph(2 + seed as usize % 3, 0.6, seed).unwrap();
        let b = random_graph(2 + seed as usize % 4, 0.6, seed + 100).unwrap();
        let shift = a.order();
        let both = edges(&a)
            .into_iter()
            .chain(edges(&b).into_iter().map(|(u, v)| (u + shift, v + shift)));
        let g = Graph::from_edges(shift + b.order(), both).unwrap();
        let k = oracle::chromatic_number(g.order(), &edges(&g)).max(2);
        let whole = oracle_sn(&g, k);
        assert_eq!(whole, oracle_sn(&a, k) + oracle_sn(&b, k), "seed {seed}");
        assert_eq!(sn(&g, k), whole);
    }
}
