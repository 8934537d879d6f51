//! Seeded property suites shared by the `properties` and `acceptance` targets.
//!
//! Every suite draws random small graphs and partial colourings and checks
//! the library against the brute-force oracle or against itself under a
//! transformation that must not change the answer.

#![allow(dead_code)]

use proptest::collection::vec;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

use sudoku_chroma::coloring::{
    chromatic_number, count_extensions, propagate, ExtensionCount, PartialColoring, Propagation,
};
use sudoku_chroma::graph::Graph;
use sudoku_chroma::search::{canonical_form, sudoku_number_with, SearchConfig};
use sudoku_chroma_oracle as oracle;

pub const DEFAULT_SEED: u64 = 0x5eed_c010;
pub const CASES: u32 = 1000;
/// Cap large enough that every count on these sizes is exact (`4^8 < cap`).
const EXACT_CAP: u64 = 1 << 20;

/// Seed from `SUDOKU_CHROMA_SEED` if set, else [`DEFAULT_SEED`].
pub fn seed() -> u64 {
    std::env::var("SUDOKU_CHROMA_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

pub fn runner(cases: u32, seed: u64) -> TestRunner {
    let bytes: Vec<u8> = seed.to_le_bytes().iter().copied().cycle().take(32).collect();
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &bytes))
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub k: usize,
    /// 0 means uncoloured; improper entries have already been dropped.
    pub partial: Vec<u8>,
    /// Random sort keys, used to derive a colour permutation and subsets.
    pub keys: Vec<u32>,
}

impl Instance {
    pub fn graph(&self) -> Graph {
        Graph::from_edges(self.n, self.edges.iter().copied()).unwrap()
    }

    pub fn coloring(&self) -> PartialColoring {
        let pairs = self
            .partial
            .iter()
            .enumerate()
            .filter(|p| *p.1 != 0)
            .map(|(v, &c)| (v, c as usize));
        PartialColoring::from_pairs(self.k, pairs).unwrap()
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.coloring().iter().collect()
    }

    /// A permutation of `1..=k`; entry `c - 1` is the new name of `c`.
    pub fn permutation(&self) -> Vec<usize> {
        let mut colours: Vec<usize> = (1..=self.k).collect();
        colours.sort_by_key(|&c| self.keys[c - 1]);
        colours
    }
}

/// Graphs of order `1..=max_n`, edge density about 0.4, `k` in `2..=4`.
pub fn instances(max_n: usize) -> impl Strategy<Value = Instance> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (
            Just(n),
            vec(prop::bool::weighted(0.4), pairs),
            2..=4usize,
            vec(0..=4u8, n),
            vec(any::<u32>(), 16),
        )
            .prop_map(|(n, bits, k, raw, keys)| {
                let all = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
                let edges: Vec<_> = all.zip(bits).filter(|p| p.1).map(|p| p.0).collect();
                let mut partial = vec![0u8; n];
                for v in 0..n {
                    let c = raw[v] % (k as u8 + 1);
                    let clash = edges
                        .iter()
                        .any(|&(a, b)| (a == v && partial[b] == c) || (b == v && partial[a] == c));
                    if c != 0 && !clash {
                        partial[v] = c;
                    }
                }
                Instance {
                    n,
                    edges,
                    k,
                    partial,
                    keys,
                }
            })
    })
}

fn exact(c: ExtensionCount) -> u64 {
    c.value()
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(TestCaseError::fail(format!($($fmt)+)));
        }
    };
}

/// Renaming colours never changes the number of extensions, and the
/// canonical renaming of a Sudoku colouring is again one.
pub fn permutation_invariance(cases: u32, seed: u64) -> Result<(), String> {
    runner(cases, seed)
        .run(&instances(8), |inst| {
            let g = inst.graph();
            let c = inst.coloring();
            let a = count_extensions(&g, &c, EXACT_CAP).unwrap();
            let b = count_extensions(&g, &c.permuted(&inst.permutation()).unwrap(), EXACT_CAP).unwrap();
            ensure!(a == b, "count {a} vs permuted {b}");
            let canon = count_extensions(&g, &canonical_form(&c), EXACT_CAP).unwrap();
            ensure!(a == canon, "count {a} vs canonical {canon}");
            Ok(())
        })
        .map_err(|e| e.to_string())
}

/// Singleton propagation preserves the extension count, detects exactly
/// the inextensible inputs, and the count matches naive enumeration.
pub fn propagation_equivalence(cases: u32, seed: u64) -> Result<(), String> {
    runner(cases, seed)
        .run(&instances(7), |inst| {
            let g = inst.graph();
            let c = inst.coloring();
            let direct = exact(count_extensions(&g, &c, EXACT_CAP).unwrap());
            let naive = oracle::count_extensions(inst.n, &inst.edges, inst.k, &inst.pairs()) as u64;
            ensure!(direct == naive, "engine {direct} vs oracle {naive}");
            match propagate(&g, &c).unwrap() {
                Propagation::Contradiction => ensure!(direct == 0, "contradiction but {direct} extensions"),
                Propagation::Fixpoint(p) => {
                    ensure!(
                        direct > 0 || p.len() < inst.n,
                        "fixpoint colours everything yet count is 0"
                    );
                    let after = exact(count_extensions(&g, &p, EXACT_CAP).unwrap());
                    ensure!(after == direct, "count {direct} before propagation, {after} after");
                }
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}

/// The pruned search, the unpruned search and the oracle agree on
/// `sn(G, k)` for `k` in `{χ, χ+1}`, and both searches return the same
/// certificate.
pub fn pruning_equivalence(cases: u32, seed: u64) -> Result<(), String> {
    runner(cases, seed)
        .run(&(instances(7), any::<bool>()), |(inst, plus_one)| {
            let g = inst.graph();
            let k = oracle::chromatic_number(inst.n, &inst.edges) + plus_one as usize;
            let pruned = SearchConfig {
                limit: 64,
                ..SearchConfig::default()
            };
            let unpruned = SearchConfig { prune: false, ..pruned };
            let a = sudoku_number_with(&g, k, &pruned).unwrap();
            let b = sudoku_number_with(&g, k, &unpruned).unwrap();
            let o = oracle::sudoku_number(inst.n, &inst.edges, k).unwrap();
            ensure!(
                a.sn == o && b.sn == o,
                "pruned {} unpruned {} oracle {o} (k = {k})",
                a.sn,
                b.sn
            );
            ensure!(a.certificate == b.certificate, "certificates differ");
            ensure!(a.lower_bound <= a.sn, "lower bound {} above {}", a.lower_bound, a.sn);
            Ok(())
        })
        .map_err(|e| e.to_string())
}

/// Every certificate verifies, and the oracle confirms that its `C0` has
/// exactly one extension and that the extension is `F`.
pub fn certificate_verification(cases: u32, seed: u64) -> Result<(), String> {
    runner(cases, seed)
        .run(&instances(7), |inst| {
            let g = inst.graph();
            let k = oracle::chromatic_number(inst.n, &inst.edges).max(inst.k);
            let r = sudoku_number_with(&g, k, &SearchConfig::default()).unwrap();
            let cert = &r.certificate;
            ensure!(cert.verify(&g).is_ok(), "certificate rejected: {:?}", cert.verify(&g));
            let all = oracle::proper_colorings(inst.n, &inst.edges, k);
            let matching: Vec<_> = all
                .iter()
                .filter(|f| cert.c0.iter().all(|&(v, c)| f[v] as usize == c))
                .collect();
            ensure!(matching.len() == 1, "oracle finds {} extensions", matching.len());
            let f: Vec<usize> = cert.f.iter().map(|p| p.1).collect();
            let o: Vec<usize> = matching[0].iter().map(|&c| c as usize).collect();
            ensure!(f == o, "F = {f:?}, oracle extension {o:?}");
            Ok(())
        })
        .map_err(|e| e.to_string())
}

/// Fixing `F` on any superset of the witness set still pins down `F`.
pub fn superset_monotonicity(cases: u32, seed: u64) -> Result<(), String> {
    runner(cases, seed)
        .run(&instances(10), |inst| {
            let g = inst.graph();
            let k = chromatic_number(&g).max(inst.k);
            let r = sudoku_number_with(&g, k, &SearchConfig::default()).unwrap();
            let f = r.certificate.f.clone();
            let extra: Vec<usize> = (0..inst.n).filter(|&v| inst.keys[v] % 2 == 0).collect();
            let mut superset = r.certificate.s.clone();
            superset.extend(extra);
            superset.sort_unstable();
            superset.dedup();
            let restricted =
                PartialColoring::from_pairs(k, f.iter().copied().filter(|p| superset.contains(&p.0))).unwrap();
            let count = count_extensions(&g, &restricted, 2).unwrap();
            ensure!(
                count == ExtensionCount::ExactlyOne,
                "superset {superset:?} gives {count}"
            );
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub type Suite = fn(u32, u64) -> Result<(), String>;

pub const SUITES: [(&str, Suite); 5] = [
    ("colour-permutation invariance", permutation_invariance),
    ("propagation equivalence", propagation_equivalence),
    ("pruned and unpruned search agree", pruning_equivalence),
    ("certificate re-verification", certificate_verification),
    ("superset monotonicity", superset_monotonicity),
];
