//! Manifest-driven batches of checks.
//!
//! A manifest is a TOML file with an ordered list of `[[check]]` sections.
//! Each section expands into independent instances; instances may run on a
//! worker pool, but reports always come back in manifest order.
//!
//! ```toml
//! [[check]]
//! name = "paths"
//! kind = "family"
//! specs = ["path:2", "path:3"]
//!
//! [[check]]
//! name = "census"
//! kind = "census"
//! max_order = 5
//! ```

use rayon::prelude::*;
use serde::Deserialize;

use super::census::census_instance;
use super::checks::*;
use super::CheckReport;
use crate::error::{Error, Result};
use crate::graph::{enumerate_connected, enumerate_connected_bipartite, parse_graph6, FamilySpec, Graph, Vertex};
use crate::search::SearchConfig;

fn default_slack() -> usize {
    3
}

/// What a manifest section checks, with its instance list.
#[derive(Clone, Debug, Deserialize, PartialEq)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum CheckKind {
    /// Closed forms for `sn(G, 3)` on the named family instances.
    Family { specs: Vec<String> },
    /// Coronas `G∘lK_1` of every connected bipartite `G` up to `max_order`.
    Corona { max_order: usize, l: Vec<usize> },
    /// Cliques attached to paths: explicit `attach:` specs, plus every edge of
    /// `P_n` for each `n` in `paths` and `m` in `cliques`.
    Attach {
        #[serde(default)]
        specs: Vec<String>,
        #[serde(default)]
        paths: Vec<usize>,
        #[serde(default)]
        cliques: Vec<usize>,
    },
    /// `sn(G, k) = n` exactly for `k ≥ Δ + 2`, over all connected graphs up
    /// to `max_order` plus the graph6 `sample`, for `k` up to `Δ + slack`.
    Delta {
        max_order: usize,
        #[serde(default)]
        sample: Vec<String>,
        #[serde(default = "default_slack")]
        slack: usize,
    },
    /// Structural classes against the exact values over the bipartite census.
    Census { max_order: usize },
    /// `attach:` specs on bipartite bases, checked against the upper bound.
    Inequality { specs: Vec<String> },
    /// `apex:` specs; the listed vertices must form a maximum clique.
    Apex { specs: Vec<String> },
    /// Bases for the `(G2, G3)` construction.
    Embedding { bases: Vec<String> },
    /// `sn(G, k)` against a fixed expected value.
    Value {
        spec: String,
        k: Option<usize>,
        expect: usize,
    },
}

#[derive(Clone, Debug, Deserialize, PartialEq)]
pub struct Section {
    pub name: String,
    #[serde(flatten)]
    pub kind: CheckKind,
}

#[derive(Clone, Debug, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    #[serde(rename = "check")]
    pub sections: Vec<Section>,
}

impl Manifest {
    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e: toml::de::Error| {
            let line = e.span().map_or(0, |s| text[..s.start].matches('\n').count() + 1);
            Error::parse(line, e.message().to_string())
        })
    }

    pub fn section(&self, name: &str) -> Option<&Section> {
        self.sections.iter().find(|s| s.name == name)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Instances evaluated concurrently.
    pub threads: usize,
    /// Search settings for each instance; its own thread count is ignored.
    pub search: SearchConfig,
    /// Record wall-clock milliseconds; off gives byte-identical reports.
    pub timing: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            threads: 1,
            search: SearchConfig::default(),
            timing: true,
        }
    }
}

enum Task {
    Family(FamilySpec),
    Attach(FamilySpec),
    Delta(Graph, usize),
    Census(Graph),
    Inequality(FamilySpec),
    Apex(FamilySpec),
    Embedding(FamilySpec),
    Value(FamilySpec, Option<usize>, usize),
}

fn spec(text: &str) -> Result<FamilySpec> {
    text.parse()
}

fn expand(section: &Section) -> Result<Vec<Task>> {
    let mut tasks = Vec::new();
    match &section.kind {
        CheckKind::Family { specs } => {
            for s in specs {
                tasks.push(Task::Family(spec(s)?));
            }
        }
        CheckKind::Corona { max_order, l } => {
            for n in 1..=*max_order {
                for g in enumerate_connected_bipartite(n)? {
                    let base = FamilySpec::Graph6(crate::graph::emit_graph6(&g));
                    for &l in l {
                        tasks.push(Task::Family(FamilySpec::Corona {
                            base: Box::new(base.clone()),
                            l,
                        }));
                    }
                }
            }
        }
        CheckKind::Attach { specs, paths, cliques } => {
            for s in specs {
                tasks.push(Task::Attach(spec(s)?));
            }
            for &n in paths {
                for &m in cliques {
                    for u in 0..n.saturating_sub(1) {
                        tasks.push(Task::Attach(FamilySpec::AttachClique {
                            base: Box::new(FamilySpec::Path(n)),
                            u,
                            v: u + 1,
                            m,
                        }));
                    }
                }
            }
        }
        CheckKind::Delta {
            max_order,
            sample,
            slack,
        } => {
            let mut graphs = Vec::new();
            for n in 1..=*max_order {
                graphs.extend(enumerate_connected(n)?);
            }
            for code in sample {
                graphs.push(parse_graph6(code)?);
            }
            for g in graphs {
                let k_max = g.max_degree() + slack;
                tasks.push(Task::Delta(g, k_max));
            }
        }
        CheckKind::Census { max_order } => {
            for n in 1..=*max_order {
                tasks.extend(enumerate_connected_bipartite(n)?.map(Task::Census));
            }
        }
        CheckKind::Inequality { specs } => {
            for s in specs {
                tasks.push(Task::Inequality(spec(s)?));
            }
        }
        CheckKind::Apex { specs } => {
            for s in specs {
                tasks.push(Task::Apex(spec(s)?));
            }
        }
        CheckKind::Embedding { bases } => {
            for s in bases {
                tasks.push(Task::Embedding(spec(s)?));
            }
        }
        CheckKind::Value { spec: s, k, expect } => tasks.push(Task::Value(spec(s)?, *k, *expect)),
    }
    Ok(tasks)
}

fn attach_parts(s: &FamilySpec) -> Result<(&FamilySpec, (Vertex, Vertex), usize)> {
    match s {
        FamilySpec::AttachClique { base, u, v, m } => Ok((base, (*u, *v), *m)),
        _ => Err(Error::param(format!("{s} is not an attach: spec"))),
    }
}

fn run_task(task: &Task, config: &SearchConfig) -> CheckReport {
    let (check, label, result) = match task {
        Task::Family(s) => ("family", s.to_string(), check_family_instance(s, config)),
        Task::Attach(s) => ("attach", s.to_string(), check_attach_clique(s, config)),
        Task::Delta(g, k_max) => (
            "delta",
            format!("graph6:{}", crate::graph::emit_graph6(g)),
            check_delta_theorem(g, *k_max, config),
        ),
        Task::Census(g) => (
            "census",
            format!("graph6:{}", crate::graph::emit_graph6(g)),
            census_instance(g, config),
        ),
        Task::Inequality(s) => (
            "inequality",
            s.to_string(),
            attach_parts(s).and_then(|(b, e, m)| check_supergraph_inequality(b, e, m, config)),
        ),
        Task::Apex(s) => (
            "apex",
            s.to_string(),
            match s {
                FamilySpec::Apex { base, clique } => check_apex_with_clique(base, clique, config),
                _ => Err(Error::param(format!("{s} is not an apex: spec"))),
            },
        ),
        Task::Embedding(s) => ("embedding", s.to_string(), check_embedding(s, config)),
        Task::Value(s, k, expect) => ("value", s.to_string(), check_value(s, *k, *expect, config)),
    };
    result.unwrap_or_else(|e| {
        let (family, params) = label.split_once(':').unwrap_or((&label, ""));
        CheckReport::new(check, family, params).failed(&e)
    })
}

/// Runs every section of `manifest` and returns the reports in manifest
/// order. Instances that cannot be evaluated yield `error` reports; only
/// malformed sections abort the run.
pub fn run_suite(manifest: &Manifest, config: &SuiteConfig) -> Result<Vec<CheckReport>> {
    if config.threads == 0 {
        return Err(Error::param("thread count must be at least 1"));
    }
    let mut tasks = Vec::new();
    for section in &manifest.sections {
        tasks.extend(expand(section)?);
    }
    let search = SearchConfig {
        threads: 1,
        ..config.search
    };
    let mut reports: Vec<CheckReport> = if config.threads == 1 {
        tasks.iter().map(|t| run_task(t, &search)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.threads)
            .build()
            .map_err(|e| Error::param(format!("cannot start worker pool: {e}")))?;
        pool.install(|| tasks.par_iter().map(|t| run_task(t, &search)).collect())
    };
    if !config.timing {
        for r in &mut reports {
            r.millis = 0;
        }
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theorems::Verdict;

    const SMALL: &str = r#"
[[check]]
name = "paths"
kind = "family"
specs = ["path:2", "path:5"]

[[check]]
name = "attach"
kind = "attach"
paths = [3]
cliques = [4]

[[check]]
name = "delta"
kind = "delta"
max_order = 3

[[check]]
name = "census"
kind = "census"
max_order = 4

[[check]]
name = "wrong"
kind = "value"
spec = "path:6"
k = 3
expect = 5
"#;

    #[test]
    fn expands_in_manifest_order() {
        let m = Manifest::parse(SMALL).unwrap();
        assert_eq!(m.sections.len(), 5);
        let cfg = SuiteConfig {
            timing: false,
            ..SuiteConfig::default()
        };
        let reports = run_suite(&m, &cfg).unwrap();
        let ids: Vec<&str> = reports.iter().map(|r| r.instance_id.as_str()).collect();
        assert_eq!(
            ids[..4],
            [
                "family/path:2",
                "family/path:5",
                "attach/attach:path:3@0-1:K4",
                "attach/attach:path:3@1-2:K4"
            ]
        );
        // delta: 1 + 1 + 2 graphs; census: 1 + 1 + 1 + 3 graphs
        assert_eq!(reports.len(), 4 + 4 + 6 + 1);
        assert!(reports[..14].iter().all(|r| r.verdict == Verdict::Match));
        assert_eq!(reports[14].verdict, Verdict::Mismatch);

        let parallel = run_suite(&m, &SuiteConfig { threads: 4, ..cfg }).unwrap();
        assert_eq!(reports, parallel);
    }

    #[test]
    fn bad_sections() {
        assert!(Manifest::parse("[[check]]\nname = \"x\"\nkind = \"bogus\"\n").is_err());
        let m = Manifest::parse("[[check]]\nname = \"x\"\nkind = \"family\"\nspecs = [\"nope:3\"]\n").unwrap();
        assert!(run_suite(&m, &SuiteConfig::default()).is_err());
        let m = Manifest::parse("[[check]]\nname = \"x\"\nkind = \"family\"\nspecs = [\"complete:4\"]\n").unwrap();
        let r = run_suite(&m, &SuiteConfig::default()).unwrap();
        assert_eq!(r[0].verdict, Verdict::Error);
    }
}
