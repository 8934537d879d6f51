//! Closed-form predictions for `sn` on structured families, and checks that
//! compare them against the exact search.
//!
//! Predictors never call the search, and every [`CheckReport`] carries the
//! predicted and the computed value side by side, so a wrong formula shows
//! up as a mismatch rather than being absorbed.

mod census;
mod checks;
mod report;
mod suite;

use std::fmt;

pub use census::{census_check, classify_sn3, Sn3Class};
pub use checks::{
    check_apex_equality, check_apex_with_clique, check_attach_clique, check_delta_theorem, check_embedding,
    check_family, check_family_instance, check_supergraph_inequality, check_value,
};
pub use report::{CheckReport, Verdict, REPORT_COLUMNS};
pub use suite::{run_suite, CheckKind, Manifest, Section, SuiteConfig};

use crate::error::{Error, Result};
use crate::graph::FamilySpec;

/// Which closed formula a [`Prediction`] comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rule {
    Path,
    EvenCycle,
    Star,
    CompleteBipartite,
    Bistar,
    Corona,
    CliqueOnPathEdge,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::Path => "path",
            Rule::EvenCycle => "even-cycle",
            Rule::Star => "star",
            Rule::CompleteBipartite => "complete-bipartite",
            Rule::Bistar => "bistar",
            Rule::Corona => "corona",
            Rule::CliqueOnPathEdge => "clique-on-path-edge",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prediction {
    pub rule: Rule,
    pub value: usize,
    /// Why the formula's hypotheses hold for this instance.
    pub applicability: String,
}

fn not_applicable(spec: &FamilySpec, why: &str) -> Error {
    Error::NotApplicable(format!("{spec}: {why}"))
}

/// Predicted `sn(G, 3)` for paths, even cycles, stars, complete bipartite
/// graphs, bistars and coronas `G∘lK_1` of connected bipartite graphs.
///
/// ```
/// use sudoku_chroma::graph::FamilySpec;
/// use sudoku_chroma::theorems::predicted_sn3;
///
/// let p = predicted_sn3(&"path:7".parse::<FamilySpec>()?)?;
/// assert_eq!(p.value, 4);
/// assert_eq!(predicted_sn3(&"bistar:1,1".parse()?)?.value, 3);
/// # Ok::<(), sudoku_chroma::Error>(())
/// ```
pub fn predicted_sn3(spec: &FamilySpec) -> Result<Prediction> {
    let p = |rule, value, why: String| Prediction {
        rule,
        value,
        applicability: why,
    };
    match spec {
        FamilySpec::Path(n) if *n >= 1 => Ok(p(Rule::Path, (n + 2) / 2, format!("P_{n}: ceil((n+1)/2)"))),
        FamilySpec::Cycle(n) if *n >= 4 && n % 2 == 0 => {
            Ok(p(Rule::EvenCycle, n / 2, format!("C_{n}: half the order")))
        }
        FamilySpec::Star(n) if *n >= 2 => Ok(p(Rule::Star, *n, format!("K_1,{n}: number of leaves"))),
        FamilySpec::CompleteBipartite(a, b) if (*a).min(*b) >= 2 => {
            let m = (*a).min(*b);
            Ok(p(Rule::CompleteBipartite, m, format!("K_{a},{b}: smaller part")))
        }
        FamilySpec::Bistar(1, 1) => Ok(p(Rule::Bistar, 3, "B_1,1 is P_4".to_string())),
        FamilySpec::Bistar(a, b) if *a >= 1 && *b >= 1 => {
            Ok(p(Rule::Bistar, a + b, format!("B_{a},{b}: number of pendants")))
        }
        FamilySpec::Corona { base, l } if *l >= 1 => {
            let g = base.build()?;
            if !g.is_bipartite() || !g.is_connected() {
                return Err(not_applicable(spec, "corona base must be connected and bipartite"));
            }
            let n = g.order();
            let (value, why) = if *l == 1 {
                (
                    n + 1,
                    format!("base of order {n}, one pendant each: n+1 (k = 3 assumed)"),
                )
            } else {
                (
                    l * n,
                    format!("base of order {n}, {l} pendants each: ln (k = 3 assumed)"),
                )
            };
            Ok(p(Rule::Corona, value, why))
        }
        _ => Err(not_applicable(spec, "no closed form for this family")),
    }
}

/// Predicted `sn(H)` for `H` = `P_n` with `K_m` attached on one edge:
/// `n + m - 4` for `m ≥ 4`, and `ceil((n+1)/2)` for `m = 3`.
///
/// ```
/// use sudoku_chroma::theorems::predicted_sn_attach_clique;
/// assert_eq!(predicted_sn_attach_clique(6, 5)?.value, 7);
/// assert_eq!(predicted_sn_attach_clique(6, 3)?.value, 4);
/// # Ok::<(), sudoku_chroma::Error>(())
/// ```
pub fn predicted_sn_attach_clique(n: usize, m: usize) -> Result<Prediction> {
    if n < 2 || m < 3 {
        return Err(Error::NotApplicable(format!(
            "clique attachment needs a path of order >= 2 and m >= 3, got n = {n}, m = {m}"
        )));
    }
    let (value, why) = if m == 3 {
        ((n + 2) / 2, format!("K_3 on an edge of P_{n}: ceil((n+1)/2)"))
    } else {
        (n + m - 4, format!("K_{m} on an edge of P_{n}: n+m-4"))
    };
    Ok(Prediction {
        rule: Rule::CliqueOnPathEdge,
        value,
        applicability: why,
    })
}
