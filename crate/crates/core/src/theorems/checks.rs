use std::time::Instant;

use super::{predicted_sn3, predicted_sn_attach_clique, CheckReport};
use crate::coloring::{chromatic_number, clique_number, maximum_clique};
use crate::error::{Error, Result};
use crate::graph::{add_apex, attach_clique, embed_kplus1, emit_graph6, FamilySpec, Graph, Vertex};
use crate::search::{sudoku_number_with, SearchConfig};

fn sn(g: &Graph, k: usize, config: &SearchConfig) -> Result<usize> {
    Ok(sudoku_number_with(g, k, config)?.sn)
}

/// Runs `body` on a fresh report and stamps the elapsed time.
fn timed(report: CheckReport, body: impl FnOnce(&mut CheckReport) -> Result<bool>) -> Result<CheckReport> {
    let start = Instant::now();
    let mut report = report;
    let ok = body(&mut report)?;
    let mut report = report.decide(ok);
    report.millis = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Compares [`predicted_sn3`] with `sn(G, 3)` for one family instance.
pub fn check_family_instance(spec: &FamilySpec, config: &SearchConfig) -> Result<CheckReport> {
    timed(CheckReport::for_spec("family", spec), |r| {
        let prediction = predicted_sn3(spec)?;
        let g = spec.build()?;
        let computed = sn(&g, 3, config)?;
        r.n = g.order();
        r.k = 3;
        r.predicted = prediction.value.to_string();
        r.computed = computed.to_string();
        r.note = format!("{}: {}", prediction.rule, prediction.applicability);
        Ok(prediction.value == computed)
    })
}

/// [`check_family_instance`] over a list; failures become error reports.
pub fn check_family(specs: &[FamilySpec], config: &SearchConfig) -> Vec<CheckReport> {
    specs
        .iter()
        .map(|s| check_family_instance(s, config).unwrap_or_else(|e| CheckReport::for_spec("family", s).failed(&e)))
        .collect()
}

/// Compares [`predicted_sn_attach_clique`] with `sn(H)` for a spec of the
/// form `attach:path:N@U-V:KM`.
pub fn check_attach_clique(spec: &FamilySpec, config: &SearchConfig) -> Result<CheckReport> {
    let FamilySpec::AttachClique { base, m, .. } = spec else {
        return Err(Error::NotApplicable(format!("{spec} is not a clique attachment")));
    };
    let FamilySpec::Path(n) = **base else {
        return Err(Error::NotApplicable(format!("{spec}: base must be a path")));
    };
    timed(CheckReport::for_spec("attach", spec), |r| {
        let prediction = predicted_sn_attach_clique(n, *m)?;
        let h = spec.build()?;
        let k = chromatic_number(&h);
        let computed = sn(&h, k, config)?;
        r.n = h.order();
        r.k = k;
        r.predicted = prediction.value.to_string();
        r.computed = computed.to_string();
        r.note = prediction.applicability;
        Ok(prediction.value == computed)
    })
}

fn set_string(ks: &[usize]) -> String {
    let inner: Vec<String> = ks.iter().map(|k| k.to_string()).collect();
    format!("{{{}}}", inner.join(" "))
}

/// For every `k` from `χ(G)` to `k_max`, checks that `sn(G, k) = n` holds
/// exactly when `k ≥ Δ(G) + 2`.
///
/// `predicted` lists the `k` with `k ≥ Δ + 2`, `computed` the `k` with
/// `sn(G, k) = n`.
pub fn check_delta_theorem(g: &Graph, k_max: usize, config: &SearchConfig) -> Result<CheckReport> {
    let chi = chromatic_number(g);
    if k_max < chi {
        return Err(Error::param(format!(
            "k_max = {k_max} is below the chromatic number {chi}"
        )));
    }
    timed(CheckReport::new("delta", "graph6", &emit_graph6(g)), |r| {
        let n = g.order();
        let threshold = g.max_degree() + 2;
        let mut values = Vec::new();
        for k in chi..=k_max {
            values.push((k, sn(g, k, config)?));
        }
        let predicted: Vec<usize> = (chi..=k_max).filter(|&k| k >= threshold).collect();
        let computed: Vec<usize> = values.iter().filter(|v| v.1 == n).map(|v| v.0).collect();
        r.n = n;
        r.k = k_max;
        r.predicted = set_string(&predicted);
        r.computed = set_string(&computed);
        let listing: Vec<String> = values.iter().map(|(k, s)| format!("{k}:{s}")).collect();
        r.note = format!("max degree {}; sn by k {}", g.max_degree(), listing.join(" "));
        Ok(predicted == computed)
    })
}

/// Checks `sn(H) ≤ sn(G, m) + m - 3` for `H` = `G` with `K_m` attached on
/// the edge `uv` of the bipartite graph `G`. The note records whether the
/// bound is strict or tight.
pub fn check_supergraph_inequality(
    base: &FamilySpec,
    edge: (Vertex, Vertex),
    m: usize,
    config: &SearchConfig,
) -> Result<CheckReport> {
    let spec = FamilySpec::AttachClique {
        base: Box::new(base.clone()),
        u: edge.0,
        v: edge.1,
        m,
    };
    let g = base.build()?;
    if !g.is_bipartite() {
        return Err(Error::NotApplicable(format!("{base} is not bipartite")));
    }
    let h = attach_clique(&g, edge.0, edge.1, m)?;
    timed(CheckReport::for_spec("inequality", &spec), |r| {
        let sn_g = sn(&g, m, config)?;
        let bound = sn_g + m - 3;
        let k = chromatic_number(&h);
        let sn_h = sn(&h, k, config)?;
        r.n = h.order();
        r.k = k;
        r.predicted = format!("<={bound}");
        r.computed = sn_h.to_string();
        let kind = if sn_h < bound { "strict" } else { "tight" };
        r.note = format!("sn(G,{m}) = {sn_g}; {kind}");
        Ok(sn_h <= bound)
    })
}

/// Checks `sn(H) = sn(G, χ(G) + 1)` where `H` adds a vertex joined to a
/// maximum clique of `G` (the lexicographically first one).
pub fn check_apex_equality(base: &FamilySpec, config: &SearchConfig) -> Result<CheckReport> {
    let clique = maximum_clique(&base.build()?)?;
    check_apex_with_clique(base, &clique, config)
}

/// [`check_apex_equality`] with an explicit maximum clique.
pub fn check_apex_with_clique(base: &FamilySpec, clique: &[Vertex], config: &SearchConfig) -> Result<CheckReport> {
    let g = base.build()?;
    let chi = chromatic_number(&g);
    let omega = clique_number(&g)?;
    if chi != omega {
        return Err(Error::NotApplicable(format!(
            "{base}: chromatic number {chi} differs from clique number {omega}"
        )));
    }
    if clique.len() != omega {
        return Err(Error::NotApplicable(format!(
            "{base}: the apex must see a maximum clique (size {omega}), got {} vertices",
            clique.len()
        )));
    }
    let h = add_apex(&g, clique)?;
    let spec = FamilySpec::Apex {
        base: Box::new(base.clone()),
        clique: clique.to_vec(),
    };
    timed(CheckReport::for_spec("apex", &spec), |r| {
        let expected = sn(&g, chi + 1, config)?;
        let k = chromatic_number(&h);
        let computed = sn(&h, k, config)?;
        r.n = h.order();
        r.k = k;
        r.predicted = expected.to_string();
        r.computed = computed.to_string();
        r.note = format!("predicted value is sn(G,{}) from the search", chi + 1);
        Ok(expected == computed)
    })
}

/// For `G1` with `χ(G1) = k ≥ 3`, builds `G2 = G1∘kK_1` and `G3 = G2 + w`
/// and checks `χ(G2) = k`, `χ(G3) = k + 1` and `sn(G3) = sn(G2, k+1) = nk`.
pub fn check_embedding(base: &FamilySpec, config: &SearchConfig) -> Result<CheckReport> {
    let g1 = base.build()?;
    let k = chromatic_number(&g1);
    let (g2, g3) = embed_kplus1(&g1, k)?;
    let spec = FamilySpec::Embed {
        base: Box::new(base.clone()),
    };
    timed(CheckReport::for_spec("embedding", &spec), |r| {
        let nk = g1.order() * k;
        let chi2 = chromatic_number(&g2);
        let chi3 = chromatic_number(&g3);
        let sn2 = sn(&g2, k + 1, config)?;
        let sn3 = sn(&g3, chi3, config)?;
        r.n = g3.order();
        r.k = chi3;
        r.predicted = nk.to_string();
        r.computed = sn3.to_string();
        r.note = format!(
            "chi(G1)={k} chi(G2)={chi2} chi(G3)={chi3} sn(G2,{})={sn2} orders {}/{}",
            k + 1,
            g2.order(),
            g3.order()
        );
        Ok(chi2 == k && chi3 == k + 1 && sn2 == nk && sn3 == nk)
    })
}

/// Compares `sn(G, k)` (with `k = χ(G)` when omitted) against a fixed value.
pub fn check_value(spec: &FamilySpec, k: Option<usize>, expect: usize, config: &SearchConfig) -> Result<CheckReport> {
    timed(CheckReport::for_spec("value", spec), |r| {
        let g = spec.build()?;
        let k = k.unwrap_or_else(|| chromatic_number(&g));
        let computed = sn(&g, k, config)?;
        r.n = g.order();
        r.k = k;
        r.predicted = expect.to_string();
        r.computed = computed.to_string();
        Ok(computed == expect)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theorems::Verdict;

    fn cfg() -> SearchConfig {
        SearchConfig::default()
    }

    fn spec(s: &str) -> FamilySpec {
        s.parse().unwrap()
    }

    #[test]
    fn family_reports() {
        let r = check_family_instance(&spec("path:7"), &cfg()).unwrap();
        assert!(r.is_match());
        assert_eq!((r.n, r.k, r.predicted.as_str()), (7, 3, "4"));
        let all = check_family(&[spec("cycle:6"), spec("complete:4")], &cfg());
        assert_eq!(all[0].verdict, Verdict::Match);
        assert_eq!(all[1].verdict, Verdict::Error);
    }

    #[test]
    fn cliques_on_the_middle_edge_of_p6() {
        let r = check_attach_clique(&spec("attach:path:6@2-3:K5"), &cfg()).unwrap();
        assert_eq!((r.n, r.k, r.computed.as_str()), (9, 5, "7"));
        assert!(r.is_match());
        let r = check_attach_clique(&spec("attach:path:6@2-3:K3"), &cfg()).unwrap();
        assert_eq!(r.computed, "4");
        assert!(r.is_match());
    }

    #[test]
    fn attach_on_k2_disagrees_with_the_formula() {
        // K_2 with K_4 attached is K_4, whose Sudoku number is 3, not n + m - 4 = 2.
        let r = check_attach_clique(&spec("attach:path:2@0-1:K4"), &cfg()).unwrap();
        assert_eq!((r.predicted.as_str(), r.computed.as_str()), ("2", "3"));
        assert_eq!(r.verdict, Verdict::Mismatch);
    }

    #[test]
    fn delta_examples() {
        let r = check_delta_theorem(&spec("path:3").build().unwrap(), 4, &cfg()).unwrap();
        assert_eq!((r.predicted.as_str(), r.computed.as_str()), ("{4}", "{4}"));
        assert!(r.is_match());
        let r = check_delta_theorem(&spec("cycle:4").build().unwrap(), 4, &cfg()).unwrap();
        assert_eq!(r.note, "max degree 2; sn by k 2:1 3:2 4:4");
        assert!(check_delta_theorem(&spec("complete:3").build().unwrap(), 2, &cfg()).is_err());
    }

    #[test]
    fn inequality_examples() {
        let r = check_supergraph_inequality(&spec("path:6"), (2, 3), 5, &cfg()).unwrap();
        assert_eq!((r.predicted.as_str(), r.computed.as_str()), ("<=8", "7"));
        assert!(r.note.ends_with("strict"));
        let r = check_supergraph_inequality(&spec("path:2"), (0, 1), 3, &cfg()).unwrap();
        assert_eq!((r.predicted.as_str(), r.computed.as_str()), ("<=2", "2"));
        assert!(r.note.ends_with("tight"));
        assert!(check_supergraph_inequality(&spec("cycle:5"), (0, 1), 3, &cfg()).is_err());
    }

    #[test]
    fn apex_examples() {
        let r = check_apex_with_clique(&spec("path:4"), &[1, 2], &cfg()).unwrap();
        assert_eq!((r.predicted.as_str(), r.computed.as_str()), ("3", "3"));
        let r = check_apex_equality(&spec("cycle:4"), &cfg()).unwrap();
        assert_eq!(r.computed, "2");
        let r = check_apex_equality(&spec("complete:3"), &cfg()).unwrap();
        assert_eq!((r.predicted.as_str(), r.computed.as_str(), r.k), ("3", "3", 4));
        assert!(matches!(
            check_apex_equality(&spec("cycle:5"), &cfg()),
            Err(Error::NotApplicable(_))
        ));
        assert!(check_apex_with_clique(&spec("complete:3"), &[0, 1], &cfg()).is_err());
    }

    #[test]
    fn embedding_of_a_triangle() {
        let r = check_embedding(&spec("complete:3"), &cfg()).unwrap();
        assert!(r.is_match(), "{r}");
        assert_eq!(r.note, "chi(G1)=3 chi(G2)=3 chi(G3)=4 sn(G2,4)=9 orders 12/13");
        assert!(check_embedding(&spec("path:3"), &cfg()).is_err());
    }

    #[test]
    fn fixed_values() {
        assert!(check_value(&spec("path:6"), Some(3), 4, &cfg()).unwrap().is_match());
        let wrong = check_value(&spec("path:6"), Some(3), 5, &cfg()).unwrap();
        assert_eq!(wrong.verdict, Verdict::Mismatch);
    }
}
