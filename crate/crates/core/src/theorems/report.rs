use std::fmt;

use serde::Serialize;

use crate::error::Error;
use crate::graph::FamilySpec;

/// Column order of the CSV rendering.
pub const REPORT_COLUMNS: [&str; 9] = [
    "instance_id",
    "family",
    "params",
    "n",
    "k",
    "predicted",
    "computed",
    "verdict",
    "millis",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Match,
    Mismatch,
    /// The instance could not be evaluated (limits, hypotheses, bad input).
    Error,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Match => "match",
            Verdict::Mismatch => "mismatch",
            Verdict::Error => "error",
        })
    }
}

/// One predicted-versus-computed comparison.
///
/// `predicted` and `computed` are strings because some checks compare
/// predicates or sets rather than single integers; `note` carries whatever
/// extra evidence the check collected.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub instance_id: String,
    pub family: String,
    pub params: String,
    pub n: usize,
    pub k: usize,
    pub predicted: String,
    pub computed: String,
    pub verdict: Verdict,
    pub millis: u64,
    pub note: String,
}

impl CheckReport {
    pub(crate) fn new(check: &str, family: &str, params: &str) -> Self {
        CheckReport {
            instance_id: format!("{check}/{family}:{params}"),
            family: family.to_string(),
            params: params.to_string(),
            n: 0,
            k: 0,
            predicted: String::new(),
            computed: String::new(),
            verdict: Verdict::Error,
            millis: 0,
            note: String::new(),
        }
    }

    pub(crate) fn for_spec(check: &str, spec: &FamilySpec) -> Self {
        Self::new(check, spec.family_name(), &spec.params())
    }

    pub(crate) fn failed(mut self, err: &Error) -> Self {
        self.verdict = Verdict::Error;
        self.note = err.to_string();
        self
    }

    pub(crate) fn decide(mut self, ok: bool) -> Self {
        self.verdict = if ok { Verdict::Match } else { Verdict::Mismatch };
        self
    }

    pub fn is_match(&self) -> bool {
        self.verdict == Verdict::Match
    }

    /// Renders reports as CSV with a header row.
    pub fn to_csv(reports: &[CheckReport]) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(REPORT_COLUMNS).expect("write to memory");
        for r in reports {
            w.write_record([
                r.instance_id.as_str(),
                &r.family,
                &r.params,
                &r.n.to_string(),
                &r.k.to_string(),
                &r.predicted,
                &r.computed,
                &r.verdict.to_string(),
                &r.millis.to_string(),
            ])
            .expect("write to memory");
        }
        String::from_utf8(w.into_inner().expect("flush to memory")).expect("csv is utf-8")
    }

    /// Renders reports as a pretty-printed JSON array.
    pub fn to_json(reports: &[CheckReport]) -> String {
        serde_json::to_string_pretty(reports).expect("reports serialise")
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<8} {}  n={} k={} predicted={} computed={}",
            self.verdict, self.instance_id, self.n, self.k, self.predicted, self.computed
        )?;
        if !self.note.is_empty() {
            write!(f, "  ({})", self.note)?;
        }
        Ok(())
    }
}
