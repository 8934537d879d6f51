use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{count_extensions, unique_extension, ExtensionCount, PartialColoring};
use crate::error::Error;
use crate::graph::{Graph, Vertex};

/// A machine-checkable witness that `(S, C0)` is a `k`-Sudoku colouring
/// whose unique extension is `F`.
///
/// Serialises to `{"k", "n", "S", "C0", "F", "sn"}` with colourings as
/// arrays of `[vertex, colour]` pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SudokuCertificate {
    pub k: usize,
    pub n: usize,
    #[serde(rename = "S")]
    pub s: Vec<Vertex>,
    #[serde(rename = "C0")]
    pub c0: Vec<(Vertex, usize)>,
    #[serde(rename = "F")]
    pub f: Vec<(Vertex, usize)>,
    pub sn: usize,
}

/// Why a certificate was rejected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateFailure {
    #[error("certificate is for order {cert}, graph has order {graph}")]
    OrderMismatch { cert: usize, graph: usize },
    #[error("sn = {sn} but |S| = {size}")]
    SizeMismatch { sn: usize, size: usize },
    #[error("C0 does not colour exactly the vertices of S")]
    DomainMismatch,
    #[error("C0 is invalid: {0}")]
    InvalidInitial(Error),
    #[error("F is not a colouring of every vertex: {0}")]
    InvalidFinal(String),
    #[error("C0 has no proper extension")]
    NotExtendable,
    #[error("C0 has more than one proper extension")]
    NotUnique,
    #[error("the unique extension differs from F at vertex {0}")]
    ExtensionMismatch(Vertex),
}

impl SudokuCertificate {
    pub fn initial_coloring(&self) -> Result<PartialColoring, Error> {
        PartialColoring::from_pairs(self.k, self.c0.iter().copied())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serialises")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Re-checks the certificate from scratch against `g`: shapes, properness
    /// of `C0`, uniqueness of its extension via a fresh extension count, and
    /// equality of that extension with `F`.
    pub fn verify(&self, g: &Graph) -> Result<(), CertificateFailure> {
        if self.n != g.order() {
            return Err(CertificateFailure::OrderMismatch {
                cert: self.n,
                graph: g.order(),
            });
        }
        if self.sn != self.s.len() {
            return Err(CertificateFailure::SizeMismatch {
                sn: self.sn,
                size: self.s.len(),
            });
        }
        let c0 = self.initial_coloring().map_err(CertificateFailure::InvalidInitial)?;
        let mut s_sorted = self.s.clone();
        s_sorted.sort_unstable();
        s_sorted.dedup();
        if s_sorted.len() != self.s.len() || c0.domain() != s_sorted {
            return Err(CertificateFailure::DomainMismatch);
        }
        let f = PartialColoring::from_pairs(self.k, self.f.iter().copied())
            .map_err(|e| CertificateFailure::InvalidFinal(e.to_string()))?;
        if f.len() != g.order() || f.domain().last() != Some(&(g.order() - 1)) {
            return Err(CertificateFailure::InvalidFinal("F must colour every vertex".into()));
        }
        match count_extensions(g, &c0, 2).map_err(CertificateFailure::InvalidInitial)? {
            ExtensionCount::Zero => return Err(CertificateFailure::NotExtendable),
            ExtensionCount::AtLeast(_) => return Err(CertificateFailure::NotUnique),
            ExtensionCount::ExactlyOne => {}
        }
        let ext = unique_extension(g, &c0).map_err(CertificateFailure::InvalidInitial)?;
        match (0..g.order()).find(|&v| f.get(v) != Some(ext[v])) {
            Some(v) => Err(CertificateFailure::ExtensionMismatch(v)),
            None => Ok(()),
        }
    }
}
