//! Exhaustive verification: labelled enumeration of small graphs, corpus
//! ingestion, the prescreen → spectral → HIST pipeline and its reports.

mod audit;
mod extras;
mod labeled;
mod report;
mod verify;

use std::path::PathBuf;

pub use audit::{audit_prescreens, AuditReport};
pub use extras::{
    verify_certificates, verify_corollaries, CertificateReport, CorollaryReport, CorollaryRow,
    FamilyCertificate,
};
pub use labeled::{enumerate_labeled, LabeledGraphs, MAX_LABELED_ORDER};
pub use report::{SourceKind, VerificationReport};
pub use verify::{
    theorem_prescreen, theorem_threshold, verify_theorem, verify_theorem1, verify_theorem2,
    VerifyOptions,
};

use crate::graph::reach_word;
use crate::graph6::Graph6Error;
use crate::hist::{ProofTheorem, SearchError};
use crate::spectral::SpectralError;

/// Connectivity requirement applied by a [`Prescreen`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Connectivity {
    Any,
    Connected,
    TwoConnected,
}

/// Cheap necessary conditions a graph must meet before the eigensolver runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub struct Prescreen {
    pub min_edges: usize,
    pub min_max_degree: usize,
    pub connectivity: Connectivity,
}

impl Default for Prescreen {
    /// Admits every graph.
    fn default() -> Self {
        Prescreen {
            min_edges: 0,
            min_max_degree: 0,
            connectivity: Connectivity::Any,
        }
    }
}

impl Prescreen {
    pub fn connected() -> Self {
        Prescreen {
            connectivity: Connectivity::Connected,
            ..Prescreen::default()
        }
    }

    pub fn two_connected() -> Self {
        Prescreen {
            connectivity: Connectivity::TwoConnected,
            ..Prescreen::default()
        }
    }

    /// Edge and degree conditions only.
    #[inline]
    pub(crate) fn admits_counts(&self, rows: &[u64], m: usize) -> bool {
        m >= self.min_edges
            && (self.min_max_degree == 0
                || rows.iter().any(|r| r.count_ones() as usize >= self.min_max_degree))
    }

    /// Full test on single-word rows with `m` edges.
    #[inline]
    pub(crate) fn admits_rows(&self, rows: &[u64], m: usize) -> bool {
        self.admits_counts(rows, m) && connectivity_holds(self.connectivity, rows)
    }
}

/// Connectivity test on single-word rows. 2-connectivity needs `n >= 3`.
pub(crate) fn connectivity_holds(c: Connectivity, rows: &[u64]) -> bool {
    let n = rows.len();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    match c {
        Connectivity::Any => true,
        Connectivity::Connected => n <= 1 || reach_word(rows, all, 0) == all,
        Connectivity::TwoConnected => {
            n >= 3
                && reach_word(rows, all, 0) == all
                && (0..n).all(|v| {
                    let alive = all & !(1 << v);
                    reach_word(rows, alive, alive.trailing_zeros() as usize) == alive
                })
        }
    }
}

/// Where a verification run takes its graphs from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    /// All `2^C(n,2)` labelled graphs, `n <= 8`.
    LabeledExhaustive,
    /// Every graph in a graph6 file; all must have the requested order.
    Graph6Corpus(PathBuf),
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum VerifyError {
    #[error("order {n} is below {min} for {theorem:?}")]
    OrderOutOfRange {
        theorem: ProofTheorem,
        n: usize,
        min: usize,
    },
    #[error("labelled enumeration supports n <= 8, got {0}; use a graph6 corpus instead")]
    Unsupported(usize),
    #[error("corpus line {line}: graph of order {found}, expected {expected}")]
    CorpusOrder {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("cannot open corpus {path}: {message}")]
    Io { path: String, message: String },
    #[error(transparent)]
    Format(#[from] Graph6Error),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error("threshold mismatch: eigensolver {eigen}, quartic root {root}")]
    ThresholdMismatch { eigen: f64, root: f64 },
    #[error("invalid options: {0}")]
    InvalidOptions(String),
}
