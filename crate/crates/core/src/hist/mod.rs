//! Homeomorphically irreducible spanning trees (spanning trees without a
//! vertex of degree exactly 2): structural no-HIST certificates, an exact
//! backtracking search, an all-spanning-trees oracle and constructors that
//! follow the case analysis of the extremal theorems.

mod certificate;
mod oracle;
mod proof;
mod search;

use std::fmt;

pub use certificate::no_hist_certificate;
pub use oracle::{for_each_spanning_tree, oracle_hist, spanning_tree_count, DEFAULT_TREE_CAP};
pub use proof::{proof_guided_hist, ProofTheorem, ProofTrace, TraceOutcome};
pub use search::{find_hist, find_hist_with, SearchOptions};

use crate::graph::Graph;

/// An edge as an ordered pair of vertex ids.
pub type Edge = (usize, usize);

/// Why a graph has no HIST.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Certificate {
    /// A cut vertex of degree 2.
    CutVertexDeg2(usize),
    /// A path `s0 s1 s2 s3 s4` with `d(s0), d(s4) >= 3` and `d(s1) = d(s2) = d(s3) = 2`.
    P5Pattern([usize; 5]),
    /// Complete search over spanning trees found none.
    ExhaustedSearch,
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::CutVertexDeg2(v) => write!(f, "CutVertexDeg2({v})"),
            Certificate::P5Pattern(s) => write!(f, "P5Pattern({} {} {} {} {})", s[0], s[1], s[2], s[3], s[4]),
            Certificate::ExhaustedSearch => write!(f, "ExhaustedSearch"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HistOutcome {
    /// A HIST, as `n - 1` edges.
    Found(Vec<Edge>),
    NoHist(Certificate),
}

impl HistOutcome {
    pub fn is_found(&self) -> bool {
        matches!(self, HistOutcome::Found(_))
    }

    pub fn tree(&self) -> Option<&[Edge]> {
        match self {
            HistOutcome::Found(t) => Some(t),
            HistOutcome::NoHist(_) => None,
        }
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            HistOutcome::Found(_) => None,
            HistOutcome::NoHist(c) => Some(c),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SearchError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph of order {0} exceeds the 64-vertex search limit")]
    TooLarge(usize),
    #[error("search budget of {0} nodes exceeded")]
    BudgetExceeded(u64),
    #[error("more than {0} spanning trees")]
    TreeCapExceeded(u64),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

/// True iff `edges` is a spanning tree of `g` with no vertex of degree 2.
///
/// Checked from scratch: every edge must exist in `g`, there must be exactly
/// `n - 1` distinct edges, and they must connect all vertices.
pub fn is_hist(g: &Graph, edges: &[Edge]) -> bool {
    let n = g.order();
    if n == 0 || edges.len() != n - 1 {
        return false;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    let mut degree = vec![0usize; n];
    for &(a, b) in edges {
        if !g.has_edge(a, b) {
            return false;
        }
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            return false;
        }
        parent[ra] = rb;
        degree[a] += 1;
        degree[b] += 1;
    }
    degree.iter().all(|&d| d != 2)
}
