use std::fmt;

use crate::hist::ProofTheorem;

/// Serialised form of a [`Source`](super::Source).
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SourceKind {
    LabeledExhaustive,
    Graph6Corpus,
}

impl fmt::Display for SourceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SourceKind::LabeledExhaustive => "labeled_exhaustive",
            SourceKind::Graph6Corpus => "graph6_corpus",
        })
    }
}

/// Outcome of one exhaustive run at a single order.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct VerificationReport {
    pub theorem: ProofTheorem,
    pub n: usize,
    pub source: SourceKind,
    pub scanned: u64,
    pub prescreen_survivors: u64,
    pub over_threshold: u64,
    pub extremal_matches: u64,
    pub hists_found: u64,
    /// graph6 strings, in scan order.
    pub counterexamples: Vec<String>,
    /// Wall-clock seconds.
    pub elapsed: f64,
    /// The spectral threshold used, before the guard band.
    #[serde(skip)]
    pub threshold: f64,
}

impl VerificationReport {
    pub(crate) fn empty(theorem: ProofTheorem, n: usize, source: SourceKind, threshold: f64) -> Self {
        VerificationReport {
            theorem,
            n,
            source,
            scanned: 0,
            prescreen_survivors: 0,
            over_threshold: 0,
            extremal_matches: 0,
            hists_found: 0,
            counterexamples: Vec::new(),
            elapsed: 0.0,
            threshold,
        }
    }

    /// True iff no counterexample was found.
    pub fn verified(&self) -> bool {
        self.counterexamples.is_empty()
    }

    /// `over_threshold = extremal_matches + hists_found + |counterexamples|`.
    pub fn arithmetic_holds(&self) -> bool {
        self.over_threshold
            == self.extremal_matches + self.hists_found + self.counterexamples.len() as u64
    }

    pub(crate) fn absorb(&mut self, other: VerificationReport) {
        self.scanned += other.scanned;
        self.prescreen_survivors += other.prescreen_survivors;
        self.over_threshold += other.over_threshold;
        self.extremal_matches += other.extremal_matches;
        self.hists_found += other.hists_found;
        self.counterexamples.extend(other.counterexamples);
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (class, family) = match self.theorem {
            ProofTheorem::OneConnected => ("connected", "L"),
            ProofTheorem::TwoConnected => ("2-connected", "B"),
        };
        writeln!(f, "theorem={}", theorem_tag(self.theorem))?;
        writeln!(f, "n={}", self.n)?;
        writeln!(f, "source={}", self.source)?;
        writeln!(f, "threshold={:.12}", self.threshold)?;
        writeln!(f, "scanned={}", self.scanned)?;
        writeln!(f, "prescreen_survivors={}", self.prescreen_survivors)?;
        writeln!(f, "over_threshold={}", self.over_threshold)?;
        writeln!(f, "extremal_matches={}", self.extremal_matches)?;
        writeln!(f, "hists_found={}", self.hists_found)?;
        writeln!(f, "counterexamples={}", self.counterexamples.len())?;
        for c in &self.counterexamples {
            writeln!(f, "  {c}")?;
        }
        writeln!(f, "elapsed={:.3}", self.elapsed)?;
        let scope = match self.source {
            SourceKind::LabeledExhaustive => "every labelled",
            SourceKind::Graph6Corpus => "every corpus",
        };
        if self.verified() {
            write!(
                f,
                "verified: {scope} {class} graph of order {} with rho >= rho({family}_{}) is {family}_{} or has a HIST; \
                 no claim is made for other orders",
                self.n, self.n, self.n
            )
        } else {
            write!(f, "FAILED: {} counterexample(s) at order {}", self.counterexamples.len(), self.n)
        }
    }
}

/// Short tag used on the command line and in structured output.
pub(crate) fn theorem_tag(t: ProofTheorem) -> &'static str {
    match t {
        ProofTheorem::OneConnected => "thm1",
        ProofTheorem::TwoConnected => "thm2",
    }
}
