use std::fs::File;
use std::io::BufReader;
use std::time::Instant;

use rayon::prelude::*;

use crate::graph::{matches_bn, matches_ln, Graph};
use crate::graph6::{encode_graph6, stream_graph6};
use crate::hist::{find_hist, HistOutcome, ProofTheorem};
use crate::spectral::{
    extremal_root, hong_bound_value, spectral_radius, threshold_side, PowerOptions, ThresholdSide,
    THRESHOLD_GUARD,
};

use super::labeled::{mask_rows, pair_table};
use super::report::SourceKind;
use super::{Connectivity, Prescreen, Source, VerificationReport, VerifyError, MAX_LABELED_ORDER};

/// Masks per shard of the labelled scan.
pub(crate) const SHARD_SIZE: u64 = 1 << 16;

/// Graphs per parallel batch when reading a corpus.
const CORPUS_BATCH: usize = 1 << 14;

/// Largest allowed gap between the eigensolver and the quartic root.
const THRESHOLD_AGREEMENT: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyOptions {
    /// Worker threads for shard parallelism; at least 1.
    pub threads: usize,
    /// Apply the edge-count and maximum-degree rejections.
    pub prescreens: bool,
    /// Replaces the extremal spectral radius as threshold.
    pub threshold: Option<f64>,
    pub power: PowerOptions,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            threads: 1,
            prescreens: true,
            threshold: None,
            power: PowerOptions::default(),
        }
    }
}

/// rho of the extremal graph at order `n`, from the eigensolver, checked
/// against the largest root of its characteristic quartic.
pub fn theorem_threshold(theorem: ProofTheorem, n: usize, power: &PowerOptions) -> Result<f64, VerifyError> {
    let family = theorem.family();
    if n < family.min_order() {
        return Err(VerifyError::OrderOutOfRange {
            theorem,
            n,
            min: family.min_order(),
        });
    }
    let g = family.family(n).build().expect("order checked");
    let eigen = spectral_radius(&g, power)?.rho;
    let root = extremal_root(family, n)?;
    if (eigen - root).abs() > THRESHOLD_AGREEMENT {
        return Err(VerifyError::ThresholdMismatch { eigen, root });
    }
    Ok(eigen)
}

/// Prescreen for graphs of order `n` that may reach `threshold`.
///
/// Connectivity is the class of the statement. The edge floor is the least
/// `m` whose Hong bound, evaluated at the class's minimum degree (1 or 2),
/// reaches the guarded threshold. The degree floor uses `Δ >= rho`.
pub fn theorem_prescreen(theorem: ProofTheorem, n: usize, threshold: f64) -> Prescreen {
    let cut = threshold - THRESHOLD_GUARD;
    let (connectivity, delta) = match theorem {
        ProofTheorem::OneConnected => (Connectivity::Connected, 1),
        ProofTheorem::TwoConnected => (Connectivity::TwoConnected, 2),
    };
    let max_m = n * n.saturating_sub(1) / 2;
    let min_edges = (0..=max_m)
        .find(|&m| hong_bound_value(n, m, delta) >= cut)
        .unwrap_or(max_m + 1);
    Prescreen {
        min_edges,
        min_max_degree: cut.max(0.0).ceil() as usize,
        connectivity,
    }
}

pub fn verify_theorem1(n: usize, source: &Source, opts: &VerifyOptions) -> Result<VerificationReport, VerifyError> {
    verify_theorem(ProofTheorem::OneConnected, n, source, opts)
}

pub fn verify_theorem2(n: usize, source: &Source, opts: &VerifyOptions) -> Result<VerificationReport, VerifyError> {
    verify_theorem(ProofTheorem::TwoConnected, n, source, opts)
}

/// Checks that every graph of order `n` in the statement's class with
/// `rho >= θ - guard` is the extremal graph or has a HIST.
pub fn verify_theorem(
    theorem: ProofTheorem,
    n: usize,
    source: &Source,
    opts: &VerifyOptions,
) -> Result<VerificationReport, VerifyError> {
    if opts.threads == 0 {
        return Err(VerifyError::InvalidOptions("thread count must be at least 1".into()));
    }
    if opts.power.tol.is_nan() || opts.power.tol <= 0.0 {
        return Err(VerifyError::InvalidOptions(format!("tolerance must be positive, got {}", opts.power.tol)));
    }
    let min = theorem.min_order();
    if n < min {
        return Err(VerifyError::OrderOutOfRange { theorem, n, min });
    }
    if matches!(source, Source::LabeledExhaustive) && n > MAX_LABELED_ORDER {
        return Err(VerifyError::Unsupported(n));
    }
    let start = Instant::now();
    let threshold = match opts.threshold {
        Some(t) => t,
        None => theorem_threshold(theorem, n, &opts.power)?,
    };
    let pipeline = Pipeline::new(theorem, n, threshold, opts);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.threads)
        .build()
        .map_err(|e| VerifyError::InvalidOptions(e.to_string()))?;
    let mut report = pool.install(|| match source {
        Source::LabeledExhaustive => pipeline.scan_labeled(),
        Source::Graph6Corpus(path) => pipeline.scan_corpus(path),
    })?;
    report.elapsed = start.elapsed().as_secs_f64();
    Ok(report)
}

pub(crate) enum Verdict {
    Rejected,
    Below,
    Extremal,
    Hist,
    Counterexample,
}

pub(crate) struct Pipeline {
    theorem: ProofTheorem,
    n: usize,
    threshold: f64,
    prescreen: Prescreen,
    power: PowerOptions,
}

impl Pipeline {
    pub(crate) fn new(theorem: ProofTheorem, n: usize, threshold: f64, opts: &VerifyOptions) -> Self {
        let full = theorem_prescreen(theorem, n, threshold);
        let prescreen = if opts.prescreens {
            full
        } else {
            Prescreen {
                connectivity: full.connectivity,
                ..Prescreen::default()
            }
        };
        Pipeline {
            theorem,
            n,
            threshold,
            prescreen,
            power: opts.power,
        }
    }

    fn report(&self, source: SourceKind) -> VerificationReport {
        VerificationReport::empty(self.theorem, self.n, source, self.threshold)
    }

    /// Spectral and HIST stages for a graph that passed the prescreen.
    pub(crate) fn judge(&self, g: &Graph) -> Result<Verdict, VerifyError> {
        if threshold_side(g, self.threshold, &self.power)? == ThresholdSide::Below {
            return Ok(Verdict::Below);
        }
        let extremal = match self.theorem {
            ProofTheorem::OneConnected => matches_ln(g),
            ProofTheorem::TwoConnected => matches_bn(g),
        };
        if extremal {
            return Ok(Verdict::Extremal);
        }
        Ok(match find_hist(g)? {
            HistOutcome::Found(_) => Verdict::Hist,
            HistOutcome::NoHist(_) => Verdict::Counterexample,
        })
    }

    fn tally(&self, report: &mut VerificationReport, g: &Graph, verdict: Verdict) -> Result<(), VerifyError> {
        if !matches!(verdict, Verdict::Rejected) {
            report.prescreen_survivors += 1;
        }
        match verdict {
            Verdict::Rejected | Verdict::Below => {}
            Verdict::Extremal => report.extremal_matches += 1,
            Verdict::Hist => report.hists_found += 1,
            Verdict::Counterexample => report.counterexamples.push(encode_graph6(g)?),
        }
        if matches!(verdict, Verdict::Extremal | Verdict::Hist | Verdict::Counterexample) {
            report.over_threshold += 1;
        }
        Ok(())
    }

    fn scan_shard(&self, pairs: &[(usize, usize)], lo: u64, hi: u64) -> Result<VerificationReport, VerifyError> {
        let mut report = self.report(SourceKind::LabeledExhaustive);
        let mut rows = vec![0u64; self.n];
        report.scanned = hi - lo;
        for mask in lo..hi {
            let m = mask.count_ones() as usize;
            if m < self.prescreen.min_edges {
                continue;
            }
            mask_rows(pairs, mask, &mut rows);
            if !self.prescreen.admits_rows(&rows, m) {
                continue;
            }
            let g = Graph::from_rows_unchecked(&rows);
            let verdict = self.judge(&g)?;
            self.tally(&mut report, &g, verdict)?;
        }
        Ok(report)
    }

    fn scan_labeled(&self) -> Result<VerificationReport, VerifyError> {
        let pairs = pair_table(self.n);
        let total = 1u64 << pairs.len();
        let shards = total.div_ceil(SHARD_SIZE);
        let parts: Vec<Result<VerificationReport, VerifyError>> = (0..shards)
            .into_par_iter()
            .map(|s| self.scan_shard(&pairs, s * SHARD_SIZE, ((s + 1) * SHARD_SIZE).min(total)))
            .collect();
        let mut report = self.report(SourceKind::LabeledExhaustive);
        for part in parts {
            report.absorb(part?);
        }
        Ok(report)
    }

    fn judge_any(&self, g: &Graph) -> Result<Verdict, VerifyError> {
        let admitted = match g.word_rows() {
            Some(rows) => self.prescreen.admits_rows(rows, g.edge_count()),
            None => {
                g.edge_count() >= self.prescreen.min_edges
                    && g.max_degree() >= self.prescreen.min_max_degree
                    && match self.prescreen.connectivity {
                        Connectivity::Any => true,
                        Connectivity::Connected => g.is_connected(),
                        Connectivity::TwoConnected => g.is_2_connected().unwrap_or(false),
                    }
            }
        };
        if !admitted {
            return Ok(Verdict::Rejected);
        }
        self.judge(g)
    }

    fn scan_corpus(&self, path: &std::path::Path) -> Result<VerificationReport, VerifyError> {
        let file = File::open(path).map_err(|e| VerifyError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        let mut records = stream_graph6(BufReader::new(file));
        let mut report = self.report(SourceKind::Graph6Corpus);
        loop {
            let mut batch = Vec::with_capacity(CORPUS_BATCH);
            for rec in records.by_ref().take(CORPUS_BATCH) {
                let rec = rec?;
                if rec.graph.order() != self.n {
                    return Err(VerifyError::CorpusOrder {
                        line: rec.line_number,
                        expected: self.n,
                        found: rec.graph.order(),
                    });
                }
                batch.push(rec.graph);
            }
            if batch.is_empty() {
                break;
            }
            let verdicts: Vec<Result<Verdict, VerifyError>> =
                batch.par_iter().map(|g| self.judge_any(g)).collect();
            for (g, verdict) in batch.iter().zip(verdicts) {
                report.scanned += 1;
                self.tally(&mut report, g, verdict?)?;
            }
        }
        Ok(report)
    }
}
