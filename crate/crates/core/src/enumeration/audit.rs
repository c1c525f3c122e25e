use rayon::prelude::*;

use crate::graph::Graph;
use crate::graph6::encode_mask;
use crate::hist::ProofTheorem;
use crate::spectral::{spectral_radius, threshold_side, ThresholdSide, THRESHOLD_GUARD};

use super::labeled::{mask_rows, pair_table};
use super::verify::{theorem_prescreen, theorem_threshold, SHARD_SIZE};
use super::{connectivity_holds, VerifyError, VerifyOptions, MAX_LABELED_ORDER};

/// Comparison of the over-threshold sets with and without prescreens.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct AuditReport {
    pub theorem: ProofTheorem,
    pub n: usize,
    /// One mask in `modulus` is sampled.
    pub modulus: u64,
    pub sampled: u64,
    /// Sampled graphs in the statement's connectivity class.
    pub in_class: u64,
    pub over_with_prescreens: u64,
    pub over_without_prescreens: u64,
    /// graph6 strings of graphs on which the two paths disagree.
    pub discrepancies: Vec<String>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.discrepancies.is_empty() && self.over_with_prescreens == self.over_without_prescreens
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Deterministic 1-in-`modulus` subsample of the labelled masks.
pub(crate) fn sampled(mask: u64, modulus: u64) -> bool {
    splitmix64(mask).is_multiple_of(modulus)
}

/// Runs the prescreened decision (edge and degree floors, then the
/// early-exit threshold test) and the unfiltered decision (full eigensolve)
/// on a deterministic subsample of the labelled graphs of order `n`, within
/// the statement's connectivity class, and lists every disagreement.
pub fn audit_prescreens(
    theorem: ProofTheorem,
    n: usize,
    modulus: u64,
    opts: &VerifyOptions,
) -> Result<AuditReport, VerifyError> {
    if n > MAX_LABELED_ORDER {
        return Err(VerifyError::Unsupported(n));
    }
    if modulus == 0 || opts.threads == 0 {
        return Err(VerifyError::InvalidOptions("modulus and thread count must be positive".into()));
    }
    let threshold = match opts.threshold {
        Some(t) => t,
        None => theorem_threshold(theorem, n, &opts.power)?,
    };
    let prescreen = theorem_prescreen(theorem, n, threshold);
    let cut = threshold - THRESHOLD_GUARD;
    let pairs = pair_table(n);
    let total = 1u64 << pairs.len();
    let power = opts.power;

    let shard = |s: u64| -> Result<AuditReport, VerifyError> {
        let mut r = AuditReport {
            theorem,
            n,
            modulus,
            sampled: 0,
            in_class: 0,
            over_with_prescreens: 0,
            over_without_prescreens: 0,
            discrepancies: Vec::new(),
        };
        let mut rows = vec![0u64; n];
        for mask in s * SHARD_SIZE..((s + 1) * SHARD_SIZE).min(total) {
            if !sampled(mask, modulus) {
                continue;
            }
            r.sampled += 1;
            mask_rows(&pairs, mask, &mut rows);
            if !connectivity_holds(prescreen.connectivity, &rows) {
                continue;
            }
            r.in_class += 1;
            let g = Graph::from_rows_unchecked(&rows);
            let m = mask.count_ones() as usize;
            let with = prescreen.admits_counts(&rows, m)
                && threshold_side(&g, threshold, &power)? == ThresholdSide::Above;
            let without = spectral_radius(&g, &power)?.rho >= cut;
            r.over_with_prescreens += with as u64;
            r.over_without_prescreens += without as u64;
            if with != without {
                r.discrepancies.push(encode_mask(n, mask));
            }
        }
        Ok(r)
    };

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.threads)
        .build()
        .map_err(|e| VerifyError::InvalidOptions(e.to_string()))?;
    let parts: Vec<Result<AuditReport, VerifyError>> =
        pool.install(|| (0..total.div_ceil(SHARD_SIZE)).into_par_iter().map(shard).collect());
    let mut report = AuditReport {
        theorem,
        n,
        modulus,
        sampled: 0,
        in_class: 0,
        over_with_prescreens: 0,
        over_without_prescreens: 0,
        discrepancies: Vec::new(),
    };
    for part in parts {
        let part = part?;
        report.sampled += part.sampled;
        report.in_class += part.in_class;
        report.over_with_prescreens += part.over_with_prescreens;
        report.over_without_prescreens += part.over_without_prescreens;
        report.discrepancies.extend(part.discrepancies);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsample_is_deterministic_and_sized() {
        let hits = (0..1u64 << 16).filter(|&m| sampled(m, 256)).count();
        assert!((200..320).contains(&hits), "{hits}");
        assert_eq!(
            (0..4096).filter(|&m| sampled(m, 256)).collect::<Vec<u64>>(),
            (0..4096).filter(|&m| sampled(m, 256)).collect::<Vec<u64>>()
        );
    }

    #[test]
    fn small_audit_passes() {
        let r = audit_prescreens(ProofTheorem::OneConnected, 7, 64, &VerifyOptions::default()).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(r.over_without_prescreens > 0);
    }
}
