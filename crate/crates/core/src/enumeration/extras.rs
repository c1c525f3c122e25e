use std::fmt;

use crate::graph::Family;
use crate::graph6::encode_graph6;
use crate::hist::{no_hist_certificate, oracle_hist, Certificate, DEFAULT_TREE_CAP};
use crate::spectral::{slack_bounds, ExtremalFamily, PowerOptions, SpectralError};

use super::labeled::enumerate_labeled;
use super::{Prescreen, VerifyError};

/// Slack of one extremal graph against its closed-form caps.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct CorollaryRow {
    pub family: ExtremalFamily,
    pub n: usize,
    pub rho: f64,
    /// `rho - (n-3)` for L, `rho - (n-4)` for B.
    pub slack: f64,
    pub tight_cap: f64,
    /// `1/(n-3)` for L, `2/(n-4)` for B.
    pub upper: f64,
    /// `0 < slack < tight_cap < upper`.
    pub holds: bool,
    /// B only: whether `slack < 1/(n-4)`. Informational.
    pub below_one_over: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct CorollaryReport {
    pub from: usize,
    pub to: usize,
    pub rows: Vec<CorollaryRow>,
    pub violations: usize,
}

impl CorollaryReport {
    pub fn verified(&self) -> bool {
        self.violations == 0
    }
}

/// Checks `n-3 < rho(L_n) < n-3 + 1/(n-3)` for `n >= 7` and
/// `n-4 < rho(B_n) < n-4 + 2/(n-4)` for `n >= 8` over `from..=to`.
pub fn verify_corollaries(from: usize, to: usize, power: &PowerOptions) -> Result<CorollaryReport, VerifyError> {
    if from > to {
        return Err(VerifyError::InvalidOptions(format!("empty range {from}..={to}")));
    }
    let mut rows = Vec::new();
    for n in from..=to {
        for family in [ExtremalFamily::L, ExtremalFamily::B] {
            if n < family.min_order() {
                continue;
            }
            let (bound, holds) = match slack_bounds(family, n, power) {
                Ok(b) => (b, true),
                Err(SpectralError::SlackViolation(b)) => (b, false),
                Err(e) => return Err(e.into()),
            };
            let below_one_over = (family == ExtremalFamily::B).then(|| bound.slack < 1.0 / (n as f64 - 4.0));
            rows.push(CorollaryRow {
                family,
                n,
                rho: bound.rho(),
                slack: bound.slack,
                tight_cap: bound.tight_cap,
                upper: bound.upper,
                holds,
                below_one_over,
            });
        }
    }
    let violations = rows.iter().filter(|r| !r.holds).count();
    Ok(CorollaryReport {
        from,
        to,
        rows,
        violations,
    })
}

impl fmt::Display for CorollaryReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "family n rho slack tight_cap upper holds below_1/(n-4)")?;
        for r in &self.rows {
            let info = match r.below_one_over {
                Some(b) => b.to_string(),
                None => "-".into(),
            };
            writeln!(
                f,
                "{} {} {:.12} {:.6e} {:.6e} {:.6e} {} {}",
                r.family, r.n, r.rho, r.slack, r.tight_cap, r.upper, r.holds, info
            )?;
        }
        write!(f, "violations: {} over n = {}..={}", self.violations, self.from, self.to)
    }
}

/// Certificate produced for one extremal graph.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct FamilyCertificate {
    pub graph: String,
    pub certificate: Option<String>,
    /// The expected pattern fired: a degree-2 cut vertex for L, a P5 for B.
    pub expected: bool,
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct CertificateReport {
    pub n_max: usize,
    pub graphs_checked: u64,
    pub certificates_fired: u64,
    /// graph6 strings of graphs with a certificate but a HIST.
    pub violations: Vec<String>,
    pub families: Vec<FamilyCertificate>,
}

impl CertificateReport {
    pub fn verified(&self) -> bool {
        self.violations.is_empty() && self.families.iter().all(|f| f.expected)
    }
}

impl fmt::Display for CertificateReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "connected graphs checked (n <= {}): {}", self.n_max, self.graphs_checked)?;
        writeln!(f, "certificates fired: {}", self.certificates_fired)?;
        writeln!(f, "soundness violations: {}", self.violations.len())?;
        for v in &self.violations {
            writeln!(f, "  {v}")?;
        }
        for fam in &self.families {
            writeln!(
                f,
                "{}: {} {}",
                fam.graph,
                fam.certificate.as_deref().unwrap_or("none"),
                if fam.expected { "ok" } else { "MISSING" }
            )?;
        }
        write!(f, "{}", if self.verified() { "verified" } else { "FAILED" })
    }
}

/// Largest exhaustive order accepted by [`verify_certificates`].
const CERTIFICATE_MAX_ORDER: usize = 7;

/// Confirms with the spanning-tree oracle that every certificate fired on a
/// connected labelled graph of order `<= n_max` is sound, and that L_n
/// (`4 <= n <= 10`) and B_n (`6 <= n <= 10`) carry their patterns.
pub fn verify_certificates(n_max: usize) -> Result<CertificateReport, VerifyError> {
    if n_max > CERTIFICATE_MAX_ORDER {
        return Err(VerifyError::InvalidOptions(format!(
            "certificate sweep supports n_max <= {CERTIFICATE_MAX_ORDER}, got {n_max}"
        )));
    }
    let mut report = CertificateReport {
        n_max,
        graphs_checked: 0,
        certificates_fired: 0,
        violations: Vec::new(),
        families: Vec::new(),
    };
    for n in 1..=n_max {
        for g in enumerate_labeled(n, &Prescreen::connected())? {
            report.graphs_checked += 1;
            if no_hist_certificate(&g).is_some() {
                report.certificates_fired += 1;
                if oracle_hist(&g, DEFAULT_TREE_CAP)?.is_found() {
                    report.violations.push(encode_graph6(&g)?);
                }
            }
        }
    }
    let cases = (4..=10)
        .map(Family::L)
        .chain((6..=10).map(Family::B));
    for fam in cases {
        let g = fam.build().expect("orders in range");
        let cert = no_hist_certificate(&g);
        let expected = matches!(
            (fam, &cert),
            (Family::L(_), Some(Certificate::CutVertexDeg2(_))) | (Family::B(_), Some(Certificate::P5Pattern(_)))
        );
        report.families.push(FamilyCertificate {
            graph: fam.to_string(),
            certificate: cert.map(|c| c.to_string()),
            expected,
        });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corollary_rows() {
        let r = verify_corollaries(7, 12, &PowerOptions::default()).unwrap();
        assert!(r.verified());
        assert_eq!(r.rows.len(), 6 + 5);
        assert!(r.rows.iter().all(|row| row.slack > 0.0 && row.slack < row.upper));
        assert!(verify_corollaries(9, 8, &PowerOptions::default()).is_err());
    }

    #[test]
    fn certificates_small() {
        let r = verify_certificates(5).unwrap();
        assert!(r.verified(), "{r}");
        assert_eq!(r.graphs_checked, 1 + 1 + 4 + 38 + 728);
        assert_eq!(r.families.len(), 12);
    }
}
