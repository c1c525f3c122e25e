use crate::graph::Graph;

use super::power::{spectral_radius, PowerOptions};
use super::quartic::{charpoly_bn, charpoly_ln};
use super::{ExtremalFamily, SpectralError};

/// rho(G) <= Δ(G).
pub fn delta_bound(g: &Graph) -> f64 {
    g.max_degree() as f64
}

/// Hong's bound `(δ - 1 + sqrt((δ + 1)^2 + 4 (2m - δ n))) / 2` from order,
/// size and minimum degree; `sqrt(2m - n + 1)` when `δ = 1`.
///
/// The bound is non-increasing in `δ` over simple graphs, so evaluating it
/// at any `δ <= δ(G)` still bounds rho(G).
pub fn hong_bound_value(n: usize, m: usize, delta: usize) -> f64 {
    let (n, m, d) = (n as f64, m as f64, delta as f64);
    if delta == 1 {
        return (2.0 * m - n + 1.0).max(0.0).sqrt();
    }
    let disc = (d + 1.0).powi(2) + 4.0 * (2.0 * m - d * n);
    (d - 1.0 + disc.max(0.0).sqrt()) / 2.0
}

/// Hong's bound for a connected graph; 0 for the one-vertex graph.
pub fn hong_bound(g: &Graph) -> f64 {
    if g.order() < 2 {
        return 0.0;
    }
    hong_bound_value(g.order(), g.edge_count(), g.min_degree())
}

/// Slack of rho(L_n) over n - 3 (or rho(B_n) over n - 4) with its caps.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct SlackBound {
    pub family: ExtremalFamily,
    pub n: usize,
    /// `n - 3` for L, `n - 4` for B.
    pub base: f64,
    /// `rho - base`, with rho from the eigensolver.
    pub slack: f64,
    /// `(n-3)/(n^3-8n^2+19n-14)` for L, `(2n-8)/(n^3-11n^2+37n-40)` for B.
    pub tight_cap: f64,
    /// `1/(n-3)` for L, `2/(n-4)` for B.
    pub upper: f64,
}

impl SlackBound {
    pub fn rho(&self) -> f64 {
        self.base + self.slack
    }
}

/// Computes the slack from the eigensolver and checks
/// `0 < slack < tight_cap < upper`.
pub fn slack_bounds(
    family: ExtremalFamily,
    n: usize,
    opts: &PowerOptions,
) -> Result<SlackBound, SpectralError> {
    if n < family.min_order() {
        return Err(SpectralError::OrderOutOfRange { family, n });
    }
    let g = family.build(n);
    let rho = spectral_radius(&g, opts)?.rho;
    let nf = n as f64;
    let bound = match family {
        ExtremalFamily::L => SlackBound {
            family,
            n,
            base: nf - 3.0,
            slack: rho - (nf - 3.0),
            tight_cap: (nf - 3.0) / (nf.powi(3) - 8.0 * nf * nf + 19.0 * nf - 14.0),
            upper: 1.0 / (nf - 3.0),
        },
        ExtremalFamily::B => SlackBound {
            family,
            n,
            base: nf - 4.0,
            slack: rho - (nf - 4.0),
            tight_cap: (2.0 * nf - 8.0) / (nf.powi(3) - 11.0 * nf * nf + 37.0 * nf - 40.0),
            upper: 2.0 / (nf - 4.0),
        },
    };
    if !(bound.slack > 0.0 && bound.slack < bound.tight_cap && bound.tight_cap < bound.upper) {
        return Err(SpectralError::SlackViolation(bound));
    }
    Ok(bound)
}

/// rho of the extremal family at order `n` as the largest root of its quartic,
/// bracketed by `[base, base + 1]`.
pub fn extremal_root(family: ExtremalFamily, n: usize) -> Result<f64, SpectralError> {
    let (p, base) = match family {
        ExtremalFamily::L => (charpoly_ln(n)?, n as f64 - 3.0),
        ExtremalFamily::B => (charpoly_bn(n)?, n as f64 - 4.0),
    };
    p.largest_root(base, base + 1.0)
}
