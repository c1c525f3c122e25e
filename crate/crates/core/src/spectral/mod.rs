//! Adjacency spectral radius, the characteristic quartics of the extremal
//! families L_n and B_n, and the closed-form bounds used by the verifier.

mod bounds;
mod power;
mod quartic;
mod threshold;

use std::fmt;

pub use bounds::{delta_bound, extremal_root, hong_bound, hong_bound_value, slack_bounds, SlackBound};
pub use power::{spectral_radius, PowerOptions, SpectralResult};
pub use quartic::{charpoly_bn, charpoly_ln, slack_quartic, QuarticPoly, BISECTION_WIDTH};
pub use threshold::{threshold_side, ThresholdSide, THRESHOLD_GUARD};

use crate::graph::{Family, Graph};

/// The two HIST-free extremal families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum ExtremalFamily {
    /// Extremal among connected graphs, orders `n >= 7`.
    L,
    /// Extremal among 2-connected graphs, orders `n >= 8`.
    B,
}

impl ExtremalFamily {
    /// Smallest order at which the extremal statement applies.
    pub fn min_order(self) -> usize {
        match self {
            ExtremalFamily::L => 7,
            ExtremalFamily::B => 8,
        }
    }

    pub fn family(self, n: usize) -> Family {
        match self {
            ExtremalFamily::L => Family::L(n),
            ExtremalFamily::B => Family::B(n),
        }
    }

    pub(crate) fn build(self, n: usize) -> Graph {
        self.family(n).build().expect("order checked against min_order")
    }

    pub fn charpoly(self, n: usize) -> Result<QuarticPoly, SpectralError> {
        match self {
            ExtremalFamily::L => charpoly_ln(n),
            ExtremalFamily::B => charpoly_bn(n),
        }
    }
}

impl fmt::Display for ExtremalFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExtremalFamily::L => "L",
            ExtremalFamily::B => "B",
        })
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SpectralError {
    #[error("graph is disconnected or empty")]
    Disconnected,
    #[error("tolerance must be positive, got {0}")]
    InvalidTolerance(f64),
    #[error(
        "power iteration did not converge after {} iterations (residual {:e})",
        last.iterations,
        last.residual
    )]
    NotConverged { last: SpectralResult },
    #[error("no sign change in bracket [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },
    #[error("order {n} is below the range of family {family}")]
    OrderOutOfRange { family: ExtremalFamily, n: usize },
    #[error("slack bound violated for {}_{}: slack {} vs cap {}", .0.family, .0.n, .0.slack, .0.tight_cap)]
    SlackViolation(SlackBound),
}
