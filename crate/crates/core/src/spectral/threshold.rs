use crate::graph::{bits, Graph};

use super::power::{step, Csr, PowerOptions};
use super::SpectralError;

/// Over-inclusive guard on threshold tests: "rho(G) >= θ" is evaluated as
/// `rho(G) >= θ - THRESHOLD_GUARD`.
pub const THRESHOLD_GUARD: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThresholdSide {
    Below,
    Above,
}

/// Decides whether `rho(g) >= threshold - THRESHOLD_GUARD`.
///
/// Runs the same shifted power iteration as
/// [`spectral_radius`](super::spectral_radius) but stops as soon as a
/// certified bound settles the question: the Rayleigh quotient and the
/// Collatz-Wielandt minimum are lower bounds on rho, the Collatz-Wielandt
/// maximum is an upper bound. Only when the iteration converges without the
/// bounds separating is the converged Rayleigh quotient compared directly.
pub fn threshold_side(
    g: &Graph,
    threshold: f64,
    opts: &PowerOptions,
) -> Result<ThresholdSide, SpectralError> {
    if opts.tol.is_nan() || opts.tol <= 0.0 {
        return Err(SpectralError::InvalidTolerance(opts.tol));
    }
    if g.order() == 0 || !g.is_connected() {
        return Err(SpectralError::Disconnected);
    }
    let cut = threshold - THRESHOLD_GUARD;
    match g.word_rows() {
        Some(rows) => small_side(rows, cut, opts),
        None => general_side(g, cut, opts),
    }
}

#[inline]
fn decide(lower: f64, upper: f64, cut: f64) -> Option<ThresholdSide> {
    if lower >= cut {
        Some(ThresholdSide::Above)
    } else if upper < cut {
        Some(ThresholdSide::Below)
    } else {
        None
    }
}

fn not_converged(opts: &PowerOptions, rayleigh: f64, residual: f64, x: Vec<f64>) -> SpectralError {
    SpectralError::NotConverged {
        last: super::SpectralResult {
            rho: rayleigh,
            perron: x,
            residual,
            iterations: opts.max_iter,
        },
    }
}

fn small_side(rows: &[u64], cut: f64, opts: &PowerOptions) -> Result<ThresholdSide, SpectralError> {
    let n = rows.len();
    let mut x = [1.0f64; 64];
    let mut ax = [0.0f64; 64];
    let (mut rayleigh, mut residual) = (f64::NAN, f64::INFINITY);
    for _ in 0..opts.max_iter {
        let (mut num, mut den) = (0.0, 0.0);
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        for v in 0..n {
            let s: f64 = bits(rows[v]).map(|w| x[w]).sum();
            ax[v] = s;
            num += x[v] * s;
            den += x[v] * x[v];
            let r = s / x[v];
            lo = lo.min(r);
            hi = hi.max(r);
        }
        rayleigh = num / den;
        if let Some(side) = decide(rayleigh.max(lo), hi, cut) {
            return Ok(side);
        }
        residual = 0.0;
        let mut scale = 0.0f64;
        for v in 0..n {
            residual = residual.max((ax[v] - rayleigh * x[v]).abs());
            x[v] += ax[v];
            scale = scale.max(x[v]);
        }
        if residual <= opts.tol {
            return Ok(if rayleigh >= cut {
                ThresholdSide::Above
            } else {
                ThresholdSide::Below
            });
        }
        for xv in x[..n].iter_mut() {
            *xv /= scale;
        }
    }
    Err(not_converged(opts, rayleigh, residual, x[..n].to_vec()))
}

fn general_side(g: &Graph, cut: f64, opts: &PowerOptions) -> Result<ThresholdSide, SpectralError> {
    let n = g.order();
    let csr = Csr::new(g);
    let mut x = vec![1.0; n];
    let mut ax = vec![0.0; n];
    let mut next = vec![0.0; n];
    let (mut rayleigh, mut residual) = (f64::NAN, f64::INFINITY);
    for _ in 0..opts.max_iter {
        let s = step(&csr, &x, &mut ax, &mut next);
        rayleigh = s.rayleigh;
        residual = s.residual;
        if let Some(side) = decide(s.rayleigh.max(s.cw_lower), s.cw_upper, cut) {
            return Ok(side);
        }
        if s.residual <= opts.tol {
            return Ok(if s.rayleigh >= cut {
                ThresholdSide::Above
            } else {
                ThresholdSide::Below
            });
        }
        std::mem::swap(&mut x, &mut next);
    }
    Err(not_converged(opts, rayleigh, residual, x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;
    use crate::spectral::spectral_radius;

    #[test]
    fn extremal_graphs_sit_exactly_at_their_threshold() {
        let opts = PowerOptions::default();
        for f in [Family::L(7), Family::B(8), Family::L(70), Family::B(66)] {
            let g = f.build().unwrap();
            let rho = spectral_radius(&g, &opts).unwrap().rho;
            assert_eq!(threshold_side(&g, rho, &opts).unwrap(), ThresholdSide::Above, "{f}");
            assert_eq!(
                threshold_side(&g, rho + 1e-6, &opts).unwrap(),
                ThresholdSide::Below,
                "{f}"
            );
        }
    }

    #[test]
    fn agrees_with_converged_radius() {
        let opts = PowerOptions::default();
        let g = Family::CompleteBipartite(3, 5).build().unwrap();
        let rho = 15f64.sqrt();
        assert_eq!(threshold_side(&g, rho - 0.01, &opts).unwrap(), ThresholdSide::Above);
        assert_eq!(threshold_side(&g, rho + 0.01, &opts).unwrap(), ThresholdSide::Below);
        assert!(threshold_side(&Graph::empty(2), 1.0, &opts).is_err());
    }
}
