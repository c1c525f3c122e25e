use crate::graph::Graph;

use super::SpectralError;

/// Convergence settings for the power iteration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerOptions {
    /// Max-norm bound on `A x - rho x` for a max-normalised `x`.
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for PowerOptions {
    fn default() -> Self {
        PowerOptions {
            tol: 1e-10,
            max_iter: 1_000_000,
        }
    }
}

/// Dominant adjacency eigenpair of a connected graph.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralResult {
    pub rho: f64,
    /// Perron vector scaled to unit max-norm.
    pub perron: Vec<f64>,
    /// `max_i |(A x)_i - rho x_i|` at the returned iterate.
    pub residual: f64,
    pub iterations: usize,
}

/// Compressed adjacency lists, built once per solve.
pub(crate) struct Csr {
    offsets: Vec<usize>,
    targets: Vec<usize>,
}

impl Csr {
    pub(crate) fn new(g: &Graph) -> Self {
        let mut offsets = Vec::with_capacity(g.order() + 1);
        let mut targets = Vec::with_capacity(2 * g.edge_count());
        offsets.push(0);
        for v in 0..g.order() {
            targets.extend(g.neighbors(v));
            offsets.push(targets.len());
        }
        Csr { offsets, targets }
    }

    /// `out = A x`.
    #[inline]
    pub(crate) fn apply(&self, x: &[f64], out: &mut [f64]) {
        for (v, o) in out.iter_mut().enumerate() {
            *o = self.targets[self.offsets[v]..self.offsets[v + 1]]
                .iter()
                .map(|&w| x[w])
                .sum();
        }
    }
}

pub(crate) struct Step {
    pub rayleigh: f64,
    pub residual: f64,
    /// Collatz-Wielandt bounds `min_i (Ax)_i / x_i <= rho <= max_i (Ax)_i / x_i`.
    pub cw_lower: f64,
    pub cw_upper: f64,
}

/// One step of the shifted iteration: given max-normalised `x`, computes
/// `ax = A x`, the Rayleigh quotient and the residual, and writes the
/// normalised `(A + I) x` into `next`.
#[inline]
pub(crate) fn step(csr: &Csr, x: &[f64], ax: &mut [f64], next: &mut [f64]) -> Step {
    csr.apply(x, ax);
    let (mut num, mut den) = (0.0, 0.0);
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for (&xi, &axi) in x.iter().zip(ax.iter()) {
        num += xi * axi;
        den += xi * xi;
        let ratio = axi / xi;
        lo = lo.min(ratio);
        hi = hi.max(ratio);
    }
    let rayleigh = num / den;
    let mut residual = 0.0f64;
    let mut scale = 0.0f64;
    for ((&xi, &axi), yi) in x.iter().zip(ax.iter()).zip(next.iter_mut()) {
        residual = residual.max((axi - rayleigh * xi).abs());
        *yi = xi + axi;
        scale = scale.max(*yi);
    }
    for yi in next.iter_mut() {
        *yi /= scale;
    }
    Step {
        rayleigh,
        residual,
        cw_lower: lo,
        cw_upper: hi,
    }
}

/// Spectral radius by power iteration on `A + I` from the all-ones vector.
///
/// The shift makes the dominant eigenvalue strictly dominant for connected
/// bipartite graphs as well. Returns the Rayleigh quotient at the first iterate
/// whose residual is within `opts.tol`.
pub fn spectral_radius(g: &Graph, opts: &PowerOptions) -> Result<SpectralResult, SpectralError> {
    if opts.tol.is_nan() || opts.tol <= 0.0 {
        return Err(SpectralError::InvalidTolerance(opts.tol));
    }
    let n = g.order();
    if n == 0 || !g.is_connected() {
        return Err(SpectralError::Disconnected);
    }
    let csr = Csr::new(g);
    let mut x = vec![1.0; n];
    let mut ax = vec![0.0; n];
    let mut next = vec![0.0; n];
    for iteration in 1..=opts.max_iter {
        let s = step(&csr, &x, &mut ax, &mut next);
        if s.residual <= opts.tol {
            return Ok(SpectralResult {
                rho: s.rayleigh,
                perron: x,
                residual: s.residual,
                iterations: iteration,
            });
        }
        if iteration == opts.max_iter {
            return Err(SpectralError::NotConverged {
                last: SpectralResult {
                    rho: s.rayleigh,
                    perron: x,
                    residual: s.residual,
                    iterations: iteration,
                },
            });
        }
        std::mem::swap(&mut x, &mut next);
    }
    // max_iter == 0
    Err(SpectralError::NotConverged {
        last: SpectralResult {
            rho: f64::NAN,
            perron: x,
            residual: f64::INFINITY,
            iterations: 0,
        },
    })
}
