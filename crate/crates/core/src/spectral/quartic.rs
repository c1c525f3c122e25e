use super::{ExtremalFamily, SpectralError};

/// Monic quartic `x^4 + c3 x^3 + c2 x^2 + c1 x + c0`, coefficients stored
/// from the leading term down.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuarticPoly {
    coeffs: [f64; 5],
}

/// Root brackets are bisected down to this absolute width.
pub const BISECTION_WIDTH: f64 = 1e-12;

impl QuarticPoly {
    pub fn monic(c3: f64, c2: f64, c1: f64, c0: f64) -> Self {
        QuarticPoly {
            coeffs: [1.0, c3, c2, c1, c0],
        }
    }

    /// `[c4, c3, c2, c1, c0]` with `c4 = 1`.
    pub fn coefficients(&self) -> [f64; 5] {
        self.coeffs
    }

    #[inline]
    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().fold(0.0, |acc, &c| acc * x + c)
    }

    /// Bisection for the root inside `[lo, hi]`, which must straddle a sign
    /// change. Exact zeros at either end are returned immediately.
    pub fn largest_root(&self, lo: f64, hi: f64) -> Result<f64, SpectralError> {
        let (mut lo, mut hi) = (lo.min(hi), lo.max(hi));
        let (mut flo, fhi) = (self.eval(lo), self.eval(hi));
        if fhi == 0.0 {
            return Ok(hi);
        }
        if flo == 0.0 {
            return Ok(lo);
        }
        if flo.signum() == fhi.signum() || flo.is_nan() || fhi.is_nan() {
            return Err(SpectralError::NoSignChange { lo, hi });
        }
        while hi - lo > BISECTION_WIDTH {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            let fmid = self.eval(mid);
            if fmid == 0.0 {
                return Ok(mid);
            }
            if fmid.signum() == flo.signum() {
                lo = mid;
                flo = fmid;
            } else {
                hi = mid;
            }
        }
        Ok(0.5 * (lo + hi))
    }
}

fn check_order(family: ExtremalFamily, n: usize) -> Result<f64, SpectralError> {
    if n < family.min_order() {
        return Err(SpectralError::OrderOutOfRange { family, n });
    }
    Ok(n as f64)
}

/// `x^4 - (n-4) x^3 - (n-1) x^2 + (2n-8) x + n - 3`, whose largest root is rho(L_n).
pub fn charpoly_ln(n: usize) -> Result<QuarticPoly, SpectralError> {
    let n = check_order(ExtremalFamily::L, n)?;
    Ok(QuarticPoly::monic(-(n - 4.0), -(n - 1.0), 2.0 * n - 8.0, n - 3.0))
}

/// `x^4 - (n-5) x^3 - (n-1) x^2 + (3n-16) x + 2n - 8`, whose largest root is rho(B_n).
pub fn charpoly_bn(n: usize) -> Result<QuarticPoly, SpectralError> {
    let n = check_order(ExtremalFamily::B, n)?;
    Ok(QuarticPoly::monic(-(n - 5.0), -(n - 1.0), 3.0 * n - 16.0, 2.0 * n - 8.0))
}

/// The characteristic quartic rewritten in the slack variable
/// `t = x - (n-3)` (family L) or `s = x - (n-4)` (family B).
pub fn slack_quartic(family: ExtremalFamily, n: usize) -> Result<QuarticPoly, SpectralError> {
    let n = check_order(family, n)?;
    Ok(match family {
        ExtremalFamily::L => QuarticPoly::monic(
            3.0 * n - 8.0,
            3.0 * n * n - 16.0 * n + 19.0,
            n.powi(3) - 8.0 * n * n + 19.0 * n - 14.0,
            3.0 - n,
        ),
        ExtremalFamily::B => QuarticPoly::monic(
            3.0 * n - 11.0,
            3.0 * n * n - 22.0 * n + 37.0,
            n.powi(3) - 11.0 * n * n + 37.0 * n - 40.0,
            8.0 - 2.0 * n,
        ),
    })
}
