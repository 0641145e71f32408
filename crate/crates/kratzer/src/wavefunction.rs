//! Associated Laguerre polynomials and log-space evaluation of the radial
//! eigenfunctions R(r) = N·e^{−ξr/2}·r^β·L_n^{2β+1}(ξr) and their derivatives.
//!
//! At physical parameters (β ≈ 212 for CO) the factors N, r^β, and
//! Γ(n+2β+2) individually overflow f64; only log-space assembly works.

use libm::lgamma;

use crate::error::{Error, Result};
use crate::spectrum::SpectralContext;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaguerreEval {
    pub value: f64,
    /// d/dx of L_n^α at x.
    pub derivative_value: f64,
}

/// ln C(n+α, n−1) for n ≥ 1, α > −1 (always a positive binomial here).
fn ln_binom_shift(n: u32, alpha: f64) -> f64 {
    let nf = n as f64;
    lgamma(nf + alpha + 1.0) - lgamma(alpha + 2.0) - lgamma(nf)
}

/// L_n^α(x) by the three-term recurrence in n, with the x-derivative from
/// x·(L_n^α)' = n·L_n^α − (n+α)·L_{n−1}^α and the explicit limit
/// (L_n^α)'(0) = −C(n+α, n−1).
pub fn laguerre(n: u32, alpha: f64, x: f64) -> LaguerreEval {
    debug_assert!(alpha > -1.0, "alpha must exceed -1");
    debug_assert!(x >= 0.0, "x must be nonnegative");
    if n == 0 {
        return LaguerreEval {
            value: 1.0,
            derivative_value: 0.0,
        };
    }
    let mut prev = 1.0_f64; // L_0
    let mut cur = alpha + 1.0 - x; // L_1
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + alpha + 1.0 - x) * cur - (kf + alpha) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    let derivative_value = if x == 0.0 {
        -ln_binom_shift(n, alpha).exp()
    } else {
        (n as f64 * cur - (n as f64 + alpha) * prev) / x
    };
    LaguerreEval {
        value: cur,
        derivative_value,
    }
}

/// d²/dx² L_n^α(x) = L_{n−2}^{α+2}(x); zero for n < 2.
pub fn laguerre_second_derivative(n: u32, alpha: f64, x: f64) -> f64 {
    if n < 2 {
        0.0
    } else {
        laguerre(n - 2, alpha + 2.0, x).value
    }
}

/// ln N = ½[(2β+3)ln ξ − ln 2 + lnΓ(n+1) − ln(n+β+1) − lnΓ(n+2β+2)].
pub fn log_normalization(n: u32, beta: f64, xi: f64) -> f64 {
    let nf = n as f64;
    0.5 * ((2.0 * beta + 3.0) * xi.ln() - std::f64::consts::LN_2 + lgamma(nf + 1.0)
        - (nf + beta + 1.0).ln()
        - lgamma(nf + 2.0 * beta + 2.0))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialWavefunction {
    pub n: u32,
    pub ell: u32,
    pub beta: f64,
    /// Positive convention; the state decays like e^{−ξr/2}.
    pub xi: f64,
    pub log_norm: f64,
}

impl RadialWavefunction {
    pub fn new(n: u32, ell: u32, beta: f64, xi: f64) -> Result<Self> {
        if !(xi > 0.0) || !xi.is_finite() {
            return Err(Error::Domain(format!(
                "wavefunction scale must be positive and finite, got xi = {xi}"
            )));
        }
        Ok(Self {
            n,
            ell,
            beta,
            xi,
            log_norm: log_normalization(n, beta, xi),
        })
    }

    /// State built from a spectral context, using the positive ξ convention.
    pub fn from_context(ctx: &SpectralContext) -> Self {
        Self::new(ctx.n, ctx.ell, ctx.beta, ctx.xi_physical)
            .expect("spectral contexts carry positive xi")
    }

    /// Laguerre superscript 2β+1.
    pub fn lag_alpha(&self) -> f64 {
        2.0 * self.beta + 1.0
    }

    /// e^{log_norm + β ln r − ξr/2}: the positive envelope multiplying the
    /// Laguerre polynomial.
    fn envelope(&self, r: f64) -> f64 {
        (self.log_norm + self.beta * r.ln() - 0.5 * self.xi * r).exp()
    }
}

pub fn eval_radial(w: &RadialWavefunction, r: f64) -> f64 {
    debug_assert!(r >= 0.0, "radius must be nonnegative");
    if r == 0.0 {
        return if w.beta > 0.0 {
            0.0
        } else {
            w.log_norm.exp() * laguerre(w.n, w.lag_alpha(), 0.0).value
        };
    }
    w.envelope(r) * laguerre(w.n, w.lag_alpha(), w.xi * r).value
}

pub fn eval_radial_derivative(w: &RadialWavefunction, r: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::Domain(format!(
            "radial derivative requires r > 0, got r = {r}"
        )));
    }
    let lag = laguerre(w.n, w.lag_alpha(), w.xi * r);
    let slope = w.beta / r - 0.5 * w.xi;
    Ok(w.envelope(r) * (slope * lag.value + w.xi * lag.derivative_value))
}

pub fn eval_radial_second_derivative(w: &RadialWavefunction, r: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::Domain(format!(
            "radial second derivative requires r > 0, got r = {r}"
        )));
    }
    let alpha = w.lag_alpha();
    let x = w.xi * r;
    let lag = laguerre(w.n, alpha, x);
    let lag2 = laguerre_second_derivative(w.n, alpha, x);
    let slope = w.beta / r - 0.5 * w.xi;
    Ok(w.envelope(r)
        * ((slope * slope - w.beta / (r * r)) * lag.value
            + 2.0 * w.xi * slope * lag.derivative_value
            + w.xi * w.xi * lag2))
}
