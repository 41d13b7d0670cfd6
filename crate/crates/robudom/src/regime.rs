//! Closed-form quantities of the dense and sparse regimes.
//!
//! Everything here is a pure function of (n, p) and tuning constants:
//! the benchmark size u_n(x, y), the tail threshold t_n and its probability
//! bound, the sparse sandwich rates a(lambda) / b(lambda), the Bernoulli-sum
//! deviation bound, binary entropy, and the numeric certificate that u_n is
//! decreasing. Natural logarithms throughout. Probability bounds are clamped
//! to [0, 1]: the closed forms can exceed 1 at small n.

use thiserror::Error;

/// Default switch point between the two branches of `a_lambda`: the smallest
/// round value where log(lambda) - 3 log log(lambda) is positive (~0.023 at
/// lambda = 100).
pub const DEFAULT_LAMBDA0: f64 = 100.0;

#[derive(Debug, Error, PartialEq)]
pub enum MathError {
    #[error("u_n(x, y) needs nx > 0 (got nx = {0})")]
    NonPositiveNx(f64),
    #[error("u_n(x, y) needs y in (0, 1) (got y = {0})")]
    YOutOfRange(f64),
    #[error("p must lie in (0, 1) (got p = {0})")]
    POutOfRange(f64),
    #[error("log log undefined: lambda_b = {0} <= 1")]
    LogLogUndefined(f64),
    #[error("theta must exceed 2 (got theta = {0})")]
    ThetaTooSmall(f64),
    #[error("lambda must be positive (got {0})")]
    NonPositiveLambda(f64),
    #[error("lambda0 must exceed e (got {0})")]
    Lambda0TooSmall(f64),
    #[error("eta must lie in (0, 1/2) (got {0})")]
    EtaOutOfRange(f64),
    #[error("mu must be nonnegative (got {0})")]
    NegativeMu(f64),
    #[error("invalid grid range: need 1/(n+1) < x_low < x_high < 1, grid_size >= 1")]
    InvalidRange,
}

/// Regime of (n, p), classified by the finite-n thresholds documented on
/// [`classify_regime`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Regime {
    /// np below 0.1 with n^2 p above 50: domination is driven by isolated
    /// edges, size of order n^2 p.
    SparseZero,
    /// np close to a constant lambda in [0.1, log n]: size of order n.
    SparseLambda(f64),
    /// Dense with vanishing p.
    DenseP0Zero,
    /// Dense with p bounded away from 0 and 1.
    DenseP0Mid(f64),
    /// Dense with p close to 1.
    DenseP0One,
}

/// Derived regime quantities for a given (n, p).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegimeParams {
    pub n: usize,
    pub p: f64,
    /// lambda_a = np.
    pub lambda_a: f64,
    /// lambda_b = n |log(1-p)|; always >= lambda_a on (0, 1).
    pub lambda_b: f64,
    /// u_n(p, p) = log(np) / |log(1-p)|; `None` outside p in (0, 1).
    pub u_n: Option<f64>,
    pub regime: Regime,
}

/// Lower-tail threshold and probability bound: with probability at least
/// `1 - prob_bound`, the robust domination number is at least `threshold`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailBound {
    pub threshold: f64,
    pub prob_bound: f64,
}

/// u_n(x, y) = log(nx) / |log(1-y)|.
pub fn u_n_xy(n: usize, x: f64, y: f64) -> Result<f64, MathError> {
    let nx = n as f64 * x;
    if !(nx > 0.0) {
        return Err(MathError::NonPositiveNx(nx));
    }
    if !(y > 0.0 && y < 1.0) {
        return Err(MathError::YOutOfRange(y));
    }
    Ok(nx.ln() / (1.0 - y).ln().abs())
}

/// The benchmark size u_n = u_n(p, p).
pub fn u_n(n: usize, p: f64) -> Result<f64, MathError> {
    u_n_xy(n, p, p)
}

/// t_n = (log lambda_a - theta log log lambda_b) / |log(1-p)|.
///
/// May be negative for small lambda_a; the caller decides whether the
/// threshold is usable.
pub fn t_n(n: usize, p: f64, theta: f64) -> Result<f64, MathError> {
    if !(p > 0.0 && p < 1.0) {
        return Err(MathError::POutOfRange(p));
    }
    let lambda_a = n as f64 * p;
    let lambda_b = n as f64 * (1.0 - p).ln().abs();
    if lambda_b <= 1.0 {
        return Err(MathError::LogLogUndefined(lambda_b));
    }
    Ok((lambda_a.ln() - theta * lambda_b.ln().ln()) / (1.0 - p).ln().abs())
}

/// Lower-tail bound: P(robust domination number < threshold) <= prob_bound,
/// with threshold = u_n (1 - theta loglog(lambda_b)/log(lambda_a)) and
/// prob_bound = exp(-(3n/8) (log lambda_b)^theta / lambda_a).
///
/// Requires theta > 2 strictly. The threshold is evaluated in the t_n form,
/// which is the same expression with the log(lambda_a) division cancelled.
pub fn lower_tail_bound(n: usize, p: f64, theta: f64) -> Result<TailBound, MathError> {
    if theta <= 2.0 {
        return Err(MathError::ThetaTooSmall(theta));
    }
    let threshold = t_n(n, p, theta)?;
    let lambda_a = n as f64 * p;
    let lambda_b = n as f64 * (1.0 - p).ln().abs();
    let exponent = -(3.0 * n as f64 / 8.0) * lambda_b.ln().powf(theta) / lambda_a;
    let prob_bound = exponent.exp().clamp(0.0, 1.0);
    Ok(TailBound {
        threshold,
        prob_bound,
    })
}

/// Lower sandwich rate a(lambda): lambda e^{-2 lambda} up to `lambda0`, then
/// (log lambda - 3 log log lambda) / lambda.
pub fn a_lambda(lambda: f64, lambda0: f64) -> Result<f64, MathError> {
    if !(lambda > 0.0) {
        return Err(MathError::NonPositiveLambda(lambda));
    }
    if !(lambda0 > std::f64::consts::E) {
        return Err(MathError::Lambda0TooSmall(lambda0));
    }
    if lambda <= lambda0 {
        Ok(lambda * (-2.0 * lambda).exp())
    } else {
        Ok((lambda.ln() - 3.0 * lambda.ln().ln()) / lambda)
    }
}

/// Upper sandwich rate b(lambda): lambda/4 up to 1, then (log lambda + 1)/lambda.
pub fn b_lambda(lambda: f64) -> Result<f64, MathError> {
    if !(lambda > 0.0) {
        return Err(MathError::NonPositiveLambda(lambda));
    }
    if lambda <= 1.0 {
        Ok(lambda / 4.0)
    } else {
        Ok((lambda.ln() + 1.0) / lambda)
    }
}

/// Deviation bound for a sum of independent Bernoulli variables with mean mu:
/// P(|W - mu| >= eta mu) <= min(1, 2 exp(-eta^2 mu / 4)), for 0 < eta < 1/2.
pub fn chernoff_bound(mu: f64, eta: f64) -> Result<f64, MathError> {
    if !(mu >= 0.0) {
        return Err(MathError::NegativeMu(mu));
    }
    if !(eta > 0.0 && eta < 0.5) {
        return Err(MathError::EtaOutOfRange(eta));
    }
    Ok((2.0 * (-eta * eta * mu / 4.0).exp()).min(1.0))
}

/// Binary entropy H(x) = -x log x - (1-x) log(1-x), with H(0) = H(1) = 0.
pub fn binary_entropy(x: f64) -> f64 {
    assert!(
        (0.0..=1.0).contains(&x),
        "binary entropy defined on [0, 1], got {x}"
    );
    let mut h = 0.0;
    if x > 0.0 {
        h -= x * x.ln();
    }
    if x < 1.0 {
        h -= (1.0 - x) * (1.0 - x).ln();
    }
    h
}

/// Certifies that u_n(x, x) is strictly decreasing on (x_low, x_high) by
/// checking H(x) - x log n < 0 on a grid of interior points. The sign of the
/// numerator is sufficient: the derivative's denominator
/// x (1-x) log^2(1-x) is positive on (0, 1).
///
/// Grid points are strictly inside the open interval, so endpoint equalities
/// (H(1/2) = log(n)/2 at n = 4) do not spoil the certificate.
pub fn un_decreasing_certificate(
    n: usize,
    x_low: f64,
    x_high: f64,
    grid_size: usize,
) -> Result<bool, MathError> {
    if !(x_low > 1.0 / (n as f64 + 1.0)) || !(x_high > x_low) || !(x_high < 1.0) || grid_size == 0 {
        return Err(MathError::InvalidRange);
    }
    let log_n = (n as f64).ln();
    let step = (x_high - x_low) / (grid_size as f64 + 1.0);
    for i in 0..grid_size {
        let x = x_low + step * (i as f64 + 1.0);
        if binary_entropy(x) - x * log_n >= 0.0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Classifies (n, p) by fixed finite-n thresholds:
/// sparse-zero when np < 0.1 and n^2 p > 50; sparse-lambda when
/// 0.1 <= np <= log n; dense otherwise, with the p0 sub-case cut at
/// p < 0.01 (zero), p > 0.99 (one), else mid.
pub fn classify_regime(n: usize, p: f64) -> RegimeParams {
    let nf = n as f64;
    let lambda_a = nf * p;
    let (lambda_b, u_n) = if p > 0.0 && p < 1.0 {
        let abs_log_q = (1.0 - p).ln().abs();
        (nf * abs_log_q, Some(lambda_a.ln() / abs_log_q))
    } else if p >= 1.0 {
        (f64::INFINITY, None)
    } else {
        (0.0, None)
    };
    let regime = if lambda_a < 0.1 && nf * nf * p > 50.0 {
        Regime::SparseZero
    } else if (0.1..=nf.ln()).contains(&lambda_a) {
        Regime::SparseLambda(lambda_a)
    } else if p < 0.01 {
        Regime::DenseP0Zero
    } else if p > 0.99 {
        Regime::DenseP0One
    } else {
        Regime::DenseP0Mid(p)
    };
    RegimeParams {
        n,
        p,
        lambda_a,
        lambda_b,
        u_n,
        regime,
    }
}
