//! Mittag-Leffler machinery: the Fourier-side building block of the
//! fundamental kernels and of the solver's product-integration weights.

pub mod gamma;
mod mittag_leffler;
pub mod ml_tuning;

use crate::error::{CoreError, Result};
pub use gamma::{gamma as gamma_fn, ln_gamma, recip_gamma};

/// Parameters of the two-parameter Mittag-Leffler function E_{a,b}.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MLParams {
    /// order, in (0, 1]
    pub a: f64,
    /// second parameter, in (0, 2]
    pub b: f64,
}

impl MLParams {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        mittag_leffler::check_params(a, b)?;
        Ok(MLParams { a, b })
    }
}

/// E_{a,b}(z) for z <= 0, relative accuracy ~1e-10 over z in [-1e8, 0].
pub fn ml_eval(params: MLParams, z: f64) -> Result<f64> {
    mittag_leffler::check_params(params.a, params.b)?;
    if !(z <= 0.0) {
        return Err(CoreError::Domain(format!(
            "ml_eval requires z <= 0, got {z}"
        )));
    }
    mittag_leffler::eval_core(params.a, params.b, z)
}

/// The integrated forcing weight
///
/// ```text
///   int_0^tau s^(a-1) E_{a,a}(-lambda s^a) ds
///     = (1 - E_{a,1}(-lambda tau^a)) / lambda      (lambda > 0)
///     = tau^a / Gamma(1+a)                          (lambda = 0 limit)
/// ```
///
/// continuous in lambda at 0; the small-argument regime goes through the
/// series to avoid the 1 - E cancellation.
pub fn ml_weight(lambda: f64, a: f64, tau: f64) -> Result<f64> {
    mittag_leffler::check_params(a, 1.0)?;
    if !(tau > 0.0) {
        return Err(CoreError::Domain(format!(
            "ml_weight requires tau > 0, got {tau}"
        )));
    }
    if !(lambda >= 0.0) {
        return Err(CoreError::Domain(format!(
            "ml_weight requires lambda >= 0, got {lambda}"
        )));
    }
    let ta = tau.powf(a);
    if lambda == 0.0 {
        return Ok(ta * recip_gamma(1.0 + a));
    }
    let x = lambda * ta;
    if x < 0.1 {
        // (1 - E_{a,1}(-x))/lambda = tau^a sum_{m>=0} (-x)^m / Gamma(a(m+1)+1)
        let mut sum = 0.0;
        let mut xp = 1.0;
        for m in 0..60 {
            let term = xp * recip_gamma(a * (m as f64 + 1.0) + 1.0);
            sum += term;
            xp *= -x;
            if term.abs() < 1e-18 * sum.abs() {
                break;
            }
        }
        Ok(ta * sum)
    } else {
        let e = mittag_leffler::eval_core(a, 1.0, -x)?;
        Ok((1.0 - e) / lambda)
    }
}

/// Product-integration weight over one source interval: the integral of
/// s^(a-1) E_{a,a}(-lambda s^a) over [tau_prev, tau_cur], 0 <= tau_prev < tau_cur.
///
/// Equals ml_weight(lambda, a, tau_cur) - ml_weight(lambda, a, tau_prev) but
/// is evaluated through the supplied curve of E_{a,1} for speed, with a
/// series fallback where the difference of E values would cancel.
pub fn ml_weight_diff(curve: &MlCurve, lambda: f64, a: f64, tau_prev: f64, tau_cur: f64) -> f64 {
    debug_assert!(tau_cur > tau_prev && tau_prev >= 0.0);
    if lambda == 0.0 {
        return (tau_cur.powf(a) - tau_prev.powf(a)) * recip_gamma(1.0 + a);
    }
    let x_cur = lambda * tau_cur.powf(a);
    if x_cur < 1e-3 {
        // sum_m (-1)^m lambda^m (tau_cur^{a(m+1)} - tau_prev^{a(m+1)}) / Gamma(a(m+1)+1)
        let mut sum = 0.0;
        let mut lp = 1.0;
        for m in 0..8 {
            let e = a * (m as f64 + 1.0);
            let term = lp * (tau_cur.powf(e) - tau_prev.powf(e)) * recip_gamma(e + 1.0);
            sum += term;
            lp *= -lambda;
        }
        return sum;
    }
    let e_prev = if tau_prev == 0.0 {
        1.0
    } else {
        curve.eval(lambda * tau_prev.powf(a))
    };
    let e_cur = curve.eval(x_cur);
    (e_prev - e_cur) / lambda
}

const CURVE_DEG: usize = 24;
const CURVE_DY: f64 = 0.25;

/// Piecewise-Chebyshev model of x -> E_{a,b}(-x) on x >= 0, in the
/// variable y = ln(1 + x). Built once per (a, b) and evaluated millions of
/// times by the solver's weight tables; absolute accuracy ~1e-13.
pub struct MlCurve {
    a: f64,
    b: f64,
    pieces: Vec<[f64; CURVE_DEG + 1]>,
}

impl MlCurve {
    pub fn new(a: f64, b: f64, x_max: f64) -> Result<Self> {
        mittag_leffler::check_params(a, b)?;
        let mut curve = MlCurve {
            a,
            b,
            pieces: Vec::new(),
        };
        curve.ensure(x_max)?;
        Ok(curve)
    }

    /// Extend the curve so `eval` accepts arguments up to x_max.
    pub fn ensure(&mut self, x_max: f64) -> Result<()> {
        let y_max = x_max.max(0.0).ln_1p();
        let need = (y_max / CURVE_DY).floor() as usize + 1;
        while self.pieces.len() < need {
            let i = self.pieces.len();
            self.pieces.push(build_piece(self.a, self.b, i)?);
        }
        Ok(())
    }

    /// E_{a,b}(-x); `x` must lie within the built range.
    #[inline]
    pub fn eval(&self, x: f64) -> f64 {
        debug_assert!(x >= 0.0);
        let y = x.ln_1p();
        let mut idx = (y / CURVE_DY) as usize;
        if idx >= self.pieces.len() {
            assert!(
                y <= self.pieces.len() as f64 * CURVE_DY * (1.0 + 1e-12),
                "MlCurve evaluated at x = {x} beyond built range"
            );
            idx = self.pieces.len() - 1;
        }
        let y0 = idx as f64 * CURVE_DY;
        // map to [-1, 1]
        let t = 2.0 * (y - y0) / CURVE_DY - 1.0;
        clenshaw(&self.pieces[idx], t)
    }

    pub fn order(&self) -> f64 {
        self.a
    }
}

fn build_piece(a: f64, b: f64, i: usize) -> Result<[f64; CURVE_DEG + 1]> {
    let n = CURVE_DEG + 1;
    let y0 = i as f64 * CURVE_DY;
    let mut f = [0.0f64; CURVE_DEG + 1];
    for (j, fj) in f.iter_mut().enumerate() {
        let theta = std::f64::consts::PI * (j as f64 + 0.5) / n as f64;
        let y = y0 + 0.5 * CURVE_DY * (theta.cos() + 1.0);
        let x = y.exp_m1();
        *fj = mittag_leffler::eval_core(a, b, -x)?;
    }
    let mut c = [0.0f64; CURVE_DEG + 1];
    for (k, ck) in c.iter_mut().enumerate() {
        let mut s = 0.0;
        for (j, fj) in f.iter().enumerate() {
            let theta = std::f64::consts::PI * (j as f64 + 0.5) / n as f64;
            s += fj * (k as f64 * theta).cos();
        }
        *ck = 2.0 * s / n as f64;
    }
    c[0] *= 0.5;
    Ok(c)
}

#[inline]
fn clenshaw(c: &[f64; CURVE_DEG + 1], t: f64) -> f64 {
    let mut b1 = 0.0;
    let mut b2 = 0.0;
    let two_t = 2.0 * t;
    for k in (1..=CURVE_DEG).rev() {
        let tmp = two_t * b1 - b2 + c[k];
        b2 = b1;
        b1 = tmp;
    }
    t * b1 - b2 + c[0]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ml_eval_at_zero_is_recip_gamma() {
        // E_{a,b}(0) = 1/Gamma(b)
        let p = MLParams::new(0.5, 0.5).unwrap();
        let want = 1.0 / std::f64::consts::PI.sqrt();
        assert!((ml_eval(p, 0.0).unwrap() - want).abs() < 1e-14);
    }

    #[test]
    fn ml_eval_exponential_case() {
        let p = MLParams::new(1.0, 1.0).unwrap();
        let got = ml_eval(p, -1.0).unwrap();
        assert!(((got - (-1.0f64).exp()) / got).abs() < 1e-13);
    }

    #[test]
    fn ml_eval_rejects_bad_params() {
        assert!(MLParams::new(0.0, 1.0).is_err());
        assert!(MLParams::new(1.2, 1.0).is_err());
        assert!(MLParams::new(0.5, 2.5).is_err());
        let p = MLParams { a: 0.5, b: 1.0 };
        assert!(ml_eval(p, 0.5).is_err());
    }

    #[test]
    fn ml_weight_limits() {
        // lambda = 0: tau^a/Gamma(1+a); a=0.5, tau=1 -> 1/Gamma(1.5)
        let w = ml_weight(0.0, 0.5, 1.0).unwrap();
        assert!((w - 1.0 / gamma_fn(1.5)).abs() < 1e-13);
        // a=1: 1 - e^{-1}
        let w = ml_weight(1.0, 1.0, 1.0).unwrap();
        assert!((w - (1.0 - (-1.0f64).exp())).abs() < 1e-13);
    }

    #[test]
    fn ml_weight_continuous_at_lambda_zero() {
        let a = 0.6;
        let tau = 0.8;
        let w0 = ml_weight(0.0, a, tau).unwrap();
        let w1 = ml_weight(1e-9, a, tau).unwrap();
        assert!(((w0 - w1) / w0).abs() < 1e-8);
    }

    #[test]
    fn ml_weight_rejects_bad_domain() {
        assert!(ml_weight(1.0, 0.5, 0.0).is_err());
        assert!(ml_weight(1.0, 0.5, -1.0).is_err());
        assert!(ml_weight(-1.0, 0.5, 1.0).is_err());
    }

    #[test]
    fn curve_matches_direct_eval() {
        let curve = MlCurve::new(0.5, 1.0, 100.0).unwrap();
        let p = MLParams::new(0.5, 1.0).unwrap();
        let mut x = 0.0;
        while x <= 100.0 {
            let want = ml_eval(p, -x).unwrap();
            let got = curve.eval(x);
            assert!(
                (got - want).abs() < 5e-12 * want.abs().max(1e-3),
                "x = {x}: curve {got} vs direct {want}"
            );
            x += 0.37;
        }
    }

    #[test]
    fn weight_diff_matches_weight_difference() {
        let a = 0.5;
        let curve = MlCurve::new(a, 1.0, 50.0).unwrap();
        for &lambda in &[0.0_f64, 1e-6, 0.3, 2.0] {
            for &(t0, t1) in &[(0.0, 0.02), (0.02, 0.04), (3.0, 3.02), (9.98, 10.0)] {
                let direct = ml_weight(lambda.max(0.0), a, t1).unwrap()
                    - if t0 == 0.0 {
                        0.0
                    } else {
                        ml_weight(lambda, a, t0).unwrap()
                    };
                let fast = ml_weight_diff(&curve, lambda, a, t0, t1);
                assert!(
                    (fast - direct).abs() <= 1e-12 + 1e-9 * direct.abs(),
                    "lambda={lambda} [{t0},{t1}]: fast {fast} direct {direct}"
                );
            }
        }
    }
}
