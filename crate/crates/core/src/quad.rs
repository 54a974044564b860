//! Quadrature primitives: adaptive Gauss-Kronrod, fixed Gauss-Legendre
//! panels, and an averaging accelerator for alternating series.

use crate::error::{CoreError, Result};

/// 7-point Gauss / 15-point Kronrod nodes on [-1, 1] (positive half).
const GK_XK: [f64; 8] = [
    0.991455371120813,
    0.949107912342759,
    0.864864423359769,
    0.741531185599394,
    0.586087235467691,
    0.405845151377397,
    0.207784955007898,
    0.0,
];
const GK_WK: [f64; 8] = [
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064785,
    0.204432940075298,
    0.209482141084728,
];
const GK_WG: [f64; 4] = [
    0.129484966168870,
    0.279705391489277,
    0.381830050505119,
    0.417959183673469,
];

/// One Gauss-Kronrod 15(7) evaluation; returns (kronrod, |kronrod - gauss|).
fn gk15<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64) -> (f64, f64) {
    let c = 0.5 * (lo + hi);
    let h = 0.5 * (hi - lo);
    let mut resk = 0.0;
    let mut resg = 0.0;
    for i in 0..8 {
        let (fa, fb) = if GK_XK[i] == 0.0 {
            let v = f(c);
            (v, 0.0)
        } else {
            (f(c - h * GK_XK[i]), f(c + h * GK_XK[i]))
        };
        let fsum = if GK_XK[i] == 0.0 { fa } else { fa + fb };
        resk += GK_WK[i] * fsum;
        // Gauss points are the odd-indexed Kronrod points.
        if i % 2 == 1 {
            resg += GK_WG[i / 2] * fsum;
        } else if GK_XK[i] == 0.0 {
            resg += GK_WG[3] * fa;
        }
    }
    (resk * h, ((resk - resg) * h).abs())
}

/// Adaptive Gauss-Kronrod integration of `f` on [lo, hi].
///
/// Splits the worst interval until the summed error estimate drops below
/// `tol_abs` or `max_splits` is exhausted.
pub fn adaptive_gk<F: Fn(f64) -> f64>(
    f: &F,
    lo: f64,
    hi: f64,
    tol_abs: f64,
    max_splits: usize,
) -> Result<f64> {
    let (v, e) = gk15(f, lo, hi);
    let mut parts: Vec<(f64, f64, f64, f64)> = vec![(lo, hi, v, e)];
    for _ in 0..max_splits {
        let err: f64 = parts.iter().map(|p| p.3).sum();
        if err <= tol_abs {
            break;
        }
        // split the interval with the largest error estimate
        let (idx, _) = parts
            .iter()
            .enumerate()
            .max_by(|x, y| x.1 .3.partial_cmp(&y.1 .3).unwrap())
            .unwrap();
        let (a, b, _, _) = parts.swap_remove(idx);
        let m = 0.5 * (a + b);
        let (v1, e1) = gk15(f, a, m);
        let (v2, e2) = gk15(f, m, b);
        parts.push((a, m, v1, e1));
        parts.push((m, b, v2, e2));
    }
    let err: f64 = parts.iter().map(|p| p.3).sum();
    let val: f64 = parts.iter().map(|p| p.2).sum();
    if err > tol_abs.max(1e-14 * val.abs()) * 16.0 {
        return Err(CoreError::QuadratureNonconvergence(format!(
            "adaptive GK15 residual {err:.3e} over [{lo}, {hi}]"
        )));
    }
    Ok(val)
}

/// Fixed-order Gauss-Legendre rule; nodes/weights computed by Newton
/// iteration on the Legendre polynomial (deterministic).
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    pub fn new(order: usize) -> Self {
        let n = order;
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        for i in 0..n.div_ceil(2) {
            // Chebyshev-based initial guess
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-15 {
                    break;
                }
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        GaussLegendre { nodes, weights }
    }

    /// Integrate `f` over [lo, hi].
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: &F, lo: f64, hi: f64) -> f64 {
        let c = 0.5 * (lo + hi);
        let h = 0.5 * (hi - lo);
        let mut acc = 0.0;
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            acc += w * f(c + h * x);
        }
        acc * h
    }
}

/// Legendre P_n(x) and its derivative.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Accelerated limit of the partial sums of an alternating-tail series.
///
/// Given partial sums `s[0..m]`, repeatedly averages neighbours; for an
/// alternating series with slowly varying (even polynomially growing)
/// amplitude this converges to the Abel-summed limit. Returns the apex of
/// the averaging triangle together with a crude error estimate (difference
/// of the last two levels).
pub fn averaged_limit(partials: &[f64]) -> (f64, f64) {
    assert!(!partials.is_empty());
    let mut row = partials.to_vec();
    let mut prev_apex = row[0];
    while row.len() > 1 {
        for i in 0..row.len() - 1 {
            row[i] = 0.5 * (row[i] + row[i + 1]);
        }
        row.pop();
        prev_apex = if row.len() > 1 { row[0] } else { prev_apex };
    }
    let apex = row[0];
    (apex, (apex - prev_apex).abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gk_integrates_polynomials_exactly() {
        let f = |x: f64| 3.0 * x * x;
        let v = adaptive_gk(&f, 0.0, 2.0, 1e-12, 50).unwrap();
        assert!((v - 8.0).abs() < 1e-12, "got {v}");
    }

    #[test]
    fn gk_handles_mild_singularity() {
        // integral of x^(-1/2) over (0,1] = 2, integrable endpoint
        let f = |x: f64| if x > 0.0 { x.powf(-0.5) } else { 0.0 };
        let v = adaptive_gk(&f, 0.0, 1.0, 1e-9, 2000).unwrap();
        assert!((v - 2.0).abs() < 1e-5, "got {v}");
    }

    #[test]
    fn gl_nodes_match_known_order_4() {
        let gl = GaussLegendre::new(4);
        // x^6 over [-1,1]: exact 2/7; GL4 integrates degree <= 7 exactly
        let v = gl.integrate(&|x: f64| x * x * x * x * x * x, -1.0, 1.0);
        assert!((v - 2.0 / 7.0).abs() < 1e-14);
    }

    #[test]
    fn averaging_sums_alternating_series() {
        // sum (-1)^k/(k+1) = ln 2; partial sums converge slowly
        let mut partials = Vec::new();
        let mut s = 0.0;
        for k in 0..30 {
            s += if k % 2 == 0 { 1.0 } else { -1.0 } / (k as f64 + 1.0);
            partials.push(s);
        }
        let (v, _) = averaged_limit(&partials);
        assert!((v - std::f64::consts::LN_2).abs() < 1e-10, "got {v}");
    }

    #[test]
    fn averaging_handles_polynomially_growing_amplitude() {
        // sum (-1)^k (k+1) is Abel-summable to 1/4
        let mut partials = Vec::new();
        let mut s = 0.0;
        for k in 0..40 {
            s += if k % 2 == 0 { 1.0 } else { -1.0 } * (k as f64 + 1.0);
            partials.push(s);
        }
        let (v, _) = averaged_limit(&partials);
        assert!((v - 0.25).abs() < 1e-9, "got {v}");
    }
}
