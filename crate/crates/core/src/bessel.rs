//! Bessel J0, needed by the two-dimensional radial Fourier inversion.

use std::f64::consts::{FRAC_PI_4, PI};

/// Hankel-expansion coefficients a_k for nu = 0:
/// a_k = prod_{j=1..k} -(2j-1)^2 / (8 k!) cumulative form.
fn hankel_coeffs() -> [f64; 18] {
    let mut a = [0.0f64; 18];
    a[0] = 1.0;
    for k in 1..18 {
        let m = (2 * k - 1) as f64;
        a[k] = a[k - 1] * (-(m * m)) / (8.0 * k as f64);
    }
    a
}

/// J0(x) — power series below 8, Hankel asymptotics above (abs error
/// around 2e-9 at the splice, far better elsewhere).
pub fn j0(x: f64) -> f64 {
    let x = x.abs();
    if x <= 8.0 {
        // sum (-1)^k (x/2)^{2k} / (k!)^2
        let q = 0.25 * x * x;
        let mut term = 1.0;
        let mut sum = 1.0;
        for k in 1..60 {
            term *= -q / ((k * k) as f64);
            sum += term;
            if term.abs() < 1e-18 {
                break;
            }
        }
        sum
    } else {
        let a = hankel_coeffs();
        let inv = 1.0 / x;
        let mut p = 0.0;
        let mut q = 0.0;
        // P = sum (-1)^k a_{2k} x^{-2k}, Q = sum (-1)^k a_{2k+1} x^{-2k-1}
        for k in (0..9).rev() {
            let s = if k % 2 == 0 { 1.0 } else { -1.0 };
            p = p + s * a[2 * k] * inv.powi(2 * k as i32);
            if 2 * k + 1 < 18 {
                q += s * a[2 * k + 1] * inv.powi(2 * k as i32 + 1);
            }
        }
        let chi = x - FRAC_PI_4;
        (2.0 / (PI * x)).sqrt() * (p * chi.cos() - q * chi.sin())
    }
}

/// k-th positive zero of J0 (McMahon's expansion; used as oscillation
/// panel boundaries, where a sub-1e-4 error is immaterial).
pub fn j0_zero(k: usize) -> f64 {
    let beta = (k as f64 - 0.25) * PI;
    beta + 1.0 / (8.0 * beta) - 124.0 / (3.0 * (8.0 * beta).powi(3))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn j0_reference_values() {
        let cases = [
            (0.0, 1.0),
            (1.0, 0.7651976865579666),
            (5.0, -0.17759677131433830),
            (7.9, 0.19436184484127824),
            (8.1, 0.14751745404437767),
            (10.0, -0.2459357644513483),
            (50.0, 0.05581232766925181),
        ];
        for (x, want) in cases {
            let got = j0(x);
            assert!(
                (got - want).abs() < 5e-9,
                "j0({x}) = {got}, want {want}"
            );
        }
    }

    #[test]
    fn j0_first_zeros() {
        // true zeros: 2.404825557695773, 5.520078110286311, 8.653727912911013
        for (k, z) in [(1, 2.404825557695773), (2, 5.520078110286311), (3, 8.653727912911013)] {
            assert!((j0_zero(k) - z).abs() < 2e-3, "zero {k}: {}", j0_zero(k));
            assert!(j0(z).abs() < 1e-8);
        }
    }
}
