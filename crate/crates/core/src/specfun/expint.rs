//! Exponential integrals: E_nu(x) of real order, Ei(x), and the
//! Ei_m(x) family appearing in the recipro-factorial branch values.

use super::gamma::{digamma_int, gamma_fn};
use crate::error::Result;

/// Ei(x) for x > 0: gamma + ln x + sum_{r>=1} x^r/(r * r!).
/// All terms positive, so plain summation is accurate.
pub fn ei(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    let mut term = 1.0f64;
    let mut sum = 0.0f64;
    for r in 1..=700 {
        let rf = r as f64;
        term *= x / rf;
        let add = term / rf;
        sum += add;
        if add < 1e-17 * sum.max(1.0) {
            break;
        }
    }
    crate::specfun::EULER_GAMMA + x.ln() + sum
}

/// Ei_m(x) = ln x - psi(m) + (m-1)! sum_{r != m-1} x^{r+1-m} / ((r+1-m) r!).
/// Ei_1 == Ei.
pub fn ei_m(m: u32, x: f64) -> f64 {
    debug_assert!(m >= 1 && x > 0.0);
    let mut sum = 0.0f64;
    // factor (m-1)! x^{r+1-m} / r! maintained incrementally
    let mut factor = x.powi(1 - m as i32) * factorial(m - 1);
    for r in 0..700u32 {
        if r != m - 1 {
            let denom = r as f64 + 1.0 - m as f64;
            let add = factor / denom;
            sum += add;
            if r as f64 > x && r > m && add.abs() < 1e-17 * sum.abs().max(1.0) {
                break;
            }
        }
        factor *= x / (r as f64 + 1.0);
    }
    x.ln() - digamma_int(m) + sum
}

fn factorial(n: u32) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// E_nu(x) = int_1^inf e^{-xt} t^{-nu} dt for x > 0.
///
/// Ascending series for small x, modified Lentz continued fraction
/// beyond (which avoids the e^{2x} cancellation of the series).
pub fn expint_nu(nu: f64, x: f64) -> Result<f64> {
    debug_assert!(x > 0.0);
    if x <= 1.5 {
        expint_series(nu, x)
    } else {
        Ok(expint_cf(nu, x))
    }
}

fn expint_series(nu: f64, x: f64) -> Result<f64> {
    if nu == nu.round() && nu >= 1.0 {
        // A&S 5.1.12: E_n(x) = ((-x)^{n-1}/(n-1)!)(psi(n) - ln x)
        //                      - sum_{k != n-1} (-x)^k / ((k - n + 1) k!)
        let n = nu as u32;
        let lead = (-x).powi(n as i32 - 1) / factorial(n - 1) * (digamma_int(n) - x.ln());
        let mut sum = 0.0f64;
        let mut term = 1.0f64; // (-x)^k / k!
        for k in 0..700u32 {
            if k != n - 1 {
                sum += term / (k as f64 - n as f64 + 1.0);
            }
            term *= -x / (k as f64 + 1.0);
            if k as f64 > x && term.abs() < 1e-17 {
                break;
            }
        }
        Ok(lead - sum)
    } else if nu == nu.round() && nu <= 0.0 {
        // Nonpositive integer order, downward from E_0(x) = e^{-x}/x using
        // nu E_{nu+1} = e^{-x} - x E_nu, i.e. E_{-k-1} = (e^{-x} + (k+1) E_{-k})/x.
        let m = (-nu) as u32;
        let mut e = (-x).exp() / x; // E_0
        for k in 0..m {
            e = ((-x).exp() + (k as f64 + 1.0) * e) / x;
        }
        Ok(e)
    } else {
        // non-integer order
        let lead = gamma_fn(1.0 - nu)? * x.powf(nu - 1.0);
        let mut sum = 0.0f64;
        let mut term = 1.0f64; // (-x)^k / k!
        for k in 0..700u32 {
            sum += term / (k as f64 + 1.0 - nu);
            term *= -x / (k as f64 + 1.0);
            if k as f64 > x && term.abs() < 1e-17 {
                break;
            }
        }
        Ok(lead - sum)
    }
}

/// Modified Lentz continued fraction:
/// E_nu(x) = e^{-x} / (x + nu - 1*nu/(x + nu + 2 - 2(nu+1)/(x + nu + 4 - ...))).
fn expint_cf(nu: f64, x: f64) -> f64 {
    let tiny = 1e-300;
    let mut b = x + nu;
    let mut c = 1.0 / tiny;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..400 {
        let ai = -(i as f64) * (nu + i as f64 - 1.0);
        b += 2.0;
        d = 1.0 / (ai * d + b);
        c = b + ai / c;
        let del = c * d;
        h *= del;
        if (del - 1.0).abs() < 1e-16 {
            break;
        }
    }
    (-x).exp() * h
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent brute-force oracle: Ei(x) = gamma + ln x + sum x^r/(r r!).
    fn ei_oracle(x: f64) -> f64 {
        let mut sum = 0.0f64;
        let mut fact = 1.0f64;
        for r in 1..200u32 {
            fact *= x / r as f64;
            sum += fact / r as f64;
        }
        crate::specfun::EULER_GAMMA + x.ln() + sum
    }

    #[test]
    fn ei_at_one() {
        // oracle value, frozen: Ei(1) = 1.8951178163559368...
        let oracle = ei_oracle(1.0);
        assert!((oracle - 1.8951178163559368).abs() < 1e-14);
        assert!((ei(1.0) - oracle).abs() < 1e-14);
    }

    #[test]
    fn ei1_equals_ei() {
        for &x in &[0.2, 1.0, 3.7, 12.0, 50.0] {
            let a = ei_m(1, x);
            let b = ei(x);
            assert!((a - b).abs() < 1e-12 * b.abs().max(1.0), "x = {x}");
        }
    }

    #[test]
    fn ei2_leading_term_near_zero() {
        // Ei_2(x) ~ -1/x as x -> 0+
        let x = 1e-8;
        let v = ei_m(2, x);
        assert!((v * x + 1.0).abs() < 1e-6);
    }

    #[test]
    fn expint_orders() {
        // E_1(1) = 0.21938393439552028 (mpmath expint(1,1))
        let v = expint_nu(1.0, 1.0).unwrap();
        assert!((v - 0.21938393439552028).abs() < 1e-13);
        // E_0(x) = e^{-x}/x exactly
        for &x in &[0.3, 1.0, 2.5, 8.0] {
            let v = expint_nu(0.0, x).unwrap();
            let expected = (-x).exp() / x;
            assert!((v - expected).abs() < 1e-12 * expected);
        }
        // half order, series side (mpmath expint(0.5, 0.7))
        let v = expint_nu(0.5, 0.7).unwrap();
        assert!((v - 0.5014959375020237).abs() < 1e-12);
        // continued-fraction side (mpmath expint(1.5, 4.0))
        let v = expint_nu(1.5, 4.0).unwrap();
        assert!((v - 0.003467000254777691).abs() < 1e-12, "got {v}");
    }

    #[test]
    fn series_cf_agree_at_boundary() {
        for &nu in &[0.25, 1.0, 2.0, 3.5] {
            let s = expint_series(nu, 1.5).unwrap();
            let c = expint_cf(nu, 1.5);
            assert!((s - c).abs() < 1e-12 * s.abs(), "nu = {nu}: {s} vs {c}");
        }
    }
}
