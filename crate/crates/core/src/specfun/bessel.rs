//! Modified Bessel functions I_nu and K_nu for real order and x > 0.
//!
//! I_nu comes from its ascending series (positive terms, no cancellation).
//! K_nu is built from the reflection combination
//!     K_nu = (pi/2) (I_{-nu} - I_nu) / sin(pi nu),
//! whose numerator cancels to ~e^{-2x} of the term size, so the two
//! series are summed in double-double; integer nu takes the limit by
//! symmetric perturbation + Richardson. Beyond x = 16 the Hankel
//! asymptotic expansion is accurate to ~e^{-2x} and takes over.

use super::dd::{dd_recip_gamma, Dd, DD_PI};
use super::gamma::recip_gamma;

const ASYMPTOTIC_X: f64 = 16.0;

/// (I_nu(x), K_nu(x)); K_nu == K_{-nu} is enforced by reducing to |nu|.
pub fn bessel_ik(nu: f64, x: f64) -> (f64, f64) {
    debug_assert!(x > 0.0);
    let anu = nu.abs();
    let k = bessel_k_abs(anu, x);
    let i = bessel_i(nu, x, k);
    (i, k)
}

/// (I_nu'(x), K_nu'(x)) from the standard derivative identities.
pub fn bessel_ik_deriv(nu: f64, x: f64) -> (f64, f64) {
    let (i_m, k_m) = bessel_ik(nu - 1.0, x);
    let (i_p, k_p) = bessel_ik(nu + 1.0, x);
    (0.5 * (i_m + i_p), -0.5 * (k_m + k_p))
}

fn bessel_i(nu: f64, x: f64, k_nu: f64) -> f64 {
    if nu >= 0.0 || nu == nu.round() {
        // I_{-m} = I_m for integer m
        bessel_i_series(nu.abs(), x)
    } else {
        // reflection: I_{-nu} = I_nu + (2/pi) sin(pi nu) K_nu, nu > 0
        let anu = -nu;
        bessel_i_series(anu, x)
            + (2.0 / std::f64::consts::PI) * super::gamma::sin_pi(anu) * k_nu
    }
}

/// Ascending series of I_nu, nu >= 0 (or any nu with Gamma handled by
/// reciprocal): sum_k (x/2)^{nu+2k} / (k! Gamma(nu+k+1)).
fn bessel_i_series(nu: f64, x: f64) -> f64 {
    let half = 0.5 * x;
    let q = half * half;
    // first factor (x/2)^nu / Gamma(nu+1)
    let mut term = half.powf(nu) * recip_gamma(nu + 1.0);
    if term == 0.0 && nu == nu.round() && nu < 0.0 {
        // integer negative order: leading terms vanish until k = -nu
        return bessel_i_series(-nu, x);
    }
    let mut sum = term;
    for k in 1..600 {
        let kf = k as f64;
        term *= q / (kf * (nu + kf));
        sum += term;
        if term.abs() < 1e-18 * sum.abs().max(1e-300) {
            break;
        }
    }
    sum
}

/// K_nu(x) for nu >= 0.
fn bessel_k_abs(nu: f64, x: f64) -> f64 {
    if x >= ASYMPTOTIC_X {
        return bessel_k_asymptotic(nu, x);
    }
    if nu == nu.round() {
        // integer order: symmetric perturbation + Richardson on the
        // dd combination (K is analytic in nu).
        let eps = 1e-5;
        let h = |e: f64| 0.5 * (bessel_k_combo_dd(nu + e, x) + bessel_k_combo_dd(nu - e, x));
        let h1 = h(eps);
        let h2 = h(2.0 * eps);
        (4.0 * h1 - h2) / 3.0
    } else {
        bessel_k_combo_dd(nu, x)
    }
}

/// (pi/2)(I_{-nu} - I_nu)/sin(pi nu) fully in double-double.
fn bessel_k_combo_dd(nu: f64, x: f64) -> f64 {
    let i_pos = bessel_i_series_dd(nu, x);
    let i_neg = bessel_i_series_dd(-nu, x);
    let s = Dd::sin_pi(Dd::from_f64(nu));
    DD_PI
        .mul_f64(0.5)
        .mul(i_neg.sub(i_pos))
        .div(s)
        .to_f64()
}

/// I_nu series in double-double; needs dd powf and dd 1/Gamma so that the
/// e^{2x} cancellation in the K combination stays below ~1e-30 relative.
fn bessel_i_series_dd(nu: f64, x: f64) -> Dd {
    let half = Dd::from_f64(x).mul_f64(0.5);
    let q = half.mul(half);
    let nud = Dd::from_f64(nu);
    let lead = half.powf(nud).mul(dd_recip_gamma(nud.add_f64(1.0)));
    let mut term = lead;
    let mut sum = term;
    for k in 1..600 {
        let kf = k as f64;
        term = term.mul(q).div(nud.add_f64(kf).mul_f64(kf));
        sum = sum.add(term);
        if term.hi.abs() < 1e-33 * sum.hi.abs().max(1e-300) {
            break;
        }
    }
    sum
}

/// Hankel expansion K_nu(x) ~ sqrt(pi/2x) e^{-x} sum_k a_k(nu)/x^k,
/// a_k = prod_{j<=k} (4 nu^2 - (2j-1)^2) / (k! 8^k).
fn bessel_k_asymptotic(nu: f64, x: f64) -> f64 {
    let four_nu2 = 4.0 * nu * nu;
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    let mut last = f64::INFINITY;
    for k in 1..60 {
        let kf = k as f64;
        let next = term * (four_nu2 - (2.0 * kf - 1.0).powi(2)) / (8.0 * kf * x);
        if next.abs() >= last {
            break;
        }
        term = next;
        sum += term;
        last = term.abs();
        if last < 1e-18 * sum.abs() {
            break;
        }
    }
    (std::f64::consts::PI / (2.0 * x)).sqrt() * (-x).exp() * sum
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_values() {
        // mpmath: besseli(0, 1) = 1.2660658777520084, besselk(0, 1) = 0.42102443824070834
        let (i0, k0) = bessel_ik(0.0, 1.0);
        assert!((i0 - 1.2660658777520084).abs() < 1e-13);
        assert!((k0 - 0.42102443824070834).abs() < 1e-13);
        // besselk(1/3, 2.4) = 0.07161229108937040619 (mpmath)
        let (_, k13) = bessel_ik(1.0 / 3.0, 2.4);
        assert!((k13 - 0.07161229108937041).abs() / k13 < 1e-12);
        // besselk(2, 10) = 2.150981700693277e-5
        let (_, k2) = bessel_ik(2.0, 10.0);
        assert!((k2 - 2.150981700693277e-5).abs() / k2 < 1e-12);
        // across the asymptotic switch
        let (i2, k2a) = bessel_ik(2.0, 17.0);
        assert!((k2a - 1.4007257164160867e-8).abs() / k2a < 1e-11);
        assert!((i2 - 2.0861912133085193e6).abs() / i2 < 1e-12);
    }

    #[test]
    fn k_is_even_in_nu() {
        for &(nu, x) in &[(0.7, 3.0), (1.5, 0.4), (2.0, 5.0)] {
            let (_, kp) = bessel_ik(nu, x);
            let (_, km) = bessel_ik(-nu, x);
            assert!((kp - km).abs() <= 1e-15 * kp.abs());
        }
    }

    #[test]
    fn wronskian_identity() {
        // I_nu(x) K_nu'(x) - I_nu'(x) K_nu(x) = -1/x
        for &(nu, x) in &[(2.0, 1.7), (0.0, 0.3), (1.0 / 3.0, 6.0), (1.5, 14.0), (0.5, 20.0)] {
            let (i, k) = bessel_ik(nu, x);
            let (ip, kp) = bessel_ik_deriv(nu, x);
            let w = i * kp - ip * k;
            let expected = -1.0 / x;
            assert!(
                (w - expected).abs() < 1e-11 * expected.abs(),
                "nu={nu} x={x}: w={w} vs {expected}"
            );
        }
    }

    #[test]
    fn k2_has_no_positive_real_zeros() {
        // the zero-finding integrand 1/(K_2(x/2)^2 + pi^2 I_2(x/2)^2) is
        // finite and smooth on (0, inf): K_2 never vanishes for x > 0
        for i in 0..60 {
            let x = 1e-3 * 10f64.powf(i as f64 * 0.08);
            let (i2, k2) = bessel_ik(2.0, 0.5 * x);
            assert!(k2 > 0.0, "x={x}");
            let denom = k2 * k2 + std::f64::consts::PI.powi(2) * i2 * i2;
            assert!(denom.is_finite() && denom > 0.0, "x={x}");
        }
    }

    #[test]
    fn small_x_limits() {
        // I_0 -> 1, K_0 ~ -ln(x/2) - gamma
        let (i0, k0) = bessel_ik(0.0, 1e-6);
        assert!((i0 - 1.0).abs() < 1e-11);
        let expected = -(0.5e-6f64).ln() - crate::specfun::EULER_GAMMA;
        assert!((k0 - expected).abs() < 1e-10);
    }

    #[test]
    fn half_integer_closed_forms() {
        // K_{1/2}(x) = sqrt(pi/2x) e^{-x}
        for &x in &[0.5, 2.0, 9.0] {
            let (_, k) = bessel_ik(0.5, x);
            let expected = (std::f64::consts::PI / (2.0 * x)).sqrt() * (-x).exp();
            assert!((k - expected).abs() < 1e-13 * expected);
        }
        // I_{1/2}(x) = sqrt(2/pi x) sinh x
        let x = 3.0f64;
        let (i, _) = bessel_ik(0.5, x);
        let expected = (2.0 / (std::f64::consts::PI * x)).sqrt() * x.sinh();
        assert!((i - expected).abs() < 1e-13 * expected);
    }
}
