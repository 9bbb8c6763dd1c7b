//! Special-function kernel: Gamma/digamma, scaled Kummer M, branch
//! values of Tricomi's U on the cut, Airy and modified-Bessel pairs,
//! exponential integrals, Laguerre roots, and complex U with derivative.

pub mod airy;
pub mod bessel;
pub mod dd;
pub mod expint;
pub mod gamma;
pub mod kummer;
pub mod laguerre;
pub mod polyroots;

pub use airy::airy_pair;
pub use bessel::{bessel_ik, bessel_ik_deriv};
pub use expint::{ei, ei_m, expint_nu};
pub use gamma::{cos_pi, digamma_fn, gamma_fn, gamma_ratio, ln_gamma_sign, recip_gamma, sin_pi};
pub use kummer::{
    kummer_m_scaled, kummer_m_scaled_dd, ray_crossover, u_branch_asymptotic, u_branch_series,
    u_complex, BranchPair,
};
pub use laguerre::{laguerre_monic_coeffs, laguerre_roots};

use dd::{Dd, DD_EULER, DD_LN2, DD_SQRT_PI};
use crate::error::{Error, Result};

/// Euler's constant gamma.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

const SQRT_PI: f64 = 1.772_453_850_905_516;

/// Branch values U(a,b,x e^{+-i pi}) = U_R +- i U_I with closed forms for
/// the named families, the two-Kummer-series route otherwise, perturbation
/// for integer b, and the ray asymptotics beyond the series crossover.
///
/// Polynomial cases a in -N are routed to the Laguerre paths and error
/// here; a = 0 (U identically 1) is allowed since the Bessel nu = 1/2
/// family needs it.
pub fn u_branch_values(a: f64, b: f64, x: f64) -> Result<BranchPair> {
    if x <= 0.0 || x.is_nan() {
        return Err(Error::InvalidParams("u_branch_values needs x > 0"));
    }
    if a == 0.0 {
        return Ok(BranchPair { u_r: 1.0, u_i: 0.0, err: 0.0 });
    }
    if a < 0.0 && a == a.round() {
        return Err(Error::PolynomialCase);
    }
    if b == 2.0 * a {
        return Ok(bessel_branch(0.5 - a, x));
    }
    if a == b && a == a.round() && a >= 1.0 {
        return Ok(ei_branch(a as u32, x));
    }
    if a == 0.5 && b == 0.0 {
        return Ok(s221_branch(x));
    }
    u_branch_generic(a, b, x)
}

/// The generic route only (no family dispatch): reflection-formula series below the
/// ray crossover, asymptotics above, integer b by perturbation.
pub fn u_branch_generic(a: f64, b: f64, x: f64) -> Result<BranchPair> {
    if a < 0.0 && a == a.round() {
        return Err(Error::PolynomialCase);
    }
    if x > ray_crossover(a, b) {
        return Ok(u_branch_asymptotic(a, b, x));
    }
    if b == b.round() {
        return Ok(u_branch_integer_b(a, b, x));
    }
    u_branch_series(a, b, x)
}

/// Integer b: evaluate at b +- eps for eps = 1e-5, 2e-5 in double-double
/// and Richardson-extrapolate the even part (truncation O(eps^4)).
fn u_branch_integer_b(a: f64, b: f64, x: f64) -> BranchPair {
    let ad = Dd::from_f64(a);
    let h = |e: f64| {
        let p = kummer::u_branch_series_dd(ad, Dd::from_f64(b).add_f64(e), x);
        let m = kummer::u_branch_series_dd(ad, Dd::from_f64(b).add_f64(-e), x);
        (0.5 * (p.u_r + m.u_r), 0.5 * (p.u_i + m.u_i))
    };
    let eps = 1e-5;
    let h1 = h(eps);
    let h2 = h(2.0 * eps);
    let u_r = (4.0 * h1.0 - h2.0) / 3.0;
    let u_i = (4.0 * h1.1 - h2.1) / 3.0;
    let err = ((h1.0 - h2.0).abs() + (h1.1 - h2.1).abs()) / 3.0;
    BranchPair { u_r, u_i, err }
}

/// Bessel-class closed form (b = 2a, nu = 1/2 - a), valid for all real nu:
/// U_R = pi^{-1/2} x^nu e^{-x/2} ( K_nu(x/2) + pi sin(pi nu) I_nu(x/2) )
/// U_I = -pi^{1/2} cos(pi nu) x^nu e^{-x/2} I_nu(x/2)
pub fn bessel_branch(nu: f64, x: f64) -> BranchPair {
    let (i, k) = bessel_ik(nu, 0.5 * x);
    let amp = x.powf(nu) * (-0.5 * x).exp();
    let u_r = amp / SQRT_PI * (k + std::f64::consts::PI * sin_pi(nu) * i);
    let u_i = -SQRT_PI * cos_pi(nu) * amp * i;
    let err = 1e-13 * (u_r.abs() + u_i.abs());
    BranchPair { u_r, u_i, err }
}

/// Recipro-factorial closed form for a = b = m (integer >= 1):
/// U_R = (-1)^m / (m-1)! e^{-x} Ei_m(x),  U_I = (-1)^m / (m-1)! pi e^{-x}.
fn ei_branch(m: u32, x: f64) -> BranchPair {
    let sign = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
    let fact: f64 = (1..m).map(|k| k as f64).product();
    let scale = sign / fact * (-x).exp();
    BranchPair {
        u_r: scale * ei_m(m, x),
        u_i: scale * std::f64::consts::PI,
        err: 1e-13 * scale.abs() * (ei_m(m, x).abs() + 4.0),
    }
}

/// S(2,-2,1) closed form (a = 1/2, b = 0), the removable-singularity limit:
/// U_R = e^{-x} [ 2/sqrt(pi) + (1/pi) sum_r g_r (d_r - ln x) x^{r+1} ]
/// U_I = -x e^{-x} sum_r g_r x^r
/// with g_r = Gamma(1/2+r)/(Gamma(2+r) r!) and
/// d_r = psi(2+r) - psi(1/2+r) + psi(1+r).
///
/// Summed in double-double: U_R is exponentially smaller than its largest
/// terms for large x (the cos(pi a) = 0 cancellation).
fn s221_branch(x: f64) -> BranchPair {
    let xd = Dd::from_f64(x);
    let ln_x = xd.ln();
    // g_0 = sqrt(pi); d_0 = 1 + 2 ln 2 - gamma
    let mut g = DD_SQRT_PI;
    let mut d = Dd::ONE.add(DD_LN2.mul_f64(2.0)).sub(DD_EULER);
    let mut xpow = xd; // x^{r+1}
    let mut sum_r = Dd::ZERO;
    let mut sum_i = Dd::ZERO;
    for r in 0..800u32 {
        let rf = r as f64;
        sum_r = sum_r.add(g.mul(d.sub(ln_x)).mul(xpow));
        sum_i = sum_i.add(g.mul(xpow));
        // advance g, d, xpow to r+1
        g = g.mul_f64(0.5 + rf).div_f64((2.0 + rf) * (1.0 + rf));
        d = d
            .add(Dd::from_f64(1.0 / (2.0 + rf)))
            .sub(Dd::from_f64(1.0 / (0.5 + rf)))
            .add(Dd::from_f64(1.0 / (1.0 + rf)));
        xpow = xpow.mul(xd);
        if rf > x && g.mul(xpow).hi.abs() < 1e-34 * sum_i.hi.abs().max(1e-300) {
            break;
        }
    }
    let e = xd.neg().exp();
    let u_r = e
        .mul(Dd::from_f64(2.0).div(DD_SQRT_PI).add(sum_r.div(dd::DD_PI)))
        .to_f64();
    let u_i = e.mul(sum_i).neg().to_f64();
    BranchPair {
        u_r,
        u_i,
        err: 1e-28 * (u_i.abs() + u_r.abs()),
    }
}
