//! Airy functions Ai, Bi and derivatives on x >= 0.
//!
//! The Maclaurin series is summed in double-double up to x = 8 (the
//! subtraction forming Ai loses ~e^{2 zeta} of relative precision, far
//! beyond plain doubles), and the standard asymptotic expansions take
//! over beyond that.

use super::dd::{Dd, DD_AIRY_C1, DD_AIRY_C2, DD_SQRT3};

/// (Ai, Bi, Ai', Bi') at x.
pub fn airy_pair(x: f64) -> (f64, f64, f64, f64) {
    debug_assert!(x >= 0.0, "airy_pair is implemented for x >= 0");
    if x < 8.0 {
        airy_series_dd(x)
    } else {
        airy_asymptotic(x)
    }
}

/// Maclaurin solutions f, g of w'' = x w with f(0)=1, f'(0)=0 and
/// g(0)=0, g'(0)=1; then Ai = c1 f - c2 g, Bi = sqrt(3)(c1 f + c2 g).
fn airy_series_dd(x: f64) -> (f64, f64, f64, f64) {
    let xd = Dd::from_f64(x);
    let x3 = xd.mul(xd).mul(xd);
    // f and its derivative sum; derivative terms accumulate t_k * (3k)
    // (exact small-integer multipliers) and divide by x once at the end
    let mut f_term = Dd::ONE;
    let mut f_sum = Dd::ONE;
    let mut fp_acc = Dd::ZERO; // sum of f_term * 3k
    let mut g_term = xd;
    let mut g_sum = xd;
    let mut gp_acc = Dd::ZERO; // sum over k>=1 of g_term * (3k+1)
    for k in 1..150u32 {
        let kf = k as f64;
        f_term = f_term.mul(x3).div_f64(3.0 * kf * (3.0 * kf - 1.0));
        f_sum = f_sum.add(f_term);
        g_term = g_term.mul(x3).div_f64((3.0 * kf + 1.0) * 3.0 * kf);
        g_sum = g_sum.add(g_term);
        fp_acc = fp_acc.add(f_term.mul_f64(3.0 * kf));
        gp_acc = gp_acc.add(g_term.mul_f64(3.0 * kf + 1.0));
        if f_term.hi.abs() < 1e-34 * f_sum.hi && g_term.hi.abs() < 1e-34 * g_sum.hi.max(1e-300) {
            break;
        }
    }
    let (fp_sum, gp_sum) = if x > 0.0 {
        (fp_acc.div(xd), Dd::ONE.add(gp_acc.div(xd)))
    } else {
        (Dd::ZERO, Dd::ONE)
    };
    let c1f = DD_AIRY_C1.mul(f_sum);
    let c2g = DD_AIRY_C2.mul(g_sum);
    let c1fp = DD_AIRY_C1.mul(fp_sum);
    let c2gp = DD_AIRY_C2.mul(gp_sum);
    let ai = c1f.sub(c2g).to_f64();
    let bi = DD_SQRT3.mul(c1f.add(c2g)).to_f64();
    let aip = c1fp.sub(c2gp).to_f64();
    let bip = DD_SQRT3.mul(c1fp.add(c2gp)).to_f64();
    (ai, bi, aip, bip)
}

fn airy_asymptotic(x: f64) -> (f64, f64, f64, f64) {
    let zeta = 2.0 / 3.0 * x.powf(1.5);
    // u_k and v_k coefficient recurrences (DLMF 9.7):
    // u_k = u_{k-1} (6k-5)(6k-3)(6k-1) / (216 k (2k-1)),
    // v_k = u_k (6k+1)/(1-6k).
    let mut u = 1.0f64;
    let mut ai_s = 1.0;
    let mut bi_s = 1.0;
    let mut aip_s = 1.0;
    let mut bip_s = 1.0;
    let mut zk = 1.0f64;
    for k in 1..40u32 {
        let kf = k as f64;
        u *= (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0)
            / (216.0 * kf * (2.0 * kf - 1.0));
        let v = u * (6.0 * kf + 1.0) / (1.0 - 6.0 * kf);
        zk /= zeta;
        let tu = u * zk;
        let tv = v * zk;
        if tu.abs() > 1.0 {
            break; // divergence point of the asymptotic series
        }
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        ai_s += sign * tu;
        bi_s += tu;
        aip_s += sign * tv;
        bip_s += tv;
        if tu.abs() < 1e-18 {
            break;
        }
    }
    let sqrt_pi = std::f64::consts::PI.sqrt();
    let x4 = x.powf(0.25);
    let em = (-zeta).exp();
    let ep = zeta.exp();
    let ai = em / (2.0 * sqrt_pi * x4) * ai_s;
    let bi = ep / (sqrt_pi * x4) * bi_s;
    let aip = -x4 * em / (2.0 * sqrt_pi) * aip_s;
    let bip = x4 * ep / sqrt_pi * bip_s;
    (ai, bi, aip, bip)
}
