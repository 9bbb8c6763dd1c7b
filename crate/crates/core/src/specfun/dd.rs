//! Double-double arithmetic: ~31 significant digits from unevaluated
//! sums of two f64s. Used as the extended-precision fallback when the
//! tracked rounding error of a double-precision kernel exceeds tolerance,
//! and for the cancellation-prone branch-value subtractions.
//!
//! Algorithms are the classical error-free transformations (two_sum,
//! two_prod via FMA) as in Dekker/Knuth and the QD library.

// the generated hi/lo constant tables legitimately spell out more digits
// than one f64 holds, and the arithmetic methods mirror the usual dd
// naming rather than the operator traits
#![allow(clippy::excessive_precision, clippy::approx_constant, clippy::should_implement_trait)]

/// Unevaluated sum hi + lo with |lo| <= ulp(hi)/2.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let err = b - (s - a);
    (s, err)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let err = a.mul_add(b, -p);
    (p, err)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    #[inline]
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    /// Exact small ratio p/q rendered into double-double.
    pub fn from_ratio(p: i64, q: i64) -> Dd {
        Dd::from_f64(p as f64).div(Dd::from_f64(q as f64))
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }

    #[inline]
    pub fn abs(self) -> Dd {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            self.neg()
        } else {
            self
        }
    }

    #[inline]
    pub fn add(self, other: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, other.hi);
        let (t1, t2) = two_sum(self.lo, other.lo);
        let (s1, s2b) = quick_two_sum(s1, s2 + t1);
        let (hi, lo) = quick_two_sum(s1, s2b + t2);
        Dd { hi, lo }
    }

    #[inline]
    pub fn add_f64(self, other: f64) -> Dd {
        let (s1, s2) = two_sum(self.hi, other);
        let (hi, lo) = quick_two_sum(s1, s2 + self.lo);
        Dd { hi, lo }
    }

    #[inline]
    pub fn sub(self, other: Dd) -> Dd {
        self.add(other.neg())
    }

    #[inline]
    pub fn mul(self, other: Dd) -> Dd {
        let (p1, p2) = two_prod(self.hi, other.hi);
        let p2 = p2 + self.hi * other.lo + self.lo * other.hi;
        let (hi, lo) = quick_two_sum(p1, p2);
        Dd { hi, lo }
    }

    #[inline]
    pub fn mul_f64(self, other: f64) -> Dd {
        let (p1, p2) = two_prod(self.hi, other);
        let p2 = p2 + self.lo * other;
        let (hi, lo) = quick_two_sum(p1, p2);
        Dd { hi, lo }
    }

    #[inline]
    pub fn div(self, other: Dd) -> Dd {
        let q1 = self.hi / other.hi;
        let r = self.sub(other.mul_f64(q1));
        let q2 = r.hi / other.hi;
        let r = r.sub(other.mul_f64(q2));
        let q3 = r.hi / other.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo }.add_f64(q3)
    }

    #[inline]
    pub fn div_f64(self, other: f64) -> Dd {
        self.div(Dd::from_f64(other))
    }

    #[inline]
    pub fn recip(self) -> Dd {
        Dd::ONE.div(self)
    }

    pub fn powi(self, mut n: i32) -> Dd {
        if n == 0 {
            return Dd::ONE;
        }
        let invert = n < 0;
        if invert {
            n = -n;
        }
        let mut base = self;
        let mut acc = Dd::ONE;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            n >>= 1;
        }
        if invert {
            acc.recip()
        } else {
            acc
        }
    }

    /// exp(self); argument reduction by ln 2 then scaled Taylor.
    pub fn exp(self) -> Dd {
        if self.hi > 709.0 {
            return Dd::from_f64(f64::INFINITY);
        }
        if self.hi < -745.0 {
            return Dd::ZERO;
        }
        let k = (self.hi / std::f64::consts::LN_2).round();
        let r = self.sub(DD_LN2.mul_f64(k));
        // further scale r by 2^-9 so the Taylor series converges fast
        const SCALE: f64 = 512.0;
        let r = r.div_f64(SCALE);
        let mut term = r;
        let mut sum = Dd::ONE.add(r);
        for j in 2..24 {
            term = term.mul(r).div_f64(j as f64);
            sum = sum.add(term);
            if term.hi.abs() < 1e-35 * sum.hi.abs() {
                break;
            }
        }
        // square back 9 times
        for _ in 0..9 {
            sum = sum.mul(sum);
        }
        // exact power-of-two scaling
        let scale = 2f64.powi(k as i32);
        Dd { hi: sum.hi * scale, lo: sum.lo * scale }
    }

    /// Natural log via one Newton step on f64's log.
    pub fn ln(self) -> Dd {
        debug_assert!(self.hi > 0.0);
        let y0 = self.hi.ln();
        // y1 = y0 + x*exp(-y0) - 1
        let e = Dd::from_f64(-y0).exp();
        let y1 = Dd::from_f64(y0).add(self.mul(e).add_f64(-1.0));
        // one more step for full dd accuracy
        let e = y1.neg().exp();
        y1.add(self.mul(e).add_f64(-1.0))
    }

    /// self^p for real exponent, self > 0.
    pub fn powf(self, p: Dd) -> Dd {
        self.ln().mul(p).exp()
    }

    /// sin(pi * t) with exact integer reduction (full relative accuracy
    /// near integer t).
    pub fn sin_pi(t: Dd) -> Dd {
        let n = t.hi.round();
        let u = t.add_f64(-n); // |u| <= 1/2 plus dd tail
        let y = DD_PI.mul(u);
        let s = sin_taylor(y);
        if (n as i64) % 2 == 0 {
            s
        } else {
            s.neg()
        }
    }

    /// cos(pi * t), same reduction as sin_pi.
    pub fn cos_pi(t: Dd) -> Dd {
        let n = t.hi.round();
        let u = t.add_f64(-n);
        let y = DD_PI.mul(u);
        let c = cos_taylor(y);
        if (n as i64) % 2 == 0 {
            c
        } else {
            c.neg()
        }
    }
}

fn sin_taylor(y: Dd) -> Dd {
    let y2 = y.mul(y);
    let mut term = y;
    let mut sum = y;
    let mut k = 1u32;
    loop {
        term = term.mul(y2).div_f64(-(((2 * k) * (2 * k + 1)) as f64));
        sum = sum.add(term);
        k += 1;
        if term.hi.abs() < 1e-35 * (1.0 + sum.hi.abs()) || k > 24 {
            break;
        }
    }
    sum
}

fn cos_taylor(y: Dd) -> Dd {
    let y2 = y.mul(y);
    let mut term = Dd::ONE;
    let mut sum = Dd::ONE;
    let mut k = 1u32;
    loop {
        term = term.mul(y2).div_f64(-(((2 * k - 1) * (2 * k)) as f64));
        sum = sum.add(term);
        k += 1;
        if term.hi.abs() < 1e-35 * (1.0 + sum.hi.abs()) || k > 24 {
            break;
        }
    }
    sum
}

/// 1/Gamma(x) in double-double for real x, via shifts into [0.5, 1.5]
/// and the Taylor series of 1/Gamma(1+z) there. Entire: returns 0 at
/// nonpositive integers.
pub fn dd_recip_gamma(x: Dd) -> Dd {
    // 1/Gamma(x) = x * (x+1) * ... * (x+k-1) * 1/Gamma(x+k)
    // 1/Gamma(x) = 1/Gamma(x-1) / (x-1)
    let mut shift_prod = Dd::ONE;
    let mut x = x;
    // shift up into [0.5, 1.5]
    while x.hi < 0.5 {
        shift_prod = shift_prod.mul(x);
        x = x.add_f64(1.0);
    }
    // shift down into [0.5, 1.5]
    let mut divisors = Dd::ONE;
    while x.hi > 1.5 {
        x = x.add_f64(-1.0);
        divisors = divisors.mul(x);
    }
    let z = x.add_f64(-1.0); // |z| <= 0.5
    let mut sum = Dd::ZERO;
    let mut zp = Dd::ONE;
    for c in RGAMMA_TAYLOR.iter() {
        sum = sum.add(c.mul(zp));
        zp = zp.mul(z);
    }
    sum.mul(shift_prod).div(divisors)
}

pub const DD_PI: Dd = Dd { hi: 3.141592653589793, lo: 1.2246467991473532e-16 };
pub const DD_2PI: Dd = Dd { hi: 6.283185307179586, lo: 2.4492935982947064e-16 };
pub const DD_LN2: Dd = Dd { hi: 0.6931471805599453, lo: 2.3190468138462996e-17 };
pub const DD_EULER: Dd = Dd { hi: 0.5772156649015329, lo: -4.942915152430645e-18 };
pub const DD_SQRT_PI: Dd = Dd { hi: 1.772453850905516, lo: -7.666586499825799e-17 };
pub const DD_SQRT3: Dd = Dd { hi: 1.7320508075688772, lo: 1.0035084221806903e-16 };
pub const DD_AIRY_C1: Dd = Dd { hi: 0.3550280538878172, lo: 2.05233632436212e-17 };
pub const DD_AIRY_C2: Dd = Dd { hi: 0.2588194037928068, lo: -2.522243111610832e-17 };

pub(crate) const RGAMMA_TAYLOR: [Dd; 49] = [
    Dd { hi: 1.0, lo: 0.0 },
    Dd { hi: 0.5772156649015329, lo: -4.942915152430645e-18 },
    Dd { hi: -0.6558780715202539, lo: 2.137185197068536e-17 },
    Dd { hi: -0.04200263503409524, lo: 1.4920306285650505e-18 },
    Dd { hi: 0.16653861138229148, lo: 1.0189144546842026e-17 },
    Dd { hi: -0.04219773455554433, lo: -3.3579992682480134e-18 },
    Dd { hi: -0.009621971527876973, lo: -5.300031368830263e-19 },
    Dd { hi: 0.0072189432466631, lo: -3.6006537063394283e-19 },
    Dd { hi: -0.0011651675918590652, lo: 5.659947853880981e-20 },
    Dd { hi: -0.00021524167411495098, lo: 2.3758686180729364e-21 },
    Dd { hi: 0.0001280502823881162, lo: -9.359124499198967e-21 },
    Dd { hi: -2.013485478078824e-05, lo: 3.0488773972037385e-23 },
    Dd { hi: -1.2504934821426706e-06, lo: -2.66214092271898e-23 },
    Dd { hi: 1.133027231981696e-06, lo: -4.622235212104869e-23 },
    Dd { hi: -2.056338416977607e-07, lo: -3.0061601618645134e-24 },
    Dd { hi: 6.116095104481416e-09, lo: -2.693458298171306e-25 },
    Dd { hi: 5.002007644469223e-09, lo: -1.538123614056751e-26 },
    Dd { hi: -1.18127457048702e-09, lo: -1.0052356155716208e-25 },
    Dd { hi: 1.0434267116911005e-10, lo: -2.9298419956825035e-27 },
    Dd { hi: 7.782263439905071e-12, lo: 4.397255556595848e-28 },
    Dd { hi: -3.696805618642206e-12, lo: 2.7050034921703885e-28 },
    Dd { hi: 5.100370287454476e-13, lo: 2.253001461085878e-29 },
    Dd { hi: -2.0583260535665066e-14, lo: -1.4747481491954336e-30 },
    Dd { hi: -5.348122539423018e-15, lo: -1.6208384686356568e-31 },
    Dd { hi: 1.2267786282382608e-15, lo: -5.072915146023867e-32 },
    Dd { hi: -1.1812593016974588e-16, lo: 6.422257838149681e-33 },
    Dd { hi: 1.1866922547516004e-18, lo: -4.2037265494226014e-35 },
    Dd { hi: 1.4123806553180319e-18, lo: -7.576946701116294e-35 },
    Dd { hi: -2.29874568443537e-19, lo: 1.3335481917069145e-36 },
    Dd { hi: 1.7144063219273374e-20, lo: 5.230715150426935e-38 },
    Dd { hi: 1.337351730493693e-22, lo: 2.6434059649079228e-39 },
    Dd { hi: -2.0542335517666728e-22, lo: 3.6856892424568953e-39 },
    Dd { hi: 2.736030048608e-23, lo: -2.8599315416397774e-39 },
    Dd { hi: -1.7323564459105165e-24, lo: -1.7540883508197598e-40 },
    Dd { hi: -2.3606190244992872e-26, lo: -1.260225016995785e-42 },
    Dd { hi: 1.8649829417172943e-26, lo: 8.774775617290965e-43 },
    Dd { hi: -2.2180956242071973e-27, lo: 6.809640315042753e-44 },
    Dd { hi: 1.2977819749479937e-28, lo: -3.325692466804093e-45 },
    Dd { hi: 1.1806974749665284e-30, lo: -4.184949275966516e-48 },
    Dd { hi: -1.124584349277088e-30, lo: -2.01842815487355e-47 },
    Dd { hi: 1.277085175140866e-31, lo: 1.0535632367878753e-47 },
    Dd { hi: -7.391451169615141e-33, lo: 1.8114253268366145e-49 },
    Dd { hi: 1.1347502575542158e-35, lo: -4.9791058715013306e-52 },
    Dd { hi: 4.639134641058722e-35, lo: 2.6040634859975098e-52 },
    Dd { hi: -5.3473368184391986e-36, lo: -2.3112956912714733e-52 },
    Dd { hi: 3.2079959236133524e-37, lo: 2.002602532430018e-53 },
    Dd { hi: -4.4458297365507567e-39, lo: -2.221752100199567e-55 },
    Dd { hi: -1.3111745188819888e-39, lo: 6.77884564695514e-56 },
    Dd { hi: 1.647033352543814e-40, lo: -3.070068892723406e-57 },
];

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Dd, b: f64, tol: f64) -> bool {
        (a.to_f64() - b).abs() <= tol * b.abs().max(1.0)
    }

    #[test]
    fn arithmetic_identities() {
        let a = Dd::from_ratio(1, 3);
        let b = Dd::from_ratio(1, 7);
        let s = a.add(b); // 10/21
        let back = s.mul_f64(21.0);
        assert!((back.to_f64() - 10.0).abs() < 1e-30);
        let q = a.div(b); // 7/3
        assert!((q.mul_f64(3.0).to_f64() - 7.0).abs() < 1e-30);
    }

    #[test]
    fn exp_ln_roundtrip() {
        for &x in &[1e-3, 0.5, 1.0, 3.75, 20.0, 100.0, 350.0] {
            let d = Dd::from_f64(x);
            let r = d.exp().ln();
            assert!((r.to_f64() - x).abs() < 1e-28 * x.max(1.0), "x = {x}");
        }
        // exp(1) to dd accuracy
        let e = Dd::ONE.exp();
        assert!((e.hi - std::f64::consts::E).abs() < 1e-15);
        let e_lo_ref = 1.4456468917292502e-16; // e - (double)e
        assert!((e.lo - e_lo_ref).abs() < 5e-28);
    }

    #[test]
    fn sin_cos_pi_values() {
        assert!(close(Dd::sin_pi(Dd::from_ratio(1, 2)), 1.0, 1e-30));
        assert!(Dd::sin_pi(Dd::from_f64(1.0)).to_f64().abs() < 1e-30);
        assert!(close(Dd::cos_pi(Dd::from_ratio(1, 3)), 0.5, 1e-30));
        assert!(close(Dd::sin_pi(Dd::from_ratio(1, 6)), 0.5, 1e-30));
        // near-integer argument keeps full relative accuracy
        let t = Dd::from_f64(3.0).add_f64(1e-9);
        let s = Dd::sin_pi(t).to_f64();
        let expected = -(std::f64::consts::PI * 1e-9);
        assert!(((s - expected) / expected).abs() < 1e-12);
    }

    #[test]
    fn recip_gamma_values() {
        // 1/Gamma(5) = 1/24
        assert!(close(dd_recip_gamma(Dd::from_f64(5.0)), 1.0 / 24.0, 1e-30));
        // 1/Gamma(0.5) = 1/sqrt(pi)
        let v = dd_recip_gamma(Dd::from_ratio(1, 2));
        let expected = 1.0 / std::f64::consts::PI.sqrt();
        assert!(close(v, expected, 1e-29));
        // zeros at nonpositive integers
        assert!(dd_recip_gamma(Dd::from_f64(0.0)).to_f64().abs() < 1e-30);
        assert!(dd_recip_gamma(Dd::from_f64(-3.0)).to_f64().abs() < 1e-30);
        // 1/Gamma(-0.5) = -1/(2 sqrt(pi)) ... Gamma(-1/2) = -2 sqrt(pi)
        let v = dd_recip_gamma(Dd::from_ratio(-1, 2));
        let expected = -1.0 / (2.0 * std::f64::consts::PI.sqrt());
        assert!(close(v, expected, 1e-29));
    }

    #[test]
    fn powi_matches_repeated_mul() {
        let x = Dd::from_ratio(7, 5);
        let mut acc = Dd::ONE;
        for _ in 0..11 {
            acc = acc.mul(x);
        }
        let p = x.powi(11);
        assert!((p.sub(acc)).to_f64().abs() < 1e-28 * acc.to_f64());
    }
}
