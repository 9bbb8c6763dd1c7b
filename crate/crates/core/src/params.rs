//! Parameter algebra for S(alpha1, alpha2, alpha3): derived Riccati and
//! CHGF parameters, the scaling/reciprocal/Kummer symmetries, and exact
//! classification (regular / quasiregular / irregular / almost simply
//! represented / algebraic).

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{as_i64, is_negative_integer, is_nonpositive_integer, rat_display, Rat};

/// The rational triple identifying a sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SequenceParams {
    pub alpha1: Rat,
    pub alpha2: Rat,
    pub alpha3: Rat,
}

/// Riccati coefficients (beta1..beta4) of the equation
/// f' = beta1 f^2 + (beta2 + beta3/z) f + beta4.
#[derive(Debug, Clone, PartialEq)]
pub struct RiccatiParams {
    pub beta1: Rat,
    pub beta2: Rat,
    pub beta3: Rat,
    pub beta4: Rat,
}

/// CHGF parameters (k, a, b) of the solution w ~ e^{-(ak/b)z} U(a,b,kz),
/// with k = 1/alpha1 > 0, a = alpha3/alpha1, b = -1 - alpha2/alpha1
/// after sign normalization.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChgfParams {
    pub k: Rat,
    pub a: Rat,
    pub b: Rat,
}

/// Zero count of U(a,b,z) in the cut plane: known analytically or left
/// for numeric discovery.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeroCount {
    /// Known from the zero-count analysis (zero-count lemma, polynomial root
    /// reality, or a polarity argument).
    Known(u32),
    /// Outside the covered (a,b) regions; requires numeric discovery.
    Unknown,
}

impl ZeroCount {
    pub fn known(&self) -> Option<u32> {
        match self {
            ZeroCount::Known(n) => Some(*n),
            ZeroCount::Unknown => None,
        }
    }
}

/// Subclass of the algebraic family S(0, alpha, 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgebraicSubclass {
    Regular,
    Quasiregular,
    Irregular,
    NotSimplyRepresented,
}

/// Top-level sequence classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SequenceClass {
    Regular,
    Quasiregular,
    Irregular,
    AlmostSimplyRepresented,
    Algebraic(AlgebraicSubclass),
    /// The zero-count table does not cover (a,b) and the residue alone
    /// cannot settle the class; resolve numerically via pole discovery.
    Undetermined,
}

impl SequenceClass {
    pub fn label(&self) -> &'static str {
        match self {
            SequenceClass::Regular => "Regular",
            SequenceClass::Quasiregular => "Quasiregular",
            SequenceClass::Irregular => "Irregular",
            SequenceClass::AlmostSimplyRepresented => "AlmostSimplyRepresented",
            SequenceClass::Algebraic(_) => "Algebraic",
            SequenceClass::Undetermined => "Undetermined",
        }
    }

    pub fn sublabel(&self) -> Option<&'static str> {
        match self {
            SequenceClass::Algebraic(sub) => Some(match sub {
                AlgebraicSubclass::Regular => "Regular",
                AlgebraicSubclass::Quasiregular => "Quasiregular",
                AlgebraicSubclass::Irregular => "Irregular",
                AlgebraicSubclass::NotSimplyRepresented => "NotSimplyRepresented",
            }),
            _ => None,
        }
    }
}

/// Classification output: class, residue at the origin, zero count.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassificationReport {
    pub class: SequenceClass,
    /// r_origin = lim_{z->0} z f(z). Absent when the limit does not exist
    /// (almost-simply-represented factorial cases with alpha < -1).
    pub r_origin: Option<Rat>,
    pub zero_count: ZeroCount,
}

impl SequenceParams {
    pub fn new(alpha1: Rat, alpha2: Rat, alpha3: Rat) -> Result<SequenceParams> {
        if alpha1.is_zero() && alpha2.is_zero() && alpha3.is_zero() {
            return Err(Error::InvalidParams("all three alphas are zero"));
        }
        Ok(SequenceParams { alpha1, alpha2, alpha3 })
    }

    pub fn from_i64(a1: i64, a2: i64, a3: i64) -> SequenceParams {
        SequenceParams::new(
            Rat::from_integer(a1.into()),
            Rat::from_integer(a2.into()),
            Rat::from_integer(a3.into()),
        )
        .expect("nonzero triple")
    }

    /// Scaling law: S(t alpha)_n = t^{n-1} S(alpha)_n.
    pub fn scale(&self, t: &Rat) -> Result<SequenceParams> {
        if t.is_zero() {
            return Err(Error::ZeroScale);
        }
        Ok(SequenceParams {
            alpha1: &self.alpha1 * t,
            alpha2: &self.alpha2 * t,
            alpha3: &self.alpha3 * t,
        })
    }

    /// Reciprocal sequence: (a1, -2 a1 - a2, a1 + a2 + a3). An involution.
    pub fn reciprocal(&self) -> SequenceParams {
        SequenceParams {
            alpha1: self.alpha1.clone(),
            alpha2: -(&self.alpha1 + &self.alpha1) - &self.alpha2,
            alpha3: &self.alpha1 + &self.alpha2 + &self.alpha3,
        }
    }

    /// Kummer symmetry: returns the partner triple together with the
    /// prefactor and the n=1 correction in
    ///   S(p)_n = prefactor * S(partner)_n - correction * 0^{n-1}.
    pub fn kummer_partner(&self) -> Result<(SequenceParams, Rat, Rat)> {
        if self.alpha3.is_zero() {
            return Err(Error::ZeroAlpha3);
        }
        let two_a1 = &self.alpha1 + &self.alpha1;
        let partner = SequenceParams {
            alpha1: self.alpha1.clone(),
            alpha2: -(&two_a1 + &two_a1) - &self.alpha2,
            alpha3: &two_a1 + &self.alpha2 + &self.alpha3,
        };
        let prefactor = (&two_a1 + &self.alpha2 + &self.alpha3) / &self.alpha3;
        let correction = (&two_a1 + &self.alpha2) / &self.alpha3;
        Ok((partner, prefactor, correction))
    }

    /// Sign normalization: force alpha1 > 0 by the t = -1 scaling.
    /// Returns the normalized triple and whether the flip was applied
    /// (if so, S(orig)_n = (-1)^{n-1} S(normalized)_n).
    pub fn sign_normalized(&self) -> (SequenceParams, bool) {
        if self.alpha1.is_negative() {
            let minus_one = -Rat::one();
            (self.scale(&minus_one).expect("t = -1"), true)
        } else {
            (self.clone(), false)
        }
    }

    /// Riccati coefficients; undefined when alpha1 = 0 (algebraic) or
    /// alpha1 + alpha2 = 0 (u0 infinite; the limiting cases are
    /// flagged, never auto-resolved).
    pub fn riccati_params(&self) -> Result<RiccatiParams> {
        if self.alpha1.is_zero() {
            return Err(Error::AlgebraicClass);
        }
        let s = &self.alpha1 + &self.alpha2;
        if s.is_zero() {
            return Err(Error::InfiniteU0);
        }
        let a1 = &self.alpha1;
        Ok(RiccatiParams {
            beta1: -(&self.alpha3 / a1),
            beta2: (&s + &self.alpha3 + &self.alpha3) / (a1 * &s),
            beta3: Rat::one() + &self.alpha2 / a1,
            beta4: -((&s + &self.alpha3) / (a1 * (&s * &s))),
        })
    }

    /// CHGF parameters (k, a, b) with k > 0 and a != 0, after forcing
    /// alpha1 > 0 via the scaling law.
    pub fn chgf_params(&self) -> Result<ChgfParams> {
        if self.alpha1.is_zero() {
            return Err(Error::AlgebraicClass);
        }
        if self.alpha3.is_zero() {
            return Err(Error::DegenerateA);
        }
        let (p, _) = self.sign_normalized();
        Ok(ChgfParams {
            k: Rat::one() / &p.alpha1,
            a: &p.alpha3 / &p.alpha1,
            b: -Rat::one() - &p.alpha2 / &p.alpha1,
        })
    }

    /// Exact classification of the sign-normalized sequence (alpha1 > 0,
    /// branch cut on the negative axis — the frame the whole moment
    /// machinery operates in; `sign_normalized` reports the flip).
    /// Never errors: fields that cannot be determined are explicit
    /// (`ZeroCount::Unknown`, `r_origin: None`, `SequenceClass::Undetermined`).
    pub fn classify(&self) -> ClassificationReport {
        if self.alpha1.is_zero() {
            return classify_algebraic(self);
        }
        let (p, _) = self.sign_normalized();
        if p.alpha3.is_zero() {
            return classify_factorial(&p);
        }
        let c = p.chgf_params().expect("alpha1, alpha3 nonzero");
        let r_origin = origin_residue(&c.a, &c.b);
        let zero_count = zero_count_table(&c.a, &c.b);
        let class = match zero_count {
            ZeroCount::Known(0) => {
                if r_origin.is_zero() {
                    SequenceClass::Regular
                } else {
                    SequenceClass::Quasiregular
                }
            }
            ZeroCount::Known(_) => SequenceClass::Irregular,
            ZeroCount::Unknown => SequenceClass::Undetermined,
        };
        ClassificationReport {
            class,
            r_origin: Some(r_origin),
            zero_count,
        }
    }
}

impl ChgfParams {
    /// Effect of reciprocation: (k, a, b) -> (k, a-b, -b).
    pub fn reciprocal(&self) -> ChgfParams {
        ChgfParams {
            k: self.k.clone(),
            a: &self.a - &self.b,
            b: -self.b.clone(),
        }
    }

    pub fn k_f64(&self) -> f64 {
        crate::rational::rat_to_f64(&self.k)
    }
    pub fn a_f64(&self) -> f64 {
        crate::rational::rat_to_f64(&self.a)
    }
    pub fn b_f64(&self) -> f64 {
        crate::rational::rat_to_f64(&self.b)
    }
}

/// r_origin = lim z f(z) per the four-case residue table:
/// - a not in -N0, a-b+1 not in -N0: (1-b)/a if b > 1 else 0
/// - a in -N0, a-b+1 not in -N0: 0
/// - a not in -N0, a-b+1 in -N0: (1-b)/a
/// - both in -N0 (so b integer): (1-b)/a if b <= 1 else 0
fn origin_residue(a: &Rat, b: &Rat) -> Rat {
    let one = Rat::one();
    let a_pol = is_nonpositive_integer(a);
    let ab_pol = is_nonpositive_integer(&(a - b + &one));
    let big_b = b > &one;
    let residue = (&one - b) / a;
    match (a_pol, ab_pol) {
        (false, false) => {
            if big_b {
                residue
            } else {
                Rat::zero()
            }
        }
        (true, false) => Rat::zero(),
        (false, true) => residue,
        (true, true) => {
            if b <= &one {
                residue
            } else {
                Rat::zero()
            }
        }
    }
}

/// Zero count of U(a,b,.) in the cut plane C \ (-inf, 0]:
/// - 2m when -2m-1 <= a < -2m+1 (m in N0) and b < a+1, the boundary
///   a = -(2m+1) resolving to the smaller count;
/// - 0 when a = b >= 1;
/// - for the polynomial family a in -N (U proportional to a Laguerre
///   polynomial of degree m = -a): m when b > 0 (roots real positive,
///   all inside the cut plane), and m-1+b when b is an integer in (a, 1]
///   (a root of multiplicity 1-b at the origin, the rest real positive);
/// - unknown otherwise.
fn zero_count_table(a: &Rat, b: &Rat) -> ZeroCount {
    let one = Rat::one();
    if a == b && a >= &one {
        return ZeroCount::Known(0);
    }
    if b < &(a + &one) {
        // unique even integer 2m in [-a-1, 1-a)
        let lo = -a - &one;
        let two_m = if lo.is_integer() && (as_i64(&lo).map(|v| v % 2 == 0).unwrap_or(false)) {
            lo.clone()
        } else {
            // smallest even integer > lo
            let floor = lo.floor();
            let f = as_i64(&floor).unwrap_or(0);
            let next_even = if f % 2 == 0 { f + 2 } else { f + 1 };
            Rat::from_integer(next_even.into())
        };
        if two_m >= Rat::zero() {
            if let Some(v) = as_i64(&two_m) {
                return ZeroCount::Known(v as u32);
            }
        }
        return ZeroCount::Unknown;
    }
    if is_negative_integer(a) {
        let m = -as_i64(a).unwrap();
        if b > &Rat::zero() {
            return ZeroCount::Known(m as u32);
        }
        if b.is_integer() && b > a {
            let count = m - 1 + as_i64(b).unwrap();
            return ZeroCount::Known(count as u32);
        }
    }
    ZeroCount::Unknown
}

fn classify_factorial(p: &SequenceParams) -> ClassificationReport {
    // S(1, alpha-1, 0) after normalization: alpha = 1 + alpha2/alpha1
    let alpha = Rat::one() + &p.alpha2 / &p.alpha1;
    let minus_one = -Rat::one();
    if alpha > minus_one {
        ClassificationReport {
            class: SequenceClass::Regular,
            r_origin: Some(Rat::zero()),
            zero_count: ZeroCount::Known(0),
        }
    } else if alpha == minus_one {
        ClassificationReport {
            class: SequenceClass::Quasiregular,
            r_origin: Some(minus_one),
            zero_count: ZeroCount::Known(0),
        }
    } else {
        // z f(z) unbounded at the origin: power-order singularity only
        ClassificationReport {
            class: SequenceClass::AlmostSimplyRepresented,
            r_origin: None,
            zero_count: ZeroCount::Known(0),
        }
    }
}

fn classify_algebraic(p: &SequenceParams) -> ClassificationReport {
    if p.alpha3.is_zero() {
        // geometric: u_n = alpha2^{n-1}; f(z) = z/(alpha2 (z+alpha2))
        let sub = if p.alpha2.is_positive() {
            AlgebraicSubclass::Regular
        } else {
            AlgebraicSubclass::Irregular
        };
        return ClassificationReport {
            class: SequenceClass::Algebraic(sub),
            r_origin: Some(Rat::zero()),
            zero_count: ZeroCount::Unknown,
        };
    }
    // normalize to S(0, alpha, 1)
    let alpha = &p.alpha2 / &p.alpha3;
    let zero = Rat::zero();
    let minus_one = -Rat::one();
    let minus_two = &minus_one + &minus_one;
    let (sub, r_origin) = if alpha >= zero {
        (AlgebraicSubclass::Regular, Rat::zero())
    } else if alpha >= minus_one {
        (AlgebraicSubclass::Quasiregular, alpha.clone())
    } else if alpha >= minus_two {
        (AlgebraicSubclass::NotSimplyRepresented, alpha.clone())
    } else {
        (AlgebraicSubclass::NotSimplyRepresented, Rat::zero())
    };
    ClassificationReport {
        class: SequenceClass::Algebraic(sub),
        r_origin: Some(r_origin),
        zero_count: ZeroCount::Unknown,
    }
}

impl std::fmt::Display for SequenceParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "S({},{},{})",
            rat_display(&self.alpha1),
            rat_display(&self.alpha2),
            rat_display(&self.alpha3)
        )
    }
}
