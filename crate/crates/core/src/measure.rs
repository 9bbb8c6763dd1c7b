//! Spectral measures: the generic CHGF density, closed-form
//! specializations (Gamma, Ei-class, Airy, Bessel, S(2,-2,1)), the
//! algebraic-class measures and complex contour, delta atoms, and the
//! analytic tail descriptor.
//!
//! Measures always describe the sign-normalized sequence (alpha1 > 0);
//! `MeasureBuild::sign_flipped` records the (-1)^{n-1} factor owed to the
//! caller.

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::params::{ChgfParams, SequenceParams};
use crate::rational::{as_i64, is_negative_integer, rat_to_f64, Rat};
use crate::specfun::dd::{Dd, DD_EULER, DD_LN2, DD_PI};
use crate::specfun::{airy_pair, bessel_ik, ei_m, ray_crossover, u_branch_values};

/// A point mass (location >= 0, weight).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Atom {
    pub location: f64,
    pub weight: f64,
}

impl Atom {
    /// weight * location^{n-1} with 0^0 = 1.
    pub fn moment(&self, n: u32) -> f64 {
        if n == 1 {
            self.weight
        } else {
            self.weight * self.location.powi(n as i32 - 1)
        }
    }
}

/// Power behavior of the density at the origin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OriginBehavior {
    /// density ~ C x^p as x -> 0+
    Power(f64),
    /// density ~ C / (x ln^2 x) (the b = 1 families)
    PowerLog,
}

/// Validity flag of the constructed object.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Validity {
    /// nonnegative density and atom weights
    FullMeasure,
    /// signed density or atoms (irregular / flipped cases)
    Signed,
}

/// density(x) ~ amplitude * x^exponent * e^{-rate x} for x > x_tail,
/// with higher-order corrections making the analytic tail integral
/// accurate to the quadrature tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct TailModel {
    pub amplitude: f64,
    pub exponent: f64,
    pub rate: f64,
    /// 1/(Gamma(a+1) Gamma(a-b+1)) prefactor with sign
    pub inv_gamma_den: f64,
    /// coefficients of the asymptotic correction series 1/S(y)^2 =
    /// sum_j e_j y^{-j} (e_0 = 1); exact (= [1]) for the Gamma class
    pub corrections: Vec<f64>,
}

impl TailModel {
    /// int_{x_tail}^inf x^{n-1} density dx
    ///   = rate^{1-n} inv_gamma_den sum_j e_j Gamma(n + exponent - j, rate x_tail)
    pub fn integral(&self, n: u32, x_tail: f64) -> f64 {
        let y = self.rate * x_tail;
        let mut sum = 0.0;
        for (j, &e) in self.corrections.iter().enumerate() {
            let s = n as f64 + self.exponent - j as f64;
            sum += e * crate::moments::gamma_upper(s, y);
        }
        self.rate.powi(1 - n as i32) * self.inv_gamma_den * sum
    }
}

/// Density kinds. Closed forms carry `stretch` = t such that the density
/// is base(x/t)/t (the scaling law applied to the base family).
#[derive(Debug, Clone, PartialEq)]
pub enum Density {
    None,
    /// k (kx)^{-b} e^{-kx} / (Gamma(a+1) Gamma(a-b+1) (U_R^2 + U_I^2))
    Chgf { k: f64, a: f64, b: f64, inv_gamma_den: f64 },
    /// pi^{-2} x^{-1/3} / (Ai(x^{2/3}/4)^2 + Bi(x^{2/3}/4)^2)
    Airy { stretch: f64 },
    /// (1/4) pi^{-2} x^{1/3} / (Ai'(x^{2/3}/4)^2 + Bi'(x^{2/3}/4)^2)
    AiryPrime { stretch: f64 },
    /// ((1/2-nu)^{-1} cos(pi nu)/x) / (K_nu(x/2)^2 + pi^2 I_nu(x/2)^2
    ///  + 2 pi sin(pi nu) K_nu(x/2) I_nu(x/2))
    Bessel { nu: f64, stretch: f64 },
    /// x^{-m} e^x (m-1)!/m / (Ei_m(x)^2 + pi^2)
    EiClass { m: u32, stretch: f64 },
    /// 2 e^{x/2} / (G2(x/2)^2 + pi^2 G3(x/2)^2)
    S221 { stretch: f64 },
    /// x^alpha e^{-x} / Gamma(alpha+1) (factorial class)
    GammaWeight { alpha: f64, stretch: f64 },
    /// sqrt(-x^2 + 2(2+alpha)x - alpha^2) / (2 pi x) on the arc
    AlgebraicArc { alpha: f64, lo: f64, hi: f64 },
}

impl Density {
    pub fn eval(&self, x: f64) -> f64 {
        match self {
            Density::None => 0.0,
            Density::Chgf { k, a, b, inv_gamma_den } => {
                let y = k * x;
                let bp = match u_branch_values(*a, *b, y) {
                    Ok(bp) => bp,
                    Err(_) => return f64::NAN,
                };
                let weight = y.powf(-b) * (-y).exp();
                k * weight * inv_gamma_den / bp.norm_sq()
            }
            Density::Airy { stretch } => {
                let y = x / stretch;
                let t = 0.25 * y.powf(2.0 / 3.0);
                let (ai, bi, _, _) = airy_pair(t);
                let denom = ai * ai + bi * bi;
                y.powf(-1.0 / 3.0) / (std::f64::consts::PI.powi(2) * denom) / stretch
            }
            Density::AiryPrime { stretch } => {
                let y = x / stretch;
                let t = 0.25 * y.powf(2.0 / 3.0);
                let (_, _, aip, bip) = airy_pair(t);
                let denom = aip * aip + bip * bip;
                0.25 * y.powf(1.0 / 3.0) / (std::f64::consts::PI.powi(2) * denom) / stretch
            }
            Density::Bessel { nu, stretch } => {
                let y = x / stretch;
                let (i, k) = bessel_ik(*nu, 0.5 * y);
                let pi = std::f64::consts::PI;
                let denom = k * k
                    + pi * pi * i * i
                    + 2.0 * pi * crate::specfun::sin_pi(*nu) * k * i;
                let pref = crate::specfun::cos_pi(*nu) / (0.5 - nu);
                pref / y / denom / stretch
            }
            Density::EiClass { m, stretch } => {
                let y = x / stretch;
                let fact: f64 = (1..*m).map(|v| v as f64).product();
                let e = ei_m(*m, y);
                let pi = std::f64::consts::PI;
                y.powi(-(*m as i32)) * y.exp() * fact / (*m as f64) / (e * e + pi * pi) / stretch
            }
            Density::S221 { stretch } => {
                let y = x / stretch;
                s221_density_base(y) / stretch
            }
            Density::GammaWeight { alpha, stretch } => {
                let y = x / stretch;
                y.powf(*alpha) * (-y).exp() * crate::specfun::recip_gamma(alpha + 1.0) / stretch
            }
            Density::AlgebraicArc { alpha, lo, hi } => {
                if x <= *lo || x >= *hi {
                    return 0.0;
                }
                let q = -x * x + 2.0 * (2.0 + alpha) * x - alpha * alpha;
                q.max(0.0).sqrt() / (2.0 * std::f64::consts::PI * x)
            }
        }
    }
}

/// G2/G3 density of S(2,-2,1) (the Catalan-weighted series form with the
/// d_r constants of the Introduction), summed in double-double: G2 is
/// exponentially smaller than its largest terms at large argument.
fn s221_density_base(x: f64) -> f64 {
    let y = 0.5 * x;
    let yd = Dd::from_f64(y);
    let ln_y = yd.ln();
    // c_r = C_r / (r! 4^r); starts at 1
    let mut c = Dd::ONE;
    // harmonic-sum d_r, starts at 1 + 2 ln 2 - gamma
    let mut d = Dd::ONE.add(DD_LN2.mul_f64(2.0)).sub(DD_EULER);
    let mut ypow = yd; // y^{r+1}
    let mut g2 = Dd::from_f64(2.0);
    let mut g3 = Dd::ZERO;
    for r in 0..800u32 {
        let rf = r as f64;
        g2 = g2.add(c.mul(d.sub(ln_y)).mul(ypow));
        g3 = g3.add(c.mul(ypow));
        c = c
            .mul_f64((2.0 * rf + 1.0) * (2.0 * rf + 2.0))
            .div_f64((rf + 1.0) * (rf + 2.0) * 4.0 * (rf + 1.0));
        d = d
            .add_f64(1.0 / (rf + 2.0) + 2.0 / (rf + 1.0) - 1.0 / (rf + 1.0))
            .add_f64(-2.0 / (2.0 * rf + 1.0));
        ypow = ypow.mul(yd);
        if rf > y && c.mul(ypow).hi.abs() < 1e-34 * g3.hi.abs().max(1e-300) {
            break;
        }
    }
    let denom = g2.mul(g2).add(DD_PI.mul(DD_PI).mul(g3).mul(g3));
    Dd::from_f64(2.0).mul(yd.exp()).div(denom).to_f64()
}

/// Harmonic-sum form d_r = -gamma + 2 ln 2 + 1/(r+1) + 2 sum_{j<=r} (1/j - 1/(2j-1)),
/// exposed for the cross-check against the digamma form.
pub fn s221_d_r_harmonic(r: u32) -> f64 {
    let mut d = Dd::ONE.add(DD_LN2.mul_f64(2.0)).sub(DD_EULER);
    for q in 0..r {
        let qf = q as f64;
        d = d
            .add_f64(1.0 / (qf + 2.0) + 2.0 / (qf + 1.0) - 1.0 / (qf + 1.0))
            .add_f64(-2.0 / (2.0 * qf + 1.0));
    }
    d.to_f64()
}

/// A spectral measure: density + atoms + analytic tail. The Mellin moment
/// of the measure is int x^{n-1} density + sum_atoms w * loc^{n-1}.
#[derive(Debug, Clone)]
pub struct SpectralMeasure {
    pub density: Density,
    pub atoms: Vec<Atom>,
    pub origin: OriginBehavior,
    /// quadrature upper limit; the analytic tail handles (x_tail, inf)
    pub x_tail: f64,
    pub tail: Option<TailModel>,
    pub validity: Validity,
}

impl SpectralMeasure {
    pub fn density_at(&self, x: f64) -> f64 {
        self.density.eval(x)
    }

    fn atoms_only(atoms: Vec<Atom>, validity: Validity) -> SpectralMeasure {
        SpectralMeasure {
            density: Density::None,
            atoms,
            origin: OriginBehavior::Power(0.0),
            x_tail: 0.0,
            tail: None,
            validity,
        }
    }
}

/// Everything the moment machinery needs to evaluate the sequence the
/// measure came from.
#[derive(Debug, Clone)]
pub struct MeasureBuild {
    pub measure: SpectralMeasure,
    /// cut-plane poles known analytically (Laguerre path): zeros of the
    /// Laguerre polynomial mapped through z = xi / k
    pub known_poles: Vec<Complex64>,
    /// the measure describes the sign-normalized triple; when true the
    /// original sequence is (-1)^{n-1} times the assembled moments
    pub sign_flipped: bool,
}

/// Tail asymptote (A, nu, lambda) of the generic CHGF density:
/// A = k^{2a-b+1}/(Gamma(a+1) Gamma(a-b+1)), nu = 2a-b, lambda = k.
pub fn tail_asymptote(c: &ChgfParams) -> Result<(f64, f64, f64)> {
    let a = c.a_f64();
    let b = c.b_f64();
    let k = c.k_f64();
    let inv = inv_gamma_den(a, b)?;
    let nu = 2.0 * a - b;
    Ok((k.powf(nu + 1.0) * inv, nu, k))
}

fn inv_gamma_den(a: f64, b: f64) -> Result<f64> {
    // 1/(Gamma(a+1) Gamma(a-b+1)); poles of the Gammas are degenerate here
    let g1 = a + 1.0;
    let g2 = a - b + 1.0;
    if (g1 <= 0.0 && g1 == g1.round()) || (g2 <= 0.0 && g2 == g2.round()) {
        return Err(Error::PolynomialDegenerate);
    }
    Ok(crate::specfun::recip_gamma(g1) * crate::specfun::recip_gamma(g2))
}

/// Correction coefficients e_j of 1/S(y)^2 where
/// S(y) = sum_j (a)_j (a-b+1)_j / (j! y^j) is the ray asymptotic series.
fn tail_corrections(a: f64, b: f64, terms: usize) -> Vec<f64> {
    // c_j of S
    let mut c = Vec::with_capacity(terms);
    c.push(1.0);
    let mut t = 1.0;
    for j in 1..terms {
        let jf = j as f64 - 1.0;
        t *= (a + jf) * (a - b + 1.0 + jf) / (jf + 1.0);
        c.push(t);
    }
    // s = c * c (Cauchy product)
    let mut s = vec![0.0; terms];
    for i in 0..terms {
        for (j, cj) in c.iter().enumerate().take(terms - i) {
            s[i + j] += c[i] * cj;
        }
    }
    // e = 1/s with s_0 = 1
    let mut e = vec![0.0; terms];
    e[0] = 1.0;
    for j in 1..terms {
        let mut acc = 0.0;
        for i in 1..=j {
            acc += s[i] * e[j - i];
        }
        e[j] = -acc;
    }
    e
}

fn chgf_tail(a: f64, b: f64, k: f64) -> Result<(TailModel, f64)> {
    let inv = inv_gamma_den(a, b)?;
    let nu = 2.0 * a - b;
    let x_tail = ray_crossover(a, b) / k;
    Ok((
        TailModel {
            amplitude: k.powf(nu + 1.0) * inv,
            exponent: nu,
            rate: k,
            inv_gamma_den: inv,
            corrections: tail_corrections(a, b, 10),
        },
        x_tail,
    ))
}

fn origin_behavior_from_b(b: f64) -> OriginBehavior {
    if b == 1.0 {
        OriginBehavior::PowerLog
    } else if b < 1.0 {
        OriginBehavior::Power(-b)
    } else {
        OriginBehavior::Power(b - 2.0)
    }
}

/// Build the spectral measure of a sequence with alpha1 != 0 and
/// alpha3 != 0 (after sign normalization), dispatching to the closed-form
/// families where the parameters match.
///
/// Errors: `AlgebraicClass` when alpha1 = 0 (use `algebraic_measure`),
/// `PolynomialCase` when a is a negative integer (Laguerre path; use
/// `build_pipeline_measure` which attaches the known poles).
pub fn build_measure(p: &SequenceParams) -> Result<MeasureBuild> {
    let (norm, flipped) = p.sign_normalized();
    if norm.alpha1.is_zero() {
        return Err(Error::AlgebraicClass);
    }
    if norm.alpha3.is_zero() {
        let mb = factorial_measure(&norm)?;
        return Ok(MeasureBuild {
            measure: mb,
            known_poles: Vec::new(),
            sign_flipped: flipped,
        });
    }
    let c = norm.chgf_params()?;
    if is_negative_integer(&c.a) {
        // polynomial family: a pure measure only when every Laguerre root
        // sits on the cut or at the origin (e.g. the Bessel nu = 3/2 atom);
        // otherwise the caller needs the pole-aware pipeline build
        let built = laguerre_normalized_build(&c, flipped)?;
        if built.known_poles.is_empty() {
            return Ok(built);
        }
        return Err(Error::PolynomialCase);
    }
    let measure = chgf_family_measure(&norm, &c)?;
    Ok(MeasureBuild {
        measure,
        known_poles: Vec::new(),
        sign_flipped: flipped,
    })
}

/// As `build_measure` but also handles the Laguerre (polynomial) family by
/// returning its atoms and known cut-plane poles.
pub fn build_pipeline_measure(p: &SequenceParams) -> Result<MeasureBuild> {
    let (norm, flipped) = p.sign_normalized();
    if norm.alpha1.is_zero() {
        return Err(Error::AlgebraicClass);
    }
    if !norm.alpha3.is_zero() {
        let c = norm.chgf_params()?;
        if is_negative_integer(&c.a) {
            return laguerre_normalized_build(&c, flipped);
        }
    }
    build_measure(p)
}

fn factorial_measure(norm: &SequenceParams) -> Result<SpectralMeasure> {
    // S(1, alpha-1, 0) scaled by t = alpha1: Gamma weight with stretch t
    let alpha = Rat::one() + &norm.alpha2 / &norm.alpha1;
    let alpha_f = rat_to_f64(&alpha);
    let stretch = rat_to_f64(&norm.alpha1);
    if alpha_f <= -1.0 {
        // not (simply) representable as a measure; the quasiregular
        // boundary alpha = -1 is the pure origin atom
        if alpha_f == -1.0 {
            return Ok(SpectralMeasure::atoms_only(
                vec![Atom { location: 0.0, weight: 1.0 }],
                Validity::FullMeasure,
            ));
        }
        return Err(Error::InvalidParams(
            "factorial class with alpha < -1 is almost simply represented; no measure",
        ));
    }
    let x_tail = (30.0 + 3.0 * alpha_f.abs()) * stretch;
    Ok(SpectralMeasure {
        density: Density::GammaWeight { alpha: alpha_f, stretch },
        atoms: Vec::new(),
        origin: OriginBehavior::Power(alpha_f),
        x_tail,
        tail: Some(TailModel {
            amplitude: crate::specfun::recip_gamma(alpha_f + 1.0) / stretch.powf(alpha_f + 1.0),
            exponent: alpha_f,
            rate: 1.0 / stretch,
            inv_gamma_den: crate::specfun::recip_gamma(alpha_f + 1.0),
            corrections: vec![1.0],
        }),
        validity: Validity::FullMeasure,
    })
}

fn chgf_family_measure(norm: &SequenceParams, c: &ChgfParams) -> Result<SpectralMeasure> {
    let a = c.a_f64();
    let b = c.b_f64();
    let k = c.k_f64();
    let report = norm.classify();
    let r_origin = report.r_origin.clone().map(|r| rat_to_f64(&r)).unwrap_or(0.0);
    let mut atoms = Vec::new();
    if r_origin != 0.0 {
        atoms.push(Atom { location: 0.0, weight: -r_origin });
    }

    // family dispatch on exact rationals
    let two_a = &c.a + &c.a;
    let is_bessel = two_a == c.b;
    let nu_rat = if is_bessel {
        Some(Rat::new(1.into(), 2.into()) - &c.a)
    } else {
        None
    };

    let density: Density;
    let mut origin = origin_behavior_from_b(b);
    let tail: Option<TailModel>;
    let mut x_tail;

    if let Some(nu) = nu_rat {
        let nu_f = rat_to_f64(&nu);
        let stretch = 1.0 / k; // base Bessel family has k = 1
        if nu == Rat::new(1.into(), 2.into()) {
            // mu(x) = e^{-x}: plain Gamma weight
            density = Density::GammaWeight { alpha: 0.0, stretch };
            origin = OriginBehavior::Power(0.0);
            x_tail = 30.0 * stretch;
            tail = Some(TailModel {
                amplitude: k,
                exponent: 0.0,
                rate: k,
                inv_gamma_den: 1.0,
                corrections: vec![1.0],
            });
        } else if nu == Rat::new(3.into(), 2.into()) {
            // pure delta(x - 2) (scaled): powers of two
            return Ok(SpectralMeasure::atoms_only(
                vec![Atom { location: 2.0 * stretch, weight: 1.0 }],
                Validity::FullMeasure,
            ));
        } else if nu == Rat::new((-1).into(), 2.into()) {
            // S(1,-3,1)-type: pure origin atom, u_n = 0^{n-1}
            return Ok(SpectralMeasure::atoms_only(atoms, Validity::FullMeasure));
        } else if crate::specfun::cos_pi(nu_f) == 0.0 {
            return Err(Error::InvalidParams(
                "degenerate Bessel prefactor (cos pi nu = 0) outside the handled limits",
            ));
        } else {
            if nu == Rat::new(1.into(), 3.into()) {
                density = Density::Airy { stretch: stretch / 6.0 };
            } else if nu == Rat::new(2.into(), 3.into()) {
                density = Density::AiryPrime { stretch: stretch / 6.0 };
            } else {
                density = Density::Bessel { nu: nu_f, stretch };
            }
            let (t, xt) = chgf_tail(a, b, k)?;
            tail = Some(t);
            x_tail = xt;
        }
    } else if c.a == c.b && c.a.is_integer() && c.a > Rat::zero() {
        let m = as_i64(&c.a).unwrap() as u32;
        let stretch = 1.0 / k;
        density = Density::EiClass { m, stretch };
        origin = if m == 1 {
            OriginBehavior::PowerLog
        } else {
            OriginBehavior::Power(m as f64 - 2.0)
        };
        let (t, xt) = chgf_tail(a, b, k)?;
        tail = Some(t);
        x_tail = xt;
    } else if c.a == Rat::new(1.into(), 2.into()) && c.b.is_zero() {
        let stretch = 0.5 / k; // base S(2,-2,1) has k = 1/2
        density = Density::S221 { stretch };
        let (t, xt) = chgf_tail(a, b, k)?;
        tail = Some(t);
        x_tail = xt;
    } else {
        let inv = inv_gamma_den(a, b)?;
        density = Density::Chgf { k, a, b, inv_gamma_den: inv };
        let (t, xt) = chgf_tail(a, b, k)?;
        tail = Some(t);
        x_tail = xt;
    }
    // make sure the quadrature window covers the atom-free bulk
    x_tail = x_tail.max(1.0 / k);

    let validity = if report.class == crate::params::SequenceClass::Regular
        || report.class == crate::params::SequenceClass::Quasiregular
    {
        Validity::FullMeasure
    } else {
        Validity::Signed
    };
    Ok(SpectralMeasure {
        density,
        atoms,
        origin,
        x_tail,
        tail,
        validity,
    })
}

/// Bessel-class measure for S(1, 2 nu - 2, 1/2 - nu). Documented for the
/// regular range 0 <= nu <= 3/2; errors outside [-3/2, 3/2].
pub fn bessel_measure(nu: f64) -> Result<SpectralMeasure> {
    if !(-1.5..=1.5).contains(&nu) {
        return Err(Error::OutOfRegularRange(nu));
    }
    // exact dispatch when nu is a small rational (catches all the stated
    // limit cases); generic f64 Bessel density otherwise
    if let Ok(p) = bessel_params_from_f64(nu) {
        return Ok(build_pipeline_measure(&p)?.measure);
    }
    if crate::specfun::cos_pi(nu) == 0.0 {
        return Err(Error::InvalidParams("degenerate Bessel prefactor"));
    }
    let a = 0.5 - nu;
    let b = 2.0 * a;
    let (tail, x_tail) = chgf_tail(a, b, 1.0)?;
    Ok(SpectralMeasure {
        density: Density::Bessel { nu, stretch: 1.0 },
        atoms: Vec::new(),
        origin: origin_behavior_from_b(b),
        x_tail,
        tail: Some(tail),
        validity: if (0.0..=1.5).contains(&nu) {
            Validity::FullMeasure
        } else {
            Validity::Signed
        },
    })
}

fn bessel_params_from_f64(nu: f64) -> Result<SequenceParams> {
    // nu as an exact small rational (denominator <= 64)
    for den in 1..=64i64 {
        let num = (nu * den as f64).round();
        if (num / den as f64 - nu).abs() < 1e-12 && num.abs() < 1e6 {
            let nu_rat = Rat::new((num as i64).into(), den.into());
            let half = Rat::new(1.into(), 2.into());
            return SequenceParams::new(
                Rat::one(),
                &nu_rat + &nu_rat - Rat::from_integer(2.into()),
                &half - &nu_rat,
            );
        }
    }
    Err(Error::InvalidParams("nu is not a small rational"))
}

/// Laguerre comb: atoms of weight 1/m at the roots of L_m^{(alpha)}
/// (original S(-1, 2+alpha, m) convention). Requires alpha > -1 so the
/// roots are real and positive.
pub fn laguerre_comb(alpha: &Rat, m: usize) -> Result<SpectralMeasure> {
    let alpha_f = rat_to_f64(alpha);
    let roots = crate::specfun::laguerre_roots(alpha_f, m);
    if roots.iter().any(|z| z.im != 0.0 || z.re <= 0.0) {
        return Err(Error::ComplexRoots);
    }
    let w = 1.0 / m as f64;
    Ok(SpectralMeasure::atoms_only(
        roots
            .into_iter()
            .map(|z| Atom { location: z.re, weight: w })
            .collect(),
        Validity::FullMeasure,
    ))
}

/// Normalized-frame build for the Laguerre family (a in -N): zeros of the
/// Laguerre polynomial on the cut become atoms, zeros in the cut plane
/// become known poles, an origin zero feeds the r-degree atom.
fn laguerre_normalized_build(c: &ChgfParams, flipped: bool) -> Result<MeasureBuild> {
    let m = (-as_i64(&c.a).unwrap()) as usize;
    let alpha = c.b_f64() - 1.0;
    let k = c.k_f64();
    let roots = crate::specfun::laguerre_roots(alpha, m);
    let mut atoms = Vec::new();
    let mut poles = Vec::new();
    // origin atom from the residue table: nonzero only when b is an
    // integer in [a+1, 1], i.e. the polynomial has a (1-b)-fold origin root
    let b = &c.b;
    let one = Rat::one();
    if b.is_integer() && b <= &one && *b >= &c.a + &one {
        let r_origin = (&one - b) / &c.a;
        if !r_origin.is_zero() {
            atoms.push(Atom { location: 0.0, weight: -rat_to_f64(&r_origin) });
        }
    }
    for z in roots {
        let zeta = z / k;
        if zeta.norm() < 1e-7 {
            // origin root cluster: accounted through r_origin
            continue;
        }
        if zeta.im == 0.0 && zeta.re < 0.0 {
            // pole on the cut: delta atom of weight -(alpha1/alpha3) = 1/m
            atoms.push(Atom { location: -zeta.re, weight: 1.0 / m as f64 });
        } else {
            poles.push(zeta);
        }
    }
    let signed = atoms.iter().any(|a| a.weight < 0.0) || !poles.is_empty();
    Ok(MeasureBuild {
        measure: SpectralMeasure::atoms_only(
            atoms,
            if signed { Validity::Signed } else { Validity::FullMeasure },
        ),
        known_poles: poles,
        sign_flipped: flipped,
    })
}

/// The algebraic class S(0, alpha, 1): a real measure for alpha >= -1,
/// a complex contour for alpha < -1.
#[derive(Debug, Clone)]
pub enum AlgebraicForm {
    Measure(SpectralMeasure),
    Contour(ComplexContour),
}

/// u_n = -(2 abar^2/pi) int_{-1}^{1} (-zeta_y)^{n-2} sqrt(1-y^2) dy
/// (+ origin term), zeta_y = -2 - alpha + 2 i abar y, abar = sqrt|1+alpha|.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexContour {
    pub alpha: f64,
    pub alpha_bar: f64,
    /// -r_origin (0 when the origin is regular)
    pub origin_atom: f64,
    /// alpha = -2: odd moments vanish after u_1 = 1 and the general
    /// formula applies only to even n
    pub degenerate_catalan: bool,
}

impl ComplexContour {
    /// Moment via Gauss-Chebyshev (second kind) quadrature, doubling the
    /// node count until converged to `tol` relative.
    pub fn moment(&self, n: u32, tol: f64) -> f64 {
        if self.degenerate_catalan {
            if n == 1 {
                return 1.0;
            }
            if n % 2 == 1 {
                return 0.0;
            }
        }
        let atom = if n == 1 { self.origin_atom } else { 0.0 };
        let mut m = (2 * n as usize + 16).max(32);
        let mut prev = self.contour_integral(n, m);
        loop {
            m *= 2;
            let cur = self.contour_integral(n, m);
            if (cur - prev).abs() <= tol * cur.abs().max(1.0) || m > 4096 {
                return cur + atom;
            }
            prev = cur;
        }
    }

    fn contour_integral(&self, n: u32, m: usize) -> f64 {
        let center = Complex64::new(-2.0 - self.alpha, 0.0);
        let mut sum = Complex64::new(0.0, 0.0);
        let step = std::f64::consts::PI / (m as f64 + 1.0);
        for i in 1..=m {
            let theta = step * i as f64;
            let y = theta.cos();
            let w = step * theta.sin() * theta.sin();
            let zeta = center + Complex64::new(0.0, 2.0 * self.alpha_bar * y);
            let g = (-zeta).powi(n as i32 - 2);
            sum += g * w;
        }
        let val = sum * (-2.0 * self.alpha_bar * self.alpha_bar / std::f64::consts::PI);
        // conjugate symmetry makes the integral real
        val.re
    }
}

/// Construct the algebraic-class object for parameters (0, alpha2, alpha3)
/// normalized to S(0, alpha, 1); the caller owes the alpha3^{n-1} scaling.
pub fn algebraic_measure(alpha: &Rat) -> AlgebraicForm {
    let af = rat_to_f64(alpha);
    if af >= 0.0 {
        let center = 2.0 + af;
        let radius = 2.0 * (1.0 + af).sqrt();
        AlgebraicForm::Measure(SpectralMeasure {
            density: Density::AlgebraicArc {
                alpha: af,
                lo: center - radius,
                hi: center + radius,
            },
            atoms: Vec::new(),
            origin: OriginBehavior::Power(if af == 0.0 { -0.5 } else { 0.0 }),
            x_tail: center + radius,
            tail: None,
            validity: Validity::FullMeasure,
        })
    } else if af == -1.0 {
        AlgebraicForm::Measure(SpectralMeasure::atoms_only(
            vec![Atom { location: 0.0, weight: 1.0 }],
            Validity::FullMeasure,
        ))
    } else if af > -1.0 {
        let center = 2.0 + af;
        let radius = 2.0 * (1.0 + af).sqrt();
        AlgebraicForm::Measure(SpectralMeasure {
            density: Density::AlgebraicArc {
                alpha: af,
                lo: center - radius,
                hi: center + radius,
            },
            atoms: vec![Atom { location: 0.0, weight: -af }],
            origin: OriginBehavior::Power(0.0),
            x_tail: center + radius,
            tail: None,
            validity: Validity::FullMeasure,
        })
    } else {
        // alpha < -1: complex contour
        let abar = (1.0 + af).abs().sqrt();
        AlgebraicForm::Contour(ComplexContour {
            alpha: af,
            alpha_bar: abar,
            origin_atom: if af > -2.0 { -af } else { 0.0 },
            degenerate_catalan: af == -2.0,
        })
    }
}
