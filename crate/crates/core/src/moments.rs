//! Numerical moments of a spectral measure (adaptive quadrature with
//! an analytic tail), pole-corrected assembly of u_n, asymptotic
//! estimates, and verification against the exact engine.

use num_complex::Complex64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::generate_exact;
use crate::measure::{
    algebraic_measure, build_pipeline_measure, AlgebraicForm, ComplexContour, Density,
    OriginBehavior, SpectralMeasure,
};
use crate::params::{ChgfParams, SequenceParams, ZeroCount};
use crate::poles::PoleSet;
use crate::rational::{ln_abs_rat, rat_to_f64, Rat};
use crate::specfun::ln_gamma_sign;

/// Normalized upper incomplete gamma ratio is not needed; this is the
/// unnormalized Gamma(s, y) = int_y^inf t^{s-1} e^{-t} dt, valid for
/// y > 0 and any real s (continued fraction, accurate for y >~ s).
pub fn gamma_upper(s: f64, y: f64) -> f64 {
    debug_assert!(y > 0.0);
    if y < s + 1.0 {
        // series for the lower incomplete gamma, then complement
        let (ln_g, sign) = ln_gamma_sign(s).expect("s not a nonpositive integer here");
        let mut term = 1.0 / s;
        let mut sum = term;
        for k in 1..500 {
            term *= y / (s + k as f64);
            sum += term;
            if term.abs() < 1e-17 * sum.abs() {
                break;
            }
        }
        let lower = sum * (s * y.ln() - y).exp();
        return sign * ln_g.exp() - lower;
    }
    // Lentz continued fraction
    let tiny = 1e-300;
    let mut b = y + 1.0 - s;
    let mut c = 1.0 / tiny;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..500 {
        let an = -(i as f64) * (i as f64 - s);
        b += 2.0;
        d = an * d + b;
        if d.abs() < tiny {
            d = tiny;
        }
        c = b + an / c;
        if c.abs() < tiny {
            c = tiny;
        }
        d = 1.0 / d;
        let del = d * c;
        h *= del;
        if (del - 1.0).abs() < 1e-16 {
            break;
        }
    }
    (s * y.ln() - y).exp() * h
}

// 15-point Gauss-Kronrod pair (7-point Gauss embedded), abscissae on
// [-1, 1] and weights, as in QUADPACK's qk15.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut result_gauss = WG[3] * fc;
    let mut result_kronrod = WGK[7] * fc;
    let mut resabs = WGK[7] * fc.abs();
    for j in 0..7 {
        let x = half * XGK[j];
        let f1 = f(center - x);
        let f2 = f(center + x);
        result_kronrod += WGK[j] * (f1 + f2);
        resabs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            result_gauss += WG[j / 2] * (f1 + f2);
        }
    }
    let err = (result_kronrod - result_gauss).abs() * half.abs();
    (result_kronrod * half, err.max(resabs * half.abs() * 1e-15))
}

struct Adaptive {
    value: f64,
    err: f64,
    subdivisions: usize,
    converged: bool,
    budget: usize,
}

/// Adaptive bisection on [a, b]; deterministic in-order accumulation with
/// a global panel budget (overly tight tolerances degrade to a flagged
/// best-effort result instead of unbounded subdivision).
fn adaptive_gk<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol_abs: f64, max_depth: u32) -> Adaptive {
    fn recurse<F: Fn(f64) -> f64>(
        f: &F,
        a: f64,
        b: f64,
        tol_abs: f64,
        depth: u32,
        out: &mut Adaptive,
    ) {
        let (v, e) = gk15(f, a, b);
        if e <= tol_abs || depth == 0 || out.budget == 0 {
            out.value += v;
            out.err += e;
            out.subdivisions += 1;
            if e > tol_abs {
                out.converged = false;
            }
            return;
        }
        out.budget -= 1;
        let mid = 0.5 * (a + b);
        recurse(f, a, mid, 0.5 * tol_abs, depth - 1, out);
        recurse(f, mid, b, 0.5 * tol_abs, depth - 1, out);
    }
    let mut out = Adaptive {
        value: 0.0,
        err: 0.0,
        subdivisions: 0,
        converged: true,
        budget: 4000,
    };
    // seed panels at geometric break points so interior peaks are seen
    let mut points = vec![a];
    let mut p = a.max(1e-3) * 4.0;
    while p < b {
        if p > a {
            points.push(p);
        }
        p *= 4.0;
    }
    points.push(b);
    let n_panels = points.len() - 1;
    for w in points.windows(2) {
        recurse(f, w[0], w[1], tol_abs / n_panels as f64, max_depth, &mut out);
    }
    out
}

/// Result of a moment quadrature with diagnostics.
#[derive(Debug, Clone, Copy)]
pub struct MomentQuadrature {
    pub value: f64,
    pub abs_err: f64,
    pub subdivisions: usize,
    /// |analytic tail| / |value|
    pub tail_fraction: f64,
    /// false when the requested tolerance was not provably met
    pub converged: bool,
}

/// int_0^inf x^{n-1} density dx + sum_atoms w loc^{n-1} (0^0 = 1), split as
/// (0, x0] with an origin-neutralizing substitution, [x0, x_tail] adaptive
/// Gauss-Kronrod, and [x_tail, inf) by the analytic tail model.
pub fn moment_quadrature(mu: &SpectralMeasure, n: u32, tol: f64) -> Result<MomentQuadrature> {
    assert!(n >= 1);
    let atom_part: f64 = mu.atoms.iter().map(|a| a.moment(n)).sum();
    if matches!(mu.density, Density::None) {
        return Ok(MomentQuadrature {
            value: atom_part,
            abs_err: 1e-15 * atom_part.abs(),
            subdivisions: 0,
            tail_fraction: 0.0,
            converged: true,
        });
    }
    // integrability at the origin
    if let OriginBehavior::Power(p) = mu.origin {
        if (n as f64 - 1.0) + p <= -1.0 {
            return Err(Error::NonIntegrableOrigin { n });
        }
    }
    if let Density::AlgebraicArc { alpha, lo, hi } = mu.density {
        return Ok(arc_moment(mu, alpha, lo, hi, n, tol, atom_part));
    }

    let nf = n as f64;
    let x_tail = mu.x_tail;
    let x0 = (x_tail / 100.0).min(1.0);
    // rough scale estimate to convert the relative tolerance
    let scale_probe = (1..=8)
        .map(|i| {
            let x = x0 + (x_tail - x0) * i as f64 / 8.0;
            (x.powf(nf - 1.0) * mu.density_at(x)).abs() * (x_tail - x0) / 4.0
        })
        .fold(0.0f64, f64::max)
        .max(1e-300);
    let tol_abs = tol * scale_probe;

    // origin piece
    let origin = match mu.origin {
        OriginBehavior::Power(p) => {
            let q = nf + p; // > 0 by the integrability check
            let g = |u: f64| -> f64 {
                if u <= 0.0 {
                    return 0.0;
                }
                let x = u.powf(1.0 / q);
                // x^{n-1} rho(x) x^{1-q} / q
                let rho = mu.density_at(x);
                x.powf(nf - q) * rho / q
            };
            adaptive_gk(&g, 0.0, x0.powf(q), 0.25 * tol_abs, 24)
        }
        OriginBehavior::PowerLog => {
            if n == 1 {
                // x rho(x) ln^2 x is bounded: substitute t = -1/ln x. Below
                // t_lo the substituted x would underflow, so the head
                // [0, t_lo] is integrated from a quadratic extrapolation of
                // the (analytic in t) integrand.
                let g = |t: f64| -> f64 {
                    if t <= 0.0 {
                        return 0.0;
                    }
                    let x = (-1.0 / t).exp();
                    let lx = -1.0 / t;
                    mu.density_at(x) * x * lx * lx
                };
                let t0 = -1.0 / x0.ln();
                let t_lo = 1.5e-3_f64.min(0.25 * t0);
                let mut res = adaptive_gk(&g, t_lo, t0, 0.25 * tol_abs, 24);
                // Lagrange quadratic through t_lo, 1.5 t_lo, 2 t_lo,
                // integrated exactly on [0, t_lo]
                let (p0, p1, p2) = (g(t_lo), g(1.5 * t_lo), g(2.0 * t_lo));
                // fit phi(t) = a + b (t/t_lo) + c (t/t_lo)^2
                let c2 = 2.0 * (p2 - 2.0 * p1 + p0);
                let b1 = 2.0 * (p1 - p0) - 2.5 * c2;
                let a0 = p0 - b1 - c2;
                res.value += t_lo * (a0 + b1 / 2.0 + c2 / 3.0);
                res.err += 1e-10 * t_lo * p0.abs();
                res
            } else {
                // x^{n-1}/(x ln^2 x) is bounded for n >= 2
                let g = |x: f64| -> f64 {
                    if x <= 0.0 {
                        return 0.0;
                    }
                    x.powf(nf - 1.0) * mu.density_at(x)
                };
                adaptive_gk(&g, 0.0, x0, 0.25 * tol_abs, 24)
            }
        }
    };

    // main piece
    let f = |x: f64| x.powf(nf - 1.0) * mu.density_at(x);
    let main = adaptive_gk(&f, x0, x_tail, 0.5 * tol_abs, 28);

    // analytic tail
    let tail_val = mu.tail.as_ref().map(|t| t.integral(n, x_tail)).unwrap_or(0.0);

    let value = atom_part + origin.value + main.value + tail_val;
    let abs_err = origin.err + main.err + 1e-12 * tail_val.abs();
    Ok(MomentQuadrature {
        value,
        abs_err,
        subdivisions: origin.subdivisions + main.subdivisions,
        tail_fraction: if value != 0.0 {
            (tail_val / value).abs()
        } else {
            0.0
        },
        converged: origin.converged && main.converged && abs_err <= tol * value.abs().max(1e-300),
    })
}

/// Arc densities sqrt((hi-x)(x-lo)) * w(x): substitute x = c + r sin t,
/// turning the integrand into a smooth (often polynomial) function on
/// [-pi/2, pi/2].
fn arc_moment(
    _mu: &SpectralMeasure,
    alpha: f64,
    lo: f64,
    hi: f64,
    n: u32,
    tol: f64,
    atom_part: f64,
) -> MomentQuadrature {
    let c = 0.5 * (lo + hi);
    let r = 0.5 * (hi - lo);
    let nf = n as f64;
    let _ = alpha;
    // density = sqrt(r^2 - (x-c)^2)/(2 pi x); integrand x^{n-1} density
    // becomes (r^2/(2 pi)) cos^2 t (c + r sin t)^{n-2}
    let g = |t: f64| -> f64 {
        let s = t.sin();
        let x = c + r * s;
        let cos2 = t.cos().powi(2);
        if n >= 2 {
            r * r / (2.0 * std::f64::consts::PI) * cos2 * x.powi(n as i32 - 2)
        } else {
            // n = 1: (c + r sin t)^{-1}; bounded because cos^2 vanishes
            // where x can reach 0 (alpha = 0 endpoint)
            if x <= 0.0 {
                return 0.0;
            }
            r * r / (2.0 * std::f64::consts::PI) * cos2 / x
        }
    };
    let half_pi = 0.5 * std::f64::consts::PI;
    let scale = (r * r / (2.0 * std::f64::consts::PI)) * (c + r).powf(nf.max(2.0) - 2.0);
    let res = adaptive_gk(&g, -half_pi, half_pi, tol * scale.max(1e-300), 24);
    MomentQuadrature {
        value: atom_part + res.value,
        abs_err: res.err,
        subdivisions: res.subdivisions,
        tail_fraction: 0.0,
        converged: res.converged,
    }
}

/// Prepared evaluation pipeline for one sequence.
#[derive(Debug, Clone)]
pub struct MomentPipeline {
    pub params: SequenceParams,
    pub form: PipelineForm,
    /// u_original(n) = scale_mult^{n-1} * u_model(n)
    pub scale_mult: f64,
    /// residue alpha1/alpha3 of every cut-plane pole (normalized frame)
    pub pole_residue: Option<f64>,
    /// poles known analytically (Laguerre path)
    pub known_poles: Vec<Complex64>,
    pub classification: crate::params::ClassificationReport,
}

#[derive(Debug, Clone)]
pub enum PipelineForm {
    Measure(SpectralMeasure),
    Contour(ComplexContour),
}

impl MomentPipeline {
    pub fn new(p: &SequenceParams) -> Result<MomentPipeline> {
        let classification = p.classify();
        if p.alpha1.is_zero() {
            if p.alpha3.is_zero() {
                return Err(Error::InvalidParams(
                    "geometric triple (0, a2, 0) has no measure pipeline",
                ));
            }
            let alpha = &p.alpha2 / &p.alpha3;
            let form = match algebraic_measure(&alpha) {
                AlgebraicForm::Measure(m) => PipelineForm::Measure(m),
                AlgebraicForm::Contour(c) => PipelineForm::Contour(c),
            };
            return Ok(MomentPipeline {
                params: p.clone(),
                form,
                scale_mult: rat_to_f64(&p.alpha3),
                pole_residue: None,
                known_poles: Vec::new(),
                classification,
            });
        }
        let built = build_pipeline_measure(p)?;
        let (norm, _) = p.sign_normalized();
        let residue = if norm.alpha3.is_zero() {
            None
        } else {
            Some(rat_to_f64(&(&norm.alpha1 / &norm.alpha3)))
        };
        Ok(MomentPipeline {
            params: p.clone(),
            form: PipelineForm::Measure(built.measure),
            scale_mult: if built.sign_flipped { -1.0 } else { 1.0 },
            pole_residue: residue,
            known_poles: built.known_poles,
            classification,
        })
    }

    /// Moment of the model measure/contour without pole corrections.
    pub fn raw_moment(&self, n: u32, tol: f64) -> Result<MomentQuadrature> {
        match &self.form {
            PipelineForm::Measure(m) => moment_quadrature(m, n, tol),
            PipelineForm::Contour(c) => {
                let value = c.moment(n, tol);
                Ok(MomentQuadrature {
                    value,
                    abs_err: tol * value.abs(),
                    subdivisions: 0,
                    tail_fraction: 0.0,
                    converged: true,
                })
            }
        }
    }

    /// u_n = (moment + atom terms) - sum_j s_j (-zeta_j)^{n-1}, mapped back
    /// to the original sequence by the scale multiplier. The imaginary
    /// part of the conjugate-closed pole sum must cancel below 1e-9
    /// relative and is then dropped.
    pub fn assemble_u_n(&self, n: u32, poles: Option<&PoleSet>, tol: f64) -> Result<f64> {
        let needs_poles = match self.classification.zero_count {
            ZeroCount::Known(c) => c > 0,
            ZeroCount::Unknown => false,
        };
        let supplied = poles.map(|p| !p.zeros.is_empty()).unwrap_or(false);
        let have_known = !self.known_poles.is_empty();
        if needs_poles && !supplied && !have_known {
            return Err(Error::MissingPoles);
        }
        let q = self.raw_moment(n, tol)?;
        let mut value = Complex64::new(q.value, 0.0);
        if supplied || have_known {
            let s = self.pole_residue.ok_or(Error::MissingPoles)?;
            let zeros: &[Complex64] = if supplied {
                &poles.unwrap().zeros
            } else {
                &self.known_poles
            };
            let mut pole_sum = Complex64::new(0.0, 0.0);
            for zeta in zeros {
                pole_sum += (-zeta).powi(n as i32 - 1);
            }
            value -= pole_sum.scale(s);
        }
        if value.im.abs() > 1e-9 * value.norm().max(1e-12) {
            return Err(Error::InvalidParams(
                "pole sum imaginary part failed to cancel: pole set not conjugate-closed",
            ));
        }
        Ok(self.scale_mult.powi(n as i32 - 1) * value.re)
    }
}

/// Convenience wrapper: build the pipeline and assemble a single u_n.
pub fn assemble_u_n(
    p: &SequenceParams,
    n: u32,
    poles: Option<&PoleSet>,
    tol: f64,
) -> Result<f64> {
    MomentPipeline::new(p)?.assemble_u_n(n, poles, tol)
}

/// ln |u_n| estimate and sign from the Gamma-ratio asymptote
/// Gamma(n + 2a - b) / (Gamma(a+1) Gamma(a-b+1) k^{n-1}).
pub fn asymptotic_estimate(c: &ChgfParams, n: u32) -> Result<(f64, f64)> {
    let a = c.a_f64();
    let b = c.b_f64();
    let k = c.k_f64();
    let g1 = a + 1.0;
    let g2 = a - b + 1.0;
    if (g1 <= 0.0 && g1 == g1.round()) || (g2 <= 0.0 && g2 == g2.round()) {
        return Err(Error::PolynomialDegenerate);
    }
    let (l1, s1) = ln_gamma_sign(n as f64 + 2.0 * a - b)?;
    let (l2, s2) = ln_gamma_sign(g1)?;
    let (l3, s3) = ln_gamma_sign(g2)?;
    let ln_val = l1 - l2 - l3 - (n as f64 - 1.0) * k.ln();
    Ok((ln_val, s1 * s2 * s3))
}

/// One row of a verification report.
#[derive(Debug, Clone)]
pub struct VerificationRow {
    pub n: u32,
    pub exact: Rat,
    pub exact_f64: f64,
    pub numeric: f64,
    pub abs_err: f64,
    /// relative to exact when exact != 0, absolute otherwise
    pub rel_err: f64,
    pub pass: bool,
    pub subdivisions: usize,
    pub tail_fraction: f64,
    pub quadrature_err: f64,
}

/// Cross-validation of the exact recurrence against the Mellin route.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub params: SequenceParams,
    pub tol: f64,
    pub rows: Vec<VerificationRow>,
    pub all_pass: bool,
}

impl VerificationReport {
    pub fn max_rel_err(&self) -> f64 {
        self.rows.iter().fold(0.0, |m, r| m.max(r.rel_err))
    }
}

/// Run generate_exact and assemble_u_n for n = 1..N; flag rows whose
/// relative error exceeds tol. Supplies the Laguerre-path poles itself;
/// other irregular cases need `poles`.
pub fn verify(p: &SequenceParams, n_terms: u32, tol: f64) -> Result<VerificationReport> {
    verify_with_poles(p, n_terms, tol, None)
}

pub fn verify_with_poles(
    p: &SequenceParams,
    n_terms: u32,
    tol: f64,
    poles: Option<&PoleSet>,
) -> Result<VerificationReport> {
    let pipeline = MomentPipeline::new(p)?;
    let exact = generate_exact(p, n_terms as usize);
    // quadrature tighter than the pass tolerance
    let qtol = (tol * 1e-2).min(1e-8);
    let mut rows = Vec::with_capacity(n_terms as usize);
    let mut all_pass = true;
    for n in 1..=n_terms {
        let exact_val = exact.u(n as usize).clone();
        let exact_f64 = rat_to_f64(&exact_val);
        let numeric = pipeline.assemble_u_n(n, poles, qtol)?;
        let q = pipeline.raw_moment(n, qtol)?;
        let abs_err = (numeric - exact_f64).abs();
        let rel_err = if exact_val.is_zero() {
            abs_err
        } else {
            abs_err / exact_f64.abs()
        };
        let pass = rel_err <= tol;
        all_pass &= pass;
        rows.push(VerificationRow {
            n,
            exact: exact_val,
            exact_f64,
            numeric,
            abs_err,
            rel_err,
            pass,
            subdivisions: q.subdivisions,
            tail_fraction: q.tail_fraction,
            quadrature_err: q.abs_err,
        });
    }
    Ok(VerificationReport {
        params: p.clone(),
        tol,
        rows,
        all_pass,
    })
}

/// ln |u_n| from the exact engine (handles values beyond f64 range).
pub fn ln_exact_u(p: &SequenceParams, n_terms: u32) -> Vec<f64> {
    let seq = generate_exact(p, n_terms as usize);
    seq.values
        .iter()
        .map(|v| if v.is_zero() { f64::NEG_INFINITY } else { ln_abs_rat(v) })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn gamma_upper_reference() {
        // Gamma(1, y) = e^{-y}
        for &y in &[0.5, 3.0, 40.0] {
            assert!((gamma_upper(1.0, y) - (-y).exp()).abs() < 1e-14 * (-y).exp());
        }
        // Gamma(3, 2) = e^{-2} (2^2 + 2*2 + 2) = 10 e^{-2}
        let expected = 10.0 * (-2.0f64).exp();
        assert!((gamma_upper(3.0, 2.0) - expected).abs() < 1e-13 * expected);
        // negative s against mpmath gammainc(-1.5, 4.0)
        let v = gamma_upper(-1.5, 4.0);
        assert!((v - 3.7063648913528465e-4).abs() < 1e-15, "got {v}");
    }

    #[test]
    fn gamma_measure_moments_are_factorials() {
        // mu = e^{-x}: n-th moment = (n-1)!
        let built =
            crate::measure::build_measure(&SequenceParams::from_i64(1, -1, 0)).unwrap();
        for (n, expected) in [(1u32, 1.0f64), (2, 1.0), (3, 2.0), (4, 6.0), (7, 720.0)] {
            let q = moment_quadrature(&built.measure, n, 1e-10).unwrap();
            assert!(
                (q.value - expected).abs() < 1e-9 * expected,
                "n={n}: {} vs {expected}",
                q.value
            );
        }
    }

    #[test]
    fn airy_moment_reproduces_u2() {
        let built =
            crate::measure::build_measure(&SequenceParams::from_i64(6, -8, 1)).unwrap();
        let q = moment_quadrature(&built.measure, 2, 1e-9).unwrap();
        assert!((q.value - 5.0).abs() < 5.0 * 1e-8, "u2 = {}", q.value);
        let q = moment_quadrature(&built.measure, 1, 1e-9).unwrap();
        assert!((q.value - 1.0).abs() < 1e-8, "u1 = {}", q.value);
    }

    #[test]
    fn scaled_s231_moment() {
        // S(2,-3,1): u_4 = 74
        let built =
            crate::measure::build_measure(&SequenceParams::from_i64(2, -3, 1)).unwrap();
        let q = moment_quadrature(&built.measure, 4, 1e-9).unwrap();
        assert!((q.value - 74.0).abs() < 74.0 * 1e-7, "u4 = {}", q.value);
    }

    #[test]
    fn log_origin_moment_connected_permutations() {
        // S(1,-2,1): u_1 = 1 needs the log-origin substitution
        let built =
            crate::measure::build_measure(&SequenceParams::from_i64(1, -2, 1)).unwrap();
        let q = moment_quadrature(&built.measure, 1, 1e-9).unwrap();
        assert!((q.value - 1.0).abs() < 1e-7, "u1 = {}", q.value);
    }

    #[test]
    fn asymptotic_estimate_airy_table() {
        // (6,-8,1), n=10: ln estimate = 28.882 (both reciprocal partners)
        let c = SequenceParams::from_i64(6, -8, 1).chgf_params().unwrap();
        let (ln_v, sign) = asymptotic_estimate(&c, 10).unwrap();
        assert_eq!(sign, 1.0);
        assert!((ln_v - 28.882).abs() < 1e-3, "ln = {ln_v}");
        let cr = SequenceParams::from_i64(6, -4, -1).chgf_params().unwrap();
        let (ln_r, _) = asymptotic_estimate(&cr, 10).unwrap();
        assert!((ln_v - ln_r).abs() < 1e-12);
        // polynomial-degenerate guard
        let bad = ChgfParams {
            k: rat(1, 1),
            a: rat(-2, 1),
            b: rat(1, 2),
        };
        assert!(matches!(
            asymptotic_estimate(&bad, 3),
            Err(Error::PolynomialDegenerate)
        ));
    }

    #[test]
    fn verify_regular_cases_quick() {
        let rep = verify(&SequenceParams::from_i64(1, -2, 1), 5, 1e-6).unwrap();
        assert!(rep.all_pass, "max rel err {}", rep.max_rel_err());
        let rep = verify(&SequenceParams::from_i64(6, -8, 1), 5, 1e-6).unwrap();
        assert!(rep.all_pass, "max rel err {}", rep.max_rel_err());
    }

    #[test]
    fn verify_quasiregular_atom() {
        // (1,-4,3): the n=1 row needs the origin atom
        let rep = verify(&SequenceParams::from_i64(1, -4, 3), 4, 1e-6).unwrap();
        assert!(rep.all_pass, "max rel err {}", rep.max_rel_err());
    }

    #[test]
    fn verify_laguerre_known_poles() {
        // S(-1,2,2): normalized frame has two positive-axis poles that the
        // pipeline supplies itself
        let rep = verify(&SequenceParams::from_i64(-1, 2, 2), 8, 1e-8).unwrap();
        assert!(rep.all_pass, "max rel err {}", rep.max_rel_err());
    }

    #[test]
    fn catalan_moments() {
        let p = SequenceParams::from_i64(0, 0, 1);
        let rep = verify(&p, 8, 1e-8).unwrap();
        assert!(rep.all_pass, "max rel err {}", rep.max_rel_err());
    }

    #[test]
    fn algebraic_contour_moments() {
        for p in [SequenceParams::from_i64(0, -3, 2), SequenceParams::from_i64(0, -3, 1)] {
            let rep = verify(&p, 6, 1e-7).unwrap();
            assert!(rep.all_pass, "{p}: max rel err {}", rep.max_rel_err());
        }
    }

    #[test]
    fn missing_poles_detected() {
        // (1,2,-3/2) is irregular; assembling without poles must error
        let p = SequenceParams::new(rat(1, 1), rat(2, 1), rat(-3, 2)).unwrap();
        assert!(matches!(
            assemble_u_n(&p, 2, None, 1e-7),
            Err(Error::MissingPoles)
        ));
    }
}
