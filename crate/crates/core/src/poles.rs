//! Cut-plane zeros of U(a,b,kz): predicted counts, extraction from moment
//! residuals via Prony's method, and Newton polishing on the complex U.

use num_complex::Complex64;


use crate::error::{Error, Result};
use crate::exact::generate_exact;
use crate::moments::MomentPipeline;
use crate::params::{ChgfParams, SequenceParams, ZeroCount};
use crate::rational::{rat_to_f64, Rat};
use crate::specfun::u_complex;

/// How a pole set was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PoleProvenance {
    LemmaCount,
    PronyEstimate,
    NewtonPolished,
}

/// Cut-plane zeros zeta_j of U(a,b,kz) (= poles of the generating
/// function), conjugate-closed, all sharing the residue alpha1/alpha3.
#[derive(Debug, Clone)]
pub struct PoleSet {
    pub zeros: Vec<Complex64>,
    pub residue: Rat,
    pub provenance: PoleProvenance,
}

/// Predicted zero count on the covered (a,b) regions: 2m when
/// -2m-1 <= a < -2m+1 and b < a+1 (boundary resolved downward); 0 when
/// a = b >= 1; None otherwise.
pub fn expected_zero_count(c: &ChgfParams) -> Option<u32> {
    let p = chgf_to_params(c);
    match p.classify().zero_count {
        ZeroCount::Known(n) => Some(n),
        ZeroCount::Unknown => None,
    }
}

fn chgf_to_params(c: &ChgfParams) -> SequenceParams {
    // invert k = 1/a1, a = a3/a1, b = -1 - a2/a1
    let a1 = Rat::from_integer(1.into()) / &c.k;
    let a2 = (-Rat::from_integer(1.into()) - &c.b) * &a1;
    let a3 = &c.a * &a1;
    SequenceParams::new(a1, a2, a3).expect("nonzero")
}

/// One row of the residual table (the zero-finding table layout).
#[derive(Debug, Clone)]
pub struct ResidualRow {
    pub n: u32,
    pub exact: f64,
    pub integral: f64,
    /// raw difference v_n = exact - integral (including origin term)
    pub v: f64,
    /// normalized so that v_norm = sum_j (-zeta_j)^{n-1}
    pub v_norm: f64,
}

/// Output of a Prony extraction: the pole set plus the fit diagnostics
/// and the residual table.
#[derive(Debug, Clone)]
pub struct PronyExtraction {
    pub pole_set: PoleSet,
    /// monic recurrence coefficients c_1..c_p of
    /// v_n + c_1 v_{n-1} + ... + c_p v_{n-p} = 0
    pub coefficients: Vec<f64>,
    /// rms of the recurrence residuals over the fit rows
    pub fit_residual: f64,
    pub table: Vec<ResidualRow>,
}

/// Extract `n_zeros` poles from the residuals v_n = u_n - integral_n:
/// fit the order-p constant-coefficient linear recurrence by least
/// squares over rows n in `n_range`, root the characteristic polynomial
/// (closed-form quadratic for p <= 2), and return zeta_j = -root_j.
pub fn prony_extract(
    p: &SequenceParams,
    n_zeros: usize,
    n_max: u32,
    tol: f64,
) -> Result<PronyExtraction> {
    assert!(n_zeros >= 1);
    let pipeline = MomentPipeline::new(p)?;
    let table = residual_table(p, &pipeline, n_max, tol)?;
    prony_fit_from_table(p, &pipeline, table, n_zeros)
}

fn residual_table(
    p: &SequenceParams,
    pipeline: &MomentPipeline,
    n_max: u32,
    tol: f64,
) -> Result<Vec<ResidualRow>> {
    let exact = generate_exact(p, n_max as usize);
    let s = pipeline.pole_residue.ok_or(Error::MissingPoles)?;
    let mut rows = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        let q = pipeline.raw_moment(n, tol)?;
        // map the model moment back to the original sequence's frame
        let mult = pipeline.scale_mult.powi(n as i32 - 1);
        let integral = mult * q.value;
        let exact_f = rat_to_f64(exact.u(n as usize));
        let v = exact_f - integral;
        // v = -s sum (-zeta)^{n-1} in the model frame; undo the scale
        let v_model = v / mult;
        rows.push(ResidualRow {
            n,
            exact: exact_f,
            integral,
            v,
            v_norm: -v_model / s,
        });
    }
    Ok(rows)
}

fn prony_fit_from_table(
    p: &SequenceParams,
    pipeline: &MomentPipeline,
    table: Vec<ResidualRow>,
    n_zeros: usize,
) -> Result<PronyExtraction> {
    let order = n_zeros;
    let v: Vec<f64> = table.iter().map(|r| r.v_norm).collect();
    if v.len() < 2 * order {
        return Err(Error::InvalidParams("not enough residual rows for the fit"));
    }
    // rows n = p+1 .. n_max: v_n + c_1 v_{n-1} + ... + c_p v_{n-p} = 0
    let rows: Vec<usize> = (order..v.len()).collect();
    let mut design = Vec::with_capacity(rows.len());
    let mut rhs = Vec::with_capacity(rows.len());
    for &i in &rows {
        let mut row = Vec::with_capacity(order);
        for j in 1..=order {
            row.push(v[i - j]);
        }
        design.push(row);
        rhs.push(-v[i]);
    }
    let (coeffs, cond) = least_squares(&design, &rhs)?;
    if cond > 1e12 {
        return Err(Error::IllConditioned(cond));
    }
    // post-fit residual (rms, relative to the row scale)
    let mut rss = 0.0;
    let mut scale = 0.0f64;
    for (row, &b) in design.iter().zip(rhs.iter()) {
        let pred: f64 = row.iter().zip(coeffs.iter()).map(|(x, c)| x * c).sum();
        rss += (pred - b) * (pred - b);
        scale = scale.max(b.abs());
    }
    let fit_residual = (rss / rhs.len() as f64).sqrt() / scale.max(1e-300);
    let roots = crate::specfun::polyroots::monic_roots(&coeffs);
    let zeros: Vec<Complex64> = roots.into_iter().map(|r| -r).collect();
    let residue = {
        let (norm, _) = p.sign_normalized();
        &norm.alpha1 / &norm.alpha3
    };
    let _ = pipeline;
    Ok(PronyExtraction {
        pole_set: PoleSet {
            zeros,
            residue,
            provenance: PoleProvenance::PronyEstimate,
        },
        coefficients: coeffs,
        fit_residual,
        table,
    })
}

/// Discovery mode: try p = 1, 2, ... until the fit residual drops by at
/// least three orders of magnitude, capped at p = 8.
pub fn prony_discover(
    p: &SequenceParams,
    n_max: u32,
    tol: f64,
) -> Result<(usize, PronyExtraction)> {
    let pipeline = MomentPipeline::new(p)?;
    let table = residual_table(p, &pipeline, n_max, tol)?;
    let mut last_residual = f64::INFINITY;
    let mut best: Option<(usize, PronyExtraction)> = None;
    for order in 1..=8usize {
        if table.len() < 2 * order {
            break;
        }
        let ext = match prony_fit_from_table(p, &pipeline, table.clone(), order) {
            Ok(e) => e,
            Err(_) => continue,
        };
        let res = ext.fit_residual;
        if res < 1e-3 * last_residual || (res < 1e-6 && best.is_none()) {
            let done = res < 1e-6;
            best = Some((order, ext));
            if done {
                break;
            }
        }
        last_residual = last_residual.min(res);
    }
    best.ok_or(Error::CountMismatch {
        residual: last_residual,
    })
}

/// Newton-polish zeros of U(a,b,kz): iterate z -= U/(dU/dz * k) with
/// dU/dz = -a k U(a+1,b+1,kz); converged when the step drops below
/// 1e-12 |z| (or the residual stalls at the evaluation noise floor).
pub fn newton_polish(c: &ChgfParams, zeros: &[Complex64]) -> Result<Vec<Complex64>> {
    let a = c.a_f64();
    let b = c.b_f64();
    let k = c.k_f64();
    let mut out = Vec::with_capacity(zeros.len());
    for &z0 in zeros {
        let mut z = z0;
        let mut converged = false;
        let mut last_step = f64::INFINITY;
        let mut stall = 0;
        for _ in 0..50 {
            let (u, du) = u_complex(a, b, z.scale(k))?;
            // d/dz U(a,b,kz) = k U'(kz)
            let step = u / (du.scale(k));
            z -= step;
            if z.im == 0.0 && z.re <= 0.0 {
                return Err(Error::ConvergedToCut { re: z.re });
            }
            let s = step.norm();
            if s < 1e-12 * z.norm() {
                converged = true;
                break;
            }
            // stagnation at the numerical noise floor still counts once
            // the step stops shrinking at ~1e-10 |z|
            if s < 1e-10 * z.norm() && s >= 0.5 * last_step {
                stall += 1;
                if stall >= 3 {
                    converged = true;
                    break;
                }
            }
            last_step = s;
        }
        if !converged {
            return Err(Error::NoConvergence(50));
        }
        if z.im.abs() < 1e-8 * z.norm() && z.re < 0.0 {
            return Err(Error::ConvergedToCut { re: z.re });
        }
        out.push(z);
    }
    Ok(out)
}

/// Count check, Prony estimate, then Newton polish; the one-call pipeline
/// used by the CLI `poles` subcommand.
pub fn extract_and_polish(
    p: &SequenceParams,
    n_max: u32,
    tol: f64,
) -> Result<(PronyExtraction, Vec<Complex64>)> {
    let (norm, _) = p.sign_normalized();
    let c = norm.chgf_params()?;
    let count = expected_zero_count(&c);
    let (order, mut ext) = match count {
        Some(0) => {
            return Err(Error::InvalidParams(
                "no cut-plane zeros expected for this sequence",
            ))
        }
        Some(n) => (n as usize, prony_extract(p, n as usize, n_max, tol)?),
        None => prony_discover(p, n_max, tol)?,
    };
    let _ = order;
    let polished = newton_polish(&c, &ext.pole_set.zeros)?;
    ext.pole_set = PoleSet {
        zeros: conjugate_close(polished),
        residue: ext.pole_set.residue.clone(),
        provenance: PoleProvenance::NewtonPolished,
    };
    Ok((ext.clone(), ext.pole_set.zeros.clone()))
}

/// Symmetrize conjugate pairs so the pole sum is exactly real.
fn conjugate_close(mut zeros: Vec<Complex64>) -> Vec<Complex64> {
    zeros.sort_by(|a, b| {
        a.re.partial_cmp(&b.re)
            .unwrap()
            .then(a.im.partial_cmp(&b.im).unwrap())
    });
    let mut out: Vec<Complex64> = Vec::with_capacity(zeros.len());
    let mut used = vec![false; zeros.len()];
    for i in 0..zeros.len() {
        if used[i] {
            continue;
        }
        let z = zeros[i];
        if z.im.abs() < 1e-10 * z.norm().max(1e-30) {
            out.push(Complex64::new(z.re, 0.0));
            used[i] = true;
            continue;
        }
        // find the best conjugate partner
        let mut best = None;
        let mut best_d = f64::INFINITY;
        for j in (i + 1)..zeros.len() {
            if used[j] {
                continue;
            }
            let d = (zeros[j] - z.conj()).norm();
            if d < best_d {
                best_d = d;
                best = Some(j);
            }
        }
        if let Some(j) = best {
            if best_d < 1e-6 * z.norm().max(1e-30) {
                let avg_re = 0.5 * (z.re + zeros[j].re);
                let avg_im = 0.5 * (z.im - zeros[j].im).abs();
                out.push(Complex64::new(avg_re, -avg_im));
                out.push(Complex64::new(avg_re, avg_im));
                used[i] = true;
                used[j] = true;
                continue;
            }
        }
        out.push(z);
        used[i] = true;
    }
    out
}

/// Least squares by column-scaled normal equations with a crude condition
/// estimate (ratio of extreme pivots).
#[allow(clippy::needless_range_loop)]
fn least_squares(design: &[Vec<f64>], rhs: &[f64]) -> Result<(Vec<f64>, f64)> {
    let m = design.len();
    let p = design[0].len();
    // column scaling
    let mut scale = vec![0.0f64; p];
    for row in design {
        for (j, &x) in row.iter().enumerate() {
            scale[j] = scale[j].max(x.abs());
        }
    }
    for s in scale.iter_mut() {
        if *s == 0.0 {
            *s = 1.0;
        }
    }
    // normal equations on scaled columns
    let mut ata = vec![vec![0.0f64; p]; p];
    let mut atb = vec![0.0f64; p];
    for i in 0..m {
        for j in 0..p {
            let xj = design[i][j] / scale[j];
            atb[j] += xj * rhs[i];
            for l in j..p {
                ata[j][l] += xj * design[i][l] / scale[l];
            }
        }
    }
    for j in 0..p {
        for l in 0..j {
            ata[j][l] = ata[l][j];
        }
    }
    // Gaussian elimination with partial pivoting
    let mut a = ata;
    let mut b = atb;
    let mut max_pivot = 0.0f64;
    let mut min_pivot = f64::INFINITY;
    for col in 0..p {
        let (piv_row, piv_val) = (col..p)
            .map(|r| (r, a[r][col].abs()))
            .max_by(|x, y| x.1.partial_cmp(&y.1).unwrap())
            .unwrap();
        if piv_val == 0.0 {
            return Err(Error::IllConditioned(f64::INFINITY));
        }
        a.swap(col, piv_row);
        b.swap(col, piv_row);
        max_pivot = max_pivot.max(piv_val);
        min_pivot = min_pivot.min(piv_val);
        for r in (col + 1)..p {
            let f = a[r][col] / a[col][col];
            for cc in col..p {
                a[r][cc] -= f * a[col][cc];
            }
            b[r] -= f * b[col];
        }
    }
    let mut x = vec![0.0f64; p];
    for col in (0..p).rev() {
        let mut acc = b[col];
        for cc in (col + 1)..p {
            acc -= a[col][cc] * x[cc];
        }
        x[col] = acc / a[col][col];
    }
    // unscale
    for j in 0..p {
        x[j] /= scale[j];
    }
    Ok((x, max_pivot / min_pivot))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn expected_counts() {
        // a=-3/2, b=-3: two zeros
        let c = ChgfParams {
            k: rat(1, 1),
            a: rat(-3, 2),
            b: rat(-3, 1),
        };
        assert_eq!(expected_zero_count(&c), Some(2));
        // Airy: regular
        let c = ChgfParams {
            k: rat(1, 6),
            a: rat(1, 6),
            b: rat(1, 3),
        };
        assert_eq!(expected_zero_count(&c), Some(0));
        // a=b=2: case (ii)
        let c = ChgfParams {
            k: rat(1, 1),
            a: rat(2, 1),
            b: rat(2, 1),
        };
        assert_eq!(expected_zero_count(&c), Some(0));
        // uncovered region
        let c = ChgfParams {
            k: rat(1, 1),
            a: rat(1, 2),
            b: rat(5, 2),
        };
        assert_eq!(expected_zero_count(&c), None);
    }

    #[test]
    fn synthetic_single_pole_recovery() {
        // Plant one real pole through a Laguerre m=1 designed sequence:
        // S(-1,2,1) has u_n = 1 (single atom at 1)... instead test the
        // least-squares + rooting machinery directly on synthetic data.
        let zeta = Complex64::new(3.5, 0.0);
        let v: Vec<f64> = (0..8).map(|j| (-zeta).powi(j).re).collect();
        let rows: Vec<usize> = (1..v.len()).collect();
        let design: Vec<Vec<f64>> = rows.iter().map(|&i| vec![v[i - 1]]).collect();
        let rhs: Vec<f64> = rows.iter().map(|&i| -v[i]).collect();
        let (coeffs, _) = least_squares(&design, &rhs).unwrap();
        let roots = crate::specfun::polyroots::monic_roots(&coeffs);
        let rec = -roots[0];
        assert!((rec - zeta).norm() < 1e-10);
    }

    #[test]
    fn synthetic_conjugate_pair_recovery() {
        // v_n = sum (-zeta)^{n-1} for a planted conjugate pair
        let zeta = Complex64::from_polar(2.7, 2.8);
        let v: Vec<f64> = (0..10)
            .map(|j| 2.0 * (-zeta).powi(j).re)
            .collect();
        let order = 2;
        let rows: Vec<usize> = (order..v.len()).collect();
        let design: Vec<Vec<f64>> = rows
            .iter()
            .map(|&i| (1..=order).map(|j| v[i - j]).collect())
            .collect();
        let rhs: Vec<f64> = rows.iter().map(|&i| -v[i]).collect();
        let (coeffs, cond) = least_squares(&design, &rhs).unwrap();
        assert!(cond < 1e9);
        let roots = crate::specfun::polyroots::monic_roots(&coeffs);
        let rec: Vec<Complex64> = roots.into_iter().map(|r| -r).collect();
        assert!(rec
            .iter()
            .any(|z| (z - zeta).norm() < 1e-8 * zeta.norm()));
        assert!(rec
            .iter()
            .any(|z| (z - zeta.conj()).norm() < 1e-8 * zeta.norm()));
    }

    #[test]
    fn conjugate_closing() {
        let zs = vec![
            Complex64::new(1.0, 2.0000001),
            Complex64::new(1.0000001, -2.0),
        ];
        let closed = conjugate_close(zs);
        assert_eq!(closed.len(), 2);
        assert!((closed[0].re - closed[1].re).abs() < 1e-15);
        assert!((closed[0].im + closed[1].im).abs() < 1e-15);
    }
}
