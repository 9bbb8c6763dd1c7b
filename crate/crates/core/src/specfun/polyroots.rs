//! Roots of small real-coefficient monic polynomials: Durand–Kerner
//! simultaneous iteration followed by a Newton polish of each root.
//! Degrees here never exceed ~10 (Prony characteristic polynomials and
//! Laguerre polynomials), so no balancing heroics are needed.

use num_complex::Complex64;

/// Evaluate the monic polynomial z^n + c[0] z^{n-1} + ... + c[n-1] and its
/// derivative at z (Horner).
pub fn monic_eval(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(1.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in coeffs {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// All roots of the monic polynomial with the given low-order coefficients
/// (c[0] multiplies z^{n-1}). Conjugate symmetry is restored afterwards to
/// working precision.
pub fn monic_roots(coeffs: &[f64]) -> Vec<Complex64> {
    let n = coeffs.len();
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![Complex64::new(-coeffs[0], 0.0)];
    }
    if n == 2 {
        return quadratic_roots(coeffs[0], coeffs[1]);
    }
    // Cauchy bound for the initial circle
    let radius = 1.0 + coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..n)
        .map(|i| seed.powu(i as u32 + 1) * radius / seed.norm().powi(i as i32))
        .collect();
    for _ in 0..200 {
        let mut max_step = 0.0f64;
        for i in 0..n {
            let (p, _) = monic_eval(coeffs, roots[i]);
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if j != i {
                    denom *= roots[i] - roots[j];
                }
            }
            if denom.norm() == 0.0 {
                continue;
            }
            let step = p / denom;
            roots[i] -= step;
            max_step = max_step.max(step.norm());
        }
        if max_step < 1e-14 * radius {
            break;
        }
    }
    // Newton polish each root individually
    for r in roots.iter_mut() {
        for _ in 0..30 {
            let (p, dp) = monic_eval(coeffs, *r);
            if dp.norm() == 0.0 {
                break;
            }
            let step = p / dp;
            *r -= step;
            if step.norm() < 1e-15 * r.norm().max(1.0) {
                break;
            }
        }
    }
    // snap near-real roots and enforce conjugate pairing
    for r in roots.iter_mut() {
        if r.im.abs() < 1e-10 * r.norm().max(1e-30) {
            r.im = 0.0;
        }
    }
    roots.sort_by(|a, b| {
        a.re.partial_cmp(&b.re)
            .unwrap()
            .then(a.im.partial_cmp(&b.im).unwrap())
    });
    roots
}

fn quadratic_roots(c1: f64, c2: f64) -> Vec<Complex64> {
    // z^2 + c1 z + c2
    let disc = c1 * c1 - 4.0 * c2;
    if disc >= 0.0 {
        let sq = disc.sqrt();
        // the numerically stable pair
        let q = -0.5 * (c1 + c1.signum() * sq);
        let (r1, r2) = if q != 0.0 {
            (q, c2 / q)
        } else {
            (0.0, -c1)
        };
        let mut v = vec![Complex64::new(r1, 0.0), Complex64::new(r2, 0.0)];
        v.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap());
        v
    } else {
        let re = -0.5 * c1;
        let im = 0.5 * (-disc).sqrt();
        vec![Complex64::new(re, -im), Complex64::new(re, im)]
    }
}

/// Eigenvalues of a symmetric tridiagonal matrix (diagonal d, off-diagonal
/// e with e.len() == d.len()-1) by Sturm-sequence bisection. Robust and
/// plenty fast for the small Jacobi matrices used here.
pub fn symmetric_tridiagonal_eigenvalues(d: &[f64], e: &[f64]) -> Vec<f64> {
    let n = d.len();
    assert_eq!(e.len() + 1, n.max(1));
    if n == 0 {
        return Vec::new();
    }
    let e2: Vec<f64> = e.iter().map(|v| v * v).collect();
    // number of eigenvalues strictly below x
    let count_below = |x: f64| -> usize {
        let mut count = 0usize;
        let mut q = d[0] - x;
        if q < 0.0 {
            count += 1;
        }
        for i in 1..n {
            if q == 0.0 {
                q = 1e-300;
            }
            q = d[i] - x - e2[i - 1] / q;
            if q < 0.0 {
                count += 1;
            }
        }
        count
    };
    // Gershgorin bounds
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let r = if i > 0 { e[i - 1].abs() } else { 0.0 }
            + if i + 1 < n { e[i].abs() } else { 0.0 };
        lo = lo.min(d[i] - r);
        hi = hi.max(d[i] + r);
    }
    let width = (hi - lo).max(1e-300);
    let (lo, hi) = (lo - 1e-12 * width, hi + 1e-12 * width);
    (0..n)
        .map(|k| {
            let mut a = lo;
            let mut b = hi;
            for _ in 0..120 {
                let mid = 0.5 * (a + b);
                if count_below(mid) > k {
                    b = mid;
                } else {
                    a = mid;
                }
                if b - a <= f64::EPSILON * (a.abs() + b.abs()).max(1e-300) {
                    break;
                }
            }
            0.5 * (a + b)
        })
        .collect()
}
