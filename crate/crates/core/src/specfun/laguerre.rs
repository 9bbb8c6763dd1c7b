//! Roots of the generalized Laguerre polynomial L_m^{(alpha)}.
//!
//! For alpha > -1 the roots are the eigenvalues of the symmetrized
//! (balanced) Jacobi form of the tridiagonal operator, then polished by
//! Newton on the monic polynomial. For alpha <= -1 the roots can leave
//! the real axis and are found from the monic characteristic polynomial.

use num_complex::Complex64;

use super::polyroots::{monic_eval, monic_roots, symmetric_tridiagonal_eigenvalues};

/// Monic characteristic polynomial of the Laguerre tridiagonal operator
/// (equals (-1)^m m! L_m^{(alpha)}), low-order coefficients after the
/// leading 1: returns [c1, ..., cm] for x^m + c1 x^{m-1} + ... + cm.
///
/// Built from the three-term recurrence
///   p_j(x) = (x - (2j-1+alpha)) p_{j-1}(x) - (j-1)(j-1+alpha) p_{j-2}(x).
pub fn laguerre_monic_coeffs(alpha: f64, m: usize) -> Vec<f64> {
    let mut prev: Vec<f64> = vec![1.0]; // p_0
    if m == 0 {
        return Vec::new();
    }
    let mut cur: Vec<f64> = vec![1.0, -(1.0 + alpha)]; // p_1 = x - (1+alpha)
    for j in 2..=m {
        let d = 2.0 * (j as f64 - 1.0) + 1.0 + alpha;
        let s = (j as f64 - 1.0) * (j as f64 - 1.0 + alpha);
        // next = (x - d) * cur - s * prev
        let mut next = vec![0.0; cur.len() + 1];
        for (i, &c) in cur.iter().enumerate() {
            next[i] += c;
            next[i + 1] -= d * c;
        }
        let offset = next.len() - prev.len();
        for (i, &c) in prev.iter().enumerate() {
            next[i + offset] -= s * c;
        }
        prev = cur;
        cur = next;
    }
    cur.remove(0);
    cur
}

/// The m roots of L_m^{(alpha)} as complex numbers (real roots have
/// zero imaginary part; non-real ones come in conjugate pairs).
pub fn laguerre_roots(alpha: f64, m: usize) -> Vec<Complex64> {
    if m == 0 {
        return Vec::new();
    }
    let coeffs = laguerre_monic_coeffs(alpha, m);
    if alpha > -1.0 {
        // balanced symmetric Jacobi form: diag 2j+1+alpha, off sqrt(j(j+alpha))
        let d: Vec<f64> = (0..m).map(|j| 2.0 * j as f64 + 1.0 + alpha).collect();
        let e: Vec<f64> = (1..m)
            .map(|j| (j as f64 * (j as f64 + alpha)).sqrt())
            .collect();
        let mut ev = symmetric_tridiagonal_eigenvalues(&d, &e);
        // Newton polish on the monic polynomial
        for x in ev.iter_mut() {
            for _ in 0..20 {
                let (p, dp) = monic_eval(&coeffs, Complex64::new(*x, 0.0));
                if dp.norm() == 0.0 {
                    break;
                }
                let step = p.re / dp.re;
                *x -= step;
                if step.abs() < 1e-15 * x.abs().max(1.0) {
                    break;
                }
            }
        }
        ev.into_iter().map(|x| Complex64::new(x, 0.0)).collect()
    } else {
        monic_roots(&coeffs)
    }
}
