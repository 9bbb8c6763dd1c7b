//! Ground-truth engine: exact big-rational evaluation of the
//! self-convolutive recurrence, the derived-sequence transforms, and the
//! Laguerre-class trace/linear-recurrence formulas.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::params::SequenceParams;
use crate::rational::{rat_int, Rat};

/// Exact values u_1..u_N of S(alpha1,alpha2,alpha3).
#[derive(Debug, Clone, PartialEq)]
pub struct ExactSequence {
    pub params: SequenceParams,
    pub values: Vec<Rat>,
}

impl ExactSequence {
    /// u_n (1-indexed).
    pub fn u(&self, n: usize) -> &Rat {
        &self.values[n - 1]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// u_n = (alpha1 n + alpha2) u_{n-1} + alpha3 sum_{j=1}^{n-1} u_j u_{n-j},
/// u_1 = 1, evaluated exactly. O(N^2) rational multiplies.
pub fn generate_exact(p: &SequenceParams, n_terms: usize) -> ExactSequence {
    assert!(n_terms >= 1, "need at least one term");
    let mut values: Vec<Rat> = Vec::with_capacity(n_terms);
    values.push(Rat::one());
    for n in 2..=n_terms {
        let linear = (&p.alpha1 * rat_int(n as i64) + &p.alpha2) * &values[n - 2];
        let mut conv = Rat::zero();
        for j in 1..n {
            conv += &values[j - 1] * &values[n - j - 1];
        }
        values.push(linear + &p.alpha3 * conv);
    }
    ExactSequence {
        params: p.clone(),
        values,
    }
}

/// Re-check the defining recurrence on stored values (used by tests).
pub fn recurrence_holds(seq: &ExactSequence) -> bool {
    let p = &seq.params;
    if seq.values.is_empty() || !seq.values[0].is_one() {
        return false;
    }
    for n in 2..=seq.values.len() {
        let linear = (&p.alpha1 * rat_int(n as i64) + &p.alpha2) * &seq.values[n - 2];
        let mut conv = Rat::zero();
        for j in 1..n {
            conv += &seq.values[j - 1] * &seq.values[n - j - 1];
        }
        if seq.values[n - 1] != linear + &p.alpha3 * conv {
            return false;
        }
    }
    true
}

/// A005413 transform of S(2,-2,1): v_n = (n-1)(u_n + 2n u_{n-1}), n >= 2.
pub fn derived_a005413(seq: &ExactSequence) -> Result<Vec<Rat>> {
    if seq.params != SequenceParams::from_i64(2, -2, 1) {
        return Err(Error::WrongBaseSequence { expected: "S(2,-2,1)" });
    }
    Ok((2..=seq.len())
        .map(|n| {
            let n_rat = rat_int(n as i64);
            rat_int(n as i64 - 1) * (seq.u(n) + (&n_rat + &n_rat) * seq.u(n - 1))
        })
        .collect())
}

/// A005416 transform of S(2,-3,1): w_n = (2n-1) u_n.
pub fn derived_a005416(seq: &ExactSequence) -> Result<Vec<Rat>> {
    if seq.params != SequenceParams::from_i64(2, -3, 1) {
        return Err(Error::WrongBaseSequence { expected: "S(2,-3,1)" });
    }
    Ok((1..=seq.len())
        .map(|n| rat_int(2 * n as i64 - 1) * seq.u(n))
        .collect())
}

/// The m x m tridiagonal operator whose characteristic polynomial is the
/// monic Laguerre polynomial: diagonal 2j+1+alpha (j = 0..m-1),
/// superdiagonal 1, subdiagonal j(j+alpha) (j = 1..m-1).
#[derive(Debug, Clone, PartialEq)]
pub struct TridiagonalOperator {
    pub dimension: usize,
    pub alpha: Rat,
}

impl TridiagonalOperator {
    pub fn new(alpha: Rat, m: usize) -> TridiagonalOperator {
        assert!(m >= 1);
        TridiagonalOperator { dimension: m, alpha }
    }

    /// Dense exact matrix.
    pub fn to_matrix(&self) -> Vec<Vec<Rat>> {
        let m = self.dimension;
        let mut t = vec![vec![Rat::zero(); m]; m];
        for j in 0..m {
            t[j][j] = rat_int(2 * j as i64 + 1) + &self.alpha;
            if j + 1 < m {
                t[j][j + 1] = Rat::one();
            }
            if j >= 1 {
                t[j][j - 1] = rat_int(j as i64) * (rat_int(j as i64) + &self.alpha);
            }
        }
        t
    }

    /// Monic characteristic polynomial det(xI - T), coefficients from the
    /// leading x^m down to the constant term (length m+1, leading 1).
    pub fn characteristic_polynomial(&self) -> Vec<Rat> {
        // three-term recurrence for tridiagonal determinants:
        // p_j(x) = (x - d_j) p_{j-1}(x) - sub_j * sup_{j-1} * p_{j-2}(x)
        let m = self.dimension;
        let mut prev = vec![Rat::one()]; // p_0 = 1
        let mut cur = vec![Rat::one(), -(Rat::one() + &self.alpha)]; // x - (1+alpha)
        for j in 2..=m {
            let d = rat_int(2 * (j as i64 - 1) + 1) + &self.alpha;
            let s = rat_int(j as i64 - 1) * (rat_int(j as i64 - 1) + &self.alpha);
            let mut next = vec![Rat::zero(); cur.len() + 1];
            for (i, c) in cur.iter().enumerate() {
                next[i] += c;
                next[i + 1] -= &d * c;
            }
            let offset = next.len() - prev.len();
            for (i, c) in prev.iter().enumerate() {
                next[i + offset] -= &s * c;
            }
            prev = std::mem::replace(&mut cur, next);
        }
        if m == 0 {
            return prev;
        }
        cur
    }
}

/// Trace formula u_n = (1/m) tr(T^{n-1}) via exact repeated matrix
/// multiplication; equals generate_exact((-1, 2+alpha, m), N) termwise.
pub fn laguerre_trace(alpha: &Rat, m: usize, n_terms: usize) -> Vec<Rat> {
    assert!(m >= 1 && n_terms >= 1);
    let t = TridiagonalOperator::new(alpha.clone(), m).to_matrix();
    let mut power: Vec<Vec<Rat>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| if i == j { Rat::one() } else { Rat::zero() })
                .collect()
        })
        .collect();
    let m_rat = rat_int(m as i64);
    let mut out = Vec::with_capacity(n_terms);
    for n in 1..=n_terms {
        let trace: Rat = (0..m).map(|i| power[i][i].clone()).sum();
        out.push(trace / &m_rat);
        if n < n_terms {
            power = mat_mul(&power, &t);
        }
    }
    out
}

/// Monic linear-recurrence polynomial of order m for the Laguerre class:
/// the characteristic polynomial of T (equivalently the monic Laguerre
/// polynomial), whose roots drive u_n = -c_1 u_{n-1} - ... - c_m u_{n-m}
/// with reversed signs of the coefficients.
pub fn laguerre_linear_recurrence(alpha: &Rat, m: usize) -> Vec<Rat> {
    TridiagonalOperator::new(alpha.clone(), m).characteristic_polynomial()
}

/// Monic Laguerre polynomial (-1)^m m! L_m^{(alpha)}(x) expanded exactly;
/// independent oracle for the characteristic polynomial.
pub fn monic_laguerre(alpha: &Rat, m: usize) -> Vec<Rat> {
    // L_m^{(alpha)}(x) = sum_{i=0}^m (-1)^i binom(m+alpha, m-i) x^i / i!
    let m_i64 = m as i64;
    let mut fact = Rat::one(); // i!
    let mut coeffs_low_to_high = Vec::with_capacity(m + 1);
    for i in 0..=m_i64 {
        if i > 1 {
            fact *= rat_int(i);
        }
        // binom(m+alpha, m-i) = prod_{r=1}^{m-i} (alpha + i + r) / (m-i)!
        let mut binom = Rat::one();
        for r in 1..=(m_i64 - i) {
            binom *= alpha + rat_int(i + r);
            binom /= rat_int(r);
        }
        let sign = if i % 2 == 0 { Rat::one() } else { -Rat::one() };
        coeffs_low_to_high.push(sign * binom / &fact);
    }
    // monic: multiply by (-1)^m m!
    let mut mfact = Rat::one();
    for r in 2..=m_i64 {
        mfact *= rat_int(r);
    }
    if m % 2 == 1 {
        mfact = -mfact;
    }
    coeffs_low_to_high.reverse();
    coeffs_low_to_high.into_iter().map(|c| c * &mfact).collect()
}

fn mat_mul(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = a.len();
    let mut out = vec![vec![Rat::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}
