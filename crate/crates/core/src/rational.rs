//! Exact rational helpers: parsing, conversion and logarithms of big ratios.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Shorthand used throughout the crate.
pub type Rat = BigRational;

/// Build a rational from an integer pair.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Build a rational from an integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parse "p/q", an integer, or a decimal string as an exact rational.
///
/// Decimal strings are exact base-10 rationals: "-1.5" parses to -3/2,
/// never through a float.
pub fn parse_rational(s: &str) -> Option<Rat> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().ok()?;
        let d: BigInt = den.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Rat::new(n, d));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        if frac_part.contains(['+', '-']) {
            return None;
        }
        let negative = int_part.starts_with('-');
        let int_digits = int_part.trim_start_matches(['+', '-']);
        let n_int: BigInt = if int_digits.is_empty() {
            BigInt::zero()
        } else {
            int_digits.parse().ok()?
        };
        let n_frac: BigInt = if frac_part.is_empty() {
            BigInt::zero()
        } else {
            frac_part.parse().ok()?
        };
        if n_frac.sign() == Sign::Minus {
            return None;
        }
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        let mut value = Rat::new(n_int * &scale + n_frac, scale);
        if negative {
            value = -value;
        }
        return Some(value);
    }
    let n: BigInt = s.parse().ok()?;
    Some(Rat::from_integer(n))
}

/// Round-to-nearest f64 conversion that survives numerators and
/// denominators far outside the f64 range.
pub fn rat_to_f64(r: &Rat) -> f64 {
    if let Some(v) = r.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    // Fall back to a scaled conversion via bit lengths.
    let num = r.numer();
    let den = r.denom();
    if num.is_zero() {
        return 0.0;
    }
    let shift_n = num.bits().saturating_sub(64) as i64;
    let shift_d = den.bits().saturating_sub(64) as i64;
    let top_n = (num >> shift_n as u64).to_f64().unwrap_or(f64::NAN);
    let top_d = (den >> shift_d as u64).to_f64().unwrap_or(f64::NAN);
    (top_n / top_d) * 2f64.powi((shift_n - shift_d) as i32)
}

/// Natural log of |r| for a nonzero rational of arbitrary size.
pub fn ln_abs_rat(r: &Rat) -> f64 {
    ln_abs_bigint(r.numer()) - ln_abs_bigint(r.denom())
}

fn ln_abs_bigint(x: &BigInt) -> f64 {
    debug_assert!(!x.is_zero());
    let bits = x.bits();
    if bits <= 64 {
        return x.abs().to_f64().unwrap().ln();
    }
    let shift = bits - 53;
    let top = (x.abs() >> shift).to_f64().unwrap();
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// True iff r is an integer <= 0.
pub fn is_nonpositive_integer(r: &Rat) -> bool {
    r.is_integer() && !r.is_positive()
}

/// True iff r is an integer < 0.
pub fn is_negative_integer(r: &Rat) -> bool {
    r.is_integer() && r.is_negative()
}

/// r as i64 when it is an integer in range.
pub fn as_i64(r: &Rat) -> Option<i64> {
    if r.is_integer() {
        r.numer().to_i64()
    } else {
        None
    }
}

/// Render "p/q", or just "p" for integers.
pub fn rat_display(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_decimals() {
        assert_eq!(parse_rational("-3/2").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational("-1.5").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational("2").unwrap(), rat_int(2));
        assert_eq!(parse_rational("0.125").unwrap(), rat(1, 8));
        assert_eq!(parse_rational(".5").unwrap(), rat(1, 2));
        assert!(parse_rational("1/0").is_none());
        assert!(parse_rational("abc").is_none());
    }

    #[test]
    fn decimal_parse_is_exact() {
        // 0.1 is exactly 1/10, not the nearest f64.
        let r = parse_rational("0.1").unwrap();
        assert_eq!(r, rat(1, 10));
    }

    #[test]
    fn big_ratio_to_f64() {
        let big = BigInt::from(10u32).pow(400);
        let r = Rat::new(big.clone() * 3, big);
        assert!((rat_to_f64(&r) - 3.0).abs() < 1e-14);
    }

    #[test]
    fn ln_of_huge_rational() {
        let r = Rat::new(BigInt::from(10u32).pow(500), BigInt::from(1));
        let expected = 500.0 * 10f64.ln();
        assert!((ln_abs_rat(&r) - expected).abs() < 1e-9 * expected);
    }
}
