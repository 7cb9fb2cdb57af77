//! Exact rational scalars.
//!
//! `Scalar` is an arbitrary-precision rational, always stored in lowest
//! terms with a positive denominator. All arithmetic in this crate goes
//! through this type; there is no floating point anywhere.

use alloc::string::{String, ToString};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Scalar = num_rational::BigRational;

/// Integer as a scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// Rational n/d. Panics on d = 0.
pub fn rat(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

pub fn is_integer(x: &Scalar) -> bool {
    x.denom().is_one()
}

/// x^e for integer e, exact. e < 0 requires x ≠ 0.
pub fn pow(x: &Scalar, e: i64) -> Scalar {
    if e == 0 {
        return one();
    }
    if e < 0 {
        assert!(!x.is_zero(), "zero to a negative power");
        return pow(&x.recip(), -e);
    }
    let mut acc = one();
    let mut base = x.clone();
    let mut e = e as u64;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        base = &base * &base;
        e >>= 1;
    }
    acc
}

/// Parse "n" or "n/d" into an exact rational.
pub fn parse(s: &str) -> Result<Scalar, String> {
    let s = s.trim();
    match s.split_once('/') {
        None => s
            .parse::<BigInt>()
            .map(Scalar::from_integer)
            .map_err(|e| e.to_string()),
        Some((n, d)) => {
            let n = n.trim().parse::<BigInt>().map_err(|e| e.to_string())?;
            let d = d.trim().parse::<BigInt>().map_err(|e| e.to_string())?;
            if d.is_zero() {
                return Err("zero denominator".to_string());
            }
            Ok(Scalar::new(n, d))
        }
    }
}

/// Canonical text form: "n" for integers, "n/d" otherwise.
pub fn format(x: &Scalar) -> String {
    if is_integer(x) {
        x.numer().to_string()
    } else {
        let mut s = x.numer().to_string();
        s.push('/');
        s.push_str(&x.denom().to_string());
        s
    }
}

/// Truncated integer part as i64 (valid for the small values used here).
pub fn to_i64(x: &Scalar) -> Option<i64> {
    if !is_integer(x) {
        return None;
    }
    let n = x.numer();
    let digits = n.abs().to_u64_digits();
    match digits.1.len() {
        0 => Some(0),
        1 if digits.1[0] <= i64::MAX as u64 => {
            let v = digits.1[0] as i64;
            Some(if n.is_negative() { -v } else { v })
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stored_in_lowest_terms_with_positive_denominator() {
        let x = rat(4, -6);
        assert_eq!(x, rat(-2, 3));
        assert!(x.denom() > &BigInt::from(0));
    }

    #[test]
    fn product_with_reciprocal_is_one() {
        for (n, d) in [(1i64, 2i64), (-7, 3), (22, 7), (-1, 1), (100, 9)] {
            let x = rat(n, d);
            assert_eq!(&x * &x.recip(), one());
        }
    }

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "5", "-5", "3/4", "-3/4", "12345678901234567890/7"] {
            let x = parse(s).unwrap();
            assert_eq!(format(&x), s);
        }
        assert_eq!(parse("4/6").unwrap(), rat(2, 3));
        assert!(parse("1/0").is_err());
        assert!(parse("a").is_err());
        assert!(parse("1.5").is_err());
    }

    #[test]
    fn integer_powers() {
        assert_eq!(pow(&rat(2, 3), 3), rat(8, 27));
        assert_eq!(pow(&rat(2, 3), -2), rat(9, 4));
        assert_eq!(pow(&rat(5, 1), 0), one());
    }
}
