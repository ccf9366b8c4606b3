//! Exact rational helpers shared by every module.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"3"`, `"-7/4"` or a plain decimal such as `"0.25"`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Rational::new(n, d));
    }
    if let Some((int, dec)) = s.split_once('.') {
        let neg = int.starts_with('-');
        let digits = format!("{}{}", int.trim_start_matches(['-', '+']), dec);
        if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
            return None;
        }
        let n: BigInt = digits.parse().ok()?;
        let d = num_traits::pow(BigInt::from(10), dec.len());
        let r = Rational::new(n, d);
        return Some(if neg { -r } else { r });
    }
    s.parse::<BigInt>().ok().map(Rational::from_integer)
}

/// `a/b` with the denominator dropped when it is one.
pub fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    match (r.numer().to_f64(), r.denom().to_f64()) {
        (Some(n), Some(d)) => n / d,
        _ => f64::NAN,
    }
}

/// `base^exp` for any integer exponent; `base` must be nonzero when `exp < 0`.
pub fn pow_i(base: &Rational, exp: i64) -> Rational {
    let mut out = Rational::one();
    for _ in 0..exp.unsigned_abs() {
        out *= base;
    }
    if exp < 0 {
        out.recip()
    } else {
        out
    }
}

/// The integer `w` with `base^w == value`, searched within `|w| <= max_abs`.
pub fn exact_log(base: &Rational, value: &Rational, max_abs: u32) -> Option<i64> {
    if base.is_one() || !base.is_positive() || !value.is_positive() {
        return if value.is_one() && base.is_positive() { Some(0) } else { None };
    }
    let (mut up, mut down) = (Rational::one(), Rational::one());
    let inv = base.recip();
    for w in 0..=max_abs as i64 {
        if &up == value {
            return Some(w);
        }
        if &down == value {
            return Some(-w);
        }
        up *= base;
        down *= &inv;
    }
    None
}

pub mod serde_rational {
    use super::{fmt_rational, parse_rational, Rational};
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Int(i64),
            Text(String),
        }
        match Repr::deserialize(d)? {
            Repr::Int(n) => Ok(super::rat(n)),
            Repr::Text(s) => {
                parse_rational(&s).ok_or_else(|| D::Error::custom(format!("bad rational `{s}`")))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("3"), Some(rat(3)));
        assert_eq!(parse_rational("-7/4"), Some(frac(-7, 4)));
        assert_eq!(parse_rational("0.25"), Some(frac(1, 4)));
        assert_eq!(parse_rational("-1.5"), Some(frac(-3, 2)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }

    #[test]
    fn logs() {
        assert_eq!(exact_log(&rat(2), &rat(8), 10), Some(3));
        assert_eq!(exact_log(&rat(2), &frac(1, 4), 10), Some(-2));
        assert_eq!(exact_log(&rat(2), &rat(1), 10), Some(0));
        assert_eq!(exact_log(&rat(2), &rat(3), 10), None);
        assert_eq!(pow_i(&rat(3), -2), frac(1, 9));
    }
}
