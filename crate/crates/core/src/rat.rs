//! Exact rational scalars.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rat = num_rational::BigRational;

pub fn int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

pub fn frac(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn zeros(len: usize) -> Vec<Rat> {
    vec![Rat::zero(); len]
}

pub fn ints(values: &[i64]) -> Vec<Rat> {
    values.iter().map(|&v| int(v)).collect()
}

/// Parses `"7"`, `"-3/4"` or an exact decimal such as `"2.125"` / `"-1e-3"`.
pub fn parse(text: &str) -> Result<Rat> {
    let bad = |reason: &str| Error::BadRational {
        text: text.to_string(),
        reason: reason.to_string(),
    };
    let s = text.trim();
    if s.is_empty() {
        return Err(bad("empty"));
    }
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num.trim().parse().map_err(|_| bad("bad numerator"))?;
        let den: BigInt = den.trim().parse().map_err(|_| bad("bad denominator"))?;
        if den.is_zero() {
            return Err(bad("zero denominator"));
        }
        return Ok(Rat::new(num, den));
    }
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => {
            let exp: i32 = s[pos + 1..].parse().map_err(|_| bad("bad exponent"))?;
            (&s[..pos], exp)
        }
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, fraction) = digits.split_once('.').unwrap_or((digits, ""));
    if whole.is_empty() && fraction.is_empty() {
        return Err(bad("no digits"));
    }
    if !whole.chars().chain(fraction.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad("not a number"));
    }
    let joined = format!("{whole}{fraction}");
    let mut value = Rat::from_integer(joined.parse::<BigInt>().map_err(|_| bad("bad digits"))?);
    let scale = exponent - fraction.len() as i32;
    let ten = Rat::from_integer(BigInt::from(10));
    let factor = num_traits::pow(ten, scale.unsigned_abs() as usize);
    if scale >= 0 {
        value *= factor;
    } else {
        value /= factor;
    }
    Ok(if negative { -value } else { value })
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format(value: &Rat) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

pub fn format_vec(values: &[Rat]) -> String {
    let parts: Vec<String> = values.iter().map(format).collect();
    format!("({})", parts.join(","))
}

pub fn sum<'a>(values: impl IntoIterator<Item = &'a Rat>) -> Rat {
    values.into_iter().fold(Rat::zero(), |acc, v| acc + v)
}

pub fn is_constant(values: &[Rat]) -> bool {
    values.windows(2).all(|w| w[0] == w[1])
}
