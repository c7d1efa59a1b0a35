//! Exact scalars: arbitrary-precision integers and rationals.
//!
//! `BigRational` from `num-rational` is always kept in lowest terms with a
//! positive denominator, and zero is `0/1`. The helpers here add what the
//! rational root enumeration and the square test at the bottom of a tower
//! need.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use num_rational::BigRational;

/// The four field operations on rationals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Exact rational arithmetic. Division by zero is an error, never zero.
pub fn rat_arith(a: &BigRational, b: &BigRational, op: RatOp) -> Result<BigRational> {
    Ok(match op {
        RatOp::Add => a + b,
        RatOp::Sub => a - b,
        RatOp::Mul => a * b,
        RatOp::Div => return checked_div(a, b),
    })
}

pub fn checked_div(a: &BigRational, b: &BigRational) -> Result<BigRational> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(a / b)
}

pub fn checked_recip(a: &BigRational) -> Result<BigRational> {
    if a.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(a.recip())
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Sign of a rational as -1, 0 or +1.
pub fn rat_sign(q: &BigRational) -> i8 {
    match q.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// Positive divisors of `n` in ascending order, by trial division up to √n.
pub fn divisors(n: &BigUint) -> Result<Vec<BigUint>> {
    if n.is_zero() {
        return Err(Error::Domain("divisors of 0 are undefined".into()));
    }
    let mut low = Vec::new();
    let mut high = Vec::new();
    let mut d = BigUint::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            let q = n / &d;
            if q != d {
                high.push(q);
            }
            low.push(d.clone());
        }
        d += 1u32;
    }
    low.extend(high.into_iter().rev());
    Ok(low)
}

/// Exact integer square root: `Some(r)` with `r*r == n` when `n` is a perfect square.
pub fn exact_isqrt(n: &BigUint) -> Option<BigUint> {
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// The nonnegative rational square root of `q`, if `q` is a square in ℚ.
pub fn rational_square_root(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let num = exact_isqrt(q.numer().magnitude())?;
    let den = exact_isqrt(q.denom().magnitude())?;
    Some(BigRational::new(BigInt::from(num), BigInt::from(den)))
}

/// Least common multiple of the denominators.
pub fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a BigRational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// Parses `p` or `p/q` with an optional leading `-`. Non-canonical input is
/// normalized; a zero denominator is rejected.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let bad = || Error::BadRational(text.to_string());
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let digits = |s: &str| -> Result<BigInt> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        s.parse::<BigInt>().map_err(|_| bad())
    };
    let mut n = digits(num)?;
    let d = match den {
        Some(d) => digits(d)?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if negative {
        n = -n;
    }
    Ok(BigRational::new(n, d))
}

/// Canonical text form: `p` for integers, `p/q` otherwise.
pub fn format_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
