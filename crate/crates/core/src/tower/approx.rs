//! Numeric approximation for diagnostics and cross-checks. Nothing exact
//! ever consults these values.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{basis_len, Tower, TowerElement};
use crate::error::Result;

/// A dyadic approximation `mantissa / 2^scale`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Approx {
    mantissa: BigInt,
    scale: u32,
}

fn div_round(n: &BigInt, d: &BigInt) -> BigInt {
    // floor((2n + d) / 2d), d > 0
    let twice: BigInt = n * 2 + d;
    twice.div_floor(&(d * 2))
}

fn shr_round(n: &BigInt, bits: u32) -> BigInt {
    if bits == 0 {
        return n.clone();
    }
    (n + (BigInt::one() << (bits - 1))) >> bits
}

impl Approx {
    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn signum(&self) -> i8 {
        match self.mantissa.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn to_f64(&self) -> f64 {
        let bits = self.mantissa.bits() as i64;
        let drop = (bits - 62).max(0);
        let top = (&self.mantissa >> drop as usize).to_i64().unwrap_or(0) as f64;
        let mut exp = drop - self.scale as i64;
        let mut v = top;
        // Step the exponent so intermediate powers never overflow.
        while exp > 0 {
            let step = exp.min(1000);
            v *= 2f64.powi(step as i32);
            exp -= step;
        }
        while exp < 0 {
            let step = (-exp).min(1000);
            v /= 2f64.powi(step as i32);
            exp += step;
        }
        v
    }

    /// |self − other| > 2^tolerance_log2 · max(1, |other|)
    fn abs_diff_exceeds(&self, other: &Approx, tolerance_log2: i64) -> bool {
        let scale = self.scale.max(other.scale);
        let a = &self.mantissa << (scale - self.scale);
        let b = &other.mantissa << (scale - other.scale);
        let diff = (a - b).abs();
        let one = BigInt::one() << scale;
        let mag = other.mantissa.abs() << (scale - other.scale);
        let reference = if mag > one { mag } else { one };
        if tolerance_log2 >= 0 {
            diff > reference << tolerance_log2 as usize
        } else {
            (diff << (-tolerance_log2) as usize) > reference
        }
    }

    /// Decimal rendering with `digits` significant digits, keeping trailing
    /// zeros: fixed notation for decimal exponents in [-4, digits), scientific otherwise.
    pub fn to_significant(&self, digits: usize) -> String {
        let digits = digits.max(1);
        if self.mantissa.is_zero() {
            return format!("{:.*}", digits - 1, 0.0);
        }
        let negative = self.mantissa.is_negative();
        let mag = self.mantissa.abs();
        let denom = BigInt::one() << self.scale;
        let ten = BigInt::from(10);

        // Decimal exponent e with 10^e ≤ |x| < 10^(e+1).
        let mut e = (self.to_f64().abs().log10().floor() as i64).clamp(-100_000, 100_000);
        let cmp_pow = |e: i64| -> Ordering {
            if e >= 0 {
                mag.cmp(&(num_traits::pow(ten.clone(), e as usize) * &denom))
            } else {
                (&mag * num_traits::pow(ten.clone(), (-e) as usize)).cmp(&denom)
            }
        };
        while cmp_pow(e) == Ordering::Less {
            e -= 1;
        }
        while cmp_pow(e + 1) != Ordering::Less {
            e += 1;
        }

        let shift = digits as i64 - 1 - e;
        let mut n = if shift >= 0 {
            div_round(&(&mag * num_traits::pow(ten.clone(), shift as usize)), &denom)
        } else {
            div_round(&mag, &(&denom * num_traits::pow(ten.clone(), (-shift) as usize)))
        };
        if n == num_traits::pow(ten.clone(), digits) {
            n /= &ten;
            e += 1;
        }
        let text = n.to_string();
        let sign = if negative { "-" } else { "" };
        if e < -4 || e >= digits as i64 {
            let (lead, rest) = text.split_at(1);
            let exp_sign = if e < 0 { '-' } else { '+' };
            return format!("{sign}{lead}.{rest}e{exp_sign}{:02}", e.abs());
        }
        if e >= 0 {
            let (int_part, frac) = text.split_at(e as usize + 1);
            format!("{sign}{int_part}.{frac}")
        } else {
            format!("{sign}0.{}{text}", "0".repeat((-e - 1) as usize))
        }
    }
}

impl fmt::Display for Approx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_significant(15))
    }
}

impl Tower {
    /// Approximates `x` with `precision` bits of working precision.
    ///
    /// Generators are evaluated as positive square roots of their
    /// approximated squares and combined over the all-products basis. The
    /// evaluation is repeated with more guard bits until two runs agree.
    pub fn approx(&self, x: &TowerElement, precision: u32) -> Result<Approx> {
        self.check_element(x)?;
        let precision = precision.max(1);
        let mut guard = 32 + 16 * x.level as u32;
        let mut prev = self.approx_fixed(x, precision + guard);
        loop {
            guard *= 2;
            let next = self.approx_fixed(x, precision + guard);
            if !next.abs_diff_exceeds(&prev, 4 - precision as i64) || guard > 1 << 14 {
                return Ok(next);
            }
            prev = next;
        }
    }

    fn approx_fixed(&self, x: &TowerElement, scale: u32) -> Approx {
        let one = BigInt::one() << scale;
        let mut basis = vec![one];
        basis.reserve(basis_len(x.level));
        for i in 1..=x.level {
            let s = &self.squares[i - 1];
            let s_val = dot(&s.coords, &basis).max(BigInt::zero());
            let g = (s_val << scale).sqrt();
            let n = basis.len();
            for j in 0..n {
                let p = shr_round(&(&basis[j] * &g), scale);
                basis.push(p);
            }
        }
        Approx {
            mantissa: dot(&x.coords, &basis),
            scale,
        }
    }
}

fn dot(coords: &[BigRational], basis: &[BigInt]) -> BigInt {
    coords
        .iter()
        .zip(basis)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, b)| div_round(&(c.numer() * b), c.denom()))
        .sum()
}
