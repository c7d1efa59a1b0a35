//! Field arithmetic, exact sign and square detection, all by recursion on
//! the top generator: x = a + b·g with a, b one level down and g² = s.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Tower, TowerElement};
use crate::error::{Error, Result};
use crate::exactnum::{checked_recip, denominator_lcm, rat_sign, rational_square_root};

type Coords = Vec<BigRational>;

fn is_zero(a: &[BigRational]) -> bool {
    a.iter().all(Zero::is_zero)
}

fn add_coords(a: &[BigRational], b: &[BigRational]) -> Coords {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub_coords(a: &[BigRational], b: &[BigRational]) -> Coords {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn neg_coords(a: &[BigRational]) -> Coords {
    a.iter().map(|x| -x).collect()
}

/// nums / den with a common integer denominator.
struct IntCoords {
    nums: Vec<BigInt>,
    den: BigInt,
}

impl IntCoords {
    fn from_rationals(q: &[BigRational]) -> Self {
        let den = denominator_lcm(q);
        let nums = q.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        IntCoords { nums, den }
    }
}

/// Product of integer coordinate vectors at level k, returned as W with x·y = W / dens[k],
/// where dens[k] = squares[k−1].den · dens[k−1]².
fn int_mul(squares: &[IntCoords], dens: &[BigInt], a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.len() == 1 {
        return vec![&a[0] * &b[0]];
    }
    if a.iter().all(Zero::is_zero) || b.iter().all(Zero::is_zero) {
        return vec![BigInt::zero(); a.len()];
    }
    let half = a.len() / 2;
    let k = half.trailing_zeros() as usize + 1;
    let s = &squares[k - 1];
    let scale = &s.den * &dens[k - 1];
    let (a1, b1) = a.split_at(half);
    let (a2, b2) = b.split_at(half);
    let q = int_mul(squares, dens, b1, b2);
    let r = int_mul(squares, dens, &s.nums, &q);
    let p = int_mul(squares, dens, a1, a2);
    let h1 = int_mul(squares, dens, a1, b2);
    let h2 = int_mul(squares, dens, a2, b1);
    let mut out: Vec<BigInt> = p.iter().zip(&r).map(|(p, r)| p * &scale + r).collect();
    out.extend(h1.iter().zip(&h2).map(|(x, y)| (x + y) * &scale));
    out
}

fn invalid(msg: &str) -> Error {
    Error::InvalidTower(msg.to_string())
}

impl Tower {
    fn same_level(&self, x: &TowerElement, y: &TowerElement) -> Result<usize> {
        self.check_element(x)?;
        if x.level != y.level {
            return Err(Error::LevelMismatch {
                left: x.level,
                right: y.level,
            });
        }
        Ok(x.level)
    }

    pub fn add(&self, x: &TowerElement, y: &TowerElement) -> Result<TowerElement> {
        let level = self.same_level(x, y)?;
        Ok(TowerElement::from_parts(level, add_coords(&x.coords, &y.coords)))
    }

    pub fn sub(&self, x: &TowerElement, y: &TowerElement) -> Result<TowerElement> {
        let level = self.same_level(x, y)?;
        Ok(TowerElement::from_parts(level, sub_coords(&x.coords, &y.coords)))
    }

    pub fn neg(&self, x: &TowerElement) -> TowerElement {
        TowerElement::from_parts(x.level, neg_coords(&x.coords))
    }

    pub fn mul(&self, x: &TowerElement, y: &TowerElement) -> Result<TowerElement> {
        let level = self.same_level(x, y)?;
        Ok(TowerElement::from_parts(
            level,
            self.mul_coords(&x.coords, &y.coords),
        ))
    }

    pub fn inv(&self, x: &TowerElement) -> Result<TowerElement> {
        self.check_element(x)?;
        if x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(TowerElement::from_parts(x.level, self.inv_coords(&x.coords)?))
    }

    pub fn div(&self, x: &TowerElement, y: &TowerElement) -> Result<TowerElement> {
        self.same_level(x, y)?;
        self.mul(x, &self.inv(y)?)
    }

    /// Integer power; negative exponents go through `inv`.
    pub fn pow(&self, x: &TowerElement, exp: i64) -> Result<TowerElement> {
        self.check_element(x)?;
        let base = if exp < 0 { self.inv(x)? } else { x.clone() };
        let mut result = TowerElement::one(x.level);
        let mut square = base;
        let mut e = exp.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &square)?;
            }
            e >>= 1;
            if e > 0 {
                square = self.mul(&square, &square)?;
            }
        }
        Ok(result)
    }

    pub fn conjugate(&self, x: &TowerElement) -> Result<TowerElement> {
        self.check_element(x)?;
        x.conjugate()
    }

    /// The sign of the real number `x`, decided exactly.
    pub fn exact_sign(&self, x: &TowerElement) -> Result<i8> {
        self.check_element(x)?;
        self.sign_coords(&x.coords)
    }

    /// A square root of `x` inside its own level, if one exists.
    pub fn is_square(&self, x: &TowerElement) -> Result<Option<TowerElement>> {
        self.check_element(x)?;
        Ok(self
            .sqrt_coords(&x.coords)?
            .map(|w| TowerElement::from_parts(x.level, w)))
    }

    fn square_of(&self, level: usize) -> &[BigRational] {
        &self.squares[level - 1].coords
    }

    /// Clears denominators and multiplies over the integers, reducing once at the end.
    pub(super) fn mul_coords(&self, a: &[BigRational], b: &[BigRational]) -> Coords {
        if a.len() == 1 {
            return vec![&a[0] * &b[0]];
        }
        if is_zero(a) || is_zero(b) {
            return vec![BigRational::zero(); a.len()];
        }
        let level = a.len().trailing_zeros() as usize;
        let squares: Vec<IntCoords> = self.squares[..level]
            .iter()
            .map(|s| IntCoords::from_rationals(&s.coords))
            .collect();
        let mut dens = vec![BigInt::one()];
        for (s, d) in squares.iter().zip(0..) {
            let prev: &BigInt = &dens[d];
            dens.push(&s.den * prev * prev);
        }
        let x = IntCoords::from_rationals(a);
        let y = IntCoords::from_rationals(b);
        let den = &x.den * &y.den * &dens[level];
        int_mul(&squares, &dens, &x.nums, &y.nums)
            .into_iter()
            .map(|n| BigRational::new(n, den.clone()))
            .collect()
    }

    /// a² − s·b², the norm of a + b·g down to the subfield.
    fn norm_coords(&self, a: &[BigRational], b: &[BigRational]) -> Coords {
        let s = self.square_of(a.len().trailing_zeros() as usize + 1);
        sub_coords(
            &self.mul_coords(a, a),
            &self.mul_coords(s, &self.mul_coords(b, b)),
        )
    }

    fn inv_coords(&self, x: &[BigRational]) -> Result<Coords> {
        if x.len() == 1 {
            return checked_recip(&x[0]).map(|r| vec![r]);
        }
        // Callers have excluded zero; a vanishing norm here means s is a square.
        if is_zero(x) {
            return Err(invalid("nonzero element with vanishing norm"));
        }
        let half = x.len() / 2;
        let (a, b) = x.split_at(half);
        let norm = self.norm_coords(a, b);
        let norm_inv = self
            .inv_coords(&norm)
            .map_err(|_| invalid("nonzero element with vanishing norm"))?;
        let mut out = self.mul_coords(a, &norm_inv);
        out.extend(neg_coords(&self.mul_coords(b, &norm_inv)));
        Ok(out)
    }

    fn sign_coords(&self, x: &[BigRational]) -> Result<i8> {
        if x.len() == 1 {
            return Ok(rat_sign(&x[0]));
        }
        let half = x.len() / 2;
        let (a, b) = x.split_at(half);
        let sb = self.sign_coords(b)?;
        let sa = self.sign_coords(a)?;
        if sb == 0 || sa == sb {
            return Ok(sa);
        }
        if sa == 0 {
            return Ok(sb);
        }
        // Opposite signs: whichever of |a| and |b·g| is larger wins.
        match self.sign_coords(&self.norm_coords(a, b))? {
            1 => Ok(sa),
            -1 => Ok(sb),
            _ => Err(invalid("a² = s·b² with b ≠ 0: generator square is a square")),
        }
    }

    fn sqrt_coords(&self, x: &[BigRational]) -> Result<Option<Coords>> {
        if x.len() == 1 {
            return Ok(rational_square_root(&x[0]).map(|w| vec![w]));
        }
        let half = x.len() / 2;
        let s = self.square_of(half.trailing_zeros() as usize + 1);
        let (a, b) = x.split_at(half);
        let zeros = || vec![BigRational::zero(); half];

        if is_zero(b) {
            if let Some(w) = self.sqrt_coords(a)? {
                let mut out = w;
                out.extend(zeros());
                return Ok(Some(out));
            }
            // a = s·w² gives x = (w·g)².
            let s_inv = self
                .inv_coords(s)
                .map_err(|_| invalid("generator square is zero"))?;
            if let Some(w) = self.sqrt_coords(&self.mul_coords(a, &s_inv))? {
                let mut out = zeros();
                out.extend(w);
                return Ok(Some(out));
            }
            return Ok(None);
        }

        // (c + d·g)² = (c² + s·d²) + 2cd·g, and a² − s·b² = (c² − s·d²)².
        let Some(r) = self.sqrt_coords(&self.norm_coords(a, b))? else {
            return Ok(None);
        };
        let half_q = BigRational::new(One::one(), 2.into());
        for cand in [add_coords(a, &r), sub_coords(a, &r)] {
            let c_sq: Coords = cand.iter().map(|v| v * &half_q).collect();
            let Some(c) = self.sqrt_coords(&c_sq)? else {
                continue;
            };
            if is_zero(&c) {
                continue;
            }
            let two_c: Coords = c.iter().map(|v| v + v).collect();
            let d = self.mul_coords(b, &self.inv_coords(&two_c)?);
            let mut w = c;
            w.extend(d);
            if self.mul_coords(&w, &w) == x {
                return Ok(Some(w));
            }
        }
        Ok(None)
    }
}
