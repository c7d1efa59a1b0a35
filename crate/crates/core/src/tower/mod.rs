//! Towers ℚ = K₀ ⊊ K₁ ⊊ ⋯ ⊊ Kₙ of real quadratic extensions.
//!
//! Level i adjoins gᵢ = +√sᵢ where sᵢ is an element of level i−1. An element
//! of level k is a vector of 2ᵏ rationals over the all-products basis:
//! coordinate j multiplies ∏ gᵢ over the set bits of j (bit i−1 selects gᵢ).
//! The top generator owns the highest bit, so an element x = a + b·gₖ stores
//! a in the first half of its coordinates and b in the second half.

mod approx;
mod arith;
mod text;

pub use approx::Approx;

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::format_rational;

/// An element of one level of a tower. It does not know which tower it
/// belongs to; operations take the tower as context.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TowerElement {
    level: usize,
    coords: Vec<BigRational>,
}

impl TowerElement {
    pub fn new(level: usize, coords: Vec<BigRational>) -> Result<Self> {
        let expected = basis_len(level);
        if coords.len() != expected {
            return Err(Error::CoordinateLength {
                expected,
                found: coords.len(),
            });
        }
        Ok(TowerElement { level, coords })
    }

    /// Builds an element whose level is implied by the coordinate count.
    pub fn from_coords(coords: Vec<BigRational>) -> Result<Self> {
        let n = coords.len();
        if n == 0 || !n.is_power_of_two() {
            return Err(Error::Domain(format!(
                "coordinate count {n} is not a power of two"
            )));
        }
        Ok(TowerElement {
            level: n.trailing_zeros() as usize,
            coords,
        })
    }

    pub(crate) fn from_parts(level: usize, coords: Vec<BigRational>) -> Self {
        debug_assert_eq!(coords.len(), basis_len(level));
        TowerElement { level, coords }
    }

    pub fn zero(level: usize) -> Self {
        TowerElement::from_parts(level, vec![BigRational::zero(); basis_len(level)])
    }

    pub fn one(level: usize) -> Self {
        TowerElement::rational(level, BigRational::one())
    }

    /// The rational `q` viewed as an element of `level`.
    pub fn rational(level: usize, q: BigRational) -> Self {
        let mut coords = vec![BigRational::zero(); basis_len(level)];
        coords[0] = q;
        TowerElement::from_parts(level, coords)
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<BigRational> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// The rational value, when this is a level-0 element.
    pub fn as_rational(&self) -> Option<&BigRational> {
        (self.level == 0).then(|| &self.coords[0])
    }

    /// Coordinates padded with zeros up to level `k + 1`.
    pub fn lift(&self) -> TowerElement {
        let mut coords = self.coords.clone();
        coords.resize(coords.len() * 2, BigRational::zero());
        TowerElement::from_parts(self.level + 1, coords)
    }

    /// Lifts repeatedly until the element sits at `level`.
    pub fn lift_to(&self, level: usize) -> Result<TowerElement> {
        if level < self.level {
            return Err(Error::LevelMismatch {
                left: self.level,
                right: level,
            });
        }
        let mut coords = self.coords.clone();
        coords.resize(basis_len(level), BigRational::zero());
        Ok(TowerElement::from_parts(level, coords))
    }

    /// `a` in the decomposition x = a + b·gₖ.
    pub fn subfield_part(&self) -> Result<TowerElement> {
        let half = self.half()?;
        Ok(TowerElement::from_parts(
            self.level - 1,
            self.coords[..half].to_vec(),
        ))
    }

    /// `b` in the decomposition x = a + b·gₖ.
    pub fn extension_part(&self) -> Result<TowerElement> {
        let half = self.half()?;
        Ok(TowerElement::from_parts(
            self.level - 1,
            self.coords[half..].to_vec(),
        ))
    }

    /// Reassembles a + b·g from parts at level k−1.
    pub fn from_subfield_parts(a: &TowerElement, b: &TowerElement) -> Result<TowerElement> {
        if a.level != b.level {
            return Err(Error::LevelMismatch {
                left: a.level,
                right: b.level,
            });
        }
        let mut coords = a.coords.clone();
        coords.extend(b.coords.iter().cloned());
        Ok(TowerElement::from_parts(a.level + 1, coords))
    }

    /// a − b·gₖ.
    pub fn conjugate(&self) -> Result<TowerElement> {
        let half = self.half()?;
        let mut coords = self.coords.clone();
        for c in &mut coords[half..] {
            *c = -c.clone();
        }
        Ok(TowerElement::from_parts(self.level, coords))
    }

    /// Projects down to level `j`, present iff every extension part above `j` vanishes.
    pub fn member_of_level(&self, j: usize) -> Option<TowerElement> {
        if j > self.level {
            return None;
        }
        let n = basis_len(j);
        self.coords[n..]
            .iter()
            .all(Zero::is_zero)
            .then(|| TowerElement::from_parts(j, self.coords[..n].to_vec()))
    }

    fn half(&self) -> Result<usize> {
        if self.level == 0 {
            return Err(Error::Domain(
                "level-0 elements have no subfield/extension decomposition".into(),
            ));
        }
        Ok(self.coords.len() / 2)
    }
}

impl fmt::Display for TowerElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.level == 0 {
            return f.write_str(&format_rational(&self.coords[0]));
        }
        f.write_str("[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&format_rational(c))?;
        }
        f.write_str("]")
    }
}

pub(crate) fn basis_len(level: usize) -> usize {
    1usize << level
}

/// Ordering of the all-products basis of one level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisDescriptor {
    pub masks: Vec<u32>,
}

impl BasisDescriptor {
    /// Renders each basis product, top generator first, e.g. `√3√5`.
    pub fn labels(&self, name: impl Fn(usize) -> String) -> Vec<String> {
        self.masks
            .iter()
            .map(|&mask| {
                if mask == 0 {
                    return "1".to_string();
                }
                (0..32)
                    .rev()
                    .filter(|bit| mask & (1 << bit) != 0)
                    .map(|bit| name(bit as usize + 1))
                    .collect()
            })
            .collect()
    }
}

/// Why a tower level fails validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LevelFault {
    CoordinateLength { expected: usize, found: usize },
    NonReal { sign: i8 },
    NotAProperExtension { witness: TowerElement },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    /// Number of levels checked and found well-formed.
    pub levels_ok: usize,
    /// First failing level (1-based) and the reason.
    pub failure: Option<(usize, LevelFault)>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.failure.is_none()
    }

    /// Converts a failure into the matching library error.
    pub fn into_result(self, tower: &Tower) -> Result<()> {
        let Some((level, fault)) = self.failure else {
            return Ok(());
        };
        Err(match fault {
            LevelFault::CoordinateLength { expected, found } => {
                Error::CoordinateLength { expected, found }
            }
            LevelFault::NonReal { sign } => Error::NonRealExtension {
                value: tower.squares[level - 1].to_string(),
                sign,
            },
            LevelFault::NotAProperExtension { witness } => Error::NotAProperExtension {
                value: tower.squares[level - 1].to_string(),
                witness: witness.to_string(),
                root: None,
            },
        })
    }
}

/// A tower of real quadratic extensions, stored in adjoin order g₁..gₙ.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Tower {
    squares: Vec<TowerElement>,
}

impl Tower {
    /// The base field ℚ.
    pub fn rationals() -> Self {
        Tower::default()
    }

    /// Builds a tower from raw square coordinates without validating it.
    /// Only the coordinate counts are checked.
    pub fn from_squares_unchecked(squares: Vec<Vec<BigRational>>) -> Result<Tower> {
        let squares = squares
            .into_iter()
            .enumerate()
            .map(|(i, coords)| TowerElement::new(i, coords))
            .collect::<Result<Vec<_>>>()?;
        Ok(Tower { squares })
    }

    /// Builds and validates a tower.
    pub fn from_squares(squares: Vec<Vec<BigRational>>) -> Result<Tower> {
        let tower = Tower::from_squares_unchecked(squares)?;
        tower.validate().into_result(&tower)?;
        Ok(tower)
    }

    pub fn depth(&self) -> usize {
        self.squares.len()
    }

    /// gᵢ² as an element of level i−1 (1-based).
    pub fn square(&self, i: usize) -> Result<&TowerElement> {
        if i == 0 || i > self.depth() {
            return Err(Error::UnknownGenerator {
                index: i,
                depth: self.depth(),
            });
        }
        Ok(&self.squares[i - 1])
    }

    pub fn squares(&self) -> &[TowerElement] {
        &self.squares
    }

    /// gᵢ as an element of level i.
    pub fn generator(&self, i: usize) -> Result<TowerElement> {
        self.square(i)?;
        let mut coords = vec![BigRational::zero(); basis_len(i)];
        coords[basis_len(i - 1)] = BigRational::one();
        Ok(TowerElement::from_parts(i, coords))
    }

    pub fn all_products(&self, level: usize) -> Result<BasisDescriptor> {
        self.check_level(level)?;
        Ok(BasisDescriptor {
            masks: (0..basis_len(level) as u32).collect(),
        })
    }

    pub fn embed_rational(&self, level: usize, q: BigRational) -> Result<TowerElement> {
        self.check_level(level)?;
        Ok(TowerElement::rational(level, q))
    }

    /// Lifts one level; fails at the top of the tower.
    pub fn lift(&self, x: &TowerElement) -> Result<TowerElement> {
        self.check_element(x)?;
        if x.level == self.depth() {
            return Err(Error::LevelOutOfRange {
                level: x.level + 1,
                max: self.depth(),
            });
        }
        Ok(x.lift())
    }

    pub fn member_of_level(&self, x: &TowerElement, j: usize) -> Result<Option<TowerElement>> {
        self.check_element(x)?;
        if j > x.level {
            return Err(Error::LevelOutOfRange {
                level: j,
                max: x.level,
            });
        }
        Ok(x.member_of_level(j))
    }

    /// Checks coordinate counts, positivity and the proper-extension
    /// condition level by level, stopping at the first failure.
    pub fn validate(&self) -> ValidationReport {
        let mut prefix = Tower::rationals();
        for (idx, s) in self.squares.iter().enumerate() {
            let level = idx + 1;
            let fail = |fault| ValidationReport {
                levels_ok: idx,
                failure: Some((level, fault)),
            };
            let expected = basis_len(idx);
            if s.coords.len() != expected || s.level != idx {
                return fail(LevelFault::CoordinateLength {
                    expected,
                    found: s.coords.len(),
                });
            }
            // The prefix is valid here, so sign and square tests cannot fail.
            let sign = prefix.exact_sign(s).unwrap_or(0);
            if sign != 1 {
                return fail(LevelFault::NonReal { sign });
            }
            if let Ok(Some(witness)) = prefix.is_square(s) {
                return fail(LevelFault::NotAProperExtension { witness });
            }
            prefix.squares.push(s.clone());
        }
        ValidationReport {
            levels_ok: self.depth(),
            failure: None,
        }
    }

    /// Adjoins g = +√s for `s` at the top level.
    pub fn adjoin_sqrt(&self, s: &TowerElement) -> Result<Tower> {
        self.check_top(s)?;
        let sign = self.exact_sign(s)?;
        if sign <= 0 {
            return Err(Error::NonRealExtension {
                value: s.to_string(),
                sign,
            });
        }
        if let Some(witness) = self.is_square(s)? {
            return Err(Error::NotAProperExtension {
                value: s.to_string(),
                witness: witness.to_string(),
                root: None,
            });
        }
        let mut squares = self.squares.clone();
        squares.push(s.clone());
        Ok(Tower { squares })
    }

    /// Extends the tower so that it contains a root of `c₀ + c₁x + c₂x²`
    /// (coefficients at the top level) and returns that root, picking
    /// `−c₁/(2c₂) + g` for `positive_branch` and `−c₁/(2c₂) − g` otherwise.
    pub fn adjoin_quadratic_root(
        &self,
        coeffs: [&TowerElement; 3],
        positive_branch: bool,
    ) -> Result<(Tower, TowerElement)> {
        let [c0, c1, c2] = coeffs;
        for c in coeffs {
            self.check_top(c)?;
        }
        if c2.is_zero() {
            return Err(Error::Domain("leading coefficient is zero".into()));
        }
        let four = TowerElement::rational(self.depth(), BigRational::from_integer(4.into()));
        let disc = self.sub(&self.mul(c1, c1)?, &self.mul(&four, &self.mul(c0, c2)?)?)?;
        let sign = self.exact_sign(&disc)?;
        if sign <= 0 {
            return Err(Error::NonRealExtension {
                value: disc.to_string(),
                sign,
            });
        }
        let two_c2 = self.add(c2, c2)?;
        let shift = self.neg(&self.div(c1, &two_c2)?);
        let radicand = self.div(&disc, &self.mul(&two_c2, &two_c2)?)?;
        let pick = |t: &Tower, w: &TowerElement| {
            if positive_branch {
                t.add(&w.lift_to(t.depth())?, &shift.lift_to(t.depth())?)
            } else {
                t.sub(&shift.lift_to(t.depth())?, &w.lift_to(t.depth())?)
            }
        };
        if let Some(w) = self.is_square(&radicand)? {
            let root = pick(self, &w)?;
            return Err(Error::NotAProperExtension {
                value: radicand.to_string(),
                witness: w.to_string(),
                root: Some(root.to_string()),
            });
        }
        let tower = self.adjoin_sqrt(&radicand)?;
        let g = tower.generator(tower.depth())?;
        let root = pick(&tower, &g)?;
        Ok((tower, root))
    }

    pub(crate) fn check_level(&self, level: usize) -> Result<()> {
        if level > self.depth() {
            return Err(Error::LevelOutOfRange {
                level,
                max: self.depth(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_element(&self, x: &TowerElement) -> Result<()> {
        self.check_level(x.level)
    }

    fn check_top(&self, x: &TowerElement) -> Result<()> {
        if x.level != self.depth() {
            return Err(Error::LevelMismatch {
                left: x.level,
                right: self.depth(),
            });
        }
        Ok(())
    }
}
