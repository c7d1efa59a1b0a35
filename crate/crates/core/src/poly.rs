//! Dense polynomials, constant term first, over ℚ or over one tower level.
//!
//! The cubic machinery here turns "no rational root" into "no root in any
//! quadratic extension tower": a root in level k has its conjugate as a
//! second root, which pins the third root one level lower, and repeating
//! that reaches ℚ.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactnum::{denominator_lcm, divisors, format_rational};
use crate::tower::{Tower, TowerElement};

/// Coefficients `c[i]` of `xⁱ`. Stored length may include leading zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

pub type RatPoly = Polynomial<BigRational>;
pub type TowerPoly = Polynomial<TowerElement>;

impl<T> Polynomial<T> {
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }
}

impl RatPoly {
    pub fn new(coeffs: Vec<BigRational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Domain("a polynomial needs at least one coefficient".into()));
        }
        Ok(Polynomial { coeffs })
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Polynomial {
            coeffs: coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        }
    }

    /// Degree ignoring leading zeros; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// Horner evaluation at a rational.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// Horner evaluation at a tower element, embedding the coefficients at its level.
    pub fn eval_in(&self, tower: &Tower, x: &TowerElement) -> Result<TowerElement> {
        self.to_level(x.level()).eval(tower, x)
    }

    pub fn to_level(&self, level: usize) -> TowerPoly {
        Polynomial {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| TowerElement::rational(level, c.clone()))
                .collect(),
        }
    }

    fn require_cubic(&self) -> Result<()> {
        match self.degree() {
            Some(3) => Ok(()),
            Some(d) => Err(Error::NotCubic(d.to_string())),
            None => Err(Error::NotCubic("-∞ (zero polynomial)".into())),
        }
    }
}

impl TowerPoly {
    /// All coefficients must sit at the same level.
    pub fn new(coeffs: Vec<TowerElement>) -> Result<Self> {
        let Some(first) = coeffs.first() else {
            return Err(Error::Domain("a polynomial needs at least one coefficient".into()));
        };
        let level = first.level();
        if let Some(bad) = coeffs.iter().find(|c| c.level() != level) {
            return Err(Error::LevelMismatch {
                left: level,
                right: bad.level(),
            });
        }
        Ok(Polynomial { coeffs })
    }

    pub fn level(&self) -> usize {
        self.coeffs[0].level()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// Horner evaluation; coefficients are lifted to the level of `x`.
    pub fn eval(&self, tower: &Tower, x: &TowerElement) -> Result<TowerElement> {
        tower.check_level(x.level())?;
        if x.level() < self.level() {
            return Err(Error::LevelMismatch {
                left: self.level(),
                right: x.level(),
            });
        }
        let mut acc = TowerElement::zero(x.level());
        for c in self.coeffs.iter().rev() {
            acc = tower.add(&tower.mul(&acc, x)?, &c.lift_to(x.level())?)?;
        }
        Ok(acc)
    }

    /// Given a root `x0` at level k of a polynomial whose coefficients lie
    /// below k, returns the conjugate root and checks that it is a root.
    pub fn conjugate_root(&self, tower: &Tower, x0: &TowerElement) -> Result<TowerElement> {
        if x0.level() == 0 || self.level() >= x0.level() {
            return Err(Error::Domain(format!(
                "conjugate root needs coefficients below the root's level {}",
                x0.level()
            )));
        }
        let value = self.eval(tower, x0)?;
        if !value.is_zero() {
            return Err(Error::NotARoot {
                value: x0.to_string(),
                residual: value.to_string(),
            });
        }
        let conj = tower.conjugate(x0)?;
        if !self.eval(tower, &conj)?.is_zero() {
            return Err(Error::InvalidTower(
                "conjugate of a root failed to be a root".into(),
            ));
        }
        Ok(conj)
    }
}

/// Walks a root of a rational cubic from level k down to ℚ.
///
/// At each level either the root already lies in the subfield, or the
/// conjugate is a second root and the third root
/// C = −a₂/a₃ − (x + x̄) = −a₂/a₃ − 2·subfield_part(x) lies one level down.
pub fn descend_cubic_root(p: &RatPoly, tower: &Tower, x0: &TowerElement) -> Result<BigRational> {
    p.require_cubic()?;
    tower.check_level(x0.level())?;
    let value = p.eval_in(tower, x0)?;
    if !value.is_zero() {
        return Err(Error::NotARoot {
            value: x0.to_string(),
            residual: value.to_string(),
        });
    }
    let c = p.coeffs();
    let shift = -(&c[2] / &c[3]);
    let mut x = x0.clone();
    while x.level() > 0 {
        let a = x.subfield_part()?;
        x = if x.extension_part()?.is_zero() {
            a
        } else {
            let level = a.level();
            let two_a = tower.add(&a, &a)?;
            tower.sub(&TowerElement::rational(level, shift.clone()), &two_a)?
        };
        if !p.eval_in(tower, &x)?.is_zero() {
            return Err(Error::InvalidTower(format!(
                "descent lost the root at level {}",
                x.level()
            )));
        }
    }
    Ok(x.as_rational().cloned().expect("level 0"))
}

/// Integer coefficients A₀..A₃ of `p` scaled by the lcm of its denominators.
fn integer_coeffs(p: &RatPoly) -> Vec<BigInt> {
    let scale = BigRational::from_integer(denominator_lcm(p.coeffs()));
    p.coeffs()
        .iter()
        .map(|c| (c * &scale).to_integer())
        .collect()
}

/// Rational Root Theorem candidates ±p/q, p | A₀, q | A₃, ascending.
/// A zero constant term yields the single candidate 0.
pub fn rrt_candidates(p: &RatPoly) -> Result<Vec<BigRational>> {
    p.require_cubic()?;
    let a = integer_coeffs(p);
    if a[0].is_zero() {
        return Ok(vec![BigRational::zero()]);
    }
    let nums = divisors(a[0].magnitude())?;
    let dens = divisors(a[3].magnitude())?;
    let mut out = Vec::with_capacity(nums.len() * dens.len() * 2);
    for n in &nums {
        for d in &dens {
            let q = BigRational::new(BigInt::from(n.clone()), BigInt::from(d.clone()));
            out.push(-q.clone());
            out.push(q);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Every rational root of a cubic, ascending.
pub fn rational_roots_cubic(p: &RatPoly) -> Result<Vec<BigRational>> {
    Ok(rrt_candidates(p)?
        .into_iter()
        .filter(|r| p.eval(r).is_zero())
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    RationalRootFound(BigRational),
    NoRootInAnyQuadraticTower,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub outcome: Outcome,
    pub candidates_checked: Vec<BigRational>,
}

/// Decides whether a rational cubic can have a root in a quadratic tower.
///
/// A root in any tower descends to a rational root, so a cubic with no
/// rational root has no root in any tower. The smallest rational root is
/// reported when there are several.
pub fn constructible_root_verdict(p: &RatPoly) -> Result<Verdict> {
    let candidates = rrt_candidates(p)?;
    let root = candidates.iter().find(|r| p.eval(r).is_zero()).cloned();
    Ok(Verdict {
        outcome: match root {
            Some(r) => Outcome::RationalRootFound(r),
            None => Outcome::NoRootInAnyQuadraticTower,
        },
        candidates_checked: candidates,
    })
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(format_rational).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = self
            .candidates_checked
            .iter()
            .map(format_rational)
            .collect::<Vec<_>>()
            .join(", ");
        match &self.outcome {
            Outcome::NoRootInAnyQuadraticTower => write!(
                f,
                "no root in any quadratic extension tower; candidates checked: {list} (all nonzero)\n\
                 by: no rational root ⟹ no root in any quadratic extension tower"
            ),
            Outcome::RationalRootFound(r) => write!(
                f,
                "rational root {} found; candidates checked: {list}",
                format_rational(r)
            ),
        }
    }
}

impl Verdict {
    pub fn excludes_tower_roots(&self) -> bool {
        self.outcome == Outcome::NoRootInAnyQuadraticTower
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};
    use proptest::prelude::*;

    fn rats(v: &[(i64, i64)]) -> Vec<BigRational> {
        v.iter().map(|&(n, d)| rat(n, d)).collect()
    }

    fn q_sqrt2() -> Tower {
        Tower::from_squares(vec![vec![int(2)]]).unwrap()
    }

    fn t_elt(level: usize, v: &[(i64, i64)]) -> TowerElement {
        TowerElement::new(level, rats(v)).unwrap()
    }

    #[test]
    fn eval_examples() {
        let double_cube = RatPoly::from_ints(&[-2, 0, 0, 1]);
        assert_eq!(double_cube.eval(&int(2)), int(6));
        assert_eq!(double_cube.eval(&int(1)), int(-1));
        for c in [-2, -1, 1, 2] {
            assert!(!double_cube.eval(&int(c)).is_zero());
        }
    }

    #[test]
    fn eval_at_quadratic_root() {
        let t = q_sqrt2();
        let p = TowerPoly::new(vec![
            t_elt(1, &[(-1, 1), (0, 1)]),
            t_elt(1, &[(0, 1), (-1, 1)]),
            t_elt(1, &[(1, 1), (0, 1)]),
        ])
        .unwrap();
        let c = p.coeffs();
        let (t2, root) = t.adjoin_quadratic_root([&c[0], &c[1], &c[2]], true).unwrap();
        assert!(p.eval(&t2, &root).unwrap().is_zero());
        assert!(p.eval(&t, &root).is_err());
    }

    #[test]
    fn degree_ignores_leading_zeros() {
        assert_eq!(RatPoly::from_ints(&[1, 2, 0, 0]).degree(), Some(1));
        assert_eq!(RatPoly::from_ints(&[0, 0]).degree(), None);
        assert!(RatPoly::new(vec![]).is_err());
        let p = RatPoly::from_ints(&[-2, 0, 0, 1, 0]);
        assert_eq!(rrt_candidates(&p).unwrap(), vec![int(-2), int(-1), int(1), int(2)]);
    }

    #[test]
    fn tower_poly_rejects_mixed_levels() {
        let e = TowerPoly::new(vec![t_elt(0, &[(1, 1)]), t_elt(1, &[(1, 1), (0, 1)])]);
        assert!(matches!(e, Err(Error::LevelMismatch { .. })));
    }

    #[test]
    fn conjugate_root_examples() {
        let t = q_sqrt2();
        let p = RatPoly::from_ints(&[-2, 0, 1]).to_level(0);
        let r = p.conjugate_root(&t, &t_elt(1, &[(0, 1), (1, 1)])).unwrap();
        assert_eq!(r, t_elt(1, &[(0, 1), (-1, 1)]));

        // x² − √2·x − 1: the two completed-square branches are conjugate
        let q = TowerPoly::new(vec![
            t_elt(1, &[(-1, 1), (0, 1)]),
            t_elt(1, &[(0, 1), (-1, 1)]),
            t_elt(1, &[(1, 1), (0, 1)]),
        ])
        .unwrap();
        let c = q.coeffs();
        let (t2, plus) = t.adjoin_quadratic_root([&c[0], &c[1], &c[2]], true).unwrap();
        let (_, minus) = t.adjoin_quadratic_root([&c[0], &c[1], &c[2]], false).unwrap();
        assert_eq!(q.conjugate_root(&t2, &plus).unwrap(), minus);

        // a root already in the subfield is its own conjugate
        let cubic = RatPoly::from_ints(&[2, -2, -1, 1]).to_level(0);
        let one = t_elt(1, &[(1, 1), (0, 1)]);
        assert_eq!(cubic.conjugate_root(&t, &one).unwrap(), one);

        let err = p.conjugate_root(&t, &t_elt(1, &[(1, 1), (1, 1)])).unwrap_err();
        assert_eq!(err.name(), "NotARoot");
    }

    #[test]
    fn descent_examples() {
        let t = q_sqrt2();
        let p = RatPoly::from_ints(&[2, -2, -1, 1]);
        let sqrt2 = t_elt(1, &[(0, 1), (1, 1)]);
        assert_eq!(descend_cubic_root(&p, &t, &sqrt2).unwrap(), int(1));
        let one = t_elt(1, &[(1, 1), (0, 1)]);
        assert_eq!(descend_cubic_root(&p, &t, &one).unwrap(), int(1));
        let err = descend_cubic_root(&p, &t, &t_elt(1, &[(0, 1), (2, 1)])).unwrap_err();
        assert_eq!(err.name(), "NotARoot");
        assert_eq!(
            descend_cubic_root(&RatPoly::from_ints(&[-2, 0, 1]), &t, &sqrt2)
                .unwrap_err()
                .name(),
            "NotCubic"
        );
    }

    #[test]
    fn descent_across_two_levels() {
        // (x − 3/2)(x² − 3) = x³ − 3/2·x² − 3x + 9/2, root g₂ = √3 in ℚ(√2)(√3)
        let t = Tower::from_squares(vec![vec![int(2)], vec![int(3), int(0)]]).unwrap();
        let p = RatPoly::new(rats(&[(9, 2), (-3, 1), (-3, 2), (1, 1)])).unwrap();
        let g2 = t.generator(2).unwrap();
        assert_eq!(descend_cubic_root(&p, &t, &g2).unwrap(), rat(3, 2));
        // √2·√3 is a root of x² − 6: (x − 1)(x² − 6)
        let p = RatPoly::from_ints(&[6, -6, -1, 1]);
        let mut c = vec![int(0); 4];
        c[3] = int(1);
        let x0 = TowerElement::new(2, c).unwrap();
        assert_eq!(descend_cubic_root(&p, &t, &x0).unwrap(), int(1));
    }

    #[test]
    fn rrt_examples() {
        assert_eq!(
            rrt_candidates(&RatPoly::from_ints(&[-2, 0, 0, 1])).unwrap(),
            vec![int(-2), int(-1), int(1), int(2)]
        );
        assert_eq!(
            rrt_candidates(&RatPoly::from_ints(&[-1, -6, 0, 8])).unwrap(),
            rats(&[(-1, 1), (-1, 2), (-1, 4), (-1, 8), (1, 8), (1, 4), (1, 2), (1, 1)])
        );
        assert_eq!(rrt_candidates(&RatPoly::from_ints(&[0, 0, 0, 1])).unwrap(), vec![int(0)]);
        assert!(rrt_candidates(&RatPoly::from_ints(&[1, 0, 1])).is_err());
        // denominators are cleared first: x³/2 − 1/3 → 3x³ − 2
        let p = RatPoly::new(rats(&[(-1, 3), (0, 1), (0, 1), (1, 2)])).unwrap();
        assert_eq!(
            rrt_candidates(&p).unwrap(),
            rats(&[(-2, 1), (-1, 1), (-2, 3), (-1, 3), (1, 3), (2, 3), (1, 1), (2, 1)])
        );
    }

    #[test]
    fn roots_and_verdicts() {
        let dc = RatPoly::from_ints(&[-2, 0, 0, 1]);
        let tri = RatPoly::from_ints(&[-1, -6, 0, 8]);
        let fac = RatPoly::from_ints(&[2, -2, -1, 1]);
        assert!(rational_roots_cubic(&dc).unwrap().is_empty());
        assert!(rational_roots_cubic(&tri).unwrap().is_empty());
        assert_eq!(rational_roots_cubic(&fac).unwrap(), vec![int(1)]);

        let v = constructible_root_verdict(&dc).unwrap();
        assert_eq!(v.outcome, Outcome::NoRootInAnyQuadraticTower);
        assert!(v.candidates_checked.iter().all(|r| !dc.eval(r).is_zero()));
        assert!(v.to_string().starts_with(
            "no root in any quadratic extension tower; candidates checked: -2, -1, 1, 2 (all nonzero)"
        ));
        assert!(constructible_root_verdict(&tri).unwrap().excludes_tower_roots());
        assert_eq!(
            constructible_root_verdict(&fac).unwrap().outcome,
            Outcome::RationalRootFound(int(1))
        );
        // (x + 2)(x − 1)(x − 3): smallest root wins
        let three = RatPoly::from_ints(&[6, -5, -2, 1]);
        assert_eq!(
            constructible_root_verdict(&three).unwrap().outcome,
            Outcome::RationalRootFound(int(-2))
        );
        assert_eq!(
            constructible_root_verdict(&RatPoly::from_ints(&[0, -1, 0, 1]))
                .unwrap()
                .outcome,
            Outcome::RationalRootFound(int(0))
        );
    }

    fn naive_eval(p: &RatPoly, x: &BigRational) -> BigRational {
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| c * num_traits::pow(x.clone(), i))
            .sum()
    }

    proptest! {
        #[test]
        fn horner_matches_power_sum(
            coeffs in proptest::collection::vec((-50i64..50, 1i64..20), 1..7),
            x in (-30i64..30, 1i64..10),
        ) {
            let p = RatPoly::new(rats(&coeffs)).unwrap();
            let x = rat(x.0, x.1);
            prop_assert_eq!(p.eval(&x), naive_eval(&p, &x));
        }

        #[test]
        fn planted_root_is_found(
            num in -30i64..30, den in 1i64..12, lead in 1i64..6,
            b in -20i64..20, c in -20i64..20,
        ) {
            let r = rat(num, den);
            let (p_, q_) = (r.numer().clone(), r.denom().clone());
            let q_i: i64 = q_.try_into().unwrap();
            let p_i: i64 = p_.try_into().unwrap();
            // lead·(q x − p)(x² + b x + c)
            let coeffs = [
                -lead * p_i * c,
                lead * (q_i * c - p_i * b),
                lead * (q_i * b - p_i),
                lead * q_i,
            ];
            let poly = RatPoly::from_ints(&coeffs);
            prop_assert!(poly.eval(&r).is_zero());
            // a zero constant term reports only the root 0
            prop_assume!(coeffs[0] != 0);
            prop_assert!(rrt_candidates(&poly).unwrap().contains(&r));
            prop_assert!(rational_roots_cubic(&poly).unwrap().contains(&r));
        }
    }
}
