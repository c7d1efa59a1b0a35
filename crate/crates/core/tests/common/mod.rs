//! Seeded random towers and elements for the integration suites.

#![allow(dead_code)]

use num_rational::BigRational;
use num_traits::Zero;
use qtower::{Tower, TowerElement};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// n/d with |n| ≤ bound, 1 ≤ d ≤ bound.
pub fn small_rat(rng: &mut impl Rng, bound: i64) -> BigRational {
    BigRational::new(
        rng.gen_range(-bound..=bound).into(),
        rng.gen_range(1..=bound).into(),
    )
}

pub fn random_element(rng: &mut impl Rng, level: usize, bound: i64) -> TowerElement {
    let coords = (0..1usize << level).map(|_| small_rat(rng, bound)).collect();
    TowerElement::new(level, coords).unwrap()
}

pub fn random_nonzero(rng: &mut impl Rng, level: usize, bound: i64) -> TowerElement {
    loop {
        let x = random_element(rng, level, bound);
        if !x.is_zero() {
            return x;
        }
    }
}

/// A valid tower: each square is a random positive non-square of the level below.
/// Square coordinates are kept small so deep products stay cheap.
pub fn random_tower(rng: &mut impl Rng, depth: usize) -> Tower {
    let mut tower = Tower::rationals();
    while tower.depth() < depth {
        let level = tower.depth();
        let mut s = random_element(rng, level, 9);
        // sparse squares look more like hand-built towers
        if level > 0 && rng.gen_bool(0.5) {
            let keep = rng.gen_range(0..s.coords().len());
            let coords = s
                .coords()
                .iter()
                .enumerate()
                .map(|(i, c)| if i == 0 || i == keep { c.clone() } else { BigRational::zero() })
                .collect();
            s = TowerElement::new(level, coords).unwrap();
        }
        match tower.exact_sign(&s).unwrap() {
            0 => continue,
            -1 => s = tower.neg(&s),
            _ => {}
        }
        if let Ok(next) = tower.adjoin_sqrt(&s) {
            tower = next;
        }
    }
    assert!(tower.validate().is_valid());
    tower
}
