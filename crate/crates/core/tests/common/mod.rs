//! Brute-force oracles and random generators shared by the integration
//! suites. Nothing here calls the division or normalization routines under
//! test; the oracles use multiplication and enumeration only.

#![allow(dead_code)]

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use ufsg::thompson::enumerate_elements;
use ufsg::{Coefficient, GeneratorWord, SemigroupVector, ThompsonElement};

pub fn el(s: &str) -> ThompsonElement {
    s.parse().unwrap()
}

fn max_gen(x: &ThompsonElement) -> u32 {
    x.max_generator().unwrap_or(0)
}

/// Every `w` with `ind(w) = ind(v) - ind(u)` and generators `<= max_gen(v)`.
/// Rewriting never lowers a letter, so a witness can only use letters that
/// appear in `v` at an equal or larger value.
fn witness_candidates(u: &ThompsonElement, v: &ThompsonElement) -> Vec<ThompsonElement> {
    let Some(d) = v.ind().checked_sub(u.ind()) else {
        return Vec::new();
    };
    enumerate_elements(d as u32, max_gen(v))
        .into_iter()
        .filter(|w| w.ind() == d)
        .collect()
}

pub fn brute_left_divide(u: &ThompsonElement, v: &ThompsonElement) -> Option<ThompsonElement> {
    witness_candidates(u, v)
        .into_iter()
        .find(|w| &u.multiply(w) == v)
}

pub fn brute_right_divide(v: &ThompsonElement, u: &ThompsonElement) -> Option<ThompsonElement> {
    witness_candidates(u, v)
        .into_iter()
        .find(|w| &w.multiply(u) == v)
}

/// The total order written out clause by clause from the exponent vectors.
pub fn literal_order(u: &ThompsonElement, v: &ThompsonElement) -> Ordering {
    if u.ind() != v.ind() {
        return u.ind().cmp(&v.ind());
    }
    let top = max_gen(u).max(max_gen(v));
    for i in 0..=top {
        let (a, b) = (u.ind_at(i), v.ind_at(i));
        if a != b {
            return if a > b { Ordering::Less } else { Ordering::Greater };
        }
    }
    Ordering::Equal
}

pub fn random_word<R: Rng>(rng: &mut R, max_len: usize, max_letter: u32) -> GeneratorWord {
    let len = rng.gen_range(0..=max_len);
    GeneratorWord::new((0..len).map(|_| rng.gen_range(0..=max_letter)).collect())
}

pub fn random_rational<R: Rng>(rng: &mut R) -> BigRational {
    BigRational::new(
        BigInt::from(rng.gen_range(-5i64..=5)),
        BigInt::from(rng.gen_range(1i64..=4)),
    )
}

pub fn random_coefficient<R: Rng>(rng: &mut R) -> Coefficient {
    loop {
        let im = if rng.gen_bool(0.5) {
            random_rational(rng)
        } else {
            BigRational::from_integer(BigInt::from(0))
        };
        let c = Coefficient::new(random_rational(rng), im);
        if c != Coefficient::default() {
            return c;
        }
    }
}

/// A nonzero vector with between 1 and `max_support` terms drawn from `pool`.
pub fn random_vector<R: Rng>(
    rng: &mut R,
    pool: &[ThompsonElement],
    max_support: usize,
) -> SemigroupVector<ThompsonElement> {
    loop {
        let k = rng.gen_range(1..=max_support);
        let v = SemigroupVector::from_terms(
            (0..k).map(|_| (pool[rng.gen_range(0..pool.len())].clone(), random_coefficient(rng))),
        );
        if !v.is_zero() {
            return v;
        }
    }
}

/// A vector supported on `{x0^n : n <= max_pow}`.
pub fn random_cone_vector<R: Rng>(rng: &mut R, max_pow: u32) -> SemigroupVector<ThompsonElement> {
    let mut terms = Vec::new();
    for n in 0..=max_pow {
        if rng.gen_bool(0.6) {
            terms.push((ThompsonElement::generator_power(0, n), random_coefficient(rng)));
        }
    }
    SemigroupVector::from_terms(terms)
}
