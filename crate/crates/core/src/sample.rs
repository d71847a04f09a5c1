//! Random elements with small rational entries, for property checks.
//!
//! Characters are sampled through their values on algebra generators and
//! extended multiplicatively, so every draw is a character without rejection.

use std::sync::Arc;

use num_rational::BigRational;
use rand::Rng;

use crate::characters::{char_from_generator_values, Character, InfinitesimalCharacter, TreeValues};
use crate::functional::TruncatedFunctional;
use crate::hopf::HopfStructure;
use crate::ring::{Rational, Ring, TruncatedSeries};
use crate::trees::enumerate_trees;

/// Numerator in `-4..=4`, denominator in `1..=3`.
pub fn random_rational<G: Rng + ?Sized>(rng: &mut G) -> BigRational {
    BigRational::new(rng.gen_range(-4i64..=4).into(), rng.gen_range(1i64..=3).into())
}

/// Rings that can draw random elements.
pub trait SampleRing: Ring {
    fn sample<G: Rng + ?Sized>(ctx: &Self::Context, rng: &mut G) -> Self;

    /// A random unit of the ring.
    fn sample_unit<G: Rng + ?Sized>(ctx: &Self::Context, rng: &mut G) -> Self {
        loop {
            let x = Self::sample(ctx, rng);
            if x.is_unit() {
                return x;
            }
        }
    }
}

impl SampleRing for Rational {
    fn sample<G: Rng + ?Sized>(_: &(), rng: &mut G) -> Self {
        Rational(random_rational(rng))
    }
}

impl SampleRing for TruncatedSeries {
    fn sample<G: Rng + ?Sized>(m: &usize, rng: &mut G) -> Self {
        TruncatedSeries::new(*m, (0..=*m).map(|_| random_rational(rng)).collect())
    }
}

/// Random values on every basis element, including the unit.
pub fn random_functional<R: SampleRing, G: Rng + ?Sized>(
    hopf: &Arc<HopfStructure>,
    ctx: &R::Context,
    rng: &mut G,
) -> TruncatedFunctional<R> {
    TruncatedFunctional::from_fn(hopf, ctx, |_, _| R::sample(ctx, rng))
}

/// Random element of the augmentation ideal (zero on the unit).
pub fn random_augmented<R: SampleRing, G: Rng + ?Sized>(
    hopf: &Arc<HopfStructure>,
    ctx: &R::Context,
    rng: &mut G,
) -> TruncatedFunctional<R> {
    let mut a = random_functional(hopf, ctx, rng);
    a.set(hopf.unit_index(), R::zero(ctx));
    a
}

/// Random element of `1_A + I_A`.
pub fn random_unipotent<R: SampleRing, G: Rng + ?Sized>(
    hopf: &Arc<HopfStructure>,
    ctx: &R::Context,
    rng: &mut G,
) -> TruncatedFunctional<R> {
    let mut a = random_functional(hopf, ctx, rng);
    a.set(hopf.unit_index(), R::one(ctx));
    a
}

/// Random functional whose unit value is a ring unit.
pub fn random_invertible<R: SampleRing, G: Rng + ?Sized>(
    hopf: &Arc<HopfStructure>,
    ctx: &R::Context,
    rng: &mut G,
) -> TruncatedFunctional<R> {
    let mut a = random_functional(hopf, ctx, rng);
    a.set(hopf.unit_index(), R::sample_unit(ctx, rng));
    a
}

pub fn random_character<R: SampleRing, G: Rng + ?Sized>(
    hopf: &Arc<HopfStructure>,
    ctx: &R::Context,
    rng: &mut G,
) -> Character<R> {
    char_from_generator_values(hopf, ctx, |_| R::sample(ctx, rng))
}

pub fn random_infinitesimal<R: SampleRing, G: Rng + ?Sized>(
    hopf: &Arc<HopfStructure>,
    ctx: &R::Context,
    rng: &mut G,
) -> InfinitesimalCharacter<R> {
    InfinitesimalCharacter::from_generator_values(hopf, ctx, |_| R::sample(ctx, rng))
}

pub fn random_tree_values<R: SampleRing, G: Rng + ?Sized>(
    ctx: &R::Context,
    truncation: usize,
    rng: &mut G,
) -> TreeValues<R> {
    let mut a = TreeValues::new(ctx, truncation);
    for tree in enumerate_trees(truncation)
        .expect("truncation within enumeration cap")
        .into_iter()
        .flatten()
    {
        a.set(tree, R::sample(ctx, rng)).expect("order within truncation");
    }
    a
}

/// Random combination of `basis` with small rational weights.
pub(crate) fn random_combination<G: Rng + ?Sized>(
    basis: &[Vec<BigRational>],
    len: usize,
    rng: &mut G,
) -> Vec<BigRational> {
    let mut v = vec![BigRational::from_integer(0.into()); len];
    for b in basis {
        let w = random_rational(rng);
        for (x, y) in v.iter_mut().zip(b) {
            *x += &w * y;
        }
    }
    v
}
