//! Homogeneous Hopf ideals given by generators, and their annihilators in
//! the character group and in the Lie algebra of infinitesimal characters.
//!
//! Only generators are evaluated. For a character `φ(h₁gh₂) = φ(h₁)φ(g)φ(h₂)`,
//! and for an infinitesimal character `φ(hg) = φ(h)ε(g) + ε(h)φ(g) = ε(h)φ(g)`
//! because `ε(g) = 0`; either way vanishing on the generators is equivalent
//! to vanishing on the whole ideal.

use std::sync::Arc;

use rand::Rng;

use crate::characters::{
    is_character, is_infinitesimal, InfinitesimalCharacter, TreeValues,
};
use crate::error::{Error, Result};
use crate::functional::TruncatedFunctional;
use crate::hopf::{BasisElement, GradedVector, HopfKind, HopfStructure};
use crate::linalg;
use crate::ring::{Rational, Ring};
use crate::sample::{random_combination, random_rational};
use crate::trees::{butcher_product, enumerate_trees, Forest, RootedTree};

/// A two-sided ideal generated by finitely many homogeneous elements of
/// positive degree.
#[derive(Debug, Clone, PartialEq)]
pub struct HopfIdealSpec {
    kind: HopfKind,
    generators: Vec<GradedVector>,
    max_degree: usize,
}

impl HopfIdealSpec {
    pub fn new(kind: HopfKind, generators: Vec<GradedVector>) -> Result<Self> {
        let mut max_degree = 0;
        for (i, g) in generators.iter().enumerate() {
            if g.is_zero() {
                return Err(Error::Domain(format!("generator {i} is zero")));
            }
            let degree = g
                .homogeneous_degree()
                .ok_or_else(|| Error::Domain(format!("generator {i} (`{g}`) is not homogeneous")))?;
            // positive degree means the counit kills the generator
            if degree == 0 {
                return Err(Error::Domain(format!(
                    "generator {i} (`{g}`) has degree 0, so ε does not vanish on it"
                )));
            }
            for (b, _) in g.terms() {
                let fits = match (kind, b) {
                    (HopfKind::ConnesKreimer, BasisElement::Forest(_)) => true,
                    (HopfKind::Tensor(d), BasisElement::Word(w)) => {
                        w.letters().iter().all(|&l| (l as usize) < d)
                    }
                    _ => false,
                };
                if !fits {
                    return Err(Error::Incompatible(format!("`{b}` is not a basis element of {kind}")));
                }
            }
            max_degree = max_degree.max(degree);
        }
        Ok(HopfIdealSpec {
            kind,
            generators,
            max_degree,
        })
    }

    pub fn kind(&self) -> HopfKind {
        self.kind
    }

    pub fn generators(&self) -> &[GradedVector] {
        &self.generators
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }
}

/// A generator on which the functional does not vanish.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorViolation<R: Ring> {
    pub index: usize,
    pub generator: GradedVector,
    pub value: R,
}

/// Checks `φ(g) = 0` for every generator of degree ≤ the truncation of `φ`.
/// `φ` must be a [`Character`](crate::characters::Character) or an
/// [`InfinitesimalCharacter`]; use [`annihilates_functional`] for raw
/// functionals.
pub fn annihilates<R: Ring, M: AsRef<TruncatedFunctional<R>>>(
    phi: &M,
    ideal: &HopfIdealSpec,
) -> Result<Option<GeneratorViolation<R>>> {
    let phi = phi.as_ref();
    if phi.hopf().kind() != ideal.kind {
        return Err(Error::Incompatible(format!(
            "functional on {}, ideal in {}",
            phi.hopf().kind(),
            ideal.kind
        )));
    }
    for (index, g) in ideal.generators.iter().enumerate() {
        if g.max_degree().unwrap_or(0) > phi.truncation() {
            continue;
        }
        let value = phi.evaluate(g)?;
        if !value.is_zero() {
            return Ok(Some(GeneratorViolation {
                index,
                generator: g.clone(),
                value,
            }));
        }
    }
    Ok(None)
}

/// As [`annihilates`], after checking that `φ` is a character or an
/// infinitesimal character.
pub fn annihilates_functional<R: Ring>(
    phi: &TruncatedFunctional<R>,
    ideal: &HopfIdealSpec,
) -> Result<Option<GeneratorViolation<R>>> {
    if !is_character(phi) && !is_infinitesimal(phi) {
        return Err(Error::Domain(
            "annihilator membership is only defined for characters and infinitesimal characters"
                .into(),
        ));
    }
    annihilates(phi, ideal)
}

/// Unordered pairs `(τ, υ)` of trees with `|τ| + |υ| ≤ n`, grouped by total
/// order and then by canonical order of the pair.
pub fn symplectic_pairs(n: usize) -> Result<Vec<(RootedTree, RootedTree)>> {
    let trees: Vec<RootedTree> = enumerate_trees(n.saturating_sub(1))?.into_iter().flatten().collect();
    let mut pairs = Vec::new();
    for total in 2..=n {
        for (i, a) in trees.iter().enumerate() {
            for b in &trees[i..] {
                if a.order() + b.order() == total {
                    pairs.push((a.clone(), b.clone()));
                }
            }
        }
    }
    Ok(pairs)
}

/// `τ∘υ + υ∘τ − τυ`.
pub fn symplectic_generator(tau: &RootedTree, upsilon: &RootedTree) -> GradedVector {
    let mut g = GradedVector::new();
    g.add_int_term(butcher_product(tau, upsilon).into(), 1);
    g.add_int_term(butcher_product(upsilon, tau).into(), 1);
    g.add_int_term(Forest::from_trees(vec![tau.clone(), upsilon.clone()]).into(), -1);
    g
}

/// Generators of the ideal whose annihilator is the group of symplectic
/// tree maps, one per unordered pair of trees with total order ≤ `n`.
pub fn symplectic_generators(n: usize) -> Result<HopfIdealSpec> {
    if n < 2 {
        return Err(Error::Domain(format!(
            "symplectic generators need truncation ≥ 2, got {n}"
        )));
    }
    let generators = symplectic_pairs(n)?
        .iter()
        .map(|(a, b)| symplectic_generator(a, b))
        .collect();
    HopfIdealSpec::new(HopfKind::ConnesKreimer, generators)
}

/// First pair with `a(τ∘υ) + a(υ∘τ) ≠ a(τ)a(υ)`.
pub fn symplectic_violation<R: Ring>(a: &TreeValues<R>) -> Result<Option<(RootedTree, RootedTree)>> {
    for (tau, ups) in symplectic_pairs(a.truncation())? {
        let lhs = a
            .get(&butcher_product(&tau, &ups))
            .add(&a.get(&butcher_product(&ups, &tau)));
        if lhs != a.get(&tau).mul(&a.get(&ups)) {
            return Ok(Some((tau, ups)));
        }
    }
    Ok(None)
}

pub fn is_symplectic<R: Ring>(a: &TreeValues<R>) -> Result<bool> {
    Ok(symplectic_violation(a)?.is_none())
}

/// Random symplectic tree map, solved degree by degree: at order `k` the
/// conditions are linear in the order-`k` values with right-hand sides fixed
/// by lower orders.
pub fn random_symplectic_tree_values<G: Rng + ?Sized>(
    truncation: usize,
    rng: &mut G,
) -> Result<TreeValues<Rational>> {
    let by_order = enumerate_trees(truncation)?;
    let pairs = symplectic_pairs(truncation)?;
    let mut a = TreeValues::<Rational>::new(&(), truncation);
    for (k, trees) in by_order.iter().enumerate() {
        let k = k + 1;
        let position = |t: &RootedTree| trees.iter().position(|x| x == t).unwrap();
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for (tau, ups) in pairs.iter().filter(|(x, y)| x.order() + y.order() == k) {
            let mut row = vec![num_rational::BigRational::from_integer(0.into()); trees.len()];
            row[position(&butcher_product(tau, ups))] += num_rational::BigRational::from_integer(1.into());
            row[position(&butcher_product(ups, tau))] += num_rational::BigRational::from_integer(1.into());
            rows.push(row);
            rhs.push(a.get(tau).mul(&a.get(ups)).0);
        }
        let values = if rows.is_empty() {
            trees.iter().map(|_| random_rational(rng)).collect()
        } else {
            let (particular, kernel) = linalg::solve(&rows, &rhs, trees.len()).ok_or_else(|| {
                Error::Internal(format!("symplectic conditions at order {k} are inconsistent"))
            })?;
            let free = random_combination(&kernel, trees.len(), rng);
            particular.iter().zip(free).map(|(p, f)| p + f).collect::<Vec<_>>()
        };
        for (t, v) in trees.iter().zip(values) {
            a.set(t.clone(), Rational(v))?;
        }
    }
    Ok(a)
}

/// Random infinitesimal character annihilating the symplectic ideal:
/// supported on trees with `φ(τ∘υ) + φ(υ∘τ) = 0`.
pub fn random_symplectic_infinitesimal<G: Rng + ?Sized>(
    hopf: &Arc<HopfStructure>,
    rng: &mut G,
) -> Result<InfinitesimalCharacter<Rational>> {
    let n = hopf.truncation();
    let by_order = enumerate_trees(n)?;
    let pairs = symplectic_pairs(n)?;
    let mut values = TreeValues::<Rational>::new(&(), n);
    for (k, trees) in by_order.iter().enumerate() {
        let k = k + 1;
        let position = |t: &RootedTree| trees.iter().position(|x| x == t).unwrap();
        let rows: Vec<_> = pairs
            .iter()
            .filter(|(x, y)| x.order() + y.order() == k)
            .map(|(tau, ups)| {
                let mut row = vec![num_rational::BigRational::from_integer(0.into()); trees.len()];
                row[position(&butcher_product(tau, ups))] += num_rational::BigRational::from_integer(1.into());
                row[position(&butcher_product(ups, tau))] += num_rational::BigRational::from_integer(1.into());
                row
            })
            .collect();
        let v = random_combination(&linalg::nullspace(&rows, trees.len()), trees.len(), rng);
        for (t, x) in trees.iter().zip(v) {
            values.set(t.clone(), Rational(x))?;
        }
    }
    Ok(InfinitesimalCharacter::from_generator_values(hopf, &(), |i| {
        values.get(hopf.element(i).as_forest().and_then(Forest::as_tree).unwrap())
    }))
}
