//! The character group `Char(H,B)` and its Lie algebra of infinitesimal
//! characters, at a finite truncation.
//!
//! Membership is decided exactly: a functional is a character iff it sends
//! `1_H` to `1_B` and `φ(b₁b₂) = φ(b₁)φ(b₂)` for all basis pairs of total
//! degree ≤ N; infinitesimal characters instead satisfy
//! `φ(b₁b₂) = φ(b₁)ε(b₂) + ε(b₁)φ(b₂)`. By bilinearity these finite checks
//! are complete at the truncation.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::funcalc;
use crate::functional::TruncatedFunctional;
use crate::hopf::{BasisElement, HopfKind, HopfStructure, Word};
use crate::ring::Ring;
use crate::trees::{edge_partitions, enumerate_trees, ordered_subtrees, Forest, RootedTree};

/// First witness that a membership predicate fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Wrong value on `1_H`.
    Unit { value: String },
    /// The product rule fails on `left · right`.
    Pair { left: BasisElement, right: BasisElement },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Unit { value } => write!(f, "value {value} on the unit"),
            Violation::Pair { left, right } => write!(f, "product rule fails on ({left}) · ({right})"),
        }
    }
}

/// Walks the basis pairs `(i, j)` of positive degrees with `|i|+|j| ≤ N` and
/// returns the first pair where `ok(i, j, ij)` fails.
fn first_bad_pair<R: Ring>(
    phi: &TruncatedFunctional<R>,
    ok: impl Fn(usize, usize, usize) -> bool,
) -> Option<Violation> {
    let h = phi.hopf();
    let n = h.truncation();
    let commutative = h.kind() == HopfKind::ConnesKreimer;
    for di in 1..n {
        for i in h.degree_range(di) {
            for dj in 1..=n - di {
                for j in h.degree_range(dj) {
                    if commutative && j < i {
                        continue;
                    }
                    let k = h.product(i, j).expect("degree checked");
                    if !ok(i, j, k) {
                        return Some(Violation::Pair {
                            left: h.element(i).clone(),
                            right: h.element(j).clone(),
                        });
                    }
                }
            }
        }
    }
    None
}

pub fn check_character<R: Ring>(phi: &TruncatedFunctional<R>) -> Result<(), Violation> {
    let one = R::one(phi.context());
    if phi.degree_zero_value() != &one {
        return Err(Violation::Unit {
            value: phi.degree_zero_value().to_string(),
        });
    }
    match first_bad_pair(phi, |i, j, k| phi.value(k) == &phi.value(i).mul(phi.value(j))) {
        Some(v) => Err(v),
        None => Ok(()),
    }
}

pub fn is_character<R: Ring>(phi: &TruncatedFunctional<R>) -> bool {
    check_character(phi).is_ok()
}

/// For positive-degree `b₁, b₂` the rule reduces to `φ(b₁b₂) = 0`.
pub fn check_infinitesimal<R: Ring>(phi: &TruncatedFunctional<R>) -> Result<(), Violation> {
    if !phi.degree_zero_value().is_zero() {
        return Err(Violation::Unit {
            value: phi.degree_zero_value().to_string(),
        });
    }
    match first_bad_pair(phi, |_, _, k| phi.value(k).is_zero()) {
        Some(v) => Err(v),
        None => Ok(()),
    }
}

pub fn is_infinitesimal<R: Ring>(phi: &TruncatedFunctional<R>) -> bool {
    check_infinitesimal(phi).is_ok()
}

/// A functional known to satisfy the character predicate.
#[derive(Clone, PartialEq, Debug)]
pub struct Character<R: Ring>(TruncatedFunctional<R>);

/// A functional known to satisfy the infinitesimal-character predicate.
#[derive(Clone, PartialEq, Debug)]
pub struct InfinitesimalCharacter<R: Ring>(TruncatedFunctional<R>);

impl<R: Ring> Character<R> {
    pub fn new(phi: TruncatedFunctional<R>) -> Result<Self> {
        check_character(&phi).map_err(|v| Error::Domain(format!("not a character: {v}")))?;
        Ok(Character(phi))
    }

    /// Wraps a functional that is a character by construction.
    fn trusted(phi: TruncatedFunctional<R>) -> Self {
        debug_assert!(is_character(&phi), "closure violated: {:?}", check_character(&phi));
        Character(phi)
    }

    pub fn unit(hopf: &Arc<HopfStructure>, ctx: &R::Context) -> Self {
        Character(TruncatedFunctional::unit(hopf, ctx))
    }

    pub fn functional(&self) -> &TruncatedFunctional<R> {
        &self.0
    }

    pub fn into_functional(self) -> TruncatedFunctional<R> {
        self.0
    }

    pub fn restrict(&self, target: &Arc<HopfStructure>) -> Result<Self> {
        Ok(Character(self.0.restrict(target)?))
    }
}

impl<R: Ring> InfinitesimalCharacter<R> {
    pub fn new(phi: TruncatedFunctional<R>) -> Result<Self> {
        check_infinitesimal(&phi)
            .map_err(|v| Error::Domain(format!("not an infinitesimal character: {v}")))?;
        Ok(InfinitesimalCharacter(phi))
    }

    fn trusted(phi: TruncatedFunctional<R>) -> Self {
        debug_assert!(is_infinitesimal(&phi), "closure violated: {:?}", check_infinitesimal(&phi));
        InfinitesimalCharacter(phi)
    }

    pub fn zero(hopf: &Arc<HopfStructure>, ctx: &R::Context) -> Self {
        InfinitesimalCharacter(TruncatedFunctional::zero(hopf, ctx))
    }

    /// The infinitesimal character with the given values on the algebra
    /// generators (single trees or single letters) and zero elsewhere.
    pub fn from_generator_values(
        hopf: &Arc<HopfStructure>,
        ctx: &R::Context,
        mut value: impl FnMut(usize) -> R,
    ) -> Self {
        InfinitesimalCharacter(TruncatedFunctional::from_fn(hopf, ctx, |i, _| {
            if hopf.is_generator(i) {
                value(i)
            } else {
                R::zero(ctx)
            }
        }))
    }

    pub fn functional(&self) -> &TruncatedFunctional<R> {
        &self.0
    }

    pub fn into_functional(self) -> TruncatedFunctional<R> {
        self.0
    }

    /// The infinitesimal characters form a linear subspace.
    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(InfinitesimalCharacter(self.0.add(&other.0)?))
    }

    pub fn scale(&self, k: &R) -> Self {
        InfinitesimalCharacter(self.0.scale(k))
    }

    pub fn restrict(&self, target: &Arc<HopfStructure>) -> Result<Self> {
        Ok(InfinitesimalCharacter(self.0.restrict(target)?))
    }
}

impl<R: Ring> AsRef<TruncatedFunctional<R>> for Character<R> {
    fn as_ref(&self) -> &TruncatedFunctional<R> {
        &self.0
    }
}

impl<R: Ring> AsRef<TruncatedFunctional<R>> for InfinitesimalCharacter<R> {
    fn as_ref(&self) -> &TruncatedFunctional<R> {
        &self.0
    }
}

/// The unique character with the given values on the algebra generators:
/// `φ(g₁⋯g_k) = φ(g₁)⋯φ(g_k)`.
pub fn char_from_generator_values<R: Ring>(
    hopf: &Arc<HopfStructure>,
    ctx: &R::Context,
    mut value: impl FnMut(usize) -> R,
) -> Character<R> {
    let generators: BTreeMap<usize, R> = (0..hopf.dimension())
        .filter(|&i| hopf.is_generator(i))
        .map(|i| (i, value(i)))
        .collect();
    let phi = TruncatedFunctional::from_fn(hopf, ctx, |i, _| {
        hopf.factors(i)
            .iter()
            .fold(R::one(ctx), |acc, g| acc.mul(&generators[g]))
    });
    Character(phi)
}

pub fn char_mul<R: Ring>(phi: &Character<R>, psi: &Character<R>) -> Result<Character<R>> {
    Ok(Character::trusted(phi.0.convolve(&psi.0)?))
}

/// Group inverse `φ ∘ S`.
pub fn char_inv<R: Ring>(phi: &Character<R>) -> Character<R> {
    Character::trusted(phi.0.precompose_antipode())
}

pub fn char_exp<R: Ring>(phi: &InfinitesimalCharacter<R>) -> Result<Character<R>> {
    Ok(Character::trusted(funcalc::exp(&phi.0)?))
}

pub fn char_log<R: Ring>(psi: &Character<R>) -> Result<InfinitesimalCharacter<R>> {
    Ok(InfinitesimalCharacter::trusted(funcalc::log(&psi.0)?))
}

/// Commutator `φ⋆ψ − ψ⋆φ`.
pub fn lie_bracket<R: Ring>(
    phi: &InfinitesimalCharacter<R>,
    psi: &InfinitesimalCharacter<R>,
) -> Result<InfinitesimalCharacter<R>> {
    let c = phi.0.convolve(&psi.0)?.sub(&psi.0.convolve(&phi.0)?)?;
    Ok(InfinitesimalCharacter::trusted(c))
}

/// A Butcher-group element: values on the rooted trees of order ≤ N, with
/// the empty tree implicitly sent to 1. Absent trees have value zero.
#[derive(Clone, PartialEq, Debug)]
pub struct TreeValues<R: Ring> {
    ctx: R::Context,
    truncation: usize,
    values: BTreeMap<RootedTree, R>,
}

impl<R: Ring> TreeValues<R> {
    /// The identity tree map (zero on every tree).
    pub fn new(ctx: &R::Context, truncation: usize) -> Self {
        TreeValues {
            ctx: ctx.clone(),
            truncation,
            values: BTreeMap::new(),
        }
    }

    pub fn context(&self) -> &R::Context {
        &self.ctx
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn set(&mut self, tree: RootedTree, value: R) -> Result<()> {
        if tree.order() > self.truncation {
            return Err(Error::TruncationOverflow {
                degree: tree.order(),
                truncation: self.truncation,
            });
        }
        if value.is_zero() {
            self.values.remove(&tree);
        } else {
            self.values.insert(tree, value);
        }
        Ok(())
    }

    pub fn get(&self, tree: &RootedTree) -> R {
        self.values
            .get(tree)
            .cloned()
            .unwrap_or_else(|| R::zero(&self.ctx))
    }

    /// `a(θ₁)⋯a(θ_k)` for the forest `θ₁⋯θ_k`; 1 on the empty forest.
    pub fn on_forest(&self, forest: &Forest) -> R {
        forest
            .trees()
            .iter()
            .fold(R::one(&self.ctx), |acc, t| acc.mul(&self.get(t)))
    }

    /// Nonzero entries in canonical tree order.
    pub fn iter(&self) -> impl Iterator<Item = (&RootedTree, &R)> {
        self.values.iter()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.truncation != other.truncation || self.ctx != other.ctx {
            return Err(Error::Incompatible(format!(
                "tree maps truncated at {} and {}",
                self.truncation, other.truncation
            )));
        }
        Ok(())
    }
}

fn require_ck(hopf: &HopfStructure) -> Result<()> {
    if hopf.kind() != HopfKind::ConnesKreimer {
        return Err(Error::Incompatible(format!(
            "tree maps live on ck, not {}",
            hopf.kind()
        )));
    }
    Ok(())
}

/// `Φ⁻¹(a)`: the character with `φ(τ) = a(τ)` on trees, extended
/// multiplicatively to forests.
pub fn char_from_tree_values<R: Ring>(
    hopf: &Arc<HopfStructure>,
    a: &TreeValues<R>,
) -> Result<Character<R>> {
    require_ck(hopf)?;
    if a.truncation != hopf.truncation() {
        return Err(Error::Incompatible(format!(
            "tree map truncated at {}, structure at {}",
            a.truncation,
            hopf.truncation()
        )));
    }
    Ok(char_from_generator_values(hopf, &a.ctx, |i| {
        a.get(hopf.element(i).as_forest().and_then(Forest::as_tree).unwrap())
    }))
}

/// `Φ(φ)`: restriction of a functional on `ck` to single trees.
pub fn tree_values<R: Ring>(phi: &TruncatedFunctional<R>) -> Result<TreeValues<R>> {
    let hopf = phi.hopf();
    require_ck(hopf)?;
    let mut a = TreeValues::new(phi.context(), hopf.truncation());
    for (i, b) in hopf.basis().iter().enumerate() {
        if let Some(t) = b.as_forest().and_then(Forest::as_tree) {
            a.set(t.clone(), phi.value(i).clone())?;
        }
    }
    Ok(a)
}

/// The Butcher group law `(a·b)(τ) = Σ_{s∈OST(τ)} b(s_τ) a(τ∖s)`, evaluated
/// directly on trees.
pub fn butcher_compose<R: Ring>(a: &TreeValues<R>, b: &TreeValues<R>) -> Result<TreeValues<R>> {
    a.check_compatible(b)?;
    let mut out = TreeValues::new(&a.ctx, a.truncation);
    for tree in enumerate_trees(a.truncation)?.into_iter().flatten() {
        let mut acc = R::zero(&a.ctx);
        for cut in ordered_subtrees(&tree) {
            acc.add_assign(&a.on_forest(&cut.pruned).mul(&b.on_forest(&cut.trunk)));
        }
        out.set(tree, acc)?;
    }
    Ok(out)
}

/// Butcher group inverse through the partition formula for the antipode:
/// `a⁻¹(τ) = Σ_{p∈𝒫(τ)} (-1)^{|p_τ|} a(τ∖p)`.
pub fn butcher_inverse<R: Ring>(a: &TreeValues<R>) -> Result<TreeValues<R>> {
    let mut out = TreeValues::new(&a.ctx, a.truncation);
    for tree in enumerate_trees(a.truncation)?.into_iter().flatten() {
        let mut acc = R::zero(&a.ctx);
        for p in edge_partitions(&tree) {
            let term = a.on_forest(&p.forest);
            if p.skeleton.order() % 2 == 0 {
                acc.add_assign(&term);
            } else {
                acc.add_assign(&term.neg());
            }
        }
        out.set(tree, acc)?;
    }
    Ok(out)
}

fn require_tensor(hopf: &HopfStructure) -> Result<usize> {
    match hopf.kind() {
        HopfKind::Tensor(d) => Ok(d),
        other => Err(Error::Incompatible(format!("expected a tensor algebra, found {other}"))),
    }
}

/// Characters of `T(V)` correspond to vectors of `V*`: restriction to the
/// letters turns `⋆` into componentwise addition.
pub fn tensor_char_group_iso<R: Ring>(phi: &Character<R>) -> Result<Vec<R>> {
    let hopf = phi.0.hopf();
    let d = require_tensor(hopf)?;
    (0..d as u16)
        .map(|l| phi.0.value_at(&Word::new(vec![l]).into()).cloned())
        .collect()
}

/// Inverse of [`tensor_char_group_iso`]: `φ(v_{i₁}⋯v_{i_k}) = x_{i₁}⋯x_{i_k}`.
pub fn tensor_char_from_vector<R: Ring>(
    hopf: &Arc<HopfStructure>,
    ctx: &R::Context,
    x: &[R],
) -> Result<Character<R>> {
    let d = require_tensor(hopf)?;
    if x.len() != d {
        return Err(Error::Incompatible(format!("{} components for tensor({d})", x.len())));
    }
    Ok(char_from_generator_values(hopf, ctx, |i| {
        x[hopf.element(i).as_word().unwrap().letters()[0] as usize].clone()
    }))
}
