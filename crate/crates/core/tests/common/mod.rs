//! Independent reference implementations used to cross-check the library.
//! They favour the literal definitions over speed.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

use chargroup::funcalc::FormalSeries;
use chargroup::functional::TruncatedFunctional;
use chargroup::hopf::{
    ck_coproduct, multiply_basis, tensor_coproduct, BasisElement, GradedVector, HopfStructure,
};
use chargroup::ideals::HopfIdealSpec;
use chargroup::ring::Ring;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Coproduct straight from the combinatorial formulas, bypassing the
/// precomputed tables.
pub fn raw_coproduct(b: &BasisElement) -> Vec<(i64, BasisElement, BasisElement)> {
    match b {
        BasisElement::Forest(f) => ck_coproduct(f)
            .into_iter()
            .map(|(c, l, r)| (c, l.into(), r.into()))
            .collect(),
        BasisElement::Word(w) => tensor_coproduct(w)
            .into_iter()
            .map(|(c, l, r)| (c, l.into(), r.into()))
            .collect(),
    }
}

/// `(a ⋆ b)(x) = Σ a(x′) b(x″)` evaluated from [`raw_coproduct`].
pub fn naive_convolve<R: Ring>(a: &TruncatedFunctional<R>, b: &TruncatedFunctional<R>) -> TruncatedFunctional<R> {
    let hopf = a.hopf().clone();
    let ctx = a.context().clone();
    TruncatedFunctional::from_fn(&hopf, &ctx, |_, x| {
        let mut acc = R::zero(&ctx);
        for (c, l, r) in raw_coproduct(x) {
            let t = a.value_at(&l).unwrap().mul(b.value_at(&r).unwrap()).mul_int(c);
            acc = acc.add(&t);
        }
        acc
    })
}

/// `Σ_k f_k a^{⋆k}` with every power formed explicitly.
pub fn apply_series_raw<R: Ring>(f: &FormalSeries, a: &TruncatedFunctional<R>) -> TruncatedFunctional<R> {
    let hopf = a.hopf().clone();
    let ctx = a.context().clone();
    let mut power = TruncatedFunctional::unit(&hopf, &ctx);
    let mut acc = TruncatedFunctional::zero(&hopf, &ctx);
    for (k, c) in f.coefficients().iter().enumerate() {
        if k > hopf.truncation() {
            break;
        }
        if k > 0 {
            power = naive_convolve(&power, a);
        }
        acc = acc.add(&power.scale_rational(c).unwrap()).unwrap();
    }
    acc
}

/// Solves `a ⋆ b = ε` degree by degree:
/// `a(1) b(x) = ε(x) − Σ_{x″ ≠ x} a(x′) b(x″)`.
pub fn inverse_by_recursion<R: Ring>(a: &TruncatedFunctional<R>) -> TruncatedFunctional<R> {
    let hopf = a.hopf().clone();
    let ctx = a.context().clone();
    let a0_inv = a.degree_zero_value().inverse().expect("invertible");
    let mut b = TruncatedFunctional::zero(&hopf, &ctx);
    for i in 0..hopf.dimension() {
        let x = hopf.element(i).clone();
        let mut rhs = if x.is_unit() { R::one(&ctx) } else { R::zero(&ctx) };
        for (c, l, r) in raw_coproduct(&x) {
            if r == x {
                continue;
            }
            let t = a.value_at(&l).unwrap().mul(b.value_at(&r).unwrap()).mul_int(c);
            rhs = rhs.sub(&t);
        }
        b.set(i, a0_inv.mul(&rhs));
    }
    b
}

fn times(v: &GradedVector, b: &BasisElement, c: i64) -> GradedVector {
    let mut out = GradedVector::new();
    for (x, k) in v.terms() {
        out.add_term(multiply_basis(x, b), k * BigRational::from_integer(c.into()));
    }
    out
}

/// `S(1) = 1`, `S(x) = −Σ_{x′ ≠ x} S(x′) x″` from `m(S ⊗ id)Δ = uε`.
pub fn antipode_by_recursion(x: &BasisElement, memo: &mut HashMap<BasisElement, GradedVector>) -> GradedVector {
    if let Some(v) = memo.get(x) {
        return v.clone();
    }
    let v = if x.is_unit() {
        GradedVector::basis(x.clone())
    } else {
        let mut acc = GradedVector::new();
        for (c, l, r) in raw_coproduct(x) {
            if &l == x {
                continue;
            }
            let s = antipode_by_recursion(&l, memo);
            acc = acc.add(&times(&s, &r, -c));
        }
        acc
    };
    memo.insert(x.clone(), v.clone());
    v
}

fn parse_nested(tree: &[usize]) -> Vec<Vec<usize>> {
    let mut children = vec![Vec::new(); tree.len()];
    for (v, &p) in tree.iter().enumerate().skip(1) {
        children[p].push(v);
    }
    children
}

fn canonical(v: usize, children: &[Vec<usize>]) -> String {
    let mut parts: Vec<String> = children[v].iter().map(|&c| canonical(c, children)).collect();
    parts.sort_by(|a, b| b.as_bytes().cmp(a.as_bytes()));
    format!("[{}]", parts.join(" "))
}

/// Distinct unlabelled trees of each order `1..=max`, by grafting a leaf
/// onto every vertex of every labelled tree of the previous order and
/// deduplicating canonical strings.
pub fn brute_force_trees(max: usize) -> Vec<BTreeSet<String>> {
    let mut out = Vec::new();
    // parent arrays; vertex 0 is the root
    let mut layer: Vec<Vec<usize>> = vec![vec![usize::MAX]];
    for n in 1..=max {
        if n > 1 {
            let mut next = Vec::new();
            let mut seen = BTreeSet::new();
            for t in &layer {
                for p in 0..t.len() {
                    let mut u = t.clone();
                    u.push(p);
                    if seen.insert(canonical(0, &parse_nested(&u))) {
                        next.push(u);
                    }
                }
            }
            layer = next;
        }
        out.push(layer.iter().map(|t| canonical(0, &parse_nested(t))).collect());
    }
    out
}

/// Spanning vectors of the degree-`n` part of the ideal generated by
/// `ideal` in the commutative forest algebra: every generator times every
/// forest of complementary degree.
pub fn ideal_span(hopf: &Arc<HopfStructure>, ideal: &HopfIdealSpec, n: usize) -> Vec<Vec<BigRational>> {
    let range = hopf.degree_range(n);
    let mut rows = Vec::new();
    for g in ideal.generators() {
        let d = g.homogeneous_degree().unwrap();
        if d > n {
            continue;
        }
        for m in hopf.degree_range(n - d) {
            let mut row = vec![BigRational::zero(); range.len()];
            for (b, c) in g.terms() {
                let prod = multiply_basis(b, hopf.element(m));
                row[hopf.position(&prod).unwrap() - range.start] += c;
            }
            rows.push(row);
        }
    }
    rows
}

/// Coefficients of a graded vector on the degree-`n` basis.
pub fn coordinates(hopf: &Arc<HopfStructure>, v: &GradedVector, n: usize) -> Vec<BigRational> {
    let range = hopf.degree_range(n);
    let mut row = vec![BigRational::zero(); range.len()];
    for (b, c) in v.terms() {
        assert_eq!(b.degree(), n);
        row[hopf.position(b).unwrap() - range.start] += c;
    }
    row
}

/// Iterated coproducts as maps from position triples to coefficients.
pub fn coassociativity_sides(hopf: &HopfStructure, i: usize) -> (BTreeMap<[usize; 3], i64>, BTreeMap<[usize; 3], i64>) {
    let mut left = BTreeMap::new();
    let mut right = BTreeMap::new();
    for t in hopf.coproduct(i) {
        for u in hopf.coproduct(t.left) {
            *left.entry([u.left, u.right, t.right]).or_insert(0) += t.coeff * u.coeff;
        }
        for u in hopf.coproduct(t.right) {
            *right.entry([t.left, u.left, u.right]).or_insert(0) += t.coeff * u.coeff;
        }
    }
    left.retain(|_, c| *c != 0);
    right.retain(|_, c| *c != 0);
    (left, right)
}

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub fn one() -> BigRational {
    BigRational::one()
}

/// `φ` vanishes on every spanning vector of the ideal in degrees `≤ n`.
pub fn vanishes_on_ideal_span(
    phi: &TruncatedFunctional<chargroup::ring::Rational>,
    ideal: &HopfIdealSpec,
    n: usize,
) -> bool {
    let hopf = phi.hopf();
    (0..=n).all(|d| {
        let start = hopf.degree_range(d).start;
        ideal_span(hopf, ideal, d).iter().all(|row| {
            let v: BigRational = row
                .iter()
                .enumerate()
                .map(|(k, c)| c * &phi.value(start + k).0)
                .sum();
            v.is_zero()
        })
    })
}
