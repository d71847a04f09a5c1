//! Exact solutions of `η′(t) = η(t) ⋆ γ(t)`, `η(0) = 1`, for curves `γ` that
//! are polynomials in `t` with infinitesimal-character coefficients.
//!
//! Because `γ(t)` vanishes on `1_H`, the degree-`n` part of `η ⋆ γ` only
//! involves degrees `< n` of `η`. Each degree is therefore a polynomial in
//! `t` obtained by integrating already known polynomials from 0.

use std::sync::Arc;

use num_rational::BigRational;

use crate::characters::{check_character, Character, InfinitesimalCharacter};
use crate::error::{Error, Result};
use crate::functional::TruncatedFunctional;
use crate::hopf::HopfStructure;
use crate::ring::Ring;

/// `γ(t) = Σ_j t^j γ_j`.
#[derive(Clone, PartialEq, Debug)]
pub struct FunctionalCurve<R: Ring> {
    coeffs: Vec<InfinitesimalCharacter<R>>,
}

impl<R: Ring> FunctionalCurve<R> {
    pub fn new(coeffs: Vec<InfinitesimalCharacter<R>>) -> Result<Self> {
        let first = coeffs
            .first()
            .ok_or_else(|| Error::Domain("a curve needs at least one coefficient".into()))?;
        for c in &coeffs[1..] {
            first.functional().check_compatible(c.functional())?;
        }
        Ok(FunctionalCurve { coeffs })
    }

    /// Checks every coefficient with the infinitesimal-character predicate.
    pub fn from_functionals(coeffs: Vec<TruncatedFunctional<R>>) -> Result<Self> {
        let coeffs = coeffs
            .into_iter()
            .enumerate()
            .map(|(j, c)| {
                InfinitesimalCharacter::new(c)
                    .map_err(|e| Error::Domain(format!("curve coefficient {j}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(coeffs)
    }

    pub fn constant(phi: InfinitesimalCharacter<R>) -> Self {
        FunctionalCurve { coeffs: vec![phi] }
    }

    pub fn coefficients(&self) -> &[InfinitesimalCharacter<R>] {
        &self.coeffs
    }

    /// Polynomial degree in `t`.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn hopf(&self) -> &Arc<HopfStructure> {
        self.coeffs[0].functional().hopf()
    }

    pub fn context(&self) -> &R::Context {
        self.coeffs[0].functional().context()
    }

    fn rational(&self, q: &BigRational) -> Result<R> {
        R::from_rational(self.context(), q)
            .ok_or_else(|| Error::UnsupportedRing(R::kind(self.context()).to_string()))
    }

    /// `γ(t)`.
    pub fn at(&self, t: &BigRational) -> Result<InfinitesimalCharacter<R>> {
        let t = self.rational(t)?;
        let mut acc = self.coeffs.last().unwrap().clone();
        for c in self.coeffs.iter().rev().skip(1) {
            acc = acc.scale(&t).add(c)?;
        }
        Ok(acc)
    }

    /// `∫₀^t γ(s) ds`.
    pub fn integral(&self, t: &BigRational) -> Result<InfinitesimalCharacter<R>> {
        let mut acc = InfinitesimalCharacter::zero(self.hopf(), self.context());
        let mut power = t.clone();
        for (j, c) in self.coeffs.iter().enumerate() {
            let w = self.rational(&(&power / BigRational::from_integer((j as i64 + 1).into())))?;
            acc = acc.add(&c.scale(&w))?;
            power *= t;
        }
        Ok(acc)
    }

    pub fn restrict(&self, target: &Arc<HopfStructure>) -> Result<Self> {
        Ok(FunctionalCurve {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| c.restrict(target))
                .collect::<Result<_>>()?,
        })
    }
}

/// The solution `η(t)` as one polynomial in `t` per basis element.
#[derive(Clone, Debug)]
pub struct Evolution<R: Ring> {
    hopf: Arc<HopfStructure>,
    ctx: R::Context,
    /// `polys[i][k]` is the coefficient of `t^k` in `η(t)(b_i)`.
    polys: Vec<Vec<R>>,
}

fn poly_mul_add<R: Ring>(acc: &mut Vec<R>, a: &[R], b: &[R], k: i64, zero: &R) {
    if a.is_empty() || b.is_empty() {
        return;
    }
    if acc.len() < a.len() + b.len() - 1 {
        acc.resize(a.len() + b.len() - 1, zero.clone());
    }
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                let mut term = x.mul(y);
                if k != 1 {
                    term = term.mul_int(k);
                }
                acc[i + j].add_assign(&term);
            }
        }
    }
}

fn trim<R: Ring>(p: &mut Vec<R>) {
    while p.last().is_some_and(R::is_zero) {
        p.pop();
    }
}

impl<R: Ring> Evolution<R> {
    pub fn solve(curve: &FunctionalCurve<R>) -> Result<Self> {
        let hopf = curve.hopf().clone();
        let ctx = curve.context().clone();
        let zero = R::zero(&ctx);
        // γ_j(t) per basis element
        let gamma: Vec<Vec<R>> = (0..hopf.dimension())
            .map(|i| {
                let mut p: Vec<R> = curve.coeffs.iter().map(|c| c.functional().value(i).clone()).collect();
                trim(&mut p);
                p
            })
            .collect();
        let inverses: Vec<R> = (1..=curve.coeffs.len() * (hopf.truncation() + 1) + 1)
            .map(|k| curve.rational(&BigRational::new(1.into(), (k as i64).into())))
            .collect::<Result<_>>()?;

        let mut polys: Vec<Vec<R>> = vec![Vec::new(); hopf.dimension()];
        polys[hopf.unit_index()] = vec![R::one(&ctx)];
        // positions are sorted by degree, so every left leg of a positive
        // degree term is already solved
        for c in 1..hopf.dimension() {
            let mut integrand: Vec<R> = Vec::new();
            for term in hopf.coproduct(c) {
                if term.right == hopf.unit_index() {
                    continue;
                }
                debug_assert!(term.left < c || hopf.degree(term.left) < hopf.degree(c));
                poly_mul_add(&mut integrand, &polys[term.left], &gamma[term.right], term.coeff, &zero);
            }
            trim(&mut integrand);
            let mut eta = Vec::with_capacity(integrand.len() + 1);
            if !integrand.is_empty() {
                eta.push(zero.clone());
                for (k, a) in integrand.iter().enumerate() {
                    eta.push(a.mul(&inverses[k]));
                }
            }
            polys[c] = eta;
        }
        Ok(Evolution { hopf, ctx, polys })
    }

    /// Highest power of `t` that occurs.
    pub fn t_degree(&self) -> usize {
        self.polys.iter().map(|p| p.len().saturating_sub(1)).max().unwrap_or(0)
    }

    /// The functional of `t^k` coefficients.
    pub fn coefficient(&self, k: usize) -> TruncatedFunctional<R> {
        TruncatedFunctional::from_fn(&self.hopf, &self.ctx, |i, _| {
            self.polys[i].get(k).cloned().unwrap_or_else(|| R::zero(&self.ctx))
        })
    }

    /// `η(t)`.
    pub fn at(&self, t: &BigRational) -> Result<TruncatedFunctional<R>> {
        let t = R::from_rational(&self.ctx, t)
            .ok_or_else(|| Error::UnsupportedRing(R::kind(&self.ctx).to_string()))?;
        let zero = R::zero(&self.ctx);
        let values = self
            .polys
            .iter()
            .map(|p| p.iter().rev().fold(zero.clone(), |acc, c| acc.mul(&t).add(c)))
            .collect();
        TruncatedFunctional::from_values(&self.hopf, &self.ctx, values)
    }
}

/// `η(t_end)` for the evolution of `γ`.
pub fn evolve<R: Ring>(curve: &FunctionalCurve<R>, t_end: &BigRational) -> Result<TruncatedFunctional<R>> {
    Evolution::solve(curve)?.at(t_end)
}

/// `evol(γ) = η(1)`, as a character.
pub fn evol<R: Ring>(curve: &FunctionalCurve<R>) -> Result<Character<R>> {
    let eta = evolve(curve, &BigRational::from_integer(1.into()))?;
    check_character(&eta)
        .map_err(|v| Error::Internal(format!("evolution left the character group: {v}")))?;
    Character::new(eta)
}

/// Zero time gives the unit; used by callers that want `η(0)` explicitly.
pub fn is_start<R: Ring>(eta: &TruncatedFunctional<R>) -> bool {
    eta.values()
        .iter()
        .enumerate()
        .all(|(i, v)| if i == 0 { v == &R::one(eta.context()) } else { v.is_zero() })
}
