//! Linear functionals `H → B` truncated at the structure's degree, under the
//! convolution product `(φ⋆ψ)(c) = Σ φ(c₁)ψ(c₂)`.

use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::funcalc::{apply_series, FormalSeries};
use crate::hopf::{BasisElement, GradedVector, HopfStructure};
use crate::ring::Ring;

/// An element of `Hom(H, B)` known on every basis element of degree ≤ N.
///
/// Values are stored densely, one per basis position of the underlying
/// [`HopfStructure`].
#[derive(Clone)]
pub struct TruncatedFunctional<R: Ring> {
    hopf: Arc<HopfStructure>,
    ctx: R::Context,
    values: Vec<R>,
}

impl<R: Ring> TruncatedFunctional<R> {
    pub fn zero(hopf: &Arc<HopfStructure>, ctx: &R::Context) -> Self {
        TruncatedFunctional {
            hopf: hopf.clone(),
            ctx: ctx.clone(),
            values: vec![R::zero(ctx); hopf.dimension()],
        }
    }

    /// The convolution unit `u ∘ ε`.
    pub fn unit(hopf: &Arc<HopfStructure>, ctx: &R::Context) -> Self {
        let mut u = Self::zero(hopf, ctx);
        u.values[hopf.unit_index()] = R::one(ctx);
        u
    }

    pub fn from_values(hopf: &Arc<HopfStructure>, ctx: &R::Context, values: Vec<R>) -> Result<Self> {
        if values.len() != hopf.dimension() {
            return Err(Error::Incompatible(format!(
                "{} values for a basis of size {}",
                values.len(),
                hopf.dimension()
            )));
        }
        Ok(TruncatedFunctional {
            hopf: hopf.clone(),
            ctx: ctx.clone(),
            values,
        })
    }

    pub fn from_fn(
        hopf: &Arc<HopfStructure>,
        ctx: &R::Context,
        mut f: impl FnMut(usize, &BasisElement) -> R,
    ) -> Self {
        TruncatedFunctional {
            hopf: hopf.clone(),
            ctx: ctx.clone(),
            values: hopf.basis().iter().enumerate().map(|(i, b)| f(i, b)).collect(),
        }
    }

    /// `δ_b`: one on `b`, zero on every other basis element.
    pub fn indicator(hopf: &Arc<HopfStructure>, ctx: &R::Context, b: &BasisElement) -> Result<Self> {
        let i = hopf.position(b)?;
        let mut d = Self::zero(hopf, ctx);
        d.values[i] = R::one(ctx);
        Ok(d)
    }

    pub fn hopf(&self) -> &Arc<HopfStructure> {
        &self.hopf
    }

    pub fn context(&self) -> &R::Context {
        &self.ctx
    }

    pub fn truncation(&self) -> usize {
        self.hopf.truncation()
    }

    pub fn values(&self) -> &[R] {
        &self.values
    }

    pub fn value(&self, i: usize) -> &R {
        &self.values[i]
    }

    pub fn set(&mut self, i: usize, v: R) {
        self.values[i] = v;
    }

    pub fn value_at(&self, b: &BasisElement) -> Result<&R> {
        Ok(&self.values[self.hopf.position(b)?])
    }

    /// Value on the unit `1_H`.
    pub fn degree_zero_value(&self) -> &R {
        &self.values[self.hopf.unit_index()]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(R::is_zero)
    }

    /// Linear extension to a vector of `H`; terms above the truncation are an
    /// error.
    pub fn evaluate(&self, v: &GradedVector) -> Result<R> {
        let mut acc = R::zero(&self.ctx);
        for (b, c) in v.terms() {
            let i = self.hopf.position(b)?;
            acc.add_assign(&self.values[i].mul(&self.rational(c)?));
        }
        Ok(acc)
    }

    /// Embeds a rational into the coefficient ring.
    pub(crate) fn rational(&self, q: &BigRational) -> Result<R> {
        R::from_rational(&self.ctx, q).ok_or_else(|| Error::UnsupportedRing(R::kind(&self.ctx).to_string()))
    }

    pub fn check_compatible(&self, other: &Self) -> Result<()> {
        if !Arc::ptr_eq(&self.hopf, &other.hopf) && !self.hopf.same_as(&other.hopf) {
            return Err(Error::Incompatible(format!(
                "{} truncated at {} vs {} truncated at {}",
                self.hopf.kind(),
                self.truncation(),
                other.hopf.kind(),
                other.truncation()
            )));
        }
        if self.ctx != other.ctx {
            return Err(Error::Incompatible(format!(
                "ring {} vs {}",
                R::kind(&self.ctx),
                R::kind(&other.ctx)
            )));
        }
        Ok(())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&R, &R) -> R) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(TruncatedFunctional {
            hopf: self.hopf.clone(),
            ctx: self.ctx.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| f(a, b)).collect(),
        })
    }

    fn map(&self, f: impl Fn(&R) -> R) -> Self {
        TruncatedFunctional {
            hopf: self.hopf.clone(),
            ctx: self.ctx.clone(),
            values: self.values.iter().map(f).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, R::add)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, R::sub)
    }

    pub fn neg(&self) -> Self {
        self.map(R::neg)
    }

    pub fn scale(&self, k: &R) -> Self {
        self.map(|v| v.mul(k))
    }

    pub fn scale_rational(&self, q: &BigRational) -> Result<Self> {
        let k = self.rational(q)?;
        Ok(self.scale(&k))
    }

    /// The convolution product.
    pub fn convolve(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let zero = R::zero(&self.ctx);
        let values = (0..self.hopf.dimension())
            .map(|c| {
                let mut acc = zero.clone();
                for t in self.hopf.coproduct(c) {
                    let (a, b) = (&self.values[t.left], &other.values[t.right]);
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    let term = a.mul(b);
                    if t.coeff == 1 {
                        acc.add_assign(&term);
                    } else {
                        acc.add_assign(&term.mul_int(t.coeff));
                    }
                }
                acc
            })
            .collect();
        Ok(TruncatedFunctional {
            hopf: self.hopf.clone(),
            ctx: self.ctx.clone(),
            values,
        })
    }

    /// Inverse in the unit group; exists iff the degree-0 value `a₀` is a unit
    /// of the ring. Computed as `a₀⁻¹ Σ_k (-a₀⁻¹ b)^k` with `b` the part of
    /// positive degree.
    pub fn inverse(&self) -> Result<Self> {
        let a0 = self.degree_zero_value();
        let a0_inv = a0
            .inverse()
            .ok_or_else(|| Error::NotInvertible(a0.to_string()))?;
        let mut b = self.clone();
        b.values[self.hopf.unit_index()] = R::zero(&self.ctx);
        let x = b.scale(&a0_inv.neg());
        let geometric = apply_series(&FormalSeries::geometric(self.truncation()), &x)?;
        Ok(geometric.scale(&a0_inv))
    }

    /// Keeps only the degree-`n` values.
    pub fn project(&self, n: usize) -> Self {
        let range = self.hopf.degree_range(n);
        let zero = R::zero(&self.ctx);
        TruncatedFunctional {
            hopf: self.hopf.clone(),
            ctx: self.ctx.clone(),
            values: self
                .values
                .iter()
                .enumerate()
                .map(|(i, v)| if range.contains(&i) { v.clone() } else { zero.clone() })
                .collect(),
        }
    }

    /// `φ ∘ S`.
    pub fn precompose_antipode(&self) -> Self {
        let zero = R::zero(&self.ctx);
        let values = (0..self.hopf.dimension())
            .map(|i| {
                let mut acc = zero.clone();
                for &(c, k) in self.hopf.antipode(i) {
                    acc.add_assign(&self.values[k].mul_int(c));
                }
                acc
            })
            .collect();
        TruncatedFunctional {
            hopf: self.hopf.clone(),
            ctx: self.ctx.clone(),
            values,
        }
    }

    /// The same functional seen through a structure of the same kind and
    /// lower (or equal) truncation.
    pub fn restrict(&self, target: &Arc<HopfStructure>) -> Result<Self> {
        if target.kind() != self.hopf.kind() || target.truncation() > self.truncation() {
            return Err(Error::Incompatible(format!(
                "cannot restrict {} at {} to {} at {}",
                self.hopf.kind(),
                self.truncation(),
                target.kind(),
                target.truncation()
            )));
        }
        let values = target
            .basis()
            .iter()
            .map(|b| Ok(self.values[self.hopf.position(b)?].clone()))
            .collect::<Result<Vec<_>>>()?;
        Self::from_values(target, &self.ctx, values)
    }
}

impl<R: Ring> AsRef<TruncatedFunctional<R>> for TruncatedFunctional<R> {
    fn as_ref(&self) -> &Self {
        self
    }
}

impl<R: Ring> PartialEq for TruncatedFunctional<R> {
    fn eq(&self, other: &Self) -> bool {
        self.hopf.same_as(&other.hopf) && self.ctx == other.ctx && self.values == other.values
    }
}

impl<R: Ring> fmt::Display for TruncatedFunctional<R> {
    /// One `basis: value` line per nonzero value, in basis order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for (b, v) in self.hopf.basis().iter().zip(&self.values) {
            if !v.is_zero() {
                writeln!(f, "{b}: {v}")?;
                any = true;
            }
        }
        if !any {
            writeln!(f, "0")?;
        }
        Ok(())
    }
}

impl<R: Ring> fmt::Debug for TruncatedFunctional<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for (b, v) in self.hopf.basis().iter().zip(&self.values) {
            if !v.is_zero() {
                m.entry(&format_args!("{b}"), &format_args!("{v}"));
            }
        }
        m.finish()
    }
}
