//! Power series applied to functionals in the augmentation ideal
//! `I_A = {a : a(1_H) = 0}`, and the exponential, logarithm and BCH product
//! built from it.
//!
//! Since every `a ∈ I_A` raises degree under `⋆`, `a^{⋆k}` vanishes below
//! degree `k` and the series `Σ c_k a^{⋆k}` is finite at any truncation.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::functional::TruncatedFunctional;
use crate::ring::{parse_rational, Ring};

/// `c₀ + c₁X + … + c_N X^N` with rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FormalSeries {
    coeffs: Vec<BigRational>,
}

impl FormalSeries {
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        FormalSeries { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        FormalSeries::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    /// `X^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = BigRational::one();
        FormalSeries { coeffs }
    }

    /// `Σ_{k≤n} X^k / k!`.
    pub fn exp(n: usize) -> Self {
        let mut coeffs = Vec::with_capacity(n + 1);
        let mut fact = BigInt::one();
        for k in 0..=n {
            if k > 0 {
                fact *= k;
            }
            coeffs.push(BigRational::new(BigInt::one(), fact.clone()));
        }
        FormalSeries { coeffs }
    }

    /// `log(1+X) = Σ_{1≤k≤n} (-1)^{k+1} X^k / k`.
    pub fn log1p(n: usize) -> Self {
        let coeffs = (0..=n)
            .map(|k| match k {
                0 => BigRational::zero(),
                k => {
                    let sign: i64 = if k % 2 == 1 { 1 } else { -1 };
                    BigRational::new(sign.into(), (k as i64).into())
                }
            })
            .collect();
        FormalSeries { coeffs }
    }

    /// `(1-X)^{-1}` truncated at `X^n`.
    pub fn geometric(n: usize) -> Self {
        FormalSeries::new(vec![BigRational::one(); n + 1])
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `X^k`, zero past the stored length.
    pub fn coefficient(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Cauchy product, truncated at `X^n`.
    pub fn mul_truncated(&self, other: &FormalSeries, n: usize) -> FormalSeries {
        let mut out = vec![BigRational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                out[i + j] += a * b;
            }
        }
        FormalSeries { coeffs: out }
    }

    /// Parses the literal `c0,c1,...`.
    pub fn parse(text: &str) -> Result<Self> {
        text.split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()
            .map(FormalSeries::new)
    }
}

impl fmt::Display for FormalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

pub(crate) fn require_augmented<R: Ring>(a: &TruncatedFunctional<R>) -> Result<()> {
    let a0 = a.degree_zero_value();
    if !a0.is_zero() {
        return Err(Error::NotInAugmentationIdeal(a0.to_string()));
    }
    Ok(())
}

/// `f[a] = Σ_k c_k a^{⋆k}` for `a ∈ I_A`, evaluated by Horner's scheme in the
/// convolution algebra. Terms with `k` above the truncation vanish and are
/// skipped.
pub fn apply_series<R: Ring>(f: &FormalSeries, a: &TruncatedFunctional<R>) -> Result<TruncatedFunctional<R>> {
    require_augmented(a)?;
    let hopf = a.hopf();
    let ctx = a.context();
    let top = f.coeffs.len().saturating_sub(1).min(a.truncation());
    let constant = |k: usize| -> Result<TruncatedFunctional<R>> {
        let mut c = TruncatedFunctional::zero(hopf, ctx);
        c.set(hopf.unit_index(), a.rational(&f.coefficient(k))?);
        Ok(c)
    };
    let mut acc = constant(top)?;
    for k in (0..top).rev() {
        acc = acc.convolve(a)?.add(&constant(k)?)?;
    }
    Ok(acc)
}

/// `exp(a) = Σ a^{⋆k}/k!` for `a ∈ I_A`.
pub fn exp<R: Ring>(a: &TruncatedFunctional<R>) -> Result<TruncatedFunctional<R>> {
    apply_series(&FormalSeries::exp(a.truncation()), a)
}

/// `log(u) = Σ (-1)^{k+1}(u-1)^{⋆k}/k` for `u ∈ 1_A + I_A`.
pub fn log<R: Ring>(u: &TruncatedFunctional<R>) -> Result<TruncatedFunctional<R>> {
    let one = R::one(u.context());
    if u.degree_zero_value() != &one {
        return Err(Error::Domain(format!(
            "logarithm needs value 1 on the unit, found {}",
            u.degree_zero_value()
        )));
    }
    let shifted = u.sub(&TruncatedFunctional::unit(u.hopf(), u.context()))?;
    apply_series(&FormalSeries::log1p(u.truncation()), &shifted)
}

/// Baker–Campbell–Hausdorff product `log(exp(x) ⋆ exp(y))`.
pub fn bch<R: Ring>(x: &TruncatedFunctional<R>, y: &TruncatedFunctional<R>) -> Result<TruncatedFunctional<R>> {
    x.check_compatible(y)?;
    log(&exp(x)?.convolve(&exp(y)?)?)
}
