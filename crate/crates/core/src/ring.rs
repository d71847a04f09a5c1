//! Commutative coefficient rings with exact equality.
//!
//! Two instances ship: [`Rational`] (arbitrary precision) and
//! [`TruncatedSeries`], power series over the rationals modulo `X^(M+1)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A commutative unital ring with exact equality.
///
/// Values of some rings depend on a runtime parameter (the series modulus),
/// which is carried by [`Ring::Context`]; values never mix contexts.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    type Context: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn zero(ctx: &Self::Context) -> Self;
    fn one(ctx: &Self::Context) -> Self;
    fn from_int(ctx: &Self::Context, n: i64) -> Self;
    /// `None` when the ring is not a ℚ-algebra.
    fn from_rational(ctx: &Self::Context, q: &BigRational) -> Option<Self>;
    fn kind(ctx: &Self::Context) -> RingKind;
    fn parse(ctx: &Self::Context, text: &str) -> Result<Self>;

    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn mul_int(&self, k: i64) -> Self;
    fn inverse(&self) -> Option<Self>;

    fn is_unit(&self) -> bool {
        self.inverse().is_some()
    }

    fn add_assign(&mut self, rhs: &Self) {
        *self = Ring::add(self, rhs);
    }
}

/// Runtime name of a coefficient ring: `rational` or `series:M`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RingKind {
    Rational,
    Series(usize),
}

impl fmt::Display for RingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingKind::Rational => f.write_str("rational"),
            RingKind::Series(m) => write!(f, "series:{m}"),
        }
    }
}

impl FromStr for RingKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "rational" {
            return Ok(RingKind::Rational);
        }
        if let Some(m) = s.strip_prefix("series:") {
            let m: usize = m
                .parse()
                .map_err(|_| Error::parse(7, format!("bad series modulus `{m}`")))?;
            if m == 0 {
                return Err(Error::parse(7, "series modulus must be at least 1"));
            }
            return Ok(RingKind::Series(m));
        }
        Err(Error::parse(0, format!("unknown ring `{s}`")))
    }
}

/// Parses `p`, `-p` or `p/q` into a reduced rational.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let t = text.trim();
    let bad = || Error::parse(0, format!("malformed rational `{text}`"));
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::parse(0, format!("zero denominator in `{text}`")));
    }
    Ok(BigRational::new(num, den))
}

/// Arbitrary precision rational number.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Rational(pub BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        Rational(BigRational::new(num.into(), den.into()))
    }

    pub fn integer(n: i64) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }
}

impl From<BigRational> for Rational {
    fn from(q: BigRational) -> Self {
        Rational(q)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // BigRational prints integers without a denominator and keeps the
        // sign on the numerator, which is the wire format.
        write!(f, "{}", self.0)
    }
}

impl Ring for Rational {
    type Context = ();

    fn zero(_: &()) -> Self {
        Rational(BigRational::zero())
    }
    fn one(_: &()) -> Self {
        Rational(BigRational::one())
    }
    fn from_int(_: &(), n: i64) -> Self {
        Rational::integer(n)
    }
    fn from_rational(_: &(), q: &BigRational) -> Option<Self> {
        Some(Rational(q.clone()))
    }
    fn kind(_: &()) -> RingKind {
        RingKind::Rational
    }
    fn parse(_: &(), text: &str) -> Result<Self> {
        parse_rational(text).map(Rational)
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        Rational(&self.0 + &rhs.0)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Rational(&self.0 - &rhs.0)
    }
    fn neg(&self) -> Self {
        Rational(-&self.0)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Rational(&self.0 * &rhs.0)
    }
    fn mul_int(&self, k: i64) -> Self {
        Rational(&self.0 * BigRational::from_integer(k.into()))
    }
    fn inverse(&self) -> Option<Self> {
        (!self.0.is_zero()).then(|| Rational(self.0.recip()))
    }
    fn add_assign(&mut self, rhs: &Self) {
        self.0 += &rhs.0;
    }
}

/// Element of ℚ[[X]]/(X^(M+1)), stored as exactly `M + 1` coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    /// Builds a series modulo `X^(modulus+1)`; missing coefficients are zero
    /// and coefficients beyond the modulus are dropped.
    pub fn new(modulus: usize, mut coeffs: Vec<BigRational>) -> Self {
        coeffs.resize(modulus + 1, BigRational::zero());
        TruncatedSeries { coeffs }
    }

    pub fn from_ints(modulus: usize, coeffs: &[i64]) -> Self {
        Self::new(
            modulus,
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn modulus(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&BigRational, &BigRational) -> BigRational) -> Self {
        debug_assert_eq!(self.coeffs.len(), rhs.coeffs.len(), "series modulus mismatch");
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl Ring for TruncatedSeries {
    /// The modulus `M`.
    type Context = usize;

    fn zero(m: &usize) -> Self {
        TruncatedSeries::new(*m, Vec::new())
    }
    fn one(m: &usize) -> Self {
        TruncatedSeries::new(*m, vec![BigRational::one()])
    }
    fn from_int(m: &usize, n: i64) -> Self {
        TruncatedSeries::from_ints(*m, &[n])
    }
    fn from_rational(m: &usize, q: &BigRational) -> Option<Self> {
        Some(TruncatedSeries::new(*m, vec![q.clone()]))
    }
    fn kind(m: &usize) -> RingKind {
        RingKind::Series(*m)
    }
    /// Comma-separated coefficients `c0,c1,...`; at most `M + 1` of them.
    fn parse(m: &usize, text: &str) -> Result<Self> {
        let coeffs = text
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()?;
        if coeffs.len() > m + 1 {
            return Err(Error::parse(
                0,
                format!("series `{text}` has more than {} coefficients", m + 1),
            ));
        }
        Ok(TruncatedSeries::new(*m, coeffs))
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
    fn add(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, |a, b| a + b)
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, |a, b| a - b)
    }
    fn neg(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len();
        let mut out = vec![BigRational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        TruncatedSeries { coeffs: out }
    }
    fn mul_int(&self, k: i64) -> Self {
        let k = BigRational::from_integer(k.into());
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c * &k).collect(),
        }
    }
    /// Units are exactly the series with nonzero constant term.
    fn inverse(&self) -> Option<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return None;
        }
        let inv0 = c0.recip();
        let n = self.coeffs.len();
        let mut out = vec![BigRational::zero(); n];
        out[0] = inv0.clone();
        for k in 1..n {
            let mut acc = BigRational::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &out[k - j];
            }
            out[k] = -acc * &inv0;
        }
        Some(TruncatedSeries { coeffs: out })
    }
    fn is_unit(&self) -> bool {
        !self.coeffs[0].is_zero()
    }
    fn add_assign(&mut self, rhs: &Self) {
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}
