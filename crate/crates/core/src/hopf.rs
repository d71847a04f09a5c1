//! Graded connected Hopf algebras truncated at a finite degree.
//!
//! Two instances: the Connes–Kreimer algebra `ck` (polynomials in rooted
//! trees, basis = forests, graded by node count) and the tensor algebra
//! `tensor(d)` over a `d`-dimensional space (basis = words, graded by
//! length, unshuffle coproduct). All structure constants are integers.
//!
//! A [`HopfStructure`] materializes the basis up to its truncation degree
//! together with coproduct and antipode tables indexed by basis position.
//! Positions are assigned by degree first and canonical order within a
//! degree, so position 0 is always the unit.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::Range;
use std::str::FromStr;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::trees::{
    edge_partitions, enumerate_trees, forests_of_degree, ordered_subtrees, parse_forest, Forest,
    RootedTree, MAX_ENUMERATION_ORDER,
};

/// Cap on the number of basis elements of a tensor structure.
const MAX_TENSOR_BASIS: usize = 1 << 20;

/// A word in the letters `v0..v(d-1)`; the empty word is the unit.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<u16>);

impl Word {
    pub fn new(letters: Vec<u16>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[u16] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for l in &self.0 {
            write!(f, "v{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

/// Parses `1` or `v<i>v<j>...`.
pub fn parse_word(text: &str) -> Result<Word> {
    let t = text.trim();
    if t == "1" {
        return Ok(Word::empty());
    }
    let mut letters = Vec::new();
    let bytes = t.as_bytes();
    let mut pos = 0;
    while pos < bytes.len() {
        if bytes[pos] != b'v' {
            return Err(Error::parse(pos, "expected `v`"));
        }
        pos += 1;
        let start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        let letter = t[start..pos]
            .parse::<u16>()
            .map_err(|_| Error::parse(start, "expected a letter index"))?;
        letters.push(letter);
    }
    if letters.is_empty() {
        return Err(Error::parse(0, "empty word must be written `1`"));
    }
    Ok(Word(letters))
}

/// A basis element of either shipped algebra.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum BasisElement {
    Forest(Forest),
    Word(Word),
}

impl BasisElement {
    pub fn degree(&self) -> usize {
        match self {
            BasisElement::Forest(f) => f.degree(),
            BasisElement::Word(w) => w.len(),
        }
    }

    pub fn is_unit(&self) -> bool {
        self.degree() == 0
    }

    pub fn as_forest(&self) -> Option<&Forest> {
        match self {
            BasisElement::Forest(f) => Some(f),
            BasisElement::Word(_) => None,
        }
    }

    pub fn as_word(&self) -> Option<&Word> {
        match self {
            BasisElement::Word(w) => Some(w),
            BasisElement::Forest(_) => None,
        }
    }
}

impl Ord for BasisElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use BasisElement::*;
        self.degree().cmp(&other.degree()).then_with(|| match (self, other) {
            (Forest(a), Forest(b)) => a.cmp(b),
            (Word(a), Word(b)) => a.cmp(b),
            (Forest(_), Word(_)) => std::cmp::Ordering::Less,
            (Word(_), Forest(_)) => std::cmp::Ordering::Greater,
        })
    }
}

impl PartialOrd for BasisElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisElement::Forest(x) => x.fmt(f),
            BasisElement::Word(x) => x.fmt(f),
        }
    }
}

impl fmt::Debug for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisElement::Forest(x) => x.fmt(f),
            BasisElement::Word(x) => x.fmt(f),
        }
    }
}

impl From<Forest> for BasisElement {
    fn from(f: Forest) -> Self {
        BasisElement::Forest(f)
    }
}

impl From<RootedTree> for BasisElement {
    fn from(t: RootedTree) -> Self {
        BasisElement::Forest(Forest::single(t))
    }
}

impl From<Word> for BasisElement {
    fn from(w: Word) -> Self {
        BasisElement::Word(w)
    }
}

/// A finite linear combination of basis elements with rational coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct GradedVector {
    terms: BTreeMap<BasisElement, BigRational>,
}

impl GradedVector {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn basis(b: impl Into<BasisElement>) -> Self {
        let mut v = Self::new();
        v.add_term(b.into(), BigRational::one());
        v
    }

    pub fn add_term(&mut self, b: BasisElement, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(b);
        match entry {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_int_term(&mut self, b: BasisElement, c: i64) {
        self.add_term(b, BigRational::from_integer(c.into()));
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisElement, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, b: &BasisElement) -> BigRational {
        self.terms.get(b).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest degree present, `None` for the zero vector.
    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(BasisElement::degree).max()
    }

    /// The common degree of all terms, if there is one.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(BasisElement::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn add(&self, other: &GradedVector) -> GradedVector {
        let mut out = self.clone();
        for (b, c) in other.terms() {
            out.add_term(b.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, k: &BigRational) -> GradedVector {
        let mut out = GradedVector::new();
        for (b, c) in self.terms() {
            out.add_term(b.clone(), c * k);
        }
        out
    }
}

impl fmt::Display for GradedVector {
    /// Writes e.g. `-[[]] + [] []` or `2*[[]] - 1/2*[]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (b, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let magnitude = c.abs();
            if magnitude.is_one() {
                write!(f, "{b}")?;
            } else {
                write!(f, "{magnitude}*{b}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GradedVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedVector({self})")
    }
}

/// Which algebra a structure realizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HopfKind {
    ConnesKreimer,
    /// Tensor algebra over a space of the given dimension.
    Tensor(usize),
}

impl fmt::Display for HopfKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HopfKind::ConnesKreimer => f.write_str("ck"),
            HopfKind::Tensor(d) => write!(f, "tensor({d})"),
        }
    }
}

impl HopfKind {
    /// Parses a forest or a word according to the algebra.
    pub fn parse_basis(&self, text: &str) -> Result<BasisElement> {
        let b = match *self {
            HopfKind::ConnesKreimer => BasisElement::Forest(parse_forest(text)?),
            HopfKind::Tensor(d) => {
                let w = parse_word(text)?;
                if let Some(&l) = w.letters().iter().find(|&&l| l as usize >= d) {
                    return Err(Error::parse(0, format!("letter v{l} outside tensor({d})")));
                }
                BasisElement::Word(w)
            }
        };
        Ok(b)
    }
}

impl FromStr for HopfKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "ck" => Ok(HopfKind::ConnesKreimer),
            "tensor" => Ok(HopfKind::Tensor(2)),
            other => {
                let d = other
                    .strip_prefix("tensor(")
                    .and_then(|r| r.strip_suffix(')'))
                    .and_then(|d| d.parse::<usize>().ok())
                    .filter(|&d| d >= 1)
                    .ok_or_else(|| Error::parse(0, format!("unknown Hopf algebra `{other}`")))?;
                Ok(HopfKind::Tensor(d))
            }
        }
    }
}

/// `coeff · left ⊗ right`, with legs given by basis position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoproductTerm {
    pub coeff: i64,
    pub left: usize,
    pub right: usize,
}

/// A graded connected Hopf algebra materialized up to degree `truncation`.
pub struct HopfStructure {
    kind: HopfKind,
    truncation: usize,
    basis: Vec<BasisElement>,
    index: HashMap<BasisElement, usize>,
    /// `degree_start[n]..degree_start[n+1]` are the positions of degree `n`.
    degree_start: Vec<usize>,
    coproduct: Vec<Vec<CoproductTerm>>,
    antipode: Vec<Vec<(i64, usize)>>,
    /// Generator factorization of each basis element (trees or letters).
    factors: Vec<Vec<usize>>,
}

impl fmt::Debug for HopfStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HopfStructure")
            .field("kind", &self.kind)
            .field("truncation", &self.truncation)
            .field("dimension", &self.basis.len())
            .finish()
    }
}

impl HopfStructure {
    pub fn new(kind: HopfKind, truncation: usize) -> Result<Arc<Self>> {
        match kind {
            HopfKind::ConnesKreimer => Self::connes_kreimer(truncation),
            HopfKind::Tensor(d) => Self::tensor(d, truncation),
        }
    }

    pub fn connes_kreimer(truncation: usize) -> Result<Arc<Self>> {
        if truncation > MAX_ENUMERATION_ORDER {
            return Err(Error::ResourceLimit(format!(
                "Connes-Kreimer truncation is capped at {MAX_ENUMERATION_ORDER}"
            )));
        }
        let trees = enumerate_trees(truncation)?;
        let basis: Vec<BasisElement> = (0..=truncation)
            .flat_map(|n| forests_of_degree(&trees, n))
            .map(BasisElement::Forest)
            .collect();
        let mut cop_memo = HashMap::new();
        let mut ant_memo = HashMap::new();
        Ok(Arc::new(Self::assemble(
            HopfKind::ConnesKreimer,
            truncation,
            basis,
            |b| {
                let f = b.as_forest().unwrap();
                ck_coproduct_memo(f, &mut cop_memo)
                    .into_iter()
                    .map(|(c, l, r)| (c, l.into(), r.into()))
                    .collect()
            },
            |b| ck_antipode_memo(b.as_forest().unwrap(), &mut ant_memo),
            |b| {
                b.as_forest()
                    .unwrap()
                    .trees()
                    .iter()
                    .map(|t| BasisElement::from(t.clone()))
                    .collect()
            },
        )))
    }

    pub fn tensor(dim: usize, truncation: usize) -> Result<Arc<Self>> {
        if dim == 0 {
            return Err(Error::Domain("tensor algebra needs dimension ≥ 1".into()));
        }
        let mut size: usize = 0;
        let mut level: usize = 1;
        for _ in 0..=truncation {
            size = size.saturating_add(level);
            level = level.saturating_mul(dim);
        }
        if size > MAX_TENSOR_BASIS || dim > u16::MAX as usize {
            return Err(Error::ResourceLimit(format!(
                "tensor({dim}) truncated at {truncation} has too many basis words"
            )));
        }
        let mut basis = Vec::with_capacity(size);
        let mut words = vec![Word::empty()];
        for _ in 0..=truncation {
            basis.extend(words.iter().cloned().map(BasisElement::Word));
            words = words
                .iter()
                .flat_map(|w| {
                    (0..dim as u16).map(move |l| {
                        let mut v = w.0.clone();
                        v.push(l);
                        Word(v)
                    })
                })
                .collect();
        }
        Ok(Arc::new(Self::assemble(
            HopfKind::Tensor(dim),
            truncation,
            basis,
            |b| {
                tensor_coproduct(b.as_word().unwrap())
                    .into_iter()
                    .map(|(c, l, r)| (c, l.into(), r.into()))
                    .collect()
            },
            |b| tensor_antipode(b.as_word().unwrap()),
            |b| {
                b.as_word()
                    .unwrap()
                    .letters()
                    .iter()
                    .map(|&l| Word(vec![l]).into())
                    .collect()
            },
        )))
    }

    fn assemble(
        kind: HopfKind,
        truncation: usize,
        basis: Vec<BasisElement>,
        mut coproduct: impl FnMut(&BasisElement) -> Vec<(i64, BasisElement, BasisElement)>,
        mut antipode: impl FnMut(&BasisElement) -> GradedVector,
        factors: impl Fn(&BasisElement) -> Vec<BasisElement>,
    ) -> Self {
        let index: HashMap<BasisElement, usize> = basis
            .iter()
            .enumerate()
            .map(|(i, b)| (b.clone(), i))
            .collect();
        let mut degree_start = vec![0; truncation + 2];
        for b in &basis {
            degree_start[b.degree() + 1] += 1;
        }
        for n in 1..degree_start.len() {
            degree_start[n] += degree_start[n - 1];
        }
        let coproduct = basis
            .iter()
            .map(|b| {
                coproduct(b)
                    .into_iter()
                    .map(|(coeff, l, r)| CoproductTerm {
                        coeff,
                        left: index[&l],
                        right: index[&r],
                    })
                    .collect()
            })
            .collect();
        let antipode = basis
            .iter()
            .map(|b| {
                antipode(b)
                    .terms()
                    .map(|(e, c)| (integral(c), index[e]))
                    .collect()
            })
            .collect();
        let factors = basis
            .iter()
            .map(|b| factors(b).iter().map(|g| index[g]).collect())
            .collect();
        HopfStructure {
            kind,
            truncation,
            basis,
            index,
            degree_start,
            coproduct,
            antipode,
            factors,
        }
    }

    pub fn kind(&self) -> HopfKind {
        self.kind
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    /// Number of basis elements of degree ≤ truncation.
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn element(&self, i: usize) -> &BasisElement {
        &self.basis[i]
    }

    pub fn index_of(&self, b: &BasisElement) -> Option<usize> {
        self.index.get(b).copied()
    }

    /// Position of `b`, or an error naming why it is not in this structure.
    pub fn position(&self, b: &BasisElement) -> Result<usize> {
        if let Some(i) = self.index_of(b) {
            return Ok(i);
        }
        if b.degree() > self.truncation {
            return Err(Error::TruncationOverflow {
                degree: b.degree(),
                truncation: self.truncation,
            });
        }
        Err(Error::Incompatible(format!("`{b}` is not a basis element of {}", self.kind)))
    }

    pub fn degree(&self, i: usize) -> usize {
        self.basis[i].degree()
    }

    /// Positions of the basis elements of degree `n`.
    pub fn degree_range(&self, n: usize) -> Range<usize> {
        if n > self.truncation {
            let end = self.basis.len();
            return end..end;
        }
        self.degree_start[n]..self.degree_start[n + 1]
    }

    pub fn unit_index(&self) -> usize {
        0
    }

    pub fn coproduct(&self, i: usize) -> &[CoproductTerm] {
        &self.coproduct[i]
    }

    pub fn antipode(&self, i: usize) -> &[(i64, usize)] {
        &self.antipode[i]
    }

    pub fn counit(&self, i: usize) -> i64 {
        i64::from(self.basis[i].is_unit())
    }

    /// Factorization into algebra generators (single trees, single letters),
    /// in canonical order; empty for the unit.
    pub fn factors(&self, i: usize) -> &[usize] {
        &self.factors[i]
    }

    /// True for the free algebra generators: single trees, single letters.
    pub fn is_generator(&self, i: usize) -> bool {
        self.factors[i].len() == 1
    }

    /// Position of `b_i · b_j`, or `None` when it lies above the truncation.
    pub fn product(&self, i: usize, j: usize) -> Option<usize> {
        if self.degree(i) + self.degree(j) > self.truncation {
            return None;
        }
        let p = multiply_basis(&self.basis[i], &self.basis[j]);
        Some(self.index[&p])
    }

    /// Product of two basis elements as a vector; errors when the product
    /// degree exceeds the truncation.
    pub fn algebra_product(&self, a: &BasisElement, b: &BasisElement) -> Result<GradedVector> {
        let i = self.position(a)?;
        let j = self.position(b)?;
        let degree = a.degree() + b.degree();
        let k = self.product(i, j).ok_or(Error::TruncationOverflow {
            degree,
            truncation: self.truncation,
        })?;
        Ok(GradedVector::basis(self.basis[k].clone()))
    }

    pub fn parse_basis(&self, text: &str) -> Result<BasisElement> {
        self.kind.parse_basis(text)
    }

    /// Coproduct of a basis element as explicit terms.
    pub fn coproduct_terms(&self, b: &BasisElement) -> Result<Vec<(i64, BasisElement, BasisElement)>> {
        let i = self.position(b)?;
        Ok(self.coproduct[i]
            .iter()
            .map(|t| (t.coeff, self.basis[t.left].clone(), self.basis[t.right].clone()))
            .collect())
    }

    /// Antipode of a basis element as a vector.
    pub fn antipode_vector(&self, b: &BasisElement) -> Result<GradedVector> {
        let i = self.position(b)?;
        let mut v = GradedVector::new();
        for &(c, k) in &self.antipode[i] {
            v.add_int_term(self.basis[k].clone(), c);
        }
        Ok(v)
    }

    /// Structures agree when they realize the same algebra at the same
    /// truncation; positions are then identical.
    pub fn same_as(&self, other: &HopfStructure) -> bool {
        self.kind == other.kind && self.truncation == other.truncation
    }
}

fn integral(c: &BigRational) -> i64 {
    assert!(c.is_integer(), "structure constant {c} is not an integer");
    i64::try_from(c.to_integer()).expect("structure constant overflows i64")
}

/// Forest union or word concatenation. Panics on mixed kinds.
pub fn multiply_basis(a: &BasisElement, b: &BasisElement) -> BasisElement {
    match (a, b) {
        (BasisElement::Forest(x), BasisElement::Forest(y)) => BasisElement::Forest(x.union(y)),
        (BasisElement::Word(x), BasisElement::Word(y)) => BasisElement::Word(x.concat(y)),
        _ => panic!("cannot multiply a forest with a word"),
    }
}

fn combine<K: Ord>(terms: impl IntoIterator<Item = (i64, K)>) -> Vec<(i64, K)> {
    let mut acc: BTreeMap<K, i64> = BTreeMap::new();
    for (c, k) in terms {
        *acc.entry(k).or_insert(0) += c;
    }
    acc.into_iter()
        .filter(|(_, c)| *c != 0)
        .map(|(k, c)| (c, k))
        .collect()
}

/// Coproduct on the forest basis: `Σ_{s∈OST(τ)} (τ∖s) ⊗ s_τ` for a tree,
/// extended multiplicatively. Equal tensor pairs are combined.
pub fn ck_coproduct(f: &Forest) -> Vec<(i64, Forest, Forest)> {
    ck_coproduct_memo(f, &mut HashMap::new())
}

type CkCoproduct = Vec<(i64, Forest, Forest)>;

fn ck_coproduct_memo(f: &Forest, memo: &mut HashMap<RootedTree, CkCoproduct>) -> CkCoproduct {
    let mut acc: CkCoproduct = vec![(1, Forest::empty(), Forest::empty())];
    for tree in f.trees() {
        let tree_terms = memo
            .entry(tree.clone())
            .or_insert_with(|| {
                combine(
                    ordered_subtrees(tree)
                        .into_iter()
                        .map(|cut| (1, (cut.pruned, cut.trunk))),
                )
                .into_iter()
                .map(|(c, (l, r))| (c, l, r))
                .collect()
            })
            .clone();
        acc = combine(acc.iter().flat_map(|(c1, l1, r1)| {
            tree_terms
                .iter()
                .map(move |(c2, l2, r2)| (c1 * c2, (l1.union(l2), r1.union(r2))))
        }))
        .into_iter()
        .map(|(c, (l, r))| (c, l, r))
        .collect();
    }
    acc
}

/// Antipode on the forest basis: `Σ_{p∈𝒫(τ)} (-1)^{|p_τ|} (τ∖p)` for a
/// tree, extended multiplicatively (the algebra is commutative).
pub fn ck_antipode(f: &Forest) -> GradedVector {
    ck_antipode_memo(f, &mut HashMap::new())
}

fn ck_antipode_memo(f: &Forest, memo: &mut HashMap<RootedTree, Vec<(i64, Forest)>>) -> GradedVector {
    let mut acc: Vec<(i64, Forest)> = vec![(1, Forest::empty())];
    for tree in f.trees() {
        let tree_terms = memo
            .entry(tree.clone())
            .or_insert_with(|| {
                combine(edge_partitions(tree).into_iter().map(|p| {
                    let sign = if p.skeleton.order() % 2 == 0 { 1 } else { -1 };
                    (sign, p.forest)
                }))
            })
            .clone();
        acc = combine(
            acc.iter()
                .flat_map(|(c1, f1)| tree_terms.iter().map(move |(c2, f2)| (c1 * c2, f1.union(f2)))),
        );
    }
    let mut v = GradedVector::new();
    for (c, f) in acc {
        v.add_int_term(f.into(), c);
    }
    v
}

/// 1 on the empty forest, 0 elsewhere.
pub fn ck_counit(f: &Forest) -> i64 {
    i64::from(f.is_empty())
}

/// Unshuffle coproduct: one term per subset of positions, the subset forming
/// the left leg and its complement the right leg, both in original order.
pub fn tensor_coproduct(w: &Word) -> Vec<(i64, Word, Word)> {
    let n = w.len();
    assert!(n < 32, "word too long for subset enumeration");
    combine((0u32..1 << n).map(|mask| {
        let (mut left, mut right) = (Vec::new(), Vec::new());
        for (i, &l) in w.letters().iter().enumerate() {
            if mask & (1 << i) != 0 {
                left.push(l);
            } else {
                right.push(l);
            }
        }
        (1, (Word(left), Word(right)))
    }))
    .into_iter()
    .map(|(c, (l, r))| (c, l, r))
    .collect()
}

/// `S(w) = (-1)^|w| · reverse(w)`.
pub fn tensor_antipode(w: &Word) -> GradedVector {
    let sign = if w.len().is_multiple_of(2) { 1 } else { -1 };
    let mut v = GradedVector::new();
    v.add_int_term(w.reversed().into(), sign);
    v
}
