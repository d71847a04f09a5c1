//! Rooted trees and forests in canonical form.
//!
//! A tree is written in bracket notation: `[]` is the single node, `[[]]` the
//! 2-chain, `[[] []]` the cherry. The canonical serialization sorts the
//! children of every node in *descending* byte-lexicographic order of their
//! own canonical serializations and separates them with one space. Trees are
//! ordered by comparing canonical serializations, so `[]` is the largest
//! tree of all and children lists always start with leaves.
//!
//! Forests are multisets of trees, kept in the same descending order. The
//! empty forest is the unit of the Connes–Kreimer algebra and serializes as
//! `1`.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};

/// Orders above this are refused by the enumerators.
pub const MAX_ENUMERATION_ORDER: usize = 12;

/// Largest tree accepted by the subset-based enumerations.
const MAX_SUBSET_ORDER: usize = 20;

#[derive(Clone)]
pub struct RootedTree {
    children: Vec<RootedTree>,
    order: usize,
    repr: Arc<str>,
}

impl RootedTree {
    /// The single-node tree `•`.
    pub fn leaf() -> Self {
        RootedTree::from_children(Vec::new())
    }

    /// A root with the given subtrees attached, in any order.
    pub fn from_children(mut children: Vec<RootedTree>) -> Self {
        children.sort_by(|a, b| b.cmp(a));
        let order = 1 + children.iter().map(|c| c.order).sum::<usize>();
        let mut repr = String::with_capacity(3 * order);
        repr.push('[');
        for (i, c) in children.iter().enumerate() {
            if i > 0 {
                repr.push(' ');
            }
            repr.push_str(&c.repr);
        }
        repr.push(']');
        RootedTree {
            children,
            order,
            repr: repr.into(),
        }
    }

    /// The chain with `n ≥ 1` nodes.
    pub fn chain(n: usize) -> Self {
        assert!(n >= 1, "a chain has at least one node");
        (1..n).fold(RootedTree::leaf(), |t, _| RootedTree::from_children(vec![t]))
    }

    /// Number of nodes.
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn children(&self) -> &[RootedTree] {
        &self.children
    }

    pub fn as_str(&self) -> &str {
        &self.repr
    }

    /// Flattens the tree into a preorder vertex table (root is vertex 0).
    fn vertices(&self) -> Vertices {
        let mut v = Vertices {
            parent: Vec::with_capacity(self.order),
            children: Vec::with_capacity(self.order),
        };
        fn walk(t: &RootedTree, parent: Option<usize>, v: &mut Vertices) {
            let id = v.parent.len();
            v.parent.push(parent);
            v.children.push(Vec::new());
            if let Some(p) = parent {
                v.children[p].push(id);
            }
            for c in &t.children {
                walk(c, Some(id), v);
            }
        }
        walk(self, None, &mut v);
        v
    }
}

impl PartialEq for RootedTree {
    fn eq(&self, other: &Self) -> bool {
        self.repr == other.repr
    }
}

impl Eq for RootedTree {}

impl Hash for RootedTree {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.repr.hash(state);
    }
}

impl Ord for RootedTree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.repr.as_bytes().cmp(other.repr.as_bytes())
    }
}

impl PartialOrd for RootedTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.repr)
    }
}

impl fmt::Debug for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootedTree({})", self.repr)
    }
}

/// A multiset of rooted trees: a monomial of the Connes–Kreimer algebra.
#[derive(Clone)]
pub struct Forest {
    trees: Vec<RootedTree>,
    degree: usize,
    repr: Arc<str>,
}

impl Forest {
    pub fn empty() -> Self {
        Forest::from_trees(Vec::new())
    }

    pub fn single(tree: RootedTree) -> Self {
        Forest::from_trees(vec![tree])
    }

    pub fn from_trees(mut trees: Vec<RootedTree>) -> Self {
        trees.sort_by(|a, b| b.cmp(a));
        let degree = trees.iter().map(RootedTree::order).sum();
        let repr: String = if trees.is_empty() {
            "1".into()
        } else {
            trees
                .iter()
                .map(RootedTree::as_str)
                .collect::<Vec<_>>()
                .join(" ")
        };
        Forest {
            trees,
            degree,
            repr: repr.into(),
        }
    }

    /// Total node count.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn trees(&self) -> &[RootedTree] {
        &self.trees
    }

    /// Number of trees in the forest.
    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    /// The single tree, if this forest is one.
    pub fn as_tree(&self) -> Option<&RootedTree> {
        match self.trees.as_slice() {
            [t] => Some(t),
            _ => None,
        }
    }

    /// Multiset union, the product of the Connes–Kreimer algebra.
    pub fn union(&self, other: &Forest) -> Forest {
        if self.is_empty() {
            return other.clone();
        }
        if other.is_empty() {
            return self.clone();
        }
        Forest::from_trees(self.trees.iter().chain(&other.trees).cloned().collect())
    }

    pub fn as_str(&self) -> &str {
        &self.repr
    }
}

impl PartialEq for Forest {
    fn eq(&self, other: &Self) -> bool {
        self.repr == other.repr
    }
}

impl Eq for Forest {}

impl Hash for Forest {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.repr.hash(state);
    }
}

impl Ord for Forest {
    fn cmp(&self, other: &Self) -> Ordering {
        self.repr.as_bytes().cmp(other.repr.as_bytes())
    }
}

impl PartialOrd for Forest {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.repr)
    }
}

impl fmt::Debug for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Forest({})", self.repr)
    }
}

impl From<RootedTree> for Forest {
    fn from(t: RootedTree) -> Self {
        Forest::single(t)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn tree(&mut self, depth: usize) -> Result<RootedTree> {
        if depth > 4096 {
            return Err(Error::ResourceLimit("tree nesting too deep".into()));
        }
        match self.src.get(self.pos) {
            Some(b'[') => self.pos += 1,
            Some(&c) => {
                return Err(Error::parse(
                    self.pos,
                    format!("expected `[`, found `{}`", c as char),
                ))
            }
            None => return Err(Error::parse(self.pos, "expected `[`, found end of input")),
        }
        let mut children = Vec::new();
        loop {
            self.skip_ws();
            match self.src.get(self.pos) {
                Some(b']') => {
                    self.pos += 1;
                    return Ok(RootedTree::from_children(children));
                }
                Some(b'[') => children.push(self.tree(depth + 1)?),
                Some(&c) => {
                    return Err(Error::parse(
                        self.pos,
                        format!("unexpected `{}` inside tree", c as char),
                    ))
                }
                None => return Err(Error::parse(self.pos, "unclosed `[`")),
            }
        }
    }
}

/// Parses one tree in bracket notation, e.g. `[[] [[]]]`.
pub fn parse_tree(text: &str) -> Result<RootedTree> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    p.skip_ws();
    let t = p.tree(0)?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(Error::parse(p.pos, "trailing input after tree"));
    }
    Ok(t)
}

/// Parses a forest: `1` for the empty forest, otherwise whitespace-separated
/// trees.
pub fn parse_forest(text: &str) -> Result<Forest> {
    if text.trim() == "1" {
        return Ok(Forest::empty());
    }
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut trees = Vec::new();
    p.skip_ws();
    while p.pos < p.src.len() {
        trees.push(p.tree(0)?);
        p.skip_ws();
    }
    if trees.is_empty() {
        return Err(Error::parse(0, "empty forest must be written `1`"));
    }
    Ok(Forest::from_trees(trees))
}

/// All canonical trees of orders `1..=max_order`; entry `k` holds order `k+1`,
/// each list sorted ascending.
pub fn enumerate_trees(max_order: usize) -> Result<Vec<Vec<RootedTree>>> {
    if max_order > MAX_ENUMERATION_ORDER {
        return Err(Error::ResourceLimit(format!(
            "tree enumeration is capped at order {MAX_ENUMERATION_ORDER}, requested {max_order}"
        )));
    }
    let mut by_order: Vec<Vec<RootedTree>> = Vec::with_capacity(max_order);
    for n in 1..=max_order {
        // every tree of order n is a root over a multiset of smaller trees
        let pool: Vec<&RootedTree> = by_order.iter().flatten().collect();
        let mut out: Vec<RootedTree> = multisets(&pool, n - 1)
            .into_iter()
            .map(RootedTree::from_children)
            .collect();
        out.sort();
        by_order.push(out);
    }
    Ok(by_order)
}

/// All forests of degree exactly `degree`, sorted ascending; `trees` must
/// contain every tree up to that order (as returned by [`enumerate_trees`]).
pub fn forests_of_degree(trees: &[Vec<RootedTree>], degree: usize) -> Vec<Forest> {
    if degree == 0 {
        return vec![Forest::empty()];
    }
    let pool: Vec<&RootedTree> = trees.iter().take(degree).flatten().collect();
    let mut out: Vec<Forest> = multisets(&pool, degree)
        .into_iter()
        .map(Forest::from_trees)
        .collect();
    out.sort();
    out
}

/// Multisets drawn from `pool` with total order `target`. Each multiset is
/// produced once, as a non-decreasing index sequence.
fn multisets(pool: &[&RootedTree], target: usize) -> Vec<Vec<RootedTree>> {
    fn go(
        pool: &[&RootedTree],
        start: usize,
        remaining: usize,
        current: &mut Vec<RootedTree>,
        out: &mut Vec<Vec<RootedTree>>,
    ) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        for i in start..pool.len() {
            let t = pool[i];
            if t.order() <= remaining {
                current.push(t.clone());
                go(pool, i, remaining - t.order(), current, out);
                current.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(pool, 0, target, &mut Vec::new(), &mut out);
    out
}

struct Vertices {
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
}

impl Vertices {
    fn len(&self) -> usize {
        self.parent.len()
    }

    /// Canonical tree rooted at `v`, following only children accepted by
    /// `keep`.
    fn subtree(&self, v: usize, keep: &dyn Fn(usize) -> bool) -> RootedTree {
        RootedTree::from_children(
            self.children[v]
                .iter()
                .filter(|&&c| keep(c))
                .map(|&c| self.subtree(c, keep))
                .collect(),
        )
    }
}

fn check_subset_order(tau: &RootedTree) {
    assert!(
        tau.order() <= MAX_SUBSET_ORDER,
        "subset enumeration is limited to trees of order {MAX_SUBSET_ORDER}"
    );
}

/// One summand of the coproduct of a tree: the forest cut away and the
/// root-containing trunk that remains (empty forest when nothing remains).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cut {
    pub pruned: Forest,
    pub trunk: Forest,
}

/// Ordered subtrees: every vertex subset that is empty or contains the root
/// and is closed under taking parents (equivalently, is connected). Distinct
/// subsets giving equal pairs are all kept.
pub fn ordered_subtrees(tau: &RootedTree) -> Vec<Cut> {
    check_subset_order(tau);
    let v = tau.vertices();
    let n = v.len();
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << n) {
        let inside = |x: usize| mask & (1 << x) != 0;
        if mask != 0 && !inside(0) {
            continue;
        }
        let closed = (1..n).all(|x| !inside(x) || inside(v.parent[x].unwrap()));
        if !closed {
            continue;
        }
        let cut_roots = (0..n).filter(|&x| {
            !inside(x)
                && match v.parent[x] {
                    None => true,
                    Some(p) => inside(p),
                }
        });
        let pruned = Forest::from_trees(cut_roots.map(|r| v.subtree(r, &|_| true)).collect());
        let trunk = if mask == 0 {
            Forest::empty()
        } else {
            Forest::single(v.subtree(0, &inside))
        };
        out.push(Cut { pruned, trunk });
    }
    out
}

/// One summand of the antipode formula: the forest left after deleting the
/// chosen edges, and the skeleton obtained by contracting each of its trees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    pub forest: Forest,
    pub skeleton: RootedTree,
}

/// One entry per subset of the edge set, `2^(|τ|-1)` in total.
pub fn edge_partitions(tau: &RootedTree) -> Vec<Partition> {
    check_subset_order(tau);
    let v = tau.vertices();
    let n = v.len();
    // edge x joins parent[x] to x, for x in 1..n; bit x-1 of the mask
    let mut out = Vec::with_capacity(1 << (n - 1));
    for mask in 0u32..(1u32 << (n - 1)) {
        let cut = |x: usize| x > 0 && mask & (1 << (x - 1)) != 0;
        let is_component_root = |x: usize| x == 0 || cut(x);
        let roots: Vec<usize> = (0..n).filter(|&x| is_component_root(x)).collect();
        let forest = Forest::from_trees(
            roots
                .iter()
                .map(|&r| v.subtree(r, &|c| !cut(c)))
                .collect(),
        );
        let component_root = |mut x: usize| {
            while !is_component_root(x) {
                x = v.parent[x].unwrap();
            }
            x
        };
        fn skeleton(
            r: usize,
            roots: &[usize],
            parent_component: &dyn Fn(usize) -> usize,
        ) -> RootedTree {
            RootedTree::from_children(
                roots
                    .iter()
                    .filter(|&&c| c != 0 && parent_component(c) == r)
                    .map(|&c| skeleton(c, roots, parent_component))
                    .collect(),
            )
        }
        let parent_component = |c: usize| component_root(v.parent[c].unwrap());
        out.push(Partition {
            forest,
            skeleton: skeleton(0, &roots, &parent_component),
        });
    }
    out
}

/// Grafts `upsilon` onto the root of `tau`: `τ ∘ υ`.
pub fn butcher_product(tau: &RootedTree, upsilon: &RootedTree) -> RootedTree {
    let mut children = tau.children.clone();
    children.push(upsilon.clone());
    RootedTree::from_children(children)
}
