//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line per
//! criterion with its runtime, and exits non-zero if any criterion fails.

mod common;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Display;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use chargroup::characters::{
    butcher_compose, butcher_inverse, char_exp, char_from_tree_values, char_inv, char_log, char_mul,
    is_character, is_infinitesimal, lie_bracket, tensor_char_from_vector, tensor_char_group_iso,
    tree_values, Character, InfinitesimalCharacter, TreeValues,
};
use chargroup::evolution::{evol, evolve, Evolution, FunctionalCurve};
use chargroup::funcalc::{apply_series, bch, exp, log, FormalSeries};
use chargroup::functional::TruncatedFunctional;
use chargroup::hopf::{GradedVector, HopfStructure};
use chargroup::ideals::{
    annihilates, is_symplectic, random_symplectic_infinitesimal, random_symplectic_tree_values,
    symplectic_generators,
};
use chargroup::ring::{Rational, Ring, TruncatedSeries};
use chargroup::sample::{
    random_augmented, random_character, random_functional, random_infinitesimal, random_invertible,
    random_rational, random_tree_values, random_unipotent, SampleRing,
};
use chargroup::trees::enumerate_trees;
use common::{
    antipode_by_recursion, apply_series_raw, brute_force_trees, coassociativity_sides,
    inverse_by_recursion, rational, vanishes_on_ideal_span,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)*) => {
        if !$cond {
            return Err(format!($($msg)*));
        }
    };
}

/// Turns library errors into failure messages.
trait OrFail<T> {
    fn or_fail(self) -> Result<T, String>;
}

impl<T, E: Display> OrFail<T> for Result<T, E> {
    fn or_fail(self) -> Result<T, String> {
        self.map_err(|e| e.to_string())
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn ck(n: usize) -> Arc<HopfStructure> {
    HopfStructure::connes_kreimer(n).expect("ck structure")
}

fn tensor(d: usize, n: usize) -> Arc<HopfStructure> {
    HopfStructure::tensor(d, n).expect("tensor structure")
}

fn hopf_axioms() -> Outcome {
    let mut checked = 0;
    for h in [ck(6), tensor(2, 6)] {
        let mut memo = HashMap::new();
        for i in 0..h.dimension() {
            let b = h.element(i);
            // counit through degree 6
            let mut left = BTreeMap::new();
            let mut right = BTreeMap::new();
            for t in h.coproduct(i) {
                *left.entry(t.right).or_insert(0) += t.coeff * h.counit(t.left);
                *right.entry(t.left).or_insert(0) += t.coeff * h.counit(t.right);
            }
            left.retain(|_, c| *c != 0);
            right.retain(|_, c| *c != 0);
            ensure!(left == BTreeMap::from([(i, 1)]), "counit fails at {b}");
            ensure!(right == BTreeMap::from([(i, 1)]), "counit fails at {b}");
            if h.degree(i) > 5 {
                continue;
            }
            let (l, r) = coassociativity_sides(&h, i);
            ensure!(l == r, "coassociativity fails at {} in {}", b, h.kind());
            let mut sl = BTreeMap::new();
            let mut sr = BTreeMap::new();
            for t in h.coproduct(i) {
                for &(c, k) in h.antipode(t.left) {
                    *sl.entry(h.product(k, t.right).unwrap()).or_insert(0) += t.coeff * c;
                }
                for &(c, k) in h.antipode(t.right) {
                    *sr.entry(h.product(t.left, k).unwrap()).or_insert(0) += t.coeff * c;
                }
            }
            sl.retain(|_, c| *c != 0);
            sr.retain(|_, c| *c != 0);
            let expected = if b.is_unit() { BTreeMap::from([(i, 1)]) } else { BTreeMap::new() };
            ensure!(sl == expected && sr == expected, "antipode axiom fails at {b}");
            let mut table = GradedVector::new();
            for &(c, k) in h.antipode(i) {
                table.add_int_term(h.element(k).clone(), c);
            }
            ensure!(table == antipode_by_recursion(b, &mut memo), "antipode of {b} disagrees with the recursion");
            checked += 1;
        }
    }
    Ok(format!("{checked} basis elements of degree ≤ 5 across ck and tensor(2)"))
}

fn tree_enumeration() -> Outcome {
    let oracle = brute_force_trees(8);
    let trees = enumerate_trees(8).or_fail()?;
    let counts: Vec<usize> = trees.iter().map(Vec::len).collect();
    for (k, (ours, theirs)) in trees.iter().zip(&oracle).enumerate() {
        let ours: BTreeSet<String> = ours.iter().map(ToString::to_string).collect();
        ensure!(ours.len() == trees[k].len(), "duplicate trees at order {}", k + 1);
        ensure!(&ours == theirs, "order {} differs from the brute-force oracle", k + 1);
    }
    ensure!(counts[..5] == [1, 1, 2, 4, 9], "counts start {:?}", &counts[..5]);
    Ok(format!("counts {counts:?}"))
}

fn conv_laws<R: SampleRing>(ctx: &R::Context, seed: u64) -> Result<(), String> {
    let h = ck(6);
    let mut g = rng(seed);
    let unit = TruncatedFunctional::<R>::unit(&h, ctx);
    for _ in 0..100 {
        let a = random_invertible::<R, _>(&h, ctx, &mut g);
        let b = random_functional::<R, _>(&h, ctx, &mut g);
        let c = random_functional::<R, _>(&h, ctx, &mut g);
        let ab_c = a.convolve(&b).or_fail()?.convolve(&c).or_fail()?;
        let a_bc = a.convolve(&b.convolve(&c).or_fail()?).or_fail()?;
        ensure!(ab_c == a_bc, "associativity fails");
        ensure!(unit.convolve(&b).or_fail()? == b && b.convolve(&unit).or_fail()? == b, "unit law fails");
        let inv = a.inverse().or_fail()?;
        ensure!(a.convolve(&inv).or_fail()? == unit, "right inverse fails");
        ensure!(inv.convolve(&a).or_fail()? == unit, "left inverse fails");
        ensure!(inv == inverse_by_recursion(&a), "inverse disagrees with the recursive solve");
        // a = a₀(ε − x) with x = −a₀⁻¹(a − a₀ε), so a⁻¹ = a₀⁻¹ Σ x^k
        let a0 = a.degree_zero_value().clone();
        let a0_inv = a0.inverse().unwrap();
        let x = a.sub(&unit.scale(&a0)).or_fail()?.scale(&a0_inv.neg());
        let geometric = apply_series(&FormalSeries::geometric(h.truncation()), &x).or_fail()?.scale(&a0_inv);
        ensure!(geometric == inv, "geometric-series inverse disagrees");
    }
    Ok(())
}

fn convolution_algebra() -> Outcome {
    conv_laws::<Rational>(&(), 31)?;
    conv_laws::<TruncatedSeries>(&2, 32)?;
    Ok("100 triples over ℚ and 100 over ℚ[X]/X³ at N = 6".into())
}

fn random_series<G: Rng>(n: usize, g: &mut G) -> FormalSeries {
    FormalSeries::new((0..=n).map(|_| random_rational(g)).collect())
}

fn functional_calculus() -> Outcome {
    let mut g = rng(41);
    let n = 5;
    let instances = [ck(n), tensor(2, n)];
    for k in 0..100 {
        let h = &instances[k % 2];
        let (f, s) = (random_series(n, &mut g), random_series(n, &mut g));
        let fs = f.mul_truncated(&s, n);
        if k % 4 == 3 {
            let a = random_augmented::<TruncatedSeries, _>(h, &1, &mut g);
            let lhs = apply_series(&fs, &a).or_fail()?;
            let rhs = apply_series(&f, &a).or_fail()?.convolve(&apply_series(&s, &a).or_fail()?).or_fail()?;
            ensure!(lhs == rhs, "morphism law fails over series");
        } else {
            let a = random_augmented::<Rational, _>(h, &(), &mut g);
            let lhs = apply_series(&fs, &a).or_fail()?;
            let rhs = apply_series(&f, &a).or_fail()?.convolve(&apply_series(&s, &a).or_fail()?).or_fail()?;
            ensure!(lhs == rhs, "morphism law fails");
        }
    }
    let big = [ck(6), tensor(2, 6)];
    for k in 0..100 {
        let h = &big[k % 2];
        if k % 2 == 0 {
            let a = random_augmented::<Rational, _>(h, &(), &mut g);
            ensure!(log(&exp(&a).or_fail()?).or_fail()? == a, "log∘exp ≠ id");
        } else {
            let u = random_unipotent::<Rational, _>(h, &(), &mut g);
            ensure!(exp(&log(&u).or_fail()?).or_fail()? == u, "exp∘log ≠ id");
        }
    }
    for k in 0..25 {
        let h = &instances[k % 2];
        let a = random_augmented::<Rational, _>(h, &(), &mut g);
        let f = random_series(n, &mut g);
        ensure!(apply_series(&f, &a).or_fail()? == apply_series_raw(&f, &a), "Horner ≠ raw composition sum");
    }
    Ok("100 morphism cases, 100 exp/log round trips, 25 Horner/raw comparisons".into())
}

fn character_bijection() -> Outcome {
    let mut g = rng(51);
    let instances = [ck(6), tensor(2, 6)];
    for k in 0..100 {
        let h = &instances[k % 2];
        let x = random_infinitesimal::<Rational, _>(h, &(), &mut g);
        let e = char_exp(&x).or_fail()?;
        ensure!(is_character(e.functional()), "exp of an infinitesimal character is not a character");
        let back = char_log(&e).or_fail()?;
        ensure!(is_infinitesimal(back.functional()), "log left the Lie algebra");
        ensure!(back == x, "char_log does not invert char_exp");
    }
    Ok("100 infinitesimal characters at N = 6".into())
}

fn single_degree(x: InfinitesimalCharacter<Rational>, p: usize) -> Result<InfinitesimalCharacter<Rational>, String> {
    InfinitesimalCharacter::new(x.functional().project(p)).or_fail()
}

fn bracket() -> Outcome {
    let mut g = rng(61);
    let instances = [ck(5), tensor(2, 5)];
    for k in 0..50 {
        let h = &instances[k % 2];
        let [x, y, z]: [InfinitesimalCharacter<Rational>; 3] =
            std::array::from_fn(|_| random_infinitesimal(h, &(), &mut g));
        let xy = lie_bracket(&x, &y).or_fail()?;
        ensure!(is_infinitesimal(xy.functional()), "bracket not closed");
        ensure!(xy.functional() == &lie_bracket(&y, &x).or_fail()?.functional().neg(), "bracket not antisymmetric");
        let jacobi = lie_bracket(&x, &lie_bracket(&y, &z).or_fail()?)
            .or_fail()?
            .add(&lie_bracket(&y, &lie_bracket(&z, &x).or_fail()?).or_fail()?)
            .or_fail()?
            .add(&lie_bracket(&z, &xy).or_fail()?)
            .or_fail()?;
        ensure!(jacobi.functional().is_zero(), "Jacobi identity fails");
    }
    let mut cases = 0;
    for h in &instances {
        for (p, q) in [(1, 1), (1, 2), (2, 1), (1, 3), (2, 2), (2, 3), (1, 4)] {
            let x = single_degree(random_infinitesimal(h, &(), &mut g), p)?;
            let y = single_degree(random_infinitesimal(h, &(), &mut g), q)?;
            let z = bch(x.functional(), y.functional()).or_fail()?;
            let second = z.sub(x.functional()).or_fail()?.sub(y.functional()).or_fail()?.project(p + q);
            let half = lie_bracket(&x, &y).or_fail()?.functional().scale_rational(&rational(1, 2)).or_fail()?;
            ensure!(second == half, "BCH degree-{} part ≠ ½[x,y] for degrees {p}, {q}", p + q);
            cases += 1;
        }
    }
    Ok(format!("50 triples at N = 5, {cases} BCH cases"))
}

fn butcher() -> Outcome {
    let mut g = rng(71);
    let h = ck(6);
    for _ in 0..100 {
        let a = random_tree_values::<Rational, _>(&(), 6, &mut g);
        let b = random_tree_values::<Rational, _>(&(), 6, &mut g);
        let (pa, pb) = (char_from_tree_values(&h, &a).or_fail()?, char_from_tree_values(&h, &b).or_fail()?);
        let via_group = tree_values(char_mul(&pa, &pb).or_fail()?.functional()).or_fail()?;
        ensure!(butcher_compose(&a, &b).or_fail()? == via_group, "Butcher composition disagrees");
        let inv = tree_values(char_inv(&pa).functional()).or_fail()?;
        ensure!(butcher_inverse(&a).or_fail()? == inv, "Butcher inverse disagrees");
    }
    Ok("100 pairs at N = 6".into())
}

fn annihilating(c: &impl AsRef<TruncatedFunctional<Rational>>, ideal: &chargroup::ideals::HopfIdealSpec) -> Result<bool, String> {
    Ok(annihilates(c.as_ref(), ideal).or_fail()?.is_none())
}

fn ideal_subgroup() -> Outcome {
    let mut g = rng(81);
    let n = 6;
    let h = ck(n);
    let ideal = symplectic_generators(n).or_fail()?;
    for _ in 0..50 {
        let a = char_from_tree_values(&h, &random_symplectic_tree_values(n, &mut g).or_fail()?).or_fail()?;
        let b = char_from_tree_values(&h, &random_symplectic_tree_values(n, &mut g).or_fail()?).or_fail()?;
        ensure!(annihilating(&a, &ideal)?, "sampled symplectic character does not annihilate");
        ensure!(annihilating(&char_mul(&a, &b).or_fail()?, &ideal)?, "not closed under mul");
        ensure!(annihilating(&char_inv(&a), &ideal)?, "not closed under inv");
        let la = char_log(&a).or_fail()?;
        ensure!(annihilating(&la, &ideal)?, "log leaves the annihilator");
        let x = random_symplectic_infinitesimal(&h, &mut g).or_fail()?;
        let y = random_symplectic_infinitesimal(&h, &mut g).or_fail()?;
        ensure!(annihilating(&x, &ideal)?, "sampled symplectic infinitesimal does not annihilate");
        ensure!(annihilating(&lie_bracket(&x, &y).or_fail()?, &ideal)?, "not closed under bracket");
        let ex = char_exp(&x).or_fail()?;
        ensure!(annihilating(&ex, &ideal)?, "exp leaves the annihilator");
        ensure!(char_log(&ex).or_fail()? == x, "log does not invert exp on the subgroup");
    }
    let mut agree = [0usize; 2];
    for k in 0..200 {
        let mut a = match k % 3 {
            0 => random_tree_values::<Rational, _>(&(), n, &mut g),
            _ => random_symplectic_tree_values(n, &mut g).or_fail()?,
        };
        if k % 3 == 2 {
            // perturb one tree of random order
            let trees: Vec<_> = enumerate_trees(n).or_fail()?.into_iter().flatten().collect();
            let t = trees[g.gen_range(0..trees.len())].clone();
            let v = a.get(&t).add(&Rational::integer(1));
            a.set(t, v).or_fail()?;
        }
        let direct = is_symplectic(&a).or_fail()?;
        let via_ideal = annihilating(&char_from_tree_values(&h, &a).or_fail()?, &ideal)?;
        ensure!(direct == via_ideal, "is_symplectic and annihilates disagree");
        agree[direct as usize] += 1;
    }
    ensure!(agree[0] > 0 && agree[1] > 0, "only one outcome sampled: {agree:?}");
    let h4 = ck(4);
    let ideal4 = symplectic_generators(4).or_fail()?;
    for k in 0..60 {
        let phi = match k % 4 {
            0 => char_from_tree_values(&h4, &random_symplectic_tree_values(4, &mut g).or_fail()?).or_fail()?.into_functional(),
            1 => random_character::<Rational, _>(&h4, &(), &mut g).into_functional(),
            2 => random_symplectic_infinitesimal(&h4, &mut g).or_fail()?.into_functional(),
            _ => random_infinitesimal::<Rational, _>(&h4, &(), &mut g).into_functional(),
        };
        let short = annihilates(&phi, &ideal4).or_fail()?.is_none();
        ensure!(short == vanishes_on_ideal_span(&phi, &ideal4, 4), "generator shortcut disagrees with the span oracle");
    }
    Ok(format!(
        "50 closure rounds at N = 6; 200 maps ({} symplectic, {} not); 60 span-oracle checks",
        agree[1], agree[0]
    ))
}

fn evolution() -> Outcome {
    let mut g = rng(91);
    let h = ck(5);
    let times = [rational(1, 3), rational(1, 2), rational(1, 1)];
    for k in 0..50 {
        let degree = k % 3;
        let coeffs: Vec<InfinitesimalCharacter<Rational>> =
            (0..=degree).map(|_| random_infinitesimal(&h, &(), &mut g)).collect();
        let curve = FunctionalCurve::new(coeffs.clone()).or_fail()?;
        let sol = Evolution::solve(&curve).or_fail()?;
        for t in &times {
            let eta = sol.at(t).or_fail()?;
            ensure!(is_character(&eta), "η({t}) is not a character");
            ensure!(eta.degree_zero_value() == &Rational::integer(1), "η({t})(1) ≠ 1");
        }
        ensure!(evol(&curve).is_ok(), "evol rejected a valid curve");
        for j in 0..=sol.t_degree() {
            let lhs = sol.coefficient(j + 1).scale(&Rational::integer(j as i64 + 1));
            let mut rhs = TruncatedFunctional::zero(&h, &());
            for (i, c) in coeffs.iter().enumerate().take(j + 1) {
                rhs = rhs.add(&sol.coefficient(j - i).convolve(c.functional()).or_fail()?).or_fail()?;
            }
            ensure!(lhs == rhs, "ODE identity fails at t^{j}");
        }
        let constant = FunctionalCurve::constant(coeffs[0].clone());
        for t in &times {
            let expected = char_exp(&coeffs[0].scale(&Rational(t.clone()))).or_fail()?;
            ensure!(&evolve(&constant, t).or_fail()? == expected.functional(), "constant curve ≠ exp(tφ)");
        }
    }
    Ok("50 curves of degree ≤ 2 at N = 5".into())
}

fn tensor_group() -> Outcome {
    let mut g = rng(101);
    for d in [2, 3] {
        let h = tensor(d, 5);
        let unit = Character::<Rational>::unit(&h, &());
        ensure!(tensor_char_group_iso(&unit).or_fail()?.iter().all(Ring::is_zero), "unit does not map to 0");
        for _ in 0..50 {
            let a = random_character::<Rational, _>(&h, &(), &mut g);
            let b = random_character::<Rational, _>(&h, &(), &mut g);
            let (va, vb) = (tensor_char_group_iso(&a).or_fail()?, tensor_char_group_iso(&b).or_fail()?);
            let vab = tensor_char_group_iso(&char_mul(&a, &b).or_fail()?).or_fail()?;
            let sum: Vec<Rational> = va.iter().zip(&vb).map(|(x, y)| x.add(y)).collect();
            ensure!(vab == sum, "iso is not additive for d = {d}");
            let vinv = tensor_char_group_iso(&char_inv(&a)).or_fail()?;
            ensure!(vinv == va.iter().map(Ring::neg).collect::<Vec<_>>(), "inverse does not map to −v");
            ensure!(tensor_char_from_vector(&h, &(), &va).or_fail()? == a, "iso is not injective on samples");
        }
    }
    Ok("100 pairs for d = 2, 3 at N = 5".into())
}

fn restrict_tree_values(a: &TreeValues<Rational>, n: usize) -> TreeValues<Rational> {
    let mut out = TreeValues::new(&(), n);
    for (t, v) in a.iter() {
        if t.order() <= n {
            out.set(t.clone(), v.clone()).unwrap();
        }
    }
    out
}

fn truncation_stability() -> Outcome {
    let mut g = rng(111);
    let mut ops = BTreeSet::new();
    for k in 0..50 {
        let (big, small) = if k % 2 == 0 { (ck(6), ck(4)) } else { (tensor(2, 6), tensor(2, 4)) };
        let r = |f: &TruncatedFunctional<Rational>| f.restrict(&small).unwrap();
        let mut same = |name: &'static str, at6: TruncatedFunctional<Rational>, at4: TruncatedFunctional<Rational>| {
            ops.insert(name);
            if r(&at6) == at4 { Ok(()) } else { Err(format!("{name} is not stable under truncation")) }
        };
        let a = random_invertible::<Rational, _>(&big, &(), &mut g);
        let b = random_functional::<Rational, _>(&big, &(), &mut g);
        same("convolve", a.convolve(&b).or_fail()?, r(&a).convolve(&r(&b)).or_fail()?)?;
        same("inverse", a.inverse().or_fail()?, r(&a).inverse().or_fail()?)?;
        same("project", b.project(3), r(&b).project(3))?;
        same("precompose_antipode", b.precompose_antipode(), r(&b).precompose_antipode())?;
        let x = random_augmented::<Rational, _>(&big, &(), &mut g);
        let y = random_augmented::<Rational, _>(&big, &(), &mut g);
        let f = random_series(6, &mut g);
        same("apply_series", apply_series(&f, &x).or_fail()?, apply_series(&f, &r(&x)).or_fail()?)?;
        same("exp", exp(&x).or_fail()?, exp(&r(&x)).or_fail()?)?;
        let u = random_unipotent::<Rational, _>(&big, &(), &mut g);
        same("log", log(&u).or_fail()?, log(&r(&u)).or_fail()?)?;
        same("bch", bch(&x, &y).or_fail()?, bch(&r(&x), &r(&y)).or_fail()?)?;

        let phi = random_character::<Rational, _>(&big, &(), &mut g);
        let psi = random_character::<Rational, _>(&big, &(), &mut g);
        let (phi4, psi4) = (phi.restrict(&small).or_fail()?, psi.restrict(&small).or_fail()?);
        same("char_mul", char_mul(&phi, &psi).or_fail()?.into_functional(), char_mul(&phi4, &psi4).or_fail()?.into_functional())?;
        same("char_inv", char_inv(&phi).into_functional(), char_inv(&phi4).into_functional())?;
        same("char_log", char_log(&phi).or_fail()?.into_functional(), char_log(&phi4).or_fail()?.into_functional())?;
        let s = random_infinitesimal::<Rational, _>(&big, &(), &mut g);
        let t = random_infinitesimal::<Rational, _>(&big, &(), &mut g);
        let (s4, t4) = (s.restrict(&small).or_fail()?, t.restrict(&small).or_fail()?);
        same("char_exp", char_exp(&s).or_fail()?.into_functional(), char_exp(&s4).or_fail()?.into_functional())?;
        same("lie_bracket", lie_bracket(&s, &t).or_fail()?.into_functional(), lie_bracket(&s4, &t4).or_fail()?.into_functional())?;
        let curve = FunctionalCurve::new(vec![s.clone(), t.clone()]).or_fail()?;
        let curve4 = curve.restrict(&small).or_fail()?;
        let half = rational(1, 2);
        same("evolve", evolve(&curve, &half).or_fail()?, evolve(&curve4, &half).or_fail()?)?;
        same("evol", evol(&curve).or_fail()?.into_functional(), evol(&curve4).or_fail()?.into_functional())?;

        if k % 2 == 0 {
            let ta = random_tree_values::<Rational, _>(&(), 6, &mut g);
            let tb = random_tree_values::<Rational, _>(&(), 6, &mut g);
            let (ta4, tb4) = (restrict_tree_values(&ta, 4), restrict_tree_values(&tb, 4));
            ops.insert("butcher_compose");
            ensure!(
                restrict_tree_values(&butcher_compose(&ta, &tb).or_fail()?, 4) == butcher_compose(&ta4, &tb4).or_fail()?,
                "butcher_compose is not stable under truncation"
            );
            ops.insert("butcher_inverse");
            ensure!(
                restrict_tree_values(&butcher_inverse(&ta).or_fail()?, 4) == butcher_inverse(&ta4).or_fail()?,
                "butcher_inverse is not stable under truncation"
            );
        }
    }
    Ok(format!("{} operations on 50 inputs, N = 6 vs N = 4", ops.len()))
}

struct Criterion {
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { name: "Hopf axioms", limit: Duration::from_secs(60), run: hopf_axioms },
        Criterion { name: "Tree enumeration", limit: Duration::from_secs(30), run: tree_enumeration },
        Criterion { name: "Convolution algebra", limit: Duration::from_secs(60), run: convolution_algebra },
        Criterion { name: "Functional calculus", limit: Duration::from_secs(120), run: functional_calculus },
        Criterion { name: "Character bijection", limit: Duration::from_secs(60), run: character_bijection },
        Criterion { name: "Bracket and BCH", limit: Duration::from_secs(60), run: bracket },
        Criterion { name: "Butcher isomorphism", limit: Duration::from_secs(60), run: butcher },
        Criterion { name: "Ideal subgroup", limit: Duration::from_secs(120), run: ideal_subgroup },
        Criterion { name: "Evolution", limit: Duration::from_secs(180), run: evolution },
        Criterion { name: "Tensor character group", limit: Duration::from_secs(30), run: tensor_group },
        Criterion { name: "Truncation stability", limit: Duration::from_secs(60), run: truncation_stability },
    ];
    let mut failures = 0;
    for (i, c) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > c.limit => Err(format!("{detail}, but exceeded the {:?} limit", c.limit)),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS {:>2}. {} ({:.2?}): {}", i + 1, c.name, elapsed, detail),
            Err(reason) => {
                failures += 1;
                println!("FAIL {:>2}. {} ({:.2?}): {}", i + 1, c.name, elapsed, reason);
            }
        }
    }
    println!("{} of {} acceptance criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
