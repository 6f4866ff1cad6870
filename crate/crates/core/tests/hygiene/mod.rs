//! Randomized arithmetic hygiene checks, shared by the acceptance target.
//!
//! Each check runs a fixed number of proptest cases with a deterministic
//! RNG and returns how many cases passed.

use std::cell::Cell;

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestError, TestRng, TestRunner};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use rankvar::field::{Field, FiniteField, GaloisField, PrimeField, RatFunc};
use rankvar::gradedalg::{groebner, satisfies_buchberger_criterion};
use rankvar::verify::corpus::random_module;
use rankvar::{AlgebraSpec, HopfFlavor, Matrix, Monomial, MonomialOrder, Poly, PolyRing, Resolution};

pub type Outcome = Result<usize, String>;

fn runner(cases: u32) -> TestRunner {
    let config = Config { cases, failure_persistence: None, ..Config::default() };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn run<S: Strategy>(cases: u32, strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Outcome {
    let count = Cell::new(0);
    let result = runner(cases).run(&strategy, |v| {
        test(v)?;
        count.set(count.get() + 1);
        Ok(())
    });
    match result {
        Ok(()) => Ok(count.get()),
        Err(TestError::Fail(why, value)) => Err(format!("{why} for {value:?}")),
        Err(TestError::Abort(why)) => Err(why.to_string()),
    }
}

fn same<F: Field>(k: &F, a: &F::Elem, b: &F::Elem) -> bool {
    k.is_zero(&k.sub(a, b))
}

fn axioms<F: Field>(k: &F, a: &F::Elem, b: &F::Elem, c: &F::Elem) -> Result<(), TestCaseError> {
    let name = k.name();
    let law = |ok: bool, what: &str| -> Result<(), TestCaseError> {
        if ok {
            Ok(())
        } else {
            Err(TestCaseError::fail(format!("{what} fails in {name}")))
        }
    };
    law(same(k, &k.add(&k.add(a, b), c), &k.add(a, &k.add(b, c))), "additive associativity")?;
    law(same(k, &k.mul(&k.mul(a, b), c), &k.mul(a, &k.mul(b, c))), "multiplicative associativity")?;
    law(same(k, &k.add(a, b), &k.add(b, a)), "additive commutativity")?;
    law(same(k, &k.mul(a, b), &k.mul(b, a)), "multiplicative commutativity")?;
    law(same(k, &k.mul(a, &k.add(b, c)), &k.add(&k.mul(a, b), &k.mul(a, c))), "distributivity")?;
    law(same(k, &k.add(a, &k.zero()), a) && same(k, &k.mul(a, &k.one()), a), "identities")?;
    law(k.is_zero(&k.add(a, &k.neg(a))), "additive inverse")?;
    law(k.is_zero(&k.from_int(k.characteristic() as i64)), "characteristic")?;
    match k.inv(a) {
        Some(ai) => law(!k.is_zero(a) && k.is_one(&k.mul(a, &ai)), "multiplicative inverse"),
        None => law(k.is_zero(a), "invertibility of nonzero elements"),
    }
}

fn finite_case<F: FiniteField>(k: &F, seeds: [u64; 3]) -> Result<(), TestCaseError> {
    let [a, b, c] = seeds.map(|s| k.element(s % k.order()));
    axioms(k, &a, &b, &c)?;
    let frob_additive = same(k, &k.frobenius(&k.add(&a, &b)), &k.add(&k.frobenius(&a), &k.frobenius(&b)));
    let frob_matches_pow = same(k, &k.frobenius(&a), &k.pow(&a, k.characteristic() as u64));
    let fermat = same(k, &k.pow(&a, k.order()), &a);
    if frob_additive && frob_matches_pow && fermat {
        Ok(())
    } else {
        Err(TestCaseError::fail(format!("Frobenius identities fail in {}", k.name())))
    }
}

fn random_poly<F: FiniteField>(ring: &PolyRing<F>, terms: &[(u8, u8, u64)], max_exp: u8) -> Poly<F::Elem> {
    let k = ring.field();
    let n = ring.nvars();
    let terms = terms
        .iter()
        .map(|&(e0, e1, c)| {
            let mut exps = vec![0u32; n];
            exps[0] = (e0 % (max_exp + 1)) as u32;
            if n > 1 {
                exps[1] = (e1 % (max_exp + 1)) as u32;
            }
            if n > 2 {
                exps[2] = ((e0 / 7 + e1 / 5) % (max_exp + 1)) as u32;
            }
            (Monomial::from_exponents(&exps), k.element(c % k.order()))
        })
        .collect();
    ring.from_terms(terms)
}

fn ratfunc_case(p: u32, parts: [Vec<(u8, u8, u64)>; 3], dens: [Vec<(u8, u8, u64)>; 3]) -> Result<(), TestCaseError> {
    let k = RatFunc::new(PrimeField::new(p).unwrap(), 2);
    let ring = k.poly_ring();
    let elems: Vec<_> = parts
        .iter()
        .zip(dens.iter())
        .map(|(num, den)| {
            let num = random_poly(ring, num, 2);
            let den = random_poly(ring, den, 2);
            let den = if den.is_zero() { ring.one() } else { den };
            k.fraction(num, den).expect("nonzero denominator")
        })
        .collect();
    axioms(&k, &elems[0], &elems[1], &elems[2])
}

/// Field axioms over prime fields, extension fields and rational function
/// fields, plus Frobenius identities for the finite ones.
pub fn field_axioms(cases: u32) -> Outcome {
    let small_terms = || prop::collection::vec((any::<u8>(), any::<u8>(), any::<u64>()), 0..4);
    let strategy = (
        0usize..9,
        any::<[u64; 3]>(),
        [small_terms(), small_terms(), small_terms()],
        [small_terms(), small_terms(), small_terms()],
    );
    run(cases, strategy, |(which, seeds, parts, dens)| match which {
        0 => finite_case(&PrimeField::new(2).unwrap(), seeds),
        1 => finite_case(&PrimeField::new(3).unwrap(), seeds),
        2 => finite_case(&PrimeField::new(7).unwrap(), seeds),
        3 => finite_case(&GaloisField::new(2, 2).unwrap(), seeds),
        4 => finite_case(&GaloisField::new(3, 2).unwrap(), seeds),
        5 => finite_case(&GaloisField::new(2, 3).unwrap(), seeds),
        6 => finite_case(&GaloisField::new(2, 4).unwrap(), seeds),
        7 => ratfunc_case(2, parts, dens),
        _ => ratfunc_case(3, parts, dens),
    })
}

fn matrix_case<F: FiniteField>(k: &F, rows: usize, cols: usize, density: u64, seeds: &[u64]) -> Result<(), TestCaseError> {
    let data = seeds
        .iter()
        .take(rows * cols)
        .map(|&s| if s % 100 < density { k.element(1 + (s / 100) % (k.order() - 1)) } else { k.zero() })
        .collect();
    let a = Matrix::from_vec(k, rows, cols, data).unwrap();
    let rank = a.rank();
    let kernel = a.kernel_basis();
    prop_assert_eq!(rank + kernel.cols(), cols, "rank-nullity over {}", k.name());
    prop_assert!(a.mul(&kernel).unwrap().is_zero(), "kernel vectors are not annihilated");
    prop_assert_eq!(kernel.rank(), kernel.cols(), "kernel basis is dependent");
    prop_assert_eq!(a.transpose().rank(), rank, "row rank differs from column rank");
    Ok(())
}

/// `rank A + dim ker A = #columns`, with the kernel basis checked directly.
pub fn rank_nullity(cases: u32) -> Outcome {
    let strategy = (0usize..3, 1usize..9, 1usize..9, 10u64..100, prop::collection::vec(any::<u64>(), 64));
    run(cases, strategy, |(which, rows, cols, density, seeds)| match which {
        0 => matrix_case(&PrimeField::new(2).unwrap(), rows, cols, density, &seeds),
        1 => matrix_case(&PrimeField::new(3).unwrap(), rows, cols, density, &seeds),
        _ => matrix_case(&GaloisField::new(2, 2).unwrap(), rows, cols, density, &seeds),
    })
}

/// Consecutive maps of a minimal resolution compose to zero, and each
/// boundary commutes with the algebra action.
pub fn boundaries_square_to_zero(cases: u32) -> Outcome {
    let strategy = (prop::sample::select(vec![(2u32, 2usize), (2, 3), (3, 2)]), 1usize..7, any::<u64>());
    run(cases, strategy, |((p, r), n, seed)| {
        let spec = AlgebraSpec::new(PrimeField::new(p).unwrap(), r, HopfFlavor::GroupLike);
        let m = random_module(&mut ChaCha8Rng::seed_from_u64(seed), &spec, n);
        let res = Resolution::new(m);
        prop_assert!(res.augmentation().mul(&res.boundary(1)).unwrap().is_zero(), "augmentation after d_1");
        for i in 1..3 {
            let d = res.boundary(i);
            prop_assert!(d.mul(&res.boundary(i + 1)).unwrap().is_zero(), "d_{} after d_{}", i, i + 1);
            let (src, tgt) = (res.free_module(i), res.free_module(i - 1));
            for (zs, zt) in src.actions().iter().zip(tgt.actions()) {
                prop_assert_eq!(zt.mul(&d).unwrap(), d.mul(zs).unwrap(), "d_{} is not a module map", i);
            }
        }
        Ok(())
    })
}

fn s_pair<F: Field>(ring: &PolyRing<F>, f: &Poly<F::Elem>, g: &Poly<F::Elem>) -> Poly<F::Elem> {
    let k = ring.field();
    let (mf, mg) = (f.leading_monomial().unwrap(), g.leading_monomial().unwrap());
    let l = mf.lcm(mg);
    let cf = k.inv(f.leading_coeff().unwrap()).unwrap();
    let cg = k.inv(g.leading_coeff().unwrap()).unwrap();
    ring.sub(&ring.mul_term(f, &mf.quotient_of(&l), &cf), &ring.mul_term(g, &mg.quotient_of(&l), &cg))
}

/// Long division by a list of divisors, written independently of the
/// library's reduction routine.
fn remainder<F: Field>(ring: &PolyRing<F>, f: &Poly<F::Elem>, divisors: &[Poly<F::Elem>]) -> Poly<F::Elem> {
    let k = ring.field();
    let mut rest = f.clone();
    let mut out = ring.zero();
    while let (Some(m), Some(c)) = (rest.leading_monomial().cloned(), rest.leading_coeff().cloned()) {
        let hit = divisors.iter().find(|g| g.leading_monomial().unwrap().divides(&m));
        match hit {
            Some(g) => {
                let gm = g.leading_monomial().unwrap();
                let q = k.div(&c, g.leading_coeff().unwrap()).unwrap();
                rest = ring.sub(&rest, &ring.mul_term(g, &gm.quotient_of(&m), &q));
            }
            None => {
                let lead = ring.term(m, c);
                out = ring.add(&out, &lead);
                rest = ring.sub(&rest, &lead);
            }
        }
    }
    out
}

/// Returned bases satisfy Buchberger's criterion (checked with a separate
/// S-polynomial and division), contain the input, and are reduced and
/// unique.
pub fn buchberger(cases: u32) -> Outcome {
    let gens = prop::collection::vec(prop::collection::vec((any::<u8>(), any::<u8>(), any::<u64>()), 1..4), 1..4);
    let orders = prop::sample::select(vec![MonomialOrder::GrevLex, MonomialOrder::Lex, MonomialOrder::DegLex]);
    let strategy = (prop::sample::select(vec![2u32, 3, 5]), orders, gens);
    run(cases, strategy, |(p, order, gens)| {
        let ring = PolyRing::with_prefix(PrimeField::new(p).unwrap(), "x", 3, order);
        let gens: Vec<_> = gens.iter().map(|t| random_poly(&ring, t, 2)).filter(|g| !g.is_zero()).collect();
        let basis = groebner(&ring, &gens);
        prop_assert!(satisfies_buchberger_criterion(&ring, &basis));
        for (i, f) in basis.iter().enumerate() {
            for g in &basis[i + 1..] {
                prop_assert!(remainder(&ring, &s_pair(&ring, f, g), &basis).is_zero(), "S-pair does not reduce to zero");
            }
            prop_assert!(ring.field().is_one(f.leading_coeff().unwrap()), "basis element is not monic");
            let others: Vec<_> = basis.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, g)| g.clone()).collect();
            for (m, _) in f.terms() {
                prop_assert!(!others.iter().any(|g| g.leading_monomial().unwrap().divides(m)), "basis is not reduced");
            }
        }
        for g in &gens {
            prop_assert!(remainder(&ring, g, &basis).is_zero(), "generator not in the ideal of the basis");
        }
        let mut reversed = gens.clone();
        reversed.reverse();
        prop_assert_eq!(groebner(&ring, &reversed), basis, "reduced basis depends on generator order");
        Ok(())
    })
}
