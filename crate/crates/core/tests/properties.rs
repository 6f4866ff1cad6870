//! Structural invariants of supports and Jordan types on random modules.

use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use rankvar::field::{FiniteField, GaloisField, PrimeField};
use rankvar::homalg::syzygy;
use rankvar::pipoint::{dade_test, support_points, PiPoint};
use rankvar::verify::corpus::random_module;
use rankvar::{AlgebraSpec, HopfFlavor, LambdaModule};

fn spec(p: u32, r: usize) -> AlgebraSpec<PrimeField> {
    AlgebraSpec::new(PrimeField::new(p).unwrap(), r, HopfFlavor::GroupLike)
}

fn module(p: u32, r: usize, n: usize, seed: u64) -> LambdaModule<PrimeField> {
    random_module(&mut ChaCha8Rng::seed_from_u64(seed), &spec(p, r), n)
}

fn support(m: &LambdaModule<PrimeField>, k: &GaloisField) -> BTreeSet<String> {
    support_points(m, k, 0).unwrap().iter().map(|pt| pt.format(k)).collect()
}

fn shapes() -> impl Strategy<Value = (u32, usize)> {
    prop::sample::select(vec![(2u32, 2usize), (2, 3), (3, 2)])
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn support_is_flavor_independent((p, r) in shapes(), n in 1usize..7, seed in any::<u64>()) {
        let m = module(p, r, n, seed);
        let k = GaloisField::new(p, 2).unwrap();
        prop_assert_eq!(support(&m, &k), support(&m.with_flavor(HopfFlavor::Primitive), &k));
        prop_assert_eq!(m.is_projective(), m.with_flavor(HopfFlavor::Primitive).is_projective());
    }

    #[test]
    fn direct_sums_take_unions((p, r) in shapes(), n1 in 1usize..5, n2 in 1usize..5, seed in any::<u64>()) {
        let a = module(p, r, n1, seed);
        let b = module(p, r, n2, seed.wrapping_add(1));
        let k = GaloisField::new(p, 1).unwrap();
        let union: BTreeSet<_> = support(&a, &k).union(&support(&b, &k)).cloned().collect();
        prop_assert_eq!(support(&a.direct_sum(&b).unwrap(), &k), union);
    }

    #[test]
    fn duals_and_syzygies_keep_support((p, r) in shapes(), n in 1usize..6, seed in any::<u64>()) {
        let m = module(p, r, n, seed);
        let k = GaloisField::new(p, 1).unwrap();
        let s = support(&m, &k);
        prop_assert_eq!(&support(&m.dual(), &k), &s);
        prop_assert_eq!(&support(&syzygy(&m, 1), &k), &s);
        prop_assert_eq!(&support(&syzygy(&m, -1), &k), &s);
    }

    #[test]
    fn jordan_types_partition_the_dimension((p, r) in shapes(), n in 1usize..7, seed in any::<u64>(), idx in any::<u64>()) {
        let m = module(p, r, n, seed);
        let f = PrimeField::new(p).unwrap();
        let lambda: Vec<u32> = (0..r).map(|i| f.element((idx >> (8 * i)) % u64::from(p))).collect();
        prop_assume!(lambda.iter().any(|&c| c != 0));
        let alpha = PiPoint::linear(spec(p, r), &lambda).unwrap();
        let jt = alpha.jordan_type(&m).unwrap();
        prop_assert_eq!(jt.parts().iter().sum::<usize>(), m.dim());
        prop_assert!(jt.parts().iter().all(|&b| 1 <= b && b <= p as usize));
        prop_assert_eq!(alpha.is_projective_at(&m).unwrap(), jt.is_free(p));
    }

    #[test]
    fn projective_summands_do_not_change_verdicts((p, r) in shapes(), n in 1usize..5, seed in any::<u64>()) {
        let m = module(p, r, n, seed);
        let padded = m.direct_sum(&LambdaModule::free(&spec(p, r), 1)).unwrap();
        prop_assert_eq!(dade_test(&padded), dade_test(&m));
        prop_assert_eq!(dade_test(&m), m.is_projective());
    }
}
