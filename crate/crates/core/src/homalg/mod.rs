//! Minimal free resolutions, syzygies and Ext, plus cohomology classes
//! realised as maps out of syzygies of the trivial module.

mod cohomology;

use std::sync::{Arc, Mutex};

use crate::field::Field;
use crate::linalg::Matrix;
use crate::module::{LambdaModule, ModuleError, ProjectiveCover};

pub use cohomology::{carlson_module, koszul_object, koszul_factor, ClassError, CohClass, TrivialResolution};

/// One step of a resolution: the syzygy `X_i = Ω^i M`, its projective cover
/// `P_i -> X_i`, and the inclusion `X_i -> P_{i-1}` (absent for `i = 0`).
#[derive(Debug, Clone)]
pub struct Step<F: Field> {
    pub syzygy: LambdaModule<F>,
    pub cover: ProjectiveCover<F>,
    pub inclusion: Option<Matrix<F>>,
}

impl<F: Field> Step<F> {
    pub fn rank(&self) -> usize {
        self.cover.generators.cols()
    }
}

/// A minimal free resolution `... -> P_1 -> P_0 -> M`, extended on demand.
///
/// Steps are computed lazily behind a lock, so a shared `Resolution` gives
/// every caller the same (immutable) matrices.
#[derive(Debug)]
pub struct Resolution<F: Field> {
    module: LambdaModule<F>,
    steps: Mutex<Vec<Arc<Step<F>>>>,
}

impl<F: Field> Resolution<F> {
    pub fn new(module: LambdaModule<F>) -> Self {
        Self { module, steps: Mutex::new(Vec::new()) }
    }

    /// Resolution computed at least up to `P_length`.
    pub fn with_length(module: LambdaModule<F>, length: usize) -> Self {
        let r = Self::new(module);
        r.step(length);
        r
    }

    pub fn module(&self) -> &LambdaModule<F> {
        &self.module
    }

    /// Number of steps computed so far.
    pub fn computed(&self) -> usize {
        self.steps.lock().expect("resolution lock").len()
    }

    pub fn step(&self, i: usize) -> Arc<Step<F>> {
        let mut steps = self.steps.lock().expect("resolution lock");
        while steps.len() <= i {
            let next = match steps.last() {
                None => Step {
                    syzygy: self.module.clone(),
                    cover: self.module.projective_cover(),
                    inclusion: None,
                },
                Some(prev) => {
                    let sub = prev
                        .cover
                        .cover
                        .kernel_of(&prev.cover.surjection)
                        .expect("kernel of a module map is a submodule");
                    Step { cover: sub.module.projective_cover(), syzygy: sub.module, inclusion: Some(sub.inclusion) }
                }
            };
            steps.push(Arc::new(next));
        }
        steps[i].clone()
    }

    /// `Ω^i M`.
    pub fn syzygy(&self, i: usize) -> LambdaModule<F> {
        self.step(i).syzygy.clone()
    }

    /// Rank of `P_i`.
    pub fn betti(&self, i: usize) -> usize {
        self.step(i).rank()
    }

    pub fn free_module(&self, i: usize) -> LambdaModule<F> {
        self.step(i).cover.cover.clone()
    }

    /// The augmentation `P_0 -> M`.
    pub fn augmentation(&self) -> Matrix<F> {
        self.step(0).cover.surjection.clone()
    }

    /// The boundary `d_i : P_i -> P_{i-1}` for `i >= 1`.
    pub fn boundary(&self, i: usize) -> Matrix<F> {
        assert!(i >= 1, "boundaries start at d_1");
        let s = self.step(i);
        s.inclusion.as_ref().expect("inclusion for i >= 1").mul(&s.cover.surjection).expect("composable")
    }

    /// Lift a module map `f : X_a -> X_b` between syzygies of two
    /// resolutions to `X_{a+1} -> X_{b+1}` (source in `self`, target in
    /// `target`).
    pub fn lift_syzygy_map(&self, a: usize, target: &Resolution<F>, b: usize, f: &Matrix<F>) -> Matrix<F> {
        let src = self.step(a);
        let tgt = target.step(b);
        let q = self.module.spec().algebra_dim();
        let gen_cols: Vec<usize> = (0..src.rank()).map(|k| k * q).collect();
        // images of the free generators of P_a in X_b
        let images = f.mul(&src.cover.surjection.select_columns(&gen_cols)).expect("composable");
        let u = tgt.cover.surjection.solve(&images).expect("projective lifting");
        let chain = tgt.cover.cover.free_map_from(&u);
        let src_next = self.step(a + 1);
        let tgt_next = target.step(b + 1);
        let restricted = chain.mul(src_next.inclusion.as_ref().expect("inclusion")).expect("composable");
        tgt_next.inclusion.as_ref().expect("inclusion").solve(&restricted).expect("chain map preserves kernels")
    }
}

/// `Ω^i M` for any integer `i`; negative syzygies are `(Ω^{-i} M^*)^*`.
pub fn syzygy<F: Field>(m: &LambdaModule<F>, i: i64) -> LambdaModule<F> {
    if i >= 0 {
        Resolution::new(m.clone()).syzygy(i as usize)
    } else {
        Resolution::new(m.dual()).syzygy((-i) as usize).dual()
    }
}

/// The coboundary `Hom(P_i, N) -> Hom(P_{i+1}, N)` with `Hom(P_j, N) = N^{b_j}`.
fn coboundary<F: Field>(res: &Resolution<F>, n: &LambdaModule<F>, i: usize) -> Matrix<F> {
    let f = n.field();
    let q = res.module().spec().algebra_dim();
    let d = res.boundary(i + 1);
    let (bi, bj) = (res.betti(i), res.betti(i + 1));
    let dn = n.dim();
    let monos = n.monomial_actions();
    let mut delta = Matrix::zeros(f, bj * dn, bi * dn);
    for k in 0..bj {
        for j in 0..bi {
            for (idx, m) in monos.iter().enumerate() {
                let c = d.get(j * q + idx, k * q);
                if f.is_zero(c) {
                    continue;
                }
                for r in 0..dn {
                    for s in 0..dn {
                        let v = m.get(r, s);
                        if !f.is_zero(v) {
                            let cur = delta.get(k * dn + r, j * dn + s).clone();
                            delta.set(k * dn + r, j * dn + s, f.add(&cur, &f.mul(c, v)));
                        }
                    }
                }
            }
        }
    }
    delta
}

/// `dim Ext^i(M, N)` from a resolution of `M`.
pub fn ext_dim_with<F: Field>(res: &Resolution<F>, n: &LambdaModule<F>, i: usize) -> Result<usize, ModuleError> {
    if res.module().spec() != n.spec() {
        return Err(ModuleError::SpecMismatch);
    }
    let cochains = res.betti(i) * n.dim();
    let kernel = cochains - coboundary(res, n, i).rank();
    let image = if i == 0 { 0 } else { coboundary(res, n, i - 1).rank() };
    Ok(kernel - image)
}

pub fn ext_dim<F: Field>(m: &LambdaModule<F>, n: &LambdaModule<F>, i: usize) -> Result<usize, ModuleError> {
    ext_dim_with(&Resolution::new(m.clone()), n, i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::module::{AlgebraSpec, HopfFlavor};

    fn spec(p: u32, r: usize) -> AlgebraSpec<PrimeField> {
        AlgebraSpec::new(PrimeField::new(p).unwrap(), r, HopfFlavor::GroupLike)
    }

    #[test]
    fn free_module_resolves_in_one_step() {
        let s = spec(2, 2);
        let res = Resolution::new(LambdaModule::free(&s, 1));
        assert_eq!(res.betti(0), 1);
        assert_eq!(res.syzygy(1).dim(), 0);
        assert_eq!(res.betti(1), 0);
        assert_eq!(res.betti(3), 0);
    }

    #[test]
    fn betti_numbers_of_trivial_module() {
        let res = Resolution::new(LambdaModule::trivial(&spec(2, 1)));
        assert!((0..6).all(|i| res.betti(i) == 1));
        let res = Resolution::new(LambdaModule::trivial(&spec(2, 2)));
        let b: Vec<usize> = (0..6).map(|i| res.betti(i)).collect();
        assert_eq!(b, vec![1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn boundaries_compose_to_zero_and_are_minimal() {
        let s = spec(3, 2);
        let m = LambdaModule::trivial(&s).direct_sum(&LambdaModule::free(&s, 1)).unwrap();
        let res = Resolution::new(m);
        let aug = res.augmentation();
        assert!(aug.mul(&res.boundary(1)).unwrap().is_zero());
        let q = s.algebra_dim();
        for i in 1..5 {
            if i > 1 {
                assert!(res.boundary(i - 1).mul(&res.boundary(i)).unwrap().is_zero());
            }
            // no unit coefficients: the constant-term block vanishes
            let d = res.boundary(i);
            for j in 0..res.betti(i - 1) {
                for k in 0..res.betti(i) {
                    assert_eq!(*d.get(j * q, k * q), 0);
                }
            }
        }
    }

    #[test]
    fn syzygy_examples() {
        let k1 = LambdaModule::trivial(&spec(2, 1));
        let o = syzygy(&k1, 1);
        assert_eq!(o.dim(), 1);
        assert!(o.action(0).is_zero());
        assert_eq!(syzygy(&LambdaModule::trivial(&spec(2, 2)), 1).dim(), 3);
        assert_eq!(syzygy(&LambdaModule::free(&spec(2, 2), 1), 1).dim(), 0);
        // Ω^{-1} k over k[z1,z2]/(z1^2,z2^2) is dual to Ω^1 k
        assert_eq!(syzygy(&LambdaModule::trivial(&spec(2, 2)), -1).dim(), 3);
    }

    #[test]
    fn ext_examples() {
        let s = spec(2, 2);
        let k = LambdaModule::trivial(&s);
        let l = LambdaModule::free(&s, 1);
        assert_eq!(ext_dim(&k, &k, 0).unwrap(), 1);
        assert_eq!(ext_dim(&k, &k, 1).unwrap(), 2);
        for i in 1..4 {
            assert_eq!(ext_dim(&l, &k, i).unwrap(), 0);
            assert_eq!(ext_dim(&k, &l, i).unwrap(), 0);
        }
        // Ext^i(k,k) over Λ(2,r) has dimension C(i+r-1, r-1)
        let res = Resolution::new(k.clone());
        for i in 0..5 {
            assert_eq!(ext_dim_with(&res, &k, i).unwrap(), i + 1);
        }
    }
}
