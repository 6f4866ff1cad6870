use std::collections::HashMap;
use std::sync::Mutex;

use crate::field::{Field, FieldError};
use crate::linalg::Matrix;
use crate::module::{AlgebraSpec, LambdaModule, ModuleError};
use crate::poly::{MonomialOrder, Poly, PolyRing};

use super::Resolution;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassError {
    #[error("cohomology class is not homogeneous")]
    NonHomogeneous,
    #[error("the zero class has no Carlson module or Koszul object")]
    ZeroClass,
    #[error("class and module live over different algebras")]
    SpecMismatch,
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Module(#[from] ModuleError),
}

/// A homogeneous element of the reduced cohomology ring `K[y_1..y_r]`,
/// where `y_i` has degree 1 for `p = 2` and degree 2 otherwise.
#[derive(Debug, Clone, PartialEq)]
pub struct CohClass<F: Field> {
    ring: PolyRing<F>,
    poly: Poly<F::Elem>,
    poly_degree: u32,
}

impl<F: Field> CohClass<F> {
    /// The ring `K[y1..yr]` (grevlex) classes live in.
    pub fn ring_for(field: &F, r: usize) -> PolyRing<F> {
        PolyRing::with_prefix(field.clone(), "y", r, MonomialOrder::GrevLex)
    }

    pub fn new(ring: PolyRing<F>, poly: Poly<F::Elem>) -> Result<Self, ClassError> {
        if !poly.is_homogeneous() {
            return Err(ClassError::NonHomogeneous);
        }
        let poly_degree = poly.total_degree().unwrap_or(1);
        let poly = ring.reorder(&poly);
        Ok(Self { ring, poly, poly_degree })
    }

    /// The zero class in polynomial degree `degree`.
    pub fn zero(field: &F, r: usize, degree: u32) -> Self {
        let ring = Self::ring_for(field, r);
        Self { poly: ring.zero(), ring, poly_degree: degree }
    }

    /// `y_{i+1}`.
    pub fn generator(field: &F, r: usize, i: usize) -> Self {
        let ring = Self::ring_for(field, r);
        Self { poly: ring.var(i), ring, poly_degree: 1 }
    }

    /// Parse text such as `y1^2 + t*y1*y2`; symbols other than `y1..yr`
    /// are read as field elements.
    pub fn parse(field: &F, r: usize, s: &str) -> Result<Self, ClassError> {
        let ring = Self::ring_for(field, r);
        let f = field.clone();
        let poly = ring.parse_with(s, &move |name| f.parse_elem(name).ok())?;
        Self::new(ring, poly)
    }

    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn poly(&self) -> &Poly<F::Elem> {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Degree as a polynomial in the `y_i`.
    pub fn poly_degree(&self) -> u32 {
        self.poly_degree
    }

    /// Cohomological degree.
    pub fn degree(&self) -> u32 {
        self.poly_degree * generator_degree(self.ring.field().characteristic())
    }

    pub fn format(&self) -> String {
        self.ring.format(&self.poly)
    }
}

fn generator_degree(p: u32) -> u32 {
    if p == 2 {
        1
    } else {
        2
    }
}

/// The minimal resolution of the trivial module together with the
/// generator maps `y_i : Ω^{|y_i|} k -> k` and cached chain lifts.
#[derive(Debug)]
pub struct TrivialResolution<F: Field> {
    resolution: Resolution<F>,
    lifts: Mutex<HashMap<(usize, usize), Matrix<F>>>,
}

impl<F: Field> TrivialResolution<F> {
    pub fn new(spec: &AlgebraSpec<F>) -> Self {
        Self { resolution: Resolution::new(LambdaModule::trivial(spec)), lifts: Mutex::new(HashMap::new()) }
    }

    pub fn resolution(&self) -> &Resolution<F> {
        &self.resolution
    }

    pub fn spec(&self) -> &AlgebraSpec<F> {
        self.resolution.module().spec()
    }

    fn generator_degree(&self) -> usize {
        generator_degree(self.spec().p()) as usize
    }

    /// `y_{i+1}` as a `1 x dim Ω^d k` matrix.
    ///
    /// For `p = 2` this reads off the coefficient of `z_i` in `Ω^1 k = rad Λ`.
    /// For odd `p`, `Ω^2 k` sits in `P_1 = Λ^r` whose `j`-th generator maps
    /// to `z_j`; the class reads off the coefficient of `z_i^{p-1}` in the
    /// `i`-th component.
    pub fn generator_map(&self, i: usize) -> Matrix<F> {
        let spec = self.spec();
        let p = spec.p() as usize;
        let q = spec.algebra_dim();
        let mut e = vec![0u32; spec.r()];
        if p == 2 {
            e[i] = 1;
            let step = self.resolution.step(1);
            let incl = step.inclusion.as_ref().expect("inclusion");
            incl.select_rows(&[spec.monomial_index(&e)])
        } else {
            let s1 = self.resolution.step(1);
            let gens = s1.inclusion.as_ref().expect("inclusion").mul(&s1.cover.generators).expect("composable");
            let f = spec.field();
            for j in 0..spec.r() {
                let mut ej = vec![0u32; spec.r()];
                ej[j] = 1;
                let idx = spec.monomial_index(&ej);
                for row in 0..q {
                    let want = if row == idx { f.one() } else { f.zero() };
                    assert_eq!(gens.get(row, j), &want, "first syzygy generators must be the variables");
                }
            }
            e[i] = (p - 1) as u32;
            let s2 = self.resolution.step(2);
            s2.inclusion.as_ref().expect("inclusion").select_rows(&[i * q + spec.monomial_index(&e)])
        }
    }

    /// The `shift`-fold chain lift of `y_{i+1}`: `Ω^{d+shift} k -> Ω^shift k`.
    pub fn lifted_generator(&self, i: usize, shift: usize) -> Matrix<F> {
        if let Some(m) = self.lifts.lock().expect("lift cache").get(&(i, shift)) {
            return m.clone();
        }
        let d = self.generator_degree();
        let m = if shift == 0 {
            self.generator_map(i)
        } else {
            let prev = self.lifted_generator(i, shift - 1);
            self.resolution.lift_syzygy_map(d + shift - 1, &self.resolution, shift - 1, &prev)
        };
        self.lifts.lock().expect("lift cache").insert((i, shift), m.clone());
        m
    }

    /// The product `y_{f_1} ... y_{f_n}` realised by composing lifts in the
    /// given order: `y_{f_1} ∘ Ω^d(y_{f_2}) ∘ ... ∘ Ω^{(n-1)d}(y_{f_n})`.
    pub fn monomial_map_ordered(&self, factors: &[usize]) -> Matrix<F> {
        let d = self.generator_degree();
        let mut acc = self.lifted_generator(factors[0], 0);
        for (k, &i) in factors.iter().enumerate().skip(1) {
            acc = acc.mul(&self.lifted_generator(i, k * d)).expect("composable");
        }
        acc
    }

    /// `ζ : Ω^{|ζ|} k -> k`; monomials compose generators in increasing order.
    pub fn class_to_map(&self, class: &CohClass<F>) -> Result<Matrix<F>, ClassError> {
        self.class_to_map_with(class, false)
    }

    /// As [`Self::class_to_map`], optionally composing each monomial's
    /// factors in decreasing order instead.
    pub fn class_to_map_with(&self, class: &CohClass<F>, reversed: bool) -> Result<Matrix<F>, ClassError> {
        if class.ring.field() != self.spec().field() || class.ring.nvars() != self.spec().r() {
            return Err(ClassError::SpecMismatch);
        }
        let f = self.spec().field();
        let d = class.degree() as usize;
        let target = self.resolution.syzygy(d).dim();
        let mut acc = Matrix::zeros(f, 1, target);
        for (mono, c) in class.poly.terms() {
            let mut factors: Vec<usize> = Vec::new();
            for (i, &e) in mono.exponents().iter().enumerate() {
                factors.extend(std::iter::repeat(i).take(e as usize));
            }
            if reversed {
                factors.reverse();
            }
            let m = self.monomial_map_ordered(&factors);
            acc = acc.add(&m.scale(c)).map_err(ModuleError::from)?;
        }
        Ok(acc)
    }
}

/// The Carlson module `L_ζ = ker(ζ : Ω^{|ζ|} k -> k)`.
pub fn carlson_module<F: Field>(tr: &TrivialResolution<F>, class: &CohClass<F>) -> Result<LambdaModule<F>, ClassError> {
    if class.is_zero() {
        return Err(ClassError::ZeroClass);
    }
    let map = tr.class_to_map(class)?;
    let omega = tr.resolution().syzygy(class.degree() as usize);
    Ok(omega.kernel_of(&map)?.module)
}

/// `k⫽ζ`: the cone `(P_{d-1} ⊕ k) / {(ι x, -ζ x) : x ∈ Ω^d k}`.
pub fn koszul_factor<F: Field>(tr: &TrivialResolution<F>, class: &CohClass<F>) -> Result<LambdaModule<F>, ClassError> {
    if class.is_zero() {
        return Err(ClassError::ZeroClass);
    }
    let map = tr.class_to_map(class)?;
    let d = class.degree() as usize;
    let res = tr.resolution();
    let step = res.step(d);
    let incl = step.inclusion.as_ref().expect("inclusion for d >= 1");
    let ambient = res.free_module(d - 1).direct_sum(&LambdaModule::trivial(tr.spec()))?;
    let relations = incl.vstack(&map.neg()).map_err(ModuleError::from)?;
    Ok(ambient.quotient(&relations)?.module)
}

/// `M⫽(a_1..a_n) = M ⊗ k⫽a_1 ⊗ ... ⊗ k⫽a_n`.
pub fn koszul_object<F: Field>(
    tr: &TrivialResolution<F>,
    m: &LambdaModule<F>,
    classes: &[CohClass<F>],
) -> Result<LambdaModule<F>, ClassError> {
    if m.spec() != tr.spec() {
        return Err(ClassError::SpecMismatch);
    }
    let mut acc = m.clone();
    for c in classes {
        acc = acc.tensor_product(&koszul_factor(tr, c)?)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::module::HopfFlavor;

    fn tr(p: u32, r: usize) -> TrivialResolution<PrimeField> {
        TrivialResolution::new(&AlgebraSpec::new(PrimeField::new(p).unwrap(), r, HopfFlavor::GroupLike))
    }

    #[test]
    fn parse_and_degree() {
        let f = PrimeField::new(3).unwrap();
        let c = CohClass::parse(&f, 2, "y1^2 + 2*y1*y2").unwrap();
        assert_eq!(c.poly_degree(), 2);
        assert_eq!(c.degree(), 4);
        assert_eq!(CohClass::parse(&f, 2, "y1 + y2^2"), Err(ClassError::NonHomogeneous));
    }

    #[test]
    fn first_generator_reads_z1() {
        let t = tr(2, 2);
        let y1 = t.class_to_map(&CohClass::generator(t.spec().field(), 2, 0)).unwrap();
        assert_eq!(y1.rank(), 1);
        let incl = t.resolution().step(1).inclusion.clone().unwrap();
        // evaluate on the elements z1, z2, z1 z2 of rad Λ
        for (idx, want) in [(1usize, 1u32), (2, 0), (3, 0)] {
            let mut v = Matrix::zeros(t.spec().field(), 4, 1);
            v.set(idx, 0, 1);
            let x = incl.solve(&v).unwrap();
            assert_eq!(*y1.mul(&x).unwrap().get(0, 0), want);
        }
        let zero = t.class_to_map(&CohClass::zero(t.spec().field(), 2, 1)).unwrap();
        assert!(zero.is_zero());
    }

    #[test]
    fn generator_maps_are_module_maps() {
        for (p, r) in [(2, 3), (3, 2), (5, 1)] {
            let t = tr(p, r);
            let d = generator_degree(p) as usize;
            let omega = t.resolution().syzygy(d);
            for i in 0..r {
                let g = t.generator_map(i);
                assert_eq!(g.rank(), 1);
                for z in omega.actions() {
                    assert!(g.mul(z).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn carlson_module_dimensions() {
        let t = tr(2, 1);
        let l = carlson_module(&t, &CohClass::generator(t.spec().field(), 1, 0)).unwrap();
        assert_eq!(l.dim(), 0);
        let t = tr(2, 2);
        let l = carlson_module(&t, &CohClass::generator(t.spec().field(), 2, 0)).unwrap();
        assert_eq!(l.dim(), 2);
        assert_eq!(
            carlson_module(&t, &CohClass::zero(t.spec().field(), 2, 1)),
            Err(ClassError::ZeroClass)
        );
    }

    #[test]
    fn koszul_factor_dimension() {
        let t = tr(2, 2);
        let k = koszul_factor(&t, &CohClass::generator(t.spec().field(), 2, 0)).unwrap();
        assert_eq!(k.dim(), 2);
        let l = LambdaModule::free(t.spec(), 1);
        let y2 = CohClass::generator(t.spec().field(), 2, 1);
        assert!(koszul_object(&t, &l, &[y2]).unwrap().is_projective());
    }
}
