use std::fmt;
use std::sync::Arc;

use super::{Field, FieldError, FiniteField, GaloisField, PrimeField, RatFunc};

/// A field homomorphism `F -> K`.
#[derive(Clone)]
pub struct Embedding<F: Field, K: Field> {
    source: F,
    target: K,
    map: Arc<dyn Fn(&F::Elem) -> K::Elem + Send + Sync>,
}

impl<F: Field, K: Field> fmt::Debug for Embedding<F, K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Embedding({} -> {})", self.source.name(), self.target.name())
    }
}

impl<F: Field, K: Field> Embedding<F, K> {
    pub fn new(source: F, target: K, map: impl Fn(&F::Elem) -> K::Elem + Send + Sync + 'static) -> Self {
        Self { source, target, map: Arc::new(map) }
    }

    pub fn source(&self) -> &F {
        &self.source
    }

    pub fn target(&self) -> &K {
        &self.target
    }

    pub fn apply(&self, a: &F::Elem) -> K::Elem {
        (self.map)(a)
    }
}

impl<F: Field> Embedding<F, F> {
    pub fn identity(field: F) -> Self {
        Self::new(field.clone(), field, |a| a.clone())
    }
}

/// Fields that embed into `K`.
pub trait Subfield<K: Field>: Field {
    fn embedding_into(&self, target: &K) -> Result<Embedding<Self, K>, FieldError>;
}

fn incompatible<F: Field, K: Field>(f: &F, k: &K) -> FieldError {
    FieldError::IncompatibleFields { from: f.name(), into: k.name() }
}

impl Subfield<PrimeField> for PrimeField {
    fn embedding_into(&self, target: &PrimeField) -> Result<Embedding<Self, PrimeField>, FieldError> {
        if self != target {
            return Err(incompatible(self, target));
        }
        Ok(Embedding::identity(*self))
    }
}

impl Subfield<GaloisField> for PrimeField {
    fn embedding_into(&self, target: &GaloisField) -> Result<Embedding<Self, GaloisField>, FieldError> {
        if self.p() != target.p() {
            return Err(incompatible(self, target));
        }
        Ok(Embedding::new(*self, target.clone(), |a| *a))
    }
}

impl Subfield<GaloisField> for GaloisField {
    /// Sends `x` to the smallest root of the source modulus in the target.
    fn embedding_into(&self, target: &GaloisField) -> Result<Embedding<Self, GaloisField>, FieldError> {
        if self == target {
            return Ok(Embedding::identity(self.clone()));
        }
        if self.p() != target.p() || target.degree() % self.degree() != 0 {
            return Err(incompatible(self, target));
        }
        let modulus = self.modulus().to_vec();
        let root = (0..target.order())
            .map(|i| target.element(i))
            .find(|a| target.eval_prime_poly(&modulus, a) == 0)
            .ok_or_else(|| incompatible(self, target))?;
        let (src, tgt) = (self.clone(), target.clone());
        Ok(Embedding::new(self.clone(), target.clone(), move |a| {
            let coeffs = src.coefficients(*a);
            tgt.eval_prime_poly(&coeffs, &root)
        }))
    }
}

impl<F: Field> Subfield<RatFunc<F>> for F {
    /// Constants.
    fn embedding_into(&self, target: &RatFunc<F>) -> Result<Embedding<Self, RatFunc<F>>, FieldError> {
        if self != target.base() {
            return Err(incompatible(self, target));
        }
        let t = target.clone();
        Ok(Embedding::new(self.clone(), target.clone(), move |a| t.constant(a.clone())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f4_into_f16_is_a_homomorphism() {
        let f4 = GaloisField::new(2, 2).unwrap();
        let f16 = GaloisField::new(2, 4).unwrap();
        let e = f4.embedding_into(&f16).unwrap();
        for a in f4.elements() {
            for b in f4.elements() {
                assert_eq!(e.apply(&f4.mul(&a, &b)), f16.mul(&e.apply(&a), &e.apply(&b)));
                assert_eq!(e.apply(&f4.add(&a, &b)), f16.add(&e.apply(&a), &e.apply(&b)));
            }
        }
        assert!(f4.embedding_into(&GaloisField::new(2, 3).unwrap()).is_err());
    }

    #[test]
    fn prime_field_into_extension() {
        let f3 = PrimeField::new(3).unwrap();
        let f9 = GaloisField::new(3, 2).unwrap();
        let e = f3.embedding_into(&f9).unwrap();
        assert_eq!(e.apply(&2), f9.from_int(2));
        assert!(f3.embedding_into(&GaloisField::new(2, 2).unwrap()).is_err());
    }
}
