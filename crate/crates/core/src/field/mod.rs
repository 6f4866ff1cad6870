//! Exact fields: prime fields, small Galois fields and rational function
//! fields over them.
//!
//! Fields are runtime objects (the characteristic, the defining polynomial
//! and the number of indeterminates are only known when a module file is
//! read), so arithmetic goes through a [`Field`] context value rather than
//! operator overloading on bare elements. Elements are always stored in a
//! canonical form, so `==` on elements is equality of field values.

mod dynamic;
mod embed;
mod galois;
mod gcd;
pub mod parse;
mod prime;
mod ratfunc;

use std::fmt::Debug;
use std::hash::Hash;

pub use dynamic::{AnyElem, AnyField, ArithOp, FieldElem, FieldSpec};
pub use embed::{Embedding, Subfield};
pub use galois::GaloisField;
pub use gcd::poly_gcd;
pub use prime::PrimeField;
pub use ratfunc::{RatElem, RatFunc};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different fields")]
    FieldMismatch,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("defining polynomial is not irreducible over F_{0}")]
    Reducible(u32),
    #[error("defining polynomial must be monic of degree >= 1")]
    BadModulus,
    #[error("field of order {p}^{degree} exceeds the 2^20 limit")]
    TooLarge { p: u32, degree: usize },
    #[error("no embedding of {from} into {into}")]
    IncompatibleFields { from: String, into: String },
    #[error("parse error: {0}")]
    Parse(#[from] parse::ParseError),
}

/// A field, used as the context for arithmetic on its elements.
pub trait Field: Clone + Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Send + Sync + 'static;

    fn characteristic(&self) -> u32;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, n: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// Human readable name, e.g. `F_2`, `F_4`, `F_2(t1,t2)`.
    fn name(&self) -> String;
    fn format_elem(&self, a: &Self::Elem) -> String;
    fn parse_elem(&self, s: &str) -> Result<Self::Elem, FieldError>;

    /// Rough size of an element, used to pick cheap pivots during
    /// elimination. Constant-size fields return 0.
    fn weight(&self, _a: &Self::Elem) -> usize {
        0
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, FieldError> {
        let binv = self.inv(b).ok_or(FieldError::DivisionByZero)?;
        Ok(self.mul(a, &binv))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

/// A finite field whose elements can be enumerated and indexed.
pub trait FiniteField: Field {
    fn order(&self) -> u64;
    /// Degree over the prime field.
    fn degree(&self) -> usize;
    /// Bijection `0..order` to the elements; index 0 is zero and index 1 is one.
    fn element(&self, index: u64) -> Self::Elem;
    fn index_of(&self, a: &Self::Elem) -> u64;

    fn elements(&self) -> Vec<Self::Elem> {
        (0..self.order()).map(|i| self.element(i)).collect()
    }

    /// The Frobenius `a -> a^p`.
    fn frobenius(&self, a: &Self::Elem) -> Self::Elem {
        self.pow(a, self.characteristic() as u64)
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }
}
