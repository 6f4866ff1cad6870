//! Ideals in polynomial rings over exact fields: Gröbner bases, Krull
//! dimension, saturation, radical membership, colon ideals and
//! elimination, plus generic closed points of graded primes.

mod generic;
mod groebner;

use crate::field::{Field, FieldError};
use crate::poly::{Monomial, MonomialOrder, Poly, PolyRing};

pub use generic::{
    contract_to_base, generic_point, noether_normalization, weak_sequence_check, GenericPoint, GenericPointData,
    Verification,
};
pub use groebner::{groebner, s_polynomial, satisfies_buchberger_criterion};

type P<F> = Poly<<F as Field>::Elem>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IdealError {
    #[error("the ideal is the whole ring")]
    UnitIdeal,
    #[error("no Noether normalisation found within the search bounds")]
    SearchExhausted,
    #[error("generator {0} is not homogeneous")]
    NonHomogeneous(usize),
    #[error("polynomials from different rings")]
    RingMismatch,
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// An ideal given by generators in a fixed polynomial ring.
#[derive(Debug, Clone, PartialEq)]
pub struct Ideal<F: Field> {
    ring: PolyRing<F>,
    gens: Vec<P<F>>,
}

impl<F: Field> Ideal<F> {
    pub fn new(ring: PolyRing<F>, gens: Vec<P<F>>) -> Self {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).map(|g| ring.reorder(&g)).collect();
        Self { ring, gens }
    }

    /// Like [`Ideal::new`] but rejects inhomogeneous generators.
    pub fn homogeneous(ring: PolyRing<F>, gens: Vec<P<F>>) -> Result<Self, IdealError> {
        if let Some(i) = gens.iter().position(|g| !g.is_homogeneous()) {
            return Err(IdealError::NonHomogeneous(i));
        }
        Ok(Self::new(ring, gens))
    }

    /// One polynomial per nonempty line; `#` starts a comment. Symbols that
    /// are not ring variables are read as field elements.
    pub fn parse(ring: PolyRing<F>, text: &str) -> Result<Self, IdealError> {
        let field = ring.field().clone();
        let mut gens = Vec::new();
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            gens.push(ring.parse_with(line, &|s| field.parse_elem(s).ok())?);
        }
        Self::homogeneous(ring, gens)
    }

    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn gens(&self) -> &[P<F>] {
        &self.gens
    }

    pub fn format(&self) -> Vec<String> {
        self.gens.iter().map(|g| self.ring.format(g)).collect()
    }

    /// Reduced Gröbner basis in the ring's order.
    pub fn groebner(&self) -> Ideal<F> {
        Ideal { ring: self.ring.clone(), gens: groebner(&self.ring, &self.gens) }
    }

    pub fn groebner_in(&self, order: MonomialOrder) -> Ideal<F> {
        Ideal::new(self.ring.with_order(order), self.gens.clone()).groebner()
    }

    pub fn is_unit(&self) -> bool {
        let gb = groebner(&self.ring, &self.gens);
        gb.len() == 1 && self.ring.is_constant(&gb[0])
    }

    pub fn normal_form(&self, f: &P<F>) -> P<F> {
        let gb = groebner(&self.ring, &self.gens);
        self.ring.reduce(&self.ring.reorder(f), &gb)
    }

    pub fn contains(&self, f: &P<F>) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Whether both ideals contain each other's generators.
    pub fn same_ideal(&self, other: &Ideal<F>) -> bool {
        other.gens.iter().all(|g| self.contains(g)) && self.gens.iter().all(|g| other.contains(g))
    }

    /// Krull dimension of the quotient ring, read off the leading-term ideal
    /// as the size of a largest set of variables no leading monomial lives in.
    pub fn krull_dimension(&self) -> Result<usize, IdealError> {
        let gb = groebner(&self.ring, &self.gens);
        if gb.len() == 1 && self.ring.is_constant(&gb[0]) {
            return Err(IdealError::UnitIdeal);
        }
        let leads: Vec<u64> = gb
            .iter()
            .map(|g| {
                let m = g.leading_monomial().expect("nonzero");
                m.exponents().iter().enumerate().filter(|(_, &e)| e > 0).fold(0u64, |acc, (i, _)| acc | 1 << i)
            })
            .collect();
        let n = self.ring.nvars();
        let best = (0u64..1 << n)
            .filter(|&set| leads.iter().all(|&l| l & !set != 0))
            .map(|set| set.count_ones() as usize)
            .max()
            .unwrap_or(0);
        Ok(best)
    }

    pub fn add(&self, extra: &[P<F>]) -> Ideal<F> {
        let mut gens = self.gens.clone();
        gens.extend(extra.iter().cloned());
        Ideal::new(self.ring.clone(), gens)
    }

    /// Generators of `self ∩ k[remaining variables]`, where `vars` lists the
    /// variables to eliminate; the result lives in the original ring.
    pub fn eliminate(&self, vars: &[usize]) -> Ideal<F> {
        let n = self.ring.nvars();
        let mut perm: Vec<usize> = vars.to_vec();
        perm.extend((0..n).filter(|i| !vars.contains(i)));
        let names: Vec<String> = perm.iter().map(|&i| self.ring.names()[i].clone()).collect();
        let elim = PolyRing::new(self.ring.field().clone(), names, MonomialOrder::Elimination(vars.len()));
        let moved: Vec<P<F>> = self.gens.iter().map(|g| permute(&elim, g, &perm)).collect();
        let gb = groebner(&elim, &moved);
        let mut inverse = vec![0; n];
        for (new, &old) in perm.iter().enumerate() {
            inverse[old] = new;
        }
        let kept = gb
            .into_iter()
            .filter(|g| g.terms().iter().all(|(m, _)| m.exponents()[..vars.len()].iter().all(|&e| e == 0)))
            .map(|g| permute(&self.ring, &g, &inverse))
            .collect();
        Ideal::new(self.ring.clone(), kept)
    }

    /// `(I : f^∞)`, via `(I, 1 - w f) ∩ k[y]`.
    pub fn saturate(&self, f: &P<F>) -> Ideal<F> {
        let (ext, lift) = self.with_extra_variable();
        let w = ext.var(0);
        let one_minus = ext.sub(&ext.one(), &ext.mul(&w, &lift(f)));
        let mut gens: Vec<P<F>> = self.gens.iter().map(&lift).collect();
        gens.push(one_minus);
        let elim = Ideal::new(ext, gens).eliminate(&[0]);
        let back: Vec<P<F>> = elim.gens.iter().map(|g| drop_first(&self.ring, g)).collect();
        Ideal::new(self.ring.clone(), groebner(&self.ring, &back))
    }

    /// `f ∈ √I`, via `1 ∈ (I, 1 - w f)`.
    pub fn radical_member(&self, f: &P<F>) -> bool {
        let (ext, lift) = self.with_extra_variable();
        let w = ext.var(0);
        let mut gens: Vec<P<F>> = self.gens.iter().map(&lift).collect();
        gens.push(ext.sub(&ext.one(), &ext.mul(&w, &lift(f))));
        Ideal::new(ext, gens).is_unit()
    }

    /// `I ∩ J`, via `(s I, (1 - s) J) ∩ k[y]`.
    pub fn intersect(&self, other: &Ideal<F>) -> Ideal<F> {
        let (ext, lift) = self.with_extra_variable();
        let s = ext.var(0);
        let one_minus = ext.sub(&ext.one(), &s);
        let mut gens: Vec<P<F>> = self.gens.iter().map(|g| ext.mul(&s, &lift(g))).collect();
        gens.extend(other.gens.iter().map(|g| ext.mul(&one_minus, &lift(g))));
        let elim = Ideal::new(ext, gens).eliminate(&[0]);
        let back = elim.gens.iter().map(|g| drop_first(&self.ring, g)).collect();
        Ideal::new(self.ring.clone(), back)
    }

    /// `(I : f)`.
    pub fn colon(&self, f: &P<F>) -> Ideal<F> {
        if f.is_zero() {
            return Ideal::new(self.ring.clone(), vec![self.ring.one()]);
        }
        let principal = Ideal::new(self.ring.clone(), vec![f.clone()]);
        let meet = self.intersect(&principal);
        let gens = meet
            .gens
            .iter()
            .map(|g| self.ring.div_exact(g, f).expect("element of (f) is divisible by f"))
            .collect();
        Ideal::new(self.ring.clone(), gens)
    }

    /// The ring with a fresh first variable `w`, and the inclusion map.
    fn with_extra_variable(&self) -> (PolyRing<F>, impl Fn(&P<F>) -> P<F>) {
        let mut names = vec!["_w".to_string()];
        names.extend(self.ring.names().iter().cloned());
        let ext = PolyRing::new(self.ring.field().clone(), names, self.ring.order().clone());
        let ext2 = ext.clone();
        let lift = move |g: &P<F>| {
            ext2.from_terms(
                g.terms()
                    .iter()
                    .map(|(m, c)| {
                        let mut e = vec![0u32];
                        e.extend_from_slice(m.exponents());
                        (Monomial::from_exponents(&e), c.clone())
                    })
                    .collect(),
            )
        };
        (ext, lift)
    }
}

/// Rename variables: variable `i` of `g` becomes variable `perm_inv` such
/// that the new exponent vector is `e'[k] = e[perm[k]]`.
fn permute<F: Field>(target: &PolyRing<F>, g: &P<F>, perm: &[usize]) -> P<F> {
    target.from_terms(
        g.terms()
            .iter()
            .map(|(m, c)| {
                let e: Vec<u32> = perm.iter().map(|&i| m.exponents()[i]).collect();
                (Monomial::from_exponents(&e), c.clone())
            })
            .collect(),
    )
}

/// Drop the (unused) first variable.
fn drop_first<F: Field>(target: &PolyRing<F>, g: &P<F>) -> P<F> {
    target.from_terms(g.terms().iter().map(|(m, c)| (Monomial::from_exponents(&m.exponents()[1..]), c.clone())).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn ideal(p: u32, n: usize, gens: &[&str]) -> Ideal<PrimeField> {
        let ring = PolyRing::with_prefix(PrimeField::new(p).unwrap(), "y", n, MonomialOrder::GrevLex);
        let gens = gens.iter().map(|s| ring.parse_with(s, &|_| None).unwrap()).collect();
        Ideal::new(ring, gens)
    }

    fn poly(i: &Ideal<PrimeField>, s: &str) -> Poly<u32> {
        i.ring().parse_with(s, &|_| None).unwrap()
    }

    #[test]
    fn krull_dimension_examples() {
        assert_eq!(ideal(2, 2, &[]).krull_dimension(), Ok(2));
        assert_eq!(ideal(2, 2, &["y1", "y2"]).krull_dimension(), Ok(0));
        assert_eq!(ideal(2, 3, &["y1*y3-y2^2"]).krull_dimension(), Ok(2));
        assert_eq!(ideal(2, 2, &["y1", "y1+1"]).krull_dimension(), Err(IdealError::UnitIdeal));
    }

    #[test]
    fn saturation_and_radical() {
        let i = ideal(2, 2, &["y1*y2"]);
        let s = i.saturate(&poly(&i, "y1"));
        assert_eq!(s.gens(), &[poly(&i, "y2")]);
        let i = ideal(2, 2, &["y1^2"]);
        assert!(i.radical_member(&poly(&i, "y1")));
        let i = ideal(2, 2, &["y1"]);
        assert!(!i.radical_member(&poly(&i, "y2")));
    }

    #[test]
    fn colon_and_intersection() {
        let i = ideal(3, 2, &["y1^2*y2"]);
        let c = i.colon(&poly(&i, "y1"));
        assert!(c.same_ideal(&ideal(3, 2, &["y1*y2"])));
        let a = ideal(3, 2, &["y1"]);
        let b = ideal(3, 2, &["y2"]);
        assert!(a.intersect(&b).same_ideal(&ideal(3, 2, &["y1*y2"])));
    }

    #[test]
    fn elimination() {
        let i = ideal(5, 3, &["y1-y2", "y2-y3^2"]);
        let e = i.eliminate(&[1]);
        assert!(e.same_ideal(&ideal(5, 3, &["y1-y3^2"])));
    }

    #[test]
    fn parse_ideal_text() {
        let ring = PolyRing::with_prefix(PrimeField::new(2).unwrap(), "y", 3, MonomialOrder::GrevLex);
        let i = Ideal::parse(ring.clone(), "y1*y3 - y2^2\n# comment\n\ny1\n").unwrap();
        assert_eq!(i.gens().len(), 2);
        assert_eq!(Ideal::parse(ring, "y1 + y2^2"), Err(IdealError::NonHomogeneous(0)));
    }
}
