use std::fmt;
use std::sync::Arc;

use super::parse;
use super::{poly_gcd, Field, FieldError};
use crate::poly::{MonomialOrder, Poly, PolyRing};

/// The rational function field `F(t_1..t_n)` over a base field `F`.
///
/// Elements are kept reduced: numerator and denominator coprime, the
/// denominator monic in graded-lex order, and zero written as `0/1`.
#[derive(Clone)]
pub struct RatFunc<F: Field> {
    inner: Arc<Inner<F>>,
}

struct Inner<F: Field> {
    base: F,
    ring: PolyRing<F>,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatElem<E> {
    num: Poly<E>,
    den: Poly<E>,
}

impl<E: fmt::Debug> fmt::Debug for RatElem<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?})/({:?})", self.num, self.den)
    }
}

impl<E> RatElem<E> {
    pub fn numerator(&self) -> &Poly<E> {
        &self.num
    }

    pub fn denominator(&self) -> &Poly<E> {
        &self.den
    }
}

impl<F: Field> fmt::Debug for RatFunc<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({})", self.name())
    }
}

impl<F: Field> PartialEq for RatFunc<F> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.base == other.inner.base && self.inner.ring.names() == other.inner.ring.names())
    }
}

impl<F: Field> RatFunc<F> {
    /// `F(t1..tn)`.
    pub fn new(base: F, n: usize) -> Self {
        Self::with_names(base, (1..=n).map(|i| format!("t{i}")).collect())
    }

    pub fn with_names(base: F, names: Vec<String>) -> Self {
        let ring = PolyRing::new(base.clone(), names, MonomialOrder::DegLex);
        Self { inner: Arc::new(Inner { base, ring }) }
    }

    pub fn base(&self) -> &F {
        &self.inner.base
    }

    pub fn nvars(&self) -> usize {
        self.inner.ring.nvars()
    }

    /// The polynomial ring `F[t]` holding numerators and denominators.
    pub fn poly_ring(&self) -> &PolyRing<F> {
        &self.inner.ring
    }

    /// The indeterminate `t_{i+1}`.
    pub fn var(&self, i: usize) -> RatElem<F::Elem> {
        self.from_poly(self.inner.ring.var(i))
    }

    pub fn constant(&self, c: F::Elem) -> RatElem<F::Elem> {
        self.from_poly(self.inner.ring.constant(c))
    }

    pub fn from_poly(&self, num: Poly<F::Elem>) -> RatElem<F::Elem> {
        RatElem { num, den: self.inner.ring.one() }
    }

    /// `num / den` in reduced form.
    pub fn fraction(&self, num: Poly<F::Elem>, den: Poly<F::Elem>) -> Result<RatElem<F::Elem>, FieldError> {
        if den.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let ring = &self.inner.ring;
        let g = poly_gcd(ring, &num, &den);
        let (num, den) = if ring.is_constant(&g) {
            (num, den)
        } else {
            (ring.div_exact(&num, &g).unwrap(), ring.div_exact(&den, &g).unwrap())
        };
        Ok(self.normalize(num, den))
    }

    fn normalize(&self, num: Poly<F::Elem>, den: Poly<F::Elem>) -> RatElem<F::Elem> {
        let ring = &self.inner.ring;
        if num.is_zero() {
            return RatElem { num, den: ring.one() };
        }
        let lc = den.leading_coeff().expect("nonzero denominator");
        if self.inner.base.is_one(lc) {
            return RatElem { num, den };
        }
        let inv = self.inner.base.inv(lc).expect("nonzero");
        RatElem { num: ring.scale(&num, &inv), den: ring.scale(&den, &inv) }
    }

    /// Constant value if the element lies in the base field.
    pub fn as_constant(&self, a: &RatElem<F::Elem>) -> Option<F::Elem> {
        let ring = &self.inner.ring;
        (ring.is_constant(&a.num) && ring.is_constant(&a.den)).then(|| ring.constant_term(&a.num))
    }

    /// Substitute values for the indeterminates; `None` if the denominator vanishes.
    pub fn eval(&self, a: &RatElem<F::Elem>, point: &[F::Elem]) -> Option<F::Elem> {
        let ring = &self.inner.ring;
        let d = ring.eval(&a.den, point);
        let n = ring.eval(&a.num, point);
        self.inner.base.div(&n, &d).ok()
    }

    fn is_one_poly(&self, p: &Poly<F::Elem>) -> bool {
        p.len() == 1 && self.inner.ring.is_constant(p) && self.inner.base.is_one(&p.terms()[0].1)
    }
}

impl<F: Field> Field for RatFunc<F> {
    type Elem = RatElem<F::Elem>;

    fn characteristic(&self) -> u32 {
        self.inner.base.characteristic()
    }

    fn zero(&self) -> Self::Elem {
        RatElem { num: self.inner.ring.zero(), den: self.inner.ring.one() }
    }

    fn one(&self) -> Self::Elem {
        RatElem { num: self.inner.ring.one(), den: self.inner.ring.one() }
    }

    fn from_int(&self, n: i64) -> Self::Elem {
        self.constant(self.inner.base.from_int(n))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.num.is_zero()
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let ring = &self.inner.ring;
        if a.num.is_zero() {
            return b.clone();
        }
        if b.num.is_zero() {
            return a.clone();
        }
        if a.den == b.den {
            let num = ring.add(&a.num, &b.num);
            if self.is_one_poly(&a.den) {
                return self.normalize(num, a.den.clone());
            }
            return self.fraction(num, a.den.clone()).expect("nonzero denominator");
        }
        let g = poly_gcd(ring, &a.den, &b.den);
        let ad = ring.div_exact(&a.den, &g).unwrap();
        let bd = ring.div_exact(&b.den, &g).unwrap();
        let num = ring.add(&ring.mul(&a.num, &bd), &ring.mul(&b.num, &ad));
        let den = ring.mul(&ad, &b.den);
        if ring.is_constant(&g) {
            return self.normalize(num, den);
        }
        let h = poly_gcd(ring, &num, &g);
        if ring.is_constant(&h) {
            self.normalize(num, den)
        } else {
            self.normalize(ring.div_exact(&num, &h).unwrap(), ring.div_exact(&den, &h).unwrap())
        }
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        RatElem { num: self.inner.ring.neg(&a.num), den: a.den.clone() }
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let ring = &self.inner.ring;
        if a.num.is_zero() || b.num.is_zero() {
            return self.zero();
        }
        let a_poly = self.is_one_poly(&a.den);
        let b_poly = self.is_one_poly(&b.den);
        if a_poly && b_poly {
            return RatElem { num: ring.mul(&a.num, &b.num), den: a.den.clone() };
        }
        let reduce = |n: &Poly<F::Elem>, d: &Poly<F::Elem>| {
            if self.is_one_poly(d) {
                return (n.clone(), d.clone());
            }
            let g = poly_gcd(ring, n, d);
            if ring.is_constant(&g) {
                (n.clone(), d.clone())
            } else {
                (ring.div_exact(n, &g).unwrap(), ring.div_exact(d, &g).unwrap())
            }
        };
        let (an, bd) = reduce(&a.num, &b.den);
        let (bn, ad) = reduce(&b.num, &a.den);
        self.normalize(ring.mul(&an, &bn), ring.mul(&ad, &bd))
    }

    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        if a.num.is_zero() {
            return None;
        }
        Some(self.normalize(a.den.clone(), a.num.clone()))
    }

    fn name(&self) -> String {
        if self.inner.ring.nvars() == 0 {
            return self.inner.base.name();
        }
        format!("{}({})", self.inner.base.name(), self.inner.ring.names().join(","))
    }

    fn format_elem(&self, a: &Self::Elem) -> String {
        let ring = &self.inner.ring;
        let num = ring.format(&a.num);
        if self.is_one_poly(&a.den) {
            return num;
        }
        let wrap = |s: String, p: &Poly<F::Elem>| if p.len() > 1 { format!("({s})") } else { s };
        format!("{}/{}", wrap(num, &a.num), wrap(ring.format(&a.den), &a.den))
    }

    fn parse_elem(&self, s: &str) -> Result<Self::Elem, FieldError> {
        let e = parse::parse_expr(s)?;
        let names = self.inner.ring.names();
        let base = &self.inner.base;
        let n = names.len();
        parse::eval_in_field(self, &e, &|sym| {
            if let Some(i) = names.iter().position(|v| v == sym) {
                return Some(self.var(i));
            }
            if n == 1 && sym == "t" {
                return Some(self.var(0));
            }
            base.parse_elem(sym).ok().map(|c| self.constant(c))
        })
    }

    fn weight(&self, a: &Self::Elem) -> usize {
        let d = |p: &Poly<F::Elem>| p.total_degree().unwrap_or(0) as usize;
        (d(&a.num) + d(&a.den)) * 4 + a.num.len() + a.den.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn f2t() -> RatFunc<PrimeField> {
        RatFunc::new(PrimeField::new(2).unwrap(), 1)
    }

    #[test]
    fn common_denominator_cancels() {
        let k = f2t();
        let a = k.parse_elem("t/(t+1)").unwrap();
        let b = k.parse_elem("1/(t+1)").unwrap();
        assert_eq!(k.add(&a, &b), k.one());
    }

    #[test]
    fn canonical_form_is_unique() {
        let k = RatFunc::new(PrimeField::new(3).unwrap(), 2);
        let a = k.parse_elem("(t1^2 - t2^2)/(2*t1 - 2*t2)").unwrap();
        let b = k.parse_elem("2*t1 + 2*t2").unwrap();
        assert_eq!(a, b);
        assert_eq!(k.format_elem(&a), "2*t1+2*t2");
        let c = k.parse_elem("1/(2*t1)").unwrap();
        assert_eq!(k.format_elem(&c), "2/t1");
    }

    #[test]
    fn division_by_zero_is_reported() {
        let k = f2t();
        assert_eq!(k.div(&k.one(), &k.zero()), Err(FieldError::DivisionByZero));
        assert!(k.parse_elem("1/(t+t)").is_err());
    }

    #[test]
    fn frobenius_is_additive() {
        let k = RatFunc::new(PrimeField::new(3).unwrap(), 1);
        let a = k.parse_elem("(t+1)/(t^2+2)").unwrap();
        let b = k.parse_elem("t/(t+2)").unwrap();
        let lhs = k.pow(&k.add(&a, &b), 3);
        let rhs = k.add(&k.pow(&a, 3), &k.pow(&b, 3));
        assert_eq!(lhs, rhs);
    }
}
