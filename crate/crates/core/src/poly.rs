//! Sparse multivariate polynomials over a [`Field`], with a choice of
//! monomial order carried by the ring.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use smallvec::SmallVec;

use crate::field::parse::{self, EvalTarget, ParseError};
use crate::field::{Field, FieldError};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(SmallVec<[u32; 6]>);

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = 1;
        m
    }

    pub fn from_exponents(e: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(e))
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Self) -> Self {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| b - a).collect())
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, other: &Self) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    fn grevlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
        let da: u32 = a.iter().sum();
        let db: u32 = b.iter().sum();
        da.cmp(&db).then_with(|| {
            for (x, y) in a.iter().zip(b.iter()).rev() {
                if x != y {
                    return y.cmp(x);
                }
            }
            Ordering::Equal
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    DegLex,
    GrevLex,
    /// Eliminates the first `k` variables: block degree on them first, then
    /// grevlex inside each block.
    Elimination(usize),
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (&a.0[..], &b.0[..]);
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::DegLex => {
                let da: u32 = a.iter().sum();
                let db: u32 = b.iter().sum();
                da.cmp(&db).then_with(|| a.cmp(b))
            }
            MonomialOrder::GrevLex => Monomial::grevlex_cmp(a, b),
            MonomialOrder::Elimination(k) => {
                let k = (*k).min(a.len());
                Monomial::grevlex_cmp(&a[..k], &b[..k]).then_with(|| Monomial::grevlex_cmp(&a[k..], &b[k..]))
            }
        }
    }
}

/// Terms sorted strictly decreasing in the ring's order, no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<E> {
    terms: Vec<(Monomial, E)>,
}

impl<E> Poly<E> {
    pub fn terms(&self) -> &[(Monomial, E)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<&E> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => {
                let d = m.degree();
                self.terms.iter().all(|t| t.0.degree() == d)
            }
        }
    }

    pub fn into_terms(self) -> Vec<(Monomial, E)> {
        self.terms
    }
}

/// `F[x_1..x_n]` with a fixed monomial order.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyRing<F: Field> {
    field: F,
    nvars: usize,
    order: MonomialOrder,
    names: Arc<Vec<String>>,
}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F, names: Vec<String>, order: MonomialOrder) -> Self {
        Self { field, nvars: names.len(), order, names: Arc::new(names) }
    }

    /// Variables named `prefix1 .. prefixn`.
    pub fn with_prefix(field: F, prefix: &str, n: usize, order: MonomialOrder) -> Self {
        Self::new(field, (1..=n).map(|i| format!("{prefix}{i}")).collect(), order)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn with_order(&self, order: MonomialOrder) -> Self {
        Self { field: self.field.clone(), nvars: self.nvars, order, names: self.names.clone() }
    }

    /// Move a polynomial from a ring with the same variables but another order.
    pub fn reorder(&self, f: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.from_terms(f.terms.clone())
    }

    pub fn zero(&self) -> Poly<F::Elem> {
        Poly { terms: Vec::new() }
    }

    pub fn one(&self) -> Poly<F::Elem> {
        self.constant(self.field.one())
    }

    pub fn constant(&self, c: F::Elem) -> Poly<F::Elem> {
        self.term(Monomial::one(self.nvars), c)
    }

    pub fn var(&self, i: usize) -> Poly<F::Elem> {
        self.term(Monomial::var(self.nvars, i), self.field.one())
    }

    pub fn term(&self, m: Monomial, c: F::Elem) -> Poly<F::Elem> {
        if self.field.is_zero(&c) {
            self.zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    /// Build from arbitrary terms: sorts, merges duplicates and drops zeros.
    pub fn from_terms(&self, mut terms: Vec<(Monomial, F::Elem)>) -> Poly<F::Elem> {
        terms.sort_by(|a, b| self.order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, F::Elem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            if let Some(last) = out.last_mut() {
                if last.0 == m {
                    last.1 = self.field.add(&last.1, &c);
                    continue;
                }
            }
            out.push((m, c));
        }
        out.retain(|t| !self.field.is_zero(&t.1));
        Poly { terms: out }
    }

    pub fn is_constant(&self, f: &Poly<F::Elem>) -> bool {
        f.terms.len() <= 1 && f.terms.first().map_or(true, |t| t.0.is_one())
    }

    /// The constant coefficient.
    pub fn constant_term(&self, f: &Poly<F::Elem>) -> F::Elem {
        match f.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => self.field.zero(),
        }
    }

    fn merge(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>, negate_b: bool) -> Poly<F::Elem> {
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let (mut i, mut j) = (0, 0);
        let fb = |c: &F::Elem| if negate_b { self.field.neg(c) } else { c.clone() };
        while i < a.terms.len() && j < b.terms.len() {
            match self.order.cmp(&a.terms[i].0, &b.terms[j].0) {
                Ordering::Greater => {
                    out.push(a.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b.terms[j].0.clone(), fb(&b.terms[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_b {
                        self.field.sub(&a.terms[i].1, &b.terms[j].1)
                    } else {
                        self.field.add(&a.terms[i].1, &b.terms[j].1)
                    };
                    if !self.field.is_zero(&c) {
                        out.push((a.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a.terms[i..].iter().cloned());
        out.extend(b.terms[j..].iter().map(|(m, c)| (m.clone(), fb(c))));
        Poly { terms: out }
    }

    pub fn add(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.merge(a, b, false)
    }

    pub fn sub(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.merge(a, b, true)
    }

    pub fn neg(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        Poly { terms: a.terms.iter().map(|(m, c)| (m.clone(), self.field.neg(c))).collect() }
    }

    pub fn scale(&self, a: &Poly<F::Elem>, c: &F::Elem) -> Poly<F::Elem> {
        if self.field.is_zero(c) {
            return self.zero();
        }
        Poly { terms: a.terms.iter().map(|(m, x)| (m.clone(), self.field.mul(x, c))).collect() }
    }

    /// `a * c * m`; multiplication by a monomial preserves the term order.
    pub fn mul_term(&self, a: &Poly<F::Elem>, m: &Monomial, c: &F::Elem) -> Poly<F::Elem> {
        if self.field.is_zero(c) {
            return self.zero();
        }
        Poly { terms: a.terms.iter().map(|(n, x)| (n.mul(m), self.field.mul(x, c))).collect() }
    }

    pub fn mul(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        if a.terms.len() == 1 {
            return self.mul_term(b, &a.terms[0].0, &a.terms[0].1);
        }
        if b.terms.len() == 1 {
            return self.mul_term(a, &b.terms[0].0, &b.terms[0].1);
        }
        let mut terms = Vec::with_capacity(a.terms.len() * b.terms.len());
        for (m, x) in &a.terms {
            for (n, y) in &b.terms {
                terms.push((m.mul(n), self.field.mul(x, y)));
            }
        }
        self.from_terms(terms)
    }

    pub fn pow(&self, a: &Poly<F::Elem>, e: u32) -> Poly<F::Elem> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Divide by the leading coefficient (zero stays zero).
    pub fn monic(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        match a.leading_coeff() {
            None => a.clone(),
            Some(lc) if self.field.is_one(lc) => a.clone(),
            Some(lc) => {
                let inv = self.field.inv(lc).expect("nonzero leading coefficient");
                self.scale(a, &inv)
            }
        }
    }

    /// Exact quotient `a / b`, or `None` if `b` does not divide `a`.
    pub fn div_exact(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Option<Poly<F::Elem>> {
        let (lm, lc) = b.terms.first()?;
        let lc_inv = self.field.inv(lc)?;
        let mut rem = a.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.terms.first().cloned() {
            if !lm.divides(&m) {
                return None;
            }
            let qm = lm.quotient_of(&m);
            let qc = self.field.mul(&c, &lc_inv);
            rem = self.sub(&rem, &self.mul_term(b, &qm, &qc));
            quot.push((qm, qc));
        }
        Some(Poly { terms: quot })
    }

    /// Remainder of `f` on division by `divisors` (full reduction of every term).
    pub fn reduce(&self, f: &Poly<F::Elem>, divisors: &[Poly<F::Elem>]) -> Poly<F::Elem> {
        let mut rem: Vec<(Monomial, F::Elem)> = Vec::new();
        let mut p = f.clone();
        'outer: while let Some((m, c)) = p.terms.first().cloned() {
            for g in divisors {
                if let Some((lm, lc)) = g.terms.first() {
                    if lm.divides(&m) {
                        let q = self.field.div(&c, lc).expect("nonzero leading coefficient");
                        p = self.sub(&p, &self.mul_term(g, &lm.quotient_of(&m), &q));
                        continue 'outer;
                    }
                }
            }
            rem.push((m, c));
            p.terms.remove(0);
        }
        Poly { terms: rem }
    }

    pub fn eval(&self, f: &Poly<F::Elem>, point: &[F::Elem]) -> F::Elem {
        let mut acc = self.field.zero();
        for (m, c) in &f.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    t = self.field.mul(&t, &self.field.pow(x, e as u64));
                }
            }
            acc = self.field.add(&acc, &t);
        }
        acc
    }

    /// Apply a coefficient map into another ring with the same number of variables.
    pub fn map_coeffs<G: Field>(
        &self,
        f: &Poly<F::Elem>,
        target: &PolyRing<G>,
        map: impl Fn(&F::Elem) -> G::Elem,
    ) -> Poly<G::Elem> {
        target.from_terms(f.terms.iter().map(|(m, c)| (m.clone(), map(c))).collect())
    }

    pub fn degree_in(&self, f: &Poly<F::Elem>, var: usize) -> Option<u32> {
        f.terms.iter().map(|t| t.0.exponents()[var]).max()
    }

    pub fn uses_var(&self, f: &Poly<F::Elem>, var: usize) -> bool {
        f.terms.iter().any(|t| t.0.exponents()[var] > 0)
    }

    pub fn format(&self, f: &Poly<F::Elem>) -> String {
        if f.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (m, c)) in f.terms.iter().enumerate() {
            let mono: Vec<String> = m
                .exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { self.names[i].clone() } else { format!("{}^{}", self.names[i], e) })
                .collect();
            let cs = self.field.format_elem(c);
            let simple = !cs.contains(['+', '-', '/', '*']);
            let coeff = if simple { cs.clone() } else { format!("({cs})") };
            let term = if mono.is_empty() {
                coeff
            } else if self.field.is_one(c) {
                mono.join("*")
            } else {
                format!("{coeff}*{}", mono.join("*"))
            };
            if k > 0 {
                s.push('+');
            }
            s.push_str(&term);
        }
        s
    }

    /// Parse polynomial text. Identifiers matching a variable name become
    /// variables; anything else is handed to `coeff_symbol` (for instance
    /// `t1` in a coefficient field `F_p(t1)`).
    pub fn parse_with(
        &self,
        s: &str,
        coeff_symbol: &dyn Fn(&str) -> Option<F::Elem>,
    ) -> Result<Poly<F::Elem>, FieldError> {
        let e = parse::parse_expr(s)?;
        parse::eval(&PolyTarget { ring: self, coeff_symbol }, &e)
    }
}

struct PolyTarget<'a, F: Field> {
    ring: &'a PolyRing<F>,
    coeff_symbol: &'a dyn Fn(&str) -> Option<F::Elem>,
}

impl<F: Field> EvalTarget for PolyTarget<'_, F> {
    type Value = Poly<F::Elem>;

    fn constant(&self, n: i64) -> Poly<F::Elem> {
        let f = self.ring.field();
        self.ring.constant(f.from_int(n))
    }

    fn symbol(&self, name: &str, position: usize) -> Result<Poly<F::Elem>, FieldError> {
        if let Some(i) = self.ring.names.iter().position(|v| v == name) {
            return Ok(self.ring.var(i));
        }
        (self.coeff_symbol)(name)
            .map(|c| self.ring.constant(c))
            .ok_or_else(|| ParseError::new(format!("unknown symbol '{name}'"), position).into())
    }

    fn add(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.ring.add(a, b)
    }

    fn sub(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.ring.sub(a, b)
    }

    fn mul(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.ring.mul(a, b)
    }

    fn neg(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.ring.neg(a)
    }

    fn div(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>, position: usize) -> Result<Poly<F::Elem>, FieldError> {
        if self.ring.is_constant(b) && !b.is_zero() {
            let c = self.ring.constant_term(b);
            let inv = self.ring.field().inv(&c).expect("nonzero constant");
            Ok(self.ring.scale(a, &inv))
        } else {
            Err(ParseError::new("can only divide by nonzero constants", position).into())
        }
    }

    fn pow(&self, a: &Poly<F::Elem>, e: u64) -> Poly<F::Elem> {
        self.ring.pow(a, e as u32)
    }
}
