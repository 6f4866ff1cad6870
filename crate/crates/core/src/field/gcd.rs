//! Multivariate polynomial gcd over a field by content / primitive-part
//! recursion on a main variable, with primitive pseudo-remainder sequences.

use super::Field;
use crate::poly::{Monomial, Poly, PolyRing};

type P<F> = Poly<<F as Field>::Elem>;

/// A gcd of `f` and `g`, normalized to leading coefficient one in the
/// ring's order. `gcd(0, g)` is the normalized `g`.
pub fn poly_gcd<F: Field>(ring: &PolyRing<F>, f: &P<F>, g: &P<F>) -> P<F> {
    if f.is_zero() {
        return ring.monic(g);
    }
    if g.is_zero() {
        return ring.monic(f);
    }
    if ring.is_constant(f) || ring.is_constant(g) {
        return ring.one();
    }
    if f == g {
        return ring.monic(f);
    }
    let v = (0..ring.nvars())
        .rev()
        .find(|&v| ring.uses_var(f, v) || ring.uses_var(g, v))
        .expect("non-constant polynomial uses a variable");
    ring.monic(&gcd_in(ring, f, g, v))
}

/// Split `f` into coefficients of powers of `x_v` (the coefficients do not involve `x_v`).
fn coeffs_in<F: Field>(ring: &PolyRing<F>, f: &P<F>, v: usize) -> Vec<P<F>> {
    let deg = ring.degree_in(f, v).unwrap_or(0) as usize;
    let mut buckets: Vec<Vec<(Monomial, F::Elem)>> = vec![Vec::new(); deg + 1];
    for (m, c) in f.terms() {
        let mut e = m.exponents().to_vec();
        let k = e[v] as usize;
        e[v] = 0;
        buckets[k].push((Monomial::from_exponents(&e), c.clone()));
    }
    buckets.into_iter().map(|t| ring.from_terms(t)).collect()
}

fn from_coeffs<F: Field>(ring: &PolyRing<F>, coeffs: &[P<F>], v: usize) -> P<F> {
    let mut terms = Vec::new();
    for (k, c) in coeffs.iter().enumerate() {
        let mut e = vec![0u32; ring.nvars()];
        e[v] = k as u32;
        let xk = Monomial::from_exponents(&e);
        for (m, a) in c.terms() {
            terms.push((m.mul(&xk), a.clone()));
        }
    }
    ring.from_terms(terms)
}

fn trim<F: Field>(mut c: Vec<P<F>>) -> Vec<P<F>> {
    while c.len() > 1 && c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
    if c.len() == 1 && c[0].is_zero() {
        c.clear();
    }
    c
}

fn content<F: Field>(ring: &PolyRing<F>, coeffs: &[P<F>]) -> P<F> {
    let mut acc = ring.zero();
    for c in coeffs {
        acc = poly_gcd(ring, &acc, c);
        if ring.is_constant(&acc) && !acc.is_zero() {
            break;
        }
    }
    acc
}

fn divide_all<F: Field>(ring: &PolyRing<F>, coeffs: &[P<F>], d: &P<F>) -> Vec<P<F>> {
    coeffs
        .iter()
        .map(|c| ring.div_exact(c, d).expect("content divides every coefficient"))
        .collect()
}

/// Pseudo-remainder of `a` by `b` as polynomials in the main variable.
fn prem<F: Field>(ring: &PolyRing<F>, a: &[P<F>], b: &[P<F>]) -> Vec<P<F>> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        let mut next: Vec<P<F>> = r.iter().map(|c| ring.mul(c, lb)).collect();
        for (i, bi) in b.iter().enumerate() {
            next[shift + i] = ring.sub(&next[shift + i], &ring.mul(&lr, bi));
        }
        debug_assert!(next[dr].is_zero());
        next.pop();
        r = trim::<F>(next);
    }
    r
}

fn gcd_in<F: Field>(ring: &PolyRing<F>, f: &P<F>, g: &P<F>, v: usize) -> P<F> {
    let cf = trim::<F>(coeffs_in(ring, f, v));
    let cg = trim::<F>(coeffs_in(ring, g, v));
    let cont_f = content(ring, &cf);
    let cont_g = content(ring, &cg);
    if cf.len() == 1 {
        return poly_gcd(ring, &cont_f, &cont_g);
    }
    if cg.len() == 1 {
        return poly_gcd(ring, &cont_f, &cont_g);
    }
    let c = poly_gcd(ring, &cont_f, &cont_g);
    let mut a = divide_all(ring, &cf, &cont_f);
    let mut b = divide_all(ring, &cg, &cont_g);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        let r = prem(ring, &a, &b);
        if r.is_empty() {
            break;
        }
        if r.len() == 1 {
            // constant remainder in x_v: primitive parts are coprime
            return c;
        }
        let cr = content(ring, &r);
        a = b;
        b = divide_all(ring, &r, &cr);
    }
    let pb = content(ring, &b);
    let b = divide_all(ring, &b, &pb);
    ring.mul(&c, &from_coeffs(ring, &b, v))
}
