//! Buchberger's algorithm with the product and chain criteria, producing
//! reduced bases.

use std::collections::HashSet;

use crate::field::Field;
use crate::poly::{Monomial, Poly, PolyRing};

type P<F> = Poly<<F as Field>::Elem>;

/// `S(f, g)` for nonzero `f`, `g`.
pub fn s_polynomial<F: Field>(ring: &PolyRing<F>, f: &P<F>, g: &P<F>) -> P<F> {
    let (fm, fc) = f.terms().first().expect("nonzero");
    let (gm, gc) = g.terms().first().expect("nonzero");
    let l = fm.lcm(gm);
    let field = ring.field();
    let a = ring.mul_term(f, &fm.quotient_of(&l), &field.inv(fc).expect("nonzero"));
    let b = ring.mul_term(g, &gm.quotient_of(&l), &field.inv(gc).expect("nonzero"));
    ring.sub(&a, &b)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Reduced Gröbner basis (monic, sorted by decreasing leading monomial).
pub fn groebner<F: Field>(ring: &PolyRing<F>, gens: &[P<F>]) -> Vec<P<F>> {
    let mut basis: Vec<P<F>> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut done: HashSet<(usize, usize)> = HashSet::new();

    let add = |basis: &mut Vec<P<F>>, pairs: &mut Vec<Pair>, g: P<F>| {
        let g = ring.monic(&g);
        let k = basis.len();
        let gm = g.leading_monomial().expect("nonzero").clone();
        for (i, h) in basis.iter().enumerate() {
            let hm = h.leading_monomial().expect("nonzero");
            pairs.push(Pair { i, j: k, lcm: hm.lcm(&gm) });
        }
        basis.push(g);
    };

    for g in gens {
        let r = ring.reduce(&ring.reorder(g), &basis);
        if !r.is_zero() {
            add(&mut basis, &mut pairs, r);
        }
    }

    while !pairs.is_empty() {
        // normal strategy: smallest lcm first
        let pos = (0..pairs.len())
            .min_by(|&a, &b| ring.order().cmp(&pairs[a].lcm, &pairs[b].lcm))
            .expect("nonempty");
        let Pair { i, j, lcm } = pairs.swap_remove(pos);
        done.insert((i, j));
        let (fi, fj) = (&basis[i], &basis[j]);
        let (mi, mj) = (fi.leading_monomial().unwrap(), fj.leading_monomial().unwrap());
        if mi.coprime(mj) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_monomial().unwrap().divides(&lcm)
                && done.contains(&(i.min(k), i.max(k)))
                && done.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(ring, fi, fj);
        let r = ring.reduce(&s, &basis);
        if !r.is_zero() {
            if ring.is_constant(&r) {
                return vec![ring.one()];
            }
            add(&mut basis, &mut pairs, r);
        }
    }
    reduce_basis(ring, basis)
}

/// Minimalise and interreduce a Gröbner basis.
fn reduce_basis<F: Field>(ring: &PolyRing<F>, basis: Vec<P<F>>) -> Vec<P<F>> {
    let mut minimal: Vec<P<F>> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let gm = g.leading_monomial().unwrap();
        let redundant = basis.iter().enumerate().any(|(l, h)| {
            let hm = h.leading_monomial().unwrap();
            l != k && hm.divides(gm) && (hm != gm || l < k)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<P<F>> = minimal.iter().enumerate().filter(|(l, _)| *l != k).map(|(_, g)| g.clone()).collect();
        let (m, c) = minimal[k].terms()[0].clone();
        let lead = ring.term(m, c);
        let tail = ring.sub(&minimal[k], &lead);
        out.push(ring.monic(&ring.add(&lead, &ring.reduce(&tail, &others))));
    }
    out.sort_by(|a, b| ring.order().cmp(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
    out
}

/// Whether every S-polynomial of `basis` reduces to zero modulo `basis`.
pub fn satisfies_buchberger_criterion<F: Field>(ring: &PolyRing<F>, basis: &[P<F>]) -> bool {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let s = s_polynomial(ring, &basis[i], &basis[j]);
            if !ring.reduce(&s, basis).is_zero() {
                return false;
            }
        }
    }
    true
}
