//! Generic closed points: for a graded prime `p ⊂ A = k[y]` with Noether
//! normalisation `a_0..a_n` of `A/p`, the ideal
//! `q = (p, a_1 - a_0 t_1, .., a_n - a_0 t_n)` of `B = k(t_1..t_n)[y]`.

use serde::{Deserialize, Serialize};

use super::{groebner, Ideal, IdealError, P};
use crate::field::{poly_gcd, Field, FiniteField, RatFunc};
use crate::poly::{Monomial, MonomialOrder, PolyRing};

/// Upper bound on candidate tuples tried per search stage.
const SEARCH_LIMIT: usize = 4000;

/// Homogeneous `a_0..a_n` of equal degree with `A/(p, a)` of dimension
/// zero. Tries variable subsets, then linear forms, then powers.
pub fn noether_normalization<F: FiniteField>(prime: &Ideal<F>) -> Result<Vec<P<F>>, IdealError> {
    let dim = prime.krull_dimension()?;
    if dim == 0 {
        return Err(IdealError::SearchExhausted);
    }
    let ring = prime.ring();
    let n = ring.nvars();
    let certifies = |cand: &[P<F>]| prime.add(cand).krull_dimension().map_or(false, |d| d == 0);

    let vars: Vec<P<F>> = (0..n).map(|i| ring.var(i)).collect();
    if let Some(found) = search_tuples(&vars, dim, &certifies) {
        return Ok(found);
    }

    let field = ring.field();
    let q = field.order();
    let mut forms = Vec::new();
    for code in 1..q.pow(n as u32) {
        let coeffs: Vec<u64> = (0..n).map(|i| (code / q.pow(i as u32)) % q).collect();
        // first nonzero coefficient equal to one
        if coeffs.iter().find(|&&c| c != 0) != Some(&1) {
            continue;
        }
        let terms = coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| (Monomial::var(n, i), field.element(c)))
            .collect();
        forms.push(ring.from_terms(terms));
    }
    if let Some(found) = search_tuples(&forms, dim, &certifies) {
        return Ok(found);
    }

    for e in 2..=4u32 {
        let mut powers: Vec<P<F>> = Vec::new();
        for f in &forms {
            powers.push(ring.pow(f, e));
        }
        if let Some(found) = search_tuples(&powers, dim, &certifies) {
            return Ok(found);
        }
    }
    Err(IdealError::SearchExhausted)
}

fn search_tuples<T: Clone>(pool: &[T], k: usize, accept: &dyn Fn(&[T]) -> bool) -> Option<Vec<T>> {
    if k > pool.len() {
        return None;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    for _ in 0..SEARCH_LIMIT {
        let cand: Vec<T> = idx.iter().map(|&i| pool[i].clone()).collect();
        if accept(&cand) {
            return Some(cand);
        }
        // next combination in lexicographic order
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if idx[i] < pool.len() - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
    None
}

/// `q ∩ k[y]` for an ideal `q` of `k(t)[y]`: clear denominators into
/// `k[t][y]`, take a Gröbner basis for a block order with `y > t`,
/// saturate by the product of the leading `t`-coefficients, then
/// eliminate `t`.
pub fn contract_to_base<F: Field>(q: &Ideal<RatFunc<F>>, base: &PolyRing<F>) -> Ideal<F> {
    let k = q.ring().field();
    let tring = k.poly_ring();
    let r = q.ring().nvars();
    let n = k.nvars();
    let mut names: Vec<String> = q.ring().names().to_vec();
    names.extend(tring.names().iter().cloned());
    let yt = PolyRing::new(base.field().clone(), names, MonomialOrder::Elimination(r));

    let cleared: Vec<P<F>> = q
        .gens()
        .iter()
        .map(|g| {
            let mut l = tring.one();
            for (_, c) in g.terms() {
                let den = c.denominator();
                let gcd = poly_gcd(tring, &l, den);
                l = tring.mul(&l, &tring.div_exact(den, &gcd).expect("gcd divides"));
            }
            let mut terms = Vec::new();
            for (ym, c) in g.terms() {
                let factor = tring.div_exact(&l, c.denominator()).expect("denominator divides lcm");
                let coeff = tring.mul(c.numerator(), &factor);
                for (tm, a) in coeff.terms() {
                    let mut e = ym.exponents().to_vec();
                    e.extend_from_slice(tm.exponents());
                    terms.push((Monomial::from_exponents(&e), a.clone()));
                }
            }
            yt.from_terms(terms)
        })
        .collect();

    let gb = groebner(&yt, &cleared);
    let mut h = yt.one();
    for g in &gb {
        let lead_y = &g.leading_monomial().expect("nonzero").exponents()[..r];
        let lc = yt.from_terms(
            g.terms()
                .iter()
                .filter(|(m, _)| &m.exponents()[..r] == lead_y)
                .map(|(m, c)| {
                    let mut e = vec![0u32; r];
                    e.extend_from_slice(&m.exponents()[r..]);
                    (Monomial::from_exponents(&e), c.clone())
                })
                .collect(),
        );
        h = yt.mul(&h, &lc);
    }
    let sat = Ideal::new(yt.clone(), gb).saturate(&h);
    let tvars: Vec<usize> = (r..r + n).collect();
    let elim = sat.eliminate(&tvars);
    let gens: Vec<P<F>> = elim
        .gens()
        .iter()
        .map(|g| {
            base.from_terms(
                g.terms().iter().map(|(m, c)| (Monomial::from_exponents(&m.exponents()[..r]), c.clone())).collect(),
            )
        })
        .collect();
    Ideal::new(base.clone(), groebner(base, &gens))
}

/// Whether each `b_i` is a nonzerodivisor on `B / (p, b_1..b_{i-1})` after
/// inverting `a0` (no localisation when `a0` is `None`): checks
/// `((J : b_i) : a0^∞) = (J : a0^∞)`.
pub fn weak_sequence_check<F: Field>(prime: &Ideal<F>, b: &[P<F>], a0: Option<&P<F>>) -> bool {
    let localize = |i: Ideal<F>| match a0 {
        Some(a) => i.saturate(a),
        None => i,
    };
    let mut j = prime.clone();
    for bi in b {
        let lhs = localize(j.colon(bi));
        let rhs = localize(j.clone());
        if !lhs.same_ideal(&rhs) {
            return false;
        }
        j = j.add(std::slice::from_ref(bi));
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    /// `dim B/q = 1`.
    pub closed_point: bool,
    /// `q ∩ A` and `p` have the same radical.
    pub contraction: bool,
    /// `b_1..b_n` is a weak sequence on `B/pB` after inverting `a_0`.
    pub weak_sequence: bool,
}

impl Verification {
    pub fn all(&self) -> bool {
        self.closed_point && self.contraction && self.weak_sequence
    }
}

#[derive(Debug, Clone)]
pub struct GenericPoint<F: Field> {
    pub prime: Ideal<F>,
    pub normalization: Vec<P<F>>,
    pub field: RatFunc<F>,
    pub b: Vec<P<RatFunc<F>>>,
    pub q: Ideal<RatFunc<F>>,
    pub q_basis: Ideal<RatFunc<F>>,
    pub dimension: Option<usize>,
    pub contraction: Ideal<F>,
    pub verification: Verification,
}

/// Serialisable summary of a [`GenericPoint`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenericPointData {
    pub schema: String,
    pub base_field: String,
    pub field: String,
    pub prime: Vec<String>,
    pub normalization: Vec<String>,
    pub b: Vec<String>,
    pub q: Vec<String>,
    pub q_basis_size: usize,
    pub dimension: Option<usize>,
    pub contraction: Vec<String>,
    pub verification: Verification,
    /// Primality of the input is assumed, never checked.
    pub prime_verified: bool,
}

/// Generic closed point of a graded prime, with its verification.
pub fn generic_point<F: FiniteField>(prime: &Ideal<F>) -> Result<GenericPoint<F>, IdealError> {
    let a = noether_normalization(prime)?;
    let n = a.len() - 1;
    let base = prime.ring();
    let k = RatFunc::new(base.field().clone(), n);
    let bring = PolyRing::new(k.clone(), base.names().to_vec(), MonomialOrder::GrevLex);
    let lift = |f: &P<F>| base.map_coeffs(f, &bring, |c| k.constant(c.clone()));
    let a_lifted: Vec<_> = a.iter().map(&lift).collect();
    let b: Vec<_> = (1..=n)
        .map(|i| {
            let t = bring.constant(k.var(i - 1));
            bring.sub(&a_lifted[i], &bring.mul(&a_lifted[0], &t))
        })
        .collect();
    let prime_b = Ideal::new(bring.clone(), prime.gens().iter().map(&lift).collect());
    let q = prime_b.add(&b);
    let q_basis = q.groebner();
    let dimension = q.krull_dimension().ok();
    let contraction = contract_to_base(&q, base);
    let contraction_ok = contraction.gens().iter().all(|g| prime.radical_member(g))
        && prime.gens().iter().all(|g| contraction.radical_member(g));
    let weak = weak_sequence_check(&prime_b, &b, Some(&a_lifted[0]));
    let verification = Verification { closed_point: dimension == Some(1), contraction: contraction_ok, weak_sequence: weak };
    Ok(GenericPoint {
        prime: prime.clone(),
        normalization: a,
        field: k,
        b,
        q,
        q_basis,
        dimension,
        contraction,
        verification,
    })
}

impl<F: Field> GenericPoint<F> {
    pub fn data(&self) -> GenericPointData {
        let fmt_k = |v: &[P<RatFunc<F>>]| v.iter().map(|g| self.q.ring().format(g)).collect::<Vec<_>>();
        GenericPointData {
            schema: "v1".into(),
            base_field: self.prime.ring().field().name(),
            field: self.field.name(),
            prime: self.prime.format(),
            normalization: self.normalization.iter().map(|g| self.prime.ring().format(g)).collect(),
            b: fmt_k(&self.b),
            q: fmt_k(self.q.gens()),
            q_basis_size: self.q_basis.gens().len(),
            dimension: self.dimension,
            contraction: self.contraction.format(),
            verification: self.verification,
            prime_verified: false,
        }
    }
}
