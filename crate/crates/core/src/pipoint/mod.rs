//! π-points of `Λ_K(r, p)`: flat maps `K[t]/(t^p) -> Λ_K`, Jordan types
//! of restrictions, and the support and cosupport sets they cut out.

mod dade;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::field::{Field, FieldError, FiniteField, GaloisField, PrimeField, RatFunc, Subfield};
use crate::linalg::Matrix;
use crate::module::{AlgebraSpec, LambdaModule, ModuleError};
use crate::poly::{MonomialOrder, PolyRing};

pub use dade::{dade_certificate, dade_test, CellVerdict, DadeCertificate};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PiError {
    #[error("the linear part vanishes, so the map is not flat")]
    NotFlat,
    #[error("a π-point has no constant term")]
    ConstantTerm,
    #[error("π-point and module live over different algebras")]
    SpecMismatch,
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Module(#[from] ModuleError),
}

/// `t ↦ α(z_1..z_r)`, stored as a list of monomial terms in the truncated
/// algebra (exponents below `p`).
#[derive(Debug, Clone, PartialEq)]
pub struct PiPoint<F: Field> {
    spec: AlgebraSpec<F>,
    terms: Vec<(Vec<u32>, F::Elem)>,
    linear: Vec<F::Elem>,
}

impl<F: Field> PiPoint<F> {
    pub fn new(spec: AlgebraSpec<F>, terms: Vec<(Vec<u32>, F::Elem)>) -> Result<Self, PiError> {
        let f = spec.field().clone();
        let p = spec.p();
        let r = spec.r();
        let mut merged: Vec<(Vec<u32>, F::Elem)> = Vec::new();
        for (e, c) in terms {
            assert_eq!(e.len(), r, "exponent vector length");
            if e.iter().any(|&x| x >= p) || f.is_zero(&c) {
                continue;
            }
            match merged.iter_mut().find(|(m, _)| *m == e) {
                Some(slot) => slot.1 = f.add(&slot.1, &c),
                None => merged.push((e, c)),
            }
        }
        merged.retain(|(_, c)| !f.is_zero(c));
        merged.sort_by(|a, b| a.0.cmp(&b.0));
        if merged.iter().any(|(e, _)| e.iter().all(|&x| x == 0)) {
            return Err(PiError::ConstantTerm);
        }
        let mut linear = vec![f.zero(); r];
        for (e, c) in &merged {
            if e.iter().sum::<u32>() == 1 {
                let i = e.iter().position(|&x| x == 1).unwrap();
                linear[i] = c.clone();
            }
        }
        if linear.iter().all(|c| f.is_zero(c)) {
            return Err(PiError::NotFlat);
        }
        Ok(Self { spec, terms: merged, linear })
    }

    /// The linear π-point `t ↦ Σ λ_i z_i`.
    pub fn linear(spec: AlgebraSpec<F>, lambda: &[F::Elem]) -> Result<Self, PiError> {
        let r = spec.r();
        let terms = lambda
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let mut e = vec![0u32; r];
                e[i] = 1;
                (e, c.clone())
            })
            .collect();
        Self::new(spec, terms)
    }

    /// Parse a polynomial in `z1..zr`, e.g. `z1 + x*z2 + z1*z2`.
    pub fn parse(spec: AlgebraSpec<F>, s: &str) -> Result<Self, PiError> {
        let field = spec.field().clone();
        let ring = PolyRing::with_prefix(field.clone(), "z", spec.r(), MonomialOrder::GrevLex);
        let poly = ring.parse_with(s, &|name| field.parse_elem(name).ok())?;
        let terms = poly.into_terms().into_iter().map(|(m, c)| (m.exponents().to_vec(), c)).collect();
        Self::new(spec, terms)
    }

    pub fn spec(&self) -> &AlgebraSpec<F> {
        &self.spec
    }

    pub fn terms(&self) -> &[(Vec<u32>, F::Elem)] {
        &self.terms
    }

    pub fn linear_part(&self) -> &[F::Elem] {
        &self.linear
    }

    pub fn is_linear(&self) -> bool {
        self.terms.iter().all(|(e, _)| e.iter().sum::<u32>() == 1)
    }

    /// Add further terms (e.g. a tail of degree at least two).
    pub fn with_terms(&self, extra: &[(Vec<u32>, F::Elem)]) -> Result<Self, PiError> {
        let mut terms = self.terms.clone();
        terms.extend(extra.iter().cloned());
        Self::new(self.spec.clone(), terms)
    }

    /// Equivalent iff the linear parts are proportional.
    pub fn equivalent(&self, other: &Self) -> Result<bool, PiError> {
        if self.spec != other.spec {
            return Err(PiError::SpecMismatch);
        }
        let m = Matrix::from_rows(self.spec.field(), vec![self.linear.clone(), other.linear.clone()])
            .expect("two rows of length r");
        Ok(m.rank() == 1)
    }

    /// The action of `t` on `M`, i.e. `α(Z_1..Z_r)`.
    pub fn restrict(&self, m: &LambdaModule<F>) -> Result<Matrix<F>, PiError> {
        if m.spec() != &self.spec {
            return Err(PiError::SpecMismatch);
        }
        let f = self.spec.field();
        let mut acc = Matrix::zeros(f, m.dim(), m.dim());
        if self.is_linear() {
            for (z, c) in m.actions().iter().zip(&self.linear) {
                if !f.is_zero(c) {
                    acc = acc.add(&z.scale(c)).expect("same shape");
                }
            }
            return Ok(acc);
        }
        for (e, c) in &self.terms {
            acc = acc.add(&m.monomial_action(e).scale(c)).expect("same shape");
        }
        Ok(acc)
    }

    pub fn jordan_type(&self, m: &LambdaModule<F>) -> Result<JordanType, PiError> {
        Ok(JordanType::of_nilpotent(&self.restrict(m)?, self.spec.p()))
    }

    pub fn is_projective_at(&self, m: &LambdaModule<F>) -> Result<bool, PiError> {
        let n = self.restrict(m)?;
        Ok(is_free_action(&n, self.spec.p()))
    }

    pub fn format(&self) -> String {
        let f = self.spec.field();
        let ring = PolyRing::with_prefix(f.clone(), "z", self.spec.r(), MonomialOrder::GrevLex);
        let poly = ring.from_terms(
            self.terms
                .iter()
                .map(|(e, c)| (crate::poly::Monomial::from_exponents(e), c.clone()))
                .collect(),
        );
        ring.format(&poly)
    }
}

/// Whether a nilpotent `N` with `N^p = 0` makes `K^n` free over `K[t]/(t^p)`.
pub fn is_free_action<F: Field>(n: &Matrix<F>, p: u32) -> bool {
    let dim = n.rows();
    if dim % p as usize != 0 {
        return false;
    }
    n.pow(p - 1).expect("square").rank() == dim / p as usize
}

/// A partition of `dim M` into Jordan block sizes, largest first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct JordanType(pub Vec<usize>);

impl JordanType {
    /// Block sizes of a nilpotent matrix with `N^p = 0`, from the ranks of
    /// its powers: `#blocks of size s = rk N^{s-1} - 2 rk N^s + rk N^{s+1}`.
    pub fn of_nilpotent<F: Field>(n: &Matrix<F>, p: u32) -> Self {
        let dim = n.rows();
        let mut ranks = vec![dim];
        let mut power = Matrix::identity(n.field(), dim);
        for _ in 0..=p {
            power = power.mul(n).expect("square");
            ranks.push(power.rank());
        }
        let mut parts = Vec::new();
        for s in (1..=p as usize).rev() {
            let count = ranks[s - 1] + ranks[s + 1] - 2 * ranks[s];
            parts.extend(std::iter::repeat(s).take(count));
        }
        JordanType(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn is_free(&self, p: u32) -> bool {
        self.0.iter().all(|&s| s == p as usize)
    }
}

impl fmt::Display for JordanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

/// A point of `P^{r-1}(K)` with first nonzero coordinate 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjPoint<E>(pub Vec<E>);

impl<E: Clone> ProjPoint<E> {
    /// Normalise arbitrary nonzero homogeneous coordinates.
    pub fn normalize<F: Field<Elem = E>>(field: &F, coords: &[E]) -> Option<Self> {
        let lead = coords.iter().find(|c| !field.is_zero(c))?;
        let inv = field.inv(lead)?;
        Some(ProjPoint(coords.iter().map(|c| field.mul(c, &inv)).collect()))
    }

    pub fn format<F: Field<Elem = E>>(&self, field: &F) -> String {
        let parts: Vec<String> = self.0.iter().map(|c| field.format_elem(c)).collect();
        format!("[{}]", parts.join(":"))
    }
}

/// All points of `P^{r-1}(K)`, grouped by the position of the leading 1 and
/// then by element index.
pub fn projective_points<K: FiniteField>(k: &K, r: usize) -> Vec<ProjPoint<K::Elem>> {
    let q = k.order();
    let mut out = Vec::new();
    for lead in 0..r {
        let free = r - lead - 1;
        for code in 0..q.pow(free as u32) {
            let mut v = vec![k.zero(); r];
            v[lead] = k.one();
            for j in 0..free {
                v[lead + 1 + j] = k.element((code / q.pow((free - 1 - j) as u32)) % q);
            }
            out.push(ProjPoint(v));
        }
    }
    out
}

/// Apply the `e`-fold Frobenius twist `λ_i ↦ λ_i^{p^e}` to coordinates.
pub fn twist_point<K: FiniteField>(k: &K, pt: &ProjPoint<K::Elem>, twist: u32) -> ProjPoint<K::Elem> {
    let mut v = pt.0.clone();
    for _ in 0..twist {
        v = v.iter().map(|c| k.frobenius(c)).collect();
    }
    ProjPoint(v)
}

/// Support of a module already defined over the finite field `K`.
pub fn support_points_over<K: FiniteField>(m: &LambdaModule<K>, twist: u32) -> Vec<ProjPoint<K::Elem>> {
    let k = m.field();
    projective_points(k, m.spec().r())
        .into_iter()
        .filter(|pt| {
            let alpha = PiPoint::linear(m.spec().clone(), &pt.0).expect("normalised points are nonzero");
            !alpha.is_projective_at(m).expect("same spec")
        })
        .map(|pt| twist_point(k, &pt, twist))
        .collect()
}

/// Points `[λ] ∈ P^{r-1}(K)` at which `M_K` is not projective.
pub fn support_points<F, K>(m: &LambdaModule<F>, k: &K, twist: u32) -> Result<Vec<ProjPoint<K::Elem>>, PiError>
where
    F: Subfield<K>,
    K: FiniteField,
{
    let e = m.field().embedding_into(k)?;
    Ok(support_points_over(&m.scalar_extension(&e)?, twist))
}

/// Multiplication by `a` on `K = F_p[x]/(f)` as a `d x d` matrix over `F_p`.
fn multiplication_matrix(k: &GaloisField, fp: &PrimeField, a: &u32) -> Matrix<PrimeField> {
    let d = k.degree();
    let mut m = Matrix::zeros(fp, d, d);
    let mut basis = k.one();
    for j in 0..d {
        let col = k.coefficients(k.mul(a, &basis));
        for (i, c) in col.into_iter().enumerate() {
            m.set(i, j, c);
        }
        basis = k.mul(&basis, &k.generator());
    }
    m
}

/// Cosupport over a finite extension `K` of the prime field: the test runs
/// on `Hom_k(K, M)`, where `λ_i z_i` acts by `f ↦ Z_i ∘ f ∘ (λ_i ·)`; this
/// is a `d · dim M`-dimensional problem over `F_p` that never forms `M_K`.
pub fn cosupport_points(m: &LambdaModule<PrimeField>, k: &GaloisField, twist: u32) -> Result<Vec<ProjPoint<u32>>, PiError> {
    let fp = *m.field();
    if k.p() != fp.p() {
        return Err(FieldError::IncompatibleFields { from: fp.name(), into: k.name() }.into());
    }
    let p = fp.p();
    let d = k.degree();
    let dim = m.dim();
    let mut out = Vec::new();
    for pt in projective_points(k, m.spec().r()) {
        let mut t = Matrix::zeros(&fp, dim * d, dim * d);
        for (z, lam) in m.actions().iter().zip(&pt.0) {
            if *lam == 0 {
                continue;
            }
            let rt = multiplication_matrix(k, &fp, lam).transpose();
            t = t.add(&z.kron(&rt).expect("same field")).expect("same shape");
        }
        let projective = (dim * d) % p as usize == 0
            && t.pow(p - 1).expect("square").rank() == d * dim / p as usize
            && dim % p as usize == 0;
        if !projective {
            out.push(twist_point(k, &pt, twist));
        }
    }
    Ok(out)
}

/// The generic π-point of chart `i` (0-based): `z_i + Σ_{j≠i} t_* z_j` over
/// `K(t_1..t_{r-1})`, with the indeterminates assigned left to right.
pub fn generic_chart<F: Field>(spec: &AlgebraSpec<F>, i: usize) -> PiPoint<RatFunc<F>> {
    let r = spec.r();
    let k = RatFunc::new(spec.field().clone(), r - 1);
    let mut lambda = Vec::with_capacity(r);
    let mut next = 0;
    for j in 0..r {
        if j == i {
            lambda.push(k.one());
        } else {
            lambda.push(k.var(next));
            next += 1;
        }
    }
    PiPoint::linear(spec.with_field(k), &lambda).expect("chart has a unit coordinate")
}

/// Projectivity verdict at each generic chart (true = projective), via
/// `rank N = dim M (p-1)/p`, which avoids powering over `k(t)`.
pub fn chart_verdicts<F: Field>(m: &LambdaModule<F>) -> Vec<bool> {
    let r = m.spec().r();
    let k = RatFunc::new(m.field().clone(), r - 1);
    let e = m.field().embedding_into(&k).expect("constants embed");
    let mk = m.scalar_extension(&e).expect("matching source field");
    let p = m.spec().p() as usize;
    let dim = m.dim();
    (0..r)
        .map(|i| {
            let n = generic_chart(m.spec(), i).restrict(&mk).expect("same spec");
            dim % p == 0 && n.rank() == dim / p * (p - 1)
        })
        .collect()
}

/// Machine-readable support summary.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SupportReport {
    pub schema: String,
    pub field: String,
    pub twist: u32,
    pub points: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cosupport: Option<Vec<String>>,
    pub charts: Vec<bool>,
}

impl SupportReport {
    pub fn new<K: FiniteField>(
        k: &K,
        twist: u32,
        points: &[ProjPoint<K::Elem>],
        cosupport: Option<&[ProjPoint<K::Elem>]>,
        charts: Vec<bool>,
    ) -> Self {
        let fmt = |v: &[ProjPoint<K::Elem>]| v.iter().map(|p| p.format(k)).collect::<Vec<_>>();
        SupportReport {
            schema: "v1".into(),
            field: k.name(),
            twist,
            points: fmt(points),
            cosupport: cosupport.map(fmt),
            charts,
        }
    }
}
