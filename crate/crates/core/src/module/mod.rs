//! Finite-dimensional modules over `Λ_K(r, p) = K[z_1..z_r]/(z_1^p..z_r^p)`.
//!
//! A module is a dimension together with `r` pairwise commuting square
//! matrices whose `p`-th powers vanish. The algebra carries one of two Hopf
//! structures: group-like (`z_i = g_i - 1` for an elementary abelian
//! `p`-group) or primitive (the infinitesimal group `G_a(r)`); only tensor
//! products and Hom modules see the difference.

mod io;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::field::{Embedding, Field, FieldError};
use crate::linalg::{LinAlgError, Matrix};

pub use io::{read_module, write_module, AnyModule, DescribeField, ModuleFile};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModuleError {
    #[error("actions {0} and {1} do not commute")]
    NotCommuting(usize, usize),
    #[error("action {0} does not satisfy z^p = 0")]
    NotNilpotent(usize),
    #[error("expected {expected} action matrices of size {dim}x{dim}")]
    Shape { expected: usize, dim: usize },
    #[error("modules over different algebras")]
    SpecMismatch,
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error("invalid module file: {0}")]
    Format(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HopfFlavor {
    /// `Δ(z) = z⊗1 + 1⊗z + z⊗z`, group algebra of `(Z/p)^r`.
    GroupLike,
    /// `Δ(u) = u⊗1 + 1⊗u`, group algebra of `G_a(r)`.
    Primitive,
}

impl fmt::Display for HopfFlavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HopfFlavor::GroupLike => "grouplike",
            HopfFlavor::Primitive => "primitive",
        })
    }
}

impl std::str::FromStr for HopfFlavor {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "grouplike" | "group-like" | "group" => Ok(HopfFlavor::GroupLike),
            "primitive" => Ok(HopfFlavor::Primitive),
            _ => Err(format!("unknown Hopf flavor '{s}'")),
        }
    }
}

/// The algebra `Λ_K(r, p)` with a chosen Hopf flavor; `p` is the
/// characteristic of `K`.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraSpec<F: Field> {
    field: F,
    r: usize,
    flavor: HopfFlavor,
}

impl<F: Field> AlgebraSpec<F> {
    pub fn new(field: F, r: usize, flavor: HopfFlavor) -> Self {
        assert!(r >= 1, "rank must be positive");
        Self { field, r, flavor }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn p(&self) -> u32 {
        self.field.characteristic()
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn flavor(&self) -> HopfFlavor {
        self.flavor
    }

    /// `p^r`.
    pub fn algebra_dim(&self) -> usize {
        (self.p() as usize).pow(self.r as u32)
    }

    pub fn with_flavor(&self, flavor: HopfFlavor) -> Self {
        Self { flavor, ..self.clone() }
    }

    pub fn with_field<K: Field>(&self, field: K) -> AlgebraSpec<K> {
        AlgebraSpec { field, r: self.r, flavor: self.flavor }
    }

    /// Exponent vector of the `idx`-th monomial of the standard basis.
    /// Index `sum e_i p^i`; so `1` is index 0 and `z_i` is index `p^(i-1)`.
    pub fn monomial(&self, idx: usize) -> Vec<u32> {
        let p = self.p() as usize;
        let mut e = Vec::with_capacity(self.r);
        let mut n = idx;
        for _ in 0..self.r {
            e.push((n % p) as u32);
            n /= p;
        }
        e
    }

    pub fn monomial_index(&self, e: &[u32]) -> usize {
        let p = self.p() as usize;
        e.iter().rev().fold(0, |acc, &x| acc * p + x as usize)
    }

    pub fn monomials(&self) -> Vec<Vec<u32>> {
        (0..self.algebra_dim()).map(|i| self.monomial(i)).collect()
    }
}

/// A finite-dimensional `Λ`-module given by its action matrices.
#[derive(Debug, Clone, PartialEq)]
pub struct LambdaModule<F: Field> {
    spec: AlgebraSpec<F>,
    dim: usize,
    actions: Vec<Matrix<F>>,
}

/// Projective cover `P -> M` with `P` free on lifts of a basis of `M / rad M`.
#[derive(Debug, Clone)]
pub struct ProjectiveCover<F: Field> {
    pub cover: LambdaModule<F>,
    /// `dim M x dim P`.
    pub surjection: Matrix<F>,
    /// Columns are the chosen generators of `M` (`dim M x rank`).
    pub generators: Matrix<F>,
}

/// A submodule together with its embedding.
#[derive(Debug, Clone)]
pub struct Submodule<F: Field> {
    pub module: LambdaModule<F>,
    /// `dim M x dim S`, columns a basis of the submodule.
    pub inclusion: Matrix<F>,
}

/// A quotient module with its projection.
#[derive(Debug, Clone)]
pub struct Quotient<F: Field> {
    pub module: LambdaModule<F>,
    /// `dim Q x dim M`.
    pub projection: Matrix<F>,
}

impl<F: Field> LambdaModule<F> {
    /// Validates shapes, commutativity and `Z_i^p = 0`, reporting the first
    /// violated pair.
    pub fn new(spec: AlgebraSpec<F>, actions: Vec<Matrix<F>>) -> Result<Self, ModuleError> {
        let dim = actions.first().map_or(0, |a| a.rows());
        if actions.len() != spec.r()
            || actions.iter().any(|a| a.rows() != dim || a.cols() != dim || a.field() != spec.field())
        {
            return Err(ModuleError::Shape { expected: spec.r(), dim });
        }
        let m = Self { spec, dim, actions };
        m.validate()?;
        Ok(m)
    }

    /// The zero module.
    pub fn zero(spec: AlgebraSpec<F>) -> Self {
        let actions = (0..spec.r()).map(|_| Matrix::zeros(spec.field(), 0, 0)).collect();
        Self { spec, dim: 0, actions }
    }

    pub(crate) fn from_parts(spec: AlgebraSpec<F>, actions: Vec<Matrix<F>>) -> Self {
        let dim = actions.first().map_or(0, |a| a.rows());
        let m = Self { spec, dim, actions };
        debug_assert_eq!(m.validate(), Ok(()));
        m
    }

    pub fn validate(&self) -> Result<(), ModuleError> {
        let p = self.spec.p();
        for i in 0..self.actions.len() {
            for j in i + 1..self.actions.len() {
                let ab = self.actions[i].mul(&self.actions[j])?;
                let ba = self.actions[j].mul(&self.actions[i])?;
                if ab != ba {
                    return Err(ModuleError::NotCommuting(i, j));
                }
            }
            if !self.actions[i].pow(p)?.is_zero() {
                return Err(ModuleError::NotNilpotent(i));
            }
        }
        Ok(())
    }

    pub fn spec(&self) -> &AlgebraSpec<F> {
        &self.spec
    }

    pub fn field(&self) -> &F {
        self.spec.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn actions(&self) -> &[Matrix<F>] {
        &self.actions
    }

    pub fn action(&self, i: usize) -> &Matrix<F> {
        &self.actions[i]
    }

    /// Same matrices read under the other Hopf structure.
    pub fn with_flavor(&self, flavor: HopfFlavor) -> Self {
        Self { spec: self.spec.with_flavor(flavor), ..self.clone() }
    }

    fn check_spec(&self, other: &Self) -> Result<(), ModuleError> {
        if self.spec != other.spec {
            Err(ModuleError::SpecMismatch)
        } else {
            Ok(())
        }
    }

    /// The regular representation `Λ^n` in the monomial basis; basis vector
    /// `k * p^r + idx` is the monomial `idx` in copy `k`.
    pub fn free(spec: &AlgebraSpec<F>, n: usize) -> Self {
        let f = spec.field();
        let p = spec.p();
        let q = spec.algebra_dim();
        let dim = n * q;
        let mut actions = Vec::with_capacity(spec.r());
        for i in 0..spec.r() {
            let mut z = Matrix::zeros(f, dim, dim);
            for idx in 0..q {
                let mut e = spec.monomial(idx);
                if e[i] + 1 < p {
                    e[i] += 1;
                    let target = spec.monomial_index(&e);
                    for k in 0..n {
                        z.set(k * q + target, k * q + idx, f.one());
                    }
                }
            }
            actions.push(z);
        }
        Self { spec: spec.clone(), dim, actions }
    }

    /// The trivial module `k`.
    pub fn trivial(spec: &AlgebraSpec<F>) -> Self {
        let actions = (0..spec.r()).map(|_| Matrix::zeros(spec.field(), 1, 1)).collect();
        Self { spec: spec.clone(), dim: 1, actions }
    }

    /// Matrix of the monomial `z^e`.
    pub fn monomial_action(&self, e: &[u32]) -> Matrix<F> {
        let mut acc = Matrix::identity(self.field(), self.dim);
        for (i, &k) in e.iter().enumerate() {
            for _ in 0..k {
                acc = acc.mul(&self.actions[i]).expect("square");
            }
        }
        acc
    }

    /// Matrices of all `p^r` basis monomials, in index order.
    pub fn monomial_actions(&self) -> Vec<Matrix<F>> {
        let q = self.spec.algebra_dim();
        let mut out: Vec<Matrix<F>> = Vec::with_capacity(q);
        out.push(Matrix::identity(self.field(), self.dim));
        for idx in 1..q {
            // strip the first nonzero exponent to reuse an earlier product
            let e = self.spec.monomial(idx);
            let i = e.iter().position(|&x| x > 0).unwrap();
            let mut prev = e.clone();
            prev[i] -= 1;
            let m = self.actions[i].mul(&out[self.spec.monomial_index(&prev)]).expect("square");
            out.push(m);
        }
        out
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self, ModuleError> {
        self.check_spec(other)?;
        let actions = self
            .actions
            .iter()
            .zip(&other.actions)
            .map(|(a, b)| a.block_diag(b))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self { spec: self.spec.clone(), dim: self.dim + other.dim, actions })
    }

    /// `M ⊗ N` with basis `m_a ⊗ n_b` at index `a * dim N + b`.
    pub fn tensor_product(&self, other: &Self) -> Result<Self, ModuleError> {
        self.check_spec(other)?;
        let f = self.field();
        let im = Matrix::identity(f, self.dim);
        let in_ = Matrix::identity(f, other.dim);
        let mut actions = Vec::with_capacity(self.spec.r());
        for (a, b) in self.actions.iter().zip(&other.actions) {
            let mut z = a.kron(&in_)?.add(&im.kron(b)?)?;
            if self.spec.flavor() == HopfFlavor::GroupLike {
                z = z.add(&a.kron(b)?)?;
            }
            actions.push(z);
        }
        Ok(Self::from_parts(self.spec.clone(), actions))
    }

    /// `Hom_K(M, N)`: maps `f` stored row-major as `dim N x dim M` matrices,
    /// acted on through the antipode.
    pub fn hom_module(&self, other: &Self) -> Result<Self, ModuleError> {
        self.check_spec(other)?;
        let f = self.field();
        let im = Matrix::identity(f, self.dim);
        let in_ = Matrix::identity(f, other.dim);
        let p = self.spec.p();
        let mut actions = Vec::with_capacity(self.spec.r());
        for (zm, zn) in self.actions.iter().zip(&other.actions) {
            let z = match self.spec.flavor() {
                // u.f = u f - f u
                HopfFlavor::Primitive => zn.kron(&im)?.sub(&in_.kron(&zm.transpose())?)?,
                // g.f = g f g^-1
                HopfFlavor::GroupLike => {
                    let gn = in_.add(zn)?;
                    let ginv = unipotent_inverse(zm, p)?;
                    let g = gn.kron(&ginv.transpose())?;
                    g.sub(&Matrix::identity(f, self.dim * other.dim))?
                }
            };
            actions.push(z);
        }
        Ok(Self::from_parts(self.spec.clone(), actions))
    }

    /// `Hom_K(M, K)`.
    pub fn dual(&self) -> Self {
        self.hom_module(&Self::trivial(&self.spec)).expect("same spec")
    }

    /// `K' ⊗_K M`.
    pub fn scalar_extension<K: Field>(&self, embedding: &Embedding<F, K>) -> Result<LambdaModule<K>, ModuleError> {
        if embedding.source() != self.field() {
            return Err(FieldError::IncompatibleFields {
                from: self.field().name(),
                into: embedding.target().name(),
            }
            .into());
        }
        let actions = self.actions.iter().map(|a| a.map_field(embedding)).collect();
        Ok(LambdaModule {
            spec: self.spec.with_field(embedding.target().clone()),
            dim: self.dim,
            actions,
        })
    }

    /// Basis (as columns) of `rad M = sum z_i M`.
    pub fn radical_basis(&self) -> Matrix<F> {
        let f = self.field();
        let mut all = Matrix::zeros(f, self.dim, 0);
        for z in &self.actions {
            all = all.hstack(z).expect("same field");
        }
        all.column_space()
    }

    /// `dim M / rad M`, the number of generators of a minimal presentation.
    pub fn top_dim(&self) -> usize {
        self.dim - self.radical_basis().cols()
    }

    pub fn projective_cover(&self) -> ProjectiveCover<F> {
        let f = self.field();
        let rad = self.radical_basis();
        let gens_idx = rad.complement_indices();
        let generators = Matrix::identity(f, self.dim).select_columns(&gens_idx);
        let cover = Self::free(&self.spec, gens_idx.len());
        let surjection = self.free_map_from(&generators);
        ProjectiveCover { cover, surjection, generators }
    }

    /// The module map `Λ^b -> M` sending the `k`-th free generator to the
    /// `k`-th column of `images` (`dim M x b`), as a `dim M x b p^r` matrix.
    pub fn free_map_from(&self, images: &Matrix<F>) -> Matrix<F> {
        let f = self.field();
        let q = self.spec.algebra_dim();
        let b = images.cols();
        let orbit = self.monomial_orbit(images);
        let mut out = Matrix::zeros(f, self.dim, b * q);
        for (idx, m) in orbit.iter().enumerate() {
            for k in 0..b {
                for row in 0..self.dim {
                    out.set(row, k * q + idx, m.get(row, k).clone());
                }
            }
        }
        out
    }

    /// `m(Z) V` for every basis monomial `m`, in index order.
    pub fn monomial_orbit(&self, v: &Matrix<F>) -> Vec<Matrix<F>> {
        let q = self.spec.algebra_dim();
        let mut out: Vec<Matrix<F>> = Vec::with_capacity(q);
        out.push(v.clone());
        for idx in 1..q {
            let e = self.spec.monomial(idx);
            let i = e.iter().position(|&x| x > 0).unwrap();
            let mut prev = e;
            prev[i] -= 1;
            let m = self.actions[i].mul(&out[self.spec.monomial_index(&prev)]).expect("shapes agree");
            out.push(m);
        }
        out
    }

    /// Projective (equivalently free, `Λ` being local) iff the projective
    /// cover is injective.
    pub fn is_projective(&self) -> bool {
        let q = self.spec.algebra_dim();
        if self.dim % q != 0 {
            return false;
        }
        let pc = self.projective_cover();
        pc.cover.dim == self.dim && pc.surjection.rank() == self.dim
    }

    /// The submodule spanned by the columns of `basis` (which must be
    /// linearly independent and closed under the action).
    pub fn submodule(&self, basis: &Matrix<F>) -> Result<Submodule<F>, ModuleError> {
        let mut actions = Vec::with_capacity(self.spec.r());
        for z in &self.actions {
            let image = z.mul(basis)?;
            actions.push(basis.solve(&image)?);
        }
        Ok(Submodule {
            module: Self::from_parts(self.spec.clone(), actions),
            inclusion: basis.clone(),
        })
    }

    /// The smallest submodule containing the columns of `vectors`.
    pub fn generated_submodule(&self, vectors: &Matrix<F>) -> Result<Submodule<F>, ModuleError> {
        let mut span = vectors.column_space();
        loop {
            let mut all = span.clone();
            for z in &self.actions {
                all = all.hstack(&z.mul(&span)?)?;
            }
            let next = all.column_space();
            if next.cols() == span.cols() {
                break;
            }
            span = next;
        }
        self.submodule(&span)
    }

    /// `M / S` for the submodule spanned by the columns of `sub` (which must
    /// be closed under the action; they need not be independent).
    pub fn quotient(&self, sub: &Matrix<F>) -> Result<Quotient<F>, ModuleError> {
        let f = self.field();
        let basis = sub.column_space();
        let comp = basis.complement_indices();
        let full = basis.hstack(&Matrix::identity(f, self.dim).select_columns(&comp))?;
        let inv = full.inverse().ok_or(LinAlgError::NoSolution)?;
        let lower: Vec<usize> = (basis.cols()..self.dim).collect();
        let projection = inv.select_rows(&lower);
        let lift = Matrix::identity(f, self.dim).select_columns(&comp);
        let mut actions = Vec::with_capacity(self.spec.r());
        for z in &self.actions {
            actions.push(projection.mul(&z.mul(&lift)?)?);
        }
        Ok(Quotient { module: Self::from_parts(self.spec.clone(), actions), projection })
    }

    /// Kernel of a module map `M -> N` given as a `dim N x dim M` matrix.
    pub fn kernel_of(&self, map: &Matrix<F>) -> Result<Submodule<F>, ModuleError> {
        self.submodule(&map.kernel_basis())
    }

    /// Ranks of all monomial words in the actions of length `1..=max_len`
    /// (words in commuting operators, so monomials). An isomorphism invariant.
    pub fn word_ranks(&self, max_len: u32) -> Vec<usize> {
        let mut out = Vec::new();
        for e in self.spec.monomials() {
            let len: u32 = e.iter().sum();
            if len >= 1 && len <= max_len {
                out.push(self.monomial_action(&e).rank());
            }
        }
        out
    }

    /// Cheap isomorphism invariants: dimension, top dimension and word ranks.
    pub fn invariants(&self) -> (usize, usize, Vec<usize>) {
        (self.dim, self.top_dim(), self.word_ranks(3))
    }
}

/// `(1 + z)^{-1} = sum_{j<p} (-z)^j` for `z^p = 0`.
pub(crate) fn unipotent_inverse<F: Field>(z: &Matrix<F>, p: u32) -> Result<Matrix<F>, LinAlgError> {
    let f = z.field();
    let minus = z.neg();
    let mut term = Matrix::identity(f, z.rows());
    let mut acc = term.clone();
    for _ in 1..p {
        term = term.mul(&minus)?;
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{GaloisField, PrimeField, Subfield};

    fn spec(p: u32, r: usize, flavor: HopfFlavor) -> AlgebraSpec<PrimeField> {
        AlgebraSpec::new(PrimeField::new(p).unwrap(), r, flavor)
    }

    #[test]
    fn free_module_examples() {
        let s = spec(2, 1, HopfFlavor::GroupLike);
        let l = LambdaModule::free(&s, 1);
        assert_eq!(l.dim(), 2);
        assert_eq!(l.action(0), &Matrix::from_ints(s.field(), &[&[0, 0], &[1, 0]]));

        let s = spec(2, 2, HopfFlavor::GroupLike);
        let l = LambdaModule::free(&s, 1);
        assert_eq!(l.dim(), 4);
        for z in l.actions() {
            assert!(z.mul(z).unwrap().is_zero());
        }
        assert!(!l.action(0).mul(l.action(1)).unwrap().is_zero());
        assert_eq!(LambdaModule::free(&s, 0).dim(), 0);
    }

    #[test]
    fn trivial_module_examples() {
        for (p, r) in [(2, 1), (3, 2), (2, 3)] {
            let k = LambdaModule::trivial(&spec(p, r, HopfFlavor::Primitive));
            assert_eq!(k.dim(), 1);
            assert!(k.actions().iter().all(|z| z.is_zero()));
        }
    }

    #[test]
    fn construction_rejects_bad_actions() {
        let s = spec(2, 2, HopfFlavor::GroupLike);
        let f = *s.field();
        let a = Matrix::from_ints(&f, &[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]]);
        let b = Matrix::zeros(&f, 3, 3);
        assert_eq!(LambdaModule::new(s.clone(), vec![a, b.clone()]), Err(ModuleError::NotNilpotent(0)));
        let x = Matrix::from_ints(&f, &[&[0, 0, 0], &[1, 0, 0], &[0, 0, 0]]);
        let y = Matrix::from_ints(&f, &[&[0, 0, 0], &[0, 0, 0], &[0, 1, 0]]);
        assert_eq!(LambdaModule::new(s.clone(), vec![x, y]), Err(ModuleError::NotCommuting(0, 1)));
        assert!(matches!(LambdaModule::new(s, vec![b]), Err(ModuleError::Shape { .. })));
    }

    #[test]
    fn tensor_unit_is_on_the_nose() {
        for flavor in [HopfFlavor::GroupLike, HopfFlavor::Primitive] {
            let s = spec(3, 2, flavor);
            let m = LambdaModule::free(&s, 1).quotient(&Matrix::zeros(s.field(), 9, 0)).unwrap().module;
            let k = LambdaModule::trivial(&s);
            assert_eq!(k.tensor_product(&m).unwrap(), m);
            assert_eq!(k.hom_module(&m).unwrap(), m);
        }
    }

    #[test]
    fn tensor_of_two_copies_of_lambda_is_free() {
        for flavor in [HopfFlavor::GroupLike, HopfFlavor::Primitive] {
            let s = spec(2, 1, flavor);
            let l = LambdaModule::free(&s, 1);
            let t = l.tensor_product(&l).unwrap();
            assert_eq!(t.dim(), 4);
            assert_eq!(t.action(0).rank(), 2);
            assert!(t.is_projective());
        }
    }

    #[test]
    fn projectivity_examples() {
        let s = spec(2, 2, HopfFlavor::GroupLike);
        let l = LambdaModule::free(&s, 1);
        let k = LambdaModule::trivial(&s);
        assert!(l.is_projective());
        assert!(!k.is_projective());
        assert!(!k.direct_sum(&l).unwrap().is_projective());
        assert!(l.tensor_product(&k.direct_sum(&k).unwrap()).unwrap().is_projective());
        assert!(k.hom_module(&l).unwrap().is_projective());
    }

    #[test]
    fn direct_sum_examples() {
        let s = spec(3, 2, HopfFlavor::Primitive);
        let k = LambdaModule::trivial(&s);
        let kk = k.direct_sum(&k).unwrap();
        assert_eq!(kk.dim(), 2);
        assert!(kk.actions().iter().all(|z| z.is_zero()));
        let l = LambdaModule::free(&s, 1);
        assert_eq!(l.direct_sum(&LambdaModule::zero(s.clone())).unwrap(), l);
        assert_eq!(l.direct_sum(&kk).unwrap().dim(), 11);
        let other = spec(3, 2, HopfFlavor::GroupLike);
        assert_eq!(k.direct_sum(&LambdaModule::trivial(&other)), Err(ModuleError::SpecMismatch));
    }

    #[test]
    fn scalar_extension_keeps_dimension_and_triviality() {
        let s = spec(2, 2, HopfFlavor::GroupLike);
        let f4 = GaloisField::new(2, 2).unwrap();
        let e = s.field().embedding_into(&f4).unwrap();
        let k = LambdaModule::trivial(&s).scalar_extension(&e).unwrap();
        assert_eq!(k.dim(), 1);
        assert!(k.actions().iter().all(|z| z.is_zero()));
        let l = LambdaModule::free(&s, 2).scalar_extension(&e).unwrap();
        assert_eq!(l.dim(), 8);
        assert!(l.is_projective());
    }

    #[test]
    fn quotient_and_submodule_of_lambda() {
        let s = spec(2, 2, HopfFlavor::Primitive);
        let l = LambdaModule::free(&s, 1);
        // z1 * Λ
        let z1 = Matrix::column_vector(s.field(), vec![0, 1, 0, 0]);
        let sub = l.generated_submodule(&z1).unwrap();
        assert_eq!(sub.module.dim(), 2);
        let q = l.quotient(&sub.inclusion).unwrap();
        assert_eq!(q.module.dim(), 2);
        // Λ/(z1) = k[z2]/(z2^2)
        assert!(q.module.action(0).is_zero());
        assert_eq!(q.module.action(1).rank(), 1);
    }
}
