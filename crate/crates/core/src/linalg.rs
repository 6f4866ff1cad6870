//! Dense exact matrices over a [`Field`].

use std::fmt;

use crate::field::{Embedding, Field};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinAlgError {
    #[error("matrices live over different fields")]
    FieldMismatch,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("the linear system has no solution")]
    NoSolution,
}

/// Row-major dense matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field.name())?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.field.format_elem(self.get(i, j))).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Reduced row echelon data of a matrix.
struct Echelon<F: Field> {
    rref: Matrix<F>,
    pivots: Vec<usize>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Self { field: field.clone(), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_vec(field: &F, rows: usize, cols: usize, data: Vec<F::Elem>) -> Result<Self, LinAlgError> {
        if data.len() != rows * cols {
            return Err(LinAlgError::Shape(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        Ok(Self { field: field.clone(), rows, cols, data })
    }

    pub fn from_rows(field: &F, rows: Vec<Vec<F::Elem>>) -> Result<Self, LinAlgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinAlgError::Shape("ragged rows".into()));
        }
        Self::from_vec(field, r, c, rows.into_iter().flatten().collect())
    }

    /// Small integer matrices, reduced into the field. Handy in tests.
    pub fn from_ints(field: &F, rows: &[&[i64]]) -> Self {
        let rows = rows.iter().map(|r| r.iter().map(|&x| field.from_int(x)).collect()).collect();
        Self::from_rows(field, rows).expect("rectangular integer matrix")
    }

    /// A single column.
    pub fn column_vector(field: &F, v: Vec<F::Elem>) -> Self {
        let n = v.len();
        Self { field: field.clone(), rows: n, cols: 1, data: v }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[F::Elem] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    fn check_field(&self, other: &Self) -> Result<(), LinAlgError> {
        if self.field != other.field {
            Err(LinAlgError::FieldMismatch)
        } else {
            Ok(())
        }
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Self { field: self.field.clone(), rows: self.cols, cols: self.rows, data }
    }

    pub fn add(&self, other: &Self) -> Result<Self, LinAlgError> {
        self.check_field(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(LinAlgError::Shape("add".into()));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| self.field.add(a, b)).collect();
        Ok(Self { data, ..self.clone_shape() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, LinAlgError> {
        self.check_field(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(LinAlgError::Shape("sub".into()));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| self.field.sub(a, b)).collect();
        Ok(Self { data, ..self.clone_shape() })
    }

    fn clone_shape(&self) -> Self {
        Self { field: self.field.clone(), rows: self.rows, cols: self.cols, data: Vec::new() }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let data = self.data.iter().map(|a| self.field.mul(a, c)).collect();
        Self { data, ..self.clone_shape() }
    }

    pub fn neg(&self) -> Self {
        let data = self.data.iter().map(|a| self.field.neg(a)).collect();
        Self { data, ..self.clone_shape() }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, LinAlgError> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(LinAlgError::Shape(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                let brow = other.row(k);
                let orow = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (o, b) in orow.iter_mut().zip(brow) {
                    if !f.is_zero(b) {
                        *o = f.add(o, &f.mul(a, b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Result<Self, LinAlgError> {
        if !self.is_square() {
            return Err(LinAlgError::Shape("power of a non-square matrix".into()));
        }
        let mut acc = Self::identity(&self.field, self.rows);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Kronecker product: block `(i, j)` is `self[i][j] * other`.
    pub fn kron(&self, other: &Self) -> Result<Self, LinAlgError> {
        self.check_field(other)?;
        let f = &self.field;
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Self::zeros(f, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if f.is_zero(a) {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !f.is_zero(b) {
                            out.set(i * other.rows + k, j * other.cols + l, f.mul(a, b));
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn hstack(&self, other: &Self) -> Result<Self, LinAlgError> {
        self.check_field(other)?;
        if self.rows != other.rows {
            return Err(LinAlgError::Shape("hstack".into()));
        }
        let mut data = Vec::with_capacity(self.data.len() + other.data.len());
        for i in 0..self.rows {
            data.extend_from_slice(self.row(i));
            data.extend_from_slice(other.row(i));
        }
        Ok(Self { field: self.field.clone(), rows: self.rows, cols: self.cols + other.cols, data })
    }

    pub fn vstack(&self, other: &Self) -> Result<Self, LinAlgError> {
        self.check_field(other)?;
        if self.cols != other.cols {
            return Err(LinAlgError::Shape("vstack".into()));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Self { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data })
    }

    /// Block diagonal `[[self, 0], [0, other]]`.
    pub fn block_diag(&self, other: &Self) -> Result<Self, LinAlgError> {
        self.check_field(other)?;
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        Ok(out)
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for i in 0..self.rows {
            for &j in cols {
                data.push(self.get(i, j).clone());
            }
        }
        Self { field: self.field.clone(), rows: self.rows, cols: cols.len(), data }
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let mut data = Vec::with_capacity(self.cols * rows.len());
        for &i in rows {
            data.extend_from_slice(self.row(i));
        }
        Self { field: self.field.clone(), rows: rows.len(), cols: self.cols, data }
    }

    /// Reinterpret the entries in a larger field.
    pub fn map_field<K: Field>(&self, embedding: &Embedding<F, K>) -> Matrix<K> {
        let data = self.data.iter().map(|a| embedding.apply(a)).collect();
        Matrix { field: embedding.target().clone(), rows: self.rows, cols: self.cols, data }
    }

    /// Apply an arbitrary entrywise map into another field.
    pub fn map_entries<K: Field>(&self, field: &K, f: impl Fn(&F::Elem) -> K::Elem) -> Matrix<K> {
        Matrix { field: field.clone(), rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    fn echelon(&self) -> Echelon<F> {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            // lightest nonzero pivot in column c
            let mut best: Option<(usize, usize)> = None;
            for i in r..m.rows {
                let x = m.get(i, c);
                if !f.is_zero(x) {
                    let w = f.weight(x);
                    if best.map_or(true, |(_, bw)| w < bw) {
                        best = Some((i, w));
                        if w == 0 {
                            break;
                        }
                    }
                }
            }
            let Some((pr, _)) = best else { continue };
            if pr != r {
                for j in 0..m.cols {
                    m.data.swap(pr * m.cols + j, r * m.cols + j);
                }
            }
            let inv = f.inv(m.get(r, c)).expect("nonzero pivot");
            for j in c..m.cols {
                let v = f.mul(m.get(r, j), &inv);
                m.set(r, j, v);
            }
            let pivot_row: Vec<F::Elem> = m.row(r)[c..].to_vec();
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c).clone();
                if f.is_zero(&factor) {
                    continue;
                }
                for (off, pv) in pivot_row.iter().enumerate() {
                    if f.is_zero(pv) {
                        continue;
                    }
                    let j = c + off;
                    let v = f.sub(m.get(i, j), &f.mul(&factor, pv));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { rref: m, pivots }
    }

    /// Forward elimination only, counting pivots. Cheaper than the full
    /// reduced form when just the rank is wanted.
    pub fn rank(&self) -> usize {
        let f = &self.field;
        let mut m = self.clone();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let mut best: Option<(usize, usize)> = None;
            for i in r..m.rows {
                let x = m.get(i, c);
                if !f.is_zero(x) {
                    let w = f.weight(x);
                    if best.map_or(true, |(_, bw)| w < bw) {
                        best = Some((i, w));
                        if w == 0 {
                            break;
                        }
                    }
                }
            }
            let Some((pr, _)) = best else { continue };
            if pr != r {
                for j in 0..m.cols {
                    m.data.swap(pr * m.cols + j, r * m.cols + j);
                }
            }
            let inv = f.inv(m.get(r, c)).expect("nonzero pivot");
            let pivot_row: Vec<F::Elem> = m.row(r)[c + 1..].iter().map(|x| f.mul(x, &inv)).collect();
            for i in r + 1..m.rows {
                let factor = m.get(i, c).clone();
                if f.is_zero(&factor) {
                    continue;
                }
                for (off, pv) in pivot_row.iter().enumerate() {
                    if f.is_zero(pv) {
                        continue;
                    }
                    let j = c + 1 + off;
                    let v = f.sub(m.get(i, j), &f.mul(&factor, pv));
                    m.set(i, j, v);
                }
                m.set(i, c, f.zero());
            }
            r += 1;
        }
        r
    }

    /// Columns form a basis of the null space.
    pub fn kernel_basis(&self) -> Self {
        let f = &self.field;
        let ech = self.echelon();
        let free: Vec<usize> = (0..self.cols).filter(|c| !ech.pivots.contains(c)).collect();
        let mut out = Self::zeros(f, self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            out.set(fc, k, f.one());
            for (row, &pc) in ech.pivots.iter().enumerate() {
                let v = ech.rref.get(row, fc);
                if !f.is_zero(v) {
                    out.set(pc, k, f.neg(v));
                }
            }
        }
        out
    }

    /// Indices of a maximal set of linearly independent columns (the
    /// pivot columns, in increasing order).
    pub fn pivot_columns(&self) -> Vec<usize> {
        self.echelon().pivots
    }

    /// Columns forming a basis of the column space.
    pub fn column_space(&self) -> Self {
        self.select_columns(&self.pivot_columns())
    }

    /// Some `x` with `self * x = rhs` (rhs may have several columns).
    pub fn solve(&self, rhs: &Self) -> Result<Self, LinAlgError> {
        self.check_field(rhs)?;
        if rhs.rows != self.rows {
            return Err(LinAlgError::Shape("solve: row counts differ".into()));
        }
        let f = &self.field;
        let aug = self.hstack(rhs)?;
        let ech = aug.echelon();
        if ech.pivots.iter().any(|&c| c >= self.cols) {
            return Err(LinAlgError::NoSolution);
        }
        let mut x = Self::zeros(f, self.cols, rhs.cols);
        for (row, &pc) in ech.pivots.iter().enumerate() {
            for k in 0..rhs.cols {
                x.set(pc, k, ech.rref.get(row, self.cols + k).clone());
            }
        }
        Ok(x)
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        self.solve(&Self::identity(&self.field, self.rows)).ok().filter(|_| self.rank() == self.rows)
    }

    /// Standard basis vectors that extend the column space of `self` to the
    /// whole ambient space; the returned indices are in increasing order.
    pub fn complement_indices(&self) -> Vec<usize> {
        let f = &self.field;
        let basis = self.column_space();
        let aug = basis.hstack(&Self::identity(f, self.rows)).expect("same field");
        aug.pivot_columns()
            .into_iter()
            .filter(|&c| c >= basis.cols)
            .map(|c| c - basis.cols)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, RatFunc};

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn rank_examples() {
        let f2 = f(2);
        assert_eq!(Matrix::identity(&f2, 3).rank(), 3);
        assert_eq!(Matrix::zeros(&f2, 4, 5).rank(), 0);
        let k = RatFunc::new(f2, 1);
        let t = k.var(0);
        let m = Matrix::from_rows(
            &k,
            vec![vec![t.clone(), k.one()], vec![k.mul(&t, &t), t.clone()]],
        )
        .unwrap();
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        let f3 = f(3);
        assert_eq!(Matrix::identity(&f3, 4).kernel_basis().cols(), 0);
        let z = Matrix::zeros(&f3, 3, 3);
        assert_eq!(z.kernel_basis(), Matrix::identity(&f3, 3));
        let a = Matrix::from_ints(&f3, &[&[1, 1]]);
        let k = a.kernel_basis();
        assert_eq!(k.cols(), 1);
        assert_eq!(k.column(0), vec![2, 1]);
        assert!(a.mul(&k).unwrap().is_zero());
    }

    #[test]
    fn kron_examples() {
        let f2 = f(2);
        let i2 = Matrix::identity(&f2, 2);
        let i3 = Matrix::identity(&f2, 3);
        assert_eq!(i2.kron(&i3).unwrap(), Matrix::identity(&f2, 6));
        let a = Matrix::from_ints(&f2, &[&[1, 1], &[0, 1]]);
        assert!(a.kron(&Matrix::zeros(&f2, 2, 2)).unwrap().is_zero());
        let n = Matrix::from_ints(&f2, &[&[0, 1], &[0, 0]]);
        let nk = n.kron(&i2).unwrap();
        assert_eq!((nk.rows(), nk.cols()), (4, 4));
        assert_eq!(nk.data().iter().filter(|&&x| x == 1).count(), 2);
        assert_eq!(*nk.get(0, 2), 1);
        assert_eq!(*nk.get(1, 3), 1);
        assert_eq!(i2.kron(&Matrix::identity(&f(3), 2)), Err(LinAlgError::FieldMismatch));
    }

    #[test]
    fn solve_examples() {
        let f2 = f(2);
        let b = Matrix::from_ints(&f2, &[&[1], &[0], &[1]]);
        assert_eq!(Matrix::identity(&f2, 3).solve(&b).unwrap(), b);
        assert_eq!(Matrix::zeros(&f2, 3, 3).solve(&b), Err(LinAlgError::NoSolution));
        let a = Matrix::from_ints(&f2, &[&[1, 1]]);
        let x = a.solve(&Matrix::from_ints(&f2, &[&[1]])).unwrap();
        assert_eq!(a.mul(&x).unwrap(), Matrix::from_ints(&f2, &[&[1]]));
    }

    #[test]
    fn complement_extends_to_a_basis() {
        let f5 = f(5);
        let a = Matrix::from_ints(&f5, &[&[1, 0], &[1, 0], &[0, 1]]);
        let c = a.complement_indices();
        assert_eq!(c.len(), 1);
        let full = a.hstack(&Matrix::identity(&f5, 3).select_columns(&c)).unwrap();
        assert_eq!(full.rank(), 3);
    }

    #[test]
    fn inverse_round_trip() {
        let f7 = f(7);
        let a = Matrix::from_ints(&f7, &[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), Matrix::identity(&f7, 2));
        assert!(Matrix::from_ints(&f7, &[&[1, 2], &[2, 4]]).inverse().is_none());
    }
}
