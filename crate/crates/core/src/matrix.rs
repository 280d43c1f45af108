//! Dense matrices over a [`FiniteField`], reduced row-echelon form, and canonical
//! subspaces.
//!
//! Vectors are columns: a matrix with `rows × cols` entries maps `F^cols → F^rows`.
//! A [`Subspace`] stores its basis as the rows of a matrix in reduced row-echelon
//! form, so two subspaces are equal exactly when their bases are identical.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FieldDescriptor, FiniteField, Scalar};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: FiniteField,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {:?}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

/// JSON form of a matrix: residue lists per entry plus the field descriptor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub field: FieldDescriptor,
    pub rows: usize,
    pub cols: usize,
    /// Row-major; each entry is the packed integer `Σ c_i p^i` of its residue list.
    pub entries: Vec<Vec<u32>>,
}

impl Matrix {
    pub fn zeros(field: &FiniteField, rows: usize, cols: usize) -> Self {
        Matrix { field: field.clone(), rows, cols, data: vec![Scalar::ZERO; rows * cols] }
    }

    pub fn identity(field: &FiniteField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::ONE;
        }
        m
    }

    pub fn from_data(field: &FiniteField, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { field: field.clone(), rows, cols, data })
    }

    /// From integer rows, reduced into the prime subfield.
    pub fn from_ints(field: &FiniteField, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let data = rows
            .iter()
            .flat_map(|row| {
                assert_eq!(row.len(), c, "ragged matrix rows");
                row.iter().map(|&x| field.from_int(x))
            })
            .collect();
        Matrix { field: field.clone(), rows: r, cols: c, data }
    }

    /// From packed scalar encodings (see [`FiniteField::element`]).
    pub fn from_raw(field: &FiniteField, rows: &[Vec<u32>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch("ragged matrix rows".into()));
            }
            for &x in row {
                if x >= field.order() {
                    return Err(Error::Input(format!("entry {x} outside field of order {}", field.order())));
                }
                data.push(field.element(x));
            }
        }
        Ok(Matrix { field: field.clone(), rows: r, cols: c, data })
    }

    pub fn to_raw(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|i| self.row(i).iter().map(|s| s.raw()).collect()).collect()
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson {
            field: self.field.descriptor(),
            rows: self.rows,
            cols: self.cols,
            entries: self.to_raw(),
        }
    }

    pub fn from_json(j: &MatrixJson) -> Result<Self> {
        let field = FiniteField::from_descriptor(&j.field)?;
        let m = Self::from_raw(&field, &j.entries)?;
        if m.rows != j.rows || (m.rows > 0 && m.cols != j.cols) {
            return Err(Error::DimensionMismatch("matrix JSON shape".into()));
        }
        Ok(Matrix { cols: j.cols, ..m })
    }

    pub fn column_vector(field: &FiniteField, v: &[Scalar]) -> Self {
        Matrix { field: field.clone(), rows: v.len(), cols: 1, data: v.to_vec() }
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|s| s.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                let brow = other.row(k);
                let orow = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (o, &b) in orow.iter_mut().zip(brow) {
                    if !b.is_zero() {
                        *o = f.add(*o, f.mul(a, b));
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        let f = &self.field;
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Scalar::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Matrix { data, ..self.clone() }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect();
        Matrix { data, ..self.clone() }
    }

    pub fn scale(&self, c: Scalar) -> Matrix {
        let f = &self.field;
        Matrix { data: self.data.iter().map(|&a| f.mul(c, a)).collect(), ..self.clone() }
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        out
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            data.extend_from_slice(self.row(i));
            data.extend_from_slice(other.row(i));
        }
        Matrix { field: self.field.clone(), rows: self.rows, cols, data }
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn block_diag(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(&self.field, self.rows + other.rows, self.cols + other.cols);
        out.paste(0, 0, self);
        out.paste(self.rows, self.cols, other);
        out
    }

    /// Writes `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn paste(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for i in 0..block.rows {
            let dst = (r0 + i) * self.cols + c0;
            self.data[dst..dst + block.cols].copy_from_slice(block.row(i));
        }
    }

    pub fn submatrix(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        let mut out = Matrix::zeros(&self.field, rows, cols);
        for i in 0..rows {
            let src = (r0 + i) * self.cols + c0;
            out.data[i * cols..(i + 1) * cols].copy_from_slice(&self.data[src..src + cols]);
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        Matrix { field: self.field.clone(), rows: idx.len(), cols: self.cols, data }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(&self.field, self.rows, idx.len());
        for i in 0..self.rows {
            for (jj, &j) in idx.iter().enumerate() {
                out.data[i * idx.len() + jj] = self.get(i, j);
            }
        }
        out
    }

    /// Row-major flattening into a single row vector.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.data.clone()
    }

    /// Reduces `self` to reduced row-echelon form in place and returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let (r, c) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut prow = 0;
        let mut nz: Vec<(usize, Scalar)> = Vec::with_capacity(c);
        for col in 0..c {
            if prow == r {
                break;
            }
            let Some(found) = (prow..r).find(|&i| !self.data[i * c + col].is_zero()) else {
                continue;
            };
            if found != prow {
                for j in col..c {
                    self.data.swap(found * c + j, prow * c + j);
                }
            }
            let inv = f.inv(self.data[prow * c + col]).expect("pivot is nonzero");
            nz.clear();
            for j in col..c {
                let e = &mut self.data[prow * c + j];
                if !e.is_zero() {
                    *e = f.mul(inv, *e);
                    nz.push((j, *e));
                }
            }
            for i in 0..r {
                if i == prow {
                    continue;
                }
                let factor = self.data[i * c + col];
                if factor.is_zero() {
                    continue;
                }
                let row = &mut self.data[i * c..(i + 1) * c];
                for &(j, v) in &nz {
                    row[j] = f.sub(row[j], f.mul(factor, v));
                }
            }
            pivots.push(col);
            prow += 1;
        }
        pivots
    }

    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let piv = m.rref_in_place();
        (m, piv)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Null space `{x : self·x = 0}` as a subspace of `F^cols`.
    pub fn kernel(&self) -> Subspace {
        let (r, piv) = self.rref();
        kernel_from_rref(&r, &piv)
    }

    /// Column space as a subspace of `F^rows`.
    pub fn image(&self) -> Subspace {
        Subspace::from_rows(&self.transpose())
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(&self.field, n));
        let (r, piv) = aug.rref();
        if piv.len() < n || piv[n - 1] != n - 1 {
            return None;
        }
        Some(r.submatrix(0, n, n, n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }
}

fn kernel_from_rref(r: &Matrix, piv: &[usize]) -> Subspace {
    let f = r.field();
    let n = r.cols();
    let mut is_pivot = vec![false; n];
    for &p in piv {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..n).filter(|&j| !is_pivot[j]).collect();
    let mut basis = Matrix::zeros(f, free.len(), n);
    for (b, &fc) in free.iter().enumerate() {
        basis.set(b, fc, Scalar::ONE);
        for (i, &p) in piv.iter().enumerate() {
            basis.set(b, p, f.neg(r.get(i, fc)));
        }
    }
    Subspace::from_rows(&basis)
}

/// Output of [`mat_reduce`].
#[derive(Clone, Debug)]
pub struct Reduction {
    pub rref: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
    pub kernel: Subspace,
    pub image: Subspace,
}

/// Reduced row-echelon form together with rank, kernel and image (spanned by the
/// pivot columns of `m`).
pub fn mat_reduce(m: &Matrix) -> Reduction {
    let (rref, pivots) = m.rref();
    let kernel = kernel_from_rref(&rref, &pivots);
    let image = Subspace::from_rows(&m.select_cols(&pivots).transpose());
    Reduction { rank: pivots.len(), rref, pivots, kernel, image }
}

/// Solves `a·X = b`. Free variables are set to zero; `None` when inconsistent.
pub fn linear_solve(a: &Matrix, b: &Matrix) -> Result<Option<Matrix>> {
    if a.rows() != b.rows() {
        return Err(Error::DimensionMismatch(format!(
            "linear_solve: A has {} rows, B has {}",
            a.rows(),
            b.rows()
        )));
    }
    if a.field() != b.field() {
        return Err(Error::FieldMismatch);
    }
    let n = a.cols();
    let (r, piv) = a.hstack(b).rref();
    if piv.last().is_some_and(|&p| p >= n) {
        return Ok(None);
    }
    let mut x = Matrix::zeros(a.field(), n, b.cols());
    for (i, &p) in piv.iter().enumerate() {
        for j in 0..b.cols() {
            x.set(p, j, r.get(i, n + j));
        }
    }
    Ok(Some(x))
}

/// A subspace of `F^ambient`, canonically represented by its reduced row-echelon basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    /// Span of the rows of `m`.
    pub fn from_rows(m: &Matrix) -> Self {
        let (r, pivots) = m.rref();
        let basis = r.submatrix(0, 0, pivots.len(), m.cols());
        Subspace { ambient: m.cols(), basis, pivots }
    }

    pub fn from_vectors(field: &FiniteField, ambient: usize, vectors: &[Vec<Scalar>]) -> Self {
        let mut m = Matrix::zeros(field, vectors.len(), ambient);
        for (i, v) in vectors.iter().enumerate() {
            assert_eq!(v.len(), ambient);
            m.data[i * ambient..(i + 1) * ambient].copy_from_slice(v);
        }
        Self::from_rows(&m)
    }

    pub fn zero(field: &FiniteField, ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zeros(field, 0, ambient), pivots: Vec::new() }
    }

    pub fn full(field: &FiniteField, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn field(&self) -> &FiniteField {
        self.basis.field()
    }

    /// Basis vectors as rows, in reduced row-echelon form.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.dim()).map(|i| self.basis.row(i).to_vec()).collect()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates not used as pivots; their unit vectors span a complement.
    pub fn complement_coords(&self) -> Vec<usize> {
        let mut is_p = vec![false; self.ambient];
        for &p in &self.pivots {
            is_p[p] = true;
        }
        (0..self.ambient).filter(|&j| !is_p[j]).collect()
    }

    /// `v` minus its component along the basis; zero at every pivot.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let f = self.field();
        let mut w = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let c = w[p];
            if c.is_zero() {
                continue;
            }
            for (wj, &bj) in w.iter_mut().zip(self.basis.row(i)) {
                if !bj.is_zero() {
                    *wj = f.sub(*wj, f.mul(c, bj));
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(|s| s.is_zero())
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        self.contains(v).then(|| self.pivots.iter().map(|&p| v[p]).collect())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        (0..self.dim()).all(|i| other.contains(self.basis.row(i)))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::from_rows(&self.basis.vstack(&other.basis))
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        // Kernel of [B1^T | -B2^T] gives pairs of coefficient vectors with equal images.
        let f = self.field().clone();
        let (d1, d2) = (self.dim(), other.dim());
        if d1 == 0 || d2 == 0 {
            return Subspace::zero(&f, self.ambient);
        }
        let sys = self.basis.transpose().hstack(&other.basis.transpose().scale(f.neg(Scalar::ONE)));
        let k = sys.kernel();
        let coeffs = k.basis().submatrix(0, 0, k.dim(), d1);
        Subspace::from_rows(&coeffs.mul(&self.basis))
    }
}
