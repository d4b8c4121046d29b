use std::fmt;

use crate::exactlin::{Field, LinError};

/// Dense row-major matrix over an exact field.
#[derive(Clone)]
pub struct Mat<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref<F: Field> {
    pub mat: Mat<F>,
    pub pivots: Vec<usize>,
}

impl<F: Field> Rref<F> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Nonzero rows of the reduced form: a basis of the row space whose
    /// coordinates are read off at the pivot columns.
    pub fn basis(&self) -> Mat<F> {
        self.mat.select_rows(&(0..self.rank()).collect::<Vec<_>>())
    }

    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.mat.cols];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.mat.cols).filter(|&c| !is_pivot[c]).collect()
    }
}

impl<F: Field> PartialEq for Mat<F> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

impl<F: Field> Eq for Mat<F> {}

impl<F: Field> fmt::Debug for Mat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| self.field.elem_to_string(x)).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<F: Field> Mat<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Mat { data: vec![field.zero(); rows * cols], field: field.clone(), rows, cols }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_vec(field: &F, rows: usize, cols: usize, data: Vec<F::Elem>) -> Self {
        assert_eq!(data.len(), rows * cols, "data length does not match shape");
        Mat { field: field.clone(), rows, cols, data }
    }

    pub fn from_rows(field: &F, cols: usize, rows: Vec<Vec<F::Elem>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r);
        }
        Mat { field: field.clone(), rows: n, cols, data }
    }

    pub fn from_cols(field: &F, rows: usize, cols: Vec<Vec<F::Elem>>) -> Self {
        Self::from_rows(field, rows, cols).transpose()
    }

    pub fn from_i64(field: &F, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect();
        Self::from_rows(field, cols, rows)
    }

    pub fn from_fn(field: &F, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F::Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { field: field.clone(), rows, cols, data }
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
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }
    pub fn data(&self) -> &[F::Elem] {
        &self.data
    }
    pub fn into_data(self) -> Vec<F::Elem> {
        self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [F::Elem] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        self.field.is_one(x)
                    } else {
                        self.field.is_zero(x)
                    }
                })
            })
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Mat { field: self.field.clone(), rows: self.cols, cols: self.rows, data }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let data = self.field.matmul(self.rows, self.cols, other.cols, &self.data, &other.data);
        Mat { field: self.field.clone(), rows: self.rows, cols: other.cols, data }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, LinError> {
        if self.cols != other.rows {
            return Err(LinError::Shape(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(self.mul(other))
    }

    /// `self * v` for a column vector `v`.
    pub fn mul_vec(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.cols);
        self.field.matmul(self.rows, self.cols, 1, &self.data, v)
    }

    /// `v * self` for a row vector `v`.
    pub fn vec_mul(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.rows);
        self.field.matmul(1, self.rows, self.cols, v, &self.data)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.shape(), other.shape());
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.add(a, b)).collect();
        Mat { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.shape(), other.shape());
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.sub(a, b)).collect();
        Mat { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &F::Elem) -> Self {
        let f = &self.field;
        let data = self.data.iter().map(|a| f.mul(a, s)).collect();
        Mat { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    /// `self += s * other`.
    pub fn add_scaled(&mut self, s: &F::Elem, other: &Self) {
        assert_eq!(self.shape(), other.shape());
        if self.field.is_zero(s) {
            return;
        }
        let f = self.field.clone();
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !f.is_zero(b) {
                *a = f.add(a, &f.mul(s, b));
            }
        }
    }

    pub fn neg(&self) -> Self {
        let f = &self.field;
        let data = self.data.iter().map(|a| f.neg(a)).collect();
        Mat { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn hstack(field: &F, rows: usize, blocks: &[&Self]) -> Self {
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(field, rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "hstack row mismatch");
            for i in 0..rows {
                out.row_mut(i)[off..off + b.cols].clone_from_slice(b.row(i));
            }
            off += b.cols;
        }
        out
    }

    pub fn vstack(field: &F, cols: usize, blocks: &[&Self]) -> Self {
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column mismatch");
            data.extend_from_slice(&b.data);
            rows += b.rows;
        }
        Mat { field: field.clone(), rows, cols, data }
    }

    /// Block-diagonal sum.
    pub fn block_diag(field: &F, blocks: &[&Self]) -> Self {
        let rows: usize = blocks.iter().map(|b| b.rows).sum();
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                out.row_mut(r0 + i)[c0..c0 + b.cols].clone_from_slice(b.row(i));
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Self) {
        for i in 0..b.rows {
            let c = self.cols;
            self.data[(r0 + i) * c + c0..(r0 + i) * c + c0 + b.cols].clone_from_slice(b.row(i));
        }
    }

    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        Self::from_fn(&self.field, r1 - r0, c1 - c0, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        Mat { field: self.field.clone(), rows: idx.len(), cols: self.cols, data }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Self {
        Self::from_fn(&self.field, self.rows, idx.len(), |i, j| self.get(i, idx[j]).clone())
    }

    /// Kronecker product.
    pub fn kron(&self, other: &Self) -> Self {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let f = &self.field;
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
        out
    }

    pub fn rref(&self) -> Rref<F> {
        let mut m = self.clone();
        let pivots = self.field.rref_in_place(m.rows, m.cols, &mut m.data, true);
        Rref { mat: m, pivots }
    }

    /// Row echelon form by forward elimination only; pivots are normalized
    /// to one and every row vanishes before its pivot.
    pub fn echelon(&self) -> Rref<F> {
        let mut m = self.clone();
        let pivots = self.field.rref_in_place(m.rows, m.cols, &mut m.data, false);
        Rref { mat: m, pivots }
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        // Eliminate along the shorter side.
        if self.rows > self.cols {
            self.transpose().echelon().rank()
        } else {
            self.echelon().rank()
        }
    }

    /// Rows spanning the right null space `{v : self * v = 0}`.
    pub fn kernel_basis(&self) -> Self {
        let r = self.rref();
        let free = r.free_columns();
        let mut out = Self::zeros(&self.field, free.len(), self.cols);
        for (k, &fc) in free.iter().enumerate() {
            out.set(k, fc, self.field.one());
            for (i, &pc) in r.pivots.iter().enumerate() {
                let x = r.mat.get(i, fc);
                if !self.field.is_zero(x) {
                    out.set(k, pc, self.field.neg(x));
                }
            }
        }
        out
    }

    /// Rows spanning `{v : v * self = 0}`.
    pub fn left_kernel_basis(&self) -> Self {
        self.transpose().kernel_basis()
    }

    /// Rows forming a basis of the column space.
    pub fn image_basis(&self) -> Self {
        self.transpose().rref().basis()
    }

    /// Some `x` with `self * x = b`, or `None` when inconsistent.
    pub fn solve(&self, b: &Self) -> Option<Self> {
        assert_eq!(self.rows, b.rows, "solve shape mismatch");
        let aug = Self::hstack(&self.field, self.rows, &[self, b]);
        let r = aug.rref();
        let n = self.cols;
        if r.pivots.iter().any(|&c| c >= n) {
            return None;
        }
        let mut x = Self::zeros(&self.field, n, b.cols);
        for (i, &pc) in r.pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, r.mat.get(i, n + j).clone());
            }
        }
        Some(x)
    }

    pub fn solve_vec(&self, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
        let bm = Self::from_vec(&self.field, b.len(), 1, b.to_vec());
        self.solve(&bm).map(|x| x.into_data())
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = Self::hstack(&self.field, n, &[self, &Self::identity(&self.field, n)]);
        let r = aug.rref();
        if n > 0 && r.pivots[n - 1] >= n {
            return None;
        }
        Some(r.mat.block(0, n, n, 2 * n))
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn trace(&self) -> F::Elem {
        let f = &self.field;
        (0..self.rows.min(self.cols)).fold(f.zero(), |acc, i| f.add(&acc, self.get(i, i)))
    }

    /// Apply `g` entrywise, moving into another field.
    pub fn map_field<G: Field>(&self, g: &G, mut h: impl FnMut(&F::Elem) -> G::Elem) -> Mat<G> {
        Mat { field: g.clone(), rows: self.rows, cols: self.cols, data: self.data.iter().map(&mut h).collect() }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            (0..self.rows)
                .map(|i| serde_json::Value::Array(self.row(i).iter().map(|x| self.field.elem_to_json(x)).collect()))
                .collect(),
        )
    }

    pub fn from_json(field: &F, v: &serde_json::Value, cols_if_empty: usize) -> Result<Self, LinError> {
        let rows = v.as_array().ok_or_else(|| LinError::Parse("matrix must be an array of rows".into()))?;
        let mut out = Vec::with_capacity(rows.len());
        let mut cols = None;
        for r in rows {
            let r = r.as_array().ok_or_else(|| LinError::Parse("matrix row must be an array".into()))?;
            let row: Result<Vec<_>, _> = r.iter().map(|x| field.elem_from_json(x)).collect();
            let row = row?;
            match cols {
                None => cols = Some(row.len()),
                Some(c) if c != row.len() => return Err(LinError::Parse("ragged matrix rows".into())),
                _ => {}
            }
            out.push(row);
        }
        Ok(Self::from_rows(field, cols.unwrap_or(cols_if_empty), out))
    }
}
