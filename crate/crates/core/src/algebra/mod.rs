//! Split basic finite-dimensional algebras given by structure constants.
//!
//! Internally every algebra uses a basis adapted to its idempotents: each
//! vertex idempotent is a basis vector, and every other basis vector lies in
//! some `e_v A e_w` and in the radical. Input in any other basis is rebased
//! on construction.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock, Weak};

use crate::exactlin::{Echelon, Field, FieldSpec, Mat};

mod checks;

pub use checks::AlgebraReport;

pub type Alg<F> = Arc<Algebra<F>>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("not associative: ({0} * {1}) * {2} differs from {0} * ({1} * {2})")]
    NotAssociative(String, String, String),
    #[error("bad unit: {0}")]
    BadUnit(String),
    #[error("bad idempotents: {0}")]
    BadIdempotents(String),
    #[error("bad radical: {0}")]
    BadRadical(String),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("malformed algebra data: {0}")]
    Shape(String),
}

/// Raw algebra data in an arbitrary basis, as read from input.
#[derive(Clone, Debug)]
pub struct RawAlgebra<F: Field> {
    pub field: F,
    pub labels: Vec<String>,
    /// `mul[i * dim + j]` = sparse coordinates of `b_i * b_j`.
    pub mul: Vec<Vec<(usize, F::Elem)>>,
    pub one: Vec<F::Elem>,
    pub idempotents: Vec<Vec<F::Elem>>,
    /// Rows spanning the radical; `None` asks for the trace-form radical
    /// (characteristic zero only).
    pub rad_basis: Option<Mat<F>>,
    pub vertex_names: Option<Vec<String>>,
}

pub struct Algebra<F: Field> {
    field: F,
    labels: Vec<String>,
    vertex_names: Vec<String>,
    mul: Vec<Vec<(usize, F::Elem)>>,
    idems: Vec<usize>,
    left_v: Vec<usize>,
    right_v: Vec<usize>,
    is_idem: Vec<bool>,
    rad: Vec<usize>,
    rad_gens: Vec<usize>,
    proj_basis: Vec<Vec<usize>>,
    pos_in_proj: Vec<usize>,
    fingerprint: u64,
    op: OnceLock<Alg<F>>,
    op_of: OnceLock<Weak<Algebra<F>>>,
    env: OnceLock<Alg<F>>,
    proj_actions: OnceLock<Vec<Vec<Mat<F>>>>,
    left_mult: OnceLock<Vec<Mat<F>>>,
}

impl<F: Field> std::fmt::Debug for Algebra<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Algebra")
            .field("field", &self.spec())
            .field("dim", &self.dim())
            .field("vertices", &self.vertex_names)
            .field("fingerprint", &format_args!("{:016x}", self.fingerprint))
            .finish()
    }
}

impl<F: Field> Algebra<F> {
    /// Validates raw data and builds the algebra, rebasing if needed.
    pub fn from_raw(raw: RawAlgebra<F>) -> Result<Alg<F>, AlgebraError> {
        let d = raw.labels.len();
        let f = raw.field.clone();
        if raw.mul.len() != d * d {
            return Err(AlgebraError::Shape(format!("expected {} products, found {}", d * d, raw.mul.len())));
        }
        if raw.one.len() != d {
            return Err(AlgebraError::Shape("unit vector has wrong length".into()));
        }
        for prod in &raw.mul {
            if prod.iter().any(|(k, _)| *k >= d) {
                return Err(AlgebraError::Shape("product coordinate out of range".into()));
            }
        }
        if raw.idempotents.iter().any(|e| e.len() != d) {
            return Err(AlgebraError::Shape("idempotent vector has wrong length".into()));
        }
        let mul = normalize_sparse(&f, raw.mul);
        let rad = match raw.rad_basis {
            Some(r) => {
                if r.cols() != d {
                    return Err(AlgebraError::Shape("radical rows have wrong length".into()));
                }
                r
            }
            None if f.characteristic() == 0 => checks::trace_form_radical(&f, d, &mul),
            None => {
                return Err(AlgebraError::BadRadical(
                    "in positive characteristic the radical basis must be supplied (or use a quiver presentation)"
                        .into(),
                ))
            }
        };
        checks::check_axioms(&f, &raw.labels, &mul, &raw.one, &raw.idempotents, &rad)?;
        let n = raw.idempotents.len();
        let vertex_names = match raw.vertex_names {
            Some(v) if v.len() == n => v,
            Some(_) => return Err(AlgebraError::Shape("vertex name count differs from idempotent count".into())),
            None => (0..n).map(|v| v.to_string()).collect(),
        };
        if let Some(idems) = adapted_idempotents(&f, &mul, &raw.idempotents, &rad) {
            return Ok(Self::from_adapted(f, raw.labels, vertex_names, mul, idems));
        }
        let (labels, mul, idems) = rebase(&f, d, &mul, &raw.idempotents, &rad);
        Ok(Self::from_adapted(f, labels, vertex_names, mul, idems))
    }

    /// Builds from data already in an adapted basis; no axiom checks.
    pub(crate) fn from_adapted(
        field: F,
        labels: Vec<String>,
        vertex_names: Vec<String>,
        mul: Vec<Vec<(usize, F::Elem)>>,
        idems: Vec<usize>,
    ) -> Alg<F> {
        let d = labels.len();
        let mut is_idem = vec![false; d];
        for &i in &idems {
            is_idem[i] = true;
        }
        let mut left_v = vec![usize::MAX; d];
        let mut right_v = vec![usize::MAX; d];
        for b in 0..d {
            for (v, &e) in idems.iter().enumerate() {
                if !mul[e * d + b].is_empty() {
                    left_v[b] = v;
                }
                if !mul[b * d + e].is_empty() {
                    right_v[b] = v;
                }
            }
            assert!(left_v[b] != usize::MAX && right_v[b] != usize::MAX, "basis element outside every e_v A e_w");
        }
        let rad: Vec<usize> = (0..d).filter(|&b| !is_idem[b]).collect();
        let n = idems.len();
        let mut proj_basis = vec![Vec::new(); n];
        let mut pos_in_proj = vec![0; d];
        for b in 0..d {
            pos_in_proj[b] = proj_basis[right_v[b]].len();
            proj_basis[right_v[b]].push(b);
        }
        let rad_gens = radical_generators(&field, d, &mul, &rad);
        let fingerprint = fingerprint(&field, d, &mul, &idems);
        Arc::new(Algebra {
            field,
            labels,
            vertex_names,
            mul,
            idems,
            left_v,
            right_v,
            is_idem,
            rad,
            rad_gens,
            proj_basis,
            pos_in_proj,
            fingerprint,
            op: OnceLock::new(),
            op_of: OnceLock::new(),
            env: OnceLock::new(),
            proj_actions: OnceLock::new(),
            left_mult: OnceLock::new(),
        })
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn spec(&self) -> FieldSpec {
        FieldSpec { characteristic: self.field.characteristic() }
    }
    pub fn dim(&self) -> usize {
        self.labels.len()
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn vertex_names(&self) -> &[String] {
        &self.vertex_names
    }
    pub fn num_vertices(&self) -> usize {
        self.idems.len()
    }
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }
    pub fn fingerprint_hex(&self) -> String {
        format!("{:016x}", self.fingerprint)
    }

    /// Basis index of the idempotent of vertex `v`.
    pub fn idem(&self, v: usize) -> usize {
        self.idems[v]
    }
    pub fn idems(&self) -> &[usize] {
        &self.idems
    }
    pub fn is_idem(&self, b: usize) -> bool {
        self.is_idem[b]
    }
    /// `v` with `e_v b = b`.
    pub fn left_vertex(&self, b: usize) -> usize {
        self.left_v[b]
    }
    /// `w` with `b e_w = b`.
    pub fn right_vertex(&self, b: usize) -> usize {
        self.right_v[b]
    }
    /// Basis indices spanning the radical.
    pub fn rad(&self) -> &[usize] {
        &self.rad
    }
    /// Radical basis elements independent modulo `rad^2`; they generate
    /// the radical as a right ideal, so `rad M = sum g M`.
    pub fn rad_gens(&self) -> &[usize] {
        &self.rad_gens
    }
    pub fn rad_basis(&self) -> Mat<F> {
        let f = &self.field;
        Mat::from_fn(f, self.rad.len(), self.dim(), |i, j| if self.rad[i] == j { f.one() } else { f.zero() })
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertex_names.iter().position(|v| v == name).or_else(|| name.parse().ok().filter(|&v| v < self.num_vertices()))
    }

    /// Sparse coordinates of `b_i * b_j`.
    pub fn mul_basis(&self, i: usize, j: usize) -> &[(usize, F::Elem)] {
        &self.mul[i * self.dim() + j]
    }

    pub fn mul_table(&self) -> &[Vec<(usize, F::Elem)>] {
        &self.mul
    }

    pub fn mul_elems(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let d = self.dim();
        let mut out = vec![f.zero(); d];
        for (i, xi) in x.iter().enumerate() {
            if f.is_zero(xi) {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if f.is_zero(yj) {
                    continue;
                }
                let c = f.mul(xi, yj);
                for (k, m) in &self.mul[i * d + j] {
                    out[*k] = f.add(&out[*k], &f.mul(&c, m));
                }
            }
        }
        out
    }

    pub fn one(&self) -> Vec<F::Elem> {
        let f = &self.field;
        let mut v = vec![f.zero(); self.dim()];
        for &e in &self.idems {
            v[e] = f.one();
        }
        v
    }

    pub fn basis_vec(&self, b: usize) -> Vec<F::Elem> {
        let f = &self.field;
        let mut v = vec![f.zero(); self.dim()];
        v[b] = f.one();
        v
    }

    /// Left multiplication by each basis element, as `dim x dim` matrices.
    pub fn left_mult(&self) -> &[Mat<F>] {
        self.left_mult.get_or_init(|| {
            let d = self.dim();
            (0..d)
                .map(|i| {
                    let mut m = Mat::zeros(&self.field, d, d);
                    for j in 0..d {
                        for (k, c) in &self.mul[i * d + j] {
                            m.set(*k, j, c.clone());
                        }
                    }
                    m
                })
                .collect()
        })
    }

    /// Right multiplication matrix of a basis element.
    pub fn right_mult(&self, i: usize) -> Mat<F> {
        let d = self.dim();
        let mut m = Mat::zeros(&self.field, d, d);
        for j in 0..d {
            for (k, c) in &self.mul[j * d + i] {
                m.set(*k, j, c.clone());
            }
        }
        m
    }

    /// Basis of the indecomposable projective `A e_v`: the basis elements
    /// ending at `v`, in increasing index order.
    pub fn proj_basis(&self, v: usize) -> &[usize] {
        &self.proj_basis[v]
    }

    pub fn proj_dim(&self, v: usize) -> usize {
        self.proj_basis[v].len()
    }

    /// Position of basis element `b` inside `proj_basis(right_vertex(b))`.
    pub fn pos_in_proj(&self, b: usize) -> usize {
        self.pos_in_proj[b]
    }

    /// Action matrices of every basis element on `A e_v`.
    pub fn proj_actions(&self, v: usize) -> &[Mat<F>] {
        &self.proj_actions.get_or_init(|| {
            let d = self.dim();
            (0..self.num_vertices())
                .map(|w| {
                    let pb = &self.proj_basis[w];
                    (0..d)
                        .map(|i| {
                            let mut m = Mat::zeros(&self.field, pb.len(), pb.len());
                            for (col, &j) in pb.iter().enumerate() {
                                for (k, c) in &self.mul[i * d + j] {
                                    m.set(self.pos_in_proj[*k], col, c.clone());
                                }
                            }
                            m
                        })
                        .collect()
                })
                .collect()
        })[v]
    }

    /// `dim e_v A`.
    pub fn right_proj_dim(&self, v: usize) -> usize {
        self.left_v.iter().filter(|&&w| w == v).count()
    }

    /// Whether `e_v A e_w` is nonzero.
    pub fn links(&self, v: usize, w: usize) -> bool {
        (0..self.dim()).any(|b| self.left_v[b] == v && self.right_v[b] == w)
    }

    pub fn same_as(&self, other: &Algebra<F>) -> bool {
        std::ptr::eq(self, other) || (self.fingerprint == other.fingerprint && self.mul == other.mul && self.idems == other.idems)
    }

    /// The opposite algebra; `opposite(opposite(a))` returns `a` itself
    /// while `a` is alive.
    pub fn opposite(self: &Alg<F>) -> Alg<F> {
        if let Some(orig) = self.op_of.get().and_then(Weak::upgrade) {
            return orig;
        }
        self.op
            .get_or_init(|| {
                let d = self.dim();
                let mut mul = vec![Vec::new(); d * d];
                for i in 0..d {
                    for j in 0..d {
                        mul[i * d + j] = self.mul[j * d + i].clone();
                    }
                }
                let op = Self::from_adapted(
                    self.field.clone(),
                    self.labels.clone(),
                    self.vertex_names.clone(),
                    mul,
                    self.idems.clone(),
                );
                let _ = op.op_of.set(Arc::downgrade(self));
                op
            })
            .clone()
    }

    /// `A ⊗ A^op`, cached.
    pub fn enveloping(self: &Alg<F>) -> Alg<F> {
        self.env.get_or_init(|| tensor_algebra(self, &self.opposite()).expect("same field")).clone()
    }

    /// The corner algebra `eAe` for `e` the sum of the idempotents at
    /// `verts`, with basis the basis elements of `A` between those vertices.
    pub fn corner(&self, verts: &[usize]) -> Alg<F> {
        let d = self.dim();
        let keep: Vec<usize> =
            (0..d).filter(|&b| verts.contains(&self.left_v[b]) && verts.contains(&self.right_v[b])).collect();
        let mut pos = vec![usize::MAX; d];
        for (i, &b) in keep.iter().enumerate() {
            pos[b] = i;
        }
        let k = keep.len();
        let mut mul = vec![Vec::new(); k * k];
        for (i, &a) in keep.iter().enumerate() {
            for (j, &b) in keep.iter().enumerate() {
                mul[i * k + j] = self.mul[a * d + b].iter().map(|(c, x)| (pos[*c], x.clone())).collect();
            }
        }
        let labels = keep.iter().map(|&b| self.labels[b].clone()).collect();
        let names = verts.iter().map(|&v| self.vertex_names[v].clone()).collect();
        let idems = verts.iter().map(|&v| pos[self.idems[v]]).collect();
        Self::from_adapted(self.field.clone(), labels, names, mul, idems)
    }

    /// Basis index of `b_i ⊗ c_j` in a tensor algebra built from algebras
    /// of dimensions `(_, dim_right)`.
    pub fn pair_index(i: usize, j: usize, dim_right: usize) -> usize {
        i * dim_right + j
    }

    /// Dimension of the centre.
    pub fn center_dim(&self) -> usize {
        let d = self.dim();
        let f = &self.field;
        // rows: coefficient of b_k in z b_i - b_i z, for all (i, k); unknowns z_j
        let mut eqs = Mat::zeros(f, d * d, d);
        for i in 0..d {
            for j in 0..d {
                for (k, c) in &self.mul[j * d + i] {
                    let r = i * d + k;
                    let cur = eqs.get(r, j).clone();
                    eqs.set(r, j, f.add(&cur, c));
                }
                for (k, c) in &self.mul[i * d + j] {
                    let r = i * d + k;
                    let cur = eqs.get(r, j).clone();
                    eqs.set(r, j, f.sub(&cur, c));
                }
            }
        }
        d - eqs.rank()
    }

    /// Re-checks every algebra axiom and computes the report flags.
    pub fn validate(&self) -> Result<AlgebraReport, AlgebraError> {
        let f = &self.field;
        let idems: Vec<Vec<F::Elem>> = self.idems.iter().map(|&e| self.basis_vec(e)).collect();
        checks::check_axioms(f, &self.labels, &self.mul, &self.one(), &idems, &self.rad_basis())?;
        Ok(self.report())
    }

    pub fn report(&self) -> AlgebraReport {
        checks::report(self)
    }

    /// Nonzero length of the radical series, `min k` with `rad^k = 0`.
    pub fn loewy_length(&self) -> usize {
        let d = self.dim();
        let f = &self.field;
        let mut k = 1;
        let mut cur: Vec<Vec<F::Elem>> = self.rad.iter().map(|&b| self.basis_vec(b)).collect();
        while !cur.is_empty() {
            let mut next = Echelon::new(f, d);
            for x in &cur {
                for &r in &self.rad {
                    if next.is_full() {
                        break;
                    }
                    next.insert(&self.mul_elems(x, &self.basis_vec(r)));
                }
            }
            cur = next.rows().to_vec();
            k += 1;
        }
        k
    }
}

fn normalize_sparse<F: Field>(f: &F, mul: Vec<Vec<(usize, F::Elem)>>) -> Vec<Vec<(usize, F::Elem)>> {
    mul.into_iter()
        .map(|entries| {
            let mut acc: Vec<(usize, F::Elem)> = Vec::new();
            for (k, c) in entries {
                match acc.iter_mut().find(|(kk, _)| *kk == k) {
                    Some((_, cc)) => *cc = f.add(cc, &c),
                    None => acc.push((k, c)),
                }
            }
            acc.retain(|(_, c)| !f.is_zero(c));
            acc.sort_by_key(|(k, _)| *k);
            acc
        })
        .collect()
}

/// If every idempotent is a basis vector and the radical is spanned by
/// the remaining basis vectors, returns the idempotent basis indices.
fn adapted_idempotents<F: Field>(
    f: &F,
    mul: &[Vec<(usize, F::Elem)>],
    idempotents: &[Vec<F::Elem>],
    rad: &Mat<F>,
) -> Option<Vec<usize>> {
    let mut idx = Vec::new();
    for e in idempotents {
        let nz: Vec<usize> = (0..e.len()).filter(|&i| !f.is_zero(&e[i])).collect();
        if nz.len() != 1 || !f.is_one(&e[nz[0]]) {
            return None;
        }
        idx.push(nz[0]);
    }
    let d = rad.cols();
    let r = rad.rref();
    if r.rank() != d - idx.len() {
        return None;
    }
    // Each remaining basis vector must be a radical row.
    for (row, &p) in r.pivots.iter().enumerate() {
        if idx.contains(&p) {
            return None;
        }
        for c in 0..d {
            if c != p && !f.is_zero(r.mat.get(row, c)) {
                return None;
            }
        }
    }
    // Each basis vector must lie in a single e_v A e_w.
    for b in 0..d {
        for side in 0..2 {
            let mut hits = 0;
            for &e in &idx {
                let p = if side == 0 { &mul[e * d + b] } else { &mul[b * d + e] };
                match p.as_slice() {
                    [] => {}
                    [(k, c)] if *k == b && f.is_one(c) => hits += 1,
                    _ => return None,
                }
            }
            if hits != 1 {
                return None;
            }
        }
    }
    Some(idx)
}

fn rebase<F: Field>(
    f: &F,
    d: usize,
    mul: &[Vec<(usize, F::Elem)>],
    idempotents: &[Vec<F::Elem>],
    rad: &Mat<F>,
) -> (Vec<String>, Vec<Vec<(usize, F::Elem)>>, Vec<usize>) {
    let prod = |x: &[F::Elem], y: &[F::Elem]| -> Vec<F::Elem> {
        let mut out = vec![f.zero(); d];
        for (i, xi) in x.iter().enumerate() {
            if f.is_zero(xi) {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if f.is_zero(yj) {
                    continue;
                }
                let c = f.mul(xi, yj);
                for (k, m) in &mul[i * d + j] {
                    out[*k] = f.add(&out[*k], &f.mul(&c, m));
                }
            }
        }
        out
    };
    let n = idempotents.len();
    let mut basis: Vec<Vec<F::Elem>> = idempotents.to_vec();
    let mut labels: Vec<String> = (0..n).map(|v| format!("e{}", v)).collect();
    let rad_rows = rad.rref().basis();
    for v in 0..n {
        for w in 0..n {
            let sandwiched: Vec<Vec<F::Elem>> = (0..rad_rows.rows())
                .map(|i| prod(&prod(&idempotents[v], rad_rows.row(i)), &idempotents[w]))
                .collect();
            let block = Mat::from_rows(f, d, sandwiched).rref().basis();
            for i in 0..block.rows() {
                labels.push(format!("r{}_{}_{}", v, w, i));
                basis.push(block.row(i).to_vec());
            }
        }
    }
    assert_eq!(basis.len(), d, "adapted basis has wrong size");
    let u = Mat::from_rows(f, d, basis.clone()).transpose();
    let u_inv = u.inverse().expect("adapted basis is a basis");
    let mut new_mul = vec![Vec::new(); d * d];
    for i in 0..d {
        for j in 0..d {
            let p = u_inv.mul_vec(&prod(&basis[i], &basis[j]));
            new_mul[i * d + j] = p.into_iter().enumerate().filter(|(_, c)| !f.is_zero(c)).collect();
        }
    }
    (labels, new_mul, (0..n).collect())
}

fn radical_generators<F: Field>(f: &F, d: usize, mul: &[Vec<(usize, F::Elem)>], rad: &[usize]) -> Vec<usize> {
    let mut ech = Echelon::new(f, d);
    for &a in rad {
        for &b in rad {
            let mut v = vec![f.zero(); d];
            for (k, c) in &mul[a * d + b] {
                v[*k] = c.clone();
            }
            ech.insert(&v);
        }
    }
    let mut gens = Vec::new();
    for &r in rad {
        let mut v = vec![f.zero(); d];
        v[r] = f.one();
        if ech.insert(&v) {
            gens.push(r);
        }
    }
    gens
}

fn fingerprint<F: Field>(f: &F, d: usize, mul: &[Vec<(usize, F::Elem)>], idems: &[usize]) -> u64 {
    let mut h = DefaultHasher::new();
    f.characteristic().hash(&mut h);
    d.hash(&mut h);
    mul.hash(&mut h);
    idems.hash(&mut h);
    h.finish()
}

/// `A ⊗ B` with basis pairs `(i, j)` at index `i * dim B + j` and vertex
/// pairs `(v, w)` at index `v * #B + w`.
pub fn tensor_algebra<F: Field>(a: &Alg<F>, b: &Alg<F>) -> Result<Alg<F>, AlgebraError> {
    if a.spec() != b.spec() {
        return Err(AlgebraError::FieldMismatch(a.spec(), b.spec()));
    }
    let f = a.field();
    let (da, db) = (a.dim(), b.dim());
    let d = da * db;
    let mut labels = Vec::with_capacity(d);
    for i in 0..da {
        for j in 0..db {
            labels.push(format!("{}⊗{}", a.labels[i], b.labels[j]));
        }
    }
    let mut mul = vec![Vec::new(); d * d];
    for i in 0..da {
        for k in 0..da {
            let ab = &a.mul[i * da + k];
            if ab.is_empty() {
                continue;
            }
            for j in 0..db {
                for l in 0..db {
                    let bb = &b.mul[j * db + l];
                    if bb.is_empty() {
                        continue;
                    }
                    let mut entries = Vec::with_capacity(ab.len() * bb.len());
                    for (m, x) in ab {
                        for (n, y) in bb {
                            entries.push((m * db + n, f.mul(x, y)));
                        }
                    }
                    entries.sort_by_key(|(k, _)| *k);
                    mul[(i * db + j) * d + (k * db + l)] = entries;
                }
            }
        }
    }
    let mut idems = Vec::new();
    let mut names = Vec::new();
    for v in 0..a.num_vertices() {
        for w in 0..b.num_vertices() {
            idems.push(a.idems[v] * db + b.idems[w]);
            names.push(format!("{}⊗{}", a.vertex_names[v], b.vertex_names[w]));
        }
    }
    Ok(Algebra::from_adapted(f.clone(), labels, names, mul, idems))
}

#[cfg(test)]
mod tests;
