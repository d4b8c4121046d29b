//! Finite-dimensional left modules given by action matrices.
//!
//! Every module basis is adapted to the vertex idempotents: each basis
//! vector lies in some `e_v M`, so `e_v` acts diagonally. Right modules are
//! left modules over the opposite algebra, bimodules are left modules over
//! the enveloping algebra.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::algebra::Alg;
use crate::exactlin::{Echelon, Field, Mat};

pub mod bimodule;
mod cover;
mod dual;
mod free;
mod hom;
mod indec;
mod iso;
mod json;
mod resolution;

pub use cover::{injective_envelope, is_injective, is_projective, projective_cover};
pub use dual::{a_dual, evaluation_map, DualModule};
pub use free::{minimal_generators, Acts, FreeModule};
pub use hom::{hom_differential, hom_dim, hom_space, HomSpace};
pub use indec::{indecomposability, is_indecomposable, Indecomposability};
pub use iso::{is_isomorphic, is_isomorphic_with, IsoVerdict, DEFAULT_TRIALS};
pub use json::{module_from_json, module_to_json};
pub use resolution::{clear_resolution_cache, resolution, Resolution, SharedResolution};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModError {
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("bad shape: {0}")]
    Shape(String),
    #[error("not a module: {0}")]
    NotAModule(String),
    #[error("not a morphism: {0}")]
    NotAMorphism(String),
}

#[derive(Clone)]
pub struct Module<F: Field> {
    alg: Alg<F>,
    actions: Arc<Vec<Mat<F>>>,
    vertex_of: Arc<Vec<usize>>,
    fingerprint: u64,
}

impl<F: Field> std::fmt::Debug for Module<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Module")
            .field("algebra", &self.alg.fingerprint_hex())
            .field("dim", &self.dim())
            .field("dim_vector", &self.dim_vector())
            .finish()
    }
}

/// A submodule together with its inclusion (`dim M x dim U`).
#[derive(Clone, Debug)]
pub struct Sub<F: Field> {
    pub module: Module<F>,
    pub inclusion: Mat<F>,
}

/// A quotient together with its projection (`dim M/U x dim M`).
#[derive(Clone, Debug)]
pub struct Quot<F: Field> {
    pub module: Module<F>,
    pub projection: Mat<F>,
}

/// A module map, `matrix` is `dim target x dim source`.
#[derive(Clone, Debug)]
pub struct Morphism<F: Field> {
    pub source: Module<F>,
    pub target: Module<F>,
    pub matrix: Mat<F>,
}

impl<F: Field> Morphism<F> {
    pub fn new(source: Module<F>, target: Module<F>, matrix: Mat<F>) -> Result<Self, ModError> {
        if !source.same_algebra(&target) {
            return Err(ModError::AlgebraMismatch);
        }
        if matrix.shape() != (target.dim(), source.dim()) {
            return Err(ModError::Shape(format!(
                "morphism matrix is {:?}, expected {:?}",
                matrix.shape(),
                (target.dim(), source.dim())
            )));
        }
        for b in 0..source.alg.dim() {
            if matrix.mul(source.action(b)) != target.action(b).mul(&matrix) {
                return Err(ModError::NotAMorphism(format!("fails to commute with {}", source.alg.labels()[b])));
            }
        }
        Ok(Morphism { source, target, matrix })
    }

    pub fn is_injective(&self) -> bool {
        self.matrix.rank() == self.source.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.matrix.rank() == self.target.dim()
    }

    pub fn is_iso(&self) -> bool {
        self.source.dim() == self.target.dim() && self.is_injective()
    }

    pub fn kernel(&self) -> Sub<F> {
        self.source.submodule(&self.matrix.kernel_basis())
    }

    pub fn cokernel(&self) -> Quot<F> {
        self.target.quotient(&self.matrix.transpose())
    }
}

fn hash_actions<F: Field>(alg_fp: u64, dim: usize, actions: &[Mat<F>]) -> u64 {
    let mut h = DefaultHasher::new();
    alg_fp.hash(&mut h);
    dim.hash(&mut h);
    for a in actions {
        a.data().hash(&mut h);
    }
    h.finish()
}

impl<F: Field> Module<F> {
    /// Checked constructor: verifies the module axioms on all pairs of
    /// basis elements, then adapts the basis to the idempotents.
    pub fn new(alg: &Alg<F>, actions: Vec<Mat<F>>) -> Result<Self, ModError> {
        let d = alg.dim();
        if actions.len() != d {
            return Err(ModError::Shape(format!("{} action matrices for a {}-dimensional algebra", actions.len(), d)));
        }
        let m = actions.first().map_or(0, |a| a.rows());
        if actions.iter().any(|a| a.shape() != (m, m)) {
            return Err(ModError::Shape("action matrices must be square of equal size".into()));
        }
        let f = alg.field();
        let mut unit = Mat::zeros(f, m, m);
        for &e in alg.idems() {
            unit = unit.add(&actions[e]);
        }
        if !unit.is_identity() {
            return Err(ModError::NotAModule("the unit does not act as the identity".into()));
        }
        for i in 0..d {
            for j in 0..d {
                let lhs = actions[i].mul(&actions[j]);
                let mut rhs = Mat::zeros(f, m, m);
                for (k, c) in alg.mul_basis(i, j) {
                    rhs.add_scaled(c, &actions[*k]);
                }
                if lhs != rhs {
                    return Err(ModError::NotAModule(format!(
                        "action of {} * {} is not the product of the actions",
                        alg.labels()[i],
                        alg.labels()[j]
                    )));
                }
            }
        }
        Ok(Self::from_trusted(alg, actions))
    }

    /// Constructor for internally produced actions; adapts the basis.
    pub fn from_trusted(alg: &Alg<F>, actions: Vec<Mat<F>>) -> Self {
        let f = alg.field();
        let m = actions.first().map_or(0, |a| a.rows());
        let mut vertex_of = vec![usize::MAX; m];
        let mut adapted = true;
        'outer: for (v, &e) in alg.idems().iter().enumerate() {
            let a = &actions[e];
            for i in 0..m {
                for j in 0..m {
                    let x = a.get(i, j);
                    if i == j {
                        if f.is_one(x) {
                            if vertex_of[i] != usize::MAX {
                                adapted = false;
                                break 'outer;
                            }
                            vertex_of[i] = v;
                        } else if !f.is_zero(x) {
                            adapted = false;
                            break 'outer;
                        }
                    } else if !f.is_zero(x) {
                        adapted = false;
                        break 'outer;
                    }
                }
            }
        }
        if adapted && vertex_of.iter().all(|&v| v != usize::MAX) {
            let fingerprint = hash_actions(alg.fingerprint(), m, &actions);
            return Module { alg: alg.clone(), actions: Arc::new(actions), vertex_of: Arc::new(vertex_of), fingerprint };
        }
        // Rebase: concatenate bases of the images of the idempotents.
        let mut cols: Vec<Vec<F::Elem>> = Vec::with_capacity(m);
        let mut vertex_of = Vec::with_capacity(m);
        for (v, &e) in alg.idems().iter().enumerate() {
            let img = actions[e].image_basis();
            for i in 0..img.rows() {
                cols.push(img.row(i).to_vec());
                vertex_of.push(v);
            }
        }
        assert_eq!(cols.len(), m, "idempotent images do not decompose the module");
        let t = Mat::from_cols(f, m, cols);
        let t_inv = t.inverse().expect("idempotent decomposition is a basis");
        let actions: Vec<Mat<F>> = actions.iter().map(|a| t_inv.mul(a).mul(&t)).collect();
        let fingerprint = hash_actions(alg.fingerprint(), m, &actions);
        Module { alg: alg.clone(), actions: Arc::new(actions), vertex_of: Arc::new(vertex_of), fingerprint }
    }

    pub fn alg(&self) -> &Alg<F> {
        &self.alg
    }
    pub fn field(&self) -> &F {
        self.alg.field()
    }
    pub fn dim(&self) -> usize {
        self.vertex_of.len()
    }
    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }
    pub fn action(&self, b: usize) -> &Mat<F> {
        &self.actions[b]
    }
    pub fn actions(&self) -> &[Mat<F>] {
        &self.actions
    }
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }
    pub fn vertex_of(&self, i: usize) -> usize {
        self.vertex_of[i]
    }
    pub fn vertex_basis(&self, v: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.vertex_of[i] == v).collect()
    }
    /// `dim e_v M` for each vertex.
    pub fn dim_vector(&self) -> Vec<usize> {
        let mut dv = vec![0; self.alg.num_vertices()];
        for &v in self.vertex_of.iter() {
            dv[v] += 1;
        }
        dv
    }

    pub fn same_algebra(&self, other: &Module<F>) -> bool {
        self.alg.same_as(&other.alg)
    }

    /// Identical action matrices over the same algebra.
    pub fn same_as(&self, other: &Module<F>) -> bool {
        self.fingerprint == other.fingerprint
            && self.same_algebra(other)
            && (Arc::ptr_eq(&self.actions, &other.actions) || self.actions == other.actions)
    }

    /// Action of an arbitrary algebra element.
    pub fn act_elem(&self, x: &[F::Elem]) -> Mat<F> {
        let f = self.field();
        let mut out = Mat::zeros(f, self.dim(), self.dim());
        for (b, c) in x.iter().enumerate() {
            out.add_scaled(c, &self.actions[b]);
        }
        out
    }

    pub fn zero(alg: &Alg<F>) -> Self {
        Self::from_trusted(alg, (0..alg.dim()).map(|_| Mat::zeros(alg.field(), 0, 0)).collect())
    }

    /// `A` acting on itself by left multiplication.
    pub fn regular(alg: &Alg<F>) -> Self {
        Self::from_trusted(alg, alg.left_mult().to_vec())
    }

    /// `A e_v`.
    pub fn projective(alg: &Alg<F>, v: usize) -> Self {
        Self::from_trusted(alg, alg.proj_actions(v).to_vec())
    }

    pub fn simple(alg: &Alg<F>, v: usize) -> Self {
        let f = alg.field();
        let actions = (0..alg.dim())
            .map(|b| if b == alg.idem(v) { Mat::identity(f, 1) } else { Mat::zeros(f, 1, 1) })
            .collect();
        Self::from_trusted(alg, actions)
    }

    /// `D(A_A)`, the dual of the right regular module.
    pub fn coregular(alg: &Alg<F>) -> Self {
        Self::regular(&alg.opposite()).dual()
    }

    /// `D(e_v A)`, the injective hull of the simple at `v`.
    pub fn injective(alg: &Alg<F>, v: usize) -> Self {
        Self::projective(&alg.opposite(), v).dual()
    }

    /// `D(M) = Hom_K(M, K)`, a module over the opposite algebra.
    pub fn dual(&self) -> Self {
        let op = self.alg.opposite();
        let actions: Vec<Mat<F>> = self.actions.iter().map(|a| a.transpose()).collect();
        Module {
            alg: op.clone(),
            fingerprint: hash_actions(op.fingerprint(), self.dim(), &actions),
            actions: Arc::new(actions),
            vertex_of: self.vertex_of.clone(),
        }
    }

    pub fn direct_sum(alg: &Alg<F>, parts: &[&Module<F>]) -> Self {
        let f = alg.field();
        let actions: Vec<Mat<F>> = (0..alg.dim())
            .map(|b| Mat::block_diag(f, &parts.iter().map(|p| p.action(b)).collect::<Vec<_>>()))
            .collect();
        let vertex_of: Vec<usize> = parts.iter().flat_map(|p| p.vertex_of.iter().copied()).collect();
        Module {
            alg: alg.clone(),
            fingerprint: hash_actions(alg.fingerprint(), vertex_of.len(), &actions),
            actions: Arc::new(actions),
            vertex_of: Arc::new(vertex_of),
        }
    }

    /// The submodule generated by the rows of `gens`.
    pub fn submodule(&self, gens: &Mat<F>) -> Sub<F> {
        let f = self.field();
        let m = self.dim();
        let mut ech = Echelon::new(f, m);
        let gcols = gens.transpose();
        for a in self.actions.iter() {
            let img = a.mul(&gcols).transpose();
            for i in 0..img.rows() {
                if ech.is_full() {
                    break;
                }
                ech.insert(img.row(i));
            }
        }
        self.submodule_of_subspace(&ech.to_mat())
    }

    /// Submodule from rows spanning a subspace already closed under the
    /// action.
    pub fn submodule_of_subspace(&self, rows: &Mat<F>) -> Sub<F> {
        let r = rows.rref();
        let basis = r.basis();
        let k = basis.rows();
        let inclusion = basis.transpose();
        let actions = self
            .actions
            .iter()
            .map(|a| {
                let img = a.mul(&inclusion);
                img.select_rows(&r.pivots)
            })
            .collect();
        debug_assert_eq!(inclusion.cols(), k);
        Sub { module: Self::from_trusted(&self.alg, actions), inclusion }
    }

    /// `M / U` for `U` spanned by the rows of `rows` (must be a submodule).
    pub fn quotient(&self, rows: &Mat<F>) -> Quot<F> {
        let f = self.field();
        let m = self.dim();
        let r = if rows.rows() == 0 { Mat::zeros(f, 0, m).rref() } else { rows.rref() };
        let free = r.free_columns();
        // projection: free coordinates after reducing by the RREF rows
        let mut projection = Mat::zeros(f, free.len(), m);
        let mut free_pos = vec![usize::MAX; m];
        for (j, &c) in free.iter().enumerate() {
            free_pos[c] = j;
            projection.set(j, c, f.one());
        }
        for (i, &p) in r.pivots.iter().enumerate() {
            for &c in &free {
                let x = r.mat.get(i, c);
                if !f.is_zero(x) {
                    projection.set(free_pos[c], p, f.neg(x));
                }
            }
        }
        let lift = Mat::identity(f, m).select_cols(&free);
        let actions = self.actions.iter().map(|a| projection.mul(&a.mul(&lift))).collect();
        Quot { module: Self::from_trusted(&self.alg, actions), projection }
    }

    /// Rows spanning `rad(A) M`.
    pub fn rad_rows(&self) -> Mat<F> {
        let f = self.field();
        let mut ech = Echelon::new(f, self.dim());
        for &g in self.alg.rad_gens() {
            let t = self.actions[g].transpose();
            for i in 0..t.rows() {
                if ech.is_full() {
                    break;
                }
                ech.insert(t.row(i));
            }
        }
        ech.to_mat()
    }

    pub fn rad_module(&self) -> Sub<F> {
        self.submodule_of_subspace(&self.rad_rows())
    }

    pub fn top(&self) -> Quot<F> {
        self.quotient(&self.rad_rows())
    }

    /// Rows spanning the socle `{m : rad(A) m = 0}`.
    pub fn socle_rows(&self) -> Mat<F> {
        let f = self.field();
        let rad = self.alg.rad();
        if rad.is_empty() || self.dim() == 0 {
            return Mat::identity(f, self.dim());
        }
        let stacked: Vec<&Mat<F>> = rad.iter().map(|&r| &self.actions[r]).collect();
        Mat::vstack(f, self.dim(), &stacked).kernel_basis()
    }

    pub fn socle(&self) -> Sub<F> {
        self.submodule_of_subspace(&self.socle_rows())
    }

    /// Dimension vector of the top.
    pub fn top_vector(&self) -> Vec<usize> {
        let rad = self.rad_rows();
        let mut dv = self.dim_vector();
        for i in 0..rad.rows() {
            let c = (0..self.dim()).find(|&c| !self.field().is_zero(rad.get(i, c))).unwrap();
            dv[self.vertex_of[c]] -= 1;
        }
        dv
    }

    /// Dimension vector of the socle.
    pub fn socle_vector(&self) -> Vec<usize> {
        let soc = self.socle_rows();
        let mut dv = vec![0; self.alg.num_vertices()];
        for i in 0..soc.rows() {
            let c = (0..self.dim()).find(|&c| !self.field().is_zero(soc.get(i, c))).unwrap();
            dv[self.vertex_of[c]] += 1;
        }
        dv
    }

    /// Reinterprets this module over another algebra with identical
    /// structure constants (for instance `op(op(A))` after `A` was dropped).
    pub fn over(&self, alg: &Alg<F>) -> Result<Self, ModError> {
        if !self.alg.same_as(alg) {
            return Err(ModError::AlgebraMismatch);
        }
        Ok(Module { alg: alg.clone(), ..self.clone() })
    }
}

#[cfg(test)]
mod tests;
