use crate::exactlin::{Field, Mat};

use super::{resolution, FreeModule, Module};

/// A basis of `Hom(M, N)`, normalized so that the flattened matrices are in
/// reduced echelon form; coordinates are read at the pivots.
#[derive(Clone, Debug)]
pub struct HomSpace<F: Field> {
    rows: usize,
    cols: usize,
    basis: Vec<Mat<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> HomSpace<F> {
    /// Normalizes a spanning set of `rows x cols` matrices.
    pub fn from_span(field: &F, rows: usize, cols: usize, span: &[Mat<F>]) -> Self {
        if span.is_empty() || rows * cols == 0 {
            return HomSpace { rows, cols, basis: Vec::new(), pivots: Vec::new() };
        }
        let flat = Mat::from_rows(field, rows * cols, span.iter().map(|m| m.data().to_vec()).collect());
        let r = flat.rref();
        let basis = (0..r.rank()).map(|i| Mat::from_vec(field, rows, cols, r.mat.row(i).to_vec())).collect();
        HomSpace { rows, cols, basis, pivots: r.pivots }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Mat<F>] {
        &self.basis
    }

    /// Coordinates of a member of the space.
    pub fn coords(&self, m: &Mat<F>) -> Vec<F::Elem> {
        debug_assert_eq!(m.shape(), (self.rows, self.cols));
        self.pivots.iter().map(|&p| m.data()[p].clone()).collect()
    }

    /// Whether `m` lies in the space.
    pub fn contains(&self, m: &Mat<F>) -> bool {
        let c = self.coords(m);
        self.combine(m.field(), &c) == *m
    }

    pub fn combine(&self, field: &F, coeffs: &[F::Elem]) -> Mat<F> {
        let mut out = Mat::zeros(field, self.rows, self.cols);
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if !field.is_zero(c) {
                out.add_scaled(c, b);
            }
        }
        out
    }
}

/// Matrix of `Hom(P, N) -> Hom(Q, N)`, `φ ↦ φ ∘ d`, for a map `d: Q -> P` of
/// free modules given by the images of the generators of `Q`.
///
/// `Hom(A e_v, N) = e_v N`, so columns are indexed by the blocks
/// `e_{v_k} N` for the generators of `P` and rows by `e_{w_j} N` for those
/// of `Q`.
pub fn hom_differential<F: Field>(p: &FreeModule<F>, q_verts: &[usize], images: &[Vec<F::Elem>], n: &Module<F>) -> Mat<F> {
    let f = n.field();
    let idx: Vec<Vec<usize>> = (0..n.alg().num_vertices()).map(|v| n.vertex_basis(v)).collect();
    let mut col_off = Vec::with_capacity(p.rank());
    let mut o = 0;
    for &v in p.verts() {
        col_off.push(o);
        o += idx[v].len();
    }
    let ncols = o;
    let nrows: usize = q_verts.iter().map(|&w| idx[w].len()).sum();
    let mut out = Mat::zeros(f, nrows, ncols);
    let mut r0 = 0;
    for (x, &w) in images.iter().zip(q_verts) {
        let rows = &idx[w];
        if rows.is_empty() {
            continue;
        }
        for (k, &v) in p.verts().iter().enumerate() {
            if idx[v].is_empty() {
                continue;
            }
            let comp = p.component(x, k);
            let mut block = Mat::zeros(f, n.dim(), n.dim());
            let mut any = false;
            for (b, c) in comp.iter().enumerate() {
                if !f.is_zero(c) {
                    block.add_scaled(c, n.action(b));
                    any = true;
                }
            }
            if any {
                out.set_block(r0, col_off[k], &block.select_rows(rows).select_cols(&idx[v]));
            }
        }
        r0 += rows.len();
    }
    out
}

/// Solutions of the system for `Hom(M, N)`: the unknowns are the images of
/// the top generators of `M`, the equations say that the first syzygy maps
/// to zero. Also returns the blocks of `N`-indices of the unknowns.
fn hom_system<F: Field>(m: &Module<F>, n: &Module<F>) -> (Mat<F>, Vec<Vec<usize>>) {
    let f = m.field();
    let shared = resolution(m);
    let mut res = shared.lock();
    let p0 = res.term(0).clone();
    let rel = res.images(1).to_vec();
    let q_verts = res.term(1).verts().to_vec();
    drop(res);
    let eq = hom_differential(&p0, &q_verts, &rel, n);
    let ncols = eq.cols();
    let sol = if eq.rows() == 0 { Mat::identity(f, ncols) } else { eq.kernel_basis() };
    let blocks = p0.verts().iter().map(|&v| n.vertex_basis(v)).collect();
    (sol, blocks)
}

/// `dim Hom(M, N)`.
pub fn hom_dim<F: Field>(m: &Module<F>, n: &Module<F>) -> usize {
    assert!(m.same_algebra(n), "modules live over different algebras");
    if m.dim() == 0 || n.dim() == 0 {
        return 0;
    }
    hom_system(m, n).0.rows()
}

/// A basis of `Hom(M, N)` as `dim N x dim M` matrices.
pub fn hom_space<F: Field>(m: &Module<F>, n: &Module<F>) -> HomSpace<F> {
    assert!(m.same_algebra(n), "modules live over different algebras");
    let f = m.field();
    if m.dim() == 0 || n.dim() == 0 {
        return HomSpace::from_span(f, n.dim(), m.dim(), &[]);
    }
    let (sol, blocks) = hom_system(m, n);
    let shared = resolution(m);
    let mut res = shared.lock();
    let p0 = res.term(0).clone();
    let section = res.augmentation_section();
    drop(res);
    let maps: Vec<Mat<F>> = (0..sol.rows())
        .map(|s| {
            let row = sol.row(s);
            let mut c = 0;
            let images: Vec<Vec<F::Elem>> = blocks
                .iter()
                .map(|idx| {
                    let mut v = vec![f.zero(); n.dim()];
                    for &i in idx {
                        v[i] = row[c].clone();
                        c += 1;
                    }
                    v
                })
                .collect();
            p0.map_to(n, &images).mul(&section)
        })
        .collect();
    HomSpace::from_span(f, n.dim(), m.dim(), &maps)
}
