use crate::algebra::Alg;
use crate::exactlin::{Echelon, Field, Mat};

use super::Module;

/// Something the algebra acts on with an idempotent-adapted basis.
pub trait Acts<F: Field> {
    fn alg(&self) -> &Alg<F>;
    fn space_dim(&self) -> usize;
    /// Vertex of the `i`-th basis vector.
    fn vertex_at(&self, i: usize) -> usize;
    /// Applies basis element `b` to every row of `rows`.
    fn act_rows(&self, b: usize, rows: &Mat<F>) -> Mat<F>;

    /// Vertex of a vertex-pure vector, read at its first nonzero entry.
    fn vertex_of_vec(&self, v: &[F::Elem]) -> Option<usize> {
        let f = self.alg().field();
        v.iter().position(|x| !f.is_zero(x)).map(|i| self.vertex_at(i))
    }
}

impl<F: Field> Acts<F> for Module<F> {
    fn alg(&self) -> &Alg<F> {
        Module::alg(self)
    }
    fn space_dim(&self) -> usize {
        self.dim()
    }
    fn vertex_at(&self, i: usize) -> usize {
        self.vertex_of(i)
    }
    fn act_rows(&self, b: usize, rows: &Mat<F>) -> Mat<F> {
        rows.mul(&self.action(b).transpose())
    }
}

/// `⊕_k A e_{v_k}`, coordinates blockwise in the bases `proj_basis(v_k)`.
#[derive(Clone, Debug)]
pub struct FreeModule<F: Field> {
    alg: Alg<F>,
    verts: Vec<usize>,
    offsets: Vec<usize>,
}

impl<F: Field> FreeModule<F> {
    pub fn new(alg: &Alg<F>, verts: Vec<usize>) -> Self {
        let mut offsets = Vec::with_capacity(verts.len() + 1);
        let mut o = 0;
        offsets.push(0);
        for &v in &verts {
            o += alg.proj_dim(v);
            offsets.push(o);
        }
        FreeModule { alg: alg.clone(), verts, offsets }
    }

    pub fn alg(&self) -> &Alg<F> {
        &self.alg
    }
    pub fn dim(&self) -> usize {
        *self.offsets.last().unwrap()
    }
    pub fn rank(&self) -> usize {
        self.verts.len()
    }
    pub fn is_zero(&self) -> bool {
        self.verts.is_empty()
    }
    /// Vertex of each free generator.
    pub fn verts(&self) -> &[usize] {
        &self.verts
    }
    pub fn offset(&self, k: usize) -> usize {
        self.offsets[k]
    }
    /// Multiplicity of `A e_v` as a summand.
    pub fn multiplicity(&self, v: usize) -> usize {
        self.verts.iter().filter(|&&w| w == v).count()
    }

    /// Coordinate of basis element `b` inside block `k`.
    pub fn coord(&self, k: usize, b: usize) -> usize {
        debug_assert_eq!(self.alg.right_vertex(b), self.verts[k]);
        self.offsets[k] + self.alg.pos_in_proj(b)
    }

    /// The `k`-th generator `e_{v_k}`.
    pub fn generator(&self, k: usize) -> Vec<F::Elem> {
        let f = self.alg.field();
        let mut v = vec![f.zero(); self.dim()];
        v[self.coord(k, self.alg.idem(self.verts[k]))] = f.one();
        v
    }

    /// Component of `x` in block `k`, as an algebra element.
    pub fn component(&self, x: &[F::Elem], k: usize) -> Vec<F::Elem> {
        let f = self.alg.field();
        let mut out = vec![f.zero(); self.alg.dim()];
        for (i, &b) in self.alg.proj_basis(self.verts[k]).iter().enumerate() {
            out[b] = x[self.offsets[k] + i].clone();
        }
        out
    }

    /// The free module as an explicit module.
    pub fn to_module(&self) -> Module<F> {
        let parts: Vec<Module<F>> = self.verts.iter().map(|&v| Module::projective(&self.alg, v)).collect();
        Module::direct_sum(&self.alg, &parts.iter().collect::<Vec<_>>())
    }

    /// Whether every coordinate at a trivial path vanishes, i.e. `x` lies in
    /// the radical.
    pub fn in_radical(&self, x: &[F::Elem]) -> bool {
        let f = self.alg.field();
        (0..self.rank()).all(|k| f.is_zero(&x[self.coord(k, self.alg.idem(self.verts[k]))]))
    }

    /// Matrix (`dim X x dim self`) of the module map sending the `k`-th
    /// generator to `images[k]`.
    pub fn map_to<X: Acts<F>>(&self, x: &X, images: &[Vec<F::Elem>]) -> Mat<F> {
        let f = self.alg.field();
        let n = x.space_dim();
        let mut out = Mat::zeros(f, n, self.dim());
        for (k, img) in images.iter().enumerate() {
            let v = self.verts[k];
            let pb = self.alg.proj_basis(v);
            let single = Mat::from_vec(f, 1, n, img.clone());
            for (i, &b) in pb.iter().enumerate() {
                let col = x.act_rows(b, &single);
                for r in 0..n {
                    out.set(r, self.offsets[k] + i, col.get(0, r).clone());
                }
            }
        }
        out
    }
}

impl<F: Field> Acts<F> for FreeModule<F> {
    fn alg(&self) -> &Alg<F> {
        &self.alg
    }
    fn space_dim(&self) -> usize {
        self.dim()
    }
    fn vertex_at(&self, i: usize) -> usize {
        let k = self.offsets.partition_point(|&o| o <= i) - 1;
        self.alg.left_vertex(self.alg.proj_basis(self.verts[k])[i - self.offsets[k]])
    }
    fn act_rows(&self, b: usize, rows: &Mat<F>) -> Mat<F> {
        let f = self.alg.field();
        let mut out = Mat::zeros(f, rows.rows(), self.dim());
        for (k, &v) in self.verts.iter().enumerate() {
            let (o0, o1) = (self.offsets[k], self.offsets[k + 1]);
            let a = &self.alg.proj_actions(v)[b];
            if a.is_zero() {
                continue;
            }
            let blk = rows.block(0, rows.rows(), o0, o1);
            out.set_block(0, o0, &blk.mul(&a.transpose()));
        }
        out
    }
}

/// Minimal generators of the submodule spanned by the rows of `k`.
///
/// The rows must be vertex-pure (each inside one `e_v X`), which holds for
/// reduced bases of submodules of adapted modules. Returns `(vertex, row)`
/// pairs whose classes form a basis of `K / rad K`.
pub fn minimal_generators<F: Field, X: Acts<F>>(x: &X, k: &Mat<F>) -> Vec<(usize, Vec<F::Elem>)> {
    let alg = x.alg();
    let f = alg.field();
    let n = x.space_dim();
    if k.rows() == 0 {
        return Vec::new();
    }
    let gens = alg.rad_gens();
    let blocks: Vec<Mat<F>> = gens.iter().map(|&g| x.act_rows(g, k)).collect();
    let stacked = Mat::vstack(f, n, &blocks.iter().collect::<Vec<_>>());
    let mut ech = if stacked.rows() == 0 { Echelon::new(f, n) } else { Echelon::from_rows(&stacked) };
    let mut by_vertex: Vec<Vec<usize>> = vec![Vec::new(); alg.num_vertices()];
    for i in 0..k.rows() {
        if let Some(v) = x.vertex_of_vec(k.row(i)) {
            by_vertex[v].push(i);
        }
    }
    let mut out = Vec::new();
    for (v, rows) in by_vertex.iter().enumerate() {
        for &i in rows {
            if ech.insert(k.row(i)) {
                out.push((v, k.row(i).to_vec()));
            }
        }
    }
    out
}
