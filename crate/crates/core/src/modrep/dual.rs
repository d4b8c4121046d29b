use crate::algebra::Algebra;
use crate::exactlin::{Field, Mat};

use super::{hom_space, HomSpace, ModError, Module, Morphism};

/// `M* = Hom_B(M, B)` as a module over `B^op`.
///
/// The vertex-`v` part is `Hom_B(M, B e_v)`; basis vectors are the maps in
/// `parts[v]`, listed vertex by vertex.
#[derive(Clone, Debug)]
pub struct DualModule<F: Field> {
    pub module: Module<F>,
    pub parts: Vec<HomSpace<F>>,
    offsets: Vec<usize>,
}

impl<F: Field> DualModule<F> {
    pub fn offset(&self, v: usize) -> usize {
        self.offsets[v]
    }

    /// The `i`-th basis map as `(vertex, matrix into B e_vertex)`.
    pub fn map(&self, i: usize) -> (usize, &Mat<F>) {
        let v = self.offsets.partition_point(|&o| o <= i) - 1;
        (v, &self.parts[v].basis()[i - self.offsets[v]])
    }
}

/// Right multiplication by `b` as a map `B e_s -> B e_t` where
/// `b ∈ e_s B e_t`.
fn right_mult_between<F: Field>(alg: &Algebra<F>, b: usize) -> Mat<F> {
    let f = alg.field();
    let (s, t) = (alg.left_vertex(b), alg.right_vertex(b));
    let mut r = Mat::zeros(f, alg.proj_dim(t), alg.proj_dim(s));
    for (col, &c) in alg.proj_basis(s).iter().enumerate() {
        for (k, x) in alg.mul_basis(c, b) {
            r.set(alg.pos_in_proj(*k), col, x.clone());
        }
    }
    r
}

pub fn a_dual<F: Field>(m: &Module<F>) -> DualModule<F> {
    let alg = m.alg();
    let f = alg.field();
    let nv = alg.num_vertices();
    let parts: Vec<HomSpace<F>> = (0..nv).map(|v| hom_space(m, &Module::projective(alg, v))).collect();
    let mut offsets = vec![0];
    for p in &parts {
        offsets.push(offsets.last().unwrap() + p.dim());
    }
    let r = *offsets.last().unwrap();
    let actions = (0..alg.dim())
        .map(|b| {
            let (s, t) = (alg.left_vertex(b), alg.right_vertex(b));
            let rb = right_mult_between(alg, b);
            let mut a = Mat::zeros(f, r, r);
            for (i, g) in parts[s].basis().iter().enumerate() {
                let img = rb.mul(g);
                for (j, c) in parts[t].coords(&img).into_iter().enumerate() {
                    a.set(offsets[t] + j, offsets[s] + i, c);
                }
            }
            a
        })
        .collect();
    let module = Module::from_trusted(&alg.opposite(), actions);
    DualModule { module, parts, offsets }
}

/// `ev_M : M -> M**`, `ev(m)(g) = g(m)`, with `M**` as computed by
/// [`a_dual`] applied twice.
pub fn evaluation_map<F: Field>(m: &Module<F>) -> Result<(Morphism<F>, DualModule<F>, DualModule<F>), ModError> {
    let alg = m.alg();
    let f = alg.field();
    let d1 = a_dual(m);
    let d2 = a_dual(&d1.module);
    let op = d1.module.alg().clone();
    let mstar = d1.module.dim();
    let target = d2.module.over(alg)?;
    let mut ev = Mat::zeros(f, target.dim(), m.dim());
    for i in 0..m.dim() {
        let w = m.vertex_of(i);
        // E_i : M* -> B^op e_w, column j is g_j(m_i) in the basis op.proj_basis(w)
        let pb_op = op.proj_basis(w);
        let mut e = Mat::zeros(f, pb_op.len(), mstar);
        for j in 0..mstar {
            let (v, g) = d1.map(j);
            let mut elem = vec![f.zero(); alg.dim()];
            for (pos, &b) in alg.proj_basis(v).iter().enumerate() {
                elem[b] = g.get(pos, i).clone();
            }
            for (row, &c) in pb_op.iter().enumerate() {
                e.set(row, j, elem[c].clone());
            }
        }
        for (k, c) in d2.parts[w].coords(&e).into_iter().enumerate() {
            ev.set(d2.offset(w) + k, i, c);
        }
    }
    let mor = Morphism::new(m.clone(), target, ev)?;
    Ok((mor, d1, d2))
}
