//! Bimodules as modules over the enveloping algebra `A^e = A ⊗ A^op`.
//!
//! The basis element `(i, j)` of `A^e` (index `i * dim A + j`) acts on a
//! bimodule by `m ↦ b_i m b_j`.

use crate::algebra::{Alg, Algebra};
use crate::exactlin::{Field, Mat};

use super::{hom_space, ModError, Module};

fn check_env<F: Field>(a: &Alg<F>, m: &Module<F>) -> Result<Alg<F>, ModError> {
    let env = a.enveloping();
    if !m.alg().same_as(&env) {
        return Err(ModError::AlgebraMismatch);
    }
    Ok(env)
}

/// `A` with `(x ⊗ y) · a = x a y`.
pub fn regular_bimodule<F: Field>(a: &Alg<F>) -> Module<F> {
    let d = a.dim();
    let left = a.left_mult();
    let right: Vec<Mat<F>> = (0..d).map(|j| a.right_mult(j)).collect();
    let actions = (0..d * d).map(|ij| left[ij / d].mul(&right[ij % d])).collect();
    Module::from_trusted(&a.enveloping(), actions)
}

/// `D(A) = Hom_K(A, K)` with `((x ⊗ y) f)(a) = f(y a x)`.
pub fn coregular_bimodule<F: Field>(a: &Alg<F>) -> Module<F> {
    dual_bimodule(a, &regular_bimodule(a)).expect("regular bimodule lives over A^e")
}

/// Turns a module over `(A^e)^op` into a bimodule through the isomorphism
/// `A^e -> (A^e)^op`, `x ⊗ y ↦ y ⊗ x`.
pub fn swap_from_opposite<F: Field>(a: &Alg<F>, m: &Module<F>) -> Result<Module<F>, ModError> {
    let env = a.enveloping();
    if !m.alg().same_as(&env.opposite()) {
        return Err(ModError::AlgebraMismatch);
    }
    let d = a.dim();
    let actions = (0..d * d).map(|ij| m.action((ij % d) * d + ij / d).clone()).collect();
    Ok(Module::from_trusted(&env, actions))
}

/// Inverse of [`swap_from_opposite`].
pub fn swap_to_opposite<F: Field>(a: &Alg<F>, m: &Module<F>) -> Result<Module<F>, ModError> {
    let env = check_env(a, m)?;
    let d = a.dim();
    let actions = (0..d * d).map(|ij| m.action((ij % d) * d + ij / d).clone()).collect();
    Ok(Module::from_trusted(&env.opposite(), actions))
}

/// `D(M)` of a bimodule, again a bimodule.
pub fn dual_bimodule<F: Field>(a: &Alg<F>, m: &Module<F>) -> Result<Module<F>, ModError> {
    check_env(a, m)?;
    swap_from_opposite(a, &m.dual())
}

/// Action of `x ⊗ 1`.
pub fn left_action<F: Field>(a: &Algebra<F>, m: &Module<F>, x: usize) -> Mat<F> {
    let d = a.dim();
    let mut out = Mat::zeros(a.field(), m.dim(), m.dim());
    for &e in a.idems() {
        out = out.add(m.action(x * d + e));
    }
    out
}

/// Action of `1 ⊗ y`, i.e. right multiplication by `y`.
pub fn right_action<F: Field>(a: &Algebra<F>, m: &Module<F>, y: usize) -> Mat<F> {
    let d = a.dim();
    let mut out = Mat::zeros(a.field(), m.dim(), m.dim());
    for &e in a.idems() {
        out = out.add(m.action(e * d + y));
    }
    out
}

/// The underlying left `A`-module.
pub fn restrict_left<F: Field>(a: &Alg<F>, m: &Module<F>) -> Result<Module<F>, ModError> {
    check_env(a, m)?;
    Ok(Module::from_trusted(a, (0..a.dim()).map(|x| left_action(a, m, x)).collect()))
}

/// The underlying right `A`-module, as a module over `A^op`.
pub fn restrict_right<F: Field>(a: &Alg<F>, m: &Module<F>) -> Result<Module<F>, ModError> {
    check_env(a, m)?;
    Ok(Module::from_trusted(&a.opposite(), (0..a.dim()).map(|y| right_action(a, m, y)).collect()))
}

/// `Hom_A(M, N)` for bimodules `M, N`, with `((x ⊗ y) f)(m) = f(m x) y`.
pub fn bimodule_hom<F: Field>(a: &Alg<F>, m: &Module<F>, n: &Module<F>) -> Result<Module<F>, ModError> {
    let env = check_env(a, m)?;
    check_env(a, n)?;
    let f = a.field();
    let d = a.dim();
    let h = hom_space(&restrict_left(a, m)?, &restrict_left(a, n)?);
    let r = h.dim();
    let rm: Vec<Mat<F>> = (0..d).map(|x| right_action(a, m, x)).collect();
    let rn: Vec<Mat<F>> = (0..d).map(|y| right_action(a, n, y)).collect();
    let actions = (0..d * d)
        .map(|ij| {
            let (x, y) = (ij / d, ij % d);
            let mut act = Mat::zeros(f, r, r);
            for (k, g) in h.basis().iter().enumerate() {
                let img = rn[y].mul(g).mul(&rm[x]);
                for (l, c) in h.coords(&img).into_iter().enumerate() {
                    act.set(l, k, c);
                }
            }
            act
        })
        .collect();
    Ok(Module::from_trusted(&env, actions))
}

/// Space `⊕_v M e_v ⊗ e_v N` modulo `m g ⊗ n - m ⊗ g n` for the radical
/// generators `g`, given right actions on `M` and left actions on `N`.
struct TensorSpace<F: Field> {
    /// blocks[v] = (offset, M-indices, N-indices)
    blocks: Vec<(usize, Vec<usize>, Vec<usize>)>,
    dim_w: usize,
    projection: Mat<F>,
    lift: Mat<F>,
}

fn tensor_space<F: Field>(
    alg: &Algebra<F>,
    m_vertex: &[usize],
    m_right: &dyn Fn(usize) -> Mat<F>,
    n_vertex: &[usize],
    n_left: &dyn Fn(usize) -> Mat<F>,
) -> TensorSpace<F> {
    let f = alg.field();
    let nv = alg.num_vertices();
    let mut blocks = Vec::with_capacity(nv);
    let mut o = 0;
    for v in 0..nv {
        let mi: Vec<usize> = (0..m_vertex.len()).filter(|&i| m_vertex[i] == v).collect();
        let ni: Vec<usize> = (0..n_vertex.len()).filter(|&j| n_vertex[j] == v).collect();
        let sz = mi.len() * ni.len();
        blocks.push((o, mi, ni));
        o += sz;
    }
    let dim_w = o;
    let mut rels: Vec<Vec<F::Elem>> = Vec::new();
    for &g in alg.rad_gens() {
        let (s, t) = (alg.left_vertex(g), alg.right_vertex(g));
        let rg = m_right(g);
        let lg = n_left(g);
        let (os, ms, ns) = &blocks[s];
        let (ot, mt, nt) = &blocks[t];
        for (a, &i) in ms.iter().enumerate() {
            for (b, &j) in nt.iter().enumerate() {
                let mut row = vec![f.zero(); dim_w];
                // (m_i g) ⊗ n_j lies in block t
                for (a2, &i2) in mt.iter().enumerate() {
                    let c = rg.get(i2, i);
                    if !f.is_zero(c) {
                        row[ot + a2 * nt.len() + b] = f.add(&row[ot + a2 * nt.len() + b], c);
                    }
                }
                // m_i ⊗ (g n_j) lies in block s
                for (b2, &j2) in ns.iter().enumerate() {
                    let c = lg.get(j2, j);
                    if !f.is_zero(c) {
                        row[os + a * ns.len() + b2] = f.sub(&row[os + a * ns.len() + b2], c);
                    }
                }
                rels.push(row);
            }
        }
    }
    let rel = Mat::from_rows(f, dim_w, rels);
    let r = rel.rref();
    let free = r.free_columns();
    let mut projection = Mat::zeros(f, free.len(), dim_w);
    let mut free_pos = vec![usize::MAX; dim_w];
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
    let lift = Mat::identity(f, dim_w).select_cols(&free);
    TensorSpace { blocks, dim_w, projection, lift }
}

/// `dim (M ⊗_B N)` for a right `B`-module `M` (a module over `B^op`) and a
/// left `B`-module `N`.
pub fn tensor_dim<F: Field>(m: &Module<F>, n: &Module<F>) -> Result<usize, ModError> {
    let b = n.alg();
    if !m.alg().same_as(&b.opposite()) {
        return Err(ModError::AlgebraMismatch);
    }
    let mv: Vec<usize> = (0..m.dim()).map(|i| m.vertex_of(i)).collect();
    let nv: Vec<usize> = (0..n.dim()).map(|i| n.vertex_of(i)).collect();
    let t = tensor_space(b, &mv, &|g| m.action(g).clone(), &nv, &|g| n.action(g).clone());
    Ok(t.projection.rows())
}

/// `M ⊗_A N` for bimodules, with `(x ⊗ y)(m ⊗ n) = x m ⊗ n y`.
pub fn tensor_bimodules<F: Field>(a: &Alg<F>, m: &Module<F>, n: &Module<F>) -> Result<Module<F>, ModError> {
    let env = check_env(a, m)?;
    check_env(a, n)?;
    let f = a.field();
    let d = a.dim();
    let nvert = a.num_vertices();
    // vertex (v, w) of A^e has index v * nvert + w
    let mv: Vec<usize> = (0..m.dim()).map(|i| m.vertex_of(i) % nvert).collect();
    let nv: Vec<usize> = (0..n.dim()).map(|i| n.vertex_of(i) / nvert).collect();
    let t = tensor_space(a, &mv, &|g| right_action(a, m, g), &nv, &|g| left_action(a, n, g));
    let lm: Vec<Mat<F>> = (0..d).map(|x| left_action(a, m, x)).collect();
    let rn: Vec<Mat<F>> = (0..d).map(|y| right_action(a, n, y)).collect();
    let actions = (0..d * d)
        .map(|ij| {
            let (x, y) = (ij / d, ij % d);
            let mut tw = Mat::zeros(f, t.dim_w, t.dim_w);
            for (o, mi, ni) in &t.blocks {
                if mi.is_empty() || ni.is_empty() {
                    continue;
                }
                let am = lm[x].select_rows(mi).select_cols(mi);
                let an = rn[y].select_rows(ni).select_cols(ni);
                tw.set_block(*o, *o, &am.kron(&an));
            }
            t.projection.mul(&tw).mul(&t.lift)
        })
        .collect();
    Ok(Module::from_trusted(&env, actions))
}
