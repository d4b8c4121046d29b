use crate::exactlin::Field;

use super::{resolution, FreeModule, Module, Morphism};

/// `P -> M` with `P` the projective cover, together with `P` as a sum of
/// indecomposable projectives.
pub fn projective_cover<F: Field>(m: &Module<F>) -> (FreeModule<F>, Morphism<F>) {
    let shared = resolution(m);
    let mut res = shared.lock();
    let p = res.term(0).clone();
    let d0 = res.differential(0).clone();
    drop(res);
    let mor = Morphism::new(p.to_module(), m.clone(), d0).expect("augmentation is a module map");
    (p, mor)
}

/// `M -> I` with `I` the injective envelope, the dual of the projective
/// cover of `D(M)`; the vertex list names the summands `D(e_v A)`.
pub fn injective_envelope<F: Field>(m: &Module<F>) -> (Vec<usize>, Morphism<F>) {
    let dm = m.dual();
    let shared = resolution(&dm);
    let mut res = shared.lock();
    let p = res.term(0).clone();
    let d0 = res.differential(0).clone();
    drop(res);
    let target = p.to_module().dual();
    let mor = Morphism::new(m.clone(), target, d0.transpose()).expect("dual of the augmentation is a module map");
    (p.verts().to_vec(), mor)
}

pub fn is_projective<F: Field>(m: &Module<F>) -> bool {
    let shared = resolution(m);
    let mut res = shared.lock();
    res.term(0).dim() == m.dim()
}

pub fn is_injective<F: Field>(m: &Module<F>) -> bool {
    is_projective(&m.dual())
}
