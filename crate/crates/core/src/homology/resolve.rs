use crate::algebra::Alg;
use crate::exactlin::{Field, Mat};
use crate::modrep::{is_projective, resolution, FreeModule, Module, Morphism};

use super::DimensionValue;

/// `P_L -> ... -> P_0 -> M`, a prefix of the cached minimal resolution.
#[derive(Clone, Debug)]
pub struct ProjResolution<F: Field> {
    pub target: Module<F>,
    pub terms: Vec<FreeModule<F>>,
    /// `differentials[i - 1]` is `P_i -> P_{i-1}`.
    pub differentials: Vec<Mat<F>>,
    pub augmentation: Morphism<F>,
    pub minimal: bool,
}

/// `M -> I_0 -> ... -> I_L`, the dual of the minimal resolution of `D(M)`.
#[derive(Clone, Debug)]
pub struct InjCoresolution<F: Field> {
    pub target: Module<F>,
    /// `terms[i]` lists `v` for each summand `D(e_v A)` of `I_i`.
    pub terms: Vec<Vec<usize>>,
    pub modules: Vec<Module<F>>,
    /// `differentials[i - 1]` is `I_{i-1} -> I_i`.
    pub differentials: Vec<Mat<F>>,
    pub coaugmentation: Morphism<F>,
    pub minimal: bool,
}

impl<F: Field> InjCoresolution<F> {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

pub fn proj_resolution<F: Field>(m: &Module<F>, length: usize) -> ProjResolution<F> {
    let shared = resolution(m);
    let mut res = shared.lock();
    res.extend(length);
    let terms: Vec<FreeModule<F>> = (0..=length).map(|i| res.term(i).clone()).collect();
    let differentials = (1..=length).map(|i| res.differential(i).clone()).collect();
    let d0 = res.differential(0).clone();
    drop(res);
    let augmentation = Morphism::new(terms[0].to_module(), m.clone(), d0).expect("augmentation is a module map");
    ProjResolution { target: m.clone(), terms, differentials, augmentation, minimal: true }
}

/// `Ω^n M`.
pub fn syzygy<F: Field>(m: &Module<F>, n: usize) -> Module<F> {
    if n == 0 || m.is_zero() {
        return m.clone();
    }
    resolution(m).lock().syzygy(n)
}

/// `Ω^{-n} M = D Ω^n D M`.
pub fn cosyzygy<F: Field>(m: &Module<F>, n: usize) -> Module<F> {
    let d = syzygy(&m.dual(), n).dual();
    d.over(m.alg()).expect("double opposite is the algebra itself")
}

pub fn inj_coresolution<F: Field>(m: &Module<F>, length: usize) -> InjCoresolution<F> {
    let alg = m.alg();
    let p = proj_resolution(&m.dual(), length);
    let modules: Vec<Module<F>> =
        p.terms.iter().map(|t| t.to_module().dual().over(alg).expect("double opposite is the algebra itself")).collect();
    let coaug = Morphism::new(m.clone(), modules[0].clone(), p.augmentation.matrix.transpose()).expect("dual of a module map");
    InjCoresolution {
        target: m.clone(),
        terms: p.terms.iter().map(|t| t.verts().to_vec()).collect(),
        modules,
        differentials: p.differentials.iter().map(|d| d.transpose()).collect(),
        coaugmentation: coaug,
        minimal: p.minimal,
    }
}

/// For each vertex `v`, whether the indecomposable injective `D(e_v A)` is
/// projective.
pub fn injectives_that_are_projective<F: Field>(alg: &Alg<F>) -> Vec<bool> {
    (0..alg.num_vertices()).map(|v| is_projective(&Module::injective(alg, v))).collect()
}

/// Least `n <= cap` such that `I_n` in the minimal injective coresolution of
/// `m` is not projective.
pub fn dominant_dimension<F: Field>(m: &Module<F>, cap: usize) -> DimensionValue {
    if m.is_zero() {
        return DimensionValue::AtLeast(cap + 1);
    }
    let pi = injectives_that_are_projective(m.alg());
    let shared = resolution(&m.dual());
    let mut res = shared.lock();
    for n in 0..=cap {
        let t = res.term(n);
        if t.is_zero() {
            break;
        }
        if t.verts().iter().any(|&v| !pi[v]) {
            return DimensionValue::Exact(n);
        }
    }
    DimensionValue::AtLeast(cap + 1)
}

/// Dominant dimension of the algebra, that of its regular module.
pub fn domdim<F: Field>(alg: &Alg<F>, cap: usize) -> DimensionValue {
    dominant_dimension(&Module::regular(alg), cap)
}

/// Terms of larger dimension are not resolved further by [`pd`]; their
/// kernels would need dense matrices of several hundred megabytes.
pub const TERM_DIM_BUDGET: usize = 5000;

/// Projective dimension up to `cap`. If a term `P_n` grows past
/// [`TERM_DIM_BUDGET`] before the answer is known, the result is the lower
/// bound `AtLeast(n)` witnessed by `P_n != 0`.
pub fn pd<F: Field>(m: &Module<F>, cap: usize) -> DimensionValue {
    if m.is_zero() {
        return DimensionValue::Exact(0);
    }
    let shared = resolution(m);
    let mut res = shared.lock();
    for n in 0..=cap {
        if res.term(n).dim() > TERM_DIM_BUDGET {
            return DimensionValue::AtLeast(n);
        }
        if res.term(n + 1).is_zero() {
            return DimensionValue::Exact(n);
        }
    }
    DimensionValue::AtLeast(cap + 1)
}

pub fn id<F: Field>(m: &Module<F>, cap: usize) -> DimensionValue {
    pd(&m.dual(), cap)
}

/// Maximum of the projective dimensions of the simple modules.
pub fn gldim<F: Field>(alg: &Alg<F>, cap: usize) -> DimensionValue {
    let mut best = 0;
    for v in 0..alg.num_vertices() {
        match pd(&Module::simple(alg, v), cap) {
            DimensionValue::Exact(n) => best = best.max(n),
            at_least => return at_least,
        }
    }
    DimensionValue::Exact(best)
}
