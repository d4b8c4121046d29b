use std::any::{Any, TypeId};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, MutexGuard, OnceLock, RwLock};

use crate::exactlin::{Field, Mat};

use super::{minimal_generators, Acts, FreeModule, Module};

/// Minimal projective resolution `... -> P_1 -> P_0 -> M`, grown on demand.
#[derive(Debug)]
pub struct Resolution<F: Field> {
    module: Module<F>,
    terms: Vec<FreeModule<F>>,
    /// `images[n][k]`: image of the `k`-th generator of `P_n` in `P_{n-1}`
    /// (in `M` for `n = 0`).
    images: Vec<Vec<Vec<F::Elem>>>,
    /// `diffs[n]`: matrix of `P_n -> P_{n-1}` (the augmentation for `n = 0`).
    diffs: Vec<Mat<F>>,
    /// `kernels[n]`: rows spanning `Ω^{n+1} M = ker diffs[n]` inside `P_n`.
    kernels: Vec<Mat<F>>,
}

impl<F: Field> Resolution<F> {
    pub fn new(module: &Module<F>) -> Self {
        Resolution { module: module.clone(), terms: Vec::new(), images: Vec::new(), diffs: Vec::new(), kernels: Vec::new() }
    }

    pub fn module(&self) -> &Module<F> {
        &self.module
    }

    /// Number of terms computed so far.
    pub fn computed(&self) -> usize {
        self.terms.len()
    }

    /// Computes `P_0 .. P_n`.
    pub fn extend(&mut self, n: usize) {
        let f = self.module.field().clone();
        while self.terms.len() <= n {
            let idx = self.terms.len();
            let gens = if idx == 0 {
                minimal_generators(&self.module, &Mat::identity(&f, self.module.dim()))
            } else {
                let k = self.kernel(idx - 1).clone();
                let g = minimal_generators(&self.terms[idx - 1], &k);
                for (_, x) in &g {
                    assert!(self.terms[idx - 1].in_radical(x), "resolution is not minimal at degree {}", idx);
                }
                g
            };
            let p = FreeModule::new(self.module.alg(), gens.iter().map(|(v, _)| *v).collect());
            let images: Vec<Vec<F::Elem>> = gens.into_iter().map(|(_, x)| x).collect();
            let d = if idx == 0 { p.map_to(&self.module, &images) } else { p.map_to(&self.terms[idx - 1], &images) };
            self.terms.push(p);
            self.images.push(images);
            self.diffs.push(d);
        }
    }

    /// Rows spanning `ker d_n` inside `P_n`; checks exactness at `P_{n}`'s
    /// target when first computed.
    fn kernel(&mut self, n: usize) -> &Mat<F> {
        while self.kernels.len() <= n {
            let i = self.kernels.len();
            let d = &self.diffs[i];
            let k = d.kernel_basis();
            let expected = if i == 0 { self.module.dim() } else { self.kernels[i - 1].rows() };
            assert_eq!(d.cols() - k.rows(), expected, "resolution is not exact at degree {}", i);
            self.kernels.push(k);
        }
        &self.kernels[n]
    }

    pub fn term(&mut self, n: usize) -> &FreeModule<F> {
        self.extend(n);
        &self.terms[n]
    }

    /// Generator images of `P_n` in `P_{n-1}` (in `M` for `n = 0`).
    pub fn images(&mut self, n: usize) -> &[Vec<F::Elem>] {
        self.extend(n);
        &self.images[n]
    }

    pub fn differential(&mut self, n: usize) -> &Mat<F> {
        self.extend(n);
        &self.diffs[n]
    }

    /// `dim Ω^n M`.
    pub fn syzygy_dim(&mut self, n: usize) -> usize {
        if n == 0 {
            return self.module.dim();
        }
        self.extend(n - 1);
        self.kernel(n - 1).rows()
    }

    /// Rows spanning `Ω^n M` inside `P_{n-1}` (`n >= 1`).
    pub fn syzygy_rows(&mut self, n: usize) -> Mat<F> {
        assert!(n >= 1);
        self.extend(n - 1);
        self.kernel(n - 1).clone()
    }

    /// `Ω^n M` as a module.
    pub fn syzygy(&mut self, n: usize) -> Module<F> {
        if n == 0 {
            return self.module.clone();
        }
        let rows = self.syzygy_rows(n);
        let p = &self.terms[n - 1];
        submodule_of_free(p, &rows)
    }

    /// Least `n <= cap` with `P_{n+1} = 0`.
    pub fn projective_dimension(&mut self, cap: usize) -> Option<usize> {
        if self.module.is_zero() {
            return Some(0);
        }
        for n in 0..=cap {
            if self.term(n + 1).is_zero() {
                return Some(n);
            }
        }
        None
    }

    /// Section `s` of the augmentation, `d_0 s = id_M`.
    pub fn augmentation_section(&mut self) -> Mat<F> {
        let d0 = self.differential(0).clone();
        let f = self.module.field();
        d0.solve(&Mat::identity(f, self.module.dim())).expect("augmentation is onto")
    }
}

/// The submodule of a free module spanned by `rows` (closed under the
/// action), as an explicit module.
pub(crate) fn submodule_of_free<F: Field>(p: &FreeModule<F>, rows: &Mat<F>) -> Module<F> {
    let alg = p.alg();
    let r = rows.rref();
    let basis = r.basis();
    let actions = (0..alg.dim()).map(|b| p.act_rows(b, &basis).select_cols(&r.pivots).transpose()).collect();
    Module::from_trusted(alg, actions)
}

/// A cached resolution; `lock` it to read or extend.
#[derive(Debug)]
pub struct SharedResolution<F: Field> {
    module: Module<F>,
    inner: Mutex<Resolution<F>>,
}

impl<F: Field> SharedResolution<F> {
    pub fn lock(&self) -> MutexGuard<'_, Resolution<F>> {
        self.inner.lock().unwrap_or_else(|e| e.into_inner())
    }
}

type Slot = Arc<dyn Any + Send + Sync>;

fn cache() -> &'static RwLock<HashMap<(TypeId, u64), Vec<Slot>>> {
    static CACHE: OnceLock<RwLock<HashMap<(TypeId, u64), Vec<Slot>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The shared, lazily extended resolution of `m`, keyed by fingerprint.
pub fn resolution<F: Field>(m: &Module<F>) -> Arc<SharedResolution<F>> {
    let key = (TypeId::of::<F>(), m.fingerprint());
    let find = |slots: &[Slot]| {
        slots.iter().find_map(|s| {
            let r = s.clone().downcast::<SharedResolution<F>>().ok()?;
            r.module.same_as(m).then_some(r)
        })
    };
    if let Some(r) = cache().read().unwrap().get(&key).and_then(|s| find(s)) {
        return r;
    }
    let mut w = cache().write().unwrap();
    let slots = w.entry(key).or_default();
    if let Some(r) = find(slots) {
        return r;
    }
    let r = Arc::new(SharedResolution { module: m.clone(), inner: Mutex::new(Resolution::new(m)) });
    slots.push(r.clone());
    r
}

pub fn clear_resolution_cache() {
    cache().write().unwrap().clear();
}
