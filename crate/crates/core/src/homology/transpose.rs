use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exactlin::{Field, Mat};
use crate::modrep::{evaluation_map, hom_space, resolution, FreeModule, Module};

use super::{ext_dims, syzygy, ExtSeq};

/// `Tr M`, the cokernel of `P_0* -> P_1*` for the minimal presentation
/// `P_1 -> P_0 -> M`; a module over the opposite algebra.
pub fn transpose<F: Field>(m: &Module<F>) -> Module<F> {
    let alg = m.alg();
    let op = alg.opposite();
    let f = alg.field();
    if m.is_zero() {
        return Module::zero(&op);
    }
    let shared = resolution(m);
    let mut res = shared.lock();
    let p0 = res.term(0).clone();
    let p1 = res.term(1).clone();
    let rel = res.images(1).to_vec();
    drop(res);
    // P_1* = ⊕_j e_{w_j} A, a free module over the opposite algebra
    let q = FreeModule::new(&op, p1.verts().to_vec());
    let qm = q.to_module();
    if q.is_zero() {
        return qm;
    }
    // images of the generators of P_0*: the k-th coordinate functional
    // composed with P_1 -> P_0
    let gens: Vec<Vec<F::Elem>> = (0..p0.rank())
        .map(|k| {
            let mut row = vec![f.zero(); q.dim()];
            for (j, x) in rel.iter().enumerate() {
                let comp = p0.component(x, k);
                for &c in op.proj_basis(p1.verts()[j]) {
                    row[q.coord(j, c)] = comp[c].clone();
                }
            }
            row
        })
        .collect();
    let image = qm.submodule(&Mat::from_rows(f, q.dim(), gens));
    qm.quotient(&image.inclusion.transpose()).module
}

/// `J_n(M) = Tr Ω^n M`.
pub fn higher_transpose<F: Field>(m: &Module<F>, n: usize) -> Module<F> {
    transpose(&syzygy(m, n))
}

/// `τ_{n-1}(M) = D Tr Ω^{n-2} M` for `n >= 2`.
pub fn higher_ar_translate<F: Field>(m: &Module<F>, n: usize) -> Module<F> {
    assert!(n >= 2, "τ_(n-1) needs n >= 2");
    higher_transpose(m, n - 2).dual().over(m.alg()).expect("double opposite is the algebra itself")
}

/// `Ext^i(Tr M, A) = 0` for `i = 1..=n`.
pub fn n_torsionfree<F: Field>(m: &Module<F>, n: usize) -> bool {
    if n == 0 || m.is_zero() {
        return true;
    }
    let tr = transpose(m);
    let a = Module::regular(tr.alg());
    ext_dims(&tr, &a, n)[1..].iter().all(|&d| d == 0)
}

/// `ev_M` injective; must agree with 1-torsionfreeness.
pub fn torsionless<F: Field>(m: &Module<F>) -> bool {
    let ev = evaluation_map(m).expect("evaluation map is a module map").0;
    let by_ev = ev.is_injective();
    assert_eq!(by_ev, n_torsionfree(m, 1), "torsionless: evaluation map and Ext(Tr M, A) disagree");
    by_ev
}

/// `ev_M` bijective; must agree with 2-torsionfreeness.
pub fn reflexive<F: Field>(m: &Module<F>) -> bool {
    let ev = evaluation_map(m).expect("evaluation map is a module map").0;
    let by_ev = ev.is_iso() && ev.is_surjective();
    assert_eq!(by_ev, n_torsionfree(m, 2), "reflexive: evaluation map and Ext(Tr M, A) disagree");
    by_ev
}

/// Which vanishing condition failed first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GpFailure {
    /// `Ext^i(M, A) != 0`
    ExtIntoRegular(usize),
    /// `Ext^i(Tr M, A) != 0`
    ExtOfTranspose(usize),
}

/// Gorenstein projectivity checked for `i = 1..=bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GpReport {
    pub bound: usize,
    pub ext_m: Vec<usize>,
    pub ext_tr: Vec<usize>,
    pub failure: Option<GpFailure>,
}

impl GpReport {
    pub fn holds_up_to_bound(&self) -> bool {
        self.failure.is_none()
    }

    /// Least `i` at which either family is nonzero.
    pub fn first_failure_index(&self) -> Option<usize> {
        self.failure.map(|f| match f {
            GpFailure::ExtIntoRegular(i) | GpFailure::ExtOfTranspose(i) => i,
        })
    }
}

/// Stops at the first failing degree; the Ext lists cover the degrees
/// computed.
pub fn gorenstein_projective_up_to<F: Field>(m: &Module<F>, bound: usize) -> GpReport {
    let a = Module::regular(m.alg());
    let tr = transpose(m);
    let mut seq_m = ExtSeq::new(m, &a).skip(1);
    let mut seq_tr = ExtSeq::new(&tr, &Module::regular(tr.alg())).skip(1);
    let (mut ext_m, mut ext_tr) = (Vec::new(), Vec::new());
    let mut failure = None;
    for i in 1..=bound {
        let e = seq_m.next().unwrap();
        ext_m.push(e);
        if e != 0 {
            failure = Some(GpFailure::ExtIntoRegular(i));
            break;
        }
        let t = seq_tr.next().unwrap();
        ext_tr.push(t);
        if t != 0 {
            failure = Some(GpFailure::ExtOfTranspose(i));
            break;
        }
    }
    GpReport { bound, ext_m, ext_tr, failure }
}

/// Splits off indecomposable projective summands: repeatedly finds a
/// surjection `M -> A e_v` (which splits) and replaces `M` by its kernel.
/// Returns the remaining module and the vertices of the removed summands.
///
/// Surjections are searched among Hom-basis maps and seeded random
/// combinations, so a summand can in principle be missed over a tiny field.
pub fn strip_projective_summands<F: Field>(m: &Module<F>, seed: u64) -> (Module<F>, Vec<usize>) {
    let alg = m.alg();
    let f = alg.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cur = m.clone();
    let mut removed = Vec::new();
    'outer: loop {
        if cur.is_zero() {
            break;
        }
        for v in 0..alg.num_vertices() {
            let pv = alg.proj_dim(v);
            if cur.dim_vector()[v] == 0 || cur.top_vector()[v] == 0 || pv > cur.dim() {
                continue;
            }
            let h = hom_space(&cur, &Module::projective(alg, v));
            let mut candidates: Vec<Mat<F>> = h.basis().to_vec();
            for _ in 0..8 {
                if h.dim() == 0 {
                    break;
                }
                let coeffs: Vec<F::Elem> = (0..h.dim()).map(|_| f.random(&mut rng, 1000)).collect();
                candidates.push(h.combine(f, &coeffs));
            }
            if let Some(g) = candidates.iter().find(|g| g.rank() == pv) {
                let ker = g.kernel_basis();
                cur = cur.submodule_of_subspace(&ker).module;
                removed.push(v);
                continue 'outer;
            }
        }
        break;
    }
    (cur, removed)
}
