use crate::exactlin::{Field, Mat};
use crate::modrep::{hom_differential, resolution, Module};

/// `dim Ext^i(M, N)` for `i = 0, 1, ...`, computed lazily from
/// `Hom(P_•, N)` on the minimal resolution of `M`.
pub struct ExtSeq<F: Field> {
    m: Module<F>,
    n: Module<F>,
    next: usize,
    prev_rank: usize,
}

impl<F: Field> ExtSeq<F> {
    pub fn new(m: &Module<F>, n: &Module<F>) -> Self {
        assert!(m.same_algebra(n), "modules live over different algebras");
        ExtSeq { m: m.clone(), n: n.clone(), next: 0, prev_rank: 0 }
    }
}

impl<F: Field> Iterator for ExtSeq<F> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        let i = self.next;
        self.next += 1;
        if self.m.is_zero() || self.n.is_zero() {
            return Some(0);
        }
        let n = &self.n;
        let shared = resolution(&self.m);
        let mut res = shared.lock();
        let p = res.term(i).clone();
        let cols: usize = p.verts().iter().map(|&v| n.vertex_basis(v).len()).sum();
        let q_verts = res.term(i + 1).verts().to_vec();
        let delta = hom_differential(&p, &q_verts, res.images(i + 1), n);
        let rank = if delta.rows() == 0 || delta.cols() == 0 { 0 } else { delta.rank() };
        let out = cols - rank - self.prev_rank;
        self.prev_rank = rank;
        Some(out)
    }
}

/// `dim Ext^i(M, N)` for `i = 0..=max`.
pub fn ext_dims<F: Field>(m: &Module<F>, n: &Module<F>, max: usize) -> Vec<usize> {
    ExtSeq::new(m, n).take(max + 1).collect()
}

/// `dim Tor_i(M, N)` for a right module `M` (over the opposite algebra) and
/// a left module `N`, from `M ⊗ P_•` on the minimal resolution of `N`.
pub fn tor_dims_direct<F: Field>(m: &Module<F>, n: &Module<F>, max: usize) -> Vec<usize> {
    let alg = n.alg();
    assert!(m.alg().same_as(&alg.opposite()), "Tor needs a right and a left module");
    if m.is_zero() || n.is_zero() {
        return vec![0; max + 1];
    }
    let f = alg.field();
    let idx: Vec<Vec<usize>> = (0..alg.num_vertices()).map(|v| m.vertex_basis(v)).collect();
    let shared = resolution(n);
    let mut res = shared.lock();
    res.extend(max + 1);
    // d_{i+1}: M ⊗ P_{i+1} -> M ⊗ P_i, m ⊗ g_j ↦ Σ_k m x_jk ⊗ g_k
    let boundary = |res: &mut crate::modrep::Resolution<F>, i: usize| -> Mat<F> {
        let p = res.term(i).clone();
        let q = res.term(i + 1).clone();
        let images = res.images(i + 1);
        let mut row_off = Vec::new();
        let mut o = 0;
        for &v in p.verts() {
            row_off.push(o);
            o += idx[v].len();
        }
        let nrows = o;
        let ncols: usize = q.verts().iter().map(|&w| idx[w].len()).sum();
        let mut d = Mat::zeros(f, nrows, ncols);
        let mut c0 = 0;
        for (x, &w) in images.iter().zip(q.verts()) {
            let src = &idx[w];
            for (k, &v) in p.verts().iter().enumerate() {
                let dst = &idx[v];
                if src.is_empty() || dst.is_empty() {
                    continue;
                }
                let comp = p.component(x, k);
                for (b, c) in comp.iter().enumerate() {
                    if f.is_zero(c) {
                        continue;
                    }
                    let act = m.action(b);
                    for (r, &ri) in dst.iter().enumerate() {
                        for (s, &si) in src.iter().enumerate() {
                            let a = act.get(ri, si);
                            if !f.is_zero(a) {
                                let cur = d.get(row_off[k] + r, c0 + s).clone();
                                d.set(row_off[k] + r, c0 + s, f.add(&cur, &f.mul(c, a)));
                            }
                        }
                    }
                }
            }
            c0 += src.len();
        }
        d
    };
    let rank = |d: &Mat<F>| if d.rows() == 0 || d.cols() == 0 { 0 } else { d.rank() };
    let mut out = Vec::with_capacity(max + 1);
    let mut rank_in = 0; // rank of d_i : C_i -> C_{i-1}
    for i in 0..=max {
        let chains: usize = res.term(i).verts().iter().map(|&v| idx[v].len()).sum();
        let r_next = rank(&boundary(&mut res, i));
        out.push(chains - rank_in - r_next);
        rank_in = r_next;
    }
    out
}

/// Tor computed directly and as `D Ext(M, D N)` over the opposite algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorDims {
    pub direct: Vec<usize>,
    pub via_ext: Vec<usize>,
}

impl TorDims {
    pub fn consistent(&self) -> bool {
        self.direct == self.via_ext
    }
}

pub fn tor_dims<F: Field>(m: &Module<F>, n: &Module<F>, max: usize) -> TorDims {
    let direct = tor_dims_direct(m, n, max);
    let dn = n.dual();
    let via_ext = ext_dims(m, &dn, max);
    TorDims { direct, via_ext }
}
