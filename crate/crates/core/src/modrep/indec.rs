use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exactlin::{Field, Mat};

use super::{hom_space, HomSpace, Module};

const TRIALS: usize = 40;

#[derive(Clone, Debug)]
pub enum Indecomposability<F: Field> {
    Indecomposable,
    /// `witness` is an endomorphism that is neither nilpotent nor
    /// invertible when present.
    Decomposable { witness: Option<Mat<F>>, reason: String },
    /// Every sampled endomorphism was nilpotent or invertible, but the
    /// residue algebra of `End(M)` could not be decided exactly.
    ProbablyIndecomposable { trials: usize },
    Zero,
}

impl<F: Field> Indecomposability<F> {
    pub fn holds(&self) -> bool {
        matches!(self, Indecomposability::Indecomposable | Indecomposability::ProbablyIndecomposable { .. })
    }
}

pub fn is_indecomposable<F: Field>(m: &Module<F>) -> bool {
    indecomposability(m, 0).holds()
}

fn power<G: Field>(a: &Mat<G>, e: u64) -> Mat<G> {
    let n = a.rows();
    let mut result = Mat::identity(a.field(), n);
    let mut base = a.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            result = result.mul(&base);
        }
        e >>= 1;
        if e > 0 {
            base = base.mul(&base);
        }
    }
    result
}

/// Decides whether `End(M)` is local.
///
/// A random endomorphism that is neither nilpotent nor invertible splits `M`
/// by Fitting's lemma. Otherwise, when the characteristic is 0 or exceeds
/// `dim End(M)`, the radical of `End(M)` is the kernel of its trace form and
/// the residue algebra is examined directly.
pub fn indecomposability<F: Field>(m: &Module<F>, seed: u64) -> Indecomposability<F> {
    let f = m.field();
    let n = m.dim();
    if n == 0 {
        return Indecomposability::Zero;
    }
    if m.top_vector().iter().sum::<usize>() == 1 || m.socle_vector().iter().sum::<usize>() == 1 {
        return Indecomposability::Indecomposable;
    }
    let end = hom_space(m, m);
    let r = end.dim();
    if r == 1 {
        return Indecomposability::Indecomposable;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..TRIALS {
        let coeffs: Vec<F::Elem> = (0..r).map(|_| f.random(&mut rng, 2 * n as u64 + 1)).collect();
        let phi = end.combine(f, &coeffs);
        let rank = phi.rank();
        if rank < n && !power(&phi, n as u64).is_zero() {
            return Indecomposability::Decomposable {
                witness: Some(phi),
                reason: "an endomorphism is neither nilpotent nor invertible".into(),
            };
        }
    }
    let p = f.characteristic() as usize;
    if p != 0 && p <= r {
        return Indecomposability::ProbablyIndecomposable { trials: TRIALS };
    }
    residue_test(&end, f)
}

/// Exact test through `End(M) / J` where `J` is the trace-form radical.
fn residue_test<F: Field>(end: &HomSpace<F>, f: &F) -> Indecomposability<F> {
    let r = end.dim();
    let basis = end.basis();
    // c[i][j] = coordinates of E_i E_j
    let c: Vec<Vec<Vec<F::Elem>>> =
        (0..r).map(|i| (0..r).map(|j| end.coords(&basis[i].mul(&basis[j]))).collect()).collect();
    let t: Vec<F::Elem> = (0..r).map(|l| (0..r).fold(f.zero(), |acc, j| f.add(&acc, &c[l][j][j]))).collect();
    let form = Mat::from_fn(f, r, r, |i, j| (0..r).fold(f.zero(), |acc, l| f.add(&acc, &f.mul(&c[i][j][l], &t[l]))));
    let jrows = form.kernel_basis();
    let s = r - jrows.rows();
    if s == 1 {
        return Indecomposability::Indecomposable;
    }
    if f.characteristic() == 0 {
        return Indecomposability::ProbablyIndecomposable { trials: TRIALS };
    }
    // E/J with basis the free columns of J's reduced form
    let jr = if jrows.rows() == 0 { Mat::zeros(f, 0, r).rref() } else { jrows.rref() };
    let free = jr.free_columns();
    let project = |x: &[F::Elem]| -> Vec<F::Elem> {
        let mut y = x.to_vec();
        f.reduce_by_echelon(&(0..jr.rank()).map(|i| jr.mat.row(i).to_vec()).collect::<Vec<_>>(), &jr.pivots, &mut y);
        free.iter().map(|&k| y[k].clone()).collect()
    };
    for (a, &i) in free.iter().enumerate() {
        for &j in &free[a + 1..] {
            let d: Vec<F::Elem> = c[i][j].iter().zip(&c[j][i]).map(|(x, y)| f.sub(x, y)).collect();
            if project(&d).iter().any(|x| !f.is_zero(x)) {
                return Indecomposability::Decomposable {
                    witness: None,
                    reason: "End(M)/rad is not commutative, hence not a field".into(),
                };
            }
        }
    }
    // number of simple factors of the commutative residue algebra
    // = dimension of the fixed space of Frobenius
    let p = f.characteristic() as u64;
    let frob_cols: Vec<Vec<F::Elem>> = free.iter().map(|&i| project(&end.coords(&power(&basis[i], p)))).collect();
    let frob = Mat::from_cols(f, s, frob_cols);
    let fixed = s - frob.sub(&Mat::identity(f, s)).rank();
    if fixed == 1 {
        Indecomposability::Indecomposable
    } else {
        Indecomposability::Decomposable {
            witness: None,
            reason: format!("End(M)/rad is a product of {} fields", fixed),
        }
    }
}
