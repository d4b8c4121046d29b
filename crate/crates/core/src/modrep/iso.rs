use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exactlin::{ExtField, Field, Mat};

use super::{hom::hom_dim, hom_space, Module, Morphism};

pub const DEFAULT_TRIALS: usize = 40;

#[derive(Clone, Debug)]
pub enum IsoVerdict<F: Field> {
    /// Certified by an invertible module map.
    Yes(Morphism<F>),
    /// Certified by an invertible map over a finite extension of the base
    /// field; isomorphism then holds over the base field as well.
    YesOverExtension { degree: usize, witness: Mat<ExtField> },
    /// Exact obstruction.
    No(String),
    /// No invertible combination found among random samples.
    ProbablyNo { trials: usize, field_size: u128 },
}

impl<F: Field> IsoVerdict<F> {
    pub fn is_yes(&self) -> bool {
        matches!(self, IsoVerdict::Yes(_) | IsoVerdict::YesOverExtension { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            IsoVerdict::Yes(_) | IsoVerdict::YesOverExtension { .. } => "yes",
            IsoVerdict::No(_) => "no",
            IsoVerdict::ProbablyNo { .. } => "probably-no",
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        use serde_json::json;
        match self {
            IsoVerdict::Yes(m) => json!({"verdict": "yes", "witness": m.matrix.to_json()}),
            IsoVerdict::YesOverExtension { degree, witness } => {
                json!({"verdict": "yes", "extension_degree": degree, "witness": witness.to_json()})
            }
            IsoVerdict::No(reason) => json!({"verdict": "no", "reason": reason}),
            IsoVerdict::ProbablyNo { trials, field_size } => {
                json!({"verdict": "probably-no", "trials": trials, "field_size": field_size.to_string()})
            }
        }
    }
}

fn certified<F: Field>(m: &Module<F>, n: &Module<F>, matrix: Mat<F>) -> IsoVerdict<F> {
    IsoVerdict::Yes(Morphism::new(m.clone(), n.clone(), matrix).expect("Hom basis elements are module maps"))
}

pub fn is_isomorphic<F: Field>(m: &Module<F>, n: &Module<F>, seed: u64) -> IsoVerdict<F> {
    is_isomorphic_with(m, n, seed, DEFAULT_TRIALS)
}

/// Searches `Hom(M, N)` for an invertible element by evaluating a generic
/// combination at random points, over an extension of the base field when
/// the base field has fewer than `2 dim + 1` elements.
pub fn is_isomorphic_with<F: Field>(m: &Module<F>, n: &Module<F>, seed: u64, trials: usize) -> IsoVerdict<F> {
    if !m.same_algebra(n) {
        return IsoVerdict::No("modules over different algebras".into());
    }
    if m.dim() != n.dim() {
        return IsoVerdict::No(format!("dimensions {} and {} differ", m.dim(), n.dim()));
    }
    if m.dim_vector() != n.dim_vector() {
        return IsoVerdict::No("dimension vectors differ".into());
    }
    let f = m.field();
    if m.dim() == 0 {
        return certified(m, n, Mat::zeros(f, 0, 0));
    }
    if m.top_vector() != n.top_vector() {
        return IsoVerdict::No("tops differ".into());
    }
    if m.socle_vector() != n.socle_vector() {
        return IsoVerdict::No("socles differ".into());
    }
    let h = hom_space(m, n);
    if h.dim() == 0 {
        return IsoVerdict::No("Hom(M, N) = 0".into());
    }
    if hom_dim(m, m) != h.dim() {
        return IsoVerdict::No("dim Hom(M, N) differs from dim End(M)".into());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dim = m.dim() as u128;
    let bound = 2 * dim + 1;
    let big_enough = f.order().map_or(true, |q| q >= bound);
    // a single basis map is often already invertible
    for b in h.basis() {
        if b.is_invertible() {
            return certified(m, n, b.clone());
        }
    }
    for _ in 0..trials {
        let coeffs: Vec<F::Elem> = (0..h.dim()).map(|_| f.random(&mut rng, bound as u64)).collect();
        let c = h.combine(f, &coeffs);
        if c.is_invertible() {
            return certified(m, n, c);
        }
    }
    if big_enough {
        return IsoVerdict::ProbablyNo { trials, field_size: f.order().unwrap_or(u128::MAX) };
    }
    let p = f.characteristic();
    let ext = ExtField::with_min_order(p, bound).expect("prime characteristic");
    let basis: Vec<Mat<ExtField>> = h
        .basis()
        .iter()
        .map(|b| b.map_field(&ext, |x| ext.embed(f.as_residue(x).expect("prime field element"))))
        .collect();
    for _ in 0..trials {
        let mut c = Mat::zeros(&ext, m.dim(), m.dim());
        for b in &basis {
            c.add_scaled(&ext.random(&mut rng, 0), b);
        }
        if c.is_invertible() {
            return IsoVerdict::YesOverExtension { degree: ext.degree(), witness: c };
        }
    }
    IsoVerdict::ProbablyNo { trials, field_size: ext.order().unwrap() }
}
