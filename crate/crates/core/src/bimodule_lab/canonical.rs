use serde_json::{json, Value};

use crate::algebra::Alg;
use crate::exactlin::{Field, Mat};
use crate::modrep::bimodule::{
    bimodule_hom, coregular_bimodule, regular_bimodule, restrict_left, swap_from_opposite, tensor_bimodules,
};
use crate::modrep::{a_dual, is_isomorphic, IsoVerdict, Module};

use super::LabError;

/// `Hom_{A^e}(X, A^e)` as a bimodule.
pub fn a_e_dual<F: Field>(a: &Alg<F>, x: &Module<F>) -> Result<Module<F>, LabError> {
    if !x.alg().same_as(&a.enveloping()) {
        return Err(crate::modrep::ModError::AlgebraMismatch.into());
    }
    Ok(swap_from_opposite(a, &a_dual(x).module)?)
}

/// `V = Hom_A(D(A), A)` with its certified isomorphism to `Hom_{A^e}(A, A^e)`.
#[derive(Clone, Debug)]
pub struct CanonicalBimodule<F: Field> {
    pub v: Module<F>,
    pub a_e_dual: Module<F>,
    pub witness: IsoVerdict<F>,
}

pub fn canonical_bimodule<F: Field>(a: &Alg<F>, seed: u64) -> Result<CanonicalBimodule<F>, LabError> {
    let v = bimodule_hom(a, &coregular_bimodule(a), &regular_bimodule(a))?;
    let dual = a_e_dual(a, &regular_bimodule(a))?;
    let witness = is_isomorphic(&v, &dual, seed);
    if !witness.is_yes() {
        return Err(LabError::CertificationFailed(format!(
            "Hom_A(D(A), A) vs Hom_A^e(A, A^e): {}",
            witness.label()
        )));
    }
    Ok(CanonicalBimodule { v, a_e_dual: dual, witness })
}

/// Two bimodules that should be isomorphic, with the verdict.
#[derive(Clone, Debug)]
pub struct IsoCheck<F: Field> {
    pub name: String,
    pub lhs: Module<F>,
    pub rhs: Module<F>,
    pub verdict: IsoVerdict<F>,
}

impl<F: Field> IsoCheck<F> {
    fn new(name: &str, lhs: Module<F>, rhs: Module<F>, seed: u64) -> Self {
        let verdict = is_isomorphic(&lhs, &rhs, seed);
        IsoCheck { name: name.to_string(), lhs, rhs, verdict }
    }

    pub fn holds(&self) -> bool {
        self.verdict.is_yes()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "check": self.name,
            "lhs_dim": self.lhs.dim(),
            "rhs_dim": self.rhs.dim(),
            "iso": self.verdict.to_json(),
        })
    }
}

/// `Hom_K(D(A), A)` with `(x f y)(φ) = x f(y φ)`, where `(y φ)(a) = φ(a y)`.
pub fn hom_k_coregular_regular<F: Field>(a: &Alg<F>) -> Module<F> {
    let d = a.dim();
    let left = a.left_mult();
    let right: Vec<Mat<F>> = (0..d).map(|y| a.right_mult(y)).collect();
    // f is stored row-major as a d x d matrix; x f y = L_x f R_y^T, so the
    // action on the flattened matrix is L_x ⊗ R_y
    let actions = (0..d * d).map(|ij| left[ij / d].kron(&right[ij % d])).collect();
    Module::from_trusted(&a.enveloping(), actions)
}

/// `A^e ≅ Hom_K(D(A), A)` as bimodules.
pub fn iso_check_1<F: Field>(a: &Alg<F>, seed: u64) -> IsoCheck<F> {
    IsoCheck::new("A^e = Hom_K(D(A), A)", Module::regular(&a.enveloping()), hom_k_coregular_regular(a), seed)
}

/// `Hom_{A^e}(X, A^e) ≅ Hom_A(D(A) ⊗_A X, A)` as bimodules.
pub fn iso_check_2<F: Field>(a: &Alg<F>, x: &Module<F>, seed: u64) -> Result<IsoCheck<F>, LabError> {
    let lhs = a_e_dual(a, x)?;
    let t = tensor_bimodules(a, &coregular_bimodule(a), x)?;
    let rhs = bimodule_hom(a, &t, &regular_bimodule(a))?;
    Ok(IsoCheck::new("Hom_A^e(X, A^e) = Hom_A(D(A) (x) X, A)", lhs, rhs, seed))
}

/// `Hom_A(D(A), Hom_A(V, A))` as a bimodule.
pub fn fky_bimodule<F: Field>(a: &Alg<F>, v: &Module<F>) -> Result<Module<F>, LabError> {
    let inner = bimodule_hom(a, v, &regular_bimodule(a))?;
    Ok(bimodule_hom(a, &coregular_bimodule(a), &inner)?)
}

/// `Hom_{A^e}(Hom_{A^e}(A, A^e), A^e) ≅ Hom_A(D(A), Hom_A(V, A))`.
pub fn iso_check_3<F: Field>(a: &Alg<F>, seed: u64) -> Result<IsoCheck<F>, LabError> {
    let lhs = a_e_dual(a, &a_e_dual(a, &regular_bimodule(a))?)?;
    let v = bimodule_hom(a, &coregular_bimodule(a), &regular_bimodule(a))?;
    let rhs = fky_bimodule(a, &v)?;
    Ok(IsoCheck::new("A** = Hom_A(D(A), Hom_A(V, A))", lhs, rhs, seed))
}

/// Underlying left module of `D(A) ⊗_A V`.
pub(crate) fn coregular_tensor_v<F: Field>(a: &Alg<F>, v: &Module<F>) -> Result<Module<F>, LabError> {
    let t = tensor_bimodules(a, &coregular_bimodule(a), v)?;
    Ok(restrict_left(a, &t)?)
}
