//! Exact fields and dense matrices.

mod echelon;
mod field;
mod mat;

pub use echelon::Echelon;
pub use field::{inv_mod, is_prime, ExtField, Field, FieldSpec, Fp, Rationals};
pub use mat::{Mat, Rref};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinError {
    #[error("characteristic {0} is neither 0 nor a prime below 2^31")]
    BadCharacteristic(u32),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// Runs `$body` with `$f` bound to the concrete field named by a
/// [`FieldSpec`]: [`Rationals`] for characteristic 0, [`Fp`] otherwise.
#[macro_export]
macro_rules! with_field {
    ($spec:expr, |$f:ident| $body:expr) => {{
        let spec: $crate::exactlin::FieldSpec = $spec;
        if spec.characteristic == 0 {
            let $f = $crate::exactlin::Rationals;
            $body
        } else {
            let $f = $crate::exactlin::Fp::new(spec.characteristic).expect("validated characteristic");
            $body
        }
    }};
}
