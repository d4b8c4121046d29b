use serde_json::{json, Value};

use crate::algebra::Alg;
use crate::exactlin::{Field, Mat};

use super::{ModError, Module};

pub fn module_to_json<F: Field>(m: &Module<F>) -> Value {
    json!({
        "algebra": m.alg().fingerprint_hex(),
        "dim": m.dim(),
        "action": m.actions().iter().map(|a| a.to_json()).collect::<Vec<_>>(),
    })
}

/// Reads a module over `alg`. The `algebra` entry, when a fingerprint
/// string, must match `alg`.
pub fn module_from_json<F: Field>(alg: &Alg<F>, v: &Value) -> Result<Module<F>, ModError> {
    let bad = |m: &str| ModError::Shape(m.to_string());
    if let Some(fp) = v.get("algebra").and_then(Value::as_str) {
        if fp != alg.fingerprint_hex() {
            return Err(ModError::AlgebraMismatch);
        }
    }
    let dim = v.get("dim").and_then(Value::as_u64).ok_or_else(|| bad("missing 'dim'"))? as usize;
    let acts = v.get("action").and_then(Value::as_array).ok_or_else(|| bad("missing 'action'"))?;
    let actions = acts
        .iter()
        .map(|a| {
            let m = Mat::from_json(alg.field(), a, dim).map_err(|e| bad(&e.to_string()))?;
            if m.shape() != (dim, dim) {
                return Err(bad("action matrices must be dim x dim"));
            }
            Ok(m)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Module::new(alg, actions)
}
