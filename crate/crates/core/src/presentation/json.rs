use serde_json::{json, Value};

use crate::algebra::{Alg, Algebra, AlgebraError, RawAlgebra};
use crate::exactlin::{Field, FieldSpec, Mat};

use super::PresentationError;

fn schema(msg: impl Into<String>) -> PresentationError {
    PresentationError::Schema(msg.into())
}

fn get<'a>(v: &'a Value, key: &str) -> Result<&'a Value, PresentationError> {
    v.get(key).ok_or_else(|| schema(format!("missing '{}'", key)))
}

/// Reads only the `field` entry of an algebra document.
pub fn parse_field_spec(text: &str) -> Result<FieldSpec, PresentationError> {
    let v: Value = serde_json::from_str(text).map_err(|e| schema(e.to_string()))?;
    field_of(&v)
}

fn field_of(v: &Value) -> Result<FieldSpec, PresentationError> {
    let spec: FieldSpec =
        serde_json::from_value(get(v, "field")?.clone()).map_err(|e| schema(format!("bad 'field': {}", e)))?;
    spec.check().map_err(|e| schema(e.to_string()))?;
    Ok(spec)
}

pub fn read_algebra_json<F: Field>(text: &str, field: &F) -> Result<Alg<F>, PresentationError> {
    let v: Value = serde_json::from_str(text).map_err(|e| schema(e.to_string()))?;
    algebra_from_value(&v, field)
}

pub(crate) fn algebra_from_value<F: Field>(v: &Value, field: &F) -> Result<Alg<F>, PresentationError> {
    let spec = field_of(v)?;
    let ours = FieldSpec { characteristic: field.characteristic() };
    if spec != ours {
        return Err(AlgebraError::FieldMismatch(spec, ours).into());
    }
    let dim = get(v, "dim")?.as_u64().ok_or_else(|| schema("'dim' must be a count"))? as usize;
    let labels: Vec<String> = get(v, "basis")?
        .as_array()
        .ok_or_else(|| schema("'basis' must be an array"))?
        .iter()
        .map(|x| x.as_str().map(str::to_string).ok_or_else(|| schema("basis labels must be strings")))
        .collect::<Result<_, _>>()?;
    if labels.len() != dim {
        return Err(schema(format!("'basis' has {} labels but dim is {}", labels.len(), dim)));
    }
    let vector = |x: &Value, what: &str| -> Result<Vec<F::Elem>, PresentationError> {
        let arr = x.as_array().ok_or_else(|| schema(format!("'{}' must be an array", what)))?;
        if arr.len() != dim {
            return Err(schema(format!("'{}' must have length {}", what, dim)));
        }
        arr.iter().map(|e| field.elem_from_json(e).map_err(|e| schema(e.to_string()))).collect()
    };
    let one = vector(get(v, "one")?, "one")?;
    let mut mul = vec![Vec::new(); dim * dim];
    for entry in get(v, "mul")?.as_array().ok_or_else(|| schema("'mul' must be an array"))? {
        let e = entry.as_array().filter(|e| e.len() == 3).ok_or_else(|| schema("'mul' entries are [i, j, [[k, c], ...]]"))?;
        let i = e[0].as_u64().ok_or_else(|| schema("bad index in 'mul'"))? as usize;
        let j = e[1].as_u64().ok_or_else(|| schema("bad index in 'mul'"))? as usize;
        if i >= dim || j >= dim {
            return Err(schema("index out of range in 'mul'"));
        }
        for kc in e[2].as_array().ok_or_else(|| schema("'mul' coordinates must be an array"))? {
            let kc = kc.as_array().filter(|x| x.len() == 2).ok_or_else(|| schema("'mul' coordinates are [k, c] pairs"))?;
            let k = kc[0].as_u64().ok_or_else(|| schema("bad index in 'mul'"))? as usize;
            if k >= dim {
                return Err(schema("index out of range in 'mul'"));
            }
            let c = field.elem_from_json(&kc[1]).map_err(|e| schema(e.to_string()))?;
            mul[i * dim + j].push((k, c));
        }
    }
    let idempotents: Vec<Vec<F::Elem>> = get(v, "idempotents")?
        .as_array()
        .ok_or_else(|| schema("'idempotents' must be an array"))?
        .iter()
        .map(|x| vector(x, "idempotents"))
        .collect::<Result<_, _>>()?;
    let rad_basis = match v.get("rad_basis") {
        None | Some(Value::Null) => None,
        Some(r) => Some(Mat::from_json(field, r, dim).map_err(|e| schema(e.to_string()))?),
    };
    if let Some(r) = &rad_basis {
        if r.rows() > 0 && r.cols() != dim {
            return Err(schema(format!("'rad_basis' rows must have length {}", dim)));
        }
    }
    let vertex_names = match v.get("vertices") {
        None => None,
        Some(x) => Some(
            x.as_array()
                .ok_or_else(|| schema("'vertices' must be an array"))?
                .iter()
                .map(|s| s.as_str().map(str::to_string).ok_or_else(|| schema("vertex names must be strings")))
                .collect::<Result<Vec<_>, _>>()?,
        ),
    };
    Ok(Algebra::from_raw(RawAlgebra { field: field.clone(), labels, mul, one, idempotents, rad_basis, vertex_names })?)
}

pub fn algebra_to_json<F: Field>(a: &Algebra<F>) -> Value {
    let f = a.field();
    let d = a.dim();
    let vec_json = |v: &[F::Elem]| Value::Array(v.iter().map(|x| f.elem_to_json(x)).collect());
    let mut mul = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let p = a.mul_basis(i, j);
            if !p.is_empty() {
                let coords: Vec<Value> = p.iter().map(|(k, c)| json!([k, f.elem_to_json(c)])).collect();
                mul.push(json!([i, j, coords]));
            }
        }
    }
    json!({
        "field": a.spec(),
        "dim": d,
        "basis": a.labels(),
        "vertices": a.vertex_names(),
        "one": vec_json(&a.one()),
        "mul": mul,
        "idempotents": a.idems().iter().map(|&e| vec_json(&a.basis_vec(e))).collect::<Vec<_>>(),
        "rad_basis": a.rad_basis().to_json(),
    })
}

pub fn write_algebra_json<F: Field>(a: &Algebra<F>) -> String {
    serde_json::to_string_pretty(&algebra_to_json(a)).expect("serializable")
}
