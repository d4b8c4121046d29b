use std::fs;
use std::path::Path;

use domdimlab::algebra::Alg;
use domdimlab::corpus::{fixture, Fixture};
use domdimlab::exactlin::{Field, FieldSpec};
use domdimlab::homology::{sample_modules, syzygy};
use domdimlab::modrep::{module_from_json, Module};
use domdimlab::presentation::{
    compile, nakayama, parse_field_spec, parse_quiver_dsl, read_algebra_json, KupischSeries, Presentation, Shape,
    DEFAULT_LENGTH_CAP,
};
use serde_json::Value;

use crate::CliError;

/// Where an algebra comes from.
pub enum AlgSource {
    Fixture(Fixture),
    Kupisch(KupischSeries),
    Quiver(Presentation),
    /// Algebra JSON text with the characteristic it declares.
    Json(String, FieldSpec),
}

/// Reads `corpus:<name>`, `kupisch:<series>[:linear|cyclic]`, a `.quiver`
/// file, or an algebra or fixture JSON file.
pub fn parse_source(s: &str) -> Result<AlgSource, CliError> {
    if let Some(name) = s.strip_prefix("corpus:") {
        return Ok(AlgSource::Fixture(fixture(name).map_err(CliError::input)?.clone()));
    }
    if let Some(rest) = s.strip_prefix("kupisch:") {
        let (list, shape) = match rest.split_once(':') {
            Some((l, sh)) => (l, sh.parse::<Shape>().map_err(CliError::input)?),
            None => (rest, Shape::Linear),
        };
        return Ok(AlgSource::Kupisch(KupischSeries::parse(list, shape).map_err(CliError::input)?));
    }
    let path = Path::new(s);
    let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {}", s, e)))?;
    if path.extension().and_then(|e| e.to_str()) == Some("quiver") {
        return Ok(AlgSource::Quiver(parse_quiver_dsl(&text).map_err(CliError::input)?));
    }
    let v: Value = serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {}", s, e)))?;
    if v.get("recipe").is_some() {
        let fx: Fixture = serde_json::from_value(v).map_err(|e| CliError::Input(format!("{}: bad fixture: {}", s, e)))?;
        return Ok(AlgSource::Fixture(fx));
    }
    let spec = parse_field_spec(&text).map_err(CliError::input)?;
    Ok(AlgSource::Json(text, spec))
}

/// The field to compute over: the requested one, the one an algebra file
/// declares, or `F_101`.
pub fn field_for(src: &AlgSource, requested: Option<u32>) -> Result<FieldSpec, CliError> {
    match (src, requested) {
        (AlgSource::Json(_, spec), Some(c)) if spec.characteristic != c => Err(CliError::Input(format!(
            "the algebra file is over characteristic {}, not {}",
            spec.characteristic, c
        ))),
        (AlgSource::Json(_, spec), _) => Ok(*spec),
        (_, Some(c)) => FieldSpec::new(c).map_err(CliError::input),
        (_, None) => Ok(FieldSpec::new(FieldSpec::DEFAULT_PRIME).expect("default prime")),
    }
}

pub fn build<F: Field>(src: &AlgSource, f: &F) -> Result<Alg<F>, CliError> {
    match src {
        AlgSource::Fixture(fx) => fx.build(f).map_err(CliError::input),
        AlgSource::Kupisch(k) => nakayama(k, f).map_err(CliError::input),
        AlgSource::Quiver(p) => compile(p, f, DEFAULT_LENGTH_CAP).map_err(CliError::input),
        AlgSource::Json(text, _) => read_algebra_json(text, f).map_err(CliError::input),
    }
}

fn vertex<F: Field>(a: &Alg<F>, s: &str) -> Result<usize, CliError> {
    if let Some(v) = a.vertex_index(s) {
        return Ok(v);
    }
    match s.parse::<usize>() {
        Ok(v) if v < a.num_vertices() => Ok(v),
        _ => Err(CliError::Input(format!("no vertex '{}'", s))),
    }
}

/// Module specs: `regular`, `coregular`, `simple:<v>`, `projective:<v>`,
/// `injective:<v>`, `radical:<v>`, `sample:<i>`, `syzygy:<k>:<spec>`, or a
/// module JSON file.
pub fn parse_module<F: Field>(a: &Alg<F>, spec: &str) -> Result<Module<F>, CliError> {
    let (head, rest) = spec.split_once(':').unwrap_or((spec, ""));
    match head {
        "regular" => Ok(Module::regular(a)),
        "coregular" => Ok(Module::coregular(a)),
        "simple" => Ok(Module::simple(a, vertex(a, rest)?)),
        "projective" => Ok(Module::projective(a, vertex(a, rest)?)),
        "injective" => Ok(Module::injective(a, vertex(a, rest)?)),
        "radical" => Ok(Module::projective(a, vertex(a, rest)?).rad_module().module),
        "sample" => {
            let i: usize = rest.parse().map_err(|_| CliError::Input(format!("bad sample index '{}'", rest)))?;
            sample_modules(a, i + 1)
                .into_iter()
                .nth(i)
                .ok_or_else(|| CliError::Input(format!("only fewer than {} sample modules exist", i + 1)))
        }
        "syzygy" => {
            let (k, inner) =
                rest.split_once(':').ok_or_else(|| CliError::Input("expected syzygy:<k>:<module spec>".into()))?;
            let k: usize = k.parse().map_err(|_| CliError::Input(format!("bad syzygy degree '{}'", k)))?;
            Ok(syzygy(&parse_module(a, inner)?, k))
        }
        _ => {
            let text = fs::read_to_string(spec).map_err(|e| CliError::Input(format!("module '{}': {}", spec, e)))?;
            let v: Value = serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {}", spec, e)))?;
            module_from_json(a, &v).map_err(CliError::input)
        }
    }
}
