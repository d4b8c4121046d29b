//! Built-in example algebras with frozen expected invariants.
//!
//! The fixtures live in `fixtures/corpus.json`. Every expected value names
//! where it comes from: a published worked example, the construction
//! itself, or an independent oracle described in words.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::Alg;
use crate::bimodule_lab::{check_main_theorem, gendo_symmetric_report, LabError};
use crate::exactlin::{Field, FieldSpec};
use crate::homology::{domdim, ext_dims, gldim, n_torsionfree, pd, reflexive, syzygy, DimensionValue};
use crate::modrep::bimodule::{coregular_bimodule, regular_bimodule};
use crate::modrep::{a_dual, is_isomorphic, Module};
use crate::presentation::{compile, nakayama, parse_quiver_dsl, KupischSeries, PresentationError, DEFAULT_LENGTH_CAP};
use crate::with_field;

const CORPUS_JSON: &str = include_str!("../../fixtures/corpus.json");

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CorpusError {
    #[error("no fixture named '{0}'")]
    UnknownFixture(String),
    #[error("unknown invariant '{0}'")]
    UnknownInvariant(String),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Lab(#[from] LabError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Recipe {
    /// Quiver DSL text.
    Quiver(String),
    Kupisch { series: Vec<usize>, shape: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    WorkedExample,
    Definition,
    Oracle,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Expected {
    /// An integer, a boolean, or `"unbounded"` for dimensions that exceed
    /// every cap.
    pub value: Value,
    pub source: Source,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Fixture {
    pub name: String,
    pub description: String,
    pub recipe: Recipe,
    /// Characteristics the fixture is verified over.
    pub fields: Vec<u32>,
    pub expected: BTreeMap<String, Expected>,
}

#[derive(Debug, Deserialize)]
struct CorpusFile {
    #[allow(dead_code)]
    schema: u32,
    #[allow(dead_code)]
    sources: BTreeMap<String, String>,
    fixtures: Vec<Fixture>,
}

impl Fixture {
    pub fn build<F: Field>(&self, field: &F) -> Result<Alg<F>, PresentationError> {
        match &self.recipe {
            Recipe::Quiver(text) => compile(&parse_quiver_dsl(text)?, field, DEFAULT_LENGTH_CAP),
            Recipe::Kupisch { series, shape } => nakayama(&KupischSeries::new(series.clone(), shape.parse()?)?, field),
        }
    }

    /// Problems with the metadata itself: oracle entries without a
    /// description, unknown invariant names, unusable characteristics.
    pub fn metadata_problems(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (k, e) in &self.expected {
            if !INVARIANTS.contains(&k.as_str()) {
                out.push(format!("{}: unknown invariant", k));
            }
            if e.source == Source::Oracle && e.oracle.as_deref().map_or(true, |s| s.trim().is_empty()) {
                out.push(format!("{}: oracle source without a description", k));
            }
        }
        if self.fields.is_empty() {
            out.push("no fields listed".into());
        }
        for &c in &self.fields {
            if FieldSpec::new(c).is_err() {
                out.push(format!("characteristic {} is not usable", c));
            }
        }
        out
    }
}

/// All fixtures, in file order.
pub fn corpus_list() -> &'static [Fixture] {
    static CORPUS: OnceLock<Vec<Fixture>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let file: CorpusFile = serde_json::from_str(CORPUS_JSON).expect("embedded fixture file is well-formed");
        file.fixtures
    })
}

pub fn fixture(name: &str) -> Result<&'static Fixture, CorpusError> {
    corpus_list().iter().find(|f| f.name == name).ok_or_else(|| CorpusError::UnknownFixture(name.to_string()))
}

/// Names accepted as keys of `expected`.
pub const INVARIANTS: &[&str] = &[
    "dim",
    "vertices",
    "center_dim",
    "hh0",
    "gldim",
    "domdim",
    "selfinjective",
    "gendo_symmetric",
    "torsionfree_degree",
    "main_theorem_agreement",
    "pd_bimodule_regular",
    "pd_bimodule_coregular",
    "simple_second_syzygy_dim",
    "simple_second_syzygy_dual_dim",
    "simple_second_syzygy_double_dual_dim",
    "simple_second_syzygy_reflexive",
];

/// Exact values as integers, lower bounds as `{"at_least": k}`.
pub fn dimension_json(d: DimensionValue) -> Value {
    match d {
        DimensionValue::Exact(n) => json!(n),
        DimensionValue::AtLeast(k) => json!({ "at_least": k }),
    }
}

/// Whether a computed value meets an expected one; `"unbounded"` accepts
/// any lower bound.
pub fn value_matches(expected: &Value, actual: &Value) -> bool {
    if expected == "unbounded" {
        actual.get("at_least").is_some()
    } else {
        expected == actual
    }
}

/// Largest `n <= cap` such that the regular bimodule is `n`-torsionfree.
pub fn torsionfree_degree<F: Field>(a: &Alg<F>, cap: usize) -> DimensionValue {
    let reg = regular_bimodule(a);
    for n in 1..=cap {
        if !n_torsionfree(&reg, n) {
            return DimensionValue::Exact(n - 1);
        }
    }
    DimensionValue::AtLeast(cap)
}

/// Range `1..=n_max` checked by the main-theorem comparison: one past the
/// dominant dimension, at most `cap`.
pub fn theorem_range(dd: DimensionValue, cap: usize) -> usize {
    match dd {
        DimensionValue::Exact(d) => (d + 1).min(cap).max(1),
        DimensionValue::AtLeast(_) => cap.max(1),
    }
}

pub fn compute_invariant<F: Field>(a: &Alg<F>, key: &str, cap: usize, seed: u64) -> Result<Value, CorpusError> {
    let second_syzygy = || syzygy(&Module::simple(a, 0), 2);
    Ok(match key {
        "dim" => json!(a.dim()),
        "vertices" => json!(a.num_vertices()),
        "center_dim" => json!(a.center_dim()),
        "hh0" => {
            let reg = regular_bimodule(a);
            json!(ext_dims(&reg, &reg, 0)[0])
        }
        "gldim" => dimension_json(gldim(a, cap)),
        "domdim" => dimension_json(domdim(a, cap)),
        "selfinjective" => json!(is_isomorphic(&Module::regular(a), &Module::coregular(a), seed).is_yes()),
        "gendo_symmetric" => {
            let r = gendo_symmetric_report(a, cap, seed)?;
            if !r.agreement {
                return Err(LabError::Disagreement(format!("gendo-symmetry routes disagree: {}", r.to_json())).into());
            }
            json!(r.by_v)
        }
        "torsionfree_degree" => dimension_json(torsionfree_degree(a, cap)),
        "main_theorem_agreement" => {
            let n_max = theorem_range(domdim(a, cap), cap);
            json!(check_main_theorem(a, n_max, cap, seed)?.agreement)
        }
        "pd_bimodule_regular" => dimension_json(pd(&regular_bimodule(a), cap)),
        "pd_bimodule_coregular" => dimension_json(pd(&coregular_bimodule(a), cap)),
        "simple_second_syzygy_dim" => json!(second_syzygy().dim()),
        "simple_second_syzygy_dual_dim" => json!(a_dual(&second_syzygy()).module.dim()),
        "simple_second_syzygy_double_dual_dim" => json!(a_dual(&a_dual(&second_syzygy()).module).module.dim()),
        "simple_second_syzygy_reflexive" => json!(reflexive(&second_syzygy())),
        other => return Err(CorpusError::UnknownInvariant(other.to_string())),
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct CheckLine {
    pub invariant: String,
    pub expected: Value,
    pub source: Source,
    pub actual: Result<Value, String>,
}

impl CheckLine {
    pub fn passed(&self) -> bool {
        matches!(&self.actual, Ok(v) if value_matches(&self.expected, v))
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "invariant": self.invariant,
            "expected": self.expected,
            "source": self.source,
            "passed": self.passed(),
        });
        match &self.actual {
            Ok(a) => v["actual"] = a.clone(),
            Err(e) => v["error"] = json!(e),
        }
        v
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FieldRun {
    pub characteristic: u32,
    pub build_error: Option<String>,
    pub checks: Vec<CheckLine>,
}

impl FieldRun {
    pub fn passed(&self) -> bool {
        self.build_error.is_none() && self.checks.iter().all(|c| c.passed())
    }

    pub fn failures(&self) -> Vec<&CheckLine> {
        self.checks.iter().filter(|c| !c.passed()).collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerifyReport {
    pub name: String,
    pub cap: usize,
    pub seed: u64,
    pub metadata_problems: Vec<String>,
    pub runs: Vec<FieldRun>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.metadata_problems.is_empty() && self.runs.iter().all(|r| r.passed())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "fixture": self.name,
            "cap": self.cap,
            "seed": self.seed,
            "passed": self.passed(),
            "metadata_problems": self.metadata_problems,
            "runs": self.runs.iter().map(|r| json!({
                "char": r.characteristic,
                "passed": r.passed(),
                "build_error": r.build_error,
                "checks": r.checks.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })
    }
}

fn run_over<F: Field>(fx: &Fixture, field: &F, cap: usize, seed: u64) -> FieldRun {
    let characteristic = field.characteristic();
    let a = match fx.build(field) {
        Ok(a) => a,
        Err(e) => return FieldRun { characteristic, build_error: Some(e.to_string()), checks: Vec::new() },
    };
    let checks = fx
        .expected
        .iter()
        .map(|(k, e)| CheckLine {
            invariant: k.clone(),
            expected: e.value.clone(),
            source: e.source,
            actual: compute_invariant(&a, k, cap, seed).map_err(|err| err.to_string()),
        })
        .collect();
    FieldRun { characteristic, build_error: None, checks }
}

/// Rebuilds the fixture and recomputes every expected invariant, over the
/// given characteristics or, by default, all those the fixture lists.
pub fn corpus_verify_with(name: &str, cap: usize, seed: u64, chars: Option<&[u32]>) -> Result<VerifyReport, CorpusError> {
    Ok(verify_fixture(fixture(name)?, cap, seed, chars))
}

/// Same as [`corpus_verify_with`] for a fixture that need not be built in.
pub fn verify_fixture(fx: &Fixture, cap: usize, seed: u64, chars: Option<&[u32]>) -> VerifyReport {
    let chars = chars.unwrap_or(&fx.fields);
    let runs = chars
        .iter()
        .map(|&c| match FieldSpec::new(c) {
            Ok(spec) => with_field!(spec, |f| run_over(fx, &f, cap, seed)),
            Err(e) => FieldRun { characteristic: c, build_error: Some(e.to_string()), checks: Vec::new() },
        })
        .collect();
    VerifyReport { name: fx.name.clone(), cap, seed, metadata_problems: fx.metadata_problems(), runs }
}

pub const DEFAULT_SEED: u64 = 1;

pub fn corpus_verify(name: &str, cap: usize) -> Result<VerifyReport, CorpusError> {
    corpus_verify_with(name, cap, DEFAULT_SEED, None)
}

#[cfg(test)]
mod tests;
