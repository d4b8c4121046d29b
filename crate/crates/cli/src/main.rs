//! `domdimlab`: dominant dimensions, bimodule checks and conjecture probes
//! for finite-dimensional algebras given by quivers, Kupisch series or
//! structure constants.
//!
//! Exit codes: 0 on success, 1 when independent computations disagree or a
//! fixture check fails, 2 on input errors.

mod commands;
mod input;
mod sweep;

use std::fmt;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use domdimlab::corpus::{corpus_list, fixture, verify_fixture, Fixture, DEFAULT_SEED};
use domdimlab::exactlin::FieldSpec;
use domdimlab::homology::DEFAULT_CAP;
use domdimlab::presentation::{nakayama, write_algebra_json, KupischSeries, Shape};
use domdimlab::with_field;
use serde_json::{json, Value};

use input::{build, field_for, parse_source, AlgSource};

#[derive(Parser)]
#[command(name = "domdimlab", version, about = "Dominant dimension and bimodule computations for finite-dimensional algebras")]
struct Cli {
    /// Field characteristic: a prime, or 0 for the rationals [default: 101]
    #[arg(long = "char", global = true)]
    characteristic: Option<u32>,
    /// Bound for every unbounded search
    #[arg(long, global = true, env = "DOMDIMLAB_CAP", default_value_t = DEFAULT_CAP as u64, value_parser = clap::value_parser!(u64).range(1..))]
    cap: u64,
    /// Seed for the randomized isomorphism and decomposition searches
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Coresolution,
    Torsionfree,
    Syzygy,
    Formula,
    All,
}

impl Method {
    fn name(&self) -> &'static str {
        match self {
            Method::Coresolution => "coresolution",
            Method::Torsionfree => "torsionfree",
            Method::Syzygy => "syzygy",
            Method::Formula => "formula",
            Method::All => "all",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ShapeArg {
    Linear,
    Cyclic,
}

/// Algebras are given as `corpus:<name>`, `kupisch:<series>[:linear|cyclic]`,
/// a `.quiver` file, or an algebra or fixture JSON file.
#[derive(Subcommand)]
enum Command {
    /// Check the algebra axioms and print basic data
    Validate { alg: String },
    /// Dimensions, global and dominant dimension, selfinjectivity, gendo-symmetry
    Invariants { alg: String },
    /// Dominant dimension by one or all independent routes
    Domdim {
        alg: String,
        #[arg(long, value_enum, default_value_t = Method::Coresolution)]
        method: Method,
    },
    /// Compare domdim >= n, n-torsionfreeness of A over A^e and the syzygy condition
    CheckTheorem {
        alg: String,
        /// Largest n checked [default: one past the dominant dimension, at most the cap]
        #[arg(long)]
        n_max: Option<usize>,
    },
    /// Hochschild (co)homology directly and through the canonical bimodule
    Hochschild {
        alg: String,
        #[arg(long, default_value_t = 4)]
        l_max: usize,
    },
    /// Bounded probes around the Nakayama and Tachikawa conjectures
    ProbeConjectures { alg: String },
    /// Build a path of the mho-quiver ending at a module
    MhoPath {
        alg: String,
        /// regular, coregular, simple:<v>, projective:<v>, injective:<v>,
        /// radical:<v>, sample:<i>, syzygy:<k>:<spec> or a module JSON file
        #[arg(long)]
        module: String,
        #[arg(long, default_value_t = 1)]
        length: usize,
    },
    /// Build a Nakayama algebra from its Kupisch series
    Nakayama {
        #[arg(long)]
        kupisch: String,
        #[arg(long, value_enum, default_value_t = ShapeArg::Linear)]
        shape: ShapeArg,
        /// Write the algebra JSON here instead of printing it
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Run the conjecture probes over a bounded family of Nakayama algebras
    SweepNakayama {
        #[arg(long, default_value_t = 3)]
        max_entry: usize,
        #[arg(long, default_value_t = 3)]
        max_vertices: usize,
        /// Full per-algebra report
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Built-in fixtures
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Subcommand)]
enum CorpusAction {
    List,
    /// Recompute the expected invariants of one fixture (a name or a fixture
    /// JSON file) or of all built-in ones
    Verify { name: Option<String> },
}

pub struct RunConfig {
    pub cap: usize,
    pub seed: u64,
}

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Mismatch(String),
}

impl CliError {
    pub fn input(e: impl fmt::Display) -> Self {
        CliError::Input(e.to_string())
    }
}

/// A command's result; `ok` is false when computations disagree.
pub struct Outcome {
    pub json: Value,
    pub text: Option<String>,
    pub ok: bool,
}

impl Outcome {
    pub fn new(json: Value, ok: bool) -> Self {
        Outcome { json, text: None, ok }
    }

    pub fn ok(json: Value) -> Self {
        Outcome::new(json, true)
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Object(o) if o.len() == 1 && o.contains_key("at_least") => format!(">= {}", o["at_least"]),
        Value::Object(o) if o.get("kind").and_then(Value::as_str) == Some("at_least") => format!(">= {}", o["value"]),
        Value::Object(o) if o.get("kind").and_then(Value::as_str) == Some("exact") => o["value"].to_string(),
        other => other.to_string(),
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut String) {
    let nested = match v {
        Value::Object(o) => !(o.contains_key("at_least") && o.len() == 1) && !o.contains_key("kind"),
        Value::Array(a) => a.iter().any(|x| x.is_object()),
        _ => false,
    };
    if !nested {
        out.push_str(&format!("{}: {}\n", prefix, scalar(v)));
        return;
    }
    let join = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{}.{}", prefix, k) };
    match v {
        Value::Object(o) => o.iter().for_each(|(k, x)| flatten(&join(k), x, out)),
        Value::Array(a) => a.iter().enumerate().for_each(|(i, x)| flatten(&join(&i.to_string()), x, out)),
        _ => unreachable!(),
    }
}

fn render(outcome: &Outcome, format: Format) -> String {
    match (format, &outcome.text) {
        (Format::Json, _) => serde_json::to_string_pretty(&outcome.json).expect("values serialize") + "\n",
        (Format::Text, Some(t)) => t.clone(),
        (Format::Text, None) => {
            let mut s = String::new();
            flatten("", &outcome.json, &mut s);
            s
        }
    }
}

fn write_file(path: &PathBuf, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Input(format!("{}: {}", path.display(), e)))
}

fn on_algebra(cli: &Cli, alg: &str, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let src = parse_source(alg)?;
    let spec = field_for(&src, cli.characteristic)?;
    with_field!(spec, |f| {
        let a = build(&src, &f)?;
        match &cli.command {
            Command::Validate { .. } => commands::validate(&a),
            Command::Invariants { .. } => commands::invariants(&a, cfg),
            Command::Domdim { method, .. } => commands::domdim_methods(&a, *method, cfg),
            Command::CheckTheorem { n_max, .. } => commands::check_theorem(&a, *n_max, cfg),
            Command::Hochschild { l_max, .. } => commands::hochschild(&a, *l_max, cfg),
            Command::ProbeConjectures { .. } => commands::probe_conjectures(&a, cfg),
            Command::MhoPath { module, length, .. } => commands::mho_path_cmd(&a, module, *length),
            _ => unreachable!("commands without an algebra argument"),
        }
    })
}

fn requested_field(cli: &Cli) -> Result<FieldSpec, CliError> {
    FieldSpec::new(cli.characteristic.unwrap_or(FieldSpec::DEFAULT_PRIME)).map_err(CliError::input)
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let cfg = RunConfig { cap: cli.cap as usize, seed: cli.seed };
    match &cli.command {
        Command::Validate { alg }
        | Command::Invariants { alg }
        | Command::Domdim { alg, .. }
        | Command::CheckTheorem { alg, .. }
        | Command::Hochschild { alg, .. }
        | Command::ProbeConjectures { alg }
        | Command::MhoPath { alg, .. } => on_algebra(cli, alg, &cfg),
        Command::Nakayama { kupisch, shape, emit } => {
            let shape = match shape {
                ShapeArg::Linear => Shape::Linear,
                ShapeArg::Cyclic => Shape::Cyclic,
            };
            let k = KupischSeries::parse(kupisch, shape).map_err(CliError::input)?;
            let spec = requested_field(cli)?;
            let (doc, dim) = with_field!(spec, |f| {
                let a = nakayama(&k, &f).map_err(CliError::input)?;
                (write_algebra_json(&a), a.dim())
            });
            match emit {
                Some(path) => {
                    write_file(path, &doc)?;
                    Ok(Outcome::ok(json!({ "series": k.name(), "dim": dim, "written": path.display().to_string() })))
                }
                None => {
                    let v: Value = serde_json::from_str(&doc).expect("writer emits JSON");
                    let text = Some(doc.trim_end().to_string() + "\n");
                    Ok(Outcome { json: v, text, ok: true })
                }
            }
        }
        Command::SweepNakayama { max_entry, max_vertices, report, jobs } => {
            let (outcome, full) = sweep::sweep(*max_entry, *max_vertices, *jobs, requested_field(cli)?, &cfg)?;
            if let Some(path) = report {
                write_file(path, &(serde_json::to_string_pretty(&full).expect("values serialize") + "\n"))?;
            }
            Ok(outcome)
        }
        Command::Corpus { action: CorpusAction::List } => {
            let list: Vec<Value> = corpus_list()
                .iter()
                .map(|f| json!({ "name": f.name, "description": f.description, "fields": f.fields, "invariants": f.expected.len() }))
                .collect();
            let text = corpus_list().iter().map(|f| format!("{:<12} {}\n", f.name, f.description)).collect();
            Ok(Outcome { json: json!(list), text: Some(text), ok: true })
        }
        Command::Corpus { action: CorpusAction::Verify { name } } => {
            let fixtures: Vec<Fixture> = match name {
                Some(n) if n.ends_with(".json") => match parse_source(n)? {
                    AlgSource::Fixture(fx) => vec![fx],
                    _ => return Err(CliError::Input(format!("{} is not a fixture file", n))),
                },
                Some(n) => vec![fixture(n).map_err(CliError::input)?.clone()],
                None => corpus_list().to_vec(),
            };
            let chars = cli.characteristic.map(|c| vec![c]);
            let mut reports = Vec::new();
            let mut text = String::new();
            let mut ok = true;
            for fx in &fixtures {
                let r = verify_fixture(fx, cfg.cap, cfg.seed, chars.as_deref());
                ok &= r.passed();
                text.push_str(&format!("{}: {}\n", fx.name, if r.passed() { "pass" } else { "FAIL" }));
                for p in &r.metadata_problems {
                    text.push_str(&format!("  metadata: {}\n", p));
                }
                for run in &r.runs {
                    if let Some(e) = &run.build_error {
                        text.push_str(&format!("  char {}: cannot build: {}\n", run.characteristic, e));
                    }
                    for c in run.failures() {
                        let actual = match &c.actual {
                            Ok(v) => scalar(v),
                            Err(e) => format!("error: {}", e),
                        };
                        text.push_str(&format!(
                            "  char {}: {} expected {} got {}\n",
                            run.characteristic,
                            c.invariant,
                            scalar(&c.expected),
                            actual
                        ));
                    }
                }
                reports.push(r.to_json());
            }
            Ok(Outcome { json: json!({ "passed": ok, "fixtures": reports }), text: Some(text), ok })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            print!("{}", render(&outcome, cli.format));
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(CliError::Input(m)) => {
            eprintln!("error: {}", m);
            ExitCode::from(2)
        }
        Err(CliError::Mismatch(m)) => {
            eprintln!("mismatch: {}", m);
            ExitCode::from(1)
        }
    }
}
