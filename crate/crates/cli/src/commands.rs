use domdimlab::algebra::Alg;
use domdimlab::bimodule_lab::{
    check_main_theorem, conjecture_probe, domdim_via_ext_formula, gendo_symmetric_report, hochschild_report, LabError,
};
use domdimlab::corpus::{dimension_json, theorem_range, torsionfree_degree};
use domdimlab::exactlin::Field;
use domdimlab::homology::{domdim, gldim, mho_path, n_torsionfree, DimensionValue};
use domdimlab::modrep::{is_indecomposable, is_isomorphic, is_projective, Module};
use serde_json::{json, Map};

use crate::input::parse_module;
use crate::{CliError, Method, Outcome, RunConfig};

pub fn validate<F: Field>(a: &Alg<F>) -> Result<Outcome, CliError> {
    let r = a.validate().map_err(CliError::input)?;
    Ok(Outcome::ok(json!({
        "valid": true,
        "dim": r.dim,
        "simples": r.simples,
        "connected": r.connected,
        "semisimple": r.semisimple,
        "selfinjective": r.selfinjective,
        "loewy_length": a.loewy_length(),
        "fingerprint": a.fingerprint_hex(),
    })))
}

pub fn invariants<F: Field>(a: &Alg<F>, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let dd = domdim(a, cfg.cap);
    let g = gendo_symmetric_report(a, cfg.cap, cfg.seed).map_err(lab)?;
    let out = json!({
        "dim": a.dim(),
        "vertices": a.num_vertices(),
        "center_dim": a.center_dim(),
        "loewy_length": a.loewy_length(),
        "gldim": dimension_json(gldim(a, cfg.cap)),
        "domdim": dimension_json(dd),
        "qf3": dd.at_least(1) == Some(true),
        "selfinjective": is_isomorphic(&Module::regular(a), &Module::coregular(a), cfg.seed).is_yes(),
        "gendo_symmetric": g.by_v,
        "gendo_symmetric_routes_agree": g.agreement,
    });
    Ok(Outcome::new(out, g.agreement))
}

fn agree(values: &[DimensionValue]) -> bool {
    let unbounded = |d: &DimensionValue| matches!(d, DimensionValue::AtLeast(_));
    match values.first() {
        None => true,
        Some(first) if unbounded(first) => values.iter().all(unbounded),
        Some(first) => values.iter().all(|v| v == first),
    }
}

/// Largest `n` for which the syzygy condition of the main theorem holds,
/// checked up to one past the dominant dimension.
fn syzygy_route<F: Field>(a: &Alg<F>, cfg: &RunConfig) -> Result<DimensionValue, LabError> {
    let n_max = theorem_range(domdim(a, cfg.cap), cfg.cap);
    let r = check_main_theorem(a, n_max, cfg.cap, cfg.seed)?;
    Ok(match r.rows.iter().find(|row| row.syzygy.holds() != Some(true)) {
        Some(row) => DimensionValue::Exact(row.n - 1),
        None => DimensionValue::AtLeast(n_max),
    })
}

pub fn domdim_methods<F: Field>(a: &Alg<F>, method: Method, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let wanted: Vec<Method> = match method {
        Method::All => vec![Method::Coresolution, Method::Torsionfree, Method::Syzygy, Method::Formula],
        m => vec![m],
    };
    let mut methods = Map::new();
    let mut values = Vec::new();
    for m in wanted {
        let v = match m {
            Method::Coresolution => Ok(domdim(a, cfg.cap)),
            Method::Torsionfree => Ok(torsionfree_degree(a, cfg.cap)),
            Method::Syzygy => syzygy_route(a, cfg),
            Method::Formula => domdim_via_ext_formula(a, cfg.cap, cfg.seed).map(|r| r.inf_reading),
            Method::All => unreachable!(),
        };
        let entry = match v {
            Ok(d) => {
                values.push(d);
                dimension_json(d)
            }
            // the formula needs dominant dimension at least two
            Err(LabError::Precondition(msg)) if method == Method::All => json!({ "not_applicable": msg }),
            Err(e) => return Err(lab(e)),
        };
        methods.insert(m.name().to_string(), entry);
    }
    let agreement = agree(&values);
    Ok(Outcome::new(json!({ "cap": cfg.cap, "methods": methods, "agreement": agreement }), agreement))
}

pub fn check_theorem<F: Field>(a: &Alg<F>, n_max: Option<usize>, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let n_max = n_max.unwrap_or_else(|| theorem_range(domdim(a, cfg.cap), cfg.cap));
    let r = check_main_theorem(a, n_max, cfg.cap, cfg.seed).map_err(lab)?;
    let mut text = format!("dominant dimension: {}\n", r.domdim);
    text.push_str("n  domdim>=n  torsionfree  syzygy  agree\n");
    for row in &r.rows {
        let show = |b: Option<bool>| b.map_or("?".to_string(), |b| b.to_string());
        text.push_str(&format!(
            "{:<2} {:<10} {:<12} {:<7} {}\n",
            row.n,
            show(row.domdim),
            row.torsionfree,
            show(row.syzygy.holds()),
            row.agreement
        ));
    }
    text.push_str(&format!("agreement: {}\n", r.agreement));
    Ok(Outcome { json: r.to_json(), text: Some(text), ok: r.agreement })
}

pub fn hochschild<F: Field>(a: &Alg<F>, l_max: usize, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let r = hochschild_report(a, l_max, cfg.cap, cfg.seed).map_err(lab)?;
    Ok(Outcome::new(r.to_json(), r.consistent()))
}

pub fn probe_conjectures<F: Field>(a: &Alg<F>, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let p = conjecture_probe(a, cfg.cap, cfg.seed);
    Ok(Outcome::new(p.to_json(), p.contradictions.is_empty()))
}

pub fn mho_path_cmd<F: Field>(a: &Alg<F>, spec: &str, t: usize) -> Result<Outcome, CliError> {
    if t == 0 {
        return Err(CliError::Input("--length must be at least 1".into()));
    }
    let m = parse_module(a, spec)?;
    let path = mho_path(&m, t);
    let applicable = !m.is_zero() && !is_projective(&m) && is_indecomposable(&m);
    let tf = n_torsionfree(&m, t);
    let agreement = !applicable || path.complete() == tf;
    let mut out = path.to_json();
    out["module_dim"] = json!(m.dim());
    out["vertex_of_quiver"] = json!(applicable);
    out["torsionfree"] = json!(tf);
    out["agreement"] = json!(agreement);
    Ok(Outcome::new(out, agreement))
}

pub fn lab(e: LabError) -> CliError {
    match e {
        LabError::Precondition(m) => CliError::Input(m),
        other => CliError::Mismatch(other.to_string()),
    }
}
