use domdimlab::bimodule_lab::conjecture_probe;
use domdimlab::exactlin::FieldSpec;
use domdimlab::presentation::{nakayama, KupischSeries, Shape};
use domdimlab::with_field;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::{CliError, Outcome, RunConfig};

/// Valid Kupisch series with at most `max_vertices` entries, each at most
/// `max_entry`; cyclic series are listed once per rotation class.
pub fn kupisch_family(max_entry: usize, max_vertices: usize) -> Vec<KupischSeries> {
    let mut out = Vec::new();
    for n in 1..=max_vertices {
        let mut c = vec![1; n];
        loop {
            for shape in [Shape::Linear, Shape::Cyclic] {
                let least_rotation = (0..n).all(|r| c[..] <= [&c[r..], &c[..r]].concat()[..]);
                if shape == Shape::Cyclic && !least_rotation {
                    continue;
                }
                if let Ok(k) = KupischSeries::new(c.clone(), shape) {
                    out.push(k);
                }
            }
            // next tuple in [1, max_entry]^n
            let mut i = n;
            while i > 0 && c[i - 1] == max_entry {
                c[i - 1] = 1;
                i -= 1;
            }
            if i == 0 {
                break;
            }
            c[i - 1] += 1;
        }
    }
    out
}

fn probe_one(k: &KupischSeries, spec: FieldSpec, cfg: &RunConfig) -> Value {
    with_field!(spec, |f| match nakayama(k, &f) {
        Ok(a) => {
            let p = conjecture_probe(&a, cfg.cap, cfg.seed);
            json!({
                "series": k.lengths,
                "shape": k.shape.to_string(),
                "dim": a.dim(),
                "selfinjective": p.selfinjective,
                "domdim": p.domdim.to_json(),
                "tachikawa_probe": p.tachikawa(),
                "gp_probe": p.gp.holds_up_to_bound(),
                "contradictions": p.contradictions,
            })
        }
        Err(e) => json!({ "series": k.lengths, "shape": k.shape.to_string(), "error": e.to_string() }),
    })
}

pub fn sweep(max_entry: usize, max_vertices: usize, jobs: usize, spec: FieldSpec, cfg: &RunConfig) -> Result<(Outcome, Value), CliError> {
    if max_entry == 0 || max_vertices == 0 {
        return Err(CliError::Input("--max-entry and --max-vertices must be positive".into()));
    }
    let family = kupisch_family(max_entry, max_vertices);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| CliError::Input(e.to_string()))?;
    let rows: Vec<Value> = pool.install(|| family.par_iter().map(|k| probe_one(k, spec, cfg)).collect());
    let with_contradictions = rows.iter().filter(|r| r["contradictions"].as_array().map_or(false, |c| !c.is_empty())).count();
    let errors = rows.iter().filter(|r| r.get("error").is_some()).count();
    let selfinjective = rows.iter().filter(|r| r["selfinjective"] == true).count();
    let summary = json!({
        "algebras": rows.len(),
        "selfinjective": selfinjective,
        "with_contradictions": with_contradictions,
        "errors": errors,
        "cap": cfg.cap,
    });
    let report = json!({ "summary": summary, "algebras": rows });
    Ok((Outcome::new(summary, with_contradictions == 0 && errors == 0), report))
}
