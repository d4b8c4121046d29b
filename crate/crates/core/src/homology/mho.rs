use serde_json::{json, Value};

use crate::exactlin::{Field, Mat};
use crate::modrep::{a_dual, is_indecomposable, is_projective, Module, Morphism};

use super::torsionless;

/// A minimal left `add(A)`-approximation `M -> T`.
///
/// Starts from all Hom-basis maps `M -> A e_v` and greedily drops one while
/// the remaining maps still generate `M* = Hom(M, A)` as a right module,
/// which is surjectivity of `Hom(T, A) -> Hom(M, A)`.
pub fn add_approximation<F: Field>(m: &Module<F>) -> Morphism<F> {
    let alg = m.alg();
    let f = alg.field();
    let dual = a_dual(m);
    let ds = &dual.module;
    let r = ds.dim();
    let generated = |keep: &[usize]| -> usize {
        if keep.is_empty() {
            return 0;
        }
        let mut g = Mat::zeros(f, keep.len(), r);
        for (row, &i) in keep.iter().enumerate() {
            g.set(row, i, f.one());
        }
        ds.submodule(&g).module.dim()
    };
    let mut keep: Vec<usize> = (0..r).collect();
    let mut i = 0;
    while i < keep.len() {
        let mut trial = keep.clone();
        trial.remove(i);
        if generated(&trial) == r {
            keep = trial;
        } else {
            i += 1;
        }
    }
    let parts: Vec<Module<F>> = keep.iter().map(|&i| Module::projective(alg, dual.map(i).0)).collect();
    let target = Module::direct_sum(alg, &parts.iter().collect::<Vec<_>>());
    let maps: Vec<&Mat<F>> = keep.iter().map(|&i| dual.map(i).1).collect();
    let matrix = if maps.is_empty() { Mat::zeros(f, 0, m.dim()) } else { Mat::vstack(f, m.dim(), &maps) };
    Morphism::new(m.clone(), target, matrix).expect("stacked Hom-basis maps form a module map")
}

/// `℧(M)`, the cokernel of the minimal left `add(A)`-approximation.
pub fn mho<F: Field>(m: &Module<F>) -> Module<F> {
    add_approximation(m).cokernel().module
}

pub fn mho_power<F: Field>(m: &Module<F>, k: usize) -> Module<F> {
    let mut cur = m.clone();
    for _ in 0..k {
        cur = mho(&cur);
    }
    cur
}

/// Why a path could not be extended past a node.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathStop {
    Projective,
    Decomposable,
    NotTorsionless,
}

impl PathStop {
    pub fn label(&self) -> &'static str {
        match self {
            PathStop::Projective => "projective",
            PathStop::Decomposable => "decomposable",
            PathStop::NotTorsionless => "not torsionless",
        }
    }
}

/// `M = X_0 <- X_1 <- ... <- X_k` with `X_{i+1} = ℧(X_i)`, built backwards
/// from its end: the arrow `[℧(X)] -> [X]` exists when `X` is torsionless,
/// indecomposable and not projective.
#[derive(Clone, Debug)]
pub struct MhoPath<F: Field> {
    pub target_length: usize,
    pub nodes: Vec<Module<F>>,
    /// Node index and reason where the construction stopped, if it did.
    pub stop: Option<(usize, PathStop)>,
}

impl<F: Field> MhoPath<F> {
    pub fn length(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn complete(&self) -> bool {
        self.stop.is_none() && self.length() == self.target_length
    }

    pub fn to_json(&self) -> Value {
        json!({
            "target_length": self.target_length,
            "length": self.length(),
            "complete": self.complete(),
            "node_dims": self.nodes.iter().map(|m| m.dim()).collect::<Vec<_>>(),
            "stop": self.stop.map(|(i, r)| json!({"node": i, "reason": r.label()})),
        })
    }
}

fn vertex_problem<F: Field>(x: &Module<F>) -> Option<PathStop> {
    if is_projective(x) {
        Some(PathStop::Projective)
    } else if !is_indecomposable(x) {
        Some(PathStop::Decomposable)
    } else {
        None
    }
}

/// Tries to build a path of length `t` ending at `m`. Every node, including
/// the first one reached, must be a vertex of the quiver (indecomposable and
/// not projective).
pub fn mho_path<F: Field>(m: &Module<F>, t: usize) -> MhoPath<F> {
    let mut nodes = vec![m.clone()];
    if let Some(r) = vertex_problem(m) {
        return MhoPath { target_length: t, nodes, stop: Some((0, r)) };
    }
    for i in 0..t {
        if !torsionless(&nodes[i]) {
            return MhoPath { target_length: t, nodes, stop: Some((i, PathStop::NotTorsionless)) };
        }
        let next = mho(&nodes[i]);
        let problem = vertex_problem(&next);
        nodes.push(next);
        if let Some(r) = problem {
            return MhoPath { target_length: t, nodes, stop: Some((i + 1, r)) };
        }
    }
    MhoPath { target_length: t, nodes, stop: None }
}
