//! Quiver presentations, Nakayama algebras and the algebra JSON format.
//!
//! Paths are written left to right: `x*y` is `x` followed by `y`. Modules
//! are left modules, i.e. quiver representations, so as an algebra element
//! the path `x*y` is the product `y · x`, and `A e_v` is spanned by the paths
//! starting at `v`.

use num_rational::BigRational;
use std::fmt;

mod compile;
mod dsl;
mod json;
mod nakayama;

pub use compile::{compile, DEFAULT_LENGTH_CAP};
pub use dsl::parse_quiver_dsl;
pub use json::{algebra_to_json, parse_field_spec, read_algebra_json, write_algebra_json};
pub use nakayama::{nakayama, nakayama_presentation, KupischSeries, Shape};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PresentationError {
    #[error("line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("line {line}: unknown {kind} '{name}'")]
    UnknownName { line: usize, kind: &'static str, name: String },
    #[error("line {line}: {msg}")]
    BadRelation { line: usize, msg: String },
    #[error("ideal not admissible within path length {cap}: {msg}")]
    NotAdmissible { cap: usize, msg: String },
    #[error("invalid Kupisch series: {0}")]
    InvalidKupisch(String),
    #[error("schema error: {0}")]
    Schema(String),
    #[error(transparent)]
    Algebra(#[from] crate::algebra::AlgebraError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn vertex(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn path_source(&self, path: &[usize]) -> usize {
        self.arrows[path[0]].source
    }

    pub fn path_target(&self, path: &[usize]) -> usize {
        self.arrows[*path.last().unwrap()].target
    }

    pub fn path_name(&self, path: &[usize]) -> String {
        path.iter().map(|&a| self.arrows[a].name.as_str()).collect::<Vec<_>>().join("*")
    }
}

/// A linear combination of parallel paths (arrow index sequences) with
/// exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(BigRational, Vec<usize>)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Presentation {
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = &self.quiver;
        writeln!(f, "vertex {}", q.vertices.join(" "))?;
        for a in &q.arrows {
            writeln!(f, "arrow {}: {} -> {}", a.name, q.vertices[a.source], q.vertices[a.target])?;
        }
        for r in &self.relations {
            let mut s = String::new();
            for (i, (c, p)) in r.terms.iter().enumerate() {
                let neg = c < &BigRational::from_integer(0.into());
                let abs = if neg { -c.clone() } else { c.clone() };
                if i == 0 {
                    if neg {
                        s.push('-');
                    }
                } else {
                    s.push_str(if neg { " - " } else { " + " });
                }
                if abs != BigRational::from_integer(1.into()) {
                    s.push_str(&abs.to_string());
                    s.push('*');
                }
                s.push_str(&q.path_name(p));
            }
            writeln!(f, "relation {}", s)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests;
