use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::One;

use crate::algebra::Alg;
use crate::exactlin::Field;

use super::{compile, Arrow, Presentation, PresentationError, Quiver, Relation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    Linear,
    Cyclic,
}

impl FromStr for Shape {
    type Err = PresentationError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "linear" => Ok(Shape::Linear),
            "cyclic" => Ok(Shape::Cyclic),
            other => Err(PresentationError::InvalidKupisch(format!("unknown shape '{}'", other))),
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Shape::Linear => "linear",
            Shape::Cyclic => "cyclic",
        })
    }
}

/// Composition lengths `c_1..c_n` of the indecomposable projectives
/// `P_i` of a Nakayama algebra with arrows `i -> i+1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KupischSeries {
    pub lengths: Vec<usize>,
    pub shape: Shape,
}

impl KupischSeries {
    pub fn new(lengths: Vec<usize>, shape: Shape) -> Result<Self, PresentationError> {
        let k = KupischSeries { lengths, shape };
        k.check()?;
        Ok(k)
    }

    /// Parses `"2,3"`.
    pub fn parse(list: &str, shape: Shape) -> Result<Self, PresentationError> {
        let lengths = list
            .split(',')
            .map(|s| s.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| PresentationError::InvalidKupisch(format!("'{}' is not a comma-separated list", list)))?;
        Self::new(lengths, shape)
    }

    pub fn check(&self) -> Result<(), PresentationError> {
        let c = &self.lengths;
        let n = c.len();
        let bad = |m: String| Err(PresentationError::InvalidKupisch(m));
        if n == 0 {
            return bad("empty series".into());
        }
        if c.iter().any(|&x| x == 0) {
            return bad("lengths must be positive".into());
        }
        match self.shape {
            Shape::Cyclic => {
                if c.iter().any(|&x| x < 2) {
                    return bad("cyclic series need every length >= 2".into());
                }
                for i in 0..n {
                    if c[(i + 1) % n] + 1 < c[i] {
                        return bad(format!("c_{} = {} < c_{} - 1", (i + 1) % n + 1, c[(i + 1) % n], i + 1));
                    }
                }
            }
            Shape::Linear => {
                if c[n - 1] != 1 {
                    return bad("linear series must end with 1".into());
                }
                if c[..n - 1].iter().any(|&x| x < 2) {
                    return bad("only the last length of a linear series may be 1".into());
                }
                for i in 0..n - 1 {
                    if c[i + 1] + 1 < c[i] {
                        return bad(format!("c_{} = {} < c_{} - 1", i + 2, c[i + 1], i + 1));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> String {
        let l: Vec<String> = self.lengths.iter().map(|x| x.to_string()).collect();
        format!("{}:{}", self.shape, l.join(","))
    }
}

/// Quiver `1 -> 2 -> ... -> n` (closed to a cycle when cyclic) with the
/// path of length `c_i` from `i` as a relation whenever `c_i >= 2`.
pub fn nakayama_presentation(k: &KupischSeries) -> Presentation {
    let n = k.lengths.len();
    let vertices: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let narrows = match k.shape {
        Shape::Linear => n - 1,
        Shape::Cyclic => n,
    };
    let arrows: Vec<Arrow> = (0..narrows).map(|i| Arrow { name: format!("a{}", i + 1), source: i, target: (i + 1) % n }).collect();
    let mut relations = Vec::new();
    for (i, &c) in k.lengths.iter().enumerate() {
        if c < 2 {
            continue;
        }
        let path: Vec<usize> = (0..c).map(|j| (i + j) % n).collect();
        if k.shape == Shape::Linear && i + c > n - 1 {
            continue;
        }
        relations.push(Relation { terms: vec![(BigRational::one(), path)] });
    }
    Presentation { quiver: Quiver { vertices, arrows }, relations }
}

pub fn nakayama<F: Field>(k: &KupischSeries, field: &F) -> Result<Alg<F>, PresentationError> {
    k.check()?;
    let cap = k.lengths.iter().max().copied().unwrap_or(1) + 1;
    compile(&nakayama_presentation(k), field, cap)
}
