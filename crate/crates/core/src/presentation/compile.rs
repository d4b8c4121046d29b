use std::collections::HashMap;

use crate::algebra::{Alg, Algebra};
use crate::exactlin::{Field, Mat};

use super::{Presentation, PresentationError};

pub const DEFAULT_LENGTH_CAP: usize = 30;

/// Refuse truncations with more paths than this.
const MAX_PATHS: usize = 6000;

/// Compiles a presentation to its quotient algebra.
///
/// For increasing `L`, the ideal modulo paths longer than `L` is spanned by
/// the truncated products `p * rel * q`; the search stops at the first `L`
/// for which every path of length `L` lies in that span. For relations
/// homogeneous in path length this certifies admissibility; for mixed
/// lengths the ideal is assumed to contain all long enough paths.
pub fn compile<F: Field>(pres: &Presentation, field: &F, length_cap: usize) -> Result<Alg<F>, PresentationError> {
    let q = &pres.quiver;
    if q.vertices.is_empty() {
        return Err(PresentationError::Schema("quiver has no vertices".into()));
    }
    let rels: Vec<Vec<(F::Elem, Vec<usize>)>> = pres
        .relations
        .iter()
        .map(|r| {
            r.terms
                .iter()
                .map(|(c, p)| {
                    field
                        .from_ratio(c.numer(), c.denom())
                        .map(|x| (x, p.clone()))
                        .ok_or_else(|| PresentationError::Schema(format!("coefficient {} undefined in the field", c)))
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<_, _>>()?;

    // paths[l] = all paths of length l (l >= 1), as arrow sequences
    let mut paths: Vec<Vec<Vec<usize>>> = vec![Vec::new(), q.arrows.iter().enumerate().map(|(i, _)| vec![i]).collect()];
    let mut total = paths[1].len();
    for l in 1..=length_cap {
        if l >= paths.len() {
            let next: Vec<Vec<usize>> = paths[l - 1]
                .iter()
                .flat_map(|p| {
                    let t = q.path_target(p);
                    q.arrows.iter().enumerate().filter(move |(_, a)| a.source == t).map(move |(i, _)| {
                        let mut np = p.clone();
                        np.push(i);
                        np
                    })
                })
                .collect();
            total += next.len();
            paths.push(next);
        }
        if total > MAX_PATHS {
            return Err(PresentationError::NotAdmissible {
                cap: length_cap,
                msg: format!("more than {} paths of length <= {} survive truncation", MAX_PATHS, l),
            });
        }
        if let Some(alg) = try_truncation(pres, field, &rels, &paths, l) {
            return Ok(alg);
        }
    }
    Err(PresentationError::NotAdmissible {
        cap: length_cap,
        msg: "paths of every length up to the cap survive".into(),
    })
}

/// Attempts the quotient with paths of length at most `l`; `None` when some
/// path of length `l` is not in the truncated ideal.
fn try_truncation<F: Field>(
    pres: &Presentation,
    field: &F,
    rels: &[Vec<(F::Elem, Vec<usize>)>],
    paths: &[Vec<Vec<usize>>],
    l: usize,
) -> Option<Alg<F>> {
    let q = &pres.quiver;
    // Column order: longest paths first, so pivots are long paths and the
    // surviving standard monomials are short.
    let mut col_of: HashMap<&[usize], usize> = HashMap::new();
    let mut cols: Vec<&[usize]> = Vec::new();
    for len in (1..=l).rev() {
        for p in &paths[len] {
            col_of.insert(p, cols.len());
            cols.push(p);
        }
    }
    let ncols = cols.len();
    let mut rows: Vec<Vec<F::Elem>> = Vec::new();
    for rel in rels {
        let (src, tgt) = (q.path_source(&rel[0].1), q.path_target(&rel[0].1));
        let min_len = rel.iter().map(|(_, p)| p.len()).min().unwrap();
        if min_len > l {
            continue;
        }
        let budget = l - min_len;
        let lefts: Vec<&[usize]> = std::iter::once(&[][..])
            .chain((1..=budget).flat_map(|k| paths[k].iter().filter(|p| q.path_target(p) == src).map(|p| p.as_slice())))
            .collect();
        for left in &lefts {
            let rights: Vec<&[usize]> = std::iter::once(&[][..])
                .chain(
                    (1..=budget - left.len())
                        .flat_map(|k| paths[k].iter().filter(|p| q.path_source(p) == tgt).map(|p| p.as_slice())),
                )
                .collect();
            for right in &rights {
                let mut row = vec![field.zero(); ncols];
                let mut any = false;
                for (c, mid) in rel {
                    let len = left.len() + mid.len() + right.len();
                    if len > l {
                        continue;
                    }
                    let full: Vec<usize> = left.iter().chain(mid).chain(right.iter()).copied().collect();
                    let j = col_of[full.as_slice()];
                    row[j] = field.add(&row[j], c);
                    any = true;
                }
                if any {
                    rows.push(row);
                }
            }
        }
    }
    let m = Mat::from_rows(field, ncols, rows);
    let r = m.rref();
    let mut pivot_row = vec![None; ncols];
    for (i, &c) in r.pivots.iter().enumerate() {
        pivot_row[c] = Some(i);
    }
    // every length-l path must reduce to zero
    let top = paths[l].len();
    for c in 0..top {
        let Some(i) = pivot_row[c] else { return None };
        if (0..ncols).any(|j| j != c && !field.is_zero(r.mat.get(i, j))) {
            return None;
        }
    }

    // Standard monomials: trivial paths, then surviving paths by length.
    let nv = q.vertices.len();
    let mut labels: Vec<String> = q.vertices.iter().map(|v| format!("e_{}", v)).collect();
    let mut basis_paths: Vec<Vec<usize>> = vec![Vec::new(); nv];
    let mut basis_ends: Vec<(usize, usize)> = (0..nv).map(|v| (v, v)).collect();
    let mut basis_of_col: HashMap<usize, usize> = HashMap::new();
    for len in 1..l {
        for p in &paths[len] {
            let c = col_of[p.as_slice()];
            if pivot_row[c].is_none() {
                basis_of_col.insert(c, labels.len());
                labels.push(q.path_name(p));
                basis_paths.push(p.clone());
                basis_ends.push((q.path_source(p), q.path_target(p)));
            }
        }
    }
    let d = labels.len();
    // Normal form of a path of positive length, in basis coordinates.
    let normal_form = |p: &[usize]| -> Vec<(usize, F::Elem)> {
        if p.len() > l {
            return Vec::new();
        }
        let c = col_of[p];
        match pivot_row[c] {
            None => vec![(basis_of_col[&c], field.one())],
            Some(i) => {
                let mut out = Vec::new();
                for (j, b) in &basis_of_col {
                    let x = r.mat.get(i, *j);
                    if !field.is_zero(x) {
                        out.push((*b, field.neg(x)));
                    }
                }
                out.sort_by_key(|(k, _)| *k);
                out
            }
        }
    };
    // b_s * b_t is the path t followed by s.
    let mut mul = vec![Vec::new(); d * d];
    for s in 0..d {
        for t in 0..d {
            let (ss, _) = basis_ends[s];
            let (_, tt) = basis_ends[t];
            if ss != tt {
                continue;
            }
            mul[s * d + t] = if s < nv {
                vec![(t, field.one())]
            } else if t < nv {
                vec![(s, field.one())]
            } else {
                let full: Vec<usize> = basis_paths[t].iter().chain(&basis_paths[s]).copied().collect();
                normal_form(&full)
            };
        }
    }
    Some(Algebra::from_adapted(field.clone(), labels, q.vertices.clone(), mul, (0..nv).collect()))
}
