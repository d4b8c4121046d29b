use serde::Serialize;

use crate::algebra::{Algebra, AlgebraError};
use crate::exactlin::{Echelon, Field, Mat};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlgebraReport {
    pub connected: bool,
    pub semisimple: bool,
    pub selfinjective: bool,
    pub dim: usize,
    pub simples: usize,
}

type Sparse<E> = Vec<Vec<(usize, E)>>;

fn product<F: Field>(f: &F, d: usize, mul: &Sparse<F::Elem>, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
    let mut out = vec![f.zero(); d];
    for (i, xi) in x.iter().enumerate() {
        if f.is_zero(xi) {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if f.is_zero(yj) {
                continue;
            }
            let c = f.mul(xi, yj);
            for (k, m) in &mul[i * d + j] {
                out[*k] = f.add(&out[*k], &f.mul(&c, m));
            }
        }
    }
    out
}

fn unit<F: Field>(f: &F, d: usize, i: usize) -> Vec<F::Elem> {
    let mut v = vec![f.zero(); d];
    v[i] = f.one();
    v
}

/// Checks associativity, unit, idempotents and radical, in that order.
pub(crate) fn check_axioms<F: Field>(
    f: &F,
    labels: &[String],
    mul: &Sparse<F::Elem>,
    one: &[F::Elem],
    idempotents: &[Vec<F::Elem>],
    rad: &Mat<F>,
) -> Result<(), AlgebraError> {
    let d = labels.len();
    let basis: Vec<Vec<F::Elem>> = (0..d).map(|i| unit(f, d, i)).collect();
    let as_vec = |entries: &[(usize, F::Elem)]| {
        let mut v = vec![f.zero(); d];
        for (k, c) in entries {
            v[*k] = c.clone();
        }
        v
    };

    for i in 0..d {
        for j in 0..d {
            let ij = as_vec(&mul[i * d + j]);
            for k in 0..d {
                let left = product(f, d, mul, &ij, &basis[k]);
                let jk = as_vec(&mul[j * d + k]);
                let right = product(f, d, mul, &basis[i], &jk);
                if left != right {
                    return Err(AlgebraError::NotAssociative(
                        labels[i].clone(),
                        labels[j].clone(),
                        labels[k].clone(),
                    ));
                }
            }
        }
    }

    for i in 0..d {
        if product(f, d, mul, one, &basis[i]) != basis[i] || product(f, d, mul, &basis[i], one) != basis[i] {
            return Err(AlgebraError::BadUnit(format!("1 * {0} or {0} * 1 differs from {0}", labels[i])));
        }
    }

    if idempotents.is_empty() {
        return Err(AlgebraError::BadIdempotents("no idempotents given".into()));
    }
    let mut sum = vec![f.zero(); d];
    for (a, ea) in idempotents.iter().enumerate() {
        for (b, eb) in idempotents.iter().enumerate() {
            let p = product(f, d, mul, ea, eb);
            let expected = if a == b { ea.clone() } else { vec![f.zero(); d] };
            if p != expected {
                return Err(AlgebraError::BadIdempotents(if a == b {
                    format!("idempotent {} does not square to itself", a)
                } else {
                    format!("idempotents {} and {} are not orthogonal", a, b)
                }));
            }
        }
        for (s, x) in sum.iter_mut().zip(ea) {
            *s = f.add(s, x);
        }
    }
    if sum != one {
        return Err(AlgebraError::BadIdempotents("idempotents do not sum to the unit".into()));
    }

    let r = Echelon::from_rows(rad);
    let rows = r.rows().to_vec();
    for x in &rows {
        for b in &basis {
            if !r.contains(&product(f, d, mul, b, x)) || !r.contains(&product(f, d, mul, x, b)) {
                return Err(AlgebraError::BadRadical("radical span is not a two-sided ideal".into()));
            }
        }
    }
    let mut power = rows.clone();
    let mut steps = 0;
    while !power.is_empty() {
        steps += 1;
        if steps > d + 1 {
            return Err(AlgebraError::BadRadical("radical span is not nilpotent".into()));
        }
        let mut next = Echelon::new(f, d);
        for x in &power {
            for y in &rows {
                next.insert(&product(f, d, mul, x, y));
            }
        }
        if next.rank() == power.len() {
            return Err(AlgebraError::BadRadical("radical span is not nilpotent".into()));
        }
        power = next.rows().to_vec();
    }
    let mut all = r.clone();
    for e in idempotents {
        all.insert(e);
    }
    if r.rank() + idempotents.len() != d || all.rank() != d {
        return Err(AlgebraError::BadRadical(format!(
            "quotient by the radical has dimension {} but there are {} idempotents (or they are dependent modulo the radical)",
            d - r.rank(),
            idempotents.len()
        )));
    }
    Ok(())
}

/// Kernel of the trace form `(x, y) -> tr(L_{xy})`; the Jacobson radical
/// in characteristic zero.
pub(crate) fn trace_form_radical<F: Field>(f: &F, d: usize, mul: &Sparse<F::Elem>) -> Mat<F> {
    // tr(L_{b_k}) for each basis element
    let tr: Vec<F::Elem> = (0..d)
        .map(|k| {
            let mut t = f.zero();
            for j in 0..d {
                for (m, c) in &mul[k * d + j] {
                    if *m == j {
                        t = f.add(&t, c);
                    }
                }
            }
            t
        })
        .collect();
    let form = Mat::from_fn(f, d, d, |i, j| {
        mul[i * d + j].iter().fold(f.zero(), |acc, (k, c)| f.add(&acc, &f.mul(c, &tr[*k])))
    });
    form.kernel_basis()
}

pub(crate) fn report<F: Field>(a: &Algebra<F>) -> AlgebraReport {
    let n = a.num_vertices();
    let mut comp: Vec<usize> = (0..n).collect();
    fn find(c: &mut Vec<usize>, x: usize) -> usize {
        if c[x] != x {
            let r = find(c, c[x]);
            c[x] = r;
        }
        c[x]
    }
    for b in 0..a.dim() {
        let (v, w) = (find(&mut comp, a.left_vertex(b)), find(&mut comp, a.right_vertex(b)));
        comp[v] = w;
    }
    let roots = (0..n).filter(|&v| find(&mut comp, v) == v).count();
    AlgebraReport {
        connected: roots == 1,
        semisimple: a.rad().is_empty(),
        selfinjective: is_selfinjective(a),
        dim: a.dim(),
        simples: n,
    }
}

/// Each `A e_v` is injective iff its socle is a simple `S_w` and
/// `dim A e_v = dim e_w A` (the dimension of the injective hull of `S_w`).
fn is_selfinjective<F: Field>(a: &Algebra<F>) -> bool {
    let f = a.field();
    (0..a.num_vertices()).all(|v| {
        let pb = a.proj_basis(v);
        let acts = a.proj_actions(v);
        let stacked: Vec<&Mat<F>> = a.rad().iter().map(|&r| &acts[r]).collect();
        let soc = if stacked.is_empty() {
            Mat::identity(f, pb.len())
        } else {
            Mat::vstack(f, pb.len(), &stacked).kernel_basis()
        };
        if soc.rows() != 1 {
            return false;
        }
        let b = pb[(0..pb.len()).find(|&i| !f.is_zero(soc.get(0, i))).unwrap()];
        let w = a.left_vertex(b);
        pb.len() == a.right_proj_dim(w)
    })
}
