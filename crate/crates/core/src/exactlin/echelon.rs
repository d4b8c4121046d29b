use crate::exactlin::{Field, Mat};

/// Incrementally grown echelon basis of a subspace of `F^dim`.
///
/// Rows are kept in insertion order; each row vanishes before its pivot,
/// has a one at its pivot, and vanishes at the pivots of earlier rows.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    field: F,
    dim: usize,
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> Echelon<F> {
    pub fn new(field: &F, dim: usize) -> Self {
        Echelon { field: field.clone(), dim, rows: Vec::new(), pivots: Vec::new() }
    }

    /// Echelon basis of the row space of `m`.
    pub fn from_rows(m: &Mat<F>) -> Self {
        let e = m.echelon();
        let rank = e.rank();
        let rows = (0..rank).map(|i| e.mat.row(i).to_vec()).collect();
        Echelon { field: m.field().clone(), dim: m.cols(), rows, pivots: e.pivots }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[Vec<F::Elem>] {
        &self.rows
    }

    pub fn to_mat(&self) -> Mat<F> {
        Mat::from_rows(&self.field, self.dim, self.rows.clone())
    }

    /// Residue of `v` modulo the span.
    pub fn reduce(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let mut w = v.to_vec();
        self.field.reduce_by_echelon(&self.rows, &self.pivots, &mut w);
        w
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        let w = self.reduce(v);
        w.iter().all(|x| self.field.is_zero(x))
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &[F::Elem]) -> bool {
        assert_eq!(v.len(), self.dim, "vector length mismatch");
        if self.rows.len() == self.dim {
            return false;
        }
        let w = self.reduce(v);
        self.push_reduced(w)
    }

    fn push_reduced(&mut self, mut w: Vec<F::Elem>) -> bool {
        let f = &self.field;
        let Some(c) = w.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&w[c]).unwrap();
        for x in &mut w[c..] {
            *x = f.mul(x, &inv);
        }
        self.rows.push(w);
        self.pivots.push(c);
        true
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Fp;

    #[test]
    fn membership_tracks_span() {
        let f = Fp::new(7).unwrap();
        let mut e = Echelon::new(&f, 3);
        assert!(e.insert(&[0, 1, 2]));
        assert!(e.insert(&[1, 1, 1]));
        assert!(!e.insert(&[1, 2, 3]));
        assert!(e.contains(&[2, 3, 4]));
        assert!(!e.contains(&[0, 0, 1]));
        assert_eq!(e.rank(), 2);
        let b = Echelon::from_rows(&Mat::from_i64(&f, &[&[0, 1, 2], &[1, 1, 1], &[1, 2, 3]]));
        assert_eq!(b.rank(), 2);
        assert!(b.contains(&[2, 3, 4]));
    }
}
