use super::*;
use crate::exactlin::{Fp, Rationals};

fn raw<F: Field>(
    f: &F,
    labels: &[&str],
    products: &[(usize, usize, usize, i64)],
    idempotents: &[&[i64]],
    rad: Option<&[&[i64]]>,
) -> RawAlgebra<F> {
    let d = labels.len();
    let mut mul = vec![Vec::new(); d * d];
    for &(i, j, k, c) in products {
        mul[i * d + j].push((k, f.from_i64(c)));
    }
    let idempotents: Vec<Vec<F::Elem>> =
        idempotents.iter().map(|e| e.iter().map(|&x| f.from_i64(x)).collect()).collect();
    let mut one = vec![f.zero(); d];
    for e in &idempotents {
        for (o, x) in one.iter_mut().zip(e) {
            *o = f.add(o, x);
        }
    }
    RawAlgebra {
        field: f.clone(),
        labels: labels.iter().map(|s| s.to_string()).collect(),
        mul,
        one,
        idempotents,
        rad_basis: rad.map(|r| Mat::from_i64(f, r)),
        vertex_names: None,
    }
}

pub(crate) fn dual_numbers<F: Field>(f: &F) -> Alg<F> {
    Algebra::from_raw(raw(f, &["1", "x"], &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)], &[&[1, 0]], Some(&[&[0, 1]])))
        .unwrap()
}

/// Path algebra of `1 -> 2`: basis e1, e2, a with a = e2 a e1 under the
/// left-module convention (a starts at 1, so a e1 = a).
pub(crate) fn a2<F: Field>(f: &F) -> Alg<F> {
    Algebra::from_raw(raw(
        f,
        &["e1", "e2", "a"],
        &[(0, 0, 0, 1), (1, 1, 1, 1), (2, 0, 2, 1), (1, 2, 2, 1)],
        &[&[1, 0, 0], &[0, 1, 0]],
        Some(&[&[0, 0, 1]]),
    ))
    .unwrap()
}

#[test]
fn dual_numbers_are_selfinjective_local() {
    let f = Fp::new(101).unwrap();
    let a = dual_numbers(&f);
    let r = a.validate().unwrap();
    assert!(r.connected && r.selfinjective && !r.semisimple);
    assert_eq!(r.simples, 1);
    assert_eq!(a.center_dim(), 2);
}

#[test]
fn idempotent_like_radical_is_rejected() {
    let f = Fp::new(101).unwrap();
    let r = raw(&f, &["1", "x"], &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 1, 1)], &[&[1, 0]], Some(&[&[0, 1]]));
    assert!(matches!(Algebra::from_raw(r), Err(AlgebraError::BadRadical(_))));
}

#[test]
fn product_of_fields_is_disconnected() {
    let f = Fp::new(101).unwrap();
    let r = raw(&f, &["e1", "e2"], &[(0, 0, 0, 1), (1, 1, 1, 1)], &[&[1, 0], &[0, 1]], Some(&[]));
    let r = RawAlgebra { rad_basis: Some(Mat::zeros(&f, 0, 2)), ..r };
    let a = Algebra::from_raw(r).unwrap();
    let rep = a.validate().unwrap();
    assert!(!rep.connected && rep.semisimple && rep.selfinjective);
}

#[test]
fn opposite_reverses_arrows_and_is_an_involution() {
    let f = Fp::new(101).unwrap();
    let a = a2(&f);
    let op = a.opposite();
    // in A the arrow ends at vertex 2 on the left; in A^op on the right
    assert_eq!((a.left_vertex(2), a.right_vertex(2)), (1, 0));
    assert_eq!((op.left_vertex(2), op.right_vertex(2)), (0, 1));
    assert!(Arc::ptr_eq(&op.opposite(), &a));
    let d = dual_numbers(&f);
    assert_eq!(d.opposite().mul_table(), d.mul_table());
}

#[test]
fn enveloping_dimensions() {
    let f = Fp::new(101).unwrap();
    let d = dual_numbers(&f);
    let e = d.enveloping();
    assert_eq!(e.dim(), 4);
    assert_eq!(e.num_vertices(), 1);
    assert_eq!(e.rad().len(), 3);
    assert!(e.validate().is_ok());
    assert_eq!(e.center_dim(), 4);
    let a = a2(&f);
    assert_eq!(a.center_dim(), 1);
    let ea = a.enveloping();
    assert_eq!(ea.dim(), 9);
    assert!(ea.validate().is_ok());
}

#[test]
fn trace_form_radical_in_char_zero() {
    let q = Rationals;
    let r = raw(&q, &["1", "x"], &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)], &[&[1, 0]], None);
    let a = Algebra::from_raw(r).unwrap();
    assert_eq!(a.rad().len(), 1);
    let f = Fp::new(7).unwrap();
    let r = raw(&f, &["1", "x"], &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)], &[&[1, 0]], None);
    assert!(matches!(Algebra::from_raw(r), Err(AlgebraError::BadRadical(_))));
}

#[test]
fn non_adapted_input_is_rebased() {
    let f = Fp::new(101).unwrap();
    // K[x]/(x^2) in the basis {1, 1 + x}
    let r = raw(
        &f,
        &["1", "y"],
        &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, -1), (1, 1, 1, 2)],
        &[&[1, 0]],
        Some(&[&[-1, 1]]),
    );
    let a = Algebra::from_raw(r).unwrap();
    assert_eq!(a.dim(), 2);
    assert_eq!(a.rad().len(), 1);
    assert!(a.validate().unwrap().selfinjective);
}

#[test]
fn associativity_failure_is_named() {
    let f = Fp::new(101).unwrap();
    // x*y = z but y*z, (x*y)*... mixed to break associativity
    let r = raw(
        &f,
        &["1", "x", "y", "z"],
        &[
            (0, 0, 0, 1),
            (0, 1, 1, 1),
            (1, 0, 1, 1),
            (0, 2, 2, 1),
            (2, 0, 2, 1),
            (0, 3, 3, 1),
            (3, 0, 3, 1),
            (1, 1, 2, 1),
            (1, 2, 3, 1),
        ],
        &[&[1, 0, 0, 0]],
        Some(&[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]),
    );
    assert!(matches!(Algebra::from_raw(r), Err(AlgebraError::NotAssociative(..))));
}
