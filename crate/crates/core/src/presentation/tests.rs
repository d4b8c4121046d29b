use super::*;
use crate::algebra::AlgebraError;
use crate::exactlin::{Fp, Rationals};

const LOCAL: &str = "vertex v\narrow x: v -> v\narrow y: v -> v\nrelation x*x\nrelation y*y\nrelation x*y\nrelation y*x\n";

fn f101() -> Fp {
    Fp::new(101).unwrap()
}

#[test]
fn local_example_is_three_dimensional() {
    let p = parse_quiver_dsl(LOCAL).unwrap();
    let a = compile(&p, &f101(), DEFAULT_LENGTH_CAP).unwrap();
    assert_eq!(a.dim(), 3);
    assert_eq!(a.labels(), &["e_v", "x", "y"]);
    let r = a.validate().unwrap();
    assert!(r.connected && !r.selfinjective && !r.semisimple);
    let q = compile(&p, &Rationals, DEFAULT_LENGTH_CAP).unwrap();
    assert_eq!(q.dim(), 3);
}

#[test]
fn dropping_yx_gives_four_dimensions() {
    let text = LOCAL.replace("relation y*x\n", "");
    let a = compile(&parse_quiver_dsl(&text).unwrap(), &f101(), DEFAULT_LENGTH_CAP).unwrap();
    assert_eq!(a.dim(), 4);
}

#[test]
fn hereditary_path_algebras() {
    let p = parse_quiver_dsl("vertex 1 2\narrow a: 1 -> 2\n").unwrap();
    let a = compile(&p, &f101(), DEFAULT_LENGTH_CAP).unwrap();
    assert_eq!(a.dim(), 3);
    assert!(a.validate().is_ok());
    // the arrow starts at 1, so it lies in A e_1
    assert_eq!(a.proj_dim(0), 2);
    assert_eq!(a.proj_dim(1), 1);
    let p = parse_quiver_dsl("vertex 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\n").unwrap();
    assert_eq!(compile(&p, &f101(), DEFAULT_LENGTH_CAP).unwrap().dim(), 6);
}

#[test]
fn free_loop_is_not_admissible() {
    let p = parse_quiver_dsl("vertex v\narrow x: v -> v\n").unwrap();
    assert!(matches!(compile(&p, &f101(), 10), Err(PresentationError::NotAdmissible { .. })));
}

#[test]
fn malformed_relations_are_rejected() {
    let err = parse_quiver_dsl("vertex 1 2 3\narrow x: 1 -> 2\narrow y: 1 -> 3\nrelation x + y\n").unwrap_err();
    assert!(matches!(err, PresentationError::BadRelation { line: 4, .. }), "{:?}", err);
    let err = parse_quiver_dsl("vertex 1\narrow x: 1 -> 2\n").unwrap_err();
    assert!(matches!(err, PresentationError::UnknownName { line: 2, .. }));
    let err = parse_quiver_dsl("vertex 1\nloop x\n").unwrap_err();
    assert!(matches!(err, PresentationError::Syntax { line: 2, col: 1, .. }));
    let err = parse_quiver_dsl("vertex 1\narrow x: 1 -> 1\nrelation x*x + + x*x*x\n").unwrap_err();
    assert!(matches!(err, PresentationError::Syntax { line: 3, .. }));
}

#[test]
fn non_homogeneous_relation() {
    // x^2 - x^3 generates (x^2) because 1 - x is a unit
    let p = parse_quiver_dsl("vertex v\narrow x: v -> v\nrelation x*x - x*x*x\n").unwrap();
    let a = compile(&p, &f101(), DEFAULT_LENGTH_CAP).unwrap();
    assert_eq!(a.dim(), 2);
    assert!(a.validate().unwrap().selfinjective);
}

#[test]
fn commutative_square() {
    let p = parse_quiver_dsl(
        "vertex 1 2 3 4\narrow a: 1 -> 2\narrow b: 2 -> 4\narrow c: 1 -> 3\narrow d: 3 -> 4\nrelation a*b - c*d\n",
    )
    .unwrap();
    let a = compile(&p, &Rationals, DEFAULT_LENGTH_CAP).unwrap();
    assert_eq!(a.dim(), 9);
    assert!(a.validate().is_ok());
}

#[test]
fn dsl_print_parse_fixed_point() {
    let text = "vertex 1 2\narrow a: 1 -> 2\narrow b: 2 -> 1\nrelation a*b - 3/2*a*b*a*b\nrelation -b*a\n";
    let p = parse_quiver_dsl(text).unwrap();
    let printed = p.to_string();
    let p2 = parse_quiver_dsl(&printed).unwrap();
    assert_eq!(p, p2);
    assert_eq!(printed, p2.to_string());
}

#[test]
fn kupisch_examples() {
    let f = f101();
    let a = nakayama(&KupischSeries::parse("2,1", Shape::Linear).unwrap(), &f).unwrap();
    assert_eq!(a.dim(), 3);
    assert_eq!((a.proj_dim(0), a.proj_dim(1)), (2, 1));
    let b = nakayama(&KupischSeries::parse("2,3", Shape::Cyclic).unwrap(), &f).unwrap();
    assert_eq!(b.dim(), 5);
    assert_eq!((b.proj_dim(0), b.proj_dim(1)), (2, 3));
    assert!(b.validate().is_ok());
    for n in 2..5 {
        let k = nakayama(&KupischSeries::new(vec![n], Shape::Cyclic).unwrap(), &f).unwrap();
        assert_eq!(k.dim(), n);
        assert!(k.validate().unwrap().selfinjective);
    }
    assert!(KupischSeries::parse("1,1", Shape::Linear).is_err());
    assert!(KupischSeries::parse("2,1,2,1", Shape::Linear).is_err());
    assert!(KupischSeries::parse("1", Shape::Linear).is_ok());
    assert!(KupischSeries::parse("3,1", Shape::Linear).is_err());
    assert!(KupischSeries::parse("2,2", Shape::Linear).is_err());
    assert!(KupischSeries::parse("1,2", Shape::Cyclic).is_err());
    assert!(KupischSeries::parse("4,2", Shape::Cyclic).is_err());
}

#[test]
fn json_round_trip() {
    let f = f101();
    let a = compile(&parse_quiver_dsl(LOCAL).unwrap(), &f, DEFAULT_LENGTH_CAP).unwrap();
    let text = write_algebra_json(&a);
    let b = read_algebra_json(&text, &f).unwrap();
    assert_eq!(a.mul_table(), b.mul_table());
    assert_eq!(a.labels(), b.labels());
    assert_eq!(parse_field_spec(&text).unwrap().characteristic, 101);

    let q = nakayama(&KupischSeries::parse("2,3", Shape::Cyclic).unwrap(), &Rationals).unwrap();
    let back = read_algebra_json(&write_algebra_json(&q), &Rationals).unwrap();
    assert_eq!(q.mul_table(), back.mul_table());
}

#[test]
fn json_schema_errors() {
    let f = f101();
    let a = compile(&parse_quiver_dsl(LOCAL).unwrap(), &f, DEFAULT_LENGTH_CAP).unwrap();
    let mut v = algebra_to_json(&a);
    v.as_object_mut().unwrap().remove("one");
    let err = read_algebra_json(&v.to_string(), &f).unwrap_err();
    assert_eq!(err, PresentationError::Schema("missing 'one'".into()));

    let mut v = algebra_to_json(&a);
    v.as_object_mut().unwrap().remove("rad_basis");
    let err = read_algebra_json(&v.to_string(), &f).unwrap_err();
    assert!(matches!(err, PresentationError::Algebra(AlgebraError::BadRadical(_))));

    let q = compile(&parse_quiver_dsl(LOCAL).unwrap(), &Rationals, DEFAULT_LENGTH_CAP).unwrap();
    let mut v = algebra_to_json(&q);
    v.as_object_mut().unwrap().remove("rad_basis");
    assert_eq!(read_algebra_json(&v.to_string(), &Rationals).unwrap().rad().len(), 2);
}
