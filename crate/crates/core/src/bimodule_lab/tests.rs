use super::*;
use crate::algebra::Alg;
use crate::exactlin::{Field, Fp};
use crate::homology::DimensionValue;
use crate::modrep::bimodule::{coregular_bimodule, regular_bimodule};
use crate::modrep::{hom_dim, is_isomorphic, Module};
use crate::presentation::{compile, nakayama, parse_quiver_dsl, KupischSeries, Shape, DEFAULT_LENGTH_CAP};

const LOCAL: &str = "vertex v\narrow x: v -> v\narrow y: v -> v\nrelation x*x\nrelation y*y\nrelation x*y\nrelation y*x\n";

fn f101() -> Fp {
    Fp::new(101).unwrap()
}

fn local<F: Field>(f: &F) -> Alg<F> {
    compile(&parse_quiver_dsl(LOCAL).unwrap(), f, DEFAULT_LENGTH_CAP).unwrap()
}

fn kxn<F: Field>(n: usize, f: &F) -> Alg<F> {
    nakayama(&KupischSeries::new(vec![n], Shape::Cyclic).unwrap(), f).unwrap()
}

fn nak<F: Field>(s: &str, shape: Shape, f: &F) -> Alg<F> {
    nakayama(&KupischSeries::parse(s, shape).unwrap(), f).unwrap()
}

#[test]
fn canonical_bimodule_dims() {
    let f = f101();
    for a in [kxn(2, &f), nak("2,1", Shape::Linear, &f), nak("2,3", Shape::Cyclic, &f), local(&f)] {
        let c = canonical_bimodule(&a, 1).unwrap();
        let expected = hom_dim(&Module::coregular(&a), &Module::regular(&a));
        assert_eq!(c.v.dim(), expected);
    }
    let aus = nak("2,3", Shape::Cyclic, &f);
    assert!(is_isomorphic(&canonical_bimodule(&aus, 1).unwrap().v, &regular_bimodule(&aus), 1).is_yes());
    let n21 = nak("2,1", Shape::Linear, &f);
    assert!(!is_isomorphic(&canonical_bimodule(&n21, 1).unwrap().v, &regular_bimodule(&n21), 1).is_yes());
}

#[test]
fn isomorphism_checks() {
    let f = f101();
    for a in [local(&f), nak("2,1", Shape::Linear, &f), nak("2,3", Shape::Cyclic, &f)] {
        assert!(iso_check_1(&a, 2).holds());
        for x in [regular_bimodule(&a), coregular_bimodule(&a)] {
            assert!(iso_check_2(&a, &x, 2).unwrap().holds());
        }
        assert!(iso_check_3(&a, 2).unwrap().holds());
    }
}

#[test]
fn main_theorem_rows() {
    let f = f101();
    let r = check_main_theorem(&nak("2,1", Shape::Linear, &f), 3, 8, 1).unwrap();
    assert!(r.agreement, "{}", r.to_json());
    assert_eq!(r.rows.iter().map(|x| x.torsionfree).collect::<Vec<_>>(), vec![true, false, false]);
    let r = check_main_theorem(&nak("2,3", Shape::Cyclic, &f), 3, 8, 1).unwrap();
    assert!(r.agreement, "{}", r.to_json());
    assert_eq!(r.rows.iter().map(|x| x.torsionfree).collect::<Vec<_>>(), vec![true, true, false]);
    let r = check_main_theorem(&kxn(2, &f), 4, 8, 1).unwrap();
    assert!(r.agreement && r.rows.iter().all(|x| x.torsionfree), "{}", r.to_json());
    let r = check_main_theorem(&local(&f), 1, 8, 1).unwrap();
    assert!(r.agreement && !r.rows[0].torsionfree, "{}", r.to_json());
}

#[test]
fn fky_characterizations() {
    let f = f101();
    for a in [nak("2,1", Shape::Linear, &f), nak("2,3", Shape::Cyclic, &f), local(&f), kxn(2, &f)] {
        let r = fky_check(&a, 8, 3).unwrap();
        assert!(r.agreement, "{}", r.to_json());
    }
    let r = fky_check(&nak("2,1", Shape::Linear, &f), 8, 3).unwrap();
    assert_eq!(r.mono, Some(true));
    assert!(!r.iso.is_yes());
}

#[test]
fn ext_formula_for_dominant_dimension() {
    let f = f101();
    let r = domdim_via_ext_formula(&nak("2,3", Shape::Cyclic, &f), 8, 1).unwrap();
    assert_eq!(r.inf_reading, DimensionValue::Exact(2), "{}", r.to_json());
    assert!(r.inf_agrees);
    let r = domdim_via_ext_formula(&kxn(3, &f), 6, 1).unwrap();
    assert_eq!(r.inf_reading, DimensionValue::AtLeast(7));
    assert!(domdim_via_ext_formula(&nak("2,1", Shape::Linear, &f), 8, 1).is_err());
}

#[test]
fn gendo_symmetric_routes() {
    let f = f101();
    let r = gendo_symmetric_report(&nak("2,3", Shape::Cyclic, &f), 8, 1).unwrap();
    assert!(r.by_v && r.by_base && r.agreement, "{}", r.to_json());
    let (_, v, ok) = r.ext_formula.clone().unwrap();
    assert_eq!(v, DimensionValue::Exact(2));
    assert!(ok);
    let r = gendo_symmetric_report(&kxn(2, &f), 8, 1).unwrap();
    assert!(r.by_v && r.by_base);
    let r = gendo_symmetric_report(&nak("2,1", Shape::Linear, &f), 8, 1).unwrap();
    assert!(!r.by_v && !r.by_base && r.agreement);
}

#[test]
fn hochschild_two_ways() {
    let f = f101();
    let r = hochschild_report(&nak("2,3", Shape::Cyclic, &f), 4, 8, 1).unwrap();
    assert!(r.consistent(), "{}", r.to_json());
    assert_eq!(r.formulas_agree(), Some(true));
    assert_eq!(r.vanishing, Some(true));
    for a in [local(&f), nak("2,1", Shape::Linear, &f), kxn(3, &f)] {
        let r = hochschild_report(&a, 2, 8, 1).unwrap();
        assert!(r.consistent(), "{}", r.to_json());
    }
}

#[test]
fn projective_dimensions_of_bimodules() {
    let f = f101();
    let r = pd_bimodule_report(&nak("2,1", Shape::Linear, &f), 8);
    assert_eq!((r.coregular, r.gldim), (DimensionValue::Exact(1), DimensionValue::Exact(1)));
    let r = pd_bimodule_report(&nak("2,3", Shape::Cyclic, &f), 8);
    assert_eq!((r.coregular, r.gldim), (DimensionValue::Exact(4), DimensionValue::Exact(2)));
}

#[test]
fn conjecture_probes() {
    let f = f101();
    let p = conjecture_probe(&kxn(3, &f), 6, 1);
    assert!(p.selfinjective && p.nakayama && p.tachikawa() && p.gp.holds_up_to_bound());
    assert!(p.contradictions.is_empty());
    for a in [nak("2,1", Shape::Linear, &f), nak("2,3", Shape::Cyclic, &f)] {
        let p = conjecture_probe(&a, 6, 1);
        assert!(!p.selfinjective && !p.gp.holds_up_to_bound(), "{}", p.to_json());
        assert!(p.contradictions.is_empty(), "{}", p.to_json());
    }
    assert!(bimodule_dual_ext_bridge(&kxn(2, &f), 0).agrees());
}
