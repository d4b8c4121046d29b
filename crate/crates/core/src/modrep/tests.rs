use super::bimodule::*;
use super::*;
use crate::exactlin::{Fp, Rationals};
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

fn nak21<F: Field>(f: &F) -> Alg<F> {
    nakayama(&KupischSeries::parse("2,1", Shape::Linear).unwrap(), f).unwrap()
}

/// Hom dimension straight from the intertwining equations `X a_M(b) = a_N(b) X`.
fn brute_hom_dim<F: Field>(m: &Module<F>, n: &Module<F>) -> usize {
    let f = m.field();
    let (dm, dn) = (m.dim(), n.dim());
    let d = m.alg().dim();
    let mut eq = Mat::zeros(f, d * dn * dm, dn * dm);
    for b in 0..d {
        let (a, c) = (m.action(b), n.action(b));
        for i in 0..dn {
            for j in 0..dm {
                let r = b * dn * dm + i * dm + j;
                for k in 0..dm {
                    let x = eq.get(r, i * dm + k).clone();
                    eq.set(r, i * dm + k, f.add(&x, a.get(k, j)));
                }
                for k in 0..dn {
                    let x = eq.get(r, k * dm + j).clone();
                    eq.set(r, k * dm + j, f.sub(&x, c.get(i, k)));
                }
            }
        }
    }
    dn * dm - eq.rank()
}

fn omega2_simple<F: Field>(a: &Alg<F>) -> Module<F> {
    let s = Module::simple(a, 0);
    let r = resolution(&s);
    let mut g = r.lock();
    g.syzygy(2)
}

#[test]
fn regular_and_coregular() {
    let f = f101();
    let k2 = kxn(2, &f);
    let (r, c) = (Module::regular(&k2), Module::coregular(&k2));
    assert_eq!((r.dim(), c.dim()), (2, 2));
    assert!(is_isomorphic(&r, &c, 1).is_yes());
    let n = nak21(&f);
    let (r, c) = (Module::regular(&n), Module::coregular(&n));
    assert!(matches!(is_isomorphic(&r, &c, 1), IsoVerdict::No(_)));
    assert_ne!(r.socle_vector(), c.socle_vector());
}

#[test]
fn module_axioms_are_checked() {
    let f = f101();
    let k2 = kxn(2, &f);
    let good = Module::new(&k2, k2.left_mult().to_vec()).unwrap();
    assert_eq!(good.dim(), 2);
    let mut bad = k2.left_mult().to_vec();
    bad[1] = Mat::identity(&f, 2);
    assert!(matches!(Module::new(&k2, bad), Err(ModError::NotAModule(_))));
}

#[test]
fn duality() {
    let f = f101();
    let a = local(&f);
    let s = Module::simple(&a, 0);
    assert_eq!(s.dual().dim(), 1);
    let u = omega2_simple(&a);
    let dd = u.dual().dual().over(&a).unwrap();
    assert!(is_isomorphic(&u, &dd, 3).is_yes());
    let cor = Module::regular(&a.opposite()).dual();
    assert!(cor.same_as(&Module::coregular(&a)));
}

#[test]
fn hom_matches_brute_force() {
    let f = f101();
    for a in [local(&f), nak21(&f), kxn(3, &f)] {
        let mut mods = vec![Module::regular(&a), Module::coregular(&a)];
        for v in 0..a.num_vertices() {
            mods.push(Module::simple(&a, v));
            mods.push(Module::projective(&a, v));
            mods.push(Module::injective(&a, v));
        }
        mods.push(omega2_simple(&a));
        for m in &mods {
            for n in &mods {
                let h = hom_space(m, n);
                assert_eq!(h.dim(), brute_hom_dim(m, n));
                for b in h.basis() {
                    assert!(Morphism::new(m.clone(), n.clone(), b.clone()).is_ok());
                }
            }
        }
        let reg = Module::regular(&a);
        for m in &mods {
            assert_eq!(hom_dim(&reg, m), m.dim());
        }
    }
    let n = nak21(&f);
    assert_eq!(hom_dim(&Module::simple(&n, 0), &Module::simple(&n, 1)), 0);
    // End of U = S^4 is all of M_4(K)
    let u = omega2_simple(&local(&f));
    assert_eq!(hom_dim(&u, &u), 16);
}

#[test]
fn a_dual_and_evaluation() {
    let f = f101();
    let a = local(&f);
    let reg = Module::regular(&a);
    let d = a_dual(&reg);
    assert!(is_isomorphic(&d.module, &Module::regular(&a.opposite()), 5).is_yes());
    let (ev, _, _) = evaluation_map(&reg).unwrap();
    assert!(ev.is_iso());

    let u = omega2_simple(&a);
    assert_eq!(u.dim(), 4);
    let (ev, d1, d2) = evaluation_map(&u).unwrap();
    assert_eq!(d1.module.dim(), 8);
    assert_eq!(d2.module.dim(), 16);
    assert!(ev.is_injective() && !ev.is_surjective());

    let k2 = kxn(2, &f);
    let s = Module::simple(&k2, 0);
    assert_eq!(a_dual(&s).module.dim(), 1);

    let z = Module::zero(&a);
    let (ev, _, _) = evaluation_map(&z).unwrap();
    assert_eq!(ev.matrix.shape(), (0, 0));
}

#[test]
fn tensor_products() {
    let f = f101();
    for a in [local(&f), nak21(&f), kxn(3, &f)] {
        let op = a.opposite();
        let reg_op = Module::regular(&op);
        let mods: Vec<Module<Fp>> = (0..a.num_vertices())
            .flat_map(|v| [Module::simple(&a, v), Module::projective(&a, v), Module::injective(&a, v)])
            .collect();
        for n in &mods {
            assert_eq!(tensor_dim(&reg_op, n).unwrap(), n.dim());
        }
        assert_eq!(tensor_dim(&Module::coregular(&op), &Module::regular(&a)).unwrap(), a.dim());
        let rights: Vec<Module<Fp>> = (0..a.num_vertices())
            .flat_map(|v| [Module::simple(&op, v), Module::projective(&op, v), Module::injective(&op, v)])
            .collect();
        for m in &rights {
            for n in &mods {
                assert_eq!(tensor_dim(m, n).unwrap(), hom_dim(m, &n.dual()));
            }
        }
    }
}

#[test]
fn tops_socles_radicals() {
    let f = f101();
    let n = nak21(&f);
    assert_eq!(Module::regular(&n).top().module.dim_vector(), vec![1, 1]);
    let rad_p1 = Module::projective(&n, 0).rad_module().module;
    assert!(is_isomorphic(&rad_p1, &Module::simple(&n, 1), 0).is_yes());
    let k2 = kxn(2, &f);
    let soc = Module::regular(&k2).socle_rows();
    assert_eq!(soc.rows(), 1);
    assert_eq!(soc.row(0), &[0, 1]);
}

#[test]
fn covers_and_envelopes() {
    let f = f101();
    let a = local(&f);
    let s = Module::simple(&a, 0);
    let (p, cover) = projective_cover(&s);
    assert_eq!(p.dim(), 3);
    assert_eq!(cover.kernel().module.dim(), 2);
    for v in 0..a.num_vertices() {
        let pv = Module::projective(&a, v);
        let (q, c) = projective_cover(&pv);
        assert_eq!(q.verts(), &[v]);
        assert!(c.is_iso());
    }
    let n = nak21(&f);
    let (verts, env) = injective_envelope(&Module::regular(&n));
    assert!(env.is_injective());
    assert!(is_projective(&env.target));
    assert_eq!(verts.len(), 2);
    let k2 = kxn(2, &f);
    let (_, env) = injective_envelope(&Module::simple(&k2, 0));
    assert!(is_isomorphic(&env.target, &Module::regular(&k2), 0).is_yes());
    let i = Module::coregular(&n);
    let (_, env) = injective_envelope(&i);
    assert!(env.is_iso());
}

#[test]
fn projectivity_and_injectivity() {
    let f = f101();
    let a = local(&f);
    assert!(is_projective(&Module::regular(&a)));
    assert!(is_injective(&Module::coregular(&a)));
    let s = Module::simple(&a, 0);
    assert!(!is_projective(&s) && !is_injective(&s));
}

#[test]
fn isomorphism_verdicts() {
    let f = f101();
    let n = nak21(&f);
    let p = Module::projective(&n, 0);
    match is_isomorphic(&p, &p, 0) {
        IsoVerdict::Yes(w) => assert!(w.is_iso()),
        other => panic!("{:?}", other.label()),
    }
    assert!(matches!(is_isomorphic(&Module::simple(&n, 0), &Module::simple(&n, 1), 0), IsoVerdict::No(_)));
    // F_3 is too small for a 4-dimensional module: witness over an extension
    let f3 = Fp::new(3).unwrap();
    let u = omega2_simple(&local(&f3));
    let perm = {
        let mut acts = Vec::new();
        let t = Mat::from_i64(&f3, &[&[0, 1, 0, 0], &[1, 1, 0, 0], &[0, 0, 2, 0], &[0, 0, 1, 1]]);
        let ti = t.inverse().unwrap();
        for b in u.actions() {
            acts.push(ti.mul(b).mul(&t));
        }
        Module::new(u.alg(), acts).unwrap()
    };
    assert!(is_isomorphic(&u, &perm, 7).is_yes());
}

#[test]
fn indecomposability_examples() {
    let f = f101();
    let n = nak21(&f);
    for v in 0..2 {
        assert!(is_indecomposable(&Module::simple(&n, v)));
        assert!(is_indecomposable(&Module::projective(&n, v)));
    }
    assert!(!is_indecomposable(&Module::regular(&n)));
    let a = local(&f);
    assert!(!is_indecomposable(&omega2_simple(&a)));
    assert!(is_indecomposable(&Module::regular(&a)));
    assert!(is_indecomposable(&Module::coregular(&a)));
    let q = local(&Rationals);
    assert!(!is_indecomposable(&omega2_simple(&q)));
}

#[test]
fn bimodule_basics() {
    let f = f101();
    for a in [local(&f), nak21(&f), kxn(2, &f)] {
        let r = regular_bimodule(&a);
        let d = coregular_bimodule(&a);
        assert_eq!((r.dim(), d.dim()), (a.dim(), a.dim()));
        assert!(Module::new(r.alg(), r.actions().to_vec()).is_ok());
        assert!(Module::new(d.alg(), d.actions().to_vec()).is_ok());
        let left = restrict_left(&a, &r).unwrap();
        assert!(left.same_as(&Module::regular(&a)));
        let dl = restrict_left(&a, &d).unwrap();
        assert!(is_isomorphic(&dl, &Module::coregular(&a), 0).is_yes());
        // A ⊗_A X ≅ X
        let t = tensor_bimodules(&a, &r, &d).unwrap();
        assert!(is_isomorphic(&t, &d, 0).is_yes());
        let back = swap_from_opposite(&a, &swap_to_opposite(&a, &d).unwrap()).unwrap();
        assert!(back.same_as(&d));
    }
    let k2 = kxn(2, &f);
    assert!(is_isomorphic(&regular_bimodule(&k2), &coregular_bimodule(&k2), 0).is_yes());
}

#[test]
fn hom_tensor_adjunction_dimensions() {
    let f = f101();
    for a in [nak21(&f), kxn(2, &f), local(&f)] {
        let r = regular_bimodule(&a);
        let d = coregular_bimodule(&a);
        let samples = [r.clone(), d.clone(), tensor_bimodules(&a, &d, &d).unwrap()];
        for m in &samples {
            for n in &samples {
                for l in &samples {
                    let lhs = hom_dim(
                        &restrict_left(&a, &tensor_bimodules(&a, m, n).unwrap()).unwrap(),
                        &restrict_left(&a, l).unwrap(),
                    );
                    let rhs = hom_dim(
                        &restrict_left(&a, n).unwrap(),
                        &restrict_left(&a, &bimodule_hom(&a, m, l).unwrap()).unwrap(),
                    );
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}

#[test]
fn module_json_round_trip() {
    let f = f101();
    let a = local(&f);
    let u = omega2_simple(&a);
    let v = module_to_json(&u);
    let back = module_from_json(&a, &v).unwrap();
    assert!(back.same_as(&u));
    let other = nak21(&f);
    assert_eq!(module_from_json(&other, &v).unwrap_err(), ModError::AlgebraMismatch);
}
