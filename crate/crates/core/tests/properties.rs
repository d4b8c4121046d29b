use domdimlab::algebra::Alg;
use domdimlab::exactlin::{Field, Fp, Mat, Rationals};
use domdimlab::homology::{
    mho, mho_power, n_torsionfree, pd, strip_projective_summands, syzygy, tor_dims, torsionless, transpose,
    DimensionValue,
};
use domdimlab::modrep::{
    hom_dim, is_isomorphic, is_projective, module_from_json, module_to_json, IsoVerdict, Module,
};
use domdimlab::presentation::{
    nakayama, nakayama_presentation, parse_quiver_dsl, read_algebra_json, write_algebra_json, KupischSeries, Shape,
};
use proptest::prelude::*;

fn fp() -> Fp {
    Fp::new(101).unwrap()
}

fn kupisch() -> impl Strategy<Value = KupischSeries> {
    (1usize..=3, prop::collection::vec(1usize..=4, 3), any::<bool>()).prop_filter_map("invalid series", |(n, c, cyc)| {
        let shape = if cyc { Shape::Cyclic } else { Shape::Linear };
        KupischSeries::new(c[..n].to_vec(), shape).ok()
    })
}

fn small_matrix() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
    (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| (Just(r), Just(c), prop::collection::vec(-4i64..=4, r * c)))
}

fn mat_from<F: Field>(f: &F, r: usize, c: usize, v: &[i64]) -> Mat<F> {
    Mat::from_fn(f, r, c, |i, j| f.from_i64(v[i * c + j]))
}

/// `A e_v / A x` where `x` is the `pick`-th radical basis vector of `A e_v`,
/// plus a second such quotient when `second` is given.
fn cyclic_quotient<F: Field>(a: &Alg<F>, v: usize, pick: &[i64]) -> Module<F> {
    let one = |v: usize, pick: i64| {
        let p = Module::projective(a, v);
        let rad = p.rad_rows();
        if rad.rows() == 0 {
            return p;
        }
        let i = pick.unsigned_abs() as usize % (rad.rows() + 1);
        if i == rad.rows() {
            return p;
        }
        let sub = p.submodule(&rad.select_rows(&[i]));
        p.quotient(&sub.inclusion.transpose()).module
    };
    let m = one(v, pick[0]);
    match pick.get(1) {
        Some(&q) => Module::direct_sum(a, &[&m, &one((v + 1) % a.num_vertices(), q)]),
        None => m,
    }
}

fn module_case() -> impl Strategy<Value = (KupischSeries, usize, Vec<i64>)> {
    (kupisch(), 0usize..3, prop::collection::vec(0i64..6, 1..3)).prop_map(|(k, v, c)| {
        let n = k.lengths.len();
        (k, v % n, c)
    })
}

fn certified<F: Field>(v: IsoVerdict<F>) -> bool {
    match v {
        IsoVerdict::ProbablyNo { .. } => panic!("isomorphism search was inconclusive"),
        v => v.is_yes(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn rank_plus_nullity((r, c, v) in small_matrix()) {
        let f = fp();
        let m = mat_from(&f, r, c, &v);
        let k = m.kernel_basis();
        prop_assert_eq!(m.rank() + k.rows(), c);
        if k.rows() > 0 {
            prop_assert!(m.mul(&k.transpose()).is_zero());
        }
        let q = mat_from(&Rationals, r, c, &v);
        prop_assert!(q.rank() >= m.rank());
    }

    #[test]
    fn solve_recovers_consistent_systems((r, c, v) in small_matrix(), x in prop::collection::vec(-4i64..=4, 6)) {
        let f = fp();
        let m = mat_from(&f, r, c, &v);
        let x = mat_from(&f, c, 1, &x[..c]);
        let b = m.mul(&x);
        let y = m.solve(&b).expect("b is in the image");
        prop_assert_eq!(m.mul(&y), b);
    }

    #[test]
    fn nakayama_algebras_are_valid(k in kupisch()) {
        let a = nakayama(&k, &fp()).unwrap();
        prop_assert!(a.validate().is_ok());
        prop_assert_eq!(a.dim(), k.lengths.iter().sum::<usize>());
        for (v, &c) in k.lengths.iter().enumerate() {
            prop_assert_eq!(a.proj_dim(v), c);
        }
        prop_assert!(a.opposite().opposite().same_as(&a));
        prop_assert_eq!(a.enveloping().dim(), a.dim() * a.dim());
        prop_assert!(a.center_dim() >= 1);
    }

    #[test]
    fn presentations_round_trip(k in kupisch()) {
        let p = nakayama_presentation(&k);
        let again = parse_quiver_dsl(&p.to_string()).unwrap();
        prop_assert_eq!(&again, &p);
        let f = fp();
        let a = nakayama(&k, &f).unwrap();
        let b = read_algebra_json(&write_algebra_json(&a), &f).unwrap();
        prop_assert!(a.same_as(&b));
    }

    #[test]
    fn module_basics((k, v, c) in module_case()) {
        let f = fp();
        let a = nakayama(&k, &f).unwrap();
        let m = cyclic_quotient(&a, v, &c);
        prop_assert!(m.dual().dual().same_as(&m));
        prop_assert!(module_from_json(&a, &module_to_json(&m)).unwrap().same_as(&m));
        for w in 0..a.num_vertices() {
            prop_assert_eq!(hom_dim(&Module::projective(&a, w), &m), m.dim_vector()[w]);
        }
        let om = syzygy(&m, 1);
        let (top, _) = (m.top().module.dim_vector(), 0);
        let p0: usize = top.iter().enumerate().map(|(w, &t)| t * a.proj_dim(w)).sum();
        prop_assert_eq!(p0, m.dim() + om.dim());
        if let (DimensionValue::Exact(p), DimensionValue::Exact(q)) = (pd(&m, 12), pd(&om, 12)) {
            prop_assert_eq!(q, p.saturating_sub(1));
        }
        prop_assert_eq!(torsionless(&m), n_torsionfree(&m, 1));
    }

    #[test]
    fn isomorphism_survives_base_change((k, v, c) in module_case(), seed in 0u64..1000) {
        let f = fp();
        let a = nakayama(&k, &f).unwrap();
        let m = cyclic_quotient(&a, v, &c);
        let d = m.dim();
        // unitriangular change of basis with pseudo-random entries
        let mut s = seed;
        let p = Mat::from_fn(&f, d, d, |i, j| {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            if i == j { f.one() } else if i < j { f.from_i64((s >> 33) as i64 % 7) } else { f.zero() }
        });
        let pinv = p.solve(&Mat::identity(&f, d)).unwrap();
        let actions = m.actions().iter().map(|x| pinv.mul(x).mul(&p)).collect();
        let n = Module::new(&a, actions).unwrap();
        prop_assert!(certified(is_isomorphic(&m, &n, seed)));
    }

    #[test]
    fn transposes_and_mho((k, v, c) in module_case()) {
        let f = fp();
        let a = nakayama(&k, &f).unwrap();
        let m = cyclic_quotient(&a, v, &c);
        let (core, _) = strip_projective_summands(&m, 3);
        if !core.is_zero() {
            prop_assert!(certified(is_isomorphic(&transpose(&transpose(&core)), &core, 5)));
        }
        for j in 1..=2 {
            prop_assert_eq!(mho_power(&m, j).dim(), transpose(&syzygy(&transpose(&m), j)).dim());
        }
        if torsionless(&m) && !is_projective(&m) && !core.is_zero() && core.dim() == m.dim() {
            let back = syzygy(&mho(&m), 1);
            prop_assert_eq!(back.dim(), m.dim());
        }
    }

    #[test]
    fn tor_is_dual_to_ext((k, v, c) in module_case(), (w, c2) in (0usize..3, prop::collection::vec(0i64..6, 1..3))) {
        let f = fp();
        let a = nakayama(&k, &f).unwrap();
        let op = a.opposite();
        let n = cyclic_quotient(&a, v, &c);
        let m = cyclic_quotient(&op, w % op.num_vertices(), &c2);
        let t = tor_dims(&m, &n, 5);
        prop_assert_eq!(&t.direct, &t.via_ext);
    }
}
