use crate::algebra::Alg;
use crate::exactlin::Field;
use crate::modrep::Module;

use super::{cosyzygy, syzygy};

/// Deterministic module samples: simples, their first two syzygies and
/// first cosyzygy, radicals and socle quotients of the indecomposable
/// projectives, and direct sums of consecutive pairs. Zero modules and
/// repeats are dropped; at most `max` are returned.
pub fn sample_modules<F: Field>(alg: &Alg<F>, max: usize) -> Vec<Module<F>> {
    let mut base: Vec<Module<F>> = Vec::new();
    for v in 0..alg.num_vertices() {
        let s = Module::simple(alg, v);
        base.push(syzygy(&s, 1));
        base.push(syzygy(&s, 2));
        base.push(cosyzygy(&s, 1));
        base.push(s);
        let p = Module::projective(alg, v);
        base.push(p.rad_module().module);
        base.push(p.quotient(&p.socle_rows()).module);
    }
    let mut out: Vec<Module<F>> = Vec::new();
    let push = |m: Module<F>, out: &mut Vec<Module<F>>| {
        if !m.is_zero() && !out.iter().any(|o| o.same_as(&m)) {
            out.push(m);
        }
    };
    for m in &base {
        push(m.clone(), &mut out);
    }
    let singles = out.clone();
    for w in singles.windows(2) {
        push(Module::direct_sum(alg, &[&w[0], &w[1]]), &mut out);
    }
    out.truncate(max);
    out
}
