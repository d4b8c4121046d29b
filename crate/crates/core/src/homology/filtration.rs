use crate::algebra::Alg;
use crate::exactlin::Field;
use crate::modrep::Module;

use super::{dominant_dimension, domdim, n_torsionfree, sample_modules, syzygy};

/// One sampled module at one level `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationRow {
    pub sample: usize,
    pub i: usize,
    /// `domdim(M) >= i`
    pub domdim_ge: bool,
    /// `M` is `i`-torsionfree
    pub torsionfree: bool,
    /// `Ω^i(M)` is `i`-torsionfree and has dominant dimension `>= i`
    pub syzygy_ok: bool,
}

impl FiltrationRow {
    pub fn consistent(&self) -> bool {
        self.domdim_ge == self.torsionfree && self.syzygy_ok
    }
}

#[derive(Clone, Debug)]
pub struct FiltrationReport {
    pub n: usize,
    /// Whether `domdim(A) >= n`; rows are only produced when it holds.
    pub hypothesis: bool,
    pub rows: Vec<FiltrationRow>,
}

impl FiltrationReport {
    pub fn consistent(&self) -> bool {
        self.rows.iter().all(FiltrationRow::consistent)
    }
}

/// For `domdim(A) >= n`, compares on sampled modules, for `1 <= i <= n`:
/// dominant dimension `>= i`, `i`-torsionfreeness, and the forward
/// inclusion for constructed syzygies `Ω^i(M)`.
///
/// Membership in `Ω^i(mod A)` is not decidable directly, so the syzygy side
/// is only tested on modules built as syzygies.
pub fn syzygy_filtration_check<F: Field>(alg: &Alg<F>, n: usize, max_samples: usize) -> FiltrationReport {
    let hypothesis = domdim(alg, n).at_least(n) == Some(true);
    let mut rows = Vec::new();
    if hypothesis {
        let samples: Vec<Module<F>> = sample_modules(alg, max_samples);
        for (s, m) in samples.iter().enumerate() {
            let dd = dominant_dimension(m, n);
            for i in 1..=n {
                let om = syzygy(m, i);
                let syzygy_ok =
                    om.is_zero() || (n_torsionfree(&om, i) && dominant_dimension(&om, i).at_least(i) == Some(true));
                rows.push(FiltrationRow {
                    sample: s,
                    i,
                    domdim_ge: dd.at_least(i) == Some(true),
                    torsionfree: n_torsionfree(m, i),
                    syzygy_ok,
                });
            }
        }
    }
    FiltrationReport { n, hypothesis, rows }
}
