use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::algebra::Alg;
use crate::exactlin::{Field, Mat};
use crate::homology::{domdim, higher_transpose, n_torsionfree, strip_projective_summands, syzygy, DimensionValue};
use crate::modrep::bimodule::{regular_bimodule, swap_from_opposite};
use crate::modrep::{evaluation_map, hom_space, is_isomorphic, is_projective, IsoVerdict};

use super::canonical::{canonical_bimodule, fky_bimodule};
use super::LabError;

/// The syzygy-type condition at level `n`.
#[derive(Clone, Debug)]
pub enum SyzygyCondition<F: Field> {
    /// `n = 1`: the regular bimodule is torsionless.
    Torsionless(bool),
    /// `A ≅ Ω^n(J_{n-2}(V))` as bimodules.
    Iso { verdict: IsoVerdict<F>, target_dim: usize },
    /// `A` is a projective bimodule, so `J_{n-2}(V) = 0`; both sides are
    /// compared after removing projective summands.
    StableIso { holds: bool, target_dim: usize },
}

impl<F: Field> SyzygyCondition<F> {
    /// `None` when an isomorphism search found nothing without an exact
    /// obstruction.
    pub fn holds(&self) -> Option<bool> {
        match self {
            SyzygyCondition::Torsionless(b) => Some(*b),
            SyzygyCondition::Iso { verdict, .. } => match verdict {
                IsoVerdict::Yes(_) | IsoVerdict::YesOverExtension { .. } => Some(true),
                IsoVerdict::No(_) => Some(false),
                IsoVerdict::ProbablyNo { .. } => None,
            },
            SyzygyCondition::StableIso { holds, .. } => Some(*holds),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            SyzygyCondition::Torsionless(b) => json!({"kind": "torsionless", "holds": b}),
            SyzygyCondition::Iso { verdict, target_dim } => {
                let mut v = verdict.to_json();
                v["kind"] = json!("iso");
                v["target_dim"] = json!(target_dim);
                v
            }
            SyzygyCondition::StableIso { holds, target_dim } => {
                json!({"kind": "stable_iso", "verdict": if *holds { "yes" } else { "no" }, "target_dim": target_dim})
            }
        }
    }
}

/// Verdicts at one level `n`.
#[derive(Clone, Debug)]
pub struct TheoremRow<F: Field> {
    pub n: usize,
    /// `domdim(A) >= n`; `None` when `n` exceeds what the cap decides.
    pub domdim: Option<bool>,
    /// The regular bimodule is `n`-torsionfree.
    pub torsionfree: bool,
    pub syzygy: SyzygyCondition<F>,
    /// `A` is an `n`-th syzygy bimodule: witnessed when the isomorphism
    /// holds, undecided otherwise.
    pub nth_syzygy: Option<bool>,
    pub agreement: bool,
}

#[derive(Clone, Debug)]
pub struct TheoremReport<F: Field> {
    pub algebra: String,
    pub cap: usize,
    pub domdim: DimensionValue,
    pub rows: Vec<TheoremRow<F>>,
    pub agreement: bool,
}

impl<F: Field> TheoremReport<F> {
    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                json!({
                    "algebra": self.algebra,
                    "theorem": "main_theorem",
                    "n": r.n,
                    "conditions": {
                        "domdim": r.domdim,
                        "torsionfree": r.torsionfree,
                        "syzygy_iso": r.syzygy.to_json(),
                        "nth_syzygy": r.nth_syzygy,
                    },
                    "cap": self.cap,
                    "agreement": r.agreement,
                })
            })
            .collect();
        json!({
            "algebra": self.algebra,
            "cap": self.cap,
            "domdim": self.domdim.to_json(),
            "rows": rows,
            "agreement": self.agreement,
        })
    }

    /// `Err(Disagreement)` unless every row agrees.
    pub fn into_result(self) -> Result<Self, LabError> {
        if self.agreement {
            Ok(self)
        } else {
            let bad: Vec<usize> = self.rows.iter().filter(|r| !r.agreement).map(|r| r.n).collect();
            Err(LabError::Disagreement(format!("main theorem verdicts differ at n = {:?}", bad)))
        }
    }
}

/// For `n = 1..=n_max` computes independently: `domdim(A) >= n` from the
/// injective coresolution, `n`-torsionfreeness of the regular bimodule, and
/// `A ≅ Ω^n(J_{n-2}(V))` (torsionlessness for `n = 1`).
pub fn check_main_theorem<F: Field>(a: &Alg<F>, n_max: usize, cap: usize, seed: u64) -> Result<TheoremReport<F>, LabError> {
    if n_max == 0 {
        return Err(LabError::Precondition("n_max must be at least 1".into()));
    }
    let dd = domdim(a, cap.max(n_max));
    let reg = regular_bimodule(a);
    let separable = is_projective(&reg);
    let v = canonical_bimodule(a, seed)?.v;
    let mut rows = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let dom = dd.at_least(n);
        let tf = n_torsionfree(&reg, n);
        let syz = if n == 1 {
            let ev = evaluation_map(&reg)?.0;
            SyzygyCondition::Torsionless(ev.is_injective())
        } else {
            let target = swap_from_opposite(a, &syzygy(&higher_transpose(&v, n - 2), n))?;
            if separable {
                let (core, _) = strip_projective_summands(&target, seed);
                SyzygyCondition::StableIso { holds: core.is_zero(), target_dim: target.dim() }
            } else {
                SyzygyCondition::Iso { verdict: is_isomorphic(&reg, &target, seed), target_dim: target.dim() }
            }
        };
        // an inconclusive search counts as "no"; the JSON keeps the label
        let iso = syz.holds().unwrap_or(false);
        let nth_syzygy = if iso { Some(true) } else { None };
        let agreement = dom == Some(tf) && iso == tf;
        rows.push(TheoremRow { n, domdim: dom, torsionfree: tf, syzygy: syz, nth_syzygy, agreement });
    }
    let agreement = rows.iter().all(|r| r.agreement);
    Ok(TheoremReport { algebra: a.fingerprint_hex(), cap, domdim: dd, rows, agreement })
}

/// Comparison of `domdim >= 1` and `domdim >= 2` with a bimodule
/// monomorphism, respectively isomorphism, `A -> Hom_A(D(A), Hom_A(V, A))`.
#[derive(Clone, Debug)]
pub struct FkyReport<F: Field> {
    pub target_dim: usize,
    /// A monomorphism was found (`Some(true)`), excluded exactly
    /// (`Some(false)`), or not found by search (`None`).
    pub mono: Option<bool>,
    pub mono_witness: Option<Mat<F>>,
    /// The evaluation map of the regular bimodule is injective.
    pub ev_injective: bool,
    pub iso: IsoVerdict<F>,
    pub domdim: DimensionValue,
    pub agreement: bool,
}

impl<F: Field> FkyReport<F> {
    pub fn to_json(&self) -> Value {
        json!({
            "target_dim": self.target_dim,
            "mono": self.mono,
            "mono_witness": self.mono_witness.as_ref().map(|m| m.to_json()),
            "ev_injective": self.ev_injective,
            "iso": self.iso.to_json(),
            "domdim": self.domdim.to_json(),
            "agreement": self.agreement,
        })
    }
}

pub fn fky_check<F: Field>(a: &Alg<F>, cap: usize, seed: u64) -> Result<FkyReport<F>, LabError> {
    let f = a.field();
    let reg = regular_bimodule(a);
    let v = canonical_bimodule(a, seed)?.v;
    let h = fky_bimodule(a, &v)?;
    let (mono, mono_witness) = if h.dim() < reg.dim() {
        (Some(false), None)
    } else {
        let hs = hom_space(&reg, &h);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut cands: Vec<Mat<F>> = hs.basis().to_vec();
        if hs.dim() > 0 {
            for _ in 0..20 {
                let c: Vec<F::Elem> = (0..hs.dim()).map(|_| f.random(&mut rng, 1000)).collect();
                cands.push(hs.combine(f, &c));
            }
        }
        match cands.into_iter().find(|m| m.rank() == reg.dim()) {
            Some(w) => (Some(true), Some(w)),
            None if hs.dim() == 0 => (Some(false), None),
            None => (None, None),
        }
    };
    let ev_injective = evaluation_map(&reg)?.0.is_injective();
    let iso = is_isomorphic(&reg, &h, seed);
    let dd = domdim(a, cap.max(2));
    let ge1 = dd.at_least(1) == Some(true);
    let ge2 = dd.at_least(2) == Some(true);
    let agreement = mono.unwrap_or(false) == ge1 && ev_injective == ge1 && iso.is_yes() == ge2;
    Ok(FkyReport { target_dim: h.dim(), mono, mono_witness, ev_injective, iso, domdim: dd, agreement })
}
