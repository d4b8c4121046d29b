use serde_json::{json, Value};

use crate::algebra::Alg;
use crate::exactlin::{Field, Mat};
use crate::homology::{
    domdim, ext_dims, gldim, gorenstein_projective_up_to, higher_ar_translate, pd, tor_dims, DimensionValue, GpReport,
};
use crate::modrep::bimodule::{coregular_bimodule, regular_bimodule, swap_to_opposite};
use crate::modrep::{is_injective, is_isomorphic, IsoVerdict, Module};

use super::canonical::{canonical_bimodule, coregular_tensor_v};
use super::LabError;

fn first_nonzero(dims: &[usize]) -> Option<usize> {
    dims.iter().position(|&d| d != 0).map(|p| p + 1)
}

fn last_nonzero(dims: &[usize]) -> Option<usize> {
    dims.iter().rposition(|&d| d != 0).map(|p| p + 1)
}

/// `i + 1` for the chosen index `i`, `AtLeast(cap + 1)` when every computed
/// degree vanishes.
fn plus_one(i: Option<usize>, cap: usize) -> DimensionValue {
    match i {
        Some(i) => DimensionValue::Exact(i + 1),
        None => DimensionValue::AtLeast(cap + 1),
    }
}

/// Both readings of the dominant dimension from `Ext^i(D(A) ⊗_A V, A)`.
#[derive(Clone, Debug)]
pub struct FormulaReport {
    pub cap: usize,
    /// `dim Ext^i` for `i = 1..=cap`
    pub ext_dims: Vec<usize>,
    /// first nonvanishing degree plus one
    pub inf_reading: DimensionValue,
    /// last nonvanishing degree (among those computed) plus one
    pub sup_reading: DimensionValue,
    pub coresolution: DimensionValue,
    pub inf_agrees: bool,
    pub sup_agrees: bool,
}

impl FormulaReport {
    pub fn to_json(&self) -> Value {
        json!({
            "cap": self.cap,
            "ext_dims": self.ext_dims,
            "inf_reading": self.inf_reading.to_json(),
            "sup_reading": self.sup_reading.to_json(),
            "coresolution": self.coresolution.to_json(),
            "inf_agrees": self.inf_agrees,
            "sup_agrees": self.sup_agrees,
            "note": "the formula is stated with sup; the first nonvanishing degree is the value used",
        })
    }
}

/// Dominant dimension as `inf { i >= 1 : Ext^i(D(A) ⊗_A V, A) != 0 } + 1`,
/// for algebras of dominant dimension at least two.
pub fn domdim_via_ext_formula<F: Field>(a: &Alg<F>, cap: usize, seed: u64) -> Result<FormulaReport, LabError> {
    let dd = domdim(a, cap);
    if dd.at_least(2) != Some(true) {
        return Err(LabError::Precondition(format!("dominant dimension is {}, the formula needs at least 2", dd)));
    }
    let v = canonical_bimodule(a, seed)?.v;
    let x = coregular_tensor_v(a, &v)?;
    let dims = ext_dims(&x, &Module::regular(a), cap)[1..].to_vec();
    let inf_reading = plus_one(first_nonzero(&dims), cap);
    let sup_reading = plus_one(last_nonzero(&dims), cap);
    Ok(FormulaReport {
        cap,
        inf_agrees: inf_reading == dd,
        sup_agrees: sup_reading == dd,
        ext_dims: dims,
        inf_reading,
        sup_reading,
        coresolution: dd,
    })
}

fn faithful<F: Field>(a: &Alg<F>, verts: &[usize]) -> bool {
    if verts.is_empty() {
        return false;
    }
    let f = a.field();
    let width: usize = verts.iter().map(|&v| a.proj_dim(v) * a.proj_dim(v)).sum();
    let rows: Vec<Vec<F::Elem>> = (0..a.dim())
        .map(|b| verts.iter().flat_map(|&v| a.proj_actions(v)[b].data().to_vec()).collect())
        .collect();
    Mat::from_rows(f, width, rows).rank() == a.dim()
}

/// Vertices `v` of a minimal set of projective-injective `A e_v` whose sum
/// is faithful; `None` if all projective-injectives together are not.
pub fn minimal_faithful_projective_injective<F: Field>(a: &Alg<F>) -> Option<Vec<usize>> {
    let mut s: Vec<usize> = (0..a.num_vertices()).filter(|&v| is_injective(&Module::projective(a, v))).collect();
    if !faithful(a, &s) {
        return None;
    }
    let mut i = 0;
    while i < s.len() {
        let mut t = s.clone();
        t.remove(i);
        if faithful(a, &t) {
            s = t;
        } else {
            i += 1;
        }
    }
    Some(s)
}

/// Gendo-symmetry decided by `V ≅ A` and, independently, by the symmetry of
/// the base algebra `eAe` together with `domdim >= 2`.
#[derive(Clone, Debug)]
pub struct GendoReport<F: Field> {
    pub domdim: DimensionValue,
    pub v_iso: IsoVerdict<F>,
    pub base_vertices: Option<Vec<usize>>,
    pub base_dim: Option<usize>,
    pub base_symmetric: Option<IsoVerdict<F>>,
    pub by_v: bool,
    pub by_base: bool,
    pub agreement: bool,
    /// For gendo-symmetric algebras: `inf { i : Ext^i(D(A), A) != 0 } + 1`
    /// and whether it matches the coresolution.
    pub ext_formula: Option<(Vec<usize>, DimensionValue, bool)>,
}

impl<F: Field> GendoReport<F> {
    pub fn qf3(&self) -> bool {
        self.domdim.at_least(1) == Some(true)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "domdim": self.domdim.to_json(),
            "qf3": self.qf3(),
            "v_iso": self.v_iso.to_json(),
            "base_vertices": self.base_vertices,
            "base_dim": self.base_dim,
            "base_symmetric": self.base_symmetric.as_ref().map(|v| v.to_json()),
            "gendo_symmetric_by_v": self.by_v,
            "gendo_symmetric_by_base": self.by_base,
            "agreement": self.agreement,
            "ext_formula": self.ext_formula.as_ref().map(|(d, v, ok)| json!({"ext_dims": d, "value": v.to_json(), "agrees": ok})),
        })
    }
}

pub fn gendo_symmetric_report<F: Field>(a: &Alg<F>, cap: usize, seed: u64) -> Result<GendoReport<F>, LabError> {
    let dd = domdim(a, cap.max(2));
    let v = canonical_bimodule(a, seed)?.v;
    let v_iso = is_isomorphic(&v, &regular_bimodule(a), seed);
    let by_v = v_iso.is_yes();
    let base_vertices = if dd.at_least(1) == Some(true) { minimal_faithful_projective_injective(a) } else { None };
    if dd.at_least(1) == Some(true) && base_vertices.is_none() {
        return Err(LabError::Disagreement("dominant dimension >= 1 but no faithful projective-injective".into()));
    }
    let base = base_vertices.as_ref().map(|s| a.corner(s));
    let base_symmetric = base.as_ref().map(|b| is_isomorphic(&regular_bimodule(b), &coregular_bimodule(b), seed));
    let by_base = dd.at_least(2) == Some(true) && base_symmetric.as_ref().map_or(false, |v| v.is_yes());
    let ext_formula = if by_v && by_base {
        let dims = ext_dims(&Module::coregular(a), &Module::regular(a), cap)[1..].to_vec();
        let val = plus_one(first_nonzero(&dims), cap);
        let expected = domdim(a, cap);
        Some((dims, val, val == expected))
    } else {
        None
    };
    Ok(GendoReport {
        domdim: dd,
        v_iso,
        base_dim: base.as_ref().map(|b| b.dim()),
        base_vertices,
        base_symmetric,
        by_v,
        by_base,
        agreement: by_v == by_base,
        ext_formula,
    })
}

/// Hochschild (co)homology dimensions, directly and through the
/// `τ_{n-1}(V)` formulas when the dominant dimension `n >= 2` is finite.
#[derive(Clone, Debug)]
pub struct HochschildReport {
    pub l_max: usize,
    pub cap: usize,
    /// `HH^l = Ext_{A^e}^l(A, A)`, `l = 0..=l_max`
    pub cohomology: Vec<usize>,
    /// `HH_l = Tor_l^{A^e}(A, A)`, `l = 0..=l_max`
    pub homology: Vec<usize>,
    /// `HH_l` as `D Ext_{A^e}^l(A, D(A))`
    pub homology_via_ext: Vec<usize>,
    pub center_dim: usize,
    pub domdim: DimensionValue,
    /// `l = 1..=l_max`
    pub formula_homology: Option<Vec<usize>>,
    pub formula_cohomology: Option<Vec<usize>>,
    pub pd_regular: DimensionValue,
    pub pd_coregular: DimensionValue,
    /// `HH_l = 0` for `l > pd(A) - n` and `HH^l = 0` for `l > pd(D(A)) - n`,
    /// within the computed range.
    pub vanishing: Option<bool>,
    pub gldim: DimensionValue,
}

impl HochschildReport {
    pub fn center_ok(&self) -> bool {
        self.cohomology[0] == self.center_dim
    }

    pub fn formulas_agree(&self) -> Option<bool> {
        let h = self.formula_homology.as_ref()?;
        let c = self.formula_cohomology.as_ref()?;
        Some(h[..] == self.homology[1..] && c[..] == self.cohomology[1..])
    }

    /// `pd_{A^e}(A) = gldim(A)`; only a diagnostic.
    pub fn happel_matches(&self) -> Option<bool> {
        match (self.pd_regular, self.gldim) {
            (DimensionValue::Exact(p), DimensionValue::Exact(g)) => Some(p == g),
            _ => None,
        }
    }

    pub fn consistent(&self) -> bool {
        self.center_ok()
            && self.homology == self.homology_via_ext
            && self.formulas_agree() != Some(false)
            && self.vanishing != Some(false)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "l_max": self.l_max,
            "cap": self.cap,
            "cohomology": self.cohomology,
            "homology": self.homology,
            "homology_via_ext": self.homology_via_ext,
            "center_dim": self.center_dim,
            "center_ok": self.center_ok(),
            "domdim": self.domdim.to_json(),
            "formula_homology": self.formula_homology,
            "formula_cohomology": self.formula_cohomology,
            "formulas_agree": self.formulas_agree(),
            "pd_regular": self.pd_regular.to_json(),
            "pd_coregular": self.pd_coregular.to_json(),
            "vanishing": self.vanishing,
            "gldim": self.gldim.to_json(),
            "happel_matches": self.happel_matches(),
            "consistent": self.consistent(),
        })
    }
}

pub fn hochschild_report<F: Field>(a: &Alg<F>, l_max: usize, cap: usize, seed: u64) -> Result<HochschildReport, LabError> {
    let reg = regular_bimodule(a);
    let dreg = coregular_bimodule(a);
    let cohomology = ext_dims(&reg, &reg, l_max);
    let tor = tor_dims(&swap_to_opposite(a, &reg)?, &reg, l_max);
    let dd = domdim(a, cap);
    let pd_regular = pd(&reg, cap);
    let pd_coregular = pd(&dreg, cap);
    let (mut formula_homology, mut formula_cohomology, mut vanishing) = (None, None, None);
    if let DimensionValue::Exact(n) = dd {
        if n >= 2 {
            let v = canonical_bimodule(a, seed)?.v;
            let tau = higher_ar_translate(&v, n);
            let eh = ext_dims(&reg, &tau, l_max + n);
            let ec = ext_dims(&dreg, &tau, l_max + n);
            formula_homology = Some((1..=l_max).map(|l| eh[l + n]).collect::<Vec<_>>());
            formula_cohomology = Some((1..=l_max).map(|l| ec[l + n]).collect::<Vec<_>>());
            let mut ok = true;
            if let DimensionValue::Exact(p) = pd_regular {
                ok &= (1..=l_max).filter(|&l| l + n > p).all(|l| tor.direct[l] == 0);
            }
            if let DimensionValue::Exact(p) = pd_coregular {
                ok &= (1..=l_max).filter(|&l| l + n > p).all(|l| cohomology[l] == 0);
            }
            vanishing = Some(ok);
        }
    }
    Ok(HochschildReport {
        l_max,
        cap,
        cohomology,
        homology: tor.direct,
        homology_via_ext: tor.via_ext,
        center_dim: a.center_dim(),
        domdim: dd,
        formula_homology,
        formula_cohomology,
        pd_regular,
        pd_coregular,
        vanishing,
        gldim: gldim(a, cap),
    })
}

/// `Ext_{A^e}^i(A, A^e)` against `Ext_A^i(D(A), A)` for `i = 1..=cap`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BridgeReport {
    pub bimodule: Vec<usize>,
    pub one_sided: Vec<usize>,
}

impl BridgeReport {
    pub fn agrees(&self) -> bool {
        self.bimodule == self.one_sided
    }

    pub fn to_json(&self) -> Value {
        json!({"bimodule_ext": self.bimodule, "one_sided_ext": self.one_sided, "agrees": self.agrees()})
    }
}

pub fn bimodule_dual_ext_bridge<F: Field>(a: &Alg<F>, cap: usize) -> BridgeReport {
    if cap == 0 {
        return BridgeReport { bimodule: Vec::new(), one_sided: Vec::new() };
    }
    let reg = regular_bimodule(a);
    let bimodule = ext_dims(&reg, &Module::regular(reg.alg()), cap)[1..].to_vec();
    let one_sided = ext_dims(&Module::coregular(a), &Module::regular(a), cap)[1..].to_vec();
    BridgeReport { bimodule, one_sided }
}

/// Bounded probes related to the selfinjectivity conjectures.
#[derive(Clone, Debug)]
pub struct ConjectureProbe {
    pub cap: usize,
    pub selfinjective: bool,
    pub domdim: DimensionValue,
    /// `domdim(A) >= cap`
    pub nakayama: bool,
    /// `dim Ext_A^i(D(A), A)`, `i = 1..=cap`
    pub tachikawa_dims: Vec<usize>,
    /// `dim Ext_{A^e}^i(A, A^e)`, `i = 1..=cap`
    pub bimodule_ext_dims: Vec<usize>,
    pub gp: GpReport,
    /// Combinations that cannot occur if the implemented equivalences hold.
    pub contradictions: Vec<String>,
}

impl ConjectureProbe {
    pub fn tachikawa(&self) -> bool {
        self.tachikawa_dims.iter().all(|&d| d == 0)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "cap": self.cap,
            "selfinjective": self.selfinjective,
            "domdim": self.domdim.to_json(),
            "nakayama_probe": self.nakayama,
            "tachikawa_probe": self.tachikawa(),
            "tachikawa_dims": self.tachikawa_dims,
            "bimodule_ext_dims": self.bimodule_ext_dims,
            "gp_probe": {
                "holds": self.gp.holds_up_to_bound(),
                "bound": self.gp.bound,
                "first_failure": self.gp.first_failure_index(),
                "ext_regular": self.gp.ext_m,
                "ext_transpose": self.gp.ext_tr,
            },
            "contradictions": self.contradictions,
        })
    }
}

pub fn conjecture_probe<F: Field>(a: &Alg<F>, cap: usize, seed: u64) -> ConjectureProbe {
    let selfinjective = is_isomorphic(&Module::regular(a), &Module::coregular(a), seed).is_yes();
    let dd = domdim(a, cap);
    let nakayama = dd.at_least(cap) == Some(true);
    let bridge = bimodule_dual_ext_bridge(a, cap);
    let gp = gorenstein_projective_up_to(&regular_bimodule(a), cap);
    let tach = bridge.one_sided.iter().all(|&d| d == 0);
    let mut contradictions = Vec::new();
    if !bridge.agrees() {
        contradictions.push(format!("Ext_A(D(A), A) dims {:?} differ from Ext_A^e(A, A^e) dims {:?}", bridge.one_sided, bridge.bimodule));
    }
    if gp.ext_m[..] != bridge.bimodule[..gp.ext_m.len()] {
        contradictions.push("Gorenstein probe and bimodule Ext disagree".into());
    }
    if selfinjective && !(nakayama && tach && gp.holds_up_to_bound()) {
        contradictions.push("selfinjective but some probe fails".into());
    }
    if gp.holds_up_to_bound() && !nakayama {
        contradictions.push("bimodule is cap-torsionfree but dominant dimension is below the cap".into());
    }
    if nakayama && tach && !gp.holds_up_to_bound() {
        contradictions.push("dominant dimension and Ext vanishing reach the cap but the Gorenstein probe fails".into());
    }
    ConjectureProbe {
        cap,
        selfinjective,
        domdim: dd,
        nakayama,
        tachikawa_dims: bridge.one_sided,
        bimodule_ext_dims: bridge.bimodule,
        gp,
        contradictions,
    }
}

/// Projective dimensions of `A` and `D(A)` over `A^e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PdBimoduleReport {
    pub regular: DimensionValue,
    pub coregular: DimensionValue,
    pub gldim: DimensionValue,
}

impl PdBimoduleReport {
    pub fn to_json(&self) -> Value {
        json!({"pd_regular": self.regular.to_json(), "pd_coregular": self.coregular.to_json(), "gldim": self.gldim.to_json()})
    }
}

pub fn pd_bimodule_report<F: Field>(a: &Alg<F>, cap: usize) -> PdBimoduleReport {
    PdBimoduleReport {
        regular: pd(&regular_bimodule(a), cap),
        coregular: pd(&coregular_bimodule(a), cap),
        gldim: gldim(a, cap),
    }
}
