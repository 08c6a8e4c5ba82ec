//! Direct verification at p = 2: enumerate P ≀ S_n, build k[G/ιM] and
//! decide everything by linear algebra.

use std::collections::HashMap;

use num_bigint::BigUint;
use serde::Serialize;
use serde_json::{json, Value};

use super::Settings;
use crate::error::{Error, Result};
use crate::fusion::{fusion_equal, FusionComparison, FusionSystem};
use crate::group::{is_power_of, FiniteGroup, GroupElement, Subgroup};
use crate::park::{embed_all, subgroup_of_images, Model, ParkGroup, WreathElement};
use crate::permrep::{brauer_sweep, scott_verdict, CosetSpace, Indecomposability, Verdict};

/// |P|^n·n!/|M| for the affine group at p, as a decimal string.
pub fn module_dimension(p: u32) -> String {
    let p = p as u64;
    let n = p * p - 1;
    let park = BigUint::from(p * p * p).pow(n as u32) * (1..=n).map(BigUint::from).product::<BigUint>();
    (park / BigUint::from(p * p * p * (p * p - 1))).to_string()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub subgroup_order: usize,
    /// Subgroups of ιP in this G-class.
    pub class_size: usize,
    pub fixed_points: usize,
    pub local_order: usize,
    pub status: Option<Indecomposability>,
    pub dim_end: Option<usize>,
    pub dim_radical: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DirectReport {
    pub prime: u32,
    pub model_order: usize,
    pub sylow_order: usize,
    pub degree: usize,
    pub park_order: usize,
    pub module_dim: usize,
    pub embedding_injective: bool,
    pub fusion: Value,
    pub scott: Verdict,
    pub g_classes: usize,
    pub sweep: Vec<SweepRow>,
    /// Only subgroups of the vertex ιP are swept: for any other p-subgroup
    /// Q, up to conjugacy, M(Q) = 0.
    pub reduction: &'static str,
}

impl DirectReport {
    pub fn passed(&self) -> bool {
        self.embedding_injective
            && self.fusion["equal"] == json!(true)
            && self.scott.status == Indecomposability::Absolute
            && self
                .sweep
                .iter()
                .all(|r| r.status.is_none_or(|s| s == Indecomposability::Absolute))
    }
}

/// Everything needed downstream: the enumerated G, ιM, ιP and G/ιM.
pub struct ParkSetup<E> {
    pub g: FiniteGroup<WreathElement<E>>,
    pub h: Subgroup,
    pub ip: Subgroup,
}

pub fn park_setup<E: GroupElement>(m: &FiniteGroup<E>, model: &Model<E>, s: &Settings) -> Result<ParkSetup<E>> {
    let park = ParkGroup::new(model.clone());
    let g = park.enumerate(&s.cfg)?;
    let images = embed_all(model, m)?;
    let h = subgroup_of_images(&g, &images)?;
    let p_images: Vec<_> = model
        .sylow()
        .elements()
        .iter()
        .map(|u| model.embed(u))
        .collect::<Result<_>>()?;
    let ip = subgroup_of_images(&g, &p_images)?;
    Ok(ParkSetup { g, h, ip })
}

/// Subgroups of ιP grouped into G-classes; each class lists indices into
/// `subs`, the representative first (largest normalizer in ιP).
pub fn g_classes_in<E: GroupElement>(
    g: &FiniteGroup<E>,
    ip: &Subgroup,
    subs: &[Subgroup],
) -> Vec<Vec<usize>> {
    let index: HashMap<&[u64], usize> = subs.iter().enumerate().map(|(i, q)| (q.mask(), i)).collect();
    let mut class_of = vec![usize::MAX; subs.len()];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..subs.len() {
        if class_of[i] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut members = Vec::new();
        for c in g.conjugates(&subs[i], &g.whole()) {
            if let Some(&j) = index.get(c.mask()) {
                if class_of[j] == usize::MAX {
                    class_of[j] = id;
                    members.push(j);
                }
            }
        }
        members.sort_by_key(|&j| std::cmp::Reverse(g.normalizer_in(ip, &subs[j]).order()));
        classes.push(members);
    }
    classes
}

pub fn fusion_witness<E: GroupElement>(
    fh: &FusionSystem<'_, WreathElement<E>>,
    fg: &FusionSystem<'_, WreathElement<E>>,
) -> Result<Value> {
    Ok(match fusion_equal(fh, fg)? {
        FusionComparison::Equal => json!({ "equal": true, "subgroups": fh.subgroups().len() }),
        FusionComparison::Differs {
            domain,
            images,
            witness,
            in_first,
        } => json!({
            "equal": false,
            "domain_order": fh.subgroup(domain).order(),
            "images": images,
            "conjugator": witness,
            "only_in": if in_first { "iota-M" } else { "G" },
        }),
    })
}

pub fn direct_pipeline<E: GroupElement>(
    m: &FiniteGroup<E>,
    model: &Model<E>,
    p: u32,
    s: &Settings,
) -> Result<DirectReport> {
    let setup = park_setup(m, model, s)?;
    let (g, h, ip) = (&setup.g, &setup.h, &setup.ip);
    let omega = CosetSpace::new(g, h, s.module_cap as u64)?;
    let fh = FusionSystem::new(g, h.clone(), ip.clone(), p as u64, s.cfg.lattice_cap)?;
    let fg = FusionSystem::new(g, g.whole(), ip.clone(), p as u64, s.cfg.lattice_cap)?;
    let fusion = fusion_witness(&fh, &fg)?;
    let scott = scott_verdict(&omega, p, s.module_cap, s.seed)?;
    let subs = fg.subgroups();
    let classes = g_classes_in(g, ip, subs);
    let reps: Vec<Subgroup> = classes.iter().map(|c| subs[c[0]].clone()).collect();
    let entries = brauer_sweep(&omega, &reps, p, s.module_cap, s.seed)?;
    let sweep = entries
        .into_iter()
        .zip(&classes)
        .map(|(e, c)| SweepRow {
            subgroup_order: e.subgroup_order,
            class_size: c.len(),
            fixed_points: e.fixed_points,
            local_order: e.local_order,
            status: e.verdict.as_ref().map(|v| v.status),
            dim_end: e.verdict.as_ref().map(|v| v.dim_end),
            dim_radical: e.verdict.as_ref().map(|v| v.dim_radical),
        })
        .collect();
    Ok(DirectReport {
        prime: p,
        model_order: m.order(),
        sylow_order: model.sylow().order(),
        degree: model.degree(),
        park_order: g.order(),
        module_dim: omega.len(),
        embedding_injective: h.order() == m.order(),
        fusion,
        scott,
        g_classes: classes.len(),
        sweep,
        reduction: "swept over subgroups of the vertex up to G-conjugacy; other p-subgroups have zero Brauer quotient",
    })
}

/// Hypotheses on M (order 3·2^k, 2-length 2, trivial 2'-core), the 2-power
/// index, then the direct pipeline.
pub(super) fn side_theorem<E: GroupElement>(
    m: &FiniteGroup<E>,
    model: &Model<E>,
    s: &Settings,
) -> Result<(bool, Value)> {
    let order = m.order() as u64;
    let order_ok = order % 3 == 0 && is_power_of(order / 3, 2) && order / 3 > 1;
    if !order_ok {
        return Ok((false, json!({ "hypothesis": "order", "order": order, "reason": "order is not 3·2^k" })));
    }
    let length = m.p_length(2)?;
    let core = m.p_prime_core(2).order();
    if length != 2 || core != 1 {
        return Ok((
            false,
            json!({ "hypothesis": "series", "two_length": length, "odd_core_order": core }),
        ));
    }
    let r = direct_pipeline(m, model, 2, s)?;
    let index = r.park_order / m.order();
    let index_ok = is_power_of(index as u64, 2) && index == r.module_dim;
    let mut w = serde_json::to_value(&r).map_err(|e| Error::Internal(e.to_string()))?;
    w["hypotheses"] = json!({
        "order": order,
        "two_length": length,
        "odd_core_order": core,
        "index": index,
        "index_is_power_of_two": index_ok,
    });
    w["note"] = json!(format!(
        "|M| = {order} = 3·2^{}, 2-length {length}, O_2'(M) = 1, index {index} = 2^{}",
        (order / 3).trailing_zeros(),
        index.trailing_zeros()
    ));
    Ok((index_ok && r.passed(), w))
}
