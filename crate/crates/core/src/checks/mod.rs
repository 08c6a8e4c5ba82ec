//! Lemma-, theorem- and suite-level checks, each producing one report.

mod direct;
mod lemmas;
mod pool;
mod suites;

use std::str::FromStr;
use std::time::Instant;

use serde_json::{json, Value};

pub use direct::{direct_pipeline, module_dimension, DirectReport, SweepRow};
pub use lemmas::{run_lemma, LEMMA_IDS};
pub use pool::{green_instances, perm_pool, GreenInstance};
pub use suites::{run_suite, table_hashes, tables, Suite};

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupConfig, Perm};
use crate::park::{qd_model, Model};
use crate::qd::{build_qd, sylow_in, QdElement};
use crate::report::VerificationReport;

#[derive(Debug, Clone, Copy)]
pub struct Settings {
    pub cfg: GroupConfig,
    pub seed: u64,
    /// Largest permutation module handed to the endomorphism machinery.
    pub module_cap: usize,
}

impl Default for Settings {
    fn default() -> Self {
        Self {
            cfg: GroupConfig::default(),
            seed: 0,
            module_cap: 4096,
        }
    }
}

/// The group specs the command line accepts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupSpec {
    Qd(u32),
    S4,
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "s4" => Ok(GroupSpec::S4),
            "qd:2" => Ok(GroupSpec::Qd(2)),
            "qd:3" => Ok(GroupSpec::Qd(3)),
            "qd:5" => Ok(GroupSpec::Qd(5)),
            other => Err(Error::InvalidArgument(format!(
                "unknown group spec {other:?} (expected s4, qd:2, qd:3 or qd:5)"
            ))),
        }
    }
}

impl std::fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GroupSpec::Qd(p) => write!(f, "qd:{p}"),
            GroupSpec::S4 => f.write_str("s4"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Direct,
    Structural,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "direct" => Ok(Mode::Direct),
            "structural" => Ok(Mode::Structural),
            other => Err(Error::InvalidArgument(format!("unknown mode {other:?}"))),
        }
    }
}

/// Runs `f` and turns its verdict into a report. Cap errors become
/// SKIPPED-CAP; every other error is passed through.
pub(crate) fn guarded(
    check: &str,
    params: Value,
    f: impl FnOnce() -> Result<(bool, Value)>,
) -> Result<VerificationReport> {
    let started = Instant::now();
    match f() {
        Ok((passed, witness)) => Ok(VerificationReport::from_outcome(check, params, passed, witness, started)),
        Err(e) => VerificationReport::from_error(check, params, e, started),
    }
}

pub fn symmetric_group(n: usize, cfg: &GroupConfig) -> Result<FiniteGroup<Perm>> {
    let cycle: Vec<usize> = (0..n).collect();
    let gens = if n < 2 {
        vec![Perm::identity(n.max(1))]
    } else {
        vec![
            Perm::from_cycles(n, &[&[0, 1]])?,
            Perm::from_cycles(n, &[&cycle])?,
        ]
    };
    FiniteGroup::closure(&gens, cfg)
}

/// The affine group with the fixed transversal of its Sylow subgroup.
pub fn qd_setup(p: u32, cfg: &GroupConfig) -> Result<(FiniteGroup<QdElement>, Model<QdElement>)> {
    let m = build_qd(p, cfg)?;
    let model = qd_model(p, cfg)?;
    model.reps().iter().try_for_each(|r| {
        m.index_of(r)
            .map(|_| ())
            .ok_or_else(|| Error::Internal("transversal element outside the group".into()))
    })?;
    let _ = sylow_in(&m, p)?;
    Ok((m, model))
}

/// `theorem --main`.
pub fn run_theorem_main(p: u32, mode: Mode, s: &Settings) -> Result<VerificationReport> {
    crate::gf::check_prime(p)?;
    let (check, params) = match mode {
        Mode::Direct => ("thm-1.2-direct", json!({ "p": p, "group": format!("qd:{p}"), "mode": "direct" })),
        Mode::Structural => ("thm-1.2-structural", json!({ "p": p, "group": format!("qd:{p}"), "mode": "structural" })),
    };
    match mode {
        Mode::Direct => {
            if p != 2 {
                // never attempted: report the module size and stop
                let dim = direct::module_dimension(p);
                return guarded(check, params, || {
                    Err(Error::cap(
                        format!("direct mode at p = {p} needs a permutation module of dimension {dim}"),
                        "module-dim",
                        s.module_cap as u64,
                    ))
                });
            }
            guarded(check, params, || {
                let (m, model) = qd_setup(p, &s.cfg)?;
                let r = direct_pipeline(&m, &model, p, s)?;
                let mut w = serde_json::to_value(&r).map_err(|e| Error::Internal(e.to_string()))?;
                w["artifacts"] = json!(suites::table_hashes(p, &s.cfg)?);
                w["note"] = json!(format!(
                    "|G| = {}, dim {}, k[G/ιM] {}, {} G-classes of Q ≤ ιP swept",
                    r.park_order,
                    r.module_dim,
                    r.scott.status.as_str(),
                    r.g_classes
                ));
                Ok((r.passed(), w))
            })
        }
        Mode::Structural => {
            if p == 2 {
                return Err(Error::InvalidArgument(
                    "structural mode needs an odd prime; p = 2 runs in direct mode".into(),
                ));
            }
            guarded(check, params, || {
                let r = crate::wreath_centralizer::structural_theorem_check(
                    p,
                    &s.cfg,
                    &crate::wreath_centralizer::CentralizerOptions::default(),
                )?;
                let mut w = serde_json::to_value(&r).map_err(|e| Error::Internal(e.to_string()))?;
                w["note"] = json!(format!(
                    "{} fully normalized classes, degree {}, fusion equality assumed",
                    r.entries.len(),
                    r.degree
                ));
                Ok((r.passed(), w))
            })
        }
    }
}

/// `theorem --side`: the hypotheses on M, then the direct pipeline.
pub fn run_theorem_side(spec: GroupSpec, s: &Settings) -> Result<VerificationReport> {
    let params = json!({ "group": spec.to_string(), "p": 2, "mode": "direct" });
    guarded("thm-1.3", params, || match spec {
        GroupSpec::S4 => {
            let m = symmetric_group(4, &s.cfg)?;
            let p = m.sylow(2);
            let model = Model::from_group(&m, &p, &s.cfg)?;
            direct::side_theorem(&m, &model, s)
        }
        GroupSpec::Qd(p) => {
            let (m, model) = qd_setup(p, &s.cfg)?;
            direct::side_theorem(&m, &model, s)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn specs_parse() {
        assert_eq!("s4".parse::<GroupSpec>().unwrap(), GroupSpec::S4);
        assert_eq!("qd:3".parse::<GroupSpec>().unwrap(), GroupSpec::Qd(3));
        assert!("qd:7".parse::<GroupSpec>().is_err());
        assert!("direct".parse::<Mode>().is_ok());
        assert!("both".parse::<Mode>().is_err());
    }

    #[test]
    fn symmetric_groups() {
        let cfg = GroupConfig::default();
        assert_eq!(symmetric_group(3, &cfg).unwrap().order(), 6);
        assert_eq!(symmetric_group(5, &cfg).unwrap().order(), 120);
    }
}
