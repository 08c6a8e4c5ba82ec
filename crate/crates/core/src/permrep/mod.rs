//! Permutation modules k[G/H] over GF(p): endomorphism algebras, radicals,
//! indecomposability verdicts and Brauer quotients.

pub mod algebra;
pub mod brauer;
pub mod endo;
pub mod gset;

pub use algebra::{count_idempotents_gf2, Algebra};
pub use brauer::{brauer_quotient_definitional, BrauerComparison};
pub use endo::{classify_algebra, indecomposable, verdict_from_endo, EndoAlgebra, Indecomposability, Verdict};
pub use gset::{double_cosets, CosetSpace, PermAction};

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupElement, Subgroup};

/// The three G-set claims about Ω^Q for Ω = G/H and Q ≤ H.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixedPointReport {
    pub fixed_points: usize,
    /// N_G(Q) is transitive on Ω^Q with point stabilizer N_H(Q).
    pub normalizer_transitive: bool,
    pub normalizer_stabilizer: bool,
    /// Q·C_G(Q) is transitive on Ω^Q with point stabilizer Q·C_H(Q).
    pub local_transitive: bool,
    pub local_stabilizer: bool,
    /// {g : g^-1 Q g ≤ H} = N_G(Q)·H
    pub transporter_matches: bool,
    pub counterexample: Option<String>,
}

impl FixedPointReport {
    pub fn passed(&self) -> bool {
        self.normalizer_transitive
            && self.normalizer_stabilizer
            && self.local_transitive
            && self.local_stabilizer
            && self.transporter_matches
    }
}

/// Checks the fixed-point structure of G/H at a subgroup Q ≤ H.
pub fn check_fixed_point_structure<E: GroupElement>(
    omega: &CosetSpace<'_, E>,
    q: &Subgroup,
) -> Result<FixedPointReport> {
    let g = omega.group();
    let h = omega.stabilizer();
    if !q.is_subset_of(h) {
        return Err(Error::InvalidArgument("Q must lie in the point stabilizer".into()));
    }
    let q_gens = g.generators_of(q);
    let fixed: HashSet<usize> = omega.fixed_points(q).into_iter().collect();
    let mut counterexample = None;

    let n_g = g.normalizer(q);
    let n_h = g.normalizer_in(h, q);
    let orbit = omega.orbit(&n_g, 0);
    let normalizer_transitive = orbit == fixed;
    let normalizer_stabilizer = omega.point_stabilizer(&n_g, 0) == n_h;
    if !normalizer_transitive {
        counterexample.get_or_insert(format!(
            "normalizer orbit has {} of {} fixed points",
            orbit.len(),
            fixed.len()
        ));
    }

    let c_g = g.centralizer(&q_gens);
    let c_h = g.centralizer_in(h, &q_gens);
    let local_g = g.product(q, &c_g)?;
    let local_h = g.product(q, &c_h)?;
    let orbit = omega.orbit(&local_g, 0);
    let local_transitive = orbit == fixed;
    let local_stabilizer = omega.point_stabilizer(&local_g, 0) == local_h;
    if !local_transitive {
        counterexample.get_or_insert(format!(
            "Q·C_G(Q) orbit has {} of {} fixed points",
            orbit.len(),
            fixed.len()
        ));
    }

    // transporter, elementwise
    let transporter: HashSet<u32> = (0..g.order() as u32)
        .filter(|&x| {
            let xi = g.inv(x);
            q_gens.iter().all(|&s| h.contains(g.conj(xi, s)))
        })
        .collect();
    let mut nh = HashSet::new();
    for &a in n_g.members() {
        for &b in h.members() {
            nh.insert(g.mul(a, b));
        }
    }
    let transporter_matches = transporter == nh;
    if !transporter_matches {
        let x = transporter.symmetric_difference(&nh).next().copied();
        counterexample.get_or_insert(format!("transporter and N_G(Q)·H differ at {x:?}"));
    }
    Ok(FixedPointReport {
        fixed_points: fixed.len(),
        normalizer_transitive,
        normalizer_stabilizer,
        local_transitive,
        local_stabilizer,
        transporter_matches,
        counterexample,
    })
}

/// One entry of the Brauer-quotient sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepEntry {
    pub subgroup_order: usize,
    pub fixed_points: usize,
    pub local_order: usize,
    /// `None` when M(Q) = 0.
    pub verdict: Option<Verdict>,
}

impl SweepEntry {
    pub fn passed(&self) -> bool {
        self.verdict.as_ref().is_none_or(|v| v.status == Indecomposability::Absolute)
    }
}

/// For each Q, the Brauer quotient of k[G/H] at Q (via fixed points)
/// restricted to Q·C_G(Q), and its indecomposability.
pub fn brauer_sweep<E: GroupElement>(
    omega: &CosetSpace<'_, E>,
    qs: &[Subgroup],
    p: u32,
    max_points: usize,
    seed: u64,
) -> Result<Vec<SweepEntry>> {
    let g = omega.group();
    qs.par_iter()
        .map(|q| {
            let fixed = omega.fixed_points(q);
            let c = g.centralizer(&g.generators_of(q));
            let local = g.product(q, &c)?;
            let verdict = if fixed.is_empty() {
                None
            } else {
                let action = omega.action_on(&local, &fixed)?;
                Some(indecomposable(&action, p, max_points, seed)?)
            };
            Ok(SweepEntry {
                subgroup_order: q.order(),
                fixed_points: fixed.len(),
                local_order: local.order(),
                verdict,
            })
        })
        .collect()
}

/// Indecomposability of k[G/H] as a G-module.
pub fn scott_verdict<E: GroupElement>(
    omega: &CosetSpace<'_, E>,
    p: u32,
    max_points: usize,
    seed: u64,
) -> Result<Verdict> {
    let g = omega.group();
    indecomposable(&omega.action(&g.whole())?, p, max_points, seed)
}

/// Orbit sizes of N on G/H against |N g H| / |H| over double cosets, both
/// sorted.
pub fn mackey_sizes<E: GroupElement>(
    g: &FiniteGroup<E>,
    h: &Subgroup,
    n: &Subgroup,
) -> Result<(Vec<usize>, Vec<usize>)> {
    let omega = CosetSpace::new(g, h, u64::MAX)?;
    let mut orbits: Vec<usize> = omega.action(n)?.orbits().iter().map(Vec::len).collect();
    let mut cosets: Vec<usize> = double_cosets(g, n, h)
        .iter()
        .map(|d| d.len() / h.order())
        .collect();
    orbits.sort_unstable();
    cosets.sort_unstable();
    Ok((orbits, cosets))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{GroupConfig, Perm};

    fn s4() -> FiniteGroup<Perm> {
        FiniteGroup::closure(
            &[
                Perm::from_cycles(4, &[&[0, 1]]).unwrap(),
                Perm::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap(),
            ],
            &GroupConfig::default(),
        )
        .unwrap()
    }

    #[test]
    fn coset_space_examples() {
        let g = s4();
        let whole = CosetSpace::new(&g, &g.whole(), 1000).unwrap();
        assert_eq!(whole.len(), 1);
        let regular = CosetSpace::new(&g, &g.trivial(), 1000).unwrap();
        assert_eq!(regular.len(), 24);
        assert!(regular.action(&g.whole()).unwrap().is_transitive());
        assert!(CosetSpace::new(&g, &g.trivial(), 10).unwrap_err().is_cap());
        let d8 = g.sylow(2);
        let omega = CosetSpace::new(&g, &d8, 1000).unwrap();
        assert_eq!(omega.fixed_points(&g.trivial()).len(), 3);
        assert!(omega.fixed_points(&d8).contains(&0));
    }

    #[test]
    fn endo_dim_is_double_coset_count() {
        let g = s4();
        for h in [g.sylow(2), g.sylow(3), g.trivial()] {
            let omega = CosetSpace::new(&g, &h, 1000).unwrap();
            let end = EndoAlgebra::new(&omega.action(&g.whole()).unwrap(), 2, 1000).unwrap();
            assert_eq!(end.dim(), double_cosets(&g, &h, &h).len());
        }
    }

    #[test]
    fn green_instances_in_s4() {
        let g = s4();
        // index a power of 2 (3 divides |H|): indecomposable at p = 2
        let s3 = g
            .generate_elements(&[
                Perm::from_cycles(4, &[&[0, 1]]).unwrap(),
                Perm::from_cycles(4, &[&[0, 1, 2]]).unwrap(),
            ])
            .unwrap();
        for h in [s3, g.sylow(3)] {
            let omega = CosetSpace::new(&g, &h, 1000).unwrap();
            let v = scott_verdict(&omega, 2, 1000, 0).unwrap();
            assert_eq!(v.status, Indecomposability::Absolute, "{h:?}");
        }
        // index 3 at p = 2 splits off the trivial module
        let omega = CosetSpace::new(&g, &g.sylow(2), 1000).unwrap();
        assert_eq!(scott_verdict(&omega, 2, 1000, 0).unwrap().status, Indecomposability::Decomposable);
    }

    #[test]
    fn brauer_quotients_match_fixed_points() {
        let g = s4();
        let h = g.sylow(2);
        let omega = CosetSpace::new(&g, &h, 1000).unwrap();
        for q in g.all_subgroups_of(&h, 512).unwrap() {
            let n = g.normalizer(&q);
            let c = brauer_quotient_definitional(&omega, &q, &n, 2, 512, 512).unwrap();
            assert!(c.agrees(), "{q:?}: {c:?}");
            let rep = check_fixed_point_structure(&omega, &q).unwrap();
            assert_eq!(rep.fixed_points, c.fixed_points);
        }
    }

    #[test]
    fn mackey_sizes_match() {
        let g = s4();
        let h = g.sylow(2);
        for n in g.all_subgroups(512).unwrap().iter().step_by(3) {
            let (orbits, cosets) = mackey_sizes(&g, &h, n).unwrap();
            assert_eq!(orbits, cosets);
        }
    }
}
