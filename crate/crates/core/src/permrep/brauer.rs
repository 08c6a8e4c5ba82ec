//! Brauer quotients of permutation modules on coset spaces.

use std::collections::HashSet;

use serde::Serialize;

use super::gset::CosetSpace;
use crate::error::{Error, Result};
use crate::gf::{FpMatrix, FpSubspace};
use crate::group::{GroupElement, Subgroup};

/// M(Q) = M^Q / Σ_{R<Q} Tr_R^Q(M^R), computed by linear algebra and compared
/// with the span of the Q-fixed points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BrauerComparison {
    pub dim_fixed_space: usize,
    pub dim_trace_sum: usize,
    pub dim_quotient: usize,
    pub fixed_points: usize,
    /// The fixed points are a basis of the quotient.
    pub fixed_points_form_basis: bool,
    /// Every normalizer generator acts on the quotient by the permutation of
    /// fixed points, matrix for matrix.
    pub actions_agree: bool,
}

impl BrauerComparison {
    pub fn agrees(&self) -> bool {
        self.dim_quotient == self.fixed_points && self.fixed_points_form_basis && self.actions_agree
    }
}

fn orbit_sums<E: GroupElement>(omega: &CosetSpace<'_, E>, r: &Subgroup) -> Vec<Vec<u32>> {
    let n = omega.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for w in 0..n {
        if seen[w] {
            continue;
        }
        let mut v = vec![0u32; n];
        for x in omega.orbit(r, w) {
            seen[x] = true;
            v[x] = 1;
        }
        out.push(v);
    }
    out
}

fn permute(omega: &CosetSpace<'_, impl GroupElement>, g: u32, v: &[u32]) -> Vec<u32> {
    let mut out = vec![0; v.len()];
    for (w, &c) in v.iter().enumerate() {
        if c != 0 {
            out[omega.act(g, w)] = c;
        }
    }
    out
}

/// The definitional Brauer quotient at Q, checked against the fixed-point
/// basis. `normalizer` acts on the quotient; only its generators are used.
pub fn brauer_quotient_definitional<E: GroupElement>(
    omega: &CosetSpace<'_, E>,
    q: &Subgroup,
    normalizer: &Subgroup,
    p: u32,
    max_dim: usize,
    lattice_cap: u64,
) -> Result<BrauerComparison> {
    let n = omega.len();
    if n > max_dim {
        return Err(Error::cap(
            format!("definitional Brauer quotient of a {n}-dimensional module"),
            "brauer-oracle",
            max_dim as u64,
        ));
    }
    let g = omega.group();
    let fixed_space = FpSubspace::span(p, n, &orbit_sums(omega, q));
    let mut traces = Vec::new();
    for r in g.all_subgroups_of(q, lattice_cap)? {
        if r.order() == q.order() {
            continue;
        }
        let reps = left_transversal(g, q, &r);
        for v in orbit_sums(omega, &r) {
            let mut t = vec![0u32; n];
            for &x in &reps {
                let w = permute(omega, x, &v);
                for (a, b) in t.iter_mut().zip(&w) {
                    *a = (*a + b) % p;
                }
            }
            traces.push(t);
        }
    }
    let trace_sum = FpSubspace::span(p, n, &traces);
    if !fixed_space.contains_subspace(&trace_sum) {
        return Err(Error::Internal("trace images leave the fixed space".into()));
    }
    let fixed = omega.fixed_points(q);
    let point_vectors: Vec<Vec<u32>> = fixed
        .iter()
        .map(|&w| {
            let mut v = vec![0; n];
            v[w] = 1;
            v
        })
        .collect();
    let mut all = point_vectors.clone();
    all.extend(trace_sum.basis_vectors());
    let joint = FpSubspace::span(p, n, &all);
    let fixed_points_form_basis = joint.dim() == fixed.len() + trace_sum.dim()
        && joint.dim() == fixed_space.dim();

    let mut actions_agree = fixed_points_form_basis;
    if actions_agree {
        // columns: fixed-point vectors then the trace-sum basis
        let system = FpMatrix::from_vectors(p, n, &all)?.transpose();
        let position: std::collections::HashMap<usize, usize> =
            fixed.iter().enumerate().map(|(i, &w)| (w, i)).collect();
        'gens: for x in g.generators_of(normalizer) {
            for v in trace_sum.basis_vectors() {
                if !trace_sum.contains(&permute(omega, x, &v)) {
                    actions_agree = false;
                    break 'gens;
                }
            }
            for (i, v) in point_vectors.iter().enumerate() {
                let image = permute(omega, x, v);
                let coords = system.solve(&image)?;
                let want = position.get(&omega.act(x, fixed[i])).copied();
                let ok = match (coords, want) {
                    (Some(c), Some(j)) => (0..fixed.len()).all(|k| c[k] == (k == j) as u32),
                    _ => false,
                };
                if !ok {
                    actions_agree = false;
                    break 'gens;
                }
            }
        }
    }
    Ok(BrauerComparison {
        dim_fixed_space: fixed_space.dim(),
        dim_trace_sum: trace_sum.dim(),
        dim_quotient: fixed_space.dim() - trace_sum.dim(),
        fixed_points: fixed.len(),
        fixed_points_form_basis,
        actions_agree,
    })
}

fn left_transversal<E: GroupElement>(
    g: &crate::group::FiniteGroup<E>,
    q: &Subgroup,
    r: &Subgroup,
) -> Vec<u32> {
    let mut covered = HashSet::new();
    let mut reps = Vec::new();
    for &x in q.members() {
        if covered.contains(&x) {
            continue;
        }
        reps.push(x);
        for &y in r.members() {
            covered.insert(g.mul(x, y));
        }
    }
    reps
}
