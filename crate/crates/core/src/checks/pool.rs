//! Small permutation groups used by the property suites, and seeded samples
//! of subgroup pairs with p-power index.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{symmetric_group, Settings};
use crate::error::Result;
use crate::group::{is_power_of, FiniteGroup, GroupConfig, Perm, Subgroup};
use crate::permrep::{indecomposable, CosetSpace, Indecomposability};
use crate::qd::{affine_permutation, build_qd};

/// Groups whose full subgroup lattice stays under this size are used for
/// Green samples.
const LATTICE_CAP: u64 = 2048;

fn closure(n: usize, cycles: &[&[&[usize]]], cfg: &GroupConfig) -> Result<FiniteGroup<Perm>> {
    let gens = cycles
        .iter()
        .map(|c| Perm::from_cycles(n, c))
        .collect::<Result<Vec<_>>>()?;
    FiniteGroup::closure(&gens, cfg)
}

/// Named groups of order at most 216, all as permutation groups.
pub fn perm_pool(cfg: &GroupConfig) -> Result<Vec<(&'static str, FiniteGroup<Perm>)>> {
    let qd3 = build_qd(3, cfg)?;
    let qd3_gens: Vec<Perm> = qd3.generators().iter().map(affine_permutation).collect();
    Ok(vec![
        ("S3", symmetric_group(3, cfg)?),
        ("S4", symmetric_group(4, cfg)?),
        ("A4", closure(4, &[&[&[0, 1, 2]], &[&[1, 2, 3]]], cfg)?),
        ("D8", closure(4, &[&[&[0, 1, 2, 3]], &[&[0, 2]]], cfg)?),
        ("S5", symmetric_group(5, cfg)?),
        ("A5", closure(5, &[&[&[0, 1, 2]], &[&[0, 1, 2, 3, 4]]], cfg)?),
        ("D10", closure(5, &[&[&[0, 1, 2, 3, 4]], &[&[1, 4], &[2, 3]]], cfg)?),
        ("F20", closure(5, &[&[&[0, 1, 2, 3, 4]], &[&[1, 2, 4, 3]]], cfg)?),
        ("Qd(3)", FiniteGroup::closure(&qd3_gens, cfg)?),
        // x ↦ x + 1 and x ↦ 3x on Z/7
        ("AGL(1,7)", closure(7, &[&[&[0, 1, 2, 3, 4, 5, 6]], &[&[1, 3, 2, 6, 4, 5]]], cfg)?),
        // x ↦ x + 1 and x ↦ 2x
        ("C7:C3", closure(7, &[&[&[0, 1, 2, 3, 4, 5, 6]], &[&[1, 2, 4], &[3, 6, 5]]], cfg)?),
    ])
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GreenInstance {
    pub group: &'static str,
    pub group_order: usize,
    pub subgroup_order: usize,
    pub index: usize,
    pub status: Indecomposability,
}

impl GreenInstance {
    pub fn passed(&self) -> bool {
        self.status == Indecomposability::Absolute
    }
}

/// `count` seeded draws of (G, H) with |G:H| a power of p, each with the
/// verdict for k[G/H].
pub fn green_instances(p: u32, count: usize, seed: u64, s: &Settings) -> Result<Vec<GreenInstance>> {
    let mut candidates: Vec<(&'static str, usize, Subgroup)> = Vec::new();
    let pool = perm_pool(&s.cfg)?;
    for (k, (name, g)) in pool.iter().enumerate() {
        if g.order() % p as usize != 0 {
            continue;
        }
        let subs = match g.all_subgroups(LATTICE_CAP) {
            Err(e) if e.is_cap() => continue,
            r => r?,
        };
        for h in subs {
            if is_power_of((g.order() / h.order()) as u64, p as u64) {
                candidates.push((name, k, h));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ u64::from(p));
    (0..count)
        .map(|_| {
            let (name, k, h) = candidates.choose(&mut rng).expect("the pool has groups of every small prime order");
            let g = &pool[*k].1;
            let omega = CosetSpace::new(g, h, s.module_cap as u64)?;
            let v = indecomposable(&omega.action(&g.whole())?, p, s.module_cap, seed)?;
            Ok(GreenInstance {
                group: name,
                group_order: g.order(),
                subgroup_order: h.order(),
                index: omega.len(),
                status: v.status,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pool_orders() {
        let pool = perm_pool(&GroupConfig::default()).unwrap();
        let orders: Vec<usize> = pool.iter().map(|(_, g)| g.order()).collect();
        assert_eq!(orders, vec![6, 24, 12, 8, 120, 60, 10, 20, 216, 42, 21]);
    }

    #[test]
    fn green_samples_are_absolutely_indecomposable() {
        let s = Settings::default();
        for p in [2, 3] {
            let xs = green_instances(p, 10, 5, &s).unwrap();
            assert_eq!(xs.len(), 10);
            assert!(xs.iter().all(|x| is_power_of(x.index as u64, p as u64)));
            assert!(xs.iter().all(GreenInstance::passed), "{xs:?}");
        }
    }
}
