//! `verify crosscheck --suite NAME`: oracle comparisons and identity and
//! property suites.

use std::fmt::Write as _;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::direct::park_setup;
use super::{guarded, perm_pool, qd_setup, Settings};
use crate::error::{Error, Result};
use crate::group::{GroupConfig, GroupElement};
use crate::park::{coordinates_from_bijection, left_multiplication, right_action_violation};
use crate::permrep::{
    brauer_quotient_definitional, classify_algebra, count_idempotents_gf2, mackey_sizes, CosetSpace, EndoAlgebra,
};
use crate::qd::{check_shear_relation, check_weyl_relation, shear_index_orbit, twisted_shear_counterexample};
use crate::report::{table_hash, VerificationReport};
use crate::wreath_centralizer::{centralizer_wreath, CentralizerOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Centralizer,
    Brauer,
    Iota,
    Idempotents,
    Identities,
    Properties,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Centralizer,
        Suite::Brauer,
        Suite::Iota,
        Suite::Idempotents,
        Suite::Identities,
        Suite::Properties,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Centralizer => "centralizer",
            Suite::Brauer => "brauer",
            Suite::Iota => "iota",
            Suite::Idempotents => "idempotents",
            Suite::Identities => "identities",
            Suite::Properties => "properties",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| {
            let names: Vec<_> = Suite::ALL.iter().map(|x| x.name()).collect();
            Error::InvalidArgument(format!("unknown suite {s:?} (expected one of {})", names.join(", ")))
        })
    }
}

/// Largest endomorphism algebra handed to the idempotent scan.
const SCAN_DIM: usize = 20;

pub fn run_suite(suite: Suite, s: &Settings) -> Result<Vec<VerificationReport>> {
    match suite {
        Suite::Centralizer => Ok(vec![centralizer(s)?]),
        Suite::Brauer => Ok(vec![brauer(s)?]),
        Suite::Iota => [2, 3]
            .iter()
            .flat_map(|&p| [iota_coordinates(p, s), iota_homomorphism(p, s)])
            .chain([iota_random_pairs(5, RANDOM_PAIRS, s)])
            .collect(),
        Suite::Idempotents => Ok(vec![idempotents(s)?]),
        Suite::Identities => Ok(vec![shear_identities()?, index_orbits()?, twisted_matrices()?]),
        Suite::Properties => {
            let mut out = vec![invariants(s)?, mackey(s)?];
            for p in [2, 3] {
                out.push(super::run_lemma("2.1", p, s)?);
            }
            Ok(out)
        }
    }
}

fn centralizer(s: &Settings) -> Result<VerificationReport> {
    guarded("crosscheck-centralizer", json!({ "p": 2 }), || {
        let (m, model) = qd_setup(2, &s.cfg)?;
        let setup = park_setup(&m, &model, s)?;
        let g = &setup.g;
        let subs = g.all_subgroups_of(&setup.ip, s.cfg.lattice_cap)?;
        let rows = subs
            .par_iter()
            .map(|q| {
                let gens: Vec<_> = g.generators_of(q).iter().map(|&x| g.element(x).clone()).collect();
                let c = centralizer_wreath(&model, &gens, &CentralizerOptions::default())?;
                let brute = g.centralizer(&g.generators_of(q));
                let mut got = g.indices_of(&c.elements)?;
                got.sort_unstable();
                Ok((q.order(), brute.order(), c.order.to_string(), c.complete && got == brute.members()))
            })
            .collect::<Result<Vec<_>>>()?;
        let agree = rows.iter().filter(|r| r.3).count();
        let mismatch = rows.iter().find(|r| !r.3);
        Ok((
            mismatch.is_none(),
            json!({
                "subgroups": rows.len(),
                "agree": agree,
                "first_mismatch": mismatch.map(|r| json!({ "subgroup_order": r.0, "brute_force": r.1, "structural": r.2 })),
            }),
        ))
    })
}

fn brauer(s: &Settings) -> Result<VerificationReport> {
    guarded("crosscheck-brauer", json!({ "p": 2 }), || {
        let (m, model) = qd_setup(2, &s.cfg)?;
        let setup = park_setup(&m, &model, s)?;
        let g = &setup.g;
        let omega = CosetSpace::new(g, &setup.h, s.module_cap as u64)?;
        let subs = g.all_subgroups_of(&setup.ip, s.cfg.lattice_cap)?;
        let results = subs
            .par_iter()
            .map(|q| {
                let n = g.normalizer(q);
                let r = brauer_quotient_definitional(&omega, q, &n, 2, s.module_cap, s.cfg.lattice_cap)?;
                Ok((q.order(), r.agrees(), serde_json::to_value(&r).map_err(|e| Error::Internal(e.to_string()))?))
            })
            .collect::<Result<Vec<_>>>()?;
        let bad = results.iter().find(|r| !r.1);
        Ok((
            bad.is_none(),
            json!({ "subgroups": results.len(), "first_mismatch": bad.map(|r| r.2.clone()) }),
        ))
    })
}

fn iota_coordinates(p: u32, s: &Settings) -> Result<VerificationReport> {
    guarded("crosscheck-iota-coordinates", json!({ "p": p }), || {
        let (m, model) = qd_setup(p, &s.cfg)?;
        let p_sub = m.subgroup(m.indices_of(model.sylow().elements())?)?;
        let bad = (0..m.order() as u32)
            .into_par_iter()
            .map(|x| {
                let bij = left_multiplication(&m, x);
                if right_action_violation(&m, &p_sub, &bij).is_some() {
                    return Ok(Some(x));
                }
                let w = coordinates_from_bijection(&model, &m, &bij)?;
                Ok((w != model.embed(m.element(x))?).then_some(x))
            })
            .collect::<Result<Vec<_>>>()?;
        let first = bad.into_iter().flatten().next();
        Ok((
            first.is_none(),
            json!({ "elements": m.order(), "first_mismatch": first.map(|x| m.element(x).to_string()) }),
        ))
    })
}

fn iota_homomorphism(p: u32, s: &Settings) -> Result<VerificationReport> {
    guarded("crosscheck-iota-homomorphism", json!({ "p": p }), || {
        let (m, model) = qd_setup(p, &s.cfg)?;
        let images = crate::park::embed_all(&model, &m)?;
        let n = m.order() as u32;
        let bad = (0..n)
            .into_par_iter()
            .find_any(|&a| (0..n).any(|b| images[m.mul(a, b) as usize] != images[a as usize].op(&images[b as usize])));
        Ok((
            bad.is_none(),
            json!({ "pairs": (n as u64) * (n as u64), "first_bad_left_factor": bad.map(|a| m.element(a).to_string()) }),
        ))
    })
}

const RANDOM_PAIRS: usize = 100_000;

/// ι(xy) = ι(x)ι(y) on seeded random pairs, embedding on demand.
fn iota_random_pairs(p: u32, pairs: usize, s: &Settings) -> Result<VerificationReport> {
    guarded("crosscheck-iota-random-pairs", json!({ "p": p, "pairs": pairs }), || {
        let (m, model) = qd_setup(p, &s.cfg)?;
        let n = m.order() as u32;
        let mut rng = ChaCha8Rng::seed_from_u64(s.seed);
        let draws: Vec<(u32, u32)> = (0..pairs).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect();
        let bad = draws
            .par_iter()
            .map(|&(a, b)| {
                let (x, y) = (m.element(a), m.element(b));
                Ok((model.embed(&x.op(y))? != model.embed(x)?.op(&model.embed(y)?)).then_some((a, b)))
            })
            .collect::<Result<Vec<_>>>()?;
        let first = bad.into_iter().flatten().next();
        Ok((
            first.is_none(),
            json!({ "pairs": pairs, "first_bad_pair": first.map(|(a, b)| [m.element(a).to_string(), m.element(b).to_string()]) }),
        ))
    })
}

/// Endomorphism algebras of small permutation modules over GF(2): the
/// radical verdict against a full idempotent scan.
fn idempotents(s: &Settings) -> Result<VerificationReport> {
    guarded("crosscheck-idempotents", json!({ "p": 2 }), || {
        let mut rows = Vec::new();
        for (name, g) in perm_pool(&s.cfg)? {
            if g.order() % 2 != 0 || g.order() > 120 {
                continue;
            }
            for h in g.all_subgroups(s.cfg.lattice_cap)? {
                let omega = CosetSpace::new(&g, &h, s.module_cap as u64)?;
                let end = EndoAlgebra::new(&omega.action(&g.whole())?, 2, s.module_cap)?;
                if end.dim() > SCAN_DIM {
                    continue;
                }
                let v = classify_algebra(end.algebra(), s.seed)?;
                let count = count_idempotents_gf2(end.algebra())?;
                rows.push((name, h.order(), end.dim(), v.status, count));
            }
        }
        // local modules of the p = 2 sweep
        let (m, model) = qd_setup(2, &s.cfg)?;
        let setup = park_setup(&m, &model, s)?;
        let g = &setup.g;
        let omega = CosetSpace::new(g, &setup.h, s.module_cap as u64)?;
        for q in g.all_subgroups_of(&setup.ip, s.cfg.lattice_cap)? {
            let fixed = omega.fixed_points(&q);
            let local = g.product(&q, &g.centralizer(&g.generators_of(&q)))?;
            let end = EndoAlgebra::new(&omega.action_on(&local, &fixed)?, 2, s.module_cap)?;
            if end.dim() > SCAN_DIM {
                continue;
            }
            let v = classify_algebra(end.algebra(), s.seed)?;
            let count = count_idempotents_gf2(end.algebra())?;
            rows.push(("Brauer quotient at p = 2", q.order(), end.dim(), v.status, count));
        }
        let bad = rows.iter().find(|r| r.3.is_indecomposable() != (r.4 == 2));
        Ok((
            bad.is_none(),
            json!({
                "algebras": rows.len(),
                "largest_dim": rows.iter().map(|r| r.2).max(),
                "first_mismatch": bad.map(|r| json!({ "group": r.0, "subgroup_order": r.1, "dim": r.2, "status": r.3.as_str(), "idempotents": r.4 })),
            }),
        ))
    })
}

fn shear_identities() -> Result<VerificationReport> {
    let primes = [3u32, 5, 7, 11];
    guarded("identities-shear", json!({ "primes": primes }), || {
        let bad: Vec<_> = primes
            .iter()
            .flat_map(|&p| (0..p).map(move |s| (p, s)))
            .filter(|&(p, s)| !check_shear_relation(p, s))
            .collect();
        let weyl: Vec<_> = primes.iter().copied().filter(|&p| !check_weyl_relation(p)).collect();
        Ok((bad.is_empty() && weyl.is_empty(), json!({ "failures": bad, "weyl_failures": weyl })))
    })
}

fn index_orbits() -> Result<VerificationReport> {
    let primes = [3u32, 5, 7, 11];
    guarded("identities-index-orbit", json!({ "primes": primes }), || {
        let mut rows = Vec::new();
        let mut ok = true;
        for p in primes {
            let seq = shear_index_orbit(p)?;
            let inverses = seq.iter().enumerate().all(|(k, &x)| x == crate::gf::inv_mod(k as u32 + 1, p));
            let first_hit = seq.iter().position(|&x| x == p - 1);
            ok &= inverses && first_hit == Some(p as usize - 2);
            rows.push(json!({ "p": p, "sequence": seq, "first_hit": first_hit }));
        }
        Ok((ok, json!({ "orbits": rows })))
    })
}

fn twisted_matrices() -> Result<VerificationReport> {
    let primes = [3u32, 5];
    guarded("identities-twisted-matrix", json!({ "primes": primes }), || {
        let bad: Vec<_> = primes.iter().filter_map(|&p| twisted_shear_counterexample(p).map(|c| (p, c))).collect();
        Ok((bad.is_empty(), json!({ "triples": primes.iter().map(|&p| (p - 1) * (p - 1) * p).sum::<u32>(), "counterexamples": bad })))
    })
}

/// Lagrange, coset partition and Burnside's orbit count over the pool.
fn invariants(s: &Settings) -> Result<VerificationReport> {
    guarded("property-invariants", json!({}), || {
        let mut checked = 0;
        for (name, g) in perm_pool(&s.cfg)? {
            let subs = match g.all_subgroups(s.cfg.lattice_cap) {
                Err(e) if e.is_cap() => g.cyclic_subgroups(&g.whole()),
                r => r?,
            };
            for h in &subs {
                let (reps, label) = g.left_cosets(h)?;
                let mut sizes = vec![0usize; reps.len()];
                label.iter().for_each(|&c| sizes[c as usize] += 1);
                let partition = sizes.iter().all(|&c| c == h.order());
                let lagrange = g.order() == h.order() * reps.len();
                let omega = CosetSpace::new(&g, h, u64::MAX)?;
                let orbits = omega.action(h)?.orbits().len();
                let fixed: usize = h.members().iter().map(|&x| fixed_count(&omega, x)).sum();
                let burnside = fixed == orbits * h.order();
                if !(partition && lagrange && burnside) {
                    return Ok((
                        false,
                        json!({ "group": name, "subgroup_order": h.order(), "partition": partition, "lagrange": lagrange, "burnside": burnside }),
                    ));
                }
                checked += 1;
            }
        }
        Ok((true, json!({ "pairs": checked })))
    })
}

fn fixed_count<E: GroupElement>(omega: &CosetSpace<'_, E>, x: u32) -> usize {
    (0..omega.len()).filter(|&k| omega.act(x, k) == k).count()
}

/// H-orbits on G/K against double coset sizes, for Sylow H and all K.
fn mackey(s: &Settings) -> Result<VerificationReport> {
    guarded("property-mackey", json!({}), || {
        let mut checked = 0;
        for (name, g) in perm_pool(&s.cfg)? {
            if g.order() > 60 {
                continue;
            }
            let subs = g.all_subgroups(s.cfg.lattice_cap)?;
            for p in [2u64, 3, 5, 7] {
                if g.order() as u64 % p != 0 {
                    continue;
                }
                let n = g.sylow(p);
                for k in &subs {
                    let (orbits, cosets) = mackey_sizes(&g, k, &n)?;
                    if orbits != cosets {
                        return Ok((false, json!({ "group": name, "p": p, "subgroup_order": k.order(), "orbits": orbits, "double_cosets": cosets })));
                    }
                    checked += 1;
                }
            }
        }
        Ok((true, json!({ "pairs": checked })))
    })
}

/// Coset table and ι table of the affine group at p, as text.
pub fn tables(p: u32, cfg: &GroupConfig) -> Result<(String, String)> {
    let (m, model) = qd_setup(p, cfg)?;
    let mut cosets = String::new();
    for (j, r) in model.reps().iter().enumerate() {
        writeln!(cosets, "{}\t{}", j + 1, r).expect("string write");
    }
    let mut iota = String::new();
    for x in m.elements() {
        let w = model.embed(x)?;
        let base: Vec<String> = w.base().iter().map(ToString::to_string).collect();
        let top: Vec<String> = (0..w.degree()).map(|i| (w.top().apply(i) + 1).to_string()).collect();
        writeln!(iota, "{x}\t[{}]\t{}", top.join(" "), base.join(" ")).expect("string write");
    }
    Ok((cosets, iota))
}

/// SHA-256 of both tables.
pub fn table_hashes(p: u32, cfg: &GroupConfig) -> Result<Value> {
    let (cosets, iota) = tables(p, cfg)?;
    Ok(json!({ "coset_table_sha256": table_hash(&cosets), "iota_table_sha256": table_hash(&iota) }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    #[test]
    fn suite_names_round_trip() {
        for x in Suite::ALL {
            assert_eq!(x.name().parse::<Suite>().unwrap(), x);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn identity_suites_pass() {
        for r in run_suite(Suite::Identities, &Settings::default()).unwrap() {
            assert_eq!(r.status, Status::Pass, "{}", r.to_json_line());
        }
    }

    #[test]
    fn tables_are_deterministic() {
        let cfg = GroupConfig::default();
        assert_eq!(table_hashes(2, &cfg).unwrap(), table_hashes(2, &cfg).unwrap());
        let (cosets, iota) = tables(2, &cfg).unwrap();
        assert_eq!(cosets.lines().count(), 3);
        assert_eq!(iota.lines().count(), 24);
    }
}
