//! Centralizers in P ≀ S_n without enumerating the wreath product.
//!
//! (x; τ) commutes with (y; σ) iff τσ = στ and x_i·y_{τ⁻¹(i)} = y_i·x_{σ⁻¹(i)}
//! for all i. So τ permutes the orbits of the tops of S, carrying each orbit
//! onto another by an isomorphism of S-sets, and on each target orbit the base
//! entries are determined by their value at one point. The order is then a
//! permanent over orbits.

use std::collections::{HashMap, HashSet};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use serde::Serialize;

use crate::group::{GroupConfig, GroupElement, Perm};
use crate::park::{Model, WreathElement};

#[derive(Debug, Clone, Copy)]
pub struct CentralizerOptions {
    /// Enumerate every element when the order is at most this.
    pub enumerate_cap: u64,
    /// Otherwise build this many elements and check them.
    pub sample: usize,
    /// State budget for the permanent of a component without identical rows.
    pub permanent_states: usize,
    /// Node budget for the element search.
    pub search_nodes: u64,
}

impl Default for CentralizerOptions {
    fn default() -> Self {
        Self {
            enumerate_cap: 4096,
            sample: 64,
            permanent_states: 1 << 22,
            search_nodes: 2_000_000,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CentralizerResult<E> {
    pub order: BigUint,
    pub is_p_group: bool,
    /// Orbits of the tops of S on the n points.
    pub orbit_count: usize,
    /// Orbit-to-orbit isomorphisms tried.
    pub candidates_examined: u64,
    /// Number of top permutations τ that carry at least one base solution.
    pub admissible_tops: BigUint,
    /// Elements built and checked against every generator of S.
    pub elements: Vec<WreathElement<E>>,
    /// `elements` is the whole centralizer.
    pub complete: bool,
}

struct Gen {
    y: Vec<u32>,
    sigma: Vec<usize>,
    sigma_inv: Vec<usize>,
}

/// One way to carry a source orbit onto a target orbit.
struct Link {
    /// Image of each point of the source orbit, in orbit order.
    images: Vec<usize>,
    /// Base solutions, one entry per point of the target orbit.
    solutions: Vec<Vec<u32>>,
}

struct Solver<'m, E> {
    model: &'m Model<E>,
    gens: Vec<Gen>,
    orbits: Vec<Vec<usize>>,
    links: Vec<Vec<Vec<Link>>>,
    candidates: u64,
}

impl<'m, E: GroupElement> Solver<'m, E> {
    fn new(model: &'m Model<E>, s: &[WreathElement<E>]) -> Result<Self> {
        let n = model.degree();
        let p = model.sylow();
        let mut gens = Vec::with_capacity(s.len());
        for w in s {
            if w.degree() != n {
                return Err(Error::DimensionMismatch {
                    op: "wreath centralizer",
                    detail: format!("element of degree {}, group of degree {n}", w.degree()),
                });
            }
            let y = w
                .base()
                .iter()
                .map(|e| {
                    p.index_of(e)
                        .ok_or_else(|| Error::InvalidArgument(format!("base entry {e:?} is not in P")))
                })
                .collect::<Result<Vec<u32>>>()?;
            let sigma: Vec<usize> = (0..n).map(|i| w.top().apply(i)).collect();
            let mut sigma_inv = vec![0; n];
            for (i, &j) in sigma.iter().enumerate() {
                sigma_inv[j] = i;
            }
            gens.push(Gen { y, sigma, sigma_inv });
        }
        let mut solver = Self {
            model,
            gens,
            orbits: Vec::new(),
            links: Vec::new(),
            candidates: 0,
        };
        solver.orbits = solver.top_orbits(n);
        solver.build_links();
        Ok(solver)
    }

    fn top_orbits(&self, n: usize) -> Vec<Vec<usize>> {
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut orbit = vec![s];
            let mut head = 0;
            while head < orbit.len() {
                let x = orbit[head];
                head += 1;
                for g in &self.gens {
                    if !seen[g.sigma[x]] {
                        seen[g.sigma[x]] = true;
                        orbit.push(g.sigma[x]);
                    }
                }
            }
            out.push(orbit);
        }
        out
    }

    fn build_links(&mut self) {
        let k = self.orbits.len();
        let mut links: Vec<Vec<Vec<Link>>> = (0..k).map(|_| (0..k).map(|_| Vec::new()).collect()).collect();
        for (src, row) in links.iter_mut().enumerate() {
            for (tgt, cell) in row.iter_mut().enumerate() {
                if self.orbits[src].len() != self.orbits[tgt].len() {
                    continue;
                }
                for &b in &self.orbits[tgt] {
                    self.candidates += 1;
                    let Some(phi) = self.isomorphism(src, b) else {
                        continue;
                    };
                    let solutions = self.base_solutions(tgt, &phi);
                    if !solutions.is_empty() {
                        let images = self.orbits[src].iter().map(|&x| phi[x]).collect();
                        cell.push(Link { images, solutions });
                    }
                }
            }
        }
        self.links = links;
    }

    /// The S-set map from orbit `src` sending its first point to `b`, as a
    /// full-length table (usize::MAX off the orbit).
    fn isomorphism(&self, src: usize, b: usize) -> Option<Vec<usize>> {
        let n = self.model.degree();
        let mut phi = vec![usize::MAX; n];
        let a = self.orbits[src][0];
        phi[a] = b;
        let mut stack = vec![a];
        while let Some(x) = stack.pop() {
            for g in &self.gens {
                let (x2, y2) = (g.sigma[x], g.sigma[phi[x]]);
                if phi[x2] == usize::MAX {
                    phi[x2] = y2;
                    stack.push(x2);
                } else if phi[x2] != y2 {
                    return None;
                }
            }
        }
        let images: HashSet<usize> = self.orbits[src].iter().map(|&x| phi[x]).collect();
        (images.len() == self.orbits[src].len()).then_some(phi)
    }

    /// All base vectors on orbit `tgt` solving the commutation equations
    /// when τ restricted to the source orbit is `phi`.
    fn base_solutions(&self, tgt: usize, phi: &[usize]) -> Vec<Vec<u32>> {
        let n = self.model.degree();
        let p = self.model.sylow();
        let orbit = &self.orbits[tgt];
        let mut phi_inv = vec![usize::MAX; n];
        for (x, &y) in phi.iter().enumerate() {
            if y != usize::MAX {
                phi_inv[y] = x;
            }
        }
        let inv_y: Vec<Vec<u32>> = self
            .gens
            .iter()
            .map(|g| g.y.iter().map(|&e| p.inv(e)).collect())
            .collect();
        let mut out = Vec::new();
        let mut x = vec![u32::MAX; n];
        'root: for x0 in 0..p.order() as u32 {
            for &i in orbit {
                x[i] = u32::MAX;
            }
            x[orbit[0]] = x0;
            let mut stack = vec![orbit[0]];
            while let Some(i) = stack.pop() {
                for (g, iy) in self.gens.iter().zip(&inv_y) {
                    // x_{σ⁻¹(i)} = y_i⁻¹ · x_i · y_{τ⁻¹(i)}
                    let j = g.sigma_inv[i];
                    let v = p.mul(p.mul(iy[i], x[i]), g.y[phi_inv[i]]);
                    if x[j] == u32::MAX {
                        x[j] = v;
                        stack.push(j);
                    } else if x[j] != v {
                        continue 'root;
                    }
                }
            }
            out.push(orbit.iter().map(|&i| x[i]).collect());
        }
        out
    }

    fn weights(&self, count_links: bool) -> Vec<Vec<BigUint>> {
        self.links
            .iter()
            .map(|row| {
                row.iter()
                    .map(|cell| {
                        if count_links {
                            BigUint::from(cell.len())
                        } else {
                            cell.iter().map(|l| BigUint::from(l.solutions.len())).sum()
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// Up to `limit` elements, depth first over source orbits.
    fn elements(&self, limit: u64, node_budget: u64) -> Result<Vec<WreathElement<E>>> {
        let n = self.model.degree();
        let mut search = Search {
            out: Vec::new(),
            top: vec![usize::MAX; n],
            base: vec![u32::MAX; n],
            used: vec![false; self.orbits.len()],
            nodes: 0,
            limit,
            node_budget,
        };
        self.descend(0, &mut search)?;
        Ok(search.out)
    }

    fn descend(&self, src: usize, st: &mut Search<E>) -> Result<()> {
        st.nodes += 1;
        if st.nodes > st.node_budget {
            return Err(Error::cap("centralizer element search", "search-nodes", st.node_budget));
        }
        if src == self.orbits.len() {
            let p = self.model.sylow();
            let perm = Perm::new(st.top.clone()).map_err(|e| Error::Internal(e.to_string()))?;
            let entries = st.base.iter().map(|&b| p.element(b).clone()).collect();
            st.out.push(WreathElement::new(entries, perm)?);
            return Ok(());
        }
        for tgt in 0..self.orbits.len() {
            if st.used[tgt] {
                continue;
            }
            for link in &self.links[src][tgt] {
                for (pos, &x) in self.orbits[src].iter().enumerate() {
                    st.top[x] = link.images[pos];
                }
                for sol in &link.solutions {
                    for (pos, &x) in self.orbits[tgt].iter().enumerate() {
                        st.base[x] = sol[pos];
                    }
                    st.used[tgt] = true;
                    self.descend(src + 1, st)?;
                    st.used[tgt] = false;
                    if st.out.len() as u64 >= st.limit {
                        return Ok(());
                    }
                }
            }
        }
        Ok(())
    }
}

struct Search<E> {
    out: Vec<WreathElement<E>>,
    top: Vec<usize>,
    base: Vec<u32>,
    used: Vec<bool>,
    nodes: u64,
    limit: u64,
    node_budget: u64,
}

/// Exact centralizer of the subgroup generated by `s` in P ≀ S_n.
pub fn centralizer_wreath<E: GroupElement>(
    model: &Model<E>,
    s: &[WreathElement<E>],
    opts: &CentralizerOptions,
) -> Result<CentralizerResult<E>> {
    if model.degree() > 32 {
        return Err(Error::cap(
            format!("wreath centralizer on {} points", model.degree()),
            "degree",
            32,
        ));
    }
    let solver = Solver::new(model, s)?;
    let order = permanent(&solver.weights(false), opts.permanent_states)?;
    let admissible_tops = permanent(&solver.weights(true), opts.permanent_states)?;
    let complete = order <= BigUint::from(opts.enumerate_cap);
    let limit = if complete {
        opts.enumerate_cap
    } else {
        opts.sample as u64
    };
    let elements = solver.elements(limit, opts.search_nodes)?;
    if complete && BigUint::from(elements.len()) != order {
        return Err(Error::Internal(format!(
            "enumerated {} centralizer elements, counted {order}",
            elements.len()
        )));
    }
    for w in &elements {
        for g in s {
            if w.op(g) != g.op(w) {
                return Err(Error::Internal(format!("{w:?} does not commute with {g:?}")));
            }
        }
    }
    let prime = smallest_prime_factor(model.sylow().order() as u64);
    Ok(CentralizerResult {
        is_p_group: is_power_of_big(&order, prime),
        order,
        orbit_count: solver.orbits.len(),
        candidates_examined: solver.candidates,
        admissible_tops,
        elements,
        complete,
    })
}

/// C_G(ιQ) for Q generated by `q_gens` in the model, with its order and
/// whether it is a p-group.
pub fn is_p_group_centralizer<E: GroupElement>(
    model: &Model<E>,
    q_gens: &[E],
    opts: &CentralizerOptions,
) -> Result<(bool, BigUint)> {
    let images = q_gens
        .iter()
        .map(|u| model.embed(u))
        .collect::<Result<Vec<_>>>()?;
    let c = centralizer_wreath(model, &images, opts)?;
    Ok((c.is_p_group, c.order))
}

fn smallest_prime_factor(n: u64) -> u64 {
    (2..=n).find(|d| n % d == 0).unwrap_or(1)
}

fn is_power_of_big(n: &BigUint, p: u64) -> bool {
    if p < 2 {
        return n.is_one();
    }
    let p = BigUint::from(p);
    let mut n = n.clone();
    while !n.is_one() {
        if n.is_zero() || !(&n % &p).is_zero() {
            return false;
        }
        n /= &p;
    }
    true
}

fn factorial(b: usize) -> BigUint {
    (1..=b as u64).map(BigUint::from).product()
}

/// Permanent of a square matrix, split into connected components of its
/// support. A component whose rows (or columns) all coincide contributes
/// b!·∏ entries; any other goes through a subset recursion whose live state
/// count is capped.
pub fn permanent(w: &[Vec<BigUint>], state_cap: usize) -> Result<BigUint> {
    let k = w.len();
    if let Some(r) = w.iter().find(|r| r.len() != k) {
        return Err(Error::NotSquare {
            op: "permanent",
            rows: k,
            cols: r.len(),
        });
    }
    if k > 32 {
        return Err(Error::cap(format!("permanent of size {k}"), "permanent-size", 32));
    }
    // union-find on rows 0..k and columns k..2k
    let mut parent: Vec<usize> = (0..2 * k).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    for (r, row) in w.iter().enumerate() {
        for (c, v) in row.iter().enumerate() {
            if !v.is_zero() {
                let (a, b) = (find(&mut parent, r), find(&mut parent, k + c));
                parent[a] = b;
            }
        }
    }
    let mut comps: HashMap<usize, (Vec<usize>, Vec<usize>)> = HashMap::new();
    for x in 0..2 * k {
        let root = find(&mut parent, x);
        let e = comps.entry(root).or_default();
        if x < k {
            e.0.push(x);
        } else {
            e.1.push(x - k);
        }
    }
    let mut total = BigUint::one();
    let mut roots: Vec<usize> = comps.keys().copied().collect();
    roots.sort_unstable();
    for root in roots {
        let (rows, cols) = &comps[&root];
        if rows.len() != cols.len() {
            return Ok(BigUint::zero());
        }
        let sub: Vec<Vec<BigUint>> = rows
            .iter()
            .map(|&r| cols.iter().map(|&c| w[r][c].clone()).collect())
            .collect();
        total *= component_permanent(&sub, state_cap)?;
        if total.is_zero() {
            break;
        }
    }
    Ok(total)
}

fn component_permanent(m: &[Vec<BigUint>], state_cap: usize) -> Result<BigUint> {
    let b = m.len();
    let all_nonzero = m.iter().all(|r| r.iter().all(|v| !v.is_zero()));
    if all_nonzero && m.iter().all(|r| *r == m[0]) {
        return Ok(factorial(b) * m[0].iter().product::<BigUint>());
    }
    if all_nonzero && m.iter().all(|r| r.iter().all(|v| *v == r[0])) {
        return Ok(factorial(b) * m.iter().map(|r| r[0].clone()).product::<BigUint>());
    }
    let mut states: HashMap<u32, BigUint> = HashMap::from([(0, BigUint::one())]);
    for row in m {
        let mut next: HashMap<u32, BigUint> = HashMap::new();
        for (mask, v) in &states {
            for (c, x) in row.iter().enumerate() {
                if mask & (1 << c) == 0 && !x.is_zero() {
                    *next.entry(mask | (1 << c)).or_default() += v * x;
                }
            }
        }
        if next.len() > state_cap {
            return Err(Error::cap(
                format!("permanent of a {b}×{b} component"),
                "permanent-states",
                state_cap as u64,
            ));
        }
        states = next;
    }
    Ok(states.into_values().sum())
}

/// Which argument covers a class representative Q in the structural check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Case {
    /// Q = 1: the module itself, via C_G(ιV).
    Trivial,
    /// |Q| = p: the centralizer of ι(Q·C_V(Q)).
    OrderP,
    /// |Q| ≥ p²: the centralizer of ιQ.
    Large,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructuralEntry {
    pub subgroup_order: usize,
    pub inside_translations: bool,
    pub case: Case,
    /// Order of the subgroup R whose image's centralizer is computed.
    pub subject_order: usize,
    pub centralizer_order: String,
    pub centralizer_is_p_group: bool,
    pub orbit_count: usize,
    pub candidates_examined: u64,
    /// |Q·C_P(Q)|
    pub local_sylow_order: usize,
    /// p-part of |Q·C_M(Q)|
    pub local_p_part: u64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructuralReport {
    pub p: u32,
    pub degree: usize,
    pub sylow_tops: crate::park::SylowTops,
    pub class_count: usize,
    pub entries: Vec<StructuralEntry>,
    /// F_{ιP}(ιM) = F_{ιP}(G) is assumed, not computed:
    /// G is far beyond enumeration here.
    pub fusion_equality_assumed: bool,
}

impl StructuralReport {
    pub fn passed(&self) -> bool {
        self.sylow_tops.passed() && self.entries.iter().all(|e| e.passed)
    }
}

/// For every fully normalized class representative Q ≤ P of the affine
/// group's fusion system: the centralizer condition for its case and the
/// Sylow condition |Q·C_P(Q)| = |Q·C_M(Q)|_p.
pub fn structural_theorem_check(
    p: u32,
    cfg: &GroupConfig,
    opts: &CentralizerOptions,
) -> Result<StructuralReport> {
    use crate::fusion::FusionSystem;
    use crate::group::p_part;
    use crate::qd::{build_qd, sylow_in, translations_in};
    use rayon::prelude::*;

    let sylow_tops = crate::park::sylow_tops(p, cfg)?;
    let model = crate::park::qd_model(p, cfg)?;
    let m = build_qd(p, cfg)?;
    let ps = sylow_in(&m, p)?;
    let v = translations_in(&m, p)?;
    let fs = FusionSystem::new(&m, m.whole(), ps.clone(), p as u64, cfg.lattice_cap)?;
    let cls = fs.classify();
    let p2 = (p * p) as usize;
    let entries = cls
        .representatives
        .par_iter()
        .map(|&qi| {
            let q = fs.subgroup(qi);
            let q_gens = m.generators_of(q);
            let (case, subject) = match q.order() {
                1 => (Case::Trivial, v.clone()),
                o if o == p as usize => {
                    let cv = m.centralizer_in(&v, &q_gens);
                    (Case::OrderP, m.product(q, &cv)?)
                }
                _ => (Case::Large, q.clone()),
            };
            let images = m
                .generators_of(&subject)
                .iter()
                .map(|&x| model.embed(m.element(x)))
                .collect::<Result<Vec<_>>>()?;
            let c = centralizer_wreath(&model, &images, opts)?;
            let local_sylow = m.product(q, &m.centralizer_in(&ps, &q_gens))?;
            let local = m.product(q, &m.centralizer(&q_gens))?;
            let local_p_part = p_part(local.order() as u64, p as u64);
            let subject_ok = match case {
                Case::Large => true,
                Case::OrderP => subject.order() == p2,
                Case::Trivial => subject == v,
            };
            Ok(StructuralEntry {
                subgroup_order: q.order(),
                inside_translations: q.is_subset_of(&v),
                case,
                subject_order: subject.order(),
                centralizer_order: c.order.to_string(),
                centralizer_is_p_group: c.is_p_group,
                orbit_count: c.orbit_count,
                candidates_examined: c.candidates_examined,
                local_sylow_order: local_sylow.order(),
                local_p_part,
                passed: subject_ok && c.is_p_group && local_sylow.order() as u64 == local_p_part,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(StructuralReport {
        p,
        degree: model.degree(),
        sylow_tops,
        class_count: cls.classes.len(),
        entries,
        fusion_equality_assumed: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupConfig;
    use crate::park::{qd_model, ParkGroup};

    fn big(rows: &[&[u64]]) -> Vec<Vec<BigUint>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigUint::from(x)).collect())
            .collect()
    }

    #[test]
    fn permanents() {
        assert_eq!(permanent(&big(&[&[1, 1], &[1, 1]]), 100).unwrap(), BigUint::from(2u32));
        assert_eq!(permanent(&big(&[&[1, 2], &[3, 4]]), 100).unwrap(), BigUint::from(10u32));
        assert_eq!(permanent(&big(&[&[2, 0], &[0, 5]]), 100).unwrap(), BigUint::from(10u32));
        assert_eq!(permanent(&big(&[&[1, 1], &[0, 0]]), 100).unwrap(), BigUint::zero());
        // 3×3 all ones: 3!
        let ones = big(&[&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]]);
        assert_eq!(permanent(&ones, 100).unwrap(), BigUint::from(6u32));
        // against the definition on a small irregular matrix
        let m = big(&[&[1, 2, 0], &[0, 3, 4], &[5, 0, 6]]);
        // permutations: (0,1,2) 1·3·6 = 18, (1,2,0) 2·4·5 = 40
        assert_eq!(permanent(&m, 100).unwrap(), BigUint::from(58u32));
        assert!(permanent(&m, 1).unwrap_err().is_cap());
    }

    #[test]
    fn trivial_subgroup_gives_whole_group() {
        let cfg = GroupConfig::default();
        for p in [2u32, 3, 5] {
            let model = qd_model(p, &cfg).unwrap();
            let c = centralizer_wreath(&model, &[], &CentralizerOptions::default()).unwrap();
            let n = model.degree();
            let want = BigUint::from(model.sylow().order()).pow(n as u32) * factorial(n);
            assert_eq!(c.order, want);
            assert_eq!(c.admissible_tops, factorial(n));
            assert!(!c.is_p_group);
        }
    }

    #[test]
    fn matches_brute_force_at_two() {
        let cfg = GroupConfig::default();
        let model = qd_model(2, &cfg).unwrap();
        let park = ParkGroup::new(model.clone());
        let g = park.enumerate(&cfg).unwrap();
        let m = crate::qd::build_qd(2, &cfg).unwrap();
        let p = crate::qd::sylow_in(&m, 2).unwrap();
        let opts = CentralizerOptions::default();
        for q in m.all_subgroups_of(&p, 512).unwrap() {
            let images: Vec<WreathElement<_>> = m
                .generators_of(&q)
                .iter()
                .map(|&x| model.embed(m.element(x)).unwrap())
                .collect();
            let c = centralizer_wreath(&model, &images, &opts).unwrap();
            assert!(c.complete);
            let brute = g.centralizer(&g.indices_of(&images).unwrap());
            let mut got = g.indices_of(&c.elements).unwrap();
            got.sort_unstable();
            assert_eq!(got, brute.members(), "{q:?}");
        }
    }

    #[test]
    fn translations_at_three_stay_in_base_group() {
        let cfg = GroupConfig::default();
        let model = qd_model(3, &cfg).unwrap();
        let v = crate::qd::translation_generators(3);
        let images: Vec<_> = v.iter().map(|u| model.embed(u).unwrap()).collect();
        let c = centralizer_wreath(&model, &images, &CentralizerOptions::default()).unwrap();
        assert!(c.is_p_group);
        assert!(c.elements.iter().all(WreathElement::in_base_group));
        assert_eq!(c.admissible_tops, BigUint::one());
        // inside B each coordinate centralizes a conjugate of V, and C_P(V) = V
        assert_eq!(c.order, BigUint::from(9u32).pow(8));
    }

    #[test]
    fn order_p_squared_subgroups_at_three() {
        use crate::qd::{central_translation, QdElement, Sl2};
        let cfg = GroupConfig::default();
        let model = qd_model(3, &cfg).unwrap();
        let opts = CentralizerOptions::default();
        let t = central_translation(3);
        let y = QdElement::translation(3, [1, 2]).op(&QdElement::linear(Sl2::upper_shear(3)));
        let (is_p, order) = is_p_group_centralizer(&model, &[t.clone(), y], &opts).unwrap();
        assert!(is_p, "{order}");
        let (is_p, _) = is_p_group_centralizer(&model, &[t], &opts).unwrap();
        assert!(!is_p);
    }

    #[test]
    fn structural_check_at_three() {
        let cfg = GroupConfig::default();
        let r = structural_theorem_check(3, &cfg, &CentralizerOptions::default()).unwrap();
        assert!(r.passed(), "{r:#?}");
        assert!(r.entries.iter().any(|e| e.case == Case::OrderP && e.inside_translations));
        assert!(r.entries.iter().any(|e| e.subgroup_order == 9 && !e.inside_translations));
        assert!(r.entries.iter().any(|e| e.subgroup_order == 27));
    }
}
