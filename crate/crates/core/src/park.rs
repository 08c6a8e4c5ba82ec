//! The wreath product P ≀ S_n of right-P-equivariant bijections of a group M
//! with Sylow subgroup P, and the embedding of M by left multiplication.
//!
//! An element (x; σ) sends m_i·u to m_{σ(i)}·x_{σ(i)}·u, where m_1..m_n is a
//! fixed left transversal of P. Products are
//! `(x; τ)(y; σ) = ((x_i · y_{τ^-1(i)})_i ; τσ)`.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupConfig, GroupElement, Perm, Subgroup};

/// An element of P ≀ S_n; positions are 0-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WreathElement<E> {
    base: Vec<E>,
    top: Perm,
}

impl<E: GroupElement> WreathElement<E> {
    pub fn new(base: Vec<E>, top: Perm) -> Result<Self> {
        if base.len() != top.degree() {
            return Err(Error::DimensionMismatch {
                op: "wreath element",
                detail: format!("{} coordinates, top of degree {}", base.len(), top.degree()),
            });
        }
        Ok(Self { base, top })
    }

    pub fn base(&self) -> &[E] {
        &self.base
    }

    pub fn top(&self) -> &Perm {
        &self.top
    }

    pub fn degree(&self) -> usize {
        self.base.len()
    }

    pub fn in_base_group(&self) -> bool {
        self.top.is_identity()
    }
}

impl<E: GroupElement> GroupElement for WreathElement<E> {
    fn op(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.degree(), rhs.degree());
        let tinv = self.top.inverse();
        let base = (0..self.degree())
            .map(|i| self.base[i].op(&rhs.base[tinv.apply(i)]))
            .collect();
        Self {
            base,
            top: self.top.op(&rhs.top),
        }
    }

    fn inverse(&self) -> Self {
        // (x; τ)^-1 = ((x_{τ(j)}^-1)_j ; τ^-1)
        let base = (0..self.degree())
            .map(|j| self.base[self.top.apply(j)].inverse())
            .collect();
        Self {
            base,
            top: self.top.inverse(),
        }
    }

    fn identity_like(&self) -> Self {
        Self {
            base: self.base.iter().map(GroupElement::identity_like).collect(),
            top: self.top.identity_like(),
        }
    }

    fn is_identity(&self) -> bool {
        self.top.is_identity() && self.base.iter().all(GroupElement::is_identity)
    }
}

impl<E: fmt::Debug> fmt::Debug for WreathElement<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}; {})", self.base, self.top)
    }
}

/// A group M with a Sylow p-subgroup P and a left transversal m_1..m_n of P.
#[derive(Debug, Clone)]
pub struct Model<E> {
    sylow: FiniteGroup<E>,
    reps: Vec<E>,
    rep_invs: Vec<E>,
}

impl<E: GroupElement> Model<E> {
    /// `sylow` enumerates P; `reps` are the transversal, first one in P.
    pub fn new(sylow: FiniteGroup<E>, reps: Vec<E>) -> Result<Self> {
        if reps.is_empty() {
            return Err(Error::InvalidArgument("empty transversal".into()));
        }
        if sylow.index_of(&reps[0]).is_none() {
            return Err(Error::CosetResolution(
                "first representative must lie in the Sylow subgroup".into(),
            ));
        }
        let rep_invs = reps.iter().map(GroupElement::inverse).collect();
        Ok(Self {
            sylow,
            reps,
            rep_invs,
        })
    }

    /// Model from an enumerated group: P given as a subgroup, transversal
    /// taken from the group's own left-coset enumeration.
    pub fn from_group(m: &FiniteGroup<E>, p: &Subgroup, cfg: &GroupConfig) -> Result<Self> {
        let gens: Vec<E> = m
            .generators_of(p)
            .iter()
            .map(|&i| m.element(i).clone())
            .collect();
        let gens = if gens.is_empty() {
            vec![m.element(m.identity()).clone()]
        } else {
            gens
        };
        let sylow = FiniteGroup::closure(&gens, cfg)?;
        let reps = m
            .left_coset_reps(p)?
            .iter()
            .map(|&i| m.element(i).clone())
            .collect();
        Self::new(sylow, reps)
    }

    pub fn sylow(&self) -> &FiniteGroup<E> {
        &self.sylow
    }

    pub fn reps(&self) -> &[E] {
        &self.reps
    }

    pub fn degree(&self) -> usize {
        self.reps.len()
    }

    /// The unique (j, x) with g = m_j·x and x ∈ P; x as an index into P.
    pub fn resolve(&self, g: &E) -> Result<(usize, u32)> {
        let mut found = None;
        for (j, mi) in self.rep_invs.iter().enumerate() {
            if let Some(x) = self.sylow.index_of(&mi.op(g)) {
                if found.is_some() {
                    return Err(Error::CosetResolution(format!(
                        "{g:?} lies in two cosets of the transversal"
                    )));
                }
                found = Some((j, x));
            }
        }
        found.ok_or_else(|| Error::CosetResolution(format!("{g:?} lies in no coset")))
    }

    /// Top permutation σ_m with m·m_i ∈ m_{σ(i)}P.
    pub fn top_of(&self, m: &E) -> Result<Perm> {
        let images = self
            .reps
            .iter()
            .map(|r| self.resolve(&m.op(r)).map(|(j, _)| j))
            .collect::<Result<Vec<_>>>()?;
        Perm::new(images).map_err(|e| Error::CosetResolution(e.to_string()))
    }

    /// Wreath coordinates of left multiplication by m:
    /// m·m_i = m_{σ(i)}·x_{σ(i)}.
    pub fn embed(&self, m: &E) -> Result<WreathElement<E>> {
        let n = self.degree();
        let mut images = vec![usize::MAX; n];
        let mut base: Vec<Option<E>> = vec![None; n];
        for (i, r) in self.reps.iter().enumerate() {
            let (j, x) = self.resolve(&m.op(r))?;
            if base[j].is_some() {
                return Err(Error::CosetResolution(format!(
                    "left multiplication by {m:?} is not a bijection on cosets"
                )));
            }
            images[i] = j;
            base[j] = Some(self.sylow.element(x).clone());
        }
        let top = Perm::new(images).map_err(|e| Error::CosetResolution(e.to_string()))?;
        WreathElement::new(base.into_iter().map(Option::unwrap).collect(), top)
    }

    /// The bijection represented by a wreath element, applied to g ∈ M.
    pub fn apply(&self, w: &WreathElement<E>, g: &E) -> Result<E> {
        let (i, u) = self.resolve(g)?;
        let j = w.top.apply(i);
        Ok(self.reps[j].op(&w.base[j]).op(self.sylow.element(u)))
    }
}

/// The affine group model with its fixed coset table.
pub fn qd_model(p: u32, cfg: &GroupConfig) -> Result<Model<crate::qd::QdElement>> {
    let table = crate::qd::CosetRepTable::new(p)?;
    Model::new(crate::qd::sylow_group(p, cfg)?, table.reps().to_vec())
}

/// Tops σ_u of ι(u) for u in the Sylow subgroup of the affine group.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct SylowTops {
    pub p: u32,
    pub degree: usize,
    /// Every σ_u fixes positions 1..p−1 (1-based).
    pub fix_first_cosets: bool,
    /// For u outside V: σ_u fixes nothing else and is p − 1 disjoint p-cycles.
    pub shear_cycles: bool,
    /// σ_u depends only on the shear part of u.
    pub depends_on_shear_part: bool,
    /// Cycles of σ for the upper shear itself, 1-based.
    pub shear_top_cycles: Vec<Vec<usize>>,
    pub counterexample: Option<String>,
}

impl SylowTops {
    pub fn passed(&self) -> bool {
        self.fix_first_cosets && self.shear_cycles && self.depends_on_shear_part
    }
}

/// Scans σ_u over all u ∈ P. The cycle claim is only made for odd p.
pub fn sylow_tops(p: u32, cfg: &GroupConfig) -> Result<SylowTops> {
    use crate::qd::{QdElement, Sl2};
    let model = qd_model(p, cfg)?;
    let n = model.degree();
    let first = (p - 1) as usize;
    let alpha = QdElement::linear(Sl2::upper_shear(p));
    let shear_tops: Vec<Perm> = (0..p)
        .map(|i| model.top_of(&alpha.pow(i as u64)))
        .collect::<Result<_>>()?;
    let mut out = SylowTops {
        p,
        degree: n,
        fix_first_cosets: true,
        shear_cycles: true,
        depends_on_shear_part: true,
        shear_top_cycles: shear_tops[1 % p as usize]
            .cycles()
            .into_iter()
            .map(|c| c.into_iter().map(|x| x + 1).collect())
            .collect(),
        counterexample: None,
    };
    for u in model.sylow().elements() {
        let top = model.top_of(u)?;
        // u = v·α^i with i read off the upper-right entry
        let i = u.matrix().entries()[1] as usize;
        if top != shear_tops[i] {
            out.depends_on_shear_part = false;
            out.counterexample.get_or_insert(format!("σ of {u} differs from σ of the shear power {i}"));
        }
        if (0..first).any(|k| !top.fixes(k)) {
            out.fix_first_cosets = false;
            out.counterexample.get_or_insert(format!("σ of {u} moves a coset of the normalizer"));
        }
        if p > 2 && !u.is_translation() {
            let mut ty = top.cycle_type();
            ty.retain(|&c| c > 1);
            let moved_ok = (first..n).all(|k| !top.fixes(k));
            if ty != vec![p as usize; first] || !moved_ok {
                out.shear_cycles = false;
                out.counterexample.get_or_insert(format!("σ of {u} has cycle type {ty:?}"));
            }
        }
    }
    Ok(out)
}

/// P ≀ S_n over a model.
#[derive(Debug, Clone)]
pub struct ParkGroup<E> {
    model: Model<E>,
}

impl<E: GroupElement> ParkGroup<E> {
    pub fn new(model: Model<E>) -> Self {
        Self { model }
    }

    pub fn model(&self) -> &Model<E> {
        &self.model
    }

    pub fn degree(&self) -> usize {
        self.model.degree()
    }

    /// |P|^n · n!
    pub fn order(&self) -> BigUint {
        let n = self.degree() as u32;
        let fact: BigUint = (1..=n as u64).product();
        BigUint::from(self.model.sylow.order()).pow(n) * fact
    }

    pub fn identity(&self) -> WreathElement<E> {
        let one = self.model.sylow.element(self.model.sylow.identity()).clone();
        WreathElement {
            base: vec![one; self.degree()],
            top: Perm::identity(self.degree()),
        }
    }

    /// Base-group element with the given coordinates.
    pub fn base_element(&self, xs: Vec<E>) -> Result<WreathElement<E>> {
        WreathElement::new(xs, Perm::identity(self.degree()))
    }

    pub fn top_element(&self, top: Perm) -> Result<WreathElement<E>> {
        let mut w = self.identity();
        if top.degree() != self.degree() {
            return Err(Error::DimensionMismatch {
                op: "top element",
                detail: format!("degree {} for n = {}", top.degree(), self.degree()),
            });
        }
        w.top = top;
        Ok(w)
    }

    /// Generators of P in the first coordinate, a transposition and an n-cycle.
    pub fn generators(&self) -> Vec<WreathElement<E>> {
        let n = self.degree();
        let id = self.identity();
        let mut gens = Vec::new();
        for g in self.model.sylow.generators() {
            let mut w = id.clone();
            w.base[0] = g.clone();
            gens.push(w);
        }
        if n >= 2 {
            let mut t = id.clone();
            t.top = Perm::from_cycles(n, &[&[0, 1]]).expect("n >= 2");
            gens.push(t);
            let mut c = id.clone();
            c.top = Perm::new((0..n).map(|i| (i + 1) % n).collect()).expect("cycle");
            gens.push(c);
        }
        if gens.is_empty() {
            gens.push(id);
        }
        gens
    }

    /// Enumerates the whole wreath product, refusing above the order cap.
    pub fn enumerate(&self, cfg: &GroupConfig) -> Result<FiniteGroup<WreathElement<E>>> {
        if self.order() > BigUint::from(cfg.max_order) {
            return Err(Error::cap(
                format!("wreath product of order {}", self.order()),
                "max-order",
                cfg.max_order,
            ));
        }
        FiniteGroup::closure(&self.generators(), cfg)
    }
}

/// Images of every element of M, in M's index order.
pub fn embed_all<E: GroupElement>(model: &Model<E>, m: &FiniteGroup<E>) -> Result<Vec<WreathElement<E>>> {
    m.elements().iter().map(|x| model.embed(x)).collect()
}

/// Index set of `elems` inside an enumerated wreath product.
pub fn subgroup_of_images<E: GroupElement>(
    g: &FiniteGroup<WreathElement<E>>,
    elems: &[WreathElement<E>],
) -> Result<Subgroup> {
    g.subgroup(g.indices_of(elems)?)
}

/// Elements with trivial top permutation.
pub fn base_group<E: GroupElement>(g: &FiniteGroup<WreathElement<E>>) -> Subgroup {
    g.filter(&g.whole(), WreathElement::in_base_group)
}

/// Left multiplication x ↦ m·x on M, as a table of element indices.
pub fn left_multiplication(m: &FiniteGroup<impl GroupElement>, g: u32) -> Vec<u32> {
    (0..m.order() as u32).map(|x| m.mul(g, x)).collect()
}

/// Wreath coordinates read off a bijection of M, using forward-enumerated
/// cosets m_j·P rather than membership tests.
pub fn coordinates_from_bijection<E: GroupElement>(
    model: &Model<E>,
    m: &FiniteGroup<E>,
    bijection: &[u32],
) -> Result<WreathElement<E>> {
    let n = model.degree();
    let mut label = vec![usize::MAX; m.order()];
    let rep_idx = m.indices_of(model.reps())?;
    let p_idx = m.indices_of(model.sylow().elements())?;
    for (j, &r) in rep_idx.iter().enumerate() {
        for &u in &p_idx {
            label[m.mul(r, u) as usize] = j;
        }
    }
    let mut images = vec![0; n];
    let mut base = vec![model.sylow().element(0).clone(); n];
    for (i, &r) in rep_idx.iter().enumerate() {
        let img = bijection[r as usize];
        let j = label[img as usize];
        if j == usize::MAX {
            return Err(Error::CosetResolution("transversal does not cover M".into()));
        }
        images[i] = j;
        base[j] = m.element(m.mul(m.inv(rep_idx[j]), img)).clone();
    }
    let top = Perm::new(images).map_err(|e| Error::CosetResolution(e.to_string()))?;
    WreathElement::new(base, top)
}

/// First triple (x, u) with bijection(x·u) ≠ bijection(x)·u, for u ∈ P.
pub fn right_action_violation(
    m: &FiniteGroup<impl GroupElement>,
    p: &Subgroup,
    bijection: &[u32],
) -> Option<(u32, u32)> {
    (0..m.order() as u32)
        .flat_map(|x| p.members().iter().map(move |&u| (x, u)))
        .find(|&(x, u)| bijection[m.mul(x, u) as usize] != m.mul(bijection[x as usize], u))
}

/// Fixed points of a permutation on the 0-based positions.
pub fn fixed_positions(top: &Perm) -> HashSet<usize> {
    (0..top.degree()).filter(|&i| top.fixes(i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qd::{build_qd, sylow_in};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn qd_model(p: u32) -> Model<crate::qd::QdElement> {
        super::qd_model(p, &GroupConfig::default()).unwrap()
    }

    #[test]
    fn wreath_axioms() {
        let model = qd_model(3);
        let park = ParkGroup::new(model.clone());
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let n = park.degree();
        let pe = model.sylow().elements();
        let mut random = || {
            let base = (0..n).map(|_| pe[rng.gen_range(0..pe.len())]).collect();
            let mut img: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                img.swap(i, rng.gen_range(0..=i));
            }
            WreathElement::new(base, Perm::new(img).unwrap()).unwrap()
        };
        for _ in 0..1000 {
            let (a, b, c) = (random(), random(), random());
            assert_eq!(a.op(&b).op(&c), a.op(&b.op(&c)));
            assert!(a.op(&a.inverse()).is_identity());
            assert!(a.inverse().op(&a).is_identity());
        }
        let x = park.base_element(pe[..n].to_vec()).unwrap();
        let y = park.base_element(pe[1..=n].to_vec()).unwrap();
        let xy = x.op(&y);
        for i in 0..n {
            assert_eq!(xy.base()[i], x.base()[i].op(&y.base()[i]));
        }
    }

    #[test]
    fn embedding_is_injective_homomorphism() {
        let cfg = GroupConfig::default();
        for p in [2u32, 3] {
            let model = qd_model(p);
            let m = build_qd(p, &cfg).unwrap();
            let imgs = embed_all(&model, &m).unwrap();
            assert!(imgs[m.identity() as usize].is_identity());
            let distinct: HashSet<_> = imgs.iter().collect();
            assert_eq!(distinct.len(), m.order());
            for a in 0..m.order() as u32 {
                for b in 0..m.order() as u32 {
                    assert_eq!(
                        imgs[m.mul(a, b) as usize],
                        imgs[a as usize].op(&imgs[b as usize])
                    );
                }
            }
        }
    }

    #[test]
    fn embedding_homomorphism_random_p5() {
        let cfg = GroupConfig::default();
        let model = qd_model(5);
        let m = build_qd(5, &cfg).unwrap();
        let imgs = embed_all(&model, &m).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20_000 {
            let a = rng.gen_range(0..m.order() as u32);
            let b = rng.gen_range(0..m.order() as u32);
            assert_eq!(
                imgs[m.mul(a, b) as usize],
                imgs[a as usize].op(&imgs[b as usize])
            );
        }
    }

    #[test]
    fn bijection_and_coordinates_agree() {
        let cfg = GroupConfig::default();
        for p in [2u32, 3] {
            let model = qd_model(p);
            let m = build_qd(p, &cfg).unwrap();
            let ps = sylow_in(&m, p).unwrap();
            for g in 0..m.order() as u32 {
                let bij = left_multiplication(&m, g);
                if p == 2 {
                    assert_eq!(right_action_violation(&m, &ps, &bij), None);
                }
                let w = coordinates_from_bijection(&model, &m, &bij).unwrap();
                assert_eq!(w, model.embed(m.element(g)).unwrap());
                let x = m.element((g * 5 + 1) % m.order() as u32);
                assert_eq!(model.apply(&w, x).unwrap(), m.element(g).op(x));
            }
        }
    }

    #[test]
    fn park_group_at_two() {
        let cfg = GroupConfig::default();
        let model = qd_model(2);
        let park = ParkGroup::new(model.clone());
        assert_eq!(park.order(), BigUint::from(3072u32));
        let g = park.enumerate(&cfg).unwrap();
        assert_eq!(g.order(), 3072);
        let m = build_qd(2, &cfg).unwrap();
        let im = subgroup_of_images(&g, &embed_all(&model, &m).unwrap()).unwrap();
        assert_eq!(g.order() / im.order(), 128);
        let b = base_group(&g);
        assert_eq!(b.order(), 512);
        assert!(g.is_normal_in(&b, &g.whole()));
        let small = GroupConfig {
            max_order: 1000,
            ..cfg
        };
        assert!(park.enumerate(&small).unwrap_err().is_cap());
    }

    #[test]
    fn generic_model_from_s4() {
        let cfg = GroupConfig::default();
        let s4 = FiniteGroup::closure(
            &[
                Perm::from_cycles(4, &[&[0, 1]]).unwrap(),
                Perm::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap(),
            ],
            &cfg,
        )
        .unwrap();
        let p = s4.sylow(2);
        let model = Model::from_group(&s4, &p, &cfg).unwrap();
        assert_eq!(model.degree(), 3);
        let imgs = embed_all(&model, &s4).unwrap();
        for a in 0..24u32 {
            for b in 0..24u32 {
                assert_eq!(imgs[s4.mul(a, b) as usize], imgs[a as usize].op(&imgs[b as usize]));
            }
        }
    }

    #[test]
    fn sylow_tops_at_odd_primes() {
        let cfg = GroupConfig::default();
        for p in [3u32, 5, 7] {
            let r = sylow_tops(p, &cfg).unwrap();
            assert!(r.passed(), "{r:?}");
            assert_eq!(r.shear_top_cycles.len(), p as usize - 1);
            assert!(r.shear_top_cycles.iter().all(|c| c.len() == p as usize && c.iter().all(|&x| x >= p as usize)));
        }
        let r = sylow_tops(2, &cfg).unwrap();
        assert!(r.fix_first_cosets);
    }
}
