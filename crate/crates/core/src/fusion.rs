//! Fusion systems realized by conjugation inside an enumerated group.
//!
//! Every morphism is kept as its graph on the sorted members of the domain,
//! together with one conjugating element that induces it.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::group::{is_power_of, p_part, FiniteGroup, GroupElement, Subgroup};

/// A map Q → P given by conjugation, `images[k]` being the image of the k-th
/// member of Q.
#[derive(Debug, Clone)]
pub struct Morphism {
    pub images: Vec<u32>,
    pub witness: u32,
}

impl PartialEq for Morphism {
    fn eq(&self, other: &Self) -> bool {
        self.images == other.images
    }
}

impl Eq for Morphism {}

/// The fusion system on P induced by conjugation in H, where H and P are
/// subgroups of a common enumerated ambient group.
pub struct FusionSystem<'a, E> {
    ambient: &'a FiniteGroup<E>,
    h: Subgroup,
    sylow: Subgroup,
    prime: u64,
    subgroups: Vec<Subgroup>,
    lookup: HashMap<Vec<u64>, usize>,
    to_sylow: Vec<OnceLock<Vec<Morphism>>>,
}

/// F-conjugacy classes of subgroups of P with their flags.
#[derive(Debug, Clone)]
pub struct SubgroupClassification {
    /// Each class as indices into the subgroup list, ascending.
    pub classes: Vec<Vec<usize>>,
    /// Per class: the first fully normalized member.
    pub representatives: Vec<usize>,
    pub fully_normalized: Vec<bool>,
    pub fully_centralized: Vec<bool>,
    pub op: Subgroup,
}

/// Outcome of comparing two fusion systems on the same P.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FusionComparison {
    Equal,
    /// A map of `domain` induced by `witness` in one system but by nothing
    /// in the other; `in_first` tells which side has it.
    Differs {
        domain: usize,
        images: Vec<u32>,
        witness: u32,
        in_first: bool,
    },
}

impl<'a, E: GroupElement> FusionSystem<'a, E> {
    /// `sylow` must be a `prime`-subgroup of `h`. It need not be Sylow: the
    /// Wreath case takes ιP inside G.
    pub fn new(
        ambient: &'a FiniteGroup<E>,
        h: Subgroup,
        sylow: Subgroup,
        prime: u64,
        lattice_cap: u64,
    ) -> Result<Self> {
        if !sylow.is_subset_of(&h) {
            return Err(Error::InvalidArgument("P is not contained in H".into()));
        }
        if !is_power_of(sylow.order() as u64, prime) {
            return Err(Error::InvalidArgument(format!(
                "subgroup of order {} is not a {prime}-group",
                sylow.order()
            )));
        }
        let subgroups = ambient.all_subgroups_of(&sylow, lattice_cap)?;
        let lookup = subgroups
            .iter()
            .enumerate()
            .map(|(i, s)| (s.mask().to_vec(), i))
            .collect();
        let to_sylow = (0..subgroups.len()).map(|_| OnceLock::new()).collect();
        Ok(Self {
            ambient,
            h,
            sylow,
            prime,
            subgroups,
            lookup,
            to_sylow,
        })
    }

    pub fn ambient(&self) -> &FiniteGroup<E> {
        self.ambient
    }

    pub fn h(&self) -> &Subgroup {
        &self.h
    }

    pub fn is_sylow(&self) -> bool {
        self.sylow.order() as u64 == p_part(self.h.order() as u64, self.prime)
    }

    pub fn sylow(&self) -> &Subgroup {
        &self.sylow
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    /// All subgroups of P, sorted by order.
    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn subgroup(&self, i: usize) -> &Subgroup {
        &self.subgroups[i]
    }

    pub fn index_of(&self, q: &Subgroup) -> Option<usize> {
        self.lookup.get(q.mask()).copied()
    }

    /// All maps Q → P induced by conjugation with an element of H.
    pub fn hom_to_sylow(&self, qi: usize) -> &[Morphism] {
        self.to_sylow[qi].get_or_init(|| {
            let g = self.ambient;
            let q = &self.subgroups[qi];
            let gens = g.generators_of(q);
            let mut seen: HashMap<Vec<u32>, u32> = HashMap::new();
            let mut out = Vec::new();
            for &x in self.h.members() {
                if !gens.iter().all(|&s| self.sylow.contains(g.conj(x, s))) {
                    continue;
                }
                let images: Vec<u32> = q.members().iter().map(|&s| g.conj(x, s)).collect();
                if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(images.clone()) {
                    e.insert(x);
                    out.push(Morphism { images, witness: x });
                }
            }
            out
        })
    }

    /// Hom_H(Q, R), deduplicated by graph.
    pub fn hom_set(&self, qi: usize, ri: usize) -> Vec<Morphism> {
        let r = &self.subgroups[ri];
        self.hom_to_sylow(qi)
            .iter()
            .filter(|m| m.images.iter().all(|&y| r.contains(y)))
            .cloned()
            .collect()
    }

    /// Index of the image subgroup φ(Q).
    pub fn image_of(&self, phi: &Morphism) -> usize {
        let s = Subgroup::from_members(self.ambient.order(), phi.images.clone());
        self.lookup[s.mask()]
    }

    /// An element of H conjugating Q onto R, if the two are F-conjugate.
    pub fn conjugating_witness(&self, qi: usize, ri: usize) -> Option<u32> {
        if self.subgroups[qi].order() != self.subgroups[ri].order() {
            return None;
        }
        self.hom_set(qi, ri).first().map(|m| m.witness)
    }

    /// F-conjugacy classes of subgroups of P.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut class_of = vec![usize::MAX; self.subgroups.len()];
        let mut classes = Vec::new();
        for qi in 0..self.subgroups.len() {
            if class_of[qi] != usize::MAX {
                continue;
            }
            let mut members: Vec<usize> = self
                .hom_to_sylow(qi)
                .iter()
                .map(|m| self.image_of(m))
                .collect();
            members.sort_unstable();
            members.dedup();
            for &m in &members {
                class_of[m] = classes.len();
            }
            classes.push(members);
        }
        classes
    }

    pub fn normalizer_order_in_sylow(&self, qi: usize) -> usize {
        self.ambient
            .normalizer_in(&self.sylow, &self.subgroups[qi])
            .order()
    }

    pub fn centralizer_order_in_sylow(&self, qi: usize) -> usize {
        let g = self.ambient;
        g.centralizer_in(&self.sylow, &g.generators_of(&self.subgroups[qi]))
            .order()
    }

    /// O_p(H): the intersection of the H-conjugates of P. For a model this
    /// is O_p of its fusion system. Only meaningful when P is Sylow in H.
    pub fn op(&self) -> Subgroup {
        self.ambient
            .conjugates(&self.sylow, &self.h)
            .iter()
            .fold(self.sylow.clone(), |acc, c| acc.intersection(c))
    }

    /// C_P(O_p(F)) ≤ O_p(F)
    pub fn is_constrained(&self) -> bool {
        let g = self.ambient;
        let op = self.op();
        g.centralizer_in(&self.sylow, &g.generators_of(&op))
            .is_subset_of(&op)
    }

    pub fn classify(&self) -> SubgroupClassification {
        let classes = self.classes();
        let n = self.subgroups.len();
        let norm: Vec<usize> = (0..n).map(|i| self.normalizer_order_in_sylow(i)).collect();
        let cent: Vec<usize> = (0..n).map(|i| self.centralizer_order_in_sylow(i)).collect();
        let mut fully_normalized = vec![false; n];
        let mut fully_centralized = vec![false; n];
        let mut representatives = Vec::new();
        for cls in &classes {
            let max_n = cls.iter().map(|&i| norm[i]).max().unwrap_or(0);
            let max_c = cls.iter().map(|&i| cent[i]).max().unwrap_or(0);
            for &i in cls {
                fully_normalized[i] = norm[i] == max_n;
                fully_centralized[i] = cent[i] == max_c;
            }
            representatives.push(*cls.iter().find(|&&i| fully_normalized[i]).expect("nonempty class"));
        }
        SubgroupClassification {
            classes,
            representatives,
            fully_normalized,
            fully_centralized,
            op: self.op(),
        }
    }
}

/// Compares two fusion systems on the same P inside the same ambient group.
pub fn fusion_equal<E: GroupElement>(
    a: &FusionSystem<'_, E>,
    b: &FusionSystem<'_, E>,
) -> Result<FusionComparison> {
    if !std::ptr::eq(a.ambient, b.ambient) || a.sylow != b.sylow {
        return Err(Error::InvalidArgument(
            "fusion systems must share the ambient group and P".into(),
        ));
    }
    for qi in 0..a.subgroups.len() {
        let (ha, hb) = (a.hom_to_sylow(qi), b.hom_to_sylow(qi));
        if let Some(m) = ha.iter().find(|m| !hb.contains(m)) {
            return Ok(FusionComparison::Differs {
                domain: qi,
                images: m.images.clone(),
                witness: m.witness,
                in_first: true,
            });
        }
        if let Some(m) = hb.iter().find(|m| !ha.contains(m)) {
            return Ok(FusionComparison::Differs {
                domain: qi,
                images: m.images.clone(),
                witness: m.witness,
                in_first: false,
            });
        }
    }
    Ok(FusionComparison::Equal)
}
