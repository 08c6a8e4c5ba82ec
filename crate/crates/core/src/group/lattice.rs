use std::collections::HashSet;

use super::{is_power_of, p_part, FiniteGroup, GroupElement, Subgroup};
use crate::error::{Error, Result};

impl<E: GroupElement> FiniteGroup<E> {
    /// Cyclic subgroups of `within`, deduplicated, in order of first generator.
    pub fn cyclic_subgroups(&self, within: &Subgroup) -> Vec<Subgroup> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for &x in within.members() {
            let c = self.generate(&[x]);
            if seen.insert(c.mask().to_vec()) {
                out.push(c);
            }
        }
        out
    }

    /// Every subgroup of `within`, sorted by order then by members.
    ///
    /// Bottom-up: start from the cyclic subgroups and repeatedly join with a
    /// cyclic subgroup not yet contained.
    pub fn all_subgroups_of(&self, within: &Subgroup, cap: u64) -> Result<Vec<Subgroup>> {
        if within.order() as u64 > cap {
            return Err(Error::cap(
                format!("subgroup lattice of a group of order {}", within.order()),
                "lattice",
                cap,
            ));
        }
        let cyclic = self.cyclic_subgroups(within);
        let cyclic_gens: Vec<u32> = cyclic
            .iter()
            .map(|c| self.generators_of(c).first().copied().unwrap_or(self.identity()))
            .collect();
        let mut seen: HashSet<Vec<u64>> = cyclic.iter().map(|c| c.mask().to_vec()).collect();
        let mut all: Vec<Subgroup> = cyclic.clone();
        let mut frontier = cyclic;
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for s in &frontier {
                let s_gens = self.generators_of(s);
                for &cg in &cyclic_gens {
                    if s.contains(cg) {
                        continue;
                    }
                    let mut gens = s_gens.clone();
                    gens.push(cg);
                    let j = self.generate(&gens);
                    if seen.insert(j.mask().to_vec()) {
                        next.push(j.clone());
                        all.push(j);
                    }
                }
            }
            frontier = next;
        }
        all.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members().cmp(b.members())));
        Ok(all)
    }

    pub fn all_subgroups(&self, cap: u64) -> Result<Vec<Subgroup>> {
        self.all_subgroups_of(&self.whole(), cap)
    }

    /// A Sylow p-subgroup of `within`, grown one step at a time inside normalizers.
    pub fn sylow_in(&self, within: &Subgroup, p: u64) -> Subgroup {
        let target = p_part(within.order() as u64, p) as usize;
        let mut s = self.trivial();
        while s.order() < target {
            let n = self.normalizer_in(within, &s);
            let mut grown = None;
            for &x in n.members() {
                if s.contains(x) {
                    continue;
                }
                let ord = self.element_order(x);
                if !is_power_of(ord, p) {
                    continue;
                }
                let xp = self.pow(x, p);
                if s.contains(xp) {
                    let mut gens = self.generators_of(&s);
                    gens.push(x);
                    grown = Some(self.generate(&gens));
                    break;
                }
            }
            // A p-subgroup that is not Sylow is properly contained in a p-subgroup
            // of its normalizer, so some such x always exists.
            s = grown.expect("p-subgroup below the Sylow order must grow in its normalizer");
        }
        s
    }

    pub fn sylow(&self, p: u64) -> Subgroup {
        self.sylow_in(&self.whole(), p)
    }

    /// All conjugates g S g^-1 for g in `by`, deduplicated.
    pub fn conjugates(&self, s: &Subgroup, by: &Subgroup) -> Vec<Subgroup> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for &g in by.members() {
            let c = self.conjugate(s, g);
            if seen.insert(c.mask().to_vec()) {
                out.push(c);
            }
        }
        out
    }

    /// Conjugating element g in `by` with g A g^-1 = B, searching generators only.
    pub fn conjugating_element(&self, a: &Subgroup, b: &Subgroup, by: &Subgroup) -> Option<u32> {
        if a.order() != b.order() {
            return None;
        }
        let gens = self.generators_of(a);
        by.members()
            .iter()
            .copied()
            .find(|&g| gens.iter().all(|&x| b.contains(self.conj(g, x))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{GroupConfig, Perm};

    fn group(gens: &[Perm]) -> FiniteGroup<Perm> {
        FiniteGroup::closure(gens, &GroupConfig::default()).unwrap()
    }

    fn d8() -> FiniteGroup<Perm> {
        group(&[
            Perm::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap(),
            Perm::from_cycles(4, &[&[0, 2]]).unwrap(),
        ])
    }

    /// Oracle: count subsets that are closed under multiplication.
    fn brute_force_subgroup_count<E: GroupElement>(g: &FiniteGroup<E>) -> usize {
        let n = g.order();
        assert!(n <= 16);
        (0u32..1 << n)
            .filter(|&mask| {
                let has = |i: u32| mask >> i & 1 == 1;
                has(g.identity())
                    && (0..n as u32).filter(|&a| has(a)).all(|a| {
                        (0..n as u32).filter(|&b| has(b)).all(|b| has(g.mul(a, b)))
                    })
            })
            .count()
    }

    #[test]
    fn subgroup_counts() {
        let c3 = group(&[Perm::from_cycles(3, &[&[0, 1, 2]]).unwrap()]);
        assert_eq!(c3.all_subgroups(512).unwrap().len(), 2);
        let v4 = group(&[
            Perm::from_cycles(4, &[&[0, 1]]).unwrap(),
            Perm::from_cycles(4, &[&[2, 3]]).unwrap(),
        ]);
        assert_eq!(v4.all_subgroups(512).unwrap().len(), 5);
        let d = d8();
        assert_eq!(brute_force_subgroup_count(&d), 10);
        assert_eq!(d.all_subgroups(512).unwrap().len(), 10);
    }

    #[test]
    fn lattice_complete_for_nonsolvable_group() {
        // A5 has 59 subgroups, including itself, which is not reachable by
        // cyclic extension through normal subgroups.
        let a5 = group(&[
            Perm::from_cycles(5, &[&[0, 1, 2]]).unwrap(),
            Perm::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap(),
        ]);
        assert_eq!(a5.order(), 60);
        let subs = a5.all_subgroups(512).unwrap();
        assert_eq!(subs.len(), 59);
        for s in &subs {
            assert_eq!(60 % s.order(), 0);
        }
    }

    #[test]
    fn lattice_cap_is_enforced() {
        let d = d8();
        assert!(d.all_subgroups(4).unwrap_err().is_cap());
    }

    #[test]
    fn sylow_orders() {
        let s4 = group(&[
            Perm::from_cycles(4, &[&[0, 1]]).unwrap(),
            Perm::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap(),
        ]);
        assert_eq!(s4.sylow(2).order(), 8);
        assert_eq!(s4.sylow(3).order(), 3);
        assert_eq!(s4.sylow(5).order(), 1);
        let d = d8();
        assert_eq!(d.sylow(2), d.whole());
    }
}
