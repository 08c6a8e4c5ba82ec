use std::collections::{HashMap, HashSet, VecDeque};

use super::{GroupConfig, GroupElement, Subgroup};
use crate::error::{Error, Result};

/// A finite group with every element enumerated.
///
/// Elements are sorted by their canonical order and addressed by `u32`
/// indices; subgroups are index sets into this table.
#[derive(Debug, Clone)]
pub struct FiniteGroup<E> {
    elements: Vec<E>,
    index: HashMap<E, u32>,
    generators: Vec<E>,
    identity: u32,
    inverses: Vec<u32>,
    table: Option<Vec<u32>>,
}

impl<E: GroupElement> FiniteGroup<E> {
    /// Smallest closed set containing `generators`.
    pub fn closure(generators: &[E], cfg: &GroupConfig) -> Result<Self> {
        let first = generators
            .first()
            .ok_or_else(|| Error::InvalidArgument("closure needs at least one generator".into()))?;
        let id = first.identity_like();
        let mut seen: HashSet<E> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(id.clone());
        queue.push_back(id);
        while let Some(x) = queue.pop_front() {
            for g in generators {
                let y = x.op(g);
                if !seen.contains(&y) {
                    if seen.len() as u64 >= cfg.max_order {
                        return Err(Error::cap(
                            format!("closure of {} generators", generators.len()),
                            "max-order",
                            cfg.max_order,
                        ));
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<E> = seen.into_iter().collect();
        elements.sort();
        Ok(Self::from_sorted(elements, generators.to_vec(), cfg))
    }

    fn from_sorted(elements: Vec<E>, generators: Vec<E>, cfg: &GroupConfig) -> Self {
        let index: HashMap<E, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i as u32))
            .collect();
        let identity = index[&elements[0].identity_like()];
        let inverses = elements.iter().map(|e| index[&e.inverse()]).collect();
        let n = elements.len();
        let table = (n as u64 <= cfg.table_cap).then(|| {
            let mut t = Vec::with_capacity(n * n);
            for a in &elements {
                for b in &elements {
                    t.push(index[&a.op(b)]);
                }
            }
            t
        });
        Self {
            elements,
            index,
            generators,
            identity,
            inverses,
            table,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn element(&self, i: u32) -> &E {
        &self.elements[i as usize]
    }

    pub fn generators(&self) -> &[E] {
        &self.generators
    }

    pub fn index_of(&self, e: &E) -> Option<u32> {
        self.index.get(e).copied()
    }

    pub fn identity(&self) -> u32 {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.table {
            Some(t) => t[a as usize * self.elements.len() + b as usize],
            None => self.index[&self.elements[a as usize].op(&self.elements[b as usize])],
        }
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inverses[a as usize]
    }

    /// g x g^-1
    #[inline]
    pub fn conj(&self, g: u32, x: u32) -> u32 {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn element_order(&self, a: u32) -> u64 {
        let mut k = 1;
        let mut x = a;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        let mut acc = self.identity;
        for _ in 0..e {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_members(self.order(), (0..self.order() as u32).collect())
    }

    pub fn trivial(&self) -> Subgroup {
        Subgroup::from_members(self.order(), vec![self.identity])
    }

    /// Indices of the given elements; error if one is outside the group.
    pub fn indices_of(&self, elems: &[E]) -> Result<Vec<u32>> {
        elems
            .iter()
            .map(|e| {
                self.index_of(e)
                    .ok_or_else(|| Error::InvalidArgument(format!("{e:?} is not in the group")))
            })
            .collect()
    }

    /// Subgroup generated by the given element indices.
    pub fn generate(&self, gens: &[u32]) -> Subgroup {
        let mut mask = vec![false; self.order()];
        let mut members = vec![self.identity];
        mask[self.identity as usize] = true;
        let mut head = 0;
        while head < members.len() {
            let x = members[head];
            head += 1;
            for &g in gens {
                let y = self.mul(x, g);
                if !mask[y as usize] {
                    mask[y as usize] = true;
                    members.push(y);
                }
            }
        }
        Subgroup::from_members(self.order(), members)
    }

    pub fn generate_elements(&self, gens: &[E]) -> Result<Subgroup> {
        Ok(self.generate(&self.indices_of(gens)?))
    }

    /// Wraps an index set after checking it is a subgroup.
    pub fn subgroup(&self, members: Vec<u32>) -> Result<Subgroup> {
        let s = Subgroup::from_members(self.order(), members);
        if !s.contains(self.identity) {
            return Err(Error::NotSubgroup("identity missing".into()));
        }
        for &a in s.members() {
            if !s.contains(self.inv(a)) {
                return Err(Error::NotSubgroup(format!("inverse of {a} missing")));
            }
            for &b in s.members() {
                if !s.contains(self.mul(a, b)) {
                    return Err(Error::NotSubgroup(format!("product {a}*{b} missing")));
                }
            }
        }
        Ok(s)
    }

    /// A small generating set, chosen greedily in index order.
    pub fn generators_of(&self, s: &Subgroup) -> Vec<u32> {
        let mut gens = Vec::new();
        let mut cur = self.trivial();
        for &x in s.members() {
            if !cur.contains(x) {
                gens.push(x);
                cur = self.generate(&gens);
                if cur.order() == s.order() {
                    break;
                }
            }
        }
        gens
    }

    /// Left coset representatives of `h`; the identity represents `h` itself.
    pub fn left_coset_reps(&self, h: &Subgroup) -> Result<Vec<u32>> {
        Ok(self.left_cosets(h)?.0)
    }

    /// Representatives plus, for each element, the index of its left coset.
    pub fn left_cosets(&self, h: &Subgroup) -> Result<(Vec<u32>, Vec<u32>)> {
        if h.parent_order() != self.order() || !h.contains(self.identity) {
            return Err(Error::NotSubgroup("not a subgroup of this group".into()));
        }
        if self.order() % h.order() != 0 {
            return Err(Error::NotSubgroup(format!(
                "order {} does not divide {}",
                h.order(),
                self.order()
            )));
        }
        let mut coset_of = vec![u32::MAX; self.order()];
        let mut reps = Vec::with_capacity(self.order() / h.order());
        let order_iter = std::iter::once(self.identity)
            .chain((0..self.order() as u32).filter(|&g| g != self.identity));
        for g in order_iter {
            if coset_of[g as usize] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(g);
            for &x in h.members() {
                let y = self.mul(g, x);
                if coset_of[y as usize] != u32::MAX {
                    return Err(Error::NotSubgroup("left cosets overlap".into()));
                }
                coset_of[y as usize] = c;
            }
        }
        Ok((reps, coset_of))
    }

    pub fn centralizer_in(&self, within: &Subgroup, set: &[u32]) -> Subgroup {
        let members = within
            .members()
            .iter()
            .copied()
            .filter(|&x| set.iter().all(|&s| self.mul(x, s) == self.mul(s, x)))
            .collect();
        Subgroup::from_members(self.order(), members)
    }

    pub fn centralizer(&self, set: &[u32]) -> Subgroup {
        self.centralizer_in(&self.whole(), set)
    }

    /// g S g^-1
    pub fn conjugate(&self, s: &Subgroup, g: u32) -> Subgroup {
        Subgroup::from_members(
            self.order(),
            s.members().iter().map(|&x| self.conj(g, x)).collect(),
        )
    }

    /// Whether g S g^-1 = S, checked on a generating set of S.
    pub fn normalizes(&self, g: u32, s: &Subgroup, s_gens: &[u32]) -> bool {
        s_gens.iter().all(|&x| s.contains(self.conj(g, x)))
    }

    pub fn normalizer_in(&self, within: &Subgroup, s: &Subgroup) -> Subgroup {
        let gens = self.generators_of(s);
        let members = within
            .members()
            .iter()
            .copied()
            .filter(|&g| self.normalizes(g, s, &gens))
            .collect();
        Subgroup::from_members(self.order(), members)
    }

    pub fn normalizer(&self, s: &Subgroup) -> Subgroup {
        self.normalizer_in(&self.whole(), s)
    }

    pub fn is_normal_in(&self, s: &Subgroup, within: &Subgroup) -> bool {
        let gens = self.generators_of(within);
        let sg = self.generators_of(s);
        gens.iter().all(|&g| self.normalizes(g, s, &sg))
    }

    /// The set product A·B, required to be a subgroup.
    pub fn product(&self, a: &Subgroup, b: &Subgroup) -> Result<Subgroup> {
        let mut seen = vec![false; self.order()];
        let mut members = Vec::new();
        for &x in a.members() {
            for &y in b.members() {
                let z = self.mul(x, y);
                if !seen[z as usize] {
                    seen[z as usize] = true;
                    members.push(z);
                }
            }
        }
        let s = Subgroup::from_members(self.order(), members);
        // |AB| = |A||B|/|A ∩ B|, and AB is a subgroup iff AB = BA
        for &x in b.members() {
            for &y in a.members() {
                if !s.contains(self.mul(x, y)) {
                    return Err(Error::NotSubgroup("set product is not a subgroup".into()));
                }
            }
        }
        Ok(s)
    }

    /// Conjugacy classes of elements, each sorted, ordered by least member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<u32>> {
        let mut assigned = vec![false; self.order()];
        let mut classes = Vec::new();
        for x in 0..self.order() as u32 {
            if assigned[x as usize] {
                continue;
            }
            let mut cls = Vec::new();
            for g in 0..self.order() as u32 {
                let y = self.conj(g, x);
                if !assigned[y as usize] {
                    assigned[y as usize] = true;
                    cls.push(y);
                }
            }
            cls.sort_unstable();
            classes.push(cls);
        }
        classes
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators_of(&self.whole());
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn center(&self) -> Subgroup {
        let gens = self.generators_of(&self.whole());
        self.centralizer(&gens)
    }

    /// Subgroup whose members are the elements satisfying `pred`.
    pub fn filter(&self, within: &Subgroup, pred: impl Fn(&E) -> bool) -> Subgroup {
        let members = within
            .members()
            .iter()
            .copied()
            .filter(|&i| pred(self.element(i)))
            .collect();
        Subgroup::from_members(self.order(), members)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Perm;

    fn s_n(n: usize) -> FiniteGroup<Perm> {
        let t = Perm::from_cycles(n, &[&[0, 1]]).unwrap();
        let c = Perm::new((0..n).map(|i| (i + 1) % n).collect()).unwrap();
        FiniteGroup::closure(&[t, c], &GroupConfig::default()).unwrap()
    }

    #[test]
    fn closure_examples() {
        let cfg = GroupConfig::default();
        let g = FiniteGroup::closure(&[Perm::identity(3)], &cfg).unwrap();
        assert_eq!(g.order(), 1);
        let a = Perm::from_cycles(3, &[&[0, 1]]).unwrap();
        let b = Perm::from_cycles(3, &[&[1, 2]]).unwrap();
        assert_eq!(FiniteGroup::closure(&[a, b], &cfg).unwrap().order(), 6);
        assert_eq!(s_n(4).order(), 24);
    }

    #[test]
    fn closure_respects_cap() {
        let cfg = GroupConfig {
            max_order: 10,
            ..GroupConfig::default()
        };
        let t = Perm::from_cycles(4, &[&[0, 1]]).unwrap();
        let c = Perm::new(vec![1, 2, 3, 0]).unwrap();
        let err = FiniteGroup::closure(&[t, c], &cfg).unwrap_err();
        assert!(err.is_cap());
    }

    #[test]
    fn coset_examples() {
        let g = s_n(4);
        assert_eq!(g.left_coset_reps(&g.whole()).unwrap(), vec![g.identity()]);
        assert_eq!(g.left_coset_reps(&g.trivial()).unwrap().len(), 24);
        let v4 = g
            .generate_elements(&[
                Perm::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap(),
                Perm::from_cycles(4, &[&[0, 2], &[1, 3]]).unwrap(),
            ])
            .unwrap();
        let (reps, coset_of) = g.left_cosets(&v4).unwrap();
        assert_eq!(reps.len(), 6);
        assert_eq!(reps[0], g.identity());
        // every element lies in exactly the coset it was assigned to
        for x in 0..24u32 {
            let r = reps[coset_of[x as usize] as usize];
            assert!(v4.contains(g.mul(g.inv(r), x)));
        }
    }

    #[test]
    fn centralizer_and_normalizer_in_s4() {
        let g = s_n(4);
        let v4_gens = g
            .indices_of(&[
                Perm::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap(),
                Perm::from_cycles(4, &[&[0, 2], &[1, 3]]).unwrap(),
            ])
            .unwrap();
        let v4 = g.generate(&v4_gens);
        assert_eq!(g.centralizer(&v4_gens), v4);
        assert_eq!(g.centralizer(&[g.identity()]).order(), 24);
        assert_eq!(g.normalizer(&v4).order(), 24);

        let c3 = g
            .generate_elements(&[Perm::from_cycles(4, &[&[0, 1, 2]]).unwrap()])
            .unwrap();
        let n = g.normalizer(&c3);
        assert_eq!(n.order(), 6);
        // brute force: the normalizer of <(1 2 3)> is the symmetric group on {1,2,3}
        for &x in n.members() {
            assert!(g.element(x).fixes(3));
        }
    }

    #[test]
    fn product_and_classes() {
        let g = s_n(4);
        let mut sizes: Vec<usize> = g.conjugacy_classes().iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 3, 6, 6, 8]);
        let a = g
            .generate_elements(&[Perm::from_cycles(4, &[&[0, 1]]).unwrap()])
            .unwrap();
        let b = g
            .generate_elements(&[Perm::from_cycles(4, &[&[1, 2]]).unwrap()])
            .unwrap();
        assert!(g.product(&a, &b).is_err());
        assert_eq!(g.center().order(), 1);
        assert!(!g.is_abelian());
    }

    #[test]
    fn subgroup_check_rejects_non_subgroups() {
        let g = s_n(3);
        let t = g.index_of(&Perm::from_cycles(3, &[&[0, 1]]).unwrap()).unwrap();
        let u = g.index_of(&Perm::from_cycles(3, &[&[1, 2]]).unwrap()).unwrap();
        assert!(g.subgroup(vec![g.identity(), t]).is_ok());
        assert!(g.subgroup(vec![g.identity(), t, u]).is_err());
        assert_eq!(g.generators_of(&g.whole()).len(), 2);
    }
}
