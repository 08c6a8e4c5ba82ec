use super::{is_power_of, p_part, FiniteGroup, GroupElement, Subgroup};
use crate::error::{Error, Result};

fn coprime_to(n: u64, p: u64) -> bool {
    n % p != 0
}

impl<E: GroupElement> FiniteGroup<E> {
    /// Smallest normal subgroup containing `set`.
    pub fn normal_closure(&self, set: &[u32]) -> Subgroup {
        let mut gens: Vec<u32> = set.to_vec();
        let mut cur = self.generate(&gens);
        let g_gens = self.generators_of(&self.whole());
        loop {
            let before = cur.order();
            let cur_gens = self.generators_of(&cur);
            for &g in &g_gens {
                for &x in &cur_gens {
                    let y = self.conj(g, x);
                    if !cur.contains(y) {
                        gens.push(y);
                        cur = self.generate(&gens);
                    }
                }
            }
            if cur.order() == before {
                return cur;
            }
        }
    }

    /// O_p(G): intersection of all Sylow p-subgroups.
    pub fn p_core(&self, p: u64) -> Subgroup {
        let s = self.sylow(p);
        self.conjugates(&s, &self.whole())
            .iter()
            .fold(s.clone(), |acc, c| acc.intersection(c))
    }

    /// O_p'(G): largest normal subgroup of order prime to p.
    pub fn p_prime_core(&self, p: u64) -> Subgroup {
        self.p_prime_core_over(&self.trivial(), p)
    }

    /// Preimage of O_p'(G/N) for a normal subgroup N.
    fn p_prime_core_over(&self, n: &Subgroup, p: u64) -> Subgroup {
        let base = self.generators_of(n);
        let mut acc = n.clone();
        for cls in self.conjugacy_classes() {
            let x = cls[0];
            if acc.contains(x) {
                continue;
            }
            let mut set = base.clone();
            set.push(x);
            let l = self.normal_closure(&set);
            if coprime_to((l.order() / n.order()) as u64, p) {
                let mut gens = self.generators_of(&acc);
                gens.push(x);
                acc = self.normal_closure(&gens);
            }
        }
        acc
    }

    /// Preimage of O_p(G/N) for a normal subgroup N: the intersection of S·N
    /// over all Sylow p-subgroups S.
    fn p_core_over(&self, n: &Subgroup, p: u64) -> Result<Subgroup> {
        let s = self.sylow(p);
        let mut acc: Option<Subgroup> = None;
        for c in self.conjugates(&s, &self.whole()) {
            let sn = self.product(&c, n)?;
            acc = Some(match acc {
                None => sn,
                Some(a) => a.intersection(&sn),
            });
        }
        Ok(acc.unwrap_or_else(|| n.clone()))
    }

    /// Terms of the upper p-series 1 ≤ O_p' ≤ O_p',p ≤ O_p',p,p' ≤ ... ending at G.
    pub fn upper_p_series(&self, p: u64) -> Result<Vec<Subgroup>> {
        let whole = self.order();
        let mut series = vec![self.trivial()];
        let mut cur = self.p_prime_core(p);
        series.push(cur.clone());
        let mut want_p = true;
        while cur.order() != whole {
            let next = if want_p {
                self.p_core_over(&cur, p)?
            } else {
                self.p_prime_core_over(&cur, p)
            };
            if next.order() == cur.order() && series.len() >= 2 {
                let prev = &series[series.len() - 2];
                if prev.order() == cur.order() {
                    return Err(Error::InvalidArgument(format!(
                        "group of order {whole} is not p-solvable for p = {p}"
                    )));
                }
            }
            series.push(next.clone());
            cur = next;
            want_p = !want_p;
        }
        Ok(series)
    }

    /// Number of p-factors in the upper p-series.
    pub fn p_length(&self, p: u64) -> Result<usize> {
        let series = self.upper_p_series(p)?;
        // series[0] = 1, series[1] = O_p'; afterwards p-steps and p'-steps alternate
        Ok(series
            .windows(2)
            .skip(1)
            .step_by(2)
            .filter(|w| w[1].order() > w[0].order())
            .count())
    }

    /// O_p'(G) = 1 and C_G(O_p(G)) ≤ O_p(G).
    pub fn is_strictly_p_constrained(&self, p: u64) -> bool {
        if self.p_prime_core(p).order() != 1 {
            return false;
        }
        let op = self.p_core(p);
        let c = self.centralizer(&self.generators_of(&op));
        c.is_subset_of(&op)
    }

    pub fn is_p_group(&self, p: u64) -> bool {
        is_power_of(self.order() as u64, p)
    }

    pub fn p_part_of_order(&self, p: u64) -> u64 {
        p_part(self.order() as u64, p)
    }
}

#[cfg(test)]
mod tests {
    use crate::group::{FiniteGroup, GroupConfig, Perm};

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
    fn s4_cores_and_length() {
        let g = s4();
        let o2 = g.p_core(2);
        assert_eq!(o2.order(), 4);
        for &x in o2.members() {
            // V4 = identity and the three double transpositions
            let t = g.element(x).cycle_type();
            assert!(t == vec![1, 1, 1, 1] || t == vec![2, 2]);
        }
        assert_eq!(g.p_prime_core(2).order(), 1);
        assert_eq!(g.p_length(2).unwrap(), 2);
        assert_eq!(g.p_core(3).order(), 1);
        assert!(g.is_strictly_p_constrained(2));
        assert!(!g.is_strictly_p_constrained(3));
    }

    #[test]
    fn p_group_has_length_one() {
        let d8 = FiniteGroup::closure(
            &[
                Perm::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap(),
                Perm::from_cycles(4, &[&[0, 2]]).unwrap(),
            ],
            &GroupConfig::default(),
        )
        .unwrap();
        assert_eq!(d8.p_core(2), d8.whole());
        assert_eq!(d8.p_length(2).unwrap(), 1);
        assert!(d8.is_strictly_p_constrained(2));
    }

    #[test]
    fn s3_series() {
        let s3 = FiniteGroup::closure(
            &[
                Perm::from_cycles(3, &[&[0, 1]]).unwrap(),
                Perm::from_cycles(3, &[&[0, 1, 2]]).unwrap(),
            ],
            &GroupConfig::default(),
        )
        .unwrap();
        assert_eq!(s3.p_prime_core(2).order(), 3);
        assert_eq!(s3.p_length(2).unwrap(), 1);
        assert_eq!(s3.p_length(3).unwrap(), 1);
        assert_eq!(s3.p_core(3).order(), 3);
    }

    #[test]
    fn nonsolvable_group_is_rejected() {
        let a5 = FiniteGroup::closure(
            &[
                Perm::from_cycles(5, &[&[0, 1, 2]]).unwrap(),
                Perm::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap(),
            ],
            &GroupConfig::default(),
        )
        .unwrap();
        assert!(a5.p_length(2).is_err());
    }
}
