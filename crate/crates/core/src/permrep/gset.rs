use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::gf::FpMatrix;
use crate::group::{FiniteGroup, GroupElement, Subgroup};

/// A finite set with a group acting through permutations of its points,
/// given on a list of generators. `gens[g][i]` is the image of point i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermAction {
    points: usize,
    gens: Vec<Vec<u32>>,
}

impl PermAction {
    pub fn new(points: usize, gens: Vec<Vec<u32>>) -> Result<Self> {
        for g in &gens {
            let mut seen = vec![false; points];
            if g.len() != points {
                return Err(Error::DimensionMismatch {
                    op: "permutation action",
                    detail: format!("generator on {} points, expected {points}", g.len()),
                });
            }
            for &x in g {
                if x as usize >= points || std::mem::replace(&mut seen[x as usize], true) {
                    return Err(Error::InvalidArgument("generator is not a permutation".into()));
                }
            }
        }
        Ok(Self { points, gens })
    }

    /// `n` points each fixed by everything.
    pub fn trivial(points: usize) -> Self {
        Self {
            points,
            gens: Vec::new(),
        }
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn generators(&self) -> &[Vec<u32>] {
        &self.gens
    }

    pub fn orbits(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.points];
        let mut out = Vec::new();
        for s in 0..self.points {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut orbit = vec![s as u32];
            let mut head = 0;
            while head < orbit.len() {
                let x = orbit[head] as usize;
                head += 1;
                for g in &self.gens {
                    let y = g[x];
                    if !seen[y as usize] {
                        seen[y as usize] = true;
                        orbit.push(y);
                    }
                }
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.points > 0 && self.orbits().len() == 1
    }

    /// Permutation matrices over GF(p): column i has its 1 in row g(i).
    pub fn matrices(&self, p: u32) -> Result<Vec<FpMatrix>> {
        self.gens
            .iter()
            .map(|g| FpMatrix::from_fn(p, self.points, self.points, |r, c| (g[c] as usize == r) as u32))
            .collect()
    }
}

/// Left cosets gH of a subgroup, acted on by left multiplication. Point 0 is
/// H itself.
#[derive(Debug, Clone)]
pub struct CosetSpace<'a, E> {
    group: &'a FiniteGroup<E>,
    h: Subgroup,
    reps: Vec<u32>,
    coset_of: Vec<u32>,
}

impl<'a, E: GroupElement> CosetSpace<'a, E> {
    pub fn new(group: &'a FiniteGroup<E>, h: &Subgroup, max_points: u64) -> Result<Self> {
        let index = (group.order() / h.order().max(1)) as u64;
        if index > max_points {
            return Err(Error::cap(
                format!("coset space of index {index}"),
                "module-dim",
                max_points,
            ));
        }
        let (reps, coset_of) = group.left_cosets(h)?;
        Ok(Self {
            group,
            h: h.clone(),
            reps,
            coset_of,
        })
    }

    pub fn group(&self) -> &'a FiniteGroup<E> {
        self.group
    }

    pub fn stabilizer(&self) -> &Subgroup {
        &self.h
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn rep(&self, point: usize) -> u32 {
        self.reps[point]
    }

    /// Image of a point under g.
    #[inline]
    pub fn act(&self, g: u32, point: usize) -> usize {
        self.coset_of[self.group.mul(g, self.reps[point]) as usize] as usize
    }

    pub fn coset_of(&self, g: u32) -> usize {
        self.coset_of[g as usize] as usize
    }

    /// Points fixed by every element of `q`.
    pub fn fixed_points(&self, q: &Subgroup) -> Vec<usize> {
        let gens = self.group.generators_of(q);
        (0..self.len())
            .filter(|&w| gens.iter().all(|&g| self.act(g, w) == w))
            .collect()
    }

    /// Orbit of a point under the members of `k`.
    pub fn orbit(&self, k: &Subgroup, point: usize) -> HashSet<usize> {
        k.members().iter().map(|&g| self.act(g, point)).collect()
    }

    /// Elements of `k` fixing the point.
    pub fn point_stabilizer(&self, k: &Subgroup, point: usize) -> Subgroup {
        let members = k
            .members()
            .iter()
            .copied()
            .filter(|&g| self.act(g, point) == point)
            .collect();
        self.group.subgroup(members).expect("stabilizers are subgroups")
    }

    /// The action of `k` on the given point subset, which must be k-stable.
    /// Points are renumbered in the order given.
    pub fn action_on(&self, k: &Subgroup, points: &[usize]) -> Result<PermAction> {
        let mut pos = vec![u32::MAX; self.len()];
        for (i, &w) in points.iter().enumerate() {
            pos[w] = i as u32;
        }
        let gens = self
            .group
            .generators_of(k)
            .iter()
            .map(|&g| {
                points
                    .iter()
                    .map(|&w| {
                        let img = pos[self.act(g, w)];
                        if img == u32::MAX {
                            Err(Error::InvalidArgument("point set is not stable".into()))
                        } else {
                            Ok(img)
                        }
                    })
                    .collect::<Result<Vec<u32>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        PermAction::new(points.len(), gens)
    }

    /// The action of `k` on every coset.
    pub fn action(&self, k: &Subgroup) -> Result<PermAction> {
        let all: Vec<usize> = (0..self.len()).collect();
        self.action_on(k, &all)
    }
}

/// Double cosets A g B as sorted member lists, in order of least element.
pub fn double_cosets<E: GroupElement>(
    g: &FiniteGroup<E>,
    a: &Subgroup,
    b: &Subgroup,
) -> Vec<Vec<u32>> {
    let mut seen = vec![false; g.order()];
    let mut out = Vec::new();
    for x in 0..g.order() as u32 {
        if seen[x as usize] {
            continue;
        }
        let mut set = Vec::new();
        for &s in a.members() {
            let sx = g.mul(s, x);
            for &t in b.members() {
                let y = g.mul(sx, t);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    set.push(y);
                }
            }
        }
        set.sort_unstable();
        out.push(set);
    }
    out
}
