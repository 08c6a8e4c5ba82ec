use serde::Serialize;

use super::algebra::Algebra;
use super::gset::PermAction;
use crate::error::{Error, Result};
use crate::gf::FpMatrix;

/// Endomorphisms of a permutation module, on the basis of orbitals: one 0/1
/// matrix per orbit of the acting group on pairs of points.
#[derive(Debug, Clone)]
pub struct EndoAlgebra {
    algebra: Algebra,
    points: usize,
    orbital: Vec<u32>,
    reps: Vec<(u32, u32)>,
}

impl EndoAlgebra {
    pub fn new(action: &PermAction, p: u32, max_points: usize) -> Result<Self> {
        let n = action.points();
        if n > max_points {
            return Err(Error::cap(
                format!("orbital algebra on {n} points"),
                "module-dim",
                max_points as u64,
            ));
        }
        if n == 0 {
            return Err(Error::InvalidArgument("zero module has no unital endomorphism algebra".into()));
        }
        let mut orbital = vec![u32::MAX; n * n];
        let mut reps = Vec::new();
        for start in 0..n * n {
            if orbital[start] != u32::MAX {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(((start / n) as u32, (start % n) as u32));
            orbital[start] = id;
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                let (a, b) = (x / n, x % n);
                for g in action.generators() {
                    let y = g[a] as usize * n + g[b] as usize;
                    if orbital[y] == u32::MAX {
                        orbital[y] = id;
                        stack.push(y);
                    }
                }
            }
        }
        for g in action.generators() {
            for a in 0..n {
                for b in 0..n {
                    if orbital[g[a] as usize * n + g[b] as usize] != orbital[a * n + b] {
                        return Err(Error::Internal("orbital matrix does not commute with the action".into()));
                    }
                }
            }
        }
        let d = reps.len();
        let mut counts = vec![0u64; d * d * d];
        for (m, &(a, b)) in reps.iter().enumerate() {
            let (a, b) = (a as usize, b as usize);
            for c in 0..n {
                let k = orbital[a * n + c] as usize;
                let l = orbital[c * n + b] as usize;
                counts[(k * d + l) * d + m] += 1;
            }
        }
        let table = counts.into_iter().map(|c| (c % p as u64) as u32).collect();
        let mut one = vec![0; d];
        for a in 0..n {
            one[orbital[a * n + a] as usize] = 1;
        }
        let algebra = Algebra::new(p, d, table, one)?;
        Ok(Self {
            algebra,
            points: n,
            orbital,
            reps,
        })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn orbital_of(&self, a: usize, b: usize) -> usize {
        self.orbital[a * self.points + b] as usize
    }

    pub fn orbital_reps(&self) -> &[(u32, u32)] {
        &self.reps
    }

    /// The endomorphism with orbital coordinates x, as an n×n matrix.
    pub fn to_matrix(&self, x: &[u32]) -> FpMatrix {
        let n = self.points;
        FpMatrix::from_fn(self.algebra.modulus(), n, n, |a, b| x[self.orbital_of(a, b)])
            .expect("valid modulus")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Indecomposability {
    #[serde(rename = "INDECOMPOSABLE_ABS")]
    Absolute,
    #[serde(rename = "INDECOMPOSABLE_NOT_ABS")]
    NotAbsolute,
    #[serde(rename = "DECOMPOSABLE")]
    Decomposable,
}

impl Indecomposability {
    pub fn is_indecomposable(self) -> bool {
        self != Indecomposability::Decomposable
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Indecomposability::Absolute => "INDECOMPOSABLE_ABS",
            Indecomposability::NotAbsolute => "INDECOMPOSABLE_NOT_ABS",
            Indecomposability::Decomposable => "DECOMPOSABLE",
        }
    }
}

/// A nontrivial idempotent endomorphism and the ranks of e and 1 − e.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Splitting {
    pub idempotent: Vec<u32>,
    pub image_dim: usize,
    pub complement_dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub status: Indecomposability,
    pub dim_module: usize,
    pub dim_end: usize,
    pub dim_radical: usize,
    pub dim_top: usize,
    pub witness: Option<Splitting>,
}

/// Indecomposability of the permutation module on `action` over GF(p).
pub fn indecomposable(action: &PermAction, p: u32, max_points: usize, seed: u64) -> Result<Verdict> {
    let end = EndoAlgebra::new(action, p, max_points)?;
    verdict_from_endo(&end, seed)
}

/// Status of an abstract algebra as the endomorphism ring of a module,
/// with a nontrivial idempotent when it is not local.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraVerdict {
    pub status: Indecomposability,
    pub dim_radical: usize,
    pub dim_top: usize,
    pub idempotent: Option<Vec<u32>>,
}

pub fn classify_algebra(a: &Algebra, seed: u64) -> Result<AlgebraVerdict> {
    let j = a.radical()?;
    let (top, comp) = a.quotient(&j)?;
    let mut out = AlgebraVerdict {
        status: Indecomposability::Absolute,
        dim_radical: j.dim(),
        dim_top: top.dim(),
        idempotent: None,
    };
    if top.dim() == 1 {
        return Ok(out);
    }
    let Some(e_top) = top.semisimple_idempotent(seed, 256)? else {
        out.status = Indecomposability::NotAbsolute;
        return Ok(out);
    };
    let mut lifted = vec![0; a.dim()];
    for (k, &c) in comp.iter().enumerate() {
        lifted[c] = e_top[k];
    }
    let e = a.lift_idempotent(&lifted)?;
    if a.is_trivial_idempotent(&e) {
        return Err(Error::Internal("idempotent became trivial after lifting".into()));
    }
    out.status = Indecomposability::Decomposable;
    out.idempotent = Some(e);
    Ok(out)
}

pub fn verdict_from_endo(end: &EndoAlgebra, seed: u64) -> Result<Verdict> {
    let a = end.algebra();
    let c = classify_algebra(a, seed)?;
    let witness = match &c.idempotent {
        None => None,
        Some(e) => {
            let em = end.to_matrix(e);
            let n = end.points();
            let complement = FpMatrix::identity(a.modulus(), n)?.sub(&em)?;
            let (image_dim, complement_dim) = (em.rank(), complement.rank());
            if image_dim + complement_dim != n || em.mul(&em)? != em {
                return Err(Error::Internal("idempotent witness fails on the module".into()));
            }
            Some(Splitting {
                idempotent: e.clone(),
                image_dim,
                complement_dim,
            })
        }
    };
    Ok(Verdict {
        status: c.status,
        dim_module: end.points(),
        dim_end: a.dim(),
        dim_radical: c.dim_radical,
        dim_top: c.dim_top,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permrep::algebra::count_idempotents_gf2;

    fn cyclic_action(n: usize) -> PermAction {
        PermAction::new(n, vec![(0..n as u32).map(|i| (i + 1) % n as u32).collect()]).unwrap()
    }

    #[test]
    fn trivial_and_two_fixed_points() {
        let v = indecomposable(&PermAction::trivial(1), 2, 64, 0).unwrap();
        assert_eq!(v.status, Indecomposability::Absolute);
        assert_eq!(v.dim_end, 1);
        let v = indecomposable(&PermAction::trivial(2), 3, 64, 0).unwrap();
        assert_eq!(v.status, Indecomposability::Decomposable);
        let w = v.witness.unwrap();
        assert_eq!((w.image_dim, w.complement_dim), (1, 1));
    }

    #[test]
    fn regular_modules() {
        // V4 regular at p = 2: group algebra of a 2-group, local
        let a = vec![1, 0, 3, 2];
        let b = vec![2, 3, 0, 1];
        let act = PermAction::new(4, vec![a, b]).unwrap();
        let end = EndoAlgebra::new(&act, 2, 64).unwrap();
        assert_eq!(end.dim(), 4);
        assert_eq!(count_idempotents_gf2(end.algebra()).unwrap(), 2);
        let v = verdict_from_endo(&end, 0).unwrap();
        assert_eq!(v.status, Indecomposability::Absolute);
        assert_eq!(v.dim_radical, 3);
        // C3 regular at p = 2 splits as GF(2) + GF(4)
        let v = indecomposable(&cyclic_action(3), 2, 64, 0).unwrap();
        assert_eq!(v.status, Indecomposability::Decomposable);
        // C7 regular at p = 7: uniserial
        let v = indecomposable(&cyclic_action(7), 7, 64, 0).unwrap();
        assert_eq!(v.status, Indecomposability::Absolute);
    }

    #[test]
    fn field_top_is_not_absolute() {
        // GF(4) = GF(2)[x]/(x² + x + 1), basis 1, x
        let table = vec![1, 0, 0, 1, 0, 1, 1, 1];
        let f4 = Algebra::new(2, 2, table, vec![1, 0]).unwrap();
        let c = classify_algebra(&f4, 0).unwrap();
        assert_eq!(c.status, Indecomposability::NotAbsolute);
        assert_eq!(c.dim_top, 2);
        // C5 regular at p = 2: GF(2) + GF(16), splits off the trivial summand
        let end = EndoAlgebra::new(&cyclic_action(5), 2, 64).unwrap();
        let v = verdict_from_endo(&end, 0).unwrap();
        assert_eq!(v.status, Indecomposability::Decomposable);
        let w = v.witness.unwrap();
        assert_eq!(w.image_dim + w.complement_dim, 5);
        assert!(w.image_dim == 1 || w.complement_dim == 1);
    }

    #[test]
    fn two_transitive_action() {
        // S3 on 3 points: two orbitals
        let act = PermAction::new(3, vec![vec![1, 0, 2], vec![1, 2, 0]]).unwrap();
        let end = EndoAlgebra::new(&act, 2, 64).unwrap();
        assert_eq!(end.dim(), 2);
        // at p = 3 the module is uniserial; at p = 2 it splits off the trivial module
        assert_eq!(indecomposable(&act, 3, 64, 0).unwrap().status, Indecomposability::Absolute);
        assert_eq!(indecomposable(&act, 2, 64, 0).unwrap().status, Indecomposability::Decomposable);
    }
}
