//! Finite groups small enough to enumerate.
//!
//! Everything here works on fully materialized element tables. Size limits
//! are configuration values, and every violation surfaces as
//! [`Error::CapExceeded`](crate::Error::CapExceeded).

mod element;
mod finite;
mod lattice;
mod series;

pub use element::{GroupElement, Perm};
pub use finite::FiniteGroup;

use serde::{Deserialize, Serialize};

/// Size limits for group computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupConfig {
    /// Largest group `closure` will enumerate.
    pub max_order: u64,
    /// Groups up to this order get a precomputed Cayley table.
    pub table_cap: u64,
    /// Largest group whose full subgroup lattice may be enumerated.
    pub lattice_cap: u64,
}

impl Default for GroupConfig {
    fn default() -> Self {
        Self {
            max_order: 10_000_000,
            table_cap: 1024,
            lattice_cap: 512,
        }
    }
}

/// A subgroup, held as a sorted set of element indices of its parent group.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    members: Vec<u32>,
    mask: Vec<u64>,
    parent_order: usize,
}

impl Subgroup {
    pub(crate) fn from_members(parent_order: usize, mut members: Vec<u32>) -> Self {
        members.sort_unstable();
        members.dedup();
        let mut mask = vec![0u64; parent_order.div_ceil(64)];
        for &m in &members {
            mask[m as usize / 64] |= 1 << (m % 64);
        }
        Self {
            members,
            mask,
            parent_order,
        }
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    #[inline]
    pub fn contains(&self, x: u32) -> bool {
        (self.mask[x as usize / 64] >> (x % 64)) & 1 == 1
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.mask.iter().zip(&other.mask).all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup::from_members(
            self.parent_order,
            self.members
                .iter()
                .copied()
                .filter(|&x| other.contains(x))
                .collect(),
        )
    }

    /// Bitmask key, usable for deduplication.
    pub fn mask(&self) -> &[u64] {
        &self.mask
    }
}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subgroup(order {}, {:?})", self.order(), &self.members[..self.order().min(12)])
    }
}

/// p-part of n.
pub fn p_part(n: u64, p: u64) -> u64 {
    let mut n = n;
    let mut acc = 1;
    while n % p == 0 {
        n /= p;
        acc *= p;
    }
    acc
}

pub fn is_power_of(n: u64, p: u64) -> bool {
    n >= 1 && p_part(n, p) == n
}
