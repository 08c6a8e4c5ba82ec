//! The affine special linear group (Z/p)² ⋊ SL(2,p), its Sylow p-subgroup,
//! and the explicit left-coset transversal of that subgroup.
//!
//! Vectors are columns and matrices act on the left, so the product is
//! `(v, A)(w, B) = (v + A w, A B)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{check_prime, inv_mod};
use crate::group::{FiniteGroup, GroupConfig, GroupElement, Subgroup};

/// A 2×2 matrix of determinant 1 over GF(p).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sl2 {
    p: u8,
    e: [u8; 4],
}

impl Sl2 {
    /// `[[a, b], [c, d]]`; entries are reduced mod p.
    pub fn new(p: u32, a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        check_prime(p)?;
        let r = |x: i64| x.rem_euclid(p as i64) as u8;
        let m = Self {
            p: p as u8,
            e: [r(a), r(b), r(c), r(d)],
        };
        let [a, b, c, d] = m.entries();
        if (a * d + p * p - b * c) % p != 1 % p {
            return Err(Error::InvalidArgument(format!(
                "{m} has determinant different from 1"
            )));
        }
        Ok(m)
    }

    fn raw(p: u32, e: [u32; 4]) -> Self {
        Self {
            p: p as u8,
            e: e.map(|x| (x % p) as u8),
        }
    }

    pub fn identity(p: u32) -> Self {
        Self::raw(p, [1, 0, 0, 1])
    }

    /// `[[1, 1], [0, 1]]`
    pub fn upper_shear(p: u32) -> Self {
        Self::raw(p, [1, 1, 0, 1])
    }

    /// `[[1, 0], [1, 1]]`
    pub fn lower_shear(p: u32) -> Self {
        Self::raw(p, [1, 0, 1, 1])
    }

    /// `[[0, -1], [1, 0]]`
    pub fn weyl(p: u32) -> Self {
        Self::raw(p, [0, p - 1, 1, 0])
    }

    /// `diag(r, r^-1)`, for r a unit mod p.
    pub fn diagonal(p: u32, r: u32) -> Self {
        let r = r % p;
        assert!(r != 0, "diagonal entry must be a unit");
        Self::raw(p, [r, 0, 0, inv_mod(r, p)])
    }

    pub fn modulus(&self) -> u32 {
        self.p as u32
    }

    /// `[a, b, c, d]` for `[[a, b], [c, d]]`.
    pub fn entries(&self) -> [u32; 4] {
        self.e.map(u32::from)
    }

    pub fn apply(&self, v: [u32; 2]) -> [u32; 2] {
        let p = self.modulus();
        let [a, b, c, d] = self.entries();
        [(a * v[0] + b * v[1]) % p, (c * v[0] + d * v[1]) % p]
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.e[2] == 0
    }

    /// Whether the matrix is `[[1, k], [0, 1]]` for some k.
    pub fn is_upper_unipotent(&self) -> bool {
        self.e[0] == 1 && self.e[2] == 0 && self.e[3] == 1
    }
}

impl GroupElement for Sl2 {
    fn op(&self, rhs: &Self) -> Self {
        let p = self.modulus();
        let [a, b, c, d] = self.entries();
        let [w, x, y, z] = rhs.entries();
        Self::raw(p, [a * w + b * y, a * x + b * z, c * w + d * y, c * x + d * z])
    }

    fn inverse(&self) -> Self {
        let p = self.modulus();
        let [a, b, c, d] = self.entries();
        Self::raw(p, [d, p - b, p - c, a])
    }

    fn identity_like(&self) -> Self {
        Self::identity(self.modulus())
    }
}

impl fmt::Display for Sl2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.e;
        write!(f, "[[{a},{b}],[{c},{d}]]")
    }
}

impl fmt::Debug for Sl2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A pair (translation, matrix) in (Z/p)² ⋊ SL(2,p).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QdElement {
    v: [u8; 2],
    m: Sl2,
}

impl QdElement {
    pub fn new(v: [u32; 2], m: Sl2) -> Self {
        let p = m.modulus();
        Self {
            v: v.map(|x| (x % p) as u8),
            m,
        }
    }

    pub fn translation(p: u32, v: [u32; 2]) -> Self {
        Self::new(v, Sl2::identity(p))
    }

    pub fn linear(m: Sl2) -> Self {
        Self::new([0, 0], m)
    }

    pub fn identity(p: u32) -> Self {
        Self::linear(Sl2::identity(p))
    }

    pub fn vector(&self) -> [u32; 2] {
        self.v.map(u32::from)
    }

    pub fn matrix(&self) -> Sl2 {
        self.m
    }

    pub fn modulus(&self) -> u32 {
        self.m.modulus()
    }

    pub fn is_translation(&self) -> bool {
        self.m == Sl2::identity(self.modulus())
    }

    /// Affine action on the point `w` of (Z/p)²: `w ↦ v + A w`.
    pub fn act(&self, w: [u32; 2]) -> [u32; 2] {
        let p = self.modulus();
        let aw = self.m.apply(w);
        [(self.v[0] as u32 + aw[0]) % p, (self.v[1] as u32 + aw[1]) % p]
    }
}

impl GroupElement for QdElement {
    fn op(&self, rhs: &Self) -> Self {
        Self::new(self.act(rhs.vector()), self.m.op(&rhs.m))
    }

    fn inverse(&self) -> Self {
        let p = self.modulus();
        let mi = self.m.inverse();
        let w = mi.apply(self.vector());
        Self::new([(p - w[0]) % p, (p - w[1]) % p], mi)
    }

    fn identity_like(&self) -> Self {
        Self::identity(self.modulus())
    }
}

impl fmt::Display for QdElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(({},{}),{})", self.v[0], self.v[1], self.m)
    }
}

impl fmt::Debug for QdElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Order of the affine group, p³(p² − 1).
pub fn qd_order(p: u32) -> u64 {
    let p = p as u64;
    p * p * p * (p * p - 1)
}

/// Enumerates (Z/p)² ⋊ SL(2,p).
pub fn build_qd(p: u32, cfg: &GroupConfig) -> Result<FiniteGroup<QdElement>> {
    check_prime(p)?;
    if qd_order(p) > cfg.max_order {
        return Err(Error::cap(
            format!("affine group of order {} at p = {p}", qd_order(p)),
            "max-order",
            cfg.max_order,
        ));
    }
    let gens = [
        QdElement::translation(p, [1, 0]),
        QdElement::linear(Sl2::upper_shear(p)),
        QdElement::linear(Sl2::lower_shear(p)),
    ];
    FiniteGroup::closure(&gens, cfg)
}

/// Generators of the translation subgroup V.
pub fn translation_generators(p: u32) -> Vec<QdElement> {
    vec![
        QdElement::translation(p, [1, 0]),
        QdElement::translation(p, [0, 1]),
    ]
}

/// Generators of the Sylow p-subgroup V ⋊ ⟨upper shear⟩.
pub fn sylow_generators(p: u32) -> Vec<QdElement> {
    let mut g = translation_generators(p);
    g.push(QdElement::linear(Sl2::upper_shear(p)));
    g
}

/// The translation by (1, 0), central in the Sylow subgroup.
pub fn central_translation(p: u32) -> QdElement {
    QdElement::translation(p, [1, 0])
}

/// The Sylow subgroup enumerated on its own, without building the whole group.
pub fn sylow_group(p: u32, cfg: &GroupConfig) -> Result<FiniteGroup<QdElement>> {
    check_prime(p)?;
    FiniteGroup::closure(&sylow_generators(p), cfg)
}

pub fn sylow_in(g: &FiniteGroup<QdElement>, p: u32) -> Result<Subgroup> {
    g.generate_elements(&sylow_generators(p))
}

pub fn translations_in(g: &FiniteGroup<QdElement>, p: u32) -> Result<Subgroup> {
    g.generate_elements(&translation_generators(p))
}

/// Left-coset representatives of the Sylow subgroup, in the fixed order
/// `lower_shear^s · diag(r+1)` for j − 1 = s(p−1) + r, followed by
/// `weyl · diag(r+1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetRepTable {
    p: u32,
    reps: Vec<QdElement>,
}

impl CosetRepTable {
    pub fn new(p: u32) -> Result<Self> {
        check_prime(p)?;
        let n = p * p - 1;
        let beta = Sl2::lower_shear(p);
        let reps = (1..=n)
            .map(|j| {
                let m = if j <= p * p - p {
                    let (s, r) = ((j - 1) / (p - 1), (j - 1) % (p - 1));
                    beta.pow(s as u64).op(&Sl2::diagonal(p, r + 1))
                } else {
                    let r = j - 1 - p * (p - 1);
                    Sl2::weyl(p).op(&Sl2::diagonal(p, r + 1))
                };
                QdElement::linear(m)
            })
            .collect();
        Ok(Self { p, reps })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn reps(&self) -> &[QdElement] {
        &self.reps
    }

    /// The j-th representative, 1-based.
    pub fn rep(&self, j: usize) -> &QdElement {
        &self.reps[j - 1]
    }

    /// Asserts the cosets m_j P are pairwise disjoint and cover `g`.
    pub fn check_partition(&self, g: &FiniteGroup<QdElement>) -> Result<()> {
        let p_sub = sylow_in(g, self.p)?;
        let mut hit = vec![false; g.order()];
        for (j, m) in self.reps.iter().enumerate() {
            let mi = g
                .index_of(m)
                .ok_or_else(|| Error::CosetResolution(format!("rep {} not in group", j + 1)))?;
            for &u in p_sub.members() {
                let x = g.mul(mi, u) as usize;
                if hit[x] {
                    return Err(Error::CosetResolution(format!(
                        "coset of rep {} overlaps an earlier coset",
                        j + 1
                    )));
                }
                hit[x] = true;
            }
        }
        if let Some(x) = hit.iter().position(|&h| !h) {
            return Err(Error::CosetResolution(format!(
                "{} lies in no coset",
                g.element(x as u32)
            )));
        }
        Ok(())
    }
}

/// The identity relating `upper · lower^s` to the transversal, in the form
/// that applies to s:
/// - s + 1 invertible: `α β^s = β^{s(s+1)^-1} ν_{s+1} α^{(s+1)^-1}`
/// - s = p − 1:       `α β^{p-1} = γ ν_{p-1} α^{p-1}`
///
/// where α, β, γ, ν are the upper shear, lower shear, Weyl element and diagonal.
pub fn check_shear_relation(p: u32, s: u32) -> bool {
    let alpha = Sl2::upper_shear(p);
    let beta = Sl2::lower_shear(p);
    let lhs = alpha.op(&beta.pow(s as u64));
    let rhs = if (s + 1) % p != 0 {
        let inv = inv_mod(s + 1, p);
        beta.pow((s * inv % p) as u64)
            .op(&Sl2::diagonal(p, s + 1))
            .op(&alpha.pow(inv as u64))
    } else {
        Sl2::weyl(p)
            .op(&Sl2::diagonal(p, p - 1))
            .op(&alpha.pow((p - 1) as u64))
    };
    lhs == rhs
}

/// `α γ = β α^{p-1}`
pub fn check_weyl_relation(p: u32) -> bool {
    let alpha = Sl2::upper_shear(p);
    Sl2::upper_shear(p).op(&Sl2::weyl(p))
        == Sl2::lower_shear(p).op(&alpha.pow((p - 1) as u64))
}

/// Orbit of 1 under s ↦ s(s+1)^-1, stopping at the first value p − 1
/// (where the map is undefined).
pub fn shear_index_orbit(p: u32) -> Result<Vec<u32>> {
    check_prime(p)?;
    if p == 2 {
        return Err(Error::InvalidArgument("needs an odd prime".into()));
    }
    let mut seq = vec![1];
    let mut s = 1;
    while s != p - 1 {
        s = s * inv_mod(s + 1, p) % p;
        if seq.len() >= p as usize {
            return Err(Error::Internal(format!("orbit of 1 does not reach {}", p - 1)));
        }
        seq.push(s);
    }
    Ok(seq)
}

/// The matrix
/// `[[r/r' + i r r', -i r r'], [r/r' + i r r' - r'/r, -i r r' + r'/r]]`
/// which equals `β ν_r α^{-i} ν_{r'}^{-1} β^{-1}`.
pub fn twisted_shear_matrix(p: u32, r: u32, r2: u32, i: u32) -> Sl2 {
    let q = r * inv_mod(r2, p) % p;
    let q_inv = r2 * inv_mod(r, p) % p;
    let irr = i * r % p * r2 % p;
    Sl2::raw(
        p,
        [
            q + irr,
            p - irr,
            (q + irr + p - q_inv) % p,
            (p - irr + q_inv) % p,
        ],
    )
}

/// Exhaustive scan over (r, r', i) ∈ (Z/p)* × (Z/p)* × Z/p: the twisted
/// matrix is upper unipotent exactly when r = r' and i = 0. Returns the first
/// triple that violates this, if any.
pub fn twisted_shear_counterexample(p: u32) -> Option<(u32, u32, u32)> {
    (1..p)
        .flat_map(|r| (1..p).flat_map(move |r2| (0..p).map(move |i| (r, r2, i))))
        .find(|&(r, r2, i)| {
            twisted_shear_matrix(p, r, r2, i).is_upper_unipotent() != (r == r2 && i == 0)
        })
}

/// Exhaustive set of upper-triangular elements; the normalizer of the
/// Sylow subgroup must coincide with it.
pub fn upper_triangular_part(g: &FiniteGroup<QdElement>) -> Subgroup {
    g.filter(&g.whole(), |x| x.matrix().is_upper_triangular())
}

/// Image of the affine action on the p² points of (Z/p)², points numbered
/// `x + p·y`.
pub fn affine_permutation(g: &QdElement) -> crate::group::Perm {
    let p = g.modulus();
    let images = (0..p * p)
        .map(|k| {
            let w = g.act([k % p, k / p]);
            (w[0] + p * w[1]) as usize
        })
        .collect();
    crate::group::Perm::new(images).expect("affine maps are bijective")
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn cfg() -> GroupConfig {
        GroupConfig::default()
    }

    #[test]
    fn sl2_orders() {
        for p in [2u32, 3, 5] {
            let g = FiniteGroup::closure(&[Sl2::upper_shear(p), Sl2::lower_shear(p)], &cfg())
                .unwrap();
            // oracle: count all matrices of determinant 1
            let mut count = 0;
            for a in 0..p {
                for b in 0..p {
                    for c in 0..p {
                        for d in 0..p {
                            count += ((a * d + p * p - b * c) % p == 1 % p) as usize;
                        }
                    }
                }
            }
            assert_eq!(g.order(), count);
            assert_eq!(count as u32, p * (p * p - 1));
        }
        assert!(Sl2::new(3, 1, 1, 1, 1).is_err());
    }

    #[test]
    fn group_orders_and_axioms() {
        for p in [2u32, 3, 5] {
            let g = build_qd(p, &cfg()).unwrap();
            assert_eq!(g.order() as u64, qd_order(p));
        }
        let g = build_qd(3, &cfg()).unwrap();
        let e = g.elements();
        for a in e.iter().step_by(7) {
            for b in e.iter().step_by(11) {
                for c in e.iter().step_by(13) {
                    assert_eq!(a.op(b).op(c), a.op(&b.op(c)));
                }
            }
            assert!(a.op(&a.inverse()).is_identity());
        }
    }

    #[test]
    fn qd2_is_s4() {
        let g = build_qd(2, &cfg()).unwrap();
        let mut sizes: Vec<usize> = g.conjugacy_classes().iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 3, 6, 6, 8]);
        // the affine action on 4 points is faithful, so the image is S4
        let images: HashSet<_> = g.elements().iter().map(affine_permutation).collect();
        assert_eq!(images.len(), 24);
    }

    #[test]
    fn sylow_structure() {
        let p = 3;
        let g = build_qd(p, &cfg()).unwrap();
        let s = sylow_in(&g, p).unwrap();
        assert_eq!(s.order(), 27);
        assert_eq!(g.sylow(3).order(), 27);
        for &x in s.members() {
            assert_eq!(g.pow(x, 3), g.identity());
        }
        let sg = sylow_group(p, &cfg()).unwrap();
        assert_eq!(sg.center().order(), 3);
        assert!(sg.center().contains(sg.index_of(&central_translation(p)).unwrap()));
        let v = translations_in(&g, p).unwrap();
        assert_eq!(v.order(), 9);
        assert_eq!(g.p_core(3), v);

        let g2 = build_qd(2, &cfg()).unwrap();
        let d8 = sylow_group(2, &cfg()).unwrap();
        assert_eq!(d8.order(), 8);
        assert_eq!(d8.conjugacy_classes().len(), 5);
        let order4 = (0..8).filter(|&x| d8.element_order(x) == 4).count();
        assert_eq!(order4, 2);
        assert_eq!(g2.p_core(2).order(), 4);
    }

    #[test]
    fn normalizer_is_upper_triangular() {
        for p in [2u32, 3, 5] {
            let g = build_qd(p, &cfg()).unwrap();
            let s = sylow_in(&g, p).unwrap();
            let n = g.normalizer(&s);
            assert_eq!(n.order() as u32, p * p * p * (p - 1));
            assert_eq!(n, upper_triangular_part(&g));
            for r in 1..p {
                let nu = g.index_of(&QdElement::linear(Sl2::diagonal(p, r))).unwrap();
                assert!(n.contains(nu));
            }
        }
    }

    #[test]
    fn coset_tables() {
        let t2 = CosetRepTable::new(2).unwrap();
        let want = [Sl2::identity(2), Sl2::lower_shear(2), Sl2::weyl(2)].map(QdElement::linear);
        assert_eq!(t2.reps(), &want);
        for p in [2u32, 3, 5, 7] {
            let t = CosetRepTable::new(p).unwrap();
            assert_eq!(t.len() as u32, p * p - 1);
            assert!(t.rep(1).is_identity());
            let g = build_qd(p, &cfg()).unwrap();
            t.check_partition(&g).unwrap();
            let s = sylow_in(&g, p).unwrap();
            let n = g.normalizer(&s);
            for j in 1..p as usize {
                assert!(n.contains(g.index_of(t.rep(j)).unwrap()));
            }
        }
        let t3 = CosetRepTable::new(3).unwrap();
        let b = Sl2::lower_shear(3);
        let d = |r| Sl2::diagonal(3, r);
        let want3: Vec<QdElement> = [
            d(1),
            d(2),
            b.op(&d(1)),
            b.op(&d(2)),
            b.pow(2).op(&d(1)),
            b.pow(2).op(&d(2)),
            Sl2::weyl(3).op(&d(1)),
            Sl2::weyl(3).op(&d(2)),
        ]
        .into_iter()
        .map(QdElement::linear)
        .collect();
        assert_eq!(t3.reps(), want3.as_slice());
    }

    #[test]
    fn shear_relations() {
        // p = 3, s = 1: α β = β² ν₂ α²
        let (a, b) = (Sl2::upper_shear(3), Sl2::lower_shear(3));
        assert_eq!(a.op(&b), b.pow(2).op(&Sl2::diagonal(3, 2)).op(&a.pow(2)));
        for p in [3u32, 5, 7, 11] {
            for s in 0..p {
                assert!(check_shear_relation(p, s), "p={p} s={s}");
            }
            assert!(check_weyl_relation(p));
        }
    }

    #[test]
    fn orbit_of_one() {
        assert_eq!(shear_index_orbit(3).unwrap(), vec![1, 2]);
        assert_eq!(shear_index_orbit(5).unwrap(), vec![1, 3, 2, 4]);
        for p in [3u32, 5, 7, 11, 13] {
            let seq = shear_index_orbit(p).unwrap();
            assert_eq!(seq.len() as u32, p - 1);
            for (s, &v) in seq.iter().enumerate() {
                assert_eq!(v * (s as u32 + 1) % p, 1);
            }
        }
        assert!(shear_index_orbit(2).is_err());
    }

    #[test]
    fn twisted_matrix_matches_product() {
        for p in [3u32, 5] {
            let (a, b) = (Sl2::upper_shear(p), Sl2::lower_shear(p));
            for r in 1..p {
                for r2 in 1..p {
                    for i in 0..p {
                        let prod = b
                            .op(&Sl2::diagonal(p, r))
                            .op(&a.pow(i as u64).inverse())
                            .op(&Sl2::diagonal(p, r2).inverse())
                            .op(&b.inverse());
                        assert_eq!(twisted_shear_matrix(p, r, r2, i), prod);
                    }
                }
            }
            assert_eq!(twisted_shear_counterexample(p), None);
        }
    }
}
