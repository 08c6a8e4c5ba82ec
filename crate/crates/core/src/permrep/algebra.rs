//! Finite-dimensional associative algebras over GF(p) given by structure
//! constants: radicals, quotients, centres and idempotents.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::gf::{inv_mod, FpMatrix, FpSubspace};

/// `table[(i * dim + j) * dim + k]` is the coefficient of e_k in e_i·e_j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    p: u32,
    dim: usize,
    table: Vec<u32>,
    one: Vec<u32>,
}

impl Algebra {
    pub fn new(p: u32, dim: usize, table: Vec<u32>, one: Vec<u32>) -> Result<Self> {
        crate::gf::check_prime(p)?;
        if table.len() != dim * dim * dim || one.len() != dim {
            return Err(Error::DimensionMismatch {
                op: "algebra",
                detail: format!("dim {dim}, table {}, unit {}", table.len(), one.len()),
            });
        }
        let a = Self {
            p,
            dim,
            table: table.into_iter().map(|x| x % p).collect(),
            one: one.into_iter().map(|x| x % p).collect(),
        };
        for i in 0..dim {
            let e = a.basis_vector(i);
            if a.mul(&a.one, &e) != e || a.mul(&e, &a.one) != e {
                return Err(Error::InvalidArgument(format!(
                    "unit does not act as identity on e_{i}"
                )));
            }
        }
        Ok(a)
    }

    /// The span of `basis` (square matrices), which must be closed under
    /// products and contain the identity.
    pub fn from_matrices(basis: &[FpMatrix]) -> Result<Self> {
        let first = basis
            .first()
            .ok_or_else(|| Error::InvalidArgument("empty basis".into()))?;
        let (p, n) = (first.modulus(), first.rows());
        let flat: Vec<Vec<u32>> = basis.iter().map(|m| m.to_rows().concat()).collect();
        let cols = FpMatrix::from_vectors(p, n * n, &flat)?.transpose();
        let coords = |m: &FpMatrix| -> Result<Vec<u32>> {
            cols.solve(&m.to_rows().concat())?
                .ok_or_else(|| Error::InvalidArgument("span is not closed".into()))
        };
        let d = basis.len();
        let mut table = vec![0; d * d * d];
        for i in 0..d {
            for j in 0..d {
                let c = coords(&basis[i].mul(&basis[j])?)?;
                table[(i * d + j) * d..(i * d + j + 1) * d].copy_from_slice(&c);
            }
        }
        let one = coords(&FpMatrix::identity(p, n)?)?;
        Self::new(p, d, table, one)
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn one(&self) -> &[u32] {
        &self.one
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u32> {
        let mut v = vec![0; self.dim];
        v[i] = 1;
        v
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> u32 {
        self.table[(i * self.dim + j) * self.dim + k]
    }

    pub fn mul(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let (d, p) = (self.dim, self.p as u64);
        let mut acc = vec![0u64; d];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let c = (xi as u64 * yj as u64) % p;
                let row = &self.table[(i * d + j) * d..(i * d + j + 1) * d];
                for (a, &t) in acc.iter_mut().zip(row) {
                    *a += c * t as u64;
                }
            }
        }
        acc.into_iter().map(|a| (a % p) as u32).collect()
    }

    pub fn add(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        x.iter().zip(y).map(|(a, b)| (a + b) % self.p).collect()
    }

    pub fn scale(&self, c: u32, x: &[u32]) -> Vec<u32> {
        x.iter().map(|a| a * (c % self.p) % self.p).collect()
    }

    pub fn sub(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        x.iter().zip(y).map(|(a, b)| (a + self.p - b) % self.p).collect()
    }

    pub fn pow(&self, x: &[u32], mut e: u64) -> Vec<u32> {
        let mut acc = self.one.clone();
        let mut base = x.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Matrix of y ↦ x·y; column j is x·e_j.
    pub fn left_matrix(&self, x: &[u32]) -> FpMatrix {
        let d = self.dim;
        let cols: Vec<Vec<u32>> = (0..d).map(|j| self.mul(x, &self.basis_vector(j))).collect();
        FpMatrix::from_fn(self.p, d, d, |r, c| cols[c][r]).expect("valid modulus")
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| {
            (0..i).all(|j| {
                (0..self.dim).all(|k| self.structure_constant(i, j, k) == self.structure_constant(j, i, k))
            })
        })
    }

    pub fn is_associative(&self) -> bool {
        let d = self.dim;
        (0..d).all(|i| {
            (0..d).all(|j| {
                let eij = self.mul(&self.basis_vector(i), &self.basis_vector(j));
                (0..d).all(|k| {
                    let ek = self.basis_vector(k);
                    self.mul(&eij, &ek) == self.mul(&self.basis_vector(i), &self.mul(&self.basis_vector(j), &ek))
                })
            })
        })
    }

    fn span(&self, vectors: &[Vec<u32>]) -> FpSubspace {
        FpSubspace::span(self.p, self.dim, vectors)
    }

    /// Jacobson radical by the characteristic-p trace chain on the regular
    /// representation:
    /// I_{-1} = A, I_i = {a ∈ I_{i-1} : g_i(ab) = 0 for all b}, where g_i(a)
    /// is (Tr(â^{p^i}) mod p^{i+1}) / p^i for the integer lift â of the
    /// left-multiplication matrix. The chain stops at i = ⌊log_p dim⌋.
    pub fn radical(&self) -> Result<FpSubspace> {
        let j = self.radical_unchecked();
        self.check_radical(&j)?;
        Ok(j)
    }

    fn radical_unchecked(&self) -> FpSubspace {
        let (d, p) = (self.dim, self.p);
        if d == 0 {
            return FpSubspace::zero(p, 0);
        }
        let mut levels = 0;
        let mut pk = p as usize;
        while pk <= d {
            levels += 1;
            pk *= p as usize;
        }
        let mut ideal: Vec<Vec<u32>> = (0..d).map(|i| self.basis_vector(i)).collect();
        for i in 0..=levels {
            if ideal.is_empty() {
                break;
            }
            // rows: elements of the current ideal; columns: basis elements b
            let rows: Vec<Vec<u32>> = ideal
                .iter()
                .map(|a| {
                    (0..d)
                        .map(|t| self.trace_digit(&self.mul(a, &self.basis_vector(t)), i))
                        .collect()
                })
                .collect();
            // coefficient vectors c with Σ c_s row_s = 0
            let m = FpMatrix::from_vectors(p, d, &rows).expect("shape").transpose();
            let kernel = m.nullspace().basis_vectors();
            ideal = kernel
                .iter()
                .map(|c| {
                    let mut v = vec![0u32; d];
                    for (s, &cs) in c.iter().enumerate() {
                        if cs != 0 {
                            v = self.add(&v, &self.scale(cs, &ideal[s]));
                        }
                    }
                    v
                })
                .collect();
            ideal = self.span(&ideal).basis_vectors();
        }
        self.span(&ideal)
    }

    /// (Tr(L̂^{p^i}) mod p^{i+1}) / p^i
    fn trace_digit(&self, a: &[u32], i: u32) -> u32 {
        let d = self.dim;
        let p = self.p as u64;
        let modulus = p.pow(i + 1);
        let l = self.left_matrix(a);
        let mut m: Vec<u64> = (0..d * d).map(|k| l.get(k / d, k % d) as u64).collect();
        for _ in 0..i {
            m = int_matpow(&m, d, p, modulus);
        }
        let tr: u64 = (0..d).map(|k| m[k * d + k]).sum::<u64>() % modulus;
        (tr / p.pow(i)) as u32
    }

    /// Two-sided ideal, nilpotent, and semisimple quotient.
    fn check_radical(&self, j: &FpSubspace) -> Result<()> {
        let basis = j.basis_vectors();
        for v in &basis {
            for t in 0..self.dim {
                let e = self.basis_vector(t);
                if !j.contains(&self.mul(v, &e)) || !j.contains(&self.mul(&e, v)) {
                    return Err(Error::Internal("radical is not a two-sided ideal".into()));
                }
            }
        }
        let mut power = j.clone();
        let mut steps = 0;
        while power.dim() > 0 {
            steps += 1;
            if steps > self.dim + 1 {
                return Err(Error::Internal("radical is not nilpotent".into()));
            }
            let prods: Vec<Vec<u32>> = power
                .basis_vectors()
                .iter()
                .flat_map(|x| basis.iter().map(move |y| (x, y)))
                .map(|(x, y)| self.mul(x, y))
                .collect();
            power = self.span(&prods);
        }
        let (q, _) = self.quotient(j)?;
        if q.radical_unchecked().dim() != 0 {
            return Err(Error::Internal("quotient by radical is not semisimple".into()));
        }
        Ok(())
    }

    /// A/I for a two-sided ideal I; quotient basis is the images of e_c for
    /// the non-pivot coordinates c of I, which are returned.
    pub fn quotient(&self, ideal: &FpSubspace) -> Result<(Algebra, Vec<usize>)> {
        let pivots = ideal.pivots();
        let comp: Vec<usize> = (0..self.dim).filter(|c| !pivots.contains(c)).collect();
        let q = comp.len();
        let project = |v: &[u32]| -> Vec<u32> {
            let r = ideal.reduce(v);
            comp.iter().map(|&c| r[c]).collect()
        };
        let mut table = vec![0; q * q * q];
        for (a, &ca) in comp.iter().enumerate() {
            for (b, &cb) in comp.iter().enumerate() {
                let prod = project(&self.mul(&self.basis_vector(ca), &self.basis_vector(cb)));
                table[(a * q + b) * q..(a * q + b + 1) * q].copy_from_slice(&prod);
            }
        }
        let one = project(&self.one);
        Ok((Algebra::new(self.p, q, table, one)?, comp))
    }

    /// The subalgebra with the given basis (which must be closed and contain 1).
    pub fn subalgebra(&self, basis: &[Vec<u32>]) -> Result<Algebra> {
        let r = basis.len();
        let cols = FpMatrix::from_vectors(self.p, self.dim, basis)?.transpose();
        let coords = |v: &[u32]| -> Result<Vec<u32>> {
            cols.solve(v)?
                .ok_or_else(|| Error::InvalidArgument("subspace is not a subalgebra".into()))
        };
        let mut table = vec![0; r * r * r];
        for i in 0..r {
            for j in 0..r {
                let c = coords(&self.mul(&basis[i], &basis[j]))?;
                table[(i * r + j) * r..(i * r + j + 1) * r].copy_from_slice(&c);
            }
        }
        Algebra::new(self.p, r, table, coords(&self.one)?)
    }

    pub fn center(&self) -> FpSubspace {
        // x with x e_t - e_t x = 0 for every t
        let d = self.dim;
        let mut rows = Vec::new();
        for t in 0..d {
            let e = self.basis_vector(t);
            let comm: Vec<Vec<u32>> = (0..d)
                .map(|i| {
                    let b = self.basis_vector(i);
                    self.sub(&self.mul(&b, &e), &self.mul(&e, &b))
                })
                .collect();
            for k in 0..d {
                rows.push((0..d).map(|i| comm[i][k]).collect::<Vec<u32>>());
            }
        }
        FpMatrix::from_vectors(self.p, d, &rows)
            .expect("shape")
            .nullspace()
    }

    /// {x : x^p = x}, for a commutative algebra (where x ↦ x^p is linear).
    pub fn frobenius_fixed(&self) -> FpSubspace {
        let d = self.dim;
        let images: Vec<Vec<u32>> = (0..d)
            .map(|i| {
                let e = self.basis_vector(i);
                self.sub(&self.pow(&e, self.p as u64), &e)
            })
            .collect();
        // columns are images of basis vectors
        FpMatrix::from_vectors(self.p, d, &images)
            .expect("shape")
            .transpose()
            .nullspace()
    }

    /// Iterates a ↦ 3a² − 2a³ until a² = a. Converges when a is idempotent
    /// modulo a nilpotent ideal.
    pub fn lift_idempotent(&self, a: &[u32]) -> Result<Vec<u32>> {
        let mut a = a.to_vec();
        for _ in 0..=64 {
            let a2 = self.mul(&a, &a);
            if a2 == a {
                return Ok(a);
            }
            let a3 = self.mul(&a2, &a);
            a = self.sub(&self.scale(3, &a2), &self.scale(2, &a3));
        }
        Err(Error::Internal("idempotent lifting did not converge".into()))
    }

    pub fn is_idempotent(&self, e: &[u32]) -> bool {
        self.mul(e, e) == e
    }

    pub fn is_trivial_idempotent(&self, e: &[u32]) -> bool {
        e.iter().all(|&x| x == 0) || e == self.one.as_slice()
    }

    /// A nontrivial idempotent of a commutative algebra, or `None` when the
    /// algebra modulo its radical is a field.
    pub fn commutative_idempotent(&self) -> Result<Option<Vec<u32>>> {
        let j = self.radical()?;
        let (s, comp) = self.quotient(&j)?;
        let fixed = s.frobenius_fixed();
        if fixed.dim() <= 1 {
            return Ok(None);
        }
        let units = s.span(&[s.one.clone()]);
        let y = fixed
            .basis_vectors()
            .into_iter()
            .find(|v| !units.contains(v))
            .expect("fixed space larger than the scalars");
        // y satisfies y^p = y, so its minimal polynomial has distinct roots in GF(p)
        let roots = s.left_matrix(&y).min_poly()?.roots();
        if roots.len() < 2 {
            return Err(Error::Internal("non-scalar fixed element with one root".into()));
        }
        let r1 = roots[0];
        let mut e = s.one.clone();
        for &r in &roots[1..] {
            let factor = s.scale(inv_mod(r1 + s.p - r, s.p), &s.sub(&y, &s.scale(r, &s.one)));
            e = s.mul(&e, &factor);
        }
        let mut lifted = vec![0; self.dim];
        for (k, &c) in comp.iter().enumerate() {
            lifted[c] = e[k];
        }
        let e = self.lift_idempotent(&lifted)?;
        if self.is_trivial_idempotent(&e) {
            return Err(Error::Internal("lifted idempotent is trivial".into()));
        }
        Ok(Some(e))
    }

    /// Span of 1, x, x², ... as a basis list.
    fn powers_basis(&self, x: &[u32]) -> Vec<Vec<u32>> {
        let mut basis = vec![self.one.clone()];
        let mut span = self.span(&basis);
        let mut cur = self.one.clone();
        loop {
            cur = self.mul(&cur, x);
            if span.contains(&cur) {
                return basis;
            }
            basis.push(cur.clone());
            span = self.span(&basis);
        }
    }

    fn embed(&self, basis: &[Vec<u32>], coords: &[u32]) -> Vec<u32> {
        let mut v = vec![0; self.dim];
        for (b, &c) in basis.iter().zip(coords) {
            if c != 0 {
                v = self.add(&v, &self.scale(c, b));
            }
        }
        v
    }

    /// A nontrivial idempotent of a semisimple algebra that is not a field.
    /// Tries the centre first, then commutative subalgebras GF(p)[x] for
    /// seeded random x.
    pub fn semisimple_idempotent(&self, seed: u64, attempts: usize) -> Result<Option<Vec<u32>>> {
        if self.is_commutative() {
            return self.commutative_idempotent();
        }
        let z = self.center().basis_vectors();
        let zalg = self.subalgebra(&z)?;
        if let Some(e) = zalg.commutative_idempotent()? {
            return Ok(Some(self.embed(&z, &e)));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..attempts {
            let x: Vec<u32> = (0..self.dim).map(|_| rng.gen_range(0..self.p)).collect();
            let basis = self.powers_basis(&x);
            if basis.len() < 2 {
                continue;
            }
            let sub = self.subalgebra(&basis)?;
            if let Some(e) = sub.commutative_idempotent()? {
                return Ok(Some(self.embed(&basis, &e)));
            }
        }
        Err(Error::Internal(format!(
            "no idempotent found in a noncommutative semisimple algebra after {attempts} attempts"
        )))
    }
}

fn int_matpow(m: &[u64], d: usize, p: u64, modulus: u64) -> Vec<u64> {
    // m^p by repeated multiplication
    let mut acc = m.to_vec();
    for _ in 1..p {
        acc = int_matmul(&acc, m, d, modulus);
    }
    acc
}

fn int_matmul(a: &[u64], b: &[u64], d: usize, modulus: u64) -> Vec<u64> {
    let mut out = vec![0u64; d * d];
    for i in 0..d {
        for k in 0..d {
            let aik = a[i * d + k];
            if aik == 0 {
                continue;
            }
            for j in 0..d {
                out[i * d + j] = (out[i * d + j] + aik * b[k * d + j]) % modulus;
            }
        }
    }
    out
}

/// Brute-force count of idempotents, for p = 2 and dim ≤ 24. Walks all
/// elements in Gray-code order, updating x² incrementally.
pub fn count_idempotents_gf2(a: &Algebra) -> Result<u64> {
    if a.modulus() != 2 || a.dim() > 24 {
        return Err(Error::cap(
            format!("idempotent scan of a {}-dimensional algebra", a.dim()),
            "idempotent-scan",
            24,
        ));
    }
    let d = a.dim();
    let to_mask = |v: &[u32]| v.iter().enumerate().fold(0u32, |m, (i, &x)| m | (x << i));
    let prod: Vec<u32> = (0..d * d)
        .map(|k| to_mask(&a.mul(&a.basis_vector(k / d), &a.basis_vector(k % d))))
        .collect();
    let mut x = 0u32;
    let mut sq = 0u32;
    let mut count = 1; // x = 0
    for step in 1u64..(1u64 << d) {
        let k = step.trailing_zeros() as usize;
        // (x + e_k)² = x² + x e_k + e_k x + e_k²
        let mut delta = prod[k * d + k];
        let mut bits = x;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            delta ^= prod[i * d + k] ^ prod[k * d + i];
            bits &= bits - 1;
        }
        sq ^= delta;
        x ^= 1 << k;
        if sq == x {
            count += 1;
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(p: u32, rows: &[&[i64]]) -> FpMatrix {
        FpMatrix::from_rows(p, rows).unwrap()
    }

    /// GF(p)[x]/(x^k) with basis 1, x, ..., x^{k-1}.
    fn truncated(p: u32, k: usize) -> Algebra {
        let mut table = vec![0; k * k * k];
        for i in 0..k {
            for j in 0..k {
                if i + j < k {
                    table[(i * k + j) * k + i + j] = 1;
                }
            }
        }
        let mut one = vec![0; k];
        one[0] = 1;
        Algebra::new(p, k, table, one).unwrap()
    }

    /// Group algebra of an abelian group Z/a × Z/b.
    fn group_algebra(p: u32, a: usize, b: usize) -> Algebra {
        let d = a * b;
        let mut table = vec![0; d * d * d];
        for i in 0..d {
            for j in 0..d {
                let k = ((i / b + j / b) % a) * b + (i % b + j % b) % b;
                table[(i * d + j) * d + k] = 1;
            }
        }
        let mut one = vec![0; d];
        one[0] = 1;
        Algebra::new(p, d, table, one).unwrap()
    }

    fn matrix_algebra(p: u32, n: usize) -> Algebra {
        let basis: Vec<FpMatrix> = (0..n * n)
            .map(|k| FpMatrix::from_fn(p, n, n, |r, c| (r * n + c == k) as u32).unwrap())
            .collect();
        Algebra::from_matrices(&basis).unwrap()
    }

    #[test]
    fn radical_examples() {
        let k = truncated(2, 1);
        assert_eq!(k.radical().unwrap().dim(), 0);
        let dual = truncated(2, 2);
        let j = dual.radical().unwrap();
        assert_eq!(j.basis_vectors(), vec![vec![0, 1]]);
        assert_eq!(truncated(3, 5).radical().unwrap().dim(), 4);
        // group algebra of a p-group: radical is the augmentation ideal
        assert_eq!(group_algebra(2, 2, 2).radical().unwrap().dim(), 3);
        assert_eq!(group_algebra(3, 3, 3).radical().unwrap().dim(), 8);
        // p' group: semisimple
        assert_eq!(group_algebra(2, 3, 1).radical().unwrap().dim(), 0);
        assert_eq!(matrix_algebra(2, 2).radical().unwrap().dim(), 0);
        assert_eq!(matrix_algebra(3, 3).radical().unwrap().dim(), 0);
    }

    #[test]
    fn upper_triangular_radical() {
        // upper triangular 3x3 over GF(2): radical = strictly upper, dim 3
        let mut basis = Vec::new();
        for r in 0..3 {
            for c in r..3 {
                basis.push(FpMatrix::from_fn(2, 3, 3, |i, j| (i == r && j == c) as u32).unwrap());
            }
        }
        let a = Algebra::from_matrices(&basis).unwrap();
        assert!(a.is_associative());
        let j = a.radical().unwrap();
        assert_eq!(j.dim(), 3);
        let (q, _) = a.quotient(&j).unwrap();
        assert_eq!(q.dim(), 3);
        assert!(q.is_commutative());
        let e = a.semisimple_idempotent(0, 8).unwrap().unwrap();
        assert!(a.is_idempotent(&e) && !a.is_trivial_idempotent(&e));
    }

    #[test]
    fn idempotents_and_fields() {
        // GF(4) = GF(2)[x]/(x²+x+1) is a field: no idempotent
        let f4 = Algebra::from_matrices(&[mat(2, &[&[1, 0], &[0, 1]]), mat(2, &[&[0, 1], &[1, 1]])])
            .unwrap();
        assert_eq!(f4.commutative_idempotent().unwrap(), None);
        assert_eq!(count_idempotents_gf2(&f4).unwrap(), 2);
        // GF(2) x GF(2): split
        let split = Algebra::from_matrices(&[mat(2, &[&[1, 0], &[0, 1]]), mat(2, &[&[1, 0], &[0, 0]])])
            .unwrap();
        let e = split.commutative_idempotent().unwrap().unwrap();
        assert!(split.is_idempotent(&e) && !split.is_trivial_idempotent(&e));
        assert_eq!(count_idempotents_gf2(&split).unwrap(), 4);
        // GF(3)[C2] splits as GF(3) x GF(3)
        let c2 = group_algebra(3, 2, 1);
        assert!(c2.commutative_idempotent().unwrap().is_some());
        // M2(GF(2)) needs the random route
        let m2 = matrix_algebra(2, 2);
        let e = m2.semisimple_idempotent(1, 64).unwrap().unwrap();
        assert!(m2.is_idempotent(&e) && !m2.is_trivial_idempotent(&e));
        // 2x2 matrices over GF(2): 0, 1 and 6 rank-one idempotents
        assert_eq!(count_idempotents_gf2(&m2).unwrap(), 8);
    }

    #[test]
    fn lifting_through_radical() {
        // GF(2)[x]/(x²(x+1)) has a nontrivial idempotent above the radical
        let m = mat(2, &[&[0, 1, 0], &[0, 0, 0], &[0, 0, 1]]);
        let i3 = FpMatrix::identity(2, 3).unwrap();
        let basis = vec![i3, m.clone(), m.mul(&m).unwrap()];
        let a = Algebra::from_matrices(&basis).unwrap();
        assert_eq!(a.radical().unwrap().dim(), 1);
        let e = a.commutative_idempotent().unwrap().unwrap();
        assert!(a.is_idempotent(&e));
        assert_eq!(count_idempotents_gf2(&a).unwrap(), 4);
        assert_eq!(count_idempotents_gf2(&group_algebra(2, 2, 2)).unwrap(), 2);
    }
}
