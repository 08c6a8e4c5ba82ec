use std::fmt;

use super::{check_prime, inv_mod, FpSubspace, Poly};
use crate::error::{Error, Result};

/// Dense matrix over GF(p).
///
/// For p = 2 rows are packed into `u64` words (unused high bits of the last
/// word in a row are always zero); otherwise each entry is a reduced byte.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    p: u32,
    rows: usize,
    cols: usize,
    store: Store,
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Store {
    Packed { words: usize, data: Vec<u64> },
    Bytes(Vec<u8>),
}

/// Output of [`FpMatrix::rref`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub matrix: FpMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl FpMatrix {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Result<Self> {
        check_prime(p)?;
        Ok(Self::zeros_unchecked(p, rows, cols))
    }

    pub(crate) fn zeros_unchecked(p: u32, rows: usize, cols: usize) -> Self {
        let store = if p == 2 {
            let words = cols.div_ceil(64);
            Store::Packed {
                words,
                data: vec![0; rows * words],
            }
        } else {
            Store::Bytes(vec![0; rows * cols])
        };
        Self {
            p,
            rows,
            cols,
            store,
        }
    }

    pub fn identity(p: u32, n: usize) -> Result<Self> {
        let mut m = Self::zeros(p, n, n)?;
        for i in 0..n {
            m.set(i, i, 1);
        }
        Ok(m)
    }

    /// Builds a matrix from rows of (possibly negative) integers, reducing mod p.
    pub fn from_rows<R: AsRef<[i64]>>(p: u32, rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = Self::zeros(p, rows.len(), cols)?;
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    op: "from_rows",
                    detail: format!("row {i} has {} entries, expected {cols}", r.len()),
                });
            }
            for (j, &v) in r.iter().enumerate() {
                m.set(i, j, v.rem_euclid(p as i64) as u32);
            }
        }
        Ok(m)
    }

    pub fn from_fn(
        p: u32,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> u32,
    ) -> Result<Self> {
        let mut m = Self::zeros(p, rows, cols)?;
        for i in 0..rows {
            for j in 0..cols {
                let v = f(i, j) % p;
                if v != 0 {
                    m.set(i, j, v);
                }
            }
        }
        Ok(m)
    }

    /// Stacks vectors as the rows of a matrix with `cols` columns.
    pub fn from_vectors(p: u32, cols: usize, vectors: &[Vec<u32>]) -> Result<Self> {
        let mut m = Self::zeros(p, vectors.len(), cols)?;
        for (i, v) in vectors.iter().enumerate() {
            if v.len() != cols {
                return Err(Error::DimensionMismatch {
                    op: "from_vectors",
                    detail: format!("vector {i} has length {}, expected {cols}", v.len()),
                });
            }
            for (j, &x) in v.iter().enumerate() {
                if x % p != 0 {
                    m.set(i, j, x % p);
                }
            }
        }
        Ok(m)
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        debug_assert!(r < self.rows && c < self.cols);
        match &self.store {
            Store::Packed { words, data } => ((data[r * words + c / 64] >> (c % 64)) & 1) as u32,
            Store::Bytes(data) => data[r * self.cols + c] as u32,
        }
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        debug_assert!(r < self.rows && c < self.cols);
        let v = v % self.p;
        match &mut self.store {
            Store::Packed { words, data } => {
                let w = &mut data[r * *words + c / 64];
                let bit = 1u64 << (c % 64);
                if v == 1 {
                    *w |= bit;
                } else {
                    *w &= !bit;
                }
            }
            Store::Bytes(data) => data[r * self.cols + c] = v as u8,
        }
    }

    pub fn row(&self, r: usize) -> Vec<u32> {
        (0..self.cols).map(|c| self.get(r, c)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r)).collect()
    }

    pub fn is_zero(&self) -> bool {
        match &self.store {
            Store::Packed { data, .. } => data.iter().all(|&w| w == 0),
            Store::Bytes(data) => data.iter().all(|&x| x == 0),
        }
    }

    fn row_is_zero(&self, r: usize) -> bool {
        match &self.store {
            Store::Packed { words, data } => data[r * words..(r + 1) * words].iter().all(|&w| w == 0),
            Store::Bytes(data) => data[r * self.cols..(r + 1) * self.cols]
                .iter()
                .all(|&x| x == 0),
        }
    }

    fn same_field(&self, other: &Self, op: &'static str) -> Result<()> {
        if self.p != other.p {
            return Err(Error::DimensionMismatch {
                op,
                detail: format!("characteristics {} and {}", self.p, other.p),
            });
        }
        Ok(())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros_unchecked(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                if v != 0 {
                    t.set(j, i, v);
                }
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.same_field(rhs, "mul")?;
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                op: "mul",
                detail: format!(
                    "{}x{} times {}x{}",
                    self.rows, self.cols, rhs.rows, rhs.cols
                ),
            });
        }
        let mut out = Self::zeros_unchecked(self.p, self.rows, rhs.cols);
        match (&self.store, &rhs.store, &mut out.store) {
            (
                Store::Packed { words: aw, data: a },
                Store::Packed { words: bw, data: b },
                Store::Packed { data: o, .. },
            ) => {
                // Row i of the product is the XOR of the rows of rhs selected by row i of self.
                for i in 0..self.rows {
                    let orow = &mut o[i * bw..(i + 1) * bw];
                    for k in 0..self.cols {
                        if (a[i * aw + k / 64] >> (k % 64)) & 1 == 1 {
                            for (ow, bwd) in orow.iter_mut().zip(&b[k * bw..(k + 1) * bw]) {
                                *ow ^= bwd;
                            }
                        }
                    }
                }
            }
            (Store::Bytes(a), Store::Bytes(b), Store::Bytes(o)) => {
                let p = self.p;
                let mut acc = vec![0u32; rhs.cols];
                for i in 0..self.rows {
                    acc.iter_mut().for_each(|x| *x = 0);
                    for k in 0..self.cols {
                        let aik = a[i * self.cols + k] as u32;
                        if aik == 0 {
                            continue;
                        }
                        let brow = &b[k * rhs.cols..(k + 1) * rhs.cols];
                        for (x, &bkj) in acc.iter_mut().zip(brow) {
                            *x = (*x + aik * bkj as u32) % p;
                        }
                    }
                    for (j, &x) in acc.iter().enumerate() {
                        o[i * rhs.cols + j] = x as u8;
                    }
                }
            }
            _ => unreachable!("storage is determined by the characteristic"),
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[u32]) -> Result<Vec<u32>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                op: "mul_vec",
                detail: format!("{} columns, vector of length {}", self.cols, v.len()),
            });
        }
        let p = self.p;
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = 0u32;
                for (j, &x) in v.iter().enumerate() {
                    if x != 0 {
                        acc = (acc + self.get(i, j) * (x % p)) % p;
                    }
                }
                acc
            })
            .collect())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.combine(rhs, 1, "add")
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.combine(rhs, self.p - 1, "sub")
    }

    /// self + s * rhs
    fn combine(&self, rhs: &Self, s: u32, op: &'static str) -> Result<Self> {
        self.same_field(rhs, op)?;
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch {
                op,
                detail: format!(
                    "{}x{} vs {}x{}",
                    self.rows, self.cols, rhs.rows, rhs.cols
                ),
            });
        }
        let mut out = self.clone();
        match (&mut out.store, &rhs.store) {
            (Store::Packed { data: a, .. }, Store::Packed { data: b, .. }) => {
                a.iter_mut().zip(b).for_each(|(x, y)| *x ^= y);
            }
            (Store::Bytes(a), Store::Bytes(b)) => {
                let p = self.p;
                a.iter_mut()
                    .zip(b)
                    .for_each(|(x, &y)| *x = ((*x as u32 + s * y as u32) % p) as u8);
            }
            _ => unreachable!(),
        }
        Ok(out)
    }

    pub fn scale(&self, s: u32) -> Self {
        let s = s % self.p;
        let mut out = self.clone();
        match &mut out.store {
            Store::Packed { data, .. } => {
                if s == 0 {
                    data.iter_mut().for_each(|w| *w = 0);
                }
            }
            Store::Bytes(data) => {
                let p = self.p;
                data.iter_mut()
                    .for_each(|x| *x = ((*x as u32 * s) % p) as u8);
            }
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> Result<Self> {
        self.require_square("pow")?;
        let mut acc = Self::identity(self.p, self.rows)?;
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        self.same_field(other, "vstack")?;
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                op: "vstack",
                detail: format!("{} vs {} columns", self.cols, other.cols),
            });
        }
        let mut out = Self::zeros_unchecked(self.p, self.rows + other.rows, self.cols);
        match (&mut out.store, &self.store, &other.store) {
            (Store::Packed { data: o, .. }, Store::Packed { data: a, .. }, Store::Packed { data: b, .. }) => {
                o[..a.len()].copy_from_slice(a);
                o[a.len()..].copy_from_slice(b);
            }
            (Store::Bytes(o), Store::Bytes(a), Store::Bytes(b)) => {
                o[..a.len()].copy_from_slice(a);
                o[a.len()..].copy_from_slice(b);
            }
            _ => unreachable!(),
        }
        Ok(out)
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &Self) -> Result<Self> {
        self.same_field(other, "hstack")?;
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch {
                op: "hstack",
                detail: format!("{} vs {} rows", self.rows, other.rows),
            });
        }
        Self::from_fn(self.p, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j)
            } else {
                other.get(i, j - self.cols)
            }
        })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        match &mut self.store {
            Store::Packed { words, data } => {
                for k in 0..*words {
                    data.swap(a * *words + k, b * *words + k);
                }
            }
            Store::Bytes(data) => {
                for k in 0..self.cols {
                    data.swap(a * self.cols + k, b * self.cols + k);
                }
            }
        }
    }

    fn scale_row(&mut self, r: usize, s: u32) {
        if let Store::Bytes(data) = &mut self.store {
            let p = self.p;
            for x in &mut data[r * self.cols..(r + 1) * self.cols] {
                *x = ((*x as u32 * s) % p) as u8;
            }
        }
    }

    /// row[dst] += s * row[src], touching only columns >= `from`.
    fn add_row_multiple(&mut self, dst: usize, src: usize, s: u32, from: usize) {
        debug_assert_ne!(dst, src);
        match &mut self.store {
            Store::Packed { words, data } => {
                if s == 0 {
                    return;
                }
                let w = *words;
                for k in from / 64..w {
                    let v = data[src * w + k];
                    data[dst * w + k] ^= v;
                }
            }
            Store::Bytes(data) => {
                let p = self.p;
                let c = self.cols;
                for k in from..c {
                    let v = data[src * c + k] as u32;
                    if v != 0 {
                        let d = &mut data[dst * c + k];
                        *d = ((*d as u32 + s * v) % p) as u8;
                    }
                }
            }
        }
    }

    /// Reduced row-echelon form with first-nonzero pivoting.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let p = self.p;
        let mut rank = 0;
        let mut pivots = Vec::new();
        for col in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let Some(piv) = (rank..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            m.swap_rows(rank, piv);
            let lead = m.get(rank, col);
            if lead != 1 {
                m.scale_row(rank, inv_mod(lead, p));
            }
            for r in 0..m.rows {
                if r != rank {
                    let f = m.get(r, col);
                    if f != 0 {
                        m.add_row_multiple(r, rank, p - f, col);
                    }
                }
            }
            pivots.push(col);
            rank += 1;
        }
        Rref {
            matrix: m,
            rank,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Solves `self * x = b`; `None` when the system is inconsistent.
    pub fn solve(&self, b: &[u32]) -> Result<Option<Vec<u32>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch {
                op: "solve",
                detail: format!("{} rows, right-hand side of length {}", self.rows, b.len()),
            });
        }
        let col = Self::from_fn(self.p, self.rows, 1, |i, _| b[i])?;
        let aug = self.hstack(&col)?;
        let Rref { matrix, pivots, .. } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![0u32; self.cols];
        for (i, &c) in pivots.iter().enumerate() {
            x[c] = matrix.get(i, self.cols);
        }
        let check = self.mul_vec(&x)?;
        let reduced: Vec<u32> = b.iter().map(|v| v % self.p).collect();
        if check != reduced {
            return Err(Error::Internal("solve: substitution check failed".into()));
        }
        Ok(Some(x))
    }

    /// Right null space {v : self * v = 0}.
    pub fn nullspace(&self) -> FpSubspace {
        let Rref { matrix, pivots, .. } = self.rref();
        let p = self.p;
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u32; self.cols];
            v[free] = 1;
            for (i, &c) in pivots.iter().enumerate() {
                let e = matrix.get(i, free);
                if e != 0 {
                    v[c] = (p - e) % p;
                }
            }
            basis.push(v);
        }
        FpSubspace::span(p, self.cols, &basis)
    }

    fn require_square(&self, op: &'static str) -> Result<()> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                op,
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(())
    }

    pub fn eval_poly(&self, q: &Poly) -> Result<Self> {
        self.require_square("eval_poly")?;
        let n = self.rows;
        let mut acc = Self::zeros_unchecked(self.p, n, n);
        for &c in q.coeffs().iter().rev() {
            acc = acc.mul(self)?;
            if c != 0 {
                for i in 0..n {
                    let v = acc.get(i, i);
                    acc.set(i, i, (v + c) % self.p);
                }
            }
        }
        Ok(acc)
    }

    fn eval_poly_on_vec(&self, q: &Poly, v: &[u32]) -> Result<Vec<u32>> {
        let p = self.p;
        let mut acc = vec![0u32; v.len()];
        for &c in q.coeffs().iter().rev() {
            acc = self.mul_vec(&acc)?;
            for (a, &x) in acc.iter_mut().zip(v) {
                *a = (*a + c * x) % p;
            }
        }
        Ok(acc)
    }

    /// Minimal polynomial, as the LCM of the Krylov minimal polynomials of the
    /// standard basis vectors.
    pub fn min_poly(&self) -> Result<Poly> {
        self.require_square("min_poly")?;
        let p = self.p;
        let n = self.rows;
        let mut lcm = Poly::one(p);
        for j in 0..n {
            let mut e = vec![0u32; n];
            e[j] = 1;
            if self.eval_poly_on_vec(&lcm, &e)?.iter().all(|&x| x == 0) {
                continue;
            }
            let local = self.krylov_min_poly(e)?;
            lcm = lcm.lcm(&local);
        }
        Ok(lcm)
    }

    /// Monic q of least degree with q(self) v = 0.
    fn krylov_min_poly(&self, v: Vec<u32>) -> Result<Poly> {
        let p = self.p;
        let n = self.rows;
        // Echelon rows: (vector, pivot, combination of powers that produced it).
        let mut echelon: Vec<(Vec<u32>, usize, Vec<u32>)> = Vec::new();
        let mut current = v;
        for k in 0..=n {
            let mut vec = current.clone();
            let mut combo = vec![0u32; k + 1];
            combo[k] = 1;
            for (row, piv, rc) in &echelon {
                let f = vec[*piv];
                if f != 0 {
                    let s = p - f;
                    for (a, &b) in vec.iter_mut().zip(row) {
                        *a = (*a + s * b) % p;
                    }
                    for (i, &c) in rc.iter().enumerate() {
                        combo[i] = (combo[i] + s * c) % p;
                    }
                }
            }
            match vec.iter().position(|&x| x != 0) {
                None => return Ok(Poly::new(p, combo)),
                Some(piv) => {
                    let inv = inv_mod(vec[piv], p);
                    vec.iter_mut().for_each(|x| *x = *x * inv % p);
                    combo.iter_mut().for_each(|x| *x = *x * inv % p);
                    echelon.push((vec, piv, combo));
                }
            }
            current = self.mul_vec(&current)?;
        }
        Err(Error::Internal("Krylov sequence failed to terminate".into()))
    }

    pub fn is_nilpotent(&self) -> Result<bool> {
        let q = self.min_poly()?;
        Ok(q.is_power_of_x())
    }

    pub fn is_invertible(&self) -> Result<bool> {
        self.require_square("is_invertible")?;
        Ok(self.rank() == self.rows)
    }

    pub fn inverse(&self) -> Result<Option<Self>> {
        self.require_square("inverse")?;
        let n = self.rows;
        let aug = self.hstack(&Self::identity(self.p, n)?)?;
        let r = aug.rref();
        if r.pivots.iter().take(n).filter(|&&c| c < n).count() < n {
            return Ok(None);
        }
        Ok(Some(Self::from_fn(self.p, n, n, |i, j| {
            r.matrix.get(i, n + j)
        })?))
    }

    pub(crate) fn nonzero_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows)
            .filter(|&r| !self.row_is_zero(r))
            .map(|r| self.row(r))
            .collect()
    }
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FpMatrix(p={}, {}x{})", self.p, self.rows, self.cols)?;
        for r in 0..self.rows.min(16) {
            let row: Vec<String> = self.row(r).iter().take(32).map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(p: u32, rows: &[&[i64]]) -> FpMatrix {
        FpMatrix::from_rows(p, rows).unwrap()
    }

    #[test]
    fn rref_examples() {
        let id = FpMatrix::identity(5, 3).unwrap();
        let r = id.rref();
        assert_eq!(r.matrix, id);
        assert_eq!(r.rank, 3);
        assert_eq!(r.pivots, vec![0, 1, 2]);

        let z = FpMatrix::zeros(3, 2, 4).unwrap();
        let r = z.rref();
        assert_eq!(r.rank, 0);
        assert!(r.matrix.is_zero());

        let r = m(2, &[&[1, 1], &[1, 1]]).rref();
        assert_eq!(r.matrix, m(2, &[&[1, 1], &[0, 0]]));
        assert_eq!(r.rank, 1);
    }

    #[test]
    fn solve_examples() {
        let id = FpMatrix::identity(7, 3).unwrap();
        assert_eq!(id.solve(&[3, 0, 6]).unwrap(), Some(vec![3, 0, 6]));

        let z = FpMatrix::zeros(3, 1, 1).unwrap();
        assert_eq!(z.solve(&[1]).unwrap(), None);

        // [[1,1],[0,1]] x = (2,1) over GF(3): x2 = 1, x1 = 1. 1+1 = 2 and 1 = 1.
        let a = m(3, &[&[1, 1], &[0, 1]]);
        assert_eq!(a.solve(&[2, 1]).unwrap(), Some(vec![1, 1]));

        assert!(a.solve(&[1]).is_err());
    }

    #[test]
    fn nullspace_examples() {
        assert_eq!(FpMatrix::identity(5, 4).unwrap().nullspace().dim(), 0);
        assert_eq!(FpMatrix::zeros(3, 3, 3).unwrap().nullspace().dim(), 3);
        let ns = m(2, &[&[1, 1]]).nullspace();
        assert_eq!(ns.basis_vectors(), vec![vec![1, 1]]);
    }

    #[test]
    fn min_poly_examples() {
        // coefficients are listed from the constant term upwards
        let z = FpMatrix::zeros(5, 3, 3).unwrap();
        assert_eq!(z.min_poly().unwrap().coeffs(), &[0, 1]);
        let id = FpMatrix::identity(5, 3).unwrap();
        assert_eq!(id.min_poly().unwrap().coeffs(), &[4, 1]);
        let j = m(2, &[&[0, 1], &[0, 0]]);
        assert_eq!(j.min_poly().unwrap().coeffs(), &[0, 0, 1]);
        assert!(FpMatrix::zeros(2, 2, 3).unwrap().min_poly().is_err());
    }

    #[test]
    fn nilpotent_invertible_examples() {
        let id = FpMatrix::identity(3, 2).unwrap();
        assert!(!id.is_nilpotent().unwrap());
        assert!(id.is_invertible().unwrap());
        let z = FpMatrix::zeros(3, 2, 2).unwrap();
        assert!(z.is_nilpotent().unwrap());
        assert!(!z.is_invertible().unwrap());
        let d = m(3, &[&[1, 0], &[0, 0]]);
        assert!(!d.is_nilpotent().unwrap());
        assert!(!d.is_invertible().unwrap());
    }

    #[test]
    fn packed_rows_span_word_boundaries() {
        let n = 130;
        let mut a = FpMatrix::zeros(2, n, n).unwrap();
        for i in 0..n {
            a.set(i, i, 1);
            a.set(i, (i + 1) % n, 1);
        }
        // circulant I + shift has rank n - 1 over GF(2) (all-ones vector in the kernel)
        assert_eq!(a.rank(), n - 1);
        let ns = a.nullspace();
        assert_eq!(ns.dim(), 1);
        assert_eq!(ns.basis_vectors()[0], vec![1; n]);
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(5, &[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), FpMatrix::identity(5, 2).unwrap());
        assert!(m(5, &[&[1, 2], &[2, 4]]).inverse().unwrap().is_none());
    }
}
