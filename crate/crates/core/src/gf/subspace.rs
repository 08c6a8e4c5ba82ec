use super::FpMatrix;

/// A subspace of GF(p)^n held as a reduced row-echelon basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpSubspace {
    p: u32,
    ambient: usize,
    basis: FpMatrix,
    pivots: Vec<usize>,
}

impl FpSubspace {
    /// Span of the given vectors (each of length `ambient`).
    pub fn span(p: u32, ambient: usize, vectors: &[Vec<u32>]) -> Self {
        let m = FpMatrix::from_vectors(p, ambient, vectors)
            .expect("span: vectors must match the ambient dimension");
        Self::from_row_space(&m)
    }

    pub fn from_row_space(m: &FpMatrix) -> Self {
        let r = m.rref();
        let rows = r.matrix.nonzero_rows();
        let basis = FpMatrix::from_vectors(m.modulus(), m.cols(), &rows)
            .expect("rows have the right length");
        Self {
            p: m.modulus(),
            ambient: m.cols(),
            basis,
            pivots: r.pivots,
        }
    }

    pub fn zero(p: u32, ambient: usize) -> Self {
        Self::span(p, ambient, &[])
    }

    pub fn full(p: u32, ambient: usize) -> Self {
        Self::from_row_space(&FpMatrix::identity(p, ambient).expect("valid prime"))
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis(&self) -> &FpMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<u32>> {
        self.basis.to_rows()
    }

    /// Reduces `v` against the echelon basis; the result is zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let p = self.p;
        let mut out: Vec<u32> = v.iter().map(|x| x % p).collect();
        for (i, &c) in self.pivots.iter().enumerate() {
            let f = out[c];
            if f != 0 {
                let s = p - f;
                for j in c..self.ambient {
                    let b = self.basis.get(i, j);
                    if b != 0 {
                        out[j] = (out[j] + s * b) % p;
                    }
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    pub fn contains_subspace(&self, other: &FpSubspace) -> bool {
        other.basis_vectors().iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &FpSubspace) -> FpSubspace {
        let mut v = self.basis_vectors();
        v.extend(other.basis_vectors());
        Self::span(self.p, self.ambient, &v)
    }
}
