use super::inv_mod;

/// Polynomial over GF(p), coefficients stored from the constant term upwards
/// with no trailing zeros. The zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    p: u32,
    coeffs: Vec<u32>,
}

impl Poly {
    pub fn new(p: u32, mut coeffs: Vec<u32>) -> Self {
        coeffs.iter_mut().for_each(|c| *c %= p);
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { p, coeffs }
    }

    pub fn zero(p: u32) -> Self {
        Self { p, coeffs: vec![] }
    }

    pub fn one(p: u32) -> Self {
        Self::new(p, vec![1])
    }

    /// The monomial x^k.
    pub fn x_pow(p: u32, k: usize) -> Self {
        let mut c = vec![0; k + 1];
        c[k] = 1;
        Self::new(p, c)
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn is_power_of_x(&self) -> bool {
        match self.coeffs.split_last() {
            Some((&1, rest)) => rest.iter().all(|&c| c == 0),
            _ => false,
        }
    }

    pub fn eval(&self, x: u32) -> u32 {
        self.coeffs
            .iter()
            .rev()
            .fold(0u32, |acc, &c| (acc * x + c) % self.p)
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(&lead) => {
                let inv = inv_mod(lead, self.p);
                Self::new(self.p, self.coeffs.iter().map(|&c| c * inv).collect())
            }
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p);
        }
        let p = self.p;
        let mut out = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a * b) % p;
            }
        }
        Self::new(p, out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let p = self.p;
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            p,
            (0..n)
                .map(|i| {
                    let a = self.coeffs.get(i).copied().unwrap_or(0);
                    let b = other.coeffs.get(i).copied().unwrap_or(0);
                    (a + p - b) % p
                })
                .collect(),
        )
    }

    /// Quotient and remainder. Panics on division by zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let p = self.p;
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = inv_mod(divisor.coeffs[dd], p);
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(p), self.clone());
        }
        let mut quot = vec![0u32; rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = rem[k] * lead_inv % p;
            if c == 0 {
                continue;
            }
            quot[k - dd] = c;
            for (i, &d) in divisor.coeffs.iter().enumerate() {
                let idx = k - dd + i;
                rem[idx] = (rem[idx] + p - c * d % p) % p;
            }
        }
        (Self::new(p, quot), Self::new(p, rem))
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn lcm(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p);
        }
        let g = self.gcd(other);
        let (q, _) = self.mul(other).div_rem(&g);
        q.monic()
    }

    /// Roots in GF(p), by exhaustive evaluation.
    pub fn roots(&self) -> Vec<u32> {
        (0..self.p).filter(|&x| self.eval(x) == 0).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        // (x+1)(x+2) = x^2 + 3x + 2 over GF(5)
        let a = Poly::new(5, vec![1, 1]);
        let b = Poly::new(5, vec![2, 1]);
        let c = a.mul(&b);
        assert_eq!(c.coeffs(), &[2, 3, 1]);
        let (q, r) = c.div_rem(&a);
        assert_eq!(q, b);
        assert!(r.is_zero());
        assert_eq!(c.gcd(&a), a);
        assert_eq!(a.lcm(&b), c);
        assert_eq!(c.roots(), vec![3, 4]);
        assert!(Poly::x_pow(3, 4).is_power_of_x());
        assert!(!c.is_power_of_x());
        assert_eq!(Poly::new(7, vec![0, 0, 0]).degree(), None);
    }

    #[test]
    fn remainder_has_lower_degree() {
        let a = Poly::new(3, vec![1, 2, 0, 1, 2]);
        let b = Poly::new(3, vec![2, 0, 1]);
        let (q, r) = a.div_rem(&b);
        assert!(r.degree().unwrap_or(0) < 2);
        let back = q.mul(&b);
        let diff = a.sub(&back).sub(&r);
        assert!(diff.is_zero());
    }
}
