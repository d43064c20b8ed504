//! Small square integer matrices with checked arithmetic.
//!
//! Every product and determinant either returns an exact value or reports
//! overflow; nothing wraps silently. Determinants use the fraction-free
//! Bareiss scheme over i128 so intermediate values stay exact.

/// Marker for an arithmetic overflow in an exact computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Overflow;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct IntMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn identity(n: usize) -> Self {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        IntMatrix { n, entries }
    }

    /// Builds a matrix from row-major entries. The caller guarantees
    /// `entries.len() == n * n`.
    pub fn from_entries(n: usize, entries: Vec<i64>) -> Self {
        assert_eq!(entries.len(), n * n, "entry count must be n^2");
        IntMatrix { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.entries[i * self.n + j] = v;
    }

    pub fn is_identity(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(k, &v)| v == if k / self.n == k % self.n { 1 } else { 0 })
    }

    pub fn mul(&self, rhs: &IntMatrix) -> Result<IntMatrix, Overflow> {
        assert_eq!(self.n, rhs.n, "matrix dimensions must agree");
        let n = self.n;
        let mut out = vec![0i64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let term = a.checked_mul(rhs.get(k, j)).ok_or(Overflow)?;
                    out[i * n + j] = out[i * n + j].checked_add(term).ok_or(Overflow)?;
                }
            }
        }
        Ok(IntMatrix { n, entries: out })
    }

    pub fn mul_vec(&self, v: &[i64]) -> Result<Vec<i64>, Overflow> {
        assert_eq!(self.n, v.len(), "vector length must equal matrix size");
        let n = self.n;
        let mut out = vec![0i64; n];
        for i in 0..n {
            for j in 0..n {
                let term = self.get(i, j).checked_mul(v[j]).ok_or(Overflow)?;
                out[i] = out[i].checked_add(term).ok_or(Overflow)?;
            }
        }
        Ok(out)
    }

    /// True when every entry of column `j` is >= 0.
    pub fn column_nonnegative(&self, j: usize) -> bool {
        (0..self.n).all(|i| self.get(i, j) >= 0)
    }

    /// True when every entry of column `j` is <= 0.
    pub fn column_nonpositive(&self, j: usize) -> bool {
        (0..self.n).all(|i| self.get(i, j) <= 0)
    }

    /// Exact determinant via Bareiss elimination over i128.
    pub fn determinant(&self) -> Result<i64, Overflow> {
        let n = self.n;
        if n == 0 {
            return Ok(1);
        }
        let mut m: Vec<i128> = self.entries.iter().map(|&v| v as i128).collect();
        let at = |m: &Vec<i128>, i: usize, j: usize| m[i * n + j];
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n - 1 {
            if at(&m, k, k) == 0 {
                let pivot = (k + 1..n).find(|&l| at(&m, l, k) != 0);
                match pivot {
                    None => return Ok(0),
                    Some(l) => {
                        for j in 0..n {
                            m.swap(k * n + j, l * n + j);
                        }
                        sign = -sign;
                    }
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let lhs = at(&m, i, j).checked_mul(at(&m, k, k)).ok_or(Overflow)?;
                    let rhs = at(&m, i, k).checked_mul(at(&m, k, j)).ok_or(Overflow)?;
                    let num = lhs.checked_sub(rhs).ok_or(Overflow)?;
                    m[i * n + j] = num / prev;
                }
                m[i * n + k] = 0;
            }
            prev = at(&m, k, k);
        }
        let det = sign * at(&m, n - 1, n - 1);
        i64::try_from(det).map_err(|_| Overflow)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_multiplies_neutrally() {
        let id = IntMatrix::identity(3);
        let m = IntMatrix::from_entries(3, vec![2, -1, 0, -1, 2, -1, 0, -1, 2]);
        assert_eq!(id.mul(&m).unwrap(), m);
        assert_eq!(m.mul(&id).unwrap(), m);
        assert!(id.is_identity());
        assert!(!m.is_identity());
    }

    #[test]
    fn multiplication_is_exact() {
        let a = IntMatrix::from_entries(2, vec![1, 2, 3, 4]);
        let b = IntMatrix::from_entries(2, vec![0, 1, 1, 0]);
        assert_eq!(a.mul(&b).unwrap().entries(), &[2, 1, 4, 3]);
    }

    #[test]
    fn multiplication_reports_overflow() {
        let big = IntMatrix::from_entries(2, vec![i64::MAX, 0, 0, i64::MAX]);
        assert_eq!(big.mul(&big), Err(Overflow));
    }

    #[test]
    fn determinant_matches_known_values() {
        assert_eq!(IntMatrix::identity(0).determinant().unwrap(), 1);
        assert_eq!(IntMatrix::identity(4).determinant().unwrap(), 1);
        let a2 = IntMatrix::from_entries(2, vec![2, -1, -1, 2]);
        assert_eq!(a2.determinant().unwrap(), 3);
        let singular = IntMatrix::from_entries(2, vec![1, 2, 2, 4]);
        assert_eq!(singular.determinant().unwrap(), 0);
        let needs_pivot = IntMatrix::from_entries(2, vec![0, 1, 1, 0]);
        assert_eq!(needs_pivot.determinant().unwrap(), -1);
    }

    #[test]
    fn column_sign_tests() {
        let m = IntMatrix::from_entries(2, vec![-1, 1, 0, 1]);
        assert!(m.column_nonpositive(0));
        assert!(!m.column_nonnegative(0));
        assert!(m.column_nonnegative(1));
    }
}
