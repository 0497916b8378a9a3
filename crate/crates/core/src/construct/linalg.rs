//! Small dense matrices over a field, row-vector convention.

use crate::error::{Error, Result};
use crate::field::{Elem, FieldCtx};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    n: usize,
    data: Vec<Elem>,
}

impl Matrix {
    pub fn identity(n: usize) -> Matrix {
        let mut data = vec![Elem::ZERO; n * n];
        for i in 0..n {
            data[i * n + i] = Elem::ONE;
        }
        Matrix { n, data }
    }

    pub fn from_rows(rows: &[Vec<Elem>]) -> Result<Matrix> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::precondition("matrix must be square and non-empty"));
        }
        Ok(Matrix { n, data: rows.concat() })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.data[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<Elem>> {
        self.data.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.data[i * self.n + j] = v;
    }

    /// `v * self`.
    pub fn apply(&self, k: &FieldCtx, v: &[Elem]) -> Vec<Elem> {
        (0..self.n)
            .map(|j| (0..self.n).fold(Elem::ZERO, |acc, i| k.add(acc, k.mul(v[i], self.get(i, j)))))
            .collect()
    }

    pub fn det(&self, k: &FieldCtx) -> Elem {
        let mut m = self.clone();
        let mut det = Elem::ONE;
        for col in 0..self.n {
            let Some(pivot) = (col..self.n).find(|&r| !m.get(r, col).is_zero()) else {
                return Elem::ZERO;
            };
            if pivot != col {
                m.swap_rows(pivot, col);
                det = k.neg(det);
            }
            let p = m.get(col, col);
            det = k.mul(det, p);
            let pinv = k.inv(p).expect("pivot is nonzero");
            for r in col + 1..self.n {
                let factor = k.mul(m.get(r, col), pinv);
                m.eliminate(k, r, col, factor);
            }
        }
        det
    }

    pub fn inverse(&self, k: &FieldCtx) -> Result<Matrix> {
        let n = self.n;
        let mut m = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !m.get(r, col).is_zero())
                .ok_or_else(|| Error::precondition("matrix is singular"))?;
            m.swap_rows(pivot, col);
            inv.swap_rows(pivot, col);
            let pinv = k.inv(m.get(col, col))?;
            for j in 0..n {
                m.set(col, j, k.mul(m.get(col, j), pinv));
                inv.set(col, j, k.mul(inv.get(col, j), pinv));
            }
            for r in (0..n).filter(|&r| r != col) {
                let factor = m.get(r, col);
                if !factor.is_zero() {
                    m.eliminate(k, r, col, factor);
                    inv.eliminate(k, r, col, factor);
                }
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.n {
            self.data.swap(a * self.n + j, b * self.n + j);
        }
    }

    /// row[r] -= factor * row[src]
    fn eliminate(&mut self, k: &FieldCtx, r: usize, src: usize, factor: Elem) {
        for j in 0..self.n {
            let v = k.sub(self.get(r, j), k.mul(factor, self.get(src, j)));
            self.set(r, j, v);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_det() {
        let k = FieldCtx::new(5, 1).unwrap();
        let e = |v: u32| Elem(v);
        let a = Matrix::from_rows(&[vec![e(1), e(2)], vec![e(3), e(4)]]).unwrap();
        // 4 - 6 = -2 = 3
        assert_eq!(a.det(&k), e(3));
        let inv = a.inverse(&k).unwrap();
        for v in [[e(1), e(0)], [e(2), e(3)]] {
            assert_eq!(inv.apply(&k, &a.apply(&k, &v)), v.to_vec());
        }
        let s = Matrix::from_rows(&[vec![e(1), e(2)], vec![e(2), e(4)]]).unwrap();
        assert_eq!(s.det(&k), Elem::ZERO);
        assert!(s.inverse(&k).is_err());
        let k = FieldCtx::new(2, 3).unwrap();
        let p = Matrix::from_rows(&[vec![e(0), e(1), e(0)], vec![e(1), e(0), e(0)], vec![e(0), e(0), e(5)]]).unwrap();
        assert_eq!(p.det(&k), e(5));
        assert_eq!(p.inverse(&k).unwrap().inverse(&k).unwrap(), p);
    }
}
