//! Small dense matrices over the dyadic rationals.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::dyadic::Dyadic;
use crate::error::{Error, Result};

/// Row-major square or rectangular dyadic matrix.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RealMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Dyadic>,
}

impl RealMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RealMatrix { rows, cols, data: vec![Dyadic::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal(&vec![Dyadic::one(); n])
    }

    pub fn diagonal(d: &[Dyadic]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, x) in d.iter().enumerate() {
            m.set(i, i, x.clone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Dyadic>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("ragged matrix rows".into()));
        }
        Ok(RealMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| Dyadic::from_int(x)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Dyadic {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Dyadic) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Dyadic] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        if self.cols != o.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let mut out = Self::zeros(self.rows, o.cols);
        for r in 0..self.rows {
            for t in 0..self.cols {
                let a = self.get(r, t);
                if a.is_zero() {
                    continue;
                }
                for c in 0..o.cols {
                    let b = o.get(t, c);
                    if !b.is_zero() {
                        let idx = r * out.cols + c;
                        out.data[idx] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        RealMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| -x).collect() }
    }

    /// Exact determinant by fraction-free elimination on an integer rescaling.
    pub fn determinant(&self) -> Result<Dyadic> {
        if self.rows != self.cols {
            return Err(Error::ShapeMismatch(format!("determinant of a {}x{} matrix", self.rows, self.cols)));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Dyadic::one());
        }
        let e = self.data.iter().map(Dyadic::exponent).max().unwrap_or(0);
        let mut a: Vec<Vec<BigInt>> = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| {
                        let x = self.get(r, c);
                        x.numerator() << (e - x.exponent()) as usize
                    })
                    .collect()
            })
            .collect();
        let det = bareiss(&mut a);
        Ok(Dyadic::new(det, e * n as u32))
    }

    /// Text with one row per line.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }
}

fn bareiss(a: &mut [Vec<BigInt>]) -> BigInt {
    let n = a.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

impl fmt::Display for RealMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinants() {
        let m = RealMatrix::from_int_rows(&[vec![2, 0, 1], vec![1, 3, 2], vec![1, 1, 2]]).unwrap();
        assert_eq!(m.determinant().unwrap(), Dyadic::from_int(6));
        let p = RealMatrix::from_int_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(p.determinant().unwrap(), Dyadic::from_int(-1));
        let h = RealMatrix::diagonal(&["1/2".parse().unwrap(), "3/4".parse().unwrap()]);
        assert_eq!(h.determinant().unwrap(), "3/8".parse().unwrap());
        let s = RealMatrix::from_int_rows(&[vec![1, 2], vec![2, 4]]).unwrap();
        assert!(s.determinant().unwrap().is_zero());
        assert_eq!(RealMatrix::zeros(0, 0).determinant().unwrap(), Dyadic::one());
    }

    #[test]
    fn product_and_transpose() {
        let a = RealMatrix::from_int_rows(&[vec![1, 2], vec![3, 4]]).unwrap();
        let i = RealMatrix::identity(2);
        assert_eq!(a.try_mul(&i).unwrap(), a);
        assert_eq!(a.transpose().transpose(), a);
        assert_eq!(a.try_mul(&a).unwrap(), RealMatrix::from_int_rows(&[vec![7, 10], vec![15, 22]]).unwrap());
        assert!(a.try_mul(&RealMatrix::zeros(3, 3)).is_err());
    }
}
