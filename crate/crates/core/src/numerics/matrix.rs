use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense matrix of exact rationals, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

pub const DENSE_ENTRY_CAP: usize = 1_000_000;

pub fn int(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> ExactMatrix {
        ExactMatrix {
            rows,
            cols,
            entries: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn from_entries(
        rows: usize,
        cols: usize,
        entries: Vec<BigRational>,
    ) -> Result<ExactMatrix> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(ExactMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<ExactMatrix> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(ExactMatrix {
            rows: rows.len(),
            cols,
            entries: rows.iter().flatten().map(|&x| int(x)).collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigRational) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigRational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut t = ExactMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn kronecker(&self, other: &ExactMatrix) -> ExactMatrix {
        let mut out = ExactMatrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = self.get(r1, c1);
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..other.rows {
                    for c2 in 0..other.cols {
                        out.set(
                            r1 * other.rows + r2,
                            c1 * other.cols + c2,
                            a * other.get(r2, c2),
                        );
                    }
                }
            }
        }
        out
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = ExactMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let v = out.get(r, c) + a * b;
                        out.set(r, c, v);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Horizontal concatenation.
    pub fn hconcat(mats: &[&ExactMatrix]) -> Result<ExactMatrix> {
        let rows = mats.first().map_or(0, |m| m.rows);
        if let Some(m) = mats.iter().find(|m| m.rows != rows) {
            return Err(Error::DimensionMismatch(format!(
                "row counts {rows} and {} differ",
                m.rows
            )));
        }
        let cols = mats.iter().map(|m| m.cols).sum();
        let mut out = ExactMatrix::zeros(rows, cols);
        for r in 0..rows {
            let mut c0 = 0;
            for m in mats {
                for c in 0..m.cols {
                    out.set(r, c0 + c, m.get(r, c).clone());
                }
                c0 += m.cols;
            }
        }
        Ok(out)
    }

    /// Vertical concatenation.
    pub fn vconcat(mats: &[&ExactMatrix]) -> Result<ExactMatrix> {
        let cols = mats.first().map_or(0, |m| m.cols);
        if let Some(m) = mats.iter().find(|m| m.cols != cols) {
            return Err(Error::DimensionMismatch(format!(
                "column counts {cols} and {} differ",
                m.cols
            )));
        }
        let mut entries = Vec::new();
        for m in mats {
            entries.extend(m.entries.iter().cloned());
        }
        Ok(ExactMatrix {
            rows: mats.iter().map(|m| m.rows).sum(),
            cols,
            entries,
        })
    }

    /// Each row scaled by the lcm of its denominators.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|r| {
                let row = self.row(r);
                let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
            })
            .collect()
    }

    /// Exact rank by fraction-free (Bareiss) elimination.
    pub fn rank(&self) -> usize {
        bareiss_rank(self.integer_rows(), self.cols)
    }

    /// Matrix Market coordinate format, rationals written as `p/q`.
    pub fn to_matrix_market(&self) -> String {
        let nnz = self.entries.iter().filter(|x| !x.is_zero()).count();
        let mut s = String::from("%%MatrixMarket matrix coordinate real general\n");
        writeln!(s, "{} {} {}", self.rows, self.cols, nnz).unwrap();
        for r in 0..self.rows {
            for c in 0..self.cols {
                let v = self.get(r, c);
                if !v.is_zero() {
                    writeln!(s, "{} {} {}", r + 1, c + 1, v).unwrap();
                }
            }
        }
        s
    }
}

fn bareiss_rank(mut a: Vec<Vec<BigInt>>, cols: usize) -> usize {
    let rows = a.len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, piv);
        for r in rank + 1..rows {
            if a[r][c].is_zero() {
                for j in c + 1..cols {
                    let v = &a[r][j] * &a[rank][c];
                    a[r][j] = v / &prev;
                }
            } else {
                for j in c + 1..cols {
                    let v = &a[r][j] * &a[rank][c] - &a[r][c] * &a[rank][j];
                    a[r][j] = v / &prev;
                }
                a[r][c] = BigInt::zero();
            }
        }
        prev = a[rank][c].abs();
        rank += 1;
    }
    rank
}

/// Dimension of the sum of the column spans.
pub fn subspace_join_rank(mats: &[&ExactMatrix]) -> Result<usize> {
    Ok(ExactMatrix::hconcat(mats)?.rank())
}
