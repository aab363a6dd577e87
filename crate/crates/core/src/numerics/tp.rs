//! The 0/1 maps `T_p : (C^N)^{⊗k} -> (C^N)^{⊗l}` and the intertwiner test
//! `T_p G_ω = G_ω' T_p`.
//!
//! Rows are indexed by lower labelings `t'`, columns by upper labelings `t`,
//! both in lexicographic order with the first letter most significant.

use std::collections::BTreeSet;
use std::ops::Sub;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::labeling::{checked_pow, LabelDecomposition, Words};
use crate::partition::{Colour, Partition, Row};
use crate::relations::Scalar;

use super::elements::{ConcreteElement, Entries};
use super::matrix::{ExactMatrix, DENSE_ENTRY_CAP};

pub const TP_ENTRY_CAP: u128 = 100_000_000;

/// Sparse 0/1 matrix stored by columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TpMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<Vec<usize>>,
}

pub fn word_index(word: &[u32], n: u32) -> usize {
    word.iter()
        .fold(0usize, |acc, &x| acc * n as usize + (x as usize - 1))
}

pub fn tp_matrix(p: &Partition, n: u32) -> Result<TpMatrix> {
    tp_matrix_with_cap(p, n, TP_ENTRY_CAP)
}

pub fn tp_matrix_with_cap(p: &Partition, n: u32, cap: u128) -> Result<TpMatrix> {
    let rows = checked_pow(n, p.l())?;
    let cols = checked_pow(n, p.k())?;
    let size = rows.saturating_mul(cols);
    if size > cap {
        return Err(Error::CapExceeded {
            what: "T_p entries".into(),
            size,
            cap,
        });
    }
    let dec = LabelDecomposition::new(p, n)?.with_cap(cap);
    let targets: Vec<Vec<usize>> = std::iter::once(Ok(vec![]))
        .chain((1..=dec.r()).map(|i| {
            dec.enumerate_class(Row::Lower, i)
                .map(|ws| ws.iter().map(|w| word_index(w, n)).collect())
        }))
        .collect::<Result<_>>()?;
    let columns = Words::new(n, p.k())
        .map(|t| targets[dec.classify_unchecked(Row::Upper, &t)].clone())
        .collect();
    Ok(TpMatrix {
        rows: rows as usize,
        cols: cols as usize,
        columns,
    })
}

impl TpMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, c: usize) -> &[usize] {
        &self.columns[c]
    }

    pub fn get(&self, r: usize, c: usize) -> u8 {
        u8::from(self.columns[c].binary_search(&r).is_ok())
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn transpose(&self) -> TpMatrix {
        let mut columns = vec![Vec::new(); self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for &r in col {
                columns[r].push(c);
            }
        }
        TpMatrix {
            rows: self.cols,
            cols: self.rows,
            columns,
        }
    }

    pub fn kronecker(&self, other: &TpMatrix) -> TpMatrix {
        let mut columns = Vec::with_capacity(self.cols * other.cols);
        for a in &self.columns {
            for b in &other.columns {
                columns.push(
                    a.iter()
                        .flat_map(|&r1| b.iter().map(move |&r2| r1 * other.rows + r2))
                        .collect(),
                );
            }
        }
        TpMatrix {
            rows: self.rows * other.rows,
            cols: self.cols * other.cols,
            columns,
        }
    }

    pub fn to_dense(&self) -> Result<ExactMatrix> {
        if self.rows * self.cols > DENSE_ENTRY_CAP {
            return Err(Error::CapExceeded {
                what: "dense T_p".into(),
                size: (self.rows * self.cols) as u128,
                cap: DENSE_ENTRY_CAP as u128,
            });
        }
        let mut m = ExactMatrix::zeros(self.rows, self.cols);
        for (c, col) in self.columns.iter().enumerate() {
            for &r in col {
                m.set(r, c, BigRational::one());
            }
        }
        Ok(m)
    }

    /// Exact rank. Zero and repeated columns, then zero and repeated rows,
    /// are dropped first; neither changes the rank.
    pub fn rank(&self) -> usize {
        let cols: BTreeSet<&Vec<usize>> = self.columns.iter().filter(|c| !c.is_empty()).collect();
        let cols: Vec<&Vec<usize>> = cols.into_iter().collect();
        let mut row_patterns: Vec<Vec<usize>> = vec![Vec::new(); self.rows];
        for (j, col) in cols.iter().enumerate() {
            for &r in col.iter() {
                row_patterns[r].push(j);
            }
        }
        let rows: BTreeSet<Vec<usize>> =
            row_patterns.into_iter().filter(|r| !r.is_empty()).collect();
        let mut m = ExactMatrix::zeros(rows.len(), cols.len());
        for (i, r) in rows.iter().enumerate() {
            for &j in r {
                m.set(i, j, BigRational::one());
            }
        }
        m.rank()
    }

    /// Matrix Market coordinate format.
    pub fn to_matrix_market(&self) -> String {
        let mut s = format!(
            "%%MatrixMarket matrix coordinate integer general\n{} {} {}\n",
            self.rows,
            self.cols,
            self.nnz()
        );
        let mut entries: Vec<(usize, usize)> = self
            .columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |&r| (r, c)))
            .collect();
        entries.sort_unstable();
        for (r, c) in entries {
            s.push_str(&format!("{} {} 1\n", r + 1, c + 1));
        }
        s
    }
}

/// Column `t` of `G_ω`, as sparse `(row, value)` pairs.
fn kron_column<S: Scalar>(g: &[S], n: usize, word: &[Colour], t: usize) -> Vec<(usize, S)> {
    let mut digits = vec![0usize; word.len()];
    let mut rest = t;
    for d in digits.iter_mut().rev() {
        *d = rest % n;
        rest /= n;
    }
    let mut cur = vec![(0usize, S::one())];
    for (&col, &c) in digits.iter().zip(word) {
        let mut next = Vec::with_capacity(cur.len() * n);
        for (idx, val) in &cur {
            for row in 0..n {
                let e = &g[row * n + col];
                if e.is_zero() {
                    continue;
                }
                let e = if c == Colour::Black {
                    e.conj()
                } else {
                    e.clone()
                };
                next.push((idx * n + row, val.clone() * e));
            }
        }
        cur = next;
    }
    cur
}

fn residual_generic<S>(t: &TpMatrix, p: &Partition, g: &[S], n: usize) -> f64
where
    S: Scalar + Sub<Output = S>,
{
    let mut worst = 0.0f64;
    for c in 0..t.cols {
        let mut left = vec![S::zero(); t.rows];
        for (s, v) in kron_column(g, n, p.upper_colours(), c) {
            for &r in t.column(s) {
                left[r] = left[r].clone() + v.clone();
            }
        }
        let mut right = vec![S::zero(); t.rows];
        for &s in t.column(c) {
            for (r, v) in kron_column(g, n, p.lower_colours(), s) {
                right[r] = right[r].clone() + v;
            }
        }
        for (a, b) in left.into_iter().zip(right) {
            worst = worst.max((a - b).magnitude());
        }
    }
    worst
}

/// `max |T_p G_ω - G_ω' T_p|` over all entries.
pub fn check_intertwiner(p: &Partition, g: &ConcreteElement) -> Result<f64> {
    let n = g.n();
    let t = tp_matrix(p, n as u32)?;
    check_intertwiner_with(&t, p, g)
}

/// As [`check_intertwiner`] with a precomputed `T_p` for `N = g.n()`.
pub fn check_intertwiner_with(t: &TpMatrix, p: &Partition, g: &ConcreteElement) -> Result<f64> {
    let n = g.n();
    let expect_rows = checked_pow(n as u32, p.l())?;
    let expect_cols = checked_pow(n as u32, p.k())?;
    if t.rows as u128 != expect_rows || t.cols as u128 != expect_cols {
        return Err(Error::DimensionMismatch(format!(
            "T_p is {}x{}, expected {expect_rows}x{expect_cols} for N = {n}",
            t.rows, t.cols
        )));
    }
    Ok(match g.entries() {
        Entries::Integer(v) => residual_generic(t, p, v, n),
        Entries::Rational(v) => residual_generic(t, p, v, n),
        Entries::Float(v) => residual_generic::<Complex64>(t, p, v, n),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::elements::*;
    use Colour::*;

    #[test]
    fn identity_and_cap() {
        let t = tp_matrix(&Partition::identity(White), 3).unwrap();
        assert_eq!(t.to_dense().unwrap(), ExactMatrix::identity(3));
        let cap = tp_matrix(&Partition::lower_pair(White, Black), 2).unwrap();
        assert_eq!((cap.rows(), cap.cols()), (4, 1));
        assert_eq!(cap.column(0), &[0, 3]);
        let big = Partition::one_block(&[White; 8]);
        assert!(matches!(
            tp_matrix_with_cap(&big, 10, 1000),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn rank_of_running_example() {
        let p: Partition = "oA oA *B / *C *B oB".parse().unwrap();
        assert_eq!(tp_matrix(&p, 2).unwrap().rank(), 2);
        assert_eq!(tp_matrix(&p, 3).unwrap().rank(), 3);
        assert_eq!(tp_matrix(&p, 3).unwrap().to_dense().unwrap().rank(), 3);
    }

    #[test]
    fn involution_and_tensor() {
        let p: Partition = "oA oA *B / *C *B oB".parse().unwrap();
        let q: Partition = "oA / oA *B".parse().unwrap();
        let tp = tp_matrix(&p, 2).unwrap();
        assert_eq!(tp_matrix(&p.involution(), 2).unwrap(), tp.transpose());
        let tq = tp_matrix(&q, 2).unwrap();
        assert_eq!(tp_matrix(&p.tensor(&q), 2).unwrap(), tp.kronecker(&tq));
    }

    #[test]
    fn intertwiners() {
        let four = Partition::one_block(&[White, White, Black, Black]);
        let g = make_element(
            ElementClass::Custom,
            2,
            &ElementParams::Custom(Entries::Integer(vec![0, -1, 1, 0])),
        )
        .unwrap();
        assert_eq!(check_intertwiner(&four, &g).unwrap(), 0.0);
        let pair = Partition::lower_pair(White, White);
        let rot = make_element(
            ElementClass::RotationSample,
            2,
            &ElementParams::Rotation {
                angle: 0.7,
                reflection: false,
            },
        )
        .unwrap();
        assert!(check_intertwiner(&pair, &rot).unwrap() <= 1e-12);
        let single = Partition::singleton(White);
        assert!(check_intertwiner(&single, &rot).unwrap() > 0.1);
        let p: Partition = "oA oA *B / *C *B oB".parse().unwrap();
        for g in all_permutation_elements(3) {
            assert_eq!(check_intertwiner(&p, &g).unwrap(), 0.0);
        }
        let t2 = tp_matrix(&p, 2).unwrap();
        assert!(matches!(
            check_intertwiner_with(&t2, &p, &all_permutation_elements(3)[0]),
            Err(Error::DimensionMismatch(_))
        ));
    }
}
