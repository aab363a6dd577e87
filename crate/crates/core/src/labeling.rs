//! Valid labelings and the decomposition of `[N]^k` and `[N]^l` into
//! through-block classes `T_0, T_1, .., T_r` and `T'_0, .., T'_r`.
//!
//! Class `0` collects the labelings that are invalid for the row. A valid
//! labeling lands in class `1 + sum_m (c_m - 1) N^m`, where `c_m` is the label
//! it puts on the `m`-th through-block (through-blocks ordered by minimal
//! point). Hence `r = N^tb(p)`.

use crate::error::{Error, Result};
use crate::partition::{Partition, Row};

pub const DEFAULT_LABEL_CAP: u128 = 10_000_000;

/// `1` iff every block of `p` is constant under the labeling `(t, t')`.
pub fn delta_p(p: &Partition, t: &[u32], t_prime: &[u32]) -> Result<u8> {
    check_len(p.k(), t.len())?;
    check_len(p.l(), t_prime.len())?;
    let mut seen: Vec<Option<u32>> = vec![None; p.num_blocks()];
    for (&b, &x) in p.labels().iter().zip(t.iter().chain(t_prime)) {
        match seen[b] {
            Some(y) if y != x => return Ok(0),
            _ => seen[b] = Some(x),
        }
    }
    Ok(1)
}

fn check_len(expected: usize, got: usize) -> Result<()> {
    if expected != got {
        return Err(Error::LengthMismatch { expected, got });
    }
    Ok(())
}

pub(crate) fn checked_pow(n: u32, e: usize) -> Result<u128> {
    (n as u128).checked_pow(e as u32).ok_or(Error::CapExceeded {
        what: format!("{n}^{e}"),
        size: u128::MAX,
        cap: u128::MAX,
    })
}

/// Iterates over `[n]^len` in lexicographic order.
pub struct Words {
    n: u32,
    current: Option<Vec<u32>>,
}

impl Words {
    pub fn new(n: u32, len: usize) -> Words {
        Words {
            n,
            current: if n == 0 && len > 0 {
                None
            } else {
                Some(vec![1; len])
            },
        }
    }
}

impl Iterator for Words {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().unwrap();
        let mut i = cur.len();
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if cur[i] < self.n {
                cur[i] += 1;
                break;
            }
            cur[i] = 1;
        }
        Some(out)
    }
}

#[derive(Clone, Debug)]
pub struct LabelDecomposition {
    partition: Partition,
    n: u32,
    r: usize,
    through: Vec<usize>,
    cap: u128,
}

impl LabelDecomposition {
    pub fn new(p: &Partition, n: u32) -> Result<LabelDecomposition> {
        if n == 0 {
            return Err(Error::OutOfRange("N must be at least 1".into()));
        }
        let through = p.through_blocks();
        let r = checked_pow(n, through.len())?;
        let r = usize::try_from(r).map_err(|_| Error::CapExceeded {
            what: "number of classes".into(),
            size: r,
            cap: usize::MAX as u128,
        })?;
        Ok(LabelDecomposition {
            partition: p.clone(),
            n,
            r,
            through,
            cap: DEFAULT_LABEL_CAP,
        })
    }

    pub fn with_cap(mut self, cap: u128) -> LabelDecomposition {
        self.cap = cap;
        self
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of non-zero classes, `N^tb(p)`.
    pub fn r(&self) -> usize {
        self.r
    }

    pub fn cap(&self) -> u128 {
        self.cap
    }

    pub fn through_block_order(&self) -> &[usize] {
        &self.through
    }

    fn row_len(&self, side: Row) -> usize {
        self.partition.colours(side).len()
    }

    /// Blocks that appear on `side` but not on the other row, ordered by
    /// their first point on `side`.
    fn free_blocks(&self, side: Row) -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        for &b in self.partition.row_labels(side) {
            if !self.through.contains(&b) && !out.contains(&b) {
                out.push(b);
            }
        }
        out
    }

    fn decode(&self, i: usize) -> Vec<u32> {
        let mut rest = i - 1;
        let n = self.n as usize;
        self.through
            .iter()
            .map(|_| {
                let c = (rest % n) as u32 + 1;
                rest /= n;
                c
            })
            .collect()
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i > self.r {
            return Err(Error::OutOfRange(format!(
                "class index {i} > r = {}",
                self.r
            )));
        }
        Ok(())
    }

    pub fn classify_row(&self, side: Row, t: &[u32]) -> Result<usize> {
        check_len(self.row_len(side), t.len())?;
        if let Some(&bad) = t.iter().find(|&&x| x == 0 || x > self.n) {
            return Err(Error::LabelOutOfRange {
                label: bad,
                n: self.n,
            });
        }
        Ok(self.classify_unchecked(side, t))
    }

    pub(crate) fn classify_unchecked(&self, side: Row, t: &[u32]) -> usize {
        let mut seen: Vec<u32> = vec![0; self.partition.num_blocks()];
        for (&b, &x) in self.partition.row_labels(side).iter().zip(t) {
            if seen[b] == 0 {
                seen[b] = x;
            } else if seen[b] != x {
                return 0;
            }
        }
        let mut idx = 0usize;
        let mut weight = 1usize;
        for &b in &self.through {
            idx += (seen[b] as usize - 1) * weight;
            weight *= self.n as usize;
        }
        idx + 1
    }

    /// Size of each non-zero class on `side`.
    pub fn class_size(&self, side: Row) -> Result<u128> {
        checked_pow(self.n, self.free_blocks(side).len())
    }

    fn guard(&self, what: &str, size: u128) -> Result<()> {
        if size > self.cap {
            return Err(Error::CapExceeded {
                what: what.into(),
                size,
                cap: self.cap,
            });
        }
        Ok(())
    }

    /// The full fibre `T_i` (upper) or `T'_i` (lower), in lexicographic order.
    pub fn enumerate_class(&self, side: Row, i: usize) -> Result<Vec<Vec<u32>>> {
        self.check_index(i)?;
        let len = self.row_len(side);
        if i == 0 {
            self.guard("labelings of the row", checked_pow(self.n, len)?)?;
            return Ok(Words::new(self.n, len)
                .filter(|t| self.classify_unchecked(side, t) == 0)
                .collect());
        }
        let free = self.free_blocks(side);
        self.guard("class size", checked_pow(self.n, free.len())?)?;
        let through_vals = self.decode(i);
        let mut value = vec![0u32; self.partition.num_blocks()];
        for (&b, &c) in self.through.iter().zip(&through_vals) {
            value[b] = c;
        }
        let labels = self.partition.row_labels(side);
        Ok(Words::new(self.n, free.len())
            .map(|free_vals| {
                for (&b, &c) in free.iter().zip(&free_vals) {
                    value[b] = c;
                }
                labels.iter().map(|&b| value[b]).collect()
            })
            .collect())
    }

    /// The lexicographically least element of the class `i` whose entries are
    /// all at most `max_symbol`, if there is one.
    pub fn class_representative(
        &self,
        side: Row,
        i: usize,
        max_symbol: u32,
    ) -> Result<Option<Vec<u32>>> {
        if i == 0 {
            return Err(Error::OutOfRange(
                "representatives exist for classes 1..=r".into(),
            ));
        }
        self.check_index(i)?;
        if max_symbol == 0 || max_symbol > self.n {
            return Err(Error::OutOfRange(format!(
                "max_symbol {max_symbol} outside 1..={}",
                self.n
            )));
        }
        let vals = self.decode(i);
        if vals.iter().any(|&c| c > max_symbol) {
            return Ok(None);
        }
        let mut value = vec![1u32; self.partition.num_blocks()];
        for (&b, &c) in self.through.iter().zip(&vals) {
            value[b] = c;
        }
        Ok(Some(
            self.partition
                .row_labels(side)
                .iter()
                .map(|&b| value[b])
                .collect(),
        ))
    }

    /// All labelings in `[d]^len` that fall into class `i`.
    pub fn class_within(&self, side: Row, i: usize, d: u32) -> Result<Vec<Vec<u32>>> {
        self.check_index(i)?;
        let len = self.row_len(side);
        self.guard("bounded labelings of the row", checked_pow(d, len)?)?;
        Ok(Words::new(d, len)
            .filter(|t| self.classify_unchecked(side, t) == i)
            .collect())
    }
}
