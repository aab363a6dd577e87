//! Two groups whose elements realise the same first columns but different
//! pairs of first columns: permutations with a global sign and signed
//! permutations, both for `N = 2`.

use std::collections::HashSet;

use serde_json::{json, Value};

use crate::error::Result;

use super::elements::{all_global_sign_elements, all_signed_permutation_elements, ConcreteElement};

/// The distinct first-`d`-column blocks of the elements, in order of first
/// appearance.
pub fn column_set(elements: &[ConcreteElement], d: usize) -> Result<Vec<Vec<i64>>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for g in elements {
        let cols = g.first_columns(d)?;
        if seen.insert(cols.clone()) {
            out.push(cols);
        }
    }
    Ok(out)
}

/// Column `j` of a row-major `n x d` block.
pub fn column(block: &[i64], d: usize, j: usize) -> Vec<i64> {
    block.iter().skip(j).step_by(d).copied().collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct SeparationReport {
    pub n: usize,
    pub global_sign_first: Vec<Vec<i64>>,
    pub signed_first: Vec<Vec<i64>>,
    pub first_columns_agree: bool,
    pub global_sign_pairs: Vec<Vec<i64>>,
    pub signed_pairs: Vec<Vec<i64>>,
    pub pairs_agree: bool,
    /// The first pair of columns, in signed-permutation order, that no
    /// global-sign permutation produces.
    pub separating_pair: Option<(Vec<i64>, Vec<i64>)>,
}

fn same_set(a: &[Vec<i64>], b: &[Vec<i64>]) -> bool {
    let a: HashSet<&Vec<i64>> = a.iter().collect();
    let b: HashSet<&Vec<i64>> = b.iter().collect();
    a == b
}

pub fn separation_report(n: usize) -> Result<SeparationReport> {
    let sp = all_global_sign_elements(n);
    let h = all_signed_permutation_elements(n);
    let global_sign_first = column_set(&sp, 1)?;
    let signed_first = column_set(&h, 1)?;
    let d = n.min(2);
    let global_sign_pairs = column_set(&sp, d)?;
    let signed_pairs = column_set(&h, d)?;
    let separating_pair = signed_pairs
        .iter()
        .find(|b| !global_sign_pairs.contains(b))
        .map(|b| (column(b, d, 0), column(b, d, d - 1)));
    Ok(SeparationReport {
        n,
        first_columns_agree: same_set(&global_sign_first, &signed_first),
        pairs_agree: same_set(&global_sign_pairs, &signed_pairs),
        global_sign_first,
        signed_first,
        global_sign_pairs,
        signed_pairs,
        separating_pair,
    })
}

impl SeparationReport {
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "first_columns_agree": self.first_columns_agree,
            "first_columns": self.signed_first,
            "pairs_agree": self.pairs_agree,
            "global_sign_pairs": self.global_sign_pairs,
            "signed_pairs": self.signed_pairs,
            "separating_pair": self.separating_pair,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two() {
        let r = separation_report(2).unwrap();
        assert!(r.first_columns_agree);
        assert_eq!(r.signed_first.len(), 4);
        assert!(!r.pairs_agree);
        assert_eq!(r.global_sign_pairs.len(), 4);
        assert_eq!(r.signed_pairs.len(), 8);
        assert_eq!(r.separating_pair, Some((vec![1, 0], vec![0, -1])));
    }
}
