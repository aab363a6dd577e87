//! Brute-force oracles and hand-written fixtures shared by the integration
//! tests. Nothing here goes through the labeling decomposition.

#![allow(dead_code)]

use std::collections::BTreeSet;

use easycat::relations::{
    Case, Family, FormalSum, Monomial, Provenance, Relation, Symbol, SymbolKind,
};
use easycat::{Colour, Partition, Row};

pub fn eq1() -> Partition {
    "oA oA *B / *C *B oB".parse().unwrap()
}

pub fn pair_wb() -> Partition {
    "- / oA *A".parse().unwrap()
}

/// Every word in `[n]^len`, lexicographic.
pub fn all_words(n: u32, len: usize) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (1..=n).map(move |c| {
                    let mut v = w.clone();
                    v.push(c);
                    v
                })
            })
            .collect();
    }
    out
}

/// Labels each point with the block it belongs to, via `blocks()`.
fn point_blocks(p: &Partition, row: Row) -> Vec<usize> {
    let len = p.colours(row).len();
    let mut out = vec![usize::MAX; len];
    for (b, block) in p.blocks().iter().enumerate() {
        let pts = match row {
            Row::Upper => &block.upper,
            Row::Lower => &block.lower,
        };
        for &i in pts {
            out[i] = b;
        }
    }
    out
}

/// `t` is constant on every block restricted to `row`.
pub fn row_valid(p: &Partition, row: Row, t: &[u32]) -> bool {
    let b = point_blocks(p, row);
    (0..t.len()).all(|i| (0..t.len()).all(|j| b[i] != b[j] || t[i] == t[j]))
}

/// The joint labeling is constant on every block.
pub fn pair_valid(p: &Partition, t: &[u32], t2: &[u32]) -> bool {
    let up = point_blocks(p, Row::Upper);
    let low = point_blocks(p, Row::Lower);
    let pts: Vec<(usize, u32)> = up
        .iter()
        .copied()
        .zip(t.iter().copied())
        .chain(low.iter().copied().zip(t2.iter().copied()))
        .collect();
    pts.iter()
        .all(|&(b, x)| pts.iter().all(|&(c, y)| b != c || x == y))
}

/// Values a row labeling gives the through-blocks, in block order.
pub fn through_values(p: &Partition, row: Row, t: &[u32]) -> Vec<u32> {
    let b = point_blocks(p, row);
    p.blocks()
        .iter()
        .enumerate()
        .filter(|(_, blk)| blk.is_through())
        .map(|(k, _)| t[b.iter().position(|&x| x == k).unwrap()])
        .collect()
}

/// `T_p` entry by entry: rows are lower labelings, columns upper ones.
pub fn tp_entries(p: &Partition, n: u32) -> Vec<Vec<u8>> {
    let uppers = all_words(n, p.k());
    all_words(n, p.l())
        .iter()
        .map(|t2| uppers.iter().map(|t| pair_valid(p, t, t2) as u8).collect())
        .collect()
}

pub fn x(row: u32, col: u32, starred: bool) -> Symbol {
    Symbol {
        kind: SymbolKind::X,
        row,
        col,
        starred,
    }
}

pub fn sum(terms: Vec<Vec<Symbol>>) -> FormalSum {
    let mut s = FormalSum::zero();
    for t in terms {
        s.add_term(Monomial(t), 1);
    }
    s
}

/// Normalized text of `lhs = rhs`, or `None` if it is trivial.
pub fn normalized_text(lhs: FormalSum, rhs: FormalSum) -> Option<String> {
    Relation {
        lhs,
        rhs,
        provenance: Provenance {
            partition: Partition::empty(),
            family: Family::SpMatrix,
            case: Case::Matched,
            i: 0,
            j: None,
            gamma: None,
            gamma_prime: None,
        },
    }
    .normalized()
    .map(|r| r.to_text())
}

pub fn texts(rels: &[Relation]) -> BTreeSet<String> {
    rels.iter()
        .filter_map(|r| r.normalized().map(|r| r.to_text()))
        .collect()
}

/// The three relation families of the running partition over `d` columns,
/// written out from their closed forms.
pub fn eq1_families(n: u32, d: u32) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    for i in 1..=n {
        for j1 in 1..=d {
            for j2 in 1..=d {
                for j3 in 1..=d {
                    let matched_l = sum((1..=n)
                        .map(|t| vec![x(t, j1, false), x(t, j1, false), x(i, j2, true)])
                        .collect());
                    let matched_r = sum((1..=n)
                        .map(|t| vec![x(t, j3, true), x(i, j2, true), x(i, j2, false)])
                        .collect());
                    out.extend(normalized_text(matched_l, matched_r));
                    if j1 != j2 {
                        let upper = sum((1..=n)
                            .map(|t| vec![x(t, j1, false), x(t, j2, false), x(i, j3, true)])
                            .collect());
                        out.extend(normalized_text(upper, FormalSum::zero()));
                    }
                    if j2 != j3 {
                        let lower = sum((1..=n)
                            .map(|t| vec![x(t, j1, true), x(i, j2, true), x(i, j3, false)])
                            .collect());
                        out.extend(normalized_text(lower, FormalSum::zero()));
                    }
                }
            }
        }
    }
    out
}

/// `sum_t x(t,j1) x(t,j2)* = delta(j1,j2)` for all `j1, j2 <= d`.
pub fn delta_family(n: u32, d: u32) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    for j1 in 1..=d {
        for j2 in 1..=d {
            let lhs = sum((1..=n)
                .map(|t| vec![x(t, j1, false), x(t, j2, true)])
                .collect());
            let rhs = FormalSum::constant((j1 == j2) as i64);
            out.extend(normalized_text(lhs, rhs));
        }
    }
    out
}

/// Checks that the fibres of the decomposition of `p` at `n` satisfy the six
/// defining properties, using brute-force validity only.
pub fn check_decomposition(p: &Partition, n: u32) -> Result<(), String> {
    use easycat::labeling::LabelDecomposition;
    let dec = LabelDecomposition::new(p, n).map_err(|e| e.to_string())?;
    let r = dec.r();
    if r != (n as usize).pow(p.tb() as u32) {
        return Err(format!("(i): r = {r}, tb = {}", p.tb()));
    }
    let mut fibres = Vec::new();
    for row in [Row::Upper, Row::Lower] {
        let len = p.colours(row).len();
        let cls: Vec<Vec<Vec<u32>>> = (0..=r)
            .map(|i| dec.enumerate_class(row, i).map_err(|e| e.to_string()))
            .collect::<Result<_, _>>()?;
        let mut seen: Vec<Vec<u32>> = cls.iter().flatten().cloned().collect();
        seen.sort();
        if seen != all_words(n, len) {
            return Err(format!(
                "{} fibres are not a partition of [N]^{len}",
                row.name()
            ));
        }
        let invalid: Vec<Vec<u32>> = all_words(n, len)
            .into_iter()
            .filter(|t| !row_valid(p, row, t))
            .collect();
        let mut zero = cls[0].clone();
        zero.sort();
        if zero != invalid {
            return Err(format!(
                "(ii): {} zero fibre is not the invalid set",
                row.name()
            ));
        }
        if let Some(i) = (1..=r).find(|&i| cls[i].is_empty()) {
            return Err(format!("(iv): {} fibre {i} is empty", row.name()));
        }
        fibres.push(cls);
    }
    let (up, low) = (&fibres[0], &fibres[1]);
    for i in 1..=r {
        for t in &up[i] {
            for t2 in &low[i] {
                if !pair_valid(p, t, t2) {
                    return Err(format!("(iii): {t:?} {t2:?} in class {i} is invalid"));
                }
            }
        }
        let through: BTreeSet<Vec<u32>> = up[i]
            .iter()
            .map(|t| through_values(p, Row::Upper, t))
            .chain(low[i].iter().map(|t| through_values(p, Row::Lower, t)))
            .collect();
        if through.len() != 1 {
            return Err(format!("(vi): class {i} mixes through-block labelings"));
        }
    }
    let index_of = |cls: &Vec<Vec<Vec<u32>>>, t: &Vec<u32>| cls.iter().position(|c| c.contains(t));
    for t in all_words(n, p.k()) {
        for t2 in all_words(n, p.l()) {
            if pair_valid(p, &t, &t2) {
                let (a, b) = (index_of(up, &t), index_of(low, &t2));
                if a != b || a == Some(0) {
                    return Err(format!("(v): valid {t:?} {t2:?} lands in {a:?} and {b:?}"));
                }
            }
        }
    }
    Ok(())
}

/// The fibres of the running partition against `T_i = {(t,t,i)}` and
/// `T'_i = {(t',i,i)}`.
pub fn check_eq1_fibres(n: u32) -> Result<(), String> {
    use easycat::labeling::LabelDecomposition;
    let p = eq1();
    let dec = LabelDecomposition::new(&p, n).map_err(|e| e.to_string())?;
    if dec.r() != n as usize {
        return Err(format!("r = {}", dec.r()));
    }
    for i in 1..=n {
        let upper: BTreeSet<Vec<u32>> = (1..=n).map(|t| vec![t, t, i]).collect();
        let lower: BTreeSet<Vec<u32>> = (1..=n).map(|t| vec![t, i, i]).collect();
        let got_u: BTreeSet<Vec<u32>> = dec
            .enumerate_class(Row::Upper, i as usize)
            .map_err(|e| e.to_string())?
            .into_iter()
            .collect();
        let got_l: BTreeSet<Vec<u32>> = dec
            .enumerate_class(Row::Lower, i as usize)
            .map_err(|e| e.to_string())?
            .into_iter()
            .collect();
        if got_u != upper || got_l != lower {
            return Err(format!("class {i}: {got_u:?} / {got_l:?}"));
        }
    }
    let zero_u: BTreeSet<Vec<u32>> = all_words(n, 3)
        .into_iter()
        .filter(|t| t[0] != t[1])
        .collect();
    let zero_l: BTreeSet<Vec<u32>> = all_words(n, 3)
        .into_iter()
        .filter(|t| t[1] != t[2])
        .collect();
    let got_u: BTreeSet<Vec<u32>> = dec
        .enumerate_class(Row::Upper, 0)
        .map_err(|e| e.to_string())?
        .into_iter()
        .collect();
    let got_l: BTreeSet<Vec<u32>> = dec
        .enumerate_class(Row::Lower, 0)
        .map_err(|e| e.to_string())?
        .into_iter()
        .collect();
    if got_u != zero_u || got_l != zero_l {
        return Err("zero fibres differ".into());
    }
    Ok(())
}

pub fn colours(word: &str) -> Vec<Colour> {
    word.chars()
        .map(|c| Colour::from_symbol(c).unwrap())
        .collect()
}
