//! Dimension bounds obtained by assuming that `ab` and `ba` are colinear for
//! four pairs of generators.
//!
//! The span of all words of length at most two is modelled as a formal
//! vector space on those words. Known relations and the colinearity
//! hypotheses `ba - λ ab` are imposed, and the dimension of the span of the
//! relevant words modulo them is computed exactly. The hypothesis is tried
//! for several values of `λ`; the reported bound is the largest result.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::Result;

use super::fusion::FusionCase;
use super::matrix::{int, ExactMatrix};

type Letter = (u8, u8);
type Word = Vec<Letter>;

/// A formal linear combination of words.
#[derive(Clone, Debug, Default, PartialEq)]
struct Lin(BTreeMap<Word, BigRational>);

impl Lin {
    fn unit() -> Lin {
        Lin::word(vec![])
    }

    fn word(w: Word) -> Lin {
        let mut m = BTreeMap::new();
        m.insert(w, BigRational::one());
        Lin(m)
    }

    fn letter(i: u8, j: u8) -> Lin {
        Lin::word(vec![(i, j)])
    }

    fn add_scaled(&mut self, other: &Lin, c: &BigRational) {
        for (w, v) in &other.0 {
            let e = self.0.entry(w.clone()).or_insert_with(BigRational::zero);
            *e += v * c;
            if e.is_zero() {
                self.0.remove(w);
            }
        }
    }

    fn plus(mut self, other: &Lin) -> Lin {
        self.add_scaled(other, &BigRational::one());
        self
    }

    fn minus(mut self, other: &Lin) -> Lin {
        self.add_scaled(other, &-BigRational::one());
        self
    }

    fn mul(&self, other: &Lin) -> Lin {
        let mut out = Lin::default();
        for (a, x) in &self.0 {
            for (b, y) in &other.0 {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_scaled(&Lin::word(w), &(x * y));
            }
        }
        out
    }
}

/// `b_ij` written in the letters `b_11, b_12, b_21, b_22`, using that every
/// row and column of the `3 x 3` matrix sums to `1`.
fn b_entry(i: u8, j: u8) -> Lin {
    match (i, j) {
        (1..=2, 1..=2) => Lin::letter(i, j),
        (1..=2, 3) => Lin::unit()
            .minus(&Lin::letter(i, 1))
            .minus(&Lin::letter(i, 2)),
        (3, 1..=2) => Lin::unit()
            .minus(&Lin::letter(1, j))
            .minus(&Lin::letter(2, j)),
        _ => Lin::unit().minus(&b_entry(1, 3)).minus(&b_entry(2, 3)),
    }
}

fn o_entry(i: u8, j: u8) -> Lin {
    Lin::letter(i, j)
}

const LETTERS: [Letter; 4] = [(1, 1), (1, 2), (2, 1), (2, 2)];

/// The four pairs `(a, b)` for which `ab` and `ba` are assumed colinear.
const PAIRS: [(Letter, Letter); 4] = [
    ((1, 1), (2, 1)),
    ((1, 1), (1, 2)),
    ((2, 1), (2, 2)),
    ((1, 2), (2, 2)),
];

fn all_words(max_len: usize) -> Vec<Word> {
    let mut out = vec![vec![]];
    let mut layer: Vec<Word> = vec![vec![]];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                LETTERS.iter().map(move |&l| {
                    let mut v = w.clone();
                    v.push(l);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// The formal space, the known relations, and the words whose span is
/// measured.
struct Setup {
    basis: Vec<Word>,
    relations: Vec<Lin>,
    spanning: Vec<Word>,
}

fn setup(case: FusionCase) -> Setup {
    match case {
        FusionCase::O2Plus => {
            let mut basis = vec![vec![]];
            let quad: Vec<Word> = all_words(2).into_iter().filter(|w| w.len() == 2).collect();
            basis.extend(quad.iter().cloned());
            let mut relations = Vec::new();
            for k1 in 1..=2u8 {
                for k2 in 1..=2u8 {
                    let delta = if k1 == k2 {
                        Lin::unit()
                    } else {
                        Lin::default()
                    };
                    let mut cols = Lin::default();
                    let mut rows = Lin::default();
                    for i in 1..=2u8 {
                        cols = cols.plus(&o_entry(i, k1).mul(&o_entry(i, k2)));
                        rows = rows.plus(&o_entry(k1, i).mul(&o_entry(k2, i)));
                    }
                    relations.push(cols.minus(&delta));
                    relations.push(rows.minus(&delta));
                }
            }
            Setup {
                basis,
                relations,
                spanning: quad,
            }
        }
        FusionCase::B3Plus => {
            let basis = all_words(2);
            let mut col_orth = Lin::default();
            let mut row_orth = Lin::default();
            let mut row1 = Lin::default();
            let mut row2 = Lin::default();
            for i in 1..=3u8 {
                col_orth = col_orth.plus(&b_entry(i, 1).mul(&b_entry(i, 2)));
                row_orth = row_orth.plus(&b_entry(1, i).mul(&b_entry(2, i)));
                row1 = row1.plus(&b_entry(1, i).mul(&b_entry(1, i)));
                row2 = row2.plus(&b_entry(2, i).mul(&b_entry(2, i)));
            }
            Setup {
                spanning: basis.clone(),
                basis,
                relations: vec![
                    col_orth,
                    row_orth,
                    row1.minus(&Lin::unit()),
                    row2.minus(&Lin::unit()),
                ],
            }
        }
    }
}

fn colinearity_relations(lambda: &BigRational) -> Vec<Lin> {
    PAIRS
        .iter()
        .map(|&(a, b)| {
            let mut r = Lin::word(vec![b, a]);
            r.add_scaled(&Lin::word(vec![a, b]), &-lambda.clone());
            r
        })
        .collect()
}

fn to_matrix(rows: &[Lin], basis: &[Word]) -> ExactMatrix {
    let index: BTreeMap<&Word, usize> = basis.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut m = ExactMatrix::zeros(rows.len(), basis.len());
    for (r, lin) in rows.iter().enumerate() {
        for (w, v) in &lin.0 {
            m.set(r, index[w], v.clone());
        }
    }
    m
}

/// Dimension of the span of `setup.spanning` modulo the given relations.
fn span_dim(s: &Setup, relations: &[Lin]) -> Result<usize> {
    let rel = to_matrix(relations, &s.basis);
    let spanning: Vec<Lin> = s.spanning.iter().map(|w| Lin::word(w.clone())).collect();
    let both = ExactMatrix::vconcat(&[&rel, &to_matrix(&spanning, &s.basis)])?;
    Ok(both.rank() - rel.rank())
}

/// The values of `λ` tried for the colinearity hypothesis.
pub fn lambda_samples() -> Vec<BigRational> {
    vec![
        int(1),
        int(-1),
        int(0),
        int(2),
        BigRational::new(BigInt::from(-1), BigInt::from(2)),
    ]
}

#[derive(Clone, Debug, PartialEq)]
pub struct ColinearityBound {
    pub case: FusionCase,
    pub upper_bound: usize,
    pub reference_dim: u64,
    pub without_colinearity: usize,
    pub per_lambda: Vec<(BigRational, usize)>,
}

impl ColinearityBound {
    /// The hypothesis contradicts the reference dimension.
    pub fn contradicts(&self) -> bool {
        (self.upper_bound as u64) < self.reference_dim
    }

    pub fn to_json(&self) -> Value {
        json!({
            "case": self.case.name(),
            "upper_bound": self.upper_bound,
            "reference_dim": self.reference_dim,
            "without_colinearity": self.without_colinearity,
            "per_lambda": self.per_lambda.iter().map(|(l, d)| json!({"lambda": l.to_string(), "bound": d})).collect::<Vec<_>>(),
        })
    }
}

pub fn colinearity_bound(case: FusionCase) -> Result<ColinearityBound> {
    let s = setup(case);
    let per_lambda = lambda_samples()
        .into_iter()
        .map(|l| {
            let mut rels = s.relations.clone();
            rels.extend(colinearity_relations(&l));
            Ok((l, span_dim(&s, &rels)?))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ColinearityBound {
        case,
        upper_bound: per_lambda.iter().map(|(_, d)| *d).max().unwrap_or(0),
        reference_dim: case.lattice()?.coeff_space_dim()?,
        without_colinearity: span_dim(&s, &s.relations)?,
        per_lambda,
    })
}
