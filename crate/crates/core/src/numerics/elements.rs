//! Concrete group elements used as classical shadows: permutation matrices,
//! signed permutations, permutations with a global sign, and planar
//! rotations or reflections.

use std::f64::consts::TAU;

use num_complex::Complex64;
use num_rational::BigRational;
use rand::Rng;
use serde_json::{json, Value};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ElementClass {
    Permutation,
    SignedPermutation,
    GlobalSignPermutation,
    RotationSample,
    Custom,
}

impl ElementClass {
    pub fn name(self) -> &'static str {
        match self {
            ElementClass::Permutation => "permutation",
            ElementClass::SignedPermutation => "signed_permutation",
            ElementClass::GlobalSignPermutation => "global_sign_permutation",
            ElementClass::RotationSample => "rotation_sample",
            ElementClass::Custom => "custom",
        }
    }
}

/// Row-major entries in one of three scalar types.
#[derive(Clone, Debug, PartialEq)]
pub enum Entries {
    Integer(Vec<i64>),
    Rational(Vec<BigRational>),
    Float(Vec<Complex64>),
}

impl Entries {
    fn len(&self) -> usize {
        match self {
            Entries::Integer(v) => v.len(),
            Entries::Rational(v) => v.len(),
            Entries::Float(v) => v.len(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum ElementParams {
    /// One-line notation, 1-based: column `j` has its 1 in row `sigma[j]`.
    Permutation {
        sigma: Vec<usize>,
    },
    /// Column `j` carries the sign `signs[j]`.
    Signed {
        sigma: Vec<usize>,
        signs: Vec<i64>,
    },
    GlobalSign {
        sigma: Vec<usize>,
        sign: i64,
    },
    /// `[[c, -s], [s, c]]`, or `[[c, s], [s, -c]]` for a reflection.
    Rotation {
        angle: f64,
        reflection: bool,
    },
    Custom(Entries),
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConcreteElement {
    n: usize,
    class: ElementClass,
    entries: Entries,
}

fn check_perm(n: usize, sigma: &[usize]) -> Result<()> {
    if sigma.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: sigma.len(),
        });
    }
    let mut seen = vec![false; n];
    for &s in sigma {
        if s == 0 || s > n || seen[s - 1] {
            return Err(Error::OutOfRange(format!(
                "{sigma:?} is not a permutation of 1..={n}"
            )));
        }
        seen[s - 1] = true;
    }
    Ok(())
}

fn check_sign(s: i64) -> Result<()> {
    if s == 1 || s == -1 {
        Ok(())
    } else {
        Err(Error::OutOfRange(format!("sign {s} is not ±1")))
    }
}

fn signed_perm_entries(n: usize, sigma: &[usize], signs: &[i64]) -> Vec<i64> {
    let mut e = vec![0; n * n];
    for j in 0..n {
        e[(sigma[j] - 1) * n + j] = signs[j];
    }
    e
}

pub fn make_element(
    class: ElementClass,
    n: usize,
    params: &ElementParams,
) -> Result<ConcreteElement> {
    let mismatch = || {
        Err(Error::OutOfRange(format!(
            "parameters do not describe a {} element",
            class.name()
        )))
    };
    let entries = match (class, params) {
        (ElementClass::Permutation, ElementParams::Permutation { sigma }) => {
            check_perm(n, sigma)?;
            Entries::Integer(signed_perm_entries(n, sigma, &vec![1; n]))
        }
        (ElementClass::SignedPermutation, ElementParams::Signed { sigma, signs }) => {
            check_perm(n, sigma)?;
            if signs.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: signs.len(),
                });
            }
            signs.iter().try_for_each(|&s| check_sign(s))?;
            Entries::Integer(signed_perm_entries(n, sigma, signs))
        }
        (ElementClass::GlobalSignPermutation, ElementParams::GlobalSign { sigma, sign }) => {
            check_perm(n, sigma)?;
            check_sign(*sign)?;
            Entries::Integer(signed_perm_entries(n, sigma, &vec![*sign; n]))
        }
        (ElementClass::RotationSample, ElementParams::Rotation { angle, reflection }) => {
            if n != 2 {
                return Err(Error::OutOfRange(
                    "rotation samples exist only for N = 2".into(),
                ));
            }
            let (c, s) = (angle.cos(), angle.sin());
            let v = if *reflection {
                [c, s, s, -c]
            } else {
                [c, -s, s, c]
            };
            Entries::Float(v.iter().map(|&x| Complex64::new(x, 0.0)).collect())
        }
        (ElementClass::Custom, ElementParams::Custom(e)) => {
            if e.len() != n * n {
                return Err(Error::DimensionMismatch(format!(
                    "{} entries for an {n}x{n} matrix",
                    e.len()
                )));
            }
            e.clone()
        }
        _ => return mismatch(),
    };
    Ok(ConcreteElement { n, class, entries })
}

impl ConcreteElement {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn class(&self) -> ElementClass {
        self.class
    }

    pub fn entries(&self) -> &Entries {
        &self.entries
    }

    /// Integer entries, if the element has them.
    pub fn integer_entries(&self) -> Option<&[i64]> {
        match &self.entries {
            Entries::Integer(v) => Some(v),
            _ => None,
        }
    }

    pub fn transpose(&self) -> ConcreteElement {
        let n = self.n;
        fn tr<T: Clone>(v: &[T], n: usize) -> Vec<T> {
            (0..n * n).map(|i| v[(i % n) * n + i / n].clone()).collect()
        }
        let entries = match &self.entries {
            Entries::Integer(v) => Entries::Integer(tr(v, n)),
            Entries::Rational(v) => Entries::Rational(tr(v, n)),
            Entries::Float(v) => Entries::Float(tr(v, n)),
        };
        ConcreteElement {
            n,
            class: self.class,
            entries,
        }
    }

    /// The first `d` columns as a row-major `n x d` integer matrix.
    pub fn first_columns(&self, d: usize) -> Result<Vec<i64>> {
        let v = self.integer_entries().ok_or_else(|| {
            Error::OutOfRange("columns are only extracted from integer elements".into())
        })?;
        if d > self.n {
            return Err(Error::OutOfRange(format!("d = {d} > N = {}", self.n)));
        }
        Ok((0..self.n)
            .flat_map(|r| (0..d).map(move |c| v[r * self.n + c]))
            .collect())
    }

    pub fn to_json(&self) -> Value {
        let entries = match &self.entries {
            Entries::Integer(v) => json!(v),
            Entries::Rational(v) => json!(v.iter().map(|x| x.to_string()).collect::<Vec<_>>()),
            Entries::Float(v) => json!(v.iter().map(|x| [x.re, x.im]).collect::<Vec<_>>()),
        };
        json!({"n": self.n, "class": self.class.name(), "entries": entries})
    }
}

/// Row-major integer product `a (n x m) * b (m x d)`.
pub fn int_mat_mul(a: &[i64], b: &[i64], n: usize, m: usize, d: usize) -> Vec<i64> {
    let mut out = vec![0; n * d];
    for i in 0..n {
        for k in 0..m {
            let x = a[i * m + k];
            if x != 0 {
                for j in 0..d {
                    out[i * d + j] += x * b[k * d + j];
                }
            }
        }
    }
    out
}

/// All permutations of `1..=n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (1..=n).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// All sign vectors in `{+1, -1}^n`, `+` before `-`, lexicographic.
pub fn sign_vectors(n: usize) -> Vec<Vec<i64>> {
    (0..1usize << n)
        .map(|m| {
            (0..n)
                .map(|i| if m >> (n - 1 - i) & 1 == 1 { -1 } else { 1 })
                .collect()
        })
        .collect()
}

/// `S_N`.
pub fn all_permutation_elements(n: usize) -> Vec<ConcreteElement> {
    permutations(n)
        .into_iter()
        .map(|sigma| {
            make_element(
                ElementClass::Permutation,
                n,
                &ElementParams::Permutation { sigma },
            )
            .unwrap()
        })
        .collect()
}

/// `H_N`, permutations outermost.
pub fn all_signed_permutation_elements(n: usize) -> Vec<ConcreteElement> {
    let signs = sign_vectors(n);
    permutations(n)
        .into_iter()
        .flat_map(|sigma| {
            signs.iter().map(move |s| {
                make_element(
                    ElementClass::SignedPermutation,
                    n,
                    &ElementParams::Signed {
                        sigma: sigma.clone(),
                        signs: s.clone(),
                    },
                )
                .unwrap()
            })
        })
        .collect()
}

/// `S'_N`: permutations times a global sign, `+` first.
pub fn all_global_sign_elements(n: usize) -> Vec<ConcreteElement> {
    permutations(n)
        .into_iter()
        .flat_map(|sigma| {
            [1, -1].into_iter().map(move |sign| {
                make_element(
                    ElementClass::GlobalSignPermutation,
                    n,
                    &ElementParams::GlobalSign {
                        sigma: sigma.clone(),
                        sign,
                    },
                )
                .unwrap()
            })
        })
        .collect()
}

pub fn random_permutation<R: Rng>(n: usize, rng: &mut R) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut v: Vec<usize> = (1..=n).collect();
    v.shuffle(rng);
    v
}

pub fn sample_permutation<R: Rng>(n: usize, rng: &mut R) -> ConcreteElement {
    let sigma = random_permutation(n, rng);
    make_element(
        ElementClass::Permutation,
        n,
        &ElementParams::Permutation { sigma },
    )
    .unwrap()
}

pub fn sample_signed_permutation<R: Rng>(n: usize, rng: &mut R) -> ConcreteElement {
    let sigma = random_permutation(n, rng);
    let signs = (0..n)
        .map(|_| if rng.gen::<bool>() { 1 } else { -1 })
        .collect();
    make_element(
        ElementClass::SignedPermutation,
        n,
        &ElementParams::Signed { sigma, signs },
    )
    .unwrap()
}

pub fn sample_rotation<R: Rng>(rng: &mut R) -> ConcreteElement {
    let angle = rng.gen::<f64>() * TAU;
    let reflection = rng.gen::<bool>();
    make_element(
        ElementClass::RotationSample,
        2,
        &ElementParams::Rotation { angle, reflection },
    )
    .unwrap()
}
