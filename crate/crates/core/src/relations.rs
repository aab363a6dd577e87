//! Symbolic relations induced by a partition.
//!
//! Three schemes are emitted, each split into the cases (i)-(iii):
//!
//! * quantum group relations on a matrix `u` ([`emit_gr`]),
//! * first-columns relations on `d` column vectors `x` ([`emit_sp_matrix`]),
//!   with the one-vector scheme as `d = 1` ([`emit_sp_vector`]) and the same
//!   scheme over matrix symbols with `d = N` ([`emit_sp_u`]).
//!
//! Relations are stored normalized: `lhs - rhs` is divided by the gcd of its
//! coefficients and signed so that its least monomial has a positive
//! coefficient; positive terms go left, negated negative terms go right.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::labeling::{LabelDecomposition, Words, DEFAULT_LABEL_CAP};
use crate::partition::{Colour, Partition, Row};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum SymbolKind {
    #[serde(rename = "u")]
    U,
    #[serde(rename = "x")]
    X,
}

impl SymbolKind {
    pub fn letter(self) -> &'static str {
        match self {
            SymbolKind::U => "u",
            SymbolKind::X => "x",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol {
    pub kind: SymbolKind,
    pub row: u32,
    pub col: u32,
    pub starred: bool,
}

impl Symbol {
    pub fn new(kind: SymbolKind, row: u32, col: u32, colour: Colour) -> Symbol {
        Symbol {
            kind,
            row,
            col,
            starred: colour == Colour::Black,
        }
    }

    pub fn transpose(self) -> Symbol {
        Symbol {
            row: self.col,
            col: self.row,
            ..self
        }
    }

    fn text(&self, vector: bool) -> String {
        let star = if self.starred { "*" } else { "" };
        if vector {
            format!("{}({}){}", self.kind.letter(), self.row, star)
        } else {
            format!("{}({},{}){}", self.kind.letter(), self.row, self.col, star)
        }
    }

    fn latex(&self, vector: bool) -> String {
        let star = if self.starred { "^{*}" } else { "" };
        if vector {
            format!("{}_{{{}}}{}", self.kind.letter(), self.row, star)
        } else {
            format!(
                "{}_{{{},{}}}{}",
                self.kind.letter(),
                self.row,
                self.col,
                star
            )
        }
    }

    fn json(&self) -> Value {
        json!({"kind": self.kind, "row": self.row, "col": self.col, "star": self.starred})
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text(false))
    }
}

/// A noncommutative product; the empty word is the unit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub Vec<Symbol>);

impl Monomial {
    pub fn unit() -> Monomial {
        Monomial(vec![])
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn transpose(&self) -> Monomial {
        Monomial(self.0.iter().map(|s| s.transpose()).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An integer combination of monomials with no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct FormalSum {
    terms: BTreeMap<Monomial, i64>,
}

impl FormalSum {
    pub fn zero() -> FormalSum {
        FormalSum::default()
    }

    pub fn constant(c: i64) -> FormalSum {
        let mut s = FormalSum::zero();
        s.add_term(Monomial::unit(), c);
        s
    }

    pub fn add_term(&mut self, m: Monomial, c: i64) {
        if c == 0 {
            return;
        }
        match self.terms.entry(m) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, i64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn neg(&self) -> FormalSum {
        FormalSum {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &FormalSum) -> FormalSum {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn transpose(&self) -> FormalSum {
        let mut out = FormalSum::zero();
        for (m, c) in self.terms() {
            out.add_term(m.transpose(), c);
        }
        out
    }

    fn content(&self) -> i64 {
        self.terms.values().fold(0i64, |g, &c| g.gcd(&c))
    }

    fn scaled_div(&self, d: i64) -> FormalSum {
        FormalSum {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c / d)).collect(),
        }
    }

    fn text(&self, vector: bool) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (n, (m, c)) in self.terms().enumerate() {
            let body: String = m.0.iter().map(|s| s.text(vector)).collect();
            let mag = c.abs();
            let term = match (body.is_empty(), mag) {
                (true, _) => mag.to_string(),
                (false, 1) => body,
                (false, _) => format!("{mag} {body}"),
            };
            if n == 0 {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if c < 0 { " - " } else { " + " });
            }
            out.push_str(&term);
        }
        out
    }

    fn latex(&self, vector: bool) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (n, (m, c)) in self.terms().enumerate() {
            let body: String = m.0.iter().map(|s| s.latex(vector)).collect();
            let mag = c.abs();
            let term = match (body.is_empty(), mag) {
                (true, _) => mag.to_string(),
                (false, 1) => body,
                (false, _) => format!("{mag}\\,{body}"),
            };
            if n == 0 {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if c < 0 { " - " } else { " + " });
            }
            out.push_str(&term);
        }
        out
    }

    fn json(&self) -> Value {
        Value::Array(
            self.terms()
                .map(|(m, c)| {
                    json!({"coef": c, "mono": m.0.iter().map(Symbol::json).collect::<Vec<_>>()})
                })
                .collect(),
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Family {
    Gr,
    SpMatrix,
    SpVector,
}

/// Which of the three cases of a scheme produced a relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Case {
    #[serde(rename = "i")]
    Matched,
    #[serde(rename = "ii")]
    InvalidUpper,
    #[serde(rename = "iii")]
    InvalidLower,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Provenance {
    pub partition: Partition,
    pub family: Family,
    pub case: Case,
    pub i: usize,
    pub j: Option<usize>,
    pub gamma: Option<Vec<u32>>,
    pub gamma_prime: Option<Vec<u32>>,
}

impl Provenance {
    fn json(&self) -> Value {
        json!({
            "partition": self.partition.to_json(),
            "family": self.family,
            "case": self.case,
            "i": self.i,
            "j": self.j,
            "gamma": self.gamma,
            "gamma_prime": self.gamma_prime,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    pub lhs: FormalSum,
    pub rhs: FormalSum,
    pub provenance: Provenance,
}

impl Relation {
    /// `lhs - rhs`.
    pub fn difference(&self) -> FormalSum {
        self.lhs.sub(&self.rhs)
    }

    /// The normalized form, or `None` when the relation is trivially true.
    pub fn normalized(&self) -> Option<Relation> {
        let d = self.difference();
        if d.is_zero() {
            return None;
        }
        let g = d.content();
        let mut d = d.scaled_div(g);
        if d.terms().next().is_some_and(|(_, c)| c < 0) {
            d = d.neg();
        }
        let mut lhs = FormalSum::zero();
        let mut rhs = FormalSum::zero();
        for (m, c) in d.terms() {
            if c > 0 {
                lhs.add_term(m.clone(), c);
            } else {
                rhs.add_term(m.clone(), -c);
            }
        }
        Some(Relation {
            lhs,
            rhs,
            provenance: self.provenance.clone(),
        })
    }

    /// Identity of a normalized relation, independent of provenance.
    pub fn key(&self) -> FormalSum {
        self.normalized()
            .map_or_else(FormalSum::zero, |r| r.difference())
    }

    pub fn transpose(&self) -> Relation {
        Relation {
            lhs: self.lhs.transpose(),
            rhs: self.rhs.transpose(),
            provenance: self.provenance.clone(),
        }
    }

    fn vector_style(&self) -> bool {
        self.provenance.family == Family::SpVector
    }

    pub fn to_text(&self) -> String {
        let v = self.vector_style();
        format!("{} = {}", self.lhs.text(v), self.rhs.text(v))
    }

    pub fn to_latex(&self) -> String {
        let v = self.vector_style();
        format!("{} = {}", self.lhs.latex(v), self.rhs.latex(v))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "lhs": self.lhs.json(),
            "rhs": self.rhs.json(),
            "provenance": self.provenance.json(),
        })
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum EmissionMode {
    /// One lexicographically least representative per class pair in case (i).
    #[default]
    Canonical,
    /// Every representative.
    Exhaustive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EmitOptions {
    pub mode: EmissionMode,
    pub label_cap: u128,
}

impl Default for EmitOptions {
    fn default() -> Self {
        EmitOptions {
            mode: EmissionMode::Canonical,
            label_cap: DEFAULT_LABEL_CAP,
        }
    }
}

impl EmitOptions {
    pub fn exhaustive() -> EmitOptions {
        EmitOptions {
            mode: EmissionMode::Exhaustive,
            ..EmitOptions::default()
        }
    }
}

/// Builds `sum_{t in ts} prod_s y(t_s, g_s)^{w_s}`, or with rows and columns
/// swapped when `swap` is set.
fn row_sum(kind: SymbolKind, ts: &[Vec<u32>], g: &[u32], word: &[Colour], swap: bool) -> FormalSum {
    let mut s = FormalSum::zero();
    for t in ts {
        let mono = t
            .iter()
            .zip(g)
            .zip(word)
            .map(|((&a, &b), &c)| {
                if swap {
                    Symbol::new(kind, b, a, c)
                } else {
                    Symbol::new(kind, a, b, c)
                }
            })
            .collect();
        s.add_term(Monomial(mono), 1);
    }
    s
}

struct Classes {
    upper: Vec<Vec<Vec<u32>>>,
    lower: Vec<Vec<Vec<u32>>>,
}

fn all_classes(dec: &LabelDecomposition) -> Result<Classes> {
    let r = dec.r();
    let mut upper = vec![vec![]];
    let mut lower = vec![vec![]];
    for i in 1..=r {
        upper.push(dec.enumerate_class(Row::Upper, i)?);
        lower.push(dec.enumerate_class(Row::Lower, i)?);
    }
    Ok(Classes { upper, lower })
}

/// Groups `[d]^len` by class index `0..=r`.
fn bounded_classes(dec: &LabelDecomposition, side: Row, d: u32) -> Result<Vec<Vec<Vec<u32>>>> {
    let len = dec.partition().colours(side).len();
    let size = crate::labeling::checked_pow(d, len)?;
    if size > dec.cap() {
        return Err(Error::CapExceeded {
            what: "bounded labelings of the row".into(),
            size,
            cap: dec.cap(),
        });
    }
    let mut out = vec![Vec::new(); dec.r() + 1];
    for t in Words::new(d, len) {
        let c = dec.classify_unchecked(side, &t);
        out[c].push(t);
    }
    Ok(out)
}

/// Streams the quantum group relations of `p`, unnormalized and possibly
/// repeated or trivial.
pub fn for_each_gr<F>(p: &Partition, n: u32, opts: EmitOptions, mut f: F) -> Result<()>
where
    F: FnMut(Relation) -> Result<()>,
{
    if n == 0 {
        return Err(Error::OutOfRange("N must be at least 1".into()));
    }
    let dec = LabelDecomposition::new(p, n)?.with_cap(opts.label_cap);
    let cls = all_classes(&dec)?;
    let r = dec.r();
    let (w, w2) = (p.upper_colours(), p.lower_colours());
    let reps = |side: Row, i: usize, all: &[Vec<u32>]| -> Result<Vec<Vec<u32>>> {
        Ok(match opts.mode {
            EmissionMode::Exhaustive => all.to_vec(),
            EmissionMode::Canonical => dec.class_representative(side, i, n)?.into_iter().collect(),
        })
    };
    let prov = |case, i, j, gamma: Option<&Vec<u32>>, gamma_prime: Option<&Vec<u32>>| Provenance {
        partition: p.clone(),
        family: Family::Gr,
        case,
        i,
        j,
        gamma: gamma.cloned(),
        gamma_prime: gamma_prime.cloned(),
    };
    for i in 1..=r {
        for j in 1..=r {
            for g in reps(Row::Upper, j, &cls.upper[j])? {
                let lhs = row_sum(SymbolKind::U, &cls.upper[i], &g, w, false);
                for gp in reps(Row::Lower, i, &cls.lower[i])? {
                    let rhs = row_sum(SymbolKind::U, &cls.lower[j], &gp, w2, true);
                    f(Relation {
                        lhs: lhs.clone(),
                        rhs,
                        provenance: prov(Case::Matched, i, Some(j), Some(&g), Some(&gp)),
                    })?;
                }
            }
        }
    }
    for g in dec.enumerate_class(Row::Upper, 0)? {
        for i in 1..=r {
            f(Relation {
                lhs: row_sum(SymbolKind::U, &cls.upper[i], &g, w, false),
                rhs: FormalSum::zero(),
                provenance: prov(Case::InvalidUpper, i, None, Some(&g), None),
            })?;
        }
    }
    for gp in dec.enumerate_class(Row::Lower, 0)? {
        for j in 1..=r {
            f(Relation {
                lhs: row_sum(SymbolKind::U, &cls.lower[j], &gp, w2, true),
                rhs: FormalSum::zero(),
                provenance: prov(Case::InvalidLower, j, None, None, Some(&gp)),
            })?;
        }
    }
    Ok(())
}

/// Streams the first-columns relations of `p` over `d` columns of symbols of
/// the given kind.
pub fn for_each_sp<F>(
    p: &Partition,
    n: u32,
    d: u32,
    kind: SymbolKind,
    family: Family,
    opts: EmitOptions,
    mut f: F,
) -> Result<()>
where
    F: FnMut(Relation) -> Result<()>,
{
    if n == 0 {
        return Err(Error::OutOfRange("N must be at least 1".into()));
    }
    if d == 0 || d > n {
        return Err(Error::OutOfRange(format!("d = {d} outside 1..={n}")));
    }
    let dec = LabelDecomposition::new(p, n)?.with_cap(opts.label_cap);
    let cls = all_classes(&dec)?;
    let r = dec.r();
    let (w, w2) = (p.upper_colours(), p.lower_colours());
    let up_d = bounded_classes(&dec, Row::Upper, d)?;
    let low_d = bounded_classes(&dec, Row::Lower, d)?;
    let pick = |side: Row, j: usize, all: &[Vec<u32>]| -> Result<Vec<Vec<u32>>> {
        Ok(match opts.mode {
            EmissionMode::Exhaustive => all.to_vec(),
            EmissionMode::Canonical => dec.class_representative(side, j, d)?.into_iter().collect(),
        })
    };
    let prov = |case, i, j, gamma: Option<&Vec<u32>>, gamma_prime: Option<&Vec<u32>>| Provenance {
        partition: p.clone(),
        family,
        case,
        i,
        j,
        gamma: gamma.cloned(),
        gamma_prime: gamma_prime.cloned(),
    };
    for j in 1..=r {
        let gs = pick(Row::Upper, j, &up_d[j])?;
        let gps = pick(Row::Lower, j, &low_d[j])?;
        if gs.is_empty() || gps.is_empty() {
            continue;
        }
        for i in 1..=r {
            for g in &gs {
                let lhs = row_sum(kind, &cls.upper[i], g, w, false);
                for gp in &gps {
                    f(Relation {
                        lhs: lhs.clone(),
                        rhs: row_sum(kind, &cls.lower[i], gp, w2, false),
                        provenance: prov(Case::Matched, i, Some(j), Some(g), Some(gp)),
                    })?;
                }
            }
        }
    }
    for g in &up_d[0] {
        for i in 1..=r {
            f(Relation {
                lhs: row_sum(kind, &cls.upper[i], g, w, false),
                rhs: FormalSum::zero(),
                provenance: prov(Case::InvalidUpper, i, None, Some(g), None),
            })?;
        }
    }
    for gp in &low_d[0] {
        for i in 1..=r {
            f(Relation {
                lhs: row_sum(kind, &cls.lower[i], gp, w2, false),
                rhs: FormalSum::zero(),
                provenance: prov(Case::InvalidLower, i, None, None, Some(gp)),
            })?;
        }
    }
    Ok(())
}

/// Normalizes, drops trivial relations, sorts by provenance and keeps the
/// first relation of every normalized form.
pub fn normalize_set(raw: Vec<Relation>) -> Vec<Relation> {
    let mut rels: Vec<Relation> = raw.iter().filter_map(Relation::normalized).collect();
    rels.sort_by(|a, b| a.provenance.cmp(&b.provenance));
    let mut seen = HashSet::new();
    rels.retain(|r| seen.insert(r.difference()));
    rels
}

fn collect<G>(gen: G) -> Result<Vec<Relation>>
where
    G: FnOnce(&mut dyn FnMut(Relation) -> Result<()>) -> Result<()>,
{
    let mut raw = Vec::new();
    gen(&mut |r| {
        raw.push(r);
        Ok(())
    })?;
    Ok(normalize_set(raw))
}

pub fn emit_gr(p: &Partition, n: u32) -> Result<Vec<Relation>> {
    emit_gr_with(p, n, EmitOptions::default())
}

pub fn emit_gr_with(p: &Partition, n: u32, opts: EmitOptions) -> Result<Vec<Relation>> {
    collect(|f| for_each_gr(p, n, opts, f))
}

/// Every representative `γ ∈ [d]^k`; the column bound keeps this small.
pub fn emit_sp_matrix(p: &Partition, n: u32, d: u32) -> Result<Vec<Relation>> {
    emit_sp_matrix_with(p, n, d, EmitOptions::exhaustive())
}

pub fn emit_sp_matrix_with(
    p: &Partition,
    n: u32,
    d: u32,
    opts: EmitOptions,
) -> Result<Vec<Relation>> {
    collect(|f| for_each_sp(p, n, d, SymbolKind::X, Family::SpMatrix, opts, f))
}

/// The first-columns scheme over matrix symbols with all `N` columns.
pub fn emit_sp_u(p: &Partition, n: u32, opts: EmitOptions) -> Result<Vec<Relation>> {
    collect(|f| for_each_sp(p, n, n, SymbolKind::U, Family::SpMatrix, opts, f))
}

pub fn emit_sp_vector(p: &Partition, n: u32) -> Result<Vec<Relation>> {
    emit_sp_vector_with(p, n, EmitOptions::exhaustive())
}

pub fn emit_sp_vector_with(p: &Partition, n: u32, opts: EmitOptions) -> Result<Vec<Relation>> {
    collect(|f| for_each_sp(p, n, 1, SymbolKind::X, Family::SpVector, opts, f))
}

/// Scalars a relation can be evaluated in. Multiplication is commutative, so
/// evaluation happens in a commutative quotient.
pub trait Scalar: Clone + PartialEq + Zero + One {
    fn conj(&self) -> Self;
    fn from_i64(c: i64) -> Self;
    fn magnitude(&self) -> f64;
}

impl Scalar for i64 {
    fn conj(&self) -> Self {
        *self
    }
    fn from_i64(c: i64) -> Self {
        c
    }
    fn magnitude(&self) -> f64 {
        self.abs() as f64
    }
}

impl Scalar for BigRational {
    fn conj(&self) -> Self {
        self.clone()
    }
    fn from_i64(c: i64) -> Self {
        BigRational::from_integer(BigInt::from(c))
    }
    fn magnitude(&self) -> f64 {
        self.abs().to_f64().unwrap_or(f64::INFINITY)
    }
}

impl Scalar for Complex64 {
    fn conj(&self) -> Self {
        Complex64::conj(self)
    }
    fn from_i64(c: i64) -> Self {
        Complex64::new(c as f64, 0.0)
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
}

pub fn evaluate_sum<S, A>(s: &FormalSum, assign: &A) -> Result<S>
where
    S: Scalar,
    A: Fn(&Symbol) -> Option<S>,
{
    let mut total = S::zero();
    for (m, c) in s.terms() {
        let mut prod = S::from_i64(c);
        for sym in &m.0 {
            let v = assign(sym).ok_or_else(|| Error::MissingSymbol(sym.to_string()))?;
            prod = prod * v;
            if prod.is_zero() {
                break;
            }
        }
        total = total + prod;
    }
    Ok(total)
}

/// `value(lhs) - value(rhs)`.
pub fn evaluate_difference<S, A>(rel: &Relation, assign: &A) -> Result<S>
where
    S: Scalar + std::ops::Sub<Output = S>,
    A: Fn(&Symbol) -> Option<S>,
{
    Ok(evaluate_sum(&rel.lhs, assign)? - evaluate_sum(&rel.rhs, assign)?)
}

/// `|value(lhs) - value(rhs)|`.
pub fn evaluate_relation<S, A>(rel: &Relation, assign: &A) -> Result<f64>
where
    S: Scalar + std::ops::Sub<Output = S>,
    A: Fn(&Symbol) -> Option<S>,
{
    Ok(evaluate_difference(rel, assign)?.magnitude())
}

/// Assigns the entries of a row-major `rows x cols` matrix to the symbols of
/// one kind; starred symbols get the conjugate.
pub fn matrix_assignment<S: Scalar>(
    kind: SymbolKind,
    rows: usize,
    cols: usize,
    entries: Vec<S>,
) -> impl Fn(&Symbol) -> Option<S> {
    move |s: &Symbol| {
        if s.kind != kind || s.row == 0 || s.col == 0 {
            return None;
        }
        let (r, c) = (s.row as usize - 1, s.col as usize - 1);
        if r >= rows || c >= cols {
            return None;
        }
        let v = &entries[r * cols + c];
        Some(if s.starred { v.conj() } else { v.clone() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Colour::*;

    fn x(row: u32, col: u32, starred: bool) -> Symbol {
        Symbol {
            kind: SymbolKind::X,
            row,
            col,
            starred,
        }
    }

    #[test]
    fn one_vector_pair_relation() {
        let cap = Partition::lower_pair(White, Black);
        let rels = emit_sp_vector(&cap, 3).unwrap();
        assert_eq!(rels.len(), 1);
        assert_eq!(rels[0].to_text(), "1 = x(1)x(1)* + x(2)x(2)* + x(3)x(3)*");
        let rels = emit_sp_matrix(&cap, 3, 1).unwrap();
        assert_eq!(
            rels[0].to_text(),
            "1 = x(1,1)x(1,1)* + x(2,1)x(2,1)* + x(3,1)x(3,1)*"
        );
    }

    #[test]
    fn identity_strand_gives_nothing() {
        let id = Partition::identity(White);
        assert!(emit_gr(&id, 2).unwrap().is_empty());
        assert!(emit_gr_with(&id, 3, EmitOptions::exhaustive())
            .unwrap()
            .is_empty());
        assert!(emit_sp_vector(&id, 3).unwrap().is_empty());
    }

    #[test]
    fn normalization_signs_and_gcd() {
        let mut lhs = FormalSum::zero();
        lhs.add_term(Monomial(vec![x(1, 1, false)]), 2);
        let rel = Relation {
            lhs,
            rhs: FormalSum::constant(4),
            provenance: Provenance {
                partition: Partition::empty(),
                family: Family::SpMatrix,
                case: Case::Matched,
                i: 1,
                j: Some(1),
                gamma: None,
                gamma_prime: None,
            },
        };
        let n = rel.normalized().unwrap();
        assert_eq!(n.to_text(), "2 = x(1,1)");
        assert_eq!(n.normalized().unwrap(), n);
    }

    #[test]
    fn add_term_cancels() {
        let mut s = FormalSum::zero();
        let m = Monomial(vec![x(1, 2, true)]);
        s.add_term(m.clone(), 3);
        s.add_term(Monomial::unit(), 1);
        s.add_term(m, -3);
        assert_eq!(s, FormalSum::constant(1));
    }

    #[test]
    fn evaluation_on_basis_vector() {
        let cap = Partition::lower_pair(White, Black);
        let rels = emit_sp_matrix(&cap, 3, 1).unwrap();
        let assign = matrix_assignment(SymbolKind::X, 3, 1, vec![0i64, 1, 0]);
        assert_eq!(evaluate_difference(&rels[0], &assign).unwrap(), 0);
        let bad = matrix_assignment(SymbolKind::X, 3, 1, vec![1i64, 1, 0]);
        assert_eq!(evaluate_relation(&rels[0], &bad).unwrap(), 1.0);
        let missing = matrix_assignment(SymbolKind::X, 2, 1, vec![1i64, 0]);
        assert!(matches!(
            evaluate_relation(&rels[0], &missing),
            Err(Error::MissingSymbol(_))
        ));
    }

    #[test]
    fn rotation_satisfies_white_pair() {
        let cap = Partition::lower_pair(White, White);
        let (c, s) = (0.7f64.cos(), 0.7f64.sin());
        let g = vec![
            Complex64::new(c, 0.0),
            Complex64::new(-s, 0.0),
            Complex64::new(s, 0.0),
            Complex64::new(c, 0.0),
        ];
        let assign = matrix_assignment(SymbolKind::U, 2, 2, g);
        for rel in emit_gr_with(&cap, 2, EmitOptions::exhaustive()).unwrap() {
            assert!(evaluate_relation(&rel, &assign).unwrap() <= 1e-12);
        }
    }

    #[test]
    fn four_block_on_signed_swap() {
        let four: Partition = "- / oA oA *A *A".parse().unwrap();
        let g = vec![0i64, -1, 1, 0];
        let assign = matrix_assignment(SymbolKind::U, 2, 2, g);
        let rels = emit_gr_with(&four, 2, EmitOptions::exhaustive()).unwrap();
        assert!(!rels.is_empty());
        for rel in rels {
            assert_eq!(evaluate_difference(&rel, &assign).unwrap(), 0);
        }
    }

    #[test]
    fn display_is_sorted_by_provenance() {
        let p: Partition = "oA oA *B / *C *B oB".parse().unwrap();
        let rels = emit_sp_matrix_with(&p, 2, 2, EmitOptions::exhaustive()).unwrap();
        let provs: Vec<&Provenance> = rels.iter().map(|r| &r.provenance).collect();
        let mut sorted = provs.clone();
        sorted.sort();
        assert_eq!(provs, sorted);
    }

    #[test]
    fn json_schema_fields() {
        let cap = Partition::lower_pair(White, Black);
        let v = emit_sp_matrix(&cap, 2, 1).unwrap()[0].to_json();
        assert_eq!(v["lhs"][0]["coef"], 1);
        assert_eq!(v["lhs"][0]["mono"], json!([]));
        assert_eq!(
            v["rhs"][0]["mono"][1],
            json!({"kind": "x", "row": 1, "col": 1, "star": true})
        );
        assert_eq!(v["provenance"]["family"], "SpMatrix");
    }
}
