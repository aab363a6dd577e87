//! Projective partitions over a fixed word, their dominance order, and the
//! rank recursion `rank(P_p) = N^tb(p) - sum_{q < p} rank(P_q)`.

use std::collections::HashMap;
use std::fmt;

use serde_json::{json, Value};

use crate::category::{generate_closure, CategoryClosure, GeneratorSet};
use crate::error::{Error, Result};
use crate::partition::{compose, Colour, Partition};

use super::matrix::{subspace_join_rank, ExactMatrix};
use super::tp::tp_matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FusionCase {
    /// Non-crossing partitions with blocks of size at most two, `N = 3`.
    B3Plus,
    /// Non-crossing pairings, `N = 2`.
    O2Plus,
}

impl FusionCase {
    pub const ALL: [FusionCase; 2] = [FusionCase::B3Plus, FusionCase::O2Plus];

    pub fn name(self) -> &'static str {
        match self {
            FusionCase::B3Plus => "b3plus",
            FusionCase::O2Plus => "o2plus",
        }
    }

    pub fn parse(s: &str) -> Result<FusionCase> {
        match s.to_ascii_lowercase().as_str() {
            "b3plus" => Ok(FusionCase::B3Plus),
            "o2plus" => Ok(FusionCase::O2Plus),
            _ => Err(Error::OutOfRange(format!("unknown fusion case '{s}'"))),
        }
    }

    pub fn n(self) -> u32 {
        match self {
            FusionCase::B3Plus => 3,
            FusionCase::O2Plus => 2,
        }
    }

    pub fn expected_dim(self) -> u64 {
        match self {
            FusionCase::B3Plus => 14,
            FusionCase::O2Plus => 10,
        }
    }

    /// Ranks of the projections, by node tag.
    pub fn expected_ranks(self) -> &'static [(&'static str, u64)] {
        match self {
            FusionCase::B3Plus => &[("||", 3), ("s|", 2), ("|s", 2), ("ss", 1), ("⊓⊔", 1)],
            FusionCase::O2Plus => &[("||", 3), ("⊓⊔", 1)],
        }
    }

    /// Dimension bound forced by a colinearity between distinct generators.
    pub fn expected_colinearity_bound(self) -> usize {
        match self {
            FusionCase::B3Plus => 13,
            FusionCase::O2Plus => 8,
        }
    }

    pub fn generators(self) -> GeneratorSet {
        let pair = Partition::lower_pair(Colour::White, Colour::White);
        match self {
            FusionCase::B3Plus => {
                GeneratorSet::new([Partition::singleton(Colour::White), pair]).with_name("B3+")
            }
            FusionCase::O2Plus => GeneratorSet::new([pair]).with_name("O2+"),
        }
    }

    pub fn word(self) -> Vec<Colour> {
        vec![Colour::White, Colour::White]
    }

    pub fn closure(self) -> Result<CategoryClosure> {
        generate_closure(&self.generators(), 2 * self.word().len())
    }

    pub fn lattice(self) -> Result<ProjectiveLattice> {
        projective_lattice(&self.closure()?, &self.word(), self.n())
    }
}

/// Short names for the projective partitions over two white points.
pub fn node_tag(p: &Partition) -> String {
    const TAGS: [(&str, &str); 5] = [
        ("oA oB / oA oB", "||"),
        ("oA oB / oC oB", "s|"),
        ("oA oB / oA oC", "|s"),
        ("oA oB / oC oD", "ss"),
        ("oA oA / oB oB", "⊓⊔"),
    ];
    let text = p.to_text();
    TAGS.iter()
        .find(|(t, _)| *t == text)
        .map_or(text, |(_, tag)| tag.to_string())
}

#[derive(Clone, Debug)]
pub struct ProjectiveLattice {
    word: Vec<Colour>,
    n: u32,
    nodes: Vec<Partition>,
    /// `below[q][p]` iff `q ⪯ p`.
    below: Vec<Vec<bool>>,
    /// Nodes whose projections are equivalent inside the category.
    classes: Vec<Vec<usize>>,
}

fn is_projective(p: &Partition) -> Result<bool> {
    Ok(*p == p.involution() && compose(p, p)?.0 == *p)
}

pub fn projective_lattice(
    c: &CategoryClosure,
    word: &[Colour],
    n: u32,
) -> Result<ProjectiveLattice> {
    if c.max_points() < 2 * word.len() {
        return Err(Error::OutOfRange(format!(
            "closure bound {} is below 2|word| = {}",
            c.max_points(),
            2 * word.len()
        )));
    }
    let mut nodes = Vec::new();
    for p in c.members_between(word, word) {
        if is_projective(p)? {
            nodes.push(p.clone());
        }
    }
    let m = nodes.len();
    let mut below = vec![vec![false; m]; m];
    for (qi, q) in nodes.iter().enumerate() {
        for (pi, p) in nodes.iter().enumerate() {
            let one = compose(q, p)?.0 == *q;
            let other = compose(p, q)?.0 == *q;
            if one != other {
                return Err(Error::Lattice(format!(
                    "dominance of {q} under {p} depends on the composition side"
                )));
            }
            below[qi][pi] = one;
        }
    }
    for a in 0..m {
        if !below[a][a] {
            return Err(Error::Lattice(format!("{} is not below itself", nodes[a])));
        }
        for b in 0..m {
            if a != b && below[a][b] && below[b][a] {
                return Err(Error::Lattice(format!(
                    "{} and {} dominate each other",
                    nodes[a], nodes[b]
                )));
            }
            for x in 0..m {
                if below[a][b] && below[b][x] && !below[a][x] {
                    return Err(Error::Lattice("dominance is not transitive".into()));
                }
            }
            if below[a][b] && nodes[a].tb() > nodes[b].tb() {
                return Err(Error::Lattice(format!(
                    "{} lies below {} but has more through-blocks",
                    nodes[a], nodes[b]
                )));
            }
        }
    }
    // p ~ q iff r* r = p and r r* = q for some member r of P(word, word)
    let mut class_of: Vec<usize> = (0..m).collect();
    fn root(c: &mut [usize], mut x: usize) -> usize {
        while c[x] != x {
            x = c[x];
        }
        x
    }
    let position: HashMap<&Partition, usize> =
        nodes.iter().enumerate().map(|(i, p)| (p, i)).collect();
    for r in c.members_between(word, word) {
        let rs = r.involution();
        let left = compose(r, &rs)?.0;
        let right = compose(&rs, r)?.0;
        if let (Some(&a), Some(&b)) = (position.get(&left), position.get(&right)) {
            let (ra, rb) = (root(&mut class_of, a), root(&mut class_of, b));
            if ra != rb {
                class_of[ra.max(rb)] = ra.min(rb);
            }
        }
    }
    let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
    for i in 0..m {
        let r = root(&mut class_of, i);
        groups.entry(r).or_default().push(i);
    }
    let mut classes: Vec<Vec<usize>> = groups.into_values().collect();
    classes.sort();
    Ok(ProjectiveLattice {
        word: word.to_vec(),
        n,
        nodes,
        below,
        classes,
    })
}

impl ProjectiveLattice {
    pub fn word(&self) -> &[Colour] {
        &self.word
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn nodes(&self) -> &[Partition] {
        &self.nodes
    }

    pub fn node_index(&self, p: &Partition) -> Option<usize> {
        self.nodes.iter().position(|q| q == p)
    }

    pub fn is_below(&self, q: usize, p: usize) -> bool {
        self.below[q][p]
    }

    /// Strict minorants of node `p`.
    pub fn strictly_below(&self, p: usize) -> Vec<usize> {
        (0..self.nodes.len())
            .filter(|&q| q != p && self.below[q][p])
            .collect()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    /// All `rank(P_p)`, in node order.
    pub fn ranks(&self) -> Result<Vec<u64>> {
        let m = self.nodes.len();
        let mut order: Vec<usize> = (0..m).collect();
        order.sort_by_key(|&p| self.strictly_below(p).len());
        let mut rank: Vec<Option<i128>> = vec![None; m];
        for &p in &order {
            let mut v = (self.n as i128).pow(self.nodes[p].tb() as u32);
            for q in self.strictly_below(p) {
                v -= rank[q]
                    .ok_or_else(|| Error::Lattice("minorant ranked after its majorant".into()))?;
            }
            if v < 0 {
                return Err(Error::Lattice(format!(
                    "negative rank {v} at {}",
                    self.nodes[p]
                )));
            }
            rank[p] = Some(v);
        }
        Ok(rank.into_iter().map(|r| r.unwrap() as u64).collect())
    }

    pub fn rank_pp(&self, p: usize) -> Result<u64> {
        if p >= self.nodes.len() {
            return Err(Error::OutOfRange(format!("node {p} does not exist")));
        }
        Ok(self.ranks()?[p])
    }

    /// Sum of `rank(P_p)^2` over classes of equivalent projections.
    pub fn coeff_space_dim(&self) -> Result<u64> {
        let ranks = self.ranks()?;
        let mut dim = 0;
        for class in &self.classes {
            let r = ranks[class[0]];
            if class.iter().any(|&i| ranks[i] != r) {
                return Err(Error::Lattice(
                    "equivalent projections with different ranks".into(),
                ));
            }
            dim += r * r;
        }
        Ok(dim)
    }

    /// `rank(P_p)` recomputed as `rank(T_p) - dim(join of im T_q, q < p)`,
    /// after checking that every `im T_q` lies in `im T_p`.
    pub fn oracle_rank(&self, p: usize) -> Result<OracleCheck> {
        let tp = tp_matrix(&self.nodes[p], self.n)?.to_dense()?;
        let rank_tp = tp.rank();
        let minor: Vec<ExactMatrix> = self
            .strictly_below(p)
            .into_iter()
            .map(|q| tp_matrix(&self.nodes[q], self.n)?.to_dense())
            .collect::<Result<_>>()?;
        let refs: Vec<&ExactMatrix> = minor.iter().collect();
        let join = if refs.is_empty() {
            0
        } else {
            subspace_join_rank(&refs)?
        };
        let mut with_p = vec![&tp];
        with_p.extend(refs.iter().copied());
        let contained = subspace_join_rank(&with_p)? == rank_tp;
        Ok(OracleCheck {
            rank_tp,
            join,
            contained,
            value: rank_tp as i64 - join as i64,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleCheck {
    pub rank_tp: usize,
    pub join: usize,
    pub contained: bool,
    pub value: i64,
}

/// Everything the `fusion` report shows for one case.
#[derive(Clone, Debug)]
pub struct FusionReport {
    pub case: FusionCase,
    pub nodes: Vec<String>,
    pub below: Vec<Vec<String>>,
    pub ranks: Vec<u64>,
    pub oracle: Vec<OracleCheck>,
    pub classes: Vec<Vec<String>>,
    pub dim: u64,
}

pub fn fusion_report(case: FusionCase) -> Result<FusionReport> {
    let lat = case.lattice()?;
    let ranks = lat.ranks()?;
    let tags: Vec<String> = lat.nodes().iter().map(node_tag).collect();
    let mut order: Vec<usize> = (0..tags.len()).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(lat.nodes()[i].tb()), i));
    let oracle = order
        .iter()
        .map(|&i| lat.oracle_rank(i))
        .collect::<Result<Vec<_>>>()?;
    Ok(FusionReport {
        case,
        nodes: order.iter().map(|&i| tags[i].clone()).collect(),
        below: order
            .iter()
            .map(|&i| {
                lat.strictly_below(i)
                    .iter()
                    .map(|&q| tags[q].clone())
                    .collect()
            })
            .collect(),
        ranks: order.iter().map(|&i| ranks[i]).collect(),
        oracle,
        classes: lat
            .classes()
            .iter()
            .map(|c| c.iter().map(|&i| tags[i].clone()).collect())
            .collect(),
        dim: lat.coeff_space_dim()?,
    })
}

impl FusionReport {
    pub fn rank_of(&self, tag: &str) -> Option<u64> {
        self.nodes
            .iter()
            .position(|t| t == tag)
            .map(|i| self.ranks[i])
    }

    pub fn dim_matches(&self) -> bool {
        self.dim == self.case.expected_dim()
    }

    pub fn oracle_agrees(&self) -> bool {
        self.oracle
            .iter()
            .zip(&self.ranks)
            .all(|(o, &r)| o.contained && o.value == r as i64)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "case": self.case.name(),
            "nodes": self.nodes.iter().enumerate().map(|(i, t)| json!({
                "node": t,
                "strictly_below": self.below[i],
                "rank": self.ranks[i],
                "oracle": {
                    "rank_tp": self.oracle[i].rank_tp,
                    "join": self.oracle[i].join,
                    "contained": self.oracle[i].contained,
                    "value": self.oracle[i].value,
                },
            })).collect::<Vec<_>>(),
            "classes": self.classes,
            "dim": self.dim,
            "expected": self.case.expected_dim(),
            "match": self.dim_matches(),
        })
    }
}

impl fmt::Display for FusionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "case {} (N = {})", self.case.name(), self.case.n())?;
        writeln!(
            f,
            "{:<6} {:<18} {:>5} {:>8} {:>5} {:>9}",
            "node", "strictly below", "rank", "rank T_p", "join", "contained"
        )?;
        for i in 0..self.nodes.len() {
            let below = if self.below[i].is_empty() {
                "-".to_string()
            } else {
                self.below[i].join(" ")
            };
            let o = &self.oracle[i];
            writeln!(
                f,
                "{:<6} {:<18} {:>5} {:>8} {:>5} {:>9}",
                self.nodes[i], below, self.ranks[i], o.rank_tp, o.join, o.contained
            )?;
        }
        let classes: Vec<String> = self
            .classes
            .iter()
            .map(|c| format!("{{{}}}", c.join(",")))
            .collect();
        writeln!(f, "equivalence classes: {}", classes.join(" "))?;
        write!(
            f,
            "dim = {} (expected {}) {}",
            self.dim,
            self.case.expected_dim(),
            if self.dim_matches() { "OK" } else { "MISMATCH" }
        )
    }
}
