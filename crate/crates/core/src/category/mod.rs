//! Bounded closures of generator sets under tensor product, involution,
//! composition and rotation.
//!
//! A closure keeps every partition with at most `max_points` points that can
//! be derived without ever leaving the bound. Membership answers are therefore
//! evidence about the generated category, not proofs of non-membership.

mod presets;

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::partition::{base_partitions, compose, Block, Colour, Partition, Rotation};

pub use presets::{Preset, PRESET_NAMES};

pub const DEFAULT_MEMBER_CAP: usize = 1_000_000;

/// A set of generators, always unioned with the six base partitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    partitions: Vec<Partition>,
    name: Option<String>,
}

impl GeneratorSet {
    pub fn new(parts: impl IntoIterator<Item = Partition>) -> GeneratorSet {
        let set: BTreeSet<Partition> = parts.into_iter().chain(base_partitions()).collect();
        GeneratorSet {
            partitions: set.into_iter().collect(),
            name: None,
        }
    }

    pub fn base() -> GeneratorSet {
        GeneratorSet::new([])
    }

    pub fn with_name(mut self, name: impl Into<String>) -> GeneratorSet {
        self.name = Some(name.into());
        self
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn max_points(&self) -> usize {
        self.partitions
            .iter()
            .map(Partition::points)
            .max()
            .unwrap_or(0)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "partitions": self.partitions.iter().map(Partition::to_json).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(value: &Value) -> Result<GeneratorSet> {
        let list = match value {
            Value::Array(a) => a,
            Value::Object(o) => o
                .get("partitions")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Json("expected a \"partitions\" array".into()))?,
            _ => return Err(Error::Json("expected an array of partitions".into())),
        };
        let parts = list
            .iter()
            .map(Partition::from_json)
            .collect::<Result<Vec<_>>>()?;
        let mut g = GeneratorSet::new(parts);
        if let Some(name) = value.get("name").and_then(Value::as_str) {
            g = g.with_name(name);
        }
        Ok(g)
    }
}

/// How a member was first obtained. Indices refer to [`CategoryClosure::members`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Derivation {
    Base,
    Generator,
    Involution(usize),
    Rotate(usize, Rotation),
    Tensor(usize, usize),
    /// `compose(lower, upper)`: `upper` stacked on top of `lower`.
    Compose {
        upper: usize,
        lower: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    Yes,
    NoWithinBound,
    Unknown,
}

impl Membership {
    pub fn as_str(self) -> &'static str {
        match self {
            Membership::Yes => "yes",
            Membership::NoWithinBound => "no_within_bound",
            Membership::Unknown => "unknown",
        }
    }

    pub fn caveat(self) -> Option<&'static str> {
        match self {
            Membership::Yes => None,
            Membership::NoWithinBound => Some(
                "not derivable within the bound; a derivation through larger intermediate partitions may still exist",
            ),
            Membership::Unknown => Some("the partition has more points than the bound"),
        }
    }
}

impl fmt::Display for Membership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlockVerdict {
    StableUpToBound {
        bound: usize,
    },
    Witness {
        partition: Partition,
        block: Block,
        restricted: Partition,
    },
}

impl BlockVerdict {
    pub fn is_stable(&self) -> bool {
        matches!(self, BlockVerdict::StableUpToBound { .. })
    }

    pub fn to_json(&self) -> Value {
        match self {
            BlockVerdict::StableUpToBound { bound } => {
                json!({"verdict": "stable_up_to_bound", "bound": bound})
            }
            BlockVerdict::Witness {
                partition,
                block,
                restricted,
            } => json!({
                "verdict": "witness",
                "partition": partition.to_json(),
                "block": block.to_string(),
                "restricted": restricted.to_json(),
            }),
        }
    }
}

impl fmt::Display for BlockVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlockVerdict::StableUpToBound { bound } => write!(f, "stable up to {bound} points"),
            BlockVerdict::Witness {
                partition,
                block,
                restricted,
            } => write!(
                f,
                "witness: block {block} of {partition} restricts to {restricted}, which is not a member"
            ),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CategoryClosure {
    generators: GeneratorSet,
    max_points: usize,
    members: Vec<Partition>,
    derivations: Vec<Derivation>,
    index: HashMap<Partition, usize>,
    frontier_complete: bool,
}

pub fn generate_closure(g: &GeneratorSet, max_points: usize) -> Result<CategoryClosure> {
    generate_closure_with_cap(g, max_points, DEFAULT_MEMBER_CAP)
}

struct Saturation {
    bound: usize,
    cap: usize,
    members: Vec<Partition>,
    derivations: Vec<Derivation>,
    index: HashMap<Partition, usize>,
    pending: BTreeSet<(usize, Partition)>,
}

impl Saturation {
    fn offer(&mut self, p: Partition, how: Derivation) -> Result<()> {
        if p.points() > self.bound || self.index.contains_key(&p) {
            return Ok(());
        }
        if self.members.len() >= self.cap {
            return Err(Error::CapExceeded {
                what: "closure members".into(),
                size: self.members.len() as u128 + 1,
                cap: self.cap as u128,
            });
        }
        self.index.insert(p.clone(), self.members.len());
        self.members.push(p.clone());
        self.derivations.push(how);
        self.pending.insert((p.points(), p));
        Ok(())
    }
}

type WordIndex = HashMap<(Vec<Colour>, usize), Vec<usize>>;

pub fn generate_closure_with_cap(
    g: &GeneratorSet,
    max_points: usize,
    cap: usize,
) -> Result<CategoryClosure> {
    if max_points < 2 {
        return Err(Error::OutOfRange("max_points must be at least 2".into()));
    }
    if let Some(p) = g.partitions().iter().find(|p| p.points() > max_points) {
        return Err(Error::OutOfRange(format!(
            "generator {p} has {} points, more than the bound {max_points}",
            p.points()
        )));
    }
    let base = base_partitions();
    let mut s = Saturation {
        bound: max_points,
        cap,
        members: vec![],
        derivations: vec![],
        index: HashMap::new(),
        pending: BTreeSet::new(),
    };
    for p in g.partitions() {
        let how = if base.contains(p) {
            Derivation::Base
        } else {
            Derivation::Generator
        };
        s.offer(p.clone(), how)?;
    }
    // processed members keyed by (lower word, k) and (upper word, l)
    let mut by_lower: WordIndex = HashMap::new();
    let mut by_upper: WordIndex = HashMap::new();
    let mut by_points: Vec<Vec<usize>> = vec![vec![]; max_points + 1];
    while let Some((_, x)) = s.pending.pop_first() {
        let xi = s.index[&x];
        by_lower
            .entry((x.lower_colours().to_vec(), x.k()))
            .or_default()
            .push(xi);
        by_upper
            .entry((x.upper_colours().to_vec(), x.l()))
            .or_default()
            .push(xi);
        by_points[x.points()].push(xi);

        s.offer(x.involution(), Derivation::Involution(xi))?;
        for r in Rotation::ALL {
            if let Ok(y) = x.rotate(r) {
                s.offer(y, Derivation::Rotate(xi, r))?;
            }
        }
        for yi in by_points[..=max_points - x.points()].concat() {
            let y = s.members[yi].clone();
            s.offer(x.tensor(&y), Derivation::Tensor(xi, yi))?;
            s.offer(y.tensor(&x), Derivation::Tensor(yi, xi))?;
        }
        // x on top
        for ql in 0..=max_points.saturating_sub(x.k()) {
            let key = (x.lower_colours().to_vec(), ql);
            for qi in by_upper.get(&key).cloned().unwrap_or_default() {
                let (c, _) = compose(&s.members[qi], &x)?;
                s.offer(
                    c,
                    Derivation::Compose {
                        upper: xi,
                        lower: qi,
                    },
                )?;
            }
        }
        // x below
        for pk in 0..=max_points.saturating_sub(x.l()) {
            let key = (x.upper_colours().to_vec(), pk);
            for pi in by_lower.get(&key).cloned().unwrap_or_default() {
                let (c, _) = compose(&x, &s.members[pi])?;
                s.offer(
                    c,
                    Derivation::Compose {
                        upper: pi,
                        lower: xi,
                    },
                )?;
            }
        }
    }

    let mut order: Vec<usize> = (0..s.members.len()).collect();
    order.sort_by(|&a, &b| {
        let (p, q) = (&s.members[a], &s.members[b]);
        (p.points(), p).cmp(&(q.points(), q))
    });
    let mut remap = vec![0; order.len()];
    for (new, &old) in order.iter().enumerate() {
        remap[old] = new;
    }
    let members: Vec<Partition> = order.iter().map(|&i| s.members[i].clone()).collect();
    let derivations = order
        .iter()
        .map(|&i| match s.derivations[i] {
            Derivation::Involution(a) => Derivation::Involution(remap[a]),
            Derivation::Rotate(a, r) => Derivation::Rotate(remap[a], r),
            Derivation::Tensor(a, b) => Derivation::Tensor(remap[a], remap[b]),
            Derivation::Compose { upper, lower } => Derivation::Compose {
                upper: remap[upper],
                lower: remap[lower],
            },
            d => d,
        })
        .collect();
    let index = members
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();
    Ok(CategoryClosure {
        generators: g.clone(),
        max_points,
        members,
        derivations,
        index,
        frontier_complete: true,
    })
}

impl CategoryClosure {
    pub fn generators(&self) -> &GeneratorSet {
        &self.generators
    }

    pub fn max_points(&self) -> usize {
        self.max_points
    }

    pub fn frontier_complete(&self) -> bool {
        self.frontier_complete
    }

    /// Members sorted by point count, then canonical order.
    pub fn members(&self) -> &[Partition] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn derivation(&self, i: usize) -> Derivation {
        self.derivations[i]
    }

    /// Members with the given upper and lower words.
    pub fn members_between<'a>(
        &'a self,
        upper: &'a [Colour],
        lower: &'a [Colour],
    ) -> impl Iterator<Item = &'a Partition> + 'a {
        self.members
            .iter()
            .filter(move |p| p.upper_colours() == upper && p.lower_colours() == lower)
    }

    pub fn contains(&self, p: &Partition) -> Membership {
        if p.points() > self.max_points {
            Membership::Unknown
        } else if self.index.contains_key(p) {
            Membership::Yes
        } else if self.frontier_complete {
            Membership::NoWithinBound
        } else {
            Membership::Unknown
        }
    }

    /// Rebuilds member `i` from its derivation tree using only the generators
    /// and the partition operations.
    pub fn replay(&self, i: usize) -> Result<Partition> {
        let mut memo: HashMap<usize, Partition> = HashMap::new();
        self.replay_memo(i, &mut memo)
    }

    fn replay_memo(&self, i: usize, memo: &mut HashMap<usize, Partition>) -> Result<Partition> {
        if let Some(p) = memo.get(&i) {
            return Ok(p.clone());
        }
        let p = match self.derivations[i] {
            Derivation::Base => base_partitions()
                .into_iter()
                .find(|b| *b == self.members[i])
                .ok_or_else(|| Error::OutOfRange("base derivation of a non-base member".into()))?,
            Derivation::Generator => self
                .generators
                .partitions()
                .iter()
                .find(|g| **g == self.members[i])
                .cloned()
                .ok_or_else(|| {
                    Error::OutOfRange("generator derivation of a non-generator".into())
                })?,
            Derivation::Involution(a) => self.replay_memo(a, memo)?.involution(),
            Derivation::Rotate(a, r) => self.replay_memo(a, memo)?.rotate(r)?,
            Derivation::Tensor(a, b) => {
                let x = self.replay_memo(a, memo)?;
                x.tensor(&self.replay_memo(b, memo)?)
            }
            Derivation::Compose { upper, lower } => {
                let p = self.replay_memo(upper, memo)?;
                compose(&self.replay_memo(lower, memo)?, &p)?.0
            }
        };
        memo.insert(i, p.clone());
        Ok(p)
    }

    /// The first member, in member order, having a block whose restriction
    /// is not a member.
    pub fn blockstability(&self) -> BlockVerdict {
        for p in &self.members {
            for b in p.blocks() {
                let restricted = p
                    .block_restrict(&b)
                    .expect("blocks of p restrict to partitions");
                if self.contains(&restricted) != Membership::Yes {
                    return BlockVerdict::Witness {
                        partition: p.clone(),
                        block: b,
                        restricted,
                    };
                }
            }
        }
        BlockVerdict::StableUpToBound {
            bound: self.max_points,
        }
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.members.iter().map(Partition::to_json).collect())
    }
}

pub fn is_blockstable_up_to(g: &GeneratorSet, max_points: usize) -> Result<BlockVerdict> {
    Ok(generate_closure(g, max_points)?.blockstability())
}
