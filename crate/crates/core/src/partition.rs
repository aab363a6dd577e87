//! Two-coloured set partitions and the diagram calculus on them.
//!
//! A partition in `P(k, l)` has `k` upper and `l` lower points, each coloured
//! white (`o`) or black (`*`). Internally every point carries a block label;
//! points are ordered `U1 < .. < Uk < L1 < .. < Ll` and labels are renumbered
//! by first occurrence, which makes structural equality the same as equality
//! of partitions.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Colour {
    White,
    Black,
}

impl Colour {
    pub fn flip(self) -> Colour {
        match self {
            Colour::White => Colour::Black,
            Colour::Black => Colour::White,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Colour::White => 'o',
            Colour::Black => '*',
        }
    }

    pub fn from_symbol(c: char) -> Option<Colour> {
        match c {
            'o' => Some(Colour::White),
            '*' => Some(Colour::Black),
            _ => None,
        }
    }
}

impl fmt::Display for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Formats a colour word such as `(o,*,o)`.
pub fn word_string(word: &[Colour]) -> String {
    let inner: Vec<String> = word.iter().map(|c| c.to_string()).collect();
    format!("({})", inner.join(","))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Row {
    Upper,
    Lower,
}

impl Row {
    pub fn name(self) -> &'static str {
        match self {
            Row::Upper => "upper",
            Row::Lower => "lower",
        }
    }
}

/// One block, given by its 0-based upper and lower point indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Block {
    pub upper: Vec<usize>,
    pub lower: Vec<usize>,
}

impl Block {
    pub fn is_through(&self) -> bool {
        !self.upper.is_empty() && !self.lower.is_empty()
    }

    pub fn size(&self) -> usize {
        self.upper.len() + self.lower.len()
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pts: Vec<String> = self
            .upper
            .iter()
            .map(|i| format!("U{}", i + 1))
            .chain(self.lower.iter().map(|i| format!("L{}", i + 1)))
            .collect();
        write!(f, "{{{}}}", pts.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rotation {
    UpperLeftDown,
    LowerLeftUp,
    UpperRightDown,
    LowerRightUp,
}

impl Rotation {
    pub const ALL: [Rotation; 4] = [
        Rotation::UpperLeftDown,
        Rotation::LowerLeftUp,
        Rotation::UpperRightDown,
        Rotation::LowerRightUp,
    ];

    pub fn inverse(self) -> Rotation {
        match self {
            Rotation::UpperLeftDown => Rotation::LowerLeftUp,
            Rotation::LowerLeftUp => Rotation::UpperLeftDown,
            Rotation::UpperRightDown => Rotation::LowerRightUp,
            Rotation::LowerRightUp => Rotation::UpperRightDown,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Rotation::UpperLeftDown => "upper-left-down",
            Rotation::LowerLeftUp => "lower-left-up",
            Rotation::UpperRightDown => "upper-right-down",
            Rotation::LowerRightUp => "lower-right-up",
        }
    }
}

impl FromStr for Rotation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Rotation::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::OutOfRange(format!("unknown rotation '{s}'")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    upper: Vec<Colour>,
    lower: Vec<Colour>,
    labels: Vec<usize>,
}

fn canonical_labels(raw: &[usize]) -> Vec<usize> {
    let mut map = HashMap::new();
    raw.iter()
        .map(|&x| {
            let next = map.len();
            *map.entry(x).or_insert(next)
        })
        .collect()
}

impl Partition {
    /// Builds a partition from colours and one arbitrary block label per point
    /// (upper points first, then lower points).
    pub fn new(upper: Vec<Colour>, lower: Vec<Colour>, labels: &[usize]) -> Result<Partition> {
        if labels.len() != upper.len() + lower.len() {
            return Err(Error::LengthMismatch {
                expected: upper.len() + lower.len(),
                got: labels.len(),
            });
        }
        Ok(Partition {
            upper,
            lower,
            labels: canonical_labels(labels),
        })
    }

    fn from_parts(upper: Vec<Colour>, lower: Vec<Colour>, labels: Vec<usize>) -> Partition {
        debug_assert_eq!(labels.len(), upper.len() + lower.len());
        Partition {
            upper,
            lower,
            labels: canonical_labels(&labels),
        }
    }

    pub fn empty() -> Partition {
        Partition::default()
    }

    pub fn identity(c: Colour) -> Partition {
        Partition::from_parts(vec![c], vec![c], vec![0, 0])
    }

    /// The pair partition on two lower points (a cap).
    pub fn lower_pair(a: Colour, b: Colour) -> Partition {
        Partition::from_parts(vec![], vec![a, b], vec![0, 0])
    }

    /// The pair partition on two upper points (a cup).
    pub fn upper_pair(a: Colour, b: Colour) -> Partition {
        Partition::from_parts(vec![a, b], vec![], vec![0, 0])
    }

    /// A single lower point forming its own block.
    pub fn singleton(c: Colour) -> Partition {
        Partition::from_parts(vec![], vec![c], vec![0])
    }

    /// The one-block partition on the given lower colours.
    pub fn one_block(colours: &[Colour]) -> Partition {
        Partition::from_parts(vec![], colours.to_vec(), vec![0; colours.len()])
    }

    /// A partition with no upper points.
    pub fn lower_row(colours: &[Colour], labels: &[usize]) -> Result<Partition> {
        Partition::new(vec![], colours.to_vec(), labels)
    }

    pub fn upper_colours(&self) -> &[Colour] {
        &self.upper
    }

    pub fn lower_colours(&self) -> &[Colour] {
        &self.lower
    }

    pub fn colours(&self, row: Row) -> &[Colour] {
        match row {
            Row::Upper => &self.upper,
            Row::Lower => &self.lower,
        }
    }

    pub fn k(&self) -> usize {
        self.upper.len()
    }

    pub fn l(&self) -> usize {
        self.lower.len()
    }

    pub fn points(&self) -> usize {
        self.labels.len()
    }

    /// Canonical block labels of all points, upper row first.
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn row_labels(&self, row: Row) -> &[usize] {
        match row {
            Row::Upper => &self.labels[..self.k()],
            Row::Lower => &self.labels[self.k()..],
        }
    }

    pub fn num_blocks(&self) -> usize {
        self.labels.iter().max().map_or(0, |m| m + 1)
    }

    /// Blocks in canonical order (by minimal point).
    pub fn blocks(&self) -> Vec<Block> {
        let mut blocks = vec![
            Block {
                upper: vec![],
                lower: vec![]
            };
            self.num_blocks()
        ];
        for (i, &b) in self.row_labels(Row::Upper).iter().enumerate() {
            blocks[b].upper.push(i);
        }
        for (i, &b) in self.row_labels(Row::Lower).iter().enumerate() {
            blocks[b].lower.push(i);
        }
        blocks
    }

    /// Labels of the through-blocks, sorted by minimal point.
    pub fn through_blocks(&self) -> Vec<usize> {
        let mut up = vec![false; self.num_blocks()];
        let mut down = vec![false; self.num_blocks()];
        for &b in self.row_labels(Row::Upper) {
            up[b] = true;
        }
        for &b in self.row_labels(Row::Lower) {
            down[b] = true;
        }
        (0..self.num_blocks())
            .filter(|&b| up[b] && down[b])
            .collect()
    }

    pub fn tb(&self) -> usize {
        self.through_blocks().len()
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.num_blocks()];
        for &b in &self.labels {
            sizes[b] += 1;
        }
        sizes
    }

    pub fn has_even_blocks(&self) -> bool {
        self.block_sizes().iter().all(|s| s % 2 == 0)
    }

    pub fn tensor(&self, other: &Partition) -> Partition {
        let off = self.num_blocks();
        let mut upper = self.upper.clone();
        upper.extend_from_slice(&other.upper);
        let mut lower = self.lower.clone();
        lower.extend_from_slice(&other.lower);
        let mut labels = Vec::with_capacity(self.points() + other.points());
        labels.extend_from_slice(self.row_labels(Row::Upper));
        labels.extend(other.row_labels(Row::Upper).iter().map(|b| b + off));
        labels.extend_from_slice(self.row_labels(Row::Lower));
        labels.extend(other.row_labels(Row::Lower).iter().map(|b| b + off));
        Partition::from_parts(upper, lower, labels)
    }

    pub fn involution(&self) -> Partition {
        let mut labels = self.row_labels(Row::Lower).to_vec();
        labels.extend_from_slice(self.row_labels(Row::Upper));
        Partition::from_parts(self.lower.clone(), self.upper.clone(), labels)
    }

    /// Stacks `q` below `self` and returns the composite together with the
    /// number of closed components that lived only in the middle row.
    pub fn compose_below(&self, q: &Partition) -> Result<(Partition, usize)> {
        compose(q, self)
    }

    pub fn rotate(&self, which: Rotation) -> Result<Partition> {
        let k = self.k();
        let l = self.l();
        let up = self.row_labels(Row::Upper);
        let low = self.row_labels(Row::Lower);
        let (upper, lower, labels) = match which {
            Rotation::UpperLeftDown => {
                if k == 0 {
                    return Err(Error::EmptyRow("upper"));
                }
                let mut lower = vec![self.upper[0].flip()];
                lower.extend_from_slice(&self.lower);
                let mut labels = up[1..].to_vec();
                labels.push(up[0]);
                labels.extend_from_slice(low);
                (self.upper[1..].to_vec(), lower, labels)
            }
            Rotation::LowerLeftUp => {
                if l == 0 {
                    return Err(Error::EmptyRow("lower"));
                }
                let mut upper = vec![self.lower[0].flip()];
                upper.extend_from_slice(&self.upper);
                let mut labels = vec![low[0]];
                labels.extend_from_slice(up);
                labels.extend_from_slice(&low[1..]);
                (upper, self.lower[1..].to_vec(), labels)
            }
            Rotation::UpperRightDown => {
                if k == 0 {
                    return Err(Error::EmptyRow("upper"));
                }
                let mut lower = self.lower.clone();
                lower.push(self.upper[k - 1].flip());
                let mut labels = up[..k - 1].to_vec();
                labels.extend_from_slice(low);
                labels.push(up[k - 1]);
                (self.upper[..k - 1].to_vec(), lower, labels)
            }
            Rotation::LowerRightUp => {
                if l == 0 {
                    return Err(Error::EmptyRow("lower"));
                }
                let mut upper = self.upper.clone();
                upper.push(self.lower[l - 1].flip());
                let mut labels = up.to_vec();
                labels.push(low[l - 1]);
                labels.extend_from_slice(&low[..l - 1]);
                (upper, self.lower[..l - 1].to_vec(), labels)
            }
        };
        Ok(Partition::from_parts(upper, lower, labels))
    }

    /// True iff no two blocks interleave in the circular order
    /// `U1..Uk, Ll..L1`.
    pub fn is_noncrossing(&self) -> bool {
        let mut seq: Vec<usize> = self.row_labels(Row::Upper).to_vec();
        seq.extend(self.row_labels(Row::Lower).iter().rev());
        for b in 0..self.num_blocks() {
            let total = seq.iter().filter(|&&x| x == b).count();
            let mut region_of: HashMap<usize, usize> = HashMap::new();
            let mut seen = 0;
            for &x in &seq {
                if x == b {
                    seen += 1;
                    continue;
                }
                let region = seen % total;
                match region_of.get(&x) {
                    Some(&r) if r != region => return false,
                    Some(_) => {}
                    None => {
                        region_of.insert(x, region);
                    }
                }
            }
        }
        true
    }

    /// The partition formed by `b` alone, with its points re-indexed and
    /// colours kept.
    pub fn block_restrict(&self, b: &Block) -> Result<Partition> {
        if !self.blocks().contains(b) {
            return Err(Error::BlockNotFound(b.to_string()));
        }
        let upper = b.upper.iter().map(|&i| self.upper[i]).collect();
        let lower = b.lower.iter().map(|&i| self.lower[i]).collect();
        Ok(Partition::from_parts(upper, lower, vec![0; b.size()]))
    }

    /// Text form with blocks renamed `A, B, C, ..` by minimal point.
    pub fn to_text(&self) -> String {
        let row = |row: Row| -> String {
            let cols = self.colours(row);
            if cols.is_empty() {
                return "-".to_string();
            }
            cols.iter()
                .zip(self.row_labels(row))
                .map(|(c, &b)| format!("{}{}", c.symbol(), block_name(b)))
                .collect::<Vec<_>>()
                .join(" ")
        };
        format!("{} / {}", row(Row::Upper), row(Row::Lower))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(PartitionJson::from(self)).expect("partition JSON is always valid")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Partition> {
        let pj: PartitionJson =
            serde_json::from_value(value.clone()).map_err(|e| Error::Json(e.to_string()))?;
        Partition::try_from(pj)
    }

    /// A standalone `picture` environment drawing the partition.
    pub fn to_latex(&self) -> String {
        let width = self.k().max(self.l()).max(1);
        let height = 2 + self.num_blocks();
        let top = height as f64;
        let mut out = String::new();
        out.push_str("\\setlength{\\unitlength}{0.4cm}\n");
        out.push_str(&format!("\\begin{{picture}}({},{})\n", width, height + 1));
        for (i, c) in self.upper.iter().enumerate() {
            out.push_str(&format!("\\put({},{:.1}){{${}$}}\n", i, top, latex_dot(*c)));
        }
        for (i, c) in self.lower.iter().enumerate() {
            out.push_str(&format!("\\put({},-0.6){{${}$}}\n", i, latex_dot(*c)));
        }
        let blocks = self.blocks();
        for (depth, b) in blocks.iter().enumerate() {
            let h = 0.5 + 0.5 * depth as f64;
            let anchor = |x: usize| x as f64 + 0.35;
            if !b.upper.is_empty() {
                for &i in &b.upper {
                    out.push_str(&format!(
                        "\\put({:.2},{:.1}){{\\line(0,-1){{{:.1}}}}}\n",
                        anchor(i),
                        top,
                        h
                    ));
                }
                let (a, z) = (b.upper[0], *b.upper.last().unwrap());
                if z > a {
                    out.push_str(&format!(
                        "\\put({:.2},{:.1}){{\\line(1,0){{{}}}}}\n",
                        anchor(a),
                        top - h,
                        z - a
                    ));
                }
            }
            if !b.lower.is_empty() {
                for &i in &b.lower {
                    out.push_str(&format!(
                        "\\put({:.2},0.4){{\\line(0,1){{{:.1}}}}}\n",
                        anchor(i),
                        h
                    ));
                }
                let (a, z) = (b.lower[0], *b.lower.last().unwrap());
                if z > a {
                    out.push_str(&format!(
                        "\\put({:.2},{:.1}){{\\line(1,0){{{}}}}}\n",
                        anchor(a),
                        0.4 + h,
                        z - a
                    ));
                }
            }
            if b.is_through() {
                let x = anchor(b.upper[0].min(b.lower[0]));
                let x_up = anchor(b.upper[0]);
                let x_low = anchor(b.lower[0]);
                let y0 = 0.4 + h;
                let y1 = top - h;
                out.push_str(&format!(
                    "\\put({:.2},{:.1}){{\\line(0,1){{{:.1}}}}}\n",
                    x,
                    y0,
                    y1 - y0
                ));
                if x_up > x {
                    out.push_str(&format!(
                        "\\put({:.2},{:.1}){{\\line(1,0){{{:.2}}}}}\n",
                        x,
                        y1,
                        x_up - x
                    ));
                }
                if x_low > x {
                    out.push_str(&format!(
                        "\\put({:.2},{:.1}){{\\line(1,0){{{:.2}}}}}\n",
                        x,
                        y0,
                        x_low - x
                    ));
                }
            }
        }
        out.push_str("\\end{picture}\n");
        out
    }
}

fn latex_dot(c: Colour) -> &'static str {
    match c {
        Colour::White => "\\circ",
        Colour::Black => "\\bullet",
    }
}

fn block_name(mut b: usize) -> String {
    let mut s = Vec::new();
    loop {
        s.push(b'A' + (b % 26) as u8);
        if b < 26 {
            break;
        }
        b = b / 26 - 1;
    }
    s.reverse();
    String::from_utf8(s).unwrap()
}

/// Stacks `q` below `p`. The lower word of `p` must equal the upper word of
/// `q`. Returns the composite in `P(upper(p), lower(q))` and the number of
/// removed middle-only blocks.
pub fn compose(q: &Partition, p: &Partition) -> Result<(Partition, usize)> {
    if p.lower != q.upper {
        let position = p
            .lower
            .iter()
            .zip(&q.upper)
            .position(|(a, b)| a != b)
            .unwrap_or(p.l().min(q.k()));
        let show = |w: &[Colour]| {
            w.get(position)
                .map_or_else(|| "end of word".to_string(), |c| c.to_string())
        };
        return Err(Error::ColourMismatch {
            position: position + 1,
            left: show(&p.lower),
            right: show(&q.upper),
        });
    }
    let bp = p.num_blocks();
    let bq = q.num_blocks();
    let mut parent: Vec<usize> = (0..bp + bq).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (&a, &b) in p
        .row_labels(Row::Lower)
        .iter()
        .zip(q.row_labels(Row::Upper))
    {
        let ra = find(&mut parent, a);
        let rb = find(&mut parent, bp + b);
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    let mut labels = Vec::with_capacity(p.k() + q.l());
    for &a in p.row_labels(Row::Upper) {
        labels.push(find(&mut parent, a));
    }
    for &b in q.row_labels(Row::Lower) {
        labels.push(find(&mut parent, bp + b));
    }
    let mut roots: Vec<usize> = (0..bp + bq).map(|x| find(&mut parent, x)).collect();
    roots.sort_unstable();
    roots.dedup();
    let loops = roots.iter().filter(|r| !labels.contains(r)).count();
    Ok((
        Partition::from_parts(p.upper.clone(), q.lower.clone(), labels),
        loops,
    ))
}

/// The identity strands of both colours and the four mixed-coloured pair
/// partitions.
pub fn base_partitions() -> Vec<Partition> {
    use Colour::*;
    vec![
        Partition::identity(White),
        Partition::identity(Black),
        Partition::lower_pair(White, Black),
        Partition::lower_pair(Black, White),
        Partition::upper_pair(White, Black),
        Partition::upper_pair(Black, White),
    ]
}

/// The four mixed-coloured pair partitions.
pub fn mcpp() -> Vec<Partition> {
    base_partitions().split_off(2)
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Partition> {
        parse_partition(s)
    }
}

pub fn parse_partition(text: &str) -> Result<Partition> {
    let slashes: Vec<usize> = text.match_indices('/').map(|(i, _)| i).collect();
    match slashes.len() {
        0 => {
            return Err(Error::Parse {
                column: text.chars().count() + 1,
                message: "expected '/' between the rows".into(),
            })
        }
        1 => {}
        _ => {
            return Err(Error::Parse {
                column: text[..slashes[1]].chars().count() + 1,
                message: "more than one '/'".into(),
            })
        }
    }
    let split = slashes[0];
    let mut ids: HashMap<&str, usize> = HashMap::new();
    let mut labels = Vec::new();
    let mut rows: Vec<Vec<Colour>> = Vec::new();
    for (start, row_text) in [(0, &text[..split]), (split + 1, &text[split + 1..])] {
        let tokens = tokens_with_offsets(row_text);
        let column_of = |off: usize| text[..start + off].chars().count() + 1;
        if tokens.is_empty() {
            return Err(Error::Parse {
                column: column_of(row_text.len()),
                message: "empty row must be written as '-'".into(),
            });
        }
        if tokens.len() == 1 && tokens[0].1 == "-" {
            rows.push(vec![]);
            continue;
        }
        let mut colours = Vec::new();
        for (off, tok) in tokens {
            let mut chars = tok.chars();
            let first = chars.next().unwrap();
            let colour = Colour::from_symbol(first).ok_or_else(|| Error::Parse {
                column: column_of(off),
                message: if tok == "-" {
                    "'-' must be the only token of an empty row".into()
                } else {
                    format!("expected colour 'o' or '*', found '{first}'")
                },
            })?;
            let id = &tok[first.len_utf8()..];
            if id.is_empty() {
                return Err(Error::Parse {
                    column: column_of(off),
                    message: "empty block id".into(),
                });
            }
            if let Some(bad) = id.char_indices().find(|(_, c)| !c.is_ascii_alphanumeric()) {
                return Err(Error::Parse {
                    column: column_of(off + first.len_utf8() + bad.0),
                    message: format!("invalid block id character '{}'", bad.1),
                });
            }
            let next = ids.len();
            labels.push(*ids.entry(id).or_insert(next));
            colours.push(colour);
        }
        rows.push(colours);
    }
    let lower = rows.pop().unwrap();
    let upper = rows.pop().unwrap();
    Partition::new(upper, lower, &labels)
}

fn tokens_with_offsets(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in s.char_indices() {
        if c.is_whitespace() {
            if let Some(st) = start.take() {
                out.push((st, &s[st..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(st) = start {
        out.push((st, &s[st..]));
    }
    out
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PointJson {
    pub colour: String,
    pub block: usize,
}

/// JSON exchange form: blocks are numbered `0..B-1` by minimal point.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PartitionJson {
    pub upper: Vec<PointJson>,
    pub lower: Vec<PointJson>,
}

impl From<&Partition> for PartitionJson {
    fn from(p: &Partition) -> Self {
        let row = |r: Row| {
            p.colours(r)
                .iter()
                .zip(p.row_labels(r))
                .map(|(c, &b)| PointJson {
                    colour: c.symbol().to_string(),
                    block: b,
                })
                .collect()
        };
        PartitionJson {
            upper: row(Row::Upper),
            lower: row(Row::Lower),
        }
    }
}

impl TryFrom<PartitionJson> for Partition {
    type Error = Error;

    fn try_from(pj: PartitionJson) -> Result<Partition> {
        let colour = |s: &str| -> Result<Colour> {
            let mut it = s.chars();
            match (it.next().and_then(Colour::from_symbol), it.next()) {
                (Some(c), None) => Ok(c),
                _ => Err(Error::Json(format!("bad colour '{s}'"))),
            }
        };
        let upper = pj
            .upper
            .iter()
            .map(|pt| colour(&pt.colour))
            .collect::<Result<Vec<_>>>()?;
        let lower = pj
            .lower
            .iter()
            .map(|pt| colour(&pt.colour))
            .collect::<Result<Vec<_>>>()?;
        let labels: Vec<usize> = pj
            .upper
            .iter()
            .chain(&pj.lower)
            .map(|pt| pt.block)
            .collect();
        Partition::new(upper, lower, &labels)
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PartitionJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let pj = PartitionJson::deserialize(d)?;
        Partition::try_from(pj).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Colour::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn eq1() -> Partition {
        p("oA oA *B / *C *B oB")
    }

    #[test]
    fn parses_running_example() {
        let q = eq1();
        assert_eq!(q.upper_colours(), &[White, White, Black]);
        assert_eq!(q.lower_colours(), &[Black, Black, White]);
        let blocks = q.blocks();
        assert_eq!(blocks.len(), 3);
        assert_eq!(
            blocks[0],
            Block {
                upper: vec![0, 1],
                lower: vec![]
            }
        );
        assert_eq!(
            blocks[1],
            Block {
                upper: vec![2],
                lower: vec![1, 2]
            }
        );
        assert_eq!(
            blocks[2],
            Block {
                upper: vec![],
                lower: vec![0]
            }
        );
        assert_eq!(q.tb(), 1);
    }

    #[test]
    fn block_ids_are_arbitrary() {
        assert_eq!(p("oX oX *zz9 / *q *zz9 ozz9"), eq1());
        assert_eq!(eq1().to_text(), "oA oA *B / *C *B oB");
    }

    #[test]
    fn parses_pair_and_empty() {
        assert_eq!(p("- / oA *A"), Partition::lower_pair(White, Black));
        assert_eq!(p("- / -"), Partition::empty());
        assert_eq!(Partition::empty().to_text(), "- / -");
    }

    #[test]
    fn parse_errors_report_columns() {
        match parse_partition("oA o / -") {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 4),
            other => panic!("{other:?}"),
        }
        match parse_partition("oA xB / -") {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 4),
            other => panic!("{other:?}"),
        }
        assert!(parse_partition("oA oA").is_err());
        assert!(parse_partition(" / oA").is_err());
        assert!(parse_partition("- oA / -").is_err());
        assert!(parse_partition("oA / oA / oA").is_err());
        assert!(parse_partition("oA-1 / -").is_err());
    }

    #[test]
    fn json_shape() {
        let v = Partition::lower_pair(White, Black).to_json();
        assert_eq!(
            v,
            serde_json::json!({"upper": [], "lower": [
                {"colour": "o", "block": 0}, {"colour": "*", "block": 0}]})
        );
        assert_eq!(Partition::from_json(&eq1().to_json()).unwrap(), eq1());
    }

    #[test]
    fn tensor_examples() {
        let a = Partition::lower_pair(White, Black);
        let b = Partition::lower_pair(Black, White);
        let t = a.tensor(&b);
        assert_eq!(t.to_text(), "- / oA *A *B oB");
        assert_eq!(Partition::empty().tensor(&eq1()), eq1());
        let id = Partition::identity(White);
        assert_eq!(id.tensor(&id).to_text(), "oA oB / oA oB");
    }

    #[test]
    fn involution_examples() {
        let cap = Partition::lower_pair(White, Black);
        assert_eq!(cap.involution(), Partition::upper_pair(White, Black));
        let q = eq1();
        assert_eq!(q.involution().involution(), q);
        assert_eq!(q.involution().to_text(), "*A *B oB / oC oC *B");
    }

    #[test]
    fn composition_with_adjoint() {
        let q = eq1();
        let (r, loops) = compose(&q, &q.involution()).unwrap();
        assert_eq!(r.upper_colours(), &[Black, Black, White]);
        assert_eq!(r.lower_colours(), &[Black, Black, White]);
        let blocks = r.blocks();
        assert_eq!(
            blocks,
            vec![
                Block {
                    upper: vec![0],
                    lower: vec![]
                },
                Block {
                    upper: vec![1, 2],
                    lower: vec![1, 2]
                },
                Block {
                    upper: vec![],
                    lower: vec![0]
                },
            ]
        );
        assert_eq!(loops, 1);
    }

    #[test]
    fn composition_identity_and_circle() {
        let id = Partition::identity(White);
        let idid = id.tensor(&id);
        assert_eq!(compose(&idid, &idid).unwrap(), (idid.clone(), 0));
        let cap = Partition::lower_pair(White, Black);
        let cup = Partition::upper_pair(White, Black);
        assert_eq!(compose(&cup, &cap).unwrap(), (Partition::empty(), 1));
    }

    #[test]
    fn composition_mismatch_position() {
        let a = p("- / oA oA *B");
        let b = p("oA *A oB / -");
        match compose(&b, &a) {
            Err(Error::ColourMismatch { position, .. }) => assert_eq!(position, 2),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rotation_examples() {
        let id = Partition::identity(White);
        let r = id.rotate(Rotation::UpperLeftDown).unwrap();
        assert_eq!(r, Partition::lower_pair(Black, White));
        let q = eq1();
        for dir in Rotation::ALL {
            let back = q.rotate(dir).unwrap().rotate(dir.inverse()).unwrap();
            assert_eq!(back, q);
        }
        assert_eq!(
            Partition::empty().rotate(Rotation::LowerLeftUp),
            Err(Error::EmptyRow("lower"))
        );
    }

    #[test]
    fn rotating_four_block_to_one_row() {
        let four = p("oA *A / oA *A");
        let mut r = four.clone();
        for _ in 0..2 {
            r = r.rotate(Rotation::UpperRightDown).unwrap();
        }
        assert_eq!(r.k(), 0);
        assert_eq!(r.l(), 4);
        assert_eq!(r.num_blocks(), 1);
        assert_eq!(r.lower_colours(), &[White, Black, White, Black]);
    }

    #[test]
    fn noncrossing_examples() {
        assert!(eq1().is_noncrossing());
        assert!(!p("- / oA oB oA oB").is_noncrossing());
        assert!(p("oA oA / oA oA oA").is_noncrossing());
        assert!(p("oA oB / oA oB").is_noncrossing());
        assert!(!p("oA oB / oB oA").is_noncrossing());
    }

    #[test]
    fn restriction_examples() {
        let q = eq1();
        let through = q.blocks()[1].clone();
        assert_eq!(q.block_restrict(&through).unwrap(), p("*A / *A oA"));
        let one = p("oA *A / oA");
        assert_eq!(one.block_restrict(&one.blocks()[0]).unwrap(), one);
        let caps = Partition::lower_pair(White, Black).tensor(&Partition::lower_pair(White, Black));
        assert_eq!(
            caps.block_restrict(&caps.blocks()[0]).unwrap(),
            Partition::lower_pair(White, Black)
        );
        let stranger = Block {
            upper: vec![0],
            lower: vec![],
        };
        assert!(caps.block_restrict(&stranger).is_err());
    }

    #[test]
    fn base_set() {
        let base = base_partitions();
        assert_eq!(base.len(), 6);
        let mut sorted = base.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 6);
        for m in mcpp() {
            let cols: Vec<Colour> = m
                .upper_colours()
                .iter()
                .chain(m.lower_colours())
                .copied()
                .collect();
            assert_eq!(cols.iter().filter(|&&c| c == White).count(), 1);
            assert_eq!(cols.iter().filter(|&&c| c == Black).count(), 1);
        }
        assert_eq!(base[2].involution(), base[4]);
        assert_eq!(base[3].involution(), base[5]);
    }

    #[test]
    fn block_names_continue_past_z() {
        assert_eq!(block_name(0), "A");
        assert_eq!(block_name(25), "Z");
        assert_eq!(block_name(26), "AA");
        assert_eq!(block_name(27), "AB");
    }

    #[test]
    fn latex_mentions_every_point() {
        let s = eq1().to_latex();
        assert!(s.starts_with("\\setlength"));
        assert_eq!(s.matches("\\circ").count(), 3);
        assert_eq!(s.matches("\\bullet").count(), 3);
    }
}
