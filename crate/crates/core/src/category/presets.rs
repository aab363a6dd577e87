//! Generator sets of the free non-crossing categories with singletons or
//! non-trivial colour behaviour.
//!
//! Every generator lives in `P(0, n)`. Besides one-block partitions and
//! singleton powers, three families of "positioners" are used:
//!
//! ```text
//! positioner(l)  on 2l+2 points:  o^l  o  *^l  *   the o at l+1 paired with the last *
//!                                 e.g. l = 2:  o o o * * *   blocks {3,6}
//! positioner_wwbb = positioner(1): o o * *         blocks {1} {2,4} {3}
//! positioner_wbwb:                 o * o *         blocks {1} {2,4} {3}
//! nested(m)      on 2m+2 points:  o^m  *  o^m  *   the two * paired
//! ```
//!
//! Remaining points are singletons.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::{mcpp, Colour, Partition};

use super::GeneratorSet;

use Colour::{Black, White};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Preset {
    OLoc,
    HpLoc,
    HLoc { k: usize, l: usize },
    SLoc { k: usize, l: usize },
    BLoc { k: usize, l: usize },
    BpLoc0 { k: usize, l: usize },
    BpLocHalf { k: usize, l: usize },
    OGlob { k: usize },
    HGlob { k: usize },
    SGlob { k: usize },
    BGlob { k: usize },
    BpGlob { k: usize },
}

pub const PRESET_NAMES: [&str; 12] = [
    "O_loc",
    "Hp_loc",
    "H_loc",
    "S_loc",
    "B_loc",
    "Bp_loc_0",
    "Bp_loc_half",
    "O_glob",
    "H_glob",
    "S_glob",
    "B_glob",
    "Bp_glob",
];

/// The one-block partition on `n` lower points of one colour.
pub fn one_colour_block(c: Colour, n: usize) -> Partition {
    Partition::one_block(&vec![c; n])
}

/// `n` white singletons side by side.
pub fn singleton_power(n: usize) -> Partition {
    Partition::lower_row(&vec![White; n], &(0..n).collect::<Vec<_>>()).unwrap()
}

/// A lower row whose only non-singleton block is the pair `{a, b}` (0-based).
fn singletons_with_pair(colours: Vec<Colour>, a: usize, b: usize) -> Partition {
    let labels: Vec<usize> = (0..colours.len())
        .map(|i| if i == b { a } else { i })
        .collect();
    Partition::lower_row(&colours, &labels).unwrap()
}

pub fn positioner(l: usize) -> Partition {
    let mut colours = vec![White; l + 1];
    colours.extend(vec![Black; l + 1]);
    singletons_with_pair(colours, l, 2 * l + 1)
}

pub fn positioner_wwbb() -> Partition {
    positioner(1)
}

pub fn positioner_wbwb() -> Partition {
    singletons_with_pair(vec![White, Black, White, Black], 1, 3)
}

pub fn nested_positioner(m: usize) -> Partition {
    let mut colours = vec![White; m];
    colours.push(Black);
    colours.extend(vec![White; m]);
    colours.push(Black);
    singletons_with_pair(colours, m, 2 * m + 1)
}

pub fn four_block_wwbb() -> Partition {
    Partition::one_block(&[White, White, Black, Black])
}

pub fn four_block_wbwb() -> Partition {
    Partition::one_block(&[White, Black, White, Black])
}

pub fn white_pair() -> Partition {
    Partition::lower_pair(White, White)
}

fn pair_pair() -> Partition {
    white_pair().tensor(&Partition::lower_pair(Black, Black))
}

fn mixed_singletons() -> Partition {
    Partition::singleton(White).tensor(&Partition::singleton(Black))
}

fn out_of_range(msg: String) -> Error {
    Error::OutOfRange(msg)
}

fn divides(l: usize, k: usize) -> bool {
    if l == 0 {
        k == 0
    } else {
        k.is_multiple_of(l)
    }
}

impl Preset {
    pub fn name(&self) -> &'static str {
        match self {
            Preset::OLoc => "O_loc",
            Preset::HpLoc => "Hp_loc",
            Preset::HLoc { .. } => "H_loc",
            Preset::SLoc { .. } => "S_loc",
            Preset::BLoc { .. } => "B_loc",
            Preset::BpLoc0 { .. } => "Bp_loc_0",
            Preset::BpLocHalf { .. } => "Bp_loc_half",
            Preset::OGlob { .. } => "O_glob",
            Preset::HGlob { .. } => "H_glob",
            Preset::SGlob { .. } => "S_glob",
            Preset::BGlob { .. } => "B_glob",
            Preset::BpGlob { .. } => "Bp_glob",
        }
    }

    /// Builds a preset from its name and parameters.
    pub fn from_parts(name: &str, params: &[usize]) -> Result<Preset> {
        let want = |n: usize| -> Result<()> {
            if params.len() == n {
                Ok(())
            } else {
                Err(out_of_range(format!(
                    "{name} takes {n} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        let p = match name {
            "O_loc" => {
                want(0)?;
                Preset::OLoc
            }
            "Hp_loc" => {
                want(0)?;
                Preset::HpLoc
            }
            "H_loc" | "S_loc" | "B_loc" | "Bp_loc_0" | "Bp_loc_half" => {
                want(2)?;
                let (k, l) = (params[0], params[1]);
                match name {
                    "H_loc" => Preset::HLoc { k, l },
                    "S_loc" => Preset::SLoc { k, l },
                    "B_loc" => Preset::BLoc { k, l },
                    "Bp_loc_0" => Preset::BpLoc0 { k, l },
                    _ => Preset::BpLocHalf { k, l },
                }
            }
            "O_glob" | "H_glob" | "S_glob" | "B_glob" | "Bp_glob" => {
                want(1)?;
                let k = params[0];
                match name {
                    "O_glob" => Preset::OGlob { k },
                    "H_glob" => Preset::HGlob { k },
                    "S_glob" => Preset::SGlob { k },
                    "B_glob" => Preset::BGlob { k },
                    _ => Preset::BpGlob { k },
                }
            }
            _ => return Err(out_of_range(format!("unknown preset '{name}'"))),
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let not_one = |x: usize, what: &str| {
            if x == 1 {
                Err(out_of_range(format!(
                    "{}: {what} = 1 is excluded",
                    self.name()
                )))
            } else {
                Ok(())
            }
        };
        let div = |k: usize, l: usize| {
            if divides(l, k) {
                Ok(())
            } else {
                Err(out_of_range(format!(
                    "{}: {l} does not divide {k}",
                    self.name()
                )))
            }
        };
        let even = |k: usize| {
            if k.is_multiple_of(2) {
                Ok(())
            } else {
                Err(out_of_range(format!(
                    "{}: k = {k} must be even",
                    self.name()
                )))
            }
        };
        match *self {
            Preset::OLoc | Preset::HpLoc => Ok(()),
            Preset::HLoc { k, l } | Preset::SLoc { k, l } | Preset::BpLoc0 { k, l } => {
                not_one(k, "k")?;
                not_one(l, "l")?;
                div(k, l)
            }
            Preset::BLoc { k, l } => div(k, l),
            Preset::BpLocHalf { k, l } => {
                not_one(k, "k")?;
                if l % 2 == 1 || l == 0 || l == 2 {
                    return Err(out_of_range(format!(
                        "{}: l = {l} must be even and at least 4",
                        self.name()
                    )));
                }
                div(k, l)
            }
            Preset::OGlob { k } | Preset::HGlob { k } | Preset::BGlob { k } => even(k),
            Preset::SGlob { .. } | Preset::BpGlob { .. } => Ok(()),
        }
    }

    /// The generators listed for the preset, without the base partitions.
    pub fn listed_generators(&self) -> Result<Vec<Partition>> {
        self.validate()?;
        let mut g = match *self {
            Preset::OLoc => vec![],
            Preset::HpLoc => vec![four_block_wbwb()],
            Preset::HLoc { k, l } => vec![
                one_colour_block(White, k),
                one_colour_block(White, l).tensor(&one_colour_block(Black, l)),
                four_block_wwbb(),
            ],
            Preset::SLoc { k, l } => vec![
                singleton_power(k),
                positioner(l),
                four_block_wbwb(),
                mixed_singletons(),
            ],
            Preset::BLoc { k, l } => vec![singleton_power(k), positioner(l), mixed_singletons()],
            Preset::BpLoc0 { k, l } => vec![
                singleton_power(k),
                positioner(l),
                positioner_wbwb(),
                mixed_singletons(),
            ],
            Preset::BpLocHalf { k, l } => vec![
                singleton_power(k),
                positioner(l),
                nested_positioner(l / 2 + 1),
                positioner_wwbb(),
                mixed_singletons(),
            ],
            Preset::OGlob { k } => {
                let mut pairs = Partition::empty();
                for _ in 0..k / 2 {
                    pairs = pairs.tensor(&white_pair());
                }
                vec![pairs, pair_pair()]
            }
            Preset::HGlob { k } => vec![one_colour_block(White, k), four_block_wbwb(), pair_pair()],
            Preset::SGlob { k } => vec![
                singleton_power(k),
                four_block_wbwb(),
                mixed_singletons(),
                pair_pair(),
            ],
            Preset::BGlob { k } => vec![singleton_power(k), mixed_singletons(), pair_pair()],
            Preset::BpGlob { k } => vec![
                singleton_power(k),
                positioner_wwbb(),
                mixed_singletons(),
                pair_pair(),
            ],
        };
        g.extend(mcpp());
        Ok(g)
    }

    pub fn generators(&self) -> Result<GeneratorSet> {
        Ok(GeneratorSet::new(self.listed_generators()?).with_name(self.to_string()))
    }

    /// True when every block of every generator has even size.
    pub fn has_even_blocks(&self) -> bool {
        self.listed_generators()
            .map(|g| g.iter().all(Partition::has_even_blocks))
            .unwrap_or(false)
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Preset::OLoc | Preset::HpLoc => f.write_str(self.name()),
            Preset::HLoc { k, l }
            | Preset::SLoc { k, l }
            | Preset::BLoc { k, l }
            | Preset::BpLoc0 { k, l }
            | Preset::BpLocHalf { k, l } => write!(f, "{}({k},{l})", self.name()),
            Preset::OGlob { k }
            | Preset::HGlob { k }
            | Preset::SGlob { k }
            | Preset::BGlob { k }
            | Preset::BpGlob { k } => write!(f, "{}({k})", self.name()),
        }
    }
}

/// Parses `NAME` or `NAME(a,b,..)`.
impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Preset> {
        let s = s.trim();
        let (name, params) = match s.find('(') {
            None => (s, vec![]),
            Some(open) => {
                let inner = s[open + 1..]
                    .strip_suffix(')')
                    .ok_or_else(|| out_of_range(format!("missing ')' in '{s}'")))?;
                let params = inner
                    .split(',')
                    .map(|x| {
                        x.trim().parse::<usize>().map_err(|_| {
                            out_of_range(format!("bad parameter '{}' in '{s}'", x.trim()))
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                (&s[..open], params)
            }
        };
        Preset::from_parts(name.trim(), &params)
    }
}
