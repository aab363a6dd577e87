//! Classical shadow suites: symbolic relations evaluated on concrete
//! matrices.
//!
//! Every suite stops at the first relation whose residual exceeds the
//! tolerance and reports it in full.

use std::fmt;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use serde_json::{json, Value};

use crate::category::Preset;
use crate::corpus;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::relations::{
    emit_sp_matrix_with, evaluate_relation, for_each_gr, matrix_assignment, EmissionMode,
    EmitOptions, Relation, Scalar, SymbolKind,
};

use super::elements::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    /// Quantum group relations on all of `S_N`.
    Sn,
    /// Even-block partitions on signed permutations.
    Hn,
    /// Partitions with an even number of points on permutations with a
    /// global sign.
    SpN,
    /// Pair partitions on random planar rotations and reflections.
    Rotations,
    /// First-columns relations of presets on `x`, `g x` and `g^T x`.
    CoactionShadow,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Sn,
        Suite::Hn,
        Suite::SpN,
        Suite::Rotations,
        Suite::CoactionShadow,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Sn => "sN",
            Suite::Hn => "hN",
            Suite::SpN => "spN",
            Suite::Rotations => "rotations",
            Suite::CoactionShadow => "coaction-shadow",
        }
    }

    /// Accepts `sN`, `hN`, `spN` with `N` literal or a number, e.g. `s3`.
    pub fn parse(s: &str) -> Result<(Suite, Option<usize>)> {
        let bad = || Error::OutOfRange(format!("unknown suite '{s}'"));
        match s {
            "rotations" => return Ok((Suite::Rotations, None)),
            "coaction-shadow" => return Ok((Suite::CoactionShadow, None)),
            _ => {}
        }
        let (suite, rest) = if let Some(r) = s.strip_prefix("sp") {
            (Suite::SpN, r)
        } else if let Some(r) = s.strip_prefix('s') {
            (Suite::Sn, r)
        } else if let Some(r) = s.strip_prefix('h') {
            (Suite::Hn, r)
        } else {
            return Err(bad());
        };
        match rest {
            "N" => Ok((suite, None)),
            digits => digits.parse().map(|n| (suite, Some(n))).map_err(|_| bad()),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub n: usize,
    pub seed: u64,
    pub corpus_size: usize,
    pub max_points: usize,
    pub samples: usize,
    pub label_cap: u128,
    pub mode: EmissionMode,
}

impl SuiteConfig {
    pub fn new(n: usize) -> SuiteConfig {
        SuiteConfig {
            n,
            seed: corpus::DEFAULT_SEED,
            corpus_size: 200,
            max_points: 6,
            samples: 100,
            label_cap: crate::labeling::DEFAULT_LABEL_CAP,
            mode: EmissionMode::Exhaustive,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Counterexample {
    pub partition: Partition,
    pub element: Value,
    pub relation: Relation,
    pub residual: f64,
}

impl Counterexample {
    pub fn to_json(&self) -> Value {
        json!({
            "partition": self.partition.to_json(),
            "element": self.element,
            "relation": self.relation.to_json(),
            "relation_text": self.relation.to_text(),
            "residual": self.residual,
        })
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOutcome {
    pub suite: Suite,
    pub n: usize,
    pub partitions: usize,
    pub elements: usize,
    pub relations: u64,
    pub evaluations: u64,
    pub max_residual: f64,
    pub tolerance: f64,
    pub counterexample: Option<Counterexample>,
    pub elapsed: Duration,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite.name(),
            "n": self.n,
            "partitions": self.partitions,
            "elements": self.elements,
            "relations": self.relations,
            "evaluations": self.evaluations,
            "max_residual": self.max_residual,
            "tolerance": self.tolerance,
            "passed": self.passed(),
            "counterexample": self.counterexample.as_ref().map(Counterexample::to_json),
        })
    }
}

impl fmt::Display for SuiteOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "suite {} N={}: {} partitions, {} elements, {} relations, {} evaluations, max residual {:e} (tolerance {:e}) {}",
            self.suite.name(),
            self.n,
            self.partitions,
            self.elements,
            self.relations,
            self.evaluations,
            self.max_residual,
            self.tolerance,
            if self.passed() { "PASS" } else { "FAIL" }
        )?;
        if let Some(c) = &self.counterexample {
            write!(
                f,
                "\ncounterexample: partition {} element {} relation {} residual {:e}",
                c.partition, c.element, c.relation, c.residual
            )?;
        }
        Ok(())
    }
}

/// Running totals while evaluating a stream of relations.
struct Tally {
    relations: u64,
    evaluations: u64,
    max_residual: f64,
    tolerance: f64,
    counterexample: Option<Counterexample>,
}

impl Tally {
    fn new(tolerance: f64) -> Tally {
        Tally {
            relations: 0,
            evaluations: 0,
            max_residual: 0.0,
            tolerance,
            counterexample: None,
        }
    }

    /// Evaluates `rel` at every point; `Err` stops the stream at the first
    /// failure.
    fn check<S, A>(&mut self, p: &Partition, rel: &Relation, points: &[(Value, A)]) -> Result<()>
    where
        S: Scalar + std::ops::Sub<Output = S>,
        A: Fn(&crate::relations::Symbol) -> Option<S>,
    {
        self.relations += 1;
        for (desc, assign) in points {
            let r = evaluate_relation(rel, assign)?;
            self.evaluations += 1;
            self.max_residual = self.max_residual.max(r);
            if r > self.tolerance {
                self.counterexample = Some(Counterexample {
                    partition: p.clone(),
                    element: desc.clone(),
                    relation: rel.clone(),
                    residual: r,
                });
                return Err(Error::OutOfRange("counterexample found".into()));
            }
        }
        Ok(())
    }

    fn finish(
        self,
        suite: Suite,
        n: usize,
        partitions: usize,
        elements: usize,
        start: Instant,
    ) -> SuiteOutcome {
        SuiteOutcome {
            suite,
            n,
            partitions,
            elements,
            relations: self.relations,
            evaluations: self.evaluations,
            max_residual: self.max_residual,
            tolerance: self.tolerance,
            counterexample: self.counterexample,
            elapsed: start.elapsed(),
        }
    }
}

fn gr_suite<S>(
    suite: Suite,
    cfg: &SuiteConfig,
    partitions: &[Partition],
    elements: &[(Value, Vec<S>)],
    tolerance: f64,
) -> Result<SuiteOutcome>
where
    S: Scalar + std::ops::Sub<Output = S>,
{
    let start = Instant::now();
    let n = cfg.n;
    let points: Vec<_> = elements
        .iter()
        .map(|(d, e)| (d.clone(), matrix_assignment(SymbolKind::U, n, n, e.clone())))
        .collect();
    let opts = EmitOptions {
        mode: cfg.mode,
        label_cap: cfg.label_cap,
    };
    let mut tally = Tally::new(tolerance);
    for p in partitions {
        let res = for_each_gr(p, n as u32, opts, |rel| tally.check(p, &rel, &points));
        if tally.counterexample.is_some() {
            break;
        }
        res?;
    }
    Ok(tally.finish(suite, n, partitions.len(), elements.len(), start))
}

fn integer_points(elements: &[ConcreteElement]) -> Vec<(Value, Vec<i64>)> {
    elements
        .iter()
        .map(|g| {
            (
                g.to_json(),
                g.integer_entries().expect("integer element").to_vec(),
            )
        })
        .collect()
}

/// Presets checked by the coaction suite, with the column counts used.
pub fn coaction_presets(even_blocks_only: bool) -> Vec<(Preset, Vec<usize>)> {
    let all: [(&str, &[usize]); 15] = [
        ("O_loc", &[1, 2]),
        ("Hp_loc", &[1, 2]),
        ("H_loc(2,2)", &[1, 2]),
        ("S_loc(2,2)", &[1, 2]),
        ("B_loc(1,1)", &[1, 2]),
        ("Bp_loc_0(2,2)", &[1, 2]),
        ("Bp_loc_half(4,4)", &[1]),
        ("O_glob(2)", &[1, 2]),
        ("O_glob(4)", &[1, 2]),
        ("H_glob(2)", &[1, 2]),
        ("H_glob(4)", &[1, 2]),
        ("S_glob(1)", &[1, 2]),
        ("S_glob(2)", &[1, 2]),
        ("B_glob(2)", &[1, 2]),
        ("Bp_glob(1)", &[1, 2]),
    ];
    all.iter()
        .map(|(s, d)| (s.parse::<Preset>().expect("valid preset"), d.to_vec()))
        .filter(|(p, _)| !even_blocks_only || p.has_even_blocks())
        .collect()
}

fn coaction_suite(cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let start = Instant::now();
    let n = cfg.n;
    let mut rng = corpus::rng(cfg.seed);
    let mut tally = Tally::new(0.0);
    let mut partitions = 0;
    let mut elements = 0;
    let opts = EmitOptions {
        mode: cfg.mode,
        label_cap: cfg.label_cap,
    };
    'groups: for signed in [false, true] {
        let pairs: Vec<(ConcreteElement, ConcreteElement)> = (0..cfg.samples)
            .map(|_| {
                if signed {
                    (
                        sample_signed_permutation(n, &mut rng),
                        sample_signed_permutation(n, &mut rng),
                    )
                } else {
                    (
                        sample_permutation(n, &mut rng),
                        sample_permutation(n, &mut rng),
                    )
                }
            })
            .collect();
        elements += 2 * pairs.len();
        for (preset, ds) in coaction_presets(signed) {
            let gens = preset.listed_generators()?;
            for &d in ds.iter().filter(|&&d| d <= n) {
                let mut points = Vec::new();
                for (g, h) in &pairs {
                    let x = h.first_columns(d)?;
                    let ge = g.integer_entries().unwrap();
                    let gt = g.transpose();
                    for (label, v) in [
                        ("x", x.clone()),
                        ("g x", int_mat_mul(ge, &x, n, n, d)),
                        (
                            "g^T x",
                            int_mat_mul(gt.integer_entries().unwrap(), &x, n, n, d),
                        ),
                    ] {
                        let desc = json!({"preset": preset.to_string(), "d": d, "g": g.to_json(), "h": h.to_json(), "point": label, "x": v});
                        points.push((desc, matrix_assignment(SymbolKind::X, n, d, v)));
                    }
                }
                for p in &gens {
                    partitions += 1;
                    let rels = emit_sp_matrix_with(p, n as u32, d as u32, opts)?;
                    for rel in &rels {
                        if tally.check(p, rel, &points).is_err() {
                            break 'groups;
                        }
                    }
                }
            }
        }
    }
    Ok(tally.finish(Suite::CoactionShadow, n, partitions, elements, start))
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let n = cfg.n;
    if n == 0 {
        return Err(Error::OutOfRange("N must be at least 1".into()));
    }
    match suite {
        Suite::Sn => {
            let parts = corpus::random_corpus(cfg.seed, cfg.corpus_size, cfg.max_points);
            let els = integer_points(&all_permutation_elements(n));
            gr_suite(suite, cfg, &parts, &els, 0.0)
        }
        Suite::Hn => {
            let parts = corpus::filtered_corpus(
                cfg.seed,
                cfg.corpus_size,
                cfg.max_points,
                Partition::has_even_blocks,
            );
            let els = if n == 2 {
                all_signed_permutation_elements(2)
            } else {
                let mut rng = corpus::rng(cfg.seed ^ 0x4845);
                (0..cfg.samples)
                    .map(|_| sample_signed_permutation(n, &mut rng))
                    .collect()
            };
            gr_suite(suite, cfg, &parts, &integer_points(&els), 0.0)
        }
        Suite::SpN => {
            let parts = corpus::filtered_corpus(cfg.seed, cfg.corpus_size, cfg.max_points, |p| {
                p.points() % 2 == 0
            });
            let els = integer_points(&all_global_sign_elements(n));
            gr_suite(suite, cfg, &parts, &els, 0.0)
        }
        Suite::Rotations => {
            if n != 2 {
                return Err(Error::OutOfRange("the rotation suite needs N = 2".into()));
            }
            let parts = corpus::pair_corpus(cfg.seed, cfg.corpus_size, cfg.max_points);
            let mut rng = corpus::rng(cfg.seed ^ 0x524f54);
            let els: Vec<(Value, Vec<Complex64>)> = (0..cfg.samples)
                .map(|_| {
                    let g = sample_rotation(&mut rng);
                    let Entries::Float(v) = g.entries().clone() else {
                        unreachable!("rotation samples are floating point")
                    };
                    (g.to_json(), v)
                })
                .collect();
            gr_suite(suite, cfg, &parts, &els, 1e-9)
        }
        Suite::CoactionShadow => coaction_suite(cfg),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names() {
        assert_eq!(Suite::parse("sN").unwrap(), (Suite::Sn, None));
        assert_eq!(Suite::parse("s4").unwrap(), (Suite::Sn, Some(4)));
        assert_eq!(Suite::parse("sp2").unwrap(), (Suite::SpN, Some(2)));
        assert_eq!(Suite::parse("hN").unwrap(), (Suite::Hn, None));
        assert_eq!(Suite::parse("rotations").unwrap(), (Suite::Rotations, None));
        assert!(Suite::parse("q3").is_err());
    }

    #[test]
    fn small_suites_pass() {
        let mut cfg = SuiteConfig::new(2);
        cfg.corpus_size = 20;
        cfg.max_points = 4;
        cfg.samples = 10;
        for s in [
            Suite::Sn,
            Suite::Hn,
            Suite::SpN,
            Suite::Rotations,
            Suite::CoactionShadow,
        ] {
            let out = run_suite(s, &cfg).unwrap();
            assert!(out.passed(), "{out}");
            assert!(out.relations > 0);
        }
    }

    #[test]
    fn wrong_group_is_caught() {
        // signed permutations do not satisfy the singleton relations
        let mut cfg = SuiteConfig::new(2);
        cfg.corpus_size = 30;
        cfg.max_points = 3;
        let parts = corpus::random_corpus(cfg.seed, cfg.corpus_size, cfg.max_points);
        let els = integer_points(&all_signed_permutation_elements(2));
        let out = gr_suite(Suite::Hn, &cfg, &parts, &els, 0.0).unwrap();
        assert!(!out.passed());
        let c = out.counterexample.unwrap();
        assert!(c.residual > 0.0);
        assert!(!c.partition.has_even_blocks());
    }
}
