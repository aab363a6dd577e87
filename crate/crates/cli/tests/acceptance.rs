//! One pass/fail line per acceptance criterion. Limits and tolerances are
//! fixed here; nothing is tuned to make a line pass.

#[path = "../../core/tests/support/mod.rs"]
mod support;

use std::process::Command;
use std::time::{Duration, Instant};

use serde_json::Value;

use easycat::category::{generate_closure, BlockVerdict, Preset};
use easycat::corpus::{random_corpus, DEFAULT_SEED};
use easycat::numerics::{
    colinearity_bound, fusion_report, run_suite, separation_report, tp_matrix, FusionCase, Suite,
    SuiteConfig,
};
use easycat::relations::{emit_sp_matrix, emit_sp_vector};
use easycat::{compose, Partition};

const FUSION_LIMIT: Duration = Duration::from_secs(1);
const RANK_LIMIT: Duration = Duration::from_secs(30);
const SOUNDNESS_LIMIT: Duration = Duration::from_secs(60);
const BLOCKSTABILITY_LIMIT: Duration = Duration::from_secs(120);
const ROTATION_TOLERANCE: f64 = 1e-9;
const CORPUS_SIZE: usize = 200;
const MAX_POINTS: usize = 6;

type Check = std::result::Result<String, String>;
type FusionExpectation = (FusionCase, u64, &'static [(&'static str, u64)]);
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, msg: impl Into<String>) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn easycat(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_easycat"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("utf-8 output"),
    )
}

fn fusion_dimensions() -> Check {
    let expected: [FusionExpectation; 2] = [
        (
            FusionCase::B3Plus,
            14,
            &[("||", 3), ("s|", 2), ("|s", 2), ("ss", 1), ("⊓⊔", 1)],
        ),
        (FusionCase::O2Plus, 10, &[("||", 3), ("⊓⊔", 1)]),
    ];
    let mut detail = Vec::new();
    for (case, dim, ranks) in expected {
        let start = Instant::now();
        let r = fusion_report(case).map_err(|e| e.to_string())?;
        let took = start.elapsed();
        ensure(
            r.dim == dim,
            format!("{}: dim {} != {dim}", case.name(), r.dim),
        )?;
        for &(tag, want) in ranks {
            ensure(
                r.rank_of(tag) == Some(want),
                format!(
                    "{}: rank {tag} = {:?}, want {want}",
                    case.name(),
                    r.rank_of(tag)
                ),
            )?;
        }
        ensure(
            r.nodes.len() == ranks.len(),
            format!("{}: {} nodes", case.name(), r.nodes.len()),
        )?;
        ensure(
            took < FUSION_LIMIT,
            format!("{}: took {took:?}", case.name()),
        )?;
        detail.push(format!("{} dim {} in {:.0?}", case.name(), r.dim, took));
    }
    let (code, out) = easycat(&["fusion", "--case", "b3plus"]);
    ensure(code == 0, format!("fusion exit {code}"))?;
    ensure(
        out.trim_end().ends_with("dim = 14 (expected 14) OK"),
        "CLI output does not end with the dimension line",
    )?;
    let (code, out) = easycat(&["fusion", "--case", "o2plus", "--report", "json"]);
    let checks: Value = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    ensure(
        code == 0
            && checks
                .as_array()
                .is_some_and(|a| a.iter().all(|c| c["match"] == true)),
        "o2plus report has a mismatch",
    )?;
    Ok(detail.join(", "))
}

fn oracle_agreement() -> Check {
    let mut detail = Vec::new();
    for case in FusionCase::ALL {
        let start = Instant::now();
        let r = fusion_report(case).map_err(|e| e.to_string())?;
        let took = start.elapsed();
        for (i, o) in r.oracle.iter().enumerate() {
            ensure(
                o.contained,
                format!("{} {}: image not contained", case.name(), r.nodes[i]),
            )?;
            ensure(
                o.value == r.ranks[i] as i64,
                format!(
                    "{} {}: oracle {} vs {}",
                    case.name(),
                    r.nodes[i],
                    o.value,
                    r.ranks[i]
                ),
            )?;
        }
        ensure(
            took < FUSION_LIMIT,
            format!("{}: took {took:?}", case.name()),
        )?;
        detail.push(format!("{} {} nodes", case.name(), r.nodes.len()));
    }
    Ok(detail.join(", "))
}

fn colinearity() -> Check {
    let mut detail = Vec::new();
    for (case, want) in [
        (FusionCase::O2Plus, (8, 10)),
        (FusionCase::B3Plus, (13, 14)),
    ] {
        let b = colinearity_bound(case).map_err(|e| e.to_string())?;
        let got = (b.upper_bound, b.reference_dim);
        ensure(got == want, format!("{}: {got:?} != {want:?}", case.name()))?;
        ensure(
            b.without_colinearity as u64 >= b.reference_dim,
            format!(
                "{}: bound without colinearity is below the dimension",
                case.name()
            ),
        )?;
        detail.push(format!("{} {got:?}", case.name()));
    }
    Ok(detail.join(", "))
}

fn rank_law() -> Check {
    let start = Instant::now();
    let corpus = random_corpus(DEFAULT_SEED, CORPUS_SIZE, MAX_POINTS);
    let mut count = 0;
    for n in [2u32, 3] {
        for p in &corpus {
            let r = tp_matrix(p, n).map_err(|e| e.to_string())?.rank();
            let want = (n as usize).pow(p.tb() as u32);
            ensure(r == want, format!("{p} at N={n}: rank {r}, want {want}"))?;
            count += 1;
        }
    }
    let took = start.elapsed();
    ensure(count >= 200, format!("only {count} instances"))?;
    ensure(took < RANK_LIMIT, format!("took {took:?}"))?;
    Ok(format!("{count} instances"))
}

fn decomposition() -> Check {
    let corpus = random_corpus(DEFAULT_SEED ^ 0xdec, CORPUS_SIZE, MAX_POINTS);
    for n in [2u32, 3] {
        for p in &corpus {
            support::check_decomposition(p, n).map_err(|e| format!("{p} at N={n}: {e}"))?;
        }
    }
    support::check_eq1_fibres(3)?;
    Ok(format!(
        "{} partitions at N=2,3, running example at N=3",
        corpus.len()
    ))
}

fn composition_fixture() -> Check {
    let p = support::eq1();
    let (pp, _) = compose(&p, &p.involution()).map_err(|e| e.to_string())?;
    let blocks: Vec<String> = pp.blocks().iter().map(|b| b.to_string()).collect();
    let mut sorted = blocks.clone();
    sorted.sort();
    ensure(
        sorted == ["{L1}", "{U1}", "{U2,U3,L2,L3}"],
        format!("blocks {blocks:?}"),
    )?;
    ensure(
        pp.upper_colours() == p.lower_colours() && pp.lower_colours() == p.lower_colours(),
        "colour words",
    )?;
    let (code, out) = easycat(&["op", "compose", &p.to_text(), &p.involution().to_text()]);
    ensure(
        code == 0 && out.lines().next() == Some(pp.to_text().as_str()),
        format!("CLI gave {out:?}"),
    )?;
    Ok(format!("{pp}"))
}

fn relation_fixtures() -> Check {
    let pair = support::pair_wb();
    let vector: Vec<String> = emit_sp_vector(&pair, 3)
        .map_err(|e| e.to_string())?
        .iter()
        .map(|r| r.to_text())
        .collect();
    ensure(
        vector == ["1 = x(1)x(1)* + x(2)x(2)* + x(3)x(3)*"],
        format!("vector relations {vector:?}"),
    )?;
    for n in [2, 3, 4] {
        let got = support::texts(&emit_sp_matrix(&pair, n, 2).map_err(|e| e.to_string())?);
        ensure(
            got == support::delta_family(n, 2),
            format!("delta family at N={n}: {got:?}"),
        )?;
    }
    let mut families = 0;
    for (n, d) in [(3, 1), (3, 2), (3, 3)] {
        let got =
            support::texts(&emit_sp_matrix(&support::eq1(), n, d).map_err(|e| e.to_string())?);
        let want = support::eq1_families(n, d);
        ensure(
            got == want,
            format!("three families at N={n}, d={d} differ"),
        )?;
        families += want.len();
    }
    let (code, out) = easycat(&[
        "relations",
        "- / oA *A",
        "--n",
        "3",
        "--d",
        "1",
        "--family",
        "sp",
        "--format",
        "text",
    ]);
    ensure(
        code == 0 && out == "1 = x(1,1)x(1,1)* + x(2,1)x(2,1)* + x(3,1)x(3,1)*\n",
        format!("CLI gave {out:?}"),
    )?;
    Ok(format!("{families} relations in the three families"))
}

fn classical_soundness() -> Check {
    let start = Instant::now();
    let mut detail = Vec::new();
    let runs = [
        (Suite::Sn, 3, None),
        (Suite::Sn, 4, None),
        (Suite::Hn, 2, Some(8)),
        (Suite::Hn, 3, Some(100)),
        (Suite::Rotations, 2, Some(100)),
    ];
    for (suite, n, elements) in runs {
        let cfg = SuiteConfig::new(n);
        let o = run_suite(suite, &cfg).map_err(|e| e.to_string())?;
        let name = format!("{} N={n}", suite.name());
        ensure(o.passed(), format!("{name}: {o}"))?;
        let tolerance = if suite == Suite::Rotations {
            ROTATION_TOLERANCE
        } else {
            0.0
        };
        ensure(
            o.max_residual <= tolerance,
            format!("{name}: residual {:e}", o.max_residual),
        )?;
        if let Some(e) = elements {
            ensure(o.elements == e, format!("{name}: {} elements", o.elements))?;
        }
        ensure(
            o.partitions == CORPUS_SIZE,
            format!("{name}: {} partitions", o.partitions),
        )?;
        detail.push(format!("{name} {} relations", o.relations));
    }
    let took = start.elapsed();
    ensure(took < SOUNDNESS_LIMIT, format!("took {took:?}"))?;
    Ok(detail.join(", "))
}

fn coaction_shadow() -> Check {
    let o = run_suite(Suite::CoactionShadow, &SuiteConfig::new(3)).map_err(|e| e.to_string())?;
    ensure(o.passed() && o.max_residual == 0.0, format!("{o}"))?;
    ensure(o.elements == 400, format!("{} group elements", o.elements))?;
    Ok(format!(
        "{} relations, {} evaluations",
        o.relations, o.evaluations
    ))
}

fn blockstability() -> Check {
    let start = Instant::now();
    let mut detail = Vec::new();
    for (name, stable) in [
        ("H_loc(2,2)", true),
        ("Hp_loc", true),
        ("O_loc", true),
        ("B_loc(1,1)", true),
        ("S_loc(2,2)", false),
    ] {
        let g = name
            .parse::<Preset>()
            .and_then(|p| p.generators())
            .map_err(|e| e.to_string())?;
        let c = generate_closure(&g, 6).map_err(|e| e.to_string())?;
        let v = c.blockstability();
        ensure(v.is_stable() == stable, format!("{name}: {v}"))?;
        if let BlockVerdict::Witness {
            partition,
            block,
            restricted,
        } = &v
        {
            ensure(
                c.index_of(partition).is_some() && c.index_of(restricted).is_none(),
                format!("{name}: witness is not genuine"),
            )?;
            ensure(
                &partition.block_restrict(block).map_err(|e| e.to_string())? == restricted,
                format!("{name}: witness restriction differs"),
            )?;
        }
        detail.push(format!(
            "{name} {}",
            if stable { "stable" } else { "witness" }
        ));
    }
    let took = start.elapsed();
    ensure(took < BLOCKSTABILITY_LIMIT, format!("took {took:?}"))?;
    Ok(detail.join(", "))
}

fn separation() -> Check {
    let r = separation_report(2).map_err(|e| e.to_string())?;
    ensure(r.first_columns_agree, "first-column sets differ")?;
    ensure(!r.pairs_agree, "column-pair sets agree")?;
    ensure(
        r.separating_pair == Some((vec![1, 0], vec![0, -1])),
        format!("separating pair {:?}", r.separating_pair),
    )?;
    Ok("(e_1, -e_2) separates".into())
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 11] = [
        ("fusion dimensions", fusion_dimensions),
        (
            "rank recursion agrees with the subspace oracle",
            oracle_agreement,
        ),
        ("colinearity bounds", colinearity),
        ("rank of T_p is N^tb", rank_law),
        ("decomposition fibres", decomposition),
        ("composition with the adjoint", composition_fixture),
        ("relation fixtures", relation_fixtures),
        ("classical soundness", classical_soundness),
        ("coaction shadow", coaction_shadow),
        ("blockstability at bound 6", blockstability),
        ("first-column separation", separation),
    ];
    let mut failed = Vec::new();
    for (i, (title, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let took = start.elapsed();
        match &result {
            Ok(detail) => println!("criterion {:>2} PASS {title} ({took:.2?}): {detail}", i + 1),
            Err(why) => {
                println!("criterion {:>2} FAIL {title} ({took:.2?}): {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

#[test]
fn partitions_parse_for_fixtures() {
    assert_eq!(support::eq1().to_text(), "oA oA *B / *C *B oB");
    assert!("- / oA *A".parse::<Partition>().is_ok());
}
