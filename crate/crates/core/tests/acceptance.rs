//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails. Criteria 1-6 go through the command-line binary.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use fatstair::sweep::{self, SweepReport};
use fatstair::{Execution, Partition, SchurExpansion};

fn cli(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_fatstair"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("utf-8 output"),
    )
}

fn expansion(terms: &[&[usize]]) -> SchurExpansion {
    SchurExpansion::from_terms(
        terms
            .iter()
            .map(|t| (Partition::new(t.to_vec()).unwrap(), 1)),
    )
    .unwrap()
}

fn expand(args: &[&str]) -> Result<SchurExpansion, String> {
    let mut full = vec!["expand"];
    full.extend_from_slice(args);
    let (code, out) = cli(&full);
    if code != 0 {
        return Err(format!("expand exited with {code}"));
    }
    out.trim().parse().map_err(|e| format!("{e}"))
}

fn expect_expansion(args: &[&str], want: &[&[usize]]) -> Result<(), String> {
    let got = expand(args)?;
    if got == expansion(want) {
        Ok(())
    } else {
        Err(format!("expand {args:?} gave {got}"))
    }
}

fn line_value<'a>(out: &'a str, key: &str) -> Option<&'a str> {
    out.lines().find_map(|l| l.strip_prefix(key)).map(str::trim)
}

fn clean(reports: &[SweepReport]) -> Result<String, String> {
    let mut notes = Vec::new();
    for r in reports {
        if !r.is_clean() {
            let first = r.failures().next().expect("has a failure");
            return Err(format!("{}; first: {} {}", r.summary(), first.instance, first.detail));
        }
        notes.push(format!("{} {}", r.name, r.outcomes.len()));
    }
    Ok(notes.join(", "))
}

fn criterion_1() -> Result<String, String> {
    expect_expansion(
        &["3,3,2,2,1,1/2"],
        &[&[3, 3, 2, 1, 1], &[3, 2, 2, 2, 1], &[3, 2, 2, 1, 1, 1]],
    )?;
    Ok("three terms".into())
}

fn criterion_2() -> Result<String, String> {
    let d = "4,3,3,3,3,3,3/2,2,2,1,1";
    expect_expansion(
        &[d],
        &[&[4, 3, 2, 2, 1, 1, 1], &[3, 3, 3, 2, 1, 1, 1], &[3, 3, 2, 2, 2, 1, 1]],
    )?;
    let (code, out) = cli(&["classify", d]);
    let want = "1*^^3,2,1,1 + 1*^^3,1,3 + 1*^^2,3,2";
    if code != 0 || out.lines().next() != Some("is_sum") || line_value(&out, "decomposition:") != Some(want) {
        return Err(format!("classify gave {out:?}"));
    }
    Ok("expansion and decomposition".into())
}

fn criterion_3() -> Result<String, String> {
    expect_expansion(
        &["3,3,3,2,2,2,1,1,1/1,1"],
        &[
            &[3, 3, 3, 2, 2, 2, 1],
            &[3, 3, 3, 2, 2, 1, 1, 1],
            &[3, 3, 3, 2, 1, 1, 1, 1, 1],
            &[3, 3, 2, 2, 2, 2, 1, 1],
            &[3, 3, 2, 2, 2, 1, 1, 1, 1],
            &[3, 2, 2, 2, 2, 2, 1, 1, 1],
        ],
    )?;
    Ok("six terms".into())
}

fn criterion_4() -> Result<String, String> {
    let d = "2,2,2,2,1/1,1";
    expect_expansion(
        &[d, "--foundation", "2,2", "--k", "1"],
        &[
            &[3, 3, 2, 2, 1],
            &[3, 3, 2, 1, 1, 1],
            &[3, 3, 1, 1, 1, 1, 1],
            &[3, 2, 2, 2, 2],
            &[3, 2, 2, 2, 1, 1],
            &[3, 2, 2, 1, 1, 1, 1],
            &[2, 2, 2, 2, 2, 1],
            &[2, 2, 2, 2, 1, 1, 1],
        ],
    )?;
    let (code, out) = cli(&["verify-theorem5", "--theorem", "sumoffat", d, "--foundation", "2,2", "--k", "1"]);
    let want = expansion(&[&[3, 3, 2, 2, 1], &[3, 3, 2, 1, 1, 1], &[3, 2, 2, 2, 1, 1]]);
    let diff: Option<SchurExpansion> = line_value(&out, "difference:").and_then(|s| s.parse().ok());
    if code != 0 || diff != Some(want) || out.lines().last() != Some("positive") {
        return Err(format!("inequality check gave {out:?}"));
    }
    Ok("eight terms, difference of three, positive".into())
}

fn criterion_5() -> Result<String, String> {
    let (code, out) = cli(&[
        "verify-theorem5",
        "--theorem",
        "sumofdiff",
        "4,3,3,3,3,3,3/2,2,2,1,1",
        "--foundation",
        "3",
    ]);
    let want = expansion(&[&[5, 4, 3, 2, 1, 1, 1], &[5, 4, 2, 2, 2, 1, 1], &[5, 4, 2, 2, 1, 1, 1, 1]]);
    let diff: Option<SchurExpansion> = line_value(&out, "outer - middle:").and_then(|s| s.parse().ok());
    let identity = line_value(&out, "identity difference:");
    if code != 0 || diff != Some(want) || identity != Some("0") || out.lines().last() != Some("positive") {
        return Err(format!("difference check gave {out:?}"));
    }
    Ok("outer-middle exact, both inequalities, identity zero".into())
}

fn criterion_6() -> Result<String, String> {
    let mut notes = Vec::new();
    for (theorem, max) in [("rowcut", "7"), ("colcut", "6")] {
        let (code, out) = cli(&["sweep", "--theorem", theorem, "--max-size", max]);
        let summary = out.lines().last().unwrap_or_default().to_string();
        if code != 0 || !summary.contains(" 0 failures") {
            return Err(format!("{theorem}: {summary}"));
        }
        notes.push(summary);
    }
    Ok(notes.join("; "))
}

fn criterion_7() -> Result<String, String> {
    let e = Execution::Auto;
    clean(&[
        sweep::rotation(10, e),
        sweep::direct_sum(9, e),
        sweep::rectangle_complement(16, e),
        sweep::pieri(9, e),
        sweep::lr_symmetry(8, e),
        sweep::distinct_columns(10, e),
        sweep::two_column(12, e),
        sweep::foundation_first_row(5, 5, e),
        sweep::foundation_join(5, 5, e),
    ])
}

fn criterion_8() -> Result<String, String> {
    let e = Execution::Auto;
    clean(&[sweep::transpose(5, 4, e), sweep::sum_of_fat(8, 4, e)])
}

fn main() -> ExitCode {
    type Check = fn() -> Result<String, String>;
    let criteria: [(u32, Check, Duration); 8] = [
        (1, criterion_1, Duration::from_secs(1)),
        (2, criterion_2, Duration::from_secs(5)),
        (3, criterion_3, Duration::from_secs(10)),
        (4, criterion_4, Duration::from_secs(10)),
        (5, criterion_5, Duration::from_secs(60)),
        (6, criterion_6, Duration::from_secs(600)),
        (7, criterion_7, Duration::from_secs(900)),
        (8, criterion_8, Duration::from_secs(900)),
    ];
    let mut failed = 0;
    for (n, check, limit) in criteria {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        let verdict = match result {
            Ok(note) if took <= limit => format!("PASS ({note})"),
            Ok(note) => format!("FAIL (over the {limit:?} limit; {note})"),
            Err(why) => format!("FAIL ({why})"),
        };
        if verdict.starts_with("FAIL") {
            failed += 1;
        }
        println!("criterion {n}: {verdict} [{:.3}s]", took.as_secs_f64());
    }
    println!("acceptance: {} of 8 criteria passed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
