//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::process::Command;
use std::time::Instant;

use h4_cli::dump::OBJECTS;
use h4_cli::{run_checks, select, CheckReport, Context, Status};

const CRITERIA: &[(u32, &str, &[&str])] = &[
    (1, "600-cell census 120/720/1200/600", &["facts/fact1"]),
    (
        2,
        "25 24-cells, 75 16-cells, 75 8-cells, unique homes",
        &["facts/fact2"],
    ),
    (
        3,
        "exactly 10 Schoute partitions, the array rows and columns",
        &["facts/fact5"],
    ),
    (
        4,
        "Aut(H) 14400, rotations 7200, stabilizers 120 and 576 with orbit signatures",
        &["facts/fact3", "facts/fact4"],
    ),
    (
        5,
        "partition action kernel {±1}, image 7200, label of 1, 60 even labels",
        &["facts/fact6", "facts/fact7"],
    ),
    (
        6,
        "200 hexagons in 100 pairs, 72 decagons in 36 pairs, edges, pentagons",
        &["s4/hexagons", "s4/decagons"],
    ),
    (
        7,
        "m = -1 and m = +1 embeddings certify E8, orthogonality of v and phi v",
        &["s6/example1"],
    ),
    (
        8,
        "lattice L census, determinant 625, even and rootless",
        &["s6/example2"],
    ),
    (
        9,
        "norm 4 shell 2160 = 120 + 120 + 600 + 600 + 720 with matching spectra",
        &["s6/example3"],
    ),
    (
        10,
        "Phi relations, 85 points, 357 lines, 85 planes, Q_w values and trace",
        &[
            "s7/phi",
            "s7/points",
            "s7/lines",
            "s7/planes",
            "s7/qomega",
            "facts/fact10",
        ],
    ),
    (
        11,
        "270 singular 4-spaces, row and column pentads meet in cell points, 28 common-disjoint, completions {5, 9}",
        &["s5/pentads"],
    ),
];

fn failures(reports: &[CheckReport]) -> Vec<String> {
    let mut out = Vec::new();
    for r in reports.iter().filter(|r| r.status == Status::Fail) {
        if let Some(e) = &r.error {
            out.push(format!("{}: {e}", r.id));
        }
        for o in r.observations.iter().filter(|o| o.status == Status::Fail) {
            out.push(format!(
                "{}: {} expected {} observed {}",
                r.id, o.name, o.expected, o.observed
            ));
        }
    }
    out
}

fn dumps(threads: usize) -> Result<Vec<Vec<u8>>, String> {
    let exe = env!("CARGO_BIN_EXE_h4verify");
    OBJECTS
        .iter()
        .map(|o| {
            let out = Command::new(exe)
                .args(["--threads", &threads.to_string(), "dump", o])
                .output()
                .map_err(|e| format!("{o}: {e}"))?;
            if out.status.success() {
                Ok(out.stdout)
            } else {
                Err(format!("{o}: exit {:?}", out.status.code()))
            }
        })
        .collect()
}

fn determinism() -> Result<(), String> {
    let first = dumps(1)?;
    for threads in [1, 4] {
        if dumps(threads)? != first {
            return Err(format!("dump output differs with {threads} threads"));
        }
    }
    Ok(())
}

fn main() {
    let ctx = Context::new();
    let mut failed = 0;
    for &(n, what, ids) in CRITERIA {
        let start = Instant::now();
        let patterns: Vec<String> = ids.iter().map(|s| s.to_string()).collect();
        let problems = match select(&patterns) {
            Ok(checks) => failures(&run_checks(&ctx, &checks)),
            Err(e) => vec![e.to_string()],
        };
        let ms = start.elapsed().as_millis();
        if problems.is_empty() {
            println!("criterion {n:>2}: PASS  {what} ({ms} ms)");
        } else {
            failed += 1;
            println!("criterion {n:>2}: FAIL  {what}");
            for p in problems {
                println!("    {p}");
            }
        }
    }
    let start = Instant::now();
    let what = "dump outputs byte-identical across runs and thread counts";
    match determinism() {
        Ok(()) => println!(
            "criterion 12: PASS  {what} ({} ms)",
            start.elapsed().as_millis()
        ),
        Err(e) => {
            failed += 1;
            println!("criterion 12: FAIL  {what}\n    {e}");
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all 12 criteria passed");
}
