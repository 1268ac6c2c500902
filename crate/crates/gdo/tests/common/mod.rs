//! Golden command lines shared by the CLI tests and the acceptance run.
#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

pub fn gdo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gdo"))
        .args(args)
        .output()
        .expect("binary runs")
}

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

pub const GOLDEN: &[(&str, &[&str])] = &[
    (
        "qnum_quantum.json",
        &["qnum", "--preset", "quantum", "--q", "2", "--n", "0..4"],
    ),
    (
        "qnum_exact.csv",
        &[
            "--mode", "exact", "qnum", "--preset", "quantum", "--q", "1/2", "--n", "-2..3",
            "--output", "csv",
        ],
    ),
    (
        "classify_tamm_dancoff.json",
        &[
            "classify",
            "--preset",
            "tamm-dancoff",
            "--q",
            "0.5",
            "--lambda0",
            "0",
        ],
    ),
    (
        "classify_strange.json",
        &[
            "--mode",
            "exact",
            "classify",
            "--q",
            "2",
            "--alpha",
            "1",
            "--beta",
            "0",
            "--gamma",
            "0",
            "--lambda0",
            "1",
        ],
    ),
    (
        "lambda_arik_coon.csv",
        &[
            "lambda",
            "--preset",
            "arik-coon",
            "--q",
            "1/2",
            "--lambda0",
            "1",
            "--n",
            "-3..3",
            "--output",
            "csv",
        ],
    ),
    (
        "matrix_q_fock.json",
        &["matrix", "--preset", "quantum", "--q", "2", "--dim", "4"],
    ),
    (
        "verify_restricted.json",
        &[
            "--mode",
            "exact",
            "verify",
            "--preset",
            "restricted",
            "--q",
            "3/2",
            "--dim",
            "6",
        ],
    ),
    (
        "hopf_restricted.json",
        &["hopf", "--preset", "restricted", "--q", "2", "--dim", "4"],
    ),
    (
        "sweep_quantum.json",
        &[
            "sweep",
            "--preset",
            "quantum",
            "--q-list",
            "0.5,2",
            "--lambda0-list",
            "0,3",
        ],
    ),
];

/// Inputs documented to fail, with the exit status each must produce.
pub const FAILURES: &[(&[&str], i32)] = &[
    (&["qnum", "--preset", "quantum", "--q", "two"], 2),
    (
        &[
            "--mode", "exact", "qnum", "--preset", "quantum", "--q", "1/2", "--alpha", "0.7",
        ],
        2,
    ),
    (&["qnum", "--preset", "nonexistent", "--q", "2"], 2),
    (
        &[
            "classify",
            "--preset",
            "quantum",
            "--q",
            "2",
            "--lambda0",
            "-1",
        ],
        2,
    ),
    (
        &["--tol", "0", "classify", "--preset", "quantum", "--q", "2"],
        2,
    ),
    (&["bogus-subcommand"], 2),
    (&["classify", "--preset", "quantum", "--q", "1"], 3),
    (&["matrix", "--preset", "quantum", "--q", "1"], 3),
    (
        &[
            "matrix",
            "--preset",
            "arik-coon",
            "--q",
            "2",
            "--family",
            "strange",
        ],
        4,
    ),
    (
        &[
            "matrix",
            "--preset",
            "quantum",
            "--q",
            "2",
            "--family",
            "two-param",
        ],
        4,
    ),
    (
        &[
            "hopf", "--q", "2", "--alpha", "1", "--beta", "0", "--gamma", "2",
        ],
        4,
    ),
    (
        &["hopf", "--preset", "restricted", "--q", "2", "--alpha", "0"],
        5,
    ),
    (&["hopf", "--preset", "restricted", "--q", "1"], 5),
    (
        &[
            "hopf", "--q", "2", "--alpha", "1", "--beta", "0", "--gamma", "-2",
        ],
        5,
    ),
    (
        &[
            "--tol",
            "1e-30",
            "matrix",
            "--q",
            "2",
            "--alpha",
            "1",
            "--beta",
            "0",
            "--gamma",
            "0",
            "--lambda0",
            "1",
        ],
        6,
    ),
];

/// Runs every golden command; returns the names whose output differs.
pub fn golden_mismatches() -> Vec<String> {
    let bless = std::env::var_os("GDO_BLESS").is_some();
    let mut bad = Vec::new();
    for (name, args) in GOLDEN {
        let out = gdo(args);
        if out.status.code() != Some(0) {
            bad.push(format!("{name} (exit {:?})", out.status.code()));
            continue;
        }
        if bless {
            std::fs::write(fixture(name), &out.stdout).expect("fixture written");
        } else if std::fs::read(fixture(name)).ok().as_deref() != Some(&out.stdout[..]) {
            bad.push(name.to_string());
        }
    }
    bad
}

/// Runs every documented failure; returns `(args, got)` for wrong statuses.
pub fn exit_code_mismatches() -> Vec<(String, Option<i32>)> {
    FAILURES
        .iter()
        .filter_map(|(args, code)| {
            let got = gdo(args).status.code();
            (got != Some(*code)).then(|| (args.join(" "), got))
        })
        .collect()
}
