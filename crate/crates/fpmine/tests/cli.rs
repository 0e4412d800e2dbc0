// Copyright 2026 The fpmine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn fpmine(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fpmine"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn workdir() -> TempDir {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("data.txt"),
        "# groceries\nbread milk\nbread diaper beer eggs\nmilk diaper beer cola\nbread milk diaper beer\nbread milk diaper cola\n",
    )
    .unwrap();
    std::fs::write(dir.path().join("tax.txt"), "beer\tdrink\ncola\tdrink\n").unwrap();
    std::fs::write(
        dir.path().join("timed.txt"),
        "0 | a b\n1 | a b c\n2 | a\n3 | a b\n4 | b c\n5 | a b c\n",
    )
    .unwrap();
    dir
}

#[test]
fn mine_prints_sorted_patterns_and_summary() {
    let dir = workdir();
    let out = fpmine(dir.path(), &["mine", "--minsup", "3", "data.txt"]);
    assert_eq!(
        stdout(&out),
        "beer #SUP: 3\nbeer diaper #SUP: 3\nbread #SUP: 4\nbread diaper #SUP: 3\nbread milk #SUP: 3\n\
         diaper #SUP: 4\ndiaper milk #SUP: 3\nmilk #SUP: 4\n"
    );
    let summary = String::from_utf8_lossy(&out.stderr);
    assert!(summary.starts_with("fpgrowth: 8 patterns"), "{summary}");
    assert!(summary.contains("peak tree nodes"), "{summary}");
}

#[test]
fn fraction_threshold_rounds_up() {
    let dir = workdir();
    let by_fraction = stdout(&fpmine(
        dir.path(),
        &["mine", "--minsup", "0.5", "data.txt"],
    ));
    let by_count = stdout(&fpmine(dir.path(), &["mine", "--minsup", "3", "data.txt"]));
    assert_eq!(by_fraction, by_count);
}

#[test]
fn every_static_algorithm_agrees_without_taxonomy() {
    let dir = workdir();
    let reference = stdout(&fpmine(
        dir.path(),
        &["mine", "--minsup", "2", "--algo", "apriori", "data.txt"],
    ));
    for algo in ["fpgrowth", "bu-fptax", "td-fptax"] {
        for extra in [None, Some("--parallel")] {
            let mut args = vec!["mine", "--minsup", "2", "--algo", algo, "data.txt"];
            args.extend(extra);
            assert_eq!(stdout(&fpmine(dir.path(), &args)), reference, "{algo}");
        }
    }
}

#[test]
fn rules_and_side_files() {
    let dir = workdir();
    let out = fpmine(
        dir.path(),
        &[
            "mine",
            "--minsup",
            "3",
            "--minconf",
            "0.8",
            "-o",
            "p.txt",
            "--encode",
            "data.txt",
        ],
    );
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let rules = std::fs::read_to_string(dir.path().join("p.txt.rules")).unwrap();
    assert_eq!(rules, "beer => diaper #SUP: 3 #CONF: 1.0000\n");
    let encoded = std::fs::read_to_string(dir.path().join("p.txt.encoded")).unwrap();
    assert!(encoded.starts_with("#ENCODED v1\n"));
    assert_eq!(encoded.lines().filter(|l| l.contains(':')).count(), 5);

    let csv = fpmine(
        dir.path(),
        &[
            "mine",
            "--minsup",
            "3",
            "--minconf",
            "0.75",
            "--format",
            "csv",
            "-o",
            "p.csv",
            "data.txt",
        ],
    );
    assert!(csv.status.success());
    let rules = std::fs::read_to_string(dir.path().join("p.csv.rules.csv")).unwrap();
    assert!(rules.starts_with("antecedent=>consequent,support,confidence\n"));
    assert!(rules.contains("\nbread=>diaper,3,0.7500\n"), "{rules}");
}

#[test]
fn closed_drops_subsumed_patterns() {
    let dir = workdir();
    let all = stdout(&fpmine(dir.path(), &["mine", "--minsup", "3", "data.txt"]));
    let closed = stdout(&fpmine(
        dir.path(),
        &["mine", "--minsup", "3", "--closed", "data.txt"],
    ));
    assert!(!closed.contains("beer #SUP: 3\n"));
    assert!(closed.contains("beer diaper #SUP: 3\n"));
    assert!(closed.lines().all(|l| all.lines().any(|a| a == l)));
}

#[test]
fn generalized_patterns_use_ancestors() {
    let dir = workdir();
    let out = stdout(&fpmine(
        dir.path(),
        &[
            "mine",
            "--algo",
            "bu-fptax",
            "--taxonomy",
            "tax.txt",
            "--minsup",
            "4",
            "data.txt",
        ],
    ));
    assert!(out.contains("drink #SUP: 4\n"), "{out}");
    assert!(out.contains("diaper drink #SUP: 4\n"), "{out}");
    let td = stdout(&fpmine(
        dir.path(),
        &[
            "mine",
            "--algo",
            "td-fptax",
            "--taxonomy",
            "tax.txt",
            "--minsup",
            "4",
            "data.txt",
        ],
    ));
    assert_eq!(out, td);
}

#[test]
fn tree_dump() {
    let dir = workdir();
    std::fs::write(dir.path().join("small.txt"), "a b\na\nb c\n").unwrap();
    let out = fpmine(
        dir.path(),
        &["mine", "--minsup", "1", "--dump-tree", "t.txt", "small.txt"],
    );
    assert!(out.status.success());
    let dump = std::fs::read_to_string(dir.path().join("t.txt")).unwrap();
    assert_eq!(dump, "a:2\n  b:1\nb:1\n  c:1\n");
}

#[test]
fn temporal_outputs() {
    let dir = workdir();
    let args = [
        "mine",
        "--algo",
        "anti-fpgrowth",
        "--interval-width",
        "3",
        "--minsup",
        "2",
        "--minconf",
        "0.6",
        "--format",
        "csv",
        "-o",
        "t.csv",
        "timed.txt",
    ];
    assert!(fpmine(dir.path(), &args).status.success());
    let report = std::fs::read_to_string(dir.path().join("t.csv")).unwrap();
    assert!(report.starts_with("itemset,interval_start,interval_end,support,frequent\n"));
    assert!(report.contains("\na b,0,3,2,true\n"), "{report}");
    assert!(report.contains("\nb c,0,3,1,false\n"), "{report}");
    let rules = std::fs::read_to_string(dir.path().join("t.csv.rules.csv")).unwrap();
    assert!(rules.starts_with("antecedent=>consequent,span_start,span_end,support,confidence\n"));
    assert!(rules.contains("\nb=>a,0,6,4,0.8000\n"), "{rules}");
    assert!(rules.contains("\nc=>b,3,6,2,1.0000\n"), "{rules}");
    assert!(rules.contains("\na=>b,0,6,4,0.8000\n"), "{rules}");

    let text = stdout(&fpmine(
        dir.path(),
        &[
            "mine",
            "--algo",
            "anti-fpgrowth",
            "--interval-width",
            "3",
            "--minsup",
            "2",
            "timed.txt",
        ],
    ));
    assert!(text.starts_with("# interval [0,3)\n"), "{text}");
    assert!(text.contains("# interval [3,6)\n"));
    assert!(
        text.contains("# common\na #SUP: 2\na b #SUP: 2\nb #SUP: 2\n"),
        "{text}"
    );
}

#[test]
fn usage_errors_exit_2() {
    let dir = workdir();
    let cases: &[&[&str]] = &[
        &[
            "mine",
            "--algo",
            "apriori",
            "--taxonomy",
            "tax.txt",
            "--minsup",
            "2",
            "data.txt",
        ],
        &[
            "mine",
            "--algo",
            "anti-fpgrowth",
            "--minsup",
            "2",
            "timed.txt",
        ],
        &["mine", "--interval-width", "3", "--minsup", "2", "data.txt"],
        &[
            "mine",
            "--algo",
            "anti-fpgrowth",
            "--interval-width",
            "0",
            "--minsup",
            "2",
            "timed.txt",
        ],
        &["mine", "--minsup", "0", "data.txt"],
        &["mine", "--minsup", "1.5", "data.txt"],
        &["mine", "--minsup", "2", "--minconf", "2", "data.txt"],
        &["mine", "--minsup", "2", "--encode", "data.txt"],
        &["mine", "--algo", "nope", "--minsup", "2", "data.txt"],
        &["gen", "--items", "5", "--avg-len", "6"],
        &["bench", "data.txt", "--sweep", "x"],
    ];
    for args in cases {
        assert_eq!(fpmine(dir.path(), args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn data_errors_exit_3() {
    let dir = workdir();
    std::fs::write(dir.path().join("cycle.txt"), "beer\tdrink\ndrink\tbeer\n").unwrap();
    std::fs::write(dir.path().join("empty.txt"), "# nothing\n").unwrap();
    let cases: &[&[&str]] = &[
        &["mine", "--minsup", "2", "missing.txt"],
        &[
            "mine",
            "--algo",
            "bu-fptax",
            "--taxonomy",
            "cycle.txt",
            "--minsup",
            "2",
            "data.txt",
        ],
        &["mine", "--temporal", "--minsup", "2", "data.txt"],
        &["mine", "--minsup", "0.5", "empty.txt"],
    ];
    for args in cases {
        let out = fpmine(dir.path(), args);
        assert_eq!(out.status.code(), Some(3), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn gen_is_deterministic_per_seed() {
    let dir = workdir();
    let args = [
        "gen",
        "--items",
        "10",
        "--transactions",
        "100",
        "--avg-len",
        "4",
        "--seed",
        "7",
    ];
    let a = stdout(&fpmine(dir.path(), &args));
    let b = stdout(&fpmine(dir.path(), &args));
    assert_eq!(a, b);
    assert_eq!(a.lines().count(), 100);
    let mut other = args;
    other[8] = "8";
    assert_ne!(a, stdout(&fpmine(dir.path(), &other)));
    let timed = stdout(&fpmine(
        dir.path(),
        &["gen", "--temporal", "--transactions", "20"],
    ));
    assert!(timed.lines().all(|l| l.contains(" | ")));
}

#[test]
fn encode_matches_mine_side_file() {
    let dir = workdir();
    let enc = stdout(&fpmine(dir.path(), &["encode", "data.txt"]));
    assert!(fpmine(
        dir.path(),
        &["mine", "--minsup", "2", "--encode", "-o", "p.txt", "data.txt"]
    )
    .status
    .success());
    assert_eq!(
        enc,
        std::fs::read_to_string(dir.path().join("p.txt.encoded")).unwrap()
    );
}

#[test]
fn bench_counts_match_mine() {
    let dir = workdir();
    let csv = stdout(&fpmine(
        dir.path(),
        &[
            "bench",
            "data.txt",
            "--sweep",
            "2,0.6",
            "--algo",
            "apriori,fpgrowth,td-fptax",
        ],
    ));
    let (table, sizes) = csv.split_once("\n\n").expect("size section");
    let rows: Vec<Vec<&str>> = table
        .lines()
        .skip(1)
        .map(|l| l.split(',').collect())
        .collect();
    assert_eq!(rows.len(), 6);
    for row in &rows {
        let mined = stdout(&fpmine(
            dir.path(),
            &["mine", "--minsup", row[1], "--algo", row[0], "data.txt"],
        ));
        assert_eq!(row[3], mined.lines().count().to_string(), "{row:?}");
    }
    assert!(sizes.starts_with("layout,bytes\nraw_listing,"));
    assert_eq!(sizes.lines().count(), 5);

    let empty = stdout(&fpmine(dir.path(), &["bench", "data.txt", "--sweep", ""]));
    assert_eq!(empty.lines().count(), 1);
    assert!(empty.starts_with("algorithm,minsup,"));
}

#[test]
fn bench_generates_when_no_input() {
    let dir = workdir();
    let csv = stdout(&fpmine(
        dir.path(),
        &[
            "bench",
            "--items",
            "8",
            "--transactions",
            "200",
            "--avg-len",
            "3",
            "--sweep",
            "0.1",
        ],
    ));
    assert_eq!(
        csv.lines()
            .filter(|l| l.starts_with("fpgrowth,0.1,20,"))
            .count(),
        1,
        "{csv}"
    );
}
