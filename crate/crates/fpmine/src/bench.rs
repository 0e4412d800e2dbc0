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

//! Minsup sweeps and serialized-size comparisons.

use fpmine_core::encoding::encode_db;
use fpmine_core::temporal::global_codebook;
use fpmine_core::{SupportThreshold, Taxonomy, TransactionDb};

use crate::format::{encoded_db_text, one_hot_csv, sparse_id_text, transactions_text};
use crate::mine::{mine_static, Algorithm};
use crate::Result;

pub const CSV_HEADER: [&str; 10] = [
    "algorithm",
    "minsup",
    "minsup_count",
    "patterns",
    "wall_ms",
    "peak_tree_nodes",
    "tree_nodes",
    "filtered_occurrences",
    "raw_bytes",
    "encoded_bytes",
];

/// Serialized byte counts of one database in several layouts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SizeReport {
    /// The transaction file format with item labels.
    pub raw_listing: usize,
    /// One line of numeric item ids per transaction.
    pub sparse_ids: usize,
    /// A 0/1 column per item.
    pub one_hot: usize,
    /// The prime-encoded file.
    pub encoded: usize,
}

pub fn size_report(db: &TransactionDb) -> SizeReport {
    let edb = encode_db(db, &global_codebook(db));
    SizeReport {
        raw_listing: transactions_text(db).len(),
        sparse_ids: sparse_id_text(db).len(),
        one_hot: one_hot_csv(db).len(),
        encoded: encoded_db_text(&edb, &db.vocab).len(),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub algorithm: Algorithm,
    pub minsup: SupportThreshold,
    pub minsup_count: u64,
    pub patterns: usize,
    pub wall_ms: f64,
    pub peak_tree_nodes: usize,
    pub tree_nodes: usize,
    pub filtered_occurrences: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
    /// Absent when the sweep is empty.
    pub sizes: Option<SizeReport>,
}

/// Runs every algorithm at every threshold, one after another.
pub fn run_bench(
    db: &TransactionDb,
    tax: &Taxonomy,
    algos: &[Algorithm],
    sweep: &[SupportThreshold],
    parallel: bool,
) -> Result<BenchReport> {
    let mut rows = Vec::new();
    for &minsup in sweep {
        let count = minsup.resolve(db.len())?;
        for &algo in algos {
            let m = mine_static(db, tax, algo, count, parallel);
            rows.push(BenchRow {
                algorithm: algo,
                minsup,
                minsup_count: count,
                patterns: m.patterns.len(),
                wall_ms: m.elapsed.as_secs_f64() * 1000.0,
                peak_tree_nodes: m.peak_tree_nodes,
                tree_nodes: m.tree_nodes,
                filtered_occurrences: m.filtered_occurrences,
            });
        }
    }
    let sizes = (!sweep.is_empty()).then(|| size_report(db));
    Ok(BenchReport { rows, sizes })
}

pub fn threshold_label(t: SupportThreshold) -> String {
    match t {
        SupportThreshold::Count(c) => c.to_string(),
        SupportThreshold::Fraction(f) => f.to_string(),
    }
}

/// The sweep table, then a blank line and a `layout,bytes` table.
pub fn bench_csv(report: &BenchReport) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER)?;
    let (raw, enc) = report
        .sizes
        .map(|s| (s.raw_listing.to_string(), s.encoded.to_string()))
        .unwrap_or_default();
    for r in &report.rows {
        w.write_record([
            r.algorithm.name().to_string(),
            threshold_label(r.minsup),
            r.minsup_count.to_string(),
            r.patterns.to_string(),
            format!("{:.3}", r.wall_ms),
            r.peak_tree_nodes.to_string(),
            r.tree_nodes.to_string(),
            r.filtered_occurrences.to_string(),
            raw.clone(),
            enc.clone(),
        ])?;
    }
    let mut out = w
        .into_inner()
        .map_err(|e| csv::Error::from(e.into_error()))?;
    if let Some(s) = report.sizes {
        out.extend_from_slice(b"\nlayout,bytes\n");
        for (name, bytes) in [
            ("raw_listing", s.raw_listing),
            ("sparse_ids", s.sparse_ids),
            ("one_hot", s.one_hot),
            ("encoded", s.encoded),
        ] {
            out.extend_from_slice(format!("{name},{bytes}\n").as_bytes());
        }
    }
    Ok(String::from_utf8(out).expect("csv output is utf-8"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use fpmine_core::model::parse_transactions;

    #[test]
    fn empty_sweep_is_header_only() {
        let db = parse_transactions("a b\n", false).unwrap();
        let report = run_bench(&db, &Taxonomy::new(), &[Algorithm::Fpgrowth], &[], false).unwrap();
        assert_eq!(
            bench_csv(&report).unwrap(),
            format!("{}\n", CSV_HEADER.join(","))
        );
    }

    #[test]
    fn rows_per_algorithm_and_threshold() {
        let db = parse_transactions("a b\na c\nb c\na b c\n", false).unwrap();
        let sweep = [SupportThreshold::Fraction(0.5), SupportThreshold::Count(3)];
        let algos = [Algorithm::Apriori, Algorithm::Fpgrowth];
        let report = run_bench(&db, &Taxonomy::new(), &algos, &sweep, false).unwrap();
        assert_eq!(report.rows.len(), 4);
        assert_eq!(report.rows[0].patterns, report.rows[1].patterns);
        assert_eq!(report.rows[0].minsup_count, 2);
        let csv = bench_csv(&report).unwrap();
        assert!(csv.contains("\nlayout,bytes\nraw_listing,18\n"), "{csv}");
        assert!(csv.lines().nth(1).unwrap().starts_with("apriori,0.5,2,6,"));
    }
}
