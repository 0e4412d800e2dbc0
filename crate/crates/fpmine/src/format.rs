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

//! Text and CSV renderings. Every writer sorts its output so that equal
//! inputs give byte-identical files.

use std::fmt::Write;

use fpmine_core::encoding::{EncodedDb, EncodedTransaction, PrimeCodebook};
use fpmine_core::rules::RuleSet;
use fpmine_core::temporal::{AntiFpOutput, TemporalRule};
use fpmine_core::{Item, PatternSet, TransactionDb, Vocabulary};
use num_bigint::BigUint;

use crate::Result;

/// Labels sorted and joined by single spaces.
pub fn itemset_label(items: &[Item], vocab: &Vocabulary) -> String {
    let mut labels: Vec<&str> = items.iter().map(|&i| vocab.label(i)).collect();
    labels.sort_unstable();
    labels.join(" ")
}

/// `item1 item2 ... #SUP: n` per pattern, lines sorted.
pub fn pattern_lines(patterns: &PatternSet, vocab: &Vocabulary) -> String {
    let mut lines: Vec<String> = patterns
        .iter()
        .map(|(items, s)| format!("{} #SUP: {s}", itemset_label(items, vocab)))
        .collect();
    lines.sort();
    join_lines(lines)
}

pub fn patterns_csv(patterns: &PatternSet, vocab: &Vocabulary) -> Result<String> {
    let mut rows: Vec<(String, u64)> = patterns
        .iter()
        .map(|(items, s)| (itemset_label(items, vocab), s))
        .collect();
    rows.sort();
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["itemset", "support"])?;
    for (label, s) in rows {
        w.write_record([label, s.to_string()])?;
    }
    finish_csv(w)
}

/// `support / antecedent_support` to four decimals, ties to even, computed
/// on the exact ratio.
pub fn format_confidence(support: u64, antecedent_support: u64) -> String {
    let num = support as u128 * 10_000;
    let den = antecedent_support as u128;
    let (mut q, r) = (num / den, num % den);
    if 2 * r > den || (2 * r == den && q % 2 == 1) {
        q += 1;
    }
    format!("{}.{:04}", q / 10_000, q % 10_000)
}

/// `a b => c #SUP: n #CONF: 0.xxxx` per rule, lines sorted.
pub fn rule_lines(rules: &RuleSet, vocab: &Vocabulary) -> String {
    let mut lines: Vec<String> = rules
        .iter()
        .map(|r| {
            format!(
                "{} => {} #SUP: {} #CONF: {}",
                itemset_label(&r.antecedent, vocab),
                itemset_label(&r.consequent, vocab),
                r.support,
                format_confidence(r.support, r.antecedent_support)
            )
        })
        .collect();
    lines.sort();
    join_lines(lines)
}

/// `antecedent=>consequent,support,confidence` for rules without a span.
pub fn rules_csv(rules: &RuleSet, vocab: &Vocabulary) -> Result<String> {
    let mut rows: Vec<(String, u64, String)> = rules
        .iter()
        .map(|r| {
            (
                format!(
                    "{}=>{}",
                    itemset_label(&r.antecedent, vocab),
                    itemset_label(&r.consequent, vocab)
                ),
                r.support,
                format_confidence(r.support, r.antecedent_support),
            )
        })
        .collect();
    rows.sort();
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["antecedent=>consequent", "support", "confidence"])?;
    for (rule, support, conf) in rows {
        w.write_record([rule, support.to_string(), conf])?;
    }
    finish_csv(w)
}

/// The transaction file format: labels in id order, timestamps when the
/// database is temporal.
pub fn transactions_text(db: &TransactionDb) -> String {
    let mut out = String::new();
    for t in &db.transactions {
        if let Some(ts) = t.timestamp.filter(|_| db.temporal) {
            let _ = write!(out, "{ts} |");
            for &i in &t.items {
                let _ = write!(out, " {}", db.vocab.label(i));
            }
        } else {
            let labels: Vec<&str> = t.items.iter().map(|&i| db.vocab.label(i)).collect();
            out.push_str(&labels.join(" "));
        }
        out.push('\n');
    }
    out
}

/// One line per transaction of decimal item ids.
pub fn sparse_id_text(db: &TransactionDb) -> String {
    let mut out = String::new();
    for t in &db.transactions {
        let ids: Vec<String> = t.items.iter().map(|i| i.0.to_string()).collect();
        out.push_str(&ids.join(" "));
        out.push('\n');
    }
    out
}

/// Horizontal tabular layout: a `tid` column plus one 0/1 column per item.
pub fn one_hot_csv(db: &TransactionDb) -> String {
    let mut out = String::from("tid");
    for i in db.vocab.items() {
        out.push(',');
        out.push_str(db.vocab.label(i));
    }
    out.push('\n');
    let mut row = vec![b'0'; db.universe()];
    for t in &db.transactions {
        row.fill(b'0');
        for i in &t.items {
            row[i.index()] = b'1';
        }
        let _ = write!(out, "{}", t.id);
        for &b in &row {
            out.push(',');
            out.push(b as char);
        }
        out.push('\n');
    }
    out
}

pub const ENCODED_HEADER: &str = "#ENCODED v1";

/// `#ENCODED v1`, then `label=prime` per codebook entry, then `tid:m` per row.
pub fn encoded_db_text(edb: &EncodedDb, vocab: &Vocabulary) -> String {
    let mut out = String::from(ENCODED_HEADER);
    out.push('\n');
    for &(item, p) in edb.codebook.entries() {
        let _ = writeln!(out, "{}={p}", vocab.label(item));
    }
    for row in &edb.rows {
        for _ in 0..row.multiplicity {
            let _ = writeln!(out, "{}:{}", row.tid, row.m);
        }
    }
    out
}

/// Reads an encoded database back, interning codebook labels into `vocab`.
pub fn parse_encoded_db(
    text: &str,
    vocab: &mut Vocabulary,
) -> Result<EncodedDb, fpmine_core::Error> {
    let bad = |line: usize, message: &str| fpmine_core::Error::Parse {
        line,
        message: message.to_string(),
    };
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, h)) if h.trim_end() == ENCODED_HEADER => {}
        _ => return Err(bad(1, "missing `#ENCODED v1` header")),
    }
    let mut entries = Vec::new();
    let mut rows = Vec::new();
    for (n, line) in lines {
        let lineno = n + 1;
        if line.trim().is_empty() {
            continue;
        }
        if rows.is_empty() {
            if let Some((label, p)) = line.rsplit_once('=') {
                if let Ok(p) = p.parse::<u64>() {
                    entries.push((vocab.intern(label), p));
                    continue;
                }
            }
        }
        let (tid, m) = line
            .split_once(':')
            .ok_or_else(|| bad(lineno, "expected `tid:m`"))?;
        let tid = tid
            .parse()
            .map_err(|_| bad(lineno, "invalid transaction id"))?;
        let m = BigUint::parse_bytes(m.as_bytes(), 10)
            .ok_or_else(|| bad(lineno, "invalid row value"))?;
        rows.push(EncodedTransaction {
            tid,
            m,
            multiplicity: 1,
        });
    }
    Ok(EncodedDb {
        rows,
        codebook: PrimeCodebook::from_entries(entries)?,
    })
}

/// `itemset,interval_start,interval_end,support,frequent`, one row per
/// (itemset, interval).
pub fn temporal_report_csv(output: &AntiFpOutput, vocab: &Vocabulary) -> Result<String> {
    let mut rows = Vec::new();
    for tp in &output.temporal {
        let label = itemset_label(&tp.items, vocab);
        for (i, ip) in output.per_interval.iter().enumerate() {
            rows.push((
                label.clone(),
                ip.interval.start,
                ip.interval.end,
                tp.per_interval_support[i],
                tp.intervals.contains(&i),
            ));
        }
    }
    rows.sort();
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "itemset",
        "interval_start",
        "interval_end",
        "support",
        "frequent",
    ])?;
    for (label, start, end, support, frequent) in rows {
        w.write_record([
            label,
            start.to_string(),
            end.to_string(),
            support.to_string(),
            frequent.to_string(),
        ])?;
    }
    finish_csv(w)
}

/// `antecedent=>consequent,span_start,span_end,support,confidence`.
pub fn temporal_rules_csv(rules: &[TemporalRule], vocab: &Vocabulary) -> Result<String> {
    let mut rows: Vec<(String, u64, u64, u64, String)> = rules
        .iter()
        .map(|r| {
            (
                format!(
                    "{}=>{}",
                    itemset_label(&r.antecedent, vocab),
                    itemset_label(&r.consequent, vocab)
                ),
                r.span.start,
                r.span.end,
                r.support,
                format_confidence(r.support, r.antecedent_support),
            )
        })
        .collect();
    rows.sort();
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "antecedent=>consequent",
        "span_start",
        "span_end",
        "support",
        "confidence",
    ])?;
    for (rule, start, end, support, conf) in rows {
        w.write_record([
            rule,
            start.to_string(),
            end.to_string(),
            support.to_string(),
            conf,
        ])?;
    }
    finish_csv(w)
}

/// Per-interval pattern sections followed by the itemsets common to all
/// intervals.
pub fn temporal_text(output: &AntiFpOutput, vocab: &Vocabulary) -> String {
    let mut out = String::new();
    for ip in &output.per_interval {
        let _ = writeln!(
            out,
            "# interval [{},{})",
            ip.interval.start, ip.interval.end
        );
        out.push_str(&pattern_lines(&ip.patterns, vocab));
    }
    out.push_str("# common\n");
    out.push_str(&pattern_lines(&output.common, vocab));
    out
}

/// Expanded rules as `a => b #SUP: n #CONF: 0.xxxx #SPAN: [s,e)`.
pub fn temporal_rule_lines(rules: &[TemporalRule], vocab: &Vocabulary) -> String {
    let mut lines: Vec<String> = rules
        .iter()
        .map(|r| {
            format!(
                "{} => {} #SUP: {} #CONF: {} #SPAN: [{},{})",
                itemset_label(&r.antecedent, vocab),
                itemset_label(&r.consequent, vocab),
                r.support,
                format_confidence(r.support, r.antecedent_support),
                r.span.start,
                r.span.end
            )
        })
        .collect();
    lines.sort();
    join_lines(lines)
}

fn join_lines(lines: Vec<String>) -> String {
    let mut out = String::new();
    for l in lines {
        out.push_str(&l);
        out.push('\n');
    }
    out
}

fn finish_csv(w: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = w
        .into_inner()
        .map_err(|e| csv::Error::from(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
