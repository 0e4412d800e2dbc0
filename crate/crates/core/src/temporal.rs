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

//! Interval mining over timestamped transactions: partition the time axis
//! into fixed-width intervals, encode each slice with a shared prime
//! codebook (merging identical rows), mine every interval with FP-growth,
//! compare intervals, and grow rules over runs of consecutive intervals.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::encoding::{
    assign_primes, encode_transaction, support_via_encoding, EncodedDb, EncodedTransaction,
    PrimeCodebook,
};
use crate::fpgrowth::FpGrowth;
use crate::fptree::{build_flist, FpTree};
use crate::model::{Item, SupportThreshold, Taxonomy, TransactionDb};
use crate::pattern::PatternSet;
use crate::rules::{generate_rules, Rule, RuleSet};
use crate::{Error, Result};

/// Half-open time range `[start, end)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Interval {
    pub start: u64,
    pub end: u64,
    pub index: usize,
}

impl Interval {
    pub fn contains(&self, t: u64) -> bool {
        self.start <= t && t < self.end
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalDb {
    pub interval: Interval,
    pub slice: TransactionDb,
    pub encoded: Option<EncodedDb>,
}

/// Splits `[min_t, max_t]` into abutting intervals of `width` time units
/// starting at the smallest timestamp. Empty intervals are kept.
pub fn reform_intervals(db: &TransactionDb, width: u64) -> Result<Vec<IntervalDb>> {
    if !db.temporal {
        return Err(Error::NotTemporal);
    }
    if width == 0 {
        return Err(Error::InvalidIntervalWidth);
    }
    let mut stamps = Vec::with_capacity(db.len());
    for t in &db.transactions {
        stamps.push(t.timestamp.ok_or(Error::NotTemporal)?);
    }
    let (Some(&min_t), Some(&max_t)) = (stamps.iter().min(), stamps.iter().max()) else {
        return Ok(Vec::new());
    };
    let count = ((max_t - min_t) / width + 1) as usize;
    let mut slices: Vec<IntervalDb> = (0..count)
        .map(|index| IntervalDb {
            interval: Interval {
                start: min_t + index as u64 * width,
                end: min_t + (index as u64 + 1) * width,
                index,
            },
            slice: TransactionDb {
                transactions: Vec::new(),
                vocab: db.vocab.clone(),
                temporal: true,
            },
            encoded: None,
        })
        .collect();
    for (t, &ts) in db.transactions.iter().zip(&stamps) {
        let index = ((ts - min_t) / width) as usize;
        slices[index].slice.transactions.push(t.clone());
    }
    Ok(slices)
}

/// Codebook over every item occurring in `db`, most frequent first.
pub fn global_codebook(db: &TransactionDb) -> PrimeCodebook {
    assign_primes(&build_flist(db, &Taxonomy::new(), 1))
}

/// Encodes every slice with `cb`. Rows with equal values are merged into
/// the first one, whose multiplicity counts them.
pub fn encode_merge(mut slices: Vec<IntervalDb>, cb: &PrimeCodebook) -> Vec<IntervalDb> {
    for s in &mut slices {
        let mut rows: Vec<EncodedTransaction> = Vec::new();
        let mut seen: BTreeMap<BigUint, usize> = BTreeMap::new();
        for t in &s.slice.transactions {
            let row = encode_transaction(t, cb);
            match seen.get(&row.m) {
                Some(&at) => rows[at].multiplicity += 1,
                None => {
                    seen.insert(row.m.clone(), rows.len());
                    rows.push(row);
                }
            }
        }
        s.encoded = Some(EncodedDb {
            rows,
            codebook: cb.clone(),
        });
    }
    slices
}

/// What a fractional threshold is a fraction of.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ThresholdScope {
    /// Each interval's own transaction count.
    #[default]
    PerInterval,
    /// All transactions across intervals.
    Global,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AntiFpConfig {
    pub minsup: SupportThreshold,
    pub scope: ThresholdScope,
}

impl AntiFpConfig {
    pub fn new(minsup: SupportThreshold) -> Self {
        AntiFpConfig {
            minsup,
            scope: ThresholdScope::PerInterval,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalPatterns {
    pub interval: Interval,
    /// `None` for an empty interval, which yields no patterns.
    pub minsup: Option<u64>,
    pub patterns: PatternSet,
}

/// An itemset frequent in at least one interval, with its support in all.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TemporalPattern {
    pub items: Vec<Item>,
    /// Indexed by interval index.
    pub per_interval_support: Vec<u64>,
    /// Interval indexes where the support reaches that interval's threshold.
    pub intervals: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AntiFpOutput {
    pub per_interval: Vec<IntervalPatterns>,
    /// Itemsets frequent in every non-empty interval, at their smallest
    /// per-interval support.
    pub common: PatternSet,
    pub temporal: Vec<TemporalPattern>,
}

pub fn resolve_interval_thresholds(
    slices: &[IntervalDb],
    cfg: &AntiFpConfig,
) -> Result<Vec<Option<u64>>> {
    let total: usize = slices.iter().map(|s| s.slice.len()).sum();
    slices
        .iter()
        .map(|s| {
            if s.slice.is_empty() {
                return Ok(None);
            }
            let n = match cfg.scope {
                ThresholdScope::PerInterval => s.slice.len(),
                ThresholdScope::Global => total,
            };
            cfg.minsup.resolve(n).map(Some)
        })
        .collect()
}

/// Plain FP-growth over one slice.
pub fn mine_interval(slice: &IntervalDb, minsup: Option<u64>) -> IntervalPatterns {
    let patterns = match minsup {
        Some(minsup) => {
            let tax = Taxonomy::new();
            let tree =
                FpTree::construct(&slice.slice, &tax, &build_flist(&slice.slice, &tax, minsup));
            FpGrowth::new(minsup).mine(&tree, &[])
        }
        None => PatternSet::new(),
    };
    IntervalPatterns {
        interval: slice.interval,
        minsup,
        patterns,
    }
}

/// Mines every interval in chronological order, then compares them.
pub fn anti_fp_growth(slices: &[IntervalDb], minsup: SupportThreshold) -> Result<AntiFpOutput> {
    anti_fp_growth_with(slices, &AntiFpConfig::new(minsup))
}

pub fn anti_fp_growth_with(slices: &[IntervalDb], cfg: &AntiFpConfig) -> Result<AntiFpOutput> {
    let thresholds = resolve_interval_thresholds(slices, cfg)?;
    let per_interval = slices
        .iter()
        .zip(thresholds)
        .map(|(s, minsup)| mine_interval(s, minsup))
        .collect();
    Ok(compare_intervals(slices, per_interval))
}

fn slice_support(slice: &IntervalDb, items: &[Item]) -> u64 {
    slice
        .encoded
        .as_ref()
        .and_then(|edb| support_via_encoding(edb, items).ok())
        .unwrap_or_else(|| slice.slice.support(items))
}

/// Builds the cross-interval view from independently mined intervals:
/// the itemsets frequent everywhere, and for every itemset frequent
/// somewhere its support in each interval.
pub fn compare_intervals(
    slices: &[IntervalDb],
    per_interval: Vec<IntervalPatterns>,
) -> AntiFpOutput {
    let mut union: BTreeMap<Vec<Item>, ()> = BTreeMap::new();
    for ip in &per_interval {
        for (items, _) in ip.patterns.iter() {
            union.insert(items.to_vec(), ());
        }
    }
    let mut temporal = Vec::with_capacity(union.len());
    let mut common = PatternSet::new();
    let compared: Vec<&IntervalPatterns> = per_interval
        .iter()
        .filter(|ip| ip.minsup.is_some())
        .collect();
    for items in union.into_keys() {
        let per_interval_support: Vec<u64> = slices
            .iter()
            .zip(&per_interval)
            .map(|(s, ip)| {
                ip.patterns
                    .get(&items)
                    .unwrap_or_else(|| slice_support(s, &items))
            })
            .collect();
        let intervals: Vec<usize> = per_interval
            .iter()
            .enumerate()
            .filter(|(i, ip)| ip.minsup.is_some_and(|m| per_interval_support[*i] >= m))
            .map(|(i, _)| i)
            .collect();
        if intervals.len() == compared.len() {
            let min = intervals
                .iter()
                .map(|&i| per_interval_support[i])
                .min()
                .unwrap();
            common.insert(items.iter().copied(), min);
        }
        temporal.push(TemporalPattern {
            items,
            per_interval_support,
            intervals,
        });
    }
    AntiFpOutput {
        per_interval,
        common,
        temporal,
    }
}

/// Rules of each interval at `minconf`.
pub fn interval_rules(output: &AntiFpOutput, minconf: f64) -> Result<Vec<(Interval, RuleSet)>> {
    output
        .per_interval
        .iter()
        .map(|ip| Ok((ip.interval, generate_rules(&ip.patterns, minconf)?)))
        .collect()
}

/// A rule holding over a maximal run of consecutive intervals.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct TemporalRule {
    pub antecedent: Vec<Item>,
    pub consequent: Vec<Item>,
    /// Covers the whole run; `index` is the first interval's.
    pub span: Interval,
    pub last_index: usize,
    /// Supports summed over the run.
    pub support: u64,
    pub antecedent_support: u64,
}

impl TemporalRule {
    /// Confidence over all transactions of the run.
    pub fn confidence(&self) -> f64 {
        self.support as f64 / self.antecedent_support as f64
    }

    pub fn first_index(&self) -> usize {
        self.span.index
    }
}

/// Joins each rule's occurrences (at confidence ≥ `minconf`) over
/// abutting intervals into maximal runs, one output rule per run.
pub fn expand_intervals(
    rules_per_interval: &[(Interval, RuleSet)],
    minconf: f64,
) -> Vec<TemporalRule> {
    type Key<'a> = (&'a [Item], &'a [Item]);
    let mut occurrences: BTreeMap<Key, Vec<(Interval, &Rule)>> = BTreeMap::new();
    for (interval, rules) in rules_per_interval {
        for r in rules.iter().filter(|r| r.confidence() >= minconf) {
            occurrences
                .entry((&r.antecedent, &r.consequent))
                .or_default()
                .push((*interval, r));
        }
    }
    let mut out = Vec::new();
    for ((antecedent, consequent), mut hits) in occurrences {
        hits.sort_by_key(|(iv, _)| iv.index);
        let mut run: Option<TemporalRule> = None;
        for (iv, r) in hits {
            match run.as_mut() {
                Some(cur) if cur.last_index + 1 == iv.index && cur.span.end == iv.start => {
                    cur.span.end = iv.end;
                    cur.last_index = iv.index;
                    cur.support += r.support;
                    cur.antecedent_support += r.antecedent_support;
                }
                _ => {
                    out.extend(run.take());
                    run = Some(TemporalRule {
                        antecedent: antecedent.to_vec(),
                        consequent: consequent.to_vec(),
                        span: iv,
                        last_index: iv.index,
                        support: r.support,
                        antecedent_support: r.antecedent_support,
                    });
                }
            }
        }
        out.extend(run);
    }
    out.sort();
    out
}

/// Result of the whole interval pipeline.
#[derive(Debug, Clone, PartialEq)]
pub struct TemporalRun {
    pub slices: Vec<IntervalDb>,
    pub mined: AntiFpOutput,
    pub rules: Vec<(Interval, RuleSet)>,
    pub expanded: Vec<TemporalRule>,
}

/// Reform, encode with merging, mine, derive and expand rules.
pub fn run_temporal(
    db: &TransactionDb,
    width: u64,
    cfg: &AntiFpConfig,
    minconf: f64,
) -> Result<TemporalRun> {
    let slices = reform_intervals(db, width)?;
    let slices = encode_merge(slices, &global_codebook(db));
    let mined = anti_fp_growth_with(&slices, cfg)?;
    let rules = interval_rules(&mined, minconf)?;
    let expanded = expand_intervals(&rules, minconf);
    Ok(TemporalRun {
        slices,
        mined,
        rules,
        expanded,
    })
}
