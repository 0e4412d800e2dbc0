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

//! Algorithm dispatch shared by `mine` and `bench`.

use std::time::{Duration, Instant};

use fpmine_core::fpgrowth::{FpGrowth, MiningStats};
use fpmine_core::fptax::{bu_fptax_with_stats, td_fptax};
use fpmine_core::fptree::{augment_with_ancestors, build_flist, order_transaction, FList};
use fpmine_core::oracle::apriori;
use fpmine_core::rules::RuleSet;
use fpmine_core::temporal::{
    compare_intervals, encode_merge, expand_intervals, global_codebook, interval_rules,
    reform_intervals, resolve_interval_thresholds, AntiFpConfig, AntiFpOutput, Interval,
    IntervalDb, IntervalPatterns, TemporalRule,
};
use fpmine_core::{FpTree, PatternSet, Taxonomy, TransactionDb};
use rayon::prelude::*;

use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, clap::ValueEnum)]
pub enum Algorithm {
    Apriori,
    Fpgrowth,
    BuFptax,
    TdFptax,
    AntiFpgrowth,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Apriori => "apriori",
            Algorithm::Fpgrowth => "fpgrowth",
            Algorithm::BuFptax => "bu-fptax",
            Algorithm::TdFptax => "td-fptax",
            Algorithm::AntiFpgrowth => "anti-fpgrowth",
        }
    }

    pub fn uses_taxonomy(self) -> bool {
        matches!(self, Algorithm::BuFptax | Algorithm::TdFptax)
    }
}

#[derive(Debug, Clone)]
pub struct Mined {
    pub patterns: PatternSet,
    pub minsup: u64,
    pub elapsed: Duration,
    /// Most FP-tree nodes alive at once; 0 for Apriori.
    pub peak_tree_nodes: usize,
    /// Non-root nodes of the initial tree; 0 for Apriori.
    pub tree_nodes: usize,
    /// Frequent item occurrences after ancestor augmentation.
    pub filtered_occurrences: u64,
}

/// Runs one of the non-temporal algorithms at an absolute threshold. The
/// taxonomy is ignored by Apriori and FP-growth.
pub fn mine_static(
    db: &TransactionDb,
    tax: &Taxonomy,
    algo: Algorithm,
    minsup: u64,
    parallel: bool,
) -> Mined {
    let start = Instant::now();
    if algo == Algorithm::Apriori {
        let patterns = apriori(db, minsup);
        return Mined {
            patterns,
            minsup,
            elapsed: start.elapsed(),
            peak_tree_nodes: 0,
            tree_nodes: 0,
            filtered_occurrences: 0,
        };
    }
    let empty = Taxonomy::new();
    let tax = if algo.uses_taxonomy() { tax } else { &empty };
    let flist = build_flist(db, tax, minsup);
    let mut tree = FpTree::construct(db, tax, &flist);
    let tree_nodes = tree.node_count();
    let (patterns, peak_tree_nodes) = match algo {
        Algorithm::Fpgrowth => {
            let (p, stats) = if parallel {
                fp_growth_parallel(&tree, minsup)
            } else {
                let mut sink = PatternSet::new();
                let mut stats = MiningStats::default();
                stats.enter(tree.node_count());
                FpGrowth::new(minsup).mine_into(&tree, &[], &mut sink, &mut stats);
                (sink, stats)
            };
            (p, stats.peak_live_nodes)
        }
        Algorithm::BuFptax => {
            let (p, stats) = bu_fptax_with_stats(&tree, tax, minsup);
            (p, stats.peak_live_nodes)
        }
        // Works in place on the one tree.
        Algorithm::TdFptax => (td_fptax(&mut tree, tax, minsup), tree_nodes),
        Algorithm::Apriori | Algorithm::AntiFpgrowth => unreachable!("handled by the caller"),
    };
    let elapsed = start.elapsed();
    Mined {
        patterns,
        minsup,
        elapsed,
        peak_tree_nodes,
        tree_nodes,
        filtered_occurrences: filtered_occurrences(db, tax, &flist),
    }
}

pub fn filtered_occurrences(db: &TransactionDb, tax: &Taxonomy, flist: &FList) -> u64 {
    db.transactions
        .iter()
        .map(|t| order_transaction(&augment_with_ancestors(t, tax), flist).len() as u64)
        .sum()
}

/// Top-level header items mined as independent tasks. A tree that is one
/// chain at the root gains nothing from splitting and is mined directly.
fn fp_growth_parallel(tree: &FpTree, minsup: u64) -> (PatternSet, MiningStats) {
    let miner = FpGrowth::new(minsup);
    let mut stats = MiningStats::default();
    stats.enter(tree.node_count());
    if tree.node(tree.root()).child_count() <= 1 {
        let mut sink = PatternSet::new();
        miner.mine_into(tree, &[], &mut sink, &mut stats);
        return (sink, stats);
    }
    let parts: Vec<(PatternSet, MiningStats)> = (0..tree.header().len())
        .into_par_iter()
        .map(|index| {
            let mut sink = PatternSet::new();
            let mut local = MiningStats::default();
            miner.mine_header_item(tree, index, &[], &mut sink, &mut local);
            (sink, local)
        })
        .collect();
    let mut patterns = PatternSet::new();
    for (p, local) in parts {
        stats.merge(&local);
        patterns.extend(p);
    }
    (patterns, stats)
}

#[derive(Debug, Clone)]
pub struct TemporalMined {
    pub slices: Vec<IntervalDb>,
    pub output: AntiFpOutput,
    pub rules: Vec<(Interval, RuleSet)>,
    pub expanded: Vec<TemporalRule>,
    pub elapsed: Duration,
    /// Largest per-interval peak.
    pub peak_tree_nodes: usize,
}

/// Reforms `db` into intervals of `width`, mines each slice and, when a
/// confidence threshold is given, derives and expands rules.
pub fn mine_temporal(
    db: &TransactionDb,
    width: u64,
    cfg: &AntiFpConfig,
    minconf: Option<f64>,
    parallel: bool,
) -> Result<TemporalMined> {
    let start = Instant::now();
    let slices = encode_merge(reform_intervals(db, width)?, &global_codebook(db));
    let thresholds = resolve_interval_thresholds(&slices, cfg)?;
    let mined: Vec<(IntervalPatterns, MiningStats)> = if parallel {
        slices
            .par_iter()
            .zip(thresholds)
            .map(|(s, t)| mine_slice(s, t))
            .collect()
    } else {
        slices
            .iter()
            .zip(thresholds)
            .map(|(s, t)| mine_slice(s, t))
            .collect()
    };
    let peak_tree_nodes = mined
        .iter()
        .map(|(_, st)| st.peak_live_nodes)
        .max()
        .unwrap_or(0);
    let per_interval = mined.into_iter().map(|(ip, _)| ip).collect();
    let output = compare_intervals(&slices, per_interval);
    let (rules, expanded) = match minconf {
        Some(c) => {
            let rules = interval_rules(&output, c)?;
            let expanded = expand_intervals(&rules, c);
            (rules, expanded)
        }
        None => (Vec::new(), Vec::new()),
    };
    Ok(TemporalMined {
        slices,
        output,
        rules,
        expanded,
        elapsed: start.elapsed(),
        peak_tree_nodes,
    })
}

/// Same result as the core `mine_interval`, with tree sizes recorded.
fn mine_slice(slice: &IntervalDb, minsup: Option<u64>) -> (IntervalPatterns, MiningStats) {
    let mut patterns = PatternSet::new();
    let mut stats = MiningStats::default();
    if let Some(minsup) = minsup {
        let tax = Taxonomy::new();
        let tree = FpTree::construct(&slice.slice, &tax, &build_flist(&slice.slice, &tax, minsup));
        stats.enter(tree.node_count());
        FpGrowth::new(minsup).mine_into(&tree, &[], &mut patterns, &mut stats);
    }
    let ip = IntervalPatterns {
        interval: slice.interval,
        minsup,
        patterns,
    };
    (ip, stats)
}
