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

//! FP-growth: recursive mining of an FP-tree through conditional trees,
//! with the single-prefix-path shortcut.

use alloc::vec::Vec;

use crate::fptree::{conditional_fptree, FpTree};
use crate::model::{normalize, Item};
use crate::pattern::PatternSet;
use crate::{Error, Result};

/// Tree sizes seen during a mining run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct MiningStats {
    /// Largest number of non-root nodes alive at once across the tree and
    /// every conditional tree on the recursion stack.
    pub peak_live_nodes: usize,
    pub conditional_trees: usize,
    live: usize,
}

impl MiningStats {
    pub fn enter(&mut self, nodes: usize) {
        self.live += nodes;
        self.peak_live_nodes = self.peak_live_nodes.max(self.live);
    }

    pub fn leave(&mut self, nodes: usize) {
        self.live -= nodes;
    }

    pub fn merge(&mut self, other: &MiningStats) {
        self.peak_live_nodes = self.peak_live_nodes.max(self.live + other.peak_live_nodes);
        self.conditional_trees += other.conditional_trees;
    }
}

#[derive(Debug, Clone, Copy)]
pub struct FpGrowth {
    pub minsup: u64,
    /// Enumerate a leading unary chain directly instead of recursing into it.
    pub single_path_shortcut: bool,
}

impl FpGrowth {
    pub fn new(minsup: u64) -> Self {
        FpGrowth {
            minsup,
            single_path_shortcut: true,
        }
    }

    pub fn with_single_path_shortcut(mut self, enabled: bool) -> Self {
        self.single_path_shortcut = enabled;
        self
    }

    /// All frequent itemsets of `tree`, each extended by `alpha`.
    pub fn mine(&self, tree: &FpTree, alpha: &[Item]) -> PatternSet {
        let mut sink = PatternSet::new();
        let mut stats = MiningStats::default();
        stats.enter(tree.node_count());
        self.mine_into(tree, alpha, &mut sink, &mut stats);
        sink
    }

    pub fn mine_into(
        &self,
        tree: &FpTree,
        alpha: &[Item],
        sink: &mut PatternSet,
        stats: &mut MiningStats,
    ) {
        if tree.is_empty() {
            return;
        }
        let root_children = tree.node(tree.root()).child_count();
        if !self.single_path_shortcut || root_children > 1 {
            self.mine_multipath(tree, alpha, sink, stats);
            return;
        }

        let (prefix, rest) = tree.single_prefix_split();
        let prefix_set = enumerate_prefix_combinations(&prefix, &[]);
        let mut rest_set = PatternSet::new();
        if !rest.is_empty() {
            stats.enter(rest.node_count());
            self.mine_multipath(&rest, &[], &mut rest_set, stats);
            stats.leave(rest.node_count());
        }
        let combined = combine_pattern_sets(&prefix_set, &rest_set)
            .expect("prefix path and multipath part share an item");
        for (items, support) in combined {
            sink.insert(items.into_iter().chain(alpha.iter().copied()), support);
        }
    }

    /// The multipath loop over every header item, least frequent first.
    fn mine_multipath(
        &self,
        tree: &FpTree,
        alpha: &[Item],
        sink: &mut PatternSet,
        stats: &mut MiningStats,
    ) {
        for index in (0..tree.header().len()).rev() {
            self.mine_header_item(tree, index, alpha, sink, stats);
        }
    }

    /// Emits `header[index].item ∪ alpha` and mines its conditional tree.
    /// Independent across indexes, which is what parallel callers split on.
    pub fn mine_header_item(
        &self,
        tree: &FpTree,
        index: usize,
        alpha: &[Item],
        sink: &mut PatternSet,
        stats: &mut MiningStats,
    ) {
        let entry = &tree.header()[index];
        if entry.total < self.minsup {
            return;
        }
        let mut beta = Vec::with_capacity(alpha.len() + 1);
        beta.extend_from_slice(alpha);
        beta.push(entry.item);
        let beta = normalize(beta);
        sink.insert(beta.iter().copied(), entry.total);

        let base = tree
            .conditional_pattern_base(entry.item)
            .expect("header item has a chain");
        let cond = conditional_fptree(&base, self.minsup);
        if !cond.is_empty() {
            stats.conditional_trees += 1;
            stats.enter(cond.node_count());
            self.mine_into(&cond, &beta, sink, stats);
            stats.leave(cond.node_count());
        }
    }
}

/// Mines `tree` with the default configuration.
pub fn fp_growth(tree: &FpTree, alpha: &[Item], minsup: u64) -> PatternSet {
    FpGrowth::new(minsup).mine(tree, alpha)
}

/// Every non-empty combination of the path's nodes, extended by `alpha`.
/// Counts along a prefix path never increase leaf-ward, so a combination's
/// support is the count of its deepest node.
pub fn enumerate_prefix_combinations(path: &[(Item, u64)], alpha: &[Item]) -> PatternSet {
    let mut combos: Vec<(Vec<Item>, u64)> = Vec::new();
    for &(item, count) in path {
        let grown: Vec<(Vec<Item>, u64)> = combos
            .iter()
            .map(|(items, _)| {
                let mut v = items.clone();
                v.push(item);
                (v, count)
            })
            .collect();
        combos.push((alloc::vec![item], count));
        combos.extend(grown);
    }
    combos
        .into_iter()
        .map(|(mut items, count)| {
            items.extend_from_slice(alpha);
            (items, count)
        })
        .collect()
}

/// `P ∪ Q ∪ (P × Q)` where a cross pattern takes the Q-side support: every
/// occurrence of a Q itemset lies below the branching node, hence under
/// the whole prefix path.
pub fn combine_pattern_sets(p: &PatternSet, q: &PatternSet) -> Result<PatternSet> {
    let p_items = p.vocabulary();
    if let Some(&shared) = q
        .vocabulary()
        .iter()
        .find(|i| p_items.binary_search(i).is_ok())
    {
        return Err(Error::OverlappingVocabulary(shared));
    }
    let mut out = p.clone();
    for (q_items, q_support) in q.iter() {
        out.insert(q_items.iter().copied(), q_support);
        for (p_items, _) in p.iter() {
            out.insert(p_items.iter().chain(q_items).copied(), q_support);
        }
    }
    Ok(out)
}
