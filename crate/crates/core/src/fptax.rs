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

//! Generalized (taxonomy-aware) mining over an FP-tree built from
//! ancestor-augmented transactions.
//!
//! Both traversals share two filters. An item already listed as an
//! ancestor of the current suffix is skipped, and so is an item whose own
//! ancestor is in the suffix. Either case would produce an itemset holding
//! an item together with its ancestor, whose support is just that of the
//! itemset without the descendant.
//!
//! The bottom-up traversal builds a conditional tree per suffix. The
//! top-down traversal never builds one: it re-threads node links of the
//! original tree into a fresh header per suffix and overwrites node counts
//! with co-occurrence counts, undoing both on the way back up.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::fpgrowth::MiningStats;
use crate::fptree::{build_flist, conditional_fptree, FpTree, NodeId};
use crate::model::{normalize, Item, Taxonomy, TransactionDb};
use crate::pattern::PatternSet;

/// Ancestors of the items in the current suffix.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AncList {
    items: BTreeSet<Item>,
}

impl AncList {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn contains(&self, item: Item) -> bool {
        self.items.contains(&item)
    }

    /// A copy extended with `item`'s ancestors; the original stays valid
    /// for the caller's remaining siblings.
    pub fn extended(&self, item: Item, tax: &Taxonomy) -> AncList {
        let mut items = self.items.clone();
        items.extend(tax.ancestors_of(item));
        AncList { items }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FilterDecision {
    Accept,
    /// The item is an ancestor of something in the suffix.
    AncestorListed,
    /// One of the item's ancestors is in the suffix.
    AncestorInSuffix,
}

pub fn passes_filters(
    y: Item,
    suffix: &[Item],
    anclist: &AncList,
    tax: &Taxonomy,
) -> FilterDecision {
    if anclist.contains(y) {
        return FilterDecision::AncestorListed;
    }
    if tax.ancestors_of(y).iter().any(|a| suffix.contains(a)) {
        return FilterDecision::AncestorInSuffix;
    }
    FilterDecision::Accept
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Traversal {
    BottomUp,
    TopDown,
}

/// Builds the augmented FP-tree for `db` and mines it.
pub fn mine_generalized(
    db: &TransactionDb,
    tax: &Taxonomy,
    minsup: u64,
    traversal: Traversal,
) -> PatternSet {
    let flist = build_flist(db, tax, minsup);
    let mut tree = FpTree::construct(db, tax, &flist);
    match traversal {
        Traversal::BottomUp => bu_fptax(&tree, &[], &AncList::new(), tax, minsup),
        Traversal::TopDown => td_fptax(&mut tree, tax, minsup),
    }
}

/// Bottom-up generalized mining: header items least frequent first, one
/// conditional tree per accepted suffix.
pub fn bu_fptax(
    tree: &FpTree,
    suffix: &[Item],
    anclist: &AncList,
    tax: &Taxonomy,
    minsup: u64,
) -> PatternSet {
    let mut sink = PatternSet::new();
    let mut stats = MiningStats::default();
    bottom_up(tree, suffix, anclist, tax, minsup, &mut sink, &mut stats);
    sink
}

/// [`bu_fptax`] from the empty suffix, also reporting tree sizes.
pub fn bu_fptax_with_stats(
    tree: &FpTree,
    tax: &Taxonomy,
    minsup: u64,
) -> (PatternSet, MiningStats) {
    let mut sink = PatternSet::new();
    let mut stats = MiningStats::default();
    stats.enter(tree.node_count());
    bottom_up(
        tree,
        &[],
        &AncList::new(),
        tax,
        minsup,
        &mut sink,
        &mut stats,
    );
    (sink, stats)
}

fn bottom_up(
    tree: &FpTree,
    suffix: &[Item],
    anclist: &AncList,
    tax: &Taxonomy,
    minsup: u64,
    sink: &mut PatternSet,
    stats: &mut MiningStats,
) {
    for entry in tree.header().iter().rev() {
        if entry.total < minsup {
            continue;
        }
        if passes_filters(entry.item, suffix, anclist, tax) != FilterDecision::Accept {
            continue;
        }
        let grown = normalize(suffix.iter().copied().chain([entry.item]));
        sink.insert(grown.iter().copied(), entry.total);

        let anclist = anclist.extended(entry.item, tax);
        let base = tree
            .conditional_pattern_base(entry.item)
            .expect("header item has a chain");
        let cond = conditional_fptree(&base, minsup);
        if !cond.is_empty() {
            stats.conditional_trees += 1;
            stats.enter(cond.node_count());
            bottom_up(&cond, &grown, &anclist, tax, minsup, sink, stats);
            stats.leave(cond.node_count());
        }
    }
}

/// Top-down generalized mining over `tree` in place. The tree's node
/// counts and links are restored before returning.
pub fn td_fptax(tree: &mut FpTree, tax: &Taxonomy, minsup: u64) -> PatternSet {
    let header: Vec<TdEntry> = tree
        .header()
        .iter()
        .map(|e| TdEntry {
            item: e.item,
            total: e.total,
            head: e.head,
        })
        .collect();
    let mut walk = TopDown {
        stamps: alloc::vec![0; tree.node_count() + 1],
        tree,
        tax,
        minsup,
        last_stamp: 0,
        undo: Vec::new(),
    };
    let mut sink = PatternSet::new();
    walk.descend(&header, &[], &AncList::new(), &mut sink);
    debug_assert!(walk.undo.is_empty());
    sink
}

struct TdEntry {
    item: Item,
    total: u64,
    head: Option<NodeId>,
}

struct Saved {
    node: NodeId,
    count: u64,
    next: Option<NodeId>,
    stamp: u64,
}

struct TopDown<'a> {
    tree: &'a mut FpTree,
    tax: &'a Taxonomy,
    minsup: u64,
    /// Which header build last claimed each node.
    stamps: Vec<u64>,
    last_stamp: u64,
    undo: Vec<Saved>,
}

impl TopDown<'_> {
    fn descend(
        &mut self,
        header: &[TdEntry],
        suffix: &[Item],
        anclist: &AncList,
        sink: &mut PatternSet,
    ) {
        for entry in header {
            if entry.total < self.minsup {
                continue;
            }
            if passes_filters(entry.item, suffix, anclist, self.tax) != FilterDecision::Accept {
                continue;
            }
            let grown = normalize(suffix.iter().copied().chain([entry.item]));
            sink.insert(grown.iter().copied(), entry.total);

            let mark = self.undo.len();
            let sub = self.relink_prefixes(entry);
            if !sub.is_empty() {
                let anclist = anclist.extended(entry.item, self.tax);
                self.descend(&sub, &grown, &anclist, sink);
            }
            self.restore(mark);
        }
    }

    /// Builds the header for suffix extension `entry`: every node above a
    /// node of `entry`'s chain is linked into its item's new chain and its
    /// count replaced by the number of suffix transactions passing through.
    fn relink_prefixes(&mut self, entry: &TdEntry) -> Vec<TdEntry> {
        let rank = self.tree.flist().rank(entry.item).unwrap() as usize;
        let mut sub: Vec<TdEntry> = self.tree.flist().entries()[..rank]
            .iter()
            .map(|&(item, _)| TdEntry {
                item,
                total: 0,
                head: None,
            })
            .collect();
        if rank == 0 {
            return sub;
        }
        self.last_stamp += 1;
        let stamp = self.last_stamp;
        let root = self.tree.root();

        let mut cursor = entry.head;
        while let Some(n) = cursor {
            let node = self.tree.node(n);
            let weight = node.count;
            cursor = node.next_same_item;
            let mut up = node.parent;
            while let Some(p) = up.filter(|&p| p != root) {
                let item = self.tree.node(p).item.unwrap();
                let r = self.tree.flist().rank(item).unwrap() as usize;
                if self.stamps[p] != stamp {
                    let node = self.tree.node_mut(p);
                    self.undo.push(Saved {
                        node: p,
                        count: node.count,
                        next: node.next_same_item,
                        stamp: self.stamps[p],
                    });
                    node.count = weight;
                    node.next_same_item = sub[r].head;
                    sub[r].head = Some(p);
                    self.stamps[p] = stamp;
                } else {
                    self.tree.node_mut(p).count += weight;
                }
                sub[r].total += weight;
                up = self.tree.node(p).parent;
            }
        }
        sub.retain(|e| e.total > 0);
        sub
    }

    fn restore(&mut self, mark: usize) {
        while self.undo.len() > mark {
            let saved = self.undo.pop().unwrap();
            let node = self.tree.node_mut(saved.node);
            node.count = saved.count;
            node.next_same_item = saved.next;
            self.stamps[saved.node] = saved.stamp;
        }
    }
}
