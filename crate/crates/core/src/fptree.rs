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

//! Counted prefix tree with a header table of per-item node-link chains.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::model::{Item, Taxonomy, Transaction, TransactionDb};
use crate::{Error, Result};

pub type NodeId = usize;

const ROOT: NodeId = 0;

#[derive(Debug, Clone)]
pub struct FpNode {
    /// `None` only for the root.
    pub item: Option<Item>,
    pub count: u64,
    pub parent: Option<NodeId>,
    /// Keyed by the owning tree's F-list rank, so iteration follows F-list order.
    children: BTreeMap<u32, NodeId>,
    pub next_same_item: Option<NodeId>,
}

impl FpNode {
    fn new(item: Option<Item>, count: u64, parent: Option<NodeId>) -> Self {
        FpNode {
            item,
            count,
            parent,
            children: BTreeMap::new(),
            next_same_item: None,
        }
    }

    pub fn children(&self) -> impl DoubleEndedIterator<Item = NodeId> + '_ {
        self.children.values().copied()
    }

    pub fn child_count(&self) -> usize {
        self.children.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeaderEntry {
    pub item: Item,
    /// Sum of node counts along the chain.
    pub total: u64,
    pub head: Option<NodeId>,
}

/// Frequent items in descending support order, ties broken by ascending id.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FList {
    entries: Vec<(Item, u64)>,
    ranks: BTreeMap<Item, u32>,
}

impl FList {
    pub fn from_counts(counts: impl IntoIterator<Item = (Item, u64)>, minsup: u64) -> Self {
        let mut entries: Vec<(Item, u64)> =
            counts.into_iter().filter(|&(_, c)| c >= minsup).collect();
        entries.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        Self::in_order(entries)
    }

    /// Keeps the given order as is.
    pub(crate) fn in_order(entries: Vec<(Item, u64)>) -> Self {
        let ranks = entries
            .iter()
            .enumerate()
            .map(|(r, &(item, _))| (item, r as u32))
            .collect();
        FList { entries, ranks }
    }

    pub fn entries(&self) -> &[(Item, u64)] {
        &self.entries
    }

    pub fn items(&self) -> impl Iterator<Item = Item> + '_ {
        self.entries.iter().map(|&(i, _)| i)
    }

    pub fn rank(&self, item: Item) -> Option<u32> {
        self.ranks.get(&item).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Transaction items plus all their taxonomy ancestors, sorted and unique.
pub fn augment_with_ancestors(t: &Transaction, tax: &Taxonomy) -> Vec<Item> {
    if tax.is_empty() {
        return t.items.clone();
    }
    let mut out = t.items.clone();
    for &item in &t.items {
        out.extend(tax.ancestors_of(item));
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Support of every item, counting a transaction once for an ancestor
/// however many of its descendants it holds.
pub fn item_supports(db: &TransactionDb, tax: &Taxonomy) -> BTreeMap<Item, u64> {
    let mut counts = BTreeMap::new();
    for t in &db.transactions {
        for item in augment_with_ancestors(t, tax) {
            *counts.entry(item).or_insert(0) += 1;
        }
    }
    counts
}

pub fn build_flist(db: &TransactionDb, tax: &Taxonomy, minsup: u64) -> FList {
    FList::from_counts(item_supports(db, tax), minsup)
}

/// Drops items missing from the F-list and sorts the rest into F-list order.
pub fn order_transaction(items: &[Item], flist: &FList) -> Vec<Item> {
    let mut ranked: Vec<(u32, Item)> = items
        .iter()
        .filter_map(|&i| flist.rank(i).map(|r| (r, i)))
        .collect();
    ranked.sort_unstable();
    ranked.into_iter().map(|(_, i)| i).collect()
}

/// Weighted prefix paths (root side first) that co-occur with one item.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PatternBase {
    pub paths: Vec<(Vec<Item>, u64)>,
}

#[derive(Debug, Clone)]
pub struct FpTree {
    nodes: Vec<FpNode>,
    header: Vec<HeaderEntry>,
    flist: FList,
    tails: Vec<Option<NodeId>>,
}

impl FpTree {
    /// A bare root whose header follows `flist`.
    pub fn empty(flist: &FList) -> Self {
        let header = flist
            .items()
            .map(|item| HeaderEntry {
                item,
                total: 0,
                head: None,
            })
            .collect();
        FpTree {
            nodes: alloc::vec![FpNode::new(None, 0, None)],
            header,
            flist: flist.clone(),
            tails: alloc::vec![None; flist.len()],
        }
    }

    /// One insertion per transaction after ancestor augmentation and
    /// F-list ordering.
    pub fn construct(db: &TransactionDb, tax: &Taxonomy, flist: &FList) -> Self {
        let mut tree = FpTree::empty(flist);
        for t in &db.transactions {
            let ordered = order_transaction(&augment_with_ancestors(t, tax), flist);
            tree.insert(&ordered, 1);
        }
        tree.finish();
        tree
    }

    /// Inserts a path with weight `count`. Items must follow F-list order.
    pub fn insert(&mut self, ordered: &[Item], count: u64) {
        let mut cur = ROOT;
        for &item in ordered {
            let rank = self
                .flist
                .rank(item)
                .expect("inserted item is not in the tree's F-list");
            cur = match self.nodes[cur].children.get(&rank) {
                Some(&child) => {
                    self.nodes[child].count += count;
                    self.header[rank as usize].total += count;
                    child
                }
                None => self.add_child(cur, rank, count),
            };
        }
    }

    fn add_child(&mut self, parent: NodeId, rank: u32, count: u64) -> NodeId {
        let id = self.nodes.len();
        let entry = &mut self.header[rank as usize];
        self.nodes
            .push(FpNode::new(Some(entry.item), count, Some(parent)));
        self.nodes[parent].children.insert(rank, id);
        entry.total += count;
        match self.tails[rank as usize] {
            Some(tail) => self.nodes[tail].next_same_item = Some(id),
            None => entry.head = Some(id),
        }
        self.tails[rank as usize] = Some(id);
        id
    }

    /// Drops header entries that never received a node.
    fn finish(&mut self) {
        if self.header.iter().all(|e| e.head.is_some()) {
            return;
        }
        let kept: Vec<(Item, u64)> = self
            .header
            .iter()
            .filter(|e| e.head.is_some())
            .map(|e| (e.item, e.total))
            .collect();
        let mut rebuilt = FpTree::empty(&FList::in_order(kept));
        self.copy_children(ROOT, &mut rebuilt, ROOT);
        *self = rebuilt;
    }

    fn copy_children(&self, src: NodeId, dst: &mut FpTree, dst_parent: NodeId) {
        for child in self.nodes[src].children() {
            let node = &self.nodes[child];
            let item = node.item.expect("non-root node without item");
            let rank = dst
                .flist
                .rank(item)
                .expect("copied item missing from F-list");
            let id = dst.add_child(dst_parent, rank, node.count);
            self.copy_children(child, dst, id);
        }
    }

    pub fn root(&self) -> NodeId {
        ROOT
    }

    pub fn node(&self, id: NodeId) -> &FpNode {
        &self.nodes[id]
    }

    pub(crate) fn node_mut(&mut self, id: NodeId) -> &mut FpNode {
        &mut self.nodes[id]
    }

    pub fn header(&self) -> &[HeaderEntry] {
        &self.header
    }

    pub fn flist(&self) -> &FList {
        &self.flist
    }

    pub fn header_entry(&self, item: Item) -> Option<&HeaderEntry> {
        self.flist.rank(item).map(|r| &self.header[r as usize])
    }

    /// Node-link chain of `item`, in insertion order.
    pub fn chain(&self, item: Item) -> impl Iterator<Item = NodeId> + '_ {
        let mut cur = self.header_entry(item).and_then(|e| e.head);
        core::iter::from_fn(move || {
            let id = cur?;
            cur = self.nodes[id].next_same_item;
            Some(id)
        })
    }

    /// Non-root nodes.
    pub fn node_count(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.len() == 1
    }

    /// Root-ward prefix paths of every node on `item`'s chain, weighted by
    /// that node's count. Empty paths are dropped.
    pub fn conditional_pattern_base(&self, item: Item) -> Result<PatternBase> {
        if self.header_entry(item).is_none() {
            return Err(Error::ItemNotInHeader(item));
        }
        let mut paths = Vec::new();
        for id in self.chain(item) {
            let mut path = Vec::new();
            let mut cur = self.nodes[id].parent;
            while let Some(p) = cur {
                if let Some(i) = self.nodes[p].item {
                    path.push(i);
                }
                cur = self.nodes[p].parent;
            }
            if !path.is_empty() {
                path.reverse();
                paths.push((path, self.nodes[id].count));
            }
        }
        Ok(PatternBase { paths })
    }

    /// Splits off the unary chain hanging from the root. Returns the chain
    /// as `(item, count)` pairs root side first, and the subtrees below the
    /// first branching node re-rooted under a fresh root.
    pub fn single_prefix_split(&self) -> (Vec<(Item, u64)>, FpTree) {
        let mut prefix = Vec::new();
        let mut cur = ROOT;
        while self.nodes[cur].children.len() == 1 {
            cur = self.nodes[cur].children().next().unwrap();
            let node = &self.nodes[cur];
            prefix.push((node.item.unwrap(), node.count));
        }
        if cur == ROOT {
            return (prefix, self.clone());
        }
        let mut totals: BTreeMap<Item, u64> = BTreeMap::new();
        let mut stack: Vec<NodeId> = self.nodes[cur].children().collect();
        while let Some(id) = stack.pop() {
            let node = &self.nodes[id];
            *totals.entry(node.item.unwrap()).or_insert(0) += node.count;
            stack.extend(node.children());
        }
        let order: Vec<(Item, u64)> = self
            .flist
            .items()
            .filter_map(|i| totals.get(&i).map(|&c| (i, c)))
            .collect();
        let mut rest = FpTree::empty(&FList::in_order(order));
        self.copy_children(cur, &mut rest, ROOT);
        (prefix, rest)
    }

    /// Multiset of transactions the tree encodes: for every node, the
    /// path ending there weighted by the count not passed on to children.
    pub fn paths(&self) -> Vec<(Vec<Item>, u64)> {
        let mut out = Vec::new();
        let mut stack: Vec<(NodeId, Vec<Item>)> = alloc::vec![(ROOT, Vec::new())];
        while let Some((id, path)) = stack.pop() {
            let node = &self.nodes[id];
            let passed: u64 = node.children().map(|c| self.nodes[c].count).sum();
            if id != ROOT && node.count > passed {
                out.push((path.clone(), node.count - passed));
            }
            for child in node.children() {
                let mut p = path.clone();
                p.push(self.nodes[child].item.unwrap());
                stack.push((child, p));
            }
        }
        out.sort();
        out
    }

    /// Indented `label:count` lines, children in F-list order.
    pub fn dump(&self, label: impl Fn(Item) -> String) -> String {
        let mut out = String::new();
        let mut stack: Vec<(NodeId, usize)> =
            self.nodes[ROOT].children().rev().map(|c| (c, 0)).collect();
        while let Some((id, depth)) = stack.pop() {
            let node = &self.nodes[id];
            for _ in 0..depth {
                out.push_str("  ");
            }
            let _ = writeln!(out, "{}:{}", label(node.item.unwrap()), node.count);
            stack.extend(node.children().rev().map(|c| (c, depth + 1)));
        }
        out
    }
}

/// FP-tree over a conditional pattern base. The local F-list is re-sorted
/// by the base's weighted counts; items below `minsup` are dropped.
pub fn conditional_fptree(base: &PatternBase, minsup: u64) -> FpTree {
    let mut counts: BTreeMap<Item, u64> = BTreeMap::new();
    for (path, count) in &base.paths {
        for &item in path {
            *counts.entry(item).or_insert(0) += count;
        }
    }
    let flist = FList::from_counts(counts, minsup);
    let mut tree = FpTree::empty(&flist);
    if flist.is_empty() {
        return tree;
    }
    for (path, count) in &base.paths {
        let ordered = order_transaction(path, &flist);
        if !ordered.is_empty() {
            tree.insert(&ordered, *count);
        }
    }
    tree.finish();
    tree
}
