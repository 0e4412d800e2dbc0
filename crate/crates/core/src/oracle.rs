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

//! Reference miners: exhaustive enumeration and level-wise Apriori.

use alloc::vec;
use alloc::vec::Vec;

use crate::fptree::augment_with_ancestors;
use crate::model::{Item, Taxonomy, TransactionDb};
use crate::pattern::PatternSet;
use crate::{Error, Result};

/// Largest universe the exhaustive oracles will enumerate.
pub const ENUMERATION_LIMIT: usize = 20;

fn mask_of(items: &[Item]) -> u32 {
    items.iter().fold(0u32, |m, i| m | (1 << i.0))
}

fn items_of(mask: u32) -> Vec<Item> {
    (0..32).filter(|b| mask & (1 << b) != 0).map(Item).collect()
}

fn enumerate(
    masks: &[u32],
    universe: usize,
    minsup: u64,
    keep: impl Fn(u32) -> bool,
) -> PatternSet {
    let mut out = PatternSet::new();
    for candidate in 1u32..(1u32 << universe) {
        if !keep(candidate) {
            continue;
        }
        let support = masks
            .iter()
            .filter(|&&m| m & candidate == candidate)
            .count() as u64;
        if support >= minsup {
            out.insert(items_of(candidate), support);
        }
    }
    out
}

fn check_universe(db: &TransactionDb) -> Result<()> {
    if db.universe() > ENUMERATION_LIMIT {
        return Err(Error::UniverseTooLarge {
            size: db.universe(),
            limit: ENUMERATION_LIMIT,
        });
    }
    Ok(())
}

/// Every itemset over the universe with its exact containment count.
pub fn brute_force_itemsets(db: &TransactionDb, minsup: u64) -> Result<PatternSet> {
    check_universe(db)?;
    let masks: Vec<u32> = db.transactions.iter().map(|t| mask_of(&t.items)).collect();
    Ok(enumerate(&masks, db.universe(), minsup, |_| true))
}

/// Exhaustive generalized mining: transactions are extended with all
/// ancestors, and itemsets holding both an item and one of its ancestors
/// are dropped.
pub fn brute_force_generalized(
    db: &TransactionDb,
    tax: &Taxonomy,
    minsup: u64,
) -> Result<PatternSet> {
    check_universe(db)?;
    let masks: Vec<u32> = db
        .transactions
        .iter()
        .map(|t| mask_of(&augment_with_ancestors(t, tax)))
        .collect();
    let anc_masks: Vec<u32> = db
        .vocab
        .items()
        .map(|i| mask_of(&tax.ancestors_of(i)))
        .collect();
    let mixes_levels = |candidate: u32| {
        (0..db.universe()).any(|i| candidate & (1 << i) != 0 && anc_masks[i] & candidate != 0)
    };
    Ok(enumerate(&masks, db.universe(), minsup, |c| {
        !mixes_levels(c)
    }))
}

/// Transactions as fixed-width bitsets for linear-scan counting.
struct BitRows {
    words: usize,
    bits: Vec<u64>,
}

impl BitRows {
    fn new(db: &TransactionDb) -> Self {
        let words = db.universe().div_ceil(64).max(1);
        let mut bits = vec![0u64; words * db.len()];
        for (row, t) in db.transactions.iter().enumerate() {
            for i in &t.items {
                bits[row * words + i.index() / 64] |= 1 << (i.index() % 64);
            }
        }
        BitRows { words, bits }
    }

    fn mask(&self, items: &[Item]) -> Vec<u64> {
        let mut m = vec![0u64; self.words];
        for i in items {
            m[i.index() / 64] |= 1 << (i.index() % 64);
        }
        m
    }

    fn count(&self, mask: &[u64]) -> u64 {
        self.bits
            .chunks_exact(self.words)
            .filter(|row| row.iter().zip(mask).all(|(r, m)| r & m == *m))
            .count() as u64
    }
}

/// Level-wise candidate generation: sorted (k-1)-itemsets sharing a
/// (k-2)-prefix are joined, candidates with an infrequent (k-1)-subset are
/// pruned, and survivors are counted by a linear scan.
pub fn apriori(db: &TransactionDb, minsup: u64) -> PatternSet {
    let mut out = PatternSet::new();
    let mut singles = vec![0u64; db.universe()];
    for t in &db.transactions {
        for i in &t.items {
            singles[i.index()] += 1;
        }
    }
    let mut level: Vec<Vec<Item>> = Vec::new();
    for (i, &c) in singles.iter().enumerate() {
        if c >= minsup {
            out.insert([Item(i as u32)], c);
            level.push(vec![Item(i as u32)]);
        }
    }
    if level.len() < 2 {
        return out;
    }

    let rows = BitRows::new(db);
    while level.len() > 1 {
        let mut next = Vec::new();
        for (a_idx, a) in level.iter().enumerate() {
            let k = a.len();
            for b in level[a_idx + 1..].iter() {
                if a[..k - 1] != b[..k - 1] {
                    break;
                }
                let mut cand = a.clone();
                cand.push(b[k - 1]);
                if !all_subsets_frequent(&cand, &level) {
                    continue;
                }
                let support = rows.count(&rows.mask(&cand));
                if support >= minsup {
                    next.push(cand);
                    out.insert(next.last().unwrap().iter().copied(), support);
                }
            }
        }
        level = next;
    }
    out
}

/// `level` is sorted; the two subsets dropping one of the last two items
/// are the join parents and are skipped.
fn all_subsets_frequent(cand: &[Item], level: &[Vec<Item>]) -> bool {
    let k = cand.len();
    let mut sub = Vec::with_capacity(k - 1);
    for skip in 0..k.saturating_sub(2) {
        sub.clear();
        sub.extend(
            cand.iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, &x)| x),
        );
        if level.binary_search(&sub).is_err() {
            return false;
        }
    }
    true
}
