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

//! Fixtures shared by the unit tests.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use proptest::prelude::*;

use crate::model::{parse_taxonomy, parse_transactions, Item, Taxonomy, TransactionDb, Vocabulary};

/// One transaction per string, one item per character.
pub fn db(rows: &[&str]) -> TransactionDb {
    let text: String = rows
        .iter()
        .map(|r| {
            let mut line: String = r.chars().flat_map(|c| [c, ' ']).collect();
            line.push('\n');
            line
        })
        .collect();
    let mut db = parse_transactions(&text, false).unwrap();
    // keep the exact row count even for empty rows
    if db.len() != rows.len() {
        db = TransactionDb::from_rows(
            db.vocab.clone(),
            rows.iter().map(|r| {
                r.chars()
                    .map(|c| db.vocab.get(&c.to_string()).unwrap())
                    .collect()
            }),
        );
    }
    db
}

pub fn id(db: &TransactionDb, label: &str) -> Item {
    db.vocab.get(label).unwrap()
}

pub fn ids(db: &TransactionDb, labels: &str) -> Vec<Item> {
    let mut v: Vec<Item> = labels.chars().map(|c| id(db, &c.to_string())).collect();
    v.sort();
    v
}

pub fn label_fn(db: &TransactionDb) -> impl Fn(Item) -> String + '_ {
    move |i| db.vocab.label(i).to_string()
}

/// `{bread, cola}, {bread, pepsi}, {cola}` with cola and pepsi under soda.
pub fn soda_db() -> (TransactionDb, Taxonomy) {
    let mut db = parse_transactions("bread cola\nbread pepsi\ncola\n", false).unwrap();
    let tax = parse_taxonomy("cola\tsoda\npepsi\tsoda\n", &mut db).unwrap();
    (db, tax)
}

/// Random database over at most `max_items` items with at most `max_tx`
/// transactions, paired with a threshold in 1..=5.
pub fn random_db(max_items: usize, max_tx: usize) -> impl Strategy<Value = (TransactionDb, u64)> {
    (1..=max_items).prop_flat_map(move |n| {
        (
            proptest::collection::vec(proptest::collection::vec(0..n as u32, 0..=n), 0..=max_tx),
            1u64..=5,
        )
            .prop_map(move |(rows, minsup)| {
                let db = TransactionDb::from_rows(
                    Vocabulary::numbered(n),
                    rows.into_iter().map(|r| r.into_iter().map(Item).collect()),
                );
                (db, minsup)
            })
    })
}

/// Random database over up to `leaves` leaf items and up to `ancestors`
/// internal taxonomy items. Leaves are optionally parented to an internal
/// item; internal item `j` is optionally parented to a higher internal item,
/// so ancestor chains can be several levels deep.
pub fn random_tax_db(
    leaves: usize,
    ancestors: usize,
    max_tx: usize,
) -> impl Strategy<Value = (TransactionDb, Taxonomy, u64)> {
    (1..=leaves, 1..=ancestors).prop_flat_map(move |(n, k)| {
        (
            proptest::collection::vec(proptest::collection::vec(0..n as u32, 0..=n), 0..=max_tx),
            proptest::collection::vec(proptest::option::of(0..k as u32), n),
            proptest::collection::vec(proptest::option::of(0..k as u32), k),
            1u64..=5,
        )
            .prop_map(move |(rows, leaf_parent, upper_parent, minsup)| {
                let vocab = Vocabulary::numbered(n + k);
                let mut edges = Vec::new();
                for (leaf, p) in leaf_parent.iter().enumerate() {
                    if let Some(p) = p {
                        edges.push((Item(leaf as u32), Item((n as u32) + p)));
                    }
                }
                for (j, q) in upper_parent.iter().enumerate() {
                    if let Some(q) = q {
                        if (*q as usize) > j {
                            edges.push((Item((n + j) as u32), Item((n as u32) + q)));
                        }
                    }
                }
                let tax = Taxonomy::from_edges(edges, &vocab).unwrap();
                let db = TransactionDb::from_rows(
                    vocab,
                    rows.into_iter().map(|r| r.into_iter().map(Item).collect()),
                );
                (db, tax, minsup)
            })
    })
}
