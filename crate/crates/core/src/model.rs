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

//! Items, transactions, taxonomies and support thresholds.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::{Error, Result};

/// Dense item identifier within one [`Vocabulary`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Item(pub u32);

impl Item {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Interns item labels to contiguous ids in first-appearance order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Vocabulary {
    labels: Vec<String>,
    ids: BTreeMap<String, Item>,
}

impl Vocabulary {
    pub fn new() -> Self {
        Self::default()
    }

    /// Vocabulary with labels `i0`, `i1`, ... for `n` items.
    pub fn numbered(n: usize) -> Self {
        let mut vocab = Self::new();
        for i in 0..n {
            vocab.intern(&format!("i{i}"));
        }
        vocab
    }

    pub fn intern(&mut self, label: &str) -> Item {
        if let Some(&item) = self.ids.get(label) {
            return item;
        }
        let item = Item(self.labels.len() as u32);
        self.labels.push(label.to_string());
        self.ids.insert(label.to_string(), item);
        item
    }

    pub fn get(&self, label: &str) -> Option<Item> {
        self.ids.get(label).copied()
    }

    pub fn label(&self, item: Item) -> &str {
        &self.labels[item.index()]
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn items(&self) -> impl Iterator<Item = Item> + '_ {
        (0..self.labels.len() as u32).map(Item)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transaction {
    pub id: u64,
    /// Sorted and duplicate-free.
    pub items: Vec<Item>,
    pub timestamp: Option<u64>,
}

impl Transaction {
    pub fn new(id: u64, items: impl IntoIterator<Item = Item>, timestamp: Option<u64>) -> Self {
        Transaction {
            id,
            items: normalize(items),
            timestamp,
        }
    }

    pub fn contains(&self, item: Item) -> bool {
        self.items.binary_search(&item).is_ok()
    }

    /// `items` must be sorted.
    pub fn contains_all(&self, items: &[Item]) -> bool {
        is_sorted_subset(items, &self.items)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TransactionDb {
    pub transactions: Vec<Transaction>,
    pub vocab: Vocabulary,
    pub temporal: bool,
}

impl TransactionDb {
    /// Builds an untimed database over `vocab`, assigning ids 1..=n.
    pub fn from_rows(vocab: Vocabulary, rows: impl IntoIterator<Item = Vec<Item>>) -> Self {
        let transactions = rows
            .into_iter()
            .enumerate()
            .map(|(i, items)| Transaction::new(i as u64 + 1, items, None))
            .collect();
        TransactionDb {
            transactions,
            vocab,
            temporal: false,
        }
    }

    pub fn universe(&self) -> usize {
        self.vocab.len()
    }

    pub fn len(&self) -> usize {
        self.transactions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.transactions.is_empty()
    }

    /// Number of transactions containing every item of the sorted itemset.
    pub fn support(&self, items: &[Item]) -> u64 {
        self.transactions
            .iter()
            .filter(|t| t.contains_all(items))
            .count() as u64
    }
}

/// Parses the transaction text format: one transaction per line with
/// whitespace-separated labels, or `<timestamp> | <labels...>` when
/// `temporal` is set. Blank lines and `#` comments are skipped.
pub fn parse_transactions(text: &str, temporal: bool) -> Result<TransactionDb> {
    let mut vocab = Vocabulary::new();
    let mut transactions = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parse_err = |message: String| Error::Parse {
            line: lineno + 1,
            message,
        };
        let (timestamp, body) = if temporal {
            let (ts, rest) = line
                .split_once('|')
                .ok_or_else(|| parse_err("expected `<timestamp> | <items>`".into()))?;
            let ts = ts.trim();
            let ts = ts
                .parse::<u64>()
                .map_err(|_| parse_err(format!("invalid timestamp `{ts}`")))?;
            (Some(ts), rest)
        } else {
            (None, line)
        };
        let mut items = Vec::new();
        for token in body.split_whitespace() {
            if token == "|" {
                return Err(parse_err("unexpected `|` in an untimed transaction".into()));
            }
            items.push(vocab.intern(token));
        }
        let id = transactions.len() as u64 + 1;
        transactions.push(Transaction::new(id, items, timestamp));
    }
    Ok(TransactionDb {
        transactions,
        vocab,
        temporal,
    })
}

/// Is-a hierarchy over items. Every item has at most one parent.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Taxonomy {
    parent: BTreeMap<Item, Item>,
}

impl Taxonomy {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a taxonomy from `(child, parent)` edges, rejecting second
    /// parents and cycles. Labels in errors come from `vocab`.
    pub fn from_edges(
        edges: impl IntoIterator<Item = (Item, Item)>,
        vocab: &Vocabulary,
    ) -> Result<Self> {
        let mut parent = BTreeMap::new();
        for (child, p) in edges {
            match parent.get(&child) {
                Some(&existing) if existing != p => {
                    return Err(Error::MultipleParents {
                        child: vocab.label(child).into(),
                        first: vocab.label(existing).into(),
                        second: vocab.label(p).into(),
                    });
                }
                _ => {
                    parent.insert(child, p);
                }
            }
        }
        let tax = Taxonomy { parent };
        tax.check_acyclic(vocab)?;
        Ok(tax)
    }

    fn check_acyclic(&self, vocab: &Vocabulary) -> Result<()> {
        let mut cleared: BTreeSet<Item> = BTreeSet::new();
        for &start in self.parent.keys() {
            let mut path = Vec::new();
            let mut on_path = BTreeSet::new();
            let mut cur = Some(start);
            while let Some(item) = cur {
                if cleared.contains(&item) {
                    break;
                }
                if !on_path.insert(item) {
                    let from = path.iter().position(|&p| p == item).unwrap_or(0);
                    let mut cycle: Vec<String> = path[from..]
                        .iter()
                        .map(|&i| vocab.label(i).into())
                        .collect();
                    cycle.push(vocab.label(item).into());
                    return Err(Error::TaxonomyCycle { cycle });
                }
                path.push(item);
                cur = self.parent.get(&item).copied();
            }
            cleared.extend(path);
        }
        Ok(())
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn parent(&self, item: Item) -> Option<Item> {
        self.parent.get(&item).copied()
    }

    pub fn edges(&self) -> impl Iterator<Item = (Item, Item)> + '_ {
        self.parent.iter().map(|(&c, &p)| (c, p))
    }

    /// All transitive ancestors, nearest first.
    pub fn ancestors_of(&self, item: Item) -> Vec<Item> {
        let mut out = Vec::new();
        let mut cur = self.parent(item);
        while let Some(p) = cur {
            out.push(p);
            cur = self.parent(p);
        }
        out
    }

    pub fn is_ancestor(&self, ancestor: Item, item: Item) -> bool {
        let mut cur = self.parent(item);
        while let Some(p) = cur {
            if p == ancestor {
                return true;
            }
            cur = self.parent(p);
        }
        false
    }
}

/// Parses `child<TAB>parent` lines, interning unseen labels (typically
/// ancestors that never occur in raw transactions) into `db`'s vocabulary.
pub fn parse_taxonomy(text: &str, db: &mut TransactionDb) -> Result<Taxonomy> {
    let mut edges = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim_end_matches(['\r', '\n']);
        if line.trim().is_empty() || line.trim_start().starts_with('#') {
            continue;
        }
        let (child, parent) = line
            .split_once('\t')
            .map(|(c, p)| (c.trim(), p.trim()))
            .filter(|(c, p)| !c.is_empty() && !p.is_empty() && !p.contains('\t'))
            .ok_or_else(|| Error::Parse {
                line: lineno + 1,
                message: "expected `child<TAB>parent`".into(),
            })?;
        edges.push((db.vocab.intern(child), db.vocab.intern(parent)));
    }
    Taxonomy::from_edges(edges, &db.vocab)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SupportThreshold {
    Count(u64),
    /// Fraction of transactions in (0, 1].
    Fraction(f64),
}

// Products like 0.3 * 10 land a hair above the integer they denote.
const CEIL_SLACK: f64 = 1e-9;

impl SupportThreshold {
    /// Absolute count for a database of `n` transactions. Fractions round up.
    pub fn resolve(self, n: usize) -> Result<u64> {
        let count = match self {
            SupportThreshold::Count(c) => c,
            SupportThreshold::Fraction(f) => {
                if !(f > 0.0 && f <= 1.0) {
                    return Err(Error::InvalidThreshold(format!(
                        "fraction {f} is outside (0, 1]"
                    )));
                }
                if n == 0 {
                    return Err(Error::EmptyDatabase);
                }
                let exact = f * n as f64;
                let whole = exact as u64;
                if exact - whole as f64 <= CEIL_SLACK {
                    whole
                } else {
                    whole + 1
                }
            }
        };
        if count == 0 {
            return Err(Error::ZeroSupport);
        }
        Ok(count)
    }
}

pub fn resolve_threshold(t: SupportThreshold, db: &TransactionDb) -> Result<u64> {
    t.resolve(db.len())
}

/// Sorts and deduplicates.
pub fn normalize(items: impl IntoIterator<Item = Item>) -> Vec<Item> {
    let mut v: Vec<Item> = items.into_iter().collect();
    v.sort_unstable();
    v.dedup();
    v
}

/// Both slices sorted ascending.
pub fn is_sorted_subset(needle: &[Item], hay: &[Item]) -> bool {
    let mut it = hay.iter();
    'outer: for x in needle {
        for y in it.by_ref() {
            if y == x {
                continue 'outer;
            }
            if y > x {
                return false;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn labels(db: &TransactionDb, t: &Transaction) -> Vec<String> {
        t.items
            .iter()
            .map(|&i| db.vocab.label(i).to_string())
            .collect()
    }

    #[test]
    fn parses_plain_lines() {
        let db = parse_transactions("a b c\na b\n", false).unwrap();
        assert_eq!(db.len(), 2);
        assert_eq!(db.universe(), 3);
        assert_eq!(db.transactions[0].id, 1);
        assert_eq!(db.transactions[1].id, 2);
        assert_eq!(db.vocab.get("a"), Some(Item(0)));
        assert_eq!(db.vocab.get("c"), Some(Item(2)));
    }

    #[test]
    fn duplicate_items_are_dropped() {
        let db = parse_transactions("a a b\n", false).unwrap();
        assert_eq!(labels(&db, &db.transactions[0]), vec!["a", "b"]);
    }

    #[test]
    fn parses_timestamps() {
        let db = parse_transactions("10 | a b\n", true).unwrap();
        assert!(db.temporal);
        assert_eq!(db.transactions[0].timestamp, Some(10));
        assert_eq!(labels(&db, &db.transactions[0]), vec!["a", "b"]);
    }

    #[test]
    fn comments_and_blank_lines_skipped() {
        let db = parse_transactions("# header\n\na\n  # indented\nb\n", false).unwrap();
        assert_eq!(db.len(), 2);
        assert_eq!(db.transactions[1].id, 2);
    }

    #[test]
    fn malformed_lines_report_line_numbers() {
        let err = parse_transactions("1 | a\nno bar here\n", true).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err:?}");
        let err = parse_transactions("x | a\n", true).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = parse_transactions("a\n3 | a\n", false).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn interning_is_stable() {
        let text = "z y\nx z w\n";
        let a = parse_transactions(text, false).unwrap();
        let b = parse_transactions(text, false).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn taxonomy_parent_links() {
        let mut db = parse_transactions("cola bread\n", false).unwrap();
        let tax = parse_taxonomy("cola\tsoda\npepsi\tsoda\n", &mut db).unwrap();
        let soda = db.vocab.get("soda").unwrap();
        assert_eq!(tax.parent(db.vocab.get("cola").unwrap()), Some(soda));
        assert_eq!(tax.parent(db.vocab.get("pepsi").unwrap()), Some(soda));
        // ancestors are interned but absent from raw transactions
        assert_eq!(db.universe(), 4);
        assert!(!db.transactions[0].contains(soda));
    }

    #[test]
    fn taxonomy_cycle_rejected() {
        let mut db = TransactionDb::default();
        let err = parse_taxonomy("a\tb\nb\ta\n", &mut db).unwrap_err();
        match err {
            Error::TaxonomyCycle { cycle } => {
                assert_eq!(cycle.first(), cycle.last());
                assert!(cycle.contains(&"a".into()) && cycle.contains(&"b".into()));
            }
            other => panic!("unexpected {other:?}"),
        }
        let err = parse_taxonomy("a\ta\n", &mut db).unwrap_err();
        assert!(matches!(err, Error::TaxonomyCycle { .. }));
    }

    #[test]
    fn taxonomy_second_parent_rejected() {
        let mut db = TransactionDb::default();
        let err = parse_taxonomy("a\tb\na\tc\n", &mut db).unwrap_err();
        assert!(matches!(err, Error::MultipleParents { .. }));
        // a repeated identical edge is fine
        parse_taxonomy("a\tb\na\tb\n", &mut db).unwrap();
    }

    #[test]
    fn empty_taxonomy_file() {
        let mut db = TransactionDb::default();
        let tax = parse_taxonomy("", &mut db).unwrap();
        assert!(tax.is_empty());
    }

    #[test]
    fn malformed_taxonomy_line() {
        let mut db = TransactionDb::default();
        let err = parse_taxonomy("a b\n", &mut db).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
    }

    #[test]
    fn ancestors_nearest_first() {
        let mut db = TransactionDb::default();
        let tax = parse_taxonomy("cola\tsoda\nsoda\tbeverage\n", &mut db).unwrap();
        let id = |l: &str| db.vocab.get(l).unwrap();
        assert_eq!(
            tax.ancestors_of(id("cola")),
            vec![id("soda"), id("beverage")]
        );
        assert_eq!(tax.ancestors_of(id("soda")), vec![id("beverage")]);
        assert_eq!(tax.ancestors_of(id("beverage")), vec![]);
        assert!(tax.is_ancestor(id("beverage"), id("cola")));
        assert!(!tax.is_ancestor(id("cola"), id("beverage")));
    }

    #[test]
    fn thresholds() {
        assert_eq!(SupportThreshold::Fraction(0.5).resolve(6), Ok(3));
        assert_eq!(SupportThreshold::Count(3).resolve(6), Ok(3));
        assert_eq!(SupportThreshold::Fraction(0.34).resolve(10), Ok(4));
        assert_eq!(SupportThreshold::Fraction(0.3).resolve(10), Ok(3));
        assert_eq!(SupportThreshold::Fraction(1.0).resolve(7), Ok(7));
        assert_eq!(
            SupportThreshold::Count(0).resolve(6),
            Err(Error::ZeroSupport)
        );
        assert!(SupportThreshold::Fraction(1.5).resolve(6).is_err());
        assert!(SupportThreshold::Fraction(0.0).resolve(6).is_err());
        assert_eq!(
            SupportThreshold::Fraction(0.5).resolve(0),
            Err(Error::EmptyDatabase)
        );
    }

    #[test]
    fn sorted_subset() {
        let v = |xs: &[u32]| xs.iter().map(|&x| Item(x)).collect::<Vec<_>>();
        assert!(is_sorted_subset(&v(&[]), &v(&[1])));
        assert!(is_sorted_subset(&v(&[1, 3]), &v(&[0, 1, 2, 3])));
        assert!(!is_sorted_subset(&v(&[1, 4]), &v(&[0, 1, 2, 3])));
        assert!(!is_sorted_subset(&v(&[2]), &v(&[])));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn fraction_resolves_within_bounds(f in 0.001f64..=1.0, n in 1usize..500) {
                if let Ok(c) = SupportThreshold::Fraction(f).resolve(n) {
                    prop_assert!(c >= 1 && c as usize <= n);
                    // at least f of the transactions, and the smallest such count
                    prop_assert!(c as f64 >= f * n as f64 - 1e-6);
                    prop_assert!(((c - 1) as f64) < f * n as f64);
                }
            }

            #[test]
            fn ancestors_never_repeat_or_self(parents in proptest::collection::vec(proptest::option::of(0u32..12), 12)) {
                // parent index strictly greater than child keeps it acyclic
                let vocab = Vocabulary::numbered(24);
                let edges: Vec<(Item, Item)> = parents
                    .iter()
                    .enumerate()
                    .filter_map(|(c, p)| p.map(|p| (Item(c as u32), Item(c as u32 + 1 + p))))
                    .collect();
                let tax = Taxonomy::from_edges(edges, &vocab).unwrap();
                for item in vocab.items() {
                    let anc = tax.ancestors_of(item);
                    prop_assert!(!anc.contains(&item));
                    prop_assert_eq!(normalize(anc.iter().copied()).len(), anc.len());
                }
            }
        }
    }
}
