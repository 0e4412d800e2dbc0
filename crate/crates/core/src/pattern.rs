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

use alloc::collections::btree_map::{self, BTreeMap};
use alloc::vec::Vec;

use crate::model::{normalize, Item};

/// Frequent itemsets keyed by their sorted item list.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PatternSet {
    patterns: BTreeMap<Vec<Item>, u64>,
}

impl PatternSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Inserts an itemset given in any order. An existing entry is replaced.
    pub fn insert(&mut self, items: impl IntoIterator<Item = Item>, support: u64) {
        self.patterns.insert(normalize(items), support);
    }

    /// `items` must be sorted.
    pub fn get(&self, items: &[Item]) -> Option<u64> {
        self.patterns.get(items).copied()
    }

    pub fn contains(&self, items: &[Item]) -> bool {
        self.patterns.contains_key(items)
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[Item], u64)> + '_ {
        self.patterns.iter().map(|(k, &v)| (k.as_slice(), v))
    }

    pub fn extend(&mut self, other: PatternSet) {
        self.patterns.extend(other.patterns);
    }

    pub fn retain(&mut self, mut keep: impl FnMut(&[Item], u64) -> bool) {
        self.patterns.retain(|k, v| keep(k, *v));
    }

    /// Sorted union of all items appearing in any pattern.
    pub fn vocabulary(&self) -> Vec<Item> {
        normalize(self.patterns.keys().flatten().copied())
    }
}

impl IntoIterator for PatternSet {
    type Item = (Vec<Item>, u64);
    type IntoIter = btree_map::IntoIter<Vec<Item>, u64>;

    fn into_iter(self) -> Self::IntoIter {
        self.patterns.into_iter()
    }
}

impl FromIterator<(Vec<Item>, u64)> for PatternSet {
    fn from_iter<T: IntoIterator<Item = (Vec<Item>, u64)>>(iter: T) -> Self {
        let mut set = PatternSet::new();
        for (items, support) in iter {
            set.insert(items, support);
        }
        set
    }
}
