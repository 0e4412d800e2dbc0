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

//! Association rules from frequent itemsets, and closed-itemset filtering.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::model::{is_sorted_subset, Item};
use crate::pattern::PatternSet;
use crate::{Error, Result};

/// `antecedent => consequent`, both sorted and disjoint.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Rule {
    pub antecedent: Vec<Item>,
    pub consequent: Vec<Item>,
    /// Support of antecedent ∪ consequent.
    pub support: u64,
    pub antecedent_support: u64,
}

impl Rule {
    pub fn confidence(&self) -> f64 {
        self.support as f64 / self.antecedent_support as f64
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RuleSet {
    /// Sorted by antecedent, then consequent.
    pub rules: Vec<Rule>,
    /// Patterns skipped for exceeding the size guard.
    pub oversized_patterns: usize,
}

impl RuleSet {
    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Rule> {
        self.rules.iter()
    }
}

pub const DEFAULT_MAX_PATTERN_LEN: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RuleOptions {
    pub min_confidence: f64,
    /// Patterns longer than this produce no rules; each has 2^len subsets.
    pub max_pattern_len: usize,
}

impl RuleOptions {
    pub fn new(min_confidence: f64) -> Self {
        RuleOptions {
            min_confidence,
            max_pattern_len: DEFAULT_MAX_PATTERN_LEN,
        }
    }
}

pub fn generate_rules(patterns: &PatternSet, minconf: f64) -> Result<RuleSet> {
    generate_rules_with(patterns, &RuleOptions::new(minconf))
}

/// Every split of every pattern of two or more items into a non-empty
/// antecedent and consequent whose confidence reaches the threshold.
/// Antecedent supports are looked up in `patterns`, which must therefore be
/// downward closed.
pub fn generate_rules_with(patterns: &PatternSet, opts: &RuleOptions) -> Result<RuleSet> {
    let mut out = RuleSet::default();
    for (items, support) in patterns.iter() {
        let k = items.len();
        if k < 2 {
            continue;
        }
        if k > opts.max_pattern_len {
            out.oversized_patterns += 1;
            continue;
        }
        let full = (1u32 << k) - 1;
        for mask in 1..full {
            let mut antecedent = Vec::new();
            let mut consequent = Vec::new();
            for (i, &x) in items.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    antecedent.push(x);
                } else {
                    consequent.push(x);
                }
            }
            let antecedent_support = patterns
                .get(&antecedent)
                .ok_or_else(|| Error::MissingSubset(antecedent.clone()))?;
            if (support as f64) / (antecedent_support as f64) < opts.min_confidence {
                continue;
            }
            out.rules.push(Rule {
                antecedent,
                consequent,
                support,
                antecedent_support,
            });
        }
    }
    out.rules.sort();
    Ok(out)
}

/// Keeps the patterns that have no proper superset of equal support.
pub fn closed_filter(patterns: &PatternSet) -> PatternSet {
    let mut by_support: BTreeMap<u64, Vec<&[Item]>> = BTreeMap::new();
    for (items, support) in patterns.iter() {
        by_support.entry(support).or_default().push(items);
    }
    let mut out = PatternSet::new();
    for (&support, group) in &by_support {
        for &items in group {
            let absorbed = group
                .iter()
                .any(|other| other.len() > items.len() && is_sorted_subset(items, other));
            if !absorbed {
                out.insert(items.iter().copied(), support);
            }
        }
    }
    out
}

/// Support of `items` recovered from a closed set: the largest support
/// among its closed supersets.
pub fn support_from_closed(closed: &PatternSet, items: &[Item]) -> Option<u64> {
    closed
        .iter()
        .filter(|(c, _)| is_sorted_subset(items, c))
        .map(|(_, s)| s)
        .max()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpgrowth::fp_growth;
    use crate::fptree::{build_flist, FpTree};
    use crate::model::Taxonomy;
    use crate::testutil::random_db;
    use alloc::vec;
    use proptest::prelude::*;

    fn set(entries: &[(&[u32], u64)]) -> PatternSet {
        entries
            .iter()
            .map(|&(items, s)| (items.iter().map(|&i| Item(i)).collect(), s))
            .collect()
    }

    #[test]
    fn rules_at_three_quarters() {
        let p = set(&[(&[0], 4), (&[1], 4), (&[0, 1], 3)]);
        let rules = generate_rules(&p, 0.7).unwrap();
        assert_eq!(rules.len(), 2);
        assert_eq!(rules.rules[0].antecedent, vec![Item(0)]);
        assert_eq!(rules.rules[0].consequent, vec![Item(1)]);
        assert_eq!(rules.rules[1].antecedent, vec![Item(1)]);
        assert!(rules.iter().all(|r| r.confidence() == 0.75));

        assert!(generate_rules(&p, 0.8).unwrap().is_empty());
        // threshold exactly at the confidence is inclusive
        assert_eq!(generate_rules(&p, 0.75).unwrap().len(), 2);
    }

    #[test]
    fn singletons_give_no_rules() {
        let p = set(&[(&[0], 4), (&[1], 2)]);
        assert!(generate_rules(&p, 0.0).unwrap().is_empty());
    }

    #[test]
    fn missing_subset_is_an_error() {
        let p = set(&[(&[0], 4), (&[0, 1], 3)]);
        assert_eq!(
            generate_rules(&p, 0.1),
            Err(Error::MissingSubset(vec![Item(1)]))
        );
    }

    #[test]
    fn size_guard() {
        let items: Vec<u32> = (0..4).collect();
        let mut p = PatternSet::new();
        for mask in 1u32..16 {
            p.insert(
                items
                    .iter()
                    .filter(|&&i| mask & (1 << i) != 0)
                    .map(|&i| Item(i)),
                2,
            );
        }
        let opts = RuleOptions {
            min_confidence: 0.5,
            max_pattern_len: 3,
        };
        let rules = generate_rules_with(&p, &opts).unwrap();
        assert_eq!(rules.oversized_patterns, 1);
        assert!(rules
            .iter()
            .all(|r| r.antecedent.len() + r.consequent.len() <= 3));
        // 6 pairs * 2 + 4 triples * 6
        assert_eq!(rules.len(), 36);
    }

    #[test]
    fn closed_examples() {
        let p = set(&[(&[0], 4), (&[0, 1], 4), (&[0, 1, 2], 3)]);
        assert_eq!(closed_filter(&p), set(&[(&[0, 1], 4), (&[0, 1, 2], 3)]));

        let p = set(&[(&[0], 5), (&[1], 4), (&[0, 1], 3)]);
        assert_eq!(closed_filter(&p), p);

        assert!(closed_filter(&PatternSet::new()).is_empty());
    }

    proptest! {
        #[test]
        fn closed_set_is_lossless((d, minsup) in random_db(8, 12)) {
            let tax = Taxonomy::new();
            let tree = FpTree::construct(&d, &tax, &build_flist(&d, &tax, minsup));
            let all = fp_growth(&tree, &[], minsup);
            let closed = closed_filter(&all);
            for (items, s) in all.iter() {
                prop_assert_eq!(support_from_closed(&closed, items), Some(s));
            }
        }

        #[test]
        fn rule_confidence_bounds((d, minsup) in random_db(8, 12), minconf in 0.0f64..1.0) {
            let tax = Taxonomy::new();
            let tree = FpTree::construct(&d, &tax, &build_flist(&d, &tax, minsup));
            let all = fp_growth(&tree, &[], minsup);
            let rules = generate_rules(&all, minconf).unwrap();
            for r in rules.iter() {
                let c = r.confidence();
                prop_assert!(c >= minconf && c <= 1.0 && c > 0.0);
                prop_assert!(c >= r.support as f64 / d.len() as f64);
                let mut union = r.antecedent.clone();
                union.extend(&r.consequent);
                union.sort();
                prop_assert_eq!(d.support(&union), r.support);
                prop_assert_eq!(d.support(&r.antecedent), r.antecedent_support);
            }
        }
    }
}
