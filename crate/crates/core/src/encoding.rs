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

//! Prime-number transaction encoding.
//!
//! Every frequent item gets its own prime code, and a transaction is
//! stored as the product of the codes of the items it contains (absent
//! items contribute a factor of one). An itemset encodes the same way, so
//! by unique factorization an itemset is contained in a transaction exactly
//! when its code divides the transaction's code.
//!
//! Items outside the codebook (infrequent at codebook time) vanish from the
//! encoded rows; the encoded database answers frequent-itemset queries only.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::fptree::FList;
use crate::model::{Item, Transaction, TransactionDb};
use crate::{Error, Result};

/// Primes in ascending order, grown on demand by re-sieving a doubled range.
#[derive(Debug, Clone, Default)]
pub struct Primes {
    found: Vec<u64>,
    limit: u64,
}

impl Primes {
    pub fn new() -> Self {
        Self::default()
    }

    /// The `k`-th prime, 0-based.
    pub fn nth(&mut self, k: usize) -> u64 {
        while self.found.len() <= k {
            self.grow();
        }
        self.found[k]
    }

    pub fn first(&mut self, n: usize) -> &[u64] {
        if n > 0 {
            self.nth(n - 1);
        }
        &self.found[..n]
    }

    fn grow(&mut self) {
        self.limit = (self.limit * 2).max(64);
        let limit = self.limit as usize;
        let mut composite = alloc::vec![false; limit + 1];
        let mut found = Vec::new();
        for n in 2..=limit {
            if composite[n] {
                continue;
            }
            found.push(n as u64);
            let mut multiple = n * n;
            while multiple <= limit {
                composite[multiple] = true;
                multiple += n;
            }
        }
        self.found = found;
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Item to prime assignment.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PrimeCodebook {
    entries: Vec<(Item, u64)>,
    codes: BTreeMap<Item, u64>,
}

impl PrimeCodebook {
    /// Validates that every code is prime and no two items share one.
    pub fn from_entries(entries: Vec<(Item, u64)>) -> Result<Self> {
        let mut codes = BTreeMap::new();
        let mut seen = BTreeMap::new();
        for &(item, p) in &entries {
            if !is_prime(p) {
                return Err(Error::Parse {
                    line: 0,
                    message: format!("code {p} for item {} is not prime", item.0),
                });
            }
            if seen.insert(p, item).is_some() || codes.insert(item, p).is_some() {
                return Err(Error::Parse {
                    line: 0,
                    message: format!("code {p} or item {} assigned twice", item.0),
                });
            }
        }
        Ok(PrimeCodebook { entries, codes })
    }

    /// Assigns the k-th item of `items` the k-th prime.
    pub fn in_order(items: impl IntoIterator<Item = Item>) -> Self {
        let mut primes = Primes::new();
        let entries: Vec<(Item, u64)> = items
            .into_iter()
            .enumerate()
            .map(|(k, item)| (item, primes.nth(k)))
            .collect();
        let codes = entries.iter().copied().collect();
        PrimeCodebook { entries, codes }
    }

    pub fn code(&self, item: Item) -> Option<u64> {
        self.codes.get(&item).copied()
    }

    pub fn entries(&self) -> &[(Item, u64)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Most frequent item gets 2, the next 3, and so on down the F-list.
pub fn assign_primes(flist: &FList) -> PrimeCodebook {
    PrimeCodebook::in_order(flist.items())
}

/// Occurrence indicator: 1 if the item is in the transaction.
pub fn tmv(item: Item, t: &Transaction) -> u8 {
    t.contains(item) as u8
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncodedTransaction {
    pub tid: u64,
    pub m: BigUint,
    /// Number of identical raw rows this row stands for.
    pub multiplicity: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncodedDb {
    pub rows: Vec<EncodedTransaction>,
    pub codebook: PrimeCodebook,
}

impl EncodedDb {
    /// Sum of the bit lengths of all row values.
    pub fn total_bits(&self) -> u64 {
        self.rows.iter().map(|r| r.m.bits()).sum()
    }

    /// Product of all row values, i.e. the product over items of
    /// `code ^ support`.
    pub fn value_product(&self) -> BigUint {
        self.rows.iter().fold(BigUint::one(), |acc, r| {
            acc * r.m.pow(r.multiplicity as u32)
        })
    }
}

pub fn encode_transaction(t: &Transaction, cb: &PrimeCodebook) -> EncodedTransaction {
    let mut m = BigUint::one();
    for &item in &t.items {
        if let Some(p) = cb.code(item) {
            m *= p;
        }
    }
    EncodedTransaction {
        tid: t.id,
        m,
        multiplicity: 1,
    }
}

pub fn encode_db(db: &TransactionDb, cb: &PrimeCodebook) -> EncodedDb {
    EncodedDb {
        rows: db
            .transactions
            .iter()
            .map(|t| encode_transaction(t, cb))
            .collect(),
        codebook: cb.clone(),
    }
}

/// Product of the codes of `items`; 1 for the empty itemset.
pub fn encode_itemset(items: &[Item], cb: &PrimeCodebook) -> Result<BigUint> {
    let mut m = BigUint::one();
    for &item in items {
        m *= cb.code(item).ok_or(Error::UncodedItem(item))?;
    }
    Ok(m)
}

pub fn contains(row: &EncodedTransaction, m_i: &BigUint) -> bool {
    debug_assert!(!m_i.is_zero());
    (&row.m % m_i).is_zero()
}

/// Support by divisibility, weighting merged rows by their multiplicity.
pub fn support_via_encoding(edb: &EncodedDb, items: &[Item]) -> Result<u64> {
    let m_i = encode_itemset(items, &edb.codebook)?;
    Ok(edb
        .rows
        .iter()
        .filter(|r| contains(r, &m_i))
        .map(|r| r.multiplicity)
        .sum())
}

/// Factors a row value back into sorted items. Returns `None` if a factor
/// outside the codebook remains.
pub fn decode(m: &BigUint, cb: &PrimeCodebook) -> Option<Vec<Item>> {
    let mut rest = m.clone();
    let mut items = Vec::new();
    for &(item, p) in cb.entries() {
        if (&rest % p).is_zero() {
            rest /= p;
            items.push(item);
        }
    }
    items.sort_unstable();
    rest.is_one().then_some(items)
}
