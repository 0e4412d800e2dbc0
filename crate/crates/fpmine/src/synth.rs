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

//! Seeded synthetic transaction databases.

use fpmine_core::{Item, Transaction, TransactionDb, Vocabulary};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Poisson};

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SynthSpec {
    pub items: usize,
    pub transactions: usize,
    pub avg_len: usize,
    pub seed: u64,
    pub temporal: bool,
}

/// Item `k` (0-based) is drawn with weight `1 / (k + 1)`. Lengths are
/// Poisson around `avg_len`, clamped to `1..=items`. Timestamps, when asked
/// for, are uniform over `0..transactions`.
pub fn generate(spec: &SynthSpec) -> Result<TransactionDb> {
    if spec.items == 0 {
        return Err(Error::usage("--items must be positive"));
    }
    if spec.avg_len == 0 || spec.avg_len > spec.items {
        return Err(Error::usage(format!(
            "--avg-len must be in 1..={} (the item count)",
            spec.items
        )));
    }
    let mut vocab = Vocabulary::new();
    let items: Vec<Item> = (1..=spec.items)
        .map(|k| vocab.intern(&format!("i{k}")))
        .collect();
    let weights: Vec<f64> = (0..spec.items).map(|k| 1.0 / (k as f64 + 1.0)).collect();

    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let lengths = Poisson::new(spec.avg_len as f64).expect("positive mean");
    let mut keys: Vec<(f64, usize)> = Vec::with_capacity(spec.items);
    let mut transactions = Vec::with_capacity(spec.transactions);
    for n in 0..spec.transactions {
        let len = (lengths.sample(&mut rng) as usize).clamp(1, spec.items);
        // Weighted sampling without replacement: keep the `len` largest
        // u^(1/w) keys.
        keys.clear();
        for (k, w) in weights.iter().enumerate() {
            let u: f64 = rng.random();
            keys.push((u.powf(1.0 / w), k));
        }
        keys.sort_unstable_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(&b.1)));
        let chosen = keys[..len].iter().map(|&(_, k)| items[k]);
        let timestamp = spec
            .temporal
            .then(|| rng.random_range(0..spec.transactions.max(1) as u64));
        transactions.push(Transaction::new(n as u64 + 1, chosen, timestamp));
    }
    Ok(TransactionDb {
        transactions,
        vocab,
        temporal: spec.temporal,
    })
}
