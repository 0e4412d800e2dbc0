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

//! Frequent pattern mining over prefix trees.
//!
//! The crate is `no_std` (it only needs `alloc`) and contains every mining
//! algorithm: FP-tree construction, FP-growth, the taxonomy-aware FP-tax
//! traversals, prime-number transaction encoding, interval mining over
//! timestamped data, rule generation, and the exhaustive/Apriori oracles
//! used to check all of them. File IO and the command line live in the
//! `fpmine` crate.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod error;

pub mod encoding;
pub mod fpgrowth;
pub mod fptax;
pub mod fptree;
pub mod model;
pub mod oracle;
pub mod pattern;
pub mod rules;
pub mod temporal;

pub use error::Error;
pub use fpgrowth::{fp_growth, FpGrowth, MiningStats};
pub use fptree::{FList, FpTree};
pub use model::{Item, SupportThreshold, Taxonomy, Transaction, TransactionDb, Vocabulary};
pub use pattern::PatternSet;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[cfg(test)]
mod testutil;
