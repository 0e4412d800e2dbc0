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

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::model::Item;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A transaction or taxonomy line could not be parsed.
    Parse {
        line: usize,
        message: String,
    },
    /// The taxonomy contains a cycle; labels are listed in parent order.
    TaxonomyCycle {
        cycle: Vec<String>,
    },
    /// A taxonomy item was given two different parents.
    MultipleParents {
        child: String,
        first: String,
        second: String,
    },
    InvalidThreshold(String),
    /// A support threshold resolved to a count of zero.
    ZeroSupport,
    EmptyDatabase,
    ItemNotInHeader(Item),
    UncodedItem(Item),
    NotTemporal,
    InvalidIntervalWidth,
    /// Pattern sets handed to the cross product share items.
    OverlappingVocabulary(Item),
    UniverseTooLarge {
        size: usize,
        limit: usize,
    },
    /// Rule generation needed the support of a subset that is not present.
    MissingSubset(Vec<Item>),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse { line, message } => write!(f, "line {line}: {message}"),
            Error::TaxonomyCycle { cycle } => {
                write!(f, "taxonomy cycle: ")?;
                for (i, label) in cycle.iter().enumerate() {
                    if i > 0 {
                        write!(f, " -> ")?;
                    }
                    write!(f, "{label}")?;
                }
                Ok(())
            }
            Error::MultipleParents {
                child,
                first,
                second,
            } => write!(
                f,
                "item `{child}` has two parents (`{first}` and `{second}`); taxonomies must be forests"
            ),
            Error::InvalidThreshold(msg) => write!(f, "invalid support threshold: {msg}"),
            Error::ZeroSupport => write!(f, "support threshold resolves to zero transactions"),
            Error::EmptyDatabase => write!(f, "transaction database is empty"),
            Error::ItemNotInHeader(item) => write!(f, "item {} is not in the header table", item.0),
            Error::UncodedItem(item) => write!(f, "item {} has no prime code", item.0),
            Error::NotTemporal => write!(f, "database has no timestamps"),
            Error::InvalidIntervalWidth => write!(f, "interval width must be at least 1"),
            Error::OverlappingVocabulary(item) => {
                write!(f, "pattern sets overlap on item {}", item.0)
            }
            Error::UniverseTooLarge { size, limit } => write!(
                f,
                "universe of {size} items exceeds the enumeration limit of {limit}"
            ),
            Error::MissingSubset(items) => {
                write!(f, "support of subset {items:?} is missing from the pattern set")
            }
        }
    }
}

impl core::error::Error for Error {}
