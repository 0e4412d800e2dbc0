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

use std::fs;
use std::io::Write;
use std::path::Path;

use fpmine_core::model::{parse_taxonomy, parse_transactions};
use fpmine_core::{Taxonomy, TransactionDb};

use crate::{Error, Result};

pub fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn read_transactions(path: &Path, temporal: bool) -> Result<TransactionDb> {
    parse_transactions(&read_text(path)?, temporal).map_err(|source| Error::Data {
        path: path.to_path_buf(),
        source,
    })
}

/// Loads a taxonomy, interning unseen ancestor labels into `db`.
pub fn read_taxonomy(path: &Path, db: &mut TransactionDb) -> Result<Taxonomy> {
    parse_taxonomy(&read_text(path)?, db).map_err(|source| Error::Data {
        path: path.to_path_buf(),
        source,
    })
}

/// Writes to `path`, or to standard output when `path` is `None`.
pub fn write_output(path: Option<&Path>, contents: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, contents).map_err(|source| Error::Io {
            path: p.to_path_buf(),
            source,
        }),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(contents.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|source| Error::Io {
                    path: "<stdout>".into(),
                    source,
                })
        }
    }
}
