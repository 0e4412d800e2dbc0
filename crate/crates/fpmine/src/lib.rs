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

//! File formats, synthetic data, benchmarks and the command line front end
//! for `fpmine-core`.

pub mod bench;
pub mod cli;
pub mod error;
pub mod format;
pub mod io;
pub mod mine;
pub mod synth;

pub use error::{Error, Result};
