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

//! Command-line front end.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use fpmine_core::encoding::encode_db;
use fpmine_core::fptree::build_flist;
use fpmine_core::rules::{closed_filter, generate_rules};
use fpmine_core::temporal::{global_codebook, AntiFpConfig};
use fpmine_core::{FpTree, SupportThreshold, Taxonomy, TransactionDb};

use crate::bench::{bench_csv, run_bench};
use crate::format::{
    encoded_db_text, pattern_lines, patterns_csv, rule_lines, rules_csv, temporal_report_csv,
    temporal_rule_lines, temporal_rules_csv, temporal_text, transactions_text,
};
use crate::io::{read_taxonomy, read_transactions, write_output};
use crate::mine::{mine_static, mine_temporal, Algorithm};
use crate::synth::{generate, SynthSpec};
use crate::{Error, Result};

#[derive(Debug, Parser)]
#[command(
    name = "fpmine",
    version,
    about = "Frequent pattern mining with FP-trees"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Mine frequent itemsets, and optionally rules, from a transaction file.
    Mine(MineArgs),
    /// Time algorithms over a minsup sweep and compare serialized sizes.
    Bench(BenchArgs),
    /// Write a synthetic transaction file.
    Gen(GenArgs),
    /// Write the prime-encoded form of a transaction file.
    Encode(EncodeArgs),
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Csv,
}

#[derive(Debug, Args)]
pub struct MineArgs {
    /// Transaction file.
    pub input: PathBuf,
    /// Minimum support: an integer count or a fraction such as 0.5.
    #[arg(long, value_parser = parse_minsup)]
    pub minsup: SupportThreshold,
    /// Also derive rules at this confidence.
    #[arg(long, value_parser = parse_minconf)]
    pub minconf: Option<f64>,
    #[arg(long, value_enum, default_value_t = Algorithm::Fpgrowth)]
    pub algo: Algorithm,
    /// `child<TAB>parent` lines; only for bu-fptax and td-fptax.
    #[arg(long)]
    pub taxonomy: Option<PathBuf>,
    /// Read `<timestamp> | <items>` lines.
    #[arg(long)]
    pub temporal: bool,
    /// Interval width for anti-fpgrowth.
    #[arg(long)]
    pub interval_width: Option<u64>,
    /// Also write the encoded database to `<output>.encoded`.
    #[arg(long)]
    pub encode: bool,
    /// Write only closed itemsets.
    #[arg(long)]
    pub closed: bool,
    /// Pattern file; rules go to `<output>.rules` (or `.rules.csv`).
    /// Standard output when absent.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    /// Mine independent subproblems on several threads.
    #[arg(long)]
    pub parallel: bool,
    /// Write the initial FP-tree as indented `item:count` lines.
    #[arg(long)]
    pub dump_tree: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SynthArgs {
    #[arg(long, default_value_t = 30)]
    pub items: usize,
    #[arg(long, default_value_t = 1000)]
    pub transactions: usize,
    #[arg(long, default_value_t = 10)]
    pub avg_len: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
}

impl SynthArgs {
    fn spec(&self, temporal: bool) -> SynthSpec {
        SynthSpec {
            items: self.items,
            transactions: self.transactions,
            avg_len: self.avg_len,
            seed: self.seed,
            temporal,
        }
    }
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Transaction file; a synthetic database is generated when absent.
    pub input: Option<PathBuf>,
    #[command(flatten)]
    pub synth: SynthArgs,
    /// Comma-separated minsup values. May be empty.
    #[arg(long, default_value = "0.5,0.2,0.1,0.05,0.02,0.01")]
    pub sweep: String,
    /// Comma-separated algorithms.
    #[arg(
        long,
        value_enum,
        value_delimiter = ',',
        default_value = "apriori,fpgrowth"
    )]
    pub algo: Vec<Algorithm>,
    #[arg(long)]
    pub taxonomy: Option<PathBuf>,
    #[arg(long)]
    pub temporal: bool,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    #[arg(long)]
    pub parallel: bool,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[command(flatten)]
    pub synth: SynthArgs,
    /// Prefix each transaction with a uniform timestamp.
    #[arg(long)]
    pub temporal: bool,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EncodeArgs {
    pub input: PathBuf,
    #[arg(long)]
    pub temporal: bool,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

/// Integers are counts, anything with a decimal point or exponent is a
/// fraction of the transactions.
pub fn parse_minsup(s: &str) -> std::result::Result<SupportThreshold, String> {
    if s.contains(['.', 'e', 'E']) {
        let f: f64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
        if f > 0.0 && f <= 1.0 {
            Ok(SupportThreshold::Fraction(f))
        } else {
            Err(format!("fraction `{s}` must be in (0, 1]"))
        }
    } else {
        match s.parse::<u64>() {
            Ok(0) => Err("count must be positive".into()),
            Ok(c) => Ok(SupportThreshold::Count(c)),
            Err(_) => Err(format!("`{s}` is not a count or fraction")),
        }
    }
}

fn parse_minconf(s: &str) -> std::result::Result<f64, String> {
    match s.parse::<f64>() {
        Ok(c) if (0.0..=1.0).contains(&c) => Ok(c),
        _ => Err(format!("`{s}` must be a number in [0, 1]")),
    }
}

pub fn parse_sweep(s: &str) -> Result<Vec<SupportThreshold>> {
    s.split(',')
        .map(str::trim)
        .filter(|v| !v.is_empty())
        .map(|v| parse_minsup(v).map_err(Error::Usage))
        .collect()
}

pub fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Mine(args) => run_mine(&args),
        Command::Bench(args) => run_bench_cmd(&args),
        Command::Gen(args) => {
            let db = generate(&args.synth.spec(args.temporal))?;
            write_output(args.output.as_deref(), &transactions_text(&db))
        }
        Command::Encode(args) => {
            let db = read_transactions(&args.input, args.temporal)?;
            write_output(args.output.as_deref(), &encoded_text(&db))
        }
    }
}

fn encoded_text(db: &TransactionDb) -> String {
    encoded_db_text(&encode_db(db, &global_codebook(db)), &db.vocab)
}

fn validate(args: &MineArgs) -> Result<()> {
    let algo = args.algo.name();
    if args.taxonomy.is_some() && !args.algo.uses_taxonomy() {
        return Err(Error::usage(format!(
            "--taxonomy needs --algo bu-fptax or td-fptax, not {algo}"
        )));
    }
    if args.algo == Algorithm::AntiFpgrowth {
        match args.interval_width {
            None => return Err(Error::usage("--algo anti-fpgrowth needs --interval-width")),
            Some(0) => return Err(Error::usage("--interval-width must be positive")),
            Some(_) => {}
        }
        if args.closed {
            return Err(Error::usage("--closed does not apply to anti-fpgrowth"));
        }
    } else if args.interval_width.is_some() {
        return Err(Error::usage(format!(
            "--interval-width only applies to anti-fpgrowth, not {algo}"
        )));
    }
    if args.encode && args.output.is_none() {
        return Err(Error::usage("--encode needs --output"));
    }
    Ok(())
}

fn side_path(output: &Path, suffix: &str) -> PathBuf {
    let mut s = output.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

/// Rules follow the patterns on standard output when no file is given.
fn write_rules(output: Option<&Path>, format: Format, contents: &str) -> Result<()> {
    match output {
        Some(p) => {
            let suffix = match format {
                Format::Text => ".rules",
                Format::Csv => ".rules.csv",
            };
            write_output(Some(&side_path(p, suffix)), contents)
        }
        None => write_output(None, &format!("\n{contents}")),
    }
}

pub fn run_mine(args: &MineArgs) -> Result<()> {
    validate(args)?;
    let temporal = args.temporal || args.algo == Algorithm::AntiFpgrowth;
    let mut db = read_transactions(&args.input, temporal)?;
    let tax = match &args.taxonomy {
        Some(path) => read_taxonomy(path, &mut db)?,
        None => Taxonomy::new(),
    };
    let output = args.output.as_deref();

    if let Some(path) = &args.dump_tree {
        let minsup = args.minsup.resolve(db.len())?;
        let tax = if args.algo.uses_taxonomy() {
            &tax
        } else {
            &Taxonomy::new()
        };
        let tree = FpTree::construct(&db, tax, &build_flist(&db, tax, minsup));
        write_output(Some(path), &tree.dump(|i| db.vocab.label(i).to_string()))?;
    }
    if args.encode {
        let path = side_path(output.expect("checked by validate"), ".encoded");
        write_output(Some(&path), &encoded_text(&db))?;
    }

    if args.algo == Algorithm::AntiFpgrowth {
        let width = args.interval_width.expect("checked by validate");
        let cfg = AntiFpConfig::new(args.minsup);
        let run = mine_temporal(&db, width, &cfg, args.minconf, args.parallel)?;
        let (patterns, rules) = match args.format {
            Format::Text => (
                temporal_text(&run.output, &db.vocab),
                temporal_rule_lines(&run.expanded, &db.vocab),
            ),
            Format::Csv => (
                temporal_report_csv(&run.output, &db.vocab)?,
                temporal_rules_csv(&run.expanded, &db.vocab)?,
            ),
        };
        write_output(output, &patterns)?;
        if args.minconf.is_some() {
            write_rules(output, args.format, &rules)?;
        }
        eprintln!(
            "anti-fpgrowth: {} intervals, {} patterns, {} common, {} rules, {:.3} ms, peak tree nodes {}",
            run.slices.len(),
            run.output.temporal.len(),
            run.output.common.len(),
            run.expanded.len(),
            run.elapsed.as_secs_f64() * 1000.0,
            run.peak_tree_nodes
        );
        return Ok(());
    }

    let minsup = args.minsup.resolve(db.len())?;
    let mined = mine_static(&db, &tax, args.algo, minsup, args.parallel);
    let shown = if args.closed {
        closed_filter(&mined.patterns)
    } else {
        mined.patterns.clone()
    };
    let text = match args.format {
        Format::Text => pattern_lines(&shown, &db.vocab),
        Format::Csv => patterns_csv(&shown, &db.vocab)?,
    };
    write_output(output, &text)?;
    let mut rule_count = None;
    if let Some(minconf) = args.minconf {
        let rules = generate_rules(&mined.patterns, minconf)?;
        let text = match args.format {
            Format::Text => rule_lines(&rules, &db.vocab),
            Format::Csv => rules_csv(&rules, &db.vocab)?,
        };
        write_rules(output, args.format, &text)?;
        if rules.oversized_patterns > 0 {
            eprintln!(
                "skipped rules for {} patterns longer than the rule size limit",
                rules.oversized_patterns
            );
        }
        rule_count = Some(rules.len());
    }
    eprintln!(
        "{}: {} patterns{}, {:.3} ms, peak tree nodes {}",
        args.algo.name(),
        shown.len(),
        rule_count
            .map(|n| format!(", {n} rules"))
            .unwrap_or_default(),
        mined.elapsed.as_secs_f64() * 1000.0,
        mined.peak_tree_nodes
    );
    Ok(())
}

fn run_bench_cmd(args: &BenchArgs) -> Result<()> {
    let sweep = parse_sweep(&args.sweep)?;
    if args.algo.contains(&Algorithm::AntiFpgrowth) {
        return Err(Error::usage("bench does not run anti-fpgrowth"));
    }
    if args.taxonomy.is_some() && !args.algo.iter().any(|a| a.uses_taxonomy()) {
        return Err(Error::usage(
            "--taxonomy needs bu-fptax or td-fptax in --algo",
        ));
    }
    let mut db = match &args.input {
        Some(path) => read_transactions(path, args.temporal)?,
        None => generate(&args.synth.spec(false))?,
    };
    let tax = match &args.taxonomy {
        Some(path) => read_taxonomy(path, &mut db)?,
        None => Taxonomy::new(),
    };
    let report = run_bench(&db, &tax, &args.algo, &sweep, args.parallel)?;
    write_output(args.output.as_deref(), &bench_csv(&report)?)
}
