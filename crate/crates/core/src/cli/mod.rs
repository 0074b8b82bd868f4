//! Command-line front end. [`run`] returns the exit code and output text
//! instead of printing, so the binary stays a thin wrapper.
//!
//! Exit codes: 0 on success, 1 when a check fails, 2 on usage, parse or
//! parameter errors.

mod parse;

pub use parse::{parse_word, MAX_WORD_LEN};

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::group::{fc_membership, is_identity, normal_form, order, pi0, project, quotient_image};
use crate::params::{GroupParams, SeqRule};
use crate::verify::{check_basis_lemma, check_center, check_quotient_relations, torsion_search, Report};
use crate::walk::{count_returns, format_exact_row, format_mc_row, mc_return_prob, Target, WalkConfig};

#[derive(Debug, Parser)]
#[command(name = "fcwreath", version, about = "Word problem, orders and checks in the groups G = <s, t>")]
pub struct Cli {
    #[command(flatten)]
    pub params: ParamArgs,

    /// Worker threads for searches and walks.
    #[arg(long, global = true, env = "FCWREATH_THREADS")]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    /// d_n = n + 1, k_n = 2n + 2
    Paper,
}

#[derive(Debug, Args)]
pub struct ParamArgs {
    #[arg(long, global = true, value_enum, default_value = "paper")]
    pub preset: Preset,
    /// d_n = a*n + b, given as `a,b`
    #[arg(long, global = true, value_delimiter = ',', num_args = 1, allow_negative_numbers = true, conflicts_with = "d_list")]
    pub d_affine: Option<Vec<i64>>,
    /// k_n = c*n + e, given as `c,e`
    #[arg(long, global = true, value_delimiter = ',', num_args = 1, allow_negative_numbers = true, conflicts_with = "k_list")]
    pub k_affine: Option<Vec<i64>>,
    /// Explicit d_1,d_2,...
    #[arg(long, global = true, value_delimiter = ',', num_args = 1)]
    pub d_list: Option<Vec<usize>>,
    /// Explicit k_1,k_2,...
    #[arg(long, global = true, value_delimiter = ',', num_args = 1)]
    pub k_list: Option<Vec<usize>>,
}

impl ParamArgs {
    pub fn resolve(&self) -> Result<GroupParams> {
        let base = match self.preset {
            Preset::Paper => GroupParams::paper(),
        };
        let affine = |v: &Vec<i64>, name: &str| match v[..] {
            [slope, offset] => Ok(SeqRule::Affine { slope, offset }),
            _ => Err(Error::InvalidParams(format!("--{name}-affine takes exactly two values"))),
        };
        let d = match (&self.d_affine, &self.d_list) {
            (Some(v), _) => affine(v, "d")?,
            (None, Some(l)) => SeqRule::List(l.clone()),
            (None, None) => base.d_rule().clone(),
        };
        let k = match (&self.k_affine, &self.k_list) {
            (Some(v), _) => affine(v, "k")?,
            (None, Some(l)) => SeqRule::List(l.clone()),
            (None, None) => base.k_rule().clone(),
        };
        GroupParams::new(d, k)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Basis,
    Center,
    Quotient,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WalkTarget {
    G,
    Q,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reduced word, normal form, projections to Z and C2 wr Z, order.
    Eval { word: String },
    /// Prints `true` iff the word is the identity of G.
    Identity { word: String },
    /// Prints `1`, `2` or `infinite`.
    Order { word: String },
    /// Projection to the layer H_N.
    Project {
        #[arg(long)]
        layer: usize,
        word: String,
    },
    /// Image in C2 wr Z.
    Quotient { word: String },
    /// Decomposition in the FC-center, if the word lies in it.
    Fc { word: String },
    /// Structural checks at desk scale.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        check: CheckKind,
        /// Largest layer checked (default 12 for basis, 20 for center).
        #[arg(long)]
        n_max: Option<usize>,
        /// Largest conjugate index checked (default 12 for basis, 10 for quotient).
        #[arg(long)]
        i_max: Option<i64>,
    },
    /// Exhaustive search for elements of order 2.
    TorsionSearch {
        #[arg(long)]
        max_len: usize,
    },
    /// Return probabilities of the simple random walk.
    Walk {
        /// Even walk lengths, comma separated.
        #[arg(long, value_delimiter = ',', num_args = 1, required = true)]
        steps: Vec<usize>,
        #[arg(long, conflicts_with_all = ["trials", "seed"])]
        exact: bool,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        shards: usize,
        #[arg(long, value_enum, default_value = "g")]
        target: WalkTarget,
    },
}

/// Result of running one command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { code: 0, stdout, stderr: String::new() }
    }

    fn usage(stderr: String) -> Self {
        Self { code: 2, stdout: String::new(), stderr }
    }
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.exit_code() {
                0 => Outcome::ok(text),
                _ => Outcome::usage(text),
            };
        }
    };
    match execute(&cli) {
        Ok(o) => o,
        Err(e) => Outcome::usage(format!("error: {e}\n")),
    }
}

fn reports_outcome(reports: &[Report]) -> Outcome {
    let text: Vec<String> = reports.iter().map(|r| r.to_string()).collect();
    let code = if reports.iter().all(Report::passed) { 0 } else { 1 };
    Outcome { code, stdout: text.join("\n") + "\n", stderr: String::new() }
}

pub fn execute(cli: &Cli) -> Result<Outcome> {
    let gp = cli.params.resolve()?;
    let mut out = String::new();
    match &cli.command {
        Command::Eval { word } => {
            let w = parse_word(word)?;
            let _ = writeln!(out, "word: {w}");
            let _ = writeln!(out, "normal_form: {}", normal_form(&w));
            let _ = writeln!(out, "pi0: {}", pi0(&w));
            let _ = writeln!(out, "quotient: {}", quotient_image(&w));
            let _ = writeln!(out, "identity: {}", is_identity(&w, &gp)?);
            let _ = writeln!(out, "order: {}", order(&w, &gp)?);
        }
        Command::Identity { word } => {
            let _ = writeln!(out, "{}", is_identity(&parse_word(word)?, &gp)?);
        }
        Command::Order { word } => {
            let _ = writeln!(out, "{}", order(&parse_word(word)?, &gp)?);
        }
        Command::Project { layer, word } => {
            let _ = writeln!(out, "{}", project(&parse_word(word)?, *layer, &gp)?);
        }
        Command::Quotient { word } => {
            let _ = writeln!(out, "{}", quotient_image(&parse_word(word)?));
        }
        Command::Fc { word } => match fc_membership(&parse_word(word)?, &gp)? {
            Some(dec) => {
                let _ = writeln!(out, "{dec}");
            }
            None => out.push_str("not a member\n"),
        },
        Command::Verify { check, n_max, i_max } => {
            let mut reports = Vec::new();
            if matches!(check, CheckKind::Basis | CheckKind::All) {
                reports.push(check_basis_lemma(&gp, n_max.unwrap_or(12), i_max.unwrap_or(12))?);
            }
            if matches!(check, CheckKind::Center | CheckKind::All) {
                reports.push(check_center(&gp, n_max.unwrap_or(20))?);
            }
            if matches!(check, CheckKind::Quotient | CheckKind::All) {
                reports.push(check_quotient_relations(&gp, i_max.unwrap_or(10))?);
            }
            return Ok(reports_outcome(&reports));
        }
        Command::TorsionSearch { max_len } => {
            return Ok(reports_outcome(&[torsion_search(&gp, *max_len, cli.threads)?]));
        }
        Command::Walk { steps, exact, trials, seed, shards, target } => {
            let target = match target {
                WalkTarget::G => Target::G,
                WalkTarget::Q => Target::Q,
            };
            for &s in steps {
                let cfg = WalkConfig::new(s, target)?
                    .with_trials(*trials, *seed)
                    .with_shards(*shards, cli.threads);
                if *exact {
                    let hits = count_returns(target, &gp, s, cli.threads)?;
                    let p = num_rational::Ratio::new(hits, 4u64.pow(s as u32));
                    let _ = writeln!(out, "{}", format_exact_row(s, p));
                } else {
                    let (est, err) = mc_return_prob(&cfg, &gp)?;
                    let _ = writeln!(out, "{}", format_mc_row(s, est, err));
                }
            }
        }
    }
    Ok(Outcome::ok(out))
}
