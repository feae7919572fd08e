//! Command-line front end. Every command writes one JSON document to standard
//! output; the exit code is 0 on a computed answer, 2 on an inconclusive
//! strong Nielsen verdict and 1 on bad input.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rand::rngs::StdRng;
use rand::SeedableRng;
use serde_json::{json, Value};

use crate::error::{BraidError, Result};
use crate::garside::{canonical_form, conjugate_mod_full_twist, equal, is_conjugate};
use crate::invariants;
use crate::mixed::{self, MixedBraid};
use crate::partition::partition_sn_classes;
use crate::sn::{
    certificate_stability, sn_equivalent_rel_a, sn_equivalent_twisted, SearchBudget, SnInstance,
    SnStatus, SnVerdict,
};
use crate::word::BraidWord;

#[derive(Debug, Parser)]
#[command(
    name = "snbraid",
    version,
    about = "Braid-group decisions for strong Nielsen equivalence"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Left canonical form of a word
    Nf(Plain),
    /// Equality of two words in B_n
    Eq(Plain),
    /// Conjugacy of two words with a witness c, c·b·c⁻¹ = a
    Conj(Plain),
    /// Conjugacy up to a power of the full twist
    ConjModTwist(Plain),
    /// Split a mixed braid as ι(base)·kernel
    Decompose(Mixed),
    /// φ_β(γ) = ι(β)⁻¹ γ ι(β) for β in B_n and kernel γ
    Act(Mixed),
    /// Strong Nielsen equivalence rel A by kernel-restricted conjugacy
    Sn(SnArgs),
    /// Strong Nielsen equivalence through twisted conjugacy of kernel braids
    SnTwisted(SnArgs),
    /// Fixed-point case (m = 1)
    Fixed(FixedArgs),
    /// Group a list of kernel braids into strong Nielsen classes
    Partition(PartitionArgs),
    /// Invariant reports for a mixed braid
    Invariants(Mixed),
}

/// Words given as arguments or read from a file.
#[derive(Debug, Args)]
pub struct WordSource {
    /// Braid words such as "s1 S2 s1"
    pub words: Vec<String>,
    /// Read words from a file, one per line; `#` starts a comment
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Plain {
    /// Number of strands
    #[arg(short = 'n')]
    pub n: usize,
    #[command(flatten)]
    pub source: WordSource,
}

#[derive(Debug, Args)]
pub struct Mixed {
    /// Size of the invariant block
    #[arg(short = 'n')]
    pub n: usize,
    /// Size of the orbit block
    #[arg(short = 'm')]
    pub m: usize,
    #[command(flatten)]
    pub source: WordSource,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct BudgetArgs {
    /// Longest kernel conjugator tried, in generators
    #[arg(long, default_value_t = SearchBudget::default().max_length)]
    pub max_len: usize,
    /// Most conjugates enumerated
    #[arg(long, default_value_t = SearchBudget::default().max_states)]
    pub max_states: usize,
    /// Seed for the self-check harness
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Re-verify witnesses and certificates on random kernel conjugates
    #[arg(long)]
    pub self_check: bool,
}

impl BudgetArgs {
    fn budget(&self) -> SearchBudget {
        SearchBudget {
            max_length: self.max_len,
            max_states: self.max_states,
        }
    }
}

#[derive(Debug, Args)]
pub struct SnArgs {
    #[arg(short = 'n')]
    pub n: usize,
    #[arg(short = 'm')]
    pub m: usize,
    /// Braid of the invariant set, on n strands
    #[arg(long = "betaA", default_value = "", allow_hyphen_values = true)]
    pub beta_a: String,
    /// Kernel braid of the first orbit
    #[arg(long, allow_hyphen_values = true)]
    pub ox: String,
    /// Kernel braid of the second orbit
    #[arg(long, allow_hyphen_values = true)]
    pub oy: String,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Debug, Args)]
pub struct FixedArgs {
    #[arg(short = 'n')]
    pub n: usize,
    #[arg(long = "betaA", default_value = "", allow_hyphen_values = true)]
    pub beta_a: String,
    #[arg(long, allow_hyphen_values = true)]
    pub ox: String,
    #[arg(long, allow_hyphen_values = true)]
    pub oy: String,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Debug, Args)]
pub struct PartitionArgs {
    #[arg(short = 'n')]
    pub n: usize,
    #[arg(short = 'm')]
    pub m: usize,
    #[arg(long = "betaA", default_value = "", allow_hyphen_values = true)]
    pub beta_a: String,
    /// Worker threads for the pairwise decisions
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
    #[command(flatten)]
    pub source: WordSource,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

/// Output of one invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub json: Value,
    pub exit_code: i32,
}

impl Outcome {
    fn ok(json: Value) -> Self {
        Self { json, exit_code: 0 }
    }

    fn error(e: &BraidError) -> Self {
        Self {
            json: json!({ "error": e.to_string() }),
            exit_code: 1,
        }
    }
}

/// Raw `(line, text)` entries of a command: from `--file` if given (blank
/// and comment-only lines skipped, trailing comments stripped), otherwise the
/// positional arguments, argument `i` counting as line `i`.
fn raw_entries(source: &WordSource) -> Result<Vec<(usize, String)>> {
    match &source.file {
        Some(path) => {
            if !source.words.is_empty() {
                return Err(BraidError::Invalid(
                    "give words either inline or with --file, not both".into(),
                ));
            }
            let text = std::fs::read_to_string(path)
                .map_err(|e| BraidError::Invalid(format!("{}: {e}", path.display())))?;
            Ok(comment_stripped(&text))
        }
        None => Ok(source
            .words
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, w)| (i + 1, w))
            .collect()),
    }
}

fn comment_stripped(text: &str) -> Vec<(usize, String)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let body = raw.split('#').next().unwrap_or("");
            (!body.trim().is_empty()).then(|| (i + 1, body.to_string()))
        })
        .collect()
}

fn expect_count<T>(items: Vec<T>, expected: Option<usize>) -> Result<Vec<T>> {
    match expected {
        Some(k) if items.len() != k => Err(BraidError::Invalid(format!(
            "expected {k} word(s), got {}",
            items.len()
        ))),
        _ => Ok(items),
    }
}

fn read_words(
    source: &WordSource,
    strands: usize,
    expected: Option<usize>,
) -> Result<Vec<BraidWord>> {
    let words = raw_entries(source)?
        .iter()
        .map(|(line, w)| BraidWord::parse_line(strands, w, *line))
        .collect::<Result<Vec<_>>>()?;
    expect_count(words, expected)
}

/// One word per line. Blank lines and lines that are entirely a comment are
/// skipped; a trailing comment is stripped.
pub fn parse_lines(strands: usize, text: &str) -> Result<Vec<BraidWord>> {
    comment_stripped(text)
        .iter()
        .map(|(line, w)| BraidWord::parse_line(strands, w, *line))
        .collect()
}

fn verdict_outcome(inst: &SnInstance, verdict: SnVerdict, args: &BudgetArgs) -> Result<Outcome> {
    let mut doc = serde_json::to_value(&verdict).expect("verdicts serialize");
    let warnings = inst.period_warnings();
    if !warnings.is_empty() {
        doc["warnings"] = json!(warnings);
    }
    if args.self_check {
        let mut rng = StdRng::seed_from_u64(args.seed);
        let check = match (&verdict.certificate, &verdict.witness) {
            (Some(cert), _) => {
                let trials = 100;
                let stable = certificate_stability(inst, cert, trials, 6, &mut rng)?;
                json!({ "trials": trials, "stable": stable })
            }
            (None, Some(c)) => {
                let bx = inst.beta_x().into_word();
                let by = inst.beta_y().into_word();
                let ok =
                    mixed::in_kernel(inst.n(), inst.m(), c)? && equal(&bx, &by.conjugated_by(c)?)?;
                json!({ "witness_verifies": ok })
            }
            (None, None) => Value::Null,
        };
        doc["self_check"] = check;
    }
    let exit_code = if verdict.status == SnStatus::Inconclusive {
        2
    } else {
        0
    };
    Ok(Outcome {
        json: doc,
        exit_code,
    })
}

fn execute(command: &Command) -> Result<Outcome> {
    Ok(match command {
        Command::Nf(a) => {
            let w = &read_words(&a.source, a.n, Some(1))?[0];
            Outcome::ok(serde_json::to_value(canonical_form(w)).expect("serializable"))
        }
        Command::Eq(a) => {
            let w = read_words(&a.source, a.n, Some(2))?;
            Outcome::ok(json!({ "equal": equal(&w[0], &w[1])? }))
        }
        Command::Conj(a) => {
            let w = read_words(&a.source, a.n, Some(2))?;
            Outcome::ok(serde_json::to_value(is_conjugate(&w[0], &w[1])?).expect("serializable"))
        }
        Command::ConjModTwist(a) => {
            let w = read_words(&a.source, a.n, Some(2))?;
            Outcome::ok(
                serde_json::to_value(conjugate_mod_full_twist(&w[0], &w[1])?)
                    .expect("serializable"),
            )
        }
        Command::Decompose(a) => {
            let w = read_words(&a.source, a.n + a.m, Some(1))?.remove(0);
            let b = MixedBraid::validate(a.n, a.m, w)?;
            Outcome::ok(serde_json::to_value(mixed::decompose(&b)).expect("serializable"))
        }
        Command::Act(a) => {
            // β lives on n strands, γ on n + m
            let words = expect_count(raw_entries(&a.source)?, Some(2))?;
            let beta = BraidWord::parse_line(a.n.max(1), &words[0].1, words[0].0)?;
            let gamma = BraidWord::parse_line(a.n + a.m, &words[1].1, words[1].0)?;
            Outcome::ok(json!({ "word": mixed::act(&beta, &gamma, a.m)? }))
        }
        Command::Sn(a) | Command::SnTwisted(a) => {
            let inst = SnInstance::parse(a.n, a.m, &a.beta_a, &a.ox, &a.oy)?;
            let verdict = if matches!(command, Command::Sn(_)) {
                sn_equivalent_rel_a(&inst, a.budget.budget())?
            } else {
                sn_equivalent_twisted(&inst, a.budget.budget())?
            };
            verdict_outcome(&inst, verdict, &a.budget)?
        }
        Command::Fixed(a) => {
            let inst = SnInstance::parse(a.n, 1, &a.beta_a, &a.ox, &a.oy)?;
            let verdict = sn_equivalent_rel_a(&inst, a.budget.budget())?;
            verdict_outcome(&inst, verdict, &a.budget)?
        }
        Command::Partition(a) => {
            let beta_a = BraidWord::parse(a.n.max(1), &a.beta_a)?;
            let orbits = read_words(&a.source, a.n + a.m, None)?;
            let p = partition_sn_classes(a.n, a.m, &beta_a, &orbits, a.budget.budget(), a.threads)?;
            Outcome::ok(serde_json::to_value(p).expect("serializable"))
        }
        Command::Invariants(a) => {
            let w = read_words(&a.source, a.n + a.m, Some(1))?.remove(0);
            let b = MixedBraid::validate(a.n, a.m, w)?;
            Outcome::ok(serde_json::to_value(invariants::report(&b)).expect("serializable"))
        }
    })
}

pub fn run(cli: &Cli) -> Outcome {
    execute(&cli.command).unwrap_or_else(|e| Outcome::error(&e))
}

/// Parses `args` (program name first) and runs the command. Argument errors
/// come back as exit code 1 with clap's message in the `error` field.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => Outcome {
            json: json!({ "error": e.to_string().trim_end() }),
            exit_code: 1,
        },
    }
}
