//! Command-line front end: load knowledge bases, judge statements under a
//! chosen semantics, run density analyses, print opposition squares and
//! validate knowledge base files.
//!
//! Exit codes: 0 Asserted, 1 Refuted, 2 Undetermined, 3 Degenerate;
//! 64 usage errors, 65 file/parse/validation errors, 66 evaluation errors.
//! With statements read from standard input, the process exits with the
//! maximum severity seen.

mod envelope;

use std::io::BufRead;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use quantscope::judge::{evaluate, EvalConfig, MajoritySemantics, Verdict};
use quantscope::kb::{KnowledgeBase, ValidationIssue};
use quantscope::logic::{Body, ConceptId, PredicateId, QuantifierKind, Restriction, Statement};
use quantscope::parse::{parse_arith_formula, parse_kb, parse_statement};

use envelope::{render_density, render_judgment, verdict_exit_code, OutputFormat};

const EXIT_USAGE: i32 = 64;
const EXIT_INPUT: i32 = 65;
const EXIT_EVAL: i32 = 66;

#[derive(Parser)]
#[command(
    name = "quantscope",
    about = "Judge quantified statements against knowledge bases and the arithmetic domain",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a statement against a knowledge base.
    Eval {
        /// Knowledge base file (*.qkb), or `-` for the empty knowledge base.
        kb_path: String,
        /// Statement text, or `-` to read one statement per line from stdin.
        statement: String,
        #[command(flatten)]
        opts: EvalOpts,
    },
    /// Exact or estimated natural density of an arithmetic formula.
    Density {
        /// Formula text, e.g. "prime" or "n mod 3 == 1 & !(2 | n)".
        formula: String,
        /// Demand the exact rational; reports why it is unavailable before
        /// falling back to the estimator.
        #[arg(long)]
        exact: bool,
        #[arg(long, value_delimiter = ',')]
        schedule: Option<Vec<u64>>,
        #[arg(long)]
        epsilon: Option<f64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Evaluate all four corners of the square of opposition.
    Square {
        /// Knowledge base file (*.qkb).
        kb_path: PathBuf,
        /// Concept naming the restriction.
        restriction: String,
        /// Predicate naming the body.
        predicate: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Validate a knowledge base file.
    Check {
        kb_path: PathBuf,
    },
}

#[derive(Args)]
struct EvalOpts {
    /// Majority semantics; defaults to density over Nat and cardinality
    /// over finite concepts.
    #[arg(long, value_enum)]
    semantics: Option<Semantics>,
    /// Checkpoint schedule for density estimation, e.g. 1000,10000,100000.
    #[arg(long, value_delimiter = ',')]
    schedule: Option<Vec<u64>>,
    /// Convergence tolerance for ratio sequences.
    #[arg(long)]
    epsilon: Option<f64>,
    /// Decision margin around the 1/2 threshold for estimated ratios.
    #[arg(long)]
    margin: Option<f64>,
    /// Witness search bound over the arithmetic domain.
    #[arg(long)]
    search_bound: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Semantics {
    Cardinality,
    Density,
    #[value(name = "proof_theoretic", alias = "proof-theoretic")]
    ProofTheoretic,
}

impl From<Semantics> for MajoritySemantics {
    fn from(s: Semantics) -> MajoritySemantics {
        match s {
            Semantics::Cardinality => MajoritySemantics::Cardinality,
            Semantics::Density => MajoritySemantics::Density,
            Semantics::ProofTheoretic => MajoritySemantics::ProofTheoretic,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> OutputFormat {
        match f {
            Format::Text => OutputFormat::Text,
            Format::Machine => OutputFormat::Machine,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let kind = e.kind();
            let _ = e.print();
            return if matches!(
                kind,
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            ) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_USAGE as u8)
            };
        }
    };
    let code = match cli.command {
        Command::Eval {
            kb_path,
            statement,
            opts,
        } => cmd_eval(&kb_path, &statement, &opts),
        Command::Density {
            formula,
            exact,
            schedule,
            epsilon,
            format,
        } => cmd_density(&formula, exact, schedule, epsilon, format.into()),
        Command::Square {
            kb_path,
            restriction,
            predicate,
            format,
        } => cmd_square(&kb_path, &restriction, &predicate, format.into()),
        Command::Check { kb_path } => cmd_check(&kb_path),
    };
    ExitCode::from(code.clamp(0, 255) as u8)
}

fn build_config(opts: &EvalOpts) -> EvalConfig {
    let mut cfg = EvalConfig {
        majority_semantics: opts.semantics.map(Into::into),
        ..EvalConfig::default()
    };
    if let Some(schedule) = &opts.schedule {
        cfg.schedule = schedule.clone();
    }
    if let Some(epsilon) = opts.epsilon {
        cfg.epsilon = epsilon;
    }
    if let Some(margin) = opts.margin {
        cfg.margin = margin;
    }
    if let Some(bound) = opts.search_bound {
        cfg.search_bound = bound;
    }
    cfg.sieve_cap = sieve_cap_from_env(cfg.sieve_cap);
    cfg
}

/// QUANTSCOPE_MAX_SIEVE overrides the sieve cap.
fn sieve_cap_from_env(default: u64) -> u64 {
    match std::env::var("QUANTSCOPE_MAX_SIEVE") {
        Ok(raw) => match raw.parse::<u64>() {
            Ok(cap) => cap,
            Err(_) => {
                eprintln!("warning: ignoring unparsable QUANTSCOPE_MAX_SIEVE={raw}");
                default
            }
        },
        Err(_) => default,
    }
}

/// Load a knowledge base; `-` is the empty knowledge base. Prints its own
/// diagnostics and returns the exit code on failure.
fn load_kb(path: &str) -> Result<KnowledgeBase, i32> {
    if path == "-" {
        return Ok(KnowledgeBase::new());
    }
    let text = match std::fs::read_to_string(path) {
        Ok(text) => text,
        Err(e) => {
            eprintln!("error: cannot read {path}: {e}");
            return Err(EXIT_INPUT);
        }
    };
    let kb = match parse_kb(&text) {
        Ok(kb) => kb,
        Err(errors) => {
            for e in &errors {
                eprintln!("{path}: {e}");
            }
            return Err(EXIT_INPUT);
        }
    };
    let report = kb.validate();
    if !report.is_valid() {
        for issue in &report.issues {
            let lines = issue_lines(&text, issue);
            if lines.is_empty() {
                eprintln!("{path}: {issue}");
            } else {
                let refs: Vec<String> = lines.iter().map(|l| format!("line {l}")).collect();
                eprintln!("{path}: {issue} ({})", refs.join(", "));
            }
        }
        return Err(EXIT_INPUT);
    }
    Ok(kb)
}

fn cmd_eval(kb_path: &str, statement: &str, opts: &EvalOpts) -> i32 {
    let kb = match load_kb(kb_path) {
        Ok(kb) => kb,
        Err(code) => return code,
    };
    let cfg = build_config(opts);
    let format = opts.format.into();
    if statement == "-" {
        let stdin = std::io::stdin();
        let mut worst = 0;
        let mut first = true;
        for line in stdin.lock().lines() {
            let line = match line {
                Ok(line) => line,
                Err(e) => {
                    eprintln!("error reading stdin: {e}");
                    return EXIT_INPUT;
                }
            };
            if line.trim().is_empty() {
                continue;
            }
            if !first {
                println!();
            }
            first = false;
            worst = worst.max(eval_one(&line, &kb, &cfg, format));
        }
        worst
    } else {
        eval_one(statement, &kb, &cfg, format)
    }
}

fn eval_one(statement: &str, kb: &KnowledgeBase, cfg: &EvalConfig, format: OutputFormat) -> i32 {
    let parsed = match parse_statement(statement) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("{e}");
            return EXIT_INPUT;
        }
    };
    match evaluate(&parsed, kb, cfg) {
        Ok(judgment) => {
            print!("{}", render_judgment(statement, &judgment, format));
            verdict_exit_code(judgment.verdict)
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_EVAL
        }
    }
}

fn cmd_density(
    formula_text: &str,
    exact: bool,
    schedule: Option<Vec<u64>>,
    epsilon: Option<f64>,
    format: OutputFormat,
) -> i32 {
    let formula = match parse_arith_formula(formula_text) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("{e}");
            return EXIT_INPUT;
        }
    };
    let schedule = schedule.unwrap_or_else(quantscope::arith::default_schedule);
    let epsilon = epsilon.unwrap_or(quantscope::arith::DEFAULT_EPSILON);
    let cap = sieve_cap_from_env(quantscope::arith::DEFAULT_SIEVE_CAP);

    let mut rejection: Option<String> = None;
    let result = match quantscope::arith::exact_density(&formula) {
        Ok(result) => result,
        Err(e) => {
            if exact {
                rejection = Some(e.to_string());
            }
            match quantscope::arith::estimate_density(&formula, &schedule, epsilon, cap) {
                Ok(result) => result,
                Err(e) => {
                    eprintln!("error: {e}");
                    return EXIT_EVAL;
                }
            }
        }
    };
    print!(
        "{}",
        render_density(formula_text, rejection.as_deref(), &result, format)
    );
    0
}

fn cmd_square(
    kb_path: &std::path::Path,
    restriction: &str,
    predicate: &str,
    format: OutputFormat,
) -> i32 {
    if restriction == "Nat" {
        eprintln!("error: the opposition square needs a finite concept restriction");
        return EXIT_USAGE;
    }
    let kb = match load_kb(&kb_path.display().to_string()) {
        Ok(kb) => kb,
        Err(code) => return code,
    };
    let cfg = EvalConfig::default();
    let corners = [
        ('A', QuantifierKind::EachDistributive, "each"),
        ('E', QuantifierKind::NoNeg, "no"),
        ('I', QuantifierKind::Exists, "some"),
        ('O', QuantifierKind::NotAll, "not_all"),
    ];
    let mut verdicts = Vec::new();
    for (letter, quantifier, keyword) in corners {
        let statement = Statement {
            quantifier,
            restriction: Restriction::Concept(ConceptId::new(restriction)),
            body: Body::Predicate(PredicateId::new(predicate)),
            positive: true,
        };
        match evaluate(&statement, &kb, &cfg) {
            Ok(judgment) => verdicts.push((letter, keyword, judgment.verdict)),
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_EVAL;
            }
        }
    }
    let coherence = |x: Verdict, y: Verdict| -> &'static str {
        let total = |v: Verdict| matches!(v, Verdict::Asserted | Verdict::Refuted);
        if !total(x) || !total(y) {
            "undetermined (partial model)"
        } else if x == y {
            "VIOLATION: contradictory corners share a verdict"
        } else {
            "ok"
        }
    };
    let a = verdicts[0].2;
    let e = verdicts[1].2;
    let i = verdicts[2].2;
    let o = verdicts[3].2;
    match format {
        OutputFormat::Text => {
            println!("square: {restriction} / {predicate}");
            println!("  A (each): {:<14} E (no):      {}", a.to_string(), e);
            println!("  I (some): {:<14} O (not_all): {}", i.to_string(), o);
            println!("coherence: A/O {}; E/I {}", coherence(a, o), coherence(e, i));
        }
        OutputFormat::Machine => {
            for (letter, keyword, verdict) in &verdicts {
                println!("corner.{letter}.quantifier {keyword}");
                println!("corner.{letter}.verdict {verdict}");
            }
            println!("coherence.AO {}", coherence(a, o));
            println!("coherence.EI {}", coherence(e, i));
        }
    }
    0
}

fn cmd_check(kb_path: &std::path::Path) -> i32 {
    let path = kb_path.display().to_string();
    match load_kb(&path) {
        Ok(kb) => {
            println!(
                "{path}: ok ({} concept(s), {} individual(s))",
                kb.concepts().len(),
                kb.individuals().len()
            );
            0
        }
        Err(code) => code,
    }
}

/// Best-effort line references for a validation issue: the 1-based lines
/// of the directives whose keyword and names match it. The line format is
/// rigid, so token-level matching is reliable.
fn issue_lines(source: &str, issue: &ValidationIssue) -> Vec<u32> {
    let (keyword, names): (&str, Vec<&str>) = match issue {
        ValidationIssue::SubsumptionCycle { concept } => ("concept", vec![concept.as_str()]),
        ValidationIssue::UnknownConceptRef { concept, context } => {
            let keyword = if context.starts_with("subsumption") {
                "concept"
            } else if context.starts_with("axiom") {
                "axiom"
            } else if context.starts_with("individual") {
                "individual"
            } else {
                "majority_props"
            };
            (keyword, vec![concept.as_str()])
        }
        ValidationIssue::SameConceptContradiction { concept, predicate } => {
            ("axiom", vec![concept.as_str(), predicate.as_str()])
        }
        ValidationIssue::UnknownIndividualRef { individual } => {
            ("fact", vec![individual.as_str()])
        }
        ValidationIssue::ContradictoryFacts {
            individual,
            predicate,
        } => ("fact", vec![individual.as_str(), predicate.as_str()]),
        ValidationIssue::DuplicateIndividual { individual } => {
            ("individual", vec![individual.as_str()])
        }
    };
    source
        .lines()
        .enumerate()
        .filter(|(_, line)| {
            let tokens: Vec<&str> = line
                .split(|c: char| c.is_whitespace() || [':', ',', '!', '<'].contains(&c))
                .filter(|t| !t.is_empty())
                .collect();
            tokens.first() == Some(&keyword) && names.iter().all(|n| tokens.contains(n))
        })
        .map(|(idx, _)| idx as u32 + 1)
        .collect()
}
