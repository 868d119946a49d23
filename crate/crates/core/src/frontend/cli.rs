//! Command-line dispatch. [`run`] is the whole program minus process exit.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use super::document::{parse_dist, parse_kb, print_dist, ParsedDocument};
use super::parser::parse_formula;
use super::ParseError;
use crate::independence::classify;
use crate::lab::completeness::{check_completeness, check_set_functions, NegationReading};
use crate::lab::{render_criteria_table, Agreement, Lab, LabConfig, DEFAULT_BUDGET};
use crate::logic::{Formula, Vocabulary};
use crate::ranking::{compute_pi_star, RankingError, StratifiedRanking};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INCONSISTENT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "ordind",
    version,
    about = "Ordinal independence and default-rule ranking"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Jsonl,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Stratify a knowledge base and print strata, priorities and π*
    Rank { kb: PathBuf },
    /// Decide whether the evidence plausibly entails the conclusion
    Query {
        kb: PathBuf,
        #[arg(short = 'e', long)]
        evidence: String,
        #[arg(short = 'c', long)]
        conclusion: String,
    },
    /// Print π* of a knowledge base in the distribution file format
    Dist { kb: PathBuf },
    /// Classify a pair of events under a distribution file
    Indep {
        dist: PathBuf,
        #[arg(short = 'a', long)]
        antecedent: String,
        #[arg(short = 'c', long)]
        consequent: String,
    },
    /// Check the law catalog over every normalized distribution
    Check {
        #[arg(long)]
        atoms: usize,
        #[arg(long)]
        top: u32,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Also run the completeness searches for the dependence axioms
        /// (1 or 2 atoms)
        #[arg(long)]
        completeness: bool,
    },
    /// Print the conjunction/disjunction criteria table
    Table {
        #[arg(long)]
        atoms: usize,
        #[arg(long)]
        top: u32,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// Failure of a command, mapped to an exit status.
enum Failure {
    Usage(String),
    Inconsistent(String),
}

type Outcome = Result<String, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn located(path: &Path, e: ParseError) -> Failure {
    Failure::Usage(format!("{}: {e}", path.display()))
}

fn load_kb(path: &Path) -> Result<ParsedDocument, Failure> {
    parse_kb(&read(path)?).map_err(|e| located(path, e))
}

fn flag_formula(flag: &str, text: &str, vocab: &Vocabulary) -> Result<Formula, Failure> {
    parse_formula(text, vocab).map_err(|e| Failure::Usage(format!("in {flag}: {e}")))
}

fn rank_doc(doc: &ParsedDocument) -> Result<StratifiedRanking, Failure> {
    let kb = doc.rule_base().expect("knowledge bases carry rules");
    compute_pi_star(kb).map_err(|e| match e {
        RankingError::EmptyBase => Failure::Usage(e.to_string()),
        RankingError::Inconsistent(c) => {
            let mut s = c.to_string();
            for (&i, text) in c.residual.iter().zip(&c.residual_text) {
                let line = doc
                    .rule_line(i)
                    .map_or(String::new(), |l| format!("line {l}: "));
                let tag = if c.injected.contains(&i) {
                    " [indep]"
                } else {
                    ""
                };
                let _ = write!(s, "\n  {line}{text}{tag}");
            }
            Failure::Inconsistent(s)
        }
    })
}

fn rank(path: &Path, warnings: &mut Vec<String>) -> Outcome {
    let doc = load_kb(path)?;
    let ranking = rank_doc(&doc)?;
    let kb = doc.rule_base().expect("knowledge bases carry rules");
    let vocab = kb.vocab();
    let rule_text: Vec<String> = kb
        .rules()
        .iter()
        .map(|r| r.display(vocab).to_string())
        .collect();
    let width = rule_text
        .iter()
        .map(|t| t.chars().count())
        .max()
        .unwrap_or(0);

    let mut s = String::new();
    for (k, stratum) in ranking.stratification.strata.iter().enumerate() {
        let _ = writeln!(s, "stratum {k}:");
        for &i in stratum {
            let _ = writeln!(s, "  {}", rule_text[i]);
        }
    }
    s.push_str("priorities:\n");
    for (i, p) in ranking.priorities.iter().enumerate() {
        let _ = writeln!(s, "  {:<width$}  {p}", rule_text[i]);
    }
    let _ = writeln!(s, "pi* (top {}):", ranking.top());
    let worlds: Vec<String> = vocab.worlds().map(|w| w.display(vocab)).collect();
    let wwidth = worlds.iter().map(|w| w.chars().count()).max().unwrap_or(0);
    for (w, name) in vocab.worlds().zip(&worlds) {
        let _ = writeln!(s, "  {name:<wwidth$}  {}", ranking.pi_star.level(w));
    }

    for i in ranking.priority_mismatches() {
        warnings.push(format!(
            "priority of `{}` is {}, not its stratum index plus one ({})",
            rule_text[i],
            ranking.priorities[i],
            ranking.stratification.stratum_of[i] + 1
        ));
    }
    if ranking.pi_star.is_total_order() {
        warnings.push(
            "pi* totally orders the worlds; further independence assertions cannot refine it"
                .to_string(),
        );
    }
    for d in &doc.directives {
        if let super::Directive::Indep(a) = &d.directive {
            if !ranking.satisfies(a) {
                warnings.push(format!(
                    "independence assertion on line {} does not hold in pi*",
                    d.line
                ));
            }
        }
    }
    Ok(s)
}

fn query(path: &Path, evidence: &str, conclusion: &str) -> Outcome {
    let doc = load_kb(path)?;
    let e = flag_formula("-e", evidence, &doc.vocab)?;
    let c = flag_formula("-c", conclusion, &doc.vocab)?;
    let ranking = rank_doc(&doc)?;
    Ok(format!("{}\n", ranking.query(&e, &c)))
}

fn dist(path: &Path) -> Outcome {
    let doc = load_kb(path)?;
    Ok(print_dist(&rank_doc(&doc)?.pi_star))
}

fn indep(path: &Path, a: &str, c: &str) -> Outcome {
    let doc = parse_dist(&read(path)?).map_err(|e| located(path, e))?;
    let d = doc.dist().expect("distribution files carry a distribution");
    let fa = flag_formula("-a", a, &doc.vocab)?;
    let fc = flag_formula("-c", c, &doc.vocab)?;
    let r = classify(d, &fa, &fc);
    let yes = |b: bool| if b { "yes" } else { "no" };
    let mut s = String::new();
    let _ = writeln!(s, "a = {}", fa.display(&doc.vocab));
    let _ = writeln!(s, "c = {}", fc.display(&doc.vocab));
    let _ = writeln!(s, "unrelated (min-decomposable): {}", yes(r.unrelated_z));
    let _ = writeln!(s, "weakly independent:           {}", yes(r.weak));
    let _ = writeln!(s, "strongly independent:         {}", yes(r.strong));
    let _ = writeln!(s, "Pi(a & c)   = {}", r.poss_a_c);
    let _ = writeln!(s, "Pi(a & !c)  = {}", r.poss_a_not_c);
    let _ = writeln!(s, "Pi(!a & c)  = {}", r.poss_not_a_c);
    let _ = writeln!(s, "Pi(!a & !c) = {}", r.poss_not_a_not_c);
    Ok(s)
}

fn lab(atoms: usize, top: u32, budget: u64) -> Result<Lab, Failure> {
    Lab::new(atoms, top, LabConfig { budget }).map_err(|e| Failure::Usage(e.to_string()))
}

fn json_line<T: serde::Serialize>(s: &mut String, value: &T) {
    s.push_str(&serde_json::to_string(value).expect("records serialize"));
    s.push('\n');
}

fn check(atoms: usize, top: u32, budget: u64, format: Format, completeness: bool) -> Outcome {
    if completeness && !(1..=2).contains(&atoms) {
        return Err(Failure::Usage(
            "--completeness supports 1 or 2 atoms".to_string(),
        ));
    }
    let lab = lab(atoms, top, budget)?;
    let reports = lab.check_all();
    let mut s = String::new();
    match format {
        Format::Text => {
            let scope = lab.scope();
            let _ = writeln!(
                s,
                "{} distributions over {} atoms (top {}), {} generator formulas",
                scope.distributions, scope.atoms, scope.top, scope.generators
            );
            for r in &reports {
                let _ = writeln!(s, "{}", r.text_line());
            }
            let count = |a: Agreement| reports.iter().filter(|r| r.agreement() == a).count();
            let _ = writeln!(
                s,
                "{} laws: {} confirmed, {} contradicted, {} reported",
                reports.len(),
                count(Agreement::Confirmed),
                count(Agreement::Contradicted),
                count(Agreement::Reported)
            );
        }
        Format::Jsonl => {
            for r in &reports {
                json_line(&mut s, &r.record());
            }
        }
    }
    if completeness {
        let events = 1u64 << (1 << atoms);
        let gradings = (top as u64 + 1).saturating_pow(events as u32 - 2);
        let grading_cost = gradings.saturating_mul(events.pow(3));
        for reading in [NegationReading::Literal, NegationReading::Exclusion] {
            let r = check_completeness(atoms, reading);
            let g = (grading_cost <= budget).then(|| check_set_functions(atoms, top, reading));
            match format {
                Format::Text => {
                    let _ = writeln!(s, "relations {}", r.text_line());
                    match &g {
                        Some(g) => {
                            let _ = writeln!(s, "gradings {}", g.text_line());
                        }
                        None => {
                            let _ = writeln!(
                                s,
                                "gradings skipped: {grading_cost} evaluations exceed the budget of {budget}"
                            );
                        }
                    }
                }
                Format::Jsonl => {
                    json_line(
                        &mut s,
                        &serde_json::json!({ "kind": "relations", "report": r }),
                    );
                    if let Some(g) = &g {
                        json_line(
                            &mut s,
                            &serde_json::json!({ "kind": "gradings", "report": g }),
                        );
                    }
                }
            }
        }
    }
    Ok(s)
}

fn table(atoms: usize, top: u32, budget: u64, format: Format) -> Outcome {
    let lab = lab(atoms, top, budget)?;
    let reports = lab.criteria_table();
    Ok(match format {
        Format::Text => render_criteria_table(&reports),
        Format::Jsonl => {
            let scope = lab.scope();
            let mut s = String::new();
            for r in &reports {
                json_line(&mut s, &r.record(&scope));
            }
            s
        }
    })
}

/// Parses `args` (program name first), runs the command and returns the
/// exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    let mut warnings = Vec::new();
    let outcome = match &cli.command {
        Command::Rank { kb } => rank(kb, &mut warnings),
        Command::Query {
            kb,
            evidence,
            conclusion,
        } => query(kb, evidence, conclusion),
        Command::Dist { kb } => dist(kb),
        Command::Indep {
            dist: path,
            antecedent,
            consequent,
        } => indep(path, antecedent, consequent),
        Command::Check {
            atoms,
            top,
            budget,
            format,
            completeness,
        } => check(*atoms, *top, *budget, *format, *completeness),
        Command::Table {
            atoms,
            top,
            budget,
            format,
        } => table(*atoms, *top, *budget, *format),
    };
    match outcome {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            for w in warnings {
                let _ = writeln!(err, "warning: {w}");
            }
            EXIT_OK
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Inconsistent(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INCONSISTENT
        }
    }
}
