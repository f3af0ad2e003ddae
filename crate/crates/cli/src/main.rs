//! `operalang` — compose operators, evaluate them to automata, check
//! language equivalence, compile regular expressions into single-operator
//! form, apply relation surgeries, enumerate the quasiorder census and run
//! the operad-law battery.

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use operalang_core::automaton::{display_word, language_equivalent, LanguageCmp};
use operalang_core::enumeration::{census, census_json, census_table, verify_faithfulness};
use operalang_core::error::Error;
use operalang_core::language::{build_automaton, Expression, Leaf};
use operalang_core::laws::{run_laws, LawConfig};
use operalang_core::parse::{parse_expression, parse_operator};
use operalang_core::regop::{
    admissible_positions, builtin_family, compile, factors, mirror, parse_regex, prefixes,
    subwords, suffixes, FlatLeaf, FlatOperator,
};

#[derive(Parser)]
#[command(name = "operalang", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum TransformOp {
    Prefixes,
    Suffixes,
    Factors,
    Subwords,
    Mirror,
    Admissible,
}

#[derive(Subcommand)]
enum Command {
    /// Compose two operator literals at a position.
    Compose {
        left: String,
        position: u32,
        right: String,
    },
    /// Evaluate an expression to its ε-automaton.
    Eval {
        /// Expression, or `-` to read it from stdin.
        expression: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Print the accepted words up to this length instead (capped at 12).
        #[arg(long)]
        words: Option<usize>,
    },
    /// Decide whether two expressions denote the same language.
    Equiv { left: String, right: String },
    /// Compile a regular expression into single-operator form.
    Compile { regex: String },
    /// Apply a relation surgery to a compiled operator expression.
    Transform {
        #[arg(long, value_enum)]
        op: TransformOp,
        /// Operator literal with its leaves, e.g. `aref[3]{(2,1)}(a,_,b)`
        /// (the leaves may be given as a separate argument).
        expression: Vec<String>,
    },
    /// Emit one of the built-in operator families.
    Family {
        /// word-star | alphabet-star | prefixes-star | suffixes-star |
        /// descending (or an index 1–5)
        which: String,
        #[arg(long)]
        k: u32,
    },
    /// Enumerate the quasiorder operators of one arity with their languages.
    Census {
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        /// Letters to act on, one per slot (defaults to a, b, c, …).
        #[arg(long)]
        letters: Option<String>,
    },
    /// Check that distinct quasiorders denote distinct languages.
    Faithful {
        #[arg(long)]
        k: u32,
    },
    /// Run the operad-axiom battery.
    Laws {
        /// Full exhaustive bounds (arities ≤ 3 with ≤ 3 pairs, 1000 samples
        /// at arities 4–5) instead of the quick defaults.
        #[arg(long)]
        full: bool,
    },
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Parse { .. }
        | Error::Invalid { .. }
        | Error::UnknownFamily { .. }
        | Error::EnumerationGuard { .. }
        | Error::QuotientPrecondition(..) => 2,
        Error::PositionOutOfRange { .. }
        | Error::ArityMismatch { .. }
        | Error::MixedComposition { .. }
        | Error::UnknownLetter { .. } => 3,
    }
}

fn read_argument(arg: &str) -> Result<String, Error> {
    if arg == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::parse(0, format!("cannot read stdin: {e}")))?;
        Ok(buf.trim().to_string())
    } else {
        Ok(arg.to_string())
    }
}

/// Reinterpret an expression with letter/∅ leaves as a flat operator.
fn as_flat_operator(e: &Expression) -> Result<FlatOperator, Error> {
    let relation = match e.root() {
        operalang_core::operad::OperadElement::ARef(r) => r.clone(),
        other => other.to_aref(),
    };
    let leaves = e
        .leaves()
        .iter()
        .map(|leaf| match leaf {
            Leaf::Letter(l) if l.chars().count() == 1 => {
                Ok(FlatLeaf::Letter(l.chars().next().unwrap()))
            }
            Leaf::Letter(l) => Err(Error::invalid(
                "transform",
                format!("leaf {l:?} is not a single letter"),
            )),
            Leaf::Empty => Ok(FlatLeaf::Empty),
            Leaf::Sub(_) => Err(Error::invalid(
                "transform",
                "surgery expects letter or ∅ leaves, not nested operators",
            )),
        })
        .collect::<Result<Vec<_>, _>>()?;
    FlatOperator::new(relation, leaves)
}

/// Run a command; `Ok` carries the output to print, `Err(code)` the exit
/// status (diagnostics go to stderr; nothing is printed on stdout on error).
fn run(cli: Cli) -> Result<String, u8> {
    let fail = |err: Error| -> u8 {
        eprintln!("error: {err}");
        exit_code_for(&err)
    };
    match cli.command {
        Command::Compose {
            left,
            position,
            right,
        } => {
            let a = parse_operator(&left).map_err(fail)?;
            let b = parse_operator(&right).map_err(fail)?;
            let composed = a.compose(position, &b).map_err(fail)?;
            Ok(format!("{composed}\n"))
        }
        Command::Eval {
            expression,
            format,
            words,
        } => {
            let source = read_argument(&expression).map_err(fail)?;
            let expr = parse_expression(&source).map_err(fail)?;
            let auto = build_automaton(&expr).map_err(fail)?;
            if let Some(n) = words {
                let n = n.min(12);
                let mut out = String::new();
                for word in auto.words_up_to(n) {
                    out.push_str(&display_word(&word));
                    out.push('\n');
                }
                Ok(out)
            } else {
                match format {
                    Format::Dot => Ok(auto.to_dot()),
                    Format::Json | Format::Table => Ok(format!("{}\n", auto.to_json())),
                }
            }
        }
        Command::Equiv { left, right } => {
            let left = read_argument(&left).map_err(fail)?;
            let right = read_argument(&right).map_err(fail)?;
            let a = build_automaton(&parse_expression(&left).map_err(fail)?).map_err(fail)?;
            let b = build_automaton(&parse_expression(&right).map_err(fail)?).map_err(fail)?;
            match language_equivalent(&a, &b) {
                LanguageCmp::Equivalent => Ok("EQUIVALENT\n".to_string()),
                LanguageCmp::Distinguished(word) => {
                    eprintln!("INEQUIVALENT: {}", display_word(&word));
                    Err(1)
                }
            }
        }
        Command::Compile { regex } => {
            let source = read_argument(&regex).map_err(fail)?;
            let ast = parse_regex(&source).map_err(fail)?;
            Ok(format!("{}\n", compile(&ast)))
        }
        Command::Transform { op, expression } => {
            let source = expression.join("");
            let expr = parse_expression(&source).map_err(fail)?;
            let flat = as_flat_operator(&expr).map_err(fail)?;
            let out = match op {
                TransformOp::Prefixes => prefixes(&flat).to_string(),
                TransformOp::Suffixes => suffixes(&flat).to_string(),
                TransformOp::Factors => factors(&flat).to_string(),
                TransformOp::Subwords => subwords(&flat).to_string(),
                TransformOp::Mirror => mirror(&flat).to_string(),
                TransformOp::Admissible => {
                    let adm = admissible_positions(&flat);
                    let items: Vec<String> = adm.iter().map(u32::to_string).collect();
                    format!("{{{}}}", items.join(","))
                }
            };
            Ok(format!("{out}\n"))
        }
        Command::Family { which, k } => {
            let family = builtin_family(k, &which).map_err(fail)?;
            Ok(format!("{family}\n"))
        }
        Command::Census { k, format, letters } => {
            let letters: Vec<String> = match letters {
                Some(s) => s.chars().map(|c| c.to_string()).collect(),
                None => (0..k).map(|i| ((b'a' + i as u8) as char).to_string()).collect(),
            };
            let census = census(k, &letters).map_err(fail)?;
            match format {
                Format::Json => Ok(census_json(&census)),
                Format::Table | Format::Dot => Ok(census_table(&census)),
            }
        }
        Command::Faithful { k } => {
            let report = verify_faithfulness(k).map_err(fail)?;
            let mut out = format!(
                "k = {}: {} pairs checked; max witness length {}; max shortest counterexample {}\n",
                report.k,
                report.pairs_checked,
                report.max_witness_len,
                report.max_counterexample_len
            );
            if report.holds() {
                out.push_str("FAITHFUL\n");
                Ok(out)
            } else {
                eprint!("{out}");
                eprintln!("VIOLATIONS: {:?}", report.violations);
                Err(1)
            }
        }
        Command::Laws { full } => {
            let cfg = if full {
                LawConfig::full()
            } else {
                LawConfig::quick()
            };
            let outcome = run_laws(&cfg);
            if outcome.all_pass() {
                Ok(format!("{outcome}\n"))
            } else {
                eprintln!("{outcome}");
                Err(1)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(code) => ExitCode::from(code),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flat_operator_reinterprets_letter_expressions() {
        let e = parse_expression("aref[3]{(2,1)}(a,_,b)").unwrap();
        let flat = as_flat_operator(&e).unwrap();
        assert_eq!(flat.arity(), 3);
        assert_eq!(flat.leaves()[1], FlatLeaf::Empty);
        let nested = parse_expression("aref[1]{}(aref[1]{}(a))").unwrap();
        assert!(as_flat_operator(&nested).is_err());
    }
}
