//! Command-line surface: argument definitions and the command bodies.
//!
//! Every command reads the text formats of [`crate::format`], writes
//! deterministic output (declaration order for states and variables,
//! shortlex order for words), and follows one exit-code convention:
//!
//! * `0` — success (including "equivalent" and a passing law run),
//! * `1` — a semantic negative: inequivalent inputs or a failing law run,
//! * `2` — usage, parse, or validation errors.
//!
//! Running the same command on the same inputs twice produces
//! byte-identical output.

use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::automata::embed_eps_nda;
use crate::automata::embed_nda;
use crate::epsilon::eliminate;
use crate::format::{
    parse_automaton, parse_equation, parse_independence, print_nda, word_token,
    AutomatonFileValue, EquationFileValue,
};
use crate::laws::{
    check_double_dagger, check_eps_soundness, check_quotient_factorisation, gen_alphabet,
    GenConfig, LawReport, Mutation,
};
use crate::mazurkiewicz::{Independence, TraceSet};
use crate::solver::{semantics_lang, semantics_word, solve, SolItem, VarId};
use crate::words::{BoundedLanguage, Word};

/// Bounded fixpoint semantics for automata with word labels.
#[derive(Parser, Debug)]
#[command(name = "tracefix", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Eliminate epsilon edges, printing an equivalent plain automaton.
    Eliminate {
        /// Automaton file of type `eps-nda` (or `nda`, passed through).
        input: PathBuf,
    },
    /// Print the bounded language of a state, one word per line.
    Semantics {
        /// Automaton file of any type.
        input: PathBuf,
        /// State to print the semantics of.
        state: String,
        /// Length bound for the computed language.
        #[arg(long = "max-len")]
        max_len: usize,
    },
    /// Compare the bounded languages of paired states of two automata.
    Equiv {
        /// First automaton file.
        first: PathBuf,
        /// Second automaton file.
        second: PathBuf,
        /// Length bound the comparison is exact up to.
        #[arg(long = "max-len")]
        max_len: usize,
        /// State pairs `p=q[,p2=q2,...]`; default pairs equal names.
        #[arg(long)]
        pairs: Option<String>,
    },
    /// Solve an equation system, printing the least solution's items.
    Solve {
        /// Equation file with `var` items (one variable copy).
        input: PathBuf,
        /// Length bound for the computed solution.
        #[arg(long = "max-len")]
        max_len: usize,
    },
    /// Print the trace quotient of a state's bounded language.
    Traces {
        /// Automaton file of any type.
        input: PathBuf,
        /// State to print the traces of.
        state: String,
        /// Independence file: one symbol pair per line.
        #[arg(long)]
        independence: PathBuf,
        /// Length bound for the computed language.
        #[arg(long = "max-len")]
        max_len: usize,
    },
    /// Check a law on randomly generated instances.
    Laws {
        /// Which law to check.
        #[arg(long, value_enum)]
        law: LawArg,
        /// Number of generated instances.
        #[arg(long, default_value_t = 500)]
        trials: u64,
        /// Seed for the instance generator.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Length bound the law is compared at.
        #[arg(long = "max-len", default_value_t = 4)]
        max_len: usize,
        /// Maximum states or variables per instance.
        #[arg(long, default_value_t = 5)]
        max_states: usize,
        /// Maximum transitions or equation items per instance.
        #[arg(long, default_value_t = 8)]
        max_edges: usize,
        /// Generator alphabet size (1 to 3).
        #[arg(long, default_value_t = 2)]
        alphabet_size: usize,
        /// Maximum label and output word length.
        #[arg(long, default_value_t = 2)]
        max_label_len: usize,
        /// Independence file for quotient-fact; default independence is
        /// the first two generator symbols.
        #[arg(long)]
        independence: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum LawArg {
    /// Epsilon elimination preserves bounded semantics.
    EpsSound,
    /// Two-stage solving equals solving the merged system.
    DoubleDagger,
    /// Trace quotient commutes with label normalisation.
    QuotientFact,
}

/// Runs a parsed command, writing to the given streams, and returns the
/// process exit code.
pub fn run(cli: Cli, out: &mut impl Write, err: &mut impl Write) -> io::Result<u8> {
    match cli.command {
        Command::Eliminate { input } => cmd_eliminate(&input, out, err),
        Command::Semantics {
            input,
            state,
            max_len,
        } => cmd_semantics(&input, &state, max_len, out, err),
        Command::Equiv {
            first,
            second,
            max_len,
            pairs,
        } => cmd_equiv(&first, &second, max_len, pairs.as_deref(), out, err),
        Command::Solve { input, max_len } => cmd_solve(&input, max_len, out, err),
        Command::Traces {
            input,
            state,
            independence,
            max_len,
        } => cmd_traces(&input, &state, &independence, max_len, out, err),
        Command::Laws {
            law,
            trials,
            seed,
            max_len,
            max_states,
            max_edges,
            alphabet_size,
            max_label_len,
            independence,
        } => {
            let cfg = GenConfig {
                seed,
                max_states,
                max_edges,
                alphabet_size,
                max_label_len,
                bound: max_len,
            };
            cmd_laws(law, trials, &cfg, independence.as_deref(), out, err)
        }
    }
}

/// Reads a file, mapping I/O problems to an exit-2 style message.
fn read_input(path: &Path, err: &mut impl Write) -> io::Result<Result<String, u8>> {
    match std::fs::read_to_string(path) {
        Ok(text) => Ok(Ok(text)),
        Err(e) => {
            writeln!(err, "error: cannot read {}: {e}", path.display())?;
            Ok(Err(2))
        }
    }
}

fn parse_automaton_file(
    path: &Path,
    err: &mut impl Write,
) -> io::Result<Result<AutomatonFileValue, u8>> {
    let text = match read_input(path, err)? {
        Ok(text) => text,
        Err(code) => return Ok(Err(code)),
    };
    match parse_automaton(&text) {
        Ok(value) => Ok(Ok(value)),
        Err(e) => {
            writeln!(err, "error: {}: {e}", path.display())?;
            Ok(Err(2))
        }
    }
}

/// Per-state bounded languages of any automaton file: plain automata are
/// embedded first, language labels are expanded.
fn semantics_of_file(value: &AutomatonFileValue, n: usize) -> Vec<BoundedLanguage> {
    match value {
        AutomatonFileValue::Nda(a) => semantics_word(&embed_nda(a), n),
        AutomatonFileValue::EpsNda(a) => semantics_word(&embed_eps_nda(a), n),
        AutomatonFileValue::Word(a) => semantics_word(a, n),
        AutomatonFileValue::Lang(a) => semantics_lang(a, n),
    }
}

fn cmd_eliminate(input: &Path, out: &mut impl Write, err: &mut impl Write) -> io::Result<u8> {
    let value = match parse_automaton_file(input, err)? {
        Ok(value) => value,
        Err(code) => return Ok(code),
    };
    let nda = match value {
        AutomatonFileValue::EpsNda(e) => eliminate(&e),
        AutomatonFileValue::Nda(n) => n,
        other => {
            writeln!(
                err,
                "error: eliminate expects a symbol-transition automaton \
                 (type nda or eps-nda), found type {}",
                other.type_name()
            )?;
            return Ok(2);
        }
    };
    write!(out, "{}", print_nda(&nda))?;
    Ok(0)
}

fn state_index(
    value: &AutomatonFileValue,
    state: &str,
    err: &mut impl Write,
) -> io::Result<Result<usize, u8>> {
    match value.states().index_of(state) {
        Some(i) => Ok(Ok(i)),
        None => {
            writeln!(err, "error: unknown state {state:?}")?;
            Ok(Err(2))
        }
    }
}

fn cmd_semantics(
    input: &Path,
    state: &str,
    max_len: usize,
    out: &mut impl Write,
    err: &mut impl Write,
) -> io::Result<u8> {
    let value = match parse_automaton_file(input, err)? {
        Ok(value) => value,
        Err(code) => return Ok(code),
    };
    let i = match state_index(&value, state, err)? {
        Ok(i) => i,
        Err(code) => return Ok(code),
    };
    let langs = semantics_of_file(&value, max_len);
    for w in langs[i].iter() {
        writeln!(out, "{}", word_token(value.alphabet(), w))?;
    }
    Ok(0)
}

/// Parses `p=q[,p2=q2,...]` against the two state sets.
fn parse_pairs(
    text: &str,
    first: &AutomatonFileValue,
    second: &AutomatonFileValue,
) -> Result<Vec<(usize, usize)>, String> {
    let mut pairs = Vec::new();
    for part in text.split(',') {
        let (p, q) = part
            .split_once('=')
            .ok_or_else(|| format!("malformed pair {part:?}: expected <state>=<state>"))?;
        let pi = first
            .states()
            .index_of(p)
            .ok_or_else(|| format!("unknown state {p:?} in the first automaton"))?;
        let qi = second
            .states()
            .index_of(q)
            .ok_or_else(|| format!("unknown state {q:?} in the second automaton"))?;
        pairs.push((pi, qi));
    }
    if pairs.is_empty() {
        return Err("no state pairs given".to_string());
    }
    Ok(pairs)
}

/// Pairs equally-named states, in the first automaton's declaration order.
fn default_pairs(first: &AutomatonFileValue, second: &AutomatonFileValue) -> Vec<(usize, usize)> {
    first
        .states()
        .iter()
        .enumerate()
        .filter_map(|(i, name)| second.states().index_of(name).map(|j| (i, j)))
        .collect()
}

fn cmd_equiv(
    first_path: &Path,
    second_path: &Path,
    max_len: usize,
    pairs_arg: Option<&str>,
    out: &mut impl Write,
    err: &mut impl Write,
) -> io::Result<u8> {
    let first = match parse_automaton_file(first_path, err)? {
        Ok(value) => value,
        Err(code) => return Ok(code),
    };
    let second = match parse_automaton_file(second_path, err)? {
        Ok(value) => value,
        Err(code) => return Ok(code),
    };
    if first.alphabet() != second.alphabet() {
        writeln!(
            err,
            "error: the automata are over different alphabets; comparison \
             needs a common alphabet"
        )?;
        return Ok(2);
    }
    let pairs = match pairs_arg {
        Some(text) => match parse_pairs(text, &first, &second) {
            Ok(pairs) => pairs,
            Err(msg) => {
                writeln!(err, "error: {msg}")?;
                return Ok(2);
            }
        },
        None => {
            let pairs = default_pairs(&first, &second);
            if pairs.is_empty() {
                writeln!(
                    err,
                    "error: the automata share no state names; give --pairs"
                )?;
                return Ok(2);
            }
            pairs
        }
    };

    let first_langs = semantics_of_file(&first, max_len);
    let second_langs = semantics_of_file(&second, max_len);

    // The shortlex-least witness across all pairs, ties broken by pair
    // order: (word, pair index, word is on the first side).
    let mut witness: Option<(Word, usize, bool)> = None;
    for (k, &(i, j)) in pairs.iter().enumerate() {
        let l = &first_langs[i];
        let r = &second_langs[j];
        let in_first_only = l.iter().find(|w| !r.contains(w));
        let in_second_only = r.iter().find(|w| !l.contains(w));
        for (w, first_side) in in_first_only
            .map(|w| (w, true))
            .into_iter()
            .chain(in_second_only.map(|w| (w, false)))
        {
            let better = match &witness {
                None => true,
                Some((best, _, _)) => w < best,
            };
            if better {
                witness = Some((w.clone(), k, first_side));
            }
        }
    }

    match witness {
        None => {
            writeln!(out, "equivalent (bound {max_len})")?;
            Ok(0)
        }
        Some((w, k, first_side)) => {
            let (i, j) = pairs[k];
            let (have, have_state, lack, lack_state) = if first_side {
                ("first", first.states().name(i), "second", second.states().name(j))
            } else {
                ("second", second.states().name(j), "first", first.states().name(i))
            };
            writeln!(out, "inequivalent (bound {max_len})")?;
            writeln!(
                out,
                "witness: {} accepted by the {have} automaton ({have_state}) \
                 but not the {lack} ({lack_state})",
                word_token(first.alphabet(), &w)
            )?;
            Ok(1)
        }
    }
}

fn cmd_solve(
    input: &Path,
    max_len: usize,
    out: &mut impl Write,
    err: &mut impl Write,
) -> io::Result<u8> {
    let text = match read_input(input, err)? {
        Ok(text) => text,
        Err(code) => return Ok(code),
    };
    let e = match parse_equation(&text) {
        Ok(EquationFileValue::Single(e)) => e,
        Ok(EquationFileValue::Double(_)) => {
            writeln!(
                err,
                "error: the file uses var2 items (a two-copy system); solve \
                 handles one variable copy — check the two-stage solution \
                 with the laws command instead"
            )?;
            return Ok(2);
        }
        Err(e) => {
            writeln!(err, "error: {}: {e}", input.display())?;
            return Ok(2);
        }
    };
    let solution = solve(&e, max_len);
    for x in 0..e.vars().len() {
        let name = e.vars().name(x);
        for item in solution.items(VarId(x)) {
            match item {
                SolItem::Output(w) => {
                    writeln!(out, "{name} out {}", word_token(e.alphabet(), w))?;
                }
                SolItem::ToParam(w, p) => {
                    writeln!(
                        out,
                        "{name} param {} {}",
                        word_token(e.alphabet(), w),
                        e.params().name(p.0)
                    )?;
                }
            }
        }
    }
    Ok(0)
}

fn cmd_traces(
    input: &Path,
    state: &str,
    independence: &Path,
    max_len: usize,
    out: &mut impl Write,
    err: &mut impl Write,
) -> io::Result<u8> {
    let value = match parse_automaton_file(input, err)? {
        Ok(value) => value,
        Err(code) => return Ok(code),
    };
    let i = match state_index(&value, state, err)? {
        Ok(i) => i,
        Err(code) => return Ok(code),
    };
    let ind_text = match read_input(independence, err)? {
        Ok(text) => text,
        Err(code) => return Ok(code),
    };
    let ind = match parse_independence(&ind_text, value.alphabet()) {
        Ok(ind) => ind,
        Err(e) => {
            writeln!(err, "error: {}: {e}", independence.display())?;
            return Ok(2);
        }
    };
    let langs = semantics_of_file(&value, max_len);
    let traces = TraceSet::from_language(&langs[i], &ind);
    for w in traces.iter() {
        writeln!(out, "{}", word_token(value.alphabet(), w))?;
    }
    Ok(0)
}

fn cmd_laws(
    law: LawArg,
    trials: u64,
    cfg: &GenConfig,
    independence: Option<&Path>,
    out: &mut impl Write,
    err: &mut impl Write,
) -> io::Result<u8> {
    if let Err(msg) = cfg.validate() {
        writeln!(err, "error: {msg}")?;
        return Ok(2);
    }
    let report = match law {
        LawArg::EpsSound => check_eps_soundness(cfg, trials, Mutation::None),
        LawArg::DoubleDagger => check_double_dagger(cfg, trials, Mutation::None),
        LawArg::QuotientFact => {
            let alphabet = gen_alphabet(cfg.alphabet_size);
            let ind = match independence {
                Some(path) => {
                    let text = match read_input(path, err)? {
                        Ok(text) => text,
                        Err(code) => return Ok(code),
                    };
                    match parse_independence(&text, &alphabet) {
                        Ok(ind) => ind,
                        Err(e) => {
                            writeln!(err, "error: {}: {e}", path.display())?;
                            return Ok(2);
                        }
                    }
                }
                None if cfg.alphabet_size >= 2 => {
                    Independence::new(alphabet, [('a', 'b')]).expect("a, b are distinct")
                }
                None => Independence::empty(alphabet),
            };
            check_quotient_factorisation(cfg, trials, &ind, Mutation::None)
        }
    };
    print_report(&report, out)
}

fn print_report(report: &LawReport, out: &mut impl Write) -> io::Result<u8> {
    if report.passed() {
        writeln!(out, "PASS {}/{}", report.trials, report.trials)?;
        return Ok(0);
    }
    for failure in &report.failures {
        writeln!(out, "# trial {}: {}", failure.trial, failure.detail)?;
        write!(out, "{}", failure.instance)?;
    }
    writeln!(
        out,
        "FAIL {}/{}",
        report.trials - report.failures.len() as u64,
        report.trials
    )?;
    Ok(1)
}
