//! Line-based text formats for automata, equation systems, and
//! independence relations.
//!
//! Shared lexical rules: `#` starts a comment anywhere on a line, blank
//! lines are ignored, and fields within a line are whitespace-separated
//! tokens. The token `eps` denotes the empty word wherever a word is
//! expected; it is reserved and cannot collide with symbols, which are
//! single characters.
//!
//! Automaton files start with a `type:` header naming one of `nda`,
//! `eps-nda`, `word`, or `lang`, followed by `alphabet:` and `states:`
//! headers and then the sections that type allows:
//!
//! ```text
//! type: eps-nda
//! alphabet: a b c
//! states: q0 q2 q3
//! accept: q2
//! trans: q0 a q2        # one symbol transition per line
//! eps: q0 q3            # epsilon edge
//! ```
//!
//! Word automata use `wtrans: <src> <word|eps> <dst>` and
//! `out: <state> <word|eps>`; language automata use `ltrans: <src>
//! <regex> <dst>` and `lout: <state> <regex>` with regexes written in the
//! grammar of [`crate::regex`]. Unknown keys are errors, as is any section
//! a type does not allow.
//!
//! Equation files have no `type:` header:
//!
//! ```text
//! alphabet: a b c d
//! vars: x0 x1
//! params: y
//! eq: x0 out c
//! eq: x0 var ab x1
//! eq: x1 var2 left a x0   # two-copy systems use var2 items
//! eq: x1 param eps y
//! ```
//!
//! A file mixing `var` and `var2` items is malformed: a system either has
//! one variable copy or two.
//!
//! Independence files are lines of two symbols each. All parse errors name
//! the 1-based line they arose on. Printing is canonical: fixed section
//! order, declaration order for states, shortlex order for words; parsing
//! a printed value yields the value back.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::automata::{EpsNda, LangAutomaton, Nda, StateId, WordAutomaton};
use crate::mazurkiewicz::Independence;
use crate::names::Names;
use crate::regex::{format_regex, parse_regex};
use crate::solver::{Eq2Item, Eq2Morphism, EqItem, EquationMorphism, VarId};
use crate::words::{Alphabet, Word};

/// Surface token for the empty word.
pub const EPS_TOKEN: &str = "eps";

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct FileError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, FileError> {
    Err(FileError {
        line,
        message: message.into(),
    })
}

/// Content lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            None
        } else {
            Some((i + 1, line))
        }
    })
}

/// Splits `key: rest` and returns (key, whitespace-separated fields).
fn keyed(line: &str) -> Option<(&str, Vec<&str>)> {
    let (key, rest) = line.split_once(':')?;
    let key = key.trim();
    if key.is_empty() || key.contains(char::is_whitespace) {
        return None;
    }
    Some((key, rest.split_whitespace().collect()))
}

fn parse_word_token(
    alphabet: &Alphabet,
    token: &str,
    line: usize,
) -> Result<Word, FileError> {
    if token == EPS_TOKEN {
        return Ok(Word::empty());
    }
    alphabet
        .parse_word(token)
        .map_err(|e| FileError {
            line,
            message: e.to_string(),
        })
}

/// Renders a word for output: its symbols, or [`EPS_TOKEN`] if empty.
pub fn word_token(alphabet: &Alphabet, w: &Word) -> String {
    if w.is_empty() {
        EPS_TOKEN.to_string()
    } else {
        alphabet.format_word(w)
    }
}

fn parse_symbol_token(
    alphabet: &Alphabet,
    token: &str,
    line: usize,
) -> Result<char, FileError> {
    let mut chars = token.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => {
            alphabet.sym_id(c).map_err(|e| FileError {
                line,
                message: e.to_string(),
            })?;
            Ok(c)
        }
        _ => err(line, format!("expected a single symbol, found {token:?}")),
    }
}

/// A parsed automaton file of any of the four types.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum AutomatonFileValue {
    Nda(Nda),
    EpsNda(EpsNda),
    Word(WordAutomaton),
    Lang(LangAutomaton),
}

impl AutomatonFileValue {
    pub fn type_name(&self) -> &'static str {
        match self {
            AutomatonFileValue::Nda(_) => "nda",
            AutomatonFileValue::EpsNda(_) => "eps-nda",
            AutomatonFileValue::Word(_) => "word",
            AutomatonFileValue::Lang(_) => "lang",
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        match self {
            AutomatonFileValue::Nda(a) => a.alphabet(),
            AutomatonFileValue::EpsNda(a) => a.alphabet(),
            AutomatonFileValue::Word(a) => a.alphabet(),
            AutomatonFileValue::Lang(a) => a.alphabet(),
        }
    }

    pub fn states(&self) -> &Names {
        match self {
            AutomatonFileValue::Nda(a) => a.states(),
            AutomatonFileValue::EpsNda(a) => a.states(),
            AutomatonFileValue::Word(a) => a.states(),
            AutomatonFileValue::Lang(a) => a.states(),
        }
    }
}

struct AutomatonParts {
    alphabet: Option<(usize, Alphabet)>,
    states: Option<(usize, Names)>,
    accept: Vec<String>,
    trans: Vec<(String, char, String)>,
    eps: Vec<(String, String)>,
    wtrans: Vec<(String, String, String)>,
    out: Vec<(String, String)>,
    ltrans: Vec<(String, crate::regex::Regex, String)>,
    lout: Vec<(String, crate::regex::Regex)>,
}

/// Parses any automaton file; the `type:` header (which must be the first
/// content line) selects the result variant.
pub fn parse_automaton(text: &str) -> Result<AutomatonFileValue, FileError> {
    let mut lines = content_lines(text);
    let (type_line, first) = match lines.next() {
        Some(pair) => pair,
        None => return err(1, "empty file: expected a 'type:' header"),
    };
    let type_name = match keyed(first) {
        Some(("type", fields)) if fields.len() == 1 => fields[0].to_string(),
        Some(("type", _)) => return err(type_line, "expected exactly one type name"),
        _ => return err(type_line, "expected a 'type:' header on the first line"),
    };
    let allowed: &[&str] = match type_name.as_str() {
        "nda" => &["alphabet", "states", "accept", "trans"],
        "eps-nda" => &["alphabet", "states", "accept", "trans", "eps"],
        "word" => &["alphabet", "states", "wtrans", "out"],
        "lang" => &["alphabet", "states", "ltrans", "lout"],
        other => {
            return err(
                type_line,
                format!("unknown type {other:?}: expected nda, eps-nda, word, or lang"),
            )
        }
    };

    let mut parts = AutomatonParts {
        alphabet: None,
        states: None,
        accept: Vec::new(),
        trans: Vec::new(),
        eps: Vec::new(),
        wtrans: Vec::new(),
        out: Vec::new(),
        ltrans: Vec::new(),
        lout: Vec::new(),
    };

    for (lineno, line) in lines {
        let (key, fields) = match keyed(line) {
            Some(kf) => kf,
            None => return err(lineno, format!("malformed line {line:?}: expected 'key: fields'")),
        };
        if key == "type" {
            return err(lineno, "duplicate 'type:' header");
        }
        if !allowed.contains(&key) {
            return err(
                lineno,
                format!("unknown key {key:?} for type {type_name:?}"),
            );
        }
        match key {
            "alphabet" => {
                if parts.alphabet.is_some() {
                    return err(lineno, "duplicate 'alphabet:' header");
                }
                let mut symbols = Vec::new();
                for field in &fields {
                    let mut chars = field.chars();
                    match (chars.next(), chars.next()) {
                        (Some(c), None) => symbols.push(c),
                        _ => {
                            return err(
                                lineno,
                                format!("symbols are single characters, found {field:?}"),
                            )
                        }
                    }
                }
                match Alphabet::new(symbols) {
                    Ok(a) => parts.alphabet = Some((lineno, a)),
                    Err(e) => return err(lineno, e.to_string()),
                }
            }
            "states" => {
                if parts.states.is_some() {
                    return err(lineno, "duplicate 'states:' header");
                }
                match Names::new(fields.iter().map(|s| s.to_string()).collect()) {
                    Ok(names) => parts.states = Some((lineno, names)),
                    Err(e) => return err(lineno, e.to_string()),
                }
            }
            _ => {
                let alphabet = match &parts.alphabet {
                    Some((_, a)) => a,
                    None => return err(lineno, "section before 'alphabet:' header"),
                };
                let states = match &parts.states {
                    Some((_, s)) => s,
                    None => return err(lineno, "section before 'states:' header"),
                };
                let state_field = |tok: &str, lineno: usize| -> Result<String, FileError> {
                    if states.contains(tok) {
                        Ok(tok.to_string())
                    } else {
                        err(lineno, format!("unknown state {tok:?}"))
                    }
                };
                match (key, fields.as_slice()) {
                    ("accept", names) => {
                        for tok in names {
                            parts.accept.push(state_field(tok, lineno)?);
                        }
                    }
                    ("trans", [src, sym, dst]) => {
                        let sym = parse_symbol_token(alphabet, sym, lineno)?;
                        parts.trans.push((
                            state_field(src, lineno)?,
                            sym,
                            state_field(dst, lineno)?,
                        ));
                    }
                    ("eps", [src, dst]) => {
                        parts
                            .eps
                            .push((state_field(src, lineno)?, state_field(dst, lineno)?));
                    }
                    ("wtrans", [src, word, dst]) => {
                        let w = parse_word_token(alphabet, word, lineno)?;
                        parts.wtrans.push((
                            state_field(src, lineno)?,
                            alphabet.format_word(&w),
                            state_field(dst, lineno)?,
                        ));
                    }
                    ("out", [state, word]) => {
                        let w = parse_word_token(alphabet, word, lineno)?;
                        parts
                            .out
                            .push((state_field(state, lineno)?, alphabet.format_word(&w)));
                    }
                    ("ltrans", [src, regex, dst]) => {
                        let r = parse_regex(regex, alphabet)
                            .map_err(|e| FileError {
                                line: lineno,
                                message: e.to_string(),
                            })?;
                        parts.ltrans.push((
                            state_field(src, lineno)?,
                            r,
                            state_field(dst, lineno)?,
                        ));
                    }
                    ("lout", [state, regex]) => {
                        let r = parse_regex(regex, alphabet)
                            .map_err(|e| FileError {
                                line: lineno,
                                message: e.to_string(),
                            })?;
                        parts.lout.push((state_field(state, lineno)?, r));
                    }
                    _ => {
                        return err(
                            lineno,
                            format!("wrong number of fields for {key:?}"),
                        )
                    }
                }
            }
        }
    }

    let (_, alphabet) = match parts.alphabet {
        Some(a) => a,
        None => return err(type_line, "missing 'alphabet:' header"),
    };
    let (_, states) = match parts.states {
        Some(s) => s,
        None => return err(type_line, "missing 'states:' header"),
    };
    let state_names: Vec<String> = states.iter().map(str::to_string).collect();

    let assemble = |e: crate::automata::AutomatonError| FileError {
        line: type_line,
        message: e.to_string(),
    };
    match type_name.as_str() {
        "nda" => Nda::new(alphabet, state_names, parts.trans, parts.accept)
            .map(AutomatonFileValue::Nda)
            .map_err(assemble),
        "eps-nda" => EpsNda::new(alphabet, state_names, parts.trans, parts.eps, parts.accept)
            .map(AutomatonFileValue::EpsNda)
            .map_err(assemble),
        "word" => WordAutomaton::new(alphabet, state_names, parts.wtrans, parts.out)
            .map(AutomatonFileValue::Word)
            .map_err(assemble),
        "lang" => LangAutomaton::new(alphabet, state_names, parts.ltrans, parts.lout)
            .map(AutomatonFileValue::Lang)
            .map_err(assemble),
        _ => unreachable!("type name validated above"),
    }
}

fn push_header(out: &mut String, alphabet: &Alphabet, states: &Names) {
    out.push_str("alphabet:");
    for (_, c) in alphabet.symbols() {
        out.push(' ');
        out.push(c);
    }
    out.push('\n');
    out.push_str("states:");
    for name in states.iter() {
        out.push(' ');
        out.push_str(name);
    }
    out.push('\n');
}

fn push_accept(out: &mut String, states: &Names, accepting: &BTreeSet<StateId>) {
    out.push_str("accept:");
    for &StateId(i) in accepting {
        out.push(' ');
        out.push_str(states.name(i));
    }
    out.push('\n');
}

pub fn print_nda(nda: &Nda) -> String {
    let mut out = String::from("type: nda\n");
    push_header(&mut out, nda.alphabet(), nda.states());
    push_accept(&mut out, nda.states(), nda.accepting());
    for &(StateId(p), sym, StateId(q)) in nda.transitions() {
        out.push_str(&format!(
            "trans: {} {} {}\n",
            nda.states().name(p),
            nda.alphabet().char_of(sym),
            nda.states().name(q)
        ));
    }
    out
}

pub fn print_eps_nda(e: &EpsNda) -> String {
    let mut out = String::from("type: eps-nda\n");
    push_header(&mut out, e.alphabet(), e.states());
    push_accept(&mut out, e.states(), e.accepting());
    for &(StateId(p), sym, StateId(q)) in e.transitions() {
        out.push_str(&format!(
            "trans: {} {} {}\n",
            e.states().name(p),
            e.alphabet().char_of(sym),
            e.states().name(q)
        ));
    }
    for &(StateId(p), StateId(q)) in e.eps_edges() {
        out.push_str(&format!(
            "eps: {} {}\n",
            e.states().name(p),
            e.states().name(q)
        ));
    }
    out
}

pub fn print_word_automaton(w: &WordAutomaton) -> String {
    let mut out = String::from("type: word\n");
    push_header(&mut out, w.alphabet(), w.states());
    for (StateId(p), word, StateId(q)) in w.wtransitions() {
        out.push_str(&format!(
            "wtrans: {} {} {}\n",
            w.states().name(*p),
            word_token(w.alphabet(), word),
            w.states().name(*q)
        ));
    }
    for i in 0..w.states().len() {
        for word in w.outputs(StateId(i)) {
            out.push_str(&format!(
                "out: {} {}\n",
                w.states().name(i),
                word_token(w.alphabet(), word)
            ));
        }
    }
    out
}

pub fn print_lang_automaton(l: &LangAutomaton) -> String {
    let mut out = String::from("type: lang\n");
    push_header(&mut out, l.alphabet(), l.states());
    for (StateId(p), r, StateId(q)) in l.ltransitions() {
        out.push_str(&format!(
            "ltrans: {} {} {}\n",
            l.states().name(*p),
            format_regex(l.alphabet(), r),
            l.states().name(*q)
        ));
    }
    for i in 0..l.states().len() {
        for r in l.loutputs(StateId(i)) {
            out.push_str(&format!(
                "lout: {} {}\n",
                l.states().name(i),
                format_regex(l.alphabet(), r)
            ));
        }
    }
    out
}

pub fn print_automaton(value: &AutomatonFileValue) -> String {
    match value {
        AutomatonFileValue::Nda(a) => print_nda(a),
        AutomatonFileValue::EpsNda(a) => print_eps_nda(a),
        AutomatonFileValue::Word(a) => print_word_automaton(a),
        AutomatonFileValue::Lang(a) => print_lang_automaton(a),
    }
}

/// A parsed equation file: a system over one variable copy or two.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum EquationFileValue {
    Single(EquationMorphism),
    Double(Eq2Morphism),
}

/// Parses an equation file. `var` items yield a [`EquationMorphism`],
/// `var2` items a [`Eq2Morphism`]; mixing them is an error.
pub fn parse_equation(text: &str) -> Result<EquationFileValue, FileError> {
    let mut alphabet: Option<Alphabet> = None;
    let mut vars: Option<(usize, Names)> = None;
    let mut params: Option<Names> = None;
    // (line, var name, parsed item) with var2 items kept separately.
    enum RawItem {
        Out(Word),
        Var(Word, String),
        Var2(bool, Word, String), // left?
        Param(Word, String),
    }
    let mut items: Vec<(usize, String, RawItem)> = Vec::new();
    let mut first_var: Option<usize> = None;
    let mut first_var2: Option<usize> = None;

    for (lineno, line) in content_lines(text) {
        let (key, fields) = match keyed(line) {
            Some(kf) => kf,
            None => return err(lineno, format!("malformed line {line:?}: expected 'key: fields'")),
        };
        match key {
            "alphabet" => {
                if alphabet.is_some() {
                    return err(lineno, "duplicate 'alphabet:' header");
                }
                let mut symbols = Vec::new();
                for field in &fields {
                    let mut chars = field.chars();
                    match (chars.next(), chars.next()) {
                        (Some(c), None) => symbols.push(c),
                        _ => {
                            return err(
                                lineno,
                                format!("symbols are single characters, found {field:?}"),
                            )
                        }
                    }
                }
                match Alphabet::new(symbols) {
                    Ok(a) => alphabet = Some(a),
                    Err(e) => return err(lineno, e.to_string()),
                }
            }
            "vars" => {
                if vars.is_some() {
                    return err(lineno, "duplicate 'vars:' header");
                }
                match Names::new(fields.iter().map(|s| s.to_string()).collect()) {
                    Ok(names) => vars = Some((lineno, names)),
                    Err(e) => return err(lineno, e.to_string()),
                }
            }
            "params" => {
                if params.is_some() {
                    return err(lineno, "duplicate 'params:' header");
                }
                match Names::new(fields.iter().map(|s| s.to_string()).collect()) {
                    Ok(names) => params = Some(names),
                    Err(e) => return err(lineno, e.to_string()),
                }
            }
            "eq" => {
                let alphabet = match &alphabet {
                    Some(a) => a,
                    None => return err(lineno, "equation before 'alphabet:' header"),
                };
                let vars = match &vars {
                    Some((_, v)) => v,
                    None => return err(lineno, "equation before 'vars:' header"),
                };
                let (var, item) = match fields.as_slice() {
                    [x, "out", word] => (
                        *x,
                        RawItem::Out(parse_word_token(alphabet, word, lineno)?),
                    ),
                    [x, "var", word, target] => {
                        first_var.get_or_insert(lineno);
                        (
                            *x,
                            RawItem::Var(
                                parse_word_token(alphabet, word, lineno)?,
                                target.to_string(),
                            ),
                        )
                    }
                    [x, "var2", side, word, target] => {
                        let left = match *side {
                            "left" => true,
                            "right" => false,
                            other => {
                                return err(
                                    lineno,
                                    format!("expected 'left' or 'right', found {other:?}"),
                                )
                            }
                        };
                        first_var2.get_or_insert(lineno);
                        (
                            *x,
                            RawItem::Var2(
                                left,
                                parse_word_token(alphabet, word, lineno)?,
                                target.to_string(),
                            ),
                        )
                    }
                    [x, "param", word, target] => (
                        *x,
                        RawItem::Param(
                            parse_word_token(alphabet, word, lineno)?,
                            target.to_string(),
                        ),
                    ),
                    _ => {
                        return err(
                            lineno,
                            "expected 'eq: <x> out <w>', 'eq: <x> var <w> <x2>', \
                             'eq: <x> var2 <left|right> <w> <x2>', or 'eq: <x> param <w> <y>'",
                        )
                    }
                };
                if !vars.contains(var) {
                    return err(lineno, format!("unknown variable {var:?}"));
                }
                items.push((lineno, var.to_string(), item));
            }
            other => return err(lineno, format!("unknown key {other:?} in equation file")),
        }
    }

    let alphabet = match alphabet {
        Some(a) => a,
        None => return err(1, "missing 'alphabet:' header"),
    };
    let (vars_line, vars) = match vars {
        Some(v) => v,
        None => return err(1, "missing 'vars:' header"),
    };
    let params = params.unwrap_or_else(Names::empty);

    if let (Some(v), Some(v2)) = (first_var, first_var2) {
        return err(
            v.max(v2),
            "file mixes 'var' and 'var2' items: a system has either one \
             variable copy or two",
        );
    }

    let var_names: Vec<String> = vars.iter().map(str::to_string).collect();
    let param_names: Vec<String> = params.iter().map(str::to_string).collect();
    let lookup_param =
        |params: &Names, name: &str, lineno: usize| -> Result<crate::solver::ParamId, FileError> {
            match params.index_of(name) {
                Some(i) => Ok(crate::solver::ParamId(i)),
                None => err(lineno, format!("unknown parameter {name:?}")),
            }
        };

    if first_var2.is_some() {
        let mut e2 = Eq2Morphism::new(alphabet, var_names, param_names)
            .map_err(|e| FileError {
                line: vars_line,
                message: e.to_string(),
            })?;
        for (lineno, var, item) in items {
            let x = e2.var_id(&var).expect("variable checked during parse");
            match item {
                RawItem::Out(w) => e2.add(x, Eq2Item::Output(w)),
                RawItem::Var2(left, w, target) => {
                    let t = match e2.var_id(&target) {
                        Some(t) => t,
                        None => return err(lineno, format!("unknown variable {target:?}")),
                    };
                    e2.add(
                        x,
                        if left {
                            Eq2Item::ToVarLeft(w, t)
                        } else {
                            Eq2Item::ToVarRight(w, t)
                        },
                    );
                }
                RawItem::Param(w, target) => {
                    let y = lookup_param(e2.params(), &target, lineno)?;
                    e2.add(x, Eq2Item::ToParam(w, y));
                }
                RawItem::Var(_, _) => unreachable!("mixing checked above"),
            }
        }
        Ok(EquationFileValue::Double(e2))
    } else {
        let mut e = EquationMorphism::new(alphabet, var_names, param_names)
            .map_err(|e| FileError {
                line: vars_line,
                message: e.to_string(),
            })?;
        for (lineno, var, item) in items {
            let x = e.var_id(&var).expect("variable checked during parse");
            match item {
                RawItem::Out(w) => e.add_output(x, w),
                RawItem::Var(w, target) => {
                    let t = match e.var_id(&target) {
                        Some(t) => t,
                        None => return err(lineno, format!("unknown variable {target:?}")),
                    };
                    e.add_to_var(x, w, t);
                }
                RawItem::Param(w, target) => {
                    let y = lookup_param(e.params(), &target, lineno)?;
                    e.add_to_param(x, w, y);
                }
                RawItem::Var2(_, _, _) => unreachable!("mixing checked above"),
            }
        }
        Ok(EquationFileValue::Single(e))
    }
}

fn push_equation_header(out: &mut String, alphabet: &Alphabet, vars: &Names, params: &Names) {
    out.push_str("alphabet:");
    for (_, c) in alphabet.symbols() {
        out.push(' ');
        out.push(c);
    }
    out.push('\n');
    out.push_str("vars:");
    for v in vars.iter() {
        out.push(' ');
        out.push_str(v);
    }
    out.push('\n');
    out.push_str("params:");
    for p in params.iter() {
        out.push(' ');
        out.push_str(p);
    }
    out.push('\n');
}

pub fn print_equation(e: &EquationMorphism) -> String {
    let mut out = String::new();
    push_equation_header(&mut out, e.alphabet(), e.vars(), e.params());
    for i in 0..e.vars().len() {
        let x = e.vars().name(i);
        for item in e.items(VarId(i)) {
            match item {
                EqItem::Output(w) => {
                    out.push_str(&format!("eq: {x} out {}\n", word_token(e.alphabet(), w)));
                }
                EqItem::ToVar(w, VarId(t)) => {
                    out.push_str(&format!(
                        "eq: {x} var {} {}\n",
                        word_token(e.alphabet(), w),
                        e.vars().name(*t)
                    ));
                }
                EqItem::ToParam(w, p) => {
                    out.push_str(&format!(
                        "eq: {x} param {} {}\n",
                        word_token(e.alphabet(), w),
                        e.params().name(p.0)
                    ));
                }
            }
        }
    }
    out
}

pub fn print_eq2(e2: &Eq2Morphism) -> String {
    let mut out = String::new();
    push_equation_header(&mut out, e2.alphabet(), e2.vars(), e2.params());
    for i in 0..e2.vars().len() {
        let x = e2.vars().name(i);
        for item in e2.items(VarId(i)) {
            match item {
                Eq2Item::Output(w) => {
                    out.push_str(&format!("eq: {x} out {}\n", word_token(e2.alphabet(), w)));
                }
                Eq2Item::ToVarLeft(w, VarId(t)) => {
                    out.push_str(&format!(
                        "eq: {x} var2 left {} {}\n",
                        word_token(e2.alphabet(), w),
                        e2.vars().name(*t)
                    ));
                }
                Eq2Item::ToVarRight(w, VarId(t)) => {
                    out.push_str(&format!(
                        "eq: {x} var2 right {} {}\n",
                        word_token(e2.alphabet(), w),
                        e2.vars().name(*t)
                    ));
                }
                Eq2Item::ToParam(w, p) => {
                    out.push_str(&format!(
                        "eq: {x} param {} {}\n",
                        word_token(e2.alphabet(), w),
                        e2.params().name(p.0)
                    ));
                }
            }
        }
    }
    out
}

/// Parses an independence file: one `<symbol> <symbol>` pair per line,
/// validated against `alphabet`. An empty file is the empty relation.
pub fn parse_independence(text: &str, alphabet: &Alphabet) -> Result<Independence, FileError> {
    let mut pairs = Vec::new();
    for (lineno, line) in content_lines(text) {
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.as_slice() {
            [a, b] => {
                let a = parse_symbol_token(alphabet, a, lineno)?;
                let b = parse_symbol_token(alphabet, b, lineno)?;
                // Surface the reflexivity error with this line's number.
                Independence::new(alphabet.clone(), [(a, b)])
                    .map_err(|e| FileError {
                        line: lineno,
                        message: e.to_string(),
                    })?;
                pairs.push((a, b));
            }
            _ => return err(lineno, "expected two symbols per line"),
        }
    }
    Independence::new(alphabet.clone(), pairs).map_err(|e| FileError {
        line: 1,
        message: e.to_string(),
    })
}

pub fn print_independence(ind: &Independence) -> String {
    let mut out = String::new();
    for (a, b) in ind.pairs() {
        out.push_str(&format!("{a} {b}\n"));
    }
    out
}
