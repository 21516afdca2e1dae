//! Regular expressions over an [`Alphabet`] and their bounded enumeration.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! union   := concat ('+' concat)*
//! concat  := postfix postfix*
//! postfix := atom '*'*
//! atom    := '(' union ')' | 'eps' | '0' | symbol
//! ```
//!
//! `eps` is the empty word, `0` the empty language; whitespace separates
//! tokens and is otherwise ignored. `eps` is matched greedily, so an
//! alphabet containing all of `e`, `p`, `s` needs parentheses (`e(ps)`) to
//! concatenate those three literals. The digit `0` always means the empty
//! language, even when declared as a symbol.
//!
//! [`enum_regex`] computes the denoted language restricted to words of
//! length at most a bound, exactly: star is unfolded until the bounded set
//! stops growing, which terminates because the set lives in a finite space.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::words::{Alphabet, BoundedLanguage, SymId, Word};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Regex {
    /// `0`: the empty language.
    Empty,
    /// `eps`: the language containing exactly the empty word.
    Epsilon,
    Literal(SymId),
    Union(Box<Regex>, Box<Regex>),
    Concat(Box<Regex>, Box<Regex>),
    Star(Box<Regex>),
}

impl Regex {
    /// Number of nodes in the syntax tree.
    pub fn size(&self) -> usize {
        match self {
            Regex::Empty | Regex::Epsilon | Regex::Literal(_) => 1,
            Regex::Union(l, r) | Regex::Concat(l, r) => 1 + l.size() + r.size(),
            Regex::Star(inner) => 1 + inner.size(),
        }
    }

    pub fn union(l: Regex, r: Regex) -> Regex {
        Regex::Union(Box::new(l), Box::new(r))
    }

    pub fn concat(l: Regex, r: Regex) -> Regex {
        Regex::Concat(Box::new(l), Box::new(r))
    }

    pub fn star(inner: Regex) -> Regex {
        Regex::Star(Box::new(inner))
    }

    /// True when every literal is a valid id of `alphabet`.
    pub fn is_over(&self, alphabet: &Alphabet) -> bool {
        match self {
            Regex::Empty | Regex::Epsilon => true,
            Regex::Literal(id) => alphabet.contains_id(*id),
            Regex::Union(l, r) | Regex::Concat(l, r) => {
                l.is_over(alphabet) && r.is_over(alphabet)
            }
            Regex::Star(inner) => inner.is_over(alphabet),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("{kind} at position {position}")]
pub struct RegexParseError {
    pub kind: RegexParseErrorKind,
    /// Byte offset into the input where parsing stopped (0-based).
    pub position: usize,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RegexParseErrorKind {
    #[error("empty regex")]
    EmptyInput,
    #[error("unknown symbol {0:?}")]
    UnknownSymbol(char),
    #[error("expected an expression")]
    ExpectedExpression,
    #[error("unbalanced parentheses: expected ')'")]
    ExpectedClosingParen,
    #[error("unexpected trailing input {0:?}")]
    UnexpectedTrailing(char),
}

struct Parser<'a> {
    input: &'a [u8],
    pos: usize,
    alphabet: &'a Alphabet,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.input.get(self.pos).map(|&b| b as char)
    }

    fn err(&self, kind: RegexParseErrorKind) -> RegexParseError {
        RegexParseError {
            kind,
            position: self.pos,
        }
    }

    fn union(&mut self) -> Result<Regex, RegexParseError> {
        let mut acc = self.concat()?;
        while self.peek() == Some('+') {
            self.pos += 1;
            let rhs = self.concat()?;
            acc = Regex::union(acc, rhs);
        }
        Ok(acc)
    }

    fn concat(&mut self) -> Result<Regex, RegexParseError> {
        let mut acc = self.postfix()?;
        while let Some(c) = self.peek() {
            if c == '+' || c == ')' {
                break;
            }
            let rhs = self.postfix()?;
            acc = Regex::concat(acc, rhs);
        }
        Ok(acc)
    }

    fn postfix(&mut self) -> Result<Regex, RegexParseError> {
        let mut acc = self.atom()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            acc = Regex::star(acc);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Regex, RegexParseError> {
        let c = match self.peek() {
            Some(c) => c,
            None => return Err(self.err(RegexParseErrorKind::ExpectedExpression)),
        };
        match c {
            '(' => {
                self.pos += 1;
                let inner = self.union()?;
                if self.peek() != Some(')') {
                    return Err(self.err(RegexParseErrorKind::ExpectedClosingParen));
                }
                self.pos += 1;
                Ok(inner)
            }
            '*' | '+' | ')' => Err(self.err(RegexParseErrorKind::ExpectedExpression)),
            '0' => {
                self.pos += 1;
                Ok(Regex::Empty)
            }
            _ => {
                if self.input[self.pos..].starts_with(b"eps") {
                    self.pos += 3;
                    return Ok(Regex::Epsilon);
                }
                match self.alphabet.sym_id(c) {
                    Ok(id) => {
                        self.pos += 1;
                        Ok(Regex::Literal(id))
                    }
                    Err(_) => Err(self.err(RegexParseErrorKind::UnknownSymbol(c))),
                }
            }
        }
    }
}

/// Parses a regex in the grammar above. Positions in errors are 0-based
/// byte offsets into `text`.
pub fn parse_regex(text: &str, alphabet: &Alphabet) -> Result<Regex, RegexParseError> {
    let mut p = Parser {
        input: text.as_bytes(),
        pos: 0,
        alphabet,
    };
    if p.peek().is_none() {
        return Err(p.err(RegexParseErrorKind::EmptyInput));
    }
    let r = p.union()?;
    if let Some(c) = p.peek() {
        return Err(p.err(RegexParseErrorKind::UnexpectedTrailing(c)));
    }
    Ok(r)
}

/// Renders a regex so that `parse_regex(format_regex(r)) == r` structurally.
pub fn format_regex(alphabet: &Alphabet, r: &Regex) -> String {
    let mut out = String::new();
    fmt_prec(alphabet, r, 0, &mut out);
    out
}

// Precedence levels: union 0, concat 1, star 2, atoms 3. A node is
// parenthesized when its level is below the context's. Right operands of
// the binary nodes use a raised context so the printed form reparses to
// the same left-associated tree.
fn fmt_prec(alphabet: &Alphabet, r: &Regex, ctx: u8, out: &mut String) {
    let level = match r {
        Regex::Empty | Regex::Epsilon | Regex::Literal(_) => 3,
        Regex::Star(_) => 2,
        Regex::Concat(_, _) => 1,
        Regex::Union(_, _) => 0,
    };
    let parens = level < ctx;
    if parens {
        out.push('(');
    }
    match r {
        Regex::Empty => out.push('0'),
        Regex::Epsilon => out.push_str("eps"),
        Regex::Literal(id) => out.push(alphabet.char_of(*id)),
        Regex::Union(l, rr) => {
            fmt_prec(alphabet, l, 0, out);
            out.push('+');
            fmt_prec(alphabet, rr, 1, out);
        }
        Regex::Concat(l, rr) => {
            fmt_prec(alphabet, l, 1, out);
            fmt_prec(alphabet, rr, 2, out);
        }
        Regex::Star(inner) => {
            fmt_prec(alphabet, inner, 2, out);
            out.push('*');
        }
    }
    if parens {
        out.push(')');
    }
}

/// The language of `r` restricted to words of length at most `n`, exactly.
pub fn enum_regex(r: &Regex, n: usize) -> BoundedLanguage {
    let words = enum_set(r, n);
    BoundedLanguage::from_words(n, words).expect("enumeration respects the bound")
}

fn enum_set(r: &Regex, n: usize) -> BTreeSet<Word> {
    match r {
        Regex::Empty => BTreeSet::new(),
        Regex::Epsilon => [Word::empty()].into_iter().collect(),
        Regex::Literal(id) => {
            if n >= 1 {
                [Word::single(*id)].into_iter().collect()
            } else {
                BTreeSet::new()
            }
        }
        Regex::Union(l, rr) => {
            let mut s = enum_set(l, n);
            s.extend(enum_set(rr, n));
            s
        }
        Regex::Concat(l, rr) => {
            let ls = enum_set(l, n);
            let rs = enum_set(rr, n);
            let mut s = BTreeSet::new();
            for u in &ls {
                for v in &rs {
                    if let Some(w) = u.concat_bounded(v, n) {
                        s.insert(w);
                    }
                }
            }
            s
        }
        Regex::Star(inner) => {
            // Unfold until the bounded set is stable. Every word of L(inner*)
            // of length <= n is a concatenation of inner-words each of
            // length <= n, so this is exact.
            let base = enum_set(inner, n);
            let mut acc: BTreeSet<Word> = [Word::empty()].into_iter().collect();
            loop {
                let mut next = acc.clone();
                for u in &acc {
                    for v in &base {
                        if let Some(w) = u.concat_bounded(v, n) {
                            next.insert(w);
                        }
                    }
                }
                if next == acc {
                    return acc;
                }
                acc = next;
            }
        }
    }
}
