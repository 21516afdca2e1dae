//! Alphabets, words, and bounded languages.
//!
//! An [`Alphabet`] is a nonempty ordered set of single-character symbols.
//! The declaration order is semantically meaningful: it is the order used
//! for the lexicographic tiebreak in [shortlex](Word::cmp) comparisons and
//! for picking least symbols elsewhere in the crate.
//!
//! Words store symbol indices rather than characters, so `Ord` on [`Word`]
//! can be the shortlex order directly and every `BTreeSet<Word>` iterates
//! in shortlex order for free. A [`BoundedLanguage`] is such a set together
//! with the length bound it was computed at; all exact computations in this
//! crate are relative to an explicit bound.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use thiserror::Error;

/// Index of a symbol in its [`Alphabet`]'s declaration order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SymId(pub u8);

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlphabetError {
    #[error("alphabet must not be empty")]
    Empty,
    #[error("duplicate symbol {0:?}")]
    DuplicateSymbol(char),
    #[error("invalid symbol {0:?}: symbols are ASCII letters or digits")]
    InvalidSymbol(char),
    #[error("alphabet too large: at most {} symbols", Alphabet::MAX_SYMBOLS)]
    TooLarge,
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("unknown symbol {0:?}")]
pub struct UnknownSymbol(pub char);

/// Nonempty ordered set of single-character symbols.
///
/// Symbols are printable ASCII letters or digits, so the surface token
/// `eps` (the empty word) can never collide with a symbol.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Alphabet {
    symbols: Vec<char>,
}

impl Alphabet {
    pub const MAX_SYMBOLS: usize = 64;

    pub fn new(symbols: impl IntoIterator<Item = char>) -> Result<Self, AlphabetError> {
        let symbols: Vec<char> = symbols.into_iter().collect();
        if symbols.is_empty() {
            return Err(AlphabetError::Empty);
        }
        if symbols.len() > Self::MAX_SYMBOLS {
            return Err(AlphabetError::TooLarge);
        }
        for (i, &c) in symbols.iter().enumerate() {
            if !c.is_ascii_alphanumeric() {
                return Err(AlphabetError::InvalidSymbol(c));
            }
            if symbols[..i].contains(&c) {
                return Err(AlphabetError::DuplicateSymbol(c));
            }
        }
        Ok(Alphabet { symbols })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction guarantees nonemptiness
    }

    pub fn symbols(&self) -> impl Iterator<Item = (SymId, char)> + '_ {
        self.symbols
            .iter()
            .enumerate()
            .map(|(i, &c)| (SymId(i as u8), c))
    }

    pub fn sym_id(&self, c: char) -> Result<SymId, UnknownSymbol> {
        self.symbols
            .iter()
            .position(|&s| s == c)
            .map(|i| SymId(i as u8))
            .ok_or(UnknownSymbol(c))
    }

    /// The character for a symbol id. Ids come from this alphabet.
    pub fn char_of(&self, id: SymId) -> char {
        self.symbols[id.0 as usize]
    }

    pub fn contains_id(&self, id: SymId) -> bool {
        (id.0 as usize) < self.symbols.len()
    }

    /// Parses a word given as a string of symbol characters.
    /// The empty string is the empty word; surface tokens like `eps`
    /// are the concern of the file formats, not of this type.
    pub fn parse_word(&self, text: &str) -> Result<Word, UnknownSymbol> {
        let mut letters = Vec::with_capacity(text.chars().count());
        for c in text.chars() {
            letters.push(self.sym_id(c)?);
        }
        Ok(Word(letters))
    }

    pub fn format_word(&self, w: &Word) -> String {
        w.0.iter().map(|&id| self.char_of(id)).collect()
    }
}

/// A finite word over some alphabet, stored as symbol indices.
///
/// `Ord` is the shortlex order: shorter words first, equal lengths compared
/// lexicographically in alphabet order. Words only make sense relative to
/// the alphabet that produced their ids; all operations in this crate keep
/// words within a single alphabet.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word(Vec<SymId>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<SymId>) -> Self {
        Word(letters)
    }

    pub fn single(id: SymId) -> Self {
        Word(vec![id])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[SymId] {
        &self.0
    }

    /// Concatenation under a length bound: `None` when `|self| + |other| > bound`.
    pub fn concat_bounded(&self, other: &Word, bound: usize) -> Option<Word> {
        if self.len() + other.len() > bound {
            return None;
        }
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Some(Word(letters))
    }

    /// True when every letter is a valid id of `alphabet`.
    pub fn is_over(&self, alphabet: &Alphabet) -> bool {
        self.0.iter().all(|&id| alphabet.contains_id(id))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Shortlex comparison: length first, ties broken lexicographically in
/// alphabet order. Both words must come from the same alphabet.
pub fn shortlex_compare(w1: &Word, w2: &Word) -> Ordering {
    w1.cmp(w2)
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("word of length {len} exceeds bound {bound}")]
pub struct BoundExceeded {
    pub len: usize,
    pub bound: usize,
}

/// A finite set of words of length at most `bound`, iterated in shortlex order.
///
/// This is the exact finite surrogate used throughout the crate for the
/// (possibly infinite) languages automata denote: every semantic operation
/// computes a language restricted to words of length at most the bound.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoundedLanguage {
    bound: usize,
    words: BTreeSet<Word>,
}

impl BoundedLanguage {
    pub fn new(bound: usize) -> Self {
        BoundedLanguage {
            bound,
            words: BTreeSet::new(),
        }
    }

    pub fn from_words(
        bound: usize,
        words: impl IntoIterator<Item = Word>,
    ) -> Result<Self, BoundExceeded> {
        let mut lang = BoundedLanguage::new(bound);
        for w in words {
            lang.insert(w)?;
        }
        Ok(lang)
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn insert(&mut self, w: Word) -> Result<bool, BoundExceeded> {
        if w.len() > self.bound {
            return Err(BoundExceeded {
                len: w.len(),
                bound: self.bound,
            });
        }
        Ok(self.words.insert(w))
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.contains(w)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Shortlex-ordered iteration.
    pub fn iter(&self) -> impl Iterator<Item = &Word> {
        self.words.iter()
    }

    pub fn words(&self) -> &BTreeSet<Word> {
        &self.words
    }

    /// Restriction to a smaller bound.
    pub fn truncate(&self, bound: usize) -> BoundedLanguage {
        BoundedLanguage {
            bound,
            words: self.words.iter().filter(|w| w.len() <= bound).cloned().collect(),
        }
    }
}

/// All words over `alphabet` of length at most `bound`, in shortlex order.
pub fn all_words_up_to(alphabet: &Alphabet, bound: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..bound {
        let mut next = Vec::new();
        for w in &layer {
            for (id, _) in alphabet.symbols() {
                let mut letters = w.letters().to_vec();
                letters.push(id);
                next.push(Word::from_letters(letters));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}
