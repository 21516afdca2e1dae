//! Independence relations, trace normal forms, and quotient semantics.
//!
//! An [`Independence`] is a symmetric irreflexive relation on symbols.
//! Two words are trace-equivalent when one can be rewritten into the other
//! by repeatedly swapping adjacent independent letters. Each equivalence
//! class contains a unique lexicographically least member, computed by
//! [`normal_form`] with a greedy scan: a letter may be emitted when every
//! letter before its first occurrence is independent of it, and among the
//! emittable letters the alphabet-least one wins.
//!
//! Quotient semantics maps a state's bounded language through the normal
//! form, representing each trace by its least member. This commutes with
//! solving: normal-forming an automaton's labels first and its solution
//! afterwards gives the same [`TraceSet`]s, which the law checkers fuzz.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::automata::WordAutomaton;
use crate::solver::semantics_word;
use crate::words::{Alphabet, BoundedLanguage, SymId, Word};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IndependenceError {
    #[error("reflexive independence pair on {0:?}")]
    ReflexivePair(char),
    #[error("unknown symbol {0:?} in independence relation")]
    UnknownSymbol(char),
}

/// Symmetric irreflexive relation on an alphabet's symbols, stored as
/// unordered pairs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Independence {
    alphabet: Alphabet,
    pairs: BTreeSet<(SymId, SymId)>,
}

impl Independence {
    pub fn new(
        alphabet: Alphabet,
        pairs: impl IntoIterator<Item = (char, char)>,
    ) -> Result<Self, IndependenceError> {
        let mut set = BTreeSet::new();
        for (a, b) in pairs {
            if a == b {
                return Err(IndependenceError::ReflexivePair(a));
            }
            let ai = alphabet
                .sym_id(a)
                .map_err(|_| IndependenceError::UnknownSymbol(a))?;
            let bi = alphabet
                .sym_id(b)
                .map_err(|_| IndependenceError::UnknownSymbol(b))?;
            set.insert((ai.min(bi), ai.max(bi)));
        }
        Ok(Independence {
            alphabet,
            pairs: set,
        })
    }

    pub fn empty(alphabet: Alphabet) -> Self {
        Independence {
            alphabet,
            pairs: BTreeSet::new(),
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn independent(&self, a: SymId, b: SymId) -> bool {
        a != b && self.pairs.contains(&(a.min(b), a.max(b)))
    }

    /// The unordered pairs as characters, each listed once.
    pub fn pairs(&self) -> impl Iterator<Item = (char, char)> + '_ {
        self.pairs
            .iter()
            .map(|&(a, b)| (self.alphabet.char_of(a), self.alphabet.char_of(b)))
    }

    /// Re-checks irreflexivity and symbol validity.
    pub fn validate(&self) -> Result<(), IndependenceError> {
        for &(a, b) in &self.pairs {
            if a == b {
                return Err(IndependenceError::ReflexivePair(self.alphabet.char_of(a)));
            }
            if !self.alphabet.contains_id(a) || !self.alphabet.contains_id(b) {
                return Err(IndependenceError::UnknownSymbol('?'));
            }
        }
        Ok(())
    }
}

/// The lexicographically least word obtainable from `w` by swapping
/// adjacent independent letters.
///
/// Greedy: a letter is movable to the front when everything before its
/// first occurrence is independent of it; emit the alphabet-least movable
/// letter, delete that occurrence, repeat.
pub fn normal_form(w: &Word, ind: &Independence) -> Word {
    let mut remaining: Vec<SymId> = w.letters().to_vec();
    let mut out = Vec::with_capacity(remaining.len());
    while !remaining.is_empty() {
        let mut best: Option<(SymId, usize)> = None;
        let mut seen: BTreeSet<SymId> = BTreeSet::new();
        for (k, &c) in remaining.iter().enumerate() {
            if !seen.insert(c) {
                continue; // only the first occurrence of a letter can move
            }
            if remaining[..k].iter().all(|&p| ind.independent(p, c)) {
                match best {
                    Some((b, _)) if b <= c => {}
                    _ => best = Some((c, k)),
                }
            }
        }
        let (_, k) = best.expect("the first letter is always movable");
        out.push(remaining.remove(k));
    }
    Word::from_letters(out)
}

/// Trace equivalence: equality of normal forms.
pub fn trace_equiv(w: &Word, v: &Word, ind: &Independence) -> bool {
    normal_form(w, ind) == normal_form(v, ind)
}

/// A bounded set of traces, each represented by its normal form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TraceSet {
    bound: usize,
    normal_forms: BTreeSet<Word>,
}

impl TraceSet {
    /// Quotients a bounded language: the image of its words under the
    /// normal form, deduplicated. Normal forms preserve length, so the
    /// bound carries over.
    pub fn from_language(lang: &BoundedLanguage, ind: &Independence) -> Self {
        TraceSet {
            bound: lang.bound(),
            normal_forms: lang.iter().map(|w| normal_form(w, ind)).collect(),
        }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn len(&self) -> usize {
        self.normal_forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.normal_forms.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.normal_forms.contains(w)
    }

    /// Shortlex-ordered iteration over the representatives.
    pub fn iter(&self) -> impl Iterator<Item = &Word> {
        self.normal_forms.iter()
    }

    pub fn words(&self) -> &BTreeSet<Word> {
        &self.normal_forms
    }

    /// Checks that every member is its own normal form and within bound.
    pub fn validate(&self, ind: &Independence) -> Result<(), String> {
        for w in &self.normal_forms {
            if w.len() > self.bound {
                return Err("trace representative exceeds bound".to_string());
            }
            if &normal_form(w, ind) != w {
                return Err("trace representative is not a normal form".to_string());
            }
        }
        Ok(())
    }
}

/// Per-state trace semantics: the bounded language of each state, mapped
/// through the normal form. The independence relation must be over the
/// automaton's alphabet.
pub fn quotient_semantics(aut: &WordAutomaton, n: usize, ind: &Independence) -> Vec<TraceSet> {
    assert_eq!(
        aut.alphabet(),
        ind.alphabet(),
        "independence relation is over a different alphabet"
    );
    semantics_word(aut, n)
        .iter()
        .map(|lang| TraceSet::from_language(lang, ind))
        .collect()
}

/// The same automaton with every transition label and output word
/// replaced by its normal form. Lengths are preserved, so bounded
/// semantics interacts with this exactly as the quotient laws state.
pub fn normal_form_automaton(aut: &WordAutomaton, ind: &Independence) -> WordAutomaton {
    assert_eq!(
        aut.alphabet(),
        ind.alphabet(),
        "independence relation is over a different alphabet"
    );
    let wtransitions = aut
        .wtransitions()
        .iter()
        .map(|(p, w, q)| (*p, normal_form(w, ind), *q))
        .collect();
    let outputs = (0..aut.states().len())
        .map(|i| {
            aut.outputs(crate::automata::StateId(i))
                .iter()
                .map(|w| normal_form(w, ind))
                .collect()
        })
        .collect();
    WordAutomaton::from_raw(
        aut.alphabet().clone(),
        aut.states().clone(),
        wtransitions,
        outputs,
    )
}
