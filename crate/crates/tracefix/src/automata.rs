//! The four automaton kinds and the embeddings between them.
//!
//! All four share the same skeleton: an alphabet, an ordered list of state
//! names, a set of labeled transitions, and a way for states to produce
//! words directly. They differ only in the label type and in how direct
//! production is written down:
//!
//! - [`Nda`]: single-symbol labels, accepting states.
//! - [`EpsNda`]: an [`Nda`] plus unlabeled epsilon edges.
//! - [`WordAutomaton`]: word labels, and an output set of words per state.
//!   This is the common currency the solver works on.
//! - [`LangAutomaton`]: regex labels and regex outputs, standing for the
//!   (possibly infinite) family of word transitions the regexes denote.
//!
//! The embeddings are all language-preserving in the bounded sense checked
//! by the test suite: a classical automaton, run through its embedding and
//! the solver, produces exactly its accepted language restricted to the
//! bound.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::names::{NameError, Names};
use crate::regex::Regex;
use crate::words::{Alphabet, SymId, UnknownSymbol, Word};

/// Index of a state in its automaton's declaration order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct StateId(pub usize);

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AutomatonError {
    #[error(transparent)]
    BadStateName(#[from] NameError),
    #[error("unknown state {0:?}")]
    UnknownState(String),
    #[error("unknown symbol {0:?}")]
    UnknownSymbol(char),
    #[error("state index {0} out of range")]
    StateIndexOutOfRange(usize),
    #[error("label is not over the declared alphabet")]
    LabelNotOverAlphabet,
    #[error("outputs must cover every state exactly once")]
    MalformedOutputs,
}

impl From<UnknownSymbol> for AutomatonError {
    fn from(e: UnknownSymbol) -> Self {
        AutomatonError::UnknownSymbol(e.0)
    }
}

fn resolve(states: &Names, name: &str) -> Result<StateId, AutomatonError> {
    states
        .index_of(name)
        .map(StateId)
        .ok_or_else(|| AutomatonError::UnknownState(name.to_string()))
}

/// Nondeterministic automaton with single-symbol transition labels.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Nda {
    alphabet: Alphabet,
    states: Names,
    transitions: BTreeSet<(StateId, SymId, StateId)>,
    accepting: BTreeSet<StateId>,
}

impl Nda {
    /// Builds and validates. Duplicate transitions collapse silently;
    /// duplicate state names are an error.
    pub fn new(
        alphabet: Alphabet,
        state_names: Vec<String>,
        transitions: Vec<(String, char, String)>,
        accepting: Vec<String>,
    ) -> Result<Self, AutomatonError> {
        let states = Names::new(state_names)?;
        let mut trans = BTreeSet::new();
        for (src, sym, dst) in &transitions {
            trans.insert((
                resolve(&states, src)?,
                alphabet.sym_id(*sym)?,
                resolve(&states, dst)?,
            ));
        }
        let mut acc = BTreeSet::new();
        for name in &accepting {
            acc.insert(resolve(&states, name)?);
        }
        Ok(Nda {
            alphabet,
            states,
            transitions: trans,
            accepting: acc,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn states(&self) -> &Names {
        &self.states
    }

    pub fn state_id(&self, name: &str) -> Option<StateId> {
        self.states.index_of(name).map(StateId)
    }

    pub fn transitions(&self) -> &BTreeSet<(StateId, SymId, StateId)> {
        &self.transitions
    }

    pub fn accepting(&self) -> &BTreeSet<StateId> {
        &self.accepting
    }

    pub fn is_accepting(&self, q: StateId) -> bool {
        self.accepting.contains(&q)
    }

    /// Reinterprets as an [`EpsNda`] with no epsilon edges.
    pub fn into_eps(self) -> EpsNda {
        EpsNda {
            nda: self,
            eps_edges: BTreeSet::new(),
        }
    }

    /// Re-checks the structural invariants (index ranges).
    pub fn validate(&self) -> Result<(), AutomatonError> {
        let n = self.states.len();
        for &(StateId(p), sym, StateId(q)) in &self.transitions {
            if p >= n {
                return Err(AutomatonError::StateIndexOutOfRange(p));
            }
            if q >= n {
                return Err(AutomatonError::StateIndexOutOfRange(q));
            }
            if !self.alphabet.contains_id(sym) {
                return Err(AutomatonError::LabelNotOverAlphabet);
            }
        }
        for &StateId(q) in &self.accepting {
            if q >= n {
                return Err(AutomatonError::StateIndexOutOfRange(q));
            }
        }
        Ok(())
    }
}

/// An [`Nda`] extended with unlabeled epsilon edges. Self-loops are
/// permitted and semantically meaningful: they are the canonical source
/// of automata whose equation system has more than one solution.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EpsNda {
    nda: Nda,
    eps_edges: BTreeSet<(StateId, StateId)>,
}

impl EpsNda {
    pub fn new(
        alphabet: Alphabet,
        state_names: Vec<String>,
        transitions: Vec<(String, char, String)>,
        eps_edges: Vec<(String, String)>,
        accepting: Vec<String>,
    ) -> Result<Self, AutomatonError> {
        let nda = Nda::new(alphabet, state_names, transitions, accepting)?;
        let mut eps = BTreeSet::new();
        for (src, dst) in &eps_edges {
            eps.insert((resolve(&nda.states, src)?, resolve(&nda.states, dst)?));
        }
        Ok(EpsNda {
            nda,
            eps_edges: eps,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.nda.alphabet()
    }

    pub fn states(&self) -> &Names {
        self.nda.states()
    }

    pub fn state_id(&self, name: &str) -> Option<StateId> {
        self.nda.state_id(name)
    }

    pub fn transitions(&self) -> &BTreeSet<(StateId, SymId, StateId)> {
        self.nda.transitions()
    }

    pub fn eps_edges(&self) -> &BTreeSet<(StateId, StateId)> {
        &self.eps_edges
    }

    pub fn accepting(&self) -> &BTreeSet<StateId> {
        self.nda.accepting()
    }

    pub fn is_accepting(&self, q: StateId) -> bool {
        self.nda.is_accepting(q)
    }

    /// Drops the epsilon edges, keeping states, symbol transitions, and
    /// accepting set unchanged.
    pub fn drop_eps_edges(&self) -> Nda {
        self.nda.clone()
    }

    pub fn validate(&self) -> Result<(), AutomatonError> {
        self.nda.validate()?;
        let n = self.states().len();
        for &(StateId(p), StateId(q)) in &self.eps_edges {
            if p >= n {
                return Err(AutomatonError::StateIndexOutOfRange(p));
            }
            if q >= n {
                return Err(AutomatonError::StateIndexOutOfRange(q));
            }
        }
        Ok(())
    }
}

/// Automaton whose transitions are labeled with words (possibly empty)
/// and whose states each carry a finite set of output words.
///
/// Acceptance generalizes to outputs: a classical accepting state becomes
/// the output set `{eps}`, meaning the state can finish having produced
/// nothing further.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WordAutomaton {
    alphabet: Alphabet,
    states: Names,
    wtransitions: BTreeSet<(StateId, Word, StateId)>,
    outputs: Vec<BTreeSet<Word>>,
}

impl WordAutomaton {
    /// Builds from textual labels; the empty string denotes the empty word.
    pub fn new(
        alphabet: Alphabet,
        state_names: Vec<String>,
        wtransitions: Vec<(String, String, String)>,
        outputs: Vec<(String, String)>,
    ) -> Result<Self, AutomatonError> {
        let states = Names::new(state_names)?;
        let mut trans = BTreeSet::new();
        for (src, label, dst) in &wtransitions {
            trans.insert((
                resolve(&states, src)?,
                alphabet.parse_word(label)?,
                resolve(&states, dst)?,
            ));
        }
        let mut outs = vec![BTreeSet::new(); states.len()];
        for (state, word) in &outputs {
            let StateId(i) = resolve(&states, state)?;
            outs[i].insert(alphabet.parse_word(word)?);
        }
        Ok(WordAutomaton {
            alphabet,
            states,
            wtransitions: trans,
            outputs: outs,
        })
    }

    pub(crate) fn from_raw(
        alphabet: Alphabet,
        states: Names,
        wtransitions: BTreeSet<(StateId, Word, StateId)>,
        outputs: Vec<BTreeSet<Word>>,
    ) -> Self {
        let aut = WordAutomaton {
            alphabet,
            states,
            wtransitions,
            outputs,
        };
        debug_assert!(aut.validate().is_ok());
        aut
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn states(&self) -> &Names {
        &self.states
    }

    pub fn state_id(&self, name: &str) -> Option<StateId> {
        self.states.index_of(name).map(StateId)
    }

    pub fn wtransitions(&self) -> &BTreeSet<(StateId, Word, StateId)> {
        &self.wtransitions
    }

    /// The output words of a state. Total: every state has a (possibly
    /// empty) set.
    pub fn outputs(&self, q: StateId) -> &BTreeSet<Word> {
        &self.outputs[q.0]
    }

    pub fn validate(&self) -> Result<(), AutomatonError> {
        let n = self.states.len();
        if self.outputs.len() != n {
            return Err(AutomatonError::MalformedOutputs);
        }
        for &(StateId(p), ref w, StateId(q)) in &self.wtransitions {
            if p >= n {
                return Err(AutomatonError::StateIndexOutOfRange(p));
            }
            if q >= n {
                return Err(AutomatonError::StateIndexOutOfRange(q));
            }
            if !w.is_over(&self.alphabet) {
                return Err(AutomatonError::LabelNotOverAlphabet);
            }
        }
        for set in &self.outputs {
            for w in set {
                if !w.is_over(&self.alphabet) {
                    return Err(AutomatonError::LabelNotOverAlphabet);
                }
            }
        }
        Ok(())
    }
}

/// Automaton whose transitions and outputs are regexes, each standing for
/// the family of word transitions (or output words) the regex denotes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LangAutomaton {
    alphabet: Alphabet,
    states: Names,
    ltransitions: Vec<(StateId, Regex, StateId)>,
    loutputs: Vec<Vec<Regex>>,
}

impl LangAutomaton {
    pub fn new(
        alphabet: Alphabet,
        state_names: Vec<String>,
        ltransitions: Vec<(String, Regex, String)>,
        loutputs: Vec<(String, Regex)>,
    ) -> Result<Self, AutomatonError> {
        let states = Names::new(state_names)?;
        let mut trans = Vec::new();
        for (src, r, dst) in ltransitions {
            if !r.is_over(&alphabet) {
                return Err(AutomatonError::LabelNotOverAlphabet);
            }
            trans.push((resolve(&states, &src)?, r, resolve(&states, &dst)?));
        }
        let mut outs = vec![Vec::new(); states.len()];
        for (state, r) in loutputs {
            if !r.is_over(&alphabet) {
                return Err(AutomatonError::LabelNotOverAlphabet);
            }
            let StateId(i) = resolve(&states, &state)?;
            outs[i].push(r);
        }
        Ok(LangAutomaton {
            alphabet,
            states,
            ltransitions: trans,
            loutputs: outs,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn states(&self) -> &Names {
        &self.states
    }

    pub fn state_id(&self, name: &str) -> Option<StateId> {
        self.states.index_of(name).map(StateId)
    }

    pub fn ltransitions(&self) -> &[(StateId, Regex, StateId)] {
        &self.ltransitions
    }

    pub fn loutputs(&self, q: StateId) -> &[Regex] {
        &self.loutputs[q.0]
    }

    pub fn validate(&self) -> Result<(), AutomatonError> {
        let n = self.states.len();
        if self.loutputs.len() != n {
            return Err(AutomatonError::MalformedOutputs);
        }
        for (StateId(p), r, StateId(q)) in &self.ltransitions {
            if *p >= n {
                return Err(AutomatonError::StateIndexOutOfRange(*p));
            }
            if *q >= n {
                return Err(AutomatonError::StateIndexOutOfRange(*q));
            }
            if !r.is_over(&self.alphabet) {
                return Err(AutomatonError::LabelNotOverAlphabet);
            }
        }
        Ok(())
    }
}

/// Embeds a classical automaton as a word automaton: each transition label
/// becomes the one-letter word, and acceptance becomes the output `{eps}`.
pub fn embed_nda(n: &Nda) -> WordAutomaton {
    let wtransitions = n
        .transitions
        .iter()
        .map(|&(p, sym, q)| (p, Word::single(sym), q))
        .collect();
    let outputs = (0..n.states.len())
        .map(|i| {
            if n.is_accepting(StateId(i)) {
                [Word::empty()].into_iter().collect()
            } else {
                BTreeSet::new()
            }
        })
        .collect();
    WordAutomaton::from_raw(n.alphabet.clone(), n.states.clone(), wtransitions, outputs)
}

/// Embeds an automaton with epsilon edges: epsilon edges become
/// transitions labeled with the empty word, everything else as in
/// [`embed_nda`].
pub fn embed_eps_nda(e: &EpsNda) -> WordAutomaton {
    let mut embedded = embed_nda(&e.nda);
    for &(p, q) in &e.eps_edges {
        embedded.wtransitions.insert((p, Word::empty(), q));
    }
    embedded
}

/// Regex denoting exactly the one-word language `{w}`.
pub fn regex_of_word(w: &Word) -> Regex {
    let mut letters = w.letters().iter();
    match letters.next() {
        None => Regex::Epsilon,
        Some(&first) => {
            let mut acc = Regex::Literal(first);
            for &id in letters {
                acc = Regex::concat(acc, Regex::Literal(id));
            }
            acc
        }
    }
}

/// Views a word automaton as a language automaton whose labels denote
/// exactly the original single-word labels.
pub fn word_to_lang(w: &WordAutomaton) -> LangAutomaton {
    let ltransitions = w
        .wtransitions
        .iter()
        .map(|(p, word, q)| (*p, regex_of_word(word), *q))
        .collect();
    let loutputs = w
        .outputs
        .iter()
        .map(|set| set.iter().map(regex_of_word).collect())
        .collect();
    LangAutomaton {
        alphabet: w.alphabet.clone(),
        states: w.states.clone(),
        ltransitions,
        loutputs,
    }
}
