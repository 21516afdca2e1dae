//! Independent reference implementations ("oracles") used by the
//! integration suites. Each one recomputes a result the library also
//! computes, but by a deliberately different, brute-force route, so that
//! agreement is meaningful evidence rather than an identity.

// Each test target compiles its own copy of this module and uses a subset.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, VecDeque};

use tracefix::automata::{StateId, WordAutomaton};
use tracefix::mazurkiewicz::Independence;
use tracefix::regex::Regex;
use tracefix::words::{all_words_up_to, Alphabet, SymId, Word};

// ---------------------------------------------------------------------
// Regex matching by memoized recursive descent on spans.

/// Flattened regex node; children are arena indices.
enum Node {
    Empty,
    Epsilon,
    Literal(SymId),
    Union(usize, usize),
    Concat(usize, usize),
    Star(usize),
}

fn build(r: &Regex, arena: &mut Vec<Node>) -> usize {
    let node = match r {
        Regex::Empty => Node::Empty,
        Regex::Epsilon => Node::Epsilon,
        Regex::Literal(s) => Node::Literal(*s),
        Regex::Union(a, b) => {
            let a = build(a, arena);
            let b = build(b, arena);
            Node::Union(a, b)
        }
        Regex::Concat(a, b) => {
            let a = build(a, arena);
            let b = build(b, arena);
            Node::Concat(a, b)
        }
        Regex::Star(a) => {
            let a = build(a, arena);
            Node::Star(a)
        }
    };
    arena.push(node);
    arena.len() - 1
}

struct Matcher<'a> {
    arena: Vec<Node>,
    word: &'a [SymId],
    memo: HashMap<(usize, usize, usize), bool>,
}

impl Matcher<'_> {
    fn matches(&mut self, node: usize, start: usize, end: usize) -> bool {
        if let Some(&hit) = self.memo.get(&(node, start, end)) {
            return hit;
        }
        let result = match self.arena[node] {
            Node::Empty => false,
            Node::Epsilon => start == end,
            Node::Literal(s) => end == start + 1 && self.word[start] == s,
            Node::Union(a, b) => self.matches(a, start, end) || self.matches(b, start, end),
            Node::Concat(a, b) => {
                (start..=end).any(|mid| self.matches(a, start, mid) && self.matches(b, mid, end))
            }
            // A star matches the empty span, or a NON-empty first chunk
            // followed by the rest of the star. Requiring the first chunk
            // to be non-empty is what makes the recursion well-founded.
            Node::Star(a) => {
                start == end
                    || (start + 1..=end)
                        .any(|mid| self.matches(a, start, mid) && self.matches(node, mid, end))
            }
        };
        self.memo.insert((node, start, end), result);
        result
    }
}

/// Whether `w` is in the language of `r`, decided by span matching.
pub fn regex_matches(r: &Regex, w: &Word) -> bool {
    let mut arena = Vec::new();
    let root = build(r, &mut arena);
    let letters: Vec<SymId> = w.letters().to_vec();
    let mut m = Matcher {
        arena,
        word: &letters,
        memo: HashMap::new(),
    };
    m.matches(root, 0, letters.len())
}

/// The bounded language of `r`: every word of length at most `n` that
/// matches, found by testing each candidate separately.
pub fn regex_lang_oracle(r: &Regex, alphabet: &Alphabet, n: usize) -> BTreeSet<Word> {
    all_words_up_to(alphabet, n)
        .into_iter()
        .filter(|w| regex_matches(r, w))
        .collect()
}

// ---------------------------------------------------------------------
// Word-automaton semantics by path enumeration.

/// The bounded language of every state, by depth-first enumeration of
/// transition paths. Within a run of consecutive empty-word edges no
/// state is revisited (an empty-word cycle contributes nothing new);
/// the visited set resets after every letter edge, which strictly grows
/// the word and so bounds the search by `n`.
pub fn semantics_oracle(aut: &WordAutomaton, n: usize) -> Vec<BTreeSet<Word>> {
    (0..aut.states().len())
        .map(|i| {
            let mut acc = BTreeSet::new();
            let mut eps_run: BTreeSet<StateId> = [StateId(i)].into_iter().collect();
            paths(aut, StateId(i), &Word::empty(), &mut eps_run, n, &mut acc);
            acc
        })
        .collect()
}

fn paths(
    aut: &WordAutomaton,
    q: StateId,
    prefix: &Word,
    eps_run: &mut BTreeSet<StateId>,
    n: usize,
    acc: &mut BTreeSet<Word>,
) {
    for o in aut.outputs(q) {
        if let Some(w) = prefix.concat_bounded(o, n) {
            acc.insert(w);
        }
    }
    for (src, label, dst) in aut.wtransitions() {
        if *src != q {
            continue;
        }
        if label.is_empty() {
            if eps_run.insert(*dst) {
                paths(aut, *dst, prefix, eps_run, n, acc);
                eps_run.remove(dst);
            }
        } else if let Some(longer) = prefix.concat_bounded(label, n) {
            let mut fresh: BTreeSet<StateId> = [*dst].into_iter().collect();
            paths(aut, *dst, &longer, &mut fresh, n, acc);
        }
    }
}

// ---------------------------------------------------------------------
// Trace normal forms by swap closure.

/// Every word reachable from `w` by swapping adjacent independent
/// letters, found by breadth-first closure.
pub fn swap_closure(w: &Word, ind: &Independence) -> BTreeSet<Word> {
    let mut seen: BTreeSet<Word> = [w.clone()].into_iter().collect();
    let mut queue: VecDeque<Word> = [w.clone()].into_iter().collect();
    while let Some(current) = queue.pop_front() {
        let letters = current.letters();
        for i in 0..letters.len().saturating_sub(1) {
            if ind.independent(letters[i], letters[i + 1]) {
                let mut swapped = letters.to_vec();
                swapped.swap(i, i + 1);
                let next = Word::from_letters(swapped);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    seen
}

/// The least member of the swap closure: the representative the greedy
/// normal form must produce.
pub fn normal_form_oracle(w: &Word, ind: &Independence) -> Word {
    swap_closure(w, ind)
        .into_iter()
        .next()
        .expect("the closure contains the word itself")
}
