//! Randomized law checking over generated instances.
//!
//! Three laws tie the pipeline together:
//!
//! * **eps-sound** — eliminating epsilon edges preserves the bounded
//!   semantics of the embedded automaton.
//! * **double-dagger** — solving a two-copy system in two stages equals
//!   solving its one-copy merge directly.
//! * **quotient-fact** — trace semantics factors through normalising the
//!   automaton's labels: quotient after label normalisation equals the
//!   quotient of the original.
//!
//! Instances come from deterministic generators keyed by `(seed, trial)`,
//! so a failing trial can be re-run bit-for-bit from its seed. Each
//! failure records the instance in the text format of [`crate::format`],
//! ready to be fed back through the command-line tools.
//!
//! Every check also has deliberately broken variants ([`Mutation`]) that
//! skip one step of the construction under test. They exist to show the
//! checks have teeth: a mutated run over enough trials must produce
//! failures, otherwise the check could be vacuous.

use crate::automata::{embed_eps_nda, embed_nda, EpsNda, Nda, StateId, WordAutomaton};
use crate::epsilon::eliminate;
use crate::format::{print_eps_nda, print_eq2, print_word_automaton};
use crate::mazurkiewicz::{normal_form_automaton, quotient_semantics, Independence};
use crate::solver::{codiagonal, double_dagger, semantics_word, solve, Eq2Item, Eq2Morphism, VarId};
use crate::words::{Alphabet, BoundedLanguage, SymId, Word};

use std::collections::BTreeSet;

/// Size envelope and seed for instance generation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GenConfig {
    pub seed: u64,
    /// Maximum number of states or variables per instance (at least 1).
    pub max_states: usize,
    /// Maximum number of transitions or equation items per instance.
    pub max_edges: usize,
    /// Alphabet size, between 1 and 3 (symbols `a`, `b`, `c`).
    pub alphabet_size: usize,
    /// Maximum label and output word length.
    pub max_label_len: usize,
    /// Bound for the semantics both sides of a law are compared at.
    pub bound: usize,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            seed: 0,
            max_states: 5,
            max_edges: 8,
            alphabet_size: 2,
            max_label_len: 2,
            bound: 4,
        }
    }
}

impl GenConfig {
    /// Rejects envelopes that are degenerate or blow up the bounded sets.
    pub fn validate(&self) -> Result<(), String> {
        if self.max_states == 0 || self.max_states > 8 {
            return Err("max states must be between 1 and 8".to_string());
        }
        if self.max_edges > 64 {
            return Err("max edges must be at most 64".to_string());
        }
        if self.alphabet_size == 0 || self.alphabet_size > 3 {
            return Err("alphabet size must be between 1 and 3".to_string());
        }
        if self.max_label_len > 3 {
            return Err("max label length must be at most 3".to_string());
        }
        if self.bound > 6 {
            return Err("bound must be at most 6".to_string());
        }
        Ok(())
    }
}

/// The alphabet instances are generated over: a prefix of `a`, `b`, `c`.
pub fn gen_alphabet(size: usize) -> Alphabet {
    Alphabet::new(['a', 'b', 'c'][..size].iter().copied())
        .expect("fixed symbol prefix is a valid alphabet")
}

/// Sequential splitmix64 stream, independently keyed per `(seed, trial)`.
/// Not cryptographic; modulo bias on the tiny ranges drawn here is
/// irrelevant. The point is determinism: the same key replays the same
/// instance on any platform.
struct Rng {
    state: u64,
}

impl Rng {
    fn for_trial(seed: u64, trial: u64) -> Rng {
        let mut rng = Rng {
            state: seed ^ trial.wrapping_mul(0x9e37_79b9_7f4a_7c15),
        };
        rng.next_u64();
        rng
    }

    fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform draw from `0..n`; `n` must be positive.
    fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }

    /// True with probability `num / den`.
    fn chance(&mut self, num: u64, den: u64) -> bool {
        self.next_u64() % den < num
    }

    fn word(&mut self, alphabet_size: usize, max_len: usize) -> Word {
        let len = self.below(max_len + 1);
        Word::from_letters((0..len).map(|_| SymId(self.below(alphabet_size) as u8)).collect())
    }
}

fn state_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("q{i}")).collect()
}

/// Generates an automaton with epsilon edges, deterministically in
/// `(cfg.seed, trial)`. Roughly two in five edges are epsilon edges;
/// self-loops and duplicates are allowed (duplicates collapse).
pub fn gen_eps_nda(cfg: &GenConfig, trial: u64) -> EpsNda {
    let mut rng = Rng::for_trial(cfg.seed, trial);
    let alphabet = gen_alphabet(cfg.alphabet_size);
    let n = 1 + rng.below(cfg.max_states);
    let names = state_names(n);
    let mut trans = Vec::new();
    let mut eps = Vec::new();
    for _ in 0..rng.below(cfg.max_edges + 1) {
        if rng.chance(2, 5) {
            eps.push((names[rng.below(n)].clone(), names[rng.below(n)].clone()));
        } else {
            let sym = alphabet.char_of(SymId(rng.below(cfg.alphabet_size) as u8));
            trans.push((
                names[rng.below(n)].clone(),
                sym,
                names[rng.below(n)].clone(),
            ));
        }
    }
    let accepting: Vec<String> = names
        .iter()
        .filter(|_| rng.chance(1, 2))
        .cloned()
        .collect();
    EpsNda::new(alphabet, names.clone(), trans, eps, accepting)
        .expect("generator only draws valid states and symbols")
}

/// Generates a word automaton with labels and outputs of length up to
/// `cfg.max_label_len`, deterministically in `(cfg.seed, trial)`.
pub fn gen_word_automaton(cfg: &GenConfig, trial: u64) -> WordAutomaton {
    let mut rng = Rng::for_trial(cfg.seed, trial);
    let alphabet = gen_alphabet(cfg.alphabet_size);
    let n = 1 + rng.below(cfg.max_states);
    let names = state_names(n);
    let mut wtrans = Vec::new();
    for _ in 0..rng.below(cfg.max_edges + 1) {
        let w = rng.word(cfg.alphabet_size, cfg.max_label_len);
        wtrans.push((
            names[rng.below(n)].clone(),
            alphabet.format_word(&w),
            names[rng.below(n)].clone(),
        ));
    }
    let mut outs = Vec::new();
    for name in &names {
        if rng.chance(1, 2) {
            for _ in 0..1 + rng.below(2) {
                let w = rng.word(cfg.alphabet_size, cfg.max_label_len);
                outs.push((name.clone(), alphabet.format_word(&w)));
            }
        }
    }
    WordAutomaton::new(alphabet, names, wtrans, outs)
        .expect("generator only draws valid states and labels")
}

/// Generates a two-copy equation system (variables `x0..`, at most one
/// parameter `y0`), deterministically in `(cfg.seed, trial)`.
pub fn gen_eq2(cfg: &GenConfig, trial: u64) -> Eq2Morphism {
    let mut rng = Rng::for_trial(cfg.seed, trial);
    let alphabet = gen_alphabet(cfg.alphabet_size);
    let n = 1 + rng.below(cfg.max_states);
    let vars: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    let n_params = rng.below(2);
    let params: Vec<String> = (0..n_params).map(|i| format!("y{i}")).collect();
    let mut e2 = Eq2Morphism::new(alphabet, vars, params)
        .expect("generated names are valid and disjoint");
    for x in 0..n {
        for _ in 0..rng.below(4) {
            let w = rng.word(cfg.alphabet_size, cfg.max_label_len);
            let item = match rng.below(4) {
                0 => Eq2Item::Output(w),
                1 => Eq2Item::ToVarLeft(w, VarId(rng.below(n))),
                2 => Eq2Item::ToVarRight(w, VarId(rng.below(n))),
                _ if n_params > 0 => Eq2Item::ToParam(w, crate::solver::ParamId(0)),
                _ => Eq2Item::Output(w),
            };
            e2.add(VarId(x), item);
        }
    }
    e2
}

/// The laws this module can check.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Law {
    EpsSoundness,
    DoubleDagger,
    QuotientFactorisation,
}

impl Law {
    pub fn name(&self) -> &'static str {
        match self {
            Law::EpsSoundness => "eps-sound",
            Law::DoubleDagger => "double-dagger",
            Law::QuotientFactorisation => "quotient-fact",
        }
    }
}

/// A deliberate defect injected into one side of a law, used to verify
/// that the corresponding check fails when the construction is wrong.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Mutation {
    /// The faithful construction.
    #[default]
    None,
    /// Epsilon elimination uses only one-step epsilon reachability
    /// instead of the full closure (misses chains of length two or more).
    SkipEpsClosure,
    /// The merge of a two-copy system discards right-copy items.
    DropRightBranches,
    /// The factored side skips the final normal-form pass, comparing raw
    /// concatenations against trace representatives.
    SkipFinalNormalForm,
}

/// One failing trial: which trial, the instance (in the text file
/// format, re-runnable), and a human-readable mismatch description.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LawFailure {
    pub trial: u64,
    pub instance: String,
    pub detail: String,
}

/// Outcome of checking one law over a number of trials. Failures are in
/// trial order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LawReport {
    pub law: Law,
    pub trials: u64,
    pub failures: Vec<LawFailure>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// First state whose languages differ, with a witness word and which side
/// has it.
fn first_difference(
    lhs: &[BTreeSet<Word>],
    rhs: &[BTreeSet<Word>],
    alphabet: &Alphabet,
    state_name: impl Fn(usize) -> String,
) -> Option<String> {
    for (i, (l, r)) in lhs.iter().zip(rhs.iter()).enumerate() {
        if l != r {
            let (witness, side) = l
                .difference(r)
                .next()
                .map(|w| (w, "left side only"))
                .or_else(|| r.difference(l).next().map(|w| (w, "right side only")))
                .expect("sets differ, so one difference is non-empty");
            let shown = if witness.is_empty() {
                "eps".to_string()
            } else {
                alphabet.format_word(witness)
            };
            return Some(format!(
                "{}: word {:?} on the {}",
                state_name(i),
                shown,
                side
            ));
        }
    }
    None
}

fn language_sets(langs: &[BoundedLanguage]) -> Vec<BTreeSet<Word>> {
    langs
        .iter()
        .map(|l| l.iter().cloned().collect())
        .collect()
}

/// Epsilon elimination with the closure step cut short: only direct
/// epsilon successors are folded in. Wrong on purpose; see
/// [`Mutation::SkipEpsClosure`].
fn eliminate_shallow(e: &EpsNda) -> Nda {
    let names: Vec<String> = e.states().iter().map(str::to_string).collect();
    let mut trans = Vec::new();
    let mut accepting = Vec::new();
    for x in 0..names.len() {
        let mut reach: BTreeSet<StateId> = BTreeSet::new();
        reach.insert(StateId(x));
        for &(p, q) in e.eps_edges() {
            if p == StateId(x) {
                reach.insert(q);
            }
        }
        if reach.iter().any(|&q| e.is_accepting(q)) {
            accepting.push(names[x].clone());
        }
        for &(p, sym, q) in e.transitions() {
            if reach.contains(&p) {
                trans.push((
                    names[x].clone(),
                    e.alphabet().char_of(sym),
                    names[q.0].clone(),
                ));
            }
        }
    }
    Nda::new(e.alphabet().clone(), names, trans, accepting)
        .expect("shallow elimination only rearranges validated parts")
}

fn eps_instance_failure(e: &EpsNda, bound: usize, mutation: Mutation) -> Option<String> {
    let lhs = language_sets(&semantics_word(&embed_eps_nda(e), bound));
    let eliminated = match mutation {
        Mutation::None => eliminate(e),
        Mutation::SkipEpsClosure => eliminate_shallow(e),
        other => panic!("mutation {other:?} does not apply to eps-sound"),
    };
    let rhs = language_sets(&semantics_word(&embed_nda(&eliminated), bound));
    first_difference(&lhs, &rhs, e.alphabet(), |i| {
        format!("state {}", e.states().name(i))
    })
}

/// Checks that epsilon elimination preserves bounded semantics on
/// `trials` generated instances.
pub fn check_eps_soundness(cfg: &GenConfig, trials: u64, mutation: Mutation) -> LawReport {
    let mut failures = Vec::new();
    for trial in 0..trials {
        let e = gen_eps_nda(cfg, trial);
        if let Some(detail) = eps_instance_failure(&e, cfg.bound, mutation) {
            failures.push(LawFailure {
                trial,
                instance: print_eps_nda(&e),
                detail,
            });
        }
    }
    LawReport {
        law: Law::EpsSoundness,
        trials,
        failures,
    }
}

/// The merge of a two-copy system with right-copy items discarded.
/// Wrong on purpose; see [`Mutation::DropRightBranches`].
fn codiagonal_dropping_right(e2: &Eq2Morphism) -> crate::solver::EquationMorphism {
    let mut e = crate::solver::EquationMorphism::new(
        e2.alphabet().clone(),
        e2.vars().iter().map(str::to_string).collect(),
        e2.params().iter().map(str::to_string).collect(),
    )
    .expect("names were valid in the two-copy system");
    for x in 0..e2.vars().len() {
        for item in e2.items(VarId(x)) {
            match item {
                Eq2Item::Output(w) => e.add_output(VarId(x), w.clone()),
                Eq2Item::ToVarLeft(w, t) => e.add_to_var(VarId(x), w.clone(), *t),
                Eq2Item::ToVarRight(_, _) => {}
                Eq2Item::ToParam(w, p) => e.add_to_param(VarId(x), w.clone(), *p),
            }
        }
    }
    e
}

fn dd_instance_failure(e2: &Eq2Morphism, bound: usize, mutation: Mutation) -> Option<String> {
    let staged = double_dagger(e2, bound);
    let merged = match mutation {
        Mutation::None => codiagonal(e2),
        Mutation::DropRightBranches => codiagonal_dropping_right(e2),
        other => panic!("mutation {other:?} does not apply to double-dagger"),
    };
    let direct = solve(&merged, bound);
    if staged == direct {
        return None;
    }
    // Infallible given equal shapes; find the first variable that differs.
    for x in 0..e2.vars().len() {
        if staged.items(VarId(x)) != direct.items(VarId(x)) {
            return Some(format!(
                "variable {}: staged and direct solutions differ \
                 ({} vs {} items)",
                e2.vars().name(x),
                staged.items(VarId(x)).len(),
                direct.items(VarId(x)).len()
            ));
        }
    }
    Some("solutions differ in shape".to_string())
}

/// Checks the two-stage solution of two-copy systems against the direct
/// solution of their merge on `trials` generated instances.
pub fn check_double_dagger(cfg: &GenConfig, trials: u64, mutation: Mutation) -> LawReport {
    let mut failures = Vec::new();
    for trial in 0..trials {
        let e2 = gen_eq2(cfg, trial);
        if let Some(detail) = dd_instance_failure(&e2, cfg.bound, mutation) {
            failures.push(LawFailure {
                trial,
                instance: print_eq2(&e2),
                detail,
            });
        }
    }
    LawReport {
        law: Law::DoubleDagger,
        trials,
        failures,
    }
}

fn qf_instance_failure(
    aut: &WordAutomaton,
    bound: usize,
    ind: &Independence,
    mutation: Mutation,
) -> Option<String> {
    let lhs: Vec<BTreeSet<Word>> = quotient_semantics(aut, bound, ind)
        .iter()
        .map(|t| t.words().clone())
        .collect();
    let nf_aut = normal_form_automaton(aut, ind);
    let rhs: Vec<BTreeSet<Word>> = match mutation {
        Mutation::None => quotient_semantics(&nf_aut, bound, ind)
            .iter()
            .map(|t| t.words().clone())
            .collect(),
        Mutation::SkipFinalNormalForm => language_sets(&semantics_word(&nf_aut, bound)),
        other => panic!("mutation {other:?} does not apply to quotient-fact"),
    };
    first_difference(&lhs, &rhs, aut.alphabet(), |i| {
        format!("state {}", aut.states().name(i))
    })
}

/// Checks that the trace quotient of the semantics equals the quotient
/// after normalising the automaton's labels, on `trials` generated
/// instances. The independence relation must be over the generator
/// alphabet of `cfg`.
pub fn check_quotient_factorisation(
    cfg: &GenConfig,
    trials: u64,
    ind: &Independence,
    mutation: Mutation,
) -> LawReport {
    assert_eq!(
        ind.alphabet(),
        &gen_alphabet(cfg.alphabet_size),
        "independence relation is over a different alphabet than the generator"
    );
    let mut failures = Vec::new();
    for trial in 0..trials {
        let aut = gen_word_automaton(cfg, trial);
        if let Some(detail) = qf_instance_failure(&aut, cfg.bound, ind, mutation) {
            failures.push(LawFailure {
                trial,
                instance: print_word_automaton(&aut),
                detail,
            });
        }
    }
    LawReport {
        law: Law::QuotientFactorisation,
        trials,
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::epsilon::eps_closure;
    use crate::format::{parse_automaton, parse_equation, AutomatonFileValue, EquationFileValue};

    #[test]
    fn config_validation_bounds_the_envelope() {
        assert!(GenConfig::default().validate().is_ok());
        let bad = GenConfig {
            alphabet_size: 4,
            ..GenConfig::default()
        };
        assert!(bad.validate().is_err());
        let bad = GenConfig {
            max_states: 0,
            ..GenConfig::default()
        };
        assert!(bad.validate().is_err());
        let bad = GenConfig {
            bound: 7,
            ..GenConfig::default()
        };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn generators_are_deterministic_per_seed_and_trial() {
        let cfg = GenConfig::default();
        for trial in [0, 1, 17] {
            assert_eq!(gen_eps_nda(&cfg, trial), gen_eps_nda(&cfg, trial));
            assert_eq!(
                gen_word_automaton(&cfg, trial),
                gen_word_automaton(&cfg, trial)
            );
            assert_eq!(gen_eq2(&cfg, trial), gen_eq2(&cfg, trial));
        }
        let other_seed = GenConfig {
            seed: 1,
            ..GenConfig::default()
        };
        let same_seed: Vec<_> = (0..20).map(|t| gen_eps_nda(&cfg, t)).collect();
        let differing = (0..20).filter(|&t| gen_eps_nda(&other_seed, t) != same_seed[t as usize]);
        assert!(differing.count() > 0, "seed has no effect on generation");
    }

    #[test]
    fn generated_instances_validate() {
        let cfg = GenConfig::default();
        for trial in 0..50 {
            gen_eps_nda(&cfg, trial).validate().unwrap();
            gen_word_automaton(&cfg, trial).validate().unwrap();
            gen_eq2(&cfg, trial).validate().unwrap();
        }
    }

    #[test]
    fn generation_covers_epsilon_cycles_and_long_chains() {
        let cfg = GenConfig::default();
        let mut cycles = 0;
        let mut chains = 0;
        for trial in 0..100 {
            let e = gen_eps_nda(&cfg, trial);
            let n = e.states().len();
            let has_cycle = e.eps_edges().iter().any(|&(p, q)| p == q)
                || (0..n).any(|i| {
                    (0..n).any(|j| {
                        i != j
                            && eps_closure(&e, StateId(i)).contains(&StateId(j))
                            && eps_closure(&e, StateId(j)).contains(&StateId(i))
                    })
                });
            if has_cycle {
                cycles += 1;
            }
            // A chain of length two or more: full closure strictly larger
            // than one-step reachability for some state.
            let has_chain = (0..n).any(|i| {
                let mut shallow: BTreeSet<StateId> = BTreeSet::new();
                shallow.insert(StateId(i));
                for &(p, q) in e.eps_edges() {
                    if p == StateId(i) {
                        shallow.insert(q);
                    }
                }
                eps_closure(&e, StateId(i)).len() > shallow.len()
            });
            if has_chain {
                chains += 1;
            }
        }
        assert!(cycles > 0, "no epsilon cycles in 100 trials");
        assert!(chains > 0, "no epsilon chains of length >= 2 in 100 trials");
    }

    #[test]
    fn eps_soundness_holds_on_five_hundred_trials() {
        let report = check_eps_soundness(&GenConfig::default(), 500, Mutation::None);
        assert!(
            report.passed(),
            "first failure: {:?}",
            report.failures.first()
        );
        assert_eq!(report.trials, 500);
    }

    #[test]
    fn double_dagger_holds_on_five_hundred_trials() {
        let report = check_double_dagger(&GenConfig::default(), 500, Mutation::None);
        assert!(
            report.passed(),
            "first failure: {:?}",
            report.failures.first()
        );
    }

    #[test]
    fn quotient_factorisation_holds_on_five_hundred_trials() {
        let cfg = GenConfig::default();
        let ind = Independence::new(gen_alphabet(cfg.alphabet_size), [('a', 'b')]).unwrap();
        let report = check_quotient_factorisation(&cfg, 500, &ind, Mutation::None);
        assert!(
            report.passed(),
            "first failure: {:?}",
            report.failures.first()
        );
    }

    #[test]
    fn zero_trials_pass_vacuously() {
        let report = check_eps_soundness(&GenConfig::default(), 0, Mutation::None);
        assert!(report.passed());
        assert_eq!(report.trials, 0);
    }

    #[test]
    fn skipping_the_closure_is_caught() {
        let report = check_eps_soundness(&GenConfig::default(), 500, Mutation::SkipEpsClosure);
        assert!(!report.passed(), "mutated elimination went undetected");
        let trials: Vec<u64> = report.failures.iter().map(|f| f.trial).collect();
        assert!(trials.windows(2).all(|w| w[0] < w[1]));
        // The recorded instance replays the failure.
        let first = &report.failures[0];
        match parse_automaton(&first.instance).unwrap() {
            AutomatonFileValue::EpsNda(e) => {
                assert!(eps_instance_failure(&e, 4, Mutation::SkipEpsClosure).is_some());
                assert!(eps_instance_failure(&e, 4, Mutation::None).is_none());
            }
            other => panic!("instance reparsed as {:?}", other.type_name()),
        }
    }

    #[test]
    fn dropping_right_branches_is_caught() {
        let report = check_double_dagger(&GenConfig::default(), 500, Mutation::DropRightBranches);
        assert!(!report.passed(), "mutated merge went undetected");
        let first = &report.failures[0];
        match parse_equation(&first.instance).unwrap() {
            EquationFileValue::Double(e2) => {
                assert!(dd_instance_failure(&e2, 4, Mutation::DropRightBranches).is_some());
                assert!(dd_instance_failure(&e2, 4, Mutation::None).is_none());
            }
            EquationFileValue::Single(_) => panic!("instance reparsed as a one-copy system"),
        }
    }

    #[test]
    fn skipping_the_final_normal_form_is_caught() {
        let cfg = GenConfig::default();
        let ind = Independence::new(gen_alphabet(cfg.alphabet_size), [('a', 'b')]).unwrap();
        let report =
            check_quotient_factorisation(&cfg, 500, &ind, Mutation::SkipFinalNormalForm);
        assert!(!report.passed(), "mutated quotient went undetected");
        let first = &report.failures[0];
        match parse_automaton(&first.instance).unwrap() {
            AutomatonFileValue::Word(aut) => {
                assert!(
                    qf_instance_failure(&aut, 4, &ind, Mutation::SkipFinalNormalForm).is_some()
                );
                assert!(qf_instance_failure(&aut, 4, &ind, Mutation::None).is_none());
            }
            other => panic!("instance reparsed as {:?}", other.type_name()),
        }
    }

    #[test]
    fn failure_details_name_the_state_and_witness() {
        let report = check_eps_soundness(&GenConfig::default(), 500, Mutation::SkipEpsClosure);
        let first = report.failures.first().expect("mutation produces failures");
        assert!(first.detail.contains("state "), "detail: {}", first.detail);
        assert!(first.detail.contains("word "), "detail: {}", first.detail);
    }
}
