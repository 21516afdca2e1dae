//! Equation systems over words and their least solutions under a bound.
//!
//! An [`EquationMorphism`] assigns to each variable `x` a finite set of
//! right-hand-side items: produce a word and stop ([`EqItem::Output`]),
//! produce a word and continue as another variable ([`EqItem::ToVar`]), or
//! produce a word and defer to a parameter ([`EqItem::ToParam`]). A
//! [`Solution`] assigns to each variable a set of stop/defer items only.
//!
//! A solution is a fixpoint of the substitution step [`phi_step`]: replace
//! each continue-item by the current solution of its target variable,
//! concatenating words. Systems can have many fixpoints (an empty-word
//! self-loop is satisfied by anything), but the least one is canonical and
//! [`solve`] computes it by iterating the step from the empty solution.
//!
//! Everything is bounded: words longer than the bound `n` are dropped at
//! every step. This keeps the fixpoint finite and is exact, in the sense
//! that the result equals the true least solution restricted to words of
//! length at most `n` (concatenation never shortens words, so dropped
//! items can never contribute below the bound).
//!
//! The step works on whole right-hand sides at once; no intermediate
//! path structure is materialized. The test suite keeps an unfused
//! path-enumeration oracle to check this fusion.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::automata::{LangAutomaton, StateId, WordAutomaton};
use crate::names::{NameError, Names};
use crate::regex::enum_regex;
use crate::words::{Alphabet, BoundedLanguage, Word};

/// Index of a variable in its system's declaration order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VarId(pub usize);

/// Index of a parameter in its system's declaration order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ParamId(pub usize);

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolverError {
    #[error(transparent)]
    BadName(#[from] NameError),
    #[error("variable and parameter names must be disjoint: {0:?} appears in both")]
    NameClash(String),
    #[error("solution shape mismatch: {0}")]
    SolutionMismatch(String),
}

/// Right-hand-side item of an equation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum EqItem {
    Output(Word),
    ToVar(Word, VarId),
    ToParam(Word, ParamId),
}

/// Solution item: a finished word, or a word followed by a parameter.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum SolItem {
    Output(Word),
    ToParam(Word, ParamId),
}

/// A system of equations: one set of [`EqItem`]s per variable.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EquationMorphism {
    alphabet: Alphabet,
    vars: Names,
    params: Names,
    rhs: Vec<BTreeSet<EqItem>>,
}

impl EquationMorphism {
    pub fn new(
        alphabet: Alphabet,
        vars: Vec<String>,
        params: Vec<String>,
    ) -> Result<Self, SolverError> {
        let vars = Names::new(vars)?;
        let params = Names::new(params)?;
        if let Some(clash) = vars.iter().find(|v| params.contains(v)) {
            return Err(SolverError::NameClash(clash.to_string()));
        }
        let rhs = vec![BTreeSet::new(); vars.len()];
        Ok(EquationMorphism {
            alphabet,
            vars,
            params,
            rhs,
        })
    }

    pub(crate) fn from_raw(
        alphabet: Alphabet,
        vars: Names,
        params: Names,
        rhs: Vec<BTreeSet<EqItem>>,
    ) -> Self {
        let e = EquationMorphism {
            alphabet,
            vars,
            params,
            rhs,
        };
        debug_assert!(e.validate().is_ok());
        e
    }

    /// Views a word automaton as the equation system it induces: states
    /// become variables (there are no parameters), transitions become
    /// continue-items, output words become stop-items.
    pub fn from_word_automaton(aut: &WordAutomaton) -> Self {
        let mut rhs = vec![BTreeSet::new(); aut.states().len()];
        for (StateId(p), w, StateId(q)) in aut.wtransitions() {
            rhs[*p].insert(EqItem::ToVar(w.clone(), VarId(*q)));
        }
        for i in 0..aut.states().len() {
            for w in aut.outputs(StateId(i)) {
                rhs[i].insert(EqItem::Output(w.clone()));
            }
        }
        EquationMorphism {
            alphabet: aut.alphabet().clone(),
            vars: aut.states().clone(),
            params: Names::empty(),
            rhs,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn vars(&self) -> &Names {
        &self.vars
    }

    pub fn params(&self) -> &Names {
        &self.params
    }

    pub fn var_id(&self, name: &str) -> Option<VarId> {
        self.vars.index_of(name).map(VarId)
    }

    pub fn param_id(&self, name: &str) -> Option<ParamId> {
        self.params.index_of(name).map(ParamId)
    }

    pub fn items(&self, x: VarId) -> &BTreeSet<EqItem> {
        &self.rhs[x.0]
    }

    pub fn add_output(&mut self, x: VarId, w: Word) {
        assert!(w.is_over(&self.alphabet));
        self.rhs[x.0].insert(EqItem::Output(w));
    }

    pub fn add_to_var(&mut self, x: VarId, w: Word, target: VarId) {
        assert!(w.is_over(&self.alphabet) && target.0 < self.vars.len());
        self.rhs[x.0].insert(EqItem::ToVar(w, target));
    }

    pub fn add_to_param(&mut self, x: VarId, w: Word, target: ParamId) {
        assert!(w.is_over(&self.alphabet) && target.0 < self.params.len());
        self.rhs[x.0].insert(EqItem::ToParam(w, target));
    }

    pub fn validate(&self) -> Result<(), SolverError> {
        if self.rhs.len() != self.vars.len() {
            return Err(SolverError::SolutionMismatch(format!(
                "{} right-hand sides for {} variables",
                self.rhs.len(),
                self.vars.len()
            )));
        }
        for set in &self.rhs {
            for item in set {
                let ok = match item {
                    EqItem::Output(w) => w.is_over(&self.alphabet),
                    EqItem::ToVar(w, VarId(t)) => {
                        w.is_over(&self.alphabet) && *t < self.vars.len()
                    }
                    EqItem::ToParam(w, ParamId(t)) => {
                        w.is_over(&self.alphabet) && *t < self.params.len()
                    }
                };
                if !ok {
                    return Err(SolverError::SolutionMismatch(
                        "right-hand-side item out of range".to_string(),
                    ));
                }
            }
        }
        Ok(())
    }
}

/// A candidate solution at a fixed bound: per variable, a set of
/// [`SolItem`]s whose words have length at most the bound.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Solution {
    bound: usize,
    items: Vec<BTreeSet<SolItem>>,
}

impl Solution {
    /// The empty solution: the starting point of the upward iteration.
    pub fn bottom(e: &EquationMorphism, bound: usize) -> Self {
        Solution {
            bound,
            items: vec![BTreeSet::new(); e.vars().len()],
        }
    }

    /// The full solution: every output word and every parameter deferral
    /// up to the bound. Starting point of the downward iteration used to
    /// find greatest fixpoints.
    pub fn top(e: &EquationMorphism, bound: usize) -> Self {
        let mut all = BTreeSet::new();
        for w in crate::words::all_words_up_to(e.alphabet(), bound) {
            all.insert(SolItem::Output(w.clone()));
            for p in 0..e.params().len() {
                all.insert(SolItem::ToParam(w.clone(), ParamId(p)));
            }
        }
        Solution {
            bound,
            items: vec![all; e.vars().len()],
        }
    }

    pub fn from_items(bound: usize, items: Vec<BTreeSet<SolItem>>) -> Self {
        for set in &items {
            for item in set {
                let (SolItem::Output(w) | SolItem::ToParam(w, _)) = item;
                assert!(w.len() <= bound, "solution word exceeds bound");
            }
        }
        Solution { bound, items }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn var_count(&self) -> usize {
        self.items.len()
    }

    pub fn items(&self, x: VarId) -> &BTreeSet<SolItem> {
        &self.items[x.0]
    }

    /// The output words of a variable, as a bounded language.
    pub fn outputs(&self, x: VarId) -> BoundedLanguage {
        let words = self.items[x.0].iter().filter_map(|item| match item {
            SolItem::Output(w) => Some(w.clone()),
            SolItem::ToParam(_, _) => None,
        });
        BoundedLanguage::from_words(self.bound, words).expect("solution words are bounded")
    }

    /// Pointwise inclusion.
    pub fn le(&self, other: &Solution) -> bool {
        self.items.len() == other.items.len()
            && self
                .items
                .iter()
                .zip(&other.items)
                .all(|(a, b)| a.is_subset(b))
    }

    /// Restriction to a smaller bound.
    pub fn truncate(&self, bound: usize) -> Solution {
        let items = self
            .items
            .iter()
            .map(|set| {
                set.iter()
                    .filter(|item| {
                        let (SolItem::Output(w) | SolItem::ToParam(w, _)) = item;
                        w.len() <= bound
                    })
                    .cloned()
                    .collect()
            })
            .collect();
        Solution { bound, items }
    }

    /// Total number of items across all variables.
    pub fn total_items(&self) -> usize {
        self.items.iter().map(BTreeSet::len).sum()
    }
}

/// One substitution step at bound `n`: rebuild each variable's solution
/// set from the system's right-hand sides, looking continue-items up in
/// `s`. Words longer than `n` are dropped wherever they arise.
pub fn phi_step(e: &EquationMorphism, s: &Solution, n: usize) -> Result<Solution, SolverError> {
    if s.var_count() != e.vars().len() {
        return Err(SolverError::SolutionMismatch(format!(
            "solution has {} variables, system has {}",
            s.var_count(),
            e.vars().len()
        )));
    }
    if s.bound() != n {
        return Err(SolverError::SolutionMismatch(format!(
            "solution bound {} differs from requested bound {}",
            s.bound(),
            n
        )));
    }
    for set in &s.items {
        for item in set {
            let in_range = match item {
                SolItem::Output(w) => w.is_over(e.alphabet()),
                SolItem::ToParam(w, ParamId(p)) => {
                    w.is_over(e.alphabet()) && *p < e.params().len()
                }
            };
            if !in_range {
                return Err(SolverError::SolutionMismatch(
                    "solution item is not over the system's alphabet and parameters".to_string(),
                ));
            }
        }
    }

    let mut items = vec![BTreeSet::new(); e.vars().len()];
    for (i, rhs) in e.rhs.iter().enumerate() {
        let out = &mut items[i];
        for item in rhs {
            match item {
                EqItem::Output(w) => {
                    if w.len() <= n {
                        out.insert(SolItem::Output(w.clone()));
                    }
                }
                EqItem::ToParam(w, p) => {
                    if w.len() <= n {
                        out.insert(SolItem::ToParam(w.clone(), *p));
                    }
                }
                EqItem::ToVar(w, target) => {
                    for sub in s.items(*target) {
                        match sub {
                            SolItem::Output(u) => {
                                if let Some(joined) = w.concat_bounded(u, n) {
                                    out.insert(SolItem::Output(joined));
                                }
                            }
                            SolItem::ToParam(u, p) => {
                                if let Some(joined) = w.concat_bounded(u, n) {
                                    out.insert(SolItem::ToParam(joined, *p));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(Solution { bound: n, items })
}

/// Least solution at bound `n`, by iterating [`phi_step`] from the empty
/// solution until nothing changes.
pub fn solve(e: &EquationMorphism, n: usize) -> Solution {
    solve_traced(e, n).0
}

/// As [`solve`], also reporting how many steps the iteration took to
/// stabilize (including the final confirming step).
pub fn solve_traced(e: &EquationMorphism, n: usize) -> (Solution, usize) {
    let mut s = Solution::bottom(e, n);
    let mut steps = 0;
    loop {
        let next = phi_step(e, &s, n).expect("iteration keeps the solution shape");
        steps += 1;
        // The chain from bottom grows monotonically, so set equality is
        // exactly stabilization.
        debug_assert!(s.le(&next));
        if next == s {
            return (s, steps);
        }
        s = next;
    }
}

/// Greatest fixpoint at bound `n`, by iterating [`phi_step`] downward from
/// the full solution. Used to exhibit solutions other than the least one.
pub fn solve_greatest(e: &EquationMorphism, n: usize) -> Solution {
    let mut s = Solution::top(e, n);
    loop {
        let next = phi_step(e, &s, n).expect("iteration keeps the solution shape");
        debug_assert!(next.le(&s));
        if next == s {
            return s;
        }
        s = next;
    }
}

/// Bounded language of every state of a word automaton: the least solution
/// of the induced equation system, which has no parameters.
pub fn semantics_word(aut: &WordAutomaton, n: usize) -> Vec<BoundedLanguage> {
    let e = EquationMorphism::from_word_automaton(aut);
    let s = solve(&e, n);
    (0..aut.states().len())
        .map(|i| s.outputs(VarId(i)))
        .collect()
}

/// Bounded language of every state of a language automaton: each regex
/// label is expanded to the word transitions it denotes (restricted to the
/// bound, which is exact below the bound), then solved as a word
/// automaton.
pub fn semantics_lang(aut: &LangAutomaton, n: usize) -> Vec<BoundedLanguage> {
    let mut wtransitions = BTreeSet::new();
    for (p, r, q) in aut.ltransitions() {
        for w in enum_regex(r, n).iter() {
            wtransitions.insert((*p, w.clone(), *q));
        }
    }
    let outputs = (0..aut.states().len())
        .map(|i| {
            let mut set = BTreeSet::new();
            for r in aut.loutputs(StateId(i)) {
                set.extend(enum_regex(r, n).iter().cloned());
            }
            set
        })
        .collect();
    let word_aut = WordAutomaton::from_raw(
        aut.alphabet().clone(),
        aut.states().clone(),
        wtransitions,
        outputs,
    );
    semantics_word(&word_aut, n)
}

/// Right-hand-side item of a system whose variables occur in two copies
/// (left and right), as produced when an iteration is applied twice.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Eq2Item {
    Output(Word),
    ToVarLeft(Word, VarId),
    ToVarRight(Word, VarId),
    ToParam(Word, ParamId),
}

/// A system of equations over two copies of its variable set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Eq2Morphism {
    alphabet: Alphabet,
    vars: Names,
    params: Names,
    rhs: Vec<BTreeSet<Eq2Item>>,
}

impl Eq2Morphism {
    pub fn new(
        alphabet: Alphabet,
        vars: Vec<String>,
        params: Vec<String>,
    ) -> Result<Self, SolverError> {
        let vars = Names::new(vars)?;
        let params = Names::new(params)?;
        if let Some(clash) = vars.iter().find(|v| params.contains(v)) {
            return Err(SolverError::NameClash(clash.to_string()));
        }
        let rhs = vec![BTreeSet::new(); vars.len()];
        Ok(Eq2Morphism {
            alphabet,
            vars,
            params,
            rhs,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn vars(&self) -> &Names {
        &self.vars
    }

    pub fn params(&self) -> &Names {
        &self.params
    }

    pub fn var_id(&self, name: &str) -> Option<VarId> {
        self.vars.index_of(name).map(VarId)
    }

    pub fn param_id(&self, name: &str) -> Option<ParamId> {
        self.params.index_of(name).map(ParamId)
    }

    pub fn items(&self, x: VarId) -> &BTreeSet<Eq2Item> {
        &self.rhs[x.0]
    }

    pub fn add(&mut self, x: VarId, item: Eq2Item) {
        let ok = match &item {
            Eq2Item::Output(w) => w.is_over(&self.alphabet),
            Eq2Item::ToVarLeft(w, VarId(t)) | Eq2Item::ToVarRight(w, VarId(t)) => {
                w.is_over(&self.alphabet) && *t < self.vars.len()
            }
            Eq2Item::ToParam(w, ParamId(t)) => {
                w.is_over(&self.alphabet) && *t < self.params.len()
            }
        };
        assert!(ok, "item out of range for this system");
        self.rhs[x.0].insert(item);
    }

    pub fn validate(&self) -> Result<(), SolverError> {
        if self.rhs.len() != self.vars.len() {
            return Err(SolverError::SolutionMismatch(
                "right-hand-side count differs from variable count".to_string(),
            ));
        }
        for set in &self.rhs {
            for item in set {
                let ok = match item {
                    Eq2Item::Output(w) => w.is_over(&self.alphabet),
                    Eq2Item::ToVarLeft(w, VarId(t)) | Eq2Item::ToVarRight(w, VarId(t)) => {
                        w.is_over(&self.alphabet) && *t < self.vars.len()
                    }
                    Eq2Item::ToParam(w, ParamId(t)) => {
                        w.is_over(&self.alphabet) && *t < self.params.len()
                    }
                };
                if !ok {
                    return Err(SolverError::SolutionMismatch(
                        "right-hand-side item out of range".to_string(),
                    ));
                }
            }
        }
        Ok(())
    }
}

/// Merges the two variable copies: both left and right occurrences become
/// plain continue-items on the single copy.
pub fn codiagonal(e2: &Eq2Morphism) -> EquationMorphism {
    let rhs = e2
        .rhs
        .iter()
        .map(|set| {
            set.iter()
                .map(|item| match item {
                    Eq2Item::Output(w) => EqItem::Output(w.clone()),
                    Eq2Item::ToVarLeft(w, x) | Eq2Item::ToVarRight(w, x) => {
                        EqItem::ToVar(w.clone(), *x)
                    }
                    Eq2Item::ToParam(w, p) => EqItem::ToParam(w.clone(), *p),
                })
                .collect()
        })
        .collect();
    EquationMorphism::from_raw(
        e2.alphabet.clone(),
        e2.vars.clone(),
        e2.params.clone(),
        rhs,
    )
}

/// Applies the iteration twice: first solve with the left copy as the
/// variables and the right copy adjoined to the parameters, then solve the
/// resulting ordinary system. Both stages run at bound `n`, which is exact
/// because concatenation never shortens words.
pub fn double_dagger(e2: &Eq2Morphism, n: usize) -> Solution {
    let var_count = e2.vars.len();
    // Inner system: parameters are the right variable copy followed by the
    // original parameters. The parameter name list dedicates the first
    // block to the right copy; it is never printed, only indexed.
    let inner_rhs = e2
        .rhs
        .iter()
        .map(|set| {
            set.iter()
                .map(|item| match item {
                    Eq2Item::Output(w) => EqItem::Output(w.clone()),
                    Eq2Item::ToVarLeft(w, x) => EqItem::ToVar(w.clone(), *x),
                    Eq2Item::ToVarRight(w, VarId(x)) => {
                        EqItem::ToParam(w.clone(), ParamId(*x))
                    }
                    Eq2Item::ToParam(w, ParamId(p)) => {
                        EqItem::ToParam(w.clone(), ParamId(var_count + p))
                    }
                })
                .collect()
        })
        .collect();
    let inner_params = Names::new(
        e2.vars
            .iter()
            .map(|v| format!("{v}.right"))
            .chain(e2.params.iter().map(|p| format!("{p}.param")))
            .collect(),
    )
    .expect("mangled inner parameter names are distinct");
    let inner = EquationMorphism::from_raw(
        e2.alphabet.clone(),
        e2.vars.clone(),
        inner_params,
        inner_rhs,
    );
    let first = solve(&inner, n);

    // Outer system: reinterpret deferrals to the right copy as continue-
    // items on the single remaining copy.
    let outer_rhs = (0..var_count)
        .map(|i| {
            first
                .items(VarId(i))
                .iter()
                .map(|item| match item {
                    SolItem::Output(w) => EqItem::Output(w.clone()),
                    SolItem::ToParam(w, ParamId(p)) => {
                        if *p < var_count {
                            EqItem::ToVar(w.clone(), VarId(*p))
                        } else {
                            EqItem::ToParam(w.clone(), ParamId(p - var_count))
                        }
                    }
                })
                .collect()
        })
        .collect();
    let outer = EquationMorphism::from_raw(
        e2.alphabet.clone(),
        e2.vars.clone(),
        e2.params.clone(),
        outer_rhs,
    );
    solve(&outer, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{embed_eps_nda, EpsNda};
    use crate::regex::parse_regex;

    fn abcd() -> Alphabet {
        Alphabet::new(['a', 'b', 'c', 'd']).unwrap()
    }

    fn s(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    /// Two mutually recursive variables over one parameter:
    /// x0 = c | ab x1, x1 = d | a x0 | y.
    fn two_var_system() -> EquationMorphism {
        let al = abcd();
        let mut e = EquationMorphism::new(al.clone(), s(&["x0", "x1"]), s(&["y"])).unwrap();
        let x0 = e.var_id("x0").unwrap();
        let x1 = e.var_id("x1").unwrap();
        let y = e.param_id("y").unwrap();
        e.add_output(x0, al.parse_word("c").unwrap());
        e.add_to_var(x0, al.parse_word("ab").unwrap(), x1);
        e.add_output(x1, al.parse_word("d").unwrap());
        e.add_to_var(x1, al.parse_word("a").unwrap(), x0);
        e.add_to_param(x1, Word::empty(), y);
        e
    }

    fn sol_words(al: &Alphabet, s: &Solution, x: VarId) -> (Vec<String>, Vec<String>) {
        let mut outs = Vec::new();
        let mut params = Vec::new();
        for item in s.items(x) {
            match item {
                SolItem::Output(w) => outs.push(al.format_word(w)),
                SolItem::ToParam(w, _) => params.push(al.format_word(w)),
            }
        }
        (outs, params)
    }

    #[test]
    fn one_step_from_bottom_takes_direct_items_only() {
        let e = two_var_system();
        let n = 7;
        let s = phi_step(&e, &Solution::bottom(&e, n), n).unwrap();
        let al = e.alphabet().clone();
        let x0 = e.var_id("x0").unwrap();
        let x1 = e.var_id("x1").unwrap();
        assert_eq!(sol_words(&al, &s, x0), (vec!["c".into()], vec![]));
        assert_eq!(sol_words(&al, &s, x1), (vec!["d".into()], vec!["".into()]));
    }

    #[test]
    fn phi_step_rejects_mismatched_solutions() {
        let e = two_var_system();
        let s = Solution::bottom(&e, 3);
        assert!(phi_step(&e, &s, 4).is_err());
        let skewed = Solution::from_items(4, vec![BTreeSet::new()]);
        assert!(phi_step(&e, &skewed, 4).is_err());
    }

    #[test]
    fn least_solution_of_two_var_system_at_seven() {
        let e = two_var_system();
        let al = e.alphabet().clone();
        let sol = solve(&e, 7);
        let x0 = e.var_id("x0").unwrap();
        let x1 = e.var_id("x1").unwrap();
        let (x0_out, x0_par) = sol_words(&al, &sol, x0);
        assert_eq!(x0_out, vec!["c", "abd", "abac", "abaabd", "abaabac"]);
        assert_eq!(x0_par, vec!["ab", "abaab"]);
        let (x1_out, x1_par) = sol_words(&al, &sol, x1);
        assert_eq!(x1_out, vec!["d", "ac", "aabd", "aabac", "aabaabd"]);
        assert_eq!(x1_par, vec!["", "aab", "aabaab"]);

        // The same sets, described by closed-form regexes and enumerated.
        let x0_regex = parse_regex("(aba)*c+(aba)*abd", &al).unwrap();
        let x0_param_regex = parse_regex("(aba)*ab", &al).unwrap();
        let x1_regex = parse_regex("(aab)*d+(aab)*ac", &al).unwrap();
        let x1_param_regex = parse_regex("(aab)*", &al).unwrap();
        let show = |r: &crate::regex::Regex| -> Vec<String> {
            enum_regex(r, 7).iter().map(|w| al.format_word(w)).collect()
        };
        assert_eq!(x0_out, show(&x0_regex));
        assert_eq!(x0_par, show(&x0_param_regex));
        assert_eq!(x1_out, show(&x1_regex));
        assert_eq!(x1_par, show(&x1_param_regex));
    }

    #[test]
    fn least_solution_is_a_fixpoint() {
        let e = two_var_system();
        let sol = solve(&e, 7);
        assert_eq!(phi_step(&e, &sol, 7).unwrap(), sol);
    }

    #[test]
    fn iteration_is_monotone_and_stabilizes() {
        let e = two_var_system();
        let n = 6;
        let mut s = Solution::bottom(&e, n);
        let mut steps = 0;
        loop {
            let next = phi_step(&e, &s, n).unwrap();
            assert!(s.le(&next), "chain must grow");
            steps += 1;
            if next == s {
                break;
            }
            s = next;
        }
        let universe = {
            // |X| * (#outputs + #deferrals) possible items at this bound.
            let words = crate::words::all_words_up_to(e.alphabet(), n).len();
            e.vars().len() * (words + words * e.params().len())
        };
        assert!(steps <= universe + 1);
        let (_, traced) = solve_traced(&e, n);
        assert_eq!(traced, steps);
    }

    #[test]
    fn truncation_is_exact() {
        let e = two_var_system();
        for n in 0..7 {
            assert_eq!(solve(&e, n + 1).truncate(n), solve(&e, n));
        }
    }

    #[test]
    fn empty_variable_set_solves_to_empty_solution() {
        let al = abcd();
        let e = EquationMorphism::new(al, vec![], vec![]).unwrap();
        let sol = solve(&e, 4);
        assert_eq!(sol.var_count(), 0);
    }

    /// A single state with an empty-word self-loop: any language solves
    /// its equation, and the least solution is empty.
    fn eps_self_loop() -> EquationMorphism {
        let al = Alphabet::new(['a']).unwrap();
        let mut e = EquationMorphism::new(al, s(&["x"]), vec![]).unwrap();
        let x = e.var_id("x").unwrap();
        e.add_to_var(x, Word::empty(), x);
        e
    }

    #[test]
    fn empty_word_self_loop_has_empty_least_solution() {
        let e = eps_self_loop();
        for n in 0..=6 {
            let sol = solve(&e, n);
            assert!(sol.items(VarId(0)).is_empty());
        }
    }

    #[test]
    fn empty_word_self_loop_has_other_solutions() {
        let e = eps_self_loop();
        let g = solve_greatest(&e, 3);
        // Every output word of length <= 3 survives the downward iteration.
        assert_eq!(g.outputs(VarId(0)).len(), 4);
        assert_eq!(phi_step(&e, &g, 3).unwrap(), g);
        assert!(solve(&e, 3).le(&g));
    }

    #[test]
    fn least_solution_is_below_constructed_fixpoints() {
        let e = two_var_system();
        let n = 5;
        let least = solve(&e, n);
        let g = solve_greatest(&e, n);
        assert!(least.le(&g));
        assert_eq!(phi_step(&e, &g, n).unwrap(), g);
    }

    #[test]
    fn five_state_word_automaton_semantics() {
        let al = Alphabet::new(['a', 'b', 'c']).unwrap();
        let aut = WordAutomaton::new(
            al.clone(),
            s(&["x", "y", "z", "u", "v"]),
            vec![
                ("x".into(), "a".into(), "y".into()),
                ("y".into(), "b".into(), "z".into()),
                ("u".into(), "".into(), "v".into()),
                ("v".into(), "ab".into(), "z".into()),
            ],
            vec![("z".into(), "c".into())],
        )
        .unwrap();
        let sem = semantics_word(&aut, 5);
        let shown: Vec<Vec<String>> = sem
            .iter()
            .map(|lang| lang.iter().map(|w| al.format_word(w)).collect())
            .collect();
        assert_eq!(
            shown,
            vec![
                vec!["abc".to_string()],
                vec!["bc".to_string()],
                vec!["c".to_string()],
                vec!["abc".to_string()],
                vec!["abc".to_string()],
            ]
        );
    }

    #[test]
    fn lang_semantics_expands_regex_labels_exactly() {
        let al = Alphabet::new(['a', 'b']).unwrap();
        let lang_aut = crate::automata::LangAutomaton::new(
            al.clone(),
            s(&["p", "q"]),
            vec![("p".into(), parse_regex("a*b", &al).unwrap(), "q".into())],
            vec![("q".into(), parse_regex("eps+a", &al).unwrap())],
        )
        .unwrap();
        let sem = semantics_lang(&lang_aut, 3);
        let p: Vec<String> = sem[0].iter().map(|w| al.format_word(w)).collect();
        // a*b followed by (eps|a), cut at length 3.
        assert_eq!(p, vec!["b", "ab", "ba", "aab", "aba"]);
    }

    #[test]
    fn eps_chain_semantics_matches_star() {
        let al = Alphabet::new(['a']).unwrap();
        let e = EpsNda::new(
            al.clone(),
            s(&["x", "y", "z"]),
            vec![("z".into(), 'a', "z".into())],
            vec![("x".into(), "y".into()), ("y".into(), "z".into())],
            s(&["z"]),
        )
        .unwrap();
        let sem = semantics_word(&embed_eps_nda(&e), 3);
        for lang in &sem {
            let shown: Vec<String> = lang.iter().map(|w| al.format_word(w)).collect();
            assert_eq!(shown, vec!["", "a", "aa", "aaa"]);
        }
    }

    #[test]
    fn codiagonal_merges_both_copies() {
        let al = Alphabet::new(['a', 'b']).unwrap();
        let mut e2 = Eq2Morphism::new(al.clone(), s(&["x"]), vec![]).unwrap();
        let x = e2.var_id("x").unwrap();
        e2.add(x, Eq2Item::Output(al.parse_word("b").unwrap()));
        e2.add(x, Eq2Item::ToVarRight(al.parse_word("a").unwrap(), x));
        let merged = codiagonal(&e2);
        assert_eq!(merged.items(x).len(), 2);
        assert!(merged
            .items(x)
            .contains(&EqItem::ToVar(al.parse_word("a").unwrap(), x)));
    }

    #[test]
    fn double_dagger_on_pure_left_loop_is_empty() {
        let al = Alphabet::new(['a']).unwrap();
        let mut e2 = Eq2Morphism::new(al.clone(), s(&["x"]), vec![]).unwrap();
        let x = e2.var_id("x").unwrap();
        e2.add(x, Eq2Item::ToVarLeft(al.parse_word("a").unwrap(), x));
        let sol = double_dagger(&e2, 4);
        assert!(sol.items(x).is_empty());
        assert_eq!(sol, solve(&codiagonal(&e2), 4));
    }

    #[test]
    fn double_dagger_without_var_items_is_the_direct_solution() {
        let al = Alphabet::new(['a', 'b']).unwrap();
        let mut e2 = Eq2Morphism::new(al.clone(), s(&["x"]), s(&["y"])).unwrap();
        let x = e2.var_id("x").unwrap();
        let y = e2.param_id("y").unwrap();
        e2.add(x, Eq2Item::Output(al.parse_word("ab").unwrap()));
        e2.add(x, Eq2Item::ToParam(al.parse_word("b").unwrap(), y));
        let sol = double_dagger(&e2, 4);
        assert_eq!(sol, solve(&codiagonal(&e2), 4));
        assert_eq!(sol.items(x).len(), 2);
    }

    #[test]
    fn double_dagger_agrees_with_codiagonal_on_a_mixed_system() {
        let al = Alphabet::new(['a', 'b']).unwrap();
        let mut e2 = Eq2Morphism::new(al.clone(), s(&["x", "z"]), s(&["y"])).unwrap();
        let x = e2.var_id("x").unwrap();
        let z = e2.var_id("z").unwrap();
        let y = e2.param_id("y").unwrap();
        e2.add(x, Eq2Item::Output(al.parse_word("b").unwrap()));
        e2.add(x, Eq2Item::ToVarRight(al.parse_word("a").unwrap(), z));
        e2.add(z, Eq2Item::ToVarLeft(Word::empty(), x));
        e2.add(z, Eq2Item::ToParam(al.parse_word("bb").unwrap(), y));
        for n in 0..=5 {
            assert_eq!(double_dagger(&e2, n), solve(&codiagonal(&e2), n));
        }
    }
}
