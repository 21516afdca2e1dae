//! Epsilon closure and epsilon elimination.
//!
//! Elimination turns an [`EpsNda`] into a plain [`Nda`] over the same
//! states: a symbol transition of the result follows any number of
//! epsilon edges first, and a state accepts when its epsilon closure
//! meets the original accepting set. Closure is forward-only; acceptance
//! propagates backwards along epsilon edges by the same closure.
//!
//! The intermediate view [`eps_items_with_depth`] tags what a state can do
//! with the number of epsilon edges needed to reach the state doing it.
//! Depths are counted per path, not per reachable state, so an epsilon
//! cycle yields the same item at every depth; callers pass a cap. The
//! depth-0 items of a state are exactly its own symbol transitions and
//! acceptance, and elimination is the depth-forgetting collapse of this
//! view.

use std::collections::BTreeSet;

use crate::automata::{EpsNda, Nda, StateId};
use crate::words::SymId;

/// What a state can do, tagged with an epsilon distance.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct DepthItem {
    pub depth: usize,
    pub payload: DepthPayload,
}

/// A symbol transition or acceptance, without the epsilon prefix.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum DepthPayload {
    Accept,
    Step(SymId, StateId),
}

/// All states reachable from `x` by following zero or more epsilon edges.
pub fn eps_closure(e: &EpsNda, x: StateId) -> BTreeSet<StateId> {
    let mut closure: BTreeSet<StateId> = [x].into_iter().collect();
    let mut frontier = vec![x];
    while let Some(p) = frontier.pop() {
        for &(src, dst) in e.eps_edges() {
            if src == p && closure.insert(dst) {
                frontier.push(dst);
            }
        }
    }
    closure
}

/// Every `(d, item)` such that some epsilon path of exactly `d` edges
/// (`d <= cap`) leads from `x` to a state whose own behavior includes
/// `item`. Paths may repeat states, so cyclic epsilon structure shows up
/// as the same payload at unboundedly many depths; `cap` cuts that off.
pub fn eps_items_with_depth(e: &EpsNda, x: StateId, cap: usize) -> BTreeSet<DepthItem> {
    let mut items = BTreeSet::new();
    let mut layer: BTreeSet<StateId> = [x].into_iter().collect();
    for depth in 0..=cap {
        for &q in &layer {
            if e.is_accepting(q) {
                items.insert(DepthItem {
                    depth,
                    payload: DepthPayload::Accept,
                });
            }
            for &(src, sym, dst) in e.transitions() {
                if src == q {
                    items.insert(DepthItem {
                        depth,
                        payload: DepthPayload::Step(sym, dst),
                    });
                }
            }
        }
        if depth < cap {
            layer = layer
                .iter()
                .flat_map(|&q| {
                    e.eps_edges()
                        .iter()
                        .filter(move |&&(src, _)| src == q)
                        .map(|&(_, dst)| dst)
                })
                .collect();
        }
    }
    items
}

/// Epsilon elimination: same states, symbol transitions pulled back
/// through epsilon closures, acceptance propagated through closures,
/// epsilon edges discarded.
pub fn eliminate(e: &EpsNda) -> Nda {
    let mut transitions = Vec::new();
    let mut accepting = Vec::new();
    for i in 0..e.states().len() {
        let x = StateId(i);
        let closure = eps_closure(e, x);
        for &(src, sym, dst) in e.transitions() {
            if closure.contains(&src) {
                transitions.push((
                    e.states().name(i).to_string(),
                    e.alphabet().char_of(sym),
                    e.states().name(dst.0).to_string(),
                ));
            }
        }
        if closure.iter().any(|&q| e.is_accepting(q)) {
            accepting.push(e.states().name(i).to_string());
        }
    }
    Nda::new(
        e.alphabet().clone(),
        e.states().iter().map(str::to_string).collect(),
        transitions,
        accepting,
    )
    .expect("elimination only rearranges validated parts")
}
