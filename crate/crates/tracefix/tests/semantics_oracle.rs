//! Cross-validation of the fixpoint semantics against brute-force path
//! enumeration: exhaustively on a small family, and on seeded sweeps of
//! a larger envelope.

mod support;

use std::collections::BTreeSet;

use support::semantics_oracle;
use tracefix::automata::{embed_eps_nda, WordAutomaton};
use tracefix::laws::{gen_eps_nda, gen_word_automaton, GenConfig};
use tracefix::solver::semantics_word;
use tracefix::words::Word;

fn assert_matches_oracle(aut: &WordAutomaton, n: usize, what: &dyn Fn() -> String) {
    let fixpoint: Vec<BTreeSet<Word>> = semantics_word(aut, n)
        .iter()
        .map(|l| l.iter().cloned().collect())
        .collect();
    let oracle = semantics_oracle(aut, n);
    assert_eq!(fixpoint, oracle, "bound {n}, automaton: {}", what());
}

/// Every word automaton with at most two states over {a, b}, at most
/// three transitions labeled by words of length at most one, and any
/// combination of output words of length at most one. The structure is
/// enumerated bit by bit, so nothing in this family is skipped.
#[test]
fn exhaustive_family_up_to_two_states() {
    let labels = ["", "a", "b"];
    for n_states in 0..=2usize {
        let names: Vec<String> = ["p", "q"][..n_states]
            .iter()
            .map(|s| s.to_string())
            .collect();
        // All (src, label, dst) triples, in a fixed order.
        let mut edges = Vec::new();
        for src in 0..n_states {
            for label in labels {
                for dst in 0..n_states {
                    edges.push((names[src].clone(), label.to_string(), names[dst].clone()));
                }
            }
        }
        for edge_mask in 0u32..1 << edges.len() {
            if edge_mask.count_ones() > 3 {
                continue;
            }
            let wtrans: Vec<(String, String, String)> = edges
                .iter()
                .enumerate()
                .filter(|(i, _)| edge_mask & (1 << i) != 0)
                .map(|(_, e)| e.clone())
                .collect();
            // Output masks: per state, any subset of {eps, a, b}.
            for out_mask in 0u32..1 << (3 * n_states) {
                let mut outs = Vec::new();
                for state in 0..n_states {
                    for (j, label) in labels.iter().enumerate() {
                        if out_mask & (1 << (3 * state + j)) != 0 {
                            outs.push((names[state].clone(), label.to_string()));
                        }
                    }
                }
                let aut = WordAutomaton::new(
                    tracefix::words::Alphabet::new(['a', 'b']).unwrap(),
                    names.clone(),
                    wtrans.clone(),
                    outs.clone(),
                )
                .unwrap();
                for n in [0, 4] {
                    assert_matches_oracle(&aut, n, &|| {
                        format!("edges {wtrans:?}, outputs {outs:?}")
                    });
                }
            }
        }
    }
}

/// Seeded sweep of the envelope the exhaustive family cannot cover in
/// full: up to four states, up to six transitions, labels of length at
/// most one, compared at bound four.
#[test]
fn seeded_sweep_of_the_four_state_envelope() {
    let cfg = GenConfig {
        seed: 0xC0FFEE,
        max_states: 4,
        max_edges: 6,
        alphabet_size: 2,
        max_label_len: 1,
        bound: 4,
    };
    for trial in 0..2000 {
        let aut = gen_word_automaton(&cfg, trial);
        assert_matches_oracle(&aut, cfg.bound, &|| format!("seed {}, trial {trial}", cfg.seed));
    }
}

/// A wider envelope than the four-state one: longer labels, a third
/// symbol, and a higher bound.
#[test]
fn seeded_sweep_with_longer_labels() {
    let cfg = GenConfig {
        seed: 31,
        max_states: 5,
        max_edges: 8,
        alphabet_size: 3,
        max_label_len: 2,
        bound: 5,
    };
    for trial in 0..500 {
        let aut = gen_word_automaton(&cfg, trial);
        assert_matches_oracle(&aut, cfg.bound, &|| format!("seed {}, trial {trial}", cfg.seed));
    }
}

/// Embedded epsilon automata exercise the empty-label pruning of the
/// oracle: epsilon cycles and chains appear as empty-word transitions.
#[test]
fn seeded_sweep_of_embedded_epsilon_automata() {
    let cfg = GenConfig::default();
    for trial in 0..500 {
        let aut = embed_eps_nda(&gen_eps_nda(&cfg, trial));
        assert_matches_oracle(&aut, cfg.bound, &|| format!("seed {}, trial {trial}", cfg.seed));
    }
}
