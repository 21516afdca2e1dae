//! Bounded fixpoint semantics for nondeterministic automata whose
//! transitions carry words, with epsilon elimination and Mazurkiewicz
//! trace quotients.
//!
//! The crate revolves around one construction: an automaton (or more
//! generally a system of equations) denotes, for each state, the set of
//! words it can produce; that set is the least fixpoint of a single
//! substitution step, and restricting everything to words of length at
//! most an explicit bound `n` makes the fixpoint finitely computable while
//! staying exact below the bound.
//!
//! Modules, roughly bottom-up:
//!
//! - [`words`]: alphabets, shortlex-ordered words, bounded languages.
//! - [`regex`]: regular expressions, parsing, exact bounded enumeration.
//! - [`automata`]: the four automaton kinds and the embeddings between them.
//! - [`solver`]: equation systems, the substitution step, least solutions,
//!   and the codiagonal/double-iteration constructions.
//! - [`epsilon`]: epsilon closure and epsilon elimination.
//! - [`mazurkiewicz`]: independence relations, trace normal forms, and
//!   quotient semantics.
//! - [`laws`]: seeded instance generators and checkers for the three
//!   cross-module laws.
//! - [`format`]: the line-based text formats for automata, equation
//!   systems, and independence relations.
//! - [`cli`]: the `tracefix` command-line surface.

pub mod words;
pub mod regex;
pub mod names;
pub mod automata;
pub mod solver;
pub mod epsilon;
pub mod mazurkiewicz;
pub mod format;
pub mod laws;
pub mod cli;
