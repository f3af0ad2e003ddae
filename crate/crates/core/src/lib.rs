//! Operads of multi-tilde operators, antireflexive relations and quasiorders,
//! together with the regular-language engine they act on.
//!
//! The crate is organized around three layers:
//!
//! * [`relation`] — integer-pair relations with the shift/decay operators and
//!   closure maps; [`precomp`] — the abstract shift-monoid framework the
//!   operads factor through.
//! * [`operad`] — the concrete operads (multi-tildes, order-compatible and
//!   antireflexive relations, double multi-tildes, poset classes,
//!   quasiorders) with their partial compositions and the graded bijections
//!   between them.
//! * [`automaton`], [`language`], [`boolvec`], [`regop`], [`enumeration`] —
//!   the semantics: grammars and ε-automata denoted by operators, language
//!   membership and equivalence, compilation of regular expressions into
//!   single-operator form, relation surgery on languages, and the exhaustive
//!   quasiorder census with the faithfulness check.
//!
//! [`laws`] hosts the operad-axiom test battery shared by the test suite and
//! the `laws` CLI verb; [`parse`] the textual operator/expression syntax.

pub mod automaton;
pub mod boolvec;
pub mod enumeration;
pub mod error;
pub mod language;
pub mod laws;
pub mod operad;
pub mod parse;
pub mod precomp;
pub mod regop;
pub mod relation;

pub use error::{Error, Result};
