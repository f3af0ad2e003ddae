//! From operators to languages: the right-linear grammar read off an
//! antireflexive relation, its ε-automaton, expressions with letter, empty
//! and nested-operator leaves, and the action on arbitrary regular languages
//! by slot inlining.

use std::collections::BTreeSet;
use std::fmt;

use crate::automaton::{EpsilonAutomaton, Label, State, Word};
use crate::error::{Error, Result};
use crate::operad::{DoubleTilde, OperadElement};
use crate::relation::Relation;

/// One production of the grammar `G_R^{(k)}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Production {
    /// `S_i → a_i S_{i+1}`
    Letter { from: State },
    /// `S_i → S_j`
    Chain { from: State, to: State },
    /// `S_{k+1} → ε`
    Accept { state: State },
}

impl fmt::Display for Production {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Production::Letter { from } => write!(f, "S{from} -> a{from} S{}", from + 1),
            Production::Chain { from, to } => write!(f, "S{from} -> S{to}"),
            Production::Accept { state } => write!(f, "S{state} -> ε"),
        }
    }
}

/// The production list of an antireflexive operator: `k` letter rules in
/// ascending order, the chain rules in lexicographic order, one ε-rule.
pub fn emit_grammar(r: &Relation) -> Result<Vec<Production>> {
    if !r.is_antireflexive() {
        return Err(Error::invalid("grammar", "relation must be antireflexive"));
    }
    let mut rules: Vec<Production> = (1..=r.arity())
        .map(|from| Production::Letter { from })
        .collect();
    rules.extend(
        r.pairs()
            .iter()
            .map(|p| Production::Chain { from: p.x, to: p.y }),
    );
    rules.push(Production::Accept {
        state: r.arity() + 1,
    });
    Ok(rules)
}

/// The grammar read off a double multi-tilde directly: chain rules
/// `S_i → S_j` whenever `(j, i-1)` is a right tilde or `(i, j-1)` a left one.
/// This coincides with `emit_grammar` of the merged relation.
pub fn emit_grammar_double(d: &DoubleTilde) -> Vec<Production> {
    let k = d.arity();
    let mut chains = BTreeSet::new();
    for p in d.left().pairs().iter() {
        chains.insert(Production::Chain { from: p.x, to: p.y + 1 });
    }
    for p in d.right().pairs().iter() {
        chains.insert(Production::Chain { from: p.y + 1, to: p.x });
    }
    let mut rules: Vec<Production> = (1..=k).map(|from| Production::Letter { from }).collect();
    rules.extend(chains);
    rules.push(Production::Accept { state: k + 1 });
    rules
}

/// Breadth-first derivation over grammar rules with a word-length cap, used
/// as an implementation-independent oracle for the automaton semantics. The
/// slot alphabet is `a1 … ak`.
pub fn derive_words(rules: &[Production], cap: usize) -> BTreeSet<Word> {
    let mut out = BTreeSet::new();
    // Sentential forms: (current nonterminal, emitted word).
    let mut layer: Vec<(State, Word)> = vec![(1, Vec::new())];
    let mut guard = 0usize;
    while !layer.is_empty() {
        guard += 1;
        assert!(guard <= cap + 2, "derivation exceeded the word-length cap");
        let mut next = Vec::new();
        let mut chain_seen = BTreeSet::new();
        for (state, word) in layer {
            // Chase chain rules without growing the word; the seen-set keeps
            // cycles of ε-rules from looping.
            let mut stack = vec![state];
            let mut reach = BTreeSet::new();
            while let Some(s) = stack.pop() {
                if !reach.insert(s) {
                    continue;
                }
                for rule in rules {
                    if let Production::Chain { from, to } = rule {
                        if *from == s {
                            stack.push(*to);
                        }
                    }
                }
            }
            for s in reach {
                if rules.contains(&Production::Accept { state: s }) {
                    out.insert(word.clone());
                }
                if word.len() < cap && rules.contains(&Production::Letter { from: s }) {
                    let mut w = word.clone();
                    w.push(format!("a{s}"));
                    if chain_seen.insert((s, w.clone())) {
                        next.push((s + 1, w));
                    }
                }
            }
        }
        layer = next;
    }
    out
}

/// A leaf of an operator expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Leaf {
    Letter(Label),
    Empty,
    Sub(Box<Expression>),
}

/// An operator applied to leaves; nested operators flatten by inlining.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expression {
    root: OperadElement,
    leaves: Vec<Leaf>,
}

impl Expression {
    pub fn new(root: OperadElement, leaves: Vec<Leaf>) -> Result<Self> {
        if leaves.len() as u32 != root.arity() {
            return Err(Error::ArityMismatch {
                expected: root.arity(),
                got: leaves.len() as u32,
            });
        }
        Ok(Expression { root, leaves })
    }

    /// All slots filled with the canonical slot letters `a1 … ak`.
    pub fn with_slot_letters(root: OperadElement) -> Self {
        let leaves = (1..=root.arity())
            .map(|i| Leaf::Letter(format!("a{i}")))
            .collect();
        Expression {
            root,
            leaves,
        }
    }

    pub fn root(&self) -> &OperadElement {
        &self.root
    }

    pub fn leaves(&self) -> &[Leaf] {
        &self.leaves
    }
}

/// What goes into one slot when assembling an automaton.
enum SlotContent {
    Letter(Label),
    Omitted,
    Inline(EpsilonAutomaton),
}

/// Assemble the automaton of an operator skeleton with the given slot
/// contents: states `1..=k+1`, an ε-edge per relation pair, and per slot
/// either a labeled edge, no edge at all, or an inlined copy of a whole
/// automaton bridged with ε-edges.
fn assemble(relation: &Relation, slots: Vec<SlotContent>) -> EpsilonAutomaton {
    let k = relation.arity();
    debug_assert_eq!(slots.len() as u32, k);
    let host_states = k + 1;
    let extra: u32 = slots
        .iter()
        .map(|s| match s {
            SlotContent::Inline(a) => a.state_count(),
            _ => 0,
        })
        .sum();
    let mut auto = EpsilonAutomaton::new(host_states + extra, 1, [host_states]);
    for p in relation.pairs().iter() {
        auto.add_epsilon_edge(p.x, p.y);
    }
    let mut offset = host_states;
    for (slot, content) in slots.into_iter().enumerate() {
        let from = slot as u32 + 1;
        match content {
            SlotContent::Letter(label) => auto.add_letter_edge(from, label, from + 1),
            SlotContent::Omitted => {}
            SlotContent::Inline(sub) => {
                for (f, label, t) in sub.letter_edges() {
                    auto.add_letter_edge(f + offset, label.clone(), t + offset);
                }
                for &(f, t) in sub.epsilon_edges() {
                    auto.add_epsilon_edge(f + offset, t + offset);
                }
                for label in sub.alphabet() {
                    auto.add_letter(label.clone());
                }
                auto.add_epsilon_edge(from, sub.initial() + offset);
                for &f in sub.finals() {
                    auto.add_epsilon_edge(f + offset, from + 1);
                }
                offset += sub.state_count();
            }
        }
    }
    auto
}

/// Evaluate an expression to its ε-automaton. The root is coerced to its
/// antireflexive relation; letter leaves label the slot edge, empty leaves
/// omit it, and nested operators are inlined in place of the slot edge.
pub fn build_automaton(e: &Expression) -> Result<EpsilonAutomaton> {
    let relation = e.root.to_aref();
    let slots = e
        .leaves
        .iter()
        .map(|leaf| {
            Ok(match leaf {
                Leaf::Letter(label) => SlotContent::Letter(label.clone()),
                Leaf::Empty => SlotContent::Omitted,
                Leaf::Sub(sub) => SlotContent::Inline(build_automaton(sub)?),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(assemble(&relation, slots))
}

/// The module action: substitute one automaton per slot by inlining.
pub fn act_on_languages(
    e: &OperadElement,
    languages: &[EpsilonAutomaton],
) -> Result<EpsilonAutomaton> {
    if languages.len() as u32 != e.arity() {
        return Err(Error::ArityMismatch {
            expected: e.arity(),
            got: languages.len() as u32,
        });
    }
    let relation = e.to_aref();
    let slots = languages
        .iter()
        .map(|a| SlotContent::Inline(a.clone()))
        .collect();
    Ok(assemble(&relation, slots))
}

/// The two-state automaton of a single letter.
pub fn letter_automaton(label: impl Into<Label>) -> EpsilonAutomaton {
    let mut a = EpsilonAutomaton::new(2, 1, [2]);
    a.add_letter_edge(1, label, 2);
    a
}

/// The two-state automaton of the empty language.
pub fn empty_automaton() -> EpsilonAutomaton {
    EpsilonAutomaton::new(2, 1, [2])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::{language_equivalent, word_of_chars};
    use crate::operad::{compose_aref, iso_xi};
    use crate::relation::MultiTilde;

    fn aref(arity: u32, ps: &[(u32, u32)]) -> OperadElement {
        OperadElement::aref(Relation::from_pairs(arity, ps.iter().copied()).unwrap()).unwrap()
    }

    fn letters(names: &str) -> Vec<Leaf> {
        names
            .chars()
            .map(|c| {
                if c == '_' {
                    Leaf::Empty
                } else {
                    Leaf::Letter(c.to_string())
                }
            })
            .collect()
    }

    #[test]
    fn grammar_of_the_running_example_has_ten_rules() {
        let r = Relation::from_pairs(5, [(1, 4), (2, 3), (3, 5), (4, 2)]).unwrap();
        let rules = emit_grammar(&r).unwrap();
        assert_eq!(rules.len(), 10);
        let rendered: BTreeSet<String> = rules.iter().map(|r| r.to_string()).collect();
        let expected: BTreeSet<String> = [
            "S1 -> a1 S2",
            "S1 -> S4",
            "S2 -> a2 S3",
            "S2 -> S3",
            "S3 -> a3 S4",
            "S3 -> S5",
            "S4 -> a4 S5",
            "S4 -> S2",
            "S5 -> a5 S6",
            "S6 -> ε",
        ]
        .into_iter()
        .map(str::to_string)
        .collect();
        assert_eq!(rendered, expected);
    }

    #[test]
    fn trivial_grammar() {
        let rules = emit_grammar(&Relation::empty(1)).unwrap();
        assert_eq!(
            rules,
            vec![
                Production::Letter { from: 1 },
                Production::Accept { state: 2 }
            ]
        );
        assert!(emit_grammar(&Relation::from_pairs(1, [(1, 1)]).unwrap()).is_err());
    }

    #[test]
    fn double_tilde_grammar_matches_the_merged_relation() {
        let d = DoubleTilde::new(
            MultiTilde::from_pairs(5, [(1, 3), (2, 2), (3, 4)]).unwrap(),
            MultiTilde::from_pairs(5, [(2, 3)]).unwrap(),
        )
        .unwrap();
        let direct: BTreeSet<Production> = emit_grammar_double(&d).into_iter().collect();
        let merged: BTreeSet<Production> =
            emit_grammar(&iso_xi(&d)).unwrap().into_iter().collect();
        assert_eq!(direct, merged);
        assert!(direct.contains(&Production::Chain { from: 4, to: 2 }));
    }

    #[test]
    fn single_letter_language() {
        let e = Expression::new(aref(1, &[]), letters("a")).unwrap();
        let auto = build_automaton(&e).unwrap();
        assert!(auto.accepts(&word_of_chars("a")).unwrap());
        assert!(!auto.accepts(&word_of_chars("")).unwrap());
        assert_eq!(auto.words_up_to(3), vec![word_of_chars("a")]);
    }

    #[test]
    fn quasiorder_row_accepts_epsilon() {
        let e = Expression::new(aref(2, &[(1, 3)]), letters("ab")).unwrap();
        let auto = build_automaton(&e).unwrap();
        assert!(auto.accepts(&[]).unwrap());
        assert!(auto.accepts(&word_of_chars("ab")).unwrap());
        assert!(!auto.accepts(&word_of_chars("a")).unwrap());
    }

    #[test]
    fn empty_leaves_block_their_slot() {
        // (ab+cd)+ through an 8-ary operator with two blocked slots.
        let e = Expression::new(
            aref(8, &[(1, 4), (3, 6), (6, 1), (6, 9)]),
            letters("ab_cda_b"),
        )
        .unwrap();
        let auto = build_automaton(&e).unwrap();
        for word in ["ab", "cd", "abcd", "cdab", "ababab"] {
            assert!(auto.accepts(&word_of_chars(word)).unwrap(), "{word}");
        }
        for word in ["", "a", "ba", "abc"] {
            assert!(!auto.accepts(&word_of_chars(word)).unwrap(), "{word}");
        }
    }

    #[test]
    fn derivation_oracle_agrees_with_the_automaton() {
        let r = Relation::from_pairs(3, [(1, 3), (2, 4), (3, 1)]).unwrap();
        let rules = emit_grammar(&r).unwrap();
        let cap = r.arity() as usize + 2;
        let derived = derive_words(&rules, cap);
        let auto =
            build_automaton(&Expression::with_slot_letters(aref(3, &[(1, 3), (2, 4), (3, 1)])))
                .unwrap();
        let from_auto: BTreeSet<Word> = auto.words_up_to(cap).into_iter().collect();
        assert_eq!(derived, from_auto);
    }

    #[test]
    fn inlining_matches_algebraic_composition() {
        // Composing operators and then evaluating equals inlining the
        // sub-expression into the slot.
        let outer = Relation::from_pairs(2, [(1, 2)]).unwrap();
        let inner = Relation::from_pairs(2, [(2, 3)]).unwrap();
        let composed = compose_aref(&outer, 2, &inner).unwrap();

        let nested = Expression::new(
            OperadElement::aref(outer).unwrap(),
            vec![
                Leaf::Letter("a".into()),
                Leaf::Sub(Box::new(
                    Expression::new(
                        OperadElement::aref(inner).unwrap(),
                        letters("bc"),
                    )
                    .unwrap(),
                )),
            ],
        )
        .unwrap();
        let flat = Expression::new(OperadElement::aref(composed).unwrap(), letters("abc")).unwrap();
        assert!(language_equivalent(
            &build_automaton(&nested).unwrap(),
            &build_automaton(&flat).unwrap()
        )
        .is_equivalent());
    }

    #[test]
    fn action_with_letter_automata_reduces_to_evaluation() {
        let op = aref(2, &[(2, 1)]);
        let acted = act_on_languages(&op, &[letter_automaton("a"), letter_automaton("b")]).unwrap();
        let direct = build_automaton(&Expression::new(op, letters("ab")).unwrap()).unwrap();
        assert!(language_equivalent(&acted, &direct).is_equivalent());
    }

    #[test]
    fn arity_mismatch_is_reported() {
        assert!(matches!(
            Expression::new(aref(2, &[]), letters("a")),
            Err(Error::ArityMismatch { .. })
        ));
        assert!(matches!(
            act_on_languages(&aref(2, &[]), &[letter_automaton("a")]),
            Err(Error::ArityMismatch { .. })
        ));
    }
}
