//! Finite automata with ε-moves: membership, determinization, language
//! equivalence with shortest counterexamples, word enumeration and DOT/JSON
//! export.
//!
//! States are 1-based to line up with the grammar nonterminals `S_1 … S_{k+1}`
//! the automata are read off from.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};

pub type State = u32;
pub type Label = String;
pub type Word = Vec<Label>;

/// Render a word as a plain string (labels joined; `ε` for the empty word).
pub fn display_word(word: &[Label]) -> String {
    if word.is_empty() {
        "ε".to_string()
    } else {
        word.concat()
    }
}

/// Split a string of single-character labels into a word.
pub fn word_of_chars(s: &str) -> Word {
    s.chars().map(|c| c.to_string()).collect()
}

/// A nondeterministic finite automaton with ε-moves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsilonAutomaton {
    state_count: u32,
    alphabet: BTreeSet<Label>,
    letter_edges: BTreeSet<(State, Label, State)>,
    epsilon_edges: BTreeSet<(State, State)>,
    initial: State,
    finals: BTreeSet<State>,
}

impl EpsilonAutomaton {
    pub fn new(state_count: u32, initial: State, finals: impl IntoIterator<Item = State>) -> Self {
        let finals: BTreeSet<State> = finals.into_iter().collect();
        debug_assert!(state_count >= 1);
        debug_assert!((1..=state_count).contains(&initial));
        debug_assert!(finals.iter().all(|f| (1..=state_count).contains(f)));
        EpsilonAutomaton {
            state_count,
            alphabet: BTreeSet::new(),
            letter_edges: BTreeSet::new(),
            epsilon_edges: BTreeSet::new(),
            initial,
            finals,
        }
    }

    pub fn state_count(&self) -> u32 {
        self.state_count
    }

    pub fn initial(&self) -> State {
        self.initial
    }

    pub fn finals(&self) -> &BTreeSet<State> {
        &self.finals
    }

    pub fn alphabet(&self) -> impl Iterator<Item = &Label> {
        self.alphabet.iter()
    }

    pub fn letter_edges(&self) -> impl Iterator<Item = &(State, Label, State)> {
        self.letter_edges.iter()
    }

    pub fn epsilon_edges(&self) -> impl Iterator<Item = &(State, State)> {
        self.epsilon_edges.iter()
    }

    /// Record a letter in the alphabet without adding an edge.
    pub fn add_letter(&mut self, label: impl Into<Label>) {
        self.alphabet.insert(label.into());
    }

    pub fn add_letter_edge(&mut self, from: State, label: impl Into<Label>, to: State) {
        let label = label.into();
        debug_assert!(from >= 1 && from <= self.state_count);
        debug_assert!(to >= 1 && to <= self.state_count);
        self.alphabet.insert(label.clone());
        self.letter_edges.insert((from, label, to));
    }

    pub fn add_epsilon_edge(&mut self, from: State, to: State) {
        debug_assert!(from >= 1 && from <= self.state_count);
        debug_assert!(to >= 1 && to <= self.state_count);
        self.epsilon_edges.insert((from, to));
    }

    fn epsilon_closure(&self, seed: &BTreeSet<State>) -> BTreeSet<State> {
        let mut closure = seed.clone();
        let mut stack: Vec<State> = seed.iter().copied().collect();
        while let Some(s) = stack.pop() {
            for &(from, to) in &self.epsilon_edges {
                if from == s && closure.insert(to) {
                    stack.push(to);
                }
            }
        }
        closure
    }

    /// ε-closure simulation. Errors on a letter outside the alphabet.
    pub fn accepts(&self, word: &[Label]) -> Result<bool> {
        for letter in word {
            if !self.alphabet.contains(letter) {
                return Err(Error::UnknownLetter {
                    letter: letter.clone(),
                });
            }
        }
        let mut current = self.epsilon_closure(&BTreeSet::from([self.initial]));
        for letter in word {
            let mut next = BTreeSet::new();
            for &(from, ref label, to) in &self.letter_edges {
                if label == letter && current.contains(&from) {
                    next.insert(to);
                }
            }
            if next.is_empty() {
                return Ok(false);
            }
            current = self.epsilon_closure(&next);
        }
        Ok(current.iter().any(|s| self.finals.contains(s)))
    }

    /// Subset construction over the given alphabet (a superset of this
    /// automaton's own alphabet is allowed). State 0 of the result is the
    /// start; the empty subset acts as the sink.
    pub fn determinize(&self, alphabet: &[Label]) -> Dfa {
        let label_index: BTreeMap<&Label, usize> =
            alphabet.iter().enumerate().map(|(i, l)| (l, i)).collect();
        // Outgoing letter edges grouped per state for the construction.
        let mut per_state: Vec<Vec<(usize, State)>> = vec![Vec::new(); self.state_count as usize + 1];
        for &(from, ref label, to) in &self.letter_edges {
            let li = *label_index
                .get(label)
                .expect("determinize alphabet must cover the automaton");
            per_state[from as usize].push((li, to));
        }

        let start = self.epsilon_closure(&BTreeSet::from([self.initial]));
        let mut index: BTreeMap<BTreeSet<State>, usize> = BTreeMap::new();
        let mut subsets: Vec<BTreeSet<State>> = Vec::new();
        let mut transitions: Vec<Vec<usize>> = Vec::new();
        let mut queue: VecDeque<usize> = VecDeque::new();

        index.insert(start.clone(), 0);
        subsets.push(start);
        queue.push_back(0);

        while let Some(si) = queue.pop_front() {
            let subset = subsets[si].clone();
            let mut row = Vec::with_capacity(alphabet.len());
            for li in 0..alphabet.len() {
                let mut next = BTreeSet::new();
                for &s in &subset {
                    for &(edge_li, to) in &per_state[s as usize] {
                        if edge_li == li {
                            next.insert(to);
                        }
                    }
                }
                let next = self.epsilon_closure(&next);
                let ti = match index.get(&next) {
                    Some(&t) => t,
                    None => {
                        let t = subsets.len();
                        index.insert(next.clone(), t);
                        subsets.push(next);
                        transitions.push(Vec::new());
                        queue.push_back(t);
                        t
                    }
                };
                row.push(ti);
            }
            if si >= transitions.len() {
                transitions.push(Vec::new());
            }
            transitions[si] = row;
        }

        let accepting = subsets
            .iter()
            .map(|subset| subset.iter().any(|s| self.finals.contains(s)))
            .collect();
        Dfa {
            alphabet: alphabet.to_vec(),
            transitions,
            accepting,
        }
    }

    /// All accepted words of length at most `max_len`, sorted by length then
    /// lexicographically by the (sorted) alphabet.
    pub fn words_up_to(&self, max_len: usize) -> Vec<Word> {
        let alphabet: Vec<Label> = self.alphabet.iter().cloned().collect();
        let dfa = self.determinize(&alphabet);
        let mut out = Vec::new();
        let mut layer: Vec<(usize, Word)> = vec![(0, Vec::new())];
        // The subset construction can loop, so walk words breadth-first and
        // prune states with no path to acceptance.
        let live = dfa.live_states();
        for len in 0..=max_len {
            let mut next = Vec::new();
            for (state, word) in &layer {
                if dfa.accepting[*state] {
                    out.push(word.clone());
                }
                if len < max_len {
                    for (li, label) in alphabet.iter().enumerate() {
                        let t = dfa.transitions[*state][li];
                        if live[t] {
                            let mut w = word.clone();
                            w.push(label.clone());
                            next.push((t, w));
                        }
                    }
                }
            }
            layer = next;
            if layer.is_empty() {
                break;
            }
        }
        out
    }
}

/// A total DFA produced by the subset construction.
#[derive(Clone, Debug)]
pub struct Dfa {
    pub alphabet: Vec<Label>,
    /// `transitions[state][letter_index]` — always defined (state 0 = start).
    pub transitions: Vec<Vec<usize>>,
    pub accepting: Vec<bool>,
}

impl Dfa {
    /// States from which some accepting state is reachable.
    fn live_states(&self) -> Vec<bool> {
        let n = self.transitions.len();
        let mut live = self.accepting.clone();
        loop {
            let mut changed = false;
            for s in 0..n {
                if !live[s] && self.transitions[s].iter().any(|&t| live[t]) {
                    live[s] = true;
                    changed = true;
                }
            }
            if !changed {
                return live;
            }
        }
    }
}

/// Outcome of a language comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LanguageCmp {
    Equivalent,
    /// A shortest word accepted by exactly one side (lexicographically
    /// smallest among the shortest).
    Distinguished(Word),
}

impl LanguageCmp {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, LanguageCmp::Equivalent)
    }
}

/// Decide language equality by determinizing both sides over the union
/// alphabet and searching the product breadth-first for a state accepted by
/// exactly one side.
pub fn language_equivalent(a: &EpsilonAutomaton, b: &EpsilonAutomaton) -> LanguageCmp {
    let alphabet: Vec<Label> = a.alphabet.union(&b.alphabet).cloned().collect();
    let da = a.determinize(&alphabet);
    let db = b.determinize(&alphabet);

    let mut seen = BTreeSet::new();
    // (a-state, b-state) -> (parent key, letter index)
    let mut parent: BTreeMap<(usize, usize), ((usize, usize), usize)> = BTreeMap::new();
    let mut queue = VecDeque::new();

    let start = (0usize, 0usize);
    seen.insert(start);
    queue.push_back(start);

    let reconstruct = |parent: &BTreeMap<(usize, usize), ((usize, usize), usize)>,
                       mut node: (usize, usize)| {
        let mut letters = Vec::new();
        while let Some(&(prev, li)) = parent.get(&node) {
            letters.push(alphabet[li].clone());
            node = prev;
        }
        letters.reverse();
        letters
    };

    if da.accepting[0] != db.accepting[0] {
        return LanguageCmp::Distinguished(Vec::new());
    }
    while let Some((sa, sb)) = queue.pop_front() {
        for li in 0..alphabet.len() {
            let next = (da.transitions[sa][li], db.transitions[sb][li]);
            if seen.insert(next) {
                parent.insert(next, ((sa, sb), li));
                if da.accepting[next.0] != db.accepting[next.1] {
                    return LanguageCmp::Distinguished(reconstruct(&parent, next));
                }
                queue.push_back(next);
            }
        }
    }
    LanguageCmp::Equivalent
}

#[derive(Serialize)]
struct AutomatonDump<'a> {
    state_count: u32,
    alphabet: Vec<&'a Label>,
    letter_edges: Vec<(State, &'a Label, State)>,
    epsilon_edges: Vec<(State, State)>,
    initial: State,
    finals: Vec<State>,
}

impl EpsilonAutomaton {
    /// Structural dump with stable field and edge order.
    pub fn to_json(&self) -> String {
        let dump = AutomatonDump {
            state_count: self.state_count,
            alphabet: self.alphabet.iter().collect(),
            letter_edges: self
                .letter_edges
                .iter()
                .map(|(f, l, t)| (*f, l, *t))
                .collect(),
            epsilon_edges: self.epsilon_edges.iter().copied().collect(),
            initial: self.initial,
            finals: self.finals.iter().copied().collect(),
        };
        serde_json::to_string_pretty(&dump).expect("automaton serializes")
    }

    /// GraphViz rendering; ε-edges are dashed.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "digraph automaton {{").unwrap();
        writeln!(out, "    rankdir=LR;").unwrap();
        writeln!(out, "    start [shape=point];").unwrap();
        for s in 1..=self.state_count {
            let shape = if self.finals.contains(&s) {
                "doublecircle"
            } else {
                "circle"
            };
            writeln!(out, "    S{s} [shape={shape}];").unwrap();
        }
        writeln!(out, "    start -> S{};", self.initial).unwrap();
        for (from, label, to) in &self.letter_edges {
            writeln!(out, "    S{from} -> S{to} [label=\"{label}\"];").unwrap();
        }
        for (from, to) in &self.epsilon_edges {
            writeln!(out, "    S{from} -> S{to} [label=\"ε\", style=dashed];").unwrap();
        }
        writeln!(out, "}}").unwrap();
        out
    }
}
