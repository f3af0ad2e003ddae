//! Shared test harness: an independent textbook Thompson construction used
//! as the anti-circular oracle for the compiler and the golden languages.

use operalang_core::automaton::EpsilonAutomaton;
use operalang_core::regop::{parse_regex, RegexAst};

/// Classic Thompson construction: one fragment per node, glued with ε-moves.
/// Deliberately shares nothing with the operator compilation path.
pub fn thompson(rx: &RegexAst) -> EpsilonAutomaton {
    struct Builder {
        state_count: u32,
        letter_edges: Vec<(u32, String, u32)>,
        epsilon_edges: Vec<(u32, u32)>,
    }
    impl Builder {
        fn fresh(&mut self) -> u32 {
            self.state_count += 1;
            self.state_count
        }
        fn fragment(&mut self, rx: &RegexAst) -> (u32, u32) {
            match rx {
                RegexAst::EmptySet => (self.fresh(), self.fresh()),
                RegexAst::Epsilon => {
                    let (s, t) = (self.fresh(), self.fresh());
                    self.epsilon_edges.push((s, t));
                    (s, t)
                }
                RegexAst::Letter(c) => {
                    let (s, t) = (self.fresh(), self.fresh());
                    self.letter_edges.push((s, c.to_string(), t));
                    (s, t)
                }
                RegexAst::Union(l, r) => {
                    let (ls, lt) = self.fragment(l);
                    let (rs, rt) = self.fragment(r);
                    let (s, t) = (self.fresh(), self.fresh());
                    self.epsilon_edges.push((s, ls));
                    self.epsilon_edges.push((s, rs));
                    self.epsilon_edges.push((lt, t));
                    self.epsilon_edges.push((rt, t));
                    (s, t)
                }
                RegexAst::Concat(l, r) => {
                    let (ls, lt) = self.fragment(l);
                    let (rs, rt) = self.fragment(r);
                    self.epsilon_edges.push((lt, rs));
                    (ls, rt)
                }
                RegexAst::Star(inner) => {
                    let (is, it) = self.fragment(inner);
                    let (s, t) = (self.fresh(), self.fresh());
                    self.epsilon_edges.push((s, t));
                    self.epsilon_edges.push((s, is));
                    self.epsilon_edges.push((it, is));
                    self.epsilon_edges.push((it, t));
                    (s, t)
                }
            }
        }
    }
    let mut b = Builder {
        state_count: 0,
        letter_edges: Vec::new(),
        epsilon_edges: Vec::new(),
    };
    let (start, accept) = b.fragment(rx);
    let mut auto = EpsilonAutomaton::new(b.state_count, start, [accept]);
    for (f, label, t) in b.letter_edges {
        auto.add_letter_edge(f, label, t);
    }
    for (f, t) in b.epsilon_edges {
        auto.add_epsilon_edge(f, t);
    }
    auto
}

/// Thompson automaton of a regex source string.
pub fn thompson_of(src: &str) -> EpsilonAutomaton {
    thompson(&parse_regex(src).expect("test regex parses"))
}
