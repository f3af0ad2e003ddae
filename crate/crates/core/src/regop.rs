//! Regular expressions compiled into single-operator form, and the relation
//! surgeries turning one operator language into its prefixes, suffixes,
//! factors, subwords or mirror.

use std::collections::BTreeSet;
use std::fmt;

use crate::automaton::EpsilonAutomaton;
use crate::error::{Error, Result};
use crate::language::{build_automaton, Expression, Leaf};
use crate::operad::OperadElement;
use crate::relation::{dec, Pair, PairSet, Relation};

/// Regular expression syntax tree. Concrete syntax: single alphanumeric
/// letters, `+` union, juxtaposition concatenation, `*` star, `()` grouping,
/// `@` for ε and `#` for ∅.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum RegexAst {
    EmptySet,
    Epsilon,
    Letter(char),
    Union(Box<RegexAst>, Box<RegexAst>),
    Concat(Box<RegexAst>, Box<RegexAst>),
    Star(Box<RegexAst>),
}

impl RegexAst {
    pub fn union(l: RegexAst, r: RegexAst) -> RegexAst {
        match (l, r) {
            (RegexAst::EmptySet, r) => r,
            (l, RegexAst::EmptySet) => l,
            (l, r) if l == r => l,
            (l, r) => RegexAst::Union(Box::new(l), Box::new(r)),
        }
    }

    pub fn concat(l: RegexAst, r: RegexAst) -> RegexAst {
        match (l, r) {
            (RegexAst::EmptySet, _) | (_, RegexAst::EmptySet) => RegexAst::EmptySet,
            (RegexAst::Epsilon, r) => r,
            (l, RegexAst::Epsilon) => l,
            (l, r) => RegexAst::Concat(Box::new(l), Box::new(r)),
        }
    }

    pub fn star(inner: RegexAst) -> RegexAst {
        match inner {
            RegexAst::EmptySet | RegexAst::Epsilon => RegexAst::Epsilon,
            RegexAst::Star(s) => RegexAst::Star(s),
            // (x + ε)* = x*
            RegexAst::Union(l, r) if *l == RegexAst::Epsilon => RegexAst::star(*r),
            RegexAst::Union(l, r) if *r == RegexAst::Epsilon => RegexAst::star(*l),
            inner => RegexAst::Star(Box::new(inner)),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            RegexAst::Union(..) => 0,
            RegexAst::Concat(..) => 1,
            RegexAst::Star(..) => 2,
            _ => 3,
        }
    }
}

impl fmt::Display for RegexAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn write_child(
            f: &mut fmt::Formatter<'_>,
            child: &RegexAst,
            min_prec: u8,
        ) -> fmt::Result {
            if child.precedence() < min_prec {
                write!(f, "(")?;
                fmt::Display::fmt(child, f)?;
                write!(f, ")")
            } else {
                fmt::Display::fmt(child, f)
            }
        }
        match self {
            RegexAst::EmptySet => write!(f, "#"),
            RegexAst::Epsilon => write!(f, "@"),
            RegexAst::Letter(c) => write!(f, "{c}"),
            RegexAst::Union(l, r) => {
                write_child(f, l, 0)?;
                write!(f, "+")?;
                write_child(f, r, 0)
            }
            RegexAst::Concat(l, r) => {
                write_child(f, l, 1)?;
                write_child(f, r, 1)
            }
            RegexAst::Star(inner) => {
                write_child(f, inner, 3)?;
                write!(f, "*")
            }
        }
    }
}

/// Recursive-descent regex parser; errors carry the byte offset.
pub fn parse_regex(input: &str) -> Result<RegexAst> {
    struct P<'a> {
        bytes: &'a [u8],
        at: usize,
    }
    impl<'a> P<'a> {
        fn skip_ws(&mut self) {
            while self.at < self.bytes.len() && self.bytes[self.at].is_ascii_whitespace() {
                self.at += 1;
            }
        }
        fn peek(&mut self) -> Option<u8> {
            self.skip_ws();
            self.bytes.get(self.at).copied()
        }
        fn union(&mut self) -> Result<RegexAst> {
            let mut node = self.concat()?;
            while self.peek() == Some(b'+') {
                self.at += 1;
                node = RegexAst::Union(Box::new(node), Box::new(self.concat()?));
            }
            Ok(node)
        }
        fn concat(&mut self) -> Result<RegexAst> {
            let mut node = self.starred()?;
            while matches!(self.peek(), Some(c) if c == b'(' || c == b'@' || c == b'#' || c.is_ascii_alphanumeric())
            {
                node = RegexAst::Concat(Box::new(node), Box::new(self.starred()?));
            }
            Ok(node)
        }
        fn starred(&mut self) -> Result<RegexAst> {
            let mut node = self.atom()?;
            while self.peek() == Some(b'*') {
                self.at += 1;
                node = RegexAst::Star(Box::new(node));
            }
            Ok(node)
        }
        fn atom(&mut self) -> Result<RegexAst> {
            match self.peek() {
                Some(b'(') => {
                    self.at += 1;
                    let node = self.union()?;
                    if self.peek() != Some(b')') {
                        return Err(Error::parse(self.at, "expected ')'"));
                    }
                    self.at += 1;
                    Ok(node)
                }
                Some(b'@') => {
                    self.at += 1;
                    Ok(RegexAst::Epsilon)
                }
                Some(b'#') => {
                    self.at += 1;
                    Ok(RegexAst::EmptySet)
                }
                Some(c) if c.is_ascii_alphanumeric() => {
                    self.at += 1;
                    Ok(RegexAst::Letter(c as char))
                }
                Some(c) => Err(Error::parse(
                    self.at,
                    format!("unexpected character {:?}", c as char),
                )),
                None => Err(Error::parse(self.at, "unexpected end of expression")),
            }
        }
    }
    let mut p = P {
        bytes: input.as_bytes(),
        at: 0,
    };
    let node = p.union()?;
    if p.peek().is_some() {
        return Err(Error::parse(p.at, "trailing input after expression"));
    }
    Ok(node)
}

/// A leaf of a compiled operator: a letter or the empty language.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FlatLeaf {
    Letter(char),
    Empty,
}

/// A regular language in single-operator form: an antireflexive relation
/// applied to letter/∅ leaves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatOperator {
    relation: Relation,
    leaves: Vec<FlatLeaf>,
}

impl FlatOperator {
    pub fn new(relation: Relation, leaves: Vec<FlatLeaf>) -> Result<Self> {
        if !relation.is_antireflexive() {
            return Err(Error::invalid(
                "flat operator",
                "relation must be antireflexive",
            ));
        }
        if leaves.len() as u32 != relation.arity() {
            return Err(Error::ArityMismatch {
                expected: relation.arity(),
                got: leaves.len() as u32,
            });
        }
        Ok(FlatOperator { relation, leaves })
    }

    pub fn relation(&self) -> &Relation {
        &self.relation
    }

    pub fn arity(&self) -> u32 {
        self.relation.arity()
    }

    pub fn leaves(&self) -> &[FlatLeaf] {
        &self.leaves
    }

    pub fn to_expression(&self) -> Expression {
        let leaves = self
            .leaves
            .iter()
            .map(|leaf| match leaf {
                FlatLeaf::Letter(c) => Leaf::Letter(c.to_string()),
                FlatLeaf::Empty => Leaf::Empty,
            })
            .collect();
        let root = OperadElement::aref(self.relation.clone()).expect("validated on construction");
        Expression::new(root, leaves).expect("leaf count checked on construction")
    }

    pub fn automaton(&self) -> EpsilonAutomaton {
        build_automaton(&self.to_expression()).expect("flat operators always evaluate")
    }
}

impl fmt::Display for FlatOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "aref[{}]{}(", self.arity(), self.relation.pairs())?;
        for (i, leaf) in self.leaves.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            match leaf {
                FlatLeaf::Letter(c) => write!(f, "{c}")?,
                FlatLeaf::Empty => write!(f, "_")?,
            }
        }
        write!(f, ")")
    }
}

fn pairset(relation: &Relation) -> &PairSet {
    relation.pairs()
}

/// Prepend an ∅ guard slot when the entry state has incoming pairs, so that
/// nothing can re-enter position 1 and leak across a later splice.
fn guard_entry(op: FlatOperator) -> FlatOperator {
    if !op.relation.pairs().iter().any(|p| p.y == 1) {
        return op;
    }
    let mut pairs = dec(1, op.relation.pairs());
    pairs.insert(Pair::new(1, 2));
    let mut leaves = vec![FlatLeaf::Empty];
    leaves.extend(op.leaves);
    FlatOperator::new(Relation::new(op.relation.arity() + 1, pairs).unwrap(), leaves).unwrap()
}

/// Append an ∅ guard slot when the final state has outgoing pairs, so that
/// reaching it cannot resume a loop of the operand.
fn guard_exit(op: FlatOperator) -> FlatOperator {
    let k = op.relation.arity();
    if !op.relation.pairs().iter().any(|p| p.x == k + 1) {
        return op;
    }
    let mut pairs = op.relation.pairs().clone();
    pairs.insert(Pair::new(k + 1, k + 2));
    let mut leaves = op.leaves;
    leaves.push(FlatLeaf::Empty);
    FlatOperator::new(Relation::new(k + 1, pairs).unwrap(), leaves).unwrap()
}

/// Compile a regular expression into single-operator form.
///
/// Atoms compile to the three unary base operators; a binary node joins the
/// two compiled halves around one interposed ∅ slot, decaying the right
/// relation past the left block; a star adds the two wrap-around pairs. The
/// ∅ separators are load-bearing — without them concatenation degrades to
/// its own Kleene plus — so no relation simplification is attempted.
///
/// Soundness of the splices needs two invariants of the operand blocks:
/// a union's left branch must not be re-enterable at position 1 (or a loop
/// of the left branch could jump into the right one), its right branch and a
/// starred operand must not continue past their final state (or the shared
/// final state would resume their loops after a word of the other part).
/// Operands violating these carry wrap-around pairs from an inner star; they
/// are insulated by [`guard_entry`]/[`guard_exit`] slots on demand.
pub fn compile(rx: &RegexAst) -> FlatOperator {
    match rx {
        RegexAst::Letter(c) => FlatOperator::new(
            Relation::empty(1),
            vec![FlatLeaf::Letter(*c)],
        )
        .unwrap(),
        RegexAst::Epsilon => FlatOperator::new(
            Relation::from_pairs(1, [(1, 2)]).unwrap(),
            vec![FlatLeaf::Empty],
        )
        .unwrap(),
        RegexAst::EmptySet => {
            FlatOperator::new(Relation::empty(1), vec![FlatLeaf::Empty]).unwrap()
        }
        RegexAst::Union(l, r) => {
            let l = guard_entry(compile(l));
            let r = guard_exit(compile(r));
            let (k, kp) = (l.arity(), r.arity());
            let mut pairs = pairset(&l.relation).union(&dec(k + 1, pairset(&r.relation)));
            pairs.insert(Pair::new(1, k + 2));
            pairs.insert(Pair::new(k + 1, k + kp + 2));
            let mut leaves = l.leaves;
            leaves.push(FlatLeaf::Empty);
            leaves.extend_from_slice(&r.leaves);
            FlatOperator::new(Relation::new(k + kp + 1, pairs).unwrap(), leaves).unwrap()
        }
        RegexAst::Concat(l, r) => {
            let (l, r) = (compile(l), compile(r));
            let (k, kp) = (l.arity(), r.arity());
            let mut pairs = pairset(&l.relation).union(&dec(k + 1, pairset(&r.relation)));
            pairs.insert(Pair::new(k + 1, k + 2));
            let mut leaves = l.leaves;
            leaves.push(FlatLeaf::Empty);
            leaves.extend_from_slice(&r.leaves);
            FlatOperator::new(Relation::new(k + kp + 1, pairs).unwrap(), leaves).unwrap()
        }
        RegexAst::Star(inner) => {
            let inner = guard_exit(guard_entry(compile(inner)));
            let k = inner.arity();
            let mut pairs = pairset(&inner.relation).clone();
            pairs.insert(Pair::new(k + 1, 1));
            pairs.insert(Pair::new(1, k + 1));
            FlatOperator::new(Relation::new(k, pairs).unwrap(), inner.leaves).unwrap()
        }
    }
}

/// Positions lying strictly inside some accepting path of the ∅-pruned
/// automaton: reachable from the initial state, with at least one outgoing
/// edge into a co-reachable state.
pub fn admissible_positions(f: &FlatOperator) -> BTreeSet<u32> {
    let auto = f.automaton();
    let n = auto.state_count();
    let mut successors: Vec<Vec<u32>> = vec![Vec::new(); n as usize + 1];
    let mut predecessors: Vec<Vec<u32>> = vec![Vec::new(); n as usize + 1];
    for (from, _, to) in auto.letter_edges() {
        successors[*from as usize].push(*to);
        predecessors[*to as usize].push(*from);
    }
    for &(from, to) in auto.epsilon_edges() {
        successors[from as usize].push(to);
        predecessors[to as usize].push(from);
    }

    let sweep = |starts: Vec<u32>, edges: &Vec<Vec<u32>>| -> Vec<bool> {
        let mut mark = vec![false; n as usize + 1];
        let mut stack = starts;
        while let Some(s) = stack.pop() {
            if !mark[s as usize] {
                mark[s as usize] = true;
                stack.extend(edges[s as usize].iter().copied());
            }
        }
        mark
    };
    let reachable = sweep(vec![auto.initial()], &successors);
    let coreachable = sweep(auto.finals().iter().copied().collect(), &predecessors);

    (1..=n)
        .filter(|&s| {
            reachable[s as usize]
                && successors[s as usize]
                    .iter()
                    .any(|&t| coreachable[t as usize])
        })
        .collect()
}

/// `Pref(L)`: admissible positions gain an ε-jump to the final state.
pub fn prefixes(f: &FlatOperator) -> FlatOperator {
    let k = f.arity();
    let mut pairs = f.relation.pairs().clone();
    for i in admissible_positions(f) {
        if i != k + 1 {
            pairs.insert(Pair::new(i, k + 1));
        }
    }
    FlatOperator::new(Relation::new(k, pairs).unwrap(), f.leaves.clone()).unwrap()
}

/// `Suff(L)`: the initial state gains an ε-jump to every admissible position.
pub fn suffixes(f: &FlatOperator) -> FlatOperator {
    let k = f.arity();
    let mut pairs = f.relation.pairs().clone();
    for i in admissible_positions(f) {
        if i != 1 {
            pairs.insert(Pair::new(1, i));
        }
    }
    FlatOperator::new(Relation::new(k, pairs).unwrap(), f.leaves.clone()).unwrap()
}

/// `Fact(L)`: prefixes first, then suffixes.
pub fn factors(f: &FlatOperator) -> FlatOperator {
    suffixes(&prefixes(f))
}

/// `Subw(L)`: every non-∅ slot gains an ε-bypass.
pub fn subwords(f: &FlatOperator) -> FlatOperator {
    let k = f.arity();
    let mut pairs = f.relation.pairs().clone();
    for (slot, leaf) in f.leaves.iter().enumerate() {
        if *leaf != FlatLeaf::Empty {
            let i = slot as u32 + 1;
            pairs.insert(Pair::new(i, i + 1));
        }
    }
    FlatOperator::new(Relation::new(k, pairs).unwrap(), f.leaves.clone()).unwrap()
}

/// The mirror image: flip the relation around the middle and reverse the
/// leaves.
pub fn mirror(f: &FlatOperator) -> FlatOperator {
    let k = f.arity();
    let pairs: PairSet = f
        .relation
        .pairs()
        .iter()
        .map(|p| Pair::new(k + 2 - p.y, k + 2 - p.x))
        .collect();
    let mut leaves = f.leaves.clone();
    leaves.reverse();
    FlatOperator::new(Relation::new(k, pairs).unwrap(), leaves).unwrap()
}

/// The built-in language families on letters `a b c …`.
///
/// * `word-star` — `(a1⋯ak)*`
/// * `alphabet-star` — `(a1+⋯+ak)*`
/// * `prefixes-star` — `(a1+a1a2+⋯+a1⋯ak)*`
/// * `suffixes-star` — `(ak+a(k-1)ak+⋯+a1⋯ak)*`
/// * `descending` — words starting with `a1`, ending with `ak`, whose
///   adjacent letters `ai aj` satisfy `j ≤ i + 1`
pub fn builtin_family(k: u32, which: &str) -> Result<FlatOperator> {
    if k < 1 || k > 26 {
        return Err(Error::invalid("family", "k must be in 1..=26"));
    }
    let leaves: Vec<FlatLeaf> = (0..k)
        .map(|i| FlatLeaf::Letter((b'a' + i as u8) as char))
        .collect();
    let pairs: Vec<(u32, u32)> = match which {
        "1" | "word-star" => vec![(k + 1, 1), (1, k + 1)],
        "2" | "alphabet-star" => {
            let mut v = Vec::new();
            for x in 1..=k + 1 {
                for y in 1..=k + 1 {
                    if x != y {
                        v.push((x, y));
                    }
                }
            }
            v
        }
        "3" | "prefixes-star" => {
            let mut v = vec![(k + 1, 1)];
            v.extend((1..=k).map(|i| (i, k + 1)));
            v
        }
        "4" | "suffixes-star" => {
            let mut v = vec![(k + 1, 1)];
            v.extend((1..=k).map(|i| (1, i + 1)));
            v
        }
        "5" | "descending" => (1..=k).map(|i| (i + 1, i)).collect(),
        other => {
            return Err(Error::UnknownFamily {
                name: other.to_string(),
            })
        }
    };
    FlatOperator::new(Relation::from_pairs(k, pairs)?, leaves)
}

/// Synthesize a regular expression for an automaton by state elimination.
/// Labels must be single characters (as produced by letter leaves).
pub fn synthesize_regex(auto: &EpsilonAutomaton) -> RegexAst {
    use std::collections::BTreeMap;

    let n = auto.state_count();
    let start = 0u32;
    let accept = n + 1;
    let mut edges: BTreeMap<(u32, u32), RegexAst> = BTreeMap::new();
    let add = |edges: &mut BTreeMap<(u32, u32), RegexAst>, from: u32, to: u32, rx: RegexAst| {
        let entry = edges.remove(&(from, to)).unwrap_or(RegexAst::EmptySet);
        edges.insert((from, to), RegexAst::union(entry, rx));
    };

    add(&mut edges, start, auto.initial(), RegexAst::Epsilon);
    for &f in auto.finals() {
        add(&mut edges, f, accept, RegexAst::Epsilon);
    }
    for (from, label, to) in auto.letter_edges() {
        let mut chars = label.chars();
        let c = chars.next().expect("nonempty label");
        assert!(
            chars.next().is_none(),
            "regex synthesis needs single-character labels"
        );
        add(&mut edges, *from, *to, RegexAst::Letter(c));
    }
    for &(from, to) in auto.epsilon_edges() {
        add(&mut edges, from, to, RegexAst::Epsilon);
    }

    for x in 1..=n {
        let self_loop = edges.remove(&(x, x)).unwrap_or(RegexAst::EmptySet);
        let loop_star = RegexAst::star(self_loop);
        let incoming: Vec<(u32, RegexAst)> = edges
            .iter()
            .filter(|((_, to), _)| *to == x)
            .map(|((from, _), rx)| (*from, rx.clone()))
            .collect();
        let outgoing: Vec<(u32, RegexAst)> = edges
            .iter()
            .filter(|((from, _), _)| *from == x)
            .map(|((_, to), rx)| (*to, rx.clone()))
            .collect();
        edges.retain(|(from, to), _| *from != x && *to != x);
        for (a, rin) in &incoming {
            for (b, rout) in &outgoing {
                let through = RegexAst::concat(
                    rin.clone(),
                    RegexAst::concat(loop_star.clone(), rout.clone()),
                );
                add(&mut edges, *a, *b, through);
            }
        }
    }
    edges
        .remove(&(start, accept))
        .unwrap_or(RegexAst::EmptySet)
}
