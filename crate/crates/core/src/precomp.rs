//! The shift-generator monoid, precompositions over filtered commutative
//! monoids, the construction turning a precomposition into an operad, and
//! quotients by idempotent morphisms.
//!
//! The framework is an interface with registered instances (the multi-tilde
//! carrier and the relation carrier), not a term-rewriting engine: the
//! carriers in this crate are all concrete pair sets with decidable equality.

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::relation::{shift_diam, shift_tilde, Pair, PairSet};

/// One shift generator `∇_{i,k}` (`i` may be any integer, `k ≥ 1`).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoxGen {
    pub index: i64,
    pub amount: u32,
}

impl BoxGen {
    pub fn new(index: i64, amount: u32) -> Self {
        assert!(amount >= 1, "shift amount must be positive");
        BoxGen { index, amount }
    }
}

impl fmt::Debug for BoxGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "∇({},{})", self.index, self.amount)
    }
}

/// A word in the shift monoid. Generators compose like functions: the last
/// generator of the word is applied first.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct BoxWord {
    pub gens: Vec<BoxGen>,
}

impl BoxWord {
    pub fn new(gens: impl IntoIterator<Item = BoxGen>) -> Self {
        BoxWord {
            gens: gens.into_iter().collect(),
        }
    }

    pub fn identity() -> Self {
        BoxWord::default()
    }
}

/// Canonical representative of a word's class under the presented relations:
///
/// 1. negative indices collapse to zero;
/// 2. amount-1 generators vanish;
/// 3. adjacent generators merge when the later one lands inside the block the
///    earlier one inserted;
/// 4. the commutation relation is applied oriented so that first indices
///    descend from left to right.
///
/// The presentation fixes no normal form, so this canonicalization is
/// validated by action: a word and its normal form act identically on every
/// registered carrier (see the tests).
pub fn box_normalize(word: &BoxWord) -> BoxWord {
    let mut gens: Vec<BoxGen> = word
        .gens
        .iter()
        .map(|g| BoxGen::new(g.index.max(0), g.amount))
        .filter(|g| g.amount > 1)
        .collect();

    // Merge / swap passes until a fixpoint. Words in practice are short; the
    // cap guards against a non-terminating orientation bug.
    let mut budget = 10_000usize;
    loop {
        let mut changed = false;
        let mut at = 0;
        while at + 1 < gens.len() {
            let left = gens[at];
            let right = gens[at + 1];
            // Merge when `left.index = right.index + j` with `0 ≤ j < right.amount`.
            let j = left.index - right.index;
            if j >= 0 && (j as u32) < right.amount {
                gens[at] = BoxGen::new(right.index, left.amount + right.amount - 1);
                gens.remove(at + 1);
                changed = true;
                continue;
            }
            // Commute when the left (applied later) index does not exceed the
            // right one: move the larger first index leftwards.
            if left.index <= right.index {
                gens[at] = BoxGen::new(right.index + left.amount as i64 - 1, right.amount);
                gens[at + 1] = left;
                changed = true;
            }
            at += 1;
        }
        if !changed {
            return BoxWord { gens };
        }
        budget -= 1;
        assert!(budget > 0, "box word normalization failed to converge");
    }
}

/// A precomposition: a filtered commutative monoid of carrier elements
/// together with the shift action realizing the generator monoid.
pub trait Precomposition {
    type Elem: Clone + Eq + fmt::Debug;

    fn unit() -> Self::Elem;
    fn combine(a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn shift(index: i64, amount: u32, elem: &Self::Elem) -> Self::Elem;
    /// Smallest grade whose component contains the element.
    fn min_grade(elem: &Self::Elem) -> u32;
    /// A random element of grade at most `grade`, for sampled law checks.
    fn sample(rng: &mut dyn rand::RngCore, grade: u32) -> Self::Elem;
}

/// Apply a box word to a carrier element (rightmost generator first).
pub fn apply_box_word<P: Precomposition>(word: &BoxWord, elem: &P::Elem) -> P::Elem {
    let mut value = elem.clone();
    for g in word.gens.iter().rev() {
        value = P::shift(g.index, g.amount, &value);
    }
    value
}

/// The multi-tilde carrier: interval pair sets under union.
pub struct TildeCarrier;

impl Precomposition for TildeCarrier {
    type Elem = PairSet;

    fn unit() -> PairSet {
        PairSet::new()
    }

    fn combine(a: &PairSet, b: &PairSet) -> PairSet {
        a.union(b)
    }

    fn shift(index: i64, amount: u32, elem: &PairSet) -> PairSet {
        shift_tilde(index, amount, elem)
    }

    fn min_grade(elem: &PairSet) -> u32 {
        elem.iter().map(|p| p.y).max().unwrap_or(1)
    }

    fn sample(rng: &mut dyn rand::RngCore, grade: u32) -> PairSet {
        let n = rng.gen_range(0..=4);
        (0..n)
            .map(|_| {
                let x = rng.gen_range(1..=grade);
                let y = rng.gen_range(x..=grade);
                Pair::new(x, y)
            })
            .collect()
    }
}

/// The relation carrier: off-diagonal pair sets under union, shifted
/// coordinatewise. Restricting to `x < y` pairs gives the order-compatible
/// instance; the shift is the same map.
pub struct DiamCarrier;

impl Precomposition for DiamCarrier {
    type Elem = PairSet;

    fn unit() -> PairSet {
        PairSet::new()
    }

    fn combine(a: &PairSet, b: &PairSet) -> PairSet {
        a.union(b)
    }

    fn shift(index: i64, amount: u32, elem: &PairSet) -> PairSet {
        shift_diam(index, amount, elem)
    }

    fn min_grade(elem: &PairSet) -> u32 {
        elem.iter().map(|p| p.x.max(p.y)).max().unwrap_or(2).max(2) - 1
    }

    fn sample(rng: &mut dyn rand::RngCore, grade: u32) -> PairSet {
        let n = rng.gen_range(0..=4);
        (0..n)
            .filter_map(|_| {
                let x = rng.gen_range(1..=grade + 1);
                let y = rng.gen_range(1..=grade + 1);
                (x != y).then_some(Pair::new(x, y))
            })
            .collect()
    }
}

/// A carrier element pinned to a graded component.
pub struct Graded<P: Precomposition> {
    arity: u32,
    payload: P::Elem,
}

impl<P: Precomposition> Clone for Graded<P> {
    fn clone(&self) -> Self {
        Graded {
            arity: self.arity,
            payload: self.payload.clone(),
        }
    }
}

impl<P: Precomposition> PartialEq for Graded<P> {
    fn eq(&self, other: &Self) -> bool {
        self.arity == other.arity && self.payload == other.payload
    }
}

impl<P: Precomposition> Eq for Graded<P> {}

impl<P: Precomposition> fmt::Debug for Graded<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a^({}){:?}", self.arity, self.payload)
    }
}

impl<P: Precomposition> Graded<P> {
    pub fn new(arity: u32, payload: P::Elem) -> Result<Self> {
        if arity == 0 {
            return Err(Error::invalid("graded element", "arity must be positive"));
        }
        if P::min_grade(&payload) > arity {
            return Err(Error::invalid(
                "graded element",
                format!(
                    "payload has grade {} exceeding arity {arity}",
                    P::min_grade(&payload)
                ),
            ));
        }
        Ok(Graded { arity, payload })
    }

    pub fn identity() -> Self {
        Graded {
            arity: 1,
            payload: P::unit(),
        }
    }

    pub fn arity(&self) -> u32 {
        self.arity
    }

    pub fn payload(&self) -> &P::Elem {
        &self.payload
    }

    /// Guarded shift: the identity when the index exceeds the declared grade.
    fn shift(&self, index: i64, amount: u32) -> P::Elem {
        if index > self.arity as i64 {
            self.payload.clone()
        } else {
            P::shift(index, amount, &self.payload)
        }
    }
}

/// Partial composition in the operad built from a precomposition:
/// stretch the host across the plugged component, decay the guest into place,
/// and combine.
pub fn op_compose<P: Precomposition>(
    a: &Graded<P>,
    i: u32,
    b: &Graded<P>,
) -> Result<Graded<P>> {
    if i < 1 || i > a.arity {
        return Err(Error::PositionOutOfRange {
            position: i,
            arity: a.arity,
        });
    }
    let stretched = a.shift(i as i64, b.arity);
    let decayed = b.shift(0, i);
    Graded::new(a.arity + b.arity - 1, P::combine(&stretched, &decayed))
}

/// A quotient of a precomposition by an idempotent grade-preserving morphism
/// commuting with the shifts. Elements are represented by their images.
pub struct Quotient<P: Precomposition, G: Fn(&P::Elem) -> P::Elem> {
    gamma: G,
    _marker: std::marker::PhantomData<P>,
}

impl<P: Precomposition, G: Fn(&P::Elem) -> P::Elem> Quotient<P, G> {
    /// Check the quotient preconditions on sampled elements before accepting
    /// the morphism; a violating witness is reported in the error.
    pub fn new(gamma: G, rng: &mut dyn rand::RngCore, samples: usize) -> Result<Self> {
        for _ in 0..samples {
            let grade = rng.gen_range(1..=4u32);
            let elem = P::sample(rng, grade);
            let once = gamma(&elem);
            let twice = gamma(&once);
            if once != twice {
                return Err(Error::QuotientPrecondition(format!(
                    "not idempotent on {elem:?}: γ = {once:?}, γ² = {twice:?}"
                )));
            }
            if P::min_grade(&once) > grade.max(P::min_grade(&elem)) {
                return Err(Error::QuotientPrecondition(format!(
                    "grade not preserved on {elem:?}"
                )));
            }
            let index = rng.gen_range(0..=5i64);
            let amount = rng.gen_range(1..=4u32);
            let shifted_then_gamma = gamma(&P::shift(index, amount, &elem));
            let gamma_then_shifted = P::shift(index, amount, &once);
            if shifted_then_gamma != gamma_then_shifted {
                return Err(Error::QuotientPrecondition(format!(
                    "does not commute with ∇({index},{amount}) on {elem:?}"
                )));
            }
        }
        Ok(Quotient {
            gamma,
            _marker: std::marker::PhantomData,
        })
    }

    pub fn classify(&self, elem: &P::Elem) -> P::Elem {
        (self.gamma)(elem)
    }

    pub fn class_of(&self, g: &Graded<P>) -> Result<Graded<P>> {
        Graded::new(g.arity(), (self.gamma)(g.payload()))
    }

    /// Compose representatives, then classify. By the congruence property the
    /// result does not depend on the chosen representatives.
    pub fn compose(&self, a: &Graded<P>, i: u32, b: &Graded<P>) -> Result<Graded<P>> {
        let composed = op_compose(a, i, b)?;
        self.class_of(&composed)
    }
}
