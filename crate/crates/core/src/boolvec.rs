//! The operad of sets of boolean vectors and the bridge from multi-tildes:
//! disjoint tilde selections turn into 0/1 erasure masks, and the mask action
//! agrees with the grammar action of the corresponding double multi-tilde.

use std::collections::BTreeSet;
use std::fmt;

use crate::automaton::Word;
use crate::error::{Error, Result};
use crate::language::{build_automaton, Expression, Leaf};
use crate::operad::OperadElement;
use crate::relation::{MultiTilde, Pair, PairSet};

/// A set of fixed-length 0/1 vectors; component `j` (1-based) is stored at
/// bit `j - 1`.
#[derive(Clone, PartialEq, Eq)]
pub struct BoolVectorSet {
    arity: u32,
    vectors: BTreeSet<u32>,
}

impl BoolVectorSet {
    pub fn new(arity: u32, vectors: impl IntoIterator<Item = u32>) -> Result<Self> {
        if arity == 0 || arity > 31 {
            return Err(Error::invalid("vector set", "arity must be in 1..=31"));
        }
        let mask = (1u32 << arity) - 1;
        let vectors: BTreeSet<u32> = vectors.into_iter().collect();
        if vectors.iter().any(|v| v & !mask != 0) {
            return Err(Error::invalid("vector set", "vector longer than arity"));
        }
        Ok(BoolVectorSet { arity, vectors })
    }

    pub fn from_bits(arity: u32, vectors: &[&[u8]]) -> Self {
        let vectors = vectors.iter().map(|bits| {
            assert_eq!(bits.len() as u32, arity);
            bits.iter()
                .enumerate()
                .fold(0u32, |acc, (j, &b)| acc | ((b as u32 & 1) << j))
        });
        BoolVectorSet::new(arity, vectors).expect("literal vectors fit the arity")
    }

    pub fn arity(&self) -> u32 {
        self.arity
    }

    pub fn vectors(&self) -> impl Iterator<Item = u32> + '_ {
        self.vectors.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// The operad unit `{[1]}`.
    pub fn identity() -> Self {
        BoolVectorSet::new(1, [1]).unwrap()
    }

    /// Act on letters: each vector keeps the letters at its 1-positions.
    pub fn act_on_letters(&self, letters: &[String]) -> BTreeSet<Word> {
        assert_eq!(letters.len() as u32, self.arity);
        self.vectors
            .iter()
            .map(|v| {
                letters
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| v & (1 << j) != 0)
                    .map(|(_, l)| l.clone())
                    .collect()
            })
            .collect()
    }
}

impl fmt::Debug for BoolVectorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.vectors.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.arity {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", (v >> j) & 1)?;
            }
            write!(f, "]")?;
        }
        write!(f, "}}")
    }
}

/// Partial composition: splice `e_k · f` into position `k` of every `e`.
pub fn bool_compose(e: &BoolVectorSet, k: u32, f: &BoolVectorSet) -> Result<BoolVectorSet> {
    if k < 1 || k > e.arity {
        return Err(Error::PositionOutOfRange {
            position: k,
            arity: e.arity,
        });
    }
    let n = f.arity;
    let low_mask = (1u32 << (k - 1)) - 1;
    let mut vectors = BTreeSet::new();
    for &ev in &e.vectors {
        let low = ev & low_mask;
        let high = ev >> k;
        let scalar = (ev >> (k - 1)) & 1;
        for &fv in &f.vectors {
            let mid = if scalar == 1 { fv } else { 0 };
            vectors.insert(low | (mid << (k - 1)) | (high << (k - 1 + n)));
        }
    }
    BoolVectorSet::new(e.arity + n - 1, vectors)
}

/// Subsets of a multi-tilde whose intervals are pairwise disjoint, rendered
/// as erasure masks: positions covered by a chosen interval go to 0.
pub fn tilde_to_vectors(t: &MultiTilde) -> BoolVectorSet {
    let pairs: Vec<Pair> = t.pairs().iter().collect();
    let interval_mask = |p: Pair| -> u32 {
        let mut m = 0u32;
        for j in p.x..=p.y {
            m |= 1 << (j - 1);
        }
        m
    };
    let masks: Vec<u32> = pairs.iter().map(|&p| interval_mask(p)).collect();
    let full = (1u32 << t.arity()) - 1;
    let mut vectors = BTreeSet::new();
    for subset in 0u32..(1 << pairs.len()) {
        let mut covered = 0u32;
        let mut disjoint = true;
        for (idx, &mask) in masks.iter().enumerate() {
            if subset & (1 << idx) != 0 {
                if covered & mask != 0 {
                    disjoint = false;
                    break;
                }
                covered |= mask;
            }
        }
        if disjoint {
            vectors.insert(full & !covered);
        }
    }
    BoolVectorSet {
        arity: t.arity(),
        vectors,
    }
}

/// Smallest closed multi-tilde containing `t`: adjacent intervals
/// `(i, j), (j+1, ℓ)` force the spanning interval `(i, ℓ)`.
pub fn closed_normal_form(t: &MultiTilde) -> MultiTilde {
    let mut pairs: BTreeSet<Pair> = t.pairs().iter().collect();
    loop {
        let mut added = false;
        let snapshot: Vec<Pair> = pairs.iter().copied().collect();
        for &a in &snapshot {
            for &b in &snapshot {
                if b.x == a.y + 1 && pairs.insert(Pair::new(a.x, b.y)) {
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }
    MultiTilde::new(t.arity(), pairs.into_iter().collect::<PairSet>())
        .expect("closure stays within the arity")
}

/// The 0/1 language of the erasure grammar: from state `i`, emit `1` and move
/// on, or take a tilde `(i, y)` emitting `y - i + 1` zeros. All words have
/// length `arity`; they are returned in the same bit encoding as
/// [`BoolVectorSet`].
pub fn l01_language(t: &MultiTilde) -> BTreeSet<u32> {
    let k = t.arity();
    let mut out = BTreeSet::new();
    // (state, bits so far); bit j-1 = letter emitted at position j.
    let mut stack: Vec<(u32, u32)> = vec![(1, 0)];
    let mut seen = BTreeSet::new();
    while let Some((state, bits)) = stack.pop() {
        if !seen.insert((state, bits)) {
            continue;
        }
        if state == k + 1 {
            out.insert(bits);
            continue;
        }
        stack.push((state + 1, bits | (1 << (state - 1))));
        for p in t.pairs().iter() {
            if p.x == state {
                // zeros stay zero in the bit encoding
                stack.push((p.y + 1, bits));
            }
        }
    }
    out
}

/// The grammar-side language of `(T, ∅)` on the given letters.
pub fn grammar_action_words(t: &MultiTilde, letters: &[String]) -> Result<BTreeSet<Word>> {
    let root = OperadElement::MultiTilde(t.clone());
    let leaves = letters
        .iter()
        .map(|l| Leaf::Letter(l.clone()))
        .collect::<Vec<_>>();
    let auto = build_automaton(&Expression::new(root, leaves)?)?;
    Ok(auto.words_up_to(t.arity() as usize).into_iter().collect())
}

/// Check that the vector action of `V(T)` and the grammar action of `(T, ∅)`
/// denote the same words on distinct letters, and that the 0/1 language is
/// invariant under taking the closed normal form.
pub fn tilde_action_agreement(t: &MultiTilde) -> Result<bool> {
    let letters: Vec<String> = (1..=t.arity()).map(|i| format!("a{i}")).collect();
    let via_vectors = tilde_to_vectors(t).act_on_letters(&letters);
    let via_grammar = grammar_action_words(t, &letters)?;
    let closure_invariant = l01_language(&closed_normal_form(t)) == l01_language(t);
    Ok(via_vectors == via_grammar && closure_invariant)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operad::compose_multitilde;

    fn tilde(arity: u32, ps: &[(u32, u32)]) -> MultiTilde {
        MultiTilde::from_pairs(arity, ps.iter().copied()).unwrap()
    }

    #[test]
    fn identity_splices_neutrally() {
        let e = BoolVectorSet::from_bits(2, &[&[1, 0], &[1, 1]]);
        for k in 1..=2 {
            assert_eq!(bool_compose(&e, k, &BoolVectorSet::identity()).unwrap(), e);
        }
        assert_eq!(
            bool_compose(&BoolVectorSet::identity(), 1, &e).unwrap(),
            e
        );
    }

    #[test]
    fn scalar_zero_wipes_the_spliced_block() {
        let e = BoolVectorSet::from_bits(2, &[&[1, 0]]);
        let f = BoolVectorSet::from_bits(2, &[&[1, 1]]);
        assert_eq!(
            bool_compose(&e, 1, &f).unwrap(),
            BoolVectorSet::from_bits(3, &[&[1, 1, 0]])
        );
        let z = BoolVectorSet::from_bits(2, &[&[0, 1]]);
        assert_eq!(
            bool_compose(&z, 1, &f).unwrap(),
            BoolVectorSet::from_bits(3, &[&[0, 0, 1]])
        );
    }

    #[test]
    fn vectors_of_simple_tildes() {
        assert_eq!(
            tilde_to_vectors(&MultiTilde::empty(3)),
            BoolVectorSet::from_bits(3, &[&[1, 1, 1]])
        );
        assert_eq!(
            tilde_to_vectors(&tilde(1, &[(1, 1)])),
            BoolVectorSet::from_bits(1, &[&[1], &[0]])
        );
        // Overlapping tildes cannot both be selected.
        assert_eq!(
            tilde_to_vectors(&tilde(2, &[(1, 2), (2, 2)])),
            BoolVectorSet::from_bits(2, &[&[1, 1], &[0, 0], &[1, 0]])
        );
    }

    #[test]
    fn vector_morphism_on_a_composition() {
        let a = tilde(2, &[(1, 1), (2, 2)]);
        let b = tilde(2, &[(1, 2)]);
        for i in 1..=2 {
            let composed = compose_multitilde(&a, i, &b).unwrap();
            assert_eq!(
                tilde_to_vectors(&composed),
                bool_compose(&tilde_to_vectors(&a), i, &tilde_to_vectors(&b)).unwrap()
            );
        }
    }

    #[test]
    fn closed_normal_form_spans_adjacent_tildes() {
        let t = tilde(3, &[(1, 1), (2, 3)]);
        let closed = closed_normal_form(&t);
        assert_eq!(closed, tilde(3, &[(1, 1), (2, 3), (1, 3)]));
        assert_eq!(l01_language(&closed), l01_language(&t));
        // Already-closed inputs are fixed points.
        assert_eq!(closed_normal_form(&closed), closed);
    }

    #[test]
    fn action_agreement_small_cases() {
        assert!(tilde_action_agreement(&MultiTilde::empty(2)).unwrap());
        assert!(tilde_action_agreement(&tilde(2, &[(1, 2)])).unwrap());
        // The (1,2) tilde on two letters gives exactly {a1a2, ε}.
        let words = tilde_to_vectors(&tilde(2, &[(1, 2)]))
            .act_on_letters(&["a1".into(), "a2".into()]);
        assert_eq!(words.len(), 2);
        assert!(words.contains(&vec![]));
        assert!(words.contains(&vec!["a1".to_string(), "a2".to_string()]));
    }

    #[test]
    fn position_bounds_are_checked() {
        let e = BoolVectorSet::identity();
        assert!(bool_compose(&e, 2, &e).is_err());
        assert!(BoolVectorSet::new(2, [7]).is_err());
    }
}
