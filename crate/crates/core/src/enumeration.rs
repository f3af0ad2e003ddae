//! Exhaustive generation of the quasiorder operads at desk scale, the census
//! of their denoted languages, and the machine check that distinct operators
//! denote distinct languages.

use rayon::prelude::*;

use crate::automaton::{display_word, language_equivalent, EpsilonAutomaton, LanguageCmp, Word};
use crate::error::{Error, Result};
use crate::language::{build_automaton, Expression, Leaf};
use crate::operad::{OperadElement, QuasiOrder};
use crate::regop::synthesize_regex;
use crate::relation::{Pair, PairSet, Relation};

/// Largest `k` the enumerator accepts without the override flag.
pub const QOSET_GUARD: u32 = 4;

/// All quasiorders on `{1, …, k+1}`, generated by filtering the off-diagonal
/// subset lattice for closedness, in canonical (sorted) order.
///
/// The counts match the labeled-topology numbers: 4, 29, 355, 6942, …
pub fn enumerate_qoset(k: u32, allow_large: bool) -> Result<Vec<QuasiOrder>> {
    let limit = if allow_large { 5 } else { QOSET_GUARD };
    if k == 0 || k > limit {
        return Err(Error::EnumerationGuard { k, limit });
    }
    let points = k + 1;
    // Off-diagonal pair universe and, per pair, the closure obligations it
    // participates in: (p, q) chained implies a required pair r.
    let mut universe: Vec<Pair> = Vec::new();
    for x in 1..=points {
        for y in 1..=points {
            if x != y {
                universe.push(Pair::new(x, y));
            }
        }
    }
    let index_of = |p: Pair| universe.iter().position(|&q| q == p).unwrap();
    // chains[p] = list of (q, r): if p and q are present, r must be.
    let mut chains: Vec<Vec<(usize, usize)>> = vec![Vec::new(); universe.len()];
    for (pi, p) in universe.iter().enumerate() {
        for q in universe.iter() {
            if p.y == q.x && p.x != q.y {
                chains[pi].push((index_of(*q), index_of(Pair::new(p.x, q.y))));
            }
        }
    }

    let total = 1u64 << universe.len();
    let is_closed = |mask: u64| -> bool {
        let mut bits = mask;
        while bits != 0 {
            let pi = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            for &(qi, ri) in &chains[pi] {
                if mask & (1 << qi) != 0 && mask & (1 << ri) == 0 {
                    return false;
                }
            }
        }
        true
    };

    let chunk = 1u64 << universe.len().min(16);
    let masks: Vec<u64> = (0..total.div_ceil(chunk))
        .into_par_iter()
        .flat_map_iter(|block| {
            let start = block * chunk;
            let end = (start + chunk).min(total);
            (start..end).filter(|&mask| is_closed(mask)).collect::<Vec<_>>()
        })
        .collect();

    let mut out: Vec<QuasiOrder> = masks
        .into_iter()
        .map(|mask| {
            let pairs: PairSet = universe
                .iter()
                .enumerate()
                .filter(|(pi, _)| mask & (1 << pi) != 0)
                .map(|(_, &p)| p)
                .collect();
            QuasiOrder::from_off_diagonal(&Relation::new(k, pairs).expect("pairs in range"))
                .expect("closed masks give quasiorders")
        })
        .collect();
    out.sort_by(|a, b| {
        (a.base().pairs().len(), a.base().pairs())
            .cmp(&(b.base().pairs().len(), b.base().pairs()))
    });
    Ok(out)
}

/// One census row: a quasiorder, the automaton of its action on the chosen
/// letters, and a synthesized regular expression for display.
pub struct CensusEntry {
    pub quasiorder: QuasiOrder,
    pub automaton: EpsilonAutomaton,
    pub regex: String,
}

/// The complete census of `QOSet_k` languages over the given letters.
pub struct Census {
    pub k: u32,
    pub letters: Vec<String>,
    pub entries: Vec<CensusEntry>,
}

/// Largest `k` the census accepts.
pub const CENSUS_GUARD: u32 = 3;

/// The automaton a quasiorder denotes on the given letters.
pub fn quasiorder_automaton(q: &QuasiOrder, letters: &[String]) -> Result<EpsilonAutomaton> {
    let leaves = letters.iter().map(|l| Leaf::Letter(l.clone())).collect();
    build_automaton(&Expression::new(
        OperadElement::QuasiOrder(q.clone()),
        leaves,
    )?)
}

pub fn census(k: u32, letters: &[String]) -> Result<Census> {
    if k == 0 || k > CENSUS_GUARD {
        return Err(Error::EnumerationGuard {
            k,
            limit: CENSUS_GUARD,
        });
    }
    if letters.len() as u32 != k {
        return Err(Error::ArityMismatch {
            expected: k,
            got: letters.len() as u32,
        });
    }
    let entries = enumerate_qoset(k, false)?
        .into_iter()
        .map(|quasiorder| {
            let automaton = quasiorder_automaton(&quasiorder, letters)?;
            let regex = synthesize_regex(&automaton).to_string();
            Ok(CensusEntry {
                quasiorder,
                automaton,
                regex,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Census {
        k,
        letters: letters.to_vec(),
        entries,
    })
}

/// Outcome of the faithfulness check at one arity.
pub struct FaithfulnessReport {
    pub k: u32,
    pub pairs_checked: u64,
    /// Longest theorem-constructed witness word observed.
    pub max_witness_len: usize,
    /// Longest shortest-counterexample observed.
    pub max_counterexample_len: usize,
    /// Pairs found language-equivalent — faithfulness violations.
    pub violations: Vec<(usize, usize)>,
}

impl FaithfulnessReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// The witness word for a pair `(i, j)` of the symmetric difference:
/// `a1 … a(i-1) aj a(j+1) … ak`.
pub fn theorem_witness(k: u32, i: u32, j: u32, letters: &[String]) -> Word {
    let mut word = Vec::new();
    for s in 1..i {
        word.push(letters[(s - 1) as usize].clone());
    }
    for s in j..=k {
        word.push(letters[(s - 1) as usize].clone());
    }
    word
}

/// Lexicographically smallest pair of `q1 ∖ q2`, falling back to `q2 ∖ q1`,
/// along with which side contains it.
fn distinguishing_pair(q1: &QuasiOrder, q2: &QuasiOrder) -> Option<(Pair, bool)> {
    let d12 = q1
        .base()
        .pairs()
        .iter()
        .find(|p| !q2.base().pairs().contains(*p));
    if let Some(p) = d12 {
        return Some((p, true));
    }
    q2.base()
        .pairs()
        .iter()
        .find(|p| !q1.base().pairs().contains(*p))
        .map(|p| (p, false))
}

/// Verify faithfulness at arity `k`: every unordered pair of quasiorders is
/// (a) distinguished by the theorem's constructed witness word, checked by
/// direct membership, and (b) confirmed language-inequivalent by the
/// equivalence decision procedure, recording the shortest counterexample.
pub fn verify_faithfulness(k: u32) -> Result<FaithfulnessReport> {
    if k == 0 || k > CENSUS_GUARD {
        return Err(Error::EnumerationGuard {
            k,
            limit: CENSUS_GUARD,
        });
    }
    let letters: Vec<String> = (1..=k).map(|i| format!("a{i}")).collect();
    let qs = enumerate_qoset(k, false)?;
    let automata: Vec<EpsilonAutomaton> = qs
        .iter()
        .map(|q| quasiorder_automaton(q, &letters))
        .collect::<Result<Vec<_>>>()?;

    struct Acc {
        pairs: u64,
        max_witness: usize,
        max_counter: usize,
        violations: Vec<(usize, usize)>,
    }
    let merged = (0..qs.len())
        .into_par_iter()
        .map(|a| {
            let mut acc = Acc {
                pairs: 0,
                max_witness: 0,
                max_counter: 0,
                violations: Vec::new(),
            };
            for b in a + 1..qs.len() {
                acc.pairs += 1;
                let (pair, in_first) = distinguishing_pair(&qs[a], &qs[b])
                    .expect("enumerated quasiorders are distinct");
                let witness = theorem_witness(k, pair.x, pair.y, &letters);
                let (inside, outside) = if in_first { (a, b) } else { (b, a) };
                let accepted = automata[inside].accepts(&witness).unwrap_or(false);
                let rejected = !automata[outside].accepts(&witness).unwrap_or(true);
                if !(accepted && rejected) {
                    acc.violations.push((a, b));
                    continue;
                }
                acc.max_witness = acc.max_witness.max(witness.len());
                match language_equivalent(&automata[a], &automata[b]) {
                    LanguageCmp::Equivalent => acc.violations.push((a, b)),
                    LanguageCmp::Distinguished(word) => {
                        acc.max_counter = acc.max_counter.max(word.len());
                    }
                }
            }
            acc
        })
        .reduce(
            || Acc {
                pairs: 0,
                max_witness: 0,
                max_counter: 0,
                violations: Vec::new(),
            },
            |mut x, y| {
                x.pairs += y.pairs;
                x.max_witness = x.max_witness.max(y.max_witness);
                x.max_counter = x.max_counter.max(y.max_counter);
                x.violations.extend(y.violations);
                x
            },
        );

    Ok(FaithfulnessReport {
        k,
        pairs_checked: merged.pairs,
        max_witness_len: merged.max_witness,
        max_counterexample_len: merged.max_counter,
        violations: merged.violations,
    })
}

/// Table rendering of a census (`relation TAB regex` per row).
pub fn census_table(census: &Census) -> String {
    let mut out = String::new();
    for entry in &census.entries {
        out.push_str(&format!(
            "{}\t{}\n",
            entry.quasiorder.off_diagonal().pairs(),
            entry.regex
        ));
    }
    out
}

/// JSON rendering of a census.
pub fn census_json(census: &Census) -> String {
    use serde::Serialize;
    #[derive(Serialize)]
    struct Row {
        relation: String,
        regex: String,
        words_up_to_4: Vec<String>,
    }
    #[derive(Serialize)]
    struct Doc {
        k: u32,
        letters: Vec<String>,
        count: usize,
        entries: Vec<Row>,
    }
    let doc = Doc {
        k: census.k,
        letters: census.letters.clone(),
        count: census.entries.len(),
        entries: census
            .entries
            .iter()
            .map(|e| Row {
                relation: e.quasiorder.off_diagonal().pairs().to_string(),
                regex: e.regex.clone(),
                words_up_to_4: e
                    .automaton
                    .words_up_to(4)
                    .iter()
                    .map(|w| display_word(w))
                    .collect(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("census serializes")
}
