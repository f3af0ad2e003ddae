//! Integer-pair relations on `{1, …, k+1}` together with the shift and decay
//! operators and the closure maps every operad in this crate is built from.
//!
//! Positions are 1-based throughout; position `arity + 1` is the final node of
//! the associated automata. Pair sets are kept sorted so equality is
//! structural and printed literals are canonical.

use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Pairs are stored packed as `x << 32 | y`, so the numeric order of the key
/// is the lexicographic order of the pair and decaying both coordinates is a
/// single addition. Inline capacity is sized so that compositions in the law
/// sweeps stay off the heap (two levels of ≤3-pair compositions reach 9
/// pairs).
type Key = u64;
type KeyVec = SmallVec<[Key; 12]>;

#[inline]
const fn key_of(x: u32, y: u32) -> Key {
    ((x as u64) << 32) | y as u64
}

/// A 1-based position pair.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pair {
    pub x: u32,
    pub y: u32,
}

impl Pair {
    pub const fn new(x: u32, y: u32) -> Self {
        Pair { x, y }
    }

    #[inline]
    const fn key(self) -> Key {
        key_of(self.x, self.y)
    }

    #[inline]
    const fn from_key(key: Key) -> Pair {
        Pair {
            x: (key >> 32) as u32,
            y: key as u32,
        }
    }
}

impl fmt::Debug for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// A finite set of pairs, stored sorted and deduplicated.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairSet {
    keys: KeyVec,
}

impl PairSet {
    pub fn new() -> Self {
        PairSet::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut v: KeyVec = pairs.into_iter().map(|(x, y)| key_of(x, y)).collect();
        v.sort_unstable();
        v.dedup();
        PairSet { keys: v }
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn contains(&self, pair: Pair) -> bool {
        self.keys.binary_search(&pair.key()).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Pair> + '_ {
        self.keys.iter().map(|&k| Pair::from_key(k))
    }

    pub fn insert(&mut self, pair: Pair) {
        if let Err(at) = self.keys.binary_search(&pair.key()) {
            self.keys.insert(at, pair.key());
        }
    }

    /// Set union, merging two sorted runs.
    pub fn union(&self, other: &PairSet) -> PairSet {
        merge_mapped(self, |k| k, other, |k| k)
    }

    pub fn retain(&self, mut keep: impl FnMut(Pair) -> bool) -> PairSet {
        PairSet {
            keys: self
                .keys
                .iter()
                .copied()
                .filter(|&k| keep(Pair::from_key(k)))
                .collect(),
        }
    }

    /// Map through a key function known to preserve the order (all shifts
    /// and decays below qualify), keeping the sorted invariant without a
    /// re-sort.
    fn map_monotone(&self, f: impl Fn(Key) -> Key) -> PairSet {
        let keys: KeyVec = self.keys.iter().map(|&k| f(k)).collect();
        debug_assert!(keys.windows(2).all(|w| w[0] < w[1]));
        PairSet { keys }
    }

}

/// Union of two order-preserving images in a single merge pass: the workhorse
/// of the partial compositions. The merge advances branchlessly (the law
/// sweeps hit this with data-dependent key order, where mispredicted
/// branches dominate).
pub(crate) fn merge_mapped(
    a: &PairSet,
    fa: impl Fn(Key) -> Key,
    b: &PairSet,
    fb: impl Fn(Key) -> Key,
) -> PairSet {
    let (xs, ys) = (a.keys.as_slice(), b.keys.as_slice());
    let mut out: KeyVec = SmallVec::with_capacity(xs.len() + ys.len());
    let (mut i, mut j) = (0, 0);
    while i < xs.len() && j < ys.len() {
        let ka = fa(xs[i]);
        let kb = fb(ys[j]);
        out.push(if ka <= kb { ka } else { kb });
        i += usize::from(ka <= kb);
        j += usize::from(kb <= ka);
    }
    out.extend(xs[i..].iter().map(|&k| fa(k)));
    out.extend(ys[j..].iter().map(|&k| fb(k)));
    PairSet { keys: out }
}

/// A deduplicating cursor over the merge of two order-preserving images; the
/// building block of the cross-comparison sink. The advance is branchless;
/// the stalled side's head is remapped on the next call, which is cheaper
/// than the mispredicted branches a cached head costs.
struct MergeCursor<'a, F, G> {
    xs: &'a [Key],
    ys: &'a [Key],
    i: usize,
    j: usize,
    fa: F,
    fb: G,
}

impl<'a, F: Fn(Key) -> Key, G: Fn(Key) -> Key> MergeCursor<'a, F, G> {
    #[inline]
    fn new(a: &'a PairSet, fa: F, b: &'a PairSet, fb: G) -> Self {
        MergeCursor {
            xs: &a.keys,
            ys: &b.keys,
            i: 0,
            j: 0,
            fa,
            fb,
        }
    }
}

impl<'a, F: Fn(Key) -> Key, G: Fn(Key) -> Key> Iterator for MergeCursor<'a, F, G> {
    type Item = Key;

    #[inline]
    fn next(&mut self) -> Option<Key> {
        if self.i < self.xs.len() {
            let ka = (self.fa)(self.xs[self.i]);
            if self.j < self.ys.len() {
                let kb = (self.fb)(self.ys[self.j]);
                self.i += usize::from(ka <= kb);
                self.j += usize::from(kb <= ka);
                Some(if ka <= kb { ka } else { kb })
            } else {
                self.i += 1;
                Some(ka)
            }
        } else if self.j < self.ys.len() {
            let kb = (self.fb)(self.ys[self.j]);
            self.j += 1;
            Some(kb)
        } else {
            None
        }
    }
}

/// `dec(da, a) ∪ dec(db, b) == dec(dc, c) ∪ dec(dd, d)` without
/// materializing either union. With the host images premapped (offset 0)
/// this compares two compositions whose shifts were hoisted out of a loop.
pub(crate) fn decayed_unions_eq(
    a: &PairSet,
    da: u32,
    b: &PairSet,
    db: u32,
    c: &PairSet,
    dc: u32,
    d: &PairSet,
    dd: u32,
) -> bool {
    let (oa, ob) = (dec_key(da, 0), dec_key(db, 0));
    let (oc, od) = (dec_key(dc, 0), dec_key(dd, 0));
    merged_streams_eq(
        a,
        |k| k + oa,
        b,
        |k| k + ob,
        c,
        |k| k + oc,
        d,
        |k| k + od,
    )
}

/// Transitive closures of the two decayed unions compared row by row; the
/// closure-operad counterpart of [`decayed_unions_eq`].
pub(crate) fn closed_decayed_unions_eq(
    a: &PairSet,
    da: u32,
    b: &PairSet,
    db: u32,
    c: &PairSet,
    dc: u32,
    d: &PairSet,
    dd: u32,
    points: u32,
) -> bool {
    if points > 16 {
        let lhs = merge_mapped(a, |k| dec_key(da, k), b, |k| dec_key(db, k));
        let rhs = merge_mapped(c, |k| dec_key(dc, k), d, |k| dec_key(dd, k));
        return transitive_closure(&Relation::from_parts(points - 1, lhs))
            == transitive_closure(&Relation::from_parts(points - 1, rhs));
    }
    let fill = |s: &PairSet, ds: u32, t: &PairSet, dt: u32| -> [u16; 16] {
        let n = points as usize;
        let mut adj = [0u16; 16];
        let (off_s, off_t) = (dec_key(ds, 0), dec_key(dt, 0));
        for &key in &s.keys {
            let m = key + off_s;
            adj[(m >> 32) as usize - 1] |= 1 << ((m & 0xFFFF_FFFF) - 1);
        }
        for &key in &t.keys {
            let m = key + off_t;
            adj[(m >> 32) as usize - 1] |= 1 << ((m & 0xFFFF_FFFF) - 1);
        }
        for mid in 0..n {
            let row = adj[mid];
            for r in adj.iter_mut().take(n) {
                *r |= row & ((*r >> mid) & 1).wrapping_neg();
            }
        }
        adj
    };
    fill(a, da, b, db)[..points as usize] == fill(c, dc, d, dd)[..points as usize]
}

/// Compare two merged images element by element without materializing
/// either: the cross-comparison sink of the merge, used by the law sweeps
/// where both sides of an identity are compositions.
pub(crate) fn merged_streams_eq(
    a: &PairSet,
    fa: impl Fn(Key) -> Key,
    b: &PairSet,
    fb: impl Fn(Key) -> Key,
    c: &PairSet,
    fc: impl Fn(Key) -> Key,
    d: &PairSet,
    fd: impl Fn(Key) -> Key,
) -> bool {
    MergeCursor::new(a, fa, b, fb).eq(MergeCursor::new(c, fc, d, fd))
}

/// Compare the closed unions of two shifted pairs of relations row by row.
pub(crate) fn closed_unions_eq(
    lhs: (&PairSet, u32, u32, &PairSet),
    rhs: (&PairSet, u32, u32, &PairSet),
    points: u32,
) -> bool {
    if points > 16 {
        return closed_union_of_shifts(lhs.0, lhs.1, lhs.2, lhs.3, points)
            == closed_union_of_shifts(rhs.0, rhs.1, rhs.2, rhs.3, points);
    }
    let a = closed_shift_rows(lhs.0, lhs.1, lhs.2, lhs.3, points);
    let b = closed_shift_rows(rhs.0, rhs.1, rhs.2, rhs.3, points);
    a[..points as usize] == b[..points as usize]
}

/// Decide whether the merged image equals `expected` without materializing
/// it: the comparison sink of the same merge.
pub(crate) fn merge_mapped_eq(
    a: &PairSet,
    fa: impl Fn(Key) -> Key,
    b: &PairSet,
    fb: impl Fn(Key) -> Key,
    expected: &PairSet,
) -> bool {
    let (xs, ys, es) = (a.keys.as_slice(), b.keys.as_slice(), expected.keys.as_slice());
    let (mut i, mut j, mut e) = (0, 0, 0);
    while i < xs.len() && j < ys.len() {
        let ka = fa(xs[i]);
        let kb = fb(ys[j]);
        let k = if ka <= kb { ka } else { kb };
        if e == es.len() || es[e] != k {
            return false;
        }
        e += 1;
        i += usize::from(ka <= kb);
        j += usize::from(kb <= ka);
    }
    for &k in &xs[i..] {
        if e == es.len() || es[e] != fa(k) {
            return false;
        }
        e += 1;
    }
    for &k in &ys[j..] {
        if e == es.len() || es[e] != fb(k) {
            return false;
        }
        e += 1;
    }
    e == es.len()
}

/// Key-level decay: add `offset` to both coordinates.
#[inline]
pub(crate) fn dec_key(offset: u32, key: Key) -> Key {
    key + (offset as u64) * 0x1_0000_0001
}

/// Key-level relation shift: each coordinate `t` maps to `t` if `t ≤ i`,
/// else `t + k - 1`.
#[inline]
pub(crate) fn shift_diam_key(i: u32, k: u32, key: Key) -> Key {
    let bump = (k - 1) as u64;
    let x = key >> 32;
    let y = key & 0xFFFF_FFFF;
    let xb = if x > i as u64 { bump } else { 0 };
    let yb = if y > i as u64 { bump } else { 0 };
    key + (xb << 32) + yb
}

/// Key-level interval shift: identity left of `i`, right end stretches when
/// the interval spans `i`, whole interval moves when it lies right of `i`.
#[inline]
pub(crate) fn shift_tilde_key(i: u32, k: u32, key: Key) -> Key {
    let bump = (k - 1) as u64;
    let x = key >> 32;
    let y = key & 0xFFFF_FFFF;
    if y < i as u64 {
        key
    } else if x <= i as u64 {
        key + bump
    } else {
        key + (bump << 32) + bump
    }
}

impl FromIterator<Pair> for PairSet {
    fn from_iter<T: IntoIterator<Item = Pair>>(iter: T) -> Self {
        let mut v: KeyVec = iter.into_iter().map(Pair::key).collect();
        v.sort_unstable();
        v.dedup();
        PairSet { keys: v }
    }
}

impl fmt::Debug for PairSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for PairSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

/// `(x, y) ↦ (x + offset, y + offset)` on every pair.
pub fn dec(offset: u32, pairs: &PairSet) -> PairSet {
    pairs.map_monotone(|k| dec_key(offset, k))
}

/// Shift for multi-tilde pairs (`x ≤ y` intervals): pairs entirely left of
/// `i` stay put, pairs spanning `i` stretch their right end by `k - 1`, and
/// pairs right of `i` move wholesale. Indices `i ≤ 0` act like `i = 0`.
pub fn shift_tilde(i: i64, k: u32, pairs: &PairSet) -> PairSet {
    debug_assert!(k >= 1);
    let i = i.max(0) as u32;
    pairs.map_monotone(|key| shift_tilde_key(i, k, key))
}

/// Shift for relation pairs: every coordinate `t` maps to `t` if `t ≤ i` and
/// to `t + k - 1` otherwise. Indices `i ≤ 0` act like `i = 0`.
pub fn shift_diam(i: i64, k: u32, pairs: &PairSet) -> PairSet {
    debug_assert!(k >= 1);
    let i = i.max(0) as u32;
    pairs.map_monotone(|key| shift_diam_key(i, k, key))
}

/// Swap coordinates of every pair.
pub fn reverse(pairs: &PairSet) -> PairSet {
    pairs.iter().map(|p| Pair::new(p.y, p.x)).collect()
}

/// A graded relation: a set of pairs on positions `{1, …, arity + 1}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Relation {
    arity: u32,
    pairs: PairSet,
}

impl Relation {
    pub fn new(arity: u32, pairs: PairSet) -> Result<Self> {
        if arity == 0 {
            return Err(Error::invalid("relation", "arity must be positive"));
        }
        for p in pairs.iter() {
            if p.x < 1 || p.y < 1 || p.x > arity + 1 || p.y > arity + 1 {
                return Err(Error::invalid(
                    "relation",
                    format!("pair {p} outside 1..={}", arity + 1),
                ));
            }
        }
        Ok(Relation { arity, pairs })
    }

    pub fn from_pairs(arity: u32, pairs: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        Relation::new(arity, PairSet::from_pairs(pairs))
    }

    pub fn empty(arity: u32) -> Self {
        Relation {
            arity,
            pairs: PairSet::new(),
        }
    }

    /// Constructor for pairs already known to be in range (compositions and
    /// closures of validated inputs); skips the range re-check.
    pub(crate) fn from_parts(arity: u32, pairs: PairSet) -> Self {
        debug_assert!(Relation::new(arity, pairs.clone()).is_ok());
        Relation { arity, pairs }
    }


    pub fn arity(&self) -> u32 {
        self.arity
    }

    /// Number of positions the relation lives on (`arity + 1`).
    pub fn points(&self) -> u32 {
        self.arity + 1
    }

    pub fn pairs(&self) -> &PairSet {
        &self.pairs
    }

    pub fn into_pairs(self) -> PairSet {
        self.pairs
    }

    pub fn is_antireflexive(&self) -> bool {
        self.pairs.iter().all(|p| p.x != p.y)
    }

    /// All pairs strictly increasing (the ARAS carrier condition).
    pub fn is_order_compatible(&self) -> bool {
        self.pairs.iter().all(|p| p.x < p.y)
    }

    pub fn is_reflexive(&self) -> bool {
        (1..=self.points()).all(|n| self.pairs.contains(Pair::new(n, n)))
    }

    pub fn is_transitive(&self) -> bool {
        for a in self.pairs.iter() {
            for b in self.pairs.iter() {
                if a.y == b.x && !self.pairs.contains(Pair::new(a.x, b.y)) {
                    return false;
                }
            }
        }
        true
    }

    /// Replace the pair set, keeping the arity (pairs must stay in range).
    pub fn with_pairs(&self, pairs: PairSet) -> Result<Relation> {
        Relation::new(self.arity, pairs)
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]{}", self.arity, self.pairs)
    }
}

/// Smallest transitive superset within positions `1..=arity+1`
/// (Warshall over bit rows; arity is preserved).
pub fn transitive_closure(r: &Relation) -> Relation {
    let n = r.points() as usize;
    assert!(n <= 64, "closure supports at most 63 positions");
    let mut adj = [0u64; 64];
    for &key in &r.pairs().keys {
        adj[(key >> 32) as usize - 1] |= 1u64 << ((key & 0xFFFF_FFFF) - 1);
    }
    let mut total = 0usize;
    for mid in 0..n {
        let row = adj[mid];
        let bit = 1u64 << mid;
        for a in adj.iter_mut().take(n) {
            if *a & bit != 0 {
                *a |= row;
            }
        }
    }
    for a in adj.iter().take(n) {
        total += a.count_ones() as usize;
    }
    // Bit order coincides with the lexicographic pair order, so the set can
    // be rebuilt by pushing in place.
    let mut keys: KeyVec = SmallVec::with_capacity(total);
    for (a, &rowval) in adj.iter().take(n).enumerate() {
        let base = ((a as u64 + 1) << 32) + 1;
        let mut row = rowval;
        while row != 0 {
            let b = row.trailing_zeros() as u64;
            row &= row - 1;
            keys.push(base + b);
        }
    }
    Relation {
        arity: r.arity,
        pairs: PairSet { keys },
    }
}

/// Union with the full diagonal on `{1, …, arity + 1}`.
pub fn reflexive_closure(r: &Relation) -> Relation {
    let diagonal: PairSet = (1..=r.points()).map(|n| Pair::new(n, n)).collect();
    Relation {
        arity: r.arity,
        pairs: r.pairs.union(&diagonal),
    }
}

/// Remove every pair `(n, n)`.
pub fn strip_diagonal(r: &Relation) -> Relation {
    Relation {
        arity: r.arity,
        pairs: r.pairs.retain(|p| p.x != p.y),
    }
}

/// Keep the pairs with `x < y`.
pub fn split_lower(r: &Relation) -> Relation {
    Relation {
        arity: r.arity,
        pairs: r.pairs.retain(|p| p.x < p.y),
    }
}

/// Keep the pairs with `x > y`.
pub fn split_upper(r: &Relation) -> Relation {
    Relation {
        arity: r.arity,
        pairs: r.pairs.retain(|p| p.x > p.y),
    }
}

/// Off-diagonal transitive closure: transitive closure followed by removal of
/// the diagonal. This is the idempotent map the quasiorder quotient is taken
/// by; it commutes with `shift_diam`.
pub fn tilde_closure(r: &Relation) -> Relation {
    strip_diagonal(&transitive_closure(r))
}

/// Fill adjacency bit rows with the two shifted images and transitively
/// close them: the quasiorder/poset composition works on the rows directly,
/// skipping the sorted merge.
fn closed_shift_rows(a: &PairSet, i: u32, kb: u32, b: &PairSet, points: u32) -> [u16; 16] {
    debug_assert!(points <= 16);
    let n = points as usize;
    let mut adj = [0u16; 16];
    for &key in &a.keys {
        let m = shift_diam_key(i, kb, key);
        adj[(m >> 32) as usize - 1] |= 1 << ((m & 0xFFFF_FFFF) - 1);
    }
    let off = dec_key(i - 1, 0);
    for &key in &b.keys {
        let m = key + off;
        adj[(m >> 32) as usize - 1] |= 1 << ((m & 0xFFFF_FFFF) - 1);
    }
    for mid in 0..n {
        let row = adj[mid];
        for r in adj.iter_mut().take(n) {
            // branchless: OR the row in exactly when bit `mid` is set
            *r |= row & ((*r >> mid) & 1).wrapping_neg();
        }
    }
    adj
}

/// `γ(∇_{i,kb}(a) ∪ Dec_{i-1}(b))` on `points` positions.
pub(crate) fn closed_union_of_shifts(
    a: &PairSet,
    i: u32,
    kb: u32,
    b: &PairSet,
    points: u32,
) -> PairSet {
    if points > 16 {
        let merged = merge_mapped(a, |k| shift_diam_key(i, kb, k), b, |k| dec_key(i - 1, k));
        return transitive_closure(&Relation::from_parts(points - 1, merged)).pairs;
    }
    let adj = closed_shift_rows(a, i, kb, b, points);
    let n = points as usize;
    let total: usize = adj.iter().take(n).map(|r| r.count_ones() as usize).sum();
    let mut keys: KeyVec = SmallVec::with_capacity(total);
    for (x, &rowval) in adj.iter().take(n).enumerate() {
        let base = ((x as u64 + 1) << 32) + 1;
        let mut row = rowval;
        while row != 0 {
            let y = row.trailing_zeros() as u64;
            row &= row - 1;
            keys.push(base + y);
        }
    }
    PairSet { keys }
}

/// Comparison sink of the same kernel: does the closed union equal
/// `expected`?
pub(crate) fn closed_union_of_shifts_eq(
    a: &PairSet,
    i: u32,
    kb: u32,
    b: &PairSet,
    points: u32,
    expected: &PairSet,
) -> bool {
    if points > 16 {
        return closed_union_of_shifts(a, i, kb, b, points) == *expected;
    }
    let adj = closed_shift_rows(a, i, kb, b, points);
    let n = points as usize;
    let total: usize = adj.iter().take(n).map(|r| r.count_ones() as usize).sum();
    if total != expected.keys.len() {
        return false;
    }
    expected.keys.iter().all(|&key| {
        let (x, y) = ((key >> 32) as usize, (key & 0xFFFF_FFFF) as usize);
        (1..=n).contains(&x) && (1..=n).contains(&y) && adj[x - 1] & (1 << (y - 1)) != 0
    })
}

/// A multi-tilde: a set of intervals `(x, y)` with `1 ≤ x ≤ y ≤ arity`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiTilde {
    arity: u32,
    pairs: PairSet,
}

impl MultiTilde {
    pub fn new(arity: u32, pairs: PairSet) -> Result<Self> {
        if arity == 0 {
            return Err(Error::invalid("multi-tilde", "arity must be positive"));
        }
        for p in pairs.iter() {
            if !(1 <= p.x && p.x <= p.y && p.y <= arity) {
                return Err(Error::invalid(
                    "multi-tilde",
                    format!("pair {p} violates 1 ≤ x ≤ y ≤ {arity}"),
                ));
            }
        }
        Ok(MultiTilde { arity, pairs })
    }

    pub fn from_pairs(arity: u32, pairs: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        MultiTilde::new(arity, PairSet::from_pairs(pairs))
    }

    pub fn empty(arity: u32) -> Self {
        MultiTilde {
            arity,
            pairs: PairSet::new(),
        }
    }

    /// Constructor for pairs already known to satisfy the interval
    /// invariants; skips the re-check.
    pub(crate) fn from_parts(arity: u32, pairs: PairSet) -> Self {
        debug_assert!(MultiTilde::new(arity, pairs.clone()).is_ok());
        MultiTilde { arity, pairs }
    }


    pub fn arity(&self) -> u32 {
        self.arity
    }

    pub fn pairs(&self) -> &PairSet {
        &self.pairs
    }
}

impl fmt::Debug for MultiTilde {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]{}", self.arity, self.pairs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(ps: &[(u32, u32)]) -> PairSet {
        PairSet::from_pairs(ps.iter().copied())
    }

    #[test]
    fn dec_zero_is_identity() {
        let p = pairs(&[(1, 2)]);
        assert_eq!(dec(0, &p), p);
    }

    #[test]
    fn dec_shifts_both_coordinates() {
        assert_eq!(dec(1, &pairs(&[(2, 3)])), pairs(&[(3, 4)]));
        assert_eq!(dec(3, &pairs(&[(1, 1), (2, 5)])), pairs(&[(4, 4), (5, 8)]));
    }

    #[test]
    fn shift_tilde_k1_is_identity() {
        let p = pairs(&[(1, 3), (2, 2), (3, 4)]);
        for i in -2..6 {
            assert_eq!(shift_tilde(i, 1, &p), p);
        }
    }

    #[test]
    fn shift_tilde_cases() {
        assert_eq!(shift_tilde(2, 4, &pairs(&[(1, 3)])), pairs(&[(1, 6)]));
        assert_eq!(shift_tilde(5, 3, &pairs(&[(1, 2)])), pairs(&[(1, 2)]));
        // Piecewise exercise of all three branches at once.
        assert_eq!(
            shift_tilde(2, 4, &pairs(&[(1, 1), (2, 2), (3, 4)])),
            pairs(&[(1, 1), (2, 5), (6, 7)])
        );
    }

    #[test]
    fn shift_diam_example_5_intermediate() {
        let r1 = pairs(&[(1, 4), (2, 3), (3, 5), (4, 2)]);
        assert_eq!(
            shift_diam(2, 4, &r1),
            pairs(&[(1, 7), (2, 6), (6, 8), (7, 2)])
        );
    }

    #[test]
    fn shift_diam_k1_is_identity() {
        let p = pairs(&[(1, 4), (4, 2), (2, 2)]);
        for i in -1..6 {
            assert_eq!(shift_diam(i, 1, &p), p);
        }
    }

    #[test]
    fn shift_diam_at_zero_decays() {
        assert_eq!(shift_diam(0, 3, &pairs(&[(2, 1)])), pairs(&[(4, 3)]));
        assert_eq!(shift_diam(0, 3, &pairs(&[(2, 1)])), dec(2, &pairs(&[(2, 1)])));
    }

    #[test]
    fn negative_shift_index_normalizes_to_zero() {
        let p = pairs(&[(1, 2), (3, 1)]);
        assert_eq!(shift_diam(-3, 5, &p), shift_diam(0, 5, &p));
        assert_eq!(shift_tilde(-1, 4, &p.retain(|q| q.x <= q.y)), shift_tilde(0, 4, &p.retain(|q| q.x <= q.y)));
    }

    #[test]
    fn transitive_closure_chain() {
        let r = Relation::from_pairs(2, [(1, 2), (2, 3)]).unwrap();
        assert_eq!(
            transitive_closure(&r),
            Relation::from_pairs(2, [(1, 2), (2, 3), (1, 3)]).unwrap()
        );
    }

    #[test]
    fn transitive_closure_empty_and_cycle() {
        let empty = Relation::empty(3);
        assert_eq!(transitive_closure(&empty), empty);
        let cyc = Relation::from_pairs(1, [(1, 2), (2, 1)]).unwrap();
        assert_eq!(
            transitive_closure(&cyc),
            Relation::from_pairs(1, [(1, 2), (2, 1), (1, 1), (2, 2)]).unwrap()
        );
    }

    #[test]
    fn reflexive_closure_adds_diagonal() {
        assert_eq!(
            reflexive_closure(&Relation::empty(1)),
            Relation::from_pairs(1, [(1, 1), (2, 2)]).unwrap()
        );
        assert_eq!(
            reflexive_closure(&Relation::from_pairs(2, [(2, 1)]).unwrap()),
            Relation::from_pairs(2, [(2, 1), (1, 1), (2, 2), (3, 3)]).unwrap()
        );
    }

    #[test]
    fn quasiorder_closure_of_example_relation() {
        // Transitive-and-reflexive closure of the §5.2 running relation.
        let r1 = Relation::from_pairs(5, [(1, 4), (2, 3), (3, 5), (4, 2)]).unwrap();
        let closed = reflexive_closure(&transitive_closure(&r1));
        let expected = Relation::from_pairs(
            5,
            [
                (1, 4),
                (2, 3),
                (3, 5),
                (4, 2),
                (1, 2),
                (2, 5),
                (4, 3),
                (1, 3),
                (4, 5),
                (1, 5),
                (1, 1),
                (2, 2),
                (3, 3),
                (4, 4),
                (5, 5),
                (6, 6),
            ],
        )
        .unwrap();
        assert_eq!(closed, expected);
        assert_eq!(closed.pairs().len(), 16);
    }

    #[test]
    fn strip_diagonal_removes_loops() {
        let r = Relation::from_pairs(1, [(1, 1), (1, 2)]).unwrap();
        assert_eq!(strip_diagonal(&r), Relation::from_pairs(1, [(1, 2)]).unwrap());
        assert_eq!(strip_diagonal(&Relation::empty(2)), Relation::empty(2));
    }

    #[test]
    fn splits_partition_off_diagonal() {
        let r = Relation::from_pairs(3, [(1, 4), (4, 2)]).unwrap();
        assert_eq!(split_lower(&r), Relation::from_pairs(3, [(1, 4)]).unwrap());
        assert_eq!(split_upper(&r), Relation::from_pairs(3, [(4, 2)]).unwrap());
    }

    #[test]
    fn reverse_swaps_and_is_involutive() {
        let p = pairs(&[(2, 4), (1, 3)]);
        assert_eq!(reverse(&pairs(&[(2, 4)])), pairs(&[(4, 2)]));
        assert_eq!(reverse(&reverse(&p)), p);
    }

    #[test]
    fn diagonal_does_not_change_off_diagonal_closure() {
        // Closing with or without the diagonal present gives the same
        // off-diagonal part.
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let mut ps = PairSet::new();
            for _ in 0..rng.gen_range(0..6) {
                ps.insert(Pair::new(rng.gen_range(1..=4), rng.gen_range(1..=4)));
            }
            let r = Relation::new(3, ps).unwrap();
            let with_diag = strip_diagonal(&transitive_closure(&reflexive_closure(&r)));
            let without = strip_diagonal(&transitive_closure(&r));
            assert_eq!(with_diag, without);
        }
    }

    #[test]
    fn relation_rejects_out_of_range_pairs() {
        assert!(Relation::from_pairs(2, [(1, 4)]).is_err());
        assert!(Relation::from_pairs(2, [(0, 1)]).is_err());
        assert!(MultiTilde::from_pairs(3, [(2, 1)]).is_err());
        assert!(MultiTilde::from_pairs(3, [(1, 4)]).is_err());
    }

    #[test]
    fn pair_set_literal_display_is_sorted() {
        let p = PairSet::from_pairs([(2, 1), (1, 4), (1, 2)]);
        assert_eq!(p.to_string(), "{(1,2),(1,4),(2,1)}");
    }
}
