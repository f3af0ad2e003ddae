//! The concrete operads — multi-tildes, order-compatible and antireflexive
//! relations, double multi-tildes, poset classes and quasiorders — their
//! partial compositions `∘ᵢ`, and the graded bijections between them.

use std::fmt;

use crate::error::{Error, Result};
use crate::relation::{
    closed_union_of_shifts, closed_union_of_shifts_eq, closed_unions_eq, dec_key, merge_mapped,
    merge_mapped_eq, merged_streams_eq, reverse, shift_diam_key, shift_tilde_key, split_lower,
    split_upper, strip_diagonal, tilde_closure, transitive_closure, MultiTilde, Pair, PairSet,
    Relation,
};

/// A pair of equal-arity multi-tildes; the left one erases intervals, the
/// right one enables the star-like repetitions.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DoubleTilde {
    left: MultiTilde,
    right: MultiTilde,
}

impl DoubleTilde {
    pub fn new(left: MultiTilde, right: MultiTilde) -> Result<Self> {
        if left.arity() != right.arity() {
            return Err(Error::ArityMismatch {
                expected: left.arity(),
                got: right.arity(),
            });
        }
        Ok(DoubleTilde { left, right })
    }

    pub fn arity(&self) -> u32 {
        self.left.arity()
    }

    pub fn left(&self) -> &MultiTilde {
        &self.left
    }

    pub fn right(&self) -> &MultiTilde {
        &self.right
    }
}

impl fmt::Debug for DoubleTilde {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}]({},{})",
            self.arity(),
            self.left.pairs(),
            self.right.pairs()
        )
    }
}

/// A reflexive transitive relation on `{1, …, arity + 1}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuasiOrder {
    base: Relation,
}

impl QuasiOrder {
    pub fn new(base: Relation) -> Result<Self> {
        if !base.is_reflexive() {
            return Err(Error::invalid("quasiorder", "missing diagonal pairs"));
        }
        if !base.is_transitive() {
            return Err(Error::invalid("quasiorder", "relation is not transitive"));
        }
        Ok(QuasiOrder { base })
    }

    /// Build from the off-diagonal part (the diagonal is implied). The input
    /// must already be transitive off the diagonal.
    pub fn from_off_diagonal(off: &Relation) -> Result<Self> {
        QuasiOrder::new(crate::relation::reflexive_closure(off))
    }

    /// Smallest quasiorder containing an arbitrary relation.
    pub fn closure_of(r: &Relation) -> Self {
        QuasiOrder {
            base: crate::relation::reflexive_closure(&transitive_closure(r)),
        }
    }

    pub fn arity(&self) -> u32 {
        self.base.arity()
    }

    pub fn base(&self) -> &Relation {
        &self.base
    }

    pub fn off_diagonal(&self) -> Relation {
        strip_diagonal(&self.base)
    }

    /// The arity-1 diagonal-only quasiorder (the operad unit).
    pub fn identity() -> Self {
        QuasiOrder::closure_of(&Relation::empty(1))
    }
}

impl fmt::Debug for QuasiOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]{}", self.arity(), self.base.pairs())
    }
}

/// A partial-order class, stored as its canonical representative: a
/// transitively closed relation whose pairs all satisfy `x < y`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PosetClass {
    representative: Relation,
}

impl PosetClass {
    /// Classify an order-compatible relation by transitive closure.
    pub fn from_aras(r: &Relation) -> Result<Self> {
        if !r.is_order_compatible() {
            return Err(Error::invalid("poset class", "pairs must satisfy x < y"));
        }
        Ok(PosetClass {
            representative: transitive_closure(r),
        })
    }

    pub fn arity(&self) -> u32 {
        self.representative.arity()
    }

    pub fn representative(&self) -> &Relation {
        &self.representative
    }

    pub fn identity() -> Self {
        PosetClass {
            representative: Relation::empty(1),
        }
    }
}

impl fmt::Debug for PosetClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]{}", self.arity(), self.representative.pairs())
    }
}

fn check_position(i: u32, arity: u32) -> Result<()> {
    if i < 1 || i > arity {
        Err(Error::PositionOutOfRange { position: i, arity })
    } else {
        Ok(())
    }
}

/// `T₁ ∘ᵢ T₂` on multi-tildes: stretch `T₁` across the plugged-in block and
/// decay `T₂` into place, in one merge pass. Both shifts keep intervals
/// within the combined arity, so the result needs no re-validation.
pub fn compose_multitilde(a: &MultiTilde, i: u32, b: &MultiTilde) -> Result<MultiTilde> {
    check_position(i, a.arity())?;
    let kb = b.arity();
    let pairs = merge_mapped(
        a.pairs(),
        |key| shift_tilde_key(i, kb, key),
        b.pairs(),
        |key| dec_key(i - 1, key),
    );
    Ok(MultiTilde::from_parts(a.arity() + b.arity() - 1, pairs))
}

/// `R ◇ᵢ R′` on antireflexive relations, in one merge pass; also serves the
/// order-compatible carrier, where the four-case shift collapses to the
/// three-case one. The guest decays by `∇_{0,i}`, which is `Dec_{i-1}` on
/// positive coordinates.
pub fn compose_aref(a: &Relation, i: u32, b: &Relation) -> Result<Relation> {
    check_position(i, a.arity())?;
    let kb = b.arity();
    let pairs = merge_mapped(
        a.pairs(),
        |key| shift_diam_key(i, kb, key),
        b.pairs(),
        |key| dec_key(i - 1, key),
    );
    Ok(Relation::from_parts(a.arity() + b.arity() - 1, pairs))
}

/// Componentwise composition of double multi-tildes.
pub fn compose_double(a: &DoubleTilde, i: u32, b: &DoubleTilde) -> Result<DoubleTilde> {
    check_position(i, a.arity())?;
    DoubleTilde::new(
        compose_multitilde(&a.left, i, &b.left)?,
        compose_multitilde(&a.right, i, &b.right)?,
    )
}

/// Comparison sinks of the same composition kernels: decide whether
/// `a ∘ᵢ b = expected` without materializing the composite. These run the
/// identical shift/decay maps and merge walk as the `compose_*` functions and
/// exist for the law sweeps, which compare hundreds of millions of
/// compositions.
pub fn compose_multitilde_eq(a: &MultiTilde, i: u32, b: &MultiTilde, expected: &MultiTilde) -> bool {
    debug_assert!(1 <= i && i <= a.arity());
    expected.arity() == a.arity() + b.arity() - 1
        && merge_mapped_eq(
            a.pairs(),
            |key| shift_tilde_key(i, b.arity(), key),
            b.pairs(),
            |key| dec_key(i - 1, key),
            expected.pairs(),
        )
}

/// `a ◇ᵢ b = expected`, without materializing the composite.
pub fn compose_aref_eq(a: &Relation, i: u32, b: &Relation, expected: &Relation) -> bool {
    debug_assert!(1 <= i && i <= a.arity());
    expected.arity() == a.arity() + b.arity() - 1
        && merge_mapped_eq(
            a.pairs(),
            |key| shift_diam_key(i, b.arity(), key),
            b.pairs(),
            |key| dec_key(i - 1, key),
            expected.pairs(),
        )
}

/// Componentwise comparison sink for double multi-tildes.
pub fn compose_double_eq(a: &DoubleTilde, i: u32, b: &DoubleTilde, expected: &DoubleTilde) -> bool {
    compose_multitilde_eq(&a.left, i, &b.left, &expected.left)
        && compose_multitilde_eq(&a.right, i, &b.right, &expected.right)
}

/// Cross-comparison sinks: decide `a ∘ᵢ b == c ∘ⱼ d` by walking both merge
/// streams in lockstep, materializing neither side. The associativity sweeps
/// run these hundreds of millions of times.
pub fn compose_multitilde_cross_eq(
    a: &MultiTilde,
    i: u32,
    b: &MultiTilde,
    c: &MultiTilde,
    j: u32,
    d: &MultiTilde,
) -> bool {
    debug_assert!(1 <= i && i <= a.arity() && 1 <= j && j <= c.arity());
    a.arity() + b.arity() == c.arity() + d.arity()
        && merged_streams_eq(
            a.pairs(),
            |key| shift_tilde_key(i, b.arity(), key),
            b.pairs(),
            |key| dec_key(i - 1, key),
            c.pairs(),
            |key| shift_tilde_key(j, d.arity(), key),
            d.pairs(),
            |key| dec_key(j - 1, key),
        )
}

/// See [`compose_multitilde_cross_eq`].
pub fn compose_aref_cross_eq(
    a: &Relation,
    i: u32,
    b: &Relation,
    c: &Relation,
    j: u32,
    d: &Relation,
) -> bool {
    debug_assert!(1 <= i && i <= a.arity() && 1 <= j && j <= c.arity());
    a.arity() + b.arity() == c.arity() + d.arity()
        && merged_streams_eq(
            a.pairs(),
            |key| shift_diam_key(i, b.arity(), key),
            b.pairs(),
            |key| dec_key(i - 1, key),
            c.pairs(),
            |key| shift_diam_key(j, d.arity(), key),
            d.pairs(),
            |key| dec_key(j - 1, key),
        )
}

/// See [`compose_multitilde_cross_eq`].
pub fn compose_double_cross_eq(
    a: &DoubleTilde,
    i: u32,
    b: &DoubleTilde,
    c: &DoubleTilde,
    j: u32,
    d: &DoubleTilde,
) -> bool {
    compose_multitilde_cross_eq(&a.left, i, &b.left, &c.left, j, &d.left)
        && compose_multitilde_cross_eq(&a.right, i, &b.right, &c.right, j, &d.right)
}

/// See [`compose_multitilde_cross_eq`]; compares the closure bit rows.
pub fn compose_qoset_cross_eq(
    a: &QuasiOrder,
    i: u32,
    b: &QuasiOrder,
    c: &QuasiOrder,
    j: u32,
    d: &QuasiOrder,
) -> bool {
    debug_assert!(1 <= i && i <= a.arity() && 1 <= j && j <= c.arity());
    a.arity() + b.arity() == c.arity() + d.arity()
        && closed_unions_eq(
            (a.base.pairs(), i, b.arity(), b.base.pairs()),
            (c.base.pairs(), j, d.arity(), d.base.pairs()),
            a.arity() + b.arity(),
        )
}

/// `Q ◇̇ᵢ Q′` on quasiorders: shift, unite, transitively close. The shifted
/// diagonals already cover the new carrier, so the closed result is a
/// quasiorder by construction.
pub fn compose_qoset(a: &QuasiOrder, i: u32, b: &QuasiOrder) -> Result<QuasiOrder> {
    check_position(i, a.arity())?;
    let arity = a.arity() + b.arity() - 1;
    let pairs = closed_union_of_shifts(
        a.base.pairs(),
        i,
        b.arity(),
        b.base.pairs(),
        arity + 1,
    );
    let base = Relation::from_parts(arity, pairs);
    debug_assert!(base.is_reflexive() && base.is_transitive());
    Ok(QuasiOrder { base })
}

/// Comparison sink: `a ◇̇ᵢ b = expected` straight off the closure bit rows.
pub fn compose_qoset_eq(a: &QuasiOrder, i: u32, b: &QuasiOrder, expected: &QuasiOrder) -> bool {
    debug_assert!(1 <= i && i <= a.arity());
    let arity = a.arity() + b.arity() - 1;
    expected.arity() == arity
        && closed_union_of_shifts_eq(
            a.base.pairs(),
            i,
            b.arity(),
            b.base.pairs(),
            arity + 1,
            expected.base.pairs(),
        )
}

/// Compose poset classes through their representatives, then re-classify.
/// Order-compatible pairs stay order-compatible under the shifts, and their
/// closure cannot create cycles, so the result is a valid representative.
pub fn poset_compose(a: &PosetClass, i: u32, b: &PosetClass) -> Result<PosetClass> {
    check_position(i, a.arity())?;
    let arity = a.arity() + b.arity() - 1;
    let pairs = closed_union_of_shifts(
        a.representative.pairs(),
        i,
        b.arity(),
        b.representative.pairs(),
        arity + 1,
    );
    let representative = Relation::from_parts(arity, pairs);
    debug_assert!(representative.is_order_compatible() && representative.is_transitive());
    Ok(PosetClass { representative })
}

/// `ζ^A`: send interval `(x, y)` to the order-compatible pair `(x, y + 1)`.
pub fn iso_zeta(t: &MultiTilde) -> Relation {
    let pairs: PairSet = t.pairs().iter().map(|p| Pair::new(p.x, p.y + 1)).collect();
    Relation::new(t.arity(), pairs).expect("multi-tilde image is in range")
}

/// Inverse of `ζ^A`; requires every pair to satisfy `x < y`.
pub fn iso_zeta_inv(r: &Relation) -> Result<MultiTilde> {
    if !r.is_order_compatible() {
        return Err(Error::invalid(
            "zeta inverse",
            "input must be order-compatible (x < y)",
        ));
    }
    let pairs: PairSet = r.pairs().iter().map(|p| Pair::new(p.x, p.y - 1)).collect();
    MultiTilde::new(r.arity(), pairs)
}

/// `ξ`: merge a double multi-tilde into one antireflexive relation — the left
/// component lands above the diagonal, the reversed right component below.
pub fn iso_xi(d: &DoubleTilde) -> Relation {
    let lower = iso_zeta(&d.left);
    let upper = reverse(iso_zeta(&d.right).pairs());
    Relation::new(d.arity(), lower.pairs().union(&upper)).expect("xi image is in range")
}

/// Inverse of `ξ` via the `x < y` / `x > y` split.
pub fn iso_xi_inv(r: &Relation) -> Result<DoubleTilde> {
    if !r.is_antireflexive() {
        return Err(Error::invalid("xi inverse", "input must be antireflexive"));
    }
    let left = iso_zeta_inv(&split_lower(r))?;
    let right = iso_zeta_inv(&r.with_pairs(reverse(split_upper(r).pairs()))?)?;
    DoubleTilde::new(left, right)
}

/// `η`: a quasiorder, viewed as the closure class of its off-diagonal part.
/// The returned relation is the canonical class representative (it is closed
/// off the diagonal already).
pub fn iso_eta(q: &QuasiOrder) -> Relation {
    q.off_diagonal()
}

/// `η⁻¹`: rebuild the quasiorder as the reflexive-transitive closure of any
/// class member.
pub fn iso_eta_inv(r: &Relation) -> QuasiOrder {
    QuasiOrder::closure_of(r)
}

/// Equality of quasiorder classes of arbitrary antireflexive relations:
/// compare off-diagonal transitive closures.
pub fn same_closure_class(a: &Relation, b: &Relation) -> bool {
    tilde_closure(a) == tilde_closure(b)
}

/// A uniform wrapper over the six operads; composition dispatches on the tag
/// and rejects mixed operands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OperadElement {
    MultiTilde(MultiTilde),
    Aras(Relation),
    ARef(Relation),
    DoubleTilde(DoubleTilde),
    PosetClass(PosetClass),
    QuasiOrder(QuasiOrder),
}

impl OperadElement {
    pub fn aras(r: Relation) -> Result<Self> {
        if !r.is_order_compatible() {
            return Err(Error::invalid(
                "ARAS element",
                "pairs must satisfy x < y",
            ));
        }
        Ok(OperadElement::Aras(r))
    }

    pub fn aref(r: Relation) -> Result<Self> {
        if !r.is_antireflexive() {
            return Err(Error::invalid("ARef element", "pairs must satisfy x ≠ y"));
        }
        Ok(OperadElement::ARef(r))
    }

    pub fn arity(&self) -> u32 {
        match self {
            OperadElement::MultiTilde(t) => t.arity(),
            OperadElement::Aras(r) | OperadElement::ARef(r) => r.arity(),
            OperadElement::DoubleTilde(d) => d.arity(),
            OperadElement::PosetClass(p) => p.arity(),
            OperadElement::QuasiOrder(q) => q.arity(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            OperadElement::MultiTilde(_) => "tilde",
            OperadElement::Aras(_) => "aras",
            OperadElement::ARef(_) => "aref",
            OperadElement::DoubleTilde(_) => "dt",
            OperadElement::PosetClass(_) => "poset",
            OperadElement::QuasiOrder(_) => "qoset",
        }
    }

    pub fn compose(&self, i: u32, other: &OperadElement) -> Result<OperadElement> {
        use OperadElement::*;
        match (self, other) {
            (MultiTilde(a), MultiTilde(b)) => Ok(MultiTilde(compose_multitilde(a, i, b)?)),
            (Aras(a), Aras(b)) => Ok(Aras(compose_aref(a, i, b)?)),
            (ARef(a), ARef(b)) => Ok(ARef(compose_aref(a, i, b)?)),
            (DoubleTilde(a), DoubleTilde(b)) => Ok(DoubleTilde(compose_double(a, i, b)?)),
            (PosetClass(a), PosetClass(b)) => Ok(PosetClass(poset_compose(a, i, b)?)),
            (QuasiOrder(a), QuasiOrder(b)) => Ok(QuasiOrder(compose_qoset(a, i, b)?)),
            (a, b) => Err(Error::MixedComposition {
                left: a.kind(),
                right: b.kind(),
            }),
        }
    }

    /// The antireflexive relation the element evaluates through: multi-tildes
    /// go via `ζ^A` (paired with an empty right tilde), double multi-tildes
    /// via `ξ`, quasiorders via their off-diagonal representative.
    pub fn to_aref(&self) -> Relation {
        match self {
            OperadElement::MultiTilde(t) => iso_zeta(t),
            OperadElement::Aras(r) | OperadElement::ARef(r) => r.clone(),
            OperadElement::DoubleTilde(d) => iso_xi(d),
            OperadElement::PosetClass(p) => p.representative().clone(),
            OperadElement::QuasiOrder(q) => q.off_diagonal(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tilde(arity: u32, ps: &[(u32, u32)]) -> MultiTilde {
        MultiTilde::from_pairs(arity, ps.iter().copied()).unwrap()
    }

    fn rel(arity: u32, ps: &[(u32, u32)]) -> Relation {
        Relation::from_pairs(arity, ps.iter().copied()).unwrap()
    }

    fn example5_p1() -> DoubleTilde {
        DoubleTilde::new(tilde(5, &[(1, 3), (2, 2), (3, 4)]), tilde(5, &[(2, 3)])).unwrap()
    }

    fn example5_p2() -> DoubleTilde {
        DoubleTilde::new(
            tilde(4, &[(2, 3), (3, 4)]),
            tilde(4, &[(1, 2), (3, 4)]),
        )
        .unwrap()
    }

    #[test]
    fn multitilde_composition_golden() {
        let a = tilde(5, &[(1, 3), (2, 2), (3, 4)]);
        let b = tilde(4, &[(2, 3), (3, 4)]);
        let c = compose_multitilde(&a, 2, &b).unwrap();
        assert_eq!(c, tilde(8, &[(1, 6), (2, 5), (6, 7), (3, 4), (4, 5)]));
    }

    #[test]
    fn multitilde_identity_is_neutral() {
        let a = tilde(3, &[(1, 2), (3, 3)]);
        let unit = MultiTilde::empty(1);
        for i in 1..=3 {
            assert_eq!(compose_multitilde(&a, i, &unit).unwrap(), a);
        }
        assert_eq!(compose_multitilde(&unit, 1, &a).unwrap(), a);
    }

    #[test]
    fn position_out_of_range_is_rejected() {
        let a = tilde(2, &[]);
        assert!(matches!(
            compose_multitilde(&a, 3, &a),
            Err(Error::PositionOutOfRange { .. })
        ));
        assert!(matches!(
            compose_aref(&rel(2, &[]), 0, &rel(1, &[])),
            Err(Error::PositionOutOfRange { .. })
        ));
    }

    #[test]
    fn aref_composition_golden() {
        let a = rel(5, &[(1, 4), (2, 3), (3, 5), (4, 2)]);
        let b = rel(4, &[(2, 4), (3, 5), (3, 1), (5, 3)]);
        let c = compose_aref(&a, 2, &b).unwrap();
        assert_eq!(
            c,
            rel(
                8,
                &[(1, 7), (2, 6), (6, 8), (7, 2), (3, 5), (4, 6), (4, 2), (6, 4)]
            )
        );
    }

    #[test]
    fn aref_identity_is_neutral() {
        let a = rel(4, &[(1, 5), (3, 2)]);
        let unit = Relation::empty(1);
        for i in 1..=4 {
            assert_eq!(compose_aref(&a, i, &unit).unwrap(), a);
        }
        assert_eq!(compose_aref(&unit, 1, &a).unwrap(), a);
    }

    #[test]
    fn double_tilde_composition_golden() {
        let c = compose_double(&example5_p1(), 2, &example5_p2()).unwrap();
        assert_eq!(c.left(), &tilde(8, &[(1, 6), (2, 5), (6, 7), (3, 4), (4, 5)]));
        assert_eq!(c.right(), &tilde(8, &[(2, 6), (2, 3), (4, 5)]));
    }

    #[test]
    fn xi_golden_values() {
        assert_eq!(
            iso_xi(&example5_p1()),
            rel(5, &[(1, 4), (2, 3), (3, 5), (4, 2)])
        );
        assert_eq!(
            iso_xi(&example5_p2()),
            rel(4, &[(2, 4), (3, 5), (3, 1), (5, 3)])
        );
    }

    #[test]
    fn xi_commutes_with_composition_on_the_golden_pair() {
        let composed = compose_double(&example5_p1(), 2, &example5_p2()).unwrap();
        let via_aref = compose_aref(&iso_xi(&example5_p1()), 2, &iso_xi(&example5_p2())).unwrap();
        assert_eq!(iso_xi(&composed), via_aref);
    }

    #[test]
    fn zeta_golden_and_empty() {
        assert_eq!(
            iso_zeta(&tilde(5, &[(1, 3), (2, 2), (3, 4)])),
            rel(5, &[(1, 4), (2, 3), (3, 5)])
        );
        assert_eq!(iso_zeta(&MultiTilde::empty(3)), Relation::empty(3));
    }

    #[test]
    fn xi_round_trip() {
        let d = example5_p1();
        assert_eq!(iso_xi_inv(&iso_xi(&d)).unwrap(), d);
        assert!(iso_xi_inv(&rel(2, &[(1, 1)])).is_err());
    }

    #[test]
    fn qoset_composition_golden() {
        // §5.2's worked example: close the two relations, compose, compare
        // with the listed 28-pair quasiorder.
        let q1 = QuasiOrder::closure_of(&rel(5, &[(1, 4), (2, 3), (3, 5), (4, 2)]));
        let q2 = QuasiOrder::closure_of(&rel(4, &[(2, 4), (3, 5), (3, 1), (5, 3)]));
        assert_eq!(q1.base().pairs().len(), 16);
        assert_eq!(q2.base().pairs().len(), 10);
        let composed = compose_qoset(&q1, 2, &q2).unwrap();
        let expected = QuasiOrder::closure_of(&rel(
            8,
            &[(1, 7), (2, 6), (6, 8), (7, 2), (3, 5), (4, 6), (4, 2), (6, 4)],
        ));
        assert_eq!(composed, expected);
        assert_eq!(composed.base().pairs().len(), 28);
    }

    #[test]
    fn qoset_identity_is_neutral() {
        let q = QuasiOrder::closure_of(&rel(2, &[(1, 2), (3, 1)]));
        let unit = QuasiOrder::identity();
        for i in 1..=2 {
            assert_eq!(compose_qoset(&q, i, &unit).unwrap(), q);
        }
        assert_eq!(compose_qoset(&unit, 1, &q).unwrap(), q);
    }

    #[test]
    fn eta_round_trips_on_closures() {
        let q = QuasiOrder::closure_of(&rel(3, &[(1, 2), (2, 3), (4, 1)]));
        assert_eq!(iso_eta_inv(&iso_eta(&q)), q);
        // Classes identify a chain with its closure.
        assert!(same_closure_class(
            &rel(2, &[(1, 2), (2, 3)]),
            &rel(2, &[(1, 2), (2, 3), (1, 3)])
        ));
        assert_eq!(
            iso_eta(&QuasiOrder::identity()),
            Relation::empty(1)
        );
    }

    #[test]
    fn poset_composition_keeps_order_compatibility() {
        let a = PosetClass::from_aras(&rel(3, &[(1, 2), (2, 4)])).unwrap();
        let b = PosetClass::from_aras(&rel(2, &[(1, 3)])).unwrap();
        let c = poset_compose(&a, 2, &b).unwrap();
        assert!(c.representative().is_order_compatible());
        assert!(c.representative().is_transitive());
        let unit = PosetClass::identity();
        assert_eq!(poset_compose(&a, 1, &unit).unwrap(), a);
        assert_eq!(poset_compose(&unit, 1, &a).unwrap(), a);
    }

    #[test]
    fn comparison_sinks_agree_with_the_compositions() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        let random_rel = |rng: &mut rand_chacha::ChaCha8Rng, arity: u32| {
            let pairs: PairSet = (0..rng.gen_range(0..6))
                .filter_map(|_| {
                    let x = rng.gen_range(1..=arity + 1);
                    let y = rng.gen_range(1..=arity + 1);
                    (x != y).then_some(Pair::new(x, y))
                })
                .collect();
            Relation::new(arity, pairs).unwrap()
        };
        let random_tilde = |rng: &mut rand_chacha::ChaCha8Rng, arity: u32| {
            let pairs: PairSet = (0..rng.gen_range(0..6))
                .map(|_| {
                    let x = rng.gen_range(1..=arity);
                    Pair::new(x, rng.gen_range(x..=arity))
                })
                .collect();
            MultiTilde::new(arity, pairs).unwrap()
        };
        for _ in 0..20_000 {
            let (m, n) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
            let i = rng.gen_range(1..=m);

            let (a, b) = (random_rel(&mut rng, m), random_rel(&mut rng, n));
            let composed = compose_aref(&a, i, &b).unwrap();
            assert!(compose_aref_eq(&a, i, &b, &composed));
            let tweaked = random_rel(&mut rng, composed.arity());
            assert_eq!(
                compose_aref_eq(&a, i, &b, &tweaked),
                composed == tweaked
            );

            let (ta, tb) = (random_tilde(&mut rng, m), random_tilde(&mut rng, n));
            let composed = compose_multitilde(&ta, i, &tb).unwrap();
            assert!(compose_multitilde_eq(&ta, i, &tb, &composed));
            let tweaked = random_tilde(&mut rng, composed.arity());
            assert_eq!(
                compose_multitilde_eq(&ta, i, &tb, &tweaked),
                composed == tweaked
            );
        }
    }

    #[test]
    fn mixed_composition_is_rejected() {
        let t = OperadElement::MultiTilde(tilde(2, &[]));
        let r = OperadElement::aref(rel(2, &[(1, 2)])).unwrap();
        assert!(matches!(
            t.compose(1, &r),
            Err(Error::MixedComposition { .. })
        ));
    }

    #[test]
    fn operad_element_validates_carriers() {
        assert!(OperadElement::aref(rel(2, &[(1, 1)])).is_err());
        assert!(OperadElement::aras(rel(2, &[(2, 1)])).is_err());
        assert!(QuasiOrder::new(rel(1, &[(1, 1)])).is_err());
        assert!(QuasiOrder::from_off_diagonal(&rel(2, &[(1, 2), (2, 3)])).is_err());
        assert!(QuasiOrder::from_off_diagonal(&rel(2, &[(1, 2), (2, 3), (1, 3)])).is_ok());
    }
}
