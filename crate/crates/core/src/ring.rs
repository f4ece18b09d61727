//! Finite rings given by addition and multiplication tables.
//!
//! Elements are the indices `0..order`. Rings are not assumed to have a
//! multiplicative identity; every predicate that needs one says so.

use std::fmt;

use thiserror::Error;

/// Element index inside a [`FiniteRing`].
pub type Elem = usize;

/// Hard ceiling on ring order: tables are stored as `u16`.
pub const MAX_ORDER: usize = 1 << 16;

/// Which ring law a table pair violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ViolationKind {
    TableShape,
    NotAbelianGroup,
    MulNotAssociative,
    NotDistributive,
}

impl ViolationKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ViolationKind::TableShape => "table-shape",
            ViolationKind::NotAbelianGroup => "not-abelian-group",
            ViolationKind::MulNotAssociative => "mul-not-associative",
            ViolationKind::NotDistributive => "not-distributive",
        }
    }
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// First violated ring law found by [`FiniteRing::from_tables`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind}: {law} fails at {witness:?}")]
pub struct RingValidationError {
    pub kind: ViolationKind,
    /// Human-readable name of the specific law.
    pub law: &'static str,
    /// Up to three element indices at which the law fails.
    pub witness: Vec<Elem>,
}

impl RingValidationError {
    fn new(kind: ViolationKind, law: &'static str, witness: Vec<Elem>) -> Self {
        RingValidationError { kind, law, witness }
    }
}

#[derive(Clone)]
pub struct FiniteRing {
    order: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    zero: Elem,
    commutative: bool,
    provenance: Option<String>,
}

/// Table equality; provenance is ignored.
impl PartialEq for FiniteRing {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
            && self.zero == other.zero
            && self.add == other.add
            && self.mul == other.mul
    }
}

impl Eq for FiniteRing {}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("order", &self.order)
            .field("zero", &self.zero)
            .field("provenance", &self.provenance)
            .finish_non_exhaustive()
    }
}

/// Unit elements: `left` acts as identity from the left on every element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Units {
    pub left: Vec<Elem>,
    pub right: Vec<Elem>,
    pub two_sided: Option<Elem>,
}

/// Result of the generated-by-idempotents test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdempotentCover {
    pub holds: bool,
    /// For each element, an idempotent acting as identity on it on both sides.
    pub witness: Vec<Option<Elem>>,
}

impl IdempotentCover {
    /// First element no idempotent covers.
    pub fn uncovered(&self) -> Option<Elem> {
        self.witness.iter().position(Option::is_none)
    }
}

impl FiniteRing {
    /// Validates flat row-major tables exhaustively and builds the ring.
    pub fn from_tables(
        order: usize,
        add: Vec<Elem>,
        mul: Vec<Elem>,
        zero: Elem,
    ) -> Result<FiniteRing, RingValidationError> {
        use ViolationKind::*;
        let shape = |law| Err(RingValidationError::new(TableShape, law, vec![]));
        if order == 0 {
            return shape("order must be positive");
        }
        if order > MAX_ORDER {
            return shape("order exceeds 65536");
        }
        if add.len() != order * order || mul.len() != order * order {
            return shape("tables must be order x order");
        }
        if zero >= order {
            return shape("zero out of range");
        }
        if let Some(p) = add.iter().chain(&mul).position(|&e| e >= order) {
            let p = p % (order * order);
            return Err(RingValidationError::new(
                TableShape,
                "entry out of range",
                vec![p / order, p % order],
            ));
        }
        let n = order;
        let a = |x: Elem, y: Elem| add[x * n + y];
        let m = |x: Elem, y: Elem| mul[x * n + y];

        for x in 0..n {
            if a(zero, x) != x || a(x, zero) != x {
                return Err(RingValidationError::new(
                    NotAbelianGroup,
                    "zero is additive identity",
                    vec![x],
                ));
            }
        }
        for x in 0..n {
            for y in 0..x {
                if a(x, y) != a(y, x) {
                    return Err(RingValidationError::new(
                        NotAbelianGroup,
                        "addition commutes",
                        vec![y, x],
                    ));
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                let xy = a(x, y);
                for z in 0..n {
                    if a(xy, z) != a(x, a(y, z)) {
                        return Err(RingValidationError::new(
                            NotAbelianGroup,
                            "addition is associative",
                            vec![x, y, z],
                        ));
                    }
                }
            }
        }
        for x in 0..n {
            if !(0..n).any(|y| a(x, y) == zero) {
                return Err(RingValidationError::new(
                    NotAbelianGroup,
                    "additive inverse exists",
                    vec![x],
                ));
            }
        }
        for x in 0..n {
            for y in 0..n {
                let xy = m(x, y);
                for z in 0..n {
                    if m(xy, z) != m(x, m(y, z)) {
                        return Err(RingValidationError::new(
                            MulNotAssociative,
                            "multiplication is associative",
                            vec![x, y, z],
                        ));
                    }
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let yz = a(y, z);
                    if m(x, yz) != a(m(x, y), m(x, z)) {
                        return Err(RingValidationError::new(
                            NotDistributive,
                            "left distributivity",
                            vec![x, y, z],
                        ));
                    }
                    if m(yz, x) != a(m(y, x), m(z, x)) {
                        return Err(RingValidationError::new(
                            NotDistributive,
                            "right distributivity",
                            vec![x, y, z],
                        ));
                    }
                }
            }
        }
        for x in 0..n {
            if m(zero, x) != zero || m(x, zero) != zero {
                return Err(RingValidationError::new(
                    NotDistributive,
                    "zero annihilates",
                    vec![x],
                ));
            }
        }
        Ok(Self::assemble(order, add, mul, zero))
    }

    /// Validates nested tables (one `Vec` per row).
    pub fn from_rows(
        add: &[Vec<Elem>],
        mul: &[Vec<Elem>],
        zero: Elem,
    ) -> Result<FiniteRing, RingValidationError> {
        let n = add.len();
        if mul.len() != n || add.iter().chain(mul).any(|row| row.len() != n) {
            return Err(RingValidationError::new(
                ViolationKind::TableShape,
                "tables must be order x order",
                vec![],
            ));
        }
        FiniteRing::from_tables(n, add.concat(), mul.concat(), zero)
    }

    /// Builds a ring from tables known to satisfy the ring axioms (output
    /// of a constructor). Only the table shape is checked.
    pub(crate) fn from_trusted(order: usize, add: Vec<Elem>, mul: Vec<Elem>, zero: Elem) -> Self {
        assert!((1..=MAX_ORDER).contains(&order));
        assert_eq!(add.len(), order * order);
        assert_eq!(mul.len(), order * order);
        Self::assemble(order, add, mul, zero)
    }

    fn assemble(order: usize, add: Vec<Elem>, mul: Vec<Elem>, zero: Elem) -> Self {
        let n = order;
        let add: Vec<u16> = add.into_iter().map(|e| e as u16).collect();
        let mul: Vec<u16> = mul.into_iter().map(|e| e as u16).collect();
        let mut neg = vec![0u16; n];
        for x in 0..n {
            let row = &add[x * n..(x + 1) * n];
            let y = row
                .iter()
                .position(|&s| s as usize == zero)
                .expect("additive inverse");
            neg[x] = y as u16;
        }
        let commutative = (0..n).all(|x| (0..x).all(|y| mul[x * n + y] == mul[y * n + x]));
        FiniteRing {
            order,
            add,
            mul,
            neg,
            zero,
            commutative,
            provenance: None,
        }
    }

    pub fn with_provenance(mut self, provenance: impl Into<String>) -> Self {
        self.provenance = Some(provenance.into());
        self
    }

    pub fn provenance(&self) -> Option<&str> {
        self.provenance.as_deref()
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn zero(&self) -> Elem {
        self.zero
    }

    #[inline]
    pub fn add(&self, x: Elem, y: Elem) -> Elem {
        self.add[x * self.order + y] as Elem
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        self.mul[x * self.order + y] as Elem
    }

    #[inline]
    pub fn neg(&self, x: Elem) -> Elem {
        self.neg[x] as Elem
    }

    #[inline]
    pub fn sub(&self, x: Elem, y: Elem) -> Elem {
        self.add(x, self.neg(y))
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order
    }

    /// Cached at construction.
    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    pub fn is_zero_ring(&self) -> bool {
        self.order == 1
    }

    /// Row-major addition table.
    pub fn add_table(&self) -> Vec<Elem> {
        self.add.iter().map(|&e| e as Elem).collect()
    }

    /// Row-major multiplication table.
    pub fn mul_table(&self) -> Vec<Elem> {
        self.mul.iter().map(|&e| e as Elem).collect()
    }

    pub fn idempotents(&self) -> Vec<Elem> {
        self.elements().filter(|&e| self.mul(e, e) == e).collect()
    }

    pub fn generated_by_idempotents(&self) -> IdempotentCover {
        let idem = self.idempotents();
        let witness: Vec<Option<Elem>> = self
            .elements()
            .map(|x| {
                idem.iter()
                    .copied()
                    .find(|&e| self.mul(e, x) == x && self.mul(x, e) == x)
            })
            .collect();
        IdempotentCover {
            holds: witness.iter().all(Option::is_some),
            witness,
        }
    }

    pub fn units(&self) -> Units {
        let left: Vec<Elem> = self
            .elements()
            .filter(|&e| self.elements().all(|x| self.mul(e, x) == x))
            .collect();
        let right: Vec<Elem> = self
            .elements()
            .filter(|&e| self.elements().all(|x| self.mul(x, e) == x))
            .collect();
        // A left and a right identity coincide: e = e f = f.
        let two_sided = match (left.first(), right.first()) {
            (Some(&l), Some(&r)) => {
                debug_assert_eq!(l, r);
                Some(l)
            }
            _ => None,
        };
        Units {
            left,
            right,
            two_sided,
        }
    }

    pub fn one(&self) -> Option<Elem> {
        self.units().two_sided
    }

    pub fn is_unital(&self) -> bool {
        self.one().is_some()
    }

    /// A nonzero nilpotent element, if any. Powers are taken up to exponent
    /// `order`, after which the power sequence has already cycled.
    pub fn nilpotent_witness(&self) -> Option<Elem> {
        self.elements().filter(|&x| x != self.zero).find(|&x| {
            let mut p = x;
            for _ in 1..=self.order {
                if p == self.zero {
                    return true;
                }
                p = self.mul(p, x);
            }
            false
        })
    }

    pub fn is_reduced(&self) -> bool {
        self.nilpotent_witness().is_none()
    }

    pub fn is_division_ring(&self) -> bool {
        let Some(one) = self.one() else {
            return false;
        };
        if one == self.zero {
            return false;
        }
        self.elements().filter(|&x| x != self.zero).all(|x| {
            self.elements()
                .any(|y| self.mul(x, y) == one && self.mul(y, x) == one)
        })
    }

    /// The ring on `members` with inherited operations, elements renumbered
    /// in increasing index order. `members` must be closed under addition,
    /// negation and multiplication.
    pub fn subring(&self, members: &[Elem]) -> FiniteRing {
        let k = members.len();
        let mut pos = vec![usize::MAX; self.order];
        for (i, &e) in members.iter().enumerate() {
            pos[e] = i;
        }
        let look = |e: Elem| {
            let p = pos[e];
            assert!(
                p != usize::MAX,
                "subset is not closed under the ring operations"
            );
            p
        };
        let mut add = Vec::with_capacity(k * k);
        let mut mul = Vec::with_capacity(k * k);
        for &x in members {
            for &y in members {
                add.push(look(self.add(x, y)));
                mul.push(look(self.mul(x, y)));
            }
        }
        FiniteRing::from_trusted(k, add, mul, look(self.zero))
    }
}
