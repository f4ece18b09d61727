//! Two-sided ideals and the residuated lattice they form.
//!
//! Every ideal of a finite ring is a finite sum of principal ideals, so the
//! complete lattice is the closure of the principal ideals (plus `{0}`)
//! under binary sums. Sums and products are computed as additive spans of a
//! small additive generating set; residuals only need to test those
//! generators because `x(a + b) = xa + xb`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use thiserror::Error;

use crate::elemset::ElemSet;
use crate::ring::{Elem, FiniteRing};

/// An additive subgroup grown one generator at a time by coset enumeration.
pub(crate) struct Span<'r> {
    ring: &'r FiniteRing,
    set: ElemSet,
    list: Vec<Elem>,
}

impl<'r> Span<'r> {
    pub(crate) fn zero(ring: &'r FiniteRing) -> Self {
        let mut set = ElemSet::empty(ring.order());
        set.insert(ring.zero());
        Span {
            ring,
            set,
            list: vec![ring.zero()],
        }
    }

    /// `set` must already be an additive subgroup.
    pub(crate) fn from_subgroup(ring: &'r FiniteRing, set: &ElemSet) -> Self {
        Span {
            ring,
            set: set.clone(),
            list: set.to_vec(),
        }
    }

    /// Adds `g` and everything it generates together with the current
    /// subgroup. Returns `false` if `g` was already inside.
    pub(crate) fn extend(&mut self, g: Elem) -> bool {
        if self.set.contains(g) {
            return false;
        }
        let before = self.set.clone();
        let base = self.list.len();
        // The cosets S + kg are disjoint from S until kg falls back into S.
        let mut shift = g;
        while !before.contains(shift) {
            for i in 0..base {
                let e = self.ring.add(self.list[i], shift);
                if self.set.insert(e) {
                    self.list.push(e);
                }
            }
            shift = self.ring.add(shift, g);
        }
        true
    }

    pub(crate) fn into_set(self) -> ElemSet {
        self.set
    }
}

/// Greedy additive generating set of a subgroup, scanning members in
/// increasing order.
pub(crate) fn additive_basis(ring: &FiniteRing, set: &ElemSet) -> Vec<Elem> {
    let mut span = Span::zero(ring);
    let mut basis = Vec::new();
    for e in set.iter() {
        if span.extend(e) {
            basis.push(e);
        }
    }
    basis
}

/// Least two-sided ideal containing `seeds`: a fixpoint over additive
/// generators, each closed under left and right multiplication.
pub(crate) fn generate(ring: &FiniteRing, seeds: impl IntoIterator<Item = Elem>) -> ElemSet {
    let mut span = Span::zero(ring);
    let mut queue: Vec<Elem> = Vec::new();
    for s in seeds {
        if span.extend(s) {
            queue.push(s);
        }
    }
    while let Some(g) = queue.pop() {
        for r in ring.elements() {
            for p in [ring.mul(r, g), ring.mul(g, r)] {
                if span.extend(p) {
                    queue.push(p);
                }
            }
        }
    }
    span.into_set()
}

fn span_sum(ring: &FiniteRing, i: &ElemSet, j_basis: &[Elem]) -> ElemSet {
    let mut span = Span::from_subgroup(ring, i);
    for &g in j_basis {
        span.extend(g);
    }
    span.into_set()
}

fn span_product(ring: &FiniteRing, i_basis: &[Elem], j_basis: &[Elem]) -> ElemSet {
    let mut span = Span::zero(ring);
    for &a in i_basis {
        for &b in j_basis {
            span.extend(ring.mul(a, b));
        }
    }
    span.into_set()
}

/// `{x : x a ∈ J for all a ∈ I}` given additive generators of `I`.
fn residual_right_set(ring: &FiniteRing, i_basis: &[Elem], j: &ElemSet) -> ElemSet {
    ElemSet::from_elems(
        ring.order(),
        ring.elements()
            .filter(|&x| i_basis.iter().all(|&a| j.contains(ring.mul(x, a)))),
    )
}

/// `{x : a x ∈ J for all a ∈ I}` given additive generators of `I`.
fn residual_left_set(ring: &FiniteRing, i_basis: &[Elem], j: &ElemSet) -> ElemSet {
    ElemSet::from_elems(
        ring.order(),
        ring.elements()
            .filter(|&x| i_basis.iter().all(|&a| j.contains(ring.mul(a, x)))),
    )
}

/// Checks the two-sided ideal axioms on an arbitrary subset.
pub fn is_ideal(ring: &FiniteRing, set: &ElemSet) -> bool {
    if set.capacity() != ring.order() || !set.contains(ring.zero()) {
        return false;
    }
    let members = set.to_vec();
    members.iter().all(|&a| {
        set.contains(ring.neg(a))
            && members.iter().all(|&b| set.contains(ring.add(a, b)))
            && ring
                .elements()
                .all(|r| set.contains(ring.mul(r, a)) && set.contains(ring.mul(a, r)))
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("subset {0} is not a two-sided ideal")]
    NotAnIdeal(String),
    #[error("element {0} is outside the ring")]
    OutOfRange(Elem),
}

/// A two-sided ideal of a particular ring.
#[derive(Clone)]
pub struct Ideal {
    ring: Arc<FiniteRing>,
    members: ElemSet,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members && same_ring(&self.ring, &other.ring)
    }
}

impl Eq for Ideal {}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{}", self.members)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.members, f)
    }
}

fn same_ring(a: &Arc<FiniteRing>, b: &Arc<FiniteRing>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Ideal {
    pub fn generated(
        ring: &Arc<FiniteRing>,
        seeds: impl IntoIterator<Item = Elem>,
    ) -> Result<Ideal, IdealError> {
        let seeds: Vec<Elem> = seeds.into_iter().collect();
        if let Some(&bad) = seeds.iter().find(|&&s| s >= ring.order()) {
            return Err(IdealError::OutOfRange(bad));
        }
        Ok(Ideal {
            members: generate(ring, seeds),
            ring: ring.clone(),
        })
    }

    pub fn zero(ring: &Arc<FiniteRing>) -> Ideal {
        Ideal {
            members: ElemSet::from_elems(ring.order(), [ring.zero()]),
            ring: ring.clone(),
        }
    }

    pub fn full(ring: &Arc<FiniteRing>) -> Ideal {
        Ideal {
            members: ElemSet::full(ring.order()),
            ring: ring.clone(),
        }
    }

    pub fn from_members(ring: &Arc<FiniteRing>, members: ElemSet) -> Result<Ideal, IdealError> {
        if !is_ideal(ring, &members) {
            return Err(IdealError::NotAnIdeal(members.to_string()));
        }
        Ok(Ideal {
            ring: ring.clone(),
            members,
        })
    }

    pub(crate) fn from_trusted(ring: &Arc<FiniteRing>, members: ElemSet) -> Ideal {
        debug_assert!(is_ideal(ring, &members));
        Ideal {
            ring: ring.clone(),
            members,
        }
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn members(&self) -> &ElemSet {
        &self.members
    }

    pub fn contains(&self, e: Elem) -> bool {
        self.members.contains(e)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_zero(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_full(&self) -> bool {
        self.members.is_full()
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.check_ring(other);
        self.members.is_subset(&other.members)
    }

    fn check_ring(&self, other: &Ideal) {
        assert!(
            same_ring(&self.ring, &other.ring),
            "ideals belong to different rings"
        );
    }

    fn derived(&self, members: ElemSet) -> Ideal {
        Ideal::from_trusted(&self.ring, members)
    }

    pub fn additive_basis(&self) -> Vec<Elem> {
        additive_basis(&self.ring, &self.members)
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        self.check_ring(other);
        self.derived(span_sum(&self.ring, &self.members, &other.additive_basis()))
    }

    pub fn intersect(&self, other: &Ideal) -> Ideal {
        self.check_ring(other);
        self.derived(self.members.intersection(&other.members))
    }

    /// Additive closure of all products `a b` with `a ∈ self`, `b ∈ other`.
    pub fn product(&self, other: &Ideal) -> Ideal {
        self.check_ring(other);
        self.derived(span_product(
            &self.ring,
            &self.additive_basis(),
            &other.additive_basis(),
        ))
    }

    /// `self → target = {x : x·self ⊆ target}`.
    pub fn residual_right(&self, target: &Ideal) -> Ideal {
        self.check_ring(target);
        let set = residual_right_set(&self.ring, &self.additive_basis(), &target.members);
        assert!(
            is_ideal(&self.ring, &set),
            "right residual is not two-sided"
        );
        self.derived(set)
    }

    /// `self ⇝ target = {x : self·x ⊆ target}`.
    pub fn residual_left(&self, target: &Ideal) -> Ideal {
        self.check_ring(target);
        let set = residual_left_set(&self.ring, &self.additive_basis(), &target.members);
        assert!(is_ideal(&self.ring, &set), "left residual is not two-sided");
        self.derived(set)
    }

    /// `{x : x·self = 0}`.
    pub fn ann_star(&self) -> Ideal {
        self.residual_right(&Ideal::zero(&self.ring))
    }

    /// `{x : self·x = 0}`.
    pub fn ann_minus(&self) -> Ideal {
        self.residual_left(&Ideal::zero(&self.ring))
    }

    pub fn is_dense(&self) -> Density {
        Density {
            star: self.ann_star().is_zero(),
            minus: self.ann_minus().is_zero(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Density {
    pub star: bool,
    pub minus: bool,
}

impl Density {
    pub fn both(self) -> bool {
        self.star && self.minus
    }
}

/// Witnesses for the conjunctive annihilator-ideal definition: `I = J*`
/// and `I = K⁻`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnnihilatorWitness {
    pub star_of: Option<usize>,
    pub minus_of: Option<usize>,
}

impl AnnihilatorWitness {
    pub fn holds(self) -> bool {
        self.star_of.is_some() && self.minus_of.is_some()
    }
}

/// All two-sided ideals of a ring with every lattice operation tabulated.
pub struct IdealLattice {
    ring: Arc<FiniteRing>,
    ideals: Vec<ElemSet>,
    bases: Vec<Vec<Elem>>,
    index: HashMap<ElemSet, usize>,
    bottom: usize,
    top: usize,
    meet: Vec<usize>,
    join: Vec<usize>,
    product: Vec<usize>,
    rimp: Vec<usize>,
    limp: Vec<usize>,
}

impl fmt::Debug for IdealLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdealLattice")
            .field("ring", &self.ring)
            .field("ideals", &self.ideals)
            .finish()
    }
}

impl IdealLattice {
    /// Enumerates every two-sided ideal of `ring`.
    pub fn new(ring: Arc<FiniteRing>) -> IdealLattice {
        let r: &FiniteRing = &ring;
        let mut principal: Vec<ElemSet> = r
            .elements()
            .collect::<Vec<_>>()
            .into_par_iter()
            .map(|a| generate(r, [a]))
            .collect();
        principal.sort();
        principal.dedup();
        let principal_bases: Vec<Vec<Elem>> =
            principal.iter().map(|p| additive_basis(r, p)).collect();

        let mut found: HashMap<ElemSet, ()> = HashMap::new();
        let mut work: Vec<ElemSet> = Vec::new();
        let zero = generate(r, []);
        for s in std::iter::once(zero).chain(principal.iter().cloned()) {
            if found.insert(s.clone(), ()).is_none() {
                work.push(s);
            }
        }
        let mut i = 0;
        while i < work.len() {
            let x = work[i].clone();
            for (p, pb) in principal.iter().zip(&principal_bases) {
                if p.is_subset(&x) {
                    continue;
                }
                let s = span_sum(r, &x, pb);
                if found.insert(s.clone(), ()).is_none() {
                    work.push(s);
                }
            }
            i += 1;
        }
        let mut ideals = work;
        ideals.sort();
        Self::from_sorted(ring.clone(), ideals)
    }

    fn from_sorted(ring: Arc<FiniteRing>, ideals: Vec<ElemSet>) -> IdealLattice {
        let r: &FiniteRing = &ring;
        let n = ideals.len();
        let index: HashMap<ElemSet, usize> = ideals
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        let bases: Vec<Vec<Elem>> = ideals.iter().map(|s| additive_basis(r, s)).collect();
        let bottom = 0;
        let top = n - 1;
        debug_assert_eq!(ideals[bottom].len(), 1);
        debug_assert!(ideals[top].is_full());

        let lookup = |set: ElemSet, what: &str| -> usize {
            match index.get(&set) {
                Some(&k) => k,
                None => panic!("{what} {set} is not among the enumerated ideals"),
            }
        };
        let rows: Vec<[Vec<usize>; 5]> = (0..n)
            .into_par_iter()
            .map(|i| {
                let mut row: [Vec<usize>; 5] = Default::default();
                for j in 0..n {
                    row[0].push(lookup(ideals[i].intersection(&ideals[j]), "intersection"));
                    row[1].push(lookup(span_sum(r, &ideals[i], &bases[j]), "sum"));
                    row[2].push(lookup(span_product(r, &bases[i], &bases[j]), "product"));
                    row[3].push(lookup(
                        residual_right_set(r, &bases[i], &ideals[j]),
                        "right residual",
                    ));
                    row[4].push(lookup(
                        residual_left_set(r, &bases[i], &ideals[j]),
                        "left residual",
                    ));
                }
                row
            })
            .collect();
        let mut tables: [Vec<usize>; 5] = Default::default();
        for row in rows {
            for (t, part) in tables.iter_mut().zip(row) {
                t.extend(part);
            }
        }
        let [meet, join, product, rimp, limp] = tables;
        IdealLattice {
            ring,
            ideals,
            bases,
            index,
            bottom,
            top,
            meet,
            join,
            product,
            rimp,
            limp,
        }
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn indices(&self) -> std::ops::Range<usize> {
        0..self.ideals.len()
    }

    pub fn members(&self, i: usize) -> &ElemSet {
        &self.ideals[i]
    }

    pub fn ideal(&self, i: usize) -> Ideal {
        Ideal::from_trusted(&self.ring, self.ideals[i].clone())
    }

    pub fn additive_basis(&self, i: usize) -> &[Elem] {
        &self.bases[i]
    }

    pub fn index_of(&self, set: &ElemSet) -> Option<usize> {
        self.index.get(set).copied()
    }

    pub fn position(&self, ideal: &Ideal) -> Option<usize> {
        if !same_ring(&self.ring, ideal.ring()) {
            return None;
        }
        self.index_of(ideal.members())
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    #[inline]
    fn at(&self, table: &[usize], i: usize, j: usize) -> usize {
        table[i * self.ideals.len() + j]
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.at(&self.meet, i, j)
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        self.at(&self.join, i, j)
    }

    pub fn product(&self, i: usize, j: usize) -> usize {
        self.at(&self.product, i, j)
    }

    /// `i → j`.
    pub fn rimp(&self, i: usize, j: usize) -> usize {
        self.at(&self.rimp, i, j)
    }

    /// `i ⇝ j`.
    pub fn limp(&self, i: usize, j: usize) -> usize {
        self.at(&self.limp, i, j)
    }

    pub fn ann_star(&self, i: usize) -> usize {
        self.rimp(i, self.bottom)
    }

    pub fn ann_minus(&self, i: usize) -> usize {
        self.limp(i, self.bottom)
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.ideals[i].is_subset(&self.ideals[j])
    }

    pub fn is_dense(&self, i: usize) -> Density {
        Density {
            star: self.ann_star(i) == self.bottom,
            minus: self.ann_minus(i) == self.bottom,
        }
    }

    pub fn is_annihilator_ideal(&self, i: usize) -> AnnihilatorWitness {
        AnnihilatorWitness {
            star_of: self.indices().find(|&j| self.ann_star(j) == i),
            minus_of: self.indices().find(|&k| self.ann_minus(k) == i),
        }
    }

    /// Ideal-wise primality: `IJ ⊆ P` forces `I ⊆ P` or `J ⊆ P`.
    pub fn is_prime(&self, p: usize) -> bool {
        p != self.top
            && self.indices().all(|i| {
                self.indices()
                    .all(|j| !self.leq(self.product(i, j), p) || self.leq(i, p) || self.leq(j, p))
            })
    }

    pub fn is_maximal(&self, p: usize) -> bool {
        p != self.top
            && !self
                .indices()
                .any(|i| i != p && i != self.top && self.leq(p, i))
    }

    pub fn primes(&self) -> Vec<usize> {
        self.indices().filter(|&p| self.is_prime(p)).collect()
    }

    pub fn maximals(&self) -> Vec<usize> {
        self.indices().filter(|&p| self.is_maximal(p)).collect()
    }

    /// Covering pairs `(i, j)`: `i ⊊ j` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in self.indices() {
            for j in self.indices() {
                if i == j || !self.leq(i, j) {
                    continue;
                }
                let between = self
                    .indices()
                    .any(|k| k != i && k != j && self.leq(i, k) && self.leq(k, j));
                if !between {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// A short list of elements generating ideal `i`: a single generator
    /// when the ideal is principal, otherwise chosen greedily in increasing
    /// element order.
    pub fn generators(&self, i: usize) -> Vec<Elem> {
        let r: &FiniteRing = &self.ring;
        let target = &self.ideals[i];
        if target.len() == 1 {
            return Vec::new();
        }
        if let Some(e) = target.iter().find(|&e| generate(r, [e]) == *target) {
            return vec![e];
        }
        let mut gens = Vec::new();
        let mut cur = generate(r, []);
        for e in target.iter() {
            if cur == *target {
                break;
            }
            if !cur.contains(e) {
                gens.push(e);
                cur = generate(r, gens.iter().copied());
            }
        }
        gens
    }
}
