//! Fixed-capacity bit sets over ring element indices.

use std::cmp::Ordering;
use std::fmt;

/// A subset of `0..capacity`, stored one bit per element.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElemSet {
    capacity: usize,
    words: Vec<u64>,
}

impl ElemSet {
    pub fn empty(capacity: usize) -> Self {
        ElemSet {
            capacity,
            words: vec![0; capacity.div_ceil(64)],
        }
    }

    pub fn full(capacity: usize) -> Self {
        let mut s = Self::empty(capacity);
        for w in s.words.iter_mut() {
            *w = u64::MAX;
        }
        s.trim();
        s
    }

    pub fn from_elems(capacity: usize, elems: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(capacity);
        for e in elems {
            s.insert(e);
        }
        s
    }

    fn trim(&mut self) {
        let rem = self.capacity % 64;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    pub fn capacity(&self) -> usize {
        self.capacity
    }

    #[inline]
    pub fn contains(&self, e: usize) -> bool {
        debug_assert!(e < self.capacity);
        self.words[e >> 6] & (1 << (e & 63)) != 0
    }

    /// Inserts `e`; returns `true` if it was not already present.
    #[inline]
    pub fn insert(&mut self, e: usize) -> bool {
        debug_assert!(e < self.capacity);
        let w = &mut self.words[e >> 6];
        let bit = 1 << (e & 63);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.capacity
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        debug_assert_eq!(self.capacity, other.capacity);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        debug_assert_eq!(self.capacity, other.capacity);
        ElemSet {
            capacity: self.capacity,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn union(&self, other: &ElemSet) -> ElemSet {
        debug_assert_eq!(self.capacity, other.capacity);
        ElemSet {
            capacity: self.capacity,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    /// Elements in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + t)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Canonical order: cardinality first, then the sorted member lists
/// compared lexicographically.
impl Ord for ElemSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
            .then_with(|| self.capacity.cmp(&other.capacity))
    }
}

impl PartialOrd for ElemSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Renders as `{0,2,4}`.
impl fmt::Display for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_set_respects_capacity() {
        let s = ElemSet::full(70);
        assert_eq!(s.len(), 70);
        assert_eq!(s.iter().last(), Some(69));
        assert!(s.is_full());
    }

    #[test]
    fn canonical_order_is_size_then_lex() {
        let a = ElemSet::from_elems(6, [0, 3]);
        let b = ElemSet::from_elems(6, [0, 2, 4]);
        let c = ElemSet::from_elems(6, [0, 1, 5]);
        let mut v = vec![b.clone(), a.clone(), c.clone()];
        v.sort();
        assert_eq!(v, vec![a, c, b]);
        assert_eq!(format!("{}", v[2]), "{0,2,4}");
    }

    proptest! {
        #[test]
        fn set_algebra_matches_vec_model(
            xs in proptest::collection::vec(0usize..130, 0..40),
            ys in proptest::collection::vec(0usize..130, 0..40),
        ) {
            let a = ElemSet::from_elems(130, xs.iter().copied());
            let b = ElemSet::from_elems(130, ys.iter().copied());
            let mut xs_sorted = xs.clone();
            xs_sorted.sort();
            xs_sorted.dedup();
            prop_assert_eq!(a.to_vec(), xs_sorted.clone());
            prop_assert_eq!(a.len(), xs_sorted.len());
            let inter: Vec<usize> = xs_sorted.iter().copied().filter(|x| ys.contains(x)).collect();
            prop_assert_eq!(a.intersection(&b).to_vec(), inter);
            prop_assert_eq!(a.is_subset(&a.union(&b)), true);
            prop_assert_eq!(
                a.is_subset(&b),
                xs_sorted.iter().all(|x| ys.contains(x))
            );
        }
    }
}
