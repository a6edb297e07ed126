use std::fmt;

use serde::{Serialize, Serializer};

/// A subset of the vertex ids `0..len`, stored as a bit-vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    len: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(len: usize) -> VertexSet {
        VertexSet { len, words: vec![0; len.div_ceil(64)] }
    }

    pub fn full(len: usize) -> VertexSet {
        let mut s = VertexSet::empty(len);
        for (i, w) in s.words.iter_mut().enumerate() {
            let bits = (len - i * 64).min(64);
            *w = if bits == 64 { u64::MAX } else { (1u64 << bits) - 1 };
        }
        s
    }

    /// Builds a set from its integer encoding; bit `i` set means vertex `i` is a member.
    pub fn from_mask(len: usize, mask: u64) -> VertexSet {
        assert!(len <= 64, "mask encoding requires len <= 64");
        assert!(len == 64 || mask >> len == 0, "mask has bits beyond len");
        let mut s = VertexSet::empty(len);
        if let Some(w) = s.words.first_mut() {
            *w = mask;
        }
        s
    }

    pub fn from_ids<I: IntoIterator<Item = usize>>(len: usize, ids: I) -> VertexSet {
        let mut s = VertexSet::empty(len);
        for v in ids {
            s.insert(v);
        }
        s
    }

    /// Integer encoding, available when the universe fits in one word.
    pub fn to_mask(&self) -> Option<u64> {
        (self.len <= 64).then(|| self.words.first().copied().unwrap_or(0))
    }

    /// Size of the universe, not of the set.
    pub fn universe(&self) -> usize {
        self.len
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.len && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.len, "vertex {v} outside universe of {}", self.len);
        self.words[v / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.len {
            self.words[v / 64] &= !(1 << (v % 64));
        }
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.count() == self.len
    }

    pub fn complement(&self) -> VertexSet {
        let mut c = VertexSet::full(self.len);
        for (a, b) in c.words.iter_mut().zip(&self.words) {
            *a &= !b;
        }
        c
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.len, other.len);
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect();
        VertexSet { len: self.len, words }
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                (w != 0).then(|| {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    i * 64 + b
                })
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_and_complement() {
        for len in [0, 1, 63, 64, 65, 130] {
            let f = VertexSet::full(len);
            assert_eq!(f.count(), len);
            assert!(f.complement().is_empty());
        }
    }

    #[test]
    fn mask_roundtrip() {
        let s = VertexSet::from_mask(6, 0b001001);
        assert_eq!(s.to_vec(), vec![0, 3]);
        assert_eq!(s.to_mask(), Some(9));
        assert_eq!(VertexSet::full(100).to_mask(), None);
    }

    #[test]
    fn large_universe_membership() {
        let mut s = VertexSet::empty(200);
        s.insert(199);
        s.insert(64);
        assert!(s.contains(199) && s.contains(64) && !s.contains(63));
        assert_eq!(s.first(), Some(64));
        s.remove(64);
        assert_eq!(s.to_vec(), vec![199]);
    }

    proptest! {
        #[test]
        fn complement_partitions_universe(len in 1usize..150, ids in proptest::collection::vec(0usize..150, 0..40)) {
            let s = VertexSet::from_ids(len, ids.into_iter().filter(|&v| v < len));
            let c = s.complement();
            prop_assert!(s.is_disjoint(&c));
            prop_assert!(s.union(&c).is_full());
            prop_assert_eq!(s.count() + c.count(), len);
        }
    }
}
