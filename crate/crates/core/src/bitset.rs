//! Fixed-width bit vectors over the element indices of one group.

use std::cmp::Ordering;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ElementSet {
    len: usize,
    words: Box<[u64]>,
}

impl ElementSet {
    pub fn empty(len: usize) -> Self {
        ElementSet {
            len,
            words: vec![0; len.div_ceil(64)].into_boxed_slice(),
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = Self::empty(len);
        for x in 0..len {
            s.insert(x);
        }
        s
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(len);
        for x in indices {
            s.insert(x);
        }
        s
    }

    /// Width of the vector, i.e. the order of the parent group.
    pub fn width(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        x < self.len && self.words[x / 64] >> (x % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, x: usize) -> bool {
        assert!(
            x < self.len,
            "element {x} out of range for width {}",
            self.len
        );
        let (w, b) = (x / 64, x % 64);
        let fresh = self.words[w] >> b & 1 == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }

    pub fn intersection(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len, other.len);
        ElementSet {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(other.words.iter())
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn union_with(&mut self, other: &Self) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= b;
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    /// True when the two sets share some element other than index 0.
    pub fn meets_beyond_identity(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .enumerate()
            .any(|(i, (a, b))| {
                let m = a & b;
                if i == 0 {
                    m & !1 != 0
                } else {
                    m != 0
                }
            })
    }

    /// Lexicographic comparison of the bit patterns, lowest index first.
    ///
    /// A set containing the smaller first differing element sorts first.
    pub fn cmp_pattern(&self, other: &Self) -> Ordering {
        for (a, b) in self.words.iter().zip(other.words.iter()) {
            if a != b {
                let diff = a ^ b;
                let low = diff & diff.wrapping_neg();
                return if a & low != 0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                };
            }
        }
        Ordering::Equal
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iter_and_count_agree() {
        let s = ElementSet::from_indices(130, [0, 5, 63, 64, 129]);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 5, 63, 64, 129]);
        assert_eq!(s.count(), 5);
        assert!(s.contains(64) && !s.contains(65) && !s.contains(500));
    }

    #[test]
    fn meets_beyond_identity_ignores_index_zero() {
        let a = ElementSet::from_indices(70, [0, 3]);
        let b = ElementSet::from_indices(70, [0, 4]);
        let c = ElementSet::from_indices(70, [0, 4, 69]);
        assert!(!a.meets_beyond_identity(&b));
        assert!(b.meets_beyond_identity(&c));
    }

    #[test]
    fn pattern_order_prefers_smaller_first_difference() {
        let a = ElementSet::from_indices(8, [0, 1]);
        let b = ElementSet::from_indices(8, [0, 2]);
        assert_eq!(a.cmp_pattern(&b), Ordering::Less);
        assert_eq!(b.cmp_pattern(&a), Ordering::Greater);
        assert_eq!(a.cmp_pattern(&a), Ordering::Equal);
    }
}
