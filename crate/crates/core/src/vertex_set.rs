//! Fixed-width vertex sets over the ground set `{1, ..., n}`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported ground set size.
pub const MAX_GROUND: usize = 64;

/// A subset of `{1, ..., n}` stored as a bitmask; vertex `v` lives in bit `v - 1`.
///
/// Sets are ordered by cardinality first and then lexicographically on their
/// increasing vertex lists, which is the canonical order used for every
/// listing and serialized form in this crate.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_GROUND, "ground size {n} exceeds {MAX_GROUND}");
        if n == MAX_GROUND {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        assert!((1..=MAX_GROUND).contains(&v), "vertex {v} out of range");
        VertexSet(1u64 << (v - 1))
    }

    /// Builds a set from 1-based vertices, checking each against the ground size `n`.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(n: usize, vertices: I) -> Result<Self> {
        if n > MAX_GROUND {
            return Err(Error::GroundTooLarge {
                n,
                limit: MAX_GROUND,
            });
        }
        let mut bits = 0u64;
        for v in vertices {
            if v == 0 || v > n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            bits |= 1u64 << (v - 1);
        }
        Ok(VertexSet(bits))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=MAX_GROUND).contains(&v) && self.0 & (1u64 << (v - 1)) != 0
    }

    pub fn with(self, v: usize) -> Self {
        self | VertexSet::singleton(v)
    }

    pub fn without(self, v: usize) -> Self {
        self - VertexSet::singleton(v)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: VertexSet) -> bool {
        self != other && self.is_subset(other)
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    /// True when every vertex is at most `n`.
    pub fn within(self, n: usize) -> bool {
        self.is_subset(VertexSet::full(n))
    }

    /// Largest vertex, if any.
    pub fn max_vertex(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(64 - self.0.leading_zeros() as usize)
        }
    }

    /// Vertices in increasing order.
    pub fn iter(self) -> Vertices {
        Vertices(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets, including the empty set and `self`, in increasing bitmask order.
    pub fn subsets(self) -> Subsets {
        Subsets {
            set: self.0,
            next: Some(0),
        }
    }

    /// Subsets of exactly `k` elements.
    pub fn subsets_of_size(self, k: usize) -> impl Iterator<Item = VertexSet> {
        self.subsets().filter(move |s| s.len() == k)
    }

    /// Applies a relabeling `v -> perm[v - 1]` (1-based images).
    pub fn permute(self, perm: &[usize]) -> Self {
        let mut bits = 0u64;
        for v in self.iter() {
            bits |= 1u64 << (perm[v - 1] - 1);
        }
        VertexSet(bits)
    }

    /// Shifts every vertex up by `offset`.
    pub fn shifted(self, offset: usize) -> Self {
        if self.0 == 0 {
            return self;
        }
        assert!(
            self.max_vertex().unwrap() + offset <= MAX_GROUND,
            "shift leaves the supported ground set"
        );
        VertexSet(self.0 << offset)
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.len().cmp(&other.len()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        if self.0 == other.0 {
            return Ordering::Equal;
        }
        // Equal sizes: the set holding the smallest differing vertex comes first.
        let diff = self.0 ^ other.0;
        let lowest = diff & diff.wrapping_neg();
        if self.0 & lowest != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: Self) -> Self {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: Self) -> Self {
        VertexSet(self.0 & rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: Self) -> Self {
        VertexSet(self.0 & !rhs.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let vertices = Vec::<usize>::deserialize(deserializer)?;
        VertexSet::from_vertices(MAX_GROUND, vertices).map_err(serde::de::Error::custom)
    }
}

impl FromIterator<usize> for VertexSet {
    /// Panics on vertices outside `1..=64`; use [`VertexSet::from_vertices`] for checked input.
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter()
            .fold(VertexSet::EMPTY, |acc, v| acc.with(v))
    }
}

pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize + 1;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Vertices {}

/// The `k`-element subsets of `{1, ..., n}` in increasing bitmask order (Gosper's hack).
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = VertexSet> {
    assert!(n < MAX_GROUND, "k_subsets supports n < {MAX_GROUND}");
    let limit = 1u64 << n;
    let first = if k > n { limit } else { (1u64 << k) - 1 };
    let mut next = Some(first).filter(|&m| m < limit);
    std::iter::from_fn(move || {
        let current = next?;
        next = if current == 0 {
            None
        } else {
            let low = current & current.wrapping_neg();
            let ripple = current + low;
            let following = (((ripple ^ current) >> 2) / low) | ripple;
            Some(following).filter(|&m| m < limit)
        };
        Some(VertexSet(current))
    })
}

/// Carry-rippler enumeration of the subsets of a mask.
pub struct Subsets {
    set: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let current = self.next?;
        let following = current.wrapping_sub(self.set) & self.set;
        self.next = if following == 0 {
            None
        } else {
            Some(following)
        };
        Some(VertexSet(current))
    }
}

/// Sorts and deduplicates into canonical order.
pub fn canonicalize(sets: &mut Vec<VertexSet>) {
    sets.sort_unstable();
    sets.dedup();
}

/// Inclusion-maximal members of `sets`, canonically ordered.
pub fn maximal_elements(sets: &[VertexSet]) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> = sets
        .iter()
        .copied()
        .filter(|s| !sets.iter().any(|t| s.is_proper_subset(*t)))
        .collect();
    canonicalize(&mut out);
    out
}

/// Inclusion-minimal members of `sets`, canonically ordered.
pub fn minimal_elements(sets: &[VertexSet]) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> = sets
        .iter()
        .copied()
        .filter(|s| !sets.iter().any(|t| t.is_proper_subset(*s)))
        .collect();
    canonicalize(&mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn canonical_order_is_size_then_lex() {
        let mut sets = vec![
            set(&[2, 3]),
            set(&[1, 2, 3]),
            set(&[4]),
            set(&[1, 3]),
            set(&[]),
            set(&[1, 2]),
        ];
        sets.sort();
        assert_eq!(
            sets,
            vec![
                set(&[]),
                set(&[4]),
                set(&[1, 2]),
                set(&[1, 3]),
                set(&[2, 3]),
                set(&[1, 2, 3])
            ]
        );
    }

    #[test]
    fn subsets_enumerates_power_set() {
        let s = set(&[1, 3, 5]);
        let all: Vec<_> = s.subsets().collect();
        assert_eq!(all.len(), 8);
        assert!(all.iter().all(|t| t.is_subset(s)));
        assert_eq!(VertexSet::EMPTY.subsets().count(), 1);
        assert_eq!(VertexSet::full(64).subsets().take(3).count(), 3);
    }

    #[test]
    fn k_subsets_counts_binomials() {
        let counts: Vec<usize> = (0..=6).map(|k| k_subsets(6, k).count()).collect();
        assert_eq!(counts, vec![1, 6, 15, 20, 15, 6, 1]);
        assert_eq!(k_subsets(3, 4).count(), 0);
        assert_eq!(k_subsets(0, 0).collect::<Vec<_>>(), vec![VertexSet::EMPTY]);
        assert!(k_subsets(5, 2).all(|s| s.len() == 2 && s.within(5)));
    }

    #[test]
    fn range_checks() {
        assert!(matches!(
            VertexSet::from_vertices(3, [1, 4]),
            Err(Error::VertexOutOfRange { vertex: 4, n: 3 })
        ));
        assert!(matches!(
            VertexSet::from_vertices(3, [0]),
            Err(Error::VertexOutOfRange { vertex: 0, .. })
        ));
        assert!(matches!(
            VertexSet::from_vertices(65, [1]),
            Err(Error::GroundTooLarge { .. })
        ));
        assert_eq!(VertexSet::full(64).len(), 64);
        assert_eq!(VertexSet::singleton(64).max_vertex(), Some(64));
    }

    #[test]
    fn display_and_json() {
        let s = set(&[1, 4, 5]);
        assert_eq!(s.to_string(), "{1,4,5}");
        assert_eq!(serde_json::to_string(&s).unwrap(), "[1,4,5]");
        let back: VertexSet = serde_json::from_str("[5,1,4]").unwrap();
        assert_eq!(back, s);
    }

    proptest! {
        #[test]
        fn order_agrees_with_sorted_vertex_lists(a in 0u64..1 << 10, b in 0u64..1 << 10) {
            let (x, y) = (VertexSet::from_bits(a), VertexSet::from_bits(b));
            let key = |s: VertexSet| (s.len(), s.to_vec());
            prop_assert_eq!(x.cmp(&y), key(x).cmp(&key(y)));
        }

        #[test]
        fn json_round_trip(bits in any::<u64>()) {
            let s = VertexSet::from_bits(bits);
            let text = serde_json::to_string(&s).unwrap();
            prop_assert_eq!(serde_json::from_str::<VertexSet>(&text).unwrap(), s);
        }
    }
}
