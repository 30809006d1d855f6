//! Fixed-width vertex bitsets.
//!
//! Every vertex set in this crate is a subset of `0..n` for some `n` up to
//! [`VERTEX_CAP`], stored in a single `u128` so that closure loops compile
//! down to word operations.

/// Hard cap on the number of vertices any structure in this crate may have.
pub const VERTEX_CAP: usize = 128;

/// A set of vertex indices drawn from `0..VERTEX_CAP`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    bits: u128,
}

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet { bits: 0 };

    /// The full set `{0, 1, …, n-1}`.
    pub fn universe(n: usize) -> VertexSet {
        assert!(n <= VERTEX_CAP, "vertex count {n} exceeds cap {VERTEX_CAP}");
        if n == VERTEX_CAP {
            VertexSet { bits: u128::MAX }
        } else {
            VertexSet {
                bits: (1u128 << n) - 1,
            }
        }
    }

    pub fn singleton(v: usize) -> VertexSet {
        assert!(v < VERTEX_CAP);
        VertexSet { bits: 1u128 << v }
    }

    pub fn contains(&self, v: usize) -> bool {
        v < VERTEX_CAP && self.bits & (1u128 << v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < VERTEX_CAP);
        self.bits |= 1u128 << v;
    }

    pub fn remove(&mut self, v: usize) {
        assert!(v < VERTEX_CAP);
        self.bits &= !(1u128 << v);
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet {
            bits: self.bits | other.bits,
        }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet {
            bits: self.bits & other.bits,
        }
    }

    /// Elements of `self` not in `other`.
    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet {
            bits: self.bits & !other.bits,
        }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.bits & other.bits == 0
    }

    /// Smallest element, if any. Takes `self` by value so it outranks
    /// `Ord::min` in method resolution.
    pub fn min(self) -> Option<usize> {
        if self.bits == 0 {
            None
        } else {
            Some(self.bits.trailing_zeros() as usize)
        }
    }

    /// Ascending iterator over the elements.
    pub fn iter(&self) -> Bits {
        Bits { bits: self.bits }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Set-lexicographic order: `a < b` iff the smallest element of the symmetric
/// difference lies in `a`. This matches comparing the sorted element tuples.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let d = self.bits ^ other.bits;
        if d == 0 {
            return std::cmp::Ordering::Equal;
        }
        let low = d & d.wrapping_neg();
        if self.bits & low != 0 {
            std::cmp::Ordering::Less
        } else {
            std::cmp::Ordering::Greater
        }
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Bits {
    bits: u128,
}

impl Iterator for Bits {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.bits == 0 {
            return None;
        }
        let v = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(v)
    }
}
