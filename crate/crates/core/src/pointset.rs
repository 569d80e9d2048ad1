//! Fixed-width subsets of a frame's points.
//!
//! A [`PointSet`] is a bit pattern over point indices `0..width`. Every dual
//! algebra in the crate has point sets as its elements, so all Boolean
//! operations are single word operations on a `u128`.

use std::fmt;

/// Largest frame size supported by the bit representation.
pub const MAX_POINTS: usize = 128;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointSet {
    width: u32,
    bits: u128,
}

impl PointSet {
    pub fn empty(width: usize) -> Self {
        assert!(width <= MAX_POINTS, "width {width} exceeds {MAX_POINTS}");
        PointSet {
            width: width as u32,
            bits: 0,
        }
    }

    pub fn full(width: usize) -> Self {
        PointSet {
            width: width as u32,
            bits: mask(width),
        }
    }

    pub fn singleton(width: usize, i: usize) -> Self {
        let mut s = Self::empty(width);
        s.insert(i);
        s
    }

    /// Builds a set from raw bits; bits at or above `width` are dropped.
    pub fn from_bits(width: usize, bits: u128) -> Self {
        assert!(width <= MAX_POINTS, "width {width} exceeds {MAX_POINTS}");
        PointSet {
            width: width as u32,
            bits: bits & mask(width),
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(width: usize, it: I) -> Self {
        let mut s = Self::empty(width);
        for i in it {
            s.insert(i);
        }
        s
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.width as usize
    }

    #[inline]
    pub fn bits(&self) -> u128 {
        self.bits
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.width() && self.bits >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.width(), "index {i} out of range {}", self.width);
        self.bits |= 1u128 << i;
    }

    pub fn remove(&mut self, i: usize) {
        if i < self.width() {
            self.bits &= !(1u128 << i);
        }
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn is_full(&self) -> bool {
        self.bits == mask(self.width())
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn union(&self, other: &Self) -> Self {
        debug_assert_eq!(self.width, other.width);
        PointSet {
            width: self.width,
            bits: self.bits | other.bits,
        }
    }

    #[inline]
    pub fn intersection(&self, other: &Self) -> Self {
        debug_assert_eq!(self.width, other.width);
        PointSet {
            width: self.width,
            bits: self.bits & other.bits,
        }
    }

    #[inline]
    pub fn difference(&self, other: &Self) -> Self {
        debug_assert_eq!(self.width, other.width);
        PointSet {
            width: self.width,
            bits: self.bits & !other.bits,
        }
    }

    #[inline]
    pub fn complement(&self) -> Self {
        PointSet {
            width: self.width,
            bits: !self.bits & mask(self.width()),
        }
    }

    #[inline]
    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits & !other.bits == 0
    }

    #[inline]
    pub fn intersects(&self, other: &Self) -> bool {
        self.bits & other.bits != 0
    }

    /// Least member, if any.
    pub fn first(&self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> Ones {
        Ones { bits: self.bits }
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[inline]
fn mask(width: usize) -> u128 {
    if width >= 128 {
        u128::MAX
    } else {
        (1u128 << width) - 1
    }
}

/// Iterator over the members of a [`PointSet`] in increasing order.
pub struct Ones {
    bits: u128,
}

impl Iterator for Ones {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.bits == 0 {
            return None;
        }
        let i = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(i)
    }
}

impl IntoIterator for &PointSet {
    type Item = usize;
    type IntoIter = Ones;

    fn into_iter(self) -> Ones {
        self.iter()
    }
}
