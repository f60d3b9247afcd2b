use std::fmt;

use super::sparse::SparseMat;

/// An element of the field with two elements.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F2(pub bool);

impl F2 {
    pub const ZERO: F2 = F2(false);
    pub const ONE: F2 = F2(true);
}

impl std::ops::Add for F2 {
    type Output = F2;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: F2) -> F2 {
        F2(self.0 ^ rhs.0)
    }
}

impl std::ops::Mul for F2 {
    type Output = F2;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: F2) -> F2 {
        F2(self.0 & rhs.0)
    }
}

impl fmt::Display for F2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0 as u8)
    }
}

/// Fixed-length dense vector over F2, packed into 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    pub fn from_indices(len: usize, idx: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in idx {
            v.toggle(i);
        }
        v
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i >> 6] >> (i & 63)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, b: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i & 63);
        if b {
            self.words[i >> 6] |= mask;
        } else {
            self.words[i >> 6] &= !mask;
        }
    }

    #[inline]
    pub fn toggle(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i >> 6] ^= 1u64 << (i & 63);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Index of the lowest set bit.
    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
    }

    /// Index of the highest set bit.
    pub fn last_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * 64 + 63 - w.leading_zeros() as usize)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + t)
            })
        })
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.len)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect();
        write!(f, "[{s}]")
    }
}

/// Incremental row reduction over F2.
///
/// Rows are stored in insertion order, each already reduced against every
/// earlier row, so a single pass in insertion order fully reduces a vector.
/// Every row carries a tag recording which of the inserted "tracked" vectors
/// it is a combination of (modulo the untracked rows).
#[derive(Clone, Debug)]
pub struct Reducer {
    len: usize,
    rows: Vec<(usize, BitVec, BitVec)>,
    tracked: usize,
    capacity: usize,
}

impl Reducer {
    /// `capacity` bounds the number of tracked insertions.
    pub fn new(len: usize, capacity: usize) -> Self {
        Reducer {
            len,
            rows: Vec::new(),
            tracked: 0,
            capacity,
        }
    }

    /// Resizes tags to `capacity`; only valid before any tracked insertion.
    pub fn set_capacity(&mut self, capacity: usize) {
        assert_eq!(self.tracked, 0, "capacity fixed after tracked insertion");
        self.capacity = capacity;
        for (_, _, t) in &mut self.rows {
            *t = BitVec::zeros(capacity);
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn tracked(&self) -> usize {
        self.tracked
    }

    fn reduce_with_tag(&self, v: &mut BitVec, tag: &mut BitVec) {
        for (p, row, t) in &self.rows {
            if v.get(*p) {
                v.xor_assign(row);
                tag.xor_assign(t);
            }
        }
    }

    /// Reduces `v` in place; returns the tag of the combination removed.
    pub fn reduce(&self, v: &mut BitVec) -> BitVec {
        let mut tag = BitVec::zeros(self.capacity);
        self.reduce_with_tag(v, &mut tag);
        tag
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        let mut w = v.clone();
        self.reduce(&mut w);
        w.is_zero()
    }

    /// Inserts `v` without tracking. Returns whether the rank grew.
    pub fn insert(&mut self, v: BitVec) -> bool {
        debug_assert_eq!(v.len(), self.len);
        let mut v = v;
        let mut tag = BitVec::zeros(self.capacity);
        self.reduce_with_tag(&mut v, &mut tag);
        match v.first_one() {
            Some(p) => {
                self.rows.push((p, v, tag));
                true
            }
            None => false,
        }
    }

    /// Inserts `v` as a new tracked vector if it is independent of the
    /// current span. Returns its tracked index.
    pub fn insert_tracked(&mut self, v: BitVec) -> Option<usize> {
        debug_assert_eq!(v.len(), self.len);
        let mut v = v;
        let mut tag = BitVec::zeros(self.capacity);
        self.reduce_with_tag(&mut v, &mut tag);
        let p = v.first_one()?;
        let k = self.tracked;
        assert!(k < self.capacity, "reducer tracking capacity exceeded");
        tag.toggle(k);
        self.tracked += 1;
        self.rows.push((p, v, tag));
        Some(k)
    }
}

/// Null space of a matrix over F2, as a basis in reduced echelon form.
///
/// Each basis vector has a distinct leading free column carrying a 1 that
/// no other basis vector has.
pub fn kernel_basis_f2(m: &SparseMat<F2>) -> Vec<BitVec> {
    let rows: Vec<BitVec> = (0..m.rows())
        .map(|r| BitVec::from_indices(m.cols(), m.row_entries(r).map(|(c, _)| c)))
        .collect();
    kernel_of_rows(m.cols(), rows)
}

/// Kernel of the linear map whose matrix has the given rows.
fn kernel_of_rows(cols: usize, mut rows: Vec<BitVec>) -> Vec<BitVec> {
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(found) = (r..rows.len()).find(|&i| rows[i].get(c)) else {
            continue;
        };
        rows.swap(r, found);
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row.get(c) {
                row.xor_assign(&pivot_row);
            }
        }
        pivots.push((r, c));
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; cols];
        for &(_, c) in &pivots {
            v[c] = true;
        }
        v
    };
    (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = BitVec::unit(cols, free);
            for &(pr, pc) in &pivots {
                if rows[pr].get(free) {
                    v.set(pc, true);
                }
            }
            v
        })
        .collect()
}

/// Rank of a matrix over F2 given by rows.
#[cfg(test)]
fn rank_of_rows(len: usize, rows: impl IntoIterator<Item = BitVec>) -> usize {
    let mut red = Reducer::new(len, 0);
    for r in rows {
        red.insert(r);
    }
    red.rank()
}
