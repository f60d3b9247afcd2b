use std::collections::BTreeMap;

/// Coefficient types that can live in a [`SparseMat`].
pub trait Coefficient: Clone + PartialEq {
    fn is_zero(&self) -> bool;
}

impl Coefficient for super::F2 {
    fn is_zero(&self) -> bool {
        !self.0
    }
}

impl Coefficient for super::PolyV {
    fn is_zero(&self) -> bool {
        super::PolyV::is_zero(self)
    }
}

impl Coefficient for super::MonoUV {
    // a bare monomial is never zero; zero entries are simply absent
    fn is_zero(&self) -> bool {
        false
    }
}

/// Sparse matrix keyed by `(row, col)`; only nonzero entries are stored.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMat<E> {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), E>,
}

impl<E: Coefficient> SparseMat<E> {
    pub fn new(rows: usize, cols: usize) -> Self {
        SparseMat {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    /// Sets an entry; storing zero removes it.
    pub fn set(&mut self, r: usize, c: usize, e: E) {
        assert!(
            r < self.rows && c < self.cols,
            "index ({r}, {c}) out of range for {}x{} matrix",
            self.rows,
            self.cols
        );
        if e.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), e);
        }
    }

    pub fn get(&self, r: usize, c: usize) -> Option<&E> {
        self.entries.get(&(r, c))
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &E)> {
        self.entries.iter().map(|(&(r, c), e)| (r, c, e))
    }

    pub fn row_entries(&self, r: usize) -> impl Iterator<Item = (usize, &E)> {
        self.entries
            .range((r, 0)..(r + 1, 0))
            .map(|(&(_, c), e)| (c, e))
    }

    pub fn map<F: Coefficient>(&self, f: impl Fn(&E) -> F) -> SparseMat<F> {
        let mut out = SparseMat::new(self.rows, self.cols);
        for (r, c, e) in self.iter() {
            out.set(r, c, f(e));
        }
        out
    }
}

impl<E: Coefficient> SparseMat<E> {
    /// Builds a matrix from dense rows; zero entries are dropped.
    pub fn from_dense(rows: Vec<Vec<E>>) -> Self {
        let nr = rows.len();
        let nc = rows.first().map_or(0, Vec::len);
        let mut m = SparseMat::new(nr, nc);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), nc, "ragged dense matrix");
            for (j, e) in row.into_iter().enumerate() {
                m.set(i, j, e);
            }
        }
        m
    }
}
