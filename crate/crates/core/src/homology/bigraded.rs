//! Homology over F2[u,v], one bidegree at a time.
//!
//! With `u = v = 1` the differential becomes an F2-matrix `D` on the
//! generators. The chain group in bidegree `(a, b)` has one basis element
//! `u^i v^j x` for each generator `x` with `gr(x) - (2i, 2j) = (a, b)`, so it
//! is spanned by a subset of the generators and the differential there is
//! the restriction of `D`. Multiplication by `u` or `v` is inclusion of
//! these subsets, so a cycle is the same bit vector in every bidegree it
//! reaches.
//!
//! Below the smallest `gr_u` every generator of the right parity is present
//! and stays present, so `u` is an isomorphism on chains (hence homology)
//! there; likewise for `v`. The window `[min_u - 2, max_u] x [min_v - 2,
//! max_v]` therefore determines the whole module, and every bidegree below
//! it is identified with one of the two lowest rows or columns.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{kernel_of_images, HomologyError};
use crate::algebra::{BitVec, Reducer};
use crate::complex::BigradedComplex;
use crate::knots::{leaf_staircase, realize_bigraded, KnotExpr, StaircaseSpec};
use crate::Error;

/// Largest number of bidegrees a window may span.
const WINDOW_CAP: usize = 1 << 22;

#[derive(Clone, Debug)]
struct Piece {
    /// Boundaries (untracked) followed by the homology representatives
    /// (tracked, in order).
    red: Reducer,
    reps: Vec<BitVec>,
}

/// Homology of a bigraded complex with its `u`- and `v`-actions.
#[derive(Clone, Debug)]
pub struct BigradedModule {
    gr: Vec<(i64, i64)>,
    dcols: Vec<BitVec>,
    lo: (i64, i64),
    hi: (i64, i64),
    pieces: BTreeMap<(i64, i64), Piece>,
}

fn present(g: (i64, i64), a: i64, b: i64) -> bool {
    a <= g.0 && b <= g.1 && (g.0 - a) % 2 == 0 && (g.1 - b) % 2 == 0
}

/// Raises `x` by steps of two until it is at least `lo`.
fn lift_to(x: i64, lo: i64) -> i64 {
    if x >= lo {
        x
    } else {
        x + 2 * ((lo - x + 1) / 2)
    }
}

pub fn bigraded_homology(c: &BigradedComplex) -> Result<BigradedModule, HomologyError> {
    let n = c.len();
    let gr: Vec<(i64, i64)> = c
        .generators()
        .iter()
        .map(|g| (g.grading.gr_u, g.grading.gr_v))
        .collect();
    let mut dcols = vec![BitVec::zeros(n); n];
    for a in c.arrows() {
        dcols[a.from].toggle(a.to);
    }
    if n == 0 {
        return Ok(BigradedModule {
            gr,
            dcols,
            lo: (0, 0),
            hi: (-1, -1),
            pieces: BTreeMap::new(),
        });
    }
    let min_u = gr.iter().map(|g| g.0).min().expect("nonempty");
    let max_u = gr.iter().map(|g| g.0).max().expect("nonempty");
    let min_v = gr.iter().map(|g| g.1).min().expect("nonempty");
    let max_v = gr.iter().map(|g| g.1).max().expect("nonempty");
    let lo = (min_u - 2, min_v - 2);
    let hi = (max_u, max_v);
    let span = ((hi.0 - lo.0 + 1) * (hi.1 - lo.1 + 1)) as usize;
    if span > WINDOW_CAP {
        return Err(HomologyError::WindowNotStabilized(span));
    }
    let mut m = BigradedModule {
        gr,
        dcols,
        lo,
        hi,
        pieces: BTreeMap::new(),
    };
    for a in lo.0..=hi.0 {
        for b in lo.1..=hi.1 {
            let piece = m.compute_piece(a, b);
            if !piece.reps.is_empty() {
                m.pieces.insert((a, b), piece);
            }
        }
    }
    Ok(m)
}

impl BigradedModule {
    fn support(&self, a: i64, b: i64) -> Vec<usize> {
        (0..self.gr.len())
            .filter(|&x| present(self.gr[x], a, b))
            .collect()
    }

    fn compute_piece(&self, a: i64, b: i64) -> Piece {
        let n = self.gr.len();
        let here = self.support(a, b);
        let images: Vec<BitVec> = here.iter().map(|&x| self.dcols[x].clone()).collect();
        let cycles: Vec<BitVec> = kernel_of_images(&images, n)
            .into_iter()
            .map(|k| BitVec::from_indices(n, k.ones().map(|i| here[i])))
            .collect();
        let mut boundaries = Reducer::new(n, 0);
        for y in self.support(a + 1, b + 1) {
            boundaries.insert(self.dcols[y].clone());
        }
        let mut red = boundaries.clone();
        let reps: Vec<BitVec> = cycles
            .into_iter()
            .filter(|z| boundaries.insert(z.clone()))
            .collect();
        red.set_capacity(reps.len());
        for z in &reps {
            red.insert_tracked(z.clone());
        }
        Piece { red, reps }
    }

    /// The window `(lo, hi)` outside of which nothing new happens.
    pub fn window(&self) -> ((i64, i64), (i64, i64)) {
        (self.lo, self.hi)
    }

    /// Window position identified with `(a, b)`, or `None` where the
    /// module vanishes.
    fn locate(&self, a: i64, b: i64) -> Option<(i64, i64)> {
        if a > self.hi.0 || b > self.hi.1 {
            return None;
        }
        Some((lift_to(a, self.lo.0), lift_to(b, self.lo.1)))
    }

    pub fn dim(&self, a: i64, b: i64) -> usize {
        self.locate(a, b)
            .and_then(|p| self.pieces.get(&p))
            .map_or(0, |p| p.reps.len())
    }

    /// Dimension computed directly in bidegree `(a, b)`, without using the
    /// window. Used to check stabilization.
    pub fn dim_direct(&self, a: i64, b: i64) -> usize {
        self.compute_piece(a, b).reps.len()
    }

    /// Cycle representatives of a basis of homology in bidegree `(a, b)`.
    pub fn basis(&self, a: i64, b: i64) -> &[BitVec] {
        self.locate(a, b)
            .and_then(|p| self.pieces.get(&p))
            .map_or(&[], |p| &p.reps)
    }

    /// Coordinates of the class of cycle `z` in bidegree `(a, b)`. The
    /// cycle must be supported on generators present there.
    fn coords(&self, a: i64, b: i64, z: &BitVec) -> BitVec {
        match self.locate(a, b).and_then(|p| self.pieces.get(&p)) {
            None => BitVec::zeros(0),
            Some(p) => {
                let mut w = z.clone();
                let tag = p.red.reduce(&mut w);
                debug_assert!(w.is_zero(), "not a cycle in this bidegree");
                tag
            }
        }
    }

    fn is_zero_class(&self, a: i64, b: i64, z: &BitVec) -> bool {
        self.coords(a, b, z).is_zero()
    }

    /// Bidegree where `(uv)^N` acts invertibly, reached from `(a, b)`.
    fn corner(&self, a: i64, b: i64) -> (i64, i64) {
        let c = |x: i64, lo: i64| if x <= lo + 1 { x } else { lo + (x - lo) % 2 };
        (c(a, self.lo.0), c(b, self.lo.1))
    }

    /// Rank over F2[u,v]: the dimension in the stable corner, summed over
    /// the four parity classes.
    pub fn free_rank(&self) -> usize {
        let mut r = 0;
        for da in 0..2 {
            for db in 0..2 {
                r += self.dim(self.lo.0 + da, self.lo.1 + db);
            }
        }
        r
    }

    /// `dim M / (u, v) M`, the minimal number of homogeneous generators.
    pub fn minimal_generators(&self) -> usize {
        let mut total = 0;
        for (&(a, b), p) in &self.pieces {
            let mut images: Vec<BitVec> = Vec::new();
            for (sa, sb) in [(a + 2, b), (a, b + 2)] {
                for z in self.basis(sa, sb) {
                    images.push(self.coords(a, b, z));
                }
            }
            let rank = images.len() - kernel_of_images(&images, p.reps.len()).len();
            total += p.reps.len() - rank;
        }
        total
    }

    /// Homogeneous classes killed by some `(uv)^N`.
    pub fn torsion_submodule(&self) -> Result<TorsionSubmodule, HomologyError> {
        let mut pieces = BTreeMap::new();
        for (&(a, b), p) in &self.pieces {
            let (ca, cb) = self.corner(a, b);
            let images: Vec<BitVec> = p.reps.iter().map(|z| self.coords(ca, cb, z)).collect();
            let dim_c = self.dim(ca, cb);
            let kernel = kernel_of_images(&images, dim_c);
            if kernel.is_empty() {
                continue;
            }
            if a <= self.lo.0 + 1 {
                return Err(HomologyError::UnboundedTorsion('u'));
            }
            if b <= self.lo.1 + 1 {
                return Err(HomologyError::UnboundedTorsion('v'));
            }
            let n = self.gr.len();
            let lifted = kernel
                .iter()
                .map(|k| {
                    let mut z = BitVec::zeros(n);
                    for i in k.ones() {
                        z.xor_assign(&p.reps[i]);
                    }
                    z
                })
                .collect();
            pieces.insert((a, b), lifted);
        }
        Ok(TorsionSubmodule { pieces })
    }

    /// Whether `u^i v^j` kills all of `t`.
    fn kills(&self, t: &TorsionSubmodule, i: u32, j: u32) -> bool {
        t.pieces.iter().all(|(&(a, b), zs)| {
            let (ta, tb) = (a - 2 * i64::from(i), b - 2 * i64::from(j));
            zs.iter().all(|z| self.is_zero_class(ta, tb, z))
        })
    }

    fn annihilating_power(&self, t: &TorsionSubmodule, along_u: bool) -> u32 {
        let mut k = 0;
        loop {
            let killed = if along_u {
                self.kills(t, k, 0)
            } else {
                self.kills(t, 0, k)
            };
            if killed {
                return k;
            }
            k += 1;
        }
    }

    /// Smallest `k` with `v^k` killing the torsion submodule.
    pub fn c_ord_v(&self) -> Result<u32, HomologyError> {
        Ok(self.annihilating_power(&self.torsion_submodule()?, false))
    }

    /// Smallest `k` with `u^k` killing the torsion submodule.
    pub fn c_ord_u(&self) -> Result<u32, HomologyError> {
        Ok(self.annihilating_power(&self.torsion_submodule()?, true))
    }

    /// Smallest `N` with `u^i v^j` killing the torsion submodule whenever
    /// `i + j = N`.
    pub fn c_ord_uv(&self) -> Result<u32, HomologyError> {
        let t = self.torsion_submodule()?;
        let cu = self.annihilating_power(&t, true);
        let cv = self.annihilating_power(&t, false);
        let start = cu.max(cv);
        let stop = (cu + cv).saturating_sub(1).max(start);
        Ok((start..=stop)
            .find(|&n| (0..=n).all(|i| self.kills(&t, i, n - i)))
            .unwrap_or(stop))
    }
}

/// The torsion submodule, bidegree by bidegree.
#[derive(Clone, Debug, Default)]
pub struct TorsionSubmodule {
    pieces: BTreeMap<(i64, i64), Vec<BitVec>>,
}

impl TorsionSubmodule {
    /// Total dimension over F2.
    pub fn dim(&self) -> usize {
        self.pieces.values().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.pieces.is_empty()
    }

    /// `(bidegree, dimension)` pairs with nonzero dimension.
    pub fn dims(&self) -> impl Iterator<Item = ((i64, i64), usize)> + '_ {
        self.pieces.iter().map(|(&k, v)| (k, v.len()))
    }
}

/// Homomorphism torsion order of an L-space knot: half the sum of the gaps.
pub fn c_ord_hom_staircase(s: &StaircaseSpec) -> u32 {
    let total: u32 = s.gaps().iter().sum();
    total / 2
}

/// Bounds `lo <= Ord^Chain_{u,v} <= hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ChainInterval {
    pub lo: u32,
    /// `None` when no closed-form upper bound is known.
    pub hi: Option<u32>,
    pub exact: bool,
}

/// Closed-form upper bound on the chain torsion order, where one is known.
fn chain_upper(e: &KnotExpr) -> Result<Option<u32>, Error> {
    if let Some(s) = leaf_staircase(e)? {
        return Ok(Some(c_ord_hom_staircase(&s)));
    }
    if let Some(k) = e.as_self_mirror_sum() {
        if let Some((p, q)) = k.as_torus() {
            return Ok(Some(p.min(q) - 1));
        }
        if k.normalized() == KnotExpr::Unknot {
            return Ok(Some(0));
        }
    }
    Ok(None)
}

/// Interval for the chain torsion order of `e`.
///
/// The lower end is the largest of the computed `c_ord_v`, `c_ord_uv` and,
/// for L-space leaves, the homomorphism torsion order; the upper end is a
/// closed form when one applies.
pub fn c_ord_chain_interval(e: &KnotExpr) -> Result<ChainInterval, Error> {
    let e = e.normalized();
    let h = bigraded_homology(&realize_bigraded(&e)?)?;
    let mut lo = h.c_ord_uv()?.max(h.c_ord_v()?);
    if let Some(s) = leaf_staircase(&e)? {
        lo = lo.max(c_ord_hom_staircase(&s));
    }
    let hi = chain_upper(&e)?;
    Ok(ChainInterval {
        lo,
        hi,
        exact: hi == Some(lo),
    })
}
