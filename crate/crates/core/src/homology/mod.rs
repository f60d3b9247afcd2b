//! Homology of graded and bigraded complexes and the torsion invariants
//! read off from it.

mod bigraded;

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{smith_normal_form, BitVec, PolyV, Reducer, SparseMat};
use crate::complex::GradedComplex;

pub use bigraded::{
    bigraded_homology, c_ord_chain_interval, c_ord_hom_staircase, BigradedModule, ChainInterval,
    TorsionSubmodule,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("window not stabilized after {0} bidegrees")]
    WindowNotStabilized(usize),
    #[error("torsion is not annihilated by a power of {0}")]
    UnboundedTorsion(char),
}

/// `F2[v]^k ⊕ ⊕ F2[v]/(v^n_i)` with the Alexander grading of each
/// generator.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ModuleDecomp {
    /// Gradings of the free generators, ascending.
    pub free: Vec<i64>,
    /// `(order, grading)`, by decreasing order then grading.
    pub torsion: Vec<(u32, i64)>,
}

impl ModuleDecomp {
    pub fn new(mut free: Vec<i64>, mut torsion: Vec<(u32, i64)>) -> Self {
        assert!(
            torsion.iter().all(|&(n, _)| n >= 1),
            "torsion orders are positive"
        );
        free.sort_unstable();
        torsion.sort_unstable_by(|a, b| b.cmp(a));
        ModuleDecomp { free, torsion }
    }

    /// Ungraded module with generators in grading 0.
    pub fn from_orders(free_rank: usize, orders: &[u32]) -> Self {
        Self::new(vec![0; free_rank], orders.iter().map(|&n| (n, 0)).collect())
    }

    pub fn free_rank(&self) -> usize {
        self.free.len()
    }

    /// Torsion orders, largest first.
    pub fn torsion_orders(&self) -> Vec<u32> {
        self.torsion.iter().map(|&(n, _)| n).collect()
    }

    /// Shifted isomorphism type of `v^d M`.
    fn shifted(&self, d: u32, graded: bool) -> (Vec<i64>, Vec<(u32, i64)>) {
        let shift = if graded { i64::from(d) } else { 0 };
        let keep = |g: i64| if graded { g + shift } else { 0 };
        let free = self.free.iter().map(|&g| keep(g)).collect();
        let mut tors: Vec<(u32, i64)> = self
            .torsion
            .iter()
            .filter(|&&(n, _)| n > d)
            .map(|&(n, g)| (n - d, keep(g)))
            .collect();
        tors.sort_unstable();
        (free, tors)
    }
}

/// `min { k : v^k Tor(M) = 0 }`.
pub fn ord_v(m: &ModuleDecomp) -> u32 {
    m.torsion.iter().map(|&(n, _)| n).max().unwrap_or(0)
}

/// Smallest `d` with `v^d M1 ≅ v^d M2`, or `None` if no such `d` exists.
///
/// With `graded` the isomorphism must preserve the Alexander grading;
/// otherwise only the free rank and the shifted torsion orders are compared.
pub fn torsion_distance(m1: &ModuleDecomp, m2: &ModuleDecomp, graded: bool) -> Option<u32> {
    if m1.free_rank() != m2.free_rank() {
        return None;
    }
    let top = ord_v(m1).max(ord_v(m2));
    (0..=top).find(|&d| m1.shifted(d, graded) == m2.shifted(d, graded))
}

/// Cancels every arrow of weight one, returning the surviving generator
/// indices and their arrows `(from, to, k)` among them.
fn cancel_units(c: &GradedComplex) -> (Vec<usize>, Vec<BTreeMap<usize, u32>>) {
    let n = c.len();
    let mut out: Vec<BTreeMap<usize, u32>> = vec![BTreeMap::new(); n];
    let mut inc: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for a in c.arrows() {
        out[a.from].insert(a.to, a.weight.0);
        inc[a.to].insert(a.from);
    }
    let mut alive = vec![true; n];
    loop {
        let unit = (0..n).filter(|&x| alive[x]).find_map(|x| {
            out[x]
                .iter()
                .find(|&(&y, &k)| k == 0 && y != x)
                .map(|(&y, _)| (x, y))
        });
        let Some((x, y)) = unit else { break };
        let sources: Vec<(usize, u32)> = inc[y]
            .iter()
            .filter(|&&z| z != x)
            .map(|&z| (z, out[z][&y]))
            .collect();
        let targets: Vec<(usize, u32)> = out[x]
            .iter()
            .filter(|&(&w, _)| w != y)
            .map(|(&w, &k)| (w, k))
            .collect();
        for &(z, kz) in &sources {
            for &(w, kw) in &targets {
                if out[z].remove(&w).is_some() {
                    inc[w].remove(&z);
                } else {
                    out[z].insert(w, kz + kw);
                    inc[w].insert(z);
                }
            }
        }
        for dead in [x, y] {
            alive[dead] = false;
            for w in std::mem::take(&mut out[dead]).into_keys() {
                inc[w].remove(&dead);
            }
            for z in std::mem::take(&mut inc[dead]) {
                out[z].remove(&dead);
            }
        }
    }
    let survivors = (0..n).filter(|&x| alive[x]).collect();
    (survivors, out)
}

/// Decomposes `H_*(c)` as a graded F2[v]-module.
///
/// After cancelling unit arrows every arrow strictly lowers the Alexander
/// grading, so the complex is a filtered complex over F2 (filtered by
/// Alexander grading, `v` shifting the filtration by one) and the standard
/// persistence reduction reads off the summands: a bar from `A(y)` to
/// `A(x)` is a summand `F2[v]/(v^{A(x)-A(y)})` generated in grading `A(y)`.
pub fn decompose_graded(c: &GradedComplex) -> ModuleDecomp {
    let (mut order, out) = cancel_units(c);
    let alex = |i: usize| c.generators()[i].grading.alexander;
    order.sort_by_key(|&i| (alex(i), i));
    let mut pos = vec![usize::MAX; c.len()];
    for (k, &i) in order.iter().enumerate() {
        pos[i] = k;
    }
    let m = order.len();
    let mut low_owner: Vec<Option<usize>> = vec![None; m];
    let mut cols: Vec<BitVec> = Vec::with_capacity(m);
    let mut paired = vec![false; m];
    let mut torsion = Vec::new();
    for (j, &x) in order.iter().enumerate() {
        let mut col = BitVec::from_indices(m, out[x].keys().map(|&y| pos[y]));
        while let Some(low) = col.last_one() {
            match low_owner[low] {
                Some(k) => col.xor_assign(&cols[k]),
                None => {
                    low_owner[low] = Some(j);
                    paired[low] = true;
                    paired[j] = true;
                    let len = alex(x) - alex(order[low]);
                    debug_assert!(len > 0);
                    torsion.push((u32::try_from(len).expect("positive bar"), alex(order[low])));
                    break;
                }
            }
        }
        cols.push(col);
    }
    let free = (0..m)
        .filter(|&k| !paired[k])
        .map(|k| alex(order[k]))
        .collect();
    ModuleDecomp::new(free, torsion)
}

/// Free rank and torsion orders from the Smith normal form of the
/// differential; an independent route to the same data without gradings.
pub fn decompose_graded_snf(c: &GradedComplex) -> (usize, Vec<u32>) {
    let n = c.len();
    let mut m = SparseMat::new(n, n);
    for a in c.arrows() {
        m.set(a.to, a.from, PolyV::monomial(a.weight.0 as usize));
    }
    let factors = smith_normal_form(&m);
    let mut orders: Vec<u32> = factors
        .iter()
        .map(|f| {
            f.as_monomial()
                .expect("homogeneous matrix has monomial factors")
        })
        .filter(|&k| k > 0)
        .map(|k| k as u32)
        .collect();
    orders.sort_unstable_by(|a, b| b.cmp(a));
    (n - 2 * factors.len(), orders)
}

/// Kernel of the linear map sending the `i`-th basis vector to
/// `images[i]`, as vectors over the domain.
pub(crate) fn kernel_of_images(images: &[BitVec], target_len: usize) -> Vec<BitVec> {
    let dom = images.len();
    let mut red = Reducer::new(target_len, dom);
    let mut tracked_of: Vec<usize> = Vec::new();
    let mut kernel = Vec::new();
    for (i, img) in images.iter().enumerate() {
        let mut w = img.clone();
        let tag = red.reduce(&mut w);
        if w.is_zero() {
            let mut v = BitVec::unit(dom, i);
            for t in tag.ones() {
                v.toggle(tracked_of[t]);
            }
            kernel.push(v);
        } else {
            red.insert_tracked(img.clone());
            tracked_of.push(i);
        }
    }
    kernel
}
