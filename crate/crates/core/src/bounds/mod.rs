//! Lower bounds and consistency rules derived from torsion orders.
//!
//! Every checker is one-sided: it can certify that no cobordism with the
//! given data exists, never that one does.

use std::fmt;

use serde::Serialize;
use thiserror::Error as ThisError;

use crate::homology::{
    bigraded_homology, c_ord_chain_interval, decompose_graded, ord_v, torsion_distance,
    ChainInterval, ModuleDecomp,
};
use crate::knots::{leaf_staircase, realize_bigraded, realize_graded, KnotExpr};
use crate::Error;

pub const RULE_BRIDGE: &str = "Ord_v(K) <= br(K) - 1";
pub const RULE_FUSION: &str = "Ord_v(K) <= Fus(K)";
pub const RULE_BAND_UNLINK: &str = "Ord_v(K) <= ul_b(K)";
pub const RULE_SLICE_MINIMA: &str = "Ord_v(K) <= m - 1 for a slice disk with m minima";
pub const RULE_RIBBON_DISTANCE: &str = "d_t(K, K') <= d_r(K, K')";
pub const RULE_REFINED_DISTANCE: &str = "|Ord_v(K0) - Ord_v(K1)| <= d(K0, K1)";
pub const RULE_COBORDISM: &str = "Ord_v(K0) <= max{M, Ord_v(K1)} + 2g(S)";
pub const RULE_COBORDISM_CHAIN: &str = "Ord^Chain_{u,v}(K0) <= max{M, Ord^Chain_{u,v}(K1)} + 2g(S)";
pub const RULE_RIBBON_CONCORDANCE: &str =
    "b <= Ord_v(K0) = Ord_v(K1) or Ord_v(K0) <= Ord_v(K1) <= b";
pub const RULE_RIBBON_COBORDISM: &str = "Ord_v(K0) - Ord_v(K1) <= 2g(S)";
pub const RULE_CHAIN_UL_B: &str = "Ord^Chain_{u,v}(K) <= ul_b(K)";
pub const RULE_CHAIN_FUSION: &str = "Ord^Chain_{u,v}(K) <= Fus(K)";
pub const RULE_CONCORDANT_TORUS: &str = "K concordant to T(p,q) implies br(K) >= min{p,q}";

#[derive(Debug, Clone, PartialEq, Eq, ThisError)]
pub enum BoundsError {
    #[error("{name} must be non-negative, got {value}")]
    Negative { name: &'static str, value: i64 },
    #[error("Euler characteristic mismatch: 2g != b - m - M ({lhs} != {rhs})")]
    Euler { lhs: i64, rhs: i64 },
}

fn nonneg(name: &'static str, value: i64) -> Result<u64, BoundsError> {
    u64::try_from(value).map_err(|_| BoundsError::Negative { name, value })
}

/// Outcome of a consistency rule, with the inequality instantiated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub consistent: bool,
    pub rule: &'static str,
    pub instance: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.consistent {
            "consistent"
        } else {
            "obstructed"
        };
        write!(f, "{verdict}: {} [{}]", self.instance, self.rule)
    }
}

/// Is there room for a connected cobordism from `K0` to `K1` with `M`
/// local maxima and genus `g`?
pub fn cobordism_consistency(
    ord0: i64,
    ord1: i64,
    maxima: i64,
    g: i64,
) -> Result<Check, BoundsError> {
    let ord0 = nonneg("ord0", ord0)?;
    let ord1 = nonneg("ord1", ord1)?;
    let m = nonneg("M", maxima)?;
    let g = nonneg("g", g)?;
    let rhs = m.max(ord1) + 2 * g;
    let consistent = ord0 <= rhs;
    let op = if consistent { "<=" } else { ">" };
    Ok(Check {
        consistent,
        rule: RULE_COBORDISM,
        instance: format!("{ord0} {op} max{{{m}, {ord1}}} + 2*{g} = {rhs}"),
    })
}

/// The same rule for chain torsion orders known only up to an interval.
/// Obstructed only when the lower end for `K0` already exceeds the largest
/// value the right-hand side can take.
pub fn cobordism_consistency_chain(
    k0: &ChainInterval,
    k1: &ChainInterval,
    maxima: i64,
    g: i64,
) -> Result<Check, BoundsError> {
    let m = nonneg("M", maxima)?;
    let g = nonneg("g", g)?;
    let lo0 = u64::from(k0.lo);
    let Some(hi1) = k1.hi.map(u64::from) else {
        return Ok(Check {
            consistent: true,
            rule: RULE_COBORDISM_CHAIN,
            instance: format!("{lo0} <= max{{{m}, ?}} + 2*{g}: no upper bound for K1"),
        });
    };
    let rhs = m.max(hi1) + 2 * g;
    let consistent = lo0 <= rhs;
    let op = if consistent { "<=" } else { ">" };
    Ok(Check {
        consistent,
        rule: RULE_COBORDISM_CHAIN,
        instance: format!("{lo0} {op} max{{{m}, {hi1}}} + 2*{g} = {rhs}"),
    })
}

/// Ribbon concordance from `K0` to `K1` with `b` saddles.
pub fn ribbon_concordance_check(ord0: i64, ord1: i64, b: i64) -> Result<Check, BoundsError> {
    let ord0 = nonneg("ord0", ord0)?;
    let ord1 = nonneg("ord1", ord1)?;
    let b = nonneg("b", b)?;
    let first = b <= ord0 && ord0 == ord1;
    let second = ord0 <= ord1 && ord1 <= b;
    let instance = if first {
        format!("{b} <= {ord0} = {ord1}")
    } else if second {
        format!("{ord0} <= {ord1} <= {b}")
    } else {
        format!("neither {b} <= {ord0} = {ord1} nor {ord0} <= {ord1} <= {b}")
    };
    Ok(Check {
        consistent: first || second,
        rule: RULE_RIBBON_CONCORDANCE,
        instance,
    })
}

/// Ribbon cobordism of genus `g` from `K0` to `K1`.
pub fn ribbon_cobordism_check(ord0: i64, ord1: i64, g: i64) -> Result<Check, BoundsError> {
    let ord0 = nonneg("ord0", ord0)?;
    let ord1 = nonneg("ord1", ord1)?;
    let g = nonneg("g", g)?;
    let consistent = ord0 <= ord1 + 2 * g;
    let op = if consistent { "<=" } else { ">" };
    Ok(Check {
        consistent,
        rule: RULE_RIBBON_COBORDISM,
        instance: format!("{ord0} - {ord1} {op} 2*{g}"),
    })
}

/// Critical point counts of a cobordism: `m` births, `b` saddles,
/// `M` deaths, genus `g`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CobordismData {
    pub m: i64,
    pub b: Option<i64>,
    #[serde(rename = "M")]
    pub big_m: i64,
    pub g: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceNorm {
    /// `max{m, M} + 2g`.
    pub norm: u64,
    /// `max{b - m, b - M}`, equal to `norm`, when `b` is known.
    pub saddle_form: Option<u64>,
    pub saddles: Option<u64>,
}

/// `|S| = max{m, M} + 2g(S)`.
pub fn surface_norm(d: &CobordismData) -> Result<SurfaceNorm, BoundsError> {
    let m = nonneg("m", d.m)?;
    let big_m = nonneg("M", d.big_m)?;
    let g = nonneg("g", d.g)?;
    let norm = m.max(big_m) + 2 * g;
    let Some(b) = d.b else {
        return Ok(SurfaceNorm {
            norm,
            saddle_form: None,
            saddles: None,
        });
    };
    let b = nonneg("b", b)?;
    let (lhs, rhs) = (2 * d.g, b as i64 - d.m - d.big_m);
    if lhs != rhs {
        return Err(BoundsError::Euler { lhs, rhs });
    }
    Ok(SurfaceNorm {
        norm,
        saddle_form: Some((b - m).max(b - big_m)),
        saddles: Some(b),
    })
}

/// Ord_v of an expression.
pub fn ord_v_of(e: &KnotExpr) -> Result<u32, Error> {
    Ok(ord_v(&decompose_graded(&realize_graded(e)?)))
}

/// Lower bound on the refined cobordism distance (and on the number of
/// oriented band moves).
pub fn refined_distance_lower(e1: &KnotExpr, e2: &KnotExpr) -> Result<u32, Error> {
    Ok(ord_v_of(e1)?.abs_diff(ord_v_of(e2)?))
}

/// Lower bound on the ribbon distance, `None` meaning infinite.
pub fn ribbon_distance_lower(
    e1: &KnotExpr,
    e2: &KnotExpr,
    graded: bool,
) -> Result<Option<u32>, Error> {
    let d1 = decompose_graded(&realize_graded(e1)?);
    let d2 = decompose_graded(&realize_graded(e2)?);
    Ok(torsion_distance(&d1, &d2, graded))
}

/// Conditional rule: a knot concordant to `T(p,q)` has bridge index at
/// least `min{p,q}`.
pub fn concordant_torus_bridge(p: u32, q: u32) -> u32 {
    p.min(q)
}

/// The invariant `N` agrees with `Ord_v` on L-space knots; `None` for any
/// other expression.
pub fn n_invariant(e: &KnotExpr) -> Result<Option<u32>, Error> {
    match leaf_staircase(&e.normalized())? {
        Some(_) => Ok(Some(ord_v_of(e)?)),
        None => Ok(None),
    }
}

/// One lower bound, with the exact value or an upper bound when known.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bound {
    pub quantity: &'static str,
    pub lower: u32,
    pub rule: &'static str,
    pub upper: Option<u32>,
    pub upper_source: Option<&'static str>,
}

impl Bound {
    fn new(quantity: &'static str, lower: u32, rule: &'static str) -> Self {
        Bound {
            quantity,
            lower,
            rule,
            upper: None,
            upper_source: None,
        }
    }

    fn with_upper(mut self, upper: u32, source: &'static str) -> Self {
        self.upper = Some(upper);
        self.upper_source = Some(source);
        self
    }

    /// The lower bound is attained.
    pub fn sharp(&self) -> bool {
        self.upper == Some(self.lower)
    }
}

/// Known invariants of `T(p,q)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorusFacts {
    pub p: u32,
    pub q: u32,
    pub bridge: u32,
    pub ul_b: u32,
    pub g3: u32,
    pub g4: u32,
    pub genus_chain: String,
}

impl TorusFacts {
    pub fn new(p: u32, q: u32) -> Self {
        let g = (p - 1) * (q - 1) / 2;
        let ul_b = (p - 1) * (q - 1);
        TorusFacts {
            p,
            q,
            bridge: p.min(q),
            ul_b,
            g3: g,
            g4: g,
            genus_chain: format!(
                "2g_4 = {} <= 2g_r <= ul_b = {ul_b} <= u_b <= 2g_3 = {}",
                2 * g,
                2 * g
            ),
        }
    }
}

/// Two-variable invariants and the bounds they give.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Generalized {
    pub c_ord_v: u32,
    pub c_ord_uv: u32,
    pub chain: ChainInterval,
    pub bounds: Vec<Bound>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub expr: String,
    pub decomposition: ModuleDecomp,
    pub ord_v: u32,
    /// `d_t(K, U)`; `None` is infinite.
    pub dt_unknot: Option<u32>,
    pub bounds: Vec<Bound>,
    pub torus: Option<TorusFacts>,
    pub generalized: Option<Generalized>,
}

impl BoundReport {
    pub fn bound(&self, quantity: &str) -> Option<&Bound> {
        self.bounds.iter().find(|b| b.quantity == quantity)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ReportOptions {
    /// Also compute the two-variable invariants.
    pub bigraded: bool,
    /// Compare gradings when computing torsion distances.
    pub graded_distance: bool,
}

/// All bounds for `e`.
pub fn bound_report(e: &KnotExpr, opts: ReportOptions) -> Result<BoundReport, Error> {
    let decomposition = decompose_graded(&realize_graded(e)?);
    let ord = ord_v(&decomposition);
    let unknot = decompose_graded(&realize_graded(&KnotExpr::Unknot)?);
    let dt_unknot = torsion_distance(&decomposition, &unknot, opts.graded_distance);
    let normalized = e.normalized();
    let torus = normalized.as_torus().map(|(p, q)| TorusFacts::new(p, q));
    let self_mirror_torus = normalized
        .as_self_mirror_sum()
        .and_then(KnotExpr::as_torus)
        .map(|(p, q)| p.min(q) - 1);

    let mut bridge = Bound::new("bridge", ord + 1, RULE_BRIDGE);
    let mut band = Bound::new("band_unlink", ord, RULE_BAND_UNLINK);
    let mut fusion = Bound::new("fusion", ord, RULE_FUSION);
    let mut ribbon = Bound::new(
        "ribbon_distance_to_unknot",
        dt_unknot.unwrap_or(0),
        RULE_RIBBON_DISTANCE,
    );
    if let Some(t) = &torus {
        bridge = bridge.with_upper(t.bridge, "br(T(p,q)) = min{p,q}");
        band = band.with_upper(t.ul_b, "ul_b(T(p,q)) = (p-1)(q-1)");
    }
    if normalized == KnotExpr::Unknot {
        bridge = bridge.with_upper(1, "br(U) = 1");
        band = band.with_upper(0, "ul_b(U) = 0");
        fusion = fusion.with_upper(0, "Fus(U) = 0");
        ribbon = ribbon.with_upper(0, "d_r(U, U) = 0");
    }
    if let Some(f) = self_mirror_torus {
        fusion = fusion.with_upper(f, "Fus(T(p,q) # m(T(p,q))) <= min{p,q} - 1");
        ribbon = ribbon.with_upper(f, "d_r(T(p,q) # m(T(p,q)), U) <= min{p,q} - 1");
    }
    let bounds = vec![
        bridge,
        fusion,
        band,
        Bound::new("slice_disk_minima", ord + 1, RULE_SLICE_MINIMA),
        ribbon,
    ];

    let generalized = if opts.bigraded {
        let h = bigraded_homology(&realize_bigraded(e)?)?;
        let chain = c_ord_chain_interval(e)?;
        Some(Generalized {
            c_ord_v: h.c_ord_v()?,
            c_ord_uv: h.c_ord_uv()?,
            chain,
            bounds: vec![
                Bound::new("band_unlink", chain.lo, RULE_CHAIN_UL_B),
                Bound::new("fusion", chain.lo, RULE_CHAIN_FUSION),
            ],
        })
    } else {
        None
    };

    Ok(BoundReport {
        expr: e.to_string(),
        decomposition,
        ord_v: ord,
        dt_unknot,
        bounds,
        torus,
        generalized,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knots::parse_expr;
    use proptest::prelude::*;

    fn expr(s: &str) -> KnotExpr {
        parse_expr(s).unwrap()
    }

    #[test]
    fn cobordism_examples() {
        assert!(cobordism_consistency(2, 0, 1, 1).unwrap().consistent);
        let c = cobordism_consistency(5, 0, 1, 0).unwrap();
        assert!(!c.consistent);
        assert_eq!(c.instance, "5 > max{1, 0} + 2*0 = 1");
        assert!(cobordism_consistency(0, 4, 0, 0).unwrap().consistent);
        assert!(cobordism_consistency(-1, 0, 0, 0).is_err());
    }

    #[test]
    fn ribbon_concordance_examples() {
        assert!(ribbon_concordance_check(1, 3, 5).unwrap().consistent);
        assert!(ribbon_concordance_check(2, 2, 1).unwrap().consistent);
        assert!(!ribbon_concordance_check(3, 1, 10).unwrap().consistent);
        assert!(ribbon_cobordism_check(3, 1, 1).unwrap().consistent);
        assert!(!ribbon_cobordism_check(4, 1, 1).unwrap().consistent);
        assert!(ribbon_concordance_check(0, 0, -2).is_err());
    }

    #[test]
    fn surface_norm_examples() {
        let n = |m, b, big_m, g| surface_norm(&CobordismData { m, b, big_m, g });
        let s = n(2, Some(7), 3, 1).unwrap();
        assert_eq!((s.norm, s.saddle_form), (5, Some(5)));
        assert_eq!(n(0, Some(0), 0, 0).unwrap().norm, 0);
        assert_eq!(n(1, Some(1), 0, 0).unwrap().norm, 1);
        let err = n(1, Some(4), 0, 0).unwrap_err();
        assert!(err.to_string().contains("2g != b - m - M"));
        assert_eq!(n(3, None, 1, 2).unwrap().norm, 7);
    }

    #[test]
    fn chain_rule_needs_an_upper_bound() {
        let known = ChainInterval {
            lo: 1,
            hi: Some(1),
            exact: true,
        };
        let open = ChainInterval {
            lo: 5,
            hi: None,
            exact: false,
        };
        assert!(
            !cobordism_consistency_chain(&open, &known, 0, 1)
                .unwrap()
                .consistent
        );
        assert!(
            cobordism_consistency_chain(&known, &open, 0, 0)
                .unwrap()
                .consistent
        );
    }

    #[test]
    fn torus_report_is_sharp_for_bridge() {
        let r = bound_report(&expr("T(7,9)"), ReportOptions::default()).unwrap();
        let b = r.bound("bridge").unwrap();
        assert_eq!(b.lower, 7);
        assert!(b.sharp());
        let ub = r.bound("band_unlink").unwrap();
        assert_eq!((ub.lower, ub.upper), (6, Some(48)));
        let t = r.torus.unwrap();
        assert_eq!((t.g3, t.g4), (24, 24));
    }

    #[test]
    fn self_mirror_fusion_is_sharp() {
        let r = bound_report(&expr("T(5,7) # m(T(5,7))"), ReportOptions::default()).unwrap();
        let f = r.bound("fusion").unwrap();
        assert_eq!(f.lower, 4);
        assert!(f.sharp());
    }

    #[test]
    fn unknot_report() {
        let r = bound_report(
            &expr("U"),
            ReportOptions {
                bigraded: true,
                graded_distance: true,
            },
        )
        .unwrap();
        assert_eq!(r.ord_v, 0);
        assert_eq!(r.bound("bridge").unwrap().lower, 1);
        for q in ["fusion", "band_unlink", "ribbon_distance_to_unknot"] {
            assert_eq!(r.bound(q).unwrap().lower, 0);
        }
        assert_eq!(r.generalized.unwrap().chain.hi, Some(0));
    }

    #[test]
    fn distances() {
        assert_eq!(
            refined_distance_lower(&expr("T(2,3)"), &expr("T(4,5)")).unwrap(),
            2
        );
        assert_eq!(
            refined_distance_lower(&expr("T(7,9)"), &expr("U")).unwrap(),
            6
        );
        assert_eq!(
            ribbon_distance_lower(&expr("T(3,5) # m(T(3,5))"), &expr("U"), false).unwrap(),
            Some(2)
        );
        assert_eq!(
            ribbon_distance_lower(&expr("T(2,3)"), &expr("U"), false).unwrap(),
            Some(1)
        );
        assert_eq!(
            ribbon_distance_lower(&expr("U"), &expr("U"), true).unwrap(),
            Some(0)
        );
    }

    #[test]
    fn n_alias() {
        assert_eq!(n_invariant(&expr("T(4,5)")).unwrap(), Some(3));
        assert_eq!(n_invariant(&expr("T(2,3) # T(2,3)")).unwrap(), None);
        assert_eq!(concordant_torus_bridge(5, 3), 3);
    }

    proptest! {
        #[test]
        fn max_is_subadditive(a in 0u64..1000, a2 in 0u64..1000, b in 0u64..1000, b2 in 0u64..1000) {
            prop_assert!((a + a2).max(b + b2) <= a.max(b) + a2.max(b2));
        }

        #[test]
        fn cobordism_monotone(o0 in 0i64..8, o1 in 0i64..8, m in 0i64..8, g in 0i64..8) {
            let base = cobordism_consistency(o0, o1, m, g).unwrap().consistent;
            if base {
                prop_assert!(cobordism_consistency(o0, o1, m + 1, g).unwrap().consistent);
                prop_assert!(cobordism_consistency(o0, o1, m, g + 1).unwrap().consistent);
            }
        }
    }
}
