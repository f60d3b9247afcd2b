use std::fmt::Write;

use knot_torsion::bounds::{Bound, BoundReport};
use knot_torsion::homology::{ChainInterval, ModuleDecomp};

pub fn finite_or_inf(d: Option<u32>) -> String {
    d.map_or_else(|| "inf".to_string(), |d| d.to_string())
}

/// `F[v]_(a) + (F[v]/v^n)_(b) + ...` with gradings in parentheses.
pub fn decomposition(m: &ModuleDecomp) -> String {
    let mut parts: Vec<String> = m.free.iter().map(|g| format!("F[v]_({g})")).collect();
    parts.extend(m.torsion.iter().map(|(n, g)| format!("(F[v]/v^{n})_({g})")));
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

fn bound_line(b: &Bound) -> String {
    let mut s = format!("  {:<28} >= {}", b.quantity, b.lower);
    if let (Some(u), Some(src)) = (b.upper, b.upper_source) {
        let tag = if b.sharp() { "sharp" } else { "known" };
        let _ = write!(s, "  ({tag}: {src}, = {u})");
    }
    let _ = write!(s, "  [{}]", b.rule);
    s
}

fn interval(c: &ChainInterval) -> String {
    let hi = c.hi.map_or_else(|| "inf".to_string(), |h| h.to_string());
    let exact = if c.exact { " exact" } else { "" };
    format!("[{}, {hi}]{exact}", c.lo)
}

pub fn report_text(r: &BoundReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "knot: {}", r.expr);
    let _ = writeln!(s, "HFK-: {}", decomposition(&r.decomposition));
    let orders: Vec<String> = r
        .decomposition
        .torsion_orders()
        .iter()
        .map(u32::to_string)
        .collect();
    let _ = writeln!(s, "torsion orders: {{{}}}", orders.join(", "));
    let _ = writeln!(s, "ord_v = {}", r.ord_v);
    let _ = writeln!(s, "d_t(K, U) = {}", finite_or_inf(r.dt_unknot));
    let _ = writeln!(s, "bounds:");
    for b in &r.bounds {
        let _ = writeln!(s, "{}", bound_line(b));
    }
    if let Some(t) = &r.torus {
        let _ = writeln!(
            s,
            "torus T({},{}): br = {}, g_3 = g_4 = {}, {}",
            t.p, t.q, t.bridge, t.g3, t.genus_chain
        );
    }
    if let Some(g) = &r.generalized {
        let _ = writeln!(s, "c_ord_v = {}", g.c_ord_v);
        let _ = writeln!(s, "c_ord_uv = {}", g.c_ord_uv);
        let _ = writeln!(s, "chain torsion order in {}", interval(&g.chain));
        for b in &g.bounds {
            let _ = writeln!(s, "{}", bound_line(b));
        }
    }
    s
}
