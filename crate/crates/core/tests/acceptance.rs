//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use knot_torsion::algebra::{smith_normal_form, PolyV, SparseMat};
use knot_torsion::bounds::{
    bound_report, cobordism_consistency, ribbon_concordance_check, surface_norm, CobordismData,
    ReportOptions,
};
use knot_torsion::complex::GradedComplex;
use knot_torsion::homology::{
    bigraded_homology, decompose_graded, ord_v, torsion_distance, ModuleDecomp,
};
use knot_torsion::knots::{
    parse_expr, realize_bigraded, realize_graded, torus_alexander, KnotExpr, StaircaseSpec,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn coprime_pairs(max: u32) -> Vec<(u32, u32)> {
    let mut v = Vec::new();
    for p in 2..=max {
        for q in p + 1..=max {
            if gcd(p, q) == 1 {
                v.push((p, q));
            }
        }
    }
    v
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    if t < limit {
        Ok(())
    } else {
        Err(format!("{what} took {t:.2?}, limit {limit:?}"))
    }
}

fn torus_ord(p: u32, q: u32) -> Result<u32, String> {
    let c = realize_graded(&KnotExpr::Torus(p, q)).map_err(|e| e.to_string())?;
    Ok(ord_v(&decompose_graded(&c)))
}

fn c1_torus_orders() -> Outcome {
    let start = Instant::now();
    let pairs = coprime_pairs(12);
    for &(p, q) in &pairs {
        let got = torus_ord(p, q)?;
        if got != p.min(q) - 1 {
            return Err(format!("ord_v(T({p},{q})) = {got}"));
        }
    }
    within(start, Duration::from_secs(5), "sweep")?;
    Ok(format!("{} pairs", pairs.len()))
}

/// Dense integer polynomial, index = exponent.
fn mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn binomial(n: usize) -> Vec<i64> {
    let mut v = vec![0; n + 1];
    v[0] = -1;
    v[n] = 1;
    v
}

/// Exact long division by a monic polynomial.
fn long_divide(num: &[i64], den: &[i64]) -> Result<Vec<i64>, String> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0; num.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        for (j, d) in den.iter().enumerate() {
            rem[k + j] -= c * d;
        }
    }
    if rem.iter().any(|&r| r != 0) {
        return Err("nonzero remainder".into());
    }
    Ok(quot)
}

/// `(t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1))`, shifted to be symmetric.
fn alexander_by_division(p: u32, q: u32) -> Result<BTreeMap<i64, i64>, String> {
    let (p, q) = (p as usize, q as usize);
    let num = mul(&binomial(p * q), &binomial(1));
    let den = mul(&binomial(p), &binomial(q));
    let quot = long_divide(&num, &den)?;
    let shift = ((p - 1) * (q - 1) / 2) as i64;
    Ok(quot
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(e, &c)| (e as i64 - shift, c))
        .collect())
}

fn c2_alexander() -> Outcome {
    let mut terms = 0;
    for (p, q) in coprime_pairs(12) {
        let got = torus_alexander(p, q).map_err(|e| e.to_string())?;
        let want = alexander_by_division(p, q)?;
        let got_map: BTreeMap<i64, i64> = got.terms_desc().collect();
        if got_map != want {
            return Err(format!("T({p},{q}): {got} vs oracle {want:?}"));
        }
        let d = ((p - 1) * (q - 1) / 2) as i64;
        let m = p.min(q) as i64;
        let head: Vec<(i64, i64)> = got.terms_desc().take(3).collect();
        if head != [(d, 1), (d - 1, -1), (d - m, 1)] {
            return Err(format!("T({p},{q}) leading terms {head:?}"));
        }
        terms += got.len();
    }
    Ok(format!("{terms} terms"))
}

fn c3_t56_fixture() -> Outcome {
    let d = torus_alexander(5, 6).map_err(|e| e.to_string())?;
    let expected = "t^{10}-t^9+t^5-t^3+1-t^{-3}+t^{-5}-t^{-9}+t^{-10}";
    if d.to_tex() != expected {
        return Err(format!("rendered {}", d.to_tex()));
    }
    let c = realize_graded(&KnotExpr::Torus(5, 6)).map_err(|e| e.to_string())?;
    let m = decompose_graded(&c);
    if m.torsion_orders() != [4, 3, 2, 1] || ord_v(&m) != 4 {
        return Err(format!("decomposition {m:?}"));
    }
    Ok("orders {4,3,2,1}".into())
}

fn random_staircase(rng: &mut ChaCha8Rng, pairs: &[(u32, u32)]) -> GradedComplex {
    let (p, q) = pairs[rng.gen_range(0..pairs.len())];
    let c = StaircaseSpec::torus(p, q).unwrap().graded_complex();
    if rng.gen_bool(0.5) {
        c.dual()
    } else {
        c
    }
}

fn c4_kunneth_mirror() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
    let pairs = coprime_pairs(7);
    for i in 0..200 {
        let a = random_staircase(&mut rng, &pairs);
        let b = random_staircase(&mut rng, &pairs);
        let (oa, ob) = (ord_v(&decompose_graded(&a)), ord_v(&decompose_graded(&b)));
        let ot = ord_v(&decompose_graded(&a.tensor(&b)));
        if ot != oa.max(ob) {
            return Err(format!("pair {i}: ord_v(tensor) = {ot}, parts {oa}, {ob}"));
        }
        let od = ord_v(&decompose_graded(&a.dual()));
        if od != oa {
            return Err(format!("pair {i}: ord_v(dual) = {od}, ord_v = {oa}"));
        }
    }
    within(start, Duration::from_secs(30), "200 pairs")?;
    Ok("200 pairs".into())
}

fn c5_bigraded() -> Outcome {
    let limit = Duration::from_secs(60);
    let mut cases = 0;
    let hom = |s: &str| -> Result<_, String> {
        let e = parse_expr(s).map_err(|e| e.to_string())?;
        let c = realize_bigraded(&e).map_err(|e| e.to_string())?;
        bigraded_homology(&c).map_err(|e| e.to_string())
    };
    for (p, q) in coprime_pairs(7) {
        let start = Instant::now();
        let h = hom(&format!("T({p},{q})"))?;
        let uv = h.c_ord_uv().map_err(|e| e.to_string())?;
        let gens = h.minimal_generators();
        if uv != 0 || gens <= 1 {
            return Err(format!("T({p},{q}): c_ord_uv = {uv}, generators = {gens}"));
        }
        within(start, limit, &format!("T({p},{q})"))?;

        let start = Instant::now();
        let h = hom(&format!("m(T({p},{q}))"))?;
        let cv = h.c_ord_v().map_err(|e| e.to_string())?;
        if cv != (p - 1) * (q - 1) / 2 {
            return Err(format!("m(T({p},{q})): c_ord_v = {cv}"));
        }
        within(start, limit, &format!("m(T({p},{q}))"))?;
        cases += 2;
    }
    for (p, q) in coprime_pairs(5) {
        let start = Instant::now();
        let h = hom(&format!("T({p},{q}) # m(T({p},{q}))"))?;
        let cv = h.c_ord_v().map_err(|e| e.to_string())?;
        if cv != p.min(q) - 1 {
            return Err(format!("T({p},{q}) # mirror: c_ord_v = {cv}"));
        }
        within(start, limit, &format!("T({p},{q}) # mirror"))?;
        cases += 1;
    }
    Ok(format!("{cases} cases"))
}

fn c6_sharpness() -> Outcome {
    let mut n = 0;
    for (p, q) in coprime_pairs(9) {
        let k = KnotExpr::Torus(p, q);
        let r = bound_report(&k, ReportOptions::default()).map_err(|e| e.to_string())?;
        let bridge = r.bound("bridge").ok_or("no bridge bound")?;
        if !(bridge.sharp() && r.ord_v == p.min(q) - 1) {
            return Err(format!("T({p},{q}) bridge bound {bridge:?}"));
        }
        let s = k.clone().sum(k.mirror());
        let r = bound_report(&s, ReportOptions::default()).map_err(|e| e.to_string())?;
        let fusion = r.bound("fusion").ok_or("no fusion bound")?;
        if !(fusion.sharp() && fusion.upper == Some(p.min(q) - 1)) {
            return Err(format!("T({p},{q}) # mirror fusion bound {fusion:?}"));
        }
        n += 2;
    }
    Ok(format!("{n} reports"))
}

fn c7_consistency() -> Outcome {
    let start = Instant::now();
    let mut n = 0;
    for o0 in 0..=6i64 {
        for o1 in 0..=6i64 {
            for mm in 0..=6i64 {
                for g in 0..=6i64 {
                    let got = cobordism_consistency(o0, o1, mm, g)
                        .map_err(|e| e.to_string())?
                        .consistent;
                    if got != (o0 <= mm.max(o1) + 2 * g) {
                        return Err(format!("cobordism {o0} {o1} {mm} {g}"));
                    }
                    n += 1;
                }
            }
            for b in 0..=6i64 {
                let got = ribbon_concordance_check(o0, o1, b)
                    .map_err(|e| e.to_string())?
                    .consistent;
                let want = (b <= o0 && o0 == o1) || (o0 <= o1 && o1 <= b);
                if got != want {
                    return Err(format!("ribbon concordance {o0} {o1} {b}"));
                }
                n += 1;
            }
        }
    }
    for m in 0..=6i64 {
        for b in 0..=6i64 {
            for big_m in 0..=6i64 {
                for g in 0..=6i64 {
                    let d = CobordismData {
                        m,
                        b: Some(b),
                        big_m,
                        g,
                    };
                    let euler = 2 * g == b - m - big_m;
                    match surface_norm(&d) {
                        Ok(s) if euler => {
                            let want = (b - m).max(b - big_m);
                            if s.norm as i64 != want || s.saddle_form != Some(want as u64) {
                                return Err(format!("norm {m} {b} {big_m} {g}: {s:?}"));
                            }
                        }
                        Err(_) if !euler => {}
                        other => {
                            return Err(format!("movie {m} {b} {big_m} {g}: {other:?}"));
                        }
                    }
                    n += 1;
                }
            }
        }
    }
    within(start, Duration::from_secs(1), "exhaustive sweep")?;
    Ok(format!("{n} instances"))
}

fn random_decomp(rng: &mut ChaCha8Rng) -> ModuleDecomp {
    let k = rng.gen_range(0..5);
    let free = (0..1).map(|_| rng.gen_range(-3..=3)).collect();
    let torsion = (0..k)
        .map(|_| (rng.gen_range(1..=6), rng.gen_range(-3..=3)))
        .collect();
    ModuleDecomp::new(free, torsion)
}

fn c8_metric() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    for _ in 0..10_000 {
        let [a, a2, b, b2]: [u64; 4] = std::array::from_fn(|_| rng.gen_range(0..1000));
        if (a + a2).max(b + b2) > a.max(b) + a2.max(b2) {
            return Err(format!("quadruple {a} {a2} {b} {b2}"));
        }
    }
    for i in 0..1000 {
        let graded = i % 2 == 1;
        let [x, y, z]: [ModuleDecomp; 3] = std::array::from_fn(|_| random_decomp(&mut rng));
        let d = |m1: &ModuleDecomp, m2: &ModuleDecomp| torsion_distance(m1, m2, graded);
        let (xz, xy, yz) = (d(&x, &z), d(&x, &y), d(&y, &z));
        let ok = match (xz, xy, yz) {
            (_, None, _) | (_, _, None) => true,
            (Some(xz), Some(xy), Some(yz)) => xz <= xy + yz,
            (None, Some(_), Some(_)) => false,
        };
        if !ok || d(&x, &x) != Some(0) || xy != d(&y, &x) {
            return Err(format!("triple {x:?} {y:?} {z:?}"));
        }
    }
    Ok("10000 quadruples, 1000 triples".into())
}

/// F2[v] polynomials as bitmasks, independent of the library.
fn clmul(a: u64, b: u64) -> u64 {
    let mut out = 0;
    for i in 0..64 {
        if b >> i & 1 == 1 {
            out ^= a << i;
        }
    }
    out
}

fn deg(a: u64) -> i32 {
    63 - a.leading_zeros() as i32
}

fn rem(mut a: u64, b: u64) -> u64 {
    while a != 0 && deg(a) >= deg(b) {
        a ^= b << (deg(a) - deg(b));
    }
    a
}

fn quot(mut a: u64, b: u64) -> u64 {
    let mut q = 0;
    while a != 0 && deg(a) >= deg(b) {
        let s = deg(a) - deg(b);
        q |= 1 << s;
        a ^= b << s;
    }
    q
}

fn pgcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        pgcd(b, rem(a, b))
    }
}

fn det(m: &[Vec<u64>], rows: &[usize], cols: &[usize]) -> u64 {
    if rows.len() == 1 {
        return m[rows[0]][cols[0]];
    }
    let mut acc = 0;
    for (k, &c) in cols.iter().enumerate() {
        let e = m[rows[0]][c];
        if e == 0 {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != cols[k]).collect();
        acc ^= clmul(e, det(m, &rows[1..], &rest));
    }
    acc
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Invariant factors as quotients of successive gcds of minors.
fn factors_by_minors(m: &[Vec<u64>]) -> Vec<u64> {
    let (nr, nc) = (m.len(), m[0].len());
    let mut prev = 1;
    let mut out = Vec::new();
    for k in 1..=nr.min(nc) {
        let mut g = 0;
        for r in subsets(nr, k) {
            for c in subsets(nc, k) {
                g = pgcd(g, det(m, &r, &c));
            }
        }
        if g == 0 {
            break;
        }
        out.push(quot(g, prev));
        prev = g;
    }
    out
}

fn poly_bits(p: &PolyV) -> u64 {
    p.exponents().fold(0, |acc, e| acc | 1 << e)
}

/// Entry codes: 0 is zero, `c >= 1` is `v^(c-1)`.
fn check_snf(codes: &[u8], nr: usize, nc: usize) -> Result<(), String> {
    let dense: Vec<Vec<u64>> = (0..nr)
        .map(|i| {
            (0..nc)
                .map(|j| match codes[i * nc + j] {
                    0 => 0,
                    c => 1 << (c - 1),
                })
                .collect()
        })
        .collect();
    let mut sm = SparseMat::new(nr, nc);
    for (i, row) in dense.iter().enumerate() {
        for (j, &e) in row.iter().enumerate() {
            if e != 0 {
                sm.set(i, j, PolyV::monomial(e.trailing_zeros() as usize));
            }
        }
    }
    let got: Vec<u64> = smith_normal_form(&sm).iter().map(poly_bits).collect();
    let want = factors_by_minors(&dense);
    if got != want {
        return Err(format!("{dense:?}: snf {got:?}, minors {want:?}"));
    }
    Ok(())
}

fn c9_snf_oracle() -> Outcome {
    let mut exhaustive = 0u64;
    for nr in 1..=4 {
        for nc in 1..=4 {
            let cells = nr * nc;
            if cells > 9 {
                continue;
            }
            let mut codes = vec![0u8; cells];
            loop {
                check_snf(&codes, nr, nc)?;
                exhaustive += 1;
                let mut i = 0;
                while i < cells && codes[i] == 4 {
                    codes[i] = 0;
                    i += 1;
                }
                if i == cells {
                    break;
                }
                codes[i] += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);
    let mut sampled = 0u64;
    for (nr, nc) in [(3, 4), (4, 3), (4, 4)] {
        for _ in 0..40_000 {
            let codes: Vec<u8> = (0..nr * nc).map(|_| rng.gen_range(0..=4)).collect();
            check_snf(&codes, nr, nc)?;
            sampled += 1;
        }
    }
    Ok(format!("{exhaustive} exhaustive, {sampled} sampled"))
}

const CORPUS: &[&str] = &[
    "U",
    "m(U)",
    "U # U",
    "T(2,3)",
    "m(T(2,3))",
    "T(2,5)",
    "T(3,4)",
    "T(3,5)",
    "T(4,5)",
    "T(5,6)",
    "T(3,7)",
    "T(5,7)",
    "T(7,9)",
    "T(11,12)",
    "m(T(4,7))",
    "T(2,3) # T(2,3)",
    "T(2,3) # m(T(2,3))",
    "T(3,5) # m(T(3,5))",
    "T(5,6) # m(T(5,6))",
    "T(2,5) # T(3,4)",
    "m(T(2,7)) # T(4,5)",
    "T(2,3) # T(3,4) # T(4,5)",
    "m(T(3,4) # T(2,5))",
    "L[1_1;-1_0;1_-1]",
    "L[1_3;-1_2;1_0;-1_-2;1_-3]",
    "L[1_5;-1_4;1_2;-1_1;1_0;-1_-1;1_-2;-1_-4;1_-5]",
    "m(L[1_3;-1_2;1_0;-1_-2;1_-3]) # T(2,9)",
    "T(1,5) # T(2,3)",
];

fn c10_dt_unknot() -> Outcome {
    let unknot = decompose_graded(&realize_graded(&KnotExpr::Unknot).map_err(|e| e.to_string())?);
    for s in CORPUS {
        let e = parse_expr(s).map_err(|e| e.to_string())?;
        let m = decompose_graded(&realize_graded(&e).map_err(|e| e.to_string())?);
        let dt = torsion_distance(&m, &unknot, false);
        if dt != Some(ord_v(&m)) {
            return Err(format!("{s}: d_t = {dt:?}, ord_v = {}", ord_v(&m)));
        }
    }
    Ok(format!("{} expressions", CORPUS.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("torus torsion orders", c1_torus_orders),
        ("Alexander expansion", c2_alexander),
        ("T(5,6) fixture", c3_t56_fixture),
        ("Kunneth and mirror", c4_kunneth_mirror),
        ("bigraded suite", c5_bigraded),
        ("sharpness pair", c6_sharpness),
        ("consistency rules", c7_consistency),
        ("metric property", c8_metric),
        ("SNF oracle", c9_snf_oracle),
        ("d_t(K, U) = ord_v", c10_dt_unknot),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let t = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({t:.2?})", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} ({t:.2?})", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
