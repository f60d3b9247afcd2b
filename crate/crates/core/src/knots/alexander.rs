use std::collections::BTreeMap;
use std::fmt;

use super::KnotError;

/// Integer Laurent polynomial in `t`, stored as exponent -> nonzero
/// coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AlexPoly {
    terms: BTreeMap<i64, i64>,
}

impl AlexPoly {
    /// Collects terms, summing repeated exponents and dropping zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut map = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_insert(0) += c;
        }
        map.retain(|_, c| *c != 0);
        AlexPoly { terms: map }
    }

    pub fn one() -> Self {
        Self::from_terms([(0, 1)])
    }

    /// Terms in decreasing exponent order.
    pub fn terms_desc(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().rev().map(|(&e, &c)| (e, c))
    }

    pub fn coefficient(&self, e: i64) -> i64 {
        self.terms.get(&e).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn top_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn eval_at_one(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(&e, &c)| self.coefficient(-e) == c)
    }

    /// `Δ(t) = Δ(1/t)` and `Δ(1) = 1`.
    pub fn is_normalized(&self) -> bool {
        self.is_symmetric() && self.eval_at_one() == 1
    }

    /// TeX rendering, e.g. `t^{10}-t^9+1-t^{-9}`.
    pub fn to_tex(&self) -> String {
        self.render(true)
    }

    fn render(&self, tex: bool) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (e, c)) in self.terms_desc().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            match (k, tex) {
                (0, _) if c > 0 => {}
                (0, _) => out.push('-'),
                (_, true) => out.push_str(sign),
                (_, false) => {
                    out.push(' ');
                    out.push_str(sign);
                    out.push(' ');
                }
            }
            let a = c.abs();
            if e == 0 {
                out.push_str(&a.to_string());
                continue;
            }
            if a != 1 {
                out.push_str(&a.to_string());
            }
            out.push('t');
            if e != 1 {
                let braces = tex && !(0..10).contains(&e);
                if braces {
                    out.push_str(&format!("^{{{e}}}"));
                } else {
                    out.push_str(&format!("^{e}"));
                }
            }
        }
        out
    }

    /// Parses `t^10 - t^9 + ... + 1`, also accepting TeX braces (`t^{-3}`).
    pub fn parse(s: &str) -> Result<Self, String> {
        let cleaned: String = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '{' && *c != '}')
            .collect();
        let bytes = cleaned.as_bytes();
        if bytes.is_empty() {
            return Err("empty polynomial".into());
        }
        let mut i = 0;
        let mut terms = Vec::new();
        while i < bytes.len() {
            let mut sign = 1;
            if bytes[i] == b'+' || bytes[i] == b'-' {
                if bytes[i] == b'-' {
                    sign = -1;
                }
                i += 1;
            } else if i != 0 {
                return Err(format!("expected '+' or '-' at offset {i}"));
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let coef: Option<i64> = if i > start {
                Some(
                    cleaned[start..i]
                        .parse()
                        .map_err(|e| format!("bad coefficient: {e}"))?,
                )
            } else {
                None
            };
            let exp = if i < bytes.len() && bytes[i] == b't' {
                i += 1;
                if i < bytes.len() && bytes[i] == b'^' {
                    i += 1;
                    let es = i;
                    if i < bytes.len() && bytes[i] == b'-' {
                        i += 1;
                    }
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    cleaned[es..i]
                        .parse::<i64>()
                        .map_err(|_| format!("bad exponent at offset {es}"))?
                } else {
                    1
                }
            } else if coef.is_none() {
                return Err(format!("expected a term at offset {start}"));
            } else {
                0
            };
            terms.push((exp, sign * coef.unwrap_or(1)));
        }
        Ok(Self::from_terms(terms))
    }
}

impl fmt::Display for AlexPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Symmetrized Alexander polynomial of the torus knot `T(p,q)`.
///
/// Uses `Δ(t) = t^{-g} (1 - t) Σ_{s ∈ S} t^s`, where `S` is the numerical
/// semigroup generated by `p` and `q` and `g = (p-1)(q-1)/2`; every integer
/// at least `2g` lies in `S`, so the sum truncates.
pub fn torus_alexander(p: u32, q: u32) -> Result<AlexPoly, KnotError> {
    if p == 0 || q == 0 {
        return Err(KnotError::TorusParameter(p, q));
    }
    if gcd(p.into(), q.into()) != 1 {
        return Err(KnotError::NotCoprime(p, q));
    }
    let g = (u64::from(p) - 1) * (u64::from(q) - 1) / 2;
    let top = 2 * g as usize;
    let mut in_semigroup = vec![false; top + 1];
    in_semigroup[0] = true;
    for s in 1..=top {
        in_semigroup[s] = (s >= p as usize && in_semigroup[s - p as usize])
            || (s >= q as usize && in_semigroup[s - q as usize]);
    }
    let g = g as i64;
    let terms = (0..=top).filter_map(|k| {
        let here = i64::from(in_semigroup[k]);
        let below = if k == 0 {
            0
        } else {
            i64::from(in_semigroup[k - 1])
        };
        let c = here - below;
        (c != 0).then_some((k as i64 - g, c))
    });
    Ok(AlexPoly::from_terms(terms))
}
