use std::fmt;
use std::path::PathBuf;

use thiserror::Error;

use super::AlexPoly;

/// A knot built from leaves by mirror and connected sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KnotExpr {
    Unknot,
    Torus(u32, u32),
    LSpace(AlexPoly),
    File(PathBuf),
    Mirror(Box<KnotExpr>),
    Sum(Box<KnotExpr>, Box<KnotExpr>),
}

impl KnotExpr {
    pub fn mirror(self) -> Self {
        KnotExpr::Mirror(Box::new(self))
    }

    pub fn sum(self, other: KnotExpr) -> Self {
        KnotExpr::Sum(Box::new(self), Box::new(other))
    }

    /// Rewrites `T(p,1)` and `T(1,q)` as the unknot, `L[1_0]` likewise.
    pub fn normalized(&self) -> KnotExpr {
        match self {
            KnotExpr::Torus(p, q) if *p == 1 || *q == 1 => KnotExpr::Unknot,
            KnotExpr::LSpace(d) if *d == AlexPoly::one() => KnotExpr::Unknot,
            KnotExpr::Mirror(a) => match a.normalized() {
                KnotExpr::Unknot => KnotExpr::Unknot,
                n => n.mirror(),
            },
            KnotExpr::Sum(a, b) => a.normalized().sum(b.normalized()),
            e => e.clone(),
        }
    }

    /// Connected summands, left to right.
    pub fn summands(&self) -> Vec<&KnotExpr> {
        match self {
            KnotExpr::Sum(a, b) => {
                let mut v = a.summands();
                v.extend(b.summands());
                v
            }
            e => vec![e],
        }
    }

    /// `(p, q)` if this is a torus knot with both parameters at least 2.
    pub fn as_torus(&self) -> Option<(u32, u32)> {
        match self.normalized() {
            KnotExpr::Torus(p, q) => Some((p, q)),
            _ => None,
        }
    }

    /// `K` if this is `K # m(K)`.
    pub fn as_self_mirror_sum(&self) -> Option<&KnotExpr> {
        match self {
            KnotExpr::Sum(a, b) => match b.as_ref() {
                KnotExpr::Mirror(c) if c == a => Some(a),
                _ => None,
            },
            _ => None,
        }
    }
}

impl fmt::Display for KnotExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotExpr::Unknot => f.write_str("U"),
            KnotExpr::Torus(p, q) => write!(f, "T({p},{q})"),
            KnotExpr::LSpace(d) => {
                let entries: Vec<String> =
                    d.terms_desc().map(|(e, c)| format!("{c}_{e}")).collect();
                write!(f, "L[{}]", entries.join(";"))
            }
            KnotExpr::File(p) => write!(f, "file:{}", p.display()),
            KnotExpr::Mirror(a) => write!(f, "m({a})"),
            KnotExpr::Sum(a, b) => {
                if matches!(b.as_ref(), KnotExpr::Sum(..)) {
                    write!(f, "{a} # ({b})")
                } else {
                    write!(f, "{a} # {b}")
                }
            }
        }
    }
}

/// Parse failure with the byte offset it was detected at.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{message} at column {}\n  {input}\n  {}^", .offset + 1, caret_pad(.input, *.offset))]
pub struct ParseError {
    pub input: String,
    pub offset: usize,
    pub message: String,
}

fn caret_pad(input: &str, offset: usize) -> String {
    " ".repeat(input.get(..offset).map_or(offset, |s| s.chars().count()))
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, at: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            input: self.src.to_string(),
            offset: at,
            message: message.into(),
        }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(x) if x == c => {
                self.pos += c.len_utf8();
                Ok(())
            }
            Some(x) => Err(self.err(self.pos, format!("expected '{c}', found '{x}'"))),
            None => Err(self.err(self.pos, format!("expected '{c}', found end of input"))),
        }
    }

    fn integer(&mut self) -> Result<(i64, usize), ParseError> {
        self.skip_ws();
        let start = self.pos;
        let bytes = self.src.as_bytes();
        let mut end = start;
        if end < bytes.len() && (bytes[end] == b'-' || bytes[end] == b'+') {
            end += 1;
        }
        let digits = end;
        while end < bytes.len() && bytes[end].is_ascii_digit() {
            end += 1;
        }
        if end == digits {
            return Err(self.err(start, "expected an integer"));
        }
        let n = self.src[start..end]
            .parse()
            .map_err(|_| self.err(start, "integer out of range"))?;
        self.pos = end;
        Ok((n, start))
    }

    fn positive(&mut self) -> Result<u32, ParseError> {
        let (n, at) = self.integer()?;
        u32::try_from(n)
            .ok()
            .filter(|&n| n >= 1)
            .ok_or_else(|| self.err(at, "torus parameter must be a positive integer"))
    }

    fn expr(&mut self) -> Result<KnotExpr, ParseError> {
        let mut lhs = self.term()?;
        while self.peek() == Some('#') {
            self.pos += 1;
            lhs = lhs.sum(self.term()?);
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<KnotExpr, ParseError> {
        let start = {
            self.skip_ws();
            self.pos
        };
        let rest = self.rest();
        if let Some(path) = rest.strip_prefix("file:") {
            let len = path
                .find(|c: char| c.is_whitespace() || c == '#' || c == ')')
                .unwrap_or(path.len());
            if len == 0 {
                return Err(self.err(start + 5, "expected a path after 'file:'"));
            }
            self.pos += 5 + len;
            return Ok(KnotExpr::File(PathBuf::from(&path[..len])));
        }
        match rest.chars().next() {
            Some('U') => {
                self.pos += 1;
                Ok(KnotExpr::Unknot)
            }
            Some('T') => {
                self.pos += 1;
                self.expect('(')?;
                let p_at = self.pos;
                let p = self.positive()?;
                self.expect(',')?;
                let q = self.positive()?;
                self.expect(')')?;
                if gcd(p, q) != 1 {
                    return Err(self.err(p_at, format!("p,q not coprime: T({p},{q})")));
                }
                Ok(KnotExpr::Torus(p, q))
            }
            Some('m') => {
                self.pos += 1;
                self.expect('(')?;
                let inner = self.expr()?;
                self.expect(')')?;
                Ok(inner.mirror())
            }
            Some('L') => {
                self.pos += 1;
                self.expect('[')?;
                let mut terms = Vec::new();
                loop {
                    let (c, _) = self.integer()?;
                    self.expect('_')?;
                    let braced = self.peek() == Some('{');
                    if braced {
                        self.pos += 1;
                    }
                    let (e, _) = self.integer()?;
                    if braced {
                        self.expect('}')?;
                    }
                    terms.push((e, c));
                    match self.peek() {
                        Some(';') => self.pos += 1,
                        _ => break,
                    }
                }
                self.expect(']')?;
                Ok(KnotExpr::LSpace(AlexPoly::from_terms(terms)))
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(')')?;
                Ok(inner)
            }
            Some(c) => Err(self.err(start, format!("unexpected '{c}'"))),
            None => Err(self.err(start, "unexpected end of input")),
        }
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Parses the expression grammar
///
/// ```text
/// expr := term ('#' term)*
/// term := 'U' | 'T(' p ',' q ')' | 'm(' expr ')' | 'L[' c_e (';' c_e)* ']'
///       | 'file:' PATH | '(' expr ')'
/// ```
///
/// `#` associates to the left. In `L[...]` each entry `c_e` (or `c_{e}`)
/// is the term `c t^e`.
pub fn parse_expr(input: &str) -> Result<KnotExpr, ParseError> {
    let mut p = Parser { src: input, pos: 0 };
    let e = p.expr()?;
    if let Some(c) = p.peek() {
        return Err(p.err(p.pos, format!("unexpected '{c}' after expression")));
    }
    Ok(e)
}
