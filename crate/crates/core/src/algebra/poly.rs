use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use super::AlgebraError;

/// Polynomial in `v` over F2, stored as packed coefficient bits.
///
/// The word vector never has trailing zero words, so the zero polynomial is
/// the empty vector and structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyV {
    words: Vec<u64>,
}

impl PolyV {
    pub fn zero() -> Self {
        PolyV { words: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    /// `v^k`.
    pub fn monomial(k: usize) -> Self {
        let mut words = vec![0; k / 64 + 1];
        words[k / 64] = 1 << (k % 64);
        PolyV { words }
    }

    /// Sum of `v^e` over the given exponents (repeats cancel).
    pub fn from_exponents(exps: impl IntoIterator<Item = usize>) -> Self {
        let mut p = PolyV::zero();
        for e in exps {
            p.toggle(e);
        }
        p
    }

    fn toggle(&mut self, k: usize) {
        if self.words.len() <= k / 64 {
            self.words.resize(k / 64 + 1, 0);
        }
        self.words[k / 64] ^= 1 << (k % 64);
        self.trim();
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words.len() == 1 && self.words[0] == 1
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let last = *self.words.last()?;
        Some((self.words.len() - 1) * 64 + 63 - last.leading_zeros() as usize)
    }

    /// Exponent of the lowest nonzero term (the `v`-adic valuation).
    pub fn valuation(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
    }

    pub fn coeff(&self, k: usize) -> bool {
        self.words
            .get(k / 64)
            .is_some_and(|w| (w >> (k % 64)) & 1 == 1)
    }

    /// Exponents with coefficient one, ascending.
    pub fn exponents(&self) -> impl Iterator<Item = usize> + '_ {
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

    /// Returns `Some(k)` when the polynomial is exactly `v^k`.
    pub fn as_monomial(&self) -> Option<usize> {
        let d = self.degree()?;
        (self.valuation() == Some(d)).then_some(d)
    }

    /// Multiplication by `v^k`.
    pub fn shl(&self, k: usize) -> PolyV {
        if self.is_zero() {
            return PolyV::zero();
        }
        let (ws, bs) = (k / 64, k % 64);
        let mut words = vec![0u64; self.words.len() + ws + 1];
        for (i, &w) in self.words.iter().enumerate() {
            words[i + ws] |= w << bs;
            if bs != 0 {
                words[i + ws + 1] |= w >> (64 - bs);
            }
        }
        let mut p = PolyV { words };
        p.trim();
        p
    }

    /// Euclidean division: `a = q*b + r` with `deg r < deg b`.
    pub fn divmod(&self, b: &PolyV) -> Result<(PolyV, PolyV), AlgebraError> {
        let db = b.degree().ok_or(AlgebraError::ZeroDivisor)?;
        let mut r = self.clone();
        let mut q = PolyV::zero();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let s = dr - db;
            q.toggle(s);
            r += &b.shl(s);
        }
        Ok((q, r))
    }

    /// Monic gcd by the Euclidean algorithm. Over F2 every nonzero
    /// polynomial is monic.
    pub fn gcd(&self, b: &PolyV) -> Result<PolyV, AlgebraError> {
        if self.is_zero() && b.is_zero() {
            return Err(AlgebraError::GcdUndefined);
        }
        let (mut a, mut b) = (self.clone(), b.clone());
        while !b.is_zero() {
            let (_, r) = a.divmod(&b)?;
            a = b;
            b = r;
        }
        Ok(a)
    }

    /// Whether `self` divides `other`.
    pub fn divides(&self, other: &PolyV) -> bool {
        match other.divmod(self) {
            Ok((_, r)) => r.is_zero(),
            Err(_) => other.is_zero(),
        }
    }
}

impl AddAssign<&PolyV> for PolyV {
    fn add_assign(&mut self, rhs: &PolyV) {
        if self.words.len() < rhs.words.len() {
            self.words.resize(rhs.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(&rhs.words) {
            *a ^= b;
        }
        self.trim();
    }
}

impl Add<&PolyV> for &PolyV {
    type Output = PolyV;
    fn add(self, rhs: &PolyV) -> PolyV {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Mul<&PolyV> for &PolyV {
    type Output = PolyV;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &PolyV) -> PolyV {
        let mut out = PolyV::zero();
        for e in rhs.exponents() {
            out += &self.shl(e);
        }
        out
    }
}

impl fmt::Display for PolyV {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut exps: Vec<usize> = self.exponents().collect();
        exps.reverse();
        let terms: Vec<String> = exps
            .into_iter()
            .map(|e| match e {
                0 => "1".to_string(),
                1 => "v".to_string(),
                _ => format!("v^{e}"),
            })
            .collect();
        write!(f, "{}", terms.join("+"))
    }
}

impl fmt::Debug for PolyV {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyV({self})")
    }
}

/// The monomial `u^i v^j`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonoUV {
    pub u: u32,
    pub v: u32,
}

impl MonoUV {
    pub const ONE: MonoUV = MonoUV { u: 0, v: 0 };

    pub fn new(u: u32, v: u32) -> Self {
        MonoUV { u, v }
    }

    pub fn total_degree(self) -> u32 {
        self.u + self.v
    }

    /// Whether `self` divides `other`.
    pub fn divides(self, other: MonoUV) -> bool {
        self.u <= other.u && self.v <= other.v
    }
}

impl Mul for MonoUV {
    type Output = MonoUV;
    fn mul(self, rhs: MonoUV) -> MonoUV {
        MonoUV {
            u: self.u + rhs.u,
            v: self.v + rhs.v,
        }
    }
}

impl fmt::Display for MonoUV {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let part = |f: &mut fmt::Formatter<'_>, x: &str, e: u32| match e {
            0 => Ok(()),
            1 => write!(f, "{x}"),
            _ => write!(f, "{x}^{e}"),
        };
        if self.u == 0 && self.v == 0 {
            return write!(f, "1");
        }
        part(f, "u", self.u)?;
        part(f, "v", self.v)
    }
}
