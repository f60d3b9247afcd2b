//! Knot expressions and their algebraic models.
//!
//! Leaves are the unknot, torus knots, L-space knots given by their
//! Alexander polynomial, and complexes read from documents. Mirror becomes
//! the dual complex and connected sum the tensor product.

mod alexander;
mod expr;

use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::algebra::MonoUV;
use crate::complex::{
    decode, AlexGrading, AnyComplex, Arrow, BiGrading, BigradedComplex, ComplexError, ComplexKind,
    DecodeError, Generator, GradedComplex, VPow,
};

pub use alexander::{torus_alexander, AlexPoly};
pub use expr::{parse_expr, KnotExpr, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KnotError {
    #[error("p,q not coprime: T({0},{1})")]
    NotCoprime(u32, u32),
    #[error("torus parameters must be positive: T({0},{1})")]
    TorusParameter(u32, u32),
    #[error("not an L-space-knot Alexander polynomial: {reason} (term {term})")]
    NotLSpace { term: String, reason: String },
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("{path}: {source}")]
    Decode { path: String, source: DecodeError },
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// Exponents `α_0 > α_1 > ... > α_2n` of an L-space knot's Alexander
/// polynomial `Σ (-1)^k t^{α_k}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StaircaseSpec {
    alphas: Vec<i64>,
}

impl StaircaseSpec {
    pub fn unknot() -> Self {
        StaircaseSpec { alphas: vec![0] }
    }

    pub fn from_alexander(delta: &AlexPoly) -> Result<Self, KnotError> {
        let bad = |e: i64, c: i64, reason: &str| KnotError::NotLSpace {
            term: render_term(c, e),
            reason: reason.to_string(),
        };
        if delta.is_empty() {
            return Err(KnotError::NotLSpace {
                term: "0".into(),
                reason: "zero polynomial".into(),
            });
        }
        let mut alphas = Vec::with_capacity(delta.len());
        for (k, (e, c)) in delta.terms_desc().enumerate() {
            if c.abs() != 1 {
                return Err(bad(e, c, "coefficient is not +1 or -1"));
            }
            let expect = if k % 2 == 0 { 1 } else { -1 };
            if c != expect {
                return Err(bad(e, c, "signs do not alternate starting from +1"));
            }
            if delta.coefficient(-e) != c {
                return Err(bad(e, c, "exponents are not symmetric"));
            }
            alphas.push(e);
        }
        if alphas.len() % 2 == 0 {
            let (e, c) = delta.terms_desc().last().expect("nonempty");
            return Err(bad(e, c, "even number of terms"));
        }
        Ok(StaircaseSpec { alphas })
    }

    pub fn torus(p: u32, q: u32) -> Result<Self, KnotError> {
        Self::from_alexander(&torus_alexander(p, q)?)
    }

    pub fn alphas(&self) -> &[i64] {
        &self.alphas
    }

    /// `d_i = α_{i-1} - α_i` for `1 <= i <= 2n`, stored from index 0.
    pub fn gaps(&self) -> Vec<u32> {
        self.alphas
            .windows(2)
            .map(|w| u32::try_from(w[0] - w[1]).expect("strictly decreasing"))
            .collect()
    }

    /// Number of steps `n`.
    pub fn steps(&self) -> usize {
        self.alphas.len() / 2
    }

    /// `α_0`, the Seifert genus of the L-space knot.
    pub fn genus(&self) -> i64 {
        self.alphas[0]
    }

    pub fn is_unknot(&self) -> bool {
        self.alphas.len() == 1
    }

    /// The gaps `d_2, d_4, ..., d_2n` carried by the `v`-arrows.
    pub fn even_gaps(&self) -> Vec<u32> {
        self.gaps().into_iter().skip(1).step_by(2).collect()
    }

    pub fn alexander(&self) -> AlexPoly {
        AlexPoly::from_terms(
            self.alphas
                .iter()
                .enumerate()
                .map(|(k, &a)| (a, if k % 2 == 0 { 1 } else { -1 })),
        )
    }

    /// Bigradings of `x_0, ..., x_2n` with `gr_u(x_0) = 0`.
    fn bigradings(&self) -> Vec<BiGrading> {
        let gaps = self.gaps();
        let mut out = vec![BiGrading::new(0, -2 * self.alphas[0])];
        for (i, &d) in gaps.iter().enumerate() {
            let prev = out[i];
            let d = i64::from(d);
            out.push(if i % 2 == 0 {
                // x_{2k+1} -> u^d x_{2k}
                BiGrading::new(prev.gr_u - 2 * d + 1, prev.gr_v + 1)
            } else {
                // x_{2k+1} -> v^d x_{2k+2}
                BiGrading::new(prev.gr_u - 1, prev.gr_v + 2 * d - 1)
            });
        }
        out
    }

    /// `d x_{2i-1} = u^{d_{2i-1}} x_{2i-2} + v^{d_{2i}} x_{2i}`.
    pub fn bigraded_complex(&self) -> BigradedComplex {
        let gens = self
            .bigradings()
            .into_iter()
            .enumerate()
            .map(|(i, g)| Generator::new(format!("x{i}"), g))
            .collect();
        let gaps = self.gaps();
        let arrows = (0..self.steps()).flat_map(|k| {
            let odd = 2 * k + 1;
            [
                Arrow::new(odd, odd - 1, MonoUV::new(gaps[2 * k], 0)),
                Arrow::new(odd, odd + 1, MonoUV::new(0, gaps[2 * k + 1])),
            ]
        });
        BigradedComplex::new(gens, arrows).expect("staircase is well formed")
    }

    /// `d y_{2k+1} = v^{d_{2k+2}} y_{2k+2}`, Maslov gradings included.
    pub fn graded_complex(&self) -> GradedComplex {
        let gens = self
            .bigradings()
            .into_iter()
            .zip(&self.alphas)
            .enumerate()
            .map(|(i, (g, &a))| Generator::new(format!("y{i}"), AlexGrading::new(a, Some(g.gr_v))))
            .collect();
        let gaps = self.gaps();
        let arrows = (0..self.steps()).map(|k| {
            let odd = 2 * k + 1;
            Arrow::new(odd, odd + 1, VPow(gaps[2 * k + 1]))
        });
        GradedComplex::new(gens, arrows).expect("staircase is well formed")
    }
}

fn render_term(c: i64, e: i64) -> String {
    AlexPoly::from_terms([(e, c)]).to_string()
}

fn read_document(path: &Path) -> Result<AnyComplex, KnotError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| KnotError::Io {
        path: shown.clone(),
        message: e.to_string(),
    })?;
    decode(&text).map_err(|source| KnotError::Decode {
        path: shown,
        source,
    })
}

/// Model of a leaf that is an L-space knot.
pub fn leaf_staircase(e: &KnotExpr) -> Result<Option<StaircaseSpec>, KnotError> {
    Ok(match e {
        KnotExpr::Unknot => Some(StaircaseSpec::unknot()),
        KnotExpr::Torus(p, q) => Some(StaircaseSpec::torus(*p, *q)?),
        KnotExpr::LSpace(d) => Some(StaircaseSpec::from_alexander(d)?),
        _ => None,
    })
}

/// The F2[v]-complex of an expression.
pub fn realize_graded(e: &KnotExpr) -> Result<GradedComplex, KnotError> {
    if let Some(s) = leaf_staircase(e)? {
        return Ok(s.graded_complex());
    }
    Ok(match e {
        KnotExpr::File(path) => match read_document(path)? {
            AnyComplex::Graded(c) => c,
            AnyComplex::Bigraded(c) => c.set_u_zero(),
        },
        KnotExpr::Mirror(inner) => realize_graded(inner)?.dual(),
        KnotExpr::Sum(a, b) => realize_graded(a)?.tensor(&realize_graded(b)?),
        _ => unreachable!("leaves handled above"),
    })
}

/// The F2[u,v]-complex of an expression. Document leaves must be bigraded.
pub fn realize_bigraded(e: &KnotExpr) -> Result<BigradedComplex, KnotError> {
    if let Some(s) = leaf_staircase(e)? {
        return Ok(s.bigraded_complex());
    }
    Ok(match e {
        KnotExpr::File(path) => match read_document(path)? {
            AnyComplex::Bigraded(c) => c,
            AnyComplex::Graded(_) => {
                return Err(ComplexError::WrongKind {
                    expected: ComplexKind::Bigraded,
                    found: ComplexKind::Graded,
                }
                .into())
            }
        },
        KnotExpr::Mirror(inner) => realize_bigraded(inner)?.dual(),
        KnotExpr::Sum(a, b) => realize_bigraded(a)?.tensor(&realize_bigraded(b)?),
        _ => unreachable!("leaves handled above"),
    })
}

/// Whether every document leaf of `e` is bigraded.
pub fn supports_bigraded(e: &KnotExpr) -> bool {
    match e {
        KnotExpr::File(p) => matches!(read_document(p), Ok(AnyComplex::Bigraded(_))),
        KnotExpr::Mirror(a) => supports_bigraded(a),
        KnotExpr::Sum(a, b) => supports_bigraded(a) && supports_bigraded(b),
        _ => true,
    }
}

/// Paths of all document leaves.
pub fn file_leaves(e: &KnotExpr) -> Vec<PathBuf> {
    match e {
        KnotExpr::File(p) => vec![p.clone()],
        KnotExpr::Mirror(a) => file_leaves(a),
        KnotExpr::Sum(a, b) => {
            let mut v = file_leaves(a);
            v.extend(file_leaves(b));
            v
        }
        _ => Vec::new(),
    }
}
