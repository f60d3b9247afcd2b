//! JSON document format for complexes. See `docs/complex-format.md`.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{
    AlexGrading, Arrow, BiGrading, BigradedComplex, Complex, ComplexError, Generator,
    GradedComplex, Grading, VPow, Violation,
};
use crate::algebra::MonoUV;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ComplexKind {
    Graded,
    Bigraded,
}

impl fmt::Display for ComplexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ComplexKind::Graded => "graded",
            ComplexKind::Bigraded => "bigraded",
        })
    }
}

/// A complex of either kind, as read from a document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyComplex {
    Graded(GradedComplex),
    Bigraded(BigradedComplex),
}

impl AnyComplex {
    pub fn kind(&self) -> ComplexKind {
        match self {
            AnyComplex::Graded(_) => ComplexKind::Graded,
            AnyComplex::Bigraded(_) => ComplexKind::Bigraded,
        }
    }

    pub fn validate(&self) -> Result<(), Violation> {
        match self {
            AnyComplex::Graded(c) => c.validate(),
            AnyComplex::Bigraded(c) => c.validate_knotlike(),
        }
    }

    pub fn tensor(&self, other: &AnyComplex) -> Result<AnyComplex, ComplexError> {
        match (self, other) {
            (AnyComplex::Graded(a), AnyComplex::Graded(b)) => Ok(AnyComplex::Graded(a.tensor(b))),
            (AnyComplex::Bigraded(a), AnyComplex::Bigraded(b)) => {
                Ok(AnyComplex::Bigraded(a.tensor(b)))
            }
            (a, b) => Err(ComplexError::KindMismatch(a.kind(), b.kind())),
        }
    }

    pub fn dual(&self) -> AnyComplex {
        match self {
            AnyComplex::Graded(c) => AnyComplex::Graded(c.dual()),
            AnyComplex::Bigraded(c) => AnyComplex::Bigraded(c.dual()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{location}: {message}")]
pub struct DecodeError {
    pub location: String,
    pub message: String,
}

impl DecodeError {
    fn at(location: impl Into<String>, message: impl Into<String>) -> Self {
        DecodeError {
            location: location.into(),
            message: message.into(),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    kind: ComplexKind,
    generators: Vec<GeneratorDoc>,
    arrows: Vec<ArrowDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GeneratorDoc {
    name: String,
    gradings: GradingsDoc,
}

#[derive(Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct GradingsDoc {
    #[serde(skip_serializing_if = "Option::is_none")]
    alexander: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    maslov: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    u: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    v: Option<i64>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ArrowDoc {
    from: String,
    to: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    u: Option<i64>,
    v: i64,
}

/// Per-kind conversion between gradings/weights and their document form.
trait DocGrading: Grading + Sized {
    const KIND: ComplexKind;
    fn to_doc(&self) -> GradingsDoc;
    fn from_doc(d: &GradingsDoc) -> Result<Self, String>;
    fn weight_to_doc(w: Self::Weight) -> (Option<i64>, i64);
    fn weight_from_doc(u: Option<i64>, v: i64) -> Result<Self::Weight, String>;
}

fn exponent(x: i64, var: &str) -> Result<u32, String> {
    if x < 0 {
        return Err(format!("negative exponent {x} on {var}"));
    }
    u32::try_from(x).map_err(|_| format!("exponent {x} on {var} is too large"))
}

impl DocGrading for AlexGrading {
    const KIND: ComplexKind = ComplexKind::Graded;

    fn to_doc(&self) -> GradingsDoc {
        GradingsDoc {
            alexander: Some(self.alexander),
            maslov: self.maslov,
            ..Default::default()
        }
    }

    fn from_doc(d: &GradingsDoc) -> Result<Self, String> {
        if d.u.is_some() || d.v.is_some() {
            return Err("graded generators take `alexander` and optional `maslov`".into());
        }
        let alexander = d.alexander.ok_or("missing `alexander`")?;
        Ok(AlexGrading::new(alexander, d.maslov))
    }

    fn weight_to_doc(w: VPow) -> (Option<i64>, i64) {
        (None, i64::from(w.0))
    }

    fn weight_from_doc(u: Option<i64>, v: i64) -> Result<VPow, String> {
        if let Some(u) = u {
            exponent(u, "u")?;
            if u != 0 {
                return Err("arrows of a graded complex cannot carry a power of u".into());
            }
        }
        Ok(VPow(exponent(v, "v")?))
    }
}

impl DocGrading for BiGrading {
    const KIND: ComplexKind = ComplexKind::Bigraded;

    fn to_doc(&self) -> GradingsDoc {
        GradingsDoc {
            u: Some(self.gr_u),
            v: Some(self.gr_v),
            ..Default::default()
        }
    }

    fn from_doc(d: &GradingsDoc) -> Result<Self, String> {
        if d.alexander.is_some() || d.maslov.is_some() {
            return Err("bigraded generators take `u` and `v`".into());
        }
        match (d.u, d.v) {
            (Some(u), Some(v)) => Ok(BiGrading::new(u, v)),
            _ => Err("missing `u` or `v`".into()),
        }
    }

    fn weight_to_doc(w: MonoUV) -> (Option<i64>, i64) {
        (Some(i64::from(w.u)), i64::from(w.v))
    }

    fn weight_from_doc(u: Option<i64>, v: i64) -> Result<MonoUV, String> {
        Ok(MonoUV::new(
            exponent(u.unwrap_or(0), "u")?,
            exponent(v, "v")?,
        ))
    }
}

fn to_document<G: DocGrading>(c: &Complex<G>) -> Document {
    let c = c.canonical();
    let gens = c.generators();
    Document {
        kind: G::KIND,
        generators: gens
            .iter()
            .map(|g| GeneratorDoc {
                name: g.name.clone(),
                gradings: g.grading.to_doc(),
            })
            .collect(),
        arrows: c
            .arrows()
            .iter()
            .map(|a| {
                let (u, v) = G::weight_to_doc(a.weight);
                ArrowDoc {
                    from: gens[a.from].name.clone(),
                    to: gens[a.to].name.clone(),
                    u,
                    v,
                }
            })
            .collect(),
    }
}

fn from_document<G: DocGrading>(doc: Document) -> Result<Complex<G>, DecodeError> {
    let mut index: HashMap<&str, usize> = HashMap::new();
    let mut gens = Vec::with_capacity(doc.generators.len());
    for (i, g) in doc.generators.iter().enumerate() {
        let loc = format!("generators[{i}]");
        if index.insert(g.name.as_str(), i).is_some() {
            return Err(DecodeError::at(
                loc,
                format!("duplicate generator {:?}", g.name),
            ));
        }
        let grading = G::from_doc(&g.gradings).map_err(|m| DecodeError::at(&loc, m))?;
        gens.push(Generator::new(g.name.clone(), grading));
    }
    let mut arrows = Vec::with_capacity(doc.arrows.len());
    for (i, a) in doc.arrows.iter().enumerate() {
        let loc = format!("arrows[{i}]");
        let lookup = |name: &str| {
            index
                .get(name)
                .copied()
                .ok_or_else(|| DecodeError::at(&loc, format!("unknown generator {name:?}")))
        };
        let (from, to) = (lookup(&a.from)?, lookup(&a.to)?);
        let weight = G::weight_from_doc(a.u, a.v).map_err(|m| DecodeError::at(&loc, m))?;
        arrows.push(Arrow::new(from, to, weight));
    }
    Complex::new(gens, arrows).map_err(|e| DecodeError::at("document", e.to_string()))
}

fn render(doc: &Document) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents always serialize");
    s.push('\n');
    s
}

/// Canonical document text for a complex.
pub fn encode(c: &impl Encodable) -> String {
    c.encode_doc()
}

pub fn encode_any(c: &AnyComplex) -> String {
    match c {
        AnyComplex::Graded(c) => encode(c),
        AnyComplex::Bigraded(c) => encode(c),
    }
}

/// Complexes with a document encoding.
pub trait Encodable {
    fn encode_doc(&self) -> String;
}

impl Encodable for GradedComplex {
    fn encode_doc(&self) -> String {
        render(&to_document(self))
    }
}

impl Encodable for BigradedComplex {
    fn encode_doc(&self) -> String {
        render(&to_document(self))
    }
}

/// Parses and validates a complex document.
pub fn decode(text: &str) -> Result<AnyComplex, DecodeError> {
    let doc: Document = serde_json::from_str(text).map_err(|e| {
        DecodeError::at(
            format!("line {} column {}", e.line(), e.column()),
            e.to_string(),
        )
    })?;
    let c = match doc.kind {
        ComplexKind::Graded => AnyComplex::Graded(from_document::<AlexGrading>(doc)?),
        ComplexKind::Bigraded => AnyComplex::Bigraded(from_document::<BiGrading>(doc)?),
    };
    c.validate()
        .map_err(|v| DecodeError::at("document", v.to_string()))?;
    Ok(c)
}
