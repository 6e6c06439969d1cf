//! Map description documents: a JSON object naming the field and listing the
//! factors of the word. Scalars are strings in the literal syntax of
//! [`crate::padic::literal`]. Canonical documents are what [`MapDescription::to_text`]
//! emits, and they survive parse/serialize unchanged.
//!
//! ```json
//! {
//!   "prime": 3,
//!   "extension_degree": 1,
//!   "precision": 10,
//!   "dimension": 2,
//!   "factors": [
//!     { "kind": "henon", "a": "1", "poly": ["0", "0", "1"] }
//!   ]
//! }
//! ```

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::factor::{AffineAuto, Factor, HenonFactor, TriangularAuto};
use super::word::{AutoWord, WordFactor};
use crate::error::{Error, Result};
use crate::padic::{format_element, parse_element, FieldSpec, PadicElement, ResidueRing};
use crate::poly::MultiPoly;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermSpec {
    pub coeff: String,
    pub exp: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FactorKind {
    Henon { a: String, poly: Vec<String> },
    Triangular { a: Vec<String>, f: Vec<Vec<TermSpec>> },
    Affine { matrix: Vec<Vec<String>>, translation: Vec<String> },
}

fn is_false(b: &bool) -> bool {
    !*b
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FactorSpec {
    #[serde(flatten)]
    pub kind: FactorKind,
    #[serde(default, skip_serializing_if = "is_false")]
    pub inverted: bool,
}

fn one() -> usize {
    1
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MapDescription {
    pub prime: u64,
    #[serde(default = "one")]
    pub extension_degree: usize,
    pub precision: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<i64>>,
    pub dimension: usize,
    pub factors: Vec<FactorSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conjugator: Option<Vec<FactorSpec>>,
    /// Known periodic points, checked against certified bounds.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub rational_points: Vec<Vec<String>>,
}

impl MapDescription {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_text(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("descriptions always serialize");
        s.push('\n');
        s
    }

    pub fn field_spec(&self, precision: Option<u32>) -> Result<Arc<FieldSpec>> {
        self.field_spec_for_prime(self.prime, precision)
    }

    /// The field of the description with another prime substituted; the
    /// extension data must then be the default.
    pub fn field_spec_for_prime(&self, prime: u64, precision: Option<u32>) -> Result<Arc<FieldSpec>> {
        let modulus = if prime == self.prime { self.modulus.clone() } else { None };
        FieldSpec::new(prime, self.extension_degree, precision.unwrap_or(self.precision), modulus)
    }

    /// The word over the working ring O/p^N of `spec`.
    pub fn build(&self, spec: &Arc<FieldSpec>) -> Result<AutoWord<PadicElement>> {
        let ring = ResidueRing::working(spec);
        let factors =
            self.factors.iter().map(|f| build_factor(&ring, self.dimension, f)).collect::<Result<_>>()?;
        let conjugator = self
            .conjugator
            .as_ref()
            .map(|c| c.iter().map(|f| build_factor(&ring, self.dimension, f)).collect::<Result<Vec<_>>>())
            .transpose()?;
        AutoWord::new(&ring, self.dimension, factors, conjugator)
    }

    pub fn build_default(&self) -> Result<AutoWord<PadicElement>> {
        self.build(&self.field_spec(None)?)
    }

    pub fn rational_points(&self, ring: &Arc<ResidueRing>) -> Result<Vec<Vec<PadicElement>>> {
        self.rational_points
            .iter()
            .map(|pt| {
                if pt.len() != self.dimension {
                    return Err(Error::Parse(format!("point {pt:?} has wrong dimension")));
                }
                pt.iter().map(|s| parse_element(ring, s)).collect()
            })
            .collect()
    }

    /// Description of an existing word, scalars in canonical form.
    pub fn from_word(w: &AutoWord<PadicElement>) -> Self {
        let spec = w.ring().spec();
        let default_modulus = FieldSpec::new(spec.prime(), spec.degree(), spec.precision(), None)
            .map(|s| s.modulus_poly() == spec.modulus_poly())
            .unwrap_or(false);
        MapDescription {
            prime: spec.prime(),
            extension_degree: spec.degree(),
            precision: spec.precision(),
            modulus: (!default_modulus).then(|| spec.modulus_poly().iter().map(|&c| c as i64).collect()),
            dimension: w.dimension(),
            factors: w.factors().iter().map(describe_factor).collect(),
            conjugator: w.conjugator().map(|c| c.iter().map(describe_factor).collect()),
            rational_points: Vec::new(),
        }
    }
}

fn scalars(ring: &Arc<ResidueRing>, v: &[String]) -> Result<Vec<PadicElement>> {
    v.iter().map(|s| parse_element(ring, s)).collect()
}

fn build_factor(ring: &Arc<ResidueRing>, dim: usize, f: &FactorSpec) -> Result<WordFactor<PadicElement>> {
    let factor = match &f.kind {
        FactorKind::Henon { a, poly } => {
            Factor::Henon(HenonFactor::new(parse_element(ring, a)?, scalars(ring, poly)?)?)
        }
        FactorKind::Triangular { a, f } => {
            let polys = f
                .iter()
                .map(|terms| {
                    let terms = terms
                        .iter()
                        .map(|t| Ok((t.exp.clone(), parse_element(ring, &t.coeff)?)))
                        .collect::<Result<Vec<_>>>()?;
                    MultiPoly::from_terms(ring, dim, terms)
                })
                .collect::<Result<_>>()?;
            Factor::Triangular(TriangularAuto::new(scalars(ring, a)?, polys)?)
        }
        FactorKind::Affine { matrix, translation } => Factor::Affine(AffineAuto::new(
            matrix.iter().map(|row| scalars(ring, row)).collect::<Result<_>>()?,
            scalars(ring, translation)?,
        )?),
    };
    Ok(WordFactor { factor, inverted: f.inverted })
}

fn strings(v: &[PadicElement]) -> Vec<String> {
    v.iter().map(format_element).collect()
}

fn describe_factor(wf: &WordFactor<PadicElement>) -> FactorSpec {
    let kind = match &wf.factor {
        Factor::Henon(h) => FactorKind::Henon { a: format_element(h.a()), poly: strings(h.poly()) },
        Factor::Triangular(t) => FactorKind::Triangular {
            a: strings(t.a()),
            f: t.f()
                .iter()
                .map(|p| {
                    p.terms().map(|(e, c)| TermSpec { coeff: format_element(c), exp: e.clone() }).collect()
                })
                .collect(),
        },
        Factor::Affine(a) => FactorKind::Affine {
            matrix: a.matrix().iter().map(|row| strings(row)).collect(),
            translation: strings(a.translation()),
        },
    };
    FactorSpec { kind, inverted: wf.inverted }
}
