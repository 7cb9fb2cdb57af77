//! The self-describing JSON document format for algebras.
//!
//! One format serves CLI input, catalog storage and the machine blocks
//! of reports. Indices are 1-based with b < c in every bracket record;
//! coefficients are exact rationals serialized as "num" or "num/den"
//! strings so no float can sneak in.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use nullcone::algebra::StructureConstants;
use nullcone::geometry::NullFrameMetric;
use nullcone::scalar::{self};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Signature {
    pub p: usize,
    pub k: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BracketRecord {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub coeff: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraDocument {
    pub format_version: u32,
    pub dim: usize,
    pub signature: Signature,
    pub brackets: Vec<BracketRecord>,
    /// Optional relabelling applied on load: slot s is occupied by
    /// original basis vector frame_permutation[s] (1-based).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frame_permutation: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parameters: Option<BTreeMap<String, String>>,
}

#[derive(Debug)]
pub struct ParseError {
    pub location: String,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at {}: {}", self.location, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err(location: impl Into<String>, message: impl Into<String>) -> ParseError {
    ParseError {
        location: location.into(),
        message: message.into(),
    }
}

impl AlgebraDocument {
    pub fn from_json(text: &str) -> Result<Self, ParseError> {
        let doc: AlgebraDocument =
            serde_json::from_str(text).map_err(|e| err("document", e.to_string()))?;
        doc.validate()?;
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn validate(&self) -> Result<(), ParseError> {
        if self.format_version != FORMAT_VERSION {
            return Err(err(
                "format_version",
                format!("unsupported version {}", self.format_version),
            ));
        }
        if self.dim != 2 * self.signature.p + self.signature.k {
            return Err(err(
                "signature",
                format!(
                    "dim = {} but 2p + k = {}",
                    self.dim,
                    2 * self.signature.p + self.signature.k
                ),
            ));
        }
        let mut seen = std::collections::BTreeSet::new();
        for (i, rec) in self.brackets.iter().enumerate() {
            let loc = format!("brackets[{i}]");
            for idx in [rec.a, rec.b, rec.c] {
                if idx < 1 || idx > self.dim {
                    return Err(err(&loc, format!("index {idx} outside 1..{}", self.dim)));
                }
            }
            if rec.b >= rec.c {
                return Err(err(
                    &loc,
                    format!(
                        "lower indices must satisfy b < c (got b = {}, c = {})",
                        rec.b, rec.c
                    ),
                ));
            }
            if !seen.insert((rec.a, rec.b, rec.c)) {
                return Err(err(&loc, "duplicate bracket record"));
            }
            scalar::parse(&rec.coeff).map_err(|e| err(&loc, format!("bad coefficient: {e}")))?;
        }
        if let Some(perm) = &self.frame_permutation {
            if perm.len() != self.dim {
                return Err(err("frame_permutation", "length must equal dim"));
            }
            let mut sorted = perm.clone();
            sorted.sort_unstable();
            if sorted != (1..=self.dim).collect::<Vec<_>>() {
                return Err(err("frame_permutation", "not a permutation of 1..dim"));
            }
        }
        Ok(())
    }

    /// Structure constants (with the frame permutation applied) and the
    /// metric.
    pub fn to_core(&self) -> Result<(StructureConstants, NullFrameMetric), ParseError> {
        let metric = NullFrameMetric::new(self.signature.p, self.signature.k)
            .map_err(|e| err("signature", e.to_string()))?;
        let mut mu = StructureConstants::new(self.dim);
        for (i, rec) in self.brackets.iter().enumerate() {
            let v = scalar::parse(&rec.coeff).expect("validated");
            mu.add_to(rec.a - 1, rec.b - 1, rec.c - 1, v)
                .map_err(|e| err(format!("brackets[{i}]"), e.to_string()))?;
        }
        if let Some(perm) = &self.frame_permutation {
            let zero_based: Vec<usize> = perm.iter().map(|&i| i - 1).collect();
            let change = nullcone::BasisChange::from_permutation(&zero_based);
            mu = mu
                .change_basis(&change)
                .map_err(|e| err("frame_permutation", e.to_string()))?;
        }
        Ok((mu, metric))
    }

    /// Document for a bare algebra in the identity frame.
    pub fn from_core(mu: &StructureConstants, metric: &NullFrameMetric) -> Self {
        AlgebraDocument {
            format_version: FORMAT_VERSION,
            dim: metric.dim(),
            signature: Signature {
                p: metric.p(),
                k: metric.k(),
            },
            brackets: mu
                .iter_canonical()
                .map(|(a, b, c, v)| BracketRecord {
                    a: a + 1,
                    b: b + 1,
                    c: c + 1,
                    coeff: scalar::format(v),
                })
                .collect(),
            frame_permutation: None,
            parameters: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_identity() {
        let doc = AlgebraDocument {
            format_version: 1,
            dim: 4,
            signature: Signature { p: 2, k: 0 },
            brackets: vec![
                BracketRecord {
                    a: 1,
                    b: 1,
                    c: 3,
                    coeff: "2".into(),
                },
                BracketRecord {
                    a: 3,
                    b: 1,
                    c: 4,
                    coeff: "-1/2".into(),
                },
            ],
            frame_permutation: None,
            parameters: None,
        };
        let text = doc.to_json();
        let parsed = AlgebraDocument::from_json(&text).unwrap();
        assert_eq!(parsed.to_json(), text);
    }

    #[test]
    fn rejects_non_canonical_brackets() {
        let text = r#"{"format_version":1,"dim":3,"signature":{"p":1,"k":1},
            "brackets":[{"a":2,"b":3,"c":1,"coeff":"1"}]}"#;
        let e = AlgebraDocument::from_json(text).unwrap_err();
        assert!(e.location.contains("brackets[0]"));
    }

    #[test]
    fn rejects_bad_signature_and_floats() {
        let text = r#"{"format_version":1,"dim":4,"signature":{"p":1,"k":1},"brackets":[]}"#;
        assert!(AlgebraDocument::from_json(text).is_err());
        let text = r#"{"format_version":1,"dim":3,"signature":{"p":1,"k":1},
            "brackets":[{"a":2,"b":1,"c":3,"coeff":"0.5"}]}"#;
        assert!(AlgebraDocument::from_json(text).is_err());
    }

    #[test]
    fn frame_permutation_relabels() {
        let text = r#"{"format_version":1,"dim":3,"signature":{"p":1,"k":1},
            "brackets":[{"a":2,"b":1,"c":3,"coeff":"1"}],
            "frame_permutation":[3,2,1]}"#;
        let doc = AlgebraDocument::from_json(text).unwrap();
        let (mu, _) = doc.to_core().unwrap();
        // [e1,e3] = e2 becomes [f3,f1] = f2 under slot->old (3,2,1)
        assert_eq!(mu.get(1, 2, 0), scalar::one());
    }
}
