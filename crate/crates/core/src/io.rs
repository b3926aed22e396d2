//! The JSON complex format:
//! `{"dimension": d, "colors": {"label": c, ...}, "facets": [["label", ...], ...]}`.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::complex::{build_complex, ColoredComplex};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDocument {
    pub dimension: i64,
    pub colors: BTreeMap<String, i64>,
    pub facets: Vec<Vec<String>>,
}

impl ComplexDocument {
    pub fn from_complex(cx: &ColoredComplex) -> Self {
        ComplexDocument {
            dimension: cx.dim() as i64,
            colors: cx.coloring().into_iter().collect(),
            facets: cx
                .facets()
                .iter()
                .map(|f| {
                    let mut labels = cx.simplex_labels(f);
                    labels.sort();
                    labels
                })
                .collect(),
        }
    }

    pub fn to_complex(&self) -> Result<ColoredComplex> {
        for (label, &c) in &self.colors {
            if c < 0 || c > self.dimension {
                return Err(Error::ColorOutOfRange {
                    color: c,
                    max: self.dimension.max(0) as usize,
                });
            }
            if label.is_empty() {
                return Err(Error::DanglingLabel(label.clone()));
            }
        }
        let coloring: HashMap<String, i64> = self.colors.clone().into_iter().collect();
        let cx = build_complex(&self.facets, &coloring)?;
        if cx.dim() as i64 != self.dimension {
            return Err(Error::DimensionMismatch(format!(
                "declared dimension {} but facets have dimension {}",
                self.dimension,
                cx.dim()
            )));
        }
        Ok(cx)
    }
}

pub fn read_complex(text: &str) -> Result<ColoredComplex> {
    let doc: ComplexDocument = serde_json::from_str(text)?;
    doc.to_complex()
}

/// Pretty-printed canonical JSON: colors sorted by label, labels sorted within
/// each facet, facets in stored order.
pub fn write_complex(cx: &ColoredComplex) -> String {
    let doc = ComplexDocument::from_complex(cx);
    serde_json::to_string_pretty(&doc).expect("document is always serializable")
}
