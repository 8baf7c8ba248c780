//! The machine-readable document format.
//!
//! A document is a tagged JSON object: a preorder lists its size and the
//! order pairs beyond the diagonal, a morphism embeds its two endpoint
//! preorders and a target list, and a partial morphism adds the member
//! list of its clopen domain. Readers add the diagonal and verify
//! transitivity; closing the relation instead is an explicit opt-in.

use crate::error::Error;
use crate::preord::{Morphism, Preorder};
use crate::rel::{Carrier, FinMap, Rel, Subset};
use crate::stab::PartialMorphism;
use serde::{Deserialize, Serialize};
use std::sync::Arc;

#[derive(Debug, thiserror::Error)]
pub enum DocError {
    #[error("parse error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("invalid document: {0}")]
    Invalid(#[from] Error),

    #[error("invalid document: {0}")]
    Schema(String),

    #[error("expected a {expected} document, found {found}")]
    Kind {
        expected: &'static str,
        found: &'static str,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PreorderDoc {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub pairs: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl PreorderDoc {
    pub fn from_preorder(p: &Preorder) -> Self {
        PreorderDoc {
            n: p.size(),
            pairs: p
                .rel()
                .pairs()
                .into_iter()
                .filter(|&(a, b)| a != b)
                .collect(),
            labels: p.carrier().labels().map(|l| l.to_vec()),
        }
    }

    /// Builds the preorder, adding the diagonal. With `close` the listed
    /// pairs are closed transitively; without it a non-transitive relation
    /// is rejected.
    pub fn to_preorder(&self, close: bool) -> Result<Preorder, DocError> {
        let mut rel = Rel::from_pairs(self.n, &self.pairs)?.reflexive_closure();
        if close {
            rel = rel.transitive_closure();
        }
        let carrier = match &self.labels {
            Some(labels) => Carrier::labeled(self.n, labels.clone())?,
            None => Carrier::unlabeled(self.n)?,
        };
        Ok(Preorder::new(carrier, rel)?)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MorphismDoc {
    pub dom: PreorderDoc,
    pub cod: PreorderDoc,
    pub map: Vec<usize>,
}

impl MorphismDoc {
    pub fn from_morphism(f: &Morphism) -> Self {
        MorphismDoc {
            dom: PreorderDoc::from_preorder(f.dom()),
            cod: PreorderDoc::from_preorder(f.cod()),
            map: f.map().targets().to_vec(),
        }
    }

    pub fn to_morphism(&self, close: bool) -> Result<Morphism, DocError> {
        let dom = Arc::new(self.dom.to_preorder(close)?);
        let cod = Arc::new(self.cod.to_preorder(close)?);
        let map = FinMap::new(self.map.clone(), cod.size())?;
        Ok(Morphism::new(dom, cod, map)?)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PartialMorphismDoc {
    pub dom: PreorderDoc,
    pub cod: PreorderDoc,
    pub domain: Vec<usize>,
    pub map: Vec<usize>,
}

impl PartialMorphismDoc {
    pub fn from_partial(p: &PartialMorphism) -> Self {
        PartialMorphismDoc {
            dom: PreorderDoc::from_preorder(p.dom()),
            cod: PreorderDoc::from_preorder(p.cod()),
            domain: p.domain_subset().indices(),
            map: p.map().targets().to_vec(),
        }
    }

    pub fn to_partial(&self, close: bool) -> Result<PartialMorphism, DocError> {
        let dom = Arc::new(self.dom.to_preorder(close)?);
        let cod = Arc::new(self.cod.to_preorder(close)?);
        let subset = Subset::from_indices(dom.size(), &self.domain)?;
        let map = FinMap::new(self.map.clone(), cod.size())?;
        Ok(PartialMorphism::new(dom, cod, subset, map)?)
    }
}

/// A parsed input or output file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Document {
    Preorder(PreorderDoc),
    Morphism(MorphismDoc),
    PartialMorphism(PartialMorphismDoc),
}

impl Document {
    pub fn parse(text: &str) -> Result<Document, DocError> {
        Ok(serde_json::from_str(text)?)
    }

    /// Canonical serialization: pretty-printed JSON with pairs in
    /// lexicographic order, byte-stable for a fixed value.
    pub fn emit(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("documents serialize");
        out.push('\n');
        out
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            Document::Preorder(_) => "preorder",
            Document::Morphism(_) => "morphism",
            Document::PartialMorphism(_) => "partial_morphism",
        }
    }

    pub fn from_preorder(p: &Preorder) -> Document {
        Document::Preorder(PreorderDoc::from_preorder(p))
    }

    pub fn from_morphism(f: &Morphism) -> Document {
        Document::Morphism(MorphismDoc::from_morphism(f))
    }

    pub fn from_partial(p: &PartialMorphism) -> Document {
        Document::PartialMorphism(PartialMorphismDoc::from_partial(p))
    }

    pub fn expect_preorder(&self, close: bool) -> Result<Preorder, DocError> {
        match self {
            Document::Preorder(doc) => doc.to_preorder(close),
            other => Err(DocError::Kind {
                expected: "preorder",
                found: other.kind_name(),
            }),
        }
    }

    pub fn expect_morphism(&self, close: bool) -> Result<Morphism, DocError> {
        match self {
            Document::Morphism(doc) => doc.to_morphism(close),
            other => Err(DocError::Kind {
                expected: "morphism",
                found: other.kind_name(),
            }),
        }
    }

    /// A partial morphism, or a total morphism widened to one.
    pub fn expect_partial(&self, close: bool) -> Result<PartialMorphism, DocError> {
        match self {
            Document::PartialMorphism(doc) => doc.to_partial(close),
            Document::Morphism(doc) => Ok(PartialMorphism::total(&doc.to_morphism(close)?)),
            other => Err(DocError::Kind {
                expected: "partial_morphism",
                found: other.kind_name(),
            }),
        }
    }
}

/// Output of the `components` task.
#[derive(Debug, Clone, Serialize)]
pub struct ComponentsReport {
    pub blocks: Vec<Vec<usize>>,
}

/// Output of the `classify` task.
#[derive(Debug, Clone, Serialize)]
pub struct ClassifyReport {
    pub is_equivalence_object: bool,
    pub is_partial_order_object: bool,
    pub is_discrete: bool,
}

/// Output of the `torsion` task: both parts of the canonical sequence.
#[derive(Debug, Clone, Serialize)]
pub struct TorsionReport {
    pub kernel_part: Document,
    pub quotient_part: Document,
}

/// Output of the `stabeq` task.
#[derive(Debug, Clone, Serialize)]
pub struct StabeqReport {
    pub congruent: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub offending_component: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessReport {
    pub a0: Vec<usize>,
    pub complements: (Vec<usize>, Vec<usize>),
}
