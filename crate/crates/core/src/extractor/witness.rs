//! Witnesses, their independent verification and their JSON form.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::Instance;
use crate::graph::{TwoColoring, VertexSet};

/// A certificate that a coloring contains one of the two target structures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// A red cycle, listed in order; the last vertex is adjacent to the first.
    RedCycle(Vec<usize>),
    /// Pairwise disjoint parts with every cross pair blue, sorted by size.
    BlueKPartite(Vec<Vec<usize>>),
}

impl Witness {
    pub fn is_red_cycle(&self) -> bool {
        matches!(self, Witness::RedCycle(_))
    }

    /// Relabels every vertex through `f`.
    pub fn map(self, f: impl Fn(usize) -> usize) -> Witness {
        match self {
            Witness::RedCycle(c) => Witness::RedCycle(c.into_iter().map(&f).collect()),
            Witness::BlueKPartite(parts) => Witness::BlueKPartite(
                parts
                    .into_iter()
                    .map(|p| p.into_iter().map(&f).collect())
                    .collect(),
            ),
        }
    }
}

/// Why a witness was rejected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessFailure {
    #[error("vertex {vertex} is outside the coloring on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex {0} is repeated")]
    RepeatedVertex(usize),
    #[error("a cycle needs at least 3 vertices, got {0}")]
    DegenerateCycle(usize),
    #[error("cycle has {len} vertices but at least {n} are required")]
    CycleTooShort { len: usize, n: usize },
    #[error("edge {0}-{1} is not red")]
    NonRedEdge(usize, usize),
    #[error("part sizes {found:?} do not match the required multiset {expected:?}")]
    PartSizeMismatch {
        expected: Vec<usize>,
        found: Vec<usize>,
    },
    #[error("parts overlap at vertex {0}")]
    PartsOverlap(usize),
    #[error("edge {0}-{1} between different parts is not blue")]
    NonBlueEdge(usize, usize),
}

/// Checks `w` against `c` and `inst` literally: a red cycle must be simple,
/// red on every consecutive and closing pair and at least `n` long; a blue
/// multipartite witness must have part sizes equal to `inst.parts()` as a
/// multiset, disjoint parts and only blue edges across parts.
pub fn verify_witness(c: &TwoColoring, inst: &Instance, w: &Witness) -> Result<(), WitnessFailure> {
    let n = c.n();
    let mut seen = VertexSet::new(n);
    let mut claim = |v: usize, overlap: fn(usize) -> WitnessFailure| {
        if v >= n {
            return Err(WitnessFailure::VertexOutOfRange { vertex: v, n });
        }
        if !seen.insert(v) {
            return Err(overlap(v));
        }
        Ok(())
    };
    match w {
        Witness::RedCycle(cycle) => {
            for &v in cycle {
                claim(v, WitnessFailure::RepeatedVertex)?;
            }
            if cycle.len() < 3 {
                return Err(WitnessFailure::DegenerateCycle(cycle.len()));
            }
            if cycle.len() < inst.n() {
                return Err(WitnessFailure::CycleTooShort {
                    len: cycle.len(),
                    n: inst.n(),
                });
            }
            for (i, &u) in cycle.iter().enumerate() {
                let v = cycle[(i + 1) % cycle.len()];
                if !c.is_red(u, v) {
                    return Err(WitnessFailure::NonRedEdge(u, v));
                }
            }
        }
        Witness::BlueKPartite(parts) => {
            let mut found: Vec<usize> = parts.iter().map(Vec::len).collect();
            found.sort_unstable();
            if found != inst.parts() {
                return Err(WitnessFailure::PartSizeMismatch {
                    expected: inst.parts().to_vec(),
                    found,
                });
            }
            for &v in parts.iter().flatten() {
                claim(v, WitnessFailure::PartsOverlap)?;
            }
            for (i, p) in parts.iter().enumerate() {
                for q in &parts[i + 1..] {
                    for &u in p {
                        if let Some(&v) = q.iter().find(|&&v| c.is_red(u, v)) {
                            return Err(WitnessFailure::NonBlueEdge(u, v));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    RedCycle,
    BlueKpartite,
}

/// Version of the JSON witness layout.
pub const WITNESS_SCHEMA: u32 = 1;

/// The serialized witness:
/// `{"schema":1,"type":"red_cycle","vertices":[..],"n":..,"parts_sizes":[..]}`
/// or the same with `"type":"blue_kpartite"` and `"parts":[[..],..]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDocument {
    pub schema: u32,
    #[serde(rename = "type")]
    pub kind: WitnessKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parts: Option<Vec<Vec<usize>>>,
    pub n: usize,
    pub parts_sizes: Vec<usize>,
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("malformed witness JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported witness schema {0}")]
    UnsupportedSchema(u32),
    #[error("witness of type {kind} lacks the {field:?} field")]
    MissingField {
        kind: &'static str,
        field: &'static str,
    },
}

impl WitnessDocument {
    pub fn new(w: &Witness, inst: &Instance) -> Self {
        let (kind, vertices, parts) = match w {
            Witness::RedCycle(c) => (WitnessKind::RedCycle, Some(c.clone()), None),
            Witness::BlueKPartite(p) => (WitnessKind::BlueKpartite, None, Some(p.clone())),
        };
        WitnessDocument {
            schema: WITNESS_SCHEMA,
            kind,
            vertices,
            parts,
            n: inst.n(),
            parts_sizes: inst.parts().to_vec(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self, DocumentError> {
        let doc: WitnessDocument = serde_json::from_str(text)?;
        if doc.schema != WITNESS_SCHEMA {
            return Err(DocumentError::UnsupportedSchema(doc.schema));
        }
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("witness documents always serialize")
    }

    pub fn witness(&self) -> Result<Witness, DocumentError> {
        match self.kind {
            WitnessKind::RedCycle => {
                self.vertices
                    .clone()
                    .map(Witness::RedCycle)
                    .ok_or(DocumentError::MissingField {
                        kind: "red_cycle",
                        field: "vertices",
                    })
            }
            WitnessKind::BlueKpartite => {
                self.parts
                    .clone()
                    .map(Witness::BlueKPartite)
                    .ok_or(DocumentError::MissingField {
                        kind: "blue_kpartite",
                        field: "parts",
                    })
            }
        }
    }
}
