//! Dataset ingestion and the compiled-in models: the JSON schema for
//! G-CW-complex files, conversion to and from the in-memory complex, and
//! the built-in datasets.
//!
//! Group elements are stored as flat row-major integer arrays of length
//! matrix_dim², so a dataset file can be audited entry by entry against a
//! printed cell table. A missing witness means the identity.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bredon::{BoundaryTerm, Cell, GCWComplex};
use crate::group::{GroupElement, GroupError};

#[derive(Debug, Error)]
pub enum DatasetError {
    #[error("failed to parse dataset JSON: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("cell `{cell}`: stabilizer generator {index} has {len} entries, expected {expected}")]
    BadGeneratorLength {
        cell: String,
        index: usize,
        len: usize,
        expected: usize,
    },
    #[error("boundary of `{cell}`: witness has {len} entries, expected {expected}")]
    BadWitnessLength {
        cell: String,
        len: usize,
        expected: usize,
    },
    #[error("boundary of `{cell}`: sign {sign} is not +1 or -1")]
    BadSign { cell: String, sign: i8 },
    #[error("in cell `{cell}`: {source}")]
    Element { cell: String, source: GroupError },
}

/// Serialized form of a complex, mirroring the file schema.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct DatasetFile {
    pub name: String,
    pub matrix_dim: usize,
    pub cells: Vec<CellRecord>,
    pub boundaries: Vec<BoundaryRecord>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct CellRecord {
    pub id: String,
    pub dim: usize,
    pub stabilizer_gens: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct BoundaryRecord {
    pub cell: String,
    pub terms: Vec<TermRecord>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct TermRecord {
    pub sign: i8,
    pub target: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub g: Option<Vec<i64>>,
}

impl DatasetFile {
    pub fn from_json(text: &str) -> Result<Self, DatasetError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("dataset serialization cannot fail")
    }

    pub fn to_complex(&self) -> Result<GCWComplex, DatasetError> {
        let n = self.matrix_dim;
        let expected = n * n;
        let mut cells = Vec::with_capacity(self.cells.len());
        for rec in &self.cells {
            let mut gens = Vec::with_capacity(rec.stabilizer_gens.len());
            for (index, flat) in rec.stabilizer_gens.iter().enumerate() {
                if flat.len() != expected {
                    return Err(DatasetError::BadGeneratorLength {
                        cell: rec.id.clone(),
                        index,
                        len: flat.len(),
                        expected,
                    });
                }
                let g = GroupElement::from_flat(n, flat).map_err(|source| DatasetError::Element {
                    cell: rec.id.clone(),
                    source,
                })?;
                gens.push(g);
            }
            cells.push(Cell {
                id: rec.id.clone(),
                dim: rec.dim,
                stabilizer_gens: gens,
            });
        }

        let mut boundaries = HashMap::new();
        for rec in &self.boundaries {
            let mut terms = Vec::with_capacity(rec.terms.len());
            for t in &rec.terms {
                if t.sign != 1 && t.sign != -1 {
                    return Err(DatasetError::BadSign {
                        cell: rec.cell.clone(),
                        sign: t.sign,
                    });
                }
                let translate = match &t.g {
                    None => GroupElement::identity(n),
                    Some(flat) => {
                        if flat.len() != expected {
                            return Err(DatasetError::BadWitnessLength {
                                cell: rec.cell.clone(),
                                len: flat.len(),
                                expected,
                            });
                        }
                        GroupElement::from_flat(n, flat).map_err(|source| DatasetError::Element {
                            cell: rec.cell.clone(),
                            source,
                        })?
                    }
                };
                terms.push(BoundaryTerm {
                    sign: t.sign,
                    target: t.target.clone(),
                    translate,
                });
            }
            boundaries.insert(rec.cell.clone(), terms);
        }

        Ok(GCWComplex {
            name: self.name.clone(),
            matrix_dim: n,
            cells,
            boundaries,
        })
    }

    /// Serialize a complex back into the file schema. Boundary records
    /// follow the cell order, identity witnesses are omitted.
    pub fn from_complex(x: &GCWComplex) -> Self {
        let flatten = |g: &GroupElement| -> Vec<i64> {
            let m = g.matrix();
            let mut out = Vec::with_capacity(m.rows() * m.cols());
            for i in 0..m.rows() {
                for j in 0..m.cols() {
                    out.push(i64::try_from(m.get(i, j)).expect("dataset entries fit in i64"));
                }
            }
            out
        };
        let cells = x
            .cells
            .iter()
            .map(|c| CellRecord {
                id: c.id.clone(),
                dim: c.dim,
                stabilizer_gens: c.stabilizer_gens.iter().map(flatten).collect(),
            })
            .collect();
        let boundaries = x
            .cells
            .iter()
            .filter_map(|c| {
                let terms = x.boundaries.get(&c.id)?;
                if terms.is_empty() {
                    return None;
                }
                Some(BoundaryRecord {
                    cell: c.id.clone(),
                    terms: terms
                        .iter()
                        .map(|t| TermRecord {
                            sign: t.sign,
                            target: t.target.clone(),
                            g: (!t.translate.is_identity()).then(|| flatten(&t.translate)),
                        })
                        .collect(),
                })
            })
            .collect();
        DatasetFile {
            name: x.name.clone(),
            matrix_dim: x.matrix_dim,
            cells,
            boundaries,
        }
    }
}

pub fn parse_dataset(text: &str) -> Result<GCWComplex, DatasetError> {
    DatasetFile::from_json(text)?.to_complex()
}

/// A compiled-in dataset: either a single complex, or a product whose
/// homology is computed through the Künneth formula.
#[derive(Clone, Debug)]
pub enum Builtin {
    Complex(GCWComplex),
    Product(Box<GCWComplex>, Box<GCWComplex>),
}

pub const BUILTIN_NAMES: [&str; 4] = ["sl3z", "c2point", "trivialpoint", "gl3z"];

const SL3Z_JSON: &str = include_str!("../data/sl3z.json");
const C2POINT_JSON: &str = include_str!("../data/c2point.json");
const TRIVIALPOINT_JSON: &str = include_str!("../data/trivialpoint.json");

fn parse_builtin(text: &str) -> GCWComplex {
    parse_dataset(text).expect("compiled-in dataset is well-formed")
}

pub fn builtin(name: &str) -> Option<Builtin> {
    match name {
        "sl3z" => Some(Builtin::Complex(parse_builtin(SL3Z_JSON))),
        "c2point" => Some(Builtin::Complex(parse_builtin(C2POINT_JSON))),
        "trivialpoint" => Some(Builtin::Complex(parse_builtin(TRIVIALPOINT_JSON))),
        "gl3z" => Some(Builtin::Product(
            Box::new(parse_builtin(SL3Z_JSON)),
            Box::new(parse_builtin(C2POINT_JSON)),
        )),
        _ => None,
    }
}
