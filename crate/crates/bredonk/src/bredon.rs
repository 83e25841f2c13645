//! Orbit data of a finite proper G-CW-complex, its validation, the assembly
//! of the chain complex with representation-ring coefficients as integer
//! matrices, and its homology.
//!
//! A complex is given by orbit representatives of cells, generators for each
//! cell stabilizer, and boundary lists. A boundary term carries a sign, a
//! target cell of one dimension lower, and a translating witness g; the
//! induced map on representation rings goes along the embedding s ↦ g⁻¹sg
//! of the source stabilizer into the target stabilizer.

use std::collections::HashMap;
use std::sync::Arc;

use thiserror::Error;

use crate::chartab::{character_table, induction_matrix, CharError, CharacterTable};
use crate::group::{
    subconjugation_embeds, FiniteGroup, GroupElement, GroupError, DEFAULT_ENUMERATION_CAP,
};
use crate::zmodule::{homology_at, snf, FgAbelianGroup, IntegerMatrix, ZModuleError};

#[derive(Debug, Error)]
pub enum BredonError {
    #[error("duplicate cell id `{0}`")]
    DuplicateCellId(String),
    #[error("boundary list names undeclared cell `{0}`")]
    UnknownBoundaryCell(String),
    #[error("boundary of `{cell}` targets unknown cell `{target}`")]
    UnknownBoundaryTarget { cell: String, target: String },
    #[error("boundary of `{cell}` (dim {dim}) targets `{target}` of dimension {target_dim}")]
    BoundaryDimension {
        cell: String,
        dim: usize,
        target: String,
        target_dim: usize,
    },
    #[error("boundary term {term} of `{cell}`: stabilizer does not embed into stab(`{target}`) under the witness")]
    NotSubconjugate {
        cell: String,
        term: usize,
        target: String,
    },
    #[error("composite of the differentials out of degrees {degree} and {} is nonzero", degree + 1)]
    BoundarySquareNonzero { degree: usize },
    #[error("stabilizer of `{cell}`: {source}")]
    Stabilizer { cell: String, source: GroupError },
    #[error("boundary term of `{cell}` has sign {sign}; only +1 and -1 are allowed")]
    BadSign { cell: String, sign: i64 },
    #[error(transparent)]
    Char(#[from] CharError),
    #[error(transparent)]
    ZModule(#[from] ZModuleError),
}

/// One orbit representative: an id, its dimension, and generators of its
/// stabilizer.
#[derive(Clone, Debug, PartialEq)]
pub struct Cell {
    pub id: String,
    pub dim: usize,
    pub stabilizer_gens: Vec<GroupElement>,
}

/// One term of a cellular boundary: `sign · target·g`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryTerm {
    pub sign: i8,
    pub target: String,
    pub translate: GroupElement,
}

/// Orbit data of a finite proper G-CW-complex.
#[derive(Clone, Debug, PartialEq)]
pub struct GCWComplex {
    pub name: String,
    pub matrix_dim: usize,
    pub cells: Vec<Cell>,
    /// Cell id → boundary terms; 0-cells have no entry (or an empty one).
    pub boundaries: HashMap<String, Vec<BoundaryTerm>>,
}

/// Per-cell audit data: all isomorphism-invariant, so it can be compared
/// against published stabilizer types without fixing generators.
#[derive(Clone, Debug)]
pub struct CellAudit {
    pub id: String,
    pub dim: usize,
    pub stabilizer_order: usize,
    pub class_count: usize,
    pub irreducible_degrees: Vec<u64>,
}

#[derive(Clone, Debug)]
pub struct ValidationReport {
    pub name: String,
    pub cells: Vec<CellAudit>,
    pub top_dim: usize,
    pub chain_ranks: Vec<usize>,
    pub boundary_terms_checked: usize,
}

/// The assembled chain complex: ranks, basis labels (cell id, irreducible
/// index) and one integer matrix per positive degree, mapping degree-d
/// coordinates to degree-(d−1) coordinates.
#[derive(Clone, Debug)]
pub struct BredonComplex {
    pub top_dim: usize,
    pub ranks: Vec<usize>,
    pub basis_labels: Vec<Vec<(String, usize)>>,
    differentials: Vec<IntegerMatrix>,
}

impl BredonComplex {
    /// The differential out of degree d (d ≥ 1), if the complex reaches it.
    pub fn differential(&self, d: usize) -> Option<&IntegerMatrix> {
        if d == 0 || d > self.top_dim {
            None
        } else {
            Some(&self.differentials[d - 1])
        }
    }

    pub fn rank(&self, d: usize) -> usize {
        self.ranks.get(d).copied().unwrap_or(0)
    }
}

struct Analysis {
    report: ValidationReport,
    complex: BredonComplex,
}

/// Shared worker: structural checks, stabilizer enumeration, subconjugation
/// checks, assembly, and the differential-composite check.
fn analyze(x: &GCWComplex) -> Result<Analysis, BredonError> {
    // ids must be unique, boundary lists must refer to declared cells
    let mut by_id: HashMap<&str, &Cell> = HashMap::new();
    for cell in &x.cells {
        if by_id.insert(cell.id.as_str(), cell).is_some() {
            return Err(BredonError::DuplicateCellId(cell.id.clone()));
        }
    }
    for id in x.boundaries.keys() {
        if !by_id.contains_key(id.as_str()) {
            return Err(BredonError::UnknownBoundaryCell(id.clone()));
        }
    }

    // stabilizers; identical generator lists or identical element sets are
    // deduplicated through the table cache below
    let mut stabilizers: HashMap<&str, Arc<FiniteGroup>> = HashMap::new();
    for cell in &x.cells {
        let gens = if cell.stabilizer_gens.is_empty() {
            vec![GroupElement::identity(x.matrix_dim)]
        } else {
            cell.stabilizer_gens.clone()
        };
        let group =
            FiniteGroup::enumerate(&gens, DEFAULT_ENUMERATION_CAP).map_err(|source| {
                BredonError::Stabilizer {
                    cell: cell.id.clone(),
                    source,
                }
            })?;
        stabilizers.insert(cell.id.as_str(), Arc::new(group));
    }

    // character tables, cached per distinct element set
    let mut table_cache: Vec<(Arc<FiniteGroup>, CharacterTable)> = Vec::new();
    let mut tables: HashMap<&str, CharacterTable> = HashMap::new();
    for cell in &x.cells {
        let group = &stabilizers[cell.id.as_str()];
        let cached = table_cache.iter().find(|(g, _)| g.as_ref() == group.as_ref());
        let table = match cached {
            Some((_, t)) => t.clone(),
            None => {
                let t = character_table(group)?;
                table_cache.push((group.clone(), t.clone()));
                t
            }
        };
        tables.insert(cell.id.as_str(), table);
    }

    // boundary checks: dimensions, signs, subconjugation of every term
    let mut terms_checked = 0;
    for cell in &x.cells {
        let Some(terms) = x.boundaries.get(&cell.id) else {
            continue;
        };
        for (ti, term) in terms.iter().enumerate() {
            if term.sign != 1 && term.sign != -1 {
                return Err(BredonError::BadSign {
                    cell: cell.id.clone(),
                    sign: term.sign as i64,
                });
            }
            let Some(target) = by_id.get(term.target.as_str()) else {
                return Err(BredonError::UnknownBoundaryTarget {
                    cell: cell.id.clone(),
                    target: term.target.clone(),
                });
            };
            if cell.dim == 0 || target.dim != cell.dim - 1 {
                return Err(BredonError::BoundaryDimension {
                    cell: cell.id.clone(),
                    dim: cell.dim,
                    target: target.id.clone(),
                    target_dim: target.dim,
                });
            }
            let s = &stabilizers[cell.id.as_str()];
            let t = &stabilizers[target.id.as_str()];
            let ok = subconjugation_embeds(s, &term.translate, t).map_err(|source| {
                BredonError::Stabilizer {
                    cell: cell.id.clone(),
                    source,
                }
            })?;
            if !ok {
                return Err(BredonError::NotSubconjugate {
                    cell: cell.id.clone(),
                    term: ti,
                    target: target.id.clone(),
                });
            }
            terms_checked += 1;
        }
    }

    // assembly: per degree, concatenate the irreducibles of the stabilizers
    // of that degree's cells (in input order) as the basis
    let top_dim = x.cells.iter().map(|c| c.dim).max().unwrap_or(0);
    let mut cells_by_dim: Vec<Vec<&Cell>> = vec![Vec::new(); top_dim + 1];
    for cell in &x.cells {
        cells_by_dim[cell.dim].push(cell);
    }

    let mut ranks = Vec::with_capacity(top_dim + 1);
    let mut basis_labels: Vec<Vec<(String, usize)>> = Vec::with_capacity(top_dim + 1);
    let mut offsets: Vec<HashMap<&str, usize>> = Vec::with_capacity(top_dim + 1);
    for cells in &cells_by_dim {
        let mut labels = Vec::new();
        let mut offs = HashMap::new();
        let mut off = 0;
        for cell in cells {
            offs.insert(cell.id.as_str(), off);
            let n = tables[cell.id.as_str()].len();
            for i in 0..n {
                labels.push((cell.id.clone(), i));
            }
            off += n;
        }
        ranks.push(off);
        basis_labels.push(labels);
        offsets.push(offs);
    }

    let mut differentials = Vec::with_capacity(top_dim);
    for d in 1..=top_dim {
        let mut psi = IntegerMatrix::zero(ranks[d - 1], ranks[d]);
        for cell in &cells_by_dim[d] {
            let col0 = offsets[d][cell.id.as_str()];
            let Some(terms) = x.boundaries.get(&cell.id) else {
                continue;
            };
            let source_table = &tables[cell.id.as_str()];
            for term in terms {
                let target_table = &tables[term.target.as_str()];
                let ind = induction_matrix(source_table, &term.translate, target_table)?;
                let row0 = offsets[d - 1][term.target.as_str()];
                // the multiplicity matrix is (source irr × target irr); as a
                // linear map on coordinate columns the block is its transpose
                psi.add_scaled_block(row0, col0, &ind.entries.transpose(), term.sign as i64);
            }
        }
        differentials.push(psi);
    }

    for d in 1..top_dim {
        let product = differentials[d - 1].matmul(&differentials[d]);
        if !product.is_zero() {
            return Err(BredonError::BoundarySquareNonzero { degree: d });
        }
    }

    let audits = x
        .cells
        .iter()
        .map(|cell| {
            let g = &stabilizers[cell.id.as_str()];
            let t = &tables[cell.id.as_str()];
            CellAudit {
                id: cell.id.clone(),
                dim: cell.dim,
                stabilizer_order: g.order(),
                class_count: g.class_count(),
                irreducible_degrees: t
                    .degrees()
                    .iter()
                    .map(|d| u64::try_from(d).expect("small degree"))
                    .collect(),
            }
        })
        .collect();

    Ok(Analysis {
        report: ValidationReport {
            name: x.name.clone(),
            cells: audits,
            top_dim,
            chain_ranks: ranks.clone(),
            boundary_terms_checked: terms_checked,
        },
        complex: BredonComplex {
            top_dim,
            ranks,
            basis_labels,
            differentials,
        },
    })
}

/// Validate the complex: stabilizers enumerate, every boundary term's
/// subconjugation holds, and the assembled differentials compose to zero.
pub fn validate(x: &GCWComplex) -> Result<ValidationReport, BredonError> {
    analyze(x).map(|a| a.report)
}

/// Assemble the chain complex of induced representation-ring maps.
pub fn assemble(x: &GCWComplex) -> Result<BredonComplex, BredonError> {
    analyze(x).map(|a| a.complex)
}

/// Homology of the assembled complex, one group per degree 0..=top.
pub fn bredon_homology(x: &GCWComplex) -> Result<Vec<FgAbelianGroup>, BredonError> {
    let complex = assemble(x)?;
    homology_of(&complex)
}

/// Homology straight from an already assembled complex.
pub fn homology_of(complex: &BredonComplex) -> Result<Vec<FgAbelianGroup>, BredonError> {
    let mut out = Vec::with_capacity(complex.top_dim + 1);
    for d in 0..=complex.top_dim {
        let incoming = complex.differential(d + 1);
        let outgoing = complex.differential(d);
        out.push(homology_at(incoming, outgoing, complex.rank(d))?);
    }
    Ok(out)
}

/// Alternating sum of the chain ranks; cross-checked against the
/// alternating sum of the homology ranks, which must agree.
pub fn euler_characteristic(x: &GCWComplex) -> Result<i64, BredonError> {
    let complex = assemble(x)?;
    let chi_chain: i64 = complex
        .ranks
        .iter()
        .enumerate()
        .map(|(d, &r)| if d % 2 == 0 { r as i64 } else { -(r as i64) })
        .sum();
    let homology = homology_of(&complex)?;
    let chi_homology: i64 = homology
        .iter()
        .enumerate()
        .map(|(d, h)| {
            let r = h.rank() as i64;
            if d % 2 == 0 {
                r
            } else {
                -r
            }
        })
        .sum();
    assert_eq!(
        chi_chain, chi_homology,
        "alternating rank sums of chains and homology disagree"
    );
    Ok(chi_chain)
}

/// True iff rank(H₀) equals the supplied count of conjugacy classes of
/// finite-order elements of the ambient group. The count is user input; an
/// infinite ambient group cannot be enumerated here.
pub fn expected_h0_check(x: &GCWComplex, fc_count: usize) -> Result<bool, BredonError> {
    let homology = bredon_homology(x)?;
    Ok(homology.first().map_or(fc_count == 0, |h| h.rank() == fc_count))
}

/// Divisor lists of the SNF of each differential, indexed by degree d ≥ 1.
pub fn differential_divisors(complex: &BredonComplex) -> Vec<(usize, Vec<num_bigint::BigInt>)> {
    (1..=complex.top_dim)
        .filter_map(|d| complex.differential(d).map(|m| (d, snf(m).divisors())))
        .collect()
}
