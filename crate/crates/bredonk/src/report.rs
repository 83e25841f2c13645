//! Structured reports for the command-line front end: one schema for all
//! dataset commands, rendered either as stable human-readable text or as
//! JSON with keys in a fixed (sorted) order.

use serde::Serialize;
use std::fmt::Write as _;

use crate::bredon::{
    assemble, differential_divisors, euler_characteristic, homology_of, BredonError, GCWComplex,
    ValidationReport,
};
use crate::dataset::Builtin;
use crate::khomology::{ahss_collapse, kunneth, GradedHomology, KTheoryResult};
use crate::zmodule::FgAbelianGroup;

/// Field names are kept in sorted order so the serialized report has
/// sorted keys.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cells: Option<Vec<CellReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chain_ranks: Option<Vec<usize>>,
    pub command: String,
    pub dataset: String,
    pub diagnostics: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub differential_divisors: Option<Vec<DivisorReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub euler_characteristic: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected_h0: Option<ExpectedH0Report>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub homology: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_theory: Option<KTheoryReport>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CellReport {
    pub class_count: usize,
    pub degrees: Vec<u64>,
    pub dim: usize,
    pub id: String,
    pub stabilizer_order: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct DivisorReport {
    pub degree: usize,
    pub divisors: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExpectedH0Report {
    pub actual_rank: usize,
    pub expected: usize,
    pub matches: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct KTheoryReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k0: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k1: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nonzero_degrees: Option<Vec<usize>>,
    pub status: String,
}

impl Report {
    fn empty(command: &str, dataset: &str) -> Report {
        Report {
            cells: None,
            chain_ranks: None,
            command: command.to_string(),
            dataset: dataset.to_string(),
            diagnostics: Vec::new(),
            differential_divisors: None,
            euler_characteristic: None,
            expected_h0: None,
            homology: None,
            k_theory: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization cannot fail");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "dataset: {}", self.dataset);
        if let Some(cells) = &self.cells {
            let _ = writeln!(out, "cells: {}", cells.len());
            for c in cells {
                let _ = writeln!(
                    out,
                    "  {}  dim {}  stabilizer order {}  classes {}  degrees {:?}",
                    c.id, c.dim, c.stabilizer_order, c.class_count, c.degrees
                );
            }
        }
        if let Some(ranks) = &self.chain_ranks {
            let _ = writeln!(out, "chain ranks: {ranks:?}");
        }
        if let Some(divs) = &self.differential_divisors {
            for d in divs {
                let _ = writeln!(
                    out,
                    "psi{} divisors: [{}]",
                    d.degree,
                    d.divisors.join(", ")
                );
            }
        }
        if let Some(homology) = &self.homology {
            for (d, h) in homology.iter().enumerate() {
                let _ = writeln!(out, "H{d} = {h}");
            }
        }
        if let Some(chi) = self.euler_characteristic {
            let _ = writeln!(out, "euler characteristic: {chi}");
        }
        if let Some(exp) = &self.expected_h0 {
            let verdict = if exp.matches { "ok" } else { "MISMATCH" };
            let _ = writeln!(
                out,
                "expected H0 rank {}: {} (actual {})",
                exp.expected, verdict, exp.actual_rank
            );
        }
        if let Some(k) = &self.k_theory {
            if let Some(k0) = &k.k0 {
                let _ = writeln!(out, "K0 = {k0}");
            }
            if let Some(k1) = &k.k1 {
                let _ = writeln!(out, "K1 = {k1}");
            }
            let _ = writeln!(out, "k-theory status: {}", k.status);
        }
        for d in &self.diagnostics {
            let _ = writeln!(out, "{d}");
        }
        out
    }
}

fn cell_reports(v: &ValidationReport) -> Vec<CellReport> {
    v.cells
        .iter()
        .map(|c| CellReport {
            class_count: c.class_count,
            degrees: c.irreducible_degrees.clone(),
            dim: c.dim,
            id: c.id.clone(),
            stabilizer_order: c.stabilizer_order,
        })
        .collect()
}

fn k_theory_report(k: &KTheoryResult) -> KTheoryReport {
    match k {
        KTheoryResult::Determined { k0, k1 } => KTheoryReport {
            k0: Some(k0.to_string()),
            k1: Some(k1.to_string()),
            nonzero_degrees: None,
            status: "determined".to_string(),
        },
        KTheoryResult::Indeterminate { nonzero_degrees } => {
            let names: Vec<String> = nonzero_degrees.iter().map(|d| format!("H{d}")).collect();
            KTheoryReport {
                k0: None,
                k1: None,
                nonzero_degrees: Some(nonzero_degrees.clone()),
                status: format!("indeterminate ({} nonzero)", names.join(", ")),
            }
        }
    }
}

fn homology_strings(groups: &[FgAbelianGroup]) -> Vec<String> {
    groups.iter().map(FgAbelianGroup::to_string).collect()
}

/// Graded homology of a dataset: assembled chain homology for a single
/// complex, Künneth of the factors for a product.
pub fn builtin_homology(source: &Builtin) -> Result<GradedHomology, BredonError> {
    match source {
        Builtin::Complex(x) => Ok(GradedHomology::new(crate::bredon::bredon_homology(x)?)),
        Builtin::Product(a, b) => {
            let ha = GradedHomology::new(crate::bredon::bredon_homology(a)?);
            let hb = GradedHomology::new(crate::bredon::bredon_homology(b)?);
            Ok(kunneth(&ha, &hb))
        }
    }
}

pub fn validate_report(source: &Builtin, label: &str) -> Result<Report, BredonError> {
    let mut report = Report::empty("validate", label);
    match source {
        Builtin::Complex(x) => {
            let v = crate::bredon::validate(x)?;
            report.cells = Some(cell_reports(&v));
            report.chain_ranks = Some(v.chain_ranks.clone());
            report.diagnostics.push(format!(
                "validation: ok ({} cells, {} boundary terms checked)",
                v.cells.len(),
                v.boundary_terms_checked
            ));
        }
        Builtin::Product(a, b) => {
            let va = crate::bredon::validate(a)?;
            let vb = crate::bredon::validate(b)?;
            let mut cells = cell_reports(&va);
            cells.extend(cell_reports(&vb));
            report.cells = Some(cells);
            report.diagnostics.push(format!(
                "validation: ok (product of {} and {}; {} cells total)",
                a.name,
                b.name,
                va.cells.len() + vb.cells.len()
            ));
        }
    }
    Ok(report)
}

pub fn homology_report(
    source: &Builtin,
    label: &str,
    expect_h0: Option<usize>,
) -> Result<Report, BredonError> {
    let mut report = Report::empty("homology", label);
    let graded = match source {
        Builtin::Complex(x) => {
            let complex = assemble(x)?;
            report.chain_ranks = Some(complex.ranks.clone());
            report.differential_divisors = Some(
                differential_divisors(&complex)
                    .into_iter()
                    .map(|(degree, divisors)| DivisorReport {
                        degree,
                        divisors: divisors.iter().map(|d| d.to_string()).collect(),
                    })
                    .collect(),
            );
            let homology = homology_of(&complex)?;
            report.homology = Some(homology_strings(&homology));
            report.euler_characteristic = Some(euler_characteristic(x)?);
            GradedHomology::new(homology)
        }
        Builtin::Product(..) => {
            let graded = builtin_homology(source)?;
            report.homology = Some(homology_strings(graded.groups()));
            graded
        }
    };
    if let Some(expected) = expect_h0 {
        let actual = graded.group(0).rank();
        report.expected_h0 = Some(ExpectedH0Report {
            actual_rank: actual,
            expected,
            matches: actual == expected,
        });
    }
    Ok(report)
}

pub fn k_homology_report(source: &Builtin, label: &str) -> Result<Report, BredonError> {
    let mut report = homology_report(source, label, None)?;
    report.command = "k-homology".to_string();
    let graded = builtin_homology(source)?;
    report.k_theory = Some(k_theory_report(&ahss_collapse(&graded)));
    Ok(report)
}

pub fn kunneth_report(
    a: &Builtin,
    label_a: &str,
    b: &Builtin,
    label_b: &str,
) -> Result<Report, BredonError> {
    let label = format!("{label_a} x {label_b}");
    let mut report = Report::empty("kunneth", &label);
    let combined = kunneth(&builtin_homology(a)?, &builtin_homology(b)?);
    report.homology = Some(homology_strings(combined.groups()));
    report.k_theory = Some(k_theory_report(&ahss_collapse(&combined)));
    Ok(report)
}

/// Matrix dump: for each degree d ≥ 1 the differential in the plain grid
/// format, first line "rows cols". Returns (file name, contents) pairs.
pub fn dump_matrices(x: &GCWComplex, prefix: &str) -> Result<Vec<(String, String)>, BredonError> {
    let complex = assemble(x)?;
    let mut out = Vec::new();
    for d in 1..=complex.top_dim {
        let m = complex.differential(d).expect("differential in range");
        let name = if prefix.is_empty() {
            format!("psi{d}.txt")
        } else {
            format!("{prefix}_psi{d}.txt")
        };
        let mut text = format!("{} {}\n", m.rows(), m.cols());
        text.push_str(&m.to_string());
        out.push((name, text));
    }
    Ok(out)
}
