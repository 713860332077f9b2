//! Batch classification scans over multidegree ranges.
//!
//! A scan walks every normalized multidegree `(d_1 <= ... <= d_r)` with
//! `r <= max_r` and `2 <= d_j <= max_degree`, for every complex dimension
//! of the selected branch up to `max_n`, and emits one row per manifold.
//! Rows are generated in canonical order (by `n`, then `r`, then the
//! multidegree lexicographically) and evaluated in parallel; the output
//! order does not depend on the number of workers.

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::hamiltonian::{classify_dim_8k, dim_8k4_relation};
use crate::intersection::{CompleteIntersection, SmoothActionObstruction};
use crate::rational::Rational;

/// Which residue of the real dimension mod 8 the scan covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScanBranch {
    /// Real dimension `8k` (`n = 0 mod 4`): the positive-definiteness
    /// classification.
    Dim8k,
    /// Real dimension `8k + 4` (`n = 2 mod 4`): the signature relation
    /// `sigma = 2 - b_middle`.
    Dim8kPlus4,
}

impl ScanBranch {
    /// Parse the `--dim-mod8` value.
    pub fn from_dim_mod8(value: u8) -> Option<Self> {
        match value {
            0 => Some(ScanBranch::Dim8k),
            4 => Some(ScanBranch::Dim8kPlus4),
            _ => None,
        }
    }

    fn dimensions(self, max_n: u32) -> Vec<u32> {
        let start = match self {
            ScanBranch::Dim8k => 4,
            ScanBranch::Dim8kPlus4 => 2,
        };
        (start..=max_n).step_by(4).collect()
    }
}

/// Scan range: branch plus bounds on dimension, codimension and degree.
#[derive(Clone, Copy, Debug)]
pub struct ScanRequest {
    pub branch: ScanBranch,
    pub max_n: u32,
    pub max_r: u32,
    pub max_degree: u32,
}

/// One scanned manifold with all of its invariants and verdicts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub n: u32,
    pub degrees: Vec<u32>,
    pub chi: i64,
    pub middle_betti: u64,
    pub signature: i64,
    pub a_hat: Rational,
    pub fano: bool,
    pub spin: bool,
    pub smooth_obstruction: SmoothActionObstruction,
    pub hamiltonian_verdict: String,
}

/// Totals for the summary line. On the `8k + 4` branch, `consistent`
/// counts manifolds where the relation holds and `excluded` those where
/// it fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ScanSummary {
    pub total: usize,
    pub consistent: usize,
    pub excluded: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanResult {
    pub rows: Vec<ScanRow>,
    pub summary: ScanSummary,
}

/// Every normalized multidegree with at most `max_r` entries drawn from
/// `2..=max_degree`, in canonical order: by length, then lexicographically.
pub fn multidegrees(max_r: u32, max_degree: u32) -> Vec<Vec<u32>> {
    (0..=max_r as usize)
        .flat_map(|r| (2..=max_degree).combinations_with_replacement(r))
        .collect()
}

/// Run a scan. Rows are computed with rayon inside whatever thread pool is
/// current, so callers can cap parallelism by installing their own pool.
pub fn run_scan(request: &ScanRequest) -> ScanResult {
    let inputs: Vec<(u32, Vec<u32>)> = request
        .branch
        .dimensions(request.max_n)
        .into_iter()
        .cartesian_product(multidegrees(request.max_r, request.max_degree))
        .collect();
    let branch = request.branch;
    let rows: Vec<ScanRow> = inputs
        .into_par_iter()
        .map(|(n, degrees)| scan_row(n, degrees, branch))
        .collect();
    let consistent = rows
        .iter()
        .filter(|row| row_is_consistent(row, branch))
        .count();
    let summary = ScanSummary {
        total: rows.len(),
        consistent,
        excluded: rows.len() - consistent,
    };
    ScanResult { rows, summary }
}

fn row_is_consistent(row: &ScanRow, branch: ScanBranch) -> bool {
    match branch {
        ScanBranch::Dim8k => row.hamiltonian_verdict.starts_with("Consistent"),
        ScanBranch::Dim8kPlus4 => row.hamiltonian_verdict == "RelationHolds",
    }
}

fn scan_row(n: u32, degrees: Vec<u32>, branch: ScanBranch) -> ScanRow {
    let ci = CompleteIntersection::new(n, degrees)
        .expect("scan ranges only produce valid dimensions and degrees");
    row_for(&ci, branch)
}

/// Build the row for one manifold. Both scan branches have even `n`, so
/// the signature is always defined here.
fn row_for(ci: &CompleteIntersection, branch: ScanBranch) -> ScanRow {
    let profile = ci.betti_profile();
    let verdict = match branch {
        ScanBranch::Dim8k => classify_dim_8k(ci).label(),
        ScanBranch::Dim8kPlus4 => dim_8k4_relation(ci).label(),
    };
    ScanRow {
        n: ci.n(),
        degrees: ci.degrees().to_vec(),
        chi: ci.euler_characteristic(),
        middle_betti: profile.middle(),
        signature: ci.signature().expect("scan branches have even n"),
        a_hat: ci.a_hat_genus(),
        fano: ci.is_fano(),
        spin: ci.is_spin(),
        smooth_obstruction: ci.smooth_action_obstruction(),
        hamiltonian_verdict: verdict,
    }
}

/// Aligned plain-text table.
pub fn format_table(result: &ScanResult, branch: ScanBranch) -> String {
    let headers = [
        "n",
        "degrees",
        "chi",
        "b_mid",
        "sigma",
        "a_hat",
        "fano",
        "spin",
        "smooth_obstruction",
        "verdict",
    ];
    let rows: Vec<[String; 10]> = result
        .rows
        .iter()
        .map(|row| {
            [
                row.n.to_string(),
                format_degrees(&row.degrees),
                row.chi.to_string(),
                row.middle_betti.to_string(),
                row.signature.to_string(),
                row.a_hat.to_string(),
                row.fano.to_string(),
                row.spin.to_string(),
                row.smooth_obstruction.to_string(),
                row.hamiltonian_verdict.clone(),
            ]
        })
        .collect();
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row.iter()) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let render = |cells: &[String], widths: &[usize], out: &mut String| {
        let line: Vec<String> = cells
            .iter()
            .zip(widths)
            .map(|(cell, w)| format!("{:<width$}", cell, width = w))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    };
    render(&headers.map(String::from), &widths, &mut out);
    for row in &rows {
        render(row, &widths, &mut out);
    }
    out.push_str(&summary_line(result, branch));
    out.push('\n');
    out
}

/// Comma-separated values; the degrees column is space-separated so no
/// quoting is ever needed.
pub fn format_csv(result: &ScanResult) -> String {
    let mut out = String::from(
        "n,degrees,chi,middle_betti,signature,a_hat,fano,spin,smooth_obstruction,hamiltonian_verdict\n",
    );
    for row in &result.rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{}\n",
            row.n,
            format_degrees(&row.degrees),
            row.chi,
            row.middle_betti,
            row.signature,
            row.a_hat,
            row.fano,
            row.spin,
            row.smooth_obstruction,
            row.hamiltonian_verdict,
        ));
    }
    out
}

pub fn summary_line(result: &ScanResult, branch: ScanBranch) -> String {
    match branch {
        ScanBranch::Dim8k => format!(
            "summary: {} rows, {} consistent, {} excluded",
            result.summary.total, result.summary.consistent, result.summary.excluded
        ),
        ScanBranch::Dim8kPlus4 => format!(
            "summary: {} rows, {} relation-holds, {} relation-fails",
            result.summary.total, result.summary.consistent, result.summary.excluded
        ),
    }
}

fn format_degrees(degrees: &[u32]) -> String {
    if degrees.is_empty() {
        "-".to_string()
    } else {
        degrees.iter().map(u32::to_string).join(" ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multidegree_generation_is_canonical() {
        let degs = multidegrees(2, 3);
        assert_eq!(
            degs,
            vec![vec![], vec![2], vec![3], vec![2, 2], vec![2, 3], vec![3, 3],]
        );
    }

    #[test]
    fn multidegree_count_matches_multiset_formula() {
        // multisets of size r from 8 values, summed over r = 0..=5
        let count = multidegrees(5, 9).len();
        assert_eq!(count, 1 + 8 + 36 + 120 + 330 + 792);
    }

    #[test]
    fn small_dim8k_scan_finds_projective_space() {
        let result = run_scan(&ScanRequest {
            branch: ScanBranch::Dim8k,
            max_n: 4,
            max_r: 0,
            max_degree: 2,
        });
        assert_eq!(result.rows.len(), 1);
        let row = &result.rows[0];
        assert_eq!(row.n, 4);
        assert_eq!(row.hamiltonian_verdict, "Consistent(ProjectiveSpace)");
        assert_eq!(result.summary.consistent, 1);
    }

    #[test]
    fn surface_scan_matches_expected_verdicts() {
        let result = run_scan(&ScanRequest {
            branch: ScanBranch::Dim8kPlus4,
            max_n: 2,
            max_r: 1,
            max_degree: 4,
        });
        let verdicts: Vec<(String, String)> = result
            .rows
            .iter()
            .map(|row| {
                (
                    format_degrees(&row.degrees),
                    row.hamiltonian_verdict.clone(),
                )
            })
            .collect();
        assert_eq!(
            verdicts,
            vec![
                ("-".to_string(), "RelationHolds".to_string()),
                ("2".to_string(), "RelationHolds".to_string()),
                ("3".to_string(), "RelationHolds".to_string()),
                ("4".to_string(), "RelationFails".to_string()),
            ]
        );
        assert_eq!(result.summary.consistent, 3);
        assert_eq!(result.summary.excluded, 1);
    }

    #[test]
    fn rows_are_sorted_by_dimension_codimension_degrees() {
        let result = run_scan(&ScanRequest {
            branch: ScanBranch::Dim8kPlus4,
            max_n: 6,
            max_r: 2,
            max_degree: 3,
        });
        let keys: Vec<(u32, usize, Vec<u32>)> = result
            .rows
            .iter()
            .map(|row| (row.n, row.degrees.len(), row.degrees.clone()))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn table_and_csv_render_every_row() {
        let result = run_scan(&ScanRequest {
            branch: ScanBranch::Dim8k,
            max_n: 4,
            max_r: 1,
            max_degree: 3,
        });
        let table = format_table(&result, ScanBranch::Dim8k);
        assert_eq!(table.lines().count(), result.rows.len() + 2);
        assert!(table.contains("Consistent(Quadric)"));
        assert!(table.ends_with("excluded\n"));

        let csv = format_csv(&result);
        assert_eq!(csv.lines().count(), result.rows.len() + 1);
        assert!(csv.starts_with("n,degrees,chi"));
    }
}
