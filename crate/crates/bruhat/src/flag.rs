//! Bruhat cell tables of flag-manifold quotients.
//!
//! The cells of the quotient of a Kac-Moody group by the parabolic
//! subgroup of a node subset J are indexed by the minimal coset
//! representatives modulo W_J, one cell per representative, in dimension
//! equal to its length. A finite-sheeted cover lifts each cell that many
//! times without changing dimensions.
//!
//! Comparisons report per-dimension count pairs and where two tables first
//! differ, and additionally check that the generators actually used by the
//! representatives span isomorphic subdiagrams on both sides; equal counts
//! over non-isomorphic supports would be a coincidence, not an agreement.

use std::collections::BTreeSet;

use petgraph::algo::is_isomorphic_matching;
use petgraph::graph::DiGraph;
use serde::Serialize;
use thiserror::Error;

use crate::gcm::{GcmError, GeneralizedCartanMatrix, NodeSubset};
use crate::weyl::{WeylError, WeylGroup};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FlagError {
    #[error(transparent)]
    Gcm(#[from] GcmError),
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error("tables truncate at different dimensions: {left} and {right}")]
    TruncationMismatch { left: usize, right: usize },
    #[error("tables have different sheet counts: {left} and {right}")]
    SheetsMismatch { left: u64, right: u64 },
    #[error("table already covers with {sheets} sheets; covers are taken of 1-sheet tables only")]
    AlreadyCovered { sheets: u64 },
    #[error("a cover must have at least one sheet")]
    ZeroSheets,
    #[error("cell count overflow while applying the cover")]
    CountOverflow,
}

/// Per-dimension cell counts of one quotient, dimensions 0..=max_dim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellTable {
    gcm: GeneralizedCartanMatrix,
    parabolic: NodeSubset,
    max_dim: usize,
    sheets: u64,
    counts: Vec<u64>,
    used_by_dim: Vec<BTreeSet<usize>>,
}

impl CellTable {
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn max_dim(&self) -> usize {
        self.max_dim
    }

    pub fn sheets(&self) -> u64 {
        self.sheets
    }

    pub fn parabolic(&self) -> &NodeSubset {
        &self.parabolic
    }

    pub fn gcm(&self) -> &GeneralizedCartanMatrix {
        &self.gcm
    }

    pub fn total_cells(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Generators appearing in the canonical words of representatives of
    /// dimension exactly `d`.
    pub fn used_at(&self, d: usize) -> &BTreeSet<usize> {
        &self.used_by_dim[d]
    }

    /// Generators appearing in any representative of dimension <= d.
    pub fn used_through(&self, d: usize) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for set in &self.used_by_dim[..=d] {
            out.extend(set.iter().copied());
        }
        out
    }

    /// One-line description of where the table came from.
    pub fn describe(&self) -> String {
        let parabolic = if self.parabolic.is_empty() {
            "{}".to_string()
        } else {
            format!("{{{}}}", self.parabolic.display_one_based())
        };
        format!(
            "rank {} / parabolic {parabolic}, dimensions 0..={}, sheets {}",
            self.gcm.rank(),
            self.max_dim,
            self.sheets
        )
    }
}

/// Computes the cell table of the quotient by the parabolic of `j`,
/// up to dimension `max_dim`. `budget` caps the enumeration size.
pub fn cell_table(
    gcm: &GeneralizedCartanMatrix,
    j: &NodeSubset,
    max_dim: usize,
    budget: usize,
) -> Result<CellTable, FlagError> {
    let group = WeylGroup::new(gcm);
    let levels = group.minimal_coset_reps(j, max_dim, budget)?;
    let counts = levels.sizes();
    let used_by_dim = levels
        .levels()
        .iter()
        .map(|level| {
            level
                .iter()
                .flat_map(|w| w.canonical_word().0.iter().copied())
                .collect()
        })
        .collect();
    Ok(CellTable {
        gcm: gcm.clone(),
        parabolic: j.clone(),
        max_dim,
        sheets: 1,
        counts,
        used_by_dim,
    })
}

/// Lifts the table through a cover with the given number of sheets: each
/// cell lifts to `sheets` cells of the same dimension.
pub fn cover_cell_table(table: &CellTable, sheets: u64) -> Result<CellTable, FlagError> {
    if sheets == 0 {
        return Err(FlagError::ZeroSheets);
    }
    if table.sheets != 1 {
        return Err(FlagError::AlreadyCovered { sheets: table.sheets });
    }
    let counts = table
        .counts
        .iter()
        .map(|&c| c.checked_mul(sheets).ok_or(FlagError::CountOverflow))
        .collect::<Result<Vec<u64>, _>>()?;
    Ok(CellTable {
        sheets,
        counts,
        ..table.clone()
    })
}

/// Where two tables stand relative to each other.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ComparisonVerdict {
    /// Counts agree in every dimension up to and including this one.
    MatchThrough(usize),
    /// Counts first differ in this dimension.
    DivergeAt(usize),
}

impl std::fmt::Display for ComparisonVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ComparisonVerdict::MatchThrough(d) => write!(f, "match through dimension {d}"),
            ComparisonVerdict::DivergeAt(d) => write!(f, "diverge at dimension {d}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComparisonResult {
    pub verdict: ComparisonVerdict,
    /// Count pairs (left, right) per dimension.
    pub rows: Vec<(u64, u64)>,
    /// Whether the generators used through the full depth span isomorphic
    /// subdiagrams.
    pub used_subdiagrams_isomorphic: bool,
    /// Largest dimension d such that counts agree in every dimension
    /// through d and the generators used through d span isomorphic
    /// subdiagrams.
    pub agreement_depth: usize,
}

fn induced_diagram(gcm: &GeneralizedCartanMatrix, nodes: &BTreeSet<usize>) -> DiGraph<(), i64> {
    let mut graph = DiGraph::new();
    let order: Vec<usize> = nodes.iter().copied().collect();
    let indices: Vec<_> = order.iter().map(|_| graph.add_node(())).collect();
    for (a, &i) in order.iter().enumerate() {
        for (b, &j) in order.iter().enumerate() {
            if i != j && gcm.entry(i, j) != 0 {
                graph.add_edge(indices[a], indices[b], gcm.entry(i, j));
            }
        }
    }
    graph
}

fn subdiagrams_isomorphic(left: &CellTable, right: &CellTable, depth: usize) -> bool {
    let lg = induced_diagram(&left.gcm, &left.used_through(depth));
    let rg = induced_diagram(&right.gcm, &right.used_through(depth));
    is_isomorphic_matching(&lg, &rg, |_, _| true, |a, b| a == b)
}

/// Compares two tables of equal truncation depth and sheet count.
pub fn compare_tables(left: &CellTable, right: &CellTable) -> Result<ComparisonResult, FlagError> {
    if left.max_dim != right.max_dim {
        return Err(FlagError::TruncationMismatch { left: left.max_dim, right: right.max_dim });
    }
    if left.sheets != right.sheets {
        return Err(FlagError::SheetsMismatch { left: left.sheets, right: right.sheets });
    }
    let d = left.max_dim;
    let rows: Vec<(u64, u64)> = left
        .counts
        .iter()
        .zip(right.counts.iter())
        .map(|(&a, &b)| (a, b))
        .collect();
    let verdict = match rows.iter().position(|&(a, b)| a != b) {
        Some(first) => ComparisonVerdict::DivergeAt(first),
        None => ComparisonVerdict::MatchThrough(d),
    };
    let mut agreement_depth = 0;
    for k in 0..=d {
        if rows[k].0 != rows[k].1 || !subdiagrams_isomorphic(left, right, k) {
            break;
        }
        agreement_depth = k;
    }
    Ok(ComparisonResult {
        verdict,
        rows,
        used_subdiagrams_isomorphic: subdiagrams_isomorphic(left, right, d),
        agreement_depth,
    })
}
