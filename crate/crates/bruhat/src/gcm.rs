//! Generalized Cartan matrices, the simply-laced A/D/E families, and node
//! subsets of their Dynkin diagrams.
//!
//! A generalized Cartan matrix is a square integer matrix with 2 on the
//! diagonal, nonpositive entries off it, and a symmetric zero pattern.
//! Validation reports every violation at once rather than stopping at the
//! first, so malformed input files produce a complete diagnostic.
//!
//! Node indices are 0-based everywhere in this crate; the 1-based forms
//! appear only at the text interfaces (`NodeSubset::parse_one_based`,
//! display labels, CLI output).

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::matrix::IntMatrix;

/// One structural violation found while validating a candidate matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GcmViolation {
    /// Diagonal entry differs from 2.
    Diagonal { index: usize, value: i64 },
    /// Positive entry off the diagonal.
    PositiveOffDiagonal { row: usize, col: usize, value: i64 },
    /// Entry is zero while its transpose partner is not.
    AsymmetricZeroPattern { row: usize, col: usize },
}

impl fmt::Display for GcmViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GcmViolation::Diagonal { index, value } => {
                write!(f, "diagonal entry ({index},{index}) is {value}, expected 2")
            }
            GcmViolation::PositiveOffDiagonal { row, col, value } => {
                write!(f, "off-diagonal entry ({row},{col}) is {value}, expected <= 0")
            }
            GcmViolation::AsymmetricZeroPattern { row, col } => {
                write!(
                    f,
                    "entry ({row},{col}) is zero but ({col},{row}) is not; zero pattern must be symmetric"
                )
            }
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GcmError {
    #[error("matrix is not square: row {row} has {got} entries, expected {expected}")]
    NotSquare { row: usize, got: usize, expected: usize },
    #[error("not a generalized Cartan matrix: {}", format_violations(.0))]
    Invalid(Vec<GcmViolation>),
    #[error("{family} diagrams require rank >= {min}, got {rank}")]
    RankOutOfRange { family: DynkinFamily, rank: usize, min: usize },
    #[error("node index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("finite-type test requires a symmetric matrix")]
    NotSymmetric,
    #[error("cannot parse {text:?} as a Dynkin name (expected a family letter A, D, or E followed by a rank)")]
    BadName { text: String },
    #[error("cannot parse node subset {text:?}: {reason}")]
    BadSubset { text: String, reason: String },
    #[error("cannot parse matrix text: {reason} (line {line})")]
    BadText { line: usize, reason: String },
    #[error("integer overflow during exact arithmetic")]
    Overflow,
}

fn format_violations(violations: &[GcmViolation]) -> String {
    violations
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

/// Simply-laced Dynkin family letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DynkinFamily {
    A,
    D,
    E,
}

impl fmt::Display for DynkinFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinFamily::A => write!(f, "A"),
            DynkinFamily::D => write!(f, "D"),
            DynkinFamily::E => write!(f, "E"),
        }
    }
}

/// A named diagram such as `A3`, `D4`, or `E10`.
///
/// Ranks are unbounded above; `E9` and beyond name the infinite-type
/// extensions of `E8` obtained by growing the long arm one node at a time.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DynkinName {
    family: DynkinFamily,
    rank: usize,
}

impl DynkinName {
    pub fn new(family: DynkinFamily, rank: usize) -> Result<Self, GcmError> {
        let min = match family {
            DynkinFamily::A => 1,
            DynkinFamily::D => 4,
            DynkinFamily::E => 6,
        };
        if rank < min {
            return Err(GcmError::RankOutOfRange { family, rank, min });
        }
        Ok(DynkinName { family, rank })
    }

    pub fn family(&self) -> DynkinFamily {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Edges of the diagram as 0-based index pairs.
    ///
    /// A_n is the path 1-2-..-n. D_n is the path 1-..-(n-1) with node n
    /// attached to node n-2. E_n carries the exceptional pattern on nodes
    /// 1..8 (node 2 is the short branch) and extends the long arm with
    /// node m attached to node m-1 for every m >= 9.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.rank;
        match self.family {
            DynkinFamily::A => (1..n).map(|i| (i - 1, i)).collect(),
            DynkinFamily::D => {
                let mut edges: Vec<(usize, usize)> = (1..n - 1).map(|i| (i - 1, i)).collect();
                edges.push((n - 3, n - 1));
                edges
            }
            DynkinFamily::E => {
                let mut edges = vec![(0, 2), (1, 3), (2, 3)];
                for m in 5..=n {
                    edges.push((m - 2, m - 1));
                }
                edges
            }
        }
    }

    /// The Cartan matrix of this diagram, with default 1-based labels.
    pub fn cartan_matrix(&self) -> GeneralizedCartanMatrix {
        let n = self.rank;
        let mut entries = vec![0i64; n * n];
        for i in 0..n {
            entries[i * n + i] = 2;
        }
        for (i, j) in self.edges() {
            entries[i * n + j] = -1;
            entries[j * n + i] = -1;
        }
        GeneralizedCartanMatrix {
            n,
            entries,
            labels: default_labels(n),
        }
    }
}

impl FromStr for DynkinName {
    type Err = GcmError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let bad = || GcmError::BadName { text: s.to_string() };
        let mut chars = t.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => DynkinFamily::A,
            Some('D') => DynkinFamily::D,
            Some('E') => DynkinFamily::E,
            _ => return Err(bad()),
        };
        let rest = chars.as_str();
        if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let rank: usize = rest.parse().map_err(|_| bad())?;
        DynkinName::new(family, rank)
    }
}

impl fmt::Display for DynkinName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

/// A set of node indices (0-based) of a diagram.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NodeSubset(BTreeSet<usize>);

impl NodeSubset {
    pub fn new<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        NodeSubset(indices.into_iter().collect())
    }

    pub fn empty() -> Self {
        NodeSubset(BTreeSet::new())
    }

    pub fn full(rank: usize) -> Self {
        NodeSubset((0..rank).collect())
    }

    /// All nodes except the highest-numbered one. This is the default
    /// parabolic at the command line, where dropping the tail node of a
    /// diagram is the common case.
    pub fn drop_last(rank: usize) -> Self {
        if rank == 0 {
            NodeSubset::empty()
        } else {
            NodeSubset((0..rank - 1).collect())
        }
    }

    /// Parses a 1-based subset expression such as `1-8,10` or `2,4`.
    /// The empty string denotes the empty subset.
    pub fn parse_one_based(text: &str, rank: usize) -> Result<Self, GcmError> {
        let bad = |reason: &str| GcmError::BadSubset {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let mut set = BTreeSet::new();
        let t = text.trim();
        if t.is_empty() {
            return Ok(NodeSubset(set));
        }
        for piece in t.split(',') {
            let piece = piece.trim();
            let (lo, hi) = match piece.split_once('-') {
                None => {
                    let v: usize = piece.parse().map_err(|_| bad("expected an integer"))?;
                    (v, v)
                }
                Some((a, b)) => {
                    let lo: usize = a.trim().parse().map_err(|_| bad("expected an integer"))?;
                    let hi: usize = b.trim().parse().map_err(|_| bad("expected an integer"))?;
                    (lo, hi)
                }
            };
            if lo == 0 {
                return Err(bad("node numbers are 1-based"));
            }
            if lo > hi {
                return Err(bad("range bounds are reversed"));
            }
            for v in lo..=hi {
                if v > rank {
                    return Err(GcmError::IndexOutOfRange { index: v, rank });
                }
                set.insert(v - 1);
            }
        }
        Ok(NodeSubset(set))
    }

    pub fn contains(&self, index: usize) -> bool {
        self.0.contains(&index)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn check_rank(&self, rank: usize) -> Result<(), GcmError> {
        match self.0.iter().rev().next() {
            Some(&max) if max >= rank => Err(GcmError::IndexOutOfRange { index: max, rank }),
            _ => Ok(()),
        }
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.0.iter().map(|&i| i + 1).collect()
    }

    /// Renders the subset 1-based with ranges compressed, e.g. `1-8,10`.
    pub fn display_one_based(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        let mut iter = self.0.iter().map(|&i| i + 1).peekable();
        while let Some(start) = iter.next() {
            let mut end = start;
            while iter.peek() == Some(&(end + 1)) {
                end = iter.next().unwrap();
            }
            if end == start {
                parts.push(start.to_string());
            } else {
                parts.push(format!("{start}-{end}"));
            }
        }
        parts.join(",")
    }
}

/// A validated generalized Cartan matrix with per-node labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralizedCartanMatrix {
    n: usize,
    entries: Vec<i64>,
    labels: Vec<String>,
}

impl GeneralizedCartanMatrix {
    /// Validates `rows` as a generalized Cartan matrix. All violations are
    /// collected and reported together.
    pub fn validate(rows: &[Vec<i64>]) -> Result<Self, GcmError> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GcmError::NotSquare { row: i, got: row.len(), expected: n });
            }
        }
        let mut violations = Vec::new();
        for i in 0..n {
            if rows[i][i] != 2 {
                violations.push(GcmViolation::Diagonal { index: i, value: rows[i][i] });
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                if rows[i][j] > 0 {
                    violations.push(GcmViolation::PositiveOffDiagonal {
                        row: i,
                        col: j,
                        value: rows[i][j],
                    });
                }
                if rows[i][j] == 0 && rows[j][i] != 0 {
                    violations.push(GcmViolation::AsymmetricZeroPattern { row: i, col: j });
                }
            }
        }
        if !violations.is_empty() {
            return Err(GcmError::Invalid(violations));
        }
        Ok(GeneralizedCartanMatrix {
            n,
            entries: rows.iter().flatten().copied().collect(),
            labels: default_labels(n),
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GcmError> {
        if labels.len() != self.n {
            return Err(GcmError::NotSquare { row: 0, got: labels.len(), expected: self.n });
        }
        self.labels = labels;
        Ok(self)
    }

    /// Builds the Cartan matrix of a named diagram, e.g. `"E10"`.
    /// Names are case-insensitive.
    pub fn from_named_str(name: &str) -> Result<Self, GcmError> {
        Ok(DynkinName::from_str(name)?.cartan_matrix())
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|i| self.entries[i * self.n..(i + 1) * self.n].to_vec())
            .collect()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.entry(i, j) == self.entry(j, i)))
    }

    /// Symmetric with all off-diagonal entries in {0, -1}.
    pub fn is_simply_laced(&self) -> bool {
        if !self.is_symmetric() {
            return false;
        }
        (0..self.n).all(|i| {
            (0..self.n).all(|j| i == j || matches!(self.entry(i, j), 0 | -1))
        })
    }

    /// Positive definiteness via leading principal minors, exact over i128.
    /// Only defined for symmetric matrices.
    pub fn is_finite_type(&self) -> Result<bool, GcmError> {
        if !self.is_symmetric() {
            return Err(GcmError::NotSymmetric);
        }
        for k in 1..=self.n {
            if self.leading_minor(k)? <= 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn leading_minor(&self, k: usize) -> Result<i64, GcmError> {
        let mut sub = Vec::with_capacity(k * k);
        for i in 0..k {
            for j in 0..k {
                sub.push(self.entry(i, j));
            }
        }
        IntMatrix::from_entries(k, sub)
            .determinant()
            .map_err(|_| GcmError::Overflow)
    }

    pub fn determinant(&self) -> Result<i64, GcmError> {
        self.leading_minor(self.n)
    }

    /// The induced submatrix on `subset`, preserving labels and relative
    /// node order.
    pub fn subdiagram(&self, subset: &NodeSubset) -> Result<Self, GcmError> {
        subset.check_rank(self.n)?;
        let indices: Vec<usize> = subset.iter().collect();
        let k = indices.len();
        let mut entries = Vec::with_capacity(k * k);
        for &i in &indices {
            for &j in &indices {
                entries.push(self.entry(i, j));
            }
        }
        Ok(GeneralizedCartanMatrix {
            n: k,
            entries,
            labels: indices.iter().map(|&i| self.labels[i].clone()).collect(),
        })
    }

    /// Nodes adjacent to `i` in the diagram (nonzero off-diagonal entries).
    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        (0..self.n)
            .filter(|&j| j != i && self.entry(i, j) != 0)
            .collect()
    }

    /// Serializes to the plain text format: rank line, then one row per
    /// line, then an optional `labels:` line when labels are not 1..n.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.entry(i, j).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        if self.labels != default_labels(self.n) {
            out.push_str(&format!("labels: {}\n", self.labels.join(" ")));
        }
        out
    }

    /// Parses the text format accepted by `to_text`. Blank lines and lines
    /// starting with `#` are ignored.
    pub fn parse_text(text: &str) -> Result<Self, GcmError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (first_no, first) = lines.next().ok_or(GcmError::BadText {
            line: 1,
            reason: "empty input".to_string(),
        })?;
        let n: usize = first.parse().map_err(|_| GcmError::BadText {
            line: first_no,
            reason: format!("expected the rank, got {first:?}"),
        })?;
        let mut rows = Vec::with_capacity(n);
        for _ in 0..n {
            let (line_no, line) = lines.next().ok_or(GcmError::BadText {
                line: first_no,
                reason: format!("expected {n} matrix rows"),
            })?;
            let row: Result<Vec<i64>, _> = line.split_whitespace().map(str::parse).collect();
            let row = row.map_err(|_| GcmError::BadText {
                line: line_no,
                reason: "expected whitespace-separated integers".to_string(),
            })?;
            rows.push(row);
        }
        let mut labels = None;
        if let Some((line_no, line)) = lines.next() {
            match line.strip_prefix("labels:") {
                Some(rest) => {
                    let ls: Vec<String> = rest.split_whitespace().map(String::from).collect();
                    if ls.len() != n {
                        return Err(GcmError::BadText {
                            line: line_no,
                            reason: format!("expected {n} labels, got {}", ls.len()),
                        });
                    }
                    labels = Some(ls);
                }
                None => {
                    return Err(GcmError::BadText {
                        line: line_no,
                        reason: format!("unexpected trailing line {line:?}"),
                    })
                }
            }
        }
        if let Some((line_no, line)) = lines.next() {
            return Err(GcmError::BadText {
                line: line_no,
                reason: format!("unexpected trailing line {line:?}"),
            });
        }
        let gcm = GeneralizedCartanMatrix::validate(&rows)?;
        match labels {
            Some(ls) => gcm.with_labels(ls),
            None => Ok(gcm),
        }
    }
}

impl fmt::Display for GeneralizedCartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}
