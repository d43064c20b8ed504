//! Command execution and rendering behind the `bruhat` binary.
//!
//! The binary parses arguments into a [`CommandRequest`]; everything after
//! that lives here so tests can drive commands in process. Reports render
//! to three formats. The JSON form is byte-deterministic for a fixed
//! command line: field order is fixed by the types, maps are avoided, and
//! nothing time- or environment-dependent is written to stdout.

use std::fmt;

use serde::Serialize;

use crate::flag::{self, CellTable, ComparisonVerdict, FlagError};
use crate::gcm::{DynkinName, GcmError, GeneralizedCartanMatrix, NodeSubset};
use crate::homotopy::{
    self, AbelianGroupDescriptor, EnStepEvidence, HomotopyError, TraceEntry, EN_DEGREE_CAP,
};
use crate::weyl::{WeylError, WeylGroup};

/// Bumped when the shape of the JSON report changes.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Table,
    Json,
    Csv,
}

/// What to run, with inputs still in surface syntax. Diagram fields hold
/// either a family name like `E8` or a path to a matrix file; subset
/// fields hold 1-based node lists like `1-8,10`.
#[derive(Debug, Clone)]
pub enum CommandKind {
    Growth {
        diagram: String,
        max_len: usize,
    },
    Cosets {
        diagram: String,
        sub: Option<String>,
        max_len: usize,
        words: bool,
    },
    Cells {
        diagram: String,
        sub: Option<String>,
        max_dim: usize,
        sheets: u64,
    },
    Compare {
        left: String,
        right: String,
        subs: Option<(String, String)>,
        max_dim: usize,
    },
    HomotopyEn {
        n: usize,
        max_k: usize,
    },
    Tower {
        space: String,
        max_k: usize,
    },
    Bott {
        max_k: usize,
    },
}

impl CommandKind {
    pub fn name(&self) -> &'static str {
        match self {
            CommandKind::Growth { .. } => "growth",
            CommandKind::Cosets { .. } => "cosets",
            CommandKind::Cells { .. } => "cells",
            CommandKind::Compare { .. } => "compare",
            CommandKind::HomotopyEn { .. } => "homotopy-en",
            CommandKind::Tower { .. } => "tower",
            CommandKind::Bott { .. } => "bott",
        }
    }
}

#[derive(Debug, Clone)]
pub struct CommandRequest {
    pub kind: CommandKind,
    pub format: OutputFormat,
    pub budget: usize,
    /// User-level arguments (no program name), recorded in the report.
    pub argv: Vec<String>,
}

/// Errors split by exit code: bad invocations exit 2, failures of the
/// requested computation exit 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Usage(String),
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Domain(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<GcmError> for CliError {
    fn from(e: GcmError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<WeylError> for CliError {
    fn from(e: WeylError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<FlagError> for CliError {
    fn from(e: FlagError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<HomotopyError> for CliError {
    fn from(e: HomotopyError) -> Self {
        CliError::Domain(e.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub tool: &'static str,
    pub version: &'static str,
    pub args: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrowthPayload {
    pub diagram: String,
    pub rank: usize,
    pub max_len: usize,
    pub sizes: Vec<u64>,
    pub total: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CosetsPayload {
    pub diagram: String,
    pub rank: usize,
    /// 1-based nodes of the parabolic subgroup.
    pub parabolic: Vec<usize>,
    pub max_len: usize,
    pub sizes: Vec<u64>,
    pub total: u64,
    /// Canonical reduced words per length, 1-based, identity rendered as
    /// `e`. Present when requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub words: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CellsPayload {
    pub diagram: String,
    pub rank: usize,
    pub parabolic: Vec<usize>,
    pub max_dim: usize,
    pub sheets: u64,
    pub counts: Vec<u64>,
    pub total: u64,
    /// 1-based generators used by representatives of each dimension.
    pub used: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableSummary {
    pub diagram: String,
    pub rank: usize,
    pub parabolic: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompareRow {
    pub dim: usize,
    pub left: u64,
    pub right: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComparePayload {
    pub left: TableSummary,
    pub right: TableSummary,
    pub max_dim: usize,
    pub verdict: ComparisonVerdict,
    pub rows: Vec<CompareRow>,
    pub used_subdiagrams_isomorphic: bool,
    pub agreement_depth: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeEntry {
    pub degree: usize,
    #[serde(flatten)]
    pub group: AbelianGroupDescriptor,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomotopyEnPayload {
    pub space: String,
    pub n: usize,
    pub max_k: usize,
    pub groups: Vec<DegreeEntry>,
    pub evidence: Vec<EnStepEvidence>,
    pub deductions: Vec<TraceEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TowerStagePayload {
    pub stage: String,
    pub killed_degree: usize,
    pub killed_group: AbelianGroupDescriptor,
    pub space: String,
    pub groups: Vec<DegreeEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TowerPayload {
    pub space: String,
    pub max_k: usize,
    pub start: Vec<DegreeEntry>,
    pub stages: Vec<TowerStagePayload>,
    pub final_space: String,
    /// Reminder that the tower only sees the tracked degrees.
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BottPayload {
    pub max_k: usize,
    pub groups: Vec<DegreeEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Payload {
    Growth(GrowthPayload),
    Cosets(CosetsPayload),
    Cells(CellsPayload),
    Compare(ComparePayload),
    HomotopyEn(HomotopyEnPayload),
    Tower(TowerPayload),
    Bott(BottPayload),
}

/// A finished command, ready to render in any format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub provenance: Provenance,
    pub payload: Payload,
    /// Rendered deduction lines, present for homotopy commands.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<String>>,
}

/// Accepts a family name like `E8` or a path to a matrix file.
fn resolve_diagram(text: &str) -> Result<(GeneralizedCartanMatrix, String), CliError> {
    if let Ok(name) = text.parse::<DynkinName>() {
        return Ok((name.cartan_matrix(), name.to_string()));
    }
    let content = std::fs::read_to_string(text).map_err(|e| {
        CliError::Domain(format!(
            "{text:?} is not a diagram name (A<n>, D<n>, E<n>) and reading it as a file \
             failed: {e}"
        ))
    })?;
    let gcm = GeneralizedCartanMatrix::parse_text(&content)?;
    Ok((gcm, text.to_string()))
}

fn resolve_parabolic(sub: &Option<String>, rank: usize) -> Result<NodeSubset, CliError> {
    match sub {
        None => Ok(NodeSubset::drop_last(rank)),
        Some(s) => NodeSubset::parse_one_based(s, rank)
            .map_err(|e| CliError::Usage(e.to_string())),
    }
}

fn entries(groups: &[AbelianGroupDescriptor]) -> Vec<DegreeEntry> {
    groups
        .iter()
        .enumerate()
        .map(|(degree, group)| DegreeEntry { degree, group: group.clone() })
        .collect()
}

fn used_one_based(table: &CellTable) -> Vec<Vec<usize>> {
    (0..=table.max_dim())
        .map(|d| table.used_at(d).iter().map(|&i| i + 1).collect())
        .collect()
}

fn tower_profile(
    space: &str,
    max_k: usize,
    budget: usize,
) -> Result<homotopy::HomotopyProfile, CliError> {
    let s = space.trim();
    let inner = |prefix: &str| {
        s.strip_prefix(prefix)
            .and_then(|rest| rest.strip_suffix(')'))
            .and_then(|digits| digits.parse::<usize>().ok())
    };
    if let Some(n) = inner("K(E") {
        if n < 8 {
            return Err(CliError::Usage(format!(
                "K(E{n}) is below the rank-8 base of the E-series pipeline"
            )));
        }
        if max_k > EN_DEGREE_CAP {
            return Err(CliError::Usage(format!(
                "profiles of {s} stop at degree {EN_DEGREE_CAP}; requested {max_k}"
            )));
        }
        return Ok(homotopy::en_profile(n, max_k, budget)?.profile);
    }
    if let Some(n) = inner("O(") {
        return Ok(homotopy::o_profile(n, max_k)?);
    }
    if let Some(n) = inner("SO(") {
        let p = homotopy::o_profile(n, max_k)?
            .with_group(0, AbelianGroupDescriptor::trivial())
            .renamed(&format!("SO({n})"));
        return Ok(p);
    }
    Err(CliError::Usage(format!(
        "unrecognized space {space:?}; expected O(n), SO(n), or K(En)"
    )))
}

/// Executes one request. Rendering is separate; see [`render`].
pub fn run(req: &CommandRequest) -> Result<Report, CliError> {
    let (payload, trace) = match &req.kind {
        CommandKind::Growth { diagram, max_len } => {
            let (gcm, label) = resolve_diagram(diagram)?;
            let sizes = WeylGroup::new(&gcm).growth_series(*max_len, req.budget)?;
            let total = sizes.iter().sum();
            (
                Payload::Growth(GrowthPayload {
                    diagram: label,
                    rank: gcm.rank(),
                    max_len: *max_len,
                    sizes,
                    total,
                }),
                None,
            )
        }
        CommandKind::Cosets { diagram, sub, max_len, words } => {
            let (gcm, label) = resolve_diagram(diagram)?;
            let parabolic = resolve_parabolic(sub, gcm.rank())?;
            let levels = WeylGroup::new(&gcm).minimal_coset_reps(&parabolic, *max_len, req.budget)?;
            let sizes = levels.sizes();
            let total = levels.total();
            let words = words.then(|| {
                levels
                    .levels()
                    .iter()
                    .map(|level| {
                        level
                            .iter()
                            .map(|w| {
                                let (word, _) = w.canonical_word();
                                if word.is_empty() {
                                    "e".to_string()
                                } else {
                                    word.iter()
                                        .map(|i| (i + 1).to_string())
                                        .collect::<Vec<_>>()
                                        .join(" ")
                                }
                            })
                            .collect()
                    })
                    .collect()
            });
            (
                Payload::Cosets(CosetsPayload {
                    diagram: label,
                    rank: gcm.rank(),
                    parabolic: parabolic.to_one_based(),
                    max_len: *max_len,
                    sizes,
                    total,
                    words,
                }),
                None,
            )
        }
        CommandKind::Cells { diagram, sub, max_dim, sheets } => {
            let (gcm, label) = resolve_diagram(diagram)?;
            let parabolic = resolve_parabolic(sub, gcm.rank())?;
            let mut table = flag::cell_table(&gcm, &parabolic, *max_dim, req.budget)?;
            if *sheets == 0 {
                return Err(CliError::Usage("a cover needs at least one sheet".to_string()));
            }
            if *sheets > 1 {
                table = flag::cover_cell_table(&table, *sheets)?;
            }
            let counts = table.counts().to_vec();
            let total = table.total_cells();
            (
                Payload::Cells(CellsPayload {
                    diagram: label,
                    rank: gcm.rank(),
                    parabolic: parabolic.to_one_based(),
                    max_dim: *max_dim,
                    sheets: *sheets,
                    counts,
                    total,
                    used: used_one_based(&table),
                }),
                None,
            )
        }
        CommandKind::Compare { left, right, subs, max_dim } => {
            let (lg, llabel) = resolve_diagram(left)?;
            let (rg, rlabel) = resolve_diagram(right)?;
            let (lsub, rsub) = match subs {
                None => (None, None),
                Some((a, b)) => (Some(a.clone()), Some(b.clone())),
            };
            let lpar = resolve_parabolic(&lsub, lg.rank())?;
            let rpar = resolve_parabolic(&rsub, rg.rank())?;
            let lt = flag::cell_table(&lg, &lpar, *max_dim, req.budget)?;
            let rt = flag::cell_table(&rg, &rpar, *max_dim, req.budget)?;
            let cmp = flag::compare_tables(&lt, &rt)?;
            let rows = cmp
                .rows
                .iter()
                .enumerate()
                .map(|(dim, &(left, right))| CompareRow { dim, left, right })
                .collect();
            (
                Payload::Compare(ComparePayload {
                    left: TableSummary {
                        diagram: llabel,
                        rank: lg.rank(),
                        parabolic: lpar.to_one_based(),
                    },
                    right: TableSummary {
                        diagram: rlabel,
                        rank: rg.rank(),
                        parabolic: rpar.to_one_based(),
                    },
                    max_dim: *max_dim,
                    verdict: cmp.verdict,
                    rows,
                    used_subdiagrams_isomorphic: cmp.used_subdiagrams_isomorphic,
                    agreement_depth: cmp.agreement_depth,
                }),
                None,
            )
        }
        CommandKind::HomotopyEn { n, max_k } => {
            if *n < 8 {
                return Err(CliError::Usage(format!(
                    "the E-series pipeline starts at rank 8; got {n}"
                )));
            }
            if *max_k > EN_DEGREE_CAP {
                return Err(CliError::Usage(format!(
                    "the E-series pipeline tracks degrees 0..={EN_DEGREE_CAP}; requested {max_k}"
                )));
            }
            let deduction = homotopy::en_profile(*n, *max_k, req.budget)?;
            let trace_lines = deduction.trace.iter().map(TraceEntry::render).collect();
            (
                Payload::HomotopyEn(HomotopyEnPayload {
                    space: deduction.profile.space().to_string(),
                    n: *n,
                    max_k: *max_k,
                    groups: entries(deduction.profile.groups()),
                    evidence: deduction.evidence,
                    deductions: deduction.trace,
                }),
                Some(trace_lines),
            )
        }
        CommandKind::Tower { space, max_k } => {
            let profile = tower_profile(space, *max_k, req.budget)?;
            let tower = homotopy::whitehead_tower(&profile)?;
            let stages = tower
                .stages
                .iter()
                .map(|s| TowerStagePayload {
                    stage: s.name.clone(),
                    killed_degree: s.killed_degree,
                    killed_group: s.killed_group.clone(),
                    space: s.space.clone(),
                    groups: entries(s.profile.groups()),
                })
                .collect();
            let trace_lines = tower
                .stages
                .iter()
                .enumerate()
                .map(|(i, s)| {
                    let from = if i == 0 {
                        profile.space()
                    } else {
                        tower.stages[i - 1].space.as_str()
                    };
                    format!(
                        "STAGE {}: kill pi_{} = {} OF {} GIVING {}",
                        s.name, s.killed_degree, s.killed_group, from, s.space
                    )
                })
                .collect();
            (
                Payload::Tower(TowerPayload {
                    space: profile.space().to_string(),
                    max_k: *max_k,
                    start: entries(profile.groups()),
                    stages,
                    final_space: tower.final_profile().space().to_string(),
                    note: format!(
                        "degrees above {max_k} are not tracked; stages beyond them are out of \
                         scope"
                    ),
                }),
                Some(trace_lines),
            )
        }
        CommandKind::Bott { max_k } => {
            let groups = (0..=*max_k)
                .map(|degree| DegreeEntry { degree, group: homotopy::bott_pi_o(degree) })
                .collect();
            (Payload::Bott(BottPayload { max_k: *max_k, groups }), None)
        }
    };
    Ok(Report {
        schema: SCHEMA_VERSION,
        command: req.kind.name().to_string(),
        provenance: Provenance {
            tool: "bruhat",
            version: env!("CARGO_PKG_VERSION"),
            args: req.argv.clone(),
        },
        payload,
        trace,
    })
}

fn set_display(nodes: &[usize]) -> String {
    if nodes.is_empty() {
        return "{}".to_string();
    }
    // compress runs: [1,2,3,5] renders as {1-3,5}
    let mut parts = Vec::new();
    let mut start = nodes[0];
    let mut prev = nodes[0];
    for &n in &nodes[1..] {
        if n == prev + 1 {
            prev = n;
            continue;
        }
        parts.push(if start == prev {
            start.to_string()
        } else {
            format!("{start}-{prev}")
        });
        start = n;
        prev = n;
    }
    parts.push(if start == prev { start.to_string() } else { format!("{start}-{prev}") });
    format!("{{{}}}", parts.join(","))
}

fn columns(headers: &[&str], rows: &[Vec<String>]) -> String {
    let ncol = headers.len();
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    let emit = |out: &mut String, cells: &[String]| {
        for (i, cell) in cells.iter().enumerate() {
            out.push_str(cell);
            if i + 1 < ncol {
                for _ in 0..widths[i] - cell.len() + 2 {
                    out.push(' ');
                }
            }
        }
        out.push('\n');
    };
    emit(&mut out, &headers.iter().map(|h| h.to_string()).collect::<Vec<_>>());
    for row in rows {
        emit(&mut out, row);
    }
    out
}

fn render_table(report: &Report) -> String {
    let mut out = String::new();
    match &report.payload {
        Payload::Growth(p) => {
            out.push_str(&format!(
                "growth of {} through length {}\n",
                p.diagram, p.max_len
            ));
            let rows: Vec<Vec<String>> = p
                .sizes
                .iter()
                .enumerate()
                .map(|(l, c)| vec![l.to_string(), c.to_string()])
                .collect();
            out.push_str(&columns(&["length", "count"], &rows));
            out.push_str(&format!("total  {}\n", p.total));
        }
        Payload::Cosets(p) => {
            out.push_str(&format!(
                "minimal coset representatives of {} / {} through length {}\n",
                p.diagram,
                set_display(&p.parabolic),
                p.max_len
            ));
            let rows: Vec<Vec<String>> = p
                .sizes
                .iter()
                .enumerate()
                .map(|(l, c)| vec![l.to_string(), c.to_string()])
                .collect();
            out.push_str(&columns(&["length", "count"], &rows));
            out.push_str(&format!("total  {}\n", p.total));
            if let Some(words) = &p.words {
                out.push_str("words\n");
                for (l, level) in words.iter().enumerate() {
                    for w in level {
                        out.push_str(&format!("  {l}: {w}\n"));
                    }
                }
            }
        }
        Payload::Cells(p) => {
            out.push_str(&format!(
                "cells of {} / {} through dimension {}, sheets {}\n",
                p.diagram,
                set_display(&p.parabolic),
                p.max_dim,
                p.sheets
            ));
            let rows: Vec<Vec<String>> = p
                .counts
                .iter()
                .enumerate()
                .map(|(d, c)| {
                    vec![d.to_string(), c.to_string(), set_display(&p.used[d])]
                })
                .collect();
            out.push_str(&columns(&["dim", "count", "used"], &rows));
            out.push_str(&format!("total  {}\n", p.total));
        }
        Payload::Compare(p) => {
            out.push_str(&format!(
                "compare {} / {} with {} / {} through dimension {}\n",
                p.left.diagram,
                set_display(&p.left.parabolic),
                p.right.diagram,
                set_display(&p.right.parabolic),
                p.max_dim
            ));
            let rows: Vec<Vec<String>> = p
                .rows
                .iter()
                .map(|r| vec![r.dim.to_string(), r.left.to_string(), r.right.to_string()])
                .collect();
            out.push_str(&columns(&["dim", "left", "right"], &rows));
            out.push_str(&format!("verdict: {}\n", p.verdict));
            out.push_str(&format!(
                "used subdiagrams isomorphic: {}\n",
                if p.used_subdiagrams_isomorphic { "yes" } else { "no" }
            ));
            out.push_str(&format!("agreement depth: {}\n", p.agreement_depth));
        }
        Payload::HomotopyEn(p) => {
            out.push_str(&format!("homotopy of {} through degree {}\n", p.space, p.max_k));
            let rows: Vec<Vec<String>> = p
                .groups
                .iter()
                .map(|e| {
                    vec![
                        e.degree.to_string(),
                        e.group.to_string(),
                        e.group.countable().to_string(),
                    ]
                })
                .collect();
            out.push_str(&columns(&["degree", "group", "countable"], &rows));
            if !p.evidence.is_empty() {
                out.push_str("evidence\n");
                for ev in &p.evidence {
                    out.push_str(&format!(
                        "  K(E{}) -> K(E{}): tail-quotient cells {}, agreement depth {}\n",
                        ev.lower, ev.upper, ev.verdict, ev.agreement_depth
                    ));
                }
            }
            if let Some(trace) = &report.trace {
                out.push_str("trace\n");
                for line in trace {
                    out.push_str(line);
                    out.push('\n');
                }
            }
        }
        Payload::Tower(p) => {
            out.push_str(&format!(
                "Whitehead tower of {} through degree {}\n",
                p.space, p.max_k
            ));
            if p.stages.is_empty() {
                out.push_str("no stages: the profile is already trivial in tracked degrees\n");
            } else {
                let rows: Vec<Vec<String>> = p
                    .stages
                    .iter()
                    .map(|s| {
                        vec![
                            s.stage.clone(),
                            format!("pi_{}", s.killed_degree),
                            s.killed_group.to_string(),
                            s.space.clone(),
                        ]
                    })
                    .collect();
                out.push_str(&columns(&["stage", "kills", "group", "result"], &rows));
            }
            out.push_str(&format!("final space: {}\n", p.final_space));
            out.push_str(&format!("note: {}\n", p.note));
        }
        Payload::Bott(p) => {
            out.push_str(&format!(
                "stable homotopy of the orthogonal family through degree {}\n",
                p.max_k
            ));
            let rows: Vec<Vec<String>> = p
                .groups
                .iter()
                .map(|e| vec![e.degree.to_string(), e.group.to_string()])
                .collect();
            out.push_str(&columns(&["degree", "group"], &rows));
        }
    }
    out
}

fn render_csv(report: &Report) -> String {
    fn series(counts: &[u64]) -> String {
        let mut s = counts
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",");
        s.push('\n');
        s
    }
    match &report.payload {
        Payload::Growth(p) => series(&p.sizes),
        Payload::Cosets(p) => series(&p.sizes),
        Payload::Cells(p) => series(&p.counts),
        Payload::Compare(p) => {
            let mut out = String::from("dim,left,right\n");
            for r in &p.rows {
                out.push_str(&format!("{},{},{}\n", r.dim, r.left, r.right));
            }
            out
        }
        Payload::HomotopyEn(p) => {
            let mut out = String::from("degree,group,countable\n");
            for e in &p.groups {
                out.push_str(&format!("{},{},{}\n", e.degree, e.group, e.group.countable()));
            }
            out
        }
        Payload::Tower(p) => {
            let mut out = String::from("stage,degree,group,space\n");
            for s in &p.stages {
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    s.stage, s.killed_degree, s.killed_group, s.space
                ));
            }
            out
        }
        Payload::Bott(p) => {
            let mut out = String::from("degree,group\n");
            for e in &p.groups {
                out.push_str(&format!("{},{}\n", e.degree, e.group));
            }
            out
        }
    }
}

/// Renders a report to the requested format. The result always ends with
/// a newline and contains nothing nondeterministic.
pub fn render(report: &Report, format: OutputFormat) -> String {
    match format {
        OutputFormat::Table => render_table(report),
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(report)
                .expect("reports contain nothing unserializable");
            s.push('\n');
            s
        }
        OutputFormat::Csv => render_csv(report),
    }
}
