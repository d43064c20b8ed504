//! Bookkeeping for low-degree homotopy groups.
//!
//! This module never computes homotopy; it records classical facts and
//! applies two deduction rules that cannot overreach:
//!
//! * the exact-sequence sandwich: in a fibration, when the base group
//!   vanishes in degrees k and k+1, the total space and the fiber agree
//!   in degree k; in every other situation the answer is unknown rather
//!   than guessed, since exactness alone does not resolve extensions;
//! * countability propagation: countable fiber groups and countable base
//!   groups force countable total-space groups.
//!
//! Group descriptors form a tiny algebra (trivial, free, finite cyclic,
//! direct sums, unknown) with a normal form, so equal groups render as
//! equal strings. Every deduced entry carries a trace line naming the
//! rule and the classical fact it leaned on.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::flag::{self, ComparisonVerdict, FlagError};
use crate::gcm::{DynkinFamily, DynkinName, GcmError, NodeSubset};

/// Degrees tracked by the E-series pipeline.
pub const EN_DEGREE_CAP: usize = 6;
/// Depth of the cell-table comparison backing each induction step.
pub const EN_COMPARISON_DEPTH: usize = 7;
/// Least agreement depth accepted as evidence for an induction step.
pub const EN_MIN_AGREEMENT: usize = 6;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HomotopyError {
    #[error("degree {k} of a rank-{n} orthogonal group is outside the stable range (needs n > k + 1)")]
    OutOfStableRange { n: usize, k: usize },
    #[error("the sphere S^{m} is only trivial below degree {m}; cannot profile through degree {kmax}")]
    SphereDepthExceeded { m: usize, kmax: usize },
    #[error("profiles truncate at different degrees ({left} and {right})")]
    KmaxMismatch { left: usize, right: usize },
    #[error("deduction in degree {degree} needs the base through degree {needed}, but the record stops at {kmax}")]
    DegreeOutOfRange { degree: usize, needed: usize, kmax: usize },
    #[error("the E-series pipeline starts at rank 8; got rank {rank}")]
    RankBelowBase { rank: usize },
    #[error("the E-series pipeline tracks degrees 0..={cap}; requested {requested}")]
    DegreeCapExceeded { requested: usize, cap: usize },
    #[error(
        "cell tables of the E{upper}/E{lower} and A{lower}/A{prev} tail quotients agree only \
         through dimension {agreement_depth} ({verdict}); the induction needs agreement through \
         dimension {min}"
    )]
    ComparisonFailed {
        lower: usize,
        upper: usize,
        prev: usize,
        verdict: ComparisonVerdict,
        agreement_depth: usize,
        min: usize,
    },
    #[error("cannot extend the tower past degree {degree}: the group there is unknown")]
    UnknownGroup { degree: usize },
    #[error("cannot parse {text:?} as a group descriptor")]
    BadDescriptor { text: String },
    #[error(transparent)]
    Flag(#[from] FlagError),
    #[error(transparent)]
    Gcm(#[from] GcmError),
}

/// Whether a group is known to be countable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Countability {
    Yes,
    Unknown,
}

impl fmt::Display for Countability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Countability::Yes => write!(f, "yes"),
            Countability::Unknown => write!(f, "unknown"),
        }
    }
}

impl Serialize for Countability {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Isomorphism type of a finitely described abelian group, or `Unknown`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupKind {
    Trivial,
    /// Free abelian of the given rank.
    Free(u32),
    /// Finite cyclic of the given order (>= 2 after normalization).
    Cyclic(u64),
    DirectSum(Vec<GroupKind>),
    Unknown,
}

impl GroupKind {
    /// Normal form: unknown absorbs everything; sums are flattened with
    /// free parts merged in front and cyclic orders ascending; trivial
    /// summands and order-1 cyclics vanish; singleton sums unwrap.
    pub fn normalize(self) -> GroupKind {
        fn walk(kind: GroupKind, free: &mut u32, cyclics: &mut Vec<u64>) -> bool {
            match kind {
                GroupKind::Trivial => true,
                GroupKind::Free(r) => {
                    *free += r;
                    true
                }
                GroupKind::Cyclic(0) => panic!("cyclic groups need order >= 1"),
                GroupKind::Cyclic(1) => true,
                GroupKind::Cyclic(m) => {
                    cyclics.push(m);
                    true
                }
                GroupKind::DirectSum(parts) => {
                    parts.into_iter().all(|p| walk(p, free, cyclics))
                }
                GroupKind::Unknown => false,
            }
        }
        let mut free = 0;
        let mut cyclics = Vec::new();
        if !walk(self, &mut free, &mut cyclics) {
            return GroupKind::Unknown;
        }
        cyclics.sort_unstable();
        let mut parts = Vec::new();
        if free > 0 {
            parts.push(GroupKind::Free(free));
        }
        parts.extend(cyclics.into_iter().map(GroupKind::Cyclic));
        match parts.len() {
            0 => GroupKind::Trivial,
            1 => parts.pop().unwrap(),
            _ => GroupKind::DirectSum(parts),
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::Trivial => write!(f, "1"),
            GroupKind::Free(1) => write!(f, "Z"),
            GroupKind::Free(r) => write!(f, "Z^{r}"),
            GroupKind::Cyclic(m) => write!(f, "C{m}"),
            GroupKind::DirectSum(parts) => {
                let rendered: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "{}", rendered.join("+"))
            }
            GroupKind::Unknown => write!(f, "?"),
        }
    }
}

impl FromStr for GroupKind {
    type Err = HomotopyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || HomotopyError::BadDescriptor { text: s.to_string() };
        let mut parts = Vec::new();
        for piece in s.split('+') {
            let piece = piece.trim();
            let part = match piece {
                "1" => GroupKind::Trivial,
                "?" => GroupKind::Unknown,
                "Z" => GroupKind::Free(1),
                _ => {
                    if let Some(r) = piece.strip_prefix("Z^") {
                        GroupKind::Free(r.parse().map_err(|_| bad())?)
                    } else if let Some(m) = piece.strip_prefix('C') {
                        let m: u64 = m.parse().map_err(|_| bad())?;
                        if m == 0 {
                            return Err(bad());
                        }
                        GroupKind::Cyclic(m)
                    } else {
                        return Err(bad());
                    }
                }
            };
            parts.push(part);
        }
        match parts.len() {
            0 => Err(bad()),
            1 => Ok(parts.pop().unwrap().normalize()),
            _ => Ok(GroupKind::DirectSum(parts).normalize()),
        }
    }
}

/// A homotopy-group entry: the isomorphism type as far as it is known,
/// plus a countability flag that can be known even when the type is not.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbelianGroupDescriptor {
    #[serde(serialize_with = "serialize_kind")]
    kind: GroupKind,
    countable: Countability,
}

fn serialize_kind<S: Serializer>(kind: &GroupKind, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(kind)
}

impl AbelianGroupDescriptor {
    /// A fully identified group; finitely described, hence countable.
    /// If the kind normalizes to unknown, countability is unknown too.
    pub fn known(kind: GroupKind) -> Self {
        let kind = kind.normalize();
        let countable = if kind == GroupKind::Unknown {
            Countability::Unknown
        } else {
            Countability::Yes
        };
        AbelianGroupDescriptor { kind, countable }
    }

    pub fn unknown() -> Self {
        AbelianGroupDescriptor { kind: GroupKind::Unknown, countable: Countability::Unknown }
    }

    pub fn trivial() -> Self {
        Self::known(GroupKind::Trivial)
    }

    pub fn integers() -> Self {
        Self::known(GroupKind::Free(1))
    }

    pub fn free(rank: u32) -> Self {
        Self::known(GroupKind::Free(rank))
    }

    pub fn cyclic(order: u64) -> Self {
        Self::known(GroupKind::Cyclic(order))
    }

    pub fn with_countable(mut self, c: Countability) -> Self {
        self.countable = c;
        self
    }

    pub fn kind(&self) -> &GroupKind {
        &self.kind
    }

    pub fn countable(&self) -> Countability {
        self.countable
    }

    pub fn is_trivial(&self) -> bool {
        self.kind == GroupKind::Trivial
    }

    pub fn is_unknown(&self) -> bool {
        self.kind == GroupKind::Unknown
    }
}

impl fmt::Display for AbelianGroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)
    }
}

/// Homotopy groups of one space in degrees 0..=kmax.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomotopyProfile {
    space: String,
    groups: Vec<AbelianGroupDescriptor>,
}

impl HomotopyProfile {
    /// A profile with every entry unknown.
    pub fn new(space: &str, kmax: usize) -> Self {
        HomotopyProfile {
            space: space.to_string(),
            groups: vec![AbelianGroupDescriptor::unknown(); kmax + 1],
        }
    }

    pub fn space(&self) -> &str {
        &self.space
    }

    pub fn kmax(&self) -> usize {
        self.groups.len() - 1
    }

    pub fn group(&self, k: usize) -> &AbelianGroupDescriptor {
        &self.groups[k]
    }

    pub fn groups(&self) -> &[AbelianGroupDescriptor] {
        &self.groups
    }

    pub fn set_group(&mut self, k: usize, d: AbelianGroupDescriptor) {
        self.groups[k] = d;
    }

    pub fn with_group(mut self, k: usize, d: AbelianGroupDescriptor) -> Self {
        self.set_group(k, d);
        self
    }

    pub fn renamed(mut self, space: &str) -> Self {
        self.space = space.to_string();
        self
    }

    /// Keeps degrees 0..=kmax only.
    pub fn truncated(mut self, kmax: usize) -> Self {
        self.groups.truncate(kmax + 1);
        self
    }

    /// The lowest degree with a group that is not known to be trivial.
    pub fn lowest_nontrivial(&self) -> Option<usize> {
        self.groups.iter().position(|g| !g.is_trivial())
    }

    pub fn is_trivial_through(&self, d: usize) -> bool {
        self.groups[..=d.min(self.kmax())].iter().all(|g| g.is_trivial())
    }
}

/// Stable homotopy of the orthogonal family, degree k mod 8.
pub fn bott_pi_o(k: usize) -> AbelianGroupDescriptor {
    match k % 8 {
        0 | 1 => AbelianGroupDescriptor::cyclic(2),
        3 | 7 => AbelianGroupDescriptor::integers(),
        _ => AbelianGroupDescriptor::trivial(),
    }
}

/// pi_k(SO(n)) inside the stable range n > k + 1. Degree 0 is trivial
/// (the group is connected); degrees k >= 1 agree with the stable table.
pub fn stable_pi_so(n: usize, k: usize) -> Result<AbelianGroupDescriptor, HomotopyError> {
    if k == 0 {
        return Ok(AbelianGroupDescriptor::trivial());
    }
    if n <= k + 1 {
        return Err(HomotopyError::OutOfStableRange { n, k });
    }
    Ok(bott_pi_o(k))
}

/// The first unstable group of O(16): rank two instead of the stable Z.
pub fn pi15_of_o16() -> AbelianGroupDescriptor {
    AbelianGroupDescriptor::free(2)
}

/// Classical fact backing `pi15_of_o16`.
pub const PI15_O16_CITATION: &str = "pi_15(O(16)) = Z + Z, not the stable Z: degree 15 sits \
     exactly at the edge of the stable range of O(16), and the tangent bundle of S^15 \
     contributes a second free summand";

/// Profile of O(n) through degree kmax, all within the stable range.
pub fn o_profile(n: usize, kmax: usize) -> Result<HomotopyProfile, HomotopyError> {
    let mut p = HomotopyProfile::new(&format!("O({n})"), kmax);
    p.set_group(0, AbelianGroupDescriptor::cyclic(2));
    for k in 1..=kmax {
        p.set_group(k, stable_pi_so(n, k)?);
    }
    Ok(p)
}

/// Profile of S^m through degree kmax < m: trivial everywhere tracked.
pub fn sphere_profile(m: usize, kmax: usize) -> Result<HomotopyProfile, HomotopyError> {
    if kmax >= m {
        return Err(HomotopyError::SphereDepthExceeded { m, kmax });
    }
    let mut p = HomotopyProfile::new(&format!("S^{m}"), kmax);
    for k in 0..=kmax {
        p.set_group(k, AbelianGroupDescriptor::trivial());
    }
    Ok(p)
}

/// A fibration fiber -> total -> base with profiles truncated at one
/// common degree. The record is an input to deduction; nothing checks
/// that the fibration exists, which is exactly why every consumer cites
/// its justification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FibrationRecord {
    fiber: HomotopyProfile,
    total: HomotopyProfile,
    base: HomotopyProfile,
    justification: String,
}

impl FibrationRecord {
    pub fn new(
        fiber: HomotopyProfile,
        total: HomotopyProfile,
        base: HomotopyProfile,
        justification: &str,
    ) -> Result<Self, HomotopyError> {
        if fiber.kmax() != base.kmax() {
            return Err(HomotopyError::KmaxMismatch { left: fiber.kmax(), right: base.kmax() });
        }
        if fiber.kmax() != total.kmax() {
            return Err(HomotopyError::KmaxMismatch { left: fiber.kmax(), right: total.kmax() });
        }
        Ok(FibrationRecord { fiber, total, base, justification: justification.to_string() })
    }

    pub fn fiber(&self) -> &HomotopyProfile {
        &self.fiber
    }

    pub fn total(&self) -> &HomotopyProfile {
        &self.total
    }

    pub fn base(&self) -> &HomotopyProfile {
        &self.base
    }

    pub fn justification(&self) -> &str {
        &self.justification
    }
}

/// The sandwich rule. When the base vanishes in degrees k and k+1, the
/// long exact sequence pins pi_k(total) to pi_k(fiber); otherwise the
/// result is unknown. The rule never solves extension problems.
pub fn sandwich_deduce(
    record: &FibrationRecord,
    k: usize,
) -> Result<AbelianGroupDescriptor, HomotopyError> {
    if k + 1 > record.base.kmax() {
        return Err(HomotopyError::DegreeOutOfRange {
            degree: k,
            needed: k + 1,
            kmax: record.base.kmax(),
        });
    }
    if record.base.group(k).is_trivial() && record.base.group(k + 1).is_trivial() {
        Ok(record.fiber.group(k).clone())
    } else {
        Ok(AbelianGroupDescriptor::unknown())
    }
}

/// Countable fiber and countable base force a countable total space.
pub fn countability_propagate(fiber: Countability, base: Countability) -> Countability {
    match (fiber, base) {
        (Countability::Yes, Countability::Yes) => Countability::Yes,
        _ => Countability::Unknown,
    }
}

/// One deduced (or recorded) entry with its justification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceEntry {
    pub stage: String,
    pub degree: usize,
    pub group: AbelianGroupDescriptor,
    pub rule: String,
    pub citation: String,
}

impl TraceEntry {
    pub fn render(&self) -> String {
        format!(
            "DEGREE {}: {} BY {} CITING {}",
            self.degree, self.group, self.rule, self.citation
        )
    }
}

/// Cell-table evidence recorded for one induction step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnStepEvidence {
    /// The step extends K(E_lower) to K(E_upper).
    pub lower: usize,
    pub upper: usize,
    pub verdict: ComparisonVerdict,
    pub agreement_depth: usize,
    /// Count pairs (E-side, A-side) per dimension through the comparison
    /// depth.
    pub rows: Vec<(u64, u64)>,
}

/// Result of the E-series pipeline: the profile, the full trace, and the
/// per-step comparison evidence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnDeduction {
    pub profile: HomotopyProfile,
    pub trace: Vec<TraceEntry>,
    pub evidence: Vec<EnStepEvidence>,
}

fn en_base_profile(
    internal_kmax: usize,
    reported_kmax: usize,
    trace: &mut Vec<TraceEntry>,
) -> HomotopyProfile {
    let mut p = HomotopyProfile::new("K(E8)", internal_kmax);
    for k in 0..=internal_kmax {
        // 16 > k + 1 holds for every tracked degree
        let group = stable_pi_so(16, k).expect("degree within the stable range of SO(16)");
        let citation = if k == 0 {
            "K(E8) is SO(16), which is connected".to_string()
        } else {
            format!(
                "K(E8) is SO(16); pi_{k}(SO(16)) = pi_{k}(O) = {group} by Bott periodicity, \
                 stable since 16 > {k} + 1"
            )
        };
        if k <= reported_kmax {
            trace.push(TraceEntry {
                stage: "K(E8)".to_string(),
                degree: k,
                group: group.clone(),
                rule: "stable orthogonal table".to_string(),
                citation,
            });
        }
        p.set_group(k, group);
    }
    p
}

/// Low-degree homotopy of the compact form K(E_n) for n >= 8, deduced by
/// induction on the rank.
///
/// The base case is the stable orthogonal table for K(E8) = SO(16). Each
/// step m -> m+1 compares the Bruhat cell tables of the tail quotients
/// E_{m+1}/E_m and A_m/A_{m-1} through dimension 7 and requires agreement
/// (equal counts over isomorphic used subdiagrams) through dimension 6 or
/// better; the identification of the quotient with the sphere S^m through
/// degree 7 is then recorded as a cited step, and the sandwich rule
/// transfers each tracked degree across the fibration
/// K(E_m) -> K(E_{m+1}) -> K(E_{m+1})/K(E_m).
pub fn en_profile(n: usize, kmax: usize, budget: usize) -> Result<EnDeduction, HomotopyError> {
    if n < 8 {
        return Err(HomotopyError::RankBelowBase { rank: n });
    }
    if kmax > EN_DEGREE_CAP {
        return Err(HomotopyError::DegreeCapExceeded { requested: kmax, cap: EN_DEGREE_CAP });
    }
    let mut trace = Vec::new();
    let mut evidence = Vec::new();
    // tracked internally one degree past the comparison depth's needs:
    // the sandwich in degree k reads the base at k and k+1
    let internal_kmax = EN_COMPARISON_DEPTH;
    let mut profile = en_base_profile(internal_kmax, kmax, &mut trace);
    for m in 8..n {
        let upper = DynkinName::new(DynkinFamily::E, m + 1)?.cartan_matrix();
        let chain = DynkinName::new(DynkinFamily::A, m)?.cartan_matrix();
        let e_table =
            flag::cell_table(&upper, &NodeSubset::new(0..m), EN_COMPARISON_DEPTH, budget)?;
        let a_table =
            flag::cell_table(&chain, &NodeSubset::new(0..m - 1), EN_COMPARISON_DEPTH, budget)?;
        let cmp = flag::compare_tables(&e_table, &a_table)?;
        if cmp.agreement_depth < EN_MIN_AGREEMENT {
            return Err(HomotopyError::ComparisonFailed {
                lower: m,
                upper: m + 1,
                prev: m - 1,
                verdict: cmp.verdict,
                agreement_depth: cmp.agreement_depth,
                min: EN_MIN_AGREEMENT,
            });
        }
        evidence.push(EnStepEvidence {
            lower: m,
            upper: m + 1,
            verdict: cmp.verdict,
            agreement_depth: cmp.agreement_depth,
            rows: cmp.rows.clone(),
        });
        let base = sphere_profile(m, internal_kmax)?;
        let justification = format!(
            "K(E{m}) -> K(E{next}) -> K(E{next})/K(E{m}) is a fibration (closed subgroup); \
             the quotient is identified with S^{m} through degree {depth}, backed by cell \
             tables agreeing through dimension {agree} ({verdict})",
            next = m + 1,
            depth = EN_COMPARISON_DEPTH,
            agree = cmp.agreement_depth,
            verdict = cmp.verdict,
        );
        let record = FibrationRecord::new(
            profile.clone(),
            HomotopyProfile::new(&format!("K(E{})", m + 1), internal_kmax),
            base,
            &justification,
        )?;
        let stage = format!("K(E{m}) -> K(E{})", m + 1);
        let mut next = HomotopyProfile::new(&format!("K(E{})", m + 1), internal_kmax);
        for k in 0..=internal_kmax {
            let (group, rule, citation) = if k + 1 <= internal_kmax {
                let deduced = sandwich_deduce(&record, k)?;
                let countable = countability_propagate(
                    record.fiber().group(k).countable(),
                    record.base().group(k).countable(),
                );
                let citation = format!(
                    "{justification}; pi_{k} and pi_{} of S^{m} vanish",
                    k + 1
                );
                (deduced.with_countable(countable), "exact-sequence sandwich", citation)
            } else {
                // the top tracked degree has no successor in the record;
                // only countability propagates
                let countable = countability_propagate(
                    record.fiber().group(k).countable(),
                    record.base().group(k).countable(),
                );
                let citation = format!(
                    "{justification}; countable fiber and base groups force a countable \
                     total group"
                );
                (
                    AbelianGroupDescriptor::unknown().with_countable(countable),
                    "countability propagation",
                    citation,
                )
            };
            if k <= kmax {
                trace.push(TraceEntry {
                    stage: stage.clone(),
                    degree: k,
                    group: group.clone(),
                    rule: rule.to_string(),
                    citation,
                });
            }
            next.set_group(k, group);
        }
        profile = next;
    }
    Ok(EnDeduction { profile: profile.truncated(kmax).renamed(&format!("K(E{n})")), trace, evidence })
}

/// One stage of a Whitehead tower: the degree killed, the group that
/// lived there, and the profile of the resulting cover.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TowerStage {
    pub name: String,
    pub killed_degree: usize,
    pub killed_group: AbelianGroupDescriptor,
    pub space: String,
    pub profile: HomotopyProfile,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WhiteheadTower {
    pub input: HomotopyProfile,
    pub stages: Vec<TowerStage>,
}

impl WhiteheadTower {
    pub fn kmax(&self) -> usize {
        self.input.kmax()
    }

    /// Profile after the last stage (the input when no stage was needed).
    pub fn final_profile(&self) -> &HomotopyProfile {
        self.stages.last().map(|s| &s.profile).unwrap_or(&self.input)
    }
}

fn stage_name(killed: usize) -> String {
    match killed {
        0 => "connected cover".to_string(),
        1 => "Spin-stage".to_string(),
        3 => "String-stage".to_string(),
        k => format!("stage {k}"),
    }
}

fn derived_space_name(space: &str, killed: usize) -> String {
    let inner = space
        .find('(')
        .and_then(|i| space.rfind(')').map(|j| &space[i + 1..j]));
    match (killed, inner) {
        (0, _) if space.starts_with("O(") => format!("S{space}"),
        (1, Some(x)) if space.starts_with("SO(") || space.starts_with("K(") => {
            format!("Spin({x})")
        }
        (3, Some(x)) if space.starts_with("Spin(") => format!("String({x})"),
        _ => format!("{space} with pi_{killed} killed"),
    }
}

/// Builds the Whitehead tower of a fully known profile: each stage kills
/// the lowest remaining nontrivial group. Stops when the profile is
/// trivial through its whole tracked range; degrees past the truncation
/// are never touched.
pub fn whitehead_tower(input: &HomotopyProfile) -> Result<WhiteheadTower, HomotopyError> {
    if let Some(degree) = input.groups().iter().position(|g| g.is_unknown()) {
        return Err(HomotopyError::UnknownGroup { degree });
    }
    let mut stages = Vec::new();
    let mut current = input.clone();
    while let Some(killed_degree) = current.lowest_nontrivial() {
        let killed_group = current.group(killed_degree).clone();
        let space = derived_space_name(current.space(), killed_degree);
        let mut profile = current.clone().renamed(&space);
        profile.set_group(killed_degree, AbelianGroupDescriptor::trivial());
        stages.push(TowerStage {
            name: stage_name(killed_degree),
            killed_degree,
            killed_group,
            space: space.clone(),
            profile: profile.clone(),
        });
        current = profile;
    }
    Ok(WhiteheadTower { input: input.clone(), stages })
}
