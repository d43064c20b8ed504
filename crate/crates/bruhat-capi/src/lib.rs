//! C interface to the bruhat crate.
//!
//! Conventions, shared by every function here:
//!
//! * every fallible call returns a [`BruhatStatus`]; anything nonzero is
//!   a failure, and `bruhat_last_error_message` returns a per-thread
//!   message describing the most recent failure on that thread;
//! * handles created by `bruhat_gcm_*` constructors are owned by the
//!   caller and released with `bruhat_gcm_free`; strings returned
//!   through `char **` outputs are released with `bruhat_string_free`;
//! * node numbers are 1-based, matching the diagram labeling used
//!   everywhere else in the crate;
//! * panics never cross the boundary; they are caught and reported as
//!   `BRUHAT_STATUS_INTERNAL_PANIC`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use bruhat::cli::{self, CliError, CommandKind, CommandRequest, OutputFormat};
use bruhat::flag::{self, ComparisonVerdict, FlagError};
use bruhat::gcm::{GcmError, GeneralizedCartanMatrix, NodeSubset};
use bruhat::homotopy;
use bruhat::weyl::{WeylError, WeylGroup};

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BruhatStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// An argument was malformed or out of range for the request.
    InvalidArgument = 3,
    /// The computation itself failed; see the error message.
    DomainError = 4,
    /// Exact integer arithmetic overflowed.
    Overflow = 5,
    /// The enumeration budget was exhausted before the request finished.
    BudgetExceeded = 6,
    /// An output buffer was too small; the message names the needed size.
    BufferTooSmall = 7,
    /// A bug: an internal panic was caught at the boundary.
    InternalPanic = 8,
}

/// Opaque handle to a validated generalized Cartan matrix.
pub struct BruhatGcm(GeneralizedCartanMatrix);

/// Outcome of comparing two cell tables.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BruhatComparison {
    /// When the counts agree everywhere, the compared depth; -1 otherwise.
    pub matched_through: i64,
    /// First dimension where the counts differ; -1 when they never do.
    pub diverge_at: i64,
    /// Whether the generators used through the full depth span isomorphic
    /// subdiagrams.
    pub used_subdiagrams_isomorphic: bool,
    /// Largest dimension d with equal counts through d over isomorphic
    /// used subdiagrams.
    pub agreement_depth: u64,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> =
        RefCell::new(CString::new("no error").expect("static string"));
}

fn fail(status: BruhatStatus, msg: &str) -> BruhatStatus {
    let sanitized = msg.replace('\0', " ");
    LAST_ERROR.with(|e| {
        *e.borrow_mut() = CString::new(sanitized).expect("NUL bytes removed above");
    });
    status
}

fn gcm_status(e: &GcmError) -> BruhatStatus {
    match e {
        GcmError::Overflow => BruhatStatus::Overflow,
        GcmError::RankOutOfRange { .. }
        | GcmError::IndexOutOfRange { .. }
        | GcmError::BadName { .. }
        | GcmError::BadSubset { .. }
        | GcmError::BadText { .. } => BruhatStatus::InvalidArgument,
        GcmError::NotSquare { .. } | GcmError::Invalid(_) | GcmError::NotSymmetric => {
            BruhatStatus::DomainError
        }
    }
}

fn weyl_status(e: &WeylError) -> BruhatStatus {
    match e {
        WeylError::BudgetExceeded { .. } => BruhatStatus::BudgetExceeded,
        WeylError::ArithmeticOverflow => BruhatStatus::Overflow,
        WeylError::IndexOutOfRange { .. } | WeylError::DimensionMismatch { .. } => {
            BruhatStatus::InvalidArgument
        }
        WeylError::MismatchedContext | WeylError::MixedSign => BruhatStatus::DomainError,
    }
}

fn flag_status(e: &FlagError) -> BruhatStatus {
    match e {
        FlagError::Gcm(inner) => gcm_status(inner),
        FlagError::Weyl(inner) => weyl_status(inner),
        FlagError::CountOverflow => BruhatStatus::Overflow,
        FlagError::TruncationMismatch { .. }
        | FlagError::SheetsMismatch { .. }
        | FlagError::AlreadyCovered { .. }
        | FlagError::ZeroSheets => BruhatStatus::InvalidArgument,
    }
}

fn guarded<F: FnOnce() -> BruhatStatus>(f: F) -> BruhatStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => fail(BruhatStatus::InternalPanic, "internal panic caught at the C boundary"),
    }
}

/// Message describing the most recent failure on this thread.
///
/// The pointer stays valid until the next failing call on the same
/// thread. Never freed by the caller.
#[no_mangle]
pub extern "C" fn bruhat_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, BruhatStatus> {
    if ptr.is_null() {
        return Err(fail(BruhatStatus::NullArgument, "string argument is null"));
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|_| fail(BruhatStatus::InvalidUtf8, "string argument is not valid UTF-8"))
}

unsafe fn read_subset(
    gcm: &GeneralizedCartanMatrix,
    sub: *const u32,
    sub_len: usize,
) -> Result<NodeSubset, BruhatStatus> {
    if sub_len == 0 {
        return Ok(NodeSubset::empty());
    }
    if sub.is_null() {
        return Err(fail(BruhatStatus::NullArgument, "node list is null but its length is not 0"));
    }
    let nodes = std::slice::from_raw_parts(sub, sub_len);
    let mut zero_based = Vec::with_capacity(sub_len);
    for &node in nodes {
        if node == 0 || node as usize > gcm.rank() {
            return Err(fail(
                BruhatStatus::InvalidArgument,
                &format!("node {node} out of range; nodes are 1-based up to {}", gcm.rank()),
            ));
        }
        zero_based.push(node as usize - 1);
    }
    Ok(NodeSubset::new(zero_based))
}

unsafe fn write_counts(
    counts: &[u64],
    out: *mut u64,
    out_len: usize,
) -> Result<(), BruhatStatus> {
    if out.is_null() {
        return Err(fail(BruhatStatus::NullArgument, "output buffer is null"));
    }
    if out_len < counts.len() {
        return Err(fail(
            BruhatStatus::BufferTooSmall,
            &format!("output buffer holds {out_len} entries, {} needed", counts.len()),
        ));
    }
    std::ptr::copy_nonoverlapping(counts.as_ptr(), out, counts.len());
    Ok(())
}

unsafe fn gcm_ref<'a>(gcm: *const BruhatGcm) -> Result<&'a GeneralizedCartanMatrix, BruhatStatus> {
    if gcm.is_null() {
        return Err(fail(BruhatStatus::NullArgument, "matrix handle is null"));
    }
    Ok(&(*gcm).0)
}

/// Creates a handle from a family name like `E8` or `A3`.
///
/// # Safety
/// `name` must point to a NUL-terminated string and `out` to writable
/// space for one pointer. On success `*out` owns the new handle.
#[no_mangle]
pub unsafe extern "C" fn bruhat_gcm_from_name(
    name: *const c_char,
    out: *mut *mut BruhatGcm,
) -> BruhatStatus {
    guarded(|| {
        if out.is_null() {
            return fail(BruhatStatus::NullArgument, "output handle is null");
        }
        let text = match read_str(name) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match GeneralizedCartanMatrix::from_named_str(text) {
            Ok(gcm) => {
                *out = Box::into_raw(Box::new(BruhatGcm(gcm)));
                BruhatStatus::Ok
            }
            Err(e) => fail(gcm_status(&e), &e.to_string()),
        }
    })
}

/// Creates a handle from matrix text (rank line, then one row per line).
///
/// # Safety
/// `text` must point to a NUL-terminated string and `out` to writable
/// space for one pointer. On success `*out` owns the new handle.
#[no_mangle]
pub unsafe extern "C" fn bruhat_gcm_parse_text(
    text: *const c_char,
    out: *mut *mut BruhatGcm,
) -> BruhatStatus {
    guarded(|| {
        if out.is_null() {
            return fail(BruhatStatus::NullArgument, "output handle is null");
        }
        let content = match read_str(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match GeneralizedCartanMatrix::parse_text(content) {
            Ok(gcm) => {
                *out = Box::into_raw(Box::new(BruhatGcm(gcm)));
                BruhatStatus::Ok
            }
            Err(e) => fail(gcm_status(&e), &e.to_string()),
        }
    })
}

/// Releases a handle. Null is accepted and ignored.
///
/// # Safety
/// `gcm` must be null or a pointer returned by a `bruhat_gcm_*`
/// constructor that has not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn bruhat_gcm_free(gcm: *mut BruhatGcm) {
    if !gcm.is_null() {
        drop(Box::from_raw(gcm));
    }
}

/// Writes the rank of the matrix to `out`.
///
/// # Safety
/// `gcm` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bruhat_gcm_rank(
    gcm: *const BruhatGcm,
    out: *mut usize,
) -> BruhatStatus {
    guarded(|| {
        let matrix = match gcm_ref(gcm) {
            Ok(m) => m,
            Err(s) => return s,
        };
        if out.is_null() {
            return fail(BruhatStatus::NullArgument, "output pointer is null");
        }
        *out = matrix.rank();
        BruhatStatus::Ok
    })
}

/// Writes whether the matrix is of finite type (symmetric matrices only).
///
/// # Safety
/// `gcm` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bruhat_gcm_is_finite_type(
    gcm: *const BruhatGcm,
    out: *mut bool,
) -> BruhatStatus {
    guarded(|| {
        let matrix = match gcm_ref(gcm) {
            Ok(m) => m,
            Err(s) => return s,
        };
        if out.is_null() {
            return fail(BruhatStatus::NullArgument, "output pointer is null");
        }
        match matrix.is_finite_type() {
            Ok(answer) => {
                *out = answer;
                BruhatStatus::Ok
            }
            Err(e) => fail(gcm_status(&e), &e.to_string()),
        }
    })
}

/// Counts Weyl group elements by length, writing `max_len + 1` numbers.
///
/// # Safety
/// `gcm` must be a live handle; `out` must point to at least `out_len`
/// writable `uint64_t` entries.
#[no_mangle]
pub unsafe extern "C" fn bruhat_growth_series(
    gcm: *const BruhatGcm,
    max_len: usize,
    budget: usize,
    out: *mut u64,
    out_len: usize,
) -> BruhatStatus {
    guarded(|| {
        let matrix = match gcm_ref(gcm) {
            Ok(m) => m,
            Err(s) => return s,
        };
        match WeylGroup::new(matrix).growth_series(max_len, budget) {
            Ok(sizes) => match write_counts(&sizes, out, out_len) {
                Ok(()) => BruhatStatus::Ok,
                Err(s) => s,
            },
            Err(e) => fail(weyl_status(&e), &e.to_string()),
        }
    })
}

/// Counts minimal coset representatives by length for the parabolic
/// spanned by the 1-based nodes in `sub`, writing `max_len + 1` numbers.
///
/// # Safety
/// `gcm` must be a live handle; `sub` must point to `sub_len` readable
/// entries (or be null when `sub_len` is 0); `out` must point to at
/// least `out_len` writable `uint64_t` entries.
#[no_mangle]
pub unsafe extern "C" fn bruhat_coset_level_sizes(
    gcm: *const BruhatGcm,
    sub: *const u32,
    sub_len: usize,
    max_len: usize,
    budget: usize,
    out: *mut u64,
    out_len: usize,
) -> BruhatStatus {
    guarded(|| {
        let matrix = match gcm_ref(gcm) {
            Ok(m) => m,
            Err(s) => return s,
        };
        let subset = match read_subset(matrix, sub, sub_len) {
            Ok(s) => s,
            Err(s) => return s,
        };
        match WeylGroup::new(matrix).minimal_coset_reps(&subset, max_len, budget) {
            Ok(levels) => match write_counts(&levels.sizes(), out, out_len) {
                Ok(()) => BruhatStatus::Ok,
                Err(s) => s,
            },
            Err(e) => fail(weyl_status(&e), &e.to_string()),
        }
    })
}

/// Tabulates Bruhat cell counts through `max_dim`, lifted through a
/// cover with `sheets` sheets, writing `max_dim + 1` numbers.
///
/// # Safety
/// Same contracts as `bruhat_coset_level_sizes`.
#[no_mangle]
pub unsafe extern "C" fn bruhat_cell_counts(
    gcm: *const BruhatGcm,
    sub: *const u32,
    sub_len: usize,
    max_dim: usize,
    sheets: u64,
    budget: usize,
    out: *mut u64,
    out_len: usize,
) -> BruhatStatus {
    guarded(|| {
        let matrix = match gcm_ref(gcm) {
            Ok(m) => m,
            Err(s) => return s,
        };
        let subset = match read_subset(matrix, sub, sub_len) {
            Ok(s) => s,
            Err(s) => return s,
        };
        if sheets == 0 {
            return fail(BruhatStatus::InvalidArgument, "a cover needs at least one sheet");
        }
        let table = match flag::cell_table(matrix, &subset, max_dim, budget) {
            Ok(t) => t,
            Err(e) => return fail(flag_status(&e), &e.to_string()),
        };
        let table = if sheets > 1 {
            match flag::cover_cell_table(&table, sheets) {
                Ok(t) => t,
                Err(e) => return fail(flag_status(&e), &e.to_string()),
            }
        } else {
            table
        };
        match write_counts(table.counts(), out, out_len) {
            Ok(()) => BruhatStatus::Ok,
            Err(s) => s,
        }
    })
}

/// Compares the cell tables of two quotients through `max_dim` and fills
/// `out` with the verdict.
///
/// # Safety
/// Both handles must be live; the two node lists follow the same
/// contract as `bruhat_coset_level_sizes`; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bruhat_compare(
    left: *const BruhatGcm,
    left_sub: *const u32,
    left_sub_len: usize,
    right: *const BruhatGcm,
    right_sub: *const u32,
    right_sub_len: usize,
    max_dim: usize,
    budget: usize,
    out: *mut BruhatComparison,
) -> BruhatStatus {
    guarded(|| {
        let lm = match gcm_ref(left) {
            Ok(m) => m,
            Err(s) => return s,
        };
        let rm = match gcm_ref(right) {
            Ok(m) => m,
            Err(s) => return s,
        };
        if out.is_null() {
            return fail(BruhatStatus::NullArgument, "output pointer is null");
        }
        let lsub = match read_subset(lm, left_sub, left_sub_len) {
            Ok(s) => s,
            Err(s) => return s,
        };
        let rsub = match read_subset(rm, right_sub, right_sub_len) {
            Ok(s) => s,
            Err(s) => return s,
        };
        let tables = flag::cell_table(lm, &lsub, max_dim, budget).and_then(|lt| {
            flag::cell_table(rm, &rsub, max_dim, budget).map(|rt| (lt, rt))
        });
        let (lt, rt) = match tables {
            Ok(pair) => pair,
            Err(e) => return fail(flag_status(&e), &e.to_string()),
        };
        match flag::compare_tables(&lt, &rt) {
            Ok(cmp) => {
                let (matched_through, diverge_at) = match cmp.verdict {
                    ComparisonVerdict::MatchThrough(d) => (d as i64, -1),
                    ComparisonVerdict::DivergeAt(d) => (-1, d as i64),
                };
                *out = BruhatComparison {
                    matched_through,
                    diverge_at,
                    used_subdiagrams_isomorphic: cmp.used_subdiagrams_isomorphic,
                    agreement_depth: cmp.agreement_depth as u64,
                };
                BruhatStatus::Ok
            }
            Err(e) => fail(flag_status(&e), &e.to_string()),
        }
    })
}

fn json_command(kind: CommandKind, budget: usize, out: *mut *mut c_char) -> BruhatStatus {
    if out.is_null() {
        return fail(BruhatStatus::NullArgument, "output pointer is null");
    }
    let request = CommandRequest { kind, format: OutputFormat::Json, budget, argv: Vec::new() };
    match cli::run(&request) {
        Ok(report) => {
            let rendered = cli::render(&report, OutputFormat::Json);
            let cstring = CString::new(rendered.replace('\0', " "))
                .expect("NUL bytes removed above");
            unsafe { *out = cstring.into_raw() };
            BruhatStatus::Ok
        }
        Err(CliError::Usage(msg)) => fail(BruhatStatus::InvalidArgument, &msg),
        Err(CliError::Domain(msg)) => fail(BruhatStatus::DomainError, &msg),
    }
}

/// Deduces the homotopy profile of K(E_n) through degree `max_k` and
/// returns the full JSON report (same schema as the command line) in
/// `*out`. Free the string with `bruhat_string_free`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bruhat_en_profile_json(
    n: usize,
    max_k: usize,
    budget: usize,
    out: *mut *mut c_char,
) -> BruhatStatus {
    guarded(|| json_command(CommandKind::HomotopyEn { n, max_k }, budget, out))
}

/// Builds the Whitehead tower of a named space (O(n), SO(n), or K(En))
/// and returns the full JSON report in `*out`. Free the string with
/// `bruhat_string_free`.
///
/// # Safety
/// `space` must point to a NUL-terminated string; `out` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn bruhat_tower_json(
    space: *const c_char,
    max_k: usize,
    budget: usize,
    out: *mut *mut c_char,
) -> BruhatStatus {
    guarded(|| {
        let name = match read_str(space) {
            Ok(s) => s.to_string(),
            Err(s) => return s,
        };
        json_command(CommandKind::Tower { space: name, max_k }, budget, out)
    })
}

/// Writes the stable orthogonal group in degree `k` (for example `C2` or
/// `Z`) as a NUL-terminated string into `buf`.
///
/// # Safety
/// `buf` must point to at least `buf_len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn bruhat_bott_group(
    k: usize,
    buf: *mut c_char,
    buf_len: usize,
) -> BruhatStatus {
    guarded(|| {
        if buf.is_null() {
            return fail(BruhatStatus::NullArgument, "output buffer is null");
        }
        let rendered = homotopy::bott_pi_o(k).to_string();
        let bytes = rendered.as_bytes();
        if buf_len < bytes.len() + 1 {
            return fail(
                BruhatStatus::BufferTooSmall,
                &format!("buffer holds {buf_len} bytes, {} needed", bytes.len() + 1),
            );
        }
        std::ptr::copy_nonoverlapping(bytes.as_ptr(), buf as *mut u8, bytes.len());
        *buf.add(bytes.len()) = 0;
        BruhatStatus::Ok
    })
}

/// Releases a string returned through a `char **` output. Null is
/// accepted and ignored.
///
/// # Safety
/// `s` must be null or a string returned by this library that has not
/// been freed yet.
#[no_mangle]
pub unsafe extern "C" fn bruhat_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
