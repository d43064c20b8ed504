//! Drives the C interface through raw pointers, the way a C caller
//! would, including the error paths.

use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::ptr;

use bruhat_capi::*;

fn make(name: &str) -> *mut BruhatGcm {
    let cname = CString::new(name).unwrap();
    let mut handle: *mut BruhatGcm = ptr::null_mut();
    let status = unsafe { bruhat_gcm_from_name(cname.as_ptr(), &mut handle) };
    assert_eq!(status, BruhatStatus::Ok, "creating {name}");
    assert!(!handle.is_null());
    handle
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(bruhat_last_error_message()) }
        .to_str()
        .unwrap()
        .to_string()
}

#[test]
fn handles_report_rank_and_finite_type() {
    let e8 = make("E8");
    let e9 = make("E9");
    unsafe {
        let mut rank = 0usize;
        assert_eq!(bruhat_gcm_rank(e8, &mut rank), BruhatStatus::Ok);
        assert_eq!(rank, 8);
        let mut finite = false;
        assert_eq!(bruhat_gcm_is_finite_type(e8, &mut finite), BruhatStatus::Ok);
        assert!(finite);
        assert_eq!(bruhat_gcm_is_finite_type(e9, &mut finite), BruhatStatus::Ok);
        assert!(!finite);
        bruhat_gcm_free(e8);
        bruhat_gcm_free(e9);
    }
}

#[test]
fn growth_series_matches_known_values() {
    let e8 = make("E8");
    let mut out = [0u64; 11];
    let status =
        unsafe { bruhat_growth_series(e8, 10, 10_000_000, out.as_mut_ptr(), out.len()) };
    assert_eq!(status, BruhatStatus::Ok);
    assert_eq!(
        out,
        [1, 8, 35, 112, 294, 672, 1386, 2640, 4718, 8000, 12978]
    );
    unsafe { bruhat_gcm_free(e8) };
}

#[test]
fn coset_sizes_use_one_based_nodes() {
    let e9 = make("E9");
    let sub: Vec<u32> = (1..=8).collect();
    let mut out = [0u64; 9];
    let status = unsafe {
        bruhat_coset_level_sizes(
            e9,
            sub.as_ptr(),
            sub.len(),
            8,
            10_000_000,
            out.as_mut_ptr(),
            out.len(),
        )
    };
    assert_eq!(status, BruhatStatus::Ok);
    assert_eq!(out, [1, 1, 1, 1, 1, 1, 1, 2, 2]);
    // node 0 is rejected: numbering starts at 1
    let bad = [0u32];
    let status = unsafe {
        bruhat_coset_level_sizes(e9, bad.as_ptr(), 1, 2, 10_000_000, out.as_mut_ptr(), out.len())
    };
    assert_eq!(status, BruhatStatus::InvalidArgument);
    assert!(last_error().contains("1-based"));
    unsafe { bruhat_gcm_free(e9) };
}

#[test]
fn cell_counts_apply_covers() {
    let a3 = make("A3");
    let sub = [1u32, 2u32];
    let mut out = [0u64; 4];
    let status = unsafe {
        bruhat_cell_counts(a3, sub.as_ptr(), 2, 3, 2, 10_000_000, out.as_mut_ptr(), out.len())
    };
    assert_eq!(status, BruhatStatus::Ok);
    assert_eq!(out, [2, 2, 2, 2]);
    // zero sheets is rejected before any computation
    let status = unsafe {
        bruhat_cell_counts(a3, sub.as_ptr(), 2, 3, 0, 10_000_000, out.as_mut_ptr(), out.len())
    };
    assert_eq!(status, BruhatStatus::InvalidArgument);
    unsafe { bruhat_gcm_free(a3) };
}

#[test]
fn compare_reports_the_e9_divergence() {
    let e9 = make("E9");
    let a8 = make("A8");
    let left_sub: Vec<u32> = (1..=8).collect();
    let right_sub: Vec<u32> = (1..=7).collect();
    let mut cmp = BruhatComparison {
        matched_through: 0,
        diverge_at: 0,
        used_subdiagrams_isomorphic: true,
        agreement_depth: 0,
    };
    let status = unsafe {
        bruhat_compare(
            e9,
            left_sub.as_ptr(),
            left_sub.len(),
            a8,
            right_sub.as_ptr(),
            right_sub.len(),
            8,
            10_000_000,
            &mut cmp,
        )
    };
    assert_eq!(status, BruhatStatus::Ok);
    assert_eq!(cmp.matched_through, -1);
    assert_eq!(cmp.diverge_at, 7);
    assert!(!cmp.used_subdiagrams_isomorphic);
    assert_eq!(cmp.agreement_depth, 6);
    unsafe {
        bruhat_gcm_free(e9);
        bruhat_gcm_free(a8);
    }
}

#[test]
fn json_reports_round_trip_through_c_strings() {
    let mut s: *mut c_char = ptr::null_mut();
    let status = unsafe { bruhat_en_profile_json(10, 6, 10_000_000, &mut s) };
    assert_eq!(status, BruhatStatus::Ok);
    let json = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { bruhat_string_free(s) };
    assert!(json.contains("\"schema\": 1"));
    assert!(json.contains("\"space\": \"K(E10)\""));
    assert!(json.contains("exact-sequence sandwich"));

    let space = CString::new("O(16)").unwrap();
    let mut t: *mut c_char = ptr::null_mut();
    let status = unsafe { bruhat_tower_json(space.as_ptr(), 6, 10_000_000, &mut t) };
    assert_eq!(status, BruhatStatus::Ok);
    let json = unsafe { CStr::from_ptr(t) }.to_str().unwrap().to_string();
    unsafe { bruhat_string_free(t) };
    assert!(json.contains("\"final_space\": \"String(16)\""));
}

#[test]
fn bott_groups_fit_or_fail_cleanly() {
    let mut buf = [0 as c_char; 8];
    assert_eq!(
        unsafe { bruhat_bott_group(3, buf.as_mut_ptr(), buf.len()) },
        BruhatStatus::Ok
    );
    let s = unsafe { CStr::from_ptr(buf.as_ptr()) }.to_str().unwrap();
    assert_eq!(s, "Z");
    assert_eq!(
        unsafe { bruhat_bott_group(8, buf.as_mut_ptr(), buf.len()) },
        BruhatStatus::Ok
    );
    let s = unsafe { CStr::from_ptr(buf.as_ptr()) }.to_str().unwrap();
    assert_eq!(s, "C2");
    // a 2-byte buffer cannot hold "C2" plus the terminator
    assert_eq!(
        unsafe { bruhat_bott_group(8, buf.as_mut_ptr(), 2) },
        BruhatStatus::BufferTooSmall
    );
    assert!(last_error().contains("3 needed"));
}

#[test]
fn null_and_malformed_arguments_are_reported() {
    let mut handle: *mut BruhatGcm = ptr::null_mut();
    assert_eq!(
        unsafe { bruhat_gcm_from_name(ptr::null(), &mut handle) },
        BruhatStatus::NullArgument
    );
    let bad = CString::new("Q5").unwrap();
    assert_eq!(
        unsafe { bruhat_gcm_from_name(bad.as_ptr(), &mut handle) },
        BruhatStatus::InvalidArgument
    );
    assert!(last_error().contains("Q5"));
    let invalid_utf8: [c_char; 2] = [-1, 0];
    assert_eq!(
        unsafe { bruhat_gcm_from_name(invalid_utf8.as_ptr(), &mut handle) },
        BruhatStatus::InvalidUtf8
    );
    // freeing null is a no-op
    unsafe {
        bruhat_gcm_free(ptr::null_mut());
        bruhat_string_free(ptr::null_mut());
    }
}

#[test]
fn parse_text_validates_the_matrix() {
    let good = CString::new("2\n2 -1\n-1 2\n").unwrap();
    let mut handle: *mut BruhatGcm = ptr::null_mut();
    assert_eq!(
        unsafe { bruhat_gcm_parse_text(good.as_ptr(), &mut handle) },
        BruhatStatus::Ok
    );
    let mut rank = 0usize;
    unsafe {
        assert_eq!(bruhat_gcm_rank(handle, &mut rank), BruhatStatus::Ok);
        bruhat_gcm_free(handle);
    }
    assert_eq!(rank, 2);
    // a positive off-diagonal entry is a validation failure, not a parse
    // failure
    let invalid = CString::new("2\n2 1\n1 2\n").unwrap();
    assert_eq!(
        unsafe { bruhat_gcm_parse_text(invalid.as_ptr(), &mut handle) },
        BruhatStatus::DomainError
    );
}

#[test]
fn budget_exhaustion_has_its_own_status() {
    let e9 = make("E9");
    let mut out = [0u64; 9];
    let status = unsafe { bruhat_growth_series(e9, 8, 10, out.as_mut_ptr(), out.len()) };
    assert_eq!(status, BruhatStatus::BudgetExceeded);
    assert!(last_error().contains("budget"));
    unsafe { bruhat_gcm_free(e9) };
}

#[test]
fn buffers_shorter_than_the_series_are_rejected() {
    let a2 = make("A2");
    let mut out = [0u64; 2];
    let status = unsafe { bruhat_growth_series(a2, 3, 1000, out.as_mut_ptr(), out.len()) };
    assert_eq!(status, BruhatStatus::BufferTooSmall);
    unsafe { bruhat_gcm_free(a2) };
}

#[test]
fn generated_header_declares_the_full_surface() {
    let header = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/include/bruhat.h"
    ))
    .expect("header generated at build time");
    for symbol in [
        "bruhat_last_error_message",
        "bruhat_gcm_from_name",
        "bruhat_gcm_parse_text",
        "bruhat_gcm_free",
        "bruhat_gcm_rank",
        "bruhat_gcm_is_finite_type",
        "bruhat_growth_series",
        "bruhat_coset_level_sizes",
        "bruhat_cell_counts",
        "bruhat_compare",
        "bruhat_en_profile_json",
        "bruhat_tower_json",
        "bruhat_bott_group",
        "bruhat_string_free",
        "BRUHAT_STATUS_BUDGET_EXCEEDED",
        "BruhatComparison",
    ] {
        assert!(header.contains(symbol), "header is missing {symbol}");
    }
}
