use std::ffi::{CStr, CString};
use std::ptr;

use saxl_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(saxl_last_error()) }.to_str().unwrap().to_string()
}

#[test]
fn sn_table_round_trip() {
    let mut t = ptr::null_mut();
    assert_eq!(unsafe { saxl_sn_table_new(5, &mut t) }, SaxlStatus::Ok);
    assert!(!t.is_null());
    let k = unsafe { saxl_sn_table_size(t) };
    assert_eq!(k, 7);
    let mut dim_sq = 0i64;
    for row in 0..k {
        let label = unsafe { CStr::from_ptr(saxl_sn_table_label(t, row)) }.to_str().unwrap().to_string();
        assert!(!label.is_empty());
        let mut v = 0i64;
        // identity class is the one labelled 1^n
        let id = (0..k)
            .find(|&j| unsafe { CStr::from_ptr(saxl_sn_table_label(t, j)) }.to_str().unwrap() == "1,1,1,1,1")
            .unwrap();
        assert_eq!(unsafe { saxl_sn_table_value(t, row, id, &mut v) }, SaxlStatus::Ok);
        dim_sq += v * v;
    }
    assert_eq!(dim_sq, 120);
    let mut v = 0i64;
    assert_eq!(unsafe { saxl_sn_table_value(t, k, 0, &mut v) }, SaxlStatus::OutOfRange);
    assert!(!last_error().is_empty());
    assert!(unsafe { saxl_sn_table_label(t, k) }.is_null());
    unsafe { saxl_sn_table_free(t) };
    unsafe { saxl_sn_table_free(ptr::null_mut()) };
}

#[test]
fn null_and_range_errors() {
    assert_eq!(unsafe { saxl_sn_table_new(4, ptr::null_mut()) }, SaxlStatus::NullPointer);
    let mut t = ptr::null_mut();
    assert_eq!(unsafe { saxl_sn_table_new(0, &mut t) }, SaxlStatus::OutOfRange);
    assert!(t.is_null());
    assert_eq!(unsafe { saxl_sn_table_size(ptr::null()) }, 0);
    let mut out = 0u64;
    assert_eq!(unsafe { saxl_lr_coeff(ptr::null(), ptr::null(), ptr::null(), &mut out) }, SaxlStatus::NullPointer);
}

#[test]
fn coefficients() {
    let mut out = 0u64;
    let st = unsafe { saxl_lr_coeff(c("2,1").as_ptr(), c("2,1").as_ptr(), c("3,2,1").as_ptr(), &mut out) };
    assert_eq!(st, SaxlStatus::Ok);
    assert_eq!(out, 2);
    assert_eq!(last_error(), "");
    let st = unsafe { saxl_kronecker(c("2,1").as_ptr(), c("2,1").as_ptr(), c("2,1").as_ptr(), &mut out) };
    assert_eq!(st, SaxlStatus::Ok);
    assert_eq!(out, 1);
    let st = unsafe { saxl_kronecker(c("2,1").as_ptr(), c("3,1").as_ptr(), c("2,1").as_ptr(), &mut out) };
    assert_ne!(st, SaxlStatus::Ok);
    let st = unsafe { saxl_lr_coeff(c("2,x").as_ptr(), c("1").as_ptr(), c("3").as_ptr(), &mut out) };
    assert_eq!(st, SaxlStatus::Parse);
    assert!(!last_error().is_empty());
}

fn run(args: &[&str], json: i32) -> (SaxlStatus, *mut SaxlReport) {
    let owned: Vec<CString> = args.iter().map(|a| c(a)).collect();
    let ptrs: Vec<_> = owned.iter().map(|a| a.as_ptr()).collect();
    let mut r = ptr::null_mut();
    let st = unsafe { saxl_run(ptrs.as_ptr(), ptrs.len(), json, &mut r) };
    (st, r)
}

#[test]
fn run_command_reports() {
    let (st, r) = run(&["--no-cache", "exceptional", "--group", "G2", "--verify-appendix"], 1);
    assert_eq!(st, SaxlStatus::Ok);
    assert_eq!(unsafe { saxl_report_passed(r) }, 1);
    let text = unsafe { CStr::from_ptr(saxl_report_text(r)) }.to_str().unwrap().to_string();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["passed"], true);
    unsafe { saxl_report_free(r) };

    let (st, r) = run(&["--no-cache", "check-a", "--k", "2"], 0);
    assert_eq!(st, SaxlStatus::Ok);
    let text = unsafe { CStr::from_ptr(saxl_report_text(r)) }.to_str().unwrap().to_string();
    assert!(text.contains("all checks passed"));
    unsafe { saxl_report_free(r) };
}

#[test]
fn run_rejects_bad_arguments() {
    let (st, r) = run(&["no-such-command"], 0);
    assert_eq!(st, SaxlStatus::InvalidArgument);
    assert!(r.is_null());
    let (st, _) = run(&["--no-cache", "exceptional", "--group", "Z9"], 0);
    assert_ne!(st, SaxlStatus::Ok);
    assert!(!last_error().is_empty());
    assert!(unsafe { saxl_report_text(ptr::null()) }.is_null());
    assert_eq!(unsafe { saxl_report_passed(ptr::null()) }, 0);
}

#[test]
fn version_string() {
    let v = unsafe { CStr::from_ptr(saxl_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/saxl.h")).unwrap();
    for name in [
        "saxl_last_error",
        "saxl_version",
        "saxl_sn_table_new",
        "saxl_sn_table_free",
        "saxl_sn_table_size",
        "saxl_sn_table_label",
        "saxl_sn_table_value",
        "saxl_lr_coeff",
        "saxl_kronecker",
        "saxl_run",
        "saxl_report_passed",
        "saxl_report_text",
        "saxl_report_free",
        "SAXL_STATUS_OK",
        "typedef struct SaxlSnTable SaxlSnTable",
        "typedef struct SaxlReport SaxlReport",
    ] {
        assert!(header.contains(name), "{name} missing from saxl.h");
    }
}
