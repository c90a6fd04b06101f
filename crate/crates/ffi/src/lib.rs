//! C ABI for saxl-core.
//!
//! Every fallible function returns a [`SaxlStatus`]; on failure the message
//! is available from [`saxl_last_error`] on the same thread. Handles are
//! opaque and must be released with their `_free` function. Strings
//! returned by the library stay valid until the owning handle is freed.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use saxl_core::cli::{render, Cli, Format};
use saxl_core::partition::{lr_coeff, Partition};
use saxl_core::report::Report;
use saxl_core::symmetric::{kronecker_mult, SnCharTable};
use saxl_core::Error;

use clap::Parser;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SaxlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    BoundExceeded = 4,
    Unsupported = 5,
    Mismatch = 6,
    OutOfRange = 7,
    Internal = 8,
}

/// Character table of a symmetric group.
pub struct SaxlSnTable {
    table: SnCharTable,
    labels: Vec<CString>,
}

/// Result of a CLI-style run: rendered output and pass/fail.
pub struct SaxlReport {
    passed: bool,
    text: CString,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> SaxlStatus {
    match e {
        Error::Parse(_) | Error::InvalidPartition(_) | Error::InvalidOrbit(_) => SaxlStatus::Parse,
        Error::BoundExceeded { .. } | Error::GroupTooLarge { .. } => SaxlStatus::BoundExceeded,
        Error::UnsupportedGroup(_) | Error::PsiNotImplemented(_) | Error::NotSpecial(_) => SaxlStatus::Unsupported,
        Error::Mismatch(_) | Error::LiftVerification(_) => SaxlStatus::Mismatch,
        Error::OutOfRange(_) => SaxlStatus::OutOfRange,
        Error::SizeMismatch(..) | Error::ParityMismatch { .. } | Error::OrbitMismatch(..) => {
            SaxlStatus::InvalidArgument
        }
        Error::Cache(_) | Error::Io(_) | Error::PrimeSelection(_) => SaxlStatus::Internal,
    }
}

fn fail(status: SaxlStatus, msg: &str) -> SaxlStatus {
    set_error(msg);
    status
}

fn guard<F: FnOnce() -> SaxlStatus>(f: F) -> SaxlStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => {
            if s == SaxlStatus::Ok {
                set_error("");
            }
            s
        }
        Err(_) => fail(SaxlStatus::Internal, "internal panic"),
    }
}

unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, SaxlStatus> {
    if p.is_null() {
        return Err(fail(SaxlStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(p).to_str().map_err(|_| fail(SaxlStatus::Parse, "argument is not UTF-8"))
}

unsafe fn partition_arg(p: *const c_char) -> Result<Partition, SaxlStatus> {
    let s = str_arg(p)?;
    s.parse::<Partition>().map_err(|e| fail(status_of(&e), &e.to_string()))
}

/// Message of the last failed call on this thread ("" after a success).
/// Valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn saxl_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn saxl_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Computes the character table of S_n.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn saxl_sn_table_new(n: u32, out: *mut *mut SaxlSnTable) -> SaxlStatus {
    guard(|| {
        if out.is_null() {
            return fail(SaxlStatus::NullPointer, "out is null");
        }
        if n == 0 || n > 30 {
            return fail(SaxlStatus::OutOfRange, "n must be in 1..=30");
        }
        let table = SnCharTable::compute(n as usize);
        let labels = table.labels.iter().map(|p| CString::new(p.to_string()).expect("no NUL")).collect();
        *out = Box::into_raw(Box::new(SaxlSnTable { table, labels }));
        SaxlStatus::Ok
    })
}

/// # Safety
/// `t` must be null or a handle from [`saxl_sn_table_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn saxl_sn_table_free(t: *mut SaxlSnTable) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Number of classes (= number of irreducibles), 0 for a null handle.
///
/// # Safety
/// `t` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn saxl_sn_table_size(t: *const SaxlSnTable) -> usize {
    t.as_ref().map_or(0, |t| t.labels.len())
}

/// Partition labelling row (and class) `i`, e.g. "3,2,1"; null when out of
/// range.
///
/// # Safety
/// `t` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn saxl_sn_table_label(t: *const SaxlSnTable, i: usize) -> *const c_char {
    match t.as_ref().and_then(|t| t.labels.get(i)) {
        Some(s) => s.as_ptr(),
        None => ptr::null(),
    }
}

/// χ^{row}(class col).
///
/// # Safety
/// `t` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn saxl_sn_table_value(
    t: *const SaxlSnTable,
    row: usize,
    col: usize,
    out: *mut i64,
) -> SaxlStatus {
    guard(|| {
        let (Some(t), false) = (t.as_ref(), out.is_null()) else {
            return fail(SaxlStatus::NullPointer, "null handle or out");
        };
        match t.table.rows.get(row).and_then(|r| r.get(col)) {
            Some(&v) => match i64::try_from(v) {
                Ok(v) => {
                    *out = v;
                    SaxlStatus::Ok
                }
                Err(_) => fail(SaxlStatus::OutOfRange, "value does not fit in 64 bits"),
            },
            None => fail(SaxlStatus::OutOfRange, "row or column out of range"),
        }
    })
}

/// Littlewood-Richardson coefficient c^gamma_{alpha, beta}. Partitions are
/// written "4,3,1" ("-" for empty).
///
/// # Safety
/// String arguments must be NUL-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn saxl_lr_coeff(
    alpha: *const c_char,
    beta: *const c_char,
    gamma: *const c_char,
    out: *mut u64,
) -> SaxlStatus {
    guard(|| {
        if out.is_null() {
            return fail(SaxlStatus::NullPointer, "out is null");
        }
        let (a, b, g) = match (partition_arg(alpha), partition_arg(beta), partition_arg(gamma)) {
            (Ok(a), Ok(b), Ok(g)) => (a, b, g),
            (Err(s), _, _) | (_, Err(s), _) | (_, _, Err(s)) => return s,
        };
        match lr_coeff(&a, &b, &g) {
            Ok(v) => {
                *out = v;
                SaxlStatus::Ok
            }
            Err(e) => fail(status_of(&e), &e.to_string()),
        }
    })
}

/// Kronecker coefficient <χ^λ χ^μ, χ^ν>.
///
/// # Safety
/// String arguments must be NUL-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn saxl_kronecker(
    lambda: *const c_char,
    mu: *const c_char,
    nu: *const c_char,
    out: *mut u64,
) -> SaxlStatus {
    guard(|| {
        if out.is_null() {
            return fail(SaxlStatus::NullPointer, "out is null");
        }
        let (l, m, n) = match (partition_arg(lambda), partition_arg(mu), partition_arg(nu)) {
            (Ok(a), Ok(b), Ok(g)) => (a, b, g),
            (Err(s), _, _) | (_, Err(s), _) | (_, _, Err(s)) => return s,
        };
        match kronecker_mult(&l, &m, &n) {
            Ok(v) => match u64::try_from(v) {
                Ok(v) => {
                    *out = v;
                    SaxlStatus::Ok
                }
                Err(_) => fail(SaxlStatus::OutOfRange, "coefficient does not fit in 64 bits"),
            },
            Err(e) => fail(status_of(&e), &e.to_string()),
        }
    })
}

/// Runs a `saxl` command given as an argument vector without the program
/// name, e.g. {"exceptional", "--group", "G2", "--verify-appendix"}. With
/// `json` nonzero the output is the JSON report stream, else markdown.
///
/// A command whose checks fail still returns `Ok`; query
/// [`saxl_report_passed`].
///
/// # Safety
/// `argv` must point to `argc` NUL-terminated strings; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn saxl_run(
    argv: *const *const c_char,
    argc: usize,
    json: i32,
    out: *mut *mut SaxlReport,
) -> SaxlStatus {
    guard(|| {
        if out.is_null() || (argv.is_null() && argc > 0) {
            return fail(SaxlStatus::NullPointer, "null argv or out");
        }
        let mut args = vec!["saxl".to_string()];
        for i in 0..argc {
            match str_arg(*argv.add(i)) {
                Ok(s) => args.push(s.to_string()),
                Err(s) => return s,
            }
        }
        let cli = match Cli::try_parse_from(&args) {
            Ok(c) => c,
            Err(e) => return fail(SaxlStatus::InvalidArgument, &e.to_string()),
        };
        let reports = match saxl_core::cli::run(&cli) {
            Ok(r) => r,
            Err(e) => return fail(status_of(&e), &e.to_string()),
        };
        let format = if json != 0 { Format::Json } else { Format::Markdown };
        let text = CString::new(render(&reports, format).replace('\0', " ")).expect("NUL removed");
        *out = Box::into_raw(Box::new(SaxlReport { passed: reports.iter().all(Report::passed), text }));
        SaxlStatus::Ok
    })
}

/// 1 when every check in the report passed, 0 otherwise (or for null).
///
/// # Safety
/// `r` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn saxl_report_passed(r: *const SaxlReport) -> i32 {
    r.as_ref().map_or(0, |r| r.passed as i32)
}

/// Rendered report text, owned by the handle.
///
/// # Safety
/// `r` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn saxl_report_text(r: *const SaxlReport) -> *const c_char {
    r.as_ref().map_or(ptr::null(), |r| r.text.as_ptr())
}

/// # Safety
/// `r` must be null or a handle from [`saxl_run`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn saxl_report_free(r: *mut SaxlReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}
