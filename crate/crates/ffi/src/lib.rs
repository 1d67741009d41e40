//! C ABI for `levelrsk`.
//!
//! Documents cross the boundary as opaque [`LrskDocument`] handles built from
//! and rendered to the JSON document format. Every fallible call returns an
//! [`LrskStatus`]; on failure [`lrsk_last_error`] describes what went wrong on
//! the calling thread. Strings returned through `char **` must be released
//! with [`lrsk_string_free`], handles with [`lrsk_document_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use levelrsk::document::{self, Document, Kind};
use levelrsk::enumerate::{self, EnumerationBudget};
use levelrsk::{verify, Error};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LrskStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Invalid = 4,
    Unsupported = 5,
    VerificationFailed = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LrskKind {
    Multicomposition = 0,
    Multipartition = 1,
    Parmat = 2,
    Bcm = 3,
    FlaggedBiword = 4,
    TableauPair = 5,
    Multitableau = 6,
}

impl From<Kind> for LrskKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::MultiComposition => LrskKind::Multicomposition,
            Kind::MultiPartition => LrskKind::Multipartition,
            Kind::ParMat => LrskKind::Parmat,
            Kind::Bcm => LrskKind::Bcm,
            Kind::FlaggedBiword => LrskKind::FlaggedBiword,
            Kind::TableauPair => LrskKind::TableauPair,
            Kind::Multitableau => LrskKind::Multitableau,
        }
    }
}

impl From<LrskKind> for Kind {
    fn from(k: LrskKind) -> Self {
        match k {
            LrskKind::Multicomposition => Kind::MultiComposition,
            LrskKind::Multipartition => Kind::MultiPartition,
            LrskKind::Parmat => Kind::ParMat,
            LrskKind::Bcm => Kind::Bcm,
            LrskKind::FlaggedBiword => Kind::FlaggedBiword,
            LrskKind::TableauPair => Kind::TableauPair,
            LrskKind::Multitableau => Kind::Multitableau,
        }
    }
}

/// A parsed, validated document.
pub struct LrskDocument {
    doc: Document,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn fail(status: LrskStatus, msg: impl Into<String>) -> LrskStatus {
    set_error(msg);
    status
}

fn status_of(e: &Error) -> LrskStatus {
    match e {
        Error::Parse(_) => LrskStatus::Parse,
        Error::Unsupported { .. } => LrskStatus::Unsupported,
        _ => LrskStatus::Invalid,
    }
}

fn from_error(e: Error) -> LrskStatus {
    fail(status_of(&e), e.to_string())
}

/// Runs `f`, turning a panic into [`LrskStatus::Panic`].
fn guard(f: impl FnOnce() -> LrskStatus) -> LrskStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => fail(LrskStatus::Panic, "internal panic"),
    }
}

unsafe fn document<'a>(handle: *const LrskDocument) -> Option<&'a Document> {
    handle.as_ref().map(|h| &h.doc)
}

unsafe fn emit_document(out: *mut *mut LrskDocument, doc: Document) {
    *out = Box::into_raw(Box::new(LrskDocument { doc }));
}

unsafe fn emit_string(out: *mut *mut c_char, s: String) -> LrskStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            LrskStatus::Ok
        }
        Err(_) => fail(LrskStatus::Panic, "output contains a NUL byte"),
    }
}

/// Message for the most recent failure on this thread, or NULL. The pointer
/// stays valid until the next `lrsk_*` call on the same thread.
#[no_mangle]
pub extern "C" fn lrsk_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn lrsk_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lrsk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `doc` must be NULL or a handle returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lrsk_document_free(doc: *mut LrskDocument) {
    if !doc.is_null() {
        drop(Box::from_raw(doc));
    }
}

/// Parses and validates a JSON document.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lrsk_document_parse(
    text: *const c_char,
    out: *mut *mut LrskDocument,
) -> LrskStatus {
    guard(|| {
        if text.is_null() || out.is_null() {
            return fail(LrskStatus::NullPointer, "null argument");
        }
        let Ok(text) = CStr::from_ptr(text).to_str() else {
            return fail(LrskStatus::InvalidUtf8, "input is not UTF-8");
        };
        match document::parse(text) {
            Ok(doc) => {
                emit_document(out, doc);
                LrskStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Canonical multi-line JSON for `doc`.
///
/// # Safety
/// `doc` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lrsk_document_serialize(
    doc: *const LrskDocument,
    out: *mut *mut c_char,
) -> LrskStatus {
    guard(|| {
        let (Some(doc), false) = (document(doc), out.is_null()) else {
            return fail(LrskStatus::NullPointer, "null argument");
        };
        emit_string(out, document::serialize(doc))
    })
}

/// # Safety
/// `doc` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lrsk_document_kind(
    doc: *const LrskDocument,
    out: *mut LrskKind,
) -> LrskStatus {
    guard(|| {
        let (Some(doc), false) = (document(doc), out.is_null()) else {
            return fail(LrskStatus::NullPointer, "null argument");
        };
        *out = doc.kind().into();
        LrskStatus::Ok
    })
}

/// # Safety
/// `doc` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lrsk_document_level(
    doc: *const LrskDocument,
    out: *mut usize,
) -> LrskStatus {
    guard(|| {
        let (Some(doc), false) = (document(doc), out.is_null()) else {
            return fail(LrskStatus::NullPointer, "null argument");
        };
        *out = doc.level();
        LrskStatus::Ok
    })
}

unsafe fn transform(
    doc: *const LrskDocument,
    from: Option<Kind>,
    to: Kind,
    out: *mut *mut LrskDocument,
) -> LrskStatus {
    guard(|| {
        let (Some(doc), false) = (document(doc), out.is_null()) else {
            return fail(LrskStatus::NullPointer, "null argument");
        };
        if let Some(k) = from {
            if doc.kind() != k {
                return fail(
                    LrskStatus::Unsupported,
                    format!("expected a {k} document, got {}", doc.kind()),
                );
            }
        }
        match document::convert(doc, to) {
            Ok(x) => {
                emit_document(out, x);
                LrskStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// The correspondence: a parmat document to its tableau pair.
///
/// # Safety
/// `parmat` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lrsk_forward(
    parmat: *const LrskDocument,
    out: *mut *mut LrskDocument,
) -> LrskStatus {
    transform(parmat, Some(Kind::ParMat), Kind::TableauPair, out)
}

/// Inverse of [`lrsk_forward`].
///
/// # Safety
/// `pair` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lrsk_inverse(
    pair: *const LrskDocument,
    out: *mut *mut LrskDocument,
) -> LrskStatus {
    transform(pair, Some(Kind::TableauPair), Kind::ParMat, out)
}

/// Moves `doc` along parmat, bcm, flagged-biword, tableau-pair to `to`.
///
/// # Safety
/// `doc` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lrsk_convert(
    doc: *const LrskDocument,
    to: LrskKind,
    out: *mut *mut LrskDocument,
) -> LrskStatus {
    transform(doc, None, to.into(), out)
}

unsafe fn multicomposition<'a>(
    doc: *const LrskDocument,
) -> Result<&'a levelrsk::MultiComposition, LrskStatus> {
    match document(doc) {
        Some(Document::MultiComposition(x)) => Ok(x),
        Some(other) => Err(fail(
            LrskStatus::Unsupported,
            format!("expected a multicomposition document, got {}", other.kind()),
        )),
        None => Err(fail(LrskStatus::NullPointer, "null argument")),
    }
}

/// Number of parmat elements with row sums `nu` and column sums `mu`, both
/// multicomposition documents.
///
/// # Safety
/// `nu` and `mu` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lrsk_count_parmat(
    nu: *const LrskDocument,
    mu: *const LrskDocument,
    out: *mut u64,
) -> LrskStatus {
    guard(|| {
        if out.is_null() {
            return fail(LrskStatus::NullPointer, "null argument");
        }
        let (nu, mu) = match (multicomposition(nu), multicomposition(mu)) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(s), _) | (_, Err(s)) => return s,
        };
        match enumerate::enum_parmat(nu, mu) {
            Ok(v) => {
                *out = v.len() as u64;
                LrskStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Number of flagged semistandard multitableaux of shape `shape` (a
/// multipartition document) and content `mu`.
///
/// # Safety
/// `shape` and `mu` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lrsk_count_sst(
    shape: *const LrskDocument,
    mu: *const LrskDocument,
    out: *mut u64,
) -> LrskStatus {
    guard(|| {
        if out.is_null() {
            return fail(LrskStatus::NullPointer, "null argument");
        }
        let lambda = match document(shape) {
            Some(Document::MultiPartition(x)) => x,
            Some(other) => {
                return fail(
                    LrskStatus::Unsupported,
                    format!("expected a multipartition document, got {}", other.kind()),
                )
            }
            None => return fail(LrskStatus::NullPointer, "null argument"),
        };
        let mu = match multicomposition(mu) {
            Ok(x) => x,
            Err(s) => return s,
        };
        *out = enumerate::enum_sst(lambda, mu).len() as u64;
        LrskStatus::Ok
    })
}

/// Runs the exhaustive verification within the given budget and writes the
/// JSON report to `report` (also on verification failure).
///
/// # Safety
/// `report` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lrsk_verify(
    max_n: u32,
    max_level: usize,
    max_parts: usize,
    report: *mut *mut c_char,
) -> LrskStatus {
    guard(|| {
        if report.is_null() {
            return fail(LrskStatus::NullPointer, "null argument");
        }
        let budget = match EnumerationBudget::new(max_n, max_level, max_parts) {
            Ok(b) => b,
            Err(e) => return from_error(e),
        };
        let rep = verify::verify_all(&budget);
        let Ok(json) = levelrsk::verify::report_json(&rep) else {
            return fail(LrskStatus::Panic, "report serialization failed");
        };
        let status = emit_string(report, json);
        if status != LrskStatus::Ok {
            return status;
        }
        if rep.is_clean() {
            LrskStatus::Ok
        } else {
            fail(
                LrskStatus::VerificationFailed,
                format!("{} failed checks", rep.total_failed()),
            )
        }
    })
}
