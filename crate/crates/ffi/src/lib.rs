//! C ABI for quadcycle.
//!
//! Decompositions cross the boundary as opaque `QcDecomposition` handles.
//! Every fallible call returns a `QcStatus` and writes its result through an
//! out-pointer. Handles are released with `qc_decomposition_free`, strings
//! with `qc_string_free`.

#![allow(clippy::missing_safety_doc)]

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use quadcycle::assembly;
use quadcycle::cli::{parse_decomposition, write_decomposition};
use quadcycle::constructions;
use quadcycle::seeds;
use quadcycle::verify::{self, SolveLimits, Verdict};
use quadcycle::{Decomposition, Error};

/// Opaque decomposition handle.
pub struct QcDecomposition {
    inner: Decomposition,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Inadmissible = 3,
    Parse = 4,
    OutOfRange = 5,
    Utf8 = 6,
    Internal = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QcVerdict {
    Pass = 0,
    Fail = 1,
    Indeterminate = 2,
}

impl From<Verdict> for QcVerdict {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::Pass => QcVerdict::Pass,
            Verdict::Fail => QcVerdict::Fail,
            Verdict::Indeterminate => QcVerdict::Indeterminate,
        }
    }
}

fn status_of(e: &Error) -> QcStatus {
    match e {
        Error::Parse { .. } => QcStatus::Parse,
        Error::Inadmissible(_) | Error::GammaNeedsLargerEll(_) | Error::ZeroEll => {
            QcStatus::Inadmissible
        }
        Error::VertexOutOfRange { .. } | Error::LabelOutOfRange { .. } => QcStatus::OutOfRange,
        _ => QcStatus::InvalidArgument,
    }
}

fn guard(f: impl FnOnce() -> QcStatus) -> QcStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(QcStatus::Internal)
}

unsafe fn emit(
    out: *mut *mut QcDecomposition,
    built: impl FnOnce() -> quadcycle::Result<Decomposition>,
) -> QcStatus {
    if out.is_null() {
        return QcStatus::NullPointer;
    }
    guard(|| match built() {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(QcDecomposition { inner }));
            QcStatus::Ok
        }
        Err(e) => status_of(&e),
    })
}

unsafe fn handle<'a>(d: *const QcDecomposition) -> Option<&'a Decomposition> {
    d.as_ref().map(|h| &h.inner)
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn qc_status_message(status: QcStatus) -> *const c_char {
    let msg: &'static CStr = match status {
        QcStatus::Ok => c"ok",
        QcStatus::NullPointer => c"null pointer argument",
        QcStatus::InvalidArgument => c"invalid argument",
        QcStatus::Inadmissible => c"inadmissible parameters",
        QcStatus::Parse => c"malformed decomposition text",
        QcStatus::OutOfRange => c"index out of range",
        QcStatus::Utf8 => c"text is not valid UTF-8",
        QcStatus::Internal => c"internal error",
    };
    msg.as_ptr()
}

/// 4-cycle system of order `n` (`n = 1 mod 8`, `n >= 49`).
#[no_mangle]
pub unsafe extern "C" fn qc_build_k4cs(n: usize, out: *mut *mut QcDecomposition) -> QcStatus {
    emit(out, || assembly::build_k4cs(n))
}

/// Cocktail party decomposition of even order `n >= 50`.
#[no_mangle]
pub unsafe extern "C" fn qc_build_cocktail(n: usize, out: *mut *mut QcDecomposition) -> QcStatus {
    emit(out, || assembly::build_cocktail(n))
}

/// Cocktail party decomposition of order `8h + 2t`.
#[no_mangle]
pub unsafe extern "C" fn qc_build_cocktail_with(
    h: usize,
    t: usize,
    out: *mut *mut QcDecomposition,
) -> QcStatus {
    emit(out, || assembly::build_cocktail_with(h, t))
}

/// Anchored seed; `t = 0` gives the K9 seed.
#[no_mangle]
pub unsafe extern "C" fn qc_build_seed(t: usize, out: *mut *mut QcDecomposition) -> QcStatus {
    emit(out, || match t {
        0 => Ok(seeds::k9_seed().decomposition()),
        t => seeds::cocktail_seed(t).map(|s| s.decomposition()),
    })
}

/// Exclusively alt-colourable decomposition with `len` parts of sizes
/// `4 * ells[i]`.
#[no_mangle]
pub unsafe extern "C" fn qc_build_exclusively_alt(
    ells: *const usize,
    len: usize,
    out: *mut *mut QcDecomposition,
) -> QcStatus {
    if ells.is_null() {
        return QcStatus::NullPointer;
    }
    let ells = std::slice::from_raw_parts(ells, len).to_vec();
    emit(out, || constructions::exclusively_alt(&ells))
}

/// Parses the text format (NUL-terminated UTF-8).
#[no_mangle]
pub unsafe extern "C" fn qc_parse(text: *const c_char, out: *mut *mut QcDecomposition) -> QcStatus {
    if text.is_null() {
        return QcStatus::NullPointer;
    }
    let Ok(text) = CStr::from_ptr(text).to_str() else {
        return QcStatus::Utf8;
    };
    emit(out, || parse_decomposition(text))
}

/// Writes the text format; free the result with `qc_string_free`.
#[no_mangle]
pub unsafe extern "C" fn qc_to_text(d: *const QcDecomposition, out: *mut *mut c_char) -> QcStatus {
    let (Some(d), false) = (handle(d), out.is_null()) else {
        return QcStatus::NullPointer;
    };
    guard(|| {
        let text = CString::new(write_decomposition(d)).expect("no interior NUL");
        *out = text.into_raw();
        QcStatus::Ok
    })
}

#[no_mangle]
pub unsafe extern "C" fn qc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[no_mangle]
pub unsafe extern "C" fn qc_decomposition_free(d: *mut QcDecomposition) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Vertex count, or 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn qc_vertex_count(d: *const QcDecomposition) -> usize {
    handle(d).map_or(0, Decomposition::vertex_count)
}

/// Cycle count, or 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn qc_cycle_count(d: *const QcDecomposition) -> usize {
    handle(d).map_or(0, Decomposition::len)
}

/// Copies cycle `index` (canonical form) into `out[0..4]`.
#[no_mangle]
pub unsafe extern "C" fn qc_get_cycle(
    d: *const QcDecomposition,
    index: usize,
    out: *mut usize,
) -> QcStatus {
    let (Some(d), false) = (handle(d), out.is_null()) else {
        return QcStatus::NullPointer;
    };
    match d.cycles().get(index) {
        Some(c) => {
            std::ptr::copy_nonoverlapping(c.vertices().as_ptr(), out, 4);
            QcStatus::Ok
        }
        None => QcStatus::OutOfRange,
    }
}

/// Sets `*out` to whether every host edge lies in exactly one cycle.
#[no_mangle]
pub unsafe extern "C" fn qc_exact_cover(d: *const QcDecomposition, out: *mut bool) -> QcStatus {
    let (Some(d), false) = (handle(d), out.is_null()) else {
        return QcStatus::NullPointer;
    };
    guard(|| {
        *out = verify::is_exact_cover(d);
        QcStatus::Ok
    })
}

/// Unique 2-colourability certificate; `node_limit = 0` uses the default.
#[no_mangle]
pub unsafe extern "C" fn qc_uniquely_2colourable(
    d: *const QcDecomposition,
    node_limit: u64,
    out: *mut QcVerdict,
) -> QcStatus {
    let (Some(d), false) = (handle(d), out.is_null()) else {
        return QcStatus::NullPointer;
    };
    let limit = if node_limit == 0 {
        verify::DEFAULT_NODE_LIMIT
    } else {
        node_limit
    };
    guard(|| {
        *out = verify::is_uniquely_2colourable(d, limit).verdict.into();
        QcStatus::Ok
    })
}

/// Counts proper 2-colourings; `*complete` is false if the node limit was
/// reached first. `node_limit = 0` uses the default.
#[no_mangle]
pub unsafe extern "C" fn qc_count_colourings(
    d: *const QcDecomposition,
    node_limit: u64,
    count: *mut u64,
    complete: *mut bool,
) -> QcStatus {
    let (Some(d), false, false) = (handle(d), count.is_null(), complete.is_null()) else {
        return QcStatus::NullPointer;
    };
    let limit = if node_limit == 0 {
        verify::DEFAULT_NODE_LIMIT
    } else {
        node_limit
    };
    guard(
        || match verify::enumerate_2colourings(d, &[], SolveLimits::with_node_limit(limit)) {
            Ok(o) => {
                *count = o.models.len() as u64;
                *complete = o.complete;
                QcStatus::Ok
            }
            Err(e) => status_of(&e),
        },
    )
}
