//! C ABI for the finite-surgery toolkit.
//!
//! Conventions: functions return a [`PsCode`]; outputs go through pointer
//! arguments. Ledgers are opaque handles created by [`ps_classify`] and
//! released with [`ps_ledger_free`]. Strings returned through `char**` are
//! NUL-terminated, UTF-8, and owned by the caller, who must release them
//! with [`ps_string_free`]. The generated header lives in
//! `include/pretzel_surgeon.h`.

use std::ffi::{c_char, CString};

use pretzel_surgeon::norm::{assemble_constraints, minimal_norm};
use pretzel_surgeon::pipeline::{classify, detection_evidence, ClassifyOptions, Conclusion, Ledger};
use pretzel_surgeon::slope::{KnotSpec, Slope};

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PsCode {
    Ok = 0,
    InvalidArgument = 1,
    NullPointer = 2,
    Internal = 3,
}

/// Conclusion of a classification run.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PsConclusion {
    NoNontrivialFinite = 0,
    Inconclusive = 1,
}

/// Opaque classification ledger.
pub struct PsLedger {
    inner: Ledger,
}

/// Intersection number of two slopes a/b and c/d.
///
/// # Safety
/// `out` must point to writable memory for one u64.
#[no_mangle]
pub unsafe extern "C" fn ps_slope_distance(
    a_num: i64,
    a_den: i64,
    b_num: i64,
    b_den: i64,
    out: *mut u64,
) -> PsCode {
    if out.is_null() {
        return PsCode::NullPointer;
    }
    let (Ok(a), Ok(b)) = (Slope::try_new(a_num, a_den), Slope::try_new(b_num, b_den)) else {
        return PsCode::InvalidArgument;
    };
    unsafe { *out = a.distance(&b) };
    PsCode::Ok
}

/// Minimal total norm S = 2pq - 3(p+q).
///
/// # Safety
/// `out` must point to writable memory for one i64.
#[no_mangle]
pub unsafe extern "C" fn ps_minimal_norm(p: i64, q: i64, out: *mut i64) -> PsCode {
    if out.is_null() {
        return PsCode::NullPointer;
    }
    let Ok(knot) = KnotSpec::new(p, q) else {
        return PsCode::InvalidArgument;
    };
    unsafe { *out = minimal_norm(knot) };
    PsCode::Ok
}

/// Exact minimum of the norm of slope num/den over the feasible
/// coefficient vectors of the knot's detection-backed model.
///
/// # Safety
/// `out` must point to writable memory for one i64.
#[no_mangle]
pub unsafe extern "C" fn ps_min_slope_norm(
    p: i64,
    q: i64,
    num: i64,
    den: i64,
    out: *mut i64,
) -> PsCode {
    if out.is_null() {
        return PsCode::NullPointer;
    }
    let (Ok(knot), Ok(slope)) = (KnotSpec::new(p, q), Slope::try_new(num, den)) else {
        return PsCode::InvalidArgument;
    };
    let Ok(detections) = detection_evidence(knot) else {
        return PsCode::Internal;
    };
    let pairs: Vec<(Slope, i64)> =
        detections.iter().map(|d| (d.slope, d.min_ideal_points)).collect();
    let Ok(model) = assemble_constraints(knot, &pairs) else {
        return PsCode::InvalidArgument;
    };
    match model.min_norm_over_feasible(slope) {
        Ok((value, _)) => {
            unsafe { *out = value };
            PsCode::Ok
        }
        Err(_) => PsCode::Internal,
    }
}

/// Classify the knot and hand back an opaque ledger handle.
///
/// # Safety
/// `out` must point to writable memory for one `PsLedger*`; the handle must
/// be released with [`ps_ledger_free`].
#[no_mangle]
pub unsafe extern "C" fn ps_classify(
    p: i64,
    q: i64,
    allow_asserted: bool,
    out: *mut *mut PsLedger,
) -> PsCode {
    if out.is_null() {
        return PsCode::NullPointer;
    }
    match classify(p, q, ClassifyOptions { allow_asserted }) {
        Ok(inner) => {
            let handle = Box::new(PsLedger { inner });
            unsafe { *out = Box::into_raw(handle) };
            PsCode::Ok
        }
        Err(pretzel_surgeon::pipeline::PipelineError::Knot(_)) => PsCode::InvalidArgument,
        Err(_) => PsCode::Internal,
    }
}

/// Conclusion recorded in a ledger.
///
/// # Safety
/// `ledger` must be a live handle from [`ps_classify`]; `out` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn ps_ledger_conclusion(
    ledger: *const PsLedger,
    out: *mut PsConclusion,
) -> PsCode {
    if ledger.is_null() || out.is_null() {
        return PsCode::NullPointer;
    }
    let conclusion = match unsafe { &(*ledger).inner }.conclusion {
        Conclusion::NoNontrivialFinite => PsConclusion::NoNontrivialFinite,
        Conclusion::Inconclusive => PsConclusion::Inconclusive,
    };
    unsafe { *out = conclusion };
    PsCode::Ok
}

/// Number of candidate slopes in a ledger.
///
/// # Safety
/// `ledger` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ps_ledger_candidate_count(
    ledger: *const PsLedger,
    out: *mut usize,
) -> PsCode {
    if ledger.is_null() || out.is_null() {
        return PsCode::NullPointer;
    }
    unsafe { *out = (*ledger).inner.candidates.len() };
    PsCode::Ok
}

/// Number of entries recorded with status paper_asserted.
///
/// # Safety
/// `ledger` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ps_ledger_asserted_count(
    ledger: *const PsLedger,
    out: *mut usize,
) -> PsCode {
    if ledger.is_null() || out.is_null() {
        return PsCode::NullPointer;
    }
    unsafe { *out = (*ledger).inner.paper_asserted_count };
    PsCode::Ok
}

/// Serialize a ledger to its stable JSON form.
///
/// # Safety
/// `ledger` must be a live handle; `out` receives a NUL-terminated string
/// owned by the caller (release with [`ps_string_free`]).
#[no_mangle]
pub unsafe extern "C" fn ps_ledger_to_json(
    ledger: *const PsLedger,
    out: *mut *mut c_char,
) -> PsCode {
    if ledger.is_null() || out.is_null() {
        return PsCode::NullPointer;
    }
    let json = match serde_json::to_string_pretty(unsafe { &(*ledger).inner }) {
        Ok(j) => j,
        Err(_) => return PsCode::Internal,
    };
    match CString::new(json) {
        Ok(cstr) => {
            unsafe { *out = cstr.into_raw() };
            PsCode::Ok
        }
        Err(_) => PsCode::Internal,
    }
}

/// Release a ledger handle. A null pointer is a no-op.
///
/// # Safety
/// `ledger` must be null or a handle from [`ps_classify`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ps_ledger_free(ledger: *mut PsLedger) {
    if !ledger.is_null() {
        drop(unsafe { Box::from_raw(ledger) });
    }
}

/// Release a string returned by this library. A null pointer is a no-op.
///
/// # Safety
/// `s` must be null or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ps_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    #[test]
    fn distance_through_the_abi() {
        let mut out = 0u64;
        assert_eq!(unsafe { ps_slope_distance(1, 0, 67, 3, &mut out) }, PsCode::Ok);
        assert_eq!(out, 3);
        assert_eq!(
            unsafe { ps_slope_distance(0, 0, 1, 1, &mut out) },
            PsCode::InvalidArgument
        );
        assert_eq!(
            unsafe { ps_slope_distance(1, 0, 1, 1, ptr::null_mut()) },
            PsCode::NullPointer
        );
    }

    #[test]
    fn minimal_norm_through_the_abi() {
        let mut out = 0i64;
        assert_eq!(unsafe { ps_minimal_norm(5, 9, &mut out) }, PsCode::Ok);
        assert_eq!(out, 48);
        assert_eq!(unsafe { ps_minimal_norm(4, 9, &mut out) }, PsCode::InvalidArgument);
    }

    #[test]
    fn min_slope_norm_through_the_abi() {
        let mut out = 0i64;
        assert_eq!(unsafe { ps_min_slope_norm(5, 5, 16, 1, &mut out) }, PsCode::Ok);
        assert_eq!(out, 44);
    }

    #[test]
    fn ledger_lifecycle() {
        let mut handle: *mut PsLedger = ptr::null_mut();
        assert_eq!(unsafe { ps_classify(7, 9, false, &mut handle) }, PsCode::Ok);
        assert!(!handle.is_null());

        let mut conclusion = PsConclusion::NoNontrivialFinite;
        assert_eq!(unsafe { ps_ledger_conclusion(handle, &mut conclusion) }, PsCode::Ok);
        assert_eq!(conclusion, PsConclusion::Inconclusive);

        let mut count = 0usize;
        assert_eq!(unsafe { ps_ledger_candidate_count(handle, &mut count) }, PsCode::Ok);
        assert_eq!(count, 4);
        assert_eq!(unsafe { ps_ledger_asserted_count(handle, &mut count) }, PsCode::Ok);
        assert_eq!(count, 1);

        let mut json: *mut c_char = ptr::null_mut();
        assert_eq!(unsafe { ps_ledger_to_json(handle, &mut json) }, PsCode::Ok);
        let text = unsafe { std::ffi::CStr::from_ptr(json) }.to_str().unwrap();
        assert!(text.contains("\"schema\": 1"));
        unsafe { ps_string_free(json) };
        unsafe { ps_ledger_free(handle) };
    }

    #[test]
    fn invalid_parameters_rejected() {
        let mut handle: *mut PsLedger = ptr::null_mut();
        assert_eq!(
            unsafe { ps_classify(4, 9, false, &mut handle) },
            PsCode::InvalidArgument
        );
        assert!(handle.is_null());
    }
}
