//! C ABI for the `ci-hamilton` library.
//!
//! Conventions:
//!
//! - A complete intersection is an opaque handle created by
//!   [`cih_intersection_new`] and released by [`cih_intersection_free`].
//! - Every function returns a [`CihStatus`]; results go to out-pointers.
//! - Strings returned through out-pointers are NUL-terminated, owned by
//!   the library, and must be released with [`cih_string_free`].
//! - Structured results (full invariant reports, verification reports,
//!   enumerations) are returned as JSON documents in the same shapes the
//!   command-line `--json` mode prints.
//!
//! The generated header is `include/ci_hamilton.h`.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, UnwindSafe};

use ci_hamilton::hamiltonian::{
    classify_dim_8k, dim_8k4_relation, enumerate_fixed_point_data, ClassificationStatus,
    DiffeomorphismType, DimRelationStatus, EnumerationBounds,
};
use ci_hamilton::intersection::{BettiProfile, CompleteIntersection, SmoothActionObstruction};
use ci_hamilton::report::InvariantsReport;
use ci_hamilton::verify::{run_verification, FixedPointDocument};
use ci_hamilton::Error;

/// Opaque handle to a complete intersection.
pub struct CihIntersection(CompleteIntersection);

/// Status code returned by every entry point.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CihStatus {
    /// Success; for verification entry points, all checks passed.
    CihOk = 0,
    /// A required pointer argument was NULL.
    CihNullPointer = 1,
    /// Input validation failed (dimension, degree, Betti data, ...).
    CihInvalidArgument = 2,
    /// The query is undefined for this input (signature in odd complex
    /// dimension).
    CihUnsupported = 3,
    /// The input parsed and validated but a check failed.
    CihCheckFailed = 4,
    /// A JSON document failed to parse.
    CihParseError = 5,
    /// An internal invariant was violated; this is a library bug.
    CihInternalError = 6,
}

/// Outcome of the smooth circle-action obstruction test.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CihObstruction {
    /// Spin with nonzero A-hat genus: no smooth circle action exists.
    CihObstructionExcludesAction = 0,
    /// Spin with vanishing A-hat genus: the test says nothing.
    CihObstructionNone = 1,
    /// Odd complex dimension or not spin: the test does not apply.
    CihObstructionNotApplicable = 2,
}

/// Combined Hamiltonian verdict across both dimension branches.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CihVerdict {
    /// Real dimension 8k, positive definite: diffeomorphic to CP^{4k}.
    CihVerdictConsistentProjectiveSpace = 0,
    /// Real dimension 8k, positive definite: diffeomorphic to a quadric.
    CihVerdictConsistentQuadric = 1,
    /// Real dimension 8k, positive definite: an intersection of two
    /// quadrics.
    CihVerdictConsistentTwoQuadrics = 2,
    /// Real dimension 8k, signature below the middle Betti number: no
    /// Hamiltonian circle action with isolated or 2-mod-4-dimensional
    /// fixed components exists.
    CihVerdictExcluded = 3,
    /// Real dimension 8k+4 and `signature = 2 - middle Betti number`.
    CihVerdictRelationHolds = 4,
    /// Real dimension 8k+4 and the relation fails (same exclusion as
    /// `CihVerdictExcluded`).
    CihVerdictRelationFails = 5,
    /// Odd complex dimension: neither branch applies.
    CihVerdictNotApplicable = 6,
}

fn guarded<F: FnOnce() -> CihStatus + UnwindSafe>(f: F) -> CihStatus {
    catch_unwind(f).unwrap_or(CihStatus::CihInternalError)
}

fn status_of(err: &Error) -> CihStatus {
    match err {
        Error::OddComplexDimension(_) => CihStatus::CihUnsupported,
        Error::ParseError(_) => CihStatus::CihParseError,
        _ => CihStatus::CihInvalidArgument,
    }
}

/// Write `value` through `out` if non-NULL; NULL yields `CihNullPointer`.
unsafe fn write_out<T>(out: *mut T, value: T) -> CihStatus {
    if out.is_null() {
        return CihStatus::CihNullPointer;
    }
    unsafe { out.write(value) };
    CihStatus::CihOk
}

unsafe fn write_string(out: *mut *mut c_char, text: String) -> CihStatus {
    match CString::new(text) {
        Ok(s) => unsafe { write_out(out, s.into_raw()) },
        Err(_) => CihStatus::CihInternalError,
    }
}

unsafe fn borrow<'a>(handle: *const CihIntersection) -> Option<&'a CompleteIntersection> {
    unsafe { handle.as_ref().map(|h| &h.0) }
}

/// Create a complete intersection of complex dimension `n` from
/// `degrees_len` hypersurface degrees. Degree-1 entries are dropped and
/// the rest sorted, exactly as the library normalizes multidegrees.
/// `degrees` may be NULL when `degrees_len` is 0.
///
/// # Safety
/// `degrees` must point to `degrees_len` readable `uint32_t` values when
/// `degrees_len > 0`, and `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cih_intersection_new(
    n: u32,
    degrees: *const u32,
    degrees_len: usize,
    out: *mut *mut CihIntersection,
) -> CihStatus {
    if out.is_null() || (degrees.is_null() && degrees_len > 0) {
        return CihStatus::CihNullPointer;
    }
    let raw: Vec<u32> = if degrees_len == 0 {
        Vec::new()
    } else {
        unsafe { std::slice::from_raw_parts(degrees, degrees_len) }.to_vec()
    };
    guarded(move || match CompleteIntersection::new(n, raw) {
        Ok(ci) => unsafe { write_out(out, Box::into_raw(Box::new(CihIntersection(ci)))) },
        Err(e) => status_of(&e),
    })
}

/// Release a handle created by [`cih_intersection_new`]. NULL is a no-op.
///
/// # Safety
/// `handle` must be NULL or a pointer previously returned by
/// [`cih_intersection_new`] that has not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn cih_intersection_free(handle: *mut CihIntersection) {
    if !handle.is_null() {
        drop(unsafe { Box::from_raw(handle) });
    }
}

/// Exact Euler characteristic.
///
/// # Safety
/// `handle` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cih_euler_characteristic(
    handle: *const CihIntersection,
    out: *mut i64,
) -> CihStatus {
    guarded(|| match unsafe { borrow(handle) } {
        Some(ci) => unsafe { write_out(out, ci.euler_characteristic()) },
        None => CihStatus::CihNullPointer,
    })
}

/// Middle Betti number `b_n`.
///
/// # Safety
/// `handle` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cih_middle_betti(
    handle: *const CihIntersection,
    out: *mut u64,
) -> CihStatus {
    guarded(|| match unsafe { borrow(handle) } {
        Some(ci) => unsafe { write_out(out, ci.betti_profile().middle()) },
        None => CihStatus::CihNullPointer,
    })
}

/// Signature of the middle intersection form. Fails with
/// `CihUnsupported` when the complex dimension is odd.
///
/// # Safety
/// `handle` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cih_signature(handle: *const CihIntersection, out: *mut i64) -> CihStatus {
    guarded(|| match unsafe { borrow(handle) } {
        Some(ci) => match ci.signature() {
            Ok(sigma) => unsafe { write_out(out, sigma) },
            Err(e) => status_of(&e),
        },
        None => CihStatus::CihNullPointer,
    })
}

/// A-hat genus as a fraction string, e.g. `"2"` or `"-1/8"`. Release the
/// string with [`cih_string_free`].
///
/// # Safety
/// `handle` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cih_a_hat_genus(
    handle: *const CihIntersection,
    out: *mut *mut c_char,
) -> CihStatus {
    guarded(|| match unsafe { borrow(handle) } {
        Some(ci) => unsafe { write_string(out, ci.a_hat_genus().to_string()) },
        None => CihStatus::CihNullPointer,
    })
}

/// Whether the first Chern class is positive.
///
/// # Safety
/// `handle` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cih_is_fano(handle: *const CihIntersection, out: *mut bool) -> CihStatus {
    guarded(|| match unsafe { borrow(handle) } {
        Some(ci) => unsafe { write_out(out, ci.is_fano()) },
        None => CihStatus::CihNullPointer,
    })
}

/// Whether the second Stiefel-Whitney class vanishes.
///
/// # Safety
/// `handle` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cih_is_spin(handle: *const CihIntersection, out: *mut bool) -> CihStatus {
    guarded(|| match unsafe { borrow(handle) } {
        Some(ci) => unsafe { write_out(out, ci.is_spin()) },
        None => CihStatus::CihNullPointer,
    })
}

/// The A-hat obstruction to smooth circle actions.
///
/// # Safety
/// `handle` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cih_smooth_action_obstruction(
    handle: *const CihIntersection,
    out: *mut CihObstruction,
) -> CihStatus {
    guarded(|| match unsafe { borrow(handle) } {
        Some(ci) => {
            let value = match ci.smooth_action_obstruction() {
                SmoothActionObstruction::ExcludesAnySmoothCircleAction => {
                    CihObstruction::CihObstructionExcludesAction
                }
                SmoothActionObstruction::NoObstructionFromThisTest => {
                    CihObstruction::CihObstructionNone
                }
                SmoothActionObstruction::TestNotApplicable => {
                    CihObstruction::CihObstructionNotApplicable
                }
            };
            unsafe { write_out(out, value) }
        }
        None => CihStatus::CihNullPointer,
    })
}

/// The Hamiltonian verdict: the positive-definiteness classification in
/// real dimension 8k, the signature relation in dimension 8k+4.
///
/// # Safety
/// `handle` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cih_hamiltonian_verdict(
    handle: *const CihIntersection,
    out: *mut CihVerdict,
) -> CihStatus {
    guarded(|| match unsafe { borrow(handle) } {
        Some(ci) => {
            let value = match ci.n() % 4 {
                0 => {
                    let verdict = classify_dim_8k(ci);
                    match (verdict.status(), verdict.identified_type()) {
                        (ClassificationStatus::Consistent, Some(t)) => match t {
                            DiffeomorphismType::ProjectiveSpace => {
                                CihVerdict::CihVerdictConsistentProjectiveSpace
                            }
                            DiffeomorphismType::Quadric => CihVerdict::CihVerdictConsistentQuadric,
                            DiffeomorphismType::TwoQuadrics => {
                                CihVerdict::CihVerdictConsistentTwoQuadrics
                            }
                        },
                        _ => CihVerdict::CihVerdictExcluded,
                    }
                }
                2 => match dim_8k4_relation(ci).status() {
                    DimRelationStatus::RelationHolds => CihVerdict::CihVerdictRelationHolds,
                    _ => CihVerdict::CihVerdictRelationFails,
                },
                _ => CihVerdict::CihVerdictNotApplicable,
            };
            unsafe { write_out(out, value) }
        }
        None => CihStatus::CihNullPointer,
    })
}

/// Full invariant report as a JSON document, in the same shape as
/// `ci-hamilton invariants --json`. Release with [`cih_string_free`].
///
/// # Safety
/// `handle` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cih_invariants_json(
    handle: *const CihIntersection,
    out: *mut *mut c_char,
) -> CihStatus {
    guarded(|| match unsafe { borrow(handle) } {
        Some(ci) => {
            let report = InvariantsReport::for_intersection(ci);
            match serde_json::to_string(&report) {
                Ok(json) => unsafe { write_string(out, json) },
                Err(_) => CihStatus::CihInternalError,
            }
        }
        None => CihStatus::CihNullPointer,
    })
}

/// Check a fixed-point document (same JSON schema as
/// `ci-hamilton verify-fixed-points`) and write the verification report
/// as JSON. Returns `CihOk` when all checks pass, `CihCheckFailed` when
/// the report contains a failure, `CihParseError`/`CihInvalidArgument`
/// for bad input; the report is written whenever the document was valid.
///
/// # Safety
/// `document` must be a NUL-terminated string; `out_report` may be NULL
/// if the caller only wants the status.
#[no_mangle]
pub unsafe extern "C" fn cih_verify_fixed_points_json(
    document: *const c_char,
    out_report: *mut *mut c_char,
) -> CihStatus {
    if document.is_null() {
        return CihStatus::CihNullPointer;
    }
    let text = match unsafe { CStr::from_ptr(document) }.to_str() {
        Ok(t) => t.to_owned(),
        Err(_) => return CihStatus::CihParseError,
    };
    guarded(move || {
        let parsed = match FixedPointDocument::from_json(&text) {
            Ok(doc) => doc,
            Err(e) => return status_of(&e),
        };
        let report = match run_verification(&parsed) {
            Ok(r) => r,
            Err(e) => return status_of(&e),
        };
        let json = match serde_json::to_string(&report) {
            Ok(j) => j,
            Err(_) => return CihStatus::CihInternalError,
        };
        if !out_report.is_null() {
            let status = unsafe { write_string(out_report, json) };
            if status != CihStatus::CihOk {
                return status;
            }
        }
        if report.all_pass() {
            CihStatus::CihOk
        } else {
            CihStatus::CihCheckFailed
        }
    })
}

/// Enumerate fixed-point data against a target profile given as
/// `betti_len` Betti numbers `b_0..b_{2m}`; writes a JSON object with the
/// solutions, their count, and the truncation flag. Release with
/// [`cih_string_free`].
///
/// # Safety
/// `betti` must point to `betti_len` readable `uint64_t` values and
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cih_enumerate_json(
    betti: *const u64,
    betti_len: usize,
    max_components: usize,
    allow_positive_dim: bool,
    out: *mut *mut c_char,
) -> CihStatus {
    if betti.is_null() || out.is_null() {
        return CihStatus::CihNullPointer;
    }
    let betti = unsafe { std::slice::from_raw_parts(betti, betti_len) }.to_vec();
    guarded(move || {
        let target = match BettiProfile::new(betti) {
            Ok(t) => t,
            Err(e) => return status_of(&e),
        };
        let bounds = EnumerationBounds {
            max_components,
            allow_positive_dim,
        };
        let result = enumerate_fixed_point_data(&target, &bounds);
        let json = serde_json::json!({
            "target": target,
            "solutions": result.solutions,
            "count": result.solutions.len(),
            "truncated": result.truncated,
        });
        unsafe { write_string(out, json.to_string()) }
    })
}

/// Release a string returned by this library. NULL is a no-op.
///
/// # Safety
/// `s` must be NULL or a string returned by this library that has not
/// been freed yet.
#[no_mangle]
pub unsafe extern "C" fn cih_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Static description of a status code. Never NULL; do not free.
#[no_mangle]
pub extern "C" fn cih_status_message(status: CihStatus) -> *const c_char {
    let message: &'static [u8] = match status {
        CihStatus::CihOk => b"ok\0",
        CihStatus::CihNullPointer => b"a required pointer argument was NULL\0",
        CihStatus::CihInvalidArgument => b"input validation failed\0",
        CihStatus::CihUnsupported => b"the query is undefined for this input\0",
        CihStatus::CihCheckFailed => b"a verification check failed\0",
        CihStatus::CihParseError => b"the document failed to parse\0",
        CihStatus::CihInternalError => b"internal error\0",
    };
    message.as_ptr().cast()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    fn make(n: u32, degrees: &[u32]) -> *mut CihIntersection {
        let mut handle = ptr::null_mut();
        let status =
            unsafe { cih_intersection_new(n, degrees.as_ptr(), degrees.len(), &mut handle) };
        assert_eq!(status, CihStatus::CihOk);
        assert!(!handle.is_null());
        handle
    }

    fn take_string(s: *mut c_char) -> String {
        assert!(!s.is_null());
        let owned = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
        unsafe { cih_string_free(s) };
        owned
    }

    #[test]
    fn quartic_surface_through_the_c_abi() {
        let k3 = make(2, &[4]);
        let mut chi = 0i64;
        let mut middle = 0u64;
        let mut sigma = 0i64;
        let mut fano = true;
        let mut spin = false;
        unsafe {
            assert_eq!(cih_euler_characteristic(k3, &mut chi), CihStatus::CihOk);
            assert_eq!(cih_middle_betti(k3, &mut middle), CihStatus::CihOk);
            assert_eq!(cih_signature(k3, &mut sigma), CihStatus::CihOk);
            assert_eq!(cih_is_fano(k3, &mut fano), CihStatus::CihOk);
            assert_eq!(cih_is_spin(k3, &mut spin), CihStatus::CihOk);
        }
        assert_eq!((chi, middle, sigma, fano, spin), (24, 22, -16, false, true));

        let mut a_hat = ptr::null_mut();
        unsafe { assert_eq!(cih_a_hat_genus(k3, &mut a_hat), CihStatus::CihOk) };
        assert_eq!(take_string(a_hat), "2");

        let mut obstruction = CihObstruction::CihObstructionNotApplicable;
        unsafe {
            assert_eq!(
                cih_smooth_action_obstruction(k3, &mut obstruction),
                CihStatus::CihOk
            );
        }
        assert_eq!(obstruction, CihObstruction::CihObstructionExcludesAction);

        let mut verdict = CihVerdict::CihVerdictNotApplicable;
        unsafe { assert_eq!(cih_hamiltonian_verdict(k3, &mut verdict), CihStatus::CihOk) };
        assert_eq!(verdict, CihVerdict::CihVerdictRelationFails);

        unsafe { cih_intersection_free(k3) };
    }

    #[test]
    fn verdicts_across_dimension_branches() {
        let cases: &[(u32, &[u32], CihVerdict)] = &[
            (4, &[], CihVerdict::CihVerdictConsistentProjectiveSpace),
            (4, &[2], CihVerdict::CihVerdictConsistentQuadric),
            (4, &[2, 2], CihVerdict::CihVerdictConsistentTwoQuadrics),
            (4, &[3], CihVerdict::CihVerdictExcluded),
            (2, &[2], CihVerdict::CihVerdictRelationHolds),
            (2, &[4], CihVerdict::CihVerdictRelationFails),
            (3, &[2], CihVerdict::CihVerdictNotApplicable),
        ];
        for &(n, degrees, expected) in cases {
            let handle = make(n, degrees);
            let mut verdict = CihVerdict::CihVerdictNotApplicable;
            unsafe {
                assert_eq!(
                    cih_hamiltonian_verdict(handle, &mut verdict),
                    CihStatus::CihOk
                );
                cih_intersection_free(handle);
            }
            assert_eq!(verdict, expected, "n={} degrees={:?}", n, degrees);
        }
    }

    #[test]
    fn degree_one_entries_normalize_away() {
        let handle = make(4, &[1, 2, 1]);
        let mut json = ptr::null_mut();
        unsafe { assert_eq!(cih_invariants_json(handle, &mut json), CihStatus::CihOk) };
        let report: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(report["degrees"], serde_json::json!([2]));
        assert_eq!(report["hamiltonian_verdict"], "Consistent(Quadric)");
        unsafe { cih_intersection_free(handle) };
    }

    #[test]
    fn error_codes_for_bad_input() {
        let mut handle = ptr::null_mut();
        assert_eq!(
            unsafe { cih_intersection_new(0, ptr::null(), 0, &mut handle) },
            CihStatus::CihInvalidArgument
        );
        let degrees = [0u32];
        assert_eq!(
            unsafe { cih_intersection_new(3, degrees.as_ptr(), 1, &mut handle) },
            CihStatus::CihInvalidArgument
        );
        assert_eq!(
            unsafe { cih_intersection_new(3, ptr::null(), 2, &mut handle) },
            CihStatus::CihNullPointer
        );

        let odd = make(3, &[2]);
        let mut sigma = 0i64;
        assert_eq!(
            unsafe { cih_signature(odd, &mut sigma) },
            CihStatus::CihUnsupported
        );
        assert_eq!(
            unsafe { cih_euler_characteristic(odd, ptr::null_mut()) },
            CihStatus::CihNullPointer
        );
        unsafe { cih_intersection_free(odd) };

        let mut chi = 0i64;
        assert_eq!(
            unsafe { cih_euler_characteristic(ptr::null(), &mut chi) },
            CihStatus::CihNullPointer
        );
    }

    #[test]
    fn verification_pass_fail_and_parse_error() {
        let good = CString::new(
            r#"{
                "target": {"dim_real": 8, "betti": [1, 0, 1, 0, 2, 0, 1, 0, 1]},
                "components": [
                    {"type": "point", "lambda": 0},
                    {"type": "point", "lambda": 1},
                    {"type": "point", "lambda": 2},
                    {"type": "point", "lambda": 2},
                    {"type": "point", "lambda": 3},
                    {"type": "point", "lambda": 4}
                ]
            }"#,
        )
        .unwrap();
        let mut report = ptr::null_mut();
        let status = unsafe { cih_verify_fixed_points_json(good.as_ptr(), &mut report) };
        assert_eq!(status, CihStatus::CihOk);
        let parsed: serde_json::Value = serde_json::from_str(&take_string(report)).unwrap();
        assert_eq!(parsed["fixed_point_signature"], 2);

        let bad = CString::new(
            r#"{
                "target": {"dim_real": 4, "betti": [1, 0, 1, 0, 1]},
                "components": [
                    {"type": "point", "lambda": 0},
                    {"type": "point", "lambda": 1},
                    {"type": "point", "lambda": 1}
                ]
            }"#,
        )
        .unwrap();
        let mut report = ptr::null_mut();
        let status = unsafe { cih_verify_fixed_points_json(bad.as_ptr(), &mut report) };
        assert_eq!(status, CihStatus::CihCheckFailed);
        let parsed: serde_json::Value = serde_json::from_str(&take_string(report)).unwrap();
        assert_eq!(parsed["localisation"]["pass"], false);

        let broken = CString::new("{ not json").unwrap();
        let status = unsafe { cih_verify_fixed_points_json(broken.as_ptr(), ptr::null_mut()) };
        assert_eq!(status, CihStatus::CihParseError);
    }

    #[test]
    fn enumeration_through_the_c_abi() {
        let betti = [1u64, 0, 1, 0, 2, 0, 1, 0, 1];
        let mut out = ptr::null_mut();
        let status =
            unsafe { cih_enumerate_json(betti.as_ptr(), betti.len(), 16, false, &mut out) };
        assert_eq!(status, CihStatus::CihOk);
        let parsed: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
        assert_eq!(parsed["count"], 1);
        assert_eq!(parsed["truncated"], false);

        let invalid = [2u64, 0, 2];
        let status =
            unsafe { cih_enumerate_json(invalid.as_ptr(), invalid.len(), 16, false, &mut out) };
        assert_eq!(status, CihStatus::CihInvalidArgument);
    }

    #[test]
    fn status_messages_are_static_strings() {
        for status in [
            CihStatus::CihOk,
            CihStatus::CihNullPointer,
            CihStatus::CihInvalidArgument,
            CihStatus::CihUnsupported,
            CihStatus::CihCheckFailed,
            CihStatus::CihParseError,
            CihStatus::CihInternalError,
        ] {
            let message = cih_status_message(status);
            assert!(!message.is_null());
            assert!(!unsafe { CStr::from_ptr(message) }
                .to_str()
                .unwrap()
                .is_empty());
        }
    }
}
