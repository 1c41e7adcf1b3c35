//! C ABI for the curve-counting library.
//!
//! A session owns one surface and its memo table behind an opaque handle.
//! Every function returns a [`GwStatus`]; results come back as heap-allocated
//! NUL-terminated decimal or JSON strings that the caller releases with
//! [`gw_string_free`]. The last error message of a session is kept on the
//! handle and stays valid until the next call on that session.
//!
//! The matching header `include/gwcount.h` is generated by cbindgen at build
//! time and committed.

use gwcount::genus1;
use gwcount::gw0::{self, MemoTable};
use gwcount::lattice::{parse_surface, SurfaceModel};
use gwcount::store;
use gwcount::Error;
use libc::c_char;
use std::ffi::{CStr, CString};
use std::ptr;

/// Status codes mirroring the CLI exit codes, plus FFI-specific inputs.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GwStatus {
    /// Success.
    GwOk = 0,
    /// Invalid input: unknown surface, malformed class, bad argument.
    GwErrValidation = 1,
    /// Internal consistency failure; never expected on a correct build.
    GwErrInconsistency = 2,
    /// A required pointer argument was NULL.
    GwErrNullArg = 3,
    /// A string argument was not valid UTF-8.
    GwErrUtf8 = 4,
}

/// Opaque session handle: one surface plus its memo table.
pub struct GwSession {
    surface: SurfaceModel,
    memo: MemoTable,
    last_error: Option<CString>,
}

fn status_of(e: &Error) -> GwStatus {
    match e.exit_code() {
        2 => GwStatus::GwErrInconsistency,
        _ => GwStatus::GwErrValidation,
    }
}

impl GwSession {
    fn fail(&mut self, status: GwStatus, msg: String) -> GwStatus {
        self.last_error = CString::new(msg).ok();
        status
    }

    fn fail_with(&mut self, e: Error) -> GwStatus {
        let status = status_of(&e);
        self.fail(status, e.to_string())
    }
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, GwStatus> {
    if ptr.is_null() {
        return Err(GwStatus::GwErrNullArg);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| GwStatus::GwErrUtf8)
}

fn emit(out: *mut *mut c_char, text: String) -> GwStatus {
    // Library output never contains interior NULs.
    let c = CString::new(text).expect("no interior NUL");
    unsafe { *out = c.into_raw() };
    GwStatus::GwOk
}

/// Creates a session for a surface spec ("p2", "p2xK", "quadric"). On
/// success writes the handle to `out`; the caller frees it with
/// [`gw_session_free`].
///
/// # Safety
/// `surface` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gw_session_new(
    surface: *const c_char,
    out: *mut *mut GwSession,
) -> GwStatus {
    if out.is_null() {
        return GwStatus::GwErrNullArg;
    }
    *out = ptr::null_mut();
    let spec = match read_str(surface) {
        Ok(s) => s,
        Err(status) => return status,
    };
    match parse_surface(spec) {
        Ok(model) => {
            let memo = MemoTable::new(&model);
            *out = Box::into_raw(Box::new(GwSession {
                surface: model,
                memo,
                last_error: None,
            }));
            GwStatus::GwOk
        }
        Err(_) => GwStatus::GwErrValidation,
    }
}

/// Frees a session handle. NULL is a no-op.
///
/// # Safety
/// `session` must be a handle from [`gw_session_new`], freed at most once.
#[no_mangle]
pub unsafe extern "C" fn gw_session_free(session: *mut GwSession) {
    if !session.is_null() {
        drop(Box::from_raw(session));
    }
}

/// The message of the last failed call on this session, or NULL when the
/// last call succeeded. Valid until the next call on the session.
///
/// # Safety
/// `session` must be a live handle from [`gw_session_new`].
#[no_mangle]
pub unsafe extern "C" fn gw_session_last_error(session: *const GwSession) -> *const c_char {
    if session.is_null() {
        return ptr::null();
    }
    match &(*session).last_error {
        Some(msg) => msg.as_ptr(),
        None => ptr::null(),
    }
}

/// Computes the genus-0 count of a class (e.g. "3;1,1,1" or "2,2") and
/// writes it to `out` as a decimal string.
///
/// # Safety
/// `session` must be a live handle; `class` a NUL-terminated string; `out` a
/// valid pointer. The result string is released with [`gw_string_free`].
#[no_mangle]
pub unsafe extern "C" fn gw_n0(
    session: *mut GwSession,
    class: *const c_char,
    out: *mut *mut c_char,
) -> GwStatus {
    if session.is_null() || out.is_null() {
        return GwStatus::GwErrNullArg;
    }
    let sess = &mut *session;
    sess.last_error = None;
    let class = match read_str(class) {
        Ok(c) => c,
        Err(status) => return sess.fail(status, "bad class argument".into()),
    };
    let beta = match sess.surface.parse_class(class) {
        Ok(b) => b,
        Err(e) => return sess.fail_with(e),
    };
    match gw0::n0(&sess.surface, &beta, &mut sess.memo) {
        Ok(v) => emit(out, v.to_string()),
        Err(e) => sess.fail_with(e),
    }
}

/// Computes the genus-1 fixed-j report of a class for an automorphism order
/// (2 generic, 4 at j=1728, 6 at j=0) and writes it to `out` as a JSON
/// object with keys class, delta, genus, n0, CR, RT1, aut, n1j.
///
/// # Safety
/// Same contract as [`gw_n0`].
#[no_mangle]
pub unsafe extern "C" fn gw_genus1_json(
    session: *mut GwSession,
    class: *const c_char,
    aut: i64,
    out: *mut *mut c_char,
) -> GwStatus {
    if session.is_null() || out.is_null() {
        return GwStatus::GwErrNullArg;
    }
    let sess = &mut *session;
    sess.last_error = None;
    let class = match read_str(class) {
        Ok(c) => c,
        Err(status) => return sess.fail(status, "bad class argument".into()),
    };
    let beta = match sess.surface.parse_class(class) {
        Ok(b) => b,
        Err(e) => return sess.fail_with(e),
    };
    match genus1::n1j(&sess.surface, &beta, aut, &mut sess.memo) {
        Ok(report) => emit(out, store::render_report_json(&report)),
        Err(e) => sess.fail_with(e),
    }
}

/// Frees a string returned by this library. NULL is a no-op.
///
/// # Safety
/// `s` must come from a gwcount function, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn gw_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
