//! C ABI over `quivdim`.
//!
//! Algebras are opaque `QdAlgebra` handles released with `qd_algebra_free`.
//! Every fallible call returns a `QdStatus`; on failure the message is kept
//! per thread and read with `qd_last_error`. Strings handed out by the library
//! are released with `qd_string_free`.

use quivdim::criteria::{
    critical_subcategories, critical_template, CriticalTemplate, TemplateKind,
};
use quivdim::dsl::{parse_algebra, to_spec_text, DiagnosticKind};
use quivdim::homology::{ext_dim, gl_dim, id_simple, pd_simple};
use quivdim::presentation::IncidenceQuotient;
use quivdim::random::{random_algebra, RandomModel};
use quivdim::report::{build_report, render_report, Format, ReportOptions};
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QdStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// The text format could not be read.
    Parse = 3,
    /// The text was read but does not describe a valid algebra.
    InvalidAlgebra = 4,
    UnknownVertex = 5,
    InvalidArgument = 6,
    /// A panic was caught at the boundary.
    Internal = 7,
}

/// An incidence quotient owned by the library.
pub struct QdAlgebra {
    inner: IncidenceQuotient,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn fail(status: QdStatus, msg: impl Into<String>) -> QdStatus {
    set_error(msg);
    status
}

/// Runs `f`, converting a panic into `QdStatus::Internal`.
fn guard(f: impl FnOnce() -> QdStatus) -> QdStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_string());
            fail(QdStatus::Internal, msg)
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, QdStatus> {
    if p.is_null() {
        return Err(fail(QdStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| fail(QdStatus::InvalidUtf8, e.to_string()))
}

unsafe fn algebra<'a>(a: *const QdAlgebra) -> Result<&'a QdAlgebra, QdStatus> {
    a.as_ref()
        .ok_or_else(|| fail(QdStatus::NullPointer, "null algebra"))
}

unsafe fn vertex(a: &QdAlgebra, label: *const c_char) -> Result<usize, QdStatus> {
    let name = read_str(label)?;
    a.inner
        .algebra()
        .index_of(name)
        .ok_or_else(|| fail(QdStatus::UnknownVertex, format!("unknown vertex {name}")))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> QdStatus {
    if out.is_null() {
        return fail(QdStatus::NullPointer, "null output pointer");
    }
    out.write(value);
    QdStatus::Ok
}

unsafe fn hand_out(out: *mut *mut QdAlgebra, q: IncidenceQuotient) -> QdStatus {
    write_out(out, Box::into_raw(Box::new(QdAlgebra { inner: q })))
}

unsafe fn hand_out_string(out: *mut *mut c_char, s: String) -> QdStatus {
    match CString::new(s) {
        Ok(c) => write_out(out, c.into_raw()),
        Err(e) => fail(QdStatus::Internal, e.to_string()),
    }
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(status) => return status,
        }
    };
}

/// Parses an algebra in the text format.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qd_algebra_parse(
    text: *const c_char,
    out: *mut *mut QdAlgebra,
) -> QdStatus {
    guard(|| {
        let text = tri!(read_str(text));
        match parse_algebra(text) {
            Ok(q) => hand_out(out, q),
            Err(d) => {
                let status = match d.kind {
                    DiagnosticKind::Invalid(_) => QdStatus::InvalidAlgebra,
                    _ => QdStatus::Parse,
                };
                fail(status, d.to_string())
            }
        }
    })
}

/// Builds a catalogue algebra such as `A_1` from `kind` ("A", "B" or "Q") and `param`.
///
/// # Safety
/// `kind` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qd_algebra_template(
    kind: *const c_char,
    param: u32,
    opposite: bool,
    out: *mut *mut QdAlgebra,
) -> QdStatus {
    guard(|| {
        let name = tri!(read_str(kind));
        let Some(kind) = TemplateKind::parse(name) else {
            return fail(
                QdStatus::InvalidArgument,
                format!("unknown template kind {name}"),
            );
        };
        let mut t = CriticalTemplate::new(kind, param as usize);
        if opposite {
            t = t.op();
        }
        match critical_template(t) {
            Ok(q) => hand_out(out, q),
            Err(e) => fail(QdStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// Draws the seeded random instance on `n` vertices.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qd_algebra_random(
    seed: u64,
    n: u32,
    out: *mut *mut QdAlgebra,
) -> QdStatus {
    guard(
        || match random_algebra(&RandomModel::new(seed, n as usize)) {
            Ok(q) => hand_out(out, q),
            Err(e) => fail(QdStatus::InvalidArgument, e.to_string()),
        },
    )
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `a` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn qd_algebra_free(a: *mut QdAlgebra) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qd_algebra_vertex_count(a: *const QdAlgebra, out: *mut usize) -> QdStatus {
    guard(|| {
        let a = tri!(algebra(a));
        write_out(out, a.inner.algebra().vertex_count())
    })
}

/// Whether the algebra passes the strong simple connectedness certificate.
///
/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qd_algebra_is_certified(a: *const QdAlgebra, out: *mut bool) -> QdStatus {
    guard(|| {
        let a = tri!(algebra(a));
        write_out(out, a.inner.is_certified())
    })
}

/// The algebra in the text format.
///
/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qd_algebra_to_text(
    a: *const QdAlgebra,
    out: *mut *mut c_char,
) -> QdStatus {
    guard(|| {
        let a = tri!(algebra(a));
        hand_out_string(out, to_spec_text(&a.inner))
    })
}

/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qd_gldim(a: *const QdAlgebra, out: *mut u32) -> QdStatus {
    guard(|| {
        let a = tri!(algebra(a));
        write_out(out, gl_dim(a.inner.algebra()) as u32)
    })
}

/// Projective dimension of the simple at the vertex labelled `label`.
///
/// # Safety
/// `a` must be a live handle, `label` a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qd_pd_simple(
    a: *const QdAlgebra,
    label: *const c_char,
    out: *mut u32,
) -> QdStatus {
    guard(|| {
        let a = tri!(algebra(a));
        let x = tri!(vertex(a, label));
        write_out(out, pd_simple(a.inner.algebra(), x) as u32)
    })
}

/// Injective dimension of the simple at the vertex labelled `label`.
///
/// # Safety
/// `a` must be a live handle, `label` a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qd_id_simple(
    a: *const QdAlgebra,
    label: *const c_char,
    out: *mut u32,
) -> QdStatus {
    guard(|| {
        let a = tri!(algebra(a));
        let x = tri!(vertex(a, label));
        write_out(out, id_simple(a.inner.algebra(), x) as u32)
    })
}

/// Multiplicity of `P_y` in the `k`-th term of the minimal resolution of `S_x`.
///
/// # Safety
/// `a` must be a live handle, the labels NUL-terminated strings and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qd_ext_dim(
    a: *const QdAlgebra,
    x: *const c_char,
    y: *const c_char,
    k: u32,
    out: *mut u32,
) -> QdStatus {
    guard(|| {
        let a = tri!(algebra(a));
        let x = tri!(vertex(a, x));
        let y = tri!(vertex(a, y));
        write_out(out, ext_dim(a.inner.algebra(), x, y, k as usize) as u32)
    })
}

/// Number of critical full subcategories, found by scanning every subset.
///
/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qd_critical_count(a: *const QdAlgebra, out: *mut usize) -> QdStatus {
    guard(|| {
        let a = tri!(algebra(a));
        write_out(out, critical_subcategories(a.inner.algebra()).len())
    })
}

/// The JSON report: dimensions of all simples and, if `criterion`, the
/// critical subcategories.
///
/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qd_report_json(
    a: *const QdAlgebra,
    criterion: bool,
    out: *mut *mut c_char,
) -> QdStatus {
    guard(|| {
        let a = tri!(algebra(a));
        let opts = ReportOptions {
            criterion,
            ..ReportOptions::default()
        };
        hand_out_string(
            out,
            render_report(&build_report(&a.inner, &opts), Format::Json),
        )
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn qd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn qd_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version, a static string.
#[no_mangle]
pub extern "C" fn qd_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
