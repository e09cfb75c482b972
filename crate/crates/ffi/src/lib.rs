//! C ABI over `vaserstein`.
//!
//! Conventions:
//! * every fallible call returns a [`VsStatus`] and writes its result
//!   through an out-pointer only on [`VsStatus::Ok`];
//! * handles come from `*_new` and are released with the matching `*_free`;
//! * strings returned through `char **` are owned by the caller and released
//!   with [`vs_string_free`];
//! * [`vs_last_error`] describes the most recent failure on the calling
//!   thread and stays valid until the next failing call on that thread.
//!
//! Indices are 0-based.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use serde_json::json;
use vaserstein::io;
use vaserstein::quotient::{Ring, RingExt};
use vaserstein::realize::{self, RealPoint};
use vaserstein::rows::{row_make, ElementaryMove, UnimodularRow};
use vaserstein::spheres::{self, AlphaMode, MapName};
use vaserstein::witt::{pfaffian, vaserstein_symbol, Matrix, SkewMatrix};
use vaserstein::Error;

/// Outcome of a call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed or inconsistent input.
    Input = 3,
    /// The row generates a proper ideal.
    NotUnimodular = 4,
    /// An identity or certificate failed to verify.
    Verification = 5,
    /// The Groebner reduction budget ran out.
    Budget = 6,
    /// A numeric computation could not conclude.
    Numeric = 7,
    /// A panic was caught at the boundary.
    Internal = 8,
}

/// Opaque presented ring.
pub struct VsRing(Ring);

/// Opaque certified unimodular row.
pub struct VsRow(UnimodularRow);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> VsStatus {
    match e {
        Error::NotUnimodular => VsStatus::NotUnimodular,
        Error::BudgetExceeded(_) => VsStatus::Budget,
        Error::IrregularValue(_)
        | Error::ChartEscape
        | Error::OpenCurve(_)
        | Error::ResidualTooLarge { .. } => VsStatus::Numeric,
        e if e.is_input_error() => VsStatus::Input,
        Error::Verification(_) | Error::BadCertificate(_) => VsStatus::Verification,
        _ => VsStatus::Input,
    }
}

enum Fail {
    Status(VsStatus, String),
    Lib(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        Fail::Lib(e)
    }
}

/// Run `body`, translating errors and panics into a status.
fn guard(body: impl FnOnce() -> Result<(), Fail>) -> VsStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => VsStatus::Ok,
        Ok(Err(Fail::Status(s, msg))) => {
            set_error(&msg);
            s
        }
        Ok(Err(Fail::Lib(e))) => {
            set_error(&e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("internal panic");
            VsStatus::Internal
        }
    }
}

fn null() -> Fail {
    Fail::Status(VsStatus::NullPointer, "null pointer argument".into())
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null());
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail::Status(VsStatus::InvalidUtf8, "string is not UTF-8".into()))
}

unsafe fn texts<'a>(p: *const *const c_char, len: usize) -> Result<Vec<&'a str>, Fail> {
    if p.is_null() {
        return Err(null());
    }
    (0..len).map(|k| text(*p.add(k))).collect()
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| Fail::Status(VsStatus::Internal, "nul in output".into()))?;
    put(out, c.into_raw())
}

unsafe fn borrow<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(null)
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn vs_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last failure on this thread; never NULL.
#[no_mangle]
pub extern "C" fn vs_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn vs_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Build a ring from `{"vars": [...], "relations": [...], "order": "degrevlex"}`.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vs_ring_new(json: *const c_char, out: *mut *mut VsRing) -> VsStatus {
    guard(|| {
        let ring = io::parse_ring(text(json)?)?;
        put(out, Box::into_raw(Box::new(VsRing(ring))))
    })
}

/// # Safety
/// `ring` must come from [`vs_ring_new`] or be NULL.
#[no_mangle]
pub unsafe extern "C" fn vs_ring_free(ring: *mut VsRing) {
    if !ring.is_null() {
        drop(Box::from_raw(ring));
    }
}

/// Normal form of `poly` in `ring`.
///
/// # Safety
/// Pointers must be valid; `*out` is freed with [`vs_string_free`].
#[no_mangle]
pub unsafe extern "C" fn vs_ring_normal_form(
    ring: *const VsRing,
    poly: *const c_char,
    out: *mut *mut c_char,
) -> VsStatus {
    guard(|| {
        let r = &borrow(ring)?.0;
        let e = r.elem(text(poly)?)?;
        put_string(out, e.to_string())
    })
}

/// A certified row from `len` entries. With `certificate` NULL a
/// certificate is computed; otherwise it is checked.
///
/// # Safety
/// `entries` (and `certificate` if non-NULL) must hold `len` strings.
#[no_mangle]
pub unsafe extern "C" fn vs_row_new(
    ring: *const VsRing,
    entries: *const *const c_char,
    certificate: *const *const c_char,
    len: usize,
    out: *mut *mut VsRow,
) -> VsStatus {
    guard(|| {
        let r = &borrow(ring)?.0;
        let a = texts(entries, len)?
            .into_iter()
            .map(|t| r.elem(t))
            .collect::<Result<Vec<_>, _>>()?;
        let b = if certificate.is_null() {
            None
        } else {
            Some(
                texts(certificate, len)?
                    .into_iter()
                    .map(|t| r.elem(t))
                    .collect::<Result<Vec<_>, _>>()?,
            )
        };
        let row = row_make(r, a, b)?;
        put(out, Box::into_raw(Box::new(VsRow(row))))
    })
}

/// # Safety
/// `row` must come from this library or be NULL.
#[no_mangle]
pub unsafe extern "C" fn vs_row_free(row: *mut VsRow) {
    if !row.is_null() {
        drop(Box::from_raw(row));
    }
}

/// Number of entries; 0 for NULL.
///
/// # Safety
/// `row` must be a valid handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn vs_row_len(row: *const VsRow) -> usize {
    row.as_ref().map_or(0, |r| r.0.len())
}

/// `{"row": [...], "certificate": [...]}`.
///
/// # Safety
/// Pointers must be valid; `*out` is freed with [`vs_string_free`].
#[no_mangle]
pub unsafe extern "C" fn vs_row_json(row: *const VsRow, out: *mut *mut c_char) -> VsStatus {
    guard(|| {
        let r = &borrow(row)?.0;
        put_string(out, io::row_to_json(r).to_string())
    })
}

/// The row moved by `E_ij(lambda)`, as a new handle.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn vs_row_apply_move(
    row: *const VsRow,
    i: usize,
    j: usize,
    lambda: *const c_char,
    out: *mut *mut VsRow,
) -> VsStatus {
    guard(|| {
        let r = &borrow(row)?.0;
        let lam = r.ring().elem(text(lambda)?)?;
        let moved = r.apply(&ElementaryMove::new(i, j, lam)?)?;
        put(out, Box::into_raw(Box::new(VsRow(moved))))
    })
}

/// `{"matrix": [[...]], "pfaffian": "1"}` for a row of length 3.
///
/// # Safety
/// Pointers must be valid; `*out` is freed with [`vs_string_free`].
#[no_mangle]
pub unsafe extern "C" fn vs_vaserstein_symbol(row: *const VsRow, out: *mut *mut c_char) -> VsStatus {
    guard(|| {
        let v = vaserstein_symbol(&borrow(row)?.0)?;
        let j = json!({
            "matrix": io::matrix_to_json(v.matrix.matrix()),
            "pfaffian": v.pfaffian.to_string(),
        });
        put_string(out, j.to_string())
    })
}

/// Pfaffian of an alternating matrix given as a JSON array of rows.
///
/// # Safety
/// Pointers must be valid; `*out` is freed with [`vs_string_free`].
#[no_mangle]
pub unsafe extern "C" fn vs_pfaffian(
    ring: *const VsRing,
    entries_json: *const c_char,
    out: *mut *mut c_char,
) -> VsStatus {
    guard(|| {
        let r = &borrow(ring)?.0;
        let rows: Vec<Vec<String>> = serde_json::from_str(text(entries_json)?).map_err(Error::from)?;
        let m = SkewMatrix::new(Matrix::from_text(r, &rows)?)?;
        put_string(out, pfaffian(&m).to_string())
    })
}

/// Apply `f`, `H`, `alpha` or `alpha-symmetric` to a row of length 4.
/// `f` yields `{"image": [...]}`, the others a row with certificate.
///
/// # Safety
/// Pointers must be valid; `*out` is freed with [`vs_string_free`].
#[no_mangle]
pub unsafe extern "C" fn vs_map_apply(
    row: *const VsRow,
    name: *const c_char,
    out: *mut *mut c_char,
) -> VsStatus {
    guard(|| {
        let r = &borrow(row)?.0;
        let j = match text(name)?.parse::<MapName>()? {
            MapName::F => json!({ "image": io::elements_to_json(&spheres::map_f(r)?) }),
            MapName::H => io::row_to_json(&spheres::compose_h(r)?),
            MapName::Alpha => io::row_to_json(&spheres::map_alpha(r, AlphaMode::General)?),
            MapName::AlphaSymmetric => {
                io::row_to_json(&spheres::map_alpha(r, AlphaMode::Symmetric)?)
            }
            other => {
                return Err(Fail::Status(
                    VsStatus::Input,
                    format!("map `{other}` does not take a row of length 4"),
                ))
            }
        };
        put_string(out, j.to_string())
    })
}

/// `h`: the row of the first four variables of `ring`, certified by itself.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn vs_map_h(ring: *const VsRing, out: *mut *mut VsRow) -> VsStatus {
    guard(|| {
        let row = spheres::map_h(&borrow(ring)?.0)?;
        put(out, Box::into_raw(Box::new(VsRow(row))))
    })
}

/// Hopf invariant of the map `{"vars": [4 names], "components": [3 polys]}`
/// from the fibres over `v1` and `v2` (3 doubles each).
///
/// # Safety
/// `v1`, `v2` must point to 3 doubles; out-pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn vs_hopf_invariant(
    map_json: *const c_char,
    v1: *const f64,
    v2: *const f64,
    grid: usize,
    out_linking: *mut i64,
    out_residual: *mut f64,
) -> VsStatus {
    guard(|| {
        let map = io::parse_map(text(map_json)?)?;
        if v1.is_null() || v2.is_null() {
            return Err(null());
        }
        let p1 = RealPoint::new(std::slice::from_raw_parts(v1, 3).to_vec())?;
        let p2 = RealPoint::new(std::slice::from_raw_parts(v2, 3).to_vec())?;
        let r = realize::hopf_invariant(&map, &p1, &p2, grid)?;
        put(out_linking, r.linking)?;
        put(out_residual, r.residual)
    })
}
