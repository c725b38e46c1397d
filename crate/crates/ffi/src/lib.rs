//! C ABI over `hopf-core`.
//!
//! Every fallible call returns a [`HopfStatus`] and writes its result
//! through an out pointer. On failure the message is kept per thread and
//! read with [`hopf_last_error`]. Strings returned to the caller are owned
//! by the caller and released with [`hopf_string_free`]; handles are
//! released with [`hopf_algebra_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hopf_core::document::{parse_element, PresentationDocument};
use hopf_core::error::HopfError;
use hopf_core::gallery::gallery_build;
use hopf_core::hopf::{check_axioms, indecomposables, Bialgebra};
use hopf_core::theorems::{is_split, iso_test_hopf};

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HopfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Validation = 4,
    Domain = 5,
    Truncation = 6,
    Structural = 7,
    Infeasible = 8,
    Budget = 9,
    Invariant = 10,
    Panic = 11,
}

impl From<&HopfError> for HopfStatus {
    fn from(e: &HopfError) -> Self {
        match e {
            HopfError::Parse(_) => HopfStatus::Parse,
            HopfError::Validation(_) => HopfStatus::Validation,
            HopfError::Domain(_) => HopfStatus::Domain,
            HopfError::Truncation { .. } => HopfStatus::Truncation,
            HopfError::Structural(_) => HopfStatus::Structural,
            HopfError::Infeasible { .. } => HopfStatus::Infeasible,
            HopfError::Budget(_) => HopfStatus::Budget,
            HopfError::Invariant { .. } => HopfStatus::Invariant,
        }
    }
}

/// Outcome of [`hopf_iso`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HopfVerdict {
    NotIsomorphic = 0,
    Isomorphic = 1,
    Undetermined = 2,
}

/// A connected graded Hopf algebra truncated at a fixed degree.
pub struct HopfAlgebra {
    inner: Bialgebra,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Failure(HopfStatus, String);

impl From<HopfError> for Failure {
    fn from(e: HopfError) -> Self {
        Failure((&e).into(), e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn guard(f: impl FnOnce() -> Outcome) -> HopfStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => HopfStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal panic: {msg}"));
            HopfStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(HopfStatus::NullPointer, format!("{what} is null"))
}

/// # Safety
/// `s` is null or a NUL-terminated string.
unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Failure(HopfStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

/// # Safety
/// `h` is null or a live handle.
unsafe fn read_handle<'a>(h: *const HopfAlgebra, what: &str) -> Result<&'a Bialgebra, Failure> {
    h.as_ref().map(|h| &h.inner).ok_or_else(|| null(what))
}

/// # Safety
/// `out` is null or valid for one write.
unsafe fn write<T>(out: *mut T, value: T) -> Outcome {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

/// # Safety
/// `out` is null or valid for one write.
unsafe fn write_string(out: *mut *mut c_char, s: String) -> Outcome {
    let c = CString::new(s).map_err(|_| Failure(HopfStatus::Invariant, "output holds a NUL byte".into()))?;
    write(out, c.into_raw())
}

/// The message of the last failed call on this thread, or null. The
/// pointer stays valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn hopf_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` is null or was returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hopf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a named gallery fixture (or the source of a gallery map) in
/// characteristic `characteristic` (0 for the rationals) up to degree
/// `truncation`.
///
/// # Safety
/// `name` is a NUL-terminated string; `out` is valid for one write.
#[no_mangle]
pub unsafe extern "C" fn hopf_gallery_open(
    name: *const c_char,
    characteristic: u32,
    truncation: usize,
    out: *mut *mut HopfAlgebra,
) -> HopfStatus {
    guard(|| {
        let name = read_str(name, "name")?;
        let h = gallery_build(name, characteristic, truncation)?.bialgebra().clone();
        write(out, Box::into_raw(Box::new(HopfAlgebra { inner: h })))
    })
}

/// Builds a Hopf algebra from a JSON presentation document at the
/// document's own truncation.
///
/// # Safety
/// `json` is a NUL-terminated string; `out` is valid for one write.
#[no_mangle]
pub unsafe extern "C" fn hopf_document_open(json: *const c_char, out: *mut *mut HopfAlgebra) -> HopfStatus {
    guard(|| {
        let doc = PresentationDocument::from_json(read_str(json, "json")?)?;
        let h = doc.to_presentation()?.hopf(doc.truncation)?;
        write(out, Box::into_raw(Box::new(HopfAlgebra { inner: h })))
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `h` is null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hopf_algebra_free(h: *mut HopfAlgebra) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// The truncation degree of `h`.
///
/// # Safety
/// `h` is a live handle; `out` is valid for one write.
#[no_mangle]
pub unsafe extern "C" fn hopf_algebra_bound(h: *const HopfAlgebra, out: *mut usize) -> HopfStatus {
    guard(|| write(out, read_handle(h, "algebra")?.bound()))
}

/// The dimension of `h` in `degree` (0 above the bound).
///
/// # Safety
/// `h` is a live handle; `out` is valid for one write.
#[no_mangle]
pub unsafe extern "C" fn hopf_algebra_dimension(h: *const HopfAlgebra, degree: usize, out: *mut usize) -> HopfStatus {
    guard(|| {
        let h = read_handle(h, "algebra")?;
        let dim = if degree <= h.bound() { h.basis().dim(degree) } else { 0 };
        write(out, dim)
    })
}

/// The product of two elements, e.g. `"x^2 + y"`, as text.
///
/// # Safety
/// `h` is a live handle; `left` and `right` are NUL-terminated strings;
/// `out` is valid for one write. Free the result with [`hopf_string_free`].
#[no_mangle]
pub unsafe extern "C" fn hopf_product(
    h: *const HopfAlgebra,
    left: *const c_char,
    right: *const c_char,
    out: *mut *mut c_char,
) -> HopfStatus {
    guard(|| {
        let h = read_handle(h, "algebra")?;
        let a = parse_element(h, read_str(left, "left")?)?;
        let b = parse_element(h, read_str(right, "right")?)?;
        let degree = |v: &hopf_core::linear::Vector| v.keys().map(|i| h.degree(*i)).max().unwrap_or(0);
        if degree(&a) + degree(&b) > h.bound() {
            return Err(HopfError::truncation("ffi::product", degree(&a) + degree(&b), h.bound()).into());
        }
        write_string(out, h.format_vector(&h.mul_vec(&a, &b)))
    })
}

/// The coproduct of an element as text, with `⊗` between tensor factors.
///
/// # Safety
/// As for [`hopf_product`].
#[no_mangle]
pub unsafe extern "C" fn hopf_coproduct(
    h: *const HopfAlgebra,
    element: *const c_char,
    out: *mut *mut c_char,
) -> HopfStatus {
    guard(|| {
        let h = read_handle(h, "algebra")?;
        let v = parse_element(h, read_str(element, "element")?)?;
        write_string(out, h.format_tensor(&h.coproduct_vec(&v)))
    })
}

/// The chain decomposition of the V-module of indecomposables, e.g.
/// `"{(1,0),(2,1)}"`.
///
/// # Safety
/// `h` is a live handle; `out` is valid for one write. Free the result
/// with [`hopf_string_free`].
#[no_mangle]
pub unsafe extern "C" fn hopf_classify(h: *const HopfAlgebra, out: *mut *mut c_char) -> HopfStatus {
    guard(|| {
        let h = read_handle(h, "algebra")?;
        let q = indecomposables(h)?;
        write_string(out, q.v_module()?.classify().to_string())
    })
}

/// Whether every bialgebra axiom holds up to the bound.
///
/// # Safety
/// `h` is a live handle; `out` is valid for one write.
#[no_mangle]
pub unsafe extern "C" fn hopf_check_axioms(h: *const HopfAlgebra, out: *mut bool) -> HopfStatus {
    guard(|| write(out, check_axioms(read_handle(h, "algebra")?).passed()))
}

/// Whether the projection onto indecomposables has a V-equivariant section.
///
/// # Safety
/// `h` is a live handle; `out` is valid for one write.
#[no_mangle]
pub unsafe extern "C" fn hopf_is_split(h: *const HopfAlgebra, out: *mut bool) -> HopfStatus {
    guard(|| write(out, is_split(read_handle(h, "algebra")?)?.split))
}

/// Hopf-level isomorphism test. `detail`, when not null, receives the
/// evidence text, to be freed with [`hopf_string_free`].
///
/// # Safety
/// `a` and `b` are live handles; `out` is valid for one write; `detail` is
/// null or valid for one write.
#[no_mangle]
pub unsafe extern "C" fn hopf_iso(
    a: *const HopfAlgebra,
    b: *const HopfAlgebra,
    out: *mut HopfVerdict,
    detail: *mut *mut c_char,
) -> HopfStatus {
    guard(|| {
        let v = iso_test_hopf(read_handle(a, "first algebra")?, read_handle(b, "second algebra")?)?;
        let verdict = match v.verdict {
            Some(true) => HopfVerdict::Isomorphic,
            Some(false) => HopfVerdict::NotIsomorphic,
            None => HopfVerdict::Undetermined,
        };
        write(out, verdict)?;
        if !detail.is_null() {
            write_string(detail, v.detail)?;
        }
        Ok(())
    })
}
