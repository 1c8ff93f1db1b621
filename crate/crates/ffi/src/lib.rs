//! C interface to `splitlat`.
//!
//! Posets and lattices are opaque handles owned by the caller and released
//! with the matching `*_free` function. Every fallible call returns a
//! [`SplitlatStatus`]; on failure [`splitlat_last_error`] describes it.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use splitlat::io::{PosetDoc, PosetObject};
use splitlat::lattice::{IdealLattice, LatticeError};
use splitlat::weyl::{character_from_lattice, rgf_from_lattice, verify_weyl_character};
use splitlat::{semistandard_poset, Algebra, HighestWeight, Order, VertexColoredPoset};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitlatStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    TooManyIdeals = 4,
    BufferTooSmall = 5,
    Panic = 6,
}

/// A vertex-colored poset, possibly carrying a chain function.
pub struct SplitlatPoset {
    obj: PosetObject,
}

impl SplitlatPoset {
    fn base(&self) -> &VertexColoredPoset {
        match &self.obj {
            PosetObject::Vertex(p) => p,
            PosetObject::Grid(g) => g.base(),
            PosetObject::Edge(_) => unreachable!("edge-colored posets are rejected on entry"),
        }
    }
}

/// The lattice of order ideals of a poset.
pub struct SplitlatLattice {
    lattice: IdealLattice,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

type Res = Result<(), (SplitlatStatus, String)>;

fn guard(f: impl FnOnce() -> Res) -> SplitlatStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SplitlatStatus::Ok,
        Ok(Err((code, msg))) => {
            set_error(msg);
            code
        }
        Err(_) => {
            set_error("internal panic");
            SplitlatStatus::Panic
        }
    }
}

fn null<T>(what: &str) -> Result<T, (SplitlatStatus, String)> {
    Err((SplitlatStatus::NullPointer, format!("{what} is null")))
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, (SplitlatStatus, String)> {
    if p.is_null() {
        return null(what);
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (SplitlatStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, (SplitlatStatus, String)> {
    p.as_ref().map_or_else(|| null(what), Ok)
}

unsafe fn out_ptr<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, (SplitlatStatus, String)> {
    p.as_mut().map_or_else(|| null(what), Ok)
}

fn invalid(msg: String) -> (SplitlatStatus, String) {
    (SplitlatStatus::InvalidArgument, msg)
}

fn string_out(s: String, out: *mut *mut c_char) -> Res {
    let out = unsafe { out_ptr(out, "out")? };
    *out = CString::new(s).map_err(|e| invalid(e.to_string()))?.into_raw();
    Ok(())
}

/// Message for the last failed call on this thread, or null. Valid until
/// the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn splitlat_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Builds the semistandard poset of `algebra` ("a1a1", "a2", "c2", "g2")
/// with highest weight `(a, b)`. `order` is "ba" or "ab".
///
/// # Safety
/// String arguments must be null or NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn splitlat_poset_build(
    algebra: *const c_char,
    a: u32,
    b: u32,
    order: *const c_char,
    out: *mut *mut SplitlatPoset,
) -> SplitlatStatus {
    guard(|| {
        let g: Algebra = str_arg(algebra, "algebra")?.parse().map_err(invalid)?;
        let o: Order = str_arg(order, "order")?.parse().map_err(invalid)?;
        let out = out_ptr(out, "out")?;
        let p = semistandard_poset(g, o, HighestWeight::new(a, b));
        *out = Box::into_raw(Box::new(SplitlatPoset { obj: PosetObject::Grid(p) }));
        Ok(())
    })
}

/// Reads a vertex-colored poset document.
///
/// # Safety
/// `json` must be null or NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn splitlat_poset_from_json(json: *const c_char, out: *mut *mut SplitlatPoset) -> SplitlatStatus {
    guard(|| {
        let text = str_arg(json, "json")?;
        let out = out_ptr(out, "out")?;
        let parse = |e: splitlat::io::IoError| (SplitlatStatus::Parse, e.to_string());
        let obj = PosetDoc::parse(text).and_then(|d| d.to_object()).map_err(parse)?;
        if let PosetObject::Edge(_) = obj {
            return Err(invalid("expected a vertex-colored poset".into()));
        }
        *out = Box::into_raw(Box::new(SplitlatPoset { obj }));
        Ok(())
    })
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `p` must be null or a live poset handle.
#[no_mangle]
pub unsafe extern "C" fn splitlat_poset_len(p: *const SplitlatPoset) -> usize {
    p.as_ref().map_or(0, |p| p.base().len())
}

/// Serializes the poset; release the string with [`splitlat_string_free`].
///
/// # Safety
/// `p` must be a live poset handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn splitlat_poset_to_json(p: *const SplitlatPoset, out: *mut *mut c_char) -> SplitlatStatus {
    guard(|| {
        let p = handle(p, "poset")?;
        string_out(p.obj.to_doc().to_json(), out)
    })
}

/// # Safety
/// `p` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn splitlat_poset_free(p: *mut SplitlatPoset) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Enumerates the order ideals of `p`, failing with `TooManyIdeals` past
/// `max_ideals`.
///
/// # Safety
/// `p` must be a live poset handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn splitlat_lattice_enumerate(
    p: *const SplitlatPoset,
    max_ideals: usize,
    out: *mut *mut SplitlatLattice,
) -> SplitlatStatus {
    guard(|| {
        let p = handle(p, "poset")?;
        let out = out_ptr(out, "out")?;
        let lattice = IdealLattice::of_poset(p.base(), max_ideals).map_err(|e| match e {
            LatticeError::TooManyIdeals(_) => (SplitlatStatus::TooManyIdeals, e.to_string()),
            _ => invalid(e.to_string()),
        })?;
        *out = Box::into_raw(Box::new(SplitlatLattice { lattice }));
        Ok(())
    })
}

/// Number of lattice elements, or 0 for a null handle.
///
/// # Safety
/// `l` must be null or a live lattice handle.
#[no_mangle]
pub unsafe extern "C" fn splitlat_lattice_len(l: *const SplitlatLattice) -> usize {
    l.as_ref().map_or(0, |l| l.lattice.len())
}

/// Weight of element `index` in fundamental-weight coordinates.
///
/// # Safety
/// `l` must be a live lattice handle; `a` and `b` must be writable.
#[no_mangle]
pub unsafe extern "C" fn splitlat_lattice_weight(
    l: *const SplitlatLattice,
    index: usize,
    a: *mut i64,
    b: *mut i64,
) -> SplitlatStatus {
    guard(|| {
        let l = &handle(l, "lattice")?.lattice;
        let (a, b) = (out_ptr(a, "a")?, out_ptr(b, "b")?);
        if index >= l.len() {
            return Err(invalid(format!("index {index} out of range for {} elements", l.len())));
        }
        let w = l.weight(index);
        (*a, *b) = (w.a, w.b);
        Ok(())
    })
}

/// Writes the rank generating function coefficients into `buf`. The
/// required length is always stored in `len`; if `cap` is smaller the call
/// fails with `BufferTooSmall` and `buf` may be null.
///
/// # Safety
/// `l` must be a live lattice handle; `buf` must hold `cap` values.
#[no_mangle]
pub unsafe extern "C" fn splitlat_lattice_rgf(
    l: *const SplitlatLattice,
    buf: *mut i64,
    cap: usize,
    len: *mut usize,
) -> SplitlatStatus {
    guard(|| {
        let l = &handle(l, "lattice")?.lattice;
        let len = out_ptr(len, "len")?;
        let r = rgf_from_lattice(l);
        let coeffs = r.coeffs();
        *len = coeffs.len();
        if cap < coeffs.len() {
            return Err((SplitlatStatus::BufferTooSmall, format!("need {} coefficients", coeffs.len())));
        }
        if !coeffs.is_empty() {
            if buf.is_null() {
                return null("buf");
            }
            std::slice::from_raw_parts_mut(buf, coeffs.len()).copy_from_slice(coeffs);
        }
        Ok(())
    })
}

/// Weight generating function as text, e.g. `1*x^-1*y^1 + 1*x^1*y^0`.
///
/// # Safety
/// `l` must be a live lattice handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn splitlat_lattice_character(l: *const SplitlatLattice, out: *mut *mut c_char) -> SplitlatStatus {
    guard(|| {
        let l = &handle(l, "lattice")?.lattice;
        string_out(character_from_lattice(l).to_string(), out)
    })
}

/// Sets `ok` to whether the lattice's weight generating function is the Weyl
/// character of `algebra` at `(a, b)`.
///
/// # Safety
/// `l` must be a live lattice handle; `algebra` NUL-terminated; `ok` writable.
#[no_mangle]
pub unsafe extern "C" fn splitlat_lattice_verify_character(
    l: *const SplitlatLattice,
    algebra: *const c_char,
    a: u32,
    b: u32,
    ok: *mut bool,
) -> SplitlatStatus {
    guard(|| {
        let l = &handle(l, "lattice")?.lattice;
        let g: Algebra = str_arg(algebra, "algebra")?.parse().map_err(invalid)?;
        let ok = out_ptr(ok, "ok")?;
        *ok = verify_weyl_character(g, HighestWeight::new(a, b), &character_from_lattice(l));
        Ok(())
    })
}

/// # Safety
/// `l` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn splitlat_lattice_free(l: *mut SplitlatLattice) {
    if !l.is_null() {
        drop(Box::from_raw(l));
    }
}

/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn splitlat_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
