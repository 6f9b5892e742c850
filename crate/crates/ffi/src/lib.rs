//! C ABI over `hfst-core`.
//!
//! Objects cross the boundary as opaque handles created by `*_parse`,
//! `*_builtin` or `*_from_curve` and released with the matching `*_free`.
//! Every fallible call returns an [`HfstStatus`] and writes its result
//! through an out-pointer; on failure, [`hfst_last_error`] describes the
//! problem until the next call on the same thread. Text arguments are
//! NUL-terminated UTF-8 in the formats accepted by the `hfst` command line.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use hfst_core::curves::curve_to_typed;
use hfst_core::format::{parse_ainfty, parse_curve, parse_seifert, parse_typed};
use hfst_core::hfst::{is_hfst, HfstError, HfstInput};
use hfst_core::pairing::{box_tensor, homology_dim, mor_pairing};
use hfst_core::seifert::classify;
use hfst_core::structures::{builtin, check_ainfty, check_typed, AInftyMod, Builtin, TypeD};

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HfstStatus {
    Ok = 0,
    /// The input parsed but is not a valid object, or a precondition failed.
    Invalid = 1,
    Parse = 2,
    /// Independent computations disagreed.
    Inconsistent = 3,
    NullArgument = 4,
    /// A Rust panic was caught at the boundary.
    Panic = 5,
}

/// Opaque type D structure.
pub struct HfstTypeD(TypeD);

/// Opaque A∞-module.
pub struct HfstModule(AInftyMod);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Fail(HfstStatus, String);

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> HfstStatus {
    set_error("");
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => HfstStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            HfstStatus::Panic
        }
    }
}

/// # Safety
/// `p` is null or a valid NUL-terminated string.
unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(HfstStatus::NullArgument, "null string argument".into()));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(HfstStatus::Parse, "argument is not UTF-8".into()))
}

/// # Safety
/// `p` is null or a handle that is still alive.
unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref()
        .ok_or_else(|| Fail(HfstStatus::NullArgument, "null handle".into()))
}

fn put<T>(out: *mut T, v: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(HfstStatus::NullArgument, "null output pointer".into()));
    }
    // SAFETY: non-null and, by the caller's contract, writable
    unsafe { out.write(v) };
    Ok(())
}

fn invalid(e: impl ToString) -> Fail {
    Fail(HfstStatus::Invalid, e.to_string())
}

fn parse_fail(e: impl ToString) -> Fail {
    Fail(HfstStatus::Parse, e.to_string())
}

/// Message for the last failed call on this thread, or an empty string.
/// The pointer stays valid until the next call into this library.
#[no_mangle]
pub extern "C" fn hfst_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn hfst_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parses and validates a type D structure.
///
/// # Safety
/// `src` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn hfst_typed_parse(src: *const c_char, out: *mut *mut HfstTypeD) -> HfstStatus {
    guard(|| {
        let p = parse_typed(text(src)?).map_err(parse_fail)?;
        check_typed(&p).map_err(invalid)?;
        put(out, Box::into_raw(Box::new(HfstTypeD(p))))
    })
}

/// Type D structure of a multicurve given in curve format.
///
/// # Safety
/// `src` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn hfst_typed_from_curve(src: *const c_char, out: *mut *mut HfstTypeD) -> HfstStatus {
    guard(|| {
        let c = parse_curve(text(src)?).map_err(parse_fail)?;
        let p = curve_to_typed(&c).map_err(invalid)?;
        put(out, Box::into_raw(Box::new(HfstTypeD(p))))
    })
}

/// Built-in type D structure (`fig3_typeD`).
///
/// # Safety
/// `name` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn hfst_typed_builtin(name: *const c_char, out: *mut *mut HfstTypeD) -> HfstStatus {
    guard(|| match builtin(text(name)?).map_err(invalid)? {
        Builtin::TypeD(p) => put(out, Box::into_raw(Box::new(HfstTypeD(p)))),
        Builtin::Module(_) => Err(invalid("builtin is a module, not a type D structure")),
    })
}

/// # Safety
/// `p` is null or a live handle, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hfst_typed_free(p: *mut HfstTypeD) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Number of generators, or 0 for a null handle.
///
/// # Safety
/// `p` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hfst_typed_generator_count(p: *const HfstTypeD) -> usize {
    p.as_ref().map_or(0, |p| p.0.len())
}

/// Parses and validates an A∞-module.
///
/// # Safety
/// `src` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn hfst_module_parse(src: *const c_char, out: *mut *mut HfstModule) -> HfstStatus {
    guard(|| {
        let m = parse_ainfty(text(src)?).map_err(parse_fail)?;
        check_ainfty(&m).map_err(invalid)?;
        put(out, Box::into_raw(Box::new(HfstModule(m))))
    })
}

/// Built-in module (`S_untwisted_bounded`, `S_twisted_bounded`).
///
/// # Safety
/// `name` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn hfst_module_builtin(name: *const c_char, out: *mut *mut HfstModule) -> HfstStatus {
    guard(|| match builtin(text(name)?).map_err(invalid)? {
        Builtin::Module(m) => put(out, Box::into_raw(Box::new(HfstModule(m)))),
        Builtin::TypeD(_) => Err(invalid("builtin is a type D structure, not a module")),
    })
}

/// # Safety
/// `m` is null or a live handle, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hfst_module_free(m: *mut HfstModule) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Homology dimension of `m ⊠ p`, over F₂(t) for a Laurent module.
///
/// # Safety
/// Handles are live; `dim` is writable.
#[no_mangle]
pub unsafe extern "C" fn hfst_box_tensor_dim(
    m: *const HfstModule,
    p: *const HfstTypeD,
    dim: *mut usize,
) -> HfstStatus {
    guard(|| {
        let c = box_tensor(&handle(m)?.0, &handle(p)?.0).map_err(invalid)?;
        put(dim, homology_dim(&c).map_err(invalid)?)
    })
}

/// Homology dimension of the morphism complex `Mor(p1, p2)`.
///
/// # Safety
/// Handles are live; `dim` is writable.
#[no_mangle]
pub unsafe extern "C" fn hfst_mor_dim(p1: *const HfstTypeD, p2: *const HfstTypeD, dim: *mut usize) -> HfstStatus {
    guard(|| {
        let c = mor_pairing(&handle(p1)?.0, &handle(p2)?.0).map_err(invalid)?;
        put(dim, homology_dim(&c).map_err(invalid)?)
    })
}

fn verdict(input: &HfstInput, window: usize, out: *mut bool) -> Result<(), Fail> {
    let window = (window > 0).then_some(window);
    match is_hfst(input, window) {
        Ok(v) => put(out, v.is_hfst),
        Err(e @ HfstError::Inconsistent(_)) => Err(Fail(HfstStatus::Inconsistent, e.to_string())),
        Err(e) => Err(invalid(e)),
    }
}

/// HFST verdict for a λ-framed type D structure. `window = 0` selects the
/// default filling window.
///
/// # Safety
/// `p` is live; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn hfst_is_hfst_typed(p: *const HfstTypeD, window: usize, out: *mut bool) -> HfstStatus {
    guard(|| verdict(&HfstInput::TypeD(handle(p)?.0.clone()), window, out))
}

/// HFST verdict for a λ-framed multicurve in curve format.
///
/// # Safety
/// `src` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn hfst_is_hfst_curve(src: *const c_char, window: usize, out: *mut bool) -> HfstStatus {
    guard(|| {
        let c = parse_curve(text(src)?).map_err(parse_fail)?;
        verdict(&HfstInput::Curve(c), window, out)
    })
}

/// Seifert classification of `base=disk|mobius; cones=...`: the verdict and
/// the distance between the rational longitude and the fiber.
///
/// # Safety
/// `src` is a NUL-terminated string; both outputs are writable.
#[no_mangle]
pub unsafe extern "C" fn hfst_seifert_classify(src: *const c_char, is_hfst: *mut bool, delta: *mut u64) -> HfstStatus {
    guard(|| {
        let d = parse_seifert(text(src)?).map_err(parse_fail)?;
        let v = classify(&d);
        put(is_hfst, v.is_hfst)?;
        put(delta, v.longitude.delta)
    })
}
