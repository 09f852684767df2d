//! C interface to btspec. Objects are opaque handles released with the
//! matching `*_free`; every call returns a [`BtspecStatus`] and leaves a
//! message for [`btspec_last_error`] on failure.

use btspec::airy1d::{eigenvalue_1d, BoundaryCondition};
use btspec::asympt::{four_term, four_term_scaled};
use btspec::galerkin::{assemble, solve, write_matrix_dump, AssembleOptions, Coupling, SpectralProblem, Spectrum};
use btspec::geometry::{DomainSpec, LocalModel, Orientation};
use btspec::specfun::{airy_pair, airy_prime_zero, airy_zero};
use btspec::{Cx, Error};
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BtspecStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    OutOfRange = 3,
    NoConvergence = 4,
    Truncation = 5,
    Hypothesis = 6,
    Io = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BtspecBc {
    Dirichlet = 0,
    Neumann = 1,
    Robin = 2,
    Transmission = 3,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct BtspecComplex {
    pub re: f64,
    pub im: f64,
}

impl From<Cx> for BtspecComplex {
    fn from(z: Cx) -> Self {
        BtspecComplex { re: z.re, im: z.im }
    }
}

/// Taylor coefficients of V at a localization point; `interior` selects the
/// side of the normal (nonzero: domain on the inner side).
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BtspecLocalModel {
    pub v00: f64,
    pub v01: f64,
    pub v11: f64,
    pub v20: f64,
    pub v02: f64,
    pub curvature: f64,
    pub interior: i32,
}

/// lambda ~ offset + c23 h^{2/3} + c1 h + c43 h^{4/3}
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct BtspecExpansion {
    pub offset: BtspecComplex,
    pub c23: BtspecComplex,
    pub c1: BtspecComplex,
    pub c43: BtspecComplex,
}

pub struct BtspecDomain(DomainSpec);
pub struct BtspecProblem(SpectralProblem);
pub struct BtspecSpectrum(Spectrum);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> BtspecStatus {
    match e {
        Error::Domain(_) | Error::Overflow(_) => BtspecStatus::OutOfRange,
        Error::NoConvergence { .. } | Error::Stationary(_) | Error::BranchCollision(..) | Error::JordanBlock(_) => {
            BtspecStatus::NoConvergence
        }
        Error::Hypothesis(_) => BtspecStatus::Hypothesis,
        Error::Truncation { .. } => BtspecStatus::Truncation,
        Error::Invalid(_) => BtspecStatus::InvalidArgument,
        Error::Io(_) => BtspecStatus::Io,
    }
}

enum Fail {
    Null,
    Lib(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> BtspecStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => BtspecStatus::Ok,
        Ok(Err(Fail::Null)) => {
            set_error("null pointer argument");
            BtspecStatus::NullPointer
        }
        Ok(Err(Fail::Lib(e))) => {
            set_error(&e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("internal panic");
            BtspecStatus::Panic
        }
    }
}

unsafe fn out<'a, T>(p: *mut T) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or(Fail::Null)
}

unsafe fn obj<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref().ok_or(Fail::Null)
}

fn condition(kind: BtspecBc, kappa: f64) -> Result<BoundaryCondition, Fail> {
    let c = match kind {
        BtspecBc::Dirichlet => BoundaryCondition::Dirichlet,
        BtspecBc::Neumann => BoundaryCondition::Neumann,
        BtspecBc::Robin => BoundaryCondition::Robin { kappa },
        BtspecBc::Transmission => BoundaryCondition::Transmission { kappa },
    };
    if !kappa.is_finite() && matches!(kind, BtspecBc::Robin | BtspecBc::Transmission) {
        return Err(Error::Invalid("kappa must be finite".into()).into());
    }
    Ok(c)
}

fn boxed<T>(v: T, dst: *mut *mut T) -> Result<(), Fail> {
    let d = unsafe { out(dst)? };
    *d = Box::into_raw(Box::new(v));
    Ok(())
}

/// Message of the last failed call on this thread; valid until the next failure.
#[no_mangle]
pub extern "C" fn btspec_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

#[no_mangle]
pub extern "C" fn btspec_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Ai(z) and Ai'(z).
///
/// # Safety
/// `ai` and `aip` must be valid writable pointers.
#[no_mangle]
pub unsafe extern "C" fn btspec_airy(z: BtspecComplex, ai: *mut BtspecComplex, aip: *mut BtspecComplex) -> BtspecStatus {
    guard(|| {
        let (a, b) = airy_pair(Cx::new(z.re, z.im))?;
        *out(ai)? = a.into();
        *out(aip)? = b.into();
        Ok(())
    })
}

/// n-th zero of Ai (negative), n >= 1.
///
/// # Safety
/// `value` must be a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn btspec_airy_zero(n: usize, value: *mut f64) -> BtspecStatus {
    guard(|| {
        *out(value)? = airy_zero(n)?;
        Ok(())
    })
}

/// n-th zero of Ai' (negative), n >= 1.
///
/// # Safety
/// `value` must be a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn btspec_airy_prime_zero(n: usize, value: *mut f64) -> BtspecStatus {
    guard(|| {
        *out(value)? = airy_prime_zero(n)?;
        Ok(())
    })
}

/// lambda0 of the 1D complex Airy problem with slope v01.
///
/// # Safety
/// `lambda0` must be a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn btspec_eigenvalue_1d(
    bc: BtspecBc,
    kappa: f64,
    n: usize,
    v01: f64,
    lambda0: *mut BtspecComplex,
) -> BtspecStatus {
    guard(|| {
        let p = eigenvalue_1d(condition(bc, kappa)?, n, v01)?;
        *out(lambda0)? = p.lambda0.into();
        Ok(())
    })
}

/// Four-term expansion; a finite `kappa_hat >= 0` selects the scaled regime
/// for Robin/transmission, NaN the fixed one.
///
/// # Safety
/// `model` must be readable and `result` writable.
#[no_mangle]
pub unsafe extern "C" fn btspec_four_term(
    model: *const BtspecLocalModel,
    bc: BtspecBc,
    kappa: f64,
    kappa_hat: f64,
    n: usize,
    k: usize,
    result: *mut BtspecExpansion,
) -> BtspecStatus {
    guard(|| {
        let m = obj(model)?;
        let lm = LocalModel {
            v00: m.v00,
            v01: m.v01,
            v11: m.v11,
            v20: m.v20,
            v02: m.v02,
            curvature: m.curvature,
            orientation: if m.interior != 0 { Orientation::Interior } else { Orientation::Exterior },
        };
        let cond = condition(bc, kappa)?;
        let e = if kappa_hat.is_nan() || matches!(bc, BtspecBc::Dirichlet | BtspecBc::Neumann) {
            four_term(&lm, cond, n, k)?
        } else {
            four_term_scaled(&lm, cond, kappa_hat, n, k)?
        };
        *out(result)? = BtspecExpansion { offset: e.offset.into(), c23: e.c23.into(), c1: e.c1.into(), c43: e.c43.into() };
        Ok(())
    })
}

/// # Safety
/// `domain` must be a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn btspec_domain_disk(r0: f64, bc: BtspecBc, kappa: f64, domain: *mut *mut BtspecDomain) -> BtspecStatus {
    guard(|| {
        let d = DomainSpec::disk(r0, condition(bc, kappa)?);
        d.validate()?;
        boxed(BtspecDomain(d), domain)
    })
}

/// # Safety
/// `domain` must be a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn btspec_domain_annulus(
    r1: f64,
    r2: f64,
    outer: BtspecBc,
    outer_kappa: f64,
    inner: BtspecBc,
    inner_kappa: f64,
    domain: *mut *mut BtspecDomain,
) -> BtspecStatus {
    guard(|| {
        let d = DomainSpec::annulus(r1, r2, condition(outer, outer_kappa)?, condition(inner, inner_kappa)?);
        d.validate()?;
        boxed(BtspecDomain(d), domain)
    })
}

/// Disk of radius r1 inside an annulus up to r2, coupled by a transmission condition.
///
/// # Safety
/// `domain` must be a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn btspec_domain_two_layer(
    r1: f64,
    r2: f64,
    outer: BtspecBc,
    outer_kappa: f64,
    kappa: f64,
    domain: *mut *mut BtspecDomain,
) -> BtspecStatus {
    guard(|| {
        let d = DomainSpec::two_layer(r1, r2, condition(outer, outer_kappa)?, kappa);
        d.validate()?;
        boxed(BtspecDomain(d), domain)
    })
}

/// # Safety
/// `area` must be a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn btspec_domain_area(domain: *const BtspecDomain, area: *mut f64) -> BtspecStatus {
    guard(|| {
        *out(area)? = obj(domain)?.0.area();
        Ok(())
    })
}

/// # Safety
/// `domain` must come from a `btspec_domain_*` constructor or be null.
#[no_mangle]
pub unsafe extern "C" fn btspec_domain_free(domain: *mut BtspecDomain) {
    if !domain.is_null() {
        drop(Box::from_raw(domain));
    }
}

/// Galerkin matrix with `m` basis functions. `kappa_hat` NaN uses the fixed
/// coupling; otherwise every boundary parameter enters as kappa_hat h^2.
///
/// # Safety
/// `domain` must be a live handle and `problem` writable.
#[no_mangle]
pub unsafe extern "C" fn btspec_problem_assemble(
    domain: *const BtspecDomain,
    h: f64,
    m: usize,
    kappa_hat: f64,
    allow_under_resolved: bool,
    problem: *mut *mut BtspecProblem,
) -> BtspecStatus {
    guard(|| {
        let d = obj(domain)?;
        let coupling = if kappa_hat.is_nan() { Coupling::Fixed } else { Coupling::Scaled { kappa_hat } };
        let p = assemble(&d.0, h, m, AssembleOptions { coupling, allow_under_resolved })?;
        boxed(BtspecProblem(p), problem)
    })
}

/// # Safety
/// `problem` must be a live handle; outputs writable.
#[no_mangle]
pub unsafe extern "C" fn btspec_problem_info(problem: *const BtspecProblem, size: *mut usize, ratio: *mut f64) -> BtspecStatus {
    guard(|| {
        let p = &obj(problem)?.0;
        *out(size)? = p.size();
        *out(ratio)? = p.truncation_ratio;
        Ok(())
    })
}

/// Writes the binary matrix dump to `path` (NUL-terminated UTF-8).
///
/// # Safety
/// `problem` must be a live handle and `path` a valid C string.
#[no_mangle]
pub unsafe extern "C" fn btspec_problem_dump(problem: *const BtspecProblem, path: *const c_char) -> BtspecStatus {
    guard(|| {
        let p = &obj(problem)?.0;
        if path.is_null() {
            return Err(Fail::Null);
        }
        let path = CStr::from_ptr(path).to_str().map_err(|_| Error::Invalid("path is not UTF-8".into()))?;
        let mut buf = Vec::new();
        write_matrix_dump(p, &mut buf)?;
        std::fs::write(path, buf).map_err(Error::from)?;
        Ok(())
    })
}

/// # Safety
/// `problem` must come from `btspec_problem_assemble` or be null.
#[no_mangle]
pub unsafe extern "C" fn btspec_problem_free(problem: *mut BtspecProblem) {
    if !problem.is_null() {
        drop(Box::from_raw(problem));
    }
}

/// The `count` eigenvalues of smallest real part.
///
/// # Safety
/// `problem` must be a live handle and `spectrum` writable.
#[no_mangle]
pub unsafe extern "C" fn btspec_problem_solve(
    problem: *const BtspecProblem,
    count: usize,
    with_vectors: bool,
    spectrum: *mut *mut BtspecSpectrum,
) -> BtspecStatus {
    guard(|| {
        let p = &obj(problem)?.0;
        if count == 0 || count > p.size() {
            return Err(Error::Invalid(format!("count {count} outside 1..={}", p.size())).into());
        }
        boxed(BtspecSpectrum(solve(p, count, with_vectors)?), spectrum)
    })
}

/// Number of eigenvalues held; 0 for a null handle.
///
/// # Safety
/// `spectrum` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn btspec_spectrum_len(spectrum: *const BtspecSpectrum) -> usize {
    spectrum.as_ref().map_or(0, |s| s.0.eigenvalues.len())
}

/// # Safety
/// `spectrum` must be a live handle and `value` writable.
#[no_mangle]
pub unsafe extern "C" fn btspec_spectrum_eigenvalue(
    spectrum: *const BtspecSpectrum,
    index: usize,
    value: *mut BtspecComplex,
) -> BtspecStatus {
    guard(|| {
        let s = &obj(spectrum)?.0;
        let z = s.eigenvalues.get(index).ok_or_else(|| Error::Domain(format!("index {index} out of range")))?;
        *out(value)? = (*z).into();
        Ok(())
    })
}

/// Copies eigenvector `index` (basis coefficients) into `buf` of length `len`,
/// which must equal the basis size.
///
/// # Safety
/// `spectrum` must be a live handle and `buf` writable for `len` elements.
#[no_mangle]
pub unsafe extern "C" fn btspec_spectrum_vector(
    spectrum: *const BtspecSpectrum,
    index: usize,
    buf: *mut BtspecComplex,
    len: usize,
) -> BtspecStatus {
    guard(|| {
        let s = &obj(spectrum)?.0;
        let vs = s.vectors.as_ref().ok_or_else(|| Error::Invalid("eigenvectors were not requested".into()))?;
        let v = vs.get(index).ok_or_else(|| Error::Domain(format!("index {index} out of range")))?;
        if len != v.len() {
            return Err(Error::Invalid(format!("buffer length {len}, vector length {}", v.len())).into());
        }
        if buf.is_null() {
            return Err(Fail::Null);
        }
        let dst = std::slice::from_raw_parts_mut(buf, len);
        for (d, z) in dst.iter_mut().zip(v) {
            *d = (*z).into();
        }
        Ok(())
    })
}

/// # Safety
/// `spectrum` must come from `btspec_problem_solve` or be null.
#[no_mangle]
pub unsafe extern "C" fn btspec_spectrum_free(spectrum: *mut BtspecSpectrum) {
    if !spectrum.is_null() {
        drop(Box::from_raw(spectrum));
    }
}
