//! C interface to the `freegen` library.
//!
//! Every fallible function returns an [`FgStatus`] and hands results back
//! through out pointers. Heap-allocated results must be released with the
//! matching `fg_*_free` function. Integer values cross the boundary as
//! decimal strings so arbitrarily large coefficients survive intact.
//!
//! The generated header lives at `include/freegen.h` and is refreshed on
//! every build.

use std::ffi::{c_char, CString};

use freegen::expansion::{mass_check, WordLengthExpansion};
use freegen::group::GroupParameter;
use freegen::nc::catalan;
use freegen::oracle::{closed_walk_count, exhaustive_expansion, DEFAULT_ORACLE_BUDGET};
use freegen::recurrence::{expand_power, moment, moment_series};
use freegen::series::FormalSeries;
use freegen::transform::{r_transform, RTransformMethod, TransformOptions};
use freegen::verify::{run_verification, VerifyConfig};
use freegen::Error;

/// Status code returned by every fallible function in this interface.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FgStatus {
    /// The call succeeded.
    Ok = 0,
    /// An argument was rejected: zero generators, an order outside the
    /// computed range, a malformed block type, and similar.
    InvalidArgument = 1,
    /// The request mixes parities where the computation requires one.
    Parity = 2,
    /// The request exceeds a hard size limit of the chosen algorithm.
    SizeTooLarge = 3,
    /// The walk oracle needs more states than the supplied budget allows.
    BudgetExhausted = 4,
    /// A required pointer argument was null.
    NullPointer = 5,
}

/// Algorithm that produced a cumulant series.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FgMethod {
    /// Exact summation over noncrossing partitions.
    Lattice = 0,
    /// Coefficient recursion on the moment series.
    Recursion = 1,
}

/// Word-length expansion of a power of the generating operator (opaque).
pub struct FgExpansion {
    params: GroupParameter,
    inner: WordLengthExpansion,
}

/// Formal power series with exact integer coefficients (opaque).
pub struct FgSeries {
    inner: FormalSeries,
}

fn status_of(err: &Error) -> FgStatus {
    match err {
        Error::SizeTooLarge { .. } => FgStatus::SizeTooLarge,
        Error::OracleBudget { .. } => FgStatus::BudgetExhausted,
        Error::ParityError(_) => FgStatus::Parity,
        _ => FgStatus::InvalidArgument,
    }
}

fn to_c_string(value: impl ToString) -> *mut c_char {
    CString::new(value.to_string())
        .expect("decimal strings never contain NUL")
        .into_raw()
}

/// Returns the library version as a static string; do not free it.
#[no_mangle]
pub extern "C" fn fg_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Describes a status code as a static string; do not free it.
#[no_mangle]
pub extern "C" fn fg_status_describe(status: FgStatus) -> *const c_char {
    let text: &'static str = match status {
        FgStatus::Ok => "ok\0",
        FgStatus::InvalidArgument => "invalid argument\0",
        FgStatus::Parity => "parity mismatch\0",
        FgStatus::SizeTooLarge => "size limit exceeded\0",
        FgStatus::BudgetExhausted => "oracle budget exhausted\0",
        FgStatus::NullPointer => "null pointer\0",
    };
    text.as_ptr() as *const c_char
}

/// Expands the `order`-th power of the generating operator over
/// `n_generators` free generators. On success writes a heap-allocated
/// handle to `out`; release it with `fg_expansion_free`.
///
/// # Safety
/// `out` must be a valid pointer to writable memory.
#[no_mangle]
pub unsafe extern "C" fn fg_expand_power(
    n_generators: usize,
    order: usize,
    out: *mut *mut FgExpansion,
) -> FgStatus {
    if out.is_null() {
        return FgStatus::NullPointer;
    }
    let params = match GroupParameter::new(n_generators) {
        Ok(p) => p,
        Err(e) => return status_of(&e),
    };
    let inner = expand_power(params, order);
    unsafe { out.write(Box::into_raw(Box::new(FgExpansion { params, inner }))) };
    FgStatus::Ok
}

/// Recomputes an expansion by exhaustively counting reduced words, as an
/// independent check on `fg_expand_power`. `budget` caps the number of walk
/// states (pass 0 for the built-in default). Release the handle with
/// `fg_expansion_free`.
///
/// # Safety
/// `out` must be a valid pointer to writable memory.
#[no_mangle]
pub unsafe extern "C" fn fg_exhaustive_expansion(
    n_generators: usize,
    order: usize,
    budget: usize,
    out: *mut *mut FgExpansion,
) -> FgStatus {
    if out.is_null() {
        return FgStatus::NullPointer;
    }
    let params = match GroupParameter::new(n_generators) {
        Ok(p) => p,
        Err(e) => return status_of(&e),
    };
    let budget = if budget == 0 {
        DEFAULT_ORACLE_BUDGET
    } else {
        budget
    };
    match exhaustive_expansion(params, order, budget) {
        Ok(inner) => {
            unsafe { out.write(Box::into_raw(Box::new(FgExpansion { params, inner }))) };
            FgStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Returns the power an expansion describes, or 0 for a null handle.
///
/// # Safety
/// `expansion` must be null or a handle from this library.
#[no_mangle]
pub unsafe extern "C" fn fg_expansion_order(expansion: *const FgExpansion) -> usize {
    if expansion.is_null() {
        0
    } else {
        unsafe { &*expansion }.inner.order()
    }
}

/// Writes the coefficient of the given word length as a heap-allocated
/// decimal string (lengths outside the support yield "0"); release it with
/// `fg_string_free`.
///
/// # Safety
/// `expansion` must be a handle from this library and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fg_expansion_coefficient(
    expansion: *const FgExpansion,
    length: usize,
    out: *mut *mut c_char,
) -> FgStatus {
    if expansion.is_null() || out.is_null() {
        return FgStatus::NullPointer;
    }
    let value = unsafe { &*expansion }.inner.coefficient(length);
    unsafe { out.write(to_c_string(value)) };
    FgStatus::Ok
}

/// Writes true when the expansion's coefficients, weighted by sphere sizes,
/// sum to the full power of the graph degree.
///
/// # Safety
/// `expansion` must be a handle from this library and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fg_expansion_mass_conserved(
    expansion: *const FgExpansion,
    out: *mut bool,
) -> FgStatus {
    if expansion.is_null() || out.is_null() {
        return FgStatus::NullPointer;
    }
    let handle = unsafe { &*expansion };
    unsafe { out.write(mass_check(&handle.inner, handle.params)) };
    FgStatus::Ok
}

/// Releases an expansion handle; null is ignored.
///
/// # Safety
/// `expansion` must be null or an unreleased handle from this library.
#[no_mangle]
pub unsafe extern "C" fn fg_expansion_free(expansion: *mut FgExpansion) {
    if !expansion.is_null() {
        drop(unsafe { Box::from_raw(expansion) });
    }
}

/// Computes the moment series of the generating operator through
/// `max_order`. Release the handle with `fg_series_free`.
///
/// # Safety
/// `out` must be a valid pointer to writable memory.
#[no_mangle]
pub unsafe extern "C" fn fg_moment_series(
    n_generators: usize,
    max_order: usize,
    out: *mut *mut FgSeries,
) -> FgStatus {
    if out.is_null() {
        return FgStatus::NullPointer;
    }
    let params = match GroupParameter::new(n_generators) {
        Ok(p) => p,
        Err(e) => return status_of(&e),
    };
    let inner = moment_series(params, max_order);
    unsafe { out.write(Box::into_raw(Box::new(FgSeries { inner }))) };
    FgStatus::Ok
}

/// Computes the R-transform coefficient series through `max_order`.
/// `lattice_limit` caps the order handled by summation over noncrossing
/// partitions (pass 0 for the default); beyond it the computation switches
/// to the moment recursion. `threads` sets the worker count for the lattice
/// summation (0 and 1 both mean single-threaded; the result is identical
/// for every thread count). When `out_method` is non-null it receives the
/// algorithm that ran. Release the handle with `fg_series_free`.
///
/// # Safety
/// `out_series` must be a valid pointer to writable memory; `out_method`
/// must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn fg_r_transform(
    n_generators: usize,
    max_order: usize,
    lattice_limit: usize,
    threads: usize,
    out_series: *mut *mut FgSeries,
    out_method: *mut FgMethod,
) -> FgStatus {
    if out_series.is_null() {
        return FgStatus::NullPointer;
    }
    let params = match GroupParameter::new(n_generators) {
        Ok(p) => p,
        Err(e) => return status_of(&e),
    };
    let defaults = TransformOptions::default();
    let options = TransformOptions {
        lattice_limit: if lattice_limit == 0 {
            defaults.lattice_limit
        } else {
            lattice_limit
        },
        threads: threads.max(1),
    };
    match r_transform(params, max_order, &options) {
        Ok((inner, method)) => {
            unsafe { out_series.write(Box::into_raw(Box::new(FgSeries { inner }))) };
            if !out_method.is_null() {
                let method = match method {
                    RTransformMethod::Lattice => FgMethod::Lattice,
                    RTransformMethod::Recursion => FgMethod::Recursion,
                };
                unsafe { out_method.write(method) };
            }
            FgStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Returns the highest order stored in a series, or 0 for a null handle.
///
/// # Safety
/// `series` must be null or a handle from this library.
#[no_mangle]
pub unsafe extern "C" fn fg_series_max_order(series: *const FgSeries) -> usize {
    if series.is_null() {
        0
    } else {
        unsafe { &*series }.inner.max_order()
    }
}

/// Writes the coefficient at `order` (1-based) as a heap-allocated decimal
/// string; release it with `fg_string_free`. Fails with
/// `FG_STATUS_INVALID_ARGUMENT` for order 0 or beyond the computed range.
///
/// # Safety
/// `series` must be a handle from this library and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fg_series_coefficient(
    series: *const FgSeries,
    order: usize,
    out: *mut *mut c_char,
) -> FgStatus {
    if series.is_null() || out.is_null() {
        return FgStatus::NullPointer;
    }
    match unsafe { &*series }.inner.coefficient(order) {
        Ok(value) => {
            unsafe { out.write(to_c_string(value)) };
            FgStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Releases a series handle; null is ignored.
///
/// # Safety
/// `series` must be null or an unreleased handle from this library.
#[no_mangle]
pub unsafe extern "C" fn fg_series_free(series: *mut FgSeries) {
    if !series.is_null() {
        drop(unsafe { Box::from_raw(series) });
    }
}

/// Writes the `order`-th moment of the generating operator as a
/// heap-allocated decimal string; release it with `fg_string_free`.
///
/// # Safety
/// `out` must be a valid pointer to writable memory.
#[no_mangle]
pub unsafe extern "C" fn fg_moment(
    n_generators: usize,
    order: usize,
    out: *mut *mut c_char,
) -> FgStatus {
    if out.is_null() {
        return FgStatus::NullPointer;
    }
    let params = match GroupParameter::new(n_generators) {
        Ok(p) => p,
        Err(e) => return status_of(&e),
    };
    unsafe { out.write(to_c_string(moment(params, order))) };
    FgStatus::Ok
}

/// Writes the number of closed walks of the given length at the identity of
/// the Cayley graph as a heap-allocated decimal string; release it with
/// `fg_string_free`. Odd lengths yield "0".
///
/// # Safety
/// `out` must be a valid pointer to writable memory.
#[no_mangle]
pub unsafe extern "C" fn fg_closed_walk_count(
    n_generators: usize,
    length: usize,
    out: *mut *mut c_char,
) -> FgStatus {
    if out.is_null() {
        return FgStatus::NullPointer;
    }
    let params = match GroupParameter::new(n_generators) {
        Ok(p) => p,
        Err(e) => return status_of(&e),
    };
    unsafe { out.write(to_c_string(closed_walk_count(params, length))) };
    FgStatus::Ok
}

/// Writes the `n`-th Catalan number as a heap-allocated decimal string;
/// release it with `fg_string_free`.
///
/// # Safety
/// `out` must be a valid pointer to writable memory.
#[no_mangle]
pub unsafe extern "C" fn fg_catalan(n: usize, out: *mut *mut c_char) -> FgStatus {
    if out.is_null() {
        return FgStatus::NullPointer;
    }
    unsafe { out.write(to_c_string(catalan(n))) };
    FgStatus::Ok
}

/// Runs the built-in verification suite (engine versus independent walk
/// oracles, evenness, transform round trips, mass conservation) through
/// `max_order` (pass 0 for the default) and writes true when every check
/// passes.
///
/// # Safety
/// `out_passed` must be a valid pointer to writable memory.
#[no_mangle]
pub unsafe extern "C" fn fg_verify(
    n_generators: usize,
    max_order: usize,
    out_passed: *mut bool,
) -> FgStatus {
    if out_passed.is_null() {
        return FgStatus::NullPointer;
    }
    let params = match GroupParameter::new(n_generators) {
        Ok(p) => p,
        Err(e) => return status_of(&e),
    };
    let mut config = VerifyConfig::new(params);
    if max_order > 0 {
        config.max_order = max_order;
    }
    unsafe { out_passed.write(run_verification(&config).passed) };
    FgStatus::Ok
}

/// Releases a string returned by this library; null is ignored.
///
/// # Safety
/// `s` must be null or an unreleased string from this library.
#[no_mangle]
pub unsafe extern "C" fn fg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}
