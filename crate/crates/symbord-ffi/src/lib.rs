//! C interface to the symbord library.
//!
//! Conventions:
//!
//! - Every function returns a status code from [`SymbStatus`]; results
//!   travel through out-parameters.
//! - Strings are NUL-terminated UTF-8. Strings returned by the library
//!   must be released with [`symb_string_free`]; strings passed in are
//!   borrowed for the duration of the call.
//! - Order relations are opaque handles created by [`symb_order_build`]
//!   and released with [`symb_order_free`].
//! - No call panics across the boundary; internal panics surface as
//!   `SYMB_STATUS_INTERNAL`.
//!
//! The matching header is `include/symbord.h`.

use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use symbord::biporder::{omega, order_relation_ab, order_relation_dominance, order_relation_pi};
use symbord::rep::{a_invariant, PreceqLTable};
use symbord::symbol::SymbolMultiset;
use symbord::{Bipartition, OrderRelation, WeightParams};

/// Status codes returned by every call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SymbStatus {
    /// The call succeeded.
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// The input was rejected: parse failure, bad weight, unknown kind,
    /// unknown label, or a bound violation.
    InvalidInput = 3,
    /// The library panicked; this is a bug in the library.
    Internal = 4,
}

/// An order relation on the bipartitions of one rank.
pub struct SymbOrder {
    relation: OrderRelation,
}

fn guard(body: impl FnOnce() -> SymbStatus) -> SymbStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => SymbStatus::Internal,
    }
}

unsafe fn read_str(ptr: *const c_char, out: &mut Option<&str>) -> SymbStatus {
    if ptr.is_null() {
        return SymbStatus::NullPointer;
    }
    match unsafe { CStr::from_ptr(ptr) }.to_str() {
        Ok(text) => {
            *out = Some(text);
            SymbStatus::Ok
        }
        Err(_) => SymbStatus::InvalidUtf8,
    }
}

fn give_string(text: String, out: *mut *mut c_char) -> SymbStatus {
    match CString::new(text) {
        Ok(owned) => {
            unsafe { *out = owned.into_raw() };
            SymbStatus::Ok
        }
        Err(_) => SymbStatus::Internal,
    }
}

/// Releases a string returned by this library. Passing null is a no-op.
///
/// # Safety
///
/// `ptr` must be null or a pointer previously returned by a `symb_*`
/// function and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn symb_string_free(ptr: *mut c_char) {
    if !ptr.is_null() {
        drop(unsafe { CString::from_raw(ptr) });
    }
}

/// Computes the a-invariant of a bipartition at weight (a, b) and stores
/// it in `*out`.
///
/// # Safety
///
/// `bipartition` must point to a NUL-terminated string and `out` to a
/// writable `int64_t`.
#[no_mangle]
pub unsafe extern "C" fn symb_a_invariant(
    a: u64,
    b: u64,
    bipartition: *const c_char,
    out: *mut i64,
) -> SymbStatus {
    guard(|| {
        if out.is_null() {
            return SymbStatus::NullPointer;
        }
        let mut text = None;
        let status = unsafe { read_str(bipartition, &mut text) };
        if status != SymbStatus::Ok {
            return status;
        }
        match Bipartition::parse(text.unwrap()) {
            Ok(bp) => {
                unsafe { *out = a_invariant(WeightParams::new(a, b), &bp) };
                SymbStatus::Ok
            }
            Err(_) => SymbStatus::InvalidInput,
        }
    })
}

/// Computes the omega invariant of a bipartition at weight (a, b) and
/// stores it in `*out`.
///
/// # Safety
///
/// `bipartition` must point to a NUL-terminated string and `out` to a
/// writable `int64_t`.
#[no_mangle]
pub unsafe extern "C" fn symb_omega(
    a: u64,
    b: u64,
    bipartition: *const c_char,
    out: *mut i64,
) -> SymbStatus {
    guard(|| {
        if out.is_null() {
            return SymbStatus::NullPointer;
        }
        let mut text = None;
        let status = unsafe { read_str(bipartition, &mut text) };
        if status != SymbStatus::Ok {
            return status;
        }
        match Bipartition::parse(text.unwrap()) {
            Ok(bp) => {
                unsafe { *out = omega(WeightParams::new(a, b), &bp) };
                SymbStatus::Ok
            }
            Err(_) => SymbStatus::InvalidInput,
        }
    })
}

/// Renders the symbol of a bipartition at weight (a, b) as a JSON string
/// and stores it in `*out`. A negative `level` selects the smallest level
/// that holds both rows. The caller frees the string with
/// [`symb_string_free`].
///
/// # Safety
///
/// `bipartition` must point to a NUL-terminated string and `out` to a
/// writable `char *`.
#[no_mangle]
pub unsafe extern "C" fn symb_symbol_json(
    a: u64,
    b: u64,
    bipartition: *const c_char,
    level: i64,
    out: *mut *mut c_char,
) -> SymbStatus {
    guard(|| {
        if out.is_null() {
            return SymbStatus::NullPointer;
        }
        let mut text = None;
        let status = unsafe { read_str(bipartition, &mut text) };
        if status != SymbStatus::Ok {
            return status;
        }
        let params = WeightParams::new(a, b);
        let result = Bipartition::parse(text.unwrap()).and_then(|bp| {
            let level = if level < 0 {
                SymbolMultiset::minimal_level(params, &bp)?
            } else {
                level as u64
            };
            SymbolMultiset::from_bipartition(params, &bp, level)
        });
        match result {
            Ok(z) => give_string(z.to_json().to_string(), out),
            Err(_) => SymbStatus::InvalidInput,
        }
    })
}

/// Builds an order relation on the bipartitions of rank `n` and stores a
/// handle in `*out`. `kind` is one of `"ab"`, `"L"`, `"dominance"`, and
/// `"pi"`; the recursive kind `"L"` refuses ranks above `bound`. The
/// caller releases the handle with [`symb_order_free`].
///
/// # Safety
///
/// `kind` must point to a NUL-terminated string and `out` to a writable
/// `SymbOrder *`.
#[no_mangle]
pub unsafe extern "C" fn symb_order_build(
    a: u64,
    b: u64,
    n: u64,
    kind: *const c_char,
    bound: u64,
    out: *mut *mut SymbOrder,
) -> SymbStatus {
    guard(|| {
        if out.is_null() {
            return SymbStatus::NullPointer;
        }
        unsafe { *out = ptr::null_mut() };
        let mut text = None;
        let status = unsafe { read_str(kind, &mut text) };
        if status != SymbStatus::Ok {
            return status;
        }
        let params = WeightParams::new(a, b);
        let relation = match text.unwrap() {
            "ab" => order_relation_ab(params, n),
            "L" | "l" => {
                if n > bound {
                    return SymbStatus::InvalidInput;
                }
                Ok(PreceqLTable::build(params, n).top().clone())
            }
            "dominance" => Ok(order_relation_dominance(n)),
            "pi" => order_relation_pi(params, n),
            _ => return SymbStatus::InvalidInput,
        };
        match relation {
            Ok(relation) => {
                let handle = Box::new(SymbOrder { relation });
                unsafe { *out = Box::into_raw(handle) };
                SymbStatus::Ok
            }
            Err(_) => SymbStatus::InvalidInput,
        }
    })
}

/// Releases an order handle. Passing null is a no-op.
///
/// # Safety
///
/// `order` must be null or a handle previously returned by
/// [`symb_order_build`] and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn symb_order_free(order: *mut SymbOrder) {
    if !order.is_null() {
        drop(unsafe { Box::from_raw(order) });
    }
}

/// Stores the number of labels in the relation's ground set in `*out`.
///
/// # Safety
///
/// `order` must be a live handle and `out` a writable `uint64_t`.
#[no_mangle]
pub unsafe extern "C" fn symb_order_len(order: *const SymbOrder, out: *mut u64) -> SymbStatus {
    guard(|| {
        if order.is_null() || out.is_null() {
            return SymbStatus::NullPointer;
        }
        unsafe { *out = (*order).relation.len() as u64 };
        SymbStatus::Ok
    })
}

/// Stores the number of related pairs in `*out`.
///
/// # Safety
///
/// `order` must be a live handle and `out` a writable `uint64_t`.
#[no_mangle]
pub unsafe extern "C" fn symb_order_pair_count(
    order: *const SymbOrder,
    out: *mut u64,
) -> SymbStatus {
    guard(|| {
        if order.is_null() || out.is_null() {
            return SymbStatus::NullPointer;
        }
        unsafe { *out = (*order).relation.pair_count() as u64 };
        SymbStatus::Ok
    })
}

/// Stores 1 in `*out` when `low <= high` in the relation, 0 otherwise.
/// Unknown labels are rejected with `SYMB_STATUS_INVALID_INPUT`.
///
/// # Safety
///
/// `order` must be a live handle, `low` and `high` NUL-terminated
/// strings, and `out` a writable `int`.
#[no_mangle]
pub unsafe extern "C" fn symb_order_holds(
    order: *const SymbOrder,
    low: *const c_char,
    high: *const c_char,
    out: *mut c_int,
) -> SymbStatus {
    guard(|| {
        if order.is_null() || out.is_null() {
            return SymbStatus::NullPointer;
        }
        let (mut x, mut y) = (None, None);
        let status = unsafe { read_str(low, &mut x) };
        if status != SymbStatus::Ok {
            return status;
        }
        let status = unsafe { read_str(high, &mut y) };
        if status != SymbStatus::Ok {
            return status;
        }
        match unsafe { &(*order).relation }.holds_labels(x.unwrap(), y.unwrap()) {
            Ok(holds) => {
                unsafe { *out = c_int::from(holds) };
                SymbStatus::Ok
            }
            Err(_) => SymbStatus::InvalidInput,
        }
    })
}

/// Renders the relation as a JSON string (ground labels plus index
/// pairs) and stores it in `*out`. The caller frees the string with
/// [`symb_string_free`].
///
/// # Safety
///
/// `order` must be a live handle and `out` a writable `char *`.
#[no_mangle]
pub unsafe extern "C" fn symb_order_json(
    order: *const SymbOrder,
    out: *mut *mut c_char,
) -> SymbStatus {
    guard(|| {
        if order.is_null() || out.is_null() {
            return SymbStatus::NullPointer;
        }
        let text = unsafe { &(*order).relation }.to_json().to_string();
        give_string(text, out)
    })
}

/// Runs one named verification check and stores its JSON report in
/// `*out`. The report's `"passed"` field carries the verdict; the status
/// code only reports usage problems. The caller frees the string with
/// [`symb_string_free`].
///
/// # Safety
///
/// `name` must point to a NUL-terminated string and `out` to a writable
/// `char *`.
#[no_mangle]
pub unsafe extern "C" fn symb_verify_check(
    name: *const c_char,
    out: *mut *mut c_char,
) -> SymbStatus {
    guard(|| {
        if out.is_null() {
            return SymbStatus::NullPointer;
        }
        let mut text = None;
        let status = unsafe { read_str(name, &mut text) };
        if status != SymbStatus::Ok {
            return status;
        }
        let options = symbord::verify::CheckOptions::default();
        match symbord::verify::run_check(text.unwrap(), &options) {
            Ok(report) => give_string(report.to_json().to_string(), out),
            Err(_) => SymbStatus::InvalidInput,
        }
    })
}
