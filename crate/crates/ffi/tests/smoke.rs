//! Exercises the C interface exactly as a foreign caller would: through the
//! exported symbols, out pointers, and manual frees.

use std::ffi::{c_char, CStr};
use std::ptr;

use freegen_ffi::*;

unsafe fn take_string(ptr: *mut c_char) -> String {
    assert!(!ptr.is_null());
    let text = unsafe { CStr::from_ptr(ptr) }.to_str().unwrap().to_owned();
    unsafe { fg_string_free(ptr) };
    text
}

#[test]
fn expansion_round_trip() {
    unsafe {
        let mut handle: *mut FgExpansion = ptr::null_mut();
        assert_eq!(fg_expand_power(2, 8, &mut handle), FgStatus::Ok);
        assert_eq!(fg_expansion_order(handle), 8);

        let mut coefficient: *mut c_char = ptr::null_mut();
        assert_eq!(
            fg_expansion_coefficient(handle, 0, &mut coefficient),
            FgStatus::Ok
        );
        assert_eq!(take_string(coefficient), "2092");
        assert_eq!(
            fg_expansion_coefficient(handle, 2, &mut coefficient),
            FgStatus::Ok
        );
        assert_eq!(take_string(coefficient), "958");
        assert_eq!(
            fg_expansion_coefficient(handle, 5, &mut coefficient),
            FgStatus::Ok
        );
        assert_eq!(take_string(coefficient), "0");

        let mut conserved = false;
        assert_eq!(
            fg_expansion_mass_conserved(handle, &mut conserved),
            FgStatus::Ok
        );
        assert!(conserved);
        fg_expansion_free(handle);
    }
}

#[test]
fn exhaustive_oracle_agrees_and_respects_budget() {
    unsafe {
        let mut engine: *mut FgExpansion = ptr::null_mut();
        let mut oracle: *mut FgExpansion = ptr::null_mut();
        assert_eq!(fg_expand_power(2, 6, &mut engine), FgStatus::Ok);
        assert_eq!(fg_exhaustive_expansion(2, 6, 0, &mut oracle), FgStatus::Ok);
        for length in 0..=6 {
            let mut a: *mut c_char = ptr::null_mut();
            let mut b: *mut c_char = ptr::null_mut();
            assert_eq!(
                fg_expansion_coefficient(engine, length, &mut a),
                FgStatus::Ok
            );
            assert_eq!(
                fg_expansion_coefficient(oracle, length, &mut b),
                FgStatus::Ok
            );
            assert_eq!(take_string(a), take_string(b), "length {length}");
        }
        fg_expansion_free(engine);
        fg_expansion_free(oracle);

        let mut starved: *mut FgExpansion = ptr::null_mut();
        assert_eq!(
            fg_exhaustive_expansion(3, 8, 10, &mut starved),
            FgStatus::BudgetExhausted
        );
        assert!(starved.is_null());
    }
}

#[test]
fn series_and_transform() {
    unsafe {
        let mut moments: *mut FgSeries = ptr::null_mut();
        assert_eq!(fg_moment_series(2, 6, &mut moments), FgStatus::Ok);
        assert_eq!(fg_series_max_order(moments), 6);
        let mut value: *mut c_char = ptr::null_mut();
        assert_eq!(fg_series_coefficient(moments, 4, &mut value), FgStatus::Ok);
        assert_eq!(take_string(value), "28");
        assert_eq!(
            fg_series_coefficient(moments, 7, &mut value),
            FgStatus::InvalidArgument
        );
        assert_eq!(
            fg_series_coefficient(moments, 0, &mut value),
            FgStatus::InvalidArgument
        );
        fg_series_free(moments);

        let mut cumulants: *mut FgSeries = ptr::null_mut();
        let mut method = FgMethod::Recursion;
        assert_eq!(
            fg_r_transform(2, 8, 0, 2, &mut cumulants, &mut method),
            FgStatus::Ok
        );
        assert_eq!(method, FgMethod::Lattice);
        assert_eq!(
            fg_series_coefficient(cumulants, 8, &mut value),
            FgStatus::Ok
        );
        assert_eq!(take_string(value), "-20");
        fg_series_free(cumulants);

        let mut switched: *mut FgSeries = ptr::null_mut();
        assert_eq!(
            fg_r_transform(2, 14, 8, 1, &mut switched, &mut method),
            FgStatus::Ok
        );
        assert_eq!(method, FgMethod::Recursion);
        assert_eq!(
            fg_series_coefficient(switched, 14, &mut value),
            FgStatus::Ok
        );
        assert_eq!(take_string(value), "528");
        fg_series_free(switched);
    }
}

#[test]
fn scalar_helpers() {
    unsafe {
        let mut value: *mut c_char = ptr::null_mut();
        assert_eq!(fg_moment(2, 8, &mut value), FgStatus::Ok);
        assert_eq!(take_string(value), "2092");
        assert_eq!(fg_closed_walk_count(2, 8, &mut value), FgStatus::Ok);
        assert_eq!(take_string(value), "2092");
        assert_eq!(fg_closed_walk_count(2, 7, &mut value), FgStatus::Ok);
        assert_eq!(take_string(value), "0");
        assert_eq!(fg_catalan(10, &mut value), FgStatus::Ok);
        assert_eq!(take_string(value), "16796");
    }
}

#[test]
fn verification_passes_through() {
    unsafe {
        let mut passed = false;
        assert_eq!(fg_verify(2, 8, &mut passed), FgStatus::Ok);
        assert!(passed);
    }
}

#[test]
fn error_paths() {
    unsafe {
        let mut handle: *mut FgExpansion = ptr::null_mut();
        assert_eq!(
            fg_expand_power(0, 4, &mut handle),
            FgStatus::InvalidArgument
        );
        assert!(handle.is_null());
        assert_eq!(
            fg_expand_power(2, 4, ptr::null_mut()),
            FgStatus::NullPointer
        );

        let mut value: *mut c_char = ptr::null_mut();
        assert_eq!(
            fg_expansion_coefficient(ptr::null(), 0, &mut value),
            FgStatus::NullPointer
        );
        assert_eq!(fg_expansion_order(ptr::null()), 0);
        assert_eq!(fg_series_max_order(ptr::null()), 0);

        // frees tolerate null
        fg_expansion_free(ptr::null_mut());
        fg_series_free(ptr::null_mut());
        fg_string_free(ptr::null_mut());
    }
}

#[test]
fn static_strings() {
    unsafe {
        let version = CStr::from_ptr(fg_version()).to_str().unwrap();
        assert_eq!(version, env!("CARGO_PKG_VERSION"));
        let described = CStr::from_ptr(fg_status_describe(FgStatus::SizeTooLarge))
            .to_str()
            .unwrap();
        assert_eq!(described, "size limit exceeded");
    }
}
