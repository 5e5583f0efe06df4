use std::ffi::CStr;
use std::ptr;

use affcodes_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(aff_last_error()) }.to_string_lossy().into_owned()
}

#[test]
fn field_arithmetic() {
    unsafe {
        let mut f = ptr::null_mut();
        assert_eq!(aff_field_new(2, 4, &mut f), AffStatus::Ok);
        assert_eq!(aff_field_order(f), 16);
        let mut x = 0;
        assert_eq!(aff_field_add(f, 0b0101, 0b0011, &mut x), AffStatus::Ok);
        assert_eq!(x, 0b0110);
        let mut a = 0;
        assert_eq!(aff_field_alpha_pow(f, 7, &mut a), AffStatus::Ok);
        let mut inv = 0;
        assert_eq!(aff_field_inv(f, a, &mut inv), AffStatus::Ok);
        assert_eq!(aff_field_mul(f, a, inv, &mut x), AffStatus::Ok);
        assert_eq!(x, 1);
        assert_eq!(aff_field_inv(f, 0, &mut x), AffStatus::InvalidArgument);
        assert!(!last_error().is_empty());
        assert_eq!(aff_field_mul(f, 16, 1, &mut x), AffStatus::InvalidArgument);
        aff_field_free(f);
    }
}

#[test]
fn field_errors() {
    unsafe {
        let mut f = ptr::null_mut();
        assert_eq!(aff_field_new(4, 2, &mut f), AffStatus::InvalidArgument);
        assert!(f.is_null());
        assert!(last_error().contains('4'));
        assert_eq!(aff_field_new(2, 3, ptr::null_mut()), AffStatus::NullPointer);
        assert_eq!(aff_field_order(ptr::null()), 0);
        aff_field_free(ptr::null_mut());
    }
}

#[test]
fn root_counts() {
    unsafe {
        let mut f = ptr::null_mut();
        assert_eq!(aff_field_new(2, 4, &mut f), AffStatus::Ok);
        // x^4 + x vanishes on GF(4)
        let coeffs = [1u32, 0, 1];
        let mut n = 0;
        assert_eq!(aff_root_count(f, 0, coeffs.as_ptr(), 3, &mut n), AffStatus::Ok);
        assert_eq!(n, 4);
        let zero = [0u32; 3];
        assert_eq!(aff_root_count(f, 0, zero.as_ptr(), 3, &mut n), AffStatus::InvalidArgument);
        aff_field_free(f);
    }
}

#[test]
fn weights_by_every_method() {
    unsafe {
        let mut c = ptr::null_mut();
        assert_eq!(aff_code_circle(3, 2, 1, &mut c), AffStatus::Ok);
        let (mut n, mut k, mut q) = (0, 0, 0);
        assert_eq!(aff_code_params(c, &mut n, &mut k, &mut q), AffStatus::Ok);
        assert_eq!((n, k, q), (10, 4, 81));
        for method in [AffMethod::Brute, AffMethod::Closed, AffMethod::Moments] {
            let mut w = ptr::null_mut();
            assert_eq!(aff_weights_compute(c, method, 2, &mut w), AffStatus::Ok);
            let mut got = Vec::new();
            for i in 0..aff_weights_len(w) {
                let (mut wt, mut cnt) = (0, 0);
                assert_eq!(aff_weights_entry(w, i, &mut wt, &mut cnt), AffStatus::Ok);
                got.push((wt, cnt));
            }
            assert_eq!(got, [(0, 1), (6, 2400), (8, 280800), (9, 4743200), (10, 38020320)]);
            let (mut wt, mut cnt) = (0, 0);
            assert_eq!(aff_weights_entry(w, 99, &mut wt, &mut cnt), AffStatus::InvalidArgument);
            aff_weights_free(w);
        }
        aff_code_free(c);
    }
}

#[test]
fn encode_and_bounds() {
    unsafe {
        let mut c = ptr::null_mut();
        assert_eq!(aff_code_extended(2, 4, 2, &mut c), AffStatus::Ok);
        let msg = [1u32, 0, 0, 0];
        let mut word = [0u32; 16];
        assert_eq!(aff_code_encode(c, msg.as_ptr(), 4, word.as_mut_ptr(), 16), AffStatus::Ok);
        assert!(word.iter().all(|&x| x == 1));
        assert_eq!(aff_code_encode(c, msg.as_ptr(), 3, word.as_mut_ptr(), 16), AffStatus::InvalidArgument);

        let mut w = ptr::null_mut();
        assert_eq!(aff_weights_compute(c, AffMethod::Closed, 1, &mut w), AffStatus::Ok);
        aff_weights_free(w);
        aff_code_free(c);

        assert_eq!(aff_code_extended(2, 4, 1, &mut c), AffStatus::Ok);
        assert_eq!(aff_weights_compute(c, AffMethod::Closed, 1, &mut w), AffStatus::NotApplicable);
        aff_code_free(c);

        assert_eq!(aff_code_extended(3, 5, 4, &mut c), AffStatus::Ok);
        assert_eq!(aff_weights_compute(c, AffMethod::Brute, 1, &mut w), AffStatus::ResourceBound);
        aff_code_free(c);

        assert_eq!(aff_code_extended(2, 2, 3, &mut c), AffStatus::InvalidArgument);
    }
}

#[test]
fn version_is_set() {
    let v = unsafe { CStr::from_ptr(aff_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}
