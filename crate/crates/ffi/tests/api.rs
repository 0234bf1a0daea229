use std::ffi::{c_char, CStr, CString};
use std::ptr;

use kolchin_ffi::*;

unsafe fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    kolchin_string_free(s);
    out
}

fn last_error() -> String {
    let p = kolchin_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p).to_str().unwrap().to_owned() }
}

const HEAT: &str = "m = 2\nn = 1\neq: 1*d[1,0]x1 - 1*d[0,2]x1\n";

#[test]
fn polynomial_round_trip() {
    unsafe {
        let mut p = ptr::null_mut();
        let text = CString::new("0,2,-1").unwrap();
        assert_eq!(kolchin_poly_parse(text.as_ptr(), &mut p), KolchinStatus::Ok);
        assert!(kolchin_last_error().is_null());

        let mut s = ptr::null_mut();
        assert_eq!(kolchin_poly_to_string(p, &mut s), KolchinStatus::Ok);
        assert_eq!(take(s), "2*t + 1");
        assert_eq!(kolchin_poly_evaluate(p, 3, &mut s), KolchinStatus::Ok);
        assert_eq!(take(s), "7");
        let mut m = 0usize;
        assert_eq!(kolchin_poly_degree_bound(p, &mut m), KolchinStatus::Ok);
        assert_eq!(m, 2);

        assert_eq!(kolchin_poly_to_json(p, &mut s), KolchinStatus::Ok);
        let json = CString::new(take(s)).unwrap();
        let mut q = ptr::null_mut();
        assert_eq!(kolchin_poly_parse(json.as_ptr(), &mut q), KolchinStatus::Ok);
        let mut cmp = 9;
        assert_eq!(kolchin_poly_compare(p, q, &mut cmp), KolchinStatus::Ok);
        assert_eq!(cmp, 0);

        let coeffs = [1i64, 0, 0];
        let mut r = ptr::null_mut();
        assert_eq!(
            kolchin_poly_from_coeffs(coeffs.as_ptr(), 3, &mut r),
            KolchinStatus::Ok
        );
        assert_eq!(kolchin_poly_compare(p, r, &mut cmp), KolchinStatus::Ok);
        assert_eq!(cmp, -1);

        let values = [5i64, 7, 9];
        let mut i = ptr::null_mut();
        assert_eq!(
            kolchin_poly_interpolate(values.as_ptr(), 3, 2, 2, &mut i),
            KolchinStatus::Ok
        );
        assert_eq!(kolchin_poly_compare(i, p, &mut cmp), KolchinStatus::Ok);
        assert_eq!(cmp, 0);

        for h in [p, q, r, i] {
            kolchin_poly_free(h);
        }
    }
}

#[test]
fn exponent_sets() {
    unsafe {
        let text = CString::new("0,2\n").unwrap();
        let mut e = ptr::null_mut();
        assert_eq!(
            kolchin_expset_parse(text.as_ptr(), 0, &mut e),
            KolchinStatus::Ok
        );
        let mut b = 0u64;
        assert_eq!(kolchin_expset_stability_bound(e, &mut b), KolchinStatus::Ok);
        assert_eq!(b, 2);
        let mut s = ptr::null_mut();
        assert_eq!(
            kolchin_expset_volume(e, 5, false, &mut s),
            KolchinStatus::Ok
        );
        assert_eq!(take(s), "11");
        assert_eq!(kolchin_expset_volume(e, 5, true, &mut s), KolchinStatus::Ok);
        assert_eq!(take(s), "11");
        let mut p = ptr::null_mut();
        assert_eq!(kolchin_expset_omega(e, &mut p), KolchinStatus::Ok);
        assert_eq!(kolchin_poly_to_string(p, &mut s), KolchinStatus::Ok);
        assert_eq!(take(s), "2*t + 1");
        kolchin_poly_free(p);
        kolchin_expset_free(e);

        let wrong = CString::new("0,2\n").unwrap();
        assert_eq!(
            kolchin_expset_parse(wrong.as_ptr(), 3, &mut e),
            KolchinStatus::ParseError
        );
    }
}

#[test]
fn systems_and_decisions() {
    unsafe {
        let text = CString::new(HEAT).unwrap();
        let mut sys = ptr::null_mut();
        assert_eq!(
            kolchin_system_parse(text.as_ptr(), &mut sys),
            KolchinStatus::Ok
        );
        let (mut a, mut b) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(kolchin_system_omega(sys, &mut a), KolchinStatus::Ok);
        assert_eq!(
            kolchin_system_omega_via_prolongation(sys, &mut b),
            KolchinStatus::Ok
        );
        let mut cmp = 9;
        assert_eq!(kolchin_poly_compare(a, b, &mut cmp), KolchinStatus::Ok);
        assert_eq!(cmp, 0);

        let mut dim = 0u64;
        assert_eq!(
            kolchin_system_prolongation_dimension(sys, 2, 0, &mut dim),
            KolchinStatus::Ok
        );
        assert_eq!(dim, 5);

        let mut yes = false;
        assert_eq!(
            kolchin_system_omega_at_least(sys, a, &mut yes),
            KolchinStatus::Ok
        );
        assert!(yes);
        assert_eq!(
            kolchin_system_omega_equals(sys, a, &mut yes),
            KolchinStatus::Ok
        );
        assert!(yes);
        let coeffs = [1i64, 0, 0];
        let mut big = ptr::null_mut();
        kolchin_poly_from_coeffs(coeffs.as_ptr(), 3, &mut big);
        assert_eq!(
            kolchin_system_omega_at_least(sys, big, &mut yes),
            KolchinStatus::Ok
        );
        assert!(!yes);

        for p in [a, b, big] {
            kolchin_poly_free(p);
        }
        kolchin_system_free(sys);
    }
}

#[test]
fn bounds_and_ranking() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(kolchin_bounds_json(4, 1, 3, &mut s), KolchinStatus::Ok);
        assert!(take(s).contains("\"s0\":\"3\""));
        assert_eq!(
            kolchin_bounds_json(4, 4, 1, &mut s),
            KolchinStatus::ResourceLimit
        );
        assert!(!last_error().is_empty());
        assert_eq!(
            kolchin_bounds_json(1, 0, 1, &mut s),
            KolchinStatus::DomainError
        );

        let (a, b) = (
            CString::new("d[1,0]x1").unwrap(),
            CString::new("d[0,1]x1").unwrap(),
        );
        let mut cmp = 9;
        assert_eq!(
            kolchin_rank_compare(a.as_ptr(), b.as_ptr(), &mut cmp),
            KolchinStatus::Ok
        );
        assert_eq!(cmp, 1);
        let c = CString::new("d[1]x1").unwrap();
        assert_eq!(
            kolchin_rank_compare(a.as_ptr(), c.as_ptr(), &mut cmp),
            KolchinStatus::DomainError
        );
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut sys = ptr::null_mut();
        let bad = CString::new("m = 1\nn = 1\neq: x1*x1\n").unwrap();
        assert_eq!(
            kolchin_system_parse(bad.as_ptr(), &mut sys),
            KolchinStatus::ParseError
        );
        assert!(last_error().contains("line 3"), "{}", last_error());
        assert!(sys.is_null());

        assert_eq!(
            kolchin_system_parse(ptr::null(), &mut sys),
            KolchinStatus::InvalidArgument
        );
        let ok = CString::new("1,2").unwrap();
        assert_eq!(
            kolchin_poly_parse(ok.as_ptr(), ptr::null_mut()),
            KolchinStatus::InvalidArgument
        );
        let mut cmp = 0;
        assert_eq!(
            kolchin_poly_compare(ptr::null(), ptr::null(), &mut cmp),
            KolchinStatus::InvalidArgument
        );

        let values = [1i64, 2, 4];
        let mut p = ptr::null_mut();
        assert_eq!(
            kolchin_poly_interpolate(values.as_ptr(), 3, 0, 1, &mut p),
            KolchinStatus::DomainError
        );

        // freeing NULL is a no-op
        kolchin_poly_free(ptr::null_mut());
        kolchin_expset_free(ptr::null_mut());
        kolchin_system_free(ptr::null_mut());
        kolchin_string_free(ptr::null_mut());
    }
}
