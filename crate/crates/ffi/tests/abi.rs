use std::ffi::{c_char, CStr, CString};
use std::process::Command;
use std::ptr;

use ci_ideal_lab_ffi::*;

fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { ci_string_free(s) };
    out
}

fn last_error() -> Option<String> {
    let s = ci_last_error();
    (!s.is_null()).then(|| take(s))
}

fn ideal(kind: &str, d: usize, k2: usize, t: usize, zeros: &str) -> *mut CiIdeal {
    let kind = CString::new(kind).unwrap();
    let zeros = CString::new(zeros).unwrap();
    let mut out = ptr::null_mut();
    let st = unsafe { ci_ideal_new(kind.as_ptr(), d, 2, k2, t, zeros.as_ptr(), &mut out) };
    assert_eq!(st, CiStatus::Ok, "{:?}", last_error());
    out
}

#[test]
fn polynomial_round_trip() {
    let src = CString::new("x_1_2_1*x_2_1_1 - x_1_1_1*x_2_2_1").unwrap();
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { ci_polynomial_parse(src.as_ptr(), &mut p) }, CiStatus::Ok);
    assert_eq!(take(unsafe { ci_polynomial_to_string(p) }), "-x_1_1_1*x_2_2_1 + x_1_2_1*x_2_1_1");
    unsafe { ci_polynomial_free(p) };
}

#[test]
fn parse_error_sets_message() {
    let src = CString::new("x_1_1_1 +* 3").unwrap();
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { ci_polynomial_parse(src.as_ptr(), &mut p) }, CiStatus::InvalidArgument);
    assert!(p.is_null());
    assert!(last_error().is_some());
}

#[test]
fn null_arguments_are_reported() {
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { ci_polynomial_parse(ptr::null(), &mut p) }, CiStatus::NullPointer);
    assert_eq!(unsafe { ci_polynomial_parse(ptr::null(), ptr::null_mut()) }, CiStatus::NullPointer);
    assert_eq!(unsafe { ci_ideal_len(ptr::null()) }, 0);
    assert!(unsafe { ci_polynomial_to_string(ptr::null()) }.is_null());
    unsafe {
        ci_polynomial_free(ptr::null_mut());
        ci_ideal_free(ptr::null_mut());
        ci_groebner_free(ptr::null_mut());
        ci_string_free(ptr::null_mut());
    }
}

#[test]
fn empty_set_generators_form_a_basis() {
    let i = ideal("empty", 3, 3, 3, "");
    assert!(unsafe { ci_ideal_len(i) } > 0);
    let (mut gb, mut sq) = (false, false);
    assert_eq!(unsafe { ci_ideal_verify_gb(i, ptr::null(), &mut gb, &mut sq) }, CiStatus::Ok);
    assert!(gb && sq);
    unsafe { ci_ideal_free(i) };
}

#[test]
fn membership_through_a_basis() {
    let i = ideal("fs", 2, 2, 2, "1,1;2,2");
    let mut gb = ptr::null_mut();
    assert_eq!(unsafe { ci_groebner_compute(i, ptr::null(), &mut gb) }, CiStatus::Ok);
    assert!(unsafe { ci_groebner_len(gb) } > 0);
    let g0 = unsafe { ci_ideal_generator(i, 0) };
    let mut member = false;
    assert_eq!(unsafe { ci_groebner_contains(gb, g0, &mut member) }, CiStatus::Ok);
    assert!(member);
    let src = CString::new("x_1_1_2 + 1").unwrap();
    let mut f = ptr::null_mut();
    assert_eq!(unsafe { ci_polynomial_parse(src.as_ptr(), &mut f) }, CiStatus::Ok);
    assert_eq!(unsafe { ci_groebner_contains(gb, f, &mut member) }, CiStatus::Ok);
    assert!(!member);
    let mut r = ptr::null_mut();
    assert_eq!(unsafe { ci_groebner_normal_form(gb, g0, &mut r) }, CiStatus::Ok);
    assert_eq!(take(unsafe { ci_polynomial_to_string(r) }), "0");
    assert!(unsafe { ci_ideal_generator(i, 10_000) }.is_null());
    unsafe {
        for p in [g0, f, r] {
            ci_polynomial_free(p);
        }
        ci_groebner_free(gb);
        ci_ideal_free(i);
    }
}

#[test]
fn adhoc_ideal_from_handles() {
    let texts = ["x_1_1_1", "x_1_1_1", "0", "x_2_1_1 - x_1_1_1"];
    let polys: Vec<*mut CiPolynomial> = texts
        .iter()
        .map(|t| {
            let c = CString::new(*t).unwrap();
            let mut p = ptr::null_mut();
            assert_eq!(unsafe { ci_polynomial_parse(c.as_ptr(), &mut p) }, CiStatus::Ok);
            p
        })
        .collect();
    let consts: Vec<*const CiPolynomial> = polys.iter().map(|&p| p as *const _).collect();
    let mut i = ptr::null_mut();
    assert_eq!(unsafe { ci_ideal_from_polynomials(consts.as_ptr(), consts.len(), 2, 2, 2, 2, &mut i) }, CiStatus::Ok);
    assert_eq!(unsafe { ci_ideal_len(i) }, 2);
    unsafe {
        ci_ideal_free(i);
        for p in polys {
            ci_polynomial_free(p);
        }
    }
}

#[test]
fn hypothesis_and_budget_statuses() {
    let kind = CString::new("fjs").unwrap();
    let zeros = CString::new("").unwrap();
    let mut out = ptr::null_mut();
    let st = unsafe { ci_ideal_new(kind.as_ptr(), 2, 2, 3, 2, zeros.as_ptr(), &mut out) };
    assert_eq!(st, CiStatus::Hypothesis);
    assert!(out.is_null());

    let i = ideal("ic", 3, 3, 3, "");
    let budget = CString::new("pairs=2,reductions=5").unwrap();
    let mut gb = ptr::null_mut();
    assert_eq!(unsafe { ci_groebner_compute(i, budget.as_ptr(), &mut gb) }, CiStatus::Budget);
    assert!(gb.is_null());
    assert!(last_error().unwrap().contains("budget"));
    unsafe { ci_ideal_free(i) };
}

#[test]
fn unknown_kind_is_invalid() {
    let kind = CString::new("nope").unwrap();
    let mut out = ptr::null_mut();
    let st = unsafe { ci_ideal_new(kind.as_ptr(), 2, 2, 2, 2, ptr::null(), &mut out) };
    assert_eq!(st, CiStatus::InvalidArgument);
}

#[test]
fn run_captures_streams_and_exit_code() {
    let args: Vec<CString> =
        ["ci-ideal-lab", "minimal", "--k2", "4", "--t", "3"].iter().map(|s| CString::new(*s).unwrap()).collect();
    let argv: Vec<*const c_char> = args.iter().map(|a| a.as_ptr()).collect();
    let (mut so, mut se) = (ptr::null_mut(), ptr::null_mut());
    let code = unsafe { ci_run(argv.len() as i32, argv.as_ptr(), &mut so, &mut se) };
    assert_eq!(code, 0);
    assert!(take(so).contains("\"schema\": \"1\""));
    take(se);

    let bad: Vec<*const c_char> = argv[..2].to_vec();
    assert_eq!(unsafe { ci_run(2, bad.as_ptr(), ptr::null_mut(), ptr::null_mut()) }, 3);
    assert_eq!(unsafe { ci_run(1, ptr::null(), ptr::null_mut(), ptr::null_mut()) }, -1);
}

#[test]
fn version_is_static() {
    let v = unsafe { CStr::from_ptr(ci_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_declares_every_entry_point_and_compiles() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/ci_ideal_lab.h")).unwrap();
    for name in [
        "ci_version",
        "ci_last_error",
        "ci_string_free",
        "ci_polynomial_parse",
        "ci_polynomial_to_string",
        "ci_polynomial_free",
        "ci_ideal_new",
        "ci_ideal_from_polynomials",
        "ci_ideal_len",
        "ci_ideal_generator",
        "ci_ideal_free",
        "ci_ideal_verify_gb",
        "ci_groebner_compute",
        "ci_groebner_len",
        "ci_groebner_element",
        "ci_groebner_contains",
        "ci_groebner_normal_form",
        "ci_groebner_free",
        "ci_run",
    ] {
        assert!(header.contains(&format!("{name}(")), "{name} missing from header");
    }
    assert!(header.contains("typedef struct CiIdeal CiIdeal;"));
    // syntax check with the system C compiler, when there is one
    let probe = Command::new("cc")
        .args(["-fsyntax-only", "-std=c99", "-Wall", "-Werror", "-x", "c", "-"])
        .arg("-I")
        .arg(concat!(env!("CARGO_MANIFEST_DIR"), "/include"))
        .stdin(std::process::Stdio::piped())
        .spawn();
    if let Ok(mut child) = probe {
        use std::io::Write;
        child
            .stdin
            .take()
            .unwrap()
            .write_all(b"#include \"ci_ideal_lab.h\"\nint main(void) { return ci_version() == 0; }\n")
            .unwrap();
        assert!(child.wait().unwrap().success());
    }
}
