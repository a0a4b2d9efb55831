use quivdim_ffi::*;
use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

const SQUARE: &str = "algebra square-with-zeros\nvertices 1 2 3 4 5 6\narrows 1->2 2->3 2->4 3->5 4->5 5->6\nzero 1 ~> 4\nzero 3 ~> 6\n";

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn parse(text: &str) -> *mut QdAlgebra {
    let mut a = ptr::null_mut();
    let status = unsafe { qd_algebra_parse(c(text).as_ptr(), &mut a) };
    assert_eq!(status, QdStatus::Ok);
    a
}

fn last_error() -> String {
    let p = qd_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

#[test]
fn dimensions_through_the_boundary() {
    let a = parse(SQUARE);
    unsafe {
        let mut n = 0usize;
        assert_eq!(qd_algebra_vertex_count(a, &mut n), QdStatus::Ok);
        assert_eq!(n, 6);
        let mut certified = false;
        assert_eq!(qd_algebra_is_certified(a, &mut certified), QdStatus::Ok);
        assert!(certified);
        let mut gl = 0u32;
        assert_eq!(qd_gldim(a, &mut gl), QdStatus::Ok);
        assert_eq!(gl, 3);
        let mut pd = 0u32;
        assert_eq!(qd_pd_simple(a, c("1").as_ptr(), &mut pd), QdStatus::Ok);
        assert_eq!(pd, 3);
        let mut id = 0u32;
        assert_eq!(qd_id_simple(a, c("6").as_ptr(), &mut id), QdStatus::Ok);
        assert_eq!(id, 3);
        let mut e = 0u32;
        assert_eq!(
            qd_ext_dim(a, c("1").as_ptr(), c("6").as_ptr(), 3, &mut e),
            QdStatus::Ok
        );
        assert_eq!(e, 1);
        let mut count = 0usize;
        assert_eq!(qd_critical_count(a, &mut count), QdStatus::Ok);
        assert_eq!(count, 3);
        qd_algebra_free(a);
    }
}

#[test]
fn report_json_and_text() {
    let a = parse(SQUARE);
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(qd_report_json(a, true, &mut s), QdStatus::Ok);
        let json = CStr::from_ptr(s).to_str().unwrap().to_string();
        qd_string_free(s);
        assert!(json.contains("\"gldim\": 3"));
        assert!(json.contains("\"critical_found\""));

        let mut t = ptr::null_mut();
        assert_eq!(qd_algebra_to_text(a, &mut t), QdStatus::Ok);
        let text = CStr::from_ptr(t).to_str().unwrap().to_string();
        qd_string_free(t);
        let b = parse(&text);
        let mut gl = 0u32;
        assert_eq!(qd_gldim(b, &mut gl), QdStatus::Ok);
        assert_eq!(gl, 3);
        qd_algebra_free(b);
        qd_algebra_free(a);
    }
}

#[test]
fn parse_errors_carry_locations() {
    let mut a = ptr::null_mut();
    let status =
        unsafe { qd_algebra_parse(c("algebra x\nvertices 1 2\narrows 1->3\n").as_ptr(), &mut a) };
    assert_eq!(status, QdStatus::Parse);
    assert!(a.is_null());
    assert!(last_error().starts_with("3:"), "{}", last_error());

    let status = unsafe {
        qd_algebra_parse(
            c("algebra x\nvertices 1 2 3\narrows 1->2 2->3 1->3\n").as_ptr(),
            &mut a,
        )
    };
    assert_eq!(status, QdStatus::InvalidAlgebra);
    assert!(last_error().contains("E006"));
}

#[test]
fn errors_for_bad_arguments() {
    let a = parse(SQUARE);
    unsafe {
        let mut pd = 0u32;
        assert_eq!(
            qd_pd_simple(a, c("9").as_ptr(), &mut pd),
            QdStatus::UnknownVertex
        );
        assert!(last_error().contains("unknown vertex 9"));
        assert_eq!(qd_pd_simple(a, ptr::null(), &mut pd), QdStatus::NullPointer);
        assert_eq!(
            qd_pd_simple(a, c("1").as_ptr(), ptr::null_mut()),
            QdStatus::NullPointer
        );
        assert_eq!(qd_gldim(ptr::null(), &mut pd), QdStatus::NullPointer);
        let bad = [0xffu8, 0];
        assert_eq!(
            qd_pd_simple(a, bad.as_ptr().cast(), &mut pd),
            QdStatus::InvalidUtf8
        );
        // a successful call clears the message
        assert_eq!(qd_gldim(a, &mut pd), QdStatus::Ok);
        assert!(qd_last_error().is_null());
        qd_algebra_free(a);
        qd_algebra_free(ptr::null_mut());
        qd_string_free(ptr::null_mut());
    }
}

#[test]
fn templates_and_random() {
    unsafe {
        let mut t = ptr::null_mut();
        assert_eq!(
            qd_algebra_template(c("B").as_ptr(), 3, false, &mut t),
            QdStatus::Ok
        );
        let mut n = 0usize;
        qd_algebra_vertex_count(t, &mut n);
        assert_eq!(n, 7);
        let mut gl = 0u32;
        qd_gldim(t, &mut gl);
        assert_eq!(gl, 3);
        qd_algebra_free(t);

        let mut t = ptr::null_mut();
        assert_eq!(
            qd_algebra_template(c("B").as_ptr(), 2, false, &mut t),
            QdStatus::InvalidArgument
        );
        assert_eq!(
            qd_algebra_template(c("Z").as_ptr(), 1, false, &mut t),
            QdStatus::InvalidArgument
        );

        let (mut r1, mut r2) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(qd_algebra_random(11, 7, &mut r1), QdStatus::Ok);
        assert_eq!(qd_algebra_random(11, 7, &mut r2), QdStatus::Ok);
        let (mut s1, mut s2) = (ptr::null_mut(), ptr::null_mut());
        qd_algebra_to_text(r1, &mut s1);
        qd_algebra_to_text(r2, &mut s2);
        assert_eq!(CStr::from_ptr(s1), CStr::from_ptr(s2));
        qd_string_free(s1);
        qd_string_free(s2);
        qd_algebra_free(r1);
        qd_algebra_free(r2);
        assert_eq!(qd_algebra_random(1, 0, &mut r1), QdStatus::InvalidArgument);
    }
}

#[test]
fn version_is_static() {
    let v = unsafe { CStr::from_ptr(qd_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

const C_PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "quivdim.h"

int main(void) {
    const char *text = "algebra split-zero-chain\nvertices 1 2 3 4 5 6\n"
                       "arrows 1->2 2->3 3->4 4->5 5->6\nzero 1 ~> 3\nzero 4 ~> 6\n";
    QdAlgebra *a = NULL;
    if (qd_algebra_parse(text, &a) != QD_STATUS_OK) return 1;
    uint32_t gl = 0;
    if (qd_gldim(a, &gl) != QD_STATUS_OK || gl != 2) return 2;
    size_t count = 0;
    if (qd_critical_count(a, &count) != QD_STATUS_OK || count != 1) return 3;
    uint32_t pd = 0;
    if (qd_pd_simple(a, "7", &pd) != QD_STATUS_UNKNOWN_VERTEX) return 4;
    if (qd_last_error() == NULL) return 5;
    char *json = NULL;
    if (qd_report_json(a, false, &json) != QD_STATUS_OK) return 6;
    if (strstr(json, "\"gldim\": 2") == NULL) return 7;
    qd_string_free(json);
    qd_algebra_free(a);
    printf("ok %s\n", qd_version());
    return 0;
}
"#;

/// Compiles a C program against the generated header and the static library.
#[test]
fn c_program_links_against_the_header() {
    let Ok(compiler) = which_cc() else {
        eprintln!("no C compiler found; C link check not run");
        return;
    };
    let exe_dir = std::env::current_exe().unwrap();
    let target_dir = exe_dir.parent().unwrap().parent().unwrap();
    let lib = target_dir.join("libquivdim_ffi.a");
    assert!(lib.exists(), "{} missing", lib.display());
    let include = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include");
    let work = std::env::temp_dir().join(format!("quivdim-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&work).unwrap();
    let src = work.join("main.c");
    std::fs::write(&src, C_PROGRAM).unwrap();
    let bin = work.join("main");
    let out = Command::new(&compiler)
        .arg(&src)
        .arg("-I")
        .arg(&include)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let run = Command::new(&bin).output().unwrap();
    assert_eq!(
        run.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&run.stdout)
    );
    assert_eq!(
        String::from_utf8_lossy(&run.stdout),
        format!("ok {}\n", env!("CARGO_PKG_VERSION"))
    );
}

fn which_cc() -> Result<String, ()> {
    for cc in ["cc", "gcc", "clang"] {
        if Command::new(cc)
            .arg("--version")
            .output()
            .is_ok_and(|o| o.status.success())
        {
            return Ok(cc.to_string());
        }
    }
    Err(())
}
