use std::ffi::{CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use hopf_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn open(name: &str, p: u32, n: usize) -> *mut HopfAlgebra {
    let mut h = ptr::null_mut();
    assert_eq!(
        unsafe { hopf_gallery_open(c(name).as_ptr(), p, n, &mut h) },
        HopfStatus::Ok
    );
    assert!(!h.is_null());
    h
}

fn take(s: *mut std::ffi::c_char) -> String {
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { hopf_string_free(s) };
    out
}

fn last_error() -> String {
    let p = hopf_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

#[test]
fn product_and_coproduct_round_trip_as_text() {
    let h = open("qsym-cp2", 2, 8);
    let mut out = ptr::null_mut();
    let st = unsafe { hopf_product(h, c("[y|y]").as_ptr(), c("[y]").as_ptr(), &mut out) };
    assert_eq!(st, HopfStatus::Ok);
    assert_eq!(take(out), "[y|y^2] + [y^2|y] + [y|y|y]");
    let st = unsafe { hopf_coproduct(h, c("[y]").as_ptr(), &mut out) };
    assert_eq!(st, HopfStatus::Ok);
    assert_eq!(take(out), "1⊗[y] + [y]⊗1");
    unsafe { hopf_algebra_free(h) };
}

#[test]
fn classification_split_and_axioms() {
    let (h1, h2) = (open("H1", 2, 8), open("H2", 2, 8));
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { hopf_classify(h1, &mut out) }, HopfStatus::Ok);
    assert_eq!(take(out), "{(1,0),(2,1)}");
    let (mut split, mut ok) = (false, false);
    assert_eq!(unsafe { hopf_is_split(h2, &mut split) }, HopfStatus::Ok);
    assert!(!split);
    assert_eq!(unsafe { hopf_check_axioms(h1, &mut ok) }, HopfStatus::Ok);
    assert!(ok);
    let mut verdict = HopfVerdict::Undetermined;
    assert_eq!(
        unsafe { hopf_iso(h1, h1, &mut verdict, ptr::null_mut()) },
        HopfStatus::Ok
    );
    assert_eq!(verdict, HopfVerdict::Isomorphic);
    unsafe {
        hopf_algebra_free(h1);
        hopf_algebra_free(h2);
    }
}

#[test]
fn documents_open_at_their_truncation() {
    let json = r#"{"schema":1,"kind":"free-hopf","characteristic":2,"truncation":6,
        "generators":[{"name":"x","degree":1},{"name":"y","degree":2}],"coproducts":{"y":"x@x"}}"#;
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { hopf_document_open(c(json).as_ptr(), &mut h) }, HopfStatus::Ok);
    let (mut bound, mut dim) = (0, 0);
    assert_eq!(unsafe { hopf_algebra_bound(h, &mut bound) }, HopfStatus::Ok);
    assert_eq!(bound, 6);
    assert_eq!(unsafe { hopf_algebra_dimension(h, 3, &mut dim) }, HopfStatus::Ok);
    assert_eq!(dim, 3);
    assert_eq!(unsafe { hopf_algebra_dimension(h, 40, &mut dim) }, HopfStatus::Ok);
    assert_eq!(dim, 0);
    unsafe { hopf_algebra_free(h) };
}

#[test]
fn errors_map_to_status_codes() {
    let mut h = ptr::null_mut();
    assert_eq!(
        unsafe { hopf_gallery_open(c("nope").as_ptr(), 2, 8, &mut h) },
        HopfStatus::Validation
    );
    assert!(last_error().contains("unknown gallery entry"));
    assert!(h.is_null());
    assert_eq!(
        unsafe { hopf_gallery_open(c("H1").as_ptr(), 4, 8, &mut h) },
        HopfStatus::Validation
    );
    assert_eq!(
        unsafe { hopf_gallery_open(ptr::null(), 2, 8, &mut h) },
        HopfStatus::NullPointer
    );
    assert_eq!(
        unsafe { hopf_document_open(c("{").as_ptr(), &mut h) },
        HopfStatus::Parse
    );

    let g = open("H1", 2, 4);
    let mut out = ptr::null_mut();
    let st = unsafe { hopf_product(g, c("z").as_ptr(), c("x").as_ptr(), &mut out) };
    assert_eq!(st, HopfStatus::Truncation);
    let st = unsafe { hopf_coproduct(g, c("q").as_ptr(), &mut out) };
    assert_eq!(st, HopfStatus::Parse, "{}", last_error());
    let bad = [0xffu8, 0];
    let st = unsafe { hopf_coproduct(g, bad.as_ptr().cast(), &mut out) };
    assert_eq!(st, HopfStatus::InvalidUtf8);
    assert_eq!(
        unsafe { hopf_check_axioms(g, ptr::null_mut()) },
        HopfStatus::NullPointer
    );

    let mut ok = false;
    assert_eq!(unsafe { hopf_check_axioms(g, &mut ok) }, HopfStatus::Ok);
    assert!(hopf_last_error().is_null());
    unsafe {
        hopf_algebra_free(g);
        hopf_algebra_free(ptr::null_mut());
        hopf_string_free(ptr::null_mut());
    }
}

fn target_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn c_program_links_against_the_static_library() {
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let lib = target_dir().join("libhopf_ffi.a");
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    if !lib.exists() || Command::new(&cc).arg("--version").output().is_err() {
        eprintln!("skipping: no C compiler or static library at {}", lib.display());
        return;
    }
    let exe = std::env::temp_dir().join(format!("hopf-smoke-{}", std::process::id()));
    let status = Command::new(&cc)
        .args(["-std=c11", "-Wall", "-Werror", "-I"])
        .arg(manifest.join("include"))
        .arg(manifest.join("tests/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C compilation failed");
    let out = Command::new(&exe).output().unwrap();
    let _ = std::fs::remove_file(&exe);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8_lossy(&out.stdout).contains("Q V-modules differ"));
}
