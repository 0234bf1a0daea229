//! The generated header compiles as C, and a C program linked against the
//! static library gets the same answers as the Rust API.

use std::path::{Path, PathBuf};
use std::process::Command;

fn header_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("include")
}

fn cc() -> String {
    std::env::var("CC").unwrap_or_else(|_| "cc".to_owned())
}

fn target_dir() -> PathBuf {
    // .../target/<profile>/deps/<test binary>
    std::env::current_exe()
        .unwrap()
        .parent()
        .unwrap()
        .parent()
        .unwrap()
        .to_path_buf()
}

#[test]
fn header_declares_api() {
    let header = std::fs::read_to_string(header_dir().join("kolchin.h")).unwrap();
    for name in [
        "typedef struct KolchinPoly KolchinPoly;",
        "typedef struct KolchinExpSet KolchinExpSet;",
        "typedef struct KolchinSystem KolchinSystem;",
        "KOLCHIN_STATUS_RESOURCE_LIMIT = 3",
        "kolchin_last_error(void)",
        "kolchin_system_omega_via_prolongation(",
        "kolchin_bounds_json(",
    ] {
        assert!(header.contains(name), "missing {name}");
    }
}

#[test]
fn header_compiles_as_c() {
    let status = Command::new(cc())
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-x", "c"])
        .arg(header_dir().join("kolchin.h"))
        .status()
        .expect("a C compiler is available");
    assert!(status.success());
}

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "kolchin.h"

int main(void) {
    KolchinSystem *sys = NULL;
    const char *text = "m = 2\nn = 2\neq: 1*d[0,1]x2 - 1*d[1,0]x1\neq: 1*d[1,0]x2 + 1*d[0,1]x1\n";
    if (kolchin_system_parse(text, &sys) != KOLCHIN_STATUS_OK) return 1;
    KolchinPoly *a = NULL, *b = NULL;
    if (kolchin_system_omega(sys, &a) != KOLCHIN_STATUS_OK) return 2;
    if (kolchin_system_omega_via_prolongation(sys, &b) != KOLCHIN_STATUS_OK) return 3;
    int32_t cmp = 7;
    if (kolchin_poly_compare(a, b, &cmp) != KOLCHIN_STATUS_OK || cmp != 0) return 4;
    char *json = NULL;
    if (kolchin_poly_to_json(a, &json) != KOLCHIN_STATUS_OK) return 5;
    printf("%s\n", json);
    kolchin_string_free(json);
    char *bounds = NULL;
    if (kolchin_bounds_json(4, 4, 1, &bounds) != KOLCHIN_STATUS_RESOURCE_LIMIT) return 6;
    if (kolchin_last_error() == NULL) return 7;
    kolchin_poly_free(a);
    kolchin_poly_free(b);
    kolchin_system_free(sys);
    return 0;
}
"#;

#[test]
fn c_program_links_against_static_library() {
    // `cargo test` only builds the rlib
    let mut build = Command::new(env!("CARGO"));
    build.args(["build", "--quiet", "-p", "kolchin-ffi", "--lib"]);
    if !cfg!(debug_assertions) {
        build.arg("--release");
    }
    let status = build
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .status()
        .unwrap();
    assert!(status.success());
    let lib = target_dir().join("libkolchin_ffi.a");
    assert!(lib.exists(), "{} not built", lib.display());
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("main.c");
    let exe = dir.path().join("main");
    std::fs::write(&src, PROGRAM).unwrap();
    let status = Command::new(cc())
        .args(["-std=c99", "-Wall", "-Werror", "-I"])
        .arg(header_dir())
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap().trim(),
        r#"{"m":2,"standard_coeffs":["0","2","0"]}"#
    );
}
