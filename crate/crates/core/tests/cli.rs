use std::process::Command;

use hopf_core::cli::run;

fn hopf(args: &[&str]) -> hopf_core::cli::Outcome {
    let mut argv = vec!["hopf"];
    argv.extend_from_slice(args);
    run(argv)
}

#[test]
fn iso_reports_differing_v_modules() {
    let out = hopf(&["iso", "gallery:H1", "gallery:H2"]);
    assert_eq!(out.code, 1);
    assert!(
        out.stdout
            .contains("Q V-modules differ: {(1,0),(2,1)} vs {(1,0),(2,0),(4,0)}"),
        "{}",
        out.stdout
    );
}

#[test]
fn iso_of_a_fixture_with_itself_finds_a_witness() {
    let out = hopf(&["iso", "gallery:witt-1-2", "gallery:witt-1-2"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("witness (bijective)"), "{}", out.stdout);
}

#[test]
fn quasi_shuffle_algebra_is_polynomial_in_characteristic_two() {
    let out = hopf(&["poly", "gallery:qsym", "--char", "2"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.trim(), "polynomial");
}

#[test]
fn truncated_polynomial_fails_the_criterion() {
    let out = hopf(&["poly", "gallery:loops-cp2", "--primes", "2,3"]);
    assert_eq!(out.code, 1);
    assert!(
        out.stdout.contains("p = 2: not polynomial (fails in degree 4)"),
        "{}",
        out.stdout
    );
}

#[test]
fn quasi_shuffle_product_on_the_command_line() {
    let out = hopf(&["product", "gallery:qsym-cp2", "[y|y]", "[y]"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.trim(), "[y|y^2] + [y^2|y] + [y|y|y]");
    let out = hopf(&["product", "gallery:qsym-cp2", "[y|y]", "[y]", "--char", "0"]);
    assert_eq!(out.stdout.trim(), "[y|y^2] + [y^2|y] + 3 [y|y|y]");
}

#[test]
fn coproduct_json_lists_terms() {
    let out = hopf(&["coproduct", "gallery:H1", "z", "--format", "json"]);
    assert_eq!(out.code, 0);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["coproduct"], "1⊗z + y⊗y + z⊗1");
    assert_eq!(v["terms"].as_array().unwrap().len(), 3);
}

#[test]
fn classify_split_and_check() {
    let out = hopf(&["classify", "gallery:H2"]);
    assert!(
        out.stdout
            .starts_with("V-module of indecomposables: {(1,0),(2,0),(4,0)}"),
        "{}",
        out.stdout
    );
    assert_eq!(hopf(&["split", "gallery:H1"]).code, 0);
    assert_eq!(hopf(&["check", "gallery:loops-cp3", "--trunc", "8"]).code, 0);
}

#[test]
fn lift_of_the_top_generator() {
    let out = hopf(&["lift", "gallery:loops-cp3", "y3"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.trim(), "y3 + y2y1 + y1^3");
}

#[test]
fn construct_h_prints_generator_coproducts() {
    let out = hopf(&["construct-h", "(1,1)", "--trunc", "4"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("g0_1\t2\tg0_0⊗g0_0"), "{}", out.stdout);
    assert_eq!(hopf(&["construct-h", "(1"]).code, 2);
}

#[test]
fn usage_and_validation_errors_exit_with_two() {
    assert_eq!(hopf(&["bogus"]).code, 2);
    let out = hopf(&["classify", "gallery:nope"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("omega-c"));
    assert_eq!(hopf(&["classify", "gallery:H1", "--char", "3"]).code, 2);
    assert_eq!(hopf(&["classify", "/nonexistent.json"]).code, 2);
    assert_eq!(hopf(&["--help"]).code, 0);
}

#[test]
fn documents_from_files_respect_overrides() {
    let dir = std::env::temp_dir().join(format!("hopf-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cp2.json");
    let doc = r#"{"schema":1,"kind":"algebra","characteristic":2,"truncation":8,
        "generators":[{"name":"y","degree":2}],"relations":["y^3"]}"#;
    std::fs::write(&path, doc).unwrap();
    let p = path.to_str().unwrap();
    let out = hopf(&["classify", p]);
    assert!(
        out.stdout.starts_with("F-module of the augmentation ideal: {(2,1)}"),
        "{}",
        out.stdout
    );
    let out = hopf(&["poincare", p]);
    assert!(out.stdout.contains("fails at j = 0, degree 6"), "{}", out.stdout);
    let out = hopf(&["classify", p, "--char", "3"]);
    assert!(
        out.stdout
            .starts_with("F-module of the augmentation ideal: {(2,0),(4,0)}"),
        "{}",
        out.stdout
    );
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn gallery_show_prints_a_loadable_document() {
    let out = hopf(&["gallery", "show", "H2", "--format", "json"]);
    assert_eq!(out.code, 0);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["document"]["coproducts"]["z"], "x^2@x^2");
    assert_eq!(hopf(&["gallery", "list"]).stdout.lines().count(), 12);
}

#[test]
fn binary_exit_code_matches() {
    let status = Command::new(env!("CARGO_BIN_EXE_hopf"))
        .args(["iso", "gallery:H1", "gallery:H2"])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&status.stdout).contains("Q V-modules differ"));
}
