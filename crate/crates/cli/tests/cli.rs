use std::path::PathBuf;
use std::process::{Command, Output};

use rankvar::homalg::{carlson_module, TrivialResolution};
use rankvar::module::write_module;
use rankvar::{AlgebraSpec, CohClass, HopfFlavor, LambdaModule, PrimeField};

fn spec() -> AlgebraSpec<PrimeField> {
    AlgebraSpec::new(PrimeField::new(2).unwrap(), 2, HopfFlavor::GroupLike)
}

/// Writes `m` to a fresh file under the target temp directory.
fn module_file(name: &str, m: &LambdaModule<PrimeField>) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join(format!("{name}.json"));
    std::fs::write(&path, write_module(m)).unwrap();
    path
}

fn trivial() -> PathBuf {
    module_file("trivial", &LambdaModule::trivial(&spec()))
}

fn carlson_y1() -> PathBuf {
    let s = spec();
    let tr = TrivialResolution::new(&s);
    let m = carlson_module(&tr, &CohClass::generator(s.field(), 2, 0)).unwrap();
    module_file("carlson_y1", &m)
}

fn rankvar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rankvar")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn jordan_types() {
    let free = module_file("free", &LambdaModule::free(&spec(), 1));
    let out = rankvar(&["jordan", free.to_str().unwrap(), "z1"]);
    assert!(out.status.success(), "{out:?}");
    assert!(stdout(&out).contains("2,2"), "{}", stdout(&out));

    let out = rankvar(&["jordan", trivial().to_str().unwrap(), "z1+z1*z2"]);
    assert!(out.status.success(), "{out:?}");
    assert_eq!(stdout(&out).trim(), "1");
}

#[test]
fn supports() {
    let out = rankvar(&["support", trivial().to_str().unwrap()]);
    assert!(out.status.success(), "{out:?}");
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["points"].as_array().unwrap().len(), 3);

    let out = rankvar(&["support", carlson_y1().to_str().unwrap(), "--charts"]);
    assert!(out.status.success(), "{out:?}");
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["points"], serde_json::json!(["[0:1]"]));
}

#[test]
fn cosupport_over_an_extension() {
    let out = rankvar(&["cosupport", carlson_y1().to_str().unwrap(), "--field", "4"]);
    assert!(out.status.success(), "{out:?}");
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["points"], serde_json::json!(["[0:1]"]));
}

#[test]
fn ext_dimensions() {
    let k = trivial();
    let out = rankvar(&["ext", k.to_str().unwrap(), k.to_str().unwrap(), "--ext-bound", "3"]);
    assert!(out.status.success(), "{out:?}");
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    // Ext^i(k, k) over a rank-2 algebra has dimension i + 1.
    assert_eq!(report["degrees"], serde_json::json!([0, 1, 2, 3]));
    assert_eq!(report["dims"], serde_json::json!([1, 2, 3, 4]));
}

#[test]
fn generic_point_of_a_line() {
    let ideal = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("line.ideal");
    std::fs::write(&ideal, "y1\n").unwrap();
    let out = rankvar(&["generic-point", ideal.to_str().unwrap(), "--field", "2", "--vars", "3"]);
    assert!(out.status.success(), "{out:?}");
}

#[test]
fn verify_suite_passes() {
    let out = rankvar(&["verify", "carlson", "--p", "2", "--r", "2"]);
    assert!(out.status.success(), "{out:?}");
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["passed"], serde_json::json!(true));
    assert!(String::from_utf8_lossy(&out.stderr).contains("PASS"));
}

#[test]
fn input_errors_exit_with_two() {
    assert_eq!(rankvar(&["verify", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(rankvar(&["support", "/nonexistent/module.json"]).status.code(), Some(2));
    assert_eq!(rankvar(&["jordan", trivial().to_str().unwrap(), "z1*z2"]).status.code(), Some(2));
}
