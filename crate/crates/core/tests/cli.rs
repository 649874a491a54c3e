use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use cartan_qec::golden;
use cartan_qec::io::{code_to_json, format_error_list};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cartan-qec"))
        .args(args)
        .env_remove("CARTAN_QEC_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

struct Fixture {
    _dir: tempfile::TempDir,
    rep3: PathBuf,
    cat3: PathBuf,
    x_flips: PathBuf,
    z_flips: PathBuf,
    root: PathBuf,
}

fn fixture() -> Fixture {
    let dir = tempfile::tempdir().unwrap();
    let root = dir.path().to_path_buf();
    Fixture {
        rep3: write(&root, "rep3.json", &code_to_json(&golden::repetition3())),
        cat3: write(&root, "cat3.json", &code_to_json(&golden::cat3())),
        x_flips: write(&root, "x.txt", &format_error_list(&golden::x_flips3())),
        z_flips: write(&root, "z.txt", &format_error_list(&golden::z_flips3())),
        root,
        _dir: dir,
    }
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn verify_correctable_code_exits_zero() {
    let f = fixture();
    let o = run(&["verify", "--code", s(&f.rep3), "--errors", s(&f.x_flips)]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("i\tj\terror\tcodeword_spinor\tlabel\n"));
    assert_eq!(
        out.lines()
            .filter(|l| l.chars().next().is_some_and(|c| c.is_ascii_digit()))
            .count(),
        8
    );
    assert!(out.contains("verdict\tcorrectable\talgebraic"), "{out}");
}

#[test]
fn verify_collision_exits_one() {
    let f = fixture();
    let o = run(&["verify", "--code", s(&f.cat3), "--errors", s(&f.z_flips)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(
        stdout(&o).contains("verdict\tcollision(1,0,2,0)"),
        "{}",
        stdout(&o)
    );
}

#[test]
fn verify_json_output_parses() {
    let f = fixture();
    let o = run(&[
        "verify",
        "--code",
        s(&f.rep3),
        "--errors",
        s(&f.x_flips),
        "--json",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["verdict"]["verdict"], "correctable");
    assert_eq!(doc["table"].as_array().unwrap().len(), 8);
}

#[test]
fn build_writes_a_loadable_code() {
    let f = fixture();
    let cart = write(
        &f.root,
        "cart.json",
        r#"{"width": 3, "generators": ["ZII", "IZI", "IIZ"]}"#,
    );
    let out = f.root.join("built.json");
    let o = run(&[
        "build",
        "--cartanion",
        s(&cart),
        "--labels",
        "000,111",
        "--out",
        s(&out),
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let o = run(&["verify", "--code", s(&out), "--errors", s(&f.x_flips)]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn build_rejects_anticommuting_generators() {
    let f = fixture();
    let cart = write(
        &f.root,
        "bad.json",
        r#"{"width": 2, "generators": ["XI", "ZI"]}"#,
    );
    let o = run(&["build", "--cartanion", s(&cart), "--labels", "00"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn classify_reports_type_one() {
    let f = fixture();
    let o = run(&["classify", "--code", s(&f.rep3)]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("type\tI\n"), "{out}");
    assert!(out.contains("additivity\tadditive"), "{out}");
}

#[test]
fn search_finds_and_reverifies() {
    let f = fixture();
    let out = f.root.join("found.json");
    let o = run(&[
        "search",
        "--errors",
        s(&f.x_flips),
        "--k",
        "2",
        "--out",
        s(&out),
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    assert!(stdout(&o).contains("verdict\tcorrectable"));
    let o = run(&["verify", "--code", s(&out), "--errors", s(&f.x_flips)]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn random_search_with_workers() {
    let f = fixture();
    let errs = write(
        &f.root,
        "five.txt",
        &format_error_list(&cartan_qec::ErrorSet::single_qubit(5)),
    );
    let args = [
        "search",
        "--errors",
        s(&errs),
        "--k",
        "2",
        "--strategy",
        "random",
        "--seed",
        "7",
    ];
    let a = run(&args);
    let b = run(&[&args[..], &["--workers", "3"]].concat());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn search_reports_pigeonhole_as_not_found() {
    let f = fixture();
    let o = run(&["search", "--errors", s(&f.x_flips), "--k", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("not-found"));
}

#[test]
fn diagnose_maps_syndrome_to_error() {
    let f = fixture();
    // X on the first qubit flips the first Z generator
    let o = run(&[
        "diagnose",
        "--code",
        s(&f.rep3),
        "--errors",
        s(&f.x_flips),
        "--syndrome",
        "100",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("error\t1\tXII"), "{out}");
    assert!(out.contains("codeword\t0\tIII"), "{out}");
}

#[test]
fn diagnose_on_uncorrectable_code_exits_one() {
    let f = fixture();
    let o = run(&[
        "diagnose",
        "--code",
        s(&f.cat3),
        "--errors",
        s(&f.z_flips),
        "--syndrome",
        "000",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn selftest_passes() {
    let o = run(&["selftest", "--max-width", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("1.."));
}

#[test]
fn bad_input_is_a_usage_error() {
    let f = fixture();
    let junk = write(&f.root, "junk.txt", "XQI\n");
    assert_eq!(
        run(&["verify", "--code", s(&f.rep3), "--errors", s(&junk)])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}
