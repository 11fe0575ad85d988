use std::path::PathBuf;
use std::process::{Command, Output};

fn lsa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lsa"))
        .args(args)
        .env_remove("LSA_CATALOG_DIR")
        .output()
        .expect("run lsa")
}

fn doc(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("docs").join(name).display().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn check_reports_h1() {
    let o = lsa(&["check", &doc("h1.lsa")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("left-symmetric: ok"));
    assert!(out.contains("lie class: H"));
    assert!(out.contains("novikov"));
}

#[test]
fn zero_algebra_flags() {
    let o = lsa(&["check", &doc("zero.lsa")]);
    assert_eq!(o.status.code(), Some(0));
    let flags = stdout(&o).lines().find(|l| l.starts_with("flags:")).unwrap().to_string();
    for f in ["left_symmetric", "transitive", "novikov", "bisymmetric", "associative"] {
        assert!(flags.contains(f), "{flags}");
    }
    assert!(!flags.contains("simple"));
}

#[test]
fn cocycle_build_gives_h1() {
    let o = lsa(&["cocycle-build", &doc("h1_cocycle.lsa")]);
    assert_eq!(o.status.code(), Some(0));
    let expected: String = std::fs::read_to_string(doc("h1.lsa"))
        .unwrap()
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| format!("{l}\n"))
        .collect();
    assert_eq!(stdout(&o), expected);
}

#[test]
fn cocycle_build_keeps_parameters() {
    let o = lsa(&["cocycle-build", &doc("n1_cocycle.lsa")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "kind algebra dim 3 domain ratfunc\nparams lambda != 0\ne3 e2 = e2\ne3 e3 = lambda e3\n");
    let o = lsa(&["cocycle-build", &doc("n1_cocycle.lsa"), "--param", "lambda=2"]);
    assert_eq!(stdout(&o), "kind algebra dim 3 domain ratfunc\ne3 e2 = e2\ne3 e3 = 2 e3\n");
    let o = lsa(&["cocycle-build", &doc("n1_cocycle.lsa"), "--param", "lambda=0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn catalog_verify_family_h() {
    let o = lsa(&["catalog-verify", "--family", "H"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("H: 10/10 classes verified"));
}

#[test]
fn catalog_verify_entry_with_gaussian_parameter() {
    let o = lsa(&["catalog-verify", "--family", "Dl", "--param", "l=i"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = lsa(&["catalog-verify", "--entry", "N-30"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("N-30"));
}

#[test]
fn iso_verify_shipped_witness() {
    let o = lsa(&["iso", "--verify", &doc("h2_witness.lsa")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("witness: ok"));
}

#[test]
fn iso_search() {
    let o = lsa(&["iso", "--search", &doc("h2_raw.lsa"), &doc("h2.lsa"), "--strict"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verdict: isomorphic"));
    let o = lsa(&["iso", "--search", &doc("h1.lsa"), &doc("h3.lsa")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verdict: not isomorphic"));
}

#[test]
fn rmatrix_check() {
    let o = lsa(&["check", &doc("rmatrix.lsa")]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("cybe: ok"));
}

#[test]
fn fingerprint_is_deterministic() {
    let a = lsa(&["fingerprint", &doc("h1.lsa")]);
    let b = lsa(&["fingerprint", &doc("h1.lsa")]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("novikov"));
}

#[test]
fn catalog_show_roundtrips_through_check() {
    let o = lsa(&["catalog-show", "H-7", "--param", "lambda=2"]);
    assert_eq!(o.status.code(), Some(0));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h7.lsa");
    std::fs::write(&path, o.stdout).unwrap();
    let c = lsa(&["check", path.to_str().unwrap()]);
    assert_eq!(c.status.code(), Some(0));
    assert!(stdout(&c).contains("associative"));
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.lsa");
    std::fs::write(&bad, "kind algebra dim 3 domain rational\ne1 e1 = 1/0 e2\n").unwrap();
    let o = lsa(&["check", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    assert_eq!(lsa(&["check", "/nonexistent.lsa"]).status.code(), Some(2));
    assert_eq!(lsa(&["catalog-show", "H-99"]).status.code(), Some(2));
}

#[test]
fn not_left_symmetric_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.lsa");
    std::fs::write(&bad, "kind algebra dim 3 domain rational\ne1 e2 = e3\ne2 e3 = e1\n").unwrap();
    let o = lsa(&["check", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("left-symmetric: FAIL"));
}

#[test]
fn corrupted_catalog_reports_one_failure() {
    let src = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/catalog");
    let dir = tempfile::tempdir().unwrap();
    for f in std::fs::read_dir(&src).unwrap() {
        let f = f.unwrap().path();
        let mut text = std::fs::read_to_string(&f).unwrap();
        if f.file_name().unwrap() == "H.cat" {
            text = text.replacen("e2 e2 = e3\ne3 e1 = e3\nend", "e2 e2 = 2 e3\ne3 e1 = e3\nend", 1);
        }
        std::fs::write(dir.path().join(f.file_name().unwrap()), text).unwrap();
    }
    let o = Command::new(env!("CARGO_BIN_EXE_lsa"))
        .args(["catalog-verify", "--family", "H"])
        .env("LSA_CATALOG_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("H: 9/10 classes verified"), "{out}");
    assert_eq!(out.lines().filter(|l| l.starts_with("H-")).count(), 1, "{out}");
}
