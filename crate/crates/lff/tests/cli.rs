use std::io::Write;
use std::process::Command;

fn lff(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_lff")).args(args).env_remove("LFF_COLOR").output().unwrap()
}

fn session(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn run_ok_exits_zero() {
    let f = session(include_str!("../sessions/sample.lff"));
    let out = lff(&["run", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn parse_error_exits_two() {
    let f = session("char chi { satake = z1 }\nrep pi = seg(chi, k=0, e=0)\n");
    let out = lff(&["run", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn computational_error_exits_one() {
    // A non-character alpha is refused by the linear factor.
    let f = session("char chi { satake = z1 }\nchar big { satake = q^(-3) }\nrep pi = seg(chi, k=1, e=0)\nlfactor-lin pi alpha=big\n");
    let out = lff(&["run", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn fmt_is_idempotent() {
    let f = session(include_str!("../sessions/sample.lff"));
    let once = lff(&["fmt", f.path().to_str().unwrap()]);
    assert_eq!(once.status.code(), Some(0));
    let g = session(&String::from_utf8(once.stdout.clone()).unwrap());
    let twice = lff(&["fmt", g.path().to_str().unwrap()]);
    assert_eq!(once.stdout, twice.stdout);
}

#[test]
fn verify_suite_by_name() {
    let out = lff(&["verify-suite", "pairs"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("PASS suite 5"));
}

#[test]
fn unknown_suite_is_usage_error() {
    assert_eq!(lff(&["verify-suite", "nope"]).status.code(), Some(2));
}

#[test]
fn missing_file_is_usage_error() {
    assert_eq!(lff(&["run", "/nonexistent/x.lff"]).status.code(), Some(2));
}
