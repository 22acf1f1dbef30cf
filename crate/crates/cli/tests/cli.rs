use std::path::PathBuf;
use std::process::{Command, Output};

fn spined(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spined")).args(args).output().expect("binary runs")
}

fn example(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/examples").join(name).display().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn generate_then_analyze() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b.txt");
    let out = spined(&["generate", "rectangular_band(2,3)"]);
    assert!(out.status.success());
    std::fs::write(&path, &out.stdout).unwrap();
    let out = spined(&["analyze", path.to_str().unwrap()]);
    let text = stdout(&out);
    assert!(text.contains("order: 6") && text.contains("regular: true"), "{text}");
}

#[test]
fn analyze_json_is_well_formed() {
    let out = spined(&["--format", "json", "analyze", &example("brandt_b2.txt")]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["order"], 5);
    assert_eq!(v["inverse"], true);
}

#[test]
fn corpus_write_matches_checked_in_files() {
    let dir = tempfile::tempdir().unwrap();
    assert!(spined(&["corpus", "write", dir.path().to_str().unwrap()]).status.success());
    let checked_in = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/corpus");
    let mut n = 0;
    for entry in std::fs::read_dir(dir.path()).unwrap() {
        let p = entry.unwrap().path();
        let name = p.file_name().unwrap();
        assert_eq!(std::fs::read(&p).unwrap(), std::fs::read(checked_in.join(name)).unwrap(), "{name:?}");
        n += 1;
    }
    assert_eq!(n, std::fs::read_dir(checked_in).unwrap().count());
}

#[test]
fn chen_with_left_normal_band() {
    let out = spined(&["chen", &example("chain_core.txt"), "--band", &example("left_normal_band.txt"), "--embed", "0,1"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("subset T0:"));
}

#[test]
fn chen_from_explicit_data() {
    let out = spined(&["chen", &example("chen_two_points.txt")]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("3\n"));
}

#[test]
fn spined_rebuild_reports_the_isomorphism() {
    let out = spined(&["spined", &example("brandt_b2.txt")]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("map phi:"));
}

#[test]
fn transversals_dedup_never_grows_the_list() {
    let count = |extra: &[&str]| {
        let mut args = vec!["transversals", "--format", "json"];
        let f = example("rectangular_band_3x3.txt");
        args.push(&f);
        args.extend_from_slice(extra);
        let v: serde_json::Value = serde_json::from_slice(&spined(&args).stdout).unwrap();
        v.as_array().unwrap().len()
    };
    let (all, dedup) = (count(&[]), count(&["--dedup-iso"]));
    assert_eq!(all, 9);
    assert_eq!(dedup, 1);
}

#[test]
fn input_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "2\n0 1\n1 2\n").unwrap();
    let out = spined(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
    assert_eq!(spined(&["verify", &example("rectangular_band_3x3.txt"), "--transversal", "99"]).status.code(), Some(2));
}

#[test]
fn failing_verification_exits_with_one() {
    assert_eq!(spined(&["verify", &example("chain_top_only.txt")]).status.code(), Some(1));
}
