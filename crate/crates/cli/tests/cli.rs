use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn relhom(args: &[&str], cache: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_relhom"))
        .args(args)
        .arg("--cache-dir")
        .arg(cache)
        .env_remove("RELHOM_CACHE")
        .output()
        .unwrap()
}

fn text(bytes: &[u8]) -> String {
    String::from_utf8(bytes.to_vec()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn decisive_answers_exit_zero() {
    let cache = tempfile::tempdir().unwrap();
    let out = relhom(&["gldim", "--algebra", &data("kronecker.alg"), "--machine"], cache.path());
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(text(&out.stdout), "VERDICT gldim value=finite:1 bounds=d:6,B:16 witness=module(1,0)\n");
}

#[test]
fn relative_queries_on_a2() {
    let cache = tempfile::tempdir().unwrap();
    let alg = data("a2.alg");
    let run = |args: &[&str]| {
        let mut all = args.to_vec();
        all.extend(["--algebra", &alg, "--machine"]);
        let out = relhom(&all, cache.path());
        assert_eq!(out.status.code(), Some(0), "{}", text(&out.stderr));
        text(&out.stdout)
    };
    let s1 = data("a2_s1.mod");
    let s2 = data("a2_s2.mod");
    assert!(run(&["pd", "--module", &s1]).contains("value=finite:1"));
    assert!(run(&["ext", "--i", "1", "--module", &s1, "--module2", &s2]).contains("value=finite:1"));
    assert!(run(&["next", "--n", "1", "--i", "1", "--module", &s1, "--module2", &s2]).contains("value=finite:0"));
    assert!(run(&["npd", "--n", "1", "--module", &s1]).contains("value=finite:0"));
    assert!(run(&["nproj", "--n", "1", "--module", &s1]).contains("value=yes"));
    assert!(run(&["nexact", "--n", "0", "--seq", &data("a2_ses.seq")]).contains("value=yes"));
    assert!(run(&["nexact", "--n", "1", "--seq", &data("a2_ses.seq")]).contains("value=no"));
}

#[test]
fn advisory_answers_exit_two() {
    let cache = tempfile::tempdir().unwrap();
    let out = relhom(&["verify", "--theorem", "pd-bounds", "--n", "1", "--algebra", &data("kronecker.alg"), "--machine"], cache.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(text(&out.stdout).contains("value=unknown"));
}

#[test]
fn parse_errors_name_file_and_line() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.mod");
    fs::write(&bad, "dim 1 = 1\ndim 2 = 1\nmap z = [[1]]\n").unwrap();
    let out = relhom(&["pd", "--algebra", &data("a2.alg"), "--module", path(&bad)], dir.path());
    assert_eq!(out.status.code(), Some(1));
    let err = text(&out.stderr);
    assert!(err.contains("bad.mod:3"), "{err}");
    assert!(err.contains("`z`"), "{err}");
}

#[test]
fn relation_violations_name_the_relation() {
    let cache = tempfile::tempdir().unwrap();
    let out = relhom(&["pd", "--algebra", &data("dual.alg"), "--module", &data("dual_bad.mod")], cache.path());
    assert_eq!(out.status.code(), Some(1));
    let err = text(&out.stderr);
    assert!(err.contains("relation"), "{err}");
    assert!(err.contains("x.x"), "{err}");
}

#[test]
fn missing_inputs_are_errors() {
    let cache = tempfile::tempdir().unwrap();
    let out = relhom(&["pd", "--algebra", &data("a2.alg")], cache.path());
    assert_eq!(out.status.code(), Some(1));
    assert!(text(&out.stderr).contains("--module"));
}

#[test]
fn cache_hits_are_transparent() {
    let cache = tempfile::tempdir().unwrap();
    let alg = data("a3.alg");
    let args = ["indecs", "--algebra", &alg, "--machine"];
    let cold = relhom(&args, cache.path());
    let entries: Vec<_> = fs::read_dir(cache.path()).unwrap().collect();
    assert_eq!(entries.len(), 1);
    let warm = relhom(&args, cache.path());
    assert_eq!(cold.stdout, warm.stdout);
    assert_eq!(cold.status.code(), warm.status.code());
    let elsewhere = tempfile::tempdir().unwrap();
    assert_eq!(relhom(&args, elsewhere.path()).stdout, cold.stdout);
}

#[test]
fn stale_cache_entries_are_recomputed() {
    let cache = tempfile::tempdir().unwrap();
    let (a2_alg, a3_alg) = (data("a2.alg"), data("a3.alg"));
    let a2 = ["indecs", "--algebra", &a2_alg, "--machine"];
    let a3 = ["indecs", "--algebra", &a3_alg, "--machine"];
    let expected = relhom(&a2, cache.path()).stdout;
    relhom(&a3, cache.path());
    let mut entries: Vec<PathBuf> = fs::read_dir(cache.path()).unwrap().map(|e| e.unwrap().path()).collect();
    entries.sort_by_key(|p| fs::metadata(p).unwrap().len());
    // plant the larger A3 entry under the A2 file name
    let (small, large) = (&entries[0], &entries[1]);
    fs::copy(large, small).unwrap();
    assert_eq!(relhom(&a2, cache.path()).stdout, expected);
    fs::write(small, "garbage").unwrap();
    assert_eq!(relhom(&a2, cache.path()).stdout, expected);
}

#[test]
fn human_mode_shows_caveats() {
    let cache = tempfile::tempdir().unwrap();
    let out = relhom(&["sing", "--n", "1", "--algebra", &data("kronecker.alg")], cache.path());
    let s = text(&out.stdout);
    assert!(s.contains("caveat:"), "{s}");
    assert!(!s.contains("VERDICT"), "{s}");
}
