//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero when the failing set differs from the documented one.

use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode};
use std::sync::Arc;

use relhom::catalog;
use relhom::complexes::{verify_complex_id, verify_complex_pd};
use relhom::relhom::{classify, verify_fpd_theorem, Level, TestClass};
use relhom::repmod::enumerate_indecomposables;
use relhom::verdict::{Answer, Bounds};

/// Criteria known to fail, with the reason kept next to the check.
const EXPECTED_FAILURES: &[usize] = &[7];

const ALGEBRAS: [&str; 5] = ["a2", "a3", "kronecker", "dual", "semisimple2"];
const LEVELS: [usize; 3] = [0, 1, 2];

struct Run {
    args: Vec<String>,
    code: i32,
    stdout: String,
    stderr: String,
}

impl Run {
    fn record(&self, question: &str) -> Option<&str> {
        let prefix = format!("VERDICT {question} ");
        self.stdout.lines().find(|l| l.starts_with(&prefix))
    }

    fn records(&self) -> impl Iterator<Item = &str> {
        self.stdout.lines().filter(|l| l.starts_with("VERDICT "))
    }
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn relhom(args: &[String], cache: &Path) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_relhom"))
        .args(args)
        .arg("--machine")
        .arg("--cache-dir")
        .arg(cache)
        .env_remove("RELHOM_CACHE")
        .output()
        .expect("failed to start relhom");
    Run {
        args: args.to_vec(),
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn suite() -> Vec<Vec<String>> {
    let mut all = Vec::new();
    for a in ALGEBRAS {
        let alg = data(&format!("{a}.alg")).display().to_string();
        let with = |rest: &[&str]| -> Vec<String> {
            rest.iter().map(|s| s.to_string()).chain(["--algebra".to_string(), alg.clone()]).collect()
        };
        all.push(with(&["gldim"]));
        all.push(with(&["fpd"]));
        all.push(with(&["indecs"]));
        for n in LEVELS {
            all.push(with(&["sing", "--n", &n.to_string()]));
        }
        for t in ["fpd-equiv", "pd-bounds", "ext-oracle", "cfpn", "cfin", "euler", "n0-degeneracy"] {
            all.push(with(&["verify", "--theorem", t]));
        }
    }
    all.push(vec!["recollement".into()]);
    all.push(vec!["verify".into(), "--theorem".into(), "recollement-corollary".into()]);
    all
}

struct Suite {
    runs: Vec<Run>,
}

impl Suite {
    fn find(&self, words: &[&str], algebra: Option<&str>) -> &Run {
        self.runs
            .iter()
            .find(|r| {
                r.args.len() >= words.len()
                    && r.args.iter().zip(words).all(|(a, w)| a == w)
                    && algebra.map_or(true, |a| r.args.iter().any(|x| x.ends_with(&format!("/{a}.alg"))))
            })
            .unwrap_or_else(|| panic!("no run for {words:?} on {algebra:?}"))
    }
}

fn field<'a>(record: &'a str, key: &str) -> Option<&'a str> {
    let start = record.find(&format!(" {key}="))? + key.len() + 2;
    let rest = &record[start..];
    if let Some(quoted) = rest.strip_prefix('"') {
        return quoted.find('"').map(|e| &quoted[..e]);
    }
    Some(rest.split(' ').next().unwrap())
}

fn value<'a>(run: &'a Run, question: &str) -> Option<&'a str> {
    run.record(question).and_then(|r| field(r, "value"))
}

/// A check record passes when it is a hard yes, or an advisory pass with
/// nothing undecided.
fn check_passes(record: &str) -> bool {
    match field(record, "value") {
        Some("yes") => true,
        Some("unknown") => field(record, "witness") == Some("advisory") && field(record, "undecided") == Some("0"),
        _ => false,
    }
}

fn criterion(
    results: &mut Vec<(usize, bool)>,
    k: usize,
    what: &str,
    check: impl FnOnce(&mut Vec<String>),
) {
    let mut problems = Vec::new();
    check(&mut problems);
    let ok = problems.is_empty();
    println!("criterion {k:>2}: {} {what}", if ok { "PASS" } else { "FAIL" });
    for p in problems.iter().take(12) {
        println!("              {p}");
    }
    if problems.len() > 12 {
        println!("              ... {} more", problems.len() - 12);
    }
    results.push((k, ok));
}

fn main() -> ExitCode {
    let bounds = Bounds::new(6, 16);
    let cache = tempfile::tempdir().unwrap();
    let invocations = suite();
    let cold = Suite { runs: invocations.iter().map(|a| relhom(a, cache.path())).collect() };
    let mut results = Vec::new();

    for r in &cold.runs {
        if r.code == 1 && !r.stderr.trim().is_empty() {
            println!("error in `relhom {}`: {}", r.args.join(" "), r.stderr.trim());
        }
    }

    criterion(&mut results, 1, "gldim and fd-1-gldim values on Kronecker, A2 and A3", |bad| {
        for (a, want) in [("kronecker", "finite:1"), ("a2", "finite:1"), ("a3", "finite:1")] {
            let got = value(cold.find(&["gldim"], Some(a)), "gldim");
            if got != Some(want) {
                bad.push(format!("{a}: gldim {got:?}, expected {want}"));
            }
        }
        for a in ["a2", "a3"] {
            let rec = cold.find(&["sing", "--n", "1"], Some(a)).record("fd-gldim-n1");
            if rec.and_then(|r| field(r, "value")) != Some("finite:0") || rec.is_some_and(|r| r.contains("caveat=")) {
                bad.push(format!("{a}: {rec:?}"));
            }
        }
    });

    criterion(&mut results, 2, "Kronecker fd-1-gldim = 0 carries the caveat", |bad| {
        let rec = cold.find(&["sing", "--n", "1"], Some("kronecker")).record("fd-gldim-n1").unwrap_or("");
        if field(rec, "value") != Some("finite:0") {
            bad.push(format!("value: {rec}"));
        }
        if !field(rec, "caveat").is_some_and(|c| c.contains("infinite representation type")) {
            bad.push(format!("caveat missing: {rec}"));
        }
    });

    criterion(&mut results, 3, "level-zero degeneracy on the full inventories", |bad| {
        for a in ALGEBRAS {
            let rec = cold.find(&["verify", "--theorem", "n0-degeneracy"], Some(a)).record("verify:n0-degeneracy");
            if !rec.is_some_and(|r| field(r, "value") == Some("yes")) {
                bad.push(format!("{a}: {rec:?}"));
            }
        }
    });

    let level_checks = |bad: &mut Vec<String>, theorem: &str| {
        for a in ALGEBRAS {
            let run = cold.find(&["verify", "--theorem", theorem], Some(a));
            for n in ["0", "1", "2", "inf"] {
                let rec = run.record(&format!("verify:{theorem}:n{n}"));
                if !rec.is_some_and(check_passes) {
                    bad.push(format!("{a} n={n}: {rec:?}"));
                }
            }
        }
    };
    criterion(&mut results, 4, "relative Ext agrees with the exact-subspace oracle", |bad| {
        level_checks(bad, "ext-oracle")
    });
    criterion(&mut results, 5, "n-pd <= pd <= n + n-pd", |bad| level_checks(bad, "pd-bounds"));

    criterion(&mut results, 6, "P_n classifications track the finitistic dimension", |bad| {
        let classes = |alg| {
            let inv = Arc::new(enumerate_indecomposables(&alg, 6));
            let answers: Vec<Vec<Answer>> = LEVELS
                .iter()
                .map(|&n| classify(&TestClass::build(&inv, Level::Finite(n), bounds)).iter().map(|v| v.answer).collect())
                .collect();
            (inv, answers)
        };
        let (inv, c) = classes(catalog::a2());
        if c.iter().flatten().any(|a| *a == Answer::Unknown) {
            bad.push("A2: undecided classification".into());
        }
        if c[1] != c[2] || c[0] == c[1] {
            bad.push(format!("A2: P0 {:?}, P1 {:?}, P2 {:?}", c[0], c[1], c[2]));
        }
        let r = verify_fpd_theorem(&inv, 1, bounds);
        if !r.check.hard || !r.check.violations.is_empty() || r.fpd.value.to_string() != "finite:1" {
            bad.push(format!("A2: fPD {} check {:?}", r.fpd.value, r.check.violations));
        }
        let (inv, c) = classes(catalog::dual_numbers());
        if c[0] != c[1] || c[1] != c[2] || c.iter().flatten().any(|a| *a == Answer::Unknown) {
            bad.push(format!("dual numbers: P0 {:?}, P1 {:?}, P2 {:?}", c[0], c[1], c[2]));
        }
        let r = verify_fpd_theorem(&inv, 0, bounds);
        if !r.check.hard || !r.check.violations.is_empty() || r.fpd.value.to_string() != "finite:0" {
            bad.push(format!("dual numbers: fPD {} check {:?}", r.fpd.value, r.check.violations));
        }
    });

    // The literal cokernel criterion and the global bounds built on it
    // undercount on complexes like 0 -> S2 -> P1 -> S1 -> 0 over A2, where
    // Ker d^0 -> X^0 -> Coker d^-1 is split but the truncation it stands for
    // is not. The split-cokernel criterion must never disagree with Ext.
    let mut other_violations = Vec::new();
    criterion(&mut results, 7, "complex n-pd and n-id criteria agree on random complexes", |bad| {
        for (a, alg) in ALGEBRAS.iter().zip(catalog::all()) {
            let inv = Arc::new(enumerate_indecomposables(&alg, 6));
            for n in LEVELS {
                let class = TestClass::build(&inv, Level::Finite(n), bounds);
                for report in [verify_complex_pd(&class, 20, 0x5eed), verify_complex_id(&class, 20, 0x5eed)] {
                    if report.checked == 0 {
                        bad.push(format!("{a} n={n} {}: nothing decided", report.name));
                    }
                    for v in &report.violations {
                        bad.push(format!("{a} n={n} {}: {v}", report.name));
                        let documented = v.contains(": cokernel criterion ") || v.contains("exceeds the global bound");
                        if !documented {
                            other_violations.push(format!("{a} n={n}: {v}"));
                        }
                    }
                }
            }
        }
        for (a, theorem) in ALGEBRAS.iter().flat_map(|a| [(a, "cfpn"), (a, "cfin")]) {
            let run = cold.find(&["verify", "--theorem", theorem], Some(a));
            let failing = run.records().filter(|r| field(r, "value") == Some("no")).count();
            if failing > 0 && run.code != 1 {
                bad.push(format!("{a} {theorem}: failing records but exit {}", run.code));
            }
        }
    });
    if !other_violations.is_empty() {
        println!("              undocumented criterion 7 violations:");
        for v in &other_violations {
            println!("              {v}");
        }
    }

    criterion(&mut results, 8, "singularity vanishing matches finiteness of gldim", |bad| {
        for a in ALGEBRAS {
            for n in LEVELS {
                let run = cold.find(&["sing", "--n", &n.to_string()], Some(a));
                let rec = run.record(&format!("sing-n{n}")).unwrap_or("");
                let want = if a == "dual" { "no" } else { "yes" };
                if run.code == 1 || field(rec, "value") != Some(want) {
                    bad.push(format!("{a} n={n}: exit {} {rec}", run.code));
                }
                if a == "dual" && field(rec, "witness") != Some("module(1)") {
                    bad.push(format!("{a} n={n}: obstruction {rec}"));
                }
            }
        }
    });

    criterion(&mut results, 9, "recollement corollary on the standard gluings", |bad| {
        let run = cold.find(&["verify", "--theorem", "recollement-corollary"], None);
        for n in LEVELS {
            let recs: Vec<&str> = run.records().filter(|r| r.split(' ').nth(1).unwrap().ends_with(&format!(":n{n}"))).collect();
            if recs.len() < 5 {
                bad.push(format!("n={n}: only {} gluings", recs.len()));
            }
            for name in ["point+point->A2", "A2+point->A3", "dual+point_product"] {
                if !recs.iter().any(|r| r.contains(&format!(":{name}:"))) {
                    bad.push(format!("n={n}: {name} missing"));
                }
            }
            for r in recs {
                if !check_passes(r) {
                    bad.push(r.to_string());
                }
            }
        }
    });

    criterion(&mut results, 10, "machine-mode records are byte-identical across runs", |bad| {
        let warm: Vec<Run> = invocations.iter().map(|a| relhom(a, cache.path())).collect();
        for (c, w) in cold.runs.iter().zip(&warm) {
            if c.stdout != w.stdout || c.code != w.code {
                bad.push(format!("`relhom {}` differs", c.args.join(" ")));
            }
        }
    });

    let failing: Vec<usize> = results.iter().filter(|(_, ok)| !ok).map(|(k, _)| *k).collect();
    println!("failing criteria: {failing:?} (documented: {EXPECTED_FAILURES:?})");
    if failing == EXPECTED_FAILURES && other_violations.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
