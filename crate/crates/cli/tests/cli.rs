//! End-to-end tests of the `trivext` binary: exit codes, report texts, JSON
//! schema, and byte-determinism of census output across worker counts.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn trivext() -> Command {
    Command::new(env!("CARGO_BIN_EXE_trivext"))
}

fn run(args: &[&str]) -> Output {
    trivext().args(args).output().expect("binary should start")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("no exit code (signal?)")
}

fn write_file(dir: &TempDir, name: &str, contents: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_str().unwrap().to_owned()
}

fn chain2(dir: &TempDir) -> String {
    write_file(dir, "chain2.poset", "elem x\nelem y\nx < y\n")
}

fn kronecker(dir: &TempDir) -> String {
    write_file(
        dir,
        "kronecker.quiver",
        "# two parallel arrows\nvertices 2\narrow a 0 1\narrow b 0 1\n",
    )
}

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures", name]
        .iter()
        .collect();
    p.to_str().unwrap().to_owned()
}

#[test]
fn resolve_periodic_exits_zero() {
    let dir = TempDir::new().unwrap();
    let out = run(&["resolve", &chain2(&dir), "--te"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("verdict: Periodic"), "{text}");
    assert!(text.contains("algebra: T(k[chain2])"), "{text}");
}

#[test]
fn resolve_writes_schema_one_json() {
    let dir = TempDir::new().unwrap();
    let json_path = dir.path().join("report.json");
    let input = chain2(&dir);
    let out = run(&[
        "resolve",
        &input,
        "--te",
        "--json",
        json_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json_path).unwrap()).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["command"], "resolve");
    assert_eq!(v["trivial_extension"], true);
    assert_eq!(v["mode"], "simples");
    assert_eq!(v["algebra"]["field"], "Q");
    assert_eq!(v["verdict"]["kind"], "Periodic");
    assert_eq!(v["simples"].as_array().unwrap().len(), 2);
    // vertex names from the poset file survive into the report
    let names: Vec<&str> = v["simples"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["name"].as_str().unwrap())
        .collect();
    assert_eq!(names, ["x", "y"]);
}

#[test]
fn resolve_divergence_exits_three() {
    let dir = TempDir::new().unwrap();
    let out = run(&[
        "resolve",
        &kronecker(&dir),
        "--te",
        "--max-steps",
        "60",
        "--dim-cap",
        "60",
    ]);
    assert_eq!(code(&out), 3, "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("verdict: Diverging"), "{}", stdout(&out));
}

#[test]
fn resolve_inconclusive_exits_four() {
    let dir = TempDir::new().unwrap();
    let input = chain2(&dir);

    // budget too small for the period
    let out = run(&["resolve", &input, "--te", "--max-steps", "1"]);
    assert_eq!(code(&out), 4);
    assert!(stdout(&out).contains("verdict: Inconclusive"));

    // hereditary algebra: syzygies vanish, periodicity is vacuous
    let out = run(&["resolve", &input]);
    assert_eq!(code(&out), 4);
    assert!(stdout(&out).contains("hits 0"), "{}", stdout(&out));
}

#[test]
fn resolve_bimodule_mode_reports_period() {
    let dir = TempDir::new().unwrap();
    let out = run(&["resolve", &chain2(&dir), "--te", "--bimodule"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("mode: bimodule"), "{text}");
    assert!(text.contains("verdict: Periodic  n=4"), "{text}");
}

#[test]
fn usage_errors_exit_one() {
    let dir = TempDir::new().unwrap();
    let input = chain2(&dir);
    assert_eq!(code(&run(&[])), 1, "missing subcommand");
    assert_eq!(
        code(&run(&["resolve", &input, "--field", "z"])),
        1,
        "unparseable field"
    );
    assert_eq!(
        code(&run(&["census", "9"])),
        1,
        "long census without --extended"
    );
    assert_eq!(
        code(&run(&["verify-dynkin", "--max-rank", "9"])),
        1,
        "rank out of range"
    );
}

#[test]
fn input_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    assert_eq!(
        code(&run(&["resolve", "/no/such/file.poset"])),
        2,
        "missing file"
    );
    let bad = write_file(&dir, "bad.poset", "elem x\nx < y\n");
    assert_eq!(code(&run(&["resolve", &bad])), 2, "undeclared element");
    assert_eq!(
        code(&run(&["census", "13", "--extended"])),
        2,
        "census size out of range"
    );
    let quiver = kronecker(&dir);
    assert_eq!(
        code(&run(&["export-qpa", &quiver])),
        2,
        "quiver input has no incidence algebra"
    );
    let antichain = write_file(&dir, "antichain.poset", "elem a\nelem b\n");
    assert_eq!(
        code(&run(&["export-qpa", &antichain])),
        2,
        "unbounded poset"
    );
}

#[test]
fn census_json_is_byte_identical_across_worker_counts() {
    let dir = TempDir::new().unwrap();
    let one = dir.path().join("w1.json");
    let four = dir.path().join("w4.json");
    let out1 = run(&[
        "census",
        "7",
        "--workers",
        "1",
        "--json",
        one.to_str().unwrap(),
    ]);
    assert_eq!(code(&out1), 0, "stderr: {}", stderr(&out1));
    assert!(
        stdout(&out1).contains("census m=7 over Q: 8 lattices"),
        "{}",
        stdout(&out1)
    );
    let out4 = run(&[
        "census",
        "7",
        "--workers",
        "4",
        "--json",
        four.to_str().unwrap(),
    ]);
    assert_eq!(code(&out4), 0, "stderr: {}", stderr(&out4));
    let b1 = std::fs::read(&one).unwrap();
    let b4 = std::fs::read(&four).unwrap();
    assert!(!b1.is_empty());
    assert_eq!(b1, b4, "census reports must not depend on scheduling");
    assert_eq!(stdout(&out1), stdout(&out4));
}

#[test]
fn coxeter_prints_polynomial_and_order() {
    let dir = TempDir::new().unwrap();
    let out = run(&["coxeter", &chain2(&dir)]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("coxeter polynomial: x^2+x+1"), "{text}");
    assert!(text.contains("finite order 3"), "{text}");
}

#[test]
fn verify_dynkin_small_rank_passes() {
    let out = run(&["verify-dynkin", "--max-rank", "3", "--fields", "q,2"]);
    assert_eq!(code(&out), 0, "stdout: {}", stdout(&out));
    assert!(stdout(&out).contains("all checks passed"));
}

#[test]
fn export_qpa_emits_lintable_gap() {
    let dir = TempDir::new().unwrap();
    let bounded = write_file(
        &dir,
        "diamond.poset",
        "elem bot\nelem l\nelem r\nelem top\nbot < l\nbot < r\nl < top\nr < top\n",
    );
    for input in [bounded, fixture("fdl3.poset")] {
        assert!(Path::new(&input).exists(), "{input}");
        let out = run(&["export-qpa", &input]);
        assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
        let script = stdout(&out);
        assert!(script.contains("LoadPackage( \"qpa\" )"), "{script}");
        assert!(script.contains("CheckSimplePeriodicity"), "{script}");
        trivext_cli::qpa::lint_gap(&script).expect("emitted GAP should lint");
    }
}

#[test]
fn seed_env_var_is_parsed_and_warned_about() {
    let dir = TempDir::new().unwrap();
    let input = chain2(&dir);
    let out = trivext()
        .args(["resolve", &input, "--te", "--bimodule"])
        .env("TRIVEXT_SEED", "12345")
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
    assert!(stderr(&out).is_empty(), "{}", stderr(&out));

    let out = trivext()
        .args(["resolve", &input, "--te", "--bimodule"])
        .env("TRIVEXT_SEED", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(code(&out), 0, "a bad seed is a warning, not an error");
    assert!(
        stderr(&out).contains("ignoring non-numeric TRIVEXT_SEED"),
        "{}",
        stderr(&out)
    );
}

#[test]
fn help_and_version_exit_zero() {
    let help = run(&["--help"]);
    assert_eq!(code(&help), 0);
    assert!(stdout(&help).contains("trivext"));
    assert_eq!(code(&run(&["--version"])), 0);
}
