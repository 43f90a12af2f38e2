use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn zdk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zdk"))
        .args(args)
        .env_remove("ZDK_SEED")
        .output()
        .expect("zdk runs")
}

fn fixture(name: &str) -> String {
    fixtures().join(name).to_string_lossy().into_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, text: &str) -> String {
    let dir = std::env::temp_dir().join(format!("zdk-cli-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn minpoly_of_sum_on_square_monomials() {
    let f = fixture("q_square_monomials.zdk");
    for alg in ["def", "mat", "elim", "modular", "heuristic"] {
        let o = zdk(&["minpoly", &f, "--poly", "x+y", "--alg", alg]);
        assert!(o.status.success(), "{alg}: {}", String::from_utf8_lossy(&o.stderr));
        assert_eq!(stdout(&o), "z^3\n", "{alg}");
    }
    let o = zdk(&["minpoly", &f, "--elem", "f"]);
    assert_eq!(stdout(&o), "z^3\n");
}

#[test]
fn gb_prints_reduced_basis() {
    let o = zdk(&["gb", &fixture("q_two_var.zdk")]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "y^2 + 1/3x - 1/9y + 1/9\nx*y - 1/3y + 1/3\nx^2 - y\n");
}

#[test]
fn four_points_over_f2() {
    let f = fixture("f2_four_points.zdk");
    let o = zdk(&["primdec", &f]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("4 components\n"));
    let blocks: Vec<&str> = text.split("\ncomponent ").skip(1).collect();
    assert_eq!(blocks.len(), 4);
    assert!(blocks[0].starts_with("1/4\n"));
    let bodies: Vec<String> = blocks.iter().map(|b| b.split_once('\n').unwrap().1.to_string()).collect();
    let mut sorted = bodies.clone();
    sorted.sort();
    assert_eq!(bodies, sorted);
    assert_eq!(stdout(&zdk(&["frob-dim", &f])), "4\n");
    assert_eq!(stdout(&zdk(&["is-radical", &f])), "true\n");
    assert_eq!(stdout(&zdk(&["is-primary", &f])), "false\n");
}

#[test]
fn maximality_depends_on_the_field() {
    assert_eq!(stdout(&zdk(&["is-maximal", &fixture("q_biquadratic.zdk")])), "true\n");
    assert_eq!(stdout(&zdk(&["is-maximal", &fixture("f5_biquadratic.zdk")])), "false\n");
}

#[test]
fn radical_drops_nilpotents() {
    let o = zdk(&["radical", &fixture("q_square_monomials.zdk")]);
    assert_eq!(stdout(&o), "y\nx\n");
}

#[test]
fn json_report() {
    let o = zdk(&["--json", "minpoly", &fixture("q_square_monomials.zdk")]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["command"], "minpoly");
    assert_eq!(v["field"], "Q");
    assert_eq!(v["result"]["minpoly"], "z^3");
    assert_eq!(v["result"]["degree"], 3);
    assert_eq!(v["result"]["verified"], true);

    let o = zdk(&["--json", "primdec", &fixture("f2_four_points.zdk")]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["result"]["count"], 4);
    assert_eq!(v["result"]["components"].as_array().unwrap().len(), 4);
}

#[test]
fn seeded_runs_are_byte_identical() {
    let f = scratch(
        "two_comp.zdk",
        "ring Q[x, y] order degrevlex\nideal = [x^2 - 2, y^2 - 2]\n",
    );
    let a = zdk(&["--seed", "17", "primdec", &f]);
    let b = zdk(&["--seed", "17", "primdec", &f]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).starts_with("2 components\n"));
    let c = Command::new(env!("CARGO_BIN_EXE_zdk"))
        .args(["primdec", &f])
        .env("ZDK_SEED", "17")
        .output()
        .unwrap();
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn exit_codes() {
    let line = scratch("line.zdk", "ring Q[x, y] order degrevlex\nideal = [x^2]\n");
    assert_eq!(zdk(&["is-radical", &line]).status.code(), Some(2));
    assert_eq!(zdk(&["frob-dim", &fixture("q_biquadratic.zdk")]).status.code(), Some(2));

    let roots = scratch("roots.zdk", "ring Q[x, y] order degrevlex\nideal = [x^2 - 2, y^2 - 3]\n");
    let o = zdk(&["--max-attempts", "0", "is-maximal", &roots]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(zdk(&["is-maximal", &roots]).status.code(), Some(0));

    let bad = scratch("bad.zdk", "ring Q[x, y] order degrevlex\nideal = [x^2 +, y]\n");
    let o = zdk(&["gb", &bad]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains(":2:"));

    let f4 = scratch("f4.zdk", "ring F4[x] order lex\nideal = [x]\n");
    assert_eq!(zdk(&["gb", &f4]).status.code(), Some(1));
    assert_eq!(zdk(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(
        zdk(&["minpoly", &fixture("f5_biquadratic.zdk"), "--poly", "x", "--alg", "modular"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn bench_runs_selected_cases() {
    let manifest = fixture("bench.toml");
    let o = zdk(&[
        "bench",
        "--manifest",
        &manifest,
        "--case",
        "q-square-monomials",
        "--case",
        "f2-four-points",
        "--case",
        "q-biquadratic",
        "--case",
        "f5-biquadratic",
    ]);
    let text = stdout(&o);
    assert!(o.status.success(), "{text}");
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS ")).count(), 4, "{text}");
    assert!(text.ends_with("4 cases, 0 failed\n"));
}

#[test]
fn bench_reports_mismatches() {
    let dir = std::env::temp_dir().join(format!("zdk-cli-bench-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::copy(fixtures().join("f2_four_points.zdk"), dir.join("pts.zdk")).unwrap();
    std::fs::write(
        dir.join("bench.toml"),
        "[[case]]\nid = \"wrong\"\nfile = \"pts.zdk\"\nexpect = { components = 3 }\n",
    )
    .unwrap();
    let o = zdk(&["bench", "--manifest", &dir.join("bench.toml").to_string_lossy()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("components=4 (want 3)"));
}
