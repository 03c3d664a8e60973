use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lie2coh"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .env_remove("LIE2COH_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.txt"))
}

// Compares stdout with tests/golden/<name>.txt; UPDATE_GOLDEN=1 rewrites it.
fn golden(name: &str, args: &[&str], code: i32) {
    let o = run(args);
    assert_eq!(o.status.code(), Some(code), "{name}: {}{}", stdout(&o), String::from_utf8_lossy(&o.stderr));
    let out = stdout(&o);
    let path = golden_path(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &out).unwrap();
    }
    let want = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
    assert_eq!(out, want, "{name} differs from its golden file");
}

#[test]
fn validate_reports() {
    golden("validate_adjoint", &["validate", "tests/fixtures/adjoint_aff1.json"], 0);
    golden("validate_broken_jacobi", &["validate", "tests/fixtures/broken_jacobi.json"], 1);
    golden("validate_bad_two_rep", &["validate", "tests/fixtures/bad_two_rep.json"], 1);
    golden("validate_line", &["validate", "tests/fixtures/line_twisted.json"], 1);
}

#[test]
fn broken_structures_name_the_axiom() {
    let out = stdout(&run(&["validate", "tests/fixtures/broken_jacobi.json"]));
    assert!(out.contains("jacobi(h) at [0, 1, 2]"));
    let out = stdout(&run(&["validate", "tests/fixtures/bad_two_rep.json"]));
    assert!(out.contains("ρ₀⁰(μx) = φρ₁(x) at [0]"));
}

#[test]
fn cohomology_reports() {
    golden("cohomology_trivial_rho_0", &["cohomology", "tests/fixtures/trivial_rho.json", "--degree", "0"], 0);
    golden("cohomology_trivial_rho_1", &["cohomology", "tests/fixtures/trivial_rho.json", "--degree", "1"], 0);
    golden("cohomology_plane_trivial_2", &["cohomology", "tests/fixtures/plane.json", "--degree", "2", "--trivial"], 0);
    golden("cohomology_adjoint_2", &["cohomology", "tests/fixtures/adjoint_aff1.json", "--degree", "2"], 0);
}

#[test]
fn cohomology_needs_a_representation() {
    let o = run(&["cohomology", "tests/fixtures/broken_jacobi.json", "--degree", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("missing two_rep"));
}

#[test]
fn nabla_check_reports() {
    golden("nabla_adjoint", &["nabla-check", "tests/fixtures/adjoint_aff1.json"], 0);
    golden("nabla_random", &["nabla-check", "--max-degree", "2", "--trials", "3", "--seed", "5"], 0);
    golden(
        "nabla_corrupted",
        &["nabla-check", "tests/fixtures/adjoint_aff1.json", "--max-degree", "2", "--corrupt-sign", "partial:1:0"],
        1,
    );
}

#[test]
fn extension_commands() {
    golden("extend_volume", &["extend", "tests/fixtures/plane.json", "--cocycle", "volume"], 0);
    golden("extend_zero", &["extend", "tests/fixtures/plane.json", "--cocycle", "zero"], 0);
    golden("extend_invalid", &["extend", "tests/fixtures/line_twisted.json", "--cocycle", "bad"], 1);
    golden("split_shifted", &["split", "tests/fixtures/trivial_rho.json", "--cocycle", "a", "--shift", "shift"], 0);
    golden("compare_yes", &["compare", "tests/fixtures/trivial_rho.json", "a", "b"], 0);
    golden("compare_no", &["compare", "tests/fixtures/plane.json", "volume", "half_volume"], 0);
}

#[test]
fn round_trip_through_the_canonical_splitting() {
    let out = stdout(&run(&["split", "tests/fixtures/plane.json", "--cocycle", "volume"]));
    assert!(out.contains("split cocycle: [1]\ncohomologous: yes\nlambda0 = [[0, 0]]\n"), "{out}");
}

#[test]
fn input_errors_exit_two() {
    let o = run(&["validate", "tests/fixtures/malformed.json"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 4, column 20"));
    assert_eq!(run(&["validate", "tests/fixtures/missing.json"]).status.code(), Some(2));
    assert_eq!(run(&["extend", "tests/fixtures/plane.json", "--cocycle", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["group-checks", "no-such-scenario"]).status.code(), Some(2));
    let o = run(&["nabla-check", "--corrupt-sign", "bogus"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn group_scenarios() {
    golden("group_vanest", &["group-checks", "vanest-heisenberg"], 0);
    golden("group_gp2", &["group-checks", "gp2cocycle-semidirect", "--dims", "1", "1", "--trials", "2"], 0);
    for args in [
        ["group-checks", "glphi", "--dims", "2", "1"],
        ["group-checks", "exp", "--dims", "1", "1"],
        ["group-checks", "lie-functor", "--dims", "1", "2"],
        ["group-checks", "star-top", "--dims", "1", "1"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
    }
    let out = stdout(&run(&["group-checks", "vanest-heisenberg"]));
    assert!(out.contains("PhiF = [[0, 1], [-1, 0]]"));
}

#[test]
fn output_is_deterministic() {
    let args = ["group-checks", "glphi", "--dims", "1", "2", "--trials", "2", "--seed", "9"];
    assert_eq!(stdout(&run(&args)), stdout(&run(&args)));
    let args = ["nabla-check", "--max-degree", "1", "--trials", "4"];
    assert_eq!(stdout(&run(&args)), stdout(&run(&args)));
}

#[test]
fn seed_comes_from_the_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_lie2coh"))
        .args(["group-checks", "exp", "--trials", "1"])
        .env("LIE2COH_SEED", "42")
        .output()
        .unwrap();
    assert!(stdout(&o).contains("seed 42"));
    let o = Command::new(env!("CARGO_BIN_EXE_lie2coh"))
        .args(["group-checks", "exp", "--trials", "1", "--seed", "7"])
        .env("LIE2COH_SEED", "42")
        .output()
        .unwrap();
    assert!(stdout(&o).contains("seed 7"));
}
