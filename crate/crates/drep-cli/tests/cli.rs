//! End-to-end tests of the `drep` binary: exit codes, report contents, and
//! byte-for-byte determinism of repeated runs.

use std::path::PathBuf;
use std::process::{Command, Output};

fn drep() -> Command {
    Command::new(env!("CARGO_BIN_EXE_drep"))
}

fn bundled(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("algebras").join(name)
}

fn write_tmp(name: &str, contents: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn validate_accepts_all_bundled_examples() {
    for name in ["kxy.alg", "kxyz.alg", "usl2.alg"] {
        let out = drep().arg("validate").arg(bundled(name)).output().unwrap();
        assert!(out.status.success(), "{name}: {}", stderr_of(&out));
        assert!(stdout_of(&out).starts_with("ok:"), "{name}: {}", stdout_of(&out));
    }
}

#[test]
fn validate_rejects_broken_differential() {
    // d t has degree-0 word x, but |t| + 1 = 0 requires... x is fine; break
    // d^2 = 0 instead: d v = t with d t nonzero.
    let file = write_tmp(
        "broken.alg",
        "generator x : 0;\ngenerator y : 0;\ngenerator t : -1;\ngenerator v : -2;\nd t = x*y - y*x;\nd v = x*t;\n",
    );
    let out = drep().arg("validate").arg(&file).output().unwrap();
    assert!(!out.status.success());
    assert!(stdout_of(&out).contains("violation:"), "{}", stdout_of(&out));
}

#[test]
fn parse_errors_carry_positions_and_fail() {
    let file = write_tmp("badtoken.alg", "generator x : 0;\ngenerator t : -1;\nd t = x*u;\n");
    let out = drep().arg("validate").arg(&file).output().unwrap();
    assert!(!out.status.success());
    let err = stderr_of(&out);
    assert!(err.contains("line 3, col 9"), "{err}");
    assert!(err.contains("undeclared generator `u`"), "{err}");
}

#[test]
fn expand_prints_the_twelve_variable_presentation() {
    let out = drep().arg("expand").arg(bundled("kxy.alg")).args(["--n", "2"]).output().unwrap();
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("variables (12):"), "{text}");
    for v in ["x_1_1", "x_2_2", "y_1_2", "t_2_1"] {
        assert!(text.contains(v), "missing {v} in {text}");
    }
    assert!(text.contains("d t_1_1 = x_1_2*y_2_1 - x_2_1*y_1_2"), "{text}");
    for jk in ["t_1_1", "t_1_2", "t_2_1", "t_2_2"] {
        assert!(text.contains(&format!("d {jk} = ")), "missing d {jk}");
    }
}

#[test]
fn expand_json_is_valid_and_mirrors_the_text() {
    let out = drep()
        .arg("expand")
        .arg(bundled("kxy.alg"))
        .args(["--n", "2", "--format", "json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(doc["n"], 2);
    assert_eq!(doc["variables"].as_array().unwrap().len(), 12);
    assert_eq!(doc["differentials"]["t_1_1"]["x_1_2*y_2_1"], "1");
    assert_eq!(doc["differentials"]["t_1_1"]["x_2_1*y_1_2"], "-1");
    // rationals ride as strings
    assert!(doc["differentials"]["t_1_2"].as_object().unwrap().values().all(|v| v.is_string()));
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        vec!["expand", "--n", "2"],
        vec!["h", "--n", "2", "--degree", "1"],
        vec!["hilbert", "--n", "2", "--degree", "0", "--up-to", "4"],
    ] {
        let mut cmd1 = drep();
        cmd1.arg(args[0]).arg(bundled("kxy.alg")).args(&args[1..]);
        let first = cmd1.output().unwrap();
        let mut cmd2 = drep();
        cmd2.arg(args[0]).arg(bundled("kxy.alg")).args(&args[1..]);
        let second = cmd2.output().unwrap();
        assert_eq!(first.stdout, second.stdout, "args {args:?}");
    }
}

#[test]
fn h_reports_the_kxy_presentation_at_n_2() {
    let out = drep()
        .arg("h")
        .arg(bundled("kxy.alg"))
        .args(["--n", "2", "--degree", "1"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("H^-1 at n = 2"), "{text}");
    assert!(text.contains("cochain basis (4): t_1_1, t_1_2, t_2_1, t_2_2"), "{text}");
    assert!(text.contains("minimal generators (3):"), "{text}");
    assert!(text.contains("[t_1_1 + t_2_2]  (internal degree 2)"), "{text}");
    // the two linear relations tying the degree-3 generators together
    assert!(text.contains("y_1_2*g1 - x_1_2*g2 = 0"), "{text}");
    assert!(text.contains("y_2_1*g1 - x_2_1*g2 = 0"), "{text}");
    assert!(text.contains("hilbert function (internal degrees 0..6): 0 0 1 10 46"), "{text}");
}

#[test]
fn h_respects_the_internal_degree_cap() {
    let mut cmd = drep();
    cmd.env("DREP_MAX_DEGREE", "3");
    let out = cmd
        .arg("h")
        .arg(bundled("kxy.alg"))
        .args(["--n", "1", "--degree", "1"])
        .output()
        .unwrap();
    let text = stdout_of(&out);
    assert!(text.contains("hilbert function (internal degrees 0..3): 0 0 1 2\n"), "{text}");

    // the flag overrides the environment
    let mut cmd = drep();
    cmd.env("DREP_MAX_DEGREE", "3");
    let out = cmd
        .arg("h")
        .arg(bundled("kxy.alg"))
        .args(["--n", "1", "--degree", "1", "--max-internal-degree", "5"])
        .output()
        .unwrap();
    assert!(stdout_of(&out).contains("0..5): 0 0 1 2 3 4\n"), "{}", stdout_of(&out));
}

#[test]
fn h_degree_zero_prints_the_cyclic_presentation() {
    let out = drep()
        .arg("h")
        .arg(bundled("kxy.alg"))
        .args(["--n", "2", "--degree", "0"])
        .output()
        .unwrap();
    let text = stdout_of(&out);
    assert!(text.contains("H^0 at n = 2"), "{text}");
    assert!(text.contains("cyclic module on the class of 1"), "{text}");
    assert!(text.contains("-x_2_1*y_1_2 + x_1_2*y_2_1"), "{text}");
    assert!(text.contains("hilbert function (internal degrees 0..6): 1 8 33 98"), "{text}");
}

#[test]
fn h_without_grading_prints_the_raw_presentation() {
    let out = drep()
        .arg("h")
        .arg(bundled("usl2.alg"))
        .args(["--n", "1", "--degree", "1"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("generators (not minimized)"), "{text}");
    assert!(!text.contains("hilbert function"), "{text}");
}

#[test]
fn hilbert_lists_the_graded_dimensions() {
    let out = drep()
        .arg("hilbert")
        .arg(bundled("kxy.alg"))
        .args(["--n", "2", "--degree", "1", "--up-to", "4"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout_of(&out);
    for line in ["0: 0", "1: 0", "2: 1", "3: 10", "4: 46"] {
        assert!(text.contains(&format!("{line}\n")), "missing `{line}` in {text}");
    }
}

#[test]
fn hilbert_clamps_to_the_global_cap_with_a_note() {
    let mut cmd = drep();
    cmd.env("DREP_MAX_DEGREE", "2");
    let out = cmd
        .arg("hilbert")
        .arg(bundled("kxy.alg"))
        .args(["--n", "1", "--degree", "0", "--up-to", "9"])
        .output()
        .unwrap();
    let text = stdout_of(&out);
    assert!(text.contains("clamped to DREP_MAX_DEGREE = 2"), "{text}");
    assert!(text.contains("2: 3\n"), "{text}");
    assert!(!text.contains("3:"), "{text}");
}

#[test]
fn hilbert_fails_without_an_internal_grading() {
    let out = drep()
        .arg("hilbert")
        .arg(bundled("usl2.alg"))
        .args(["--n", "1", "--degree", "1", "--up-to", "3"])
        .output()
        .unwrap();
    assert!(!out.status.success());
    assert!(stderr_of(&out).contains("no internal grading"), "{}", stderr_of(&out));
}

#[test]
fn vanish_answers_without_failing() {
    let out = drep()
        .arg("vanish")
        .arg(bundled("kxy.alg"))
        .args(["--n", "1", "--degree", "2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("H^-2 = 0 at n = 1: true"));

    let out = drep()
        .arg("vanish")
        .arg(bundled("kxy.alg"))
        .args(["--n", "2", "--degree", "1"])
        .output()
        .unwrap();
    assert!(out.status.success(), "a negative answer is still exit 0");
    assert!(stdout_of(&out).contains("H^-1 = 0 at n = 2: false"));
}

#[test]
fn tangent_matches_the_koszul_oracle_at_a_point() {
    let rep = write_tmp("point.rep", "n = 1\nx = [[0]]\ny = [[0]]\n");
    let out = drep()
        .arg("tangent")
        .arg(bundled("kxy.alg"))
        .args(["--n", "1", "--rep"])
        .arg(&rep)
        .args(["--koszul", "2"])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", stderr_of(&out));
    let text = stdout_of(&out);
    assert!(text.contains("T^0 = 2\n"), "{text}");
    assert!(text.contains("T^1 = 1\n"), "{text}");
    assert!(text.contains("oracle agreement: yes"), "{text}");
}

#[test]
fn tangent_rejects_an_inapplicable_oracle_flag() {
    let rep = write_tmp("point2.rep", "n = 1\nx = [[0]]\ny = [[0]]\n");
    let out = drep()
        .arg("tangent")
        .arg(bundled("kxy.alg"))
        .args(["--n", "1", "--rep"])
        .arg(&rep)
        .args(["--koszul", "3"])
        .output()
        .unwrap();
    assert!(!out.status.success());
    assert!(stderr_of(&out).contains("does not apply"), "{}", stderr_of(&out));
}

#[test]
fn tangent_rejects_a_non_representation() {
    let rep = write_tmp("notrep.rep", "n = 2\nx = [[0, 1], [0, 0]]\ny = [[0, 0], [1, 0]]\n");
    let out = drep()
        .arg("tangent")
        .arg(bundled("kxy.alg"))
        .args(["--n", "2", "--rep"])
        .arg(&rep)
        .output()
        .unwrap();
    assert!(!out.status.success());
    assert!(stdout_of(&out).contains("not a representation"), "{}", stdout_of(&out));
}

#[test]
fn tangent_rejects_a_size_mismatch() {
    let rep = write_tmp("size.rep", "n = 2\nx = [[0, 0], [0, 0]]\n");
    let out = drep()
        .arg("tangent")
        .arg(bundled("kxy.alg"))
        .args(["--n", "1", "--rep"])
        .arg(&rep)
        .output()
        .unwrap();
    assert!(!out.status.success());
    assert!(stderr_of(&out).contains("does not match --n 1"), "{}", stderr_of(&out));
}

#[test]
fn examples_list_and_show() {
    let out = drep().args(["examples", "list"]).output().unwrap();
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "kxy\nkxyz\nusl2\n");

    let out = drep().args(["examples", "show", "kxy"]).output().unwrap();
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("d t = x*y - y*x;"));

    let out = drep().args(["examples", "show", "nope"]).output().unwrap();
    assert!(!out.status.success());
}
