mod common;

use common::{incomm, incomm_env};

fn code(args: &[&str]) -> i32 {
    incomm(args).code
}

#[test]
fn usage_errors_exit_1() {
    let cases: &[&[&str]] = &[
        &[],
        &["frobnicate"],
        &["anth", "7/5"],
        &["anth", "sqrt(", "1"],
        &["anth", "1/0", "1"],
        &["cf", "sqrt(2)+x"],
        &["pell", "--n", "ten"],
        &["areas", "excess", "sqrt(2)", "1"],
        &["book2", "verify", "II.99"],
        &["book2", "verify"],
        &["book2", "expand", "a +* b"],
        &["descent", "integer", "5", "seven"],
        &["angle", "omega", "-1"],
        &["angle", "postulate4", "--pairs", "tests/data/missing.txt"],
        &["music", "--steps", "many"],
        &["verify-all", "--bogus"],
    ];
    for args in cases {
        let run = incomm(args);
        assert_eq!(run.code, 1, "{args:?}: {}", run.stderr);
        assert!(run.stdout.is_empty(), "{args:?} printed {}", run.stdout);
        assert!(!run.stderr.is_empty(), "{args:?} gave no message");
    }
}

#[test]
fn domain_errors_exit_2() {
    let cases: &[&[&str]] = &[
        &["anth", "-1", "1"],
        &["anth", "0", "1"],
        &["anth", "sqrt(2)", "sqrt(3)"],
        &["cf", "-sqrt(2)"],
        &["pell", "--n", "0"],
        &["elegant", "0", "1"],
        &["elegant", "3", "1", "--subtractive"],
        &["descent", "integer", "5", "11"],
        &["areas", "excess", "2", "-1"],
        &["areas", "defect", "2", "5"],
        &["areas", "mean-proportional", "0", "1"],
        &["angle", "classify", "1", "2"],
        &["angle", "define", "1", "sqrt(2)"],
        &["angle", "omega", "0"],
        &["angle", "postulate4", "--pairs", "tests/data/bad_pairs.txt"],
        &["elegant", "sqrt(2)", "sqrt(3)"],
    ];
    for args in cases {
        let run = incomm(args);
        assert_eq!(run.code, 2, "{args:?}: {}{}", run.stdout, run.stderr);
        assert!(run.stderr.starts_with("error: "), "{args:?}: {}", run.stderr);
    }
}

#[test]
fn step_cap_exits_3_with_partial_data() {
    let run = incomm(&["cf", "sqrt(19)", "--max-steps", "3"]);
    assert_eq!(run.code, 3, "{}", run.stderr);
    assert_eq!(run.stdout, "prefix [4, 2, 1] period none\n");

    let run = incomm(&["anth", "sqrt(19)", "1", "--max-steps", "3", "--json"]);
    assert_eq!(run.code, 3);
    let doc: serde_json::Value = serde_json::from_str(&run.stdout).unwrap();
    assert_eq!(doc["error"]["kind"], "step_cap");
    assert_eq!(doc["partial"]["status"], "Truncated");
    assert_eq!(doc["partial"]["prefix"], serde_json::json!([4, 2, 1]));
}

#[test]
fn max_steps_default_comes_from_the_environment() {
    assert_eq!(incomm_env(&["cf", "sqrt(19)"], Some("3")).code, 3);
    assert_eq!(incomm_env(&["cf", "sqrt(19)"], Some("300")).code, 0);
    assert_eq!(incomm_env(&["cf", "sqrt(19)", "--max-steps", "300"], Some("3")).code, 0);
    assert_eq!(incomm_env(&["cf", "sqrt(19)"], Some("lots")).code, 1);
}

#[test]
fn help_and_version_exit_0() {
    for args in [&["--help"][..], &["--version"], &["anth", "--help"], &["book2", "verify", "--help"]] {
        let run = incomm(args);
        assert_eq!(run.code, 0, "{args:?}");
        assert!(!run.stdout.is_empty());
    }
    assert!(incomm(&["--help"]).stdout.contains("ANTH_MAX_STEPS"));
}

#[test]
fn successes_exit_0() {
    assert_eq!(code(&["anth", "7/5", "1"]), 0);
    assert_eq!(code(&["cert", "(1+sqrt(5))/2", "1"]), 0);
    assert_eq!(code(&["verify-all"]), 0);
}
