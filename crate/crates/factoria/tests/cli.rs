//! End-to-end tests against the real binary: exit codes, stream
//! separation, the environment cap, and format stability.

use std::process::{Command, Output};

fn factoria(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_factoria"))
        .args(args)
        .env_remove("FACTORIA_CAP")
        .output()
        .expect("binary should run")
}

fn factoria_with_cap(args: &[&str], cap: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_factoria"))
        .args(args)
        .env("FACTORIA_CAP", cap)
        .output()
        .expect("binary should run")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("no signal expected")
}

#[test]
fn no_arguments_is_a_usage_error() {
    let out = factoria(&[]);
    assert_eq!(code(&out), 2);
}

#[test]
fn help_exits_zero() {
    let out = factoria(&["--help"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("check"));
    assert!(stdout(&out).contains("verify"));
}

#[test]
fn unknown_method_is_a_usage_error() {
    let out = factoria(&["verify", "fermat", "5", "100"]);
    assert_eq!(code(&out), 2);
    let out = factoria(&["verify", "oracle", "5", "100"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn oversized_numbers_are_rejected_loudly() {
    let out = factoria(&["check", "99999999999999999999", "--method", "wilson"]);
    assert_eq!(code(&out), 2);
    let out = factoria(&["check", "4611686018427387905", "--method", "wilson"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("2^62"));
}

#[test]
fn check_verdicts_go_to_stdout_errors_to_stderr() {
    let out = factoria(&["check", "11", "--method", "theorem1"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("true"));
    assert!(stderr(&out).is_empty());

    let out = factoria(&["check", "4", "--method", "theorem1"]);
    assert_eq!(code(&out), 2);
    assert!(stdout(&out).is_empty());
    assert!(stderr(&out).contains("requires at least 5"));
}

#[test]
fn jsonl_keys_keep_their_order() {
    let out = factoria(&["check", "11", "--method", "theorem1", "--format", "jsonl"]);
    assert_eq!(
        stdout(&out).trim(),
        "{\"n\":11,\"method\":\"theorem1\",\"raw\":false,\"is_prime\":true,\
         \"witness\":9,\"exception_applied\":false}"
    );
    let out = factoria(&["twins", "5", "--method", "theorem2", "--format", "jsonl"]);
    assert_eq!(
        stdout(&out).trim(),
        "{\"n\":5,\"method\":\"theorem2\",\"raw\":false,\"is_twin_pair\":true,\
         \"residue_mod_n\":0,\"residue_mod_n_plus_2\":1,\"exception_applied\":false}"
    );
}

#[test]
fn csv_column_order_matches_jsonl() {
    let out = factoria(&["check", "11", "--method", "theorem1", "--format", "csv"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "n,method,raw,is_prime,witness,exception_applied"
    );
    assert_eq!(lines.next().unwrap(), "11,theorem1,false,true,9,false");
}

#[test]
fn all_formats_report_the_same_verdict() {
    let runs = [
        factoria(&["twins", "13", "--method", "theorem2"]),
        factoria(&["twins", "13", "--method", "theorem2", "--format", "jsonl"]),
        factoria(&["twins", "13", "--method", "theorem2", "--format", "csv"]),
    ];
    for out in &runs {
        assert_eq!(code(out), 0);
        let text = stdout(out);
        assert!(text.contains("13"), "{text}");
        assert!(text.contains("false"), "{text}");
        assert!(text.contains("theorem2"), "{text}");
    }
}

#[test]
fn raw_twin_exception_carries_the_mismatch_warning() {
    let out = factoria(&["twins", "7", "--method", "theorem2", "--raw", "--format", "jsonl"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["is_twin_pair"], true);
    assert_eq!(v["oracle_mismatch"], true);
    assert_eq!(v["residue_mod_n_plus_2"], 6);

    let out = factoria(&["twins", "7", "--method", "theorem2", "--format", "jsonl"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["is_twin_pair"], false);
    assert_eq!(v["exception_applied"], true);
    assert!(v.get("oracle_mismatch").is_none());
}

#[test]
fn verify_scans_conform_and_exit_zero() {
    let out = factoria(&["verify", "theorem1", "5", "10000", "--raw", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("theorem1,true,5,10000,9996,6;9,6;9,true"));

    let out = factoria(&["verify", "theorem2", "3", "10000", "--raw", "--format", "jsonl"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["mismatches"], serde_json::json!([7]));
    assert_eq!(v["conforms"], true);
}

#[test]
fn environment_cap_is_honored_and_the_flag_wins() {
    let out = factoria_with_cap(&["verify", "theorem1", "5", "1000"], "500");
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("cap 500"));

    let out = factoria_with_cap(&["verify", "theorem1", "5", "1000", "--cap", "2000"], "500");
    assert_eq!(code(&out), 0);

    let out = factoria_with_cap(&["verify", "theorem1", "5", "1000"], "not-a-number");
    assert_eq!(code(&out), 2);
}

#[test]
fn bench_csv_rows_show_the_early_exit() {
    let out = factoria(&["bench", "theorem1", "10006", "10007", "1", "5", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0], "method,n,elapsed_ns,multiplications");
    let muls: Vec<u64> = lines[1..]
        .iter()
        .map(|l| l.rsplit(',').next().unwrap().parse().unwrap())
        .collect();
    assert_eq!(muls, vec![5004, 10003]);
}

#[test]
fn bench_sample_grid_has_one_row_per_input() {
    let out = factoria(&["bench", "theorem1", "1000", "10000", "1000", "5", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).lines().count(), 11); // header + 10 samples
    let out = factoria(&["bench", "wilson", "1000", "1000", "1", "3", "--format", "jsonl"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).lines().count(), 1);
}
