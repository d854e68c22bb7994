use std::process::{Command, Output};

use serde_json::Value;

fn altsum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_altsum"))
        .args(args)
        .output()
        .expect("altsum runs")
}

fn code(out: &Output) -> Option<i32> {
    out.status.code()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json_lines(args: &[&str]) -> Vec<String> {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    stdout(&altsum(&full)).lines().map(str::to_owned).collect()
}

#[test]
fn exit_code_contract() {
    assert_eq!(
        code(&altsum(&[
            "table",
            "--family",
            "thm1-corrected",
            "--k-range",
            "1..8"
        ])),
        Some(0)
    );
    let printed = altsum(&["verify", "--family", "thm1-printed", "--k-max", "3"]);
    assert_eq!(code(&printed), Some(1));
    assert!(stdout(&printed).contains("first failure at k=1: lhs 750 vs rhs 650"));
    let eval = altsum(&["eval", "--x", "3/2", "--degree", "4"]);
    assert_eq!(code(&eval), Some(0));
    assert!(stdout(&eval).starts_with("S_4(3/2) = 226\n"));
}

#[test]
fn usage_and_precondition_errors_exit_two() {
    for args in [
        vec!["eval", "--x", "1/3", "--degree", "5"],
        vec!["eval", "--x", "1", "--degree", "0"],
        vec!["verify", "--family", "no-such-family", "--k-max", "3"],
        vec!["verify", "--family", "thm2", "--k-max", "0"],
        vec![
            "search",
            "--degree",
            "2",
            "--base",
            "5",
            "--rhs",
            "two-powers",
            "--n-max",
            "3",
            "--u-max",
            "9",
        ],
        vec![
            "search", "--degree", "5", "--base", "5", "--rhs", "three", "--n-max", "3", "--u-max",
            "9",
        ],
        vec!["discover", "--degrees", "2..5", "--bases", "2..10"],
        vec!["table", "--family", "thm2", "--k-range", "0..3"],
        vec!["frobnicate"],
    ] {
        assert_eq!(code(&altsum(&args)), Some(2), "{args:?}");
    }
}

#[test]
fn table_layout() {
    let out = stdout(&altsum(&["table", "--family", "thm3", "--k-range", "1..2"]));
    assert_eq!(
        out,
        "k=1  x=3/2  S_4(x) = 6^3 + 10\nk=2  x=33/2  S_4(x) = 6^5 + 10\n"
    );
    let printed = altsum(&["table", "--family", "thm1-printed", "--k-range", "1..1"]);
    assert_eq!(code(&printed), Some(1));
    assert!(stdout(&printed).contains("FAILS: lhs 750 vs rhs 650"));
    let relaxed = stdout(&altsum(&[
        "table",
        "--family",
        "thm1-corrected",
        "--k-range",
        "0..0",
        "--relaxed",
    ]));
    assert_eq!(relaxed, "k=0  x=-1  S_5(x) = 5^1 + 5^2\n");
}

#[test]
fn family_specs_on_the_command_line() {
    let text = "d=5 b=5 terms=(3k+1),(k+2) const=0";
    assert_eq!(code(&altsum(&["prove", "--family", text])), Some(0));
    let wrong_base = altsum(&["prove", "--family", "d=5 b=7 terms=(3k+1) const=0"]);
    assert_eq!(code(&wrong_base), Some(1));
    assert!(stdout(&wrong_base).contains("coefficient 5 of u^3 is not a power of 7"));
    let json = r#"{"name":"q","d":4,"b":6,"terms":[{"alpha":2,"beta":1}],"const":"10"}"#;
    assert_eq!(
        code(&altsum(&["verify", "--family", json, "--k-max", "20"])),
        Some(0)
    );
}

#[test]
fn json_records_round_trip_byte_identically() {
    let runs: Vec<Vec<&str>> = vec![
        vec!["eval", "--x", "-7/2", "--degree", "6"],
        vec!["verify", "--family", "thm1-printed", "--k-max", "2"],
        vec!["prove", "--family", "thm3"],
        vec!["table", "--family", "thm1-corrected", "--k-range", "1..25"],
        vec![
            "search",
            "--degree",
            "5",
            "--base",
            "5",
            "--rhs",
            "two-powers",
            "--n-max",
            "16",
            "--u-max",
            "1000000",
        ],
        vec![
            "discover",
            "--degrees",
            "3..5",
            "--bases",
            "2..10",
            "--allow-const",
        ],
    ];
    for args in runs {
        let lines = json_lines(&args);
        assert!(!lines.is_empty(), "{args:?}");
        for line in lines {
            let value: Value = serde_json::from_str(&line).unwrap();
            assert_eq!(serde_json::to_string(&value).unwrap(), line);
            assert_eq!(value["schema_version"], 1);
            assert_eq!(value["command"], args[0]);
        }
    }
}

#[test]
fn large_values_cross_as_decimal_strings() {
    let lines = json_lines(&["table", "--family", "thm1-corrected", "--k-range", "25..25"]);
    let value: Value = serde_json::from_str(&lines[0]).unwrap();
    let rhs = value["result"]["rhs"].as_str().unwrap();
    let expected = num_rhs(27, 76);
    assert_eq!(rhs, expected);
    assert_eq!(value["result"]["lhs"].as_str().unwrap(), expected);
    assert_eq!(
        value["result"]["x"].as_str().unwrap(),
        format!("{}", (5u128.pow(25) - 3) / 2)
    );
}

/// 5^m + 5^n in decimal, by schoolbook arithmetic on digit vectors.
fn num_rhs(m: u32, n: u32) -> String {
    fn pow5(e: u32) -> Vec<u32> {
        let mut digits = vec![1];
        for _ in 0..e {
            let mut carry = 0;
            for d in digits.iter_mut() {
                let v = *d * 5 + carry;
                *d = v % 10;
                carry = v / 10;
            }
            while carry > 0 {
                digits.push(carry % 10);
                carry /= 10;
            }
        }
        digits
    }
    let (a, b) = (pow5(m), pow5(n));
    let mut sum = Vec::new();
    let mut carry = 0;
    for i in 0..a.len().max(b.len()) {
        let v = a.get(i).unwrap_or(&0) + b.get(i).unwrap_or(&0) + carry;
        sum.push(v % 10);
        carry = v / 10;
    }
    if carry > 0 {
        sum.push(carry);
    }
    sum.iter()
        .rev()
        .map(|d| char::from_digit(*d, 10).unwrap())
        .collect()
}

#[test]
fn brute_force_flag_gives_identical_solutions() {
    let cases: Vec<Vec<&str>> = vec![
        vec![
            "--degree",
            "5",
            "--base",
            "5",
            "--rhs",
            "two-powers",
            "--n-max",
            "16",
            "--u-max",
            "1000000",
        ],
        vec![
            "--degree",
            "4",
            "--base",
            "6",
            "--rhs",
            "power-plus-const:10",
            "--n-max",
            "7",
            "--u-max",
            "1000",
            "--parity",
            "any",
        ],
        vec![
            "--degree",
            "3",
            "--base",
            "6",
            "--rhs",
            "two-powers",
            "--n-max",
            "2",
            "--u-max",
            "100",
            "--parity",
            "any",
        ],
        vec![
            "--degree",
            "3",
            "--base",
            "6",
            "--rhs",
            "one-power",
            "--n-max",
            "12",
            "--u-max",
            "10000",
            "--parity",
            "any",
        ],
    ];
    for case in cases {
        let solutions = |extra: &[&str]| {
            let mut args = vec!["search"];
            args.extend_from_slice(&case);
            args.extend_from_slice(extra);
            let lines = json_lines(&args);
            let value: Value = serde_json::from_str(&lines[0]).unwrap();
            value["result"]["solutions"].clone()
        };
        let default = solutions(&[]);
        assert!(!default.as_array().unwrap().is_empty());
        assert_eq!(solutions(&["--brute-force"]), default, "{case:?}");
        assert_eq!(solutions(&["--no-prune"]), default, "{case:?}");
    }
}

#[test]
fn output_does_not_depend_on_thread_count() {
    let args = [
        "search",
        "--degree",
        "5",
        "--base",
        "5",
        "--rhs",
        "two-powers",
        "--n-max",
        "30",
        "--u-max",
        "200000",
        "--brute-force",
    ];
    let run = |threads: &str| {
        let mut full = vec!["--json", "--threads", threads];
        full.extend_from_slice(&args);
        stdout(&altsum(&full))
    };
    let one = run("1");
    assert_eq!(run("4"), one);
    assert_eq!(run("7"), one);
}

#[test]
fn quiet_mode_prints_nothing() {
    let out = altsum(&[
        "--quiet",
        "verify",
        "--family",
        "thm1-printed",
        "--k-max",
        "2",
    ]);
    assert_eq!(code(&out), Some(1));
    assert!(out.stdout.is_empty());
}
