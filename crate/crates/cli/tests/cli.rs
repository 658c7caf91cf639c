use std::io::Write;
use std::process::{Command, Stdio};

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run_with_stdin(args: &[&str], stdin: &str) -> Run {
    let mut child = Command::new(env!("CARGO_BIN_EXE_skewres"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout)
            .unwrap()
            .trim_end()
            .to_string(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn run(args: &[&str]) -> Run {
    run_with_stdin(args, "")
}

const F4: [&str; 6] = [
    "--ring", "gf(4)", "--sigma", "frob^1", "--delta", "inner(w)",
];
const QUAT: [&str; 4] = ["--ring", "quat", "--sigma", "inner(i)"];

fn with(ring: &[&str], rest: &[&str]) -> Vec<String> {
    ring.iter().chain(rest).map(|s| s.to_string()).collect()
}

fn run_in(ring: &[&str], rest: &[&str]) -> Run {
    let args = with(ring, rest);
    run(&args.iter().map(String::as_str).collect::<Vec<_>>())
}

#[test]
fn monomial_product() {
    let r = run_in(&F4, &["mul", "w*x", "w^2*x"]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "w^2*x^2 + w^2*x"));
}

#[test]
fn quaternion_resultant_is_zero() {
    let r = run_in(
        &QUAT,
        &["res", "--side", "right", "x^4 + k*x^3 - j*x - i", "x^3 + j"],
    );
    assert_eq!((r.code, r.stdout.as_str()), (0, "zero"));
}

#[test]
fn nonzero_resultant_exits_one() {
    let r = run_in(&F4, &["--json", "res", "x^2 + w*x", "x^2 + w^2*x + 1"]);
    assert_eq!(r.code, 1);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["ddet"]["rep"], "w^2");
    assert_eq!(v["ddet"]["sign_ambiguous"], false);
    let r = run_in(
        &F4,
        &[
            "--side",
            "left",
            "--json",
            "res",
            "x^2 + w*x",
            "x^2 + w^2*x + 1",
        ],
    );
    assert_eq!(r.code, 0);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["ddet"], "zero");
}

#[test]
fn gcrd_of_f_with_itself_is_monic_f() {
    let r = run_in(&QUAT, &["gcrd", "2*x^2 + j", "2*x^2 + j"]);
    assert_eq!(r.stdout, "x^2 + (1/2)*j");
    let r = run_in(&QUAT, &["gcrd", "x^4 + k*x^3 - j*x - i", "x^3 + j"]);
    assert_eq!(r.stdout, "x^3 + j");
}

#[test]
fn rank_of_the_quaternion_sylvester_matrix() {
    let s = run_in(&QUAT, &["sylv", "x^4 + k*x^3 - j*x - i", "x^3 + j"]);
    assert_eq!(s.code, 0);
    let r = run_in(&QUAT, &["rank", &s.stdout]);
    assert_eq!(r.stdout, "4");
}

#[test]
fn sylvester_output_pipes_through_stdin() {
    let s = run_in(&QUAT, &["sylv", "x^4 + k*x^3 - j*x - i", "x^3 + j"]);
    let args = with(&QUAT, &["ddet", "-"]);
    let r = run_with_stdin(
        &args.iter().map(String::as_str).collect::<Vec<_>>(),
        &s.stdout,
    );
    assert_eq!((r.code, r.stdout.as_str()), (0, "zero"));
}

#[test]
fn stdin_operands_are_read_in_order() {
    let args = with(&F4, &["divr", "-", "-"]);
    let r = run_with_stdin(
        &args.iter().map(String::as_str).collect::<Vec<_>>(),
        "x^3\nw*x\n",
    );
    assert_eq!(r.stdout, "q = w^2*x^2 + x + w\nr = 0");
}

#[test]
fn text_and_json_agree() {
    let text = run_in(&F4, &["divl", "x^3 + 1", "x + w"]);
    let json = run_in(&F4, &["--json", "divl", "x^3 + 1", "x + w"]);
    let v: serde_json::Value = serde_json::from_str(&json.stdout).unwrap();
    let expect = format!(
        "q = {}\nr = {}",
        v["quotient"]["text"].as_str().unwrap(),
        v["remainder"]["text"].as_str().unwrap()
    );
    assert_eq!(text.stdout, expect);
}

#[test]
fn derivative_and_hasse() {
    let r = run_in(
        &QUAT,
        &["--seq", "1+j,1+j", "deriv", "x^4 - j*x^2 + 2*i - k"],
    );
    assert_eq!(r.stdout, "x^2 + 2*x + 4 - 3*j");
    let d = run_in(&QUAT, &["--seq", "1+j", "deriv", "x^4 - j*x^2 + 2*i - k"]);
    let r = run_in(&QUAT, &["evalr", &d.stdout, "1+j"]);
    let h = run_in(
        &QUAT,
        &["--seq", "1+j,1+j", "hasse", "x^4 - j*x^2 + 2*i - k"],
    );
    assert_eq!(h.stdout, r.stdout);
}

#[test]
fn multiplicity_over_f9() {
    let f9 = ["--ring", "gf(9)", "--sigma", "frob^1"];
    let r = run_in(&f9, &["mult", "(x+1)*(x-1)", "1"]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "1"));
    let r = run_in(&f9, &["--seq", "1", "deriv", "(x+1)*(x-1)"]);
    assert_eq!(r.stdout, "x + 1");
    let r = run_in(&f9, &["res", "(x+1)*(x-1)", "x + 1"]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "zero"));
    let r = run_in(&f9, &["--seq", "1,1", "mult", "(x+1)*(x-1)"]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.starts_with("divisible: false"));
}

#[test]
fn criteria_report() {
    let r = run_in(
        &F4,
        &[
            "--side",
            "left",
            "--json",
            "criteria",
            "x^2 + w*x",
            "x^2 + w^2*x + 1",
        ],
    );
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    for key in [
        "resultant_zero",
        "gcd_nonunit",
        "no_bezout_unit",
        "ideal_proper",
    ] {
        assert_eq!(v[key], true, "{key}");
    }
}

#[test]
fn bezout_and_zero_resultant() {
    let r = run_in(&F4, &["bezout", "x^2 + w*x", "x^2 + w^2*x + 1"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.ends_with("R = w^2"));
    let r = run_in(&F4, &["bezout", "x^2 + x", "x + 1"]);
    assert_eq!(r.code, 1);
}

#[test]
fn common_root_in_an_extension() {
    let f4id = ["--ring", "gf(4)"];
    let r = run_in(
        &f4id,
        &["--json", "commonroot", "(x+1)*(x^2+x+w)", "(x+w)*(x^2+x+w)"],
    );
    assert_eq!(r.code, 0);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["degree"], 2);
    assert_eq!(v["modulus"], "y^2 + y + w");
    let r = run_in(&F4, &["commonroot", "x^2 + w*x", "x^2 + w^2*x + 1"]);
    assert_eq!((r.code, r.stdout.as_str()), (1, "no common root"));
}

#[test]
fn unchecked_function_field() {
    let ff = ["--ring", "ff(5,t)", "--sigma", "frob^1", "--delta", "ddt"];
    let r = run_in(&ff, &["mul", "x", "t"]);
    assert_eq!(r.code, 3);
    assert!(r.stderr.contains("witness (t, t)"));
    let r = run_in(&ff, &["--unchecked", "mul", "x", "t"]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "t^5*x + 1"));
}

#[test]
fn left_side_needs_an_automorphism() {
    let ff = ["--ring", "ff(5,t)", "--sigma", "frob^1"];
    let r = run_in(&ff, &["--side", "left", "res", "x^2 + t", "x + 1"]);
    assert_eq!(r.code, 3);
    let r = run_in(&ff, &["gcld", "x^2 + t", "x + 1"]);
    assert_eq!(r.code, 3);
}

#[test]
fn parse_errors_report_byte_positions() {
    let r = run_in(&QUAT, &["mul", "x^2 +* j", "x"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("byte 5"), "{}", r.stderr);
    let r = run_in(&QUAT, &["--json", "mul", "x*j", "x"]);
    assert_eq!(r.code, 2);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["exit"], 2);
}

#[test]
fn usage_errors() {
    assert_eq!(run(&["--ring", "gauss", "frobnicate"]).code, 2);
    assert_eq!(run_in(&QUAT, &["deriv", "x^2"]).code, 2);
    assert_eq!(run_in(&QUAT, &["divr", "x^2", "0"]).code, 2);
    assert_eq!(run(&["--ring", "gf(6)", "mul", "x", "x"]).code, 2);
    assert_eq!(run(&["--ring", "gf(2^17)", "mul", "x", "x"]).code, 3);
}

#[test]
fn complex_products_and_conjugation() {
    let c = ["--ring", "gauss", "--sigma", "conj", "--delta", "inner(-1)"];
    let r = run_in(&c, &["mul", "x^2 + 1", "x^2 + i"]);
    assert_eq!(r.stdout, "x^4 + (1+i)*x^2 - 4*i*x + 5*i");
    let r = run_in(&c, &["conj", "i", "1"]);
    assert_eq!(r.stdout, "i");
}

#[test]
fn dieudonne_determinant_over_quaternions_is_a_coset() {
    let r = run(&["--ring", "quat", "--json", "ddet", "i, j; 1, k"]);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert!(v["ddet"]["rep"].is_string());
}
