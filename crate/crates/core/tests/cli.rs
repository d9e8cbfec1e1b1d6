use std::io::{BufRead, BufReader, Write};
use std::net::TcpListener;
use std::process::{Command, Output};
use std::thread;

use serde_json::Value;

use qew::derk::derk;
use qew::parse::parse_poly_expr;
use qew::quad::QuadElem;

fn qew(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qew"))
        .args(args)
        .env_remove("QEW_OFFLINE")
        .env_remove("QEW_OEIS_BASE_URL")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    assert!(o.status.success(), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    assert!(!o.status.success());
    String::from_utf8(o.stderr.clone()).unwrap()
}

const MOTZKIN: &str = "[[1,1],[1,0],[1,-1]]";

#[test]
fn dp_counts_and_json() {
    let out = stdout(&qew(&["dp", "--steps", MOTZKIN, "--max-n", "8", "--at-q1"]));
    assert_eq!(out.trim(), "[1, 1, 2, 4, 9, 21, 51, 127, 323]");
    let out = stdout(&qew(&["dp", "--steps", "[[1,1],[1,-1]]", "--max-n", "4", "--json"]));
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v[4]["n"], 4);
    // area 2 and area 4, exponents in halves
    assert_eq!(v[4]["terms"], serde_json::json!([[4, "1"], [8, "1"]]));
    assert_eq!(v[3]["terms"], serde_json::json!([]));
}

#[test]
fn derive_json_round_trips() {
    let out = stdout(&qew(&["derive", "--p", "1", "--q", "x", "--r", "x^2*q", "--order", "2", "--json"]));
    let v: Value = serde_json::from_str(&out).unwrap();
    let entries = v.as_array().unwrap();
    assert_eq!(entries.len(), 3);
    let want = derk(
        &parse_poly_expr("1").unwrap(),
        &parse_poly_expr("x").unwrap(),
        &parse_poly_expr("x^2*q").unwrap(),
        2,
    )
    .unwrap();
    for (k, e) in entries.iter().enumerate() {
        assert_eq!(e["k"], k);
        assert_eq!(QuadElem::from_json(e).unwrap(), want.f[k]);
    }
}

#[test]
fn derive_text_and_series() {
    let out = stdout(&qew(&["derive", "--p", "1", "--q", "0", "--r", "x^2*q", "--order", "0"]));
    assert!(out.contains("Delta = -4*x^2 + 1"), "{out}");
    assert!(out.contains("F[0] = (1 - sqrt(-4*x^2 + 1))/(2*x^2)"), "{out}");
    let out = stdout(&qew(&["derive", "--p", "1", "--q", "0", "--r", "x^2*q", "--order", "1", "--series", "6"]));
    assert!(out.contains("F[1] = x^2 + 6*x^4 + 29*x^6 + O(x^7)"), "{out}");
}

#[test]
fn series_command() {
    let out = stdout(&qew(&["series", "--p", "1", "--q", "x", "--r", "x^2*q", "--terms", "12", "--k", "1"]));
    assert_eq!(out.trim(), "[0, 0, 1, 4, 16, 56, 190, 624, 2014, 6412, 20219, 63284, 196938]");
    let out = stdout(&qew(&["series", "--p", "1", "--q", "0", "--r", "x^2", "--terms", "4", "--json"]));
    assert_eq!(out.trim(), r#"["1","0","1","0","2"]"#);
}

#[test]
fn moments_closed_form_and_dp_paths() {
    let out = stdout(&qew(&["moments", "--steps", "[[1,1],[1,-1]]", "--power", "3", "--order", "8"]));
    assert_eq!(out.trim(), "[0, 0, 1, 0, 72, 0, 1349, 0, 15544]");
    let out = stdout(&qew(&["moments", "--p", "1", "--q", "x", "--r", "x^2*q", "--power", "2", "--order", "6"]));
    assert_eq!(out.trim(), "[0, 0, 1, 6, 40, 198, 910]");
    // no functional equation for a double up-step: the DP answers
    let out = stdout(&qew(&["moments", "--steps", "[[1,2],[1,-1]]", "--power", "1", "--order", "6"]));
    let brute = qew::dp::brute_force_area_multiset(&qew::steps::StepSet::new([2, -1]).unwrap(), 6).unwrap();
    let total: num_rational::BigRational = brute
        .iter()
        .map(|(a, &c)| a * num_rational::BigRational::from_integer(c.into()))
        .sum();
    assert!(out.trim().ends_with(&format!(", {total}]")), "{out}");
}

#[test]
fn stats_text_and_json() {
    let out = stdout(&qew(&["stats", "--steps", MOTZKIN, "--max-n", "4"]));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "n a0 a1 a2 mean variance");
    assert_eq!(lines[5], "4 9 16 40 16/9 104/81");
    let out = stdout(&qew(&["stats", "--steps", "[[1,1],[1,-1]]", "--max-n", "3", "--json"]));
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v[3]["mean"], Value::Null);
    let keys: Vec<&String> = v[0].as_object().unwrap().keys().collect();
    assert_eq!(keys, ["n", "a0", "a1", "a2", "mean", "variance"]);
    let out = stdout(&qew(&["stats", "--steps", MOTZKIN, "--max-n", "60", "--growth"]));
    assert!(out.lines().last().unwrap().starts_with("growth estimate"), "{out}");
}

#[test]
fn input_errors_are_reported() {
    let err = stderr(&qew(&["derive", "--p", "1", "--q", "2 x", "--r", "x^2", "--order", "1"]));
    assert!(err.contains("implicit multiplication"), "{err}");
    let err = stderr(&qew(&["dp", "--steps", "[[2,1]]", "--max-n", "3"]));
    assert!(err.contains("unit-width"), "{err}");
    let err = stderr(&qew(&["derive", "--p", "1", "--q", "1", "--r", "x^2", "--order", "1"]));
    assert!(err.contains("Q(x,1)"), "{err}");
    let err = stderr(&qew(&["moments", "--steps", MOTZKIN, "--power", "0", "--order", "3"]));
    assert!(err.contains("power must be at least 1"), "{err}");
}

#[test]
fn oeis_needs_opt_in() {
    let err = stderr(&qew(&["oeis", "--terms", "1,1,2,4,9,21,51"]));
    assert!(err.contains("--online"), "{err}");
    let out = Command::new(env!("CARGO_BIN_EXE_qew"))
        .args(["oeis", "--terms", "1,1,2,4,9,21,51", "--online"])
        .env("QEW_OFFLINE", "1")
        .output()
        .unwrap();
    assert!(String::from_utf8_lossy(&out.stderr).contains("QEW_OFFLINE"));
}

/// Serves `responses` in order, one per connection, and returns the request
/// lines it saw.
fn mock_server(responses: Vec<(u16, &'static str)>) -> (String, thread::JoinHandle<Vec<String>>) {
    let listener = TcpListener::bind("127.0.0.1:0").unwrap();
    let base = format!("http://{}", listener.local_addr().unwrap());
    let handle = thread::spawn(move || {
        let mut seen = Vec::new();
        for (status, body) in responses {
            let (mut stream, _) = listener.accept().unwrap();
            let mut reader = BufReader::new(stream.try_clone().unwrap());
            let mut line = String::new();
            reader.read_line(&mut line).unwrap();
            seen.push(line.trim().to_string());
            loop {
                let mut h = String::new();
                reader.read_line(&mut h).unwrap();
                if h.trim().is_empty() {
                    break;
                }
            }
            let reason = if status == 200 { "OK" } else { "Service Unavailable" };
            write!(
                stream,
                "HTTP/1.1 {status} {reason}\r\nContent-Type: application/json\r\nContent-Length: {}\r\nConnection: close\r\n\r\n{body}",
                body.len()
            )
            .unwrap();
        }
        seen
    });
    (base, handle)
}

#[test]
fn oeis_against_local_server_with_one_retry() {
    let body = r#"[{"number": 1006, "name": "Motzkin numbers"}, {"number": 5043, "name": "Riordan numbers"}]"#;
    let (base, handle) = mock_server(vec![(503, "busy"), (200, body)]);
    let out = Command::new(env!("CARGO_BIN_EXE_qew"))
        .args(["oeis", "--terms", "1,1,2,4,9,21,51", "--online"])
        .env_remove("QEW_OFFLINE")
        .env("QEW_OEIS_BASE_URL", &base)
        .output()
        .unwrap();
    let text = stdout(&out);
    assert_eq!(text.lines().next(), Some("A001006 Motzkin numbers"));
    let seen = handle.join().unwrap();
    assert_eq!(seen.len(), 2);
    assert!(seen[1].starts_with("GET /search?q=1%2C1%2C2%2C4%2C9%2C21%2C51&fmt=json"), "{seen:?}");
}

#[test]
fn oeis_gives_up_after_one_retry() {
    let (base, handle) = mock_server(vec![(503, "busy"), (503, "still busy")]);
    let out = Command::new(env!("CARGO_BIN_EXE_qew"))
        .args(["oeis", "--terms", "1,6,29,130,562,2380", "--online"])
        .env_remove("QEW_OFFLINE")
        .env("QEW_OEIS_BASE_URL", &base)
        .output()
        .unwrap();
    let err = stderr(&out);
    assert!(err.contains("status 503"), "{err}");
    assert_eq!(handle.join().unwrap().len(), 2);
}
