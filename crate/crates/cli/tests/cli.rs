//! End-to-end runs of the `diamond` binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures").join(name)
}

fn diamond<I, S>(args: I) -> Output
where
    I: IntoIterator<Item = S>,
    S: AsRef<std::ffi::OsStr>,
{
    Command::new(env!("CARGO_BIN_EXE_diamond"))
        .args(args)
        .env_remove("DIAMOND_NODE_LIMIT")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn verify_published_example_is_correctable() {
    let o = diamond(["verify".as_ref(), fixture("example1.code").as_os_str()]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.contains("d(C) = 3"));
    assert!(out.contains("budget 9 - 5 = 4"));
    assert!(out.contains("verdict: correctable"));
}

#[test]
fn verify_hamming_code_is_rejected() {
    let o = diamond(["verify".as_ref(), fixture("hamming_7_16_3.code").as_os_str()]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("not correctable"));
}

#[test]
fn malformed_and_missing_inputs_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.code");
    std::fs::write(&bad, "% a=3 n=4\n0000\n011\n").unwrap();
    let o = diamond(["verify".as_ref(), bad.as_os_str()]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("bad.code"));

    let symbol = dir.path().join("symbol.code");
    std::fs::write(&symbol, "% a=3 n=4\n0000\n0113\n").unwrap();
    assert_eq!(code(&diamond(["verify".as_ref(), symbol.as_os_str()])), 3);

    assert_eq!(code(&diamond(["verify", "/nonexistent/x.code"])), 3);
    assert_eq!(code(&diamond(["verify"])), 3);
    assert_eq!(code(&diamond(["no-such-command"])), 3);
    assert_eq!(code(&diamond(["--help"])), 0);
}

#[test]
fn export_then_simulate_attacks() {
    let dir = tempfile::tempdir().unwrap();
    let net = dir.path().join("net.json");
    let o = diamond(["export".as_ref(), fixture("example1.code").as_os_str(), "-o".as_ref(), net.as_os_str()]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));

    let sim = |cw: &str, attack: Option<&str>| {
        let mut args = vec!["simulate".to_string(), net.display().to_string(), "--codeword".into(), cw.into()];
        if let Some(a) = attack {
            args.extend(["--attack".to_string(), a.to_string()]);
        }
        diamond(args)
    };
    let o = sim("c_3", Some("e0->0"));
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("decoded: 1012"));
    assert_eq!(code(&sim("c_3", None)), 0);
    assert_eq!(code(&sim("0111", Some("e1=2"))), 0);
    for i in 0..4 {
        for v in 0..3 {
            assert_eq!(code(&sim("c_5", Some(&format!("e{i}={v}")))), 0);
        }
    }
    assert_eq!(code(&sim("c_1", Some("f1=0"))), 3);
    assert_eq!(code(&sim("c_1", Some("e9=0"))), 3);
    assert_eq!(code(&sim("c_6", None)), 3);
}

#[test]
fn export_refuses_uncorrectable_code() {
    let dir = tempfile::tempdir().unwrap();
    let net = dir.path().join("net.json");
    let o = diamond(["export".as_ref(), fixture("hamming_7_16_3.code").as_os_str(), "-o".as_ref(), net.as_os_str()]);
    assert_eq!(code(&o), 1);
    assert!(!net.exists());
}

#[test]
fn tau_lists_undominated_family() {
    let o = diamond(["tau".as_ref(), fixture("example1.code").as_os_str(), "--undominated".as_ref()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("{c_1,c_4,c_5}"));
}

#[test]
fn search_exact_and_target_modes() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("w.code");
    let o = diamond(["search", "--s", "2", "--a", "3", "-o", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("σ(N_2,3) = 5 (exhaustive)"));
    // The written witness verifies on its own.
    assert_eq!(code(&diamond(["verify".as_ref(), out.as_os_str()])), 0);

    let o = diamond(["search", "--s", "2", "--a", "3", "--target", "6"]);
    assert_eq!(code(&o), 1);
    let o = diamond(["search", "--s", "3", "--a", "2", "--binary-fast"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("σ(N_3,2) = 4"));
    let o = diamond(["search", "--s", "3", "--a", "3", "--target", "15", "--limit-nodes", "5"]);
    assert_eq!(code(&o), 2);
    assert_eq!(code(&diamond(["search", "--s", "2", "--a", "3", "--limit-seconds", "-1"])), 3);
}

#[test]
fn bound_commands() {
    let o = diamond(["bounds", "--s", "2", "--a", "5", "--lp"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("combined: 16"));
    let o = diamond(["lp-bound", "--s", "3", "--a", "4"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("σ(N_3,4) <= 37"));
    let o = diamond(["delsarte", "--n", "7", "--q", "2"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("A_2(7,3) <= 16"));
}

#[test]
fn table_rows_match_certified_ranges() {
    let o = diamond(["table", "--s-min", "2", "--s-max", "4", "--a-min", "3", "--a-max", "5", "--search-seconds", "0"]);
    assert_eq!(code(&o), 0);
    let rows: Vec<(usize, usize, String)> = stdout(&o)
        .lines()
        .skip(1)
        .filter(|l| !l.starts_with('*'))
        .map(|l| {
            let f: Vec<&str> = l.split_whitespace().collect();
            (f[0].parse().unwrap(), f[1].parse().unwrap(), f[2].to_string())
        })
        .collect();
    let cell = |s, a| rows.iter().find(|r| r.0 == s && r.1 == a).map(|r| r.2.as_str()).unwrap();
    // Without the search only the bounds speak for (2, 3).
    assert_eq!(cell(2, 3), "5–6");
    assert_eq!(cell(4, 3), "35–38");
    // Marked: these upper bounds need the length-3 Λ bound.
    assert_eq!(cell(2, 4), "10*");
    assert_eq!(cell(3, 4), "31–37");
    assert_eq!(cell(2, 5), "15–16*");
    assert!(stdout(&o).contains("without it: (2,4) <= 11, (2,5) <= 17"));

    let o = diamond(["table", "--s-min", "2", "--s-max", "2", "--a-min", "3", "--a-max", "3", "--search-seconds", "30"]);
    assert_eq!(code(&o), 0);
    let row = stdout(&o).lines().nth(1).unwrap().to_string();
    assert_eq!(row.split_whitespace().nth(2), Some("5"), "{row}");
    assert!(row.contains("exhaustive search"), "{row}");
}

#[test]
fn sweep_reports_every_head() {
    let o = diamond([
        "sweep".as_ref(),
        fixture("hamming_7_16_3.code").as_os_str(),
        fixture("binary_5_4_3.code").as_os_str(),
    ]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert_eq!(out.matches("  head ").count(), 12);
    assert!(out.contains("no head choice is correctable"));
    assert!(out.contains("every head choice is correctable"));
}

#[test]
fn fixtures_verify_and_export() {
    let dir = tempfile::tempdir().unwrap();
    let o = diamond(["fixtures".as_ref(), "--verify".as_ref(), "--export".as_ref(), dir.path().as_os_str()]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAILED"));
    let exported = dir.path().join("s3_a4_31.code");
    assert_eq!(code(&diamond(["verify".as_ref(), exported.as_os_str()])), 0);
}

#[test]
fn record_and_replay_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let rec = dir.path().join("run.json");
    let o = diamond(["--record", rec.to_str().unwrap(), "search", "--s", "2", "--a", "3"]);
    assert_eq!(code(&o), 0);
    let record: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&rec).unwrap()).unwrap();
    assert_eq!(record["command"], "search");
    assert_eq!(record["output"], stdout(&o));
    assert!(record["stats"]["nodes"].is_u64());

    let o = diamond(["replay", rec.to_str().unwrap(), "--check"]);
    assert_eq!(code(&o), 0);
    // Replay does not touch the record it reads.
    let again: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&rec).unwrap()).unwrap();
    assert_eq!(again, record);

    let tampered = std::fs::read_to_string(&rec).unwrap().replace("= 5 (exhaustive)", "= 6 (exhaustive)");
    std::fs::write(&rec, tampered).unwrap();
    assert_eq!(code(&diamond(["replay", rec.to_str().unwrap(), "--check"])), 1);
}

#[test]
fn json_output_parses() {
    let o = diamond(["--json", "verify", fixture("example3.code").to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "correctable");
    assert_eq!(v["size"], 5);
}
