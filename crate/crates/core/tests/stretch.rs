//! Long exhaustive runs. Ignored by default; run with `--ignored`.

use std::time::Duration;

use diamond_core::fixtures;
use diamond_core::search::{sigma_binary_fast, sigma_exact, SearchConfig};
use diamond_core::NetworkParams;

fn limit_from_env(default_secs: u64) -> Duration {
    let secs = std::env::var("DIAMOND_STRETCH_SECS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(default_secs);
    Duration::from_secs(secs)
}

#[test]
#[ignore]
fn binary_s5_has_no_code_of_size_15() {
    let mut cfg = SearchConfig::new(NetworkParams::new(5, 2).unwrap());
    cfg.target = Some(15);
    cfg.seeds = vec![fixtures::S5_A2_14.code().unwrap()];
    cfg.time_limit = Some(limit_from_env(1800));
    let r = sigma_binary_fast(&cfg).unwrap();
    println!("{}", r.to_json());
    assert_eq!(r.lower, 14);
    assert_eq!(r.upper, Some(14), "search did not exhaust within the time limit");
}

#[test]
#[ignore]
fn ternary_s3_has_no_code_of_size_15() {
    let mut cfg = SearchConfig::new(NetworkParams::new(3, 3).unwrap());
    cfg.target = Some(15);
    cfg.seeds = vec![fixtures::S3_A3_14.code().unwrap()];
    cfg.time_limit = Some(limit_from_env(1800));
    let r = sigma_exact(&cfg).unwrap();
    println!("{}", r.to_json());
    assert_eq!(r.lower, 14);
    assert_eq!(r.upper, Some(14), "search did not exhaust within the time limit");
}
