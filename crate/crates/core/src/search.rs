//! Exhaustive search for σ(N_s, a), the largest correctable outer code.
//!
//! Codes are enumerated depth-first as ascending lists of word indices
//! (orderly generation). Each accepted node is itself a correctable code:
//! every new word keeps d(C) >= 3, passes the Λ counting condition, is
//! canonical under [`crate::symmetry`], and passes the cover decision.
//! Correctability and the Λ condition are inherited by subcodes, so a
//! rejected node never has to be extended.

use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::codefile::read_code_file;
use crate::cover::{decide_correctable, is_correctable, CoverOptions, CoverVerdict};
use crate::error::{Error, Result};
use crate::model::{checked_pow, Code, NetworkParams, Word};
use crate::netcode::NetworkCode;
use crate::symmetry::Canonizer;

/// Largest word space (a^{s+2}) the search accepts.
pub const MAX_SEARCH_WORDS: u128 = 1 << 14;

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub params: NetworkParams,
    /// `None` maximizes; `Some(m)` only asks whether a code of size m exists.
    pub target: Option<usize>,
    pub symmetry: bool,
    pub node_limit: Option<u64>,
    pub time_limit: Option<Duration>,
    /// Known correctable codes; the best one is the starting incumbent.
    pub seeds: Vec<Code>,
    /// Also start from a lexicographic greedy code.
    pub greedy_seed: bool,
    pub cover: CoverOptions,
    /// Subtrees rooted at this code size are searched in parallel.
    pub split_depth: usize,
}

impl SearchConfig {
    pub fn new(params: NetworkParams) -> Self {
        SearchConfig {
            params,
            target: None,
            symmetry: true,
            node_limit: None,
            time_limit: None,
            seeds: Vec::new(),
            greedy_seed: false,
            cover: CoverOptions::default(),
            split_depth: 3,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let p = &self.params;
        if p.t != 1 {
            return Err(Error::Params(format!("search handles t = 1 only, got t = {}", p.t)));
        }
        let words = checked_pow(p.a, p.word_len())?;
        if words > MAX_SEARCH_WORDS {
            return Err(Error::TooLarge(words));
        }
        if self.node_limit == Some(0) {
            return Err(Error::Params("node limit must be positive".into()));
        }
        if self.time_limit == Some(Duration::ZERO) {
            return Err(Error::Params("time limit must be positive".into()));
        }
        if let Some(m) = self.target {
            let states = p.state_count()?;
            if m == 0 || m as u128 > states {
                return Err(Error::Params(format!(
                    "target {m} outside 1..={states} (a^s_out caps every correctable code)"
                )));
            }
        }
        for seed in &self.seeds {
            seed.check_params(p)?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchMode {
    Cover,
    BinaryFast,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub params: NetworkParams,
    pub mode: SearchMode,
    pub target: Option<usize>,
    /// Size of the witness: a certified lower bound on σ.
    pub lower: usize,
    /// Certified upper bound, present only when the relevant part of the
    /// tree was exhausted without unknown cover verdicts.
    pub upper: Option<usize>,
    pub witness: Code,
    pub nodes: u64,
    pub cover_calls: u64,
    pub cover_unknowns: u64,
    pub limit_reached: bool,
    pub elapsed: Duration,
}

impl SearchResult {
    pub fn is_exact(&self) -> bool {
        self.upper == Some(self.lower)
    }

    /// In target mode: whether a code of the requested size was found.
    pub fn target_found(&self) -> Option<bool> {
        self.target.map(|m| self.lower >= m)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "s": self.params.s,
            "a": self.params.a,
            "s_out": self.params.s_out,
            "mode": self.mode,
            "target": self.target,
            "value": self.lower,
            "exact": self.is_exact(),
            "lower": self.lower,
            "upper": self.upper,
            "witness": self.witness.words().iter().map(|w| w.to_string()).collect::<Vec<_>>(),
            "nodes": self.nodes,
            "cover_calls": self.cover_calls,
            "cover_unknowns": self.cover_unknowns,
            "limit_reached": self.limit_reached,
            "elapsed_ms": self.elapsed.as_millis() as u64,
        })
    }
}

struct Space {
    params: NetworkParams,
    mode: SearchMode,
    canon: Canonizer,
    n: usize,
    words: usize,
    /// a(a-1)
    pair_weight: u64,
    /// a^{s_out}·a(a-1)
    lambda_cap: u64,
    cover: CoverOptions,
}

impl Space {
    fn new(params: NetworkParams, mode: SearchMode, cover: CoverOptions) -> Result<Self> {
        let n = params.word_len();
        let canon = Canonizer::new(params.a, n)?;
        let pair_weight = (params.a * (params.a - 1)) as u64;
        let states = params.state_count()?;
        let lambda_cap = u64::try_from(states)
            .ok()
            .and_then(|x| x.checked_mul(pair_weight))
            .ok_or(Error::Overflow("Λ cap"))?;
        Ok(Space {
            params,
            mode,
            words: canon.word_count(),
            canon,
            n,
            pair_weight,
            lambda_cap,
            cover,
        })
    }

    fn distance(&self, u: usize, v: usize) -> usize {
        let (x, y) = (self.canon.digits(u), self.canon.digits(v));
        x.iter().zip(y).filter(|(p, q)| p != q).count()
    }

    fn tail_distance(&self, u: usize, v: usize) -> usize {
        let (x, y) = (self.canon.digits(u), self.canon.digits(v));
        x[1..].iter().zip(&y[1..]).filter(|(p, q)| p != q).count()
    }

    fn lambda_ok(&self, size: usize, lambda: u64) -> bool {
        size as u64 * self.pair_weight + lambda <= self.lambda_cap
    }

    fn to_code(&self, code: &[usize]) -> Code {
        let words = code
            .iter()
            .map(|&w| Word::new(self.canon.digits(w).to_vec()))
            .collect();
        Code::with_length(self.params.a, self.n, words).expect("indices are in range")
    }
}

struct Shared {
    incumbent: AtomicUsize,
    nodes: AtomicU64,
    cover_calls: AtomicU64,
    cover_unknowns: AtomicU64,
    stop: AtomicBool,
    aborted: AtomicBool,
    target: Option<usize>,
    node_limit: Option<u64>,
    deadline: Option<Instant>,
    symmetry: bool,
}

impl Shared {
    /// Smallest size still worth reaching.
    fn need(&self) -> usize {
        self.target.unwrap_or_else(|| self.incumbent.load(Ordering::Relaxed))
    }
}

#[derive(Clone, Debug, Default)]
struct Local {
    best: Vec<usize>,
}

#[derive(Clone)]
struct Node {
    code: Vec<usize>,
    lambda: u64,
    cand: Vec<usize>,
}

enum Accept {
    Yes(u64),
    No,
}

impl Space {
    /// Tries `code + [w]`; returns the new Λ on success.
    fn accept(&self, shared: &Shared, code: &mut Vec<usize>, lambda: u64, w: usize) -> Accept {
        let extra = code.iter().filter(|&&c| self.tail_distance(c, w) == 2).count() as u64;
        let lambda = lambda + 2 * extra;
        if !self.lambda_ok(code.len() + 1, lambda) {
            return Accept::No;
        }
        code.push(w);
        let ok = (!shared.symmetry || self.canon.is_canonical(code)) && self.oracle(shared, code);
        code.pop();
        if ok {
            Accept::Yes(lambda)
        } else {
            Accept::No
        }
    }

    fn oracle(&self, shared: &Shared, code: &[usize]) -> bool {
        match self.mode {
            // d >= 3 and the Λ count are already exact for a = 2.
            SearchMode::BinaryFast => true,
            SearchMode::Cover => {
                if code.len() < 2 {
                    return true;
                }
                shared.cover_calls.fetch_add(1, Ordering::Relaxed);
                let res = decide_correctable(&self.to_code(code), &self.params, self.cover);
                match res.verdict {
                    CoverVerdict::Feasible { .. } => true,
                    CoverVerdict::Infeasible(_) => false,
                    CoverVerdict::Unknown => {
                        shared.cover_unknowns.fetch_add(1, Ordering::Relaxed);
                        false
                    }
                }
            }
        }
    }

    fn children_cand(&self, cand: &[usize], w: usize) -> Vec<usize> {
        cand.iter()
            .copied()
            .filter(|&x| self.distance(w, x) >= 3)
            .collect()
    }

    fn tick(&self, shared: &Shared) -> bool {
        let total = shared.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if shared.node_limit.is_some_and(|l| total > l) {
            shared.aborted.store(true, Ordering::Relaxed);
            shared.stop.store(true, Ordering::Relaxed);
        }
        if shared.deadline.is_some_and(|d| Instant::now() >= d) {
            shared.aborted.store(true, Ordering::Relaxed);
            shared.stop.store(true, Ordering::Relaxed);
        }
        !shared.stop.load(Ordering::Relaxed)
    }

    fn record(&self, shared: &Shared, local: &mut Local, code: &[usize]) {
        if code.len() > local.best.len() {
            local.best = code.to_vec();
            shared.incumbent.fetch_max(code.len(), Ordering::Relaxed);
            if shared.target.is_some_and(|m| code.len() >= m) {
                shared.stop.store(true, Ordering::Relaxed);
            }
        }
    }

    fn dfs(&self, shared: &Shared, local: &mut Local, node: &mut Node) {
        if !self.tick(shared) {
            return;
        }
        self.record(shared, local, &node.code);
        let cand = std::mem::take(&mut node.cand);
        for (i, &w) in cand.iter().enumerate() {
            let bound = node.code.len() + cand.len() - i;
            if bound < shared.need() || bound <= local.best.len() || shared.stop.load(Ordering::Relaxed) {
                break;
            }
            if let Accept::Yes(lambda) = self.accept(shared, &mut node.code, node.lambda, w) {
                let mut child = Node {
                    code: node.code.clone(),
                    lambda,
                    cand: self.children_cand(&cand[i + 1..], w),
                };
                child.code.push(w);
                self.dfs(shared, local, &mut child);
            }
        }
        node.cand = cand;
    }

    /// Nodes whose code has `depth` words; shallower nodes are recorded.
    fn frontier(&self, shared: &Shared, local: &mut Local, depth: usize) -> Vec<Node> {
        let root = Node {
            code: Vec::new(),
            lambda: 0,
            cand: (0..self.words).collect(),
        };
        let mut level = vec![root];
        for _ in 0..depth {
            let mut next = Vec::new();
            for node in &level {
                self.record(shared, local, &node.code);
                for (i, &w) in node.cand.iter().enumerate() {
                    let mut code = node.code.clone();
                    if let Accept::Yes(lambda) = self.accept(shared, &mut code, node.lambda, w) {
                        code.push(w);
                        next.push(Node {
                            code,
                            lambda,
                            cand: self.children_cand(&node.cand[i + 1..], w),
                        });
                    }
                }
            }
            if next.is_empty() {
                return next;
            }
            level = next;
        }
        level
    }
}

fn run(config: &SearchConfig, mode: SearchMode) -> Result<SearchResult> {
    config.validate()?;
    let start = Instant::now();
    let params = config.params;
    let deadline = config.time_limit.map(|d| start + d);
    // Node-level cover solves share the search deadline; seed and witness
    // checks below do not, so a late cutoff can never reject a valid code.
    let mut node_cover = config.cover;
    node_cover.deadline = match (node_cover.deadline, deadline) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, y) => x.or(y),
    };
    let space = Space::new(params, mode, node_cover)?;

    let mut seeds: Vec<Code> = Vec::new();
    for seed in &config.seeds {
        if !decide_correctable(seed, &params, config.cover).is_feasible() {
            return Err(Error::Invalid(format!(
                "seed code of size {} is not correctable for N_{} over a = {}",
                seed.len(),
                params.s,
                params.a
            )));
        }
        seeds.push(seed.clone());
    }
    if config.greedy_seed {
        seeds.push(greedy_code(&params, config.cover)?);
    }
    let seed_best = seeds.iter().max_by_key(|c| c.len()).cloned();

    let shared = Shared {
        incumbent: AtomicUsize::new(seed_best.as_ref().map_or(0, Code::len)),
        nodes: AtomicU64::new(0),
        cover_calls: AtomicU64::new(0),
        cover_unknowns: AtomicU64::new(0),
        stop: AtomicBool::new(false),
        aborted: AtomicBool::new(false),
        target: config.target,
        node_limit: config.node_limit,
        deadline,
        symmetry: config.symmetry,
    };
    if config.target.is_some_and(|m| seed_best.as_ref().is_some_and(|c| c.len() >= m)) {
        shared.stop.store(true, Ordering::Relaxed);
    }

    let mut shallow = Local::default();
    let depth = config.split_depth.max(1);
    let frontier = if shared.stop.load(Ordering::Relaxed) {
        Vec::new()
    } else {
        space.frontier(&shared, &mut shallow, depth)
    };
    let found: Vec<Vec<usize>> = frontier
        .into_par_iter()
        .map(|mut node| {
            let mut local = Local::default();
            space.dfs(&shared, &mut local, &mut node);
            local.best
        })
        .collect();

    // Largest size wins; ties go to the earliest subtree.
    let mut best = shallow.best;
    for code in found {
        if code.len() > best.len() {
            best = code;
        }
    }
    let mut witness = space.to_code(&best);
    if let Some(seed) = seed_best {
        if seed.len() > witness.len() {
            witness = seed;
        }
    }
    if witness.is_empty() {
        return Err(Error::Invalid("search produced no code".into()));
    }
    if !decide_correctable(&witness, &params, config.cover).is_feasible() {
        return Err(Error::Invalid("search witness failed re-verification".into()));
    }

    let aborted = shared.aborted.load(Ordering::Relaxed);
    let unknowns = shared.cover_unknowns.load(Ordering::Relaxed);
    let lower = witness.len();
    let complete = !aborted && unknowns == 0;
    let upper = match config.target {
        None if complete => Some(lower),
        Some(m) if complete && lower < m => Some(m - 1),
        _ => None,
    };
    Ok(SearchResult {
        params,
        mode,
        target: config.target,
        lower,
        upper,
        witness,
        nodes: shared.nodes.load(Ordering::Relaxed),
        cover_calls: shared.cover_calls.load(Ordering::Relaxed),
        cover_unknowns: unknowns,
        limit_reached: aborted,
        elapsed: start.elapsed(),
    })
}

/// σ(N_s, a) by exhaustive enumeration with the cover decision as oracle.
pub fn sigma_exact(config: &SearchConfig) -> Result<SearchResult> {
    run(config, SearchMode::Cover)
}

/// Binary specialization: for a = 2 every multi-member τ-set is a pair that
/// needs its own state, so correctability is d(C) >= 3 and |C| + Λ/2 <= 2^{s_out}.
pub fn sigma_binary_fast(config: &SearchConfig) -> Result<SearchResult> {
    if config.params.a != 2 {
        return Err(Error::NotApplicable(
            "binary fast path",
            format!("needs a = 2, got a = {}", config.params.a),
        ));
    }
    run(config, SearchMode::BinaryFast)
}

/// Scans words in lexicographic order and keeps each one that leaves the code
/// correctable.
pub fn greedy_code(params: &NetworkParams, options: CoverOptions) -> Result<Code> {
    let n = params.word_len();
    let total = checked_pow(params.a, n)?;
    if total > MAX_SEARCH_WORDS {
        return Err(Error::TooLarge(total));
    }
    let mut words: Vec<Word> = Vec::new();
    for i in 0..total as usize {
        let w = Word::from_index(i, params.a, n);
        if words.iter().any(|c| crate::model::distance_unchecked(c.symbols(), w.symbols()) < 3) {
            continue;
        }
        words.push(w);
        let code = Code::with_length(params.a, n, words.clone())?;
        if !decide_correctable(&code, params, options).is_feasible() {
            words.pop();
        }
    }
    Code::with_length(params.a, n, words)
}

#[derive(Clone, Debug, Serialize)]
pub struct FixtureReport {
    pub name: &'static str,
    pub s: usize,
    pub a: usize,
    pub size: usize,
    pub min_distance: Option<usize>,
    pub correctable: bool,
    pub cover_size: Option<usize>,
    pub budget: i128,
    /// Codeword/attack pairs replayed through the constructed network code.
    pub adversary_checked: u64,
    pub round_trip: bool,
    pub lemma_checks: bool,
    /// Whether a cover printed next to the code is valid (if one ships).
    pub printed_cover_valid: Option<bool>,
    pub ok: bool,
}

/// Full pipeline for one bundled code: distance, cover, network code and an
/// exhaustive adversary replay.
pub fn verify_fixture(fixture: &crate::fixtures::Fixture) -> Result<FixtureReport> {
    let code = fixture.code()?;
    let params = fixture.params()?;
    let d = code.min_distance();
    let res = is_correctable(&code, &params, CoverOptions::default());
    let budget = crate::cover::budget(&code, &params)?;
    let mut report = FixtureReport {
        name: fixture.name,
        s: params.s,
        a: params.a,
        size: code.len(),
        min_distance: match d {
            crate::model::Distance::Finite(x) => Some(x),
            crate::model::Distance::Infinite => None,
        },
        correctable: res.is_feasible(),
        cover_size: res.cover().map(|c| c.len()),
        budget,
        adversary_checked: 0,
        round_trip: false,
        lemma_checks: false,
        printed_cover_valid: None,
        ok: false,
    };
    if let Some(printed) = fixture.printed_cover()? {
        report.printed_cover_valid = Some(printed.verify(&code, &params).is_ok());
    }
    if let Some(cover) = res.cover() {
        let net = NetworkCode::build(&code, &params, cover)?;
        let v = net.verify_correcting();
        report.adversary_checked = v.checked;
        report.round_trip = v.correct;
        report.lemma_checks = net.check_state_heads().is_ok() && net.check_singleton_states().is_ok();
    }
    report.ok = report.correctable
        && report.round_trip
        && report.lemma_checks
        && report.printed_cover_valid != Some(false)
        && fixture.expected_size.map_or(true, |m| m == code.len());
    Ok(report)
}

/// Verifies every bundled code that certifies a lower bound on σ.
pub fn verify_fixture_codes() -> Result<Vec<FixtureReport>> {
    crate::fixtures::ALL
        .par_iter()
        .filter(|f| f.certifies_sigma())
        .map(verify_fixture)
        .collect()
}

/// Which coordinates to try as the head in a sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HeadChoice {
    All,
    Only(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HeadResult {
    pub head: usize,
    /// `None` when the cover solver hit its node limit.
    pub correctable: Option<bool>,
    pub cover_size: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub name: String,
    pub length: Option<usize>,
    pub size: Option<usize>,
    pub error: Option<String>,
    pub heads: Vec<HeadResult>,
}

impl SweepReport {
    pub fn all_correctable(&self) -> bool {
        self.error.is_none() && self.heads.iter().all(|h| h.correctable == Some(true))
    }

    pub fn none_correctable(&self) -> bool {
        self.error.is_none() && self.heads.iter().all(|h| h.correctable == Some(false))
    }
}

/// Rotates coordinates left so that `head` lands at position 0.
pub fn rotate_head(code: &Code, head: usize) -> Result<Code> {
    let n = code.length();
    if head >= n {
        return Err(Error::Params(format!("head coordinate {head} outside 0..{n}")));
    }
    code.map_words(|w| {
        let x = w.symbols();
        Word::new(x[head..].iter().chain(&x[..head]).copied().collect())
    })
}

/// Tests each head choice of a length-n code on N_{n-2}.
pub fn sweep_code(name: &str, code: &Code, heads: &HeadChoice, options: CoverOptions) -> SweepReport {
    let mut report = SweepReport {
        name: name.to_string(),
        length: Some(code.length()),
        size: Some(code.len()),
        error: None,
        heads: Vec::new(),
    };
    let n = code.length();
    let params = match n.checked_sub(2).map(|s| NetworkParams::new(s, code.alphabet())) {
        Some(Ok(p)) => p,
        Some(Err(e)) => {
            report.error = Some(e.to_string());
            return report;
        }
        None => {
            report.error = Some(format!("length {n} is too short for a diamond network"));
            return report;
        }
    };
    let choices: Vec<usize> = match heads {
        HeadChoice::All => (0..n).collect(),
        HeadChoice::Only(v) => v.clone(),
    };
    for h in choices {
        let rotated = match rotate_head(code, h) {
            Ok(c) => c,
            Err(e) => {
                report.error = Some(e.to_string());
                return report;
            }
        };
        let res = is_correctable(&rotated, &params, options);
        report.heads.push(HeadResult {
            head: h,
            correctable: (!res.is_unknown()).then(|| res.is_feasible()),
            cover_size: res.cover().map(|c| c.len()),
        });
    }
    report
}

/// [`sweep_code`] over files; unreadable files yield a report with `error`.
pub fn sweep_external_codes(
    files: &[PathBuf],
    heads: &HeadChoice,
    options: CoverOptions,
) -> Vec<SweepReport> {
    files
        .par_iter()
        .map(|f| sweep_file(f, heads, options))
        .collect()
}

fn sweep_file(path: &Path, heads: &HeadChoice, options: CoverOptions) -> SweepReport {
    let name = path.display().to_string();
    match read_code_file(path) {
        Ok(code) => sweep_code(&name, &code, heads, options),
        Err(e) => SweepReport {
            name,
            length: None,
            size: None,
            error: Some(e.to_string()),
            heads: Vec::new(),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn exact(s: usize, a: usize) -> SearchResult {
        sigma_exact(&SearchConfig::new(NetworkParams::new(s, a).unwrap())).unwrap()
    }

    #[test]
    fn small_sigma_values() {
        for (s, a, v) in [(1, 2, 1), (2, 2, 2), (3, 2, 4), (1, 3, 2), (2, 3, 5), (1, 4, 3), (1, 5, 4)] {
            let r = exact(s, a);
            assert!(r.is_exact(), "({s},{a}) not exhausted");
            assert_eq!(r.lower, v, "σ(N_{s},{a})");
            assert_eq!(r.witness.len(), v);
            assert!(r.witness.min_distance().at_least(3));
        }
    }

    #[test]
    fn symmetry_off_agrees() {
        for (s, a) in [(1, 2), (2, 2), (1, 3), (3, 2)] {
            let mut cfg = SearchConfig::new(NetworkParams::new(s, a).unwrap());
            let on = sigma_exact(&cfg).unwrap();
            cfg.symmetry = false;
            let off = sigma_exact(&cfg).unwrap();
            assert_eq!(on.lower, off.lower, "({s},{a})");
            assert!(off.nodes >= on.nodes);
        }
    }

    #[test]
    fn binary_fast_matches_exact() {
        for s in 1..=4 {
            let cfg = SearchConfig::new(NetworkParams::new(s, 2).unwrap());
            let fast = sigma_binary_fast(&cfg).unwrap();
            let slow = sigma_exact(&cfg).unwrap();
            assert!(fast.is_exact() && slow.is_exact());
            assert_eq!(fast.lower, slow.lower, "s = {s}");
        }
        assert_eq!(
            sigma_binary_fast(&SearchConfig::new(NetworkParams::new(4, 2).unwrap())).unwrap().lower,
            8
        );
        assert!(sigma_binary_fast(&SearchConfig::new(NetworkParams::new(2, 3).unwrap())).is_err());
    }

    #[test]
    fn deterministic_witness() {
        let cfg = SearchConfig::new(NetworkParams::new(2, 3).unwrap());
        let a = sigma_exact(&cfg).unwrap();
        let b = sigma_exact(&cfg).unwrap();
        assert_eq!(a.witness, b.witness);
    }

    #[test]
    fn target_mode() {
        let mut cfg = SearchConfig::new(NetworkParams::new(2, 3).unwrap());
        cfg.target = Some(5);
        let r = sigma_exact(&cfg).unwrap();
        assert_eq!(r.target_found(), Some(true));
        cfg.target = Some(6);
        let r = sigma_exact(&cfg).unwrap();
        assert_eq!(r.target_found(), Some(false));
        assert_eq!(r.upper, Some(5));
        cfg.target = Some(10);
        assert!(sigma_exact(&cfg).is_err());
    }

    #[test]
    fn sigma_s2_a4_is_ten() {
        let params = NetworkParams::new(2, 4).unwrap();
        let mut cfg = SearchConfig::new(params);
        cfg.target = Some(10);
        let r = sigma_exact(&cfg).unwrap();
        assert_eq!(r.target_found(), Some(true));
        assert_eq!(r.witness.len(), 10);
        let res = is_correctable(&r.witness, &params, CoverOptions::default());
        let net = NetworkCode::build(&r.witness, &params, res.cover().unwrap()).unwrap();
        assert!(net.verify_correcting().correct);
        cfg.target = Some(11);
        let r = sigma_exact(&cfg).unwrap();
        assert_eq!(r.target_found(), Some(false));
        assert_eq!(r.upper, Some(10));
    }

    #[test]
    fn limits_and_seeds() {
        let mut cfg = SearchConfig::new(NetworkParams::new(2, 3).unwrap());
        cfg.node_limit = Some(2);
        cfg.greedy_seed = true;
        let r = sigma_exact(&cfg).unwrap();
        assert!(r.limit_reached);
        assert!(r.upper.is_none());
        assert!(r.lower >= 1);

        let mut cfg = SearchConfig::new(NetworkParams::new(2, 3).unwrap());
        cfg.seeds = vec![fixtures::EXAMPLE1.code().unwrap()];
        cfg.target = Some(5);
        let r = sigma_exact(&cfg).unwrap();
        assert_eq!(r.nodes, 0);
        assert_eq!(r.witness, fixtures::EXAMPLE1.code().unwrap());

        cfg.seeds = vec![Code::parse_words(3, "0000 0001").unwrap()];
        assert!(sigma_exact(&cfg).is_err());
        cfg.seeds.clear();
        cfg.node_limit = Some(0);
        assert!(sigma_exact(&cfg).is_err());
    }

    #[test]
    fn greedy_is_correctable() {
        for (s, a) in [(2, 3), (3, 2), (2, 4)] {
            let p = NetworkParams::new(s, a).unwrap();
            let g = greedy_code(&p, CoverOptions::default()).unwrap();
            assert!(is_correctable(&g, &p, CoverOptions::default()).is_feasible());
        }
    }

    #[test]
    fn rotation_and_sweep() {
        let code = Code::parse_words(2, "00000 11100 00111 11011").unwrap();
        assert_eq!(rotate_head(&code, 2).unwrap().words()[1].to_string(), "10011");
        let rep = sweep_code("543", &code, &HeadChoice::All, CoverOptions::default());
        assert_eq!(rep.heads.len(), 5);
        assert!(rep.all_correctable());
        let rep = sweep_code("rep", &Code::parse_words(2, "000 111").unwrap(), &HeadChoice::All, CoverOptions::default());
        assert!(rep.none_correctable());
        let rep = sweep_code("short", &Code::parse_words(2, "00 11").unwrap(), &HeadChoice::All, CoverOptions::default());
        assert!(rep.error.is_some());
        let rep = sweep_external_codes(&[PathBuf::from("/nonexistent/x.code")], &HeadChoice::All, CoverOptions::default());
        assert!(rep[0].error.is_some());
    }
}
