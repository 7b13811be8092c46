use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Duration;

use anyhow::{anyhow, bail, Context as _, Result};
use serde_json::{json, Value};

use diamond_core::bounds::bound_report;
use diamond_core::codefile::{format_code, read_code_file};
use diamond_core::cover::{
    budget, is_correctable, CoverOptions, CoverVerdict, Infeasibility, DEFAULT_NODE_LIMIT,
};
use diamond_core::fixtures;
use diamond_core::lp::{delsarte_lp_max, sigma_lp_bound, LpBoundOptions};
use diamond_core::netcode::{Attack, NetworkCode};
use diamond_core::search::{
    sigma_binary_fast, sigma_exact, sweep_external_codes, verify_fixture_codes, HeadChoice,
    SearchConfig, SearchResult,
};
use diamond_core::tau::{format_family, format_set, TauTable};
use diamond_core::{Code, NetworkParams, Word};

use crate::record::RunRecord;
use crate::{CodeArgs, Command, Outcome, EXIT_NO, EXIT_OK, EXIT_UNKNOWN};

/// Word-space size above which `table` skips the search: building the
/// distance table alone outlasts a per-cell budget of seconds.
const TABLE_SEARCH_WORDS: u128 = 4096;

pub struct Context {
    pub cover_node_limit: Option<u64>,
}

impl Context {
    fn cover(&self) -> Result<CoverOptions> {
        let node_limit = self.cover_node_limit.unwrap_or(DEFAULT_NODE_LIMIT);
        if node_limit == 0 {
            bail!("cover node limit must be positive");
        }
        Ok(CoverOptions {
            node_limit,
            deadline: None,
        })
    }
}

pub fn run(cmd: &Command, ctx: &Context) -> Result<Outcome> {
    match cmd {
        Command::Verify {
            code,
            cover_out,
            netcode_out,
        } => verify(code, cover_out.as_deref(), netcode_out.as_deref(), ctx),
        Command::Tau {
            code,
            undominated,
            table,
        } => tau(code, *undominated, *table),
        Command::Export { code, out } => export(code, out, ctx),
        Command::Simulate {
            netcode,
            codeword,
            attack,
        } => simulate(netcode, codeword, attack.as_deref()),
        Command::Search {
            s,
            a,
            s_out,
            binary_fast,
            target,
            limit_nodes,
            limit_seconds,
            seed_file,
            greedy,
            no_symmetry,
            out,
        } => {
            let params = NetworkParams::with_s_out(*s, *a, s_out.unwrap_or(*s))?;
            let mut cfg = SearchConfig::new(params);
            cfg.target = *target;
            cfg.node_limit = *limit_nodes;
            cfg.time_limit = limit_seconds.map(seconds).transpose()?;
            cfg.greedy_seed = *greedy;
            cfg.symmetry = !no_symmetry;
            cfg.cover = ctx.cover()?;
            for f in seed_file {
                cfg.seeds.push(load_file(f)?);
            }
            search(&cfg, *binary_fast, out.as_deref())
        }
        Command::Bounds { s, a, lp } => bounds(*s, *a, *lp),
        Command::LpBound {
            s,
            a,
            integrality,
            no_s2_cut,
        } => lp_bound(
            *s,
            *a,
            LpBoundOptions {
                s2_cut: !no_s2_cut,
                integrality: *integrality,
            },
        ),
        Command::Delsarte { n, q, d } => delsarte(*n, *q, *d),
        Command::Table {
            s_min,
            s_max,
            a_min,
            a_max,
            search_seconds,
            no_lp,
        } => table((*s_min, *s_max), (*a_min, *a_max), *search_seconds, !no_lp, ctx),
        Command::Sweep { files, heads } => sweep(files, heads, ctx),
        Command::Fixtures { verify, export } => fixtures_cmd(*verify, export.as_deref()),
        Command::Replay { file, check } => replay(file, *check),
    }
}

fn seconds(x: f64) -> Result<Duration> {
    Duration::try_from_secs_f64(x)
        .ok()
        .filter(|d| !d.is_zero())
        .ok_or_else(|| anyhow!("time limit {x} is not a positive number of seconds"))
}

fn load_file(path: &Path) -> Result<Code> {
    read_code_file(path).map_err(|e| anyhow!("{}: {e}", path.display()))
}

fn load(args: &CodeArgs) -> Result<(Code, NetworkParams)> {
    let mut code = load_file(&args.file)?;
    if let Some(a) = args.a {
        if a != code.alphabet() {
            code = Code::with_length(a, code.length(), code.words().to_vec())
                .map_err(|e| anyhow!("{}: {e}", args.file.display()))?;
        }
    }
    let s = match args.s {
        Some(s) => s,
        None => code
            .length()
            .checked_sub(2)
            .filter(|&s| s >= 1)
            .ok_or_else(|| anyhow!("words of length {} are too short for N_s", code.length()))?,
    };
    let params = NetworkParams::with_s_out(s, code.alphabet(), args.s_out.unwrap_or(s))?;
    code.check_params(&params)?;
    Ok((code, params))
}

fn params_json(p: &NetworkParams) -> Value {
    json!({"s": p.s, "a": p.a, "s_out": p.s_out})
}

fn why(reason: &Infeasibility) -> String {
    match reason {
        Infeasibility::MinDistance(d) => format!("d(C) = {d} < 3"),
        Infeasibility::HeadConflict(set) => format!("τ-set {} repeats a head", format_set(set)),
        Infeasibility::TooManyCodewords { size, states } => {
            format!("|C| = {size} exceeds the {states} available states")
        }
        Infeasibility::OverBudget {
            minimum: Some(m),
            budget,
        } => format!("a minimum cover needs {m} blocks but the budget is {budget}"),
        Infeasibility::OverBudget {
            minimum: None,
            budget,
        } => format!("no cover fits the budget of {budget}"),
    }
}

fn verify(
    args: &CodeArgs,
    cover_out: Option<&Path>,
    netcode_out: Option<&Path>,
    ctx: &Context,
) -> Result<Outcome> {
    let (code, params) = load(args)?;
    let mut t = String::new();
    let states = params.state_count()?;
    writeln!(t, "code: {} (|C| = {}, n = {}, a = {})", args.file.display(), code.len(), code.length(), code.alphabet())?;
    writeln!(t, "network: N_{} (s_out = {}), {states} states", params.s, params.s_out)?;
    let d = code.min_distance();
    writeln!(t, "d(C) = {d}")?;

    let mut result = json!({
        "file": args.file,
        "params": params_json(&params),
        "size": code.len(),
        "min_distance": d.to_string(),
    });
    let mut files = Vec::new();

    if d.at_least(3) {
        let table = TauTable::build(&code)?;
        let distinct = table.distinct_sets();
        let multi = table.multi_sets();
        let maximal = table.maximal_multi_sets();
        writeln!(
            t,
            "τ: {} distinct sets, {} with two or more members ({} maximal), largest {}",
            distinct.len(),
            multi.len(),
            maximal.len(),
            table.max_set_size()
        )?;
        result["tau"] = json!({
            "distinct": distinct.len(),
            "multi": multi.len(),
            "maximal": maximal.len(),
            "max_size": table.max_set_size(),
        });
    }

    let res = is_correctable(&code, &params, ctx.cover()?);
    let stats = json!({"cover_nodes": res.nodes});
    let exit = match &res.verdict {
        CoverVerdict::Feasible {
            cover,
            proven_minimum,
        } => {
            let b = budget(&code, &params)?;
            writeln!(
                t,
                "cover: |𝔅| = {} ({}), budget {states} - {} = {b}",
                cover.len(),
                if *proven_minimum { "minimum" } else { "within budget" },
                code.len()
            )?;
            writeln!(t, "𝔅 = {}", format_family(cover.blocks.iter().map(|b| &b.0)))?;
            let net = NetworkCode::build(&code, &params, cover)?;
            let check = net.verify_correcting();
            writeln!(
                t,
                "network code: {} of {states} states used, {} transmissions checked",
                net.states_used(),
                check.checked
            )?;
            result["cover"] = cover.to_witness_json(&code, &params);
            result["adversary_check"] = json!({"checked": check.checked, "correct": check.correct});
            if let Some(path) = cover_out {
                write_file(path, &serde_json::to_string_pretty(&result["cover"])?)?;
                files.push(path.to_path_buf());
            }
            if let Some(path) = netcode_out {
                write_file(path, &net.to_json())?;
                files.push(path.to_path_buf());
            }
            if check.correct {
                writeln!(t, "verdict: correctable")?;
                result["verdict"] = json!("correctable");
                EXIT_OK
            } else {
                let cx = check.counterexample.map(|c| c.to_string()).unwrap_or_default();
                writeln!(t, "verdict: network code check FAILED: {cx}")?;
                result["verdict"] = json!("check-failed");
                result["counterexample"] = json!(cx);
                EXIT_NO
            }
        }
        CoverVerdict::Infeasible(reason) => {
            writeln!(t, "verdict: not correctable: {}", why(reason))?;
            result["verdict"] = json!("not-correctable");
            result["reason"] = json!(why(reason));
            EXIT_NO
        }
        CoverVerdict::Unknown => {
            writeln!(t, "verdict: unknown (cover solver stopped after {} nodes)", res.nodes)?;
            result["verdict"] = json!("unknown");
            EXIT_UNKNOWN
        }
    };
    Ok(Outcome {
        text: t,
        exit,
        parameters: json!({"file": args.file, "params": params_json(&params)}),
        result,
        stats,
        files,
    })
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    let mut body = text.to_string();
    if !body.ends_with('\n') {
        body.push('\n');
    }
    std::fs::write(path, body).with_context(|| format!("cannot write {}", path.display()))
}

fn tau(args: &CodeArgs, undominated: bool, with_table: bool) -> Result<Outcome> {
    let (code, params) = load(args)?;
    let table = TauTable::build(&code)?;
    let family: Vec<Vec<usize>> = if undominated {
        table.undominated_sets().into_iter().collect()
    } else {
        table.distinct_sets().into_iter().collect()
    };
    let mut t = String::new();
    for (i, w) in code.words().iter().enumerate() {
        writeln!(t, "c_{} = {w}", i + 1)?;
    }
    let label = if undominated { "undominated τ-sets" } else { "distinct τ-sets" };
    writeln!(t, "{label} ({}): {}", family.len(), format_family(&family))?;
    let mut rows = Vec::new();
    if with_table {
        for (tail, set) in table.iter() {
            writeln!(t, "τ({tail}) = {}", format_set(set))?;
            rows.push(json!({"tail": tail.to_string(), "set": set}));
        }
    }
    Ok(Outcome {
        text: t,
        exit: EXIT_OK,
        parameters: json!({"file": args.file, "params": params_json(&params), "undominated": undominated}),
        result: json!({"family": family, "table": rows}),
        stats: Value::Null,
        files: Vec::new(),
    })
}

fn export(args: &CodeArgs, out: &Path, ctx: &Context) -> Result<Outcome> {
    let (code, params) = load(args)?;
    let res = is_correctable(&code, &params, ctx.cover()?);
    let parameters = json!({"file": args.file, "params": params_json(&params), "out": out});
    let Some(cover) = res.cover() else {
        let reason = match &res.verdict {
            CoverVerdict::Infeasible(r) => why(r),
            _ => "cover solver stopped before a verdict".to_string(),
        };
        return Ok(Outcome {
            text: format!("not exported: {reason}\n"),
            exit: if res.is_unknown() { EXIT_UNKNOWN } else { EXIT_NO },
            parameters,
            result: json!({"exported": false, "reason": reason}),
            stats: Value::Null,
            files: Vec::new(),
        });
    };
    let net = NetworkCode::build(&code, &params, cover)?;
    write_file(out, &net.to_json())?;
    Ok(Outcome {
        text: format!(
            "wrote {} ({} codewords, {} blocks, {} states used)\n",
            out.display(),
            code.len(),
            cover.len(),
            net.states_used()
        ),
        exit: EXIT_OK,
        parameters,
        result: json!({"exported": true, "out": out, "states_used": net.states_used()}),
        stats: Value::Null,
        files: vec![out.to_path_buf()],
    })
}

fn resolve_codeword(code: &Code, spec: &str) -> Result<Word> {
    let label = spec
        .strip_prefix("c_")
        .or_else(|| spec.strip_prefix('c').filter(|r| r.len() + 1 != code.length()));
    if let Some(idx) = label.and_then(|r| r.parse::<usize>().ok()) {
        return idx
            .checked_sub(1)
            .and_then(|i| code.get(i))
            .cloned()
            .ok_or_else(|| anyhow!("codeword label {spec} outside c_1..c_{}", code.len()));
    }
    Ok(spec.parse::<Word>()?)
}

fn simulate(netcode: &Path, codeword: &str, attack: Option<&str>) -> Result<Outcome> {
    let text = std::fs::read_to_string(netcode)
        .with_context(|| format!("cannot read {}", netcode.display()))?;
    let net = NetworkCode::from_json(&text).map_err(|e| anyhow!("{}: {e}", netcode.display()))?;
    let word = resolve_codeword(net.code(), codeword)?;
    let attack: Option<Attack> = attack.map(str::parse).transpose()?;
    let outcome = net.transmit(&word, attack)?;
    let decoded = net.decode(&outcome);

    let mut t = String::new();
    writeln!(t, "sent: {word}")?;
    writeln!(t, "attack: {}", attack.map_or("none".to_string(), |a| a.to_string()))?;
    writeln!(t, "terminal observes: head {}, state {}", outcome.head, outcome.state)?;
    let (exit, status, decoded_str) = match &decoded {
        Ok(w) if *w == word => (EXIT_OK, "ok".to_string(), Some(w.to_string())),
        Ok(w) => (EXIT_NO, format!("MISMATCH: decoded {w} but {word} was sent"), Some(w.to_string())),
        Err(e) => (EXIT_NO, format!("DECODER ERROR: {e}"), None),
    };
    if let Some(d) = &decoded_str {
        writeln!(t, "decoded: {d}")?;
    }
    writeln!(t, "result: {status}")?;
    Ok(Outcome {
        text: t,
        exit,
        parameters: json!({"netcode": netcode, "codeword": codeword, "attack": attack.map(|a| a.to_string())}),
        result: json!({
            "sent": word.to_string(),
            "observed": {"head": outcome.head, "state": outcome.state.to_string()},
            "decoded": decoded_str,
            "ok": exit == EXIT_OK,
        }),
        stats: Value::Null,
        files: Vec::new(),
    })
}

fn search_summary(r: &SearchResult) -> (String, i32) {
    let (s, a) = (r.params.s, r.params.a);
    let limit = if r.limit_reached {
        "search limit reached"
    } else {
        "cover solver limit reached"
    };
    match r.target {
        None if r.is_exact() => (format!("σ(N_{s},{a}) = {} (exhaustive)", r.lower), EXIT_OK),
        None => (format!("σ(N_{s},{a}) >= {} ({limit})", r.lower), EXIT_UNKNOWN),
        Some(m) if r.lower >= m => (format!("a correctable code of size {m} exists"), EXIT_OK),
        Some(m) if r.upper.is_some() => (
            format!("no correctable code of size {m} exists, so σ(N_{s},{a}) <= {}", m - 1),
            EXIT_NO,
        ),
        Some(m) => (format!("size {m} undecided ({limit}); best found {}", r.lower), EXIT_UNKNOWN),
    }
}

fn search(cfg: &SearchConfig, binary_fast: bool, out: Option<&Path>) -> Result<Outcome> {
    let r = if binary_fast {
        sigma_binary_fast(cfg)?
    } else {
        sigma_exact(cfg)?
    };
    let (line, exit) = search_summary(&r);
    let mut t = String::new();
    writeln!(t, "mode: {}", if binary_fast { "binary-fast" } else { "cover" })?;
    writeln!(t, "{line}")?;
    let words: Vec<String> = r.witness.words().iter().map(|w| w.to_string()).collect();
    writeln!(t, "witness ({} words): {}", words.len(), words.join(" "))?;
    let mut files = Vec::new();
    if let Some(path) = out {
        write_file(path, &format_code(&r.witness))?;
        writeln!(t, "wrote {}", path.display())?;
        files.push(path.to_path_buf());
    }
    let mut result = r.to_json();
    let mut stats = serde_json::Map::new();
    for key in ["nodes", "cover_calls", "cover_unknowns", "elapsed_ms"] {
        if let Some(v) = result.as_object_mut().and_then(|m| m.remove(key)) {
            stats.insert(key.to_string(), v);
        }
    }
    Ok(Outcome {
        text: t,
        exit,
        parameters: json!({
            "params": params_json(&cfg.params),
            "binary_fast": binary_fast,
            "target": cfg.target,
            "symmetry": cfg.symmetry,
            "node_limit": cfg.node_limit,
            "time_limit_s": cfg.time_limit.map(|d| d.as_secs_f64()),
            "seeds": cfg.seeds.len(),
            "greedy": cfg.greedy_seed,
        }),
        result,
        stats: Value::Object(stats),
        files,
    })
}

fn bounds(s: usize, a: usize, lp: bool) -> Result<Outcome> {
    let params = NetworkParams::new(s, a)?;
    let report = bound_report(&params, lp);
    let mut t = String::new();
    writeln!(t, "upper bounds on σ(N_{s},{a})")?;
    writeln!(t, "{:<18} {:>10}  source", "name", "value")?;
    for e in &report.entries {
        let value = match (e.value, e.applicable) {
            (Some(v), true) => v.to_string(),
            (Some(v), false) => format!("({v})"),
            (None, _) => "-".to_string(),
        };
        write!(t, "{:<18} {:>10}  {}", e.name, value, e.source)?;
        if !e.note.is_empty() {
            write!(t, " [{}]", e.note)?;
        }
        writeln!(t)?;
    }
    match report.combined {
        Some(v) => writeln!(t, "combined: {v}")?,
        None => writeln!(t, "combined: none")?,
    }
    Ok(Outcome {
        text: t,
        exit: EXIT_OK,
        parameters: json!({"s": s, "a": a, "lp": lp}),
        result: serde_json::to_value(&report)?,
        stats: Value::Null,
        files: Vec::new(),
    })
}

fn lp_bound(s: usize, a: usize, options: LpBoundOptions) -> Result<Outcome> {
    let b = sigma_lp_bound(s, a, options)?;
    let mut t = String::new();
    writeln!(t, "σ(N_{s},{a}) <= {}", b.value)?;
    writeln!(t, "tail length {}, min B_2 = {}, Λ >= {}", b.tail_length, b.min_b2, b.lambda)?;
    writeln!(t, "options: s2_cut = {}, integrality = {}", options.s2_cut, options.integrality)?;
    Ok(Outcome {
        text: t,
        exit: EXIT_OK,
        parameters: json!({"s": s, "a": a, "options": options}),
        result: json!({
            "value": b.value,
            "tail_length": b.tail_length,
            "min_b2": b.min_b2.to_string(),
            "lambda": b.lambda.to_string(),
        }),
        stats: Value::Null,
        files: Vec::new(),
    })
}

fn delsarte(n: usize, q: usize, d: usize) -> Result<Outcome> {
    let b = delsarte_lp_max(n, q, d)?;
    let dist: Vec<String> = b.solution.b.iter().map(|x| x.to_string()).collect();
    let dual: Vec<String> = b.solution.dual.iter().map(|x| x.to_string()).collect();
    let mut t = String::new();
    writeln!(t, "A_{q}({n},{d}) <= {} (LP optimum {})", b.bound, b.value)?;
    writeln!(t, "B  = ({})", dist.join(", "))?;
    writeln!(t, "B' = ({})", dual.join(", "))?;
    Ok(Outcome {
        text: t,
        exit: EXIT_OK,
        parameters: json!({"n": n, "q": q, "d": d}),
        result: json!({"bound": b.bound.to_string(), "value": b.value.to_string(), "b": dist, "dual": dual}),
        stats: Value::Null,
        files: Vec::new(),
    })
}

struct Cell {
    s: usize,
    a: usize,
    lower: usize,
    lower_from: String,
    upper: Option<u128>,
    upper_from: String,
    /// Upper bound without the length-3 Λ bound, when that bound decides the cell.
    len3_free_upper: Option<u128>,
}

fn table_cell(s: usize, a: usize, search_limit: Option<Duration>, lp: bool, ctx: &Context) -> Result<Cell> {
    let params = NetworkParams::new(s, a)?;
    let mut lower = 1usize;
    let mut lower_from = "trivial".to_string();
    let fixture = fixtures::best_lower_bound(s, a);
    if let Some((v, f)) = fixture {
        lower = v;
        lower_from = format!("fixture {}", f.name);
    }

    let report = bound_report(&params, lp);
    let mut upper = report.combined;
    let mut upper_from = report
        .entries
        .iter()
        .filter(|e| e.applicable && e.value.is_some() && e.value == report.combined)
        .map(|e| e.name)
        .collect::<Vec<_>>()
        .join(", ");

    // The length-3 Λ bound behind the s = 2 entries fails for some correctable
    // codes, so keep the bound that does without it.
    let mut len3_free = (s == 2).then(|| {
        let plain = report
            .entries
            .iter()
            .filter(|e| e.applicable && e.name != "closed-form(s=2)" && e.name != "lp")
            .filter_map(|e| e.value)
            .min();
        let options = LpBoundOptions {
            s2_cut: false,
            integrality: false,
        };
        let lp_plain = lp
            .then(|| sigma_lp_bound(s, a, options).ok().map(|b| b.value as u128))
            .flatten();
        plain.into_iter().chain(lp_plain).min()
    });

    let words = (a as u128).checked_pow((s + 2) as u32).unwrap_or(u128::MAX);
    if let (Some(limit), true) = (search_limit, words <= TABLE_SEARCH_WORDS) {
        let mut cfg = SearchConfig::new(params);
        cfg.time_limit = Some(limit);
        cfg.greedy_seed = true;
        cfg.cover = ctx.cover()?;
        if let Some((_, f)) = fixture {
            cfg.seeds.push(f.code()?);
        }
        let r = if a == 2 { sigma_binary_fast(&cfg)? } else { sigma_exact(&cfg)? };
        if r.lower > lower {
            lower = r.lower;
            lower_from = "search".into();
        }
        if let Some(u) = r.upper {
            if upper.map_or(true, |x| (u as u128) < x) {
                upper = Some(u as u128);
                upper_from = "exhaustive search".into();
            } else if upper == Some(u as u128) {
                upper_from.push_str(", exhaustive search");
            }
            if let Some(Some(v)) = len3_free.as_mut() {
                *v = (*v).min(u as u128);
            }
        }
    }
    let len3_free_upper = len3_free.flatten().filter(|&v| Some(v) != upper);
    Ok(Cell {
        s,
        a,
        lower,
        lower_from,
        upper,
        upper_from,
        len3_free_upper,
    })
}

fn table(
    s_range: (usize, usize),
    a_range: (usize, usize),
    search_seconds: f64,
    lp: bool,
    ctx: &Context,
) -> Result<Outcome> {
    let limit = if search_seconds == 0.0 {
        None
    } else {
        Some(seconds(search_seconds)?)
    };
    let mut t = String::new();
    writeln!(t, "{:>3} {:>3}  {:<12} {:<24} upper from", "s", "a", "σ(N_s,a)", "lower from")?;
    let mut rows = Vec::new();
    let mut marked = Vec::new();
    for a in a_range.0..=a_range.1 {
        for s in s_range.0..=s_range.1 {
            let c = table_cell(s, a, limit, lp, ctx)?;
            let mut shown = match c.upper {
                Some(u) if u == c.lower as u128 => u.to_string(),
                Some(u) => format!("{}–{u}", c.lower),
                None => format!(">={}", c.lower),
            };
            if let Some(v) = c.len3_free_upper {
                shown.push('*');
                marked.push(format!("({},{}) <= {v}", c.s, c.a));
            }
            writeln!(t, "{:>3} {:>3}  {:<12} {:<24} {}", c.s, c.a, shown, c.lower_from, c.upper_from)?;
            rows.push(json!({
                "s": c.s, "a": c.a, "lower": c.lower, "upper": c.upper.map(|u| u.to_string()),
                "display": shown, "lower_from": c.lower_from, "upper_from": c.upper_from,
                "upper_without_len3": c.len3_free_upper.map(|u| u.to_string()),
            }));
        }
    }
    if !marked.is_empty() {
        writeln!(
            t,
            "* upper bound rests on Λ >= |C|(|C|-a) for tails of length 3, which fails for some \
             correctable codes; without it: {}",
            marked.join(", ")
        )?;
    }
    Ok(Outcome {
        text: t,
        exit: EXIT_OK,
        parameters: json!({"s": s_range, "a": a_range, "search_seconds": search_seconds, "lp": lp}),
        result: json!({"rows": rows}),
        stats: Value::Null,
        files: Vec::new(),
    })
}

fn sweep(files: &[PathBuf], heads: &[usize], ctx: &Context) -> Result<Outcome> {
    let choice = if heads.is_empty() {
        HeadChoice::All
    } else {
        HeadChoice::Only(heads.to_vec())
    };
    let reports = sweep_external_codes(files, &choice, ctx.cover()?);
    let mut t = String::new();
    for r in &reports {
        match (&r.error, r.length, r.size) {
            (Some(e), ..) => {
                writeln!(t, "{}: error: {e}", r.name)?;
                continue;
            }
            (None, Some(n), Some(m)) => writeln!(t, "{}: n = {n}, |C| = {m}", r.name)?,
            _ => writeln!(t, "{}:", r.name)?,
        }
        for h in &r.heads {
            let verdict = match h.correctable {
                Some(true) => format!("correctable (|𝔅| = {})", h.cover_size.unwrap_or(0)),
                Some(false) => "not correctable".to_string(),
                None => "unknown".to_string(),
            };
            writeln!(t, "  head {}: {verdict}", h.head)?;
        }
        let summary = if r.all_correctable() {
            "every head choice is correctable"
        } else if r.none_correctable() {
            "no head choice is correctable"
        } else {
            "mixed"
        };
        writeln!(t, "  summary: {summary}")?;
    }
    Ok(Outcome {
        text: t,
        exit: EXIT_OK,
        parameters: json!({"files": files, "heads": heads}),
        result: serde_json::to_value(&reports)?,
        stats: Value::Null,
        files: Vec::new(),
    })
}

fn fixtures_cmd(verify: bool, export: Option<&Path>) -> Result<Outcome> {
    let mut t = String::new();
    let mut list = Vec::new();
    let mut files = Vec::new();
    for f in fixtures::ALL {
        let code = f.code()?;
        let p = f.params()?;
        writeln!(t, "{:<18} s = {}, a = {}, |C| = {}", f.name, p.s, p.a, code.len())?;
        list.push(json!({"name": f.name, "s": p.s, "a": p.a, "size": code.len(), "sigma_witness": f.certifies_sigma()}));
        if let Some(dir) = export {
            std::fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
            let path = dir.join(format!("{}.code", f.name));
            write_file(&path, &format_code(&code))?;
            files.push(path);
        }
    }
    let mut exit = EXIT_OK;
    let mut reports = Value::Null;
    if verify {
        let r = verify_fixture_codes()?;
        for rep in &r {
            writeln!(
                t,
                "verify {:<18} {} (|𝔅| = {}, {} transmissions)",
                rep.name,
                if rep.ok { "ok" } else { "FAILED" },
                rep.cover_size.unwrap_or(0),
                rep.adversary_checked
            )?;
            if !rep.ok {
                exit = EXIT_NO;
            }
        }
        reports = serde_json::to_value(&r)?;
    }
    if let Some(dir) = export {
        writeln!(t, "exported {} files to {}", files.len(), dir.display())?;
    }
    Ok(Outcome {
        text: t,
        exit,
        parameters: json!({"verify": verify, "export": export}),
        result: json!({"fixtures": list, "verification": reports}),
        stats: Value::Null,
        files,
    })
}

fn replay(path: &Path, check: bool) -> Result<Outcome> {
    let rec = RunRecord::read(path)?;
    if rec.argv.first().is_some_and(|c| c == "replay") {
        bail!("{} records a replay; replay the original record instead", path.display());
    }
    let (o, json) = crate::run_args(&rec.argv).map_err(|(msg, _)| anyhow!("replay failed: {msg}"))?;
    let text = o.rendered(json);
    let same = text == rec.output && o.exit == rec.exit_code;
    let exit = if check && !same { EXIT_NO } else { o.exit };
    if check && !same {
        eprintln!("replay output differs from {}", path.display());
    }
    Ok(Outcome {
        text,
        exit,
        parameters: json!({"record": path, "check": check}),
        result: json!({"matches": same, "result": o.result}),
        stats: o.stats,
        files: o.files,
    })
}
