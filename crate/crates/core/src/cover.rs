//! Covering characterization of 1-error correctable codes on N_s.
//!
//! A code C with d(C) >= 3 is correctable iff some family of blocks (subsets
//! of C with pairwise distinct heads) of size at most a^{s_out} - |C| covers
//! every τ-set with two or more members. Only inclusion-maximal τ-sets need
//! covering. Two τ-sets fit in one block iff their union keeps distinct
//! heads, and since a head clash always involves exactly two codewords, a
//! group of τ-sets fits in one block iff it is pairwise compatible. The
//! minimum family is therefore a minimum clique cover of the compatibility
//! graph, solved here as an exact coloring of its complement.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{Code, Distance, NetworkParams};
use crate::tau::{distinct_heads, maximal_sets, sparse_multi_sets, TauSet, TauTable};

pub const DEFAULT_NODE_LIMIT: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoverOptions {
    /// Branch nodes before the exact solver gives up with `Unknown`.
    pub node_limit: u64,
    /// Wall-clock cutoff; past it the exact solver gives up with `Unknown`.
    pub deadline: Option<Instant>,
}

impl Default for CoverOptions {
    fn default() -> Self {
        CoverOptions {
            node_limit: DEFAULT_NODE_LIMIT,
            deadline: None,
        }
    }
}

/// A subset of codeword indices with pairwise distinct heads.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Block(pub Vec<usize>);

impl Block {
    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn contains_all(&self, set: &[usize]) -> bool {
        crate::tau::is_subset(set, &self.0)
    }
}

/// The witness family 𝔅 together with its budget a^{s_out} - |C|.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverFamily {
    pub blocks: Vec<Block>,
    pub budget: usize,
}

impl CoverFamily {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Re-checks budget, block validity and coverage of every τ-set of size >= 2.
    pub fn verify(&self, code: &Code, params: &NetworkParams) -> Result<()> {
        let budget = budget(code, params)?;
        if budget != self.budget as i128 {
            return Err(Error::InvalidCover(format!(
                "recorded budget {} differs from a^s_out - |C| = {budget}",
                self.budget
            )));
        }
        if self.blocks.len() > self.budget {
            return Err(Error::InvalidCover(format!(
                "{} blocks exceed the budget {}",
                self.blocks.len(),
                self.budget
            )));
        }
        for b in &self.blocks {
            if b.0.is_empty() || b.0.windows(2).any(|p| p[0] >= p[1]) {
                return Err(Error::InvalidCover(format!("block {:?} is not a sorted set", b.0)));
            }
            if b.0.iter().any(|&i| i >= code.len()) {
                return Err(Error::InvalidCover(format!("block {:?} indexes past the code", b.0)));
            }
            if !distinct_heads(code, &b.0) {
                return Err(Error::InvalidCover(format!("block {:?} repeats a head", b.0)));
            }
        }
        for set in sparse_multi_sets(code.words(), code.alphabet()) {
            if !self.blocks.iter().any(|b| b.contains_all(&set)) {
                return Err(Error::InvalidCover(format!(
                    "τ-set {} is not covered",
                    crate::tau::format_set(&set)
                )));
            }
        }
        Ok(())
    }

    /// JSON-style witness listing blocks (0-based indices) and the budget arithmetic.
    pub fn to_witness_json(&self, code: &Code, params: &NetworkParams) -> serde_json::Value {
        let states = params.state_count().map(|x| x.to_string()).unwrap_or_default();
        serde_json::json!({
            "blocks": self.blocks,
            "block_count": self.blocks.len(),
            "code_size": code.len(),
            "states": states,
            "budget": self.budget,
            "budget_formula": format!("{}^{} - {} = {}", params.a, params.s_out, code.len(), self.budget),
        })
    }
}

/// a^{s_out} - |C|, possibly negative.
pub fn budget(code: &Code, params: &NetworkParams) -> Result<i128> {
    let states = params.state_count()?;
    Ok(states as i128 - code.len() as i128)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Infeasibility {
    /// d(C) < 3.
    MinDistance(Distance),
    /// A single τ-set repeats a head (only possible when d(C) < 3).
    HeadConflict(TauSet),
    /// |C| > a^{s_out}: not even the singleton states fit.
    TooManyCodewords { size: usize, states: u128 },
    /// The minimum cover needs more blocks than the budget allows. `minimum`
    /// is `None` when only the decision was computed.
    OverBudget { minimum: Option<usize>, budget: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoverVerdict {
    Feasible {
        cover: CoverFamily,
        proven_minimum: bool,
    },
    Infeasible(Infeasibility),
    /// Node limit hit before a verdict.
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverResult {
    pub verdict: CoverVerdict,
    pub nodes: u64,
}

impl CoverResult {
    pub fn is_feasible(&self) -> bool {
        matches!(self.verdict, CoverVerdict::Feasible { .. })
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self.verdict, CoverVerdict::Unknown)
    }

    pub fn cover(&self) -> Option<&CoverFamily> {
        match &self.verdict {
            CoverVerdict::Feasible { cover, .. } => Some(cover),
            _ => None,
        }
    }

    fn infeasible(why: Infeasibility) -> Self {
        CoverResult {
            verdict: CoverVerdict::Infeasible(why),
            nodes: 0,
        }
    }
}

/// Vertices are the inclusion-maximal τ-sets of size >= 2; edges join sets
/// whose union still has pairwise distinct heads.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatibilityGraph {
    pub vertices: Vec<TauSet>,
    adjacent: Vec<Vec<bool>>,
}

impl CompatibilityGraph {
    pub fn from_table(table: &TauTable) -> std::result::Result<Self, Infeasibility> {
        Self::from_sets(table.code(), table.maximal_multi_sets())
    }

    pub(crate) fn from_sets(
        code: &Code,
        sets: Vec<TauSet>,
    ) -> std::result::Result<Self, Infeasibility> {
        let vertices = maximal_sets(sets);
        let head_masks: Vec<u64> = vertices
            .iter()
            .map(|s| {
                if !distinct_heads(code, s) {
                    return Err(Infeasibility::HeadConflict(s.clone()));
                }
                Ok(head_mask(code, s))
            })
            .collect::<std::result::Result<_, _>>()?;
        let n = vertices.len();
        let mut adjacent = vec![vec![false; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let ok = union_has_distinct_heads(
                    code,
                    &vertices[i],
                    &vertices[j],
                    head_masks[i],
                    head_masks[j],
                );
                adjacent[i][j] = ok;
                adjacent[j][i] = ok;
            }
        }
        Ok(CompatibilityGraph { vertices, adjacent })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacent[i][j]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.adjacent[i][j])
            .collect()
    }

    /// Complement adjacency lists: sets that must land in different blocks.
    fn conflict_lists(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        (0..n)
            .map(|i| (0..n).filter(|&j| j != i && !self.adjacent[i][j]).collect())
            .collect()
    }

    /// Turns a coloring of the conflict graph into sorted blocks.
    fn blocks_from_coloring(&self, colors: &[usize], count: usize) -> Vec<Block> {
        let mut groups: Vec<Vec<usize>> = vec![Vec::new(); count];
        for (v, &c) in colors.iter().enumerate() {
            groups[c].extend_from_slice(&self.vertices[v]);
        }
        let mut blocks: Vec<Block> = groups
            .into_iter()
            .map(|mut g| {
                g.sort_unstable();
                g.dedup();
                Block(g)
            })
            .collect();
        blocks.sort();
        blocks
    }
}

fn head_mask(code: &Code, set: &[usize]) -> u64 {
    set.iter()
        .fold(0u64, |m, &i| m | 1u64 << code.words()[i].head())
}

fn union_has_distinct_heads(code: &Code, x: &[usize], y: &[usize], mx: u64, my: u64) -> bool {
    if mx & my == 0 {
        return true;
    }
    // Shared heads are fine only when carried by the same codeword.
    let shared = mx & my;
    for &i in x {
        let h = 1u64 << code.words()[i].head();
        if shared & h != 0 {
            let same = y
                .iter()
                .any(|&j| code.words()[j].head() == code.words()[i].head() && j == i);
            if !same {
                return false;
            }
        }
    }
    true
}

/// Minimum-cardinality cover of all τ-sets with at least two members.
pub fn min_cover(table: &TauTable, params: &NetworkParams, options: CoverOptions) -> CoverResult {
    solve(table.code(), params, options, Goal::Minimize, Some(table))
}

/// Theorem-style decision: d(C) >= 3 and a cover within budget exists.
pub fn is_correctable(code: &Code, params: &NetworkParams, options: CoverOptions) -> CoverResult {
    solve(code, params, options, Goal::Minimize, None)
}

/// Like [`is_correctable`] but stops at the first cover within budget.
pub fn decide_correctable(
    code: &Code,
    params: &NetworkParams,
    options: CoverOptions,
) -> CoverResult {
    solve(code, params, options, Goal::Decide, None)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Goal {
    Minimize,
    Decide,
}

fn solve(
    code: &Code,
    params: &NetworkParams,
    options: CoverOptions,
    goal: Goal,
    table: Option<&TauTable>,
) -> CoverResult {
    let d = code.min_distance();
    if !d.at_least(3) {
        return CoverResult::infeasible(Infeasibility::MinDistance(d));
    }
    let budget = match budget(code, params) {
        Ok(b) if b >= 0 => b as usize,
        Ok(_) | Err(_) => {
            return CoverResult::infeasible(Infeasibility::TooManyCodewords {
                size: code.len(),
                states: params.state_count().unwrap_or(u128::MAX),
            })
        }
    };
    let sets = match table {
        Some(t) => t.maximal_multi_sets(),
        None => sparse_multi_sets(code.words(), code.alphabet()),
    };
    let graph = match CompatibilityGraph::from_sets(code, sets) {
        Ok(g) => g,
        Err(why) => return CoverResult::infeasible(why),
    };
    let conflicts = graph.conflict_lists();
    let stop_at = match goal {
        Goal::Minimize => None,
        Goal::Decide => Some(budget),
    };
    let outcome = color_exact(&conflicts, stop_at, options.node_limit, options.deadline);
    let nodes = outcome.nodes;
    let verdict = match outcome.best {
        Some((colors, count)) if count <= budget => CoverVerdict::Feasible {
            cover: CoverFamily {
                blocks: graph.blocks_from_coloring(&colors, count),
                budget,
            },
            proven_minimum: outcome.optimal,
        },
        Some((_, count)) if outcome.optimal => CoverVerdict::Infeasible(Infeasibility::OverBudget {
            minimum: Some(count),
            budget,
        }),
        None if outcome.optimal => CoverVerdict::Infeasible(Infeasibility::OverBudget {
            minimum: None,
            budget,
        }),
        _ if outcome.lower_bound > budget => {
            CoverVerdict::Infeasible(Infeasibility::OverBudget {
                minimum: None,
                budget,
            })
        }
        _ => CoverVerdict::Unknown,
    };
    CoverResult { verdict, nodes }
}

pub(crate) struct ColoringOutcome {
    /// Best coloring found and its color count.
    pub best: Option<(Vec<usize>, usize)>,
    /// The search finished: `best` is minimum, or (in decision mode with no
    /// coloring) no coloring within the target exists.
    pub optimal: bool,
    pub lower_bound: usize,
    pub nodes: u64,
}

/// Exact graph coloring by DSATUR branch and bound.
///
/// With `stop_at = Some(k)` the search only looks for colorings with at most
/// `k` colors and returns on the first one found.
pub(crate) fn color_exact(
    adj: &[Vec<usize>],
    stop_at: Option<usize>,
    node_limit: u64,
    deadline: Option<Instant>,
) -> ColoringOutcome {
    let n = adj.len();
    if n == 0 {
        return ColoringOutcome {
            best: Some((Vec::new(), 0)),
            optimal: true,
            lower_bound: 0,
            nodes: 0,
        };
    }
    let lower_bound = greedy_clique_bound(adj);
    let (greedy, greedy_count) = dsatur_greedy(adj);

    if let Some(k) = stop_at {
        if greedy_count <= k {
            return ColoringOutcome {
                best: Some((greedy, greedy_count)),
                optimal: greedy_count == lower_bound,
                lower_bound,
                nodes: 0,
            };
        }
        if lower_bound > k {
            return ColoringOutcome {
                best: None,
                optimal: true,
                lower_bound,
                nodes: 0,
            };
        }
    }
    if greedy_count == lower_bound {
        return ColoringOutcome {
            best: Some((greedy, greedy_count)),
            optimal: true,
            lower_bound,
            nodes: 0,
        };
    }

    let mut search = Dsatur::new(adj, lower_bound, node_limit, deadline);
    match stop_at {
        Some(k) => {
            search.best_count = k + 1;
            search.stop_on_first = true;
        }
        None => {
            search.best_count = greedy_count;
            search.best = greedy.clone();
        }
    }
    search.run();
    let found = search.found_any;
    let aborted = search.aborted;
    let nodes = search.nodes;
    let best = match stop_at {
        Some(_) if found => Some((search.best, search.best_count)),
        Some(_) => None,
        None => Some((search.best, search.best_count)),
    };
    let optimal = match stop_at {
        // A first hit in decision mode answers the question but is not
        // necessarily minimum.
        Some(_) => !aborted && !found,
        None => !aborted,
    };
    let optimal = optimal || best.as_ref().is_some_and(|b| b.1 == lower_bound);
    ColoringOutcome {
        best,
        optimal,
        lower_bound,
        nodes,
    }
}

fn greedy_clique_bound(adj: &[Vec<usize>]) -> usize {
    let n = adj.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(adj[v].len()), v));
    let mut is_adj = vec![false; n];
    let mut best = 1;
    for &seed in order.iter().take(24) {
        let mut clique = vec![seed];
        for &v in &order {
            if v == seed {
                continue;
            }
            is_adj.iter_mut().for_each(|x| *x = false);
            for &u in &adj[v] {
                is_adj[u] = true;
            }
            if clique.iter().all(|&c| is_adj[c]) {
                clique.push(v);
            }
        }
        best = best.max(clique.len());
    }
    best
}

fn dsatur_greedy(adj: &[Vec<usize>]) -> (Vec<usize>, usize) {
    let n = adj.len();
    let mut colors = vec![usize::MAX; n];
    let mut forbidden: Vec<Vec<bool>> = vec![Vec::new(); n];
    let mut sat = vec![0usize; n];
    let mut used = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v] == usize::MAX)
            .max_by_key(|&v| (sat[v], adj[v].len(), std::cmp::Reverse(v)))
            .expect("uncolored vertex");
        let c = (0..).find(|&c| !forbidden[v].get(c).copied().unwrap_or(false)).unwrap();
        colors[v] = c;
        used = used.max(c + 1);
        for &u in &adj[v] {
            let f = &mut forbidden[u];
            if f.len() <= c {
                f.resize(c + 1, false);
            }
            if !f[c] {
                f[c] = true;
                sat[u] += 1;
            }
        }
    }
    (colors, used)
}

struct Dsatur<'a> {
    adj: &'a [Vec<usize>],
    n: usize,
    colors: Vec<usize>,
    /// counts[v * width + c]: colored neighbors of v with color c.
    counts: Vec<u32>,
    width: usize,
    sat: Vec<usize>,
    best: Vec<usize>,
    best_count: usize,
    lower_bound: usize,
    node_limit: u64,
    deadline: Option<Instant>,
    nodes: u64,
    aborted: bool,
    found_any: bool,
    stop_on_first: bool,
    done: bool,
}

impl<'a> Dsatur<'a> {
    fn new(adj: &'a [Vec<usize>], lower_bound: usize, node_limit: u64, deadline: Option<Instant>) -> Self {
        let n = adj.len();
        Dsatur {
            adj,
            n,
            colors: vec![usize::MAX; n],
            counts: vec![0; n * (n + 1)],
            width: n + 1,
            sat: vec![0; n],
            best: Vec::new(),
            best_count: n + 1,
            lower_bound,
            node_limit,
            deadline,
            nodes: 0,
            aborted: false,
            found_any: false,
            stop_on_first: false,
            done: false,
        }
    }

    fn run(&mut self) {
        self.recurse(0, 0);
    }

    fn pick(&self) -> Option<usize> {
        (0..self.n)
            .filter(|&v| self.colors[v] == usize::MAX)
            .max_by_key(|&v| (self.sat[v], self.adj[v].len(), std::cmp::Reverse(v)))
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.colors[v] = c;
        for &u in &self.adj[v] {
            let slot = &mut self.counts[u * self.width + c];
            if *slot == 0 {
                self.sat[u] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.colors[v] = usize::MAX;
        for &u in &self.adj[v] {
            let slot = &mut self.counts[u * self.width + c];
            *slot -= 1;
            if *slot == 0 {
                self.sat[u] -= 1;
            }
        }
    }

    fn recurse(&mut self, colored: usize, used: usize) {
        if self.done {
            return;
        }
        if colored == self.n {
            self.best = self.colors.clone();
            self.best_count = used;
            self.found_any = true;
            if self.stop_on_first || used <= self.lower_bound {
                self.done = true;
            }
            return;
        }
        let v = self.pick().expect("uncolored vertex");
        // Only colorings strictly better than the incumbent are of interest.
        let limit = (used + 1).min(self.best_count.saturating_sub(1));
        for c in 0..limit {
            if self.counts[v * self.width + c] != 0 {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.node_limit
                || (self.nodes % 4096 == 1 && self.deadline.is_some_and(|d| Instant::now() >= d))
            {
                self.aborted = true;
                self.done = true;
                return;
            }
            self.assign(v, c);
            self.recurse(colored + 1, used.max(c + 1));
            self.unassign(v, c);
            if self.done {
                return;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example2() -> Code {
        Code::parse_words(3, "0000 0111 1012 1120 2021").unwrap()
    }

    fn example3() -> Code {
        Code::parse_words(3, "0000 0111 0222 1012 2021").unwrap()
    }

    fn p(s: usize, a: usize) -> NetworkParams {
        NetworkParams::new(s, a).unwrap()
    }

    #[test]
    fn compatibility_graph_example3() {
        let t = TauTable::build(&example3()).unwrap();
        let g = CompatibilityGraph::from_table(&t).unwrap();
        assert_eq!(
            g.vertices,
            vec![vec![0, 3], vec![0, 4], vec![1, 3, 4], vec![2, 3, 4]]
        );
        assert_eq!(g.edges(), vec![(0, 1)]);
    }

    #[test]
    fn compatibility_graph_example2_has_no_edges() {
        let t = TauTable::build(&example2()).unwrap();
        let g = CompatibilityGraph::from_table(&t).unwrap();
        assert_eq!(g.len(), 4);
        assert!(g.edges().is_empty());
    }

    #[test]
    fn compatibility_graph_empty_without_multi_sets() {
        let c = Code::parse_words(3, "0000").unwrap();
        let t = TauTable::build(&c).unwrap();
        assert!(CompatibilityGraph::from_table(&t).unwrap().is_empty());
    }

    #[test]
    fn head_conflict_is_reported() {
        let c = Code::parse_words(2, "000 011").unwrap();
        let sets = sparse_multi_sets(c.words(), 2);
        assert!(matches!(
            CompatibilityGraph::from_sets(&c, sets),
            Err(Infeasibility::HeadConflict(_))
        ));
    }

    #[test]
    fn min_cover_example2_uses_every_state() {
        let c = example2();
        let t = TauTable::build(&c).unwrap();
        let r = min_cover(&t, &p(2, 3), CoverOptions::default());
        let cover = r.cover().expect("feasible").clone();
        assert_eq!(cover.len(), 4);
        assert_eq!(cover.budget, 4);
        assert_eq!(
            cover.blocks,
            vec![
                Block(vec![0, 2]),
                Block(vec![0, 3, 4]),
                Block(vec![1, 2, 4]),
                Block(vec![1, 3, 4])
            ]
        );
        cover.verify(&c, &p(2, 3)).unwrap();
    }

    #[test]
    fn min_cover_example3_merges_two_sets() {
        let c = example3();
        let t = TauTable::build(&c).unwrap();
        let r = min_cover(&t, &p(2, 3), CoverOptions::default());
        let cover = r.cover().unwrap();
        assert_eq!(cover.len(), 3);
        assert_eq!(c.len() + cover.len(), 8);
        assert!(cover.blocks.contains(&Block(vec![0, 3, 4])));
    }

    #[test]
    fn repetition_code_on_n1_is_over_budget() {
        let c = Code::parse_words(2, "000 111").unwrap();
        let t = TauTable::build(&c).unwrap();
        let r = min_cover(&t, &p(1, 2), CoverOptions::default());
        assert_eq!(
            r.verdict,
            CoverVerdict::Infeasible(Infeasibility::OverBudget {
                minimum: Some(1),
                budget: 0
            })
        );
    }

    #[test]
    fn correctability_examples() {
        assert!(is_correctable(&example2(), &p(2, 3), CoverOptions::default()).is_feasible());
        let close = Code::parse_words(3, "0000 0011").unwrap();
        assert_eq!(
            is_correctable(&close, &p(2, 3), CoverOptions::default()).verdict,
            CoverVerdict::Infeasible(Infeasibility::MinDistance(Distance::Finite(2)))
        );
    }

    #[test]
    fn s_out_variant_changes_budget() {
        // The example3 fixture needs 8 states: a 3-edge binary V_2 output suffices.
        let c = example3();
        let tight = NetworkParams::with_s_out(2, 3, 2).unwrap();
        assert!(is_correctable(&c, &tight, CoverOptions::default()).is_feasible());
        let one = NetworkParams::with_s_out(2, 3, 1).unwrap();
        assert!(matches!(
            is_correctable(&c, &one, CoverOptions::default()).verdict,
            CoverVerdict::Infeasible(Infeasibility::TooManyCodewords { .. })
        ));
    }

    #[test]
    fn verify_rejects_bad_families() {
        let c = example2();
        let params = p(2, 3);
        let missing = CoverFamily {
            blocks: vec![Block(vec![0, 2])],
            budget: 4,
        };
        assert!(missing.verify(&c, &params).is_err());
        let clash = CoverFamily {
            blocks: vec![Block(vec![0, 1])],
            budget: 4,
        };
        assert!(clash.verify(&c, &params).is_err());
    }

    #[test]
    fn exact_coloring_small_graphs() {
        // 5-cycle needs 3 colors, clique bound is 2.
        let c5: Vec<Vec<usize>> = (0..5).map(|i| vec![(i + 4) % 5, (i + 1) % 5]).collect();
        let out = color_exact(&c5, None, 1000, None);
        assert_eq!(out.best.unwrap().1, 3);
        assert!(out.optimal);
        let dec = color_exact(&c5, Some(2), 1000, None);
        assert!(dec.best.is_none() && dec.optimal);
    }

    #[test]
    fn node_limit_yields_unknown() {
        // Mycielski-style graphs defeat the clique bound; with a zero budget
        // of nodes the solver must not claim a verdict.
        let c5: Vec<Vec<usize>> = (0..5).map(|i| vec![(i + 4) % 5, (i + 1) % 5]).collect();
        let out = color_exact(&c5, Some(2), 0, None);
        assert!(out.best.is_none());
        assert!(!out.optimal);
    }

    #[test]
    fn expired_deadline_yields_unknown() {
        let c5: Vec<Vec<usize>> = (0..5).map(|i| vec![(i + 4) % 5, (i + 1) % 5]).collect();
        let past = Some(Instant::now());
        let out = color_exact(&c5, Some(2), 1000, past);
        assert!(out.best.is_none());
        assert!(!out.optimal);
        let decided = color_exact(&c5, Some(2), 1000, None);
        assert!(decided.best.is_none() && decided.optimal);
    }
}
