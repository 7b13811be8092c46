//! Explicit network codes (F_V1, F_V2), the terminal decoder and an
//! exhaustive single-edge adversary.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cover::{Block, CoverFamily};
use crate::error::{Error, Result};
use crate::model::{checked_pow, Code, NetworkParams, Symbol, Word, MAX_DENSE_TABLE};
use crate::tau::{distinct_heads, TauTable};

/// A network edge: `E(i)` leaves the source, `F(i)` enters the terminal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Edge {
    E(usize),
    F(usize),
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Edge::E(i) => write!(f, "e{i}"),
            Edge::F(i) => write!(f, "f{i}"),
        }
    }
}

impl FromStr for Edge {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Invalid(format!("edge {s:?} is not of the form e<i> or f<i>"));
        let (kind, rest) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(i, _)| i));
        let idx: usize = rest.trim_start_matches('_').parse().map_err(|_| bad())?;
        match kind {
            "e" | "E" => Ok(Edge::E(idx)),
            "f" | "F" => Ok(Edge::F(idx)),
            _ => Err(bad()),
        }
    }
}

/// Replace the symbol on one edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Attack {
    pub edge: Edge,
    pub symbol: Symbol,
}

impl fmt::Display for Attack {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.edge, self.symbol)
    }
}

impl FromStr for Attack {
    type Err = Error;

    /// `e1=2`, `e1:2` or `e1->2`.
    fn from_str(s: &str) -> Result<Self> {
        let (edge, sym) = s
            .split_once("->")
            .or_else(|| s.split_once('='))
            .or_else(|| s.split_once(':'))
            .ok_or_else(|| Error::Invalid(format!("attack {s:?} is not of the form e<i>=<symbol>")))?;
        let symbol = sym
            .trim()
            .parse::<Symbol>()
            .map_err(|_| Error::Invalid(format!("attack symbol {sym:?} is not a number")))?;
        Ok(Attack {
            edge: edge.parse()?,
            symbol,
        })
    }
}

/// What the terminal sees: F_V1 of the head and the V_2 output state.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChannelOutcome {
    pub head: Symbol,
    pub state: Word,
}

impl fmt::Display for ChannelOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.head, self.state)
    }
}

/// The triple (F_V1, F_V2, π) for a code on N_s.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NetworkCode {
    params: NetworkParams,
    code: Code,
    /// 𝔅'' in state order: `pi[j]` is the preimage of state j.
    pi: Vec<Block>,
    fv1: Vec<Symbol>,
    /// State index for every tail index.
    fv2: Vec<usize>,
}

fn state_space(params: &NetworkParams) -> Result<usize> {
    let n = params.state_count()?;
    usize::try_from(n).map_err(|_| Error::TooLarge(n))
}

fn tail_space(params: &NetworkParams) -> Result<usize> {
    let n = checked_pow(params.a, params.tail_len())?;
    if n > MAX_DENSE_TABLE {
        return Err(Error::TooLarge(n));
    }
    Ok(n as usize)
}

impl NetworkCode {
    /// Builds F_V2 from a cover: π numbers the singletons in code order and
    /// then the blocks in canonical order, states in lexicographic order.
    pub fn build(code: &Code, params: &NetworkParams, cover: &CoverFamily) -> Result<Self> {
        code.check_params(params)?;
        let table = TauTable::build(code)?;
        cover.verify(code, params)?;

        let mut blocks: Vec<Block> = cover
            .blocks
            .iter()
            .filter(|b| b.0.len() >= 2)
            .cloned()
            .collect();
        blocks.sort();
        blocks.dedup();

        let states = params.state_count()?;
        let needed = (code.len() + blocks.len()) as u128;
        if needed > states {
            return Err(Error::TooManyStates {
                needed,
                available: states,
            });
        }

        let mut pi: Vec<Block> = (0..code.len()).map(|i| Block(vec![i])).collect();
        pi.extend(blocks.iter().cloned());
        let first_block = code.len();

        let mut fv2 = Vec::with_capacity(table.len());
        for idx in 0..table.len() {
            let t = table.get_by_index(idx);
            let state = match t.len() {
                0 => 0,
                1 => t[0],
                _ => {
                    let j = blocks
                        .iter()
                        .position(|b| b.contains_all(t))
                        .ok_or_else(|| {
                            Error::InvalidCover(format!("no block contains τ-set {t:?}"))
                        })?;
                    first_block + j
                }
            };
            fv2.push(state);
        }
        let fv1 = (0..params.a as Symbol).collect();
        Self::assemble(*params, code.clone(), pi, fv1, fv2)
    }

    /// Assembles a network code from explicit tables without checking that
    /// it corrects anything. `pi[j]` is the preimage of state j.
    pub fn from_parts(
        params: NetworkParams,
        code: Code,
        pi: Vec<Block>,
        fv1: Vec<Symbol>,
        fv2: Vec<usize>,
    ) -> Result<Self> {
        code.check_params(&params)?;
        Self::assemble(params, code, pi, fv1, fv2)
    }

    fn assemble(
        params: NetworkParams,
        code: Code,
        pi: Vec<Block>,
        fv1: Vec<Symbol>,
        fv2: Vec<usize>,
    ) -> Result<Self> {
        if code.is_empty() {
            return Err(Error::EmptyCode);
        }
        let states = state_space(&params)?;
        if fv1.len() != params.a || fv1.iter().any(|&x| x as usize >= params.a) {
            return Err(Error::Invalid("F_V1 must map the alphabet into itself".into()));
        }
        if fv2.len() != tail_space(&params)? {
            return Err(Error::Invalid(format!(
                "F_V2 table has {} rows, expected a^(s+1)",
                fv2.len()
            )));
        }
        if let Some(&bad) = fv2.iter().find(|&&x| x >= states) {
            return Err(Error::Invalid(format!("F_V2 state {bad} out of range")));
        }
        if pi.len() > states {
            return Err(Error::TooManyStates {
                needed: pi.len() as u128,
                available: states as u128,
            });
        }
        for b in &pi {
            if b.0.is_empty() || b.0.iter().any(|&i| i >= code.len()) {
                return Err(Error::Invalid(format!("π preimage {:?} is not a block of C", b.0)));
            }
        }
        Ok(NetworkCode {
            params,
            code,
            pi,
            fv1,
            fv2,
        })
    }

    pub fn params(&self) -> &NetworkParams {
        &self.params
    }

    pub fn code(&self) -> &Code {
        &self.code
    }

    /// Blocks of 𝔅'' in state order.
    pub fn pi(&self) -> &[Block] {
        &self.pi
    }

    pub fn fv1(&self) -> &[Symbol] {
        &self.fv1
    }

    pub fn fv2_table(&self) -> &[usize] {
        &self.fv2
    }

    pub fn states_used(&self) -> usize {
        self.pi.len()
    }

    pub fn state_word(&self, state: usize) -> Word {
        Word::from_index(state, self.params.a, self.params.s_out)
    }

    /// π(B) for a block of 𝔅''.
    pub fn state_of(&self, block: &[usize]) -> Option<usize> {
        self.pi.iter().position(|b| b.0 == block)
    }

    pub fn fv2(&self, tail: &Word) -> Result<usize> {
        if tail.len() != self.params.tail_len() {
            return Err(Error::LengthMismatch {
                expected: self.params.tail_len(),
                found: tail.len(),
            });
        }
        Ok(self.fv2[tail.to_index(self.params.a)])
    }

    /// Sends `c` with at most one manipulated source edge.
    pub fn transmit(&self, c: &Word, attack: Option<Attack>) -> Result<ChannelOutcome> {
        if !self.code.contains(c) {
            return Err(Error::NotACodeword(c.to_string()));
        }
        let mut sent = c.symbols().to_vec();
        if let Some(att) = attack {
            match att.edge {
                Edge::F(_) => return Err(Error::EdgeOutsideAdversary(att.edge.to_string())),
                Edge::E(i) if i >= sent.len() => {
                    return Err(Error::Params(format!(
                        "edge e{i} does not exist (source has e0..e{})",
                        sent.len() - 1
                    )))
                }
                Edge::E(i) => {
                    if att.symbol as usize >= self.params.a {
                        return Err(Error::SymbolOutOfRange {
                            symbol: att.symbol,
                            alphabet: self.params.a,
                        });
                    }
                    sent[i] = att.symbol;
                }
            }
        }
        Ok(self.observe(&sent))
    }

    fn observe(&self, received: &[Symbol]) -> ChannelOutcome {
        let state = self.observe_index(received);
        ChannelOutcome {
            head: self.fv1[received[0] as usize],
            state: self.state_word(state),
        }
    }

    fn observe_index(&self, received: &[Symbol]) -> usize {
        let a = self.params.a;
        let tail = received[1..]
            .iter()
            .fold(0usize, |acc, &x| acc * a + x as usize);
        self.fv2[tail]
    }

    /// Terminal decoder F_T.
    pub fn decode(&self, outcome: &ChannelOutcome) -> Result<Word> {
        if outcome.state.len() != self.params.s_out {
            return Err(Error::LengthMismatch {
                expected: self.params.s_out,
                found: outcome.state.len(),
            });
        }
        let state = outcome.state.to_index(self.params.a);
        self.decode_index(outcome.head, state)
            .map(|i| self.code.words()[i].clone())
    }

    fn decode_index(&self, head: Symbol, state: usize) -> Result<usize> {
        // States outside π's image cannot arise from a codeword.
        let Some(block) = self.pi.get(state).map(|b| &b.0) else {
            return Ok(0);
        };
        if block.len() == 1 {
            return Ok(block[0]);
        }
        block
            .iter()
            .copied()
            .find(|&i| self.fv1[self.code.words()[i].head() as usize] == head)
            .ok_or(Error::NonCodewordTraffic { state, head })
    }

    /// Every state index reachable from `c` under at most one source-edge
    /// substitution, paired with its attack (None = no attack).
    fn fan_out(&self, c: &Word) -> Vec<(Option<Attack>, Symbol, usize)> {
        let mut out = Vec::with_capacity(1 + c.len() * (self.params.a - 1));
        let mut buf = c.symbols().to_vec();
        let eval = |buf: &[Symbol]| (self.fv1[buf[0] as usize], self.observe_index(buf));
        let (h, s) = eval(&buf);
        out.push((None, h, s));
        for i in 0..buf.len() {
            let orig = buf[i];
            for x in 0..self.params.a as Symbol {
                if x == orig {
                    continue;
                }
                buf[i] = x;
                let (h, s) = eval(&buf);
                out.push((
                    Some(Attack {
                        edge: Edge::E(i),
                        symbol: x,
                    }),
                    h,
                    s,
                ));
            }
            buf[i] = orig;
        }
        out
    }

    /// Exhaustive check over every codeword, the unattacked transmission and
    /// all (s+2)(a-1) single-edge substitutions: the decoder must return the
    /// sent codeword, and fan-out sets of distinct codewords must be disjoint.
    pub fn verify_correcting(&self) -> Verification {
        let mut owner: HashMap<(Symbol, usize), usize> = HashMap::new();
        let mut checked = 0u64;
        for (ci, c) in self.code.words().iter().enumerate() {
            for (attack, head, state) in self.fan_out(c) {
                checked += 1;
                let outcome = || ChannelOutcome {
                    head,
                    state: self.state_word(state),
                };
                match self.decode_index(head, state) {
                    Ok(d) if d == ci => {}
                    Ok(d) => {
                        return Verification::failed(
                            checked,
                            Counterexample {
                                codeword: c.clone(),
                                attack,
                                outcome: outcome(),
                                reason: Violation::WrongDecode(self.code.words()[d].clone()),
                            },
                        )
                    }
                    Err(_) => {
                        return Verification::failed(
                            checked,
                            Counterexample {
                                codeword: c.clone(),
                                attack,
                                outcome: outcome(),
                                reason: Violation::Undecodable,
                            },
                        )
                    }
                }
                let prev = *owner.entry((head, state)).or_insert(ci);
                if prev != ci {
                    return Verification::failed(
                        checked,
                        Counterexample {
                            codeword: c.clone(),
                            attack,
                            outcome: outcome(),
                            reason: Violation::SharedOutcome(self.code.words()[prev].clone()),
                        },
                    );
                }
            }
        }
        Verification {
            correct: true,
            checked,
            counterexample: None,
        }
    }

    /// Tails sharing an F_V2 state never have τ-sets whose union repeats a head.
    pub fn check_state_heads(&self) -> Result<()> {
        let table = TauTable::build_unchecked(&self.code)?;
        let mut unions: HashMap<usize, Vec<usize>> = HashMap::new();
        for (idx, &state) in self.fv2.iter().enumerate() {
            unions
                .entry(state)
                .or_default()
                .extend_from_slice(table.get_by_index(idx));
        }
        for (state, mut members) in unions {
            members.sort_unstable();
            members.dedup();
            if !distinct_heads(&self.code, &members) {
                return Err(Error::Invalid(format!(
                    "state {} collects codewords {members:?} with a repeated head",
                    self.state_word(state)
                )));
            }
        }
        Ok(())
    }

    /// For c in C and c' in the radius-1 closure of C with c' != c and
    /// F_V2(c_2) = F_V2(c_2'), the τ-set of c_2' is exactly {c}.
    pub fn check_singleton_states(&self) -> Result<()> {
        let table = TauTable::build_unchecked(&self.code)?;
        let a = self.params.a;
        let closure = self.code.ball_closure();
        for (ci, c) in self.code.words().iter().enumerate() {
            let own = self.fv2[c.tail().to_index(a)];
            for other in closure.iter().filter(|w| *w != c) {
                let t = other.tail().to_index(a);
                if self.fv2[t] == own && table.get_by_index(t) != &vec![ci] {
                    return Err(Error::Invalid(format!(
                        "{other} shares the state of codeword {c} but τ = {:?}",
                        table.get_by_index(t)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn to_file(&self) -> NetworkCodeFile {
        let a = self.params.a;
        let tail_len = self.params.tail_len();
        NetworkCodeFile {
            s: self.params.s,
            a,
            s_out: self.params.s_out,
            code: self.code.words().to_vec(),
            pi: self
                .pi
                .iter()
                .enumerate()
                .map(|(j, b)| PiEntry {
                    state: self.state_word(j),
                    block: b.clone(),
                })
                .collect(),
            fv1: self.fv1.clone(),
            fv2: self
                .fv2
                .iter()
                .enumerate()
                .map(|(t, &st)| Fv2Row {
                    tail: Word::from_index(t, a, tail_len),
                    state: self.state_word(st),
                })
                .collect(),
        }
    }

    pub fn from_file(file: &NetworkCodeFile) -> Result<Self> {
        let params = NetworkParams::with_s_out(file.s, file.a, file.s_out)?;
        let code = Code::with_length(file.a, params.word_len(), file.code.clone())?;
        if code.len() != file.code.len() {
            return Err(Error::Invalid("code lists a word twice".into()));
        }
        let states = state_space(&params)?;
        let mut pi_by_state: Vec<Option<Block>> = vec![None; file.pi.len()];
        for e in &file.pi {
            let st = check_state(&e.state, &params)?;
            if st >= states {
                return Err(Error::Invalid(format!("state {} out of range", e.state)));
            }
            if st >= pi_by_state.len() {
                return Err(Error::Invalid(format!(
                    "π states must be the first {} states in order",
                    file.pi.len()
                )));
            }
            if pi_by_state[st].replace(e.block.clone()).is_some() {
                return Err(Error::Invalid(format!("π assigns state {} twice", e.state)));
            }
        }
        let pi: Vec<Block> = pi_by_state.into_iter().map(|b| b.expect("filled")).collect();
        let rows = tail_space(&params)?;
        let mut fv2 = vec![usize::MAX; rows];
        for r in &file.fv2 {
            if r.tail.len() != params.tail_len()
                || r.tail.symbols().iter().any(|&x| x as usize >= params.a)
            {
                return Err(Error::Invalid(format!("bad F_V2 tail {}", r.tail)));
            }
            fv2[r.tail.to_index(params.a)] = check_state(&r.state, &params)?;
        }
        if let Some(missing) = fv2.iter().position(|&x| x == usize::MAX) {
            return Err(Error::Invalid(format!(
                "F_V2 has no row for tail {}",
                Word::from_index(missing, params.a, params.tail_len())
            )));
        }
        Self::from_parts(params, code, pi, file.fv1.clone(), fv2)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: NetworkCodeFile = serde_json::from_str(text)
            .map_err(|e| Error::Invalid(format!("network code JSON: {e}")))?;
        Self::from_file(&file)
    }
}

fn check_state(w: &Word, params: &NetworkParams) -> Result<usize> {
    if w.len() != params.s_out || w.symbols().iter().any(|&x| x as usize >= params.a) {
        return Err(Error::Invalid(format!("bad state word {w}")));
    }
    Ok(w.to_index(params.a))
}

/// On-disk form of a network code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NetworkCodeFile {
    pub s: usize,
    pub a: usize,
    pub s_out: usize,
    pub code: Vec<Word>,
    pub pi: Vec<PiEntry>,
    pub fv1: Vec<Symbol>,
    pub fv2: Vec<Fv2Row>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiEntry {
    pub state: Word,
    pub block: Block,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fv2Row {
    pub tail: Word,
    pub state: Word,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    WrongDecode(Word),
    Undecodable,
    /// The outcome is also produced by this other codeword.
    SharedOutcome(Word),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub codeword: Word,
    pub attack: Option<Attack>,
    pub outcome: ChannelOutcome,
    pub reason: Violation,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let attack = self
            .attack
            .map_or_else(|| "no attack".to_string(), |a| a.to_string());
        write!(f, "sent {} with {attack}, observed {}: ", self.codeword, self.outcome)?;
        match &self.reason {
            Violation::WrongDecode(w) => write!(f, "decoded {w}"),
            Violation::Undecodable => write!(f, "decoder rejected the observation"),
            Violation::SharedOutcome(w) => write!(f, "also reachable from {w}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verification {
    pub correct: bool,
    /// Transmissions examined before stopping.
    pub checked: u64,
    pub counterexample: Option<Counterexample>,
}

impl Verification {
    fn failed(checked: u64, cx: Counterexample) -> Self {
        Verification {
            correct: false,
            checked,
            counterexample: Some(cx),
        }
    }
}

/// Fan-out disjointness for arbitrary tables: F_V1 on symbols and F_V2 on
/// tail indices (states < a^{s_out}). No decoder is involved.
pub fn channel_is_correcting(
    params: &NetworkParams,
    code: &Code,
    fv1: &[Symbol],
    fv2: &[usize],
) -> bool {
    let a = params.a;
    let Ok(states) = state_space(params) else {
        return false;
    };
    let mut owner: HashMap<usize, usize> = HashMap::new();
    for (ci, c) in code.words().iter().enumerate() {
        let mut buf = c.symbols().to_vec();
        let mut claim = |buf: &[Symbol]| {
            let tail = buf[1..].iter().fold(0usize, |acc, &x| acc * a + x as usize);
            let key = fv1[buf[0] as usize] as usize * states + fv2[tail];
            *owner.entry(key).or_insert(ci) == ci
        };
        if !claim(&buf) {
            return false;
        }
        for i in 0..buf.len() {
            let orig = buf[i];
            for x in 0..a as Symbol {
                if x != orig {
                    buf[i] = x;
                    if !claim(&buf) {
                        return false;
                    }
                }
            }
            buf[i] = orig;
        }
    }
    true
}
