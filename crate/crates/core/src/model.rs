//! Words, codes and the parameters of the network N_s.
//!
//! Coordinate 0 of a length-(s+2) word is the symbol on edge e_0 (routed
//! through V_1, the "head"); coordinates 1..=s+1 travel on e_1..e_{s+1} into
//! V_2 (the "tail").

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_ALPHABET: usize = 36;

/// Largest table (a^len entries) any dense per-word structure may allocate.
pub const MAX_DENSE_TABLE: u128 = 1 << 24;

pub type Symbol = u8;

fn check_alphabet(a: usize) -> Result<()> {
    if (2..=MAX_ALPHABET).contains(&a) {
        Ok(())
    } else {
        Err(Error::Alphabet(a))
    }
}

/// Parameters of N_s (and its N_{s,s'} variant).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NetworkParams {
    /// Number of V_2 -> T edges; the source has s+2 outgoing edges.
    pub s: usize,
    /// Alphabet size.
    pub a: usize,
    /// Number of V_2 -> T edges in the N_{s,s'} variant; equals `s` for N_s.
    pub s_out: usize,
    /// Adversarial power.
    pub t: usize,
}

impl NetworkParams {
    pub fn new(s: usize, a: usize) -> Result<Self> {
        Self::with_s_out(s, a, s)
    }

    pub fn with_s_out(s: usize, a: usize, s_out: usize) -> Result<Self> {
        if s == 0 {
            return Err(Error::Params("s must be at least 1".into()));
        }
        if s_out == 0 {
            return Err(Error::Params("s_out must be at least 1".into()));
        }
        check_alphabet(a)?;
        Ok(Self { s, a, s_out, t: 1 })
    }

    /// Length of a codeword, |out(S)| = s + 2.
    pub fn word_len(&self) -> usize {
        self.s + 2
    }

    /// Length of a tail, the V_2 input.
    pub fn tail_len(&self) -> usize {
        self.s + 1
    }

    /// Number of distinct V_2 output states, a^{s_out}.
    pub fn state_count(&self) -> Result<u128> {
        checked_pow(self.a, self.s_out)
    }
}

pub(crate) fn checked_pow(base: usize, exp: usize) -> Result<u128> {
    let exp = u32::try_from(exp).map_err(|_| Error::Overflow("power"))?;
    (base as u128).checked_pow(exp).ok_or(Error::Overflow("power"))
}

/// A fixed-length vector of alphabet symbols.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn new(symbols: Vec<Symbol>) -> Self {
        Word(symbols)
    }

    pub fn zero(len: usize) -> Self {
        Word(vec![0; len])
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Symbol sent on e_0.
    pub fn head(&self) -> Symbol {
        self.0[0]
    }

    /// Coordinates 1.. (the V_2 input).
    pub fn tail(&self) -> Word {
        Word(self.0[1..].to_vec())
    }

    pub fn with_head(head: Symbol, tail: &Word) -> Word {
        let mut v = Vec::with_capacity(tail.len() + 1);
        v.push(head);
        v.extend_from_slice(&tail.0);
        Word(v)
    }

    pub fn max_symbol(&self) -> Option<Symbol> {
        self.0.iter().copied().max()
    }

    /// Base-`a` index with coordinate 0 most significant, so index order is
    /// lexicographic order.
    pub fn to_index(&self, a: usize) -> usize {
        self.0.iter().fold(0usize, |acc, &x| acc * a + x as usize)
    }

    pub fn from_index(mut index: usize, a: usize, len: usize) -> Word {
        let mut v = vec![0; len];
        for slot in v.iter_mut().rev() {
            *slot = (index % a) as Symbol;
            index /= a;
        }
        Word(v)
    }

    /// All words at Hamming distance exactly 1.
    pub fn neighbors(&self, a: usize) -> impl Iterator<Item = Word> + '_ {
        (0..self.len()).flat_map(move |i| {
            (0..a as Symbol)
                .filter(move |&x| x != self.0[i])
                .map(move |x| {
                    let mut w = self.0.clone();
                    w[i] = x;
                    Word(w)
                })
        })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &x in &self.0 {
            let c = std::char::from_digit(x as u32, 36).ok_or(fmt::Error)?;
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let symbols = s
            .chars()
            .map(|c| {
                c.to_digit(36)
                    .map(|d| d as Symbol)
                    .ok_or_else(|| Error::Invalid(format!("invalid base-36 digit {c:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if symbols.is_empty() {
            return Err(Error::Invalid("empty word".into()));
        }
        Ok(Word(symbols))
    }
}

impl TryFrom<String> for Word {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Word> for String {
    fn from(w: Word) -> String {
        w.to_string()
    }
}

/// Hamming distance; errors when the lengths differ.
pub fn hamming_distance(x: &Word, y: &Word) -> Result<usize> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            expected: x.len(),
            found: y.len(),
        });
    }
    Ok(distance_unchecked(x.symbols(), y.symbols()))
}

#[inline]
pub(crate) fn distance_unchecked(x: &[Symbol], y: &[Symbol]) -> usize {
    x.iter().zip(y).filter(|(p, q)| p != q).count()
}

/// A minimum distance, with `Infinite` for codes of size at most one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn at_least(self, d: usize) -> bool {
        match self {
            Distance::Finite(x) => x >= d,
            Distance::Infinite => true,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => write!(f, "inf"),
        }
    }
}

/// An ordered set of distinct words of equal length over an alphabet of size `a`.
///
/// Insertion order is preserved (it fixes the labels c_1, c_2, ...);
/// duplicates are dropped on construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Code {
    alphabet: usize,
    length: usize,
    words: Vec<Word>,
}

impl Code {
    pub fn new(alphabet: usize, words: Vec<Word>) -> Result<Self> {
        let length = words
            .first()
            .map(Word::len)
            .ok_or(Error::EmptyCode)?;
        Self::with_length(alphabet, length, words)
    }

    pub fn with_length(alphabet: usize, length: usize, words: Vec<Word>) -> Result<Self> {
        check_alphabet(alphabet)?;
        if length == 0 {
            return Err(Error::Invalid("word length must be positive".into()));
        }
        let mut seen = BTreeSet::new();
        let mut kept = Vec::with_capacity(words.len());
        for w in words {
            if w.len() != length {
                return Err(Error::LengthMismatch {
                    expected: length,
                    found: w.len(),
                });
            }
            if let Some(&x) = w.symbols().iter().find(|&&x| x as usize >= alphabet) {
                return Err(Error::SymbolOutOfRange { symbol: x, alphabet });
            }
            if seen.insert(w.clone()) {
                kept.push(w);
            }
        }
        Ok(Code {
            alphabet,
            length,
            words: kept,
        })
    }

    pub fn empty(alphabet: usize, length: usize) -> Result<Self> {
        Self::with_length(alphabet, length, Vec::new())
    }

    /// Parses whitespace- or comma-separated base-36 words.
    pub fn parse_words(alphabet: usize, text: &str) -> Result<Self> {
        let words = text
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect::<Result<Vec<Word>>>()?;
        Self::new(alphabet, words)
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<&Word> {
        self.words.get(i)
    }

    pub fn position(&self, w: &Word) -> Option<usize> {
        self.words.iter().position(|x| x == w)
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.position(w).is_some()
    }

    /// Checks that this code fits N_s with the given parameters.
    pub fn check_params(&self, params: &NetworkParams) -> Result<()> {
        if self.alphabet != params.a {
            return Err(Error::Params(format!(
                "code alphabet {} differs from a = {}",
                self.alphabet, params.a
            )));
        }
        if self.length != params.word_len() {
            return Err(Error::LengthMismatch {
                expected: params.word_len(),
                found: self.length,
            });
        }
        Ok(())
    }

    /// Words sorted lexicographically; used for hashing and isomorph tests.
    pub fn canonical_words(&self) -> Vec<Word> {
        let mut v = self.words.clone();
        v.sort();
        v
    }

    pub fn min_distance(&self) -> Distance {
        let mut best: Option<usize> = None;
        for (i, x) in self.words.iter().enumerate() {
            for y in &self.words[i + 1..] {
                let d = distance_unchecked(x.symbols(), y.symbols());
                best = Some(best.map_or(d, |b| b.min(d)));
            }
        }
        best.map_or(Distance::Infinite, Distance::Finite)
    }

    /// d(C) >= 2t + 1, the necessary condition for t-error correction.
    pub fn check_distance_for_t(&self, t: usize) -> bool {
        self.min_distance().at_least(2 * t + 1)
    }

    /// C_2: the tails with duplicates removed.
    pub fn tail_code(&self) -> Result<Code> {
        if self.length < 2 {
            return Err(Error::Invalid("tail code needs word length >= 2".into()));
        }
        Code::with_length(
            self.alphabet,
            self.length - 1,
            self.words.iter().map(Word::tail).collect(),
        )
    }

    /// Every word within Hamming distance 1 of some codeword.
    pub fn ball_closure(&self) -> BTreeSet<Word> {
        let mut out = BTreeSet::new();
        for w in &self.words {
            out.insert(w.clone());
            out.extend(w.neighbors(self.alphabet));
        }
        out
    }

    pub fn distance_distribution(&self) -> Result<DistanceDistribution> {
        if self.is_empty() {
            return Err(Error::EmptyCode);
        }
        let mut counts = vec![0u64; self.length + 1];
        for x in &self.words {
            for y in &self.words {
                counts[distance_unchecked(x.symbols(), y.symbols())] += 1;
            }
        }
        let size = BigInt::from(self.len());
        Ok(DistanceDistribution {
            code_size: self.len(),
            alphabet: self.alphabet,
            values: counts
                .into_iter()
                .map(|c| BigRational::new(BigInt::from(c), size.clone()))
                .collect(),
        })
    }

    /// Applies `f` to every word, keeping order.
    pub fn map_words(&self, f: impl Fn(&Word) -> Word) -> Result<Code> {
        Code::with_length(
            self.alphabet,
            self.length,
            self.words.iter().map(f).collect(),
        )
    }
}

/// Normalized pair-distance counts B_0..B_n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceDistribution {
    pub code_size: usize,
    pub alphabet: usize,
    pub values: Vec<BigRational>,
}

impl DistanceDistribution {
    pub fn length(&self) -> usize {
        self.values.len() - 1
    }

    pub fn total(&self) -> BigRational {
        self.values.iter().fold(BigRational::zero(), |acc, x| acc + x)
    }

    pub fn is_consistent(&self) -> bool {
        self.values[0] == BigRational::one()
            && self.values.iter().all(|x| *x >= BigRational::zero())
            && self.total() == BigRational::from_integer(BigInt::from(self.code_size))
    }
}

/// Enumerates all words of length `len` over `a` symbols in lexicographic order.
pub fn all_words(a: usize, len: usize) -> Result<impl Iterator<Item = Word>> {
    let count = checked_pow(a, len)?;
    if count > MAX_DENSE_TABLE {
        return Err(Error::TooLarge(count));
    }
    Ok((0..count as usize).map(move |i| Word::from_index(i, a, len)))
}
