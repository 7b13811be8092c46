//! Candidate sets τ(c_2): the codewords whose tail lies within Hamming
//! distance 1 of a received V_2 input c_2.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::model::{Code, Word, MAX_DENSE_TABLE};

/// Sorted indices into a code's insertion order.
pub type TauSet = Vec<usize>;

pub fn tau(code: &Code, tail: &Word) -> Result<TauSet> {
    if code.length() < 2 || tail.len() + 1 != code.length() {
        return Err(Error::LengthMismatch {
            expected: code.length().saturating_sub(1),
            found: tail.len(),
        });
    }
    Ok(code
        .words()
        .iter()
        .enumerate()
        .filter(|(_, w)| {
            crate::model::distance_unchecked(&w.symbols()[1..], tail.symbols()) <= 1
        })
        .map(|(i, _)| i)
        .collect())
}

/// τ for every tail in A^{s+1}.
#[derive(Clone, Debug)]
pub struct TauTable {
    code: Code,
    entries: Vec<TauSet>,
}

impl TauTable {
    /// Builds the table, requiring d(C) >= 3.
    pub fn build(code: &Code) -> Result<Self> {
        let d = code.min_distance();
        if !d.at_least(3) {
            let found = match d {
                crate::model::Distance::Finite(x) => x,
                crate::model::Distance::Infinite => unreachable!(),
            };
            return Err(Error::MinDistance { found, required: 3 });
        }
        Self::build_unchecked(code)
    }

    /// Builds the table without the distance precondition.
    pub fn build_unchecked(code: &Code) -> Result<Self> {
        if code.length() < 2 {
            return Err(Error::Invalid("codewords need a head and a tail".into()));
        }
        let a = code.alphabet();
        let tail_len = code.length() - 1;
        let size = crate::model::checked_pow(a, tail_len)?;
        if size > MAX_DENSE_TABLE {
            return Err(Error::TooLarge(size));
        }
        let size = size as usize;
        let mut entries: Vec<TauSet> = vec![Vec::new(); size];
        for (i, w) in code.words().iter().enumerate() {
            let t = w.tail();
            entries[t.to_index(a)].push(i);
            for n in t.neighbors(a) {
                entries[n.to_index(a)].push(i);
            }
        }
        Ok(TauTable {
            code: code.clone(),
            entries,
        })
    }

    pub fn code(&self) -> &Code {
        &self.code
    }

    pub fn tail_len(&self) -> usize {
        self.code.length() - 1
    }

    pub fn get(&self, tail: &Word) -> Option<&TauSet> {
        if tail.len() != self.tail_len() {
            return None;
        }
        self.entries.get(tail.to_index(self.code.alphabet()))
    }

    pub fn get_by_index(&self, tail_index: usize) -> &TauSet {
        &self.entries[tail_index]
    }

    /// (tail, τ(tail)) in lexicographic tail order.
    pub fn iter(&self) -> impl Iterator<Item = (Word, &TauSet)> + '_ {
        let a = self.code.alphabet();
        let len = self.tail_len();
        self.entries
            .iter()
            .enumerate()
            .map(move |(i, s)| (Word::from_index(i, a, len), s))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The deduplicated family of τ values, ∅ included when it occurs.
    pub fn distinct_sets(&self) -> BTreeSet<TauSet> {
        self.entries.iter().cloned().collect()
    }

    /// Distinct τ-sets with at least two members.
    pub fn multi_sets(&self) -> Vec<TauSet> {
        let set: BTreeSet<&TauSet> = self.entries.iter().filter(|s| s.len() >= 2).collect();
        set.into_iter().cloned().collect()
    }

    /// Inclusion-maximal τ-sets among those with at least two members.
    pub fn maximal_multi_sets(&self) -> Vec<TauSet> {
        maximal_sets(self.multi_sets())
    }

    /// ∅ (when it occurs), the singletons and the maximal multi-member sets;
    /// every other τ value is contained in one of these.
    pub fn undominated_sets(&self) -> BTreeSet<TauSet> {
        let mut out: BTreeSet<TauSet> = self
            .entries
            .iter()
            .filter(|s| s.len() <= 1)
            .cloned()
            .collect();
        out.extend(self.maximal_multi_sets());
        out
    }

    pub fn max_set_size(&self) -> usize {
        self.entries.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Distinct τ-sets of size >= 2 whose members repeat a head symbol.
    pub fn head_conflicts(&self) -> Vec<TauSet> {
        self.multi_sets()
            .into_iter()
            .filter(|s| !distinct_heads(&self.code, s))
            .collect()
    }
}

/// |τ(c_2)| <= min(a, s+1) for every tail; a violation rules out correction.
pub fn check_tau_bound(table: &TauTable) -> bool {
    let limit = table.code.alphabet().min(table.tail_len());
    table.max_set_size() <= limit
}

pub fn distinct_heads(code: &Code, members: &[usize]) -> bool {
    let mut seen = 0u64;
    for &i in members {
        let bit = 1u64 << code.words()[i].head();
        if seen & bit != 0 {
            return false;
        }
        seen |= bit;
    }
    true
}

/// Drops every set strictly contained in another one; input order of the
/// survivors is kept after sorting and deduplication.
pub fn maximal_sets(mut sets: Vec<TauSet>) -> Vec<TauSet> {
    sets.sort();
    sets.dedup();
    let keep: Vec<bool> = sets
        .iter()
        .map(|s| {
            !sets
                .iter()
                .any(|t| t.len() > s.len() && is_subset(s, t))
        })
        .collect();
    sets.into_iter()
        .zip(keep)
        .filter_map(|(s, k)| k.then_some(s))
        .collect()
}

pub(crate) fn is_subset(small: &[usize], big: &[usize]) -> bool {
    let mut it = big.iter();
    small.iter().all(|x| it.any(|y| y == x))
}

/// Distinct τ-sets with at least two members, computed from the codewords
/// without materializing the full table.
pub(crate) fn sparse_multi_sets(words: &[Word], a: usize) -> Vec<TauSet> {
    let mut buckets: HashMap<usize, TauSet> = HashMap::new();
    for (i, w) in words.iter().enumerate() {
        let t = w.tail();
        buckets.entry(t.to_index(a)).or_default().push(i);
        for n in t.neighbors(a) {
            buckets.entry(n.to_index(a)).or_default().push(i);
        }
    }
    let mut out: Vec<TauSet> = buckets.into_values().filter(|s| s.len() >= 2).collect();
    out.sort();
    out.dedup();
    out
}

/// Renders a family of τ-sets as `{∅, {c_1}, {c_2,c_3}}` with 1-based labels.
pub fn format_family<'a>(sets: impl IntoIterator<Item = &'a TauSet>) -> String {
    let parts: Vec<String> = sets.into_iter().map(|s| format_set(s)).collect();
    format!("{{{}}}", parts.join(", "))
}

pub fn format_set(set: &[usize]) -> String {
    if set.is_empty() {
        return "∅".to_string();
    }
    let inner: Vec<String> = set.iter().map(|i| format!("c_{}", i + 1)).collect();
    format!("{{{}}}", inner.join(","))
}
