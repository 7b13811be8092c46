//! Independent reference implementations used by the integration tests.
//! Nothing here calls the cover solver or the canonicity test.

#![allow(dead_code)]

use std::collections::BTreeSet;

use diamond_core::model::Symbol;
use diamond_core::netcode::channel_is_correcting;
use diamond_core::symmetry::Isometry;
use diamond_core::{Code, NetworkParams, Word};

pub fn dist(x: &[Symbol], y: &[Symbol]) -> usize {
    x.iter().zip(y).filter(|(p, q)| p != q).count()
}

pub fn all_words(a: usize, n: usize) -> Vec<Word> {
    (0..a.pow(n as u32)).map(|i| Word::from_index(i, a, n)).collect()
}

/// Codewords whose tail is within distance 1 of `tail`.
pub fn tau(code: &Code, tail: &[Symbol]) -> Vec<usize> {
    code.words()
        .iter()
        .enumerate()
        .filter(|(_, w)| dist(&w.symbols()[1..], tail) <= 1)
        .map(|(i, _)| i)
        .collect()
}

/// Every τ-set with at least two members.
pub fn multi_tau_sets(code: &Code) -> BTreeSet<Vec<usize>> {
    all_words(code.alphabet(), code.length() - 1)
        .iter()
        .map(|t| tau(code, t.symbols()))
        .filter(|s| s.len() >= 2)
        .collect()
}

/// Existence of (F_V1, F_V2) making the channel injective on fan-outs, by
/// trying every pair of functions. Only for s = 1 and tiny a.
pub fn brute_force_correctable(code: &Code, params: &NetworkParams) -> bool {
    let a = params.a;
    let tails = a.pow((params.s + 1) as u32);
    let states = a.pow(params.s_out as u32);
    let fv1_count = a.pow(a as u32);
    let fv2_count = states.pow(tails as u32);
    let mut fv1 = vec![0 as Symbol; a];
    let mut fv2 = vec![0usize; tails];
    for i in 0..fv1_count {
        let mut x = i;
        for slot in fv1.iter_mut() {
            *slot = (x % a) as Symbol;
            x /= a;
        }
        for j in 0..fv2_count {
            let mut y = j;
            for slot in fv2.iter_mut() {
                *slot = y % states;
                y /= states;
            }
            if channel_is_correcting(params, code, &fv1, &fv2) {
                return true;
            }
        }
    }
    false
}

/// Least sorted image of a code over the whole isometry group.
pub fn orbit_key(code: &[usize], group: &[Isometry], a: usize, n: usize) -> Vec<usize> {
    group
        .iter()
        .map(|g| {
            let mut img: Vec<usize> = code
                .iter()
                .map(|&w| g.apply(&Word::from_index(w, a, n)).to_index(a))
                .collect();
            img.sort_unstable();
            img
        })
        .min()
        .unwrap_or_default()
}

/// One representative (the least sorted image) of every isometry class of
/// codes with d >= 3 and at most `max` words. Grows codes by appending larger
/// words; dropping the last word of a least image leaves a least image, so
/// no class is missed.
pub fn class_representatives_d3(a: usize, n: usize, max: usize) -> Vec<Vec<usize>> {
    let words = all_words(a, n);
    let group: Vec<Isometry> = Isometry::all(n, a).collect();
    let mut out = Vec::new();
    let mut stack: Vec<Vec<usize>> = vec![Vec::new()];
    while let Some(code) = stack.pop() {
        if !code.is_empty() {
            out.push(code.clone());
        }
        if code.len() == max {
            continue;
        }
        let start = code.last().map_or(0, |&l| l + 1);
        for w in start..words.len() {
            if code
                .iter()
                .all(|&c| dist(words[c].symbols(), words[w].symbols()) >= 3)
            {
                let mut next = code.clone();
                next.push(w);
                if orbit_key(&next, &group, a, n) == next {
                    stack.push(next);
                }
            }
        }
    }
    out.sort();
    out
}

pub fn code_from_indices(code: &[usize], a: usize, n: usize) -> Code {
    Code::with_length(a, n, code.iter().map(|&i| Word::from_index(i, a, n)).collect()).unwrap()
}

/// Smallest number of distinct-head subsets covering every multi-member
/// τ-set, by trying all families of increasing size.
pub fn brute_force_min_cover(code: &Code) -> usize {
    let sets: Vec<Vec<usize>> = multi_tau_sets(code).into_iter().collect();
    if sets.is_empty() {
        return 0;
    }
    let m = code.len();
    let blocks: Vec<u64> = (1u64..1 << m)
        .filter(|&mask| mask.count_ones() >= 2)
        .filter(|&mask| {
            let heads: Vec<Symbol> = (0..m)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| code.words()[i].head())
                .collect();
            heads.iter().collect::<BTreeSet<_>>().len() == heads.len()
        })
        // Only maximal candidates matter for the optimum.
        .collect();
    let maximal: Vec<u64> = blocks
        .iter()
        .copied()
        .filter(|&b| !blocks.iter().any(|&c| c != b && c & b == b))
        .collect();
    let targets: Vec<u64> = sets
        .iter()
        .map(|s| s.iter().fold(0u64, |acc, &i| acc | 1 << i))
        .collect();
    for k in 1..=targets.len() {
        if choose_cover(&maximal, &targets, k, 0, &mut Vec::new()) {
            return k;
        }
    }
    targets.len()
}

fn choose_cover(blocks: &[u64], targets: &[u64], k: usize, start: usize, picked: &mut Vec<u64>) -> bool {
    if picked.len() == k {
        return targets.iter().all(|&t| picked.iter().any(|&b| b & t == t));
    }
    for i in start..blocks.len() {
        picked.push(blocks[i]);
        if choose_cover(blocks, targets, k, i + 1, picked) {
            return true;
        }
        picked.pop();
    }
    false
}
