//! Isometries that keep the head/tail split of N_s: permutations of the tail
//! coordinates combined with an independent symbol permutation on every
//! coordinate (the head included). They preserve Hamming distance and τ, so
//! they map correctable codes to correctable codes.
//!
//! [`Canonizer`] decides whether a sorted list of word indices is the
//! lexicographically least image of itself under this group.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::model::{checked_pow, Code, Symbol, Word, MAX_DENSE_TABLE};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isometry {
    /// Tail coordinate `j` (0-based within the tail) moves to tail slot `tail_perm[j]`.
    tail_perm: Vec<usize>,
    /// `symbol_maps[i][x]` is the new symbol for `x` on original coordinate `i`.
    symbol_maps: Vec<Vec<Symbol>>,
}

fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter().all(|&x| x < seen.len() && !std::mem::replace(&mut seen[x], true))
}

impl Isometry {
    pub fn new(tail_perm: Vec<usize>, symbol_maps: Vec<Vec<Symbol>>) -> Result<Self> {
        if !is_permutation(&tail_perm) {
            return Err(Error::Invalid(format!("{tail_perm:?} is not a permutation")));
        }
        if symbol_maps.len() != tail_perm.len() + 1 {
            return Err(Error::LengthMismatch {
                expected: tail_perm.len() + 1,
                found: symbol_maps.len(),
            });
        }
        let a = symbol_maps[0].len();
        for m in &symbol_maps {
            let as_usize: Vec<usize> = m.iter().map(|&x| x as usize).collect();
            if m.len() != a || !is_permutation(&as_usize) {
                return Err(Error::Invalid(format!("{m:?} is not a symbol permutation")));
            }
        }
        Ok(Isometry {
            tail_perm,
            symbol_maps,
        })
    }

    pub fn identity(len: usize, a: usize) -> Self {
        Isometry {
            tail_perm: (0..len - 1).collect(),
            symbol_maps: vec![(0..a as Symbol).collect(); len],
        }
    }

    pub fn word_len(&self) -> usize {
        self.symbol_maps.len()
    }

    pub fn alphabet(&self) -> usize {
        self.symbol_maps[0].len()
    }

    pub fn apply(&self, w: &Word) -> Word {
        let x = w.symbols();
        let mut out = vec![0; x.len()];
        out[0] = self.symbol_maps[0][x[0] as usize];
        for (j, &slot) in self.tail_perm.iter().enumerate() {
            out[1 + slot] = self.symbol_maps[1 + j][x[1 + j] as usize];
        }
        Word::new(out)
    }

    /// Image of a code; word order is kept.
    pub fn apply_code(&self, code: &Code) -> Result<Code> {
        if code.length() != self.word_len() || code.alphabet() != self.alphabet() {
            return Err(Error::Params(format!(
                "isometry on (n={}, a={}) applied to a code with n={}, a={}",
                self.word_len(),
                self.alphabet(),
                code.length(),
                code.alphabet()
            )));
        }
        code.map_words(|w| self.apply(w))
    }

    /// A generating set: adjacent tail transpositions, and on every coordinate
    /// the transposition (0 1) and the cycle (0 1 .. a-1).
    pub fn generators(len: usize, a: usize) -> Vec<Isometry> {
        let id = Isometry::identity(len, a);
        let mut out = Vec::new();
        for j in 0..len.saturating_sub(2) {
            let mut g = id.clone();
            g.tail_perm.swap(j, j + 1);
            out.push(g);
        }
        for i in 0..len {
            let mut swap = id.clone();
            swap.symbol_maps[i].swap(0, 1);
            out.push(swap);
            if a > 2 {
                let mut cycle = id.clone();
                cycle.symbol_maps[i] = (0..a).map(|x| ((x + 1) % a) as Symbol).collect();
                out.push(cycle);
            }
        }
        out
    }

    /// Every group element. Only sensible for tiny (len, a).
    pub fn all(len: usize, a: usize) -> impl Iterator<Item = Isometry> {
        let perms: Vec<Vec<usize>> = (0..len - 1).permutations(len - 1).collect();
        let sym: Vec<Vec<Symbol>> = (0..a as Symbol).permutations(a).collect();
        let maps = (0..len).map(move |_| sym.clone()).multi_cartesian_product();
        maps.cartesian_product(perms)
            .map(|(symbol_maps, tail_perm)| Isometry {
                tail_perm,
                symbol_maps,
            })
    }
}

/// Isomorph rejection for codes given as ascending word indices (coordinate 0
/// most significant).
#[derive(Clone, Debug)]
pub struct Canonizer {
    a: usize,
    n: usize,
    digits: Vec<Symbol>,
    weights: Vec<usize>,
}

impl Canonizer {
    pub fn new(a: usize, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Params(format!("word length {n} has no tail")));
        }
        let size = checked_pow(a, n)?;
        if size > MAX_DENSE_TABLE {
            return Err(Error::TooLarge(size));
        }
        let size = size as usize;
        let mut digits = Vec::with_capacity(size * n);
        for w in 0..size {
            digits.extend_from_slice(Word::from_index(w, a, n).symbols());
        }
        let weights = (0..n).map(|p| a.pow((n - 1 - p) as u32)).collect();
        Ok(Canonizer {
            a,
            n,
            digits,
            weights,
        })
    }

    pub fn word_count(&self) -> usize {
        self.digits.len() / self.n
    }

    pub fn digits(&self, w: usize) -> &[Symbol] {
        &self.digits[w * self.n..(w + 1) * self.n]
    }

    /// Least index of an image of `v` under isometries sending `u` to 0.
    fn pair_key(&self, u: usize, v: usize) -> usize {
        let (x, y) = (self.digits(u), self.digits(v));
        let head = usize::from(x[0] != y[0]) * self.weights[0];
        let differ = (1..self.n).filter(|&j| x[j] != y[j]).count();
        // Ones in the last `differ` tail slots.
        head + self.weights[self.n - differ..].iter().sum::<usize>()
    }

    /// True iff `code` (strictly ascending) is the least sorted image of
    /// itself.
    pub fn is_canonical(&self, code: &[usize]) -> bool {
        match code {
            [] => true,
            [w] => *w == 0,
            _ => code[0] == 0 && self.check(code),
        }
    }

    fn check(&self, code: &[usize]) -> bool {
        let mut best = usize::MAX;
        let mut pairs = Vec::new();
        for &u in code {
            for &v in code {
                if u == v {
                    continue;
                }
                let k = self.pair_key(u, v);
                if k < best {
                    best = k;
                    pairs.clear();
                }
                if k == best {
                    pairs.push((u, v));
                }
            }
        }
        if code[1] != best {
            return false;
        }
        let mut image = Vec::with_capacity(code.len());
        pairs
            .into_iter()
            .all(|(u, v)| !self.pair_images_smaller(code, u, v, &mut image))
    }

    /// Does some isometry with u -> 0 and v -> code[1] give a smaller image?
    fn pair_images_smaller(&self, code: &[usize], u: usize, v: usize, image: &mut Vec<usize>) -> bool {
        let (x, y) = (self.digits(u), self.digits(v));
        let a = self.a;
        let equal: Vec<usize> = (1..self.n).filter(|&j| x[j] == y[j]).collect();
        let differ: Vec<usize> = (1..self.n).filter(|&j| x[j] != y[j]).collect();

        // Per original coordinate, every admissible symbol map.
        let options: Vec<Vec<Vec<usize>>> = (0..self.n)
            .map(|j| {
                let (p, q) = (x[j] as usize, y[j] as usize);
                let fixed: Vec<usize> = if p == q { vec![p] } else { vec![p, q] };
                let rest: Vec<usize> = (0..a).filter(|s| !fixed.contains(s)).collect();
                rest.iter()
                    .copied()
                    .permutations(rest.len())
                    .map(|order| {
                        let mut m = vec![0; a];
                        for (img, &s) in fixed.iter().chain(order.iter()).enumerate() {
                            m[s] = img;
                        }
                        m
                    })
                    .collect()
            })
            .collect();

        let slot_orders = equal
            .iter()
            .copied()
            .permutations(equal.len())
            .cartesian_product(differ.iter().copied().permutations(differ.len()).collect::<Vec<_>>());
        for (e, d) in slot_orders {
            // position[j] = target position of original coordinate j
            let mut position = vec![0; self.n];
            for (slot, &j) in e.iter().chain(d.iter()).enumerate() {
                position[j] = slot + 1;
            }
            for maps in options.iter().map(|o| o.iter()).multi_cartesian_product() {
                image.clear();
                image.extend(code.iter().map(|&w| {
                    self.digits(w)
                        .iter()
                        .enumerate()
                        .map(|(j, &s)| maps[j][s as usize] * self.weights[position[j]])
                        .sum::<usize>()
                }));
                image.sort_unstable();
                if image.as_slice() < code {
                    return true;
                }
            }
        }
        false
    }
}
