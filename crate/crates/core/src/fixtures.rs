//! Published codes bundled with the crate, plus a few classical binary codes
//! used by the head-coordinate sweep.

use crate::codefile::parse_code;
use crate::cover::{Block, CoverFamily};
use crate::error::{Error, Result};
use crate::model::{Code, NetworkParams};

#[derive(Clone, Copy, Debug)]
pub struct Fixture {
    pub name: &'static str,
    /// File contents in the code-file format.
    pub text: &'static str,
    /// `Some(s)` when the code is a σ(N_s, a) witness; sweep inputs have none.
    pub s: Option<usize>,
    pub expected_size: Option<usize>,
    /// Blocks (0-based codeword indices) listed next to the code, if any.
    pub cover: Option<&'static str>,
}

impl Fixture {
    pub fn code(&self) -> Result<Code> {
        parse_code(self.text)
    }

    pub fn certifies_sigma(&self) -> bool {
        self.s.is_some()
    }

    pub fn params(&self) -> Result<NetworkParams> {
        let code = self.code()?;
        let s = match self.s {
            Some(s) => s,
            None => code
                .length()
                .checked_sub(2)
                .ok_or_else(|| Error::Params(format!("{} is too short", self.name)))?,
        };
        NetworkParams::new(s, code.alphabet())
    }

    pub fn printed_cover(&self) -> Result<Option<CoverFamily>> {
        let Some(text) = self.cover else {
            return Ok(None);
        };
        let code = self.code()?;
        let params = self.params()?;
        let mut blocks = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let members = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>().map_err(|_| Error::Parse {
                        line: i + 1,
                        msg: format!("bad codeword index {t:?}"),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            blocks.push(Block(members));
        }
        let budget = crate::cover::budget(&code, &params)?;
        Ok(Some(CoverFamily {
            blocks,
            budget: budget.max(0) as usize,
        }))
    }
}

macro_rules! fixture {
    ($name:literal, $file:literal, $s:expr, $size:expr, $cover:expr) => {
        Fixture {
            name: $name,
            text: include_str!(concat!("../fixtures/", $file)),
            s: $s,
            expected_size: $size,
            cover: $cover,
        }
    };
}

pub const EXAMPLE1: Fixture = fixture!("example1", "example1.code", Some(2), Some(5), None);
pub const EXAMPLE3: Fixture = fixture!("example3", "example3.code", Some(2), Some(5), None);
pub const EXAMPLE5: Fixture = fixture!(
    "example5",
    "example5.code",
    Some(2),
    Some(15),
    Some(include_str!("../fixtures/example5.cover"))
);
pub const S3_A3_14: Fixture = fixture!("s3_a3_14", "s3_a3_14.code", Some(3), Some(14), None);
pub const S4_A3_35: Fixture = fixture!("s4_a3_35", "s4_a3_35.code", Some(4), Some(35), None);
pub const S2_A4_9: Fixture = fixture!("s2_a4_9", "s2_a4_9.code", Some(2), Some(9), None);
/// Found by the exhaustive search; meets the upper bound 10 for (2, 4).
pub const S2_A4_10: Fixture = fixture!("s2_a4_10", "s2_a4_10.code", Some(2), Some(10), None);
pub const S3_A4_31: Fixture = fixture!("s3_a4_31", "s3_a4_31.code", Some(3), Some(31), None);
pub const S5_A2_14: Fixture = fixture!("s5_a2_14", "s5_a2_14.code", Some(5), Some(14), None);
pub const HAMMING_7_16_3: Fixture = fixture!("hamming_7_16_3", "hamming_7_16_3.code", None, Some(16), None);
pub const REPETITION_3_2_3: Fixture = fixture!("repetition_3_2_3", "repetition_3_2_3.code", None, Some(2), None);
pub const BINARY_5_4_3: Fixture = fixture!("binary_5_4_3", "binary_5_4_3.code", None, Some(4), None);

pub const ALL: &[Fixture] = &[
    EXAMPLE1,
    EXAMPLE3,
    EXAMPLE5,
    S3_A3_14,
    S4_A3_35,
    S2_A4_9,
    S2_A4_10,
    S3_A4_31,
    S5_A2_14,
    HAMMING_7_16_3,
    REPETITION_3_2_3,
    BINARY_5_4_3,
];

pub fn by_name(name: &str) -> Option<&'static Fixture> {
    ALL.iter().find(|f| f.name == name)
}

/// Best bundled lower bound on σ(N_s, a), with the fixture providing it.
pub fn best_lower_bound(s: usize, a: usize) -> Option<(usize, &'static Fixture)> {
    ALL.iter()
        .filter(|f| f.s == Some(s))
        .filter_map(|f| {
            let code = f.code().ok()?;
            (code.alphabet() == a).then_some((code.len(), f))
        })
        .max_by_key(|(n, _)| *n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_parse_with_expected_sizes() {
        for f in ALL {
            let code = f.code().unwrap();
            assert_eq!(Some(code.len()), f.expected_size, "{}", f.name);
            assert!(code.min_distance().at_least(3), "{}", f.name);
            let p = f.params().unwrap();
            assert_eq!(code.length(), p.word_len());
        }
        assert_eq!(best_lower_bound(2, 5).unwrap().0, 15);
        assert_eq!(best_lower_bound(2, 3).unwrap().0, 5);
        assert!(best_lower_bound(9, 9).is_none());
        assert!(by_name("example5").is_some());
    }

    #[test]
    fn example5_printed_cover() {
        let cover = EXAMPLE5.printed_cover().unwrap().unwrap();
        assert_eq!(cover.len(), 10);
        assert_eq!(cover.budget, 10);
        cover
            .verify(&EXAMPLE5.code().unwrap(), &EXAMPLE5.params().unwrap())
            .unwrap();
    }
}
