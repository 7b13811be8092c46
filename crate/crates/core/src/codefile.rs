//! Plain-text code files.
//!
//! One word per line in base-36 digits. `#` starts a comment, blank lines are
//! ignored. An optional header `% a=<alphabet> n=<length>` fixes the alphabet
//! and length; without it the length comes from the first word and the
//! alphabet is one more than the largest digit (at least 2).

use crate::error::{Error, Result};
use crate::model::{Code, Word, MAX_ALPHABET};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_header(line_no: usize, body: &str) -> Result<(Option<usize>, Option<usize>)> {
    let mut a = None;
    let mut n = None;
    for field in body.split_whitespace() {
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| parse_err(line_no, format!("malformed header field {field:?}")))?;
        let value: usize = value
            .parse()
            .map_err(|_| parse_err(line_no, format!("header value {value:?} is not an integer")))?;
        match key {
            "a" => a = Some(value),
            "n" => n = Some(value),
            other => return Err(parse_err(line_no, format!("unknown header key {other:?}"))),
        }
    }
    Ok((a, n))
}

pub fn parse_code(text: &str) -> Result<Code> {
    let mut alphabet = None;
    let mut length = None;
    let mut words: Vec<(usize, Word)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(body) = line.strip_prefix('%') {
            if !words.is_empty() {
                return Err(parse_err(line_no, "header must precede all words"));
            }
            let (a, n) = parse_header(line_no, body)?;
            alphabet = a.or(alphabet);
            length = n.or(length);
            continue;
        }
        let word: Word = line
            .parse()
            .map_err(|e: Error| parse_err(line_no, e.to_string()))?;
        let expected = *length.get_or_insert(word.len());
        if word.len() != expected {
            return Err(parse_err(
                line_no,
                format!("word {word} has length {}, expected {expected}", word.len()),
            ));
        }
        if let Some(a) = alphabet {
            if let Some(x) = word.symbols().iter().find(|&&x| x as usize >= a) {
                return Err(parse_err(line_no, format!("symbol {x} out of range for a={a}")));
            }
        }
        words.push((line_no, word));
    }

    let length = length.ok_or_else(|| parse_err(0, "no words and no length header"))?;
    let alphabet = match alphabet {
        Some(a) => a,
        None => words
            .iter()
            .filter_map(|(_, w)| w.max_symbol())
            .max()
            .map_or(2, |m| (m as usize + 1).max(2)),
    };
    if !(2..=MAX_ALPHABET).contains(&alphabet) {
        return Err(parse_err(0, format!("alphabet size {alphabet} unsupported")));
    }
    Code::with_length(alphabet, length, words.into_iter().map(|(_, w)| w).collect())
}

pub fn format_code(code: &Code) -> String {
    let mut out = format!("% a={} n={}\n", code.alphabet(), code.length());
    for w in code.words() {
        out.push_str(&w.to_string());
        out.push('\n');
    }
    out
}

pub fn read_code_file(path: &std::path::Path) -> Result<Code> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
    parse_code(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_comments_blank_lines_and_header() {
        let text = "# example\n% a=3 n=4\n0000\n\n0111  # c_2\n1012\n";
        let code = parse_code(text).unwrap();
        assert_eq!(code.alphabet(), 3);
        assert_eq!(code.len(), 3);
        assert_eq!(code.words()[1].to_string(), "0111");
    }

    #[test]
    fn infers_alphabet_from_largest_digit() {
        assert_eq!(parse_code("000\n021\n").unwrap().alphabet(), 3);
        assert_eq!(parse_code("000\n").unwrap().alphabet(), 2);
        assert_eq!(parse_code("0a0\n").unwrap().alphabet(), 11);
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_code("000\n\n01\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 3,
                msg: "word 01 has length 2, expected 3".into()
            }
        );
        assert!(matches!(parse_code("% a=2\n012\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_code("0!0\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_code("% q=3\n"), Err(Error::Parse { line: 1, .. })));
        assert!(parse_code("# nothing\n").is_err());
    }

    proptest! {
        #[test]
        fn format_then_parse_is_identity(
            a in 2usize..12,
            n in 1usize..6,
            raw in prop::collection::vec(prop::collection::vec(0u8..36, 6), 1..20),
        ) {
            let words: Vec<Word> = raw
                .into_iter()
                .map(|v| Word::new(v.into_iter().take(n).map(|x| x % a as u8).collect()))
                .collect();
            let code = Code::with_length(a, n, words).unwrap();
            prop_assert_eq!(parse_code(&format_code(&code)).unwrap(), code);
        }
    }
}
