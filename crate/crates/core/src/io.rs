//! Text formats for sequences.
//!
//! * csv: one line `a_1,a_2,…,a_N`.
//! * bfile: one `n value` pair per line, `n` running 1, 2, 3, … without
//!   gaps; blank lines and lines starting with `#` are ignored.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::transforms::Seq;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Format {
    #[default]
    Csv,
    Bfile,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(Format::Csv),
            "bfile" => Ok(Format::Bfile),
            other => Err(format!("unknown format `{other}` (expected csv or bfile)")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Csv => "csv",
            Format::Bfile => "bfile",
        })
    }
}

/// A parse failure at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        Self { line, column, message: message.into() }
    }
}

fn is_skippable(line: &str) -> bool {
    let t = line.trim();
    t.is_empty() || t.starts_with('#')
}

// Splits `line` on `sep` (or whitespace when `None`), yielding each token
// with its 1-based starting column.
fn tokens(line: &str, sep: Option<char>) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    match sep {
        Some(c) => {
            let mut start = 0;
            for piece in line.split(c) {
                let lead = piece.len() - piece.trim_start().len();
                out.push((start + lead + 1, piece.trim()));
                start += piece.len() + c.len_utf8();
            }
        }
        None => {
            let mut rest = line;
            let mut offset = 0;
            while let Some(pos) = rest.find(|ch: char| !ch.is_whitespace()) {
                let tail = &rest[pos..];
                let end = tail.find(char::is_whitespace).unwrap_or(tail.len());
                out.push((offset + pos + 1, &tail[..end]));
                offset += pos + end;
                rest = &tail[end..];
            }
        }
    }
    out
}

fn parse_value<T: FromStr>(token: &str, line: usize, column: usize) -> Result<T, ParseError> {
    if token.is_empty() {
        return Err(ParseError::new(line, column, "empty value"));
    }
    token
        .parse()
        .map_err(|_| ParseError::new(line, column, format!("`{token}` is not an integer")))
}

pub fn parse_csv<T: FromStr>(text: &str) -> Result<Seq<T>, ParseError> {
    let mut data = text.lines().enumerate().filter(|(_, l)| !is_skippable(l));
    let Some((idx, line)) = data.next() else {
        return Err(ParseError::new(1, 1, "no sequence terms found"));
    };
    if let Some((extra, _)) = data.next() {
        return Err(ParseError::new(extra + 1, 1, "csv input must be a single line"));
    }
    let terms = tokens(line, Some(','))
        .into_iter()
        .map(|(col, tok)| parse_value(tok, idx + 1, col))
        .collect::<Result<Vec<T>, _>>()?;
    Ok(Seq::new(terms).expect("at least one token"))
}

pub fn parse_bfile<T: FromStr>(text: &str) -> Result<Seq<T>, ParseError> {
    let mut terms = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        if is_skippable(line) {
            continue;
        }
        let lineno = idx + 1;
        let toks = tokens(line, None);
        if toks.len() != 2 {
            let col = toks.get(2).map_or(line.len() + 1, |t| t.0);
            return Err(ParseError::new(lineno, col, "expected `n value`"));
        }
        let (ncol, ntok) = toks[0];
        let n: usize = ntok
            .parse()
            .map_err(|_| ParseError::new(lineno, ncol, format!("`{ntok}` is not an index")))?;
        let expected = terms.len() + 1;
        if n != expected {
            return Err(ParseError::new(lineno, ncol, format!("expected index {expected}, found {n}")));
        }
        terms.push(parse_value(toks[1].1, lineno, toks[1].0)?);
    }
    Seq::new(terms).map_err(|_| ParseError::new(1, 1, "no sequence terms found"))
}

pub fn parse_sequence<T: FromStr>(text: &str, format: Format) -> Result<Seq<T>, ParseError> {
    match format {
        Format::Csv => parse_csv(text),
        Format::Bfile => parse_bfile(text),
    }
}

/// Renders with a trailing newline.
pub fn render_sequence<T: fmt::Display>(seq: &Seq<T>, format: Format) -> String {
    match format {
        Format::Csv => format!("{seq}\n"),
        Format::Bfile => seq.indexed().map(|(n, t)| format!("{n} {t}\n")).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn csv_roundtrip_and_errors() {
        let s: Seq<BigInt> = parse_csv("1, 3,4,7\n").unwrap();
        assert_eq!(render_sequence(&s, Format::Csv), "1,3,4,7\n");
        let e = parse_csv::<BigInt>("1,2,x,4").unwrap_err();
        assert_eq!((e.line, e.column), (1, 5));
        let e = parse_csv::<BigInt>("# header\n1,2,,4").unwrap_err();
        assert_eq!((e.line, e.column), (2, 5));
        assert!(parse_csv::<BigInt>("1,2\n3,4").is_err());
        assert!(parse_csv::<BigInt>("\n").is_err());
    }

    #[test]
    fn bfile_roundtrip_and_errors() {
        let text = "# A000000\n1 1\n2 3\n\n3 4\n";
        let s: Seq<BigInt> = parse_bfile(text).unwrap();
        assert_eq!(render_sequence(&s, Format::Bfile), "1 1\n2 3\n3 4\n");
        let e = parse_bfile::<BigInt>("1 1\n3 4\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 1));
        let e = parse_bfile::<BigInt>("1 1\n2  z\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 4));
        let e = parse_bfile::<BigInt>("1 1 1\n").unwrap_err();
        assert_eq!((e.line, e.column), (1, 5));
        assert!(parse_bfile::<BigInt>("# only comments\n").is_err());
    }

    #[test]
    fn format_names() {
        assert_eq!("bfile".parse::<Format>().unwrap(), Format::Bfile);
        assert!("json".parse::<Format>().is_err());
        assert_eq!(Format::default().to_string(), "csv");
    }
}
