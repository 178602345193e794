//! Plain-text matrix files.
//!
//! ```text
//! SIC v1 N t [w]
//! <N lines of t characters from {0,1}>
//! # optional trailing comment lines
//! ```

use std::fmt::Write as _;
use std::path::Path;

use crate::codegen::BinaryCode;
use crate::error::{Error, Result};

const MAGIC: &str = "SIC";
const VERSION: &str = "v1";

fn malformed(line: usize, message: impl Into<String>) -> Error {
    Error::MalformedFile {
        line,
        message: message.into(),
    }
}

fn parse_count(tok: &str, line: usize, what: &str) -> Result<usize> {
    tok.parse().map_err(|_| malformed(line, format!("bad {what} `{tok}`")))
}

/// Parses a matrix file. Line numbers in errors are 1-based.
pub fn parse_matrix(text: &str) -> Result<BinaryCode> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim_end_matches('\r')));
    let (_, header) = lines.next().ok_or_else(|| malformed(1, "empty file"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() < 4 || toks.len() > 5 || toks[0] != MAGIC || toks[1] != VERSION {
        return Err(malformed(1, format!("expected `{MAGIC} {VERSION} N t [w]`")));
    }
    let n = parse_count(toks[2], 1, "row count")?;
    let t = parse_count(toks[3], 1, "column count")?;
    let w = toks.get(4).map(|tok| parse_count(tok, 1, "weight")).transpose()?;

    let mut code = BinaryCode::zeros(n, t);
    for i in 0..n {
        let (no, row) = lines
            .next()
            .ok_or_else(|| malformed(i + 2, format!("expected {n} rows, found {i}")))?;
        if row.starts_with('#') {
            return Err(malformed(no, format!("expected {n} rows, found {i}")));
        }
        if row.len() != t {
            return Err(malformed(no, format!("row has {} characters, expected {t}", row.len())));
        }
        for (j, c) in row.bytes().enumerate() {
            match c {
                b'0' => {}
                b'1' => code.set(i, j, true),
                _ => return Err(malformed(no, format!("invalid character `{}` in column {j}", c as char))),
            }
        }
    }
    for (no, rest) in lines {
        if !(rest.trim().is_empty() || rest.starts_with('#')) {
            return Err(malformed(no, format!("expected {n} rows, found more")));
        }
    }
    match w {
        Some(w) => code.with_weight(w).map_err(|e| malformed(1, format!("declared weight violated: {e}"))),
        None => Ok(code),
    }
}

/// Serializes `code`; the header carries the weight when one is declared.
pub fn format_matrix(code: &BinaryCode) -> String {
    let mut out = String::with_capacity((code.cols() + 1) * (code.rows() + 1));
    let _ = write!(out, "{MAGIC} {VERSION} {} {}", code.rows(), code.cols());
    if let Some(w) = code.declared_weight() {
        let _ = write!(out, " {w}");
    }
    out.push('\n');
    for i in 0..code.rows() {
        out.extend(code.row_bits(i).map(|b| if b { '1' } else { '0' }));
        out.push('\n');
    }
    out
}

pub fn read_matrix(path: impl AsRef<Path>) -> Result<BinaryCode> {
    let text = std::fs::read_to_string(path.as_ref())
        .map_err(|e| Error::Io(format!("{}: {e}", path.as_ref().display())))?;
    parse_matrix(&text)
}

pub fn write_matrix(code: &BinaryCode, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path.as_ref(), format_matrix(code))
        .map_err(|e| Error::Io(format!("{}: {e}", path.as_ref().display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let x = BinaryCode::identity(3).with_weight(1).unwrap();
        let text = format_matrix(&x);
        assert_eq!(text, "SIC v1 3 3 1\n100\n010\n001\n");
        let y = parse_matrix(&text).unwrap();
        assert_eq!(y, x);
        assert_eq!(parse_matrix("SIC v1 1 2\n10\n# note\n\n").unwrap(), BinaryCode::from_rows(&[[true, false]]).unwrap());
    }

    #[test]
    fn malformed_inputs() {
        let line = |s: &str| match parse_matrix(s).unwrap_err() {
            Error::MalformedFile { line, .. } => line,
            e => panic!("unexpected {e}"),
        };
        assert_eq!(line(""), 1);
        assert_eq!(line("SIC v2 1 1\n1\n"), 1);
        assert_eq!(line("SIC v1 3 2\n10\n01\n"), 4);
        assert_eq!(line("SIC v1 1 2\n10\n01\n"), 3);
        assert_eq!(line("SIC v1 2 2\n10\n0x\n"), 3);
        assert_eq!(line("SIC v1 2 2\n10\n011\n"), 3);
        let err = parse_matrix("SIC v1 2 2 1\n11\n01\n").unwrap_err();
        assert!(err.to_string().contains("column 1"), "{err}");
        let err = parse_matrix("SIC v1 2 2 1\n10\n01\n").map(|x| x.declared_weight());
        assert_eq!(err, Ok(Some(1)));
    }
}
