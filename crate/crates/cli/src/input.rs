//! The plain-text quiver format.
//!
//! ```text
//! # rank 3, one valued arrow
//! n 3
//! arrow 1 2
//! arrow 2 3 1 2
//! ```
//!
//! Lines are `n <count>` (exactly once, before any arrow) and
//! `arrow <src> <dst> [<a> <b>]`, where the valuation defaults to `1 1`.
//! Everything after a `#` is a comment; blank lines are skipped.

use arq_core::{Error, ValuedQuiver};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Invalid {
        line: usize,
        #[source]
        source: Error,
    },
}

impl ParseError {
    pub fn line(&self) -> usize {
        match self {
            ParseError::Syntax { line, .. } | ParseError::Invalid { line, .. } => *line,
        }
    }
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        msg: msg.into(),
    }
}

fn number<T: std::str::FromStr>(line: usize, what: &str, tok: &str) -> Result<T, ParseError> {
    tok.parse()
        .map_err(|_| syntax(line, format!("{what} must be an integer, got {tok:?}")))
}

pub fn parse(text: &str) -> Result<ValuedQuiver, ParseError> {
    let mut n: Option<(usize, usize)> = None;
    let mut arrows = Vec::new();
    let mut lines = Vec::new();
    let mut last = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last = line;
        let body = raw.split('#').next().unwrap_or("");
        if let Some(c) = body.chars().find(|c| !c.is_ascii()) {
            return Err(syntax(line, format!("non-ASCII character {c:?}")));
        }
        let toks: Vec<&str> = body
            .split([' ', '\t', '\r'])
            .filter(|t| !t.is_empty())
            .collect();
        match toks.as_slice() {
            [] => {}
            ["n", count] => {
                if let Some((_, first)) = n {
                    return Err(syntax(
                        line,
                        format!("second `n` line (first on line {first})"),
                    ));
                }
                let count: usize = number(line, "vertex count", count)?;
                if count == 0 {
                    return Err(syntax(line, "vertex count must be positive"));
                }
                n = Some((count, line));
            }
            ["n", ..] => return Err(syntax(line, "expected `n <count>`")),
            ["arrow", rest @ ..] => {
                if n.is_none() {
                    return Err(syntax(line, "`arrow` before the `n` line"));
                }
                let (src, dst, val) = match rest {
                    [s, d] => (s, d, (1, 1)),
                    [s, d, a, b] => (
                        s,
                        d,
                        (number(line, "valuation", a)?, number(line, "valuation", b)?),
                    ),
                    _ => return Err(syntax(line, "expected `arrow <src> <dst> [<a> <b>]`")),
                };
                let src: usize = number(line, "source", src)?;
                let dst: usize = number(line, "target", dst)?;
                arrows.push((src, dst, val));
                lines.push(line);
            }
            [other, ..] => return Err(syntax(line, format!("unknown keyword {other:?}"))),
        }
    }
    let Some((count, n_line)) = n else {
        return Err(syntax(last.max(1), "missing `n <count>` line"));
    };
    ValuedQuiver::new(count, arrows).map_err(|e| {
        let line = e.arrow().map_or(n_line, |a| lines[a]);
        ParseError::Invalid { line, source: e }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g2_and_a1() {
        let q = parse("n 2\narrow 1 2 1 3").unwrap();
        assert_eq!(q.n(), 2);
        assert_eq!(q.arrows()[0].val.1, 3);
        assert_eq!(parse("n 1").unwrap().n(), 1);
    }

    #[test]
    fn comments_blank_lines_and_crlf() {
        let q = parse("# header\r\n\r\nn 3\r\narrow 1 2 # trailing\r\n\tarrow\t3\t2\r\n").unwrap();
        assert_eq!(q.arrows().len(), 2);
    }

    #[test]
    fn errors_name_their_line() {
        let e = parse("n 2\narrow 1 2 0 1").unwrap_err();
        assert!(matches!(
            e,
            ParseError::Invalid {
                line: 2,
                source: Error::BadValuation { .. }
            }
        ));
        assert_eq!(parse("arrow 1 2\nn 2").unwrap_err().line(), 1);
        assert_eq!(parse("n 2\nn 2").unwrap_err().line(), 2);
        assert_eq!(parse("n 3\narrow 1 2\narrow 2 1").unwrap_err().line(), 3);
        assert_eq!(parse("n 2\narrow 1 x").unwrap_err().line(), 2);
        assert_eq!(parse("n 2\narrow 1 2 3").unwrap_err().line(), 2);
        assert_eq!(parse("n 2\nedge 1 2").unwrap_err().line(), 2);
        assert_eq!(parse("n 2\narrow 1 5").unwrap_err().line(), 2);
        assert_eq!(parse("# nothing\n").unwrap_err().line(), 1);
        assert_eq!(parse("").unwrap_err().line(), 1);
        assert_eq!(parse("n 0").unwrap_err().line(), 1);
        assert_eq!(parse("n -1").unwrap_err().line(), 1);
        assert_eq!(parse("N 2").unwrap_err().line(), 1);
    }
}
