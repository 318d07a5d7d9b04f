use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagnosticKind {
    Syntax,
    DuplicateId,
    UnknownIdentifier,
    /// The identifier exists but names the wrong kind of entity.
    WrongKind,
    InvalidValue,
    BudgetInvalid,
    UnknownSuite,
    /// The engine rejected well-formed input (e.g. concentric points).
    Evaluation,
}

/// A positioned error. `line` and `column` are 1-based and count chars;
/// `excerpt` is the full source line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub kind: DiagnosticKind,
    pub message: String,
    pub line: usize,
    pub column: usize,
    pub excerpt: String,
}

impl Diagnostic {
    pub fn new(kind: DiagnosticKind, message: impl Into<String>, line: usize, column: usize, excerpt: &str) -> Self {
        Diagnostic {
            kind,
            message: message.into(),
            line,
            column,
            excerpt: excerpt.to_string(),
        }
    }

    /// Re-anchor a single-line diagnostic onto `line` of a larger text.
    pub fn at_line(mut self, line: usize) -> Self {
        self.line = line;
        self
    }

    /// The text under the caret: the token starting at `column`.
    pub fn token(&self) -> &str {
        let start = self
            .excerpt
            .char_indices()
            .nth(self.column.saturating_sub(1))
            .map_or(self.excerpt.len(), |(i, _)| i);
        let rest = &self.excerpt[start..];
        let end = rest.find(char::is_whitespace).unwrap_or(rest.len());
        &rest[..end]
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gutter = self.line.to_string();
        let pad = " ".repeat(gutter.len());
        writeln!(f, "error: {}", self.message)?;
        writeln!(f, "{pad}--> line {}, column {}", self.line, self.column)?;
        writeln!(f, "{gutter} | {}", self.excerpt)?;
        write!(f, "{pad} | {}^", " ".repeat(self.column.saturating_sub(1)))
    }
}

impl std::error::Error for Diagnostic {}

/// Split a line into tokens with their 1-based char columns. `{`, `}` and
/// `=` are tokens on their own; `#` starts a comment.
pub(crate) fn tokenize(line: &str) -> Vec<(String, usize)> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut start = 0;
    for (col, ch) in line.chars().enumerate().map(|(i, c)| (i + 1, c)) {
        if ch == '#' {
            break;
        }
        if ch.is_whitespace() || matches!(ch, '{' | '}' | '=') {
            if !cur.is_empty() {
                out.push((std::mem::take(&mut cur), start));
            }
            if !ch.is_whitespace() {
                out.push((ch.to_string(), col));
            }
            continue;
        }
        if cur.is_empty() {
            start = col;
        }
        cur.push(ch);
    }
    if !cur.is_empty() {
        out.push((cur, start));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens_and_columns() {
        let toks = tokenize("region R={b1  b2} # note");
        let cols: Vec<_> = toks.iter().map(|(t, c)| (t.as_str(), *c)).collect();
        assert_eq!(
            cols,
            vec![("region", 1), ("R", 8), ("=", 9), ("{", 10), ("b1", 11), ("b2", 15), ("}", 17)]
        );
    }

    #[test]
    fn caret_rendering() {
        let d = Diagnostic::new(DiagnosticKind::Syntax, "bad", 1, 6, "ball x");
        assert_eq!(d.to_string(), "error: bad\n --> line 1, column 6\n1 | ball x\n  |      ^");
        assert_eq!(d.token(), "x");
    }
}
