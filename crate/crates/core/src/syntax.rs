//! Shared error type for the textual formats (braid words, traces, terms).

use std::fmt;

/// A parse failure at a 1-based line/column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }

    /// Shift the reported position when the failing text was embedded in a larger document.
    pub(crate) fn offset(mut self, line: usize, column: usize) -> Self {
        if self.line == 1 {
            self.column += column;
        }
        self.line += line;
        self
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}
