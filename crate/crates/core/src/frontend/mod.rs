//! Text formats and the command-line interface.

pub mod cli;
pub mod document;
pub mod lexer;
pub mod parser;

use thiserror::Error;

pub use document::{
    parse_dist, parse_kb, print_dist, Body, Directive, ParsedDocument, SourceDirective,
};
pub use parser::{parse_formula, parse_formula_at};

/// A syntax or vocabulary error at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: String) -> ParseError {
        ParseError {
            line,
            column,
            message,
        }
    }
}
