//! Tokens of the formula and rule syntax.

use std::fmt;

use super::ParseError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TokenKind {
    Ident(String),
    True,
    False,
    Wrt,
    Given,
    Not,
    And,
    Or,
    Implies,
    Iff,
    LParen,
    RParen,
    /// `|~`
    Entails,
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TokenKind::Ident(name) => write!(f, "`{name}`"),
            TokenKind::True => f.write_str("`true`"),
            TokenKind::False => f.write_str("`false`"),
            TokenKind::Wrt => f.write_str("`wrt`"),
            TokenKind::Given => f.write_str("`given`"),
            TokenKind::Not => f.write_str("`!`"),
            TokenKind::And => f.write_str("`&`"),
            TokenKind::Or => f.write_str("`|`"),
            TokenKind::Implies => f.write_str("`->`"),
            TokenKind::Iff => f.write_str("`<->`"),
            TokenKind::LParen => f.write_str("`(`"),
            TokenKind::RParen => f.write_str("`)`"),
            TokenKind::Entails => f.write_str("`|~`"),
        }
    }
}

/// A token with its 1-based source position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub line: usize,
    pub column: usize,
}

/// Splits `text` into tokens. `column` is the position of the first
/// character of `text` on `line`.
pub fn tokenize(text: &str, line: usize, column: usize) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = column + i;
        let next = chars.get(i + 1).copied();
        let (kind, width) = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '!' => (TokenKind::Not, 1),
            '&' => (TokenKind::And, 1),
            '(' => (TokenKind::LParen, 1),
            ')' => (TokenKind::RParen, 1),
            '|' if next == Some('~') => (TokenKind::Entails, 2),
            '|' => (TokenKind::Or, 1),
            '-' if next == Some('>') => (TokenKind::Implies, 2),
            '<' if next == Some('-') && chars.get(i + 2) == Some(&'>') => (TokenKind::Iff, 3),
            c if c.is_ascii_alphabetic() || c == '_' => {
                let len = chars[i..]
                    .iter()
                    .take_while(|c| c.is_ascii_alphanumeric() || **c == '_')
                    .count();
                let word: String = chars[i..i + len].iter().collect();
                let kind = match word.as_str() {
                    "true" => TokenKind::True,
                    "false" => TokenKind::False,
                    "wrt" => TokenKind::Wrt,
                    "given" => TokenKind::Given,
                    _ => TokenKind::Ident(word),
                };
                (kind, len)
            }
            other => {
                return Err(ParseError::new(
                    line,
                    col,
                    format!("unexpected character `{other}`"),
                ))
            }
        };
        tokens.push(Token {
            kind,
            line,
            column: col,
        });
        i += width;
    }
    Ok(tokens)
}
