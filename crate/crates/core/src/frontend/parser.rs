//! Recursive-descent formula parser.
//!
//! Precedence, tightest first: `!`, `&`, `|`, `->`, `<->`. `->` associates
//! to the right, `&`, `|` and `<->` to the left.

use super::lexer::{tokenize, Token, TokenKind};
use super::ParseError;
use crate::logic::{Formula, Vocabulary};

/// Parses a single formula on line 1.
pub fn parse_formula(text: &str, vocab: &Vocabulary) -> Result<Formula, ParseError> {
    parse_formula_at(text, vocab, 1, 1)
}

/// Parses a formula that starts at `line`, `column` of some larger source.
pub fn parse_formula_at(
    text: &str,
    vocab: &Vocabulary,
    line: usize,
    column: usize,
) -> Result<Formula, ParseError> {
    let tokens = tokenize(text, line, column)?;
    let end = column + text.trim_end().chars().count();
    parse_tokens(&tokens, vocab, line, end)
}

/// Parses a complete token slice. `end` is the column reported when input
/// runs out.
pub fn parse_tokens(
    tokens: &[Token],
    vocab: &Vocabulary,
    line: usize,
    end: usize,
) -> Result<Formula, ParseError> {
    let mut p = Parser {
        tokens,
        pos: 0,
        vocab,
        line,
        end,
    };
    let f = p.iff()?;
    match p.peek() {
        None => Ok(f),
        Some(t) => Err(p.error_at(t, format!("unexpected {}", t.kind))),
    }
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
    vocab: &'a Vocabulary,
    line: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&'a Token> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, kind: &TokenKind) -> bool {
        if self.peek().is_some_and(|t| &t.kind == kind) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error_at(&self, t: &Token, message: String) -> ParseError {
        ParseError::new(t.line, t.column, message)
    }

    fn iff(&mut self) -> Result<Formula, ParseError> {
        let mut f = self.implication()?;
        while self.eat(&TokenKind::Iff) {
            let g = self.implication()?;
            f = Formula::iff(f, g);
        }
        Ok(f)
    }

    fn implication(&mut self) -> Result<Formula, ParseError> {
        let f = self.disjunction()?;
        if self.eat(&TokenKind::Implies) {
            let g = self.implication()?;
            return Ok(Formula::implies(f, g));
        }
        Ok(f)
    }

    fn disjunction(&mut self) -> Result<Formula, ParseError> {
        let mut f = self.conjunction()?;
        while self.eat(&TokenKind::Or) {
            f = Formula::or(f, self.conjunction()?);
        }
        Ok(f)
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let mut f = self.unary()?;
        while self.eat(&TokenKind::And) {
            f = Formula::and(f, self.unary()?);
        }
        Ok(f)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        if self.eat(&TokenKind::Not) {
            return Ok(Formula::not(self.unary()?));
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Formula, ParseError> {
        let Some(t) = self.peek() else {
            return Err(ParseError::new(
                self.line,
                self.end,
                "expected a formula, found end of input".to_string(),
            ));
        };
        self.pos += 1;
        match &t.kind {
            TokenKind::True => Ok(Formula::True),
            TokenKind::False => Ok(Formula::False),
            TokenKind::Ident(name) => self
                .vocab
                .index_of(name)
                .map(Formula::atom)
                .ok_or_else(|| self.error_at(t, format!("unknown atom `{name}`"))),
            TokenKind::LParen => {
                let f = self.iff()?;
                if self.eat(&TokenKind::RParen) {
                    Ok(f)
                } else {
                    let message = "expected `)`".to_string();
                    Err(match self.peek() {
                        Some(t) => self.error_at(t, format!("{message}, found {}", t.kind)),
                        None => ParseError::new(self.line, self.end, message),
                    })
                }
            }
            other => Err(self.error_at(t, format!("expected a formula, found {other}"))),
        }
    }
}
