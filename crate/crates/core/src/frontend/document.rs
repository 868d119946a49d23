//! Knowledge-base and distribution files.
//!
//! Both formats are line oriented; `#` starts a comment. A knowledge base
//! declares `atoms:` and then `rule:` and `indep:` lines. A distribution file
//! declares `atoms:` and `top:` and then one `<world> : <level>` line per
//! world, where a world is either a bitstring (last atom first) or a list of
//! literals such as `a !c`.

use std::fmt::Write as _;

use super::lexer::{tokenize, Token, TokenKind};
use super::parser::parse_tokens;
use super::ParseError;
use crate::logic::{is_valid_atom_name, Vocabulary, World, MAX_ATOMS};
use crate::possibility::{Dist, Level, Measure};
use crate::ranking::{inject_independence, IndependenceAssertion, Rule, RuleBase};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Directive {
    Atoms(Vec<String>),
    Rule(Rule),
    Indep(IndependenceAssertion),
    Top(Level),
    World(World, Level),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SourceDirective {
    pub line: usize,
    pub directive: Directive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Body {
    Rules(RuleBase),
    Dist(Dist),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedDocument {
    pub vocab: Vocabulary,
    pub body: Body,
    pub directives: Vec<SourceDirective>,
}

impl ParsedDocument {
    pub fn rule_base(&self) -> Option<&RuleBase> {
        match &self.body {
            Body::Rules(kb) => Some(kb),
            Body::Dist(_) => None,
        }
    }

    pub fn dist(&self) -> Option<&Dist> {
        match &self.body {
            Body::Dist(d) => Some(d),
            Body::Rules(_) => None,
        }
    }

    /// Source line of rule `index` of the compiled rule base. Injected rules
    /// point at their `indep:` line.
    pub fn rule_line(&self, index: usize) -> Option<usize> {
        let rules = self
            .directives
            .iter()
            .filter(|d| matches!(d.directive, Directive::Rule(_)));
        let indeps = self
            .directives
            .iter()
            .filter(|d| matches!(d.directive, Directive::Indep(_)));
        rules.chain(indeps).nth(index).map(|d| d.line)
    }
}

/// One non-blank line with its comment stripped.
struct Line<'a> {
    number: usize,
    keyword: Option<(&'a str, usize)>,
    rest: &'a str,
    rest_column: usize,
}

fn column_of(line: &str, byte: usize) -> usize {
    line[..byte].chars().count() + 1
}

fn lines(text: &str) -> impl Iterator<Item = Line<'_>> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            return None;
        }
        let start = content.len() - content.trim_start().len();
        let keyword = content.find(':').and_then(|colon| {
            let word = content[start..colon].trim_end();
            is_valid_atom_name(word)
                .then_some((word, colon))
                .filter(|(w, _)| !w.is_empty())
        });
        let (keyword, rest_byte) = match keyword {
            Some((word, colon)) => (Some((word, column_of(content, start))), colon + 1),
            None => (None, start),
        };
        Some(Line {
            number: i + 1,
            keyword,
            rest: &content[rest_byte..],
            rest_column: column_of(content, rest_byte),
        })
    })
}

fn parse_atoms(line: &Line<'_>, declared: &mut Vec<String>) -> Result<Vec<String>, ParseError> {
    let mut names = Vec::new();
    let mut offset = 0;
    for word in line.rest.split_whitespace() {
        let byte = offset
            + line.rest[offset..]
                .find(word)
                .expect("word comes from rest");
        offset = byte + word.len();
        let column = line.rest_column + line.rest[..byte].chars().count();
        if !is_valid_atom_name(word) {
            return Err(ParseError::new(
                line.number,
                column,
                format!("invalid atom name `{word}`"),
            ));
        }
        if declared.iter().any(|d| d == word) {
            return Err(ParseError::new(
                line.number,
                column,
                format!("duplicate atom declaration `{word}`"),
            ));
        }
        declared.push(word.to_string());
        names.push(word.to_string());
    }
    if names.is_empty() {
        return Err(ParseError::new(
            line.number,
            line.rest_column,
            "expected at least one atom name".to_string(),
        ));
    }
    if declared.len() > MAX_ATOMS {
        return Err(ParseError::new(
            line.number,
            line.rest_column,
            format!("at most {MAX_ATOMS} atoms are supported"),
        ));
    }
    Ok(names)
}

fn require_vocab<'v>(
    vocab: &'v Option<Vocabulary>,
    line: &Line<'_>,
) -> Result<&'v Vocabulary, ParseError> {
    let column = line.keyword.map_or(line.rest_column, |(_, c)| c);
    vocab.as_ref().ok_or_else(|| {
        ParseError::new(
            line.number,
            column,
            "`atoms:` must be declared before this line".to_string(),
        )
    })
}

fn end_column(line: &Line<'_>) -> usize {
    line.rest_column + line.rest.trim_end().chars().count()
}

/// Splits `tokens` at every token equal to one of `separators`, in order.
/// Each separator must occur exactly once.
fn split_at<'t>(
    tokens: &'t [Token],
    separators: &[TokenKind],
    line: &Line<'_>,
) -> Result<Vec<(&'t [Token], usize)>, ParseError> {
    let mut parts = Vec::new();
    let mut rest = tokens;
    for sep in separators {
        let Some(i) = rest.iter().position(|t| &t.kind == sep) else {
            return Err(ParseError::new(
                line.number,
                end_column(line) + 1,
                format!("expected {sep}"),
            ));
        };
        parts.push((&rest[..i], rest[i].column));
        rest = &rest[i + 1..];
    }
    parts.push((rest, end_column(line) + 1));
    for (part, _) in &parts {
        if let Some(t) = part.iter().find(|t| separators.contains(&t.kind)) {
            return Err(ParseError::new(
                t.line,
                t.column,
                format!("unexpected {}", t.kind),
            ));
        }
    }
    Ok(parts)
}

fn parse_part(
    part: (&[Token], usize),
    vocab: &Vocabulary,
    line: &Line<'_>,
) -> Result<crate::logic::Formula, ParseError> {
    parse_tokens(part.0, vocab, line.number, part.1)
}

/// Parses a knowledge base. `indep:` directives are compiled into injected
/// rules after all user rules, in file order.
pub fn parse_kb(text: &str) -> Result<ParsedDocument, ParseError> {
    let mut declared = Vec::new();
    let mut vocab: Option<Vocabulary> = None;
    let mut directives = Vec::new();
    let mut last_line = 0;
    for line in lines(text) {
        last_line = line.number;
        let Some((keyword, kw_column)) = line.keyword else {
            return Err(ParseError::new(
                line.number,
                line.rest_column,
                "expected a directive (`atoms:`, `rule:` or `indep:`)".to_string(),
            ));
        };
        let directive = match keyword {
            "atoms" => {
                let names = parse_atoms(&line, &mut declared)?;
                vocab =
                    Some(Vocabulary::new(declared.iter().cloned()).map_err(|e| {
                        ParseError::new(line.number, line.rest_column, e.to_string())
                    })?);
                Directive::Atoms(names)
            }
            "rule" => {
                let v = require_vocab(&vocab, &line)?;
                let tokens = tokenize(line.rest, line.number, line.rest_column)?;
                let parts = split_at(&tokens, &[TokenKind::Entails], &line)?;
                let antecedent = parse_part(parts[0], v, &line)?;
                let consequent = parse_part(parts[1], v, &line)?;
                Directive::Rule(Rule::new(antecedent, consequent))
            }
            "indep" => {
                let v = require_vocab(&vocab, &line)?;
                let tokens = tokenize(line.rest, line.number, line.rest_column)?;
                let parts = split_at(&tokens, &[TokenKind::Wrt, TokenKind::Given], &line)?;
                let conclusion = parse_part(parts[0], v, &line)?;
                let extra = parse_part(parts[1], v, &line)?;
                let context = parse_part(parts[2], v, &line)?;
                Directive::Indep(IndependenceAssertion {
                    context,
                    extra,
                    conclusion,
                })
            }
            other => {
                return Err(ParseError::new(
                    line.number,
                    kw_column,
                    format!("unknown directive `{other}:`"),
                ))
            }
        };
        directives.push(SourceDirective {
            line: line.number,
            directive,
        });
    }
    let Some(vocab) = vocab else {
        return Err(ParseError::new(
            last_line.max(1),
            1,
            "no `atoms:` declaration".to_string(),
        ));
    };
    let mut kb = RuleBase::new(vocab.clone());
    for d in &directives {
        if let Directive::Rule(r) = &d.directive {
            kb.push(r.clone());
        }
    }
    if kb.is_empty() {
        return Err(ParseError::new(last_line.max(1), 1, "no rules".to_string()));
    }
    for d in &directives {
        if let Directive::Indep(a) = &d.directive {
            kb = inject_independence(&kb, &a.context, &a.extra, &a.conclusion);
        }
    }
    Ok(ParsedDocument {
        vocab,
        body: Body::Rules(kb),
        directives,
    })
}

fn parse_world(
    line: &Line<'_>,
    world_text: &str,
    column: usize,
    vocab: &Vocabulary,
) -> Result<World, ParseError> {
    let n = vocab.len();
    let err = |col: usize, msg: String| ParseError::new(line.number, col, msg);
    let digits = world_text.trim();
    if digits.chars().all(|c| c == '0' || c == '1') && !digits.is_empty() {
        if digits.len() != n {
            return Err(err(
                column,
                format!(
                    "bitstring `{digits}` has {} digits, expected {n}",
                    digits.len()
                ),
            ));
        }
        let bits = u32::from_str_radix(digits, 2).expect("checked digits");
        return Ok(World(bits));
    }
    let tokens = tokenize(world_text, line.number, column)?;
    let mut seen = vec![false; n];
    let mut bits = 0u32;
    let mut i = 0;
    while i < tokens.len() {
        let t = &tokens[i];
        let negated = t.kind == TokenKind::Not;
        let atom_tok = if negated { tokens.get(i + 1) } else { Some(t) };
        let Some(atom_tok) = atom_tok else {
            return Err(err(t.column, "expected an atom after `!`".to_string()));
        };
        let TokenKind::Ident(name) = &atom_tok.kind else {
            return Err(err(
                atom_tok.column,
                format!("expected a literal, found {}", atom_tok.kind),
            ));
        };
        let Some(index) = vocab.index_of(name) else {
            return Err(err(atom_tok.column, format!("unknown atom `{name}`")));
        };
        if seen[index] {
            return Err(err(atom_tok.column, format!("atom `{name}` given twice")));
        }
        seen[index] = true;
        if !negated {
            bits |= 1 << index;
        }
        i += if negated { 2 } else { 1 };
    }
    if let Some(missing) = seen.iter().position(|s| !s) {
        return Err(err(
            column,
            format!("world does not assign atom `{}`", vocab.name(missing)),
        ));
    }
    Ok(World(bits))
}

/// Parses a level, returning it with the column of its first digit.
fn parse_level(line: &Line<'_>, text: &str, column: usize) -> Result<(u32, usize), ParseError> {
    let t = text.trim();
    let col = column + text[..text.len() - text.trim_start().len()].chars().count();
    t.parse::<u32>()
        .map(|v| (v, col))
        .map_err(|_| ParseError::new(line.number, col, format!("invalid level `{t}`")))
}

/// Parses a distribution file. Worlds not listed get level 0.
pub fn parse_dist(text: &str) -> Result<ParsedDocument, ParseError> {
    let mut declared = Vec::new();
    let mut vocab: Option<Vocabulary> = None;
    let mut top: Option<u32> = None;
    let mut levels: Vec<Option<u32>> = Vec::new();
    let mut directives = Vec::new();
    let mut last_line = 0;
    for line in lines(text) {
        last_line = line.number;
        let directive = match line.keyword {
            Some(("atoms", _)) if vocab.is_none() => {
                let names = parse_atoms(&line, &mut declared)?;
                let v = Vocabulary::new(declared.iter().cloned())
                    .map_err(|e| ParseError::new(line.number, line.rest_column, e.to_string()))?;
                levels = vec![None; v.world_count()];
                vocab = Some(v);
                Directive::Atoms(names)
            }
            Some(("atoms", column)) => {
                return Err(ParseError::new(
                    line.number,
                    column,
                    "`atoms:` declared twice".to_string(),
                ))
            }
            Some(("top", column)) => {
                if top.is_some() {
                    return Err(ParseError::new(
                        line.number,
                        column,
                        "`top:` declared twice".to_string(),
                    ));
                }
                let (value, column) = parse_level(&line, line.rest, line.rest_column)?;
                if value == 0 {
                    return Err(ParseError::new(
                        line.number,
                        column,
                        "top must be positive".to_string(),
                    ));
                }
                top = Some(value);
                Directive::Top(Level::new(value))
            }
            _ => {
                let v = require_vocab(&vocab, &line)?;
                let Some(top) = top else {
                    return Err(ParseError::new(
                        line.number,
                        1,
                        "`top:` must be declared before world levels".to_string(),
                    ));
                };
                let raw = text.lines().nth(line.number - 1).unwrap_or("");
                let content = raw.split('#').next().unwrap_or("");
                let Some(colon) = content.rfind(':') else {
                    return Err(ParseError::new(
                        line.number,
                        end_column(&line) + 1,
                        "expected `<world> : <level>`".to_string(),
                    ));
                };
                let world = parse_world(&line, &content[..colon], 1, v)?;
                let (level, level_column) =
                    parse_level(&line, &content[colon + 1..], column_of(content, colon + 1))?;
                if level > top {
                    return Err(ParseError::new(
                        line.number,
                        level_column,
                        format!("level {level} exceeds top {top}"),
                    ));
                }
                if levels[world.index()].is_some() {
                    return Err(ParseError::new(
                        line.number,
                        1,
                        format!("world `{}` listed twice", world.display(v)),
                    ));
                }
                levels[world.index()] = Some(level);
                Directive::World(world, Level::new(level))
            }
        };
        directives.push(SourceDirective {
            line: line.number,
            directive,
        });
    }
    let line = last_line.max(1);
    let vocab =
        vocab.ok_or_else(|| ParseError::new(line, 1, "no `atoms:` declaration".to_string()))?;
    let top = top.ok_or_else(|| ParseError::new(line, 1, "no `top:` declaration".to_string()))?;
    let levels: Vec<u32> = levels.into_iter().map(|l| l.unwrap_or(0)).collect();
    if !levels.contains(&top) {
        return Err(ParseError::new(
            line,
            1,
            format!("distribution is not normalized: no world reaches top {top}"),
        ));
    }
    let dist = Dist::from_levels(vocab.clone(), top, &levels)
        .map_err(|e| ParseError::new(line, 1, e.to_string()))?;
    Ok(ParsedDocument {
        vocab,
        body: Body::Dist(dist),
        directives,
    })
}

/// Renders a distribution in the file format, one literal line per world.
pub fn print_dist(d: &Dist) -> String {
    let vocab = d.vocab();
    let mut s = format!("atoms: {}\ntop: {}\n", vocab.atoms().join(" "), d.top());
    for w in vocab.worlds() {
        let _ = writeln!(s, "{} : {}", w.display(vocab), d.level(w));
    }
    s
}
