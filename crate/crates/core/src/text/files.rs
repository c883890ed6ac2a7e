use thiserror::Error;

use super::cursor::Cursor;
use super::ParseError;
use crate::semantics::{Lexicon, Model, ModelError};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum FileError {
    #[error("line {line}: {source}")]
    Syntax { line: usize, source: ParseError },
    #[error("line {line}: {source}")]
    Model { line: usize, source: ModelError },
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("no entities line")]
    MissingEntities,
}

/// Non-blank lines with `#` comments removed, numbered from 1.
fn lines(src: &str) -> impl Iterator<Item = (usize, &str)> {
    src.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

/// Reads
///
/// ```text
/// entities e1 e2
/// pred person e1 e2
/// rel loves (e1, e1) (e2, e2)
/// ```
///
/// The `entities` line must come first.
pub fn parse_model(src: &str) -> Result<Model, FileError> {
    let mut model: Option<Model> = None;
    for (line, text) in lines(src) {
        let malformed = |message: &str| FileError::Malformed {
            line,
            message: message.to_string(),
        };
        let syntax = |source| FileError::Syntax { line, source };
        let in_model = |source| FileError::Model { line, source };
        let mut c = Cursor::new(text);
        let keyword = c.ident().ok_or_else(|| malformed("expected entities, pred or rel"))?;
        match (keyword, model.as_mut()) {
            ("entities", None) => {
                let mut names = Vec::new();
                while let Some(e) = c.ident() {
                    names.push(e);
                }
                c.end().map_err(syntax)?;
                model = Some(Model::new(&names).map_err(in_model)?);
            }
            ("entities", Some(_)) => return Err(malformed("entities given twice")),
            ("pred" | "rel", None) => return Err(malformed("entities must come first")),
            ("pred", Some(m)) => {
                let name = c.ident().ok_or_else(|| syntax(c.error("a predicate name")))?;
                let mut members = Vec::new();
                while let Some(e) = c.ident() {
                    members.push(e);
                }
                c.end().map_err(syntax)?;
                m.add_pred(name, &members).map_err(in_model)?;
            }
            ("rel", Some(m)) => {
                let name = c.ident().ok_or_else(|| syntax(c.error("a relation name")))?;
                let mut pairs = Vec::new();
                while c.eat("(") {
                    let a = c.ident().ok_or_else(|| syntax(c.error("an entity")))?;
                    c.expect(&[","], ",").map_err(syntax)?;
                    let b = c.ident().ok_or_else(|| syntax(c.error("an entity")))?;
                    c.expect(&[")"], ")").map_err(syntax)?;
                    pairs.push((a, b));
                }
                c.end().map_err(syntax)?;
                m.add_rel(name, &pairs).map_err(in_model)?;
            }
            (other, _) => return Err(malformed(&format!("unknown keyword {other}"))),
        }
    }
    model.ok_or(FileError::MissingEntities)
}

/// Byte offset of the `=` separating formula from term, skipping the arrows
/// `=>` and `<=`.
fn separator(s: &str) -> Option<usize> {
    let b = s.as_bytes();
    (0..b.len()).find(|&i| b[i] == b'=' && b.get(i + 1) != Some(&b'>') && (i == 0 || b[i - 1] != b'<'))
}

/// Reads lines `word : FORMULA = TERM`.
pub fn parse_lexicon(src: &str) -> Result<Lexicon, FileError> {
    let mut lex = Lexicon::new();
    for (line, text) in lines(src) {
        let malformed = |message: &str| FileError::Malformed {
            line,
            message: message.to_string(),
        };
        let (word, rest) = text
            .split_once(':')
            .ok_or_else(|| malformed("expected word : formula = term"))?;
        let word = word.trim();
        if word.is_empty() || !word.chars().all(super::cursor::is_ident_char) {
            return Err(malformed("expected a word before :"));
        }
        let eq = separator(rest).ok_or_else(|| malformed("expected = before the term"))?;
        let shift = |e: ParseError, by: usize| FileError::Syntax {
            line,
            source: ParseError {
                offset: e.offset + by,
                expected: e.expected,
            },
        };
        let base = text.len() - rest.len();
        let formula = super::parse_formula(&rest[..eq]).map_err(|e| shift(e, base))?;
        let term = super::parse_term(&rest[eq + 1..]).map_err(|e| shift(e, base + eq + 1))?;
        if lex.get(word).is_some() {
            return Err(malformed(&format!("{word} defined twice")));
        }
        lex.insert(word, formula, term);
    }
    Ok(lex)
}
