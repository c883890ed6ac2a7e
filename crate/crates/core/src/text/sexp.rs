use thiserror::Error;

use super::cursor::Cursor;
use super::ParseError;
use crate::derivation::{Derivation, RuleTag};
use crate::formula::Atom;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DerivationParseError {
    #[error(transparent)]
    Syntax(#[from] ParseError),
    #[error("at offset {offset}: unknown rule {name:?}")]
    UnknownRule { offset: usize, name: String },
    #[error("at offset {offset}: {rule} takes {expected} argument(s), got {found}")]
    ArityError {
        offset: usize,
        rule: String,
        expected: usize,
        found: usize,
    },
}

/// `(rule child...)` with ASCII rule names; axioms are `(ax atom)`.
pub fn render_derivation(d: &Derivation) -> String {
    let mut out = String::new();
    render_into(d, &mut out);
    out
}

fn render_into(d: &Derivation, out: &mut String) {
    out.push('(');
    out.push_str(d.tag().ascii_name());
    match d {
        Derivation::Ax(a) => {
            out.push(' ');
            out.push_str(a.name());
        }
        _ => {
            for p in d.premises() {
                out.push(' ');
                render_into(p, out);
            }
        }
    }
    out.push(')');
}

pub fn parse_derivation(s: &str) -> Result<Derivation, DerivationParseError> {
    let mut c = Cursor::new(s);
    let d = node(&mut c)?;
    c.end()?;
    Ok(d)
}

fn rule_name<'a>(c: &mut Cursor<'a>) -> &'a str {
    c.skip_ws();
    let rest = c.rest();
    let len = rest
        .char_indices()
        .find(|&(_, ch)| ch.is_whitespace() || ch == '(' || ch == ')')
        .map_or(rest.len(), |(i, _)| i);
    c.pos += len;
    &rest[..len]
}

fn node(c: &mut Cursor) -> Result<Derivation, DerivationParseError> {
    c.expect(&["("], "(")?;
    c.skip_ws();
    let at = c.pos;
    let name = rule_name(c);
    if name.is_empty() {
        return Err(c.error("a rule name").into());
    }
    let tag = RuleTag::from_name(name).ok_or_else(|| DerivationParseError::UnknownRule {
        offset: at,
        name: name.to_string(),
    })?;
    if tag == RuleTag::Ax {
        let atom = c.ident().ok_or_else(|| c.error("an atom"))?;
        c.expect(&[")"], ")")?;
        return Ok(Derivation::Ax(Atom::new(atom)));
    }
    let mut children = Vec::new();
    while c.peek() == Some('(') {
        children.push(node(c)?);
    }
    c.expect(&[")"], "( or )")?;
    if children.len() != tag.arity() {
        return Err(DerivationParseError::ArityError {
            offset: at,
            rule: name.to_string(),
            expected: tag.arity(),
            found: children.len(),
        });
    }
    let mut it = children.into_iter();
    Ok(match tag.arity() {
        1 => Derivation::unary(tag, it.next().expect("one child")),
        _ => {
            let l = it.next().expect("two children");
            Derivation::binary(tag, l, it.next().expect("two children"))
        }
    })
}
