use std::sync::Arc;

use super::cursor::Cursor;
use super::ParseError;
use crate::cps::{Name, SemTerm};

/// Parses `\x -> t`, `\(x, y) -> t`, `(t, u)` and application by
/// juxtaposition. `λ`, `→` and `.` are accepted as alternatives. Identifiers not
/// bound by an enclosing lambda become constants.
pub fn parse_term(s: &str) -> Result<SemTerm, ParseError> {
    let mut c = Cursor::new(s);
    let mut scope = Vec::new();
    let t = term(&mut c, &mut scope)?;
    c.end()?;
    Ok(t)
}

fn term(c: &mut Cursor, scope: &mut Vec<Name>) -> Result<SemTerm, ParseError> {
    if c.eat_any(&["\\", "λ"]) {
        return lambda(c, scope);
    }
    let mut t = atom(c, scope)?;
    loop {
        match c.peek() {
            Some('\\') | Some('λ') => {
                let arg = term(c, scope)?;
                return Ok(SemTerm::app(t, arg));
            }
            Some('(') => t = SemTerm::app(t, atom(c, scope)?),
            Some(ch) if super::cursor::is_ident_char(ch) => t = SemTerm::app(t, atom(c, scope)?),
            _ => return Ok(t),
        }
    }
}

fn binder<'a>(c: &mut Cursor<'a>) -> Result<&'a str, ParseError> {
    c.ident().ok_or_else(|| c.error("a variable"))
}

fn lambda(c: &mut Cursor, scope: &mut Vec<Name>) -> Result<SemTerm, ParseError> {
    let names: Vec<Name> = if c.eat("(") {
        let x = binder(c)?;
        c.expect(&[","], ",")?;
        let y = binder(c)?;
        c.expect(&[")"], ")")?;
        vec![Arc::from(x), Arc::from(y)]
    } else {
        vec![Arc::from(binder(c)?)]
    };
    c.expect(&["->", "→", "."], "->")?;
    let depth = scope.len();
    scope.extend(names.iter().cloned());
    let body = term(c, scope);
    scope.truncate(depth);
    let body = Arc::new(body?);
    Ok(match names.as_slice() {
        [x] => SemTerm::Lam(x.clone(), body),
        [x, y] => SemTerm::PairLam(x.clone(), y.clone(), body),
        _ => unreachable!(),
    })
}

fn atom(c: &mut Cursor, scope: &mut Vec<Name>) -> Result<SemTerm, ParseError> {
    if c.eat("(") {
        let t = term(c, scope)?;
        if c.eat(",") {
            let u = term(c, scope)?;
            c.expect(&[")"], ")")?;
            return Ok(SemTerm::pair(t, u));
        }
        c.expect(&[")"], ", or )")?;
        return Ok(t);
    }
    let x = c.ident().ok_or_else(|| c.error("a term"))?;
    Ok(if scope.iter().any(|b| &**b == x) {
        SemTerm::var(x)
    } else {
        SemTerm::konst(x)
    })
}

/// Inverse of [`parse_term`] for terms whose free identifiers are constants.
pub fn render_term(t: &SemTerm) -> String {
    let mut out = String::new();
    render(t, Pos::Top, &mut out);
    out
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Pos {
    Top,
    Head,
    Arg,
}

fn render(t: &SemTerm, pos: Pos, out: &mut String) {
    match t {
        SemTerm::Var(x) | SemTerm::Const(x) => out.push_str(x),
        SemTerm::Lam(..) | SemTerm::PairLam(..) => {
            let wrap = pos != Pos::Top;
            if wrap {
                out.push('(');
            }
            match t {
                SemTerm::Lam(x, b) => {
                    out.push_str(&format!("\\{x} -> "));
                    render(b, Pos::Top, out);
                }
                SemTerm::PairLam(x, y, b) => {
                    out.push_str(&format!("\\({x}, {y}) -> "));
                    render(b, Pos::Top, out);
                }
                _ => unreachable!(),
            }
            if wrap {
                out.push(')');
            }
        }
        SemTerm::App(f, a) => {
            let wrap = pos == Pos::Arg;
            if wrap {
                out.push('(');
            }
            render(f, Pos::Head, out);
            out.push(' ');
            render(a, Pos::Arg, out);
            if wrap {
                out.push(')');
            }
        }
        SemTerm::MkPair(l, r) => {
            out.push('(');
            render(l, Pos::Top, out);
            out.push_str(", ");
            render(r, Pos::Top, out);
            out.push(')');
        }
    }
}
