use super::cursor::Cursor;
use super::ParseError;
use crate::formula::{Connective, Formula, Judgement};

const OPERATORS: &str = "an operator (* => <= + -< >- or ⊗ ⇒ ⇐ ⊕ ⇚ ⇛)";

pub fn parse_formula(s: &str) -> Result<Formula, ParseError> {
    let mut c = Cursor::new(s);
    let f = formula(&mut c)?;
    c.end()?;
    Ok(f)
}

pub fn parse_judgement(s: &str) -> Result<Judgement, ParseError> {
    let mut c = Cursor::new(s);
    let j = judgement(&mut c)?;
    c.end()?;
    Ok(j)
}

pub(crate) fn judgement(c: &mut Cursor) -> Result<Judgement, ParseError> {
    let lhs = formula(c)?;
    c.expect(&["|-", "⊢"], "|- or ⊢")?;
    let rhs = formula(c)?;
    Ok(Judgement::new(lhs, rhs))
}

pub(crate) fn formula(c: &mut Cursor) -> Result<Formula, ParseError> {
    let l = operand(c)?;
    let Some(conn) = connective(c) else { return Ok(l) };
    let r = operand(c)?;
    c.skip_ws();
    let at = c.pos;
    if connective(c).is_some() {
        return Err(ParseError {
            offset: at,
            expected: "parentheses, operators do not associate".to_string(),
        });
    }
    Ok(Formula::bin(conn, l, r))
}

fn connective(c: &mut Cursor) -> Option<Connective> {
    Connective::ALL
        .into_iter()
        .find(|&conn| c.eat(conn.ascii()) || c.eat(conn.unicode()))
}

fn operand(c: &mut Cursor) -> Result<Formula, ParseError> {
    if c.eat("(") {
        let f = formula(c)?;
        c.expect(&[")"], if f.as_bin().is_some() { ")" } else { OPERATORS })?;
        return Ok(f);
    }
    let Some(name) = c.ident() else {
        return Err(c.error("an atom or ("));
    };
    // `el a` is accepted as a spelling of the atom `a`.
    if name == "el" {
        if let Some(atom) = c.peek_ident() {
            c.ident();
            return Ok(Formula::el(atom));
        }
    }
    Ok(Formula::el(name))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::Notation;

    fn el(s: &str) -> Formula {
        Formula::el(s)
    }

    #[test]
    fn application_judgement() {
        let j = parse_judgement("np * (np => s) |- s").unwrap();
        assert_eq!(
            j,
            Judgement::new(Formula::prod(el("np"), Formula::imp_r(el("np"), el("s"))), el("s"))
        );
        assert_eq!(parse_judgement("np ⊗ (np ⇒ s) ⊢ s").unwrap(), j);
    }

    #[test]
    fn operators_do_not_associate() {
        let err = parse_formula("a * b * c").unwrap_err();
        assert_eq!(err.offset, 6);
        assert!(parse_formula("(a * b) * c").is_ok());
    }

    #[test]
    fn all_connectives_in_both_notations() {
        for conn in Connective::ALL {
            let f = Formula::bin(conn, el("a"), Formula::bin(conn, el("b"), el("c")));
            for n in [Notation::Ascii, Notation::Unicode] {
                assert_eq!(parse_formula(&f.render(n)).unwrap(), f);
            }
        }
    }

    #[test]
    fn el_prefix_and_whitespace() {
        assert_eq!(
            parse_judgement("el n ⊢ el n").unwrap(),
            Judgement::new(el("n"), el("n"))
        );
        assert_eq!(parse_formula("el").unwrap(), el("el"));
        assert_eq!(parse_formula("  (a-<b)  ").unwrap(), Formula::diff_l(el("a"), el("b")));
    }

    #[test]
    fn errors_carry_offsets() {
        let err = parse_formula("(a * )").unwrap_err();
        assert_eq!(err.offset, 5);
        let err = parse_judgement("a |- ").unwrap_err();
        assert_eq!(err.offset, 5);
        assert!(parse_formula("").is_err());
        assert!(parse_formula("a b").is_err());
    }
}
