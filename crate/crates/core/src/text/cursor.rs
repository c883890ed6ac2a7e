use super::ParseError;

pub(crate) struct Cursor<'a> {
    pub src: &'a str,
    pub pos: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(src: &'a str) -> Cursor<'a> {
        Cursor { src, pos: 0 }
    }

    pub fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    pub fn skip_ws(&mut self) {
        let rest = self.rest();
        self.pos += rest.len() - rest.trim_start().len();
    }

    pub fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.src.len()
    }

    pub fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    /// Consumes `tok` if the input continues with it.
    pub fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    pub fn eat_any(&mut self, toks: &[&str]) -> bool {
        toks.iter().any(|t| self.eat(t))
    }

    pub fn expect(&mut self, toks: &[&str], what: &str) -> Result<(), ParseError> {
        if self.eat_any(toks) {
            Ok(())
        } else {
            Err(self.error(what))
        }
    }

    pub fn error(&mut self, expected: &str) -> ParseError {
        self.skip_ws();
        ParseError {
            offset: self.pos,
            expected: expected.to_string(),
        }
    }

    pub fn end(&mut self) -> Result<(), ParseError> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error("end of input"))
        }
    }

    /// An identifier: letters, digits, `_` and `'`, not starting with `'`.
    pub fn ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let rest = self.rest();
        let len = rest
            .char_indices()
            .find(|&(_, c)| !is_ident_char(c))
            .map_or(rest.len(), |(i, _)| i);
        if len == 0 || rest.starts_with('\'') {
            return None;
        }
        self.pos += len;
        Some(&rest[..len])
    }

    /// Looks ahead at the next identifier without consuming it.
    pub fn peek_ident(&mut self) -> Option<&'a str> {
        let save = self.pos;
        let out = self.ident();
        self.pos = save;
        out
    }
}

pub(crate) fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}
