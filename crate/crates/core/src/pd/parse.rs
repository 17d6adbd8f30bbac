use super::{Diagram, Edge};
use crate::error::{Error, Result};

/// Parses `PD[X(a,b,c,d),...]` or `U`, optionally followed by `base=<edge>`.
pub fn parse_pd(text: &str) -> Result<Diagram> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    p.skip_ws();
    let tuples = if p.eat(b'U') {
        vec![]
    } else {
        p.expect_str("PD[")?;
        p.skip_ws();
        if p.peek() == Some(b']') {
            return Err(p.error("empty PD code; the crossingless unknot is written U"));
        }
        let mut tuples = vec![];
        loop {
            tuples.push(p.crossing()?);
            p.skip_ws();
            if p.eat(b',') {
                p.skip_ws();
                continue;
            }
            p.expect(b']')?;
            break;
        }
        tuples
    };
    p.skip_ws();
    let base = if p.at_end() {
        None
    } else {
        p.expect_str("base=")?;
        Some(p.number()?)
    };
    p.skip_ws();
    if !p.at_end() {
        return Err(p.error("unexpected trailing input"));
    }
    Diagram::from_tuples(&tuples, base)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Syntax { pos: self.pos, msg: msg.to_string() }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    fn expect_str(&mut self, s: &str) -> Result<()> {
        for &c in s.as_bytes() {
            self.expect(c)?;
        }
        Ok(())
    }

    fn number(&mut self) -> Result<Edge> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a positive integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        match digits.parse::<Edge>() {
            Ok(0) | Err(_) => Err(Error::Syntax { pos: start, msg: format!("invalid edge label {digits}") }),
            Ok(n) => Ok(n),
        }
    }

    fn crossing(&mut self) -> Result<[Edge; 4]> {
        self.expect_str("X(")?;
        let mut t = [0; 4];
        for (i, slot) in t.iter_mut().enumerate() {
            self.skip_ws();
            *slot = self.number()?;
            self.skip_ws();
            if i < 3 {
                self.expect(b',')?;
            }
        }
        self.expect(b')')?;
        Ok(t)
    }
}
