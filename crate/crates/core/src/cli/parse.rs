//! Parser for word expressions.
//!
//! ```text
//! expr  := term*
//! term  := atom ('^' int)?
//! atom  := 's' ('_' index)? | 't' | 'e' | '(' expr ')' | '[' expr ',' expr ']'
//! index := int | '(' int ')'
//! int   := ('-' | '+')? digit+
//! ```
//!
//! `[x,y]` is `x y x^-1 y^-1`, `s_i` is `t^i s t^-i`, and `e` is the empty
//! word. Whitespace is ignored.

use crate::error::{Error, Result};
use crate::word::Word;

/// Longest word a single expression may expand to.
pub const MAX_WORD_LEN: usize = 1 << 22;

pub fn parse_word(text: &str) -> Result<Word> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let w = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error(format!("unexpected '{}'", p.src[p.pos] as char)));
    }
    Ok(w)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> Error {
        Error::Syntax { offset: self.pos, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", c as char)))
        }
    }

    fn expr(&mut self) -> Result<Word> {
        let mut acc = Word::empty();
        while let Some(c) = self.peek() {
            if matches!(c, b')' | b']' | b',') {
                break;
            }
            let term = self.term()?;
            if acc.len() + term.len() > MAX_WORD_LEN {
                return Err(Error::Overflow);
            }
            acc = acc.mul(&term);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Word> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let k = self.int()?;
        if (base.len() as u128) * (k.unsigned_abs() as u128) > MAX_WORD_LEN as u128 {
            return Err(Error::Overflow);
        }
        Ok(base.pow(k))
    }

    fn atom(&mut self) -> Result<Word> {
        let start = self.pos;
        match self.peek() {
            Some(b's') => {
                self.pos += 1;
                if self.peek() != Some(b'_') {
                    return Ok(Word::s());
                }
                self.pos += 1;
                let i = if self.peek() == Some(b'(') {
                    self.pos += 1;
                    let i = self.int()?;
                    self.expect(b')')?;
                    i
                } else {
                    self.int()?
                };
                if i.unsigned_abs() as usize > MAX_WORD_LEN / 2 {
                    return Err(Error::Overflow);
                }
                Ok(Word::s_i(i))
            }
            Some(b't') => {
                self.pos += 1;
                Ok(Word::t())
            }
            Some(b'e') => {
                self.pos += 1;
                Ok(Word::empty())
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(b'[') => {
                self.pos += 1;
                let x = self.expr()?;
                self.expect(b',')?;
                let y = self.expr()?;
                self.expect(b']')?;
                Ok(Word::commutator(&x, &y))
            }
            Some(c) => Err(self.error(format!("unexpected '{}'", c as char))),
            None => {
                self.pos = start;
                Err(self.error("unexpected end of input"))
            }
        }
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.src.get(self.pos), Some(b'-' | b'+')) {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == digits {
            self.pos = start;
            return Err(self.error("expected an integer"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).map_err(|_| self.error("invalid integer"))?;
        text.parse::<i64>().map_err(|_| Error::Overflow)
    }
}
