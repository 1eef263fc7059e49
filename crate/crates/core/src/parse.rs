//! Text form of monomials: `1`, `x1x3`, `x2^2`, `x1*x4^3`.
//!
//! ```text
//! monomial := "1" | factor ( "*"? factor )*
//! factor   := "x" INT ( "^" INT )?
//! ```
//!
//! Repeated factors accumulate, so `x1*x1` parses as `x1^2`.

use crate::error::{Error, Result};
use crate::monomial::{Monomial, RingContext};

struct Cursor<'a> {
    text: &'a str,
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn fail(&self, reason: impl Into<String>) -> Error {
        Error::Parse { text: self.text.to_string(), reason: reason.into() }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.fail(format!("expected a number at offset {start}")));
        }
        self.src[start..self.pos].parse().map_err(|_| self.fail("number too large"))
    }
}

pub fn parse_monomial(text: &str, ctx: &RingContext) -> Result<Monomial> {
    let trimmed = text.trim();
    let mut cur = Cursor { text, src: trimmed, bytes: trimmed.as_bytes(), pos: 0 };
    if trimmed == "1" {
        return Ok(ctx.one());
    }
    if trimmed.is_empty() {
        return Err(cur.fail("empty input"));
    }
    let mut exps = vec![0u32; ctx.n()];
    loop {
        if !cur.eat(b'x') {
            return Err(cur.fail(format!("expected 'x' at offset {}", cur.pos)));
        }
        let index = cur.int()?;
        if index == 0 || index as usize > ctx.n() {
            return Err(cur.fail(format!("variable x{index} outside x1..x{}", ctx.n())));
        }
        let exp = if cur.eat(b'^') { cur.int()? } else { 1 };
        if exp == 0 {
            return Err(cur.fail("exponent 0"));
        }
        let slot = &mut exps[index as usize - 1];
        *slot = u32::try_from(*slot as u64 + exp).map_err(|_| cur.fail("exponent too large"))?;
        if cur.peek().is_none() {
            break;
        }
        cur.eat(b'*');
    }
    Ok(Monomial::from_vec(exps))
}

/// Inverse of [`parse_monomial`]; same as `Display`.
pub fn render_monomial(m: &Monomial) -> String {
    m.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx4() -> RingContext {
        RingContext::new(4).unwrap()
    }

    #[test]
    fn accepted_forms() {
        let c = ctx4();
        assert_eq!(parse_monomial("x1x3", &c).unwrap().exponents(), &[1, 0, 1, 0]);
        assert_eq!(parse_monomial("x2^2", &c).unwrap().exponents(), &[0, 2, 0, 0]);
        assert_eq!(parse_monomial("1", &c).unwrap().exponents(), &[0, 0, 0, 0]);
        assert_eq!(parse_monomial("x1*x4^3", &c).unwrap().exponents(), &[1, 0, 0, 3]);
        assert_eq!(parse_monomial("x1*x1x4", &c).unwrap().exponents(), &[2, 0, 0, 1]);
        assert_eq!(parse_monomial(" x3 ", &c).unwrap().exponents(), &[0, 0, 1, 0]);
    }

    #[test]
    fn rejected_forms() {
        let c = ctx4();
        for bad in ["", "x5", "x0", "x1^0", "y1", "x1**x2", "x", "x1^", "x1*", "2", "x1 x2"] {
            assert!(matches!(parse_monomial(bad, &c), Err(Error::Parse { .. })), "{bad:?} should fail");
        }
    }
}
