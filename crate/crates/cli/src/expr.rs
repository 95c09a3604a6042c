//! Schubert expressions: `s[2,1]`, integers, `+`, `-`, `*`, `^` and
//! parentheses, whitespace-insensitive.

use fanocalc::schubert::{multiply_with, ChowElement, GrassmannContext};
use fanocalc::{Partition, Strategy};
use num_bigint::BigInt;

#[derive(Debug, thiserror::Error)]
pub enum ExprError {
    #[error("syntax error at column {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error(transparent)]
    Domain(#[from] fanocalc::Error),
}

type Result<T> = std::result::Result<T, ExprError>;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ctx: GrassmannContext,
    strategy: Strategy,
}

pub fn evaluate(input: &str, ctx: GrassmannContext, strategy: Strategy) -> Result<ChowElement> {
    let mut p = Parser { src: input.as_bytes(), pos: 0, ctx, strategy };
    let value = p.sum()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(value)
}

impl Parser<'_> {
    fn error(&self, message: &str) -> ExprError {
        ExprError::Syntax { pos: self.pos + 1, message: message.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
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
            Err(self.error(&format!("expected `{}`", c as char)))
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse"))
    }

    fn small(&mut self) -> Result<usize> {
        let n = self.integer()?;
        usize::try_from(n).map_err(|_| self.error("number too large"))
    }

    fn sum(&mut self) -> Result<ChowElement> {
        let mut acc = self.product()?;
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.product()?)?;
            } else if self.eat(b'-') {
                let rhs = self.product()?.scale(&BigInt::from(-1));
                acc = acc.add(&rhs)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn product(&mut self) -> Result<ChowElement> {
        let mut acc = self.unary()?;
        while self.eat(b'*') {
            let rhs = self.unary()?;
            acc = multiply_with(self.strategy, &acc, &rhs)?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<ChowElement> {
        if self.eat(b'-') {
            return Ok(self.unary()?.scale(&BigInt::from(-1)));
        }
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let e = self.small()?;
        let mut out = ChowElement::one(self.ctx);
        for _ in 0..e {
            out = multiply_with(self.strategy, &out, &base)?;
            if out.is_zero() {
                break;
            }
        }
        Ok(out)
    }

    fn atom(&mut self) -> Result<ChowElement> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.sum()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(b's') => {
                self.pos += 1;
                self.expect(b'[')?;
                let mut parts = Vec::new();
                if !self.eat(b']') {
                    loop {
                        parts.push(self.small()?);
                        if self.eat(b']') {
                            break;
                        }
                        self.expect(b',')?;
                    }
                }
                let lambda = Partition::new(parts)?;
                Ok(ChowElement::schubert(self.ctx, lambda)?)
            }
            Some(c) if c.is_ascii_digit() => Ok(ChowElement::one(self.ctx).scale(&self.integer()?)),
            Some(_) => Err(self.error("expected `s[...]`, an integer or `(`")),
            None => Err(self.error("unexpected end of expression")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eval(s: &str, k: usize, n: usize) -> String {
        evaluate(s, GrassmannContext::new(k, n).unwrap(), Strategy::Sequential).unwrap().to_string()
    }

    #[test]
    fn arithmetic() {
        assert_eq!(eval("s[1]^4", 2, 4), "2*s[2,2]");
        assert_eq!(eval("s[1] * s[1] - s[2]", 2, 4), "s[1,1]");
        assert_eq!(eval(" 2 * ( s[1] + 1 ) ", 2, 4), "2 + 2*s[1]");
        assert_eq!(eval("s[1,1]*s[2]*s[2]", 2, 5), "s[3,3]");
        assert_eq!(eval("-s[1]^0", 2, 4), "-1");
        assert_eq!(eval("s[]", 2, 4), "1");
    }

    #[test]
    fn errors() {
        let ctx = GrassmannContext::new(2, 4).unwrap();
        for bad in ["s[1", "s[1]+", "x", "s[1] s[1]", "s[1]^", ""] {
            assert!(matches!(evaluate(bad, ctx, Strategy::Sequential), Err(ExprError::Syntax { .. })), "{bad}");
        }
        assert!(matches!(evaluate("s[3]", ctx, Strategy::Sequential), Err(ExprError::Domain(_))));
        assert!(matches!(evaluate("s[1,2]", ctx, Strategy::Sequential), Err(ExprError::Domain(_))));
    }
}
