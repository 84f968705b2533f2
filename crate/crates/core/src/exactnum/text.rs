//! Text codec: `q(a/b)` rationals, `z(N,k)` roots of unity, integer
//! literals, `*` products and `+`/`-` sums. For example
//! `2*z(12,1)+2*z(12,11)` is `2√3`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{CycloNum, ExactError, Rational};

pub(super) fn format(x: &CycloNum) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (&k, c)) in x.coeffs().iter().enumerate() {
        let neg = c.is_negative();
        if neg {
            out.push('-');
        } else if i > 0 {
            out.push('+');
        }
        let mag = c.abs();
        let mag_text = if mag.is_integer() {
            mag.to_integer().to_string()
        } else {
            format!("q({}/{})", mag.numer(), mag.denom())
        };
        if k == 0 {
            out.push_str(&mag_text);
        } else {
            if !mag.is_one() {
                out.push_str(&mag_text);
                out.push('*');
            }
            out.push_str(&format!("z({},{})", x.conductor(), k));
        }
    }
    out
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

pub(super) fn parse(src: &str) -> Result<CycloNum, ExactError> {
    let mut p = Parser { src, pos: 0 };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != src.len() {
        return Err(p.error("trailing input"));
    }
    Ok(v)
}

impl Parser<'_> {
    fn error(&self, what: &str) -> ExactError {
        ExactError::Parse(format!("{what} at offset {} in {:?}", self.pos, self.src))
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ExactError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected `{c}`")))
        }
    }

    fn expr(&mut self) -> Result<CycloNum, ExactError> {
        let mut negate = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let mut acc = CycloNum::zero();
        loop {
            let t = self.term()?;
            acc = if negate { &acc - &t } else { &acc + &t };
            if self.eat('+') {
                negate = false;
            } else if self.eat('-') {
                negate = true;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<CycloNum, ExactError> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<CycloNum, ExactError> {
        self.skip_ws();
        match self.peek() {
            Some('q') => {
                self.pos += 1;
                self.expect('(')?;
                let num = self.integer()?;
                let den = if self.eat('/') {
                    self.integer()?
                } else {
                    BigInt::one()
                };
                self.expect(')')?;
                if den.is_zero() {
                    return Err(self.error("zero denominator"));
                }
                Ok(CycloNum::from_rational(Rational::new(num, den)))
            }
            Some('z') => {
                self.pos += 1;
                self.expect('(')?;
                let n = self.integer()?;
                self.expect(',')?;
                let k = self.integer()?;
                self.expect(')')?;
                let n: u32 = n
                    .try_into()
                    .ok()
                    .filter(|&n: &u32| n >= 1)
                    .ok_or_else(|| self.error("conductor must be a positive integer"))?;
                let k: i64 = k
                    .try_into()
                    .map_err(|_| self.error("exponent out of range"))?;
                Ok(CycloNum::zeta(n, k))
            }
            Some(c) if c.is_ascii_digit() => Ok(CycloNum::from_rational(Rational::from_integer(
                self.integer()?,
            ))),
            _ => Err(self.error("expected integer, `q(…)` or `z(…)`")),
        }
    }

    fn integer(&mut self) -> Result<BigInt, ExactError> {
        self.skip_ws();
        let start = self.pos;
        if self.peek() == Some('-') {
            self.pos += 1;
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| self.error("expected integer"))
    }
}
