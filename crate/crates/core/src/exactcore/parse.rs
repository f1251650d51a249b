//! Reading polynomials written as text, e.g. `3*x^2*y - 1/2*z + (x - y)^2`.

use super::poly::Polynomial;
use super::ring::Ring;
use super::scalar::{from_i64, Coeff};
use super::ExactError;

struct Parser<'a, K: Coeff> {
    ring: &'a Ring,
    src: &'a [u8],
    pos: usize,
    _k: std::marker::PhantomData<K>,
}

pub fn parse_poly<K: Coeff>(ring: &Ring, text: &str) -> Result<Polynomial<K>, ExactError> {
    let mut p = Parser { ring, src: text.as_bytes(), pos: 0, _k: std::marker::PhantomData };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

fn decimal<K: Coeff>(digits: &str) -> K {
    let ten = from_i64::<K>(10);
    digits
        .bytes()
        .fold(K::zero(), |acc, b| acc * ten.clone() + from_i64::<K>((b - b'0') as i64))
}

impl<'a, K: Coeff> Parser<'a, K> {
    fn err(&self, what: &str) -> ExactError {
        ExactError::Parse(format!("{what} at byte {}", self.pos))
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

    fn expr(&mut self) -> Result<Polynomial<K>, ExactError> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial<K>, ExactError> {
        let mut acc = self.power()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = acc * self.power()?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Polynomial<K>, ExactError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.digits().ok_or_else(|| self.err("expected exponent"))?;
            let e: u32 = e.parse().map_err(|_| self.err("bad exponent"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn atom(&mut self) -> Result<Polynomial<K>, ExactError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected )"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.atom()?)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.digits().unwrap();
                let mut value = decimal::<K>(&num);
                if self.src.get(self.pos) == Some(&b'/') {
                    self.pos += 1;
                    let den = self.digits().ok_or_else(|| self.err("expected denominator"))?;
                    let d = decimal::<K>(&den);
                    if d.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                    value = value / d;
                }
                Ok(Polynomial::constant(self.ring, value))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let v = self
                    .ring
                    .var(name)
                    .ok_or_else(|| ExactError::Parse(format!("unknown variable {name}")))?;
                Ok(Polynomial::var(self.ring, v))
            }
            _ => Err(self.err("unexpected token")),
        }
    }
}
