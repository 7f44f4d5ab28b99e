//! Text grammar for elements and scalars.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := unary (('*'|'/') unary)*          divisor must be a nonzero scalar
//! unary  := '-' unary | power
//! power  := atom ['^' ['-'] int]
//! atom   := int | 'v' | 'q' | 'I' | E<i> | F<i> | e<i> | f<i>
//!         | 'K' list | 'k' list | 'xi' list | '(' expr ')'
//! list   := '[' int (',' int)* ']'
//! ```
//!
//! `K[...]` takes twice-coordinates (all even); `xi[...]` takes Γ bits. The
//! lowercase letters denote the Zhang images `e_i`, `f_i`, `k_μ`.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::scalars::{GaussianRational, Scalar};
use crate::weights::{GammaElement, Weight};
use crate::zhang::{bar_e, bar_f, bar_k};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    alg: &'a Algebra,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
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
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn small_int(&mut self) -> Result<i64> {
        self.skip_ws();
        let neg = self.eat(b'-');
        self.skip_ws();
        let Some(d) = self.digits() else { return self.err("expected integer") };
        let n: i64 = match d.parse() {
            Ok(n) => n,
            Err(_) => return self.err("integer out of range"),
        };
        Ok(if neg { -n } else { n })
    }

    fn index(&mut self) -> Result<usize> {
        let at = self.pos;
        let Some(d) = self.digits() else { return self.err("expected generator index") };
        match d.parse::<usize>() {
            Ok(i) if i >= 1 && i <= self.alg.rank() => Ok(i),
            _ => Err(Error::Parse {
                pos: at,
                msg: format!("generator index {d} outside 1..={}", self.alg.rank()),
            }),
        }
    }

    fn list(&mut self) -> Result<Vec<i32>> {
        self.expect(b'[')?;
        let mut out = Vec::new();
        if self.eat(b']') {
            return Ok(out);
        }
        loop {
            let n = self.small_int()?;
            match i32::try_from(n) {
                Ok(x) => out.push(x),
                Err(_) => return self.err("coordinate out of range"),
            }
            if self.eat(b']') {
                break;
            }
            self.expect(b',')?;
        }
        if out.len() != self.alg.rank() {
            return self.err(format!("expected {} coordinates, got {}", self.alg.rank(), out.len()));
        }
        Ok(out)
    }

    fn expr(&mut self) -> Result<Element> {
        let neg = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let mut acc = self.term()?;
        if neg {
            acc = -&acc;
        }
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Element> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                let rhs = self.unary()?;
                acc = self.alg.mul(&acc, &rhs);
            } else if self.peek() == Some(b'/') {
                let at = self.pos;
                self.pos += 1;
                let rhs = self.unary()?;
                let Some(s) = rhs.as_scalar() else {
                    return Err(Error::Parse { pos: at, msg: "divisor is not a scalar".into() });
                };
                match s.inv() {
                    Ok(inv) => acc = acc.scale(&inv),
                    Err(_) => return Err(Error::Parse { pos: at, msg: "division by zero".into() }),
                }
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Element> {
        if self.eat(b'-') {
            return Ok(-&self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Element> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let at = self.pos;
        let n = self.small_int()?;
        if n >= 0 {
            return Ok(self.alg.pow(&base, n as u32));
        }
        let inv = match base.as_scalar() {
            Some(s) => s.inv().map(|x| self.alg.scalar(x)),
            None => self.alg.invert_toral(&base),
        };
        match inv {
            Ok(i) => Ok(self.alg.pow(&i, n.unsigned_abs() as u32)),
            Err(e) => Err(Error::Parse { pos: at, msg: format!("negative power: {e}") }),
        }
    }

    fn atom(&mut self) -> Result<Element> {
        let Some(c) = self.peek() else { return self.err("unexpected end of input") };
        let alg = self.alg;
        match c {
            b'(' => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            b'0'..=b'9' => {
                let d = self.digits().unwrap();
                let n: BigInt = d.parse().expect("digits");
                let g = GaussianRational::new(BigRational::from_integer(n), BigRational::from_integer(0.into()));
                Ok(alg.scalar(Scalar::from_gaussian(g)))
            }
            b'v' => {
                self.pos += 1;
                Ok(alg.scalar(Scalar::v_pow(1)))
            }
            b'q' => {
                self.pos += 1;
                Ok(alg.scalar(Scalar::q_pow(1)))
            }
            b'I' => {
                self.pos += 1;
                Ok(alg.scalar(Scalar::imaginary_unit()))
            }
            b'E' | b'F' | b'e' | b'f' => {
                self.pos += 1;
                let i = self.index()?;
                match c {
                    b'E' => alg.e(i),
                    b'F' => alg.f(i),
                    b'e' => bar_e(alg, i),
                    _ => bar_f(alg, i),
                }
            }
            b'K' | b'k' => {
                self.pos += 1;
                let at = self.pos;
                let t = self.list()?;
                let w = Weight::from_twice(&t);
                if !w.in_pg() {
                    return Err(Error::Parse { pos: at, msg: format!("K{w} needs even twice-coordinates") });
                }
                if c == b'K' {
                    alg.k(&w)
                } else {
                    bar_k(alg, &w)
                }
            }
            b'x' => {
                if self.src.get(self.pos + 1) != Some(&b'i') {
                    return self.err("unknown symbol");
                }
                self.pos += 2;
                let at = self.pos;
                let bits = self.list()?;
                if bits.iter().any(|b| *b != 0 && *b != 1) {
                    return Err(Error::Parse { pos: at, msg: "xi bits must be 0 or 1".into() });
                }
                alg.xi(GammaElement::from_bits(&bits.iter().map(|b| *b as u8).collect::<Vec<_>>()))
            }
            _ => self.err(format!("unexpected '{}'", c as char)),
        }
    }
}

pub fn parse_element(alg: &Algebra, text: &str) -> Result<Element> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, alg };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

pub fn parse_scalar(alg: &Algebra, text: &str) -> Result<Scalar> {
    parse_element(alg, text)?
        .as_scalar()
        .ok_or_else(|| Error::Parse { pos: 0, msg: format!("{text:?} is not a scalar") })
}
