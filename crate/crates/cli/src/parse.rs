//! Expressions such as `(1+k)*x^2 - (3/2)i x + 5` denoting polynomials over a
//! quaternion algebra. Juxtaposition multiplies, in the order written.

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use quatfact::arith::Rational;
use quatfact::qpoly::QPoly;
use quatfact::quatalg::{Quaternion, QuaternionAlgebra};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown symbol '{sym}' at position {pos}")]
    UnknownSymbol { pos: usize, sym: char },
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Sym(char),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let tok = match c {
            _ if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push((start, Tok::Num(s.parse().expect("digits"))));
                continue;
            }
            'i' | 'j' | 'k' | 'x' => Tok::Sym(c),
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => return Err(ParseError::UnknownSymbol { pos: i, sym: c }),
        };
        out.push((i, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    alg: &'a QuaternionAlgebra,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, msg: &str) -> Result<T, ParseError> {
        Err(ParseError::Syntax { pos: self.pos(), msg: msg.into() })
    }

    fn expr(&mut self) -> Result<QPoly, ParseError> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.at += 1;
                -&self.term()?
            }
            Some(Tok::Plus) => {
                self.at += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.at += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.at += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<QPoly, ParseError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.at += 1;
                    acc = &acc * &self.power()?;
                }
                Some(Tok::Slash) => {
                    self.at += 1;
                    let d = self.integer()?;
                    if d.is_zero() {
                        return Err(ParseError::Syntax {
                            pos: self.toks[self.at - 1].0,
                            msg: "division by zero".into(),
                        });
                    }
                    acc = acc.scale_rational(&Rational::new(1.into(), d));
                }
                Some(Tok::Num(_) | Tok::Sym(_) | Tok::LParen) => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        match self.peek() {
            Some(Tok::Num(n)) => {
                let n = n.clone();
                self.at += 1;
                Ok(n)
            }
            _ => self.err("expected an integer"),
        }
    }

    fn power(&mut self) -> Result<QPoly, ParseError> {
        let base = self.primary()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.at += 1;
        let pos = self.pos();
        let e = self.integer()?;
        let e: u32 = e
            .try_into()
            .map_err(|_| ParseError::Syntax { pos, msg: "exponent too large".into() })?;
        let mut acc = QPoly::one(self.alg);
        for _ in 0..e {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    fn primary(&mut self) -> Result<QPoly, ParseError> {
        let a = self.alg;
        let konst = |q: Quaternion| QPoly::constant(&q);
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.at += 1;
                Ok(konst(a.scalar(Rational::from_integer(n))))
            }
            Some(Tok::Sym(c)) => {
                self.at += 1;
                Ok(match c {
                    'i' => konst(a.i()),
                    'j' => konst(a.j()),
                    'k' => konst(a.k()),
                    _ => QPoly::x(a),
                })
            }
            Some(Tok::LParen) => {
                self.at += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected ')'");
                }
                self.at += 1;
                Ok(inner)
            }
            Some(_) => self.err("unexpected token"),
            None => self.err("unexpected end of input"),
        }
    }
}

pub fn parse_poly(text: &str, alg: &QuaternionAlgebra) -> Result<QPoly, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, at: 0, end: text.chars().count(), alg };
    if p.peek().is_none() {
        return p.err("empty expression");
    }
    let out = p.expr()?;
    if p.peek().is_some() {
        return p.err("unexpected token");
    }
    Ok(out)
}

/// A constant expression such as `1/2 - 3k`.
pub fn parse_quaternion(text: &str, alg: &QuaternionAlgebra) -> Result<Quaternion, ParseError> {
    let p = parse_poly(text, alg)?;
    if p.deg() > 0 {
        return Err(ParseError::Syntax { pos: 0, msg: "expected a constant".into() });
    }
    Ok(p.coeff(0))
}
