//! A small recursive-descent parser for polynomial expressions.
//!
//! Grammar: integer coefficients, `+ - * ^`, parentheses, and variable labels
//! (letters followed by letters, digits, `_` or `'`). Used for ideal files,
//! case files and expected-value strings.

use crate::error::{Error, Result};
use std::collections::BTreeMap;

/// A polynomial as a coefficient map over exponent vectors, relative to a
/// fixed variable list supplied by the caller.
pub type RawPoly = BTreeMap<Vec<u32>, i128>;

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(i128),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn next_tok(&mut self) -> Result<Tok> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        if self.pos >= self.src.len() {
            return Ok(Tok::End);
        }
        let c = self.src[self.pos];
        self.pos += 1;
        match c {
            b'+' => Ok(Tok::Plus),
            b'-' => Ok(Tok::Minus),
            b'*' => Ok(Tok::Star),
            b'^' => Ok(Tok::Caret),
            b'(' => Ok(Tok::LParen),
            b')' => Ok(Tok::RParen),
            b'0'..=b'9' => {
                let start = self.pos - 1;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                s.parse::<i128>()
                    .map(Tok::Int)
                    .map_err(|_| Error::Parse(format!("integer out of range: {s}")))
            }
            c if c.is_ascii_alphabetic() => {
                let start = self.pos - 1;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric()
                        || self.src[self.pos] == b'_'
                        || self.src[self.pos] == b'\'')
                {
                    self.pos += 1;
                }
                Ok(Tok::Ident(
                    std::str::from_utf8(&self.src[start..self.pos]).unwrap().to_string(),
                ))
            }
            c => Err(Error::Parse(format!("unexpected character '{}'", c as char))),
        }
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    tok: Tok,
    vars: &'a BTreeMap<String, usize>,
    nvars: usize,
}

impl<'a> Parser<'a> {
    fn bump(&mut self) -> Result<()> {
        self.tok = self.lexer.next_tok()?;
        Ok(())
    }

    fn constant(&self, c: i128) -> RawPoly {
        let mut p = RawPoly::new();
        if c != 0 {
            p.insert(vec![0; self.nvars], c);
        }
        p
    }

    fn add(&self, mut a: RawPoly, b: RawPoly, sign: i128) -> RawPoly {
        for (m, c) in b {
            *a.entry(m).or_insert(0) += sign * c;
        }
        a.retain(|_, c| *c != 0);
        a
    }

    fn mul(&self, a: &RawPoly, b: &RawPoly) -> RawPoly {
        let mut out = RawPoly::new();
        for (ma, ca) in a {
            for (mb, cb) in b {
                let m: Vec<u32> = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
                let e = out.entry(m).or_insert(0);
                *e += ca * cb;
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    fn expr(&mut self) -> Result<RawPoly> {
        let mut neg = false;
        while self.tok == Tok::Minus || self.tok == Tok::Plus {
            if self.tok == Tok::Minus {
                neg = !neg;
            }
            self.bump()?;
        }
        let mut acc = self.term()?;
        if neg {
            acc = self.add(self.constant(0), acc, -1);
        }
        loop {
            match self.tok {
                Tok::Plus => {
                    self.bump()?;
                    let t = self.term()?;
                    acc = self.add(acc, t, 1);
                }
                Tok::Minus => {
                    self.bump()?;
                    let t = self.term()?;
                    acc = self.add(acc, t, -1);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RawPoly> {
        let mut acc = self.factor()?;
        while self.tok == Tok::Star {
            self.bump()?;
            let f = self.factor()?;
            acc = self.mul(&acc, &f);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<RawPoly> {
        let mut neg = false;
        while self.tok == Tok::Minus {
            neg = !neg;
            self.bump()?;
        }
        let base = match self.tok.clone() {
            Tok::Int(n) => {
                self.bump()?;
                self.constant(n)
            }
            Tok::Ident(name) => {
                self.bump()?;
                let idx = *self
                    .vars
                    .get(&name)
                    .ok_or_else(|| Error::Parse(format!("unknown variable '{name}'")))?;
                let mut m = vec![0u32; self.nvars];
                m[idx] = 1;
                let mut p = RawPoly::new();
                p.insert(m, 1);
                p
            }
            Tok::LParen => {
                self.bump()?;
                let p = self.expr()?;
                if self.tok != Tok::RParen {
                    return Err(Error::Parse("expected ')'".into()));
                }
                self.bump()?;
                p
            }
            t => return Err(Error::Parse(format!("unexpected token {t:?}"))),
        };
        let mut out = base;
        if self.tok == Tok::Caret {
            self.bump()?;
            let Tok::Int(n) = self.tok.clone() else {
                return Err(Error::Parse("expected integer exponent after '^'".into()));
            };
            if !(0..=64).contains(&n) {
                return Err(Error::Parse(format!("exponent out of range: {n}")));
            }
            self.bump()?;
            let mut acc = self.constant(1);
            for _ in 0..n {
                acc = self.mul(&acc, &out);
            }
            out = acc;
        }
        if neg {
            out = self.add(self.constant(0), out, -1);
        }
        Ok(out)
    }
}

/// Parse `src` into a coefficient map over the variables in `vars`
/// (label -> exponent-vector position).
pub fn parse_poly(src: &str, vars: &BTreeMap<String, usize>) -> Result<RawPoly> {
    let nvars = vars.len();
    let mut p = Parser {
        lexer: Lexer::new(src),
        tok: Tok::End,
        vars,
        nvars,
    };
    p.bump()?;
    let out = p.expr()?;
    if p.tok != Tok::End {
        return Err(Error::Parse(format!("trailing input near {:?}", p.tok)));
    }
    Ok(out)
}
