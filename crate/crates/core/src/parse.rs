//! Recursive-descent parser for forms.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '^') unary)*
//! unary  := ('-' | '+') unary | power
//! power  := factor ('^' INT)*
//! factor := INT ('/' INT)? | 'i' | 'tau' | 't' | 'x'N | 'dx'N | 'dt' | '(' expr ')'
//! ```
//!
//! `*` is the wedge product (ordinary multiplication on functions). `^`
//! followed by a bare integer is a power; otherwise it is a synonym for `*`.

use num_bigint::BigInt;

use crate::coeff::{Gauss, Rational};
use crate::error::{Error, Result};
use crate::form::Form;
use crate::scalar::{Scalar, MAX_DIM};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(src: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = vec![];
    let (mut line, mut col) = (1, 1);
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let (l0, c0) = (line, col);
        if c == '\n' {
            line += 1;
            col = 1;
            k += 1;
            continue;
        }
        if c.is_whitespace() {
            col += 1;
            k += 1;
            continue;
        }
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '/' => Some(Tok::Slash),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = simple {
            out.push(Token { tok, line: l0, col: c0 });
            k += 1;
            col += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let digits: String = chars[start..k].iter().collect();
            col += k - start;
            let n: BigInt = digits.parse().expect("ascii digits");
            out.push(Token { tok: Tok::Int(n), line: l0, col: c0 });
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = k;
            while k < chars.len() && chars[k].is_ascii_alphanumeric() {
                k += 1;
            }
            col += k - start;
            out.push(Token { tok: Tok::Ident(chars[start..k].iter().collect()), line: l0, col: c0 });
            continue;
        }
        return Err(Error::Parse { line: l0, col: c0, msg: format!("unexpected character `{c}`") });
    }
    out.push(Token { tok: Tok::End, line, col });
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    dim: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, tok: &Token, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { line: tok.line, col: tok.col, msg: msg.into() })
    }

    fn expr(&mut self) -> Result<Form> {
        let mut acc = self.term()?;
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.bump();
                    acc += &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc -= &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Form> {
        let mut acc = self.unary()?;
        loop {
            match self.peek().tok {
                Tok::Star => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Tok::Caret => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Form> {
        match self.peek().tok {
            Tok::Minus => {
                self.bump();
                Ok(-self.unary()?)
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn caret_is_power(&self) -> bool {
        self.peek().tok == Tok::Caret
            && matches!(self.toks.get(self.pos + 1).map(|t| &t.tok), Some(Tok::Int(_)))
            && !matches!(self.toks.get(self.pos + 2).map(|t| &t.tok), Some(Tok::Slash))
    }

    fn power(&mut self) -> Result<Form> {
        let mut acc = self.factor()?;
        while self.caret_is_power() {
            self.bump();
            let tok = self.bump();
            let Tok::Int(n) = &tok.tok else { unreachable!() };
            let e: usize = n.try_into().or_else(|_| self.error(&tok, "exponent too large"))?;
            if e > 64 {
                return self.error(&tok, "exponent too large");
            }
            acc = acc.pow(e);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Form> {
        let tok = self.bump();
        match &tok.tok {
            Tok::Int(n) => {
                let mut r = Rational::from_integer(n.clone());
                if self.peek().tok == Tok::Slash {
                    self.bump();
                    let den = self.bump();
                    let Tok::Int(d) = &den.tok else {
                        return self.error(&den, "expected integer denominator");
                    };
                    if d == &BigInt::from(0) {
                        return self.error(&den, "zero denominator");
                    }
                    r = Rational::new(n.clone(), d.clone());
                }
                Ok(Form::constant(self.dim, Gauss::real(r)))
            }
            Tok::Ident(name) => self.identifier(name),
            Tok::LParen => {
                let inner = self.expr()?;
                let close = self.bump();
                if close.tok != Tok::RParen {
                    return self.error(&close, "expected `)`");
                }
                Ok(inner)
            }
            Tok::End => self.error(&tok, "unexpected end of input"),
            other => self.error(&tok, format!("unexpected token {}", describe(other))),
        }
    }

    fn identifier(&self, name: &str) -> Result<Form> {
        let m = self.dim;
        match name {
            "i" => return Ok(Form::constant(m, Gauss::i())),
            "tau" => return Ok(Form::function(m, Scalar::tau())),
            "t" => return Ok(Form::function(m, Scalar::t())),
            "dt" => return Ok(Form::dt(m)),
            _ => {}
        }
        let (prefix, index) = if let Some(rest) = name.strip_prefix("dx") {
            ("dx", rest)
        } else if let Some(rest) = name.strip_prefix('x') {
            ("x", rest)
        } else {
            return Err(Error::UnknownVariable(name.into()));
        };
        let valid = !index.is_empty() && index.bytes().all(|b| b.is_ascii_digit()) && !index.starts_with('0');
        if !valid {
            return Err(Error::UnknownVariable(name.into()));
        }
        let i: usize = match index.parse() {
            Ok(i) if i <= MAX_DIM => i,
            _ => return Err(Error::GeneratorOutOfRange(name.into(), m)),
        };
        if i > m {
            return Err(Error::GeneratorOutOfRange(name.into(), m));
        }
        Ok(if prefix == "dx" { Form::dx(m, i) } else { Form::x(m, i) })
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(n) => n.to_string(),
        Tok::Ident(s) => s.clone(),
        Tok::Plus => "`+`".into(),
        Tok::Minus => "`-`".into(),
        Tok::Star => "`*`".into(),
        Tok::Caret => "`^`".into(),
        Tok::Slash => "`/`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::End => "end of input".into(),
    }
}

/// Parses a form on ℝ^`dim` (cylinder forms when `t` or `dt` appear).
pub fn parse_form(src: &str, dim: usize) -> Result<Form> {
    if !(1..=MAX_DIM).contains(&dim) {
        return Err(Error::DimensionOutOfRange(dim));
    }
    let toks = lex(src)?;
    let mut p = Parser { toks, pos: 0, dim };
    let out = p.expr()?;
    let end = p.peek().clone();
    if end.tok != Tok::End {
        return p.error(&end, format!("unexpected token {}", describe(&end.tok)));
    }
    Ok(out)
}
