//! Scalar expressions, linear combinations of basis vectors, and matrices.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{Field, Gq, RatFunc, Ring};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn syntax(col: usize, msg: impl Into<String>) -> Error {
    Error::Syntax { line: 0, col, msg: msg.into() }
}

/// Maps accepted spellings of a parameter to its canonical name.
pub fn canonical_var(name: &str) -> String {
    match name {
        "lambda" | "λ" | "lam" => "lambda".into(),
        "mu" | "μ" => "mu".into(),
        other => other.into(),
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let col = k + 1;
        if c.is_whitespace() {
            k += 1;
        } else if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let s: String = chars[start..k].iter().collect();
            out.push((Tok::Num(s.parse().unwrap()), col));
        } else if c.is_alphabetic() || c == '_' {
            let start = k;
            while k < chars.len() && (chars[k].is_alphanumeric() || chars[k] == '_') {
                k += 1;
            }
            out.push((Tok::Ident(chars[start..k].iter().collect()), col));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Op(c), col));
            k += 1;
        } else {
            return Err(syntax(col, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end_col: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map(|(_, c)| *c).unwrap_or(self.end_col)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.unary()?);
            } else if self.peek() == Some(&Tok::Op('/')) {
                let col = self.col();
                self.pos += 1;
                let d = self.unary()?;
                acc = acc.div(&d).ok_or_else(|| Error::Semantic {
                    line: 0,
                    msg: format!("division by zero at column {col}"),
                })?;
            } else if matches!(self.peek(), Some(Tok::Num(_) | Tok::Ident(_) | Tok::Op('('))) {
                acc = acc.mul(&self.power()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<RatFunc> {
        if self.eat('-') {
            return Ok(self.unary()?.neg());
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<RatFunc> {
        let base = self.primary()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let negative = self.eat('-');
        let col = self.col();
        let Some(Tok::Num(n)) = self.peek().cloned() else {
            return Err(syntax(col, "expected an integer exponent"));
        };
        self.pos += 1;
        let e: u32 = n.try_into().map_err(|_| syntax(col, "exponent too large"))?;
        let mut acc = RatFunc::one();
        for _ in 0..e {
            acc = acc.mul(&base);
        }
        if negative {
            acc = acc.inv().ok_or_else(|| Error::Semantic { line: 0, msg: "division by zero".into() })?;
        }
        Ok(acc)
    }

    fn primary(&mut self) -> Result<RatFunc> {
        let col = self.col();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(RatFunc::constant(Gq::from_rational(BigRational::from_integer(n))))
            }
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                if s == "i" {
                    Ok(RatFunc::constant(Gq::i()))
                } else {
                    Ok(RatFunc::var(&canonical_var(&s)))
                }
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(syntax(self.col(), "expected `)`"));
                }
                Ok(v)
            }
            Some(t) => Err(syntax(col, format!("unexpected token {t:?}"))),
            None => Err(syntax(col, "unexpected end of expression")),
        }
    }
}

/// Parses a scalar expression such as `l*(l-1)/mu` or `1/2+3i/4`.
///
/// Errors carry line 0 and a column relative to `text`.
pub fn parse_scalar(text: &str) -> Result<RatFunc> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, end_col: text.chars().count() + 1 };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(syntax(p.col(), "trailing input"));
    }
    Ok(v)
}

fn shift(e: Error, offset: usize) -> Error {
    match e {
        Error::Syntax { line, col, msg } => Error::Syntax { line, col: col + offset, msg },
        other => other,
    }
}

/// Parses `c1 e1 + c2 e3 - e2` into a coordinate vector of length `dim`.
/// A bare `0` denotes the zero vector.
pub fn parse_lincomb(text: &str, dim: usize) -> Result<Vec<RatFunc>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = vec![RatFunc::zero(); dim];
    let mut coeff_start = 0;
    let mut k = 0;
    let mut seen = false;
    let word = |c: char| c.is_alphanumeric() || c == '_';
    while k < chars.len() {
        let starts_basis = chars[k] == 'e'
            && (k == 0 || !word(chars[k - 1]))
            && chars.get(k + 1).is_some_and(|c| c.is_ascii_digit());
        if !starts_basis {
            k += 1;
            continue;
        }
        let mut j = k + 1;
        while j < chars.len() && chars[j].is_ascii_digit() {
            j += 1;
        }
        if j < chars.len() && word(chars[j]) {
            k = j;
            continue;
        }
        let idx: usize = chars[k + 1..j].iter().collect::<String>().parse().unwrap();
        if idx == 0 || idx > dim {
            return Err(Error::Semantic { line: 0, msg: format!("basis vector e{idx} outside dimension {dim}") });
        }
        let raw: String = chars[coeff_start..k].iter().collect();
        let mut c = raw.trim().trim_end_matches('*').trim().to_string();
        if seen && !(c.starts_with('+') || c.starts_with('-')) {
            return Err(syntax(coeff_start + 1, "expected `+` or `-` between terms"));
        }
        if c.is_empty() || c == "+" {
            c = "1".into();
        } else if c == "-" {
            c = "-1".into();
        }
        let lead = raw.len() - raw.trim_start().len();
        let coef = parse_scalar(&c).map_err(|e| shift(e, coeff_start + lead))?;
        out[idx - 1] = out[idx - 1].add(&coef);
        seen = true;
        coeff_start = j;
        k = j;
    }
    let tail: String = chars[coeff_start..].iter().collect();
    if !tail.trim().is_empty() {
        if seen || tail.trim() != "0" {
            return Err(syntax(coeff_start + 1, format!("dangling text `{}`", tail.trim())));
        }
    } else if !seen {
        return Err(syntax(1, "empty linear combination"));
    }
    Ok(out)
}

/// Parses `[[a,b,c],[d,e,f],...]` into rows of scalars.
pub fn parse_matrix_rows(text: &str) -> Result<Vec<Vec<RatFunc>>> {
    let t = text.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| syntax(1, "matrix must be written [[..],[..]]"))?;
    let offset = text.find('[').unwrap_or(0) + 2;
    let mut rows = Vec::new();
    let mut depth = 0;
    let mut start = 0;
    for (k, c) in inner.char_indices() {
        match c {
            '[' => {
                if depth == 0 {
                    start = k + 1;
                }
                depth += 1;
            }
            ']' => {
                depth -= 1;
                if depth == 0 {
                    let row: Result<Vec<RatFunc>> = inner[start..k]
                        .split(',')
                        .scan(start, |pos, s| {
                            let here = *pos;
                            *pos += s.len() + 1;
                            Some(parse_scalar(s).map_err(|e| shift(e, offset + here - 1)))
                        })
                        .collect();
                    rows.push(row?);
                }
            }
            _ => {}
        }
    }
    if depth != 0 || rows.is_empty() {
        return Err(syntax(1, "unbalanced brackets"));
    }
    if rows.iter().any(|r| r.len() != rows[0].len()) {
        return Err(Error::Semantic { line: 0, msg: "ragged matrix rows".into() });
    }
    Ok(rows)
}
