//! Text syntax for elements, polynomials and towers.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := '-' unary | power
//! power := atom ('^' ['-'] integer)?
//! atom  := integer | identifier | '(' expr ')'
//! ```
//!
//! Identifiers are tower generator names; in polynomial position the name
//! `y` denotes the indeterminate.

use num_bigint::BigInt;

use super::{Field, POLY_VAR};
use crate::error::{Error, Result};
use crate::field::Elem;
use crate::poly::{self, UPoly};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn perr<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse(msg.into()))
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    let mut out = Vec::new();
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push(Tok::Int(text.parse().expect("digits")));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return perr(format!("unexpected character `{c}`"));
        }
    }
    Ok(out)
}

/// Values the parser computes with: field elements or polynomials in `y`.
trait Target {
    type V: Clone;
    fn int(&self, n: &BigInt) -> Self::V;
    fn ident(&self, name: &str) -> Result<Self::V>;
    fn add(&self, a: &Self::V, b: &Self::V) -> Self::V;
    fn neg(&self, a: &Self::V) -> Self::V;
    fn mul(&self, a: &Self::V, b: &Self::V) -> Self::V;
    fn div(&self, a: &Self::V, b: &Self::V) -> Result<Self::V>;
    fn pow(&self, a: &Self::V, e: i64) -> Result<Self::V>;
}

struct ElemTarget<'a>(&'a Field);

impl Target for ElemTarget<'_> {
    type V = Elem;
    fn int(&self, n: &BigInt) -> Elem {
        self.0.from_bigint(n)
    }
    fn ident(&self, name: &str) -> Result<Elem> {
        self.0
            .gen_by_name(name)
            .ok_or_else(|| Error::Parse(format!("unknown generator `{name}`")))
    }
    fn add(&self, a: &Elem, b: &Elem) -> Elem {
        self.0.add(a, b)
    }
    fn neg(&self, a: &Elem) -> Elem {
        self.0.neg(a)
    }
    fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        self.0.mul(a, b)
    }
    fn div(&self, a: &Elem, b: &Elem) -> Result<Elem> {
        self.0.div(a, b).map_err(|_| Error::Parse("division by zero".into()))
    }
    fn pow(&self, a: &Elem, e: i64) -> Result<Elem> {
        self.0.pow(a, e).map_err(|_| Error::Parse("negative power of zero".into()))
    }
}

struct PolyTarget<'a>(&'a Field);

impl Target for PolyTarget<'_> {
    type V = UPoly;
    fn int(&self, n: &BigInt) -> UPoly {
        UPoly::constant(self.0.from_bigint(n))
    }
    fn ident(&self, name: &str) -> Result<UPoly> {
        if name == POLY_VAR {
            return Ok(UPoly::var(self.0));
        }
        ElemTarget(self.0).ident(name).map(UPoly::constant)
    }
    fn add(&self, a: &UPoly, b: &UPoly) -> UPoly {
        poly::add(self.0, a, b)
    }
    fn neg(&self, a: &UPoly) -> UPoly {
        poly::neg(self.0, a)
    }
    fn mul(&self, a: &UPoly, b: &UPoly) -> UPoly {
        poly::mul(self.0, a, b)
    }
    fn div(&self, a: &UPoly, b: &UPoly) -> Result<UPoly> {
        if b.deg() > 0 || b.is_zero() {
            return perr("polynomials may only be divided by nonzero constants");
        }
        let inv = self.0.inv(&b.coeffs()[0])?;
        Ok(poly::scale(self.0, a, &inv))
    }
    fn pow(&self, a: &UPoly, e: i64) -> Result<UPoly> {
        if e < 0 {
            if a.deg() == 0 && !a.is_zero() {
                return Ok(UPoly::constant(self.0.pow(&a.coeffs()[0], e)?));
            }
            return perr("negative power of a polynomial");
        }
        Ok(poly::pow(self.0, a, e as u64))
    }
}

struct Parser<'t, T: Target> {
    toks: Vec<Tok>,
    pos: usize,
    target: &'t T,
}

impl<T: Target> Parser<'_, T> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<T::V> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                let t = self.term()?;
                acc = self.target.add(&acc, &t);
            } else if self.eat('-') {
                let t = self.term()?;
                acc = self.target.add(&acc, &self.target.neg(&t));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<T::V> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                let t = self.unary()?;
                acc = self.target.mul(&acc, &t);
            } else if self.eat('/') {
                let t = self.unary()?;
                acc = self.target.div(&acc, &t)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<T::V> {
        if self.eat('-') {
            let v = self.unary()?;
            return Ok(self.target.neg(&v));
        }
        self.power()
    }

    fn power(&mut self) -> Result<T::V> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let negative = self.eat('-');
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                let e: i64 = n.try_into().map_err(|_| Error::Parse("exponent too large".into()))?;
                if e > 4096 {
                    return perr("exponent too large");
                }
                self.target.pow(&base, if negative { -e } else { e })
            }
            _ => perr("expected an integer exponent after `^`"),
        }
    }

    fn atom(&mut self) -> Result<T::V> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(self.target.int(&n))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                self.target.ident(&name)
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return perr("missing `)`");
                }
                Ok(v)
            }
            Some(t) => perr(format!("unexpected token {t:?}")),
            None => perr("unexpected end of expression"),
        }
    }
}

fn run<T: Target>(target: &T, text: &str) -> Result<T::V> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return perr("empty expression");
    }
    let mut p = Parser { toks, pos: 0, target };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return perr(format!("trailing input after position {}", p.pos));
    }
    Ok(v)
}

impl Field {
    /// Parses an element written in the generators of the tower.
    pub fn parse_elem(&self, text: &str) -> Result<Elem> {
        run(&ElemTarget(self), text)
    }

    /// Parses a polynomial in `y` with coefficients in `self`.
    pub fn parse_poly(&self, text: &str) -> Result<UPoly> {
        run(&PolyTarget(self), text)
    }

    /// Parses a tower description such as
    /// `base=F2; gen a: transcendental; gen r: algebraic y^2 - a`.
    pub fn parse_tower(text: &str) -> Result<Field> {
        let mut parts = text.split(';').map(str::trim).filter(|s| !s.is_empty());
        let base = parts.next().ok_or_else(|| Error::Parse("empty tower description".into()))?;
        let mut field = parse_base(base.strip_prefix("base").map(str::trim_start).and_then(|s| s.strip_prefix('=')).ok_or_else(
            || Error::Parse(format!("expected `base=...`, found `{base}`")),
        )?)?;
        for part in parts {
            field = Field::parse_step(&field, part)?;
        }
        Ok(field)
    }

    /// Applies one `gen <name>: transcendental | algebraic <poly>` clause.
    pub fn parse_step(field: &Field, clause: &str) -> Result<Field> {
        let rest = clause
            .strip_prefix("gen ")
            .ok_or_else(|| Error::Parse(format!("expected `gen <name>: ...`, found `{clause}`")))?;
        let (name, kind) = rest
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("missing `:` in `{clause}`")))?;
        let name = name.trim();
        let kind = kind.trim();
        if kind == "transcendental" {
            field.transcendental(name)
        } else if let Some(poly_text) = kind.strip_prefix("algebraic") {
            let f = field.parse_poly(poly_text.trim())?;
            field.algebraic(name, &f)
        } else {
            perr(format!("unknown step kind `{kind}`"))
        }
    }
}

/// `Q` or `F<p>`.
pub fn parse_base(text: &str) -> Result<Field> {
    let text = text.trim();
    if text == "Q" {
        return Ok(Field::rationals());
    }
    match text.strip_prefix('F').and_then(|p| p.parse::<u64>().ok()) {
        Some(p) => Field::prime(p).map_err(|e| Error::Parse(e.to_string())),
        None => perr(format!("unknown base field `{text}`")),
    }
}
