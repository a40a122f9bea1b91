//! Text syntax for field elements.
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := unary (('*' | '/') unary)*
//! unary    := '-' unary | power
//! power    := atom ('^' exponent)?
//! exponent := '-'? INT ('/' INT)? | '(' '-'? INT ('/' INT)? ')'
//! atom     := INT | NAME | '(' expr ')'
//! NAME     := [A-Za-z_][A-Za-z0-9_']* ('[' [^\]]* ']')?
//! ```
//!
//! A `/` following an exponent's integer belongs to the exponent, so
//! `q[1,2]^1/2` is a square root; write `(q[1,2]^1)/2` to divide instead. Fractional exponents are allowed on free
//! parameters only and their denominators must divide the table's bound.
//! Rendering with `Display` always produces text this grammar reads back to
//! an equal element.

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::One;

use super::field::FieldElem;
use super::param::ParamTable;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Name(String),
    Sym(char),
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

fn lex(src: &str) -> Result<Lexer> {
    let chars: Vec<char> = src.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            toks.push((Tok::Int(s.parse().unwrap()), col));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                i += 1;
            }
            if i < chars.len() && chars[i] == '[' {
                while i < chars.len() && chars[i] != ']' {
                    i += 1;
                }
                if i == chars.len() {
                    return Err(Error::parse(1, col, "unterminated '[' in parameter name"));
                }
                i += 1;
            }
            let s: String = chars[start..i].iter().filter(|c| !c.is_whitespace()).collect();
            toks.push((Tok::Name(s), col));
        } else if "+-*/^()".contains(c) {
            toks.push((Tok::Sym(c), col));
            i += 1;
        } else {
            return Err(Error::parse(1, col, format!("unexpected character {c:?}")));
        }
    }
    Ok(Lexer {
        toks,
        pos: 0,
        end: chars.len() + 1,
    })
}

impl Lexer {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map(|(_, c)| *c).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::parse(1, self.col(), msg))
    }
}

struct Parser<'a> {
    lx: Lexer,
    table: &'a ParamTable,
}

impl Parser<'_> {
    fn expr(&mut self) -> Result<FieldElem> {
        let mut acc = self.term()?;
        loop {
            if self.lx.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.lx.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<FieldElem> {
        let mut acc = self.unary()?;
        loop {
            if self.lx.eat('*') {
                acc = acc.mul(&self.unary()?);
            } else if self.lx.peek() == Some(&Tok::Sym('/')) {
                let col = self.lx.col();
                self.lx.bump();
                let d = self.unary()?;
                acc = acc.div(&d).map_err(|_| Error::parse(1, col, "division by zero"))?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<FieldElem> {
        if self.lx.eat('-') {
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn int(&mut self) -> Result<BigInt> {
        match self.lx.bump() {
            Some(Tok::Int(n)) => Ok(n),
            _ => {
                self.lx.pos -= 1;
                self.lx.err("expected integer")
            }
        }
    }

    fn exponent(&mut self) -> Result<Rational64> {
        let paren = self.lx.eat('(');
        let neg = self.lx.eat('-');
        let n = self.int()?;
        let d = if self.lx.eat('/') { self.int()? } else { BigInt::one() };
        if paren && !self.lx.eat(')') {
            return self.lx.err("expected ')' after exponent");
        }
        let to_i64 = |x: &BigInt| i64::try_from(x).ok();
        let (Some(n), Some(d)) = (to_i64(&n), to_i64(&d)) else {
            return self.lx.err("exponent out of range");
        };
        if d == 0 {
            return self.lx.err("zero exponent denominator");
        }
        let e = Rational64::new(n, d);
        Ok(if neg { -e } else { e })
    }

    fn power(&mut self) -> Result<FieldElem> {
        let col = self.lx.col();
        match self.lx.bump() {
            Some(Tok::Int(n)) => {
                let base = FieldElem::from_rational(BigRational::from_integer(n));
                if self.lx.eat('^') {
                    let e = self.exponent()?;
                    if !e.is_integer() {
                        return Err(Error::parse(1, col, "fractional power of a number"));
                    }
                    return base
                        .pow(e.to_integer())
                        .map_err(|_| Error::parse(1, col, "division by zero"));
                }
                Ok(base)
            }
            Some(Tok::Name(name)) => {
                let Some(p) = self.table.get(&name) else {
                    return Err(Error::parse(1, col, format!("undeclared parameter {name}")));
                };
                let e = if self.lx.eat('^') {
                    self.exponent()?
                } else {
                    Rational64::one()
                };
                if !e.is_integer() {
                    if p.is_torsion() {
                        return Err(Error::parse(
                            1,
                            col,
                            format!("fractional exponent on torsion parameter {name}"),
                        ));
                    }
                    if self.table.denom_bound % e.denom() != 0 {
                        return Err(Error::parse(
                            1,
                            col,
                            format!(
                                "exponent denominator {} does not divide the bound {}",
                                e.denom(),
                                self.table.denom_bound
                            ),
                        ));
                    }
                }
                Ok(FieldElem::param_pow(p, e))
            }
            Some(Tok::Sym('(')) => {
                let inner = self.expr()?;
                if !self.lx.eat(')') {
                    return self.lx.err("expected ')'");
                }
                if self.lx.eat('^') {
                    let e = self.exponent()?;
                    if !e.is_integer() {
                        return Err(Error::parse(1, col, "fractional power of an expression"));
                    }
                    return inner
                        .pow(e.to_integer())
                        .map_err(|_| Error::parse(1, col, "division by zero"));
                }
                Ok(inner)
            }
            _ => Err(Error::parse(1, col, "expected number, parameter or '('")),
        }
    }
}

/// Parses a field element; every parameter must be declared in `table`.
pub fn parse_field_elem(src: &str, table: &ParamTable) -> Result<FieldElem> {
    let lx = lex(src)?;
    if lx.toks.is_empty() {
        return Err(Error::parse(1, 1, "empty expression"));
    }
    let mut p = Parser { lx, table };
    let x = p.expr()?;
    if p.lx.pos < p.lx.toks.len() {
        return p.lx.err("trailing input");
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ParamKind;

    fn table() -> ParamTable {
        let mut t = ParamTable::new();
        t.declare("v", ParamKind::Free).unwrap();
        t.declare("t", ParamKind::Free).unwrap();
        t.declare("q[1,2]", ParamKind::Free).unwrap();
        t.declare("i", ParamKind::Torsion { square: -1 }).unwrap();
        t
    }

    #[test]
    fn fractional_exponent_binds_tightly() {
        let t = table();
        let a = parse_field_elem("q[1,2]^1/2 * q[1,2]^1/2", &t).unwrap();
        assert_eq!(a, parse_field_elem("q[1,2]", &t).unwrap());
        let b = parse_field_elem("(q[1,2]^1)/2", &t).unwrap();
        assert_eq!(b.add(&b), parse_field_elem("q[1,2]", &t).unwrap());
    }

    #[test]
    fn renders_and_reparses() {
        let t = table();
        for src in [
            "3/4 * v^2 * t^-1 - 7",
            "(v - v^-1)^-2 + i*t",
            "(v^2 + 1) / (v^3 - 2*t)",
            "v^-1/2 * q[1,2]^3/4",
            "0",
        ] {
            let x = parse_field_elem(src, &t).unwrap();
            let y = parse_field_elem(&x.to_string(), &t).unwrap();
            assert_eq!(x, y, "{src} -> {x}");
        }
    }

    #[test]
    fn errors_carry_columns() {
        let t = table();
        match parse_field_elem("v + w", &t) {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 5),
            other => panic!("{other:?}"),
        }
        assert!(parse_field_elem("v^1/3", &t).is_err());
        assert!(parse_field_elem("i^1/2", &t).is_err());
        assert!(parse_field_elem("v / (t - t)", &t).is_err());
        assert!(parse_field_elem("v v", &t).is_err());
    }
}
