//! A small parser for written formulas such as
//! `(t^16-1)(t^4+1)t^{-2}(0,2)(xY) - t^{-8}(2,-3)` or `t^{-18}l^3m^{14}`.
//!
//! Juxtaposition is (noncommutative) multiplication, evaluated left to right.
//! A parenthesized `(p,q)` with two integers is a torus basis pair. Letters are
//! single-character symbols except the two-letter names `xY` and `xZ`. `t` is
//! always the coefficient variable; other symbols are resolved by the caller.

use std::ops::{Add, Mul, Neg};

use crate::coeff::RatFunc;
use crate::qplane::QPlaneElement;
use crate::torus::TorusElement;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{msg} at byte {pos}")]
pub struct ExprError {
    pub pos: usize,
    pub msg: String,
}

/// A ring the parser can evaluate into.
pub trait ExprRing: Clone + Sized {
    fn from_scalar(c: RatFunc) -> Self;
    /// The value as an element of Q(t), if it is one.
    fn as_scalar(&self) -> Option<RatFunc>;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `(p,q)` written as a pair; `None` if pairs are meaningless here.
    fn pair(_p: i32, _q: i32) -> Option<Self> {
        None
    }
}

impl ExprRing for RatFunc {
    fn from_scalar(c: RatFunc) -> Self {
        c
    }
    fn as_scalar(&self) -> Option<RatFunc> {
        Some(self.clone())
    }
    fn add(&self, other: &Self) -> Self {
        Add::add(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        Mul::mul(self, other)
    }
    fn neg(&self) -> Self {
        Neg::neg(self)
    }
}

impl ExprRing for TorusElement {
    fn from_scalar(c: RatFunc) -> Self {
        TorusElement::scalar(c)
    }
    fn as_scalar(&self) -> Option<RatFunc> {
        (self.pairs().next().is_none()).then(|| self.scalar_part().clone())
    }
    fn add(&self, other: &Self) -> Self {
        Add::add(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        Mul::mul(self, other)
    }
    fn neg(&self) -> Self {
        Neg::neg(self)
    }
    fn pair(p: i32, q: i32) -> Option<Self> {
        Some(TorusElement::basis(p, q))
    }
}

impl ExprRing for QPlaneElement {
    fn from_scalar(c: RatFunc) -> Self {
        QPlaneElement::monomial(c, 0, 0)
    }
    fn as_scalar(&self) -> Option<RatFunc> {
        self.terms().all(|(k, _)| *k == (0, 0)).then(|| self.coeff(0, 0))
    }
    fn add(&self, other: &Self) -> Self {
        Add::add(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        Mul::mul(self, other)
    }
    fn neg(&self) -> Self {
        Neg::neg(self)
    }
}

/// Resolves a symbol raised to an integer power.
pub type Resolver<'a, R> = dyn Fn(&str, i32) -> Option<R> + 'a;

struct Parser<'a, 'r, R> {
    src: &'a [u8],
    pos: usize,
    resolve: &'r Resolver<'r, R>,
}

pub fn parse_expr<R: ExprRing>(src: &str, resolve: &Resolver<'_, R>) -> Result<R, ExprError> {
    let mut p = Parser { src: src.as_bytes(), pos: 0, resolve };
    let v = p.sum()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected input"));
    }
    Ok(v)
}

/// Parses with only `t` (and pairs, for rings that have them) available.
pub fn parse_plain<R: ExprRing>(src: &str) -> Result<R, ExprError> {
    parse_expr(src, &|_, _| None)
}

/// `l` and `m` as quantum-plane generators; other symbols from `extra`.
pub fn parse_qplane(src: &str, extra: &Resolver<'_, QPlaneElement>) -> Result<QPlaneElement, ExprError> {
    parse_expr(src, &|name, k| match name {
        "l" => Some(QPlaneElement::monomial(RatFunc::one(), k, 0)),
        "m" => Some(QPlaneElement::monomial(RatFunc::one(), 0, k)),
        _ => extra(name, k),
    })
}

impl<R: ExprRing> Parser<'_, '_, R> {
    fn err(&self, msg: &str) -> ExprError {
        ExprError { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && (self.src[self.pos] as char).is_whitespace() {
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

    fn sum(&mut self) -> Result<R, ExprError> {
        let mut neg = false;
        if self.eat(b'-') {
            neg = true;
        } else {
            self.eat(b'+');
        }
        let mut acc = self.product()?;
        if neg {
            acc = acc.neg();
        }
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.product()?);
            } else if self.eat(b'-') {
                acc = acc.add(&self.product()?.neg());
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_factor(&mut self) -> bool {
        matches!(self.peek(), Some(c) if c == b'(' || c == b'[' || c.is_ascii_alphanumeric())
    }

    fn product(&mut self) -> Result<R, ExprError> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(b'*') {
                acc = acc.mul(&self.factor()?);
            } else if self.eat(b'/') {
                let d = self.factor()?;
                let d = d.as_scalar().ok_or_else(|| self.err("division by a non-scalar"))?;
                if d.is_zero() {
                    return Err(self.err("division by zero"));
                }
                acc = acc.mul(&R::from_scalar(d.recip()));
            } else if self.starts_factor() {
                acc = acc.mul(&self.factor()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn integer(&mut self) -> Result<i64, ExprError> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.src.get(self.pos), Some(b'-') | Some(b'+')) {
            self.pos += 1;
        }
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        text.parse().map_err(|_| ExprError { pos: start, msg: "expected an integer".into() })
    }

    /// `^k`, `^{k}`, `^{}` (meaning 1), or nothing.
    fn exponent(&mut self) -> Result<i32, ExprError> {
        if !self.eat(b'^') {
            return Ok(1);
        }
        if self.eat(b'{') {
            if self.eat(b'}') {
                return Ok(1);
            }
            let k = self.integer()?;
            if !self.eat(b'}') {
                return Err(self.err("expected '}'"));
            }
            return i32::try_from(k).map_err(|_| self.err("exponent out of range"));
        }
        let k = self.integer()?;
        i32::try_from(k).map_err(|_| self.err("exponent out of range"))
    }

    /// Tries to read `(p,q)` at the current position.
    fn try_pair(&mut self) -> Option<(i32, i32)> {
        let save = self.pos;
        let mut read = || -> Option<(i32, i32)> {
            if !self.eat(b'(') {
                return None;
            }
            let p = self.integer().ok()?;
            if !self.eat(b',') {
                return None;
            }
            let q = self.integer().ok()?;
            if !self.eat(b')') {
                return None;
            }
            Some((i32::try_from(p).ok()?, i32::try_from(q).ok()?))
        };
        let r = read();
        if r.is_none() {
            self.pos = save;
        } else if self.src.get(self.pos..self.pos + 2) == Some(b"_T") {
            self.pos += 2;
        }
        r
    }

    fn factor(&mut self) -> Result<R, ExprError> {
        let c = self.peek().ok_or_else(|| self.err("unexpected end of input"))?;
        if c == b'(' {
            if let Some((p, q)) = self.try_pair() {
                return R::pair(p, q).ok_or_else(|| self.err("pairs are not allowed here"));
            }
        }
        if c == b'(' || c == b'[' {
            self.pos += 1;
            let close = if c == b'(' { b')' } else { b']' };
            let inner = self.sum()?;
            if !self.eat(close) {
                return Err(self.err("unbalanced bracket"));
            }
            let k = self.exponent()?;
            if k < 0 {
                return Err(self.err("negative power of a group"));
            }
            let mut acc = R::from_scalar(RatFunc::one());
            for _ in 0..k {
                acc = acc.mul(&inner);
            }
            return Ok(acc);
        }
        if c.is_ascii_digit() {
            let n = self.integer()?;
            return Ok(R::from_scalar(RatFunc::from_int(n)));
        }
        if c.is_ascii_alphabetic() {
            let rest = &self.src[self.pos..];
            let name = if rest.starts_with(b"xY") || rest.starts_with(b"xZ") {
                std::str::from_utf8(&rest[..2]).expect("ascii").to_string()
            } else {
                (c as char).to_string()
            };
            let start = self.pos;
            self.pos += name.len();
            let k = self.exponent()?;
            if name == "t" {
                return Ok(R::from_scalar(RatFunc::t_pow(k)));
            }
            return (self.resolve)(&name, k)
                .ok_or(ExprError { pos: start, msg: format!("unknown symbol '{name}'") });
        }
        Err(self.err("unexpected character"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalars() {
        let v: RatFunc = parse_plain("(t^16-1)(t^4+1)t^{-2} - 2t^{}").unwrap();
        let expected = RatFunc::laurent([(1, 18), (1, 14), (-1, 2), (-1, -2), (-2, 1)]);
        assert_eq!(v, expected);
        let q: RatFunc = parse_plain("1/((t^2-1)(t^2+1))").unwrap();
        assert_eq!(q, RatFunc::one() / RatFunc::laurent([(1, 4), (-1, 0)]));
    }

    #[test]
    fn torus_terms() {
        let v: TorusElement = parse_plain("t^{-6}(2,3)_T - t^6(2,-1)_T + 2").unwrap();
        let expected = TorusElement::from_terms([
            (RatFunc::t_pow(-6), 2, 3),
            (RatFunc::monomial(-1, 6), 2, -1),
            (RatFunc::from_int(1), 0, 0),
        ]);
        assert_eq!(v, expected);
        let w: TorusElement = parse_plain("(0,1)(0,1)").unwrap();
        assert_eq!(w, TorusElement::meridian_power(2));
    }

    #[test]
    fn qplane_monomials() {
        let v = parse_qplane("t^{-18}l^3m^{14} + t^8l^2m^14 - lm^{-1}", &|_, _| None).unwrap();
        let mut expected = QPlaneElement::monomial(RatFunc::t_pow(-18), 3, 14);
        expected.add_term(2, 14, RatFunc::t_pow(8));
        expected.add_term(1, -1, RatFunc::from_int(-1));
        assert_eq!(v, expected);
        // order matters: m l = t^-2 l m
        assert_eq!(parse_qplane("ml", &|_, _| None).unwrap(), QPlaneElement::monomial(RatFunc::t_pow(-2), 1, 1));
    }

    #[test]
    fn errors() {
        assert!(parse_plain::<RatFunc>("(t+1").is_err());
        assert!(parse_plain::<RatFunc>("(1,2)").is_err());
        assert!(parse_plain::<TorusElement>("1/(1,2)").is_err());
        assert!(parse_plain::<RatFunc>("t^{").is_err());
        assert!(parse_plain::<RatFunc>("q").is_err());
    }
}
