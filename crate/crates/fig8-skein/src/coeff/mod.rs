//! Exact coefficients: Laurent polynomials and rational functions in the
//! central variable `t` over Q.

mod laurent;
mod ratfunc;
pub(crate) mod upoly;

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use laurent::LaurentPoly;
pub use ratfunc::RatFunc;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse {what} at byte {pos}: {msg}")]
pub struct ParseError {
    pub what: &'static str,
    pub pos: usize,
    pub msg: String,
}

impl FromStr for LaurentPoly {
    type Err = ParseError;

    /// Accepts the rendering grammar: signed terms `c*t^k`, `t^k`, `t`, `c`,
    /// optionally with braces around exponents (`t^{-6}`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = MonomialParser { src: s.as_bytes(), pos: 0 };
        let out = p.poly()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.err("trailing input"));
        }
        Ok(out)
    }
}

impl FromStr for RatFunc {
    type Err = ParseError;

    /// Either a Laurent polynomial or `(num)/(den)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('(') {
            if let Some(idx) = rest.find(")/(") {
                let num: LaurentPoly = rest[..idx].parse()?;
                let den_src = rest[idx + 3..].strip_suffix(')').ok_or(ParseError {
                    what: "rational function",
                    pos: s.len(),
                    msg: "missing closing parenthesis".into(),
                })?;
                let den: LaurentPoly = den_src.parse()?;
                if den.is_zero() {
                    return Err(ParseError { what: "rational function", pos: 0, msg: "zero denominator".into() });
                }
                return Ok(RatFunc::new(num, den));
            }
        }
        Ok(RatFunc::from_laurent(s.parse()?))
    }
}

struct MonomialParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl MonomialParser<'_> {
    fn err(&self, msg: &str) -> ParseError {
        ParseError { what: "Laurent polynomial", pos: self.pos, msg: msg.to_string() }
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

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let txt = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(txt.parse().expect("digits parse"))
    }

    fn exponent(&mut self) -> Result<i32, ParseError> {
        let braced = self.peek() == Some(b'{');
        if braced {
            self.pos += 1;
        }
        let neg = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let v: i32 = self.integer()?.try_into().map_err(|_| self.err("exponent out of range"))?;
        if braced {
            if self.peek() != Some(b'}') {
                return Err(self.err("expected '}'"));
            }
            self.pos += 1;
        }
        Ok(if neg { -v } else { v })
    }

    fn poly(&mut self) -> Result<LaurentPoly, ParseError> {
        let mut out = LaurentPoly::zero();
        let mut first = true;
        loop {
            let sign = match self.peek() {
                None if first => return Err(self.err("empty input")),
                None => break,
                Some(b'+') => {
                    self.pos += 1;
                    1
                }
                Some(b'-') => {
                    self.pos += 1;
                    -1
                }
                Some(_) if first => 1,
                Some(_) => break,
            };
            first = false;
            let mut coeff = BigRational::from_integer(BigInt::from(sign));
            let mut have_coeff = false;
            if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                let n = self.integer()?;
                let mut c = BigRational::from_integer(n);
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let d = self.integer()?;
                    if d == BigInt::from(0) {
                        return Err(self.err("zero denominator"));
                    }
                    c /= BigRational::from_integer(d);
                }
                coeff *= c;
                have_coeff = true;
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                }
            }
            let mut exp = 0;
            if self.peek() == Some(b't') {
                self.pos += 1;
                exp = 1;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    exp = self.exponent()?;
                }
            } else if !have_coeff {
                return Err(self.err("expected coefficient or 't'"));
            }
            out.add_term(exp, coeff);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip_examples() {
        let p: LaurentPoly = "-t^-6 + t^2".parse().unwrap();
        assert_eq!(p, LaurentPoly::from_terms([(-1, -6), (1, 2)]));
        assert_eq!(p.to_string(), "t^2 - t^-6");
        let q: LaurentPoly = "3/2*t^{4} - 2 + t".parse().unwrap();
        assert_eq!(q.to_string(), "3/2*t^4 + t - 2");
        let r: RatFunc = "(2*t)/(t^2 - 1)".parse().unwrap();
        assert_eq!(r.to_string(), "(2*t)/(t^2 - 1)");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("".parse::<LaurentPoly>().is_err());
        assert!("t^".parse::<LaurentPoly>().is_err());
        assert!("x + 1".parse::<LaurentPoly>().is_err());
        assert!("(1)/(0)".parse::<RatFunc>().is_err());
    }
}
