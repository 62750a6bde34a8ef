use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::upoly::UPoly;

/// A Laurent polynomial in `t` with rational coefficients.
///
/// Stored sparsely as exponent -> coefficient; zero coefficients are never kept.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigRational::one(), 0)
    }

    pub fn monomial(c: BigRational, exp: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// `t^exp`
    pub fn t_pow(exp: i32) -> Self {
        Self::monomial(BigRational::one(), exp)
    }

    pub fn from_int(c: i64) -> Self {
        Self::monomial(BigRational::from_integer(BigInt::from(c)), 0)
    }

    /// Builds from `(coefficient, exponent)` pairs, summing repeats.
    pub fn from_terms<I: IntoIterator<Item = (i64, i32)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (c, e) in terms {
            p.add_term(e, BigRational::from_integer(BigInt::from(c)));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// A single term `c t^k`; these are the units of the Laurent ring.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &BigRational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i32) -> BigRational {
        self.terms.get(&exp).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn low_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn high_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.terms.values().next_back()
    }

    pub fn add_term(&mut self, exp: i32, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                if o.get().is_integer() && c.is_integer() {
                    // skip the gcd in the rational sum
                    let v = o.get().numer() + c.numer();
                    *o.get_mut() = BigRational::from_integer(v);
                } else {
                    *o.get_mut() += c;
                }
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, v)| (e + k, v.clone())).collect(),
        }
    }

    /// The substitution `t -> t^-1`.
    pub fn invert_t(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, v)| (-e, v.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates at a rational point.
    pub fn eval_rational(&self, t: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let p = if *e >= 0 {
                num_traits::pow(t.clone(), *e as usize)
            } else {
                num_traits::pow(t.recip(), (-*e) as usize)
            };
            acc += c * p;
        }
        acc
    }

    /// Splits into `t^low * P(t)` with `P` an ordinary polynomial with nonzero constant term.
    pub(crate) fn to_upoly(&self) -> (i32, UPoly) {
        let Some(low) = self.low_exp() else {
            return (0, UPoly::zero());
        };
        let high = self.high_exp().unwrap_or(low);
        let mut coeffs = vec![BigRational::zero(); (high - low + 1) as usize];
        for (e, c) in &self.terms {
            coeffs[(e - low) as usize] = c.clone();
        }
        (low, UPoly::from_coeffs(coeffs))
    }

    pub(crate) fn from_upoly(p: &UPoly, shift: i32) -> Self {
        let mut terms = BTreeMap::new();
        for (i, c) in p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                terms.insert(i as i32 + shift, c.clone());
            }
        }
        Self { terms }
    }

    /// Exact quotient when `divisor` divides `self` in the Laurent ring.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (ls, ps) = self.to_upoly();
        let (ld, pd) = divisor.to_upoly();
        let (q, r) = ps.div_rem(&pd);
        if !r.is_zero() {
            return None;
        }
        Some(Self::from_upoly(&q, ls - ld))
    }

    fn write_term(f: &mut fmt::Formatter<'_>, c: &BigRational, e: i32, first: bool) -> fmt::Result {
        let neg = c.is_negative();
        let a = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if neg { " - " } else { " + " })?;
        }
        let unit = a.is_one();
        if e == 0 {
            return write!(f, "{a}");
        }
        if !unit {
            write!(f, "{a}*")?;
        }
        if e == 1 {
            write!(f, "t")
        } else {
            write!(f, "t^{e}")
        }
    }
}

impl fmt::Display for LaurentPoly {
    /// Signed monomials in decreasing exponent order, e.g. `-t^6 + t^-2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            Self::write_term(f, c, *e, i == 0)?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl LaurentPoly {
    /// `(exponent, coefficient)` pairs if every coefficient is a machine integer.
    fn small_int_terms(&self) -> Option<Vec<(i32, i64)>> {
        self.terms
            .iter()
            .map(|(e, c)| if c.is_integer() { c.numer().to_i64().map(|v| (*e, v)) } else { None })
            .collect()
    }

    /// Dense integer product; `None` on overflow.
    fn mul_small(a: &[(i32, i64)], b: &[(i32, i64)]) -> Option<LaurentPoly> {
        let (lo_a, hi_a) = (a.first()?.0, a.last()?.0);
        let (lo_b, hi_b) = (b.first()?.0, b.last()?.0);
        let mut acc = vec![0i128; (hi_a - lo_a + hi_b - lo_b + 1) as usize];
        for &(ea, ca) in a {
            for &(eb, cb) in b {
                let slot = &mut acc[(ea - lo_a + eb - lo_b) as usize];
                *slot = slot.checked_add(ca as i128 * cb as i128)?;
            }
        }
        let terms = acc
            .into_iter()
            .enumerate()
            .filter(|(_, c)| *c != 0)
            .map(|(i, c)| (lo_a + lo_b + i as i32, BigRational::from_integer(BigInt::from(c))))
            .collect();
        Some(LaurentPoly { terms })
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        if let (Some(a), Some(b)) = (self.small_int_terms(), rhs.small_int_terms()) {
            if let Some(p) = LaurentPoly::mul_small(&a, &b) {
                return p;
            }
        }
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}


forward_owned!(Add, add, LaurentPoly);
forward_owned!(Sub, sub, LaurentPoly);
forward_owned!(Mul, mul, LaurentPoly);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_decreasing_exponents() {
        let p = LaurentPoly::from_terms([(-1, -6), (1, 2)]);
        assert_eq!(p.to_string(), "t^2 - t^-6");
        let q = LaurentPoly::from_terms([(2, 1), (-3, 0), (1, -1)]);
        assert_eq!(q.to_string(), "2*t - 3 + t^-1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn exact_division() {
        let a = LaurentPoly::from_terms([(1, 4), (-1, 0)]);
        let b = LaurentPoly::from_terms([(1, 2), (-1, 0)]);
        assert_eq!(a.div_exact(&b).unwrap(), LaurentPoly::from_terms([(1, 2), (1, 0)]));
        assert!(b.div_exact(&LaurentPoly::from_terms([(1, 2), (1, 0)])).is_none());
        let m = LaurentPoly::t_pow(-3);
        assert_eq!(a.div_exact(&m).unwrap(), a.shift(3));
    }

    #[test]
    fn invert_t_negates_exponents() {
        let p = LaurentPoly::from_terms([(-1, -6), (1, 2)]);
        assert_eq!(p.invert_t(), LaurentPoly::from_terms([(-1, 6), (1, -2)]));
    }
}
