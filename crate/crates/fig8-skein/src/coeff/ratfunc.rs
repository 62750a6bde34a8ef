use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::laurent::LaurentPoly;
use super::upoly::UPoly;

/// An element of Q(t), kept in canonical form.
///
/// Canonical means: numerator and denominator are coprime, the denominator
/// is an ordinary polynomial with nonzero constant term and leading
/// coefficient 1. Two values are equal iff their canonical forms coincide.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        Self::from_laurent(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentPoly::one())
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_laurent(LaurentPoly::from_int(c))
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::from_laurent(LaurentPoly::monomial(c, 0))
    }

    /// `c t^k`
    pub fn monomial(c: i64, k: i32) -> Self {
        Self::from_laurent(LaurentPoly::monomial(BigRational::from_integer(BigInt::from(c)), k))
    }

    /// `t^k`
    pub fn t_pow(k: i32) -> Self {
        Self::monomial(1, k)
    }

    /// Shorthand for a Laurent polynomial given as `(coefficient, exponent)` pairs.
    pub fn laurent<I: IntoIterator<Item = (i64, i32)>>(terms: I) -> Self {
        Self::from_laurent(LaurentPoly::from_terms(terms))
    }

    pub fn from_laurent(num: LaurentPoly) -> Self {
        Self { num, den: LaurentPoly::one() }
    }

    /// Builds `num / den` and canonicalizes. Panics on a zero denominator.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let (ln, pn) = num.to_upoly();
        let (ld, pd) = den.to_upoly();
        let g = UPoly::gcd(&pn, &pd);
        let (pn, pd) = if g.is_constant() {
            (pn, pd)
        } else {
            (pn.div_rem(&g).0, pd.div_rem(&g).0)
        };
        let lead = pd.lead().expect("nonzero").clone();
        let inv = lead.recip();
        let num = LaurentPoly::from_upoly(&pn, ln - ld).scale(&inv);
        let den = LaurentPoly::from_upoly(&pd, 0).scale(&inv);
        Self { num, den }
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Returns the Laurent polynomial when the canonical denominator is 1.
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// A nonzero unit of the Laurent ring, `c t^k`.
    pub fn is_monomial(&self) -> bool {
        self.den.is_one() && self.num.is_monomial()
    }

    /// Rough size measure used for pivot selection.
    pub fn weight(&self) -> usize {
        self.num.len() + self.den.len()
    }

    /// A common multiple (the lcm) of the denominators.
    pub fn common_denominator<'a, I: IntoIterator<Item = &'a RatFunc>>(items: I) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for r in items {
            if r.den.is_one() || r.den == acc {
                continue;
            }
            let (_, pa) = acc.to_upoly();
            let (_, pb) = r.den.to_upoly();
            let g = LaurentPoly::from_upoly(&UPoly::gcd(&pa, &pb), 0);
            acc = &acc * &r.den.div_exact(&g).expect("gcd divides");
        }
        acc
    }

    /// The numerator of `self` written over `d`, a multiple of its denominator.
    pub fn numer_over(&self, d: &LaurentPoly) -> LaurentPoly {
        if self.den.is_one() {
            return &self.num * d;
        }
        &self.num * &d.div_exact(&self.den).expect("not a common denominator")
    }

    pub fn invert_t(&self) -> Self {
        if self.den.is_one() {
            return Self::from_laurent(self.num.invert_t());
        }
        Self::new(self.num.invert_t(), self.den.invert_t())
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn scale_t(&self, k: i32) -> Self {
        Self { num: self.num.shift(k), den: self.den.clone() }
    }

    pub fn pow(&self, n: i32) -> Self {
        let base = if n < 0 { self.recip() } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..n.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    /// Evaluates at a rational point (must not be a pole).
    pub fn eval_rational(&self, t: &BigRational) -> BigRational {
        self.num.eval_rational(t) / self.den.eval_rational(t)
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        Self::from_laurent(p)
    }
}

impl From<i64> for RatFunc {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_laurent(&self.num + &rhs.num);
        }
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone());
        }
        let (_, pa) = self.den.to_upoly();
        let (_, pb) = rhs.den.to_upoly();
        let g = UPoly::gcd(&pa, &pb);
        let ga = LaurentPoly::from_upoly(&g, 0);
        let a_cof = self.den.div_exact(&ga).expect("gcd divides");
        let b_cof = rhs.den.div_exact(&ga).expect("gcd divides");
        let num = &(&self.num * &b_cof) + &(&rhs.num * &a_cof);
        RatFunc::new(num, &self.den * &b_cof)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_laurent(&self.num * &rhs.num);
        }
        if self.den.is_one() && self.num.is_monomial() {
            return RatFunc { num: &self.num * &rhs.num, den: rhs.den.clone() };
        }
        if rhs.den.is_one() && rhs.num.is_monomial() {
            return RatFunc { num: &self.num * &rhs.num, den: self.den.clone() };
        }
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self * &rhs.recip()
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -self.num, den: self.den }
    }
}

forward_owned!(Add, add, RatFunc);
forward_owned!(Sub, sub, RatFunc);
forward_owned!(Mul, mul, RatFunc);
forward_owned!(Div, div, RatFunc);

impl std::iter::Sum for RatFunc {
    fn sum<I: Iterator<Item = RatFunc>>(iter: I) -> Self {
        iter.fold(RatFunc::zero(), |a, b| a + b)
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(terms: &[(i64, i32)]) -> RatFunc {
        RatFunc::laurent(terms.iter().copied())
    }

    #[test]
    fn cancellation_in_sum() {
        let a = l(&[(1, 1), (1, -1)]);
        let b = l(&[(1, 1), (-1, -1)]);
        assert_eq!(&a + &b, l(&[(2, 1)]));
    }

    #[test]
    fn common_denominator() {
        let a = l(&[(1, 0)]) / l(&[(1, 1), (-1, 0)]);
        let b = l(&[(1, 0)]) / l(&[(1, 1), (1, 0)]);
        let expected = l(&[(2, 1)]) / l(&[(1, 2), (-1, 0)]);
        assert_eq!(&a + &b, expected);
        assert_eq!(expected.denom(), &LaurentPoly::from_terms([(1, 2), (-1, 0)]));
    }

    #[test]
    fn product_and_gcd_reduction() {
        let a = l(&[(1, 1), (1, -1)]);
        let b = l(&[(1, 1), (-1, -1)]);
        assert_eq!(&a * &b, l(&[(1, 2), (-1, -2)]));
        let q = RatFunc::new(
            LaurentPoly::from_terms([(1, 2), (-1, 0)]),
            LaurentPoly::from_terms([(1, 4), (-1, 0)]),
        );
        assert_eq!(q.numer(), &LaurentPoly::one());
        assert_eq!(q.denom(), &LaurentPoly::from_terms([(1, 2), (1, 0)]));
    }

    #[test]
    fn canonical_denominator_is_monic_with_constant_term() {
        let q = RatFunc::new(LaurentPoly::from_terms([(3, 0)]), LaurentPoly::from_terms([(2, 3), (4, 5)]));
        // 3 / (2t^3 + 4t^5) = (3/4) t^-3 / (t^2 + 1/2)
        assert_eq!(q.denom().low_exp(), Some(0));
        assert!(q.denom().leading_coeff().unwrap().is_one());
        assert_eq!(q.numer().low_exp(), Some(-3));
    }

    #[test]
    fn laurent_detection() {
        let q = l(&[(1, 4), (-1, 0)]) / l(&[(1, 2), (-1, 0)]);
        assert_eq!(q.as_laurent(), Some(&LaurentPoly::from_terms([(1, 2), (1, 0)])));
        let r = RatFunc::one() / l(&[(1, 2), (1, 0)]);
        assert!(r.as_laurent().is_none());
    }

    #[test]
    fn invert_t_example() {
        assert_eq!(l(&[(-1, -6), (1, 2)]).invert_t(), l(&[(-1, 6), (1, -2)]));
        assert_eq!(RatFunc::from_int(7).invert_t(), RatFunc::from_int(7));
        let q = l(&[(1, 3)]) / l(&[(1, 1), (2, 0)]);
        assert_eq!(q.invert_t().invert_t(), q);
    }
}
