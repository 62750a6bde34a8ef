//! The Kauffman bracket skein algebra of the thickened torus in the
//! basis `(p,q)_T`, multiplied with the product-to-sum formula.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::coeff::RatFunc;

/// A canonical index of the basis `(p,q)_T`: `p > 0`, or `p == 0` and `q > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Pair {
    pub p: i32,
    pub q: i32,
}

/// Result of normalizing an arbitrary `(p,q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Canonical {
    Pair(Pair),
    /// `(0,0)_T`, which equals twice the empty skein.
    TwiceUnit,
}

/// Uses `(p,q)_T = (-p,-q)_T`.
pub fn canonical_pair(p: i32, q: i32) -> Canonical {
    if p == 0 && q == 0 {
        Canonical::TwiceUnit
    } else if p < 0 || (p == 0 && q < 0) {
        Canonical::Pair(Pair { p: -p, q: -q })
    } else {
        Canonical::Pair(Pair { p, q })
    }
}

impl Pair {
    pub fn new(p: i32, q: i32) -> Option<Pair> {
        match canonical_pair(p, q) {
            Canonical::Pair(pair) => Some(pair),
            Canonical::TwiceUnit => None,
        }
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// A finite combination `scalar * 1 + sum c_{p,q} (p,q)_T`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TorusElement {
    scalar: RatFunc,
    terms: BTreeMap<Pair, RatFunc>,
}

impl TorusElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(RatFunc::one())
    }

    pub fn scalar(c: RatFunc) -> Self {
        Self { scalar: c, terms: BTreeMap::new() }
    }

    /// `(p,q)_T` for arbitrary integers.
    pub fn basis(p: i32, q: i32) -> Self {
        Self::term(RatFunc::one(), p, q)
    }

    /// `c (p,q)_T` for arbitrary integers.
    pub fn term(c: RatFunc, p: i32, q: i32) -> Self {
        let mut e = Self::zero();
        e.add_term(c, p, q);
        e
    }

    /// Sum of `c (p,q)_T` terms.
    pub fn from_terms<I: IntoIterator<Item = (RatFunc, i32, i32)>>(terms: I) -> Self {
        let mut e = Self::zero();
        for (c, p, q) in terms {
            e.add_term(c, p, q);
        }
        e
    }

    pub fn add_term(&mut self, c: RatFunc, p: i32, q: i32) {
        match canonical_pair(p, q) {
            Canonical::TwiceUnit => self.add_scalar(&c + &c),
            Canonical::Pair(pair) => self.add_pair(pair, c),
        }
    }

    pub fn add_scalar(&mut self, c: RatFunc) {
        self.scalar = &self.scalar + &c;
    }

    pub fn add_pair(&mut self, pair: Pair, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(pair) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn scalar_part(&self) -> &RatFunc {
        &self.scalar
    }

    pub fn coeff(&self, p: i32, q: i32) -> RatFunc {
        match canonical_pair(p, q) {
            Canonical::TwiceUnit => &self.scalar * &RatFunc::from_int(2).recip(),
            Canonical::Pair(pair) => self.terms.get(&pair).cloned().unwrap_or_default(),
        }
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&Pair, &RatFunc)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.scalar.is_zero() && self.terms.is_empty()
    }

    /// Number of nonzero summands including the scalar.
    pub fn len(&self) -> usize {
        self.terms.len() + usize::from(!self.scalar.is_zero())
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn max_p(&self) -> i32 {
        self.terms.keys().map(|k| k.p).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            scalar: &self.scalar * c,
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Applies a map to every coefficient, dropping zeros.
    pub fn map_coeffs(&self, f: impl Fn(&RatFunc) -> RatFunc) -> Self {
        let mut out = Self::scalar(f(&self.scalar));
        for (k, v) in &self.terms {
            out.add_pair(*k, f(v));
        }
        out
    }

    /// Mirror image: `(p,q)_T -> (p,-q)_T` and `t -> t^-1` on coefficients.
    pub fn mirror(&self) -> Self {
        let mut out = Self::scalar(self.scalar.invert_t());
        for (k, v) in &self.terms {
            out.add_term(v.invert_t(), k.p, -k.q);
        }
        out
    }

    /// `(0,1)_T^n` expanded in the basis.
    pub fn meridian_power(n: u32) -> Self {
        let m = Self::basis(0, 1);
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &m * &acc;
        }
        acc
    }

    fn mul_pairs(a: Pair, b: Pair, c: &RatFunc, out: &mut TorusElement) {
        let det = a.p * b.q - a.q * b.p;
        out.add_term(c.scale_t(det), a.p + b.p, a.q + b.q);
        out.add_term(c.scale_t(-det), a.p - b.p, a.q - b.q);
    }
}

impl fmt::Display for TorusElement {
    /// `c * (p,q)` summands, scalar first, pairs in increasing `(p,q)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        if !self.scalar.is_zero() {
            parts.push(format!("[{}]", self.scalar));
        }
        for (k, v) in &self.terms {
            parts.push(format!("[{v}] * {k}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for TorusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &TorusElement {
    type Output = TorusElement;
    fn add(self, rhs: &TorusElement) -> TorusElement {
        let mut out = self.clone();
        out.add_scalar(rhs.scalar.clone());
        for (k, v) in &rhs.terms {
            out.add_pair(*k, v.clone());
        }
        out
    }
}

impl Neg for &TorusElement {
    type Output = TorusElement;
    fn neg(self) -> TorusElement {
        self.scale(&RatFunc::from_int(-1))
    }
}

impl Sub for &TorusElement {
    type Output = TorusElement;
    fn sub(self, rhs: &TorusElement) -> TorusElement {
        self + &(-rhs)
    }
}

impl Mul for &TorusElement {
    type Output = TorusElement;

    /// The product-to-sum formula
    /// `(p,q)*(r,s) = t^{ps-qr} (p+r,q+s) + t^{-(ps-qr)} (p-r,q-s)`, extended bilinearly.
    fn mul(self, rhs: &TorusElement) -> TorusElement {
        let mut out = TorusElement::zero();
        if !self.scalar.is_zero() {
            out = rhs.scale(&self.scalar);
        }
        if !rhs.scalar.is_zero() {
            for (k, v) in &self.terms {
                out.add_pair(*k, v * &rhs.scalar);
            }
        }
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                TorusElement::mul_pairs(*a, *b, &(ca * cb), &mut out);
            }
        }
        out
    }
}

forward_owned!(Add, add, TorusElement);
forward_owned!(Sub, sub, TorusElement);
forward_owned!(Mul, mul, TorusElement);

#[cfg(test)]
mod tests {
    use super::*;

    fn tp(k: i32) -> RatFunc {
        RatFunc::t_pow(k)
    }

    #[test]
    fn canonical_pairs() {
        assert_eq!(canonical_pair(-1, 3), Canonical::Pair(Pair { p: 1, q: -3 }));
        assert_eq!(canonical_pair(0, -5), Canonical::Pair(Pair { p: 0, q: 5 }));
        assert_eq!(canonical_pair(0, 0), Canonical::TwiceUnit);
        assert_eq!(TorusElement::basis(0, 0), TorusElement::scalar(RatFunc::from_int(2)));
    }

    #[test]
    fn product_to_sum_examples() {
        for q in -4..=4 {
            let lhs = &TorusElement::basis(1, q) * &TorusElement::basis(1, 0);
            let rhs = TorusElement::from_terms([(tp(-q), 2, q), (tp(q), 0, q)]);
            assert_eq!(lhs, rhs, "q = {q}");
            let lhs = &TorusElement::basis(0, 1) * &TorusElement::basis(1, q);
            let rhs = TorusElement::from_terms([(tp(-1), 1, q + 1), (tp(1), 1, q - 1)]);
            assert_eq!(lhs, rhs, "q = {q}");
        }
        let sq = &TorusElement::basis(0, 1) * &TorusElement::basis(0, 1);
        assert_eq!(sq, &TorusElement::basis(0, 2) + &TorusElement::scalar(RatFunc::from_int(2)));
    }

    #[test]
    fn signed_determinant_reproduces_three_term_recurrence() {
        // (1,q+1) = t x (1,q) - t^2 (1,q-1), with x = (0,1) acting on the left.
        for q in -5..=5 {
            let x = TorusElement::basis(0, 1);
            let rhs = &(&x * &TorusElement::basis(1, q)).scale(&tp(1))
                - &TorusElement::term(tp(2), 1, q - 1);
            assert_eq!(TorusElement::basis(1, q + 1), rhs);
        }
    }

    #[test]
    fn meridian_powers() {
        assert_eq!(TorusElement::meridian_power(0), TorusElement::one());
        assert_eq!(
            TorusElement::meridian_power(2),
            &TorusElement::basis(0, 2) + &TorusElement::scalar(RatFunc::from_int(2))
        );
        assert_eq!(
            TorusElement::meridian_power(3),
            TorusElement::from_terms([(RatFunc::one(), 0, 3), (RatFunc::from_int(3), 0, 1)])
        );
    }

    #[test]
    fn mirror_examples() {
        let e = TorusElement::term(tp(-6), 2, 3);
        assert_eq!(e.mirror(), TorusElement::term(tp(6), 2, -3));
        let m = TorusElement::term(RatFunc::laurent([(1, 2), (3, -1)]), 0, 4);
        assert_eq!(m.mirror(), TorusElement::term(RatFunc::laurent([(1, -2), (3, 1)]), 0, 4));
    }

    #[test]
    fn squares_of_basis_elements() {
        for p in 0..=4 {
            for q in -6..=6 {
                if p == 0 && q <= 0 {
                    continue;
                }
                let b = TorusElement::basis(p, q);
                let expected = &TorusElement::basis(2 * p, 2 * q) + &TorusElement::scalar(RatFunc::from_int(2));
                assert_eq!(&b * &b, expected);
            }
        }
    }
}
