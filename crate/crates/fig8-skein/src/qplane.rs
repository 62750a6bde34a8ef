//! Laurent polynomials in noncommuting `l`, `m` with `lm = t^2 ml`.
//!
//! Monomials are kept in the normal order `l^a m^b`. Elements with only
//! nonnegative exponents lie in the quantum plane.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::coeff::RatFunc;
use crate::torus::TorusElement;

#[derive(Clone, PartialEq, Eq, Default)]
pub struct QPlaneElement {
    terms: BTreeMap<(i32, i32), RatFunc>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QPlaneError {
    #[error("cannot clear denominators of the zero element")]
    Zero,
}

/// Output of [`QPlaneElement::clear_to_plane`]: `element = l^A m^B * input`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cleared {
    pub multiplier: (i32, i32),
    pub element: QPlaneElement,
}

impl QPlaneElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(RatFunc::one(), 0, 0)
    }

    /// `c l^a m^b`
    pub fn monomial(c: RatFunc, a: i32, b: i32) -> Self {
        let mut e = Self::zero();
        e.add_term(a, b, c);
        e
    }

    pub fn add_term(&mut self, a: i32, b: i32, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((a, b)) {
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

    pub fn coeff(&self, a: i32, b: i32) -> RatFunc {
        self.terms.get(&(a, b)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i32, i32), &RatFunc)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn in_plane(&self) -> bool {
        self.terms.keys().all(|&(a, b)| a >= 0 && b >= 0)
    }

    /// Smallest `l`- and `m`-exponents in the support.
    pub fn min_exponents(&self) -> Option<(i32, i32)> {
        let a = self.terms.keys().map(|k| k.0).min()?;
        let b = self.terms.keys().map(|k| k.1).min()?;
        Some((a, b))
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.add_term(k.0, k.1, v * c);
        }
        out
    }

    /// The image of a torus element under `(p,q)_T -> t^{-pq} (l^p m^q + l^{-p} m^{-q})`,
    /// with the empty skein sent to 1.
    pub fn from_torus(u: &TorusElement) -> Self {
        let mut out = Self::zero();
        out.add_term(0, 0, u.scalar_part().clone());
        for (k, c) in u.pairs() {
            let c = c.scale_t(-k.p * k.q);
            out.add_term(k.p, k.q, c.clone());
            out.add_term(-k.p, -k.q, c);
        }
        out
    }

    /// Left-multiplies by the smallest `l^A m^B` that moves the element into
    /// the quantum plane.
    pub fn clear_to_plane(&self) -> Result<Cleared, QPlaneError> {
        let (min_a, min_b) = self.min_exponents().ok_or(QPlaneError::Zero)?;
        let a = (-min_a).max(0);
        let b = (-min_b).max(0);
        let element = &Self::monomial(RatFunc::one(), a, b) * self;
        Ok(Cleared { multiplier: (a, b), element })
    }

    /// Mirror image: `t -> t^-1` and `m -> m^-1`.
    pub fn mirror(&self) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.add_term(k.0, -k.1, v.invert_t());
        }
        out
    }

    /// Terms sorted by `l`-exponent descending, then `m`-exponent descending.
    pub fn sorted_terms(&self) -> Vec<((i32, i32), &RatFunc)> {
        self.terms.iter().rev().map(|(k, v)| (*k, v)).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Term {
            l: i32,
            m: i32,
            coeff: String,
        }
        let terms: Vec<Term> = self
            .sorted_terms()
            .into_iter()
            .map(|((a, b), c)| Term { l: a, m: b, coeff: c.to_string() })
            .collect();
        serde_json::json!({ "terms": terms })
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, a: i32, b: i32) -> fmt::Result {
    let mut parts = Vec::new();
    match a {
        0 => {}
        1 => parts.push("l".to_string()),
        _ => parts.push(format!("l^{a}")),
    }
    match b {
        0 => {}
        1 => parts.push("m".to_string()),
        _ => parts.push(format!("m^{b}")),
    }
    if parts.is_empty() {
        write!(f, "1")
    } else {
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Display for QPlaneElement {
    /// `[c] * l^a m^b` summands in normal order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, ((a, b), c)) in self.sorted_terms().into_iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "[{c}] * ")?;
            write_monomial(f, a, b)?;
        }
        Ok(())
    }
}

impl fmt::Debug for QPlaneElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &QPlaneElement {
    type Output = QPlaneElement;
    fn add(self, rhs: &QPlaneElement) -> QPlaneElement {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(k.0, k.1, v.clone());
        }
        out
    }
}

impl Neg for &QPlaneElement {
    type Output = QPlaneElement;
    fn neg(self) -> QPlaneElement {
        self.scale(&RatFunc::from_int(-1))
    }
}

impl Sub for &QPlaneElement {
    type Output = QPlaneElement;
    fn sub(self, rhs: &QPlaneElement) -> QPlaneElement {
        self + &(-rhs)
    }
}

impl Mul for &QPlaneElement {
    type Output = QPlaneElement;

    /// `(l^a m^b)(l^c m^d) = t^{-2bc} l^{a+c} m^{b+d}`
    fn mul(self, rhs: &QPlaneElement) -> QPlaneElement {
        let mut out = QPlaneElement::zero();
        for (&(a, b), x) in &self.terms {
            for (&(c, d), y) in &rhs.terms {
                out.add_term(a + c, b + d, (x * y).scale_t(-2 * b * c));
            }
        }
        out
    }
}

forward_owned!(Add, add, QPlaneElement);
forward_owned!(Sub, sub, QPlaneElement);
forward_owned!(Mul, mul, QPlaneElement);

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(c: i64, k: i32, a: i32, b: i32) -> QPlaneElement {
        QPlaneElement::monomial(RatFunc::monomial(c, k), a, b)
    }

    #[test]
    fn normal_ordering_examples() {
        let l = mono(1, 0, 1, 0);
        let m = mono(1, 0, 0, 1);
        assert_eq!(&m * &l, mono(1, -2, 1, 1));
        assert_eq!(&l * &m, mono(1, 0, 1, 1));
        assert_eq!(&mono(1, 0, 1, -1) * &mono(1, 0, -1, 1), mono(1, -2, 0, 0));
        let lm = mono(1, 0, 1, 1);
        assert_eq!(&lm * &lm, mono(1, -2, 2, 2));
    }

    #[test]
    fn substitution_examples() {
        let u = QPlaneElement::from_torus(&TorusElement::basis(1, 1));
        assert_eq!(u, &mono(1, -1, 1, 1) + &mono(1, -1, -1, -1));
        let v = QPlaneElement::from_torus(&TorusElement::basis(0, 3));
        assert_eq!(v, &mono(1, 0, 0, 3) + &mono(1, 0, 0, -3));
        let w = QPlaneElement::from_torus(&TorusElement::basis(2, -1));
        assert_eq!(w, &mono(1, 2, 2, -1) + &mono(1, 2, -2, 1));
        assert_eq!(QPlaneElement::from_torus(&TorusElement::one()), QPlaneElement::one());
    }

    #[test]
    fn clearing() {
        let u = &mono(1, 0, 1, -1) + &mono(1, 0, -1, 1);
        let c = u.clear_to_plane().unwrap();
        assert_eq!(c.multiplier, (1, 1));
        assert_eq!(c.element, &mono(1, -2, 2, 0) + &mono(1, 2, 0, 2));
        let inside = &mono(3, 1, 2, 0) + &mono(1, 0, 0, 5);
        let c = inside.clear_to_plane().unwrap();
        assert_eq!(c.multiplier, (0, 0));
        assert_eq!(c.element, inside);
        assert_eq!(QPlaneElement::zero().clear_to_plane(), Err(QPlaneError::Zero));
    }

    #[test]
    fn mirror_example() {
        let u = QPlaneElement::from_torus(&TorusElement::basis(1, 1));
        let expected = &mono(1, 1, 1, -1) + &mono(1, 1, -1, 1);
        assert_eq!(u.mirror(), expected);
        assert_eq!(u.mirror().mirror(), u);
    }

    #[test]
    fn display_is_sorted() {
        let u = &(&mono(1, 0, 0, 2) + &mono(-1, 3, 1, 0)) + &mono(2, 0, 1, 4);
        assert_eq!(u.to_string(), "[2] * l m^4 + [-t^3] * l + [1] * m^2");
    }
}
