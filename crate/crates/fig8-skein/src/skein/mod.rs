//! The skein module of the figure-eight knot complement, basis
//! `x^n`, `x^n Y`, `x^n Z` with `Y = t^2 y + 1`, `Z = t^-2 z + 1`.

mod action;
mod preimage;
mod rules;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::Serialize;

use crate::chebyshev::IntPoly;
use crate::coeff::RatFunc;

pub use action::{engine, ActionEngine};
pub use preimage::{preimage_columns, solve_on_columns, solve_preimage, solve_preimage_detailed, Column, Window};
pub use rules::{from_yz, YZReductionRules};

/// The three summands of the module basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Channel {
    Unit,
    Y,
    Z,
}

impl Channel {
    pub const ALL: [Channel; 3] = [Channel::Unit, Channel::Y, Channel::Z];

    pub fn mirror(self) -> Channel {
        match self {
            Channel::Unit => Channel::Unit,
            Channel::Y => Channel::Z,
            Channel::Z => Channel::Y,
        }
    }
}

/// A polynomial in `x` over Q(t).
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct XPoly {
    coeffs: BTreeMap<u32, RatFunc>,
}

impl XPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(c: RatFunc, n: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(n, c);
        p
    }

    pub fn from_int_poly(p: &IntPoly) -> Self {
        let mut out = Self::zero();
        for (n, c) in p.terms() {
            out.add_term(n, RatFunc::from_int(c));
        }
        out
    }

    pub fn add_term(&mut self, n: u32, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(n) {
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

    pub fn coeff(&self, n: u32) -> RatFunc {
        self.coeffs.get(&n).cloned().unwrap_or_default()
    }

    /// `(degree, coefficient)` pairs in increasing degree.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &RatFunc)> {
        self.coeffs.iter().map(|(k, v)| (*k, v))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.coeffs {
            out.add_term(*k, v * c);
        }
        out
    }

    pub fn shift(&self, k: u32) -> Self {
        Self { coeffs: self.coeffs.iter().map(|(n, v)| (n + k, v.clone())).collect() }
    }

    pub fn mul_int_poly(&self, p: &IntPoly) -> Self {
        let mut out = Self::zero();
        for (j, c) in p.terms() {
            let c = RatFunc::from_int(c);
            for (k, v) in &self.coeffs {
                out.add_term(k + j, v * &c);
            }
        }
        out
    }

    pub fn invert_t(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|(n, v)| (*n, v.invert_t())).collect() }
    }

    /// Coefficients `[c_0, ..., c_d]` rendered as strings.
    pub fn coeff_strings(&self) -> Vec<String> {
        let Some(d) = self.degree() else {
            return Vec::new();
        };
        (0..=d).map(|n| self.coeff(n).to_string()).collect()
    }
}

impl fmt::Display for XPoly {
    /// `[c]*x^n` summands in decreasing degree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .rev()
            .map(|(n, c)| match n {
                0 => format!("[{c}]"),
                1 => format!("[{c}]*x"),
                _ => format!("[{c}]*x^{n}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &XPoly {
    type Output = XPoly;
    fn add(self, rhs: &XPoly) -> XPoly {
        let mut out = self.clone();
        for (k, v) in &rhs.coeffs {
            out.add_term(*k, v.clone());
        }
        out
    }
}

/// `unit(x) + y(x) Y + z(x) Z`.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct SkeinElement {
    unit: XPoly,
    y: XPoly,
    z: XPoly,
}

impl SkeinElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The empty skein.
    pub fn one() -> Self {
        Self::basis(Channel::Unit, 0)
    }

    /// `x^n B`
    pub fn basis(ch: Channel, n: u32) -> Self {
        Self::term(ch, n, RatFunc::one())
    }

    pub fn term(ch: Channel, n: u32, c: RatFunc) -> Self {
        let mut s = Self::zero();
        s.add_term(ch, n, c);
        s
    }

    pub fn from_parts(unit: XPoly, y: XPoly, z: XPoly) -> Self {
        Self { unit, y, z }
    }

    pub fn part(&self, ch: Channel) -> &XPoly {
        match ch {
            Channel::Unit => &self.unit,
            Channel::Y => &self.y,
            Channel::Z => &self.z,
        }
    }

    fn part_mut(&mut self, ch: Channel) -> &mut XPoly {
        match ch {
            Channel::Unit => &mut self.unit,
            Channel::Y => &mut self.y,
            Channel::Z => &mut self.z,
        }
    }

    pub fn add_term(&mut self, ch: Channel, n: u32, c: RatFunc) {
        self.part_mut(ch).add_term(n, c);
    }

    /// Adds `c * p(x) * B`.
    pub fn add_poly(&mut self, ch: Channel, p: &XPoly, c: &RatFunc) {
        for (n, v) in p.terms() {
            self.add_term(ch, n, v * c);
        }
    }

    /// Adds `c * other`.
    pub fn add_scaled(&mut self, other: &SkeinElement, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        for (ch, n, v) in other.terms() {
            self.add_term(ch, n, v * c);
        }
    }

    /// `(channel, degree, coefficient)` triples.
    pub fn terms(&self) -> impl Iterator<Item = (Channel, u32, &RatFunc)> {
        Channel::ALL
            .into_iter()
            .flat_map(move |ch| self.part(ch).terms().map(move |(n, c)| (ch, n, c)))
    }

    pub fn is_zero(&self) -> bool {
        self.unit.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        Self { unit: self.unit.scale(c), y: self.y.scale(c), z: self.z.scale(c) }
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: u32) -> Self {
        Self { unit: self.unit.shift(k), y: self.y.shift(k), z: self.z.shift(k) }
    }

    pub fn mul_int_poly(&self, p: &IntPoly) -> Self {
        Self {
            unit: self.unit.mul_int_poly(p),
            y: self.y.mul_int_poly(p),
            z: self.z.mul_int_poly(p),
        }
    }

    /// Mirror image: `Y <-> Z`, `t -> t^-1`, `x` fixed.
    pub fn mirror(&self) -> Self {
        Self { unit: self.unit.invert_t(), y: self.z.invert_t(), z: self.y.invert_t() }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "unit": self.unit.coeff_strings(),
            "Y": self.y.coeff_strings(),
            "Z": self.z.coeff_strings(),
        })
    }
}

impl fmt::Display for SkeinElement {
    /// `A(x) + B(x)*Y + C(x)*Z`, zero parts omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        if !self.unit.is_zero() {
            parts.push(format!("{}", self.unit));
        }
        if !self.y.is_zero() {
            parts.push(format!("({})*Y", self.y));
        }
        if !self.z.is_zero() {
            parts.push(format!("({})*Z", self.z));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for SkeinElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &SkeinElement {
    type Output = SkeinElement;
    fn add(self, rhs: &SkeinElement) -> SkeinElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &RatFunc::one());
        out
    }
}

impl Neg for &SkeinElement {
    type Output = SkeinElement;
    fn neg(self) -> SkeinElement {
        self.scale(&RatFunc::from_int(-1))
    }
}

impl Sub for &SkeinElement {
    type Output = SkeinElement;
    fn sub(self, rhs: &SkeinElement) -> SkeinElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &RatFunc::from_int(-1));
        out
    }
}

forward_owned!(Add, add, SkeinElement);
forward_owned!(Sub, sub, SkeinElement);
