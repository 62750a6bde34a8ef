//! Chebyshev polynomials `T_n` (first kind, `T_0 = 2`) and `S_n` (second
//! kind, `S_0 = 1`), defined for every integer index.

use std::fmt;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ChebyshevKind {
    T,
    S,
}

/// Integer-coefficient polynomial in one variable, ascending coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize)]
pub struct IntPoly(Vec<i64>);

impl IntPoly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self(coeffs)
    }

    pub fn zero() -> Self {
        Self(Vec::new())
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    /// Nonzero `(power, coefficient)` pairs.
    pub fn terms(&self) -> impl Iterator<Item = (u32, i64)> + '_ {
        self.0.iter().enumerate().filter(|(_, c)| **c != 0).map(|(i, c)| (i as u32, *c))
    }

    fn shift_sub(&self, prev: &IntPoly) -> IntPoly {
        // x * self - prev
        let len = (self.0.len() + 1).max(prev.0.len());
        let mut out = vec![0i64; len];
        for (i, c) in self.0.iter().enumerate() {
            out[i + 1] += c;
        }
        for (i, c) in prev.0.iter().enumerate() {
            out[i] -= c;
        }
        IntPoly::new(out)
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let len = self.0.len().max(other.0.len());
        let mut out = vec![0i64; len];
        for (i, c) in self.0.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.0.iter().enumerate() {
            out[i] -= c;
        }
        IntPoly::new(out)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![0i64; self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.0.iter().enumerate().rev() {
            if *c == 0 {
                continue;
            }
            let a = c.abs();
            match (first, *c < 0) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            match (i, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "{a}*x")?,
                (_, 1) => write!(f, "x^{i}")?,
                _ => write!(f, "{a}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `T_n` or `S_n` for any integer `n`.
///
/// Negative indices: `T_{-n} = T_n` and `S_{-n} = -S_{n-2}` (so `S_{-1} = 0`).
pub fn chebyshev(kind: ChebyshevKind, n: i32) -> IntPoly {
    match kind {
        ChebyshevKind::T if n < 0 => return chebyshev(kind, -n),
        ChebyshevKind::S if n == -1 => return IntPoly::zero(),
        ChebyshevKind::S if n < 0 => return chebyshev(kind, -n - 2).neg(),
        _ => {}
    }
    let (mut prev, mut cur) = match kind {
        ChebyshevKind::T => (IntPoly::new(vec![2]), IntPoly::new(vec![0, 1])),
        ChebyshevKind::S => (IntPoly::new(vec![1]), IntPoly::new(vec![0, 1])),
    };
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = cur.shift_sub(&prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// A cached run of Chebyshev polynomials over a symmetric index window.
#[derive(Debug, Clone)]
pub struct ChebyshevTable {
    kind: ChebyshevKind,
    bound: i32,
    entries: Vec<IntPoly>,
}

impl ChebyshevTable {
    /// Entries for `-bound ..= bound`.
    pub fn new(kind: ChebyshevKind, bound: i32) -> Self {
        let entries = (-bound..=bound).map(|n| chebyshev(kind, n)).collect();
        Self { kind, bound, entries }
    }

    pub fn kind(&self) -> ChebyshevKind {
        self.kind
    }

    pub fn get(&self, n: i32) -> IntPoly {
        if n.abs() <= self.bound {
            self.entries[(n + self.bound) as usize].clone()
        } else {
            chebyshev(self.kind, n)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ChebyshevKind::{S, T};

    #[test]
    fn low_degree_values() {
        assert_eq!(chebyshev(T, 2), IntPoly::new(vec![-2, 0, 1]));
        assert_eq!(chebyshev(S, 2), IntPoly::new(vec![-1, 0, 1]));
        assert_eq!(chebyshev(T, 0), IntPoly::new(vec![2]));
        assert_eq!(chebyshev(S, 5).to_string(), "x^5 - 4*x^3 + 3*x");
    }

    #[test]
    fn negative_indices() {
        assert!(chebyshev(S, -1).is_zero());
        assert_eq!(chebyshev(S, -4), IntPoly::new(vec![1, 0, -1]));
        for n in 0..10 {
            assert_eq!(chebyshev(T, -n), chebyshev(T, n));
        }
    }

    #[test]
    fn s_difference_is_t() {
        for n in -10..=10 {
            assert_eq!(chebyshev(S, n).sub(&chebyshev(S, n - 2)), chebyshev(T, n), "n = {n}");
        }
    }

    #[test]
    fn recurrence_holds_across_zero() {
        let x = IntPoly::new(vec![0, 1]);
        for kind in [T, S] {
            for n in -8..=8 {
                let lhs = chebyshev(kind, n + 1);
                let rhs = x.mul(&chebyshev(kind, n)).sub(&chebyshev(kind, n - 1));
                assert_eq!(lhs, rhs, "{kind:?} n = {n}");
            }
        }
    }

    #[test]
    fn table_matches_direct() {
        let tab = ChebyshevTable::new(S, 6);
        for n in -9..=9 {
            assert_eq!(tab.get(n), chebyshev(S, n));
        }
        assert_eq!(chebyshev(S, 3).mul(&chebyshev(S, 0)), chebyshev(S, 3));
    }
}
