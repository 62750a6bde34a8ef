//! Kauffman brackets of planar diagrams by brute-force state sums, and
//! blackboard cables. Knows nothing about skein modules.
//!
//! File format: one crossing per line, `X a b c d` with `a` the incoming
//! under-arc and `b c d` following counterclockwise. A line `O` adds a
//! crossingless circle. `#` starts a comment.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use crate::chebyshev::{chebyshev, ChebyshevKind};
use crate::coeff::LaurentPoly;

/// Largest diagram the state sum accepts.
pub const MAX_CROSSINGS: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiagramError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("arc {0} occurs {1} times (expected 2)")]
    ArcCount(u32, usize),
    #[error("{0} crossings exceeds the state-sum limit of {MAX_CROSSINGS}")]
    TooLarge(usize),
    #[error("not a knot diagram: {0}")]
    NotAKnot(String),
    #[error("diagram has writhe {0}; the colored bracket needs zero framing")]
    Framing(i64),
    #[error("color {0} is out of range; only colors up to 2 are enumerable")]
    Color(u32),
}

/// A planar diagram: crossings `[a, b, c, d]` plus free circles.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PdCode {
    pub crossings: Vec<[u32; 4]>,
    pub circles: u32,
}

impl FromStr for PdCode {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, DiagramError> {
        let mut d = PdCode::default();
        for (i, raw) in s.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: &str| DiagramError::Parse { line: i + 1, msg: msg.to_string() };
            let mut toks = line.split_whitespace();
            match toks.next() {
                Some("O") if toks.next().is_none() => d.circles += 1,
                Some("X") => {
                    let v: Vec<u32> = toks
                        .map(|t| t.parse::<u32>().map_err(|_| err(&format!("bad arc label {t:?}"))))
                        .collect::<Result<_, _>>()?;
                    let q: [u32; 4] = v.try_into().map_err(|_| err("a crossing needs four arc labels"))?;
                    d.crossings.push(q);
                }
                _ => return Err(err("expected `X a b c d` or `O`")),
            }
        }
        d.validate()?;
        Ok(d)
    }
}

impl fmt::Display for PdCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for [a, b, c, d] in &self.crossings {
            writeln!(f, "X {a} {b} {c} {d}")?;
        }
        for _ in 0..self.circles {
            writeln!(f, "O")?;
        }
        Ok(())
    }
}

impl PdCode {
    pub fn new(crossings: Vec<[u32; 4]>, circles: u32) -> Result<Self, DiagramError> {
        let d = Self { crossings, circles };
        d.validate()?;
        Ok(d)
    }

    /// `n` disjoint crossingless circles.
    pub fn unlink(n: u32) -> Self {
        Self { crossings: Vec::new(), circles: n }
    }

    pub fn len(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty() && self.circles == 0
    }

    fn arc_counts(&self) -> HashMap<u32, usize> {
        let mut m = HashMap::new();
        for q in &self.crossings {
            for &a in q {
                *m.entry(a).or_insert(0) += 1;
            }
        }
        m
    }

    pub fn validate(&self) -> Result<(), DiagramError> {
        let mut bad: Vec<(u32, usize)> = self.arc_counts().into_iter().filter(|&(_, n)| n != 2).collect();
        bad.sort_unstable();
        match bad.first() {
            Some(&(a, n)) => Err(DiagramError::ArcCount(a, n)),
            None => Ok(()),
        }
    }

    /// The arc that follows `a` along a knot numbered `1..=2c`.
    fn next_arc(&self, a: u32) -> u32 {
        if a as usize == 2 * self.crossings.len() {
            1
        } else {
            a + 1
        }
    }

    fn check_knot(&self) -> Result<(), DiagramError> {
        if self.circles > 0 && !self.crossings.is_empty() || self.circles > 1 {
            return Err(DiagramError::NotAKnot("more than one component".into()));
        }
        let n = 2 * self.crossings.len() as u32;
        let counts = self.arc_counts();
        if (1..=n).any(|a| counts.get(&a) != Some(&2)) {
            return Err(DiagramError::NotAKnot(format!("arcs are not labelled 1..{n}")));
        }
        for &[a, _, c, _] in &self.crossings {
            if c != self.next_arc(a) {
                return Err(DiagramError::NotAKnot(format!("under-strand {a} -> {c} is not consecutive")));
            }
        }
        Ok(())
    }

    /// `+1` if the over-strand runs from `d` to `b`, `-1` if from `b` to `d`.
    fn sign(&self, [_, b, _, d]: [u32; 4]) -> Result<i64, DiagramError> {
        if b == self.next_arc(d) {
            Ok(1)
        } else if d == self.next_arc(b) {
            Ok(-1)
        } else {
            Err(DiagramError::NotAKnot(format!("over-strand {b}/{d} is not consecutive")))
        }
    }

    /// Sum of crossing signs, orienting by the arc numbering.
    pub fn writhe(&self) -> Result<i64, DiagramError> {
        self.check_knot()?;
        self.crossings.iter().map(|&q| self.sign(q)).sum()
    }

    /// Every crossing switched.
    pub fn mirror(&self) -> Result<PdCode, DiagramError> {
        self.check_knot()?;
        let crossings = self
            .crossings
            .iter()
            .map(|&q| {
                let [a, b, c, d] = q;
                Ok(if self.sign(q)? > 0 { [d, a, b, c] } else { [b, c, d, a] })
            })
            .collect::<Result<_, DiagramError>>()?;
        Ok(PdCode { crossings, circles: self.circles })
    }

    /// The `n`-parallel blackboard cable of a knot diagram.
    pub fn cable(&self, n: u32) -> Result<PdCode, DiagramError> {
        self.check_knot()?;
        if n == 0 {
            return Ok(PdCode::default());
        }
        let n_us = n as usize;
        // copy i of arc a
        let ext = |a: u32, i: usize| (a - 1) * n + i as u32 + 1;
        let mut fresh = 2 * self.crossings.len() as u32 * n;
        let mut out = Vec::with_capacity(self.crossings.len() * n_us * n_us);
        for &q in &self.crossings {
            let [a, b, c, d] = q;
            // Under strand runs south (a) to north (c); copy i sits at x = i.
            // The over strand runs west (d) to east (b) when positive; copy j
            // sits on its right, so at y = -j going east and y = +j going west.
            let eastward = self.sign(q)? > 0;
            let rank = |j: usize| if eastward { n_us - 1 - j } else { j };
            let mut label = |edge: Option<u32>| {
                edge.unwrap_or_else(|| {
                    fresh += 1;
                    fresh
                })
            };
            // vertical[i][s]: segment s of under copy i, counted from the south
            let vertical: Vec<Vec<u32>> = (0..n_us)
                .map(|i| {
                    (0..=n_us)
                        .map(|s| {
                            label(match s {
                                0 => Some(ext(a, i)),
                                s if s == n_us => Some(ext(c, i)),
                                _ => None,
                            })
                        })
                        .collect()
                })
                .collect();
            // horizontal[j][r]: segment r of over copy j, counted from the west
            let horizontal: Vec<Vec<u32>> = (0..n_us)
                .map(|j| {
                    (0..=n_us)
                        .map(|r| {
                            label(match r {
                                0 => Some(ext(d, j)),
                                r if r == n_us => Some(ext(b, j)),
                                _ => None,
                            })
                        })
                        .collect()
                })
                .collect();
            for (i, col) in vertical.iter().enumerate() {
                for (j, row) in horizontal.iter().enumerate() {
                    let s = rank(j);
                    out.push([col[s], row[i + 1], col[s + 1], row[i]]);
                }
            }
        }
        Ok(PdCode { crossings: out, circles: self.circles * n })
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        Self((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    /// Returns `true` if two classes merged.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra] = rb;
        }
        ra != rb
    }
}

/// The Kauffman bracket: A-smoothings (weight `t`) join `a-b` and `c-d`,
/// B-smoothings (weight `t^-1`) join `a-d` and `b-c`; each loop is
/// `-t^2 - t^-2`, and the empty diagram is `1`.
pub fn bracket(d: &PdCode) -> Result<LaurentPoly, DiagramError> {
    d.validate()?;
    let c = d.crossings.len();
    if c > MAX_CROSSINGS {
        return Err(DiagramError::TooLarge(c));
    }
    let mut index: HashMap<u32, usize> = HashMap::new();
    let quads: Vec<[usize; 4]> = d
        .crossings
        .iter()
        .map(|q| {
            q.map(|a| {
                let next = index.len();
                *index.entry(a).or_insert(next)
            })
        })
        .collect();
    let arcs = index.len();
    // counts[(#A, #loops)]
    let counts: HashMap<(usize, usize), u64> = (0u64..1 << c)
        .into_par_iter()
        .fold(HashMap::new, |mut acc, state| {
            let mut uf = UnionFind::new(arcs);
            let mut loops = arcs;
            for (k, [a, b, cc, dd]) in quads.iter().enumerate() {
                let (p1, p2) = if state >> k & 1 == 1 { ((*a, *b), (*cc, *dd)) } else { ((*a, *dd), (*b, *cc)) };
                loops -= uf.union(p1.0, p1.1) as usize;
                loops -= uf.union(p2.0, p2.1) as usize;
            }
            *acc.entry((state.count_ones() as usize, loops)).or_insert(0) += 1;
            acc
        })
        .reduce(HashMap::new, |mut x, y| {
            for (k, v) in y {
                *x.entry(k).or_insert(0) += v;
            }
            x
        });
    let circle = LaurentPoly::from_terms([(-1, 2), (-1, -2)]);
    let max_loops = counts.keys().map(|&(_, l)| l).max().unwrap_or(0) + d.circles as usize;
    let powers: Vec<LaurentPoly> =
        std::iter::successors(Some(LaurentPoly::one()), |p| Some(p * &circle)).take(max_loops + 1).collect();
    let mut keys: Vec<_> = counts.into_iter().collect();
    keys.sort_unstable();
    let mut total = LaurentPoly::zero();
    for ((na, loops), n) in keys {
        let w = na as i32 - (c - na) as i32;
        let term = powers[loops + d.circles as usize].shift(w).scale(&BigRational::from_integer(BigInt::from(n)));
        total = &total + &term;
    }
    Ok(total)
}

/// The `n`-colored bracket `sum_j s_j <cable(d, j)>` where `S_n = sum_j s_j x^j`.
pub fn oracle_kappa(d: &PdCode, n: u32) -> Result<LaurentPoly, DiagramError> {
    if n > 2 {
        return Err(DiagramError::Color(n));
    }
    let w = d.writhe()?;
    if w != 0 {
        return Err(DiagramError::Framing(w));
    }
    let mut total = LaurentPoly::zero();
    for (j, s) in chebyshev(ChebyshevKind::S, n as i32).terms() {
        let b = bracket(&d.cable(j)?)?;
        total = &total + &b.scale(&BigRational::from_integer(BigInt::from(s)));
    }
    Ok(total)
}

/// Diagrams shipped with the crate.
pub mod builtin {
    pub const FIG8: &str = include_str!("../data/fig8.pd");
    pub const FIG8_ALT: &str = include_str!("../data/fig8_alt.pd");
    pub const TREFOIL: &str = include_str!("../data/trefoil.pd");
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i32)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn circles() {
        assert_eq!(bracket(&PdCode::default()).unwrap(), LaurentPoly::one());
        assert_eq!(bracket(&PdCode::unlink(1)).unwrap(), lp(&[(-1, 2), (-1, -2)]));
        assert_eq!(bracket(&PdCode::unlink(2)).unwrap(), lp(&[(1, 4), (2, 0), (1, -4)]));
    }

    #[test]
    fn positive_trefoil() {
        let d: PdCode = builtin::TREFOIL.parse().unwrap();
        assert_eq!(d.writhe().unwrap(), 3);
        // the loop factor times -t^5 - t^-3 + t^-7
        assert_eq!(bracket(&d).unwrap(), lp(&[(1, 7), (1, 3), (1, -1), (-1, -9)]));
        let m = d.mirror().unwrap();
        assert_eq!(m.writhe().unwrap(), -3);
        assert_eq!(bracket(&m).unwrap(), bracket(&d).unwrap().invert_t());
    }

    #[test]
    fn figure_eight() {
        let d: PdCode = builtin::FIG8.parse().unwrap();
        assert_eq!(d.writhe().unwrap(), 0);
        let b = bracket(&d).unwrap();
        // the loop factor times t^8 - t^4 + 1 - t^-4 + t^-8
        assert_eq!(b, lp(&[(-1, 10), (-1, -10)]));
        assert_eq!(bracket(&d.cable(1).unwrap()).unwrap(), b);
        let alt: PdCode = builtin::FIG8_ALT.parse().unwrap();
        assert_ne!(alt, d);
        assert_eq!(alt.writhe().unwrap(), 0);
        for n in 0..=2 {
            assert_eq!(oracle_kappa(&d, n).unwrap(), oracle_kappa(&alt, n).unwrap());
        }
    }

    #[test]
    fn cabling() {
        let d: PdCode = builtin::TREFOIL.parse().unwrap();
        let c = d.cable(2).unwrap();
        assert_eq!(c.len(), 12);
        c.validate().unwrap();
        let u = PdCode::unlink(1);
        assert_eq!(bracket(&u.cable(2).unwrap()).unwrap(), bracket(&PdCode::unlink(2)).unwrap());
    }

    #[test]
    fn extra_circle() {
        let mut d: PdCode = builtin::FIG8.parse().unwrap();
        let b = bracket(&d).unwrap();
        d.circles += 1;
        assert_eq!(bracket(&d).unwrap(), &b * &lp(&[(-1, 2), (-1, -2)]));
    }

    #[test]
    fn refusals() {
        let d: PdCode = builtin::TREFOIL.parse().unwrap();
        assert_eq!(oracle_kappa(&d, 1), Err(DiagramError::Framing(3)));
        let f: PdCode = builtin::FIG8.parse().unwrap();
        assert_eq!(oracle_kappa(&f, 3), Err(DiagramError::Color(3)));
        assert!("X 1 2 3".parse::<PdCode>().is_err());
        assert!("X 1 2 3 4".parse::<PdCode>().is_err());
    }
}
