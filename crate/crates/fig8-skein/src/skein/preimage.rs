use std::collections::BTreeSet;

use serde::Serialize;

use crate::coeff::RatFunc;
use crate::linalg::{self, Solution};
use crate::torus::{Pair, TorusElement};

use super::{engine, Channel, SkeinElement};

/// A finite window of the torus algebra: pairs `(p,q)_T` with
/// `p <= pmax` and `q` in `qmin..=qmax`, plus the unit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Window {
    pub pmax: i32,
    pub qmin: i32,
    pub qmax: i32,
}

impl Window {
    pub fn new(pmax: i32, qmin: i32, qmax: i32) -> Self {
        Self { pmax, qmin, qmax }
    }

    pub fn symmetric(pmax: i32, qbound: i32) -> Self {
        Self::new(pmax, -qbound, qbound)
    }

    fn contains_q(&self, q: i32) -> bool {
        (self.qmin..=self.qmax).contains(&q)
    }
}

/// A column of the preimage system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Column {
    Unit,
    Pair(Pair),
}

impl Column {
    pub fn element(self) -> TorusElement {
        match self {
            Column::Unit => TorusElement::one(),
            Column::Pair(p) => TorusElement::basis(p.p, p.q),
        }
    }
}

/// Column order: the unit, `(0,q)` by increasing `q`, then for each `p`
/// the pairs by increasing `|q|`, positive `q` first.
pub fn preimage_columns(w: Window) -> Vec<Column> {
    let mut cols = vec![Column::Unit];
    let qabs = w.qmin.abs().max(w.qmax.abs());
    for q in 1..=qabs {
        if w.contains_q(q) || w.contains_q(-q) {
            cols.push(Column::Pair(Pair { p: 0, q }));
        }
    }
    for p in 1..=w.pmax {
        for a in 0..=qabs {
            let qs: &[i32] = if a == 0 { &[0] } else { &[a, -a] };
            for &q in qs {
                if w.contains_q(q) {
                    cols.push(Column::Pair(Pair { p, q }));
                }
            }
        }
    }
    cols
}

/// Finds `v` in the window with `phi(v) = s`, together with the reduced
/// system. Free columns are set to zero.
pub fn solve_preimage_detailed(s: &SkeinElement, w: Window) -> Option<(TorusElement, Solution)> {
    solve_on_columns(s, &preimage_columns(w))
}

/// Like [`solve_preimage_detailed`] with an explicit column list.
pub fn solve_on_columns(s: &SkeinElement, cols: &[Column]) -> Option<(TorusElement, Solution)> {
    let images: Vec<SkeinElement> = cols.iter().map(|c| engine().phi(&c.element())).collect();
    let mut keys: BTreeSet<(Channel, u32)> = s.terms().map(|(ch, n, _)| (ch, n)).collect();
    for im in &images {
        keys.extend(im.terms().map(|(ch, n, _)| (ch, n)));
    }
    let rows: Vec<Vec<RatFunc>> = keys
        .iter()
        .map(|&(ch, n)| images.iter().map(|im| im.part(ch).coeff(n)).collect())
        .collect();
    let rhs: Vec<RatFunc> = keys.iter().map(|&(ch, n)| s.part(ch).coeff(n)).collect();
    let sol = linalg::solve(&rows, &rhs)?;
    let mut v = TorusElement::zero();
    for (c, val) in cols.iter().zip(&sol.values) {
        match c {
            Column::Unit => v.add_scalar(val.clone()),
            Column::Pair(p) => v.add_pair(*p, val.clone()),
        }
    }
    Some((v, sol))
}

/// A preimage of `s` supported in the window, if one exists.
pub fn solve_preimage(s: &SkeinElement, w: Window) -> Option<TorusElement> {
    solve_preimage_detailed(s, w).map(|(v, _)| v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chebyshev::{chebyshev, ChebyshevKind};
    use crate::skein::XPoly;

    #[test]
    fn column_order() {
        let cols = preimage_columns(Window::new(1, -2, 2));
        let pairs: Vec<String> = cols
            .iter()
            .map(|c| match c {
                Column::Unit => "1".to_string(),
                Column::Pair(p) => p.to_string(),
            })
            .collect();
        assert_eq!(pairs, ["1", "(0,1)", "(0,2)", "(1,0)", "(1,1)", "(1,-1)", "(1,2)", "(1,-2)"]);
    }

    #[test]
    fn meridian_preimage() {
        let s = SkeinElement::from_parts(
            XPoly::from_int_poly(&chebyshev(ChebyshevKind::T, 3)),
            XPoly::zero(),
            XPoly::zero(),
        );
        let v = solve_preimage(&s, Window::symmetric(1, 4)).unwrap();
        assert_eq!(v, TorusElement::basis(0, 3));
    }

    #[test]
    fn round_trip() {
        let u = TorusElement::from_terms([
            (RatFunc::t_pow(-5), 1, 3),
            (RatFunc::monomial(-1, 3), 1, -1),
            (RatFunc::t_pow(4), 0, 1),
        ]);
        let (v, sol) = solve_preimage_detailed(&engine().phi(&u), Window::symmetric(1, 6)).unwrap();
        assert!(sol.is_unique());
        assert_eq!(v, u);
    }
}
