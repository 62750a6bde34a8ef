use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::chebyshev::{chebyshev, ChebyshevKind};
use crate::coeff::RatFunc;
use crate::torus::{canonical_pair, Canonical, Pair, TorusElement};

use super::{Channel, SkeinElement, XPoly};

type Key = (Pair, u32, Channel);

/// Computes the action of the torus algebra on the skein module.
///
/// Results on basis skeins are cached; the cache is a pure function cache,
/// so concurrent callers always observe identical values.
#[derive(Default)]
pub struct ActionEngine {
    cache: RwLock<HashMap<Key, Arc<SkeinElement>>>,
}

/// The process-wide engine.
pub fn engine() -> &'static ActionEngine {
    static ENGINE: OnceLock<ActionEngine> = OnceLock::new();
    ENGINE.get_or_init(ActionEngine::new)
}

fn t_poly(n: i32) -> XPoly {
    XPoly::from_int_poly(&chebyshev(ChebyshevKind::T, n))
}

fn s_poly(n: i32) -> XPoly {
    XPoly::from_int_poly(&chebyshev(ChebyshevKind::S, n))
}

/// `t^2 S_i - t^-2 S_j`
fn s_comb(i: i32, j: i32) -> XPoly {
    &s_poly(i).scale(&RatFunc::t_pow(2)) + &s_poly(j).scale(&RatFunc::monomial(-1, -2))
}

impl ActionEngine {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of cached basis actions.
    pub fn cache_len(&self) -> usize {
        self.cache.read().expect("cache poisoned").len()
    }

    /// `u . s`
    pub fn act(&self, u: &TorusElement, s: &SkeinElement) -> SkeinElement {
        // accumulate over a common denominator so the inner loop stays in
        // Laurent arithmetic
        let du = RatFunc::common_denominator(u.pairs().map(|(_, c)| c).chain([u.scalar_part()]));
        let ds = RatFunc::common_denominator(s.terms().map(|(_, _, v)| v));
        let sn: Vec<_> = s.terms().map(|(ch, n, v)| (ch, n, v.numer_over(&ds))).collect();
        let mut out = SkeinElement::zero();
        let su = u.scalar_part().numer_over(&du);
        if !su.is_zero() {
            for (ch, n, v) in &sn {
                out.add_term(*ch, *n, RatFunc::from_laurent(&su * v));
            }
        }
        for (pair, c) in u.pairs() {
            let cu = c.numer_over(&du);
            for (ch, n, v) in &sn {
                out.add_scaled(&self.act_basis(*pair, *n, *ch), &RatFunc::from_laurent(&cu * v));
            }
        }
        let d = &du * &ds;
        if d.is_one() {
            return out;
        }
        let mut res = SkeinElement::zero();
        for (ch, n, v) in out.terms() {
            res.add_term(ch, n, RatFunc::new(v.numer().clone(), d.clone()));
        }
        res
    }

    /// The image of `u` in the skein module, `u . 1`.
    pub fn phi(&self, u: &TorusElement) -> SkeinElement {
        self.act(u, &SkeinElement::one())
    }

    /// `(p,q)_T . s` for arbitrary integers `p`, `q`.
    pub fn act_pair(&self, p: i32, q: i32, s: &SkeinElement) -> SkeinElement {
        self.act(&TorusElement::basis(p, q), s)
    }

    fn act_pq_basis(&self, p: i32, q: i32, n: u32, ch: Channel) -> SkeinElement {
        match canonical_pair(p, q) {
            Canonical::TwiceUnit => SkeinElement::term(ch, n, RatFunc::from_int(2)),
            Canonical::Pair(pair) => (*self.act_basis(pair, n, ch)).clone(),
        }
    }

    /// `(p,q)_T . x^n B` for a canonical pair.
    pub fn act_basis(&self, pair: Pair, n: u32, ch: Channel) -> Arc<SkeinElement> {
        let key = (pair, n, ch);
        if let Some(v) = self.cache.read().expect("cache poisoned").get(&key) {
            return Arc::clone(v);
        }
        let value = Arc::new(self.compute(pair, n, ch));
        let mut cache = self.cache.write().expect("cache poisoned");
        Arc::clone(cache.entry(key).or_insert(value))
    }

    fn compute(&self, pair: Pair, n: u32, ch: Channel) -> SkeinElement {
        let Pair { p, q } = pair;
        match p {
            0 => SkeinElement::basis(ch, n).mul_int_poly(&chebyshev(ChebyshevKind::T, q)),
            1 if n > 0 => {
                // (1,q) * (0,1) = t (1,q+1) + t^-1 (1,q-1)
                let mut out = SkeinElement::zero();
                out.add_scaled(&self.act_basis(Pair { p: 1, q: q + 1 }, n - 1, ch), &RatFunc::t_pow(1));
                out.add_scaled(&self.act_basis(Pair { p: 1, q: q - 1 }, n - 1, ch), &RatFunc::t_pow(-1));
                out
            }
            1 => match ch {
                Channel::Unit => phi_1q(q),
                Channel::Y => {
                    let mut out = self.act_basis(Pair { p: 1, q: q + 2 }, 0, Channel::Unit).scale(&RatFunc::monomial(-1, 2));
                    let c = RatFunc::t_pow(q + 2);
                    out.add_poly(Channel::Y, &t_poly(q + 2), &c);
                    out.add_poly(Channel::Unit, &t_poly(q), &c);
                    out
                }
                Channel::Z => {
                    let mut out = self.act_basis(Pair { p: 1, q: q - 2 }, 0, Channel::Unit).scale(&RatFunc::monomial(-1, -2));
                    let c = RatFunc::t_pow(q - 2);
                    out.add_poly(Channel::Z, &t_poly(q - 2), &c);
                    out.add_poly(Channel::Unit, &t_poly(q), &c);
                    out
                }
            },
            _ => {
                // (1,0) * (p-1,q) = t^q (p,q) + t^-q (p-2,q)
                let inner = self.act_basis(Pair { p: p - 1, q }, n, ch);
                let mut out = self.act(&TorusElement::basis(1, 0), &inner).scale(&RatFunc::t_pow(-q));
                out.add_scaled(&self.act_pq_basis(p - 2, q, n, ch), &RatFunc::monomial(-1, -2 * q));
                out
            }
        }
    }
}

/// The closed form for the image of `(1,q)_T`.
fn phi_1q(q: i32) -> SkeinElement {
    let c = RatFunc::t_pow(q);
    let mut out = SkeinElement::zero();
    out.add_poly(Channel::Y, &s_comb(q + 2, q - 2), &c);
    out.add_poly(Channel::Z, &s_comb(q, q - 4), &c);
    out.add_poly(Channel::Unit, &s_comb(q + 2, q - 4), &c);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tp(k: i32) -> RatFunc {
        RatFunc::t_pow(k)
    }

    fn x_poly(coeffs: &[i64]) -> XPoly {
        XPoly::from_int_poly(&crate::chebyshev::IntPoly::new(coeffs.to_vec()))
    }

    #[test]
    fn meridian_multiplies_by_chebyshev() {
        let e = ActionEngine::new();
        for q in 1..6 {
            assert_eq!(
                e.phi(&TorusElement::basis(0, q)),
                SkeinElement::from_parts(t_poly(q), XPoly::zero(), XPoly::zero())
            );
        }
        let s = SkeinElement::basis(Channel::Z, 2);
        assert_eq!(e.act_pair(0, 1, &s), SkeinElement::basis(Channel::Z, 3));
    }

    #[test]
    fn image_of_longitude() {
        let e = ActionEngine::new();
        let s2 = x_poly(&[-1, 0, 1]);
        let mut expected = SkeinElement::zero();
        expected.add_poly(Channel::Y, &s2, &tp(2));
        expected.add_term(Channel::Y, 0, tp(-2));
        expected.add_term(Channel::Z, 0, tp(2));
        expected.add_poly(Channel::Z, &s2, &tp(-2));
        expected.add_poly(Channel::Unit, &s2, &RatFunc::laurent([(1, 2), (1, -2)]));
        assert_eq!(e.phi(&TorusElement::basis(1, 0)), expected);
    }

    #[test]
    fn longitude_on_y() {
        let e = ActionEngine::new();
        let lhs = e.act_pair(1, 0, &SkeinElement::basis(Channel::Y, 0));
        let mut rhs = e.phi(&TorusElement::basis(1, 2)).scale(&RatFunc::monomial(-1, 2));
        rhs.add_poly(Channel::Y, &x_poly(&[-2, 0, 1]), &tp(2));
        rhs.add_term(Channel::Unit, 0, RatFunc::monomial(2, 2));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn closed_form_matches_recursion() {
        let e = ActionEngine::new();
        for q in -8..=8 {
            let lhs = e.phi(&TorusElement::basis(1, q + 1));
            let mut rhs = e.phi(&TorusElement::basis(1, q)).shift(1).scale(&tp(1));
            rhs.add_scaled(&e.phi(&TorusElement::basis(1, q - 1)), &RatFunc::monomial(-1, 2));
            assert_eq!(lhs, rhs, "q = {q}");
        }
    }

    #[test]
    fn fresh_and_shared_engines_agree() {
        let u = TorusElement::from_terms([(tp(-6), 2, 3), (RatFunc::monomial(-1, 6), 2, -1), (tp(1), 3, 1)]);
        let a = ActionEngine::new().phi(&u);
        let b = engine().phi(&u);
        assert_eq!(a, b);
    }
}
