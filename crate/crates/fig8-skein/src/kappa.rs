//! Linear relations among colored brackets `kappa_n` coming from elements
//! of the peripheral ideal, and their exact solution for the figure-eight.
//!
//! Boundary rules: `kappa_0 = 1`, `kappa_-1 = 0`, `kappa_{-n-2} = -kappa_n`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::coeff::RatFunc;
use crate::peripheral::GeneratorSet;
use crate::torus::TorusElement;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KappaError {
    #[error("the initial 2x2 system is singular under the {0} convention")]
    Singular(Convention),
    #[error("zero leading coefficient for kappa_{index} (relation from {generator} at n = {n})")]
    ZeroLeading { generator: &'static str, n: u32, index: u32 },
    #[error("relation from {generator} at n = {n} is violated: residual {residual}")]
    Inconsistent { generator: &'static str, n: u32, residual: String },
    #[error("max n must be at least 2, got {0}")]
    TooSmall(u32),
}

/// How the `n = 0` relations from `g1`, `g2` are assembled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// Every coefficient from the general relation.
    General,
    /// `kappa_2` coefficient `sum_q (-1)^q c_{2,q}(t^{4q}+1)`, `kappa_1`
    /// coefficient `sum_q (-1)^q c_{1,q}(t^{3q}+t^q)`; the free term from the
    /// general relation.
    Specialized,
}

impl Convention {
    pub const ALL: [Convention; 2] = [Convention::General, Convention::Specialized];
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::General => "general",
            Convention::Specialized => "specialized",
        })
    }
}

/// `sum_k coeffs[k] kappa_k + constant = 0`, indices folded to `k >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LinearRelation {
    pub coeffs: BTreeMap<u32, RatFunc>,
    pub constant: RatFunc,
}

impl LinearRelation {
    /// Adds `c * kappa_index`, folding by the boundary rules.
    pub fn add(&mut self, index: i64, c: &RatFunc) {
        match index {
            -1 => {}
            i if i < -1 => self.add(-i - 2, &-c),
            0 => self.constant = &self.constant + c,
            i => {
                let e = self.coeffs.entry(i as u32).or_insert_with(RatFunc::zero);
                *e = &*e + c;
                if e.is_zero() {
                    self.coeffs.remove(&(i as u32));
                }
            }
        }
    }

    pub fn coeff(&self, k: u32) -> RatFunc {
        self.coeffs.get(&k).cloned().unwrap_or_default()
    }

    pub fn max_index(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn is_trivial(&self) -> bool {
        self.coeffs.is_empty() && self.constant.is_zero()
    }

    /// The left-hand side at the given values (`values[k] = kappa_k`).
    pub fn residual(&self, values: &[RatFunc]) -> RatFunc {
        self.coeffs.iter().fold(self.constant.clone(), |acc, (&k, c)| &acc + &(c * &values[k as usize]))
    }
}

impl fmt::Display for LinearRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.coeffs.iter().rev() {
            write!(f, "({c})*k{k} + ")?;
        }
        write!(f, "({}) = 0", self.constant)
    }
}

/// `(-1)^q t^{sq}`
fn signed_power(s: i32, q: i32) -> RatFunc {
    RatFunc::monomial(if q % 2 == 0 { 1 } else { -1 }, s * q)
}

fn add_pair_terms(rel: &mut LinearRelation, c: &RatFunc, p: i32, q: i32, n: i32) {
    let (pi, ni) = (p as i64, n as i64);
    let up = c * &RatFunc::t_pow((2 * n + p) * q);
    let down = c * &RatFunc::t_pow(-(2 * n - p) * q);
    let (plus, minus) = (signed_power(2, q), signed_power(-2, q));
    rel.add(pi + ni, &(&up * &plus));
    rel.add(pi + ni - 2, &-(&up * &minus));
    rel.add(pi - ni, &(&down * &plus));
    rel.add(pi - ni - 2, &-(&down * &minus));
}

/// The relation at level `n` from an element of the peripheral ideal. The
/// scalar part `c` counts as `(c/2)(0,0)_T`.
pub fn orthogonality_relation(g: &TorusElement, n: u32) -> LinearRelation {
    let mut rel = LinearRelation::default();
    let n = n as i32;
    let half = RatFunc::from_rational(num_rational::BigRational::new(1.into(), 2.into()));
    if !g.scalar_part().is_zero() {
        add_pair_terms(&mut rel, &(g.scalar_part() * &half), 0, 0, n);
    }
    for (pair, c) in g.pairs() {
        add_pair_terms(&mut rel, c, pair.p, pair.q, n);
    }
    rel
}

/// `sum_q (-1)^q c_{2,q}(t^{4q}+1)` and `sum_q (-1)^q c_{1,q}(t^{3q}+t^q)`.
pub fn specialized_coefficients(g: &TorusElement) -> (RatFunc, RatFunc) {
    let mut p2 = RatFunc::zero();
    let mut p1 = RatFunc::zero();
    for (pair, c) in g.pairs() {
        let sign = RatFunc::from_int(if pair.q % 2 == 0 { 1 } else { -1 });
        let c = &sign * c;
        match pair.p {
            2 => p2 = &p2 + &(&c * &RatFunc::laurent([(1, 4 * pair.q), (1, 0)])),
            1 => p1 = &p1 + &(&c * &RatFunc::laurent([(1, 3 * pair.q), (1, pair.q)])),
            _ => {}
        }
    }
    (p2, p1)
}

/// One row `P kappa_2 + Q kappa_1 = R`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InitialRow {
    #[serde(serialize_with = "ser_display")]
    pub p: RatFunc,
    #[serde(serialize_with = "ser_display")]
    pub q: RatFunc,
    #[serde(serialize_with = "ser_display")]
    pub r: RatFunc,
}

fn ser_display<T: fmt::Display, S: serde::Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// The `n = 0` system from `g1`, `g2` and its solution.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InitialSystem {
    pub convention: Convention,
    pub rows: [InitialRow; 2],
    #[serde(serialize_with = "ser_display")]
    pub determinant: RatFunc,
    #[serde(serialize_with = "ser_display")]
    pub kappa1: RatFunc,
    #[serde(serialize_with = "ser_display")]
    pub kappa2: RatFunc,
}

fn initial_row(g: &TorusElement, conv: Convention) -> InitialRow {
    let rel = orthogonality_relation(g, 0);
    let (p, q) = match conv {
        Convention::General => (rel.coeff(2), rel.coeff(1)),
        Convention::Specialized => specialized_coefficients(g),
    };
    InitialRow { p, q, r: -rel.constant }
}

pub fn initial_system(g1: &TorusElement, g2: &TorusElement, conv: Convention) -> Result<InitialSystem, KappaError> {
    let rows = [initial_row(g1, conv), initial_row(g2, conv)];
    let [a, b] = &rows;
    let det = &(&a.p * &b.q) - &(&b.p * &a.q);
    if det.is_zero() {
        return Err(KappaError::Singular(conv));
    }
    let kappa2 = &(&(&a.r * &b.q) - &(&b.r * &a.q)) / &det;
    let kappa1 = &(&(&a.p * &b.r) - &(&b.p * &a.r)) / &det;
    Ok(InitialSystem { convention: conv, rows, determinant: det, kappa1, kappa2 })
}

/// `kappa_0 .. kappa_N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KappaSeries {
    pub convention: Convention,
    pub values: Vec<RatFunc>,
}

impl KappaSeries {
    /// `kappa_n` for any integer `n`, applying the boundary rules.
    pub fn get(&self, n: i64) -> Option<RatFunc> {
        match n {
            -1 => Some(RatFunc::zero()),
            n if n < -1 => self.get(-n - 2).map(|v| -v),
            n => self.values.get(n as usize).cloned(),
        }
    }

    pub fn max_n(&self) -> u32 {
        self.values.len() as u32 - 1
    }

    pub fn all_laurent(&self) -> bool {
        self.values.iter().all(RatFunc::is_laurent)
    }

    pub fn all_symmetric(&self) -> bool {
        self.values.iter().all(|v| v.invert_t() == *v)
    }
}

/// `g3` scaled so that its `(3,1)_T` coefficient is `1`.
pub fn normalized_g3(gs: &GeneratorSet) -> TorusElement {
    let lead = gs.g3.coeff(3, 1);
    gs.g3.scale(&lead.recip())
}

/// Coefficient of `kappa_{n+3}` in the relation from the normalized `g3`.
pub fn leading_coefficient(gs: &GeneratorSet, n: u32) -> RatFunc {
    orthogonality_relation(&normalized_g3(gs), n).coeff(n + 3)
}

/// Solves for `kappa_0 .. kappa_max_n`, then checks every relation from
/// every generator for `0 <= n <= max_n`.
pub fn solve_kappa(gs: &GeneratorSet, max_n: u32, conv: Convention) -> Result<KappaSeries, KappaError> {
    if max_n < 2 {
        return Err(KappaError::TooSmall(max_n));
    }
    let init = initial_system(&gs.g1, &gs.g2, conv)?;
    // relations at n reach kappa_{n+3}
    let top = max_n + 3;
    let mut values = vec![RatFunc::one(), init.kappa1, init.kappa2];
    let g3 = normalized_g3(gs);
    for n in 0..=top - 3 {
        let rel = orthogonality_relation(&g3, n);
        let idx = n + 3;
        let lead = rel.coeff(idx);
        if lead.is_zero() {
            return Err(KappaError::ZeroLeading { generator: "g3", n, index: idx });
        }
        let mut rest = rel.clone();
        rest.coeffs.remove(&idx);
        values.push(-&rest.residual(&values) / lead);
    }
    for (name, g) in gs.generators() {
        for n in 0..=max_n {
            let r = orthogonality_relation(g, n).residual(&values);
            if !r.is_zero() {
                return Err(KappaError::Inconsistent { generator: name, n, residual: r.to_string() });
            }
        }
    }
    values.truncate(max_n as usize + 1);
    Ok(KappaSeries { convention: conv, values })
}
