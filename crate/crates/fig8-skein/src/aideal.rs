//! Noncommutative A-ideal generators: substitute the peripheral generators
//! into the quantum torus, clear denominators on the left, and compare
//! with the published polynomials.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::coeff::RatFunc;
use crate::expr::{parse_qplane, ExprError};
use crate::peripheral::GeneratorSet;
use crate::qplane::QPlaneElement;

/// The published generators as text. `xY`, `xZ`, `Y`, `Z` stand for the
/// images of the corresponding preimages. Three unbalanced parentheses
/// are closed; nothing else is changed.
pub mod printed {
    pub const G1: &str = "
        t^{-18}l^3m^{14}+t^{8}l^2m^{14}-t^{-18}l^3m^{12}+(t^4+t^{-4}-2t^8)l^2m^{12}
        -t^{18}lm^{12}+t^{-40}l^4m^{10}
        +(-t^{-22}-t^{-18}+t^{-14}-t^{-6})l^3m^{10}+(t^8-t^4+t^{-4}-1-t^{12})l^2m^{10}
        +(t^{30}+t^{18})lm^{10}+(-t^{-22}+t^{-6}-t^{-10})l^3m^8
        +(-t^8+1+t^{-4}+t^{12})l^2m^8
        +(t^6+2t^{22}-t^{14}-t^{6}+t^{18})lm^8+t^{-20}l^4m^6
        +(-t^{-2}+t^{-22}-t^{-14}+2t^{-6}+t^{-10}+t^{-4})l^3m^6
        +(1+t^{12}-t^{8}+t^{-4})l^2m^6
        +(t^{22}-t^{6}-t^{18}+t^{-4})lm^6
        +(t^2+t^{-10})l^3m^4+(t^{-2}+t^8-t^4+t^{-4}-t^{12})l^2m^4
        +(-t^6-t^{10}+t^{14}-t^{22})lm^4+t^{16}m^4-t^{-10}l^3m^2
        +(t^4-t^{-4}-2t^8)l^2m^2-t^{10}lm^2
        +t^8l^2+t^{10}l";

    pub const G2: &str = "
        t^{-8}l^2m^{14}+t^{18}lm^{14}-t^{-18}l^3m^{12}
        +(t^4+t^{-4}-2t^{-8})l^2m^{12}-t^{18}lm^{12}
        +(t^{-30}+t^{-18})l^3m^{10}+(t^4+t^{-8}-1-t^{-4}-t^{-12})l^2m^{10}
        +(t^{14}-t^{-22}-t^6-t^{18})lm^{10}+t^{40}m^{10}-t^{-36}l^4m^8
        +(-t^{-14}-t^{-26}+t^6+t^{-18}+2t^{-22})l^3m^8+(t^{-12}+t^4+1-t^{-8})l^2m^8
        +(-t^{22}-t^{10}+t^6)lm^8+(t^{-22}-t^{-18}-t^{-6})l^3m^6
        +(1+t^{4}+t^{-12}-t^{-8})l^2m^6
        +(-t^{24}+2t^6-t^2+t^{10})lm^6-t^{-20}m^6+t^{-16}l^4m^4
        +(-t^{-22}-t^{-6}-t^{-10}+t^{-14})l^3m^4+(t^4-t^{-12}+t^{-8}-t^{-4}-1)l^2m^4
        +(t^{-2}+t^{10})lm^4-t^{-10}l^3m^2+(t^{-4}-2t^{-8}-t^{4})l^2m^2-t^{10}lm^2+t^{-8}l^2+t^{-10}l^3";

    /// `(t^{-2}-t^{14}` and `-(t^2-t^{-2}` are closed.
    pub const G3: &str = "
        l^3m^7[-t^{-2}(l^3m+l^{-3}m^{-1})+(t^{16}-1)(t^4+1)t^{-2}(m^2+m^{-2}+t^{-4}-1)(xY)
        +(t^{16}-1)t^{-2}(m^2+m^{-2}+t^{-4}-t^{-8})(xZ)
        -t^{2}(l^2m^5+l^{2}m^{-5})
        +t^{2}(l^2m^3+l^{-2}m^{-3})
        +(t^{-2}+t^2-t^8)(l^2m+l^{-2}m^{-1})
        +(t^{-2}-t^{14})(l^2m^{-1}+l^{-1}m^2)
        -t^{-2}(l^2m^{-3}+l^{-2}m^3)
        -t^{10}(lm^5+l^{-1}m^{-5})+(t^{-6}-t^{6}-t^{14})(lm^3+l^{-1}m^{-3})
        +(t^{-6}-t^6-2t^{11}-2t^{15}+t^{-1})(lm+l^{-1}m^{-1})
        +(t^{-6}-t^{-2}-1-t^{6}-t^{14})(lm^{-1}-l^{-1}m)
        +(t^{-6}-t^{-2}-t^6)(lm^{-3}-l^{-1}m^3)
        -t^{10}(lm^{-5}+l^{-1}m^5)
        -(t^2-t^{-2})(m^3-m^{-3})
        +(t^{18}+t^{14}+2t^{10}-t^8+t^6-2t^{-6}-t^{-10})(m+m^{-1})]";

    /// `(t^5+t^{-1}+t^{-7}` is closed.
    pub const G4: &str = "
        l^3m^{10}[-t^3(l^3+l^{-3})+(-t^{-11}(lm^4+l^{-1}m^{-4})-t^{-11}(lm^{-2}+l^{-1}m^2)
        -(t^5+t^{-11}+t^{-7})(lm^2+l^{-1}m^{-2})
        -(t^5+t^{-11}+t^{-7})(l+l^{-1}))Y
        +(-t^{-11}(lm^4+l^{-1}m^{-4})-t^{-11}(lm^{-2}+l^{-1}m^2)
        -(t^5+t^{-11}+t)(lm^2+l^{-1}m^{-2})-(t^5+t^{-11}+t)(l+l^{-1}))Z
        -t^{-1}(l^2m^4+l^{-2}m^{-4})-t^{-5}(lm^{-4}+l^{-1}m^4)
        +t^{-1}(l^2m^2+l^{-2}m^{-2})
        +(t^{-1}+t^{-5})(l^2+l^{-2})-(t^{5}-t^{-7})(lm^4+l^{-1}m^{-4})
        -(t^5+t^{-1}+t^{-7})(lm^{-2}+l^{-1}m^2)-t^{-11}(lm^6+l^{-1}m^{-6})
        -t^{-11}(lm^{-4}+l^{-1}m^4)+(t^{-11}-t^{-1})(lm^2+l^{-1}m^{-2})
        +(t^{-11}-t)(l+l^{-1})-t^{-1}(m^6+m^{-6})
        +t^{-1}(m^4+m^{-4})+t^{-1}(m^2+m^{-2})+2t^3]";

    /// Left multipliers `l^a m^b` used in the published normalization.
    pub const MULTIPLIERS: [(i32, i32); 4] = [(2, 7), (2, 7), (3, 7), (3, 10)];
}

/// Four generators in the quantum plane and their left multipliers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AIdealGenerators {
    pub gens: [QPlaneElement; 4],
    pub multipliers: [(i32, i32); 4],
}

pub fn build_aideal(gs: &GeneratorSet) -> AIdealGenerators {
    let cleared = gs.generators().map(|(_, g)| {
        QPlaneElement::from_torus(g).clear_to_plane().expect("generators are nonzero")
    });
    AIdealGenerators {
        gens: cleared.clone().map(|c| c.element),
        multipliers: cleared.map(|c| c.multiplier),
    }
}

/// `(a, b, c)` with `y = c * l^a m^b * x`, `c` a signed power of `t`.
pub fn monomial_ratio(x: &QPlaneElement, y: &QPlaneElement) -> Option<(i32, i32, RatFunc)> {
    let (xa, xb) = x.min_exponents()?;
    let (ya, yb) = y.min_exponents()?;
    let (a, b) = (ya - xa, yb - xb);
    let shifted = &QPlaneElement::monomial(RatFunc::one(), a, b) * x;
    let (&key, c0) = shifted.terms().next()?;
    let c = &y.coeff(key.0, key.1) / c0;
    (c.is_monomial() && shifted.scale(&c) == *y).then_some((a, b, c))
}

/// The mirror pairing of the first two generators.
pub fn mirror_pairing(ag: &AIdealGenerators) -> Option<(i32, i32, RatFunc)> {
    monomial_ratio(&ag.gens[0].mirror(), &ag.gens[1])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DiffKind {
    Matched,
    CoefficientMismatch,
    SupportMismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiffEntry {
    pub l: i32,
    pub m: i32,
    pub kind: DiffKind,
    /// `None` where the monomial is absent.
    pub printed: Option<String>,
    pub computed: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GeneratorDiff {
    pub generator: String,
    pub multiplier: (i32, i32),
    pub printed_multiplier: (i32, i32),
    pub matched: usize,
    pub coefficient_mismatch: usize,
    pub support_mismatch: usize,
    pub match_percent: f64,
    pub entries: Vec<DiffEntry>,
}

impl GeneratorDiff {
    pub fn entry(&self, l: i32, m: i32) -> Option<&DiffEntry> {
        self.entries.iter().find(|e| e.l == l && e.m == m)
    }

    /// Everything except the matches.
    pub fn discrepancies(&self) -> impl Iterator<Item = &DiffEntry> {
        self.entries.iter().filter(|e| e.kind != DiffKind::Matched)
    }
}

impl fmt::Display for GeneratorDiff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} matched, {} coefficient mismatches, {} support mismatches ({:.1}% matched)",
            self.generator, self.matched, self.coefficient_mismatch, self.support_mismatch, self.match_percent
        )
    }
}

/// Monomial-level comparison of `computed` against `printed`.
pub fn diff_elements(printed: &QPlaneElement, computed: &QPlaneElement) -> Vec<DiffEntry> {
    let keys: BTreeSet<(i32, i32)> = printed.terms().chain(computed.terms()).map(|(&k, _)| k).collect();
    keys.into_iter()
        .map(|(l, m)| {
            let (p, c) = (printed.coeff(l, m), computed.coeff(l, m));
            let kind = if p == c {
                DiffKind::Matched
            } else if p.is_zero() || c.is_zero() {
                DiffKind::SupportMismatch
            } else {
                DiffKind::CoefficientMismatch
            };
            let show = |x: &RatFunc| (!x.is_zero()).then(|| x.to_string());
            DiffEntry { l, m, kind, printed: show(&p), computed: show(&c) }
        })
        .collect()
}

/// The published generators, with `xY`, `xZ`, `Y`, `Z` bound to the
/// substituted preimages of `gs`.
pub fn build_printed(gs: &GeneratorSet) -> Result<[QPlaneElement; 4], ExprError> {
    build_printed_from([printed::G1, printed::G2, printed::G3, printed::G4], gs)
}

pub fn build_printed_from(text: [&str; 4], gs: &GeneratorSet) -> Result<[QPlaneElement; 4], ExprError> {
    let bound = [
        ("xY", QPlaneElement::from_torus(&gs.xy_pre)),
        ("xZ", QPlaneElement::from_torus(&gs.xz_pre)),
        ("Y", QPlaneElement::from_torus(&gs.y_pre)),
        ("Z", QPlaneElement::from_torus(&gs.z_pre)),
    ];
    let resolve = |name: &str, k: i32| bound.iter().find(|(n, _)| *n == name && k == 1).map(|(_, v)| v.clone());
    let mut out: [QPlaneElement; 4] = Default::default();
    for (slot, src) in out.iter_mut().zip(text) {
        *slot = parse_qplane(src, &resolve)?;
    }
    Ok(out)
}

/// Compares each computed generator, normalized by the published left
/// multiplier, with its published form.
pub fn diff_printed(gs: &GeneratorSet, ag: &AIdealGenerators, printed: &[QPlaneElement; 4]) -> Vec<GeneratorDiff> {
    let names = ["g1", "g2", "g3", "g4"];
    (0..4)
        .map(|i| {
            let (a, b) = printed::MULTIPLIERS[i];
            let (_, g) = gs.generators()[i];
            let computed = &QPlaneElement::monomial(RatFunc::one(), a, b) * &QPlaneElement::from_torus(g);
            let entries = diff_elements(&printed[i], &computed);
            let count = |k: DiffKind| entries.iter().filter(|e| e.kind == k).count();
            let matched = count(DiffKind::Matched);
            GeneratorDiff {
                generator: names[i].to_string(),
                multiplier: ag.multipliers[i],
                printed_multiplier: (a, b),
                matched,
                coefficient_mismatch: count(DiffKind::CoefficientMismatch),
                support_mismatch: count(DiffKind::SupportMismatch),
                match_percent: if entries.is_empty() { 100.0 } else { 100.0 * matched as f64 / entries.len() as f64 },
                entries,
            }
        })
        .collect()
}

/// Every discrepancy as a flat JSON list.
pub fn erratum_json(diffs: &[GeneratorDiff]) -> serde_json::Value {
    let items: Vec<serde_json::Value> = diffs
        .iter()
        .flat_map(|d| {
            d.discrepancies().map(move |e| {
                serde_json::json!({
                    "generator": d.generator,
                    "monomial": format!("l^{} m^{}", e.l, e.m),
                    "kind": e.kind,
                    "printed": e.printed,
                    "computed": e.computed,
                })
            })
        })
        .collect();
    serde_json::json!({ "schema_version": crate::report::REPORT_SCHEMA_VERSION, "discrepancies": items })
}
