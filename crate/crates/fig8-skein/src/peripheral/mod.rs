//! Generators of the peripheral ideal of the figure-eight knot, built two
//! ways: from the written formulas, and re-derived by exact linear algebra.

pub mod checks;
pub mod transcribed;

use serde::{Deserialize, Serialize};

use crate::coeff::RatFunc;
use crate::expr::{parse_expr, ExprError};
use crate::skein::{engine, solve_preimage, Channel, SkeinElement, Window};
use crate::torus::TorusElement;

/// Four generators and the preimages of `xY`, `xZ`, `Y`, `Z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    pub g1: TorusElement,
    pub g2: TorusElement,
    pub g3: TorusElement,
    pub g4: TorusElement,
    pub xy_pre: TorusElement,
    pub xz_pre: TorusElement,
    pub y_pre: TorusElement,
    pub z_pre: TorusElement,
}

impl GeneratorSet {
    pub fn generators(&self) -> [(&'static str, &TorusElement); 4] {
        [("g1", &self.g1), ("g2", &self.g2), ("g3", &self.g3), ("g4", &self.g4)]
    }

    pub fn preimages(&self) -> [(&'static str, &TorusElement, SkeinElement); 4] {
        [
            ("xY", &self.xy_pre, SkeinElement::basis(Channel::Y, 1)),
            ("xZ", &self.xz_pre, SkeinElement::basis(Channel::Z, 1)),
            ("Y", &self.y_pre, SkeinElement::basis(Channel::Y, 0)),
            ("Z", &self.z_pre, SkeinElement::basis(Channel::Z, 0)),
        ]
    }
}

/// The source text of every element; editable for fault-injection runs.
/// Missing fields fall back to the built-in text when deserializing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Transcription {
    pub g1: String,
    pub g2: String,
    pub g3: String,
    pub g4: String,
    pub xy: String,
    pub xz: String,
    pub y: String,
    pub z: String,
}

impl Default for Transcription {
    fn default() -> Self {
        use transcribed::*;
        Self {
            g1: G1.into(),
            g2: G2.into(),
            g3: G3.into(),
            g4: G4.into(),
            xy: XY.into(),
            xz: XZ.into(),
            y: Y.into(),
            z: Z.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BuildError {
    #[error("cannot parse {name}: {source}")]
    Parse { name: &'static str, source: ExprError },
    #[error("no preimage of {target} in the window {window:?}")]
    NoPreimage { target: String, window: Window },
}

fn parse_with(
    name: &'static str,
    src: &str,
    bound: &[(&str, &TorusElement)],
) -> Result<TorusElement, BuildError> {
    parse_expr(src, &|sym: &str, k: i32| {
        let (_, v) = bound.iter().find(|(n, _)| *n == sym)?;
        (k == 1).then(|| (*v).clone())
    })
    .map_err(|source| BuildError::Parse { name, source })
}

impl Transcription {
    /// Evaluates the text. Products with `xY`, `xZ`, `Y`, `Z` are products in
    /// the torus algebra with the corresponding preimages.
    pub fn build(&self) -> Result<GeneratorSet, BuildError> {
        let xy_pre = parse_with("xY", &self.xy, &[])?;
        let xz_pre = parse_with("xZ", &self.xz, &[])?;
        let xs = [("xY", &xy_pre), ("xZ", &xz_pre)];
        let y_pre = parse_with("Y", &self.y, &xs)?;
        let z_pre = parse_with("Z", &self.z, &xs)?;
        let all = [("xY", &xy_pre), ("xZ", &xz_pre), ("Y", &y_pre), ("Z", &z_pre)];
        Ok(GeneratorSet {
            g1: parse_with("g1", &self.g1, &all)?,
            g2: parse_with("g2", &self.g2, &all)?,
            g3: parse_with("g3", &self.g3, &all)?,
            g4: parse_with("g4", &self.g4, &all)?,
            xy_pre,
            xz_pre,
            y_pre,
            z_pre,
        })
    }
}

/// The generator set exactly as written.
pub fn build_transcribed() -> GeneratorSet {
    Transcription::default().build().expect("the built-in transcription parses")
}

/// The window used for every derivation.
pub const DERIVE_WINDOW: Window = Window { pmax: 2, qmin: -8, qmax: 8 };

/// `u - v` where `v` is the preimage in the window of the image of `u`.
pub fn reduce(u: &TorusElement, w: Window) -> Result<TorusElement, BuildError> {
    let s = engine().phi(u);
    let v = solve_preimage(&s, w).ok_or_else(|| BuildError::NoPreimage { target: s.to_string(), window: w })?;
    Ok(u - &v)
}

fn preimage_of(target: SkeinElement) -> Result<TorusElement, BuildError> {
    solve_preimage(&target, DERIVE_WINDOW)
        .ok_or_else(|| BuildError::NoPreimage { target: target.to_string(), window: DERIVE_WINDOW })
}

/// The leading combinations the generators are derived from.
pub fn leading_terms() -> [TorusElement; 4] {
    let tp = RatFunc::t_pow;
    let neg = |k| RatFunc::monomial(-1, k);
    [
        TorusElement::from_terms([(tp(-6), 2, 3), (neg(6), 2, -1)]),
        TorusElement::from_terms([(tp(6), 2, -3), (neg(-6), 2, 1)]),
        TorusElement::term(neg(1), 3, 1),
        TorusElement::term(neg(3), 3, 0),
    ]
}

/// Re-derives every element from first principles.
pub fn derive_generators() -> Result<GeneratorSet, BuildError> {
    let [u1, u2, u3, u4] = leading_terms();
    Ok(GeneratorSet {
        g1: reduce(&u1, DERIVE_WINDOW)?,
        g2: reduce(&u2, DERIVE_WINDOW)?,
        g3: reduce(&u3, DERIVE_WINDOW)?,
        g4: reduce(&u4, DERIVE_WINDOW)?,
        xy_pre: preimage_of(SkeinElement::basis(Channel::Y, 1))?,
        xz_pre: preimage_of(SkeinElement::basis(Channel::Z, 1))?,
        y_pre: preimage_of(SkeinElement::basis(Channel::Y, 0))?,
        z_pre: preimage_of(SkeinElement::basis(Channel::Z, 0))?,
    })
}
