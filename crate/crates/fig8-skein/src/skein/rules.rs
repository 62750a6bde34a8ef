use crate::coeff::RatFunc;

use super::{Channel, SkeinElement, XPoly};

/// Converts `unit(x) + a(x) y + b(x) z` into the `(1, Y, Z)` presentation,
/// using `y = t^-2 (Y - 1)` and `z = t^2 (Z - 1)`.
pub fn from_yz(unit: &XPoly, y: &XPoly, z: &XPoly) -> SkeinElement {
    let mut out = SkeinElement::zero();
    out.add_poly(Channel::Unit, unit, &RatFunc::one());
    out.add_poly(Channel::Y, y, &RatFunc::t_pow(-2));
    out.add_poly(Channel::Unit, y, &RatFunc::monomial(-1, -2));
    out.add_poly(Channel::Z, z, &RatFunc::t_pow(2));
    out.add_poly(Channel::Unit, z, &RatFunc::monomial(-1, 2));
    out
}

/// The rewrite rules for `y^2` and `z^2` in the module, kept as constants.
///
/// ```text
/// y^2 = -t^-2 x^2 y - t^-6 z - 2t^-4 x^2 + t^-4 + 1
/// z^2 = -t^2 x^2 z - t^6 y - 2t^4 x^2 + t^4 + 1
/// ```
pub struct YZReductionRules;

fn xp(terms: &[(u32, RatFunc)]) -> XPoly {
    let mut p = XPoly::zero();
    for (n, c) in terms {
        p.add_term(*n, c.clone());
    }
    p
}

impl YZReductionRules {
    pub fn y_squared() -> SkeinElement {
        let unit = xp(&[(2, RatFunc::monomial(-2, -4)), (0, RatFunc::laurent([(1, -4), (1, 0)]))]);
        let y = xp(&[(2, RatFunc::monomial(-1, -2))]);
        let z = xp(&[(0, RatFunc::monomial(-1, -6))]);
        from_yz(&unit, &y, &z)
    }

    pub fn z_squared() -> SkeinElement {
        let unit = xp(&[(2, RatFunc::monomial(-2, 4)), (0, RatFunc::laurent([(1, 4), (1, 0)]))]);
        let y = xp(&[(0, RatFunc::monomial(-1, 6))]);
        let z = xp(&[(2, RatFunc::monomial(-1, 2))]);
        from_yz(&unit, &y, &z)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::skein::engine;
    use crate::torus::TorusElement;

    fn l(terms: &[(i64, i32)]) -> RatFunc {
        RatFunc::laurent(terms.iter().copied())
    }

    #[test]
    fn reduction_rules_are_mirror_paired() {
        assert_eq!(YZReductionRules::y_squared().mirror(), YZReductionRules::z_squared());
        let mut expected = SkeinElement::zero();
        expected.add_term(Channel::Y, 2, RatFunc::monomial(-1, -4));
        expected.add_term(Channel::Z, 0, RatFunc::monomial(-1, -4));
        expected.add_term(Channel::Unit, 2, RatFunc::monomial(-1, -4));
        expected.add_term(Channel::Unit, 0, l(&[(2, -4), (1, 0)]));
        assert_eq!(YZReductionRules::y_squared(), expected);
    }

    // The y,z-form images of the two simplest curves agree with the engine.
    #[test]
    fn yz_images_of_first_curves() {
        let unit = xp(&[(2, l(&[(2, 2), (2, -2)])), (0, l(&[(-1, 2), (-1, -2)]))]);
        let y = xp(&[(2, l(&[(1, 4)])), (0, l(&[(1, 0), (-1, 4)]))]);
        let z = xp(&[(2, l(&[(1, -4)])), (0, l(&[(1, 0), (-1, -4)]))]);
        assert_eq!(engine().phi(&TorusElement::basis(1, 0)), from_yz(&unit, &y, &z));

        let unit = xp(&[(3, l(&[(2, 3)])), (1, l(&[(-3, 3), (2, -1)]))]);
        let y = xp(&[(3, l(&[(1, 5)])), (1, l(&[(-2, 5)]))]);
        let z = xp(&[(1, l(&[(1, 1), (1, -3)]))]);
        assert_eq!(engine().phi(&TorusElement::basis(1, 1)), from_yz(&unit, &y, &z));
    }
}
