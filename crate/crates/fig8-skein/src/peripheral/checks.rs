//! Exact checks of the skein-module identities behind the generators.

use crate::chebyshev::{chebyshev, ChebyshevKind};
use crate::coeff::RatFunc;
use crate::expr::parse_plain;
use crate::report::Check;
use crate::skein::{engine, Channel, SkeinElement, XPoly};
use crate::torus::TorusElement;

use super::{GeneratorSet, Transcription};

fn s_poly(n: i32) -> XPoly {
    XPoly::from_int_poly(&chebyshev(ChebyshevKind::S, n))
}

fn t_poly(n: i32) -> XPoly {
    XPoly::from_int_poly(&chebyshev(ChebyshevKind::T, n))
}

fn torus(src: &str) -> TorusElement {
    parse_plain(src).expect("built-in formula parses")
}

fn rf(src: &str) -> RatFunc {
    parse_plain(src).expect("built-in formula parses")
}

fn equal(name: impl Into<String>, reference: impl Into<String>, lhs: &SkeinElement, rhs: &SkeinElement) -> Check {
    let d = lhs - rhs;
    Check::zero(name, reference, d.is_zero(), &d)
}

/// `phi(g) = 0` for each generator.
pub fn verify_membership(gs: &GeneratorSet) -> Vec<Check> {
    gs.generators()
        .into_iter()
        .map(|(name, g)| {
            let img = engine().phi(g);
            Check::zero(format!("membership {name}"), format!("{name} maps to zero in the skein module"), img.is_zero(), &img)
        })
        .collect()
}

/// `phi` of each preimage equals its target.
pub fn verify_preimages(gs: &GeneratorSet) -> Vec<Check> {
    gs.preimages()
        .into_iter()
        .map(|(name, pre, target)| {
            equal(format!("preimage {name}"), format!("the preimage of {name} maps to {name}"), &engine().phi(pre), &target)
        })
        .collect()
}

/// `t^-5 (1,3) - t^3 (1,-1) + t^4 (0,1) - (0,5)` and its mirror.
pub fn check_quintic_images() -> Vec<Check> {
    let mut poly = s_poly(5);
    poly = &poly + &s_poly(1).scale(&rf("-(1+t^4+t^{-4})"));
    let lhs_y = torus("t^{-5}(1,3) - t^3(1,-1) + t^4(0,1) - (0,5)");
    let lhs_z = torus("t^5(1,-3) - t^{-3}(1,1) + t^{-4}(0,1) - (0,5)");
    let mut ry = SkeinElement::zero();
    ry.add_poly(Channel::Y, &poly, &RatFunc::one());
    let mut rz = SkeinElement::zero();
    rz.add_poly(Channel::Z, &poly, &RatFunc::one());
    vec![
        equal(
            "quintic image Y",
            "t^-5(1,3) - t^3(1,-1) + t^4(0,1) - (0,5) maps to [S_5 - (1+t^4+t^-4)S_1] Y",
            &engine().phi(&lhs_y),
            &ry,
        ),
        equal(
            "quintic image Z",
            "t^5(1,-3) - t^-3(1,1) + t^-4(0,1) - (0,5) maps to [S_5 - (1+t^4+t^-4)S_1] Z",
            &engine().phi(&lhs_z),
            &rz,
        ),
    ]
}

/// The image of `t^-2q (2,q)` expressed through meridian curves acting on `Y`, `Z`.
pub fn check_two_q_via_meridians(q: i32) -> Check {
    let tp = RatFunc::t_pow;
    let a = TorusElement::from_terms([(tp(8), 0, q + 4), (rf("t^4+1"), 0, q + 2), (RatFunc::one(), 0, q)]);
    let b = TorusElement::from_terms([(tp(-8), 0, q - 4), (rf("t^{-4}+1"), 0, q - 2), (RatFunc::one(), 0, q)]);
    let c = TorusElement::from_terms([
        (RatFunc::monomial(-1, 6 - q), 1, q + 4),
        (RatFunc::monomial(-1, -6 - q), 1, q - 4),
        (rf("t^8+1"), 0, q + 2),
        (rf("t^4+t^{-4}+1"), 0, q),
        (rf("t^{-8}+1"), 0, q - 2),
    ]);
    let rhs = &(&engine().act(&a, &SkeinElement::basis(Channel::Y, 0))
        + &engine().act(&b, &SkeinElement::basis(Channel::Z, 0)))
        + &engine().phi(&c);
    let lhs = engine().phi(&TorusElement::term(tp(-2 * q), 2, q));
    equal(
        format!("(2,q) through meridians, q = {q}"),
        "t^-2q (2,q) = [t^8(0,q+4) + (t^4+1)(0,q+2) + (0,q)]Y + mirror + (1,q+-4) and (0,*) terms",
        &lhs,
        &rhs,
    )
}

/// The closed form of `t^-2q (2,q)` in Chebyshev polynomials.
pub fn check_two_q_closed_form(q: i32) -> Check {
    let c = |k: i32| RatFunc::t_pow(k);
    let neg = |k: i32| RatFunc::monomial(-1, k);
    let mut rhs = SkeinElement::zero();
    for (ch, mid) in [(Channel::Y, -4), (Channel::Z, 4)] {
        rhs.add_poly(ch, &s_poly(q - 4), &c(-8));
        rhs.add_poly(ch, &s_poly(q), &neg(mid));
        rhs.add_poly(ch, &s_poly(q - 2), &c(mid));
        rhs.add_poly(ch, &s_poly(q + 2), &neg(8));
    }
    let ones = TorusElement::from_terms([
        (neg(6), 1, q + 4),
        (neg(-6), 1, q - 4),
        (c(4), 1, q + 2),
        (c(-4), 1, q - 2),
        (rf("t^2+t^{-2}"), 1, q),
    ]);
    rhs.add_scaled(&engine().phi(&ones), &c(-q));
    for (poly, coeff) in [
        (t_poly(q + 4), neg(8)),
        (t_poly(q + 2), neg(4)),
        (s_poly(q), neg(8)),
        (s_poly(q - 2), c(-8)),
        (t_poly(q - 2), neg(-4)),
        (t_poly(q - 4), neg(-8)),
    ] {
        rhs.add_poly(Channel::Unit, &poly, &coeff);
    }
    let lhs = engine().phi(&TorusElement::term(c(-2 * q), 2, q));
    equal(
        format!("(2,q) closed form, q = {q}"),
        "t^-2q (2,q) = [t^-8 S_{q-4} - t^-4 S_q + t^-4 S_{q-2} - t^8 S_{q+2}]Y + ... in Chebyshev form",
        &lhs,
        &rhs,
    )
}

/// `(0,2) Y = (0,1)(xY) - 2Y`, in the module and through the preimages.
pub fn check_meridian_square(gs: &GeneratorSet) -> Vec<Check> {
    let e = engine();
    let mut out = Vec::new();
    for (ch, pre_x, pre, label) in [(Channel::Y, &gs.xy_pre, &gs.y_pre, "Y"), (Channel::Z, &gs.xz_pre, &gs.z_pre, "Z")] {
        let b = SkeinElement::basis(ch, 0);
        let xb = SkeinElement::basis(ch, 1);
        let lhs = e.act_pair(0, 2, &b);
        let rhs = &e.act_pair(0, 1, &xb) - &b.scale(&RatFunc::from_int(2));
        out.push(equal(format!("(0,2){label} in the module"), format!("(0,2) {label} = (0,1)(x{label}) - 2{label}"), &lhs, &rhs));
        let m1 = TorusElement::basis(0, 1);
        let m2 = TorusElement::basis(0, 2);
        let lhs = e.phi(&(&m2 * pre));
        let rhs = &e.phi(&(&m1 * pre_x)) - &e.phi(pre).scale(&RatFunc::from_int(2));
        out.push(equal(
            format!("(0,2){label} through preimages"),
            format!("(0,2) {label} = (0,1)(x{label}) - 2{label} with {label}, x{label} replaced by preimages"),
            &lhs,
            &rhs,
        ));
    }
    out
}

/// `phi((0,1)^n * y_pre) = x^n Y` and the `Z` analogue.
pub fn check_peripheral_basis(gs: &GeneratorSet, nmax: u32) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 0..=nmax {
        let m = TorusElement::meridian_power(n);
        for (ch, pre, label) in [(Channel::Y, &gs.y_pre, "Y"), (Channel::Z, &gs.z_pre, "Z")] {
            out.push(equal(
                format!("x^{n}{label} is peripheral"),
                format!("(0,1)^n applied to the preimage of {label} maps to x^n {label}"),
                &engine().phi(&(&m * pre)),
                &SkeinElement::basis(ch, n),
            ));
        }
    }
    out
}

/// Every identity, in a fixed order.
pub fn verify_identities(gs: &GeneratorSet) -> Vec<Check> {
    let mut out = check_quintic_images();
    out.extend((-6..=6).map(check_two_q_via_meridians));
    out.extend((-6..=6).map(check_two_q_closed_form));
    out.extend(verify_preimages(gs));
    out.extend(check_meridian_square(gs));
    out.extend(check_peripheral_basis(gs, 5));
    out
}

/// Compares the written formulas with the derived set. Only `g1`, `g2`
/// are required to agree exactly; the others are diagnostic.
pub fn compare_transcription(tr: &Transcription, derived: &GeneratorSet) -> Vec<Check> {
    let mut out = Vec::new();
    let written = match tr.build() {
        Ok(w) => w,
        Err(e) => return vec![Check::new("transcription parses", "every written formula parses", false).with_witness(e.to_string())],
    };
    for ((name, w), (_, d)) in written.generators().into_iter().zip(derived.generators()) {
        let img = engine().phi(w);
        let mut c = Check::zero(
            format!("written {name} is peripheral"),
            format!("the written {name} maps to zero"),
            img.is_zero(),
            &img,
        );
        if matches!(name, "g3" | "g4") {
            c = c.diagnostic().with_note("built from the written preimages of xY, xZ, Y, Z");
        }
        out.push(c);
        let diff = w - d;
        let c = Check::zero(format!("written {name} equals derived"), format!("written {name} - derived {name} = 0"), diff.is_zero(), &diff);
        out.push(if matches!(name, "g1" | "g2") { c } else { c.diagnostic() });
    }
    for (name, pre, target) in written.preimages() {
        let d = &engine().phi(pre) - &target;
        out.push(
            Check::zero(format!("written preimage of {name}"), format!("the written preimage of {name} maps to {name}"), d.is_zero(), &d)
                .diagnostic(),
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quintic_images_hold() {
        for c in check_quintic_images() {
            assert!(c.pass, "{c:?}");
        }
    }

    #[test]
    fn two_q_identities_hold() {
        for q in -3..=3 {
            let c = check_two_q_via_meridians(q);
            assert!(c.pass, "{c:?}");
            let c = check_two_q_closed_form(q);
            assert!(c.pass, "{c:?}");
        }
    }
}
