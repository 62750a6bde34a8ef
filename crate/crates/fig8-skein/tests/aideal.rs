use std::sync::OnceLock;

use fig8_skein::aideal::{self, printed, AIdealGenerators, DiffKind};
use fig8_skein::peripheral::{derive_generators, GeneratorSet};
use fig8_skein::RatFunc;

fn setup() -> &'static (GeneratorSet, AIdealGenerators) {
    static S: OnceLock<(GeneratorSet, AIdealGenerators)> = OnceLock::new();
    S.get_or_init(|| {
        let gs = derive_generators().unwrap();
        let ag = aideal::build_aideal(&gs);
        (gs, ag)
    })
}

#[test]
fn spot_coefficients_of_g1() {
    let g1 = &setup().1.gens[0];
    assert_eq!(g1.coeff(3, 14), RatFunc::t_pow(-18));
    assert_eq!(g1.coeff(4, 10), RatFunc::t_pow(-40));
    assert_eq!(g1.coeff(0, 4), RatFunc::t_pow(16));
}

#[test]
fn generators_live_in_the_plane() {
    let (_, ag) = setup();
    assert!(ag.gens.iter().all(|g| g.in_plane()));
    assert_eq!(ag.multipliers[..3], printed::MULTIPLIERS[..3]);
    // the minimal left multiplier of g4 is smaller than the published one
    assert_eq!(ag.multipliers[3], (3, 8));
}

#[test]
fn mirror_pairing() {
    let (_, ag) = setup();
    assert_eq!(aideal::mirror_pairing(ag), Some((0, 14, RatFunc::t_pow(56))));
}

#[test]
fn sign_of_l4_m6() {
    let (gs, ag) = setup();
    assert_eq!(ag.gens[0].coeff(4, 6), RatFunc::monomial(-1, -20));
    let diffs = aideal::diff_printed(gs, ag, &aideal::build_printed(gs).unwrap());
    let e = diffs[0].entry(4, 6).unwrap();
    assert_eq!(e.kind, DiffKind::CoefficientMismatch);
    assert_eq!(e.printed.as_deref(), Some("t^-20"));
    assert_eq!(e.computed.as_deref(), Some("-t^-20"));
}

#[test]
fn injected_fault_is_localized() {
    let (gs, ag) = setup();
    let text = |g1: &str| aideal::build_printed_from([g1, printed::G2, printed::G3, printed::G4], gs).unwrap();
    let clean = aideal::diff_printed(gs, ag, &text(printed::G1));
    assert_eq!(clean[0].entry(0, 4).unwrap().kind, DiffKind::Matched);

    let bad = printed::G1.replace("+t^{16}m^4", "+t^{14}m^4");
    assert_ne!(bad, printed::G1);
    let faulty = aideal::diff_printed(gs, ag, &text(&bad));
    let e = faulty[0].entry(0, 4).unwrap();
    assert_eq!(e.kind, DiffKind::CoefficientMismatch);
    assert_eq!(faulty[0].coefficient_mismatch, clean[0].coefficient_mismatch + 1);
    assert_eq!(faulty[0].matched + 1, clean[0].matched);
    // other generators untouched
    assert_eq!(faulty[1..], clean[1..]);
}

#[test]
fn erratum_lists_every_discrepancy() {
    let (gs, ag) = setup();
    let diffs = aideal::diff_printed(gs, ag, &aideal::build_printed(gs).unwrap());
    let v = aideal::erratum_json(&diffs);
    let total: usize = diffs.iter().map(|d| d.coefficient_mismatch + d.support_mismatch).sum();
    assert_eq!(v["discrepancies"].as_array().unwrap().len(), total);
}
