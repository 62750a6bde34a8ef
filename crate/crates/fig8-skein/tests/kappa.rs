use std::sync::OnceLock;

use fig8_skein::diagram::{self, builtin, PdCode};
use fig8_skein::kappa::{self, Convention, KappaError};
use fig8_skein::peripheral::{derive_generators, GeneratorSet};
use fig8_skein::RatFunc;

fn gs() -> &'static GeneratorSet {
    static GS: OnceLock<GeneratorSet> = OnceLock::new();
    GS.get_or_init(|| derive_generators().unwrap())
}

fn oracle(n: u32) -> RatFunc {
    let d: PdCode = builtin::FIG8.parse().unwrap();
    diagram::oracle_kappa(&d, n).unwrap().into()
}

#[test]
fn leading_coefficients() {
    assert_eq!(kappa::leading_coefficient(gs(), 0), RatFunc::monomial(-2, 5));
    for n in 1..=7u32 {
        assert_eq!(kappa::leading_coefficient(gs(), n), RatFunc::monomial(-1, 2 * n as i32 + 5), "n = {n}");
    }
}

#[test]
fn general_convention_matches_the_state_sum() {
    let sys = kappa::initial_system(&gs().g1, &gs().g2, Convention::General).unwrap();
    assert_eq!(sys.kappa1, oracle(1));
    assert_eq!(sys.kappa2, oracle(2));
}

#[test]
fn specialized_convention_does_not() {
    let sys = kappa::initial_system(&gs().g1, &gs().g2, Convention::Specialized).unwrap();
    assert!(!sys.kappa1.is_laurent() || sys.kappa1 != oracle(1));
    assert!(matches!(kappa::solve_kappa(gs(), 3, Convention::Specialized), Err(KappaError::Inconsistent { .. })));
}

#[test]
fn specialized_p_coefficients() {
    let (p1, _) = kappa::specialized_coefficients(&gs().g1);
    let (p2, _) = kappa::specialized_coefficients(&gs().g2);
    assert_eq!(p1, RatFunc::laurent([(-1, -6), (1, 2)]));
    assert_eq!(p2, RatFunc::laurent([(-1, 6), (1, -2)]));
}

#[test]
fn series_to_ten() {
    let s = kappa::solve_kappa(gs(), 10, Convention::General).unwrap();
    assert_eq!(s.max_n(), 10);
    assert!(s.all_laurent() && s.all_symmetric());
    assert_eq!(s.get(-3), Some(-&s.values[1]));
    // the 3-cable has 36 crossings, past the state-sum cap
    assert_eq!(s.values[1], oracle(1));
    assert_eq!(s.values[2], oracle(2));
}

#[test]
fn too_small() {
    assert_eq!(kappa::solve_kappa(gs(), 1, Convention::General), Err(KappaError::TooSmall(1)));
}
