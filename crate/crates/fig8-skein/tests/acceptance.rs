//! One line per acceptance criterion. Runs without the libtest harness so the
//! lines are always printed; exits nonzero if any criterion fails.

use std::time::{Duration, Instant};

use fig8_skein::aideal;
use fig8_skein::diagram::{self, builtin, PdCode};
use fig8_skein::kappa::{self, Convention};
use fig8_skein::peripheral::{checks, derive_generators, GeneratorSet};
use fig8_skein::report::Check;
use fig8_skein::suite::{self, DEFAULT_SEED};
use fig8_skein::RatFunc;

struct Outcome {
    pass: bool,
    detail: String,
}

fn all_pass(cs: &[Check]) -> Outcome {
    let failed: Vec<&str> = cs.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect();
    Outcome {
        pass: failed.is_empty(),
        detail: if failed.is_empty() { format!("{} checks", cs.len()) } else { format!("failed: {}", failed.join("; ")) },
    }
}

fn criterion(id: u32, what: &str, limit: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let o = f();
    let took = start.elapsed();
    let ok = o.pass && took < limit;
    println!(
        "{} criterion {id}: {what} [{:.2}s, limit {}s] {}",
        if ok { "PASS" } else { "FAIL" },
        took.as_secs_f64(),
        limit.as_secs(),
        o.detail
    );
    ok
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn main() {
    let mut results = Vec::new();
    let mut gs: Option<GeneratorSet> = None;

    // derivation time counts toward the first criterion
    results.push(criterion(1, "derived generators annihilate the empty skein", secs(10), || {
        match derive_generators() {
            Ok(g) => {
                let o = all_pass(&checks::verify_membership(&g));
                gs = Some(g);
                o
            }
            Err(e) => Outcome { pass: false, detail: e.to_string() },
        }
    }));
    let Some(gs) = gs else {
        println!("FAIL remaining criteria: no generator set");
        std::process::exit(1);
    };

    results.push(criterion(2, "identity suite", secs(10), || all_pass(&checks::verify_identities(&gs))));

    results.push(criterion(3, "action coherence on seeded triples", secs(30), || {
        all_pass(&[suite::check_coherence(DEFAULT_SEED, suite::LAW_CASES)])
    }));

    results.push(criterion(4, "mirror equivariance; g2 = mirror(g1)", secs(30), || {
        let mut cs = vec![suite::check_mirror_equivariance()];
        cs.extend(suite::check_mirror_pairs(&gs));
        all_pass(&cs)
    }));

    results.push(criterion(5, "leading coefficients of the g3 recursion", secs(10), || {
        let bad: Vec<String> = (0..=7u32)
            .filter_map(|n| {
                let want = if n == 0 { RatFunc::monomial(-2, 5) } else { RatFunc::monomial(-1, 2 * n as i32 + 5) };
                let got = kappa::leading_coefficient(&gs, n);
                (got != want).then(|| format!("n = {n}: {got}"))
            })
            .collect();
        Outcome { pass: bad.is_empty(), detail: if bad.is_empty() { "n = 0..7".into() } else { bad.join("; ") } }
    }));

    results.push(criterion(6, "specialized P1, P2 and P2 = -t^4 P1", secs(10), || {
        let (p1, _) = kappa::specialized_coefficients(&gs.g1);
        let (p2, _) = kappa::specialized_coefficients(&gs.g2);
        let pass = p1 == RatFunc::laurent([(-1, -6), (1, 2)])
            && p2 == RatFunc::laurent([(-1, 6), (1, -2)])
            && p2 == &RatFunc::monomial(-1, 4) * &p1;
        Outcome { pass, detail: format!("P1 = {p1}; P2 = {p2}") }
    }));

    let mut winner = None;
    results.push(criterion(7, "kappa_1, kappa_2 agree with the state-sum oracle", secs(60), || {
        let d: PdCode = builtin::FIG8.parse().expect("diagram");
        let k1 = RatFunc::from(diagram::oracle_kappa(&d, 1).expect("kappa_1"));
        let k2 = RatFunc::from(diagram::oracle_kappa(&d, 2).expect("kappa_2"));
        let won: Vec<Convention> = Convention::ALL
            .into_iter()
            .filter(|&c| kappa::initial_system(&gs.g1, &gs.g2, c).is_ok_and(|s| s.kappa1 == k1 && s.kappa2 == k2))
            .collect();
        winner = won.first().copied();
        let names: Vec<String> = won.iter().map(|c| c.to_string()).collect();
        Outcome { pass: !won.is_empty(), detail: format!("winning convention: {}", if names.is_empty() { "none".into() } else { names.join(", ") }) }
    }));

    results.push(criterion(8, "N = 10: relations hold, every kappa Laurent and symmetric", secs(60), || {
        match kappa::solve_kappa(&gs, 10, winner.unwrap_or(Convention::General)) {
            Ok(s) => Outcome {
                pass: s.all_laurent() && s.all_symmetric() && s.max_n() == 10,
                detail: format!("laurent {}, symmetric {}", s.all_laurent(), s.all_symmetric()),
            },
            Err(e) => Outcome { pass: false, detail: e.to_string() },
        }
    }));

    results.push(criterion(9, "A-ideal spot checks", secs(30), || {
        let ag = aideal::build_aideal(&gs);
        let g1 = &ag.gens[0];
        let bad: Vec<String> = [(RatFunc::t_pow(-18), 3, 14), (RatFunc::t_pow(-40), 4, 10), (RatFunc::t_pow(16), 0, 4)]
            .into_iter()
            .filter(|(c, a, b)| g1.coeff(*a, *b) != *c)
            .map(|(c, a, b)| format!("l^{a} m^{b}: expected {c}, got {}", g1.coeff(a, b)))
            .collect();
        // the full diff is informational
        let diff = aideal::build_printed(&gs)
            .map(|p| aideal::diff_printed(&gs, &ag, &p).iter().map(|d| d.to_string()).collect::<Vec<_>>().join("; "))
            .unwrap_or_else(|e| e.to_string());
        Outcome { pass: bad.is_empty(), detail: if bad.is_empty() { format!("diff: {diff}") } else { bad.join("; ") } }
    }));

    results.push(criterion(10, "algebra laws on seeded cases", secs(30), || {
        all_pass(&[
            suite::check_torus_associativity(DEFAULT_SEED, suite::LAW_CASES),
            suite::check_qplane_associativity(DEFAULT_SEED, suite::LAW_CASES),
            suite::check_substitution_multiplicative(DEFAULT_SEED, suite::LAW_CASES),
        ])
    }));

    let failed = results.iter().filter(|ok| !**ok).count();
    println!("acceptance: {} of {} criteria passed", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
