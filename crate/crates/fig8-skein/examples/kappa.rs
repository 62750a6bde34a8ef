//! Solves the colored bracket recursion for the figure-eight knot.
use fig8_skein::kappa::{self, Convention};
use fig8_skein::peripheral::derive_generators;

fn main() {
    let gs = derive_generators().expect("derivation succeeds");
    let sys = kappa::initial_system(&gs.g1, &gs.g2, Convention::General).expect("nonsingular");
    println!("determinant of the initial system: {}", sys.determinant);
    let series = kappa::solve_kappa(&gs, 6, Convention::General).expect("consistent");
    for (n, v) in series.values.iter().enumerate() {
        println!("kappa_{n} = {v}");
    }
}
