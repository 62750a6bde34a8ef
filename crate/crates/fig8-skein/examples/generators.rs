//! Re-derives the peripheral ideal generators and checks them.
use fig8_skein::peripheral::{checks, derive_generators};

fn main() {
    let gs = derive_generators().expect("derivation succeeds");
    for (name, g) in gs.generators() {
        println!("{name} = {g}\n");
    }
    for c in checks::verify_membership(&gs) {
        println!("{} {}", c.status_word(), c.name);
    }
}
