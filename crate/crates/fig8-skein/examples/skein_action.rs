//! The action of the torus algebra on the skein module of the complement.
use fig8_skein::{engine, Channel, SkeinElement, TorusElement};

fn main() {
    let e = engine();
    for (p, q) in [(0, 2), (1, 0), (1, 1), (2, 1)] {
        println!("phi({p},{q}) = {}", e.phi(&TorusElement::basis(p, q)));
    }
    let y = SkeinElement::basis(Channel::Y, 0);
    println!("(1,0) . Y = {}", e.act_pair(1, 0, &y));
}
