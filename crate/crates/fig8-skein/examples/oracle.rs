//! Kauffman brackets of cabled diagrams by state sum.
use fig8_skein::diagram::{self, builtin, PdCode};

fn main() {
    let fig8: PdCode = builtin::FIG8.parse().expect("built-in diagram");
    let trefoil: PdCode = builtin::TREFOIL.parse().expect("built-in diagram");
    println!("<trefoil> = {}", diagram::bracket(&trefoil).unwrap());
    for n in 1..=2 {
        let cable = fig8.cable(n).unwrap();
        println!("figure-eight {n}-cable: {} crossings, kappa_{n} = {}", cable.len(), diagram::oracle_kappa(&fig8, n).unwrap());
    }
}
