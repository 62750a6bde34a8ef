//! The noncommutative A-ideal generators and their diff against the
//! published polynomials.
use fig8_skein::aideal;
use fig8_skein::peripheral::derive_generators;

fn main() {
    let gs = derive_generators().expect("derivation succeeds");
    let ag = aideal::build_aideal(&gs);
    for (i, g) in ag.gens.iter().enumerate() {
        let (a, b) = ag.multipliers[i];
        println!("A{} = l^{a} m^{b} g{} = {g}\n", i + 1, i + 1);
    }
    if let Some((a, b, c)) = aideal::mirror_pairing(&ag) {
        println!("A2 = ({c}) l^{a} m^{b} mirror(A1)");
    }
    let printed = aideal::build_printed(&gs).expect("published text parses");
    for d in aideal::diff_printed(&gs, &ag, &printed) {
        println!("{d}");
    }
}
