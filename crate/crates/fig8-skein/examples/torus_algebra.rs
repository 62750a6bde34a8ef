//! Product-to-sum in the torus skein algebra, and the substitution into the
//! quantum torus.
use fig8_skein::{QPlaneElement, TorusElement};

fn main() {
    let a = TorusElement::basis(1, 0);
    let b = TorusElement::basis(0, 1);
    println!("(1,0) * (0,1) = {}", &a * &b);
    println!("(0,1) * (1,0) = {}", &b * &a);
    let ab = &a * &b;
    println!("image in the quantum torus: {}", QPlaneElement::from_torus(&ab));
    let check = &QPlaneElement::from_torus(&a) * &QPlaneElement::from_torus(&b);
    println!("multiplicative: {}", check == QPlaneElement::from_torus(&ab));
}
