//! The generators and preimages as written in the literature, kept as text.
//! `xY`, `xZ`, `Y`, `Z` stand for the corresponding preimage elements.

pub const G1: &str = "
    t^{-6}(2,3) - t^6(2,-1) + t^3(1,7) - t(1,5)
    + (-t^{11}+t^3-t^{-1}-t^{-5})(1,3) + (t^9-t^5-t^{-7})(1,1)
    + (-t^{11}+2t^7+t^3-t^{-1}+t^{-9})(1,-1) + (t^{13}+t)(1,-3)
    - t^{-1}(1,-5) + t^8(0,7) + (-2t^8+t^4-t^{-4})(0,5)
    + (-t^{12}+t^8-t^4-1+t^{-4})(0,3) + (t^{12}-t^8+1+t^{-4})(0,1)";

pub const G2: &str = "
    t^6(2,-3) - t^{-6}(2,1) + t^{-3}(1,-7) - t^{-1}(1,-5)
    + (-t^{-11}+t^{-3}-t^{}-t^5)(1,-3) + (t^{-9}-t^{-5}-t^7)(1,-1)
    + (-t^{-11}+2t^{-7}+t^{-3}-t^{}+t^9)(1,1) + (t^{-13}+t^{-1})(1,3)
    - t(1,5) + t^{-8}(0,7) + (-2t^{-8}+t^{-4}-t^4)(0,5)
    + (-t^{-12}+t^{-8}-t^{-4}-1+t^4)(0,3) + (t^{-12}-t^{-8}+1+t^4)(0,1)";

pub const XY: &str = "
    1/((t^{16}-1)(1-t^{-4}+t^{-8})) [(t^{-2}-t^2)(2,1) + t^6(2,-1) + (t^5-t^9)(1,5)
    + (t^{11}+t^9-t^5)(1,3) + (-t^{11}-t^9+t^7-t^5-t^{-3}+t^{-7})(1,1)
    + (t^{-3}-t^{15}+t^{11}-t^7-t^3+t^{-1}-t^{-5})(1,-1)
    + (-t^{-1}-t^{-3}+t^{-7})(1,-3) + t^{-1}(1,-5) + (-t^{12}+t^8+t^{-4})(0,5)
    + (2t^{12}-2t^8+t^4-2t^{-4}+t^{-8}+1)(0,3) + (-t^{16}+t^8+t^4+2t^{-4}+t^{-8})(0,1)]";

pub const XZ: &str = "
    1/((t^{-16}-1)(1-t^4+t^8)) [(t^2-t^{-2})(2,-1) + t^{-6}(2,1) + (t^{-5}-t^{-9})(1,-5)
    + (t^{-11}+t^{-9}-t^{-5})(1,-3) + (-t^{-11}-t^{-9}+t^{-7}+t^{-5}-t^3+t^7)(1,-1)
    + (t^3-t^{-15}+t^{-11}-t^{-7}-t^{-3}+t-t^5)(1,1)
    + (-t-t^3+t^7)(1,3) + t(1,5) + (t^{-12}+t^{-8}+t^4)(0,5)
    + (2t^{-12}-2t^{-8}+t^{-4}-2t^4+t^8+1)(0,3) + (-t^{-16}+t^{-8}+t^{-4}+2t^4+t^8)(0,1)]";

pub const Y: &str = "
    1/(2(t^{-8}-t^4)(t^4-1)) [(t^4+t^{-4}+1-2t^8-t^{-8})(0,1)(xY)
    + (t^{-4}+1-t^4-t^8)(0,1)(xZ) - (2,0) - t^6(1,4) - t^{-6}(1,-4)
    + t^4(1,2) + t^{-4}(1,-2) + (t^6-t^{-6})(1,0) - (t^8+t^{-8})(0,4)
    + (t^{-4}-t^4+2-t^8+t^{-8})(0,2) + (2t^{-4}+2-2t^8)]";

pub const Z: &str = "
    1/(2(t^8-t^{-4})(t^{-4}-1)) [(t^{-4}+t^4+1-2t^{-8}-t^8)(0,1)(xZ)
    + (t^4+1-t^{-4}-t^{-8})(0,1)(xY) - (2,0) - t^6(1,4) - t^{-6}(1,-4)
    + t^4(1,2) + t^{-4}(1,-2) + (t^{-6}-t^6)(1,0) - (t^8+t^{-8})(0,4)
    + (t^4-t^{-4}+2-t^{-8}+t^8)(0,2) + (2t^4+2-2t^{-8})]";

/// The line starting with `(t^{-7}-...)(1,-1)` has no operator in the
/// source; it is read as `+`.
pub const G3: &str = "
    -t(3,1) + (t^{16}-1)(t^4+1)t^{-2}(0,2)(xY) + (t^{16}-1)(t^4+1)(t^{-6}-t^{-2})(xY)
    + (t^{16}-1)t^{-2}(0,2)(xZ) + (t^{16}-1)(t^{-6}-t^{-10})(xZ)
    - t^{12}(2,5) + t^8(2,3) + (1+t^4-t^{10})(2,1) + (t^{-4}-t^{12})(2,-1) - t^{-8}(2,-3)
    - t^{15}(1,5) + (t^{-3}-t^9-t^{17})(1,3) + (t^{-5}-t^7-2t^{11}-2t^{15}+t^{-1})(1,1)
    + (t^{-7}-t^{-3}-t^{-1}-t^5-t^{13})(1,-1) + (t^{-9}-t^{-5}-t^3)(1,-3) - t^5(1,-5)
    - (t^2-t^{-2})(0,3) + (t^{18}+t^{14}+2t^{10}-t^8+t^6-2t^{-6}-t^{-10})(0,1)";

pub const G4: &str = "
    -t^3(3,0) - t^{-7}(1,4)Y - t^{-13}(1,-2)Y - (t^7+t^{-9}+t^{-5})(1,2)Y
    - (t^5+t^{-11}+t^{-7})(1,0)Y - t^{-7}(1,4)Z - t^{-13}(1,-2)Z
    - (t^7+t^{-9}+t^3)(1,2)Z - (t^5+t^{-11}+t)(1,0)Z
    - t^7(2,4) - t^{-13}(2,-4) + t^3(2,2) + t^9(2,-2) + (t^{-1}+t^{-5})(2,0)
    - (t^9-t^{-3})(1,4) - (t^3+t^{-3}+t^{-9})(1,-2) - t^{-5}(1,6) - t^{-15}(1,-4)
    + (t^{-9}-t^3)(1,2) + (t^{-11}-t)(1,0) - t^{-1}(0,6) + t^{-1}(0,4) + t^{-1}(0,2) + 2t^3";
