//! Dense univariate polynomials over Q, used for gcd and exact division
//! behind the Laurent and rational-function types.

use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct UPoly {
    // ascending; last entry nonzero unless empty
    coeffs: Vec<BigRational>,
}

impl UPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lead(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            None => Self::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => {
                let inv = l.recip();
                Self { coeffs: self.coeffs.iter().map(|c| c * &inv).collect() }
            }
        }
    }

    pub fn div_rem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let Some(nd) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if nd < dd {
            return (Self::zero(), self.clone());
        }
        let inv = d.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![BigRational::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let c = &rem[i + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
            quo[i] = c;
        }
        rem.truncate(dd);
        (Self::from_coeffs(quo), Self::from_coeffs(rem))
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(a: &UPoly, b: &UPoly) -> UPoly {
        let mut x = a.monic();
        let mut y = b.monic();
        while !y.is_zero() {
            let (_, r) = x.div_rem(&y);
            x = y;
            y = r.monic();
        }
        x
    }
}

impl Default for UPoly {
    fn default() -> Self {
        Self::zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn p(c: &[i64]) -> UPoly {
        UPoly::from_coeffs(c.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
    }

    #[test]
    fn gcd_of_cyclotomic_products() {
        // t^4 - 1 and t^2 - 1 share t^2 - 1
        let g = UPoly::gcd(&p(&[-1, 0, 0, 0, 1]), &p(&[-1, 0, 1]));
        assert_eq!(g, p(&[-1, 0, 1]));
        let g = UPoly::gcd(&p(&[1, 0, 1]), &p(&[-1, 0, 1]));
        assert_eq!(g, p(&[1]));
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = p(&[3, 0, 2, 5, 1]);
        let d = p(&[1, 1]);
        let (q, r) = a.div_rem(&d);
        assert!(r.degree().is_none_or(|x| x == 0));
        let mut back = vec![BigRational::zero(); 5];
        for (i, qc) in q.coeffs().iter().enumerate() {
            for (j, dc) in d.coeffs().iter().enumerate() {
                back[i + j] += qc * dc;
            }
        }
        if let Some(c) = r.coeffs().first() {
            back[0] += c;
        }
        assert_eq!(UPoly::from_coeffs(back), a);
    }
}
