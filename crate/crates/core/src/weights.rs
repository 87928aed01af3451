//! Weight systems `(w_1, ..., w_n; d)`.

use alloc::vec::Vec;
use core::fmt;

use crate::arith::{self, Q};

/// Integer weights `w_i` and degree `d` with `f(λ^{w_1} x_1, ...) = λ^d f(x)`.
///
/// The canonical system of an invertible polynomial has `d = |det E|`; its
/// reduction divides everything by `c_f = gcd(w_1, ..., w_n, d)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightSystem {
    weights: Vec<u64>,
    degree: u64,
}

impl WeightSystem {
    pub fn new(weights: Vec<u64>, degree: u64) -> Self {
        assert!(degree > 0 && weights.iter().all(|&w| w > 0), "weights and degree must be positive");
        Self { weights, degree }
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn n(&self) -> usize {
        self.weights.len()
    }

    /// `gcd(w_1, ..., w_n, d)`.
    pub fn gcd(&self) -> u64 {
        arith::gcd_all(self.weights.iter().copied().chain([self.degree]))
    }

    pub fn is_reduced(&self) -> bool {
        self.gcd() == 1
    }

    pub fn reduced(&self) -> Self {
        let c = self.gcd();
        Self { weights: self.weights.iter().map(|w| w / c).collect(), degree: self.degree / c }
    }

    /// The rational weight `q_i = w_i / d`.
    pub fn q(&self, i: usize) -> Q {
        Q::new(self.weights[i] as i64, self.degree as i64)
    }
}

impl fmt::Display for WeightSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, w) in self.weights.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, ";{})", self.degree)
    }
}

/// `c_f`: the gcd of the canonical weights and the degree.
pub fn cf(f: &crate::polynomial::InvertiblePolynomial) -> u64 {
    f.canonical_weights().gcd()
}

pub fn reduced_weights(f: &crate::polynomial::InvertiblePolynomial) -> WeightSystem {
    f.canonical_weights().reduced()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::parse_polynomial;

    #[test]
    fn chain_weights() {
        let f = parse_polynomial("x^2+x*y^3+y*z^5").unwrap();
        assert_eq!(f.canonical_weights().to_string(), "(15,5,5;30)");
        assert_eq!(cf(&f), 5);
        assert_eq!(reduced_weights(&f).to_string(), "(3,1,1;6)");
        let t = f.transpose();
        assert_eq!(t.canonical_weights().to_string(), "(11,8,6;30)");
        assert_eq!(cf(&t), 1);
    }

    #[test]
    fn fermat_weights() {
        let f = parse_polynomial("x^3+y^3+z^3").unwrap();
        assert_eq!(f.canonical_weights().to_string(), "(9,9,9;27)");
        assert_eq!(cf(&f), 9);
        assert_eq!(reduced_weights(&f).to_string(), "(1,1,1;3)");
        assert_eq!(f.canonical_weights().q(0), Q::new(1, 3));
    }

    #[test]
    fn loop_weights() {
        let f = parse_polynomial("x^3*y+y^3*z+z^3*x").unwrap();
        assert_eq!(f.canonical_weights().to_string(), "(7,7,7;28)");
        assert_eq!(cf(&f), 7);
    }
}
