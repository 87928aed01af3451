//! Cusp polynomials `x^{γ′_1} + y^{γ′_2} + z^{γ′_3} - xyz` with a finite group
//! of diagonal symmetries in `SL_3`: Gabrielov numbers, characteristic
//! polynomial and Milnor number of the pair.

use alloc::format;
use alloc::vec::Vec;

use crate::atoms::{classify3, InvertibleType};
use crate::curve::{alpha_prime_normal, AlphaTable};
use crate::polynomial::InvertiblePolynomial;
use crate::spectra::CycloVector;
use crate::symmetry::{is_sl_subgroup, junior_count, subgroup_fixing_coordinate, DiagonalGroup};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CuspPolynomial {
    pub gamma_prime: [u64; 3],
    pub delta: i64,
}

impl CuspPolynomial {
    pub fn new(gamma_prime: [u64; 3]) -> Self {
        Self { gamma_prime, delta: delta(gamma_prime) }
    }
}

/// `γ′_1γ′_2γ′_3 − γ′_2γ′_3 − γ′_1γ′_3 − γ′_1γ′_2`. Negative for the
/// spherical cases, zero on the boundary, positive for hyperbolic ones.
pub fn delta(g: [u64; 3]) -> i64 {
    let [a, b, c] = g.map(|v| v as i64);
    a * b * c - b * c - a * c - a * b
}

/// `γ′` of `(h, {1})`: the triple `α′` of the transpose, coordinate-indexed.
pub fn gabrielov_prime(h: &InvertiblePolynomial) -> Result<CuspPolynomial> {
    gabrielov_prime_using(h, alpha_prime_normal)
}

/// The α′ triple of `h^T` read on the coordinates of `h`. For the
/// Fermat-plus-loop type the two loop entries trade places: the coordinate
/// carrying `z^{q_3+1}` gets `p_1 q_3`.
pub fn gabrielov_prime_using(h: &InvertiblePolynomial, table: AlphaTable) -> Result<CuspPolynomial> {
    let tag = classify3(&h.transpose())?;
    let mut a = table(&tag.kind);
    if let InvertibleType::III { .. } = tag.kind {
        a.swap(1, 2);
    }
    Ok(CuspPolynomial::new(tag.pull_back(a)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GabrielovEntry {
    /// `γ′_i / |G / H_i|`.
    pub gamma_tilde: u64,
    pub h_order: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GabrielovData {
    pub per_coordinate: [GabrielovEntry; 3],
    /// Sorted, with ones omitted.
    pub multiset: Vec<u64>,
    pub j: u64,
    pub milnor: i64,
}

/// Gabrielov numbers of `(h - xyz, G)` with `γ′ = gabrielov_prime(h)`.
pub fn gabrielov(h: &InvertiblePolynomial, g: &DiagonalGroup) -> Result<GabrielovData> {
    gabrielov_using(h, g, alpha_prime_normal)
}

pub fn gabrielov_using(h: &InvertiblePolynomial, g: &DiagonalGroup, table: AlphaTable) -> Result<GabrielovData> {
    if g.matrix() != h.matrix() {
        return Err(Error::NotASubgroup);
    }
    gabrielov_of_cusp(gabrielov_prime_using(h, table)?.gamma_prime, g)
}

/// Gabrielov numbers of the cusp with exponents `gamma_prime` under `g`.
pub fn gabrielov_of_cusp(gamma_prime: [u64; 3], g: &DiagonalGroup) -> Result<GabrielovData> {
    if g.n() != 3 {
        return Err(Error::WrongArity { expected: 3, found: g.n() });
    }
    if !is_sl_subgroup(g) {
        return Err(Error::NotSL);
    }
    let m = g.modulus();
    for v in g.generators() {
        let v = v.over(m).expect("element");
        if (0..3).any(|i| !(gamma_prime[i] * v[i]).is_multiple_of(m)) {
            return Err(Error::NotSymmetryOfCusp(format!("{gamma_prime:?}")));
        }
    }
    let mut entries = [GabrielovEntry { gamma_tilde: 0, h_order: 0 }; 3];
    let mut multiset = Vec::new();
    for i in 0..3 {
        let h = subgroup_fixing_coordinate(g, i).order();
        let index = g.order() / h;
        if !gamma_prime[i].is_multiple_of(index) {
            return Err(Error::NonIntegralGamma(format!("{}/{}", gamma_prime[i], index)));
        }
        let gamma = gamma_prime[i] / index;
        entries[i] = GabrielovEntry { gamma_tilde: gamma, h_order: h };
        if gamma != 1 {
            multiset.extend(core::iter::repeat_n(gamma, h as usize));
        }
    }
    multiset.sort_unstable();
    let j = junior_count(g);
    let milnor = crate::curve::euler_from(j, &multiset);
    Ok(GabrielovData { per_coordinate: entries, multiset, j, milnor })
}

/// `(t−1)^{2−2j} ∏_{γ∈Γ} (t^γ−1)/(t−1)` as a cyclotomic exponent vector.
pub fn cusp_char_poly(gamma_prime: [u64; 3], g: &DiagonalGroup) -> Result<CycloVector> {
    let data = gabrielov_of_cusp(gamma_prime, g)?;
    Ok(char_poly_from(data.j, &data.multiset))
}

pub fn char_poly_from(genus: u64, orders: &[u64]) -> CycloVector {
    let mut v = CycloVector::one();
    v.add_entry(1, 2 - 2 * genus as i64 - orders.len() as i64);
    for &a in orders {
        v.add_entry(a, 1);
    }
    v
}

/// `μ = 2 − 2j + Σ (γ − 1)`.
pub fn cusp_milnor(gamma_prime: [u64; 3], g: &DiagonalGroup) -> Result<i64> {
    Ok(gabrielov_of_cusp(gamma_prime, g)?.milnor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::parse_polynomial;
    use crate::symmetry::{parse_group, trivial_group};

    fn poly(s: &str) -> InvertiblePolynomial {
        parse_polynomial(s).unwrap()
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta([2, 3, 4]), -2);
        assert_eq!(delta([2, 3, 6]), 0);
        assert_eq!(delta([5, 5, 5]), 50);
    }

    #[test]
    fn gamma_prime_examples() {
        assert_eq!(gabrielov_prime(&poly("x^2+y^3+z^4")).unwrap().gamma_prime, [2, 3, 4]);
        for (l, k) in [(2, 2), (3, 4), (4, 3)] {
            let h = poly(&format!("x^{l}+x*y+y*z^{k}"));
            assert_eq!(gabrielov_prime(&h).unwrap().gamma_prime, [l, (k - 1) * l, 1]);
        }
        for k in 1..5 {
            let h = poly(&format!("x^2+z*y^2+y*z^{}", k + 1));
            assert_eq!(gabrielov_prime(&h).unwrap().gamma_prime, [2, 2, 2 * k]);
        }
        for k in 2..6 {
            let h = poly(&format!("x^2+y^2+y*z^{k}"));
            assert_eq!(gabrielov_prime(&h).unwrap().gamma_prime, [2, 2, 2 * (k - 1)]);
        }
    }

    #[test]
    fn gabrielov_examples() {
        let e6 = poly("x^2+y^3+z^4");
        let g = parse_group(&e6, "1/2(1,0,1)").unwrap();
        assert_eq!(gabrielov(&e6, &g).unwrap().multiset, [2, 3, 3]);

        let a = poly("x^2+y^2+z^6");
        let v = parse_group(&a, "1/2(1,1,0);1/2(1,0,1)").unwrap();
        assert_eq!(gabrielov(&a, &v).unwrap().multiset, [3, 3]);

        let e8 = poly("x^2+y^3+z^6");
        let z3 = parse_group(&e8, "1/3(0,1,2)").unwrap();
        let data = gabrielov(&e8, &z3).unwrap();
        assert_eq!(data.multiset, [2, 2, 2, 2]);
        assert_eq!(data.milnor, 6);
    }

    #[test]
    fn gabrielov_preconditions() {
        let e8 = poly("x^2+y^3+z^6");
        let not_sl = parse_group(&e8, "1/2(1,0,0)").unwrap();
        assert_eq!(gabrielov(&e8, &not_sl), Err(Error::NotSL));
        // (1/5,3/5,1/5) is in SL but does not preserve x^2
        let f = poly("x^2*y+y^3*z+z^5");
        let g = parse_group(&f, "1/5(1,3,1)").unwrap();
        assert!(matches!(gabrielov_of_cusp([2, 3, 5], &g), Err(Error::NotSymmetryOfCusp(_))));
    }

    #[test]
    fn char_poly_examples() {
        let e8 = poly("x^2+y^3+z^6");
        let triv = trivial_group(&e8);
        let v = cusp_char_poly([2, 3, 6], &triv).unwrap();
        assert_eq!(v.to_string(), "6*3*2 / 1");
        assert_eq!(cusp_milnor([2, 3, 6], &triv).unwrap(), 10);
        let z3 = parse_group(&e8, "1/3(0,1,2)").unwrap();
        assert_eq!(cusp_char_poly([2, 3, 6], &z3).unwrap().to_string(), "2^4 / 1^2");

        let f = poly("x^5+y^5+z^5");
        let g = parse_group(&f, "1/5(1,3,1)").unwrap();
        assert_eq!(cusp_char_poly([5, 5, 5], &g).unwrap().to_string(), "1 / 1^2");
        assert_eq!(cusp_milnor([5, 5, 5], &g).unwrap(), -2);
    }
}
