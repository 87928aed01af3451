#![allow(dead_code)]

use orbicusp_core::atoms::InvertibleType;
use orbicusp_core::polynomial::{ExponentMatrix, InvertiblePolynomial};
use proptest::prelude::*;

const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// Renames variables: the new variable `k` is the old variable `perm[k]`,
/// and the monomials are shuffled the same way.
pub fn permute(m: &ExponentMatrix, perm: [usize; 3]) -> ExponentMatrix {
    let rows: Vec<Vec<u32>> = (0..3).map(|i| (0..3).map(|j| m.get(perm[i], perm[j])).collect()).collect();
    ExponentMatrix::new(&rows).unwrap()
}

fn kind(t: u8, a: u64, b: u64, c: u64) -> InvertibleType {
    match t {
        0 => InvertibleType::I { p: [a, b, c] },
        1 => InvertibleType::II { p1: a, p2: b, p3: b * c },
        2 => InvertibleType::III { p1: a, q2: b - 1, q3: c - 1 },
        3 => InvertibleType::IV { p1: a, p2: a * (b - 1), p3: a * (b - 1) * c },
        _ => InvertibleType::V { q: [a - 1, b - 1, c - 1] },
    }
}

/// Invertible polynomials of every type with small parameters, in a random
/// variable order.
pub fn any_invertible(max: u64) -> impl Strategy<Value = InvertiblePolynomial> {
    (0u8..5, 2..=max, 2..=max, 2..=max, 0usize..6).prop_filter_map("degenerate", |(t, a, b, c, p)| {
        let m = kind(t, a, b, c).normal_form();
        InvertiblePolynomial::from_matrix(permute(&m, PERMS[p])).ok()
    })
}

pub fn fermat(max: u64) -> impl Strategy<Value = InvertiblePolynomial> {
    (2..=max, 2..=max, 2..=max).prop_map(|(a, b, c)| InvertiblePolynomial::from_rows([[a as u32, 0, 0], [0, b as u32, 0], [0, 0, c as u32]]).unwrap())
}
