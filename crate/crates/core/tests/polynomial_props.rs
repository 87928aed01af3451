mod common;

use common::any_invertible;
use orbicusp_core::atoms::{classify3, AtomKind};
use orbicusp_core::polynomial::{parse_polynomial, InvertiblePolynomial};
use orbicusp_core::weights::{cf, reduced_weights};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn transpose_is_an_involution(f in any_invertible(9)) {
        let back = f.transpose().transpose();
        prop_assert_eq!(back.matrix(), f.matrix());
    }

    #[test]
    fn canonical_weights_solve_the_system(f in any_invertible(9)) {
        let w = f.canonical_weights();
        prop_assert_eq!(w.degree(), f.det());
        for i in 0..3 {
            let s: u64 = (0..3).map(|j| f.exponent(i, j) as u64 * w.weights()[j]).sum();
            prop_assert_eq!(s, w.degree());
        }
    }

    #[test]
    fn cf_divides_and_reduces(f in any_invertible(9)) {
        let c = cf(&f);
        let w = f.canonical_weights();
        prop_assert_eq!(w.degree() % c, 0);
        prop_assert!(w.weights().iter().all(|x| x % c == 0));
        prop_assert_eq!(reduced_weights(&f).gcd(), 1);
        prop_assert_eq!(reduced_weights(&f).degree() * c, w.degree());
    }

    #[test]
    fn type_matches_atoms(f in any_invertible(9)) {
        let tag = classify3(&f).unwrap();
        let mut kinds: Vec<(AtomKind, usize)> = f.atoms().iter().map(|a| (a.kind, a.vars.len())).collect();
        kinds.sort();
        let expected: Vec<(AtomKind, usize)> = match tag.kind.roman() {
            "I" => vec![(AtomKind::Fermat, 1); 3],
            "II" => vec![(AtomKind::Fermat, 1), (AtomKind::Chain, 2)],
            "III" => vec![(AtomKind::Fermat, 1), (AtomKind::Loop, 2)],
            "IV" => vec![(AtomKind::Chain, 3)],
            _ => vec![(AtomKind::Loop, 3)],
        };
        let mut expected = expected;
        expected.sort();
        prop_assert_eq!(kinds, expected);
    }

    #[test]
    fn normal_form_pulls_back_to_the_input(f in any_invertible(9)) {
        let tag = classify3(&f).unwrap();
        let nf = tag.kind.normal_form();
        // column k of the normal form is original variable perm[k]
        let mut cols: Vec<Vec<u32>> = (0..3).map(|i| (0..3).map(|k| nf.get(i, k)).collect()).collect();
        let mut orig: Vec<Vec<u32>> = (0..3).map(|i| (0..3).map(|k| f.exponent(i, tag.perm[k])).collect()).collect();
        cols.sort();
        orig.sort();
        prop_assert_eq!(cols, orig);
    }

    #[test]
    fn format_then_parse_round_trips(f in any_invertible(9)) {
        let text = f.to_string();
        let g = parse_polynomial(&text).unwrap();
        prop_assert_eq!(g.matrix(), f.matrix());
        prop_assert_eq!(g.to_string(), text);
    }
}

#[test]
fn rejects_non_invertible_input() {
    assert!(parse_polynomial("x^2*y^2+x^2*y^2+z^3").is_err());
    assert!(parse_polynomial("x^2+y^2").is_ok());
    assert!(InvertiblePolynomial::from_rows([[2, 1, 0], [2, 1, 0], [0, 0, 3]]).is_err());
    assert!(parse_polynomial("x^2+").is_err());
}
