mod common;

use common::any_invertible;
use orbicusp_core::arith::Q;
use orbicusp_core::atoms::AtomKind;
use orbicusp_core::symmetry::*;
use orbicusp_core::weights::cf;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn duality_orders_and_involution(f in any_invertible(7)) {
        let ft = f.transpose();
        for g in intermediate_groups(&f) {
            let d = dual_group(&f, &g).unwrap();
            prop_assert_eq!(g.order() * d.order(), f.det());
            prop_assert_eq!(dual_group(&ft, &d).unwrap(), g.clone());
            prop_assert!(is_sl_subgroup(&d));
        }
    }

    #[test]
    fn dual_of_g0_has_order_cf(f in any_invertible(9)) {
        let d = dual_group(&f, &g0_group(&f)).unwrap();
        prop_assert_eq!(d.order(), cf(&f));
    }

    #[test]
    fn containing_g0_iff_dual_in_sl(f in any_invertible(6)) {
        let ft = f.transpose();
        let full = gfin(&f);
        // cyclic subgroups are enough to exercise both directions
        for e in full.elements() {
            let g = group_from_generators(&f, &[e]).unwrap();
            let d = dual_group(&f, &g).unwrap();
            prop_assert_eq!(contains_g0(&f, &g), is_sl_subgroup(&d));
            prop_assert_eq!(d.contains(&g0(&ft)), is_sl_subgroup(&g));
        }
    }

    #[test]
    fn ages_and_juniors(f in any_invertible(7)) {
        let d = dual_group(&f, &g0_group(&f)).unwrap();
        let mut empty_fix = 0;
        for g in d.elements() {
            let r = age_and_fix(&g);
            let s = age_and_fix(&g.inverse());
            prop_assert_eq!(r.age + s.age, Q::from(3 - r.nfix as i64));
            if !g.is_identity() {
                prop_assert!(r.nfix <= 1);
            }
            if r.nfix == 0 {
                empty_fix += 1;
            }
        }
        prop_assert_eq!(empty_fix, 2 * junior_count(&d));
    }

    #[test]
    fn chain_dual_is_cyclic_on_the_head(f in any_invertible(9)) {
        let loops = f.atoms().iter().any(|a| a.kind == AtomKind::Loop && a.vars.len() == 3);
        let chain = f.atoms().iter().find(|a| a.kind == AtomKind::Chain && a.vars.len() == 3);
        let d = dual_group(&f, &g0_group(&f)).unwrap();
        let c = cf(&f);
        if loops || chain.is_some() {
            prop_assert_eq!(d.exponent(), c);
        }
        if let Some(chain) = chain {
            let gen = d.elements().find(|g| g.order() == c && chain.vars.iter().any(|&i| g.phase(i) == Q::new(1, c as i64)));
            prop_assert!(c == 1 || gen.is_some());
        }
    }
}

#[test]
fn parsed_groups() {
    let f = orbicusp_core::polynomial::parse_polynomial("x^2+y^3+z^6").unwrap();
    let groups = intermediate_groups(&f);
    assert_eq!(groups.first().unwrap().order(), g0_group(&f).order());
    assert_eq!(groups.last().unwrap().order(), f.det());
    let g = parse_group(&f, "G0").unwrap();
    assert_eq!(g, g0_group(&f));
    assert!(parse_group(&f, "1/5(1,1,1)").is_err());
}
