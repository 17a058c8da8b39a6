use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;

use quadrep::descent_poly::descend_poly_form;
use quadrep::forms::{catalog_negative, QuadraticForm, Representation};
use quadrep::lift::lift;
use quadrep::oracle::{poly_roots_mod, roots_mod};
use quadrep::rings::{Element, Ring};

fn poly(ring: Ring, coeffs: &[i64]) -> Element {
    let x = ring.x().unwrap();
    coeffs.iter().rev().fold(ring.zero(), |acc, &c| &(&acc * &x) + &ring.from_i64(c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    /// The lifted root is among the roots found by exhaustive scan.
    #[test]
    fn integer_lift_is_a_scanned_root(idx in 0usize..9, x in -40i64..40, y in -40i64..40) {
        prop_assume!(x.gcd(&y) == 1);
        let entry = &catalog_negative()[idx];
        let form = entry.form();
        let m = form.evaluate(&Element::from(x), &Element::from(y)).unwrap();
        let rep = Representation::new(Element::from(x), Element::from(y), Element::from(1));
        let l = lift(form, &rep).unwrap();
        prop_assert_eq!(&l.m, &m);
        let z = l.z0.as_int().unwrap().mod_floor(m.as_int().unwrap());
        let roots = roots_mod(form, m.as_int().unwrap()).unwrap();
        prop_assert!(roots.contains(&z), "z = {} not in {:?}", z, roots);
    }

    /// Every scanned root of a small modulus over F_5 descends to a proper
    /// representation.
    #[test]
    fn every_poly_root_descends(h in 2i64..4, m in prop::collection::vec(0i64..5, 2..4)) {
        let ring = Ring::poly_fp(5).unwrap();
        let mut coeffs = m.clone();
        coeffs.push(1);
        let m = poly(ring, &coeffs);
        let form = QuadraticForm::new(ring.zero(), ring.from_i64(h)).unwrap();
        let deg = m.degree().unwrap() as u32;
        for z in poly_roots_mod(&form, &m, deg - 1).unwrap() {
            let rep = descend_poly_form(&form, &m, &z).unwrap();
            prop_assert!(form.is_proper_representation(&m, &rep));
        }
    }
}

#[test]
fn root_lists_match_known_values() {
    let q = QuadraticForm::integer(1, 5);
    assert_eq!(roots_mod(&q, &BigInt::from(251)).unwrap(), vec![BigInt::from(52), BigInt::from(198)]);
    let q = QuadraticForm::integer(0, 1);
    assert_eq!(roots_mod(&q, &BigInt::from(13)).unwrap(), vec![BigInt::from(5), BigInt::from(8)]);
}
