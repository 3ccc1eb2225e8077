use proptest::prelude::*;

use fsing_core::frobenius_ideals::bracket_power;
use fsing_core::parse::{parse_polynomial, parse_twisted};
use fsing_core::{
    FieldScalar, FiniteField, FrobeniusScalar, GradedHypersurface, Ideal, Matrix, Monomial, PolyRing, Polynomial, RingRef,
    SemilinearMap,
};

const P: u64 = 5;

fn ring3() -> RingRef {
    PolyRing::new(P, &["x", "y", "z"]).unwrap()
}

fn poly_strategy(max_deg: u64, max_terms: usize) -> impl Strategy<Value = Vec<([u64; 3], u64)>> {
    prop::collection::vec(([0..=max_deg, 0..=max_deg, 0..=max_deg], 0..P), 0..=max_terms)
}

fn build(r: &RingRef, terms: &[([u64; 3], u64)]) -> Polynomial {
    Polynomial::from_terms(r, terms.iter().map(|(e, c)| (Monomial::new(e.iter().copied()), *c)))
}

fn monomial_strategy() -> impl Strategy<Value = [u64; 3]> {
    [0u64..4, 0u64..4, 0u64..4]
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn parse_print_round_trip(t in poly_strategy(6, 8)) {
        let r = ring3();
        let f = build(&r, &t);
        let back = parse_polynomial(&f.to_string(), &r).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn normal_form_is_linear(a in poly_strategy(4, 5), b in poly_strategy(4, 5), c in 1..P) {
        let r = ring3();
        let i = Ideal::new(&r, ["x^2 - y*z", "y^3 + x*z", "z^2 + x*y"].map(|s| parse_polynomial(s, &r).unwrap())).unwrap();
        let gb = i.groebner_basis().unwrap();
        let (f, g) = (build(&r, &a), build(&r, &b));
        let lhs = gb.normal_form(&(f.scale(c) + g.clone()));
        let rhs = gb.normal_form(&f).scale(c) + gb.normal_form(&g);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn monomial_colon_matches_combinatorics(gens in prop::collection::vec(monomial_strategy(), 1..4), g in monomial_strategy()) {
        let r = ring3();
        let mono = |e: &[u64; 3]| Polynomial::monomial(&r, Monomial::new(e.iter().copied()), 1);
        let i = Ideal::new(&r, gens.iter().map(mono)).unwrap();
        let gm = Monomial::new(g.iter().copied());
        // (m_i) : g = (m_i / gcd(m_i, g)).
        let expected = Ideal::new(&r, gens.iter().map(|e| {
            let m = Monomial::new(e.iter().copied());
            Polynomial::monomial(&r, m.div(&m.gcd(&gm)).unwrap(), 1)
        })).unwrap();
        let colon = i.quotient_by(&mono(&g)).unwrap();
        prop_assert!(colon.equals(&expected).unwrap());
    }

    #[test]
    fn combinations_are_members(cs in prop::collection::vec(poly_strategy(2, 3), 3)) {
        let r = ring3();
        let gens = ["x^2 + y^2 - z^2", "x*y*z - 1", "y^3 - x"].map(|s| parse_polynomial(s, &r).unwrap());
        let i = Ideal::new(&r, gens.clone()).unwrap();
        let h = gens.iter().zip(&cs).fold(Polynomial::zero(&r), |acc, (g, c)| acc + build(&r, c) * g.clone());
        prop_assert!(i.contains_poly(&h).unwrap());
        let gb = i.groebner_basis().unwrap();
        prop_assert!(gb.satisfies_buchberger_criterion());
    }

    #[test]
    fn bracket_power_properties(a in poly_strategy(2, 3), b in poly_strategy(2, 3)) {
        let r = ring3();
        let (f, g) = (build(&r, &a), build(&r, &b));
        // Frobenius is a ring map.
        prop_assert_eq!((f.clone() * g.clone()).frobenius(1).unwrap(), f.frobenius(1).unwrap() * g.frobenius(1).unwrap());
        prop_assert_eq!((f.clone() + g.clone()).frobenius(1).unwrap(), f.frobenius(1).unwrap() + g.frobenius(1).unwrap());
        let i = Ideal::new(&r, [f.clone(), g.clone()]).unwrap();
        if !i.is_zero_ideal() {
            let b1 = bracket_power(&i, 1).unwrap();
            let b2 = bracket_power(&i, 2).unwrap();
            prop_assert!(bracket_power(&b1, 1).unwrap().equals(&b2).unwrap());
            prop_assert!(i.contains(&b1).unwrap());
            prop_assert!(b1.contains_poly(&(f + g).frobenius(1).unwrap()).unwrap());
        }
    }
}

fn field_matrix(k: &fsing_core::FieldRef, n: usize, idx: &[u128]) -> Matrix<FieldScalar> {
    let rows = (0..n).map(|i| (0..n).map(|j| k.element(idx[i * n + j] % k.order())).collect()).collect();
    Matrix::from_rows(rows).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn iterate_is_repeated_application(idx in prop::collection::vec(0u128..81, 9), v in prop::collection::vec(0u128..81, 3), r in 1u32..5) {
        let k = FiniteField::extension(3, 2).unwrap();
        let map = SemilinearMap::new(field_matrix(&k, 3, &idx), 1).unwrap();
        let v: Vec<FieldScalar> = v.iter().map(|&i| k.element(i)).collect();
        let mut w = v.clone();
        for _ in 0..r {
            w = map.apply(&w).unwrap();
        }
        prop_assert_eq!(map.iterate(r).unwrap().apply(&v).unwrap(), w);
    }

    #[test]
    fn base_change_conjugates(idx in prop::collection::vec(0u128..25, 4), cidx in prop::collection::vec(0u128..25, 4), v in prop::collection::vec(0u128..25, 2)) {
        let k = FiniteField::extension(5, 2).unwrap();
        let c = field_matrix(&k, 2, &cidx);
        prop_assume!(!c.determinant().unwrap().is_zero());
        let map = SemilinearMap::new(field_matrix(&k, 2, &idx), 1).unwrap();
        let b = map.base_change(&c).unwrap();
        let w: Vec<FieldScalar> = v.iter().map(|&i| k.element(i)).collect();
        // C * phi_B(w) = phi_A(C w)
        let lhs = c.mul_vec(&b.apply(&w).unwrap()).unwrap();
        let rhs = map.apply(&c.mul_vec(&w).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn iterate_determinant_is_twisted_product(coeffs in prop::collection::vec((0u64..3, 0u64..3), 4), r in 1u32..4) {
        let k = FiniteField::prime(3).unwrap();
        let entries: Vec<String> = coeffs.iter().map(|(a, b)| format!("{a}*x + {b}")).collect();
        let a = Matrix::from_rows(vec![
            vec![parse_twisted(&entries[0], &k).unwrap(), parse_twisted(&entries[1], &k).unwrap()],
            vec![parse_twisted(&entries[2], &k).unwrap(), parse_twisted(&entries[3], &k).unwrap()],
        ]).unwrap();
        let map = SemilinearMap::new(a.clone(), 1).unwrap();
        let det = a.determinant().unwrap();
        let expected = (0..r).fold(det.one_like(), |acc, i| acc * det.frobenius_power(3u64.pow(i)));
        prop_assert_eq!(map.iterate_matrix(r).unwrap().determinant().unwrap(), expected);
    }

    #[test]
    fn cohomology_frobenius_is_additive_and_scales_degree(
        a in monomial_strategy(), b in monomial_strategy(), ca in 1..P, cb in 1..P, da in [1u64..4, 1u64..4],
    ) {
        let r = ring3();
        let h = GradedHypersurface::new(&parse_polynomial("x^4+y^4-z^4", &r).unwrap()).unwrap();
        let mono = |e: &[u64; 3], c: u64| Polynomial::monomial(&r, Monomial::new(e.iter().copied()), c);
        let s = h.class_from_fraction(&mono(&a, ca), &da).unwrap();
        let t = h.class_from_fraction(&mono(&b, cb), &da).unwrap();
        let sum = h.class_from_fraction(&(mono(&a, ca) + mono(&b, cb)), &da).unwrap();
        prop_assert_eq!(&sum, &s.add(&t));
        prop_assert_eq!(h.frobenius_on_class(&sum), h.frobenius_on_class(&s).add(&h.frobenius_on_class(&t)));
        if let Some(d) = s.degree() {
            let image = h.frobenius_on_class(&s);
            prop_assert!(image.is_zero() || image.degree() == Some(d * P as i64));
        }
    }
}
