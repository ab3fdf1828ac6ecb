use cuspcurve::curvealg::{bounded_intersection_number, local_intersection_number};
use cuspcurve::exactpoly::upoly::{univariate_resultant, RPoly};
use cuspcurve::exactpoly::{poly, Monomial, MultiPoly, Rational, Var};
use proptest::prelude::*;

fn term(max_deg: u32, vars: usize) -> impl Strategy<Value = (Monomial, Rational)> {
    (prop::collection::vec(0..=max_deg, vars), -6i64..=6, 1i64..=3).prop_map(move |(e, n, d)| {
        let mut exps = [0u32; 3];
        for (i, k) in e.into_iter().enumerate() {
            exps[i] = k;
        }
        (Monomial(exps), Rational::new(n.into(), d.into()))
    })
}

/// Polynomials in the first `vars` variables with partial degrees at most `max_deg`.
fn poly_in(max_deg: u32, vars: usize, max_terms: usize) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(term(max_deg, vars), 0..=max_terms).prop_map(MultiPoly::from_terms)
}

/// Affine germs through the origin.
fn germ() -> impl Strategy<Value = MultiPoly> {
    poly_in(3, 2, 4).prop_map(|p| &p - &MultiPoly::constant(p.constant_term()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn display_parses_back(p in poly_in(4, 3, 6)) {
        prop_assert_eq!(poly(&p.to_string()), p);
    }

    #[test]
    fn homogenize_then_dehomogenize(p in poly_in(3, 2, 5)) {
        let h = p.homogenize();
        prop_assert!(h.is_zero() || h.is_homogeneous());
        prop_assert_eq!(h.specialize(Var::Z, &Rational::from_integer(1.into())), p);
    }

    #[test]
    fn gcd_divides_both(p in poly_in(2, 3, 4), q in poly_in(2, 3, 4), r in poly_in(1, 3, 3)) {
        prop_assume!(!p.is_zero() && !q.is_zero() && !r.is_zero());
        let (pr, qr) = (&p * &r, &q * &r);
        let g = pr.gcd(&qr);
        prop_assert!(g.divides(&pr) && g.divides(&qr));
        prop_assert!(r.divides(&g));
    }

    #[test]
    fn modular_resultant_matches_sylvester(a in poly_in(3, 2, 5), b in poly_in(3, 2, 5)) {
        prop_assume!(a.degree_in(Var::Y) > 0 && b.degree_in(Var::Y) > 0);
        let fast = univariate_resultant(&a, &b, Var::X, Var::Y);
        let slow = RPoly::from_multipoly(&a.resultant_wrt(&b, Var::Y), Var::X);
        // equal up to a nonzero rational factor
        prop_assert_eq!(fast.is_zero(), slow.is_zero());
        if !fast.is_zero() {
            prop_assert_eq!(fast.scale(&slow.lc()), slow.scale(&fast.lc()));
        }
    }

    #[test]
    fn truncated_reduction_agrees(f in germ(), g in germ()) {
        prop_assume!(!f.is_zero() && !g.is_zero() && f.gcd(&g).is_constant());
        let full = local_intersection_number(&f, &g);
        let bezout = f.total_degree().unwrap() * g.total_degree().unwrap();
        prop_assert!(full <= bezout);
        prop_assert_eq!(bounded_intersection_number(&f, &g, bezout), full);
        prop_assert_eq!(local_intersection_number(&g, &f), full);
    }
}
