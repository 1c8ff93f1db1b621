mod common;

use proptest::prelude::*;
use splitlat::lattice::IdealLattice;
use splitlat::verify::{printed_a_rho, printed_a_rho_lambda};
use splitlat::weyl::{
    character_from_lattice, is_weyl_invariant, natural_rank, quasi_gaussian, quotient_of_products, rgf_from_lattice,
    rgf_product, simple_reflection, verify_weyl_character, InexactDivision, NaturalRankError, ParsePolyError,
};
use splitlat::{
    semistandard_poset, Algebra, Color, EdgeColoredPoset, HighestWeight, LaurentPoly2, Order, QPoly, RootData, Weight,
};

fn poly(s: &str) -> LaurentPoly2 {
    s.parse().unwrap()
}

fn lattice(g: Algebra, o: Order, a: u32, b: u32) -> IdealLattice {
    IdealLattice::of_grid(&semistandard_poset(g, o, HighestWeight::new(a, b)), 1 << 20).unwrap()
}

/// Weyl dimension formula, written out per algebra.
fn weyl_dimension(g: Algebra, a: i64, b: i64) -> i64 {
    match g {
        Algebra::A1A1 => (a + 1) * (b + 1),
        Algebra::A2 => (a + 1) * (b + 1) * (a + b + 2) / 2,
        Algebra::C2 => (a + 1) * (b + 1) * (a + b + 2) * (a + 2 * b + 3) / 6,
        Algebra::G2 => {
            (a + 1) * (b + 1) * (a + b + 2) * (a + 2 * b + 3) * (a + 3 * b + 4) * (2 * a + 3 * b + 5) / 120
        }
    }
}

#[test]
fn weyl_group_orders_and_roots() {
    for (g, order, roots) in [(Algebra::A1A1, 4, 2), (Algebra::A2, 6, 3), (Algebra::C2, 8, 4), (Algebra::G2, 12, 6)] {
        let rd = RootData::new(g);
        assert_eq!(rd.weyl_group.len(), order, "{g}");
        assert_eq!(rd.positive_roots.len(), roots, "{g}");
        assert!(rd.weyl_group.iter().all(|w| w.det().abs() == 1));
        assert_eq!(rd.weyl_group.iter().filter(|w| w.det() == -1).count(), order / 2);
    }
}

#[test]
fn simple_reflections_on_fundamental_weights() {
    assert_eq!(simple_reflection(Algebra::A1A1, Color::Alpha, Weight::new(3, 5)), Weight::new(-3, 5));
    assert_eq!(simple_reflection(Algebra::A2, Color::Alpha, Weight::new(1, 0)), Weight::new(-1, 1));
    assert_eq!(simple_reflection(Algebra::G2, Color::Beta, Weight::new(0, 1)), Weight::new(3, -1));
}

#[test]
fn alternating_sums_of_rho_match_the_printed_ones() {
    for g in Algebra::SIMPLE {
        let printed = poly(printed_a_rho(g).unwrap());
        let rd = RootData::new(g);
        assert_eq!(rd.alternating_sum(RootData::rho()), printed, "{g}");
        assert_eq!(printed.num_terms(), rd.weyl_group.len());
    }
    assert!(printed_a_rho(Algebra::A1A1).is_none());
}

#[test]
fn alternating_sums_match_the_printed_closed_forms() {
    for g in Algebra::SIMPLE {
        let rd = RootData::new(g);
        for a in 0..=6 {
            for b in 0..=6 {
                let lam = HighestWeight::new(a, b);
                assert_eq!(
                    rd.alternating_sum(RootData::rho() + lam.weight()),
                    printed_a_rho_lambda(g, lam).unwrap(),
                    "{g} ({lam})"
                );
            }
        }
    }
}

#[test]
fn fundamental_characters() {
    let chi = character_from_lattice(&lattice(Algebra::A2, Order::BetaAlpha, 1, 0));
    assert_eq!(chi, poly("x + x^{-1}y + y^{-1}"));
    let chi = character_from_lattice(&lattice(Algebra::C2, Order::BetaAlpha, 1, 0));
    assert_eq!(chi, poly("x + x^{-1}y + xy^{-1} + x^{-1}"));
    let chi = character_from_lattice(&lattice(Algebra::G2, Order::BetaAlpha, 1, 0));
    assert_eq!(chi.eval_one(), 7);
    assert_eq!(chi.coefficient(Weight::ZERO), 1);
}

#[test]
fn characters_satisfy_the_weyl_formula() {
    for g in Algebra::ALL {
        for o in Order::BOTH {
            for a in 0..=3 {
                for b in 0..=3 {
                    let lam = HighestWeight::new(a, b);
                    let chi = character_from_lattice(&lattice(g, o, a, b));
                    assert!(verify_weyl_character(g, lam, &chi), "{g} {} ({lam})", o.name());
                    assert!(is_weyl_invariant(g, &chi));
                    assert_eq!(chi.eval_one(), weyl_dimension(g, a as i64, b as i64));
                    assert_eq!(chi.coefficient(lam.weight()), 1);
                }
            }
        }
    }
}

#[test]
fn wrong_characters_are_rejected() {
    let chi = character_from_lattice(&lattice(Algebra::C2, Order::BetaAlpha, 1, 1));
    assert!(!verify_weyl_character(Algebra::C2, HighestWeight::new(1, 0), &chi));
    assert!(!verify_weyl_character(Algebra::G2, HighestWeight::new(1, 1), &chi));
    let mut broken = chi.clone();
    broken.add_term(Weight::ZERO, 1);
    assert!(!verify_weyl_character(Algebra::C2, HighestWeight::new(1, 1), &broken));
    assert!(!is_weyl_invariant(Algebra::C2, &poly("x")));
}

#[test]
fn laurent_parsing_and_display() {
    let p = poly("xy - x^{-1}y^{2} + 3x^2*y^-1 - 0x");
    assert_eq!(p.coefficient(Weight::new(1, 1)), 1);
    assert_eq!(p.coefficient(Weight::new(-1, 2)), -1);
    assert_eq!(p.coefficient(Weight::new(2, -1)), 3);
    assert_eq!(p.num_terms(), 3);
    assert_eq!(p.to_string(), "-1*x^-1*y^2 + 1*x^1*y^1 + 3*x^2*y^-1");
    assert_eq!(poly(&p.to_string()), p);
    assert_eq!(poly("0"), LaurentPoly2::zero());
    assert_eq!(LaurentPoly2::zero().to_string(), "0");
    assert_eq!(poly("-5"), LaurentPoly2::monomial(Weight::ZERO, -5));
    assert_eq!(poly("x^{-3}y^{1}"), poly("x^-3*y"));
    let e: ParsePolyError = "x^{2".parse::<LaurentPoly2>().unwrap_err();
    assert_eq!(e.pos, 4);
    assert!("".parse::<LaurentPoly2>().is_err());
    assert!("x y z".parse::<LaurentPoly2>().is_err());
    assert!("x-".parse::<LaurentPoly2>().is_err());
}

#[test]
fn laurent_arithmetic() {
    let x = poly("x");
    let xi = poly("x^{-1}");
    assert_eq!(&x * &xi, LaurentPoly2::one());
    assert_eq!(&(&x + &xi) - &xi, x);
    assert_eq!(&x + &(-&x), LaurentPoly2::zero());
    let sq = &(&x + &xi) * &(&x + &xi);
    assert_eq!(sq, poly("x^2 + 2 + x^{-2}"));
    assert_eq!(sq.map_exponents(|w| Weight::new(w.b, w.a)), poly("y^2 + 2 + y^{-2}"));
}

#[test]
fn q_polynomials() {
    let p = QPoly::new(vec![1, 2, 1, 0, 0]);
    assert_eq!(p.coeffs(), &[1, 2, 1]);
    assert_eq!(p.degree(), Some(2));
    assert_eq!(p.to_string(), "[1,2,1]");
    assert!(p.is_palindromic() && p.is_unimodal());
    assert!(!QPoly::new(vec![1, 0, 1]).is_unimodal());
    assert!(!QPoly::new(vec![1, 2]).is_palindromic());
    assert_eq!(QPoly::new(vec![1, 1]).div_one_minus_q_pow(1), Err(InexactDivision(1)));
    assert_eq!(QPoly::one_minus_q_pow(6).div_one_minus_q_pow(2).unwrap().coeffs(), &[1, 0, 1, 0, 1]);
    assert_eq!(QPoly::default().degree(), None);
    // five choose two
    assert_eq!(quotient_of_products(&[4, 5], &[1, 2]).unwrap().coeffs(), &[1, 1, 2, 2, 2, 1, 1]);
}

#[test]
fn rank_generating_functions() {
    let g22 = rgf_product(Algebra::G2, HighestWeight::new(2, 2)).unwrap();
    assert_eq!(g22.eval_one(), 729);
    assert_eq!(rgf_product(Algebra::G2, HighestWeight::new(3, 3)).unwrap().eval_one(), 4096);
    assert_eq!(rgf_product(Algebra::C2, HighestWeight::new(1, 1)).unwrap().eval_one(), 16);
    assert_eq!(rgf_from_lattice(&lattice(Algebra::G2, Order::AlphaBeta, 2, 2)), g22);
    for g in Algebra::ALL {
        for o in Order::BOTH {
            for a in 0..=3 {
                for b in 0..=3 {
                    let lam = HighestWeight::new(a, b);
                    let r = rgf_from_lattice(&lattice(g, o, a, b));
                    assert_eq!(r, rgf_product(g, lam).unwrap(), "{g} {} ({lam})", o.name());
                    assert!(r.is_palindromic() && r.is_unimodal());
                }
            }
        }
    }
}

#[test]
fn quasi_gaussian_values() {
    assert_eq!(quasi_gaussian(0).unwrap(), QPoly::one());
    assert_eq!(quasi_gaussian(1).unwrap().eval_one(), 14);
    for m in 0..=4 {
        let l = lattice(Algebra::G2, Order::BetaAlpha, 0, m);
        assert_eq!(rgf_from_lattice(&l), quasi_gaussian(m).unwrap(), "m={m}");
    }
}

#[test]
fn natural_rank_is_ideal_size() {
    for g in Algebra::ALL {
        let l = lattice(g, Order::AlphaBeta, 2, 1);
        let r = natural_rank(l.graph(), l.weights(), g).unwrap();
        assert_eq!(r.length as usize, l.source().len());
        for s in 0..l.len() {
            assert_eq!(r.ranks[s], l.size_of(s));
        }
    }
    let l = lattice(Algebra::G2, Order::BetaAlpha, 1, 1);
    assert!(natural_rank(l.graph(), l.weights(), Algebra::A2).is_err());
    let two_tops = EdgeColoredPoset::new(vec![0, 1, 2], vec![(0, 1, Color::Alpha), (0, 2, Color::Beta)]).unwrap();
    let w = vec![Weight::ZERO; 3];
    assert_eq!(natural_rank(&two_tops, &w, Algebra::A2).unwrap_err(), NaturalRankError::NoTop);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn alternating_sums_are_anti_invariant(g in 0..4usize, a in -6i64..6, b in -6i64..6) {
        let g = Algebra::ALL[g];
        let rd = RootData::new(g);
        let p = rd.alternating_sum(Weight::new(a, b));
        for c in Color::ALL {
            prop_assert_eq!(p.map_exponents(|w| simple_reflection(g, c, w)), -&p);
        }
    }

    #[test]
    fn product_formula_matches_the_dimension(g in 0..4usize, a in 0u32..8, b in 0u32..8) {
        let g = Algebra::ALL[g];
        let r = rgf_product(g, HighestWeight::new(a, b)).unwrap();
        prop_assert_eq!(r.eval_one(), weyl_dimension(g, a as i64, b as i64));
        prop_assert!(r.is_palindromic());
    }
}
