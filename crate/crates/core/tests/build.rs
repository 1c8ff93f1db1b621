mod common;

use common::read_data;
use splitlat::build::{chain_lattice, join_irreducibles, piece_sequence, semistandard_layout};
use splitlat::io::PosetDoc;
use splitlat::iso::vertex_colored_isomorphic;
use splitlat::lattice::IdealLattice;
use splitlat::{
    fundamental_poset, semistandard_poset, semistandard_poset_oracle, Algebra, Color, Fundamental, HighestWeight,
    Order,
};

#[test]
fn built_posets_match_the_frozen_fixtures() {
    let cases = [
        ("ss_ba_a1a1_2_2.json", Algebra::A1A1, Order::BetaAlpha, (2, 2)),
        ("ss_ab_a1a1_2_2.json", Algebra::A1A1, Order::AlphaBeta, (2, 2)),
        ("ss_ba_a2_2_2.json", Algebra::A2, Order::BetaAlpha, (2, 2)),
        ("ss_ab_a2_2_2.json", Algebra::A2, Order::AlphaBeta, (2, 2)),
        ("ss_ba_c2_2_2.json", Algebra::C2, Order::BetaAlpha, (2, 2)),
        ("ss_ab_c2_2_2.json", Algebra::C2, Order::AlphaBeta, (2, 2)),
        ("ss_ba_g2_2_2.json", Algebra::G2, Order::BetaAlpha, (2, 2)),
        ("ss_ab_g2_2_2.json", Algebra::G2, Order::AlphaBeta, (2, 2)),
        ("ss_ba_c2_1_1.json", Algebra::C2, Order::BetaAlpha, (1, 1)),
    ];
    for (file, g, o, (a, b)) in cases {
        let p = semistandard_poset(g, o, HighestWeight::new(a, b));
        assert_eq!(PosetDoc::from_grid(&p).to_json(), read_data(file).trim_end(), "{file}");
    }
}

#[test]
fn fundamental_lattice_sizes() {
    let sizes = [(Algebra::A1A1, 2, 2), (Algebra::A2, 3, 3), (Algebra::C2, 4, 5), (Algebra::G2, 7, 14)];
    for (g, na, nb) in sizes {
        let la = IdealLattice::of_grid(&fundamental_poset(g, Fundamental::Alpha), 100).unwrap();
        let lb = IdealLattice::of_grid(&fundamental_poset(g, Fundamental::Beta), 100).unwrap();
        assert_eq!((la.len(), lb.len()), (na, nb), "{g}");
    }
}

#[test]
fn fundamental_posets_agree_with_the_oracle() {
    for g in Algebra::ALL {
        for f in [Fundamental::Alpha, Fundamental::Beta] {
            let p = fundamental_poset(g, f);
            let q = semistandard_poset_oracle(g, f.weight());
            assert!(vertex_colored_isomorphic(p.base(), &q), "{g} {f:?}");
        }
    }
}

#[test]
fn beta_alpha_posets_agree_with_the_oracle() {
    for g in Algebra::ALL {
        for a in 0..=3 {
            for b in 0..=3 {
                let lam = HighestWeight::new(a, b);
                let p = semistandard_poset(g, Order::BetaAlpha, lam);
                let q = semistandard_poset_oracle(g, lam);
                assert!(vertex_colored_isomorphic(p.base(), &q), "{g} ({lam})");
            }
        }
    }
}

#[test]
fn alpha_beta_posets_are_recolored_duals() {
    for g in Algebra::ALL {
        for a in 0..=3 {
            for b in 0..=3 {
                let lam = HighestWeight::new(a, b);
                let ab = semistandard_poset(g, Order::AlphaBeta, lam);
                let ba = semistandard_poset(g, Order::BetaAlpha, lam);
                assert!(vertex_colored_isomorphic(ab.base(), ba.triangle_dual(g).base()), "{g} ({lam})");
            }
        }
    }
}

#[test]
fn piece_sequences() {
    use Fundamental::{Alpha as A, Beta as B};
    let lam = HighestWeight::new(2, 1);
    assert_eq!(piece_sequence(Order::BetaAlpha, lam), vec![B, A, A]);
    assert_eq!(piece_sequence(Order::AlphaBeta, lam), vec![A, A, B]);
    assert!(piece_sequence(Order::AlphaBeta, HighestWeight::new(0, 0)).is_empty());
}

#[test]
fn layout_records_piece_membership() {
    let layout = semistandard_layout(Algebra::G2, Order::BetaAlpha, HighestWeight::new(1, 2));
    assert_eq!(layout.pieces.len(), 3);
    let mut total = 0;
    for k in 0..3 {
        let verts = layout.piece_vertices(k);
        let f = fundamental_poset(Algebra::G2, layout.pieces[k]);
        assert_eq!(verts.len(), f.len());
        let sub = layout.grid.subgrid(&verts);
        assert!(vertex_colored_isomorphic(sub.base(), f.base()), "piece {k}");
        total += verts.len();
    }
    assert_eq!(total, layout.grid.len());
}

#[test]
fn empty_weight_gives_the_empty_poset() {
    for g in Algebra::ALL {
        let p = semistandard_poset(g, Order::BetaAlpha, HighestWeight::new(0, 0));
        assert!(p.is_empty());
        assert_eq!(IdealLattice::of_grid(&p, 10).unwrap().len(), 1);
    }
}

#[test]
fn join_irreducibles_of_a_chain_product() {
    let l = chain_lattice(2, Color::Alpha).product(&chain_lattice(1, Color::Beta));
    let j = join_irreducibles(&l);
    assert_eq!(j.len(), 3);
    assert_eq!(j.colors.iter().filter(|&&c| c == Color::Alpha).count(), 2);
}

#[test]
fn semistandard_pieces_are_fundamental() {
    let config = splitlat::verify::VerifyConfig { max_ab: 2, extra: vec![], ..Default::default() };
    let corpus = splitlat::verify::Corpus::build(config).unwrap();
    assert_eq!(splitlat::verify::check_pieces(&corpus), Ok(()));
}
