mod common;

use std::collections::{BTreeSet, HashMap};

use common::read_data;
use proptest::prelude::*;
use splitlat::io::PosetDoc;
use splitlat::lattice::IdealLattice;
use splitlat::tableaux::{
    alphabet, block_width, decrement_color, enumerate_littelmann, enumerate_tableaux, from_littelmann,
    is_g_semistandard, is_g_semistandard_of_shape, is_littelmann, tableau_lattice, tableauwt, to_littelmann, wt_lit,
    TableauError,
};
use splitlat::{semistandard_poset, Algebra, Color, HighestWeight, LittelmannTableau, Order, Tableau, TableauMap, Weight};

fn t(s: &str) -> Tableau {
    s.parse().unwrap()
}

/// Ordinary semistandard Young tableaux of shape `(a + b, b)` in `{1,2,3}`,
/// written as columns.
fn ssyt_a2(a: u32, b: u32) -> BTreeSet<Tableau> {
    let (a, b) = (a as usize, b as usize);
    let rows = |len: usize| -> Vec<Vec<u8>> {
        let mut out = vec![vec![]];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|r: Vec<u8>| {
                    let lo = *r.last().unwrap_or(&1);
                    (lo..=3).map(move |x| {
                        let mut r = r.clone();
                        r.push(x);
                        r
                    })
                })
                .collect();
        }
        out
    };
    let mut out = BTreeSet::new();
    for top in rows(a + b) {
        for bottom in rows(b) {
            if (0..b).all(|i| top[i] < bottom[i]) {
                let mut cols: Vec<Vec<u8>> = (0..b).map(|i| vec![top[i], bottom[i]]).collect();
                cols.extend((b..a + b).map(|i| vec![top[i]]));
                out.insert(Tableau::new(cols));
            }
        }
    }
    out
}

#[test]
fn a2_tableaux_are_ordinary_semistandard_tableaux() {
    for a in 0..=4 {
        for b in 0..=4 {
            let ours: BTreeSet<Tableau> =
                enumerate_tableaux(Algebra::A2, HighestWeight::new(a, b)).unwrap().into_iter().collect();
            assert_eq!(ours, ssyt_a2(a, b), "({a},{b})");
        }
    }
}

#[test]
fn tableau_counts_match_lattice_sizes() {
    for g in Algebra::SIMPLE {
        for a in 0..=3 {
            for b in 0..=3 {
                let lam = HighestWeight::new(a, b);
                let p = semistandard_poset(g, Order::BetaAlpha, lam);
                let n = IdealLattice::of_grid(&p, 1 << 20).unwrap().len();
                assert_eq!(enumerate_tableaux(g, lam).unwrap().len(), n, "{g} ({lam})");
            }
        }
    }
}

#[test]
fn small_counts() {
    let count = |g, a, b| enumerate_tableaux(g, HighestWeight::new(a, b)).unwrap().len();
    assert_eq!(count(Algebra::C2, 1, 1), 16);
    assert_eq!(count(Algebra::C2, 0, 1), 5);
    assert_eq!(count(Algebra::G2, 1, 0), 7);
    assert_eq!(count(Algebra::G2, 0, 1), 14);
    assert_eq!(count(Algebra::G2, 0, 0), 1);
}

#[test]
fn admissibility_rules() {
    let c2 = Algebra::C2;
    assert_eq!(is_g_semistandard(c2, &t("[1,4]")), Ok(false));
    assert_eq!(is_g_semistandard(c2, &t("[2,3]")), Ok(true));
    assert_eq!(is_g_semistandard(c2, &t("[2,3][2,3]")), Ok(false));
    assert_eq!(is_g_semistandard(c2, &t("[1,2][2]")), Ok(true));
    assert_eq!(is_g_semistandard(c2, &t("[2,3][1]")), Ok(false));
    let g2 = Algebra::G2;
    assert_eq!(is_g_semistandard(g2, &t("[4][4]")), Ok(false));
    assert_eq!(is_g_semistandard(g2, &t("[4][5]")), Ok(true));
    assert_eq!(is_g_semistandard(g2, &t("[3,4]")), Ok(false));
    assert_eq!(is_g_semistandard(g2, &t("[1,7][4,7]")), Ok(false));
    assert_eq!(is_g_semistandard(g2, &t("[1,7][5,7]")), Ok(true));
    assert_eq!(is_g_semistandard(g2, &t("[1,6][2]")), Ok(false));
    assert_eq!(is_g_semistandard(g2, &t("[1,6][3]")), Ok(true));
    assert_eq!(is_g_semistandard(Algebra::A2, &t("[2,1]")), Ok(false));
}

#[test]
fn malformed_tableaux_are_errors() {
    assert_eq!(alphabet(Algebra::A1A1), Err(TableauError::Unsupported(Algebra::A1A1)));
    assert_eq!(is_g_semistandard(Algebra::A2, &t("[4]")), Err(TableauError::Alphabet { entry: 4, max: 3 }));
    assert!(matches!(is_g_semistandard(Algebra::A2, &t("[1][1,2]")), Err(TableauError::Shape { index: 1, .. })));
    assert!(matches!(
        is_g_semistandard_of_shape(Algebra::A2, HighestWeight::new(1, 1), &t("[1]")),
        Err(TableauError::ColumnCount { got: 1, .. })
    ));
    assert!(matches!(
        is_g_semistandard_of_shape(Algebra::A2, HighestWeight::new(0, 2), &t("[1,2][1]")),
        Err(TableauError::Shape { index: 1, expected: 2, .. })
    ));
    assert!("[1,2".parse::<Tableau>().is_err());
    assert!("[x]".parse::<Tableau>().is_err());
}

#[test]
fn tableau_text_round_trips() {
    let x = t("[1,2][1,3][2]");
    assert_eq!(x.to_string(), "[1,2][1,3][2]");
    assert_eq!(x.shape(), Some(HighestWeight::new(1, 2)));
    assert_eq!(x.count(1), 2);
    assert_eq!(t(" [1, 2] [3] "), t("[1,2][3]"));
}

#[test]
fn top_tableau_has_the_highest_weight() {
    for g in Algebra::SIMPLE {
        let lam = HighestWeight::new(2, 3);
        let tl = tableau_lattice(g, lam);
        let top = tl.graph.poset.maximal();
        assert_eq!(top.len(), 1);
        assert_eq!(tl.tableaux[top[0]], t("[1,2][1,2][1,2][1][1]"));
        assert_eq!(tableauwt(g, &tl.tableaux[top[0]]), lam.weight());
    }
}

#[test]
fn decrement_colors() {
    assert_eq!(decrement_color(Algebra::A2, 1), Color::Alpha);
    assert_eq!(decrement_color(Algebra::A2, 2), Color::Beta);
    assert_eq!(decrement_color(Algebra::C2, 3), Color::Alpha);
    assert_eq!(decrement_color(Algebra::G2, 4), Color::Alpha);
    assert_eq!(decrement_color(Algebra::G2, 5), Color::Beta);
}

/// The frozen C2 (1,1) lattice with its tableau labels.
#[test]
fn c2_lattice_labels() {
    let doc = PosetDoc::parse(&read_data("ss_ba_c2_1_1_lattice.json")).unwrap();
    let labels: HashMap<i64, Tableau> =
        doc.labels.as_ref().unwrap().iter().map(|l| (l.id, t(&l.tableau))).collect();
    let printed = match doc.to_object().unwrap() {
        splitlat::io::PosetObject::Edge(e) => e,
        _ => panic!(),
    };
    let tl = tableau_lattice(Algebra::C2, HighestWeight::new(1, 1));
    let index: HashMap<&Tableau, usize> = tl.tableaux.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let ids = printed.poset.ids();
    let mut mapped: Vec<_> = printed
        .colored_covers()
        .map(|(u, v, c)| (index[&labels[&ids[u]]], index[&labels[&ids[v]]], c))
        .collect();
    mapped.sort_unstable();
    let mut native: Vec<_> = tl.graph.colored_covers().collect();
    native.sort_unstable();
    assert_eq!(mapped, native);
}

#[test]
fn ideal_tableau_bijection() {
    for g in Algebra::SIMPLE {
        for (a, b) in [(1, 1), (2, 0), (0, 2), (2, 3)] {
            let lam = HighestWeight::new(a, b);
            let map = TableauMap::new(g, lam).unwrap();
            let l = IdealLattice::of_grid(&map.layout.grid, 1 << 20).unwrap();
            let mut seen = BTreeSet::new();
            for s in 0..l.len() {
                let ideal = l.vertices(s);
                let x = map.tableau_of_ideal(&ideal).unwrap();
                assert_eq!(is_g_semistandard_of_shape(g, lam, &x), Ok(true), "{g} {x}");
                assert_eq!(map.ideal_of_tableau(&x).unwrap(), ideal);
                assert_eq!(tableauwt(g, &x), l.weight(s));
                seen.insert(x);
            }
            assert_eq!(seen.len(), l.len());
        }
    }
    assert!(TableauMap::new(Algebra::A1A1, HighestWeight::new(1, 1)).is_err());
    let map = TableauMap::new(Algebra::C2, HighestWeight::new(1, 1)).unwrap();
    assert_eq!(map.ideal_of_tableau(&t("[2,3][1]")), Err(TableauError::NotAdmissible));
}

#[test]
fn littelmann_blocks() {
    assert_eq!((block_width(Algebra::A2), block_width(Algebra::C2), block_width(Algebra::G2)), (Ok(1), Ok(2), Ok(6)));
    let u = to_littelmann(Algebra::C2, &t("[2,3][1]")).unwrap();
    assert_eq!(u.to_string(), "[1,3][2,4]|[1][1]");
    assert_eq!(u.to_string().parse::<LittelmannTableau>().unwrap(), u);
    assert_eq!(wt_lit(Algebra::C2, &u), Ok(Weight::new(1, 0)));
    assert_eq!(tableauwt(Algebra::C2, &t("[2,3][1]")), Weight::new(1, 0));
    let g = to_littelmann(Algebra::G2, &t("[4]")).unwrap();
    assert_eq!(g.to_string(), "[3][3][3][4][4][4]");
    assert!(wt_lit(Algebra::C2, &"[1][2]".parse().unwrap()).is_err());
    assert!(from_littelmann(Algebra::C2, &"[1][2]".parse().unwrap()).is_err());
    assert!(to_littelmann(Algebra::C2, &t("[1,4]")).is_err());
}

#[test]
fn littelmann_bijection() {
    for g in Algebra::SIMPLE {
        for a in 0..=3 {
            for b in 0..=3 {
                let lam = HighestWeight::new(a, b);
                let tabs = enumerate_tableaux(g, lam).unwrap();
                let mut images = Vec::new();
                for x in &tabs {
                    let u = to_littelmann(g, x).unwrap();
                    assert!(is_littelmann(g, &u), "{g} {x}");
                    assert_eq!(wt_lit(g, &u), Ok(tableauwt(g, x)));
                    assert_eq!(&from_littelmann(g, &u).unwrap(), x);
                    images.push(u);
                }
                images.sort();
                assert_eq!(images, enumerate_littelmann(g, lam).unwrap(), "{g} ({lam})");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn tableau_lattice_is_the_ideal_lattice(g in 0..3usize, a in 0u32..3, b in 0u32..3) {
        let g = Algebra::SIMPLE[g];
        let lam = HighestWeight::new(a, b);
        let tl = tableau_lattice(g, lam);
        let l = IdealLattice::of_grid(&semistandard_poset(g, Order::BetaAlpha, lam), 1 << 20).unwrap();
        prop_assert!(splitlat::iso::edge_colored_isomorphic(&tl.graph, l.graph()));
    }
}
