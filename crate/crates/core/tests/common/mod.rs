#![allow(dead_code)]

use std::path::PathBuf;

use proptest::prelude::*;
use splitlat::io::{PosetDoc, PosetObject};
use splitlat::{Color, EdgeColoredPoset, GridPoset, Poset, VertexColoredPoset};

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

pub fn read_data(name: &str) -> String {
    std::fs::read_to_string(data_path(name)).unwrap()
}

pub fn load(name: &str) -> PosetObject {
    PosetDoc::parse(&read_data(name)).unwrap().to_object().unwrap()
}

pub fn load_grid(name: &str) -> GridPoset {
    match load(name) {
        PosetObject::Grid(g) => g,
        _ => panic!("{name} is not a grid"),
    }
}

pub fn load_edge(name: &str) -> EdgeColoredPoset {
    match load(name) {
        PosetObject::Edge(e) => e,
        _ => panic!("{name} is not edge-colored"),
    }
}

/// Covers of the transitive closure of `rel` on `0..n`.
pub fn hasse(n: usize, rel: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut reach = vec![vec![false; n]; n];
    for &(u, v) in rel {
        reach[u][v] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if reach[i][k] {
                for j in 0..n {
                    if reach[k][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
    }
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if reach[i][j] && !(0..n).any(|k| reach[i][k] && reach[k][j]) {
                out.push((i, j));
            }
        }
    }
    out
}

/// Every down-closed subset, as bitmasks, by exhausting all subsets.
pub fn brute_force_ideals(p: &Poset) -> Vec<u32> {
    let n = p.len();
    assert!(n <= 20);
    (0u32..1 << n)
        .filter(|&s| p.covers().iter().all(|&(u, v)| s >> v & 1 == 0 || s >> u & 1 == 1))
        .collect()
}

/// The colored ideal lattice built from the brute-force ideal list.
pub fn brute_force_lattice(p: &VertexColoredPoset) -> EdgeColoredPoset {
    let ideals = brute_force_ideals(&p.poset);
    let index: std::collections::HashMap<u32, usize> = ideals.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let mut covers = Vec::new();
    for (i, &s) in ideals.iter().enumerate() {
        for v in 0..p.len() {
            if s >> v & 1 == 0 {
                if let Some(&j) = index.get(&(s | 1 << v)) {
                    covers.push((i, j, p.colors[v]));
                }
            }
        }
    }
    EdgeColoredPoset::new((0..ideals.len() as i64).collect(), covers).unwrap()
}

pub fn arb_color() -> impl Strategy<Value = Color> {
    prop_oneof![Just(Color::Alpha), Just(Color::Beta)]
}

/// Random vertex-colored posets on up to `max_n` vertices.
pub fn arb_colored_poset(max_n: usize) -> impl Strategy<Value = VertexColoredPoset> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = proptest::collection::vec((0..n, 0..n), 0..2 * n);
        let colors = proptest::collection::vec(arb_color(), n);
        (Just(n), pairs, colors).prop_map(|(n, pairs, colors)| {
            let rel: Vec<_> = pairs.into_iter().filter(|(u, v)| u < v).collect();
            let poset = Poset::new((0..n as i64).collect(), hasse(n, &rel)).unwrap();
            VertexColoredPoset::new(poset, colors).unwrap()
        })
    })
}
