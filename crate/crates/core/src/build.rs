//! Fundamental posets and the two concatenation builders.

use crate::algebra::{Algebra, Fundamental, HighestWeight, Order};
use crate::color::Color;
use crate::grid::GridPoset;
use crate::poset::{transitive_reduction, EdgeColoredPoset, Poset, VertexColoredPoset};

/// Vertices listed in total order (top of chain 1 first). Covers are local
/// `(lower, upper)` pairs.
struct Fixture {
    colors: &'static str,
    chains: &'static [u32],
    covers: &'static [(usize, usize)],
}

const A1A1_ALPHA: Fixture = Fixture { colors: "a", chains: &[1], covers: &[] };
const A1A1_BETA: Fixture = Fixture { colors: "b", chains: &[1], covers: &[] };
const A2_ALPHA: Fixture = Fixture { colors: "ab", chains: &[1, 2], covers: &[(1, 0)] };
const A2_BETA: Fixture = Fixture { colors: "ba", chains: &[1, 2], covers: &[(1, 0)] };
const C2_ALPHA: Fixture = Fixture { colors: "aba", chains: &[1, 2, 3], covers: &[(1, 0), (2, 1)] };
const C2_BETA: Fixture = Fixture {
    colors: "baab",
    chains: &[1, 2, 2, 3],
    covers: &[(1, 0), (2, 1), (3, 2)],
};
const G2_ALPHA: Fixture = Fixture {
    colors: "abaaba",
    chains: &[1, 2, 3, 3, 4, 5],
    covers: &[(1, 0), (2, 1), (3, 2), (4, 3), (5, 4)],
};
const G2_BETA: Fixture = Fixture {
    colors: "baaabbaaab",
    chains: &[1, 2, 2, 2, 3, 3, 4, 4, 4, 5],
    covers: &[
        (1, 0),
        (2, 1),
        (3, 2),
        (4, 2),
        (5, 3),
        (5, 4),
        (6, 4),
        (7, 5),
        (7, 6),
        (8, 7),
        (9, 8),
    ],
};

fn fixture(g: Algebra, which: Fundamental) -> &'static Fixture {
    match (g, which) {
        (Algebra::A1A1, Fundamental::Alpha) => &A1A1_ALPHA,
        (Algebra::A1A1, Fundamental::Beta) => &A1A1_BETA,
        (Algebra::A2, Fundamental::Alpha) => &A2_ALPHA,
        (Algebra::A2, Fundamental::Beta) => &A2_BETA,
        (Algebra::C2, Fundamental::Alpha) => &C2_ALPHA,
        (Algebra::C2, Fundamental::Beta) => &C2_BETA,
        (Algebra::G2, Fundamental::Alpha) => &G2_ALPHA,
        (Algebra::G2, Fundamental::Beta) => &G2_BETA,
    }
}

fn fixture_colors(f: &Fixture) -> Vec<Color> {
    f.colors.chars().map(|c| Color::parse(&c.to_string()).unwrap()).collect()
}

/// The fundamental poset for `g` and `which`, vertices in total order with ids `1..=n`.
pub fn fundamental_poset(g: Algebra, which: Fundamental) -> GridPoset {
    let f = fixture(g, which);
    let n = f.chains.len();
    let poset = Poset::from_sorted_unchecked((1..=n as i64).collect(), f.covers.to_vec());
    let base = VertexColoredPoset { poset, colors: fixture_colors(f) };
    GridPoset::new(base, f.chains.to_vec()).expect("fixture chains are positive")
}

/// A semistandard poset together with where each vertex came from.
#[derive(Clone, Debug)]
pub struct SemistandardLayout {
    pub algebra: Algebra,
    pub order: Order,
    pub weight: HighestWeight,
    /// Vertices in total order, ids `1..=n`.
    pub grid: GridPoset,
    /// Piece types from the bottom piece up.
    pub pieces: Vec<Fundamental>,
    /// `(piece, local index)` for each vertex of `grid`.
    pub origin: Vec<(usize, usize)>,
}

impl SemistandardLayout {
    /// Parent vertices of piece `k`, in local order.
    pub fn piece_vertices(&self, k: usize) -> Vec<usize> {
        let len = fixture(self.algebra, self.pieces[k]).chains.len();
        let mut out = vec![usize::MAX; len];
        for (v, &(p, i)) in self.origin.iter().enumerate() {
            if p == k {
                out[i] = v;
            }
        }
        out
    }
}

pub fn piece_sequence(order: Order, lam: HighestWeight) -> Vec<Fundamental> {
    let (a, b) = (lam.a as usize, lam.b as usize);
    let mut out = Vec::with_capacity(a + b);
    match order {
        Order::BetaAlpha => {
            out.extend(std::iter::repeat_n(Fundamental::Beta, b));
            out.extend(std::iter::repeat_n(Fundamental::Alpha, a));
        }
        Order::AlphaBeta => {
            out.extend(std::iter::repeat_n(Fundamental::Alpha, a));
            out.extend(std::iter::repeat_n(Fundamental::Beta, b));
        }
    }
    out
}

/// Stacks the pieces bottom to top. Pieces of the upper type sit one chain
/// further out than those of the lower type; a vertex lies below every vertex
/// of a later piece on the same chain.
pub fn semistandard_layout(g: Algebra, order: Order, lam: HighestWeight) -> SemistandardLayout {
    let pieces = piece_sequence(order, lam);
    let lower_type = pieces.first().copied();
    let mut colors = Vec::new();
    let mut chain = Vec::new();
    let mut origin = Vec::new();
    let mut relations = Vec::new();
    for (k, &t) in pieces.iter().enumerate() {
        let f = fixture(g, t);
        let start = colors.len();
        let shift = u32::from(Some(t) != lower_type);
        colors.extend(fixture_colors(f));
        chain.extend(f.chains.iter().map(|&c| c + shift));
        origin.extend((0..f.chains.len()).map(|i| (k, i)));
        relations.extend(f.covers.iter().map(|&(u, v)| (start + u, start + v)));
    }
    let n = colors.len();
    for u in 0..n {
        for w in 0..n {
            if origin[u].0 < origin[w].0 && chain[u] == chain[w] {
                relations.push((u, w));
            }
        }
    }
    let covers = transitive_reduction(n, &relations);
    let poset = Poset::from_sorted_unchecked((0..n as i64).collect(), covers);
    let raw = GridPoset::new(VertexColoredPoset { poset, colors }, chain).expect("chains are positive");
    let perm = raw.total_order();
    let grid = raw.canonical();
    SemistandardLayout {
        algebra: g,
        order,
        weight: lam,
        grid,
        pieces,
        origin: perm.iter().map(|&v| origin[v]).collect(),
    }
}

pub fn semistandard_poset(g: Algebra, order: Order, lam: HighestWeight) -> GridPoset {
    semistandard_layout(g, order, lam).grid
}

/// Join-irreducibles of a finite lattice, colored by the color of their
/// unique lower cover.
pub fn join_irreducibles(l: &EdgeColoredPoset) -> VertexColoredPoset {
    let p = &l.poset;
    let ji: Vec<usize> = (0..p.len()).filter(|&v| p.lower_covers(v).len() == 1).collect();
    let colors = ji
        .iter()
        .map(|&v| l.color_of(p.lower_covers(v)[0], v).unwrap())
        .collect();
    VertexColoredPoset { poset: p.induced(&ji), colors }
}

/// Independent construction: join-irreducibles of the tableau lattice. For
/// `A1A1`, whose lattice is a product of two chains, the chains are used directly.
pub fn semistandard_poset_oracle(g: Algebra, lam: HighestWeight) -> VertexColoredPoset {
    let lattice = match g {
        Algebra::A1A1 => chain_lattice(lam.a as usize, Color::Alpha)
            .product(&chain_lattice(lam.b as usize, Color::Beta)),
        _ => crate::tableaux::tableau_lattice(g, lam).graph,
    };
    join_irreducibles(&lattice)
}

/// Chain with `len` edges, all of color `c`.
pub fn chain_lattice(len: usize, c: Color) -> EdgeColoredPoset {
    EdgeColoredPoset::from_unsorted_unchecked(
        (0..=len as i64).collect(),
        (0..len).map(|i| (i, i + 1, c)).collect(),
    )
}
