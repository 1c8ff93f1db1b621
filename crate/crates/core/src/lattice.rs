//! Lattices of order ideals with colored covers, and their weights.

use std::collections::VecDeque;

use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{CartanMatrix, Weight};
use crate::color::Color;
use crate::grid::{Decomposition, GridPoset};
use crate::poset::{EdgeColoredPoset, VertexColoredPoset};

pub const DEFAULT_MAX_IDEALS: usize = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("more than {0} order ideals")]
    TooManyIdeals(usize),
    #[error("a {0}-component admits no rank function")]
    Unranked(Color),
}

/// Ranks within the components of one color.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorComponents {
    /// Component number of each element.
    pub comp: Vec<u32>,
    pub rho: Vec<u32>,
    /// Length of each component.
    pub lengths: Vec<u32>,
}

impl ColorComponents {
    /// BFS over the edges of color `c`.
    pub fn compute(l: &EdgeColoredPoset, c: Color) -> Result<Self, LatticeError> {
        let n = l.len();
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for (u, v, k) in l.colored_covers() {
            if k == c {
                up[u].push(v);
                down[v].push(u);
            }
        }
        let mut comp = vec![u32::MAX; n];
        let mut rel = vec![0i64; n];
        let mut rho = vec![0u32; n];
        let mut lengths = Vec::new();
        let mut members = Vec::new();
        for s in 0..n {
            if comp[s] != u32::MAX {
                continue;
            }
            let id = lengths.len() as u32;
            comp[s] = id;
            rel[s] = 0;
            members.clear();
            members.push(s);
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                let next = up[x].iter().map(|&w| (w, rel[x] + 1)).chain(down[x].iter().map(|&w| (w, rel[x] - 1)));
                for (w, r) in next.collect::<Vec<_>>() {
                    if comp[w] == u32::MAX {
                        comp[w] = id;
                        rel[w] = r;
                        members.push(w);
                        queue.push_back(w);
                    } else if rel[w] != r {
                        return Err(LatticeError::Unranked(c));
                    }
                }
            }
            let lo = members.iter().map(|&v| rel[v]).min().unwrap();
            let hi = members.iter().map(|&v| rel[v]).max().unwrap();
            for &v in &members {
                rho[v] = (rel[v] - lo) as u32;
            }
            lengths.push((hi - lo) as u32);
        }
        Ok(ColorComponents { comp, rho, lengths })
    }

    pub fn length(&self, s: usize) -> u32 {
        self.lengths[self.comp[s] as usize]
    }
}

/// Per-element statistics within a one-color component.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankStats {
    pub rho: u32,
    pub l: u32,
    pub delta: u32,
    pub m: i64,
}

/// Color components and weights of an edge-colored poset.
#[derive(Clone, Debug)]
pub struct WeightData {
    pub components: [ColorComponents; 2],
    pub weights: Vec<Weight>,
}

impl WeightData {
    pub fn compute(l: &EdgeColoredPoset) -> Result<Self, LatticeError> {
        let ca = ColorComponents::compute(l, Color::Alpha)?;
        let cb = ColorComponents::compute(l, Color::Beta)?;
        let m = |c: &ColorComponents, s: usize| 2 * c.rho[s] as i64 - c.length(s) as i64;
        let weights = (0..l.len()).map(|s| Weight::new(m(&ca, s), m(&cb, s))).collect();
        Ok(WeightData { components: [ca, cb], weights })
    }

    pub fn rank_stats(&self, s: usize, c: Color) -> RankStats {
        let cc = &self.components[c.index()];
        let (rho, l) = (cc.rho[s], cc.length(s));
        RankStats { rho, l, delta: l - rho, m: 2 * rho as i64 - l as i64 }
    }
}

/// Every `c`-edge shifts the weight by row `c` of `m`.
pub fn check_structure_weights(l: &EdgeColoredPoset, weights: &[Weight], m: &CartanMatrix) -> bool {
    l.colored_covers().all(|(u, v, c)| weights[v] - weights[u] == m.row(c))
}

/// The common weight shift along each color, `None` for a color without
/// edges. `Err` when some color has two different shifts.
pub fn infer_structure_rows(l: &EdgeColoredPoset, weights: &[Weight]) -> Result<[Option<Weight>; 2], Color> {
    let mut rows = [None, None];
    for (u, v, c) in l.colored_covers() {
        let d = weights[v] - weights[u];
        match rows[c.index()] {
            None => rows[c.index()] = Some(d),
            Some(r) if r != d => return Err(c),
            _ => {}
        }
    }
    Ok(rows)
}

/// `J_color(P)`: order ideals stored as bitsets over vertices in a fixed bit
/// order, sorted by bitset value.
#[derive(Clone, Debug)]
pub struct IdealLattice {
    source: VertexColoredPoset,
    /// Source vertex for each bit position.
    bit_order: Vec<usize>,
    words: usize,
    bits: Vec<u64>,
    graph: EdgeColoredPoset,
    data: WeightData,
}

impl IdealLattice {
    /// Bits follow the total order of the grid.
    pub fn of_grid(p: &GridPoset, max_ideals: usize) -> Result<Self, LatticeError> {
        IdealLattice::with_bit_order(p.base().clone(), p.total_order(), max_ideals)
    }

    /// Bits follow a reversed linear extension (tops first).
    pub fn of_poset(p: &VertexColoredPoset, max_ideals: usize) -> Result<Self, LatticeError> {
        let mut order = p.poset.linear_extension();
        order.reverse();
        IdealLattice::with_bit_order(p.clone(), order, max_ideals)
    }

    /// `bit_order` must list every vertex before all vertices below it.
    fn with_bit_order(source: VertexColoredPoset, bit_order: Vec<usize>, max_ideals: usize) -> Result<Self, LatticeError> {
        let n = source.len();
        let words = n.div_ceil(64).max(1);
        let mut pos = vec![0; n];
        for (i, &v) in bit_order.iter().enumerate() {
            pos[v] = i;
        }
        let uppers: Vec<Vec<usize>> = bit_order
            .iter()
            .map(|&v| source.poset.upper_covers(v).iter().map(|&w| pos[w]).collect())
            .collect();
        let lowers: Vec<Vec<usize>> = bit_order
            .iter()
            .map(|&v| source.poset.lower_covers(v).iter().map(|&w| pos[w]).collect())
            .collect();
        let bits = enumerate_ideals(n, words, &uppers, max_ideals)?;
        let count = bits.len() / words;
        let mut order: Vec<usize> = (0..count).collect();
        order.par_sort_unstable_by(|&x, &y| {
            bits[x * words..(x + 1) * words].iter().rev().cmp(bits[y * words..(y + 1) * words].iter().rev())
        });
        let mut sorted = Vec::with_capacity(bits.len());
        for &k in &order {
            sorted.extend_from_slice(&bits[k * words..(k + 1) * words]);
        }
        let bits = sorted;
        let colors: Vec<Color> = bit_order.iter().map(|&v| source.colors[v]).collect();
        let find = |key: &[u64]| -> Option<usize> {
            let (mut lo, mut hi) = (0, count);
            while lo < hi {
                let mid = (lo + hi) / 2;
                match bits[mid * words..(mid + 1) * words].iter().rev().cmp(key.iter().rev()) {
                    std::cmp::Ordering::Less => lo = mid + 1,
                    std::cmp::Ordering::Greater => hi = mid,
                    std::cmp::Ordering::Equal => return Some(mid),
                }
            }
            None
        };
        let covers: Vec<(usize, usize, Color)> = (0..count)
            .into_par_iter()
            .flat_map_iter(|s| {
                let cur = &bits[s * words..(s + 1) * words];
                let has = |i: usize| cur[i / 64] >> (i % 64) & 1 == 1;
                let mut out = Vec::new();
                for i in 0..n {
                    if !has(i) && lowers[i].iter().all(|&j| has(j)) {
                        let mut t = cur.to_vec();
                        t[i / 64] |= 1 << (i % 64);
                        out.push((s, find(&t).expect("ideal plus an addable vertex is an ideal"), colors[i]));
                    }
                }
                out
            })
            .collect();
        let graph = EdgeColoredPoset::from_unsorted_unchecked((0..count as i64).collect(), covers);
        let data = WeightData::compute(&graph).expect("components of distributive lattices are ranked");
        Ok(IdealLattice { source, bit_order, words, bits, graph, data })
    }

    pub fn source(&self) -> &VertexColoredPoset {
        &self.source
    }

    pub fn len(&self) -> usize {
        self.bits.len() / self.words
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn graph(&self) -> &EdgeColoredPoset {
        &self.graph
    }

    pub fn weights(&self) -> &[Weight] {
        &self.data.weights
    }

    pub fn weight(&self, s: usize) -> Weight {
        self.data.weights[s]
    }

    pub fn weight_data(&self) -> &WeightData {
        &self.data
    }

    pub fn rank_stats(&self, s: usize, c: Color) -> RankStats {
        self.data.rank_stats(s, c)
    }

    pub fn bit_order(&self) -> &[usize] {
        &self.bit_order
    }

    fn word_slice(&self, s: usize) -> &[u64] {
        &self.bits[s * self.words..(s + 1) * self.words]
    }

    /// Source vertices of element `s`, ascending.
    pub fn vertices(&self, s: usize) -> Vec<usize> {
        let w = self.word_slice(s);
        let mut out: Vec<usize> = (0..self.bit_order.len())
            .filter(|&i| w[i / 64] >> (i % 64) & 1 == 1)
            .map(|i| self.bit_order[i])
            .collect();
        out.sort_unstable();
        out
    }

    pub fn size_of(&self, s: usize) -> u32 {
        self.word_slice(s).iter().map(|w| w.count_ones()).sum()
    }

    pub fn contains(&self, s: usize, v: usize) -> bool {
        let i = self.bit_order.iter().position(|&x| x == v).expect("vertex of the source");
        self.word_slice(s)[i / 64] >> (i % 64) & 1 == 1
    }

    /// Element whose ideal is exactly `verts`, if `verts` is an order ideal.
    pub fn index_of(&self, verts: &[usize]) -> Option<usize> {
        let mut pos = vec![0; self.bit_order.len()];
        for (i, &v) in self.bit_order.iter().enumerate() {
            pos[v] = i;
        }
        let mut key = vec![0u64; self.words];
        for &v in verts {
            let i = pos[v];
            key[i / 64] |= 1 << (i % 64);
        }
        let count = self.len();
        let (mut lo, mut hi) = (0, count);
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.word_slice(mid).iter().rev().cmp(key.iter().rev()) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.len() - 1
    }

    pub fn check_structure(&self, m: &CartanMatrix) -> bool {
        check_structure_weights(&self.graph, self.weights(), m)
    }

    /// The matrix whose rows are the common weight shifts, when both colors
    /// occur and each has a single shift.
    pub fn infer_structure_matrix(&self) -> Option<CartanMatrix> {
        match infer_structure_rows(&self.graph, self.weights()) {
            Ok([Some(a), Some(b)]) => Some(CartanMatrix::from_rows(a, b)),
            _ => None,
        }
    }

    pub fn infer_structure_rows(&self) -> Result<[Option<Weight>; 2], Color> {
        infer_structure_rows(&self.graph, self.weights())
    }

    /// Elements reachable from `s` along edges whose color is in `colors`,
    /// ascending, with the induced edge-colored poset.
    pub fn component(&self, s: usize, colors: &[Color]) -> (Vec<usize>, EdgeColoredPoset) {
        component(&self.graph, s, colors)
    }

    /// Rank generating function coefficients: number of ideals of each size.
    pub fn rank_sizes(&self) -> Vec<u64> {
        let mut out = vec![0u64; self.bit_order.len() + 1];
        for s in 0..self.len() {
            out[self.size_of(s) as usize] += 1;
        }
        out
    }
}

/// Top-first DFS: a vertex is forced in when an upper cover is already in.
fn enumerate_ideals(n: usize, words: usize, uppers: &[Vec<usize>], max_ideals: usize) -> Result<Vec<u64>, LatticeError> {
    struct Walk<'a> {
        n: usize,
        uppers: &'a [Vec<usize>],
        cur: Vec<u64>,
        out: Vec<u64>,
        count: usize,
        max: usize,
    }
    impl Walk<'_> {
        fn has(&self, i: usize) -> bool {
            self.cur[i / 64] >> (i % 64) & 1 == 1
        }
        fn go(&mut self, k: usize) -> Result<(), LatticeError> {
            if k == self.n {
                self.count += 1;
                if self.count > self.max {
                    return Err(LatticeError::TooManyIdeals(self.max));
                }
                self.out.extend_from_slice(&self.cur);
                return Ok(());
            }
            let forced = self.uppers[k].iter().any(|&j| self.has(j));
            if !forced {
                self.go(k + 1)?;
            }
            self.cur[k / 64] |= 1 << (k % 64);
            self.go(k + 1)?;
            self.cur[k / 64] &= !(1 << (k % 64));
            Ok(())
        }
    }
    let mut w = Walk { n, uppers, cur: vec![0; words], out: Vec::new(), count: 0, max: max_ideals };
    w.go(0)?;
    Ok(w.out)
}


pub fn component(l: &EdgeColoredPoset, s: usize, colors: &[Color]) -> (Vec<usize>, EdgeColoredPoset) {
    let n = l.len();
    let p = &l.poset;
    let mut seen = vec![false; n];
    seen[s] = true;
    let mut queue = VecDeque::from([s]);
    while let Some(x) = queue.pop_front() {
        let nbrs = p
            .upper_covers(x)
            .iter()
            .map(|&w| (w, l.color_of(x, w).unwrap()))
            .chain(p.lower_covers(x).iter().map(|&w| (w, l.color_of(w, x).unwrap())))
            .collect::<Vec<_>>();
        for (w, c) in nbrs {
            if colors.contains(&c) && !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    let members: Vec<usize> = (0..n).filter(|&v| seen[v]).collect();
    let mut idx = vec![usize::MAX; n];
    for (i, &v) in members.iter().enumerate() {
        idx[v] = i;
    }
    let covers = l
        .colored_covers()
        .filter(|&(u, v, c)| seen[u] && seen[v] && colors.contains(&c))
        .map(|(u, v, c)| (idx[u], idx[v], c))
        .collect();
    let ids = members.iter().map(|&v| p.id(v)).collect();
    (members, EdgeColoredPoset::from_unsorted_unchecked(ids, covers))
}

pub fn order_ideals(p: &GridPoset) -> Result<IdealLattice, LatticeError> {
    IdealLattice::of_grid(p, DEFAULT_MAX_IDEALS)
}

/// The lattice together with one lattice per piece of a decomposition of its source.
#[derive(Clone, Debug)]
pub struct DecomposedLattice {
    pub whole: IdealLattice,
    pub decomposition: Decomposition,
    pub pieces: Vec<IdealLattice>,
}

/// Per-piece elements of `s`.
impl DecomposedLattice {
    pub fn new(p: &GridPoset, max_ideals: usize) -> Result<Self, LatticeError> {
        let whole = IdealLattice::of_grid(p, max_ideals)?;
        let decomposition = p.decompose();
        let pieces = decomposition
            .pieces
            .iter()
            .map(|piece| IdealLattice::of_grid(&piece.grid, max_ideals))
            .collect::<Result<_, _>>()?;
        Ok(DecomposedLattice { whole, decomposition, pieces })
    }

    pub fn restrictions(&self, s: usize) -> Vec<usize> {
        let verts = self.whole.vertices(s);
        self.decomposition
            .pieces
            .iter()
            .zip(&self.pieces)
            .map(|(piece, lat)| {
                let local: Vec<usize> = piece
                    .vertices
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| verts.binary_search(v).is_ok())
                    .map(|(i, _)| i)
                    .collect();
                lat.index_of(&local).expect("restriction of an ideal is an ideal")
            })
            .collect()
    }

    /// Sum of piece weights of the restrictions of `s`.
    pub fn weight_via_decomposition(&self, s: usize) -> Weight {
        self.restrictions(s)
            .iter()
            .zip(&self.pieces)
            .fold(Weight::ZERO, |acc, (&t, lat)| acc + lat.weight(t))
    }

    /// Checks that `rho`, `l` and the weight of `s` are sums over the pieces,
    /// for both colors.
    pub fn additive_at(&self, s: usize) -> bool {
        let parts = self.restrictions(s);
        Color::ALL.iter().all(|&c| {
            let whole = self.whole.rank_stats(s, c);
            let (rho, l) = parts.iter().zip(&self.pieces).fold((0, 0), |(r, l), (&t, lat)| {
                let st = lat.rank_stats(t, c);
                (r + st.rho, l + st.l)
            });
            whole.rho == rho && whole.l == l
        }) && self.whole.weight(s) == self.weight_via_decomposition(s)
    }
}
