//! Grid posets: a vertex-colored poset plus a chain function.

use std::collections::HashSet;

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::algebra::{Algebra, Fundamental};
use crate::color::{Color, Sigma};
use crate::iso::vertex_colored_isomorphic;
use crate::poset::{Poset, VertexColoredPoset};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GridError {
    #[error("{0} chain indices for {1} vertices")]
    ChainCount(usize, usize),
    #[error("vertex {0} has chain index 0; chains are numbered from 1")]
    ChainZero(i64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GridViolation {
    /// Two vertices on one chain are incomparable.
    ChainNotTotal { chain: u32, u: i64, v: i64 },
    /// A cover whose lower end is neither on the upper end's chain nor the next one.
    CoverSpansChains { lower: i64, upper: i64, lower_chain: u32, upper_chain: u32 },
    ColorVariesOnChain { chain: u32, u: i64, v: i64 },
    /// Vertices of one component on adjacent chains share a color.
    AdjacentChainsShareColor { chain: u32, u: i64, v: i64 },
}

impl std::fmt::Display for GridViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GridViolation::ChainNotTotal { chain, u, v } => {
                write!(f, "vertices {u} and {v} on chain {chain} are incomparable")
            }
            GridViolation::CoverSpansChains { lower, upper, lower_chain, upper_chain } => write!(
                f,
                "cover {lower} -> {upper} goes from chain {lower_chain} to chain {upper_chain}"
            ),
            GridViolation::ColorVariesOnChain { chain, u, v } => {
                write!(f, "vertices {u} and {v} on chain {chain} have different colors")
            }
            GridViolation::AdjacentChainsShareColor { chain, u, v } => write!(
                f,
                "vertices {u} (chain {}) and {v} (chain {chain}) are connected and share a color",
                chain + 1
            ),
        }
    }
}

/// Two-color grid poset. Chain indices are always surjective onto `1..=m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridPoset {
    base: VertexColoredPoset,
    chain: Vec<u32>,
    m: u32,
}

impl GridPoset {
    /// Drops empty chains and renumbers the rest `1..=m`. Grid axioms are not
    /// checked here; see [`GridPoset::validate`].
    pub fn new(base: VertexColoredPoset, chain: Vec<u32>) -> Result<GridPoset, GridError> {
        if chain.len() != base.len() {
            return Err(GridError::ChainCount(chain.len(), base.len()));
        }
        if let Some(v) = chain.iter().position(|&c| c == 0) {
            return Err(GridError::ChainZero(base.poset.id(v)));
        }
        let mut used: Vec<u32> = chain.clone();
        used.sort_unstable();
        used.dedup();
        let chain: Vec<u32> = chain
            .iter()
            .map(|c| used.binary_search(c).unwrap() as u32 + 1)
            .collect();
        Ok(GridPoset { base, chain, m: used.len() as u32 })
    }

    pub fn empty() -> GridPoset {
        GridPoset { base: VertexColoredPoset::empty(), chain: vec![], m: 0 }
    }

    pub fn base(&self) -> &VertexColoredPoset {
        &self.base
    }

    pub fn poset(&self) -> &Poset {
        &self.base.poset
    }

    pub fn colors(&self) -> &[Color] {
        &self.base.colors
    }

    pub fn color(&self, v: usize) -> Color {
        self.base.colors[v]
    }

    pub fn chains(&self) -> &[u32] {
        &self.chain
    }

    pub fn chain(&self, v: usize) -> u32 {
        self.chain[v]
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn len(&self) -> usize {
        self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        self.base.is_empty()
    }

    pub fn validate(&self) -> Vec<GridViolation> {
        let p = self.poset();
        let id = |v: usize| p.id(v);
        let above = p.strict_up_sets();
        let n = self.len();
        let mut out = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if self.chain[u] != self.chain[v] {
                    continue;
                }
                if !above[u].contains(v) && !above[v].contains(u) {
                    out.push(GridViolation::ChainNotTotal { chain: self.chain[u], u: id(u), v: id(v) });
                }
                if self.color(u) != self.color(v) {
                    out.push(GridViolation::ColorVariesOnChain { chain: self.chain[u], u: id(u), v: id(v) });
                }
            }
        }
        for &(u, v) in p.covers() {
            let (cu, cv) = (self.chain[u], self.chain[v]);
            if cu != cv && cu != cv + 1 {
                out.push(GridViolation::CoverSpansChains {
                    lower: id(u),
                    upper: id(v),
                    lower_chain: cu,
                    upper_chain: cv,
                });
            }
        }
        for comp in p.components() {
            let mut reported = HashSet::new();
            for &u in &comp {
                for &v in &comp {
                    let cv = self.chain[v];
                    if self.chain[u] == cv + 1 && self.color(u) == self.color(v) && reported.insert(cv) {
                        out.push(GridViolation::AdjacentChainsShareColor { chain: cv, u: id(u), v: id(v) });
                    }
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// Ascending chain index; within a chain, from the top down.
    pub fn total_order(&self) -> Vec<usize> {
        let below = self.poset().strict_down_sets();
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&v| (self.chain[v], std::cmp::Reverse(below[v].count_ones(..)), v));
        order
    }

    /// Renumbers vertices in total order with ids `1..=n`.
    pub fn canonical(&self) -> GridPoset {
        let order = self.total_order();
        let ids = (1..=order.len() as i64).collect();
        GridPoset {
            base: VertexColoredPoset {
                poset: self.poset().permuted(&order, ids),
                colors: order.iter().map(|&v| self.color(v)).collect(),
            },
            chain: order.iter().map(|&v| self.chain[v]).collect(),
            m: self.m,
        }
    }

    /// Reversed order, chain `i` becomes chain `m + 1 - i`.
    pub fn dual(&self) -> GridPoset {
        GridPoset {
            base: self.base.dual(),
            chain: self.chain.iter().map(|&c| self.m + 1 - c).collect(),
            m: self.m,
        }
    }

    pub fn recolor(&self, sigma: Sigma) -> GridPoset {
        GridPoset { base: self.base.recolor(sigma), chain: self.chain.clone(), m: self.m }
    }

    pub fn triangle_dual(&self, g: Algebra) -> GridPoset {
        self.dual().recolor(g.sigma0())
    }

    /// All maximal elements on chains 1 and 2, pairwise different colors.
    pub fn has_max_property(&self) -> bool {
        let maxima = self.poset().maximal();
        if maxima.iter().any(|&v| self.chain[v] > 2) {
            return false;
        }
        let colors: HashSet<Color> = maxima.iter().map(|&v| self.color(v)).collect();
        colors.len() == maxima.len()
    }

    /// Induced grid subposet on `verts`, keeping ids.
    pub fn subgrid(&self, verts: &[usize]) -> GridPoset {
        GridPoset::new(self.base.induced(verts), verts.iter().map(|&v| self.chain[v]).collect())
            .expect("restriction of a chain function is a chain function")
    }

    /// Splits off the smallest order ideal that satisfies the chain-index
    /// conditions on maxima and minima, then recurses on the remainder.
    pub fn decompose(&self) -> Decomposition {
        let n = self.len();
        let above = self.poset().strict_up_sets();
        let below = self.poset().strict_down_sets();
        let tp = self.total_order();
        let mut tp_pos = vec![0; n];
        for (i, &v) in tp.iter().enumerate() {
            tp_pos[v] = i;
        }
        let mut rest = FixedBitSet::with_capacity(n);
        rest.insert_range(..);
        let mut pieces = Vec::new();
        while rest.count_ones(..) > 0 {
            let part = match self.smallest_split(&rest, &above, &below, &tp_pos) {
                Some(ideal) => ideal,
                None => rest.clone(),
            };
            let mut verts: Vec<usize> = part.ones().collect();
            verts.sort_by_key(|&v| tp_pos[v]);
            let grid = self.subgrid(&verts);
            let kind = classify_fundamental(grid.base());
            pieces.push(Piece { vertices: verts, grid, kind });
            rest.difference_with(&part);
        }
        Decomposition { pieces }
    }

    fn smallest_split(
        &self,
        rest: &FixedBitSet,
        above: &[FixedBitSet],
        below: &[FixedBitSet],
        tp_pos: &[usize],
    ) -> Option<FixedBitSet> {
        let total = rest.count_ones(..);
        let n = self.len();
        let mut level: Vec<FixedBitSet> = vec![FixedBitSet::with_capacity(n)];
        for _size in 1..total {
            let mut seen = HashSet::new();
            let mut next = Vec::new();
            for ideal in &level {
                for v in rest.ones() {
                    if ideal.contains(v) {
                        continue;
                    }
                    let ok = below[v].ones().all(|w| !rest.contains(w) || ideal.contains(w));
                    if ok {
                        let mut t = ideal.clone();
                        t.insert(v);
                        if seen.insert(t.clone()) {
                            next.push(t);
                        }
                    }
                }
            }
            let mut valid: Vec<FixedBitSet> =
                next.iter().filter(|s| self.splits(s, rest, above, below)).cloned().collect();
            if !valid.is_empty() {
                valid.sort_by_cached_key(|s| {
                    let mut k: Vec<usize> = s.ones().map(|v| tp_pos[v]).collect();
                    k.sort_unstable();
                    k
                });
                return valid.into_iter().next();
            }
            level = next;
        }
        None
    }

    fn splits(&self, ideal: &FixedBitSet, rest: &FixedBitSet, above: &[FixedBitSet], below: &[FixedBitSet]) -> bool {
        let mut other = rest.clone();
        other.difference_with(ideal);
        let ext = |s: &FixedBitSet, rel: &[FixedBitSet]| -> Vec<u32> {
            s.ones().filter(|&v| rel[v].is_disjoint(s)).map(|v| self.chain[v]).collect()
        };
        let (max1, max2) = (ext(ideal, above), ext(&other, above));
        let (min1, min2) = (ext(ideal, below), ext(&other, below));
        let le = |a: &[u32], b: &[u32]| match (a.iter().max(), b.iter().min()) {
            (Some(x), Some(y)) => x <= y,
            _ => true,
        };
        le(&max1, &max2) && le(&min1, &min2)
    }
}

/// The recolored dual `recolor(dual(p), sigma0(g))`.
pub fn triangle_dual(p: &VertexColoredPoset, g: Algebra) -> VertexColoredPoset {
    p.dual().recolor(g.sigma0())
}

#[derive(Clone, Debug)]
pub struct Piece {
    /// Parent vertex indices in total order.
    pub vertices: Vec<usize>,
    pub grid: GridPoset,
    /// Set when the piece is isomorphic to a fundamental poset.
    pub kind: Option<(Algebra, Fundamental)>,
}

/// `P = P_1 ◁ P_2 ◁ ... ◁ P_k`, lowest piece first.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub pieces: Vec<Piece>,
}

impl Decomposition {
    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    /// Piece index for each parent vertex.
    pub fn piece_of(&self, n: usize) -> Vec<usize> {
        let mut out = vec![usize::MAX; n];
        for (k, p) in self.pieces.iter().enumerate() {
            for &v in &p.vertices {
                out[v] = k;
            }
        }
        out
    }

    pub fn kinds(&self) -> Vec<Option<(Algebra, Fundamental)>> {
        self.pieces.iter().map(|p| p.kind).collect()
    }
}

fn classify_fundamental(p: &VertexColoredPoset) -> Option<(Algebra, Fundamental)> {
    for g in Algebra::ALL {
        for which in [Fundamental::Alpha, Fundamental::Beta] {
            let f = crate::build::fundamental_poset(g, which);
            if f.len() == p.len() && vertex_colored_isomorphic(f.base(), p) {
                return Some((g, which));
            }
        }
    }
    None
}
