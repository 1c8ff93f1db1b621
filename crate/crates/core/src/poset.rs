//! Finite posets given by Hasse covers, with vertex or edge colors.

use std::collections::{BinaryHeap, HashMap, HashSet, VecDeque};
use std::cmp::Reverse;

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::color::{Color, Sigma};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("duplicate vertex id {0}")]
    DuplicateId(i64),
    #[error("unknown vertex id {0}")]
    UnknownId(i64),
    #[error("vertex index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("vertex {0} covers itself")]
    SelfCover(i64),
    #[error("cover ({0}, {1}) listed more than once")]
    DuplicateCover(i64, i64),
    #[error("cover relation has a cycle")]
    Cycle,
    #[error("cover ({0}, {1}) is implied by other covers")]
    Redundant(i64, i64),
    #[error("{0}")]
    Shape(String),
}

/// Hasse diagram of a finite poset. Vertices are indexed `0..n` and carry
/// external integer ids. Covers are `(lower, upper)` index pairs, sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    ids: Vec<i64>,
    covers: Vec<(usize, usize)>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
}

impl Poset {
    /// Validates distinct ids, acyclicity and irredundancy. Transitive
    /// covers are rejected rather than dropped.
    pub fn new(ids: Vec<i64>, covers: Vec<(usize, usize)>) -> Result<Poset, PosetError> {
        let n = ids.len();
        let mut seen = HashSet::with_capacity(n);
        for &id in &ids {
            if !seen.insert(id) {
                return Err(PosetError::DuplicateId(id));
            }
        }
        let mut pairs = HashSet::with_capacity(covers.len());
        for &(u, v) in &covers {
            if u >= n {
                return Err(PosetError::IndexOutOfRange(u));
            }
            if v >= n {
                return Err(PosetError::IndexOutOfRange(v));
            }
            if u == v {
                return Err(PosetError::SelfCover(ids[u]));
            }
            if !pairs.insert((u, v)) {
                return Err(PosetError::DuplicateCover(ids[u], ids[v]));
            }
        }
        let p = Poset::from_sorted_unchecked(ids, covers);
        let order = p.try_linear_extension().ok_or(PosetError::Cycle)?;
        let above = p.strict_up_sets_in(&order);
        for &(u, v) in &p.covers {
            if p.up[u].iter().any(|&w| w != v && above[w].contains(v)) {
                return Err(PosetError::Redundant(p.ids[u], p.ids[v]));
            }
        }
        Ok(p)
    }

    /// Builds a poset from covers addressed by id.
    pub fn from_id_covers(ids: Vec<i64>, covers: &[(i64, i64)]) -> Result<Poset, PosetError> {
        let mut index = HashMap::with_capacity(ids.len());
        for (i, &id) in ids.iter().enumerate() {
            if index.insert(id, i).is_some() {
                return Err(PosetError::DuplicateId(id));
            }
        }
        let mut cv = Vec::with_capacity(covers.len());
        for &(a, b) in covers {
            let u = *index.get(&a).ok_or(PosetError::UnknownId(a))?;
            let v = *index.get(&b).ok_or(PosetError::UnknownId(b))?;
            cv.push((u, v));
        }
        Poset::new(ids, cv)
    }

    /// Trusted constructor for covers already known to be a valid Hasse diagram.
    pub(crate) fn from_sorted_unchecked(ids: Vec<i64>, mut covers: Vec<(usize, usize)>) -> Poset {
        covers.sort_unstable();
        let n = ids.len();
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for &(u, v) in &covers {
            up[u].push(v);
            down[v].push(u);
        }
        Poset { ids, covers, up, down }
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn ids(&self) -> &[i64] {
        &self.ids
    }

    pub fn id(&self, v: usize) -> i64 {
        self.ids[v]
    }

    pub fn index_of(&self, id: i64) -> Option<usize> {
        self.ids.iter().position(|&x| x == id)
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn upper_covers(&self, v: usize) -> &[usize] {
        &self.up[v]
    }

    pub fn lower_covers(&self, v: usize) -> &[usize] {
        &self.down[v]
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.up[v].is_empty()).collect()
    }

    pub fn minimal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.down[v].is_empty()).collect()
    }

    fn try_linear_extension(&self) -> Option<Vec<usize>> {
        let n = self.len();
        let mut indeg: Vec<usize> = self.down.iter().map(Vec::len).collect();
        let mut heap: BinaryHeap<Reverse<usize>> =
            (0..n).filter(|&v| indeg[v] == 0).map(Reverse).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(Reverse(v)) = heap.pop() {
            order.push(v);
            for &w in &self.up[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    heap.push(Reverse(w));
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    /// Deterministic linear extension, bottom first, smallest index first among ties.
    pub fn linear_extension(&self) -> Vec<usize> {
        self.try_linear_extension().expect("validated posets are acyclic")
    }

    fn strict_up_sets_in(&self, order: &[usize]) -> Vec<FixedBitSet> {
        let n = self.len();
        let mut above = vec![FixedBitSet::with_capacity(n); n];
        for &v in order.iter().rev() {
            let mut s = FixedBitSet::with_capacity(n);
            for &w in &self.up[v] {
                s.insert(w);
                s.union_with(&above[w]);
            }
            above[v] = s;
        }
        above
    }

    /// For each vertex, the set of vertices strictly above it.
    pub fn strict_up_sets(&self) -> Vec<FixedBitSet> {
        self.strict_up_sets_in(&self.linear_extension())
    }

    /// For each vertex, the set of vertices strictly below it.
    pub fn strict_down_sets(&self) -> Vec<FixedBitSet> {
        let n = self.len();
        let mut below = vec![FixedBitSet::with_capacity(n); n];
        for v in self.linear_extension() {
            let mut s = FixedBitSet::with_capacity(n);
            for &w in &self.down[v] {
                s.insert(w);
                s.union_with(&below[w]);
            }
            below[v] = s;
        }
        below
    }

    pub fn leq(&self, u: usize, v: usize) -> bool {
        if u == v {
            return true;
        }
        let mut seen = FixedBitSet::with_capacity(self.len());
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            for &w in &self.up[x] {
                if w == v {
                    return true;
                }
                if !seen.put(w) {
                    queue.push_back(w);
                }
            }
        }
        false
    }

    /// Connected components of the underlying undirected graph, each sorted.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let c = out.len();
            let mut members = vec![s];
            comp[s] = c;
            let mut k = 0;
            while k < members.len() {
                let x = members[k];
                k += 1;
                for &w in self.up[x].iter().chain(&self.down[x]) {
                    if comp[w] == usize::MAX {
                        comp[w] = c;
                        members.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn dual(&self) -> Poset {
        let covers = self.covers.iter().map(|&(u, v)| (v, u)).collect();
        Poset::from_sorted_unchecked(self.ids.clone(), covers)
    }

    /// Ids of `other` are shifted past the largest id of `self` when the id sets meet.
    pub fn disjoint_sum(&self, other: &Poset) -> Poset {
        let shift = sum_shift(&self.ids, &other.ids);
        let n = self.len();
        let mut ids = self.ids.clone();
        ids.extend(other.ids.iter().map(|&x| x + shift));
        let mut covers = self.covers.clone();
        covers.extend(other.covers.iter().map(|&(u, v)| (u + n, v + n)));
        Poset::from_sorted_unchecked(ids, covers)
    }

    /// Induced subposet on `verts` (given in the desired vertex order).
    pub fn induced(&self, verts: &[usize]) -> Poset {
        let above = self.strict_up_sets();
        let mut covers = Vec::new();
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate() {
                if i == j || !above[u].contains(v) {
                    continue;
                }
                let between = verts
                    .iter()
                    .any(|&w| w != u && w != v && above[u].contains(w) && above[w].contains(v));
                if !between {
                    covers.push((i, j));
                }
            }
        }
        let ids = verts.iter().map(|&v| self.ids[v]).collect();
        Poset::from_sorted_unchecked(ids, covers)
    }

    /// Reorders vertices by `perm` (new position `i` holds old vertex `perm[i]`)
    /// and assigns fresh ids.
    pub fn permuted(&self, perm: &[usize], ids: Vec<i64>) -> Poset {
        let mut inv = vec![0; perm.len()];
        for (i, &v) in perm.iter().enumerate() {
            inv[v] = i;
        }
        let covers = self.covers.iter().map(|&(u, v)| (inv[u], inv[v])).collect();
        Poset::from_sorted_unchecked(ids, covers)
    }
}

fn sum_shift(a: &[i64], b: &[i64]) -> i64 {
    let sa: HashSet<i64> = a.iter().copied().collect();
    if b.iter().all(|x| !sa.contains(x)) {
        return 0;
    }
    let amax = a.iter().copied().max().unwrap_or(-1);
    let bmin = b.iter().copied().min().unwrap_or(0);
    amax + 1 - bmin
}

/// Hasse diagram of the transitive closure of an acyclic relation on `0..n`.
pub(crate) fn transitive_reduction(n: usize, relations: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut up = vec![Vec::new(); n];
    let mut indeg = vec![0usize; n];
    for &(u, v) in relations {
        up[u].push(v);
        indeg[v] += 1;
    }
    let mut order = Vec::with_capacity(n);
    let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    while let Some(v) = stack.pop() {
        order.push(v);
        for &w in &up[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                stack.push(w);
            }
        }
    }
    assert_eq!(order.len(), n, "relation must be acyclic");
    let mut above = vec![FixedBitSet::with_capacity(n); n];
    for &v in order.iter().rev() {
        let mut s = FixedBitSet::with_capacity(n);
        for &w in &up[v] {
            s.insert(w);
            s.union_with(&above[w]);
        }
        above[v] = s;
    }
    let mut covers = Vec::new();
    for u in 0..n {
        for v in above[u].ones() {
            if !above[u].ones().any(|w| w != v && above[w].contains(v)) {
                covers.push((u, v));
            }
        }
    }
    covers
}

/// A surjective rank function onto `0..=length`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankFunction {
    pub ranks: Vec<u32>,
    pub length: u32,
}

/// Rank function of `p`, if one exists. Each component starts at rank 0.
pub fn find_rank_function(p: &Poset) -> Option<RankFunction> {
    let n = p.len();
    let mut rank: Vec<Option<i64>> = vec![None; n];
    let mut ranks = vec![0u32; n];
    for comp in p.components() {
        let s = comp[0];
        rank[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            let rx = rank[x].unwrap();
            let nbrs = p.up[x].iter().map(|&w| (w, rx + 1)).chain(p.down[x].iter().map(|&w| (w, rx - 1)));
            for (w, r) in nbrs {
                match rank[w] {
                    None => {
                        rank[w] = Some(r);
                        queue.push_back(w);
                    }
                    Some(rw) if rw != r => return None,
                    _ => {}
                }
            }
        }
        let lo = comp.iter().map(|&v| rank[v].unwrap()).min().unwrap();
        for &v in &comp {
            ranks[v] = (rank[v].unwrap() - lo) as u32;
        }
    }
    let length = ranks.iter().copied().max().unwrap_or(0);
    Some(RankFunction { ranks, length })
}

/// Poset whose vertices carry colors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexColoredPoset {
    pub poset: Poset,
    pub colors: Vec<Color>,
}

impl VertexColoredPoset {
    pub fn new(poset: Poset, colors: Vec<Color>) -> Result<Self, PosetError> {
        if colors.len() != poset.len() {
            return Err(PosetError::Shape(format!(
                "{} colors for {} vertices",
                colors.len(),
                poset.len()
            )));
        }
        Ok(VertexColoredPoset { poset, colors })
    }

    pub fn empty() -> Self {
        VertexColoredPoset { poset: Poset::from_sorted_unchecked(vec![], vec![]), colors: vec![] }
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn dual(&self) -> Self {
        VertexColoredPoset { poset: self.poset.dual(), colors: self.colors.clone() }
    }

    pub fn recolor(&self, sigma: Sigma) -> Self {
        VertexColoredPoset {
            poset: self.poset.clone(),
            colors: self.colors.iter().map(|&c| sigma.apply(c)).collect(),
        }
    }

    pub fn disjoint_sum(&self, other: &Self) -> Self {
        let mut colors = self.colors.clone();
        colors.extend_from_slice(&other.colors);
        VertexColoredPoset { poset: self.poset.disjoint_sum(&other.poset), colors }
    }

    pub fn induced(&self, verts: &[usize]) -> Self {
        VertexColoredPoset {
            poset: self.poset.induced(verts),
            colors: verts.iter().map(|&v| self.colors[v]).collect(),
        }
    }
}

/// Poset whose cover edges carry colors; `colors[k]` belongs to `poset.covers()[k]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoredPoset {
    pub poset: Poset,
    pub colors: Vec<Color>,
}

impl EdgeColoredPoset {
    pub fn new(ids: Vec<i64>, covers: Vec<(usize, usize, Color)>) -> Result<Self, PosetError> {
        let mut covers = covers;
        covers.sort_unstable_by_key(|&(u, v, _)| (u, v));
        let poset = Poset::new(ids, covers.iter().map(|&(u, v, _)| (u, v)).collect())?;
        Ok(Self::from_sorted(poset, covers.iter().map(|c| c.2).collect()))
    }

    pub(crate) fn from_sorted(poset: Poset, colors: Vec<Color>) -> Self {
        debug_assert_eq!(poset.covers().len(), colors.len());
        EdgeColoredPoset { poset, colors }
    }

    pub(crate) fn from_unsorted_unchecked(ids: Vec<i64>, mut covers: Vec<(usize, usize, Color)>) -> Self {
        covers.sort_unstable_by_key(|&(u, v, _)| (u, v));
        let poset = Poset::from_sorted_unchecked(ids, covers.iter().map(|&(u, v, _)| (u, v)).collect());
        EdgeColoredPoset { poset, colors: covers.iter().map(|c| c.2).collect() }
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn colored_covers(&self) -> impl Iterator<Item = (usize, usize, Color)> + '_ {
        self.poset.covers().iter().zip(&self.colors).map(|(&(u, v), &c)| (u, v, c))
    }

    pub fn color_of(&self, u: usize, v: usize) -> Option<Color> {
        self.poset.covers().binary_search(&(u, v)).ok().map(|k| self.colors[k])
    }

    pub fn dual(&self) -> Self {
        Self::from_unsorted_unchecked(
            self.poset.ids().to_vec(),
            self.colored_covers().map(|(u, v, c)| (v, u, c)).collect(),
        )
    }

    pub fn recolor(&self, sigma: Sigma) -> Self {
        EdgeColoredPoset {
            poset: self.poset.clone(),
            colors: self.colors.iter().map(|&c| sigma.apply(c)).collect(),
        }
    }

    pub fn disjoint_sum(&self, other: &Self) -> Self {
        let n = self.len();
        let poset = self.poset.disjoint_sum(&other.poset);
        let mut covers: Vec<_> = self.colored_covers().collect();
        covers.extend(other.colored_covers().map(|(u, v, c)| (u + n, v + n, c)));
        Self::from_unsorted_unchecked(poset.ids().to_vec(), covers)
    }

    /// `(r, q) -> (r', q)` with the color of `r -> r'`, and likewise in the
    /// second slot. Element `(i, j)` gets index and id `i * |other| + j`.
    pub fn product(&self, other: &Self) -> Self {
        let m = other.len();
        let n = self.len() * m;
        let mut covers = Vec::new();
        for (u, v, c) in self.colored_covers() {
            for j in 0..m {
                covers.push((u * m + j, v * m + j, c));
            }
        }
        for i in 0..self.len() {
            for (u, v, c) in other.colored_covers() {
                covers.push((i * m + u, i * m + v, c));
            }
        }
        Self::from_unsorted_unchecked((0..n as i64).collect(), covers)
    }

    /// Every diamond `s -> t1 -> u`, `s -> t2 -> u` has opposite edges of equal color.
    pub fn diamond_coloring_check(&self) -> bool {
        let p = &self.poset;
        for s in 0..p.len() {
            let ups = p.upper_covers(s);
            for (i, &t1) in ups.iter().enumerate() {
                for &t2 in &ups[i + 1..] {
                    for &u in p.upper_covers(t1) {
                        if let Some(c2u) = self.color_of(t2, u) {
                            let c1u = self.color_of(t1, u).unwrap();
                            let cs1 = self.color_of(s, t1).unwrap();
                            let cs2 = self.color_of(s, t2).unwrap();
                            if c1u != cs2 || c2u != cs1 {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }
}

pub fn diamond_coloring_check(l: &EdgeColoredPoset) -> bool {
    l.diamond_coloring_check()
}
