//! Isomorphism search for small labeled digraphs: color refinement over the
//! disjoint union of both graphs, then individualization and backtracking.

use std::collections::{BTreeMap, HashSet};

use crate::poset::{EdgeColoredPoset, VertexColoredPoset};

/// Directed graph with a label on every vertex and every arc.
#[derive(Clone, Debug)]
pub struct LabeledDigraph {
    pub labels: Vec<u64>,
    pub arcs: Vec<(usize, usize, u64)>,
}

impl LabeledDigraph {
    pub fn of_vertex_colored(p: &VertexColoredPoset) -> Self {
        LabeledDigraph {
            labels: p.colors.iter().map(|c| c.index() as u64).collect(),
            arcs: p.poset.covers().iter().map(|&(u, v)| (u, v, 0)).collect(),
        }
    }

    pub fn of_edge_colored(p: &EdgeColoredPoset) -> Self {
        LabeledDigraph {
            labels: vec![0; p.len()],
            arcs: p.colored_covers().map(|(u, v, c)| (u, v, c.index() as u64)).collect(),
        }
    }
}

struct Joint {
    na: usize,
    out: Vec<Vec<(usize, u64)>>,
    inn: Vec<Vec<(usize, u64)>>,
}

type Sig = (u32, Vec<(u8, u64, u32)>);

impl Joint {
    fn refine(&self, cls: &mut Vec<u32>) {
        let n = cls.len();
        let mut count = distinct(cls);
        loop {
            let sigs: Vec<Sig> = (0..n)
                .map(|v| {
                    let mut nb: Vec<(u8, u64, u32)> = self.out[v]
                        .iter()
                        .map(|&(w, l)| (0, l, cls[w]))
                        .chain(self.inn[v].iter().map(|&(w, l)| (1, l, cls[w])))
                        .collect();
                    nb.sort_unstable();
                    (cls[v], nb)
                })
                .collect();
            let mut ids: BTreeMap<&Sig, u32> = BTreeMap::new();
            for s in &sigs {
                ids.insert(s, 0);
            }
            for (k, slot) in ids.values_mut().enumerate() {
                *slot = k as u32;
            }
            let next: Vec<u32> = sigs.iter().map(|s| ids[s]).collect();
            let c = ids.len();
            *cls = next;
            if c == count {
                return;
            }
            count = c;
        }
    }

    fn balanced(&self, cls: &[u32]) -> bool {
        let k = cls.iter().copied().max().map_or(0, |m| m as usize + 1);
        let mut diff = vec![0i64; k];
        for (v, &c) in cls.iter().enumerate() {
            diff[c as usize] += if v < self.na { 1 } else { -1 };
        }
        diff.iter().all(|&d| d == 0)
    }

    fn search(&self, mut cls: Vec<u32>, check: &dyn Fn(&[usize]) -> bool) -> Option<Vec<usize>> {
        self.refine(&mut cls);
        if !self.balanced(&cls) {
            return None;
        }
        let k = cls.iter().copied().max().map_or(0, |m| m as usize + 1);
        let mut size = vec![0usize; k];
        for &c in &cls[..self.na] {
            size[c as usize] += 1;
        }
        let target = (0..k).filter(|&c| size[c] > 1).min_by_key(|&c| (size[c], c));
        match target {
            None => {
                let mut where_b = vec![usize::MAX; k];
                for v in self.na..cls.len() {
                    where_b[cls[v] as usize] = v - self.na;
                }
                let map: Vec<usize> = cls[..self.na].iter().map(|&c| where_b[c as usize]).collect();
                check(&map).then_some(map)
            }
            Some(c) => {
                let x = (0..self.na).find(|&v| cls[v] as usize == c).unwrap();
                let fresh = k as u32;
                for y in (self.na..cls.len()).filter(|&v| cls[v] as usize == c) {
                    let mut next = cls.clone();
                    next[x] = fresh;
                    next[y] = fresh;
                    if let Some(m) = self.search(next, check) {
                        return Some(m);
                    }
                }
                None
            }
        }
    }
}

fn distinct(cls: &[u32]) -> usize {
    cls.iter().collect::<HashSet<_>>().len()
}

/// A label- and arc-preserving bijection `a -> b`, if one exists.
pub fn find_isomorphism(a: &LabeledDigraph, b: &LabeledDigraph) -> Option<Vec<usize>> {
    let (na, nb) = (a.labels.len(), b.labels.len());
    if na != nb || a.arcs.len() != b.arcs.len() {
        return None;
    }
    let n = na + nb;
    let mut out = vec![Vec::new(); n];
    let mut inn = vec![Vec::new(); n];
    for &(u, v, l) in &a.arcs {
        out[u].push((v, l));
        inn[v].push((u, l));
    }
    for &(u, v, l) in &b.arcs {
        out[u + na].push((v + na, l));
        inn[v + na].push((u + na, l));
    }
    let mut labels: Vec<u64> = a.labels.iter().chain(&b.labels).copied().collect();
    labels.sort_unstable();
    labels.dedup();
    let cls: Vec<u32> = a
        .labels
        .iter()
        .chain(&b.labels)
        .map(|l| labels.binary_search(l).unwrap() as u32)
        .collect();
    let barcs: HashSet<(usize, usize, u64)> = b.arcs.iter().copied().collect();
    let check = |m: &[usize]| {
        (0..na).all(|v| a.labels[v] == b.labels[m[v]])
            && a.arcs.iter().all(|&(u, v, l)| barcs.contains(&(m[u], m[v], l)))
    };
    Joint { na, out, inn }.search(cls, &check)
}

pub fn vertex_colored_isomorphism(p: &VertexColoredPoset, q: &VertexColoredPoset) -> Option<Vec<usize>> {
    find_isomorphism(&LabeledDigraph::of_vertex_colored(p), &LabeledDigraph::of_vertex_colored(q))
}

pub fn edge_colored_isomorphism(p: &EdgeColoredPoset, q: &EdgeColoredPoset) -> Option<Vec<usize>> {
    find_isomorphism(&LabeledDigraph::of_edge_colored(p), &LabeledDigraph::of_edge_colored(q))
}

pub fn vertex_colored_isomorphic(p: &VertexColoredPoset, q: &VertexColoredPoset) -> bool {
    vertex_colored_isomorphism(p, q).is_some()
}

pub fn edge_colored_isomorphic(p: &EdgeColoredPoset, q: &EdgeColoredPoset) -> bool {
    edge_colored_isomorphism(p, q).is_some()
}
