//! Semistandard tableaux for the simple rank-two algebras, the bijection with
//! order ideals, and Littelmann block tableaux.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::algebra::{Algebra, Fundamental, HighestWeight, Order, Weight};
use crate::build::{semistandard_layout, SemistandardLayout};
use crate::color::Color;
use crate::poset::EdgeColoredPoset;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableauError {
    #[error("tableaux are not defined for {0}")]
    Unsupported(Algebra),
    #[error("column {index} has length {len}; shape ({a},{b}) needs {expected}")]
    Shape { index: usize, len: usize, expected: usize, a: u32, b: u32 },
    #[error("{got} columns for shape ({a},{b})")]
    ColumnCount { got: usize, a: u32, b: u32 },
    #[error("entry {entry} is outside 1..={max}")]
    Alphabet { entry: u8, max: u8 },
    #[error("tableau is not admissible")]
    NotAdmissible,
    #[error("unknown block {0}")]
    UnknownBlock(String),
    #[error("cannot parse tableau `{0}`")]
    Parse(String),
    #[error("vertex set is not an order ideal")]
    NotAnIdeal,
}

/// Columns left to right, entries top to bottom. The first `b` columns have
/// two entries and the last `a` have one.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    pub columns: Vec<Vec<u8>>,
}

impl Tableau {
    pub fn new(columns: Vec<Vec<u8>>) -> Tableau {
        Tableau { columns }
    }

    /// Shape read off the column lengths, if they are 2...2 1...1.
    pub fn shape(&self) -> Option<HighestWeight> {
        let b = self.columns.iter().take_while(|c| c.len() == 2).count();
        let a = self.columns[b..].iter().take_while(|c| c.len() == 1).count();
        (a + b == self.columns.len()).then(|| HighestWeight::new(a as u32, b as u32))
    }

    /// Number of entries equal to `k`.
    pub fn count(&self, k: u8) -> i64 {
        self.columns.iter().flatten().filter(|&&x| x == k).count() as i64
    }
}

fn write_columns(f: &mut fmt::Formatter<'_>, cols: &[Vec<u8>]) -> fmt::Result {
    for c in cols {
        let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(","))?;
    }
    Ok(())
}

fn parse_columns(s: &str) -> Option<Vec<Vec<u8>>> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut cols = Vec::new();
    let mut rest = s.as_str();
    while !rest.is_empty() {
        let body = rest.strip_prefix('[')?;
        let end = body.find(']')?;
        let col: Option<Vec<u8>> = body[..end].split(',').map(|t| t.parse().ok()).collect();
        cols.push(col?);
        rest = &body[end + 1..];
    }
    Some(cols)
}

/// `[1,2][1]`: columns left to right, no whitespace.
impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_columns(f, &self.columns)
    }
}

impl FromStr for Tableau {
    type Err = TableauError;
    fn from_str(s: &str) -> Result<Self, TableauError> {
        parse_columns(s).map(Tableau::new).ok_or_else(|| TableauError::Parse(s.to_string()))
    }
}

pub fn alphabet(g: Algebra) -> Result<u8, TableauError> {
    match g {
        Algebra::A2 => Ok(3),
        Algebra::C2 => Ok(4),
        Algebra::G2 => Ok(7),
        Algebra::A1A1 => Err(TableauError::Unsupported(g)),
    }
}

fn forbidden_columns(g: Algebra) -> &'static [[u8; 2]] {
    match g {
        Algebra::C2 => &[[1, 4]],
        Algebra::G2 => &[[2, 3], [2, 4], [3, 4], [3, 5], [4, 5], [4, 6], [5, 6]],
        _ => &[],
    }
}

/// Column allowed at most once.
fn capped_column(g: Algebra) -> Option<&'static [u8]> {
    match g {
        Algebra::C2 => Some(&[2, 3]),
        Algebra::G2 => Some(&[4]),
        _ => None,
    }
}

/// For a `G2` column, the columns that may not follow it.
fn g2_excluded_successors(col: &[u8]) -> &'static [&'static [u8]] {
    match col {
        [4] => &[&[4]],
        [1, 4] => &[&[1], &[1, 4], &[1, 5], &[1, 6], &[1, 7]],
        [1, 5] => &[&[1], &[1, 5], &[1, 6], &[1, 7]],
        [1, 6] => &[&[1], &[2], &[1, 6], &[1, 7], &[2, 6], &[2, 7]],
        [2, 6] => &[&[2], &[2, 6], &[2, 7]],
        [1, 7] => &[&[1], &[2], &[3], &[4], &[1, 7], &[2, 7], &[3, 7], &[4, 7]],
        [2, 7] => &[&[2], &[3], &[4], &[2, 7], &[3, 7], &[4, 7]],
        [3, 7] => &[&[3], &[4], &[3, 7], &[4, 7]],
        [4, 7] => &[&[4], &[4, 7]],
        _ => &[],
    }
}

fn column_ok(g: Algebra, col: &[u8]) -> bool {
    col.windows(2).all(|w| w[0] < w[1]) && !forbidden_columns(g).iter().any(|f| f[..] == *col)
}

/// Row-weak order between adjacent columns plus the successor table.
fn may_follow(g: Algebra, prev: &[u8], next: &[u8]) -> bool {
    let rows_ok = next.iter().zip(prev).all(|(n, p)| p <= n);
    rows_ok
        && (g != Algebra::G2 || !g2_excluded_successors(prev).iter().any(|x| **x == *next))
        && !(capped_column(g).is_some_and(|c| c == prev && c == next))
}

fn check_shape(g: Algebra, t: &Tableau, lam: Option<HighestWeight>) -> Result<HighestWeight, TableauError> {
    let max = alphabet(g)?;
    let shape = t.shape().ok_or_else(|| {
        let b = t.columns.iter().take_while(|c| c.len() == 2).count();
        let bad = t.columns[b..].iter().position(|c| c.len() != 1).unwrap() + b;
        TableauError::Shape { index: bad, len: t.columns[bad].len(), expected: 1, a: 0, b: b as u32 }
    })?;
    if let Some(lam) = lam {
        if lam != shape {
            if t.columns.len() != (lam.a + lam.b) as usize {
                return Err(TableauError::ColumnCount { got: t.columns.len(), a: lam.a, b: lam.b });
            }
            let index = (0..t.columns.len())
                .find(|&i| t.columns[i].len() != if i < lam.b as usize { 2 } else { 1 })
                .unwrap();
            return Err(TableauError::Shape {
                index,
                len: t.columns[index].len(),
                expected: if index < lam.b as usize { 2 } else { 1 },
                a: lam.a,
                b: lam.b,
            });
        }
    }
    if let Some(&entry) = t.columns.iter().flatten().find(|&&x| x == 0 || x > max) {
        return Err(TableauError::Alphabet { entry, max });
    }
    Ok(shape)
}

/// Membership in the set of `g`-semistandard tableaux. Shape and alphabet
/// problems are errors; a well-formed but inadmissible tableau is `Ok(false)`.
pub fn is_g_semistandard(g: Algebra, t: &Tableau) -> Result<bool, TableauError> {
    check_shape(g, t, None)?;
    if !t.columns.iter().all(|c| column_ok(g, c)) {
        return Ok(false);
    }
    if let Some(cap) = capped_column(g) {
        if t.columns.iter().filter(|c| c[..] == *cap).count() > 1 {
            return Ok(false);
        }
    }
    Ok(t.columns.windows(2).all(|w| may_follow(g, &w[0], &w[1])))
}

pub fn is_g_semistandard_of_shape(g: Algebra, lam: HighestWeight, t: &Tableau) -> Result<bool, TableauError> {
    check_shape(g, t, Some(lam))?;
    is_g_semistandard(g, t)
}

fn admissible_columns(g: Algebra, len: usize) -> Vec<Vec<u8>> {
    let n = alphabet(g).unwrap();
    let mut out = Vec::new();
    if len == 1 {
        out.extend((1..=n).map(|x| vec![x]));
    } else {
        for x in 1..=n {
            for y in x + 1..=n {
                out.push(vec![x, y]);
            }
        }
    }
    out.retain(|c| column_ok(g, c));
    out
}

/// All admissible tableaux of shape `lam`, in lexicographic column order.
pub fn enumerate_tableaux(g: Algebra, lam: HighestWeight) -> Result<Vec<Tableau>, TableauError> {
    alphabet(g)?;
    let shape: Vec<usize> = std::iter::repeat_n(2, lam.b as usize).chain(std::iter::repeat_n(1, lam.a as usize)).collect();
    let cols = [admissible_columns(g, 1), admissible_columns(g, 2)];
    let mut out = Vec::new();
    let mut cur: Vec<Vec<u8>> = Vec::with_capacity(shape.len());
    fn go(g: Algebra, shape: &[usize], cols: &[Vec<Vec<u8>>; 2], cur: &mut Vec<Vec<u8>>, out: &mut Vec<Tableau>) {
        let k = cur.len();
        if k == shape.len() {
            out.push(Tableau::new(cur.clone()));
            return;
        }
        for c in &cols[shape[k] - 1] {
            if k == 0 || may_follow(g, &cur[k - 1], c) {
                cur.push(c.clone());
                go(g, shape, cols, cur, out);
                cur.pop();
            }
        }
    }
    go(g, &shape, &cols, &mut cur, &mut out);
    Ok(out)
}

/// Linear functional on entry counts.
pub fn tableauwt(g: Algebra, t: &Tableau) -> Weight {
    let n = |k| t.count(k);
    match g {
        Algebra::A2 => Weight::new(n(1) - n(2), n(2) - n(3)),
        Algebra::C2 => Weight::new(n(1) - n(2) + n(3) - n(4), n(2) - n(3)),
        Algebra::G2 => Weight::new(
            n(1) - n(2) + 2 * n(3) - 2 * n(5) + n(6) - n(7),
            n(2) - n(3) + n(5) - n(6),
        ),
        Algebra::A1A1 => Weight::ZERO,
    }
}

/// Entries whose appearance by decrement gives an alpha-colored edge.
fn alpha_entries(g: Algebra) -> &'static [u8] {
    match g {
        Algebra::A2 => &[1],
        Algebra::C2 => &[1, 3],
        Algebra::G2 => &[1, 3, 4, 6],
        Algebra::A1A1 => &[],
    }
}

pub fn decrement_color(g: Algebra, new_entry: u8) -> Color {
    if alpha_entries(g).contains(&new_entry) {
        Color::Alpha
    } else {
        Color::Beta
    }
}

/// Admissible tableaux ordered by reverse entrywise comparison.
#[derive(Clone, Debug)]
pub struct TableauLattice {
    pub tableaux: Vec<Tableau>,
    /// Element `i` is `tableaux[i]`.
    pub graph: EdgeColoredPoset,
}

/// Covers decrease one entry by one.
pub fn tableau_lattice(g: Algebra, lam: HighestWeight) -> TableauLattice {
    let tableaux = enumerate_tableaux(g, lam).expect("simple algebra");
    let index: HashMap<&Tableau, usize> = tableaux.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut covers = Vec::new();
    for (i, t) in tableaux.iter().enumerate() {
        for (c, col) in t.columns.iter().enumerate() {
            for (r, &x) in col.iter().enumerate() {
                if x <= 1 {
                    continue;
                }
                let mut u = t.clone();
                u.columns[c][r] = x - 1;
                if let Some(&j) = index.get(&u) {
                    covers.push((i, j, decrement_color(g, x - 1)));
                }
            }
        }
    }
    let graph = EdgeColoredPoset::new((0..tableaux.len() as i64).collect(), covers)
        .expect("single decrements form a Hasse diagram");
    TableauLattice { tableaux, graph }
}

/// Order ideals of a fundamental poset (local vertex sets) and their columns.
fn column_dictionary(g: Algebra, which: Fundamental) -> &'static [(&'static [usize], &'static [u8])] {
    match (g, which) {
        (Algebra::A2, Fundamental::Alpha) => &[(&[], &[3]), (&[1], &[2]), (&[0, 1], &[1])],
        (Algebra::A2, Fundamental::Beta) => &[(&[], &[2, 3]), (&[1], &[1, 3]), (&[0, 1], &[1, 2])],
        (Algebra::C2, Fundamental::Alpha) => &[(&[], &[4]), (&[2], &[3]), (&[1, 2], &[2]), (&[0, 1, 2], &[1])],
        (Algebra::C2, Fundamental::Beta) => &[
            (&[], &[3, 4]),
            (&[3], &[2, 4]),
            (&[2, 3], &[2, 3]),
            (&[1, 2, 3], &[1, 3]),
            (&[0, 1, 2, 3], &[1, 2]),
        ],
        (Algebra::G2, Fundamental::Alpha) => &[
            (&[], &[7]),
            (&[5], &[6]),
            (&[4, 5], &[5]),
            (&[3, 4, 5], &[4]),
            (&[2, 3, 4, 5], &[3]),
            (&[1, 2, 3, 4, 5], &[2]),
            (&[0, 1, 2, 3, 4, 5], &[1]),
        ],
        (Algebra::G2, Fundamental::Beta) => &[
            (&[], &[6, 7]),
            (&[9], &[5, 7]),
            (&[8, 9], &[4, 7]),
            (&[7, 8, 9], &[3, 7]),
            (&[5, 7, 8, 9], &[2, 7]),
            (&[6, 7, 8, 9], &[3, 6]),
            (&[3, 5, 7, 8, 9], &[1, 7]),
            (&[5, 6, 7, 8, 9], &[2, 6]),
            (&[3, 5, 6, 7, 8, 9], &[1, 6]),
            (&[4, 5, 6, 7, 8, 9], &[2, 5]),
            (&[3, 4, 5, 6, 7, 8, 9], &[1, 5]),
            (&[2, 3, 4, 5, 6, 7, 8, 9], &[1, 4]),
            (&[1, 2, 3, 4, 5, 6, 7, 8, 9], &[1, 3]),
            (&[0, 1, 2, 3, 4, 5, 6, 7, 8, 9], &[1, 2]),
        ],
        (Algebra::A1A1, _) => &[],
    }
}

fn mask_of(local: &[usize]) -> u32 {
    local.iter().fold(0, |m, &i| m | 1 << i)
}

/// The ideal/tableau correspondence for one beta-alpha semistandard poset.
#[derive(Clone, Debug)]
pub struct TableauMap {
    pub layout: SemistandardLayout,
    pieces: Vec<Vec<usize>>,
    to_col: [HashMap<u32, Vec<u8>>; 2],
    to_mask: [HashMap<Vec<u8>, u32>; 2],
}

fn kind_index(f: Fundamental) -> usize {
    match f {
        Fundamental::Alpha => 0,
        Fundamental::Beta => 1,
    }
}

impl TableauMap {
    pub fn new(g: Algebra, lam: HighestWeight) -> Result<TableauMap, TableauError> {
        alphabet(g)?;
        let layout = semistandard_layout(g, Order::BetaAlpha, lam);
        let pieces = (0..layout.pieces.len()).map(|k| layout.piece_vertices(k)).collect();
        let mut to_col = [HashMap::new(), HashMap::new()];
        let mut to_mask = [HashMap::new(), HashMap::new()];
        for f in [Fundamental::Alpha, Fundamental::Beta] {
            for &(local, col) in column_dictionary(g, f) {
                to_col[kind_index(f)].insert(mask_of(local), col.to_vec());
                to_mask[kind_index(f)].insert(col.to_vec(), mask_of(local));
            }
        }
        Ok(TableauMap { layout, pieces, to_col, to_mask })
    }

    pub fn algebra(&self) -> Algebra {
        self.layout.algebra
    }

    /// `T^(i)` is the column of the restriction of `ideal` to piece `i`.
    pub fn tableau_of_ideal(&self, ideal: &[usize]) -> Result<Tableau, TableauError> {
        let n = self.layout.grid.len();
        let mut member = vec![false; n];
        for &v in ideal {
            member[v] = true;
        }
        let mut columns = Vec::with_capacity(self.pieces.len());
        for (k, verts) in self.pieces.iter().enumerate() {
            let mask = verts.iter().enumerate().filter(|(_, &v)| member[v]).fold(0, |m, (i, _)| m | 1 << i);
            let col = self.to_col[kind_index(self.layout.pieces[k])].get(&mask).ok_or(TableauError::NotAnIdeal)?;
            columns.push(col.clone());
        }
        Ok(Tableau::new(columns))
    }

    /// Inverse of [`TableauMap::tableau_of_ideal`]; vertices ascending.
    pub fn ideal_of_tableau(&self, t: &Tableau) -> Result<Vec<usize>, TableauError> {
        let g = self.algebra();
        if !is_g_semistandard_of_shape(g, self.layout.weight, t)? {
            return Err(TableauError::NotAdmissible);
        }
        let mut out = Vec::new();
        for (k, col) in t.columns.iter().enumerate() {
            let mask = *self.to_mask[kind_index(self.layout.pieces[k])].get(col).ok_or(TableauError::NotAdmissible)?;
            out.extend(self.pieces[k].iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v));
        }
        out.sort_unstable();
        Ok(out)
    }
}

/// Littelmann tableau: one block of `k` columns per column of the shape.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LittelmannTableau {
    pub blocks: Vec<Vec<Vec<u8>>>,
}

/// Blocks separated by `|`, e.g. `[1,3][2,4]|[2][2]`.
impl fmt::Display for LittelmannTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            write_columns(f, b)?;
        }
        Ok(())
    }
}

impl FromStr for LittelmannTableau {
    type Err = TableauError;
    fn from_str(s: &str) -> Result<Self, TableauError> {
        if s.trim().is_empty() {
            return Ok(LittelmannTableau { blocks: vec![] });
        }
        let blocks: Option<Vec<_>> = s.split('|').map(parse_columns).collect();
        blocks.map(|blocks| LittelmannTableau { blocks }).ok_or_else(|| TableauError::Parse(s.to_string()))
    }
}

pub fn block_width(g: Algebra) -> Result<usize, TableauError> {
    match g {
        Algebra::A2 => Ok(1),
        Algebra::C2 => Ok(2),
        Algebra::G2 => Ok(6),
        Algebra::A1A1 => Err(TableauError::Unsupported(g)),
    }
}

/// Block for a column, as listed in the admissibility tables.
fn block_table(g: Algebra) -> Vec<(Vec<u8>, Vec<Vec<u8>>)> {
    let one = |x: u8| vec![x];
    let two = |x: u8, y: u8| vec![x, y];
    match g {
        Algebra::A2 => {
            let mut t: Vec<_> = (1..=3).map(|x| (one(x), vec![one(x)])).collect();
            for (x, y) in [(1, 2), (1, 3), (2, 3)] {
                t.push((two(x, y), vec![two(x, y)]));
            }
            t
        }
        Algebra::C2 => {
            let mut t: Vec<_> = (1..=4).map(|x| (one(x), vec![one(x), one(x)])).collect();
            for (col, l, r) in [
                ([1, 2], [1, 2], [1, 2]),
                ([1, 3], [1, 3], [1, 3]),
                ([2, 3], [1, 3], [2, 4]),
                ([2, 4], [2, 4], [2, 4]),
                ([3, 4], [3, 4], [3, 4]),
            ] {
                t.push((col.to_vec(), vec![l.to_vec(), r.to_vec()]));
            }
            t
        }
        Algebra::G2 => {
            let mut t = Vec::new();
            for (col, x, y) in [(1, 1, 1), (2, 2, 2), (3, 3, 3), (4, 3, 4), (5, 4, 4), (6, 5, 5), (7, 6, 6)] {
                t.push((one(col), vec![one(x), one(x), one(x), one(y), one(y), one(y)]));
            }
            let rows: [([u8; 2], [u8; 8]); 14] = [
                ([1, 2], [1, 2, 1, 2, 1, 2, 1, 2]),
                ([1, 3], [1, 3, 1, 3, 1, 3, 1, 3]),
                ([1, 4], [1, 3, 1, 3, 1, 3, 2, 4]),
                ([1, 5], [1, 3, 2, 4, 2, 4, 2, 4]),
                ([2, 5], [2, 4, 2, 4, 2, 4, 2, 4]),
                ([1, 6], [1, 3, 2, 4, 3, 5, 3, 5]),
                ([2, 6], [2, 4, 2, 4, 3, 5, 3, 5]),
                ([1, 7], [1, 3, 2, 4, 3, 5, 4, 6]),
                ([3, 6], [3, 5, 3, 5, 3, 5, 3, 5]),
                ([2, 7], [2, 4, 2, 4, 3, 5, 4, 6]),
                ([3, 7], [3, 5, 3, 5, 3, 5, 4, 6]),
                ([4, 7], [3, 5, 4, 6, 4, 6, 4, 6]),
                ([5, 7], [4, 6, 4, 6, 4, 6, 4, 6]),
                ([6, 7], [5, 6, 5, 6, 5, 6, 5, 6]),
            ];
            for (col, m) in rows {
                let (p, q, r, s) = (two(m[0], m[1]), two(m[2], m[3]), two(m[4], m[5]), two(m[6], m[7]));
                t.push((col.to_vec(), vec![p.clone(), p, q, r, s.clone(), s]));
            }
            t
        }
        Algebra::A1A1 => Vec::new(),
    }
}

fn block_text(b: &[Vec<u8>]) -> String {
    b.iter()
        .map(|c| format!("[{}]", c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
        .collect()
}

/// The map `phi` from tableaux to Littelmann tableaux, block by block.
pub fn to_littelmann(g: Algebra, t: &Tableau) -> Result<LittelmannTableau, TableauError> {
    block_width(g)?;
    let table = block_table(g);
    let blocks = t
        .columns
        .iter()
        .map(|c| {
            table
                .iter()
                .find(|(col, _)| col == c)
                .map(|(_, b)| b.clone())
                .ok_or_else(|| TableauError::UnknownBlock(block_text(std::slice::from_ref(c))))
        })
        .collect::<Result<_, _>>()?;
    Ok(LittelmannTableau { blocks })
}

/// The inverse map `psi`.
pub fn from_littelmann(g: Algebra, u: &LittelmannTableau) -> Result<Tableau, TableauError> {
    block_width(g)?;
    let table = block_table(g);
    let columns = u
        .blocks
        .iter()
        .map(|b| {
            table
                .iter()
                .find(|(_, blk)| blk == b)
                .map(|(col, _)| col.clone())
                .ok_or_else(|| TableauError::UnknownBlock(block_text(b)))
        })
        .collect::<Result<_, _>>()?;
    Ok(Tableau::new(columns))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("weight numerator ({0},{1}) is not divisible by {2}")]
pub struct NonIntegralWeight(pub i64, pub i64, pub i64);

/// Normalized entry-count weight; fails if the normalization does not divide.
pub fn wt_lit(g: Algebra, u: &LittelmannTableau) -> Result<Weight, NonIntegralWeight> {
    let n = |k: u8| u.blocks.iter().flatten().flatten().filter(|&&x| x == k).count() as i64;
    let (num, d) = match g {
        Algebra::A2 => (Weight::new(n(1) - n(2), n(2) - n(3)), 1),
        Algebra::C2 => (Weight::new(n(1) - n(2) + n(3) - n(4), n(2) - n(3)), 2),
        Algebra::G2 => (
            Weight::new(
                n(1) - n(2) + 2 * n(3) - 2 * n(4) + n(5) - n(6),
                n(2) - n(3) + n(4) - n(5),
            ),
            6,
        ),
        Algebra::A1A1 => (Weight::ZERO, 1),
    };
    if num.a % d != 0 || num.b % d != 0 {
        return Err(NonIntegralWeight(num.a, num.b, d));
    }
    Ok(Weight::new(num.a / d, num.b / d))
}

/// Every block is in the table and the columns, read left to right, form a
/// semistandard tableau.
pub fn is_littelmann(g: Algebra, u: &LittelmannTableau) -> bool {
    let table = block_table(g);
    if !u.blocks.iter().all(|b| table.iter().any(|(_, blk)| blk == b)) {
        return false;
    }
    let cols: Vec<&Vec<u8>> = u.blocks.iter().flatten().collect();
    let lens_ok = cols.windows(2).all(|w| w[0].len() >= w[1].len());
    lens_ok && cols.windows(2).all(|w| w[1].iter().zip(w[0].iter()).all(|(n, p)| p <= n))
}

/// Littelmann tableaux of shape `lam`, enumerated from the block table alone.
pub fn enumerate_littelmann(g: Algebra, lam: HighestWeight) -> Result<Vec<LittelmannTableau>, TableauError> {
    block_width(g)?;
    let table = block_table(g);
    let by_rows = |r: usize| -> Vec<Vec<Vec<u8>>> {
        table.iter().filter(|(c, _)| c.len() == r).map(|(_, b)| b.clone()).collect()
    };
    let blocks = [by_rows(1), by_rows(2)];
    let shape: Vec<usize> = std::iter::repeat_n(2, lam.b as usize).chain(std::iter::repeat_n(1, lam.a as usize)).collect();
    let fits = |prev: &Vec<Vec<u8>>, next: &Vec<Vec<u8>>| {
        let (p, n) = (prev.last().unwrap(), &next[0]);
        n.iter().zip(p).all(|(x, y)| y <= x)
    };
    let mut out = Vec::new();
    let mut cur: Vec<Vec<Vec<u8>>> = Vec::new();
    fn go(
        shape: &[usize],
        blocks: &[Vec<Vec<Vec<u8>>>; 2],
        fits: &dyn Fn(&Vec<Vec<u8>>, &Vec<Vec<u8>>) -> bool,
        cur: &mut Vec<Vec<Vec<u8>>>,
        out: &mut Vec<LittelmannTableau>,
    ) {
        let k = cur.len();
        if k == shape.len() {
            out.push(LittelmannTableau { blocks: cur.clone() });
            return;
        }
        for b in &blocks[shape[k] - 1] {
            if k == 0 || fits(&cur[k - 1], b) {
                cur.push(b.clone());
                go(shape, blocks, fits, cur, out);
                cur.pop();
            }
        }
    }
    go(&shape, &blocks, &fits, &mut cur, &mut out);
    out.sort();
    Ok(out)
}
