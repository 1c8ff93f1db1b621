//! Batch verification over a range of highest weights.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Algebra, Fundamental, HighestWeight, Order, Weight};
use crate::build::{fundamental_poset, semistandard_layout, semistandard_poset};
use crate::color::Color;
use crate::grid::GridPoset;
use crate::io::{PosetDoc, PosetObject};
use crate::iso::edge_colored_isomorphic;
use crate::lattice::{DecomposedLattice, IdealLattice, WeightData};
use crate::poset::{EdgeColoredPoset, Poset, VertexColoredPoset};
use crate::tableaux::{
    enumerate_littelmann, enumerate_tableaux, from_littelmann, tableau_lattice, tableauwt, to_littelmann, wt_lit,
    TableauMap,
};
use crate::weyl::{
    character_from_lattice, is_weyl_invariant, natural_rank, quasi_gaussian, quotient_of_products, rgf_from_lattice,
    rgf_product, verify_weyl_character, LaurentPoly2, RootData,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub params: String,
    pub status: Status,
    pub millis: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

/// Highest weights `(a, b)` with `a, b <= max_ab` for every algebra, plus extras.
#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub max_ab: u32,
    pub extra: Vec<(Algebra, HighestWeight)>,
    /// Bound on `a, b` for the isomorphism dichotomy.
    pub dichotomy_max: u32,
    pub quasi_gaussian_max: u32,
    pub max_ideals: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_ab: 3,
            extra: vec![(Algebra::A2, HighestWeight::new(4, 4)), (Algebra::C2, HighestWeight::new(4, 4))],
            dichotomy_max: 2,
            quasi_gaussian_max: 4,
            max_ideals: crate::lattice::DEFAULT_MAX_IDEALS,
        }
    }
}

impl VerifyConfig {
    pub fn weights(&self, g: Algebra) -> Vec<HighestWeight> {
        let mut out = Vec::new();
        for a in 0..=self.max_ab {
            for b in 0..=self.max_ab {
                out.push(HighestWeight::new(a, b));
            }
        }
        out.extend(self.extra.iter().filter(|(h, _)| *h == g).map(|&(_, w)| w));
        out
    }

    fn params(&self) -> String {
        let extra: Vec<String> = self.extra.iter().map(|(g, w)| format!("{g}({w})")).collect();
        format!("a,b<={} extra=[{}]", self.max_ab, extra.join(" "))
    }
}

type Key = (Algebra, Order, HighestWeight);

/// Semistandard lattices for every algebra, order and weight in range.
pub struct Corpus {
    pub config: VerifyConfig,
    pub lattices: BTreeMap<Key, (GridPoset, IdealLattice)>,
}

impl Corpus {
    pub fn build(config: VerifyConfig) -> Result<Corpus, String> {
        let mut keys = Vec::new();
        for g in Algebra::ALL {
            for o in Order::BOTH {
                for w in config.weights(g) {
                    keys.push((g, o, w));
                }
            }
        }
        let built: Result<Vec<_>, String> = keys
            .par_iter()
            .map(|&(g, o, w)| {
                let p = semistandard_poset(g, o, w);
                let l = IdealLattice::of_grid(&p, config.max_ideals).map_err(|e| format!("{g} {} ({w}): {e}", o.name()))?;
                Ok(((g, o, w), (p, l)))
            })
            .collect();
        Ok(Corpus { config, lattices: built?.into_iter().collect() })
    }

    pub fn get(&self, g: Algebra, o: Order, w: HighestWeight) -> &(GridPoset, IdealLattice) {
        &self.lattices[&(g, o, w)]
    }
}

fn run(name: &str, params: String, f: impl FnOnce() -> Result<(), String>) -> CheckResult {
    let start = Instant::now();
    let res = f();
    CheckResult {
        name: name.to_string(),
        params,
        status: if res.is_ok() { Status::Pass } else { Status::Fail },
        millis: start.elapsed().as_millis(),
        detail: res.err(),
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lattice_of(p: &GridPoset) -> IdealLattice {
    IdealLattice::of_grid(p, crate::lattice::DEFAULT_MAX_IDEALS).expect("small fixture")
}

/// Fixture: product of a 2-chain and a 3-chain, all vertices alpha.
pub fn chain_product_2x3() -> VertexColoredPoset {
    let mut covers = Vec::new();
    for i in 0..2 {
        for j in 0..3 {
            let v = i * 3 + j;
            if i + 1 < 2 {
                covers.push((v, v + 3));
            }
            if j + 1 < 3 {
                covers.push((v, v + 1));
            }
        }
    }
    let poset = Poset::new((0..6).collect(), covers).expect("product of chains");
    VertexColoredPoset { poset, colors: vec![Color::Alpha; 6] }
}

pub const CATALAN_P3: &str = include_str!("../tests/data/catalan_p3.json");
pub const NO_STRUCTURE_POSET: &str = include_str!("../tests/data/no_structure_poset.json");
pub const NO_STRUCTURE_LATTICE: &str = include_str!("../tests/data/no_structure_lattice.json");

fn parse_vertex(text: &str) -> VertexColoredPoset {
    match PosetDoc::parse(text).and_then(|d| d.to_object()).expect("bundled fixture") {
        PosetObject::Vertex(p) => p,
        PosetObject::Grid(g) => g.base().clone(),
        PosetObject::Edge(_) => panic!("expected a vertex-colored fixture"),
    }
}

fn parse_edge(text: &str) -> EdgeColoredPoset {
    match PosetDoc::parse(text).and_then(|d| d.to_object()).expect("bundled fixture") {
        PosetObject::Edge(e) => e,
        _ => panic!("expected an edge-colored fixture"),
    }
}

pub fn no_structure_grid() -> GridPoset {
    match PosetDoc::parse(NO_STRUCTURE_POSET).and_then(|d| d.to_object()).expect("bundled fixture") {
        PosetObject::Grid(g) => g,
        _ => panic!("expected a grid fixture"),
    }
}

/// Sizes of the fundamental lattices, alpha then beta.
pub const FUNDAMENTAL_SIZES: [(Algebra, usize, usize); 3] =
    [(Algebra::A2, 3, 3), (Algebra::C2, 4, 5), (Algebra::G2, 7, 14)];

pub fn check_counts() -> Result<(), String> {
    let mut slow = Vec::new();
    let mut timed = |what: &str, f: &dyn Fn() -> usize, want: usize| -> Result<(), String> {
        let t = Instant::now();
        let got = f();
        let ms = t.elapsed().as_millis();
        if ms >= 1000 {
            slow.push(format!("{what} took {ms} ms"));
        }
        ensure(got == want, || format!("{what}: {got} != {want}"))
    };
    timed(
        "G2 ba (2,2)",
        &|| lattice_of(&semistandard_poset(Algebra::G2, Order::BetaAlpha, HighestWeight::new(2, 2))).len(),
        729,
    )?;
    for (g, na, nb) in FUNDAMENTAL_SIZES {
        timed(&format!("{g} alpha"), &|| lattice_of(&fundamental_poset(g, Fundamental::Alpha)).len(), na)?;
        timed(&format!("{g} beta"), &|| lattice_of(&fundamental_poset(g, Fundamental::Beta)).len(), nb)?;
    }
    timed(
        "C2 ba (1,1)",
        &|| lattice_of(&semistandard_poset(Algebra::C2, Order::BetaAlpha, HighestWeight::new(1, 1))).len(),
        16,
    )?;
    ensure(slow.is_empty(), || slow.join("; "))
}

pub fn check_rgf(c: &Corpus) -> Result<(), String> {
    for (&(g, o, w), (_, l)) in &c.lattices {
        let got = rgf_from_lattice(l);
        let want = rgf_product(g, w).map_err(|e| format!("{g} ({w}): {e}"))?;
        ensure(got == want, || format!("{g} {} ({w}): lattice {got} != product {want}", o.name()))?;
        ensure(got.is_palindromic() && got.is_unimodal(), || {
            format!("{g} {} ({w}): {got} is not palindromic and unimodal", o.name())
        })?;
    }
    Ok(())
}

/// The alternating sums over the Weyl group of `rho`, as printed.
pub fn printed_a_rho(g: Algebra) -> Option<&'static str> {
    match g {
        Algebra::A2 => Some("xy - x^{-1}y^{2}-x^{2}y^{-1}+x^{-2}y+xy^{-2}-x^{-1}y^{-1}"),
        Algebra::C2 => Some("xy-x^{-1}y^{2}-x^{3}y^{-1}+x^{-3}y^{2}+x^{3}y^{-2}-x^{-3}y^{1}-xy^{-2}+x^{-1}y^{-1}"),
        Algebra::G2 => Some(
            "xy-x^{-1}y^{2}-x^{4}y^{-1}+x^{-4}y^{3}+x^{5}y^{-2}-x^{-5}y^{3}-x^{5}y^{-3}+x^{-5}y^{2}+x^{4}y^{-3}-x^{-4}y-xy^{-2}+x^{-1}y^{-1}",
        ),
        Algebra::A1A1 => None,
    }
}

/// The printed closed forms of the alternating sum of `rho + lambda`.
pub fn printed_a_rho_lambda(g: Algebra, lam: HighestWeight) -> Option<LaurentPoly2> {
    let (a, b) = (lam.a as i64, lam.b as i64);
    let t = |s: i64, x: i64, y: i64| (Weight::new(x, y), s);
    let terms: Vec<(Weight, i64)> = match g {
        Algebra::A2 => vec![
            t(1, a + 1, b + 1),
            t(-1, -(a + 1), a + b + 2),
            t(-1, a + b + 2, -(b + 1)),
            t(1, -(a + b + 2), a + 1),
            t(1, b + 1, -(a + b + 2)),
            t(-1, -(b + 1), -(a + 1)),
        ],
        Algebra::C2 => vec![
            t(1, a + 1, b + 1),
            t(-1, -(a + 1), a + b + 2),
            t(-1, a + 2 * b + 3, -(b + 1)),
            t(1, -(a + 2 * b + 3), a + b + 2),
            t(1, a + 2 * b + 3, -(a + b + 2)),
            t(-1, -(a + 2 * b + 3), b + 1),
            t(-1, a + 1, -(a + b + 2)),
            t(1, -(a + 1), -(b + 1)),
        ],
        Algebra::G2 => vec![
            t(1, a + 1, b + 1),
            t(-1, -(a + 1), a + b + 2),
            t(-1, a + 3 * b + 4, -(b + 1)),
            t(1, -(a + 3 * b + 4), a + 2 * b + 3),
            t(1, 2 * a + 3 * b + 5, -(a + b + 2)),
            t(-1, -(2 * a + 3 * b + 5), a + 2 * b + 3),
            t(-1, 2 * a + 3 * b + 5, -(a + 2 * b + 3)),
            t(1, -(2 * a + 3 * b + 5), a + b + 2),
            t(1, a + 3 * b + 4, -(a + 2 * b + 3)),
            t(-1, -(a + 3 * b + 4), b + 1),
            t(-1, a + 1, -(a + b + 2)),
            t(1, -(a + 1), -(b + 1)),
        ],
        Algebra::A1A1 => return None,
    };
    let mut p = LaurentPoly2::zero();
    for (w, c) in terms {
        p.add_term(w, c);
    }
    Some(p)
}

pub fn check_weyl(c: &Corpus) -> Result<(), String> {
    for g in Algebra::ALL {
        let rd = RootData::new(g);
        if let Some(text) = printed_a_rho(g) {
            let printed: LaurentPoly2 = text.parse().map_err(|e| format!("{g}: {e}"))?;
            let got = rd.alternating_sum(RootData::rho());
            ensure(got == printed, || format!("{g}: computed A_rho {got} differs from the printed one"))?;
        }
    }
    for (&(g, o, w), (_, l)) in &c.lattices {
        let chi = character_from_lattice(l);
        ensure(verify_weyl_character(g, w, &chi), || format!("{g} {} ({w}): A_rho * chi != A_(rho+lambda)", o.name()))?;
        ensure(is_weyl_invariant(g, &chi), || format!("{g} {} ({w}): character is not W-invariant", o.name()))?;
        if let Some(printed) = printed_a_rho_lambda(g, w) {
            let rd = RootData::new(g);
            ensure(rd.alternating_sum(RootData::rho() + w.weight()) == printed, || {
                format!("{g} ({w}): alternating sum differs from the printed closed form")
            })?;
        }
    }
    Ok(())
}

pub fn check_structure(c: &Corpus) -> Result<(), String> {
    for (&(g, o, w), (_, l)) in &c.lattices {
        let m = g.cartan();
        ensure(l.check_structure(&m), || format!("{g} {} ({w}): structure condition fails", o.name()))?;
        let rows = l.infer_structure_rows().map_err(|k| format!("{g} {} ({w}): {k}-edges disagree", o.name()))?;
        for k in Color::ALL {
            if let Some(r) = rows[k.index()] {
                ensure(r == m.row(k), || format!("{g} {} ({w}): inferred {k} row {r}", o.name()))?;
            }
        }
        if w.a > 0 && w.b > 0 || g != Algebra::A1A1 && (w.a > 0 || w.b > 0) {
            ensure(l.infer_structure_matrix() == Some(m), || format!("{g} {} ({w}): inferred matrix differs", o.name()))?;
        }
        let nr = natural_rank(l.graph(), l.weights(), g).map_err(|e| format!("{g} {} ({w}): {e}", o.name()))?;
        ensure((0..l.len()).all(|s| nr.ranks[s] == l.size_of(s)), || {
            format!("{g} {} ({w}): natural rank differs from ideal size", o.name())
        })?;
    }
    let p = no_structure_grid();
    let l = lattice_of(&p);
    ensure(l.infer_structure_matrix().is_none(), || "no-structure poset: a matrix was inferred".into())?;
    let printed = parse_edge(NO_STRUCTURE_LATTICE);
    let data = WeightData::compute(&printed).map_err(|e| e.to_string())?;
    ensure(crate::lattice::infer_structure_rows(&printed, &data.weights).is_err(), || {
        "no-structure lattice: a matrix was inferred".into()
    })?;
    ensure(edge_colored_isomorphic(&printed, l.graph()), || "no-structure lattice differs from J_color(P)".into())
}

/// Decomposable semistandard posets in range plus the no-structure poset.
pub fn check_additivity(c: &Corpus) -> Result<(), String> {
    let mut fixtures: Vec<(String, GridPoset)> = c
        .lattices
        .iter()
        .filter(|((_, _, w), _)| w.a + w.b >= 2)
        .map(|(&(g, o, w), (p, _))| (format!("{g} {} ({w})", o.name()), p.clone()))
        .collect();
    fixtures.push(("no-structure poset".into(), no_structure_grid()));
    fixtures.par_iter().try_for_each(|(name, p)| {
        let d = DecomposedLattice::new(p, c.config.max_ideals).map_err(|e| format!("{name}: {e}"))?;
        ensure(d.decomposition.len() >= 2, || format!("{name}: indecomposable"))?;
        let bad = (0..d.whole.len()).find(|&s| !d.additive_at(s));
        ensure(bad.is_none(), || format!("{name}: additivity fails at element {}", bad.unwrap()))
    })
}

pub fn check_tableaux(c: &Corpus) -> Result<(), String> {
    let keys: Vec<_> = c
        .lattices
        .keys()
        .filter(|(g, o, _)| g.is_simple() && *o == Order::BetaAlpha)
        .copied()
        .collect();
    keys.par_iter().try_for_each(|&(g, o, w)| {
        let name = format!("{g} ({w})");
        let (_, l) = c.get(g, o, w);
        let map = TableauMap::new(g, w).map_err(|e| format!("{name}: {e}"))?;
        let tabs = enumerate_tableaux(g, w).map_err(|e| format!("{name}: {e}"))?;
        ensure(tabs.len() == l.len(), || format!("{name}: {} tableaux for {} ideals", tabs.len(), l.len()))?;
        let tl = tableau_lattice(g, w);
        let index: std::collections::HashMap<_, _> = tl.tableaux.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
        let mut image = vec![usize::MAX; l.len()];
        for s in 0..l.len() {
            let ideal = l.vertices(s);
            let t = map.tableau_of_ideal(&ideal).map_err(|e| format!("{name}: {e}"))?;
            let back = map.ideal_of_tableau(&t).map_err(|e| format!("{name} {t}: {e}"))?;
            ensure(back == ideal, || format!("{name}: round trip fails at {t}"))?;
            ensure(tableauwt(g, &t) == l.weight(s), || format!("{name}: weight of {t} differs"))?;
            image[s] = *index.get(&t).ok_or_else(|| format!("{name}: {t} missing from the tableau lattice"))?;
        }
        let mut mapped: Vec<(usize, usize, Color)> =
            l.graph().colored_covers().map(|(u, v, k)| (image[u], image[v], k)).collect();
        mapped.sort_unstable();
        let mut native: Vec<(usize, usize, Color)> = tl.graph.colored_covers().collect();
        native.sort_unstable();
        ensure(mapped == native, || format!("{name}: tableau lattice is not the image of J_color"))?;
        let mut lits = Vec::with_capacity(tabs.len());
        for t in &tabs {
            let u = to_littelmann(g, t).map_err(|e| format!("{name}: {e}"))?;
            let wl = wt_lit(g, &u).map_err(|e| format!("{name} {u}: {e}"))?;
            ensure(wl == tableauwt(g, t), || format!("{name}: Littelmann weight of {t} differs"))?;
            ensure(from_littelmann(g, &u).as_ref() == Ok(t), || format!("{name}: psi(phi({t})) != {t}"))?;
            lits.push(u);
        }
        lits.sort();
        let independent = enumerate_littelmann(g, w).map_err(|e| format!("{name}: {e}"))?;
        ensure(lits == independent, || format!("{name}: phi is not onto the Littelmann tableaux"))
    })
}

/// `(L^ba)^triangle` for the recolored dual.
pub fn triangle_lattice(g: Algebra, l: &EdgeColoredPoset) -> EdgeColoredPoset {
    l.dual().recolor(g.sigma0())
}

pub fn check_duality(c: &Corpus) -> Result<(), String> {
    let mut jobs = Vec::new();
    for g in Algebra::ALL {
        for w in c.config.weights(g) {
            jobs.push((g, w, false));
            if g.is_simple() && w.a <= c.config.dichotomy_max && w.b <= c.config.dichotomy_max {
                jobs.push((g, w, true));
            }
        }
    }
    jobs.par_iter().try_for_each(|&(g, w, dichotomy)| {
        let (_, ba) = c.get(g, Order::BetaAlpha, w);
        let (_, ab) = c.get(g, Order::AlphaBeta, w);
        if dichotomy {
            let want = w.a == 0 || w.b == 0;
            let got = edge_colored_isomorphic(ba.graph(), ab.graph());
            ensure(got == want, || format!("{g} ({w}): orders isomorphic = {got}, expected {want}"))
        } else {
            let tri = triangle_lattice(g, ba.graph());
            ensure(edge_colored_isomorphic(ab.graph(), &tri), || {
                format!("{g} ({w}): ab lattice is not the recolored dual of the ba lattice")
            })
        }
    })
}

pub fn check_quasi_gaussian(max_m: u32) -> Result<(), String> {
    for m in 0..=max_m {
        let l = lattice_of(&semistandard_poset(Algebra::G2, Order::BetaAlpha, HighestWeight::new(0, m)));
        let got = rgf_from_lattice(&l);
        let want = quasi_gaussian(m).map_err(|e| e.to_string())?;
        ensure(got == want, || format!("m={m}: {got} != {want}"))?;
    }
    Ok(())
}

pub fn check_warmup() -> Result<(), String> {
    let l = IdealLattice::of_poset(&chain_product_2x3(), 1000).map_err(|e| e.to_string())?;
    ensure(l.len() == 10, || format!("J(2x3) has {} elements", l.len()))?;
    let gaussian = quotient_of_products(&[4, 5], &[1, 2]).map_err(|e| e.to_string())?;
    let got = rgf_from_lattice(&l);
    ensure(got == gaussian, || format!("J(2x3) rank sizes {got} != {gaussian}"))?;
    let cat = IdealLattice::of_poset(&parse_vertex(CATALAN_P3), 1000).map_err(|e| e.to_string())?;
    ensure(cat.len() == 14, || format!("Catalan poset has {} ideals", cat.len()))
}

/// Checks for one decomposition-based claim on every built lattice: the
/// pieces of each semistandard poset are the expected fundamental posets.
pub fn check_pieces(c: &Corpus) -> Result<(), String> {
    c.lattices.par_iter().try_for_each(|(&(g, o, w), (p, _))| {
        let got = p.decompose().kinds();
        let want: Vec<_> = semistandard_layout(g, o, w).pieces.iter().map(|&f| Some((g, f))).collect();
        ensure(got == want, || format!("{g} {} ({w}): pieces {got:?}", o.name()))?;
        ensure(p.is_valid() && p.has_max_property(), || format!("{g} {} ({w}): not a grid with the max property", o.name()))
    })
}

pub const CRITERIA: [&str; 9] = [
    "counts",
    "rgf_product",
    "weyl_character",
    "structure_condition",
    "additivity",
    "tableaux",
    "duality",
    "quasi_gaussian",
    "warmup",
];

/// Runs every criterion; the corpus is built once and shared.
pub fn run_verify(config: VerifyConfig) -> Report {
    let mut report = Report::default();
    let params = config.params();
    report.checks.push(run(CRITERIA[0], "fixed sizes".into(), check_counts));
    let start = Instant::now();
    let corpus = match Corpus::build(config.clone()) {
        Ok(c) => c,
        Err(e) => {
            report.checks.push(CheckResult {
                name: "corpus".into(),
                params,
                status: Status::Fail,
                millis: start.elapsed().as_millis(),
                detail: Some(e),
            });
            return report;
        }
    };
    report.checks.push(run(CRITERIA[1], params.clone(), || check_rgf(&corpus)));
    report.checks.push(run(CRITERIA[2], params.clone(), || check_weyl(&corpus)));
    report.checks.push(run(CRITERIA[3], params.clone(), || check_structure(&corpus)));
    report.checks.push(run(CRITERIA[4], params.clone(), || check_additivity(&corpus)));
    report.checks.push(run(CRITERIA[5], params.clone(), || check_tableaux(&corpus)));
    report.checks.push(run(CRITERIA[6], params.clone(), || check_duality(&corpus)));
    report.checks.push(run(CRITERIA[7], format!("m<={}", config.quasi_gaussian_max), || {
        check_quasi_gaussian(config.quasi_gaussian_max)
    }));
    report.checks.push(run(CRITERIA[8], "2x3, Catalan".into(), check_warmup));
    report
}

/// Structure diagnosis for a single poset or lattice file.
pub fn structure_report(obj: &PosetObject) -> CheckResult {
    run("structure_condition", "file".into(), || {
        let (graph, weights) = match obj {
            PosetObject::Edge(e) => {
                let d = WeightData::compute(e).map_err(|e| e.to_string())?;
                (e.clone(), d.weights)
            }
            other => {
                let p = other.vertex_colored().unwrap();
                let l = IdealLattice::of_poset(p, crate::lattice::DEFAULT_MAX_IDEALS).map_err(|e| e.to_string())?;
                (l.graph().clone(), l.weights().to_vec())
            }
        };
        match crate::lattice::infer_structure_rows(&graph, &weights) {
            Ok(rows) => {
                let text: Vec<String> = rows.iter().map(|r| r.map_or("undetermined".into(), |w| w.to_string())).collect();
                let matched = Algebra::ALL.iter().find(|g| {
                    crate::lattice::check_structure_weights(&graph, &weights, &g.cartan())
                });
                match matched {
                    Some(_) => Ok(()),
                    None => Err(format!("rows alpha={} beta={} match no Cartan matrix", text[0], text[1])),
                }
            }
            Err(k) => Err(format!("no matrix M: {k}-edges shift the weight by different amounts")),
        }
    })
}
