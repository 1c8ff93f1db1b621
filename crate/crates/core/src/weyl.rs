//! Root data, Weyl groups, the group ring as Laurent polynomials, and rank
//! generating functions.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use thiserror::Error;

use crate::algebra::{Algebra, CartanMatrix, HighestWeight, Weight};
use crate::color::Color;
use crate::poset::{EdgeColoredPoset, RankFunction};

/// `sum c * x^i * y^j` with `x = e(omega_alpha)`, `y = e(omega_beta)`. No zero
/// coefficients are stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly2 {
    terms: BTreeMap<(i64, i64), i64>,
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        LaurentPoly2::default()
    }

    pub fn one() -> Self {
        LaurentPoly2::monomial(Weight::ZERO, 1)
    }

    pub fn monomial(w: Weight, c: i64) -> Self {
        let mut p = LaurentPoly2::zero();
        p.add_term(w, c);
        p
    }

    pub fn add_term(&mut self, w: Weight, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry((w.a, w.b)).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&(w.a, w.b));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: Weight) -> i64 {
        self.terms.get(&(w.a, w.b)).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Weight, i64)> + '_ {
        self.terms.iter().map(|(&(a, b), &c)| (Weight::new(a, b), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Value at `x = y = 1`.
    pub fn eval_one(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Applies a linear map to every exponent.
    pub fn map_exponents(&self, f: impl Fn(Weight) -> Weight) -> Self {
        let mut p = LaurentPoly2::zero();
        for (w, c) in self.terms() {
            p.add_term(f(w), c);
        }
        p
    }
}

impl Add for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(self, o: &LaurentPoly2) -> LaurentPoly2 {
        let mut p = self.clone();
        for (w, c) in o.terms() {
            p.add_term(w, c);
        }
        p
    }
}

impl Sub for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, o: &LaurentPoly2) -> LaurentPoly2 {
        self + &(-o)
    }
}

impl Neg for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        LaurentPoly2 { terms: self.terms.iter().map(|(&k, &c)| (k, -c)).collect() }
    }
}

impl Mul for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, o: &LaurentPoly2) -> LaurentPoly2 {
        let mut p = LaurentPoly2::zero();
        for (w1, c1) in self.terms() {
            for (w2, c2) in o.terms() {
                p.add_term(w1 + w2, c1 * c2);
            }
        }
        p
    }
}

/// Canonical text: terms `c*x^i*y^j` sorted by `(i, j)`, joined by ` + `.
impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*x^{}*y^{}", w.a, w.b)?;
        }
        Ok(())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("cannot parse Laurent polynomial at byte {pos}: {msg}")]
pub struct ParsePolyError {
    pub pos: usize,
    pub msg: String,
}

/// Accepts the canonical form and the usual TeX-like notation, e.g.
/// `xy - x^{-1}y^{2} + 3x^2*y^-1`.
impl FromStr for LaurentPoly2 {
    type Err = ParsePolyError;

    fn from_str(s: &str) -> Result<Self, ParsePolyError> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let err = |pos: usize, msg: &str| ParsePolyError { pos, msg: msg.to_string() };
        if chars == ['0'] {
            return Ok(LaurentPoly2::zero());
        }
        let mut p = LaurentPoly2::zero();
        let mut i = 0;
        let int = |i: &mut usize| -> Option<i64> {
            let start = *i;
            if *i < chars.len() && (chars[*i] == '-' || chars[*i] == '+') {
                *i += 1;
            }
            while *i < chars.len() && chars[*i].is_ascii_digit() {
                *i += 1;
            }
            chars[start..*i].iter().collect::<String>().parse().ok()
        };
        if chars.is_empty() {
            return Err(err(0, "empty input"));
        }
        while i < chars.len() {
            let mut sign = 1;
            let mut seen_sign = false;
            while i < chars.len() && (chars[i] == '+' || chars[i] == '-') {
                if chars[i] == '-' {
                    sign = -sign;
                }
                seen_sign = true;
                i += 1;
            }
            if !seen_sign && i > 0 {
                return Err(err(i, "expected + or -"));
            }
            let mut coeff = 1;
            let mut any = false;
            if i < chars.len() && chars[i].is_ascii_digit() {
                coeff = int(&mut i).ok_or_else(|| err(i, "bad coefficient"))?;
                any = true;
            }
            let mut w = Weight::ZERO;
            loop {
                if i < chars.len() && chars[i] == '*' {
                    i += 1;
                }
                if i >= chars.len() || (chars[i] != 'x' && chars[i] != 'y') {
                    break;
                }
                let var = chars[i];
                i += 1;
                let mut e = 1;
                if i < chars.len() && chars[i] == '^' {
                    i += 1;
                    if i < chars.len() && chars[i] == '{' {
                        i += 1;
                        e = int(&mut i).ok_or_else(|| err(i, "bad exponent"))?;
                        if i >= chars.len() || chars[i] != '}' {
                            return Err(err(i, "missing }"));
                        }
                        i += 1;
                    } else {
                        e = int(&mut i).ok_or_else(|| err(i, "bad exponent"))?;
                    }
                }
                if var == 'x' {
                    w.a += e;
                } else {
                    w.b += e;
                }
                any = true;
            }
            if !any {
                return Err(err(i, "expected a term"));
            }
            p.add_term(w, sign * coeff);
        }
        Ok(p)
    }
}

/// Linear map on fundamental-weight coordinates: `(p, q) -> p * rows[0] + q * rows[1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    pub rows: [Weight; 2],
}

impl WeylElement {
    pub const IDENTITY: WeylElement = WeylElement { rows: [Weight::new(1, 0), Weight::new(0, 1)] };

    pub fn apply(&self, w: Weight) -> Weight {
        self.rows[0].scale(w.a) + self.rows[1].scale(w.b)
    }

    /// `self` after `inner`.
    pub fn compose(&self, inner: &WeylElement) -> WeylElement {
        WeylElement { rows: [self.apply(inner.rows[0]), self.apply(inner.rows[1])] }
    }

    pub fn det(&self) -> i64 {
        self.rows[0].a * self.rows[1].b - self.rows[0].b * self.rows[1].a
    }
}

/// Simple reflection `s_c(mu) = mu - mu_c * (row c of the Cartan matrix)`.
pub fn simple_reflection(g: Algebra, c: Color, mu: Weight) -> Weight {
    mu - g.cartan().row(c).scale(mu.get(c))
}

fn reflection_element(g: Algebra, c: Color) -> WeylElement {
    WeylElement {
        rows: [
            simple_reflection(g, c, Weight::new(1, 0)),
            simple_reflection(g, c, Weight::new(0, 1)),
        ],
    }
}

#[derive(Clone, Debug)]
pub struct RootData {
    pub algebra: Algebra,
    pub cartan: CartanMatrix,
    pub simple: [Weight; 2],
    pub positive_roots: Vec<Weight>,
    /// In breadth-first order from the identity.
    pub weyl_group: Vec<WeylElement>,
}

impl RootData {
    pub fn new(g: Algebra) -> RootData {
        let cartan = g.cartan();
        let gens = [reflection_element(g, Color::Alpha), reflection_element(g, Color::Beta)];
        let mut group = vec![WeylElement::IDENTITY];
        let mut seen: HashSet<WeylElement> = group.iter().copied().collect();
        let mut queue = VecDeque::from([WeylElement::IDENTITY]);
        while let Some(x) = queue.pop_front() {
            for s in &gens {
                let y = s.compose(&x);
                if seen.insert(y) {
                    group.push(y);
                    queue.push_back(y);
                }
            }
        }
        let simple = [cartan.row(Color::Alpha), cartan.row(Color::Beta)];
        let mut roots: Vec<Weight> = Vec::new();
        for w in &group {
            for r in simple {
                let x = w.apply(r);
                if !roots.contains(&x) {
                    roots.push(x);
                }
            }
        }
        let positive_roots = roots
            .into_iter()
            .filter(|&r| {
                let (ca, cb) = root_coordinates_scaled(&cartan, r);
                ca >= 0 && cb >= 0
            })
            .collect();
        RootData { algebra: g, cartan, simple, positive_roots, weyl_group: group }
    }

    pub fn rho() -> Weight {
        Weight::new(1, 1)
    }

    /// `sum_w det(w) e(w mu)`.
    pub fn alternating_sum(&self, mu: Weight) -> LaurentPoly2 {
        let mut p = LaurentPoly2::zero();
        for w in &self.weyl_group {
            p.add_term(w.apply(mu), w.det());
        }
        p
    }
}

/// `det(C) * (c_alpha, c_beta)` where `mu = c_alpha * alpha + c_beta * beta`.
fn root_coordinates_scaled(cartan: &CartanMatrix, mu: Weight) -> (i64, i64) {
    let (a, b) = (cartan.row(Color::Alpha), cartan.row(Color::Beta));
    (mu.a * b.b - mu.b * b.a, a.a * mu.b - a.b * mu.a)
}

pub fn weyl_group(g: Algebra) -> RootData {
    RootData::new(g)
}

pub fn alternating_sum(g: Algebra, mu: Weight) -> LaurentPoly2 {
    RootData::new(g).alternating_sum(mu)
}

pub fn character_from_weights(weights: &[Weight]) -> LaurentPoly2 {
    let mut p = LaurentPoly2::zero();
    for &w in weights {
        p.add_term(w, 1);
    }
    p
}

pub fn character_from_lattice(l: &crate::lattice::IdealLattice) -> LaurentPoly2 {
    character_from_weights(l.weights())
}

/// `A_rho * chi == A_{rho + lambda}`.
pub fn verify_weyl_character(g: Algebra, lam: HighestWeight, chi: &LaurentPoly2) -> bool {
    let rd = RootData::new(g);
    let lhs = &rd.alternating_sum(RootData::rho()) * chi;
    lhs == rd.alternating_sum(RootData::rho() + lam.weight())
}

/// Fixed by both simple reflections acting on exponents.
pub fn is_weyl_invariant(g: Algebra, chi: &LaurentPoly2) -> bool {
    Color::ALL
        .iter()
        .all(|&c| chi.map_exponents(|w| simple_reflection(g, c, w)) == *chi)
}

/// Polynomial in `q` with coefficients listed from degree 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPoly(Vec<i64>);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("division by 1 - q^{0} leaves a nonzero remainder")]
pub struct InexactDivision(pub u32);

impl QPoly {
    pub fn new(mut coeffs: Vec<i64>) -> QPoly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        QPoly(coeffs)
    }

    pub fn one() -> QPoly {
        QPoly(vec![1])
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval_one(&self) -> i64 {
        self.0.iter().sum()
    }

    /// `1 - q^k`.
    pub fn one_minus_q_pow(k: u32) -> QPoly {
        let mut c = vec![0; k as usize + 1];
        c[0] += 1;
        c[k as usize] -= 1;
        QPoly::new(c)
    }

    pub fn mul(&self, o: &QPoly) -> QPoly {
        if self.0.is_empty() || o.0.is_empty() {
            return QPoly::default();
        }
        let mut c = vec![0; self.0.len() + o.0.len() - 1];
        for (i, &x) in self.0.iter().enumerate() {
            for (j, &y) in o.0.iter().enumerate() {
                c[i + j] += x * y;
            }
        }
        QPoly::new(c)
    }

    /// Exact division by `1 - q^k`, `k >= 1`.
    pub fn div_one_minus_q_pow(&self, k: u32) -> Result<QPoly, InexactDivision> {
        let k = k as usize;
        assert!(k >= 1);
        // self = (1 - q^k) * r  <=>  r_i = s_i + r_{i-k}
        let n = self.0.len();
        if n == 0 {
            return Ok(QPoly::default());
        }
        if n <= k {
            return Err(InexactDivision(k as u32));
        }
        let mut r = vec![0; n - k];
        for i in 0..n - k {
            r[i] = self.0[i] + if i >= k { r[i - k] } else { 0 };
        }
        let back = QPoly::new(r.clone()).mul(&QPoly::one_minus_q_pow(k as u32));
        if back != *self {
            return Err(InexactDivision(k as u32));
        }
        Ok(QPoly::new(r))
    }

    pub fn is_palindromic(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    pub fn is_unimodal(&self) -> bool {
        let c = &self.0;
        let mut i = 0;
        while i + 1 < c.len() && c[i] <= c[i + 1] {
            i += 1;
        }
        while i + 1 < c.len() && c[i] >= c[i + 1] {
            i += 1;
        }
        i + 1 >= c.len()
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// `prod (1 - q^n) / prod (1 - q^d)`, dividing one factor at a time.
pub fn quotient_of_products(numer: &[u32], denom: &[u32]) -> Result<QPoly, InexactDivision> {
    let mut p = QPoly::one();
    for &n in numer {
        p = p.mul(&QPoly::one_minus_q_pow(n));
    }
    for &d in denom {
        p = p.div_one_minus_q_pow(d)?;
    }
    Ok(p)
}

/// Numerator and denominator exponents of the closed-form rank generating function.
pub fn rgf_factors(g: Algebra, lam: HighestWeight) -> (Vec<u32>, Vec<u32>) {
    let (a, b) = (lam.a, lam.b);
    match g {
        Algebra::A1A1 => (vec![a + 1, b + 1], vec![1, 1]),
        Algebra::A2 => (vec![a + 1, b + 1, a + b + 2], vec![1, 1, 2]),
        Algebra::C2 => (vec![a + 1, b + 1, a + b + 2, a + 2 * b + 3], vec![1, 1, 2, 3]),
        Algebra::G2 => (
            vec![a + 1, b + 1, a + b + 2, a + 2 * b + 3, a + 3 * b + 4, 2 * a + 3 * b + 5],
            vec![1, 1, 2, 3, 4, 5],
        ),
    }
}

pub fn rgf_product(g: Algebra, lam: HighestWeight) -> Result<QPoly, InexactDivision> {
    let (n, d) = rgf_factors(g, lam);
    quotient_of_products(&n, &d)
}

/// The five-factor product for the `G2` lattices of weight `(0, m)`.
pub fn quasi_gaussian(m: u32) -> Result<QPoly, InexactDivision> {
    quotient_of_products(&[m + 1, m + 2, 2 * m + 3, 3 * m + 4, 3 * m + 5], &[1, 2, 3, 4, 5])
}

pub fn rgf_from_sizes(sizes: &[u64]) -> QPoly {
    QPoly::new(sizes.iter().map(|&c| c as i64).collect())
}

pub fn rgf_from_lattice(l: &crate::lattice::IdealLattice) -> QPoly {
    rgf_from_sizes(&l.rank_sizes())
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NaturalRankError {
    #[error("lattice has no unique maximal element")]
    NoTop,
    #[error("pairing with the coroot sum is not integral at element {0}")]
    NotIntegral(usize),
    #[error("rank {rank} of element {element} is outside 0..={l}")]
    OutOfRange { element: usize, rank: i64, l: i64 },
    #[error("cover {0} -> {1} does not raise the rank by one")]
    NotRankCompatible(usize, usize),
}

/// `rho(t) = l/2 + <wt(t), rho-check>` with `l = 2 <wt(top), rho-check>`.
pub fn natural_rank(l: &EdgeColoredPoset, weights: &[Weight], g: Algebra) -> Result<RankFunction, NaturalRankError> {
    let cartan = g.cartan();
    let d = cartan.det();
    let tops = l.poset.maximal();
    if tops.len() != 1 {
        return Err(NaturalRankError::NoTop);
    }
    let pair = |w: Weight| {
        let (x, y) = root_coordinates_scaled(&cartan, w);
        x + y
    };
    let top_pair = pair(weights[tops[0]]);
    if (2 * top_pair) % d != 0 {
        return Err(NaturalRankError::NotIntegral(tops[0]));
    }
    let length = 2 * top_pair / d;
    let mut ranks = Vec::with_capacity(l.len());
    for (s, &w) in weights.iter().enumerate() {
        let num = top_pair + pair(w);
        if num % d != 0 {
            return Err(NaturalRankError::NotIntegral(s));
        }
        let r = num / d;
        if r < 0 || r > length {
            return Err(NaturalRankError::OutOfRange { element: s, rank: r, l: length });
        }
        ranks.push(r as u32);
    }
    for &(u, v) in l.poset.covers() {
        if ranks[v] != ranks[u] + 1 {
            return Err(NaturalRankError::NotRankCompatible(u, v));
        }
    }
    Ok(RankFunction { ranks, length: length as u32 })
}
