//! The four rank-two Cartan types and small value types shared across modules.

use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::color::{Color, Sigma};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algebra {
    A1A1,
    A2,
    C2,
    G2,
}

impl Algebra {
    pub const ALL: [Algebra; 4] = [Algebra::A1A1, Algebra::A2, Algebra::C2, Algebra::G2];
    pub const SIMPLE: [Algebra; 3] = [Algebra::A2, Algebra::C2, Algebra::G2];

    pub fn name(self) -> &'static str {
        match self {
            Algebra::A1A1 => "a1a1",
            Algebra::A2 => "a2",
            Algebra::C2 => "c2",
            Algebra::G2 => "g2",
        }
    }

    pub fn cartan(self) -> CartanMatrix {
        CartanMatrix(match self {
            Algebra::A1A1 => [[2, 0], [0, 2]],
            Algebra::A2 => [[2, -1], [-1, 2]],
            Algebra::C2 => [[2, -1], [-2, 2]],
            Algebra::G2 => [[2, -1], [-3, 2]],
        })
    }

    /// Diagram symmetry induced by the longest Weyl group element.
    pub fn sigma0(self) -> Sigma {
        match self {
            Algebra::A2 => Sigma::SWAP,
            _ => Sigma::IDENTITY,
        }
    }

    pub fn is_simple(self) -> bool {
        self != Algebra::A1A1
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algebra {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "a1a1" => Ok(Algebra::A1A1),
            "a2" => Ok(Algebra::A2),
            "c2" | "b2" => Ok(Algebra::C2),
            "g2" => Ok(Algebra::G2),
            _ => Err(format!("unknown algebra `{s}` (expected a1a1, a2, c2 or g2)")),
        }
    }
}

/// Integer pair in fundamental-weight coordinates.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct Weight {
    pub a: i64,
    pub b: i64,
}

impl Weight {
    pub const ZERO: Weight = Weight { a: 0, b: 0 };

    pub const fn new(a: i64, b: i64) -> Weight {
        Weight { a, b }
    }

    pub fn get(self, c: Color) -> i64 {
        match c {
            Color::Alpha => self.a,
            Color::Beta => self.b,
        }
    }

    pub fn scale(self, k: i64) -> Weight {
        Weight::new(self.a * k, self.b * k)
    }
}

impl From<[i64; 2]> for Weight {
    fn from(v: [i64; 2]) -> Self {
        Weight::new(v[0], v[1])
    }
}

impl From<Weight> for [i64; 2] {
    fn from(w: Weight) -> Self {
        [w.a, w.b]
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, o: Weight) -> Weight {
        Weight::new(self.a + o.a, self.b + o.b)
    }
}

impl AddAssign for Weight {
    fn add_assign(&mut self, o: Weight) {
        self.a += o.a;
        self.b += o.b;
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, o: Weight) -> Weight {
        Weight::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight::new(-self.a, -self.b)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// 2x2 integer matrix indexed by colors; row `c` is the simple root `c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CartanMatrix(pub [[i64; 2]; 2]);

impl CartanMatrix {
    pub fn row(&self, c: Color) -> Weight {
        let r = self.0[c.index()];
        Weight::new(r[0], r[1])
    }

    pub fn det(&self) -> i64 {
        let m = self.0;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    pub fn from_rows(alpha: Weight, beta: Weight) -> Self {
        CartanMatrix([[alpha.a, alpha.b], [beta.a, beta.b]])
    }
}

/// Dominant weight `a * omega_alpha + b * omega_beta`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HighestWeight {
    pub a: u32,
    pub b: u32,
}

impl HighestWeight {
    pub const fn new(a: u32, b: u32) -> Self {
        HighestWeight { a, b }
    }

    pub fn weight(self) -> Weight {
        Weight::new(self.a as i64, self.b as i64)
    }
}

impl fmt::Display for HighestWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.a, self.b)
    }
}

impl FromStr for HighestWeight {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (a, b) = s
            .split_once(',')
            .ok_or_else(|| format!("weight `{s}` must look like A,B"))?;
        let parse = |t: &str| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| format!("weight component `{t}` is not a nonnegative integer"))
        };
        Ok(HighestWeight::new(parse(a)?, parse(b)?))
    }
}

/// Order in which the two fundamental piece types are stacked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Order {
    /// `b` copies of the beta-fundamental poset below `a` copies of the alpha one.
    BetaAlpha,
    /// `a` copies of the alpha-fundamental poset below `b` copies of the beta one.
    AlphaBeta,
}

impl Order {
    pub const BOTH: [Order; 2] = [Order::BetaAlpha, Order::AlphaBeta];

    pub fn name(self) -> &'static str {
        match self {
            Order::BetaAlpha => "ba",
            Order::AlphaBeta => "ab",
        }
    }
}

impl FromStr for Order {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "ba" => Ok(Order::BetaAlpha),
            "ab" => Ok(Order::AlphaBeta),
            _ => Err(format!("unknown order `{s}` (expected ba or ab)")),
        }
    }
}

/// Which fundamental weight a fundamental poset belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Fundamental {
    /// Highest weight (1,0).
    Alpha,
    /// Highest weight (0,1).
    Beta,
}

impl Fundamental {
    pub fn weight(self) -> HighestWeight {
        match self {
            Fundamental::Alpha => HighestWeight::new(1, 0),
            Fundamental::Beta => HighestWeight::new(0, 1),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cartan_determinants() {
        let dets: Vec<i64> = Algebra::ALL.iter().map(|g| g.cartan().det()).collect();
        assert_eq!(dets, [4, 3, 2, 1]);
        assert_eq!(Algebra::G2.cartan().row(Color::Beta), Weight::new(-3, 2));
    }

    #[test]
    fn parsing() {
        assert_eq!("B2".parse::<Algebra>(), Ok(Algebra::C2));
        assert_eq!(" 2, 3".parse::<HighestWeight>(), Ok(HighestWeight::new(2, 3)));
        assert!("2".parse::<HighestWeight>().is_err());
        assert!("-1,0".parse::<HighestWeight>().is_err());
        assert!("ba ".parse::<Order>().is_err());
    }
}
