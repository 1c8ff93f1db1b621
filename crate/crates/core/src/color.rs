use std::fmt;

use serde::{Deserialize, Serialize};

/// One of the two simple roots. `Alpha` is the short one and sorts first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Color {
    #[serde(rename = "a")]
    Alpha,
    #[serde(rename = "b")]
    Beta,
}

impl Color {
    pub const ALL: [Color; 2] = [Color::Alpha, Color::Beta];

    pub fn index(self) -> usize {
        match self {
            Color::Alpha => 0,
            Color::Beta => 1,
        }
    }

    pub fn other(self) -> Color {
        match self {
            Color::Alpha => Color::Beta,
            Color::Beta => Color::Alpha,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Color::Alpha => "a",
            Color::Beta => "b",
        }
    }

    pub fn parse(s: &str) -> Option<Color> {
        match s {
            "a" | "alpha" => Some(Color::Alpha),
            "b" | "beta" => Some(Color::Beta),
            _ => None,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A function on the color set, stored as the images of alpha and beta.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Sigma(pub [Color; 2]);

impl Sigma {
    pub const IDENTITY: Sigma = Sigma([Color::Alpha, Color::Beta]);
    pub const SWAP: Sigma = Sigma([Color::Beta, Color::Alpha]);

    pub fn apply(self, c: Color) -> Color {
        self.0[c.index()]
    }

    pub fn compose(self, inner: Sigma) -> Sigma {
        Sigma([self.apply(inner.0[0]), self.apply(inner.0[1])])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_composition() {
        assert_eq!(Sigma::SWAP.compose(Sigma::SWAP), Sigma::IDENTITY);
        assert_eq!(Sigma::SWAP.apply(Color::Alpha), Color::Beta);
        assert_eq!(Color::parse("beta"), Some(Color::Beta));
        assert_eq!(Color::parse("c"), None);
    }
}
