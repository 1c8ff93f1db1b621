//! Rank-two semistandard posets: grid posets, their colored order-ideal
//! lattices, Weyl characters, rank generating functions and tableau models.

pub mod algebra;
pub mod build;
pub mod color;
pub mod grid;
pub mod io;
pub mod iso;
pub mod lattice;
pub mod poset;
pub mod tableaux;
pub mod verify;
pub mod weyl;

pub use algebra::{Algebra, CartanMatrix, Fundamental, HighestWeight, Order, Weight};
pub use build::{fundamental_poset, semistandard_poset, semistandard_poset_oracle};
pub use color::{Color, Sigma};
pub use grid::{Decomposition, GridPoset, GridViolation};
pub use lattice::{DecomposedLattice, IdealLattice, LatticeError};
pub use poset::{EdgeColoredPoset, Poset, PosetError, RankFunction, VertexColoredPoset};
pub use tableaux::{LittelmannTableau, Tableau, TableauMap};
pub use weyl::{LaurentPoly2, QPoly, RootData, WeylElement};
