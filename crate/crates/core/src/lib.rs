//! Crystals of q-deformed Kac modules over `U_q(gl(m|n))`.
//!
//! The crate models the colored graph `𝓑(K(λ))/{±1}` as triples of an odd
//! root subset and two tableaux, relates it to the tableau model `𝒦_λ` by a
//! skew dual RSK correspondence, and embeds the crystals of polynomial
//! representations `SST_𝓑(λ°)` into it. The [`verify`] module runs the
//! structural checks on exhaustively enumerated instances.

pub mod base;
pub mod embedding;
pub mod error;
pub mod graph;
pub mod kac;
pub mod rsk;
pub mod tableau;
pub mod verify;
pub mod word;

pub use base::{Color, Letter, OddRoot, Partition, Rank, Weight};
pub use error::{Error, Result};
pub use graph::CrystalGraph;
pub use kac::{KacCrystal, KacElement, OddRootSet};
pub use tableau::{Alphabet, ReadingOrder, SkewShape, Tableau};
pub use word::{Crystal, Dir};
