//! Exact computations with transposition/inversion and PLR actions on the
//! 24 consonant triads, sub-dual systems, and the topos of actions of the
//! triadic monoid on Z12.
//!
//! Modules, bottom-up:
//!
//! - [`zmod`]: pitch classes, affine maps, triads and their covers
//! - [`permgroup`]: permutations, generated groups, orbits, brute-force
//!   centralizers and subgroup lists
//! - [`duality`]: regular representations, dual groups, the T/I and PLR
//!   groups, sub-dual systems
//! - [`monoid`]: the eight-element triadic monoid and its actions
//! - [`topos`]: left ideals, `Ω`, Lawvere–Tierney topologies, characteristic
//!   maps and upgrades
//! - [`enumerate`]: the search over all closed covered subsets of Z12

pub mod duality;
pub mod enumerate;
pub mod error;
pub mod monoid;
pub mod permgroup;
pub mod topos;
pub mod zmod;

pub use duality::{DualPair, PlrName, Side, SubDualSystem};
pub use error::{Error, Result};
pub use monoid::{MonoidAction, TriadicMonoid};
pub use permgroup::{Carrier, PermGroup, Permutation};
pub use topos::{LtTopology, Omega, TopologyName};
pub use zmod::{AffineMap, Chord, PcSet, PitchClass, Quality};
