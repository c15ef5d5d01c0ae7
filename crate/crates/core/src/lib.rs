//! Combinatorics of critical portraits for polynomial maps of the circle.
//!
//! The crate validates critical portraits, computes addresses and symbol
//! sequences under `m_d`, builds the families F* and J*, the abstract web and
//! its self-map, checks for Levy-cycle witnesses and solves the untwisting
//! equations exactly.

pub mod angle;
pub mod error;
pub mod generate;
pub mod portrait;
pub mod twist;
pub mod web;

pub use angle::{Angle, Arc, OrbitDecomposition, Rational};
pub use error::Error;
pub use portrait::{AddressSystem, CriticalPortrait, Itinerary, MarkedPartition, PieceId};
