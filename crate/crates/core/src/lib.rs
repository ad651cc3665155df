//! Combinatorial link diagrams with an unknotting-number oracle and
//! smoothing-based lower bounds on Reidemeister move counts.
//!
//! The central type is [`diagram::LinkDiagram`], an oriented link diagram
//! encoded PD-style: one 4-tuple of arc labels per crossing, listed
//! counterclockwise from the incoming under-arc, with arcs numbered
//! consecutively along each component. On top of that sit:
//!
//! - [`moves`]: Reidemeister move detection, application, and a simplifier;
//! - [`smoothing`]: regular (orientation-consistent) and irregular
//!   (orientation-reversing) smoothing at a crossing;
//! - [`identify`]: bracket/Jones polynomials, Seifert signature and nullity,
//!   and fingerprint lookup against a built-in catalogue of small links;
//! - [`unknotting`]: the oracle `u(·)` returning certified intervals;
//! - [`invariants`]: the smoothing invariants `ilk`/`g`/`g0` and the
//!   `iu` family, whose differences bound Reidemeister move counts.

pub mod canon;
pub mod catalogue;
pub mod codec;
pub mod construct;
pub mod diagram;
pub mod error;
pub mod faces;
pub mod fingerprint;
pub mod goeritz;
pub mod identify;
pub mod invariants;
pub mod mapgraph;
pub mod moves;
pub mod numeric;
pub mod poly;
pub mod seifert;
pub mod smoothing;
pub mod unknotting;

pub mod bracket;
pub mod fixtures;

pub use diagram::{Crossing, LinkDiagram};
pub use error::KnotError;
