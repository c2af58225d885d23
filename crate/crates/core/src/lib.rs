//! Exact symbolic calculus for sets of arcs in the marked infinite strip.
//!
//! Arc sets are finite lists of arcs plus finitely many integer zones per arc
//! kind. On top of that the crate decides Ptolemy-ness, the boundedness
//! conditions, cotorsion and torsion pairs, t-structures and triangulation
//! status, and builds finite left approximations.

pub mod arcset;
pub mod classify;
pub mod error;
pub mod families;
pub mod interval;
pub mod ng;
pub mod oracle;
pub mod presentation;
pub mod region;
pub mod render;
pub mod strip;
pub mod zone;

pub use error::Error;
pub use strip::{crosses, fan_compare, middle_terms, Arc, Boundary, FanKey, Kind, MarkedPoint};
