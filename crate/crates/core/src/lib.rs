//! Classification machinery for finite Dehn surgeries on (-2,p,q) pretzel
//! knots (p, q odd, 5 <= p <= q).
//!
//! The pipeline combines four kinds of evidence:
//!
//! - cusp geometry: slope lengths on Euclidean cusp cross-sections cut the
//!   candidate list down via the 6-theorem ([`cusp`]);
//! - the total norm on peripheral homology: exact integer minimization over
//!   constrained coefficient vectors excludes slopes whose norm exceeds the
//!   finite-surgery bounds ([`norm`]);
//! - ideal points of the deformation variety: an integer-minor scan over
//!   degeneration types and Newton continuation to non-degenerate ideal
//!   points establish which boundary slopes are detected ([`ideal_points`],
//!   [`continuation`]);
//! - group theory: Smith normal form of surgered presentations and a
//!   bounded derivation search through Coxeter-family quotients
//!   ([`group`]).
//!
//! [`pipeline`] assembles everything into a per-knot elimination ledger;
//! the `pretzel-surgeon` binary exposes each stage as a subcommand.

pub mod cache;
pub mod continuation;
pub mod cusp;
pub mod data;
pub mod dilog;
pub mod gluing;
pub mod group;
pub mod ideal_points;
pub mod norm;
pub mod numeric;
pub mod ohtsuki;
pub mod pipeline;
pub mod slope;

pub use slope::{KnotSpec, Slope};
