//! Exact-arithmetic construction, verification and classification of
//! two-distance tight frames arising from strongly regular graphs.
//!
//! A two-distance tight frame is a finite set of unit vectors whose pairwise
//! inner products take exactly two values and whose frame operator is a
//! multiple of the identity.  Outside the equiangular case (`a = -b`), every
//! such frame comes from projecting the standard basis onto an eigenspace of
//! a strongly regular graph's adjacency matrix, optionally shifted off the
//! origin; each graph yields exactly six frames.  This crate builds those
//! frames, verifies every defining property exactly over `Q` or `Q(sqrt(D))`,
//! and classifies a given Gram matrix back to its graph and type.
//!
//! Modules, bottom up:
//!
//! * [`scalar`]: rationals and quadratic extensions with exact comparison;
//!   float fallback for user data.
//! * [`matrix`]: dense matrices and a pivoted LDL^T factorization that
//!   certifies rank and positive semidefiniteness.
//! * [`srg`]: graph parameters, generators (triangular, lattice, Paley,
//!   Petersen, Clebsch complement), closed-form spectra, and the brute-force
//!   strong-regularity oracle.
//! * [`embed`]: eigenspace embeddings, the exact feasibility triangle of
//!   inner-product pairs, and weighted mixes.
//! * [`frames`]: tightness, frame potential, two-distance profile,
//!   regularity, the row-sum dichotomy, design conditions, and graph
//!   recovery from a Gram matrix.
//! * [`construct`]: the six-frame factory, the shift lift, the projected
//!   pair-set frame, the reference table, and the classifier.
//! * [`io`]: JSON and CSV wire formats.
//!
//! ```
//! use tdframe::{construct, embed, frames, scalar::Mode, srg};
//!
//! let graph = srg::triangular(5).unwrap();
//! let gram = embed::dgs_gram(&graph, 1).unwrap();
//! let report = frames::analyze(&gram, Mode::Exact);
//! assert!(report.tight);
//! assert_eq!(report.a.unwrap().to_string(), "1/6");
//!
//! let class = construct::classify(gram.matrix(), Mode::Exact).unwrap();
//! assert_eq!(class.tag, construct::FrameTag::DesignS1);
//! ```

pub mod error;
pub mod scalar;
pub mod matrix;
pub mod srg;
pub mod embed;
pub mod frames;
pub mod construct;
pub mod io;

#[cfg(test)]
pub(crate) mod testutil;

pub use error::{Error, Result};
pub use scalar::{Mode, Scalar};
