//! swforge-core: exact arithmetic for the invariants of knots and smooth
//! simply connected 4-manifolds.
//!
//! The crate is organized around one value type and five calculi:
//!
//! - [`laurent`] — sparse integer Laurent polynomials in named variables
//!   with half-integer exponents; the universal value type.
//! - [`knot`] — presentations (braid words, torus parameters, 2-bridge
//!   fractions, skein resolution trees) and their text grammar.
//! - [`alexander`] — symmetrized Alexander polynomials by three independent
//!   routes: reduced Burau determinants, closed torus-knot forms and
//!   2-bridge state sums, and skein-tree evaluation.
//! - [`sw`] — Seiberg-Witten invariants as Laurent polynomials in formal
//!   homology-class variables: knot/rim/link surgery, branched-cover and
//!   pair products, basic-class reports, symmetry checking.
//! - [`geography`] — characteristic numbers, the Noether line, blowdown
//!   plumbing chains, lens-space classification, and the intersection-form
//!   homeomorphism comparator.
//!
//! All values are immutable and all operations are pure functions; every
//! computation is exact (BigInt coefficients, rational evaluation).

pub mod alexander;
pub mod error;
pub mod geography;
pub mod knot;
pub mod laurent;
pub mod sw;

pub use error::{Error, Result};
