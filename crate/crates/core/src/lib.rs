//! Exact representation combinatorics for free wreath products `G ≀* S_N^+`.
//!
//! The crate computes fusion rules, dimensions, Hom-space dimensions,
//! character laws and Weingarten integrals for free wreath products by the
//! quantum permutation group, together with the Temperley-Lieb collapsing
//! isomorphism and brute-force oracles for the main identities.
//!
//! All core computations are exact. Numeric code that does not depend on a
//! particular number system (sparse maps, dense linear algebra, moment and
//! cumulant machinery, the quadratic ring `Q(√N)`) is generic over a
//! [`Scalar`]; the aliases below fix the exact instantiations used throughout.

pub mod caps;
pub mod error;
pub mod exactnum;
pub mod freeprob;
pub mod fusion;
pub mod homspaces;
pub mod linalg;
pub mod linmaps;
pub mod partitions;
pub mod report;
pub mod scalar;
pub mod tl;
pub mod weingarten;

pub use error::{Error, Result};
pub use exactnum::{ChebPoly, IntPoly, NPow, QNum};
pub use partitions::{Mode, Partition};
pub use report::Report;
pub use scalar::Scalar;

/// Arbitrary-precision integer.
pub type Integer = num_bigint::BigInt;
/// Arbitrary-precision rational; the default exact scalar.
pub type Rational = num_rational::BigRational;
/// Element of `Q(√N)` with rational coordinates.
pub type QRational = QNum<Rational>;
/// Dense exact matrices.
pub type RationalMatrix = linalg::Matrix<Rational>;
pub type IntegerMatrix = linalg::Matrix<Integer>;
/// Sparse map with exact rational entries.
pub type RationalMap = linmaps::SparseMap<Rational>;
/// Floating point instantiation, for display only.
pub type QFloat = QNum<f64>;
