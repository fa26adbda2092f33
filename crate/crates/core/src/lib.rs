//! Exact computation of increasing-spanning-forest symmetric functions,
//! chromatic quasisymmetric functions and unicellular LLT polynomials of
//! indifference graphs.

pub mod coeffs;
pub mod error;
pub mod forests;
pub mod graphs;
pub mod oracles;
pub mod partitions;
pub mod symfunc;
pub mod verify;

pub use coeffs::{q_binomial, q_factorial, q_integer, QPoly, Rational};
pub use error::{Error, Result};
pub use forests::{IncreasingForest, Perm, YBasis};
pub use graphs::{Decoration, Graph, HessenbergFunction, ModularTriple};
pub use partitions::{Composition, Partition};
pub use symfunc::{Basis, MonomialSym, SymFunc};
pub use verify::{Check, VerificationReport, VerifyOptions};
