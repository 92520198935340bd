//! Exact counting of complete tau-exceptional sequences over the Nakayama
//! algebras `Gamma(n, t)` (linear) and `Lambda(n, t)` (cyclic), together
//! with the independent oracles used to check the counts.
//!
//! - [`nakayama`]: modules, tau, Hom/Ext, tau-rigidity, Bongartz completion.
//! - [`perpendicular`]: the reductions `J(M)` as direct sums of algebras.
//! - [`enumeration`]: memoised counts, naive counts, explicit chains.
//! - [`combinatorics`]: restricted Fubini numbers and closed formulas.
//! - [`egf`]: truncated exponential generating functions.
//! - [`verify`]: named check suites shared by the tests and the CLI.

pub mod combinatorics;
pub mod egf;
pub mod enumeration;
mod error;
pub mod nakayama;
pub mod perpendicular;
pub mod verify;

pub use error::{Error, Result};
