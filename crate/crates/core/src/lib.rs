//! Exact F_2 computations for the Morava K-theory of `BO(q)` and `MO(q)` at
//! the prime 2.
//!
//! The crate computes the `Q_n`-homology of mod 2 homology (the only
//! Atiyah-Hirzebruch differential that occurs), enumerates the explicit
//! `b_{2i}`/`c_{4j}` basis, and compares both, degree by degree, with a
//! basis of monomial symmetric functions for the cohomology quotient ring.
//!
//! Module map:
//!
//! - [`f2linalg`]: bit-packed vectors and matrices over F_2.
//! - [`bo_homology`]: monomial bases of `H_*(BO(q))` and of the summands `M_q`.
//! - [`qn_action`]: the Milnor primitive `Q_n` and its homology per degree.
//! - [`morava_basis`]: the `b_{2i}`/`c_{4j}` basis and its Poincaré counts.
//! - [`coalgebra`]: the coproduct on that basis modulo `v_n`.
//! - [`symfun`]: monomial symmetric functions and the relation ideal.
//! - [`reconcile`]: the three-way comparison driver.
//! - [`cli`]: report rendering, caching and the command runner.

pub mod bo_homology;
pub mod cli;
pub mod coalgebra;
mod error;
pub mod f2linalg;
mod f2sum;
pub mod morava_basis;
mod partitions;
pub mod qn_action;
pub mod reconcile;
pub mod symfun;

pub use bo_homology::{BMonomial, DegreeSlice};
pub use coalgebra::TensorTerm;
pub use error::{Error, Result};
pub use f2linalg::{F2Matrix, F2Vector};
pub use f2sum::F2Sum;
pub use morava_basis::BcMonomial;
pub use qn_action::{HomologyReport, MoravaParams, QnOperator};
pub use reconcile::ReconcileReport;
pub use symfun::{Partition, SymPoly};
