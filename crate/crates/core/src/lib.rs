//! Exact power-sum characters and Casimir eigenvalue polynomials for the
//! Lie algebras A_N.
//!
//! The crate is organised bottom-up:
//!
//! * [`lattice`]: weights in the λ- and μ-bases, partitions, ξ factors.
//! * [`orbits`]: Weyl orbits as multiset permutations.
//! * [`symfun`]: monomial symmetric generators and their power-sum reduction.
//! * [`orbit_char`]: `ch_s` of a Weyl orbit and its `cof` coefficients.
//! * [`reps`]: Weyl dimension, Freudenthal multiplicities, orbital
//!   decompositions.
//! * [`eigenpoly`]: θ/Θ variables and the closed-form eigenvalue polynomials
//!   of orders 4 to 7, with an exact verification pipeline.

pub mod eigenpoly;
pub mod error;
pub mod lattice;
pub mod orbit_char;
pub mod orbits;
pub mod reps;
pub mod symfun;

pub use error::{Error, Result};
pub use lattice::{DominantLambda, LambdaWeight, MuTuple, Partition, Rank, Scalar};
pub use orbit_char::{CofVector, Method};
pub use symfun::{Basis, SymExpr};
