//! Exact canonical heights and torsion classification on linear algebraic
//! groups over the algebraic numbers.
//!
//! The crate is organized bottom-up:
//!
//! - [`exactpoly`]: rational arithmetic, polynomial algebra over Q,
//!   factorization, cyclotomic polynomials, certified complex root isolation;
//! - [`numfield`]: number fields Q(theta) with exact element arithmetic,
//!   minimal polynomials, embeddings and root-of-unity recognition;
//! - [`lattice`]: integer linear algebra (Hermite/Smith normal forms) backing
//!   ideal norms and torsion-coset intersections;
//! - [`matgroup`]: exact matrix algebra over a number field,
//!   Jordan-Chevalley decomposition and torsion classifiers;
//! - [`heights`]: Weil and projective heights, Mahler measures, and the
//!   canonical and eigenvalue heights on GL_t;
//! - [`quotient`]: the conjugation quotient of GL_t by characteristic
//!   polynomial invariants, SL_2 trace fibers, special-curve intersections
//!   and torsion-coset intersection in tori;
//! - [`borel`]: the Borel subgroup of GL_3 as a semidirect product, with its
//!   explicit torsion strata;
//! - [`json`]: the serialized interchange formats used by the CLI.
//!
//! Every public operation is a pure function over immutable values and safe
//! for concurrent use.

pub mod error;
pub mod exactpoly;
pub mod numfield;
pub mod lattice;
pub mod matgroup;
pub mod heights;
pub mod quotient;
pub mod borel;
pub mod json;

pub use error::{Error, Result};
pub use num_rational::BigRational;
