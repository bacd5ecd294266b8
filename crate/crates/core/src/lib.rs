//! Exact arithmetic for finite-dimensional Hopf algebras, comodule algebras
//! and Hopf-Galois extensions over finite fields.

pub mod config;
pub mod error;
pub mod fdalg;
pub mod galois;
pub mod hopf;
pub mod field;
pub mod json;
pub mod linalg;
pub mod poly;
pub mod reslie;
pub mod speclab;

pub use error::{Error, Result};
pub use fdalg::{BlockReport, SCAlgebra, Violation};
pub use hopf::{HopfAlgebra, LinMap};
pub use field::{Fe, Field, FieldSpec, Scalar};
pub use linalg::{Matrix, Subspace};
pub use poly::Poly;
pub use reslie::{Fiber, FiberPoint, RestrictedLie};
pub use config::Config;
