//! Exact computations with lattice polytopes and their toric rings.
//!
//! Everything here is exact: integers are arbitrary precision
//! ([`num_bigint::BigInt`]) and all geometry and algebra is carried out
//! over the rationals. The crate covers
//!
//! * integer linear algebra (Hermite/Smith normal forms, saturated
//!   kernels, rational solving),
//! * lattice polytopes with paired vertex/facet descriptions, polar
//!   duality, reflexivity and the bipyramid / pyramid / prism
//!   constructions,
//! * affine semigroups: Hilbert bases of pointed cones, normality (IDP)
//!   and very-ampleness certificates,
//! * the toric ideal of a polytope, Gröbner bases, Schreyer resolutions
//!   and the depth of the toric ring via Auslander–Buchsbaum.

pub mod budget;
pub mod cone;
pub mod depth;
pub mod error;
pub mod groebner;
pub mod matrix;
pub mod monomial;
pub mod poly;
pub mod polytope;
pub mod resolution;
pub mod toric;

pub use budget::Budget;
pub use error::{AlgebraError, ConeError, PolytopeError};
pub use matrix::{IntMatrix, RatMatrix, RatVector, SmithDecomposition, SolveOutcome};
pub use polytope::Polytope;
