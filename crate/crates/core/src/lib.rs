//! Exact computation of vertex cover algebras of weighted simplicial
//! complexes, together with the monomial ideal arithmetic needed to talk
//! about symbolic powers.
//!
//! The vertex cover algebra `A(Δ, w)` is the semigroup ring of the lattice
//! points of a rational cone in `ℤ^{n+1}`; its minimal generators are the
//! Hilbert basis of that cone. [`cone`] computes the Hilbert basis exactly
//! (double description, placing triangulation, parallelepiped enumeration),
//! [`complex`] and [`monomial`] supply the combinatorics and ideal calculus,
//! [`graphalg`] holds the constructive decompositions for graphs, and
//! [`algebra`] ties everything into graded presentations and predicates.

pub mod algebra;
pub mod complex;
pub mod cone;
pub mod error;
pub mod graphalg;
pub mod monomial;

pub use algebra::{AlgebraPresentation, DegreeBound, FsDeterminantBound, PowerComparison};
pub use complex::{CoverPoint, WeightedComplex};
pub use cone::{ConeSystem, HilbertBasis, Ray, SimplicialSubcone};
pub use error::{Error, Result};
pub use graphalg::{Decomposition, WeightedGraph};
pub use monomial::{ExponentVector, MonomialIdeal};
