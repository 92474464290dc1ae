//! Certified computation of Bohr- and Rogosinski-type constants for ordinary
//! Dirichlet series Σ a_n n^{-s} on the right half-plane.
//!
//! The central object is the square-root sum
//! F(σ) = Σ_{k≥1} (Σ_{Ω(n)=k, n≥2} n^{-2σ})^{1/2}
//! over k-almost-prime zeta sums, evaluated with certified error radii. Its
//! level sets F = 1/2 and F = 1 are solved by bisection with a sign-change
//! certificate, reproducing the abscissa estimates 1.7267 and 1.2061. The
//! crate also lifts Dirichlet polynomials to multivariate monomials over
//! prime coordinates, builds the exponent lattices Π p_i^{α_i} ≤ k with
//! verified integer rationalizations, and derives per-degree Rogosinski
//! half-plane bounds from the radii r_l.
//!
//! Every series evaluation returns an [`enclosure::Enclosure`], a value with
//! a certified absolute error radius; brute-force validators live in
//! [`oracle`] and the full acceptance suite in [`verify`].

pub mod enclosure;
pub mod error;
pub mod lift;
pub mod oracle;
pub mod output;
pub mod primes;
pub mod solver;
pub mod verify;
pub mod zeta;

pub use enclosure::Enclosure;
pub use error::{Error, Result};
pub use lift::{DirichletPolynomial, LatticeSpec, MonomialExpansion};
pub use primes::{ExponentVector, PrimeTable};
pub use solver::AbscissaResult;
pub use zeta::TruncationPolicy;
