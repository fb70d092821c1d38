//! Multivariate orthogonal polynomials attached to simple Lie algebras:
//! Weyl-orbit sums, orbit-function products, weight multiplicities and the
//! recursive generation of C- and S-polynomials.

#![allow(clippy::needless_range_loop)]

pub mod cache;
pub mod error;
pub mod genpoly;
mod linalg;
pub mod multiplicities;
pub mod numeval;
pub mod orbitalg;
pub mod orbits;
pub mod polyring;
pub mod reference;
pub mod rootsys;
pub mod verify;

pub use error::{Error, Result};
pub use genpoly::{Generator, PolyTable, TableKind, VariableMode};
pub use multiplicities::{
    dim_irrep, inverse_character, kostka_inverse, multiplicity_matrix, weight_multiplicities, MultiplicityReport,
    MultiplicityTable,
};
pub use orbitalg::{cc_product, cs_product, derive_recursion, ss_product, Kind, OrbitCombination, Relation};
pub use orbits::{orbit_size, weyl_orbit, Orbit, OrbitPoint};
pub use polyring::{Coeff, MonomialOrder, Polynomial};
pub use rootsys::{AlgebraId, Congruence, DominantForm, FundamentalRegion, RootSystem, Series, Weight};

/// Exact rational scalar used for root-system data.
pub type Rational = num_rational::Ratio<i64>;

/// Polynomial with arbitrary-precision integer coefficients.
pub type IntPoly = Polynomial<num_bigint::BigInt>;

/// Polynomial with exact rational coefficients.
pub type RatPoly = Polynomial<num_rational::BigRational>;
