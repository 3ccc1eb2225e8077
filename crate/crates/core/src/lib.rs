//! Exact Frobenius computations in positive characteristic.
//!
//! The crate is organised bottom-up:
//!
//! * [`field`]: `F_p` and `F_{p^m}`, Frobenius and `p`-th roots.
//! * [`poly`]: sparse multivariate polynomials over `F_p`.
//! * [`groebner`]: Buchberger's algorithm, normal forms, colon ideals.
//! * [`frobenius_ideals`]: bracket powers, Fedder's criterion, colon criteria
//!   for Frobenius-stable submodules.
//! * [`semilinear`]: `p^e`-linear maps `v -> A v^{[q]}` on free modules.
//! * [`cohomology`]: top local cohomology of graded hypersurfaces and the
//!   simplicity verdict for `H^1_{(f)}(R)`.
//!
//! Matrices and semilinear maps are generic over [`FrobeniusScalar`]; the
//! aliases below fix the two coefficient domains used in practice.

pub mod cohomology;
pub mod field;
pub mod frobenius_ideals;
pub mod groebner;
pub mod matrix;
pub mod parse;
pub mod poly;
pub mod scalar;
pub mod semilinear;
pub mod twisted;

pub use cohomology::{CechClass, GradedHypersurface, SimplicityReport, Verdict};
pub use field::{FieldRef, FieldScalar, FiniteField, PrimeModulus};
pub use groebner::{GroebnerBasis, GroebnerBudget, Ideal};
pub use matrix::Matrix;
pub use poly::{Monomial, MonomialOrder, PolyRing, Polynomial, RingRef};
pub use scalar::FrobeniusScalar;
pub use semilinear::SemilinearMap;
pub use twisted::TwistedPoly;

/// Matrix over a finite field.
pub type FieldMatrix = Matrix<FieldScalar>;
/// Matrix over `k[x^{1/p^t}]`.
pub type TwistedMatrix = Matrix<TwistedPoly>;
/// Semilinear map over a finite field.
pub type FieldSemilinearMap = SemilinearMap<FieldScalar>;
/// Semilinear map over `k[x^{1/p^t}]`.
pub type TwistedSemilinearMap = SemilinearMap<TwistedPoly>;
