//! Exact algebra for the Bourgain and Sacksteder hypersurfaces.
//!
//! The crate builds both hypersurfaces as polynomials with rational
//! coefficients and checks their geometry as polynomial identities:
//! singular loci, Gauss-map rank, the conic envelope of the ruling, the
//! focal determinant, and the explicit coordinate change relating the two.

pub mod cli;
pub mod equivalence;
pub mod hypersurface;
pub mod polyring;
pub mod projgeom;
pub mod ruled;
pub mod sampling;
