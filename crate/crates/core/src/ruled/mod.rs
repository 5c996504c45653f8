//! Ruled structure of the cubic: Gauss map rank, the envelope of the line
//! family in the singular plane, focal points on the rulings, and the
//! pencil decomposition of the foliation.
//!
//! Rank convention: the Gauss image is a map into projective space, so its
//! rank at a parameter value `t` is `rank([G(t) | J(t)]) - 1`, where `G` is
//! the gradient composed with the parametrization and `J` its Jacobian.
//! The generic rank is the maximum of that number over seeded samples.

mod envelope;
mod focal;
mod gauss;
mod pencil;
mod steiner;

pub use envelope::{
    conic_polynomial, conic_tangency_map, conic_tangency_point, envelope, Envelope, EnvelopeMethod,
    LineFamily,
};
pub use focal::{
    focal_points_on_generator, focal_system, generator_map, FocalReport, FocalRoot, FocalSystem,
    CHART_NOTE,
};
pub use gauss::{
    gauss_map, generic_rank, jacobian, jacobian_at, projective_rank_at, GaussImage, RankReport,
};
pub use pencil::{pencil_structure_report, PencilCheck, PencilReport};
pub use steiner::{
    implicitize_triangular, steiner_construction, torsal_plane_family, SteinerReport,
};

use thiserror::Error;

use crate::hypersurface::SurfaceError;
use crate::polyring::PolyError;
use crate::projgeom::GeomError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RuledError {
    #[error("parametrization does not lie on the hypersurface; residual {0}")]
    NotContained(String),
    #[error("all {0} sample points hit the base locus (zero image); try another seed")]
    AllSamplesDegenerate(usize),
    #[error("family must be linear in the plane coordinates: {0}")]
    NotLinear(String),
    #[error("family is constant in `{0}`")]
    ConstantInParameter(String),
    #[error("family is linear in `{0}`; its lines form a pencil with no envelope curve")]
    PencilFamily(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("parametrization is not triangular: {0}")]
    NotTriangular(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
}

pub type Result<T> = std::result::Result<T, RuledError>;
