//! Construction of concrete quotient complexes.

mod fixtures;
mod lattice;
mod plane;
mod presentation;

pub use fixtures::{q2_presentation, q2_trivial_complex, q2_z3_complex, z3_voltages};
pub use lattice::{local_lattice_oracle, OracleReport};
pub use plane::{build_projective_plane, ProjectivePlane};
pub use presentation::{
    complex_from_presentation, find_presentation, correspondences, search_triangle_presentation,
    PresentationData, TrianglePresentation, VoltageAssignment,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BuildError {
    #[error("unsupported q = {0} (only 2 and 3)")]
    UnsupportedQ(u32),
    #[error("lambda is not a bijection from points to lines")]
    NotABijection,
    #[error("invalid triangle presentation: {0}")]
    InvalidPresentation(String),
    #[error("voltages violate the relation a_{}a_{}a_{} = 1", .0[0], .0[1], .0[2])]
    RelationViolated([usize; 3]),
    #[error("invalid voltage assignment: {0}")]
    InvalidVoltages(String),
    #[error("no triangle presentation found for q = {0}")]
    NotFound(u32),
}
