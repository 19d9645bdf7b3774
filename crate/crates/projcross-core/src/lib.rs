//! Exact crossing arithmetic for a two-parameter family of projective-plane
//! drawings of the complete graph `K_n`, defined for `n = 8k + 2`.
//!
//! The family is built in two stages. A plane *auxiliary drawing* places
//! `4k + 1` vertices on each of three concentric circles and joins them with
//! five colour classes of edges; identifying opposite sides of a distinguished
//! polygon then turns it into a drawing of `K_n` in the projective plane.
//! Everything about the construction is integral, so crossings can be decided
//! by exact integer predicates: no floating point, no tolerances.
//!
//! The crate provides two independent routes to every crossing count:
//!
//! * [`engine`] decomposes edges into annulus segments and counts crossings
//!   pairwise with `O(1)` integer predicates;
//! * [`formulas`] evaluates closed-form expressions for the nine crossing
//!   types and their projective total.
//!
//! The two routes agree exactly on every admissible parameter choice, which is
//! the central correctness check of the crate (see the `acceptance` test
//! target).
//!
//! On top of the combinatorial core sit the asymptotic crossing density
//! [`density::f_eval`], minimizers for it ([`optimize`]), Monte Carlo models
//! of random geodesic drawings on the sphere and the projective plane
//! ([`geodesics`]), and an SVG renderer for the auxiliary drawings
//! ([`render`]).

pub mod density;
pub mod drawing;
pub mod engine;
pub mod formulas;
pub mod geodesics;
pub mod optimize;
pub mod params;
pub mod rational;
pub mod render;
pub mod segment;

pub use density::{f_eval, Constants};
pub use drawing::{build_auxiliary, project, AuxEdge, AuxiliaryDrawing, Color, ProjectiveAdjacency};
pub use engine::{
    count_crossings, responsibility, responsibility_symmetric, verify_good_drawing,
    CrossingBreakdown, CrossingType, ResponsibilityReport,
};
pub use formulas::{hill_value, pcr_exact, type_count};
pub use geodesics::{
    arcs_cross_sphere, estimate_expected_crossings, estimate_pair_probability,
    paths_cross_projective, McEstimate, Model, ProjectivePoint, SpherePoint,
};
pub use optimize::{minimize_f, minimize_lattice, MinimizationResult};
pub use params::{signed_offset, Angle, DClass, DVertex, Params, VertexClass, VertexId};
pub use rational::Rational;
pub use segment::{decompose, segments_cross, Segment};
