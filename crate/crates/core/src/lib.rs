//! Generation and verification of the bilinear relations that cut the
//! variety of subrepresentations of a quiver representation out of a product
//! of Grassmannians, in exact arithmetic.
//!
//! The crate has three layers:
//!
//! - the model: quivers, representations with exact (rational, optionally
//!   parametric) matrix entries, paths and their composite matrices;
//! - the generator: per-arrow and per-path relation polynomials in Plücker
//!   coordinates, classical Grassmannian relations, chart formulas and
//!   Schubert dehomogenization;
//! - the oracle: exhaustive finite-field enumeration of subspace tuples,
//!   rank-based subrepresentation tests, solution sets of the generated
//!   relations, point counts and exact counting-polynomial fits. The oracle
//!   never consults the generator's formulas, so agreement between the two
//!   is evidence, not circularity.

pub mod combinatorics;
pub mod field;
pub mod io;
pub mod model;
pub mod oracle;
pub mod poly;
pub mod relations;
pub mod samples;
pub mod scalar;

pub use combinatorics::{
    binomial, epsilon, epsilon_checked, gaussian_binomial, k_subsets, subset_rank, IndexSubset,
};
pub use field::{FpMatrix, PrimeField};
pub use io::{export_relations, parse_quiver_file, Diagnostic, ExportFormat, QuiverFile};
pub use model::{
    enumerate_paths, path_matrix, validate_representation, ArrowIdx, DimensionVector, Path, Quiver,
    Representation, ScalarMatrix, SpecializedRep, VertexIdx, Violation,
};
pub use oracle::{
    compare_sets, enumerate_subspaces, euler_characteristic, fit_counting_polynomial,
    is_subrepresentation, pluecker_of_subspace, subrep_points, variable_assignment, variety_points,
    CompareReport, CountingPolynomial, FitError, GrassmannPoint, PlueckerVector, SubspaceRREF,
    ValidationStatus,
};
pub use poly::{Labeling, Monomial, PlueckerVariable, RelationPolynomial};
pub use relations::{
    all_relations, chart_basis, classical_relations, dual_chart_coefficients,
    higher_order_relation, membership_forms, quiver_relation, schubert_dehomogenize,
    LabeledRelation, RelationLabel, RelationSet,
};
pub use scalar::Scalar;
