//! Exact-arithmetic toolkit for Schubert-variety computations on the
//! T-shaped diagrams T_{p,q,r}: Weyl orbit posets with Bruhat order,
//! Z-gradings and weight multiplicities, graded free resolution format
//! calculus (Hilbert numerators, linkage, Gorenstein sums), Schur functor
//! dimensions, and the degree-4 invariant of trivectors on k^6.

pub mod diagram;
pub mod error;
pub mod exterior;
pub mod grading;
pub mod invariant;
pub mod report;
pub mod rescalc;
pub mod schur;
pub mod weyl;

pub use diagram::{build_diagram, CartanMatrix, DiagramClass, RootVector, TDiagram};
pub use error::{Error, Result};
pub use exterior::MultiVector;
pub use grading::{
    big_cell_dimension, module_grading_from_system, module_grading_range, weight_multiplicities,
    weyl_dimension, weyl_group_order, z_grading_dims, GradedDims, ModuleGrading, WeightSystem,
};
pub use invariant::{
    delta_polynomial, det6, emit_cas_script, generator_set, transform_coordinates, var_name,
    Dialect, SparsePoly, NUM_VARS,
};
pub use report::{report, Report, ReportEntry, ReportType, Status};
pub use rescalc::{
    betti_degree_solve, degree_of, gorenstein_sum, hilbert_numerator, k_polynomial, linkage_dual,
    BettiSolution, GradedFormat, IntPoly,
};
pub use schur::{
    builtin_equivariant_format, builtin_equivariant_formats, schur_dimension,
    verify_equivariant_format, EquivariantFormat, EquivariantTerm, Partition, VerifyReport,
};
pub use weyl::{
    orbit_poset, reflect, sigma_chain, CosetElement, OrbitPoset, SigmaChain, Variety, Weight,
};
