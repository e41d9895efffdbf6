//! Exact symbolic engine for Hodge-number inequalities of irregular compact
//! Kähler manifolds.
//!
//! Given the discrete invariants of a manifold (dimension `d`, irregularity
//! `q`, the zero-locus invariant `m` of holomorphic 1-forms, and optionally
//! the Albanese fiber dimensions) the crate
//!
//! * models the twisted complex of holomorphic `p`-forms on projective space
//!   and its exactness windows,
//! * expands the Chern generating series of the window kernel/cokernel
//!   sheaves over exact rationals,
//! * extracts the full catalog of polynomial inequalities the series
//!   positivity, rank and Euler-characteristic arguments yield,
//! * checks candidate Hodge diamonds against the catalog,
//! * derives closed-form square-root lower bounds and catalog-relative
//!   integer minima for individual Hodge numbers, and
//! * computes the regularity bound for the exterior cohomology modules.
//!
//! All arithmetic is exact; no floating point enters any computation path.

pub mod asymptotic;
pub mod bounds;
pub mod catalog;
pub mod complex;
pub mod constraint;
pub mod error;
pub mod feasibility;
pub mod fixtures;
pub mod hodge;
pub mod minimize;
pub mod partitions;
pub mod poly;
pub mod rational;
pub mod regularity;
pub mod schur;
pub mod series;
pub mod var;

pub use bounds::{solve_quadratic_bound, BoundExpr};
pub use catalog::{
    derive_vanishing_rank_bounds, extract_euler_constraints, extract_md_extras,
    extract_positivity_constraints, extract_rank_constraints, generate_catalog, CatalogOptions,
};
pub use complex::{
    delta_series, epsilon_series, exactness_window, gamma_series, partial_euler, ChernSeries,
    ComplexModel, EulerKind, ExactnessWindow, SeriesKind,
};
pub use constraint::{Constraint, Hypothesis, Relation};
pub use error::CoreError;
pub use feasibility::{check_diamond, sweep_series_families, ConstraintStatus, FeasibilityReport};
pub use hodge::{
    abelian_diamond, partial_diamond, validate_diamond, AlbaneseFibers, Cell, HodgeDiamond, MValue,
    ManifoldProfile,
};
pub use minimize::{minimize_hodge_number, MinimizeOptions, Minimized};
pub use partitions::{partitions_up_to_weight, Partition};
pub use poly::{Monomial, MultiPoly};
pub use rational::Rational;
pub use regularity::regularity_bound;
pub use schur::schur_of_chern;
pub use series::{expand_binomial_power, expand_factors_int, series_product, TruncatedSeries};
pub use var::HodgeVar;
