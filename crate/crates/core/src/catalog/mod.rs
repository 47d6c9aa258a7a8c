//! Model-space curvature, the curvature tables and Yamabe-bound checks.

pub mod bounds;
pub mod curvature;
pub mod exact;
pub mod tables;

pub use bounds::{
    dimension_five_bound, dimension_five_bracket, entry_bound, exact_bound_ratio,
    exact_dimension_five_ratio, sharp_bound_ratio, BoundReport,
};
pub use curvature::{
    counterexample_crossing, counterexample_threshold, einstein_product, einstein_scales,
    fubini_study_riemann, product_riemann, s2xs4_counterexample, space_form_riemann,
    squashed_cp3_weyl, summarize, CounterexamplePoint, CurvatureSummary, FactorKind, ProductFactor,
};
pub use exact::Radical;
pub use tables::{
    builtin_entries, consistency_check, construct_and_match, table_maxima, CatalogEntry,
    CatalogRecord, Column, ConsistencyReport, Constructibility, KnownIssue, MatchReport,
    TableMaxima, KNOWN_ISSUES,
};
