//! Fixed data, colored regular multigraphs and their enumeration.

mod builtin;
mod enumerate;
mod fixed;
mod graph;

pub use crate::f2algebra::CharMultiset;
pub use builtin::builtin_rpn;
pub use enumerate::{
    canonical_form, enumerate_skeletons, isomorphism_classes, Enumeration, IsoMode,
    MAX_ISO_VERTICES,
};
pub use fixed::{
    check_p2, congruent_mod, validate_fixed_data, FixedData, FixedDataIssue, FixedDataReport,
    Vertex,
};
pub use graph::{
    edge_bound_check, validate_skeleton, ColoredSkeleton, Edge, EdgeBoundReport,
    EdgeBoundViolation, SkeletonIssue, SkeletonReport,
};
