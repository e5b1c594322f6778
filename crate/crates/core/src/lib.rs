//! Finite covers of nilpotent orbit closures in the classical Lie algebras,
//! and their Q-factorial terminalizations.
//!
//! A nilpotent orbit is named by its Jordan-type partition. The library
//! computes the fundamental group of the orbit, the menu of finite covers of
//! its closure, the codimension-2 singular loci with their transverse slice
//! types, and an explicit terminalization of each cover: a parabolic flag
//! type, a base orbit in the Levi, the covering data over the base, and the
//! degree bookkeeping tying everything together, plus Q-factoriality,
//! terminality and crepant-resolution verdicts.
//!
//! Everything is exact integer combinatorics; no matrices, flags or group
//! elements are ever materialized.

pub mod builder;
pub mod corpus;
pub mod error;
pub mod induction;
pub mod local_geometry;
pub mod partition;
pub mod report;
pub mod scan;
pub mod topology;

pub use builder::{
    build, canonical_pivot, BaseCover, CoveringGroupDescriptor, CoveringGroupKind, CrepantReport,
    CrepantVerdict, DegreeLedger, ExplicitStep, StageKind, Strategy, TerminalizationReport,
};
pub use error::{Error, Result};
pub use induction::{
    induce_double_type_i, induce_type_i, induce_type_ii, sl_block_step, InductionChain,
    InductionStep, StepKind,
};
pub use local_geometry::{
    codim2_degenerations, cover_fiber_over_codim2, terminality_verdict, Codim2Locus, CoverFiber,
    LocalModel, SliceType, TerminalityStatus, TerminalityVerdict,
};
pub use partition::{
    conditions, Algebra, Condition, ConditionReport, OrbitId, Partition, VeryEvenLabel,
};
pub use topology::{
    cover_menu, fundamental_group, q_factorial_verdict, CoverKind, CoverSpec,
    FiniteGroupDescriptor, GroupKind, QFactorialVerdict,
};
