//! Exact computations with numerical semigroups, their quotients by an
//! integer, and the family of semigroups sharing a prescribed quotient.
//!
//! The kernel ([`semigroup`]) builds canonical semigroup values from
//! generators and answers membership and the classical invariants exactly.
//! On top of it sit the quotient and fiber machinery ([`fiber`]), the
//! explicit multiple with closed-form invariants ([`construction`]),
//! factorizations and presentations ([`presentation`]), and the rank
//! filtration of a fiber with its fully described rank-one layer ([`rank`]).
//! The [`oracle`] module holds deliberately naive, definition-faithful
//! references that the test suites check everything else against.
//!
//! All arithmetic is exact; values are immutable after construction and all
//! operations are pure, so everything is safe to share across threads.

pub mod construction;
mod error;
pub mod fiber;
pub mod oracle;
pub mod presentation;
pub mod rank;
pub mod semigroup;

pub use construction::{
    apery_quotient_reduction, realize_embedding_dimension, smallest_valid_a, DeltaDaSpec,
    WilfIdentity,
};
pub use error::{Error, Result};
pub use fiber::{FiberContext, FiberElement, Monoid};
pub use presentation::{
    default_verify_bound, factorizations, lifted_presentation, lifted_presentation_default,
    minimal_presentation, verify_presentation, Factorization, Presentation,
};
pub use rank::{
    embedding_dim_via_rank, gluing_quotient_check, max_rank_witness, monoid_rank, mu, rank,
    relative_msg, EmbeddingDim, GluingOutcome, MaxRankWitness, RankOneInvariants, RankOneSpec,
};
pub use semigroup::{AperyTable, Invariants, NumericalSemigroup};
