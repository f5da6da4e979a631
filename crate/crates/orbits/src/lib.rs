//! Exact computations with nilpotent matrices in classical matrix algebras.
//!
//! The crate provides:
//!
//! * arbitrary-precision arithmetic in the field Q(i, sqrt2) ([`scalar`]);
//! * exact dense linear algebra: products, ranks, inverses, Jordan types
//!   ([`matrix`]);
//! * partitions with the dominance order and the classification of nilpotent
//!   conjugacy classes in gl_n, sl_n, sp_2n and o_N ([`partition`],
//!   [`algebra`]);
//! * one-parameter diagonal subgroups, their limits and parabolic data
//!   ([`cochar`]);
//! * a combinatorial move system describing which classes can degenerate to
//!   which under such limits, including obstruction certificates for pairs
//!   that cannot ([`moves`]);
//! * explicit matrix witnesses for every move family, each checked by exact
//!   computation ([`witness`]);
//! * a deterministic self-check suite used by the command-line tool
//!   ([`suite`]).

pub mod algebra;
pub mod cochar;
pub mod error;
pub mod matrix;
pub mod moves;
pub mod partition;
pub mod scalar;
pub mod suite;
pub mod witness;

pub use algebra::{AlgebraKind, BasisConvention, GroupTag};
pub use cochar::{Cocharacter, ParabolicClass};
pub use error::{Error, Result};
pub use matrix::{direct_sum, jordan_block, neg_jordan_block, ExactMatrix};
pub use moves::{
    access_report, accessible, accessible_set, accessible_with_chain, hasse_diagram,
    is_direct_type5, move_successors, one_accessible_status, AccessReport, Diagram, MoveKind,
    Obstruction, OneAccessVerdict, OrderChoice, TriState,
};
pub use partition::Partition;
pub use scalar::{rat, ratio, FieldScalar, Rational};
pub use suite::{run_suite, SuiteReport, SUITE_ITEM_NAMES};
pub use witness::{
    distinguished_obstruction_check, gl_example_witness, gl_move_i_witness, gl_move_ii_witness,
    gl_rst_witness, gl_two_part_witness, nontransitivity_check, o_move1_example, o_move1_witness,
    sp_move_witness, verify_witness, CheckItem, MoveWitness, VerificationReport,
};
