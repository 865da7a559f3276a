//! Generalized Frobenius numbers over exact integers.
//!
//! * [`denumerant`]: representation counts and explicit representations.
//! * [`sfrobenius`]: s-Apéry tables, `g*_s`, `g_s`, `n*_s` and the common-factor reduction.
//! * [`family`]: the `A_j = Π / a_j` family and its verifier.
//!
//! The denumerant engine is generic over the [`Count`] type; the aliases below
//! fix the common choices.

pub mod denumerant;
pub mod error;
pub mod family;
pub mod generators;
pub mod scalar;
pub mod sfrobenius;

pub use denumerant::{
    denumerant, denumerant_table, enumerate_representations, DenumerantTable, Representation,
    DEFAULT_ENUMERATION_CAP,
};
pub use error::{FrobError, Result};
pub use family::{
    build_family, canonical_representations, expected_count, pair_gs_closed_form, theorem1_value,
    tripathi_g0, verify_theorem1, verify_theorem1_with, Theorem1Report, TripathiFamily,
    DEFAULT_T_MAX,
};
pub use generators::{gcd_all, is_pairwise_coprime, reduce_step, Generators, ReductionStep};
pub use scalar::Count;
pub use sfrobenius::{
    apery_table, apery_table_with, frobenius_report, g_exact, g_exact_with, g_star,
    g_star_via_reduction, g_star_with, n_star, n_star_via_reduction, n_star_with,
    FrobeniusReport, SAperyTable, SearchConfig,
};

/// Denumerant table with 64-bit counters.
pub type DenumerantTable64 = DenumerantTable<u64>;
/// Denumerant table with 128-bit counters.
pub type DenumerantTable128 = DenumerantTable<u128>;
/// Denumerant table with arbitrary-precision counters; never overflows.
pub type BigDenumerantTable = DenumerantTable<num_bigint::BigUint>;
