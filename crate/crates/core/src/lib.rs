//! Exact symmetric-group characters, (k,l)-semistandard tableaux and machine checks of the
//! hook character identity
//!
//! ```text
//! Σ_{λ ∈ H(k,l;n)} s_{k,l}(λ) χ^λ(μ) = Π_j (k + (−1)^(μ_j+1) l)
//! ```
//!
//! together with a brute-force trace of the signed permutation action on (V₀ ⊕ V₁)^⊗n
//! that serves as an independent third route.

mod bigint_serde;
pub mod cache;
pub mod character;
pub mod error;
pub mod identity;
pub mod limits;
pub mod partition;
pub mod tableau;
pub mod tensor;

pub use cache::CharacterStore;
pub use character::{
    character, character_table, class_size, dimension, CharacterEngine, CharacterTable,
    CharacterValue, ClassSize,
};
pub use error::{Error, Result};
pub use identity::{
    verify_21_corollary, verify_classical, verify_hook_sum, verify_main_identity, CheckKind,
    OracleMode, OracleStatus, ReportRow, VerificationReport, Verifier,
};
pub use limits::Limits;
pub use partition::{
    conjugate, hook_partitions, in_strict_hook, partitions_of, HookParams, Partition,
};
pub use tableau::{
    count_ssyt, count_super_ssyt, enumerate_super_ssyt, hook_content_count, GradedAlphabet, Letter,
    Tableau,
};
pub use tensor::{
    apply_permutation, check_trace, rhs_product, trace_super, BasisWord, Permutation, SignedWord,
    TraceCheck,
};
