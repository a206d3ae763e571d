//! Exact-arithmetic kernel for graded Betti numbers of squarefree monomial
//! ideals and the three algebraic shifting operations on simplicial
//! complexes (symmetric, exterior, combinatorial).
//!
//! Everything here is deterministic and allocation-only (`no_std` + `alloc`):
//! file formats, rendering, and the command line live in the companion
//! `shiftlab` crate.

#![no_std]

extern crate alloc;

pub mod betti;
pub mod complex;
pub mod field;
pub mod gin;
pub mod ideal;
pub mod matrix;
pub mod shift;
pub mod verify;

pub use betti::{
    betti_ahh, betti_ek, betti_koszul, hilbert_function, regularity_from_gens, BettiError,
    BettiTable,
};
pub use complex::{
    enumerate_stable_complexes, random_stable_complex, Complex, ComplexError, Face,
    StabilityCriterion,
};
pub use ideal::{Monomial, MonomialIdeal, StabilityReport};
pub use shift::{
    combinatorial_shift, exterior_shift, s_kl, shift_kl, sigma_star, symmetric_shift,
    unique_split, ShiftError, ShiftOrder, ShiftStep, ShiftTrace,
};
pub use field::{FieldSpec, Scalar};
pub use gin::{
    exterior_graded_piece, exterior_hilbert_function, gin_exterior, gin_symmetric, graded_piece,
    GenericChange, GinError, GradedSubspace,
};
pub use matrix::Matrix;
pub use verify::{
    sweep_verify, verify_complex, Check, CheckStatus, RouteTables, SweepMode, SweepSummary,
    VerificationReport, DEFAULT_TRIALS,
};
