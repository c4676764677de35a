//! The verdict pipeline: dimension and depth, Gorenstein and F-purity
//! tests, canonical ideals, the `ω ≅ ω^[p]` comparison and the composite
//! report with its consistency checks.

mod canonical;
mod fpure;
mod invariants;
mod report;
mod search;

pub use canonical::{
    canonical_ideal, find_nzd_in_ideal, ideals_isomorphic, lift_ideal, CanonicalIdeal, IdealIso, ReductionCertificate,
};
pub use fpure::{is_f_pure, outside_frobenius_maximal, FpureWitness};
pub use invariants::{
    dimension_depth, find_nonzerodivisors, find_nzd, generically_gorenstein_monomial, is_gorenstein, is_nonzerodivisor,
    monomial_minimal_prime_count, GorensteinWitness,
};
pub use report::{
    fpi_verdict, frobenius_multiplier_holds, pushforward_dual_is_free, CanonicalOutcome, CheckStatus, Checks,
    CrossCheck, FpiMethod, FpiResult, Report, Verdict, VerdictOptions, DIRECT_PUSHFORWARD_LIMIT,
};
pub use search::SearchOptions;
