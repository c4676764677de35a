//! Graded presentations, syzygies, free resolutions and the functors built
//! on them: Frobenius, Tor against the Frobenius, the canonical module,
//! Hom, and the Frobenius pushforward.

mod functors;
mod presentation;
mod resolution;
mod syzygy;

pub use functors::{
    canonical_module, digit_exponents, fedder_module, frobenius_pushforward, hom_presentation, homogeneous_degree,
    is_free_rank_one, pushforward_dual, FreeRankOne, HomPresentation,
};
pub use presentation::{syzygy_matrix, ModulePresentation};
pub use resolution::{
    default_max_length, frobenius_functor, frobenius_homology, minimal_free_resolution, tor_frobenius, FreeResolution,
    Homology,
};

pub(crate) use syzygy::{kernel_columns, SpanOracle};
