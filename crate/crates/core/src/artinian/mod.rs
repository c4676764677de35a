//! Finite-length modules as explicit linear algebra: realization of
//! presentations, Matlis duality, socles, Hom spaces, isomorphism testing
//! and the depth-zero Frobenius test.

mod iso;
mod module;
mod weakly;

pub use iso::{hom_space, modules_isomorphic, IsoSearch, IsoVerdict, IsoWitness, EXHAUSTIVE_LIMIT};
pub use module::{injective_hull, matlis_dual, realize_finite, ring_module, socle_dimension, FiniteLengthModule};
pub use weakly::{weakly_fpi_artinian, ArtinianFpi};
