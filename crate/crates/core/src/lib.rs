//! Exact commutative algebra over prime fields and a classifier for the
//! Frobenius-preserves-injectives property of graded quotient rings.
//!
//! ```
//! use fpi_core::classify::{fpi_verdict, VerdictOptions};
//! use fpi_core::gfpoly::{poly, var_names, PrimeField};
//! use fpi_core::ring::RingSpec;
//!
//! # fn main() -> fpi_core::Result<()> {
//! let f = PrimeField::new(5)?;
//! let v = var_names("x,y,z");
//! let r = RingSpec::new(f, v.clone(), ["x*y", "x*z", "y*z"].iter().map(|g| poly(g, &v, f)).collect())?;
//! let report = fpi_verdict(&r, &VerdictOptions::default())?;
//! assert_eq!(report.fpi().and_then(|v| v.as_bool()), Some(true));
//! # Ok(())
//! # }
//! ```

pub mod artinian;
pub mod classify;
pub mod error;
pub mod gfpoly;
pub mod groebner;
pub mod linalg;
pub mod resolutions;
pub mod ring;

pub use error::{AlgebraError, Result};
