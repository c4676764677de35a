//! Ring-spec parsing, report rendering and the census runner behind the
//! `fpi` binary.

pub mod app;
pub mod census;
pub mod render;
pub mod spec;

pub use app::{run_report, Rendered, ReportFlags};
pub use census::{run_census, CensusConfig, CensusOutput, Family};
pub use spec::{parse_ring_spec, print_ring_spec, SpecError};
