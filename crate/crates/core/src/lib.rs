//! Ramsey numbers of paths versus stars and quasars.
//!
//! * [`formulas`]: closed forms, recursions and bounds.
//! * [`graph`], [`graph6`]: bitset graphs and their text encodings.
//! * [`detect`]: exact path, star, forest, quasar, cycle and wheel detectors.
//! * [`witness`]: lower-bound constructions and their verification.
//! * [`canon`], [`oracle`]: isomorph-free enumeration and exhaustive
//!   computation of small Ramsey numbers.
//! * [`selfcheck`]: grid-wide consistency checks of the formulas.

pub mod canon;
pub mod detect;
pub mod error;
pub mod forest;
pub mod formulas;
pub mod graph;
pub mod graph6;
pub mod oracle;
pub mod selfcheck;
pub mod witness;

pub use detect::Pattern;
pub use error::{Error, Result};
pub use forest::LinearForest;
pub use formulas::{AnswerKind, PathStarParams, Provenance, RamseyAnswer};
pub use graph::{clique_union, CliqueUnionSpec, SmallGraph};
pub use oracle::{OracleResult, RamseyQuery};
pub use witness::WitnessReport;
