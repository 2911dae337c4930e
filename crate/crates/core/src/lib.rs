//! Exact computations for highest weight modules over complex semisimple
//! Lie algebras: weight sets, convex hulls, faces, maximizer subsets,
//! characters and saturated chains, with brute-force cross-checks.
//!
//! All arithmetic is over the rationals. Weights are written in the basis of
//! fundamental weights and simple roots follow Bourbaki numbering.

#![forbid(unsafe_code)]

pub mod chains;
pub mod error;
pub mod faces;
pub mod hwmodule;
pub mod lp;
pub mod oracle;
pub mod polyhedron;
pub mod rational;
pub mod rootsys;
pub mod subset;
pub mod weightlat;

pub use error::{Error, Result};
pub use rational::Q;
pub use rootsys::{Kind, RootSystem, WeylElement};
pub use subset::SubsetJ;
pub use weightlat::{CoefficientGroup, FinSupportFn, Weight};
pub use chains::{ChainHypothesis, ChainOutcome};
pub use faces::{FaceInterval, FaceQuery, Verdict, Witness};
pub use hwmodule::{CounterexampleRecord, Family, FormalCharacter, HWModuleDesc, WeightSet};
pub use oracle::OracleReport;
pub use polyhedron::{FaceDescriptor, Polyhedron};
