//! Exact-arithmetic library for D-permutations: enumeration, statistics,
//! multivariate generating polynomials, classical continued fractions over
//! polynomial coefficient rings, and the two bijections onto labeled
//! 0-Schröder paths, together with a verification harness that checks all
//! of the identities relating them at desk scale.

pub mod cfrac;
pub mod error;
pub mod families;
pub mod paths;
pub mod perm;
pub mod poly;
pub mod series;
pub mod stats;
pub mod verify;

pub use error::{Error, Result};
pub use perm::{class_counts, enumerate_d_permutations, ClassCounts, DClass, Permutation};
pub use poly::{pq_integer, Poly, VarTable};
pub use series::TruncatedSeries;
pub use stats::{stat_profile, StatProfile};
