//! Exact-arithmetic invariants of weighted-Le-Yomdin-at-infinity
//! polynomials: the WLY property, singular-branch data, Euler
//! characteristics of the affine Milnor fibers and the total Milnor number,
//! with a brute-force Jacobian-quotient oracle for cross-checks.

pub mod apps;
pub mod branches;
pub mod error;
pub mod euler;
pub mod ideal;
pub mod poly;
pub mod wly;

pub use error::{Error, Result};
