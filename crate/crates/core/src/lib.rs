//! Exact machinery for reciprocal subtraction (anthyphairesis) and the
//! classical results built on it: side and diameter numbers, the Book II
//! identities and area solvers, musical interval expansion, and the angle
//! classification by Pell parity.

pub mod angles;
pub mod anth;
pub mod book2;
pub mod exact;
pub mod harmonics;
pub mod pell;

pub use exact::{rational_make, ExactError, QuadraticSurd, Rational};
