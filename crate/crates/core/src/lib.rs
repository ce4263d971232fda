//! Exact computation of the Smarandache function `S(n)` (the least `j` with
//! `n | j!`), the largest prime factor `P(n)`, and the counting functions
//! built from them, together with certified numerical checks of the
//! inequalities that relate them.
//!
//! ```
//! use smarand_core::smarandache::{smarandache, largest_prime_factor};
//!
//! assert_eq!(smarandache(9), 6);
//! assert_eq!(largest_prime_factor(9), 3);
//! ```

pub mod arith;
pub mod asymptotics;
pub mod census;
mod error;
pub mod fmt;
pub mod irrationality;
pub mod real;
pub mod smarandache;

pub use arith::ExponentK;
pub use error::{Error, Result};
pub use smarandache::SmarandacheTable;
