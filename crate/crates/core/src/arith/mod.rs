//! Exact integer foundations: sieving, factorization, factorial valuations
//! and comparisons, and certified log-factorials.

mod exponent;
mod factor;
mod factorial;
mod legendre;
mod logfact;
mod primes;

pub use exponent::{parse_rational, ExponentK};
pub use factor::{factorize, factorize_biguint, Factorization};
pub use factorial::{exact_compare_factorial_power, factorial};
pub use legendre::legendre_valuation;
pub(crate) use legendre::valuation_unchecked;
pub use logfact::{
    check_log_factorial_bracket, log_factorial, log_factorial_enclosure, log_factorial_interval,
    LogFactorialBracket, LOG_FACTORIAL_REL_WIDTH,
};
pub use primes::{build_spf_sieve, is_prime, primes_up_to, SpfSieve, MAX_SIEVE_LIMIT};
