//! Exact coefficient domains: rationals, the cyclotomic field of 12th roots
//! of unity, and rational functions in one variable over it.

mod cyclo;
mod field;
mod ratfun;

pub use cyclo::{Cyclo, EMBEDDING_EXPONENTS};
pub use field::{common_denominator, q, Field, Ring};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use ratfun::RatFun;

