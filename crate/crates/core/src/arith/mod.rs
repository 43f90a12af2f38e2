//! Integer, rational and prime-field arithmetic plus the CRT and rational
//! reconstruction machinery used by the modular algorithms.

pub(crate) mod crt;
mod field;
mod primes;
mod ratrecon;

pub use crt::{crt_combine, CrtAccumulator};
pub use field::{Field, FieldKind, PrimeField, Rationals};
pub use primes::{is_prime_u64, PrimeStream};
pub use ratrecon::{int_radical, rad_divides, rat_reconstruct, RatReconstruction};

pub use num_bigint::BigInt;
pub use num_rational::BigRational as Rat;
