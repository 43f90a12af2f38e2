//! Reduced Groebner bases, normal forms, quotient bases, reduction modulo
//! primes, elimination and intersection.

mod buchberger;
mod ideal;
mod nf;

pub use ideal::{Ideal, QuotientBasis, ReducedGb};
