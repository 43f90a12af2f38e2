pub mod arith;
pub mod groebner;
pub mod lindep;
pub mod minpoly;
pub mod modular;
pub mod poly;
pub mod structure;
pub mod error;

pub use arith::{Field, PrimeField, Rationals};
pub use error::{Error, Result};
pub use groebner::{Ideal, ReducedGb};
pub use minpoly::{minpoly, MinPolyAlg};
pub use modular::{minpoly_modular, ModularOptions, ModularRunReport};
pub use poly::{parse_poly, MultiPoly, PolyRing, TermOrder, UniPoly};
pub use structure::{Factorization, SplitReport, SplitToken, StructField, StructureOptions};

#[cfg(test)]
mod test_util;
