use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use super::ratrecon::{rat_reconstruct, RatReconstruction};
use crate::error::{Error, Result};

/// Combine `r1 mod m1` and `r2 mod m2` into the unique residue in `[0, m1*m2)`.
pub fn crt_combine(r1: &BigInt, m1: &BigInt, r2: &BigInt, m2: &BigInt) -> Result<BigInt> {
    let e = m1.extended_gcd(m2);
    if !e.gcd.is_one() {
        return Err(Error::NonCoprimeModuli);
    }
    let m = m1 * m2;
    // e.x * m1 + e.y * m2 = 1
    let t = ((r2 - r1) * &e.x).mod_floor(m2);
    Ok((r1 + m1 * t).mod_floor(&m))
}

/// Coefficient vectors of one degree class accumulated across primes.
#[derive(Debug, Clone)]
pub struct CrtAccumulator {
    residues: Vec<BigInt>,
    modulus: BigInt,
    degree: usize,
    primes: Vec<u64>,
}

impl CrtAccumulator {
    /// Start a class from the image `coeffs` (low to high) modulo `p`.
    pub fn new(p: u64, coeffs: &[u64]) -> Self {
        CrtAccumulator {
            residues: coeffs.iter().map(|&c| BigInt::from(c)).collect(),
            modulus: BigInt::from(p),
            degree: coeffs.len() - 1,
            primes: vec![p],
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn residues(&self) -> &[BigInt] {
        &self.residues
    }

    /// Fold in the image modulo a new prime `p`.
    pub fn absorb(&mut self, p: u64, coeffs: &[u64]) -> Result<()> {
        if coeffs.len() != self.degree + 1 {
            return Err(Error::DimensionMismatch {
                expected: self.degree + 1,
                got: coeffs.len(),
            });
        }
        let m_mod_p = (&self.modulus % p).to_u64().unwrap();
        if m_mod_p == 0 {
            return Err(Error::NonCoprimeModuli);
        }
        let inv = inv_mod_u64(m_mod_p, p);
        for (r, &c) in self.residues.iter_mut().zip(coeffs) {
            let r_mod_p = (&*r % p).to_u64().unwrap();
            let diff = (c + p - r_mod_p) % p;
            let t = ((diff as u128 * inv as u128) % p as u128) as u64;
            if t != 0 {
                *r += &self.modulus * t;
            }
        }
        self.modulus *= p;
        self.primes.push(p);
        Ok(())
    }

    /// Rational reconstruction of every coefficient.
    pub fn reconstruct(&self) -> Vec<RatReconstruction> {
        self.residues
            .iter()
            .map(|r| rat_reconstruct(r, &self.modulus))
            .collect()
    }
}

fn inv_mod_u64(a: u64, p: u64) -> u64 {
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    t0.rem_euclid(p as i128) as u64
}

/// Symmetric representative of `r mod m` in `(-m/2, m/2]`.
pub(crate) fn symmetric(r: &BigInt, m: &BigInt) -> BigInt {
    let r = r.mod_floor(m);
    if (&r << 1u32) > *m {
        r - m
    } else {
        r
    }
}
