//! Factorization of univariate polynomials over a prime field:
//! distinct-degree splitting followed by Cantor–Zassenhaus.

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Factorization;
use crate::arith::{Field, PrimeField};
use crate::error::{Error, Result};
use crate::poly::UniPoly;

type Fp = UniPoly<PrimeField>;

const EDF_SEED: u64 = 0x5eed_f00d;

pub fn factor_uni_fp(f: &Fp) -> Result<Factorization<PrimeField>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let unit = f.lc();
    let mut factors = Vec::new();
    if f.deg() > 0 {
        let mut rest = f.monic();
        for g in irreducible_factors(&rest.sqfree()?) {
            let mut m = 0;
            loop {
                let (q, r) = rest.divrem(&g);
                if !r.is_zero() {
                    break;
                }
                rest = q;
                m += 1;
            }
            factors.push((g, m));
        }
    }
    let mut out = Factorization { unit, factors };
    out.sort();
    Ok(out)
}

/// Monic irreducible factors of a monic squarefree polynomial.
pub(crate) fn irreducible_factors(f: &Fp) -> Vec<Fp> {
    let k = *f.field();
    let mut rng = ChaCha8Rng::seed_from_u64(EDF_SEED);
    let mut out = Vec::new();
    for (g, d) in distinct_degree(f) {
        equal_degree(&g, d, &k, &mut rng, &mut out);
    }
    out
}

/// Splits a monic squarefree `f` into products of irreducibles of equal degree.
fn distinct_degree(f: &Fp) -> Vec<(Fp, usize)> {
    let k = *f.field();
    let p = k.modulus();
    let x = UniPoly::monomial(k, k.one(), 1);
    let mut out = Vec::new();
    let mut g = f.clone();
    let mut h = x.rem(&g);
    let mut i = 0;
    while g.deg() >= 2 * (i + 1) {
        i += 1;
        h = h.pow_mod(p, &g);
        let gi = h.sub(&x).gcd(&g);
        if gi.deg() > 0 {
            g = g.div_exact(&gi).monic();
            h = h.rem(&g);
            out.push((gi, i));
        }
    }
    if g.deg() > 0 {
        let d = g.deg();
        out.push((g, d));
    }
    out
}

fn equal_degree(f: &Fp, d: usize, k: &PrimeField, rng: &mut ChaCha8Rng, out: &mut Vec<Fp>) {
    let n = f.deg();
    if n == d {
        out.push(f.clone());
        return;
    }
    let p = k.modulus();
    loop {
        let a = UniPoly::from_coeffs(*k, (0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.deg() == 0 {
            continue;
        }
        let b = if p == 2 {
            // trace map a + a^2 + ... + a^(2^(d-1))
            let mut t = a.rem(f);
            let mut acc = t.clone();
            for _ in 1..d {
                t = t.mul(&t).rem(f);
                acc = acc.add(&t);
            }
            acc
        } else {
            let e = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
            pow_mod_big(&a, &e, f).sub(&UniPoly::one(*k))
        };
        let g = b.gcd(f);
        if g.deg() > 0 && g.deg() < n {
            let h = f.div_exact(&g).monic();
            equal_degree(&g, d, k, rng, out);
            equal_degree(&h, d, k, rng, out);
            return;
        }
    }
}

pub(crate) fn pow_mod_big(a: &Fp, e: &BigUint, m: &Fp) -> Fp {
    let mut acc = UniPoly::one(*a.field()).rem(m);
    let base = a.rem(m);
    for i in (0..e.bits()).rev() {
        acc = acc.mul(&acc).rem(m);
        if e.bit(i) {
            acc = acc.mul(&base).rem(m);
        }
    }
    acc
}

/// `s, t` with `s*a + t*b = 1` for coprime `a, b`.
pub(crate) fn xgcd(a: &Fp, b: &Fp) -> (Fp, Fp) {
    let k = *a.field();
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (UniPoly::one(k), UniPoly::zero(k));
    let (mut t0, mut t1) = (UniPoly::zero(k), UniPoly::one(k));
    while !r1.is_zero() {
        let (q, r) = r0.divrem(&r1);
        (r0, r1) = (r1, r);
        let s2 = s0.sub(&q.mul(&s1));
        (s0, s1) = (s1, s2);
        let t2 = t0.sub(&q.mul(&t1));
        (t0, t1) = (t1, t2);
    }
    let inv = k.inv(&r0.lc());
    debug_assert_eq!(r0.deg(), 0, "xgcd of non-coprime inputs");
    (s0.scale(&inv), t0.scale(&inv))
}
