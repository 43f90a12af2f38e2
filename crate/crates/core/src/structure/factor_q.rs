//! Factorization over Q: squarefree decomposition, factoring modulo a
//! suitable prime, Hensel lifting and recombination of the lifted factors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::factor_fp::{irreducible_factors, xgcd};
use super::Factorization;
use crate::arith::crt::symmetric;
use crate::arith::{is_prime_u64, CrtAccumulator, Field, PrimeField, PrimeStream, Rationals};
use crate::error::{Error, Result};
use crate::poly::UniPoly;

type Qp = UniPoly<Rationals>;
type ZPoly = Vec<BigInt>;

pub fn factor_uni_q(f: &Qp) -> Result<Factorization<Rationals>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let unit = f.lc();
    let mut factors = Vec::new();
    if f.deg() > 0 {
        for (a, m) in yun(&f.monic()) {
            for g in irreducible_q(&a) {
                factors.push((g, m));
            }
        }
    }
    let mut out = Factorization { unit, factors };
    out.sort();
    Ok(out)
}

/// Squarefree decomposition of a monic polynomial: `f = prod a_i^i`.
fn yun(f: &Qp) -> Vec<(Qp, usize)> {
    let mut out = Vec::new();
    let b = f.derivative();
    let c = gcd_q(f, &b);
    let mut w = f.div_exact(&c);
    let mut y = b.div_exact(&c);
    let mut z = y.sub(&w.derivative());
    let mut i = 1;
    while w.deg() > 0 {
        let g = gcd_q(&w, &z);
        w = w.div_exact(&g);
        y = z.div_exact(&g);
        z = y.sub(&w.derivative());
        if g.deg() > 0 {
            out.push((g.monic(), i));
        }
        i += 1;
    }
    out
}

/// Monic gcd over Q from modular images: the images of least degree are
/// combined by CRT until the reconstruction divides both inputs.
pub(crate) fn gcd_q(a: &Qp, b: &Qp) -> Qp {
    if a.is_zero() || b.is_zero() {
        return a.add(b).monic();
    }
    let (a, b) = (a.monic(), b.monic());
    if a.deg() == 0 || b.deg() == 0 {
        return UniPoly::one(Rationals);
    }
    let mut acc: Option<CrtAccumulator> = None;
    for p in PrimeStream::new(GCD_SEED) {
        let k = PrimeField::new(p).expect("stream yields primes");
        let image = |f: &Qp| {
            let c: Option<Vec<u64>> = f.coeffs().iter().map(|c| k.from_rational(c)).collect();
            c.map(|c| UniPoly::from_coeffs(k, c))
        };
        let (Some(ap), Some(bp)) = (image(&a), image(&b)) else {
            continue;
        };
        let g = ap.gcd(&bp);
        if g.deg() == 0 {
            return UniPoly::one(Rationals);
        }
        match &mut acc {
            Some(c) if g.deg() > c.degree() => continue,
            Some(c) if g.deg() == c.degree() => {
                c.absorb(p, g.coeffs()).expect("distinct primes");
            }
            _ => acc = Some(CrtAccumulator::new(p, g.coeffs())),
        }
        let c = acc.as_ref().unwrap();
        let rec = c.reconstruct();
        if rec.iter().all(|r| r.reliable) {
            let cand = UniPoly::from_coeffs(
                Rationals,
                rec.into_iter()
                    .map(|r| BigRational::new(r.num, r.den))
                    .collect(),
            );
            if cand.divides(&a) && cand.divides(&b) {
                return cand;
            }
        }
    }
    unreachable!("prime stream is infinite")
}

const GCD_SEED: u64 = 0x6cd;

/// Monic irreducible factors over Q of a monic squarefree polynomial.
fn irreducible_q(f: &Qp) -> Vec<Qp> {
    let mut p = to_primitive_z(f);
    let mut out = Vec::new();
    if p[0].is_zero() {
        out.push(UniPoly::from_i64(Rationals, &[0, 1]));
        p.remove(0);
    }
    if deg(&p) >= 1 {
        for g in zassenhaus(&p) {
            out.push(from_z(&g));
        }
    }
    out
}

fn to_primitive_z(f: &Qp) -> ZPoly {
    let den = f
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let z: ZPoly = f
        .coeffs()
        .iter()
        .map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
        .collect();
    primitive(&z)
}

fn from_z(g: &ZPoly) -> Qp {
    let c = g
        .iter()
        .map(|a| BigRational::from_integer(a.clone()))
        .collect();
    UniPoly::from_coeffs(Rationals, c).monic()
}

fn deg(a: &ZPoly) -> usize {
    a.len().saturating_sub(1)
}

fn trim(mut a: ZPoly) -> ZPoly {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

/// Content removed, positive leading coefficient.
fn primitive(a: &ZPoly) -> ZPoly {
    let a = trim(a.clone());
    let mut g = a.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() {
        return a;
    }
    if a.last().unwrap().is_negative() {
        g = -g;
    }
    a.iter().map(|c| c / &g).collect()
}

fn zmul(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn zmod(a: &ZPoly, m: &BigInt) -> ZPoly {
    trim(a.iter().map(|c| c.mod_floor(m)).collect())
}

fn zsym(a: &ZPoly, m: &BigInt) -> ZPoly {
    trim(a.iter().map(|c| symmetric(c, m)).collect())
}

fn zadd(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    trim(
        (0..n)
            .map(|i| a.get(i).unwrap_or(&z) + b.get(i).unwrap_or(&z))
            .collect(),
    )
}

fn zsub(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    trim(
        (0..n)
            .map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z))
            .collect(),
    )
}

/// Division by a monic `h` modulo `m`.
fn zdivrem_monic(a: &ZPoly, h: &ZPoly, m: &BigInt) -> (ZPoly, ZPoly) {
    let mut r = zmod(a, m);
    let dh = deg(h);
    if r.len() <= dh {
        return (Vec::new(), r);
    }
    let mut q = vec![BigInt::zero(); r.len() - dh];
    for i in (0..q.len()).rev() {
        let c = r[i + dh].mod_floor(m);
        if c.is_zero() {
            continue;
        }
        for (j, hj) in h.iter().enumerate() {
            r[i + j] -= &c * hj;
        }
        q[i] = c;
    }
    r.truncate(dh);
    (trim(q), zmod(&r, m))
}

/// Exact quotient over Z, `None` if `b` does not divide `a`.
fn zdiv_exact(a: &ZPoly, b: &ZPoly) -> Option<ZPoly> {
    let db = deg(b);
    if a.len() < b.len() {
        return if a.is_empty() { Some(Vec::new()) } else { None };
    }
    let lb = b.last().unwrap();
    let mut r = a.clone();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for i in (0..q.len()).rev() {
        let (c, rem) = r[i + db].div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            r[i + j] -= &c * bj;
        }
        q[i] = c;
    }
    if r.iter().any(|c| !c.is_zero()) {
        return None;
    }
    Some(trim(q))
}

fn to_fp(a: &ZPoly, k: PrimeField) -> UniPoly<PrimeField> {
    UniPoly::from_coeffs(k, a.iter().map(|c| k.from_bigint(c)).collect())
}

fn from_fp(a: &UniPoly<PrimeField>) -> ZPoly {
    a.coeffs().iter().map(|&c| BigInt::from(c)).collect()
}

struct ModularImage {
    p: u64,
    factors: Vec<UniPoly<PrimeField>>,
}

/// Degrees reachable as sums of sub-multisets of `degs`.
fn subset_sums(degs: &[usize], n: usize) -> Vec<bool> {
    let mut can = vec![false; n + 1];
    can[0] = true;
    for &d in degs {
        for s in (d..=n).rev() {
            if can[s - d] {
                can[s] = true;
            }
        }
    }
    can
}

fn zassenhaus(f: &ZPoly) -> Vec<ZPoly> {
    let n = deg(f);
    if n == 1 {
        return vec![f.clone()];
    }
    let lc = f.last().unwrap().clone();
    let wanted = if n > 24 { 10 } else { 4 };
    let mut allowed = vec![true; n + 1];
    let mut best: Option<ModularImage> = None;
    let mut tried = 0;
    let mut p = 2u64;
    while tried < wanted {
        p += 1;
        if !is_prime_u64(p) || (&lc % p).is_zero() {
            continue;
        }
        let k = PrimeField::new(p).expect("small prime");
        let fp = to_fp(f, k);
        if fp.gcd(&fp.derivative()).deg() > 0 {
            continue;
        }
        tried += 1;
        let factors = irreducible_factors(&fp.monic());
        if factors.len() == 1 {
            return vec![f.clone()];
        }
        let degs: Vec<usize> = factors.iter().map(|g| g.deg()).collect();
        let sums = subset_sums(&degs, n);
        for (a, s) in allowed.iter_mut().zip(&sums) {
            *a &= *s;
        }
        if (1..n).all(|d| !allowed[d]) {
            return vec![f.clone()];
        }
        if best.as_ref().is_none_or(|b| factors.len() < b.factors.len()) {
            best = Some(ModularImage { p, factors });
        }
    }
    let img = best.expect("at least one prime tried");
    let pb = BigInt::from(img.p);

    // bound on the coefficients of lc * g for any factor g of f
    let norm2 = f.iter().map(|c| c * c).fold(BigInt::zero(), |a, b| a + b).sqrt() + 1;
    let bound = lc.abs() * norm2 * (BigInt::one() << n);
    let mut pk = pb.clone();
    while pk <= &bound * 2 {
        pk *= &pb;
    }
    let lifted = multi_lift(f, &img.factors, img.p, &pk);
    recombine(f, lifted, &pk, &allowed, &root_bound(f))
}

/// Lifts `f = lc * prod facs (mod p)` to monic factors modulo `pk`.
fn multi_lift(f: &ZPoly, facs: &[UniPoly<PrimeField>], p: u64, pk: &BigInt) -> Vec<ZPoly> {
    let lc = f.last().unwrap().clone();
    if facs.len() == 1 {
        let inv = lc.modinv(pk).expect("leading coefficient is a unit mod p");
        return vec![zmod(&f.iter().map(|c| c * &inv).collect(), pk)];
    }
    let k = PrimeField::new(p).expect("small prime");
    let mid = facs.len() / 2;
    let prod = |fs: &[UniPoly<PrimeField>]| {
        fs.iter()
            .fold(UniPoly::one(k), |acc: UniPoly<PrimeField>, g| acc.mul(g))
    };
    let g0 = prod(&facs[..mid]).scale(&k.from_bigint(&lc));
    let h0 = prod(&facs[mid..]);
    let (s0, t0) = xgcd(&g0, &h0);
    let (g, h) = hensel_pair(
        f,
        from_fp(&g0),
        from_fp(&h0),
        from_fp(&s0),
        from_fp(&t0),
        p,
        pk,
    );
    let mut out = multi_lift(&g, &facs[..mid], p, pk);
    out.extend(multi_lift(&h, &facs[mid..], p, pk));
    out
}

/// Quadratic Hensel lifting of `f = g h (mod p)` with `s g + t h = 1 (mod p)`
/// and monic `h`, up to modulus `pk`.
fn hensel_pair(
    f: &ZPoly,
    mut g: ZPoly,
    mut h: ZPoly,
    mut s: ZPoly,
    mut t: ZPoly,
    p: u64,
    pk: &BigInt,
) -> (ZPoly, ZPoly) {
    let mut m = BigInt::from(p);
    while &m < pk {
        let mm = (&m * &m).min(pk.clone());
        let e = zmod(&zsub(f, &zmul(&g, &h)), &mm);
        let (q, r) = zdivrem_monic(&zmul(&s, &e), &h, &mm);
        let g1 = zmod(&zadd(&zadd(&g, &zmul(&t, &e)), &zmul(&q, &g)), &mm);
        let h1 = zmod(&zadd(&h, &r), &mm);
        let b = zmod(&zsub(&zadd(&zmul(&s, &g1), &zmul(&t, &h1)), &vec![BigInt::one()]), &mm);
        let (c, d) = zdivrem_monic(&zmul(&s, &b), &h1, &mm);
        s = zmod(&zsub(&s, &d), &mm);
        t = zmod(&zsub(&zsub(&t, &zmul(&t, &b)), &zmul(&c, &g1)), &mm);
        g = g1;
        h = h1;
        m = mm;
    }
    (g, h)
}

/// Fujiwara's bound `2 max |a_{n-i}/a_n|^{1/i}` on the absolute value of
/// the complex roots, rounded up.
fn root_bound(f: &ZPoly) -> BigInt {
    let n = deg(f);
    let lc = f[n].abs();
    let mut best = BigInt::one();
    for i in 1..=n {
        let a = f[n - i].abs();
        if a.is_zero() {
            continue;
        }
        let q = a.div_ceil(&lc);
        let mut r = q.nth_root(i as u32);
        if r.pow(i as u32) < q {
            r += 1;
        }
        best = best.max(r);
    }
    best * 2
}

/// Combines lifted modular factors into true factors over Z.
///
/// A subset is tried only if its degree is possible modulo every sampled
/// prime, its constant term divides the one of `lc * f`, and its sum of
/// roots (scaled by `lc`) is within the root bound.
fn recombine(
    f: &ZPoly,
    lifted: Vec<ZPoly>,
    pk: &BigInt,
    allowed: &[bool],
    roots: &BigInt,
) -> Vec<ZPoly> {
    let mut f = f.clone();
    let mut live: Vec<usize> = (0..lifted.len()).collect();
    let degs: Vec<usize> = lifted.iter().map(deg).collect();
    let consts: Vec<BigInt> = lifted.iter().map(|u| u[0].clone()).collect();
    let subs: Vec<BigInt> = lifted
        .iter()
        .map(|u| u.get(deg(u).wrapping_sub(1)).cloned().unwrap_or_default())
        .collect();
    let mut out = Vec::new();
    let mut s = 1;
    'outer: while 2 * s <= live.len() {
        let lc = f.last().unwrap().clone();
        let target = &lc * &f[0];
        let mut idx: Vec<usize> = (0..s).collect();
        loop {
            let d: usize = idx.iter().map(|&i| degs[live[i]]).sum();
            let sum_ok = || {
                let t = idx
                    .iter()
                    .fold(BigInt::zero(), |acc, &i| acc + &subs[live[i]]);
                symmetric(&(t * &lc), pk).abs() <= roots * d * lc.abs()
            };
            if allowed[d] && sum_ok() {
                let mut c = lc.clone();
                for &i in &idx {
                    c = (c * &consts[live[i]]).mod_floor(pk);
                }
                let c = symmetric(&c, pk);
                if !c.is_zero() && (&target % &c).is_zero() {
                    let mut g = vec![lc.clone()];
                    for &i in &idx {
                        g = zmod(&zmul(&g, &lifted[live[i]]), pk);
                    }
                    let g = primitive(&zsym(&g, pk));
                    if let Some(q) = zdiv_exact(&f, &g) {
                        out.push(g);
                        f = primitive(&q);
                        let drop: Vec<usize> = idx.iter().map(|&i| live[i]).collect();
                        live.retain(|i| !drop.contains(i));
                        continue 'outer;
                    }
                }
            }
            // next combination
            let mut j = s;
            loop {
                if j == 0 {
                    s += 1;
                    continue 'outer;
                }
                j -= 1;
                if idx[j] < live.len() - s + j {
                    break;
                }
            }
            idx[j] += 1;
            for l in j + 1..s {
                idx[l] = idx[l - 1] + 1;
            }
        }
    }
    if deg(&f) > 0 {
        out.push(f);
    }
    out
}
