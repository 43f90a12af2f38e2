use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Result of reconstructing a rational from a residue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatReconstruction {
    pub num: BigInt,
    /// Always positive.
    pub den: BigInt,
    pub reliable: bool,
}

const SLACK_BITS: u64 = 20;

/// Fault-tolerant rational reconstruction of `r mod m`.
///
/// Walks the extended Euclidean remainder sequence of `(m, r)` and takes the
/// first remainder/cofactor pair `(a, b)` with `|a|*|b| <= m / 2^g`, where
/// `g = min(20, bits(m)/4)`. The answer is flagged reliable when the quotient
/// that produced the next cofactor exceeds `2^g`, i.e. the pair is much
/// smaller than the modulus would force by chance. Because the search does not
/// require `gcd(b, m) = 1`, a few corrupted residues are absorbed into a common
/// factor of `a` and `b` once the modulus has grown enough.
pub fn rat_reconstruct(r: &BigInt, m: &BigInt) -> RatReconstruction {
    let r = r.mod_floor(m);
    if r.is_zero() {
        return RatReconstruction {
            num: BigInt::zero(),
            den: BigInt::one(),
            reliable: true,
        };
    }
    let gamma = SLACK_BITS.min(m.bits() / 4);
    let threshold: BigInt = m >> gamma;
    let jump = BigInt::one() << gamma;

    let (mut r_prev, mut r_cur) = (m.clone(), r);
    let (mut t_prev, mut t_cur) = (BigInt::zero(), BigInt::one());
    while !r_cur.is_zero() {
        let (q, rem) = r_prev.div_rem(&r_cur);
        if &r_cur * t_cur.abs() <= threshold {
            let g = r_cur.gcd(&t_cur);
            let (mut num, mut den) = (&r_cur / &g, &t_cur / &g);
            if den.is_negative() {
                num = -num;
                den = -den;
            }
            return RatReconstruction {
                num,
                den,
                reliable: q > jump,
            };
        }
        let t_next = &t_prev - &q * &t_cur;
        r_prev = std::mem::replace(&mut r_cur, rem);
        t_prev = std::mem::replace(&mut t_cur, t_next);
    }
    RatReconstruction {
        num: BigInt::zero(),
        den: BigInt::one(),
        reliable: false,
    }
}

/// Product of the distinct primes dividing `n` (trial division).
pub fn int_radical(n: &BigInt) -> BigInt {
    assert!(n.is_positive(), "int_radical needs a positive integer");
    let mut n = n.clone();
    let mut rad = BigInt::one();
    let two = BigInt::from(2u32);
    if n.is_even() {
        rad *= &two;
        while n.is_even() {
            n >>= 1u32;
        }
    }
    let mut d = BigInt::from(3u32);
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            rad *= &d;
            while (&n % &d).is_zero() {
                n /= &d;
            }
        }
        d += &two;
    }
    if !n.is_one() {
        rad *= n;
    }
    rad
}

/// `Rad(a) | Rad(b)`, i.e. every prime factor of `a` divides `b`, without
/// factoring either number.
pub fn rad_divides(a: &BigInt, b: &BigInt) -> bool {
    let mut a = a.abs();
    let b = b.abs();
    if a.is_zero() {
        return b.is_zero();
    }
    loop {
        let g = a.gcd(&b);
        if g.is_one() {
            return a.is_one();
        }
        while (&a % &g).is_zero() {
            a /= &g;
        }
    }
}
