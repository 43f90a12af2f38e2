use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for all 64-bit inputs.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Seeded stream of distinct primes in `[2^29, 2^30)`, optionally preceded by
/// a caller-supplied list of primes.
#[derive(Debug, Clone)]
pub struct PrimeStream {
    rng: ChaCha8Rng,
    forced: Vec<u64>,
    seen: std::collections::HashSet<u64>,
}

impl PrimeStream {
    pub fn new(seed: u64) -> Self {
        Self::with_prefix(seed, Vec::new())
    }

    pub fn with_prefix(seed: u64, forced: Vec<u64>) -> Self {
        let mut forced = forced;
        forced.reverse();
        PrimeStream {
            rng: ChaCha8Rng::seed_from_u64(seed),
            forced,
            seen: Default::default(),
        }
    }
}

impl Iterator for PrimeStream {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        while let Some(p) = self.forced.pop() {
            if self.seen.insert(p) {
                return Some(p);
            }
        }
        loop {
            let c = self.rng.gen_range((1u64 << 29)..(1u64 << 30)) | 1;
            if is_prime_u64(c) && self.seen.insert(c) {
                return Some(c);
            }
        }
    }
}
