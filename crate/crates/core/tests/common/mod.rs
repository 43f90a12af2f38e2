#![allow(dead_code)]

use std::sync::Arc;

use rand::Rng;
use zdk_core::arith::PrimeField;
use zdk_core::poly::PowerProduct;
use zdk_core::{parse_poly, Field, Ideal, MultiPoly, PolyRing, Rationals, TermOrder, UniPoly};

pub fn ideal<F: Field>(ring: &Arc<PolyRing<F>>, gens: &[&str]) -> Ideal<F> {
    Ideal::new(ring, gens.iter().map(|s| poly(ring, s)).collect())
}

pub fn poly<F: Field>(ring: &Arc<PolyRing<F>>, s: &str) -> MultiPoly<F> {
    parse_poly(ring, s).unwrap_or_else(|e| panic!("{s}: {e}"))
}

pub fn q_ring(vars: &[&str]) -> Arc<PolyRing<Rationals>> {
    PolyRing::new(Rationals, vars, TermOrder::DegRevLex)
}

pub fn fp_ring(p: u64, vars: &[&str]) -> Arc<PolyRing<PrimeField>> {
    PolyRing::new(PrimeField::new(p).unwrap(), vars, TermOrder::DegRevLex)
}

pub fn var_names(n: usize, stem: &str) -> Vec<String> {
    (1..=n).map(|i| format!("{stem}{i}")).collect()
}

/// Elementary symmetric polynomials `e_1..e_n` of all ring variables.
pub fn elementary_symmetric<F: Field>(ring: &Arc<PolyRing<F>>) -> Vec<MultiPoly<F>> {
    let n = ring.nvars();
    let mut e = vec![MultiPoly::one(ring)];
    e.extend((0..n).map(|_| MultiPoly::zero(ring)));
    for i in 0..n {
        let x = MultiPoly::var(ring, i);
        for j in (1..=i + 1).rev() {
            e[j] = e[j].add(&x.mul(&e[j - 1]));
        }
    }
    e.remove(0);
    e
}

/// `<e_1 - v_1, ..., e_n - v_n>`: with `v_j = (-1)^j c_j` this is the
/// splitting algebra of `z^n + c_1 z^{n-1} + ... + c_n`.
pub fn splitting_algebra<F: Field>(ring: &Arc<PolyRing<F>>, values: &[i64]) -> Ideal<F> {
    let k = &ring.field;
    let gens = elementary_symmetric(ring)
        .into_iter()
        .zip(values)
        .map(|(e, &v)| e.sub(&MultiPoly::constant(ring, k.from_i64(v))))
        .collect();
    Ideal::new(ring, gens)
}

/// `x_i^{a_i}` plus random terms of smaller total degree for each variable,
/// so the quotient dimension is at most `prod a_i`; optionally one extra
/// random generator.
pub fn random_zero_dim<F: Field, R: Rng>(
    ring: &Arc<PolyRing<F>>,
    rng: &mut R,
    exps: &[u32],
    extra: bool,
) -> Ideal<F> {
    let n = ring.nvars();
    let k = &ring.field;
    let mut gens: Vec<MultiPoly<F>> = exps
        .iter()
        .enumerate()
        .map(|(i, &a)| {
            let lead = MultiPoly::monomial(ring, PowerProduct::var(n, i, a), k.one());
            let nt = rng.gen_range(1..=3);
            let tail = random_poly(ring, rng, nt, a - 1);
            lead.add(&tail)
        })
        .collect();
    if extra {
        let m = exps.iter().copied().max().unwrap_or(1);
        gens.push(random_poly(ring, rng, 3, m));
    }
    Ideal::new(ring, gens)
}

pub fn random_poly<F: Field, R: Rng>(
    ring: &Arc<PolyRing<F>>,
    rng: &mut R,
    nterms: usize,
    max_deg: u32,
) -> MultiPoly<F> {
    let n = ring.nvars();
    let k = &ring.field;
    (0..nterms).fold(MultiPoly::zero(ring), |acc, _| {
        let mut e = vec![0u32; n];
        for _ in 0..rng.gen_range(0..=max_deg) {
            e[rng.gen_range(0..n)] += 1;
        }
        let c = k.from_i64(rng.gen_range(-9..=9));
        acc.add(&MultiPoly::monomial(ring, PowerProduct::from_exps(&e), c))
    })
}

/// Exponent vector with `n` entries in `1..=max` and product at most `bound`.
pub fn random_exps<R: Rng>(rng: &mut R, n: usize, max: u32, bound: u32) -> Vec<u32> {
    loop {
        let e: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=max)).collect();
        if e.iter().product::<u32>() <= bound {
            return e;
        }
    }
}

/// Determinant by Gaussian elimination.
fn det<F: Field>(k: &F, mut m: Vec<Vec<F::Elem>>) -> F::Elem {
    let n = m.len();
    let mut d = k.one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !k.is_zero(&m[r][c])) else {
            return k.zero();
        };
        if p != c {
            m.swap(p, c);
            d = k.neg(&d);
        }
        d = k.mul(&d, &m[c][c]);
        let inv = k.inv(&m[c][c]);
        for r in c + 1..n {
            let f = k.mul(&m[r][c], &inv);
            for j in c..n {
                let v = k.mul(&f, &m[c][j]);
                m[r][j] = k.sub(&m[r][j], &v);
            }
        }
    }
    d
}

/// `det(z I - M)` by evaluation at `n + 1` points and Lagrange interpolation;
/// `m` is given by columns. Needs at least `n + 1` field elements.
pub fn charpoly<F: Field>(k: &F, m: &[Vec<F::Elem>]) -> UniPoly<F> {
    let n = m.len();
    let pts: Vec<F::Elem> = (0..=n as i64).map(|i| k.from_i64(i)).collect();
    let vals: Vec<F::Elem> = pts
        .iter()
        .map(|z| {
            let rows = (0..n)
                .map(|r| {
                    (0..n)
                        .map(|c| {
                            let e = k.neg(&m[c][r]);
                            if r == c {
                                k.add(&e, z)
                            } else {
                                e
                            }
                        })
                        .collect()
                })
                .collect();
            det(k, rows)
        })
        .collect();
    let mut out = UniPoly::zero(k.clone());
    for (i, (xi, yi)) in pts.iter().zip(&vals).enumerate() {
        let mut basis = UniPoly::one(k.clone());
        let mut denom = k.one();
        for (j, xj) in pts.iter().enumerate() {
            if i != j {
                basis = basis.mul(&UniPoly::linear(k.clone(), xj));
                denom = k.mul(&denom, &k.sub(xi, xj));
            }
        }
        out = out.add(&basis.scale(&k.div(yi, &denom)));
    }
    out
}

/// `mu(f)` reduced modulo the ideal, by Horner's rule.
pub fn eval_mod<F: Field>(i: &Ideal<F>, mu: &UniPoly<F>, f: &MultiPoly<F>) -> MultiPoly<F> {
    let ring = i.ring();
    mu.coeffs().iter().rev().fold(MultiPoly::zero(ring), |acc, c| {
        i.normal_form(&acc.mul(f).add(&MultiPoly::constant(ring, c.clone())))
    })
}
