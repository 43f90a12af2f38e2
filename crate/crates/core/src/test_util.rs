use std::sync::Arc;

use rand::Rng;

use crate::arith::Field;
use crate::poly::{MultiPoly, PolyRing, PowerProduct};

pub(crate) fn random_poly<F: Field, R: Rng>(
    ring: &Arc<PolyRing<F>>,
    rng: &mut R,
    nterms: usize,
    max_deg: u32,
) -> MultiPoly<F> {
    let n = ring.nvars();
    let terms = (0..nterms)
        .map(|_| {
            let mut e = vec![0u32; n];
            let mut budget = rng.gen_range(0..=max_deg);
            while budget > 0 && n > 0 {
                e[rng.gen_range(0..n)] += 1;
                budget -= 1;
            }
            (PowerProduct::from_exps(&e), ring.field.from_i64(rng.gen_range(-9..=9)))
        })
        .collect();
    MultiPoly::from_terms(ring, terms)
}

/// `x_i^{a_i} + (terms of lower total degree)` for each variable, plus an
/// optional extra random generator: always zero-dimensional.
pub(crate) fn random_zero_dim<F: Field, R: Rng>(
    ring: &Arc<PolyRing<F>>,
    rng: &mut R,
    max_exp: u32,
    extra: bool,
) -> Vec<MultiPoly<F>> {
    let n = ring.nvars();
    let mut gens: Vec<MultiPoly<F>> = (0..n)
        .map(|i| {
            let a = rng.gen_range(1..=max_exp);
            let lead = MultiPoly::monomial(ring, PowerProduct::var(n, i, a), ring.field.one());
            lead.add(&random_poly(ring, rng, 3, a - 1))
        })
        .collect();
    if extra {
        gens.push(random_poly(ring, rng, 3, max_exp));
    }
    gens
}
