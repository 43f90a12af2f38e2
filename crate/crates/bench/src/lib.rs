//! Inputs shared by the benchmarks.

use std::sync::Arc;

use zdk_core::{parse_poly, Field, Ideal, MultiPoly, PolyRing, TermOrder};

pub fn ring<F: Field>(field: F, vars: &[&str]) -> Arc<PolyRing<F>> {
    PolyRing::new(field, vars, TermOrder::DegRevLex)
}

pub fn ideal<F: Field>(ring: &Arc<PolyRing<F>>, gens: &[&str]) -> Ideal<F> {
    Ideal::new(ring, gens.iter().map(|g| poly(ring, g)).collect())
}

pub fn poly<F: Field>(ring: &Arc<PolyRing<F>>, text: &str) -> MultiPoly<F> {
    parse_poly(ring, text).expect("benchmark input parses")
}

/// Generators `e_j - v_j` of the splitting algebra of
/// `x^n - v_1 x^(n-1) + ... + (-1)^n v_n`, in variables `a1..an`.
pub fn splitting_algebra<F: Field>(field: F, values: &[i64]) -> (Arc<PolyRing<F>>, Ideal<F>) {
    let names: Vec<String> = (1..=values.len()).map(|i| format!("a{i}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let r = ring(field, &refs);
    let n = values.len();
    // e_k by the recurrence over variables
    let mut e = vec![MultiPoly::one(&r)];
    e.resize(n + 1, MultiPoly::zero(&r));
    for i in 0..n {
        let x = MultiPoly::var(&r, i);
        for k in (1..=i + 1).rev() {
            e[k] = e[k].add(&e[k - 1].mul(&x));
        }
    }
    let gens = (1..=n)
        .map(|k| e[k].sub(&MultiPoly::constant(&r, r.field.from_i64(values[k - 1]))))
        .collect();
    let i = Ideal::new(&r, gens);
    (r, i)
}

/// `a1 + 2 a2 + ... + n an`
pub fn weighted_sum<F: Field>(r: &Arc<PolyRing<F>>) -> MultiPoly<F> {
    let c: Vec<i64> = (1..=r.nvars() as i64).collect();
    MultiPoly::linear_form(r, &c)
}
