use std::sync::Arc;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::arith::{PrimeField, Rationals};
use crate::poly::parse_poly;
use crate::test_util::{random_poly, random_zero_dim};

fn ideal<F: Field>(ring: &Arc<PolyRing<F>>, gens: &[&str]) -> Ideal<F> {
    Ideal::new(ring, gens.iter().map(|s| parse_poly(ring, s).unwrap()).collect())
}

fn all_algs<F: Field>(i: &Ideal<F>, f: &MultiPoly<F>) -> Vec<String> {
    [MinPolyAlg::Def, MinPolyAlg::Mat, MinPolyAlg::Elim]
        .iter()
        .map(|&a| minpoly(i, f, a).unwrap().to_string())
        .collect()
}

#[test]
fn examples_over_q_and_f2() {
    let r = PolyRing::new(Rationals, &["x", "y"], TermOrder::DegRevLex);
    let i = ideal(&r, &["x^2", "y^2"]);
    let f = parse_poly(&r, "x + y").unwrap();
    assert_eq!(all_algs(&i, &f), ["z^3"; 3]);

    let r2 = r.with_field(PrimeField::new(2).unwrap());
    let i2 = ideal(&r2, &["x^2", "y^2"]);
    let f2 = parse_poly(&r2, "x + y").unwrap();
    assert_eq!(all_algs(&i2, &f2), ["z^2"; 3]);

    let i = ideal(&r, &["x^2 - 2", "y^2 - 3"]);
    assert_eq!(all_algs(&i, &f), ["z^4 - 10z^2 + 1"; 3]);

    let r1 = PolyRing::new(Rationals, &["x"], TermOrder::DegRevLex);
    let i = ideal(&r1, &["x^2 - 2"]);
    let x = parse_poly(&r1, "x").unwrap();
    assert_eq!(all_algs(&i, &x), ["z^2 - 2"; 3]);
}

#[test]
fn constants_and_members() {
    let r = PolyRing::new(Rationals, &["x", "y"], TermOrder::DegRevLex);
    let i = ideal(&r, &["x^2 - 2", "y^2 - 3"]);
    let c = parse_poly(&r, "7/2").unwrap();
    assert_eq!(all_algs(&i, &c), ["z - 7/2"; 3]);
    let g = parse_poly(&r, "x^3 - 2x").unwrap();
    assert_eq!(all_algs(&i, &g), ["z"; 3]);
    let zero = MultiPoly::zero(&r);
    assert_eq!(all_algs(&i, &zero), ["z"; 3]);
}

#[test]
fn multiplication_matrix_example() {
    let r = PolyRing::new(Rationals, &["x", "y"], TermOrder::DegRevLex);
    let i = ideal(&r, &["x^2", "y^2"]);
    let gb = i.gb();
    let qb = gb.quotient_basis().unwrap();
    // basis order is (1, y, x, xy); the example's (1, x, y, xy) swaps the middle
    let f = parse_poly(&r, "x + y").unwrap();
    let a = mult_matrix(&f, &gb, &qb);
    let k = Rationals;
    let col = |v: &[i64]| v.iter().map(|&c| k.from_i64(c)).collect::<Vec<_>>();
    assert_eq!(a.cols, vec![col(&[0, 1, 1, 0]), col(&[0, 0, 0, 1]), col(&[0, 0, 0, 1]), col(&[0; 4])]);
    let one = mult_matrix(&MultiPoly::one(&r), &gb, &qb);
    for (j, c) in one.cols.iter().enumerate() {
        for (i, e) in c.iter().enumerate() {
            assert_eq!(k.is_one(e), i == j);
        }
    }
    let z = mult_matrix(&MultiPoly::zero(&r), &gb, &qb);
    assert!(z.cols.iter().flatten().all(|e| k.is_zero(e)));
}

#[test]
fn not_zero_dimensional() {
    let r = PolyRing::new(Rationals, &["x", "y"], TermOrder::DegRevLex);
    let i = ideal(&r, &["x"]);
    let f = parse_poly(&r, "y").unwrap();
    for a in [MinPolyAlg::Def, MinPolyAlg::Mat, MinPolyAlg::Elim] {
        assert_eq!(minpoly(&i, &f, a), Err(Error::NotZeroDimensional));
    }
}

fn det_fp(k: &PrimeField, mut m: Vec<Vec<u64>>) -> u64 {
    let n = m.len();
    let mut det = 1;
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| m[r][c] != 0) else {
            return 0;
        };
        if p != c {
            m.swap(p, c);
            det = k.neg(&det);
        }
        det = k.mul(&det, &m[c][c]);
        let inv = k.inv(&m[c][c]);
        for r in c + 1..n {
            if m[r][c] != 0 {
                let f = k.mul(&m[r][c], &inv);
                let row = m[c].clone();
                k.sub_scaled(&mut m[r], &f, &row);
            }
        }
    }
    det
}

/// det(zI - A) by evaluation at 0..=d and Newton interpolation.
fn charpoly_fp(k: &PrimeField, a: &MultMatrix<u64>) -> UniPoly<PrimeField> {
    let d = a.dim();
    let xs: Vec<u64> = (0..=d as u64).collect();
    let ys: Vec<u64> = xs
        .iter()
        .map(|&c| {
            let m = (0..d)
                .map(|i| {
                    (0..d)
                        .map(|j| {
                            let diag = if i == j { c } else { 0 };
                            k.sub(&diag, a.entry(i, j))
                        })
                        .collect()
                })
                .collect();
            det_fp(k, m)
        })
        .collect();
    // divided differences
    let mut coef = ys.clone();
    for j in 1..=d {
        for i in (j..=d).rev() {
            let num = k.sub(&coef[i], &coef[i - 1]);
            let den = k.sub(&xs[i], &xs[i - j]);
            coef[i] = k.div(&num, &den);
        }
    }
    let mut out = UniPoly::from_coeffs(*k, vec![coef[d]]);
    for i in (0..d).rev() {
        out = out
            .mul(&UniPoly::linear(*k, &xs[i]))
            .add(&UniPoly::from_coeffs(*k, vec![coef[i]]));
    }
    out
}

fn rank_fp(k: &PrimeField, cols: &[Vec<u64>]) -> usize {
    let mut mill = LinDepMill::new(*k, cols.first().map_or(0, |c| c.len()));
    cols.iter().filter(|c| mill.feed(c).unwrap().is_none()).count()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(30))]

    #[test]
    fn algorithms_agree_and_minpoly_properties(seed in any::<u64>(), n in 1usize..4, big in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = if big { 32003 } else { 101 };
        let k = PrimeField::new(p).unwrap();
        let names = ["x", "y", "z"];
        let r = PolyRing::new(k, &names[..n], TermOrder::DegRevLex);
        let extra = rng.gen_bool(0.5);
        let i = Ideal::new(&r, random_zero_dim(&r, &mut rng, 3, extra));
        let gb = i.gb();
        let qb = gb.quotient_basis().unwrap();
        let f = random_poly(&r, &mut rng, 3, 2);
        let def = minpoly_def(&i, &f).unwrap();
        prop_assert_eq!(&minpoly_mat(&i, &f).unwrap(), &def);
        prop_assert_eq!(&minpoly_elim(&i, &f).unwrap(), &def);
        if qb.is_empty() {
            prop_assert!(def.is_one());
            return Ok(());
        }
        prop_assert!(def.is_monic());
        let deg = def.deg();
        prop_assert!(deg >= 1 && deg <= qb.len());
        prop_assert!(eval_in_quotient(&gb, &def, &f).is_zero());
        prop_assert!(gb.contains(&MultiPoly::subst_univariate(&def, &f)));
        let powers = power_iter_matrix(&f, &gb, &qb, deg);
        prop_assert_eq!(rank_fp(&k, &powers[..deg]), deg);
        let a = mult_matrix(&f, &gb, &qb);
        prop_assert!(def.divides(&charpoly_fp(&k, &a)));
    }
}
