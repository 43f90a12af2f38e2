//! Minimal polynomials of elements of zero-dimensional quotient algebras.

use std::str::FromStr;

use crate::arith::Field;
use crate::error::{Error, Result};
use crate::groebner::{Ideal, QuotientBasis, ReducedGb};
use crate::lindep::LinDepMill;
use crate::poly::{MultiPoly, PolyRing, PowerProduct, TermOrder, UniPoly};

/// Which direct algorithm to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MinPolyAlg {
    /// Powers of the element as normal forms, fed into a [`LinDepMill`].
    #[default]
    Def,
    /// Powers of the multiplication matrix applied to the first basis vector.
    Mat,
    /// Elimination of all variables from `I + <z - f>`.
    Elim,
}

impl FromStr for MinPolyAlg {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "def" => Ok(MinPolyAlg::Def),
            "mat" => Ok(MinPolyAlg::Mat),
            "elim" => Ok(MinPolyAlg::Elim),
            _ => Err(format!("unknown algorithm `{s}`")),
        }
    }
}

/// Square matrix stored by columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultMatrix<E> {
    pub cols: Vec<Vec<E>>,
}

impl<E: Clone> MultMatrix<E> {
    pub fn dim(&self) -> usize {
        self.cols.len()
    }

    pub fn entry(&self, row: usize, col: usize) -> &E {
        &self.cols[col][row]
    }

    /// `A * v`
    pub fn apply<F: Field<Elem = E>>(&self, field: &F, v: &[E]) -> Vec<E> {
        let mut out = vec![field.zero(); self.dim()];
        for (c, col) in v.iter().zip(&self.cols) {
            if !field.is_zero(c) {
                let nc = field.neg(c);
                field.sub_scaled(&mut out, &nc, col);
            }
        }
        out
    }
}

/// Matrix of multiplication by `f`: column `i` holds the coordinates of
/// `NF(t_i * f)`.
pub fn mult_matrix<F: Field>(
    f: &MultiPoly<F>,
    gb: &ReducedGb<F>,
    qb: &QuotientBasis,
) -> MultMatrix<F::Elem> {
    let f = gb.normal_form(f);
    let ring = gb.ring();
    let one = ring.field.one();
    let cols = qb
        .pps()
        .iter()
        .map(|t| qb.coords(&gb.normal_form(&f.mul_term(t, &one))))
        .collect();
    MultMatrix { cols }
}

/// Columns are the coordinates of `NF(f^0), ..., NF(f^r)`.
pub fn power_iter_matrix<F: Field>(
    f: &MultiPoly<F>,
    gb: &ReducedGb<F>,
    qb: &QuotientBasis,
    r: usize,
) -> Vec<Vec<F::Elem>> {
    let ring = gb.ring();
    let f = gb.normal_form(f);
    let mut cur = gb.normal_form(&MultiPoly::one(ring));
    let mut cols = vec![qb.coords(&cur)];
    for _ in 0..r {
        cur = gb.normal_form(&f.mul(&cur));
        cols.push(qb.coords(&cur));
    }
    cols
}

/// `z^k - sum c_j z^j`
fn from_dependency<F: Field>(field: &F, c: &[F::Elem]) -> UniPoly<F> {
    let mut coeffs: Vec<F::Elem> = c.iter().map(|a| field.neg(a)).collect();
    coeffs.push(field.one());
    UniPoly::from_coeffs(field.clone(), coeffs)
}

/// Minimal polynomial by feeding `NF(f^i) = NF(f * NF(f^(i-1)))` into a
/// dependency detector.
pub fn minpoly_def_gb<F: Field>(gb: &ReducedGb<F>, f: &MultiPoly<F>) -> Result<UniPoly<F>> {
    let qb = gb.quotient_basis()?;
    let field = gb.ring().field.clone();
    if qb.is_empty() {
        return Ok(UniPoly::one(field));
    }
    let ring = gb.ring();
    let f = gb.normal_form(f);
    let mut mill = LinDepMill::new(field.clone(), qb.len());
    let mut r = MultiPoly::one(ring);
    mill.feed(&qb.coords(&r))?;
    loop {
        r = gb.normal_form(&f.mul(&r));
        if let Some(c) = mill.feed(&qb.coords(&r))? {
            return Ok(from_dependency(&field, &c));
        }
    }
}

/// Minimal polynomial from the orbit of the first basis vector under the
/// multiplication matrix.
pub fn minpoly_mat_gb<F: Field>(gb: &ReducedGb<F>, f: &MultiPoly<F>) -> Result<UniPoly<F>> {
    let qb = gb.quotient_basis()?;
    let field = gb.ring().field.clone();
    if qb.is_empty() {
        return Ok(UniPoly::one(field));
    }
    let a = mult_matrix(f, gb, &qb);
    let mut mill = LinDepMill::new(field.clone(), qb.len());
    let mut v = vec![field.zero(); qb.len()];
    v[0] = field.one();
    mill.feed(&v)?;
    loop {
        v = a.apply(&field, &v);
        if let Some(c) = mill.feed(&v)? {
            return Ok(from_dependency(&field, &c));
        }
    }
}

/// Minimal polynomial by elimination in `K[x_1..x_n, z]`.
pub fn minpoly_elim<F: Field>(ideal: &Ideal<F>, f: &MultiPoly<F>) -> Result<UniPoly<F>> {
    let gb = ideal.gb();
    if !gb.is_zero_dimensional() {
        return Err(Error::NotZeroDimensional);
    }
    let ring = ideal.ring();
    let n = ring.nvars();
    let mut names = ring.vars.clone();
    let mut z = "z".to_string();
    while names.contains(&z) {
        z.push('_');
    }
    names.push(z);
    let big = PolyRing::from_names(ring.field.clone(), names, TermOrder::Block { front: n });
    let map: Vec<usize> = (0..n).collect();
    let mut gens: Vec<MultiPoly<F>> = gb.elems().iter().map(|g| g.embed(&big, &map)).collect();
    let zvar = MultiPoly::var(&big, n);
    gens.push(zvar.sub(&f.embed(&big, &map)));
    let elim = Ideal::new(&big, gens);
    let egb = elim.gb();
    for g in egb.elems() {
        if g.terms().iter().all(|(pp, _)| pp.exps()[..n].iter().all(|&e| e == 0)) {
            let terms: Vec<_> = g
                .terms()
                .iter()
                .map(|(pp, c)| (PowerProduct::from_exps(&pp.exps()[n..]), c.clone()))
                .collect();
            let zring = PolyRing::from_names(ring.field.clone(), vec!["z".into()], TermOrder::Lex);
            let uni = MultiPoly::from_terms(&zring, terms).as_univariate(0).unwrap();
            return Ok(uni.monic());
        }
    }
    unreachable!("zero-dimensional ideal has a nonzero eliminant")
}

pub fn minpoly_def<F: Field>(ideal: &Ideal<F>, f: &MultiPoly<F>) -> Result<UniPoly<F>> {
    minpoly_def_gb(&ideal.gb(), f)
}

pub fn minpoly_mat<F: Field>(ideal: &Ideal<F>, f: &MultiPoly<F>) -> Result<UniPoly<F>> {
    minpoly_mat_gb(&ideal.gb(), f)
}

pub fn minpoly<F: Field>(ideal: &Ideal<F>, f: &MultiPoly<F>, alg: MinPolyAlg) -> Result<UniPoly<F>> {
    match alg {
        MinPolyAlg::Def => minpoly_def(ideal, f),
        MinPolyAlg::Mat => minpoly_mat(ideal, f),
        MinPolyAlg::Elim => minpoly_elim(ideal, f),
    }
}

/// `NF(mu(f))` by Horner's rule with a reduction after every step.
pub fn eval_in_quotient<F: Field>(
    gb: &ReducedGb<F>,
    mu: &UniPoly<F>,
    f: &MultiPoly<F>,
) -> MultiPoly<F> {
    let ring = gb.ring();
    let f = gb.normal_form(f);
    let mut acc = MultiPoly::zero(ring);
    for c in mu.coeffs().iter().rev() {
        acc = gb.normal_form(&acc.mul(&f).add(&MultiPoly::constant(ring, c.clone())));
    }
    acc
}

#[cfg(test)]
mod tests;
