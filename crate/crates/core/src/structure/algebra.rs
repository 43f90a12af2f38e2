//! The quotient algebra `P/I` as a vector space with multiplication
//! matrices, used where polynomial arithmetic would be too slow.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{Field, Rationals};
use crate::error::Result;
use crate::groebner::{QuotientBasis, ReducedGb};
use crate::lindep::LinDepMill;
use crate::minpoly::MultMatrix;
use crate::poly::{MultiPoly, PowerProduct, UniPoly};

type SparseCol<E> = Vec<(usize, E)>;

pub(crate) struct QuotientAlgebra<F: Field> {
    pub gb: Arc<ReducedGb<F>>,
    pub qb: QuotientBasis,
    /// For each variable, the columns of its multiplication matrix.
    var_mats: Vec<Vec<SparseCol<F::Elem>>>,
    /// `chain[i] = (k, j)` with `t_i = x_k * t_j` (`None` for `t_0 = 1`).
    chain: Vec<Option<(usize, usize)>>,
}

impl<F: Field> QuotientAlgebra<F> {
    pub fn new(gb: Arc<ReducedGb<F>>) -> Result<Self> {
        let qb = gb.quotient_basis()?;
        let ring = gb.ring().clone();
        let n = ring.nvars();
        let one = ring.field.one();
        let var_mats = (0..n)
            .map(|k| {
                let xk = PowerProduct::var(n, k, 1);
                qb.pps()
                    .iter()
                    .map(|t| {
                        let m = t.mul(&xk);
                        match qb.index_of(&m) {
                            Some(i) => vec![(i, one.clone())],
                            None => {
                                let nf = gb.normal_form(&MultiPoly::monomial(&ring, m, one.clone()));
                                nf.terms()
                                    .iter()
                                    .map(|(pp, c)| (qb.index_of(pp).unwrap(), c.clone()))
                                    .collect()
                            }
                        }
                    })
                    .collect()
            })
            .collect();
        let chain = qb
            .pps()
            .iter()
            .map(|t| {
                let k = t.exps().iter().position(|&e| e > 0)?;
                let j = qb.index_of(&t.div(&PowerProduct::var(n, k, 1))).unwrap();
                Some((k, j))
            })
            .collect();
        Ok(QuotientAlgebra {
            gb,
            qb,
            var_mats,
            chain,
        })
    }

    pub fn field(&self) -> &F {
        &self.gb.ring().field
    }

    pub fn dim(&self) -> usize {
        self.qb.len()
    }

    pub fn one(&self) -> Vec<F::Elem> {
        let k = self.field();
        let mut v = vec![k.zero(); self.dim()];
        if !v.is_empty() {
            v[0] = k.one();
        }
        v
    }

    pub fn coords(&self, f: &MultiPoly<F>) -> Vec<F::Elem> {
        self.qb.coords(&self.gb.normal_form(f))
    }

    pub fn poly(&self, v: &[F::Elem]) -> MultiPoly<F> {
        self.qb.poly(self.gb.ring(), v)
    }

    /// `x_k * v`
    pub fn mul_var(&self, k: usize, v: &[F::Elem]) -> Vec<F::Elem> {
        let field = self.field();
        let mut out = vec![field.zero(); self.dim()];
        for (c, col) in v.iter().zip(&self.var_mats[k]) {
            if field.is_zero(c) {
                continue;
            }
            for (i, a) in col {
                let nc = field.neg(c);
                field.sub_mul_assign(&mut out[*i], &nc, a);
            }
        }
        out
    }

    /// Matrix of multiplication by the element with coordinates `a`.
    pub fn mult_matrix(&self, a: &[F::Elem]) -> MultMatrix<F::Elem> {
        let mut cols: Vec<Vec<F::Elem>> = Vec::with_capacity(self.dim());
        for i in 0..self.dim() {
            let col = match self.chain[i] {
                None => a.to_vec(),
                Some((k, j)) => self.mul_var(k, &cols[j]),
            };
            cols.push(col);
        }
        MultMatrix { cols }
    }

    pub fn mul(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        self.mult_matrix(a).apply(self.field(), b)
    }

    pub fn pow(&self, a: &[F::Elem], mut e: u64) -> Vec<F::Elem> {
        let mut base = a.to_vec();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Reduced basis of `I + <h>` for `h` given by coordinates.
    pub fn ideal_plus(&self, h: &[F::Elem]) -> ReducedGb<F> {
        self.ideal_of_span(self.mult_matrix(h).cols)
    }

    /// Reduced basis of the ideal `J ⊇ I` with `J/I` spanned by `vecs`,
    /// which must span an ideal of `P/I`. Row reduction puts pivots at the
    /// largest power products, so the pivot rows are basis elements.
    pub fn ideal_of_span(&self, vecs: Vec<Vec<F::Elem>>) -> ReducedGb<F> {
        let k = self.field();
        let ring = self.gb.ring();
        let mut rows: Vec<(usize, Vec<F::Elem>)> = Vec::new();
        for mut v in vecs {
            for (p, row) in &rows {
                let c = v[*p].clone();
                k.sub_scaled(&mut v, &c, row);
            }
            let Some(p) = (0..v.len()).rev().find(|&i| !k.is_zero(&v[i])) else {
                continue;
            };
            let inv = k.inv(&v[p]);
            k.scale_in_place(&mut v, &inv);
            for (_, row) in rows.iter_mut() {
                let c = row[p].clone();
                k.sub_scaled(row, &c, &v);
            }
            rows.push((p, v));
        }
        let pps = self.qb.pps();
        // leading terms of the sum: pivots and the old leading terms
        let mut leads: Vec<(PowerProduct, Option<usize>)> = rows
            .iter()
            .enumerate()
            .map(|(r, (p, _))| (pps[*p].clone(), Some(r)))
            .chain(self.gb.leading_pps().into_iter().map(|m| (m.clone(), None)))
            .collect();
        let all: Vec<PowerProduct> = leads.iter().map(|(m, _)| m.clone()).collect();
        leads.retain(|(m, _)| !all.iter().any(|o| o != m && o.divides(m)));
        let mut elems: Vec<MultiPoly<F>> = leads
            .into_iter()
            .map(|(m, r)| match r {
                Some(r) => self.poly(&rows[r].1),
                None => {
                    let mono = MultiPoly::monomial(ring, m, k.one());
                    let mut v = self.coords(&mono);
                    for (p, row) in &rows {
                        let c = v[*p].clone();
                        k.sub_scaled(&mut v, &c, row);
                    }
                    mono.sub(&self.poly(&v))
                }
            })
            .collect();
        let ord = ring.order;
        elems.sort_by(|a, b| ord.compare(a.lpp().unwrap(), b.lpp().unwrap()));
        ReducedGb::from_reduced(ring, elems)
    }

    /// Columns of the ring endomorphism sending `x_k` to `images[k]`:
    /// column `i` is the image of `t_i`.
    pub fn endomorphism(&self, images: &[Vec<F::Elem>]) -> MultMatrix<F::Elem> {
        let mats: Vec<MultMatrix<F::Elem>> = images.iter().map(|v| self.mult_matrix(v)).collect();
        let mut cols: Vec<Vec<F::Elem>> = Vec::with_capacity(self.dim());
        for i in 0..self.dim() {
            let col = match self.chain[i] {
                None => self.one(),
                Some((k, j)) => mats[k].apply(self.field(), &cols[j]),
            };
            cols.push(col);
        }
        MultMatrix { cols }
    }
}

/// A rational vector `w / den` with integer entries.
struct ScaledVec {
    w: Vec<BigInt>,
    den: BigInt,
}

impl ScaledVec {
    fn normalize(&mut self) {
        let mut g = self.den.clone();
        for x in &self.w {
            if g.is_one() {
                return;
            }
            if !x.is_zero() {
                g = g.gcd(x);
            }
        }
        if !g.is_one() {
            for x in &mut self.w {
                *x /= &g;
            }
            self.den /= &g;
        }
    }

    /// `self + other`, both brought to the lcm of the denominators.
    fn add(&mut self, other: &ScaledVec) {
        let l = self.den.lcm(&other.den);
        let (a, b) = (&l / &self.den, &l / &other.den);
        for (x, y) in self.w.iter_mut().zip(&other.w) {
            *x = &*x * &a + y * &b;
        }
        self.den = l;
    }
}

/// Integer multiplication matrices `X_k = M_k / den_k` over Q.
pub(crate) struct IntegerAlgebra {
    mats: Vec<Vec<Vec<(usize, BigInt)>>>,
    dens: Vec<BigInt>,
    dim: usize,
}

impl IntegerAlgebra {
    pub fn new(alg: &QuotientAlgebra<Rationals>) -> Self {
        let mut mats = Vec::new();
        let mut dens = Vec::new();
        for cols in &alg.var_mats {
            let den = cols
                .iter()
                .flatten()
                .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
            mats.push(
                cols.iter()
                    .map(|col| {
                        col.iter()
                            .map(|(i, c)| (*i, c.numer() * (&den / c.denom())))
                            .collect()
                    })
                    .collect(),
            );
            dens.push(den);
        }
        IntegerAlgebra {
            mats,
            dens,
            dim: alg.dim(),
        }
    }

    fn mul_var(&self, k: usize, v: &ScaledVec) -> ScaledVec {
        let mut w = vec![BigInt::zero(); self.dim];
        for (c, col) in v.w.iter().zip(&self.mats[k]) {
            if c.is_zero() {
                continue;
            }
            for (i, a) in col {
                w[*i] += c * a;
            }
        }
        ScaledVec {
            w,
            den: &v.den * &self.dens[k],
        }
    }

    fn mul_poly(&self, f: &MultiPoly<Rationals>, v: &ScaledVec) -> ScaledVec {
        let mut acc = ScaledVec {
            w: vec![BigInt::zero(); self.dim],
            den: BigInt::one(),
        };
        for (pp, c) in f.terms() {
            let mut t = ScaledVec {
                w: v.w.clone(),
                den: v.den.clone(),
            };
            for (k, &e) in pp.exps().iter().enumerate() {
                for _ in 0..e {
                    t = self.mul_var(k, &t);
                }
            }
            for x in &mut t.w {
                *x *= c.numer();
            }
            t.den *= c.denom();
            acc.add(&t);
        }
        acc.normalize();
        acc
    }

    /// `mu(f)` in `P/I` by Horner's rule on vectors over a common
    /// denominator.
    fn horner(&self, mu: &UniPoly<Rationals>, f: &MultiPoly<Rationals>) -> ScaledVec {
        let mut v = ScaledVec {
            w: vec![BigInt::zero(); self.dim],
            den: BigInt::one(),
        };
        if self.dim == 0 {
            return v;
        }
        for c in mu.coeffs().iter().rev() {
            v = self.mul_poly(f, &v);
            let mut e = ScaledVec {
                w: vec![BigInt::zero(); self.dim],
                den: c.denom().clone(),
            };
            e.w[0] = c.numer().clone();
            v.add(&e);
            v.normalize();
        }
        v
    }

    /// Whether `mu(f) = 0` in `P/I`.
    pub fn vanishes(&self, mu: &UniPoly<Rationals>, f: &MultiPoly<Rationals>) -> bool {
        self.horner(mu, f).w.iter().all(Zero::is_zero)
    }

    /// Coordinates of `mu(f)` in `P/I`.
    pub fn eval(&self, mu: &UniPoly<Rationals>, f: &MultiPoly<Rationals>) -> Vec<BigRational> {
        let v = self.horner(mu, f);
        v.w.into_iter().map(|x| BigRational::new(x, v.den.clone())).collect()
    }
}

pub(crate) fn kernel<F: Field>(field: &F, cols: &[Vec<F::Elem>]) -> Vec<Vec<F::Elem>> {
    let n = cols.len();
    if n == 0 {
        return Vec::new();
    }
    let m = cols[0].len();
    // row-major copy
    let mut rows: Vec<Vec<F::Elem>> = (0..m)
        .map(|r| (0..n).map(|c| cols[c][r].clone()).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !field.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, p);
        let inv = field.inv(&rows[r][c]);
        field.scale_in_place(&mut rows[r], &inv);
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !field.is_zero(&row[c]) {
                let f = row[c].clone();
                field.sub_scaled(row, &f, &pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![field.zero(); n];
            v[fc] = field.one();
            for (ri, &pc) in pivots.iter().enumerate() {
                v[pc] = field.neg(&rows[ri][fc]);
            }
            v
        })
        .collect()
}

/// Extend `first` by vectors of `rest`, keeping only independent ones.
pub(crate) fn independent_with_first<F: Field>(
    field: &F,
    first: Vec<F::Elem>,
    rest: Vec<Vec<F::Elem>>,
) -> Vec<Vec<F::Elem>> {
    let mut mill = LinDepMill::new(field.clone(), first.len());
    let mut out = Vec::new();
    for v in std::iter::once(first).chain(rest) {
        if mill.feed(&v).expect("same dimension").is_none() {
            out.push(v);
        }
    }
    out
}
