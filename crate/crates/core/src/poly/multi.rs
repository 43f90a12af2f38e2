use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rustc_hash::FxHashMap;

use super::monomial::PowerProduct;
use super::ring::PolyRing;
use super::uni::UniPoly;
use crate::arith::{Field, PrimeField, Rationals};
use crate::error::{Error, Result};

/// Sparse multivariate polynomial with terms kept in strictly decreasing
/// order for the ring's term ordering.
#[derive(Clone)]
pub struct MultiPoly<F: Field> {
    ring: Arc<PolyRing<F>>,
    terms: Vec<(PowerProduct, F::Elem)>,
}

impl<F: Field> PartialEq for MultiPoly<F> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && self.ring.vars == other.ring.vars
    }
}

impl<F: Field> Eq for MultiPoly<F> {}

impl<F: Field> MultiPoly<F> {
    /// Build from arbitrary terms: combines duplicates, drops zeros, sorts.
    pub fn from_terms(ring: &Arc<PolyRing<F>>, terms: Vec<(PowerProduct, F::Elem)>) -> Self {
        let k = &ring.field;
        let mut acc: FxHashMap<PowerProduct, F::Elem> = FxHashMap::default();
        for (pp, c) in terms {
            debug_assert_eq!(pp.arity(), ring.nvars());
            match acc.get_mut(&pp) {
                Some(e) => *e = k.add(e, &c),
                None => {
                    acc.insert(pp, c);
                }
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !k.is_zero(c)).collect();
        Self::from_unsorted_distinct(ring, terms)
    }

    /// Terms with distinct power products and nonzero coefficients, any order.
    pub(crate) fn from_unsorted_distinct(
        ring: &Arc<PolyRing<F>>,
        mut terms: Vec<(PowerProduct, F::Elem)>,
    ) -> Self {
        let ord = ring.order;
        terms.sort_unstable_by(|a, b| ord.compare(&b.0, &a.0));
        MultiPoly {
            ring: ring.clone(),
            terms,
        }
    }

    /// Terms already strictly decreasing with nonzero coefficients.
    pub(crate) fn from_sorted(ring: &Arc<PolyRing<F>>, terms: Vec<(PowerProduct, F::Elem)>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order.compare(&w[0].0, &w[1].0) == Ordering::Greater));
        MultiPoly {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn zero(ring: &Arc<PolyRing<F>>) -> Self {
        MultiPoly {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<PolyRing<F>>, c: F::Elem) -> Self {
        if ring.field.is_zero(&c) {
            return Self::zero(ring);
        }
        MultiPoly {
            ring: ring.clone(),
            terms: vec![(PowerProduct::one(ring.nvars()), c)],
        }
    }

    pub fn one(ring: &Arc<PolyRing<F>>) -> Self {
        Self::constant(ring, ring.field.one())
    }

    pub fn var(ring: &Arc<PolyRing<F>>, i: usize) -> Self {
        Self::monomial(ring, PowerProduct::var(ring.nvars(), i, 1), ring.field.one())
    }

    pub fn monomial(ring: &Arc<PolyRing<F>>, pp: PowerProduct, c: F::Elem) -> Self {
        if ring.field.is_zero(&c) {
            return Self::zero(ring);
        }
        MultiPoly {
            ring: ring.clone(),
            terms: vec![(pp, c)],
        }
    }

    /// Linear form `sum c_i x_i` from integer coefficients.
    pub fn linear_form(ring: &Arc<PolyRing<F>>, coeffs: &[i64]) -> Self {
        let n = ring.nvars();
        let terms = coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| (PowerProduct::var(n, i, 1), ring.field.from_i64(c)))
            .collect();
        Self::from_terms(ring, terms)
    }

    pub fn ring(&self) -> &Arc<PolyRing<F>> {
        &self.ring
    }

    pub fn field(&self) -> &F {
        &self.ring.field
    }

    pub fn terms(&self) -> &[(PowerProduct, F::Elem)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(PowerProduct, F::Elem)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(pp, _)| pp.is_one())
    }

    /// Leading power product.
    pub fn lpp(&self) -> Option<&PowerProduct> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn lc(&self) -> Option<&F::Elem> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.iter().map(|t| t.0.degree()).max().unwrap_or(0)
    }

    /// Coefficient of the power product `pp`.
    pub fn coeff(&self, pp: &PowerProduct) -> F::Elem {
        let ord = self.ring.order;
        match self.terms.binary_search_by(|t| ord.compare(pp, &t.0)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => self.ring.field.zero(),
        }
    }

    fn check_ring(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring,
            "polynomials belong to different rings"
        );
    }

    pub fn neg(&self) -> Self {
        let k = &self.ring.field;
        MultiPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(p, c)| (p.clone(), k.neg(c))).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        self.check_ring(other);
        let k = &self.ring.field;
        let ord = self.ring.order;
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let rhs = |c: &F::Elem| if negate { k.neg(c) } else { c.clone() };
        while i < a.len() && j < b.len() {
            match ord.compare(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), rhs(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        k.sub(&a[i].1, &b[j].1)
                    } else {
                        k.add(&a[i].1, &b[j].1)
                    };
                    if !k.is_zero(&c) {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(p, c)| (p.clone(), rhs(c))));
        MultiPoly {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let k = &self.ring.field;
        if k.is_zero(c) {
            return Self::zero(&self.ring);
        }
        MultiPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(p, a)| (p.clone(), k.mul(a, c))).collect(),
        }
    }

    /// Multiply by the term `c * pp` (keeps the order since orderings are
    /// multiplicative).
    pub fn mul_term(&self, pp: &PowerProduct, c: &F::Elem) -> Self {
        let k = &self.ring.field;
        if k.is_zero(c) {
            return Self::zero(&self.ring);
        }
        MultiPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(p, a)| (p.mul(pp), k.mul(a, c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_ring(other);
        let (small, big) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        if small.is_zero() {
            return Self::zero(&self.ring);
        }
        if small.len() == 1 {
            return big.mul_term(&small.terms[0].0, &small.terms[0].1);
        }
        let k = &self.ring.field;
        let mut acc: FxHashMap<PowerProduct, F::Elem> =
            FxHashMap::with_capacity_and_hasher(small.len() * big.len(), Default::default());
        for (p, a) in &small.terms {
            for (q, b) in &big.terms {
                let m = p.mul(q);
                let prod = k.mul(a, b);
                match acc.get_mut(&m) {
                    Some(e) => *e = k.add(e, &prod),
                    None => {
                        acc.insert(m, prod);
                    }
                }
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !k.is_zero(c)).collect();
        Self::from_unsorted_distinct(&self.ring, terms)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Divide by the leading coefficient. The zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.lc() {
            None => self.clone(),
            Some(c) if self.field().is_one(c) => self.clone(),
            Some(c) => self.scale(&self.field().inv(c)),
        }
    }

    /// Re-express in another ring with the same variables (e.g. a different
    /// ordering), re-sorting terms.
    pub fn to_ring(&self, ring: &Arc<PolyRing<F>>) -> Self {
        assert_eq!(ring.nvars(), self.ring.nvars());
        if ring.order == self.ring.order {
            return MultiPoly {
                ring: ring.clone(),
                terms: self.terms.clone(),
            };
        }
        Self::from_unsorted_distinct(ring, self.terms.clone())
    }

    /// Rename variables into `ring`: variable `i` of `self` becomes variable
    /// `map[i]` of the target.
    pub fn embed(&self, ring: &Arc<PolyRing<F>>, map: &[usize]) -> Self {
        let n = ring.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(pp, c)| {
                let mut e = vec![0u32; n];
                for (i, &x) in pp.exps().iter().enumerate() {
                    e[map[i]] += x;
                }
                (PowerProduct::from_exps(&e), c.clone())
            })
            .collect();
        Self::from_terms(ring, terms)
    }

    /// `mu(f) = sum mu_i f^i`, by Horner's rule.
    pub fn subst_univariate(mu: &UniPoly<F>, f: &Self) -> Self {
        let mut acc = Self::zero(&f.ring);
        for c in mu.coeffs().iter().rev() {
            acc = acc.mul(f).add(&Self::constant(&f.ring, c.clone()));
        }
        acc
    }

    /// If the polynomial only involves variable `i`, return it as a
    /// univariate polynomial.
    pub fn as_univariate(&self, i: usize) -> Option<UniPoly<F>> {
        let k = self.field();
        let mut coeffs = Vec::new();
        for (pp, c) in &self.terms {
            if pp.exps().iter().enumerate().any(|(j, &e)| j != i && e > 0) {
                return None;
            }
            let e = pp.exps()[i] as usize;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, k.zero());
            }
            coeffs[e] = c.clone();
        }
        Some(UniPoly::from_coeffs(k.clone(), coeffs))
    }

    /// Coefficients mapped into another field.
    pub fn map_coeffs<G: Field>(
        &self,
        ring: &Arc<PolyRing<G>>,
        mut f: impl FnMut(&F::Elem) -> G::Elem,
    ) -> MultiPoly<G> {
        let g = &ring.field;
        let terms: Vec<_> = self
            .terms
            .iter()
            .filter_map(|(p, c)| {
                let v = f(c);
                (!g.is_zero(&v)).then(|| (p.clone(), v))
            })
            .collect();
        if ring.order == self.ring.order {
            MultiPoly::from_sorted(ring, terms)
        } else {
            MultiPoly::from_unsorted_distinct(ring, terms)
        }
    }
}

impl MultiPoly<Rationals> {
    /// Least common multiple of the coefficient denominators (1 for zero).
    pub fn den(&self) -> BigInt {
        self.terms
            .iter()
            .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()))
    }

    /// Coefficientwise image in `F_p`; fails if `p` divides a denominator.
    pub fn map_mod_p(&self, ring: &Arc<PolyRing<PrimeField>>) -> Result<MultiPoly<PrimeField>> {
        let fp = ring.field;
        let p = fp.modulus();
        if self.terms.iter().any(|(_, c)| (c.denom() % p).is_zero()) {
            return Err(Error::UglyPrime(p));
        }
        Ok(self.map_coeffs(ring, |c| fp.from_rational(c).unwrap()))
    }
}

/// Write a coefficient/power-product term in canonical form.
fn write_term<F: Field>(
    out: &mut String,
    field: &F,
    c: &F::Elem,
    pp: &PowerProduct,
    vars: &[String],
    first: bool,
) {
    let neg = field.is_negative(c);
    let abs = if neg { field.neg(c) } else { c.clone() };
    if first {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    let is_unit = field.is_one(&abs);
    if !is_unit || pp.is_one() {
        out.push_str(&field.format_elem(&abs));
    }
    let mut first_var = true;
    for (i, &e) in pp.exps().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first_var {
            out.push('*');
        }
        first_var = false;
        out.push_str(&vars[i]);
        if e > 1 {
            out.push('^');
            out.push_str(&e.to_string());
        }
    }
}

impl<F: Field> fmt::Display for MultiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut s = String::new();
        for (i, (pp, c)) in self.terms.iter().enumerate() {
            write_term(&mut s, &self.ring.field, c, pp, &self.ring.vars, i == 0);
        }
        f.write_str(&s)
    }
}

impl<F: Field> fmt::Debug for MultiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}
