//! Structural questions about zero-dimensional ideals: radicality,
//! maximality, primarity and primary decomposition, all driven by minimal
//! polynomials and univariate factorization.

pub(crate) mod algebra;
mod factor_fp;
mod factor_q;

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::arith::{Field, FieldKind, PrimeField, Rationals};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::minpoly::{eval_in_quotient, minpoly_def};
use crate::modular::{minpoly_modular, ModularOptions};
use crate::poly::{MultiPoly, UniPoly};

use algebra::{independent_with_first, kernel, IntegerAlgebra, QuotientAlgebra};
pub use factor_fp::factor_uni_fp;
pub use factor_q::factor_uni_q;
use factor_q::gcd_q;

/// `unit * prod g^m` with monic irreducible `g`, sorted by degree then text.
#[derive(Clone, PartialEq, Eq)]
pub struct Factorization<F: Field> {
    pub unit: F::Elem,
    pub factors: Vec<(UniPoly<F>, usize)>,
}

impl<F: Field> Factorization<F> {
    fn sort(&mut self) {
        self.factors
            .sort_by_cached_key(|(g, m)| (g.deg(), g.to_string(), *m));
    }

    /// Number of distinct irreducible factors.
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    /// A power of a single irreducible.
    pub fn is_primary(&self) -> bool {
        self.factors.len() == 1
    }

    pub fn expand(&self, field: &F) -> UniPoly<F> {
        self.factors.iter().fold(
            UniPoly::from_coeffs(field.clone(), vec![self.unit.clone()]),
            |acc, (g, m)| acc.mul(&g.pow(*m as u64)),
        )
    }
}

impl<F: Field> fmt::Display for Factorization<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(g, m)| {
                if *m == 1 {
                    format!("({g})")
                } else {
                    format!("({g})^{m}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" * "))
    }
}

impl<F: Field> fmt::Debug for Factorization<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone)]
pub struct StructureOptions {
    pub seed: u64,
    /// Random linear forms tried before giving up over an infinite field.
    pub max_attempts: usize,
    /// Verify modular minimal polynomials over Q.
    pub verify: bool,
}

impl Default for StructureOptions {
    fn default() -> Self {
        StructureOptions {
            seed: 0,
            max_attempts: 20,
            verify: true,
        }
    }
}

impl StructureOptions {
    fn branch(&self, i: usize) -> Self {
        StructureOptions {
            seed: self
                .seed
                .wrapping_mul(0x9e37_79b9_7f4a_7c15)
                .wrapping_add(i as u64 + 1),
            ..self.clone()
        }
    }
}

/// Fields over which the structure algorithms can run.
pub trait StructField: Field {
    fn factor(f: &UniPoly<Self>) -> Result<Factorization<Self>>;

    /// Monic gcd.
    fn gcd(a: &UniPoly<Self>, b: &UniPoly<Self>) -> UniPoly<Self> {
        a.gcd(b)
    }

    /// Squarefree part, monic.
    fn sqfree(f: &UniPoly<Self>) -> Result<UniPoly<Self>> {
        f.sqfree()
    }

    fn structure_minpoly(
        ideal: &Ideal<Self>,
        f: &MultiPoly<Self>,
        opts: &StructureOptions,
    ) -> Result<UniPoly<Self>>;

    /// Basis of the Frobenius space, `None` over an infinite field.
    fn frobenius(ideal: &Ideal<Self>) -> Option<Result<Vec<MultiPoly<Self>>>>;

    /// Normal form of `mu(f)` modulo the ideal.
    fn image(ideal: &Ideal<Self>, mu: &UniPoly<Self>, f: &MultiPoly<Self>) -> MultiPoly<Self> {
        eval_in_quotient(&ideal.gb(), mu, f)
    }
}

impl StructField for PrimeField {
    fn factor(f: &UniPoly<Self>) -> Result<Factorization<Self>> {
        factor_uni_fp(f)
    }

    fn structure_minpoly(
        ideal: &Ideal<Self>,
        f: &MultiPoly<Self>,
        _opts: &StructureOptions,
    ) -> Result<UniPoly<Self>> {
        minpoly_def(ideal, f)
    }

    fn frobenius(ideal: &Ideal<Self>) -> Option<Result<Vec<MultiPoly<Self>>>> {
        Some(frobenius_basis(ideal))
    }
}

impl StructField for Rationals {
    fn factor(f: &UniPoly<Self>) -> Result<Factorization<Self>> {
        factor_uni_q(f)
    }

    fn gcd(a: &UniPoly<Self>, b: &UniPoly<Self>) -> UniPoly<Self> {
        gcd_q(a, b)
    }

    fn sqfree(f: &UniPoly<Self>) -> Result<UniPoly<Self>> {
        match f.degree() {
            None => return Err(Error::ZeroPolynomial),
            Some(0) => return Err(Error::ConstantPolynomial),
            _ => {}
        }
        Ok(f.div_exact(&gcd_q(f, &f.derivative())).monic())
    }

    fn structure_minpoly(
        ideal: &Ideal<Self>,
        f: &MultiPoly<Self>,
        opts: &StructureOptions,
    ) -> Result<UniPoly<Self>> {
        let mopts = ModularOptions {
            verify: opts.verify,
            seed: opts.seed,
            ..ModularOptions::default()
        };
        Ok(minpoly_modular(ideal, f, ideal.ring().order, &mopts)?.0)
    }

    fn frobenius(_ideal: &Ideal<Self>) -> Option<Result<Vec<MultiPoly<Self>>>> {
        None
    }

    fn image(ideal: &Ideal<Self>, mu: &UniPoly<Self>, f: &MultiPoly<Self>) -> MultiPoly<Self> {
        let alg = QuotientAlgebra::new(ideal.gb()).expect("zero-dimensional");
        alg.poly(&IntegerAlgebra::new(&alg).eval(mu, f))
    }
}

/// Basis of `{f in P/I : f^q = f}` for `K = F_q`, starting with `1`.
pub fn frobenius_basis<F: Field>(ideal: &Ideal<F>) -> Result<Vec<MultiPoly<F>>> {
    let q = match ideal.field().kind() {
        FieldKind::Finite { q } => q,
        FieldKind::Infinite => return Err(Error::NonPrimeField(0)),
    };
    let alg = QuotientAlgebra::new(ideal.gb())?;
    let d = alg.dim();
    if d == 0 {
        return Ok(Vec::new());
    }
    let ring = ideal.ring();
    let field = ideal.field();
    let images: Vec<_> = (0..ring.nvars())
        .map(|k| alg.pow(&alg.coords(&MultiPoly::var(ring, k)), q))
        .collect();
    let mut cols = alg.endomorphism(&images).cols;
    for (i, col) in cols.iter_mut().enumerate() {
        col[i] = field.sub(&col[i], &field.one());
    }
    let ker = kernel(field, &cols);
    let basis = independent_with_first(field, alg.one(), ker);
    Ok(basis.iter().map(|v| alg.poly(v)).collect())
}

pub fn frobenius_dim<F: Field>(ideal: &Ideal<F>) -> Result<usize> {
    Ok(frobenius_basis(ideal)?.len())
}

fn require_zero_dim<F: Field>(ideal: &Ideal<F>) -> Result<usize> {
    if !ideal.is_zero_dimensional() {
        return Err(Error::NotZeroDimensional);
    }
    ideal.quotient_dim()
}

fn is_squarefree<F: StructField>(mu: &UniPoly<F>) -> bool {
    F::gcd(mu, &mu.derivative()).deg() == 0
}

fn random_linear_form<F: Field>(ideal: &Ideal<F>, rng: &mut ChaCha8Rng) -> MultiPoly<F> {
    let coeffs: Vec<i64> = (0..ideal.ring().nvars())
        .map(|_| {
            let c = rng.gen_range(1..=999);
            if rng.gen_bool(0.5) {
                -c
            } else {
                c
            }
        })
        .collect();
    MultiPoly::linear_form(ideal.ring(), &coeffs)
}

fn var_minpolys<'a, F: StructField>(
    ideal: &'a Ideal<F>,
    opts: &StructureOptions,
) -> impl Iterator<Item = (MultiPoly<F>, Result<UniPoly<F>>)> + 'a {
    let opts = opts.clone();
    (0..ideal.ring().nvars()).map(move |i| {
        let x = MultiPoly::var(ideal.ring(), i);
        let mu = F::structure_minpoly(ideal, &x, &opts);
        (x, mu)
    })
}

/// `mu(f)` reduced modulo `I`, as a generator to add to `I`.
fn image_of<F: StructField>(ideal: &Ideal<F>, mu: &UniPoly<F>, f: &MultiPoly<F>) -> MultiPoly<F> {
    F::image(ideal, mu, f)
}

pub fn is_radical_0dim<F: StructField>(ideal: &Ideal<F>, opts: &StructureOptions) -> Result<bool> {
    let d = require_zero_dim(ideal)?;
    for (_, mu) in var_minpolys(ideal, opts) {
        let mu = mu?;
        if !is_squarefree(&mu) {
            return Ok(false);
        }
        if mu.deg() == d {
            return Ok(true);
        }
    }
    Ok(true)
}

pub fn radical_0dim<F: StructField>(ideal: &Ideal<F>, opts: &StructureOptions) -> Result<Ideal<F>> {
    let mut d = require_zero_dim(ideal)?;
    let mut j = ideal.clone();
    for i in 0..ideal.ring().nvars() {
        let x = MultiPoly::var(ideal.ring(), i);
        let mut mu = F::structure_minpoly(&j, &x, opts)?;
        if !is_squarefree(&mu) {
            mu = F::sqfree(&mu)?;
            let g = image_of(&j, &mu, &x);
            j = j.add_generators(&[g]);
            d = j.quotient_dim()?;
        }
        if mu.deg() == d {
            return Ok(j);
        }
    }
    Ok(j)
}

pub fn is_maximal<F: StructField>(ideal: &Ideal<F>, opts: &StructureOptions) -> Result<bool> {
    if !ideal.is_zero_dimensional() || ideal.is_unit() {
        return Ok(false);
    }
    let d = ideal.quotient_dim()?;
    for (_, mu) in var_minpolys(ideal, opts) {
        let mu = mu?;
        if !F::factor(&mu)?.is_irreducible() {
            return Ok(false);
        }
        if mu.deg() == d {
            return Ok(true);
        }
    }
    if let Some(basis) = F::frobenius(ideal) {
        return Ok(basis?.len() == 1);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..opts.max_attempts {
        let l = random_linear_form(ideal, &mut rng);
        let mu = F::structure_minpoly(ideal, &l, opts)?;
        if !F::factor(&mu)?.is_irreducible() {
            return Ok(false);
        }
        if mu.deg() == d {
            return Ok(true);
        }
    }
    Err(Error::HeuristicExhausted(opts.max_attempts))
}

pub fn is_primary_0dim<F: StructField>(ideal: &Ideal<F>, opts: &StructureOptions) -> Result<bool> {
    let mut d = require_zero_dim(ideal)?;
    if d == 0 {
        return Ok(false);
    }
    let mut j = ideal.clone();
    for i in 0..ideal.ring().nvars() {
        let x = MultiPoly::var(ideal.ring(), i);
        let mut mu = F::structure_minpoly(&j, &x, opts)?;
        if !F::factor(&mu)?.is_primary() {
            return Ok(false);
        }
        if mu.deg() == d {
            return Ok(true);
        }
        if !is_squarefree(&mu) {
            mu = F::sqfree(&mu)?;
            let g = image_of(&j, &mu, &x);
            j = j.add_generators(&[g]);
            d = j.quotient_dim()?;
            if mu.deg() == d {
                return Ok(true);
            }
        }
    }
    // j has the same radical as the input
    if let Some(basis) = F::frobenius(&j) {
        return Ok(basis?.len() == 1);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..opts.max_attempts {
        let l = random_linear_form(&j, &mut rng);
        let mu = F::structure_minpoly(&j, &l, opts)?;
        if !F::factor(&mu)?.is_primary() {
            return Ok(false);
        }
        if mu.deg() == d {
            return Ok(true);
        }
    }
    Err(Error::HeuristicExhausted(opts.max_attempts))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitToken {
    /// The components are primary.
    TotalSplit,
    /// At least two components, not necessarily primary.
    PartialSplit,
}

impl fmt::Display for SplitToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SplitToken::TotalSplit => "TotalSplit",
            SplitToken::PartialSplit => "PartialSplit",
        })
    }
}

/// An element `f` and the prime-power factors `g_j^{m_j}` of its minimal
/// polynomial; `I = ∩ (I + <g_j(f)^{m_j}>)`.
#[derive(Debug, Clone)]
pub struct SplitReport<F: Field> {
    pub splitter: MultiPoly<F>,
    pub factors: Vec<(UniPoly<F>, usize)>,
    pub token: SplitToken,
}

impl<F: Field> SplitReport<F> {
    fn trivial(ideal: &Ideal<F>) -> Self {
        let k = ideal.field().clone();
        SplitReport {
            splitter: MultiPoly::zero(ideal.ring()),
            factors: vec![(UniPoly::monomial(k.clone(), k.one(), 1), 1)],
            token: SplitToken::TotalSplit,
        }
    }

    fn from_factorization(f: MultiPoly<F>, fac: Factorization<F>, token: SplitToken) -> Self {
        SplitReport {
            splitter: f,
            factors: fac.factors,
            token,
        }
    }
}

pub fn pd_splitting<F: StructField>(
    ideal: &Ideal<F>,
    opts: &StructureOptions,
) -> Result<SplitReport<F>> {
    let d = require_zero_dim(ideal)?;
    if d == 0 {
        return Err(Error::ZeroIdeal);
    }
    let mut sqfree_parts = Vec::new();
    for (x, mu) in var_minpolys(ideal, opts) {
        let mu = mu?;
        let fac = F::factor(&mu)?;
        if mu.deg() == d {
            return Ok(SplitReport::from_factorization(x, fac, SplitToken::TotalSplit));
        }
        if fac.len() > 1 {
            return Ok(SplitReport::from_factorization(x, fac, SplitToken::PartialSplit));
        }
        sqfree_parts.push(image_of(ideal, &fac.factors[0].0, &x));
    }
    if F::frobenius(ideal).is_some() {
        return pd_splitting_finite(ideal, opts);
    }
    if is_maximal(&ideal.add_generators(&sqfree_parts), opts)? {
        return Ok(SplitReport::trivial(ideal));
    }
    pd_splitting_infinite(ideal, opts)
}

pub fn pd_splitting_finite<F: StructField>(
    ideal: &Ideal<F>,
    opts: &StructureOptions,
) -> Result<SplitReport<F>> {
    let basis = F::frobenius(ideal).ok_or(Error::NonPrimeField(0))??;
    let s = basis.len();
    if s <= 1 {
        return Ok(SplitReport::trivial(ideal));
    }
    let f = basis
        .into_iter()
        .find(|b| !b.is_constant())
        .expect("a basis of size > 1 has a nonconstant element");
    let mu = F::structure_minpoly(ideal, &f, opts)?;
    let fac = F::factor(&mu)?;
    let token = if mu.deg() == s {
        SplitToken::TotalSplit
    } else {
        SplitToken::PartialSplit
    };
    Ok(SplitReport::from_factorization(f, fac, token))
}

/// Random linear forms until one splits `I`; meant for non-primary ideals.
pub fn pd_splitting_infinite<F: StructField>(
    ideal: &Ideal<F>,
    opts: &StructureOptions,
) -> Result<SplitReport<F>> {
    let d = require_zero_dim(ideal)?;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..opts.max_attempts {
        let l = random_linear_form(ideal, &mut rng);
        let mu = F::structure_minpoly(ideal, &l, opts)?;
        let fac = F::factor(&mu)?;
        if mu.deg() == d {
            return Ok(SplitReport::from_factorization(l, fac, SplitToken::TotalSplit));
        }
        if fac.len() > 1 {
            return Ok(SplitReport::from_factorization(l, fac, SplitToken::PartialSplit));
        }
    }
    Err(Error::HeuristicExhausted(opts.max_attempts))
}

pub fn primary_decomposition_core<F: StructField>(
    ideal: &Ideal<F>,
    opts: &StructureOptions,
) -> Result<(Vec<Ideal<F>>, SplitToken)> {
    let split = pd_splitting(ideal, opts)?;
    if split.factors.len() == 1 {
        return Ok((vec![ideal.clone()], SplitToken::TotalSplit));
    }
    let alg = QuotientAlgebra::new(ideal.gb())?;
    let comps = split
        .factors
        .par_iter()
        .map(|(g, m)| {
            let h = image_of(ideal, &g.pow(*m as u64), &split.splitter);
            Ideal::from_gb(ideal.ring(), alg.ideal_plus(&alg.coords(&h)))
        })
        .collect();
    Ok((comps, split.token))
}

/// Primary components of a zero-dimensional ideal, sorted by the text of
/// their reduced bases.
pub fn primary_decomposition_0dim<F: StructField>(
    ideal: &Ideal<F>,
    opts: &StructureOptions,
) -> Result<Vec<Ideal<F>>> {
    require_zero_dim(ideal)?;
    if ideal.is_unit() {
        return Ok(Vec::new());
    }
    let comps = decompose(ideal, opts)?;
    let mut keyed: Vec<(String, Ideal<F>)> =
        comps.into_iter().map(|c| (c.gb().to_string(), c)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.dedup_by(|a, b| a.0 == b.0);
    Ok(keyed.into_iter().map(|(_, c)| c).collect())
}

fn decompose<F: StructField>(ideal: &Ideal<F>, opts: &StructureOptions) -> Result<Vec<Ideal<F>>> {
    let (comps, token) = primary_decomposition_core(ideal, opts)?;
    if token == SplitToken::TotalSplit {
        return Ok(comps);
    }
    let parts: Vec<Vec<Ideal<F>>> = comps
        .into_par_iter()
        .enumerate()
        .map(|(i, c)| {
            let o = opts.branch(i);
            if is_primary_0dim(&c, &o)? {
                Ok(vec![c])
            } else {
                decompose(&c, &o)
            }
        })
        .collect::<Result<_>>()?;
    Ok(parts.into_iter().flatten().collect())
}
