//! Minimal polynomials over Q from images modulo many primes.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use crate::arith::{CrtAccumulator, PrimeField, PrimeStream, Rationals};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::minpoly::minpoly_def_gb;
use crate::structure::algebra::{IntegerAlgebra, QuotientAlgebra};
use crate::poly::{MultiPoly, PolyRing, TermOrder, UniPoly};

/// Post-hoc quality of a usable prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrimeQuality {
    /// The modular minimal polynomial is the image of the true one.
    Good,
    /// The modular minimal polynomial has too small a degree.
    Bad,
    Unknown,
}

/// Whether a prime can be used at all for a given element and ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrimeClass {
    /// `p` divides `den(f) * den_sigma(I)`.
    Ugly,
    Usable,
}

#[derive(Debug, Clone)]
pub struct ModularOptions {
    /// Check `mu(f) ∈ I` over Q before accepting a reconstruction.
    pub verify: bool,
    pub seed: u64,
    /// Primes tried before the pseudo-random stream.
    pub forced_primes: Vec<u64>,
    /// Give up after this many usable primes.
    pub max_primes: usize,
    /// Primes handled per parallel batch.
    pub batch: usize,
}

impl Default for ModularOptions {
    fn default() -> Self {
        ModularOptions {
            verify: true,
            seed: 0,
            forced_primes: Vec::new(),
            max_primes: 4096,
            batch: rayon::current_num_threads().clamp(1, 8),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeRecord {
    pub prime: u64,
    pub degree: usize,
    pub quality: PrimeQuality,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verification {
    Passed,
    Skipped,
    /// Output of the generator-only variant: never checked against the ideal.
    Unverified,
}

/// What happened during a modular run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModularRunReport {
    /// Usable primes in the order they were used, with their image degree.
    pub records: Vec<PrimeRecord>,
    /// Primes skipped because they divide a denominator.
    pub ugly: Vec<u64>,
    /// Primes skipped by the generator-only variant because the image ideal
    /// was not zero-dimensional.
    pub degenerate: Vec<u64>,
    pub modulus_bits: u64,
    pub verification: Verification,
    /// Number of reconstructions that were rejected by the membership check.
    pub failed_checks: usize,
    /// The first image already had full degree `dim_K(P/I)`.
    pub full_degree_certificate: bool,
}

impl ModularRunReport {
    fn new() -> Self {
        ModularRunReport {
            records: Vec::new(),
            ugly: Vec::new(),
            degenerate: Vec::new(),
            modulus_bits: 0,
            verification: Verification::Skipped,
            failed_checks: 0,
            full_degree_certificate: false,
        }
    }

    pub fn primes_used(&self) -> usize {
        self.records.len()
    }

    pub fn bad_primes(&self) -> Vec<(u64, usize)> {
        self.records
            .iter()
            .filter(|r| r.quality == PrimeQuality::Bad)
            .map(|r| (r.prime, r.degree))
            .collect()
    }

    fn mark_final(&mut self, degree: usize) {
        for r in &mut self.records {
            r.quality = if r.degree == degree {
                PrimeQuality::Good
            } else {
                PrimeQuality::Bad
            };
        }
    }
}

pub fn classify_prime(
    p: u64,
    f: &MultiPoly<Rationals>,
    ideal: &Ideal<Rationals>,
    order: TermOrder,
) -> PrimeClass {
    let den = f.den() * ideal.den_sigma(order).unwrap_or_else(|_| BigInt::from(1));
    if (den % p).is_zero() {
        PrimeClass::Ugly
    } else {
        PrimeClass::Usable
    }
}

fn reconstruct(acc: &CrtAccumulator) -> Option<UniPoly<Rationals>> {
    let mut coeffs = Vec::with_capacity(acc.degree() + 1);
    for r in acc.reconstruct() {
        if !r.reliable {
            return None;
        }
        coeffs.push(BigRational::new(r.num, r.den));
    }
    Some(UniPoly::from_coeffs(Rationals, coeffs))
}

/// Reconstruction even where unreliable.
fn reconstruct_any(acc: &CrtAccumulator) -> UniPoly<Rationals> {
    let coeffs = acc
        .reconstruct()
        .into_iter()
        .map(|r| BigRational::new(r.num, r.den))
        .collect();
    UniPoly::from_coeffs(Rationals, coeffs)
}

/// Draw the next batch of usable primes; ugly ones are recorded and skipped.
fn next_batch(
    stream: &mut PrimeStream,
    den: &BigInt,
    n: usize,
    report: &mut ModularRunReport,
) -> Vec<u64> {
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let p = stream.next().unwrap();
        if PrimeField::new(p).is_err() {
            continue;
        }
        if (den % p).is_zero() {
            report.ugly.push(p);
        } else {
            out.push(p);
        }
    }
    out
}

/// Minimal polynomial of `f` modulo the zero-dimensional ideal `I` over Q via
/// modular images, CRT and rational reconstruction.
pub fn minpoly_modular(
    ideal: &Ideal<Rationals>,
    f: &MultiPoly<Rationals>,
    order: TermOrder,
    opts: &ModularOptions,
) -> Result<(UniPoly<Rationals>, ModularRunReport)> {
    let gb = ideal.gb_for(order);
    let qb = gb.quotient_basis()?;
    let dim = qb.len();
    let mut report = ModularRunReport::new();
    if dim == 0 {
        report.verification = if opts.verify {
            Verification::Passed
        } else {
            Verification::Skipped
        };
        return Ok((UniPoly::one(Rationals), report));
    }
    let den = f.den() * ideal.den_sigma(order)?;
    let mut stream = PrimeStream::with_prefix(opts.seed, opts.forced_primes.clone());
    let mut acc: Option<CrtAccumulator> = None;
    let f_nf = gb.normal_form(&f.to_ring(gb.ring()));
    let mut checker: Option<IntegerAlgebra> = None;

    loop {
        if report.records.len() >= opts.max_primes {
            return Err(Error::PrimeBudgetExhausted(report.records.len()));
        }
        let want = opts.batch.min(opts.max_primes - report.records.len()).max(1);
        let primes = next_batch(&mut stream, &den, want, &mut report);
        let images: Vec<Result<(u64, Vec<u64>)>> = primes
            .par_iter()
            .map(|&p| {
                let ip = ideal.reduce_mod_p(order, p)?;
                let gbp = ip.gb_for(order);
                let fp = f.map_mod_p(&gbp.ring().clone())?;
                let mu = minpoly_def_gb(&gbp, &fp)?;
                Ok((p, mu.coeffs().to_vec()))
            })
            .collect();
        for img in images {
            let (p, coeffs) = img?;
            let deg = coeffs.len() - 1;
            report.records.push(PrimeRecord {
                prime: p,
                degree: deg,
                quality: PrimeQuality::Unknown,
            });
            let certificate = deg == dim;
            match &mut acc {
                Some(a) if a.degree() == deg => a.absorb(p, &coeffs)?,
                Some(a) if a.degree() > deg => {
                    report.records.last_mut().unwrap().quality = PrimeQuality::Bad;
                    continue;
                }
                _ => {
                    // first image, or a higher degree that exposes the old class as bad
                    for r in &mut report.records {
                        if r.degree < deg {
                            r.quality = PrimeQuality::Bad;
                        }
                    }
                    acc = Some(CrtAccumulator::new(p, &coeffs));
                    if certificate && report.records.len() == 1 {
                        report.full_degree_certificate = true;
                    }
                }
            }
            let a = acc.as_ref().unwrap();
            if a.primes().len() < 2 && !certificate {
                continue;
            }
            let Some(mu) = reconstruct(a) else {
                continue;
            };
            if mu.is_zero() {
                continue;
            }
            if opts.verify {
                if checker.is_none() {
                    checker = Some(IntegerAlgebra::new(&QuotientAlgebra::new(gb.clone())?));
                }
                if !checker.as_ref().unwrap().vanishes(&mu, &f_nf) {
                    report.failed_checks += 1;
                    continue;
                }
                report.verification = Verification::Passed;
            }
            report.modulus_bits = a.modulus().bits();
            report.mark_final(mu.deg());
            return Ok((mu, report));
        }
    }
}

/// Generator-only variant: no Groebner basis over Q, images from the ideal
/// generated by the reduced generators, degree classes kept side by side and
/// the largest one reconstructed. The result is never checked against the
/// ideal and may be wrong.
pub fn minpoly_modular_heuristic(
    ring: &Arc<PolyRing<Rationals>>,
    gens: &[MultiPoly<Rationals>],
    f: &MultiPoly<Rationals>,
    order: TermOrder,
    opts: &ModularOptions,
) -> Result<(UniPoly<Rationals>, ModularRunReport)> {
    let den = gens.iter().fold(f.den(), |acc, g| acc * g.den());
    let mut stream = PrimeStream::with_prefix(opts.seed, opts.forced_primes.clone());
    let mut report = ModularRunReport::new();
    report.verification = Verification::Unverified;
    let mut classes: BTreeMap<usize, CrtAccumulator> = BTreeMap::new();
    let ord_ring = ring.with_order(order);
    let mut attempts = 0usize;

    loop {
        if report.records.len() >= opts.max_primes || attempts >= opts.max_primes.saturating_mul(4) {
            let Some((_, best)) = classes.iter().next_back() else {
                return Err(Error::PrimeBudgetExhausted(report.records.len()));
            };
            report.modulus_bits = best.modulus().bits();
            let mu = reconstruct_any(best);
            report.mark_final(mu.deg());
            return Ok((mu, report));
        }
        let want = opts.batch.min(opts.max_primes - report.records.len()).max(1);
        let primes = next_batch(&mut stream, &den, want, &mut report);
        attempts += primes.len();
        let images: Vec<(u64, Option<Vec<u64>>)> = primes
            .par_iter()
            .map(|&p| {
                let fp = PrimeField::new(p).unwrap();
                let rp = ord_ring.with_field(fp);
                let gp: Vec<_> = gens.iter().map(|g| g.map_mod_p(&rp).unwrap()).collect();
                let ip = Ideal::new(&rp, gp);
                let gbp = ip.gb();
                match minpoly_def_gb(&gbp, &f.map_mod_p(&rp).unwrap()) {
                    Ok(mu) => (p, Some(mu.coeffs().to_vec())),
                    Err(_) => (p, None),
                }
            })
            .collect();
        for (p, img) in images {
            let Some(coeffs) = img else {
                report.degenerate.push(p);
                continue;
            };
            let deg = coeffs.len() - 1;
            report.records.push(PrimeRecord {
                prime: p,
                degree: deg,
                quality: PrimeQuality::Unknown,
            });
            match classes.get_mut(&deg) {
                Some(a) => a.absorb(p, &coeffs)?,
                None => {
                    classes.insert(deg, CrtAccumulator::new(p, &coeffs));
                }
            }
            let (&top, best) = classes.iter().next_back().unwrap();
            if top != deg || best.primes().len() < 2 {
                continue;
            }
            if let Some(mu) = reconstruct(best) {
                if mu.is_zero() {
                    continue;
                }
                report.modulus_bits = best.modulus().bits();
                report.mark_final(mu.deg());
                return Ok((mu, report));
            }
        }
    }
}
