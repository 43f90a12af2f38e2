use std::fmt;

use crate::arith::{Field, FieldKind};
use crate::error::{Error, Result};

/// Dense univariate polynomial, coefficients from low to high degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> UniPoly<F> {
    pub fn from_coeffs(field: F, mut coeffs: Vec<F::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        UniPoly { field, coeffs }
    }

    pub fn from_i64(field: F, coeffs: &[i64]) -> Self {
        let c = coeffs.iter().map(|&a| field.from_i64(a)).collect();
        Self::from_coeffs(field, c)
    }

    pub fn zero(field: F) -> Self {
        UniPoly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: F) -> Self {
        let one = field.one();
        UniPoly {
            field,
            coeffs: vec![one],
        }
    }

    /// `c * z^e`
    pub fn monomial(field: F, c: F::Elem, e: usize) -> Self {
        let mut coeffs = vec![field.zero(); e + 1];
        coeffs[e] = c;
        Self::from_coeffs(field, coeffs)
    }

    /// `z - a`
    pub fn linear(field: F, a: &F::Elem) -> Self {
        let c = vec![field.neg(a), field.one()];
        Self::from_coeffs(field, c)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> F::Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.field.is_one(&self.coeffs[0])
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn lc(&self) -> F::Elem {
        self.coeffs.last().cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| self.field.is_one(c))
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        self.scale(&self.field.inv(&self.lc()))
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let k = &self.field;
        Self::from_coeffs(k.clone(), self.coeffs.iter().map(|a| k.mul(a, c)).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let k = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n).map(|i| k.add(&self.coeff(i), &other.coeff(i))).collect();
        Self::from_coeffs(k.clone(), c)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let k = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n).map(|i| k.sub(&self.coeff(i), &other.coeff(i))).collect();
        Self::from_coeffs(k.clone(), c)
    }

    pub fn neg(&self) -> Self {
        let k = &self.field;
        Self::from_coeffs(k.clone(), self.coeffs.iter().map(|a| k.neg(a)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let k = &self.field;
        if self.is_zero() || other.is_zero() {
            return Self::zero(k.clone());
        }
        let mut out = vec![k.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if k.is_zero(a) {
                continue;
            }
            let na = k.neg(a);
            k.sub_scaled(&mut out[i..], &na, &other.coeffs);
        }
        Self::from_coeffs(k.clone(), out)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.field.clone());
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

    /// Quotient and remainder. Panics on division by zero.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let k = &self.field;
        let dd = d.degree().expect("division by zero polynomial");
        let Some(n) = self.degree() else {
            return (Self::zero(k.clone()), Self::zero(k.clone()));
        };
        if n < dd {
            return (Self::zero(k.clone()), self.clone());
        }
        let inv = k.inv(&d.lc());
        let mut r = self.coeffs.clone();
        let mut q = vec![k.zero(); n - dd + 1];
        for i in (0..=n - dd).rev() {
            let c = k.mul(&r[i + dd], &inv);
            if k.is_zero(&c) {
                continue;
            }
            k.sub_scaled(&mut r[i..i + dd + 1], &c, &d.coeffs);
            q[i] = c;
        }
        r.truncate(dd);
        (Self::from_coeffs(k.clone(), q), Self::from_coeffs(k.clone(), r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    /// Exact quotient; debug-checks the remainder.
    pub fn div_exact(&self, d: &Self) -> Self {
        let (q, r) = self.divrem(d);
        debug_assert!(r.is_zero(), "inexact division");
        q
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.rem(self).is_zero()
    }

    /// Monic gcd (zero when both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        let k = &self.field;
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, a)| k.mul(a, &k.from_i64(i as i64)))
            .collect();
        Self::from_coeffs(k.clone(), c)
    }

    pub fn eval(&self, x: &F::Elem) -> F::Elem {
        let k = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(k.zero(), |acc, c| k.add(&k.mul(&acc, x), c))
    }

    /// `(self^e) mod m` for a nonconstant modulus.
    pub fn pow_mod(&self, mut e: u64, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = Self::one(self.field.clone()).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).rem(m);
            }
        }
        acc
    }

    /// `self(g) mod m`
    pub fn compose_mod(&self, g: &Self, m: &Self) -> Self {
        let mut acc = Self::zero(self.field.clone());
        for c in self.coeffs.iter().rev() {
            acc = acc
                .mul(g)
                .add(&Self::from_coeffs(self.field.clone(), vec![c.clone()]))
                .rem(m);
        }
        acc
    }

    /// For a polynomial in `z^p` over a prime field, the polynomial in `z`.
    fn pth_root(&self, p: usize) -> Self {
        let c = self.coeffs.iter().step_by(p).cloned().collect();
        Self::from_coeffs(self.field.clone(), c)
    }

    /// Product of the distinct monic irreducible factors.
    pub fn sqfree(&self) -> Result<Self> {
        match self.degree() {
            None => return Err(Error::ZeroPolynomial),
            Some(0) => return Err(Error::ConstantPolynomial),
            _ => {}
        }
        Ok(self.sqfree_part())
    }

    fn sqfree_part(&self) -> Self {
        let df = self.derivative();
        if df.is_zero() {
            let p = match self.field.kind() {
                FieldKind::Finite { .. } => self.field.characteristic() as usize,
                FieldKind::Infinite => unreachable!("nonconstant polynomial with zero derivative"),
            };
            return self.pth_root(p).sqfree_part();
        }
        let g = self.gcd(&df);
        let w = self.div_exact(&g).monic();
        if self.field.characteristic() == 0 {
            return w;
        }
        // factors of g not in w have multiplicity divisible by p
        let mut rest = g;
        loop {
            let h = rest.gcd(&w);
            if h.deg() == 0 {
                break;
            }
            rest = rest.div_exact(&h);
        }
        if rest.deg() == 0 {
            return w;
        }
        let p = self.field.characteristic() as usize;
        w.mul(&rest.monic().pth_root(p).sqfree_part()).monic()
    }

    /// Canonical text using `var` as the variable name.
    pub fn format_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let k = &self.field;
        let mut s = String::new();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if k.is_zero(c) {
                continue;
            }
            let neg = k.is_negative(c);
            let abs = if neg { k.neg(c) } else { c.clone() };
            if first {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            first = false;
            if !k.is_one(&abs) || i == 0 {
                s.push_str(&k.format_elem(&abs));
            }
            if i > 0 {
                s.push_str(var);
                if i > 1 {
                    s.push('^');
                    s.push_str(&i.to_string());
                }
            }
        }
        s
    }
}

impl<F: Field> fmt::Display for UniPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with("z"))
    }
}

impl<F: Field> fmt::Debug for UniPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}
