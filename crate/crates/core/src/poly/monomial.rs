use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// A power product `x_1^e_1 * ... * x_n^e_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PowerProduct(SmallVec<[u32; 8]>);

impl PowerProduct {
    pub fn one(n: usize) -> Self {
        PowerProduct(SmallVec::from_elem(0, n))
    }

    pub fn var(n: usize, i: usize, e: u32) -> Self {
        let mut pp = Self::one(n);
        pp.0[i] = e;
        pp
    }

    pub fn from_exps(exps: &[u32]) -> Self {
        PowerProduct(SmallVec::from_slice(exps))
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.arity(), other.arity());
        PowerProduct(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self / other`; caller guarantees `other | self`.
    pub fn div(&self, other: &Self) -> Self {
        debug_assert!(other.divides(self));
        PowerProduct(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Self) -> Self {
        PowerProduct(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// If this is a pure power `x_i^e` with `e > 0`, return `i`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    /// Reorder exponents: position `k` of the result takes exponent `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        PowerProduct(perm.iter().map(|&i| self.0.get(i).copied().unwrap_or(0)).collect())
    }
}

impl fmt::Debug for PowerProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

/// A term ordering on power products of a fixed arity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum TermOrder {
    Lex,
    DegLex,
    #[default]
    DegRevLex,
    /// Elimination order: degrevlex on the first `front` variables, ties
    /// broken by degrevlex on the rest.
    Block { front: usize },
}

fn revlex_tail(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| revlex_tail(a, b))
}

impl TermOrder {
    #[inline]
    pub fn compare(&self, a: &PowerProduct, b: &PowerProduct) -> Ordering {
        let (a, b) = (a.exps(), b.exps());
        match *self {
            TermOrder::Lex => a.cmp(b),
            TermOrder::DegLex => {
                let da: u64 = a.iter().map(|&e| e as u64).sum();
                let db: u64 = b.iter().map(|&e| e as u64).sum();
                da.cmp(&db).then_with(|| a.cmp(b))
            }
            TermOrder::DegRevLex => degrevlex(a, b),
            TermOrder::Block { front } => {
                let k = front.min(a.len());
                degrevlex(&a[..k], &b[..k]).then_with(|| degrevlex(&a[k..], &b[k..]))
            }
        }
    }

    /// Comparison that rejects power products of different arity.
    pub fn try_compare(&self, a: &PowerProduct, b: &PowerProduct) -> Result<Ordering> {
        if a.arity() != b.arity() {
            return Err(Error::ArityMismatch(a.arity(), b.arity()));
        }
        Ok(self.compare(a, b))
    }

    pub fn name(&self) -> String {
        match self {
            TermOrder::Lex => "lex".into(),
            TermOrder::DegLex => "deglex".into(),
            TermOrder::DegRevLex => "degrevlex".into(),
            TermOrder::Block { front } => format!("block({front})"),
        }
    }
}
