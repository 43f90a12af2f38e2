//! Incremental detection of the first linear dependency in a stream of
//! vectors.

use crate::arith::Field;
use crate::error::{Error, Result};

struct Row<E> {
    pivot: usize,
    entries: Vec<E>,
    /// Coefficients expressing this row in the fed vectors.
    comb: Vec<E>,
}

/// Row-reduction state over the vectors fed so far.
///
/// Stored rows are in semi-echelon form: each has a unit pivot and is zero at
/// the pivots of the rows stored before it, so a single sweep in insertion
/// order reduces a new vector.
pub struct LinDepMill<F: Field> {
    field: F,
    dim: usize,
    rows: Vec<Row<F::Elem>>,
    fed: usize,
}

impl<F: Field> LinDepMill<F> {
    pub fn new(field: F, dim: usize) -> Self {
        LinDepMill {
            field,
            dim,
            rows: Vec::new(),
            fed: 0,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of independent vectors absorbed.
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Number of vectors fed so far.
    pub fn fed(&self) -> usize {
        self.fed
    }

    /// Feed `v`. Returns `Some(c)` with `v = sum c_j v_j` over the previously
    /// fed vectors when `v` depends on them; otherwise stores `v` and returns
    /// `None`.
    pub fn feed(&mut self, v: &[F::Elem]) -> Result<Option<Vec<F::Elem>>> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: v.len(),
            });
        }
        let k = &self.field;
        let idx = self.fed;
        self.fed += 1;
        let mut w = v.to_vec();
        // sum of a_r * comb_r over the rows used
        let mut used = vec![k.zero(); idx + 1];
        for row in &self.rows {
            let a = w[row.pivot].clone();
            if k.is_zero(&a) {
                continue;
            }
            k.sub_scaled(&mut w, &a, &row.entries);
            let na = k.neg(&a);
            k.sub_scaled(&mut used[..row.comb.len()], &na, &row.comb);
        }
        match w.iter().position(|c| !k.is_zero(c)) {
            None => {
                used.truncate(idx);
                Ok(Some(used))
            }
            Some(pivot) => {
                let inv = k.inv(&w[pivot]);
                k.scale_in_place(&mut w, &inv);
                // comb = (e_idx - used) / w[pivot]
                let mut comb: Vec<F::Elem> = used.iter().map(|c| k.neg(c)).collect();
                comb[idx] = k.one();
                k.scale_in_place(&mut comb, &inv);
                self.rows.push(Row {
                    pivot,
                    entries: w,
                    comb,
                });
                Ok(None)
            }
        }
    }
}
