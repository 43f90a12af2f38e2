use std::cmp::Ordering;
use std::collections::BinaryHeap;

use rustc_hash::FxHashMap;

use crate::arith::Field;
use crate::poly::{MultiPoly, PowerProduct, TermOrder};

struct Key {
    pp: PowerProduct,
    ord: TermOrder,
}

impl PartialEq for Key {
    fn eq(&self, other: &Self) -> bool {
        self.pp == other.pp
    }
}

impl Eq for Key {}

impl PartialOrd for Key {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Key {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ord.compare(&self.pp, &other.pp)
    }
}

/// Full reduction of `f` by monic `reducers` sharing its ring.
///
/// Terms are processed from the top through a max-heap of power products
/// with coefficients accumulated in a hash map; every surviving term is
/// irreducible, so the output comes out sorted.
pub(crate) fn reduce<F: Field>(f: &MultiPoly<F>, reducers: &[&MultiPoly<F>]) -> MultiPoly<F> {
    let ring = f.ring().clone();
    let k = &ring.field;
    let ord = ring.order;
    if f.is_zero() || reducers.is_empty() {
        return f.clone();
    }
    let find = |m: &PowerProduct| -> Option<&MultiPoly<F>> {
        reducers
            .iter()
            .copied()
            .find(|g| g.lpp().is_some_and(|l| l.divides(m)))
    };
    // Fast path: nothing to do.
    if f.terms().iter().all(|(m, _)| find(m).is_none()) {
        return f.clone();
    }
    let mut coeffs: FxHashMap<PowerProduct, F::Elem> = FxHashMap::default();
    let mut heap = BinaryHeap::with_capacity(f.len() * 2);
    for (m, c) in f.terms() {
        coeffs.insert(m.clone(), c.clone());
        heap.push(Key { pp: m.clone(), ord });
    }
    let mut out = Vec::new();
    while let Some(Key { pp: m, .. }) = heap.pop() {
        let Some(c) = coeffs.remove(&m) else {
            continue;
        };
        if k.is_zero(&c) {
            continue;
        }
        match find(&m) {
            None => out.push((m, c)),
            Some(g) => {
                let shift = m.div(g.lpp().unwrap());
                for (t, a) in &g.terms()[1..] {
                    let mono = t.mul(&shift);
                    match coeffs.get_mut(&mono) {
                        Some(e) => k.sub_mul_assign(e, &c, a),
                        None => {
                            let mut e = k.zero();
                            k.sub_mul_assign(&mut e, &c, a);
                            coeffs.insert(mono.clone(), e);
                            heap.push(Key { pp: mono, ord });
                        }
                    }
                }
            }
        }
    }
    MultiPoly::from_sorted(&ring, out)
}
