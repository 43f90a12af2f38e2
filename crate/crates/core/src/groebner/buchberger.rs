use std::cmp::Ordering;
use std::sync::Arc;

use super::nf::reduce;
use crate::arith::Field;
use crate::poly::{MultiPoly, PolyRing, PowerProduct};

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: PowerProduct,
}

struct State<F: Field> {
    ring: Arc<PolyRing<F>>,
    polys: Vec<MultiPoly<F>>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl<F: Field> State<F> {
    fn new(ring: &Arc<PolyRing<F>>) -> Self {
        State {
            ring: ring.clone(),
            polys: Vec::new(),
            active: Vec::new(),
            pairs: Vec::new(),
        }
    }

    fn reducers(&self) -> Vec<&MultiPoly<F>> {
        self.polys
            .iter()
            .zip(&self.active)
            .filter(|(_, a)| **a)
            .map(|(p, _)| p)
            .collect()
    }

    fn lpp(&self, i: usize) -> &PowerProduct {
        self.polys[i].lpp().unwrap()
    }

    /// Add an element known to form a basis together with the active ones
    /// (no new pairs).
    fn push_basis_element(&mut self, h: MultiPoly<F>) {
        self.polys.push(h);
        self.active.push(true);
    }

    /// Insert a new monic element with the Gebauer-Moeller criteria.
    fn update(&mut self, h: MultiPoly<F>) {
        let ord = self.ring.order;
        let hi = self.polys.len();
        let lh = h.lpp().unwrap().clone();
        self.polys.push(h);
        self.active.push(true);

        // Candidate pairs (h, g) for active g.
        let mut cands: Vec<(usize, PowerProduct, bool)> = (0..hi)
            .filter(|&g| self.active[g])
            .map(|g| {
                let lg = self.lpp(g);
                (g, lh.lcm(lg), lh.is_coprime(lg))
            })
            .collect();
        // Keep a candidate if its lcm is not a proper multiple of another
        // candidate's lcm; among equal lcms keep one, preferring a coprime one.
        cands.sort_by(|a, b| ord.compare(&a.1, &b.1).then_with(|| b.2.cmp(&a.2)).then(a.0.cmp(&b.0)));
        let mut kept: Vec<(usize, PowerProduct, bool)> = Vec::new();
        for c in cands {
            if kept.iter().any(|k| k.1.divides(&c.1)) {
                continue;
            }
            kept.push(c);
        }
        // Drop old pairs whose lcm is strictly divisible by lt(h) in a way
        // that both new pairs cover it.
        let polys = &self.polys;
        self.pairs.retain(|p| {
            if !lh.divides(&p.lcm) {
                return true;
            }
            let li = polys[p.i].lpp().unwrap();
            let lj = polys[p.j].lpp().unwrap();
            lh.lcm(li) == p.lcm || lh.lcm(lj) == p.lcm
        });
        for (g, lcm, coprime) in kept {
            if !coprime {
                self.pairs.push(Pair { i: g, j: hi, lcm });
            }
        }
        for g in 0..hi {
            if self.active[g] && lh.divides(self.lpp(g)) {
                self.active[g] = false;
            }
        }
    }

    fn pop_pair(&mut self) -> Option<Pair> {
        let ord = self.ring.order;
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|a, b| {
                ord.compare(&a.1.lcm, &b.1.lcm)
                    .then_with(|| (a.1.j, a.1.i).cmp(&(b.1.j, b.1.i)))
            })?
            .0;
        Some(self.pairs.swap_remove(best))
    }

    fn spoly(&self, p: &Pair) -> MultiPoly<F> {
        let (f, g) = (&self.polys[p.i], &self.polys[p.j]);
        let one = self.ring.field.one();
        let a = f.mul_term(&p.lcm.div(f.lpp().unwrap()), &one);
        let b = g.mul_term(&p.lcm.div(g.lpp().unwrap()), &one);
        a.sub(&b)
    }

    fn insert_reduced(&mut self, f: &MultiPoly<F>) {
        let h = reduce(f, &self.reducers());
        if !h.is_zero() {
            self.update(h.monic());
        }
    }

    fn run(&mut self) {
        while let Some(p) = self.pop_pair() {
            let s = self.spoly(&p);
            self.insert_reduced(&s);
        }
    }

    /// Minimalize and interreduce the active elements; sorted by increasing
    /// leading power product.
    fn finish(self) -> Vec<MultiPoly<F>> {
        let ord = self.ring.order;
        let mut basis: Vec<MultiPoly<F>> = self
            .polys
            .into_iter()
            .zip(self.active)
            .filter(|(_, a)| *a)
            .map(|(p, _)| p)
            .collect();
        basis.sort_by(|a, b| ord.compare(a.lpp().unwrap(), b.lpp().unwrap()));
        // drop elements whose leading term is divisible by another's
        let mut minimal: Vec<MultiPoly<F>> = Vec::new();
        for f in basis {
            let lf = f.lpp().unwrap();
            if minimal.iter().any(|g| g.lpp().unwrap().divides(lf)) {
                continue;
            }
            minimal.push(f);
        }
        let mut out = Vec::with_capacity(minimal.len());
        for (i, f) in minimal.iter().enumerate() {
            let others: Vec<&MultiPoly<F>> = minimal
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| g)
                .collect();
            let head = MultiPoly::monomial(&self.ring, f.lpp().unwrap().clone(), f.lc().unwrap().clone());
            let tail = f.sub(&head);
            out.push(head.add(&reduce(&tail, &others)).monic());
        }
        debug_assert!(out
            .windows(2)
            .all(|w| ord.compare(w[0].lpp().unwrap(), w[1].lpp().unwrap()) == Ordering::Less));
        out
    }
}

/// Reduced Groebner basis of the ideal generated by `gens` under the order of
/// `ring`, sorted by increasing leading power product.
pub(crate) fn buchberger<F: Field>(ring: &Arc<PolyRing<F>>, gens: &[MultiPoly<F>]) -> Vec<MultiPoly<F>> {
    extend_basis(ring, &[], gens)
}

/// Reduced basis of `<basis> + <extra>` where `basis` is already a Groebner
/// basis for the order of `ring`.
pub(crate) fn extend_basis<F: Field>(
    ring: &Arc<PolyRing<F>>,
    basis: &[MultiPoly<F>],
    extra: &[MultiPoly<F>],
) -> Vec<MultiPoly<F>> {
    let mut st = State::new(ring);
    for g in basis {
        debug_assert_eq!(g.ring().order, ring.order);
        st.push_basis_element(g.monic());
    }
    // Smaller generators first tends to keep intermediate results small.
    let mut gens: Vec<MultiPoly<F>> = extra
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.to_ring(ring))
        .collect();
    gens.sort_by(|a, b| ring.order.compare(a.lpp().unwrap(), b.lpp().unwrap()));
    for g in &gens {
        st.insert_reduced(g);
        if st.reducers().iter().any(|r| r.is_constant()) {
            return vec![MultiPoly::one(ring)];
        }
    }
    st.run();
    if st.reducers().iter().any(|r| r.is_constant()) {
        return vec![MultiPoly::one(ring)];
    }
    st.finish()
}
