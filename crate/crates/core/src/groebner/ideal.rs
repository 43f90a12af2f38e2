use std::collections::VecDeque;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use rustc_hash::{FxHashMap, FxHashSet};

use super::buchberger::{buchberger, extend_basis};
use super::nf::reduce;
use crate::arith::{Field, PrimeField, Rationals};
use crate::error::{Error, Result};
use crate::poly::{MultiPoly, PolyRing, PowerProduct, TermOrder};

/// The reduced Groebner basis of an ideal for one term ordering.
#[derive(Clone)]
pub struct ReducedGb<F: Field> {
    ring: Arc<PolyRing<F>>,
    elems: Vec<MultiPoly<F>>,
}

impl<F: Field> ReducedGb<F> {
    /// Wrap elements that are already a reduced basis for the order of `ring`
    /// (monic, sorted by increasing leading power product).
    pub(crate) fn from_reduced(ring: &Arc<PolyRing<F>>, elems: Vec<MultiPoly<F>>) -> Self {
        ReducedGb {
            ring: ring.clone(),
            elems,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing<F>> {
        &self.ring
    }

    pub fn order(&self) -> TermOrder {
        self.ring.order
    }

    pub fn elems(&self) -> &[MultiPoly<F>] {
        &self.elems
    }

    pub fn is_unit(&self) -> bool {
        self.elems.iter().any(|g| g.is_constant())
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn leading_pps(&self) -> Vec<&PowerProduct> {
        self.elems.iter().map(|g| g.lpp().unwrap()).collect()
    }

    /// Normal form of `f`, which may live in a ring with another ordering
    /// but must have the same variables.
    pub fn normal_form(&self, f: &MultiPoly<F>) -> MultiPoly<F> {
        let f = if f.ring().order == self.ring.order {
            f.clone()
        } else {
            f.to_ring(&self.ring)
        };
        let refs: Vec<&MultiPoly<F>> = self.elems.iter().collect();
        reduce(&f, &refs)
    }

    pub fn contains(&self, f: &MultiPoly<F>) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Whether the ideal is zero-dimensional (every variable has a pure power
    /// among the leading power products; the unit ideal counts).
    pub fn is_zero_dimensional(&self) -> bool {
        if self.is_unit() {
            return true;
        }
        let n = self.ring.nvars();
        let mut seen = vec![false; n];
        for l in self.leading_pps() {
            if let Some(i) = l.pure_power_var() {
                seen[i] = true;
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// The power products outside the leading term ideal.
    pub fn quotient_basis(&self) -> Result<QuotientBasis> {
        if !self.is_zero_dimensional() {
            return Err(Error::NotZeroDimensional);
        }
        let n = self.ring.nvars();
        let lts = self.leading_pps();
        let standard = |m: &PowerProduct| !lts.iter().any(|l| l.divides(m));
        let mut found = Vec::new();
        let one = PowerProduct::one(n);
        if standard(&one) {
            let mut seen: FxHashSet<PowerProduct> = FxHashSet::default();
            let mut queue = VecDeque::new();
            seen.insert(one.clone());
            queue.push_back(one);
            while let Some(m) = queue.pop_front() {
                for i in 0..n {
                    let next = m.mul(&PowerProduct::var(n, i, 1));
                    if !seen.contains(&next) && standard(&next) {
                        seen.insert(next.clone());
                        queue.push_back(next);
                    }
                }
                found.push(m);
            }
        }
        let ord = self.ring.order;
        found.sort_by(|a, b| ord.compare(a, b));
        Ok(QuotientBasis::new(found))
    }
}

impl<F: Field> PartialEq for ReducedGb<F> {
    fn eq(&self, other: &Self) -> bool {
        self.ring.order == other.ring.order && self.elems == other.elems
    }
}

impl<F: Field> fmt::Display for ReducedGb<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.elems.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for ReducedGb<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.elems.iter().map(|g| g.to_string()).collect();
        write!(f, "ReducedGb{v:?}")
    }
}

/// Basis `(1, t_2, ..., t_d)` of the quotient algebra, increasing in the
/// term ordering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientBasis {
    pps: Vec<PowerProduct>,
    index: FxHashMap<PowerProduct, usize>,
}

impl QuotientBasis {
    fn new(pps: Vec<PowerProduct>) -> Self {
        let index = pps.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        QuotientBasis { pps, index }
    }

    pub fn len(&self) -> usize {
        self.pps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pps.is_empty()
    }

    pub fn pps(&self) -> &[PowerProduct] {
        &self.pps
    }

    pub fn index_of(&self, pp: &PowerProduct) -> Option<usize> {
        self.index.get(pp).copied()
    }

    /// Coordinates of a normal form.
    pub fn coords<F: Field>(&self, nf: &MultiPoly<F>) -> Vec<F::Elem> {
        let k = nf.field();
        let mut v = vec![k.zero(); self.len()];
        for (pp, c) in nf.terms() {
            let i = self
                .index_of(pp)
                .expect("polynomial is not in normal form for this basis");
            v[i] = c.clone();
        }
        v
    }

    /// Polynomial with the given coordinates.
    pub fn poly<F: Field>(&self, ring: &Arc<PolyRing<F>>, coords: &[F::Elem]) -> MultiPoly<F> {
        let terms = self
            .pps
            .iter()
            .zip(coords)
            .filter(|(_, c)| !ring.field.is_zero(c))
            .map(|(p, c)| (p.clone(), c.clone()))
            .collect();
        MultiPoly::from_unsorted_distinct(ring, terms)
    }
}

/// An ideal given by generators, with reduced Groebner bases cached per
/// term ordering.
pub struct Ideal<F: Field> {
    ring: Arc<PolyRing<F>>,
    gens: Vec<MultiPoly<F>>,
    cache: Mutex<FxHashMap<TermOrder, Arc<ReducedGb<F>>>>,
}

impl<F: Field> Clone for Ideal<F> {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            cache: Mutex::new(self.cache.lock().unwrap().clone()),
        }
    }
}

impl<F: Field> fmt::Debug for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "Ideal{v:?}")
    }
}

impl<F: Field> Ideal<F> {
    pub fn new(ring: &Arc<PolyRing<F>>, gens: Vec<MultiPoly<F>>) -> Self {
        let gens = gens
            .into_iter()
            .filter(|g| !g.is_zero())
            .map(|g| if Arc::ptr_eq(g.ring(), ring) { g } else { g.to_ring(ring) })
            .collect();
        Ideal {
            ring: ring.clone(),
            gens,
            cache: Mutex::new(FxHashMap::default()),
        }
    }

    /// Ideal whose generators are a known reduced basis for `gb.order()`.
    pub fn from_gb(ring: &Arc<PolyRing<F>>, gb: ReducedGb<F>) -> Self {
        let gens = gb.elems.iter().map(|g| g.to_ring(ring)).collect();
        let ideal = Ideal {
            ring: ring.clone(),
            gens,
            cache: Mutex::new(FxHashMap::default()),
        };
        ideal.install_gb(gb);
        ideal
    }

    pub fn ring(&self) -> &Arc<PolyRing<F>> {
        &self.ring
    }

    pub fn gens(&self) -> &[MultiPoly<F>] {
        &self.gens
    }

    pub fn field(&self) -> &F {
        &self.ring.field
    }

    pub fn cached_gb(&self, order: TermOrder) -> Option<Arc<ReducedGb<F>>> {
        self.cache.lock().unwrap().get(&order).cloned()
    }

    /// Install a reduced basis computed elsewhere (trusted).
    pub fn install_gb(&self, gb: ReducedGb<F>) {
        self.cache.lock().unwrap().insert(gb.order(), Arc::new(gb));
    }

    /// Reduced basis for the ring's own ordering.
    pub fn gb(&self) -> Arc<ReducedGb<F>> {
        self.gb_for(self.ring.order)
    }

    pub fn gb_for(&self, order: TermOrder) -> Arc<ReducedGb<F>> {
        if let Some(gb) = self.cached_gb(order) {
            return gb;
        }
        let ring = if order == self.ring.order {
            self.ring.clone()
        } else {
            self.ring.with_order(order)
        };
        let elems = buchberger(&ring, &self.gens);
        let gb = Arc::new(ReducedGb::from_reduced(&ring, elems));
        self.cache.lock().unwrap().entry(order).or_insert(gb).clone()
    }

    pub fn normal_form(&self, f: &MultiPoly<F>) -> MultiPoly<F> {
        self.gb().normal_form(f)
    }

    pub fn contains(&self, f: &MultiPoly<F>) -> bool {
        self.gb().contains(f)
    }

    pub fn quotient_basis(&self) -> Result<QuotientBasis> {
        self.gb().quotient_basis()
    }

    /// `dim_K(P/I)`.
    pub fn quotient_dim(&self) -> Result<usize> {
        Ok(self.quotient_basis()?.len())
    }

    pub fn is_zero_dimensional(&self) -> bool {
        self.gb().is_zero_dimensional()
    }

    pub fn is_unit(&self) -> bool {
        self.gb().is_unit()
    }

    /// `I + <extra>`, reusing the cached basis for the ring ordering.
    pub fn add_generators(&self, extra: &[MultiPoly<F>]) -> Self {
        let mut gens = self.gens.clone();
        gens.extend(extra.iter().filter(|g| !g.is_zero()).cloned());
        let out = Ideal::new(&self.ring, gens);
        if let Some(gb) = self.cached_gb(self.ring.order) {
            let elems = extend_basis(gb.ring(), &gb.elems, extra);
            out.install_gb(ReducedGb::from_reduced(gb.ring(), elems));
        }
        out
    }

    /// Same ideal, equality of reduced bases for the ring ordering.
    pub fn same_ideal(&self, other: &Self) -> bool {
        self.gb().elems == other.gb().elems
    }

    /// `I ∩ K[remaining variables]`. The result lives in a ring over the
    /// remaining variables (in their original order) with this ring's ordering.
    pub fn eliminate(&self, vars: &[usize]) -> Self {
        let n = self.ring.nvars();
        let elim: Vec<usize> = (0..n).filter(|i| vars.contains(i)).collect();
        let keep: Vec<usize> = (0..n).filter(|i| !vars.contains(i)).collect();
        let k = elim.len();
        // position of each old variable in the block ring
        let mut map = vec![0; n];
        for (pos, &i) in elim.iter().chain(&keep).enumerate() {
            map[i] = pos;
        }
        let names: Vec<String> = elim
            .iter()
            .chain(&keep)
            .map(|&i| self.ring.vars[i].clone())
            .collect();
        let block = PolyRing::from_names(self.ring.field.clone(), names, TermOrder::Block { front: k });
        let gens: Vec<MultiPoly<F>> = self.gens.iter().map(|g| g.embed(&block, &map)).collect();
        let gb = buchberger(&block, &gens);
        let target = PolyRing::from_names(
            self.ring.field.clone(),
            keep.iter().map(|&i| self.ring.vars[i].clone()).collect(),
            self.ring.order,
        );
        project_back(&block, gb, k, &target)
    }

    /// `I ∩ J`: the product when `I + J = <1>`, otherwise `t*I + (1-t)*J`
    /// with `t` eliminated.
    pub fn intersect(&self, other: &Self) -> Self {
        let a = self.basis_for_intersection();
        let b = other.basis_for_intersection();
        // comaximal ideals meet in their product, no elimination needed
        let sum: Vec<MultiPoly<F>> = a.iter().chain(&b).cloned().collect();
        if ReducedGb::from_reduced(&self.ring, buchberger(&self.ring, &sum)).is_unit() {
            let prod = a.iter().flat_map(|f| b.iter().map(move |g| f.mul(g))).collect();
            return Ideal::new(&self.ring, prod);
        }
        let n = self.ring.nvars();
        let mut names = vec![fresh_name(&self.ring.vars)];
        names.extend(self.ring.vars.iter().cloned());
        let block = PolyRing::from_names(self.ring.field.clone(), names, TermOrder::Block { front: 1 });
        let map: Vec<usize> = (1..=n).collect();
        let t = MultiPoly::var(&block, 0);
        let one_minus_t = MultiPoly::one(&block).sub(&t);
        let mut gens = Vec::new();
        for g in &a {
            gens.push(g.embed(&block, &map).mul(&t));
        }
        for g in &b {
            gens.push(g.embed(&block, &map).mul(&one_minus_t));
        }
        let gb = buchberger(&block, &gens);
        project_back(&block, gb, 1, &self.ring)
    }

    fn basis_for_intersection(&self) -> Vec<MultiPoly<F>> {
        match self.cached_gb(self.ring.order) {
            Some(gb) => gb.elems.clone(),
            None => self.gens.clone(),
        }
    }
}

fn fresh_name(vars: &[String]) -> String {
    let mut name = "t_".to_string();
    while vars.contains(&name) {
        name.push('_');
    }
    name
}

/// Keep the block-basis elements free of the first `k` variables and move
/// them into `target` (whose variables are the remaining ones, in order).
fn project_back<F: Field>(
    block: &Arc<PolyRing<F>>,
    gb: Vec<MultiPoly<F>>,
    k: usize,
    target: &Arc<PolyRing<F>>,
) -> Ideal<F> {
    let m = block.nvars() - k;
    let kept: Vec<MultiPoly<F>> = gb
        .into_iter()
        .filter(|g| g.terms().iter().all(|(pp, _)| pp.exps()[..k].iter().all(|&e| e == 0)))
        .map(|g| {
            let terms = g
                .terms()
                .iter()
                .map(|(pp, c)| (PowerProduct::from_exps(&pp.exps()[k..]), c.clone()))
                .collect();
            MultiPoly::from_unsorted_distinct(target, terms)
        })
        .collect();
    debug_assert!(kept.iter().all(|g| g.ring().nvars() == m));
    let ideal = Ideal::new(target, kept.clone());
    // Degrevlex on the back block is the target ordering in that case, so the
    // kept elements are already its reduced basis.
    if target.order == TermOrder::DegRevLex {
        let mut elems = kept;
        elems.sort_by(|a, b| target.order.compare(a.lpp().unwrap(), b.lpp().unwrap()));
        ideal.install_gb(ReducedGb::from_reduced(target, elems));
    }
    ideal
}

impl Ideal<Rationals> {
    /// Least common multiple of the denominators in the reduced basis.
    pub fn den_sigma(&self, order: TermOrder) -> Result<BigInt> {
        let gb = self.gb_for(order);
        if gb.is_zero_ideal() {
            return Err(Error::ZeroIdeal);
        }
        Ok(gb.elems.iter().fold(BigInt::one(), |acc, g| acc.lcm(&g.den())))
    }

    /// The ideal over `F_p` generated by the image of the reduced basis, which
    /// is installed as that ideal's reduced basis without recomputation.
    pub fn reduce_mod_p(&self, order: TermOrder, p: u64) -> Result<Ideal<PrimeField>> {
        let fp = PrimeField::new(p)?;
        let gb = self.gb_for(order);
        let gb_ring = gb.ring().with_field(fp);
        let images = gb
            .elems
            .iter()
            .map(|g| g.map_mod_p(&gb_ring))
            .collect::<Result<Vec<_>>>()?;
        let ring = self.ring.with_field(fp);
        Ok(Ideal::from_gb(&ring, ReducedGb::from_reduced(&gb_ring, images)))
    }
}
