//! Ideal-level operations: sum, product, power, intersection, colon,
//! membership, and equality, with a monomial fast path mirroring the
//! lcm/divisibility lemmas for monomial ideals and a general route through
//! the Groebner engine.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_traits::One;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{buchberger_in, eliminate_trailing, GroebnerBasis};
use crate::monomial::{Monomial, MonomialOrder};
use crate::nakayama;
use crate::poly::Polynomial;
use crate::ring::RingSpec;

struct IdealCache<F: Field> {
    gb: Mutex<BTreeMap<MonomialOrder, Arc<GroebnerBasis<F>>>>,
    powers: Mutex<BTreeMap<u32, Ideal<F>>>,
}

impl<F: Field> IdealCache<F> {
    fn new() -> Self {
        IdealCache {
            gb: Mutex::new(BTreeMap::new()),
            powers: Mutex::new(BTreeMap::new()),
        }
    }
}

/// An ideal of the ambient ring, given by a generator list. Equality is
/// semantic (mutual containment), not syntactic. Groebner bases and powers
/// are cached behind a lock so shared ideals stay cheap to reuse.
#[derive(Clone)]
pub struct Ideal<F: Field> {
    ring: Arc<RingSpec<F>>,
    gens: Vec<Polynomial<F>>,
    cache: Arc<IdealCache<F>>,
}

impl<F: Field> fmt::Debug for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<F: Field> fmt::Display for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self
            .normalized_gens()
            .iter()
            .map(|g| g.to_string())
            .collect();
        if gens.is_empty() {
            write!(f, "(0)")
        } else {
            write!(f, "({})", gens.join(", "))
        }
    }
}

impl<F: Field> Ideal<F> {
    /// Zero polynomials among the generators are dropped.
    pub fn new(ring: Arc<RingSpec<F>>, gens: Vec<Polynomial<F>>) -> Result<Self> {
        for g in &gens {
            if !(Arc::ptr_eq(g.ring(), &ring) || **g.ring() == *ring) {
                return Err(Error::RingMismatch("generator from a different ring".into()));
            }
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal {
            ring,
            gens,
            cache: Arc::new(IdealCache::new()),
        })
    }

    pub fn zero(ring: Arc<RingSpec<F>>) -> Self {
        Ideal {
            ring,
            gens: Vec::new(),
            cache: Arc::new(IdealCache::new()),
        }
    }

    pub fn unit(ring: Arc<RingSpec<F>>) -> Self {
        let one = Polynomial::one(ring.clone());
        Ideal {
            ring,
            gens: vec![one],
            cache: Arc::new(IdealCache::new()),
        }
    }

    pub fn ring(&self) -> &Arc<RingSpec<F>> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    /// Generators normalized and sorted for deterministic output.
    pub fn normalized_gens(&self) -> Vec<Polynomial<F>> {
        let mut gens: Vec<Polynomial<F>> = self
            .gens
            .iter()
            .map(|g| g.normalize(MonomialOrder::DegRevLex))
            .collect();
        gens.sort_by(gen_sort_cmp);
        gens.dedup();
        gens
    }

    pub fn groebner_basis(&self, order: MonomialOrder) -> Result<Arc<GroebnerBasis<F>>> {
        {
            let cache = self.cache.gb.lock().unwrap();
            if let Some(gb) = cache.get(&order) {
                return Ok(gb.clone());
            }
        }
        let gb = Arc::new(buchberger_in(&self.ring, &self.gens, order)?);
        self.cache.gb.lock().unwrap().insert(order, gb.clone());
        Ok(gb)
    }

    /// All generators (and quotient relations) are single terms, and the
    /// ring allows the monomial shortcuts.
    fn monomial_route(&self) -> Option<Vec<Monomial>> {
        if !self.ring.fast_path_enabled() || !self.ring.relations_monomial() {
            return None;
        }
        let mut monos = Vec::with_capacity(self.gens.len());
        for g in &self.gens {
            if !g.is_monomial() {
                return None;
            }
            monos.push(g.terms().keys().next().unwrap().clone());
        }
        for r in self.ring.relations_raw() {
            monos.push(r.keys().next().unwrap().clone());
        }
        Some(monos)
    }

    fn check_same_ring(&self, other: &Ideal<F>, op: &str) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!("`{op}` on ideals from different rings")))
        }
    }

    pub fn member(&self, f: &Polynomial<F>) -> Result<bool> {
        if !(Arc::ptr_eq(f.ring(), &self.ring) || **f.ring() == *self.ring) {
            return Err(Error::RingMismatch("membership test across rings".into()));
        }
        if f.is_zero() {
            return Ok(true);
        }
        if let Some(monos) = self.monomial_route() {
            // A polynomial lies in a monomial ideal iff each of its monomials
            // is a multiple of some generator.
            return Ok(f
                .terms()
                .keys()
                .all(|m| monos.iter().any(|g| g.divides(m))));
        }
        Ok(self.groebner_basis(MonomialOrder::DegRevLex)?.is_member(f))
    }

    pub fn contains(&self, other: &Ideal<F>) -> Result<bool> {
        self.check_same_ring(other, "contains")?;
        for g in &other.gens {
            if !self.member(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equal(&self, other: &Ideal<F>) -> Result<bool> {
        Ok(self.contains(other)? && other.contains(self)?)
    }

    pub fn is_unit(&self) -> Result<bool> {
        self.member(&Polynomial::one(self.ring.clone()))
    }

    pub fn sum(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.check_same_ring(other, "sum")?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.clone());
        Ok(Ideal {
            ring: self.ring.clone(),
            gens: minimalize_gens(&self.ring, gens)?,
            cache: Arc::new(IdealCache::new()),
        })
    }

    pub fn product(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.check_same_ring(other, "product")?;
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.checked_mul(b)?);
            }
        }
        Ok(Ideal {
            ring: self.ring.clone(),
            gens: minimalize_gens(&self.ring, gens)?,
            cache: Arc::new(IdealCache::new()),
        })
    }

    /// `power(A, 0)` is the unit ideal; powers are cached and built
    /// incrementally, `A^n = A^(n-1) * A`.
    pub fn power(&self, n: u32) -> Result<Ideal<F>> {
        if n == 0 {
            return Ok(Ideal::unit(self.ring.clone()));
        }
        if n == 1 {
            return Ok(self.clone());
        }
        {
            let cache = self.cache.powers.lock().unwrap();
            if let Some(p) = cache.get(&n) {
                return Ok(p.clone());
            }
        }
        let prev = self.power(n - 1)?;
        let result = prev.product(self)?;
        self.cache.powers.lock().unwrap().insert(n, result.clone());
        Ok(result)
    }

    pub fn intersect(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.check_same_ring(other, "intersect")?;
        if let (Some(a), Some(b)) = (self.monomial_route(), other.monomial_route()) {
            let mut gens = Vec::new();
            for ma in &a {
                for mb in &b {
                    gens.push(Polynomial::monomial(self.ring.clone(), ma.lcm(mb), F::one()));
                }
            }
            return Ok(Ideal {
                ring: self.ring.clone(),
                gens: minimalize_gens(&self.ring, gens)?,
                cache: Arc::new(IdealCache::new()),
            });
        }
        let mut left = self.gens.clone();
        left.extend(self.ring.relation_polys());
        let mut right = other.gens.clone();
        right.extend(self.ring.relation_polys());
        let raw = intersect_plain(&self.ring, &left, &right)?;
        let gens: Vec<Polynomial<F>> = raw
            .into_iter()
            .map(|t| Polynomial::from_terms(self.ring.clone(), t.into_terms()))
            .filter(|p| !p.is_zero())
            .collect();
        Ok(Ideal {
            ring: self.ring.clone(),
            gens: minimalize_gens(&self.ring, gens)?,
            cache: Arc::new(IdealCache::new()),
        })
    }

    /// Colon ideal `(self : f)`, computed through `(self ∩ (f)) / f` on the
    /// general route and through the lcm formula for monomial ideals.
    pub fn colon(&self, f: &Polynomial<F>) -> Result<Ideal<F>> {
        if f.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        if !(Arc::ptr_eq(f.ring(), &self.ring) || **f.ring() == *self.ring) {
            return Err(Error::RingMismatch("colon across rings".into()));
        }
        if let Some(monos) = self.monomial_route() {
            if f.is_monomial() {
                let fm = f.terms().keys().next().unwrap().clone();
                let gens: Vec<Polynomial<F>> = monos
                    .iter()
                    .map(|g| {
                        let q = fm.try_div(&g.lcm(&fm)).expect("lcm divisible by factor");
                        Polynomial::monomial(self.ring.clone(), q, F::one())
                    })
                    .collect();
                return Ok(Ideal {
                    ring: self.ring.clone(),
                    gens: minimalize_gens(&self.ring, gens)?,
                    cache: Arc::new(IdealCache::new()),
                });
            }
        }
        // (A + rel) ∩ (f) in the ambient polynomial ring; every generator of
        // the intersection is exactly divisible by f there.
        let mut left = self.gens.clone();
        left.extend(self.ring.relation_polys());
        let inter = intersect_plain(&self.ring, &left, std::slice::from_ref(f))?;
        let mut gens = Vec::new();
        for h in inter {
            let q = h
                .exact_div_plain(f)
                .expect("intersection generator not divisible by the colon factor");
            let q = Polynomial::from_terms(self.ring.clone(), q.into_terms());
            if !q.is_zero() {
                gens.push(q);
            }
        }
        Ok(Ideal {
            ring: self.ring.clone(),
            gens: minimalize_gens(&self.ring, gens)?,
            cache: Arc::new(IdealCache::new()),
        })
    }

    /// `(self : other) = ∩ (self : g)` over the generators of `other`.
    pub fn colon_ideal(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.check_same_ring(other, "colon")?;
        if other.is_zero_ideal() {
            return Ok(Ideal::unit(self.ring.clone()));
        }
        let mut acc: Option<Ideal<F>> = None;
        for g in &other.gens {
            let c = self.colon(g)?;
            acc = Some(match acc {
                None => c,
                Some(prev) => prev.intersect(&c)?,
            });
        }
        Ok(acc.unwrap())
    }

    /// Minimal homogeneous generators (graded Nakayama).
    pub fn minimal_generators(&self) -> Result<Vec<Polynomial<F>>> {
        nakayama::minimal_generators(self)
    }

    /// Minimal generators of `self / denominator` as a module over the ring,
    /// with the containment `denominator ⊆ self` verified eagerly.
    pub fn quotient_min_gens(&self, denominator: &Ideal<F>) -> Result<nakayama::QuotientMinGens<F>> {
        nakayama::quotient_min_gens(self, denominator)
    }
}

pub(crate) fn gen_sort_cmp<F: Field>(a: &Polynomial<F>, b: &Polynomial<F>) -> std::cmp::Ordering {
    let da = a.weighted_degree();
    let db = b.weighted_degree();
    da.cmp(&db)
        .then_with(|| {
            let la = a.leading(MonomialOrder::Lex).map(|(m, _)| m.clone());
            let lb = b.leading(MonomialOrder::Lex).map(|(m, _)| m.clone());
            lb.cmp(&la)
        })
        .then_with(|| a.to_string().cmp(&b.to_string()))
}

/// Drop redundant generators: divisibility filtering for single-term lists,
/// graded Nakayama when every generator is homogeneous, plain deduplication
/// otherwise.
pub(crate) fn minimalize_gens<F: Field>(
    ring: &Arc<RingSpec<F>>,
    gens: Vec<Polynomial<F>>,
) -> Result<Vec<Polynomial<F>>> {
    let mut gens: Vec<Polynomial<F>> = gens.into_iter().filter(|g| !g.is_zero()).collect();
    if gens.is_empty() {
        return Ok(gens);
    }
    if gens.iter().any(|g| g.is_constant()) {
        return Ok(vec![Polynomial::one(ring.clone())]);
    }
    gens.sort_by(gen_sort_cmp);
    if gens.iter().all(|g| g.is_monomial()) {
        let mut kept: Vec<Polynomial<F>> = Vec::new();
        let mut kept_monos: Vec<Monomial> = Vec::new();
        for g in gens {
            let m = g.terms().keys().next().unwrap().clone();
            if !kept_monos.iter().any(|k| k.divides(&m)) {
                kept.push(Polynomial::monomial(ring.clone(), m.clone(), F::one()));
                kept_monos.push(m);
            }
        }
        return Ok(kept);
    }
    if gens.iter().all(|g| g.homogeneous_degree().is_some()) {
        let candidates: Vec<Vec<Polynomial<F>>> = gens.iter().map(|g| vec![g.clone()]).collect();
        let kept = nakayama::minimalize_vectors(ring, &[0], &candidates, &[])?;
        return Ok(kept.into_iter().map(|i| gens[i].clone()).collect());
    }
    gens.dedup();
    Ok(gens)
}

/// Intersection of two ideals of the ambient polynomial ring given by the
/// literal generator lists (no quotient-relation bookkeeping): eliminate `t`
/// from `t*left + (1-t)*right`. Returns raw polynomials of the base ring.
fn intersect_plain<F: Field>(
    ring: &Arc<RingSpec<F>>,
    left: &[Polynomial<F>],
    right: &[Polynomial<F>],
) -> Result<Vec<Polynomial<F>>> {
    let n = ring.nvars();
    let mut aux_name = "t".to_string();
    while ring.var_index(&aux_name).is_some() {
        aux_name.push('0');
    }
    let mut vars: Vec<&str> = ring.vars().iter().map(|s| s.as_str()).collect();
    vars.push(&aux_name);
    let mut weights = ring.weights().to_vec();
    weights.push(1);
    let aux = RingSpec::<F>::with_weights(&vars, &weights, ring.characteristic())?;

    let lift = |p: &Polynomial<F>| -> Polynomial<F> {
        let terms = p
            .terms()
            .iter()
            .map(|(m, c)| {
                let mut e = m.exponents().to_vec();
                e.push(0);
                (Monomial::from_exponents(e), c.clone())
            })
            .collect();
        Polynomial::from_raw_terms(aux.clone(), terms)
    };
    let t = Polynomial::var(aux.clone(), n);
    let one_minus_t = Polynomial::one(aux.clone()).sub_raw(&t);

    let mut gens = Vec::new();
    for p in left {
        gens.push(t.mul_plain(&lift(p)));
    }
    for p in right {
        gens.push(one_minus_t.mul_plain(&lift(p)));
    }
    let eliminated = eliminate_trailing(&aux, &gens, n)?;
    Ok(eliminated
        .into_iter()
        .map(|p| {
            let terms = p
                .terms()
                .iter()
                .map(|(m, c)| {
                    let mut e = m.exponents().to_vec();
                    e.pop();
                    (Monomial::from_exponents(e), c.clone())
                })
                .collect();
            Polynomial::from_raw_terms(ring.clone(), terms)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;
    use num::BigRational;

    type Q = BigRational;

    fn ring2() -> Arc<RingSpec<Q>> {
        RingSpec::new(&["a1", "a2"], 0).unwrap()
    }

    fn p(r: &Arc<RingSpec<Q>>, s: &str) -> Polynomial<Q> {
        parse(s, r.clone()).unwrap()
    }

    fn ideal(r: &Arc<RingSpec<Q>>, gens: &[&str]) -> Ideal<Q> {
        Ideal::new(r.clone(), gens.iter().map(|s| p(r, s)).collect()).unwrap()
    }

    #[test]
    fn square_of_the_classic_ideal() {
        let r = ring2();
        let i = ideal(&r, &["a1^2", "a2^2", "a1*a2"]);
        let sq = i.power(2).unwrap();
        let expected = ideal(&r, &["a1^4", "a1^3*a2", "a1^2*a2^2", "a1*a2^3", "a2^4"]);
        assert!(sq.equal(&expected).unwrap());
        assert_eq!(sq.gens().len(), 5);
        assert!(i.power(1).unwrap().equal(&i).unwrap());
    }

    #[test]
    fn product_of_principal_ideals() {
        let r = ring2();
        let prod = ideal(&r, &["a1"]).product(&ideal(&r, &["a2"])).unwrap();
        assert!(prod.equal(&ideal(&r, &["a1*a2"])).unwrap());
    }

    #[test]
    fn intersection_examples() {
        let r = ring2();
        let i = ideal(&r, &["a1"]).intersect(&ideal(&r, &["a2"])).unwrap();
        assert!(i.equal(&ideal(&r, &["a1*a2"])).unwrap());

        let j = ideal(&r, &["a1^2", "a2"])
            .intersect(&ideal(&r, &["a2^2", "a1"]))
            .unwrap();
        assert!(j.equal(&ideal(&r, &["a1^2", "a1*a2", "a2^2"])).unwrap());
    }

    #[test]
    fn intersection_brute_force_oracle() {
        // Independent check of (a1^2, a2) ∩ (a2^2, a1) by enumerating all
        // monomials of degree at most 4.
        let r = ring2();
        let a = ideal(&r, &["a1^2", "a2"]);
        let b = ideal(&r, &["a2^2", "a1"]);
        let both = a.intersect(&b).unwrap();
        for d in 0..=4u64 {
            for m in crate::monomial::monomials_of_weighted_degree(2, &[1, 1], d) {
                let f = Polynomial::monomial(r.clone(), m, Q::one());
                let in_both = a.member(&f).unwrap() && b.member(&f).unwrap();
                assert_eq!(both.member(&f).unwrap(), in_both, "monomial {f}");
            }
        }
    }

    #[test]
    fn colon_lcm_formula() {
        let r = ring2();
        // (a1^4, a2^4) : a1*a2^3 = (a1^3, a2)
        let c = ideal(&r, &["a1^4", "a2^4"]).colon(&p(&r, "a1*a2^3")).unwrap();
        assert!(c.equal(&ideal(&r, &["a1^3", "a2"])).unwrap());

        // (J*I : y^2) at p = 4 equals (a1^2, a2).
        let j = ideal(&r, &["a1^4", "a2^4"]);
        let i = ideal(&r, &["a1^4", "a2^4", "a1*a2^3"]);
        let ji = j.product(&i).unwrap();
        let c2 = ji.colon(&p(&r, "(a1*a2^3)^2")).unwrap();
        assert!(c2.equal(&ideal(&r, &["a1^2", "a2"])).unwrap());

        // (A : 1) = A.
        let a = ideal(&r, &["a1^2", "a2^3"]);
        assert!(a.colon(&p(&r, "1")).unwrap().equal(&a).unwrap());

        // colon by zero is an error
        assert!(a.colon(&Polynomial::zero(r.clone())).is_err());
    }

    #[test]
    fn membership_and_equality() {
        let r = ring2();
        // a1*a2^{p-1} not in (a1^p, a2^p) for p = 3.
        let j = ideal(&r, &["a1^3", "a2^3"]);
        assert!(!j.member(&p(&r, "a1*a2^2")).unwrap());

        assert!(ideal(&r, &["a1", "a2"])
            .equal(&ideal(&r, &["a2", "a1 + a2"]))
            .unwrap());

        // y^p in J*I^{p-1} for p = 3.
        let i = ideal(&r, &["a1^3", "a2^3", "a1*a2^2"]);
        let ji2 = j.product(&i.power(2).unwrap()).unwrap();
        assert!(ji2.member(&p(&r, "(a1*a2^2)^3")).unwrap());
    }

    #[test]
    fn fast_and_general_paths_agree() {
        let r = ring2();
        let slow = r.without_fast_path();
        let cases: &[(&[&str], &[&str])] = &[
            (&["a1^2", "a2"], &["a2^2", "a1"]),
            (&["a1^3", "a2^3"], &["a1*a2^2"]),
            (&["a1^4", "a1^2*a2^2"], &["a2^4", "a1^3*a2"]),
        ];
        for (ga, gb) in cases {
            let fa = ideal(&r, ga);
            let fb = ideal(&r, gb);
            let sa = Ideal::new(slow.clone(), ga.iter().map(|s| parse(s, slow.clone()).unwrap()).collect()).unwrap();
            let sb = Ideal::new(slow.clone(), gb.iter().map(|s| parse(s, slow.clone()).unwrap()).collect()).unwrap();
            let fast = fa.intersect(&fb).unwrap();
            let gen = sa.intersect(&sb).unwrap();
            let fast_strings: Vec<String> = fast.normalized_gens().iter().map(|g| g.to_string()).collect();
            let gen_strings: Vec<String> = gen.normalized_gens().iter().map(|g| g.to_string()).collect();
            assert_eq!(fast_strings, gen_strings);
        }
    }

    #[test]
    fn quotient_ring_colon_and_annihilator() {
        let free = RingSpec::<Q>::new(&["x", "y"], 0).unwrap();
        let rels = vec![parse("x*y", free.clone()).unwrap(), parse("y^2", free.clone()).unwrap()];
        let q = free.with_relations(rels).unwrap();
        let x = parse("x", q.clone()).unwrap();
        // (0 : x) = (y) in k[x,y]/(xy, y^2).
        let ann = Ideal::zero(q.clone()).colon(&x).unwrap();
        let y_ideal = Ideal::new(q.clone(), vec![parse("y", q.clone()).unwrap()]).unwrap();
        assert!(ann.equal(&y_ideal).unwrap());
        // (y) ∩ (x) = 0 in the quotient.
        let x_ideal = Ideal::new(q.clone(), vec![x]).unwrap();
        let inter = y_ideal.intersect(&x_ideal).unwrap();
        assert!(inter.is_zero_ideal());
    }
}
