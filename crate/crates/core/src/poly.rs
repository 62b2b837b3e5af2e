//! Exact multivariate polynomials over a [`Field`], attached to a ring
//! context. Values are immutable; in quotient rings every stored polynomial
//! is kept in normal form against the reduced basis of the relations.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::{Monomial, MonomialOrder};
use crate::ring::{RingSpec, TermMap};

// ---------------------------------------------------------------------------
// Raw term-map arithmetic (ring-agnostic, no quotient reduction).
// ---------------------------------------------------------------------------

pub(crate) fn raw_add_term<F: Field>(map: &mut TermMap<F>, mono: Monomial, coeff: F) {
    if coeff.is_zero() {
        return;
    }
    match map.entry(mono) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(coeff);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let sum = e.get().clone() + coeff;
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
}

pub(crate) fn raw_add_scaled<F: Field>(
    acc: &mut TermMap<F>,
    other: &TermMap<F>,
    mono: &Monomial,
    coeff: &F,
) {
    for (m, c) in other {
        raw_add_term(acc, m.mul(mono), c.clone() * coeff.clone());
    }
}

pub(crate) fn raw_mul<F: Field>(a: &TermMap<F>, b: &TermMap<F>) -> TermMap<F> {
    let mut out = TermMap::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            raw_add_term(&mut out, ma.mul(mb), ca.clone() * cb.clone());
        }
    }
    out
}

pub(crate) fn raw_leading<'a, F: Field>(
    map: &'a TermMap<F>,
    order: MonomialOrder,
) -> Option<(&'a Monomial, &'a F)> {
    map.iter()
        .max_by(|(a, _), (b, _)| order.cmp(a, b))
        .map(|(m, c)| (m, c))
}

/// Full normal form of `map` against `basis` (no cofactor tracking).
pub(crate) fn raw_reduce<F: Field>(
    map: &TermMap<F>,
    basis: &[TermMap<F>],
    order: MonomialOrder,
) -> TermMap<F> {
    if basis.is_empty() || map.is_empty() {
        return map.clone();
    }
    let leads: Vec<(&Monomial, &F)> = basis
        .iter()
        .map(|b| raw_leading(b, order).expect("zero basis element"))
        .collect();
    let mut rem = map.clone();
    let mut out = TermMap::new();
    while let Some((lm, lc)) = raw_leading(&rem, order) {
        let lm = lm.clone();
        let lc = lc.clone();
        let mut reduced = false;
        for (idx, (blm, blc)) in leads.iter().enumerate() {
            if let Some(q) = blm.try_div(&lm) {
                let factor = lc.div_exact(blc);
                let mut scaled = TermMap::new();
                raw_add_scaled(&mut scaled, &basis[idx], &q, &factor);
                for (m, c) in scaled {
                    raw_add_term(&mut rem, m, -c);
                }
                reduced = true;
                break;
            }
        }
        if !reduced {
            rem.remove(&lm);
            out.insert(lm, lc);
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Polynomial
// ---------------------------------------------------------------------------

#[derive(Clone)]
pub struct Polynomial<F: Field> {
    ring: Arc<RingSpec<F>>,
    terms: TermMap<F>,
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        self.same_ring(other) && self.terms == other.terms
    }
}
impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> Polynomial<F> {
    /// Wrap raw terms without quotient reduction (coefficients are bound and
    /// zeros pruned). Engine-internal values and the quotient relations
    /// themselves are built this way.
    pub(crate) fn from_raw_terms(ring: Arc<RingSpec<F>>, terms: TermMap<F>) -> Self {
        let ch = ring.characteristic();
        let mut clean = TermMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), ring.nvars());
            let c = c.bind(ch);
            if !c.is_zero() {
                clean.insert(m, c);
            }
        }
        Polynomial { ring, terms: clean }
    }

    /// Public constructor: binds coefficients and reduces to normal form
    /// against the quotient relations.
    pub fn from_terms(ring: Arc<RingSpec<F>>, terms: TermMap<F>) -> Self {
        let p = Self::from_raw_terms(ring, terms);
        p.quotient_reduce()
    }

    fn quotient_reduce(self) -> Self {
        if !self.ring.is_quotient() || self.terms.is_empty() {
            return self;
        }
        let basis = self.ring.rel_basis();
        let reduced = raw_reduce(&self.terms, basis, MonomialOrder::DegRevLex);
        Polynomial {
            ring: self.ring,
            terms: reduced,
        }
    }

    pub fn zero(ring: Arc<RingSpec<F>>) -> Self {
        Polynomial {
            ring,
            terms: TermMap::new(),
        }
    }

    pub fn one(ring: Arc<RingSpec<F>>) -> Self {
        Self::constant(ring, F::one())
    }

    pub fn constant(ring: Arc<RingSpec<F>>, c: F) -> Self {
        let nvars = ring.nvars();
        let mut terms = TermMap::new();
        let c = c.bind(ring.characteristic());
        if !c.is_zero() {
            terms.insert(Monomial::one(nvars), c);
        }
        Polynomial { ring, terms }
    }

    pub fn var(ring: Arc<RingSpec<F>>, index: usize) -> Self {
        let nvars = ring.nvars();
        Self::from_terms(
            ring,
            [(Monomial::var(nvars, index), F::one())].into_iter().collect(),
        )
    }

    pub fn monomial(ring: Arc<RingSpec<F>>, mono: Monomial, coeff: F) -> Self {
        Self::from_terms(ring, [(mono, coeff)].into_iter().collect())
    }

    pub fn ring(&self) -> &Arc<RingSpec<F>> {
        &self.ring
    }

    pub fn terms(&self) -> &TermMap<F> {
        &self.terms
    }

    pub(crate) fn into_terms(self) -> TermMap<F> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map(|(m, c)| m.is_one() && c.is_one())
                .unwrap_or(false)
    }

    /// Single-term polynomial (a scalar multiple of one monomial).
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one())
    }

    pub fn same_ring(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring
    }

    fn check_ring(&self, other: &Self, op: &str) -> Result<()> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!(
                "`{op}` on polynomials from different rings"
            )))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other, "add")?;
        Ok(self.add_raw(other))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other, "sub")?;
        Ok(self.add_raw(&other.neg_raw()))
    }

    /// Product, reduced to normal form in quotient rings.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other, "mul")?;
        Ok(self.mul_plain(other).quotient_reduce())
    }

    pub(crate) fn add_raw(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            raw_add_term(&mut terms, m.clone(), c.clone());
        }
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub(crate) fn sub_raw(&self, other: &Self) -> Self {
        self.add_raw(&other.neg_raw())
    }

    pub(crate) fn neg_raw(&self) -> Self {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    /// Product in the ambient polynomial ring, without quotient reduction.
    pub(crate) fn mul_plain(&self, other: &Self) -> Self {
        Polynomial {
            ring: self.ring.clone(),
            terms: raw_mul(&self.terms, &other.terms),
        }
    }

    pub(crate) fn mul_term(&self, mono: &Monomial, coeff: &F) -> Self {
        let mut terms = TermMap::new();
        raw_add_scaled(&mut terms, &self.terms, mono, coeff);
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.ring.clone());
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn div_scalar(&self, c: &F) -> Self {
        self.scale(&c.inv())
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one(self.ring.clone());
        for _ in 0..n {
            out = out.checked_mul(self).expect("same ring");
        }
        out
    }

    pub fn leading(&self, order: MonomialOrder) -> Option<(&Monomial, &F)> {
        raw_leading(&self.terms, order)
    }

    /// Total degree (unweighted) of the polynomial, 0 for the zero polynomial.
    pub fn degree(&self) -> u64 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn weighted_degree(&self) -> u64 {
        let w = self.ring.weights();
        self.terms
            .keys()
            .map(|m| m.weighted_degree(w))
            .max()
            .unwrap_or(0)
    }

    /// `Some(d)` when all terms share weighted degree `d` (zero is
    /// homogeneous of degree 0 by convention).
    pub fn homogeneous_degree(&self) -> Option<u64> {
        let w = self.ring.weights();
        let mut it = self.terms.keys();
        let first = match it.next() {
            None => return Some(0),
            Some(m) => m.weighted_degree(w),
        };
        for m in it {
            if m.weighted_degree(w) != first {
                return None;
            }
        }
        Some(first)
    }

    /// Coefficient of the constant monomial.
    pub fn constant_coeff(&self) -> F {
        self.terms
            .get(&Monomial::one(self.ring.nvars()))
            .cloned()
            .unwrap_or_else(F::zero)
    }

    /// Evaluate by sending variable `i` to `images[i]`. All images must live
    /// in one common ring; products are reduced there.
    pub fn substitute(&self, images: &[Polynomial<F>]) -> Result<Polynomial<F>> {
        if images.len() != self.ring.nvars() {
            let missing = self
                .ring
                .vars()
                .get(images.len())
                .cloned()
                .unwrap_or_else(|| "?".into());
            return Err(Error::MissingImage(missing));
        }
        let target = images
            .first()
            .map(|p| p.ring().clone())
            .ok_or_else(|| Error::MissingImage("?".into()))?;
        for img in images {
            if !(Arc::ptr_eq(img.ring(), &target) || **img.ring() == *target) {
                return Err(Error::RingMismatch(
                    "substitution images live in different rings".into(),
                ));
            }
        }
        // Memoize powers of each image.
        let mut powers: Vec<Vec<Polynomial<F>>> =
            images.iter().map(|p| vec![Polynomial::one(target.clone()), p.clone()]).collect();
        let power = |var: usize, e: u32, powers: &mut Vec<Vec<Polynomial<F>>>| {
            while powers[var].len() <= e as usize {
                let next = powers[var]
                    .last()
                    .unwrap()
                    .checked_mul(&images[var])
                    .expect("same ring");
                powers[var].push(next);
            }
            powers[var][e as usize].clone()
        };
        let mut acc = Polynomial::zero(target.clone());
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(target.clone(), c.clone());
            for (var, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    term = term.checked_mul(&power(var, e, &mut powers))?;
                }
            }
            acc = acc.checked_add(&term)?;
        }
        Ok(acc)
    }

    /// Exact division in the ambient polynomial ring: `self / divisor` when
    /// the remainder of the division is zero.
    pub(crate) fn exact_div_plain(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let order = MonomialOrder::DegRevLex;
        let (dlm, dlc) = divisor.leading(order).unwrap();
        let mut rem = self.terms.clone();
        let mut quot = TermMap::new();
        while let Some((lm, lc)) = raw_leading(&rem, order) {
            let q = dlm.try_div(lm)?;
            let factor = lc.div_exact(dlc);
            let mut scaled = TermMap::new();
            raw_add_scaled(&mut scaled, &divisor.terms, &q, &factor);
            for (m, c) in scaled {
                raw_add_term(&mut rem, m, -c);
            }
            raw_add_term(&mut quot, q, factor);
        }
        Some(Polynomial {
            ring: self.ring.clone(),
            terms: quot,
        })
    }

    /// Canonical scaling: content one and canonical leading coefficient
    /// under `order` (positive over the rationals, monic over a prime field).
    pub fn normalize(&self, order: MonomialOrder) -> Self {
        match self.leading(order) {
            None => self.clone(),
            Some((_, lc)) => {
                let scale = F::canonical_scale(lc, self.terms.values());
                self.div_scalar(&scale)
            }
        }
    }

    /// Terms sorted descending under `cmp`.
    pub fn sorted_terms_by<C>(&self, mut cmp: C) -> Vec<(&Monomial, &F)>
    where
        C: FnMut(&Monomial, &Monomial) -> Ordering,
    {
        let mut v: Vec<(&Monomial, &F)> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| cmp(b, a));
        v
    }

    pub fn format_with<C>(&self, cmp: C) -> String
    where
        C: FnMut(&Monomial, &Monomial) -> Ordering,
    {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let vars = self.ring.vars();
        let mut out = String::new();
        for (i, (m, c)) in self.sorted_terms_by(cmp).into_iter().enumerate() {
            let (neg, abs) = coeff_parts(c);
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = format_monomial(m, vars);
            match (&mono[..], abs.as_str()) {
                ("", a) => out.push_str(a),
                (mo, "1") => out.push_str(mo),
                (mo, a) => {
                    out.push_str(a);
                    out.push('*');
                    out.push_str(mo);
                }
            }
        }
        out
    }
}

fn format_monomial(m: &Monomial, vars: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(vars[i].clone()),
            _ => parts.push(format!("{}^{}", vars[i], e)),
        }
    }
    parts.join("*")
}

/// Split a coefficient into (is_negative, absolute value rendering).
fn coeff_parts<F: Field>(c: &F) -> (bool, String) {
    let s = c.to_string();
    match s.strip_prefix('-') {
        Some(rest) => (true, rest.to_string()),
        None => (false, s),
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let order = MonomialOrder::DegRevLex;
        write!(f, "{}", self.format_with(|a, b| order.cmp(a, b)))
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;
    use num::BigRational;

    fn ring2() -> Arc<RingSpec<BigRational>> {
        RingSpec::new(&["a1", "a2"], 0).unwrap()
    }

    fn p(ring: &Arc<RingSpec<BigRational>>, s: &str) -> Polynomial<BigRational> {
        parse(s, ring.clone()).unwrap()
    }

    #[test]
    fn add_cancellation() {
        let r = ring2();
        let sum = p(&r, "a1 + a2").checked_add(&p(&r, "-a2")).unwrap();
        assert_eq!(sum, p(&r, "a1"));
        let f = p(&r, "a1^3 - 2*a2");
        assert_eq!(f.checked_add(&Polynomial::zero(r.clone())).unwrap(), f);
        assert_eq!(
            p(&r, "a1^2 - a2^2").checked_add(&p(&r, "a2^2")).unwrap(),
            p(&r, "a1^2")
        );
    }

    #[test]
    fn mul_difference_of_squares() {
        let r = ring2();
        let prod = p(&r, "a1 + a2").checked_mul(&p(&r, "a1 - a2")).unwrap();
        assert_eq!(prod, p(&r, "a1^2 - a2^2"));
        let f = p(&r, "3*a1*a2 - a2");
        assert_eq!(f.checked_mul(&Polynomial::one(r.clone())).unwrap(), f);
    }

    #[test]
    fn quotient_ring_multiplication_reduces() {
        let free = RingSpec::<BigRational>::new(&["x", "y"], 0).unwrap();
        let rels = vec![p(&free, "x*y"), p(&free, "y^2")];
        let q = free.with_relations(rels).unwrap();
        let x = parse("x", q.clone()).unwrap();
        let y = parse("y", q.clone()).unwrap();
        assert!(x.checked_mul(&y).unwrap().is_zero());
        assert!(y.checked_mul(&y).unwrap().is_zero());
        assert!(!x.checked_mul(&x).unwrap().is_zero());
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let r = ring2();
        let other = RingSpec::<BigRational>::new(&["b1", "b2"], 0).unwrap();
        let f = p(&r, "a1");
        let g = parse("b1", other).unwrap();
        assert!(f.checked_add(&g).is_err());
        assert!(f.checked_mul(&g).is_err());
    }

    #[test]
    fn substitution_examples() {
        // Extended ring with the images of a Rees presentation at p = 2.
        let base = ring2();
        let ext = RingSpec::<BigRational>::new(&["a1", "a2", "X1", "X2", "Y"], 0).unwrap();
        let f = parse("Y^2 - X1*X2", ext.clone()).unwrap();
        let images = vec![
            p(&base, "a1"),
            p(&base, "a2"),
            p(&base, "a1^2"),
            p(&base, "a2^2"),
            p(&base, "a1*a2"),
        ];
        assert!(f.substitute(&images).unwrap().is_zero());

        // p = 3: a2*Y - a1*X2 vanishes under X2 -> a2^3, Y -> a1*a2^2.
        let g = parse("a2*Y - a1*X2", ext.clone()).unwrap();
        let images3 = vec![
            p(&base, "a1"),
            p(&base, "a2"),
            p(&base, "a1^3"),
            p(&base, "a2^3"),
            p(&base, "a1*a2^2"),
        ];
        assert!(g.substitute(&images3).unwrap().is_zero());

        let h = parse("X1", ext.clone()).unwrap();
        let zero_images = vec![
            p(&base, "a1"),
            p(&base, "a2"),
            Polynomial::zero(base.clone()),
            Polynomial::zero(base.clone()),
            Polynomial::zero(base.clone()),
        ];
        assert!(h.substitute(&zero_images).unwrap().is_zero());
    }

    #[test]
    fn homogeneity_and_normalization() {
        let r = ring2();
        assert_eq!(p(&r, "a1^2 + a1*a2").homogeneous_degree(), Some(2));
        assert_eq!(p(&r, "a1^2 + a2").homogeneous_degree(), None);
        let f = p(&r, "-2*a1^2 + 4*a2^2");
        let n = f.normalize(MonomialOrder::DegRevLex);
        assert_eq!(n, p(&r, "a1^2 - 2*a2^2"));
    }

    #[test]
    fn display_round_trip_shape() {
        let r = ring2();
        let f = p(&r, "a1^3*a2 - 2*a2^4");
        assert_eq!(f.to_string(), "a1^3*a2 - 2*a2^4");
        assert_eq!(p(&r, &f.to_string()), f);
    }
}
