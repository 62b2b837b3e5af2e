//! Graded Nakayama minimalization: minimal generators of graded ideals and
//! modules by exact linear algebra on graded pieces.
//!
//! Candidates are processed by ascending weighted degree; a candidate is kept
//! exactly when it lies outside the span of (preloaded denominators + already
//! kept elements) in its graded piece. For a graded module over a ring with
//! `m` the ideal of all variables, this greedy scan computes a basis of the
//! module modulo `m` times it.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::Ideal;
use crate::linalg::RowSpace;
use crate::monomial::{monomials_of_weighted_degree, Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::ring::RingSpec;

/// Minimal generators of a quotient of ideals `N / D` as a module.
#[derive(Clone, Debug)]
pub struct QuotientMinGens<F: Field> {
    pub representatives: Vec<Polynomial<F>>,
    pub counts_by_degree: BTreeMap<u64, usize>,
}

/// Weighted degree of a homogeneous module vector under slot degrees, or an
/// error if some entry is non-homogeneous or the degrees are inconsistent.
fn vector_degree<F: Field>(v: &[Polynomial<F>], slot_degrees: &[u64]) -> Result<Option<u64>> {
    let mut degree = None;
    for (entry, &slot) in v.iter().zip(slot_degrees) {
        if entry.is_zero() {
            continue;
        }
        let d = entry
            .homogeneous_degree()
            .ok_or_else(|| Error::NotHomogeneous(entry.to_string()))?
            + slot;
        match degree {
            None => degree = Some(d),
            Some(existing) if existing == d => {}
            Some(_) => {
                return Err(Error::NotHomogeneous(format!(
                    "module vector with mixed degrees: {v:?}"
                )))
            }
        }
    }
    Ok(degree)
}

/// Coordinate map of the degree-`d` piece of the free module with the given
/// slot degrees: one column per (slot, standard monomial) pair.
struct PieceIndex {
    columns: BTreeMap<(usize, Monomial), usize>,
}

impl PieceIndex {
    fn new<F: Field>(ring: &Arc<RingSpec<F>>, slot_degrees: &[u64], d: u64) -> Self {
        let mut columns = BTreeMap::new();
        for (slot, &sd) in slot_degrees.iter().enumerate() {
            if d < sd {
                continue;
            }
            for m in monomials_of_weighted_degree(ring.nvars(), ring.weights(), d - sd) {
                if ring.monomial_is_standard(&m) {
                    let next = columns.len();
                    columns.insert((slot, m), next);
                }
            }
        }
        PieceIndex { columns }
    }

    fn coords<F: Field>(&self, v: &[Polynomial<F>]) -> Vec<F> {
        let mut out = vec![F::zero(); self.columns.len()];
        for (slot, entry) in v.iter().enumerate() {
            for (m, c) in entry.terms() {
                let idx = *self
                    .columns
                    .get(&(slot, m.clone()))
                    .expect("monomial outside the graded piece");
                out[idx] = c.clone();
            }
        }
        out
    }
}

/// Indices (into `candidates`, in processing order) of a minimal generating
/// subset of the module generated by `candidates` over the submodule
/// generated by `preload`.
pub fn minimalize_vectors<F: Field>(
    ring: &Arc<RingSpec<F>>,
    slot_degrees: &[u64],
    candidates: &[Vec<Polynomial<F>>],
    preload: &[Vec<Polynomial<F>>],
) -> Result<Vec<usize>> {
    let mut with_degree: Vec<(u64, usize)> = Vec::new();
    for (i, v) in candidates.iter().enumerate() {
        if v.len() != slot_degrees.len() {
            return Err(Error::InvalidInput("module vector of wrong length".into()));
        }
        if let Some(d) = vector_degree(v, slot_degrees)? {
            with_degree.push((d, i));
        }
    }
    let mut preload_deg: Vec<(u64, &Vec<Polynomial<F>>)> = Vec::new();
    for v in preload {
        if v.len() != slot_degrees.len() {
            return Err(Error::InvalidInput("module vector of wrong length".into()));
        }
        if let Some(d) = vector_degree(v, slot_degrees)? {
            preload_deg.push((d, v));
        }
    }
    // Ascending degree, deterministic tie-break on the vector's leading data.
    with_degree.sort_by(|(da, ia), (db, ib)| {
        da.cmp(db)
            .then_with(|| cmp_vectors(&candidates[*ia], &candidates[*ib]))
            .then(ia.cmp(ib))
    });

    let mut kept: Vec<usize> = Vec::new();
    let mut kept_deg: Vec<u64> = Vec::new();
    let mut pos = 0;
    while pos < with_degree.len() {
        let d = with_degree[pos].0;
        let mut group_end = pos;
        while group_end < with_degree.len() && with_degree[group_end].0 == d {
            group_end += 1;
        }
        let piece = PieceIndex::new(ring, slot_degrees, d);
        let mut span = RowSpace::new(piece.columns.len());
        let add_multiples = |w: &[Polynomial<F>], wd: u64, span: &mut RowSpace<F>| {
            for mu in monomials_of_weighted_degree(ring.nvars(), ring.weights(), d - wd) {
                if !ring.monomial_is_standard(&mu) {
                    continue;
                }
                let shifted: Vec<Polynomial<F>> = w
                    .iter()
                    .map(|p| {
                        Polynomial::monomial(ring.clone(), mu.clone(), F::one())
                            .checked_mul(p)
                            .expect("same ring")
                    })
                    .collect();
                if shifted.iter().any(|p| !p.is_zero()) {
                    span.insert(piece.coords(&shifted));
                }
            }
        };
        for (wd, w) in &preload_deg {
            if *wd <= d {
                add_multiples(w, *wd, &mut span);
            }
        }
        for (k, &ki) in kept.iter().enumerate() {
            if kept_deg[k] <= d {
                add_multiples(&candidates[ki], kept_deg[k], &mut span);
            }
        }
        for &(_, i) in &with_degree[pos..group_end] {
            let coords = piece.coords(&candidates[i]);
            if span.insert(coords) {
                kept.push(i);
                kept_deg.push(d);
            }
        }
        pos = group_end;
    }
    Ok(kept)
}

fn cmp_vectors<F: Field>(a: &[Polynomial<F>], b: &[Polynomial<F>]) -> std::cmp::Ordering {
    let slot_a = a.iter().position(|p| !p.is_zero()).unwrap_or(a.len());
    let slot_b = b.iter().position(|p| !p.is_zero()).unwrap_or(b.len());
    slot_a.cmp(&slot_b).then_with(|| {
        let la = a
            .get(slot_a)
            .and_then(|p| p.leading(MonomialOrder::Lex))
            .map(|(m, _)| m.clone());
        let lb = b
            .get(slot_b)
            .and_then(|p| p.leading(MonomialOrder::Lex))
            .map(|(m, _)| m.clone());
        lb.cmp(&la)
    })
}

/// Minimal generators of a graded ideal: a subset of the generators whose
/// classes form a basis of `A / mA`.
pub fn minimal_generators<F: Field>(ideal: &Ideal<F>) -> Result<Vec<Polynomial<F>>> {
    let ring = ideal.ring().clone();
    let mut gens: Vec<Polynomial<F>> = ideal.gens().to_vec();
    if gens.is_empty() {
        return Ok(gens);
    }
    if gens.iter().any(|g| g.is_constant() && !g.is_zero()) {
        return Ok(vec![Polynomial::one(ring)]);
    }
    for g in &gens {
        if g.homogeneous_degree().is_none() {
            return Err(Error::NotHomogeneous(g.to_string()));
        }
    }
    gens.sort_by(crate::ideal::gen_sort_cmp);
    if gens.iter().all(|g| g.is_monomial()) {
        // Divisibility filtering is graded Nakayama for monomial ideals.
        let mut kept: Vec<Polynomial<F>> = Vec::new();
        let mut kept_monos: Vec<Monomial> = Vec::new();
        for g in &gens {
            let m = g.terms().keys().next().unwrap().clone();
            if !kept_monos.iter().any(|k| k.divides(&m)) {
                kept.push(Polynomial::monomial(ring.clone(), m.clone(), F::one()));
                kept_monos.push(m);
            }
        }
        return Ok(kept);
    }
    let candidates: Vec<Vec<Polynomial<F>>> = gens.iter().map(|g| vec![g.clone()]).collect();
    let kept = minimalize_vectors(&ring, &[0], &candidates, &[])?;
    Ok(kept.into_iter().map(|i| gens[i].clone()).collect())
}

/// Representatives in `numerator` whose classes are a basis of
/// `numerator / (denominator + m * numerator)`, per graded piece.
pub fn quotient_min_gens<F: Field>(
    numerator: &Ideal<F>,
    denominator: &Ideal<F>,
) -> Result<QuotientMinGens<F>> {
    if !numerator.contains(denominator)? {
        return Err(Error::NotContained(format!(
            "{denominator} is not inside {numerator}"
        )));
    }
    let ring = numerator.ring().clone();
    let candidates_polys = minimal_generators(numerator)?;
    for g in denominator.gens() {
        if g.homogeneous_degree().is_none() {
            return Err(Error::NotHomogeneous(g.to_string()));
        }
    }
    let candidates: Vec<Vec<Polynomial<F>>> =
        candidates_polys.iter().map(|g| vec![g.clone()]).collect();
    let preload: Vec<Vec<Polynomial<F>>> =
        denominator.gens().iter().map(|g| vec![g.clone()]).collect();
    let kept = minimalize_vectors(&ring, &[0], &candidates, &preload)?;
    let mut counts = BTreeMap::new();
    let mut reps = Vec::new();
    for i in kept {
        let g = candidates_polys[i].clone();
        let d = g.homogeneous_degree().expect("validated homogeneous");
        *counts.entry(d).or_insert(0) += 1;
        reps.push(g);
    }
    Ok(QuotientMinGens {
        representatives: reps,
        counts_by_degree: counts,
    })
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

    fn ideal(r: &Arc<RingSpec<Q>>, gens: &[&str]) -> Ideal<Q> {
        Ideal::new(
            r.clone(),
            gens.iter().map(|s| parse(s, r.clone()).unwrap()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn divisibility_redundancy() {
        let r = ring2();
        let a = ideal(&r, &["a1^2", "a1^2*a2", "a2^3"]);
        let min: Vec<String> = minimal_generators(&a)
            .unwrap()
            .iter()
            .map(|g| g.to_string())
            .collect();
        assert_eq!(min, vec!["a1^2", "a2^3"]);
    }

    #[test]
    fn unit_ideal_minimal_generator() {
        let r = ring2();
        let u = Ideal::unit(r.clone());
        let min = minimal_generators(&u).unwrap();
        assert_eq!(min.len(), 1);
        assert!(min[0].is_one());
    }

    #[test]
    fn general_linear_algebra_path() {
        let r = ring2();
        // Same ideal twice plus a combination: only two survive.
        let a = ideal(&r, &["a1 + a2", "a1 - a2", "2*a1"]);
        let min = minimal_generators(&a).unwrap();
        assert_eq!(min.len(), 2);
    }

    #[test]
    fn quotient_min_gens_examples() {
        let r = ring2();
        // N = (a1, a2), D = (a1^2, a2): single representative a1.
        let n = ideal(&r, &["a1", "a2"]);
        let d = ideal(&r, &["a1^2", "a2"]);
        let q = quotient_min_gens(&n, &d).unwrap();
        assert_eq!(q.representatives.len(), 1);
        assert_eq!(q.representatives[0].to_string(), "a1");

        // N = (1), D = (a1^2, a2): single representative 1.
        let u = Ideal::unit(r.clone());
        let q2 = quotient_min_gens(&u, &d).unwrap();
        assert_eq!(q2.representatives.len(), 1);
        assert!(q2.representatives[0].is_one());

        // N = D: empty.
        let q3 = quotient_min_gens(&d, &d).unwrap();
        assert!(q3.representatives.is_empty());

        // D not inside N is rejected.
        assert!(quotient_min_gens(&d, &u).is_err());
    }

    #[test]
    fn counts_match_independent_dimension() {
        // dim_k(A / mA) per degree, computed by the raw row-space route.
        let r = ring2();
        let a = ideal(&r, &["a1^2", "a1*a2", "a2^3"]);
        let min = minimal_generators(&a).unwrap();
        assert_eq!(min.len(), 3);
    }
}
