//! Ring contexts: variables, grading weights, coefficient field, and an
//! optional quotient by homogeneous relations.

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::field::{is_prime, Field};
use crate::groebner;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;

pub(crate) type TermMap<F> = BTreeMap<Monomial, F>;

/// An ambient graded polynomial ring `k[vars]` (or a quotient of one by
/// homogeneous relations), with `m` understood as the ideal of all variables.
pub struct RingSpec<F: Field> {
    vars: Vec<String>,
    weights: Vec<u64>,
    characteristic: u64,
    relations: Vec<TermMap<F>>,
    rel_basis: OnceLock<Vec<TermMap<F>>>,
    monomial_fast_path: bool,
}

impl<F: Field> std::fmt::Debug for RingSpec<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RingSpec")
            .field("vars", &self.vars)
            .field("weights", &self.weights)
            .field("characteristic", &self.characteristic)
            .field("relations", &self.relations.len())
            .finish()
    }
}

impl<F: Field> PartialEq for RingSpec<F> {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars
            && self.weights == other.weights
            && self.characteristic == other.characteristic
            && self.relations == other.relations
    }
}

impl<F: Field> RingSpec<F> {
    /// Plain graded polynomial ring with unit weights.
    pub fn new(vars: &[&str], characteristic: u64) -> Result<Arc<Self>> {
        let weights = vec![1u64; vars.len()];
        Self::with_weights(vars, &weights, characteristic)
    }

    pub fn with_weights(vars: &[&str], weights: &[u64], characteristic: u64) -> Result<Arc<Self>> {
        if vars.is_empty() {
            return Err(Error::InvalidRing("no variables".into()));
        }
        if vars.len() != weights.len() {
            return Err(Error::InvalidRing(
                "weights must match the variable count".into(),
            ));
        }
        if weights.iter().any(|&w| w == 0) {
            return Err(Error::InvalidRing("weights must be strictly positive".into()));
        }
        let mut seen = std::collections::BTreeSet::new();
        for v in vars {
            if v.is_empty() {
                return Err(Error::InvalidRing("empty variable name".into()));
            }
            if !v.chars().next().unwrap().is_ascii_alphabetic() {
                return Err(Error::InvalidRing(format!(
                    "variable `{v}` must start with a letter"
                )));
            }
            if !v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(Error::InvalidRing(format!("invalid variable name `{v}`")));
            }
            if !seen.insert(v.to_string()) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        if characteristic != 0 && !is_prime(characteristic) {
            return Err(Error::InvalidRing(format!(
                "characteristic {characteristic} is not prime"
            )));
        }
        if characteristic > (1 << 31) {
            return Err(Error::InvalidRing("characteristic too large".into()));
        }
        Ok(Arc::new(RingSpec {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            weights: weights.to_vec(),
            characteristic,
            relations: Vec::new(),
            rel_basis: OnceLock::new(),
            monomial_fast_path: true,
        }))
    }

    /// Quotient of this ring by homogeneous relations. The relation
    /// polynomials must live in the relation-free ring with the same
    /// variables and weights.
    pub fn with_relations(self: &Arc<Self>, relations: Vec<Polynomial<F>>) -> Result<Arc<Self>> {
        let mut raw = Vec::new();
        for r in &relations {
            if r.ring().vars != self.vars || r.ring().weights != self.weights {
                return Err(Error::RingMismatch(
                    "relation lives in a different ring".into(),
                ));
            }
            if r.is_zero() {
                return Err(Error::InvalidRing("zero quotient relation".into()));
            }
            if r.homogeneous_degree().is_none() {
                return Err(Error::NotHomogeneous(format!(
                    "quotient relation {r} is not homogeneous"
                )));
            }
            raw.push(r.terms().clone());
        }
        Ok(Arc::new(RingSpec {
            vars: self.vars.clone(),
            weights: self.weights.clone(),
            characteristic: self.characteristic,
            relations: raw,
            rel_basis: OnceLock::new(),
            monomial_fast_path: self.monomial_fast_path,
        }))
    }

    /// Same ring with the monomial fast path disabled: every ideal operation
    /// runs through the general Groebner machinery.
    pub fn without_fast_path(self: &Arc<Self>) -> Arc<Self> {
        Arc::new(RingSpec {
            vars: self.vars.clone(),
            weights: self.weights.clone(),
            characteristic: self.characteristic,
            relations: self.relations.clone(),
            rel_basis: OnceLock::new(),
            monomial_fast_path: false,
        })
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn is_quotient(&self) -> bool {
        !self.relations.is_empty()
    }

    pub fn fast_path_enabled(&self) -> bool {
        self.monomial_fast_path
    }

    pub(crate) fn relations_raw(&self) -> &[TermMap<F>] {
        &self.relations
    }

    /// The quotient relations as polynomials of this ring.
    pub fn relation_polys(self: &Arc<Self>) -> Vec<Polynomial<F>> {
        self.relations
            .iter()
            .map(|t| Polynomial::from_raw_terms(self.clone(), t.clone()))
            .collect()
    }

    /// Reduced Groebner basis of the relation ideal (raw term maps),
    /// computed once in the relation-free copy of this ring.
    pub(crate) fn rel_basis(self: &Arc<Self>) -> &[TermMap<F>] {
        if self.relations.is_empty() {
            return &[];
        }
        self.rel_basis.get_or_init(|| {
            let free = RingSpec::with_weights(
                &self.vars.iter().map(|s| s.as_str()).collect::<Vec<_>>(),
                &self.weights,
                self.characteristic,
            )
            .expect("relation-free ring");
            let gens: Vec<Polynomial<F>> = self
                .relations
                .iter()
                .map(|t| Polynomial::from_raw_terms(free.clone(), t.clone()))
                .collect();
            let gb = groebner::buchberger_in(&free, &gens, MonomialOrder::DegRevLex)
                .expect("relation basis");
            gb.elements().iter().map(|p| p.terms().clone()).collect()
        })
    }

    /// True when every relation is a single term (so monomial ideal fast
    /// paths stay sound in the quotient).
    pub fn relations_monomial(&self) -> bool {
        self.relations.iter().all(|t| t.len() == 1)
    }

    /// A monomial that survives reduction by the relation leading terms.
    pub(crate) fn monomial_is_standard(self: &Arc<Self>, m: &Monomial) -> bool {
        if self.relations.is_empty() {
            return true;
        }
        let basis = self.rel_basis();
        let order = MonomialOrder::DegRevLex;
        for b in basis {
            let lt = b
                .keys()
                .max_by(|a, c| order.cmp(a, c))
                .expect("nonzero relation");
            if lt.divides(m) {
                return false;
            }
        }
        true
    }
}
