//! Monomials (dense exponent vectors) and monomial orders.

use std::cmp::Ordering;

/// Exponent vector, one entry per ring variable.
///
/// The derived `Ord` (lexicographic on the vector) is the canonical storage
/// order for term maps; term comparisons during division use a
/// [`MonomialOrder`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial(pub(crate) Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn weighted_degree(&self, weights: &[u64]) -> u64 {
        self.0
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u64 * w)
            .sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }

    pub fn pow(&self, n: u32) -> Self {
        Monomial(
            self.0
                .iter()
                .map(|&e| e.checked_mul(n).expect("exponent overflow"))
                .collect(),
        )
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self` when the division is exact.
    pub fn try_div(&self, other: &Self) -> Option<Self> {
        if self.divides(other) {
            Some(Monomial(
                other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect(),
            ))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Self) -> Self {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn coprime(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Term orders used for division and elimination.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum MonomialOrder {
    /// Degree reverse lexicographic (the default working order).
    DegRevLex,
    /// Pure lexicographic.
    Lex,
    /// Elimination order: the variables at index `split` and beyond form the
    /// leading block (compared degrevlex), ties fall back to degrevlex on the
    /// front block. A Groebner basis under this order intersected with the
    /// front block eliminates the trailing variables.
    Block { split: usize },
}

fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {
            for (x, y) in a.iter().zip(b).rev() {
                match x.cmp(y) {
                    Ordering::Equal => continue,
                    // Smaller exponent in the last differing variable wins.
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                }
            }
            Ordering::Equal
        }
        other => other,
    }
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match self {
            MonomialOrder::DegRevLex => degrevlex(&a.0, &b.0),
            MonomialOrder::Lex => {
                for (x, y) in a.0.iter().zip(&b.0) {
                    match x.cmp(y) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Block { split } => {
                match degrevlex(&a.0[*split..], &b.0[*split..]) {
                    Ordering::Equal => degrevlex(&a.0[..*split], &b.0[..*split]),
                    other => other,
                }
            }
        }
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

/// All monomials on `nvars` variables with the given weighted degree,
/// in a fixed deterministic (lexicographic) order.
pub fn monomials_of_weighted_degree(nvars: usize, weights: &[u64], degree: u64) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u32; nvars];
    fn rec(
        var: usize,
        remaining: u64,
        weights: &[u64],
        current: &mut Vec<u32>,
        out: &mut Vec<Monomial>,
    ) {
        if var == weights.len() {
            if remaining == 0 {
                out.push(Monomial(current.clone()));
            }
            return;
        }
        let w = weights[var];
        let max_e = remaining / w;
        // Descending exponent on the leading variable gives lex-descending output.
        for e in (0..=max_e).rev() {
            current[var] = e as u32;
            rec(var + 1, remaining - e * w, weights, current, out);
        }
        current[var] = 0;
    }
    rec(0, degree, weights, &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial(e.to_vec())
    }

    #[test]
    fn degrevlex_tie_break() {
        // a1^2 vs a1*a2: same degree, degrevlex compares the last variable.
        let o = MonomialOrder::DegRevLex;
        assert_eq!(o.cmp(&m(&[2, 0]), &m(&[1, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 2]), &m(&[1, 1])), Ordering::Less);
        assert_eq!(o.cmp(&m(&[3, 0]), &m(&[1, 1])), Ordering::Greater);
    }

    #[test]
    fn lex_order() {
        let o = MonomialOrder::Lex;
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
    }

    #[test]
    fn block_order_prefers_trailing_block() {
        // Variables (a1, a2, t), eliminating t.
        let o = MonomialOrder::Block { split: 2 };
        assert_eq!(o.cmp(&m(&[0, 0, 1]), &m(&[5, 5, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[2, 0, 1]), &m(&[0, 1, 1])), Ordering::Greater);
    }

    #[test]
    fn lcm_and_division() {
        let a = m(&[2, 1]);
        let b = m(&[1, 3]);
        assert_eq!(a.lcm(&b), m(&[2, 3]));
        assert_eq!(a.try_div(&a.lcm(&b)), Some(m(&[0, 2])));
        assert_eq!(b.try_div(&a), None);
    }

    #[test]
    fn weighted_enumeration() {
        let ms = monomials_of_weighted_degree(2, &[1, 1], 3);
        assert_eq!(ms.len(), 4);
        assert_eq!(ms[0], m(&[3, 0]));
        assert_eq!(ms[3], m(&[0, 3]));
        let ws = monomials_of_weighted_degree(2, &[2, 3], 6);
        assert_eq!(ws, vec![m(&[3, 0]), m(&[0, 2])]);
    }
}
