//! Coefficient fields.
//!
//! All core math is generic over an exact [`Field`] scalar: the rationals
//! (`num::BigRational`) or a prime field with a runtime modulus ([`Fp`]).
//! Floating point is deliberately not a model of `Field`; every ideal-equality
//! decision downstream relies on exact arithmetic.

use std::fmt::{self, Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::Integer as _;
use num_traits::{One, Signed, Zero};

/// An exact field of scalars.
///
/// `Ord` is only used for deterministic tie-breaking, never for mathematical
/// comparisons.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + PartialOrd
    + Ord
    + Debug
    + Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;

    /// Exact division.
    fn div_exact(&self, other: &Self) -> Self {
        self.clone() * other.inv()
    }

    /// Embed a small integer. For prime fields the value stays unbound until
    /// it meets the ring characteristic (see [`Field::bind`]).
    fn from_int(n: i64) -> Self;

    /// Value from a decimal digit string in the given characteristic.
    fn from_digits(digits: &str, characteristic: u64) -> Result<Self, String>;

    /// Attach the ring characteristic. No-op in characteristic zero.
    fn bind(self, characteristic: u64) -> Self;

    /// Scalar by which a coefficient list is divided to reach canonical form:
    /// over the rationals the signed content, over a prime field the leading
    /// coefficient.
    fn canonical_scale<'a, I: Iterator<Item = &'a Self>>(leading: &Self, coeffs: I) -> Self;
}

impl Field for BigRational {
    fn inv(&self) -> Self {
        self.recip()
    }

    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_digits(digits: &str, _characteristic: u64) -> Result<Self, String> {
        let n: BigInt = digits
            .parse()
            .map_err(|_| format!("invalid integer literal `{digits}`"))?;
        Ok(BigRational::from_integer(n))
    }

    fn bind(self, _characteristic: u64) -> Self {
        self
    }

    fn canonical_scale<'a, I: Iterator<Item = &'a Self>>(leading: &Self, coeffs: I) -> Self {
        // Positive content: gcd of numerators over lcm of denominators.
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in coeffs {
            num_gcd = num_gcd.gcd(&c.numer().abs());
            den_lcm = den_lcm.lcm(c.denom());
        }
        if num_gcd.is_zero() {
            return BigRational::one();
        }
        let content = BigRational::new(num_gcd, den_lcm);
        if leading.is_negative() {
            -content
        } else {
            content
        }
    }
}

/// Element of a prime field `GF(q)` with the modulus chosen at runtime.
///
/// A value created without ring context (`zero`, `one`, `from_int`) carries
/// modulus 0 and behaves as a plain integer until it meets a bound value or
/// is bound explicitly; polynomials bind every coefficient on construction,
/// so stored coefficients always carry the ring characteristic.
#[derive(Clone, Copy, Debug, PartialOrd, Ord)]
pub struct Fp {
    value: i64,
    modulus: u64,
}

impl Fp {
    pub fn new(value: i64, modulus: u64) -> Self {
        assert!(modulus > 0, "modulus must be positive");
        Fp {
            value: value.rem_euclid(modulus as i64),
            modulus,
        }
    }

    pub fn residue(&self) -> i64 {
        self.value
    }

    fn merged_modulus(&self, other: &Self) -> u64 {
        match (self.modulus, other.modulus) {
            (0, m) | (m, 0) => m,
            (a, b) if a == b => a,
            (a, b) => panic!("prime field modulus mismatch: {a} vs {b}"),
        }
    }

    fn make(raw: i128, modulus: u64) -> Self {
        if modulus == 0 {
            let value = i64::try_from(raw).expect("unbound prime-field literal overflow");
            Fp { value, modulus: 0 }
        } else {
            Fp {
                value: raw.rem_euclid(modulus as i128) as i64,
                modulus,
            }
        }
    }
}

impl PartialEq for Fp {
    fn eq(&self, other: &Self) -> bool {
        match (self.modulus, other.modulus) {
            (0, 0) => self.value == other.value,
            (0, m) => self.value.rem_euclid(m as i64) == other.value,
            (m, 0) => self.value == other.value.rem_euclid(m as i64),
            (a, b) => a == b && self.value == other.value,
        }
    }
}

impl Eq for Fp {}

impl Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Zero for Fp {
    fn zero() -> Self {
        Fp {
            value: 0,
            modulus: 0,
        }
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
}

impl One for Fp {
    fn one() -> Self {
        Fp {
            value: 1,
            modulus: 0,
        }
    }
    fn is_one(&self) -> bool {
        if self.modulus == 0 {
            self.value == 1
        } else {
            self.value.rem_euclid(self.modulus as i64) == 1
        }
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        let m = self.merged_modulus(&rhs);
        Fp::make(self.value as i128 + rhs.value as i128, m)
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        let m = self.merged_modulus(&rhs);
        Fp::make(self.value as i128 - rhs.value as i128, m)
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        let m = self.merged_modulus(&rhs);
        Fp::make(self.value as i128 * rhs.value as i128, m)
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp::make(-(self.value as i128), self.modulus)
    }
}

impl Field for Fp {
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        if self.modulus == 0 {
            match self.value {
                1 => return Fp { value: 1, modulus: 0 },
                -1 => return Fp { value: -1, modulus: 0 },
                v => panic!("cannot invert unbound prime-field literal {v}"),
            }
        }
        // Extended Euclid; the modulus is validated prime at ring construction.
        let (mut r0, mut r1) = (self.modulus as i64, self.value);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        assert!(r0 == 1, "element {} not invertible mod {}", self.value, self.modulus);
        Fp::new(t0, self.modulus)
    }

    fn from_int(n: i64) -> Self {
        Fp {
            value: n,
            modulus: 0,
        }
    }

    fn from_digits(digits: &str, characteristic: u64) -> Result<Self, String> {
        if characteristic == 0 {
            return Err("prime field element requires a positive characteristic".into());
        }
        let n: BigInt = digits
            .parse()
            .map_err(|_| format!("invalid integer literal `{digits}`"))?;
        let m = BigInt::from(characteristic);
        let r = ((n % &m) + &m) % &m;
        let (_, digits) = r.to_u64_digits();
        let value = digits.first().copied().unwrap_or(0) as i64;
        Ok(Fp::new(value, characteristic))
    }

    fn bind(self, characteristic: u64) -> Self {
        if characteristic == 0 {
            return self;
        }
        if self.modulus == 0 {
            Fp::new(self.value, characteristic)
        } else {
            assert_eq!(
                self.modulus, characteristic,
                "prime field modulus mismatch"
            );
            self
        }
    }

    fn canonical_scale<'a, I: Iterator<Item = &'a Self>>(leading: &Self, _coeffs: I) -> Self {
        *leading
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_canonical_scale_clears_content() {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let neg_third = BigRational::new(BigInt::from(-1), BigInt::from(3));
        let coeffs = [half.clone(), neg_third.clone()];
        let s = <BigRational as Field>::canonical_scale(&neg_third, coeffs.iter());
        // content = gcd(1,1)/lcm(2,3) = 1/6 with leading sign negative
        assert_eq!(s, BigRational::new(BigInt::from(-1), BigInt::from(6)));
        assert_eq!(neg_third.div_exact(&s), BigRational::from_integer(BigInt::from(2)));
    }

    #[test]
    fn fp_binding_and_arithmetic() {
        let a = Fp::new(5, 7);
        let b = Fp::from_int(3);
        assert_eq!(a + b, Fp::new(1, 7));
        assert_eq!(a * a, Fp::new(4, 7));
        assert_eq!(a.inv() * a, Fp::new(1, 7));
        assert_eq!(Fp::from_int(-1).bind(7), Fp::new(6, 7));
    }

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(7919));
        assert!(!is_prime(1));
        assert!(!is_prime(91));
    }
}
