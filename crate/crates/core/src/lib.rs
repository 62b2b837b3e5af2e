//! Exact commutative algebra for the defining equations of Rees algebras of
//! deviation-one ideals in graded polynomial rings (and graded quotients).
//!
//! The crate is generic over an exact coefficient [`field::Field`]: the
//! rationals by default, or a prime field chosen at runtime. Concrete type
//! aliases for both instantiations live at the crate root.

pub mod error;
pub mod field;
pub mod groebner;
pub mod ideal;
pub mod linalg;
pub mod monomial;
pub mod nakayama;
pub mod oracle;
pub mod parse;
pub mod poly;
pub mod rees;
pub mod ring;

pub use error::{Error, Result};
pub use field::{Field, Fp};
pub use groebner::{buchberger, buchberger_in, eliminate_trailing, syzygies, GroebnerBasis, ReductionTrace, SyzygyModule};
pub use ideal::Ideal;
pub use monomial::{Monomial, MonomialOrder};
pub use nakayama::QuotientMinGens;
pub use oracle::{KernelBasis, OracleComparison};
pub use parse::parse;
pub use poly::Polynomial;
pub use rees::{
    Equation, HypothesisMode, HypothesisReport, Presentation, ReesInput, Verdict, VerifyReport,
};
pub use ring::RingSpec;

/// Rational scalars (exact arbitrary precision).
pub type Rat = num::BigRational;

/// Polynomial over the rationals.
pub type QPolynomial = Polynomial<Rat>;
/// Ideal over the rationals.
pub type QIdeal = Ideal<Rat>;
/// Ring context over the rationals.
pub type QRingSpec = RingSpec<Rat>;

/// Polynomial over a prime field with runtime modulus.
pub type FpPolynomial = Polynomial<Fp>;
/// Ideal over a prime field.
pub type FpIdeal = Ideal<Fp>;
/// Ring context over a prime field.
pub type FpRingSpec = RingSpec<Fp>;
