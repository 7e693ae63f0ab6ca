//! Exact arithmetic: sparse polynomials over the rationals, reduced
//! fractions, parameter constraints and sparse linear algebra.

pub mod fraction;
pub mod gcd;
pub mod linear;
pub mod linsolve;
mod modgcd;
pub mod modp;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod rational;
pub mod var;

use alloc::string::String;

pub use fraction::Fraction;
pub use linear::{reduce_by_constraint, reduce_fraction_by_constraint, LinearForm, ParamMap, ParamVector};
pub use monomial::Monomial;
pub use parse::{parse_fraction, parse_polynomial};
pub use poly::Polynomial;
pub use rational::{int, rat, Rational};
pub use var::{Var, VarSet, ALL_VARS, PARAMS, PHASE, VAR_COUNT};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("substitution makes a denominator identically zero")]
    SubstitutionDenominatorZero,
    #[error("division by the zero fraction")]
    DivisionByZero,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("parameter image is not affine-linear in a0..a5")]
    NotLinear,
}

/// `d | n` with the quotient as witness.
pub fn divides(d: &Polynomial, n: &Polynomial) -> Option<Polynomial> {
    n.div_exact(d)
}
