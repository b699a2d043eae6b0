//! Exact field arithmetic: rationals, prime fields and rational function
//! fields over `Q`.
//!
//! Every coefficient in the crate is a [`Scalar`]. A [`Field`] describes
//! which of the three kinds is in use and supplies constants. Arithmetic
//! between scalars of different fields is an error; the `checked_*` methods
//! report it, while the operator impls panic, since mixing fields inside an
//! algebra is a programming error that construction already rules out.

mod poly;
mod prime;
mod ratfunc;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

pub use poly::{Monomial, MultiPoly, Vars};
pub use prime::{is_prime, PrimeFieldElement};
pub use ratfunc::RationalFunction;

pub type Rational = BigRational;

/// Names of the symbols used by the generic two-generated skew algebra, in
/// context order: `alpha, beta, l1 (lambda_1), l1f, l2f, zeta, theta, kappa`.
pub const SKEW_SYMBOLS: [&str; 8] = [
    "alpha", "beta", "l1", "l1f", "l2f", "zeta", "theta", "kappa",
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at the evaluation point")]
    DenominatorVanishes,
    #[error("symbol `{0}` has no value")]
    UnboundSymbol(String),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("characteristic 2 is not supported")]
    CharacteristicTwo,
    #[error("invalid variable list: {0}")]
    BadVariables(String),
}

/// Which field a computation lives in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Field {
    Rational,
    Prime(u64),
    Function(Arc<Vars>),
}

impl Field {
    /// `F_p`; rejects composite moduli and `p = 2`.
    pub fn prime(p: u64) -> Result<Self, ScalarError> {
        if p == 2 {
            return Err(ScalarError::CharacteristicTwo);
        }
        if !is_prime(p) {
            return Err(ScalarError::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    /// `Q(names...)`; names must be distinct identifiers.
    pub fn function<S: AsRef<str>>(names: &[S]) -> Result<Self, ScalarError> {
        let mut seen = std::collections::BTreeSet::new();
        for n in names {
            let n = n.as_ref();
            let ok = n.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok {
                return Err(ScalarError::BadVariables(format!("`{n}` is not an identifier")));
            }
            if !seen.insert(n.to_string()) {
                return Err(ScalarError::BadVariables(format!("`{n}` repeated")));
            }
        }
        Ok(Field::Function(Vars::new(names)))
    }

    /// The function field on [`SKEW_SYMBOLS`].
    pub fn skew_symbols() -> Self {
        Field::function(&SKEW_SYMBOLS).expect("fixed symbol list is valid")
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Prime(p) => *p,
            _ => 0,
        }
    }

    pub fn vars(&self) -> Option<&Arc<Vars>> {
        match self {
            Field::Function(v) => Some(v),
            _ => None,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_integer(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_integer(1)
    }

    pub fn from_integer(&self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(n.into())),
            Field::Prime(p) => Scalar::Prime(PrimeFieldElement::new(n, *p)),
            Field::Function(v) => {
                Scalar::Function(RationalFunction::constant(v, BigRational::from_integer(n.into())))
            }
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match self {
            Field::Prime(p) => Scalar::Prime(PrimeFieldElement::from_bigint(n, *p)),
            _ => self.from_rational(&BigRational::from_integer(n.clone())).unwrap(),
        }
    }

    /// Embeds a rational; fails in `F_p` when `p` divides the denominator.
    pub fn from_rational(&self, q: &BigRational) -> Result<Scalar, ScalarError> {
        match self {
            Field::Rational => Ok(Scalar::Rational(q.clone())),
            Field::Prime(p) => PrimeFieldElement::from_rational(q, *p)
                .map(Scalar::Prime)
                .ok_or(ScalarError::DivisionByZero),
            Field::Function(v) => Ok(Scalar::Function(RationalFunction::constant(v, q.clone()))),
        }
    }

    /// Shorthand for `from_rational(n/d)`; panics if it is not representable.
    pub fn frac(&self, n: i64, d: i64) -> Scalar {
        self.from_rational(&BigRational::new(n.into(), d.into()))
            .expect("fraction representable in this field")
    }

    /// The indeterminate called `name` of a function field.
    pub fn symbol(&self, name: &str) -> Result<Scalar, ScalarError> {
        match self {
            Field::Function(v) => v
                .index_of(name)
                .map(|i| Scalar::Function(RationalFunction::var(v, i)))
                .ok_or_else(|| ScalarError::UnknownSymbol(name.to_string())),
            _ => Err(ScalarError::UnknownSymbol(name.to_string())),
        }
    }

    /// True when `s` is an element of this field.
    pub fn contains(&self, s: &Scalar) -> bool {
        match (self, s) {
            (Field::Rational, Scalar::Rational(_)) => true,
            (Field::Prime(p), Scalar::Prime(x)) => x.modulus() == *p,
            (Field::Function(v), Scalar::Function(f)) => poly::same_vars(v, f.vars()),
            _ => false,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "rational"),
            Field::Prime(p) => write!(f, "prime {p}"),
            Field::Function(v) => write!(f, "function {}", v.names().join(" ")),
        }
    }
}

/// An exact field element.
#[derive(Clone, Debug)]
pub enum Scalar {
    Rational(BigRational),
    Prime(PrimeFieldElement),
    Function(RationalFunction),
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a == b,
            (Scalar::Prime(a), Scalar::Prime(b)) => a == b,
            (Scalar::Function(a), Scalar::Function(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for Scalar {}

impl Scalar {
    pub fn rational(n: i64, d: i64) -> Self {
        Scalar::Rational(BigRational::new(n.into(), d.into()))
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Prime(x) => Field::Prime(x.modulus()),
            Scalar::Function(f) => Field::Function(f.vars().clone()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Prime(x) => x.is_zero(),
            Scalar::Function(f) => f.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Prime(x) => x.residue() == 1,
            Scalar::Function(f) => f.as_constant().is_some_and(|c| c.is_one()),
        }
    }

    /// `Some(q)` for rationals and constant rational functions.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self {
            Scalar::Rational(q) => Some(q.clone()),
            Scalar::Prime(_) => None,
            Scalar::Function(f) => f.as_constant(),
        }
    }

    pub fn as_function(&self) -> Option<&RationalFunction> {
        match self {
            Scalar::Function(f) => Some(f),
            _ => None,
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, ScalarError> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a + b)),
            (Scalar::Prime(a), Scalar::Prime(b)) if a.modulus() == b.modulus() => {
                Ok(Scalar::Prime(a.add(*b)))
            }
            (Scalar::Function(a), Scalar::Function(b)) if poly::same_vars(a.vars(), b.vars()) => {
                Ok(Scalar::Function(a.add(b)))
            }
            _ => Err(ScalarError::MixedFields),
        }
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, ScalarError> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, ScalarError> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a * b)),
            (Scalar::Prime(a), Scalar::Prime(b)) if a.modulus() == b.modulus() => {
                Ok(Scalar::Prime(a.mul(*b)))
            }
            (Scalar::Function(a), Scalar::Function(b)) if poly::same_vars(a.vars(), b.vars()) => {
                Ok(Scalar::Function(a.mul(b)))
            }
            _ => Err(ScalarError::MixedFields),
        }
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ScalarError> {
        if self.field() != other.field() {
            return Err(ScalarError::MixedFields);
        }
        self.checked_mul(&other.inv()?)
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        match self {
            Scalar::Rational(q) => {
                if q.is_zero() {
                    Err(ScalarError::DivisionByZero)
                } else {
                    Ok(Scalar::Rational(q.recip()))
                }
            }
            Scalar::Prime(x) => x.inv().map(Scalar::Prime).ok_or(ScalarError::DivisionByZero),
            Scalar::Function(f) => f.inv().map(Scalar::Function),
        }
    }

    fn neg_ref(&self) -> Self {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Prime(x) => Scalar::Prime(x.neg()),
            Scalar::Function(f) => Scalar::Function(f.neg()),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = self.field().one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates a function-field scalar at `assignment` (symbol name to
    /// value) inside `target`. Symbols that do not occur may be omitted.
    pub fn eval(
        &self,
        assignment: &[(&str, Scalar)],
        target: &Field,
    ) -> Result<Scalar, ScalarError> {
        match self {
            Scalar::Function(f) => {
                let vars = f.vars();
                for (name, _) in assignment {
                    if vars.index_of(name).is_none() {
                        return Err(ScalarError::UnknownSymbol(name.to_string()));
                    }
                }
                let point: Vec<Option<Scalar>> = vars
                    .names()
                    .iter()
                    .map(|n| {
                        assignment
                            .iter()
                            .find(|(m, _)| m == n)
                            .map(|(_, v)| v.clone())
                    })
                    .collect();
                f.eval_at(&point, target)
            }
            other if target.contains(other) => Ok(other.clone()),
            Scalar::Rational(q) => target.from_rational(q),
            _ => Err(ScalarError::MixedFields),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "{}", poly::fmt_rational(q)),
            Scalar::Prime(x) => write!(f, "{x}"),
            Scalar::Function(r) => write!(f, "{r}"),
        }
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs)
                    .unwrap_or_else(|e| panic!("scalar {}: {e}", stringify!($method)))
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);
binop!(Div, div, checked_div);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_sum() {
        let a = Scalar::rational(1, 3);
        let b = Scalar::rational(1, 6);
        assert_eq!(&a + &b, Scalar::rational(1, 2));
    }

    #[test]
    fn prime_product() {
        let f = Field::prime(5).unwrap();
        assert_eq!(f.from_integer(3) * f.from_integer(2), f.one());
    }

    #[test]
    fn function_inverse() {
        let f = Field::skew_symbols();
        let a = f.symbol("alpha").unwrap();
        let b = f.symbol("beta").unwrap();
        let d = &a - &b;
        assert!((&d * d.inv().unwrap()).is_one());
    }

    #[test]
    fn mixed_fields_are_reported() {
        let q = Field::Rational.one();
        let p = Field::prime(5).unwrap().one();
        assert_eq!(q.checked_add(&p), Err(ScalarError::MixedFields));
        let p7 = Field::prime(7).unwrap().one();
        assert_eq!(p.checked_mul(&p7), Err(ScalarError::MixedFields));
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(Field::Rational.zero().inv(), Err(ScalarError::DivisionByZero));
        let f = Field::skew_symbols();
        assert_eq!(f.zero().inv(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn bad_fields() {
        assert_eq!(Field::prime(2), Err(ScalarError::CharacteristicTwo));
        assert_eq!(Field::prime(9), Err(ScalarError::NotPrime(9)));
        assert!(Field::function(&["a", "a"]).is_err());
        assert!(Field::function(&["1a"]).is_err());
    }

    #[test]
    fn eval_requires_occurring_symbols() {
        let f = Field::skew_symbols();
        let beta = f.symbol("beta").unwrap();
        let l1 = f.symbol("l1").unwrap();
        let gamma = &beta - &l1;
        let v = gamma
            .eval(
                &[("beta", Scalar::rational(2, 3)), ("l1", Scalar::rational(5, 12))],
                &Field::Rational,
            )
            .unwrap();
        assert_eq!(v, Scalar::rational(1, 4));
        let err = gamma.eval(&[("beta", Scalar::rational(2, 3))], &Field::Rational);
        assert_eq!(err, Err(ScalarError::UnboundSymbol("l1".into())));
        let seven = f.from_integer(7);
        assert_eq!(seven.eval(&[], &Field::Rational).unwrap(), Scalar::rational(7, 1));
    }

    #[test]
    fn eval_reports_vanishing_denominator() {
        let f = Field::skew_symbols();
        let a = f.symbol("alpha").unwrap();
        let b = f.symbol("beta").unwrap();
        let g = (&a - &b).inv().unwrap();
        let one = Scalar::rational(1, 1);
        let err = g.eval(&[("alpha", one.clone()), ("beta", one)], &Field::Rational);
        assert_eq!(err, Err(ScalarError::DenominatorVanishes));
    }
}
