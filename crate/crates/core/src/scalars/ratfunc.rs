//! Rational functions `num / den` over `Q(x_1, ..., x_n)`.
//!
//! Representatives are not reduced by a polynomial gcd. Equality is decided
//! by cross-multiplication, which is exact for any representative. To keep
//! coefficients from growing, every result is lightly normalized: constant
//! denominators are folded away, exact quotients are taken when the
//! denominator divides the numerator, common monomial factors are cancelled
//! and the denominator is made monic.

use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::One;

use super::poly::{same_vars, MultiPoly, Vars};
use super::{Field, Scalar, ScalarError};

#[derive(Clone, Debug)]
pub struct RationalFunction {
    num: MultiPoly,
    den: MultiPoly,
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        same_vars(self.vars(), other.vars())
            && self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl Eq for RationalFunction {}

impl RationalFunction {
    /// Builds `num / den`. Fails when `den` is the zero polynomial.
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        assert!(
            same_vars(num.vars(), den.vars()),
            "numerator and denominator over different variables"
        );
        Ok(Self::normalized(num, den))
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        let den = MultiPoly::one(p.vars());
        Self { num: p, den }
    }

    pub fn constant(vars: &Arc<Vars>, c: BigRational) -> Self {
        Self::from_poly(MultiPoly::constant(vars, c))
    }

    pub fn var(vars: &Arc<Vars>, i: usize) -> Self {
        Self::from_poly(MultiPoly::var(vars, i))
    }

    pub fn vars(&self) -> &Arc<Vars> {
        self.num.vars()
    }

    pub fn numerator(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denominator(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(n / d)
    }

    /// `Some(p)` when the function is a polynomial in this representation.
    pub fn as_poly(&self) -> Option<&MultiPoly> {
        self.den.as_constant().filter(|d| d.is_one()).map(|_| &self.num)
    }

    fn normalized(num: MultiPoly, den: MultiPoly) -> Self {
        let vars = num.vars().clone();
        if num.is_zero() {
            return Self {
                num,
                den: MultiPoly::one(&vars),
            };
        }
        if let Some(c) = den.as_constant() {
            return Self {
                num: num.scale(&c.recip()),
                den: MultiPoly::one(&vars),
            };
        }
        if let Some(q) = num.div_exact(&den) {
            return Self::from_poly(q);
        }
        let mut num = num;
        let mut den = den;
        let mn = num.monomial_content();
        let md = den.monomial_content();
        let common: Vec<u32> = mn.iter().zip(&md).map(|(a, b)| *a.min(b)).collect();
        if common.iter().any(|&e| e > 0) {
            num = num.div_monomial(&common);
            den = den.div_monomial(&common);
        }
        let lc = den.leading_term().map(|(_, c)| c.clone()).unwrap();
        if !lc.is_one() {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Self { num, den }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::normalized(self.num.add(&other.num), self.den.clone());
        }
        if let Some(k) = other.den.div_exact(&self.den) {
            return Self::normalized(self.num.mul(&k).add(&other.num), other.den.clone());
        }
        if let Some(k) = self.den.div_exact(&other.den) {
            return Self::normalized(self.num.add(&other.num.mul(&k)), self.den.clone());
        }
        Self::normalized(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn neg(&self) -> Self {
        Self {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        // cancel whole-denominator factors across the product when possible
        let (n1, d2) = cancel(&self.num, &other.den);
        let (n2, d1) = cancel(&other.num, &self.den);
        Self::normalized(n1.mul(&n2), d1.mul(&d2))
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.num.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::normalized(self.num.scale(c), self.den.clone())
    }

    pub fn is_free_of(&self, i: usize) -> bool {
        self.num.degree_in(i) == 0 && self.den.degree_in(i) == 0
    }

    /// Evaluates with one optional value per variable, inside `target`.
    pub fn eval_at(&self, point: &[Option<Scalar>], target: &Field) -> Result<Scalar, ScalarError> {
        let n = self.num.eval(point, target)?;
        let d = self.den.eval(point, target)?;
        if d.is_zero() {
            return Err(ScalarError::DenominatorVanishes);
        }
        n.checked_div(&d)
    }

    /// Substitutes `var -> value` for each listed pair, staying in the same
    /// function field. Values may themselves be rational functions.
    pub fn substitute(&self, subs: &[(usize, RationalFunction)]) -> Result<Self, ScalarError> {
        let vars = self.vars().clone();
        let field = Field::Function(vars.clone());
        let point: Vec<Option<Scalar>> = (0..vars.len())
            .map(|i| {
                let v = subs
                    .iter()
                    .find(|(j, _)| *j == i)
                    .map(|(_, f)| f.clone())
                    .unwrap_or_else(|| RationalFunction::var(&vars, i));
                Some(Scalar::Function(v))
            })
            .collect();
        match self.eval_at(&point, &field)? {
            Scalar::Function(f) => Ok(f),
            _ => unreachable!("function field evaluation stays in the function field"),
        }
    }
}

fn cancel(num: &MultiPoly, den: &MultiPoly) -> (MultiPoly, MultiPoly) {
    if den.as_constant().is_none() {
        if let Some(q) = num.div_exact(den) {
            return (q, MultiPoly::one(den.vars()));
        }
    }
    (num.clone(), den.clone())
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.as_constant().is_some_and(|d| d.is_one()) {
            if self.num.num_terms() > 1 {
                write!(f, "({})", self.num)
            } else {
                write!(f, "{}", self.num)
            }
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> (Arc<Vars>, RationalFunction, RationalFunction) {
        let v = Vars::new(&["alpha", "beta"]);
        let a = RationalFunction::var(&v, 0);
        let b = RationalFunction::var(&v, 1);
        (v, a, b)
    }

    #[test]
    fn inverse_of_difference() {
        let (v, a, b) = ctx();
        let d = a.sub(&b);
        let one = RationalFunction::constant(&v, BigRational::one());
        assert_eq!(d.mul(&d.inv().unwrap()), one);
        assert!(d.mul(&d.inv().unwrap()).as_poly().is_some());
    }

    #[test]
    fn equality_by_cross_multiplication() {
        let (_, a, b) = ctx();
        // (a^2 - b^2)/(a - b) vs a + b: unreduced representative still equal
        let f = RationalFunction {
            num: a.num.mul(&a.num).sub(&b.num.mul(&b.num)),
            den: a.num.sub(&b.num),
        };
        assert_eq!(f, a.add(&b));
        assert_ne!(a, b);
    }

    #[test]
    fn zero_denominator_is_rejected() {
        let (v, a, _) = ctx();
        assert!(matches!(
            RationalFunction::new(a.num.clone(), MultiPoly::zero(&v)),
            Err(ScalarError::DivisionByZero)
        ));
    }

    #[test]
    fn substitution_composes() {
        let (v, a, b) = ctx();
        // f = a / (a - b), a -> 2b gives 2
        let f = a.div(&a.sub(&b)).unwrap();
        let two_b = b.scale(&BigRational::from_integer(2.into()));
        let g = f.substitute(&[(0, two_b)]).unwrap();
        assert_eq!(g, RationalFunction::constant(&v, BigRational::from_integer(2.into())));
    }
}
