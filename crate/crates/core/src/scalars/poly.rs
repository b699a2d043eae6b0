//! Sparse multivariate polynomials over the rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Field, Scalar, ScalarError};

/// An ordered universe of indeterminates. Polynomials over different
/// universes never mix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vars {
    names: Vec<String>,
}

impl Vars {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Arc<Self> {
        Arc::new(Self {
            names: names.iter().map(|s| s.as_ref().to_string()).collect(),
        })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

pub(crate) fn same_vars(a: &Arc<Vars>, b: &Arc<Vars>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// Exponent vector, one entry per variable of the universe.
pub type Monomial = Vec<u32>;

/// A polynomial in `Q[x_1, ..., x_n]`, stored as a map from exponent vectors
/// to nonzero coefficients. The map order is lexicographic on exponents, so
/// the last entry is the lex-leading term.
#[derive(Clone, Debug)]
pub struct MultiPoly {
    vars: Arc<Vars>,
    terms: BTreeMap<Monomial, BigRational>,
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        same_vars(&self.vars, &other.vars) && self.terms == other.terms
    }
}

impl Eq for MultiPoly {}

impl MultiPoly {
    pub fn zero(vars: &Arc<Vars>) -> Self {
        Self {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &Arc<Vars>, c: BigRational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    pub fn one(vars: &Arc<Vars>) -> Self {
        Self::constant(vars, BigRational::one())
    }

    /// The indeterminate with index `i`.
    pub fn var(vars: &Arc<Vars>, i: usize) -> Self {
        assert!(i < vars.len(), "variable index out of range");
        let mut m = vec![0; vars.len()];
        m[i] = 1;
        let mut p = Self::zero(vars);
        p.terms.insert(m, BigRational::one());
        p
    }

    pub fn from_terms(
        vars: &Arc<Vars>,
        terms: impl IntoIterator<Item = (Monomial, BigRational)>,
    ) -> Self {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            assert_eq!(m.len(), vars.len(), "exponent vector length mismatch");
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> &Arc<Vars> {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some(c)` when the polynomial is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.iter().all(|&e| e == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check_vars(&self, other: &Self) {
        assert!(
            same_vars(&self.vars, &other.vars),
            "polynomials over different variable universes"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_vars(other);
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(m.clone(), c.clone());
        }
        r
    }

    pub fn neg(&self) -> Self {
        Self {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_vars(other);
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(m.clone(), -c);
        }
        r
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        Self {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_vars(other);
        let mut r = Self::zero(&self.vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m: Monomial = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                r.add_term(m, c1 * c2);
            }
        }
        r
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(&self.vars);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Lex-leading term.
    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    /// Highest exponent of variable `i` appearing in any term.
    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m[i]).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| m.iter().sum())
            .max()
            .unwrap_or(0)
    }

    /// Variables that actually occur with a positive exponent.
    pub fn occurring_vars(&self) -> Vec<usize> {
        (0..self.vars.len())
            .filter(|&i| self.terms.keys().any(|m| m[i] > 0))
            .collect()
    }

    /// Splits the polynomial as `sum_k c_k x_i^k` and returns the `c_k`,
    /// which do not involve `x_i`.
    pub fn coefficients_in(&self, i: usize) -> Vec<MultiPoly> {
        let deg = self.degree_in(i) as usize;
        let mut out = vec![Self::zero(&self.vars); deg + 1];
        for (m, c) in &self.terms {
            let k = m[i] as usize;
            let mut m2 = m.clone();
            m2[i] = 0;
            out[k].add_term(m2, c.clone());
        }
        out
    }

    /// Exact division. Returns `None` unless `divisor` divides `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        self.check_vars(divisor);
        let (lm, lc) = divisor.leading_term()?;
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.vars);
        while let Some((m, c)) = rem.leading_term() {
            if m.iter().zip(lm).any(|(a, b)| a < b) {
                return None;
            }
            let qm: Monomial = m.iter().zip(lm).map(|(a, b)| a - b).collect();
            let qc = c / lc;
            let mut t = Self::zero(&self.vars);
            t.add_term(qm, qc);
            rem = rem.sub(&divisor.mul(&t));
            quot = quot.add(&t);
        }
        Some(quot)
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return vec![0; self.vars.len()];
        };
        let mut g = first.clone();
        for m in it {
            for (a, b) in g.iter_mut().zip(m) {
                *a = (*a).min(*b);
            }
        }
        g
    }

    pub fn div_monomial(&self, m: &Monomial) -> Self {
        Self {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.iter().zip(m).map(|(a, b)| a - b).collect(), c.clone()))
                .collect(),
        }
    }

    /// Positive rational `c` such that `self / c` has coprime integer
    /// coefficients.
    pub fn content(&self) -> BigRational {
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        if num_gcd.is_zero() {
            BigRational::one()
        } else {
            BigRational::new(num_gcd.abs(), den_lcm)
        }
    }

    /// Evaluates at a point with one optional value per variable, inside
    /// `target`. Only variables that occur need a value.
    pub fn eval(&self, point: &[Option<Scalar>], target: &Field) -> Result<Scalar, ScalarError> {
        let n = self.vars.len();
        assert_eq!(point.len(), n, "evaluation point has wrong length");
        // powers[i][k] = x_i^k, filled on demand
        let mut powers: Vec<Vec<Scalar>> = vec![Vec::new(); n];
        let mut acc = target.zero();
        for (m, c) in &self.terms {
            let mut term = target.from_rational(c)?;
            for (i, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let x = point[i]
                    .as_ref()
                    .ok_or_else(|| ScalarError::UnboundSymbol(self.vars.names[i].clone()))?;
                let pw = &mut powers[i];
                if pw.is_empty() {
                    pw.push(target.one());
                }
                while pw.len() <= e as usize {
                    let next = pw.last().unwrap().checked_mul(x)?;
                    pw.push(next);
                }
                term = term.checked_mul(&pw[e as usize])?;
            }
            acc = acc.checked_add(&term)?;
        }
        Ok(acc)
    }
}

fn fmt_monomial(vars: &Vars, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(vars.names[i].clone()),
            _ => parts.push(format!("{}^{}", vars.names[i], e)),
        }
    }
    parts.join("*")
}

pub(crate) fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for MultiPoly {
    /// Terms are printed lex-leading first in the coefficient grammar, so the
    /// output parses back to the same polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = fmt_monomial(&self.vars, m);
            if mono.is_empty() {
                write!(f, "{}", fmt_rational(&a))?;
            } else if a.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{}", fmt_rational(&a), mono)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn xy() -> (Arc<Vars>, MultiPoly, MultiPoly) {
        let v = Vars::new(&["x", "y"]);
        let x = MultiPoly::var(&v, 0);
        let y = MultiPoly::var(&v, 1);
        (v, x, y)
    }

    #[test]
    fn difference_of_squares_divides() {
        let (_, x, y) = xy();
        let f = x.mul(&x).sub(&y.mul(&y));
        let g = x.sub(&y);
        assert_eq!(f.div_exact(&g).unwrap(), x.add(&y));
        assert!(f.div_exact(&x).is_none());
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let (_, x, _) = xy();
        assert!(x.sub(&x).is_zero());
        assert_eq!(x.sub(&x).num_terms(), 0);
    }

    #[test]
    fn display_is_lex_leading_first() {
        let (v, x, y) = xy();
        let f = x
            .mul(&x)
            .scale(&q(3, 1))
            .sub(&y.scale(&q(1, 2)))
            .add(&MultiPoly::constant(&v, q(7, 1)));
        assert_eq!(f.to_string(), "3*x^2 - 1/2*y + 7");
        assert_eq!(y.neg().to_string(), "-y");
    }

    #[test]
    fn coefficients_in_variable() {
        let (_, x, y) = xy();
        // (y + 1) x^2 + 2 y
        let one = MultiPoly::one(x.vars());
        let f = y.add(&one).mul(&x.mul(&x)).add(&y.scale(&q(2, 1)));
        let cs = f.coefficients_in(0);
        assert_eq!(cs.len(), 3);
        assert_eq!(cs[0], y.scale(&q(2, 1)));
        assert!(cs[1].is_zero());
        assert_eq!(cs[2], y.add(&one));
    }

    #[test]
    fn content_and_monomial_content() {
        let (_, x, y) = xy();
        let f = x.mul(&y).scale(&q(2, 3)).add(&x.mul(&x).scale(&q(4, 9)));
        assert_eq!(f.content(), q(2, 9));
        assert_eq!(f.monomial_content(), vec![1, 0]);
    }
}
