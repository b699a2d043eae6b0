//! Arithmetic in the prime field `F_p` for odd primes `p`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;

/// An element of `F_p`, stored as its canonical residue in `[0, p)`.
///
/// The modulus travels with the value so that mixing two different prime
/// fields can be detected instead of silently producing garbage.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeFieldElement {
    residue: u64,
    modulus: u64,
}

#[allow(clippy::should_implement_trait)]
impl PrimeFieldElement {
    /// Reduces `value` modulo `modulus`. The modulus is assumed to have been
    /// validated by [`crate::scalars::Field::prime`].
    pub fn new(value: i64, modulus: u64) -> Self {
        let m = modulus as i128;
        let r = (value as i128).rem_euclid(m) as u64;
        Self { residue: r, modulus }
    }

    pub fn from_bigint(value: &BigInt, modulus: u64) -> Self {
        let r = value.mod_floor(&BigInt::from(modulus));
        Self {
            residue: r.to_u64().expect("residue fits in u64"),
            modulus,
        }
    }

    /// Maps a rational into `F_p`; `None` when the denominator is divisible by `p`.
    pub fn from_rational(value: &BigRational, modulus: u64) -> Option<Self> {
        let num = Self::from_bigint(value.numer(), modulus);
        let den = Self::from_bigint(value.denom(), modulus);
        den.inv().map(|d| num.mul(d))
    }

    pub fn residue(self) -> u64 {
        self.residue
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.residue == 0
    }

    pub fn add(self, other: Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        let s = (self.residue as u128 + other.residue as u128) % self.modulus as u128;
        Self {
            residue: s as u64,
            modulus: self.modulus,
        }
    }

    pub fn neg(self) -> Self {
        if self.residue == 0 {
            self
        } else {
            Self {
                residue: self.modulus - self.residue,
                modulus: self.modulus,
            }
        }
    }

    pub fn sub(self, other: Self) -> Self {
        self.add(other.neg())
    }

    pub fn mul(self, other: Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        let p = (self.residue as u128 * other.residue as u128) % self.modulus as u128;
        Self {
            residue: p as u64,
            modulus: self.modulus,
        }
    }

    pub fn pow(self, mut exp: u64) -> Self {
        let mut base = self;
        let mut acc = Self::new(1, self.modulus);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse by Fermat's little theorem.
    pub fn inv(self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.pow(self.modulus - 2))
        }
    }
}

impl fmt::Display for PrimeFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

/// Deterministic trial division; moduli in this crate are small.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
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
    fn three_times_two_in_f5() {
        let a = PrimeFieldElement::new(3, 5);
        let b = PrimeFieldElement::new(2, 5);
        assert_eq!(a.mul(b).residue(), 1);
    }

    #[test]
    fn rationals_map_through_inverse() {
        // 1/3 = 2 and 2/3 = 4 in F_5
        let third = BigRational::new(1.into(), 3.into());
        let two_thirds = BigRational::new(2.into(), 3.into());
        assert_eq!(PrimeFieldElement::from_rational(&third, 5).unwrap().residue(), 2);
        assert_eq!(PrimeFieldElement::from_rational(&two_thirds, 5).unwrap().residue(), 4);
        let fifth = BigRational::new(1.into(), 5.into());
        assert!(PrimeFieldElement::from_rational(&fifth, 5).is_none());
    }

    #[test]
    fn negative_values_reduce() {
        assert_eq!(PrimeFieldElement::new(-1, 7).residue(), 6);
        assert_eq!(PrimeFieldElement::new(-14, 7).residue(), 0);
    }

    #[test]
    fn inverses_in_f7() {
        for v in 1..7 {
            let x = PrimeFieldElement::new(v, 7);
            assert_eq!(x.mul(x.inv().unwrap()).residue(), 1);
        }
        assert!(PrimeFieldElement::new(0, 7).inv().is_none());
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }
}
