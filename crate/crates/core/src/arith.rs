//! Exact rational scalars, factorial-type products and the rational
//! congruence used by the divisibility checks.
//!
//! A congruence `a/b ≡ c/d (mod m)` between rationals means `m | (ad - bc)`
//! with both sides in lowest terms. No coprimality between `m` and the
//! denominators is assumed.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary precision rational, always stored reduced with a positive
/// denominator. `Display` renders `num/den`, or just `num` for integers.
pub type ExactRational = BigRational;

pub fn rat(numer: i64, denom: i64) -> ExactRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int<T: Into<BigInt>>(value: T) -> ExactRational {
    BigRational::from_integer(value.into())
}

/// `base^exp` for any integer exponent. Panics on `0^exp` with `exp < 0`.
pub fn pow_int(base: &ExactRational, exp: i64) -> ExactRational {
    let magnitude = exp.unsigned_abs();
    let mut acc = ExactRational::one();
    let mut sq = base.clone();
    let mut e = magnitude;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &sq;
        }
        e >>= 1;
        if e > 0 {
            sq = &sq * &sq;
        }
    }
    if exp < 0 {
        acc.recip()
    } else {
        acc
    }
}

/// `(-1)^k` as a rational.
pub fn sign(k: i64) -> ExactRational {
    if k.rem_euclid(2) == 0 {
        ExactRational::one()
    } else {
        -ExactRational::one()
    }
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// A rising factorial `base (base+1) ... (base+length-1)` together with its value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RisingFactorial {
    pub base: ExactRational,
    pub length: u32,
    pub value: ExactRational,
}

impl RisingFactorial {
    pub fn new(base: ExactRational, length: u32) -> Self {
        let value = rising_factorial(&base, length);
        RisingFactorial {
            base,
            length,
            value,
        }
    }

    /// Extends the product by one factor: `x^(n+1) = x^(n) (x + n)`.
    pub fn step(&self) -> Self {
        let value = &self.value * (&self.base + int(self.length));
        RisingFactorial {
            base: self.base.clone(),
            length: self.length + 1,
            value,
        }
    }
}

pub fn rising_factorial(base: &ExactRational, length: u32) -> ExactRational {
    (0..length).fold(ExactRational::one(), |acc, j| acc * (base + int(j)))
}

pub fn falling_factorial(base: &ExactRational, length: u32) -> ExactRational {
    (0..length).fold(ExactRational::one(), |acc, j| acc * (base - int(j)))
}

/// Generalized binomial `upper (upper-1) ... (upper-lower+1) / lower!`.
pub fn binomial_general(upper: &ExactRational, lower: u32) -> ExactRational {
    falling_factorial(upper, lower) / int(factorial(lower))
}

/// Integer binomial coefficient with an arbitrary integer upper index.
/// A negative lower index gives 0.
pub fn binomial(upper: i64, lower: i64) -> BigInt {
    if lower < 0 {
        return BigInt::zero();
    }
    let lower = lower as u32;
    if upper >= 0 && (upper as u64) < lower as u64 {
        return BigInt::zero();
    }
    // Symmetric shortcut for ordinary coefficients.
    let k = if upper >= 0 {
        lower.min((upper as u64 - lower as u64) as u32)
    } else {
        lower
    };
    let mut acc = BigInt::one();
    for j in 0..k {
        acc *= BigInt::from(upper) - j;
        acc /= j + 1;
    }
    acc
}

/// A modulus for rational congruences. Always at least 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Modulus(u64);

impl Modulus {
    pub fn new(m: u64) -> Result<Self> {
        if m < 2 {
            Err(Error::InvalidModulus(m))
        } else {
            Ok(Modulus(m))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

/// `x ≡ y (mod m)` in the sense `m | (a d - b c)` for `x = a/b`, `y = c/d`.
pub fn rational_congruent(x: &ExactRational, y: &ExactRational, m: Modulus) -> bool {
    let cross = x.numer() * y.denom() - x.denom() * y.numer();
    cross.is_multiple_of(&BigInt::from(m.get()))
}

/// True when the reduced denominator of `x` is not divisible by `m`.
pub fn is_m_integer(x: &ExactRational, m: Modulus) -> bool {
    !x.denom().is_multiple_of(&BigInt::from(m.get()))
}

pub fn is_integer(x: &ExactRational) -> bool {
    x.denom().is_one()
}

/// Deterministic trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
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

pub fn primes_up_to(limit: u64) -> Vec<u64> {
    (2..=limit).filter(|&n| is_prime(n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(v: u64) -> Modulus {
        Modulus::new(v).unwrap()
    }

    #[test]
    fn binomial_general_examples() {
        assert_eq!(binomial_general(&int(4), 2), int(6));
        assert_eq!(binomial_general(&rat(7, 3), 0), int(1));
        assert_eq!(binomial_general(&int(-2), 3), int(-4));
        assert_eq!(binomial_general(&int(2), 5), int(0));
        assert_eq!(binomial_general(&rat(1, 2), 2), rat(-1, 8));
    }

    #[test]
    fn integer_binomial_matches_general() {
        for upper in -8i64..=12 {
            for lower in -2i64..=10 {
                let expected = if lower < 0 {
                    int(0)
                } else {
                    binomial_general(&int(upper), lower as u32)
                };
                assert_eq!(int(binomial(upper, lower)), expected, "C({upper},{lower})");
            }
        }
    }

    #[test]
    fn congruence_examples() {
        assert!(rational_congruent(&int(7), &int(1), m(2)));
        assert!(rational_congruent(&rat(77, 4), &int(2), m(3)));
        assert!(!rational_congruent(&rat(77, 4), &int(1), m(3)));
        assert!(rational_congruent(&rat(5, 3), &rat(5, 3), m(3)));
    }

    #[test]
    fn modulus_below_two_rejected() {
        assert_eq!(Modulus::new(1), Err(Error::InvalidModulus(1)));
        assert_eq!(Modulus::new(0), Err(Error::InvalidModulus(0)));
    }

    #[test]
    fn m_integer_examples() {
        assert!(is_m_integer(&rat(1, 6), m(5)));
        assert!(!is_m_integer(&rat(1, 6), m(3)));
        // B_4 = -1/30
        assert!(is_m_integer(&rat(-1, 30), m(7)));
        assert!(!is_m_integer(&rat(-1, 30), m(5)));
    }

    #[test]
    fn rising_factorial_empty_and_step() {
        assert_eq!(rising_factorial(&int(5), 0), int(1));
        assert_eq!(rising_factorial(&int(2), 4), int(120));
        let r = RisingFactorial::new(rat(1, 2), 3);
        assert_eq!(r.value, rat(15, 8));
        assert_eq!(r.step().value, rat(105, 16));
    }

    #[test]
    fn primes() {
        assert_eq!(
            primes_up_to(31),
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]
        );
        assert!(!is_prime(1));
        assert!(!is_prime(91));
    }

    #[test]
    fn pow_int_negative_exponent() {
        assert_eq!(pow_int(&int(3), -2), rat(1, 9));
        assert_eq!(pow_int(&rat(-2, 3), 3), rat(-8, 27));
        assert_eq!(pow_int(&int(0), 0), int(1));
    }

    fn small_rational() -> impl Strategy<Value = ExactRational> {
        (-60i64..60, 1i64..20).prop_map(|(a, b)| rat(a, b))
    }

    proptest! {
        #[test]
        fn congruence_is_equivalence_on_m_integers(
            x in small_rational(), y in small_rational(), z in small_rational(),
            modulus in prop::sample::select(vec![2u64, 3, 5, 7, 11, 13]),
        ) {
            let md = m(modulus);
            prop_assume!(is_m_integer(&x, md) && is_m_integer(&y, md) && is_m_integer(&z, md));
            prop_assert!(rational_congruent(&x, &x, md));
            prop_assert_eq!(rational_congruent(&x, &y, md), rational_congruent(&y, &x, md));
            if rational_congruent(&x, &y, md) && rational_congruent(&y, &z, md) {
                prop_assert!(rational_congruent(&x, &z, md));
            }
        }

        #[test]
        fn integer_congruence_is_divisibility(a in -500i64..500, b in -500i64..500, modulus in 2u64..40) {
            let expected = (a - b).rem_euclid(modulus as i64) == 0;
            prop_assert_eq!(rational_congruent(&int(a), &int(b), m(modulus)), expected);
        }

        #[test]
        fn pascal_rule(upper in -30i64..30, lower in 1u32..12) {
            let u = int(upper);
            let lhs = binomial_general(&u, lower);
            let rhs = binomial_general(&(&u - int(1)), lower) + binomial_general(&(&u - int(1)), lower - 1);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn pascal_rule_rational(num in -40i64..40, den in 1i64..9, lower in 1u32..8) {
            let u = rat(num, den);
            let lhs = binomial_general(&u, lower);
            let rhs = binomial_general(&(&u - int(1)), lower) + binomial_general(&(&u - int(1)), lower - 1);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn rising_factorial_recurrence(num in -30i64..30, den in 1i64..7, n in 0u32..15) {
            let x = rat(num, den);
            prop_assert_eq!(
                rising_factorial(&x, n + 1),
                rising_factorial(&x, n) * (&x + int(n))
            );
        }
    }
}
