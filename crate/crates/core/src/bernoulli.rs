//! Bernoulli numbers and polynomials, and poly-Bernoulli numbers and
//! polynomials `B_n^(p)(x)` for every integer index `p`.
//!
//! Conventions: `B_1 = -1/2` (generating function `t/(e^t - 1)`), while
//! `B_1^(1) = +1/2`. The two families are linked by `B_n^(1)(x - 1) = B_n(x)`;
//! nothing here treats `B_n^(1)` and `B_n` as interchangeable at `n = 1`.

use std::sync::{OnceLock, RwLock};

use num_traits::{One, Zero};

use crate::arith::{binomial, factorial, int, pow_int, sign, ExactRational};
use crate::memo::Memo;
use crate::polybell::RationalPolynomial;
use crate::stirling::{stirling2, stirling2_r};

/// Growable cache of `B_0, B_1, ...`.
#[derive(Debug, Clone)]
pub struct BernoulliCache {
    numbers: Vec<ExactRational>,
}

impl Default for BernoulliCache {
    fn default() -> Self {
        Self::new()
    }
}

impl BernoulliCache {
    pub fn new() -> Self {
        BernoulliCache {
            numbers: vec![ExactRational::one()],
        }
    }

    /// Extends the cache through `B_n` using `Σ_{k=0}^{m} C(m+1, k) B_k = 0`.
    pub fn grow_to(&mut self, n: u32) {
        while self.numbers.len() <= n as usize {
            let m = self.numbers.len() as i64;
            let s: ExactRational = self
                .numbers
                .iter()
                .enumerate()
                .map(|(k, b)| ExactRational::from_integer(binomial(m + 1, k as i64)) * b)
                .sum();
            self.numbers.push(-s / int(m + 1));
        }
    }

    pub fn get(&mut self, n: u32) -> ExactRational {
        self.grow_to(n);
        self.numbers[n as usize].clone()
    }

    pub fn numbers(&self) -> &[ExactRational] {
        &self.numbers
    }
}

fn shared_cache() -> &'static RwLock<BernoulliCache> {
    static CACHE: OnceLock<RwLock<BernoulliCache>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(BernoulliCache::new()))
}

/// `B_n` with `B_1 = -1/2`.
pub fn bernoulli_number(n: u32) -> ExactRational {
    {
        let cache = shared_cache().read().unwrap_or_else(|e| e.into_inner());
        if let Some(b) = cache.numbers().get(n as usize) {
            return b.clone();
        }
    }
    shared_cache()
        .write()
        .unwrap_or_else(|e| e.into_inner())
        .get(n)
}

/// `B_n(x) = Σ_k C(n, k) B_k x^(n-k)`.
pub fn bernoulli_polynomial(n: u32) -> RationalPolynomial {
    static POLYS: Memo<u32, RationalPolynomial> = Memo::new();
    POLYS.get_or_insert_with(n, || binomial_transform_poly(n, bernoulli_number))
}

fn binomial_transform_poly(n: u32, coeff: impl Fn(u32) -> ExactRational) -> RationalPolynomial {
    RationalPolynomial::new(
        (0..=n)
            .map(|d| {
                let k = n - d;
                ExactRational::from_integer(binomial(n as i64, k as i64)) * coeff(k)
            })
            .collect(),
    )
}

/// Poly-Bernoulli number `B_n^(p) = (-1)^n Σ_k {n, k} (-1)^k k! / (k+1)^p`,
/// for any integer `p`.
pub fn poly_bernoulli_number(n: u32, p: i64) -> ExactRational {
    static NUMBERS: Memo<(u32, i64), ExactRational> = Memo::new();
    NUMBERS.get_or_insert_with((n, p), || {
        let s: ExactRational = (0..=n)
            .map(|k| {
                sign(k as i64)
                    * ExactRational::from_integer(stirling2(n, k) * factorial(k))
                    * pow_int(&int(k + 1), -p)
            })
            .sum();
        sign(n as i64) * s
    })
}

/// `B_n^(p)(x) = Σ_k C(n, k) B_k^(p) x^(n-k)`.
pub fn poly_bernoulli_polynomial(n: u32, p: i64) -> RationalPolynomial {
    static POLYS: Memo<(u32, i64), RationalPolynomial> = Memo::new();
    POLYS.get_or_insert_with((n, p), || {
        binomial_transform_poly(n, |k| poly_bernoulli_number(k, p))
    })
}

/// `B_n^(-p)(q) = Σ_{j=1}^{p} {p, j} (-1)^(p+j) j! (j + q + 1)^n`.
///
/// The sum is empty for `p = 0`, where it returns 0 even though
/// `B_n^(0)(q) = (q + 1)^n`; the closed form is meant for `p ≥ 1`.
pub fn poly_bernoulli_neg_closed(n: u32, p: u32, q: u32) -> ExactRational {
    (1..=p)
        .map(|j| {
            sign((p + j) as i64)
                * ExactRational::from_integer(
                    stirling2(p, j) * factorial(j) * num_bigint::BigInt::from(j + q + 1).pow(n),
                )
        })
        .sum()
}

/// `B_n^(-p)(q) = Σ_{j=0}^{min(n,p)} (j!)^2 {p+1, j+1} {n+q+1, j+q+1}_{q+1}`.
pub fn poly_bernoulli_neg_stirling(n: u32, p: u32, q: u32) -> ExactRational {
    let s = (0..=n.min(p))
        .map(|j| {
            let f = factorial(j);
            &f * &f * stirling2(p + 1, j + 1) * stirling2_r(n, j, q + 1)
        })
        .fold(num_bigint::BigInt::zero(), |a, b| a + b);
    ExactRational::from_integer(s)
}
