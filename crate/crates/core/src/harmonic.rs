//! Harmonic numbers and their generalizations, hyper-sums of powers, and the
//! hyperharmonic numbers viewed as polynomials in their order.
//!
//! `H_n^(p,r)` is the generalized hyperharmonic number: `H_n^(p,0) = 1/n^p`
//! and `H_n^(p,r) = Σ_{k=1}^{n} H_k^(p,r-1)`. It specializes to
//! `H_n^(p) = H_n^(p,1)` and `h_n^(r) = H_n^(1,r)`. For negative `p` it
//! gives the hyper-sums: `H_n^(-p,q+1) = S_p^(q)(n)`.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{binomial, factorial, int, pow_int, sign, ExactRational};
use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::polybell::RationalPolynomial;
use crate::stirling::stirling2;

/// `H_n^(p) = Σ_{k=1}^{n} k^(-p)` for any integer `p`.
pub fn harmonic_generalized(n: u32, p: i64) -> ExactRational {
    (1..=n).map(|k| pow_int(&int(k), -p)).sum()
}

/// `S_p(n) = 1^p + ... + n^p` for any integer `p`; `S_{-1}(n) = H_n`.
pub fn power_sum(p: i64, n: u32) -> ExactRational {
    harmonic_generalized(n, -p)
}

/// Hyperharmonic number `h_n^(r)`, `r ≥ 1`, from
/// `h_n^(r) = C(n+r-1, r-1) (H_{n+r-1} - H_{r-1})`.
pub fn hyperharmonic(n: u32, r: u32) -> Result<ExactRational> {
    if r == 0 {
        return Err(Error::NonPositive("hyperharmonic order r"));
    }
    let top = n + r - 1;
    let weight = ExactRational::from_integer(binomial(top as i64, r as i64 - 1));
    Ok(weight * (harmonic_generalized(top, 1) - harmonic_generalized(r - 1, 1)))
}

type RowStore = RwLock<HashMap<(i64, u32), Vec<ExactRational>>>;

fn hyperharmonic_rows() -> &'static RowStore {
    static ROWS: OnceLock<RowStore> = OnceLock::new();
    ROWS.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `H_n^(p,r)` by iterated partial sums, memoized per `(p, r)`.
pub fn gen_hyperharmonic(n: u32, p: i64, r: u32) -> ExactRational {
    {
        let rows = hyperharmonic_rows()
            .read()
            .unwrap_or_else(|e| e.into_inner());
        if let Some(v) = rows.get(&(p, r)).and_then(|row| row.get(n as usize)) {
            return v.clone();
        }
    }
    let mut rows = hyperharmonic_rows()
        .write()
        .unwrap_or_else(|e| e.into_inner());
    let len = n as usize + 1;
    for level in 0..=r {
        let have = rows.get(&(p, level)).map_or(0, Vec::len);
        if have >= len {
            continue;
        }
        let mut row = rows.remove(&(p, level)).unwrap_or_default();
        let prev = if level == 0 {
            None
        } else {
            rows.get(&(p, level - 1))
        };
        for k in row.len()..len {
            let v = match prev {
                None if k == 0 => ExactRational::zero(),
                None => pow_int(&int(k as u64), -p),
                Some(_) if k == 0 => ExactRational::zero(),
                Some(prev) => &row[k - 1] + &prev[k],
            };
            row.push(v);
        }
        rows.insert((p, level), row);
    }
    rows[&(p, r)][n as usize].clone()
}

/// `H_n^(p,r)` from the closed weighting `Σ_{k=1}^{n} C(n+r-1-k, r-1) / k^p`.
pub fn gen_hyperharmonic_binomial(n: u32, p: i64, r: u32) -> ExactRational {
    if r == 0 {
        return if n == 0 {
            ExactRational::zero()
        } else {
            pow_int(&int(n), -p)
        };
    }
    let q = r as i64 - 1;
    (1..=n)
        .map(|k| {
            ExactRational::from_integer(binomial(n as i64 + q - k as i64, q)) * pow_int(&int(k), -p)
        })
        .sum()
}

/// Evaluation route for `S_p^(q)(n)`. All routes return the same value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HyperSumStrategy {
    /// Iterated partial sums starting from `S_p(n)`.
    Recursive,
    /// `Σ_{k=1}^{n} C(n+q-k, q) k^p`
    BinomialWeighted,
    /// `Σ_{j=0}^{p} j! {p+1, j+1} C(n+q, j+q+1)`
    StirlingClosedForm8,
    /// `Σ_{j} (-1)^(p+j) {p, j} C(n+q+j, q+j+1) j!`
    StirlingAlternating11,
}

impl HyperSumStrategy {
    pub const ALL: [HyperSumStrategy; 4] = [
        HyperSumStrategy::Recursive,
        HyperSumStrategy::BinomialWeighted,
        HyperSumStrategy::StirlingClosedForm8,
        HyperSumStrategy::StirlingAlternating11,
    ];
}

type IntRowStore = RwLock<HashMap<(u32, u32), Vec<BigInt>>>;

fn hyper_sum_recursive(p: u32, q: u32, n: u32) -> BigInt {
    static ROWS: OnceLock<IntRowStore> = OnceLock::new();
    let store = ROWS.get_or_init(|| RwLock::new(HashMap::new()));
    {
        let rows = store.read().unwrap_or_else(|e| e.into_inner());
        if let Some(v) = rows.get(&(p, q)).and_then(|row| row.get(n as usize)) {
            return v.clone();
        }
    }
    let mut rows = store.write().unwrap_or_else(|e| e.into_inner());
    let len = n as usize + 1;
    for level in 0..=q {
        let mut row = rows.remove(&(p, level)).unwrap_or_default();
        if row.len() < len {
            let prev = if level == 0 {
                None
            } else {
                rows.get(&(p, level - 1))
            };
            for k in row.len()..len {
                let v = if k == 0 {
                    BigInt::zero()
                } else {
                    match prev {
                        None => &row[k - 1] + BigInt::from(k).pow(p),
                        Some(prev) => &row[k - 1] + &prev[k],
                    }
                };
                row.push(v);
            }
        }
        rows.insert((p, level), row);
    }
    rows[&(p, q)][n as usize].clone()
}

/// Hyper-sum `S_p^(q)(n)`: `S_p^(0)(n) = 1^p + ... + n^p` and
/// `S_p^(q)(n) = Σ_{k=1}^{n} S_p^(q-1)(k)`.
pub fn hyper_sum(p: u32, q: u32, n: u32, strategy: HyperSumStrategy) -> ExactRational {
    let v = match strategy {
        HyperSumStrategy::Recursive => hyper_sum_recursive(p, q, n),
        HyperSumStrategy::BinomialWeighted => (1..=n)
            .map(|k| binomial((n + q - k) as i64, q as i64) * BigInt::from(k).pow(p))
            .sum(),
        HyperSumStrategy::StirlingClosedForm8 => (0..=p)
            .map(|j| {
                factorial(j)
                    * stirling2(p + 1, j + 1)
                    * binomial((n + q) as i64, (j + q + 1) as i64)
            })
            .sum(),
        // Stated for p ≥ 1 with j starting at 1; starting at j = 0 adds
        // {p, 0} = δ_{p,0}, which makes p = 0 come out right too.
        HyperSumStrategy::StirlingAlternating11 => (0..=p)
            .map(|j| {
                let term = stirling2(p, j)
                    * binomial((n + q + j) as i64, (q + j + 1) as i64)
                    * factorial(j);
                if (p + j).is_multiple_of(2) {
                    term
                } else {
                    -term
                }
            })
            .sum(),
    };
    ExactRational::from_integer(v)
}

/// `h_n^(x)` as a polynomial in the order `x`:
/// `(1/n!) Σ_{i=0}^{n-1} Π_{j≠i} (x + j)`, i.e. the derivative of
/// `x (x+1) ... (x+n-1) / n!`.
pub fn hyperharmonic_order_poly(n: u32) -> Result<RationalPolynomial> {
    if n == 0 {
        return Err(Error::NonPositive("hyperharmonic index n"));
    }
    static POLYS: Memo<u32, RationalPolynomial> = Memo::new();
    Ok(POLYS.get_or_insert_with(n, || {
        let mut sum = RationalPolynomial::zero();
        for i in 0..n {
            let term = (0..n).filter(|&j| j != i).fold(
                RationalPolynomial::constant(ExactRational::one()),
                |acc, j| &acc * &RationalPolynomial::linear(int(j)),
            );
            sum = &sum + &term;
        }
        sum.scale(&ExactRational::from_integer(factorial(n)).recip())
    }))
}

/// `d^l/dx^l h_n^(x+1)` at `x = q`.
pub fn hyperharmonic_order_derivative(n: u32, l: u32, q: u32) -> Result<ExactRational> {
    let poly = hyperharmonic_order_poly(n)?;
    Ok(poly.nth_derivative(l).eval(&int(q + 1)))
}

/// `Σ_{j=0}^{p} j! {p, j} C(n+1, j+1)`, the classical Stirling form of
/// `Σ_{k=0}^{n} k^p` (so it counts `0^0 = 1` when `p = 0`).
pub fn power_sum_stirling(p: u32, n: u32) -> ExactRational {
    let v: BigInt = (0..=p)
        .map(|j| factorial(j) * stirling2(p, j) * binomial(n as i64 + 1, j as i64 + 1))
        .sum();
    ExactRational::from_integer(v)
}

/// `Σ_{j=1}^{p} (-1)^(p+j) {p, j} C(n+j, j+1) j!`; equals `S_p(n)` for `p ≥ 1`.
pub fn power_sum_alternating(p: u32, n: u32) -> ExactRational {
    (1..=p)
        .map(|j| {
            sign((p + j) as i64)
                * ExactRational::from_integer(
                    stirling2(p, j) * binomial((n + j) as i64, (j + 1) as i64) * factorial(j),
                )
        })
        .sum()
}
