//! Dense rational polynomials, complete exponential Bell polynomials, the
//! signed variant `P_n` used for order derivatives of hyperharmonic numbers,
//! and geometric polynomials.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::arith::{binomial, factorial, int, sign, ExactRational};
use crate::error::{Error, Result};
use crate::harmonic::harmonic_generalized;
use crate::stirling::stirling2;

/// Polynomial in one variable; `coeffs[i]` multiplies `x^i`. Trailing zeros
/// are trimmed, so the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RationalPolynomial {
    coeffs: Vec<ExactRational>,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<ExactRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RationalPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        RationalPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: ExactRational) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: ExactRational, degree: usize) -> Self {
        let mut coeffs = vec![ExactRational::zero(); degree];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// `x + c`
    pub fn linear(c: ExactRational) -> Self {
        Self::new(vec![c, ExactRational::one()])
    }

    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> ExactRational {
        self.coeffs.get(degree).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: &ExactRational) -> ExactRational {
        self.coeffs
            .iter()
            .rev()
            .fold(ExactRational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as u64))
                .collect(),
        )
    }

    pub fn nth_derivative(&self, l: u32) -> Self {
        (0..l).fold(self.clone(), |p, _| p.derivative())
    }

    /// `p(inner(x))`
    pub fn compose(&self, inner: &RationalPolynomial) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * inner) + &Self::constant(c.clone())
        })
    }

    /// `p(x + c)`
    pub fn shift(&self, c: &ExactRational) -> Self {
        let n = self.coeffs.len();
        let mut out = vec![ExactRational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            let mut cpow = ExactRational::one();
            for j in (0..=i).rev() {
                out[j] += a * ExactRational::from_integer(binomial(i as i64, j as i64)) * &cpow;
                cpow *= c;
            }
        }
        Self::new(out)
    }
}

impl Add for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn add(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RationalPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn sub(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RationalPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn mul(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut out = vec![ExactRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPolynomial::new(out)
    }
}

impl Neg for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn neg(self) -> RationalPolynomial {
        RationalPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for RationalPolynomial {
            type Output = RationalPolynomial;
            fn $method(self, rhs: RationalPolynomial) -> RationalPolynomial {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "{}x", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}x^{i}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

fn check_len(n: u32, args: &[ExactRational]) -> Result<()> {
    if args.len() < n as usize {
        Err(Error::ArgumentLength {
            expected: n as usize,
            got: args.len(),
        })
    } else {
        Ok(())
    }
}

/// Complete exponential Bell polynomial `Y_n(x_1, ..., x_n)` at a rational
/// point, from `Y_{m+1} = Σ_k C(m, k) Y_{m-k} x_{k+1}`.
pub fn bell_complete(n: u32, args: &[ExactRational]) -> Result<ExactRational> {
    check_len(n, args)?;
    let mut ys: Vec<ExactRational> = vec![ExactRational::one()];
    for m in 0..n as usize {
        let next = (0..=m)
            .map(|k| {
                ExactRational::from_integer(binomial(m as i64, k as i64)) * &ys[m - k] * &args[k]
            })
            .sum();
        ys.push(next);
    }
    Ok(ys.swap_remove(n as usize))
}

/// `P_n(x_1, ..., x_n) = (-1)^n Y_n(-0! x_1, -1! x_2, ..., -(n-1)! x_n)`.
///
/// Evaluated through Newton's identity `P_n = Σ_{i=1}^n (-1)^(i-1)
/// (n-1)!/(n-i)! P_{n-i} x_i` (`P_n / n!` is the elementary symmetric
/// function whose power sums are the `x_i`).
pub fn p_poly(n: u32, args: &[ExactRational]) -> Result<ExactRational> {
    check_len(n, args)?;
    let mut ps: Vec<ExactRational> = vec![ExactRational::one()];
    for m in 1..=n {
        let mut acc = ExactRational::zero();
        let mut ratio = ExactRational::one(); // (m-1)!/(m-i)!
        for i in 1..=m {
            if i > 1 {
                ratio *= int(m - i + 1);
            }
            acc += sign(i as i64 - 1) * &ratio * &ps[(m - i) as usize] * &args[i as usize - 1];
        }
        ps.push(acc);
    }
    Ok(ps.swap_remove(n as usize))
}

/// `P(r, upper, lower) = P_r(H_upper^(1) - H_lower^(1), ..., H_upper^(r) - H_lower^(r))`.
pub fn p_harmonic(r: u32, upper: u32, lower: u32) -> Result<ExactRational> {
    if upper < lower {
        return Err(Error::IndexOrder { upper, lower });
    }
    let args: Vec<ExactRational> = (1..=r as i64)
        .map(|i| harmonic_generalized(upper, i) - harmonic_generalized(lower, i))
        .collect();
    p_poly(r, &args)
}

/// Geometric polynomial `w_n(x) = Σ_j {n, j} j! x^j`.
pub fn geometric_poly(n: u32) -> RationalPolynomial {
    RationalPolynomial::new(
        (0..=n)
            .map(|j| ExactRational::from_integer(stirling2(n, j) * factorial(j)))
            .collect(),
    )
}
