//! Truncated formal power series over exact rationals, used as an
//! independent oracle for every generating function in the crate.
//!
//! A series of order `N` stores `c_0 .. c_N` and stands for `f mod t^(N+1)`.
//! Binary operations truncate to the smaller operand order.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::arith::{binomial, factorial, int, pow_int, ExactRational};
use crate::error::{Error, Result};
use crate::polybell::{geometric_poly, RationalPolynomial};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<ExactRational>,
}

impl TruncatedSeries {
    /// Series of order `coeffs.len() - 1`. An empty vector is read as the
    /// zero series of order 0.
    pub fn new(mut coeffs: Vec<ExactRational>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(ExactRational::zero());
        }
        TruncatedSeries { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> ExactRational) -> Self {
        TruncatedSeries {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_fn(order, |_| ExactRational::zero())
    }

    pub fn constant(c: ExactRational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(ExactRational::one(), order)
    }

    /// The series `t`.
    pub fn variable(order: usize) -> Self {
        Self::from_fn(order, |i| if i == 1 { int(1) } else { int(0) })
    }

    pub fn from_polynomial(p: &RationalPolynomial, order: usize) -> Self {
        Self::from_fn(order, |i| p.coeff(i))
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<ExactRational> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> ExactRational {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_fn(order.min(self.order()), |i| self.coeffs[i].clone())
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn powi(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.order()), |acc, _| &acc * self)
    }

    /// `1 / f`; needs a nonzero constant term.
    pub fn recip(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let inv0 = c0.recip();
        let mut out: Vec<ExactRational> = vec![inv0.clone()];
        for n in 1..=self.order() {
            let s: ExactRational = (1..=n).map(|k| &self.coeffs[k] * &out[n - k]).sum();
            out.push(-s * &inv0);
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    /// `f(g(t))`; `g` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::CompositionConstantTerm);
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = Self::zero(order);
        for c in self.coeffs[..=order].iter().rev() {
            acc = &acc * &inner;
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// `exp(f)` for `f` with zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ExpConstantTerm);
        }
        // g' = f' g  =>  n g_n = Σ_{k=1}^{n} k f_k g_{n-k}
        let mut g: Vec<ExactRational> = vec![ExactRational::one()];
        for n in 1..=self.order() {
            let s: ExactRational = (1..=n)
                .map(|k| int(k as u64) * &self.coeffs[k] * &g[n - k])
                .sum();
            g.push(s / int(n as u64));
        }
        Ok(TruncatedSeries { coeffs: g })
    }

    /// `log(f)` for `f` with constant term 1.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::LogConstantTerm);
        }
        // f h' = f'  =>  n h_n = n f_n - Σ_{k=1}^{n-1} k h_k f_{n-k}
        let mut h: Vec<ExactRational> = vec![ExactRational::zero()];
        for n in 1..=self.order() {
            let s: ExactRational = (1..n)
                .map(|k| int(k as u64) * &h[k] * &self.coeffs[n - k])
                .sum();
            h.push(&self.coeffs[n] - s / int(n as u64));
        }
        Ok(TruncatedSeries { coeffs: h })
    }

    /// `f(t) / t`; needs zero constant term, drops one order.
    pub fn shift_down(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ShiftConstantTerm);
        }
        Ok(Self::new(self.coeffs[1..].to_vec()))
    }

    /// `f(c t)`
    pub fn substitute_scaled(&self, c: &ExactRational) -> Self {
        let mut cp = ExactRational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &cp);
            cp *= c;
        }
        TruncatedSeries { coeffs: out }
    }

    /// `f(t^m)`, same order, `m ≥ 1`.
    pub fn substitute_power(&self, m: usize) -> Self {
        assert!(m >= 1);
        Self::from_fn(self.order(), |i| {
            if i % m == 0 {
                self.coeffs[i / m].clone()
            } else {
                ExactRational::zero()
            }
        })
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries::from_fn(order, |i| &self.coeffs[i] + &rhs.coeffs[i])
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries::from_fn(order, |i| &self.coeffs[i] - &rhs.coeffs[i])
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries::from_fn(order, |n| {
            (0..=n).map(|k| &self.coeffs[k] * &rhs.coeffs[n - k]).sum()
        })
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// `Li_p(t) = Σ_{n≥1} t^n / n^p`.
pub fn polylog_series(p: i64, order: usize) -> TruncatedSeries {
    TruncatedSeries::from_fn(order, |n| {
        if n == 0 {
            ExactRational::zero()
        } else {
            pow_int(&int(n as u64), -p)
        }
    })
}

/// `(1 - t)^e` for any integer `e`.
pub fn one_minus_t_pow(e: i64, order: usize) -> TruncatedSeries {
    TruncatedSeries::from_fn(order, |k| {
        let c = ExactRational::from_integer(binomial(e, k as i64));
        if k % 2 == 0 {
            c
        } else {
            -c
        }
    })
}

/// `e^(c t)`
pub fn exp_scaled(c: &ExactRational, order: usize) -> TruncatedSeries {
    TruncatedSeries::variable(order)
        .scale(c)
        .exp()
        .expect("c t has no constant term")
}

/// `-ln(1 - t)`
pub fn neg_log_one_minus_t(order: usize) -> TruncatedSeries {
    -&one_minus_t_pow(1, order)
        .log()
        .expect("1 - t has constant term 1")
}

/// Generating functions whose coefficients the crate computes directly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratingFunction {
    /// `Li_p(1 - e^-t) / (1 - e^-t) e^(xt)`; exponential in `t`, coefficient
    /// `n` is `B_n^(p)(x) / n!`.
    PolyBernoulli { p: i64, x: i64 },
    /// `Li_p(t) / (1 - t)^q`; coefficient `n` is `H_n^(p,q)`.
    GenHyperharmonic { p: i64, q: u32 },
    /// `-ln(1 - t) / (1 - t)^q`; coefficient `n` is `h_n^(q)`.
    Hyperharmonic { q: u32 },
    /// `(e^z - 1)^k e^(rz) / k!`; exponential, coefficient `n` is
    /// `{n+r, k+r}_r / n!`.
    RStirling2 { k: u32, r: u32 },
    /// `(-ln(1 - t))^r / (1 - t)^(m+1)`; coefficient `k` is
    /// `C(m+k, m) P(r, m+k, m)`.
    PHarmonic { r: u32, m: u32 },
    /// `w_n(t/(1-t)) / (1 - t)`; coefficient `k` is `k^n` (with `0^0 = 1`).
    Geometric { n: u32 },
    /// `Σ_{j=1}^{n} j^p (1-z)^j / (1-z)^(n+1)`; coefficient `k` is `S_p^(k)(n)`.
    HyperSumIndex { p: u32, n: u32 },
    /// `Σ_{j=1}^{n} (1-z)^j / j / (1-z)^(n+1)`; coefficient `k` is `h_n^(k+1)`.
    HyperharmonicIndex { n: u32 },
}

impl GeneratingFunction {
    pub const NAMES: [&'static str; 8] = [
        "PolyBernoulliGf",
        "GenHyperharmonicGf",
        "HyperharmonicGf",
        "RStirling2Gf",
        "PHarmonicGf",
        "GeometricGf",
        "HyperSumIndexGf",
        "HyperharmonicIndexGf",
    ];

    pub fn name(&self) -> &'static str {
        match self {
            GeneratingFunction::PolyBernoulli { .. } => "PolyBernoulliGf",
            GeneratingFunction::GenHyperharmonic { .. } => "GenHyperharmonicGf",
            GeneratingFunction::Hyperharmonic { .. } => "HyperharmonicGf",
            GeneratingFunction::RStirling2 { .. } => "RStirling2Gf",
            GeneratingFunction::PHarmonic { .. } => "PHarmonicGf",
            GeneratingFunction::Geometric { .. } => "GeometricGf",
            GeneratingFunction::HyperSumIndex { .. } => "HyperSumIndexGf",
            GeneratingFunction::HyperharmonicIndex { .. } => "HyperharmonicIndexGf",
        }
    }

    /// True for exponential generating functions (coefficients carry `1/n!`).
    pub fn is_exponential(&self) -> bool {
        matches!(
            self,
            GeneratingFunction::PolyBernoulli { .. } | GeneratingFunction::RStirling2 { .. }
        )
    }

    /// Builds a generating function from its name and integer parameters.
    pub fn from_name(name: &str, params: &BTreeMap<String, i64>) -> Result<Self> {
        fn get(gf: &'static str, params: &BTreeMap<String, i64>, key: &'static str) -> Result<i64> {
            params
                .get(key)
                .copied()
                .ok_or(Error::MissingGfParam { gf, param: key })
        }
        fn get_u(
            gf: &'static str,
            params: &BTreeMap<String, i64>,
            key: &'static str,
        ) -> Result<u32> {
            let v = get(gf, params, key)?;
            u32::try_from(v).map_err(|_| Error::MissingGfParam { gf, param: key })
        }
        let gf = match name {
            "PolyBernoulliGf" => GeneratingFunction::PolyBernoulli {
                p: get("PolyBernoulliGf", params, "p")?,
                x: get("PolyBernoulliGf", params, "x")?,
            },
            "GenHyperharmonicGf" => GeneratingFunction::GenHyperharmonic {
                p: get("GenHyperharmonicGf", params, "p")?,
                q: get_u("GenHyperharmonicGf", params, "q")?,
            },
            "HyperharmonicGf" => GeneratingFunction::Hyperharmonic {
                q: get_u("HyperharmonicGf", params, "q")?,
            },
            "RStirling2Gf" => GeneratingFunction::RStirling2 {
                k: get_u("RStirling2Gf", params, "k")?,
                r: get_u("RStirling2Gf", params, "r")?,
            },
            "PHarmonicGf" => GeneratingFunction::PHarmonic {
                r: get_u("PHarmonicGf", params, "r")?,
                m: get_u("PHarmonicGf", params, "m")?,
            },
            "GeometricGf" => GeneratingFunction::Geometric {
                n: get_u("GeometricGf", params, "n")?,
            },
            "HyperSumIndexGf" => GeneratingFunction::HyperSumIndex {
                p: get_u("HyperSumIndexGf", params, "p")?,
                n: get_u("HyperSumIndexGf", params, "n")?,
            },
            "HyperharmonicIndexGf" => GeneratingFunction::HyperharmonicIndex {
                n: get_u("HyperharmonicIndexGf", params, "n")?,
            },
            other => return Err(Error::UnknownGf(other.to_string())),
        };
        Ok(gf)
    }

    pub fn series(&self, order: usize) -> TruncatedSeries {
        match *self {
            GeneratingFunction::PolyBernoulli { p, x } => {
                let u = &TruncatedSeries::one(order + 1) - &exp_scaled(&int(-1), order + 1);
                let li_over_t = polylog_series(p, order + 1)
                    .shift_down()
                    .expect("Li_p has no constant term");
                let head = li_over_t
                    .compose(&u)
                    .expect("1 - e^-t has no constant term");
                &head * &exp_scaled(&int(x), order)
            }
            GeneratingFunction::GenHyperharmonic { p, q } => {
                &polylog_series(p, order) * &one_minus_t_pow(-(q as i64), order)
            }
            GeneratingFunction::Hyperharmonic { q } => {
                &neg_log_one_minus_t(order) * &one_minus_t_pow(-(q as i64), order)
            }
            GeneratingFunction::RStirling2 { k, r } => {
                let em1 = &exp_scaled(&int(1), order) - &TruncatedSeries::one(order);
                let kf = ExactRational::from_integer(factorial(k)).recip();
                (&em1.powi(k) * &exp_scaled(&int(r), order)).scale(&kf)
            }
            GeneratingFunction::PHarmonic { r, m } => {
                &neg_log_one_minus_t(order).powi(r) * &one_minus_t_pow(-(m as i64) - 1, order)
            }
            GeneratingFunction::Geometric { n } => {
                let geo = one_minus_t_pow(-1, order);
                let inner = &TruncatedSeries::variable(order) * &geo;
                let w = TruncatedSeries::from_polynomial(&geometric_poly(n), order)
                    .compose(&inner)
                    .expect("t/(1-t) has no constant term");
                &geo * &w
            }
            GeneratingFunction::HyperSumIndex { p, n } => {
                let body = (1..=n).fold(TruncatedSeries::zero(order), |acc, j| {
                    &acc + &one_minus_t_pow(j as i64, order).scale(&ExactRational::from_integer(
                        num_bigint::BigInt::from(j).pow(p),
                    ))
                });
                &body * &one_minus_t_pow(-(n as i64) - 1, order)
            }
            GeneratingFunction::HyperharmonicIndex { n } => {
                let body = (1..=n).fold(TruncatedSeries::zero(order), |acc, j| {
                    &acc + &one_minus_t_pow(j as i64, order).scale(&int(j).recip())
                });
                &body * &one_minus_t_pow(-(n as i64) - 1, order)
            }
        }
    }
}

/// First `order + 1` coefficients of the named generating function.
pub fn gf_extract(gf: GeneratingFunction, order: usize) -> Vec<ExactRational> {
    gf.series(order).into_coeffs()
}

/// Multiplies coefficient `n` by `n!`, turning exponential generating
/// function coefficients into sequence values.
pub fn egf_to_sequence(coeffs: &[ExactRational]) -> Vec<ExactRational> {
    coeffs
        .iter()
        .enumerate()
        .map(|(n, c)| c * ExactRational::from_integer(factorial(n as u32)))
        .collect()
}
