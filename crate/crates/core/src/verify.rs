//! Named identity and congruence checks with single-instance and sweep
//! execution.
//!
//! Each check declares its integer parameters, which of them (if any) is the
//! modulus, default sweep ranges and a domain filter for instances outside the
//! hypotheses of the statement. Some checks also evaluate auxiliary forms
//! (special cases displayed alongside the main statement); an instance holds
//! only when the main relation and every auxiliary form hold.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;
use std::time::{Duration, Instant};

use num_traits::Zero;
use rayon::prelude::*;

use crate::arith::{
    binomial, factorial, falling_factorial, int, is_integer, is_prime, pow_int, rational_congruent,
    sign, ExactRational, Modulus,
};
use crate::bernoulli::{
    bernoulli_number, bernoulli_polynomial, poly_bernoulli_neg_closed, poly_bernoulli_neg_stirling,
    poly_bernoulli_number, poly_bernoulli_polynomial,
};
use crate::error::{Error, Result};
use crate::harmonic::{
    gen_hyperharmonic, gen_hyperharmonic_binomial, harmonic_generalized, hyper_sum, hyperharmonic,
    hyperharmonic_order_derivative, power_sum, power_sum_alternating, power_sum_stirling,
    HyperSumStrategy,
};
use crate::polybell::p_harmonic;
use crate::stirling::{stirling1, stirling1_r, stirling2, stirling2_r};

pub type Params = BTreeMap<String, i64>;
pub type Ranges = BTreeMap<String, RangeInclusive<i64>>;

/// Outcome of one check instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub check_name: String,
    pub params: Params,
    pub lhs: ExactRational,
    pub rhs: ExactRational,
    /// Set for congruence checks.
    pub modulus: Option<u64>,
    pub holds: bool,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub check_name: String,
    /// Instances evaluated.
    pub total: usize,
    /// Grid points dropped by primality or domain filters.
    pub skipped: usize,
    pub failures: Vec<CheckResult>,
    pub elapsed: Duration,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, Copy)]
pub struct ParamSpec {
    pub name: &'static str,
    pub min: i64,
    pub prime: bool,
}

const fn param(name: &'static str, min: i64) -> ParamSpec {
    ParamSpec {
        name,
        min,
        prime: false,
    }
}

const fn prime(name: &'static str) -> ParamSpec {
    ParamSpec {
        name,
        min: 2,
        prime: true,
    }
}

/// Parameter values of one instance.
struct Args<'a>(&'a Params);

impl Args<'_> {
    fn i(&self, key: &str) -> i64 {
        self.0[key]
    }

    fn u(&self, key: &str) -> u32 {
        self.0[key] as u32
    }
}

struct Aux {
    label: &'static str,
    holds: bool,
}

impl Aux {
    fn eq(label: &'static str, a: &ExactRational, b: &ExactRational) -> Aux {
        Aux {
            label,
            holds: a == b,
        }
    }
}

struct Outcome {
    lhs: ExactRational,
    rhs: ExactRational,
    aux: Vec<Aux>,
}

fn outcome(lhs: ExactRational, rhs: ExactRational) -> Outcome {
    Outcome {
        lhs,
        rhs,
        aux: Vec::new(),
    }
}

type Domain = fn(&Args) -> Option<(&'static str, &'static str)>;

pub struct CheckDef {
    pub name: &'static str,
    pub statement: &'static str,
    pub params: &'static [ParamSpec],
    /// Parameter used as the modulus; `None` for exact identities.
    pub modulus: Option<&'static str>,
    pub default_ranges: &'static [(&'static str, i64, i64)],
    domain: Domain,
    eval: fn(&Args) -> Outcome,
}

impl CheckDef {
    pub fn default_ranges(&self) -> Ranges {
        self.default_ranges
            .iter()
            .map(|&(k, a, b)| (k.to_string(), a..=b))
            .collect()
    }
}

fn no_domain(_: &Args) -> Option<(&'static str, &'static str)> {
    None
}

fn r(v: impl Into<num_bigint::BigInt>) -> ExactRational {
    ExactRational::from_integer(v.into())
}

fn fact(n: u32) -> ExactRational {
    r(factorial(n))
}

fn binom(upper: i64, lower: i64) -> ExactRational {
    r(binomial(upper, lower))
}

fn eval_at(n: u32, p: i64, x: i64) -> ExactRational {
    poly_bernoulli_polynomial(n, p).eval(&int(x))
}

fn hdiff(upper: u32, lower: u32, order: i64) -> ExactRational {
    harmonic_generalized(upper, order) - harmonic_generalized(lower, order)
}

// ---------------------------------------------------------------------------
// Identities linking poly-Bernoulli polynomials and
// generalized hyperharmonic numbers.

fn eval_eq_1_1(a: &Args) -> Outcome {
    let n = a.u("n");
    let lhs = (0..=n)
        .map(|k| sign(k as i64) * r(stirling1(n + 1, k + 1)) * bernoulli_number(k))
        .sum();
    outcome(lhs, fact(n) * harmonic_generalized(n + 1, 1))
}

fn eval_eq_hsb(a: &Args) -> Outcome {
    let (n, rr) = (a.u("n"), a.u("r"));
    let lhs = (0..=n)
        .map(|k| r(stirling1_r(n, k, rr)) * bernoulli_number(k))
        .sum();
    outcome(lhs, fact(n) * gen_hyperharmonic(n + 1, 1, rr - 1))
}

fn eval_thm_gh_pb(a: &Args) -> Outcome {
    let (n, rr, p, q) = (a.u("n"), a.u("r"), a.i("p"), a.i("q"));
    let lhs = (0..=n)
        .map(|k| r(stirling1_r(n, k, rr)) * eval_at(k, p, q))
        .sum();
    outcome(lhs, fact(n) * gen_hyperharmonic(n + 1, p, q as u32 + rr))
}

fn eval_cor_hpb(a: &Args) -> Outcome {
    let (n, p) = (a.u("n"), a.i("p"));
    let lhs = (0..=n)
        .map(|k| r(stirling1(n + 1, k + 1)) * poly_bernoulli_number(k, p))
        .sum();
    outcome(lhs, fact(n) * harmonic_generalized(n + 1, p))
}

fn eval_pb_gh_inverse(a: &Args) -> Outcome {
    let (n, rr, p, q) = (a.u("n"), a.u("r"), a.i("p"), a.u("q"));
    let lhs = eval_at(n, p, q as i64 + 1 - rr as i64);
    let rhs = (0..=n)
        .map(|k| {
            sign((n - k) as i64)
                * r(stirling2_r(n, k, rr))
                * fact(k)
                * gen_hyperharmonic(k + 1, p, q + 1)
        })
        .sum();
    outcome(lhs, rhs)
}

// ---------------------------------------------------------------------------
// Recurrences and order derivatives.

fn alt_sum(n: u32, q: u32, term: impl Fn(u32) -> ExactRational) -> ExactRational {
    (0..=2 * n)
        .map(|k| sign(k as i64) * binom(q as i64 + k as i64 - 1, k as i64) * term(2 * n - k))
        .sum()
}

fn eval_prop_alt_sum(a: &Args) -> Outcome {
    let (n, p, q) = (a.u("n"), a.i("p"), a.u("q"));
    let lhs = alt_sum(n, q, |m| gen_hyperharmonic(m, p, q));
    let rhs = pow_int(&int(2), -p) * gen_hyperharmonic(n, p, q);
    let mut out = outcome(lhs, rhs);
    if q == 1 {
        let plain: ExactRational = (0..=2 * n)
            .map(|k| sign(k as i64) * harmonic_generalized(2 * n - k, p))
            .sum();
        out.aux.push(Aux::eq(
            "q = 1 form with H_n^(p)",
            &plain,
            &(pow_int(&int(2), -p) * harmonic_generalized(n, p)),
        ));
    }
    if p == 1 && q >= 1 {
        let h = |m: u32| hyperharmonic(m, q).expect("q ≥ 1");
        out.aux.push(Aux::eq(
            "p = 1 form with h_n^(q)",
            &alt_sum(n, q, h),
            &(h(n) / int(2)),
        ));
    }
    out
}

fn eval_prop_binom_shift(a: &Args) -> Outcome {
    let (n, p, q) = (a.u("n"), a.u("p"), a.u("q"));
    let pi = p as i64;
    let lhs = gen_hyperharmonic(n, pi, q + 1);
    let rhs = (0..=n)
        .map(|k| {
            sign(k as i64) * binom(pi - q as i64, k as i64) * gen_hyperharmonic(n - k, pi, p + 1)
        })
        .sum();
    outcome(lhs, rhs)
}

fn thm_6a_lhs(n: u32, l: u32, rr: u32, q: i64) -> ExactRational {
    (l..=n)
        .map(|k| {
            r(stirling1_r(n, k, rr))
                * falling_factorial(&int(k), l)
                * bernoulli_polynomial(k - l).eval(&int(q))
        })
        .sum()
}

fn eval_thm_6a(a: &Args) -> Outcome {
    let (n, l, rr, q) = (a.u("n"), a.u("l"), a.u("r"), a.u("q"));
    let top = n + q + rr - 1;
    let bottom = q + rr - 2;
    let lhs = thm_6a_lhs(n, l, rr, q as i64);
    let weight = binom(top as i64, bottom as i64);
    let rhs = fact(n) * &weight * p_harmonic(l + 1, top, bottom).expect("top ≥ bottom");
    let mut out = outcome(lhs.clone(), rhs);
    let (h1, h2, h3) = (
        hdiff(top, bottom, 1),
        hdiff(top, bottom, 2),
        hdiff(top, bottom, 3),
    );
    if l == 1 {
        let expanded = fact(n) * &weight * (&h1 * &h1 - &h2);
        out.aux
            .push(Aux::eq("l = 1 expanded form", &lhs, &expanded));
    }
    if l == 2 {
        let expanded = &weight * (&h1 * &h1 * &h1 + int(2) * &h3 - int(3) * &h1 * &h2);
        out.aux
            .push(Aux::eq("l = 2 expanded form", &(&lhs / fact(n)), &expanded));
    }
    if rr == 1 && q == 1 && l == 2 {
        let special: ExactRational = (2..=n)
            .map(|k| {
                sign(k as i64)
                    * r(stirling1(n + 1, k + 1))
                    * int(k * (k - 1))
                    * bernoulli_number(k - 2)
            })
            .sum::<ExactRational>()
            / fact(n);
        let (g1, g2, g3) = (
            harmonic_generalized(n + 1, 1),
            harmonic_generalized(n + 1, 2),
            harmonic_generalized(n + 1, 3),
        );
        let rhs = &g1 * &g1 * &g1 - int(3) * &g1 * &g2 + int(2) * &g3;
        out.aux
            .push(Aux::eq("r = q = 1, l = 2 form", &special, &rhs));
    }
    if rr == 1 && q == 1 && l == 0 {
        let classical = eval_eq_1_1(a).lhs;
        out.aux.push(Aux::eq(
            "r = q = 1, l = 0 reduces to eq-1.1",
            &lhs,
            &classical,
        ));
    }
    out
}

fn domain_thm_6a(a: &Args) -> Option<(&'static str, &'static str)> {
    (a.i("q") + a.i("r") < 2).then_some(("q", "the statement needs q + r ≥ 2"))
}

fn eval_eq_7(a: &Args) -> Outcome {
    let (n, l, q) = (a.u("n"), a.u("l"), a.u("q"));
    let lhs = hyperharmonic_order_derivative(n, l, q).expect("n ≥ 1");
    let rhs = binom((q + n) as i64, q as i64) * p_harmonic(l + 1, q + n, q).expect("q + n ≥ q");
    outcome(lhs, rhs)
}

// ---------------------------------------------------------------------------
// Hyper-sums and negative-index poly-Bernoulli polynomials.

fn eval_lem_pb_s(a: &Args) -> Outcome {
    let (n, p, q) = (a.u("n"), a.u("p"), a.u("q"));
    outcome(
        eval_at(n, -(p as i64), q as i64),
        poly_bernoulli_neg_stirling(n, p, q),
    )
}

fn eval_pb_duality(a: &Args) -> Outcome {
    let (n, p) = (a.u("n"), a.u("p"));
    outcome(
        poly_bernoulli_number(n, -(p as i64)),
        poly_bernoulli_number(p, -(n as i64)),
    )
}

fn eval_duality_power_sum(a: &Args) -> Outcome {
    let (n, p) = (a.u("n"), a.u("p"));
    let lhs = (0..=n)
        .map(|k| r(stirling1(n + 1, k + 1)) * poly_bernoulli_number(p, -(k as i64)))
        .sum::<ExactRational>()
        / fact(n);
    outcome(lhs, power_sum(p as i64, n + 1))
}

fn eval_hahs(a: &Args) -> Outcome {
    let (n, p, q) = (a.u("n"), a.u("p"), a.u("q"));
    let lhs = gen_hyperharmonic(n, -(p as i64), q + 1);
    let rhs = hyper_sum(p, q, n, HyperSumStrategy::Recursive);
    let mut out = outcome(lhs, rhs.clone());
    for (label, s) in [
        (
            "binomial-weighted hyper-sum",
            HyperSumStrategy::BinomialWeighted,
        ),
        (
            "Stirling closed-form hyper-sum",
            HyperSumStrategy::StirlingClosedForm8,
        ),
        (
            "alternating Stirling hyper-sum",
            HyperSumStrategy::StirlingAlternating11,
        ),
    ] {
        out.aux.push(Aux::eq(label, &hyper_sum(p, q, n, s), &rhs));
    }
    out.aux.push(Aux::eq(
        "binomial-weighted H_n^(-p,q+1)",
        &gen_hyperharmonic_binomial(n, -(p as i64), q + 1),
        &rhs,
    ));
    out
}

fn eval_thm_8(a: &Args) -> Outcome {
    let (p, q, n) = (a.u("p"), a.u("q"), a.u("n"));
    let lhs = hyper_sum(p, q, n, HyperSumStrategy::Recursive);
    let rhs = hyper_sum(p, q, n, HyperSumStrategy::StirlingClosedForm8);
    let mut out = outcome(lhs.clone(), rhs);
    if q == 0 && p >= 1 {
        out.aux.push(Aux::eq(
            "q = 0 classical Stirling form",
            &power_sum_stirling(p, n),
            &lhs,
        ));
    }
    out
}

fn eval_thm_11(a: &Args) -> Outcome {
    let (p, q, n) = (a.u("p"), a.u("q"), a.u("n"));
    let lhs = hyper_sum(p, q, n, HyperSumStrategy::Recursive);
    let rhs = hyper_sum(p, q, n, HyperSumStrategy::StirlingAlternating11);
    let variant: ExactRational = (0..=p)
        .map(|j| {
            sign((p + j) as i64)
                * r(stirling2(p + 1, j + 1))
                * binom((n + q + j + 1) as i64, (q + j + 1) as i64)
                * fact(j)
        })
        .sum();
    let mut out = outcome(lhs.clone(), rhs);
    out.aux
        .push(Aux::eq("shifted-Stirling variant", &variant, &lhs));
    if q == 0 {
        out.aux.push(Aux::eq(
            "q = 0 alternating form",
            &power_sum_alternating(p, n),
            &lhs,
        ));
    }
    out
}

fn eval_eq_12(a: &Args) -> Outcome {
    let (n, p, q) = (a.u("n"), a.u("p"), a.u("q"));
    outcome(
        eval_at(n, -(p as i64), q as i64),
        poly_bernoulli_neg_closed(n, p, q),
    )
}

fn eval_eq_16(a: &Args) -> Outcome {
    let (q, n, p) = (a.u("q"), a.u("n"), a.i("p"));
    let lhs = gen_hyperharmonic(n, -p, q + 1);
    let rhs = (0..=q)
        .map(|k| sign(k as i64) * r(stirling1_r(q, k, n + 1)) * power_sum(p + k as i64, n))
        .sum::<ExactRational>()
        / fact(q);
    outcome(lhs, rhs)
}

fn eval_eq_17(a: &Args) -> Outcome {
    let (q, n) = (a.u("q"), a.u("n"));
    let rhs = (0..=q)
        .map(|k| {
            sign(k as i64)
                * r(stirling2_r(q, k, n + 1))
                * binom((k + n) as i64, k as i64 + 1)
                * fact(k)
        })
        .sum();
    outcome(power_sum(q as i64, n), rhs)
}

fn eval_eq_18(a: &Args) -> Outcome {
    let (q, n) = (a.u("q"), a.u("n"));
    let rhs = (0..=q)
        .map(|k| {
            sign(k as i64)
                * r(stirling2_r(q, k, n + 1))
                * fact(k)
                * hyperharmonic(n, k + 1).expect("order ≥ 1")
        })
        .sum();
    outcome(power_sum(q as i64 - 1, n), rhs)
}

fn eval_prop_4_8(a: &Args) -> Outcome {
    let (n, q) = (a.u("n"), a.u("q"));
    let (ni, qi) = (n as i64, q as i64);
    let lhs = (1..=qi)
        .map(|j| sign(j) / int(j) * binom(ni, j) * binom(ni + qi - j, ni))
        .sum();
    let h = |m: u32| harmonic_generalized(m, 1);
    let rhs = binom(ni + qi, qi) * (h(n + q) - h(q) - h(n));
    let mut out = outcome(lhs, rhs);
    // The p = -1 case of eq-16 with the k = 0 term split off.
    let split: ExactRational = (1..=q)
        .map(|k| sign(k as i64) * r(stirling1_r(q, k, n + 1)) * power_sum(k as i64 - 1, n))
        .sum::<ExactRational>()
        + fact(q) * binom(ni + qi, qi) * h(n);
    let hh = fact(q) * hyperharmonic(n, q + 1).expect("order ≥ 1");
    out.aux.push(Aux::eq("p = -1 case of eq-16", &hh, &split));
    out
}

// ---------------------------------------------------------------------------
// Congruences.

fn eval_thm_5_2(a: &Args) -> Outcome {
    let (n, p, q) = (a.u("n"), a.i("p"), a.u("q"));
    let lhs = pow_int(&int(n), p) * gen_hyperharmonic(n + 1, p, q);
    outcome(lhs, int(q))
}

fn domain_thm_5_2(a: &Args) -> Option<(&'static str, &'static str)> {
    (a.i("n") == 2).then_some(("n", "n must be an odd prime"))
}

fn eval_thm_5_3(a: &Args) -> Outcome {
    let (q, n) = (a.u("q"), a.u("n"));
    let h = |m, ord| hyperharmonic(m, ord).expect("order ≥ 2");
    let lhs = int(q) * (h(n, q + 1) + int(n) * h(q, n + 1));
    let mut out = outcome(lhs.clone(), int(n));
    if q == 2 {
        out.aux
            .push(Aux::eq("q = 2 worked value 2(1 + 5/2) = 7", &lhs, &int(7)));
    }
    out
}

fn domain_thm_5_3(a: &Args) -> Option<(&'static str, &'static str)> {
    (a.i("n") > a.i("q") - 1).then_some(("n", "n must satisfy 1 ≤ n ≤ q - 1"))
}

fn eval_thm_5_4(a: &Args) -> Outcome {
    let (p, q, n) = (a.u("p"), a.u("q"), a.u("n"));
    outcome(
        hyper_sum(p, q, n, HyperSumStrategy::Recursive),
        binom((n + q + 1) as i64, (q + 2) as i64),
    )
}

fn eval_lem_5_5(a: &Args) -> Outcome {
    let (p, n, q) = (a.i("p"), a.u("n"), a.i("q"));
    outcome(eval_at(n, -p, q), pow_int(&int(q + 2), n as i64))
}

fn eval_prop_5_6(a: &Args) -> Outcome {
    let (p, q) = (a.u("p"), a.u("q"));
    let s = hyper_sum(p, q, p + 1, HyperSumStrategy::Recursive);
    let mut out = outcome(int(p) * &s, ExactRational::zero());
    let via_pb: ExactRational = (0..=p)
        .map(|k| r(stirling1(p + 1, k + 1)) * eval_at(k, -(p as i64), q as i64))
        .sum();
    out.aux.push(Aux::eq(
        "p! S_p^(q)(p+1) as a Stirling sum of B_k^(-p)(q)",
        &(fact(p) * &s),
        &via_pb,
    ));
    out
}

fn eval_vsc(a: &Args) -> Outcome {
    let (n, p) = (a.u("n"), a.i("p"));
    let b = bernoulli_number(n);
    let rhs = if n as i64 % (p - 1) == 0 {
        int(-1)
    } else {
        int(0)
    };
    let mut out = outcome(int(p) * &b, rhs);
    let correction: ExactRational = (2..=n as u64 + 1)
        .filter(|&l| is_prime(l) && (n as u64).is_multiple_of(l - 1))
        .map(|l| int(l).recip())
        .sum();
    out.aux.push(Aux {
        label: "B_n + Σ_{(l-1)|n} 1/l is an integer",
        holds: is_integer(&(b + correction)),
    });
    out
}

fn domain_vsc(a: &Args) -> Option<(&'static str, &'static str)> {
    let n = a.i("n");
    (n != 1 && n % 2 == 1).then_some(("n", "n must be 1 or even"))
}

static REGISTRY: [CheckDef; 26] = [
    CheckDef {
        name: "eq-1.1",
        statement: "Σ_k (-1)^k [n+1, k+1] B_k = n! H_{n+1}",
        params: &[param("n", 0)],
        modulus: None,
        default_ranges: &[("n", 0, 18)],
        domain: no_domain,
        eval: eval_eq_1_1,
    },
    CheckDef {
        name: "eq-HSB",
        statement: "Σ_k [n+r, k+r]_r B_k = n! h_{n+1}^(r-1)",
        params: &[param("n", 0), param("r", 1)],
        modulus: None,
        default_ranges: &[("n", 0, 18), ("r", 1, 4)],
        domain: no_domain,
        eval: eval_eq_hsb,
    },
    CheckDef {
        name: "thm-gh-pB",
        statement: "Σ_k [n+r, k+r]_r B_k^(p)(q) = n! H_{n+1}^(p, q+r)",
        params: &[param("n", 0), param("r", 0), param("p", i64::MIN), param("q", 0)],
        modulus: None,
        default_ranges: &[("n", 0, 18), ("r", 0, 4), ("p", -4, 4), ("q", 0, 4)],
        domain: no_domain,
        eval: eval_thm_gh_pb,
    },
    CheckDef {
        name: "cor-hpb",
        statement: "Σ_k [n+1, k+1] B_k^(p) = n! H_{n+1}^(p)",
        params: &[param("n", 0), param("p", i64::MIN)],
        modulus: None,
        default_ranges: &[("n", 0, 18), ("p", -4, 4)],
        domain: no_domain,
        eval: eval_cor_hpb,
    },
    CheckDef {
        name: "eq-pB-gh-inverse",
        statement: "B_n^(p)(q+1-r) = Σ_k (-1)^(n-k) {n+r, k+r}_r k! H_{k+1}^(p, q+1)",
        params: &[param("n", 0), param("r", 0), param("p", i64::MIN), param("q", 0)],
        modulus: None,
        default_ranges: &[("n", 0, 18), ("r", 0, 4), ("p", -4, 4), ("q", 0, 4)],
        domain: no_domain,
        eval: eval_pb_gh_inverse,
    },
    CheckDef {
        name: "prop-alt-sum",
        statement: "Σ_{k=0}^{2n} (-1)^k C(q+k-1, k) H_{2n-k}^(p,q) = 2^-p H_n^(p,q)",
        params: &[param("n", 0), param("p", i64::MIN), param("q", 0)],
        modulus: None,
        default_ranges: &[("n", 0, 12), ("p", -3, 3), ("q", 0, 4)],
        domain: no_domain,
        eval: eval_prop_alt_sum,
    },
    CheckDef {
        name: "prop-binom-shift",
        statement: "H_n^(p,q+1) = Σ_k (-1)^k C(p-q, k) H_{n-k}^(p,p+1)",
        params: &[param("n", 0), param("p", 0), param("q", 0)],
        modulus: None,
        default_ranges: &[("n", 0, 15), ("p", 0, 5), ("q", 0, 5)],
        domain: no_domain,
        eval: eval_prop_binom_shift,
    },
    CheckDef {
        name: "thm-6a",
        statement: "Σ_{k=l}^{n} [n+r, k+r]_r k^(falling l) B_{k-l}(q) = n! C(n+q+r-1, q+r-2) P(l+1, n+q+r-1, q+r-2)",
        params: &[param("n", 0), param("l", 0), param("r", 0), param("q", 0)],
        modulus: None,
        default_ranges: &[("n", 0, 12), ("l", 0, 3), ("r", 0, 3), ("q", 0, 3)],
        domain: domain_thm_6a,
        eval: eval_thm_6a,
    },
    CheckDef {
        name: "eq-7",
        statement: "d^l/dx^l h_n^(x+1) at x = q equals C(q+n, q) P(l+1, q+n, q)",
        params: &[param("n", 1), param("l", 0), param("q", 0)],
        modulus: None,
        default_ranges: &[("n", 1, 10), ("l", 0, 3), ("q", 0, 4)],
        domain: no_domain,
        eval: eval_eq_7,
    },
    CheckDef {
        name: "lem-pB-s",
        statement: "B_n^(-p)(q) = Σ_j (j!)^2 {p+1, j+1} {n+q+1, j+q+1}_{q+1}",
        params: &[param("n", 0), param("p", 0), param("q", 0)],
        modulus: None,
        default_ranges: &[("n", 0, 12), ("p", 0, 8), ("q", 0, 6)],
        domain: no_domain,
        eval: eval_lem_pb_s,
    },
    CheckDef {
        name: "pB-duality",
        statement: "B_n^(-p) = B_p^(-n)",
        params: &[param("n", 0), param("p", 0)],
        modulus: None,
        default_ranges: &[("n", 0, 12), ("p", 0, 12)],
        domain: no_domain,
        eval: eval_pb_duality,
    },
    CheckDef {
        name: "duality-power-sum",
        statement: "(1/n!) Σ_k [n+1, k+1] B_p^(-k) = S_p(n+1)",
        params: &[param("n", 0), param("p", 0)],
        modulus: None,
        default_ranges: &[("n", 0, 12), ("p", 0, 8)],
        domain: no_domain,
        eval: eval_duality_power_sum,
    },
    CheckDef {
        name: "eq-HaHS",
        statement: "H_n^(-p, q+1) = S_p^(q)(n), all hyper-sum routes",
        params: &[param("n", 0), param("p", 0), param("q", 0)],
        modulus: None,
        default_ranges: &[("n", 0, 30), ("p", 0, 8), ("q", 0, 6)],
        domain: no_domain,
        eval: eval_hahs,
    },
    CheckDef {
        name: "thm-8",
        statement: "S_p^(q)(n) = Σ_j j! {p+1, j+1} C(n+q, j+q+1)",
        params: &[param("p", 0), param("q", 0), param("n", 0)],
        modulus: None,
        default_ranges: &[("p", 0, 6), ("q", 0, 8), ("n", 0, 10)],
        domain: no_domain,
        eval: eval_thm_8,
    },
    CheckDef {
        name: "thm-11",
        statement: "S_p^(q)(n) = Σ_{j=1}^{p} (-1)^(p+j) {p, j} C(n+q+j, q+j+1) j!",
        params: &[param("p", 1), param("q", 0), param("n", 0)],
        modulus: None,
        default_ranges: &[("p", 1, 6), ("q", 0, 8), ("n", 0, 10)],
        domain: no_domain,
        eval: eval_thm_11,
    },
    CheckDef {
        name: "eq-12",
        statement: "B_n^(-p)(q) = Σ_{j=1}^{p} {p, j} (-1)^(p+j) j! (j+q+1)^n",
        params: &[param("n", 0), param("p", 1), param("q", 0)],
        modulus: None,
        default_ranges: &[("n", 0, 12), ("p", 1, 8), ("q", 0, 6)],
        domain: no_domain,
        eval: eval_eq_12,
    },
    CheckDef {
        name: "eq-16",
        statement: "S_p^(q)(n) = (1/q!) Σ_k (-1)^k [q+n+1, k+n+1]_{n+1} S_{p+k}(n)",
        params: &[param("q", 0), param("n", 0), param("p", i64::MIN)],
        modulus: None,
        default_ranges: &[("q", 0, 8), ("n", 0, 10), ("p", -2, 6)],
        domain: no_domain,
        eval: eval_eq_16,
    },
    CheckDef {
        name: "eq-17",
        statement: "S_q(n) = Σ_k (-1)^k {q+n+1, k+n+1}_{n+1} C(k+n, k+1) k!",
        params: &[param("q", 0), param("n", 0)],
        modulus: None,
        default_ranges: &[("q", 0, 8), ("n", 0, 10)],
        domain: no_domain,
        eval: eval_eq_17,
    },
    CheckDef {
        name: "eq-18",
        statement: "S_{q-1}(n) = Σ_k (-1)^k {q+n+1, k+n+1}_{n+1} k! h_n^(k+1)",
        params: &[param("q", 0), param("n", 0)],
        modulus: None,
        default_ranges: &[("q", 0, 8), ("n", 0, 10)],
        domain: no_domain,
        eval: eval_eq_18,
    },
    CheckDef {
        name: "prop-4.8",
        statement: "Σ_{j=1}^{q} (-1)^j / j C(n, j) C(n+q-j, n) = C(n+q, q) (H_{n+q} - H_q - H_n)",
        params: &[param("n", 0), param("q", 0)],
        modulus: None,
        default_ranges: &[("n", 0, 12), ("q", 0, 8)],
        domain: no_domain,
        eval: eval_prop_4_8,
    },
    CheckDef {
        name: "thm-5.2",
        statement: "n^p H_{n+1}^(p,q) ≡ q (mod n), n an odd prime, p, q ≥ 1",
        params: &[prime("n"), param("p", 1), param("q", 1)],
        modulus: Some("n"),
        default_ranges: &[("n", 3, 31), ("p", 1, 4), ("q", 1, 6)],
        domain: domain_thm_5_2,
        eval: eval_thm_5_2,
    },
    CheckDef {
        name: "thm-5.3",
        statement: "q (h_n^(q+1) + n h_q^(n+1)) ≡ n (mod q), q prime, 1 ≤ n ≤ q-1",
        params: &[prime("q"), param("n", 1)],
        modulus: Some("q"),
        default_ranges: &[("q", 2, 31), ("n", 1, 30)],
        domain: domain_thm_5_3,
        eval: eval_thm_5_3,
    },
    CheckDef {
        name: "thm-5.4",
        statement: "S_p^(q)(n) ≡ C(n+q+1, q+2) (mod p), p prime",
        params: &[prime("p"), param("q", 0), param("n", 0)],
        modulus: Some("p"),
        default_ranges: &[("p", 2, 31), ("q", 0, 5), ("n", 0, 20)],
        domain: no_domain,
        eval: eval_thm_5_4,
    },
    CheckDef {
        name: "lem-5.5",
        statement: "B_n^(-p)(q) ≡ (q+2)^n (mod p), p prime, n ≥ 1",
        params: &[prime("p"), param("n", 1), param("q", 0)],
        modulus: Some("p"),
        default_ranges: &[("p", 2, 23), ("n", 1, 15), ("q", 0, 5)],
        domain: no_domain,
        eval: eval_lem_5_5,
    },
    CheckDef {
        name: "prop-5.6",
        statement: "p S_p^(q)(p+1) ≡ 0 (mod p), p prime",
        params: &[prime("p"), param("q", 0)],
        modulus: Some("p"),
        default_ranges: &[("p", 2, 13), ("q", 0, 5)],
        domain: no_domain,
        eval: eval_prop_5_6,
    },
    CheckDef {
        name: "vsc",
        statement: "p B_n ≡ -1 (mod p) if (p-1) | n, else 0; n = 1 or even",
        params: &[param("n", 1), prime("p")],
        modulus: Some("p"),
        default_ranges: &[("n", 1, 30), ("p", 2, 31)],
        domain: domain_vsc,
        eval: eval_vsc,
    },
];

pub fn registry() -> &'static [CheckDef] {
    &REGISTRY
}

pub fn check_names() -> Vec<&'static str> {
    REGISTRY.iter().map(|c| c.name).collect()
}

pub fn find_check(name: &str) -> Result<&'static CheckDef> {
    REGISTRY
        .iter()
        .find(|c| c.name == name)
        .ok_or_else(|| Error::UnknownCheck(name.to_string()))
}

/// Why a fully specified instance is not admissible, if it is not.
fn admissibility(def: &CheckDef, params: &Params) -> Option<Error> {
    for spec in def.params {
        let v = params[spec.name];
        if spec.prime && !(v >= 2 && is_prime(v as u64)) {
            return Some(Error::NotPrime {
                check: def.name.to_string(),
                param: spec.name.to_string(),
                value: v,
            });
        }
        if v < spec.min {
            return Some(Error::OutOfDomain {
                check: def.name.to_string(),
                param: spec.name.to_string(),
                value: v,
                reason: "below the minimum allowed value",
            });
        }
        if v > u32::MAX as i64 / 4 || v < i32::MIN as i64 {
            return Some(Error::OutOfDomain {
                check: def.name.to_string(),
                param: spec.name.to_string(),
                value: v,
                reason: "too large to evaluate",
            });
        }
    }
    (def.domain)(&Args(params)).map(|(param, reason)| Error::OutOfDomain {
        check: def.name.to_string(),
        param: param.to_string(),
        value: params[param],
        reason,
    })
}

fn evaluate(def: &CheckDef, params: Params) -> CheckResult {
    let Outcome { lhs, rhs, aux } = (def.eval)(&Args(&params));
    let modulus = def.modulus.map(|m| params[m] as u64);
    let main = match modulus {
        Some(m) => rational_congruent(&lhs, &rhs, Modulus::new(m).expect("prime ≥ 2")),
        None => lhs == rhs,
    };
    let failed: Vec<&str> = aux.iter().filter(|a| !a.holds).map(|a| a.label).collect();
    let note =
        (!failed.is_empty()).then(|| format!("failed auxiliary form: {}", failed.join("; ")));
    CheckResult {
        check_name: def.name.to_string(),
        params,
        lhs,
        rhs,
        modulus,
        holds: main && failed.is_empty(),
        note,
    }
}

/// Evaluates one instance of a registered check.
pub fn run_check(name: &str, params: &Params) -> Result<CheckResult> {
    let def = find_check(name)?;
    for key in params.keys() {
        if !def.params.iter().any(|s| s.name == key) {
            return Err(Error::UnexpectedParam {
                check: name.to_string(),
                param: key.clone(),
            });
        }
    }
    for spec in def.params {
        if !params.contains_key(spec.name) {
            return Err(Error::MissingParam {
                check: name.to_string(),
                param: spec.name.to_string(),
            });
        }
    }
    if let Some(err) = admissibility(def, params) {
        return Err(err);
    }
    Ok(evaluate(def, params.clone()))
}

/// Runs the Cartesian product of `ranges` (first declared parameter
/// outermost). Grid points that are not prime where required, or that fall
/// outside the statement's hypotheses, are counted as skipped.
pub fn run_sweep(name: &str, ranges: &Ranges) -> Result<SweepReport> {
    let def = find_check(name)?;
    for key in ranges.keys() {
        if !def.params.iter().any(|s| s.name == key) {
            return Err(Error::UnexpectedParam {
                check: name.to_string(),
                param: key.clone(),
            });
        }
    }
    let axes: Vec<(&str, Vec<i64>)> = def
        .params
        .iter()
        .map(|spec| {
            ranges
                .get(spec.name)
                .map(|range| (spec.name, range.clone().collect()))
                .ok_or_else(|| Error::MissingParam {
                    check: name.to_string(),
                    param: spec.name.to_string(),
                })
        })
        .collect::<Result<_>>()?;

    let start = Instant::now();
    let mut grid: Vec<Params> = vec![Params::new()];
    for (key, values) in &axes {
        grid = grid
            .into_iter()
            .flat_map(|base| {
                values.iter().map(move |&v| {
                    let mut p = base.clone();
                    p.insert(key.to_string(), v);
                    p
                })
            })
            .collect();
    }
    if axes.iter().any(|(_, v)| v.is_empty()) {
        grid.clear();
    }
    let grid_len = grid.len();
    let admissible: Vec<Params> = grid
        .into_iter()
        .filter(|p| admissibility(def, p).is_none())
        .collect();
    let skipped = grid_len - admissible.len();
    let results: Vec<CheckResult> = admissible
        .into_par_iter()
        .map(|p| evaluate(def, p))
        .collect();
    let total = results.len();
    let failures = results.into_iter().filter(|r| !r.holds).collect();
    Ok(SweepReport {
        check_name: name.to_string(),
        total,
        skipped,
        failures,
        elapsed: start.elapsed(),
    })
}

/// Sweep over the check's built-in ranges.
pub fn run_default_sweep(name: &str) -> Result<SweepReport> {
    let def = find_check(name)?;
    run_sweep(name, &def.default_ranges())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn params(kv: &[(&str, i64)]) -> Params {
        kv.iter().map(|&(k, v)| (k.to_string(), v)).collect()
    }

    #[test]
    fn names_are_unique() {
        let mut names = check_names();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), REGISTRY.len());
    }

    #[test]
    fn default_ranges_cover_params() {
        for def in registry() {
            let ranges = def.default_ranges();
            for spec in def.params {
                assert!(ranges.contains_key(spec.name), "{} {}", def.name, spec.name);
            }
            assert_eq!(ranges.len(), def.params.len(), "{}", def.name);
        }
    }

    #[test]
    fn single_instances() {
        let res = run_check(
            "thm-gh-pB",
            &params(&[("n", 5), ("r", 2), ("p", 3), ("q", 1)]),
        )
        .unwrap();
        assert!(res.holds);
        assert_eq!(res.lhs, res.rhs);

        let res = run_check("thm-5.2", &params(&[("n", 3), ("p", 1), ("q", 2)])).unwrap();
        assert!(res.holds);
        assert_eq!(res.lhs, rat(77, 4));
        assert_eq!(res.rhs, int(2));
        assert_eq!(res.modulus, Some(3));

        let res = run_check("prop-5.6", &params(&[("p", 3), ("q", 0)])).unwrap();
        assert!(res.holds);
        assert!(res.note.is_none());

        let res = run_check("thm-5.3", &params(&[("q", 2), ("n", 1)])).unwrap();
        assert!(res.holds);
        assert_eq!(res.lhs, int(7));
    }

    #[test]
    fn error_paths() {
        assert_eq!(
            run_check("nope", &Params::new()).unwrap_err(),
            Error::UnknownCheck("nope".into())
        );
        assert!(matches!(
            run_check("thm-5.2", &params(&[("n", 3), ("p", 1)])),
            Err(Error::MissingParam { .. })
        ));
        assert!(matches!(
            run_check("thm-5.2", &params(&[("n", 9), ("p", 1), ("q", 1)])),
            Err(Error::NotPrime { value: 9, .. })
        ));
        assert!(matches!(
            run_check("thm-5.2", &params(&[("n", 2), ("p", 1), ("q", 1)])),
            Err(Error::OutOfDomain { .. })
        ));
        assert!(matches!(
            run_check("eq-1.1", &params(&[("n", 1), ("z", 1)])),
            Err(Error::UnexpectedParam { .. })
        ));
        assert!(matches!(
            run_check("eq-1.1", &params(&[("n", -1)])),
            Err(Error::OutOfDomain { .. })
        ));
        let mut ranges = Ranges::new();
        ranges.insert("n".into(), 0..=3);
        assert!(matches!(
            run_sweep("eq-HSB", &ranges),
            Err(Error::MissingParam { .. })
        ));
    }

    #[test]
    fn sweep_counts() {
        let mut ranges = Ranges::new();
        ranges.insert("n".into(), 0..=15);
        ranges.insert("p".into(), 1..=4);
        let rep = run_sweep("cor-hpb", &ranges).unwrap();
        assert_eq!(rep.total, 64);
        assert!(rep.passed());

        let mut ranges = Ranges::new();
        ranges.insert("n".into(), 0..=0);
        let rep = run_sweep("eq-1.1", &ranges).unwrap();
        assert_eq!(rep.total, 1);
        assert!(rep.passed());
        let one = run_check("eq-1.1", &params(&[("n", 0)])).unwrap();
        assert_eq!((one.lhs, one.rhs), (int(1), int(1)));
    }

    #[test]
    fn prime_filter_and_domain_skips() {
        let mut ranges = Ranges::new();
        ranges.insert("q".into(), 2..=13);
        ranges.insert("n".into(), 1..=12);
        let rep = run_sweep("thm-5.3", &ranges).unwrap();
        // Σ_{q prime ≤ 13} (q - 1) = 1 + 2 + 4 + 6 + 10 + 12
        assert_eq!(rep.total, 35);
        assert_eq!(rep.total + rep.skipped, 12 * 12);
        assert!(rep.passed());
    }

    #[test]
    fn sweeps_are_deterministic() {
        let a = run_default_sweep("prop-4.8").unwrap();
        let b = run_default_sweep("prop-4.8").unwrap();
        assert_eq!(
            (a.total, a.skipped, &a.failures),
            (b.total, b.skipped, &b.failures)
        );
    }
}
