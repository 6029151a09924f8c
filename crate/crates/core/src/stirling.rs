//! r-Stirling numbers of both kinds in shifted indexing.
//!
//! `stirling1_r(n, k, r)` is the coefficient of `x^k` in
//! `(x + r)(x + r + 1)...(x + r + n - 1)`, i.e. the r-Stirling number
//! `[n + r, k + r]_r`. `stirling2_r(n, k, r)` is `{n + r, k + r}_r`, the
//! coefficient of `z^n / n!` in `(e^z - 1)^k e^{rz} / k!`. With `r = 0`
//! both reduce to the ordinary (unsigned) Stirling numbers.
//!
//! Tables are grown row by row with
//!
//! ```text
//! [n+1+r, k+r]_r = (n + r) [n+r, k+r]_r + [n+r, k-1+r]_r
//! {n+1+r, k+r}_r = (k + r) {n+r, k+r}_r + {n+r, k-1+r}_r
//! ```
//!
//! and memoized per `(kind, r)` in a process-wide registry.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{sign, ExactRational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StirlingKind {
    FirstKind,
    SecondKind,
}

/// Triangle of shifted r-Stirling numbers for one kind and one `r`.
/// Row `n` holds entries for `k = 0..=n`.
#[derive(Debug, Clone)]
pub struct StirlingTable {
    kind: StirlingKind,
    r: u32,
    rows: Vec<Vec<BigInt>>,
}

impl StirlingTable {
    pub fn new(kind: StirlingKind, r: u32) -> Self {
        StirlingTable {
            kind,
            r,
            rows: vec![vec![BigInt::one()]],
        }
    }

    pub fn kind(&self) -> StirlingKind {
        self.kind
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// Highest row index currently stored.
    pub fn max_row(&self) -> u32 {
        (self.rows.len() - 1) as u32
    }

    pub fn grow_to(&mut self, n: u32) {
        let r = BigInt::from(self.r);
        while self.max_row() < n {
            let m = self.max_row();
            let prev = &self.rows[m as usize];
            let mut next = Vec::with_capacity(m as usize + 2);
            for k in 0..=m + 1 {
                let stay = if k <= m {
                    let factor = match self.kind {
                        StirlingKind::FirstKind => &r + m,
                        StirlingKind::SecondKind => &r + k,
                    };
                    factor * &prev[k as usize]
                } else {
                    BigInt::zero()
                };
                let step = if k >= 1 {
                    prev[k as usize - 1].clone()
                } else {
                    BigInt::zero()
                };
                next.push(stay + step);
            }
            self.rows.push(next);
        }
    }

    /// Entry `(n, k)` if row `n` has been built; `k > n` is zero.
    pub fn get(&self, n: u32, k: u32) -> Option<BigInt> {
        let row = self.rows.get(n as usize)?;
        Some(row.get(k as usize).cloned().unwrap_or_default())
    }

    pub fn entry(&mut self, n: u32, k: u32) -> BigInt {
        self.grow_to(n);
        self.get(n, k).expect("row was just built")
    }

    pub fn row(&mut self, n: u32) -> &[BigInt] {
        self.grow_to(n);
        &self.rows[n as usize]
    }
}

type Registry = RwLock<HashMap<(StirlingKind, u32), StirlingTable>>;

fn registry() -> &'static Registry {
    static TABLES: OnceLock<Registry> = OnceLock::new();
    TABLES.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Shared-table lookup of `[n+r, k+r]_r` or `{n+r, k+r}_r`.
pub fn stirling_r(kind: StirlingKind, n: u32, k: u32, r: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    {
        let tables = registry().read().unwrap_or_else(|e| e.into_inner());
        if let Some(v) = tables.get(&(kind, r)).and_then(|t| t.get(n, k)) {
            return v;
        }
    }
    let mut tables = registry().write().unwrap_or_else(|e| e.into_inner());
    tables
        .entry((kind, r))
        .or_insert_with(|| StirlingTable::new(kind, r))
        .entry(n, k)
}

/// `[n+r, k+r]_r`, unsigned.
pub fn stirling1_r(n: u32, k: u32, r: u32) -> BigInt {
    stirling_r(StirlingKind::FirstKind, n, k, r)
}

/// `{n+r, k+r}_r`.
pub fn stirling2_r(n: u32, k: u32, r: u32) -> BigInt {
    stirling_r(StirlingKind::SecondKind, n, k, r)
}

/// Ordinary unsigned Stirling number of the first kind `[n, k]`.
pub fn stirling1(n: u32, k: u32) -> BigInt {
    stirling1_r(n, k, 0)
}

/// Ordinary Stirling number of the second kind `{n, k}`.
pub fn stirling2(n: u32, k: u32) -> BigInt {
    stirling2_r(n, k, 0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransformDirection {
    /// `b_n = Σ_k [n+r, k+r]_r a_k`
    Forward,
    /// `a_n = Σ_k (-1)^(n-k) {n+r, k+r}_r b_k`
    Inverse,
}

pub fn r_stirling_transform(
    direction: TransformDirection,
    r: u32,
    sequence: &[ExactRational],
) -> Result<Vec<ExactRational>> {
    if sequence.is_empty() {
        return Err(Error::EmptySequence);
    }
    let out = (0..sequence.len() as u32)
        .map(|n| {
            (0..=n)
                .map(|k| {
                    let a = &sequence[k as usize];
                    match direction {
                        TransformDirection::Forward => {
                            a * ExactRational::from_integer(stirling1_r(n, k, r))
                        }
                        TransformDirection::Inverse => {
                            a * ExactRational::from_integer(stirling2_r(n, k, r))
                                * sign((n - k) as i64)
                        }
                    }
                })
                .sum()
        })
        .collect();
    Ok(out)
}
