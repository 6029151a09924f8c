use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

/// Inclusive integer range written `a..b`, or a single value `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexRange(pub RangeInclusive<i64>);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RangeParseError(String);

impl fmt::Display for RangeParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "expected an integer or an inclusive range a..b, got {:?}",
            self.0
        )
    }
}

impl std::error::Error for RangeParseError {}

impl FromStr for IndexRange {
    type Err = RangeParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || RangeParseError(s.to_string());
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (s.trim(), s.trim()),
        };
        let lo: i64 = lo.parse().map_err(|_| err())?;
        let hi: i64 = hi.parse().map_err(|_| err())?;
        if lo > hi {
            return Err(err());
        }
        Ok(IndexRange(lo..=hi))
    }
}

/// `name=a..b` override for a sweep parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RangeOverride {
    pub name: String,
    pub range: IndexRange,
}

impl FromStr for RangeOverride {
    type Err = RangeParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (name, range) = s
            .split_once('=')
            .ok_or_else(|| RangeParseError(s.to_string()))?;
        Ok(RangeOverride {
            name: name.trim().to_string(),
            range: range.parse()?,
        })
    }
}
