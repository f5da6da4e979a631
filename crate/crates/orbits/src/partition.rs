//! Integer partitions and the dominance order.
//!
//! Parts are stored weakly decreasing with no zeros; the canonical text form
//! groups repeats with exponents, e.g. `[3^2,1^2]` for 3+3+1+1.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A partition of a nonnegative integer: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Normalizing constructor: sorts descending and drops zeros.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Strict constructor: rejects zeros and out-of-order input.
    pub fn from_sorted(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition("zero part".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition("parts not weakly decreasing".into()));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Multiplicity of a given part value.
    pub fn multiplicity(&self, value: u32) -> usize {
        self.parts.iter().filter(|&&p| p == value).count()
    }

    /// Conjugate (transpose) partition.
    pub fn conjugate(&self) -> Self {
        let max = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=max)
            .map(|k| self.parts.iter().filter(|&&p| p >= k).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Dominance comparison: `self <= other` when every prefix sum of `self`
    /// is at most the matching prefix sum of `other`. Only partitions of the
    /// same integer are comparable; mismatched sizes are an error.
    pub fn dominance_le(&self, other: &Self) -> Result<bool> {
        let (a, b) = (self.size(), other.size());
        if a != b {
            return Err(Error::SizeMismatch(a as usize, b as usize));
        }
        let mut sa: u64 = 0;
        let mut sb: u64 = 0;
        let k = self.parts.len().max(other.parts.len());
        for i in 0..k {
            sa += u64::from(self.parts.get(i).copied().unwrap_or(0));
            sb += u64::from(other.parts.get(i).copied().unwrap_or(0));
            if sa > sb {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Strict dominance: dominated and not equal.
    pub fn dominance_lt(&self, other: &Self) -> Result<bool> {
        Ok(self != other && self.dominance_le(other)?)
    }
}

/// Total order used only for deterministic output: larger first part wins,
/// ties broken lexicographically, so sorting ascending puts the largest
/// partition (like `[N]`) last and sorting descending puts it first.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.parts.cmp(&other.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        let mut first = true;
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let mut j = i;
            while j < self.parts.len() && self.parts[j] == p {
                j += 1;
            }
            if !first {
                write!(f, ",")?;
            }
            first = false;
            if j - i > 1 {
                write!(f, "{}^{}", p, j - i)?;
            } else {
                write!(f, "{p}")?;
            }
            i = j;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts both plain (`[3,3,1,1]` or `3,3,1,1`) and exponent
    /// (`[3^2,1^2]`) forms, in any mix; input need not be sorted.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s.strip_prefix('[').and_then(|t| t.strip_suffix(']')).unwrap_or(s);
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for token in s.split(',') {
            let token = token.trim();
            let (base, count) = match token.split_once('^') {
                Some((b, e)) => {
                    let e: u32 = e
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in {token:?}")))?;
                    (b.trim(), e)
                }
                None => (token, 1),
            };
            let p: u32 =
                base.parse().map_err(|_| Error::Parse(format!("bad part in {token:?}")))?;
            if p == 0 {
                return Err(Error::InvalidPartition("zero part".into()));
            }
            for _ in 0..count {
                parts.push(p);
            }
        }
        Ok(Partition::new(parts))
    }
}
