//! Exact non-negative rationals for the approximation bounds.

use core::cmp::Ordering;
use core::fmt;

/// A reduced fraction `numer / denom` with `denom > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ratio {
    numer: u64,
    denom: u64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Ratio {
    /// Panics if `denom` is zero.
    pub fn new(numer: u64, denom: u64) -> Self {
        assert!(denom != 0, "zero denominator");
        let g = gcd(numer, denom).max(1);
        Ratio {
            numer: numer / g,
            denom: denom / g,
        }
    }

    pub const fn zero() -> Self {
        Ratio { numer: 0, denom: 1 }
    }

    pub fn from_integer(n: u64) -> Self {
        Ratio { numer: n, denom: 1 }
    }

    pub fn numer(&self) -> u64 {
        self.numer
    }

    pub fn denom(&self) -> u64 {
        self.denom
    }

    pub fn to_f64(&self) -> f64 {
        self.numer as f64 / self.denom as f64
    }

    pub fn checked_add(self, other: Ratio) -> Option<Ratio> {
        let n = (self.numer as u128) * (other.denom as u128) + (other.numer as u128) * (self.denom as u128);
        let d = (self.denom as u128) * (other.denom as u128);
        let g = {
            let (mut a, mut b) = (n, d);
            while b != 0 {
                (a, b) = (b, a % b);
            }
            a.max(1)
        };
        Some(Ratio {
            numer: u64::try_from(n / g).ok()?,
            denom: u64::try_from(d / g).ok()?,
        })
    }

    /// `self * k` compared with `other` without rounding.
    pub fn scaled_cmp(&self, k: u64, other: Ratio) -> Ordering {
        let lhs = (self.numer as u128) * (k as u128) * (other.denom as u128);
        let rhs = (other.numer as u128) * (self.denom as u128);
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> Ordering {
        ((self.numer as u128) * (other.denom as u128)).cmp(&((other.numer as u128) * (self.denom as u128)))
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer, self.denom)
    }
}
