use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// An odd prime `p ≥ 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OddPrime(u32);

impl OddPrime {
    pub fn new(p: u32) -> Result<Self> {
        if p < 3
            || p.is_multiple_of(2)
            || !(3..)
                .step_by(2)
                .take_while(|d| d * d <= p)
                .all(|d| !p.is_multiple_of(d))
        {
            return Err(Error::NotOddPrime(p));
        }
        Ok(OddPrime(p))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    /// `ℓ = (p - 1) / 2`, the largest residue.
    #[inline]
    pub fn ell(self) -> u32 {
        (self.0 - 1) / 2
    }

    #[inline]
    pub fn divides(self, x: u32) -> bool {
        x.is_multiple_of(self.0)
    }
}

impl fmt::Display for OddPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for OddPrime {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let p = s
            .trim()
            .parse::<u32>()
            .map_err(|e| Error::Parse(format!("{s:?}: {e}")))?;
        OddPrime::new(p)
    }
}

impl Serialize for OddPrime {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u32(self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_odd_primes_only() {
        let ok: Vec<u32> = (0..40).filter(|&p| OddPrime::new(p).is_ok()).collect();
        assert_eq!(ok, vec![3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
    }

    #[test]
    fn ell_is_half_of_p_minus_one() {
        assert_eq!(OddPrime::new(5).unwrap().ell(), 2);
        assert_eq!(OddPrime::new(3).unwrap().ell(), 1);
        assert_eq!(OddPrime::new(11).unwrap().ell(), 5);
    }
}
