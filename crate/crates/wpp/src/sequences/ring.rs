//! Ground rings `R`: subrings of the rationals, modeled as localizations of
//! the integers at a finite set of primes, or the whole of `Q`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::SequenceError;

/// `R = Z[S^{-1}]` for a finite set of primes `S`, or `R = Q` ("all").
///
/// Every subring of `Q` is a localization of `Z` at a set of primes; a finite
/// set plus the `all` marker covers every computation at desk scale, and both
/// unit and coprimality checks stay decidable.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum CoefficientRing {
    /// `Z` localized away from the listed primes.
    Localized(BTreeSet<u64>),
    /// The rationals: every prime is inverted.
    Rationals,
}

impl CoefficientRing {
    /// Plain `Z`: no inverted primes.
    pub fn integers() -> Self {
        CoefficientRing::Localized(BTreeSet::new())
    }

    pub fn rationals() -> Self {
        CoefficientRing::Rationals
    }

    /// `Z[1/p : p in primes]`; rejects non-prime entries.
    pub fn localized(primes: impl IntoIterator<Item = u64>) -> Result<Self, SequenceError> {
        let mut set = BTreeSet::new();
        for p in primes {
            if !is_prime(p) {
                return Err(SequenceError::NotPrime(p));
            }
            set.insert(p);
        }
        Ok(CoefficientRing::Localized(set))
    }

    /// Parses `"Z"`, `"Q"`, or `"Z[1/2,1/3]"`.
    pub fn parse(spec: &str) -> Result<Self, SequenceError> {
        let spec = spec.trim();
        match spec {
            "Z" => return Ok(Self::integers()),
            "Q" => return Ok(Self::rationals()),
            _ => {}
        }
        let inner = spec
            .strip_prefix("Z[")
            .and_then(|rest| rest.strip_suffix(']'))
            .ok_or(SequenceError::NotPrime(0))?;
        let mut primes = Vec::new();
        for part in inner.split(',') {
            let p = part
                .trim()
                .strip_prefix("1/")
                .and_then(|digits| digits.trim().parse::<u64>().ok())
                .ok_or(SequenceError::NotPrime(0))?;
            primes.push(p);
        }
        Self::localized(primes)
    }

    pub fn inverts(&self, p: u64) -> bool {
        match self {
            CoefficientRing::Localized(set) => set.contains(&p),
            CoefficientRing::Rationals => true,
        }
    }

    pub fn inverted_primes(&self) -> Option<&BTreeSet<u64>> {
        match self {
            CoefficientRing::Localized(set) => Some(set),
            CoefficientRing::Rationals => None,
        }
    }

    /// A positive integer is a unit of `R` iff it factors entirely over the
    /// inverted primes.
    pub fn is_unit(&self, n: &BigUint) -> bool {
        match self {
            CoefficientRing::Rationals => !n.is_zero(),
            CoefficientRing::Localized(set) => {
                let mut rest = n.clone();
                for &p in set {
                    let p = BigUint::from(p);
                    while (&rest % &p).is_zero() {
                        rest /= &p;
                    }
                }
                rest.is_one()
            }
        }
    }

    /// Splits `n = u * v` with `u` the maximal unit factor and `gcd(u, v) = 1`.
    pub fn unit_split(&self, n: &BigUint) -> (BigUint, BigUint) {
        match self {
            CoefficientRing::Rationals => (n.clone(), BigUint::one()),
            CoefficientRing::Localized(set) => {
                let mut unit = BigUint::one();
                let mut rest = n.clone();
                for &p in set {
                    let p = BigUint::from(p);
                    while (&rest % &p).is_zero() {
                        rest /= &p;
                        unit *= &p;
                    }
                }
                (unit, rest)
            }
        }
    }

    /// First inverted prime sharing a factor with `n`, if any.
    pub fn shared_inverted_prime(&self, n: &BigUint) -> Option<u64> {
        match self {
            CoefficientRing::Rationals => {
                // Over Q every prime is inverted, so any n > 1 fails.
                if n.is_one() {
                    None
                } else {
                    smallest_prime_factor(n)
                }
            }
            CoefficientRing::Localized(set) => set
                .iter()
                .copied()
                .find(|&p| (n % BigUint::from(p)).is_zero()),
        }
    }

    /// Whether a rational lies in `R`, i.e. its reduced denominator factors
    /// over the inverted primes.
    pub fn contains(&self, q: &BigRational) -> bool {
        let denom = q.denom().abs().to_biguint().expect("abs is nonnegative");
        self.is_unit(&denom)
    }
}

impl fmt::Display for CoefficientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientRing::Rationals => write!(f, "Q"),
            CoefficientRing::Localized(set) if set.is_empty() => write!(f, "Z"),
            CoefficientRing::Localized(set) => {
                let parts: Vec<String> = set.iter().map(|p| format!("1/{p}")).collect();
                write!(f, "Z[{}]", parts.join(","))
            }
        }
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn smallest_prime_factor(n: &BigUint) -> Option<u64> {
    if n.is_one() || n.is_zero() {
        return None;
    }
    let mut d = BigUint::from(2u64);
    loop {
        if (n % &d).is_zero() {
            return d.try_into().ok();
        }
        if &d * &d > *n {
            // n itself is prime; report it if it fits in u64.
            return n.try_into().ok().or(Some(u64::MAX));
        }
        d += 1u32;
    }
}

/// Trial-division factorization into (prime, exponent) pairs, ascending.
pub(crate) fn factorize(n: &BigUint) -> Vec<(BigUint, u32)> {
    let mut out = Vec::new();
    let mut rest = n.clone();
    let mut d = BigUint::from(2u64);
    while &d * &d <= rest {
        if (&rest % &d).is_zero() {
            let mut e = 0u32;
            while (&rest % &d).is_zero() {
                rest /= &d;
                e += 1;
            }
            out.push((d.clone(), e));
        }
        d += 1u32;
    }
    if !rest.is_one() {
        out.push((rest, 1));
    }
    out
}

/// Exact p-adic valuation if `n` is a pure power of `p`, else `None`.
pub(crate) fn pure_prime_power(n: &BigUint, p: u64) -> Option<i64> {
    let p = BigUint::from(p);
    let mut rest = n.clone();
    let mut e = 0i64;
    while (&rest % &p).is_zero() {
        rest /= &p;
        e += 1;
    }
    rest.is_one().then_some(e)
}

pub(crate) fn lcm_biguint(a: &BigUint, b: &BigUint) -> BigUint {
    if a.is_zero() || b.is_zero() {
        return BigUint::zero();
    }
    a / a.gcd(b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_ring_specs() {
        assert_eq!(CoefficientRing::parse("Z").unwrap(), CoefficientRing::integers());
        assert_eq!(CoefficientRing::parse("Q").unwrap(), CoefficientRing::rationals());
        assert_eq!(
            CoefficientRing::parse("Z[1/2,1/3]").unwrap(),
            CoefficientRing::localized([2, 3]).unwrap()
        );
        assert!(CoefficientRing::parse("Z[1/4]").is_err());
        assert!(CoefficientRing::parse("F7").is_err());
    }

    #[test]
    fn unit_split_and_units() {
        let ring = CoefficientRing::localized([2]).unwrap();
        let (u, v) = ring.unit_split(&BigUint::from(12u32));
        assert_eq!(u, BigUint::from(4u32));
        assert_eq!(v, BigUint::from(3u32));
        assert!(ring.is_unit(&BigUint::from(8u32)));
        assert!(!ring.is_unit(&BigUint::from(6u32)));
        assert!(CoefficientRing::rationals().is_unit(&BigUint::from(35u32)));
    }

    #[test]
    fn display_round_trips() {
        for spec in ["Z", "Q", "Z[1/2,1/5]"] {
            let ring = CoefficientRing::parse(spec).unwrap();
            assert_eq!(ring.to_string(), spec);
        }
    }

    #[test]
    fn factorization_basics() {
        let f = factorize(&BigUint::from(360u32));
        let rendered: Vec<(u64, u32)> =
            f.iter().map(|(p, e)| (p.try_into().unwrap(), *e)).collect();
        assert_eq!(rendered, vec![(2, 3), (3, 2), (5, 1)]);
        assert!(factorize(&BigUint::one()).is_empty());
        assert_eq!(pure_prime_power(&BigUint::from(8u32), 2), Some(3));
        assert_eq!(pure_prime_power(&BigUint::from(12u32), 2), None);
        assert_eq!(pure_prime_power(&BigUint::one(), 7), Some(0));
    }
}
