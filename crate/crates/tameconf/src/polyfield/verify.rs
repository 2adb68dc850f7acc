//! Verification of one table claim: a polynomial, its claimed ramified
//! primes, and the claimed per-prime splitting data.

use super::poly::IntPoly;
use super::split::{ramified_primes, SplittingPattern};
use super::zfactor::is_irreducible;
use crate::arith;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// Claimed data for one ramified prime of a table row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimedPrime {
    pub p: u64,
    /// Group-level ramification index (the order of the inertia group).
    pub e: u64,
    /// Group-level inertial degree (the index of inertia in the
    /// decomposition group).
    pub f: u64,
    /// Splitting pattern in the field generated by the table polynomial.
    pub pattern: SplittingPattern,
}

/// A verifiable table claim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableClaim {
    pub poly: IntPoly,
    pub primes: Vec<ClaimedPrime>,
}

/// Outcome of verifying one claim.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum TableReport {
    Pass,
    Fail(String),
    /// The pattern at this prime could not be certified through the
    /// polynomial order; nothing is asserted either way.
    IndexObstruction(u64),
}

impl TableReport {
    pub fn passed(&self) -> bool {
        matches!(self, TableReport::Pass)
    }
}

/// Verifies a claim: the computed ramified-prime set must equal the
/// claimed set, each claimed pattern must match the certified pattern,
/// and every claimed ramification index must be coprime to its prime.
pub fn verify_table_entry(claim: &TableClaim) -> Result<TableReport> {
    if !claim.poly.is_monic() {
        return Err(Error::invalid("table polynomial must be monic"));
    }
    if !is_irreducible(&claim.poly)? {
        return Err(Error::invalid("table polynomial must be irreducible"));
    }
    for cp in &claim.primes {
        if arith::gcd(cp.e, cp.p) != 1 {
            return Ok(TableReport::Fail(format!(
                "claimed e = {} is not coprime to p = {} (wild ramification)",
                cp.e, cp.p
            )));
        }
        for &(e, _) in cp.pattern.pairs() {
            if arith::gcd(e, cp.p) != 1 {
                return Ok(TableReport::Fail(format!(
                    "pattern at {} contains e = {e} divisible by the prime",
                    cp.p
                )));
            }
        }
        if cp.pattern.total() != claim.poly.degree() as u64 {
            return Ok(TableReport::Fail(format!(
                "pattern at {} sums to {}, polynomial degree is {}",
                cp.p,
                cp.pattern.total(),
                claim.poly.degree()
            )));
        }
    }
    let hints: Vec<u64> = claim.primes.iter().map(|cp| cp.p).collect();
    let computed = match ramified_primes(&claim.poly, &hints) {
        Ok(r) => r,
        Err(Error::PartialResult(detail)) => {
            // pull the prime out of the message when it names one
            let p = detail
                .split_whitespace()
                .find_map(|tok| tok.parse::<u64>().ok())
                .unwrap_or(0);
            return Ok(TableReport::IndexObstruction(p));
        }
        Err(e) => return Err(e),
    };
    let mut computed_set: Vec<u64> = computed.iter().map(|r| r.p).collect();
    computed_set.sort_unstable();
    let mut claimed_set = hints.clone();
    claimed_set.sort_unstable();
    if computed_set != claimed_set {
        return Ok(TableReport::Fail(format!(
            "ramified set {computed_set:?} does not match claimed {claimed_set:?}"
        )));
    }
    for cp in &claim.primes {
        let got = &computed
            .iter()
            .find(|r| r.p == cp.p)
            .expect("sets already compared")
            .pattern;
        if got != &cp.pattern {
            return Ok(TableReport::Fail(format!(
                "pattern at {}: computed {got}, claimed {}",
                cp.p, cp.pattern
            )));
        }
    }
    Ok(TableReport::Pass)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quartic_row_passes() {
        let claim = TableClaim {
            poly: IntPoly::from_i64(&[-1, -1, 0, 0, 1]),
            primes: vec![ClaimedPrime {
                p: 283,
                e: 2,
                f: 1,
                pattern: SplittingPattern::new(vec![(2, 1), (1, 1), (1, 1)]),
            }],
        };
        assert_eq!(verify_table_entry(&claim).unwrap(), TableReport::Pass);
    }

    #[test]
    fn corrupted_rows_fail() {
        // wrong prime: 281 does not divide the discriminant
        let claim = TableClaim {
            poly: IntPoly::from_i64(&[-1, -1, 0, 0, 1]),
            primes: vec![ClaimedPrime {
                p: 281,
                e: 2,
                f: 1,
                pattern: SplittingPattern::new(vec![(2, 1), (1, 1), (1, 1)]),
            }],
        };
        assert!(matches!(
            verify_table_entry(&claim).unwrap(),
            TableReport::Fail(_)
        ));
        // wrong pattern
        let claim = TableClaim {
            poly: IntPoly::from_i64(&[-1, -1, 0, 0, 1]),
            primes: vec![ClaimedPrime {
                p: 283,
                e: 2,
                f: 1,
                pattern: SplittingPattern::new(vec![(2, 1), (1, 2)]),
            }],
        };
        assert!(matches!(
            verify_table_entry(&claim).unwrap(),
            TableReport::Fail(_)
        ));
        // wild claim e = p
        let claim = TableClaim {
            poly: IntPoly::from_i64(&[-1, -1, 0, 0, 1]),
            primes: vec![ClaimedPrime {
                p: 283,
                e: 283,
                f: 1,
                pattern: SplittingPattern::new(vec![(283, 1)]),
            }],
        };
        assert!(matches!(
            verify_table_entry(&claim).unwrap(),
            TableReport::Fail(_)
        ));
    }
}
