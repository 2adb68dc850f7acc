//! From defining polynomial to arithmetic: the Dedekind index criterion,
//! splitting patterns, and ramified-prime sets with per-prime data.

use super::modp::{factor_mod_p, fp_from_int, fp_gcd, fp_to_int};
use super::poly::IntPoly;
use super::zfactor::is_irreducible;
use crate::arith::is_prime;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// A multiset of (ramification index, inertial degree) pairs describing
/// how a prime splits in the field cut out by a polynomial; kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplittingPattern {
    pairs: Vec<(u64, u64)>,
}

impl SplittingPattern {
    pub fn new(mut pairs: Vec<(u64, u64)>) -> Self {
        pairs.sort_unstable_by(|a, b| b.cmp(a));
        SplittingPattern { pairs }
    }

    pub fn pairs(&self) -> &[(u64, u64)] {
        &self.pairs
    }

    /// Sum of `e * f` over the pattern (the polynomial degree).
    pub fn total(&self) -> u64 {
        self.pairs.iter().map(|&(e, f)| e * f).sum()
    }

    pub fn max_e(&self) -> u64 {
        self.pairs.iter().map(|&(e, _)| e).max().unwrap_or(0)
    }

    pub fn is_unramified(&self) -> bool {
        self.pairs.iter().all(|&(e, _)| e == 1)
    }
}

impl std::fmt::Display for SplittingPattern {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .pairs
            .iter()
            .map(|&(e, fd)| format!("({e},{fd})"))
            .collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// Outcome of a splitting-pattern request: either the exact pattern read
/// off a Dedekind-certified factorization, or an index obstruction (never
/// a possibly-wrong pattern).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum PatternOutcome {
    Pattern(SplittingPattern),
    IndexObstruction,
}

/// Dedekind's criterion: true exactly when `p` does not divide the index
/// `[O_K : Z[theta]]`, in which case the mod-`p` factorization gives the
/// exact splitting data.  Requires `f` monic and irreducible.
pub fn dedekind_index_test(f: &IntPoly, p: u64) -> Result<bool> {
    if !f.is_monic() {
        return Err(Error::invalid("Dedekind test expects a monic polynomial"));
    }
    if !is_irreducible(f)? {
        return Err(Error::invalid("Dedekind test expects an irreducible polynomial"));
    }
    dedekind_unchecked(f, p)
}

/// The criterion itself, preconditions assumed.
pub(crate) fn dedekind_unchecked(f: &IntPoly, p: u64) -> Result<bool> {
    if !is_prime(p) {
        return Err(Error::invalid(format!("{p} is not prime")));
    }
    let factors = factor_mod_p(f, p)?;
    // g1 = product of distinct factors, h1 = f / g1 mod p
    let g1 = factors
        .iter()
        .fold(IntPoly::from_i64(&[1]), |acc, (g, _)| {
            fp_to_int(&fp_from_int(&acc.mul(g), p))
        });
    let h1 = factors
        .iter()
        .fold(IntPoly::from_i64(&[1]), |acc, (g, m)| {
            let mut part = acc;
            for _ in 1..*m {
                part = fp_to_int(&fp_from_int(&part.mul(g), p));
            }
            part
        });
    // T = (g1 h1 - f)/p over the integers
    let prod = g1.mul(&h1);
    let diff = prod.sub(f);
    let t = IntPoly::new(
        diff.coeffs()
            .iter()
            .map(|c| {
                debug_assert!((c % BigInt::from(p)).is_zero());
                c / BigInt::from(p)
            })
            .collect(),
    );
    let fp_t = fp_from_int(&t, p);
    let fp_g1 = fp_from_int(&g1, p);
    let fp_h1 = fp_from_int(&h1, p);
    let shared = fp_gcd(&fp_gcd(&fp_t, &fp_g1, p), &fp_h1, p);
    Ok(shared.len() <= 1)
}

/// Splitting pattern of `p` in the field of a monic irreducible `f`: the
/// (e, f) multiset from a Dedekind-certified factorization of `f` or of a
/// shifted generator `f(x+c)`, `c = 1..16`; otherwise an index
/// obstruction.
pub fn splitting_pattern(f: &IntPoly, p: u64) -> Result<PatternOutcome> {
    if !f.is_monic() {
        return Err(Error::invalid("splitting pattern expects a monic polynomial"));
    }
    if !is_irreducible(f)? {
        return Err(Error::invalid(
            "splitting pattern expects an irreducible polynomial",
        ));
    }
    splitting_pattern_unchecked(f, p)
}

pub(crate) fn splitting_pattern_unchecked(f: &IntPoly, p: u64) -> Result<PatternOutcome> {
    for c in 0..=16i64 {
        let gen = if c == 0 { f.clone() } else { f.shift(c) };
        if dedekind_unchecked(&gen, p)? {
            let factors = factor_mod_p(&gen, p)?;
            let pairs = factors
                .iter()
                .map(|(g, m)| (*m as u64, g.degree() as u64))
                .collect();
            return Ok(PatternOutcome::Pattern(SplittingPattern::new(pairs)));
        }
    }
    Ok(PatternOutcome::IndexObstruction)
}

/// A ramified prime with its verified splitting pattern.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamifiedPrime {
    pub p: u64,
    pub pattern: SplittingPattern,
}

/// Ramified primes of the field of a monic irreducible polynomial: the
/// discriminant primes whose certified pattern shows some `e > 1`.
/// Primes with an all-`e = 1` pattern are index-only divisors and are
/// excluded; quadratic fields resolve index obstructions through the
/// field-discriminant formula.  `hint_primes` are divided out of the
/// discriminant first (the corpus supplies its claimed primes).
pub fn ramified_primes(f: &IntPoly, hint_primes: &[u64]) -> Result<Vec<RamifiedPrime>> {
    if !f.is_monic() {
        return Err(Error::invalid("ramified_primes expects a monic polynomial"));
    }
    if !is_irreducible(f)? {
        return Err(Error::invalid("ramified_primes expects an irreducible polynomial"));
    }
    let disc = f.discriminant()?;
    let factors = factor_bigint(&disc, hint_primes)?;
    let mut out = Vec::new();
    for (p, _) in factors {
        match splitting_pattern_unchecked(f, p)? {
            PatternOutcome::Pattern(pat) => {
                if !pat.is_unramified() {
                    out.push(RamifiedPrime { p, pattern: pat });
                }
            }
            PatternOutcome::IndexObstruction => {
                if f.degree() == 2 {
                    if let Some(rp) = quadratic_resolution(f, p)? {
                        out.push(rp);
                    }
                } else {
                    match super::order::p_splitting_via_maximal_order(f, p)? {
                        Some(pairs) => {
                            let pat = SplittingPattern::new(pairs);
                            if !pat.is_unramified() {
                                out.push(RamifiedPrime { p, pattern: pat });
                            }
                        }
                        None => {
                            return Err(Error::PartialResult(format!(
                                "index obstruction at {p}: local invariants do not pin a pattern"
                            )));
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Quadratic fields have a closed-form field discriminant; use it to
/// decide ramification when the polynomial index blocks Dedekind.
fn quadratic_resolution(f: &IntPoly, p: u64) -> Result<Option<RamifiedPrime>> {
    let disc = f.discriminant()?;
    let d0 = squarefree_part(&disc)?;
    let field_disc = if (&d0 % BigInt::from(4)) == BigInt::from(1)
        || (&d0 % BigInt::from(4)) == BigInt::from(-3)
    {
        d0.clone()
    } else {
        &d0 * 4
    };
    if (&field_disc % BigInt::from(p)).is_zero() {
        Ok(Some(RamifiedPrime {
            p,
            pattern: SplittingPattern::new(vec![(2, 1)]),
        }))
    } else {
        Ok(None)
    }
}

fn squarefree_part(n: &BigInt) -> Result<BigInt> {
    let factors = factor_bigint(n, &[])?;
    let mut out = n.signum();
    for (p, e) in factors {
        if e % 2 == 1 {
            out *= BigInt::from(p);
        }
    }
    Ok(out)
}

/// Factors a discriminant-sized integer: hint primes first, then trial
/// division up to 10^7, then a primality check on the cofactor.  An
/// unresolved cofactor is a partial-result error naming it.
pub fn factor_bigint(n: &BigInt, hint_primes: &[u64]) -> Result<Vec<(u64, u32)>> {
    if n.is_zero() {
        return Err(Error::invalid("cannot factor zero"));
    }
    let mut rest = n.abs();
    let mut out: Vec<(u64, u32)> = Vec::new();
    let push = |p: u64, e: u32, out: &mut Vec<(u64, u32)>| {
        if e > 0 {
            match out.iter_mut().find(|(q, _)| *q == p) {
                Some((_, old)) => *old += e,
                None => out.push((p, e)),
            }
        }
    };
    let divide_out = |rest: &mut BigInt, p: u64| -> u32 {
        let pb = BigInt::from(p);
        let mut e = 0;
        while (&*rest % &pb).is_zero() {
            *rest /= &pb;
            e += 1;
        }
        e
    };
    for &p in hint_primes {
        if p >= 2 && is_prime(p) {
            let e = divide_out(&mut rest, p);
            push(p, e, &mut out);
        }
    }
    // 2, 3, then a 6k±1 wheel up to 10^7
    let one = BigInt::from(1);
    for p in [2u64, 3] {
        let e = divide_out(&mut rest, p);
        push(p, e, &mut out);
    }
    let mut d = 5u64;
    let cap = 10_000_000u64;
    while rest > one && d <= cap {
        // cheap cofactor closers
        if let Some(r) = rest.to_u64() {
            if is_prime(r) {
                push(r, 1, &mut out);
                rest = one.clone();
                break;
            }
        }
        if BigInt::from(d) * BigInt::from(d) > rest {
            break;
        }
        for cand in [d, d + 2] {
            let e = divide_out(&mut rest, cand);
            push(cand, e, &mut out);
        }
        d += 6;
    }
    if rest > one {
        if let Some(r) = rest.to_u64() {
            if is_prime(r) {
                push(r, 1, &mut out);
                rest = one.clone();
            }
        }
    }
    if rest > one {
        // perfect square of a large prime still resolves
        let root = rest.sqrt();
        if &root * &root == rest {
            if let Some(r) = root.to_u64() {
                if is_prime(r) {
                    push(r, 2, &mut out);
                    rest = one.clone();
                }
            }
        }
    }
    if rest > one {
        return Err(Error::PartialResult(format!(
            "unresolved discriminant cofactor {rest}"
        )));
    }
    out.sort_unstable();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn dedekind_examples() {
        // x^2 - 5 at 2: the index is even, criterion fails
        assert!(!dedekind_index_test(&poly(&[-5, 0, 1]), 2).unwrap());
        // x^4 - x - 1 at 283: squarefree discriminant, passes
        assert!(dedekind_index_test(&poly(&[-1, -1, 0, 0, 1]), 283).unwrap());
        // x^2 + 1 at 5: 5 does not divide disc = -4
        assert!(dedekind_index_test(&poly(&[1, 0, 1]), 5).unwrap());
        // reducible input is rejected
        assert!(dedekind_index_test(&poly(&[1, 2, 1]), 3).is_err());
    }

    #[test]
    fn pattern_examples() {
        // x^4 - x - 1 at 283: one doubled linear place, two more linear
        let out = splitting_pattern(&poly(&[-1, -1, 0, 0, 1]), 283).unwrap();
        let PatternOutcome::Pattern(pat) = out else {
            panic!("expected a pattern")
        };
        assert_eq!(pat.pairs(), &[(2, 1), (1, 1), (1, 1)]);
        assert_eq!(pat.total(), 4);

        // x^2 + 1 at 7: inert
        let out = splitting_pattern(&poly(&[1, 0, 1]), 7).unwrap();
        let PatternOutcome::Pattern(pat) = out else {
            panic!("expected a pattern")
        };
        assert_eq!(pat.pairs(), &[(1, 2)]);

        // x^2 - 5 at 2: obstruction survives every shift
        let out = splitting_pattern(&poly(&[-5, 0, 1]), 2).unwrap();
        assert_eq!(out, PatternOutcome::IndexObstruction);
    }

    #[test]
    fn pattern_total_always_matches_degree() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(5150);
        let mut done = 0;
        while done < 60 {
            let deg = rng.gen_range(2..=6usize);
            let mut c: Vec<i64> = (0..deg).map(|_| rng.gen_range(-20..20)).collect();
            c.push(1);
            let f = poly(&c);
            if !is_irreducible(&f).unwrap() {
                continue;
            }
            let p = [3u64, 5, 7, 11, 13, 101][rng.gen_range(0..6)];
            if let PatternOutcome::Pattern(pat) = splitting_pattern(&f, p).unwrap() {
                assert_eq!(pat.total(), deg as u64);
                done += 1;
            }
        }
    }

    #[test]
    fn ramified_examples() {
        // x^4 - x - 1: single ramified prime 283
        let ram = ramified_primes(&poly(&[-1, -1, 0, 0, 1]), &[]).unwrap();
        assert_eq!(ram.len(), 1);
        assert_eq!(ram[0].p, 283);

        // x^2 - 5: only 5 (2 is an index artifact of the order Z[sqrt 5])
        let ram = ramified_primes(&poly(&[-5, 0, 1]), &[]).unwrap();
        assert_eq!(ram.iter().map(|r| r.p).collect::<Vec<_>>(), vec![5]);

        // x^2 - 3: both 2 and 3 ramify (field disc 12)
        let ram = ramified_primes(&poly(&[-3, 0, 1]), &[]).unwrap();
        assert_eq!(ram.iter().map(|r| r.p).collect::<Vec<_>>(), vec![2, 3]);
    }

    #[test]
    fn factor_bigint_paths() {
        let f = factor_bigint(&BigInt::from(-2 * 2 * 3 * 6971), &[6971]).unwrap();
        assert_eq!(f, vec![(2, 2), (3, 1), (6971, 1)]);
        // large prime cofactor via primality
        let big = BigInt::from(1_000_000_007u64) * 12;
        let f = factor_bigint(&big, &[]).unwrap();
        assert!(f.contains(&(1_000_000_007, 1)));
        // square of a large prime
        let sq = BigInt::from(1_000_000_007u64) * BigInt::from(1_000_000_007u64);
        let f = factor_bigint(&sq, &[]).unwrap();
        assert_eq!(f, vec![(1_000_000_007, 2)]);
    }
}
